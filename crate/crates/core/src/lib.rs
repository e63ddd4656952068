//! Heaps of pieces over commutation graphs, their generating series, Motzkin
//! paths, and the bijection between directed lattice animals and Motzkin
//! prefixes used for exact counting and uniform random generation.

pub mod animal;
pub mod error;
pub mod gas;
pub mod graph;
pub mod heap;
pub mod paths;
pub mod random;
pub mod render;
pub mod scalar;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Coloring, CommutationGraph};
pub use heap::{Cell, Heap};
pub use scalar::Scalar;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
pub type ExactSeries = series::UnivariateSeries<Rational>;
pub type ExactTraceSeries = series::TraceSeries<Rational>;
pub type FloatSeries = series::UnivariateSeries<f64>;
