//! Truncated formal series: over the trace monoid of a graph, and over a
//! single variable after projection.

mod trace;
mod univariate;

pub use trace::TraceSeries;
pub use univariate::{Substitution, UnivariateSeries};
