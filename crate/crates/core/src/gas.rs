//! Hard-particle lattice gas: particles sit on vertices, neighbors exclude
//! each other, and a configuration with `n` particles has weight `t^n`
//! where `t` is the activity.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Float, ToPrimitive};

use crate::error::{Error, Result};
use crate::graph::CommutationGraph;
use crate::heap::{enumerate_heaps, HeapClass};
use crate::scalar::Scalar;
use crate::series::{TraceSeries, UnivariateSeries};

/// Partition function and mean particle count of a finite graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GasObservables<S> {
    pub partition: UnivariateSeries<S>,
    pub mean_count: UnivariateSeries<S>,
}

impl<S: Scalar> GasObservables<S> {
    pub fn new(graph: &Arc<CommutationGraph>, degree: usize) -> Self {
        Self { partition: partition_function(graph, degree), mean_count: mean_particles_direct(graph, degree) }
    }
}

/// `Z(t) = Σ α_n t^n` with `α_n` the number of stable sets of size `n`.
pub fn partition_function<S: Scalar>(graph: &Arc<CommutationGraph>, degree: usize) -> UnivariateSeries<S> {
    TraceSeries::<S>::configurations(graph, degree, false).project()
}

/// `t Z'(t) / Z(t)`.
pub fn mean_particles_direct<S: Scalar>(graph: &Arc<CommutationGraph>, degree: usize) -> UnivariateSeries<S> {
    let z = partition_function::<S>(graph, degree);
    z.euler_derivative().div(&z).expect("Z(0) = 1")
}

/// `Σ (-1)^(n-1) p_n t^n` with `p_n` the number of pyramids of size `n`.
pub fn mean_particles_pyramids<S: Scalar>(graph: &Arc<CommutationGraph>, degree: usize) -> UnivariateSeries<S> {
    let mut counts = vec![0usize; degree + 1];
    for h in enumerate_heaps(graph, degree, HeapClass::PYRAMIDS) {
        counts[h.size()] += 1;
    }
    UnivariateSeries::from_fn(degree, |n| {
        let p = S::from_count(counts[n]);
        if n % 2 == 0 {
            -p
        } else {
            p
        }
    })
}

/// Density per site on the infinite line, `Σ (-1)^(n-1) C(2n, n)/2 t^n`.
pub fn linear_density(degree: usize) -> UnivariateSeries<BigRational> {
    UnivariateSeries::from_fn(degree, |n| {
        if n == 0 {
            return BigRational::from_integer(BigInt::from(0));
        }
        let c = BigInt::from(binomial(BigUint::from(2 * n), BigUint::from(n)) / 2u32);
        BigRational::from_integer(if n % 2 == 1 { c } else { -c })
    })
}

/// `(1 - 1/sqrt(1 + 4t)) / 2`; defined for `1 + 4t > 0`.
pub fn evaluate_density<F: Float>(t: F) -> Result<F> {
    let four = F::from(4).expect("small constant");
    let base = F::one() + four * t;
    if base.is_nan() || base <= F::zero() {
        return Err(Error::Domain("density needs 1 + 4t > 0".into()));
    }
    let half = F::from(0.5).expect("small constant");
    Ok(half * (F::one() - F::one() / base.sqrt()))
}

/// Density at an exact activity, evaluated in double precision.
pub fn evaluate_density_exact(t: &BigRational) -> Result<f64> {
    let base = BigRational::from_integer(BigInt::from(1)) + t * BigInt::from(4);
    if base <= BigRational::from_integer(BigInt::from(0)) {
        return Err(Error::Domain("density needs 1 + 4t > 0".into()));
    }
    let x = base.to_f64().ok_or_else(|| Error::Domain("activity out of double range".into()))?;
    Ok(0.5 * (1.0 - 1.0 / x.sqrt()))
}
