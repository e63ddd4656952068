use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Pow, Signed, Zero};

use super::{Animal, Lattice, Site, Source};
use crate::error::{Error, Result};
use crate::paths::prefix_height_distribution;
use crate::series::UnivariateSeries;

/// Largest size the growth oracle accepts.
pub fn enumeration_bound(lattice: Lattice) -> usize {
    match lattice {
        Lattice::Square => 12,
        Lattice::Triangular => 10,
    }
}

/// Every animal of size `n`, grown cell by cell from all admissible
/// sources, in sorted order.
pub fn enumerate_animals(n: usize, lattice: Lattice, source: Source) -> Result<Vec<Animal>> {
    let bound = enumeration_bound(lattice);
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // levels[s] holds the cell sets of size s.
    let mut levels: Vec<BTreeSet<Vec<Site>>> = vec![BTreeSet::new(); n + 1];
    match source {
        Source::Point => {
            levels[1].insert(vec![Site::new(0, 0)]);
        }
        Source::Compact => {
            for (k, level) in levels.iter_mut().enumerate().skip(1) {
                level.insert((0..k as i64).map(|i| Site::new(2 * i, 0)).collect());
            }
        }
    }
    for s in 1..n {
        let current = std::mem::take(&mut levels[s]);
        for cells in &current {
            for &c in cells {
                for next in Animal::successors(lattice, c) {
                    if cells.binary_search(&next).is_err() {
                        let mut grown = cells.clone();
                        let at = grown.binary_search(&next).unwrap_err();
                        grown.insert(at, next);
                        levels[s + 1].insert(grown);
                    }
                }
            }
        }
    }
    Ok(std::mem::take(&mut levels[n])
        .into_iter()
        .map(|cells| Animal::from_sorted_unchecked(lattice, source, cells))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountKind {
    PointSource,
    CompactSource,
    /// Point-source animals of right half-width zero.
    Equerre,
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn polynomial(degree: usize, coeffs: &[i64]) -> UnivariateSeries<BigRational> {
    UnivariateSeries::from_fn(degree, |k| rational(coeffs.get(k).copied().unwrap_or(0)))
}

fn to_count(q: &BigRational) -> BigUint {
    assert!(q.is_integer() && !q.is_negative(), "counts are natural numbers");
    q.to_integer().to_biguint().expect("non-negative")
}

/// Number of animals of size `n`, from closed-form generating functions.
pub fn animal_count(n: usize, lattice: Lattice, kind: CountKind) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    match (kind, lattice) {
        (CountKind::CompactSource, _) => BigUint::from(lattice.letters()).pow(n - 1),
        (CountKind::PointSource, Lattice::Triangular) => binomial(BigUint::from(2 * n), BigUint::from(n)) / 2u32,
        (CountKind::Equerre, Lattice::Triangular) => {
            binomial(BigUint::from(2 * n), BigUint::from(n)) / BigUint::from(n + 1)
        }
        (CountKind::PointSource, Lattice::Square) => {
            // (sqrt((1 + t) / (1 - 3t)) - 1) / 2
            let ratio = polynomial(n, &[1, 1]).div(&polynomial(n, &[1, -3])).expect("unit constant term");
            let root = ratio.sqrt().expect("constant term 1");
            to_count(&(root.coeff(n) / rational(2)))
        }
        (CountKind::Equerre, Lattice::Square) => {
            // (1 - t - sqrt((1 + t)(1 - 3t))) / (2t): coefficient of t^n is
            // minus half the coefficient of t^(n+1) in the root.
            let root = polynomial(n + 1, &[1, -2, -3]).sqrt().expect("constant term 1");
            to_count(&(-root.coeff(n + 1) / rational(2)))
        }
    }
}

/// Mean of `max fiber - min fiber` over point-source animals of size `n`:
/// `2 (r + 2)^(n - 1) / a_n - 2`.
pub fn average_width(n: usize, lattice: Lattice) -> BigRational {
    assert!(n >= 1, "animals have at least one cell");
    let total = BigInt::from(lattice.letters()).pow(n - 1);
    let count = BigInt::from(animal_count(n, lattice, CountKind::PointSource));
    BigRational::new(2 * total, count) - rational(2)
}

/// Mean final height of Motzkin prefixes of length `len`, by summing the
/// height distribution.
pub fn mean_prefix_height(len: usize, colors: usize) -> BigRational {
    let dist = prefix_height_distribution(len, colors);
    let total: BigUint = dist.iter().sum();
    let weighted: BigUint = dist.iter().enumerate().map(|(h, c)| c * BigUint::from(h)).sum();
    BigRational::new(BigInt::from(weighted), BigInt::from(total))
}
