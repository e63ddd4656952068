use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Power series in one variable truncated after `t^degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct UnivariateSeries<S> {
    coeffs: Vec<S>,
}

/// The two substitutions relating strict heaps and all heaps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Substitution {
    /// `t -> t/(1-t) = t + t^2 + t^3 + ...`
    Geometric,
    /// `t -> t/(1+t) = t - t^2 + t^3 - ...`
    Alternating,
}

impl<S: Scalar> UnivariateSeries<S> {
    /// Series with the given coefficients; the truncation degree is
    /// `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<S>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Parse("a series needs at least the constant coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    /// Series whose coefficient of `t^n` is `f(n)`.
    pub fn from_fn(degree: usize, mut f: impl FnMut(usize) -> S) -> Self {
        Self { coeffs: (0..=degree).map(&mut f).collect() }
    }

    pub fn zero(degree: usize) -> Self {
        Self::from_fn(degree, |_| S::zero())
    }

    pub fn one(degree: usize) -> Self {
        Self::constant(degree, S::one())
    }

    pub fn constant(degree: usize, c: S) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = c;
        s
    }

    /// `t` itself.
    pub fn variable(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        if degree >= 1 {
            s.coeffs[1] = S::one();
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<S> {
        self.coeffs
    }

    pub fn coeff(&self, n: usize) -> S {
        self.coeffs.get(n).cloned().unwrap_or_else(S::zero)
    }

    /// Drops every term above `degree`, or pads with zeros.
    pub fn truncate(&self, degree: usize) -> Self {
        Self::from_fn(degree, |n| self.coeff(n))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.degree() == other.degree() {
            Ok(())
        } else {
            Err(Error::TruncationMismatch(self.degree(), other.degree()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_fn(self.degree(), |n| self.coeffs[n].clone() + other.coeffs[n].clone()))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_fn(self.degree(), |n| self.coeffs[n].clone() - other.coeffs[n].clone()))
    }

    pub fn neg(&self) -> Self {
        Self::from_fn(self.degree(), |n| -self.coeffs[n].clone())
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_fn(self.degree(), |n| self.coeffs[n].clone() * c.clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let d = self.degree();
        let mut out = vec![S::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=d - i].iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let mut out: Vec<S> = Vec::with_capacity(self.coeffs.len());
        out.push(S::one() / c0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = S::zero();
            for k in 1..=n {
                acc = acc + self.coeffs[k].clone() * out[n - k].clone();
            }
            out.push(-acc / c0.clone());
        }
        Ok(Self { coeffs: out })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inverse()?)
    }

    /// Square root of a series with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::Domain("square root needs constant term 1".into()));
        }
        let two = S::from_count(2);
        let mut out: Vec<S> = vec![S::one()];
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[n].clone();
            for k in 1..n {
                acc = acc - out[k].clone() * out[n - k].clone();
            }
            out.push(acc / two.clone());
        }
        Ok(Self { coeffs: out })
    }

    /// `self(inner(t))`; `inner` must have no constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::Domain("inner series of a composition must vanish at 0".into()));
        }
        let d = self.degree();
        let mut acc = Self::constant(d, self.coeffs[d].clone());
        for c in self.coeffs[..d].iter().rev() {
            acc = acc.mul_unchecked(inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    pub fn substitute(&self, mode: Substitution) -> Self {
        let sign = match mode {
            Substitution::Geometric => S::one(),
            Substitution::Alternating => -S::one(),
        };
        let mut power = S::one();
        let inner = Self::from_fn(self.degree(), |n| {
            if n == 0 {
                return S::zero();
            }
            let c = power.clone();
            power = power.clone() * sign.clone();
            c
        });
        self.compose(&inner).expect("same degree, no constant term")
    }

    /// `t d/dt`: multiplies the coefficient of `t^n` by `n`.
    pub fn euler_derivative(&self) -> Self {
        Self::from_fn(self.degree(), |n| self.coeffs[n].clone() * S::from_count(n))
    }

    /// Ordinary derivative, losing one degree of precision at the top.
    pub fn derivative(&self) -> Self {
        let d = self.degree();
        Self::from_fn(d, |n| if n < d { self.coeffs[n + 1].clone() * S::from_count(n + 1) } else { S::zero() })
    }

    /// `s(-t)`.
    pub fn reflect(&self) -> Self {
        Self::from_fn(self.degree(), |n| if n % 2 == 0 { self.coeffs[n].clone() } else { -self.coeffs[n].clone() })
    }

    /// Coefficients separated by single spaces.
    pub fn to_line(&self) -> String {
        self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl<S: Scalar> fmt::Display for UnivariateSeries<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_line())
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;

    type Q = UnivariateSeries<BigRational>;

    fn q(values: &[i64]) -> Q {
        Q::new(values.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect()).unwrap()
    }

    #[test]
    fn motzkin_to_catalan_by_substitution() {
        let motzkin = q(&[1, 1, 2, 4, 9, 21, 51, 127]);
        let shifted = q(&[0, 1, 1, 2, 4, 9, 21, 51]);
        let catalan_shifted = q(&[0, 1, 2, 5, 14, 42, 132, 429]);
        assert_eq!(shifted.substitute(Substitution::Geometric), catalan_shifted);
        assert_eq!(catalan_shifted.substitute(Substitution::Alternating), shifted);
        assert_eq!(motzkin.truncate(3), q(&[1, 1, 2, 4]));
    }

    #[test]
    fn inverse_and_sqrt() {
        let s = q(&[1, -3, 0, 0, 0]);
        assert_eq!(s.inverse().unwrap(), q(&[1, 3, 9, 27, 81]));
        let sq = q(&[1, 2, 1, 0, 0]);
        assert_eq!(sq.sqrt().unwrap(), q(&[1, 1, 0, 0, 0]));
        assert!(q(&[0, 1]).inverse().is_err());
        assert!(q(&[2, 1]).sqrt().is_err());
    }

    #[test]
    fn mixed_degrees_are_rejected() {
        assert_eq!(q(&[1, 1]).mul(&q(&[1])), Err(Error::TruncationMismatch(1, 0)));
    }

    #[test]
    fn constants_survive_substitution() {
        assert_eq!(q(&[7, 0, 0]).substitute(Substitution::Geometric), q(&[7, 0, 0]));
        assert_eq!(q(&[1, 2, 3]).to_line(), "1 2 3");
    }

    #[test]
    fn floats_work_too() {
        let s = UnivariateSeries::<f64>::new(vec![1.0, -1.0, 0.0]).unwrap();
        assert_eq!(s.inverse().unwrap().coeffs(), &[1.0, 1.0, 1.0]);
    }
}
