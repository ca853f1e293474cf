use std::fmt;

use crate::error::{Error, Result};

/// A power product stored as a dense exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    /// The constant monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    fn check_len(&self, other: &Monomial) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::InvalidRing {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    /// Componentwise maximum.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.lcm_unchecked(other))
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides_unchecked(other))
    }

    /// Exact quotient `self / divisor`.
    pub fn div(&self, divisor: &Monomial) -> Result<Monomial> {
        self.check_len(divisor)?;
        if !divisor.divides_unchecked(self) {
            return Err(Error::NotDivisible);
        }
        Ok(self.div_unchecked(divisor))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_len(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub(crate) fn div_unchecked(&self, divisor: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&divisor.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}
