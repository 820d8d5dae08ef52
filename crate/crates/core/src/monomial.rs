//! Exponent vectors.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A monomial `x_1^{a_1} ... x_n^{a_n}` stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(alloc::vec![0; nvars])
    }

    /// The `i`-th variable of an `nvars`-variable ring.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = alloc::vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn check_dims(&self, other: &Monomial) -> Result<()> {
        if self.0.len() != other.0.len() {
            return Err(Error::DimensionMismatch {
                left: self.0.len(),
                right: other.0.len(),
            });
        }
        Ok(())
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_dims(other)?;
        Ok(self.divides_unchecked(other))
    }

    #[inline]
    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_dims(other)?;
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// Product without overflow checks; callers bound exponents beforehand.
    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if self.0.len() != other.0.len() || !other.divides_unchecked(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// `self / gcd(self, other)`: the generator of the monomial colon `(self) : other`.
    pub fn quotient_by_gcd(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Raise to the `k`-th power (scale the exponent vector).
    pub fn pow(&self, k: u32) -> Result<Monomial> {
        self.0
            .iter()
            .map(|&e| e.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// True if some exponent is at least `q`, i.e. the monomial lies in `m^[q]`.
    #[inline]
    pub fn has_exponent_at_least(&self, q: u64) -> bool {
        self.0.iter().any(|&e| e as u64 >= q)
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }
}
