//! Frobenius exponents, bracket powers, ordinary powers and the two
//! rounding conventions `⌊t(q−1)⌋` and `⌈tq⌉`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial_ideal as mono;
use crate::poly::Polynomial;

/// Largest supported `q = p^e`.
pub const MAX_Q: u32 = 1 << 20;

/// Cap on the number of generator products formed by `ideal_power` off the
/// monomial path.
pub const MAX_POWER_PRODUCTS: u64 = 1_000_000;

/// `q = p^e` with `q <= 2^20`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrobExponent {
    p: u32,
    e: u32,
    q: u32,
}

impl FrobExponent {
    pub fn new(p: u32, e: u32) -> Result<Self> {
        let mut q: u64 = 1;
        for _ in 0..e {
            q *= p as u64;
            if q > MAX_Q as u64 {
                return Err(Error::InvalidFrobenius { p, q });
            }
        }
        Ok(FrobExponent { p, e, q: q as u32 })
    }

    /// Accept `q` only if it is a power of `p`.
    pub fn from_q(p: u32, q: u64) -> Result<Self> {
        let bad = Error::InvalidFrobenius { p, q };
        if p < 2 || q == 0 || q > MAX_Q as u64 {
            return Err(bad);
        }
        let (mut r, mut e) = (q, 0);
        while r % p as u64 == 0 {
            r /= p as u64;
            e += 1;
        }
        if r != 1 {
            return Err(bad);
        }
        Ok(FrobExponent { p, e, q: q as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `p·q`, if still within the cap.
    pub fn next(&self) -> Result<Self> {
        FrobExponent::new(self.p, self.e + 1)
    }
}

/// A positive rational `num/den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalExponent {
    num: u64,
    den: u64,
}

impl RationalExponent {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 || num == 0 {
            return Err(Error::InvalidExponent(format!("{num}/{den} is not a positive rational")));
        }
        let g = num.gcd(&den);
        Ok(RationalExponent {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(n: u64) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// `⌊t(q−1)⌋` in integer arithmetic.
    pub fn floor_exp(&self, q: FrobExponent) -> u64 {
        (self.num as u128 * (q.q as u128 - 1) / self.den as u128) as u64
    }

    /// `⌈tq⌉` in integer arithmetic.
    pub fn ceil_exp(&self, q: FrobExponent) -> u64 {
        (self.num as u128 * q.q as u128).div_ceil(self.den as u128) as u64
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }
}

impl fmt::Display for RationalExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl core::str::FromStr for RationalExponent {
    type Err = Error;

    /// Parse `"num/den"` or a bare integer.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidExponent(String::from(s));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num: u64 = n.parse().map_err(|_| bad())?;
        let den: u64 = d.parse().map_err(|_| bad())?;
        RationalExponent::new(num, den).map_err(|_| bad())
    }
}

pub fn floor_exp(t: RationalExponent, q: FrobExponent) -> u64 {
    t.floor_exp(q)
}

pub fn ceil_exp(t: RationalExponent, q: FrobExponent) -> u64 {
    t.ceil_exp(q)
}

fn check_characteristic(ideal: &Ideal, q: FrobExponent) -> Result<()> {
    if ideal.ring().characteristic() != q.p {
        return Err(Error::Precondition(format!(
            "q = {} is not a power of the characteristic {}",
            q.q,
            ideal.ring().characteristic()
        )));
    }
    Ok(())
}

/// `I^[q]`, generated by the `q`-th powers of the generators of `I`.
pub fn bracket_power(ideal: &Ideal, q: FrobExponent) -> Result<Ideal> {
    check_characteristic(ideal, q)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.frobenius_power(q.q))
        .collect::<Result<Vec<_>>>()?;
    Ok(Ideal::new(ideal.ring(), gens)?.with_config(*ideal.config()))
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `I^n`; `I^0 = (1)`. Minimal generators on the monomial path, the naive
/// list of all degree-`n` generator products otherwise.
pub fn ideal_power(ideal: &Ideal, n: u64) -> Result<Ideal> {
    let ring = ideal.ring();
    if n == 0 {
        return Ok(Ideal::unit(ring).with_config(*ideal.config()));
    }
    if ideal.is_zero() || n == 1 {
        return Ok(ideal.clone());
    }
    if let Some(gens) = ideal.monomial_generators() {
        let max = gens.iter().map(|m| m.max_exponent() as u64).max().unwrap_or(0);
        if max.saturating_mul(n) > u32::MAX as u64 {
            return Err(Error::ExponentOverflow);
        }
        let pow = mono::power(&gens, n, ring.nvars());
        return Ok(Ideal::from_monomials(ring, pow).with_config(*ideal.config()));
    }
    let g = ideal.generators().len() as u64;
    match binomial(g + n - 1, n) {
        Some(count) if count <= MAX_POWER_PRODUCTS => {}
        count => {
            let count = count.map_or("over 2^64".into(), |c| c.to_string());
            return Err(Error::Resource(format!(
                "power {n} of a {g}-generator ideal needs {count} products (cap {MAX_POWER_PRODUCTS})"
            )));
        }
    }
    let gens = ideal.generators();
    let max = gens
        .iter()
        .flat_map(|f| f.terms().iter().map(|(m, _)| m.max_exponent() as u64))
        .max()
        .unwrap_or(0);
    if max.saturating_mul(n) > u32::MAX as u64 {
        return Err(Error::ExponentOverflow);
    }
    // multisets of generator indices as nondecreasing sequences
    let mut level: Vec<(usize, Polynomial)> = gens.iter().cloned().enumerate().collect();
    for _ in 1..n {
        let mut next = Vec::with_capacity(level.len() * gens.len());
        for (last, p) in &level {
            for (j, g) in gens.iter().enumerate().skip(*last) {
                next.push((j, p.try_mul(g)?));
            }
        }
        level = next;
    }
    Ok(Ideal::new(ring, level.into_iter().map(|(_, p)| p))?.with_config(*ideal.config()))
}

/// `(I^[q] : I)`. Principal ideals use `(f^{q−1})` directly.
pub fn colon_bracket(ideal: &Ideal, q: FrobExponent) -> Result<Ideal> {
    check_characteristic(ideal, q)?;
    if ideal.is_zero() {
        return Err(Error::Precondition("(I^[q] : I) needs a nonzero ideal".into()));
    }
    if ideal.is_unit()? {
        return Ok(Ideal::unit(ideal.ring()).with_config(*ideal.config()));
    }
    if ideal.is_principal() {
        let f = ideal.generators()[0].pow(q.q as u64 - 1)?;
        return Ok(Ideal::principal(f).with_config(*ideal.config()));
    }
    bracket_power(ideal, q)?.colon(ideal)
}

/// Membership in `m^[q] = (x_1^q, ..., x_n^q)`: every term has an exponent
/// of at least `q`.
pub fn in_bracket_m(f: &Polynomial, q: FrobExponent) -> bool {
    f.terms().iter().all(|(m, _)| m.has_exponent_at_least(q.q as u64))
}

/// First term (in term order) outside `m^[q]`, if any.
pub fn term_outside_bracket_m(f: &Polynomial, q: FrobExponent) -> Option<&(crate::Monomial, u32)> {
    f.terms().iter().find(|(m, _)| !m.has_exponent_at_least(q.q as u64))
}

impl fmt::Display for FrobExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

impl FrobExponent {
    pub fn describe(&self) -> String {
        if self.e == 1 {
            self.p.to_string()
        } else {
            format!("{}^{}", self.p, self.e)
        }
    }
}
