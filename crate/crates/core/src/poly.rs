//! Sparse multivariate polynomials over `F_p`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{check_same, same_ring, Ring};

/// A polynomial as a list of `(monomial, coefficient)` pairs sorted strictly
/// descending under the ring's term order. Coefficients are nonzero
/// residues; the zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, c: i64) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), 1)
    }

    /// A single term `c * m`.
    pub fn term(ring: &Arc<Ring>, m: Monomial, c: i64) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial length must match the ring");
        let c = ring.field().from_i64(c);
        let terms = if c == 0 { Vec::new() } else { alloc::vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Build from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Monomial, i64)>,
    ) -> Result<Self> {
        let field = *ring.field();
        let mut raw = Vec::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::DimensionMismatch {
                    left: ring.nvars(),
                    right: m.nvars(),
                });
            }
            raw.push((m, field.from_i64(c)));
        }
        Ok(Self::normalize(ring, raw))
    }

    /// Sort descending and merge equal monomials.
    pub(crate) fn normalize(ring: &Arc<Ring>, mut raw: Vec<(Monomial, u32)>) -> Self {
        let order = ring.order();
        let field = *ring.field();
        raw.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut terms: Vec<(Monomial, u32)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match terms.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => terms.push((m, c)),
            }
        }
        terms.retain(|t| t.1 != 0);
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already sorted and nonzero; only checked in debug builds.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, u32)> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn lead(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> u32 {
        self.terms.first().map_or(0, |t| t.1)
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// No term of degree zero, i.e. the polynomial lies in `(x_1, ..., x_n)`.
    pub fn in_maximal_ideal(&self) -> bool {
        self.terms.iter().all(|t| !t.0.is_one())
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|t| order.cmp(m, &t.0))
            .map_or(0, |i| self.terms[i].1)
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        Ok(self.merge(other, 1, None))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let field = *self.ring.field();
        Ok(self.merge(other, field.neg(1), None))
    }

    /// `self + c * m * g` by a linear merge; `m = None` means `m = 1`.
    pub(crate) fn merge(&self, g: &Polynomial, c: u32, m: Option<&Monomial>) -> Polynomial {
        let field = *self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let shifted = |t: &(Monomial, u32)| -> (Monomial, u32) {
            let mono = match m {
                Some(m) => t.0.mul_unchecked(m),
                None => t.0.clone(),
            };
            (mono, field.mul(t.1, c))
        };
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(shifted).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match order.cmp(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = field.add(x.1, y.1);
                        if s != 0 {
                            out.push((y.0, s));
                        }
                    }
                },
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(*c))).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let field = *self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), field.mul(*d, c))).collect(),
        }
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(&(_, 1)) => self.clone(),
            Some(&(_, c)) => self.scale(self.ring.field().inv(c).expect("nonzero")),
        }
    }

    /// Multiply by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Result<Polynomial> {
        if m.nvars() != self.ring.nvars() {
            return Err(Error::DimensionMismatch {
                left: self.ring.nvars(),
                right: m.nvars(),
            });
        }
        let field = *self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, d)| Ok((t.checked_mul(m)?, field.mul(*d, c))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    fn max_exponents(&self) -> Vec<u64> {
        let mut out = alloc::vec![0u64; self.ring.nvars()];
        for (m, _) in &self.terms {
            for (o, &e) in out.iter_mut().zip(m.exponents()) {
                *o = (*o).max(e as u64);
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let a = self.max_exponents();
        let b = other.max_exponents();
        if a.iter().zip(&b).any(|(x, y)| x + y > u32::MAX as u64) {
            return Err(Error::ExponentOverflow);
        }
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            let field = *self.ring.field();
            return Polynomial::from_sorted(
                &self.ring,
                big.terms
                    .iter()
                    .map(|(t, d)| (t.mul_unchecked(m), field.mul(*c, *d)))
                    .collect(),
            );
        }
        let field = *self.ring.field();
        let mut raw = Vec::with_capacity(small.len() * big.len());
        for (m, c) in &small.terms {
            for (t, d) in &big.terms {
                raw.push((t.mul_unchecked(m), field.mul(*c, *d)));
            }
        }
        Polynomial::normalize(&self.ring, raw)
    }

    /// `self^n` by binary exponentiation; `f^0 = 1`.
    pub fn pow(&self, n: u64) -> Result<Polynomial> {
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if self.max_exponents().iter().any(|&e| e.saturating_mul(n) > u32::MAX as u64) {
            return Err(Error::ExponentOverflow);
        }
        let mut acc: Option<Polynomial> = None;
        let mut base = self.clone();
        let mut e = n;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul_unchecked(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul_unchecked(&base);
        }
        Ok(acc.expect("n > 0"))
    }

    /// The Frobenius image `f^q` for `q` a power of the characteristic:
    /// exponents scale by `q` and coefficients of `F_p` are fixed.
    pub(crate) fn frobenius_power(&self, q: u32) -> Result<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.pow(q)?, *c)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// Re-sort into a ring with the same field and variables but possibly
    /// a different order.
    pub fn to_ring(&self, ring: &Arc<Ring>) -> Result<Polynomial> {
        if ring.field() != self.ring.field() || ring.vars() != self.ring.vars() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::normalize(ring, self.terms.clone()))
    }

    /// Embed into `ring`, which has `extra` fresh variables prepended.
    pub(crate) fn embed_front(&self, ring: &Arc<Ring>, extra: usize) -> Polynomial {
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = alloc::vec![0u32; extra];
                e.extend_from_slice(m.exponents());
                (Monomial::new(e), *c)
            })
            .collect();
        Polynomial::normalize(ring, raw)
    }

    /// Drop the first `extra` variables, which must not occur.
    pub(crate) fn project_front(&self, ring: &Arc<Ring>, extra: usize) -> Polynomial {
        let raw = self
            .terms
            .iter()
            .map(|(m, c)| {
                debug_assert!(m.exponents()[..extra].iter().all(|&e| e == 0));
                (Monomial::new(m.exponents()[extra..].to_vec()), *c)
            })
            .collect();
        Polynomial::normalize(ring, raw)
    }

    /// Render as text the parser accepts, e.g. `3*x^2*y - z + 1`.
    pub fn render(&self) -> String {
        alloc::format!("{self}")
    }
}

/// Write a monomial as `x^6*y^6*z^6`, or `1` for the unit monomial.
pub fn render_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut s = String::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&ring.vars()[i]);
        if e > 1 {
            s.push_str(&alloc::format!("^{e}"));
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let c = field.symmetric(*c);
            let (neg, mag) = (c < 0, c.unsigned_abs());
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", render_monomial(&self.ring, m))?;
            } else {
                write!(f, "{mag}*{}", render_monomial(&self.ring, m))?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition across rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial subtraction across rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial multiplication failed")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::TermOrder;
    use alloc::vec;
    use proptest::prelude::*;

    fn ring(p: u64, n: usize) -> Arc<Ring> {
        let names = ["x", "y", "z", "w"];
        Ring::grevlex(p, names[..n].iter().copied()).unwrap()
    }

    fn poly(r: &Arc<Ring>, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(r, terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), *c))).unwrap()
    }

    #[test]
    fn freshmans_dream_char_two() {
        let r = ring(2, 2);
        let f = poly(&r, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(&f * &f, poly(&r, &[(&[2, 0], 1), (&[0, 2], 1)]));
        assert_eq!(f.pow(4).unwrap(), poly(&r, &[(&[4, 0], 1), (&[0, 4], 1)]));
    }

    #[test]
    fn coefficient_reduction() {
        let r = ring(5, 1);
        let a = poly(&r, &[(&[1], 3)]);
        let b = poly(&r, &[(&[1], 2)]);
        assert_eq!(&a * &b, poly(&r, &[(&[2], 1)]));
    }

    #[test]
    fn difference_of_squares() {
        let r = ring(7, 2);
        let s = poly(&r, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let d = poly(&r, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(&s * &d, poly(&r, &[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn pow_zero_is_one() {
        let r = ring(7, 2);
        let f = poly(&r, &[(&[1, 0], 1), (&[0, 1], 1)]);
        assert_eq!(f.pow(0).unwrap(), Polynomial::one(&r));
    }

    /// Multinomial coefficient computed from scratch over the integers.
    fn multinomial(n: u64, parts: &[u64]) -> u128 {
        let fact = |k: u64| (1..=k as u128).product::<u128>();
        parts.iter().fold(fact(n), |acc, &k| acc / fact(k))
    }

    #[test]
    fn e8_sixth_power_coefficient() {
        let r = ring(7, 3);
        let f = poly(&r, &[(&[2, 0, 0], 1), (&[0, 3, 0], 1), (&[0, 0, 5], 1)]);
        let f6 = f.pow(6).unwrap();
        // every composition a+b+c=6 contributes x^{2a} y^{3b} z^{5c}
        let mut n = 0;
        for a in 0..=6u64 {
            for b in 0..=6 - a {
                let c = 6 - a - b;
                let m = Monomial::new(vec![2 * a as u32, 3 * b as u32, 5 * c as u32]);
                let expect = (multinomial(6, &[a, b, c]) % 7) as u32;
                assert_eq!(f6.coefficient(&m), expect);
                n += (expect != 0) as usize;
            }
        }
        assert_eq!(f6.len(), n);
        assert_eq!(f6.coefficient(&Monomial::new(vec![6, 6, 5])), 4);
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let a = Polynomial::var(&ring(7, 2), 0);
        let b = Polynomial::var(&ring(5, 2), 0);
        assert_eq!(a.try_mul(&b), Err(Error::RingMismatch));
        let c = Polynomial::var(&ring(7, 2).with_order(TermOrder::Lex), 0);
        assert_eq!(a.try_add(&c), Err(Error::RingMismatch));
    }

    #[test]
    fn pow_overflow_guard() {
        let r = ring(7, 1);
        let f = poly(&r, &[(&[1 << 20], 1)]);
        assert_eq!(f.pow(1 << 13), Err(Error::ExponentOverflow));
    }

    #[test]
    fn display_is_readable() {
        let r = ring(5, 2);
        let f = poly(&r, &[(&[1, 1], 3), (&[0, 0], -2), (&[2, 0], -1)]);
        assert_eq!(f.to_string(), "-x^2 - 2*x*y - 2");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }

    fn arb_poly(r: Arc<Ring>) -> impl Strategy<Value = Polynomial> {
        let n = r.nvars();
        proptest::collection::vec(
            (proptest::collection::vec(0u32..=4, n), -3i64..=3),
            0..5,
        )
        .prop_map(move |ts| {
            let ts = ts.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= 4);
            Polynomial::from_terms(&r, ts.map(|(e, c)| (Monomial::new(e), c))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn ring_axioms(
            (f, g, h) in (arb_poly(ring(7, 3)), arb_poly(ring(7, 3)), arb_poly(ring(7, 3)))
        ) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f + &g) - &g, f.clone());
            prop_assert!((&f - &f).is_zero());
        }

        #[test]
        fn pow_p_is_frobenius(p in prop_oneof![Just(2u64), Just(3), Just(5)], seed in any::<u64>()) {
            let r = ring(p, 2);
            let mut s = seed;
            let mut terms = vec![];
            for _ in 0..4 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                terms.push((Monomial::new(vec![((s >> 33) % 4) as u32, ((s >> 40) % 4) as u32]), ((s >> 50) % 11) as i64));
            }
            let f = Polynomial::from_terms(&r, terms).unwrap();
            let field = *r.field();
            let frob = Polynomial::from_terms(
                &r,
                f.terms().iter().map(|(m, c)| (m.pow(p as u32).unwrap(), field.pow(*c, p) as i64)),
            ).unwrap();
            prop_assert_eq!(f.pow(p).unwrap(), frob.clone());
            prop_assert_eq!(f.frobenius_power(p as u32).unwrap(), frob);
        }
    }
}
