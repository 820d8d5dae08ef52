//! Fedder-type containment tests for pairs `(R/I, a_1^{t_1} ... a_k^{t_k})`
//! and ν-sequences bounding F-pure thresholds from below.
//!
//! Every test asks whether a product ideal
//! `c · a_1^{N_1} ··· a_k^{N_k} · (I^[q] : I)` escapes `m^[q]`. Because
//! `m^[q]` is a monomial ideal, membership is termwise and the terms of a
//! product outside `m^[q]` only depend on the factors' terms outside
//! `m^[q]`. All factors are therefore truncated below `q` before being
//! multiplied, which keeps the intermediate generator lists small.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::frobenius::{colon_bracket, FrobExponent, RationalExponent, MAX_POWER_PRODUCTS};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::monomial_ideal::minimalize_with;
use crate::poly::Polynomial;
use crate::polytope::{fpt_monomial, Threshold};
use crate::rational::ExactRational;
use crate::ring::{check_same, Ring};

/// How the ideal exponents `N_i` are derived from `t_i` and `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    /// `N = ⌊t(q−1)⌋`, used for F-purity.
    #[default]
    Floor,
    /// `N = ⌈tq⌉`, used for strong F-regularity.
    Ceil,
}

impl Convention {
    pub fn exponent(&self, t: RationalExponent, q: FrobExponent) -> u64 {
        match self {
            Convention::Floor => t.floor_exp(q),
            Convention::Ceil => t.ceil_exp(q),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Convention::Floor => "floor",
            Convention::Ceil => "ceil",
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl core::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "floor" => Ok(Convention::Floor),
            "ceil" => Ok(Convention::Ceil),
            _ => Err(Error::Precondition(format!("unknown convention {s}"))),
        }
    }
}

/// The pair `(R/I, a_1^{t_1} ··· a_k^{t_k})` over `R = F_p[x_1, ..., x_n]`.
#[derive(Debug, Clone)]
pub struct PairSpec {
    ring: Arc<Ring>,
    quotient: Ideal,
    factors: Vec<(Ideal, RationalExponent)>,
    convention: Convention,
}

impl PairSpec {
    /// Validates that `I` is proper, each `a_i` is nonzero and, when
    /// `I != 0`, that no `a_i` lies inside `I`.
    pub fn new(
        quotient: Ideal,
        factors: Vec<(Ideal, RationalExponent)>,
        convention: Convention,
    ) -> Result<Self> {
        let ring = quotient.ring().clone();
        if quotient.is_unit()? {
            return Err(Error::Precondition("the quotient ideal must be proper".into()));
        }
        for (a, _) in &factors {
            check_same(&ring, a.ring())?;
            if a.is_zero() {
                return Err(Error::Precondition("pair ideals must be nonzero".into()));
            }
            if !quotient.is_zero() && quotient.contains(a)? {
                return Err(Error::Precondition(format!(
                    "pair ideal {a} vanishes modulo the quotient ideal"
                )));
            }
        }
        Ok(PairSpec {
            ring,
            quotient,
            factors,
            convention,
        })
    }

    /// The ambient pair `(R, a^t)`.
    pub fn ambient(a: Ideal, t: RationalExponent, convention: Convention) -> Result<Self> {
        let zero = Ideal::zero(a.ring()).with_config(*a.config());
        PairSpec::new(zero, alloc::vec![(a, t)], convention)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn quotient(&self) -> &Ideal {
        &self.quotient
    }

    pub fn factors(&self) -> &[(Ideal, RationalExponent)] {
        &self.factors
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn with_convention(mut self, convention: Convention) -> Self {
        self.convention = convention;
        self
    }

    /// Generators of `(I^[q] : I)`, or `(1)` for the ambient ring.
    pub fn colon_generators(&self, q: FrobExponent) -> Result<Vec<Polynomial>> {
        if self.quotient.is_zero() {
            return Ok(alloc::vec![Polynomial::one(&self.ring)]);
        }
        Ok(colon_bracket(&self.quotient, q)?.generators().to_vec())
    }
}

/// Identifies one generator of the tested product ideal and one of its
/// terms outside `m^[q]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// For each pair ideal, how often each of its generators occurs.
    pub factor_choices: Vec<Vec<u64>>,
    /// Index into the generators of `(I^[q] : I)`; `None` in the ambient case.
    pub colon_generator: Option<usize>,
    pub monomial: Monomial,
    pub coefficient: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub q: FrobExponent,
    pub holds: bool,
    pub witness: Option<Witness>,
    /// The exponents `N_i`, one per pair ideal.
    pub exponents_used: Vec<u64>,
    pub convention: Convention,
}

/// The largest `r` with `a^r · (I^[q] : I) ⊄ m^[q]`; `None` when even
/// `r = 0` fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NuValue {
    pub q: FrobExponent,
    pub r: Option<u64>,
}

impl NuValue {
    /// `ν(q) / q`.
    pub fn lower_bound(&self) -> Option<ExactRational> {
        self.r.map(|r| ExactRational::new(r as i64, self.q.q() as i64))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptLevel {
    pub q: FrobExponent,
    pub nu: Result<NuValue>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptReport {
    pub levels: Vec<FptLevel>,
    pub best_lower_bound: Option<ExactRational>,
    /// The Newton-polytope value, for monomial `a` in the ambient ring.
    pub exact: Option<Threshold>,
}

/// A truncated generator together with where it came from.
#[derive(Debug, Clone)]
struct Item {
    poly: Polynomial,
    choices: Vec<Vec<u64>>,
}

/// Generators of a product ideal, truncated below `q` and with those
/// lying in `m^[q]` dropped.
#[derive(Debug, Clone)]
struct TruncatedSet {
    items: Vec<Item>,
    monomial: bool,
}

fn truncate(f: &Polynomial, q: u64) -> Polynomial {
    if f.terms().iter().all(|(m, _)| !m.has_exponent_at_least(q)) {
        return f.clone();
    }
    let terms = f
        .terms()
        .iter()
        .filter(|(m, _)| !m.has_exponent_at_least(q))
        .cloned()
        .collect();
    Polynomial::from_sorted(f.ring(), terms)
}

/// The truncation of `f·g` below `q`, computed from truncated inputs.
fn truncated_product(f: &Polynomial, g: &Polynomial, q: u64) -> Polynomial {
    if f.is_monomial() || g.is_monomial() {
        let (m, c, other) = if f.is_monomial() {
            (&f.terms()[0].0, f.terms()[0].1, g)
        } else {
            (&g.terms()[0].0, g.terms()[0].1, f)
        };
        let field = *f.ring().field();
        let terms = other
            .terms()
            .iter()
            .filter(|(t, _)| {
                t.exponents()
                    .iter()
                    .zip(m.exponents())
                    .all(|(a, b)| ((a + b) as u64) < q)
            })
            .map(|(t, d)| (t.mul_unchecked(m), field.mul(c, *d)))
            .collect();
        return Polynomial::from_sorted(f.ring(), terms);
    }
    truncate(&f.mul_unchecked(g), q)
}

fn add_choices(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(u, v)| u + v).collect())
        .collect()
}

impl TruncatedSet {
    fn one(ring: &Arc<Ring>, shape: &[usize]) -> Self {
        TruncatedSet {
            items: alloc::vec![Item {
                poly: Polynomial::one(ring),
                choices: shape.iter().map(|&g| alloc::vec![0; g]).collect(),
            }],
            monomial: true,
        }
    }

    fn finish(items: Vec<Item>, monomial: bool) -> Self {
        let items = if monomial {
            let keyed = items
                .into_iter()
                .map(|it| (it.poly.terms()[0].0.clone(), it))
                .collect();
            minimalize_with(keyed).into_iter().map(|(_, it)| it).collect()
        } else {
            let mut out: Vec<Item> = Vec::with_capacity(items.len());
            for it in items {
                if !out.iter().any(|o| o.poly == it.poly) {
                    out.push(it);
                }
            }
            out
        };
        TruncatedSet { items, monomial }
    }

    fn product(&self, other: &TruncatedSet, q: u64) -> Result<TruncatedSet> {
        let count = self.items.len() as u64 * other.items.len() as u64;
        if count > MAX_POWER_PRODUCTS {
            return Err(Error::Resource(format!(
                "product of generator lists needs {count} products (cap {MAX_POWER_PRODUCTS})"
            )));
        }
        let mut out = Vec::with_capacity(count as usize);
        for a in &self.items {
            for b in &other.items {
                let poly = truncated_product(&a.poly, &b.poly, q);
                if !poly.is_zero() {
                    out.push(Item {
                        poly,
                        choices: add_choices(&a.choices, &b.choices),
                    });
                }
            }
        }
        Ok(TruncatedSet::finish(out, self.monomial && other.monomial))
    }

    /// `a^n` for the pair ideal in `slot`.
    fn power(ideal: &Ideal, slot: usize, shape: &[usize], n: u64, q: u64) -> Result<TruncatedSet> {
        let ring = ideal.ring();
        let mut acc = TruncatedSet::one(ring, shape);
        if n == 0 {
            return Ok(acc);
        }
        let base_items = ideal
            .generators()
            .iter()
            .enumerate()
            .filter_map(|(j, g)| {
                let poly = truncate(g, q);
                (!poly.is_zero()).then(|| {
                    let mut choices: Vec<Vec<u64>> = shape.iter().map(|&g| alloc::vec![0; g]).collect();
                    choices[slot][j] = 1;
                    Item { poly, choices }
                })
            })
            .collect();
        let mut base = TruncatedSet::finish(base_items, ideal.is_monomial());
        let mut e = n;
        loop {
            if e & 1 == 1 {
                acc = acc.product(&base, q)?;
            }
            e >>= 1;
            if e == 0 || acc.items.is_empty() {
                break;
            }
            base = base.product(&base, q)?;
        }
        Ok(acc)
    }
}

/// Core search: does `extra · Π a_i^{N_i} · C` escape `m^[q]`?
fn search(
    spec: &PairSpec,
    exponents: &[u64],
    extra: Option<&Polynomial>,
    colon: &[Polynomial],
    q: FrobExponent,
) -> Result<Option<Witness>> {
    let qq = q.q() as u64;
    let shape: Vec<usize> = spec.factors.iter().map(|(a, _)| a.generators().len()).collect();
    let mut set = TruncatedSet::one(&spec.ring, &shape);
    for (slot, ((a, _), &n)) in spec.factors.iter().zip(exponents).enumerate() {
        let pw = TruncatedSet::power(a, slot, &shape, n, qq)?;
        set = set.product(&pw, qq)?;
        if set.items.is_empty() {
            return Ok(None);
        }
    }
    let extra = extra.map(|c| truncate(c, qq));
    let ambient = spec.quotient.is_zero();
    for (k, g) in colon.iter().enumerate() {
        let mut g = truncate(g, qq);
        if let Some(c) = &extra {
            g = truncated_product(&g, c, qq);
        }
        if g.is_zero() {
            continue;
        }
        for item in &set.items {
            let prod = truncated_product(&item.poly, &g, qq);
            if let Some((m, c)) = prod.lead() {
                return Ok(Some(Witness {
                    factor_choices: item.choices.clone(),
                    colon_generator: (!ambient).then_some(k),
                    monomial: m.clone(),
                    coefficient: *c,
                }));
            }
        }
    }
    Ok(None)
}

fn check_q(spec: &PairSpec, q: FrobExponent) -> Result<()> {
    if spec.ring.characteristic() != q.p() {
        return Err(Error::Precondition(format!(
            "q = {q} is not a power of the characteristic {}",
            spec.ring.characteristic()
        )));
    }
    Ok(())
}

fn certify(
    spec: &PairSpec,
    extra: Option<&Polynomial>,
    q: FrobExponent,
    convention: Convention,
) -> Result<Certificate> {
    check_q(spec, q)?;
    let exponents: Vec<u64> = spec
        .factors
        .iter()
        .map(|(_, t)| convention.exponent(*t, q))
        .collect();
    let colon = spec.colon_generators(q)?;
    let witness = search(spec, &exponents, extra, &colon, q)?;
    Ok(Certificate {
        q,
        holds: witness.is_some(),
        witness,
        exponents_used: exponents,
        convention,
    })
}

/// `a_1^{N_1} ··· a_k^{N_k} (I^[q] : I) ⊄ m^[q]` with the pair's convention.
pub fn fedder_fpure_at_q(spec: &PairSpec, q: FrobExponent) -> Result<Certificate> {
    certify(spec, None, q, spec.convention)
}

fn check_witness_element(spec: &PairSpec, c: &Polynomial) -> Result<()> {
    check_same(&spec.ring, c.ring())?;
    if spec.quotient.member(c)? {
        return Err(Error::Precondition(format!("witness element {c} lies in the quotient ideal")));
    }
    Ok(())
}

/// `c · a_1^{⌈t_1 q⌉} ··· a_k^{⌈t_k q⌉} (I^[q] : I) ⊄ m^[q]` for a user-chosen `c ∉ I`.
pub fn fedder_sfr_witness_at_q(spec: &PairSpec, c: &Polynomial, q: FrobExponent) -> Result<Certificate> {
    check_witness_element(spec, c)?;
    certify(spec, Some(c), q, Convention::Ceil)
}

/// The purely-F-regular variant: floor exponents with a user-chosen `c`
/// assumed to avoid the minimal primes of `a_1 ··· a_k + I`.
pub fn fedder_pfr_witness_at_q(spec: &PairSpec, c: &Polynomial, q: FrobExponent) -> Result<Certificate> {
    check_witness_element(spec, c)?;
    certify(spec, Some(c), q, Convention::Floor)
}

/// Re-check a certificate from scratch: the named generator is recomputed
/// without truncation and the witness term looked up in it.
pub fn verify_certificate(spec: &PairSpec, extra: Option<&Polynomial>, cert: &Certificate) -> Result<bool> {
    let Some(w) = &cert.witness else {
        return Ok(!cert.holds);
    };
    if !cert.holds
        || w.monomial.has_exponent_at_least(cert.q.q() as u64)
        || w.factor_choices.len() != spec.factors.len()
    {
        return Ok(false);
    }
    let mut prod = match extra {
        Some(c) => c.clone(),
        None => Polynomial::one(&spec.ring),
    };
    for ((a, _), (counts, &n)) in spec.factors.iter().zip(w.factor_choices.iter().zip(&cert.exponents_used)) {
        if counts.len() != a.generators().len() || counts.iter().sum::<u64>() != n {
            return Ok(false);
        }
        for (g, &k) in a.generators().iter().zip(counts) {
            prod = prod.try_mul(&g.pow(k)?)?;
        }
    }
    let colon = spec.colon_generators(cert.q)?;
    match (w.colon_generator, spec.quotient.is_zero()) {
        (Some(k), false) if k < colon.len() => prod = prod.try_mul(&colon[k])?,
        (None, true) => {}
        _ => return Ok(false),
    }
    let c = prod.coefficient(&w.monomial);
    Ok(c != 0 && c == w.coefficient)
}

/// Does `a^r · C` escape `m^[q]`?
fn nu_test(a: &Ideal, colon: &[Polynomial], r: u64, q: FrobExponent) -> Result<bool> {
    let qq = q.q() as u64;
    let shape = [a.generators().len()];
    let set = TruncatedSet::power(a, 0, &shape, r, qq)?;
    for g in colon {
        let g = truncate(g, qq);
        if g.is_zero() {
            continue;
        }
        if set.items.iter().any(|it| !truncated_product(&it.poly, &g, qq).is_zero()) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn nu_inputs(quotient: &Ideal, a: &Ideal, q: FrobExponent) -> Result<Vec<Polynomial>> {
    check_same(quotient.ring(), a.ring())?;
    if quotient.ring().characteristic() != q.p() {
        return Err(Error::Precondition(format!(
            "q = {q} is not a power of the characteristic {}",
            quotient.ring().characteristic()
        )));
    }
    if a.is_zero() {
        return Err(Error::Precondition("nu of the zero ideal".into()));
    }
    if !a.in_maximal_ideal() {
        return Err(Error::UnboundedNu);
    }
    if quotient.is_zero() {
        Ok(alloc::vec![Polynomial::one(quotient.ring())])
    } else {
        Ok(colon_bracket(quotient, q)?.generators().to_vec())
    }
}

/// `ν(q)` for the pair `(R/I, a)`: exponential search, then bisection.
///
/// Passing is downward closed in `r` since `a^{r+1} ⊆ a^r`, and
/// `r = n(q−1) + 1` always fails because `a ⊆ m`.
pub fn nu_value(quotient: &Ideal, a: &Ideal, q: FrobExponent) -> Result<NuValue> {
    let colon = nu_inputs(quotient, a, q)?;
    if !nu_test(a, &colon, 0, q)? {
        return Ok(NuValue { q, r: None });
    }
    let ceiling = quotient.ring().nvars() as u64 * (q.q() as u64 - 1) + 1;
    let (mut lo, mut hi) = (0u64, 1u64);
    while hi < ceiling && nu_test(a, &colon, hi, q)? {
        lo = hi;
        hi = (hi * 2).min(ceiling);
    }
    // invariant: test(lo) passes, test(hi) fails
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if nu_test(a, &colon, mid, q)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(NuValue { q, r: Some(lo) })
}

/// `ν(q)` by scanning `r = 0, 1, 2, ...` until the test fails.
pub fn nu_value_linear(quotient: &Ideal, a: &Ideal, q: FrobExponent) -> Result<NuValue> {
    let colon = nu_inputs(quotient, a, q)?;
    let mut r = None;
    let mut k = 0;
    while nu_test(a, &colon, k, q)? {
        r = Some(k);
        k += 1;
    }
    Ok(NuValue { q, r })
}

/// `ν(q)/q` for `q = p, p^2, ..., p^{e_max}`. Errors at one level are
/// recorded and the remaining levels still run.
pub fn fpt_lower_bounds(quotient: &Ideal, a: &Ideal, e_max: u32) -> Result<FptReport> {
    if e_max == 0 {
        return Err(Error::Precondition("e_max must be at least 1".into()));
    }
    let p = quotient.ring().characteristic();
    FrobExponent::new(p, e_max)?;
    let mut levels = Vec::with_capacity(e_max as usize);
    for e in 1..=e_max {
        let q = FrobExponent::new(p, e)?;
        let nu = nu_value(quotient, a, q);
        if let Err(Error::UnboundedNu | Error::RingMismatch) = &nu {
            return Err(nu.unwrap_err());
        }
        levels.push(FptLevel { q, nu });
    }
    let best_lower_bound = levels
        .iter()
        .filter_map(|l| l.nu.as_ref().ok().and_then(NuValue::lower_bound))
        .max();
    let exact = if quotient.is_zero() && a.is_monomial() {
        Some(fpt_monomial(a)?)
    } else {
        None
    };
    Ok(FptReport {
        levels,
        best_lower_bound,
        exact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::in_bracket_m;
    use crate::parse::parse_polynomial;
    use alloc::vec;
    use proptest::prelude::*;

    fn ring(p: u64, vars: &[&str]) -> Arc<Ring> {
        Ring::grevlex(p, vars.iter().copied()).unwrap()
    }

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap())).unwrap()
    }

    fn fq(p: u32, e: u32) -> FrobExponent {
        FrobExponent::new(p, e).unwrap()
    }

    fn t(s: &str) -> RationalExponent {
        s.parse().unwrap()
    }

    fn e8() -> (Arc<Ring>, Ideal) {
        let r = ring(7, &["x", "y", "z"]);
        let i = ideal(&r, &["x^2 + y^3 + z^5"]);
        (r, i)
    }

    #[test]
    fn e8_at_seven() {
        let (r, i) = e8();
        let spec = PairSpec::new(i, vec![(Ideal::maximal(&r), t("1/6"))], Convention::Floor).unwrap();
        let cert = fedder_fpure_at_q(&spec, fq(7, 1)).unwrap();
        assert!(cert.holds);
        assert_eq!(cert.exponents_used, vec![1]);
        let w = cert.witness.as_ref().unwrap();
        assert_eq!(w.monomial, Monomial::new(vec![6, 6, 6]));
        assert_eq!(w.factor_choices, vec![vec![0, 0, 1]]);
        assert_eq!(w.colon_generator, Some(0));
        assert_eq!(w.coefficient, 4);
        assert!(verify_certificate(&spec, None, &cert).unwrap());
    }

    #[test]
    fn unit_pair_ideal_always_holds() {
        for p in [2u32, 3, 5] {
            let r = ring(p as u64, &["x", "y"]);
            let spec = PairSpec::ambient(Ideal::unit(&r), t("7/2"), Convention::Floor).unwrap();
            for e in 1..3 {
                let cert = fedder_fpure_at_q(&spec, fq(p, e)).unwrap();
                assert!(cert.holds);
                assert!(cert.witness.unwrap().monomial.is_one());
            }
        }
    }

    #[test]
    fn square_of_complement_ideal_fails() {
        let r = ring(2, &["x", "y", "z"]);
        let a = ideal(&r, &["y*z", "x*z", "x*y"]);
        let spec = PairSpec::ambient(a, t("2"), Convention::Floor).unwrap();
        let cert = fedder_fpure_at_q(&spec, fq(2, 1)).unwrap();
        assert!(!cert.holds);
        assert_eq!(cert.exponents_used, vec![2]);
        assert!(cert.witness.is_none());
        assert!(verify_certificate(&spec, None, &cert).unwrap());
    }

    #[test]
    fn sfr_witness_examples() {
        let r = ring(7, &["x"]);
        let x = Polynomial::var(&r, 0);
        let half = PairSpec::ambient(ideal(&r, &["x"]), t("1/2"), Convention::Floor).unwrap();
        let c = fedder_sfr_witness_at_q(&half, &x, fq(7, 1)).unwrap();
        assert!(c.holds);
        assert_eq!(c.exponents_used, vec![4]);
        assert_eq!(c.witness.as_ref().unwrap().monomial, Monomial::new(vec![5]));
        assert!(verify_certificate(&half, Some(&x), &c).unwrap());
        let one = PairSpec::ambient(ideal(&r, &["x"]), t("1"), Convention::Floor).unwrap();
        assert!(!fedder_sfr_witness_at_q(&one, &x, fq(7, 1)).unwrap().holds);
        assert!(fedder_sfr_witness_at_q(&one, &Polynomial::zero(&r), fq(7, 1)).is_err());
    }

    #[test]
    fn sfr_with_unit_witness_is_ceil_fpure() {
        let (r, i) = e8();
        let spec = PairSpec::new(i, vec![(Ideal::maximal(&r), t("1/10"))], Convention::Ceil).unwrap();
        for e in 1..=2 {
            let a = fedder_sfr_witness_at_q(&spec, &Polynomial::one(&r), fq(7, e)).unwrap();
            let b = fedder_fpure_at_q(&spec, fq(7, e)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn witness_in_quotient_is_rejected() {
        let (r, i) = e8();
        let f = i.generators()[0].clone();
        let spec = PairSpec::new(i, vec![], Convention::Floor).unwrap();
        assert!(matches!(
            fedder_sfr_witness_at_q(&spec, &f, fq(7, 1)),
            Err(Error::Precondition(_))
        ));
        let _ = r;
    }

    #[test]
    fn invalid_specs() {
        let r = ring(5, &["x", "y"]);
        assert!(PairSpec::new(Ideal::unit(&r), vec![], Convention::Floor).is_err());
        let i = ideal(&r, &["x"]);
        assert!(PairSpec::new(i.clone(), vec![(ideal(&r, &["x^2*y"]), t("1"))], Convention::Floor).is_err());
        assert!(PairSpec::new(i, vec![(Ideal::zero(&r), t("1"))], Convention::Floor).is_err());
        let other = ring(7, &["x", "y"]);
        assert!(PairSpec::ambient(Ideal::maximal(&other), t("1"), Convention::Floor)
            .and_then(|s| fedder_fpure_at_q(&s, fq(5, 1)))
            .is_err());
    }

    #[test]
    fn nu_examples() {
        let r = ring(5, &["x"]);
        let zero = Ideal::zero(&r);
        assert_eq!(nu_value(&zero, &ideal(&r, &["x^2"]), fq(5, 1)).unwrap().r, Some(2));
        let r3 = ring(3, &["x", "y"]);
        assert_eq!(nu_value(&Ideal::zero(&r3), &Ideal::maximal(&r3), fq(3, 1)).unwrap().r, Some(4));
        let (r7, i) = e8();
        assert_eq!(nu_value(&i, &Ideal::maximal(&r7), fq(7, 1)).unwrap().r, Some(1));
        assert_eq!(
            nu_value(&Ideal::zero(&r), &ideal(&r, &["x + 1"]), fq(5, 1)),
            Err(Error::UnboundedNu)
        );
    }

    /// ν(49) for E8 from the composition oracle: the slack of the best
    /// composition (a, b, c) of 48 with nonzero multinomial coefficient mod 7.
    #[test]
    fn e8_nu_49_matches_composition_oracle() {
        fn multinomial_mod7_nonzero(a: u64, b: u64, c: u64) -> bool {
            // Lucas: base-7 digits of a, b, c add to those of a+b+c without carry
            let (mut a, mut b, mut c) = (a, b, c);
            while a + b + c > 0 {
                if a % 7 + b % 7 + c % 7 >= 7 {
                    return false;
                }
                a /= 7;
                b /= 7;
                c /= 7;
            }
            true
        }
        let mut best = None;
        for a in 0..=48u64 {
            for b in 0..=48 - a {
                let c = 48 - a - b;
                let exps = [2 * a, 3 * b, 5 * c];
                if exps.iter().all(|&e| e < 49) && multinomial_mod7_nonzero(a, b, c) {
                    let slack: u64 = exps.iter().map(|e| 48 - e).sum();
                    best = best.max(Some(slack));
                }
            }
        }
        assert_eq!(best, Some(8));
        let (r, i) = e8();
        let nu = nu_value(&i, &Ideal::maximal(&r), fq(7, 2)).unwrap();
        assert_eq!(nu.r, best);
        assert!(nu.lower_bound().unwrap() <= ExactRational::new(1, 6));
    }

    #[test]
    fn not_f_split_gives_none() {
        // x^2 y^2 in char 2: f^{q-1} = x^2 y^2 ∈ m^[2]
        let r = ring(2, &["x", "y"]);
        let i = ideal(&r, &["x^2*y^2"]);
        assert_eq!(nu_value(&i, &Ideal::maximal(&r), fq(2, 1)).unwrap().r, None);
    }

    #[test]
    fn fpt_bounds_examples() {
        let r = ring(5, &["x"]);
        let rep = fpt_lower_bounds(&Ideal::zero(&r), &ideal(&r, &["x^2"]), 2).unwrap();
        let nus: Vec<_> = rep.levels.iter().map(|l| l.nu.as_ref().unwrap().r).collect();
        assert_eq!(nus, vec![Some(2), Some(12)]);
        assert_eq!(rep.best_lower_bound, Some(ExactRational::new(12, 25)));
        assert_eq!(rep.exact, Some(Threshold::Finite(ExactRational::new(1, 2))));

        let r3 = ring(3, &["x", "y"]);
        let rep = fpt_lower_bounds(&Ideal::zero(&r3), &Ideal::maximal(&r3), 2).unwrap();
        let nus: Vec<_> = rep.levels.iter().map(|l| l.nu.as_ref().unwrap().r).collect();
        assert_eq!(nus, vec![Some(4), Some(16)]);
        assert_eq!(rep.best_lower_bound, Some(ExactRational::new(16, 9)));

        let (r7, i) = e8();
        let rep = fpt_lower_bounds(&i, &Ideal::maximal(&r7), 2).unwrap();
        let nus: Vec<_> = rep.levels.iter().map(|l| l.nu.as_ref().unwrap().r).collect();
        assert_eq!(nus, vec![Some(1), Some(8)]);
        assert!(rep.best_lower_bound.unwrap() <= ExactRational::new(1, 6));
        assert_eq!(rep.exact, None);
        assert!(fpt_lower_bounds(&i, &Ideal::maximal(&r7), 0).is_err());
        assert!(fpt_lower_bounds(&i, &Ideal::maximal(&r7), 9).is_err());
    }

    #[test]
    fn classical_fedder_for_hypersurfaces() {
        let cases: &[(u64, &str)] = &[
            (7, "x^2 + y^3 + z^5"),
            (5, "x^2 + y^3 + z^5"),
            (2, "x*y + z^2"),
            (3, "x^3 + y^3 + z^3"),
            (2, "x^3 + y^3 + z^3"),
            (5, "x*y*z"),
        ];
        for &(p, f) in cases {
            let r = ring(p, &["x", "y", "z"]);
            let i = ideal(&r, &[f]);
            let g = i.generators()[0].clone();
            let spec = PairSpec::new(i, vec![], Convention::Floor).unwrap();
            for e in 1..=2 {
                let q = fq(p as u32, e);
                let classical = !in_bracket_m(&g.pow(q.q() as u64 - 1).unwrap(), q);
                let cert = fedder_fpure_at_q(&spec, q).unwrap();
                assert_eq!(cert.holds, classical, "{f} at q={q}");
                assert!(verify_certificate(&spec, None, &cert).unwrap());
            }
        }
    }

    #[test]
    fn non_monomial_pair_ideal() {
        let r = ring(3, &["x", "y"]);
        let a = ideal(&r, &["x + y", "x*y"]);
        let spec = PairSpec::ambient(a.clone(), t("1"), Convention::Floor).unwrap();
        for e in 1..=2 {
            let cert = fedder_fpure_at_q(&spec, fq(3, e)).unwrap();
            assert!(verify_certificate(&spec, None, &cert).unwrap());
        }
        let bin = nu_value(&Ideal::zero(&r), &a, fq(3, 1)).unwrap();
        let lin = nu_value_linear(&Ideal::zero(&r), &a, fq(3, 1)).unwrap();
        assert_eq!(bin, lin);
    }

    #[test]
    fn quotient_by_non_principal_ideal() {
        let r = ring(2, &["x", "y", "z"]);
        let i = ideal(&r, &["x*y", "x*z", "y*z"]);
        let spec = PairSpec::new(i.clone(), vec![(Ideal::maximal(&r), t("1/2"))], Convention::Floor).unwrap();
        for e in 1..=2 {
            let cert = fedder_fpure_at_q(&spec, fq(2, e)).unwrap();
            assert!(verify_certificate(&spec, None, &cert).unwrap());
        }
        // k[x,y,z]/(xy,xz,yz) is F-pure
        let bare = PairSpec::new(i, vec![], Convention::Floor).unwrap();
        assert!(fedder_fpure_at_q(&bare, fq(2, 1)).unwrap().holds);
    }

    fn small_monomial_ideal() -> impl Strategy<Value = Vec<Vec<u32>>> {
        proptest::collection::vec(proptest::collection::vec(0u32..3, 2), 1..4)
            .prop_filter("inside m", |g| g.iter().all(|v| v.iter().any(|&e| e > 0)))
    }

    fn mono_ideal(r: &Arc<Ring>, g: &[Vec<u32>]) -> Ideal {
        Ideal::from_monomials(r, g.iter().map(|v| Monomial::new(v.clone())))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn binary_search_matches_linear_scan(g in small_monomial_ideal(), p in prop_oneof![Just(2u32), Just(3)], e in 1u32..3) {
            let r = ring(p as u64, &["x", "y"]);
            let a = mono_ideal(&r, &g);
            let q = fq(p, e);
            prop_assert_eq!(nu_value(&Ideal::zero(&r), &a, q).unwrap(), nu_value_linear(&Ideal::zero(&r), &a, q).unwrap());
        }

        #[test]
        fn ambient_scaling(g in small_monomial_ideal(), p in prop_oneof![Just(2u32), Just(3)]) {
            let r = ring(p as u64, &["x", "y"]);
            let a = mono_ideal(&r, &g);
            let z = Ideal::zero(&r);
            let n1 = nu_value(&z, &a, fq(p, 1)).unwrap().r.unwrap();
            let n2 = nu_value(&z, &a, fq(p, 2)).unwrap().r.unwrap();
            prop_assert!(n2 >= p as u64 * n1);
            let rep = fpt_lower_bounds(&z, &a, 2).unwrap();
            let fpt = rep.exact.unwrap().finite().unwrap().clone();
            prop_assert!(rep.best_lower_bound.unwrap() <= fpt);
        }

        #[test]
        fn ceil_implies_floor(g in small_monomial_ideal(), num in 1u64..8, den in 1u64..5, e in 1u32..3) {
            let r = ring(3, &["x", "y"]);
            let spec = PairSpec::ambient(mono_ideal(&r, &g), RationalExponent::new(num, den).unwrap(), Convention::Ceil).unwrap();
            let q = fq(3, e);
            let ceil = fedder_fpure_at_q(&spec, q).unwrap();
            let floor = fedder_fpure_at_q(&spec.clone().with_convention(Convention::Floor), q).unwrap();
            prop_assert!(!ceil.holds || floor.holds);
            prop_assert!(verify_certificate(&spec, None, &ceil).unwrap());
        }

        #[test]
        fn restriction_monotone(g in small_monomial_ideal(), extra in small_monomial_ideal(), num in 1u64..6, den in 1u64..4, smaller in 1u64..3) {
            let r = ring(2, &["x", "y"]);
            let q = fq(2, 2);
            let tt = RationalExponent::new(num, den).unwrap();
            let base = PairSpec::ambient(mono_ideal(&r, &g), tt, Convention::Floor).unwrap();
            let mut bigger_gens = g.clone();
            bigger_gens.extend(extra);
            let bigger = PairSpec::ambient(mono_ideal(&r, &bigger_gens), tt, Convention::Floor).unwrap();
            let lower_t = RationalExponent::new(num, den * (smaller + 1)).unwrap();
            let lower = PairSpec::ambient(mono_ideal(&r, &g), lower_t, Convention::Floor).unwrap();
            if fedder_fpure_at_q(&base, q).unwrap().holds {
                prop_assert!(fedder_fpure_at_q(&bigger, q).unwrap().holds);
                prop_assert!(fedder_fpure_at_q(&lower, q).unwrap().holds);
            }
        }
    }
}
