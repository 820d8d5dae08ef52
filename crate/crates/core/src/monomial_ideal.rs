//! Lattice operations on monomial ideals given by generator lists.
//!
//! All results are minimal generating sets sorted by degree, then with
//! larger exponent vectors (lexicographically) first.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::monomial::Monomial;

fn canonical_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.exponents().cmp(a.exponents()))
}

/// Remove duplicates and generators divisible by another generator.
pub fn minimalize(gens: Vec<Monomial>) -> Vec<Monomial> {
    minimalize_with(gens.into_iter().map(|m| (m, ())).collect())
        .into_iter()
        .map(|(m, _)| m)
        .collect()
}

/// [`minimalize`] carrying a payload; among equal monomials the first one
/// in input order survives.
pub fn minimalize_with<T>(mut gens: Vec<(Monomial, T)>) -> Vec<(Monomial, T)> {
    gens.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    gens.dedup_by(|later, earlier| later.0 == earlier.0);
    let mut kept: Vec<(Monomial, T)> = Vec::with_capacity(gens.len());
    // kept[..lower] holds every kept generator of strictly smaller degree
    let mut lower = 0;
    let mut current_degree = None;
    for (m, t) in gens {
        let d = m.degree();
        if current_degree != Some(d) {
            lower = kept.len();
            current_degree = Some(d);
        }
        if !kept[..lower].iter().any(|k| k.0.divides_unchecked(&m)) {
            kept.push((m, t));
        }
    }
    kept
}

pub fn contains_monomial(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides_unchecked(m))
}

/// `A ⊇ B`.
pub fn contains(a: &[Monomial], b: &[Monomial]) -> bool {
    b.iter().all(|m| contains_monomial(a, m))
}

pub fn intersect(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(x.lcm(y));
        }
    }
    minimalize(out)
}

/// `(A : m)`.
pub fn colon_monomial(a: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    minimalize(a.iter().map(|g| g.quotient_by_gcd(m)).collect())
}

/// `(A : B)` as the intersection of `(A : b)` over generators `b`.
/// `B` must be nonempty.
pub fn colon(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut iter = b.iter();
    let first = iter.next().expect("colon by the zero ideal");
    let mut acc = colon_monomial(a, first);
    for m in iter {
        acc = intersect(&acc, &colon_monomial(a, m));
    }
    acc
}

pub fn product(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    product_outside(a, b, |_| false)
}

/// Minimal generators of `A·B` for which `discard` is false. `discard`
/// must describe membership in an ideal, so that discarded products never
/// matter for later products.
pub fn product_outside(
    a: &[Monomial],
    b: &[Monomial],
    discard: impl Fn(&Monomial) -> bool,
) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            let m = x.mul_unchecked(y);
            if !discard(&m) {
                out.push(m);
            }
        }
    }
    minimalize(out)
}

/// `A^n`; `A^0 = (1)`.
pub fn power(a: &[Monomial], n: u64, nvars: usize) -> Vec<Monomial> {
    power_outside(a, n, nvars, |_| false)
}

/// Minimal generators of `A^n` not satisfying `discard` (ideal membership).
/// Empty exactly when `A^n` lies inside the discarded ideal.
///
/// Panics if a principal `A` raised to `n` overflows the exponent range.
pub fn power_outside(
    a: &[Monomial],
    n: u64,
    nvars: usize,
    discard: impl Fn(&Monomial) -> bool + Copy,
) -> Vec<Monomial> {
    let base = minimalize(a.iter().filter(|m| !discard(m)).cloned().collect());
    let one = Monomial::one(nvars);
    if n == 0 {
        return if discard(&one) { Vec::new() } else { alloc::vec![one] };
    }
    if let [g] = base.as_slice() {
        let k = u32::try_from(n).expect("power exponent exceeds u32");
        let m = g.pow(k).expect("exponent overflow in monomial power");
        return if discard(&m) { Vec::new() } else { alloc::vec![m] };
    }
    // one factor at a time: squaring a large truncated set costs far more
    let mut acc = base.clone();
    for _ in 1..n {
        if acc.is_empty() {
            break;
        }
        acc = product_outside(&acc, &base, discard);
    }
    acc
}
