//! Multivariate division and Buchberger's algorithm.
//!
//! Pairs are selected by the normal strategy (smallest lcm degree first,
//! ties by term order then index) and filtered with the Gebauer–Möller
//! update, which applies both the coprime-leading-monomial criterion and
//! the chain criterion.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::check_same;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-pairs ever queued.
    pub max_pairs: usize,
    /// Maximum total degree of a basis element.
    pub max_degree: u64,
    /// Re-check the Buchberger postcondition before returning.
    pub verify: bool,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig {
            max_pairs: 200_000,
            max_degree: 512,
            verify: false,
        }
    }
}

/// Fully reduce `f` by `basis`, trying divisors in list order.
///
/// The remainder has no term divisible by a leading monomial of `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    for g in basis {
        check_same(f.ring(), g.ring())?;
        if g.is_zero() {
            return Err(Error::Precondition("zero polynomial in a division basis".into()));
        }
    }
    Ok(reduce(f, basis.iter()))
}

pub(crate) fn reduce<'a>(
    f: &Polynomial,
    basis: impl Iterator<Item = &'a Polynomial> + Clone,
) -> Polynomial {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut rest = f.clone();
    let mut remainder: Vec<(Monomial, u32)> = Vec::new();
    while let Some((m, c)) = rest.lead().cloned() {
        let divisor = basis
            .clone()
            .find(|g| g.lead_monomial().is_some_and(|l| l.divides_unchecked(&m)));
        match divisor {
            Some(g) => {
                let shift = m.div(g.lead_monomial().unwrap()).unwrap();
                let factor = field.mul(c, field.inv(g.lead_coeff()).unwrap());
                rest = rest.merge(g, field.neg(factor), Some(&shift));
            }
            None => {
                let mut terms = rest.into_terms();
                remainder.push(terms.remove(0));
                rest = Polynomial::from_sorted(&ring, terms);
            }
        }
    }
    Polynomial::from_sorted(&ring, remainder)
}

/// S-polynomial of two nonzero polynomials.
fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (lf, lg) = (f.lead_monomial().unwrap(), g.lead_monomial().unwrap());
    let l = lf.lcm(lg);
    let field = *f.ring().field();
    let a = f.mul_term(&l.div(lf).unwrap(), field.inv(f.lead_coeff()).unwrap());
    let a = a.expect("lcm-bounded exponents");
    let shift = l.div(lg).unwrap();
    let c = field.neg(field.inv(g.lead_coeff()).unwrap());
    a.merge(g, c, Some(&shift))
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct State {
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    queued: usize,
    config: GroebnerConfig,
}

impl State {
    fn active_polys(&self) -> impl Iterator<Item = &Polynomial> + Clone {
        self.polys
            .iter()
            .zip(&self.active)
            .filter(|(_, a)| **a)
            .map(|(p, _)| p)
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].lead_monomial().unwrap()
    }

    /// Gebauer–Möller update after appending `h`.
    fn insert(&mut self, h: Polynomial) -> Result<()> {
        if h.total_degree() > self.config.max_degree {
            return Err(Error::Resource(format!(
                "Groebner basis element of degree {} exceeds cap {}",
                h.total_degree(),
                self.config.max_degree
            )));
        }
        let hi = self.polys.len();
        self.polys.push(h);
        self.active.push(true);
        let lh = self.lm(hi).clone();

        let cands: Vec<(usize, Monomial, bool)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| {
                let lg = self.lm(g);
                (g, lh.lcm(lg), lh.is_coprime(lg))
            })
            .collect();
        let mut kept: Vec<usize> = Vec::new();
        for (k, (_, l1, coprime)) in cands.iter().enumerate() {
            let dominated = cands[k + 1..]
                .iter()
                .any(|(_, l2, _)| l2.divides_unchecked(l1))
                || kept.iter().any(|&d| cands[d].1.divides_unchecked(l1));
            if *coprime || !dominated {
                kept.push(k);
            }
        }
        let new_pairs: Vec<Pair> = kept
            .into_iter()
            .filter(|&k| !cands[k].2)
            .map(|k| Pair {
                i: cands[k].0,
                j: hi,
                lcm: cands[k].1.clone(),
            })
            .collect();

        let polys = &self.polys;
        let lm = |i: usize| polys[i].lead_monomial().unwrap();
        self.pairs.retain(|pr| {
            !lh.divides_unchecked(&pr.lcm)
                || lm(pr.i).lcm(&lh) == pr.lcm
                || lm(pr.j).lcm(&lh) == pr.lcm
        });
        self.queued += new_pairs.len();
        if self.queued > self.config.max_pairs {
            return Err(Error::Resource(format!(
                "S-pair count exceeds cap {}",
                self.config.max_pairs
            )));
        }
        self.pairs.extend(new_pairs);

        for g in 0..hi {
            if self.active[g] && lh.divides_unchecked(self.lm(g)) {
                self.active[g] = false;
            }
        }
        Ok(())
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let order = self.polys.first()?.ring().order();
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (x, y) = (&self.pairs[a], &self.pairs[b]);
            x.lcm
                .degree()
                .cmp(&y.lcm.degree())
                .then_with(|| order.cmp(&x.lcm, &y.lcm))
                .then_with(|| (x.i, x.j).cmp(&(y.i, y.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// The reduced Gröbner basis of the ideal generated by `gens`, in the
/// term order of their common ring, sorted descending by leading monomial.
///
/// The zero ideal yields an empty basis; the unit ideal yields `[1]`.
pub fn groebner_basis(gens: &[Polynomial], config: &GroebnerConfig) -> Result<Vec<Polynomial>> {
    let gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring().clone();
    for g in &gens {
        check_same(&ring, g.ring())?;
    }
    if gens.iter().any(|g| g.is_unit()) {
        return Ok(alloc::vec![Polynomial::one(&ring)]);
    }

    let mut state = State {
        polys: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        queued: 0,
        config: *config,
    };
    for g in &gens {
        let h = reduce(g, state.active_polys());
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(alloc::vec![Polynomial::one(&ring)]);
        }
        state.insert(h.monic())?;
    }
    while let Some(pair) = state.pop_pair() {
        let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j]);
        let h = reduce(&s, state.active_polys());
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(alloc::vec![Polynomial::one(&ring)]);
        }
        state.insert(h.monic())?;
    }

    let minimal: Vec<Polynomial> = state.active_polys().cloned().collect();
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others = minimal
                .iter()
                .enumerate()
                .filter(move |(j, _)| *j != k)
                .map(|(_, g)| g);
            reduce(&minimal[k], others).monic()
        })
        .collect();
    let order = ring.order();
    reduced.sort_by(|a, b| order.cmp(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));

    if config.verify && !is_groebner_basis_of(&reduced, &gens) {
        return Err(Error::Internal("Buchberger postcondition failed".into()));
    }
    Ok(reduced)
}

/// Every S-polynomial of `basis` reduces to zero and so does every generator.
pub fn is_groebner_basis_of(basis: &[Polynomial], gens: &[&Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if !reduce(&s_polynomial(&basis[i], &basis[j]), basis.iter()).is_zero() {
                return false;
            }
        }
    }
    gens.iter().all(|g| reduce(g, basis.iter()).is_zero())
}

/// True if no term of any element is divisible by another element's
/// leading monomial and all leading coefficients are 1.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, g)| {
        g.lead_coeff() == 1
            && g.terms().iter().all(|(m, _)| {
                basis
                    .iter()
                    .enumerate()
                    .all(|(j, h)| i == j || !h.lead_monomial().unwrap().divides_unchecked(m))
            })
    })
}

/// Divide `f` by a single polynomial, returning `None` unless the division
/// is exact.
pub fn divide_exact(f: &Polynomial, d: &Polynomial) -> Option<Polynomial> {
    let ring = f.ring().clone();
    let field = *ring.field();
    let ld = d.lead_monomial()?;
    let inv = field.inv(d.lead_coeff())?;
    let mut rest = f.clone();
    let mut quotient: Vec<(Monomial, u32)> = Vec::new();
    while let Some((m, c)) = rest.lead().cloned() {
        let shift = m.div(ld)?;
        let factor = field.mul(c, inv);
        rest = rest.merge(d, field.neg(factor), Some(&shift));
        quotient.push((shift, factor));
    }
    debug_assert!(quotient
        .windows(2)
        .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
    Some(Polynomial::from_sorted(&ring, quotient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::TermOrder;
    use crate::ring::Ring;
    use alloc::sync::Arc;
    use alloc::vec;

    fn poly(r: &Arc<Ring>, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(r, terms.iter().map(|(e, c)| (Monomial::new(e.to_vec()), *c))).unwrap()
    }

    fn verified() -> GroebnerConfig {
        GroebnerConfig {
            verify: true,
            ..Default::default()
        }
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::grevlex(7, ["x", "y"]).unwrap();
        let f = poly(&r, &[(&[2, 1], 1), (&[1, 0], 1)]);
        let g = poly(&r, &[(&[2, 0], 1), (&[0, 1], -1)]);
        assert_eq!(
            normal_form(&f, core::slice::from_ref(&g)).unwrap(),
            poly(&r, &[(&[0, 2], 1), (&[1, 0], 1)])
        );
        assert!(normal_form(&f, &[Polynomial::one(&r)]).unwrap().is_zero());
        let y = Polynomial::var(&r, 1);
        assert_eq!(normal_form(&y, &[g]).unwrap(), y);
        assert!(normal_form(&y, &[Polynomial::zero(&r)]).is_err());
    }

    #[test]
    fn lex_example() {
        let r = Ring::new(5, ["x", "y"], TermOrder::Lex).unwrap();
        let g1 = poly(&r, &[(&[2, 0], 1), (&[0, 1], -1)]);
        let g2 = poly(&r, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let gb = groebner_basis(&[g1, g2], &verified()).unwrap();
        assert_eq!(
            gb,
            vec![
                poly(&r, &[(&[1, 0], 1), (&[0, 2], -1)]),
                poly(&r, &[(&[0, 3], 1), (&[0, 0], -1)]),
            ]
        );
        assert!(is_reduced(&gb));
    }

    #[test]
    fn trivial_bases() {
        let r = Ring::grevlex(7, ["x", "y"]).unwrap();
        let x = Polynomial::var(&r, 0);
        let x2 = x.pow(2).unwrap();
        assert_eq!(groebner_basis(core::slice::from_ref(&x), &verified()).unwrap(), vec![x.clone()]);
        assert_eq!(groebner_basis(&[x2, x.clone()], &verified()).unwrap(), vec![x.clone()]);
        assert!(groebner_basis(&[Polynomial::zero(&r)], &verified()).unwrap().is_empty());
        let unit = &x - &(&x - &Polynomial::constant(&r, 3));
        assert_eq!(groebner_basis(&[unit], &verified()).unwrap(), vec![Polynomial::one(&r)]);
    }

    #[test]
    fn cyclic_three() {
        let r = Ring::grevlex(32003, ["a", "b", "c"]).unwrap();
        let v = |i| Polynomial::var(&r, i);
        let (a, b, c) = (v(0), v(1), v(2));
        let f1 = &(&a + &b) + &c;
        let f2 = &(&(&a * &b) + &(&b * &c)) + &(&c * &a);
        let f3 = &(&(&a * &b) * &c) - &Polynomial::one(&r);
        let gb = groebner_basis(&[f1, f2, f3], &verified()).unwrap();
        assert!(is_reduced(&gb));
        let lms: Vec<_> = gb.iter().map(|g| g.lead_monomial().unwrap().clone()).collect();
        assert_eq!(
            lms,
            vec![Monomial::new(vec![0, 0, 3]), Monomial::new(vec![0, 2, 0]), Monomial::new(vec![1, 0, 0])]
        );
    }

    #[test]
    fn resource_guards() {
        let r = Ring::grevlex(7, ["x", "y"]).unwrap();
        let f = poly(&r, &[(&[20, 0], 1), (&[0, 1], 1)]);
        let cfg = GroebnerConfig {
            max_degree: 10,
            ..Default::default()
        };
        assert!(groebner_basis(&[f], &cfg).unwrap_err().is_resource());
        let g1 = poly(&r, &[(&[2, 0], 1), (&[0, 1], -1)]);
        let g2 = poly(&r, &[(&[1, 1], 1), (&[0, 0], -1)]);
        let cfg = GroebnerConfig {
            max_pairs: 0,
            ..Default::default()
        };
        assert!(groebner_basis(&[g1, g2], &cfg).unwrap_err().is_resource());
    }

    #[test]
    fn exact_division() {
        let r = Ring::grevlex(7, ["x", "y"]).unwrap();
        let f = poly(&r, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let g = poly(&r, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(divide_exact(&(&f * &g), &g), Some(f.clone()));
        assert_eq!(divide_exact(&f, &g), None);
    }

    #[test]
    fn deterministic() {
        let r = Ring::grevlex(101, ["x", "y", "z"]).unwrap();
        let gens = vec![
            poly(&r, &[(&[2, 1, 0], 3), (&[0, 0, 2], 1), (&[1, 0, 0], 5)]),
            poly(&r, &[(&[0, 2, 1], 1), (&[1, 1, 0], -2)]),
            poly(&r, &[(&[1, 0, 2], 1), (&[0, 1, 0], 1)]),
        ];
        let a = groebner_basis(&gens, &verified()).unwrap();
        let b = groebner_basis(&gens, &verified()).unwrap();
        assert_eq!(a, b);
    }
}
