//! Ideals of a polynomial ring and the ideal calculus used by the Fedder
//! tests: membership, containment, intersection, colon and elimination.
//!
//! Zero and unit ideals short-circuit before any Gröbner run, and ideals
//! generated by monomials use exponent-lattice operations instead.

use alloc::boxed::Box;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::groebner::{divide_exact, groebner_basis, reduce, GroebnerConfig};
use crate::monomial::Monomial;
use crate::monomial_ideal as mono;
use crate::order::TermOrder;
use crate::poly::Polynomial;
use crate::ring::{check_same, Ring};

/// A finitely generated ideal together with a lazily computed reduced
/// Gröbner basis for the ring's term order.
///
/// Zero generators are stripped, so the zero ideal has no generators. The
/// Gröbner configuration travels with the ideal and is inherited by every
/// ideal derived from it.
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    config: GroebnerConfig,
    basis: OnceBox<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let basis = OnceBox::new();
        if let Some(b) = self.basis.get() {
            let _ = basis.set(Box::new(b.clone()));
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            config: self.config,
            basis,
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal({self})")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.gens.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    pub fn new(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut out = Vec::new();
        for g in gens {
            check_same(ring, g.ring())?;
            if !g.is_zero() {
                out.push(g);
            }
        }
        Ok(Self::from_parts(ring.clone(), out, GroebnerConfig::default()))
    }

    fn from_parts(ring: Arc<Ring>, gens: Vec<Polynomial>, config: GroebnerConfig) -> Ideal {
        Ideal {
            ring,
            gens,
            config,
            basis: OnceBox::new(),
        }
    }

    /// An ideal in the same ring and with the same configuration as `self`.
    fn derived(&self, gens: Vec<Polynomial>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Self::from_parts(self.ring.clone(), gens, self.config)
    }

    fn derived_monomial(&self, gens: Vec<Monomial>) -> Ideal {
        let gens = gens
            .into_iter()
            .map(|m| Polynomial::term(&self.ring, m, 1))
            .collect();
        Self::from_parts(self.ring.clone(), gens, self.config)
    }

    pub fn zero(ring: &Arc<Ring>) -> Ideal {
        Self::from_parts(ring.clone(), Vec::new(), GroebnerConfig::default())
    }

    pub fn unit(ring: &Arc<Ring>) -> Ideal {
        Self::from_parts(
            ring.clone(),
            alloc::vec![Polynomial::one(ring)],
            GroebnerConfig::default(),
        )
    }

    /// The irrelevant maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(ring: &Arc<Ring>) -> Ideal {
        Self::from_monomials(ring, (0..ring.nvars()).map(|i| Monomial::var(ring.nvars(), i)))
    }

    pub fn from_monomials(ring: &Arc<Ring>, gens: impl IntoIterator<Item = Monomial>) -> Ideal {
        let gens = gens
            .into_iter()
            .map(|m| Polynomial::term(ring, m, 1))
            .collect();
        Self::from_parts(ring.clone(), gens, GroebnerConfig::default())
    }

    pub fn principal(f: Polynomial) -> Ideal {
        let ring = f.ring().clone();
        let gens = if f.is_zero() { Vec::new() } else { alloc::vec![f] };
        Self::from_parts(ring, gens, GroebnerConfig::default())
    }

    pub fn with_config(mut self, config: GroebnerConfig) -> Ideal {
        self.config = config;
        self
    }

    pub fn config(&self) -> &GroebnerConfig {
        &self.config
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Some generator is a nonzero constant. `is_unit` decides the general case.
    fn has_unit_generator(&self) -> bool {
        self.gens.iter().any(Polynomial::is_unit)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    /// Generator monomials when every generator is a single term.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        self.is_monomial()
            .then(|| self.gens.iter().map(|g| g.terms()[0].0.clone()).collect())
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Every generator lies in `(x_1, ..., x_n)`.
    pub fn in_maximal_ideal(&self) -> bool {
        self.gens.iter().all(Polynomial::in_maximal_ideal)
    }

    /// The reduced Gröbner basis for the ring's order, computed once.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(b) = self.basis.get() {
            return Ok(b);
        }
        let b = if self.is_monomial() {
            // minimal monomial generators already form the reduced basis
            let mons = mono::minimalize(self.monomial_generators().unwrap());
            let order = self.ring.order();
            let mut g: Vec<_> = mons
                .into_iter()
                .map(|m| Polynomial::term(&self.ring, m, 1))
                .collect();
            g.sort_by(|a, b| order.cmp(b.lead_monomial().unwrap(), a.lead_monomial().unwrap()));
            g
        } else {
            groebner_basis(&self.gens, &self.config)?
        };
        // a concurrent fill computes the same value, so losing the race is harmless
        Ok(self.basis.get_or_init(|| Box::new(b)))
    }

    /// Does the ideal equal the whole ring?
    pub fn is_unit(&self) -> Result<bool> {
        if self.has_unit_generator() {
            return Ok(true);
        }
        if self.is_zero() || self.is_monomial() {
            return Ok(false);
        }
        Ok(self.groebner_basis()?.iter().any(Polynomial::is_unit))
    }

    /// The same ideal presented in a ring with a different term order.
    pub fn in_order(&self, order: TermOrder) -> Result<Ideal> {
        let ring = self.ring.with_order(order);
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_parts(ring, gens, self.config))
    }

    /// Ideal membership by reduction against the Gröbner basis.
    pub fn member(&self, f: &Polynomial) -> Result<bool> {
        check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        if self.has_unit_generator() {
            return Ok(true);
        }
        if let Some(gens) = self.monomial_generators() {
            return Ok(f.terms().iter().all(|(m, _)| mono::contains_monomial(&gens, m)));
        }
        Ok(reduce(f, self.groebner_basis()?.iter()).is_zero())
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        if other.is_zero() || self.has_unit_generator() {
            return Ok(true);
        }
        if self.is_zero() {
            return Ok(false);
        }
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            return Ok(mono::contains(&a, &b));
        }
        for g in &other.gens {
            if !self.member(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, by mutual containment.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains(other)? && other.contains(self)?)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            return Ok(self.derived_monomial(mono::product(&a, &b)));
        }
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for f in &self.gens {
            for g in &other.gens {
                gens.push(f.try_mul(g)?);
            }
        }
        Ok(self.derived(gens))
    }

    /// `I ∩ J` via `t·I + (1 − t)·J` and elimination of `t`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.derived(Vec::new()));
        }
        if self.has_unit_generator() {
            return Ok(self.derived(other.gens.clone()));
        }
        if other.has_unit_generator() {
            return Ok(self.clone());
        }
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            return Ok(self.derived_monomial(mono::intersect(&a, &b)));
        }
        let big = self.ring.with_elimination_variable();
        let t = Polynomial::var(&big, 0);
        let one_minus_t = &Polynomial::one(&big) - &t;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(t.try_mul(&f.embed_front(&big, 1))?);
        }
        for g in &other.gens {
            gens.push(one_minus_t.try_mul(&g.embed_front(&big, 1))?);
        }
        let basis = groebner_basis(&gens, &self.config)?;
        let kept = basis
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(|g| g.project_front(&self.ring, 1))
            .collect();
        Ok(self.derived(kept))
    }

    /// `(J : f)` as `(J ∩ (f)) / f`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Err(Error::Precondition("colon by the zero polynomial".into()));
        }
        if f.is_unit() || self.is_zero() {
            return Ok(self.clone());
        }
        if self.member(f)? {
            return Ok(self.derived(alloc::vec![Polynomial::one(&self.ring)]));
        }
        if let (Some(a), true) = (self.monomial_generators(), f.is_monomial()) {
            return Ok(self.derived_monomial(mono::colon_monomial(&a, &f.terms()[0].0)));
        }
        let principal = self.derived(alloc::vec![f.clone()]);
        let meet = self.intersect(&principal)?;
        let gens = meet
            .gens
            .iter()
            .map(|g| {
                divide_exact(g, f).ok_or_else(|| {
                    Error::Internal(format!("intersection generator {g} not divisible by {f}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(self.derived(gens))
    }

    /// `(J : I)` as the intersection of `(J : f)` over generators `f` of `I`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if other.is_zero() {
            return Err(Error::Precondition("colon by the zero ideal".into()));
        }
        if other.has_unit_generator() {
            return Ok(self.clone());
        }
        if self.contains(other)? {
            return Ok(self.derived(alloc::vec![Polynomial::one(&self.ring)]));
        }
        if let (Some(a), Some(b)) = (self.monomial_generators(), other.monomial_generators()) {
            return Ok(self.derived_monomial(mono::colon(&a, &b)));
        }
        let mut acc: Option<Ideal> = None;
        for f in &other.gens {
            let c = self.colon_poly(f)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.expect("nonzero ideal has a generator"))
    }

    /// `I ∩ k[x_{count+1}, ..., x_n]`, returned in the original ring.
    pub fn eliminate(&self, count: usize) -> Result<Ideal> {
        if count >= self.ring.nvars() {
            return Err(Error::Precondition(format!(
                "cannot eliminate {count} of {} variables",
                self.ring.nvars()
            )));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let ring = self.ring.with_order(TermOrder::Elimination { block: count });
        let gens = self
            .gens
            .iter()
            .map(|g| g.to_ring(&ring))
            .collect::<Result<Vec<_>>>()?;
        let basis = groebner_basis(&gens, &self.config)?;
        let kept = basis
            .iter()
            .filter(|g| {
                g.terms()
                    .iter()
                    .all(|(m, _)| m.exponents()[..count].iter().all(|&e| e == 0))
            })
            .map(|g| g.to_ring(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.derived(kept))
    }
}
