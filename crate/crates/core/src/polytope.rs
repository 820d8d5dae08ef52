//! F-pure thresholds of monomial ideals from their Newton polytopes.
//!
//! For a monomial ideal `a` with generator exponents `v_1, ..., v_m` the
//! threshold is `max { t : (1, ..., 1) ∈ t·P(a) }` where
//! `P(a) = conv(v_j) + R_{>=0}^n`. Equivalently it is `1 / s*` with
//!
//! ```text
//! s* = min s  subject to  sum_j λ_j v_j <= s·(1, ..., 1),  sum_j λ_j = 1,  λ >= 0.
//! ```
//!
//! The recession cone never lowers `s`, so only convex combinations of the
//! generators enter the program.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::lp::{solve_lp_min, Constraint, LinearProgram, Relation};
use crate::monomial::Monomial;
use crate::monomial_ideal::minimalize;
use crate::rational::ExactRational as Q;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolytope {
    dim: usize,
    /// Exponent vectors of the minimal generators.
    vertices: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    Finite(Q),
    /// The ideal is not inside the maximal ideal.
    Infinite,
}

impl Threshold {
    pub fn finite(&self) -> Option<&Q> {
        match self {
            Threshold::Finite(q) => Some(q),
            Threshold::Infinite => None,
        }
    }
}

impl NewtonPolytope {
    /// Build from generator exponent vectors; dominated generators are pruned.
    pub fn new(dim: usize, generators: Vec<Monomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Precondition("Newton polytope of the zero ideal".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.nvars() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: g.nvars(),
            });
        }
        Ok(NewtonPolytope {
            dim,
            vertices: minimalize(generators),
        })
    }

    pub fn of_ideal(ideal: &Ideal) -> Result<Self> {
        let gens = ideal
            .monomial_generators()
            .ok_or_else(|| Error::Precondition("Newton polytope needs a monomial ideal".into()))?;
        NewtonPolytope::new(ideal.ring().nvars(), gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_candidates(&self) -> &[Monomial] {
        &self.vertices
    }

    /// Rows `sum_j λ_j v_ji - s <= 0` (with `s` as the last variable when
    /// `with_s`), plus `sum_j λ_j = 1`.
    fn constraints(&self, bound: Option<&Q>) -> Vec<Constraint> {
        let m = self.vertices.len();
        let width = if bound.is_some() { m } else { m + 1 };
        let mut rows = Vec::with_capacity(self.dim + 1);
        let mut convex = alloc::vec![Q::one(); m];
        convex.resize(width, Q::zero());
        rows.push(Constraint::new(convex, Relation::Eq, Q::one()));
        for i in 0..self.dim {
            let mut coeffs: Vec<Q> = self
                .vertices
                .iter()
                .map(|v| Q::from_integer(v.exponents()[i] as i64))
                .collect();
            match bound {
                Some(b) => rows.push(Constraint::new(coeffs, Relation::Le, b.clone())),
                None => {
                    coeffs.push(-Q::one());
                    rows.push(Constraint::new(coeffs, Relation::Le, Q::zero()));
                }
            }
        }
        rows
    }

    pub fn threshold(&self) -> Result<Threshold> {
        if self.vertices.iter().any(Monomial::is_one) {
            return Ok(Threshold::Infinite);
        }
        let m = self.vertices.len();
        let mut objective = alloc::vec![Q::zero(); m];
        objective.push(Q::one());
        let lp = LinearProgram {
            objective,
            constraints: self.constraints(None),
        };
        let sol = solve_lp_min(&lp)?;
        if !sol.optimum.is_positive() {
            return Err(Error::Internal("nonpositive polytope scaling for a proper ideal".into()));
        }
        Ok(Threshold::Finite(sol.optimum.recip()))
    }

    /// Is `(1, ..., 1) ∈ t·P`?
    pub fn contains_scaled_unit_point(&self, t: &Q) -> Result<bool> {
        if !t.is_positive() {
            return Err(Error::Precondition("scaling factor must be positive".into()));
        }
        let lp = LinearProgram {
            objective: alloc::vec![Q::zero(); self.vertices.len()],
            constraints: self.constraints(Some(&t.recip())),
        };
        match solve_lp_min(&lp) {
            Ok(_) => Ok(true),
            Err(Error::Infeasible) => Ok(false),
            Err(e) => Err(e),
        }
    }
}

/// The F-pure threshold of a monomial ideal.
pub fn fpt_monomial(ideal: &Ideal) -> Result<Threshold> {
    NewtonPolytope::of_ideal(ideal)?.threshold()
}

pub fn point_in_scaled_polytope(polytope: &NewtonPolytope, t: &Q) -> Result<bool> {
    polytope.contains_scaled_unit_point(t)
}
