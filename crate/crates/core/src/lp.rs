//! Exact two-phase simplex over the rationals.
//!
//! Variables are nonnegative. Pivoting follows Bland's rule (lowest index
//! entering, lowest basic index on ratio ties), so the method terminates.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rational::ExactRational as Q;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Q>,
    pub relation: Relation,
    pub rhs: Q,
}

impl Constraint {
    pub fn new(coeffs: Vec<Q>, relation: Relation, rhs: Q) -> Self {
        Constraint {
            coeffs,
            relation,
            rhs,
        }
    }

    fn satisfied_by(&self, x: &[Q]) -> bool {
        let lhs = self
            .coeffs
            .iter()
            .zip(x)
            .fold(Q::zero(), |acc, (a, v)| &acc + &(a * v));
        match self.relation {
            Relation::Le => lhs <= self.rhs,
            Relation::Ge => lhs >= self.rhs,
            Relation::Eq => lhs == self.rhs,
        }
    }
}

/// Minimize `objective · x` subject to `constraints` and `x >= 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProgram {
    pub objective: Vec<Q>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub optimum: Q,
    pub point: Vec<Q>,
}

struct Tableau {
    /// rows of `[a_1 .. a_cols | b]`
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v = &*v - &(&f * p);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimize `cost · x` from the current basic feasible solution,
    /// never letting columns with `allowed[j] == false` enter.
    fn optimize(&mut self, cost: &[Q], allowed: &[bool]) -> Result<()> {
        loop {
            // reduced cost r_j = c_j - sum_i c_{B(i)} a_ij
            let entering = (0..self.cols).find(|&j| {
                if !allowed[j] || self.basis.contains(&j) {
                    return false;
                }
                let mut r = cost[j].clone();
                for (i, row) in self.rows.iter().enumerate() {
                    let cb = &cost[self.basis[i]];
                    if !cb.is_zero() && !row[j].is_zero() {
                        r = &r - &(cb * &row[j]);
                    }
                }
                r.is_negative()
            });
            let Some(c) = entering else {
                return Ok(());
            };
            let mut best: Option<(usize, Q)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[self.cols] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, c);
        }
    }

    fn objective_value(&self, cost: &[Q]) -> Q {
        self.rows
            .iter()
            .zip(&self.basis)
            .fold(Q::zero(), |acc, (row, &b)| &acc + &(&cost[b] * &row[self.cols]))
    }
}

/// Solve a linear program exactly. Infeasible and unbounded programs are
/// reported as [`Error::Infeasible`] and [`Error::Unbounded`].
pub fn solve_lp_min(lp: &LinearProgram) -> Result<LpSolution> {
    let n = lp.objective.len();
    for c in &lp.constraints {
        if c.coeffs.len() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: c.coeffs.len(),
            });
        }
    }
    // normalize to nonnegative right-hand sides
    let normalized: Vec<Constraint> = lp
        .constraints
        .iter()
        .map(|c| {
            if c.rhs.is_negative() {
                Constraint {
                    coeffs: c.coeffs.iter().map(|a| -a.clone()).collect(),
                    relation: match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    },
                    rhs: -c.rhs.clone(),
                }
            } else {
                c.clone()
            }
        })
        .collect();

    let m = normalized.len();
    let slacks = normalized.iter().filter(|c| c.relation != Relation::Eq).count();
    let artificials = normalized.iter().filter(|c| c.relation != Relation::Le).count();
    let cols = n + slacks + artificials;
    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let (mut s, mut a) = (n, n + slacks);
    for c in &normalized {
        let mut row = alloc::vec![Q::zero(); cols + 1];
        row[..n].clone_from_slice(&c.coeffs);
        row[cols] = c.rhs.clone();
        match c.relation {
            Relation::Le => {
                row[s] = Q::one();
                basis.push(s);
                s += 1;
            }
            Relation::Ge => {
                row[s] = -Q::one();
                s += 1;
                row[a] = Q::one();
                basis.push(a);
                a += 1;
            }
            Relation::Eq => {
                row[a] = Q::one();
                basis.push(a);
                a += 1;
            }
        }
        rows.push(row);
    }
    let mut t = Tableau { rows, basis, cols };
    let is_artificial = |j: usize| j >= n + slacks;

    if artificials > 0 {
        let cost: Vec<Q> = (0..cols)
            .map(|j| if is_artificial(j) { Q::one() } else { Q::zero() })
            .collect();
        t.optimize(&cost, &alloc::vec![true; cols])?;
        if !t.objective_value(&cost).is_zero() {
            return Err(Error::Infeasible);
        }
        // drive zero-valued artificials out of the basis, dropping redundant rows
        let mut i = 0;
        while i < t.rows.len() {
            if is_artificial(t.basis[i]) {
                match (0..n + slacks).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut cost = alloc::vec![Q::zero(); cols];
    cost[..n].clone_from_slice(&lp.objective);
    let allowed: Vec<bool> = (0..cols).map(|j| !is_artificial(j)).collect();
    t.optimize(&cost, &allowed)?;

    let mut point = alloc::vec![Q::zero(); n];
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        if b < n {
            point[b] = row[cols].clone();
        }
    }
    if point.iter().any(Q::is_negative) || !lp.constraints.iter().all(|c| c.satisfied_by(&point)) {
        return Err(Error::Internal("simplex returned an infeasible point".into()));
    }
    let optimum = lp
        .objective
        .iter()
        .zip(&point)
        .fold(Q::zero(), |acc, (c, x)| &acc + &(c * x));
    Ok(LpSolution { optimum, point })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(n: i64, d: i64) -> Q {
        Q::new(n, d)
    }

    fn int(n: i64) -> Q {
        Q::from_integer(n)
    }

    #[test]
    fn single_lower_bound() {
        let lp = LinearProgram {
            objective: vec![int(1)],
            constraints: vec![Constraint::new(vec![int(1)], Relation::Ge, int(1))],
        };
        let sol = solve_lp_min(&lp).unwrap();
        assert_eq!(sol.optimum, int(1));
    }

    #[test]
    fn two_generator_threshold() {
        // variables (l1, l2, s)
        let lp = LinearProgram {
            objective: vec![int(0), int(0), int(1)],
            constraints: vec![
                Constraint::new(vec![int(1), int(1), int(0)], Relation::Eq, int(1)),
                Constraint::new(vec![int(2), int(0), int(-1)], Relation::Le, int(0)),
                Constraint::new(vec![int(0), int(3), int(-1)], Relation::Le, int(0)),
            ],
        };
        let sol = solve_lp_min(&lp).unwrap();
        assert_eq!(sol.optimum, q(6, 5));
        assert_eq!(sol.point, vec![q(3, 5), q(2, 5), q(6, 5)]);
    }

    #[test]
    fn infeasible() {
        let lp = LinearProgram {
            objective: vec![int(0)],
            constraints: vec![
                Constraint::new(vec![int(1)], Relation::Eq, int(1)),
                Constraint::new(vec![int(1)], Relation::Le, int(-1)),
            ],
        };
        assert_eq!(solve_lp_min(&lp), Err(Error::Infeasible));
    }

    #[test]
    fn unbounded() {
        let lp = LinearProgram {
            objective: vec![int(-1), int(0)],
            constraints: vec![Constraint::new(vec![int(1), int(-1)], Relation::Le, int(1))],
        };
        assert_eq!(solve_lp_min(&lp), Err(Error::Unbounded));
    }

    #[test]
    fn redundant_equalities() {
        let lp = LinearProgram {
            objective: vec![int(1), int(2)],
            constraints: vec![
                Constraint::new(vec![int(1), int(1)], Relation::Eq, int(2)),
                Constraint::new(vec![int(2), int(2)], Relation::Eq, int(4)),
                Constraint::new(vec![int(1), int(0)], Relation::Le, int(3)),
            ],
        };
        let sol = solve_lp_min(&lp).unwrap();
        assert_eq!(sol.optimum, int(2));
    }

    /// Brute force over vertices of a small 2D polytope.
    #[test]
    fn matches_vertex_enumeration() {
        // min 3x - 2y  s.t. x + y <= 4, x - y >= -2, y <= 3, x <= 3
        let lp = LinearProgram {
            objective: vec![int(3), int(-2)],
            constraints: vec![
                Constraint::new(vec![int(1), int(1)], Relation::Le, int(4)),
                Constraint::new(vec![int(1), int(-1)], Relation::Ge, int(-2)),
                Constraint::new(vec![int(0), int(1)], Relation::Le, int(3)),
                Constraint::new(vec![int(1), int(0)], Relation::Le, int(3)),
            ],
        };
        // the optimum -4 sits at the vertex (0, 2), which lies on the grid below
        let mut best = None::<Q>;
        for x in 0..=12 {
            for y in 0..=12 {
                let p = [q(x, 3), q(y, 3)];
                if lp.constraints.iter().all(|c| c.satisfied_by(&p)) {
                    let v = &(&int(3) * &p[0]) - &(&int(2) * &p[1]);
                    best = Some(best.map_or(v.clone(), |b| if v < b { v } else { b }));
                }
            }
        }
        let sol = solve_lp_min(&lp).unwrap();
        assert_eq!(Some(sol.optimum), best);
    }
}
