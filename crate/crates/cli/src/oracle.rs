//! Reference computations that avoid Gröbner bases entirely. Used to
//! cross-check the core crate.

use std::collections::HashMap;

use fpure_core::{Monomial, Polynomial, PrimeField};

/// All exponent vectors in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if cur.len() == n {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(n, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Row-echelon basis of a subspace of `F_p^cols`, keyed by pivot column.
struct Echelon {
    field: PrimeField,
    rows: HashMap<usize, Vec<u32>>,
}

impl Echelon {
    fn reduce(&self, v: &mut [u32]) -> Option<usize> {
        for col in 0..v.len() {
            if v[col] == 0 {
                continue;
            }
            match self.rows.get(&col) {
                Some(row) => {
                    let c = v[col];
                    for (x, r) in v[col..].iter_mut().zip(&row[col..]) {
                        *x = self.field.sub(*x, self.field.mul(c, *r));
                    }
                }
                None => return Some(col),
            }
        }
        None
    }

    fn insert(&mut self, mut v: Vec<u32>) {
        if let Some(col) = self.reduce(&mut v) {
            let inv = self.field.inv(v[col]).expect("nonzero pivot");
            for x in v.iter_mut() {
                *x = self.field.mul(*x, inv);
            }
            self.rows.insert(col, v);
        }
    }
}

/// Decides `f ∈ (gens)` among combinations `Σ c_i g_i` with
/// `deg(c_i g_i) <= degree`, by linear algebra on the Macaulay matrix.
///
/// A `true` answer is always correct; `false` only rules out cofactors of
/// bounded degree.
pub fn macaulay_member(f: &Polynomial, gens: &[Polynomial], degree: u32) -> bool {
    if f.is_zero() {
        return true;
    }
    if f.total_degree() > degree as u64 {
        return false;
    }
    let ring = f.ring();
    let field = *ring.field();
    let cols = monomials_up_to(ring.nvars(), degree);
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let to_vec = |p: &Polynomial| {
        let mut v = vec![0u32; cols.len()];
        for (m, c) in p.terms() {
            v[index[m]] = *c;
        }
        v
    };
    let mut ech = Echelon {
        field,
        rows: HashMap::new(),
    };
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let gd = g.total_degree();
        if gd > degree as u64 {
            continue;
        }
        for m in &cols {
            if m.degree() + gd <= degree as u64 {
                let row = g.mul_term(m, 1).expect("degree bounded");
                ech.insert(to_vec(&row));
            }
        }
    }
    ech.reduce(&mut to_vec(f)).is_none()
}

/// `n! / (k_1! ··· k_r!) mod p` via Lucas' theorem digit by digit.
pub fn multinomial_mod_p(parts: &[u64], p: u32) -> u32 {
    let field = PrimeField::new(p as u64).expect("prime");
    let p = p as u64;
    let mut parts = parts.to_vec();
    let mut acc = 1u32;
    while parts.iter().any(|&k| k > 0) {
        let digits: Vec<u64> = parts.iter().map(|k| k % p).collect();
        let sum: u64 = digits.iter().sum();
        if sum >= p {
            return 0;
        }
        let fact = |n: u64| (1..=n).fold(1u32, |a, i| field.mul(a, i as u32));
        let mut term = fact(sum);
        for &d in &digits {
            term = field.mul(term, field.inv(fact(d)).expect("digits below p"));
        }
        acc = field.mul(acc, term);
        for k in parts.iter_mut() {
            *k /= p;
        }
    }
    acc
}

/// Coefficient of `target` in `f^n`, as a sum over compositions of `n`
/// indexed by the terms of `f`.
pub fn power_coefficient(f: &Polynomial, n: u64, target: &Monomial) -> u32 {
    let field = *f.ring().field();
    let p = field.characteristic();
    let terms = f.terms();
    let mut total = 0u32;
    let mut split = vec![0u64; terms.len()];
    fn rec(
        i: usize,
        left: u64,
        split: &mut Vec<u64>,
        terms: &[(Monomial, u32)],
        visit: &mut dyn FnMut(&[u64]),
    ) {
        if i + 1 == terms.len() {
            split[i] = left;
            visit(split);
            return;
        }
        for k in 0..=left {
            split[i] = k;
            rec(i + 1, left - k, split, terms, visit);
        }
    }
    if terms.is_empty() {
        return u32::from(n == 0 && target.is_one());
    }
    let mut visit = |ks: &[u64]| {
        let mut exps = vec![0u64; target.nvars()];
        for ((m, _), &k) in terms.iter().zip(ks) {
            for (e, &me) in exps.iter_mut().zip(m.exponents()) {
                *e += me as u64 * k;
            }
        }
        if exps.iter().zip(target.exponents()).all(|(a, &b)| *a == b as u64) {
            let mut c = multinomial_mod_p(ks, p);
            for ((_, coef), &k) in terms.iter().zip(ks) {
                c = field.mul(c, field.pow(*coef, k));
            }
            total = field.add(total, c);
        }
    };
    rec(0, n, &mut split, terms, &mut visit);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use fpure_core::{parse_polynomial, Ring};

    #[test]
    fn counts_monomials() {
        assert_eq!(monomials_up_to(3, 6).len(), 84);
        assert_eq!(monomials_up_to(1, 4).len(), 5);
    }

    #[test]
    fn lucas_examples() {
        assert_eq!(multinomial_mod_p(&[3, 2, 1], 7), 60 % 7);
        assert_eq!(multinomial_mod_p(&[24, 16, 8], 7), 60 * 60 % 7);
        assert_eq!(multinomial_mod_p(&[1, 1], 2), 0);
        assert_eq!(multinomial_mod_p(&[4, 2], 5), 15 % 5);
    }

    #[test]
    fn e8_witness_coefficient() {
        let r = Ring::grevlex(7, ["x", "y", "z"]).unwrap();
        let f = parse_polynomial("x^2 + y^3 + z^5", &r).unwrap();
        let m = Monomial::new(vec![6, 6, 5]);
        assert_eq!(power_coefficient(&f, 6, &m), 4);
        assert_eq!(f.pow(6).unwrap().coefficient(&m), 4);
    }

    #[test]
    fn macaulay_small_cases() {
        let r = Ring::grevlex(5, ["x", "y"]).unwrap();
        let g = [parse_polynomial("x^2 - y", &r).unwrap()];
        let f = parse_polynomial("x^4 - y^2", &r).unwrap();
        assert!(macaulay_member(&f, &g, 4));
        assert!(!macaulay_member(&parse_polynomial("x", &r).unwrap(), &g, 6));
        // 1 = (x + 1) - x needs degree 1 cofactors only
        let h = [parse_polynomial("x + 1", &r).unwrap(), parse_polynomial("x", &r).unwrap()];
        assert!(macaulay_member(&Polynomial::one(&r), &h, 1));
    }
}
