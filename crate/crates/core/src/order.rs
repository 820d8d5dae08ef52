//! Monomial orders.

use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    /// Lexicographic with `x_1 > x_2 > ... > x_n`.
    Lex,
    /// Graded reverse lexicographic.
    #[default]
    GrevLex,
    /// Block order: grevlex on the first `block` variables, ties broken by
    /// grevlex on the rest. Any monomial involving the first block is larger
    /// than every monomial free of it.
    Elimination { block: usize },
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller trailing exponent wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    /// Compare two monomials, erroring on a variable-count mismatch.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch {
                left: a.nvars(),
                right: b.nvars(),
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison for monomials already known to share a ring.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::GrevLex => grevlex(a, b),
            TermOrder::Elimination { block } => {
                let k = block.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}
