use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::order::TermOrder;

/// Shared context for polynomials: coefficient field, variable names and
/// the term order their terms are sorted by.
///
/// Two rings are the same ring iff all three components agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    field: PrimeField,
    vars: Vec<String>,
    order: TermOrder,
}

impl Ring {
    pub fn new<S: Into<String>>(
        p: u64,
        vars: impl IntoIterator<Item = S>,
        order: TermOrder,
    ) -> Result<Arc<Ring>> {
        let field = PrimeField::new(p)?;
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Precondition(alloc::format!("duplicate variable {v}")));
            }
        }
        if let TermOrder::Elimination { block } = order {
            if block > vars.len() {
                return Err(Error::Precondition("elimination block exceeds variable count".into()));
            }
        }
        Ok(Arc::new(Ring { field, vars, order }))
    }

    /// Same field and variables, grevlex order.
    pub fn grevlex<S: Into<String>>(p: u64, vars: impl IntoIterator<Item = S>) -> Result<Arc<Ring>> {
        Ring::new(p, vars, TermOrder::GrevLex)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    #[inline]
    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: TermOrder) -> Arc<Ring> {
        Arc::new(Ring {
            field: self.field,
            vars: self.vars.clone(),
            order,
        })
    }

    /// Adjoin a fresh variable in front of the existing ones, ordered so
    /// that it is eliminated first.
    pub(crate) fn with_elimination_variable(&self) -> Arc<Ring> {
        let mut name = String::from("_t");
        while self.vars.contains(&name) {
            name.push('_');
        }
        let mut vars = Vec::with_capacity(self.vars.len() + 1);
        vars.push(name);
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring {
            field: self.field,
            vars,
            order: TermOrder::Elimination { block: 1 },
        })
    }
}

#[inline]
pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

pub(crate) fn check_same(a: &Arc<Ring>, b: &Arc<Ring>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}
