//! Containments between `(I^[q] : I)` and ordinary powers of `I`.
//!
//! For an unmixed reduced ideal of height `h` one expects
//! `I^{h(q−1)} ⊆ (I^[q] : I) ⊆ I^{q−1}`. Neither hypothesis is checked
//! here; both functions just return the computed boolean.

use crate::error::{Error, Result};
use crate::frobenius::{colon_bracket, ideal_power, FrobExponent};
use crate::ideal::Ideal;
use crate::monomial_ideal::{contains_monomial, power_outside};

fn check_q(ideal: &Ideal, q: FrobExponent) -> Result<()> {
    if ideal.ring().characteristic() != q.p() {
        return Err(Error::Precondition(alloc::format!(
            "q = {q} is not a power of the characteristic {}",
            ideal.ring().characteristic()
        )));
    }
    Ok(())
}

/// `(I^[q] : I) ⊆ I^{q−1}`.
pub fn check_colon_containment(ideal: &Ideal, q: FrobExponent) -> Result<bool> {
    check_q(ideal, q)?;
    let n = q.q() as u64 - 1;
    if ideal.monomial_generators().is_none() {
        // the power is cheap to reject, so build it before the colon
        let power = ideal_power(ideal, n)?;
        return power.contains(&colon_bracket(ideal, q)?);
    }
    let colon = colon_bracket(ideal, q)?;
    if let (Some(a), Some(c)) = (ideal.monomial_generators(), colon.monomial_generators()) {
        let nvars = ideal.ring().nvars();
        // g ∈ I^n iff some generator of I^n divides g
        return Ok(c.iter().all(|g| {
            !power_outside(&a, n, nvars, |m| !m.divides_unchecked(g)).is_empty()
        }));
    }
    ideal_power(ideal, n)?.contains(&colon)
}

/// `I^{h(q−1)} ⊆ (I^[q] : I)`.
pub fn check_height_containment(ideal: &Ideal, h: u64, q: FrobExponent) -> Result<bool> {
    check_q(ideal, q)?;
    let n = h
        .checked_mul(q.q() as u64 - 1)
        .ok_or(Error::ExponentOverflow)?;
    if ideal.monomial_generators().is_none() {
        let power = ideal_power(ideal, n)?;
        return colon_bracket(ideal, q)?.contains(&power);
    }
    let colon = colon_bracket(ideal, q)?;
    if let (Some(a), Some(c)) = (ideal.monomial_generators(), colon.monomial_generators()) {
        let nvars = ideal.ring().nvars();
        return Ok(power_outside(&a, n, nvars, |m| contains_monomial(&c, m)).is_empty());
    }
    colon.contains(&ideal_power(ideal, n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::ring::Ring;
    use alloc::sync::Arc;

    fn ideal(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|g| parse_polynomial(g, r).unwrap())).unwrap()
    }

    fn q(p: u32, e: u32) -> FrobExponent {
        FrobExponent::new(p, e).unwrap()
    }

    #[test]
    fn colon_examples() {
        let r = Ring::grevlex(3, ["x", "y"]).unwrap();
        assert!(check_colon_containment(&ideal(&r, &["x*y"]), q(3, 1)).unwrap());
        let r2 = Ring::grevlex(2, ["x", "y", "z"]).unwrap();
        assert!(check_colon_containment(&ideal(&r2, &["x*y", "x*z", "y*z"]), q(2, 1)).unwrap());
        assert!(check_colon_containment(&ideal(&r2, &["x^2"]), q(2, 1)).unwrap());
    }

    #[test]
    fn height_examples() {
        let r = Ring::grevlex(3, ["x", "y"]).unwrap();
        assert!(check_height_containment(&ideal(&r, &["x*y"]), 1, q(3, 1)).unwrap());
        let r2 = Ring::grevlex(2, ["x", "y", "z"]).unwrap();
        assert!(check_height_containment(&ideal(&r2, &["x*y", "x*z", "y*z"]), 2, q(2, 1)).unwrap());
        assert!(check_height_containment(&ideal(&r2, &["x", "y"]), 2, q(2, 1)).unwrap());
    }

    #[test]
    fn overstated_height_can_fail() {
        // h = 0 asks (1) ⊆ (I^[q] : I)
        let r = Ring::grevlex(2, ["x", "y"]).unwrap();
        assert!(!check_height_containment(&ideal(&r, &["x", "y"]), 0, q(2, 1)).unwrap());
    }

    #[test]
    fn monomial_and_general_paths_agree() {
        let r = Ring::grevlex(3, ["x", "y", "z"]).unwrap();
        let mono = ideal(&r, &["x*y", "y*z"]);
        // same ideal, presented with a non-monomial generator
        let mixed = ideal(&r, &["x*y + y*z", "y*z"]);
        for e in 1..=2 {
            let qq = q(3, e);
            assert_eq!(
                check_colon_containment(&mono, qq).unwrap(),
                check_colon_containment(&mixed, qq).unwrap()
            );
            assert_eq!(
                check_height_containment(&mono, 1, qq).unwrap(),
                check_height_containment(&mixed, 1, qq).unwrap()
            );
        }
    }

    #[test]
    fn wrong_characteristic() {
        let r = Ring::grevlex(3, ["x"]).unwrap();
        assert!(check_colon_containment(&ideal(&r, &["x"]), q(2, 1)).is_err());
    }
}
