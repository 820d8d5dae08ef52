//! Fedder-type criteria for F-purity and strong F-regularity of pairs over
//! prime fields, Frobenius bracket powers, ν-sequences and exact F-pure
//! thresholds of monomial ideals.
//!
//! The crate is `no_std` and only needs `alloc`. Everything that touches the
//! file system, the clock or the command line lives in the `fpure` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod adjunction;
pub mod error;
pub mod fedder;
pub mod field;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod lp;
pub mod monomial;
pub mod monomial_ideal;
pub mod order;
pub mod parse;
pub mod poly;
pub mod polytope;
pub mod rational;
pub mod ring;

pub use error::{Error, Result};
pub use fedder::{Certificate, Convention, FptReport, NuValue, PairSpec, Witness};
pub use field::PrimeField;
pub use frobenius::{FrobExponent, RationalExponent};
pub use groebner::GroebnerConfig;
pub use ideal::Ideal;
pub use monomial::Monomial;
pub use order::TermOrder;
pub use parse::{parse_polynomial, ParseError};
pub use poly::Polynomial;
pub use polytope::{NewtonPolytope, Threshold};
pub use rational::ExactRational;
pub use ring::Ring;
