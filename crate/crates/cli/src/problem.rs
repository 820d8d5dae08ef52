//! JSON problem files.
//!
//! ```json
//! {"p": 7, "vars": ["x", "y", "z"],
//!  "ideals": {"I": ["x^2 + y^3 + z^5"], "m": ["x", "y", "z"]},
//!  "pair": {"quotient": "I", "terms": [{"ideal": "m", "t": "1/6"}]},
//!  "convention": "floor"}
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use fpure_core::{
    parse_polynomial, Convention, Ideal, ParseError, PairSpec, Polynomial, RationalExponent, Ring,
    TermOrder,
};
use serde::Deserialize;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub p: u64,
    pub vars: Vec<String>,
    #[serde(default)]
    pub ideals: BTreeMap<String, Vec<String>>,
    #[serde(default)]
    pub pair: Option<PairFile>,
    #[serde(default)]
    pub convention: Option<String>,
    #[serde(default)]
    pub q_range: Option<QRange>,
    /// `"grevlex"` (default) or `"lex"`.
    #[serde(default)]
    pub order: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairFile {
    pub quotient: String,
    #[serde(default)]
    pub terms: Vec<TermFile>,
    #[serde(default)]
    pub height: Option<u64>,
    /// Extra factor `c` for the witness forms of the tests.
    #[serde(default)]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermFile {
    pub ideal: String,
    pub t: String,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QRange {
    pub e_min: u32,
    pub e_max: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProblemError {
    Json(String),
    /// A generator failed to parse.
    Polynomial {
        ideal: String,
        index: usize,
        error: ParseError,
    },
    UnknownIdeal(String),
    Invalid(String),
}

impl fmt::Display for ProblemError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemError::Json(msg) => write!(f, "malformed problem file: {msg}"),
            ProblemError::Polynomial { ideal, index, error } => {
                write!(f, "ideal {ideal}, generator {index}: {error}")
            }
            ProblemError::UnknownIdeal(name) => write!(f, "unknown ideal name {name}"),
            ProblemError::Invalid(msg) => write!(f, "invalid problem: {msg}"),
        }
    }
}

impl std::error::Error for ProblemError {}

/// A problem file with every expression parsed and every name resolved.
#[derive(Debug, Clone)]
pub struct Problem {
    pub ring: Arc<Ring>,
    pub ideals: BTreeMap<String, Ideal>,
    /// `None` for the ambient ring.
    pub quotient_name: Option<String>,
    pub quotient: Ideal,
    pub terms: Vec<(String, Ideal, RationalExponent)>,
    pub height: Option<u64>,
    pub witness: Option<Polynomial>,
    pub convention: Convention,
    pub q_range: Option<QRange>,
}

fn invalid(msg: impl Into<String>) -> ProblemError {
    ProblemError::Invalid(msg.into())
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Problem, ProblemError> {
        let file: ProblemFile =
            serde_json::from_str(text).map_err(|e| ProblemError::Json(e.to_string()))?;
        Problem::from_file(file)
    }

    pub fn from_file(file: ProblemFile) -> Result<Problem, ProblemError> {
        let order = match file.order.as_deref() {
            None | Some("grevlex") => TermOrder::GrevLex,
            Some("lex") => TermOrder::Lex,
            Some(other) => return Err(invalid(format!("unknown term order {other}"))),
        };
        let ring = Ring::new(file.p, file.vars.iter().map(String::as_str), order)
            .map_err(|e| invalid(e.to_string()))?;
        let mut ideals = BTreeMap::new();
        for (name, gens) in &file.ideals {
            let mut polys = Vec::with_capacity(gens.len());
            for (index, g) in gens.iter().enumerate() {
                let poly = parse_polynomial(g, &ring).map_err(|error| ProblemError::Polynomial {
                    ideal: name.clone(),
                    index,
                    error,
                })?;
                polys.push(poly);
            }
            let ideal = Ideal::new(&ring, polys).map_err(|e| invalid(e.to_string()))?;
            ideals.insert(name.clone(), ideal);
        }
        let lookup = |name: &str| {
            ideals
                .get(name)
                .cloned()
                .ok_or_else(|| ProblemError::UnknownIdeal(name.to_string()))
        };
        let convention = match file.convention.as_deref() {
            None => Convention::Floor,
            Some(c) => c.parse().map_err(|_| invalid(format!("unknown convention {c}")))?,
        };
        let (mut quotient_name, mut quotient) = (None, Ideal::zero(&ring));
        let (mut terms, mut height, mut witness) = (Vec::new(), None, None);
        if let Some(pair) = &file.pair {
            if pair.quotient != "0" {
                quotient = lookup(&pair.quotient)?;
                quotient_name = Some(pair.quotient.clone());
            }
            for term in &pair.terms {
                let t: RationalExponent = term
                    .t
                    .parse()
                    .map_err(|_| invalid(format!("exponent {} is not a positive fraction", term.t)))?;
                terms.push((term.ideal.clone(), lookup(&term.ideal)?, t));
            }
            if let Some(h) = pair.height {
                if h == 0 || h as usize > ring.nvars() {
                    return Err(invalid(format!(
                        "height {h} must lie between 1 and {}",
                        ring.nvars()
                    )));
                }
                height = Some(h);
            }
            if let Some(c) = &pair.witness {
                let poly = parse_polynomial(c, &ring).map_err(|error| ProblemError::Polynomial {
                    ideal: "witness".into(),
                    index: 0,
                    error,
                })?;
                witness = Some(poly);
            }
        }
        if let Some(r) = file.q_range {
            if r.e_min == 0 || r.e_min > r.e_max {
                return Err(invalid("q_range needs 1 <= e_min <= e_max"));
            }
        }
        Ok(Problem {
            ring,
            ideals,
            quotient_name,
            quotient,
            terms,
            height,
            witness,
            convention,
            q_range: file.q_range,
        })
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal, ProblemError> {
        self.ideals
            .get(name)
            .ok_or_else(|| ProblemError::UnknownIdeal(name.to_string()))
    }

    pub fn pair_spec(&self, convention: Convention) -> Result<PairSpec, fpure_core::Error> {
        PairSpec::new(
            self.quotient.clone(),
            self.terms.iter().map(|(_, a, t)| (a.clone(), *t)).collect(),
            convention,
        )
    }

    /// The single pair ideal used by ν and threshold commands.
    pub fn single_term(&self) -> Result<&Ideal, ProblemError> {
        match self.terms.as_slice() {
            [(_, a, _)] => Ok(a),
            _ => Err(invalid("this command needs exactly one pair term")),
        }
    }
}
