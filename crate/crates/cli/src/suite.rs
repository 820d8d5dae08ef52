//! The built-in example suite: a fixed list of checks with deterministic
//! inputs (fixed seeds), each reporting pass or fail with a short detail.

use std::fmt::Write as _;
use std::sync::Arc;

use fpure_core::adjunction::{check_colon_containment, check_height_containment};
use fpure_core::fedder::{fedder_fpure_at_q, nu_value, verify_certificate};
use fpure_core::frobenius::{bracket_power, term_outside_bracket_m};
use fpure_core::monomial_ideal::power_outside;
use fpure_core::poly::render_monomial;
use fpure_core::polytope::fpt_monomial;
use fpure_core::{
    parse_polynomial, Convention, Error, ExactRational, FrobExponent, Ideal, Monomial, PairSpec,
    Polynomial, RationalExponent, Ring,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::oracle::{macaulay_member, monomials_up_to, multinomial_mod_p, power_coefficient};

/// Degree bound used by the linear-algebra membership oracle.
pub const MACAULAY_DEGREE: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItemResult {
    pub id: u32,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl ItemResult {
    pub fn to_json(&self) -> Value {
        json!({ "item": self.id, "name": self.name, "pass": self.pass, "detail": self.detail })
    }
}

type Outcome = Result<(bool, String), Error>;
type Item = (u32, &'static str, fn() -> Outcome);

pub const ITEMS: [Item; 8] = [
    (1, "monomial-thresholds", monomial_thresholds),
    (2, "e8-nu-bound", e8_nu_bound),
    (3, "fedder-hypersurface", fedder_hypersurface),
    (4, "pigeonhole-chain", pigeonhole_chain),
    (5, "colon-height-containments", containment_corpus),
    (6, "groebner-oracle", groebner_oracle),
    (7, "frobenius-flatness", frobenius_flatness),
    (8, "nu-scaling", nu_scaling),
];

pub fn run_item(id: u32) -> Option<ItemResult> {
    let &(id, name, f) = ITEMS.iter().find(|(i, _, _)| *i == id)?;
    let (pass, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    Some(ItemResult { id, name, pass, detail })
}

/// Runs every item, concurrently; results are in item order.
pub fn run_example_suite() -> Vec<ItemResult> {
    std::thread::scope(|s| {
        let handles: Vec<_> = ITEMS
            .iter()
            .map(|&(id, _, _)| s.spawn(move || run_item(id).expect("listed item")))
            .collect();
        handles
            .into_iter()
            .zip(ITEMS.iter())
            .map(|(h, &(id, name, _))| {
                h.join().unwrap_or_else(|_| ItemResult {
                    id,
                    name,
                    pass: false,
                    detail: "item panicked".into(),
                })
            })
            .collect()
    })
}

fn q(p: u32, e: u32) -> Result<FrobExponent, Error> {
    FrobExponent::new(p, e)
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// The products of all but one of `d` variables.
pub fn hyperplane_complement_ideal(ring: &Arc<Ring>) -> Ideal {
    let d = ring.nvars();
    Ideal::from_monomials(
        ring,
        (0..d).map(|i| Monomial::new((0..d).map(|j| u32::from(j != i)).collect())),
    )
}

fn monomial_thresholds() -> Outcome {
    let mut pass = true;
    let mut detail = String::new();
    for d in 3..=6usize {
        let ring = Ring::grevlex(2, var_names(d))?;
        let got = fpt_monomial(&hyperplane_complement_ideal(&ring))?;
        let want = ExactRational::new(d as i64, d as i64 - 1);
        let ok = got.finite() == Some(&want);
        pass &= ok;
        let shown = got.finite().map_or("infinite".to_string(), ToString::to_string);
        write!(detail, "d={d}: {shown}; ").unwrap();
    }
    Ok((pass, detail.trim_end_matches("; ").to_string()))
}

pub fn e8_ring() -> Result<(Arc<Ring>, Polynomial), Error> {
    let ring = Ring::grevlex(7, ["x", "y", "z"])?;
    let f = parse_polynomial("x^2 + y^3 + z^5", &ring)?;
    Ok((ring, f))
}

/// ν(q) for `(k[x,y,z]/(x^2+y^3+z^5), m)` read off the compositions
/// `a + b + c = q − 1` indexing the (distinct) terms of `f^{q−1}`.
pub fn e8_nu_by_compositions(q: u64) -> Option<u64> {
    let n = q - 1;
    let mut best = None;
    for a in 0..=n {
        for b in 0..=n - a {
            let c = n - a - b;
            let exps = [2 * a, 3 * b, 5 * c];
            if exps.iter().all(|&e| e < q) && multinomial_mod_p(&[a, b, c], 7) != 0 {
                let slack = exps.iter().map(|e| n - e).sum::<u64>();
                best = best.max(Some(slack));
            }
        }
    }
    best
}

fn e8_nu_bound() -> Outcome {
    let (ring, f) = e8_ring()?;
    let quotient = Ideal::principal(f);
    let m = Ideal::maximal(&ring);
    let sixth = ExactRational::new(1, 6);
    let mut pass = true;
    let mut detail = String::new();
    for e in [1, 2] {
        let qq = q(7, e)?;
        let nu = nu_value(&quotient, &m, qq)?;
        let oracle = e8_nu_by_compositions(qq.q() as u64);
        let bound = nu.lower_bound();
        let within = bound.as_ref().is_some_and(|b| *b <= sixth);
        pass &= within && nu.r == oracle;
        if e == 1 {
            pass &= nu.r == Some(1);
        }
        let r = nu.r.map_or("none".into(), |r| r.to_string());
        let o = oracle.map_or("none".into(), |r| r.to_string());
        write!(detail, "q={qq}: nu={r} (oracle {o}), nu/q<=1/6 {within}; ").unwrap();
    }
    Ok((pass, detail.trim_end_matches("; ").to_string()))
}

fn fedder_hypersurface() -> Outcome {
    let (ring, f) = e8_ring()?;
    let qq = q(7, 1)?;
    let g = f.pow(6)?;
    let target = Monomial::new(vec![6, 6, 5]);
    let outside: Vec<_> = g
        .terms()
        .iter()
        .filter(|(m, _)| !m.has_exponent_at_least(7))
        .collect();
    let witness = term_outside_bracket_m(&g, qq);
    let coeff = g.coefficient(&target);
    let oracle = power_coefficient(&f, 6, &target);
    let only = outside.len() == 1 && outside[0].0 == target;
    let pass = witness.is_some_and(|(m, _)| *m == target) && only && coeff == 4 && oracle == 4;
    let shown = witness.map_or("none".into(), |(m, c)| format!("{} coeff {c}", render_monomial(&ring, m)));
    Ok((
        pass,
        format!("f^6 term outside m^[7]: {shown}; terms outside: {}; oracle coeff {oracle}", outside.len()),
    ))
}

fn pigeonhole_chain() -> Outcome {
    let mut pass = true;
    let mut detail = String::new();
    for n in [2usize, 3, 4, 10] {
        let m: Vec<Monomial> = (0..n).map(|i| Monomial::var(n, i)).collect();
        for qq in [2u64, 3] {
            let outside = |e: u64| power_outside(&m, e, n, |x| x.has_exponent_at_least(qq));
            let bound = n as u64 * (qq - 1);
            let contained = outside(bound + 1).is_empty();
            let sharp = !outside(bound).is_empty();
            pass &= contained && sharp;
            write!(detail, "n={n} q={qq}: m^{} in m^[q] {contained}, m^{bound} not {sharp}; ", bound + 1).unwrap();
        }
    }
    // quadrics in 10 variables: their 5q-th power has degree 10q, and
    // 10q >= 10(q-1) + 1, so I^{5q} ⊆ m^{10q} ⊆ m^[q]
    for qq in [2u64, 3] {
        let ok = 2 * 5 * qq > 10 * (qq - 1);
        pass &= ok;
        write!(detail, "degree chain q={qq} {ok}; ").unwrap();
    }
    Ok((pass, detail.trim_end_matches("; ").to_string()))
}

/// A corpus ideal for the containment checks.
#[derive(Debug, Clone, Copy)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    pub gens: &'static [&'static str],
    pub height: u64,
}

const V2: &[&str] = &["x", "y"];
const V3: &[&str] = &["x", "y", "z"];
const V4: &[&str] = &["x", "y", "z", "w"];

pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry { name: "(xy)", vars: V2, gens: &["x*y"], height: 1 },
    CorpusEntry { name: "(xyz)", vars: V3, gens: &["x*y*z"], height: 1 },
    CorpusEntry { name: "(xy-zw)", vars: V4, gens: &["x*y - z*w"], height: 1 },
    CorpusEntry { name: "(x,y)", vars: V2, gens: &["x", "y"], height: 2 },
    CorpusEntry { name: "(x,y,z)", vars: V3, gens: &["x", "y", "z"], height: 3 },
    CorpusEntry { name: "triangle", vars: V3, gens: &["x*y", "x*z", "y*z"], height: 2 },
    CorpusEntry { name: "(xy,zw)", vars: V4, gens: &["x*y", "z*w"], height: 2 },
    CorpusEntry { name: "4-cycle", vars: V4, gens: &["x*y", "y*z", "z*w", "w*x"], height: 2 },
    CorpusEntry { name: "(xyz,w)", vars: V4, gens: &["x*y*z", "w"], height: 2 },
    CorpusEntry { name: "K4", vars: V4, gens: &["x*y", "x*z", "x*w", "y*z", "y*w", "z*w"], height: 3 },
    CorpusEntry { name: "triples", vars: V4, gens: &["x*y*z", "x*y*w", "x*z*w", "y*z*w"], height: 2 },
];

/// Sizes of the minimal primes of a squarefree monomial ideal, i.e. of the
/// minimal variable sets meeting every generator's support.
pub fn minimal_cover_sizes(gens: &[Monomial], nvars: usize) -> Vec<u32> {
    let supports: Vec<u32> = gens
        .iter()
        .map(|m| m.exponents().iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |s, (i, _)| s | 1 << i))
        .collect();
    let covers: Vec<u32> = (0u32..1 << nvars)
        .filter(|s| supports.iter().all(|g| g & s != 0))
        .collect();
    let mut sizes: Vec<u32> = covers
        .iter()
        .filter(|&&s| !covers.iter().any(|&t| t != s && t & s == t))
        .map(|s| s.count_ones())
        .collect();
    sizes.sort_unstable();
    sizes
}

pub fn corpus_ideal(entry: &CorpusEntry, p: u64) -> Result<Ideal, Error> {
    let ring = Ring::grevlex(p, entry.vars.iter().copied())?;
    let gens = entry
        .gens
        .iter()
        .map(|g| parse_polynomial(g, &ring))
        .collect::<Result<Vec<_>, _>>()?;
    Ideal::new(&ring, gens)
}

/// Checks the declared heights: squarefree monomial entries must be
/// unmixed with every minimal prime of the declared height.
pub fn corpus_heights_consistent() -> Result<bool, Error> {
    for entry in CORPUS {
        let ideal = corpus_ideal(entry, 2)?;
        match ideal.monomial_generators() {
            Some(gens) => {
                let sizes = minimal_cover_sizes(&gens, entry.vars.len());
                if sizes.is_empty() || sizes.iter().any(|&s| s as u64 != entry.height) {
                    return Ok(false);
                }
            }
            None if !ideal.is_principal() || entry.height != 1 => return Ok(false),
            None => {}
        }
    }
    Ok(true)
}

fn containment_corpus() -> Outcome {
    let heights = corpus_heights_consistent()?;
    let mut failures = Vec::new();
    let mut checks = 0;
    for p in [2u32, 3, 5] {
        for entry in CORPUS {
            let ideal = corpus_ideal(entry, p as u64)?;
            for e in [1, 2] {
                let qq = q(p, e)?;
                checks += 2;
                if !check_colon_containment(&ideal, qq)? {
                    failures.push(format!("colon {} q={qq}", entry.name));
                }
                if !check_height_containment(&ideal, entry.height, qq)? {
                    failures.push(format!("height {} q={qq}", entry.name));
                }
            }
        }
    }
    let pass = heights && failures.is_empty();
    let mut detail = format!(
        "{} ideals, {checks} checks, declared heights consistent {heights}",
        CORPUS.len()
    );
    if !failures.is_empty() {
        write!(detail, "; failed: {}", failures.join(", ")).unwrap();
    }
    Ok((pass, detail))
}

pub fn random_poly(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, max_degree: u32, max_terms: usize) -> Polynomial {
    let pool = monomials_up_to(ring.nvars(), max_degree);
    let p = ring.characteristic() as i64;
    let k = rng.random_range(1..=max_terms);
    let terms = (0..k).map(|_| {
        let m = pool[rng.random_range(0..pool.len())].clone();
        (m, rng.random_range(1..p))
    });
    Polynomial::from_terms(ring, terms).expect("same ring")
}

fn random_nonzero(rng: &mut ChaCha8Rng, ring: &Arc<Ring>, min_degree: u64, max_degree: u32, max_terms: usize) -> Polynomial {
    loop {
        let f = random_poly(rng, ring, max_degree, max_terms);
        if !f.is_zero() && f.total_degree() >= min_degree {
            return f;
        }
    }
}

/// One membership query: generators, query polynomial and whether the
/// query was built as a combination of the generators.
#[derive(Debug, Clone)]
pub struct MembershipInstance {
    pub gens: Vec<Polynomial>,
    pub query: Polynomial,
    pub by_construction: bool,
}

pub fn membership_instances(count: usize, seed: u64) -> Vec<MembershipInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let primes = [2u64, 3, 5, 7];
    (0..count)
        .map(|i| {
            let p = primes[rng.random_range(0..primes.len())];
            let n = rng.random_range(1..=3usize);
            let ring = Ring::grevlex(p, var_names(n)).expect("valid ring");
            let k = rng.random_range(1..=3usize);
            let gens: Vec<Polynomial> = (0..k).map(|_| random_nonzero(&mut rng, &ring, 1, 3, 4)).collect();
            let by_construction = i % 2 == 0;
            let query = if by_construction {
                gens.iter().fold(Polynomial::zero(&ring), |acc, g| {
                    let room = 6 - g.total_degree() as u32;
                    let c = random_poly(&mut rng, &ring, room, 3);
                    acc.try_add(&c.try_mul(g).expect("same ring")).expect("same ring")
                })
            } else {
                random_poly(&mut rng, &ring, 6, 5)
            };
            MembershipInstance { gens, query, by_construction }
        })
        .collect()
}

fn groebner_oracle() -> Outcome {
    let instances = membership_instances(100, 0x6f72_6163);
    let mut disagreements = Vec::new();
    let mut members = 0;
    for (i, inst) in instances.iter().enumerate() {
        let ideal = Ideal::new(inst.query.ring(), inst.gens.clone())?;
        let gb = ideal.member(&inst.query)?;
        let oracle = macaulay_member(&inst.query, &inst.gens, MACAULAY_DEGREE);
        members += usize::from(gb);
        if gb != oracle || (inst.by_construction && !gb) {
            disagreements.push(i);
        }
    }
    let detail = format!(
        "{} instances, {members} members, {} disagreements{}",
        instances.len(),
        disagreements.len(),
        if disagreements.is_empty() { String::new() } else { format!(" at {disagreements:?}") }
    );
    Ok((disagreements.is_empty(), detail))
}

/// A principal-colon instance `(J, f)`.
pub fn flatness_instances(count: usize, seed: u64) -> Vec<(Ideal, Polynomial)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let p = [2u64, 3][i % 2];
            let ring = Ring::grevlex(p, ["x", "y"]).expect("valid ring");
            let k = rng.random_range(1..=2usize);
            let gens: Vec<Polynomial> = (0..k).map(|_| random_nonzero(&mut rng, &ring, 1, 2, 3)).collect();
            let f = random_nonzero(&mut rng, &ring, 1, 2, 2);
            (Ideal::new(&ring, gens).expect("same ring"), f)
        })
        .collect()
}

fn frobenius_flatness() -> Outcome {
    let mut failures = Vec::new();
    let instances = flatness_instances(25, 0x666c_6174);
    for (i, (j, f)) in instances.iter().enumerate() {
        let p = j.ring().characteristic();
        for e in [1, 2] {
            let qq = q(p, e)?;
            let lhs = bracket_power(&j.colon_poly(f)?, qq)?;
            let rhs = bracket_power(j, qq)?.colon_poly(&f.pow(qq.q() as u64)?)?;
            if !lhs.same_ideal(&rhs)? {
                failures.push(format!("#{i} q={qq}"));
            }
        }
    }
    let detail = format!(
        "{} instances at q=p and q=p^2, {} failures{}",
        instances.len(),
        failures.len(),
        if failures.is_empty() { String::new() } else { format!(": {}", failures.join(", ")) }
    );
    Ok((failures.is_empty(), detail))
}

/// Monomial ideals for the scaling checks, as exponent vectors.
pub fn scaling_ideals(count: usize, seed: u64) -> Vec<(usize, Vec<Vec<u32>>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=3usize);
            let k = rng.random_range(1..=3usize);
            let gens = (0..k)
                .map(|_| loop {
                    let v: Vec<u32> = (0..n).map(|_| rng.random_range(0..=3)).collect();
                    if v.iter().any(|&e| e > 0) {
                        break v;
                    }
                })
                .collect();
            (n, gens)
        })
        .collect()
}

fn nu_scaling() -> Outcome {
    let mut failures = Vec::new();
    let ideals = scaling_ideals(10, 0x7363_616c);
    for (i, (n, gens)) in ideals.iter().enumerate() {
        for p in [2u32, 3] {
            let ring = Ring::grevlex(p as u64, var_names(*n))?;
            let a = Ideal::from_monomials(&ring, gens.iter().map(|v| Monomial::new(v.clone())));
            let zero = Ideal::zero(&ring);
            let fpt = fpt_monomial(&a)?;
            let nus = (1..=3)
                .map(|e| nu_value(&zero, &a, q(p, e)?))
                .collect::<Result<Vec<_>, _>>()?;
            for e in 0..2 {
                let (lo, hi) = (nus[e].r, nus[e + 1].r);
                if !matches!((lo, hi), (Some(l), Some(h)) if h >= p as u64 * l) {
                    failures.push(format!("#{i} p={p} scaling e={}", e + 1));
                }
                let within = match (nus[e].lower_bound(), fpt.finite()) {
                    (Some(b), Some(c)) => b <= *c,
                    _ => false,
                };
                if !within {
                    failures.push(format!("#{i} p={p} fpt bound e={}", e + 1));
                }
            }
        }
    }
    let detail = format!(
        "{} ideals at p in {{2,3}}, e in {{1,2}}, {} failures{}",
        ideals.len(),
        failures.len(),
        if failures.is_empty() { String::new() } else { format!(": {}", failures.join(", ")) }
    );
    Ok((failures.is_empty(), detail))
}

/// The E8 certificate used by the CLI examples, re-verified.
pub fn e8_certificate() -> Result<bool, Error> {
    let (ring, f) = e8_ring()?;
    let spec = PairSpec::new(
        Ideal::principal(f),
        vec![(Ideal::maximal(&ring), RationalExponent::new(1, 6)?)],
        Convention::Floor,
    )?;
    let cert = fedder_fpure_at_q(&spec, q(7, 1)?)?;
    Ok(cert.holds && verify_certificate(&spec, None, &cert)?)
}
