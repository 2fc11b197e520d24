//! Buchberger's algorithm over GF(p) or the rationals, with ideal and radical
//! membership tests built on top of it.
//!
//! Order is graded reverse lexicographic throughout. Pairs are selected by
//! smallest lcm (normal strategy) and pruned with the Gebauer-Möller update,
//! which covers Buchberger's coprime and chain criteria.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::gbcore;
use crate::ideal::MonomialIdeal;
use crate::poly::{Monomial, Polynomial};

/// Knobs for a Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Maximum number of S-polynomials reduced before giving up.
    pub spair_budget: usize,
    pub selection: Selection,
    /// Maximum total number of terms held by the basis under construction.
    pub term_budget: usize,
    /// Give up (inconclusively) once this instant has passed.
    pub deadline: Option<Instant>,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        GroebnerConfig { spair_budget: 200_000, selection: Selection::Normal, term_budget: 20_000_000, deadline: None }
    }
}

/// How the next S-pair is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selection {
    /// Smallest lcm of leading monomials.
    #[default]
    Normal,
    /// Smallest sugar degree, ties by smallest lcm; steadier on
    /// inhomogeneous input such as Rabinowitsch systems.
    Sugar,
}

/// A reduced Gröbner basis: monic, leading monomials pairwise non-dividing,
/// sorted by ascending leading monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    field: Field,
    nvars: usize,
    basis: Vec<Polynomial>,
    /// S-polynomials reduced while computing this basis.
    pub spairs: usize,
}

impl GroebnerBasis {
    pub fn polynomials(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Whether the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.nvars() != self.nvars {
            return Err(Error::AmbientMismatch(f.nvars(), self.nvars));
        }
        let refs: Vec<&Polynomial> = self.basis.iter().collect();
        Ok(reduce(f, &refs))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis with the default budget.
///
/// Panics only if the default S-pair budget is exhausted; use
/// [`buchberger_with`] to get an explicit inconclusive result instead.
pub fn buchberger(gens: &[Polynomial]) -> GroebnerBasis {
    match buchberger_with(gens, GroebnerConfig::default()) {
        Ok(gb) => gb,
        Err(e) => panic!("buchberger: {e}"),
    }
}

/// Reduced Gröbner basis, or [`Error::Inconclusive`] when the budget or
/// deadline runs out.
///
/// All generators must share one ring. An empty list (or all zeros) gives
/// the empty basis.
pub fn buchberger_with(gens: &[Polynomial], config: GroebnerConfig) -> Result<GroebnerBasis> {
    let Some(first) = gens.first() else {
        return Err(Error::OutOfRange("no generators given; ring unknown".into()));
    };
    buchberger_in(first.field(), first.nvars(), gens, config)
}

/// As [`buchberger_with`], with the ring given explicitly so that an empty
/// generator list is allowed.
pub fn buchberger_in(field: Field, nvars: usize, gens: &[Polynomial], config: GroebnerConfig) -> Result<GroebnerBasis> {
    for g in gens {
        if g.nvars() != nvars {
            return Err(Error::AmbientMismatch(nvars, g.nvars()));
        }
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
    }
    let (basis, spairs) = match run(field, nvars, gens, config, true)? {
        Run::Unit { spairs } => (vec![Polynomial::one(field, nvars)], spairs),
        Run::Basis { polys, spairs } => (polys, spairs),
    };
    Ok(GroebnerBasis { field, nvars, basis, spairs })
}

enum Run {
    Unit { spairs: usize },
    Basis { polys: Vec<Polynomial>, spairs: usize },
}

/// Dispatch to the packed engine when the ring is small enough, otherwise to
/// the reference engine on [`Polynomial`]s.
fn run(field: Field, nvars: usize, gens: &[Polynomial], config: GroebnerConfig, reduced: bool) -> Result<Run> {
    if config.deadline.is_some_and(|d| Instant::now() > d) {
        return Err(Error::Inconclusive(0));
    }
    if nvars > gbcore::MAX_VARS {
        return reference_run(gens, config, reduced);
    }
    match field {
        Field::Prime(p) => packed_run(&gbcore::ModP(p), field, nvars, gens, config, reduced, |c| match c {
            FieldElement::Mod(x) => *x as u32,
            FieldElement::Rat(_) => unreachable!("field checked"),
        }, |c| FieldElement::Mod(*c as u64)),
        Field::Rational => packed_run(&gbcore::Rat, field, nvars, gens, config, reduced, |c| match c {
            FieldElement::Rat(x) => x.clone(),
            FieldElement::Mod(_) => unreachable!("field checked"),
        }, |c| FieldElement::Rat(c.clone())),
    }
}

#[allow(clippy::too_many_arguments)]
fn packed_run<A: gbcore::Arith>(
    a: &A,
    field: Field,
    nvars: usize,
    gens: &[Polynomial],
    config: GroebnerConfig,
    reduced: bool,
    into: impl Fn(&FieldElement) -> A::C,
    back: impl Fn(&A::C) -> FieldElement,
) -> Result<Run> {
    let packed: Vec<gbcore::Poly<A::C>> = gens
        .iter()
        .map(|g| g.terms().iter().map(|(m, c)| (gbcore::Mono::from_exps(m.exponents()), into(c))).collect())
        .collect();
    let selection = match config.selection {
        Selection::Normal => gbcore::Selection::Normal,
        Selection::Sugar => gbcore::Selection::Sugar,
    };
    let limits = gbcore::Limits { budget: config.spair_budget, terms: config.term_budget, deadline: config.deadline };
    match gbcore::buchberger(a, packed, limits, selection)? {
        gbcore::Run::Unit { spairs } => Ok(Run::Unit { spairs }),
        gbcore::Run::Basis { polys, spairs } => {
            let polys = if reduced { gbcore::interreduce(a, polys) } else { polys };
            let polys = polys
                .iter()
                .map(|p| Polynomial::from_terms(field, nvars, p.iter().map(|(m, c)| (Monomial::new(m.exps(nvars)), back(c)))))
                .collect();
            Ok(Run::Basis { polys, spairs })
        }
    }
}

fn reference_run(gens: &[Polynomial], config: GroebnerConfig, reduced: bool) -> Result<Run> {
    let mut state = State { polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut spairs = 0;

    let mut inputs: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    inputs.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    for g in inputs {
        let h = reduce(g, &state.active_refs());
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(Run::Unit { spairs });
        }
        state.insert(h.monic());
    }

    while !state.pairs.is_empty() {
        let pick = (0..state.pairs.len())
            .min_by(|&a, &b| state.pairs[a].lcm.cmp(&state.pairs[b].lcm))
            .expect("nonempty");
        let pair = state.pairs.swap_remove(pick);
        spairs += 1;
        if spairs > config.spair_budget || config.deadline.is_some_and(|d| Instant::now() > d) {
            return Err(Error::Inconclusive(spairs - 1));
        }
        let s = s_polynomial(&state.polys[pair.i], &state.polys[pair.j], &pair.lcm);
        let h = reduce(&s, &state.active_refs());
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(Run::Unit { spairs });
        }
        state.insert(h.monic());
    }
    let polys = if reduced { interreduce(state.active_polys()) } else { state.active_polys() };
    Ok(Run::Basis { polys, spairs })
}

struct State {
    polys: Vec<Polynomial>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State {
    fn active_refs(&self) -> Vec<&Polynomial> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p).collect()
    }

    fn active_polys(&self) -> Vec<Polynomial> {
        self.active_refs().into_iter().cloned().collect()
    }

    fn lm(&self, i: usize) -> &Monomial {
        self.polys[i].leading_monomial().expect("basis elements are nonzero")
    }

    /// Gebauer-Möller update for a new basis element.
    fn insert(&mut self, h: Polynomial) {
        let hidx = self.polys.len();
        self.polys.push(h);
        self.active.push(true);
        let lm_h = self.lm(hidx).clone();

        let candidates: Vec<Pair> = (0..hidx)
            .filter(|&g| self.active[g])
            .map(|g| Pair { i: g, j: hidx, lcm: self.lm(g).lcm(&lm_h) })
            .collect();

        // drop a candidate whose lcm is a proper multiple of another's, unless coprime
        let mut kept: Vec<Pair> = Vec::new();
        for (k, c) in candidates.iter().enumerate() {
            let coprime = self.lm(c.i).is_coprime(&lm_h);
            let dominated = candidates.iter().enumerate().any(|(l, o)| {
                l != k && o.lcm.divides(&c.lcm) && (o.lcm != c.lcm || (l < k && kept_contains(&kept, o)))
            });
            if coprime || !dominated {
                kept.push(c.clone());
            }
        }
        // among equal lcms keep one; then discard coprime pairs (first criterion)
        let mut fresh: Vec<Pair> = Vec::new();
        for c in kept {
            if fresh.iter().any(|f| f.lcm == c.lcm) {
                continue;
            }
            fresh.push(c);
        }
        fresh.retain(|c| !self.lm(c.i).is_coprime(&lm_h));

        // prune old pairs made redundant by h (chain criterion)
        let polys = &self.polys;
        let lm = |i: usize| polys[i].leading_monomial().expect("nonzero");
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm) && lm(p.i).lcm(&lm_h) != p.lcm && lm(p.j).lcm(&lm_h) != p.lcm)
        });
        self.pairs.extend(fresh);

        for g in 0..hidx {
            if self.active[g] && lm_h.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }
}

fn kept_contains(kept: &[Pair], p: &Pair) -> bool {
    kept.iter().any(|k| k.i == p.i && k.j == p.j)
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let mf = f.leading_monomial().expect("nonzero").quotient_of(lcm);
    let mg = g.leading_monomial().expect("nonzero").quotient_of(lcm);
    // f and g are monic
    let field = f.field();
    f.mul_monomial(&mf).sub_scaled_shift(&field.one(), &mg, g)
}

/// Full reduction of `f` by `basis` (nonzero polynomials).
///
/// Terms before index `k` are already irreducible; reducing the term at `k`
/// only touches terms at or after it.
fn reduce(f: &Polynomial, basis: &[&Polynomial]) -> Polynomial {
    let field = f.field();
    let mut p = f.clone();
    let mut k = 0;
    while k < p.len() {
        let (m, c) = &p.terms()[k];
        let divisor = basis.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)));
        match divisor {
            Some(g) => {
                let lm = g.leading_monomial().expect("nonzero");
                let lc = g.leading_coefficient().expect("nonzero");
                let coef = if lc.is_one() { c.clone() } else { field.div(c, lc).expect("nonzero") };
                let shift = lm.quotient_of(m);
                p = p.sub_scaled_shift(&coef, &shift, g);
            }
            None => k += 1,
        }
    }
    p
}

fn interreduce(mut polys: Vec<Polynomial>) -> Vec<Polynomial> {
    polys.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in polys {
        let lm = p.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|q| q.leading_monomial().expect("nonzero").divides(lm)) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<&Polynomial> = minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, q)| q).collect();
        out.push(reduce(&minimal[k], &others).monic());
    }
    out.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    out
}

/// Remainder of `f` after full reduction by `divisors` (any nonzero
/// polynomials, not necessarily a Gröbner basis). The result differs from `f`
/// by an element of the ideal they generate.
pub fn reduce_by(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = divisors.iter().filter(|g| !g.is_zero()).collect();
    reduce(f, &refs)
}

/// Remainder of `f` modulo a Gröbner basis.
pub fn normal_form(f: &Polynomial, gb: &GroebnerBasis) -> Result<Polynomial> {
    gb.normal_form(f)
}

fn nonzero_gens(gens: &[Polynomial]) -> Vec<Polynomial> {
    gens.iter().filter(|g| !g.is_zero()).cloned().collect()
}

/// `f ∈ (gens)`.
pub fn in_ideal(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    in_ideal_with(f, gens, GroebnerConfig::default())
}

pub fn in_ideal_with(f: &Polynomial, gens: &[Polynomial], config: GroebnerConfig) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let gens = nonzero_gens(gens);
    if gens.is_empty() {
        return Ok(false);
    }
    buchberger_with(&gens, config)?.contains(f)
}

/// Outcome of one radical membership query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalQuery {
    pub member: bool,
    pub spairs: usize,
}

/// `f ∈ √(gens)`, via `1 ∈ (gens) + (1 - y·f)` with a fresh last variable `y`.
pub fn in_radical(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    Ok(in_radical_with(f, gens, GroebnerConfig::default())?.member)
}

pub fn in_radical_with(f: &Polynomial, gens: &[Polynomial], config: GroebnerConfig) -> Result<RadicalQuery> {
    if f.is_zero() {
        return Ok(RadicalQuery { member: true, spairs: 0 });
    }
    let n = f.nvars();
    let field = f.field();
    let mut extended: Vec<Polynomial> = Vec::with_capacity(gens.len() + 1);
    for g in gens {
        if g.nvars() != n {
            return Err(Error::AmbientMismatch(n, g.nvars()));
        }
        if !g.is_zero() {
            extended.push(g.extend_vars(n + 1));
        }
    }
    let y = Polynomial::var(field, n + 1, n);
    let rabinowitsch = Polynomial::one(field, n + 1).try_sub(&y.try_mul(&f.extend_vars(n + 1))?)?;
    extended.push(rabinowitsch);
    match run(field, n + 1, &extended, config, false)? {
        Run::Unit { spairs } => Ok(RadicalQuery { member: true, spairs }),
        Run::Basis { spairs, .. } => Ok(RadicalQuery { member: false, spairs }),
    }
}

/// Radical membership in a squarefree monomial ideal: every term's support
/// must contain some generator's support.
pub fn in_monomial_radical(f: &Polynomial, ideal: &MonomialIdeal) -> bool {
    ideal.contains(f)
}

/// A term of a presentation polynomial lying outside the target ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OffendingTerm {
    pub polynomial: usize,
    pub term: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

/// Radical membership result for one minimal generator of the target ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorCheck {
    pub generator: String,
    pub verdict: Verdict,
    pub spairs: usize,
}

/// Outcome of checking `√J = I` for a presentation `J` of a monomial ideal `I`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// `J ⊆ I`, checked term by term.
    pub containment: Verdict,
    pub offending_terms: Vec<OffendingTerm>,
    /// `I ⊆ √J`, one Rabinowitsch query per minimal generator of `I`.
    pub radical: Verdict,
    pub generators: Vec<GeneratorCheck>,
    pub spairs_total: usize,
    /// Wall-clock time, only recorded on request so reports stay reproducible.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Generators of `I` shown not to lie in `√J`.
    pub fn missing_generators(&self) -> Vec<&str> {
        self.generators
            .iter()
            .filter(|g| g.verdict == Verdict::Fail)
            .map(|g| g.generator.as_str())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Short human-readable description of the first failure, if any.
    pub fn failure_summary(&self) -> Option<String> {
        if let Some(t) = self.offending_terms.first() {
            return Some(format!("term {} of polynomial {} lies outside the ideal", t.term, t.polynomial + 1));
        }
        if let Some(g) = self.missing_generators().first() {
            return Some(format!("generator {g} is not in the radical"));
        }
        if self.verdict == Verdict::Inconclusive {
            return Some("S-pair budget or deadline exhausted".into());
        }
        None
    }
}

/// Options for [`verify_radical_presentation_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub groebner: GroebnerConfig,
    pub record_timing: bool,
}

/// Check both inclusions of `√J = I` with default options.
pub fn verify_radical_presentation(polys: &[Polynomial], ideal: &MonomialIdeal, names: &[String]) -> Result<VerificationReport> {
    verify_radical_presentation_with(polys, ideal, names, VerifyOptions::default())
}

pub fn verify_radical_presentation_with(
    polys: &[Polynomial],
    ideal: &MonomialIdeal,
    names: &[String],
    options: VerifyOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = ideal.nvars();
    for p in polys {
        if p.nvars() != n {
            return Err(Error::AmbientMismatch(p.nvars(), n));
        }
    }

    let mut offending_terms = Vec::new();
    for (k, p) in polys.iter().enumerate() {
        for (m, _) in p.terms() {
            if !ideal.contains_monomial(m) {
                let term = Polynomial::term(p.field(), m.clone(), p.field().one());
                offending_terms.push(OffendingTerm { polynomial: k, term: term.to_string_with(names) });
            }
        }
    }
    let containment = if offending_terms.is_empty() { Verdict::Pass } else { Verdict::Fail };

    let field = polys.first().map(|p| p.field()).unwrap_or(Field::Rational);
    // for monomial J, g ∈ √J iff some generator's support lies in supp(g)
    let monomial_supports: Option<Vec<_>> =
        polys.iter().filter(|p| !p.is_zero()).map(|p| (p.len() == 1).then(|| p.terms()[0].0.support())).collect();
    let generators: Vec<GeneratorCheck> = ideal
        .generators()
        .par_iter()
        .map(|g| {
            let gp = Polynomial::from_face(field, n, *g);
            let text = gp.to_string_with(names);
            if let Some(supports) = &monomial_supports {
                let member = supports.iter().any(|s| s.is_subset(*g));
                let verdict = if member { Verdict::Pass } else { Verdict::Fail };
                return GeneratorCheck { generator: text, verdict, spairs: 0 };
            }
            match in_radical_with(&gp, polys, options.groebner) {
                Ok(q) => GeneratorCheck {
                    generator: text,
                    verdict: if q.member { Verdict::Pass } else { Verdict::Fail },
                    spairs: q.spairs,
                },
                Err(Error::Inconclusive(spairs)) => {
                    GeneratorCheck { generator: text, verdict: Verdict::Inconclusive, spairs }
                }
                Err(e) => panic!("unexpected verification error: {e}"),
            }
        })
        .collect();
    let radical = if generators.iter().any(|g| g.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if generators.iter().any(|g| g.verdict == Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    let verdict = match (containment, radical) {
        (Verdict::Pass, Verdict::Pass) => Verdict::Pass,
        (Verdict::Fail, _) | (_, Verdict::Fail) => Verdict::Fail,
        _ => Verdict::Inconclusive,
    };
    Ok(VerificationReport {
        containment,
        offending_terms,
        radical,
        spairs_total: generators.iter().map(|g| g.spairs).sum(),
        generators,
        elapsed_ms: options.record_timing.then(|| start.elapsed().as_millis() as u64),
        verdict,
    })
}
