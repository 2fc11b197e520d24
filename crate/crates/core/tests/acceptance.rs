//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines land in the test log as-is.
//! A FAIL stops the run unless it is one of the documented gaps, and then
//! only in its expected shape:
//! - criteria 1-2: the printed first generators of the worked example do not
//!   generate the ideal up to radical. Everything else must hold, the verifier
//!   must reject outright, and an explicit common zero off the variety (found
//!   without the verifier) must confirm it.
//! - criterion 6: d-trees with four or more cone steps time out. Nothing may
//!   be rejected, and every tree with at most three steps must verify.

use std::time::{Duration, Instant};

use rand::Rng;
use sr_cone::cli::{self, EXIT_OK};
use sr_cone::complex::SimplicialComplex;
use sr_cone::cone::{cone_generators, ConeConstruction, PresentationCase};
use sr_cone::groebner::{verify_radical_presentation, GroebnerConfig, Verdict, VerifyOptions};
use sr_cone::hochster::{graded_betti, has_2_linear_resolution, proj_dim, regularity};
use sr_cone::ideal::{ara_lower_bound, codim, degree, stanley_reisner_ideal};
use sr_cone::pipeline::{build_unverified, dtree_sci_generators, lemma3_sci_generators, PipelineOptions, StepSummary};
use sr_cone::random::{random_complex, random_dtree_plan, random_proper_face, rng};
use sr_cone::{CaseChoice, Error, FaceSet, Field, Polynomial};

const PRINTED_FIRST_QQ: &str =
    "x1^2*x2^2*x3*x4 + x0^2*x2^2*x4 - x0*x2^2*x3*x4 + x0^2*x1^2*x3 + x0*x1^2*x3^2 - x0^2*x3^2";
const PRINTED_FIRST_GF2: &str = "x0^4*x1^2*x2^2*x3*x4 + x0^2*x1^2*x2^2*x3^3*x4 + x0^5*x1^2*x3^2 + x0^4*x1^2*x3^3 \
     + x0^3*x1^2*x3^4 + x0^6*x1^2*x3 + x0^6*x2^2*x4 + x0^5*x2^2*x3*x4 + x0^4*x2^2*x3^2*x4 \
     + x0^3*x2^2*x3^3*x4 + x0^4*x3^4";
const SECOND_QQ: &str = "x1^2*x3^2 + x0^2*x1 - x0*x1*x3";
const SECOND_GF2: &str = "x1^2*x3^2 + x0^2*x1 + x0*x1*x3";
const THIRD: &str = "x2^2*x4^2 + x0^2*x2 + x0*x2*x3";

const C4_JSON: &str = r#"{"vertices": ["x1", "x2", "x3", "x4"],
 "facets": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x1"]]}"#;

/// Per-tree verification deadline for criterion 6.
const DTREE_DEADLINE: Duration = Duration::from_secs(3);

struct Line {
    pass: bool,
    detail: String,
    /// For a known gap: whether this run's failure is exactly the expected one.
    gap: Option<bool>,
}

fn line(pass: bool, detail: impl Into<String>) -> Line {
    Line { pass, detail: detail.into(), gap: None }
}

fn four_cycle() -> SimplicialComplex {
    sr_cone::io::parse_complex(C4_JSON).unwrap()
}

fn cone_names() -> Vec<String> {
    ["x1", "x2", "x3", "x4", "x0"].iter().map(|s| s.to_string()).collect()
}

fn parse(text: &str, field: Field) -> Polynomial {
    Polynomial::parse(text, &cone_names(), field).unwrap()
}

fn canonical(text: &str, field: Field) -> String {
    parse(text, field).to_string_with(&cone_names())
}

/// Size-law and lower-bound observations collected for criteria 7 and 10.
#[derive(Default)]
struct Ledger {
    size_checks: usize,
    size_violations: Vec<String>,
    bound_checks: usize,
    bound_violations: Vec<String>,
    equality_checks: usize,
}

impl Ledger {
    fn size(&mut self, what: &str, h: usize, t: usize, size: usize) {
        if h == 0 {
            return;
        }
        self.size_checks += 1;
        if size != (h + 1).max(t) {
            self.size_violations.push(format!("{what}: h={h} t={t} size={size}"));
        }
    }

    fn construction(&mut self, what: &str, base: &SimplicialComplex, face: FaceSet, c: &ConeConstruction, witness_len: usize, field: Field) {
        let h = c.presentation.meta.h;
        self.size(what, h, base.vertex_count() - face.len(), c.presentation.len());
        let pd = proj_dim(base, field).unwrap();
        self.bound(what, &c.cone, c.presentation.len(), witness_len == pd, field);
    }

    fn steps(&mut self, what: &str, steps: &[StepSummary]) {
        for s in steps {
            self.size(&format!("{what} {s}"), s.h, s.t, s.size);
        }
    }

    /// `lower <= size`, with equality demanded when the witness size is `pd`.
    fn bound(&mut self, what: &str, complex: &SimplicialComplex, size: usize, tight: bool, field: Field) {
        let lower = ara_lower_bound(complex, field).unwrap();
        self.bound_checks += 1;
        if lower > size || (tight && lower != size) {
            self.bound_violations.push(format!("{what}: lower bound {lower}, size {size}, tight {tight}"));
        }
        if tight {
            self.equality_checks += 1;
        }
    }
}

fn example1(field: Field, ledger: &mut Ledger) -> Result<ConeConstruction, Error> {
    let c = four_cycle();
    let face = c.set_by_names(&["x4"]).unwrap();
    let built = cone_generators(&c, face, "x0", None, field, Default::default())?;
    ledger.construction(&format!("example 1 over {field}"), &c, face, &built, 2, field);
    Ok(built)
}

fn verdict(polys: &[&str], field: Field) -> Verdict {
    let c = four_cycle();
    let face = c.set_by_names(&["x4"]).unwrap();
    let cone = c.cone_union(face, "x0").unwrap();
    let polys: Vec<Polynomial> = polys.iter().map(|p| parse(p, field)).collect();
    verify_radical_presentation(&polys, &stanley_reisner_ideal(&cone), cone.names()).unwrap().verdict
}

/// Coefficients here are small integers; `FieldElement` prints them plainly.
fn coefficient(c: &sr_cone::FieldElement) -> i64 {
    c.to_string().parse().expect("integer coefficient")
}

fn eval_real(p: &Polynomial, x: &[f64]) -> f64 {
    p.terms()
        .iter()
        .map(|(m, c)| coefficient(c) as f64 * m.exponents().iter().zip(x).map(|(&e, v)| v.powi(e as i32)).product::<f64>())
        .sum()
}

/// GF(4) = {0, 1, a, a+1} as 0..=3 with a^2 = a + 1.
fn gf4_mul(a: u8, b: u8) -> u8 {
    let mut r = 0;
    for i in 0..2 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    if r & 4 != 0 {
        r ^= 0b111;
    }
    r
}

fn eval_gf4(p: &Polynomial, x: &[u8]) -> u8 {
    p.terms().iter().fold(0, |acc, (m, c)| {
        let mut t = (coefficient(c).rem_euclid(2)) as u8;
        for (&e, &v) in m.exponents().iter().zip(x) {
            for _ in 0..e {
                t = gf4_mul(t, v);
            }
        }
        acc ^ t
    })
}

/// Independent of the verifier: a common zero of `polys` off the cone's
/// variety, given in cone variable order `x1..x4, x0`.
fn real_counterexample(polys: &[&str]) -> bool {
    // a = 2cos(2pi/7) is a root of a^3 + a^2 - 2a - 1
    let a = 2.0 * (2.0 * std::f64::consts::PI / 7.0).cos();
    let x = [0.0, a, -1.0 - a, 1.0, 1.0];
    let zero = polys.iter().all(|p| eval_real(&parse(p, Field::Rational), &x).abs() < 1e-9);
    zero && (x[1] * x[3]).abs() > 0.5
}

fn gf4_counterexample(polys: &[&str]) -> bool {
    let x = [0, 1, 2, 2, 1];
    let zero = polys.iter().all(|p| eval_gf4(&parse(p, Field::Prime(2)), &x) == 0);
    zero && gf4_mul(x[1], x[3]) != 0
}

/// The printed first generator does not work with generators 2-3: report it,
/// and accept the failure as the known gap only when everything else holds,
/// the verifier rejects outright and an explicit point confirms it.
fn printed_gap(rest: bool, printed: Verdict, witness: bool) -> Option<bool> {
    (printed != Verdict::Pass).then_some(rest && printed == Verdict::Fail && witness)
}

fn criterion1(ledger: &mut Ledger) -> Line {
    let start = Instant::now();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c4.json");
    std::fs::write(&path, C4_JSON).unwrap();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run_with(
        ["srcone", "construct", path.to_str().unwrap(), "--face", "x4", "--char", "0"],
        &mut out,
        &mut err,
    );
    let out = String::from_utf8(out).unwrap();
    let polys: Vec<&str> = out.lines().skip(1).take_while(|l| !l.starts_with("size:")).collect();
    let q = Field::Rational;
    let built = example1(q, ledger).unwrap();
    let exact = polys.len() == 3 && polys[1] == canonical(SECOND_QQ, q) && polys[2] == canonical(THIRD, q);
    let ours = code == EXIT_OK && built.report.passed();
    let set = [PRINTED_FIRST_QQ, SECOND_QQ, THIRD];
    let printed = verdict(&set, q);
    let witness = real_counterexample(&set);
    let elapsed = start.elapsed();
    let rest = exact && ours && elapsed < Duration::from_secs(5);
    Line {
        pass: rest && printed == Verdict::Pass,
        detail: format!(
            "{} polynomials, generators 2-3 exact: {exact}, construction verified: {ours}, printed first generator: {printed:?}{}, {elapsed:.2?}",
            polys.len(),
            if witness { " (common real zero off the variety at x0=1, x1=0, x2=2cos(2pi/7))" } else { "" }
        ),
        gap: printed_gap(rest, printed, witness),
    }
}

fn criterion2(ledger: &mut Ledger) -> Line {
    let start = Instant::now();
    let f2 = Field::Prime(2);
    let built = example1(f2, ledger).unwrap();
    let p = &built.presentation;
    let names = &p.names;
    let ell = p.meta.ell == Some(2) && p.case == PresentationCase::Case21;
    let exact = p.len() == 3
        && p.polynomials[1].to_string_with(names) == canonical(SECOND_GF2, f2)
        && p.polynomials[2].to_string_with(names) == canonical(THIRD, f2);
    let ours = built.report.passed();
    let set = [PRINTED_FIRST_GF2, SECOND_GF2, THIRD];
    let printed = verdict(&set, f2);
    let witness = gf4_counterexample(&set);
    let elapsed = start.elapsed();
    let rest = ell && exact && ours && elapsed < Duration::from_secs(5);
    Line {
        pass: rest && printed == Verdict::Pass,
        detail: format!(
            "case21 with l=2: {ell}, generators 2-3 exact: {exact}, construction verified: {ours}, printed first generator: {printed:?}{}, {elapsed:.2?}",
            if witness { " (common zero off the variety over GF(4))" } else { "" }
        ),
        gap: printed_gap(rest, printed, witness),
    }
}

fn criterion3(ledger: &mut Ledger) -> Line {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut ok = true;
    for field in [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(5)] {
        match example1(field, ledger) {
            Ok(b) => {
                ok &= b.report.passed();
                parts.push(format!("{field} {} {}", b.presentation.case, if b.report.passed() { "pass" } else { "fail" }));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{field} error: {e}"));
            }
        }
    }
    let elapsed = start.elapsed();
    line(ok && elapsed < Duration::from_secs(30), format!("{}, {elapsed:.2?}", parts.join("; ")))
}

fn criterion4() -> Line {
    let start = Instant::now();
    let mut r = rng(4);
    let mut checked = 0;
    let mut failures = Vec::new();
    for _ in 0..200 {
        let n = r.gen_range(1..=7);
        let c = random_complex(&mut r, n);
        let face = random_proper_face(&mut r, &c);
        let cone = c.cone_union(face, "x0").unwrap();
        for field in [Field::Prime(2), Field::Rational] {
            let lhs = proj_dim(&cone, field).unwrap();
            let rhs = (proj_dim(&c, field).unwrap() + 1).max(n - face.len());
            checked += 1;
            if lhs != rhs {
                failures.push(format!("{c:?} F={} over {field}: {lhs} vs {rhs}", c.face_to_string(face)));
            }
        }
    }
    let elapsed = start.elapsed();
    line(
        failures.is_empty() && elapsed < Duration::from_secs(120),
        format!("seed 4, 200 complexes, {checked} checks over GF(2) and QQ, {} failures{}, {elapsed:.2?}", failures.len(), first(&failures)),
    )
}

fn criterion5() -> Line {
    let start = Instant::now();
    let mut r = rng(5);
    let (mut trees, mut others, mut failures) = (0, 0, Vec::new());
    let mut done = 0;
    while done < 200 {
        let n = r.gen_range(1..=7);
        let c = random_complex(&mut r, n);
        if c.is_simplex() {
            continue;
        }
        done += 1;
        let peel = c.peel_generalized_tree().is_some();
        let linear = has_2_linear_resolution(&c, Field::Rational).unwrap();
        if peel {
            trees += 1;
        } else {
            others += 1;
        }
        if peel != linear {
            failures.push(format!("{c:?}: peel {peel}, 2-linear {linear}"));
        }
    }
    let elapsed = start.elapsed();
    line(
        failures.is_empty() && elapsed < Duration::from_secs(120),
        format!(
            "seed 5, 200 non-simplex complexes ({trees} generalized trees, {others} not), {} failures{}, {elapsed:.2?}",
            failures.len(),
            first(&failures)
        ),
    )
}

fn criterion6(ledger: &mut Ledger) -> Line {
    let start = Instant::now();
    let field = Field::Prime(101);
    let mut r = rng(6);
    let (mut verified, mut inconclusive, mut too_large, mut wrong) = (0, 0, 0, Vec::new());
    let mut by_steps = [(0usize, 0usize); 7];
    for k in 0..50 {
        let d = r.gen_range(1..=3);
        let steps = r.gen_range(0..=6);
        let plan = random_dtree_plan(&mut r, d, steps);
        let complex = plan.replay().unwrap();
        by_steps[steps].1 += 1;
        let what = format!("tree {k} (d={d}, {steps} steps)");

        // size law and lower bound do not need the verifier
        match build_unverified(&plan, field, CaseChoice::Case22) {
            Ok((pres, summaries)) => {
                ledger.steps(&what, &summaries);
                ledger.bound(&what, &complex, pres.len(), true, field);
            }
            Err(Error::TooLarge(_)) => {}
            Err(e) => wrong.push(format!("{what}: {e}")),
        }

        let mut options = PipelineOptions::with_case(CaseChoice::Case22);
        options.construct.verify = VerifyOptions {
            groebner: GroebnerConfig { deadline: Some(Instant::now() + DTREE_DEADLINE), ..Default::default() },
            ..Default::default()
        };
        match dtree_sci_generators(&plan, field, options) {
            Ok(res) if res.presentation.len() == codim(&complex) && res.report.verdict == Verdict::Pass => {
                verified += 1;
                by_steps[steps].0 += 1;
            }
            Ok(res) => wrong.push(format!("{what}: {} polynomials, verdict {:?}", res.presentation.len(), res.report.verdict)),
            Err(Error::Inconclusive(_)) => inconclusive += 1,
            Err(Error::TooLarge(_)) => too_large += 1,
            Err(e) => wrong.push(format!("{what}: {e}")),
        }
    }
    let short_all_verified = by_steps[..=3].iter().all(|(v, n)| v == n);
    let breakdown: Vec<String> = by_steps.iter().enumerate().map(|(s, (v, n))| format!("{s}:{v}/{n}")).collect();
    let elapsed = start.elapsed();
    let pass = verified == 50 && elapsed < Duration::from_secs(180);
    Line {
        pass,
        gap: (!pass).then_some(wrong.is_empty() && short_all_verified),
        detail: format!(
                "seed 6 over GF(101): {verified}/50 verified, {inconclusive} inconclusive at {DTREE_DEADLINE:?} per tree, {too_large} over the size cap, {} wrong{}; verified by step count [{}], {elapsed:.2?}",
                wrong.len(),
                first(&wrong),
                breakdown.join(" ")
            ),
    }
}

fn criterion7(ledger: &Ledger) -> Line {
    line(
        ledger.size_violations.is_empty() && ledger.size_checks > 0,
        format!("{} constructions with h >= 1 checked, {} violations{}", ledger.size_checks, ledger.size_violations.len(), first(&ledger.size_violations)),
    )
}

/// Betti numbers of a complete intersection from its Koszul complex.
fn koszul_betti(degrees: &[usize]) -> Vec<((usize, usize), usize)> {
    let mut out = std::collections::BTreeMap::new();
    for mask in 1u32..(1 << degrees.len()) {
        let i = mask.count_ones() as usize;
        let j: usize = degrees.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, d)| d).sum();
        *out.entry((i, j)).or_insert(0) += 1;
    }
    out.into_iter().collect()
}

fn criterion8() -> Line {
    let start = Instant::now();
    let table = graded_betti(&four_cycle(), Field::Rational).unwrap();
    let ours: Vec<((usize, usize), usize)> = table.entries().filter(|((i, _), b)| *i >= 1 && *b > 0).collect();
    let oracle = koszul_betti(&[2, 2]);
    let reg = regularity(&four_cycle(), Field::Rational).unwrap();
    let elapsed = start.elapsed();
    line(
        ours == oracle && reg == 3 && elapsed < Duration::from_secs(1),
        format!("betti {ours:?}, Koszul oracle {oracle:?}, reg I = {reg}, {elapsed:.2?}"),
    )
}

fn criterion9(ledger: &mut Ledger) -> Line {
    let start = Instant::now();
    let field = Field::Rational;
    let c = SimplicialComplex::boundary_complex(4).unwrap();
    let reg = regularity(&c, field).unwrap();
    let expected = degree(&c) as isize - codim(&c) as isize + 1;
    let r = c.recognize_lemma3_shape().map(|s| s.r);
    let res = lemma3_sci_generators(&c, field, Default::default());
    let (gens, ok) = match &res {
        Ok(res) => {
            let names = c.names();
            let gens: Vec<String> = res.presentation.polynomials.iter().map(|p| p.to_string_with(names)).collect();
            ledger.steps("boundary of the 3-simplex", &res.steps);
            ledger.bound("boundary of the 3-simplex", &c, res.presentation.len(), true, field);
            let ok = gens == ["x1*x2*x3*x4"] && res.report.passed();
            (gens, ok)
        }
        Err(e) => (vec![e.to_string()], false),
    };
    let elapsed = start.elapsed();
    line(
        reg == 4 && expected == 4 && r == Some(4) && ok && elapsed < Duration::from_secs(10),
        format!("reg I = {reg}, deg - codim + 1 = {expected}, r = {r:?}, generators {gens:?} verified: {ok}, {elapsed:.2?}"),
    )
}

fn criterion10(ledger: &Ledger) -> Line {
    line(
        ledger.bound_violations.is_empty() && ledger.bound_checks > 0,
        format!(
            "{} runs checked ({} with |witness| = pd, equality required), {} violations{}",
            ledger.bound_checks,
            ledger.equality_checks,
            ledger.bound_violations.len(),
            first(&ledger.bound_violations)
        ),
    )
}

fn first(items: &[String]) -> String {
    items.first().map(|s| format!(" (first: {s})")).unwrap_or_default()
}

fn main() {
    // `cargo test -- --list` and filters come through here too
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let mut ledger = Ledger::default();
    let mut lines = Vec::new();
    lines.push(criterion1(&mut ledger));
    lines.push(criterion2(&mut ledger));
    lines.push(criterion3(&mut ledger));
    lines.push(criterion4());
    lines.push(criterion5());
    lines.push(criterion6(&mut ledger));
    lines.push(criterion7(&ledger));
    lines.push(criterion8());
    lines.push(criterion9(&mut ledger));
    lines.push(criterion10(&ledger));

    let mut unexpected = Vec::new();
    for (k, l) in lines.iter().enumerate() {
        let n = k + 1;
        println!("criterion {n}: {} - {}", if l.pass { "PASS" } else { "FAIL" }, l.detail);
        if !l.pass && l.gap != Some(true) {
            unexpected.push(n);
        }
    }
    let gaps: Vec<usize> = (1..=lines.len()).filter(|&n| !lines[n - 1].pass && lines[n - 1].gap == Some(true)).collect();
    if !gaps.is_empty() {
        println!("known gaps (see README): {gaps:?}");
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected acceptance failures: {unexpected:?}");
        std::process::exit(1);
    }
}
