//! `srcone` command-line front end.
//!
//! Exit codes: 0 ok, 1 verification failure or refusal, 2 usage/parse
//! error, 3 inconclusive (S-pair budget, deadline or size cap).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::complex::SimplicialComplex;
use crate::cone::{cone_generators, CaseChoice, ConstructOptions, RadicalPresentation};
use crate::error::Error;
use crate::face::FaceSet;
use crate::field::Field;
use crate::groebner::{verify_radical_presentation_with, VerificationReport, Verdict, VerifyOptions};
use crate::hochster;
use crate::ideal::{self, ara_lower_bound, stanley_reisner_ideal};
use crate::io;
use crate::pipeline::{self, BuildPlan, PipelineOptions, PipelineResult};
use crate::random;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "srcone", version, about = "Stanley-Reisner ideals of cone unions: invariants and radical generators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Vertices, facets, purity, subfacets, minimal primes, height, degree.
    Info {
        complex: PathBuf,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Graded Betti table of K[Δ] via Hochster's formula.
    Betti {
        complex: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Write the cone union Δ ∪ co_{apex} F as a complex file.
    Cone {
        complex: PathBuf,
        /// Face F as comma-separated vertex names (empty for the empty face).
        #[arg(long, allow_hyphen_values = true)]
        face: String,
        /// Name of the new vertex; defaults to x0, suffixed on collision.
        #[arg(long)]
        apex: Option<String>,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Generators of I_{Δ'} up to radical, verified.
    Construct {
        complex: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        face: String,
        #[arg(long)]
        apex: Option<String>,
        /// Polynomials generating I_Δ up to radical, one per line.
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = CaseArg::Auto)]
        case: CaseArg,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check that a polynomial file generates I_Δ up to radical.
    Verify {
        complex: PathBuf,
        polynomials: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Generalized tree, d-tree and boundary-core recognition.
    Classify {
        complex: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Build and verify a presentation along a recognized construction.
    Pipeline {
        complex: PathBuf,
        #[arg(long, value_enum, default_value_t = CaseArg::Auto)]
        case: CaseArg,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Seeded random property suite.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Complexes per property.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Vertex cap for random complexes.
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u8).range(1..=12))]
        max_vertices: u8,
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FieldArgs {
    /// Characteristic: 0 for the rationals, else a prime below 2^31.
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Record wall-clock time in verification reports.
    #[arg(long)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CaseArg {
    Auto,
    #[value(name = "1")]
    One,
    #[value(name = "21")]
    TwoOne,
    #[value(name = "22")]
    TwoTwo,
}

impl From<CaseArg> for CaseChoice {
    fn from(c: CaseArg) -> Self {
        match c {
            CaseArg::Auto => CaseChoice::Auto,
            CaseArg::One => CaseChoice::Case1,
            CaseArg::TwoOne => CaseChoice::Case21,
            CaseArg::TwoTwo => CaseChoice::Case22,
        }
    }
}

/// Validated settings shared by the subcommands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub field: Field,
    pub case: CaseChoice,
    pub format: Format,
    pub timing: bool,
}

impl RunConfig {
    pub fn new(characteristic: u64, case: CaseArg, out: OutputArgs) -> Result<Self, Failure> {
        let field = Field::from_characteristic(characteristic).map_err(Failure::usage)?;
        if case == CaseArg::TwoOne && characteristic == 0 {
            return Err(Failure::usage_msg("--case 21 needs a positive characteristic (--char p)"));
        }
        Ok(RunConfig { field, case: case.into(), format: out.format, timing: out.timing })
    }

    fn verify(&self) -> VerifyOptions {
        VerifyOptions { record_timing: self.timing, ..Default::default() }
    }
}

/// A command that did not succeed, with its exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(e: Error) -> Self {
        Failure { code: EXIT_USAGE, message: e.to_string() }
    }

    fn usage_msg(msg: &str) -> Self {
        Failure { code: EXIT_USAGE, message: msg.to_string() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::WitnessRejected(_) | Error::VerificationFailed(_) => EXIT_FAIL,
            Error::Inconclusive(_) | Error::TooLarge(_) => EXIT_INCONCLUSIVE,
            _ => EXIT_USAGE,
        };
        let mut message = e.to_string();
        if let Error::RootsUnavailable { h, .. } = e {
            message += &format!(" (try --char p with {h} dividing p-1, or the default case in positive characteristic)");
        }
        Failure { code, message }
    }
}

/// Standard output of a command plus its exit code.
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

/// Parse `args` (including the program name) and run, writing to stdout/stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Info { complex, out } => {
            let c = io::read_complex(complex)?;
            Ok(Outcome::ok(cmd_info(&c, out.format)))
        }
        Command::Betti { complex, field, out } => {
            let cfg = RunConfig::new(field.characteristic, CaseArg::Auto, *out)?;
            let c = io::read_complex(complex)?;
            Ok(Outcome::ok(cmd_betti(&c, cfg)?))
        }
        Command::Cone { complex, face, apex, output } => {
            let c = io::read_complex(complex)?;
            let cone = cmd_cone(&c, face, apex.as_deref())?;
            match output {
                Some(path) => {
                    io::write_complex(path, &cone)?;
                    Ok(Outcome::ok(String::new()))
                }
                None => Ok(Outcome::ok(io::complex_to_json(&cone))),
            }
        }
        Command::Construct { complex, face, apex, witness, case, field, out } => {
            let cfg = RunConfig::new(field.characteristic, *case, *out)?;
            let c = io::read_complex(complex)?;
            let w = match witness {
                Some(path) => Some(io::read_polynomials(path, c.names(), cfg.field)?),
                None => None,
            };
            cmd_construct(&c, face, apex.as_deref(), w.as_deref(), cfg)
        }
        Command::Verify { complex, polynomials, field, out } => {
            let cfg = RunConfig::new(field.characteristic, CaseArg::Auto, *out)?;
            let c = io::read_complex(complex)?;
            let polys = io::read_polynomials(polynomials, c.names(), cfg.field)?;
            cmd_verify(&c, &polys, cfg)
        }
        Command::Classify { complex, field, out } => {
            let cfg = RunConfig::new(field.characteristic, CaseArg::Auto, *out)?;
            let c = io::read_complex(complex)?;
            Ok(Outcome::ok(cmd_classify(&c, cfg)?))
        }
        Command::Pipeline { complex, case, field, out } => {
            let cfg = RunConfig::new(field.characteristic, *case, *out)?;
            let c = io::read_complex(complex)?;
            cmd_pipeline(&c, cfg)
        }
        Command::Check { seed, count, max_vertices, field, out } => {
            let cfg = RunConfig::new(field.characteristic, CaseArg::Auto, *out)?;
            cmd_check(*seed, *count, *max_vertices as usize, cfg)
        }
    }
}

/// Parse `a,b,c` into a face of `complex`; empty or `{}` is the empty face.
pub fn parse_face(complex: &SimplicialComplex, text: &str) -> Result<FaceSet, Error> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let names: Vec<&str> = inner.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    complex.set_by_names(&names)
}

/// `x0`, or `x0_1`, `x0_2`, ... when taken.
pub fn fresh_apex(complex: &SimplicialComplex, requested: Option<&str>) -> String {
    let base = requested.unwrap_or("x0");
    if complex.vertex_index(base).is_none() {
        return base.to_string();
    }
    (1..).map(|k| format!("{base}_{k}")).find(|n| complex.vertex_index(n).is_none()).expect("unbounded")
}

fn faces(complex: &SimplicialComplex, sets: &[FaceSet]) -> Vec<String> {
    sets.iter().map(|f| complex.face_to_string(*f)).collect()
}

fn prime_strings(complex: &SimplicialComplex, sets: &[FaceSet]) -> Vec<String> {
    sets.iter()
        .map(|p| {
            let names: Vec<&str> = p.iter().map(|v| complex.names()[v].as_str()).collect();
            format!("({})", names.join(","))
        })
        .collect()
}

fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn cmd_info(complex: &SimplicialComplex, format: Format) -> String {
    let facets = faces(complex, complex.facets());
    let subfacets = complex.subfacets().ok().map(|s| faces(complex, &s));
    let strongly = complex.is_strongly_connected().ok();
    let primes = prime_strings(complex, &ideal::minimal_primes(complex));
    let height = ideal::height(complex);
    let degree = ideal::degree(complex);
    let gens: Vec<String> = stanley_reisner_ideal(complex)
        .generators()
        .iter()
        .map(|g| g.iter().map(|v| complex.names()[v].as_str()).collect::<Vec<_>>().join("*"))
        .collect();
    let sr = format!("({})", gens.join(", "));
    match format {
        Format::Json => render(&json!({
            "vertices": complex.names(),
            "facets": facets,
            "dim": complex.dimension(),
            "pure": complex.is_pure(),
            "strongly_connected": strongly,
            "subfacets": subfacets,
            "ideal": sr,
            "minimal_primes": primes,
            "height": height,
            "degree": degree,
        })),
        Format::Text => {
            let mut s = String::new();
            s += &format!("vertices: {}\n", complex.names().join(" "));
            s += &format!("facets ({}): {}\n", facets.len(), facets.join(" "));
            s += &format!("dim: {}\n", complex.dimension());
            s += &format!("pure: {}\n", yes(complex.is_pure()));
            s += &format!("strongly connected: {}\n", strongly.map_or("undefined", yes));
            match subfacets {
                Some(sf) => s += &format!("subfacets ({}): {}\n", sf.len(), sf.join(" ")),
                None => s += "subfacets: undefined (not pure)\n",
            }
            s += &format!("ideal: {sr}\n");
            s += &format!("minimal primes: {}\n", primes.join(" "));
            s += &format!("height: {height}\n");
            s += &format!("degree: {degree}\n");
            s
        }
    }
}

pub fn cmd_betti(complex: &SimplicialComplex, cfg: RunConfig) -> Result<String, Failure> {
    let table = hochster::graded_betti(complex, cfg.field)?;
    let pd = table.proj_dim();
    let reg = table.ideal_regularity();
    let linear = if complex.is_simplex() { None } else { Some(hochster::has_2_linear_resolution(complex, cfg.field)?) };
    Ok(match cfg.format {
        Format::Json => {
            let entries: Vec<Value> = table.entries().map(|((i, j), b)| json!({"i": i, "j": j, "beta": b})).collect();
            render(&json!({
                "field": cfg.field.to_string(),
                "betti": entries,
                "pd": pd,
                "reg_ideal": reg,
                "two_linear": linear,
            }))
        }
        Format::Text => {
            let mut s = format!("field: {}\n{}", cfg.field, table);
            s += &format!("pd: {pd}\n");
            s += &format!("reg I: {}\n", reg.map_or("undefined (zero ideal)".to_string(), |r| r.to_string()));
            s += &format!("2-linear: {}\n", linear.map_or("undefined (zero ideal)", yes));
            s
        }
    })
}

pub fn cmd_cone(complex: &SimplicialComplex, face: &str, apex: Option<&str>) -> Result<SimplicialComplex, Failure> {
    let f = parse_face(complex, face)?;
    let name = fresh_apex(complex, apex);
    Ok(complex.cone_union(f, &name)?)
}

fn presentation_json(p: &RadicalPresentation) -> Value {
    let polys: Vec<String> = p.polynomials.iter().map(|q| q.to_string_with(&p.names)).collect();
    json!({
        "case": p.case,
        "field": p.field.to_string(),
        "header": p.header(),
        "variables": p.names,
        "polynomials": polys,
    })
}

fn report_json(r: &VerificationReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn report_text(r: &VerificationReport) -> String {
    let mut s = format!("verification: {}\n", verdict_word(r.verdict));
    s += &format!("  J in I: {}\n", verdict_word(r.containment));
    for t in &r.offending_terms {
        s += &format!("    polynomial {}: term {} outside I\n", t.polynomial + 1, t.term);
    }
    s += &format!("  I in rad J: {}\n", verdict_word(r.radical));
    for g in &r.generators {
        s += &format!("    {}: {} ({} S-pairs)\n", g.generator, verdict_word(g.verdict), g.spairs);
    }
    s += &format!("  S-pairs: {}\n", r.spairs_total);
    if let Some(ms) = r.elapsed_ms {
        s += &format!("  time: {ms} ms\n");
    }
    s
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "FAIL",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

pub fn cmd_construct(
    complex: &SimplicialComplex,
    face: &str,
    apex: Option<&str>,
    witness: Option<&[crate::poly::Polynomial]>,
    cfg: RunConfig,
) -> Result<Outcome, Failure> {
    let f = parse_face(complex, face)?;
    let name = fresh_apex(complex, apex);
    let options = ConstructOptions { case: cfg.case, verify: cfg.verify() };
    let built = cone_generators(complex, f, &name, witness, cfg.field, options)?;
    let n = complex.vertex_count();
    let h = built.presentation.meta.h;
    let bound = ara_lower_bound(&built.cone, cfg.field).ok();
    let predicted = (h + 1).max(n - f.len());
    let text = match cfg.format {
        Format::Json => render(&json!({
            "cone": io::ComplexFile::from_complex(&built.cone),
            "face": complex.face_to_string(f),
            "presentation": presentation_json(&built.presentation),
            "size_bound": predicted,
            "ara_lower_bound": bound,
            "report": report_json(&built.report),
        })),
        Format::Text => {
            let mut s = built.presentation.to_text();
            s += &format!("size: {} (bound max(h+1, n-|F|) = {predicted})\n", built.presentation.len());
            if let Some(b) = bound {
                s += &format!("ara lower bound: {b}\n");
            }
            s += &report_text(&built.report);
            s
        }
    };
    Ok(Outcome { text, code: verdict_code(built.report.verdict) })
}

pub fn cmd_verify(complex: &SimplicialComplex, polys: &[crate::poly::Polynomial], cfg: RunConfig) -> Result<Outcome, Failure> {
    let ideal = stanley_reisner_ideal(complex);
    let report = verify_radical_presentation_with(polys, &ideal, complex.names(), cfg.verify())?;
    let text = match cfg.format {
        Format::Json => render(&report_json(&report)),
        Format::Text => format!("polynomials: {}\n{}", polys.len(), report_text(&report)),
    };
    Ok(Outcome { text, code: verdict_code(report.verdict) })
}

fn peel_string(complex: &SimplicialComplex, peel: &crate::complex::PeelSequence) -> Vec<String> {
    peel.steps
        .iter()
        .map(|s| format!("{} over {}", complex.names()[s.vertex], complex.face_to_string(s.base)))
        .collect()
}

pub fn cmd_classify(complex: &SimplicialComplex, cfg: RunConfig) -> Result<String, Failure> {
    let peel = complex.peel_generalized_tree();
    let dtree = complex.is_d_tree();
    let shape = complex.recognize_lemma3_shape();
    let deg = ideal::degree(complex);
    let codim = ideal::codim(complex);
    let reg = if complex.is_simplex() { None } else { Some(hochster::regularity(complex, cfg.field)?) };
    let equality = reg.map(|r| r as isize == deg as isize - codim as isize + 1);
    let cycle = n_gon(complex);
    Ok(match cfg.format {
        Format::Json => render(&json!({
            "field": cfg.field.to_string(),
            "generalized_tree": peel.is_some(),
            "peel": peel.as_ref().map(|p| peel_string(complex, p)),
            "peel_terminal": peel.as_ref().map(|p| complex.face_to_string(p.terminal)),
            "d_tree": dtree,
            "boundary_core": shape.as_ref().map(|s| json!({
                "r": s.r,
                "core_nonface": complex.face_to_string(s.core_nonface),
                "branches": peel_string(complex, &s.branches),
            })),
            "cycle": cycle,
            "reg_ideal": reg,
            "degree": deg,
            "codim": codim,
            "reg_equals_deg_minus_codim_plus_one": equality,
        })),
        Format::Text => {
            let mut s = format!("field: {}\n", cfg.field);
            match &peel {
                Some(p) => {
                    s += "generalized tree: yes\n";
                    for line in peel_string(complex, p) {
                        s += &format!("  peel {line}\n");
                    }
                    s += &format!("  terminal simplex {}\n", complex.face_to_string(p.terminal));
                }
                None => s += "generalized tree: no\n",
            }
            s += &format!("d-tree: {}\n", yes(dtree));
            match &shape {
                Some(sh) => s += &format!(
                    "boundary core: yes (r={}, non-face {}, {} branch vertices)\n",
                    sh.r,
                    complex.face_to_string(sh.core_nonface),
                    sh.branches.steps.len()
                ),
                None => s += "boundary core: no\n",
            }
            if let Some(k) = cycle {
                s += &format!("cycle: {k}-gon\n");
            }
            match (reg, equality) {
                (Some(r), Some(eq)) => s += &format!(
                    "reg I = {r}, deg - codim + 1 = {}: {}\n",
                    deg as isize - codim as isize + 1,
                    if eq { "equal" } else { "different" }
                ),
                _ => s += "reg I: undefined (zero ideal)\n",
            }
            s
        }
    })
}

/// `Some(k)` when the complex is a `k`-cycle graph with `k >= 4`.
fn n_gon(complex: &SimplicialComplex) -> Option<usize> {
    let n = complex.vertex_count();
    if n < 4 || complex.facets().len() != n || complex.facets().iter().any(|f| f.len() != 2) {
        return None;
    }
    let degree_two = (0..n).all(|v| complex.facets().iter().filter(|f| f.contains(v)).count() == 2);
    (degree_two && complex.is_strongly_connected().ok()?).then_some(n)
}

/// Which construction the pipeline used.
fn route(complex: &SimplicialComplex) -> Result<(&'static str, BuildPlan, bool), String> {
    if let Some(peel) = complex.peel_generalized_tree() {
        let plan = BuildPlan::from_peel(complex.names().to_vec(), &peel);
        return if complex.is_d_tree() {
            Ok(("d-tree", plan, true))
        } else {
            Ok(("generalized tree", plan, false))
        };
    }
    if let Some(shape) = complex.recognize_lemma3_shape() {
        return Ok(("boundary core", BuildPlan::from_lemma3(complex.names().to_vec(), &shape), true));
    }
    let mut why = String::from(
        "no certificate: the complex is not a generalized tree (so I has no 2-linear resolution) \
         and is not a boundary-of-simplex core with subfacet branches",
    );
    if let Some(k) = n_gon(complex) {
        why += &format!(
            "; it is the {k}-gon, for which it is open whether ara I reaches pd = height = {}",
            ideal::height(complex)
        );
    }
    Err(why)
}

pub fn cmd_pipeline(complex: &SimplicialComplex, cfg: RunConfig) -> Result<Outcome, Failure> {
    let (kind, plan, sci) = match route(complex) {
        Ok(r) => r,
        Err(why) => {
            let text = match cfg.format {
                Format::Json => render(&json!({"certificate": Value::Null, "refusal": why})),
                Format::Text => format!("refused: {why}\n"),
            };
            return Ok(Outcome { text, code: EXIT_FAIL });
        }
    };
    let mut options = PipelineOptions::with_case(cfg.case);
    options.construct.verify = cfg.verify();
    let result: PipelineResult = match kind {
        "boundary core" => pipeline::lemma3_sci_generators(complex, cfg.field, options)?,
        _ if sci => pipeline::dtree_sci_generators(&plan, cfg.field, options)?,
        _ => pipeline::fold_plan(&plan, cfg.field, options)?,
    };
    let pd = hochster::proj_dim(complex, cfg.field)?;
    let height = ideal::height(complex);
    let size = result.presentation.len();
    let lower = ara_lower_bound(complex, cfg.field)?;
    let steps: Vec<String> = result.steps.iter().map(|s| s.to_string()).collect();
    // ara is pinned when the presentation meets the lower bound
    let ara = (size == lower).then_some(size);
    let set_theoretic_ci = size == height;
    let text = match cfg.format {
        Format::Json => render(&json!({
            "route": kind,
            "steps": steps,
            "presentation": presentation_json(&result.presentation),
            "pd": pd,
            "height": height,
            "ara_lower_bound": lower,
            "ara": ara,
            "set_theoretic_complete_intersection": set_theoretic_ci,
            "report": report_json(&result.report),
        })),
        Format::Text => {
            let mut s = format!("route: {kind}\n");
            for line in &steps {
                s += &format!("  step {line}\n");
            }
            s += &result.presentation.to_text();
            s += &format!("pd: {pd}\nheight: {height}\nara lower bound: {lower}\n");
            match ara {
                Some(a) => s += &format!("ara I = {a}\n"),
                None => s += &format!("ara I <= {size}\n"),
            }
            s += &format!("set-theoretic complete intersection: {}\n", yes(set_theoretic_ci));
            s += &report_text(&result.report);
            s
        }
    };
    Ok(Outcome { text, code: verdict_code(result.report.verdict) })
}

/// Tallies for one property of the check suite.
#[derive(Debug, Default, Clone, serde::Serialize)]
struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    inconclusive: usize,
    /// Outside what the field supports (Case 2.2 over the rationals with h > 2).
    unsupported: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally { name, ..Default::default() }
    }

    fn record(&mut self, ok: Option<bool>, describe: impl FnOnce() -> String) {
        self.cases += 1;
        match ok {
            Some(true) => {}
            Some(false) => {
                self.failures += 1;
                if self.first_failure.is_none() {
                    self.first_failure = Some(describe());
                }
            }
            None => self.inconclusive += 1,
        }
    }

    fn ok(&self) -> usize {
        self.cases - self.failures - self.inconclusive - self.unsupported
    }
}

/// Random complexes checked against the projective-dimension recursion,
/// the peel / 2-linearity equivalence and the cone construction itself.
pub fn cmd_check(seed: u64, count: usize, max_vertices: usize, cfg: RunConfig) -> Result<Outcome, Failure> {
    use rand::Rng;
    let field = cfg.field;
    let mut rng = random::rng(seed);
    let mut recursion = Tally::new("pd recursion");
    let mut peel = Tally::new("peel iff 2-linear");
    let mut construct = Tally::new("cone construction");

    for _ in 0..count {
        let n = rng.gen_range(1..=max_vertices);
        let c = random::random_complex(&mut rng, n);
        let f = random::random_proper_face(&mut rng, &c);
        let describe = |c: &SimplicialComplex| format!("{:?} with F = {}", c, c.face_to_string(f));
        let lhs = hochster::proj_dim(&c.cone_union(f, "x0")?, field)?;
        let rhs = hochster::lemma1_rhs(&c, f, field)?;
        recursion.record(Some(lhs == rhs), || describe(&c));
    }

    let mut made = 0;
    while made < count {
        let n = rng.gen_range(1..=max_vertices);
        let c = random::random_complex(&mut rng, n);
        if c.is_simplex() {
            continue;
        }
        made += 1;
        let lhs = c.peel_generalized_tree().is_some();
        let rhs = hochster::has_2_linear_resolution(&c, field)?;
        peel.record(Some(lhs == rhs), || format!("{c:?}: peel {lhs}, 2-linear {rhs}"));
    }

    // the verifier is the expensive part; stay on small complexes
    let small = max_vertices.min(6);
    for _ in 0..count {
        let n = rng.gen_range(1..=small);
        let c = random::random_complex(&mut rng, n);
        let f = random::random_proper_face(&mut rng, &c);
        let options = ConstructOptions { verify: cfg.verify(), ..Default::default() };
        let outcome = match cone_generators(&c, f, "x0", None, field, options) {
            Ok(b) => {
                let h = b.presentation.meta.h;
                let size_ok = h == 0 || b.presentation.len() == (h + 1).max(c.vertex_count() - f.len());
                Some(b.report.passed() && size_ok)
            }
            Err(Error::Inconclusive(_)) | Err(Error::TooLarge(_)) => None,
            Err(Error::RootsUnavailable { .. }) if field == Field::Rational => {
                construct.cases += 1;
                construct.unsupported += 1;
                continue;
            }
            Err(_) => Some(false),
        };
        construct.record(outcome, || format!("{:?} with F = {}", c, c.face_to_string(f)));
    }

    let tallies = [recursion, peel, construct];
    let failed = tallies.iter().any(|t| t.failures > 0);
    let inconclusive = tallies.iter().any(|t| t.inconclusive > 0);
    let code = if failed {
        EXIT_FAIL
    } else if inconclusive {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    };
    let text = match cfg.format {
        Format::Json => render(&json!({"seed": seed, "field": field.to_string(), "properties": tallies})),
        Format::Text => {
            let mut s = format!("seed: {seed}\nfield: {field}\n");
            for t in &tallies {
                s += &format!(
                    "{}: {}/{} ok, {} failed, {} inconclusive",
                    t.name,
                    t.ok(),
                    t.cases,
                    t.failures,
                    t.inconclusive
                );
                if t.unsupported > 0 {
                    s += &format!(", {} unsupported (need roots of unity of order > 2)", t.unsupported);
                }
                s.push('\n');
                if let Some(d) = &t.first_failure {
                    s += &format!("  first failure: {d}\n");
                }
            }
            s
        }
    };
    Ok(Outcome { text, code })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::four_cycle;

    #[test]
    fn apex_suffixing() {
        let c = SimplicialComplex::from_named_facets(vec!["x0".into(), "x0_1".into()], &[vec!["x0", "x0_1"]]).unwrap();
        assert_eq!(fresh_apex(&c, None), "x0_2");
        assert_eq!(fresh_apex(&four_cycle(), None), "x0");
        assert_eq!(fresh_apex(&four_cycle(), Some("x1")), "x1_1");
    }

    #[test]
    fn faces_parse() {
        let c = four_cycle();
        assert_eq!(parse_face(&c, "x1, x2").unwrap().len(), 2);
        assert_eq!(parse_face(&c, "{x4}").unwrap().len(), 1);
        assert!(parse_face(&c, "").unwrap().is_empty());
        assert!(parse_face(&c, "x9").is_err());
    }

    #[test]
    fn case21_over_rationals_is_usage() {
        let out = OutputArgs { format: Format::Text, timing: false };
        assert_eq!(RunConfig::new(0, CaseArg::TwoOne, out).unwrap_err().code, EXIT_USAGE);
        assert_eq!(RunConfig::new(4, CaseArg::Auto, out).unwrap_err().code, EXIT_USAGE);
        assert!(RunConfig::new(7, CaseArg::TwoOne, out).is_ok());
    }

    #[test]
    fn cycle_detection() {
        assert_eq!(n_gon(&four_cycle()), Some(4));
        assert_eq!(n_gon(&SimplicialComplex::boundary_complex(3).unwrap()), None);
    }

    #[test]
    fn check_suite_small() {
        let out = OutputArgs { format: Format::Text, timing: false };
        let cfg = RunConfig::new(2, CaseArg::Auto, out).unwrap();
        let o = cmd_check(5, 20, 5, cfg).unwrap();
        assert_eq!(o.code, EXIT_OK, "{}", o.text);
        assert!(o.text.starts_with("seed: 5\n"));
    }
}
