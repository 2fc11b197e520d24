//! Explicit generators, up to radical, for the Stanley-Reisner ideal of a
//! cone union `Δ' = Δ ∪ co_{x0} F`.
//!
//! Everything here works in an *ambient* labeling: complexes are given as a
//! vertex set and facet list inside a larger index space, so that iterated
//! constructions (see `pipeline`) never have to renumber polynomials.

use std::fmt;

use serde::Serialize;

use crate::complex::{minimal_nonfaces, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{maximal_sets, FaceSet};
use crate::field::{Field, FieldElement};
use crate::groebner::{verify_radical_presentation_with, VerificationReport, Verdict, VerifyOptions};
use crate::ideal::{stanley_reisner_ideal, MonomialIdeal};
use crate::poly::{PolyMatrix, Polynomial};

/// Largest `p^ℓ - h` accepted in Case 2.1; the determinant generator has a
/// factor `(x0 - x_{h+1})^{p^ℓ-h}` with that many terms.
pub const CASE21_EXPONENT_CAP: u64 = 4096;

/// Vertex layout used by the construction.
///
/// `order[k]` is the ambient index of the vertex at position `k+1`:
/// first `X ∖ G`, then `G ∖ F`, then `F`, each ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeFrame {
    pub order: Vec<usize>,
    /// `|X ∖ G|`
    pub s: usize,
    /// `|X ∖ F|`
    pub t: usize,
    pub g: FaceSet,
    pub face: FaceSet,
    /// Ambient index of the new vertex.
    pub apex: usize,
}

impl ConeFrame {
    /// Ambient index of position `j` (1-based).
    pub fn var(&self, j: usize) -> usize {
        self.order[j - 1]
    }
}

/// Frame for coning `complex` over `face`; the apex gets index `n`.
pub fn make_frame(complex: &SimplicialComplex, face: FaceSet) -> Result<ConeFrame> {
    frame_in(complex.vertex_set(), complex.facets(), face, complex.vertex_count())
}

pub(crate) fn frame_in(vertices: FaceSet, facets: &[FaceSet], face: FaceSet, apex: usize) -> Result<ConeFrame> {
    if !face.is_subset(vertices) || !facets.iter().any(|f| face.is_subset(*f)) {
        return Err(Error::NotAFace);
    }
    if face == vertices {
        return Err(Error::FaceIsWholeSet);
    }
    // largest facet containing F; ties go to the lexicographically smallest
    // complement, so P_G uses the lowest indices
    let g = facets
        .iter()
        .filter(|f| face.is_subset(**f))
        .copied()
        .min_by(|a, b| b.len().cmp(&a.len()).then(vertices.difference(*a).lex_cmp(vertices.difference(*b))))
        .expect("face lies in some facet");
    let mut order: Vec<usize> = vertices.difference(g).iter().collect();
    order.extend(g.difference(face).iter());
    order.extend(face.iter());
    Ok(ConeFrame {
        s: vertices.difference(g).len(),
        t: vertices.difference(face).len(),
        order,
        g,
        face,
        apex,
    })
}

/// Write `q = Σ_j a_j x_j` over positions `j = 1..s`, giving each term to the
/// smallest position whose variable divides it.
pub fn split_coefficients(q: &Polynomial, frame: &ConeFrame) -> Result<Vec<Polynomial>> {
    let (field, n) = (q.field(), q.nvars());
    let mut rows: Vec<Vec<(crate::poly::Monomial, FieldElement)>> = vec![Vec::new(); frame.s];
    for (m, c) in q.terms() {
        let Some(j) = (1..=frame.s).find(|&j| m.exponents()[frame.var(j)] > 0) else {
            let term = Polynomial::term(field, m.clone(), field.one());
            return Err(Error::NotInFramePrime(format!("{term:?}")));
        };
        let xj = crate::poly::Monomial::var(n, frame.var(j));
        rows[j - 1].push((xj.quotient_of(m), c.clone()));
    }
    Ok(rows.into_iter().map(|terms| Polynomial::from_terms(field, n, terms)).collect())
}

/// `q̄ = φ(q)` together with the row `ā_j = φ(a_j)·x_j`, so `q̄ = Σ ā_j x_j`.
pub fn build_qbar(q: &Polynomial, frame: &ConeFrame) -> Result<(Polynomial, Vec<Polynomial>)> {
    let (field, n) = (q.field(), q.nvars());
    let row: Vec<Polynomial> = split_coefficients(q, frame)?
        .iter()
        .enumerate()
        .map(|(k, a)| a.phi_square().try_mul(&Polynomial::var(field, n, frame.var(k + 1))).expect("same ring"))
        .collect();
    let qbar = q.phi_square();
    let mut check = Polynomial::zero(field, n);
    for (k, a) in row.iter().enumerate() {
        check = check.try_add(&a.try_mul(&Polynomial::var(field, n, frame.var(k + 1)))?)?;
    }
    debug_assert_eq!(check, qbar);
    if check != qbar {
        return Err(Error::VerificationFailed("q̄ does not decompose along the frame".into()));
    }
    Ok((qbar, row))
}

/// Which construction produced a presentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PresentationCase {
    #[serde(rename = "case1")]
    Case1,
    #[serde(rename = "case21")]
    Case21,
    #[serde(rename = "case22")]
    Case22,
    /// `I_Δ = 0`: the cone ideal is generated by the monomials `x0·x_j`.
    #[serde(rename = "degenerate-h0")]
    DegenerateH0,
    /// `F = X`: both ideals are zero.
    #[serde(rename = "degenerate-FX")]
    DegenerateFX,
    /// Supplied by the caller.
    #[serde(rename = "verbatim")]
    Verbatim,
}

impl fmt::Display for PresentationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PresentationCase::Case1 => "case1",
            PresentationCase::Case21 => "case21",
            PresentationCase::Case22 => "case22",
            PresentationCase::DegenerateH0 => "degenerate-h0",
            PresentationCase::DegenerateFX => "degenerate-FX",
            PresentationCase::Verbatim => "verbatim",
        };
        f.write_str(s)
    }
}

/// Case selection. `Auto` follows the proof: Case 1 when `h+1 > t`, else
/// Case 2.1 in positive characteristic and Case 2.2 in characteristic zero.
/// Forcing `Case22` in positive characteristic relies on roots of unity of
/// order prime to `p` (padded when `h`-th ones are missing).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CaseChoice {
    #[default]
    Auto,
    Case1,
    Case21,
    Case22,
}

/// Parameters of a construction, for the header line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WitnessMeta {
    pub h: usize,
    pub s: usize,
    pub t: usize,
    pub ell: Option<u32>,
    /// Roots of unity used; the first `h` sit on the diagonal, any others
    /// pad the determinant.
    pub omega: Option<Vec<FieldElement>>,
}

/// Polynomials generating an ideal up to radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalPresentation {
    pub polynomials: Vec<Polynomial>,
    pub case: PresentationCase,
    pub field: Field,
    /// Variable names of the ambient ring.
    pub names: Vec<String>,
    pub meta: WitnessMeta,
}

impl RadicalPresentation {
    pub fn verbatim(polynomials: Vec<Polynomial>, names: Vec<String>, field: Field) -> Self {
        let h = polynomials.len();
        RadicalPresentation {
            polynomials,
            case: PresentationCase::Verbatim,
            field,
            names,
            meta: WitnessMeta { h, ..Default::default() },
        }
    }

    pub fn len(&self) -> usize {
        self.polynomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polynomials.is_empty()
    }

    /// e.g. `# case22 h=2 s=2 t=3 omega=1,-1 field=QQ`
    pub fn header(&self) -> String {
        let m = &self.meta;
        let mut out = format!("# {}", self.case);
        match self.case {
            PresentationCase::Verbatim => out.push_str(&format!(" size={}", self.polynomials.len())),
            PresentationCase::DegenerateFX => {}
            PresentationCase::DegenerateH0 => out.push_str(&format!(" h=0 t={}", m.t)),
            _ => out.push_str(&format!(" h={} s={} t={}", m.h, m.s, m.t)),
        }
        if let Some(l) = m.ell {
            out.push_str(&format!(" l={l}"));
        }
        if let Some(w) = &m.omega {
            let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            out.push_str(&format!(" omega={}", parts.join(",")));
        }
        out.push_str(&format!(" field={}", self.field));
        out
    }

    /// Header line followed by one polynomial per line.
    pub fn to_text(&self) -> String {
        let mut out = self.header();
        out.push('\n');
        for p in &self.polynomials {
            out.push_str(&p.to_string_with(&self.names));
            out.push('\n');
        }
        out
    }
}

/// Options shared by the constructions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ConstructOptions {
    pub case: CaseChoice,
    pub verify: VerifyOptions,
}

/// A cone union together with verified generators of its ideal.
#[derive(Debug, Clone)]
pub struct ConeConstruction {
    pub cone: SimplicialComplex,
    pub ideal: MonomialIdeal,
    pub presentation: RadicalPresentation,
    pub report: VerificationReport,
}

/// Generators of `I_{Δ'}` up to radical for `Δ' = Δ ∪ co_{apex} F`.
///
/// `witness` must generate `I_Δ` up to radical (checked); it defaults to the
/// minimal monomial generators. The output is verified before it is returned.
pub fn cone_generators(
    complex: &SimplicialComplex,
    face: FaceSet,
    apex_name: &str,
    witness: Option<&[Polynomial]>,
    field: Field,
    options: ConstructOptions,
) -> Result<ConeConstruction> {
    let n = complex.vertex_count();
    if !complex.is_face(face) {
        return Err(Error::NotAFace);
    }
    let cone = complex.cone_union(face, apex_name)?;
    let base_ideal = stanley_reisner_ideal(complex);
    let witness: Vec<Polynomial> = match witness {
        Some(w) => {
            for p in w {
                if p.nvars() != n {
                    return Err(Error::AmbientMismatch(p.nvars(), n));
                }
                if p.field() != field {
                    return Err(Error::FieldMismatch);
                }
            }
            let report = verify_radical_presentation_with(w, &base_ideal, complex.names(), options.verify)?;
            match report.verdict {
                Verdict::Pass => {}
                Verdict::Inconclusive => return Err(Error::Inconclusive(report.spairs_total)),
                Verdict::Fail => {
                    return Err(Error::WitnessRejected(report.failure_summary().unwrap_or_default()));
                }
            }
            w.iter().map(|p| p.extend_vars(n + 1)).collect()
        }
        None => base_ideal.extend_vars(n + 1).to_polynomials(field),
    };
    let step = ConeStep {
        vertices: complex.vertex_set(),
        facets: complex.facets(),
        face,
        apex: n,
        nvars: n + 1,
        field,
    };
    let presentation = construct(&step, &witness, cone.names().to_vec(), options.case)?;
    let ideal = stanley_reisner_ideal(&cone);
    let report = verify_presentation(&presentation, &ideal, options.verify)?;
    Ok(ConeConstruction { cone, ideal, presentation, report })
}

/// Verify and turn a failing or inconclusive report into an error.
pub(crate) fn verify_presentation(
    presentation: &RadicalPresentation,
    ideal: &MonomialIdeal,
    options: VerifyOptions,
) -> Result<VerificationReport> {
    let report = verify_radical_presentation_with(&presentation.polynomials, ideal, &presentation.names, options)?;
    match report.verdict {
        Verdict::Pass => Ok(report),
        Verdict::Inconclusive => Err(Error::Inconclusive(report.spairs_total)),
        Verdict::Fail => Err(Error::VerificationFailed(report.failure_summary().unwrap_or_default())),
    }
}

/// One cone step in ambient coordinates.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ConeStep<'a> {
    pub vertices: FaceSet,
    pub facets: &'a [FaceSet],
    pub face: FaceSet,
    pub apex: usize,
    pub nvars: usize,
    pub field: Field,
}

/// Run the construction for one step; `witness` lives in the ambient ring.
pub(crate) fn construct(
    step: &ConeStep<'_>,
    witness: &[Polynomial],
    names: Vec<String>,
    choice: CaseChoice,
) -> Result<RadicalPresentation> {
    let field = step.field;
    let witness: Vec<Polynomial> = witness.iter().filter(|p| !p.is_zero()).cloned().collect();
    let h = witness.len();

    if step.face == step.vertices {
        return Ok(RadicalPresentation {
            polynomials: Vec::new(),
            case: PresentationCase::DegenerateFX,
            field,
            names,
            meta: WitnessMeta::default(),
        });
    }
    let frame = frame_in(step.vertices, step.facets, step.face, step.apex)?;
    let x0 = Polynomial::var(field, step.nvars, step.apex);
    let var = |j: usize| Polynomial::var(field, step.nvars, frame.var(j));
    let mul = |a: &Polynomial, b: &Polynomial| a.try_mul(b).expect("same ring");

    if h == 0 {
        // I_Δ = 0 means Δ is a simplex, so I_{Δ'} = (x0·x_j : x_j ∉ F)
        let polys = (1..=frame.t).map(|j| mul(&x0, &var(j))).collect();
        return Ok(RadicalPresentation {
            polynomials: polys,
            case: PresentationCase::DegenerateH0,
            field,
            names,
            meta: WitnessMeta { h: 0, s: frame.s, t: frame.t, ..Default::default() },
        });
    }

    let mut qbar = Vec::with_capacity(h);
    let mut abar = Vec::with_capacity(h);
    for q in &witness {
        let (qb, row) = build_qbar(q, &frame)?;
        qbar.push(qb);
        abar.push(row);
    }
    let inputs = CaseInputs { frame: &frame, qbar: &qbar, abar: &abar, field, nvars: step.nvars };

    let case1 = h + 1 > frame.t;
    let case = match choice {
        CaseChoice::Auto if case1 => PresentationCase::Case1,
        CaseChoice::Auto if field.characteristic() > 0 => PresentationCase::Case21,
        CaseChoice::Auto => PresentationCase::Case22,
        CaseChoice::Case1 => PresentationCase::Case1,
        CaseChoice::Case21 => PresentationCase::Case21,
        CaseChoice::Case22 => PresentationCase::Case22,
    };
    let (polynomials, meta) = match case {
        PresentationCase::Case1 => construct_case1(&inputs)?,
        PresentationCase::Case21 => construct_case21(&inputs)?,
        _ => construct_case22(&inputs)?,
    };
    Ok(RadicalPresentation { polynomials, case, field, names, meta })
}

/// Squared witnesses and coefficient matrix, ready for one of the cases.
#[derive(Debug, Clone, Copy)]
pub struct CaseInputs<'a> {
    pub frame: &'a ConeFrame,
    pub qbar: &'a [Polynomial],
    /// `abar[i][j]`, `i < h`, `j < s`.
    pub abar: &'a [Vec<Polynomial>],
    pub field: Field,
    pub nvars: usize,
}

impl CaseInputs<'_> {
    fn h(&self) -> usize {
        self.qbar.len()
    }

    fn x0(&self) -> Polynomial {
        Polynomial::var(self.field, self.nvars, self.frame.apex)
    }

    fn var(&self, j: usize) -> Polynomial {
        Polynomial::var(self.field, self.nvars, self.frame.var(j))
    }

    /// `m × m` leading block of `Ā` (zero beyond column `s`) plus a diagonal.
    fn shifted_matrix(&self, m: usize, diag: impl Fn(usize) -> Polynomial) -> PolyMatrix {
        let mut a = PolyMatrix::zeros(self.field, self.nvars, m);
        for i in 0..m {
            for j in 0..m.min(self.frame.s) {
                a.set(i, j, self.abar[i][j].clone());
            }
        }
        a.add_diagonal(diag);
        a
    }

    fn meta(&self) -> WitnessMeta {
        WitnessMeta { h: self.h(), s: self.frame.s, t: self.frame.t, ell: None, omega: None }
    }

    /// `x0·x_j` for `j = h+2..t`.
    fn trailing(&self) -> Vec<Polynomial> {
        let x0 = self.x0();
        (self.h() + 2..=self.frame.t).map(|j| x0.try_mul(&self.var(j)).expect("same ring")).collect()
    }
}

/// `(det A₁ - x0^t, q̄_i + x0 x_i (i ≤ t), q̄_i (i > t))` with `A₁ = Ā + x0·Id_t`.
pub fn construct_case1(inputs: &CaseInputs<'_>) -> Result<(Vec<Polynomial>, WitnessMeta)> {
    let (h, t) = (inputs.h(), inputs.frame.t);
    if h + 1 <= t {
        return Err(Error::CaseGuard(format!("case 1 needs h+1 > t, got h={h}, t={t}")));
    }
    let x0 = inputs.x0();
    let a1 = inputs.shifted_matrix(t, |_| x0.clone());
    let mut out = vec![a1.determinant()?.try_sub(&x0.pow(t as u32))?];
    for i in 0..h {
        let g = if i < t { inputs.qbar[i].try_add(&x0.try_mul(&inputs.var(i + 1))?)? } else { inputs.qbar[i].clone() };
        out.push(g);
    }
    Ok((out, inputs.meta()))
}

/// Positive characteristic `p`: with `P = p^ℓ > h` minimal and
/// `A₂₁ = Ā' + x0(x0 - x_{h+1})·Id_h`, the generators are
/// `x0^{P-h}(x0 - x_{h+1})^{P-h} det A₂₁ - x0^{2P}`,
/// `q̄_i + x0(x0 - x_{h+1})x_i` and `x0·x_j` for `j > h+1`.
pub fn construct_case21(inputs: &CaseInputs<'_>) -> Result<(Vec<Polynomial>, WitnessMeta)> {
    let (h, t) = (inputs.h(), inputs.frame.t);
    if h + 1 > t {
        return Err(Error::CaseGuard(format!("case 2 needs h+1 <= t, got h={h}, t={t}")));
    }
    let p = inputs.field.characteristic();
    if p == 0 {
        return Err(Error::CaseGuard("case 2.1 needs positive characteristic".into()));
    }
    let (mut big_p, mut ell) = (p, 1u32);
    while big_p <= h as u64 {
        big_p *= p;
        ell += 1;
    }
    let e = big_p - h as u64;
    if e > CASE21_EXPONENT_CAP {
        return Err(Error::CaseGuard(format!("case 2.1 exponent p^l-h={e} exceeds {CASE21_EXPONENT_CAP}")));
    }
    let x0 = inputs.x0();
    let lin = x0.try_sub(&inputs.var(h + 1))?;
    let shift = x0.try_mul(&lin)?;
    let a21 = inputs.shifted_matrix(h, |_| shift.clone());
    let det = a21.determinant()?;
    let first = shift.pow(e as u32).try_mul(&det)?.try_sub(&x0.pow(2 * big_p as u32))?;
    let mut out = vec![first];
    for i in 0..h {
        out.push(inputs.qbar[i].try_add(&shift.try_mul(&inputs.var(i + 1))?)?);
    }
    out.extend(inputs.trailing());
    let mut meta = inputs.meta();
    meta.ell = Some(ell);
    Ok((out, meta))
}

/// With `ω_1..ω_h` the `h`-th roots of unity and
/// `A₂₂ = Ā' + diag(x0(x0 - ω_i x_{h+1}))`, the generators are
/// `det A₂₂ - x0^{2h}`, `q̄_i + x0(x0 - ω_i x_{h+1})x_i` and `x0·x_j` for `j > h+1`.
///
/// When the field lacks `h`-th roots of unity but has `N`-th ones for some
/// `N > h` (so `N` is prime to the characteristic), the first `h` roots go on
/// the diagonal and the determinant is padded by the unused shifts:
/// `∏_{k>h} x0(x0 - ω_k x_{h+1}) · det A₂₂ - x0^{2N}`. On `Ā' = 0` this is
/// `x0^N (x0^N - x_{h+1}^N) - x0^{2N} = -(x0 x_{h+1})^N`, which is all the
/// argument needs.
pub fn construct_case22(inputs: &CaseInputs<'_>) -> Result<(Vec<Polynomial>, WitnessMeta)> {
    let (h, t) = (inputs.h(), inputs.frame.t);
    if h + 1 > t {
        return Err(Error::CaseGuard(format!("case 2 needs h+1 <= t, got h={h}, t={t}")));
    }
    let field = inputs.field;
    let omega = field.roots_of_unity_at_least(h)?;
    let x0 = inputs.x0();
    let xh1 = inputs.var(h + 1);
    let shifts: Vec<Polynomial> = omega
        .iter()
        .map(|w| x0.try_mul(&x0.try_sub(&xh1.scale(w)).expect("same ring")).expect("same ring"))
        .collect();
    let a22 = inputs.shifted_matrix(h, |i| shifts[i].clone());
    let mut first = a22.determinant()?;
    for pad in &shifts[h..] {
        first = first.try_mul(pad)?;
    }
    let mut out = vec![first.try_sub(&x0.pow(2 * omega.len() as u32))?];
    for i in 0..h {
        out.push(inputs.qbar[i].try_add(&shifts[i].try_mul(&inputs.var(i + 1))?)?);
    }
    out.extend(inputs.trailing());
    let mut meta = inputs.meta();
    meta.omega = Some(omega);
    Ok((out, meta))
}

/// Stanley-Reisner ideal of an ambient-labeled complex.
pub(crate) fn ambient_ideal(nvars: usize, vertices: FaceSet, facets: &[FaceSet]) -> MonomialIdeal {
    MonomialIdeal::new(nvars, minimal_nonfaces(vertices, facets)).expect("indices in range")
}

/// Facets after adding `apex` over `face`.
pub(crate) fn ambient_cone(facets: &[FaceSet], face: FaceSet, apex: usize) -> Vec<FaceSet> {
    let mut next = facets.to_vec();
    next.push(face.with(apex));
    maximal_sets(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::{four_cycle, names};
    use crate::ideal::{ara_lower_bound, minimal_primes};

    fn set(v: &[usize]) -> FaceSet {
        v.iter().copied().collect()
    }

    fn cone_names() -> Vec<String> {
        let mut n = names(4);
        n.push("x0".into());
        n
    }

    fn p(text: &str, field: Field) -> Polynomial {
        Polynomial::parse(text, &cone_names(), field).unwrap()
    }

    #[test]
    fn frames() {
        let c = four_cycle();
        let f = make_frame(&c, set(&[3])).unwrap();
        assert_eq!((f.g, f.s, f.t), (set(&[2, 3]), 2, 3));
        assert_eq!(f.order, vec![0, 1, 2, 3]);
        let f = make_frame(&c, set(&[2, 3])).unwrap();
        assert_eq!((f.g, f.s, f.t), (set(&[2, 3]), 2, 2));
        let b4 = SimplicialComplex::boundary_complex(4).unwrap();
        let f = make_frame(&b4, set(&[0])).unwrap();
        assert_eq!((f.s, f.t), (1, 3));
        assert!(f.g.contains(0) && f.g.len() == 3);
        assert_eq!(make_frame(&c, set(&[0, 2])), Err(Error::NotAFace));
    }

    #[test]
    fn splitting() {
        let c = four_cycle();
        let frame = make_frame(&c, set(&[3])).unwrap();
        let nm = names(4);
        let q = |s: &str| Polynomial::parse(s, &nm, Field::Rational).unwrap();
        let zero = Polynomial::zero(Field::Rational, 4);
        assert_eq!(split_coefficients(&q("x1*x3"), &frame).unwrap(), vec![q("x3"), zero.clone()]);
        assert_eq!(split_coefficients(&q("x2*x4"), &frame).unwrap(), vec![zero.clone(), q("x4")]);
        assert_eq!(split_coefficients(&q("x1*x2"), &frame).unwrap(), vec![q("x2"), zero]);
        assert!(matches!(split_coefficients(&q("x3*x4"), &frame), Err(Error::NotInFramePrime(_))));

        let (qb, row) = build_qbar(&q("x1*x3"), &frame).unwrap();
        assert_eq!(qb, q("x1^2*x3^2"));
        assert_eq!(row[0], q("x1*x3^2"));
        assert!(row[1].is_zero());
    }

    #[test]
    fn example1_rationals() {
        let c = cone_generators(&four_cycle(), set(&[3]), "x0", None, Field::Rational, Default::default()).unwrap();
        let pres = &c.presentation;
        assert_eq!(pres.case, PresentationCase::Case22);
        assert_eq!(pres.len(), 3);
        assert_eq!(pres.polynomials[1], p("x1^2*x3^2 + x0^2*x1 - x0*x1*x3", Field::Rational));
        assert_eq!(pres.polynomials[2], p("x2^2*x4^2 + x0^2*x2 + x0*x2*x3", Field::Rational));
        assert!(c.report.passed());
        assert_eq!(pres.header(), "# case22 h=2 s=2 t=3 omega=1,-1 field=QQ");
    }

    #[test]
    fn example1_char2() {
        let f2 = Field::Prime(2);
        let c = cone_generators(&four_cycle(), set(&[3]), "x0", None, f2, Default::default()).unwrap();
        let pres = &c.presentation;
        assert_eq!(pres.case, PresentationCase::Case21);
        assert_eq!(pres.meta.ell, Some(2));
        assert_eq!(pres.polynomials[1], p("x1^2*x3^2 + x0^2*x1 + x0*x1*x3", f2));
        assert_eq!(pres.polynomials[2], p("x2^2*x4^2 + x0^2*x2 + x0*x2*x3", f2));
    }

    #[test]
    fn case1_on_facet() {
        // F a facet of the 4-cycle: h = 2, t = 2
        let c = cone_generators(&four_cycle(), set(&[2, 3]), "x0", None, Field::Rational, Default::default()).unwrap();
        assert_eq!(c.presentation.case, PresentationCase::Case1);
        assert_eq!(c.presentation.len(), 3);
        // the tallest minimal prime has height h+1 = 3
        assert_eq!(minimal_primes(&c.cone).iter().map(|p| p.len()).max(), Some(3));
        let forced = ConstructOptions { case: CaseChoice::Case1, ..Default::default() };
        assert!(matches!(
            cone_generators(&four_cycle(), set(&[3]), "x0", None, Field::Rational, forced),
            Err(Error::CaseGuard(_))
        ));
    }

    #[test]
    fn case22_in_positive_characteristic() {
        let opts = ConstructOptions { case: CaseChoice::Case22, ..Default::default() };
        let c = cone_generators(&four_cycle(), set(&[3]), "x0", None, Field::Prime(5), opts).unwrap();
        assert_eq!(c.presentation.meta.omega, Some(vec![FieldElement::Mod(1), FieldElement::Mod(4)]));
        let c = cone_generators(&four_cycle(), set(&[3]), "x0", None, Field::Prime(2), opts);
        assert!(matches!(c, Err(Error::RootsUnavailable { .. })));
    }

    #[test]
    fn degenerate_cases() {
        let s = SimplicialComplex::from_facets(&[vec![0, 1]], names(2)).unwrap();
        let c = cone_generators(&s, set(&[1]), "x0", None, Field::Rational, Default::default()).unwrap();
        assert_eq!(c.presentation.case, PresentationCase::DegenerateH0);
        let mut nm = names(2);
        nm.push("x0".into());
        assert_eq!(c.presentation.polynomials, vec![Polynomial::parse("x0*x1", &nm, Field::Rational).unwrap()]);
        let c = cone_generators(&s, set(&[0, 1]), "x0", None, Field::Rational, Default::default()).unwrap();
        assert_eq!(c.presentation.case, PresentationCase::DegenerateFX);
        assert!(c.presentation.is_empty());
    }

    #[test]
    fn witnesses_are_checked() {
        let nm = names(4);
        let bad = vec![Polynomial::parse("x1*x3", &nm, Field::Rational).unwrap()];
        let r = cone_generators(&four_cycle(), set(&[3]), "x0", Some(&bad), Field::Rational, Default::default());
        assert!(matches!(r, Err(Error::WitnessRejected(_))));
        // a non-monomial witness of the same ideal
        let w = vec![
            Polynomial::parse("x1*x3 + x2*x4", &nm, Field::Rational).unwrap(),
            Polynomial::parse("x2*x4", &nm, Field::Rational).unwrap(),
        ];
        let c = cone_generators(&four_cycle(), set(&[3]), "x0", Some(&w), Field::Rational, Default::default()).unwrap();
        assert_eq!(c.presentation.len(), 3);
    }

    #[test]
    fn size_law_and_lower_bound() {
        let c = four_cycle();
        for face in c.all_faces() {
            if face == c.vertex_set() {
                continue;
            }
            let r = cone_generators(&c, face, "x0", None, Field::Prime(3), Default::default()).unwrap();
            let t = 4 - face.len();
            assert_eq!(r.presentation.len(), 3.max(t), "face {face:?}");
            assert!(ara_lower_bound(&r.cone, Field::Prime(3)).unwrap() <= r.presentation.len());
        }
    }
}
