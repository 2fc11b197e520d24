//! Iterated cone constructions: fold single cone steps along a build plan,
//! feeding each step's output in as the next step's witness.

use std::fmt;

use crate::complex::{Lemma3Shape, PeelSequence, SimplicialComplex};
use crate::cone::{ambient_cone, ambient_ideal, construct, verify_presentation, CaseChoice, ConeStep, ConstructOptions, PresentationCase, RadicalPresentation};
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::field::Field;
use crate::groebner::VerificationReport;
use crate::hochster;
use crate::ideal::{codim, degree, stanley_reisner_ideal};
use crate::poly::Polynomial;

/// Starting complex of a plan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlanBase {
    /// The full simplex on these vertices; its ideal is zero.
    Simplex(FaceSet),
    /// `∂(nonface) * simplex(rest)` on `vertices`; its ideal is `(x^nonface)`.
    Hypersurface { vertices: FaceSet, nonface: FaceSet },
}

impl PlanBase {
    pub fn vertices(&self) -> FaceSet {
        match self {
            PlanBase::Simplex(v) => *v,
            PlanBase::Hypersurface { vertices, .. } => *vertices,
        }
    }

    pub fn facets(&self) -> Vec<FaceSet> {
        match self {
            PlanBase::Simplex(v) => vec![*v],
            PlanBase::Hypersurface { vertices, nonface } => nonface.iter().map(|v| vertices.without(v)).collect(),
        }
    }
}

/// Add vertex `vertex` as the apex of a cone over `face`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlanStep {
    pub face: FaceSet,
    pub vertex: usize,
}

/// A base complex and cone steps, all indexed in the final vertex table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildPlan {
    pub names: Vec<String>,
    pub base: PlanBase,
    pub steps: Vec<PlanStep>,
}

impl BuildPlan {
    /// Reverse a peel: start from the terminal simplex and re-add vertices.
    pub fn from_peel(names: Vec<String>, peel: &PeelSequence) -> Self {
        BuildPlan {
            names,
            base: PlanBase::Simplex(peel.terminal),
            steps: peel.steps.iter().rev().map(|s| PlanStep { face: s.base, vertex: s.vertex }).collect(),
        }
    }

    pub fn from_lemma3(names: Vec<String>, shape: &Lemma3Shape) -> Self {
        BuildPlan {
            names,
            base: PlanBase::Hypersurface { vertices: shape.branches.terminal, nonface: shape.core_nonface },
            steps: shape.branches.steps.iter().rev().map(|s| PlanStep { face: s.base, vertex: s.vertex }).collect(),
        }
    }

    /// The complex the plan builds.
    pub fn replay(&self) -> Result<SimplicialComplex> {
        let mut facets = self.base.facets();
        for step in &self.steps {
            facets = ambient_cone(&facets, step.face, step.vertex);
        }
        SimplicialComplex::from_masks(self.names.clone(), facets)
    }
}

/// What happened at one fold step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepSummary {
    pub vertex: String,
    pub h: usize,
    pub t: usize,
    pub case: PresentationCase,
    pub size: usize,
}

impl fmt::Display for StepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "+{} h={} t={} {} -> {}", self.vertex, self.h, self.t, self.case, self.size)
    }
}

/// Output of a fold: the final complex with its verified presentation.
#[derive(Debug, Clone)]
pub struct PipelineResult {
    pub complex: SimplicialComplex,
    pub presentation: RadicalPresentation,
    pub report: VerificationReport,
    pub steps: Vec<StepSummary>,
}

/// Options for a fold.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PipelineOptions {
    pub construct: ConstructOptions,
    /// Verify after every step rather than only at the end.
    pub verify_each_step: bool,
}

impl PipelineOptions {
    /// Default options with a forced case.
    pub fn with_case(case: CaseChoice) -> Self {
        PipelineOptions { construct: ConstructOptions { case, ..Default::default() }, ..Default::default() }
    }
}

/// Fold along any plan whose steps cone over faces.
pub fn fold_plan(plan: &BuildPlan, field: Field, options: PipelineOptions) -> Result<PipelineResult> {
    fold(plan, field, options, false)
}

/// d-tree fold: every step must cone over a subfacet; the result has
/// exactly `height I` polynomials.
pub fn dtree_sci_generators(plan: &BuildPlan, field: Field, options: PipelineOptions) -> Result<PipelineResult> {
    let out = fold(plan, field, options, true)?;
    let height = codim(&out.complex);
    if out.presentation.len() != height {
        return Err(Error::VerificationFailed(format!(
            "{} polynomials for an ideal of height {height}",
            out.presentation.len()
        )));
    }
    Ok(out)
}

/// Recognize `∂Δ(r) * Δ(d-r+2)` plus branches, confirm `reg I = deg - codim + 1`,
/// and fold the branches over the principal core ideal.
pub fn lemma3_sci_generators(complex: &SimplicialComplex, field: Field, options: PipelineOptions) -> Result<PipelineResult> {
    let shape = complex
        .recognize_lemma3_shape()
        .ok_or_else(|| Error::ShapeNotRecognized("not a boundary-join core with branches and r >= 4".into()))?;
    let reg = hochster::regularity(complex, field)?;
    let expected = degree(complex) as isize - codim(complex) as isize + 1;
    if reg as isize != expected || reg != shape.r {
        return Err(Error::ShapeNotRecognized(format!(
            "reg I = {reg}, deg - codim + 1 = {expected}, core non-face size {}",
            shape.r
        )));
    }
    let plan = BuildPlan::from_lemma3(complex.names().to_vec(), &shape);
    dtree_sci_generators(&plan, field, options)
}

/// Run the construction along a plan without the final verification; the
/// returned presentation is only as trustworthy as the construction.
pub fn build_unverified(plan: &BuildPlan, field: Field, case: CaseChoice) -> Result<(RadicalPresentation, Vec<StepSummary>)> {
    let options = PipelineOptions::with_case(case);
    let (presentation, steps, _) = build(plan, field, options, false)?;
    Ok((presentation, steps))
}

fn fold(plan: &BuildPlan, field: Field, options: PipelineOptions, subfacets_only: bool) -> Result<PipelineResult> {
    let (presentation, steps, facets) = build(plan, field, options, subfacets_only)?;
    let complex = SimplicialComplex::from_masks(plan.names.clone(), facets)?;
    let ideal = stanley_reisner_ideal(&complex);
    let report = verify_presentation(&presentation, &ideal, options.construct.verify)?;
    Ok(PipelineResult { complex, presentation, report, steps })
}

type Built = (RadicalPresentation, Vec<StepSummary>, Vec<FaceSet>);

fn build(plan: &BuildPlan, field: Field, options: PipelineOptions, subfacets_only: bool) -> Result<Built> {
    let nvars = plan.names.len();
    let mut vertices = plan.base.vertices();
    let mut facets = plan.base.facets();
    let mut witness = match &plan.base {
        PlanBase::Simplex(_) => Vec::new(),
        PlanBase::Hypersurface { nonface, .. } => vec![Polynomial::from_face(field, nvars, *nonface)],
    };
    let mut presentation = RadicalPresentation::verbatim(witness.clone(), plan.names.clone(), field);
    let mut steps = Vec::new();

    for (k, step) in plan.steps.iter().enumerate() {
        if vertices.contains(step.vertex) || step.vertex >= nvars {
            return Err(Error::OutOfRange(format!("step {} reuses or misplaces vertex {}", k + 1, step.vertex)));
        }
        let top = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        if subfacets_only {
            let pure = facets.iter().all(|f| f.len() == top);
            if !pure || step.face.len() + 1 != top || !facets.iter().any(|f| step.face.is_subset(*f)) {
                return Err(Error::NotASubfacet);
            }
        }
        let cone_step = ConeStep { vertices, facets: &facets, face: step.face, apex: step.vertex, nvars, field };
        presentation = construct(&cone_step, &witness, plan.names.clone(), options.construct.case)?;
        steps.push(StepSummary {
            vertex: plan.names[step.vertex].clone(),
            h: witness.iter().filter(|p| !p.is_zero()).count(),
            t: vertices.difference(step.face).len(),
            case: presentation.case,
            size: presentation.len(),
        });
        facets = ambient_cone(&facets, step.face, step.vertex);
        vertices = vertices.with(step.vertex);
        if options.verify_each_step && k + 1 < plan.steps.len() {
            verify_presentation(&presentation, &ambient_ideal(nvars, vertices, &facets), options.construct.verify)?;
        }
        witness = presentation.polynomials.clone();
    }
    Ok((presentation, steps, facets))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::tests::{four_cycle, names, path3};

    #[test]
    fn path_is_one_step() {
        let peel = path3().peel_generalized_tree().unwrap();
        let plan = BuildPlan::from_peel(names(3), &peel);
        assert_eq!(plan.replay().unwrap(), path3());
        let out = dtree_sci_generators(&plan, Field::Rational, Default::default()).unwrap();
        assert_eq!(out.presentation.len(), 1);
        assert_eq!(out.complex, path3());
        assert!(out.report.passed());
    }

    #[test]
    fn empty_plan() {
        let s = SimplicialComplex::elementary_simplex(3).unwrap();
        let plan = BuildPlan::from_peel(names(3), &s.peel_generalized_tree().unwrap());
        let out = dtree_sci_generators(&plan, Field::Prime(101), Default::default()).unwrap();
        assert!(out.presentation.is_empty());
    }

    #[test]
    fn boundary_tetrahedron_is_principal() {
        let b4 = SimplicialComplex::boundary_complex(4).unwrap();
        let out = lemma3_sci_generators(&b4, Field::Rational, Default::default()).unwrap();
        let nm = names(4);
        assert_eq!(out.presentation.polynomials, vec![Polynomial::parse("x1*x2*x3*x4", &nm, Field::Rational).unwrap()]);
    }

    #[test]
    fn boundary_with_branch() {
        let b4 = SimplicialComplex::boundary_complex(4).unwrap();
        let y = SimplicialComplex::from_masks(vec!["y".into()], vec![FaceSet::singleton(0)]).unwrap();
        let joined = b4.join(&y).unwrap();
        let sub = joined.subfacets().unwrap()[0];
        let branched = joined.cone_union(sub, "z").unwrap();
        let out = lemma3_sci_generators(&branched, Field::Prime(101), PipelineOptions::with_case(CaseChoice::Case22)).unwrap();
        assert_eq!(out.presentation.len(), 2);
        assert_eq!(out.presentation.len(), codim(&branched));
    }

    /// Path x1-...-x6 built edge by edge: the last step has h = 3.
    fn path6_plan() -> BuildPlan {
        BuildPlan {
            names: names(6),
            base: PlanBase::Simplex(FaceSet::from_bits(0b11)),
            steps: (2..6).map(|v| PlanStep { face: FaceSet::singleton(v - 1), vertex: v }).collect(),
        }
    }

    #[test]
    fn padded_roots_when_h_does_not_divide() {
        // 3 does not divide 100, so GF(101) pads with the 4th roots of unity
        let out = dtree_sci_generators(&path6_plan(), Field::Prime(101), PipelineOptions::with_case(CaseChoice::Case22)).unwrap();
        let last = out.steps.last().unwrap();
        assert_eq!((last.h, last.t, last.case), (3, 4, PresentationCase::Case22));
        assert_eq!(out.presentation.meta.omega.as_ref().map(|w| w.len()), Some(4));
        assert!(out.report.passed());
        // 3 divides 6: plain cube roots over GF(7)
        let out = dtree_sci_generators(&path6_plan(), Field::Prime(7), PipelineOptions::with_case(CaseChoice::Case22)).unwrap();
        assert_eq!(out.presentation.meta.omega.as_ref().map(|w| w.len()), Some(3));
        assert!(out.report.passed());
    }

    #[test]
    fn four_cycle_is_refused() {
        assert!(matches!(
            lemma3_sci_generators(&four_cycle(), Field::Rational, Default::default()),
            Err(Error::ShapeNotRecognized(_))
        ));
    }

    #[test]
    fn non_subfacet_step_rejected() {
        let plan = BuildPlan {
            names: names(3),
            base: PlanBase::Simplex(FaceSet::from_bits(0b011)),
            steps: vec![PlanStep { face: FaceSet::EMPTY, vertex: 2 }],
        };
        assert_eq!(dtree_sci_generators(&plan, Field::Rational, Default::default()).unwrap_err(), Error::NotASubfacet);
        let out = fold_plan(&plan, Field::Rational, Default::default()).unwrap();
        assert_eq!(out.presentation.len(), 2);
    }
}
