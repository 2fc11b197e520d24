//! Seeded random complexes and build plans for property suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{default_names, SimplicialComplex};
use crate::face::{maximal_sets, FaceSet};
use crate::pipeline::{BuildPlan, PlanBase, PlanStep};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A complex on exactly `n` vertices: a few random subsets, maximalized;
/// uncovered vertices become isolated points.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize) -> SimplicialComplex {
    let k = rng.gen_range(1..=n + 1);
    let full = FaceSet::full(n).bits();
    let masks: Vec<FaceSet> = (0..k).map(|_| FaceSet::from_bits(rng.gen_range(1..=full))).collect();
    SimplicialComplex::from_masks(default_names(n), maximal_sets(masks)).expect("valid masks")
}

/// A random face (possibly empty) other than the whole vertex set: a random
/// subset of a random facet.
pub fn random_proper_face<R: Rng>(rng: &mut R, complex: &SimplicialComplex) -> FaceSet {
    let facet = *complex.facets().choose(rng).expect("nonempty");
    loop {
        let sub = FaceSet::from_bits(rng.gen_range(0..=facet.bits()) & facet.bits());
        if sub != complex.vertex_set() {
            return sub;
        }
    }
}

/// A d-tree: simplex on `d+1` vertices followed by `steps` cones over
/// random subfacets. Vertices are numbered in order of appearance.
pub fn random_dtree_plan<R: Rng>(rng: &mut R, d: usize, steps: usize) -> BuildPlan {
    let base = FaceSet::full(d + 1);
    let mut facets = vec![base];
    let mut plan_steps = Vec::with_capacity(steps);
    for k in 0..steps {
        let facet = *facets.choose(rng).expect("nonempty");
        let drop = facet.iter().nth(rng.gen_range(0..facet.len())).expect("in range");
        let face = facet.without(drop);
        let vertex = d + 1 + k;
        plan_steps.push(PlanStep { face, vertex });
        facets.push(face.with(vertex));
        facets = maximal_sets(facets);
    }
    BuildPlan { names: default_names(d + 1 + steps), base: PlanBase::Simplex(base), steps: plan_steps }
}
