//! Simplicial complexes on at most 64 vertices.
//!
//! A complex is stored by its facets, kept as an antichain in canonical order
//! (larger facets first, then lexicographic on vertex indices), so two complexes
//! with the same vertex table are equal exactly when their facet lists are.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::face::{maximal_sets, FaceSet};

/// A vertex viewed through its complex: dense index plus display name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vertex<'a> {
    pub id: usize,
    pub name: &'a str,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    names: Vec<String>,
    facets: Vec<FaceSet>,
}

/// One removal step of a peel: `vertex` was the apex of a cone over `base`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PeelStep {
    pub vertex: usize,
    pub base: FaceSet,
}

/// Vertices removed in peel order, plus the vertex set left at the end.
///
/// Vertex indices refer to the complex the sequence was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeelSequence {
    pub steps: Vec<PeelStep>,
    pub terminal: FaceSet,
}

impl PeelSequence {
    /// Rebuild the facet list by re-adding the cones in reverse peel order,
    /// starting from the simplex on `terminal`.
    pub fn replay_facets(&self) -> Vec<FaceSet> {
        self.replay_onto(vec![self.terminal])
    }

    /// Re-add the cones in reverse peel order on top of `core` facets.
    pub fn replay_onto(&self, core: Vec<FaceSet>) -> Vec<FaceSet> {
        let mut facets = core;
        for step in self.steps.iter().rev() {
            facets.push(step.base.with(step.vertex));
            facets = maximal_sets(facets);
        }
        facets
    }
}

/// Result of recognizing `∂Δ(r) * Δ(d-r+2)` plus d-branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma3Shape {
    /// Size of the core's unique minimal non-face.
    pub r: usize,
    /// Branch vertices in removal order; `terminal` is the core vertex set.
    pub branches: PeelSequence,
    /// Core vertices with the minimal non-face first, each block ascending.
    pub core_order: Vec<usize>,
    pub core_nonface: FaceSet,
}

impl SimplicialComplex {
    /// Build a complex from facet index lists over the given vertex names.
    ///
    /// Non-maximal sets are dropped and vertices not covered by any facet
    /// become singleton facets.
    pub fn from_facets(facets: &[Vec<usize>], names: Vec<String>) -> Result<Self> {
        check_names(&names)?;
        let n = names.len();
        let mut masks = Vec::with_capacity(facets.len());
        for facet in facets {
            if facet.is_empty() {
                return Err(Error::EmptyFacet);
            }
            let mut mask = FaceSet::EMPTY;
            for &v in facet {
                if v >= n {
                    return Err(Error::VertexOutOfRange { index: v, count: n });
                }
                mask = mask.with(v);
            }
            masks.push(mask);
        }
        Ok(Self::from_masks_unchecked(names, masks))
    }

    /// Same as [`from_facets`](Self::from_facets) with facets given by vertex name.
    pub fn from_named_facets<S: AsRef<str>>(names: Vec<String>, facets: &[Vec<S>]) -> Result<Self> {
        check_names(&names)?;
        let mut index_facets = Vec::with_capacity(facets.len());
        for facet in facets {
            let mut idx = Vec::with_capacity(facet.len());
            for name in facet {
                let name = name.as_ref();
                let v = names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::UnknownVertex(name.to_string()))?;
                idx.push(v);
            }
            index_facets.push(idx);
        }
        Self::from_facets(&index_facets, names)
    }

    /// Build from facet masks. Masks must lie in `0..names.len()`.
    pub fn from_masks(names: Vec<String>, masks: Vec<FaceSet>) -> Result<Self> {
        check_names(&names)?;
        let full = FaceSet::full(names.len());
        if let Some(bad) = masks.iter().find(|m| !m.is_subset(full)) {
            let index = bad.difference(full).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange { index, count: names.len() });
        }
        Ok(Self::from_masks_unchecked(names, masks))
    }

    pub(crate) fn from_masks_unchecked(names: Vec<String>, mut masks: Vec<FaceSet>) -> Self {
        let n = names.len();
        let covered = masks.iter().fold(FaceSet::EMPTY, |acc, m| acc.union(*m));
        for v in FaceSet::full(n).difference(covered).iter() {
            masks.push(FaceSet::singleton(v));
        }
        if masks.is_empty() {
            masks.push(FaceSet::EMPTY);
        }
        SimplicialComplex { names, facets: maximal_sets(masks) }
    }

    /// The complex `{∅}` on no vertices.
    pub fn void() -> Self {
        SimplicialComplex { names: Vec::new(), facets: vec![FaceSet::EMPTY] }
    }

    /// The full simplex `Δ(n)` on vertices `x1..xn`.
    pub fn elementary_simplex(n: usize) -> Result<Self> {
        if n == 0 || n > FaceSet::CAPACITY {
            return Err(Error::OutOfRange(format!("simplex size {n} must lie in 1..=64")));
        }
        Ok(SimplicialComplex { names: default_names(n), facets: vec![FaceSet::full(n)] })
    }

    /// The boundary `∂Δ(n)`: all proper subsets of an n-set.
    pub fn boundary_complex(n: usize) -> Result<Self> {
        if !(2..=FaceSet::CAPACITY).contains(&n) {
            return Err(Error::OutOfRange(format!("boundary size {n} must lie in 2..=64")));
        }
        let full = FaceSet::full(n);
        let masks = (0..n).map(|v| full.without(v)).collect();
        Ok(SimplicialComplex { names: default_names(n), facets: maximal_sets(masks) })
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertex(&self, id: usize) -> Vertex<'_> {
        Vertex { id, name: &self.names[id] }
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex<'_>> {
        self.names.iter().enumerate().map(|(id, name)| Vertex { id, name })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertex_set(&self) -> FaceSet {
        FaceSet::full(self.names.len())
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Resolve a list of vertex names into a face mask (not checked to be a face).
    pub fn set_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<FaceSet> {
        names.iter().try_fold(FaceSet::EMPTY, |acc, n| {
            self.vertex_index(n.as_ref())
                .map(|v| acc.with(v))
                .ok_or_else(|| Error::UnknownVertex(n.as_ref().to_string()))
        })
    }

    pub fn facets(&self) -> &[FaceSet] {
        &self.facets
    }

    pub fn is_face(&self, set: FaceSet) -> bool {
        self.facets.iter().any(|f| set.is_subset(*f))
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0] == self.vertex_set()
    }

    /// Maximum facet size minus one; `{∅}` has dimension -1.
    pub fn dimension(&self) -> isize {
        self.max_facet_size() as isize - 1
    }

    pub fn max_facet_size(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let size = self.max_facet_size();
        self.facets.iter().all(|f| f.len() == size)
    }

    /// Faces of size `dim Δ`; only meaningful for pure complexes.
    pub fn subfacets(&self) -> Result<Vec<FaceSet>> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let size = self.max_facet_size();
        if size == 0 {
            return Ok(Vec::new());
        }
        let mut out: Vec<FaceSet> = self
            .facets
            .iter()
            .flat_map(|f| f.iter().map(move |v| f.without(v)))
            .collect::<HashSet<_>>()
            .into_iter()
            .collect();
        out.sort_by(|a, b| a.lex_cmp(*b));
        Ok(out)
    }

    pub fn is_subfacet(&self, set: FaceSet) -> bool {
        self.is_pure() && set.len() + 1 == self.max_facet_size() && self.is_face(set)
    }

    /// Every face, in no particular order.
    pub fn all_faces(&self) -> Vec<FaceSet> {
        let mut seen: HashSet<FaceSet> = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        seen.into_iter().collect()
    }

    /// `Δ ∪ co_{x0} F` on the vertex set extended by `apex` (appended last).
    pub fn cone_union(&self, face: FaceSet, apex: &str) -> Result<Self> {
        if !self.is_face(face) {
            return Err(Error::NotAFace);
        }
        if self.vertex_index(apex).is_some() {
            return Err(Error::DuplicateVertex(apex.to_string()));
        }
        let n = self.names.len();
        if n + 1 > FaceSet::CAPACITY {
            return Err(Error::TooManyVertices(n + 1));
        }
        let mut names = self.names.clone();
        names.push(apex.to_string());
        let mut masks: Vec<FaceSet> = self.facets.iter().copied().filter(|f| !f.is_empty()).collect();
        masks.push(face.with(n));
        Ok(SimplicialComplex { names, facets: maximal_sets(masks) })
    }

    /// The subcomplex of faces contained in `set`, relabelled densely in index order.
    pub fn induced_subcomplex(&self, set: FaceSet) -> Self {
        let set = set.intersection(self.vertex_set());
        let keep: Vec<usize> = set.iter().collect();
        let names = keep.iter().map(|&v| self.names[v].clone()).collect();
        let masks = self
            .facets
            .iter()
            .map(|f| compress(f.intersection(set), &keep))
            .collect();
        Self::from_masks_unchecked(names, masks)
    }

    /// Facets (as masks on the original labels) of the subcomplex induced on `set`.
    pub fn induced_facets(&self, set: FaceSet) -> Vec<FaceSet> {
        maximal_sets(self.facets.iter().map(|f| f.intersection(set)).collect())
    }

    /// Simplicial join; vertices of `other` are appended after those of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        if other.names.iter().any(|n| self.names.contains(n)) {
            return Err(Error::OverlappingVertices);
        }
        let n = self.names.len();
        if n + other.names.len() > FaceSet::CAPACITY {
            return Err(Error::TooManyVertices(n + other.names.len()));
        }
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let mut masks = Vec::with_capacity(self.facets.len() * other.facets.len());
        for f in &self.facets {
            for g in &other.facets {
                masks.push(f.union(FaceSet::from_bits(g.bits() << n)));
            }
        }
        Ok(SimplicialComplex { names, facets: maximal_sets(masks) })
    }

    /// Facets linked by chains whose consecutive intersections are subfacets.
    pub fn is_strongly_connected(&self) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let m = self.facets.len();
        if m <= 1 {
            return Ok(true);
        }
        let d = self.max_facet_size() - 1;
        let mut seen = vec![false; m];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for j in 0..m {
                if !seen[j] && self.facets[i].intersection(self.facets[j]).len() == d {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        Ok(seen.into_iter().all(|s| s))
    }

    /// Peel cone vertices until a simplex remains.
    ///
    /// A vertex is peelable when it lies in exactly one facet; the smallest
    /// peelable index is taken at every step. Returns `None` when the complex
    /// is not a generalized tree.
    pub fn peel_generalized_tree(&self) -> Option<PeelSequence> {
        peel_masks(self.vertex_set(), self.facets.clone(), |_, _, _| true)
    }

    /// Pure, strongly connected generalized tree.
    pub fn is_d_tree(&self) -> bool {
        self.is_pure()
            && self.is_strongly_connected().unwrap_or(false)
            && self.peel_generalized_tree().is_some()
    }

    /// Recognize `∂Δ(r) * Δ(d-r+2)` plus d-branches with `4 <= r <= d+2`.
    pub fn recognize_lemma3_shape(&self) -> Option<Lemma3Shape> {
        if !self.is_pure() || !self.is_strongly_connected().ok()? {
            return None;
        }
        let size = self.max_facet_size();
        if size == 0 {
            return None;
        }
        let d = size - 1;
        let (branches, core_facets) = peel_branches(self.vertex_set(), self.facets.clone());
        let core = branches.terminal;
        if core.len() != d + 2 {
            return None;
        }
        let nonfaces = minimal_nonfaces(core, &core_facets);
        if nonfaces.len() != 1 {
            return None;
        }
        let nonface = nonfaces[0];
        let r = nonface.len();
        if r < 4 || r > d + 2 {
            return None;
        }
        let mut core_order: Vec<usize> = nonface.iter().collect();
        core_order.extend(core.difference(nonface).iter());
        Some(Lemma3Shape { r, branches, core_order, core_nonface: nonface })
    }

    /// The same complex with vertices renumbered to follow `order` (a permutation of the names).
    pub fn reorder_vertices<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        if order.len() != self.names.len() {
            return Err(Error::OutOfRange(format!(
                "ordering has {} names for {} vertices",
                order.len(),
                self.names.len()
            )));
        }
        let mut map = vec![usize::MAX; self.names.len()];
        for (new, name) in order.iter().enumerate() {
            let old = self
                .vertex_index(name.as_ref())
                .ok_or_else(|| Error::UnknownVertex(name.as_ref().to_string()))?;
            if map[old] != usize::MAX {
                return Err(Error::DuplicateVertex(name.as_ref().to_string()));
            }
            map[old] = new;
        }
        let names = order.iter().map(|s| s.as_ref().to_string()).collect();
        let masks = self.facets.iter().map(|f| f.iter().map(|v| map[v]).collect()).collect();
        Ok(Self::from_masks_unchecked(names, masks))
    }

    /// Name-table-aware display of a face.
    pub fn face_to_string(&self, face: FaceSet) -> String {
        face.display_with(&self.names).to_string()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex[")?;
        for (k, facet) in self.facets.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", facet.display_with(&self.names))?;
        }
        write!(f, "]")
    }
}

fn check_names(names: &[String]) -> Result<()> {
    if names.len() > FaceSet::CAPACITY {
        return Err(Error::TooManyVertices(names.len()));
    }
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::DuplicateVertex(n.clone()));
        }
    }
    Ok(())
}

pub(crate) fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn compress(set: FaceSet, keep: &[usize]) -> FaceSet {
    keep.iter()
        .enumerate()
        .filter(|(_, &v)| set.contains(v))
        .map(|(i, _)| i)
        .collect()
}

/// Generic peel loop. `allow(v, facet, facets)` filters candidate removals.
fn peel_masks<F>(mut vertices: FaceSet, mut facets: Vec<FaceSet>, allow: F) -> Option<PeelSequence>
where
    F: Fn(usize, FaceSet, &[FaceSet]) -> bool,
{
    let mut steps = Vec::new();
    loop {
        if facets.len() == 1 && facets[0] == vertices {
            return Some(PeelSequence { steps, terminal: vertices });
        }
        let (v, facet) = find_peelable(vertices, &facets, &allow)?;
        steps.push(PeelStep { vertex: v, base: facet.without(v) });
        vertices = vertices.without(v);
        facets = maximal_sets(facets.into_iter().map(|f| f.without(v)).collect());
    }
}

fn find_peelable<F>(vertices: FaceSet, facets: &[FaceSet], allow: &F) -> Option<(usize, FaceSet)>
where
    F: Fn(usize, FaceSet, &[FaceSet]) -> bool,
{
    vertices.iter().find_map(|v| {
        let mut containing = facets.iter().filter(|f| f.contains(v));
        let first = *containing.next()?;
        if containing.next().is_some() || first == vertices {
            return None;
        }
        allow(v, first, facets).then_some((v, first))
    })
}

/// Peel d-branches: single-facet vertices whose removal keeps the complex pure.
fn peel_branches(vertices: FaceSet, facets: Vec<FaceSet>) -> (PeelSequence, Vec<FaceSet>) {
    let mut vertices = vertices;
    let mut facets = facets;
    let mut steps = Vec::new();
    let keeps_purity = |v: usize, facet: FaceSet, facets: &[FaceSet]| {
        let base = facet.without(v);
        facets.iter().any(|g| *g != facet && base.is_subset(*g))
    };
    while facets.len() > 1 {
        let Some((v, facet)) = find_peelable(vertices, &facets, &keeps_purity) else {
            break;
        };
        steps.push(PeelStep { vertex: v, base: facet.without(v) });
        vertices = vertices.without(v);
        facets = maximal_sets(facets.into_iter().map(|f| f.without(v)).collect());
    }
    (PeelSequence { steps, terminal: vertices }, facets)
}

/// Minimal non-faces of the complex with the given facets, restricted to `vertices`.
///
/// Level-wise search: every face or minimal non-face of size k arises from a
/// face of size k-1 extended by a larger vertex.
pub(crate) fn minimal_nonfaces(vertices: FaceSet, facets: &[FaceSet]) -> Vec<FaceSet> {
    let is_face = |s: FaceSet| facets.iter().any(|f| s.is_subset(*f));
    let mut out = Vec::new();
    for v in vertices.iter() {
        if !is_face(FaceSet::singleton(v)) {
            out.push(FaceSet::singleton(v));
        }
    }
    let mut level: Vec<FaceSet> = vertices
        .iter()
        .map(FaceSet::singleton)
        .filter(|s| is_face(*s))
        .collect();
    while !level.is_empty() {
        let mut next = Vec::new();
        for g in &level {
            let top = g.max().unwrap_or(0);
            for v in vertices.iter().filter(|&v| v > top) {
                let s = g.with(v);
                if is_face(s) {
                    next.push(s);
                } else if s.iter().all(|u| is_face(s.without(u))) {
                    out.push(s);
                }
            }
        }
        level = next;
    }
    crate::face::minimal_sets(out)
}
