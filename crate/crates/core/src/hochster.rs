//! Reduced simplicial homology and graded Betti numbers of Stanley-Reisner
//! rings via Hochster's formula.
//!
//! `β_{i,j}(K[Δ]) = Σ_{|Y| = j} dim H̃_{j-i-1}(Δ_Y; K)`. Everything here is a
//! dimension count; no resolution is ever built.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::field::Field;
use crate::ideal::stanley_reisner_ideal;
use crate::linalg;

/// Largest vertex count accepted by the subset enumeration.
pub const ENUMERATION_CAP: usize = 16;

/// Reduced Betti numbers `dim H̃_j` for `j = -1 ..= dim Δ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyProfile {
    pub field: Field,
    /// `dims[k]` is `dim H̃_{k-1}`.
    dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn get(&self, j: isize) -> usize {
        if j < -1 {
            return 0;
        }
        self.dims.get((j + 1) as usize).copied().unwrap_or(0)
    }

    /// `(j, dim H̃_j)` for every nonzero group.
    pub fn nonzero(&self) -> Vec<(isize, usize)> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, &d)| (k as isize - 1, d))
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.dims)
    }
}

fn alternating_sum(by_size: &[usize]) -> i64 {
    // index k is dimension k-1, so size 0 (dimension -1) carries sign -1
    by_size
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { -(c as i64) } else { c as i64 })
        .sum()
}

/// Graded Betti numbers of `K[Δ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    entries: BTreeMap<(usize, usize), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries `((i, j), β_{i,j})` in ascending order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total Betti number `β_i = Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries.iter().filter(|((a, _), _)| *a == i).map(|(_, v)| v).sum()
    }

    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `reg I_Δ = max{j - i : β_{i,j} ≠ 0, i ≥ 1} + 1`, or `None` for the zero ideal.
    pub fn ideal_regularity(&self) -> Option<usize> {
        self.entries.keys().filter(|(i, _)| *i >= 1).map(|(i, j)| j - i).max().map(|r| r + 1)
    }

    /// Every entry with `i ≥ 1` sits in degree `j = i + 1`.
    pub fn is_two_linear(&self) -> bool {
        self.entries.keys().filter(|(i, _)| *i >= 1).all(|(i, j)| *j == i + 1)
    }
}

impl fmt::Display for BettiTable {
    /// Rows are homological degrees `i`, columns internal degrees `j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max_i = self.proj_dim();
        let max_j = self.entries.keys().map(|(_, j)| *j).max().unwrap_or(0);
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .chain([max_j.to_string().len(), 1])
            .max()
            .unwrap_or(1);
        write!(f, "{:>4}", "i\\j")?;
        for j in 0..=max_j {
            write!(f, " {j:>width$}")?;
        }
        writeln!(f)?;
        for i in 0..=max_i {
            write!(f, "{i:>4}")?;
            for j in 0..=max_j {
                write!(f, " {:>width$}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// All faces of the subcomplex induced on `set`, grouped by size.
fn faces_by_size(facets: &[FaceSet], set: FaceSet) -> Vec<Vec<FaceSet>> {
    let mut seen: HashSet<FaceSet> = HashSet::new();
    for f in facets {
        for s in f.intersection(set).subsets() {
            seen.insert(s);
        }
    }
    let top = seen.iter().map(|s| s.len()).max().unwrap_or(0);
    let mut out = vec![Vec::new(); top + 1];
    for s in seen {
        out[s.len()].push(s);
    }
    for level in &mut out {
        level.sort_by_key(|s| s.bits());
    }
    out
}

/// Rank of the boundary map from faces of size `s` to faces of size `s - 1`.
fn boundary_rank(upper: &[FaceSet], lower: &[FaceSet], field: Field) -> usize {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<FaceSet, usize> = lower.iter().enumerate().map(|(k, f)| (*f, k)).collect();
    let rows: Vec<Vec<i64>> = upper
        .iter()
        .map(|face| {
            let mut row = vec![0i64; lower.len()];
            for (pos, v) in face.iter().enumerate() {
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                row[index[&face.without(v)]] = sign;
            }
            row
        })
        .collect();
    linalg::rank(&rows, field)
}

fn homology_dims(facets: &[FaceSet], set: FaceSet, field: Field) -> Vec<usize> {
    let faces = faces_by_size(facets, set);
    let counts: Vec<usize> = faces.iter().map(|l| l.len()).collect();
    let mut ranks = vec![0usize; faces.len() + 1];
    for s in 1..faces.len() {
        ranks[s] = boundary_rank(&faces[s], &faces[s - 1], field);
    }
    let dims: Vec<usize> = (0..faces.len()).map(|s| counts[s] - ranks[s] - ranks[s + 1]).collect();
    debug_assert_eq!(alternating_sum(&counts), alternating_sum(&dims));
    dims
}

/// Reduced homology of the augmented chain complex; `{∅}` has `H̃_{-1} = K`.
pub fn reduced_homology(complex: &SimplicialComplex, field: Field) -> HomologyProfile {
    HomologyProfile { field, dims: homology_dims(complex.facets(), complex.vertex_set(), field) }
}

/// `Σ_j (-1)^j dim C̃_j` for the augmented chain complex.
pub fn chain_euler_characteristic(complex: &SimplicialComplex) -> i64 {
    let faces = faces_by_size(complex.facets(), complex.vertex_set());
    alternating_sum(&faces.iter().map(|l| l.len()).collect::<Vec<_>>())
}

fn check_cap(complex: &SimplicialComplex) -> Result<()> {
    if complex.vertex_count() > ENUMERATION_CAP {
        return Err(Error::EnumerationCap(complex.vertex_count()));
    }
    Ok(())
}

/// Homology of every induced subcomplex, indexed by vertex mask.
fn induced_profiles(complex: &SimplicialComplex, field: Field) -> Vec<Vec<usize>> {
    let n = complex.vertex_count();
    let facets = complex.facets();
    (0..(1u64 << n))
        .into_par_iter()
        .map(|mask| homology_dims(facets, FaceSet::from_bits(mask), field))
        .collect()
}

/// Graded Betti table of `K[Δ]` by subset enumeration (at most 16 vertices).
pub fn graded_betti(complex: &SimplicialComplex, field: Field) -> Result<BettiTable> {
    check_cap(complex)?;
    let mut entries = BTreeMap::new();
    for (mask, dims) in induced_profiles(complex, field).into_iter().enumerate() {
        let size = (mask as u64).count_ones() as usize;
        for (k, &d) in dims.iter().enumerate() {
            if d == 0 {
                continue;
            }
            // H̃_{k-1}(Δ_Y) contributes to β_{i,|Y|} with |Y| - i - 1 = k - 1
            let i = size - k;
            *entries.entry((i, size)).or_insert(0) += d;
        }
    }
    Ok(BettiTable { field, entries })
}

/// `β_i` summed directly over all vertex subsets, independent of the graded table.
pub fn total_betti(complex: &SimplicialComplex, field: Field, i: usize) -> Result<usize> {
    check_cap(complex)?;
    let n = complex.vertex_count();
    let facets = complex.facets();
    Ok((0..(1u64 << n))
        .map(|mask| {
            let y = FaceSet::from_bits(mask);
            let j = y.len() as isize - i as isize - 1;
            if j < -1 {
                return 0;
            }
            let profile = HomologyProfile { field, dims: homology_dims(facets, y, field) };
            profile.get(j)
        })
        .sum())
}

/// Projective dimension of `K[Δ]`.
pub fn proj_dim(complex: &SimplicialComplex, field: Field) -> Result<usize> {
    Ok(graded_betti(complex, field)?.proj_dim())
}

/// `max(pd K[Δ] + 1, n - |F|)`, the predicted projective dimension after
/// adding a cone over `face`.
pub fn lemma1_rhs(complex: &SimplicialComplex, face: FaceSet, field: Field) -> Result<usize> {
    if !complex.is_face(face) {
        return Err(Error::NotAFace);
    }
    if face == complex.vertex_set() {
        return Err(Error::FaceIsWholeSet);
    }
    let pd = proj_dim(complex, field)?;
    Ok((pd + 1).max(complex.vertex_count() - face.len()))
}

/// Castelnuovo-Mumford regularity of `I_Δ` (quotient regularity plus one).
pub fn regularity(complex: &SimplicialComplex, field: Field) -> Result<usize> {
    if complex.is_simplex() {
        return Err(Error::Simplex("the zero ideal has no regularity here"));
    }
    graded_betti(complex, field)?
        .ideal_regularity()
        .ok_or(Error::Simplex("the zero ideal has no regularity here"))
}

/// All generators quadratic and `reg I_Δ = 2`.
pub fn has_2_linear_resolution(complex: &SimplicialComplex, field: Field) -> Result<bool> {
    if complex.is_simplex() {
        return Err(Error::Simplex("2-linearity is undefined for the zero ideal"));
    }
    let ideal = stanley_reisner_ideal(complex);
    if ideal.generators().iter().any(|g| g.len() != 2) {
        return Ok(false);
    }
    Ok(regularity(complex, field)? == 2)
}

/// Positions where Betti tables over different fields disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDiscrepancy {
    pub first: Field,
    pub second: Field,
    pub position: (usize, usize),
    pub values: (usize, usize),
}

/// Compare Betti tables pairwise across `fields` and report every difference.
pub fn compare_fields(complex: &SimplicialComplex, fields: &[Field]) -> Result<Vec<FieldDiscrepancy>> {
    let tables: Vec<BettiTable> = fields.iter().map(|f| graded_betti(complex, *f)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for a in 0..tables.len() {
        for b in a + 1..tables.len() {
            let keys: std::collections::BTreeSet<_> =
                tables[a].entries.keys().chain(tables[b].entries.keys()).copied().collect();
            for (i, j) in keys {
                let (x, y) = (tables[a].get(i, j), tables[b].get(i, j));
                if x != y {
                    out.push(FieldDiscrepancy {
                        first: fields[a],
                        second: fields[b],
                        position: (i, j),
                        values: (x, y),
                    });
                }
            }
        }
    }
    Ok(out)
}
