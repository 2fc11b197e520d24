//! The Stanley-Reisner correspondence between complexes and squarefree
//! monomial ideals.

use std::fmt;

use crate::complex::{minimal_nonfaces, SimplicialComplex};
use crate::error::{Error, Result};
use crate::face::{minimal_sets, FaceSet};
use crate::field::Field;
use crate::hochster;
use crate::poly::{Monomial, Polynomial};

/// A squarefree monomial ideal, each generator given by its support.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialIdeal {
    nvars: usize,
    generators: Vec<FaceSet>,
}

/// Variable sets of the minimal primes, one per facet.
pub type PrimeList = Vec<FaceSet>;

impl MonomialIdeal {
    /// Minimalizes and sorts (by degree, then lexicographically).
    pub fn new(nvars: usize, generators: Vec<FaceSet>) -> Result<Self> {
        let full = FaceSet::full(nvars);
        if let Some(g) = generators.iter().find(|g| !g.is_subset(full)) {
            let index = g.difference(full).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange { index, count: nvars });
        }
        Ok(MonomialIdeal { nvars, generators: minimal_sets(generators) })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, generators: Vec::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[FaceSet] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Whether a monomial is divisible by some generator.
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        let support = m.support();
        self.generators.iter().any(|g| g.is_subset(support))
    }

    /// First term of `f` outside the ideal, if any. A polynomial lies in a
    /// monomial ideal exactly when each of its terms does.
    pub fn first_term_outside<'a>(&self, f: &'a Polynomial) -> Option<&'a Monomial> {
        f.terms().iter().map(|(m, _)| m).find(|m| !self.contains_monomial(m))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.first_term_outside(f).is_none()
    }

    pub fn to_polynomials(&self, field: Field) -> Vec<Polynomial> {
        self.generators.iter().map(|g| Polynomial::from_face(field, self.nvars, *g)).collect()
    }

    /// Generator list with the ambient ring grown to `nvars` variables.
    pub fn extend_vars(&self, nvars: usize) -> MonomialIdeal {
        assert!(nvars >= self.nvars);
        MonomialIdeal { nvars, generators: self.generators.clone() }
    }

    /// One squarefree monomial per line.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> IdealDisplay<'a> {
        IdealDisplay { ideal: self, names }
    }
}

pub struct IdealDisplay<'a> {
    ideal: &'a MonomialIdeal,
    names: &'a [String],
}

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.ideal.generators {
            let line: Vec<&str> = g.iter().map(|v| self.names[v].as_str()).collect();
            writeln!(f, "{}", line.join("*"))?;
        }
        Ok(())
    }
}

/// `I_Δ`: generated by the products over minimal non-faces.
pub fn stanley_reisner_ideal(complex: &SimplicialComplex) -> MonomialIdeal {
    let gens = minimal_nonfaces(complex.vertex_set(), complex.facets());
    MonomialIdeal { nvars: complex.vertex_count(), generators: gens }
}

/// The complex whose Stanley-Reisner ideal is `ideal`.
///
/// Facets are complements of the minimal transversals of the generator
/// supports (computed incrementally, one generator at a time).
pub fn complex_from_ideal(ideal: &MonomialIdeal, names: Vec<String>) -> Result<SimplicialComplex> {
    if names.len() != ideal.nvars {
        return Err(Error::AmbientMismatch(names.len(), ideal.nvars));
    }
    if ideal.generators.iter().any(|g| g.len() <= 1) {
        return Err(Error::LinearGenerator);
    }
    let mut transversals = vec![FaceSet::EMPTY];
    for &g in &ideal.generators {
        let mut next = Vec::new();
        for t in transversals {
            if !t.intersection(g).is_empty() {
                next.push(t);
            } else {
                next.extend(g.iter().map(|v| t.with(v)));
            }
        }
        transversals = minimal_sets(next);
    }
    let full = FaceSet::full(ideal.nvars);
    let facets = transversals.into_iter().map(|t| full.difference(t)).collect();
    SimplicialComplex::from_masks(names, facets)
}

/// `P_F = (X ∖ F)` for each facet `F`, in facet order.
pub fn minimal_primes(complex: &SimplicialComplex) -> PrimeList {
    let full = complex.vertex_set();
    complex.facets().iter().map(|f| full.difference(*f)).collect()
}

/// `|X| - max |F|`.
pub fn height(complex: &SimplicialComplex) -> usize {
    complex.vertex_count() - complex.max_facet_size()
}

pub fn codim(complex: &SimplicialComplex) -> usize {
    height(complex)
}

/// Multiplicity: number of facets of maximal size.
pub fn degree(complex: &SimplicialComplex) -> usize {
    let top = complex.max_facet_size();
    complex.facets().iter().filter(|f| f.len() == top).count()
}

/// All minimal primes share one height; equivalent to purity.
pub fn is_unmixed(complex: &SimplicialComplex) -> bool {
    let primes = minimal_primes(complex);
    primes.windows(2).all(|w| w[0].len() == w[1].len())
}

/// `max(pd K[Δ], largest minimal prime height)`, a lower bound for `ara I_Δ`.
pub fn ara_lower_bound(complex: &SimplicialComplex, field: Field) -> Result<usize> {
    let pd = hochster::proj_dim(complex, field)?;
    let widest = minimal_primes(complex).iter().map(|p| p.len()).max().unwrap_or(0);
    Ok(pd.max(widest))
}
