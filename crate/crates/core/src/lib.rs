//! Stanley-Reisner ideals, Hochster's formula and explicit radical
//! generators for cone unions of simplicial complexes.

pub mod complex;
pub mod cone;
pub mod error;
pub mod face;
pub mod cli;
pub mod field;
mod gbcore;
pub mod groebner;
pub mod hochster;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod pipeline;
pub mod poly;
pub mod random;

pub use complex::SimplicialComplex;
pub use cone::{CaseChoice, RadicalPresentation};
pub use error::{Error, Result};
pub use face::FaceSet;
pub use field::{Field, FieldElement};
pub use ideal::MonomialIdeal;
pub use poly::{Monomial, Polynomial};
