//! File formats: complexes as JSON documents, polynomial lists as text.
//!
//! ```json
//! { "vertices": ["x1", "x2", "x3", "x4"],
//!   "facets": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x1"]] }
//! ```
//!
//! Polynomial files hold one polynomial per line; blank lines and lines
//! starting with `#` (such as a presentation header) are skipped.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
}

impl ComplexFile {
    pub fn from_complex(complex: &SimplicialComplex) -> Self {
        let names = complex.names();
        ComplexFile {
            vertices: names.to_vec(),
            facets: complex.facets().iter().map(|f| f.iter().map(|v| names[v].clone()).collect()).collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_named_facets(self.vertices.clone(), &self.facets)
    }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let file: ComplexFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("complex file: {e}")))?;
    file.to_complex()
}

pub fn read_complex(path: impl AsRef<Path>) -> Result<SimplicialComplex> {
    parse_complex(&std::fs::read_to_string(path)?)
}

/// Pretty JSON with a trailing newline; facets in canonical order.
pub fn complex_to_json(complex: &SimplicialComplex) -> String {
    let mut out = serde_json::to_string_pretty(&ComplexFile::from_complex(complex)).expect("serializable");
    out.push('\n');
    out
}

pub fn write_complex(path: impl AsRef<Path>, complex: &SimplicialComplex) -> Result<()> {
    Ok(std::fs::write(path, complex_to_json(complex))?)
}

pub fn parse_polynomials(text: &str, names: &[String], field: Field) -> Result<Vec<Polynomial>> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| Polynomial::parse(l, names, field))
        .collect()
}

pub fn read_polynomials(path: impl AsRef<Path>, names: &[String], field: Field) -> Result<Vec<Polynomial>> {
    parse_polynomials(&std::fs::read_to_string(path)?, names, field)
}
