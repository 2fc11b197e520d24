//! Graded Betti tables from Hochster's formula, over several fields.
//!
//! The triangulated projective plane (6 vertices) has 2-torsion, so its
//! table over GF(2) differs from the one over the rationals.

use sr_cone::hochster::{compare_fields, graded_betti, proj_dim, regularity};
use sr_cone::{Field, SimplicialComplex};

fn main() -> sr_cone::Result<()> {
    let rp2: Vec<Vec<usize>> = [
        [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
        [1, 2, 4], [2, 3, 5], [1, 3, 4], [1, 3, 5], [2, 4, 5],
    ]
    .iter()
    .map(|f| f.to_vec())
    .collect();
    let names = (1..=6).map(|i| format!("x{i}")).collect();
    let c = SimplicialComplex::from_facets(&rp2, names)?;

    for field in [Field::Rational, Field::Prime(2)] {
        println!("over {field}:\n{}", graded_betti(&c, field)?);
        println!("pd {} reg {}\n", proj_dim(&c, field)?, regularity(&c, field)?);
    }
    for d in compare_fields(&c, &[Field::Rational, Field::Prime(2)])? {
        println!("{d:?}");
    }
    Ok(())
}
