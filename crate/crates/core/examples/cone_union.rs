//! Coning over a face and the projective-dimension recursion.

use sr_cone::hochster::{lemma1_rhs, proj_dim};
use sr_cone::{Field, SimplicialComplex};

fn main() -> sr_cone::Result<()> {
    let c = SimplicialComplex::boundary_complex(4)?;
    let field = Field::Rational;
    for face in [vec!["x1"], vec!["x1", "x2"], vec!["x1", "x2", "x3"]] {
        let f = c.set_by_names(&face)?;
        let cone = c.cone_union(f, "x0")?;
        println!(
            "F = {:<10} facets {:<2} pd {} predicted {}",
            c.face_to_string(f),
            cone.facets().len(),
            proj_dim(&cone, field)?,
            lemma1_rhs(&c, f, field)?
        );
    }
    Ok(())
}
