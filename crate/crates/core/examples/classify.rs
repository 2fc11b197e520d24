//! Generalized-tree peeling, d-tree and boundary-core recognition.

use sr_cone::hochster::has_2_linear_resolution;
use sr_cone::{Field, SimplicialComplex};

fn show(label: &str, c: &SimplicialComplex) -> sr_cone::Result<()> {
    let peel = c.peel_generalized_tree();
    println!("{label}: generalized tree {}, d-tree {}, 2-linear {}", peel.is_some(), c.is_d_tree(), has_2_linear_resolution(c, Field::Rational)?);
    if let Some(p) = peel {
        for s in &p.steps {
            println!("  remove {} (cone over {})", c.names()[s.vertex], c.face_to_string(s.base));
        }
    }
    if let Some(shape) = c.recognize_lemma3_shape() {
        println!("  boundary core with r = {}", shape.r);
    }
    Ok(())
}

fn main() -> sr_cone::Result<()> {
    let names = |n: usize| (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>();
    let path = SimplicialComplex::from_facets(&[vec![0, 1], vec![1, 2], vec![2, 3]], names(4))?;
    let cycle = SimplicialComplex::from_facets(&[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]], names(4))?;
    // two triangles glued along an edge, plus a pendant edge
    let mixed = SimplicialComplex::from_facets(&[vec![0, 1, 2], vec![1, 2, 3], vec![3, 4]], names(5))?;
    show("path", &path)?;
    show("4-cycle", &cycle)?;
    show("mixed", &mixed)?;
    show("boundary of the 3-simplex", &SimplicialComplex::boundary_complex(4)?)
}
