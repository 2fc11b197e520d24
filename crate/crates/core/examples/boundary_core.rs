//! ∂Δ(4) with a branch: the principal core ideal extended cone by cone.

use sr_cone::hochster::regularity;
use sr_cone::ideal::{codim, degree};
use sr_cone::pipeline::lemma3_sci_generators;
use sr_cone::{Field, SimplicialComplex};

fn main() -> sr_cone::Result<()> {
    let names = ["x1", "x2", "x3", "x4", "y"].iter().map(|s| s.to_string()).collect();
    let facets = vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3], vec![0, 1, 4]];
    let c = SimplicialComplex::from_facets(&facets, names)?;
    let field = Field::Rational;
    println!("reg {} = deg {} - codim {} + 1", regularity(&c, field)?, degree(&c), codim(&c));

    let res = lemma3_sci_generators(&c, field, Default::default())?;
    for s in &res.steps {
        println!("  {s}");
    }
    print!("{}", res.presentation.to_text());
    println!("verdict {:?}", res.report.verdict);
    Ok(())
}
