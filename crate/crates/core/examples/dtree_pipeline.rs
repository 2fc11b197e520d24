//! Iterated cones along a random d-tree: one polynomial per unit of height.

use sr_cone::ideal::codim;
use sr_cone::pipeline::{dtree_sci_generators, PipelineOptions};
use sr_cone::random::{random_dtree_plan, rng};
use sr_cone::{CaseChoice, Field};

fn main() -> sr_cone::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    let mut r = rng(seed);
    let plan = random_dtree_plan(&mut r, 2, 3);
    let complex = plan.replay()?;
    println!("seed {seed}: {complex:?}, height {}", codim(&complex));

    let field = Field::Prime(101);
    let res = dtree_sci_generators(&plan, field, PipelineOptions::with_case(CaseChoice::Case22))?;
    for s in &res.steps {
        println!("  {s}");
    }
    print!("{}", res.presentation.to_text());
    println!("verdict {:?}", res.report.verdict);
    Ok(())
}
