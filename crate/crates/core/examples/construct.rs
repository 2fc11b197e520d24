//! Radical generators for the 4-cycle coned over one vertex, in every case
//! the construction offers, each checked by the Gröbner verifier.

use sr_cone::cone::{cone_generators, ConstructOptions};
use sr_cone::{CaseChoice, Field};

fn main() -> sr_cone::Result<()> {
    let names: Vec<String> = ["x1", "x2", "x3", "x4"].iter().map(|s| s.to_string()).collect();
    let c = sr_cone::SimplicialComplex::from_named_facets(names, &[vec!["x1", "x2"], vec!["x2", "x3"], vec!["x3", "x4"], vec!["x4", "x1"]])?;
    let face = c.set_by_names(&["x4"])?;

    let runs = [
        (Field::Rational, CaseChoice::Auto),
        (Field::Prime(2), CaseChoice::Auto),
        (Field::Prime(5), CaseChoice::Case22),
    ];
    for (field, case) in runs {
        let opts = ConstructOptions { case, ..Default::default() };
        let built = cone_generators(&c, face, "x0", None, field, opts)?;
        print!("{}", built.presentation.to_text());
        println!("verdict {:?}, {} S-pairs\n", built.report.verdict, built.report.spairs_total);
    }
    Ok(())
}
