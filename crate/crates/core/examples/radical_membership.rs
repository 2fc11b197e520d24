//! Gröbner bases and radical membership via the Rabinowitsch trick.

use sr_cone::groebner::{buchberger, in_ideal, in_radical};
use sr_cone::{Field, Polynomial};

fn main() -> sr_cone::Result<()> {
    let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let p = |s: &str| Polynomial::parse(s, &names, Field::Rational);
    let gens = vec![p("x^2 - y*z")?, p("y^3")?];

    let gb = buchberger(&gens);
    for g in gb.polynomials() {
        println!("gb: {}", g.to_string_with(&names));
    }
    let y = p("y")?;
    let xz = p("x*z")?;
    println!("y in J: {}, y in rad J: {}", in_ideal(&y, &gens)?, in_radical(&y, &gens)?);
    println!("x*z in rad J: {}", in_radical(&xz, &gens)?);
    Ok(())
}
