//! Stanley-Reisner ideal, minimal primes, height and degree of the 4-cycle.

use sr_cone::ideal::{degree, height, minimal_primes, stanley_reisner_ideal};
use sr_cone::SimplicialComplex;

fn main() -> sr_cone::Result<()> {
    let names: Vec<String> = ["x1", "x2", "x3", "x4"].iter().map(|s| s.to_string()).collect();
    let c = SimplicialComplex::from_named_facets(names, &[["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x1"]].map(|f| f.to_vec()))?;

    print!("minimal generators of I:\n{}", stanley_reisner_ideal(&c).display_with(c.names()));
    for p in minimal_primes(&c) {
        println!("prime {}", c.face_to_string(p));
    }
    println!("height {}, degree {}, pure {}", height(&c), degree(&c), c.is_pure());
    let sub: Vec<String> = c.subfacets()?.into_iter().map(|f| c.face_to_string(f)).collect();
    println!("subfacets {}", sub.join(" "));
    Ok(())
}
