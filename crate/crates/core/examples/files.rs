//! Reading and writing complex files and polynomial lists.

use sr_cone::{io, Field};

fn main() -> sr_cone::Result<()> {
    let text = r#"{"vertices": ["a", "b", "c"], "facets": [["c", "b"], ["a", "b"]]}"#;
    let c = io::parse_complex(text)?;
    print!("{}", io::complex_to_json(&c));

    let cone = c.cone_union(c.set_by_names(&["a"])?, "x0")?;
    let dir = std::env::temp_dir().join("sr-cone-files-example.json");
    io::write_complex(&dir, &cone)?;
    println!("cone written to {} and read back equal: {}", dir.display(), io::read_complex(&dir)? == cone);

    let polys = io::parse_polynomials("# witness\na*c\n", c.names(), Field::Rational)?;
    println!("{} witness polynomial(s): {}", polys.len(), polys[0].to_string_with(c.names()));
    Ok(())
}
