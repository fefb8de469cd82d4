//! Writes the 3-path polytope as polymake points, an OFF file and a JSON
//! face lattice into a directory (default: the system temp directory).
//!
//! Run with `cargo run --example polymake_export -- out/`.

use std::path::PathBuf;

use tubex::io::{fvector_csv, lattice_to_json, off_file, parse_lattice, polymake_points};
use tubex::multiplihedron::Multiplihedron;
use tubex::{Graph, WeightVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir: PathBuf = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    std::fs::create_dir_all(&dir)?;
    let g = Graph::path(3)?;
    let j = Multiplihedron::new(&g, &WeightVector::unit(3))?;

    let points = dir.join("path3.poly");
    std::fs::write(&points, polymake_points(j.points()))?;
    let off = dir.join("path3.off");
    std::fs::write(&off, off_file(j.points(), j.lattice())?)?;
    let json = dir.join("path3.lattice.json");
    let text = lattice_to_json(j.lattice());
    std::fs::write(&json, &text)?;

    assert_eq!(&parse_lattice(&text)?, j.lattice());
    println!("f-vector {}", fvector_csv(j.lattice()));
    for p in [points, off, json] {
        println!("wrote {}", p.display());
    }
    Ok(())
}
