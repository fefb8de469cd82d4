//! The two-node path: six maximal marked tubings realize to a hexagon.
//!
//! Run with `cargo run --example hexagon`.

use tubex::multiplihedron::Multiplihedron;
use tubex::{Graph, WeightVector};

fn main() -> tubex::Result<()> {
    let g = Graph::path(2)?;
    let j = Multiplihedron::new(&g, &WeightVector::unit(2))?;
    println!("vertices:");
    for (&i, p) in j.vertex_tubings().iter().zip(j.points()) {
        println!("  {p}  {}", j.tubing(i));
    }
    println!("facets:");
    for (&i, f) in j.facet_tubings().iter().zip(j.facets()) {
        let rel = f.hyperplane.to_string().replacen(" = ", &format!(" {} ", f.side), 1);
        println!("  {rel:<16} {}  on vertices {:?}", j.tubing(i), f.incident);
    }
    println!("f-vector: {:?}", j.lattice().f_vector());
    println!("marked tubings: {}", j.poset().len());
    Ok(())
}
