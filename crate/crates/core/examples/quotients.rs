//! Domain and range quotients: collapse the thin or the thick coordinates
//! and compare facet counts with the full polytope.
//!
//! Run with `cargo run --example quotients`.

use tubex::multiplihedron::{double_quotient_hull, quotient_hull, Multiplihedron, Variant};
use tubex::{Graph, WeightVector};

fn main() -> tubex::Result<()> {
    for g in [Graph::path(2)?, Graph::path(3)?, Graph::complete(3)?, Graph::edgeless(3)?] {
        let n = g.node_count();
        let full = Multiplihedron::new(&g, &WeightVector::unit(n))?;
        let domain = quotient_hull(&g, Variant::Domain)?;
        let range = quotient_hull(&g, Variant::Range)?;
        let double = double_quotient_hull(&g)?;
        println!(
            "{:?}: full {:?}, domain {:?}, range {:?}, both {:?}; {} + {} - {} = {}",
            g,
            full.lattice().f_vector(),
            domain.lattice.f_vector(),
            range.lattice.f_vector(),
            double.lattice.f_vector(),
            domain.facets.len(),
            range.facets.len(),
            full.facets().len(),
            2 * n
        );
    }
    let range = quotient_hull(&Graph::path(2)?, Variant::Range)?;
    let shown: Vec<String> = range.vertices.iter().map(|p| p.to_string()).collect();
    println!("range pentagon of the 2-path: {}", shown.join(" "));
    Ok(())
}
