//! The complete graph on three nodes gives the permutohedron on four
//! letters, both as a face lattice and through the collapse map from
//! tubings of the complete graph on four nodes.
//!
//! Run with `cargo run --example permutohedron`.

use tubex::construct::{collapse_node, permutohedron_lattice};
use tubex::hull::lattice_isomorphic;
use tubex::multiplihedron::Multiplihedron;
use tubex::poset::{is_isomorphism, TubingPoset};
use tubex::{Graph, WeightVector};

fn main() -> tubex::Result<()> {
    let g = Graph::complete(3)?;
    let j = Multiplihedron::new(&g, &WeightVector::unit(3))?;
    let p4 = permutohedron_lattice(4)?;
    println!("multiplihedron f-vector: {:?}", j.lattice().f_vector());
    println!("permutohedron f-vector:  {:?}", p4.f_vector());
    println!("isomorphic lattices: {}", lattice_isomorphic(j.lattice(), &p4)?.is_some());

    let k4 = Graph::complete(4)?;
    let source = TubingPoset::new(&k4)?;
    let mut map = Vec::new();
    for t in source.elements() {
        let image = collapse_node(&k4, 3, t)?;
        map.push(j.poset().index_of(&image).expect("image is a marked tubing"));
    }
    for t in source.elements().iter().filter(|t| t.len() == 2).take(4) {
        println!("  {:?} -> {}", t.tubes(), collapse_node(&k4, 3, t)?);
    }
    println!("collapse map is an order isomorphism: {}", is_isomorphism(source.ranked(), &j.poset().ranked(), &map));
    Ok(())
}
