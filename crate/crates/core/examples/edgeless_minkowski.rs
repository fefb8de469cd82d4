//! The edgeless graph on three nodes: its polytope matches the Minkowski
//! sum of a simplex and a cube with one corner cut off.
//!
//! Run with `cargo run --example edgeless_minkowski`.

use tubex::construct::simplex_and_cut_cube;
use tubex::hull::{brute_force_hull, lattice_isomorphic, minkowski_sum};
use tubex::multiplihedron::Multiplihedron;
use tubex::{Graph, WeightVector};

fn main() -> tubex::Result<()> {
    for m in [2, 3] {
        let j = Multiplihedron::new(&Graph::edgeless(m)?, &WeightVector::unit(m))?;
        let (simplex, cut_cube) = simplex_and_cut_cube(m)?;
        let sum = brute_force_hull(&minkowski_sum(&simplex, &cut_cube)?)?;
        println!(
            "m = {m}: multiplihedron {:?}, sum {:?}, isomorphic: {}",
            j.lattice().f_vector(),
            sum.lattice.f_vector(),
            lattice_isomorphic(j.lattice(), &sum.lattice)?.is_some()
        );
    }
    Ok(())
}
