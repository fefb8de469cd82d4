//! Checks that the realized polytope of a graph has exactly the marked
//! tubings as faces, for unit and for random weights.
//!
//! Run with `cargo run --release --example face_correspondence -- cycle:4`.

use tubex::io::load_graph;
use tubex::multiplihedron::Multiplihedron;
use tubex::verify::{check_face_correspondence, random_weights};
use tubex::WeightVector;

fn main() -> tubex::Result<()> {
    let source = std::env::args().nth(1).unwrap_or_else(|| "path:3".into());
    let g = load_graph(&source)?;
    let n = g.node_count();
    let mut weights = vec![WeightVector::unit(n)];
    weights.extend(random_weights(n, 0, 5));
    for w in weights {
        let j = Multiplihedron::new(&g, &w)?;
        match check_face_correspondence(&j) {
            Ok(summary) => println!("{source} ({w}): holds: {summary}"),
            Err((message, _)) => println!("{source} ({w}): fails: {message}"),
        }
    }
    Ok(())
}
