//! Every facet is a product of smaller tubing posets. Prints each facet of
//! the 3-path with the sizes of its factors and checks the explicit map.
//!
//! Run with `cargo run --example facet_products`.

use tubex::construct::classify_facet;
use tubex::multiplihedron::Multiplihedron;
use tubex::verify::{facet_product, PosetCache};
use tubex::{Graph, WeightVector};

fn main() -> tubex::Result<()> {
    let g = Graph::path(3)?;
    let j = Multiplihedron::new(&g, &WeightVector::unit(3))?;
    let mut cache = PosetCache::default();
    for &fi in j.facet_tubings() {
        let facet = j.tubing(fi);
        let fp = facet_product(&g, facet, &mut cache)?;
        let sizes: Vec<usize> = fp.product.factors.iter().map(|f| f.len()).collect();
        let below = j.poset().down_set(fi).count_ones(..);
        let onto = fp.images.iter().all(|t| j.poset().index_of(t).is_some_and(|i| j.poset().leq(i, fi)));
        println!(
            "{:<40} {:?} factors {:?} = {} faces, {below} below the facet, map lands below: {onto}",
            facet.to_string(),
            classify_facet(facet).expect("facet tubing"),
            sizes,
            fp.product.len()
        );
    }
    Ok(())
}
