//! Reference polytopes and the structural maps between tubing posets.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::hull::{face_lattice, facets_from_candidates, FaceLattice, Side};
use crate::realize::{Hyperplane, HyperplaneKind, LatticePoint};
use crate::tubing::{MarkedTube, MarkedTubing, Marking, Tubing};

/// Collapses an unmarked tubing of a complete graph onto a marked tubing of
/// the complete graph without node `x`. Every tube loses `x`: it turns thick
/// when it strictly contains the smallest tube around `x`, broken when it is
/// that tube and the remainder is not itself a tube of `t`, and thin
/// otherwise. Remaining nodes are relabelled densely.
pub fn collapse_node(h: &Graph, x: usize, t: &Tubing) -> Result<MarkedTubing> {
    if !h.is_complete() {
        return Err(Error::NotComplete);
    }
    let m = h.node_count();
    if x >= m {
        return Err(Error::NodeOutOfRange { node: x, n: m });
    }
    if m < 2 {
        return Err(Error::ScaleBound { what: "collapsing a node", n: m, limit: 2 });
    }
    Tubing::new(h, t.tubes().to_vec())?;
    let relabel: Vec<usize> = (0..m).map(|v| if v < x { v } else { v.wrapping_sub(1) }).collect();
    let around_x = t.smallest_containing(x);
    let mut out: Vec<MarkedTube> = Vec::new();
    for &u in t.tubes() {
        let mut rest = u;
        rest.remove(x);
        if rest.is_empty() {
            continue;
        }
        let marking = if around_x.is_proper_subset(u) {
            Marking::Thick
        } else if around_x == u && !t.contains(rest) {
            Marking::Broken
        } else {
            Marking::Thin
        };
        let image = NodeSet::from_nodes(rest.iter().map(|v| relabel[v]))?;
        match out.iter_mut().find(|e| e.tube == image) {
            // the remainder coincides with a tube avoiding x; keep it thin
            Some(existing) => existing.marking = Marking::Thin,
            None => out.push(MarkedTube::new(image, marking)),
        }
    }
    MarkedTubing::new(&Graph::complete(m - 1)?, out)
}

fn permutations(m: usize) -> Vec<Vec<i64>> {
    let mut cur: Vec<i64> = (1..=m as i64).collect();
    let mut out = vec![cur.clone()];
    // lexicographic successor
    loop {
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { return out };
        let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(cur.clone());
    }
}

/// All permutations of `(1, ..., m)`, in lexicographic order.
pub fn permutohedron_points(m: usize) -> Result<Vec<LatticePoint>> {
    if !(1..=5).contains(&m) {
        return Err(Error::ScaleBound { what: "permutohedron", n: m, limit: 5 });
    }
    Ok(permutations(m).iter().map(|p| LatticePoint::from_i64s(p)).collect())
}

/// Subset-sum inequalities `sum_{i in S} x_i >= |S|(|S|+1)/2`, one per
/// nonempty proper subset.
pub fn permutohedron_halfspaces(m: usize) -> Vec<(Hyperplane, Side)> {
    (1u32..(1 << m) - 1)
        .map(|bits| {
            let s = NodeSet::from_bits(bits);
            let k = s.len() as i64;
            (Hyperplane::indicator(m, s, BigInt::from(k * (k + 1) / 2), HyperplaneKind::Spanned), Side::Above)
        })
        .collect()
}

/// Face lattice of the permutohedron on `m` letters (dimension `m - 1`).
pub fn permutohedron_lattice(m: usize) -> Result<FaceLattice> {
    if m < 2 {
        return Err(Error::ScaleBound { what: "permutohedron lattice (minimum letters)", n: m, limit: 2 });
    }
    let points = permutohedron_points(m)?;
    let facets = facets_from_candidates(&points, &permutohedron_halfspaces(m))?;
    let sets: Vec<Vec<usize>> = facets.into_iter().map(|f| f.incident).collect();
    face_lattice(&points, &sets)
}

/// Simplex and cube-minus-simplex pieces whose Minkowski sum models the
/// multiplihedron of the edgeless graph on `m` nodes.
pub fn simplex_and_cut_cube(m: usize) -> Result<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    if !(2..=4).contains(&m) {
        return Err(Error::ScaleBound { what: "simplex and cube pieces (2 to 4 dimensions)", n: m, limit: 4 });
    }
    let unit = |i: usize| -> LatticePoint {
        LatticePoint((0..m).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
    };
    let mut simplex = vec![LatticePoint(vec![BigInt::zero(); m])];
    simplex.extend((0..m).map(unit));
    let cut: Vec<LatticePoint> =
        (1u32..1 << m).map(|bits| LatticePoint((0..m).map(|j| BigInt::from((bits >> j) & 1)).collect())).collect();
    Ok((simplex, cut))
}

/// Facet tubings: upper ones carry a thick universal tube with broken
/// components of a node subset, lower ones a single thin tube.
pub fn upper_lower_tubings(g: &Graph) -> Result<(Vec<MarkedTubing>, Vec<MarkedTubing>)> {
    let n = g.node_count();
    let universe = g.nodes();
    let proper = g.proper_tubes()?;
    let mut upper = Vec::new();
    for bits in 0..universe.bits() {
        let chosen = NodeSet::from_bits(bits);
        let mut tubes = vec![MarkedTube::thick(universe)];
        if !chosen.is_empty() {
            let (sub, map) = g.induced_subgraph(chosen)?;
            tubes.extend(sub.components().into_iter().map(|c| MarkedTube::broken(c.map_through(&map))));
        }
        if let Ok(t) = MarkedTubing::new(g, tubes) {
            upper.push(t);
        }
    }
    upper.sort();
    upper.dedup();
    let mut lower = vec![MarkedTubing::new(g, vec![MarkedTube::thin(universe)])?];
    for &t in &proper {
        lower.push(MarkedTubing::new(g, vec![MarkedTube::thin(t), MarkedTube::broken(universe)])?);
    }
    lower.sort();
    debug_assert!(upper.iter().chain(&lower).all(|t| t.codimension() == 1 && t.len() <= n));
    Ok((upper, lower))
}

/// Whether a facet tubing is lower (one thin tube) or upper (thick universal).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetType {
    /// The thin tube.
    Lower(NodeSet),
    /// The broken tubes, possibly none.
    Upper(Vec<NodeSet>),
}

pub fn classify_facet(t: &MarkedTubing) -> Option<FacetType> {
    if t.codimension() != 1 {
        return None;
    }
    let live = t.tubes().iter().find(|m| m.marking != Marking::Broken)?;
    match live.marking {
        Marking::Thin => Some(FacetType::Lower(live.tube)),
        Marking::Thick if live.tube == t.universal().tube => {
            Some(FacetType::Upper(t.tubes().iter().filter(|m| m.marking == Marking::Broken).map(|m| m.tube).collect()))
        }
        _ => None,
    }
}

/// Sends a pair (marked tubing of the reconnected complement of `t`,
/// tubing of the subgraph on `t`) to a marked tubing of `g` below the lower
/// facet of `t`. For `t` the whole node set only the second factor exists
/// and `outside` must be `None`.
pub fn lower_facet_map(g: &Graph, t: NodeSet, outside: Option<&MarkedTubing>, inside: &Tubing) -> Result<MarkedTubing> {
    let (sub, sub_map) = g.induced_subgraph(t)?;
    Tubing::new(&sub, inside.tubes().to_vec())?;
    let mut tubes: Vec<MarkedTube> =
        inside.tubes().iter().map(|&s| MarkedTube::thin(s.map_through(&sub_map))).collect();
    if t == g.nodes() {
        if outside.is_some() {
            return Err(Error::Unsupported("the universal lower facet has no complement factor".into()));
        }
    } else {
        let outside = outside.ok_or_else(|| Error::Unsupported("missing complement factor".into()))?;
        let (star, star_map) = g.reconnected_complement(t)?;
        MarkedTubing::new(&star, outside.tubes().to_vec())?;
        let star_universe = star.nodes();
        for m in outside.tubes() {
            let lifted = m.tube.map_through(&star_map);
            let image = if m.tube == star_universe || g.is_tube(lifted.union(t)) { lifted.union(t) } else { lifted };
            tubes.push(MarkedTube::new(image, m.marking));
        }
    }
    MarkedTubing::new(g, tubes)
}

/// Sends a tuple (tubing of the reconnected complement of the broken tubes,
/// marked tubing of each broken tube's subgraph) to a marked tubing of `g`
/// below the upper facet with those broken tubes. With no broken tubes the
/// first factor is a tubing of `g` itself.
pub fn upper_facet_map(
    g: &Graph,
    broken: &[NodeSet],
    outside: &Tubing,
    parts: &[MarkedTubing],
) -> Result<MarkedTubing> {
    if parts.len() != broken.len() {
        return Err(Error::DimensionMismatch(parts.len(), broken.len()));
    }
    let mut tubes = Vec::new();
    if broken.is_empty() {
        Tubing::new(g, outside.tubes().to_vec())?;
        tubes.extend(outside.tubes().iter().map(|&s| MarkedTube::thick(s)));
    } else {
        let all = broken.iter().fold(NodeSet::EMPTY, |acc, &b| acc.union(b));
        let (star, star_map) = g.reconnected_complement(all)?;
        Tubing::new(&star, outside.tubes().to_vec())?;
        for &s in outside.tubes() {
            let image = if s == star.nodes() {
                g.nodes()
            } else {
                let lifted = s.map_through(&star_map);
                broken
                    .iter()
                    .filter(|&&b| lifted.iter().any(|v| !g.neighbors(v).intersection(b).is_empty()))
                    .fold(lifted, |acc, &b| acc.union(b))
            };
            tubes.push(MarkedTube::thick(image));
        }
        for (&b, part) in broken.iter().zip(parts) {
            let (sub, sub_map) = g.induced_subgraph(b)?;
            MarkedTubing::new(&sub, part.tubes().to_vec())?;
            tubes.extend(part.tubes().iter().map(|m| MarkedTube::new(m.tube.map_through(&sub_map), m.marking)));
        }
    }
    MarkedTubing::new(g, tubes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{is_isomorphism, MarkedTubingPoset, TubingPoset};

    fn set(nodes: &[usize]) -> NodeSet {
        NodeSet::from_nodes(nodes.iter().copied()).unwrap()
    }

    fn mt(g: &Graph, tubes: &[(&[usize], Marking)]) -> MarkedTubing {
        MarkedTubing::new(g, tubes.iter().map(|(s, m)| MarkedTube::new(set(s), *m)).collect()).unwrap()
    }

    use Marking::{Broken, Thick, Thin};

    #[test]
    fn psi_examples() {
        // x = 0, a = 1, so {a} relabels to {0}
        let h = Graph::complete(2).unwrap();
        let point = Graph::path(1).unwrap();
        let top = Tubing::new(&h, vec![set(&[0, 1])]).unwrap();
        assert_eq!(collapse_node(&h, 0, &top).unwrap(), mt(&point, &[(&[0], Broken)]));
        let with_x = Tubing::new(&h, vec![set(&[0]), set(&[0, 1])]).unwrap();
        assert_eq!(collapse_node(&h, 0, &with_x).unwrap(), mt(&point, &[(&[0], Thick)]));
        let with_a = Tubing::new(&h, vec![set(&[1]), set(&[0, 1])]).unwrap();
        assert_eq!(collapse_node(&h, 0, &with_a).unwrap(), mt(&point, &[(&[0], Thin)]));
        assert_eq!(
            collapse_node(
                &Graph::path(3).unwrap(),
                0,
                &Tubing::new(&Graph::path(3).unwrap(), vec![set(&[0, 1, 2])]).unwrap()
            ),
            Err(Error::NotComplete)
        );
    }

    #[test]
    fn psi_is_an_isomorphism() {
        for m in 2..=4 {
            let h = Graph::complete(m).unwrap();
            let source = TubingPoset::new(&h).unwrap();
            let target = MarkedTubingPoset::new(&Graph::complete(m - 1).unwrap()).unwrap();
            for x in [0, m - 1] {
                let map: Vec<usize> = source
                    .elements()
                    .iter()
                    .map(|t| target.index_of(&collapse_node(&h, x, t).unwrap()).unwrap())
                    .collect();
                assert!(is_isomorphism(source.ranked(), &target.ranked(), &map), "m = {m}, x = {x}");
            }
        }
    }

    #[test]
    fn permutohedra() {
        assert_eq!(permutohedron_lattice(2).unwrap().f_vector(), vec![2, 1]);
        assert_eq!(permutohedron_lattice(3).unwrap().f_vector(), vec![6, 6, 1]);
        let p4 = permutohedron_lattice(4).unwrap();
        assert_eq!(p4.f_vector(), vec![24, 36, 14, 1]);
        assert!(p4.is_simple());
        assert!(permutohedron_points(6).is_err());
    }

    #[test]
    fn simplex_and_cut_cube_pieces() {
        let (a, b) = simplex_and_cut_cube(2).unwrap();
        assert_eq!(
            a,
            vec![LatticePoint::from_i64s(&[0, 0]), LatticePoint::from_i64s(&[1, 0]), LatticePoint::from_i64s(&[0, 1])]
        );
        let mut b = b;
        b.sort();
        assert_eq!(
            b,
            vec![LatticePoint::from_i64s(&[0, 1]), LatticePoint::from_i64s(&[1, 0]), LatticePoint::from_i64s(&[1, 1])]
        );
        assert_eq!(simplex_and_cut_cube(3).unwrap().1.len(), 7);
        assert!(simplex_and_cut_cube(1).is_err());
    }

    #[test]
    fn facet_tubing_counts() {
        let count = |g: Graph| {
            let (u, l) = upper_lower_tubings(&g).unwrap();
            (u.len(), l.len())
        };
        assert_eq!(count(Graph::path(2).unwrap()), (3, 3));
        assert_eq!(count(Graph::path(3).unwrap()), (7, 6));
        assert_eq!(count(Graph::edgeless(3).unwrap()), (7, 4));
        assert_eq!(count(Graph::path(1).unwrap()), (1, 1));
        let g = Graph::path(2).unwrap();
        let (upper, _) = upper_lower_tubings(&g).unwrap();
        assert!(upper.contains(&mt(&g, &[(&[0], Broken), (&[0, 1], Thick)])));
    }

    #[test]
    fn tau_examples() {
        let g = Graph::path(2).unwrap();
        let point = Graph::path(1).unwrap();
        let k = Tubing::new(&point, vec![set(&[0])]).unwrap();
        let t = set(&[0]);
        for (outer, expect) in [(Thin, Thin), (Thick, Thick), (Broken, Broken)] {
            let star = mt(&point, &[(&[0], outer)]);
            assert_eq!(lower_facet_map(&g, t, Some(&star), &k).unwrap(), mt(&g, &[(&[0], Thin), (&[0, 1], expect)]));
        }
    }

    #[test]
    fn eta_examples() {
        let g = Graph::path(2).unwrap();
        let point = Graph::path(1).unwrap();
        let k = Tubing::new(&point, vec![set(&[0])]).unwrap();
        for m in [Thin, Thick, Broken] {
            let part = mt(&point, &[(&[0], m)]);
            assert_eq!(upper_facet_map(&g, &[set(&[0])], &k, &[part]).unwrap(), mt(&g, &[(&[0], m), (&[0, 1], Thick)]));
        }
        let whole = Tubing::new(&g, vec![set(&[1]), set(&[0, 1])]).unwrap();
        assert_eq!(upper_facet_map(&g, &[], &whole, &[]).unwrap(), mt(&g, &[(&[1], Thick), (&[0, 1], Thick)]));
    }

    #[test]
    fn classify() {
        let g = Graph::path(2).unwrap();
        assert_eq!(classify_facet(&mt(&g, &[(&[0], Thin), (&[0, 1], Broken)])), Some(FacetType::Lower(set(&[0]))));
        assert_eq!(classify_facet(&mt(&g, &[(&[0, 1], Thick)])), Some(FacetType::Upper(vec![])));
        assert_eq!(classify_facet(&mt(&g, &[(&[0, 1], Broken)])), None);
    }
}
