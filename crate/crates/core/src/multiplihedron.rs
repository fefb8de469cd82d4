//! The realized multiplihedron of a graph and its two quotient polytopes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::construct::upper_lower_tubings;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hull::{brute_force_hull, face_lattice, facets_from_candidates, FaceLattice, Facet, Hull, Side};
use crate::poset::MarkedTubingPoset;
use crate::realize::{
    hyperplanes_for, realize_domain_quotient, realize_double_quotient, realize_range_quotient, realize_vertex,
    Hyperplane, HyperplaneKind, LatticePoint, WeightVector,
};
use crate::tubing::MarkedTubing;

/// Which point set to realize.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Full,
    /// Thin coordinates collapsed to 1.
    Domain,
    /// Thick coordinates collapsed to `3^n`.
    Range,
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "domain" => Ok(Variant::Domain),
            "range" => Ok(Variant::Range),
            other => Err(Error::Parse(format!("unknown variant {other:?}"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::Domain => "domain",
            Variant::Range => "range",
        })
    }
}

/// Side of a tubing hyperplane that holds the polytope: thin equations
/// bound from below, thick ones from above.
pub fn side_for(kind: HyperplaneKind) -> Side {
    match kind {
        HyperplaneKind::Thick => Side::Below,
        _ => Side::Above,
    }
}

/// The single hyperplane of a facet tubing.
pub fn facet_hyperplane(t: &MarkedTubing, w: &WeightVector) -> Result<Hyperplane> {
    let mut hs = hyperplanes_for(t, w)?;
    if hs.len() != 1 {
        return Err(Error::Unsupported(format!("{t} has {} non-broken tubes, expected one", hs.len())));
    }
    Ok(hs.remove(0))
}

/// Realized polytope together with its combinatorial labels.
#[derive(Clone, Debug)]
pub struct Multiplihedron {
    graph: Graph,
    weights: WeightVector,
    poset: MarkedTubingPoset,
    vertex_tubings: Vec<usize>,
    points: Vec<LatticePoint>,
    facet_tubings: Vec<usize>,
    facets: Vec<Facet>,
    lattice: FaceLattice,
}

impl Multiplihedron {
    /// Realizes every maximal tubing, verifies the tubing hyperplanes as
    /// facets, and builds the face lattice from them.
    pub fn new(g: &Graph, w: &WeightVector) -> Result<Self> {
        if w.len() != g.node_count() {
            return Err(Error::DimensionMismatch(w.len(), g.node_count()));
        }
        let poset = MarkedTubingPoset::new(g)?;
        let vertex_tubings = poset.vertices();
        let points =
            vertex_tubings.iter().map(|&i| realize_vertex(&poset.elements()[i], w)).collect::<Result<Vec<_>>>()?;
        let (upper, lower) = upper_lower_tubings(g)?;
        let mut facet_tubings = Vec::new();
        let mut candidates = Vec::new();
        for t in upper.iter().chain(&lower) {
            let h = facet_hyperplane(t, w)?;
            let side = side_for(h.kind);
            candidates.push((h, side));
            facet_tubings.push(poset.index_of(t).expect("facet tubings are enumerated"));
        }
        let facets = facets_from_candidates(&points, &candidates)?;
        let sets: Vec<Vec<usize>> = facets.iter().map(|f| f.incident.clone()).collect();
        let lattice = face_lattice(&points, &sets)?;
        Ok(Multiplihedron {
            graph: g.clone(),
            weights: w.clone(),
            poset,
            vertex_tubings,
            points,
            facet_tubings,
            facets,
            lattice,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn poset(&self) -> &MarkedTubingPoset {
        &self.poset
    }

    /// Poset indices of the maximal tubings, parallel to [`Self::points`].
    pub fn vertex_tubings(&self) -> &[usize] {
        &self.vertex_tubings
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// Poset indices of the facet tubings, parallel to [`Self::facets`].
    pub fn facet_tubings(&self) -> &[usize] {
        &self.facet_tubings
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn lattice(&self) -> &FaceLattice {
        &self.lattice
    }

    pub fn tubing(&self, i: usize) -> &MarkedTubing {
        &self.poset.elements()[i]
    }

    /// Vertices labelled by maximal tubings below poset element `i`.
    pub fn vertices_below(&self, i: usize) -> Vec<usize> {
        (0..self.points.len()).filter(|&k| self.poset.leq(self.vertex_tubings[k], i)).collect()
    }

    /// Face of the lattice assigned to each tubing by its vertices, or the
    /// first tubing whose vertices do not form a face.
    pub fn tubing_faces(&self) -> std::result::Result<Vec<usize>, usize> {
        let index = self.lattice.index_by_vertices();
        (0..self.poset.len()).map(|i| index.get(&self.vertices_below(i)).copied().ok_or(i)).collect()
    }
}

/// Points of the chosen variant, one per maximal tubing (repeats kept).
pub fn variant_points(g: &Graph, w: &WeightVector, variant: Variant) -> Result<Vec<(MarkedTubing, LatticePoint)>> {
    if variant != Variant::Full && !w.is_unit() {
        return Err(Error::Weights("quotient variants take unit weights only".into()));
    }
    crate::tubing::maximal_marked_tubings(g)?
        .into_iter()
        .map(|u| {
            let p = match variant {
                Variant::Full => realize_vertex(&u, w)?,
                Variant::Domain => realize_domain_quotient(&u)?,
                Variant::Range => realize_range_quotient(&u)?,
            };
            Ok((u, p))
        })
        .collect()
}

/// Hull of a quotient point set, computed without tubing data.
pub fn quotient_hull(g: &Graph, variant: Variant) -> Result<Hull> {
    let pts: Vec<LatticePoint> =
        variant_points(g, &WeightVector::unit(g.node_count()), variant)?.into_iter().map(|(_, p)| p).collect();
    brute_force_hull(&pts)
}

/// Hull of the points with both collapses applied at once.
pub fn double_quotient_hull(g: &Graph) -> Result<Hull> {
    let pts =
        crate::tubing::maximal_marked_tubings(g)?.iter().map(realize_double_quotient).collect::<Result<Vec<_>>>()?;
    brute_force_hull(&pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon() {
        let g = Graph::path(2).unwrap();
        let j = Multiplihedron::new(&g, &WeightVector::unit(2)).unwrap();
        assert_eq!(j.points().len(), 6);
        assert_eq!(j.facets().len(), 6);
        assert_eq!(j.lattice().f_vector(), vec![6, 6, 1]);
        let faces = j.tubing_faces().unwrap();
        assert_eq!(faces.len(), 13);
    }

    #[test]
    fn path3_counts() {
        let g = Graph::path(3).unwrap();
        let j = Multiplihedron::new(&g, &WeightVector::unit(3)).unwrap();
        assert_eq!(j.points().len(), 21);
        assert_eq!(j.lattice().f_vector().first(), Some(&21));
        assert_eq!(j.lattice().facets().len(), 13);
    }

    #[test]
    fn quotient_pentagons() {
        let g = Graph::path(2).unwrap();
        assert_eq!(quotient_hull(&g, Variant::Domain).unwrap().lattice.f_vector(), vec![5, 5, 1]);
        let r = quotient_hull(&g, Variant::Range).unwrap();
        assert_eq!(r.lattice.f_vector(), vec![5, 5, 1]);
        let mut expected: Vec<LatticePoint> =
            [[1, 2], [2, 1], [1, 9], [9, 1], [9, 9]].iter().map(|c| LatticePoint::from_i64s(c)).collect();
        expected.sort();
        assert_eq!(r.vertices, expected);
    }

    #[test]
    fn variants_need_unit_weights() {
        let g = Graph::path(2).unwrap();
        let w = WeightVector::new(vec![2, 1]).unwrap();
        assert!(variant_points(&g, &w, Variant::Domain).is_err());
        assert_eq!(variant_points(&g, &w, Variant::Full).unwrap().len(), 6);
        assert_eq!("range".parse::<Variant>().unwrap(), Variant::Range);
    }
}
