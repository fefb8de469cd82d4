//! Tubings and marked tubings.
//!
//! A tubing always carries the universal tube (the full node set). Marked
//! tubings decorate each tube with [`Marking::Thin`], [`Marking::Thick`] or
//! [`Marking::Broken`]; a tube nested in a non-thick tube must be thin.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};

/// Largest graph for which tubings and marked tubings are enumerated.
pub const MAX_TUBING_NODES: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Marking {
    Thin,
    Thick,
    Broken,
}

impl Marking {
    pub const ALL: [Marking; 3] = [Marking::Thin, Marking::Thick, Marking::Broken];
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Marking::Thin => "thin",
            Marking::Thick => "thick",
            Marking::Broken => "broken",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MarkedTube {
    #[serde(rename = "nodes")]
    pub tube: NodeSet,
    #[serde(rename = "mark")]
    pub marking: Marking,
}

impl MarkedTube {
    pub fn new(tube: NodeSet, marking: Marking) -> Self {
        MarkedTube { tube, marking }
    }

    pub fn thin(tube: NodeSet) -> Self {
        Self::new(tube, Marking::Thin)
    }

    pub fn thick(tube: NodeSet) -> Self {
        Self::new(tube, Marking::Thick)
    }

    pub fn broken(tube: NodeSet) -> Self {
        Self::new(tube, Marking::Broken)
    }
}

impl fmt::Display for MarkedTube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.marking, self.tube)
    }
}

/// Why a collection of marked tubes fails to be a marked tubing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum TubingDefect {
    NotATube { tube: NodeSet },
    DuplicateTube { tube: NodeSet },
    MissingUniversal,
    Incompatible { a: MarkedTube, b: MarkedTube },
    AllComponents,
}

impl fmt::Display for TubingDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubingDefect::NotATube { tube } => write!(f, "{tube} is not a tube"),
            TubingDefect::DuplicateTube { tube } => write!(f, "{tube} appears twice"),
            TubingDefect::MissingUniversal => f.write_str("universal tube missing"),
            TubingDefect::Incompatible { a, b } => write!(f, "{a} and {b} are incompatible"),
            TubingDefect::AllComponents => f.write_str("contains every component tube"),
        }
    }
}

/// A set of marked tubes, stored in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MarkedTubing {
    tubes: Vec<MarkedTube>,
}

impl MarkedTubing {
    /// Validates `tubes` against `g`.
    pub fn new(g: &Graph, tubes: Vec<MarkedTube>) -> Result<Self> {
        check_marked_tubing(g, &tubes).map_err(Error::InvalidTubing)?;
        Ok(Self::from_unchecked(tubes))
    }

    pub(crate) fn from_unchecked(mut tubes: Vec<MarkedTube>) -> Self {
        tubes.sort();
        MarkedTubing { tubes }
    }

    pub fn tubes(&self) -> &[MarkedTube] {
        &self.tubes
    }

    pub fn len(&self) -> usize {
        self.tubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tubes.is_empty()
    }

    /// The largest tube, which is the universal tube of any valid tubing.
    pub fn universal(&self) -> MarkedTube {
        *self.tubes.last().expect("tubing contains the universal tube")
    }

    pub fn marking_of(&self, tube: NodeSet) -> Option<Marking> {
        self.tubes.iter().find(|t| t.tube == tube).map(|t| t.marking)
    }

    /// Number of tubes that are not broken.
    pub fn codimension(&self) -> usize {
        self.tubes.iter().filter(|t| t.marking != Marking::Broken).count()
    }

    /// Maximal tubings have `n` tubes and no broken ones.
    pub fn is_maximal(&self, n: usize) -> bool {
        self.tubes.len() == n && self.codimension() == n
    }

    /// The inclusion-minimal tube containing `v`.
    pub fn smallest_containing(&self, v: usize) -> MarkedTube {
        // canonical order is by size, so the first hit is the smallest
        *self.tubes.iter().find(|t| t.tube.contains(v)).expect("universal tube contains every node")
    }

    /// Smallest tube of this tubing strictly containing `inner`.
    pub fn parent_of(&self, inner: NodeSet) -> Option<MarkedTube> {
        self.tubes.iter().copied().find(|t| inner.is_proper_subset(t.tube))
    }

    /// Tubes closely nested in `outer`: nested in it with no tube in between.
    pub fn closely_nested(&self, outer: NodeSet) -> Result<Vec<MarkedTube>> {
        if self.marking_of(outer).is_none() {
            return Err(Error::TubeNotInTubing(outer));
        }
        Ok(self.closely_nested_unchecked(outer))
    }

    pub(crate) fn closely_nested_unchecked(&self, outer: NodeSet) -> Vec<MarkedTube> {
        self.tubes
            .iter()
            .filter(|u| u.tube.is_proper_subset(outer))
            .filter(|u| !self.tubes.iter().any(|w| u.tube.is_proper_subset(w.tube) && w.tube.is_proper_subset(outer)))
            .copied()
            .collect()
    }

    /// Underlying unmarked tubing.
    pub fn underlying(&self) -> Tubing {
        Tubing::from_unchecked(self.tubes.iter().map(|t| t.tube).collect())
    }

    pub fn with_marking(&self, marking: Marking) -> bool {
        self.tubes.iter().all(|t| t.marking == marking)
    }
}

impl fmt::Display for MarkedTubing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, t) in self.tubes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// An unmarked tubing, stored in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Tubing {
    tubes: Vec<NodeSet>,
}

impl Tubing {
    pub fn new(g: &Graph, tubes: Vec<NodeSet>) -> Result<Self> {
        let marked: Vec<_> = tubes.iter().map(|&t| MarkedTube::thin(t)).collect();
        check_marked_tubing(g, &marked).map_err(Error::InvalidTubing)?;
        Ok(Self::from_unchecked(tubes))
    }

    pub(crate) fn from_unchecked(mut tubes: Vec<NodeSet>) -> Self {
        tubes.sort();
        Tubing { tubes }
    }

    pub fn tubes(&self) -> &[NodeSet] {
        &self.tubes
    }

    pub fn len(&self) -> usize {
        self.tubes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tubes.is_empty()
    }

    pub fn contains(&self, tube: NodeSet) -> bool {
        self.tubes.binary_search(&tube).is_ok()
    }

    pub fn smallest_containing(&self, v: usize) -> NodeSet {
        *self.tubes.iter().find(|t| t.contains(v)).expect("universal tube contains every node")
    }

    /// Marks every tube the same way.
    pub fn marked(&self, marking: Marking) -> MarkedTubing {
        MarkedTubing::from_unchecked(self.tubes.iter().map(|&t| MarkedTube::new(t, marking)).collect())
    }

    /// `self` refines `other` (is a face of it) iff it contains every tube of `other`.
    pub fn refines(&self, other: &Tubing) -> bool {
        other.tubes.iter().all(|&t| self.contains(t))
    }
}

fn check_tube(g: &Graph, t: NodeSet) -> Result<()> {
    if g.is_tube(t) {
        Ok(())
    } else {
        Err(Error::NotATube(t))
    }
}

/// Compatibility of unmarked tubes: nested, or disjoint with a disconnected union.
pub fn compatible_unmarked(u1: NodeSet, u2: NodeSet, g: &Graph) -> Result<bool> {
    check_tube(g, u1)?;
    check_tube(g, u2)?;
    Ok(unmarked_ok(g, u1, u2))
}

fn unmarked_ok(g: &Graph, u1: NodeSet, u2: NodeSet) -> bool {
    if u1.is_subset(u2) || u2.is_subset(u1) {
        return true;
    }
    !u1.intersects(u2) && !g.connected(u1.union(u2))
}

/// Unmarked compatibility plus the nesting rule: inside a tube that is not
/// thick, only thin tubes may appear.
pub fn compatible_marked(a: MarkedTube, b: MarkedTube, g: &Graph) -> Result<bool> {
    check_tube(g, a.tube)?;
    check_tube(g, b.tube)?;
    Ok(unmarked_ok(g, a.tube, b.tube) && markings_ok(a, b))
}

fn markings_ok(a: MarkedTube, b: MarkedTube) -> bool {
    let (inner, outer) = if a.tube.is_proper_subset(b.tube) {
        (a, b)
    } else if b.tube.is_proper_subset(a.tube) {
        (b, a)
    } else {
        return true;
    };
    outer.marking == Marking::Thick || inner.marking == Marking::Thin
}

fn contains_all_components(g: &Graph, tubes: impl Iterator<Item = NodeSet> + Clone) -> bool {
    let comps = g.components();
    comps.len() > 1 && comps.iter().all(|c| tubes.clone().any(|t| t == *c))
}

/// Full validity check; the error names the first defect found.
pub fn check_marked_tubing(g: &Graph, tubes: &[MarkedTube]) -> std::result::Result<(), TubingDefect> {
    for t in tubes {
        if !g.is_tube(t.tube) {
            return Err(TubingDefect::NotATube { tube: t.tube });
        }
    }
    for (i, a) in tubes.iter().enumerate() {
        if let Some(b) = tubes[i + 1..].iter().find(|b| b.tube == a.tube) {
            return Err(TubingDefect::DuplicateTube { tube: b.tube });
        }
    }
    if !tubes.iter().any(|t| t.tube == g.nodes()) {
        return Err(TubingDefect::MissingUniversal);
    }
    for (i, &a) in tubes.iter().enumerate() {
        for &b in &tubes[i + 1..] {
            if !(unmarked_ok(g, a.tube, b.tube) && markings_ok(a, b)) {
                return Err(TubingDefect::Incompatible { a, b });
            }
        }
    }
    if contains_all_components(g, tubes.iter().map(|t| t.tube)) {
        return Err(TubingDefect::AllComponents);
    }
    Ok(())
}

pub fn is_valid_marked_tubing(g: &Graph, tubes: &[MarkedTube]) -> bool {
    check_marked_tubing(g, tubes).is_ok()
}

fn check_scale(g: &Graph, what: &'static str) -> Result<()> {
    let n = g.node_count();
    if n > MAX_TUBING_NODES {
        return Err(Error::ScaleBound { what, n, limit: MAX_TUBING_NODES });
    }
    Ok(())
}

/// All unmarked tubings (faces of the graph associahedron), in canonical order.
pub fn enumerate_unmarked_tubings(g: &Graph) -> Result<Vec<Tubing>> {
    check_scale(g, "tubing enumeration")?;
    let proper = g.proper_tubes()?;
    let universal = g.nodes();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_tubings(g, &proper, 0, &mut chosen, &mut |tubes: &[NodeSet]| {
        if !contains_all_components(g, tubes.iter().copied()) {
            let mut all = tubes.to_vec();
            all.push(universal);
            out.push(Tubing::from_unchecked(all));
        }
    });
    out.sort();
    Ok(out)
}

fn collect_tubings(
    g: &Graph,
    proper: &[NodeSet],
    from: usize,
    chosen: &mut Vec<NodeSet>,
    emit: &mut dyn FnMut(&[NodeSet]),
) {
    emit(chosen);
    for i in from..proper.len() {
        let t = proper[i];
        if chosen.iter().all(|&c| unmarked_ok(g, c, t)) {
            chosen.push(t);
            collect_tubings(g, proper, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// All valid markings of an unmarked tubing.
pub fn markings_of(tubing: &Tubing) -> Vec<MarkedTubing> {
    let k = tubing.len();
    let mut out = Vec::new();
    let mut marks = vec![Marking::Thin; k];
    loop {
        let tubes: Vec<MarkedTube> = tubing.tubes().iter().zip(&marks).map(|(&t, &m)| MarkedTube::new(t, m)).collect();
        let ok = tubes.iter().enumerate().all(|(i, &a)| tubes[i + 1..].iter().all(|&b| markings_ok(a, b)));
        if ok {
            out.push(MarkedTubing::from_unchecked(tubes));
        }
        // odometer over the three markings
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            marks[i] = match marks[i] {
                Marking::Thin => Marking::Thick,
                Marking::Thick => Marking::Broken,
                Marking::Broken => Marking::Thin,
            };
            if marks[i] != Marking::Thin {
                break;
            }
            i += 1;
        }
    }
}

/// All marked tubings, in canonical order. These label the faces of the
/// graph multiplihedron.
pub fn enumerate_marked_tubings(g: &Graph) -> Result<Vec<MarkedTubing>> {
    check_scale(g, "marked tubing enumeration")?;
    let mut out: Vec<MarkedTubing> = enumerate_unmarked_tubings(g)?.iter().flat_map(markings_of).collect();
    out.sort();
    Ok(out)
}

/// Marked tubings with `n` tubes and no broken tube; these label vertices.
pub fn maximal_marked_tubings(g: &Graph) -> Result<Vec<MarkedTubing>> {
    let n = g.node_count();
    let mut all = enumerate_marked_tubings(g)?;
    all.retain(|t| t.is_maximal(n));
    Ok(all)
}

pub fn smallest_containing_tube(t: &MarkedTubing, v: usize) -> MarkedTube {
    t.smallest_containing(v)
}

pub fn closely_nested_tubes(t: &MarkedTubing, outer: MarkedTube) -> Result<Vec<MarkedTube>> {
    if t.marking_of(outer.tube) != Some(outer.marking) {
        return Err(Error::TubeNotInTubing(outer.tube));
    }
    t.closely_nested(outer.tube)
}

pub fn codimension(t: &MarkedTubing) -> usize {
    t.codimension()
}

/// Every tubing reachable from `t` by a single move: resolving a broken
/// tube, adding a thin tube inside a thin or broken tube, adding a thick
/// tube inside a thick tube, or adding closely nested broken tubes inside a
/// broken tube that simultaneously turns thick.
pub fn refinements(g: &Graph, t: &MarkedTubing) -> Result<Vec<MarkedTubing>> {
    let proper = g.proper_tubes()?;
    let mut out = BTreeSet::new();
    let mut push = |tubes: Vec<MarkedTube>| {
        if is_valid_marked_tubing(g, &tubes) {
            out.insert(MarkedTubing::from_unchecked(tubes));
        }
    };

    let present = t.underlying();
    let absent: Vec<NodeSet> = proper.iter().copied().filter(|&u| !present.contains(u)).collect();

    for (i, tube) in t.tubes().iter().enumerate() {
        if tube.marking != Marking::Broken {
            continue;
        }
        for resolved in [Marking::Thin, Marking::Thick] {
            let mut tubes = t.tubes().to_vec();
            tubes[i].marking = resolved;
            push(tubes);
        }
    }

    for &u in &absent {
        let Some(parent) = t.parent_of(u) else { continue };
        let marking = match parent.marking {
            Marking::Thin | Marking::Broken => Marking::Thin,
            Marking::Thick => Marking::Thick,
        };
        let mut tubes = t.tubes().to_vec();
        tubes.push(MarkedTube::new(u, marking));
        push(tubes);
    }

    for (i, v) in t.tubes().iter().enumerate() {
        if v.marking != Marking::Broken {
            continue;
        }
        let candidates: Vec<NodeSet> = absent
            .iter()
            .copied()
            .filter(|&u| t.parent_of(u).map(|p| p.tube) == Some(v.tube))
            .filter(|&u| present.tubes().iter().all(|&w| unmarked_ok(g, u, w)))
            .collect();
        let mut chosen = Vec::new();
        broken_sets(g, &candidates, 0, &mut chosen, &mut |set: &[NodeSet]| {
            if set.is_empty() {
                return;
            }
            let mut tubes = t.tubes().to_vec();
            tubes[i].marking = Marking::Thick;
            tubes.extend(set.iter().map(|&u| MarkedTube::broken(u)));
            push(tubes);
        });
    }

    Ok(out.into_iter().collect())
}

// Pairwise compatible antichains drawn from `candidates`.
fn broken_sets(
    g: &Graph,
    candidates: &[NodeSet],
    from: usize,
    chosen: &mut Vec<NodeSet>,
    emit: &mut dyn FnMut(&[NodeSet]),
) {
    emit(chosen);
    for i in from..candidates.len() {
        let u = candidates[i];
        let fits = chosen.iter().all(|&c| !c.intersects(u) && unmarked_ok(g, c, u));
        if fits {
            chosen.push(u);
            broken_sets(g, candidates, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// Face order on marked tubings: `a ≤ b` iff `a` is reachable from `b` by
/// repeated refinements. Builds the whole poset, so prefer
/// [`crate::poset::MarkedTubingPoset`] for repeated queries.
pub fn poset_leq(g: &Graph, a: &MarkedTubing, b: &MarkedTubing) -> Result<bool> {
    for t in [a, b] {
        check_marked_tubing(g, t.tubes()).map_err(Error::InvalidTubing)?;
    }
    let poset = crate::poset::MarkedTubingPoset::new(g)?;
    let ia = poset.index_of(a).expect("valid tubings are enumerated");
    let ib = poset.index_of(b).expect("valid tubings are enumerated");
    Ok(poset.leq(ia, ib))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(nodes: &[usize]) -> NodeSet {
        NodeSet::from_nodes(nodes.iter().copied()).unwrap()
    }

    fn mt(g: &Graph, tubes: &[(&[usize], Marking)]) -> MarkedTubing {
        MarkedTubing::new(g, tubes.iter().map(|(s, m)| MarkedTube::new(set(s), *m)).collect()).unwrap()
    }

    use Marking::{Broken, Thick, Thin};

    #[test]
    fn unmarked_compatibility() {
        let p = Graph::path(3).unwrap();
        assert!(compatible_unmarked(set(&[0]), set(&[0, 1]), &p).unwrap());
        assert!(!compatible_unmarked(set(&[0]), set(&[1]), &p).unwrap());
        assert!(compatible_unmarked(set(&[0]), set(&[2]), &p).unwrap());
        assert!(!compatible_unmarked(set(&[0, 1]), set(&[1, 2]), &p).unwrap());
        assert_eq!(compatible_unmarked(set(&[0, 2]), set(&[1]), &p), Err(Error::NotATube(set(&[0, 2]))));
    }

    #[test]
    fn marked_compatibility() {
        let p = Graph::path(2).unwrap();
        let a = set(&[0]);
        let u = set(&[0, 1]);
        let ok = |i, o| compatible_marked(MarkedTube::new(a, i), MarkedTube::new(u, o), &p).unwrap();
        assert!(ok(Thin, Thick));
        assert!(!ok(Thick, Thin));
        assert!(ok(Broken, Thick));
        assert!(!ok(Broken, Broken));
        // exhaustive: outer thick allows anything, otherwise inner must be thin
        for i in Marking::ALL {
            for o in Marking::ALL {
                assert_eq!(ok(i, o), o == Thick || i == Thin);
            }
        }
    }

    #[test]
    fn validity_examples() {
        let p2 = Graph::path(2).unwrap();
        assert!(is_valid_marked_tubing(&p2, &[MarkedTube::broken(p2.nodes())]));
        assert!(is_valid_marked_tubing(&p2, &[MarkedTube::thin(p2.nodes())]));
        let e3 = Graph::edgeless(3).unwrap();
        let all: Vec<_> = [set(&[0]), set(&[1]), set(&[2]), e3.nodes()].into_iter().map(MarkedTube::thin).collect();
        assert_eq!(check_marked_tubing(&e3, &all), Err(TubingDefect::AllComponents));
        assert_eq!(check_marked_tubing(&p2, &[MarkedTube::thin(set(&[0]))]), Err(TubingDefect::MissingUniversal));
        assert_eq!(
            check_marked_tubing(&p2, &[MarkedTube::thin(p2.nodes()), MarkedTube::thick(p2.nodes())]),
            Err(TubingDefect::DuplicateTube { tube: p2.nodes() })
        );
    }

    // Brute force: every subset of tubes with every marking, filtered by the
    // validity check alone.
    fn brute_force_marked(g: &Graph) -> BTreeSet<MarkedTubing> {
        let tubes = g.enumerate_tubes().unwrap();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << tubes.len()) {
            let chosen: Vec<NodeSet> = (0..tubes.len()).filter(|i| mask & (1 << i) != 0).map(|i| tubes[i]).collect();
            let k = chosen.len();
            for code in 0..3usize.pow(k as u32) {
                let mut c = code;
                let marked: Vec<MarkedTube> = chosen
                    .iter()
                    .map(|&t| {
                        let m = Marking::ALL[c % 3];
                        c /= 3;
                        MarkedTube::new(t, m)
                    })
                    .collect();
                if is_valid_marked_tubing(g, &marked) {
                    out.insert(MarkedTubing::from_unchecked(marked));
                }
            }
        }
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for g in [
            Graph::path(1).unwrap(),
            Graph::path(2).unwrap(),
            Graph::edgeless(2).unwrap(),
            Graph::path(3).unwrap(),
            Graph::edgeless(3).unwrap(),
            Graph::new(3, &[(0, 1)]).unwrap(),
            Graph::complete(3).unwrap(),
        ] {
            let fast: BTreeSet<_> = enumerate_marked_tubings(&g).unwrap().into_iter().collect();
            assert_eq!(fast, brute_force_marked(&g), "{g:?}");
        }
    }

    #[test]
    fn marked_tubing_counts() {
        let p2 = enumerate_marked_tubings(&Graph::path(2).unwrap()).unwrap();
        assert_eq!(p2.len(), 13);
        let by_codim = |ts: &[MarkedTubing], k| ts.iter().filter(|t| t.codimension() == k).count();
        assert_eq!((by_codim(&p2, 0), by_codim(&p2, 1), by_codim(&p2, 2)), (1, 6, 6));
        assert_eq!(enumerate_marked_tubings(&Graph::path(1).unwrap()).unwrap().len(), 3);
        assert_eq!(enumerate_marked_tubings(&Graph::edgeless(2).unwrap()).unwrap().len(), 13);
    }

    #[test]
    fn maximal_counts() {
        assert_eq!(maximal_marked_tubings(&Graph::path(2).unwrap()).unwrap().len(), 6);
        assert_eq!(maximal_marked_tubings(&Graph::path(3).unwrap()).unwrap().len(), 21);
        assert_eq!(maximal_marked_tubings(&Graph::edgeless(3).unwrap()).unwrap().len(), 15);
        for t in maximal_marked_tubings(&Graph::cycle(4).unwrap()).unwrap() {
            assert_eq!(t.len(), 4);
            assert!(t.tubes().iter().all(|x| x.marking != Broken));
        }
    }

    #[test]
    fn unmarked_counts() {
        let p2 = Graph::path(2).unwrap();
        let t = enumerate_unmarked_tubings(&p2).unwrap();
        assert_eq!(
            t,
            vec![
                Tubing::new(&p2, vec![set(&[0]), p2.nodes()]).unwrap(),
                Tubing::new(&p2, vec![set(&[1]), p2.nodes()]).unwrap(),
                Tubing::new(&p2, vec![p2.nodes()]).unwrap(),
            ]
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>()
        );
        assert_eq!(enumerate_unmarked_tubings(&Graph::path(1).unwrap()).unwrap().len(), 1);
        // pentagon: 5 vertices, 5 edges, 1 top
        assert_eq!(enumerate_unmarked_tubings(&Graph::path(3).unwrap()).unwrap().len(), 11);
    }

    #[test]
    fn smallest_and_closely_nested() {
        let p2 = Graph::path(2).unwrap();
        let t = mt(&p2, &[(&[0], Thin), (&[0, 1], Thick)]);
        assert_eq!(t.smallest_containing(0), MarkedTube::thin(set(&[0])));
        assert_eq!(t.smallest_containing(1), MarkedTube::thick(set(&[0, 1])));

        let p3 = Graph::path(3).unwrap();
        let t = mt(&p3, &[(&[0], Thin), (&[0, 1], Thin), (&[0, 1, 2], Thin)]);
        assert_eq!(t.smallest_containing(1), MarkedTube::thin(set(&[0, 1])));
        assert_eq!(
            closely_nested_tubes(&t, MarkedTube::thin(p3.nodes())).unwrap(),
            vec![MarkedTube::thin(set(&[0, 1]))]
        );
        assert_eq!(
            closely_nested_tubes(&t, MarkedTube::thin(set(&[0, 1]))).unwrap(),
            vec![MarkedTube::thin(set(&[0]))]
        );
        let top = mt(&p2, &[(&[0, 1], Thin)]);
        assert!(closely_nested_tubes(&top, MarkedTube::thin(p2.nodes())).unwrap().is_empty());
        assert!(closely_nested_tubes(&top, MarkedTube::thin(set(&[0]))).is_err());
    }

    #[test]
    fn refinement_examples() {
        let p2 = Graph::path(2).unwrap();
        let top = mt(&p2, &[(&[0, 1], Broken)]);
        let expected: BTreeSet<_> = [
            mt(&p2, &[(&[0, 1], Thin)]),
            mt(&p2, &[(&[0, 1], Thick)]),
            mt(&p2, &[(&[0], Thin), (&[0, 1], Broken)]),
            mt(&p2, &[(&[1], Thin), (&[0, 1], Broken)]),
            mt(&p2, &[(&[0], Broken), (&[0, 1], Thick)]),
            mt(&p2, &[(&[1], Broken), (&[0, 1], Thick)]),
        ]
        .into_iter()
        .collect();
        let got: BTreeSet<_> = refinements(&p2, &top).unwrap().into_iter().collect();
        assert_eq!(got, expected);

        let p1 = Graph::path(1).unwrap();
        let got = refinements(&p1, &mt(&p1, &[(&[0], Broken)])).unwrap();
        assert_eq!(got, vec![mt(&p1, &[(&[0], Thin)]), mt(&p1, &[(&[0], Thick)])]);

        let facet = mt(&p2, &[(&[0], Thin), (&[0, 1], Broken)]);
        let got: BTreeSet<_> = refinements(&p2, &facet).unwrap().into_iter().collect();
        let expected: BTreeSet<_> =
            [mt(&p2, &[(&[0], Thin), (&[0, 1], Thin)]), mt(&p2, &[(&[0], Thin), (&[0, 1], Thick)])]
                .into_iter()
                .collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn codimension_examples() {
        let p2 = Graph::path(2).unwrap();
        assert_eq!(mt(&p2, &[(&[0, 1], Broken)]).codimension(), 0);
        assert_eq!(mt(&p2, &[(&[0], Thick), (&[0, 1], Thick)]).codimension(), 2);
        assert_eq!(mt(&p2, &[(&[0, 1], Thin)]).codimension(), 1);
    }

    #[test]
    fn refinements_raise_codimension_by_one() {
        for g in [Graph::path(3).unwrap(), Graph::cycle(4).unwrap(), Graph::edgeless(3).unwrap()] {
            for t in enumerate_marked_tubings(&g).unwrap() {
                for r in refinements(&g, &t).unwrap() {
                    assert!(is_valid_marked_tubing(&g, r.tubes()));
                    assert_eq!(r.codimension(), t.codimension() + 1, "{t} -> {r}");
                }
            }
        }
    }
}
