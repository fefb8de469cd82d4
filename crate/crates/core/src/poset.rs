//! Ranked posets, the two tubing posets, products, and isomorphism search.

use std::collections::{BTreeMap, HashMap, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tubing::{enumerate_marked_tubings, enumerate_unmarked_tubings, refinements, MarkedTubing, Tubing};

/// A finite graded poset given by its Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankedPoset {
    ranks: Vec<usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

impl RankedPoset {
    /// `covers` holds `(lower, upper)` pairs; each must climb exactly one rank.
    pub fn new(ranks: Vec<usize>, covers: &[(usize, usize)]) -> Result<Self> {
        let n = ranks.len();
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::InvalidPoset(format!("cover ({lo},{hi}) out of range")));
            }
            if ranks[hi] != ranks[lo] + 1 {
                return Err(Error::InvalidPoset(format!(
                    "cover ({lo},{hi}) joins ranks {} and {}",
                    ranks[lo], ranks[hi]
                )));
            }
            up[lo].push(hi);
            down[hi].push(lo);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        Ok(RankedPoset { ranks, up, down })
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn covers_up(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    pub fn covers_down(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (lo, ups) in self.up.iter().enumerate() {
            out.extend(ups.iter().map(|&hi| (lo, hi)));
        }
        out
    }

    /// Down-set of every element (the element itself included).
    pub fn down_sets(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.ranks[i]);
        let mut sets = vec![FixedBitSet::with_capacity(n); n];
        for &i in &order {
            let mut s = FixedBitSet::with_capacity(n);
            s.insert(i);
            for &d in &self.down[i] {
                s.union_with(&sets[d]);
            }
            sets[i] = s;
        }
        sets
    }

    /// Elements with no element above them.
    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].is_empty()).collect()
    }

    /// Elements with no element below them.
    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].is_empty()).collect()
    }

    /// Subposet on `members` (indices into `self`), given the full order.
    pub fn induced(&self, members: &[usize], down_sets: &[FixedBitSet]) -> Result<RankedPoset> {
        let base = members.iter().map(|&m| self.ranks[m]).min().unwrap_or(0);
        let ranks: Vec<usize> = members.iter().map(|&m| self.ranks[m] - base).collect();
        let mut covers = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate() {
                if self.ranks[b] == self.ranks[a] + 1 && down_sets[b].contains(a) {
                    covers.push((i, j));
                }
            }
        }
        RankedPoset::new(ranks, &covers)
    }
}

/// Cartesian product of ranked posets with the componentwise order.
#[derive(Clone, Debug)]
pub struct ProductPoset {
    pub factors: Vec<RankedPoset>,
    /// `tuples[i][k]` is the factor-`k` coordinate of element `i`.
    pub tuples: Vec<Vec<usize>>,
    pub poset: RankedPoset,
}

impl ProductPoset {
    pub fn new(factors: Vec<RankedPoset>) -> Result<Self> {
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for f in &factors {
            tuples = tuples
                .into_iter()
                .flat_map(|t| {
                    (0..f.len()).map(move |x| {
                        let mut t = t.clone();
                        t.push(x);
                        t
                    })
                })
                .collect();
        }
        let index: HashMap<Vec<usize>, usize> = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let ranks: Vec<usize> = tuples.iter().map(|t| t.iter().zip(&factors).map(|(&x, f)| f.rank(x)).sum()).collect();
        let mut covers = Vec::new();
        for (i, t) in tuples.iter().enumerate() {
            for (k, f) in factors.iter().enumerate() {
                for &hi in f.covers_up(t[k]) {
                    let mut u = t.clone();
                    u[k] = hi;
                    covers.push((i, index[&u]));
                }
            }
        }
        let poset = RankedPoset::new(ranks, &covers)?;
        Ok(ProductPoset { factors, tuples, poset })
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    /// Sum of the factor dimensions (top rank of each factor).
    pub fn dimension(&self) -> usize {
        self.factors.iter().map(|f| f.ranks().iter().copied().max().unwrap_or(0)).sum()
    }
}

/// Marked tubings of a graph ordered by the refinement moves, with the
/// transitive closure precomputed.
#[derive(Clone, Debug)]
pub struct MarkedTubingPoset {
    graph: Graph,
    elements: Vec<MarkedTubing>,
    index: HashMap<MarkedTubing, usize>,
    covers: Vec<Vec<usize>>,
    down: Vec<FixedBitSet>,
}

impl MarkedTubingPoset {
    pub fn new(g: &Graph) -> Result<Self> {
        let elements = enumerate_marked_tubings(g)?;
        let index: HashMap<MarkedTubing, usize> = elements.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let mut covers = Vec::with_capacity(elements.len());
        for t in &elements {
            let below = refinements(g, t)?.iter().map(|r| index[r]).collect::<Vec<_>>();
            covers.push(below);
        }
        let len = elements.len();
        let mut order: Vec<usize> = (0..len).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(elements[i].codimension()));
        let mut down = vec![FixedBitSet::with_capacity(len); len];
        for &i in &order {
            let mut s = FixedBitSet::with_capacity(len);
            s.insert(i);
            for &c in &covers[i] {
                s.union_with(&down[c]);
            }
            down[i] = s;
        }
        Ok(MarkedTubingPoset { graph: g.clone(), elements, index, covers, down })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn elements(&self) -> &[MarkedTubing] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, t: &MarkedTubing) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// `a ≤ b`: `a` is reachable from `b` by refinement moves.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.down[b].contains(a)
    }

    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    /// Direct refinements of element `i`.
    pub fn refinements_of(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    /// Indices of the maximal tubings (the vertices), in canonical order.
    pub fn vertices(&self) -> Vec<usize> {
        let n = self.graph.node_count();
        (0..self.len()).filter(|&i| self.elements[i].is_maximal(n)).collect()
    }

    /// Rank of element `i` is `n - codimension`.
    pub fn rank(&self, i: usize) -> usize {
        self.graph.node_count() - self.elements[i].codimension()
    }

    pub fn ranked(&self) -> RankedPoset {
        let ranks = (0..self.len()).map(|i| self.rank(i)).collect();
        let mut covers = Vec::new();
        for (hi, lows) in self.covers.iter().enumerate() {
            covers.extend(lows.iter().map(|&lo| (lo, hi)));
        }
        RankedPoset::new(ranks, &covers).expect("refinements raise codimension by one")
    }
}

/// Unmarked tubings ordered by reverse inclusion: adding tubes moves down.
#[derive(Clone, Debug)]
pub struct TubingPoset {
    elements: Vec<Tubing>,
    index: HashMap<Tubing, usize>,
    poset: RankedPoset,
}

impl TubingPoset {
    pub fn new(g: &Graph) -> Result<Self> {
        let elements = enumerate_unmarked_tubings(g)?;
        let index: HashMap<Tubing, usize> = elements.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        let n = g.node_count();
        let ranks: Vec<usize> = elements.iter().map(|t| n - t.len()).collect();
        let mut covers = Vec::new();
        for (lo, t) in elements.iter().enumerate() {
            for &tube in t.tubes() {
                if tube == g.nodes() {
                    continue;
                }
                let rest: Vec<_> = t.tubes().iter().copied().filter(|&x| x != tube).collect();
                if let Some(&hi) = index.get(&Tubing::from_unchecked(rest)) {
                    covers.push((lo, hi));
                }
            }
        }
        let poset = RankedPoset::new(ranks, &covers)?;
        Ok(TubingPoset { elements, index, poset })
    }

    pub fn elements(&self) -> &[Tubing] {
        &self.elements
    }

    pub fn index_of(&self, t: &Tubing) -> Option<usize> {
        self.index.get(t).copied()
    }

    pub fn ranked(&self) -> &RankedPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Default step budget for [`find_isomorphism`].
pub const ISO_BUDGET: u64 = 50_000_000;

/// Searches for an order isomorphism `a -> b`. Returns the image of every
/// element of `a`, or `None` when the posets are not isomorphic.
pub fn find_isomorphism(a: &RankedPoset, b: &RankedPoset) -> Result<Option<Vec<usize>>> {
    find_isomorphism_with_budget(a, b, ISO_BUDGET)
}

pub fn find_isomorphism_with_budget(a: &RankedPoset, b: &RankedPoset, budget: u64) -> Result<Option<Vec<usize>>> {
    let n = a.len();
    if n != b.len() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let colors = refine_colors(a, b);
    let (ca, cb) = colors.split_at(n);
    let mut hist_a = ca.to_vec();
    let mut hist_b = cb.to_vec();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(None);
    }

    let order = search_order(a, ca);
    // anchor[p]: an earlier neighbour of order[p] and whether it lies above
    let mut position = vec![usize::MAX; n];
    for (p, &x) in order.iter().enumerate() {
        position[x] = p;
    }
    let anchors: Vec<Option<(usize, bool)>> = order
        .iter()
        .enumerate()
        .map(|(p, &x)| {
            a.covers_up(x)
                .iter()
                .find(|&&z| position[z] < p)
                .map(|&z| (z, true))
                .or_else(|| a.covers_down(x).iter().find(|&&z| position[z] < p).map(|&z| (z, false)))
        })
        .collect();

    const NONE: usize = usize::MAX;
    let mut fwd = vec![NONE; n];
    let mut back = vec![NONE; n];
    let mut cands: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut next = vec![0usize; n];
    let mut steps = 0u64;

    let candidates = |p: usize, fwd: &[usize]| -> Vec<usize> {
        let x = order[p];
        match anchors[p] {
            Some((z, above)) => {
                let img = fwd[z];
                let pool = if above { b.covers_down(img) } else { b.covers_up(img) };
                pool.iter().copied().filter(|&y| cb[y] == ca[x]).collect()
            }
            None => (0..n).filter(|&y| cb[y] == ca[x]).collect(),
        }
    };

    let consistent = |x: usize, y: usize, fwd: &[usize], back: &[usize]| -> bool {
        if back[y] != NONE {
            return false;
        }
        let mut up_x = 0;
        for &z in a.covers_up(x) {
            if fwd[z] != NONE {
                if !b.covers_up(y).contains(&fwd[z]) {
                    return false;
                }
                up_x += 1;
            }
        }
        let mut down_x = 0;
        for &z in a.covers_down(x) {
            if fwd[z] != NONE {
                if !b.covers_down(y).contains(&fwd[z]) {
                    return false;
                }
                down_x += 1;
            }
        }
        let up_y = b.covers_up(y).iter().filter(|&&z| back[z] != NONE).count();
        let down_y = b.covers_down(y).iter().filter(|&&z| back[z] != NONE).count();
        up_x == up_y && down_x == down_y
    };

    let mut p = 0usize;
    cands[0] = candidates(0, &fwd);
    loop {
        let x = order[p];
        let mut placed = false;
        while next[p] < cands[p].len() {
            let y = cands[p][next[p]];
            next[p] += 1;
            steps += 1;
            if steps > budget {
                return Err(Error::SearchBudget(budget));
            }
            if consistent(x, y, &fwd, &back) {
                fwd[x] = y;
                back[y] = x;
                placed = true;
                break;
            }
        }
        if placed {
            p += 1;
            if p == n {
                return Ok(Some(fwd));
            }
            cands[p] = candidates(p, &fwd);
            next[p] = 0;
        } else {
            if p == 0 {
                return Ok(None);
            }
            p -= 1;
            let x = order[p];
            back[fwd[x]] = NONE;
            fwd[x] = NONE;
        }
    }
}

// Colour refinement on the disjoint union of both Hasse diagrams.
fn refine_colors(a: &RankedPoset, b: &RankedPoset) -> Vec<usize> {
    let n = a.len();
    let up = |i: usize| {
        if i < n {
            a.covers_up(i).to_vec()
        } else {
            b.covers_up(i - n).iter().map(|&j| j + n).collect()
        }
    };
    let down = |i: usize| {
        if i < n {
            a.covers_down(i).to_vec()
        } else {
            b.covers_down(i - n).iter().map(|&j| j + n).collect()
        }
    };
    let neighbours: Vec<(Vec<usize>, Vec<usize>)> = (0..2 * n).map(|i| (up(i), down(i))).collect();
    let mut colors: Vec<usize> = a.ranks().iter().chain(b.ranks()).copied().collect();
    let mut classes = count_classes(&colors);
    loop {
        let mut table: BTreeMap<(usize, Vec<usize>, Vec<usize>), usize> = BTreeMap::new();
        let sigs: Vec<_> = (0..2 * n)
            .map(|i| {
                let mut u: Vec<usize> = neighbours[i].0.iter().map(|&j| colors[j]).collect();
                let mut d: Vec<usize> = neighbours[i].1.iter().map(|&j| colors[j]).collect();
                u.sort_unstable();
                d.sort_unstable();
                (colors[i], u, d)
            })
            .collect();
        for s in &sigs {
            let next = table.len();
            table.entry(s.clone()).or_insert(next);
        }
        // ids follow signature order so both sides agree
        let ids: BTreeMap<_, usize> = table.keys().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        let fresh: Vec<usize> = sigs.iter().map(|s| ids[s]).collect();
        let fresh_classes = count_classes(&fresh);
        colors = fresh;
        if fresh_classes == classes {
            return colors;
        }
        classes = fresh_classes;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

// Breadth-first over the Hasse diagram from the rarest colour, so every
// element after the first of its component has an already placed neighbour.
fn search_order(a: &RankedPoset, colors: &[usize]) -> Vec<usize> {
    let n = a.len();
    let mut freq: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *freq.entry(c).or_default() += 1;
    }
    let mut seeds: Vec<usize> = (0..n).collect();
    seeds.sort_by_key(|&i| (freq[&colors[i]], std::cmp::Reverse(a.rank(i)), i));
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in seeds {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            let mut nbrs: Vec<usize> = a.covers_up(x).iter().chain(a.covers_down(x)).copied().collect();
            nbrs.sort_by_key(|&y| (freq[&colors[y]], y));
            for y in nbrs {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    order
}

/// Checks that `map` is an order isomorphism from `a` onto `b`.
pub fn is_isomorphism(a: &RankedPoset, b: &RankedPoset, map: &[usize]) -> bool {
    if a.len() != b.len() || map.len() != a.len() {
        return false;
    }
    let mut hit = vec![false; b.len()];
    for &y in map {
        if y >= b.len() || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    let mut ca: Vec<(usize, usize)> = a.cover_pairs().iter().map(|&(x, y)| (map[x], map[y])).collect();
    let mut cb = b.cover_pairs();
    ca.sort_unstable();
    cb.sort_unstable();
    ca == cb
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NodeSet;
    use crate::tubing::{MarkedTube, Marking};

    fn chain(k: usize) -> RankedPoset {
        let covers: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        RankedPoset::new((0..k).collect(), &covers).unwrap()
    }

    // Face poset of an m-gon without the empty face: vertices 0..m, edges m..2m, top 2m.
    fn polygon(m: usize, shift: usize) -> RankedPoset {
        let mut ranks = vec![0; m];
        ranks.extend(vec![1; m]);
        ranks.push(2);
        let mut covers = Vec::new();
        for e in 0..m {
            let (v1, v2) = ((e + shift) % m, (e + shift + 1) % m);
            covers.push((v1, m + e));
            covers.push((v2, m + e));
            covers.push((m + e, 2 * m));
        }
        RankedPoset::new(ranks, &covers).unwrap()
    }

    #[test]
    fn polygon_isomorphisms() {
        let hex = polygon(6, 0);
        let relabelled = polygon(6, 2);
        let map = find_isomorphism(&hex, &relabelled).unwrap().unwrap();
        assert!(is_isomorphism(&hex, &relabelled, &map));
        assert_eq!(find_isomorphism(&hex, &polygon(5, 0)).unwrap(), None);
    }

    #[test]
    fn rejects_same_size_non_isomorphic() {
        // two triangles' worth of rank data but wired differently
        let a = RankedPoset::new(vec![0, 0, 1, 1], &[(0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        let b = RankedPoset::new(vec![0, 0, 1, 1], &[(0, 2), (1, 2), (0, 3)]).unwrap();
        assert_eq!(find_isomorphism(&a, &b).unwrap(), None);
    }

    #[test]
    fn cover_rank_validation() {
        assert!(RankedPoset::new(vec![0, 2], &[(0, 1)]).is_err());
    }

    #[test]
    fn product_of_chains_is_grid() {
        let p = ProductPoset::new(vec![chain(2), chain(3)]).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.dimension(), 3);
        assert_eq!(p.poset.cover_pairs().len(), 7);
    }

    #[test]
    fn marked_poset_basics() {
        let g = Graph::path(2).unwrap();
        let p = MarkedTubingPoset::new(&g).unwrap();
        assert_eq!(p.len(), 13);
        let ranked = p.ranked();
        let tops = ranked.maximal_elements();
        assert_eq!(tops.len(), 1);
        assert_eq!(p.elements()[tops[0]].universal().marking, Marking::Broken);
        assert_eq!(ranked.minimal_elements(), p.vertices());
        for i in 0..p.len() {
            assert!(p.leq(i, i));
            assert!(p.leq(i, tops[0]));
        }
        let thin = p.index_of(&MarkedTubing::new(&g, vec![MarkedTube::thin(g.nodes())]).unwrap()).unwrap();
        let thick = p.index_of(&MarkedTubing::new(&g, vec![MarkedTube::thick(g.nodes())]).unwrap()).unwrap();
        assert!(!p.leq(thin, thick) && !p.leq(thick, thin));
        // the marked poset of the 2-path is a hexagon
        let hex = polygon(6, 0);
        assert!(find_isomorphism(&ranked, &hex).unwrap().is_some());
    }

    #[test]
    fn antisymmetry_through_four_nodes() {
        for g in [
            Graph::path(3).unwrap(),
            Graph::complete(3).unwrap(),
            Graph::edgeless(3).unwrap(),
            Graph::cycle(4).unwrap(),
            Graph::path(4).unwrap(),
        ] {
            let p = MarkedTubingPoset::new(&g).unwrap();
            for a in 0..p.len() {
                for b in 0..p.len() {
                    if a != b && p.leq(a, b) {
                        assert!(!p.leq(b, a));
                    }
                }
            }
        }
    }

    #[test]
    fn thin_and_thick_restrictions_match_unmarked_poset() {
        for g in [Graph::path(3).unwrap(), Graph::edgeless(3).unwrap(), Graph::cycle(4).unwrap()] {
            let p = MarkedTubingPoset::new(&g).unwrap();
            let k = TubingPoset::new(&g).unwrap();
            for marking in [Marking::Thin, Marking::Thick] {
                let members: Vec<usize> = (0..p.len()).filter(|&i| p.elements()[i].with_marking(marking)).collect();
                assert_eq!(members.len(), k.len());
                for &x in &members {
                    for &y in &members {
                        let tx = p.elements()[x].underlying();
                        let ty = p.elements()[y].underlying();
                        assert_eq!(p.leq(x, y), tx.refines(&ty));
                    }
                }
            }
        }
    }

    #[test]
    fn unmarked_poset_of_path3_is_pentagon() {
        let k = TubingPoset::new(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(k.len(), 11);
        assert!(find_isomorphism(k.ranked(), &polygon(5, 0)).unwrap().is_some());
        let seg = TubingPoset::new(&Graph::path(2).unwrap()).unwrap();
        assert_eq!(seg.len(), 3);
        let single = NodeSet::from_nodes([0]).unwrap();
        assert!(seg.elements().iter().any(|t| t.contains(single)));
    }
}
