//! Independent reference implementation used by the integration tests.
//! Everything here works on plain bitmasks and `i128` and is written from
//! the definitions, without calling into the library's algorithms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use tubex::{Graph, MarkedTubing, Marking};

pub const THIN: u8 = 0;
pub const THICK: u8 = 1;
pub const BROKEN: u8 = 2;

/// A marked tube as `(node bitmask, mark)`.
pub type Tube = (u32, u8);
/// A marked tubing as a sorted list of marked tubes.
pub type Tubes = Vec<Tube>;

#[derive(Clone, Debug)]
pub struct RefGraph {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl RefGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![0u32; n];
        for &(a, b) in edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        RefGraph { n, adj }
    }

    pub fn of(g: &Graph) -> Self {
        RefGraph::new(g.node_count(), &g.edges())
    }

    pub fn full(&self) -> u32 {
        (1u32 << self.n) - 1
    }

    pub fn connected(&self, s: u32) -> bool {
        if s == 0 {
            return false;
        }
        let mut seen = s & s.wrapping_neg();
        loop {
            let mut next = seen;
            for v in 0..self.n {
                if seen >> v & 1 == 1 {
                    next |= self.adj[v] & s;
                }
            }
            if next == seen {
                return seen == s;
            }
            seen = next;
        }
    }

    /// Connected nonempty subsets plus the full set.
    pub fn tubes(&self) -> Vec<u32> {
        let mut out: Vec<u32> = (1..=self.full()).filter(|&s| s == self.full() || self.connected(s)).collect();
        out.sort_by_key(|&s| canonical_key(s));
        out
    }

    pub fn proper_tubes(&self) -> Vec<u32> {
        self.tubes().into_iter().filter(|&s| s != self.full()).collect()
    }

    pub fn components(&self) -> Vec<u32> {
        let mut left = self.full();
        let mut out = Vec::new();
        while left != 0 {
            let mut c = left & left.wrapping_neg();
            loop {
                let mut next = c;
                for v in 0..self.n {
                    if c >> v & 1 == 1 {
                        next |= self.adj[v];
                    }
                }
                if next == c {
                    break;
                }
                c = next;
            }
            out.push(c);
            left &= !c;
        }
        out
    }

    pub fn compatible(&self, a: u32, b: u32) -> bool {
        a & b == a || a & b == b || (a & b == 0 && !self.connected(a | b))
    }

    pub fn marked_compatible(&self, a: Tube, b: Tube) -> bool {
        if !self.compatible(a.0, b.0) {
            return false;
        }
        let (inner, outer) = if a.0 & b.0 == a.0 && a.0 != b.0 {
            (a, b)
        } else if a.0 & b.0 == b.0 && a.0 != b.0 {
            (b, a)
        } else {
            return true;
        };
        outer.1 == THICK || inner.1 == THIN
    }

    fn component_rule(&self, sets: &[u32]) -> bool {
        let comps = self.components();
        comps.len() < 2 || !comps.iter().all(|c| sets.contains(c))
    }

    /// Unmarked tubings, each containing the full set.
    pub fn tubings(&self) -> Vec<Vec<u32>> {
        let proper = self.proper_tubes();
        let mut out = Vec::new();
        let mut current = vec![self.full()];
        self.extend(&proper, 0, &mut current, &mut out);
        out
    }

    fn extend(&self, pool: &[u32], from: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if self.component_rule(current) {
            let mut t = current.clone();
            t.sort_by_key(|&s| canonical_key(s));
            out.push(t);
        }
        for i in from..pool.len() {
            if current.iter().all(|&c| self.compatible(c, pool[i])) {
                current.push(pool[i]);
                self.extend(pool, i + 1, current, out);
                current.pop();
            }
        }
    }

    /// Every marked tubing, by brute force over markings of each tubing.
    pub fn marked_tubings(&self) -> Vec<Tubes> {
        let mut out = Vec::new();
        for t in self.tubings() {
            let k = t.len();
            for code in 0..3usize.pow(k as u32) {
                let mut c = code;
                let tubes: Tubes = t
                    .iter()
                    .map(|&s| {
                        let m = (c % 3) as u8;
                        c /= 3;
                        (s, m)
                    })
                    .collect();
                let ok = (0..k).all(|i| (i + 1..k).all(|j| self.marked_compatible(tubes[i], tubes[j])));
                if ok {
                    let mut tubes = tubes;
                    tubes.sort();
                    out.push(tubes);
                }
            }
        }
        out.sort();
        out
    }

    pub fn maximal(&self) -> Vec<Tubes> {
        self.marked_tubings().into_iter().filter(|t| t.len() == self.n && t.iter().all(|&(_, m)| m != BROKEN)).collect()
    }
}

/// Size first, then members in ascending order.
pub fn canonical_key(s: u32) -> (u32, Vec<u32>) {
    (s.count_ones(), (0..32).filter(|v| s >> v & 1 == 1).collect())
}

pub fn codimension(t: &Tubes) -> usize {
    t.iter().filter(|&&(_, m)| m != BROKEN).count()
}

pub fn mark_code(m: Marking) -> u8 {
    match m {
        Marking::Thin => THIN,
        Marking::Thick => THICK,
        Marking::Broken => BROKEN,
    }
}

/// Library tubing in the reference encoding.
pub fn encode(t: &MarkedTubing) -> Tubes {
    let mut out: Tubes = t.tubes().iter().map(|x| (x.tube.bits(), mark_code(x.marking))).collect();
    out.sort();
    out
}

pub fn pow3(e: u64) -> i128 {
    3i128.pow(e as u32)
}

pub fn weight_of(w: &[u64], s: u32) -> u64 {
    (0..w.len()).filter(|&v| s >> v & 1 == 1).map(|v| w[v]).sum()
}

fn smallest_containing(t: &Tubes, v: usize) -> Tube {
    *t.iter().filter(|&&(s, _)| s >> v & 1 == 1).min_by_key(|&&(s, _)| s.count_ones()).expect("full set present")
}

fn closely_nested(t: &Tubes, outer: u32) -> Vec<u32> {
    let inside: Vec<u32> = t.iter().map(|&(s, _)| s).filter(|&s| s != outer && s & outer == s).collect();
    inside.iter().copied().filter(|&s| !inside.iter().any(|&m| m != s && s & m == s)).collect()
}

/// Weighted base value of node `v` in a maximal tubing.
pub fn base_value(t: &Tubes, v: usize, w: &[u64]) -> i128 {
    let (outer, _) = smallest_containing(t, v);
    pow3(weight_of(w, outer) - 1) - closely_nested(t, outer).iter().map(|&s| pow3(weight_of(w, s) - 1)).sum::<i128>()
}

pub fn realize(t: &Tubes, w: &[u64]) -> Vec<i128> {
    (0..w.len())
        .map(|v| {
            let f = base_value(t, v, w);
            if smallest_containing(t, v).1 == THICK {
                3 * f
            } else {
                f
            }
        })
        .collect()
}

pub fn realize_domain(t: &Tubes, n: usize) -> Vec<i128> {
    let w = vec![1; n];
    (0..n).map(|v| if smallest_containing(t, v).1 == THICK { 3 * base_value(t, v, &w) } else { 1 }).collect()
}

pub fn realize_range(t: &Tubes, n: usize) -> Vec<i128> {
    let w = vec![1; n];
    (0..n).map(|v| if smallest_containing(t, v).1 == THICK { pow3(n as u64) } else { base_value(t, v, &w) }).collect()
}

/// `(coefficients, rhs, thick)` of a one-tube facet tubing: thin tubes
/// bound `sum >= 3^(w-1)`, a thick universal tube with broken tubes
/// bounds `sum <= 3^w(U) - sum 3^w(b)` over the nodes outside the broken tubes.
pub fn facet_inequality(n: usize, t: &Tubes, w: &[u64]) -> (Vec<i128>, i128, bool) {
    let solid: Vec<&Tube> = t.iter().filter(|&&(_, m)| m != BROKEN).collect();
    assert_eq!(solid.len(), 1, "not a facet tubing");
    let (s, m) = *solid[0];
    if m == THIN {
        let coeffs = (0..n).map(|v| (s >> v & 1) as i128).collect();
        (coeffs, pow3(weight_of(w, s) - 1), false)
    } else {
        let broken: Vec<u32> = t.iter().filter(|&&(_, m)| m == BROKEN).map(|&(b, _)| b).collect();
        let covered = broken.iter().fold(0, |a, &b| a | b);
        let coeffs = (0..n).map(|v| (((s & !covered) >> v) & 1) as i128).collect();
        let rhs = pow3(weight_of(w, s)) - broken.iter().map(|&b| pow3(weight_of(w, b))).sum::<i128>();
        (coeffs, rhs, true)
    }
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Fraction-free determinant.
pub fn det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for i in 0..k {
        if m[i][i] == 0 {
            match (i + 1..k).find(|&r| m[r][i] != 0) {
                Some(r) => {
                    m.swap(i, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in i + 1..k {
            for c in i + 1..k {
                m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
            }
        }
        prev = m[i][i];
    }
    sign * m[k - 1][k - 1]
}

pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - p * b;
                }
                let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

pub fn affine_dim(points: &[&Vec<i128>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let diffs: Vec<Vec<i128>> =
        points[1..].iter().map(|p| p.iter().zip(points[0]).map(|(a, b)| a - b).collect()).collect();
    rank(&diffs)
}

/// A facet as `normal . x >= rhs` with a primitive normal, plus the
/// indices of the points on it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RefFacet {
    pub normal: Vec<i128>,
    pub rhs: i128,
    pub incident: Vec<usize>,
}

fn subsets(len: usize, k: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in from..len {
        if len - i < k - cur.len() {
            break;
        }
        cur.push(i);
        subsets(len, k, i + 1, cur, f);
        cur.pop();
    }
}

/// Facets of the hull of full-dimensional points, by trying every
/// hyperplane through `n` of them.
pub fn brute_facets(points: &[Vec<i128>]) -> Vec<RefFacet> {
    let n = points[0].len();
    let mut found = BTreeSet::new();
    subsets(points.len(), n, 0, &mut Vec::new(), &mut |idx| {
        let base = &points[idx[0]];
        let diffs: Vec<Vec<i128>> =
            idx[1..].iter().map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let mut normal: Vec<i128> = (0..n)
            .map(|c| {
                let minor: Vec<Vec<i128>> = diffs
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, &x)| x).collect())
                    .collect();
                if c % 2 == 0 {
                    det(minor)
                } else {
                    -det(minor)
                }
            })
            .collect();
        if normal.iter().all(|&x| x == 0) {
            return;
        }
        let g = normal.iter().fold(0, |g, &x| gcd(g, x));
        normal.iter_mut().for_each(|x| *x /= g);
        let dot = |p: &Vec<i128>| p.iter().zip(&normal).map(|(a, b)| a * b).sum::<i128>();
        let rhs = dot(base);
        let values: Vec<i128> = points.iter().map(dot).collect();
        let incident = (0..points.len()).filter(|&i| values[i] == rhs).collect();
        if values.iter().all(|&v| v >= rhs) {
            found.insert(RefFacet { normal, rhs, incident });
        } else if values.iter().all(|&v| v <= rhs) {
            found.insert(RefFacet { normal: normal.iter().map(|x| -x).collect(), rhs: -rhs, incident });
        }
    });
    found.into_iter().collect()
}

/// Face counts by dimension, polytope included, from facet incidences.
pub fn f_vector(points: &[Vec<i128>], facets: &[RefFacet]) -> Vec<usize> {
    let n = points[0].len();
    let all: Vec<usize> = (0..points.len()).collect();
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    faces.insert(all);
    let mut frontier: Vec<Vec<usize>> = facets.iter().map(|f| f.incident.clone()).collect();
    while let Some(face) = frontier.pop() {
        if face.is_empty() || !faces.insert(face.clone()) {
            continue;
        }
        for f in facets {
            let meet: Vec<usize> = face.iter().copied().filter(|i| f.incident.contains(i)).collect();
            if !faces.contains(&meet) {
                frontier.push(meet);
            }
        }
    }
    let mut counts = vec![0; n + 1];
    for face in &faces {
        let pts: Vec<&Vec<i128>> = face.iter().map(|&i| &points[i]).collect();
        counts[affine_dim(&pts)] += 1;
    }
    counts
}

/// Vertices of the hull: points not in the convex hull of the others are
/// exactly those lying on at least `n` facets with independent normals.
pub fn hull_vertices(points: &[Vec<i128>], facets: &[RefFacet]) -> Vec<usize> {
    let n = points[0].len();
    (0..points.len())
        .filter(|&i| {
            let normals: Vec<Vec<i128>> =
                facets.iter().filter(|f| f.incident.contains(&i)).map(|f| f.normal.clone()).collect();
            rank(&normals) == n
        })
        .collect()
}

pub fn factorial(k: u64) -> u64 {
    (1..=k).product()
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: u64, k: u64) -> u64 {
    match (n, k) {
        (0, 0) => 1,
        (_, 0) | (0, _) => 0,
        _ => k * stirling2(n - 1, k) + stirling2(n - 1, k - 1),
    }
}

/// Faces of each dimension of the permutohedron on `m` letters, polytope included.
pub fn permutohedron_counts(m: u64) -> Vec<usize> {
    (0..m).map(|k| (factorial(m - k) * stirling2(m, m - k)) as usize).collect()
}

/// Faces of each dimension of the `n`-cube, polytope included.
pub fn cube_counts(n: u64) -> Vec<usize> {
    (0..=n).map(|k| (factorial(n) / (factorial(k) * factorial(n - k)) * (1 << (n - k))) as usize).collect()
}

/// Vertex count of the multiplihedron of the edgeless graph on `m` nodes.
pub fn edgeless_vertex_count(m: usize) -> usize {
    m + m * (1 << (m - 1))
}

/// One graph per isomorphism type on at most three nodes.
pub fn small_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("path:1", Graph::path(1).unwrap()),
        ("edgeless:2", Graph::edgeless(2).unwrap()),
        ("path:2", Graph::path(2).unwrap()),
        ("edgeless:3", Graph::edgeless(3).unwrap()),
        ("one-edge:3", Graph::new(3, &[(0, 1)]).unwrap()),
        ("path:3", Graph::path(3).unwrap()),
        ("complete:3", Graph::complete(3).unwrap()),
    ]
}

pub fn four_node_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("path:4", Graph::path(4).unwrap()),
        ("cycle:4", Graph::cycle(4).unwrap()),
        ("complete:4", Graph::complete(4).unwrap()),
        ("edgeless:4", Graph::edgeless(4).unwrap()),
    ]
}

pub fn corpus() -> Vec<(&'static str, Graph)> {
    let mut all = small_corpus();
    all.extend(four_node_corpus());
    all
}

/// Non-isomorphic graphs on `n` nodes, by brute force over edge sets and
/// relabellings.
pub fn isomorphism_types(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let perms = permutations(n);
    let mut seen: BTreeSet<Vec<(usize, usize)>> = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<(usize, usize)> = edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                e.sort();
                e
            })
            .min()
            .unwrap_or_default();
        seen.insert(canon);
    }
    seen.len()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn to_i128(p: &tubex::LatticePoint) -> Vec<i128> {
    p.coords().iter().map(|c| c.to_string().parse().expect("fits in i128")).collect()
}
