//! Finite simple graphs and node subsets.
//!
//! Nodes are labelled densely `0..n`. A [`NodeSet`] is a bitmask over those
//! labels, so tubes compare and hash by value.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on graph size imposed by the bitmask encoding.
pub const MAX_NODES: usize = 32;

/// Upper bound for [`Graph::enumerate_tubes`], which walks all `2^n` subsets.
pub const MAX_TUBE_NODES: usize = 16;

/// A subset of the nodes `0..n` of some graph.
///
/// Ordering is by cardinality first, then lexicographically on the ascending
/// member lists.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct NodeSet(u32);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub fn from_bits(bits: u32) -> Self {
        NodeSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// All nodes `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            NodeSet(u32::MAX)
        } else {
            NodeSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        NodeSet(1 << v)
    }

    /// Builds a set from node labels. Labels must be below [`MAX_NODES`].
    pub fn from_nodes<I: IntoIterator<Item = usize>>(nodes: I) -> Result<Self> {
        let mut bits = 0u32;
        for v in nodes {
            if v >= MAX_NODES {
                return Err(Error::NodeOutOfRange { node: v, n: MAX_NODES });
            }
            bits |= 1 << v;
        }
        Ok(NodeSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: NodeSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(self, other: NodeSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> NodeIter {
        NodeIter(self.0)
    }

    pub fn members(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels members through `map`, where `map[i]` is the new label of old node `i`.
    pub fn map_through(self, map: &[usize]) -> NodeSet {
        NodeSet(self.iter().fold(0, |acc, v| acc | (1 << map[v])))
    }
}

pub struct NodeIter(u32);

impl Iterator for NodeIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.iter().cmp(other.iter()))
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for NodeSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for NodeSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let nodes = Vec::<usize>::deserialize(deserializer)?;
        NodeSet::from_nodes(nodes).map_err(serde::de::Error::custom)
    }
}

/// A finite simple undirected graph on nodes `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u32>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_NODES {
            return Err(Error::TooManyNodes { n, limit: MAX_NODES });
        }
        let mut adj = vec![0u32; n];
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::NodeOutOfRange { node: v, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            if adj[a] & (1 << b) != 0 {
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        Ok(Graph { adj })
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges)
    }

    /// Cycle on `n >= 3` nodes.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Parse(format!("cycle needs at least 3 nodes, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                edges.push((a, b));
            }
        }
        Graph::new(n, &edges)
    }

    pub fn edgeless(n: usize) -> Result<Self> {
        Graph::new(n, &[])
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.node_count())
    }

    pub fn neighbors(&self, v: usize) -> NodeSet {
        NodeSet(self.adj[v])
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.node_count() && self.adj[a] & (1 << b) != 0
    }

    /// Edges as ascending pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.node_count() {
            for b in self.neighbors(a).iter().filter(|&b| b > a) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        let full = self.nodes();
        (0..self.node_count()).all(|v| NodeSet(self.adj[v]) == full.difference(NodeSet::singleton(v)))
    }

    pub(crate) fn check_subset(&self, s: NodeSet) -> Result<()> {
        let extra = s.difference(self.nodes());
        match extra.first() {
            Some(node) => Err(Error::NodeOutOfRange { node, n: self.node_count() }),
            None => Ok(()),
        }
    }

    /// Connectivity of the induced subgraph on `s`, assuming `s` is in range.
    pub(crate) fn connected(&self, s: NodeSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        let mut reached = NodeSet::singleton(start);
        let mut frontier = reached;
        while let Some(v) = frontier.first() {
            frontier.remove(v);
            let fresh = self.neighbors(v).intersection(s).difference(reached);
            reached = reached.union(fresh);
            frontier = frontier.union(fresh);
        }
        reached == s
    }

    /// Whether the induced subgraph on `s` is connected. The empty set is not.
    pub fn is_connected(&self, s: NodeSet) -> Result<bool> {
        self.check_subset(s)?;
        Ok(self.connected(s))
    }

    /// Whether `s` is a tube: a nonempty connected set, or the whole node set.
    pub fn is_tube(&self, s: NodeSet) -> bool {
        !s.is_empty() && s.is_subset(self.nodes()) && (s == self.nodes() || self.connected(s))
    }

    /// All tubes, including the universal tube even when the graph is
    /// disconnected, sorted by size and then lexicographically.
    pub fn enumerate_tubes(&self) -> Result<Vec<NodeSet>> {
        let n = self.node_count();
        if n > MAX_TUBE_NODES {
            return Err(Error::ScaleBound { what: "tube enumeration", n, limit: MAX_TUBE_NODES });
        }
        let full = self.nodes().bits();
        let mut tubes: Vec<NodeSet> = (1..=full).map(NodeSet).filter(|&s| self.is_tube(s)).collect();
        tubes.sort();
        Ok(tubes)
    }

    /// Tubes other than the universal tube.
    pub fn proper_tubes(&self) -> Result<Vec<NodeSet>> {
        let full = self.nodes();
        let mut tubes = self.enumerate_tubes()?;
        tubes.retain(|&t| t != full);
        Ok(tubes)
    }

    /// Connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<NodeSet> {
        let mut rest = self.nodes();
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = NodeSet::singleton(start);
            let mut frontier = comp;
            while let Some(v) = frontier.first() {
                frontier.remove(v);
                let fresh = self.neighbors(v).difference(comp);
                comp = comp.union(fresh);
                frontier = frontier.union(fresh);
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `t`, relabelled densely. The returned map sends
    /// each new label to the original node.
    pub fn induced_subgraph(&self, t: NodeSet) -> Result<(Graph, Vec<usize>)> {
        if t.is_empty() {
            return Err(Error::EmptyNodeSet);
        }
        self.check_subset(t)?;
        let labels = t.members();
        let mut edges = Vec::new();
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
        }
        Ok((Graph::new(labels.len(), &edges)?, labels))
    }

    /// Reconnected complement of `t`: nodes outside `t`, with `a` and `b` joined
    /// when `{a,b}` or `{a,b} ∪ t` induces a connected subgraph.
    pub fn reconnected_complement(&self, t: NodeSet) -> Result<(Graph, Vec<usize>)> {
        self.check_subset(t)?;
        if t.is_empty() || t == self.nodes() {
            return Err(Error::NotProperSubset);
        }
        let labels = self.nodes().difference(t).members();
        let mut edges = Vec::new();
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate().skip(i + 1) {
                let pair = NodeSet::singleton(a).union(NodeSet::singleton(b));
                if self.has_edge(a, b) || self.connected(pair.union(t)) {
                    edges.push((i, j));
                }
            }
        }
        Ok((Graph::new(labels.len(), &edges)?, labels))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}, {:?})", self.node_count(), self.edges())
    }
}
