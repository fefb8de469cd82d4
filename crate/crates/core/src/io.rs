//! Text formats: graph input, tubing and poset JSON, vertex records,
//! polymake points, OFF, face-lattice JSON and f-vector CSV.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hull::FaceLattice;
use crate::poset::RankedPoset;
use crate::realize::LatticePoint;
use crate::tubing::MarkedTubing;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    nodes: usize,
    edges: Vec<[usize; 2]>,
}

/// `{"nodes": n, "edges": [[a, b], ...]}`
pub fn parse_graph_json(s: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let edges: Vec<(usize, usize)> = raw.edges.iter().map(|&[a, b]| (a, b)).collect();
    Graph::new(raw.nodes, &edges)
}

/// First line `n`, then one `a b` pair per line. Blank lines and lines
/// starting with `#` are skipped.
pub fn parse_graph_text(s: &str) -> Result<Graph> {
    let mut lines = s.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or(Error::EmptyGraph)?;
    let n: usize = header.parse().map_err(|_| Error::Parse(format!("expected a node count, got {header:?}")))?;
    let mut edges = Vec::new();
    for line in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = parts[..] else {
            return Err(Error::Parse(format!("expected `a b`, got {line:?}")));
        };
        let parse = |x: &str| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad node label {x:?}")));
        edges.push((parse(a)?, parse(b)?));
    }
    Graph::new(n, &edges)
}

/// JSON if the input starts with `{`, the line format otherwise.
pub fn parse_graph(s: &str) -> Result<Graph> {
    if s.trim_start().starts_with('{') {
        parse_graph_json(s)
    } else {
        parse_graph_text(s)
    }
}

/// `path:n`, `cycle:n`, `complete:n` or `edgeless:n`; `None` for anything else.
pub fn parse_preset(s: &str) -> Option<Result<Graph>> {
    let (name, size) = s.split_once(':')?;
    let build: fn(usize) -> Result<Graph> = match name {
        "path" => Graph::path,
        "cycle" => Graph::cycle,
        "complete" => Graph::complete,
        "edgeless" => Graph::edgeless,
        _ => return None,
    };
    Some(size.parse::<usize>().map_err(|_| Error::Parse(format!("bad size in preset {s:?}"))).and_then(build))
}

/// A preset name or a path to a graph file.
pub fn load_graph(source: &str) -> Result<Graph> {
    if let Some(g) = parse_preset(source) {
        return g;
    }
    let text = std::fs::read_to_string(source).map_err(|e| Error::Parse(format!("{source}: {e}")))?;
    parse_graph(&text)
}

pub fn graph_to_json(g: &Graph) -> String {
    let raw = GraphJson { nodes: g.node_count(), edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect() };
    serde_json::to_string(&raw).expect("graph serializes")
}

/// Comma-separated positive integers, one per node.
pub fn parse_weights(s: &str, n: usize) -> Result<crate::realize::WeightVector> {
    let values = s
        .split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| Error::Weights(format!("bad weight {x:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if values.len() != n {
        return Err(Error::Weights(format!("{} weights for {n} nodes", values.len())));
    }
    crate::realize::WeightVector::new(values)
}

pub fn marked_tubing_to_json(t: &MarkedTubing) -> String {
    serde_json::to_string(t).expect("tubing serializes")
}

/// Parses `{"tubes": [{"nodes": [...], "mark": "..."}]}` and validates it against `g`.
pub fn parse_marked_tubing(g: &Graph, s: &str) -> Result<MarkedTubing> {
    let raw: MarkedTubing = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    MarkedTubing::new(g, raw.tubes().to_vec())
}

#[derive(Serialize)]
struct PosetJson<'a, T: Serialize> {
    nodes: &'a [T],
    ranks: &'a [usize],
    covers: Vec<[usize; 2]>,
}

/// Node labels, ranks, and `[lower, upper]` cover pairs.
pub fn poset_to_json<T: Serialize>(labels: &[T], poset: &RankedPoset) -> String {
    let raw = PosetJson {
        nodes: labels,
        ranks: poset.ranks(),
        covers: poset.cover_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
    };
    serde_json::to_string_pretty(&raw).expect("poset serializes")
}

/// A realized vertex: its tubing and decimal coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub tubing: MarkedTubing,
    pub coords: LatticePoint,
}

pub fn vertex_records_json(records: &[VertexRecord]) -> String {
    serde_json::to_string_pretty(records).expect("records serialize")
}

/// polymake `POINTS` section with a homogenizing leading 1.
pub fn polymake_points(points: &[LatticePoint]) -> String {
    let mut out = String::from("POINTS\n");
    for p in points {
        let _ = writeln!(out, "1 {}", p.to_strings().join(" "));
    }
    out
}

/// OFF file for a 3-dimensional polytope in 3-space. Each facet lists its
/// vertices in boundary order.
pub fn off_file(points: &[LatticePoint], lattice: &FaceLattice) -> Result<String> {
    if lattice.ambient_dim() != 3 || lattice.dim() != 3 {
        return Err(Error::Unsupported(format!(
            "OFF needs a 3-dimensional polytope in 3-space, got dimension {} in {}-space",
            lattice.dim(),
            lattice.ambient_dim()
        )));
    }
    let edges: Vec<&[usize]> = lattice.faces().iter().filter(|f| f.rank == 1).map(|f| f.vertices.as_slice()).collect();
    let facets = lattice.facets();
    let mut out = format!("OFF\n{} {} {}\n", points.len(), facets.len(), edges.len());
    for p in points {
        let _ = writeln!(out, "{}", p.to_strings().join(" "));
    }
    for &fi in &facets {
        let verts = &lattice.faces()[fi].vertices;
        let inside: Vec<&[usize]> =
            edges.iter().copied().filter(|e| e.iter().all(|v| verts.binary_search(v).is_ok())).collect();
        let mut cycle = vec![verts[0]];
        while cycle.len() < verts.len() {
            let last = *cycle.last().expect("nonempty");
            let prev = if cycle.len() > 1 { Some(cycle[cycle.len() - 2]) } else { None };
            let next = inside
                .iter()
                .filter_map(|e| match e {
                    [a, b] if *a == last => Some(*b),
                    [a, b] if *b == last => Some(*a),
                    _ => None,
                })
                .find(|&v| Some(v) != prev && !cycle.contains(&v))
                .ok_or_else(|| Error::InconsistentIncidence(format!("facet {fi} is not a cycle")))?;
            cycle.push(next);
        }
        let idx: Vec<String> = cycle.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{} {}", cycle.len(), idx.join(" "));
    }
    Ok(out)
}

pub fn lattice_to_json(l: &FaceLattice) -> String {
    serde_json::to_string_pretty(l).expect("lattice serializes")
}

pub fn parse_lattice(s: &str) -> Result<FaceLattice> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

/// `v,e,...,facets` without the polytope itself.
pub fn fvector_csv(l: &FaceLattice) -> String {
    let f = l.f_vector();
    let proper = &f[..f.len().saturating_sub(1)];
    let parts: Vec<String> =
        if proper.is_empty() { vec!["1".into()] } else { proper.iter().map(usize::to_string).collect() };
    parts.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiplihedron::Multiplihedron;
    use crate::realize::WeightVector;
    use crate::tubing::{MarkedTube, Marking};
    use crate::NodeSet;

    #[test]
    fn graph_formats() {
        let g = parse_graph_json(r#"{"nodes": 3, "edges": [[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(parse_graph("3\n0 1\n# comment\n1 2\n").unwrap(), g);
        assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
        assert!(parse_graph("0\n").is_err());
        assert!(parse_graph("2\n0 0\n").is_err());
        assert!(parse_graph("2\n0 1 2\n").is_err());
        assert_eq!(parse_preset("cycle:4").unwrap().unwrap(), Graph::cycle(4).unwrap());
        assert!(parse_preset("star:4").is_none());
        assert!(parse_preset("path:x").unwrap().is_err());
        assert!(parse_preset("path:0").unwrap().is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weights("2, 1,1", 3).unwrap().as_slice(), &[2, 1, 1]);
        assert!(parse_weights("2,1", 3).is_err());
        assert!(parse_weights("0,1", 2).is_err());
    }

    #[test]
    fn tubing_json_round_trip() {
        let g = Graph::path(2).unwrap();
        let t = MarkedTubing::new(
            &g,
            vec![MarkedTube::new(NodeSet::singleton(0), Marking::Thin), MarkedTube::thick(g.nodes())],
        )
        .unwrap();
        let text = marked_tubing_to_json(&t);
        assert_eq!(text, r#"{"tubes":[{"nodes":[0],"mark":"thin"},{"nodes":[0,1],"mark":"thick"}]}"#);
        assert_eq!(parse_marked_tubing(&g, &text).unwrap(), t);
        let bad = r#"{"tubes":[{"nodes":[0],"mark":"thick"},{"nodes":[0,1],"mark":"thin"}]}"#;
        assert!(parse_marked_tubing(&g, bad).is_err());
    }

    #[test]
    fn polymake_and_csv() {
        let g = Graph::path(2).unwrap();
        let j = Multiplihedron::new(&g, &WeightVector::unit(2)).unwrap();
        let text = polymake_points(j.points());
        assert!(text.starts_with("POINTS\n1 "));
        assert_eq!(text.lines().count(), 7);
        assert_eq!(fvector_csv(j.lattice()), "6,6");
    }

    #[test]
    fn off_output() {
        let g = Graph::path(3).unwrap();
        let j = Multiplihedron::new(&g, &WeightVector::unit(3)).unwrap();
        let off = off_file(j.points(), j.lattice()).unwrap();
        let mut lines = off.lines();
        assert_eq!(lines.next(), Some("OFF"));
        assert_eq!(lines.next(), Some("21 13 32"));
        let g4 = Graph::path(4).unwrap();
        let j4 = Multiplihedron::new(&g4, &WeightVector::unit(4)).unwrap();
        assert!(matches!(off_file(j4.points(), j4.lattice()), Err(Error::Unsupported(_))));
    }

    #[test]
    fn lattice_round_trip() {
        let g = Graph::path(3).unwrap();
        let j = Multiplihedron::new(&g, &WeightVector::unit(3)).unwrap();
        let text = lattice_to_json(j.lattice());
        assert_eq!(&parse_lattice(&text).unwrap(), j.lattice());
    }
}
