//! Executable claim suite: every structural statement about the polytope,
//! checked exactly on one graph, collected into a report.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{
    classify_facet, collapse_node, lower_facet_map, permutohedron_lattice, simplex_and_cut_cube, upper_facet_map,
    upper_lower_tubings, FacetType,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::hull::{
    brute_force_facets, brute_force_hull, h_polytope_vertices, lattice_isomorphic, minkowski_sum, to_rational,
    BRUTE_MAX_DIM, BRUTE_MAX_POINTS,
};
use crate::multiplihedron::{double_quotient_hull, facet_hyperplane, quotient_hull, Multiplihedron, Variant};
use crate::poset::{find_isomorphism, is_isomorphism, MarkedTubingPoset, ProductPoset, RankedPoset, TubingPoset};
use crate::realize::{realize_vertex, HyperplaneKind, LatticePoint, WeightVector};
use crate::tubing::{maximal_marked_tubings, MarkedTube, MarkedTubing, Marking};

/// Largest graph the suite accepts.
pub const MAX_VERIFY_NODES: usize = 4;
/// Largest graph for the random-weight trials and quotient claims.
pub const MAX_SMALL_NODES: usize = 3;
pub const RANDOM_TRIALS: usize = 20;
pub const MAX_RANDOM_WEIGHT: u64 = 3;

/// Claim identifiers, in report order.
pub const CLAIMS: [&str; 13] = [
    "face-correspondence",
    "random-weights",
    "codimension",
    "facet-counts",
    "oracle-equivalence",
    "facet-factorization",
    "thin-thick-associahedron",
    "parallel-universal-facets",
    "permutohedron",
    "simplicity",
    "edgeless-minkowski",
    "quotients",
    "quotient-cube",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub id: String,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl Claim {
    fn pass(id: &str, details: impl Into<String>) -> Self {
        Claim { id: id.into(), status: Status::Pass, details: details.into(), counterexample: None }
    }

    fn fail(id: &str, details: impl Into<String>, counterexample: Option<Value>) -> Self {
        Claim { id: id.into(), status: Status::Fail, details: details.into(), counterexample }
    }

    fn skip(id: &str, details: impl Into<String>) -> Self {
        Claim { id: id.into(), status: Status::NotApplicable, details: details.into(), counterexample: None }
    }

    fn from_check(id: &str, r: std::result::Result<String, Failure>) -> Self {
        match r {
            Ok(d) => Claim::pass(id, d),
            Err(f) => Claim::fail(id, f.message, f.witness),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphRecord {
    pub nodes: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphRecord {
    fn from(g: &Graph) -> Self {
        GraphRecord { nodes: g.node_count(), edges: g.edges().into_iter().map(|(a, b)| [a, b]).collect() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub graph: GraphRecord,
    pub weights: WeightVector,
    pub seed: u64,
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    /// No claim failed.
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let edges: Vec<String> = self.graph.edges.iter().map(|[a, b]| format!("{a}-{b}")).collect();
        let _ = writeln!(out, "graph: {} nodes, edges [{}]", self.graph.nodes, edges.join(" "));
        let _ = writeln!(out, "weights: {}  seed: {}", self.weights, self.seed);
        for c in &self.claims {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::NotApplicable => "N/A ",
            };
            let _ = writeln!(out, "{tag} {:<26} {}", c.id, c.details);
            if let Some(w) = &c.counterexample {
                let _ = writeln!(out, "     counterexample: {w}");
            }
        }
        let _ = writeln!(out, "{}", if self.passed() { "all claims hold" } else { "some claims failed" });
        out
    }
}

struct Failure {
    message: String,
    witness: Option<Value>,
}

fn fail<T>(message: impl Into<String>, witness: Option<Value>) -> std::result::Result<T, Failure> {
    Err(Failure { message: message.into(), witness })
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let witness = match &e {
            Error::RejectedCandidates(list) => Some(json!(list.iter().map(|c| c.to_string()).collect::<Vec<_>>())),
            _ => None,
        };
        Failure { message: e.to_string(), witness }
    }
}

type Check = std::result::Result<String, Failure>;

fn point_json(p: &LatticePoint) -> Value {
    json!(p.to_strings())
}

fn tubing_json(t: &MarkedTubing) -> Value {
    serde_json::to_value(t).expect("tubing serializes")
}

/// The five-step comparison of the realized polytope with the tubing poset.
pub fn check_face_correspondence(j: &Multiplihedron) -> std::result::Result<String, (String, Option<Value>)> {
    main_steps(j).map_err(|f| (f.message, f.witness))
}

fn main_steps(j: &Multiplihedron) -> Check {
    let g = j.graph();
    let n = g.node_count();
    let w = j.weights();
    let points = j.points();
    let poset = j.poset();

    // 1. full dimension and distinct points
    let dim = crate::hull::affine_dimension(points)?;
    if dim != n {
        return fail(format!("points span dimension {dim}, expected {n}"), None);
    }
    let distinct: BTreeSet<&LatticePoint> = points.iter().collect();
    if distinct.len() != points.len() {
        return fail("two maximal tubings realize to the same point", None);
    }

    // 2. every facet hyperplane holds the vertices below its tubing and
    //    strictly separates the rest, on the expected side
    for (&fi, facet) in j.facet_tubings().iter().zip(j.facets()) {
        let h = &facet.hyperplane;
        for (k, p) in points.iter().enumerate() {
            let value = h.evaluate(p);
            let below = poset.leq(j.vertex_tubings()[k], fi);
            let ok = if below {
                value == h.rhs
            } else {
                match h.kind {
                    HyperplaneKind::Thick => value < h.rhs,
                    _ => value > h.rhs,
                }
            };
            if !ok {
                return fail(
                    format!("vertex {k} breaks the bound of facet tubing {}", j.tubing(fi)),
                    Some(json!({
                        "facet": tubing_json(j.tubing(fi)),
                        "vertex": tubing_json(j.tubing(j.vertex_tubings()[k])),
                        "point": point_json(p),
                        "value": value.to_string(),
                        "rhs": h.rhs.to_string(),
                        "on_face": below,
                    })),
                );
            }
        }
    }

    // 3. the halfspaces alone give back exactly the realized points
    let halfspaces: Vec<_> = j.facets().iter().map(|f| (f.hyperplane.clone(), f.side)).collect();
    let from_h: BTreeSet<_> = h_polytope_vertices(&halfspaces, n)?.into_iter().collect();
    let realized: BTreeSet<_> = points.iter().map(to_rational).collect();
    if from_h != realized {
        let extra: Vec<String> = from_h
            .difference(&realized)
            .map(|p| format!("{:?}", p.iter().map(|c| c.to_string()).collect::<Vec<_>>()))
            .collect();
        return fail(
            format!("halfspace vertices differ from realized points ({} vs {})", from_h.len(), realized.len()),
            Some(json!({ "unexpected": extra })),
        );
    }

    // 4. tubing -> face assignment is an order isomorphism
    let faces = match j.tubing_faces() {
        Ok(f) => f,
        Err(i) => {
            return fail(
                format!("vertices below {} do not form a face", j.tubing(i)),
                Some(json!({ "tubing": tubing_json(j.tubing(i)), "vertices": j.vertices_below(i) })),
            )
        }
    };
    if !is_isomorphism(&poset.ranked(), &j.lattice().poset(), &faces) {
        return fail("tubing-to-face map is not an order isomorphism", None);
    }

    // 5. codimension = number of non-broken tubes
    codimension_steps(j, &faces)?;

    Ok(format!("{} vertices, {} facets, {} faces; weights {w}", points.len(), j.facets().len(), j.lattice().len()))
}

fn codimension_steps(j: &Multiplihedron, faces: &[usize]) -> Check {
    let n = j.graph().node_count();
    for (i, &f) in faces.iter().enumerate() {
        let rank = j.lattice().faces()[f].rank;
        let t = j.tubing(i);
        if n - rank != t.codimension() {
            return fail(
                format!("{t} sits on a face of dimension {rank}"),
                Some(json!({ "tubing": tubing_json(t), "rank": rank })),
            );
        }
    }
    Ok(format!("{} faces checked", faces.len()))
}

fn codimension_claim(j: &Multiplihedron) -> Check {
    match j.tubing_faces() {
        Ok(faces) => codimension_steps(j, &faces),
        Err(i) => fail(format!("vertices below {} do not form a face", j.tubing(i)), None),
    }
}

/// Seeded weights with entries in `1..=3`, one vector per trial.
pub fn random_weights(n: usize, seed: u64, trials: usize) -> Vec<WeightVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| {
            WeightVector::new((0..n).map(|_| rng.gen_range(1..=MAX_RANDOM_WEIGHT)).collect())
                .expect("weights are positive")
        })
        .collect()
}

fn random_weight_claim(g: &Graph, seed: u64) -> Check {
    let weights = random_weights(g.node_count(), seed, RANDOM_TRIALS);
    for w in &weights {
        let j = Multiplihedron::new(g, w)
            .map_err(|e| Failure { message: format!("weights {w}: {e}"), witness: Some(json!({ "weights": w })) })?;
        main_steps(&j).map_err(|f| Failure {
            message: format!("weights {w}: {}", f.message),
            witness: Some(json!({ "weights": w, "detail": f.witness })),
        })?;
    }
    let shown: Vec<String> = weights.iter().map(|w| format!("({w})")).collect();
    Ok(format!("{} trials: {}", weights.len(), shown.join(" ")))
}

fn facet_count_claim(j: &Multiplihedron) -> Check {
    let g = j.graph();
    let n = g.node_count() as u32;
    let (upper, lower) = upper_lower_tubings(g)?;
    let proper = g.proper_tubes()?.len();
    let geometric = if j.points().len() <= BRUTE_MAX_POINTS && g.node_count() <= BRUTE_MAX_DIM {
        brute_force_facets(j.points())?.len()
    } else {
        j.lattice().facets().len()
    };
    let full = (1usize << n) - 1;
    let printed = 1usize << (n - 1);
    let details = format!(
        "facets {geometric} = lower {} + upper {}; lower = {proper} proper tubes + 1; upper = 2^n - 1 = {full} (2^(n-1) = {printed}{})",
        lower.len(),
        upper.len(),
        if printed == full { " agrees only at n = 1" } else { " would be wrong" }
    );
    if geometric != upper.len() + lower.len() || lower.len() != proper + 1 || upper.len() != full {
        return fail(details, None);
    }
    Ok(details)
}

fn oracle_claim(j: &Multiplihedron) -> std::result::Result<Option<String>, Failure> {
    if j.points().len() > BRUTE_MAX_POINTS || j.graph().node_count() > BRUTE_MAX_DIM {
        return Ok(None);
    }
    let brute: BTreeSet<_> = brute_force_facets(j.points())?.iter().map(|f| f.inward_key()).collect();
    let tubing: BTreeSet<_> = j.facets().iter().map(|f| f.inward_key()).collect();
    if brute != tubing {
        let show = |s: &BTreeSet<(Vec<BigInt>, BigInt)>| -> Vec<String> {
            s.iter().map(|(c, r)| format!("{c:?} >= {r}")).collect()
        };
        return fail(
            "brute-force facets differ from tubing facets",
            Some(json!({
                "only_brute_force": show(&brute.difference(&tubing).cloned().collect()),
                "only_tubings": show(&tubing.difference(&brute).cloned().collect()),
            })),
        );
    }
    Ok(Some(format!("{} facets agree", brute.len())))
}

/// Cache of tubing posets for the small graphs that appear as factors.
#[derive(Default)]
pub struct PosetCache {
    marked: HashMap<Graph, MarkedTubingPoset>,
    unmarked: HashMap<Graph, TubingPoset>,
}

impl PosetCache {
    fn marked(&mut self, g: &Graph) -> Result<&MarkedTubingPoset> {
        if !self.marked.contains_key(g) {
            self.marked.insert(g.clone(), MarkedTubingPoset::new(g)?);
        }
        Ok(&self.marked[g])
    }

    fn unmarked(&mut self, g: &Graph) -> Result<&TubingPoset> {
        if !self.unmarked.contains_key(g) {
            self.unmarked.insert(g.clone(), TubingPoset::new(g)?);
        }
        Ok(&self.unmarked[g])
    }
}

/// Product structure of one facet: the factor posets and the explicit map
/// from product elements to tubings of the graph.
pub struct FacetProduct {
    pub product: ProductPoset,
    pub images: Vec<MarkedTubing>,
}

pub fn facet_product(g: &Graph, facet: &MarkedTubing, cache: &mut PosetCache) -> Result<FacetProduct> {
    let kind = classify_facet(facet).ok_or_else(|| Error::Unsupported(format!("{facet} is not a facet tubing")))?;
    let mut factors: Vec<RankedPoset> = Vec::new();
    let images: Vec<MarkedTubing>;
    match kind {
        FacetType::Lower(t) if t == g.nodes() => {
            let k = cache.unmarked(g)?.clone();
            factors.push(k.ranked().clone());
            let product = ProductPoset::new(factors)?;
            images = product
                .tuples
                .iter()
                .map(|tp| lower_facet_map(g, t, None, &k.elements()[tp[0]]))
                .collect::<Result<_>>()?;
            Ok(FacetProduct { product, images })
        }
        FacetType::Lower(t) => {
            let star = g.reconnected_complement(t)?.0;
            let sub = g.induced_subgraph(t)?.0;
            let jstar = cache.marked(&star)?.clone();
            let ksub = cache.unmarked(&sub)?.clone();
            factors.push(jstar.ranked());
            factors.push(ksub.ranked().clone());
            let product = ProductPoset::new(factors)?;
            images = product
                .tuples
                .iter()
                .map(|tp| lower_facet_map(g, t, Some(&jstar.elements()[tp[0]]), &ksub.elements()[tp[1]]))
                .collect::<Result<_>>()?;
            Ok(FacetProduct { product, images })
        }
        FacetType::Upper(broken) => {
            let outside = if broken.is_empty() {
                cache.unmarked(g)?.clone()
            } else {
                let all = broken.iter().fold(NodeSet::EMPTY, |a, &b| a.union(b));
                cache.unmarked(&g.reconnected_complement(all)?.0)?.clone()
            };
            factors.push(outside.ranked().clone());
            let mut parts = Vec::new();
            for &b in &broken {
                let p = cache.marked(&g.induced_subgraph(b)?.0)?.clone();
                factors.push(p.ranked());
                parts.push(p);
            }
            let product = ProductPoset::new(factors)?;
            images = product
                .tuples
                .iter()
                .map(|tp| {
                    let chosen: Vec<MarkedTubing> =
                        parts.iter().zip(&tp[1..]).map(|(p, &x)| p.elements()[x].clone()).collect();
                    upper_facet_map(g, &broken, &outside.elements()[tp[0]], &chosen)
                })
                .collect::<Result<_>>()?;
            Ok(FacetProduct { product, images })
        }
    }
}

fn factorization_claim(j: &Multiplihedron, cache: &mut PosetCache) -> Check {
    let g = j.graph();
    let n = g.node_count();
    let poset = j.poset();
    for &fi in j.facet_tubings() {
        let facet = j.tubing(fi);
        let fp = facet_product(g, facet, cache)?;
        let witness = || Some(json!({ "facet": tubing_json(facet) }));
        if fp.product.dimension() + 1 != n {
            return fail(format!("factors of {facet} have total dimension {}", fp.product.dimension()), witness());
        }
        let mut map = Vec::with_capacity(fp.images.len());
        for img in &fp.images {
            match poset.index_of(img) {
                Some(i) if poset.leq(i, fi) => map.push(i),
                _ => return fail(format!("{img} is not below {facet}"), witness()),
            }
        }
        let distinct: BTreeSet<usize> = map.iter().copied().collect();
        let below = poset.down_set(fi).count_ones(..);
        if distinct.len() != map.len() || map.len() != below {
            return fail(
                format!("product map for {facet} hits {} of {below} faces ({} elements)", distinct.len(), map.len()),
                witness(),
            );
        }
        // restrict the face order to the facet, listed in product order
        let position: HashMap<usize, usize> = map.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let ranks: Vec<usize> = map.iter().map(|&i| poset.rank(i)).collect();
        let mut covers = Vec::new();
        for (k, &i) in map.iter().enumerate() {
            for r in poset.refinements_of(i) {
                if let Some(&kr) = position.get(r) {
                    covers.push((kr, k));
                }
            }
        }
        let target = RankedPoset::new(ranks.clone(), &covers).map_err(Failure::from)?;
        let identity: Vec<usize> = (0..map.len()).collect();
        if ranks != fp.product.poset.ranks() || !is_isomorphism(&fp.product.poset, &target, &identity) {
            return fail(format!("product map for {facet} does not preserve the order"), witness());
        }
    }
    Ok(format!("{} facets factor as products", j.facet_tubings().len()))
}

fn thin_thick_claim(g: &Graph, w: &WeightVector) -> Check {
    let maximal = maximal_marked_tubings(g)?;
    let thin: Vec<&MarkedTubing> = maximal.iter().filter(|t| t.with_marking(Marking::Thin)).collect();
    let mut thin_points = Vec::new();
    for t in &thin {
        let thick = t.underlying().marked(Marking::Thick);
        let p = realize_vertex(t, w)?;
        let q = realize_vertex(&thick, w)?;
        let scaled = LatticePoint(p.coords().iter().map(|c| c * 3).collect());
        if q != scaled {
            return fail(
                format!("thick vertex of {} is not three times the thin one", t.underlying().marked(Marking::Thin)),
                Some(json!({ "thin": point_json(&p), "thick": point_json(&q) })),
            );
        }
        thin_points.push(p);
    }
    let k = TubingPoset::new(g)?;
    if thin_points.len() > BRUTE_MAX_POINTS {
        return Ok(format!("{} thick vertices are 3x the thin ones; hull too large for the lattice check", thin.len()));
    }
    let hull = brute_force_hull(&thin_points)?;
    if hull.vertices.len() != thin_points.len() {
        return fail("some all-thin point is not a vertex of their hull", None);
    }
    if find_isomorphism(&hull.lattice.poset(), k.ranked())?.is_none() {
        return fail("hull of the all-thin points is not the associahedron of the graph", None);
    }
    Ok(format!("{} thin vertices span the graph associahedron; thick copy scaled by 3", thin.len()))
}

fn parallel_claim(g: &Graph, w: &WeightVector) -> Check {
    let u = g.nodes();
    let thin = facet_hyperplane(&MarkedTubing::new(g, vec![MarkedTube::thin(u)])?, w)?;
    let thick = facet_hyperplane(&MarkedTubing::new(g, vec![MarkedTube::thick(u)])?, w)?;
    if thin.coeffs != thick.coeffs || thin.rhs >= thick.rhs {
        return fail(format!("{thin} and {thick} are not parallel with thin below thick"), None);
    }
    Ok(format!("{thin} parallel to {thick}"))
}

fn permutohedron_claim(j: &Multiplihedron) -> Check {
    let g = j.graph();
    let n = g.node_count();
    let p = permutohedron_lattice(n + 1)?;
    if lattice_isomorphic(j.lattice(), &p)?.is_none() {
        return fail(format!("face lattice differs from the permutohedron on {} letters", n + 1), None);
    }
    let h = Graph::complete(n + 1)?;
    let source = TubingPoset::new(&h)?;
    let mut map = Vec::with_capacity(source.len());
    for t in source.elements() {
        let image = collapse_node(&h, n, t)?;
        match j.poset().index_of(&image) {
            Some(i) => map.push(i),
            None => return fail(format!("collapse of {t:?} is not a marked tubing"), None),
        }
    }
    if !is_isomorphism(source.ranked(), &j.poset().ranked(), &map) {
        return fail("collapse map is not an order isomorphism", None);
    }
    Ok(format!("lattice matches the permutohedron (f-vector {:?}); collapse map is an isomorphism", p.f_vector()))
}

fn simplicity_claim(j: &Multiplihedron) -> Check {
    let g = j.graph();
    let n = g.node_count();
    let simple = j.lattice().is_simple();
    let complete = g.is_complete();
    let degrees = j.lattice().vertex_degrees();
    let max = degrees.iter().copied().max().unwrap_or(0);
    let details = format!("simple: {simple}, complete: {complete}, largest vertex degree {max} in dimension {n}");
    if simple == complete {
        return Ok(details);
    }
    let witness = if simple {
        Some(json!({ "note": "every vertex has degree n although the graph is not complete" }))
    } else {
        let v = degrees.iter().position(|&d| d > n).unwrap_or(0);
        Some(json!({ "vertex": tubing_json(j.tubing(j.vertex_tubings()[v])), "degree": degrees[v] }))
    };
    fail(details, witness)
}

fn edgeless_claim(j: &Multiplihedron) -> Check {
    let n = j.graph().node_count();
    let (a, b) = simplex_and_cut_cube(n)?;
    let sum = minkowski_sum(&a, &b)?;
    let hull = brute_force_hull(&sum)?;
    let expected = n + n * (1 << (n - 1));
    if j.points().len() != expected {
        return fail(format!("{} vertices, expected {expected}", j.points().len()), None);
    }
    if lattice_isomorphic(j.lattice(), &hull.lattice)?.is_none() {
        return fail("lattice differs from the Minkowski sum of simplex and cut cube", None);
    }
    Ok(format!("{expected} vertices; lattice matches the Minkowski sum hull"))
}

fn all_thin_associahedron(g: &Graph) -> Result<crate::hull::Hull> {
    let w = WeightVector::unit(g.node_count());
    let pts = maximal_marked_tubings(g)?
        .iter()
        .filter(|t| t.with_marking(Marking::Thin))
        .map(|t| realize_vertex(t, &w))
        .collect::<Result<Vec<_>>>()?;
    brute_force_hull(&pts)
}

fn quotient_claim(j: &Multiplihedron) -> Check {
    let g = j.graph();
    let n = g.node_count();
    let domain = quotient_hull(g, Variant::Domain)?;
    let range = quotient_hull(g, Variant::Range)?;
    let (fd, fr, f) = (domain.facets.len(), range.facets.len(), j.facets().len());
    let mut notes = vec![format!("{fd} + {fr} - {f} = {}", (fd + fr) as i64 - f as i64)];
    if fd + fr != f + 2 * n {
        return fail(format!("{} != 2n = {}", notes[0], 2 * n), None);
    }
    if g.is_complete() {
        if lattice_isomorphic(&domain.lattice, &range.lattice)?.is_none() {
            return fail("domain and range quotients differ for a complete graph", None);
        }
        notes.push("domain and range quotients equivalent".into());
    }
    if *g == Graph::path(2)? {
        if domain.lattice.f_vector() != [5, 5, 1] || range.lattice.f_vector() != [5, 5, 1] {
            return fail("quotients of the 2-path are not pentagons", None);
        }
        notes.push("both quotients are pentagons".into());
    }
    if *g == Graph::path(3)? {
        let k = all_thin_associahedron(&Graph::path(4)?)?;
        if lattice_isomorphic(&range.lattice, &k.lattice)?.is_none() {
            return fail("range quotient of the 3-path is not the associahedron of the 4-path", None);
        }
        notes.push("range quotient matches the 4-path associahedron".into());
    }
    Ok(notes.join("; "))
}

fn cube_lattice(n: usize) -> Result<crate::hull::FaceLattice> {
    let pts: Vec<LatticePoint> =
        (0u32..1 << n).map(|bits| LatticePoint((0..n).map(|j| BigInt::from((bits >> j) & 1)).collect())).collect();
    Ok(brute_force_hull(&pts)?.lattice)
}

fn cube_claim(g: &Graph) -> Check {
    let n = g.node_count();
    let hull = double_quotient_hull(g)?;
    if lattice_isomorphic(&hull.lattice, &cube_lattice(n)?)?.is_none() {
        return fail(format!("double quotient has f-vector {:?}, not a cube", hull.lattice.f_vector()), None);
    }
    Ok(format!("interpretation: thin coordinates set to 1 and thick to 3^n together; hull is the {n}-cube"))
}

/// Runs every claim on `g`. Claims outside their size range are marked
/// not applicable.
pub fn verify_all(g: &Graph, w: &WeightVector, seed: u64) -> Result<VerificationReport> {
    let n = g.node_count();
    if n > MAX_VERIFY_NODES {
        return Err(Error::ScaleBound { what: "verification", n, limit: MAX_VERIFY_NODES });
    }
    if w.len() != n {
        return Err(Error::DimensionMismatch(w.len(), n));
    }
    let mut claims = Vec::with_capacity(CLAIMS.len());
    let j = match Multiplihedron::new(g, w) {
        Ok(j) => j,
        Err(e) => {
            let f = Failure::from(e);
            claims.push(Claim::fail("face-correspondence", f.message.clone(), f.witness));
            for id in &CLAIMS[1..] {
                claims.push(Claim::fail(id, format!("polytope construction failed: {}", f.message), None));
            }
            return Ok(VerificationReport { graph: g.into(), weights: w.clone(), seed, claims });
        }
    };
    let small = n <= MAX_SMALL_NODES;
    let mut cache = PosetCache::default();

    claims.push(Claim::from_check("face-correspondence", main_steps(&j)));
    claims.push(if small {
        Claim::from_check("random-weights", random_weight_claim(g, seed))
    } else {
        Claim::skip("random-weights", format!("random trials run on graphs with at most {MAX_SMALL_NODES} nodes"))
    });
    claims.push(Claim::from_check("codimension", codimension_claim(&j)));
    claims.push(Claim::from_check("facet-counts", facet_count_claim(&j)));
    claims.push(match oracle_claim(&j) {
        Ok(Some(d)) => Claim::pass("oracle-equivalence", d),
        Ok(None) => Claim::skip("oracle-equivalence", "too many points for the brute-force oracle"),
        Err(f) => Claim::fail("oracle-equivalence", f.message, f.witness),
    });
    claims.push(Claim::from_check("facet-factorization", factorization_claim(&j, &mut cache)));
    claims.push(Claim::from_check("thin-thick-associahedron", thin_thick_claim(g, w)));
    claims.push(Claim::from_check("parallel-universal-facets", parallel_claim(g, w)));
    claims.push(if g.is_complete() && small {
        Claim::from_check("permutohedron", permutohedron_claim(&j))
    } else if g.is_complete() {
        Claim::skip("permutohedron", "permutohedron comparison runs up to 3 nodes")
    } else {
        Claim::skip("permutohedron", "graph is not complete")
    });
    claims.push(Claim::from_check("simplicity", simplicity_claim(&j)));
    claims.push(if g.edges().is_empty() && (2..=MAX_SMALL_NODES).contains(&n) {
        Claim::from_check("edgeless-minkowski", edgeless_claim(&j))
    } else {
        Claim::skip("edgeless-minkowski", "applies to edgeless graphs on 2 or 3 nodes")
    });
    let unit = w.is_unit();
    claims.push(if small && unit {
        Claim::from_check("quotients", quotient_claim(&j))
    } else {
        Claim::skip("quotients", "quotients use unit weights on at most 3 nodes")
    });
    claims.push(if small {
        Claim::from_check("quotient-cube", cube_claim(g))
    } else {
        Claim::skip("quotient-cube", "double quotient checked on at most 3 nodes")
    });
    debug_assert!(claims.iter().map(|c| c.id.as_str()).eq(CLAIMS.iter().copied()));
    Ok(VerificationReport { graph: g.into(), weights: w.clone(), seed, claims })
}
