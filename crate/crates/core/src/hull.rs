//! Exact polytope kernel: dimensions, facet checks, vertex enumeration from
//! halfspaces, brute-force hulls, and face lattices.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::{find_isomorphism, RankedPoset};
use crate::realize::{Hyperplane, HyperplaneKind, LatticePoint};

/// Dense matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(data.len(), rows * cols));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn from_integer_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(r.len(), cols));
            }
            data.extend(r.iter().map(|x| BigRational::from_integer(x.clone())));
        }
        Ok(RationalMatrix { rows: rows.len(), cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    // Row echelon form in place; returns the pivot columns.
    fn eliminate(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else { continue };
            for c in 0..self.cols {
                self.data.swap(p * self.cols + c, row * self.cols + c);
            }
            let pivot = self.get(row, col).clone();
            for r in row + 1..self.rows {
                let factor = self.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let delta = &factor * self.get(row, c);
                    self.data[r * self.cols + c] -= delta;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate().len()
    }

    /// Unique solution of a square nonsingular system, or `None`.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        if self.rows != self.cols || b.len() != self.rows {
            return None;
        }
        let n = self.rows;
        let mut aug = Vec::with_capacity(n * (n + 1));
        for (row, rhs) in self.data.chunks(n).zip(b) {
            aug.extend(row.iter().cloned());
            aug.push(rhs.clone());
        }
        let mut m = RationalMatrix { rows: n, cols: n + 1, data: aug };
        let pivots = m.eliminate();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut x = vec![BigRational::zero(); n];
        for r in (0..n).rev() {
            let mut acc = m.get(r, n).clone();
            for (c, xc) in x.iter().enumerate().skip(r + 1) {
                acc -= m.get(r, c) * xc;
            }
            x[r] = acc / m.get(r, r);
        }
        Some(x)
    }
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else { return BigInt::zero() };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank and pivot columns of an integer matrix, fraction-free.
pub fn integer_pivots(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let Some(cols) = rows.first().map(Vec::len) else { return Vec::new() };
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut row = 0;
    let mut prev = BigInt::one();
    for col in 0..cols {
        if row == a.len() {
            break;
        }
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(row, p);
        for i in row + 1..a.len() {
            for j in col + 1..cols {
                let v = (&a[i][j] * &a[row][col] - &a[i][col] * &a[row][j]) / &prev;
                a[i][j] = v;
            }
            a[i][col] = BigInt::zero();
        }
        prev = a[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    integer_pivots(rows).len()
}

/// Vector orthogonal to `k - 1` vectors in dimension `k`, by cofactor expansion.
/// Zero iff the vectors are dependent.
pub fn cross_product(vectors: &[Vec<BigInt>], dim: usize) -> Vec<BigInt> {
    (0..dim)
        .map(|skip| {
            let minor: Vec<Vec<BigInt>> = vectors
                .iter()
                .map(|v| v.iter().enumerate().filter(|&(c, _)| c != skip).map(|(_, x)| x.clone()).collect())
                .collect();
            let d = determinant(&minor);
            if skip % 2 == 0 {
                d
            } else {
                -d
            }
        })
        .collect()
}

fn differences(points: &[LatticePoint]) -> Vec<Vec<BigInt>> {
    let base = points[0].coords();
    points[1..].iter().map(|p| p.coords().iter().zip(base).map(|(a, b)| a - b).collect()).collect()
}

fn check_dims(points: &[LatticePoint]) -> Result<usize> {
    let first = points.first().ok_or(Error::EmptyPoints)?;
    let dim = first.dim();
    for p in points {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch(p.dim(), dim));
        }
    }
    Ok(dim)
}

/// Dimension of the affine hull.
pub fn affine_dimension(points: &[LatticePoint]) -> Result<usize> {
    check_dims(points)?;
    Ok(integer_rank(&differences(points)))
}

fn affine_dimension_of(points: &[LatticePoint], subset: impl Iterator<Item = usize>) -> usize {
    let chosen: Vec<LatticePoint> = subset.map(|i| points[i].clone()).collect();
    if chosen.is_empty() {
        return 0;
    }
    integer_rank(&differences(&chosen))
}

/// Which closed halfspace of a hyperplane holds the polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `coeffs · x >= rhs`
    Above,
    /// `coeffs · x <= rhs`
    Below,
}

impl Side {
    fn holds(self, value: &BigInt, rhs: &BigInt) -> bool {
        match self {
            Side::Above => value >= rhs,
            Side::Below => value <= rhs,
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Above => Side::Below,
            Side::Below => Side::Above,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Above => ">=",
            Side::Below => "<=",
        })
    }
}

/// Result of testing a hyperplane against a point set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCheck {
    pub is_valid: bool,
    pub incident: Vec<usize>,
    /// First point on the wrong side, if any.
    pub violator: Option<usize>,
}

/// Every point must lie weakly on `side` and at least one on the hyperplane.
pub fn verify_supporting(points: &[LatticePoint], h: &Hyperplane, side: Side) -> SupportCheck {
    let mut incident = Vec::new();
    let mut violator = None;
    for (i, p) in points.iter().enumerate() {
        let v = h.evaluate(p);
        if v == h.rhs {
            incident.push(i);
        } else if !side.holds(&v, &h.rhs) && violator.is_none() {
            violator = Some(i);
        }
    }
    SupportCheck { is_valid: violator.is_none() && !incident.is_empty(), incident, violator }
}

/// A verified facet: its hyperplane, the side holding the polytope, and the
/// indices of the points on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub hyperplane: Hyperplane,
    pub side: Side,
    pub incident: Vec<usize>,
}

impl Facet {
    /// Primitive integer normal, oriented so the polytope lies above it, and
    /// the matching right-hand side.
    pub fn inward_key(&self) -> (Vec<BigInt>, BigInt) {
        let sign = if self.side == Side::Above { BigInt::one() } else { -BigInt::one() };
        let g = self.hyperplane.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let g = if g.is_zero() { BigInt::one() } else { g };
        let coeffs = self.hyperplane.coeffs.iter().map(|c| c * &sign / &g).collect();
        (coeffs, &self.hyperplane.rhs * &sign / &g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureReason {
    /// A point lies strictly on the wrong side.
    Violated {
        witness: usize,
    },
    NoIncidentPoint,
    /// The incident points span too little.
    LowDimensional {
        dim: usize,
        expected: usize,
    },
    WrongDimension {
        got: usize,
        expected: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateFailure {
    pub candidate: usize,
    pub reason: FailureReason,
}

impl fmt::Display for CandidateFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            FailureReason::Violated { witness } => {
                write!(f, "candidate {}: point {witness} on the wrong side", self.candidate)
            }
            FailureReason::NoIncidentPoint => write!(f, "candidate {}: touches no point", self.candidate),
            FailureReason::LowDimensional { dim, expected } => {
                write!(f, "candidate {}: incident points span dimension {dim}, expected {expected}", self.candidate)
            }
            FailureReason::WrongDimension { got, expected } => {
                write!(f, "candidate {}: {got} coefficients, expected {expected}", self.candidate)
            }
        }
    }
}

/// Checks each candidate and returns them as facets, or every failure.
pub fn facets_from_candidates(points: &[LatticePoint], candidates: &[(Hyperplane, Side)]) -> Result<Vec<Facet>> {
    let ambient = check_dims(points)?;
    let dim = affine_dimension(points)?;
    let mut facets = Vec::new();
    let mut failures = Vec::new();
    for (i, (h, side)) in candidates.iter().enumerate() {
        if h.dim() != ambient {
            failures.push(CandidateFailure {
                candidate: i,
                reason: FailureReason::WrongDimension { got: h.dim(), expected: ambient },
            });
            continue;
        }
        let check = verify_supporting(points, h, *side);
        if let Some(witness) = check.violator {
            failures.push(CandidateFailure { candidate: i, reason: FailureReason::Violated { witness } });
            continue;
        }
        if check.incident.is_empty() {
            failures.push(CandidateFailure { candidate: i, reason: FailureReason::NoIncidentPoint });
            continue;
        }
        let got = affine_dimension_of(points, check.incident.iter().copied());
        if dim == 0 || got != dim - 1 {
            failures.push(CandidateFailure {
                candidate: i,
                reason: FailureReason::LowDimensional { dim: got, expected: dim.saturating_sub(1) },
            });
            continue;
        }
        facets.push(Facet { hyperplane: h.clone(), side: *side, incident: check.incident });
    }
    if failures.is_empty() {
        Ok(facets)
    } else {
        Err(Error::RejectedCandidates(failures))
    }
}

/// A point with exact rational coordinates.
pub type RationalPoint = Vec<BigRational>;

pub fn to_rational(p: &LatticePoint) -> RationalPoint {
    p.coords().iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

/// The integer point equal to `p`, if every coordinate is integral.
pub fn to_lattice(p: &RationalPoint) -> Option<LatticePoint> {
    p.iter()
        .map(|c| if c.is_integer() { Some(c.to_integer()) } else { None })
        .collect::<Option<Vec<_>>>()
        .map(LatticePoint)
}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Vertices of the polytope cut out by the halfspaces, by solving every
/// `n`-subset of boundary equations. Fails when the region is empty or
/// unbounded.
pub fn h_polytope_vertices(halfspaces: &[(Hyperplane, Side)], n: usize) -> Result<Vec<RationalPoint>> {
    // normalise to rows · x >= rhs
    let mut rows = Vec::with_capacity(halfspaces.len());
    let mut rhs = Vec::with_capacity(halfspaces.len());
    for (h, side) in halfspaces {
        if h.dim() != n {
            return Err(Error::DimensionMismatch(h.dim(), n));
        }
        match side {
            Side::Above => {
                rows.push(h.coeffs.clone());
                rhs.push(h.rhs.clone());
            }
            Side::Below => {
                rows.push(h.coeffs.iter().map(|c| -c).collect::<Vec<_>>());
                rhs.push(-h.rhs.clone());
            }
        }
    }
    if n == 0 || integer_rank(&rows) < n {
        return Err(Error::Unbounded);
    }

    let mut found: BTreeSet<RationalPoint> = BTreeSet::new();
    combinations(rows.len(), n, |subset| {
        let a: Vec<Vec<BigInt>> = subset.iter().map(|&i| rows[i].clone()).collect();
        let mut det = determinant(&a);
        if det.is_zero() {
            return;
        }
        // Cramer: x_c = det(A with column c replaced by b) / det(A)
        let mut nums: Vec<BigInt> = (0..n)
            .map(|c| {
                let replaced: Vec<Vec<BigInt>> = subset
                    .iter()
                    .enumerate()
                    .map(|(r, &i)| {
                        let mut row = a[r].clone();
                        row[c] = rhs[i].clone();
                        row
                    })
                    .collect();
                determinant(&replaced)
            })
            .collect();
        if det.is_negative() {
            det = -det;
            nums.iter_mut().for_each(|x| *x = -&*x);
        }
        let feasible = rows.iter().zip(&rhs).all(|(row, b)| {
            let lhs: BigInt = row.iter().zip(&nums).map(|(a, x)| a * x).sum();
            lhs >= b * &det
        });
        if feasible {
            found.insert(nums.into_iter().map(|x| BigRational::new(x, det.clone())).collect());
        }
    });
    if found.is_empty() {
        return Err(Error::Infeasible);
    }

    // A nonzero recession direction would be an extreme ray lying on n - 1
    // independent boundary equations.
    let mut unbounded = false;
    combinations(rows.len(), n - 1, |subset| {
        if unbounded {
            return;
        }
        let vs: Vec<Vec<BigInt>> = subset.iter().map(|&i| rows[i].clone()).collect();
        let d = cross_product(&vs, n);
        if d.iter().all(Zero::is_zero) {
            return;
        }
        let dots: Vec<BigInt> = rows.iter().map(|r| r.iter().zip(&d).map(|(a, x)| a * x).sum()).collect();
        if dots.iter().all(|x| !x.is_negative()) || dots.iter().all(|x| !x.is_positive()) {
            unbounded = true;
        }
    });
    if unbounded {
        return Err(Error::Unbounded);
    }
    Ok(found.into_iter().collect())
}

/// Point and dimension limits for [`brute_force_facets`].
pub const BRUTE_MAX_POINTS: usize = 40;
pub const BRUTE_MAX_DIM: usize = 4;

/// Facets found by testing every hyperplane spanned by points. Independent
/// of any tubing data; used as an oracle.
pub fn brute_force_facets(points: &[LatticePoint]) -> Result<Vec<Facet>> {
    brute_force_facets_with_limits(points, BRUTE_MAX_POINTS, BRUTE_MAX_DIM)
}

pub fn brute_force_facets_with_limits(
    points: &[LatticePoint],
    max_points: usize,
    max_dim: usize,
) -> Result<Vec<Facet>> {
    let ambient = check_dims(points)?;
    if points.len() > max_points {
        return Err(Error::ScaleBound {
            what: "brute-force facet search (points)",
            n: points.len(),
            limit: max_points,
        });
    }
    let diffs = differences(points);
    let pivots = integer_pivots(&diffs);
    let d = pivots.len();
    if d > max_dim {
        return Err(Error::ScaleBound { what: "brute-force facet search (dimension)", n: d, limit: max_dim });
    }
    if d == 0 {
        return Ok(Vec::new());
    }
    // project onto coordinates that stay independent on the affine hull
    let proj: Vec<Vec<BigInt>> =
        points.iter().map(|p| pivots.iter().map(|&c| p.coords()[c].clone()).collect()).collect();

    let mut seen: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();
    let mut facets = Vec::new();
    combinations(points.len(), d, |subset| {
        let base = &proj[subset[0]];
        let vs: Vec<Vec<BigInt>> =
            subset[1..].iter().map(|&i| proj[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
        let mut normal = cross_product(&vs, d);
        let g = normal.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return;
        }
        let flip = normal.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
        for c in normal.iter_mut() {
            *c = &*c / &g;
            if flip {
                *c = -&*c;
            }
        }
        let rhs: BigInt = normal.iter().zip(base).map(|(a, x)| a * x).sum();
        if !seen.insert((normal.clone(), rhs.clone())) {
            return;
        }
        let mut above = false;
        let mut below = false;
        let mut incident = Vec::new();
        for (i, p) in proj.iter().enumerate() {
            let v: BigInt = normal.iter().zip(p).map(|(a, x)| a * x).sum();
            match v.cmp(&rhs) {
                std::cmp::Ordering::Equal => incident.push(i),
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Less => below = true,
            }
        }
        if above && below {
            return;
        }
        let side = if below { Side::Below } else { Side::Above };
        let mut coeffs = vec![BigInt::zero(); ambient];
        for (k, &c) in pivots.iter().enumerate() {
            coeffs[c] = normal[k].clone();
        }
        facets.push(Facet { hyperplane: Hyperplane::new(coeffs, rhs, HyperplaneKind::Spanned), side, incident });
    });
    facets.sort_by(|a, b| a.incident.cmp(&b.incident).then_with(|| a.hyperplane.cmp(&b.hyperplane)));
    Ok(facets)
}

/// Indices of the extreme points (first occurrence of repeated points).
pub fn extreme_points(points: &[LatticePoint]) -> Result<Vec<usize>> {
    check_dims(points)?;
    let mut first: HashMap<&LatticePoint, usize> = HashMap::new();
    let mut unique = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !first.contains_key(p) {
            first.insert(p, i);
            unique.push(i);
        }
    }
    let pts: Vec<LatticePoint> = unique.iter().map(|&i| points[i].clone()).collect();
    if affine_dimension(&pts)? == 0 {
        return Ok(vec![unique[0]]);
    }
    let facets = brute_force_facets(&pts)?;
    let mut out = Vec::new();
    for (k, &original) in unique.iter().enumerate() {
        let mut common: Option<BTreeSet<usize>> = None;
        for f in facets.iter().filter(|f| f.incident.contains(&k)) {
            let s: BTreeSet<usize> = f.incident.iter().copied().collect();
            common = Some(match common {
                None => s,
                Some(c) => c.intersection(&s).copied().collect(),
            });
        }
        if common.is_some_and(|c| c.len() == 1) {
            out.push(original);
        }
    }
    Ok(out)
}

/// A face: the indices of its vertices and its dimension.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Face {
    pub rank: usize,
    pub vertices: Vec<usize>,
}

/// Nonempty faces of a polytope ordered by inclusion. Faces are sorted by
/// rank, then vertex list; the last face is the polytope itself.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LatticeRecord", into = "LatticeRecord")]
pub struct FaceLattice {
    ambient_dim: usize,
    faces: Vec<Face>,
    covers: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct FaceRecord {
    id: usize,
    rank: usize,
    vertices: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct LatticeRecord {
    ambient_dim: usize,
    faces: Vec<FaceRecord>,
    covers: Vec<[usize; 2]>,
}

impl From<FaceLattice> for LatticeRecord {
    fn from(l: FaceLattice) -> Self {
        LatticeRecord {
            ambient_dim: l.ambient_dim,
            faces: l
                .faces
                .into_iter()
                .enumerate()
                .map(|(id, f)| FaceRecord { id, rank: f.rank, vertices: f.vertices })
                .collect(),
            covers: l.covers.into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<LatticeRecord> for FaceLattice {
    type Error = Error;

    fn try_from(r: LatticeRecord) -> Result<Self> {
        let mut faces = Vec::with_capacity(r.faces.len());
        for (i, f) in r.faces.into_iter().enumerate() {
            if f.id != i {
                return Err(Error::Parse(format!("face ids must be 0..n in order, found {} at {i}", f.id)));
            }
            faces.push(Face { rank: f.rank, vertices: f.vertices });
        }
        let covers: Vec<(usize, usize)> = r.covers.into_iter().map(|[a, b]| (a, b)).collect();
        let ranks: Vec<usize> = faces.iter().map(|f| f.rank).collect();
        RankedPoset::new(ranks, &covers).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(FaceLattice { ambient_dim: r.ambient_dim, faces, covers })
    }
}

impl FaceLattice {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the polytope.
    pub fn dim(&self) -> usize {
        self.faces.last().map_or(0, |f| f.rank)
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    /// `(lower, upper)` index pairs.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn top(&self) -> usize {
        self.faces.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.faces.last().map_or(0, |f| f.vertices.len())
    }

    /// Face counts by dimension, the polytope itself included.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim() + 1];
        for face in &self.faces {
            f[face.rank] += 1;
        }
        f
    }

    pub fn facets(&self) -> Vec<usize> {
        let d = self.dim();
        if d == 0 {
            return Vec::new();
        }
        (0..self.faces.len()).filter(|&i| self.faces[i].rank == d - 1).collect()
    }

    pub fn index_by_vertices(&self) -> HashMap<Vec<usize>, usize> {
        self.faces.iter().enumerate().map(|(i, f)| (f.vertices.clone(), i)).collect()
    }

    pub fn poset(&self) -> RankedPoset {
        let ranks = self.faces.iter().map(|f| f.rank).collect();
        RankedPoset::new(ranks, &self.covers).expect("covers join adjacent ranks")
    }

    /// Number of edges at each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count()];
        for f in self.faces.iter().filter(|f| f.rank == 1) {
            for &v in &f.vertices {
                deg[v] += 1;
            }
        }
        deg
    }

    /// Every vertex lies on exactly `dim` facets.
    pub fn is_simple(&self) -> bool {
        let d = self.dim();
        let mut count = vec![0; self.vertex_count()];
        for &i in &self.facets() {
            for &v in &self.faces[i].vertices {
                count[v] += 1;
            }
        }
        count.iter().all(|&c| c == d)
    }
}

/// Builds the face lattice from the vertex sets of the facets: faces are
/// all nonempty intersections of facets plus the whole polytope.
pub fn face_lattice(vertices: &[LatticePoint], facets: &[Vec<usize>]) -> Result<FaceLattice> {
    let ambient_dim = check_dims(vertices)?;
    let nv = vertices.len();
    let dim = affine_dimension(vertices)?;
    let to_bits = |s: &[usize]| -> Result<FixedBitSet> {
        let mut b = FixedBitSet::with_capacity(nv);
        for &v in s {
            if v >= nv {
                return Err(Error::InconsistentIncidence(format!("vertex index {v} out of range")));
            }
            b.insert(v);
        }
        Ok(b)
    };
    let facet_bits: Vec<FixedBitSet> = facets.iter().map(|f| to_bits(f)).collect::<Result<_>>()?;

    let mut all = FixedBitSet::with_capacity(nv);
    all.insert_range(..);
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut queue: VecDeque<FixedBitSet> = VecDeque::new();
    for f in &facet_bits {
        if f.count_ones(..) > 0 && seen.insert(f.clone()) {
            queue.push_back(f.clone());
        }
    }
    while let Some(face) = queue.pop_front() {
        for f in &facet_bits {
            let mut meet = face.clone();
            meet.intersect_with(f);
            if meet.count_ones(..) > 0 && !seen.contains(&meet) {
                seen.insert(meet.clone());
                queue.push_back(meet);
            }
        }
    }
    seen.insert(all);

    let mut faces: Vec<(Face, FixedBitSet)> = seen
        .into_iter()
        .map(|b| {
            let vs: Vec<usize> = b.ones().collect();
            let rank = affine_dimension_of(vertices, vs.iter().copied());
            (Face { rank, vertices: vs }, b)
        })
        .collect();
    faces.sort_by(|a, b| a.0.cmp(&b.0));

    let top = faces.len() - 1;
    if faces[top].0.rank != dim || faces[top].0.vertices.len() != nv {
        return Err(Error::InconsistentIncidence("top face is not the whole point set".into()));
    }
    for (i, (f, _)) in faces.iter().enumerate() {
        if i != top && dim > 0 && f.rank >= dim {
            return Err(Error::InconsistentIncidence(format!("proper face {:?} spans the polytope", f.vertices)));
        }
    }
    for (f, b) in facet_bits.iter().zip(facets) {
        let rank = affine_dimension_of(vertices, f.ones());
        if rank + 1 != dim {
            return Err(Error::InconsistentIncidence(format!("facet {b:?} has dimension {rank}")));
        }
    }
    if dim > 0 {
        let singles = faces.iter().filter(|(f, _)| f.vertices.len() == 1).count();
        if singles != nv {
            return Err(Error::InconsistentIncidence(format!("{singles} of {nv} points are vertex faces")));
        }
    }

    let mut covers = Vec::new();
    for (i, (fi, bi)) in faces.iter().enumerate() {
        for (j, (fj, bj)) in faces.iter().enumerate() {
            if i == j || !bi.is_subset(bj) {
                continue;
            }
            if fi.rank >= fj.rank {
                return Err(Error::InconsistentIncidence(format!(
                    "face {:?} inside {:?} without losing dimension",
                    fi.vertices, fj.vertices
                )));
            }
            if fj.rank == fi.rank + 1 {
                covers.push((i, j));
            }
        }
    }
    let lattice = FaceLattice { ambient_dim, faces: faces.into_iter().map(|(f, _)| f).collect(), covers };
    check_graded(&lattice)?;
    Ok(lattice)
}

// Every non-vertex face covers something, every proper face is covered, and
// every interval of length two holds exactly two middle elements.
fn check_graded(l: &FaceLattice) -> Result<()> {
    let poset = l.poset();
    let top = l.top();
    for i in 0..l.len() {
        if l.faces[i].rank > 0 && poset.covers_down(i).is_empty() {
            return Err(Error::InconsistentIncidence(format!("face {i} covers nothing")));
        }
        if i != top && poset.covers_up(i).is_empty() {
            return Err(Error::InconsistentIncidence(format!("face {i} is not covered")));
        }
        if l.faces[i].rank == 1 && l.faces[i].vertices.len() != 2 {
            return Err(Error::InconsistentIncidence(format!("edge {i} does not have two vertices")));
        }
        let mut middles: HashMap<usize, usize> = HashMap::new();
        for &m in poset.covers_up(i) {
            for &h in poset.covers_up(m) {
                *middles.entry(h).or_default() += 1;
            }
        }
        if let Some((h, c)) = middles.into_iter().find(|&(_, c)| c != 2) {
            return Err(Error::InconsistentIncidence(format!(
                "interval from face {i} to face {h} has {c} middle faces"
            )));
        }
    }
    Ok(())
}

/// Order isomorphism between two face lattices, if one exists.
pub fn lattice_isomorphic(a: &FaceLattice, b: &FaceLattice) -> Result<Option<Vec<usize>>> {
    if a.f_vector() != b.f_vector() {
        return Ok(None);
    }
    find_isomorphism(&a.poset(), &b.poset())
}

/// All pairwise sums, deduplicated and sorted.
pub fn minkowski_sum(a: &[LatticePoint], b: &[LatticePoint]) -> Result<Vec<LatticePoint>> {
    let da = check_dims(a)?;
    let db = check_dims(b)?;
    if da != db {
        return Err(Error::DimensionMismatch(da, db));
    }
    let mut out = BTreeSet::new();
    for p in a {
        for q in b {
            out.insert(LatticePoint(p.coords().iter().zip(q.coords()).map(|(x, y)| x + y).collect()));
        }
    }
    Ok(out.into_iter().collect())
}

/// Convex hull computed without any tubing data.
#[derive(Clone, Debug)]
pub struct Hull {
    /// Extreme points in sorted order.
    pub vertices: Vec<LatticePoint>,
    /// Facets with incidence indexing into `vertices`.
    pub facets: Vec<Facet>,
    pub lattice: FaceLattice,
}

pub fn brute_force_hull(points: &[LatticePoint]) -> Result<Hull> {
    let mut vertices: Vec<LatticePoint> = extreme_points(points)?.into_iter().map(|i| points[i].clone()).collect();
    vertices.sort();
    let facets = brute_force_facets(&vertices)?;
    let sets: Vec<Vec<usize>> = facets.iter().map(|f| f.incident.clone()).collect();
    let lattice = face_lattice(&vertices, &sets)?;
    Ok(Hull { vertices, facets, lattice })
}
