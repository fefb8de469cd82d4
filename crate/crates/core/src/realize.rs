//! Integer realization of maximal marked tubings and the bounding hyperplanes.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSet};
use crate::tubing::{maximal_marked_tubings, MarkedTubing, Marking};

/// Positive integer weight per node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Weights("no weights given".into()));
        }
        if let Some(i) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Weights(format!("weight of node {i} must be at least 1")));
        }
        Ok(WeightVector(weights))
    }

    pub fn unit(n: usize) -> Self {
        WeightVector(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&w| w == 1)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    /// Total weight of a node set.
    pub fn of(&self, s: NodeSet) -> u64 {
        s.iter().map(|v| self.0[v]).sum()
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.0.len() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(self.0.len(), n))
        }
    }
}

impl TryFrom<Vec<u64>> for WeightVector {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        WeightVector::new(v)
    }
}

impl From<WeightVector> for Vec<u64> {
    fn from(w: WeightVector) -> Vec<u64> {
        w.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// Exact integer point. Serializes as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(pub Vec<BigInt>);

impl LatticePoint {
    pub fn from_i64s(coords: &[i64]) -> Self {
        LatticePoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(BigInt::to_string).collect()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(LatticePoint)
    }
}

/// Which equation produced a hyperplane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum HyperplaneKind {
    Thin,
    Thick,
    /// Spanned by points, not derived from a tube.
    Spanned,
}

/// `coeffs · x = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Hyperplane {
    #[serde(with = "decimal_vec")]
    pub coeffs: Vec<BigInt>,
    #[serde(with = "decimal")]
    pub rhs: BigInt,
    pub kind: HyperplaneKind,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<BigInt>, rhs: BigInt, kind: HyperplaneKind) -> Self {
        Hyperplane { coeffs, rhs, kind }
    }

    /// Hyperplane summing the coordinates in `support`.
    pub fn indicator(n: usize, support: NodeSet, rhs: BigInt, kind: HyperplaneKind) -> Self {
        let coeffs = (0..n).map(|i| if support.contains(i) { BigInt::one() } else { BigInt::zero() }).collect();
        Hyperplane { coeffs, rhs, kind }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// `coeffs · p`.
    pub fn evaluate(&self, p: &LatticePoint) -> BigInt {
        self.coeffs.iter().zip(p.coords()).map(|(a, x)| a * x).sum()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero()).collect()
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if a.is_one() {
                terms.push(format!("x{}", i + 1));
            } else {
                terms.push(format!("{a}*x{}", i + 1));
            }
        }
        if terms.is_empty() {
            terms.push("0".into());
        }
        write!(f, "{} = {}", terms.join(" + "), self.rhs)
    }
}

pub(crate) mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) mod decimal_vec {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(BigInt::to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?.iter().map(|c| c.parse().map_err(serde::de::Error::custom)).collect()
    }
}

/// `3^e` as an exact integer.
pub fn pow3(e: u64) -> BigInt {
    num_traits::pow(BigInt::from(3u8), e as usize)
}

fn node_count(t: &MarkedTubing) -> usize {
    t.universal().tube.len()
}

/// `3^(w(u)-1)` minus the same quantity summed over the tubes closely
/// nested in `u`, where `u` is the smallest tube containing `v`.
pub fn base_value(t: &MarkedTubing, v: usize, w: &WeightVector) -> Result<BigInt> {
    let n = node_count(t);
    w.check(n)?;
    if v >= n {
        return Err(Error::NodeOutOfRange { node: v, n });
    }
    let outer = t.smallest_containing(v).tube;
    let mut value = pow3(w.of(outer) - 1);
    for s in t.closely_nested_unchecked(outer) {
        value -= pow3(w.of(s.tube) - 1);
    }
    Ok(value)
}

fn maximal_check(u: &MarkedTubing) -> Result<usize> {
    let n = node_count(u);
    if u.is_maximal(n) {
        Ok(n)
    } else {
        Err(Error::NotMaximal { expected: n })
    }
}

/// Coordinates of the vertex labelled by a maximal tubing: `f` where the
/// smallest containing tube is thin, `3f` where it is thick.
pub fn realize_vertex(u: &MarkedTubing, w: &WeightVector) -> Result<LatticePoint> {
    let n = maximal_check(u)?;
    w.check(n)?;
    (0..n)
        .map(|v| {
            let f = base_value(u, v, w)?;
            Ok(match u.smallest_containing(v).marking {
                Marking::Thick => f * 3,
                _ => f,
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(LatticePoint)
}

/// Every maximal tubing with its realized point, in canonical tubing order.
pub fn realize_all(g: &Graph, w: &WeightVector) -> Result<Vec<(MarkedTubing, LatticePoint)>> {
    w.check(g.node_count())?;
    maximal_marked_tubings(g)?
        .into_iter()
        .map(|u| {
            let p = realize_vertex(&u, w)?;
            Ok((u, p))
        })
        .collect()
}

/// One equation per non-broken tube `u`, summing the coordinates whose
/// smallest containing tube is `u`.
pub fn hyperplanes_for(t: &MarkedTubing, w: &WeightVector) -> Result<Vec<Hyperplane>> {
    let n = node_count(t);
    w.check(n)?;
    let mut out = Vec::new();
    for tube in t.tubes() {
        let kind = match tube.marking {
            Marking::Broken => continue,
            Marking::Thin => HyperplaneKind::Thin,
            Marking::Thick => HyperplaneKind::Thick,
        };
        let support =
            (0..n).filter(|&v| t.smallest_containing(v).tube == tube.tube).fold(NodeSet::EMPTY, |mut s, v| {
                s.insert(v);
                s
            });
        // thick equations carry one extra factor of three
        let shift = u64::from(kind == HyperplaneKind::Thin);
        let mut rhs = pow3(w.of(tube.tube) - shift);
        for s in t.closely_nested_unchecked(tube.tube) {
            rhs -= pow3(w.of(s.tube) - shift);
        }
        out.push(Hyperplane::indicator(n, support, rhs, kind));
    }
    Ok(out)
}

/// Vertex of the quotient collapsing the thin part: thin coordinates become 1.
pub fn realize_domain_quotient(u: &MarkedTubing) -> Result<LatticePoint> {
    let n = maximal_check(u)?;
    let w = WeightVector::unit(n);
    (0..n)
        .map(|v| {
            Ok(match u.smallest_containing(v).marking {
                Marking::Thick => base_value(u, v, &w)? * 3,
                _ => BigInt::one(),
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(LatticePoint)
}

/// Vertex of the quotient collapsing the thick part: thick coordinates become `3^n`.
pub fn realize_range_quotient(u: &MarkedTubing) -> Result<LatticePoint> {
    let n = maximal_check(u)?;
    let w = WeightVector::unit(n);
    (0..n)
        .map(|v| {
            Ok(match u.smallest_containing(v).marking {
                Marking::Thick => pow3(n as u64),
                _ => base_value(u, v, &w)?,
            })
        })
        .collect::<Result<Vec<_>>>()
        .map(LatticePoint)
}

/// Both collapses at once: thin coordinates 1, thick coordinates `3^n`.
pub fn realize_double_quotient(u: &MarkedTubing) -> Result<LatticePoint> {
    let n = maximal_check(u)?;
    Ok(LatticePoint(
        (0..n)
            .map(|v| match u.smallest_containing(v).marking {
                Marking::Thick => pow3(n as u64),
                _ => BigInt::one(),
            })
            .collect(),
    ))
}
