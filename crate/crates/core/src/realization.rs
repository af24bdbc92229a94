//! Exact vertex coordinates and facet inequalities.
//!
//! Every binary painted tree with `n` leaves is sent to a point of `Q^{n-1}`
//! with one coordinate per trivalent node, read left to right. For node `i`
//! let `L_i` and `R_i` be the total leaf weights of its left and right
//! subtrees. Painted nodes contribute `L_i R_i`; unpainted nodes contribute
//! `q L_i R_i`. With unit weights and `q = 1` these are Loday's coordinates
//! for the associahedron, with `q` in `(0, 1)` they realize the
//! multiplihedron, and at `q = 0` they realize the composihedron.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::compositions;
use crate::complex::FacetTree;
use crate::error::{Error, Result};
use crate::trees::{enumerate_binary_painted, Node, NodeKind, PaintedTree, TreeShape};

pub type Rational = BigRational;

pub(crate) fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// A point with exact rational coordinates. Dimension zero is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "crate::export::rational_vec")]
    pub coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Point {
        Point { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Point {
        Point {
            coords: coords.iter().map(|&c| int(c)).collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "=")]
    Equal,
}

/// `coeffs . x (sense) rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hyperplane {
    #[serde(with = "crate::export::rational_vec")]
    pub coeffs: Vec<Rational>,
    #[serde(with = "crate::export::rational")]
    pub rhs: Rational,
    pub sense: Sense,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<Rational>, sense: Sense, rhs: Rational) -> Result<Hyperplane> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroNormal);
        }
        Ok(Hyperplane { coeffs, rhs, sense })
    }

    pub fn dimension(&self) -> usize {
        self.coeffs.len()
    }

    pub fn value(&self, p: &Point) -> Rational {
        self.coeffs.iter().zip(&p.coords).map(|(a, x)| a * x).sum()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.value(p) == self.rhs
    }

    pub fn is_satisfied(&self, p: &Point) -> bool {
        let v = self.value(p);
        match self.sense {
            Sense::AtLeast => v >= self.rhs,
            Sense::AtMost => v <= self.rhs,
            Sense::Equal => v == self.rhs,
        }
    }

    /// The constraint as one or two rows `a . x <= b`.
    pub fn as_upper_bounds(&self) -> Vec<(Vec<Rational>, Rational)> {
        let neg = || (self.coeffs.iter().map(|c| -c).collect(), -&self.rhs);
        match self.sense {
            Sense::AtMost => vec![(self.coeffs.clone(), self.rhs.clone())],
            Sense::AtLeast => vec![neg()],
            Sense::Equal => vec![(self.coeffs.clone(), self.rhs.clone()), neg()],
        }
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "x{}", i + 1)?;
        }
        let op = match self.sense {
            Sense::AtLeast => ">=",
            Sense::AtMost => "<=",
            Sense::Equal => "=",
        };
        write!(f, " {op} {}", self.rhs)
    }
}

/// Positive integer leaf weights `w_0, ..., w_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightVector(Vec<u64>);

impl WeightVector {
    pub fn new(weights: Vec<u64>) -> Result<WeightVector> {
        if weights.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(WeightVector(weights))
    }

    pub fn units(n: usize) -> WeightVector {
        WeightVector(vec![1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::WeightCount {
                expected: n,
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

/// A facet inequality, tagged with the facet tree it bounds when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Facet {
    pub tree: Option<FacetTree>,
    pub inequality: Hyperplane,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HRep {
    pub dimension: usize,
    pub facets: Vec<Facet>,
}

impl HRep {
    /// An untagged H-representation; every inequality must have `dimension`
    /// coefficients.
    pub fn from_inequalities(dimension: usize, inequalities: Vec<Hyperplane>) -> Result<HRep> {
        for h in &inequalities {
            if h.dimension() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: h.dimension(),
                });
            }
        }
        Ok(HRep {
            dimension,
            facets: inequalities
                .into_iter()
                .map(|inequality| Facet {
                    tree: None,
                    inequality,
                })
                .collect(),
        })
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.facets.iter().all(|f| f.inequality.is_satisfied(p))
    }
}

/// A vertex, tagged with the canonical tree of its domain class when known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub tree: Option<PaintedTree>,
    pub point: Point,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VRep {
    pub dimension: usize,
    pub vertices: Vec<Vertex>,
}

impl VRep {
    pub fn from_points(dimension: usize, points: Vec<Point>) -> Result<VRep> {
        for p in &points {
            if p.dimension() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    got: p.dimension(),
                });
            }
        }
        Ok(VRep {
            dimension,
            vertices: points
                .into_iter()
                .map(|point| Vertex { tree: None, point })
                .collect(),
        })
    }

    pub fn points(&self) -> impl Iterator<Item = &Point> {
        self.vertices.iter().map(|v| &v.point)
    }

    pub fn point_set(&self) -> HashSet<Point> {
        self.points().cloned().collect()
    }
}

/// Loday's point for a binary shape: coordinate `i` is `l_i * r_i`.
pub fn loday_point(shape: &TreeShape) -> Result<Point> {
    let counts = shape.subtree_leaf_counts()?;
    Ok(Point {
        coords: counts
            .into_iter()
            .map(|(l, r)| int((l * r) as i64))
            .collect(),
    })
}

/// Walk a binary painted tree in order, returning `(painted, L, R)` for each
/// trivalent node, where `L` and `R` are weight sums.
fn trivalent_nodes(t: &PaintedTree, w: &[u64]) -> Vec<(bool, u64, u64)> {
    fn walk(node: &Node, w: &[u64], next_leaf: &mut usize, out: &mut Vec<(bool, u64, u64)>) -> u64 {
        match node.kind() {
            NodeKind::Leaf => {
                let weight = w[*next_leaf];
                *next_leaf += 1;
                weight
            }
            NodeKind::PaintChange => walk(&node.children[0], w, next_leaf, out),
            NodeKind::PaintedBranch | NodeKind::UnpaintedBranch => {
                let l = walk(&node.children[0], w, next_leaf, out);
                let slot = out.len();
                out.push((node.painted, l, 0));
                let r = walk(&node.children[1], w, next_leaf, out);
                out[slot].2 = r;
                l + r
            }
        }
    }
    let mut out = Vec::new();
    walk(&t.root, w, &mut 0, &mut out);
    out
}

/// The weighted point of a binary painted tree at parameter `q` in `[0, 1]`.
pub fn painted_point(t: &PaintedTree, q: &Rational, w: &WeightVector) -> Result<Point> {
    if !t.is_binary() {
        return Err(Error::NotBinary);
    }
    w.check_len(t.leaf_count())?;
    if q.is_negative() || *q > Rational::one() {
        return Err(Error::ParameterOutOfRange(q.to_string()));
    }
    let coords = trivalent_nodes(t, w.as_slice())
        .into_iter()
        .map(|(painted, l, r)| {
            let lr = Rational::from_integer(BigInt::from(l) * BigInt::from(r));
            if painted {
                lr
            } else {
                q * lr
            }
        })
        .collect();
    Ok(Point { coords })
}

/// The point realizing the quotient by range equivalence: unpainted node `i`
/// gives `q l_i r_i`, painted node `i` gives `i (n - i)`.
pub fn range_quotient_point(t: &PaintedTree, q: &Rational) -> Result<Point> {
    if !t.is_binary() {
        return Err(Error::NotBinary);
    }
    if !q.is_positive() || *q >= Rational::one() {
        return Err(Error::ParameterOutOfRange(q.to_string()));
    }
    let n = t.leaf_count() as i64;
    let units = vec![1; n as usize];
    let coords = trivalent_nodes(t, &units)
        .into_iter()
        .enumerate()
        .map(|(idx, (painted, l, r))| {
            let i = idx as i64 + 1;
            if painted {
                int(i * (n - i))
            } else {
                q * int((l * r) as i64)
            }
        })
        .collect();
    Ok(Point { coords })
}

/// The inequality for one facet tree.
pub fn facet_inequality(facet: &FacetTree, w: &WeightVector) -> Result<Hyperplane> {
    let n = facet.leaf_count();
    w.check_len(n)?;
    let dim = n - 1;
    let mut coeffs = vec![Rational::zero(); dim];
    match facet {
        FacetTree::Lower { k, .. } => {
            coeffs[k - 1] = Rational::one();
            Hyperplane::new(coeffs, Sense::AtLeast, Rational::zero())
        }
        FacetTree::Upper { signature } => {
            let mut block_weights = Vec::with_capacity(signature.len());
            let mut start = 0;
            for (j, &r) in signature.iter().enumerate() {
                block_weights.push(w.as_slice()[start..start + r].iter().sum::<u64>());
                start += r;
                if j + 1 < signature.len() {
                    coeffs[start - 1] = Rational::one();
                }
            }
            let mut rhs = BigInt::zero();
            for i in 0..block_weights.len() {
                for j in i + 1..block_weights.len() {
                    rhs += BigInt::from(block_weights[i]) * BigInt::from(block_weights[j]);
                }
            }
            Hyperplane::new(coeffs, Sense::AtMost, Rational::from_integer(rhs))
        }
    }
}

/// Facet inequalities of `CK(n)`: an upper inequality for every composition
/// of `n` into at least two parts, then `x_k >= 0` for `k = 1..n-1`.
pub fn composihedron_hrep(n: usize, w: &WeightVector) -> Result<HRep> {
    if n < 2 {
        return Err(Error::InvalidLeafCount(n));
    }
    w.check_len(n)?;
    let facets = crate::complex::facet_trees(n)?
        .into_iter()
        .map(|tree| {
            let inequality = facet_inequality(&tree, w)?;
            Ok(Facet {
                tree: Some(tree),
                inequality,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HRep {
        dimension: n - 1,
        facets,
    })
}

/// The points `M_0^w(t)`, one per domain class of binary painted trees, in
/// canonical order of the class representatives.
pub fn composihedron_vrep(n: usize, w: &WeightVector) -> Result<VRep> {
    if n == 0 {
        return Err(Error::InvalidLeafCount(0));
    }
    w.check_len(n)?;
    let zero = Rational::zero();
    let mut classes: BTreeMap<String, (PaintedTree, Point)> = BTreeMap::new();
    for t in enumerate_binary_painted(n)? {
        let canon = t.canonicalize_domain();
        if let std::collections::btree_map::Entry::Vacant(e) = classes.entry(canon.to_string()) {
            e.insert((canon, painted_point(&t, &zero, w)?));
        }
    }
    let mut seen = HashSet::new();
    let vertices = classes
        .into_values()
        .filter(|(_, p)| seen.insert(p.clone()))
        .map(|(tree, point)| Vertex {
            tree: Some(tree),
            point,
        })
        .collect();
    Ok(VRep {
        dimension: n - 1,
        vertices,
    })
}

/// The points `M_q^w(t)` for every binary painted tree, duplicates removed.
pub fn multiplihedron_vrep(n: usize, q: &Rational, w: &WeightVector) -> Result<VRep> {
    if n == 0 {
        return Err(Error::InvalidLeafCount(0));
    }
    w.check_len(n)?;
    let mut seen = HashSet::new();
    let mut vertices = Vec::new();
    for t in enumerate_binary_painted(n)? {
        let point = painted_point(&t, q, w)?;
        if seen.insert(point.clone()) {
            vertices.push(Vertex {
                tree: Some(t),
                point,
            });
        }
    }
    Ok(VRep {
        dimension: n - 1,
        vertices,
    })
}

/// Loday's points for all binary shapes with `n` leaves. Shapes are tagged by
/// their fully painted tree.
pub fn associahedron_vrep(n: usize) -> Result<VRep> {
    if n < 2 {
        return Err(Error::InvalidLeafCount(n));
    }
    let one = PaintedTree::corolla(1)?;
    let vertices = TreeShape::enumerate_binary(n)?
        .into_iter()
        .map(|s| {
            let point = loday_point(&s)?;
            let tree = PaintedTree::graft(&s, &vec![one.clone(); n])?;
            Ok(Vertex {
                tree: Some(tree),
                point,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VRep {
        dimension: n - 1,
        vertices,
    })
}

/// Compositions of `n` into at least two parts, the signatures of upper facets.
pub fn upper_signatures(n: usize) -> Vec<Vec<usize>> {
    compositions(n, 2)
}
