//! The combinatorial side: facet trees and the face posets of the
//! associahedra, multiplihedra and composihedra built from painted trees.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::compositions;
use crate::error::{Error, Result};
use crate::hull::{product_poset, FacePoset};
use crate::trees::{enumerate_painted, Node, PaintedTree, TreeShape};

/// A tree indexing a facet of `CK(n)`.
///
/// `Upper` is `u(t; r_1, ..., r_t)`: a painted corolla with `t >= 2` branches,
/// each carrying a painted corolla with `r_i` leaves. `Lower` is `l(k, 2)`: a
/// single paint-change node whose `k`-th branch (counting from 1) is an
/// unpainted node over two leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FacetTree {
    Upper { signature: Vec<usize> },
    Lower { n: usize, k: usize },
}

impl FacetTree {
    pub fn upper(signature: Vec<usize>) -> Result<FacetTree> {
        if signature.len() < 2 || signature.contains(&0) {
            return Err(Error::InvalidTree(format!("upper signature {signature:?}")));
        }
        Ok(FacetTree::Upper { signature })
    }

    pub fn lower(n: usize, k: usize) -> Result<FacetTree> {
        if n < 2 || k == 0 || k >= n {
            return Err(Error::InvalidTree(format!(
                "lower tree l({k},2) with {n} leaves"
            )));
        }
        Ok(FacetTree::Lower { n, k })
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            FacetTree::Upper { signature } => signature.iter().sum(),
            FacetTree::Lower { n, .. } => *n,
        }
    }

    pub fn tree(&self) -> PaintedTree {
        match self {
            FacetTree::Upper { signature } => {
                let crowns: Vec<PaintedTree> = signature
                    .iter()
                    .map(|&r| PaintedTree::corolla(r).expect("parts are positive"))
                    .collect();
                let base = TreeShape::corolla(signature.len()).expect("t >= 2");
                PaintedTree::graft(&base, &crowns).expect("crown count matches")
            }
            FacetTree::Lower { n, k } => {
                let mut children = vec![Node::leaf(); n - 1];
                children[k - 1] = Node::unpainted(vec![Node::leaf(), Node::leaf()]);
                PaintedTree::from_node(Node::painted(children)).expect("valid lower tree")
            }
        }
    }
}

impl fmt::Display for FacetTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FacetTree::Upper { signature } => {
                let parts: Vec<String> = signature.iter().map(ToString::to_string).collect();
                write!(f, "u({};{})", signature.len(), parts.join(","))
            }
            FacetTree::Lower { k, .. } => write!(f, "l({k},2)"),
        }
    }
}

/// Upper facet trees in lexicographic order of signature, then lower trees
/// for `k = 1..n-1`.
pub fn facet_trees(n: usize) -> Result<Vec<FacetTree>> {
    if n < 2 {
        return Err(Error::InvalidLeafCount(n));
    }
    let mut out: Vec<FacetTree> = compositions(n, 2)
        .into_iter()
        .map(|signature| FacetTree::Upper { signature })
        .collect();
    out.extend((1..n).map(|k| FacetTree::Lower { n, k }));
    Ok(out)
}

/// Domain classes of all painted trees with `n` leaves, with the relation
/// "some member of class `i` contracts to some member of class `j`".
pub(crate) struct ClassRelation {
    pub(crate) representatives: Vec<PaintedTree>,
    pub(crate) above: Vec<HashSet<usize>>,
}

pub(crate) fn class_relation(n: usize) -> Result<ClassRelation> {
    let trees = enumerate_painted(n)?;
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    let mut representatives = Vec::new();
    let mut canon_strings: Vec<String> = trees
        .iter()
        .map(|t| t.canonicalize_domain().to_string())
        .collect();
    canon_strings.sort();
    canon_strings.dedup();
    for s in canon_strings {
        index.insert(s.clone(), representatives.len());
        representatives.push(s.parse::<PaintedTree>()?);
    }
    let class_of = |t: &PaintedTree| index[&t.canonicalize_domain().to_string()];
    let mut above = vec![HashSet::new(); representatives.len()];
    for t in &trees {
        let c = class_of(t);
        for u in t.coarsenings() {
            above[c].insert(class_of(&u));
        }
    }
    Ok(ClassRelation {
        representatives,
        above,
    })
}

/// Face poset of `CK(n)`: domain classes of painted trees ordered by
/// contraction. Elements are labelled by the canonical tree of the class;
/// vertices have rank 0 and the painted corolla has rank `n - 1`.
pub fn face_poset_composihedron(n: usize) -> Result<FacePoset> {
    let rel = class_relation(n)?;
    let labels = rel
        .representatives
        .iter()
        .map(ToString::to_string)
        .collect();
    let poset = FacePoset::from_relation(labels, |i, j| rel.above[i].contains(&j), 0)?;
    check_dimension(&poset, n as i64 - 1)?;
    Ok(poset)
}

fn check_dimension(poset: &FacePoset, top_rank: i64) -> Result<()> {
    let top = poset
        .top()
        .ok_or_else(|| Error::InvalidPoset("no unique top".into()))?;
    if poset.rank(top) != top_rank || !poset.is_graded() {
        return Err(Error::InvalidPoset(format!(
            "expected a graded poset of rank {top_rank}"
        )));
    }
    Ok(())
}

/// Face poset of the associahedron `K(n)`: plain planar trees with `n`
/// leaves ordered by contraction.
pub fn face_poset_associahedron(n: usize) -> Result<FacePoset> {
    if n < 2 {
        return Err(Error::InvalidLeafCount(n));
    }
    let shapes = TreeShape::enumerate_all(n)?;
    let index: BTreeMap<String, usize> = shapes
        .iter()
        .enumerate()
        .map(|(i, s)| (s.to_string(), i))
        .collect();
    let above: Vec<HashSet<usize>> = shapes
        .iter()
        .map(|s| {
            s.coarsenings()
                .iter()
                .map(|u| index[&u.to_string()])
                .collect()
        })
        .collect();
    let labels = shapes.iter().map(ToString::to_string).collect();
    let poset = FacePoset::from_relation(labels, |i, j| above[i].contains(&j), 0)?;
    check_dimension(&poset, n as i64 - 2)?;
    Ok(poset)
}

/// Face poset of the multiplihedron `J(n)`: all painted trees with `n`
/// leaves ordered by contraction, without any quotient.
pub fn face_poset_multiplihedron(n: usize) -> Result<FacePoset> {
    let trees = enumerate_painted(n)?;
    let index: BTreeMap<String, usize> = trees
        .iter()
        .enumerate()
        .map(|(i, t)| (t.to_string(), i))
        .collect();
    let above: Vec<HashSet<usize>> = trees
        .iter()
        .map(|t| {
            t.coarsenings()
                .iter()
                .map(|u| index[&u.to_string()])
                .collect()
        })
        .collect();
    let labels = trees.iter().map(ToString::to_string).collect();
    let poset = FacePoset::from_relation(labels, |i, j| above[i].contains(&j), 0)?;
    check_dimension(&poset, n as i64 - 1)?;
    Ok(poset)
}

/// For each element of `face_poset_multiplihedron(n)`, the index of its
/// domain class in `face_poset_composihedron(n)`.
pub fn quotient_to_composihedron(n: usize) -> Result<Vec<usize>> {
    let j = face_poset_multiplihedron(n)?;
    let ck = face_poset_composihedron(n)?;
    let index: BTreeMap<&str, usize> = ck
        .labels()
        .iter()
        .enumerate()
        .map(|(i, l)| (l.as_str(), i))
        .collect();
    j.labels()
        .iter()
        .map(|l| {
            let canon = l.parse::<PaintedTree>()?.canonicalize_domain().to_string();
            index
                .get(canon.as_str())
                .copied()
                .ok_or_else(|| Error::InvalidPoset(format!("no class for {l}")))
        })
        .collect()
}

/// The faces of `CK(n)` lying in the facet indexed by `f`.
pub fn facet_subposet(n: usize, f: &FacetTree) -> Result<FacePoset> {
    let foreign = || Error::ForeignFacet {
        n,
        tree: f.to_string(),
    };
    if f.leaf_count() != n || !facet_trees(n)?.contains(f) {
        return Err(foreign());
    }
    let ck = face_poset_composihedron(n)?;
    let x = ck
        .index_of(&f.tree().canonicalize_domain().to_string())
        .ok_or_else(foreign)?;
    Ok(ck.order_ideal(x))
}

/// The product the facet indexed by `f` is a copy of: `K(t) x CK(r_1) x ... x
/// CK(r_t)` for an upper tree, `CK(n-1)` for a lower tree.
pub fn facet_product(f: &FacetTree) -> Result<FacePoset> {
    match f {
        FacetTree::Upper { signature } => {
            let mut acc = face_poset_associahedron(signature.len())?;
            for &r in signature {
                acc = product_poset(&acc, &face_poset_composihedron(r)?);
            }
            Ok(acc)
        }
        FacetTree::Lower { n, .. } => face_poset_composihedron(n - 1),
    }
}
