//! Painted planar trees and the plain planar trees underneath them.
//!
//! A painted tree is a rooted planar tree whose edges are either painted or
//! unpainted. The root edge is always painted, leaf edges never are, and every
//! internal node has one of three local shapes:
//!
//! * an unpainted branching node: unpainted edge below, two or more unpainted
//!   edges above;
//! * a painted branching node: painted edge below, two or more painted edges
//!   above;
//! * a paint-change node: painted edge below, one or more unpainted edges
//!   above.
//!
//! Node kinds are never stored. Each node only records whether the edge below
//! it is painted, and the kind is read off from that flag and the children.
//!
//! Trees have a compact text form used for display, parsing and ordering:
//! `.` is a leaf, `(..)` an unpainted branching node, `[..]` a painted
//! branching node and `{..}` a paint-change node. For example the tree for
//! `f(ab)(f(c)f(d))` is `[{(..)}[{.}{.}]]`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::{cartesian_product, compositions};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Node {
    /// Paint flag of the edge directly below this node.
    pub(crate) painted: bool,
    pub(crate) children: Vec<Node>,
}

/// The local type of a node, derived from its paint flag and its children.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf,
    UnpaintedBranch,
    PaintedBranch,
    PaintChange,
}

impl Node {
    pub(crate) fn leaf() -> Node {
        Node {
            painted: false,
            children: Vec::new(),
        }
    }

    pub(crate) fn unpainted(children: Vec<Node>) -> Node {
        Node {
            painted: false,
            children,
        }
    }

    pub(crate) fn painted(children: Vec<Node>) -> Node {
        Node {
            painted: true,
            children,
        }
    }

    pub(crate) fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub(crate) fn kind(&self) -> NodeKind {
        if self.is_leaf() {
            NodeKind::Leaf
        } else if !self.painted {
            NodeKind::UnpaintedBranch
        } else if self.children.iter().all(|c| c.painted) {
            NodeKind::PaintedBranch
        } else {
            NodeKind::PaintChange
        }
    }

    pub(crate) fn leaf_count(&self) -> usize {
        if self.is_leaf() {
            1
        } else {
            self.children.iter().map(Node::leaf_count).sum()
        }
    }

    /// Number of edges joining two internal nodes in the subtree.
    fn internal_edges(&self) -> usize {
        self.children
            .iter()
            .filter(|c| !c.is_leaf())
            .map(|c| 1 + c.internal_edges())
            .sum()
    }

    /// Rebuild the subtree with the selected internal edges collapsed. Edges
    /// are numbered in preorder of their upper endpoint.
    fn contract(&self, edges: &BTreeSet<usize>, counter: &mut usize) -> Node {
        let mut children = Vec::with_capacity(self.children.len());
        for child in &self.children {
            if child.is_leaf() {
                children.push(child.clone());
                continue;
            }
            let id = *counter;
            *counter += 1;
            let contracted = child.contract(edges, counter);
            if edges.contains(&id) {
                children.extend(contracted.children);
            } else {
                children.push(contracted);
            }
        }
        Node {
            painted: self.painted,
            children,
        }
    }

    /// Checks the painted-tree node rules for this subtree.
    fn is_valid_painted(&self) -> bool {
        let local = match self.kind() {
            NodeKind::Leaf => !self.painted,
            NodeKind::UnpaintedBranch => {
                self.children.len() >= 2 && self.children.iter().all(|c| !c.painted)
            }
            NodeKind::PaintedBranch => self.children.len() >= 2,
            NodeKind::PaintChange => self.children.iter().all(|c| !c.painted),
        };
        local && self.children.iter().all(Node::is_valid_painted)
    }

    fn is_valid_shape(&self) -> bool {
        !self.painted
            && (self.is_leaf() || self.children.len() >= 2)
            && self.children.iter().all(Node::is_valid_shape)
    }

    fn is_binary(&self) -> bool {
        let arity_ok = match self.kind() {
            NodeKind::Leaf => true,
            NodeKind::PaintChange => self.children.len() == 1,
            NodeKind::UnpaintedBranch | NodeKind::PaintedBranch => self.children.len() == 2,
        };
        arity_ok && self.children.iter().all(Node::is_binary)
    }

    /// Collapse every edge joining two unpainted branching nodes.
    fn canonical(&self) -> Node {
        let children: Vec<Node> = self.children.iter().map(Node::canonical).collect();
        if self.kind() != NodeKind::UnpaintedBranch {
            return Node {
                painted: self.painted,
                children,
            };
        }
        let mut flat = Vec::with_capacity(children.len());
        for c in children {
            if c.kind() == NodeKind::UnpaintedBranch {
                flat.extend(c.children);
            } else {
                flat.push(c);
            }
        }
        Node::unpainted(flat)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.kind() {
            NodeKind::Leaf => return f.write_str("."),
            NodeKind::UnpaintedBranch => ('(', ')'),
            NodeKind::PaintedBranch => ('[', ']'),
            NodeKind::PaintChange => ('{', '}'),
        };
        write!(f, "{open}")?;
        for c in &self.children {
            c.write(f)?;
        }
        write!(f, "{close}")
    }
}

struct Parser<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Parser {
            input,
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, reason: impl Into<String>) -> Error {
        Error::Parse {
            input: self.input.to_string(),
            reason: reason.into(),
        }
    }

    fn node(&mut self) -> Result<(Node, u8)> {
        let Some(&c) = self.bytes.get(self.pos) else {
            return Err(self.err("unexpected end of input"));
        };
        self.pos += 1;
        let close = match c {
            b'.' => return Ok((Node::leaf(), c)),
            b'(' => b')',
            b'[' => b']',
            b'{' => b'}',
            _ => return Err(self.err(format!("unexpected character at {}", self.pos - 1))),
        };
        let mut children = Vec::new();
        loop {
            match self.bytes.get(self.pos) {
                None => return Err(self.err("unbalanced brackets")),
                Some(&b) if b == close => {
                    self.pos += 1;
                    break;
                }
                Some(_) => children.push(self.node()?.0),
            }
        }
        if children.is_empty() {
            return Err(self.err("empty node"));
        }
        Ok((
            Node {
                painted: c != b'(',
                children,
            },
            c,
        ))
    }

    fn finish(self) -> Result<()> {
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(self.err("trailing input"))
        }
    }
}

/// Checks that every bracket in `s` matches the kind derived from its node.
fn brackets_match(node: &Node, s: &str) -> bool {
    let mut rendered = String::new();
    use fmt::Write;
    let _ = write!(rendered, "{}", Display(node));
    rendered == s
}

struct Display<'a>(&'a Node);

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.write(f)
    }
}

/// A painted planar tree with `n >= 1` leaves.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PaintedTree {
    pub(crate) root: Node,
}

impl PaintedTree {
    pub(crate) fn from_node(root: Node) -> Result<PaintedTree> {
        if !root.painted || !root.is_valid_painted() {
            return Err(Error::InvalidTree(Display(&root).to_string()));
        }
        Ok(PaintedTree { root })
    }

    /// The painted corolla: one paint-change node carrying `n` leaves.
    pub fn corolla(n: usize) -> Result<PaintedTree> {
        if n == 0 {
            return Err(Error::InvalidLeafCount(0));
        }
        Ok(PaintedTree {
            root: Node::painted(vec![Node::leaf(); n]),
        })
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaf_count()
    }

    pub fn is_binary(&self) -> bool {
        self.root.is_binary()
    }

    pub fn root_kind(&self) -> NodeKind {
        self.root.kind()
    }

    /// Number of internal edges. `contract` identifies edges by an index in
    /// `0..internal_edge_count()`, numbered in preorder of their upper node.
    pub fn internal_edge_count(&self) -> usize {
        self.root.internal_edges()
    }

    /// Collapse the given internal edges simultaneously.
    ///
    /// Returns `Ok(None)` when the collapsed tree breaks the node rules, for
    /// instance by merging a painted branching node with only some of its
    /// paint-change children.
    pub fn contract(&self, edges: &[usize]) -> Result<Option<PaintedTree>> {
        let count = self.internal_edge_count();
        if let Some(&edge) = edges.iter().find(|&&e| e >= count) {
            return Err(Error::UnknownEdge { edge, count });
        }
        let set: BTreeSet<usize> = edges.iter().copied().collect();
        Ok(self.contract_set(&set))
    }

    fn contract_set(&self, set: &BTreeSet<usize>) -> Option<PaintedTree> {
        let root = self.root.contract(set, &mut 0);
        root.is_valid_painted().then_some(PaintedTree { root })
    }

    /// Every tree this one refines, itself included.
    pub fn coarsenings(&self) -> HashSet<PaintedTree> {
        let count = self.internal_edge_count();
        let mut out = HashSet::new();
        for mask in 0u64..(1u64 << count) {
            let set: BTreeSet<usize> = (0..count).filter(|i| mask >> i & 1 == 1).collect();
            if let Some(t) = self.contract_set(&set) {
                out.insert(t);
            }
        }
        out
    }

    /// `true` when some set of internal edges of `self` collapses to `other`.
    /// Reflexive.
    pub fn refines(&self, other: &PaintedTree) -> Result<bool> {
        let (a, b) = (self.leaf_count(), other.leaf_count());
        if a != b {
            return Err(Error::LeafCountMismatch(a, b));
        }
        let drop = self.internal_edge_count() as isize - other.internal_edge_count() as isize;
        if drop < 0 {
            return Ok(false);
        }
        if drop == 0 {
            return Ok(self == other);
        }
        let count = self.internal_edge_count();
        for mask in 0u64..(1u64 << count) {
            if mask.count_ones() as isize != drop {
                continue;
            }
            let set: BTreeSet<usize> = (0..count).filter(|i| mask >> i & 1 == 1).collect();
            if self.contract_set(&set).as_ref() == Some(other) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The least refined member of the domain equivalence class: every
    /// unpainted subtree is flattened to a corolla.
    pub fn canonicalize_domain(&self) -> PaintedTree {
        PaintedTree {
            root: self.root.canonical(),
        }
    }

    pub fn domain_equivalent(&self, other: &PaintedTree) -> bool {
        self.canonicalize_domain() == other.canonicalize_domain()
    }

    /// All members of the domain equivalence class, in canonical order.
    pub fn domain_class(&self) -> Vec<PaintedTree> {
        fn expand(node: &Node) -> Vec<Node> {
            if node.kind() == NodeKind::UnpaintedBranch {
                // canonical: the children are leaves
                return TreeShape::enumerate_all(node.children.len())
                    .expect("corolla has at least two leaves")
                    .into_iter()
                    .map(|s| s.root)
                    .collect();
            }
            let options: Vec<Vec<Node>> = node.children.iter().map(expand).collect();
            cartesian_product(&options)
                .into_iter()
                .map(|children| Node {
                    painted: node.painted,
                    children,
                })
                .collect()
        }
        let canon = self.canonicalize_domain();
        let mut out: Vec<PaintedTree> = expand(&canon.root)
            .into_iter()
            .map(|root| PaintedTree { root })
            .collect();
        sort_canonical(&mut out);
        out
    }

    /// `true` when some member of this tree's domain class refines `other`.
    pub fn domain_refines(&self, other: &PaintedTree) -> Result<bool> {
        for member in self.domain_class() {
            if member.refines(other)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The painted part of a binary tree as a weighted binary shape: each
    /// paint-change node becomes a leaf weighted by the number of leaves above
    /// it.
    pub fn weighted_form(&self) -> Result<WeightedTree> {
        fn walk(node: &Node, weights: &mut Vec<u64>) -> Node {
            match node.kind() {
                NodeKind::PaintChange => {
                    weights.push(node.leaf_count() as u64);
                    Node::leaf()
                }
                _ => Node::unpainted(node.children.iter().map(|c| walk(c, weights)).collect()),
            }
        }
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        let mut weights = Vec::new();
        let root = walk(&self.root, &mut weights);
        Ok(WeightedTree {
            shape: TreeShape { root },
            weights,
        })
    }

    /// Inverse of [`weighted_form`](Self::weighted_form): each weighted leaf
    /// becomes a paint-change node over a left comb of that many leaves.
    pub fn from_weighted(w: &WeightedTree) -> Result<PaintedTree> {
        fn comb(k: u64) -> Node {
            (1..k).fold(Node::leaf(), |acc, _| {
                Node::unpainted(vec![acc, Node::leaf()])
            })
        }
        fn walk(node: &Node, weights: &mut std::slice::Iter<'_, u64>) -> Node {
            if node.is_leaf() {
                let k = *weights.next().expect("weight count checked");
                Node::painted(vec![comb(k)])
            } else {
                Node::painted(node.children.iter().map(|c| walk(c, weights)).collect())
            }
        }
        w.validate()?;
        if !w.shape.is_binary() {
            return Err(Error::NotBinary);
        }
        let root = walk(&w.shape.root, &mut w.weights.iter());
        PaintedTree::from_node(root)
    }

    /// Paint `base` entirely and attach `crowns[i]` at its `i`-th leaf.
    pub fn graft(base: &TreeShape, crowns: &[PaintedTree]) -> Result<PaintedTree> {
        fn walk(node: &Node, crowns: &mut std::slice::Iter<'_, PaintedTree>) -> Node {
            if node.is_leaf() {
                crowns.next().expect("crown count checked").root.clone()
            } else {
                Node::painted(node.children.iter().map(|c| walk(c, crowns)).collect())
            }
        }
        let expected = base.leaf_count();
        if crowns.len() != expected {
            return Err(Error::CrownCount {
                expected,
                got: crowns.len(),
            });
        }
        PaintedTree::from_node(walk(&base.root, &mut crowns.iter()))
    }

    /// The underlying unpainted shape, with paint-change nodes removed.
    pub fn shape(&self) -> TreeShape {
        fn walk(node: &Node) -> Vec<Node> {
            match node.kind() {
                NodeKind::Leaf => vec![Node::leaf()],
                NodeKind::PaintChange if node.children.len() == 1 => walk(&node.children[0]),
                _ => vec![Node::unpainted(
                    node.children.iter().flat_map(walk).collect(),
                )],
            }
        }
        TreeShape {
            root: walk(&self.root).remove(0),
        }
    }
}

impl fmt::Display for PaintedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.write(f)
    }
}

impl FromStr for PaintedTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<PaintedTree> {
        let mut p = Parser::new(s);
        let (root, _) = p.node()?;
        p.finish()?;
        if !brackets_match(&root, s) {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "bracket kind does not match node type".into(),
            });
        }
        PaintedTree::from_node(root)
    }
}

impl Ord for PaintedTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

impl PartialOrd for PaintedTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for PaintedTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PaintedTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Sort trees by their text form. This is the canonical order used for every
/// deterministic listing in the crate.
pub fn sort_canonical(trees: &mut [PaintedTree]) {
    trees.sort_by_cached_key(|t| t.to_string());
}

fn painted_binary_nodes(n: usize) -> Vec<Node> {
    let mut out = Vec::new();
    for i in 1..n {
        for l in painted_binary_nodes(i) {
            for r in painted_binary_nodes(n - i) {
                out.push(Node::painted(vec![l.clone(), r]));
            }
        }
    }
    for s in TreeShape::enumerate_binary(n).expect("n >= 1") {
        out.push(Node::painted(vec![s.root]));
    }
    out
}

/// Every binary painted tree with `n` leaves, in canonical order.
pub fn enumerate_binary_painted(n: usize) -> Result<Vec<PaintedTree>> {
    if n == 0 {
        return Err(Error::InvalidLeafCount(0));
    }
    let mut out: Vec<PaintedTree> = painted_binary_nodes(n)
        .into_iter()
        .map(|root| PaintedTree { root })
        .collect();
    sort_canonical(&mut out);
    Ok(out)
}

fn painted_nodes(n: usize) -> Vec<Node> {
    let mut out = Vec::new();
    for parts in compositions(n, 2) {
        let options: Vec<Vec<Node>> = parts.iter().map(|&k| painted_nodes(k)).collect();
        out.extend(cartesian_product(&options).into_iter().map(Node::painted));
    }
    for parts in compositions(n, 1) {
        let options: Vec<Vec<Node>> = parts.iter().map(|&k| shape_nodes(k)).collect();
        out.extend(cartesian_product(&options).into_iter().map(Node::painted));
    }
    out
}

fn shape_nodes(n: usize) -> Vec<Node> {
    if n == 1 {
        return vec![Node::leaf()];
    }
    let mut out = Vec::new();
    for parts in compositions(n, 2) {
        let options: Vec<Vec<Node>> = parts.iter().map(|&k| shape_nodes(k)).collect();
        out.extend(cartesian_product(&options).into_iter().map(Node::unpainted));
    }
    out
}

/// Every painted tree with `n` leaves (all six node types), in canonical order.
/// These index the faces of the multiplihedron.
pub fn enumerate_painted(n: usize) -> Result<Vec<PaintedTree>> {
    if n == 0 {
        return Err(Error::InvalidLeafCount(0));
    }
    let mut out: Vec<PaintedTree> = painted_nodes(n)
        .into_iter()
        .map(|root| PaintedTree { root })
        .collect();
    sort_canonical(&mut out);
    Ok(out)
}

/// An unpainted planar rooted tree; internal nodes have at least two children.
///
/// Leaves are numbered `0..n` from left to right. In a binary shape the
/// internal nodes are numbered `1..n` so that node `i` sits between leaf
/// `i - 1` and leaf `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TreeShape {
    pub(crate) root: Node,
}

impl TreeShape {
    /// The single-leaf tree.
    pub fn trivial() -> TreeShape {
        TreeShape { root: Node::leaf() }
    }

    pub fn corolla(n: usize) -> Result<TreeShape> {
        match n {
            0 => Err(Error::InvalidLeafCount(0)),
            1 => Ok(TreeShape::trivial()),
            _ => Ok(TreeShape {
                root: Node::unpainted(vec![Node::leaf(); n]),
            }),
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaf_count()
    }

    pub fn is_binary(&self) -> bool {
        self.root.is_binary()
    }

    pub fn internal_edge_count(&self) -> usize {
        self.root.internal_edges()
    }

    /// Collapse the given internal edges; contraction of a plain tree is
    /// always valid.
    pub fn contract(&self, edges: &[usize]) -> Result<TreeShape> {
        let count = self.internal_edge_count();
        if let Some(&edge) = edges.iter().find(|&&e| e >= count) {
            return Err(Error::UnknownEdge { edge, count });
        }
        let set: BTreeSet<usize> = edges.iter().copied().collect();
        Ok(TreeShape {
            root: self.root.contract(&set, &mut 0),
        })
    }

    pub fn coarsenings(&self) -> HashSet<TreeShape> {
        let count = self.internal_edge_count();
        (0u64..(1u64 << count))
            .map(|mask| {
                let set: BTreeSet<usize> = (0..count).filter(|i| mask >> i & 1 == 1).collect();
                TreeShape {
                    root: self.root.contract(&set, &mut 0),
                }
            })
            .collect()
    }

    /// `(l_i, r_i)` for each internal node of a binary shape in left-to-right
    /// order: the leaf counts of its left and right subtrees.
    pub fn subtree_leaf_counts(&self) -> Result<Vec<(u64, u64)>> {
        fn walk(node: &Node, out: &mut Vec<(u64, u64)>) {
            if let [l, r] = node.children.as_slice() {
                walk(l, out);
                out.push((l.leaf_count() as u64, r.leaf_count() as u64));
                walk(r, out);
            }
        }
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        let mut out = Vec::new();
        walk(&self.root, &mut out);
        Ok(out)
    }

    /// All binary shapes with `n` leaves, in canonical order.
    pub fn enumerate_binary(n: usize) -> Result<Vec<TreeShape>> {
        fn nodes(n: usize) -> Vec<Node> {
            if n == 1 {
                return vec![Node::leaf()];
            }
            let mut out = Vec::new();
            for i in 1..n {
                for l in nodes(i) {
                    for r in nodes(n - i) {
                        out.push(Node::unpainted(vec![l.clone(), r]));
                    }
                }
            }
            out
        }
        if n == 0 {
            return Err(Error::InvalidLeafCount(0));
        }
        let mut out: Vec<TreeShape> = nodes(n)
            .into_iter()
            .map(|root| TreeShape { root })
            .collect();
        out.sort_by_cached_key(|s| s.to_string());
        Ok(out)
    }

    /// All shapes with `n` leaves (any valence), in canonical order. These
    /// index the faces of the associahedron `K(n)`.
    pub fn enumerate_all(n: usize) -> Result<Vec<TreeShape>> {
        if n == 0 {
            return Err(Error::InvalidLeafCount(0));
        }
        let mut out: Vec<TreeShape> = shape_nodes(n)
            .into_iter()
            .map(|root| TreeShape { root })
            .collect();
        out.sort_by_cached_key(|s| s.to_string());
        Ok(out)
    }
}

impl fmt::Display for TreeShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.write(f)
    }
}

impl FromStr for TreeShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<TreeShape> {
        let mut p = Parser::new(s);
        let (root, _) = p.node()?;
        p.finish()?;
        if !root.is_valid_shape() {
            return Err(Error::Parse {
                input: s.to_string(),
                reason: "painted node in a shape".into(),
            });
        }
        Ok(TreeShape { root })
    }
}

/// A binary shape whose leaves carry positive integer weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedTree {
    pub shape: TreeShape,
    pub weights: Vec<u64>,
}

impl WeightedTree {
    pub fn new(shape: TreeShape, weights: Vec<u64>) -> Result<WeightedTree> {
        let w = WeightedTree { shape, weights };
        w.validate()?;
        Ok(w)
    }

    fn validate(&self) -> Result<()> {
        let expected = self.shape.leaf_count();
        if self.weights.len() != expected {
            return Err(Error::WeightCount {
                expected,
                got: self.weights.len(),
            });
        }
        if self.weights.contains(&0) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(())
    }

    pub fn total_weight(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// Every weighted binary tree of the given total weight.
    pub fn enumerate(total: u64) -> Vec<WeightedTree> {
        let mut out = Vec::new();
        for t in 1..=total as usize {
            for parts in compositions(total as usize, 1)
                .into_iter()
                .filter(|p| p.len() == t)
            {
                for shape in TreeShape::enumerate_binary(t).expect("t >= 1") {
                    out.push(WeightedTree {
                        shape,
                        weights: parts.iter().map(|&p| p as u64).collect(),
                    });
                }
            }
        }
        out
    }
}
