//! Exact polytope machinery: vertex enumeration from inequalities, tight
//! sets, geometric face lattices and isomorphism of graded posets.

use std::collections::{BTreeSet, HashMap, HashSet};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::realization::{HRep, Point, Rational, VRep, Vertex};

/// Fixed-width bitset used for order relations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct BitSet(Vec<u64>);

impl BitSet {
    pub(crate) fn new(len: usize) -> BitSet {
        BitSet(vec![0; len.div_ceil(64)])
    }

    pub(crate) fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub(crate) fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn intersects_except(&self, other: &BitSet, skip: &[usize]) -> bool {
        let mut probe = self.clone();
        for (a, b) in probe.0.iter_mut().zip(&other.0) {
            *a &= b;
        }
        for &s in skip {
            probe.0[s / 64] &= !(1 << (s % 64));
        }
        probe.0.iter().any(|&w| w != 0)
    }
}

/// A finite graded poset given by its covering relation.
///
/// Elements are `0..len()`. `covers` holds pairs `(lower, upper)` with
/// `upper` covering `lower`; ranks increase by exactly one along every cover
/// when the poset is graded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacePoset {
    labels: Vec<String>,
    ranks: Vec<i64>,
    covers: Vec<(usize, usize)>,
    bottom: Option<usize>,
    top: Option<usize>,
}

impl FacePoset {
    /// Build a poset from a (reflexive or strict) order relation. The relation
    /// is closed transitively; ranks are the length of the longest chain
    /// below each element, offset by `base_rank`.
    pub fn from_relation(
        labels: Vec<String>,
        relation: impl Fn(usize, usize) -> bool,
        base_rank: i64,
    ) -> Result<FacePoset> {
        let n = labels.len();
        let mut above: Vec<BitSet> = (0..n)
            .map(|i| {
                let mut s = BitSet::new(n);
                for j in 0..n {
                    if i != j && relation(i, j) {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        // transitive closure
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = above[i].clone();
                for j in 0..n {
                    if above[i].contains(j) {
                        acc.union_with(&above[j]);
                    }
                }
                if acc != above[i] {
                    above[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for i in 0..n {
            if above[i].contains(i) {
                return Err(Error::InvalidPoset(format!("cycle through {}", labels[i])));
            }
        }
        let mut below: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for i in 0..n {
            for j in 0..n {
                if above[i].contains(j) {
                    below[j].insert(i);
                }
            }
        }
        let mut covers = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if above[i].contains(j) && !above[i].intersects_except(&below[j], &[i, j]) {
                    covers.push((i, j));
                }
            }
        }
        Self::from_covers_with_base(labels, covers, base_rank)
    }

    /// Build a poset from covering pairs, assigning longest-chain ranks.
    pub fn from_covers_with_base(
        labels: Vec<String>,
        mut covers: Vec<(usize, usize)>,
        base_rank: i64,
    ) -> Result<FacePoset> {
        let n = labels.len();
        covers.sort_unstable();
        covers.dedup();
        let mut indegree = vec![0usize; n];
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &covers {
            if a >= n || b >= n {
                return Err(Error::InvalidPoset(format!(
                    "cover ({a}, {b}) out of range"
                )));
            }
            up[a].push(b);
            indegree[b] += 1;
        }
        let mut ranks = vec![base_rank; n];
        let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = queue.pop() {
            seen += 1;
            for &j in &up[i] {
                ranks[j] = ranks[j].max(ranks[i] + 1);
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push(j);
                }
            }
        }
        if seen != n {
            return Err(Error::InvalidPoset("cyclic covering relation".into()));
        }
        Ok(Self::assemble(labels, ranks, covers))
    }

    /// Build a poset from covering pairs with explicit ranks.
    pub fn from_parts(
        labels: Vec<String>,
        ranks: Vec<i64>,
        mut covers: Vec<(usize, usize)>,
    ) -> Result<FacePoset> {
        if labels.len() != ranks.len() {
            return Err(Error::InvalidPoset("label and rank counts differ".into()));
        }
        covers.sort_unstable();
        covers.dedup();
        for &(a, b) in &covers {
            if a >= labels.len() || b >= labels.len() || ranks[b] <= ranks[a] {
                return Err(Error::InvalidPoset(format!("bad cover ({a}, {b})")));
            }
        }
        Ok(Self::assemble(labels, ranks, covers))
    }

    fn assemble(labels: Vec<String>, ranks: Vec<i64>, covers: Vec<(usize, usize)>) -> FacePoset {
        let n = labels.len();
        let mut has_below = vec![false; n];
        let mut has_above = vec![false; n];
        for &(a, b) in &covers {
            has_above[a] = true;
            has_below[b] = true;
        }
        let minimal: Vec<usize> = (0..n).filter(|&i| !has_below[i]).collect();
        let maximal: Vec<usize> = (0..n).filter(|&i| !has_above[i]).collect();
        FacePoset {
            bottom: (minimal.len() == 1).then(|| minimal[0]),
            top: (maximal.len() == 1).then(|| maximal[0]),
            labels,
            ranks,
            covers,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn rank(&self, i: usize) -> i64 {
        self.ranks[i]
    }

    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> Option<usize> {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Elements of each rank, lowest rank first, as `(rank, count)`.
    pub fn rank_counts(&self) -> Vec<(i64, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for &r in &self.ranks {
            *counts.entry(r).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }

    /// Number of elements of rank `r`.
    pub fn count_at_rank(&self, r: i64) -> usize {
        self.ranks.iter().filter(|&&x| x == r).count()
    }

    /// `true` when every cover raises the rank by exactly one.
    pub fn is_graded(&self) -> bool {
        self.covers
            .iter()
            .all(|&(a, b)| self.ranks[b] == self.ranks[a] + 1)
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|c| c.0 == i)
            .map(|c| c.1)
            .collect()
    }

    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        self.covers
            .iter()
            .filter(|c| c.1 == i)
            .map(|c| c.0)
            .collect()
    }

    /// Strict up-sets for every element.
    pub(crate) fn strict_up_sets(&self) -> Vec<BitSet> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.ranks[i]));
        let mut up_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            up_adj[a].push(b);
        }
        let mut sets: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
        for &i in &order {
            let mut s = BitSet::new(n);
            for &j in &up_adj[i] {
                s.insert(j);
                s.union_with(&sets[j]);
            }
            sets[i] = s;
        }
        sets
    }

    /// `a <= b` in the partial order.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.strict_up_sets()[a].contains(b)
    }

    /// The down-set of `x` as a sub-poset, keeping labels and ranks.
    pub fn order_ideal(&self, x: usize) -> FacePoset {
        let up = self.strict_up_sets();
        let keep: Vec<usize> = (0..self.len())
            .filter(|&i| i == x || up[i].contains(x))
            .collect();
        self.restrict(&keep)
    }

    pub(crate) fn restrict(&self, keep: &[usize]) -> FacePoset {
        let index: HashMap<usize, usize> = keep
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let covers = self
            .covers
            .iter()
            .filter_map(|&(a, b)| Some((*index.get(&a)?, *index.get(&b)?)))
            .collect();
        Self::assemble(
            keep.iter().map(|&i| self.labels[i].clone()).collect(),
            keep.iter().map(|&i| self.ranks[i]).collect(),
            covers,
        )
    }

    /// A copy with a new least element adjoined one rank below the minimum.
    pub fn with_bottom(&self, label: &str) -> FacePoset {
        let n = self.len();
        let min_rank = self.ranks.iter().copied().min().unwrap_or(0);
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let mut ranks = self.ranks.clone();
        ranks.push(min_rank - 1);
        let mut covers = self.covers.clone();
        let mut has_below = vec![false; n];
        for &(_, b) in &self.covers {
            has_below[b] = true;
        }
        covers.extend((0..n).filter(|&i| !has_below[i]).map(|i| (n, i)));
        covers.sort_unstable();
        Self::assemble(labels, ranks, covers)
    }
}

/// Componentwise product of two posets; ranks add.
pub fn product_poset(a: &FacePoset, b: &FacePoset) -> FacePoset {
    let nb = b.len();
    let idx = |i: usize, j: usize| i * nb + j;
    let mut labels = Vec::with_capacity(a.len() * nb);
    let mut ranks = Vec::with_capacity(a.len() * nb);
    for i in 0..a.len() {
        for j in 0..nb {
            labels.push(format!("({}, {})", a.labels[i], b.labels[j]));
            ranks.push(a.ranks[i] + b.ranks[j]);
        }
    }
    let mut covers = Vec::new();
    for &(x, y) in &a.covers {
        for j in 0..nb {
            covers.push((idx(x, j), idx(y, j)));
        }
    }
    for &(x, y) in &b.covers {
        for i in 0..a.len() {
            covers.push((idx(i, x), idx(i, y)));
        }
    }
    covers.sort_unstable();
    FacePoset::assemble(labels, ranks, covers)
}

/// Search for a rank-preserving order isomorphism `a -> b`.
///
/// Elements are first coloured by iterated refinement of `(rank, cover
/// degrees)`; the backtracking then extends a partial map along the Hasse
/// diagram and only tries candidates of matching colour that are adjacent to
/// the image of an already mapped neighbour.
pub fn poset_isomorphic(a: &FacePoset, b: &FacePoset) -> Option<Vec<usize>> {
    if a.len() != b.len() || a.covers.len() != b.covers.len() {
        return None;
    }
    let n = a.len();
    let adj = |p: &FacePoset| {
        let mut up = vec![Vec::new(); p.len()];
        let mut down = vec![Vec::new(); p.len()];
        for &(x, y) in &p.covers {
            up[x].push(y);
            down[y].push(x);
        }
        (up, down)
    };
    let (a_up, a_down) = adj(a);
    let (b_up, b_down) = adj(b);

    // joint colour refinement
    let mut colours_a: Vec<usize>;
    let mut colours_b: Vec<usize>;
    {
        let mut palette: HashMap<(i64, usize, usize), usize> = HashMap::new();
        let mut initial =
            |p: &FacePoset, up: &Vec<Vec<usize>>, down: &Vec<Vec<usize>>| -> Vec<usize> {
                (0..p.len())
                    .map(|i| {
                        let key = (p.ranks[i], up[i].len(), down[i].len());
                        let next = palette.len();
                        *palette.entry(key).or_insert(next)
                    })
                    .collect()
            };
        colours_a = initial(a, &a_up, &a_down);
        colours_b = initial(b, &b_up, &b_down);
    }
    loop {
        let mut palette: HashMap<(usize, Vec<usize>, Vec<usize>), usize> = HashMap::new();
        let mut refine =
            |colours: &Vec<usize>, up: &Vec<Vec<usize>>, down: &Vec<Vec<usize>>| -> Vec<usize> {
                (0..colours.len())
                    .map(|i| {
                        let mut u: Vec<usize> = up[i].iter().map(|&j| colours[j]).collect();
                        let mut d: Vec<usize> = down[i].iter().map(|&j| colours[j]).collect();
                        u.sort_unstable();
                        d.sort_unstable();
                        let next = palette.len();
                        *palette.entry((colours[i], u, d)).or_insert(next)
                    })
                    .collect()
            };
        let next_a = refine(&colours_a, &a_up, &a_down);
        let next_b = refine(&colours_b, &b_up, &b_down);
        let before = colours_a
            .iter()
            .chain(&colours_b)
            .collect::<HashSet<_>>()
            .len();
        let after = next_a.iter().chain(&next_b).collect::<HashSet<_>>().len();
        colours_a = next_a;
        colours_b = next_b;
        if after == before {
            break;
        }
    }
    let histogram = |c: &Vec<usize>| {
        let mut h = c.clone();
        h.sort_unstable();
        h
    };
    if histogram(&colours_a) != histogram(&colours_b) {
        return None;
    }

    // Order a's elements so that each one (after the first in its component)
    // has a Hasse neighbour earlier in the order.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    let mut anchor: Vec<Option<usize>> = vec![None; n];
    let mut starts: Vec<usize> = (0..n).collect();
    starts.sort_by_key(|&i| (a.ranks[i], colours_a[i]));
    for s in starts {
        if placed[s] {
            continue;
        }
        placed[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in a_up[x].iter().chain(&a_down[x]) {
                if !placed[y] {
                    placed[y] = true;
                    anchor[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
    }

    let b_neighbours: Vec<HashSet<usize>> = (0..n)
        .map(|i| b_up[i].iter().chain(&b_down[i]).copied().collect())
        .collect();
    let by_colour_b: HashMap<usize, Vec<usize>> = (0..n).fold(HashMap::new(), |mut m, i| {
        m.entry(colours_b[i]).or_insert_with(Vec::new).push(i);
        m
    });

    struct Search<'s> {
        order: &'s [usize],
        anchor: &'s [Option<usize>],
        colours_a: &'s [usize],
        colours_b: &'s [usize],
        a_up: &'s [Vec<usize>],
        a_down: &'s [Vec<usize>],
        b_up: &'s [Vec<usize>],
        b_down: &'s [Vec<usize>],
        b_neighbours: &'s [HashSet<usize>],
        by_colour_b: &'s HashMap<usize, Vec<usize>>,
        map: Vec<Option<usize>>,
        used: Vec<bool>,
    }

    impl Search<'_> {
        fn consistent(&self, x: usize, y: usize) -> bool {
            let check = |a_side: &[usize], b_side: &[usize]| {
                let mut mapped = 0;
                for &nx in a_side {
                    if let Some(ny) = self.map[nx] {
                        mapped += 1;
                        if !b_side.contains(&ny) {
                            return false;
                        }
                    }
                }
                let b_mapped = b_side.iter().filter(|&&ny| self.used[ny]).count();
                mapped == b_mapped
            };
            check(&self.a_up[x], &self.b_up[y]) && check(&self.a_down[x], &self.b_down[y])
        }

        fn run(&mut self, depth: usize) -> bool {
            let Some(&x) = self.order.get(depth) else {
                return true;
            };
            let candidates: Vec<usize> = match self.anchor[x].and_then(|p| self.map[p]) {
                Some(py) => self.b_neighbours[py]
                    .iter()
                    .copied()
                    .filter(|&y| self.colours_b[y] == self.colours_a[x])
                    .collect(),
                None => self
                    .by_colour_b
                    .get(&self.colours_a[x])
                    .cloned()
                    .unwrap_or_default(),
            };
            let mut candidates = candidates;
            candidates.sort_unstable();
            for y in candidates {
                if self.used[y] || !self.consistent(x, y) {
                    continue;
                }
                self.map[x] = Some(y);
                self.used[y] = true;
                if self.run(depth + 1) {
                    return true;
                }
                self.map[x] = None;
                self.used[y] = false;
            }
            false
        }
    }

    let mut search = Search {
        order: &order,
        anchor: &anchor,
        colours_a: &colours_a,
        colours_b: &colours_b,
        a_up: &a_up,
        a_down: &a_down,
        b_up: &b_up,
        b_down: &b_down,
        b_neighbours: &b_neighbours,
        by_colour_b: &by_colour_b,
        map: vec![None; n],
        used: vec![false; n],
    };
    if search.run(0) {
        Some(
            search
                .map
                .into_iter()
                .map(|m| m.expect("complete map"))
                .collect(),
        )
    } else {
        None
    }
}

/// Solve a square system exactly; `None` when singular.
fn solve(mut rows: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let d = rows.len();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        rhs.swap(col, pivot);
        let inv = Rational::one() / &rows[col][col];
        for c in col..d {
            rows[col][c] = &rows[col][c] * &inv;
        }
        rhs[col] = &rhs[col] * &inv;
        for r in 0..d {
            if r != col && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in col..d {
                    let delta = &factor * &rows[col][c];
                    rows[r][c] -= delta;
                }
                let delta = &factor * &rhs[col];
                rhs[r] -= delta;
            }
        }
    }
    Some(rhs)
}

/// Rank of a matrix over the rationals.
pub fn matrix_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                for c in col..cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// A nonzero vector spanning the kernel of a `(d-1) x d` matrix of rank
/// `d-1`.
fn kernel_direction(rows: &[Vec<Rational>], d: usize) -> Option<Vec<Rational>> {
    // try each coordinate as the free one
    for free in 0..d {
        let square: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| {
                (0..d)
                    .filter(|&c| c != free)
                    .map(|c| r[c].clone())
                    .collect()
            })
            .collect();
        let rhs: Vec<Rational> = rows.iter().map(|r| -&r[free]).collect();
        if let Some(sol) = solve(square, rhs) {
            let mut v = Vec::with_capacity(d);
            let mut it = sol.into_iter();
            for c in 0..d {
                v.push(if c == free {
                    Rational::one()
                } else {
                    it.next().expect("d-1 values")
                });
            }
            return Some(v);
        }
    }
    None
}

fn k_subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, m, k, &mut Vec::new(), &mut out);
    out
}

/// Fourier–Motzkin feasibility of `{ x : a . x <= b }` over the rationals.
pub fn feasible(rows: &[(Vec<Rational>, Rational)]) -> bool {
    let Some(dim) = rows.first().map(|r| r.0.len()) else {
        return true;
    };
    let mut system: Vec<(Vec<Rational>, Rational)> = rows.to_vec();
    for var in (0..dim).rev() {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        let mut rest = Vec::new();
        for (a, b) in system {
            if a[var].is_positive() {
                pos.push((a, b));
            } else if a[var].is_negative() {
                neg.push((a, b));
            } else {
                rest.push((a, b));
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                // pa/pa[var] - na/na[var] eliminates var
                let sp = Rational::one() / &pa[var];
                let sn = -Rational::one() / &na[var];
                let a: Vec<Rational> = (0..dim).map(|c| &pa[c] * &sp + &na[c] * &sn).collect();
                let b = pb * &sp + nb * &sn;
                rest.push((a, b));
            }
        }
        // drop trivial rows, checking those with no variables left
        let mut next = Vec::new();
        let mut seen = HashSet::new();
        for (mut a, mut b) in rest {
            a[var] = Rational::zero();
            if a.iter().all(Zero::is_zero) {
                if b.is_negative() {
                    return false;
                }
                continue;
            }
            // scale so the first nonzero coefficient has absolute value one
            let lead = a.iter().find(|c| !c.is_zero()).expect("nonzero row").abs();
            for c in a.iter_mut() {
                *c = &*c / &lead;
            }
            b /= &lead;
            if seen.insert((a.clone(), b.clone())) {
                next.push((a, b));
            }
        }
        system = next;
    }
    system.iter().all(|(_, b)| !b.is_negative())
}

/// Vertices of the polytope cut out by `h`, found by solving every full-rank
/// `d x d` subsystem of facet hyperplanes and keeping the feasible solutions.
pub fn enumerate_vertices(h: &HRep) -> Result<VRep> {
    let d = h.dimension;
    let rows: Vec<(Vec<Rational>, Rational)> = h
        .facets
        .iter()
        .flat_map(|f| f.inequality.as_upper_bounds())
        .collect();
    if d == 0 {
        return Ok(VRep {
            dimension: 0,
            vertices: vec![Vertex {
                tree: None,
                point: Point::new(vec![]),
            }],
        });
    }
    let satisfies = |p: &[Rational]| {
        rows.iter()
            .all(|(a, b)| a.iter().zip(p).map(|(x, y)| x * y).sum::<Rational>() <= *b)
    };
    let mut found: Vec<Point> = Vec::new();
    let mut seen = HashSet::new();
    for subset in k_subsets(rows.len(), d) {
        let a: Vec<Vec<Rational>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Rational> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        if let Some(x) = solve(a, b) {
            if satisfies(&x) && seen.insert(x.clone()) {
                found.push(Point::new(x));
            }
        }
    }
    if found.is_empty() {
        return Err(if feasible(&rows) {
            Error::UnboundedPolytope
        } else {
            Error::EmptyPolytope
        });
    }
    // a nonempty polytope with vertices is unbounded iff its recession cone
    // has an extreme ray, which is cut out by d-1 homogeneous constraints
    let normals: Vec<Vec<Rational>> = rows.iter().map(|r| r.0.clone()).collect();
    let homogeneous_ok = |y: &[Rational]| {
        normals.iter().all(|a| {
            !a.iter()
                .zip(y)
                .map(|(x, z)| x * z)
                .sum::<Rational>()
                .is_positive()
        })
    };
    if d == 1 {
        for y in [vec![Rational::one()], vec![-Rational::one()]] {
            if homogeneous_ok(&y) {
                return Err(Error::UnboundedPolytope);
            }
        }
    } else {
        for subset in k_subsets(normals.len(), d - 1) {
            let sub: Vec<Vec<Rational>> = subset.iter().map(|&i| normals[i].clone()).collect();
            if matrix_rank(&sub) != d - 1 {
                continue;
            }
            let y = kernel_direction(&sub, d).expect("rank d-1");
            let neg: Vec<Rational> = y.iter().map(|c| -c).collect();
            if homogeneous_ok(&y) || homogeneous_ok(&neg) {
                return Err(Error::UnboundedPolytope);
            }
        }
    }
    found.sort();
    Ok(VRep::from_points(d, found).expect("dimension checked"))
}

/// Indices of the facets of `h` on which `p` is tight.
pub fn tight_set(p: &Point, h: &HRep) -> Result<BTreeSet<usize>> {
    if p.dimension() != h.dimension {
        return Err(Error::DimensionMismatch {
            expected: h.dimension,
            got: p.dimension(),
        });
    }
    let mut tight = BTreeSet::new();
    for (i, f) in h.facets.iter().enumerate() {
        if !f.inequality.is_satisfied(p) {
            return Err(Error::InfeasiblePoint(i));
        }
        if f.inequality.contains(p) {
            tight.insert(i);
        }
    }
    Ok(tight)
}

/// Affine dimension of a finite point set; `-1` for the empty set.
pub fn affine_dimension(points: &[&Point]) -> i64 {
    let Some(first) = points.first() else {
        return -1;
    };
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| {
            p.coords
                .iter()
                .zip(&first.coords)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    matrix_rank(&diffs) as i64
}

/// The face lattice of the polytope with inequalities `h` and vertices `v`,
/// including the empty face and the polytope itself. Each face is labelled by
/// the sorted indices of its vertices in `v`.
pub fn face_lattice_geometric(h: &HRep, v: &VRep) -> Result<FacePoset> {
    if h.dimension != v.dimension {
        return Err(Error::DimensionMismatch {
            expected: h.dimension,
            got: v.dimension,
        });
    }
    let tights: Vec<BTreeSet<usize>> =
        v.points().map(|p| tight_set(p, h)).collect::<Result<_>>()?;
    let all: BTreeSet<usize> = (0..v.vertices.len()).collect();
    let mut faces: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    faces.insert(all.clone());
    let facet_sets: Vec<BTreeSet<usize>> = (0..h.facets.len())
        .map(|f| {
            (0..tights.len())
                .filter(|&i| tights[i].contains(&f))
                .collect()
        })
        .collect();
    let mut frontier: Vec<BTreeSet<usize>> = Vec::new();
    for s in &facet_sets {
        if faces.insert(s.clone()) {
            frontier.push(s.clone());
        }
    }
    while let Some(face) = frontier.pop() {
        for s in &facet_sets {
            let meet: BTreeSet<usize> = face.intersection(s).copied().collect();
            if faces.insert(meet.clone()) {
                frontier.push(meet);
            }
        }
    }
    let faces: Vec<BTreeSet<usize>> = faces.into_iter().collect();
    let labels: Vec<String> = faces
        .iter()
        .map(|f| {
            format!(
                "{{{}}}",
                f.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        })
        .collect();
    let points: Vec<&Point> = v.points().collect();
    let ranks: Vec<i64> = faces
        .iter()
        .map(|f| affine_dimension(&f.iter().map(|&i| points[i]).collect::<Vec<_>>()))
        .collect();
    let mut covers = Vec::new();
    for (i, a) in faces.iter().enumerate() {
        for (j, b) in faces.iter().enumerate() {
            if ranks[j] == ranks[i] + 1 && a.is_subset(b) {
                covers.push((i, j));
            }
        }
    }
    FacePoset::from_parts(labels, ranks, covers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realization::{int, Hyperplane, Sense};

    fn hrep(dim: usize, rows: &[(&[i64], Sense, i64)]) -> HRep {
        HRep::from_inequalities(
            dim,
            rows.iter()
                .map(|(a, s, b)| {
                    Hyperplane::new(a.iter().map(|&x| int(x)).collect(), *s, int(*b)).unwrap()
                })
                .collect(),
        )
        .unwrap()
    }

    fn pentagon() -> HRep {
        use Sense::*;
        hrep(
            2,
            &[
                (&[1, 1], AtMost, 3),
                (&[1, 0], AtMost, 2),
                (&[0, 1], AtMost, 2),
                (&[1, 0], AtLeast, 0),
                (&[0, 1], AtLeast, 0),
            ],
        )
    }

    fn polygon_lattice(k: usize) -> FacePoset {
        // vertices 0..k, edges k..2k, top 2k
        let labels = (0..=2 * k).map(|i| i.to_string()).collect();
        let mut covers = Vec::new();
        for e in 0..k {
            covers.push((e, k + e));
            covers.push(((e + 1) % k, k + e));
            covers.push((k + e, 2 * k));
        }
        FacePoset::from_covers_with_base(labels, covers, 0).unwrap()
    }

    #[test]
    fn segment() {
        use Sense::*;
        let h = hrep(1, &[(&[1], AtLeast, 0), (&[1], AtMost, 1)]);
        let v = enumerate_vertices(&h).unwrap();
        assert_eq!(
            v.point_set(),
            [Point::from_integers(&[0]), Point::from_integers(&[1])]
                .into_iter()
                .collect()
        );
        let lattice = face_lattice_geometric(&h, &v).unwrap();
        assert_eq!(lattice.rank_counts(), vec![(-1, 1), (0, 2), (1, 1)]);
    }

    #[test]
    fn pentagon_vertices_and_tight_sets() {
        let h = pentagon();
        let v = enumerate_vertices(&h).unwrap();
        let expected = [[1, 2], [2, 1], [0, 2], [2, 0], [0, 0]]
            .iter()
            .map(|c| Point::from_integers(c))
            .collect();
        assert_eq!(v.point_set(), expected);
        assert_eq!(
            tight_set(&Point::from_integers(&[0, 0]), &h).unwrap(),
            [3, 4].into_iter().collect()
        );
        assert_eq!(
            tight_set(&Point::from_integers(&[1, 2]), &h).unwrap(),
            [0, 2].into_iter().collect()
        );
        assert!(matches!(
            tight_set(&Point::from_integers(&[3, 0]), &h),
            Err(Error::InfeasiblePoint(_))
        ));
        let lattice = face_lattice_geometric(&h, &v).unwrap();
        assert_eq!(lattice.rank_counts(), vec![(-1, 1), (0, 5), (1, 5), (2, 1)]);
        assert!(lattice.is_graded());
    }

    #[test]
    fn empty_and_unbounded() {
        use Sense::*;
        let empty = hrep(1, &[(&[1], AtLeast, 2), (&[1], AtMost, 1)]);
        assert!(matches!(
            enumerate_vertices(&empty),
            Err(Error::EmptyPolytope)
        ));
        let ray = hrep(1, &[(&[1], AtLeast, 0)]);
        assert!(matches!(
            enumerate_vertices(&ray),
            Err(Error::UnboundedPolytope)
        ));
        let quadrant = hrep(2, &[(&[1, 0], AtLeast, 0), (&[0, 1], AtLeast, 0)]);
        assert!(matches!(
            enumerate_vertices(&quadrant),
            Err(Error::UnboundedPolytope)
        ));
        let strip = hrep(2, &[(&[1, 0], AtLeast, 0), (&[1, 0], AtMost, 1)]);
        assert!(matches!(
            enumerate_vertices(&strip),
            Err(Error::UnboundedPolytope)
        ));
        let empty_strip = hrep(2, &[(&[1, 0], AtLeast, 2), (&[1, 0], AtMost, 1)]);
        assert!(matches!(
            enumerate_vertices(&empty_strip),
            Err(Error::EmptyPolytope)
        ));
    }

    #[test]
    fn fourier_motzkin() {
        let r = |a: &[i64], b: i64| (a.iter().map(|&x| int(x)).collect::<Vec<_>>(), int(b));
        assert!(feasible(&[r(&[1, 1], 1), r(&[-1, 0], 0), r(&[0, -1], 0)]));
        assert!(!feasible(&[r(&[1, 1], -1), r(&[-1, 0], 0), r(&[0, -1], 0)]));
        assert!(feasible(&[]));
    }

    #[test]
    fn isomorphism_of_polygons() {
        let p5 = polygon_lattice(5);
        let p6 = polygon_lattice(6);
        let map = poset_isomorphic(&p5, &p5).unwrap();
        assert_eq!(map.len(), p5.len());
        assert!(poset_isomorphic(&p5, &p6).is_none());
        let geometric =
            face_lattice_geometric(&pentagon(), &enumerate_vertices(&pentagon()).unwrap()).unwrap();
        assert!(poset_isomorphic(&geometric, &p5.with_bottom("empty")).is_some());
    }

    #[test]
    fn isomorphism_is_cover_preserving() {
        let p = polygon_lattice(7).with_bottom("b");
        let map = poset_isomorphic(&p, &p).unwrap();
        let covers: HashSet<(usize, usize)> = p.covers().iter().copied().collect();
        for &(x, y) in p.covers() {
            assert!(covers.contains(&(map[x], map[y])));
        }
    }

    #[test]
    fn products() {
        let point = FacePoset::from_covers_with_base(vec!["*".into()], vec![], 0).unwrap();
        let seg = FacePoset::from_covers_with_base(
            vec!["a".into(), "b".into(), "ab".into()],
            vec![(0, 2), (1, 2)],
            0,
        )
        .unwrap();
        let p = product_poset(&point, &seg);
        assert!(poset_isomorphic(&p, &seg).is_some());
        let square = product_poset(&seg, &seg);
        assert_eq!(square.rank_counts(), vec![(0, 4), (1, 4), (2, 1)]);
        assert!(poset_isomorphic(&square, &polygon_lattice(4)).is_some());
    }

    #[test]
    fn relation_builder() {
        // chain 0 < 1 < 2 given only by generating pairs
        let p = FacePoset::from_relation(
            vec!["a".into(), "b".into(), "c".into()],
            |i, j| j == i + 1,
            0,
        )
        .unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
        assert_eq!(p.ranks(), &[0, 1, 2]);
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(2));
        assert!(FacePoset::from_relation(vec!["a".into(), "b".into()], |i, j| i != j, 0).is_err());
        assert_eq!(p.order_ideal(1).len(), 2);
    }
}
