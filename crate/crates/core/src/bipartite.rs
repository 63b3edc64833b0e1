//! Vertex and edge identifiers for `K_{a,b}`, tree validation, and the
//! canonical terminal sets.
//!
//! The graph itself is never stored: an edge is any pair `(x, y)` with
//! `1 <= x <= a` and `1 <= y <= b`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    X,
    Y,
}

impl Side {
    pub fn opposite(self) -> Side {
        match self {
            Side::X => Side::Y,
            Side::Y => Side::X,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::X => f.write_str("X"),
            Side::Y => f.write_str("Y"),
        }
    }
}

/// A vertex of `K_{a,b}`; `index` is 1-based within its side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub side: Side,
    pub index: usize,
}

impl VertexId {
    pub fn x(index: usize) -> Self {
        VertexId {
            side: Side::X,
            index,
        }
    }

    pub fn y(index: usize) -> Self {
        VertexId {
            side: Side::Y,
            index,
        }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::X => write!(f, "x{}", self.index),
            Side::Y => write!(f, "y{}", self.index),
        }
    }
}

/// An edge `x_i y_j`, stored as `(i, j)`.
pub type Edge = (usize, usize);

/// Side sizes with `a <= b`.
///
/// `swapped` records that the caller gave the larger side first; emitters use
/// it to put labels back in the caller's orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BipartiteOrder {
    a: usize,
    b: usize,
    swapped: bool,
}

impl BipartiteOrder {
    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn swapped(&self) -> bool {
        self.swapped
    }

    pub fn vertex_count(&self) -> usize {
        self.a + self.b
    }

    pub fn edge_count(&self) -> usize {
        self.a * self.b
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        let limit = match v.side {
            Side::X => self.a,
            Side::Y => self.b,
        };
        (1..=limit).contains(&v.index)
    }

    pub fn contains_edge(&self, (x, y): Edge) -> bool {
        (1..=self.a).contains(&x) && (1..=self.b).contains(&y)
    }

    pub fn all_vertices(&self) -> BTreeSet<VertexId> {
        (1..=self.a)
            .map(VertexId::x)
            .chain((1..=self.b).map(VertexId::y))
            .collect()
    }

    /// Maps a normalized edge to the caller's `[first side, second side]` labels.
    pub fn to_caller(&self, (x, y): Edge) -> Edge {
        if self.swapped {
            (y, x)
        } else {
            (x, y)
        }
    }

    /// Inverse of [`BipartiteOrder::to_caller`].
    pub fn from_caller(&self, (first, second): Edge) -> Edge {
        if self.swapped {
            (second, first)
        } else {
            (first, second)
        }
    }

    /// The caller's `(first, second)` side sizes.
    pub fn caller_sizes(&self) -> (usize, usize) {
        if self.swapped {
            (self.b, self.a)
        } else {
            (self.a, self.b)
        }
    }
}

/// Orders the two side sizes so that the first is the smaller.
pub fn normalize(a_raw: usize, b_raw: usize) -> Result<BipartiteOrder> {
    if a_raw == 0 || b_raw == 0 {
        return Err(Error::InvalidArgument(format!(
            "side sizes must be positive, got ({a_raw}, {b_raw})"
        )));
    }
    Ok(BipartiteOrder {
        a: a_raw.min(b_raw),
        b: a_raw.max(b_raw),
        swapped: a_raw > b_raw,
    })
}

/// A tree of `K_{a,b}` given by its edge list.
///
/// Construction does not validate; use [`validate_tree`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Tree {
    edges: Vec<Edge>,
}

impl Tree {
    pub fn new(edges: Vec<Edge>) -> Self {
        Tree { edges }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        self.edges
            .iter()
            .flat_map(|&(x, y)| [VertexId::x(x), VertexId::y(y)])
            .collect()
    }

    /// The `y` indices adjacent to `x_j`, in edge-list order.
    pub fn neighbors_of_x(&self, j: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter(|&&(x, _)| x == j)
            .map(|&(_, y)| y)
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .filter(|&&(x, y)| match v.side {
                Side::X => x == v.index,
                Side::Y => y == v.index,
            })
            .count()
    }
}

impl FromIterator<Edge> for Tree {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Tree::new(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TreeViolation {
    OutOfRange,
    Cycle,
    Disconnected,
    MissingTerminal,
}

impl TreeViolation {
    pub fn as_str(self) -> &'static str {
        match self {
            TreeViolation::OutOfRange => "out-of-range",
            TreeViolation::Cycle => "cycle",
            TreeViolation::Disconnected => "disconnected",
            TreeViolation::MissingTerminal => "missing-terminal",
        }
    }
}

impl fmt::Display for TreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of [`validate_tree`]. Violations are listed in check order:
/// out-of-range, cycle, disconnected, missing-terminal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TreeReport {
    pub violations: Vec<TreeViolation>,
}

impl TreeReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<TreeViolation> {
        self.violations.first().copied()
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns false if `u` and `v` were already joined.
    fn union(&mut self, u: usize, v: usize) -> bool {
        let (ru, rv) = (self.find(u), self.find(v));
        if ru == rv {
            return false;
        }
        self.parent[ru] = rv;
        true
    }
}

/// Checks that `tree` is a tree of `K_{a,b}` whose vertex set covers
/// `required`. A repeated edge counts as a cycle.
pub fn validate_tree(
    order: &BipartiteOrder,
    required: &BTreeSet<VertexId>,
    tree: &Tree,
) -> TreeReport {
    let mut violations = Vec::new();
    if tree.edges.iter().any(|&e| !order.contains_edge(e)) {
        violations.push(TreeViolation::OutOfRange);
        return TreeReport { violations };
    }

    let slot = |v: VertexId| match v.side {
        Side::X => v.index - 1,
        Side::Y => order.a + v.index - 1,
    };
    let mut sets = DisjointSets::new(order.vertex_count());
    let mut acyclic = true;
    for &(x, y) in &tree.edges {
        if !sets.union(slot(VertexId::x(x)), slot(VertexId::y(y))) {
            acyclic = false;
        }
    }
    if !acyclic {
        violations.push(TreeViolation::Cycle);
    }

    let vertices = tree.vertices();
    let mut roots = vertices.iter().map(|&v| sets.find(slot(v)));
    if let Some(root) = roots.next() {
        if roots.any(|r| r != root) {
            violations.push(TreeViolation::Disconnected);
        }
    }

    if !required.is_subset(&vertices) {
        violations.push(TreeViolation::MissingTerminal);
    }
    TreeReport { violations }
}

/// The canonical terminal set `S_i = {x_1..x_i} ∪ {y_1..y_{k-i}}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TerminalSet {
    order: BipartiteOrder,
    k: usize,
    i: usize,
}

impl TerminalSet {
    pub fn order(&self) -> BipartiteOrder {
        self.order
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of terminals in `X`.
    pub fn i(&self) -> usize {
        self.i
    }

    /// Number of terminals in `Y`.
    pub fn y_count(&self) -> usize {
        self.k - self.i
    }

    /// Spare (non-terminal) vertices in `X`.
    pub fn spare_x(&self) -> usize {
        self.order.a - self.i
    }

    /// Spare (non-terminal) vertices in `Y`.
    pub fn spare_y(&self) -> usize {
        self.order.b - self.y_count()
    }

    pub fn terminal_count(&self, side: Side) -> usize {
        match side {
            Side::X => self.i,
            Side::Y => self.y_count(),
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.index >= 1 && v.index <= self.terminal_count(v.side)
    }

    pub fn vertices(&self) -> BTreeSet<VertexId> {
        (1..=self.i)
            .map(VertexId::x)
            .chain((1..=self.y_count()).map(VertexId::y))
            .collect()
    }

    /// Valid `i` for this `k`: `max(0, k - b) ..= min(a, k)`.
    pub fn index_range(order: &BipartiteOrder, k: usize) -> std::ops::RangeInclusive<usize> {
        k.saturating_sub(order.b)..=order.a.min(k)
    }
}

pub fn check_k(order: &BipartiteOrder, k: usize) -> Result<()> {
    if k < 2 || k > order.vertex_count() {
        return Err(Error::InvalidArgument(format!(
            "k = {k} outside [2, {}]",
            order.vertex_count()
        )));
    }
    Ok(())
}

pub fn terminal_set(order: &BipartiteOrder, k: usize, i: usize) -> Result<TerminalSet> {
    if k < 2 || k > order.vertex_count() || !TerminalSet::index_range(order, k).contains(&i) {
        return Err(Error::InvalidTerminalSet {
            a: order.a,
            b: order.b,
            k,
            i,
        });
    }
    Ok(TerminalSet {
        order: *order,
        k,
        i,
    })
}
