//! Maximum edge-disjoint spanning-tree packing of `K_{a,b}`.
//!
//! Every tree is written as an adjacency-degree list: row `j` gives `x_j` a
//! run of cyclically consecutive `y` positions, and consecutive rows share
//! exactly one `y`. The first tree uses the degree sequence `d_1..d_a`; tree
//! `ℓ` uses the same sequence rotated by `ℓ - 1` and starts right after the
//! arc the previous tree gave to `x_1`. So the arcs that a fixed `x_j`
//! receives across trees `1..t` are back to back and cover `D_j^t` positions.
//! The trees are pairwise edge-disjoint exactly when every window sum
//! `D_j^t` is at most `b`.
//!
//! The degrees are distributed with a residue ordering that keeps all
//! `t`-windows within one of each other, so `D_j^t <= b` holds at
//! `t = ⌊ab/(a+b-1)⌋`.

use crate::bipartite::{normalize, BipartiteOrder, Edge, Tree};
use crate::error::{Error, Result};

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `⌊ab / (a+b-1)⌋`, the number of edge-disjoint spanning trees of `K_{a,b}`.
pub fn target_tree_count(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        return 0;
    }
    a * b / (a + b - 1)
}

/// Orders `1..=a` as `r, r+t, r+2t, ..., r+(j-1)t` (mod `a`) for
/// `r = 1..=a/j`, where `j = a / gcd(a, t)` is the additive order of `t`.
pub fn residue_ordering(a: usize, t: usize) -> Vec<usize> {
    if a == 0 {
        return Vec::new();
    }
    let cycle = a / gcd(a, t);
    let mut out = Vec::with_capacity(a);
    for start in 0..a / cycle {
        for m in 0..cycle {
            out.push((start + m * t) % a + 1);
        }
    }
    out
}

/// Degrees `d_1..d_a` of the first tree in the packing, built for shift `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    anchors: Vec<usize>,
    quotient: usize,
    remainder: usize,
    shift: usize,
}

impl DegreeSequence {
    /// `d_1..d_a`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// 1-based `d_j`, cyclic in `j`.
    pub fn degree(&self, j: usize) -> usize {
        self.degrees[(j - 1) % self.degrees.len()]
    }

    /// `i_0..i_a` with `i_0 = 1` and `i_j = i_{j-1} + d_j - 1`.
    pub fn anchors(&self) -> &[usize] {
        &self.anchors
    }

    pub fn quotient(&self) -> usize {
        self.quotient
    }

    pub fn remainder(&self) -> usize {
        self.remainder
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Cyclic window sum `D_j^t = d_j + ... + d_{j+t-1}`.
    pub fn window_sum(&self, j: usize, t: usize) -> usize {
        (j..j + t).map(|m| self.degree(m)).sum()
    }

    /// True iff `D_j^t <= b` for every `j`, i.e. trees `1..=t` are
    /// pairwise edge-disjoint.
    pub fn verify_shift_capacity(&self, b: usize, t: usize) -> bool {
        (1..=self.len()).all(|j| self.window_sum(j, t) <= b)
    }
}

/// Degree sequence for `rows` x-vertices against `cols` y-vertices, with
/// the `+1` degrees placed on the first `r` entries of
/// `residue_ordering(rows, t)`, where `rows + cols - 1 = q * rows + r`.
///
/// The packing uses `rows <= cols`, but nothing here depends on it.
pub fn degree_sequence(rows: usize, cols: usize, t: usize) -> Result<DegreeSequence> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidArgument(format!(
            "degree sequence needs positive sides, got ({rows}, {cols})"
        )));
    }
    let total = rows + cols - 1;
    let (quotient, remainder) = (total / rows, total % rows);
    let mut degrees = vec![quotient; rows];
    for &p in residue_ordering(rows, t).iter().take(remainder) {
        degrees[p - 1] += 1;
    }
    let mut anchors = Vec::with_capacity(rows + 1);
    anchors.push(1);
    for &d in &degrees {
        let last = *anchors.last().unwrap();
        anchors.push(last + d - 1);
    }
    debug_assert_eq!(anchors[rows], cols);
    Ok(DegreeSequence {
        degrees,
        anchors,
        quotient,
        remainder,
        shift: t,
    })
}

/// Tree `ℓ` of the shifted family, over `cols` y-positions.
///
/// Row `j` takes `d_{ℓ+j-1}` consecutive positions (mod `cols`), starting
/// where row `j-1` ended; row 1 starts at `1 + d_1 + ... + d_{ℓ-1}`.
pub fn build_tree(dseq: &DegreeSequence, cols: usize, index: usize) -> Result<Tree> {
    if index == 0 {
        return Err(Error::InvalidArgument("tree index is 1-based".into()));
    }
    if dseq.is_empty() || !dseq.verify_shift_capacity(cols, index) {
        return Err(Error::NotConstructible { index, b: cols });
    }
    // 0-based cyclic position of the first y in row 1.
    let mut pos = (1..index).map(|m| dseq.degree(m)).sum::<usize>() % cols;
    let mut edges = Vec::with_capacity(dseq.len() + cols - 1);
    for j in 1..=dseq.len() {
        let d = dseq.degree(index + j - 1);
        for step in 0..d {
            edges.push((j, (pos + step) % cols + 1));
        }
        pos = (pos + d - 1) % cols;
    }
    Ok(Tree::new(edges))
}

/// `count` trees of the shifted family on `K_{rows,cols}`, with the degree
/// sequence built for `t = count`.
pub(crate) fn shifted_trees(
    rows: usize,
    cols: usize,
    count: usize,
) -> Result<(DegreeSequence, Vec<Tree>)> {
    let dseq = degree_sequence(rows, cols, count.max(1))?;
    if !dseq.verify_shift_capacity(cols, count) {
        return Err(Error::ConstructionBug(format!(
            "window sum exceeds {cols} at t = {count} for K_{{{rows},{cols}}}"
        )));
    }
    let trees = (1..=count)
        .map(|l| build_tree(&dseq, cols, l))
        .collect::<Result<Vec<_>>>()?;
    Ok((dseq, trees))
}

/// A maximum set of edge-disjoint spanning trees of `K_{a,b}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTreePacking {
    pub order: BipartiteOrder,
    pub degrees: DegreeSequence,
    pub trees: Vec<Tree>,
}

impl SpanningTreePacking {
    /// Trees with labels in the caller's original orientation.
    pub fn caller_edges(&self) -> Vec<Vec<Edge>> {
        self.trees
            .iter()
            .map(|t| t.edges().iter().map(|&e| self.order.to_caller(e)).collect())
            .collect()
    }
}

pub fn build_packing(order: &BipartiteOrder) -> Result<SpanningTreePacking> {
    let (a, b) = (order.a(), order.b());
    let count = target_tree_count(a, b);
    let (degrees, trees) = shifted_trees(a, b, count)?;
    Ok(SpanningTreePacking {
        order: *order,
        degrees,
        trees,
    })
}

/// Convenience wrapper: normalize then pack.
pub fn pack(a: usize, b: usize) -> Result<SpanningTreePacking> {
    build_packing(&normalize(a, b)?)
}
