//! Exhaustive ground truth for small instances.
//!
//! Nothing here uses the bipartite structure or the closed forms: trees are
//! enumerated on an explicit edge list and packed by branch and bound.
//!
//! Only trees whose leaves are all terminals are enumerated. Any tree
//! connecting `S` can be pruned to one: repeatedly deleting a non-terminal
//! leaf keeps `S` connected and only removes vertices and edges, so a
//! feasible family stays feasible after pruning every member. The maximum
//! over the restricted candidates therefore equals the unrestricted maximum.

use std::collections::BTreeSet;

use crate::bipartite::TerminalSet;
use crate::error::{Error, Result};

/// Vertex limit for [`oracle_max_tree_set`].
pub const MAX_TREE_SET_VERTICES: usize = 10;
/// Edge limit (`ab`) for [`oracle_spanning_packing`].
pub const MAX_PACKING_EDGES: usize = 20;
/// Vertex limit (`a + b`) for [`oracle_kappa_k`].
pub const MAX_KAPPA_VERTICES: usize = 8;

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmallGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl SmallGraph {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u == v || u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidArgument(format!("bad edge ({u}, {v})")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidArgument(format!("repeated edge ({u}, {v})")));
            }
        }
        if edges.len() > 64 {
            return Err(Error::InstanceTooLarge(format!("{} edges", edges.len())));
        }
        Ok(SmallGraph {
            vertex_count,
            edges,
        })
    }

    /// `K_{a,b}` with `x_j -> j - 1` and `y_j -> a + j - 1`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        let edges = (0..a)
            .flat_map(|x| (0..b).map(move |y| (x, a + y)))
            .collect();
        SmallGraph::new(a + b, edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        SmallGraph::new(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex ids of the canonical `S_i` under the [`SmallGraph::complete_bipartite`] labeling.
    pub fn bipartite_terminals(terminal: &TerminalSet) -> Vec<usize> {
        let a = terminal.order().a();
        (0..terminal.i())
            .chain((0..terminal.y_count()).map(|y| a + y))
            .collect()
    }
}

/// A candidate tree as bitmasks over edge and vertex ids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
struct Candidate {
    edges: u64,
    vertices: u64,
}

/// Optimal family found by the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub count: usize,
    /// Each tree as a sorted list of edge ids into [`SmallGraph::edges`].
    pub witness: Vec<Vec<usize>>,
}

fn mask_to_ids(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

/// All trees containing every terminal whose leaves are all terminals.
fn steiner_candidates(graph: &SmallGraph, terminals: u64) -> Vec<Candidate> {
    struct Search<'g> {
        graph: &'g SmallGraph,
        incident: Vec<u64>,
        terminals: u64,
        out: Vec<Candidate>,
    }

    impl Search<'_> {
        fn endpoints(&self, e: usize) -> (usize, usize) {
            self.graph.edges[e]
        }

        /// Edges with exactly one endpoint in `vertices`, minus `banned`.
        fn frontier(&self, vertices: u64, banned: u64) -> u64 {
            let mut out = 0u64;
            for v in mask_to_ids(vertices) {
                out |= self.incident[v];
            }
            let mut inside = 0u64;
            for e in mask_to_ids(out) {
                let (u, w) = self.endpoints(e);
                if vertices >> u & 1 == 1 && vertices >> w & 1 == 1 {
                    inside |= 1 << e;
                }
            }
            out & !inside & !banned
        }

        fn degree_in(&self, v: usize, edges: u64) -> u32 {
            (self.incident[v] & edges).count_ones()
        }

        /// Every subtree containing the root is reached exactly once: the
        /// lowest frontier edge is either added or banned for good.
        fn grow(&mut self, edges: u64, vertices: u64, banned: u64) {
            let frontier = self.frontier(vertices, banned);
            // A non-terminal leaf can only stop being a leaf through a frontier edge.
            for v in mask_to_ids(vertices & !self.terminals) {
                if self.degree_in(v, edges) == 1 && self.incident[v] & frontier == 0 {
                    return;
                }
            }
            if frontier == 0 {
                if vertices & self.terminals == self.terminals {
                    self.out.push(Candidate { edges, vertices });
                }
                return;
            }
            // Missing terminals must stay reachable without banned edges.
            if !self.terminals_reachable(vertices, banned) {
                return;
            }
            let e = frontier.trailing_zeros() as usize;
            let (u, w) = self.endpoints(e);
            let new_vertex = if vertices >> u & 1 == 1 { w } else { u };
            self.grow(edges | 1 << e, vertices | 1 << new_vertex, banned);
            self.grow(edges, vertices, banned | 1 << e);
        }

        fn terminals_reachable(&self, vertices: u64, banned: u64) -> bool {
            let mut reached = vertices;
            loop {
                let mut next = reached;
                for v in mask_to_ids(reached) {
                    for e in mask_to_ids(self.incident[v] & !banned) {
                        let (p, q) = self.endpoints(e);
                        next |= 1 << p | 1 << q;
                    }
                }
                if next == reached {
                    break;
                }
                reached = next;
            }
            reached & self.terminals == self.terminals
        }
    }

    let mut incident = vec![0u64; graph.vertex_count];
    for (e, &(u, v)) in graph.edges.iter().enumerate() {
        incident[u] |= 1 << e;
        incident[v] |= 1 << e;
    }
    let root = terminals.trailing_zeros() as usize;
    let mut search = Search {
        graph,
        incident,
        terminals,
        out: Vec::new(),
    };
    search.grow(0, 1 << root, 0);
    let mut out = search.out;
    out.sort_unstable_by_key(|c| c.edges);
    out
}

/// Maximum family of candidates that pairwise share no edge and no vertex
/// outside `terminals`.
///
/// Branches on the lowest free edge at the terminal with the fewest free
/// edges: either some chosen tree uses it, or no tree does. Every tree
/// touches each terminal, so the free degree of any terminal bounds what
/// can still be added.
fn max_packing(graph: &SmallGraph, terminals: u64, candidates: &[Candidate]) -> OracleResult {
    let mut incident = vec![0u64; graph.vertex_count];
    for (e, &(u, v)) in graph.edges.iter().enumerate() {
        incident[u] |= 1 << e;
        incident[v] |= 1 << e;
    }
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); graph.edges.len()];
    for (n, c) in candidates.iter().enumerate() {
        for e in mask_to_ids(c.edges) {
            by_edge[e].push(n);
        }
    }
    let min_tree_edges = candidates
        .iter()
        .map(|c| c.edges.count_ones())
        .min()
        .unwrap_or(1)
        .max(1);

    struct State<'a> {
        candidates: &'a [Candidate],
        by_edge: &'a [Vec<usize>],
        incident: &'a [u64],
        terminal_ids: Vec<usize>,
        terminals: u64,
        all_edges: u64,
        min_tree_edges: u32,
        chosen: Vec<usize>,
        best: Vec<usize>,
        ceiling: usize,
    }

    impl State<'_> {
        fn search(&mut self, used_edges: u64, used_vertices: u64, closed: u64) {
            if self.best.len() == self.ceiling {
                return;
            }
            let free = self.all_edges & !used_edges & !closed;
            let (pivot, free_at_pivot) = self
                .terminal_ids
                .iter()
                .map(|&t| (t, (self.incident[t] & free).count_ones() as usize))
                .min_by_key(|&(_, d)| d)
                .expect("at least one terminal");
            let by_volume = (free.count_ones() / self.min_tree_edges) as usize;
            if self.chosen.len() + free_at_pivot.min(by_volume) <= self.best.len() {
                return;
            }
            let e = (self.incident[pivot] & free).trailing_zeros() as usize;
            for &n in &self.by_edge[e] {
                let c = self.candidates[n];
                if c.edges & (used_edges | closed) != 0
                    || c.vertices & used_vertices & !self.terminals != 0
                {
                    continue;
                }
                self.chosen.push(n);
                if self.chosen.len() > self.best.len() {
                    self.best = self.chosen.clone();
                }
                self.search(used_edges | c.edges, used_vertices | c.vertices, closed);
                self.chosen.pop();
                if self.best.len() == self.ceiling {
                    return;
                }
            }
            self.search(used_edges, used_vertices, closed | 1 << e);
        }
    }

    let all_edges = if graph.edges.len() == 64 {
        u64::MAX
    } else {
        (1u64 << graph.edges.len()) - 1
    };
    let terminal_ids = mask_to_ids(terminals);
    let ceiling = terminal_ids
        .iter()
        .map(|&t| incident[t].count_ones() as usize)
        .min()
        .unwrap_or(0)
        .min(graph.edges.len() / min_tree_edges as usize);
    let mut state = State {
        candidates,
        by_edge: &by_edge,
        incident: &incident,
        terminal_ids,
        terminals,
        all_edges,
        min_tree_edges,
        chosen: Vec::new(),
        best: Vec::new(),
        ceiling,
    };
    if !candidates.is_empty() {
        state.search(0, 0, 0);
    }
    OracleResult {
        count: state.best.len(),
        witness: state
            .best
            .iter()
            .map(|&n| mask_to_ids(candidates[n].edges))
            .collect(),
    }
}

fn terminal_mask(graph: &SmallGraph, terminals: &[usize]) -> Result<u64> {
    let mut mask = 0u64;
    for &t in terminals {
        if t >= graph.vertex_count {
            return Err(Error::InvalidArgument(format!("terminal {t} out of range")));
        }
        mask |= 1 << t;
    }
    if mask.count_ones() < 2 {
        return Err(Error::InvalidArgument(
            "need at least two distinct terminals".into(),
        ));
    }
    Ok(mask)
}

/// Exact `κ(S)`: the largest family of edge-disjoint trees connecting `S`
/// whose pairwise vertex intersections are exactly `S`.
pub fn oracle_max_tree_set(graph: &SmallGraph, terminals: &[usize]) -> Result<OracleResult> {
    if graph.vertex_count > MAX_TREE_SET_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "{} vertices, limit {MAX_TREE_SET_VERTICES}",
            graph.vertex_count
        )));
    }
    let mask = terminal_mask(graph, terminals)?;
    let candidates = steiner_candidates(graph, mask);
    Ok(max_packing(graph, mask, &candidates))
}

/// Exact maximum number of edge-disjoint spanning trees of `K_{a,b}`.
pub fn oracle_spanning_packing(a: usize, b: usize) -> Result<OracleResult> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("side sizes must be positive".into()));
    }
    if a * b > MAX_PACKING_EDGES {
        return Err(Error::InstanceTooLarge(format!(
            "{a}x{b} = {} edges, limit {MAX_PACKING_EDGES}",
            a * b
        )));
    }
    let graph = SmallGraph::complete_bipartite(a, b)?;
    let all: Vec<usize> = (0..a + b).collect();
    let mask = terminal_mask(&graph, &all)?;
    let candidates = steiner_candidates(&graph, mask);
    Ok(max_packing(&graph, mask, &candidates))
}

/// Exact `κ_k(K_{a,b})`: the minimum of [`oracle_max_tree_set`] over the
/// canonical terminal sets, which represent every `k`-set up to a
/// permutation of each side.
pub fn oracle_kappa_k(a: usize, b: usize, k: usize) -> Result<usize> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("side sizes must be positive".into()));
    }
    if a + b > MAX_KAPPA_VERTICES {
        return Err(Error::InstanceTooLarge(format!(
            "{} vertices, limit {MAX_KAPPA_VERTICES}",
            a + b
        )));
    }
    if k < 2 || k > a + b {
        return Err(Error::InvalidArgument(format!(
            "k = {k} outside [2, {}]",
            a + b
        )));
    }
    let graph = SmallGraph::complete_bipartite(a, b)?;
    let mut best = usize::MAX;
    for i in k.saturating_sub(b)..=a.min(k) {
        let terminals: Vec<usize> = (0..i).chain((0..k - i).map(|y| a + y)).collect();
        best = best.min(oracle_max_tree_set(&graph, &terminals)?.count);
    }
    Ok(best)
}
