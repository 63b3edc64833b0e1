//! Explicit maximum families of internally disjoint trees connecting `S_i`.
//!
//! Construction follows the greedy order `A2`, then `A1`, then `A0`
//! (see [`crate::connectivity`] for the shapes). Every tree is built in its
//! standard shape: a tree using spare vertices can always be reshaped into
//! one of these without touching the other trees, so nothing is lost by
//! only building standard shapes.
//!
//! `A0` and `A1` trees share the internal edges (both ends in `S_i`). The
//! `A0` trees are a shifted spanning-tree packing of the internal complete
//! bipartite graph, with the `A1` hubs' side as rows. Each `A1` tree
//! then hangs every terminal on its hub's side off the lowest unused
//! internal edge at that terminal.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::bipartite::{
    terminal_set, validate_tree, BipartiteOrder, Edge, Side, TerminalSet, Tree, TreeViolation,
    VertexId,
};
use crate::connectivity::{breakdown_for, KappaBreakdown};
use crate::error::{Error, Result};
use crate::packing::shifted_trees;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TreeClass {
    A0,
    A1,
    A2,
}

impl TreeClass {
    pub fn as_str(self) -> &'static str {
        match self {
            TreeClass::A0 => "A0",
            TreeClass::A1 => "A1",
            TreeClass::A2 => "A2",
        }
    }

    /// Class implied by the non-terminal vertices of a tree, if it is one of
    /// the three standard vertex profiles.
    pub fn from_extras(extras: &[VertexId]) -> Option<TreeClass> {
        match extras {
            [] => Some(TreeClass::A0),
            [_] => Some(TreeClass::A1),
            [u, v] if u.side != v.side => Some(TreeClass::A2),
            _ => None,
        }
    }
}

impl fmt::Display for TreeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for TreeClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A0" => Ok(TreeClass::A0),
            "A1" => Ok(TreeClass::A1),
            "A2" => Ok(TreeClass::A2),
            other => Err(Error::InvalidArgument(format!(
                "unknown tree class {other:?}"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedTree {
    pub tree: Tree,
    pub class: TreeClass,
    /// Non-terminal vertices of the tree, sorted.
    pub extras: Vec<VertexId>,
}

impl ClassifiedTree {
    fn new(tree: Tree, class: TreeClass, mut extras: Vec<VertexId>) -> Self {
        extras.sort_unstable();
        ClassifiedTree {
            tree,
            class,
            extras,
        }
    }

    /// Infers class and extras from the tree's vertex set.
    pub fn classify(tree: Tree, terminal: &TerminalSet) -> Option<Self> {
        let extras = extras_of(&tree, terminal);
        let class = TreeClass::from_extras(&extras)?;
        Some(ClassifiedTree {
            tree,
            class,
            extras,
        })
    }

    /// Checks the standard shape of the tree's class: an `A1` hub is adjacent
    /// to every terminal on the other side and the terminals on its own side
    /// are leaves; `A2` is `T_{u,v}`.
    pub fn has_standard_structure(&self, terminal: &TerminalSet) -> bool {
        let adjacent_to_all = |hub: VertexId| {
            let other = hub.side.opposite();
            (1..=terminal.terminal_count(other)).all(|c| {
                let v = VertexId {
                    side: other,
                    index: c,
                };
                self.tree.edges().contains(&edge_between(hub, v))
            })
        };
        match (self.class, self.extras.as_slice()) {
            (TreeClass::A0, []) => true,
            (TreeClass::A1, [hub]) => {
                adjacent_to_all(*hub)
                    && (1..=terminal.terminal_count(hub.side)).all(|c| {
                        self.tree.degree(VertexId {
                            side: hub.side,
                            index: c,
                        }) == 1
                    })
            }
            (TreeClass::A2, [u, v]) => {
                adjacent_to_all(*u)
                    && adjacent_to_all(*v)
                    && self.tree.len() == terminal.k() + 1
                    && self.tree.edges().contains(&edge_between(*u, *v))
            }
            _ => false,
        }
    }
}

fn edge_between(p: VertexId, q: VertexId) -> Edge {
    match p.side {
        Side::X => (p.index, q.index),
        Side::Y => (q.index, p.index),
    }
}

fn extras_of(tree: &Tree, terminal: &TerminalSet) -> Vec<VertexId> {
    tree.vertices()
        .into_iter()
        .filter(|&v| !terminal.contains(v))
        .collect()
}

/// Internally disjoint trees connecting one canonical terminal set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinerWitness {
    pub terminal: TerminalSet,
    pub trees: Vec<ClassifiedTree>,
}

impl SteinerWitness {
    pub fn count(&self, class: TreeClass) -> usize {
        self.trees.iter().filter(|t| t.class == class).count()
    }
}

/// Unused internal edges, tracked per terminal on both sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualLedger {
    /// `x_free[r - 1]`: indices `c` with `x_r y_c` still unused.
    x_free: Vec<BTreeSet<usize>>,
    /// `y_free[c - 1]`: indices `r` with `x_r y_c` still unused.
    y_free: Vec<BTreeSet<usize>>,
}

impl ResidualLedger {
    pub fn full(terminal: &TerminalSet) -> Self {
        let (i, m) = (terminal.i(), terminal.y_count());
        ResidualLedger {
            x_free: vec![(1..=m).collect(); i],
            y_free: vec![(1..=i).collect(); m],
        }
    }

    pub fn consume(&mut self, (x, y): Edge) -> bool {
        let hit = self.x_free[x - 1].remove(&y);
        self.y_free[y - 1].remove(&x);
        hit
    }

    pub fn capacities(&self, side: Side) -> Vec<usize> {
        let lists = match side {
            Side::X => &self.x_free,
            Side::Y => &self.y_free,
        };
        lists.iter().map(BTreeSet::len).collect()
    }

    /// Removes and returns the lowest unused internal edge at terminal `v`.
    pub fn take_lowest(&mut self, v: VertexId) -> Option<Edge> {
        let free = match v.side {
            Side::X => &self.x_free[v.index - 1],
            Side::Y => &self.y_free[v.index - 1],
        };
        let other = *free.first()?;
        let edge = match v.side {
            Side::X => (v.index, other),
            Side::Y => (other, v.index),
        };
        self.consume(edge);
        Some(edge)
    }
}

fn spare(terminal: &TerminalSet, side: Side, n: usize) -> VertexId {
    VertexId {
        side,
        index: terminal.terminal_count(side) + n,
    }
}

/// `count` trees `T_{u,v}`, pairing the spare vertices in index order.
pub fn build_a2_trees(
    order: &BipartiteOrder,
    terminal: &TerminalSet,
    count: usize,
) -> Result<Vec<ClassifiedTree>> {
    let supply = terminal.spare_x().min(terminal.spare_y());
    if count > supply {
        return Err(Error::InvalidArgument(format!(
            "{count} A2 trees requested but only {supply} spare pairs exist"
        )));
    }
    if count > 0 && (terminal.i() == 0 || terminal.y_count() == 0) {
        return Err(Error::InvalidArgument(
            "A2 trees need terminals on both sides".into(),
        ));
    }
    debug_assert_eq!(terminal.order(), *order);
    let (i, m) = (terminal.i(), terminal.y_count());
    Ok((1..=count)
        .map(|n| {
            let u = spare(terminal, Side::X, n);
            let v = spare(terminal, Side::Y, n);
            let edges = (1..=m)
                .map(|c| (u.index, c))
                .chain((1..=i).map(|r| (r, v.index)))
                .chain(std::iter::once((u.index, v.index)))
                .collect();
            ClassifiedTree::new(Tree::new(edges), TreeClass::A2, vec![u, v])
        })
        .collect())
}

/// Builds `p` `A0` trees and then `q` `A1` trees with hubs on `side`.
///
/// Hubs are the spare vertices on `side` after the first `skip_spares`
/// (those already taken by `A2` trees). Requires `0 < i < k` and
/// `p(k-1) + q * (terminals on side) <= i(k-i)`.
pub fn build_internal_trees(
    order: &BipartiteOrder,
    terminal: &TerminalSet,
    p: usize,
    q: usize,
    side: Side,
    skip_spares: usize,
) -> Result<Vec<ClassifiedTree>> {
    debug_assert_eq!(terminal.order(), *order);
    let (k, i, m) = (terminal.k(), terminal.i(), terminal.y_count());
    if p == 0 && q == 0 {
        return Ok(Vec::new());
    }
    if i == 0 || m == 0 {
        return Err(Error::InvalidArgument(
            "internal trees need terminals on both sides".into(),
        ));
    }
    let attach = terminal.terminal_count(side);
    if p * (k - 1) + q * attach > i * m {
        return Err(Error::InvalidArgument(format!(
            "internal-edge budget exceeded: {p}*{} + {q}*{attach} > {}",
            k - 1,
            i * m
        )));
    }
    let spares = match side {
        Side::X => terminal.spare_x(),
        Side::Y => terminal.spare_y(),
    };
    if skip_spares + q > spares {
        return Err(Error::InvalidArgument(format!(
            "{q} hubs requested on {side} but only {} spare vertices remain",
            spares.saturating_sub(skip_spares)
        )));
    }

    let mut ledger = ResidualLedger::full(terminal);
    let mut out = Vec::with_capacity(p + q);
    // Balanced row degrees leave every attaching terminal at least `q`
    // residual edges.
    let rows = if q > 0 {
        side
    } else if i <= m {
        Side::X
    } else {
        Side::Y
    };
    for tree in internal_spanning_trees(terminal, p, rows)? {
        for &e in tree.edges() {
            if !ledger.consume(e) {
                return Err(Error::ConstructionBug(format!(
                    "internal edge x{}y{} used twice",
                    e.0, e.1
                )));
            }
        }
        out.push(ClassifiedTree::new(tree, TreeClass::A0, Vec::new()));
    }

    let other = side.opposite();
    for n in 1..=q {
        let hub = spare(terminal, side, skip_spares + n);
        let mut edges: Vec<Edge> = (1..=terminal.terminal_count(other))
            .map(|c| {
                edge_between(
                    hub,
                    VertexId {
                        side: other,
                        index: c,
                    },
                )
            })
            .collect();
        for s in 1..=attach {
            let leaf = VertexId { side, index: s };
            let edge = ledger.take_lowest(leaf).ok_or_else(|| {
                Error::ConstructionBug(format!("no residual internal edge left at {leaf}"))
            })?;
            edges.push(edge);
        }
        out.push(ClassifiedTree::new(
            Tree::new(edges),
            TreeClass::A1,
            vec![hub],
        ));
    }
    Ok(out)
}

/// `p` edge-disjoint spanning trees of the complete bipartite graph on the
/// terminals, with the terminals of `rows` as the packing's rows.
fn internal_spanning_trees(terminal: &TerminalSet, p: usize, rows: Side) -> Result<Vec<Tree>> {
    if p == 0 {
        return Ok(Vec::new());
    }
    let row_count = terminal.terminal_count(rows);
    let col_count = terminal.terminal_count(rows.opposite());
    let (_, trees) = shifted_trees(row_count, col_count, p)?;
    Ok(match rows {
        Side::X => trees,
        Side::Y => trees
            .into_iter()
            .map(|t| t.edges().iter().map(|&(r, c)| (c, r)).collect())
            .collect(),
    })
}

/// A maximum witness for `S_i`, sized by [`crate::connectivity::kappa_terminal`].
pub fn build_witness(order: &BipartiteOrder, k: usize, i: usize) -> Result<SteinerWitness> {
    let terminal = terminal_set(order, k, i)?;
    let breakdown = breakdown_for(&terminal);
    let trees = assemble(order, &terminal, &breakdown)?;
    if trees.len() != breakdown.kappa {
        return Err(Error::ConstructionBug(format!(
            "built {} trees, expected {}",
            trees.len(),
            breakdown.kappa
        )));
    }
    Ok(SteinerWitness { terminal, trees })
}

fn assemble(
    order: &BipartiteOrder,
    terminal: &TerminalSet,
    breakdown: &KappaBreakdown,
) -> Result<Vec<ClassifiedTree>> {
    let (i, m) = (terminal.i(), terminal.y_count());
    if i == 0 || m == 0 {
        // One-sided terminal set: every vertex of the other side is a star hub.
        let hub_side = if i == 0 { Side::X } else { Side::Y };
        let hubs = match hub_side {
            Side::X => order.a(),
            Side::Y => order.b(),
        };
        return Ok((1..=hubs)
            .map(|h| {
                let hub = VertexId {
                    side: hub_side,
                    index: h,
                };
                let edges = (1..=terminal.k())
                    .map(|c| {
                        edge_between(
                            hub,
                            VertexId {
                                side: hub_side.opposite(),
                                index: c,
                            },
                        )
                    })
                    .collect();
                ClassifiedTree::new(Tree::new(edges), TreeClass::A1, vec![hub])
            })
            .collect());
    }
    let mut trees = build_a2_trees(order, terminal, breakdown.a2)?;
    let side = breakdown.a1_side.unwrap_or(Side::X);
    trees.extend(build_internal_trees(
        order,
        terminal,
        breakdown.a0,
        breakdown.a1,
        side,
        breakdown.a2,
    )?);
    Ok(trees)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessViolation {
    BadTree,
    EdgeOverlap,
    VertexOverlap,
    WrongTerminals,
}

impl WitnessViolation {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessViolation::BadTree => "bad-tree",
            WitnessViolation::EdgeOverlap => "edge-overlap",
            WitnessViolation::VertexOverlap => "vertex-overlap",
            WitnessViolation::WrongTerminals => "wrong-terminals",
        }
    }
}

impl fmt::Display for WitnessViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A violation and the (0-based) trees it concerns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFinding {
    pub kind: WitnessViolation,
    pub trees: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WitnessReport {
    pub findings: Vec<WitnessFinding>,
}

impl WitnessReport {
    pub fn is_valid(&self) -> bool {
        self.findings.is_empty()
    }

    pub fn first(&self) -> Option<WitnessViolation> {
        self.findings.first().map(|f| f.kind)
    }
}

/// Checks every tree, then every pair: sharing exactly the terminal set, and
/// edge-disjoint. A pair sharing a non-terminal is reported as
/// `vertex-overlap` even if it also shares edges.
pub fn verify_witness(order: &BipartiteOrder, witness: &SteinerWitness) -> WitnessReport {
    let terminal = &witness.terminal;
    let required = terminal.vertices();
    let mut findings = Vec::new();

    for (n, ct) in witness.trees.iter().enumerate() {
        let report = validate_tree(order, &required, &ct.tree);
        let kind = match report.first() {
            Some(TreeViolation::MissingTerminal) => Some(WitnessViolation::WrongTerminals),
            Some(_) => Some(WitnessViolation::BadTree),
            None => {
                let extras = extras_of(&ct.tree, terminal);
                (extras != ct.extras || TreeClass::from_extras(&extras) != Some(ct.class))
                    .then_some(WitnessViolation::BadTree)
            }
        };
        if let Some(kind) = kind {
            findings.push(WitnessFinding {
                kind,
                trees: vec![n],
            });
        }
    }

    let edge_sets: Vec<HashSet<Edge>> = witness
        .trees
        .iter()
        .map(|t| t.tree.edges().iter().copied().collect())
        .collect();
    let vertex_sets: Vec<BTreeSet<VertexId>> =
        witness.trees.iter().map(|t| t.tree.vertices()).collect();
    for p in 0..witness.trees.len() {
        for q in p + 1..witness.trees.len() {
            if vertex_sets[p]
                .intersection(&vertex_sets[q])
                .any(|v| !terminal.contains(*v))
            {
                findings.push(WitnessFinding {
                    kind: WitnessViolation::VertexOverlap,
                    trees: vec![p, q],
                });
            }
            if !edge_sets[p].is_disjoint(&edge_sets[q]) {
                findings.push(WitnessFinding {
                    kind: WitnessViolation::EdgeOverlap,
                    trees: vec![p, q],
                });
            }
        }
    }
    WitnessReport { findings }
}
