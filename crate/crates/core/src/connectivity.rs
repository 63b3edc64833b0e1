//! Closed-form `κ_k(K_{a,b})` and the per-terminal-set counts behind it.
//!
//! For a canonical terminal set `S_i` a maximum family of internally
//! disjoint trees can be taken to consist of three shapes:
//!
//! * `A2`: one spare vertex from each side, `T_{u,v}`; uses no edge inside `S_i`.
//! * `A1`: one spare hub adjacent to every terminal on the other side; each
//!   terminal on the hub's side hangs off one edge inside `S_i`.
//! * `A0`: a spanning tree of the complete bipartite graph on `S_i` itself,
//!   `k - 1` internal edges.
//!
//! The counts are filled greedily in that order, and the `A0` count is
//! whatever the remaining `i(k-i)` internal edges allow.

use crate::bipartite::{check_k, terminal_set, BipartiteOrder, Side, TerminalSet};
use crate::error::{Error, Result};

/// `κ_k(K_n) = n - ⌈k/2⌉`.
pub fn kappa_complete(n: usize, k: usize) -> Result<usize> {
    if k < 2 || k > n {
        return Err(Error::InvalidArgument(format!("k = {k} outside [2, {n}]")));
    }
    Ok(n - k.div_ceil(2))
}

/// Tree-shape counts for one terminal set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KappaBreakdown {
    pub a2: usize,
    pub a1: usize,
    /// Side holding the `A1` hubs; `None` when there are no `A1` trees.
    pub a1_side: Option<Side>,
    pub a0: usize,
    pub kappa: usize,
}

impl KappaBreakdown {
    /// Internal edges consumed by one `A1` tree: one per terminal on the hub's side.
    pub fn a1_cost(&self, terminal: &TerminalSet) -> usize {
        self.a1_side.map_or(0, |s| terminal.terminal_count(s))
    }

    /// Internal edges consumed by all `A0` and `A1` trees.
    pub fn internal_edges_used(&self, terminal: &TerminalSet) -> usize {
        self.a0 * (terminal.k() - 1) + self.a1 * self.a1_cost(terminal)
    }
}

pub(crate) fn breakdown_for(terminal: &TerminalSet) -> KappaBreakdown {
    let order = terminal.order();
    let (k, i, m) = (terminal.k(), terminal.i(), terminal.y_count());
    if i == 0 {
        return KappaBreakdown {
            a2: 0,
            a1: order.a(),
            a1_side: Some(Side::X),
            a0: 0,
            kappa: order.a(),
        };
    }
    if m == 0 {
        return KappaBreakdown {
            a2: 0,
            a1: order.b(),
            a1_side: Some(Side::Y),
            a0: 0,
            kappa: order.b(),
        };
    }

    let (spare_x, spare_y) = (terminal.spare_x(), terminal.spare_y());
    let a2 = spare_x.min(spare_y);
    let (side, a1) = if spare_y >= spare_x {
        (Side::Y, (spare_y - spare_x).min(i))
    } else {
        (Side::X, (spare_x - spare_y).min(m))
    };
    let cost = terminal.terminal_count(side);
    let a0 = (i * m - a1 * cost) / (k - 1);
    KappaBreakdown {
        a2,
        a1,
        a1_side: (a1 > 0).then_some(side),
        a0,
        kappa: a2 + a1 + a0,
    }
}

/// `κ(S_i)` with its `A2`/`A1`/`A0` split.
pub fn kappa_terminal(order: &BipartiteOrder, k: usize, i: usize) -> Result<KappaBreakdown> {
    let terminal = terminal_set(order, k, i)?;
    Ok(breakdown_for(&terminal))
}

/// `κ_k(K_{a,b})` in closed form.
pub fn kappa_bipartite(order: &BipartiteOrder, k: usize) -> Result<usize> {
    check_k(order, k)?;
    let (a, b, k) = (order.a() as i64, order.b() as i64, k as i64);
    if k <= b - a + 2 {
        return Ok(a as usize);
    }
    let s = a - b + k;
    let value = if s % 2 == 1 {
        (a + b - k + 1) / 2 + (s - 1) * (b - a + k - 1) / (4 * (k - 1))
    } else {
        (a + b - k) / 2 + s * (b - a + k) / (4 * (k - 1))
    };
    Ok(value as usize)
}

/// Smallest `i` whose `κ(S_i)` attains `κ_k`.
pub fn min_terminal_index(order: &BipartiteOrder, k: usize) -> Result<usize> {
    let target = kappa_bipartite(order, k)?;
    TerminalSet::index_range(order, k)
        .find(|&i| {
            kappa_terminal(order, k, i)
                .map(|bd| bd.kappa == target)
                .unwrap_or(false)
        })
        .ok_or_else(|| {
            Error::ConstructionBug(format!(
                "no terminal set attains κ_{k} = {target} for K_{{{},{}}}",
                order.a(),
                order.b()
            ))
        })
}
