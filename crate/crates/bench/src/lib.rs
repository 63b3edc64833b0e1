//! Shared inputs for the `bipconn-core` benchmarks.

use bipconn_core::{min_terminal_index, normalize, BipartiteOrder};

/// Square and skewed instance sizes used across benchmark groups.
pub const SIZES: [(usize, usize); 4] = [(10, 10), (20, 30), (40, 40), (25, 100)];

/// An order, a terminal count and a minimizing terminal index for a
/// mid-range `k`.
pub fn witness_case(a: usize, b: usize) -> (BipartiteOrder, usize, usize) {
    let order = normalize(a, b).expect("benchmark sizes are positive");
    let k = (a + b) / 2;
    let i = min_terminal_index(&order, k).expect("k is in range");
    (order, k, i)
}
