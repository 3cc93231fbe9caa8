//! Brute-force ground truth for small sizes.
//!
//! These searches share nothing with the constructions: they enumerate sign
//! vectors or cell placements directly and are only as clever as the pruning
//! rules documented on each function.

use crate::checker::{verify_same_row_pairs, verify_sma};
use crate::error::{Error, Result};
use crate::grid::SignedArray;

/// Largest `m` accepted by [`search_n2`].
pub const N2_LIMIT: usize = 30;
/// Largest cell count accepted by [`search_tiny`].
pub const CELL_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub found: bool,
    pub witness: Option<SignedArray>,
    pub nodes_explored: u64,
}

/// Searches sign vectors `s ∈ {±1}^m` with `Σ s_i·i = 0`, `+` before `−`
/// at each position, and returns the first hit as an `m × 2` array with rows
/// `(s_i·i, −s_i·i)`.
///
/// A branch is cut only when the remaining indices cannot bring the partial
/// sum back to zero, so the search is exhaustive.
pub fn search_n2(m: usize) -> Result<SearchOutcome> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    if m > N2_LIMIT {
        return Err(Error::SearchTooLarge { cells: m, limit: N2_LIMIT });
    }

    fn dfs(i: usize, m: usize, sum: i64, signs: &mut Vec<i8>, nodes: &mut u64) -> bool {
        *nodes += 1;
        if i == m {
            return sum == 0;
        }
        let value = i as i64 + 1;
        // indices value..=m remain
        let rest = (value + m as i64) * (m as i64 - value + 1) / 2;
        if sum.abs() > rest {
            return false;
        }
        for s in [1i8, -1] {
            signs.push(s);
            if dfs(i + 1, m, sum + s as i64 * value, signs, nodes) {
                return true;
            }
            signs.pop();
        }
        false
    }

    let mut signs = Vec::with_capacity(m);
    let mut nodes = 0;
    let found = dfs(0, m, 0, &mut signs, &mut nodes);
    let witness = found.then(|| {
        let entries = signs
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| {
                let v = s as i64 * (i as i64 + 1);
                [v, -v]
            })
            .collect();
        SignedArray::new(m, 2, entries).expect("m x 2 entries")
    });
    Ok(SearchOutcome { found, witness, nodes_explored: nodes })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pruning {
    /// Partial-sum bounds, same-row bookkeeping and the negation symmetry.
    Full,
    /// Plain enumeration of every placement, checked only when complete.
    Off,
}

struct Tiny {
    m: usize,
    n: usize,
    half: i64,
    same_row: bool,
    prune: bool,
    order: Vec<i64>,
    used: Vec<bool>,
    row_of: Vec<usize>,
    grid: Vec<i64>,
    row_sum: Vec<i64>,
    col_sum: Vec<i64>,
    unmatched: Vec<usize>,
    nodes: u64,
}

impl Tiny {
    fn idx(&self, v: i64) -> usize {
        (v + self.half) as usize
    }

    /// Whether `remaining` unused values can move a partial sum of `sum` to zero.
    fn reachable(&self, sum: i64, remaining: usize) -> bool {
        if remaining == 0 {
            return sum == 0;
        }
        if sum == 0 {
            return true;
        }
        let want_positive = sum < 0;
        let mut best = 0i64;
        let mut taken = 0;
        for &v in &self.order {
            if taken == remaining {
                break;
            }
            if (v > 0) == want_positive && !self.used[self.idx(v)] {
                best += v.abs();
                taken += 1;
            }
        }
        best >= sum.abs()
    }

    fn complete_ok(&self) -> bool {
        let a = SignedArray::new(self.m, self.n, self.grid.clone()).expect("m x n grid");
        verify_sma(&a).passed() && (!self.same_row || verify_same_row_pairs(&a).passed())
    }

    fn dfs(&mut self, cell: usize) -> bool {
        self.nodes += 1;
        if cell == self.m * self.n {
            return self.complete_ok();
        }
        let (i, j) = (cell / self.n, cell % self.n);
        let row_rem = self.n - 1 - j;
        let col_rem = self.m - 1 - i;
        for k in 0..self.order.len() {
            let v = self.order[k];
            if self.used[self.idx(v)] {
                continue;
            }
            let partner_placed = self.used[self.idx(-v)];
            if self.prune {
                // A solution and its negation are equivalent; keep the one
                // where +half is placed before -half.
                if v == -self.half && !partner_placed {
                    continue;
                }
                if self.same_row && partner_placed && self.row_of[self.idx(-v)] != i {
                    continue;
                }
            }

            let slot = self.idx(v);
            self.used[slot] = true;
            self.row_of[slot] = i;
            self.grid[cell] = v;
            self.row_sum[i] += v;
            self.col_sum[j] += v;
            let matched = partner_placed && self.row_of[self.idx(-v)] == i;
            if matched {
                self.unmatched[i] -= 1;
            } else {
                self.unmatched[i] += 1;
            }

            let viable = !self.prune
                || (self.reachable(self.row_sum[i], row_rem)
                    && self.reachable(self.col_sum[j], col_rem)
                    && (!self.same_row || self.unmatched[i] <= row_rem));
            if viable && self.dfs(cell + 1) {
                return true;
            }

            if matched {
                self.unmatched[i] += 1;
            } else {
                self.unmatched[i] -= 1;
            }
            self.row_sum[i] -= v;
            self.col_sum[j] -= v;
            self.used[slot] = false;
        }
        false
    }
}

/// Exhaustive backtracking for a tight `SMA(m, n)` with `m·n ≤ 12`.
///
/// Cells are filled row-major, trying values largest magnitude first.
pub fn search_tiny(m: usize, n: usize, require_same_row: bool) -> Result<SearchOutcome> {
    search_tiny_with(m, n, require_same_row, Pruning::Full)
}

pub fn search_tiny_with(m: usize, n: usize, require_same_row: bool, pruning: Pruning) -> Result<SearchOutcome> {
    if m == 0 || n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("search needs m >= 1 and even n >= 2, got ({m}, {n})")));
    }
    let cells = m * n;
    if cells > CELL_LIMIT {
        return Err(Error::SearchTooLarge { cells, limit: CELL_LIMIT });
    }
    let half = (cells / 2) as i64;
    let order: Vec<i64> = (1..=half).rev().flat_map(|x| [x, -x]).collect();
    let slots = 2 * half as usize + 1;
    let mut state = Tiny {
        m,
        n,
        half,
        same_row: require_same_row,
        prune: pruning == Pruning::Full,
        order,
        used: vec![false; slots],
        row_of: vec![usize::MAX; slots],
        grid: vec![0; cells],
        row_sum: vec![0; m],
        col_sum: vec![0; n],
        unmatched: vec![0; m],
        nodes: 0,
    };
    // 0 is never a legal value here; mark it used so it is never a partner.
    state.used[half as usize] = true;
    let found = state.dfs(0);
    let witness = found.then(|| SignedArray::new(m, n, state.grid.clone()).expect("m x n grid"));
    Ok(SearchOutcome { found, witness, nodes_explored: state.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n2_examples() {
        let three = search_n2(3).unwrap();
        assert!(three.found);
        assert_eq!(three.witness.unwrap().to_rows(), vec![vec![1, -1], vec![2, -2], vec![-3, 3]]);
        assert!(!search_n2(5).unwrap().found);
        assert!(search_n2(8).unwrap().found);
        assert!(!search_n2(1).unwrap().found);
        assert!(!search_n2(2).unwrap().found);
    }

    #[test]
    fn n2_guards() {
        assert!(matches!(search_n2(31), Err(Error::SearchTooLarge { .. })));
        assert!(search_n2(0).is_err());
    }

    #[test]
    fn n2_witness_is_lexicographically_first() {
        // brute-force all vectors in + before - order
        for m in 3..=12 {
            let first = (0u32..1 << m).find(|mask| {
                (0..m).map(|i| if mask >> (m - 1 - i) & 1 == 0 { i as i64 + 1 } else { -(i as i64 + 1) }).sum::<i64>() == 0
            });
            let got = search_n2(m).unwrap();
            assert_eq!(got.found, first.is_some(), "m = {m}");
            if let (Some(mask), Some(w)) = (first, got.witness) {
                let signs: Vec<i64> = (0..m).map(|i| if mask >> (m - 1 - i) & 1 == 0 { 1 } else { -1 }).collect();
                let col0: Vec<i64> = w.column(0).collect();
                let expected: Vec<i64> = signs.iter().enumerate().map(|(i, s)| s * (i as i64 + 1)).collect();
                assert_eq!(col0, expected, "m = {m}");
            }
        }
    }

    #[test]
    fn tiny_examples() {
        assert!(!search_tiny(2, 4, true).unwrap().found);
        let w = search_tiny(3, 4, true).unwrap();
        assert!(w.found);
        let w = w.witness.unwrap();
        assert!(verify_sma(&w).passed() && verify_same_row_pairs(&w).passed());
        let free = search_tiny(2, 4, false).unwrap();
        assert!(free.found);
        assert!(verify_sma(&free.witness.unwrap()).passed());
    }

    #[test]
    fn tiny_guards() {
        assert!(matches!(search_tiny(4, 4, false), Err(Error::SearchTooLarge { cells: 16, .. })));
        assert!(search_tiny(3, 3, false).is_err());
        assert!(search_tiny(0, 2, false).is_err());
    }

    #[test]
    fn pruning_is_sound() {
        for (m, n) in [(2, 2), (2, 4), (3, 2), (1, 2), (1, 4)] {
            for same_row in [false, true] {
                let pruned = search_tiny_with(m, n, same_row, Pruning::Full).unwrap();
                let plain = search_tiny_with(m, n, same_row, Pruning::Off).unwrap();
                assert_eq!(pruned.found, plain.found, "({m}, {n}, {same_row})");
                assert!(pruned.nodes_explored <= plain.nodes_explored);
            }
        }
    }

    #[test]
    fn tiny_feasibility_frontier() {
        // n = 2: exists iff m ≡ 0, 3 (mod 4)
        for m in 1..=6 {
            let got = search_tiny(m, 2, true).unwrap().found;
            assert_eq!(got, matches!(m % 4, 0 | 3), "m = {m}");
        }
        assert!(!search_tiny(2, 2, false).unwrap().found);
        assert!(!search_tiny(2, 6, false).unwrap().found);
        assert!(!search_tiny(1, 12, false).unwrap().found);
    }
}
