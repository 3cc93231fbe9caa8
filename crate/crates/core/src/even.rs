//! Shiftable `SMA(m, n)` with `±x` in one row, for all even `m, n ≥ 4`.
//!
//! Four base blocks cover `m, n ∈ {4, 6}`. Wider arrays append a shifted
//! `m × 4` base block on the right; taller arrays append a shifted `4 × n`
//! array below. Shifting a shiftable block keeps its row and column sums at
//! zero, so each step stays magic.
//!
//! The published 6 × 6 block is not shiftable as printed: its first two
//! columns hold four entries of one sign and two of the other. The block used
//! here negates the pairs `±2, ±3, ±5` in rows 2–4 of those columns, which
//! balances the signs and leaves every sum and every same-row pair intact.

use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::grid::SignedArray;

/// One of the four starting blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseBlock {
    pub dims: (usize, usize),
    fixture: Fixture,
}

/// Rows (0-based) of the published 6 × 6 block whose column 1–2 pair is negated.
const BALANCE_ROWS_6X6: [usize; 3] = [1, 2, 3];

impl BaseBlock {
    pub const ALL: [BaseBlock; 4] = [
        BaseBlock { dims: (4, 4), fixture: Fixture::Fig2Ssma4x4 },
        BaseBlock { dims: (6, 4), fixture: Fixture::Fig2Ssma6x4 },
        BaseBlock { dims: (4, 6), fixture: Fixture::Fig3Ssma4x6 },
        BaseBlock { dims: (6, 6), fixture: Fixture::Fig3Ssma6x6 },
    ];

    pub fn get(m: usize, n: usize) -> Option<BaseBlock> {
        BaseBlock::ALL.into_iter().find(|b| b.dims == (m, n))
    }

    pub fn array(&self) -> SignedArray {
        let mut a = self.fixture.load();
        if self.dims == (6, 6) {
            for i in BALANCE_ROWS_6X6 {
                for j in 0..2 {
                    let e = a.get(i, j).expect("in range");
                    a.set(i, j, -e);
                }
            }
        }
        a
    }
}

pub fn build_even(m: usize, n: usize) -> Result<SignedArray> {
    if m < 4 || n < 4 || !m.is_multiple_of(2) || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("even-even construction needs even m, n >= 4, got ({m}, {n})")));
    }
    if m >= 8 {
        let top = build_even(m - 4, n)?;
        let bottom = build_even(4, n)?.shift(((m - 4) * n / 2) as u64)?;
        return top.vstack(&bottom);
    }
    // m is 4 or 6: grow to the right four columns at a time.
    let start = if n.is_multiple_of(4) { 4 } else { 6 };
    let tail = BaseBlock::get(m, 4).expect("m is 4 or 6").array();
    let mut acc = BaseBlock::get(m, start).expect("base block").array();
    for width in (start..n).step_by(4) {
        acc = acc.hstack(&tail.shift((m * width / 2) as u64)?)?;
    }
    Ok(acc)
}
