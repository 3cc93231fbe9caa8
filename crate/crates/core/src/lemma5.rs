//! Five-row arrays `SMA(5, n)` for every even `n ≥ 4`, with `±x` in one row.
//!
//! Starting from the three-row array, a few value exchanges inside rows one
//! and two leave every row sum at zero but give each column a small sum of
//! `±1` (or `±2`). Two extra rows over the magnitudes `3n/2 + 1 ..= 3n/2 + n`
//! then cancel those column sums.

use std::collections::BTreeMap;

use crate::checker::{column_sums, ColumnSumProfile};
use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::grid::SignedArray;
use crate::lemma3::build_sma3;

/// Value exchanges applied inside rows one and two of the three-row array.
///
/// Each pair `(u, v)` swaps the cells holding the signed values `u` and `v`
/// in that row, so exchanging both signs of a magnitude takes two pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SwitchPlan {
    pub row1_swaps: Vec<(i64, i64)>,
    pub row2_swaps: Vec<(i64, i64)>,
}

impl SwitchPlan {
    /// `n ≡ 0 (mod 4)`: exchange `±(3i+1)` with `±(3i+2)` in row one.
    pub fn case1(n: usize) -> Result<Self> {
        if n < 4 || !n.is_multiple_of(4) {
            return Err(Error::InvalidParameter(format!("case 1 switch needs n ≡ 0 (mod 4), n >= 4, got {n}")));
        }
        let last = (n as i64 - 4) / 4;
        let row1_swaps = (0..=last)
            .flat_map(|i| [(3 * i + 1, 3 * i + 2), (-(3 * i + 1), -(3 * i + 2))])
            .collect();
        Ok(SwitchPlan { row1_swaps, row2_swaps: Vec::new() })
    }

    /// `n ≡ 2 (mod 4)`, `n ≥ 10`: the case-1 exchanges up to `i = (n-10)/4`,
    /// a positive-only exchange of `3(n-6)/4 + 1` and `3(n-6)/4 + 2`, and
    /// `±(3n+2)/4` with `±(3n+10)/4` in row two.
    pub fn case2(n: usize) -> Result<Self> {
        if n < 10 || n % 4 != 2 {
            return Err(Error::InvalidParameter(format!("case 2 switch needs n ≡ 2 (mod 4), n >= 10, got {n}")));
        }
        let n = n as i64;
        let mut row1_swaps: Vec<(i64, i64)> = (0..=(n - 10) / 4)
            .flat_map(|i| [(3 * i + 1, 3 * i + 2), (-(3 * i + 1), -(3 * i + 2))])
            .collect();
        let t = 3 * (n - 6) / 4;
        row1_swaps.push((t + 1, t + 2));
        let (lo, hi) = ((3 * n + 2) / 4, (3 * n + 10) / 4);
        Ok(SwitchPlan { row1_swaps, row2_swaps: vec![(lo, hi), (-lo, -hi)] })
    }

    pub fn apply(&self, a: &SignedArray) -> Result<SignedArray> {
        let mut out = a.clone();
        for (row, swaps) in [(0, &self.row1_swaps), (1, &self.row2_swaps)] {
            for &(u, v) in swaps {
                let find = |value: i64| {
                    out.row(row)
                        .iter()
                        .position(|&e| e == value)
                        .ok_or(Error::SwapMissing { row: row + 1, value })
                };
                let (cu, cv) = (find(u)?, find(v)?);
                out.set(row, cu, v);
                out.set(row, cv, u);
            }
        }
        Ok(out)
    }
}

fn check_three_rows(a: &SignedArray, n: usize) -> Result<()> {
    if a.dims() != (3, n) {
        return Err(Error::InvalidParameter(format!("expected a 3x{n} array, got {}x{}", a.rows(), a.cols())));
    }
    Ok(())
}

pub fn switch_case1(a: &SignedArray, n: usize) -> Result<SignedArray> {
    let plan = SwitchPlan::case1(n)?;
    check_three_rows(a, n)?;
    plan.apply(a)
}

pub fn switch_case2(a: &SignedArray, n: usize) -> Result<SignedArray> {
    let plan = SwitchPlan::case2(n)?;
    check_three_rows(a, n)?;
    plan.apply(a)
}

/// Entries of the two appended rows, one `(row4, row5)` pair per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionAssignment {
    pub fills: Vec<(i64, i64)>,
}

impl CompletionAssignment {
    /// Assigns magnitudes `base+1 ..= base+n` so each column's two new
    /// entries sum to minus its profile entry.
    ///
    /// Columns with sums `+d` and `-d` are matched left to right. A matched
    /// pair gets magnitudes `(x, x+d)`: `+x` over `-(x+d)` in the `+d`
    /// column and `-x` over `+(x+d)` in the `-d` column. Pairs are served in
    /// increasing `d`, each `d` in blocks of `d` pairs over `2d` consecutive
    /// magnitudes. Zero columns are filled in blocks of four with `±x`
    /// stacked vertically under the sign pattern `+ - - +`; those columns
    /// keep the sums at zero but do not keep `±x` in one row.
    pub fn plan(profile: &ColumnSumProfile, base: i64) -> Result<Self> {
        let mut by_value: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (j, &s) in profile.sums.iter().enumerate() {
            by_value.entry(s).or_default().push(j);
        }

        let mut fills = vec![(0i64, 0i64); profile.len()];
        let mut next = base + 1;
        let positives: Vec<i64> = by_value.keys().copied().filter(|&d| d > 0).collect();
        for d in positives {
            let plus = &by_value[&d];
            let minus = by_value.get(&-d).map_or(&[][..], Vec::as_slice);
            if plus.len() != minus.len() {
                return Err(Error::UncoverableProfile(format!(
                    "{} columns sum to {d} but {} sum to {}",
                    plus.len(),
                    minus.len(),
                    -d
                )));
            }
            let block = d as usize;
            if !plus.len().is_multiple_of(block) {
                return Err(Error::UncoverableProfile(format!(
                    "{} column pairs with sum ±{d} do not fill blocks of {d}",
                    plus.len()
                )));
            }
            for (chunk_p, chunk_m) in plus.chunks(block).zip(minus.chunks(block)) {
                for (t, (&jp, &jm)) in chunk_p.iter().zip(chunk_m).enumerate() {
                    let x = next + t as i64;
                    fills[jp] = (x, -(x + d));
                    fills[jm] = (-x, x + d);
                }
                next += 2 * d;
            }
        }
        if let Some(neg) = by_value.keys().find(|&&d| d < 0 && !by_value.contains_key(&-d)) {
            return Err(Error::UncoverableProfile(format!("columns sum to {neg} with no opposite")));
        }

        let zeros = by_value.get(&0).map_or(&[][..], Vec::as_slice);
        if !zeros.len().is_multiple_of(4) {
            return Err(Error::UncoverableProfile(format!(
                "{} zero-sum columns cannot be balanced in blocks of four",
                zeros.len()
            )));
        }
        for chunk in zeros.chunks(4) {
            for (t, (&j, s)) in chunk.iter().zip([1, -1, -1, 1]).enumerate() {
                let x = next + t as i64;
                fills[j] = (s * x, -s * x);
            }
            next += 4;
        }
        Ok(CompletionAssignment { fills })
    }

    pub fn rows(&self) -> SignedArray {
        let n = self.fills.len();
        let mut entries = Vec::with_capacity(2 * n);
        entries.extend(self.fills.iter().map(|f| f.0));
        entries.extend(self.fills.iter().map(|f| f.1));
        SignedArray::new(2, n, entries).expect("2 x n entries")
    }
}

/// Appends two rows to `b` so the result has zero row and column sums.
pub fn complete_two_rows(b: &SignedArray, profile: &ColumnSumProfile) -> Result<SignedArray> {
    if profile.len() != b.cols() || *profile != column_sums(b) {
        return Err(Error::UncoverableProfile("profile does not match the array's column sums".into()));
    }
    if let Some(i) = b.row_sums().iter().position(|&s| s != 0) {
        return Err(Error::UncoverableProfile(format!("row {} of the base array does not sum to zero", i + 1)));
    }
    if !(b.rows() * b.cols()).is_multiple_of(2) {
        return Err(Error::InvalidParameter("base array must have an even cell count".into()));
    }
    let base = (b.rows() * b.cols() / 2) as i64;
    let fill = CompletionAssignment::plan(profile, base)?;
    b.vstack(&fill.rows())
}

pub fn build_sma5(n: usize) -> Result<SignedArray> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("SMA(5, n) with same-row pairs needs even n >= 4, got {n}")));
    }
    let b = match n {
        4 => return Ok(Fixture::Fig5Sma5x4.load()),
        6 => return Ok(Fixture::Fig5Sma5x6.load()),
        _ if n.is_multiple_of(4) => switch_case1(&build_sma3(n)?, n)?,
        _ => switch_case2(&build_sma3(n)?, n)?,
    };
    complete_two_rows(&b, &column_sums(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::{verify_same_row_pairs, verify_shiftable, verify_sma};

    fn counts(p: &ColumnSumProfile) -> [usize; 4] {
        [p.count(1), p.count(-1), p.count(2), p.count(-2)]
    }

    #[test]
    fn case1_matches_appendix_b() {
        let b = switch_case1(&build_sma3(12).unwrap(), 12).unwrap();
        assert_eq!(b.row(0), &[2, -2, 1, -1, 5, -5, 4, -4, 8, -8, 7, -7]);
        assert_eq!(b, Fixture::Appendix1B3x12.load());
        assert_eq!(column_sums(&b).sums, vec![1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, 1]);
    }

    #[test]
    fn case1_on_small_array() {
        let b = switch_case1(&Fixture::Fig1Sma3x4.load(), 4).unwrap();
        assert_eq!(b.row(0), &[2, -2, 1, -1]);
        assert_eq!(column_sums(&b).sums, vec![1, -1, -1, 1]);
    }

    #[test]
    fn switching_twice_restores() {
        let a = build_sma3(16).unwrap();
        let once = switch_case1(&a, 16).unwrap();
        assert_ne!(once, a);
        assert_eq!(switch_case1(&once, 16).unwrap(), a);
    }

    #[test]
    fn case2_matches_appendix_b() {
        let b = switch_case2(&build_sma3(10).unwrap(), 10).unwrap();
        assert_eq!(b, Fixture::Appendix2B3x10.load());
        assert_eq!(column_sums(&b).sums, vec![1, -1, -1, 1, 1, -2, -1, 2, 2, -2]);
    }

    #[test]
    fn case2_profile_n14() {
        let b = switch_case2(&build_sma3(14).unwrap(), 14).unwrap();
        assert_eq!(b.row_sums(), vec![0, 0, 0]);
        assert_eq!(counts(&column_sums(&b)), [5, 5, 2, 2]);
    }

    #[test]
    fn switches_permute_entries_and_keep_row_sums() {
        for n in (8..=60).step_by(2) {
            let a = build_sma3(n).unwrap();
            let b = if n % 4 == 0 { switch_case1(&a, n) } else { switch_case2(&a, n) }.unwrap();
            let (mut x, mut y) = (a.entries().to_vec(), b.entries().to_vec());
            x.sort_unstable();
            y.sort_unstable();
            assert_eq!(x, y);
            assert_eq!(b.row_sums(), vec![0, 0, 0]);
        }
    }

    #[test]
    fn switch_errors() {
        let a = build_sma3(12).unwrap();
        assert!(switch_case1(&a, 10).is_err());
        assert!(switch_case2(&a, 12).is_err());
        assert!(switch_case2(&build_sma3(6).unwrap(), 6).is_err());
        assert!(switch_case1(&a, 8).is_err());
    }

    #[test]
    fn tampered_switch_is_detected() {
        let a = build_sma3(14).unwrap();
        let mut plan = SwitchPlan::case2(14).unwrap();
        plan.row2_swaps.pop();
        let b = plan.apply(&a).unwrap();
        let p = column_sums(&b);
        assert!(b.row_sums().iter().any(|&s| s != 0) || counts(&p) != [5, 5, 2, 2]);
    }

    #[test]
    fn completion_reproduces_appendix_arrays() {
        let b12 = Fixture::Appendix1B3x12.load();
        assert_eq!(complete_two_rows(&b12, &column_sums(&b12)).unwrap(), Fixture::Appendix1Sma5x12.load());
        let b10 = Fixture::Appendix2B3x10.load();
        assert_eq!(complete_two_rows(&b10, &column_sums(&b10)).unwrap(), Fixture::Appendix2Sma5x10.load());
    }

    #[test]
    fn completion_of_zero_profile() {
        let a = build_sma3(8).unwrap();
        let c = complete_two_rows(&a, &column_sums(&a)).unwrap();
        assert!(verify_sma(&c).passed());
        let tail = SignedArray::new(2, 8, c.entries()[24..].to_vec()).unwrap();
        assert!(verify_shiftable(&tail).unwrap().passed());
        // ten zero columns do not split into blocks of four
        let a10 = build_sma3(10).unwrap();
        assert!(matches!(complete_two_rows(&a10, &column_sums(&a10)), Err(Error::UncoverableProfile(_))));
    }

    #[test]
    fn completion_rejects_bad_profiles() {
        let b = Fixture::Appendix1B3x12.load();
        let mut p = column_sums(&b);
        p.sums[0] = 3;
        assert!(complete_two_rows(&b, &p).is_err());
        assert!(CompletionAssignment::plan(&ColumnSumProfile { sums: vec![-1, 1, 0] }, 3).is_err());
        assert!(CompletionAssignment::plan(&ColumnSumProfile { sums: vec![1, 1, -2] }, 6).is_err());
        assert!(CompletionAssignment::plan(&ColumnSumProfile { sums: vec![2, -2] }, 6).is_err());
    }

    #[test]
    fn completion_block_is_shiftable_and_cancels_profile() {
        for n in (8..=40).step_by(2) {
            let a = build_sma3(n).unwrap();
            let b = if n % 4 == 0 { switch_case1(&a, n) } else { switch_case2(&a, n) }.unwrap();
            let p = column_sums(&b);
            let fill = CompletionAssignment::plan(&p, 3 * n as i64 / 2).unwrap().rows();
            assert!(verify_shiftable(&fill).unwrap().passed(), "n = {n}");
            let tail = column_sums(&fill);
            for (s, t) in p.sums.iter().zip(&tail.sums) {
                assert_eq!(s + t, 0);
            }
        }
    }

    #[test]
    fn build_examples() {
        assert_eq!(build_sma5(4).unwrap(), Fixture::Fig5Sma5x4.load());
        assert_eq!(build_sma5(6).unwrap(), Fixture::Fig5Sma5x6.load());
        assert_eq!(build_sma5(12).unwrap(), Fixture::Appendix1Sma5x12.load());
        assert_eq!(build_sma5(10).unwrap(), Fixture::Appendix2Sma5x10.load());
        assert!(build_sma5(2).is_err());
        assert!(build_sma5(7).is_err());
    }

    #[test]
    fn sweep_is_valid() {
        for n in (4..=100).step_by(2) {
            let c = build_sma5(n).unwrap();
            assert_eq!(c.dims(), (5, n));
            assert!(verify_sma(&c).passed(), "n = {n}");
            assert!(verify_same_row_pairs(&c).passed(), "n = {n}");
        }
    }
}
