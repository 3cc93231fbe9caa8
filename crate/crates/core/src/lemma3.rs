//! Three-row arrays `SMA(3, n)` for every even `n`, with `±x` in one row.
//!
//! For `n = 2k ≥ 6` rows one and three follow closed forms indexed by
//! `p_j = ⌈j/2⌉`; row two is minus their sum, so every column sums to zero by
//! construction. `n = 2` and `n = 4` come from the published small arrays.

use crate::error::{Error, Result};
use crate::fixtures::Fixture;
use crate::grid::SignedArray;

/// Parameters of the closed-form three-row array with `n = 2k` columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lemma3Params {
    k: usize,
}

impl Lemma3Params {
    pub fn new(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!(
                "closed-form three-row array needs n = 2k >= 6, got k = {k}"
            )));
        }
        Ok(Lemma3Params { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn cols(&self) -> usize {
        2 * self.k
    }

    fn check(&self, j: usize) -> Result<()> {
        if j == 0 || j > self.cols() {
            return Err(Error::IndexOutOfRange { index: j, max: self.cols() });
        }
        Ok(())
    }

    /// `⌈j/2⌉` for 1-based column `j`.
    pub fn p(&self, j: usize) -> usize {
        j.div_ceil(2)
    }

    pub fn row1(&self, j: usize) -> Result<i64> {
        self.check(j)?;
        let p = self.p(j) as i64;
        Ok(match j % 4 {
            0 => -(3 * p - 2) / 2,
            1 => (3 * p - 1) / 2,
            2 => -(3 * p - 1) / 2,
            _ => (3 * p - 2) / 2,
        })
    }

    pub fn row3(&self, j: usize) -> Result<i64> {
        self.check(j)?;
        let k = self.k as i64;
        if j == 1 {
            return Ok(-3 * k);
        }
        if j == self.cols() {
            return Ok(3 * k);
        }
        let p = self.p(j) as i64;
        Ok(match j % 4 {
            0 | 2 => -3 * (k - p),
            _ => 3 * (k - p + 1),
        })
    }

    pub fn build(&self) -> SignedArray {
        let n = self.cols();
        let mut entries = vec![0i64; 3 * n];
        for j in 1..=n {
            let top = self.row1(j).expect("column in range");
            let bottom = self.row3(j).expect("column in range");
            entries[j - 1] = top;
            entries[n + j - 1] = -(top + bottom);
            entries[2 * n + j - 1] = bottom;
        }
        SignedArray::new(3, n, entries).expect("3 x n entries")
    }
}

/// Row-one entry of the closed-form array for 1-based column `j`.
pub fn row1_entry(k: usize, j: usize) -> Result<i64> {
    Lemma3Params::new(k)?.row1(j)
}

/// Row-three entry of the closed-form array for 1-based column `j`.
pub fn row3_entry(k: usize, j: usize) -> Result<i64> {
    Lemma3Params::new(k)?.row3(j)
}

pub fn build_sma3(n: usize) -> Result<SignedArray> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("SMA(3, n) needs even n >= 2, got {n}")));
    }
    match n {
        2 => Ok(Fixture::Fig1Sma3x2.load()),
        4 => Ok(Fixture::Fig1Sma3x4.load()),
        _ => Ok(Lemma3Params::new(n / 2)?.build()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checker::{verify_same_row_pairs, verify_sma};

    #[test]
    fn row_entries_match_appendix() {
        assert_eq!(row1_entry(6, 1).unwrap(), 1);
        assert_eq!(row1_entry(6, 4).unwrap(), -2);
        assert_eq!(row1_entry(5, 9).unwrap(), 7);
        assert_eq!(row3_entry(6, 1).unwrap(), -18);
        assert_eq!(row3_entry(6, 3).unwrap(), 15);
        assert_eq!(row3_entry(5, 10).unwrap(), 15);
    }

    #[test]
    fn index_and_parameter_errors() {
        assert_eq!(row1_entry(6, 0).unwrap_err(), Error::IndexOutOfRange { index: 0, max: 12 });
        assert_eq!(row3_entry(6, 13).unwrap_err(), Error::IndexOutOfRange { index: 13, max: 12 });
        assert!(matches!(row1_entry(2, 1), Err(Error::InvalidParameter(_))));
        assert!(build_sma3(0).is_err());
        assert!(build_sma3(7).is_err());
    }

    #[test]
    fn reproduces_published_arrays() {
        assert_eq!(build_sma3(12).unwrap(), Fixture::Appendix1Sma3x12.load());
        assert_eq!(build_sma3(10).unwrap(), Fixture::Appendix2Sma3x10.load());
        assert_eq!(
            build_sma3(4).unwrap().to_rows(),
            vec![vec![1, -1, 2, -2], vec![5, 4, -5, -4], vec![-6, -3, 3, 6]]
        );
        assert_eq!(build_sma3(2).unwrap(), Fixture::Fig1Sma3x2.load());
    }

    #[test]
    fn sweep_is_valid() {
        for n in (2..=200).step_by(2) {
            let a = build_sma3(n).unwrap();
            assert!(verify_sma(&a).passed(), "n = {n}");
            assert!(verify_same_row_pairs(&a).passed(), "n = {n}");
        }
    }

    #[test]
    fn row_magnitudes() {
        for n in (6..=200).step_by(2) {
            let a = build_sma3(n).unwrap();
            let mut top: Vec<i64> = a.row(0).to_vec();
            top.sort_unstable();
            let mut expected: Vec<i64> = if n % 4 == 0 {
                (0..=(n as i64 - 4) / 4).flat_map(|i| [3 * i + 1, 3 * i + 2]).collect()
            } else {
                let mut v: Vec<i64> = (0..=(n as i64 - 6) / 4).flat_map(|i| [3 * i + 1, 3 * i + 2]).collect();
                v.push((3 * n as i64 - 2) / 4);
                v
            };
            expected = expected.iter().flat_map(|&x| [x, -x]).collect();
            expected.sort_unstable();
            assert_eq!(top, expected, "row 1, n = {n}");

            let mut bottom: Vec<u64> = a.row(2).iter().map(|e| e.unsigned_abs()).collect();
            bottom.sort_unstable();
            bottom.dedup();
            let threes: Vec<u64> = (1..=n as u64 / 2).map(|t| 3 * t).collect();
            assert_eq!(bottom, threes, "row 3, n = {n}");
        }
    }
}
