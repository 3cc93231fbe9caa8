//! The array value type and the transformations every construction shares.
//!
//! A [`SignedArray`] is a tight grid: every cell holds an integer. Row and
//! column indices in error messages are 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Amount added to every magnitude by [`SignedArray::shift`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct ShiftAmount(pub u64);

impl From<u64> for ShiftAmount {
    fn from(k: u64) -> Self {
        ShiftAmount(k)
    }
}

impl fmt::Display for ShiftAmount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The symmetric value set `{±1, …, ±half_size}` a tight SMA must use once each.
///
/// When the cell count is odd the set also holds `0` and `half_size` is
/// `(cells - 1) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SupportSpec {
    pub half_size: u64,
    pub has_zero: bool,
}

impl SupportSpec {
    pub fn for_dims(rows: usize, cols: usize) -> Self {
        let cells = (rows * cols) as u64;
        SupportSpec { half_size: cells / 2, has_zero: cells % 2 == 1 }
    }

    pub fn contains(&self, value: i64) -> bool {
        if value == 0 {
            return self.has_zero;
        }
        value.unsigned_abs() <= self.half_size
    }

    /// Every value of the set, in the order `0?, 1, -1, 2, -2, …`.
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        let zero = self.has_zero.then_some(0);
        zero.into_iter()
            .chain((1..=self.half_size as i64).flat_map(|x| [x, -x]))
    }
}

/// A tight `rows × cols` grid of integers stored row-major.
///
/// Arrays with zero rows or zero columns are allowed so that stacking has an
/// identity element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedArray {
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl SignedArray {
    pub fn new(rows: usize, cols: usize, entries: Vec<i64>) -> Result<Self> {
        if rows.checked_mul(cols) != Some(entries.len()) {
            return Err(Error::Shape { rows, cols, found: entries.len() });
        }
        Ok(SignedArray { rows, cols, entries })
    }

    /// Builds an array from row vectors. All rows must have the same length.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Ragged { row: i + 1, expected: cols, found: r.len() });
            }
            entries.extend_from_slice(r);
        }
        Ok(SignedArray { rows: rows.len(), cols, entries })
    }

    /// A `rows × 0` or `0 × cols` array.
    pub fn empty(rows: usize, cols: usize) -> Self {
        assert!(rows == 0 || cols == 0, "empty array must have a zero dimension");
        SignedArray { rows, cols, entries: Vec::new() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Option<i64> {
        (row < self.rows && col < self.cols).then(|| self.entries[row * self.cols + col])
    }

    pub(crate) fn set(&mut self, row: usize, col: usize, value: i64) {
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[i64] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[i64]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = i64> + '_ {
        (0..self.rows).map(move |i| self.entries[i * self.cols + col])
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.row_iter().map(<[i64]>::to_vec).collect()
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.row_iter().map(|r| r.iter().sum()).collect()
    }

    pub fn transpose(&self) -> SignedArray {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            entries.extend(self.column(j));
        }
        SignedArray { rows: self.cols, cols: self.rows, entries }
    }

    /// First 0-based `(row, col)` holding a zero, if any.
    pub fn find_zero(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(|&e| e == 0)
            .map(|p| (p / self.cols, p % self.cols))
    }

    /// Adds `k` to every positive entry and `-k` to every negative entry.
    ///
    /// Row and column sums are preserved exactly when the array is shiftable.
    pub fn shift(&self, k: impl Into<ShiftAmount>) -> Result<SignedArray> {
        let k = i64::try_from(k.into().0).map_err(|_| Error::InvalidParameter("shift amount exceeds i64".into()))?;
        let mut entries = Vec::with_capacity(self.entries.len());
        for (p, &e) in self.entries.iter().enumerate() {
            let (row, col) = (p / self.cols + 1, p % self.cols + 1);
            let shifted = match e.signum() {
                0 => return Err(Error::ZeroEntry { row, col }),
                1 => e.checked_add(k),
                _ => e.checked_sub(k),
            };
            entries.push(shifted.ok_or(Error::Overflow { row, col })?);
        }
        Ok(SignedArray { rows: self.rows, cols: self.cols, entries })
    }

    /// Multiplies every entry by −1.
    pub fn negate(&self) -> SignedArray {
        // i64::MIN cannot occur: entries come from symmetric supports.
        SignedArray {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Places `right`'s columns after this array's columns.
    pub fn hstack(&self, right: &SignedArray) -> Result<SignedArray> {
        if self.rows != right.rows {
            return Err(Error::RowMismatch { left: self.rows, right: right.rows });
        }
        let cols = self.cols + right.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(right.row(i));
        }
        Ok(SignedArray { rows: self.rows, cols, entries })
    }

    /// Places `bottom`'s rows after this array's rows.
    pub fn vstack(&self, bottom: &SignedArray) -> Result<SignedArray> {
        if self.cols != bottom.cols {
            return Err(Error::ColumnMismatch { top: self.cols, bottom: bottom.cols });
        }
        let mut entries = Vec::with_capacity(self.entries.len() + bottom.entries.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&bottom.entries);
        Ok(SignedArray { rows: self.rows + bottom.rows, cols: self.cols, entries })
    }
}

pub fn shift(a: &SignedArray, k: ShiftAmount) -> Result<SignedArray> {
    a.shift(k)
}

pub fn negate(a: &SignedArray) -> SignedArray {
    a.negate()
}

pub fn hstack(left: &SignedArray, right: &SignedArray) -> Result<SignedArray> {
    left.hstack(right)
}

pub fn vstack(top: &SignedArray, bottom: &SignedArray) -> Result<SignedArray> {
    top.vstack(bottom)
}

impl fmt::Debug for SignedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SignedArray {}x{} [", self.rows, self.cols)?;
        for r in self.row_iter() {
            writeln!(f, "  {r:?}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for SignedArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|e| e.to_string().len()).max().unwrap_or(1);
        for r in self.row_iter() {
            let cells: Vec<String> = r.iter().map(|e| format!("{e:>width$}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
