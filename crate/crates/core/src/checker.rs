//! Predicates over [`SignedArray`]s with itemized evidence.
//!
//! None of the checks stop at the first failure: every violation found is
//! listed so fixture diffs point at the exact cells involved.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{SignedArray, SupportSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    OutOfRange,
    Duplicate,
    Missing,
    RowSum,
    ColumnSum,
    MissingPartner,
    SplitPair,
    RowImbalance,
    ColumnImbalance,
}

impl ViolationKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::OutOfRange => "out-of-range",
            ViolationKind::Duplicate => "duplicate",
            ViolationKind::Missing => "missing",
            ViolationKind::RowSum => "row-sum",
            ViolationKind::ColumnSum => "column-sum",
            ViolationKind::MissingPartner => "missing-partner",
            ViolationKind::SplitPair => "split-pair",
            ViolationKind::RowImbalance => "row-imbalance",
            ViolationKind::ColumnImbalance => "column-imbalance",
        }
    }
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One failed condition. `row` and `col` are 1-based; `None` when the
/// violation has no single location (e.g. a value missing from the array).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub row: Option<usize>,
    pub col: Option<usize>,
    pub detail: String,
}

impl Violation {
    fn new(kind: ViolationKind, row: Option<usize>, col: Option<usize>, detail: impl Into<String>) -> Self {
        Violation { kind, row, col, detail: detail.into() }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let loc = |v: Option<usize>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        write!(f, "{}\t{}\t{}\t{}", self.kind, loc(self.row), loc(self.col), self.detail)
    }
}

/// Outcome of one or more checks. A flag is `None` when its check was not run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub is_support_exact: Option<bool>,
    pub is_row_zero: Option<bool>,
    pub is_col_zero: Option<bool>,
    pub has_same_row_pairs: Option<bool>,
    pub is_shiftable: Option<bool>,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    /// True when every check that ran passed.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    /// Combines two reports; flags set in `other` override unset flags here.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        fn pick(a: Option<bool>, b: Option<bool>) -> Option<bool> {
            match (a, b) {
                (Some(x), Some(y)) => Some(x && y),
                (x, None) => x,
                (None, y) => y,
            }
        }
        self.is_support_exact = pick(self.is_support_exact, other.is_support_exact);
        self.is_row_zero = pick(self.is_row_zero, other.is_row_zero);
        self.is_col_zero = pick(self.is_col_zero, other.is_col_zero);
        self.has_same_row_pairs = pick(self.has_same_row_pairs, other.has_same_row_pairs);
        self.is_shiftable = pick(self.is_shiftable, other.is_shiftable);
        self.violations.extend(other.violations);
        self
    }
}

/// Per-column sums of an array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColumnSumProfile {
    pub sums: Vec<i64>,
}

impl ColumnSumProfile {
    pub fn len(&self) -> usize {
        self.sums.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sums.is_empty()
    }

    pub fn total(&self) -> i64 {
        self.sums.iter().sum()
    }

    /// How many columns sum to exactly `value`.
    pub fn count(&self, value: i64) -> usize {
        self.sums.iter().filter(|&&s| s == value).count()
    }

    pub fn is_zero(&self) -> bool {
        self.sums.iter().all(|&s| s == 0)
    }
}

pub fn column_sums(a: &SignedArray) -> ColumnSumProfile {
    ColumnSumProfile { sums: (0..a.cols()).map(|j| a.column(j).sum()).collect() }
}

/// Row sums, column sums and exact support `{±1, …, ±rows·cols/2}`.
pub fn verify_sma(a: &SignedArray) -> VerificationReport {
    let mut report = VerificationReport::default();
    let support = SupportSpec::for_dims(a.rows(), a.cols());

    let mut seen: HashMap<i64, usize> = HashMap::with_capacity(a.entries().len());
    let mut support_ok = true;
    for i in 0..a.rows() {
        for (j, &e) in a.row(i).iter().enumerate() {
            if !support.contains(e) {
                support_ok = false;
                report.violations.push(Violation::new(
                    ViolationKind::OutOfRange,
                    Some(i + 1),
                    Some(j + 1),
                    format!("value {e} outside ±{}", support.half_size),
                ));
                continue;
            }
            let count = seen.entry(e).or_default();
            *count += 1;
            if *count > 1 {
                support_ok = false;
                report.violations.push(Violation::new(
                    ViolationKind::Duplicate,
                    Some(i + 1),
                    Some(j + 1),
                    format!("value {e} appears more than once"),
                ));
            }
        }
    }
    for v in support.values() {
        if !seen.contains_key(&v) {
            support_ok = false;
            report.violations.push(Violation::new(ViolationKind::Missing, None, None, format!("value {v} missing")));
        }
    }
    report.is_support_exact = Some(support_ok);

    let mut rows_ok = true;
    for (i, s) in a.row_sums().into_iter().enumerate() {
        if s != 0 {
            rows_ok = false;
            report.violations.push(Violation::new(ViolationKind::RowSum, Some(i + 1), None, format!("sum {s}")));
        }
    }
    report.is_row_zero = Some(rows_ok);

    let mut cols_ok = true;
    for (j, s) in column_sums(a).sums.into_iter().enumerate() {
        if s != 0 {
            cols_ok = false;
            report.violations.push(Violation::new(ViolationKind::ColumnSum, None, Some(j + 1), format!("sum {s}")));
        }
    }
    report.is_col_zero = Some(cols_ok);
    report
}

/// Whether every nonzero magnitude present occurs with both signs in one row.
pub fn verify_same_row_pairs(a: &SignedArray) -> VerificationReport {
    // magnitude -> (rows holding +x, rows holding -x), 0-based
    let mut where_: BTreeMap<u64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for i in 0..a.rows() {
        for &e in a.row(i) {
            if e == 0 {
                continue;
            }
            let slot = where_.entry(e.unsigned_abs()).or_default();
            if e > 0 {
                slot.0.push(i);
            } else {
                slot.1.push(i);
            }
        }
    }

    let mut report = VerificationReport::default();
    for (x, (pos, neg)) in &where_ {
        match (pos.first(), neg.first()) {
            (Some(&r), None) | (None, Some(&r)) => {
                let present = if pos.is_empty() { format!("-{x}") } else { x.to_string() };
                report.violations.push(Violation::new(
                    ViolationKind::MissingPartner,
                    Some(r + 1),
                    None,
                    format!("{present} has no opposite"),
                ));
            }
            _ => {
                let mut p = pos.clone();
                let mut n = neg.clone();
                p.sort_unstable();
                n.sort_unstable();
                if p != n {
                    let fmt_rows = |v: &[usize]| v.iter().map(|r| (r + 1).to_string()).collect::<Vec<_>>().join("/");
                    report.violations.push(Violation::new(
                        ViolationKind::SplitPair,
                        Some(p[0] + 1),
                        None,
                        format!("{x} in row {} but -{x} in row {}", fmt_rows(&p), fmt_rows(&n)),
                    ));
                }
            }
        }
    }
    report.has_same_row_pairs = Some(report.violations.is_empty());
    report
}

/// Equal counts of positive and negative entries in every row and column.
pub fn verify_shiftable(a: &SignedArray) -> Result<VerificationReport> {
    if let Some((row, col)) = a.find_zero() {
        return Err(Error::ZeroEntry { row: row + 1, col: col + 1 });
    }
    let balance = |it: &mut dyn Iterator<Item = i64>| it.map(i64::signum).sum::<i64>();
    let mut report = VerificationReport::default();
    for i in 0..a.rows() {
        let b = balance(&mut a.row(i).iter().copied());
        if b != 0 {
            report.violations.push(Violation::new(
                ViolationKind::RowImbalance,
                Some(i + 1),
                None,
                format!("positive minus negative count is {b}"),
            ));
        }
    }
    for j in 0..a.cols() {
        let b = balance(&mut a.column(j));
        if b != 0 {
            report.violations.push(Violation::new(
                ViolationKind::ColumnImbalance,
                None,
                Some(j + 1),
                format!("positive minus negative count is {b}"),
            ));
        }
    }
    report.is_shiftable = Some(report.violations.is_empty());
    Ok(report)
}
