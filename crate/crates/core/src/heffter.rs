//! Tight integer Heffter arrays and the `[A, −A]` mirror construction.

use std::collections::HashMap;

use crate::checker::{column_sums, VerificationReport, Violation, ViolationKind};
use crate::error::{Error, Result};
use crate::grid::SignedArray;

/// A tight `m × n` array holding exactly one of `x, −x` for each
/// `x ∈ {1, …, mn}`, with zero row and column sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeffterArray(SignedArray);

impl HeffterArray {
    pub fn new(grid: SignedArray) -> Result<Self> {
        let report = verify_heffter(&grid);
        if !report.passed() {
            return Err(Error::NotHeffter(summarize(&report)));
        }
        Ok(HeffterArray(grid))
    }

    pub fn as_array(&self) -> &SignedArray {
        &self.0
    }

    pub fn into_inner(self) -> SignedArray {
        self.0
    }

    pub fn mirror(&self) -> SignedArray {
        self.0.hstack(&self.0.negate()).expect("same row count")
    }
}

fn summarize(report: &VerificationReport) -> String {
    let first: Vec<String> = report.violations.iter().take(3).map(|v| format!("{} {}", v.kind, v.detail)).collect();
    let more = report.violations.len().saturating_sub(3);
    if more > 0 {
        format!("{} (+{more} more)", first.join("; "))
    } else {
        first.join("; ")
    }
}

fn check_magnitudes(h: &SignedArray, report: &mut VerificationReport) {
    let top = (h.rows() * h.cols()) as u64;
    let mut seen: HashMap<u64, usize> = HashMap::new();
    let mut ok = true;
    for i in 0..h.rows() {
        for (j, &e) in h.row(i).iter().enumerate() {
            let x = e.unsigned_abs();
            if x == 0 || x > top {
                ok = false;
                report.violations.push(Violation {
                    kind: ViolationKind::OutOfRange,
                    row: Some(i + 1),
                    col: Some(j + 1),
                    detail: format!("value {e} outside ±1..±{top}"),
                });
                continue;
            }
            let c = seen.entry(x).or_default();
            *c += 1;
            if *c > 1 {
                ok = false;
                report.violations.push(Violation {
                    kind: ViolationKind::Duplicate,
                    row: Some(i + 1),
                    col: Some(j + 1),
                    detail: format!("magnitude {x} appears more than once"),
                });
            }
        }
    }
    for x in 1..=top {
        if !seen.contains_key(&x) {
            ok = false;
            report.violations.push(Violation {
                kind: ViolationKind::Missing,
                row: None,
                col: None,
                detail: format!("neither {x} nor -{x} present"),
            });
        }
    }
    report.is_support_exact = Some(ok);
}

fn check_columns(h: &SignedArray, report: &mut VerificationReport) {
    let mut ok = true;
    for (j, s) in column_sums(h).sums.into_iter().enumerate() {
        if s != 0 {
            ok = false;
            report.violations.push(Violation {
                kind: ViolationKind::ColumnSum,
                row: None,
                col: Some(j + 1),
                detail: format!("sum {s}"),
            });
        }
    }
    report.is_col_zero = Some(ok);
}

/// One-of-`±x` support over `{1, …, mn}` plus zero row and column sums.
pub fn verify_heffter(h: &SignedArray) -> VerificationReport {
    let mut report = VerificationReport::default();
    check_magnitudes(h, &mut report);
    let mut rows_ok = true;
    for (i, s) in h.row_sums().into_iter().enumerate() {
        if s != 0 {
            rows_ok = false;
            report.violations.push(Violation {
                kind: ViolationKind::RowSum,
                row: Some(i + 1),
                col: None,
                detail: format!("sum {s}"),
            });
        }
    }
    report.is_row_zero = Some(rows_ok);
    check_columns(h, &mut report);
    report
}

/// `[A, −A]`: an `SMA(m, 2n)` with each `±x` in one row.
///
/// Row sums of `[A, −A]` vanish whatever `A`'s rows sum to, so only the
/// one-of-`±x` support and zero column sums of `A` are required. Every tight
/// Heffter array qualifies.
pub fn mirror_concat(h: &SignedArray) -> Result<SignedArray> {
    let mut report = VerificationReport::default();
    check_magnitudes(h, &mut report);
    check_columns(h, &mut report);
    if !report.passed() {
        return Err(Error::NotHeffter(summarize(&report)));
    }
    h.hstack(&h.negate())
}
