//! Classification of `(m, n)` and the top-level `generate` dispatcher.
//!
//! An `SMA(m, n)` with even `n` and `±x` in one row exists iff
//! `n = 2` and `m ≡ 0, 3 (mod 4)`, or `m ≥ 3` and `n ≥ 4`.

use std::fmt;

use crate::error::{Error, Result};
use crate::even::build_even;
use crate::grid::{ShiftAmount, SignedArray};
use crate::lemma3::build_sma3;
use crate::lemma5::build_sma5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// Output is one of the published arrays verbatim.
    Fixture,
    Lemma3,
    Lemma5,
    EvenEven,
    SignVectorN2,
    Stack3PlusEven,
    Stack5PlusEven,
    Nonexistent,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::Fixture => "FIXTURE",
            Route::Lemma3 => "LEMMA3",
            Route::Lemma5 => "LEMMA5",
            Route::EvenEven => "EVEN_EVEN",
            Route::SignVectorN2 => "SIGN_VECTOR_N2",
            Route::Stack3PlusEven => "STACK_3_PLUS_EVEN",
            Route::Stack5PlusEven => "STACK_5_PLUS_EVEN",
            Route::Nonexistent => "NONEXISTENT",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The route [`generate`] takes for a given size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionPlan {
    pub m: usize,
    pub n: usize,
    pub route: Route,
    /// Set for the two stacked routes.
    pub shift_amount: Option<ShiftAmount>,
    /// Violated condition when `route` is [`Route::Nonexistent`].
    pub reason: Option<String>,
}

impl fmt::Display for ConstructionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.route, self.shift_amount, &self.reason) {
            (Route::Nonexistent, _, Some(reason)) => write!(f, "NONEXISTENT: {reason}"),
            (route, Some(k), _) => write!(f, "{route} shift={k}"),
            (route, None, _) => write!(f, "{route}"),
        }
    }
}

fn check_even(n: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("number of columns must be even and positive, got {n}")));
    }
    Ok(())
}

/// Why no array exists, or `None` when one does.
pub fn infeasibility(m: usize, n: usize) -> Result<Option<String>> {
    check_even(n)?;
    Ok(if m < 3 {
        Some(format!("m = {m} < 3"))
    } else if n == 2 && !matches!(m % 4, 0 | 3) {
        Some(format!("n = 2 requires m ≡ 0 or 3 (mod 4), but m ≡ {} (mod 4)", m % 4))
    } else {
        None
    })
}

pub fn feasible(m: usize, n: usize) -> Result<bool> {
    Ok(infeasibility(m, n)?.is_none())
}

/// Signs `s_1, …, s_m` with `Σ s_i·i = 0`; row `i` of the `m × 2` array is
/// `(s_i·i, −s_i·i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignVector {
    pub signs: Vec<i8>,
}

impl SignVector {
    /// `(+,+,−)` for `m ≡ 3 (mod 4)` followed by `(+,−,−,+)` blocks; just the
    /// blocks for `m ≡ 0 (mod 4)`. Each block over `a, …, a+3` sums to zero.
    pub fn canonical(m: usize) -> Result<Self> {
        if m < 3 || !matches!(m % 4, 0 | 3) {
            return Err(Error::Nonexistent {
                m,
                n: 2,
                reason: infeasibility(m, 2)?.unwrap_or_else(|| "m < 3".into()),
            });
        }
        let mut signs = Vec::with_capacity(m);
        if m % 4 == 3 {
            signs.extend([1, 1, -1]);
        }
        while signs.len() < m {
            signs.extend([1, -1, -1, 1]);
        }
        Ok(SignVector { signs })
    }

    pub fn weighted_sum(&self) -> i64 {
        self.signs.iter().enumerate().map(|(i, &s)| s as i64 * (i as i64 + 1)).sum()
    }

    pub fn to_array(&self) -> SignedArray {
        let entries = self
            .signs
            .iter()
            .enumerate()
            .flat_map(|(i, &s)| {
                let v = s as i64 * (i as i64 + 1);
                [v, -v]
            })
            .collect();
        SignedArray::new(self.signs.len(), 2, entries).expect("m x 2 entries")
    }
}

pub fn build_n2(m: usize) -> Result<SignedArray> {
    Ok(SignVector::canonical(m)?.to_array())
}

pub fn plan(m: usize, n: usize) -> Result<ConstructionPlan> {
    let mut p = ConstructionPlan { m, n, route: Route::Nonexistent, shift_amount: None, reason: None };
    if let Some(reason) = infeasibility(m, n)? {
        p.reason = Some(reason);
        return Ok(p);
    }
    p.route = match (m, n) {
        (_, 2) => Route::SignVectorN2,
        (3, 4) | (5, 4) | (5, 6) | (4, 4) | (4, 6) | (6, 4) | (6, 6) => Route::Fixture,
        (3, _) => Route::Lemma3,
        (5, _) => Route::Lemma5,
        _ if m.is_multiple_of(2) => Route::EvenEven,
        _ if m % 4 == 3 => {
            p.shift_amount = Some(ShiftAmount((3 * n / 2) as u64));
            Route::Stack3PlusEven
        }
        _ => {
            p.shift_amount = Some(ShiftAmount((5 * n / 2) as u64));
            Route::Stack5PlusEven
        }
    };
    Ok(p)
}

/// Builds an `SMA(m, n)` with `±x` in one row for every feasible size.
pub fn generate(m: usize, n: usize) -> Result<SignedArray> {
    let p = plan(m, n)?;
    match p.route {
        Route::Nonexistent => Err(Error::Nonexistent { m, n, reason: p.reason.unwrap_or_default() }),
        Route::SignVectorN2 => build_n2(m),
        Route::Fixture | Route::Lemma3 | Route::Lemma5 | Route::EvenEven => match m {
            3 => build_sma3(n),
            5 => build_sma5(n),
            _ => build_even(m, n),
        },
        Route::Stack3PlusEven => {
            let k = p.shift_amount.expect("stacked route has a shift");
            build_sma3(n)?.vstack(&build_even(m - 3, n)?.shift(k)?)
        }
        Route::Stack5PlusEven => {
            let k = p.shift_amount.expect("stacked route has a shift");
            build_sma5(n)?.vstack(&build_even(m - 5, n)?.shift(k)?)
        }
    }
}
