//! Genus, unknot certification, Euler characteristic consistency and the
//! zero-surgery norm, read off from hat ranks.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floer::BigradedRanks;
use crate::laurent::LaurentPoly;

/// Outcome of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: true,
            detail: detail.into(),
        }
    }

    pub fn fail(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed: false,
            detail: detail.into(),
        }
    }

    pub fn from_bool(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

/// Per-knot summary.
///
/// Grid fields are absent when the knot was given only as a planar diagram.
/// In that case the genus is reported only when the degree of the Alexander
/// polynomial meets the Kauffman-state bound, which pins it exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HFKReport {
    pub knot_id: String,
    pub grid_size: Option<usize>,
    pub generator_count: Option<u64>,
    pub arrow_count: Option<u64>,
    pub hat_ranks: Option<BigradedRanks>,
    pub delta: LaurentPoly,
    pub genus: Option<u32>,
    pub is_unknot: Option<bool>,
    pub zero_surgery_norm: Option<u32>,
    pub top_group_rank: Option<u64>,
    /// Whether the top group is identified with a zero-surgery group.
    pub top_group_identified: bool,
    pub state_count: Option<usize>,
    pub kauffman_bound: Option<i32>,
    pub diagnostics: Vec<CheckResult>,
}

impl HFKReport {
    pub fn all_passed(&self) -> bool {
        self.diagnostics.iter().all(|c| c.passed)
    }
}

fn check_shape(h: &BigradedRanks) -> Result<()> {
    let total = h.total();
    if total.is_multiple_of(2) {
        return Err(Error::MalformedRanks(format!(
            "total rank {total} is not odd"
        )));
    }
    Ok(())
}

/// Largest Alexander grading with nonzero column rank.
pub fn seifert_genus(h: &BigradedRanks) -> Result<u32> {
    check_shape(h)?;
    let top = h.max_alexander().expect("nonempty");
    if top < 0 {
        return Err(Error::MalformedRanks(format!(
            "top Alexander grading {top} is negative"
        )));
    }
    Ok(top as u32)
}

pub fn certify_unknot(h: &BigradedRanks) -> Result<bool> {
    Ok(seifert_genus(h)? == 0)
}

/// Coefficientwise comparison of the graded Euler characteristic with an
/// independently computed polynomial. Exponents are scanned outward from 0.
pub fn chi_consistency(h: &BigradedRanks, oracle_delta: &LaurentPoly) -> CheckResult {
    let chi = h.euler_characteristic();
    let lo = chi
        .min_exp()
        .into_iter()
        .chain(oracle_delta.min_exp())
        .min();
    let hi = chi
        .max_exp()
        .into_iter()
        .chain(oracle_delta.max_exp())
        .max();
    if let (Some(lo), Some(hi)) = (lo, hi) {
        let mut order: Vec<i32> = (lo..=hi).collect();
        order.sort_by_key(|e| (e.abs(), *e));
        for e in order {
            let (a, b) = (chi.coeff(e), oracle_delta.coeff(e));
            if a != b {
                return CheckResult::fail("chi_consistency", format!("exponent {e}: {a} vs {b}"));
            }
        }
    }
    CheckResult::pass("chi_consistency", format!("{chi}"))
}

pub fn zero_surgery_norm(genus: u32) -> u32 {
    if genus >= 1 {
        2 * genus - 2
    } else {
        0
    }
}

/// Rank of the top Alexander column, and whether it is identified with
/// the zero-surgery group in degree `genus - 1` (only for genus above 1).
pub fn top_group_rank(h: &BigradedRanks, genus: u32) -> (u64, bool) {
    (h.column_rank(genus as i32), genus > 1)
}

pub fn kauffman_bound_check(bound: i32, genus: u32) -> CheckResult {
    CheckResult::from_bool(
        "kauffman_bound",
        bound >= genus as i32,
        format!("max s {bound}, genus {genus}"),
    )
}
