use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Finitely supported map `(maslov, alexander) -> rank`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(i32, i32, u64)>", into = "Vec<(i32, i32, u64)>")]
pub struct BigradedRanks {
    ranks: BTreeMap<(i32, i32), u64>,
}

impl BigradedRanks {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries<I: IntoIterator<Item = ((i32, i32), u64)>>(entries: I) -> Self {
        let mut r = Self::new();
        for (k, v) in entries {
            r.add(k.0, k.1, v);
        }
        r
    }

    pub fn add(&mut self, maslov: i32, alexander: i32, rank: u64) {
        if rank > 0 {
            *self.ranks.entry((maslov, alexander)).or_insert(0) += rank;
        }
    }

    pub fn get(&self, maslov: i32, alexander: i32) -> u64 {
        self.ranks.get(&(maslov, alexander)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((i32, i32), u64)> + '_ {
        self.ranks.iter().map(|(&k, &v)| (k, v))
    }

    pub fn total(&self) -> u64 {
        self.ranks.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    /// `sum_d rank(d, s)`.
    pub fn column_rank(&self, alexander: i32) -> u64 {
        self.ranks
            .iter()
            .filter(|((_, a), _)| *a == alexander)
            .map(|(_, v)| v)
            .sum()
    }

    pub fn max_alexander(&self) -> Option<i32> {
        self.ranks.keys().map(|&(_, a)| a).max()
    }

    /// Per-Alexander column totals.
    pub fn columns(&self) -> BTreeMap<i32, u64> {
        let mut out = BTreeMap::new();
        for (&(_, a), &v) in &self.ranks {
            *out.entry(a).or_insert(0) += v;
        }
        out
    }

    /// `sum_d rank(d, s) = sum_d rank(d, -s)` for every `s`.
    pub fn is_alexander_symmetric(&self) -> bool {
        let cols = self.columns();
        cols.iter()
            .all(|(&a, &v)| cols.get(&-a).copied().unwrap_or(0) == v)
    }

    /// Graded Euler characteristic `sum_s sum_d (-1)^d rank(d, s) T^s`.
    pub fn euler_characteristic(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.ranks.iter().map(|(&(m, a), &v)| {
            let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
            (a, sign * v as i64)
        }))
    }
}

impl From<Vec<(i32, i32, u64)>> for BigradedRanks {
    fn from(v: Vec<(i32, i32, u64)>) -> Self {
        Self::from_entries(v.into_iter().map(|(m, a, r)| ((m, a), r)))
    }
}

impl From<BigradedRanks> for Vec<(i32, i32, u64)> {
    fn from(r: BigradedRanks) -> Self {
        r.ranks.into_iter().map(|((m, a), v)| (m, a, v)).collect()
    }
}

/// Divides the Poincare polynomial of the tilde homology by
/// `(1 + q^-1 u^-1)^(n-1)`, where `q` tracks Maslov and `u` Alexander.
///
/// The factor only mixes entries on a common diagonal `maslov - alexander`,
/// so each diagonal is an ordinary synthetic division by `1 + z`.
pub fn hat_from_tilde(tilde: &BigradedRanks, n: usize) -> Result<BigradedRanks> {
    let mut current: BTreeMap<(i32, i32), i64> = tilde.iter().map(|(k, v)| (k, v as i64)).collect();
    for _ in 1..n {
        let mut diagonals: BTreeMap<i32, BTreeMap<i32, i64>> = BTreeMap::new();
        for (&(m, a), &v) in &current {
            diagonals.entry(m - a).or_default().insert(m, v);
        }
        let mut next = BTreeMap::new();
        for (diag, col) in diagonals {
            let top = *col.keys().next_back().unwrap();
            let bottom = *col.keys().next().unwrap();
            let mut carry = 0i64;
            for m in (bottom..=top).rev() {
                let q = col.get(&m).copied().unwrap_or(0) - carry;
                if q < 0 {
                    return Err(Error::InexactDivision(format!(
                        "negative quotient at ({m}, {})",
                        m - diag
                    )));
                }
                if m == bottom {
                    if q != 0 {
                        return Err(Error::InexactDivision(format!(
                            "remainder {q} at ({m}, {})",
                            m - diag
                        )));
                    }
                } else if q > 0 {
                    next.insert((m, m - diag), q);
                }
                carry = q;
            }
        }
        current = next;
    }
    Ok(BigradedRanks::from_entries(
        current.into_iter().map(|(k, v)| (k, v as u64)),
    ))
}

/// Alexander polynomial as the graded Euler characteristic of hat ranks,
/// symmetric-normalized with value 1 at `T = 1`.
pub fn alexander_from_grid(hat: &BigradedRanks) -> Result<LaurentPoly> {
    hat.euler_characteristic().symmetric_normalized()
}
