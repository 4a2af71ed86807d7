//! Integer Laurent polynomials in one variable `T`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finitely supported map exponent -> coefficient. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(i32, i64)>", into = "Vec<(i32, i64)>")]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, i64)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Symmetric polynomial `c[0] T^-d + ... + c[2d] T^d` from a list of
    /// odd length `2d + 1`.
    pub fn from_symmetric_coeffs(coeffs: &[i64]) -> Self {
        let d = (coeffs.len() / 2) as i32;
        Self::from_terms(coeffs.iter().enumerate().map(|(i, &c)| (i as i32 - d, c)))
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(exp).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    pub fn shift(&self, by: i32) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e + by, c)))
    }

    pub fn negate(&self) -> Self {
        Self::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }

    /// Shift so that the support is centred at zero and flip the sign so
    /// that the value at `T = 1` is `+1`. Fails when the result cannot be
    /// a symmetrized Alexander polynomial.
    pub fn symmetric_normalized(&self) -> Result<Self> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::Normalization("zero polynomial".into())),
        };
        if (lo + hi) % 2 != 0 {
            return Err(Error::Normalization(format!(
                "support [{lo}, {hi}] has no integer centre"
            )));
        }
        let mut p = self.shift(-(lo + hi) / 2);
        match p.eval_at_one() {
            1 => {}
            -1 => p = p.negate(),
            v => {
                return Err(Error::Normalization(format!(
                    "value at T=1 is {v}, expected +-1"
                )))
            }
        }
        if !p.is_symmetric() {
            return Err(Error::Normalization(format!("{p} is not symmetric")));
        }
        Ok(p)
    }

    /// Degree of a symmetric polynomial (largest exponent), 0 for constants.
    pub fn half_span(&self) -> i32 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (hi - lo) / 2,
            _ => 0,
        }
    }
}

impl From<Vec<(i32, i64)>> for LaurentPoly {
    fn from(v: Vec<(i32, i64)>) -> Self {
        Self::from_terms(v)
    }
}

impl From<LaurentPoly> for Vec<(i32, i64)> {
    fn from(p: LaurentPoly) -> Self {
        p.terms().collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "T")?,
                (1, m) => write!(f, "{m}T")?,
                (e, 1) => write!(f, "T^{e}")?,
                (e, m) => write!(f, "{m}T^{e}")?,
            }
        }
        Ok(())
    }
}
