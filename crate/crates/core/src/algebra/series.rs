//! Truncated Hilbert–Poincaré series.

use std::fmt;

use serde::Serialize;

use super::generator::GradedGenerator;
use crate::{Error, Result};

/// Graded dimensions in degrees `0..=bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct HilbertSeries {
    coeffs: Vec<i64>,
}

impl HilbertSeries {
    /// The constant series 1 truncated at `bound`.
    pub fn one(bound: u32) -> Self {
        let mut coeffs = vec![0; bound as usize + 1];
        coeffs[0] = 1;
        Self { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the degree-0 coefficient"
        );
        Self { coeffs }
    }

    pub fn bound(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, degree: u32) -> i64 {
        self.coeffs.get(degree as usize).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn truncate(&self, bound: u32) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(bound as usize + 1, 0);
        Self { coeffs }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.bound() != other.bound() {
            return Err(Error::Grading(format!(
                "series bounds differ ({} vs {})",
                self.bound(),
                other.bound()
            )));
        }
        let n = self.coeffs.len();
        let mut out = vec![0; n];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| **a != 0) {
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    /// First degree where the two series differ.
    pub fn first_mismatch(&self, other: &Self) -> Option<u32> {
        let n = self.coeffs.len().max(other.coeffs.len()) as u32;
        (0..n).find(|&d| self.coeff(d) != other.coeff(d))
    }

    /// Multiplies in place by `1 + t^d`.
    pub fn mul_one_plus(&mut self, d: u32) {
        let d = d as usize;
        for i in (d..self.coeffs.len()).rev() {
            self.coeffs[i] += self.coeffs[i - d];
        }
    }

    /// Multiplies in place by `1 - t^d`.
    pub fn mul_one_minus(&mut self, d: u32) {
        let d = d as usize;
        for i in (d..self.coeffs.len()).rev() {
            self.coeffs[i] -= self.coeffs[i - d];
        }
    }

    /// Multiplies in place by `1 / (1 - t^d)`.
    pub fn div_one_minus(&mut self, d: u32) {
        let d = d as usize;
        assert!(d > 0, "division by 1 - t^0");
        for i in d..self.coeffs.len() {
            self.coeffs[i] += self.coeffs[i - d];
        }
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(i64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Series of the free graded-commutative algebra on `gens`: exterior on the
/// odd generators tensor polynomial on the even ones.
pub fn free_graded_series(gens: &[GradedGenerator], bound: u32) -> HilbertSeries {
    let mut s = HilbertSeries::one(bound);
    for g in gens {
        if g.is_odd() {
            s.mul_one_plus(g.degree());
        } else {
            s.div_one_minus(g.degree());
        }
    }
    s
}

/// Series of `Q[vars]/(relations) ⊗ Λ(ext)` when the relations form a
/// regular sequence.
pub fn complete_intersection_series(
    var_degrees: &[u32],
    rel_degrees: &[u32],
    ext_degrees: &[u32],
    bound: u32,
) -> HilbertSeries {
    let mut s = HilbertSeries::one(bound);
    for &d in var_degrees {
        s.div_one_minus(d);
    }
    for &d in rel_degrees {
        s.mul_one_minus(d);
    }
    for &d in ext_degrees {
        s.mul_one_plus(d);
    }
    s
}
