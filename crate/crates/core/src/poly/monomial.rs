use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::PolyError;

/// Exponent vector `x` standing for `T^x = ∏ T_i^{x_i}`.
///
/// The derived order is the reversed lexicographic order used throughout:
/// exponent vectors are compared starting from the last coordinate.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn new(exponents: Vec<i64>) -> Self {
        Self(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    /// The variable with zero-based index `i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self(e)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// `self` divides `other` as ordinary monomials.
    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars(), "monomial arity mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars(), "monomial arity mismatch");
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn pow(&self, k: i64) -> Self {
        Self(self.0.iter().map(|e| e * k).collect())
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// Renders as `T1^2*T3^-1`; the unit monomial renders as `1`.
    pub fn render(&self, prefix: &str) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, e)| format!("{prefix}{}^{e}", i + 1))
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("T"))
    }
}

/// Reversed lexicographic order on monomials in `T_1 … T_n`:
/// `u < v` iff some `u_i < v_i` with `u_j = v_j` for all `j > i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub nvars: usize,
}

impl TermOrder {
    pub fn new(nvars: usize) -> Self {
        Self { nvars }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        for m in [a, b] {
            if m.nvars() != self.nvars {
                return Err(PolyError::IndexSpaceMismatch {
                    left: self.nvars,
                    right: m.nvars(),
                });
            }
        }
        Ok(a.cmp(b))
    }
}
