use std::fmt;

use serde::Serialize;

use crate::error::FamilyError;

/// A tuple `0 ≤ p ≤ q ≤ r ≤ s ≤ t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyParams {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
}

impl FamilyParams {
    pub fn new(p: usize, q: usize, r: usize, s: usize, t: usize) -> Result<Self, FamilyError> {
        if p <= q && q <= r && r <= s && s <= t {
            Ok(Self { p, q, r, s, t })
        } else {
            Err(FamilyError::InvalidParams { p, q, r, s, t })
        }
    }

    /// `0 < p < q < r < s < t`.
    pub fn is_strict(&self) -> bool {
        0 < self.p && self.p < self.q && self.q < self.r && self.r < self.s && self.s < self.t
    }

    /// Number of T-variables, `t + 5`.
    pub fn nvars(&self) -> usize {
        self.t + 5
    }

    /// Number of arrows of Q, `t + 10`.
    pub fn narrows(&self) -> usize {
        self.t + 10
    }

    /// All tuples with `t ≤ max_t`, in lexicographic order.
    pub fn all_up_to(max_t: usize) -> Vec<Self> {
        let mut out = Vec::new();
        for t in 0..=max_t {
            for s in 0..=t {
                for r in 0..=s {
                    for q in 0..=r {
                        for p in 0..=q {
                            out.push(Self { p, q, r, s, t });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{})",
            self.p, self.q, self.r, self.s, self.t
        )
    }
}

/// Indicator vector of the 1-based range `[lo, hi]` inside `n` coordinates.
pub(crate) fn segment(n: usize, lo: usize, hi: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    for i in lo..=hi {
        v[i - 1] = 1;
    }
    v
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    segment(n, i, i)
}

pub(crate) fn add(vs: &[&[i64]]) -> Vec<i64> {
    let n = vs[0].len();
    (0..n).map(|k| vs.iter().map(|v| v[k]).sum()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(FamilyParams::new(0, 0, 0, 0, 0).is_ok());
        assert_eq!(
            FamilyParams::new(2, 1, 3, 4, 5).unwrap_err(),
            FamilyError::InvalidParams {
                p: 2,
                q: 1,
                r: 3,
                s: 4,
                t: 5
            }
        );
        assert!(FamilyParams::new(1, 2, 3, 4, 5).unwrap().is_strict());
        assert!(!FamilyParams::new(0, 2, 3, 4, 5).unwrap().is_strict());
    }

    #[test]
    fn tuple_counts() {
        assert_eq!(FamilyParams::all_up_to(0).len(), 1);
        assert_eq!(FamilyParams::all_up_to(2).len(), 21);
        assert_eq!(FamilyParams::all_up_to(3).len(), 56);
    }

    #[test]
    fn segments() {
        assert_eq!(segment(4, 2, 3), vec![0, 1, 1, 0]);
        assert_eq!(segment(4, 3, 2), vec![0; 4]);
    }
}
