use std::cmp::Ordering;

use super::{Monomial, Polynomial};
use crate::error::PolyError;
use crate::linalg::Rational;

/// Writes an exponent vector as an ℕ-combination of the initial exponents of
/// a fixed basis.
pub trait ConeOracle {
    /// Multiplicities `u` with `Σ u_i · ini(basis_i) = m`, or `None`.
    fn decompose(&self, m: &Monomial) -> Option<Vec<u64>>;
}

/// `Σ λ · basis^u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subduction {
    pub summands: Vec<(Rational, Vec<u64>)>,
}

/// Default bound on the number of subduction steps.
pub const SUBDUCTION_STEP_CAP: usize = 10_000;

pub fn basis_power(basis: &[Polynomial], u: &[u64], nvars: usize) -> Polynomial {
    basis
        .iter()
        .zip(u)
        .filter(|(_, &k)| k > 0)
        .fold(Polynomial::one(nvars), |acc, (a, &k)| {
            &acc * &a.pow(k as u32)
        })
}

/// Subduces `f` against `basis`: cancels the initial term by `λ · basis^u`
/// with `u` from the oracle until nothing is left.
pub fn subduct(
    f: &Polynomial,
    basis: &[Polynomial],
    oracle: &dyn ConeOracle,
) -> Result<Subduction, PolyError> {
    let nvars = f.nvars();
    let mut rest = f.clone();
    let mut summands = Vec::new();
    for _ in 0..SUBDUCTION_STEP_CAP {
        let Ok((m, c)) = rest.ini() else {
            return Ok(Subduction { summands });
        };
        let m = m.clone();
        let u = oracle
            .decompose(&m)
            .ok_or_else(|| PolyError::LeadingTermNotInInitialAlgebra(m.clone()))?;
        let product = basis_power(basis, &u, nvars);
        let (pm, pc) = product.ini()?;
        if pm != &m {
            return Err(PolyError::LeadingTermNotInInitialAlgebra(m));
        }
        let lambda = c / pc;
        rest = &rest - &product.scale(&lambda);
        if let Ok((next, _)) = rest.ini() {
            if next.cmp(&m) != Ordering::Less {
                return Err(PolyError::NonDecreasingLoop(m));
            }
        }
        summands.push((lambda, u));
    }
    Err(PolyError::NonDecreasingLoop(rest.ini()?.0.clone()))
}

impl Subduction {
    pub fn evaluate(&self, basis: &[Polynomial], nvars: usize) -> Polynomial {
        self.summands
            .iter()
            .fold(Polynomial::zero(nvars), |acc, (lambda, u)| {
                &acc + &basis_power(basis, u, nvars).scale(lambda)
            })
    }

    /// Re-checks that the representation reproduces `f` and that no summand
    /// has an initial monomial above `ini(f)`.
    pub fn verify(&self, f: &Polynomial, basis: &[Polynomial]) -> Result<(), String> {
        let nvars = f.nvars();
        let value = self.evaluate(basis, nvars);
        if &value != f {
            return Err(format!("representation evaluates to {value}, expected {f}"));
        }
        let Ok((top, _)) = f.ini() else {
            return if self.summands.is_empty() {
                Ok(())
            } else {
                Err("nonempty representation of zero".to_string())
            };
        };
        for (_, u) in &self.summands {
            let p = basis_power(basis, u, nvars);
            let (m, _) = p.ini().map_err(|e| e.to_string())?;
            if m > top {
                return Err(format!("summand initial monomial {m} exceeds {top}"));
            }
        }
        Ok(())
    }

    pub fn render(&self, names: &[String]) -> String {
        if self.summands.is_empty() {
            return "0".to_string();
        }
        self.summands
            .iter()
            .map(|(lambda, u)| {
                let factors: Vec<String> = u
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            names[i].clone()
                        } else {
                            format!("{}^{k}", names[i])
                        }
                    })
                    .collect();
                let body = if factors.is_empty() {
                    "1".to_string()
                } else {
                    factors.join("*")
                };
                format!("({lambda})*{body}")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Depth-first search for a nonnegative combination of nonnegative exponent
/// vectors; the first solution in lexicographic order of multiplicities
/// (largest multiplicity of the first generator first) is returned.
#[derive(Clone, Debug)]
pub struct ExhaustiveOracle {
    generators: Vec<Vec<i64>>,
}

impl ExhaustiveOracle {
    /// Panics unless every generator is nonnegative and nonzero.
    pub fn new(inis: &[Monomial]) -> Self {
        let generators: Vec<Vec<i64>> = inis.iter().map(|m| m.exponents().to_vec()).collect();
        assert!(
            generators
                .iter()
                .all(|g| g.iter().all(|&e| e >= 0) && g.iter().any(|&e| e > 0)),
            "exhaustive oracle needs nonzero nonnegative generators"
        );
        Self { generators }
    }

    fn search(&self, i: usize, rest: &mut Vec<i64>, u: &mut Vec<u64>) -> bool {
        if rest.iter().all(|&e| e == 0) {
            return true;
        }
        if i == self.generators.len() {
            return false;
        }
        let g = &self.generators[i];
        let max = g
            .iter()
            .zip(rest.iter())
            .filter(|(&ge, _)| ge > 0)
            .map(|(&ge, &re)| re / ge)
            .min()
            .unwrap_or(0)
            .max(0);
        for k in (0..=max).rev() {
            for (r, &ge) in rest.iter_mut().zip(g) {
                *r -= k * ge;
            }
            u[i] = k as u64;
            let found = self.search(i + 1, rest, u);
            for (r, &ge) in rest.iter_mut().zip(g) {
                *r += k * ge;
            }
            if found {
                return true;
            }
        }
        u[i] = 0;
        false
    }
}

impl ConeOracle for ExhaustiveOracle {
    fn decompose(&self, m: &Monomial) -> Option<Vec<u64>> {
        if !m.is_nonnegative() {
            return None;
        }
        let mut rest = m.exponents().to_vec();
        let mut u = vec![0; self.generators.len()];
        self.search(0, &mut rest, &mut u).then_some(u)
    }
}
