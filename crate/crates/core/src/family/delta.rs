use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::b_polys;
use super::params::{segment, FamilyParams};
use super::q::{build_q, q_ends};
use crate::error::FamilyError;
use crate::linalg::{rat, Matrix, Rational};
use crate::poly::{Monomial, Polynomial};
use crate::quiver::{Arrow, Quiver};

/// Assignment of a matrix of shape `d_{tα} × d_{sα}` to every arrow `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepPoint {
    pub quiver: Quiver,
    pub dims: Vec<usize>,
    pub matrices: Vec<Matrix>,
}

impl RepPoint {
    pub fn new(
        quiver: Quiver,
        dims: Vec<usize>,
        matrices: Vec<Matrix>,
    ) -> Result<Self, FamilyError> {
        let bad = |detail: String| FamilyError::CertificateFailure {
            check: "representation shape".to_string(),
            detail,
        };
        if dims.len() != quiver.vertex_count() || matrices.len() != quiver.arrow_count() {
            return Err(bad(format!(
                "{} dimensions and {} matrices for {} vertices and {} arrows",
                dims.len(),
                matrices.len(),
                quiver.vertex_count(),
                quiver.arrow_count()
            )));
        }
        for (a, m) in quiver.arrows().iter().zip(&matrices) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(bad(format!(
                    "arrow {} carries a {:?} matrix",
                    a.label,
                    m.shape()
                )));
            }
        }
        Ok(Self {
            quiver,
            dims,
            matrices,
        })
    }

    pub fn render(&self) -> String {
        self.quiver
            .arrows()
            .iter()
            .zip(&self.matrices)
            .map(|(a, m)| format!("{}: {m}", a.label))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// An invertible block per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub blocks: Vec<Matrix>,
}

impl GroupElement {
    /// `(g_{tα} M_α g_{sα}^{-1})_α`.
    pub fn act(&self, point: &RepPoint) -> Result<RepPoint, FamilyError> {
        let inverses: Vec<Matrix> = self
            .blocks
            .iter()
            .enumerate()
            .map(|(v, g)| {
                g.inverse().ok_or_else(|| FamilyError::CertificateFailure {
                    check: "group element".to_string(),
                    detail: format!("block at vertex {v} is singular"),
                })
            })
            .collect::<Result<_, _>>()?;
        let matrices = point
            .quiver
            .arrows()
            .iter()
            .zip(&point.matrices)
            .map(|(a, m)| &(&self.blocks[a.target] * m) * &inverses[a.source])
            .collect();
        RepPoint::new(point.quiver.clone(), point.dims.clone(), matrices)
    }
}

pub fn alpha_label(i: usize) -> String {
    format!("alpha{i}")
}

fn alpha_ends(f: &FamilyParams, i: usize) -> (usize, usize) {
    let FamilyParams { p, q, r, s, t } = *f;
    let e = q_ends(f);
    match i {
        _ if i <= r => (i, if i == p + 1 || i == q + 1 { 0 } else { i - 1 }),
        _ if i == r + 1 => (r + 1, e.a),
        _ if i == r + 2 => (r + 1, e.b),
        _ if i == r + 3 => (r + 1, e.c),
        _ if i == r + 4 => (if s > r { r + 2 } else { t + 2 }, r + 1),
        _ if i == r + 5 => (if t > s { s + 2 } else { t + 2 }, r + 1),
        _ if i <= s + 5 => (if i == s + 5 { t + 2 } else { i - 3 }, i - 4),
        _ => (i - 3, i - 4),
    }
}

/// The quiver `Δ` on vertices `0 … t+2` with arrows `α_1 … α_{t+5}`.
pub fn build_delta(params: &FamilyParams) -> Result<Quiver, FamilyError> {
    let FamilyParams { p, q, r, s, t } = *params;
    FamilyParams::new(p, q, r, s, t)?;
    let vertices = (0..=t + 2).map(|v| v.to_string()).collect();
    let arrows = (1..=t + 5)
        .map(|i| {
            let (src, tgt) = alpha_ends(params, i);
            Arrow::new(alpha_label(i), src, tgt)
        })
        .collect();
    Ok(Quiver::new(vertices, arrows)?)
}

/// Dimension vector: 2 at vertex `r+1`, 1 elsewhere.
pub fn delta_dims(params: &FamilyParams) -> Vec<usize> {
    (0..=params.t + 2)
        .map(|v| if v == params.r + 1 { 2 } else { 1 })
        .collect()
}

/// `(Δ, P)`.
pub fn build_delta_p(params: &FamilyParams) -> Result<(Quiver, RepPoint), FamilyError> {
    let delta = build_delta(params)?;
    let r = params.r;
    let matrices = (1..=params.t + 5)
        .map(|i| match i.saturating_sub(r) {
            1 => Matrix::from_ints(&[&[1, 0]]),
            2 => Matrix::from_ints(&[&[-1, -1]]),
            3 => Matrix::from_ints(&[&[0, 1]]),
            4 => Matrix::from_ints(&[&[0], &[1]]),
            5 => Matrix::from_ints(&[&[1], &[0]]),
            _ => Matrix::identity(1),
        })
        .collect();
    let point = RepPoint::new(delta.clone(), delta_dims(params), matrices)?;
    Ok((delta, point))
}

/// Matrix of polynomials, row-major.
pub type PolyMatrix = Vec<Vec<Polynomial>>;

/// `T^{e_{[lo,hi]}}` as a monomial in `n` variables.
pub(crate) fn tseg(n: usize, lo: usize, hi: usize) -> Monomial {
    Monomial::new(segment(n, lo, hi))
}

/// `T_i` (1-based).
pub(crate) fn tvar(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i - 1)
}

/// The entries of `Φ(x)_{α_i}` as polynomials in `x_1 … x_{t+5}`.
pub fn phi_symbolic(params: &FamilyParams) -> Vec<PolyMatrix> {
    let FamilyParams { p, q, r, s, t } = *params;
    let n = params.nvars();
    let x = |i: usize| tvar(n, i);
    let neg = |a: &Polynomial| -a;
    (1..=t + 5)
        .map(|i| match i {
            _ if i <= r || i >= r + 6 => vec![vec![x(i)]],
            _ if i == r + 1 => {
                let c = tseg(n, p + 1, r);
                vec![vec![x(r + 1).mul_monomial(&c), x(r + 3).mul_monomial(&c)]]
            }
            _ if i == r + 2 => {
                let c = tseg(n, 1, p).mul(&tseg(n, q + 1, r));
                vec![vec![
                    neg(&(&x(r + 1) + &x(r + 4))).mul_monomial(&c),
                    neg(&(&x(r + 2) + &x(r + 3))).mul_monomial(&c),
                ]]
            }
            _ if i == r + 3 => {
                let c = tseg(n, 1, q);
                vec![vec![x(r + 4).mul_monomial(&c), x(r + 2).mul_monomial(&c)]]
            }
            _ if i == r + 4 => {
                let c = Monomial::var(n, r + 4).mul(&tseg(n, s + 6, t + 5));
                vec![
                    vec![neg(&x(r + 3)).mul_monomial(&c)],
                    vec![x(r + 1).mul_monomial(&c)],
                ]
            }
            _ => {
                let c = Monomial::var(n, r + 4).mul(&tseg(n, r + 6, s + 5));
                vec![
                    vec![x(r + 2).mul_monomial(&c)],
                    vec![neg(&x(r + 4)).mul_monomial(&c)],
                ]
            }
        })
        .collect()
}

fn eval_matrix(m: &PolyMatrix, x: &[Rational]) -> Matrix {
    Matrix::from_rows(
        m.iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.eval(x).expect("polynomial entries"))
                    .collect()
            })
            .collect(),
    )
}

fn check_point(params: &FamilyParams, x: &[Rational]) -> Result<(), FamilyError> {
    if x.len() != params.nvars() {
        return Err(FamilyError::NotInU(format!(
            "point has {} coordinates, expected {}",
            x.len(),
            params.nvars()
        )));
    }
    Ok(())
}

/// `Φ(x) ∈ rep_Δ(d)`.
pub fn phi(params: &FamilyParams, x: &[Rational]) -> Result<RepPoint, FamilyError> {
    check_point(params, x)?;
    let delta = build_delta(params)?;
    let matrices = phi_symbolic(params)
        .iter()
        .map(|m| eval_matrix(m, x))
        .collect();
    RepPoint::new(delta, delta_dims(params), matrices)
}

/// `Ψ(x) ∈ rep_Q((1))`: the arrow `β_i` carries `[b_i(x)]`.
pub fn psi(params: &FamilyParams, x: &[Rational]) -> Result<RepPoint, FamilyError> {
    check_point(params, x)?;
    let quiver = build_q(params)?;
    let matrices = b_polys(params)
        .iter()
        .map(|b| Matrix::scalar(b.eval(x).expect("polynomial entries")))
        .collect();
    let dims = vec![1; quiver.vertex_count()];
    RepPoint::new(quiver, dims, matrices)
}

fn det_x(params: &FamilyParams, x: &[Rational]) -> Rational {
    let r = params.r;
    &x[r] * &x[r + 1] - &x[r + 2] * &x[r + 3]
}

/// Membership in the open set `U`.
pub fn in_u(params: &FamilyParams, x: &[Rational]) -> Result<(), FamilyError> {
    check_point(params, x)?;
    let FamilyParams { r, t, .. } = *params;
    if let Some(i) = (1..=r).chain(r + 5..=t + 5).find(|&i| x[i - 1].is_zero()) {
        return Err(FamilyError::NotInU(format!("x_{i} = 0")));
    }
    if det_x(params, x).is_zero() {
        return Err(FamilyError::NotInU(format!(
            "x_{} x_{} = x_{} x_{}",
            r + 1,
            r + 2,
            r + 3,
            r + 4
        )));
    }
    Ok(())
}

fn xprod(x: &[Rational], lo: usize, hi: usize) -> Rational {
    (lo..=hi).fold(Rational::one(), |acc, i| acc * &x[i - 1])
}

/// The element `g(x)` with `g(x) · Φ(x) = P`, indexed by all vertices of `Δ`.
pub fn group_element(params: &FamilyParams, x: &[Rational]) -> Result<GroupElement, FamilyError> {
    in_u(params, x)?;
    let FamilyParams { p, q, r, s, t } = *params;
    let base = xprod(x, 1, r);
    let tail = &base * det_x(params, x) * &x[r + 4];
    let blocks = (0..=t + 2)
        .map(|v| match v {
            _ if v <= p => Matrix::scalar(xprod(x, 1, v)),
            _ if v <= q => Matrix::scalar(xprod(x, p + 1, v)),
            _ if v <= r => Matrix::scalar(xprod(x, q + 1, v)),
            _ if v == r + 1 => Matrix::from_rows(vec![
                vec![x[r].clone(), x[r + 2].clone()],
                vec![x[r + 3].clone(), x[r + 1].clone()],
            ])
            .scale(&base),
            _ if v <= s + 1 => {
                Matrix::scalar(&tail * xprod(x, r + 6, v + 3) * xprod(x, s + 6, t + 5))
            }
            _ => Matrix::scalar(&tail * xprod(x, r + 6, s + 5) * xprod(x, s + 6, v + 3)),
        })
        .collect();
    Ok(GroupElement { blocks })
}

/// Checks `g(x) · Φ(x) = P` exactly; on mismatch names the first bad arrow.
pub fn verify_orbit(params: &FamilyParams, x: &[Rational]) -> Result<(), FamilyError> {
    let g = group_element(params, x)?;
    let image = g.act(&phi(params, x)?)?;
    let (_, target) = build_delta_p(params)?;
    for ((a, got), want) in target
        .quiver
        .arrows()
        .iter()
        .zip(&image.matrices)
        .zip(&target.matrices)
    {
        if got != want {
            return Err(FamilyError::CertificateFailure {
                check: "g(x)·Φ(x) = P".to_string(),
                detail: format!("arrow {}: got {got}, expected {want}", a.label),
            });
        }
    }
    Ok(())
}

/// A random point of `U`: coordinates `±n/d` with `n, d` uniform in `[1, 100]`,
/// resampled until the determinant condition holds.
pub fn sample_in_u<R: Rng>(params: &FamilyParams, rng: &mut R) -> Vec<Rational> {
    loop {
        let x: Vec<Rational> = (0..params.nvars())
            .map(|_| {
                let n: i64 = rng.gen_range(1..=100);
                let d: i64 = rng.gen_range(1..=100);
                let v = Rational::new(n.into(), d.into());
                if rng.gen_bool(0.5) {
                    -v
                } else {
                    v
                }
            })
            .collect();
        if in_u(params, &x).is_ok() {
            return x;
        }
    }
}

/// `count` points of `U` drawn from a ChaCha stream seeded with `seed`.
pub fn sample_points(params: &FamilyParams, seed: u64, count: usize) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| sample_in_u(params, &mut rng)).collect()
}

/// Jacobian of all matrix entries of `Φ` with respect to `x`, evaluated at `x`.
pub fn phi_jacobian(params: &FamilyParams, x: &[Rational]) -> Result<Matrix, FamilyError> {
    check_point(params, x)?;
    let n = params.nvars();
    let entries: Vec<Polynomial> = phi_symbolic(params)
        .into_iter()
        .flatten()
        .flatten()
        .collect();
    let rows = entries
        .iter()
        .map(|e| {
            (0..n)
                .map(|j| e.derivative(j).eval(x).map_err(FamilyError::from))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows))
}

/// Rank of the Jacobian of `Φ` at `x`.
pub fn phi_rank(params: &FamilyParams, x: &[Rational]) -> Result<usize, FamilyError> {
    Ok(phi_jacobian(params, x)?.rank())
}

/// Largest `phi_rank` over `count` seeded points of `U`.
pub fn generic_phi_rank(
    params: &FamilyParams,
    seed: u64,
    count: usize,
) -> Result<usize, FamilyError> {
    sample_points(params, seed, count)
        .iter()
        .map(|x| phi_rank(params, x))
        .try_fold(0, |best, r| Ok(best.max(r?)))
}

/// The all-ones point.
pub fn ones(params: &FamilyParams) -> Vec<Rational> {
    vec![rat(1); params.nvars()]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    fn strict() -> FamilyParams {
        FamilyParams::new(1, 2, 3, 4, 5).unwrap()
    }

    #[test]
    fn delta_shape() {
        for f in FamilyParams::all_up_to(3) {
            let (d, p) = build_delta_p(&f).unwrap();
            assert_eq!(d.vertex_count(), f.t + 3);
            assert_eq!(d.arrow_count(), f.t + 5);
            assert_eq!(p.dims.iter().sum::<usize>(), f.t + 4);
        }
    }

    #[test]
    fn displayed_matrices() {
        let f = strict();
        let (_, p) = build_delta_p(&f).unwrap();
        assert_eq!(p.matrices[f.r + 1], Matrix::from_ints(&[&[-1, -1]]));
        assert_eq!(p.matrices[f.r + 3].shape(), (2, 1));
        assert_eq!(p.matrices[0], Matrix::identity(1));
    }

    #[test]
    fn phi_entry_for_second_hub_arrow() {
        let f = strict();
        let x: Vec<Rational> = (1..=10).map(rat).collect();
        let m = &phi(&f, &x).unwrap().matrices[f.r + 1];
        // x1 * x3 * [-(x4 + x7), -(x5 + x6)]
        assert_eq!(m, &Matrix::from_ints(&[&[-33, -33]]));
    }

    #[test]
    fn psi_at_ones_is_v() {
        let f = FamilyParams::new(0, 0, 0, 0, 0).unwrap();
        let v = psi(&f, &ones(&f)).unwrap();
        assert!(v.matrices.iter().all(|m| *m == Matrix::identity(1)));
    }

    #[test]
    fn orbit_identity_on_samples() {
        for f in [strict(), FamilyParams::new(0, 0, 0, 0, 0).unwrap()] {
            for x in sample_points(&f, 7, 10) {
                verify_orbit(&f, &x).unwrap();
            }
        }
    }

    #[test]
    fn determinant_condition() {
        let f = FamilyParams::new(0, 0, 0, 0, 0).unwrap();
        let mut x = ones(&f);
        assert!(matches!(verify_orbit(&f, &x), Err(FamilyError::NotInU(_))));
        x[0] = ratio(3, 2);
        verify_orbit(&f, &x).unwrap();
    }

    #[test]
    fn rank_is_t_plus_five() {
        let f = FamilyParams::new(1, 1, 1, 1, 1).unwrap();
        assert_eq!(generic_phi_rank(&f, 3, 3).unwrap(), 6);
        assert_eq!(generic_phi_rank(&strict(), 3, 3).unwrap(), 10);
    }
}
