use std::collections::BTreeSet;

use serde::Serialize;

use super::params::{add, segment, unit, FamilyParams};
use crate::error::FamilyError;
use crate::lattice::ArrowVector;
use crate::limits::Limits;
use crate::poly::{Binomial, Monomial, Sign, TraceStep};
use crate::quiver::{primitive_cycles, Arrow, Quiver};

/// Label of the arrow `β_i` (1-based).
pub fn beta_label(i: usize) -> String {
    format!("beta{i}")
}

/// Endpoints of the five chains, after the identifications of the
/// degenerate cases.
pub(crate) struct Ends {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub e: usize,
}

pub(crate) fn q_ends(f: &FamilyParams) -> Ends {
    let FamilyParams { p, q, r, s, t } = *f;
    Ends {
        a: if p > 0 { p } else { 0 },
        b: if q > p { q } else { 0 },
        c: if r > q { r } else { 0 },
        d: if s > r { r + 5 } else { t + 5 },
        e: if t > s { s + 5 } else { t + 5 },
    }
}

/// Source and target of `β_i` (1-based) in `Q(p,q,r,s,t)`.
fn beta_ends(f: &FamilyParams, i: usize) -> (usize, usize) {
    let FamilyParams { p, q, r, s, t } = *f;
    let e = q_ends(f);
    let chain_start = |first: usize| if i == first { 0 } else { i - 1 };
    match i {
        _ if i <= p => (i - 1, i),
        _ if i <= q => (chain_start(p + 1), i),
        _ if i <= r => (chain_start(q + 1), i),
        _ if i == r + 1 => (e.a, r + 1),
        _ if i == r + 2 => (e.a, r + 2),
        _ if i == r + 3 => (e.b, r + 2),
        _ if i == r + 4 => (e.b, r + 3),
        _ if i == r + 5 => (e.c, r + 3),
        _ if i == r + 6 => (e.c, r + 4),
        _ if i == r + 7 => (e.d, r + 1),
        _ if i == r + 8 => (e.d, r + 2),
        _ if i == r + 9 => (e.e, r + 3),
        _ if i == r + 10 => (e.e, r + 4),
        _ if i <= s + 10 => (if i == s + 10 { t + 5 } else { i - 5 }, i - 6),
        _ => {
            debug_assert!(i <= t + 10);
            (i - 5, i - 6)
        }
    }
}

/// The quiver `Q(p,q,r,s,t)` on vertices `0 … t+5` with arrows
/// `β_1 … β_{t+10}` in index order.
pub fn build_q(params: &FamilyParams) -> Result<Quiver, FamilyError> {
    let FamilyParams { p, q, r, s, t } = *params;
    FamilyParams::new(p, q, r, s, t)?;
    let vertices = (0..=t + 5).map(|v| v.to_string()).collect();
    let arrows = (1..=t + 10)
        .map(|i| {
            let (src, tgt) = beta_ends(params, i);
            Arrow::new(beta_label(i), src, tgt)
        })
        .collect();
    Ok(Quiver::new(vertices, arrows)?)
}

/// `u_1 … u_15` (index 0 is `u_1`).
pub fn u_vectors(params: &FamilyParams) -> Vec<ArrowVector> {
    let FamilyParams { p, q, r, s, t } = *params;
    let n = params.narrows();
    let mut u: Vec<Vec<i64>> = (1..=10).map(|i| unit(n, r + i)).collect();
    u.push(segment(n, 1, p));
    u.push(segment(n, p + 1, q));
    u.push(segment(n, q + 1, r));
    u.push(segment(n, r + 11, s + 10));
    u.push(segment(n, s + 11, t + 10));
    u.into_iter().map(ArrowVector::new).collect()
}

/// `v_i = Σ_{j ∈ plus} u_j − Σ_{j ∈ minus} u_j`, as listed for `i = 1 … 26`.
pub const V_TABLE: [(&[usize], &[usize]); 26] = [
    (&[2, 11], &[3, 12]),
    (&[4, 12], &[5, 13]),
    (&[1, 8], &[2, 7]),
    (&[5, 10], &[6, 9]),
    (&[3, 9, 15], &[4, 8, 14]),
    (&[1, 9, 11, 15], &[4, 7, 12, 14]),
    (&[3, 10, 12, 15], &[6, 8, 13, 14]),
    (&[1, 10, 11, 15], &[6, 7, 13, 14]),
    (&[1, 8, 11], &[3, 7, 12]),
    (&[4, 10, 12], &[6, 9, 13]),
    (&[2, 4, 11], &[3, 5, 13]),
    (&[1, 3, 9, 15], &[2, 4, 7, 14]),
    (&[3, 5, 10, 15], &[4, 6, 8, 14]),
    (&[2, 9, 11, 15], &[4, 8, 12, 14]),
    (&[3, 9, 12, 15], &[5, 8, 13, 14]),
    (&[1, 4, 8, 11], &[3, 5, 7, 13]),
    (&[2, 4, 10, 11], &[3, 6, 9, 13]),
    (&[1, 3, 9, 12, 15], &[2, 5, 7, 13, 14]),
    (&[2, 5, 10, 11, 15], &[4, 6, 8, 12, 14]),
    (&[1, 3, 5, 10, 15], &[2, 4, 6, 7, 14]),
    (&[2, 9, 11, 15], &[5, 8, 13, 14]),
    (&[1, 4, 8, 10, 11], &[3, 6, 7, 9, 13]),
    (&[1, 9, 11, 15], &[5, 7, 13, 14]),
    (&[2, 10, 11, 15], &[6, 8, 13, 14]),
    (&[1, 5, 10, 11, 15], &[4, 6, 7, 12, 14]),
    (&[1, 3, 10, 12, 15], &[2, 6, 7, 13, 14]),
];

/// Sum of the listed u-vectors (1-based indices).
pub fn u_sum(params: &FamilyParams, indices: &[usize]) -> ArrowVector {
    let u = u_vectors(params);
    let refs: Vec<&[i64]> = indices.iter().map(|&j| u[j - 1].entries()).collect();
    if refs.is_empty() {
        return ArrowVector::zeros(params.narrows());
    }
    ArrowVector::new(add(&refs))
}

/// `v_1 … v_26` (index 0 is `v_1`).
pub fn v_vectors(params: &FamilyParams) -> Vec<ArrowVector> {
    V_TABLE
        .iter()
        .map(|(plus, minus)| &u_sum(params, plus) - &u_sum(params, minus))
        .collect()
}

/// `ξ_i = S^{v_i⁺} − S^{v_i⁻}` for `i = 1 … 26`.
pub fn xi_all(params: &FamilyParams) -> Vec<Binomial> {
    v_vectors(params).into_iter().map(Binomial::new).collect()
}

/// The generators `ξ_1 … ξ_8`.
pub fn xi_generators(params: &FamilyParams) -> Vec<Binomial> {
    let mut xi = xi_all(params);
    xi.truncate(8);
    xi
}

pub fn xi_names() -> Vec<String> {
    (1..=26).map(|i| format!("xi{i}")).collect()
}

fn u_monomial(params: &FamilyParams, indices: &[usize]) -> Monomial {
    Monomial::new(u_sum(params, indices).into_entries())
}

/// `ξ_9 = S^{u_11} ξ_3 + S^{u_7} ξ_1`.
pub fn displayed_trace_xi9(params: &FamilyParams) -> Vec<TraceStep> {
    vec![
        TraceStep::new(Sign::Plus, 2, u_monomial(params, &[11])),
        TraceStep::new(Sign::Plus, 0, u_monomial(params, &[7])),
    ]
}

/// `ξ_21 = S^{u_9} S^{u_15} ξ_1 + S^{u_12} ξ_5 + S^{u_8} S^{u_14} ξ_2`.
pub fn displayed_trace_xi21(params: &FamilyParams) -> Vec<TraceStep> {
    vec![
        TraceStep::new(Sign::Plus, 0, u_monomial(params, &[9, 15])),
        TraceStep::new(Sign::Plus, 4, u_monomial(params, &[12])),
        TraceStep::new(Sign::Plus, 1, u_monomial(params, &[8, 14])),
    ]
}

/// Outcome of comparing enumerated cycle vectors with `±v_1 … ±v_26`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleMatch {
    pub classes: usize,
    /// For each cycle class (in enumeration order), the `i` with vector `±v_i`.
    pub assignment: Vec<usize>,
}

/// Checks that the primitive cycle classes of `Q(p,q,r,s,t)` give exactly the
/// vectors `±v_1 … ±v_26`. Strict parameters only.
pub fn match_cycles(params: &FamilyParams, limits: &Limits) -> Result<CycleMatch, FamilyError> {
    if !params.is_strict() {
        return Err(FamilyError::NotStrict);
    }
    let quiver = build_q(params)?;
    let cycles = primitive_cycles(&quiver, limits)?;
    let vs = v_vectors(params);
    let signed = |w: &ArrowVector| -> Vec<i64> {
        let neg = -w.clone();
        std::cmp::max(w.entries().to_vec(), neg.into_entries())
    };
    let expected: BTreeSet<Vec<i64>> = vs.iter().map(signed).collect();
    let mut found = BTreeSet::new();
    let mut assignment = Vec::new();
    let mut extra = Vec::new();
    for c in &cycles {
        let key = signed(&c.vector(&quiver));
        match vs.iter().position(|v| signed(v) == key) {
            Some(i) => assignment.push(i + 1),
            None => extra.push(c.to_string()),
        }
        found.insert(key);
    }
    let missing: Vec<String> = vs
        .iter()
        .enumerate()
        .filter(|(_, v)| !found.contains(&signed(v)))
        .map(|(i, _)| format!("v{}", i + 1))
        .collect();
    if missing.is_empty()
        && extra.is_empty()
        && cycles.len() == expected.len()
        && expected.len() == 26
    {
        Ok(CycleMatch {
            classes: cycles.len(),
            assignment,
        })
    } else {
        Err(FamilyError::Mismatch {
            missing: missing.len(),
            extra: extra.len() + cycles.len().saturating_sub(found.len()),
            report: format!(
                "missing [{}]; extra [{}]",
                missing.join(", "),
                extra.join("; ")
            ),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::in_kernel;

    fn strict() -> FamilyParams {
        FamilyParams::new(1, 2, 3, 4, 5).unwrap()
    }

    #[test]
    fn smallest_quiver_shape() {
        let f = FamilyParams::new(0, 0, 0, 0, 0).unwrap();
        let q = build_q(&f).unwrap();
        assert_eq!((q.vertex_count(), q.arrow_count()), (6, 10));
        let ends: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
        assert_eq!(
            ends,
            vec![
                (0, 1),
                (0, 2),
                (0, 2),
                (0, 3),
                (0, 3),
                (0, 4),
                (5, 1),
                (5, 2),
                (5, 3),
                (5, 4)
            ]
        );
    }

    #[test]
    fn strict_quiver_shape() {
        let q = build_q(&strict()).unwrap();
        assert_eq!((q.vertex_count(), q.arrow_count()), (11, 15));
        let arrow = |i: usize| {
            let a = q.arrow(i - 1);
            (a.source, a.target)
        };
        assert_eq!(arrow(1), (0, 1));
        assert_eq!(arrow(2), (0, 2));
        assert_eq!(arrow(3), (0, 3));
        assert_eq!(arrow(4), (1, 4));
        assert_eq!(arrow(6), (2, 5));
        assert_eq!(arrow(8), (3, 6));
        assert_eq!(arrow(10), (8, 4));
        assert_eq!(arrow(13), (9, 7));
        assert_eq!(arrow(14), (10, 8));
        assert_eq!(arrow(15), (10, 9));
    }

    #[test]
    fn every_v_is_balanced() {
        for f in FamilyParams::all_up_to(3) {
            let q = build_q(&f).unwrap();
            for v in v_vectors(&f) {
                assert!(in_kernel(&q, &v).unwrap(), "{f}: {v}");
            }
        }
    }

    #[test]
    fn degenerate_u_segments_vanish() {
        let f = FamilyParams::new(0, 0, 0, 0, 0).unwrap();
        let u = u_vectors(&f);
        assert!(u[10..].iter().all(ArrowVector::is_zero));
        let v = v_vectors(&f);
        assert_eq!(v[0], &u[1] - &u[2]);
    }

    #[test]
    fn strict_v_are_distinct() {
        let v = v_vectors(&strict());
        let set: BTreeSet<Vec<i64>> = v.iter().map(|x| x.entries().to_vec()).collect();
        assert_eq!(set.len(), 26);
        assert!(v.iter().all(|x| !x.is_zero()));
    }

    #[test]
    fn strict_cycles_match() {
        let m = match_cycles(&strict(), &Limits::default()).unwrap();
        assert_eq!(m.classes, 26);
        let distinct: BTreeSet<usize> = m.assignment.iter().copied().collect();
        assert_eq!(distinct.len(), 26);
    }

    #[test]
    fn degenerate_is_not_strict() {
        let f = FamilyParams::new(0, 0, 0, 0, 0).unwrap();
        assert_eq!(
            match_cycles(&f, &Limits::default()).unwrap_err(),
            FamilyError::NotStrict
        );
    }
}
