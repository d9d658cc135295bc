//! Integer lattice vectors over vertices and arrows, the incidence map
//! `U(f_α) = e_tα - e_sα`, the cones `C_Q` and `X_Q`, and the walk that
//! extracts sign-compatible cycles from kernel vectors.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::LatticeError;
use crate::limits::Limits;
use crate::quiver::{Filter, NonorientedWalk, PrimitiveCycle, Quiver, Step, VertexSet};

/// Marker for vectors indexed by vertices (`Z^{Q_0}`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertices;

/// Marker for vectors indexed by arrows (`Z^{Q_1}`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrows;

/// Integer vector over a fixed index space. Arithmetic between the two index
/// spaces does not type-check; lengths are checked at runtime.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector<S> {
    entries: Vec<i64>,
    _space: PhantomData<S>,
}

pub type VertexVector = LatticeVector<Vertices>;
pub type ArrowVector = LatticeVector<Arrows>;

impl<S> LatticeVector<S> {
    pub fn new(entries: Vec<i64>) -> Self {
        Self {
            entries,
            _space: PhantomData,
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.entries[i] = 1;
        v
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    /// `Σ |w_i|`
    pub fn l1_norm(&self) -> i64 {
        self.entries
            .iter()
            .try_fold(0i64, |acc, x| acc.checked_add(x.checked_abs()?))
            .expect("lattice entry overflow")
    }

    pub fn sum(&self) -> i64 {
        self.entries
            .iter()
            .try_fold(0i64, |acc, &x| acc.checked_add(x))
            .expect("lattice entry overflow")
    }

    /// Sum of the coordinates in `set` (`x_F`).
    pub fn partial_sum(&self, set: VertexSet) -> i64 {
        set.iter()
            .filter(|&v| v < self.entries.len())
            .try_fold(0i64, |acc, v| acc.checked_add(self.entries[v]))
            .expect("lattice entry overflow")
    }

    /// `w⁺`, coordinatewise `max(w, 0)`.
    pub fn positive_part(&self) -> Self {
        Self::new(self.entries.iter().map(|&x| x.max(0)).collect())
    }

    /// `w⁻`, coordinatewise `max(-w, 0)`.
    pub fn negative_part(&self) -> Self {
        Self::new(
            self.entries
                .iter()
                .map(|&x| x.checked_neg().expect("lattice entry overflow").max(0))
                .collect(),
        )
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&x| x >= 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &Self) -> bool {
        self.entries.len() == other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i64, i64) -> Option<i64>) -> Self {
        assert_eq!(
            self.entries.len(),
            other.entries.len(),
            "lattice vectors over different index spaces"
        );
        Self::new(
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| f(a, b).expect("lattice entry overflow"))
                .collect(),
        )
    }
}

impl<S> fmt::Debug for LatticeVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.entries)
    }
}

impl<S> fmt::Display for LatticeVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl<S> Serialize for LatticeVector<S> {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        self.entries.serialize(s)
    }
}

impl<S> Add for LatticeVector<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip_with(&rhs, i64::checked_add)
    }
}

impl<S> Add<&LatticeVector<S>> for &LatticeVector<S> {
    type Output = LatticeVector<S>;
    fn add(self, rhs: &LatticeVector<S>) -> LatticeVector<S> {
        self.zip_with(rhs, i64::checked_add)
    }
}

impl<S> Sub for LatticeVector<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip_with(&rhs, i64::checked_sub)
    }
}

impl<S> Sub<&LatticeVector<S>> for &LatticeVector<S> {
    type Output = LatticeVector<S>;
    fn sub(self, rhs: &LatticeVector<S>) -> LatticeVector<S> {
        self.zip_with(rhs, i64::checked_sub)
    }
}

impl<S> Neg for LatticeVector<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(
            self.entries
                .into_iter()
                .map(|x| x.checked_neg().expect("lattice entry overflow"))
                .collect(),
        )
    }
}

impl<S> Mul<i64> for LatticeVector<S> {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        Self::new(
            self.entries
                .into_iter()
                .map(|x| x.checked_mul(k).expect("lattice entry overflow"))
                .collect(),
        )
    }
}

pub fn positive_part(w: &ArrowVector) -> ArrowVector {
    w.positive_part()
}

pub fn negative_part(w: &ArrowVector) -> ArrowVector {
    w.negative_part()
}

/// The incidence homomorphism `U : Z^{Q_1} → Z^{Q_0}`, `f_α ↦ e_tα − e_sα`.
#[derive(Clone, Copy, Debug)]
pub struct IncidenceMap<'q> {
    quiver: &'q Quiver,
}

impl<'q> IncidenceMap<'q> {
    pub fn new(quiver: &'q Quiver) -> Self {
        Self { quiver }
    }

    /// `e_α = e_tα − e_sα`
    pub fn arrow_image(&self, arrow: usize) -> VertexVector {
        let a = self.quiver.arrow(arrow);
        let mut x = VertexVector::zeros(self.quiver.vertex_count());
        x.entries[a.target] += 1;
        x.entries[a.source] -= 1;
        x
    }

    pub fn apply(&self, w: &ArrowVector) -> Result<VertexVector, LatticeError> {
        check_len(w.len(), self.quiver.arrow_count())?;
        let mut x = vec![0i64; self.quiver.vertex_count()];
        for (a, &c) in self.quiver.arrows().iter().zip(w.entries()) {
            x[a.target] = x[a.target].checked_add(c).expect("lattice entry overflow");
            x[a.source] = x[a.source].checked_sub(c).expect("lattice entry overflow");
        }
        Ok(VertexVector::new(x))
    }

    /// First vertex at which the balance condition fails, if any.
    pub fn unbalanced_vertex(&self, w: &ArrowVector) -> Result<Option<usize>, LatticeError> {
        Ok(self.apply(w)?.entries().iter().position(|&x| x != 0))
    }

    pub fn in_kernel(&self, w: &ArrowVector) -> Result<bool, LatticeError> {
        Ok(self.unbalanced_vertex(w)?.is_none())
    }
}

pub fn apply_u(quiver: &Quiver, w: &ArrowVector) -> Result<VertexVector, LatticeError> {
    IncidenceMap::new(quiver).apply(w)
}

pub fn in_kernel(quiver: &Quiver, w: &ArrowVector) -> Result<bool, LatticeError> {
    IncidenceMap::new(quiver).in_kernel(w)
}

fn check_len(found: usize, expected: usize) -> Result<(), LatticeError> {
    if found != expected {
        return Err(LatticeError::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Why a vertex vector lies outside `X_Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConeViolation {
    /// `x_{Q_0} ≠ 0`
    NonZeroTotal(i64),
    /// A filter with negative partial sum.
    Filter { filter: Filter, sum: i64 },
}

impl fmt::Display for ConeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NonZeroTotal(s) => write!(f, "coordinate sum is {s}, not 0"),
            Self::Filter { filter, sum } => {
                let vs: Vec<String> = filter.vertices().map(|v| v.to_string()).collect();
                write!(f, "filter {{{}}} has sum {sum}", vs.join(","))
            }
        }
    }
}

/// The first reason `x ∉ X_Q`, scanning filters in increasing mask order.
pub fn xq_violation(
    quiver: &Quiver,
    x: &VertexVector,
    limits: &Limits,
) -> Result<Option<ConeViolation>, LatticeError> {
    check_len(x.len(), quiver.vertex_count())?;
    let total = x.sum();
    if total != 0 {
        return Ok(Some(ConeViolation::NonZeroTotal(total)));
    }
    for filter in quiver.filters(limits)? {
        let sum = x.partial_sum(filter.set());
        if sum < 0 {
            return Ok(Some(ConeViolation::Filter { filter, sum }));
        }
    }
    Ok(None)
}

/// `x ∈ X_Q`: zero total and nonnegative sum over every filter.
pub fn in_xq(quiver: &Quiver, x: &VertexVector, limits: &Limits) -> Result<bool, LatticeError> {
    Ok(xq_violation(quiver, x, limits)?.is_none())
}

/// Arrow multiplicities `m ≥ 0` with `U(m) = x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeDecomposition {
    pub multiplicities: ArrowVector,
}

impl ConeDecomposition {
    pub fn render(&self, quiver: &Quiver) -> String {
        let parts: Vec<String> = self
            .multiplicities
            .entries()
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(a, m)| format!("{}:{}", quiver.arrow(a).label, m))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" ")
        }
    }
}

/// Writes `x` as a nonnegative combination of the vectors `e_α`.
///
/// Follows the double induction that shows `X_Q ⊆ C_Q`:
/// - without arrows, `x` must be zero;
/// - if a proper nonempty filter `F` has `x_F = 0`, split into the full
///   subquivers on `F` and its complement and recurse;
/// - otherwise every proper nonempty filter has positive sum, so subtracting
///   `e_α` for the least arrow keeps `x` in the cone (the successor closure of
///   `tα` is a filter missing `sα`) and strictly lowers `Σ_F x_F`.
pub fn decompose_cq(
    quiver: &Quiver,
    x: &VertexVector,
    limits: &Limits,
) -> Result<ConeDecomposition, LatticeError> {
    if let Some(violation) = xq_violation(quiver, x, limits)? {
        return Err(LatticeError::NotInCone(violation));
    }
    let mut residual = x.entries().to_vec();
    let mut multiplicities = vec![0i64; quiver.arrow_count()];
    let support = VertexSet::full(quiver.vertex_count());
    decompose_within(quiver, support, &mut residual, &mut multiplicities, limits)?;
    debug_assert!(residual.iter().all(|&v| v == 0));
    Ok(ConeDecomposition {
        multiplicities: ArrowVector::new(multiplicities),
    })
}

fn decompose_within(
    quiver: &Quiver,
    support: VertexSet,
    x: &mut [i64],
    multiplicities: &mut [i64],
    limits: &Limits,
) -> Result<(), LatticeError> {
    let arrows: Vec<usize> = quiver
        .arrows()
        .iter()
        .enumerate()
        .filter(|(_, a)| support.contains(a.source) && support.contains(a.target))
        .map(|(i, _)| i)
        .collect();
    if arrows.is_empty() {
        // Singletons are filters here, so X-membership forces x = 0 on support.
        return match support.iter().find(|&v| x[v] != 0) {
            None => Ok(()),
            Some(v) => Err(LatticeError::NotInCone(ConeViolation::Filter {
                filter: Filter(VertexSet::from_vertices([v])),
                sum: x[v],
            })),
        };
    }
    let filters = quiver.filters_within(support, limits)?;
    let proper = |f: &VertexSet| !f.is_empty() && *f != support;
    loop {
        let mut tight = None;
        for f in filters.iter().filter(|f| proper(f)) {
            let sum: i64 = f.iter().map(|v| x[v]).sum();
            if sum < 0 {
                return Err(LatticeError::NotInCone(ConeViolation::Filter {
                    filter: Filter(*f),
                    sum,
                }));
            }
            if sum == 0 && tight.is_none() {
                tight = Some(*f);
            }
        }
        if let Some(f) = tight {
            decompose_within(quiver, f, x, multiplicities, limits)?;
            decompose_within(quiver, support.difference(f), x, multiplicities, limits)?;
            return Ok(());
        }
        let alpha = arrows[0];
        let a = quiver.arrow(alpha);
        debug_assert!(!quiver.successor_closure(a.target).contains(a.source));
        x[a.target] -= 1;
        x[a.source] += 1;
        multiplicities[alpha] += 1;
    }
}

/// Outcome of the exhaustive comparison of `X_Q` with `C_Q` on a box.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ConeEquality {
    Equal {
        points_checked: u64,
        in_cone: u64,
    },
    Counterexample {
        point: VertexVector,
        in_xq: bool,
        decomposed: bool,
    },
}

impl ConeEquality {
    pub fn is_equal(&self) -> bool {
        matches!(self, Self::Equal { .. })
    }
}

/// Checks `x ∈ X_Q ⟺ decompose_cq(x)` succeeds (with a verified
/// decomposition) for every zero-sum `x ∈ [-B, B]^{Q_0}`. The first
/// discrepancy in enumeration order is returned.
pub fn brute_force_cone_equality(
    quiver: &Quiver,
    bound: i64,
    limits: &Limits,
) -> Result<ConeEquality, LatticeError> {
    let n = quiver.vertex_count();
    let side = (2 * bound + 1) as u64;
    let points = side
        .checked_pow(n.saturating_sub(1) as u32)
        .unwrap_or(u64::MAX);
    if points > limits.max_box_points {
        return Err(LatticeError::Quiver(crate::error::QuiverError::SizeLimit {
            what: "box points",
            needed: points,
            bound: limits.max_box_points,
        }));
    }
    let filters = quiver.filters(limits)?;
    let map = IncidenceMap::new(quiver);
    let mut checked = 0u64;
    let mut accepted = 0u64;
    for point in ZeroSumBox::new(n, bound) {
        checked += 1;
        let x = VertexVector::new(point);
        let member = filters.iter().all(|f| x.partial_sum(f.set()) >= 0);
        let decomposed = match decompose_cq(quiver, &x, limits) {
            Ok(d) => d.multiplicities.is_nonnegative() && map.apply(&d.multiplicities)? == x,
            Err(LatticeError::NotInCone(_)) => false,
            Err(e) => return Err(e),
        };
        if member != decomposed {
            return Ok(ConeEquality::Counterexample {
                point: x,
                in_xq: member,
                decomposed,
            });
        }
        accepted += member as u64;
    }
    Ok(ConeEquality::Equal {
        points_checked: checked,
        in_cone: accepted,
    })
}

/// Zero-sum integer points of `[-B, B]^n` in lexicographic order.
pub struct ZeroSumBox {
    bound: i64,
    current: Option<Vec<i64>>,
}

impl ZeroSumBox {
    pub fn new(n: usize, bound: i64) -> Self {
        let current = if n == 0 {
            None
        } else {
            Some(vec![-bound; n - 1])
        };
        Self { bound, current }
    }
}

impl Iterator for ZeroSumBox {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        loop {
            let head = self.current.as_mut()?;
            let last = -head.iter().sum::<i64>();
            let candidate = (last.abs() <= self.bound).then(|| {
                let mut p = head.clone();
                p.push(last);
                p
            });
            // advance odometer
            let mut i = head.len();
            loop {
                if i == 0 {
                    self.current = None;
                    break;
                }
                i -= 1;
                if head[i] < self.bound {
                    head[i] += 1;
                    break;
                }
                head[i] = -self.bound;
            }
            if candidate.is_some() {
                return candidate;
            }
        }
    }
}

/// A primitive cycle `u` with `u⁺ ≤ w⁺` and `u⁻ ≤ w⁻`.
///
/// Walks forward along arrows with `w_α > 0` and backward along arrows with
/// `w_α < 0` (least admissible arrow first) until a vertex repeats; the
/// balance condition guarantees the walk never gets stuck. The walk starts at
/// the least vertex incident to a nonzero coordinate.
pub fn dominating_cycle(quiver: &Quiver, w: &ArrowVector) -> Result<PrimitiveCycle, LatticeError> {
    let map = IncidenceMap::new(quiver);
    if let Some(vertex) = map.unbalanced_vertex(w)? {
        return Err(LatticeError::NotInKernel { vertex });
    }
    if w.is_zero() {
        return Err(LatticeError::ZeroVector);
    }
    let admissible = |at: usize, previous: Option<usize>| -> Option<Step> {
        quiver
            .arrows()
            .iter()
            .enumerate()
            .filter(|&(i, _)| Some(i) != previous)
            .find_map(|(i, a)| {
                let wi = w.entries()[i];
                if a.source == at && wi > 0 {
                    Some(Step::forward(i))
                } else if a.target == at && wi < 0 {
                    Some(Step::backward(i))
                } else {
                    None
                }
            })
    };
    let start = (0..quiver.vertex_count())
        .find(|&v| admissible(v, None).is_some())
        .expect("nonzero kernel vector has an admissible step");
    let mut vertices = vec![start];
    let mut steps: Vec<Step> = Vec::new();
    loop {
        let at = *vertices.last().unwrap();
        let step = admissible(at, steps.last().map(|s| s.arrow))
            .expect("balance condition provides a continuation");
        let next = step.end(quiver);
        steps.push(step);
        if let Some(pos) = vertices.iter().position(|&v| v == next) {
            let cycle = steps[pos..].to_vec();
            let walk = NonorientedWalk::new(quiver, cycle)?;
            return Ok(PrimitiveCycle::new(quiver, walk)?);
        }
        vertices.push(next);
    }
}

/// Writes a kernel vector as a sum of cycle vectors by repeatedly
/// subtracting a dominating cycle; `|w|` drops by the cycle length each time.
pub fn kernel_cycle_decomposition(
    quiver: &Quiver,
    w: &ArrowVector,
) -> Result<Vec<ArrowVector>, LatticeError> {
    let map = IncidenceMap::new(quiver);
    if let Some(vertex) = map.unbalanced_vertex(w)? {
        return Err(LatticeError::NotInKernel { vertex });
    }
    let mut rest = w.clone();
    let mut parts = Vec::new();
    while !rest.is_zero() {
        let u = dominating_cycle(quiver, &rest)?.vector(quiver);
        rest = &rest - &u;
        parts.push(u);
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> Quiver {
        Quiver::from_edges(2, &[(0, 1)]).unwrap()
    }

    fn kronecker() -> Quiver {
        Quiver::from_edges(2, &[(0, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn parts_of_a_vector() {
        let w = ArrowVector::new(vec![2, -3, 0]);
        assert_eq!(w.positive_part().entries(), &[2, 0, 0]);
        assert_eq!(w.negative_part().entries(), &[0, 3, 0]);
        assert_eq!(&w.positive_part() - &w.negative_part(), w);
        let z = ArrowVector::zeros(3);
        assert!(z.positive_part().is_zero() && z.negative_part().is_zero());
    }

    #[test]
    fn incidence_examples() {
        let q = a2();
        assert_eq!(
            apply_u(&q, &ArrowVector::unit(1, 0)).unwrap().entries(),
            &[-1, 1]
        );
        let k = kronecker();
        let x = apply_u(&k, &ArrowVector::new(vec![3, -5])).unwrap();
        assert_eq!(x.entries(), &[2, -2]);
        assert!(in_kernel(&k, &ArrowVector::new(vec![1, -1])).unwrap());
        assert!(!in_kernel(&q, &ArrowVector::new(vec![1])).unwrap());
        assert!(matches!(
            apply_u(&q, &ArrowVector::new(vec![1, 1])),
            Err(LatticeError::DimensionMismatch {
                expected: 1,
                found: 2
            })
        ));
    }

    #[test]
    fn xq_examples() {
        let l = Limits::default();
        assert!(in_xq(&a2(), &VertexVector::new(vec![-1, 1]), &l).unwrap());
        assert!(!in_xq(&a2(), &VertexVector::new(vec![1, -1]), &l).unwrap());
        let free = Quiver::from_edges(2, &[]).unwrap();
        assert!(!in_xq(&free, &VertexVector::new(vec![1, -1]), &l).unwrap());
    }

    #[test]
    fn decompose_examples() {
        let l = Limits::default();
        let d = decompose_cq(&a2(), &VertexVector::new(vec![-1, 1]), &l).unwrap();
        assert_eq!(d.multiplicities.entries(), &[1]);
        let d = decompose_cq(&kronecker(), &VertexVector::new(vec![-2, 2]), &l).unwrap();
        assert_eq!(d.multiplicities.sum(), 2);
        assert!(d.multiplicities.is_nonnegative());
        let err = decompose_cq(&a2(), &VertexVector::new(vec![1, -1]), &l).unwrap_err();
        assert_eq!(
            err,
            LatticeError::NotInCone(ConeViolation::Filter {
                filter: Filter(VertexSet::from_vertices([1])),
                sum: -1
            })
        );
        let err = decompose_cq(&a2(), &VertexVector::new(vec![1, 0]), &l).unwrap_err();
        assert_eq!(err, LatticeError::NotInCone(ConeViolation::NonZeroTotal(1)));
    }

    #[test]
    fn decompose_splits_on_tight_filters() {
        // 0 -> 1 -> 2 with x = e_1 - e_0 + e_2 - e_1 ... i.e. (-1, 0, 1)
        let q = Quiver::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let d = decompose_cq(&q, &VertexVector::new(vec![-1, 0, 1]), &Limits::default()).unwrap();
        assert_eq!(d.multiplicities.entries(), &[1, 1]);
    }

    #[test]
    fn box_enumeration_counts() {
        // zero-sum points of [-3,3]^2: 7
        assert_eq!(ZeroSumBox::new(2, 3).count(), 7);
        assert_eq!(ZeroSumBox::new(1, 3).collect::<Vec<_>>(), vec![vec![0]]);
        assert_eq!(ZeroSumBox::new(3, 1).count(), 7);
    }

    #[test]
    fn small_cone_equalities() {
        let l = Limits::default();
        for q in [a2(), kronecker()] {
            assert!(brute_force_cone_equality(&q, 3, &l).unwrap().is_equal());
        }
    }

    #[test]
    fn dominating_cycle_examples() {
        let k = kronecker();
        let u = dominating_cycle(&k, &ArrowVector::new(vec![3, -3])).unwrap();
        assert_eq!(u.vector(&k).entries(), &[1, -1]);
        let u = dominating_cycle(&k, &ArrowVector::new(vec![-1, 1])).unwrap();
        assert_eq!(u.vector(&k).entries(), &[-1, 1]);
        assert_eq!(
            dominating_cycle(&k, &ArrowVector::zeros(2)).unwrap_err(),
            LatticeError::ZeroVector
        );
        assert!(matches!(
            dominating_cycle(&k, &ArrowVector::new(vec![1, 0])),
            Err(LatticeError::NotInKernel { vertex: 0 })
        ));
    }

    #[test]
    fn kernel_decomposition_examples() {
        let k = kronecker();
        assert!(kernel_cycle_decomposition(&k, &ArrowVector::zeros(2))
            .unwrap()
            .is_empty());
        let parts = kernel_cycle_decomposition(&k, &ArrowVector::new(vec![2, -2])).unwrap();
        assert_eq!(parts.len(), 2);
        for p in parts {
            assert_eq!(p.entries(), &[1, -1]);
        }
    }
}
