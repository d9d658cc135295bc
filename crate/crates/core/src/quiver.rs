//! Finite acyclic quivers, filters, nonoriented walks and primitive cycles.
//!
//! Vertices and arrows are addressed by their position (`usize`) in the
//! quiver; labels are carried along for display only. Positions give the
//! fixed total order that the term order and canonical forms depend on.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::error::QuiverError;
use crate::lattice::ArrowVector;
use crate::limits::Limits;

/// Largest vertex count for which bitmask vertex sets are used.
pub const MAX_MASK_VERTICES: usize = 63;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(label: impl Into<String>, source: usize, target: usize) -> Self {
        Self {
            label: label.into(),
            source,
            target,
        }
    }
}

/// A finite quiver without oriented cycles. Parallel arrows are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds and validates a quiver.
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, QuiverError> {
        let quiver = Self { vertices, arrows };
        quiver.validate()?;
        Ok(quiver)
    }

    /// Quiver on vertices labelled `0..n` with arrows `a1, a2, ...`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, QuiverError> {
        let vertices = (0..n).map(|i| i.to_string()).collect();
        let arrows = edges
            .iter()
            .enumerate()
            .map(|(i, &(s, t))| Arrow::new(format!("a{}", i + 1), s, t))
            .collect();
        Self::new(vertices, arrows)
    }

    /// Succeeds iff identifiers are unique, endpoints exist and a topological
    /// order of the vertices exists.
    pub fn validate(&self) -> Result<(), QuiverError> {
        let mut seen = HashSet::new();
        for v in &self.vertices {
            if !seen.insert(v.as_str()) {
                return Err(QuiverError::DuplicateIdentifier {
                    kind: "vertex",
                    id: v.clone(),
                });
            }
        }
        let mut seen = HashSet::new();
        for a in &self.arrows {
            if !seen.insert(a.label.as_str()) {
                return Err(QuiverError::DuplicateIdentifier {
                    kind: "arrow",
                    id: a.label.clone(),
                });
            }
            for v in [a.source, a.target] {
                if v >= self.vertices.len() {
                    return Err(QuiverError::UnknownVertex {
                        arrow: a.label.clone(),
                        vertex: v,
                    });
                }
            }
        }
        match self.try_topological_order() {
            Ok(_) => Ok(()),
            Err(cycle) => Err(QuiverError::CyclicQuiver {
                vertices: cycle.iter().map(|&v| self.vertices[v].clone()).collect(),
            }),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Vertices sorted so that every arrow points forward.
    pub fn topological_order(&self) -> Vec<usize> {
        self.try_topological_order()
            .expect("validated quivers are acyclic")
    }

    // Kahn's algorithm; on failure returns one oriented cycle as a vertex list.
    fn try_topological_order(&self) -> Result<Vec<usize>, Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for a in &self.arrows {
            indegree[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indegree[a.target] -= 1;
                if indegree[a.target] == 0 {
                    queue.push_back(a.target);
                }
            }
        }
        if order.len() == n {
            return Ok(order);
        }
        // Every leftover vertex has an incoming arrow from another leftover
        // vertex, so walking backwards must revisit a vertex.
        let leftover: Vec<bool> = (0..n).map(|v| indegree[v] > 0).collect();
        let mut current = (0..n).find(|&v| leftover[v]).expect("leftover vertex");
        let mut path = vec![current];
        loop {
            let pred = self
                .arrows
                .iter()
                .find(|a| a.target == current && leftover[a.source])
                .map(|a| a.source)
                .expect("leftover vertex has a leftover predecessor");
            if let Some(pos) = path.iter().position(|&v| v == pred) {
                let mut cycle: Vec<usize> = path[pos..].to_vec();
                cycle.reverse();
                cycle.push(cycle[0]);
                return Err(cycle);
            }
            path.push(pred);
            current = pred;
        }
    }

    /// Bitmask of the targets of arrows leaving each vertex.
    pub(crate) fn successor_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.vertices.len()];
        for a in &self.arrows {
            masks[a.source] |= 1 << a.target;
        }
        masks
    }

    pub fn is_filter(&self, set: VertexSet) -> bool {
        self.arrows
            .iter()
            .all(|a| !set.contains(a.source) || set.contains(a.target))
    }

    /// All filters of the quiver, including the empty set and `Q_0`.
    pub fn filters(&self, limits: &Limits) -> Result<Vec<Filter>, QuiverError> {
        let all = VertexSet::full(self.vertex_count_for_masks()?);
        Ok(self
            .filters_within(all, limits)?
            .into_iter()
            .map(Filter)
            .collect())
    }

    pub(crate) fn vertex_count_for_masks(&self) -> Result<usize, QuiverError> {
        let n = self.vertices.len();
        if n > MAX_MASK_VERTICES {
            return Err(QuiverError::SizeLimit {
                what: "filter enumeration vertices",
                needed: n as u64,
                bound: MAX_MASK_VERTICES as u64,
            });
        }
        Ok(n)
    }

    /// Filters of the full subquiver on `support`, as subsets of `support`,
    /// in increasing mask order.
    pub(crate) fn filters_within(
        &self,
        support: VertexSet,
        limits: &Limits,
    ) -> Result<Vec<VertexSet>, QuiverError> {
        let size = support.len();
        let subsets = 1u64.checked_shl(size as u32).unwrap_or(u64::MAX);
        if subsets > limits.max_filter_subsets {
            return Err(QuiverError::SizeLimit {
                what: "filter enumeration subsets",
                needed: subsets,
                bound: limits.max_filter_subsets,
            });
        }
        let succ: Vec<u64> = self
            .successor_masks()
            .into_iter()
            .map(|m| m & support.0)
            .collect();
        let members: Vec<usize> = support.iter().collect();
        let mut out = Vec::new();
        // Scan subsets of `support` in increasing order via the local bit pattern.
        for local in 0..subsets {
            let mut mask = 0u64;
            for (bit, &v) in members.iter().enumerate() {
                if local >> bit & 1 == 1 {
                    mask |= 1 << v;
                }
            }
            let closed = members
                .iter()
                .all(|&v| mask >> v & 1 == 0 || succ[v] & !mask == 0);
            if closed {
                out.push(VertexSet(mask));
            }
        }
        out.sort();
        Ok(out)
    }

    /// Smallest filter containing `v`: everything reachable from `v`.
    pub fn successor_closure(&self, v: usize) -> VertexSet {
        let succ = self.successor_masks();
        let mut closure = 1u64 << v;
        let mut frontier = vec![v];
        while let Some(u) = frontier.pop() {
            let mut fresh = succ[u] & !closure;
            closure |= fresh;
            while fresh != 0 {
                let w = fresh.trailing_zeros() as usize;
                fresh &= fresh - 1;
                frontier.push(w);
            }
        }
        VertexSet(closure)
    }

    /// Graphviz description. Vertices and arrows appear in index order.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
        for v in &self.vertices {
            writeln!(out, "  \"{}\";", escape(v)).unwrap();
        }
        for a in &self.arrows {
            writeln!(
                out,
                "  \"{}\" -> \"{}\" [label=\"{}\"];",
                escape(&self.vertices[a.source]),
                escape(&self.vertices[a.target]),
                escape(&a.label)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// A set of vertex indices, stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub fn empty() -> Self {
        Self(0)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    pub fn from_vertices(vertices: impl IntoIterator<Item = usize>) -> Self {
        Self(vertices.into_iter().fold(0, |m, v| m | 1 << v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&v| self.0 >> v & 1 == 1)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }
}

/// An up-closed vertex set: `sα ∈ F` implies `tα ∈ F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Filter(pub VertexSet);

impl Filter {
    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        self.0.iter()
    }

    pub fn set(&self) -> VertexSet {
        self.0
    }

    pub fn render(&self, quiver: &Quiver) -> String {
        let labels: Vec<&str> = self.vertices().map(|v| quiver.vertex_label(v)).collect();
        format!("{{{}}}", labels.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    Forward,
    Backward,
}

/// One step of a walk in the double quiver: an arrow or its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Step {
    pub arrow: usize,
    pub direction: Direction,
}

impl Direction {
    pub fn sign(self) -> i64 {
        match self {
            Direction::Forward => 1,
            Direction::Backward => -1,
        }
    }
}

impl Step {
    pub fn forward(arrow: usize) -> Self {
        Self {
            arrow,
            direction: Direction::Forward,
        }
    }

    pub fn backward(arrow: usize) -> Self {
        Self {
            arrow,
            direction: Direction::Backward,
        }
    }

    pub fn start(self, quiver: &Quiver) -> usize {
        let a = quiver.arrow(self.arrow);
        match self.direction {
            Direction::Forward => a.source,
            Direction::Backward => a.target,
        }
    }

    pub fn end(self, quiver: &Quiver) -> usize {
        let a = quiver.arrow(self.arrow);
        match self.direction {
            Direction::Forward => a.target,
            Direction::Backward => a.source,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            arrow: self.arrow,
            direction: match self.direction {
                Direction::Forward => Direction::Backward,
                Direction::Backward => Direction::Forward,
            },
        }
    }
}

/// A path in the double quiver containing neither `αα⁻` nor `α⁻α`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NonorientedWalk {
    steps: Vec<Step>,
}

impl NonorientedWalk {
    pub fn new(quiver: &Quiver, steps: Vec<Step>) -> Result<Self, QuiverError> {
        for s in &steps {
            if s.arrow >= quiver.arrow_count() {
                return Err(QuiverError::InvalidWalk(format!(
                    "unknown arrow index {}",
                    s.arrow
                )));
            }
        }
        for pair in steps.windows(2) {
            if pair[0].end(quiver) != pair[1].start(quiver) {
                return Err(QuiverError::InvalidWalk(format!(
                    "steps on arrows {} and {} are not concatenable",
                    pair[0].arrow, pair[1].arrow
                )));
            }
            if pair[1] == pair[0].inverse() {
                return Err(QuiverError::InvalidWalk(format!(
                    "arrow {} is immediately reversed",
                    pair[0].arrow
                )));
            }
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_closed(&self, quiver: &Quiver) -> bool {
        match (self.steps.first(), self.steps.last()) {
            (Some(first), Some(last)) => first.start(quiver) == last.end(quiver),
            _ => false,
        }
    }

    /// The walk traversed backwards.
    pub fn inverse(&self) -> Self {
        Self {
            steps: self.steps.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    /// Signed arrow-count vector: forward steps count `+1`, backward `-1`.
    pub fn vector(&self, quiver: &Quiver) -> ArrowVector {
        let mut entries = vec![0i64; quiver.arrow_count()];
        for s in &self.steps {
            entries[s.arrow] += s.direction.sign();
        }
        ArrowVector::new(entries)
    }

    pub fn render(&self, quiver: &Quiver) -> String {
        self.steps
            .iter()
            .map(|s| match s.direction {
                Direction::Forward => quiver.arrow(s.arrow).label.clone(),
                Direction::Backward => format!("{}^-", quiver.arrow(s.arrow).label),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// A closed nonoriented walk with no proper closed sub-walk.
///
/// The walk is kept as given, so its vector carries an orientation;
/// [`PrimitiveCycle::canonical`] picks the class representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveCycle {
    walk: NonorientedWalk,
}

impl PrimitiveCycle {
    /// Checks that the walk is nontrivial, closed and primitive.
    pub fn new(quiver: &Quiver, walk: NonorientedWalk) -> Result<Self, QuiverError> {
        if walk.is_empty() {
            return Err(QuiverError::InvalidWalk("empty cycle".into()));
        }
        if !walk.is_closed(quiver) {
            return Err(QuiverError::InvalidWalk("walk is not closed".into()));
        }
        if has_proper_closed_subwalk(quiver, walk.steps()) {
            return Err(QuiverError::InvalidWalk(
                "walk contains a proper closed sub-walk".into(),
            ));
        }
        Ok(Self { walk })
    }

    /// Representative of the rotation/inversion class (see [`canonical_steps`]).
    pub fn canonical(&self) -> Self {
        Self {
            walk: NonorientedWalk {
                steps: canonical_steps(self.walk.steps()),
            },
        }
    }

    pub fn same_class(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }

    pub fn walk(&self) -> &NonorientedWalk {
        &self.walk
    }

    pub fn steps(&self) -> &[Step] {
        self.walk.steps()
    }

    /// `+1` on forward arrows, `-1` on backward arrows, `0` elsewhere.
    pub fn vector(&self, quiver: &Quiver) -> ArrowVector {
        cycle_vector(self, quiver)
    }
}

impl fmt::Display for PrimitiveCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .steps()
            .iter()
            .map(|s| match s.direction {
                Direction::Forward => format!("{}", s.arrow),
                Direction::Backward => format!("{}-", s.arrow),
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

fn has_proper_closed_subwalk(quiver: &Quiver, steps: &[Step]) -> bool {
    let n = steps.len();
    for i in 0..n {
        for j in i + 1..=n {
            if j - i == n {
                continue;
            }
            if steps[i].start(quiver) == steps[j - 1].end(quiver) {
                return true;
            }
        }
    }
    false
}

/// Least step sequence, under `(arrow index, forward < backward)`, among all
/// rotations of the cycle and of its inversion.
pub fn canonical_steps(steps: &[Step]) -> Vec<Step> {
    let inverse: Vec<Step> = steps.iter().rev().map(|s| s.inverse()).collect();
    let n = steps.len();
    let mut best: Option<Vec<Step>> = None;
    for seq in [steps, inverse.as_slice()] {
        for k in 0..n {
            let rotated: Vec<Step> = seq[k..].iter().chain(&seq[..k]).copied().collect();
            if best.as_ref().is_none_or(|b| rotated < *b) {
                best = Some(rotated);
            }
        }
    }
    best.unwrap_or_default()
}

pub fn cycle_vector(cycle: &PrimitiveCycle, quiver: &Quiver) -> ArrowVector {
    cycle.walk.vector(quiver)
}

/// One canonical representative per class of primitive nonoriented cycles
/// under rotation and inversion, sorted.
///
/// Each class is found exactly once: a depth-first search is started on every
/// arrow `a` traversed forward, using only arrows of larger index and never
/// revisiting a vertex.
pub fn primitive_cycles(
    quiver: &Quiver,
    limits: &Limits,
) -> Result<Vec<PrimitiveCycle>, QuiverError> {
    let n = quiver.vertex_count();
    let mut incident: Vec<Vec<Step>> = vec![Vec::new(); n];
    for (i, a) in quiver.arrows().iter().enumerate() {
        incident[a.source].push(Step::forward(i));
        incident[a.target].push(Step::backward(i));
    }
    let mut found: BTreeSet<Vec<Step>> = BTreeSet::new();
    for (i, a) in quiver.arrows().iter().enumerate() {
        let mut visited = vec![false; n];
        visited[a.target] = true;
        let mut path = vec![Step::forward(i)];
        extend_cycles(
            quiver,
            &incident,
            a.source,
            i,
            a.target,
            &mut visited,
            &mut path,
            &mut found,
            limits,
        )?;
    }
    Ok(found
        .into_iter()
        .map(|steps| PrimitiveCycle {
            walk: NonorientedWalk {
                steps: canonical_steps(&steps),
            },
        })
        .collect())
}

#[allow(clippy::too_many_arguments)]
fn extend_cycles(
    quiver: &Quiver,
    incident: &[Vec<Step>],
    base: usize,
    min_arrow: usize,
    at: usize,
    visited: &mut [bool],
    path: &mut Vec<Step>,
    found: &mut BTreeSet<Vec<Step>>,
    limits: &Limits,
) -> Result<(), QuiverError> {
    for &step in &incident[at] {
        if step.arrow <= min_arrow {
            continue;
        }
        let next = step.end(quiver);
        if next == base {
            path.push(step);
            found.insert(path.clone());
            path.pop();
            if found.len() > limits.max_cycle_classes {
                return Err(QuiverError::SizeLimit {
                    what: "primitive cycle classes",
                    needed: found.len() as u64,
                    bound: limits.max_cycle_classes as u64,
                });
            }
            continue;
        }
        if visited[next] {
            continue;
        }
        visited[next] = true;
        path.push(step);
        extend_cycles(
            quiver, incident, base, min_arrow, next, visited, path, found, limits,
        )?;
        path.pop();
        visited[next] = false;
    }
    Ok(())
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
    fn validate_accepts_trees_and_parallel_arrows() {
        assert!(a2().validate().is_ok());
        assert!(kronecker().validate().is_ok());
    }

    #[test]
    fn loop_is_cyclic() {
        let err = Quiver::from_edges(1, &[(0, 0)]).unwrap_err();
        assert_eq!(
            err,
            QuiverError::CyclicQuiver {
                vertices: vec!["0".into(), "0".into()]
            }
        );
    }

    #[test]
    fn longer_cycle_is_named() {
        let err = Quiver::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 1)]).unwrap_err();
        let QuiverError::CyclicQuiver { vertices } = err else {
            panic!("expected a cycle");
        };
        assert_eq!(vertices.first(), vertices.last());
        assert_eq!(vertices.len(), 4);
    }

    #[test]
    fn duplicate_identifiers() {
        let err = Quiver::new(vec!["x".into(), "x".into()], vec![]).unwrap_err();
        assert!(matches!(
            err,
            QuiverError::DuplicateIdentifier { kind: "vertex", .. }
        ));
        let err = Quiver::new(
            vec!["x".into(), "y".into()],
            vec![Arrow::new("a", 0, 1), Arrow::new("a", 0, 1)],
        )
        .unwrap_err();
        assert!(matches!(
            err,
            QuiverError::DuplicateIdentifier { kind: "arrow", .. }
        ));
    }

    #[test]
    fn a2_filters() {
        let f: Vec<VertexSet> = a2()
            .filters(&Limits::default())
            .unwrap()
            .iter()
            .map(|f| f.set())
            .collect();
        assert_eq!(
            f,
            vec![
                VertexSet::empty(),
                VertexSet::from_vertices([1]),
                VertexSet::from_vertices([0, 1])
            ]
        );
    }

    #[test]
    fn arrowless_filters_are_all_subsets() {
        let q = Quiver::from_edges(3, &[]).unwrap();
        assert_eq!(q.filters(&Limits::default()).unwrap().len(), 8);
    }

    #[test]
    fn filter_size_limit() {
        let q = Quiver::from_edges(5, &[]).unwrap();
        let limits = Limits {
            max_filter_subsets: 16,
            ..Limits::default()
        };
        assert!(matches!(
            q.filters(&limits),
            Err(QuiverError::SizeLimit {
                needed: 32,
                bound: 16,
                ..
            })
        ));
    }

    #[test]
    fn kronecker_has_one_cycle_class() {
        let q = kronecker();
        let cycles = primitive_cycles(&q, &Limits::default()).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].steps(), &[Step::forward(0), Step::backward(1)]);
        assert_eq!(cycles[0].vector(&q).entries(), &[1, -1]);
    }

    #[test]
    fn trees_have_no_cycles() {
        assert!(primitive_cycles(&a2(), &Limits::default())
            .unwrap()
            .is_empty());
        let a3 = Quiver::from_edges(3, &[(0, 1), (2, 1)]).unwrap();
        assert!(primitive_cycles(&a3, &Limits::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn theta_graph_has_three_classes() {
        let q = Quiver::from_edges(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(primitive_cycles(&q, &Limits::default()).unwrap().len(), 3);
    }

    #[test]
    fn canonical_form_is_rotation_and_inversion_invariant() {
        // square 0->1->2, 0->3->2
        let q = Quiver::from_edges(4, &[(0, 1), (1, 2), (0, 3), (3, 2)]).unwrap();
        let walk = vec![
            Step::forward(2),
            Step::forward(3),
            Step::backward(1),
            Step::backward(0),
        ];
        let w = NonorientedWalk::new(&q, walk.clone()).unwrap();
        let c1 = PrimitiveCycle::new(&q, w.clone()).unwrap().canonical();
        let c2 = PrimitiveCycle::new(&q, w.inverse()).unwrap().canonical();
        let mut rotated = walk.clone();
        rotated.rotate_left(1);
        let c3 = PrimitiveCycle::new(&q, NonorientedWalk::new(&q, rotated).unwrap())
            .unwrap()
            .canonical();
        assert_eq!(c1, c2);
        assert_eq!(c1, c3);
        assert_eq!(c1.steps()[0], Step::forward(0));
    }

    #[test]
    fn reversed_walk_negates_vector() {
        let q = kronecker();
        let w = NonorientedWalk::new(&q, vec![Step::forward(0), Step::backward(1)]).unwrap();
        assert_eq!(w.vector(&q).entries(), &[1, -1]);
        assert_eq!(w.inverse().vector(&q), -w.vector(&q));
    }

    #[test]
    fn walk_rejects_backtracking_and_gaps() {
        let q = kronecker();
        assert!(NonorientedWalk::new(&q, vec![Step::forward(0), Step::backward(0)]).is_err());
        assert!(NonorientedWalk::new(&q, vec![Step::forward(0), Step::forward(1)]).is_err());
    }

    #[test]
    fn non_primitive_closed_walk_is_rejected() {
        // two Kronecker loops glued at vertex 0
        let q = Quiver::from_edges(3, &[(0, 1), (0, 1), (0, 2), (0, 2)]).unwrap();
        let steps = vec![
            Step::forward(0),
            Step::backward(1),
            Step::forward(2),
            Step::backward(3),
        ];
        let w = NonorientedWalk::new(&q, steps).unwrap();
        assert!(w.is_closed(&q));
        assert!(PrimitiveCycle::new(&q, w).is_err());
    }

    #[test]
    fn dot_lists_nodes_then_edges() {
        let dot = kronecker().to_dot("K");
        assert_eq!(
            dot,
            "digraph \"K\" {\n  \"0\";\n  \"1\";\n  \"0\" -> \"1\" [label=\"a1\"];\n  \"0\" -> \"1\" [label=\"a2\"];\n}\n"
        );
        let a2 = a2().to_dot("A2");
        assert_eq!(a2.matches("->").count(), 1);
    }
}
