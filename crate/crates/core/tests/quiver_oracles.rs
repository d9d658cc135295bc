use std::collections::BTreeSet;

use proptest::prelude::*;
use thinquiv::lattice::{in_kernel, ArrowVector};
use thinquiv::quiver::{primitive_cycles, Quiver};
use thinquiv::Limits;

/// Every up-closed vertex subset, by direct scan.
fn brute_filters(q: &Quiver) -> BTreeSet<u64> {
    let n = q.vertex_count();
    (0u64..1 << n)
        .filter(|&mask| {
            q.arrows()
                .iter()
                .all(|a| mask >> a.source & 1 == 0 || mask >> a.target & 1 == 1)
        })
        .collect()
}

/// Number of arrow subsets whose underlying graph is one cycle. Each such
/// subset carries exactly one rotation/inversion class of primitive cycles.
fn brute_cycle_count(q: &Quiver) -> usize {
    let m = q.arrow_count();
    let n = q.vertex_count();
    (1u64..1 << m)
        .filter(|&set| {
            let arrows: Vec<_> = (0..m)
                .filter(|i| set >> i & 1 == 1)
                .map(|i| q.arrow(i))
                .collect();
            if arrows.len() < 2 {
                return false;
            }
            let mut degree = vec![0; n];
            for a in &arrows {
                degree[a.source] += 1;
                degree[a.target] += 1;
            }
            if degree.iter().any(|&d| d != 0 && d != 2) {
                return false;
            }
            let mut seen = vec![false; n];
            let mut stack = vec![arrows[0].source];
            while let Some(v) = stack.pop() {
                if std::mem::replace(&mut seen[v], true) {
                    continue;
                }
                for a in &arrows {
                    if a.source == v {
                        stack.push(a.target);
                    } else if a.target == v {
                        stack.push(a.source);
                    }
                }
            }
            (0..n).all(|v| degree[v] == 0 || seen[v])
        })
        .count()
}

fn check_quiver(q: &Quiver) {
    let limits = Limits::default();
    let got: BTreeSet<u64> = q
        .filters(&limits)
        .unwrap()
        .iter()
        .map(|f| f.set().0)
        .collect();
    assert_eq!(got, brute_filters(q));

    let cycles = primitive_cycles(q, &limits).unwrap();
    assert_eq!(cycles.len(), brute_cycle_count(q));
    let mut supports = BTreeSet::new();
    for c in &cycles {
        let w: ArrowVector = c.vector(q);
        assert!(in_kernel(q, &w).unwrap());
        assert!(w.entries().iter().all(|&x| (-1..=1).contains(&x)));
        assert_eq!(w.l1_norm() as usize, c.steps().len());
        assert_eq!(c.canonical(), *c);
        let support: Vec<usize> = c
            .steps()
            .iter()
            .map(|s| s.arrow)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        assert!(supports.insert(support), "two classes on the same arrows");
    }
}

#[test]
fn small_quivers_match_brute_force() {
    let cases: &[(usize, &[(usize, usize)])] = &[
        (2, &[(0, 1)]),
        (2, &[(0, 1), (0, 1)]),
        (2, &[(0, 1), (0, 1), (0, 1)]),
        (3, &[(0, 1), (1, 2)]),
        (3, &[(0, 1), (2, 1)]),
        (3, &[(1, 0), (1, 2)]),
        (3, &[(0, 1), (1, 2), (0, 2)]),
        (4, &[(0, 1), (0, 2), (1, 3), (2, 3)]),
        (4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        (5, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (0, 4), (1, 4)]),
    ];
    for (n, edges) in cases {
        check_quiver(&Quiver::from_edges(*n, edges).unwrap());
    }
}

#[test]
fn oriented_cycles_are_rejected() {
    assert!(Quiver::from_edges(1, &[(0, 0)]).is_err());
    assert!(Quiver::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).is_err());
    assert!(Quiver::from_edges(2, &[(0, 1), (1, 0)]).is_err());
}

fn random_dag() -> impl Strategy<Value = Quiver> {
    (2usize..=5)
        .prop_flat_map(|n| {
            let perm = Just((0..n).collect::<Vec<_>>()).prop_shuffle();
            let edges = prop::collection::vec((0..n, 0..n), 1..=8);
            (Just(n), perm, edges)
        })
        .prop_filter_map("needs a non-loop arrow", |(n, perm, edges)| {
            let edges: Vec<(usize, usize)> = edges
                .into_iter()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (perm[a.min(b)], perm[a.max(b)]))
                .collect();
            if edges.is_empty() {
                None
            } else {
                Some(Quiver::from_edges(n, &edges).unwrap())
            }
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_dags_match_brute_force(q in random_dag()) {
        check_quiver(&q);
    }
}
