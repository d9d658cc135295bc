use num_traits::{One, Zero};
use thinquiv::family::{
    a_polys, b_polys, build_q, generic_phi_rank, psi, sample_points, u_vectors, v_vectors,
    verify_orbit, xi_all, FamilyParams,
};
use thinquiv::lattice::ArrowVector;
use thinquiv::linalg::Rational;
use thinquiv::poly::TermOrder;
use thinquiv::quiver::{primitive_cycles, Quiver};
use thinquiv::Limits;

fn balanced(q: &Quiver, w: &ArrowVector) -> bool {
    let mut net = vec![0i64; q.vertex_count()];
    for (a, &k) in q.arrows().iter().zip(w.entries()) {
        net[a.target] += k;
        net[a.source] -= k;
    }
    net.iter().all(|&v| v == 0)
}

fn tuples(max_t: usize) -> Vec<FamilyParams> {
    FamilyParams::all_up_to(max_t)
}

#[test]
fn tuple_counts() {
    assert_eq!(tuples(0).len(), 1);
    assert_eq!(tuples(1).len(), 6);
    assert_eq!(tuples(2).len(), 21);
    assert_eq!(tuples(3).len(), 56);
}

#[test]
fn q_shape_paths_and_kernel_vectors() {
    for f in tuples(3) {
        let q = build_q(&f).unwrap();
        assert_eq!(q.vertex_count(), f.t + 6, "{f}");
        assert_eq!(q.arrow_count(), f.t + 10, "{f}");
        let mut cover = vec![0i64; q.arrow_count()];
        for u in u_vectors(&f) {
            assert!(u.is_nonnegative(), "{f}");
            cover.iter_mut().zip(u.entries()).for_each(|(c, k)| *c += k);
        }
        assert!(
            cover.iter().all(|&c| c == 1),
            "{f} u-vectors must partition the arrows"
        );
        for (i, v) in v_vectors(&f).iter().enumerate() {
            assert!(balanced(&q, v), "{f} v{}", i + 1);
            assert!(
                v.entries().iter().all(|x| (-1..=1).contains(x)),
                "{f} v{}",
                i + 1
            );
        }
    }
}

#[test]
fn smallest_q_is_the_pictured_quiver() {
    let q = build_q(&FamilyParams::new(0, 0, 0, 0, 0).unwrap()).unwrap();
    let edges: Vec<(usize, usize)> = q.arrows().iter().map(|a| (a.source, a.target)).collect();
    assert_eq!(
        edges,
        [
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
fn strict_cycle_count_by_arrow_subsets() {
    let f = FamilyParams::new(1, 2, 3, 4, 5).unwrap();
    let q = build_q(&f).unwrap();
    let m = q.arrow_count();
    let n = q.vertex_count();
    let mut count = 0;
    for set in 1u64..1 << m {
        let arrows: Vec<_> = (0..m)
            .filter(|i| set >> i & 1 == 1)
            .map(|i| q.arrow(i))
            .collect();
        let mut degree = vec![0; n];
        for a in &arrows {
            degree[a.source] += 1;
            degree[a.target] += 1;
        }
        if arrows.len() < 2 || degree.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        let touched = degree.iter().filter(|&&d| d == 2).count();
        // A 2-regular graph is one cycle iff it has as many arrows as vertices
        // and is connected; check connectivity by walking.
        let mut seen = vec![false; n];
        let mut stack = vec![arrows[0].source];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            for a in &arrows {
                if a.source == v {
                    stack.push(a.target);
                }
                if a.target == v {
                    stack.push(a.source);
                }
            }
        }
        if seen.iter().filter(|&&s| s).count() == touched {
            count += 1;
        }
    }
    assert_eq!(count, 26);
    assert_eq!(primitive_cycles(&q, &Limits::default()).unwrap().len(), 26);
}

#[test]
fn ini_of_a_is_b() {
    for f in tuples(3) {
        let order = TermOrder::new(f.nvars());
        for (i, (a, b)) in a_polys(&f).iter().zip(b_polys(&f)).enumerate() {
            let (bm, bc) = b.as_term().expect("b is a term");
            for (m, _) in a.terms() {
                assert_ne!(
                    order.compare(m, bm).unwrap(),
                    std::cmp::Ordering::Greater,
                    "{f} a{}",
                    i + 1
                );
            }
            assert_eq!(&a.coefficient(bm), bc, "{f} a{}", i + 1);
        }
    }
}

fn product(values: &[Rational], w: &ArrowVector) -> Rational {
    values
        .iter()
        .zip(w.entries())
        .fold(Rational::one(), |acc, (v, &k)| {
            let p = num_traits::pow(v.clone(), k.unsigned_abs() as usize);
            if k >= 0 {
                acc * p
            } else {
                acc / p
            }
        })
}

#[test]
fn psi_satisfies_every_cycle_relation() {
    for f in tuples(2) {
        for x in sample_points(&f, 11, 3) {
            let point = psi(&f, &x).unwrap();
            let b: Vec<Rational> = point.matrices.iter().map(|m| m[(0, 0)].clone()).collect();
            assert!(b.iter().all(|v| !v.is_zero()));
            for (i, v) in v_vectors(&f).iter().enumerate() {
                assert!(product(&b, v).is_one(), "{f} v{}", i + 1);
            }
            for xi in xi_all(&f) {
                assert!(product(&b, xi.vector()).is_one(), "{f} {xi}");
            }
        }
    }
}

#[test]
fn orbit_identity_other_seeds() {
    for f in tuples(3) {
        for x in sample_points(&f, 4242, 5) {
            verify_orbit(&f, &x).unwrap_or_else(|e| panic!("{f}: {e}"));
        }
    }
}

#[test]
fn rank_is_t_plus_5() {
    for f in tuples(3) {
        assert_eq!(generic_phi_rank(&f, 99, 2).unwrap(), f.t + 5, "{f}");
    }
}
