use super::*;
use crate::exactnum::{q, qi};
use crate::liecore::proportional;
use crate::wonderful::{graph_subspace, pgl2_model, CurveSubspace};
use crate::{Laurent, LaurentMatrix};

fn sl(n: usize) -> LieAlgebra {
    LieAlgebra::sl(n).unwrap()
}

fn el(alg: &LieAlgebra, coords: &[i64]) -> Element {
    alg.element(coords.iter().map(|&c| qi(c)).collect()).unwrap()
}

fn mat2(a: i64, b: i64, c: i64, d: i64) -> QMatrix {
    QMatrix::from_rows(&[vec![qi(a), qi(b)], vec![qi(c), qi(d)]], 2)
}

fn hpoint<'a>(alg: &LieAlgebra, p: SpacePoint<'a>) -> HamiltonianSpacePoint<'a> {
    HamiltonianSpacePoint::new(alg, p).unwrap()
}

#[test]
fn slice_membership_examples() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let mut s = Sampler::new(1);
    let g = alg.sample_group(&mut s);
    let point = sl2_slice_point(&slice, q(3, 2));
    let right = hpoint(&alg, SpacePoint::CotangentRight(CotangentPoint::new(g.clone(), point.clone())));
    assert!(slice_membership(&alg, &right, &slice).unwrap());
    assert_eq!(right.tag(), SpaceTag::CotangentRight);
    let h = el(&alg, &[0, 1, 0]);
    let off = hpoint(&alg, SpacePoint::CotangentRight(CotangentPoint::new(g.clone(), h)));
    assert!(!slice_membership(&alg, &off, &slice).unwrap());
    let c = sample_centralizer(&alg, &point, &mut s);
    let both = hpoint(&alg, SpacePoint::CotangentBoth(CotangentPoint::new(c, point.clone())));
    assert!(slice_membership(&alg, &both, &slice).unwrap());
    let both = hpoint(&alg, SpacePoint::CotangentBoth(CotangentPoint::new(g, point)));
    assert!(!slice_membership(&alg, &both, &slice).unwrap());
}

#[test]
fn hamiltonian_points_check_membership() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let h = el(&alg, &[0, 1, 0]);
    let bad = SpacePoint::GSlice { g: GroupElement::identity(2), s: h.clone(), slice: &slice };
    assert!(HamiltonianSpacePoint::new(&alg, bad).is_err());
    assert!(HamiltonianSpacePoint::new(&alg, SpacePoint::LiePoisson(h)).is_err());
}

#[test]
fn universal_centralizer_examples() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let id = GroupElement::identity(2);
    let s1 = sl2_slice_point(&slice, qi(1));
    assert!(universal_centralizer_contains(&alg, &id, &s1, &slice).unwrap());
    let e = el(&alg, &[1, 0, 0]);
    assert!(universal_centralizer_contains(&alg, &alg.exp_nilpotent(&e).unwrap(), &e, &slice).unwrap());
    let g = GroupElement::diagonal(&[qi(4), qi(1)]).unwrap();
    assert!(!universal_centralizer_contains(&alg, &g, &s1, &slice).unwrap());
}

#[test]
fn universal_centralizer_is_the_both_sided_slice_preimage() {
    let mut s = Sampler::new(5);
    for n in [2, 3] {
        let alg = sl(n);
        let slice = SlodowySlice::principal(&alg).unwrap();
        for k in 0..50 {
            let x = if k % 5 == 4 { alg.sample_element(&mut s) } else { slice.point(&s.next_vec(slice.dim())) };
            let g = if k % 2 == 0 { sample_centralizer(&alg, &x, &mut s) } else { alg.sample_group(&mut s) };
            let p = hpoint(&alg, SpacePoint::CotangentBoth(CotangentPoint::new(g.clone(), x.clone())));
            assert_eq!(
                slice_membership(&alg, &p, &slice).unwrap(),
                universal_centralizer_contains(&alg, &g, &x, &slice).unwrap()
            );
        }
    }
}

#[test]
fn psi_tau_examples() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let mut s = Sampler::new(7);
    let point = sl2_slice_point(&slice, qi(2));
    let g = alg.sample_group(&mut s);
    let x = SpacePoint::CotangentRight(CotangentPoint::new(g.clone(), point.clone()));
    let class = psi_tau(&alg, &x, &slice).unwrap();
    assert_eq!(class.second, SecondFactor::Group { g: GroupElement::identity(2), s: point.clone() });
    assert!(class.satisfies_zero_moment(&alg).unwrap());
    assert_eq!(normalize_class(&alg, &class, Normalization::Second, &slice).unwrap(), class);

    let c = sample_centralizer(&alg, &point, &mut s);
    let x = SpacePoint::GSlice { g: c.clone(), s: point.clone(), slice: &slice };
    let class = psi_tau(&alg, &x, &slice).unwrap();
    assert_eq!(class.second, SecondFactor::Group { g: GroupElement::identity(2), s: alg.adjoint(&c, &point) });

    let off = SpacePoint::CotangentRight(CotangentPoint::new(g, el(&alg, &[0, 1, 0])));
    assert!(matches!(psi_tau(&alg, &off, &slice), Err(Error::Precondition(_))));
}

#[test]
fn psi_tau_zero_moment_sampled() {
    let mut s = Sampler::new(9);
    for (n, partition) in [(2, vec![2]), (3, vec![3]), (3, vec![2, 1])] {
        let alg = sl(n);
        let slice = SlodowySlice::standard(&alg, &partition).unwrap();
        for tag in [SpaceTag::CotangentRight, SpaceTag::GSlice] {
            for _ in 0..5 {
                let x = sample_slice_point(&alg, tag, &slice, &mut s).unwrap();
                assert!(psi_tau(&alg, &x, &slice).unwrap().satisfies_zero_moment(&alg).unwrap());
            }
        }
    }
}

#[test]
fn k_tau_examples() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let point = sl2_slice_point(&slice, q(-1, 3));
    let x = SpacePoint::CotangentRight(CotangentPoint::new(GroupElement::identity(2), point.clone()));
    let class = k_tau(&alg, &x, &slice).unwrap();
    let diagonal = Subspace::diagonal(&alg);
    assert_eq!(class.second, SecondFactor::Compact { gamma: diagonal.clone(), y1: point.clone(), y2: point.clone() });
    assert!(!diagonal.is_boundary());
    assert!(class.satisfies_zero_moment(&alg).unwrap());
}

#[test]
fn normalize_class_examples() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let mut s = Sampler::new(13);
    let point = sl2_slice_point(&slice, qi(5));
    let g = alg.sample_group(&mut s);
    let x = SpacePoint::CotangentRight(CotangentPoint::new(g.clone(), point.clone()));
    let raw = k_tau(&alg, &x, &slice).unwrap();
    let normalized = normalize_class(&alg, &raw, Normalization::First, &slice).unwrap();
    let expected_x = CotangentPoint::new(GroupElement::identity(2), alg.adjoint(&g, &point));
    assert!(matches!(&normalized.x, SpacePoint::CotangentRight(p) if *p == expected_x));
    assert_eq!(
        normalized.second,
        SecondFactor::Compact {
            gamma: graph_subspace(&alg, &g),
            y1: alg.adjoint(&g, &point),
            y2: point.clone()
        }
    );
    assert_eq!(normalize_class(&alg, &normalized, Normalization::First, &slice).unwrap(), normalized);

    let mut broken = raw.clone();
    broken.second = SecondFactor::Compact { gamma: Subspace::diagonal(&alg), y1: el(&alg, &[1, 0, 0]), y2: el(&alg, &[1, 0, 0]) };
    assert!(normalize_class(&alg, &broken, Normalization::First, &slice).is_err());
}

#[test]
fn normalize_class_is_constant_on_orbits() {
    let mut s = Sampler::new(17);
    for n in [2, 3] {
        let alg = sl(n);
        let slice = SlodowySlice::principal(&alg).unwrap();
        for tag in [SpaceTag::CotangentRight, SpaceTag::GSlice] {
            let x = sample_slice_point(&alg, tag, &slice, &mut s).unwrap();
            let raw = k_tau(&alg, &x, &slice).unwrap();
            let reference = normalize_class(&alg, &raw, Normalization::First, &slice).unwrap();
            for _ in 0..10 {
                let moved = raw.act(&alg, &alg.sample_group(&mut s)).unwrap();
                assert_eq!(normalize_class(&alg, &moved, Normalization::First, &slice).unwrap(), reference);
            }
            let raw = psi_tau(&alg, &x, &slice).unwrap();
            let reference = normalize_class(&alg, &raw, Normalization::First, &slice).unwrap();
            let moved = raw.act(&alg, &alg.sample_group(&mut s)).unwrap();
            assert_eq!(normalize_class(&alg, &moved, Normalization::First, &slice).unwrap(), reference);
        }
    }
}

#[test]
fn fibre_examples() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let identity = QMatrix::identity(2);
    let s1 = sl2_slice_point(&slice, qi(1));
    let fibre = compactified_fibre_pgl2(&alg, &s1, &slice).unwrap();
    assert_eq!(fibre.projective_dim(), 1);
    assert_eq!(fibre.x_tau, s1);
    let span = |ms: &[QMatrix]| {
        QMatrix::from_columns(&ms.iter().map(|m| m.row_vectors().concat()).collect::<Vec<_>>(), 4)
    };
    let s1m = alg.to_matrix(&s1);
    assert_eq!(span(&fibre.basis).rank(), 2);
    assert_eq!(span(&[fibre.basis.clone(), vec![identity.clone(), s1m.clone()]].concat()).rank(), 2);
    let boundary = fibre.boundary.clone().unwrap();
    assert_eq!(boundary.len(), 2);
    for expected in [identity.add(&s1m), identity.sub(&s1m)] {
        assert!(boundary.iter().any(|b| proportional(b, &expected)));
        assert_eq!(expected.rank(), 1);
        assert!(pgl2_model(&alg, &expected).unwrap().is_boundary());
    }

    let e = el(&alg, &[1, 0, 0]);
    let fibre = compactified_fibre_pgl2(&alg, &e, &slice).unwrap();
    assert_eq!(fibre.projective_dim(), 1);
    let em = alg.to_matrix(&e);
    assert_eq!(span(&[fibre.basis.clone(), vec![identity.clone(), em.clone()]].concat()).rank(), 2);
    assert_eq!(fibre.boundary.clone().unwrap().len(), 1);

    let s4 = sl2_slice_point(&slice, qi(4));
    let fibre = compactified_fibre_pgl2(&alg, &s4, &slice).unwrap();
    assert_eq!(fibre.projective_dim(), 1);
    assert_eq!(fibre.boundary.unwrap().len(), 2);

    // c = 2 is not a square: the rank-one members are irrational
    let s2 = sl2_slice_point(&slice, qi(2));
    assert_eq!(compactified_fibre_pgl2(&alg, &s2, &slice).unwrap().boundary, None);
}

#[test]
fn fibres_are_projective_lines() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let mut s = Sampler::new(19);
    for k in 0..20 {
        let x = if k == 0 { el(&alg, &[1, 0, 0]) } else { slice.point(&s.next_vec(1)) };
        let fibre = compactified_fibre_pgl2(&alg, &x, &slice).unwrap();
        assert_eq!(fibre.projective_dim(), 1);
        for _ in 0..3 {
            let a = fibre.member(&s.next_vec(2));
            if a.is_zero() {
                continue;
            }
            let gamma = pgl2_model(&alg, &a).unwrap();
            assert!(gamma.contains(&x, &x));
            // open part: invertible members are exactly the centralizer
            match GroupElement::new(a.clone()) {
                Ok(g) => {
                    assert!(!gamma.is_boundary());
                    assert_eq!(alg.adjoint(&g, &x), x);
                    assert!(universal_centralizer_contains(&alg, &g, &x, &slice).unwrap());
                }
                Err(_) => assert!(gamma.is_boundary()),
            }
        }
        // a general element of the centralizer lies in the fibre
        let g = sample_centralizer(&alg, &x, &mut s);
        let stacked: Vec<Vec<Rational>> =
            fibre.basis.iter().chain([g.matrix()]).map(|m| m.row_vectors().concat()).collect();
        assert_eq!(QMatrix::from_columns(&stacked, 4).rank(), 2);
    }
}

#[test]
fn fibre_boundary_points_are_curve_limits() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    for c in [1, 4, 9] {
        let x = sl2_slice_point(&slice, qi(c));
        let fibre = compactified_fibre_pgl2(&alg, &x, &slice).unwrap();
        let xm = alg.to_matrix(&x);
        for b in fibre.boundary.unwrap() {
            // A(t) = B + t x stays in the fibre, invertible for small t ≠ 0
            let curve = LaurentMatrix::from_fn(2, 2, |i, j| {
                Laurent::constant(b[(i, j)].clone()) + Laurent::monomial(xm[(i, j)].clone(), 1)
            });
            let limit = CurveSubspace::graph(&alg, &curve).unwrap().limit().unwrap();
            assert_eq!(limit, pgl2_model(&alg, &b).unwrap());
            assert!(limit.contains(&x, &x));
        }
    }
}

#[test]
fn diagram_commutes() {
    let mut s = Sampler::new(23);
    for (n, partition) in [(2, vec![2]), (3, vec![3]), (3, vec![2, 1])] {
        let alg = sl(n);
        let slice = SlodowySlice::standard(&alg, &partition).unwrap();
        for tag in [SpaceTag::CotangentRight, SpaceTag::GSlice] {
            for _ in 0..5 {
                let x = sample_slice_point(&alg, tag, &slice, &mut s).unwrap();
                let check = pi_maps_commute(&alg, &x, &slice).unwrap();
                assert!(check.holds(), "{check:?}");
            }
        }
    }
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let point = sl2_slice_point(&slice, qi(3));
    let x = SpacePoint::CotangentRight(CotangentPoint::new(GroupElement::identity(2), point.clone()));
    assert_eq!(pi_tau(&alg, &x, &slice).unwrap(), point);
    assert_eq!(pi_bar_tau(&alg, &k_tau(&alg, &x, &slice).unwrap(), &slice).unwrap(), point);
    let g = sample_centralizer(&alg, &point, &mut s);
    let x = SpacePoint::GSlice { g, s: point.clone(), slice: &slice };
    assert_eq!(pi_bar_tau(&alg, &k_tau(&alg, &x, &slice).unwrap(), &slice).unwrap(), point);
}

#[test]
fn k_tau_lands_in_the_free_locus() {
    let mut s = Sampler::new(29);
    for n in [2, 3] {
        let alg = sl(n);
        let slice = SlodowySlice::principal(&alg).unwrap();
        for tag in [SpaceTag::CotangentRight, SpaceTag::GSlice] {
            for _ in 0..5 {
                let x = sample_slice_point(&alg, tag, &slice, &mut s).unwrap();
                let class = k_tau(&alg, &x, &slice).unwrap();
                assert!(stabilizer_infinitesimal(&alg, Some(&class.x), &class.second).unwrap().is_empty());
                if n == 2 {
                    assert_eq!(stabilizer_group_pgl2(&alg, Some(&class.x), &class.second).unwrap(), 0);
                }
            }
        }
    }
}

#[test]
fn boundary_points_have_stabilizers() {
    let alg = sl(2);
    let gamma = pgl2_model(&alg, &mat2(0, 0, 0, 1)).unwrap();
    let second = SecondFactor::Compact { gamma, y1: alg.zero(), y2: el(&alg, &[1, 0, 0]) };
    let stab = stabilizer_infinitesimal(&alg, None, &second).unwrap();
    assert_eq!(stab.len(), 2);
    assert_eq!(stabilizer_group_pgl2(&alg, None, &second).unwrap(), 2);
    // b ∈ stab is lower triangular
    for b in &stab {
        assert_eq!(b.coords()[0], qi(0));
    }
}

#[test]
fn group_and_infinitesimal_stabilizers_agree() {
    let alg = sl(2);
    let slice = SlodowySlice::principal(&alg).unwrap();
    let mut s = Sampler::new(31);
    let mut boundary_seen = 0;
    for k in 0..10 {
        let c = if k % 2 == 0 { Rational::from_integer(((k / 2 + 1) * (k / 2 + 1)).into()) } else { s.next_rational() };
        let x = sl2_slice_point(&slice, c);
        let fibre = compactified_fibre_pgl2(&alg, &x, &slice).unwrap();
        let a = match (&fibre.boundary, k % 2) {
            (Some(b), 0) => b[0].clone(),
            _ => fibre.member(&s.next_vec(2)),
        };
        if a.is_zero() {
            continue;
        }
        let gamma = pgl2_model(&alg, &a).unwrap();
        boundary_seen += usize::from(gamma.is_boundary());
        assert!(proportional(&pgl2_matrix_of(&alg, &gamma).unwrap(), &a));
        let second = SecondFactor::Compact { gamma, y1: x.clone(), y2: x.clone() };
        let inf = stabilizer_infinitesimal(&alg, None, &second).unwrap().len();
        let grp = stabilizer_group_pgl2(&alg, None, &second).unwrap();
        assert_eq!(inf, grp);
    }
    assert!(boundary_seen >= 3);
}
