use proptest::prelude::*;

use slicelab::exactnum::{q, qi, Sampler};
use slicelab::liecore::{Element, GroupElement, LieAlgebra};
use slicelab::poisson::{check_moment_condition, Acting, SpacePoint};
use slicelab::slodowy::{chi_section, conjugate_to_slice, SlodowySlice};
use slicelab::wonderful::{chi_compatible, graph_subspace, CurveSubspace};
use slicelab::{Laurent, LaurentMatrix, QMatrix, Rational};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

fn element(alg: &LieAlgebra) -> impl Strategy<Value = Element> {
    let alg = alg.clone();
    proptest::collection::vec(rational(), alg.dim()).prop_map(move |c| alg.element(c).unwrap())
}

fn group(n: usize) -> impl Strategy<Value = GroupElement> {
    proptest::collection::vec(-3i64..=3, n * n)
        .prop_filter_map("singular", move |e| GroupElement::new(QMatrix::from_fn(n, n, |i, j| qi(e[i * n + j]))).ok())
}

fn sl(n: usize) -> LieAlgebra {
    LieAlgebra::sl(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_and_killing_invariance_sl3((x, y, z) in (element(&sl(3)), element(&sl(3)), element(&sl(3)))) {
        let alg = sl(3);
        prop_assert!(alg.jacobiator(&x, &y, &z).is_zero());
        let v = alg.killing(&alg.bracket(&x, &y), &z) + alg.killing(&y, &alg.bracket(&x, &z));
        prop_assert_eq!(v, qi(0));
    }

    #[test]
    fn adjoint_is_an_automorphism((g, x, y) in (group(3), element(&sl(3)), element(&sl(3)))) {
        let alg = sl(3);
        let (gx, gy) = (alg.adjoint(&g, &x), alg.adjoint(&g, &y));
        prop_assert_eq!(alg.adjoint(&g, &alg.bracket(&x, &y)), alg.bracket(&gx, &gy));
        prop_assert_eq!(alg.killing(&gx, &gy), alg.killing(&x, &y));
        prop_assert_eq!(alg.chi(&gx), alg.chi(&x));
    }

    #[test]
    fn conjugation_round_trip_sl3(coords in proptest::collection::vec(rational(), 8)) {
        let alg = sl(3);
        let slice = SlodowySlice::principal(&alg).unwrap();
        let y = slice.parabolic().iter().zip(&coords).fold(slice.base().clone(), |acc, (v, c)| &acc + &v.scale(c));
        let c = conjugate_to_slice(&slice, &y).unwrap();
        prop_assert_eq!(alg.adjoint(&c.u, &c.s), y.clone());
        prop_assert!(slice.contains(&c.s));
        prop_assert_eq!(chi_section(&slice, &y).unwrap(), c.s);
    }

    #[test]
    fn section_is_a_retraction((x, g) in (element(&sl(2)), group(2))) {
        let alg = sl(2);
        let slice = SlodowySlice::principal(&alg).unwrap();
        let s = chi_section(&slice, &x).unwrap();
        prop_assert_eq!(chi_section(&slice, &s).unwrap(), s.clone());
        prop_assert_eq!(chi_section(&slice, &alg.adjoint(&g, &x)).unwrap(), s);
    }

    #[test]
    fn lie_poisson_moment_condition((y, b) in (element(&sl(2)), element(&sl(2)))) {
        let alg = sl(2);
        let check = check_moment_condition(&alg, &SpacePoint::LiePoisson(y), &Acting::Single(b)).unwrap();
        prop_assert!(check.holds);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sl2_limits_are_invariant_and_compatible(
        (g1, g2, a, b, k) in (group(2), group(2), -2i64..=2, -2i64..=2, 2u32..=3)
    ) {
        let alg = sl(2);
        let lift = |m: &QMatrix| m.map(|c| Laurent::constant(c.clone()));
        let torus = LaurentMatrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => Laurent::monomial(qi(1), a),
            (1, 1) => Laurent::monomial(qi(1), b),
            _ => Laurent::constant(qi(0)),
        });
        let curve = CurveSubspace::graph(&alg, &lift(g1.matrix()).mul(&torus).mul(&lift(g2.matrix()))).unwrap();
        let limit = curve.limit().unwrap();
        prop_assert_eq!(curve.reparametrize(k).limit().unwrap(), limit.clone());
        prop_assert_eq!(limit.is_boundary(), a != b);
        if a == b {
            prop_assert_eq!(limit.clone(), graph_subspace(&alg, &g1.compose(&g2)));
        }
        let mut s = Sampler::new(a.unsigned_abs() * 5 + b.unsigned_abs());
        prop_assert!(chi_compatible(&alg, &limit, 10, &mut s));
    }
}
