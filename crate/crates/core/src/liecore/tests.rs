use super::*;
use crate::exactnum::{q, qi, Sampler};

fn sl2() -> LieAlgebra {
    LieAlgebra::sl(2).unwrap()
}

fn el(coords: &[i64]) -> Element {
    Element::new(coords.iter().map(|&c| qi(c)).collect())
}

/// Killing form straight from the definition, using matrix commutators only.
fn killing_by_ad_traces(alg: &LieAlgebra, x: &Element, y: &Element) -> Rational {
    let (mx, my) = (alg.to_matrix(x), alg.to_matrix(y));
    let mut trace = qi(0);
    for k in 0..alg.dim() {
        let b = alg.basis_matrix(k);
        let image = mx.commutator(&my.commutator(b));
        trace += alg.from_matrix(&image).unwrap().coords()[k].clone();
    }
    trace
}

#[test]
fn sl2_bracket_relations() {
    let alg = sl2();
    assert_eq!(alg.bracket(&el(&[1, 0, 0]), &el(&[0, 0, 1])), el(&[0, 1, 0]));
    assert_eq!(alg.bracket(&el(&[0, 1, 0]), &el(&[1, 0, 0])), el(&[2, 0, 0]));
    let mut s = Sampler::new(3);
    for _ in 0..10 {
        let x = alg.sample_element(&mut s);
        assert!(alg.bracket(&x, &x).is_zero());
    }
}

#[test]
fn bracket_matches_commutator() {
    for n in [2, 3] {
        let alg = LieAlgebra::sl(n).unwrap();
        let mut s = Sampler::new(4);
        for _ in 0..20 {
            let (x, y) = (alg.sample_element(&mut s), alg.sample_element(&mut s));
            let direct = alg.from_matrix(&alg.to_matrix(&x).commutator(&alg.to_matrix(&y))).unwrap();
            assert_eq!(alg.bracket(&x, &y), direct);
        }
    }
}

#[test]
fn sl2_killing_values() {
    let alg = sl2();
    let (e, h, f) = (el(&[1, 0, 0]), el(&[0, 1, 0]), el(&[0, 0, 1]));
    for (x, y, expected) in [(&e, &f, 4), (&h, &h, 8), (&e, &e, 0)] {
        assert_eq!(alg.killing(x, y), qi(expected));
        assert_eq!(killing_by_ad_traces(&alg, x, y), qi(expected));
    }
}

#[test]
fn killing_gram_symmetric_invertible() {
    for n in [2, 3] {
        let alg = LieAlgebra::sl(n).unwrap();
        assert_eq!(alg.dim(), n * n - 1);
        assert_eq!(alg.killing_gram().transpose(), *alg.killing_gram());
        assert_eq!(alg.killing_gram().rank(), alg.dim());
        assert_eq!(alg.jacobi_witness(), None);
    }
}

#[test]
fn kappa_inverts_flat() {
    let alg = sl2();
    let e = el(&[1, 0, 0]);
    assert_eq!(alg.kappa(&alg.flat(&e)), e);
    assert!(alg.kappa(&alg.zero()).is_zero());
    // the covector z ↦ 4·(e-coordinate of z)
    let alpha = el(&[4, 0, 0]);
    let preimage = alg.kappa(&alpha);
    for z in alg.basis_elements() {
        assert_eq!(alg.killing(&preimage, &z), alpha.dot(&z));
    }
    assert_eq!(preimage, el(&[0, 0, 1]));
}

#[test]
fn adjoint_examples() {
    let alg = sl2();
    let mut s = Sampler::new(5);
    let x = alg.sample_element(&mut s);
    assert_eq!(alg.adjoint(&GroupElement::identity(2), &x), x);
    let g = alg.exp_nilpotent(&el(&[1, 0, 0])).unwrap();
    assert_eq!(alg.adjoint(&g, &el(&[0, 0, 1])), el(&[-1, 1, 1]));
    let d = GroupElement::diagonal(&[qi(2), qi(1)]).unwrap();
    assert_eq!(alg.adjoint(&d, &el(&[1, 0, 0])), el(&[2, 0, 0]));
}

#[test]
fn adjoint_is_a_homomorphism() {
    for n in [2, 3] {
        let alg = LieAlgebra::sl(n).unwrap();
        let mut s = Sampler::new(6);
        for _ in 0..10 {
            let g = alg.sample_group(&mut s);
            let h = alg.sample_group(&mut s);
            let x = alg.sample_element(&mut s);
            assert_eq!(alg.adjoint(&g.compose(&h), &x), alg.adjoint(&g, &alg.adjoint(&h, &x)));
        }
    }
}

#[test]
fn centralizer_examples() {
    let alg = sl2();
    assert_eq!(alg.centralizer(&alg.zero()).len(), 3);
    let h = el(&[0, 1, 0]);
    let ch = alg.centralizer(&h);
    assert_eq!(ch.len(), 1);
    assert!(ch[0].coords()[0].is_zero() && ch[0].coords()[2].is_zero());
    assert!(alg.is_regular(&h));
    let e = el(&[1, 0, 0]);
    let ce = alg.centralizer(&e);
    assert_eq!(ce.len(), 1);
    assert_eq!(ce[0], e);
    assert!(alg.is_regular(&e));
    // the h-axis spans ker ad_h, by brute force on the bracket table
    let kernel = alg.ad_matrix(&h).kernel();
    assert_eq!(kernel.column(0), vec![qi(0), qi(1), qi(0)]);
}

#[test]
fn chi_examples() {
    let alg = sl2();
    assert_eq!(alg.chi(&el(&[1, 0, 0])), vec![qi(0)]);
    assert_eq!(alg.chi(&el(&[0, 1, 0])), vec![qi(-1)]);
    let mut s = Sampler::new(7);
    for _ in 0..10 {
        let c = s.next_rational();
        let x = Element::new(vec![qi(1), qi(0), c.clone()]);
        assert_eq!(alg.chi(&x), vec![-c.clone()]);
        assert_eq!(alg.to_matrix(&x).determinant(), -c);
    }
}

#[test]
fn chi_is_char_poly_for_sl3() {
    let alg = LieAlgebra::sl(3).unwrap();
    let mut s = Sampler::new(8);
    for _ in 0..10 {
        let x = alg.sample_element(&mut s);
        let m = alg.to_matrix(&x);
        let c = alg.chi(&x);
        // det(λ − m) at λ = 0 is −det(m)
        assert_eq!(c[1], -m.determinant());
        // c_2 is the sum of principal 2×2 minors
        let minors: Rational = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| m[(i, i)].clone() * &m[(j, j)] - m[(i, j)].clone() * &m[(j, i)])
            .sum();
        assert_eq!(c[0], minors);
    }
}

#[test]
fn sampled_identities() {
    for n in [2, 3] {
        let alg = LieAlgebra::sl(n).unwrap();
        let mut s = Sampler::new(9);
        let two_n = qi(2 * n as i64);
        for _ in 0..50 {
            let (x, y, z) = (alg.sample_element(&mut s), alg.sample_element(&mut s), alg.sample_element(&mut s));
            assert!(alg.jacobiator(&x, &y, &z).is_zero());
            let lhs = alg.killing(&alg.bracket(&x, &y), &z) + alg.killing(&y, &alg.bracket(&x, &z));
            assert_eq!(lhs, qi(0));
        }
        for _ in 0..20 {
            let g = alg.sample_group(&mut s);
            let (x, y) = (alg.sample_element(&mut s), alg.sample_element(&mut s));
            assert_eq!(alg.killing(&alg.adjoint(&g, &x), &alg.adjoint(&g, &y)), alg.killing(&x, &y));
            let trace_form = two_n.clone() * alg.to_matrix(&x).mul(&alg.to_matrix(&y)).trace();
            assert_eq!(alg.killing(&x, &y), trace_form);
            assert_eq!(alg.chi(&alg.adjoint(&g, &x)), alg.chi(&x));
        }
    }
}

#[test]
fn exp_log_round_trip() {
    let alg = LieAlgebra::sl(3).unwrap();
    let x = Element::new(vec![qi(1), q(1, 2), qi(-3), qi(0), qi(0), qi(0), qi(0), qi(0)]);
    let g = alg.exp_nilpotent(&x).unwrap();
    assert_eq!(alg.log_unipotent(&g).unwrap(), x);
    assert_eq!(alg.exp_nilpotent(&alg.named("h1").unwrap()), Err(Error::NotNilpotent));
}

#[test]
fn group_equality_is_projective() {
    let a = GroupElement::diagonal(&[qi(2), qi(1)]).unwrap();
    let b = GroupElement::diagonal(&[qi(4), qi(2)]).unwrap();
    assert_eq!(a, b);
    assert_eq!(GroupElement::diagonal(&[qi(0), qi(1)]), Err(Error::Singular));
}

#[test]
fn corrupted_table_breaks_jacobi() {
    let alg = LieAlgebra::sl(3).unwrap().with_corrupted_structure_constant(0, 5, 3, qi(1));
    assert!(alg.jacobi_witness().is_some());
}

#[test]
fn names_and_formatting() {
    let alg = sl2();
    assert_eq!(alg.named("e12"), alg.named("e"));
    assert_eq!(alg.format_element(&el(&[1, 1, 0])), "e + h");
    assert_eq!(alg.format_element(&el(&[-1, 0, 2])), "-e + 2*f");
    assert!(LieAlgebra::from_name("b2").is_err());
    assert_eq!(LieAlgebra::from_name("a2").unwrap().dim(), 8);
}
