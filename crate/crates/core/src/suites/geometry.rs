use std::collections::HashMap;

use num_traits::Zero;

use crate::exactnum::{q, qi, Rational, Sampler};
use crate::liecore::{Element, GroupElement, LieAlgebra};
use crate::slodowy::SlodowySlice;
use crate::wonderful::{
    chi_witness, graph_subspace, in_gbar_stau, parse_curve, pair_vector, pgl2_model, CurveSubspace, Subspace,
};
use crate::{Laurent, LaurentMatrix, QMatrix};

use super::{ensure, Runner};

/// `g₁ · diag(t^{a₁}, …, t^{a_n}) · g₂` with exponents in `[−2, 2]`.
pub(crate) fn torus_curve(n: usize, s: &mut Sampler) -> LaurentMatrix {
    let g1 = GroupElement::sample(n, s);
    let g2 = GroupElement::sample(n, s);
    let exps: Vec<i64> = (0..n).map(|_| s.next_index(5) as i64 - 2).collect();
    let torus = LaurentMatrix::from_fn(n, n, |i, j| if i == j { Laurent::monomial(qi(1), exps[i]) } else { Laurent::zero() });
    lift(g1.matrix()).mul(&torus).mul(&lift(g2.matrix()))
}

fn lift(m: &QMatrix) -> LaurentMatrix {
    m.map(|c| Laurent::constant(c.clone()))
}

/// Leading coefficient matrix of a matrix curve, i.e. its projective limit.
fn matrix_limit(curve: &LaurentMatrix) -> QMatrix {
    let low = (0..curve.rows())
        .flat_map(|i| (0..curve.cols()).map(move |j| (i, j)))
        .filter_map(|ij| curve[ij].valuation())
        .min()
        .unwrap_or(0);
    QMatrix::from_fn(curve.rows(), curve.cols(), |i, j| curve[(i, j)].coeff(low))
}

pub(crate) fn fmt_curve(c: &LaurentMatrix) -> String {
    let rows: Vec<String> = c
        .row_vectors()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn span(pairs: &[(Element, Element)], ambient: usize) -> Subspace {
    let rows: Vec<Vec<Rational>> = pairs.iter().map(|(a, b)| pair_vector(a, b)).collect();
    Subspace::from_spanning_rows(&QMatrix::from_rows(&rows, ambient))
}

pub(crate) fn wonderful(r: &mut Runner, alg: &LieAlgebra) {
    let p = format!("wonderful/{}", alg.name());
    let n = alg.n();
    let small = n == 2;
    let curves = if small { r.config.count(10) } else { r.config.count(3) };

    r.check(format!("{p}/limit_cross_check"), |s| {
        for _ in 0..curves {
            let m = torus_curve(n, s);
            let curve = CurveSubspace::graph(alg, &m)?;
            let by_rows = curve.limit_by_row_reduction()?;
            let by_plucker = curve.limit_by_plucker()?;
            ensure(by_rows == by_plucker, || format!("curve {}: row reduction and Plücker limits differ", fmt_curve(&m)))?;
        }
        Ok(())
    });

    let (chi_curves, chi_samples) = if small { (r.config.count(20), 20) } else { (r.config.count(3), 20) };
    r.check(format!("{p}/limit_chi_compatible"), |s| {
        for _ in 0..chi_curves {
            let m = torus_curve(n, s);
            let limit = CurveSubspace::graph(alg, &m)?.limit()?;
            if let Some((y1, y2)) = chi_witness(alg, &limit, chi_samples, s) {
                return ensure(false, || {
                    format!("curve {}: pair ({}, {}) has different invariants", fmt_curve(&m), alg.format_element(&y1), alg.format_element(&y2))
                });
            }
            ensure(limit.left_rank() == limit.right_rank() || limit.is_boundary(), || {
                format!("curve {}: one-sided rank drop on a non-boundary point", fmt_curve(&m))
            })?;
        }
        Ok(())
    });

    let eq_count = if small { r.config.count(10) } else { r.config.count(5) };
    r.check(format!("{p}/graph_equivariance"), |s| {
        for _ in 0..eq_count {
            let (g1, g, g2) = (alg.sample_group(s), alg.sample_group(s), alg.sample_group(s));
            let lhs = graph_subspace(alg, &g1.compose(&g).compose(&g2.inverse()));
            ensure(lhs == graph_subspace(alg, &g).act(alg, &g1, &g2), || format!("g={}: graph not equivariant", g.matrix()))?;
            ensure(!lhs.is_boundary(), || format!("g={}: graph flagged as boundary", g.matrix()))?;
        }
        Ok(())
    });

    let inj = r.config.count(20);
    r.check(format!("{p}/graph_injective"), |s| {
        let mut seen: HashMap<Vec<Rational>, GroupElement> = HashMap::new();
        for _ in 0..inj {
            let g = alg.sample_group(s);
            let key = graph_subspace(alg, &g).basis().row_vectors().concat();
            if let Some(other) = seen.insert(key, g.clone()) {
                ensure(other == g, || format!("{} and {} give the same graph", other.matrix(), g.matrix()))?;
            }
        }
        Ok(())
    });

    let rep = if small { r.config.count(10) } else { r.config.count(2) };
    r.check(format!("{p}/limit_invariance"), |s| {
        for _ in 0..rep {
            let m = torus_curve(n, s);
            let curve = CurveSubspace::graph(alg, &m)?;
            let limit = curve.limit()?;
            ensure(curve.reparametrize(2).limit()? == limit, || format!("curve {}: t -> t^2 changes the limit", fmt_curve(&m)))?;
            let unit = Laurent::monomial(q(-3, 2), 4);
            ensure(curve.scale_row(1, &unit).limit()? == limit, || format!("curve {}: unit rescaling changes the limit", fmt_curve(&m)))?;
        }
        Ok(())
    });

    if small {
        pgl2_checks(r, alg, &p);
    }
}

fn pgl2_checks(r: &mut Runner, alg: &LieAlgebra, p: &str) {
    let (z, e, h, f) = (alg.zero(), alg.basis_element(0), alg.basis_element(1), alg.basis_element(2));
    let e22 = QMatrix::from_rows(&[vec![qi(0), qi(0)], vec![qi(0), qi(1)]], 2);

    r.check(format!("{p}/diag_t_1_limit"), |_| {
        let curve = CurveSubspace::graph(alg, &parse_curve("diag(t,1)", 2)?)?;
        let limit = curve.limit()?;
        let expected = span(&[(z.clone(), e.clone()), (h.clone(), h.clone()), (f.clone(), z.clone())], 2 * alg.dim());
        ensure(limit == expected, || format!("limit {:?}", limit.format(alg)))?;
        ensure(limit == pgl2_model(alg, &e22)?, || "limit differs from the model of E22".into())?;
        ensure(limit.is_boundary(), || "limit not flagged as boundary".into())?;
        ensure(limit.contains(&f, &z) && !limit.contains(&h, &(-&h)), || "membership examples fail".into())
    });

    let count = r.config.count(10);
    r.check(format!("{p}/model_matches_limits"), |s| {
        for _ in 0..count {
            let m = torus_curve(2, s);
            let via_model = pgl2_model(alg, &matrix_limit(&m))?;
            ensure(CurveSubspace::graph(alg, &m)?.limit()? == via_model, || format!("curve {}: limit differs from the model", fmt_curve(&m)))?;
            let g = alg.sample_group(s);
            ensure(pgl2_model(alg, g.matrix())? == graph_subspace(alg, &g), || format!("g={}: model differs from graph", g.matrix()))?;
        }
        Ok(())
    });

    r.check(format!("{p}/boundary_points"), |s| {
        for a in [e22.clone(), QMatrix::from_rows(&[vec![qi(0), qi(1)], vec![qi(0), qi(0)]], 2)] {
            let gamma = pgl2_model(alg, &a)?;
            if let Some((y1, y2)) = chi_witness(alg, &gamma, 20, s) {
                return ensure(false, || format!("A={a}: ({}, {}) differ in invariants", alg.format_element(&y1), alg.format_element(&y2)));
            }
            ensure(gamma.is_boundary(), || format!("A={a}: both projections bijective"))?;
        }
        let random = Subspace::from_spanning_rows(&QMatrix::from_fn(3, 6, |_, _| s.next_rational()));
        ensure(chi_witness(alg, &random, 20, s).is_some(), || "a random subspace passed the invariant test".into())
    });

    r.check(format!("{p}/gbar_stau_examples"), |_| {
        let slice = SlodowySlice::principal(alg)?;
        let diag = Subspace::diagonal(alg);
        let s1 = &e + &f;
        ensure(in_gbar_stau(&diag, &s1, &s1, &slice)?, || "(g_diag, (s(1), s(1))) rejected".into())?;
        ensure(in_gbar_stau(&pgl2_model(alg, &e22)?, &z, &e, &slice)?, || "(E22, (0, e)) rejected".into())?;
        ensure(!in_gbar_stau(&diag, &h, &e, &slice)?, || "(g_diag, (h, e)) accepted".into())
    });
}
