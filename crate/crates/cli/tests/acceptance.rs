//! One PASS/FAIL line per acceptance criterion; every comparison is exact.

use std::process::Command;
use std::time::{Duration, Instant};

use slicelab::exactnum::{qi, Sampler};
use slicelab::liecore::{proportional, Element, GroupElement, LieAlgebra};
use slicelab::poisson::{
    check_moment_condition, cotangent_bivector_identity, cotangent_form, orbit_transversal, slice_codimension,
    slice_transversal, Acting, CotangentPoint, SliceAmbient, SpacePoint,
};
use slicelab::slices::{
    compactified_fibre_pgl2, k_tau, pgl2_matrix_of, pi_maps_commute, psi_tau, sample_slice_point, sl2_slice_point,
    stabilizer_group_pgl2, stabilizer_infinitesimal, SecondFactor, SpaceTag,
};
use slicelab::slodowy::{conjugate_to_slice, SlodowySlice};
use slicelab::wonderful::{chi_compatible, pair_vector, parse_curve, pgl2_model, CurveSubspace, Subspace};
use slicelab::{Laurent, LaurentMatrix, QMatrix, Rational};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: slicelab::Error) -> String {
    e.to_string()
}

fn algebras() -> [LieAlgebra; 2] {
    [LieAlgebra::sl(2).unwrap(), LieAlgebra::sl(3).unwrap()]
}

fn lie_core() -> Outcome {
    let start = Instant::now();
    let mut s = Sampler::new(101);
    for alg in algebras() {
        let fmt = |x: &Element| alg.format_element(x);
        ensure(alg.jacobi_witness().is_none(), || "structure table fails Jacobi".into())?;
        let two_n = qi(2 * alg.n() as i64);
        for _ in 0..50 {
            let (x, y, z) = (alg.sample_element(&mut s), alg.sample_element(&mut s), alg.sample_element(&mut s));
            let g = alg.sample_group(&mut s);
            ensure(alg.jacobiator(&x, &y, &z).is_zero(), || format!("Jacobi at {}, {}, {}", fmt(&x), fmt(&y), fmt(&z)))?;
            let inv = alg.killing(&alg.bracket(&x, &y), &z) + alg.killing(&y, &alg.bracket(&x, &z));
            ensure(inv == qi(0), || format!("Killing invariance at {}, {}, {}", fmt(&x), fmt(&y), fmt(&z)))?;
            ensure(alg.killing(&alg.adjoint(&g, &x), &alg.adjoint(&g, &y)) == alg.killing(&x, &y), || {
                format!("Ad-invariance at g={}", g.matrix())
            })?;
            let trace = two_n.clone() * alg.to_matrix(&x).mul(&alg.to_matrix(&y)).trace();
            ensure(alg.killing(&x, &y) == trace, || format!("Killing vs trace at {}, {}", fmt(&x), fmt(&y)))?;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))
}

fn cotangent_round_trip() -> Outcome {
    let mut s = Sampler::new(102);
    for alg in algebras() {
        for _ in 0..20 {
            let x = alg.sample_element(&mut s);
            let (alpha, beta) = (alg.sample_element(&mut s), alg.sample_element(&mut s));
            let (v, w) = (alg.sample_element(&mut s), alg.sample_element(&mut s));
            let (p1, p2) = cotangent_bivector_identity(&alg, &x, &alpha, &beta);
            ensure(p1 == alg.kappa(&beta), || "first component is not kappa(beta)".into())?;
            let expected = &alg.bracket(&x, &alg.kappa(&beta)) - &alg.kappa(&alpha);
            ensure(p2 == expected, || "second component is not [x, kappa(beta)] - kappa(alpha)".into())?;
            let lhs = cotangent_form(&alg, &x, (&p1, &p2), (&v, &w));
            ensure(lhs == alpha.dot(&v) + beta.dot(&w), || format!("round trip fails at x={}", alg.format_element(&x)))?;
        }
    }
    Ok(())
}

fn moment_condition() -> Outcome {
    let mut s = Sampler::new(103);
    for alg in algebras() {
        for _ in 0..20 {
            let lp = SpacePoint::LiePoisson(alg.sample_element(&mut s));
            let check = check_moment_condition(&alg, &lp, &Acting::Single(alg.sample_element(&mut s))).map_err(err)?;
            ensure(check.holds, || format!("Lie-Poisson at {lp:?}"))?;
            let right = SpacePoint::CotangentRight(CotangentPoint::at_identity(&alg, alg.sample_element(&mut s)));
            let check = check_moment_condition(&alg, &right, &Acting::Single(alg.sample_element(&mut s))).map_err(err)?;
            ensure(check.holds, || format!("T*G right at {right:?}"))?;
        }
    }
    Ok(())
}

fn transversality() -> Outcome {
    let mut s = Sampler::new(104);
    for (n, partition, codim) in [(2, vec![2], 2), (3, vec![3], 6), (3, vec![2, 1], 4)] {
        let alg = LieAlgebra::sl(n).unwrap();
        let slice = SlodowySlice::standard(&alg, &partition).map_err(err)?;
        ensure(alg.dim() - alg.centralizer(&slice.triple().eta).len() == codim, || format!("{partition:?}: dim g - dim g_eta"))?;
        for ambient in [SliceAmbient::LiePoisson, SliceAmbient::CotangentRight] {
            let c = slice_codimension(&alg, &slice, ambient, 3, &mut s).map_err(err)?;
            ensure(c == codim, || format!("{partition:?} {ambient:?}: codimension {c}"))?;
            for _ in 0..20 {
                let point = ambient.sample_point(&alg, &slice, &mut s);
                let dec = slice_transversal(&alg, ambient, &slice, &point).map_err(err)?;
                ensure(dec.is_success() && dec.complement_basis.cols() == codim, || format!("{partition:?} {ambient:?} at {point:?}"))?;
                ensure(orbit_transversal(&alg, ambient, &slice, &point).map_err(err)?, || format!("orbit at {point:?}"))?;
            }
        }
    }
    Ok(())
}

fn slice_conjugation() -> Outcome {
    let mut s = Sampler::new(105);
    for alg in algebras() {
        let slice = SlodowySlice::principal(&alg).map_err(err)?;
        for _ in 0..50 {
            let y = slice.parabolic().iter().fold(slice.base().clone(), |acc, v| &acc + &v.scale(&s.next_rational()));
            let c = conjugate_to_slice(&slice, &y).map_err(err)?;
            ensure(alg.adjoint(&c.u, &c.s) == y && slice.contains(&c.s), || format!("y={}", alg.format_element(&y)))?;
            ensure(alg.chi(&c.s) == alg.chi(&y), || format!("chi at y={}", alg.format_element(&y)))?;
        }
    }
    let alg = LieAlgebra::sl(2).unwrap();
    let slice = SlodowySlice::principal(&alg).map_err(err)?;
    for _ in 0..20 {
        let (a, c) = (s.next_rational(), s.next_rational());
        let y = alg.element(vec![qi(1), a.clone(), c.clone()]).map_err(err)?;
        let expected = alg.element(vec![qi(1), qi(0), c + a.clone() * &a]).map_err(err)?;
        ensure(conjugate_to_slice(&slice, &y).map_err(err)?.s == expected, || format!("closed form at y={}", alg.format_element(&y)))?;
    }
    Ok(())
}

fn wonderful_limits() -> Outcome {
    let alg = LieAlgebra::sl(2).unwrap();
    let (z, e, h, f) = (alg.zero(), alg.basis_element(0), alg.basis_element(1), alg.basis_element(2));
    let rows: Vec<Vec<Rational>> = [(&z, &e), (&h, &h), (&f, &z)].iter().map(|(a, b)| pair_vector(a, b)).collect();
    let expected = Subspace::from_spanning_rows(&QMatrix::from_rows(&rows, 6));
    let limit = CurveSubspace::graph(&alg, &parse_curve("diag(t,1)", 2).map_err(err)?).map_err(err)?.limit().map_err(err)?;
    let e22 = QMatrix::from_rows(&[vec![qi(0), qi(0)], vec![qi(0), qi(1)]], 2);
    ensure(limit == expected && limit == pgl2_model(&alg, &e22).map_err(err)?, || "diag(t,1) limit".into())?;
    let mut s = Sampler::new(106);
    for _ in 0..10 {
        let (g1, g2) = (GroupElement::sample(2, &mut s), GroupElement::sample(2, &mut s));
        let exps = [s.next_index(5) as i64 - 2, s.next_index(5) as i64 - 2];
        let torus = LaurentMatrix::from_fn(2, 2, |i, j| {
            if i == j {
                Laurent::monomial(qi(1), exps[i])
            } else {
                Laurent::constant(qi(0))
            }
        });
        let lift = |m: &QMatrix| m.map(|c| Laurent::constant(c.clone()));
        let curve = CurveSubspace::graph(&alg, &lift(g1.matrix()).mul(&torus).mul(&lift(g2.matrix()))).map_err(err)?;
        let by_rows = curve.limit_by_row_reduction().map_err(err)?;
        let by_plucker = curve.limit_by_plucker().map_err(err)?;
        ensure(by_rows == by_plucker, || format!("limit methods differ for exponents {exps:?}"))?;
        ensure(chi_compatible(&alg, &by_rows, 20, &mut s), || format!("chi-incompatible limit for exponents {exps:?}"))?;
    }
    ensure(chi_compatible(&alg, &limit, 20, &mut s), || "diag(t,1) limit is chi-incompatible".into())
}

fn fibres() -> Outcome {
    let alg = LieAlgebra::sl(2).unwrap();
    let slice = SlodowySlice::principal(&alg).map_err(err)?;
    let identity = QMatrix::identity(2);
    for c in [0, 1, 4] {
        let x = sl2_slice_point(&slice, qi(c));
        let fibre = compactified_fibre_pgl2(&alg, &x, &slice).map_err(err)?;
        ensure(fibre.projective_dim() == 1, || format!("s({c}) fibre dimension {}", fibre.projective_dim()))?;
        if c == 1 {
            let xm = alg.to_matrix(&x);
            let boundary = fibre.boundary.clone().ok_or("s(1) boundary not rational")?;
            let expected = [identity.add(&xm), identity.sub(&xm)];
            ensure(boundary.len() == 2, || format!("s(1) has {} boundary points", boundary.len()))?;
            for class in &expected {
                ensure(boundary.iter().any(|b| proportional(b, class)), || format!("{class} missing"))?;
                ensure(pgl2_model(&alg, class).map_err(err)?.is_boundary(), || format!("{class} passes the open-locus test"))?;
            }
        }
    }
    Ok(())
}

fn diagrams() -> Outcome {
    let mut s = Sampler::new(108);
    for (n, partition) in [(2, vec![2]), (3, vec![3]), (3, vec![2, 1])] {
        let alg = LieAlgebra::sl(n).unwrap();
        let slice = SlodowySlice::standard(&alg, &partition).map_err(err)?;
        for tag in [SpaceTag::CotangentRight, SpaceTag::GSlice] {
            for _ in 0..20 {
                let x = sample_slice_point(&alg, tag, &slice, &mut s).map_err(err)?;
                let check = pi_maps_commute(&alg, &x, &slice).map_err(err)?;
                ensure(check.holds(), || format!("{x:?}: {check:?}"))?;
                let class = psi_tau(&alg, &x, &slice).map_err(err)?;
                ensure(class.satisfies_zero_moment(&alg).map_err(err)?, || format!("psi at {x:?}"))?;
            }
        }
    }
    Ok(())
}

fn free_locus() -> Outcome {
    let mut s = Sampler::new(109);
    for alg in algebras() {
        let slice = SlodowySlice::principal(&alg).map_err(err)?;
        for k in 0..20 {
            let tag = if k % 2 == 0 { SpaceTag::CotangentRight } else { SpaceTag::GSlice };
            let x = sample_slice_point(&alg, tag, &slice, &mut s).map_err(err)?;
            let class = k_tau(&alg, &x, &slice).map_err(err)?;
            let stab = stabilizer_infinitesimal(&alg, Some(&class.x), &class.second).map_err(err)?;
            ensure(stab.is_empty(), || format!("stabilizer of dimension {} at {x:?}", stab.len()))?;
        }
    }
    let alg = LieAlgebra::sl(2).unwrap();
    let slice = SlodowySlice::principal(&alg).map_err(err)?;
    let mut compared = 0;
    while compared < 10 {
        let k = compared as i64;
        let c = if k % 2 == 0 { qi((k / 2 + 1) * (k / 2 + 1)) } else { s.next_rational() };
        let x = sl2_slice_point(&slice, c);
        let fibre = compactified_fibre_pgl2(&alg, &x, &slice).map_err(err)?;
        let a = match (&fibre.boundary, k % 2) {
            (Some(b), 0) => b[0].clone(),
            _ => fibre.member(&s.next_vec(2)),
        };
        if a.is_zero() {
            continue;
        }
        let gamma = pgl2_model(&alg, &a).map_err(err)?;
        ensure(proportional(&pgl2_matrix_of(&alg, &gamma).map_err(err)?, &a), || format!("A={a} not recovered"))?;
        let second = SecondFactor::Compact { gamma, y1: x.clone(), y2: x.clone() };
        let inf = stabilizer_infinitesimal(&alg, None, &second).map_err(err)?.len();
        let grp = stabilizer_group_pgl2(&alg, None, &second).map_err(err)?;
        ensure(inf == grp, || format!("A={a}: infinitesimal {inf}, group {grp}"))?;
        compared += 1;
    }
    Ok(())
}

fn determinism_and_budget() -> Outcome {
    let run = || -> Result<(String, Duration), String> {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_slicelab"))
            .args(["verify", "all", "--json"])
            .env_remove("SLICELAB_SEED")
            .output()
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if !out.status.success() {
            return Err(format!("exit status {}", out.status));
        }
        Ok((String::from_utf8(out.stdout).map_err(|e| e.to_string())?, elapsed))
    };
    let (first, t1) = run()?;
    let (second, t2) = run()?;
    let report: serde_json::Value = serde_json::from_str(&first).map_err(|e| e.to_string())?;
    ensure(report["schema"] == 1 && report["status"] == "pass", || "report does not pass".into())?;
    ensure(first == second, || "reports differ between runs".into())?;
    ensure(t1.max(t2) < Duration::from_secs(60), || format!("took {t1:?} and {t2:?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Lie core identities on sl2 and sl3, under 5 s", lie_core),
        ("cotangent bivector round trip", cotangent_round_trip),
        ("moment condition, Lie-Poisson and T*G at (e, x)", moment_condition),
        ("slice transversality and codimension", transversality),
        ("slice conjugation and sl2 closed form", slice_conjugation),
        ("wonderful limits", wonderful_limits),
        ("pgl2 universal centralizer fibres", fibres),
        ("diagram checks and zero moment", diagrams),
        ("free locus and stabilizer agreement", free_locus),
        ("verify all: determinism and budget", determinism_and_budget),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(witness) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {witness}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
