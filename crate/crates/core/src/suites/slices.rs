use crate::exactnum::{qi, Rational};
use crate::liecore::{proportional, GroupElement, LieAlgebra};
use crate::poisson::{CotangentPoint, SpacePoint};
use crate::slices::{
    compactified_fibre_pgl2, k_tau, normalize_class, pgl2_matrix_of, pi_maps_commute, psi_tau, sample_centralizer,
    sample_slice_point, sl2_slice_point, slice_membership, stabilizer_group_pgl2, stabilizer_infinitesimal,
    universal_centralizer_contains, HamiltonianSpacePoint, Normalization, SecondFactor, SpaceTag,
};
use crate::slodowy::SlodowySlice;
use crate::wonderful::pgl2_model;
use crate::QMatrix;

use super::{ensure, tau_label, Runner};

const TAGS: [SpaceTag; 2] = [SpaceTag::CotangentRight, SpaceTag::GSlice];

pub(crate) fn slices(r: &mut Runner, alg: &LieAlgebra) {
    let p = format!("slices/{}", alg.name());
    let fmt = |x: &crate::liecore::Element| alg.format_element(x);

    for partition in r.config.partitions(alg) {
        let tp = format!("{p}/{}", tau_label(&partition));
        let slice = match SlodowySlice::standard(alg, &partition) {
            Ok(slice) => slice,
            Err(e) => {
                r.check(format!("{tp}/slice"), |_| Err(e.into()));
                continue;
            }
        };
        let count = r.config.count(20);

        r.check(format!("{tp}/diagram"), |s| {
            for tag in TAGS {
                for _ in 0..count {
                    let x = sample_slice_point(alg, tag, &slice, s)?;
                    let check = pi_maps_commute(alg, &x, &slice)?;
                    ensure(check.holds(), || format!("{x:?}: {check:?}"))?;
                }
            }
            Ok(())
        });

        r.check(format!("{tp}/psi_zero_moment"), |s| {
            for tag in TAGS {
                for _ in 0..count {
                    let x = sample_slice_point(alg, tag, &slice, s)?;
                    let class = psi_tau(alg, &x, &slice)?;
                    let moment = class.moment(alg)?;
                    ensure(moment.is_zero(), || format!("{x:?}: moment {}", fmt(&moment)))?;
                    let again = normalize_class(alg, &class, Normalization::Second, &slice)?;
                    ensure(again == class, || format!("{x:?}: psi image is not normalized"))?;
                }
            }
            Ok(())
        });

        if !slice.is_principal() {
            continue;
        }

        let count = r.config.count(50);
        r.check(format!("{tp}/universal_centralizer"), |s| {
            for k in 0..count {
                let x = if k % 5 == 4 { alg.sample_element(s) } else { slice.point(&s.next_vec(slice.dim())) };
                let g = if k % 2 == 0 { sample_centralizer(alg, &x, s) } else { alg.sample_group(s) };
                let point = HamiltonianSpacePoint::new(alg, SpacePoint::CotangentBoth(CotangentPoint::new(g.clone(), x.clone())))?;
                let via_slice = slice_membership(alg, &point, &slice)?;
                let direct = universal_centralizer_contains(alg, &g, &x, &slice)?;
                ensure(via_slice == direct, || format!("g={}, x={}: {via_slice} vs {direct}", g.matrix(), fmt(&x)))?;
            }
            Ok(())
        });

        let count = r.config.count(20);
        r.check(format!("{tp}/free_locus"), |s| {
            for k in 0..count {
                let x = sample_slice_point(alg, TAGS[k % 2], &slice, s)?;
                let class = k_tau(alg, &x, &slice)?;
                let stab = stabilizer_infinitesimal(alg, Some(&class.x), &class.second)?;
                ensure(stab.is_empty(), || format!("{x:?}: stabilizer of dimension {}", stab.len()))?;
            }
            Ok(())
        });

        let count = r.config.count(10);
        r.check(format!("{tp}/normalize_orbit"), |s| {
            for tag in TAGS {
                let x = sample_slice_point(alg, tag, &slice, s)?;
                let raw = k_tau(alg, &x, &slice)?;
                let reference = normalize_class(alg, &raw, Normalization::First, &slice)?;
                for _ in 0..count {
                    let h = alg.sample_group(s);
                    let moved = normalize_class(alg, &raw.act(alg, &h)?, Normalization::First, &slice)?;
                    ensure(moved == reference, || format!("{x:?}, h={}: normalized class moved", h.matrix()))?;
                }
            }
            Ok(())
        });

        if alg.n() == 2 {
            pgl2_checks(r, alg, &tp, &slice);
        }
    }
}

fn pgl2_checks(r: &mut Runner, alg: &LieAlgebra, p: &str, slice: &SlodowySlice) {
    let identity = QMatrix::identity(2);
    let span_rank = |ms: &[QMatrix]| QMatrix::from_columns(&ms.iter().map(|m| m.row_vectors().concat()).collect::<Vec<_>>(), 4).rank();

    r.check(format!("{p}/fibre_examples"), |_| {
        for c in [0, 1, 4] {
            let x = sl2_slice_point(slice, qi(c));
            let fibre = compactified_fibre_pgl2(alg, &x, slice)?;
            ensure(fibre.projective_dim() == 1, || format!("s({c}): projective dimension {}", fibre.projective_dim()))?;
            let xm = alg.to_matrix(&x);
            ensure(span_rank(&[fibre.basis.clone(), vec![identity.clone(), xm.clone()]].concat()) == 2, || {
                format!("s({c}): fibre is not span(I, s({c}))")
            })?;
            let boundary = fibre.boundary.clone().unwrap_or_default();
            let expected = match c {
                0 => 1,
                _ => 2,
            };
            ensure(boundary.len() == expected, || format!("s({c}): {} boundary points", boundary.len()))?;
            for b in &boundary {
                ensure(pgl2_model(alg, b)?.is_boundary(), || format!("s({c}): {b} passes the open-locus test"))?;
            }
            if c == 1 {
                for class in [identity.add(&xm), identity.sub(&xm)] {
                    ensure(boundary.iter().any(|b| proportional(b, &class)), || format!("s(1): {class} missing from the boundary"))?;
                }
            }
        }
        Ok(())
    });

    let count = r.config.count(20);
    r.check(format!("{p}/fibre_open_part"), |s| {
        for _ in 0..count {
            let x = slice.point(&s.next_vec(1));
            let fibre = compactified_fibre_pgl2(alg, &x, slice)?;
            ensure(fibre.projective_dim() == 1, || format!("x={}: fibre of dimension {}", fmt_el(alg, &x), fibre.projective_dim()))?;
            let a = fibre.member(&s.next_vec(2));
            if a.is_zero() {
                continue;
            }
            let gamma = pgl2_model(alg, &a)?;
            ensure(gamma.contains(&x, &x), || format!("x={}, A={a}: pair missing", fmt_el(alg, &x)))?;
            match GroupElement::new(a.clone()) {
                Ok(g) => {
                    ensure(!gamma.is_boundary() && universal_centralizer_contains(alg, &g, &x, slice)?, || {
                        format!("x={}, A={a}: invertible member outside the centralizer", fmt_el(alg, &x))
                    })?;
                }
                Err(_) => ensure(gamma.is_boundary(), || format!("x={}, A={a}: singular member in the open part", fmt_el(alg, &x)))?,
            }
            let g = sample_centralizer(alg, &x, s);
            ensure(span_rank(&[fibre.basis.clone(), vec![g.matrix().clone()]].concat()) == 2, || {
                format!("x={}, g={}: centralizer element outside the fibre", fmt_el(alg, &x), g.matrix())
            })?;
        }
        Ok(())
    });

    let count = r.config.count(10);
    r.check(format!("{p}/stabilizer_agreement"), |s| {
        for k in 0..count {
            let square = Rational::from_integer(((k / 2 + 1) * (k / 2 + 1)).into());
            let c = if k % 2 == 0 { square } else { s.next_rational() };
            let x = sl2_slice_point(slice, c);
            let fibre = compactified_fibre_pgl2(alg, &x, slice)?;
            let a = match (&fibre.boundary, k % 2) {
                (Some(b), 0) => b[0].clone(),
                _ => fibre.member(&s.next_vec(2)),
            };
            if a.is_zero() {
                continue;
            }
            let gamma = pgl2_model(alg, &a)?;
            ensure(proportional(&pgl2_matrix_of(alg, &gamma)?, &a), || format!("A={a}: matrix not recovered"))?;
            let second = SecondFactor::Compact { gamma, y1: x.clone(), y2: x.clone() };
            let inf = stabilizer_infinitesimal(alg, None, &second)?.len();
            let grp = stabilizer_group_pgl2(alg, None, &second)?;
            ensure(inf == grp, || format!("x={}, A={a}: infinitesimal {inf}, group {grp}", fmt_el(alg, &x)))?;
        }
        for k in 0..count {
            let x = sample_slice_point(alg, TAGS[k % 2], slice, s)?;
            let class = k_tau(alg, &x, slice)?;
            let grp = stabilizer_group_pgl2(alg, Some(&class.x), &class.second)?;
            ensure(grp == 0, || format!("{x:?}: group stabilizer of dimension {grp} at k_tau"))?;
        }
        Ok(())
    });
}

fn fmt_el(alg: &LieAlgebra, x: &crate::liecore::Element) -> String {
    alg.format_element(x)
}
