use crate::exactnum::{qi, Rational};
use crate::liecore::{Element, LieAlgebra};
use crate::poisson::{
    check_moment_condition, cotangent_bivector_identity, cotangent_form, lie_poisson_apply, moment_eval,
    orbit_transversal, slice_codimension, slice_transversal, Acting, CotangentPoint, Generator, MomentValue,
    PointedBivector, SliceAmbient, SpacePoint,
};
use crate::slodowy::SlodowySlice;
use crate::QMatrix;

use super::{ensure, tau_label, Outcome, Runner};

fn moment_holds(alg: &LieAlgebra, point: &SpacePoint, b: &Generator) -> Outcome {
    let check = check_moment_condition(alg, point, b)?;
    ensure(check.holds, || {
        format!(
            "point {point:?}, generator {b:?}: dH = {:?} but -V = {:?}",
            check.hamiltonian, check.negated_fundamental
        )
    })
}

/// `dim g − dim g_η`.
fn expected_codimension(alg: &LieAlgebra, slice: &SlodowySlice) -> usize {
    alg.dim() - alg.centralizer(&slice.triple().eta).len()
}

pub(crate) fn poisson(r: &mut Runner, alg: &LieAlgebra) {
    let p = format!("poisson/{}", alg.name());
    let fmt = |x: &Element| alg.format_element(x);
    let d = alg.dim();

    let count = r.config.count(20);
    r.check(format!("{p}/lie_poisson_bracket"), |s| {
        for _ in 0..count {
            let (y, a, b) = (alg.sample_element(s), alg.sample_element(s), alg.sample_element(s));
            let bv = PointedBivector::lie_poisson(alg, &y);
            ensure(bv.apply(a.coords()) == lie_poisson_apply(alg, &y, &a).into_coords(), || {
                format!("y={}, alpha={}: matrix and formula differ", fmt(&y), fmt(&a))
            })?;
            let lhs = bv.pair(a.coords(), b.coords());
            let rhs = alg.killing(&y, &alg.bracket(&alg.kappa(&b), &alg.kappa(&a)));
            ensure(lhs == rhs, || format!("y={}, alpha={}, beta={}: {lhs} vs {rhs}", fmt(&y), fmt(&a), fmt(&b)))?;
        }
        Ok(())
    });

    let count = r.config.count(50);
    r.check(format!("{p}/lie_poisson_jacobi"), |s| {
        let bracket = |y: &Element, a: &Element, b: &Element| {
            PointedBivector::lie_poisson(alg, y).pair(alg.flat(b).coords(), alg.flat(a).coords())
        };
        let differential = |a: &Element, b: &Element| -> Vec<Rational> {
            (0..d).map(|k| bracket(&alg.basis_element(k), a, b)).collect()
        };
        for _ in 0..count {
            let (y, a, b, c) = (alg.sample_element(s), alg.sample_element(s), alg.sample_element(s), alg.sample_element(s));
            let bv = PointedBivector::lie_poisson(alg, &y);
            let outer = |u: &Element, v: &Element, w: &Element| bv.pair(alg.flat(w).coords(), &differential(u, v));
            let sum = outer(&a, &b, &c) + outer(&b, &c, &a) + outer(&c, &a, &b);
            ensure(sum == qi(0), || format!("y={}, a={}, b={}, c={}: cyclic sum {sum}", fmt(&y), fmt(&a), fmt(&b), fmt(&c)))?;
        }
        Ok(())
    });

    let count = r.config.count(20);
    r.check(format!("{p}/cotangent_round_trip"), |s| {
        for _ in 0..count {
            let x = alg.sample_element(s);
            let (alpha, beta) = (alg.sample_element(s), alg.sample_element(s));
            let (v, w) = (alg.sample_element(s), alg.sample_element(s));
            let (p1, p2) = cotangent_bivector_identity(alg, &x, &alpha, &beta);
            let lhs = cotangent_form(alg, &x, (&p1, &p2), (&v, &w));
            let rhs = alpha.dot(&v) + beta.dot(&w);
            ensure(lhs == rhs, || {
                format!("x={}, alpha={}, beta={}, v={}, w={}: {lhs} vs {rhs}", fmt(&x), fmt(&alpha), fmt(&beta), fmt(&v), fmt(&w))
            })?;
            let covector: Vec<Rational> = alpha.coords().iter().chain(beta.coords()).cloned().collect();
            let image = PointedBivector::cotangent(alg, &x).apply(&covector);
            ensure(image[..d] == *p1.coords() && image[d..] == *p2.coords(), || {
                format!("x={}: bivector matrix differs from the closed form", fmt(&x))
            })?;
        }
        Ok(())
    });

    r.check(format!("{p}/moment_lie_poisson"), |s| {
        for _ in 0..count {
            let point = SpacePoint::LiePoisson(alg.sample_element(s));
            moment_holds(alg, &point, &Acting::Single(alg.sample_element(s)))?;
        }
        Ok(())
    });

    r.check(format!("{p}/moment_cotangent_right_identity"), |s| {
        for _ in 0..count {
            let point = SpacePoint::CotangentRight(CotangentPoint::at_identity(alg, alg.sample_element(s)));
            moment_holds(alg, &point, &Acting::Single(alg.sample_element(s)))?;
        }
        Ok(())
    });

    let other = r.config.count(10);
    r.check(format!("{p}/moment_cotangent_actions"), |s| {
        for _ in 0..other {
            let pt = CotangentPoint::new(alg.sample_group(s), alg.sample_element(s));
            let (b1, b2) = (alg.sample_element(s), alg.sample_element(s));
            moment_holds(alg, &SpacePoint::CotangentRight(pt.clone()), &Acting::Single(b1.clone()))?;
            moment_holds(alg, &SpacePoint::CotangentLeft(pt.clone()), &Acting::Single(b2.clone()))?;
            moment_holds(alg, &SpacePoint::CotangentBoth(pt), &Acting::Pair(b1, b2))?;
        }
        Ok(())
    });

    r.check(format!("{p}/moment_equivariance"), |s| {
        for _ in 0..count {
            let (h1, h2) = (alg.sample_group(s), alg.sample_group(s));
            let both = SpacePoint::CotangentBoth(CotangentPoint::new(alg.sample_group(s), alg.sample_element(s)));
            let moved = both.act(alg, &Acting::Pair(h1.clone(), h2.clone()))?;
            let (a, b) = match moment_eval(alg, &both)? {
                MomentValue::Pair(a, b) => (a, b),
                MomentValue::Single(_) => return Err("T*G-both has a single moment".to_string().into()),
            };
            let expected = MomentValue::Pair(alg.adjoint(&h1, &a), alg.adjoint(&h2, &b));
            ensure(moment_eval(alg, &moved)? == expected, || format!("point {both:?}: moment not equivariant"))?;
        }
        Ok(())
    });

    r.check(format!("{p}/product_block_structure"), |s| {
        let first = PointedBivector::lie_poisson(alg, &alg.sample_element(s));
        let second = PointedBivector::cotangent(alg, &alg.sample_element(s));
        let prod = PointedBivector::product(&first, &second);
        let a = first.dim();
        let expected = QMatrix::from_fn(prod.dim(), prod.dim(), |i, j| match (i < a, j < a) {
            (true, true) => first.matrix()[(i, j)].clone(),
            (false, false) => -second.matrix()[(i - a, j - a)].clone(),
            _ => qi(0),
        });
        ensure(*prod.matrix() == expected, || "product bivector is not P1 + (-P2)".into())
    });

    for partition in r.config.partitions(alg) {
        let tp = format!("{p}/{}", tau_label(&partition));
        let slice = match SlodowySlice::standard(alg, &partition) {
            Ok(slice) => slice,
            Err(e) => {
                r.check(format!("{tp}/slice"), |_| Err(e.into()));
                continue;
            }
        };
        let codim = expected_codimension(alg, &slice);
        let count = r.config.count(20);
        r.check(format!("{tp}/transversal"), |s| {
            for ambient in [SliceAmbient::LiePoisson, SliceAmbient::CotangentRight] {
                for _ in 0..count {
                    let point = ambient.sample_point(alg, &slice, s);
                    let dec = slice_transversal(alg, ambient, &slice, &point)?;
                    ensure(dec.is_success(), || format!("{ambient:?} at {point:?}: rank {} < {}", dec.rank, dec.ambient_dim))?;
                    ensure(dec.complement_basis.cols() == codim, || {
                        format!("{ambient:?} at {point:?}: complement has dimension {}, expected {codim}", dec.complement_basis.cols())
                    })?;
                    ensure(orbit_transversal(alg, ambient, &slice, &point)?, || format!("{ambient:?} at {point:?}: orbit not transversal"))?;
                }
            }
            Ok(())
        });

        r.check(format!("{tp}/codimension"), |s| {
            for ambient in [SliceAmbient::LiePoisson, SliceAmbient::CotangentRight] {
                let c = slice_codimension(alg, &slice, ambient, 3, s)?;
                ensure(c == codim, || format!("{ambient:?}: codimension {c}, expected {codim}"))?;
            }
            Ok(())
        });

        let count = r.config.count(5);
        r.check(format!("{tp}/moment_slice_products"), |s| {
            for _ in 0..count {
                let gs = SpacePoint::GSlice { g: alg.sample_group(s), s: slice.point(&s.next_vec(slice.dim())), slice: &slice };
                moment_holds(alg, &gs, &Acting::Single(alg.sample_element(s)))?;
                let cotangent = CotangentPoint::new(alg.sample_group(s), alg.sample_element(s));
                let pair = Acting::Pair(alg.sample_element(s), alg.sample_element(s));
                let x = SpacePoint::CotangentLeft(CotangentPoint::new(alg.sample_group(s), alg.sample_element(s)));
                for x in [x, gs] {
                    moment_holds(alg, &SpacePoint::Product { x: Box::new(x), cotangent: cotangent.clone() }, &pair)?;
                }
            }
            Ok(())
        });
    }
}
