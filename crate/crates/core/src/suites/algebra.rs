use crate::exactnum::{qi, Rational, Sampler};
use crate::liecore::{Element, LieAlgebra};
use crate::slodowy::{chi_section, chi_section_closed_form, conjugate_to_slice, SlodowySlice};
use crate::Error;

use super::{ensure, tau_label, Outcome, Runner};

pub(crate) fn liecore(r: &mut Runner, alg: &LieAlgebra) {
    let p = format!("liecore/{}", alg.name());
    let fmt = |x: &Element| alg.format_element(x);
    let count = r.config.count(50);

    r.check(format!("{p}/jacobi"), |s| {
        if let Some((i, j, k)) = alg.jacobi_witness() {
            let l = alg.labels();
            return ensure(false, || format!("basis triple ({}, {}, {})", l[i], l[j], l[k]));
        }
        for _ in 0..count {
            let (x, y, z) = (alg.sample_element(s), alg.sample_element(s), alg.sample_element(s));
            let jac = alg.jacobiator(&x, &y, &z);
            ensure(jac.is_zero(), || format!("x={}, y={}, z={}: jacobiator {}", fmt(&x), fmt(&y), fmt(&z), fmt(&jac)))?;
        }
        Ok(())
    });

    r.check(format!("{p}/killing_invariance"), |s| {
        for _ in 0..count {
            let (x, y, z) = (alg.sample_element(s), alg.sample_element(s), alg.sample_element(s));
            let v = alg.killing(&alg.bracket(&x, &y), &z) + alg.killing(&y, &alg.bracket(&x, &z));
            ensure(v == qi(0), || format!("x={}, y={}, z={}: <[x,y],z>+<y,[x,z]> = {v}", fmt(&x), fmt(&y), fmt(&z)))?;
        }
        Ok(())
    });

    r.check(format!("{p}/ad_invariance"), |s| {
        for _ in 0..count {
            let g = alg.sample_group(s);
            let (x, y) = (alg.sample_element(s), alg.sample_element(s));
            let (gx, gy) = (alg.adjoint(&g, &x), alg.adjoint(&g, &y));
            ensure(alg.killing(&gx, &gy) == alg.killing(&x, &y), || {
                format!("g={}, x={}, y={}: Killing form not Ad-invariant", g.matrix(), fmt(&x), fmt(&y))
            })?;
            ensure(alg.adjoint(&g, &alg.bracket(&x, &y)) == alg.bracket(&gx, &gy), || {
                format!("g={}, x={}, y={}: Ad_g is not a homomorphism", g.matrix(), fmt(&x), fmt(&y))
            })?;
        }
        Ok(())
    });

    r.check(format!("{p}/killing_trace_form"), |s| {
        let two_n = qi(2 * alg.n() as i64);
        for _ in 0..count {
            let (x, y) = (alg.sample_element(s), alg.sample_element(s));
            let trace = two_n.clone() * alg.to_matrix(&x).mul(&alg.to_matrix(&y)).trace();
            let k = alg.killing(&x, &y);
            ensure(k == trace, || format!("x={}, y={}: Killing {k} vs 2n tr(xy) {trace}", fmt(&x), fmt(&y)))?;
        }
        Ok(())
    });

    r.check(format!("{p}/bracket_is_commutator"), |s| {
        for _ in 0..r_count(count) {
            let (x, y) = (alg.sample_element(s), alg.sample_element(s));
            let direct = alg.to_matrix(&x).commutator(&alg.to_matrix(&y));
            ensure(alg.to_matrix(&alg.bracket(&x, &y)) == direct, || {
                format!("x={}, y={}: structure constants disagree with matrix commutator", fmt(&x), fmt(&y))
            })?;
        }
        Ok(())
    });

    let chi_count = r.config.count(20);
    r.check(format!("{p}/chi_invariance"), |s| {
        for _ in 0..chi_count {
            let g = alg.sample_group(s);
            let x = alg.sample_element(s);
            ensure(alg.chi(&alg.adjoint(&g, &x)) == alg.chi(&x), || {
                format!("g={}, x={}: chi changes under conjugation", g.matrix(), fmt(&x))
            })?;
        }
        Ok(())
    });
}

fn r_count(count: usize) -> usize {
    count.div_ceil(2)
}

/// Random point of `ξ + p_τ`.
fn sample_in_xi_plus_p(slice: &SlodowySlice, s: &mut Sampler) -> Element {
    slice.parabolic().iter().fold(slice.base().clone(), |acc, v| &acc + &v.scale(&s.next_rational()))
}

pub(crate) fn slodowy(r: &mut Runner, alg: &LieAlgebra) {
    let fmt = |x: &Element| alg.format_element(x);
    for partition in r.config.partitions(alg) {
        let p = format!("slodowy/{}/{}", alg.name(), tau_label(&partition));
        let slice = match SlodowySlice::standard(alg, &partition) {
            Ok(slice) => slice,
            Err(e) => {
                r.check(format!("{p}/triple"), |_| Err(e.into()));
                continue;
            }
        };

        r.check(format!("{p}/structure"), |_| {
            for d in slice.directions() {
                ensure(slice.in_xi_plus_parabolic(&(slice.base() + d)), || format!("direction {} leaves xi + p", fmt(d)))?;
            }
            let centralizer = alg.centralizer(&slice.triple().xi).len();
            ensure(slice.dim() == centralizer, || format!("dim g_eta = {} but dim g_xi = {centralizer}", slice.dim()))?;
            let no_odd = slice.grading().space(-1).is_empty();
            let same = slice.stabilizer_nilradical().len() == slice.nilradical().len();
            ensure(same == no_odd, || format!("(u_tau)_xi = u_tau is {same} while g_-1 = 0 is {no_odd}"))
        });

        let count = r.config.count(50);
        r.check(format!("{p}/conjugation"), |s| {
            for _ in 0..count {
                let y = sample_in_xi_plus_p(&slice, s);
                let c = conjugate_to_slice(&slice, &y)?;
                ensure(alg.adjoint(&c.u, &c.s) == y, || format!("y={}: Ad(u, s) = {} differs", fmt(&y), fmt(&alg.adjoint(&c.u, &c.s))))?;
                ensure(slice.contains(&c.s), || format!("y={}: s={} not in the slice", fmt(&y), fmt(&c.s)))?;
                ensure(alg.chi(&c.s) == alg.chi(&y), || format!("y={}: chi(s) != chi(y)", fmt(&y)))?;
            }
            Ok(())
        });

        if slice.is_principal() {
            let count = r.config.count(20);
            r.check(format!("{p}/section"), |s| {
                for _ in 0..count {
                    let (g, x) = (alg.sample_group(s), alg.sample_element(s));
                    let sx = chi_section(&slice, &x)?;
                    ensure(alg.chi(&sx) == alg.chi(&x), || format!("x={}: section has other invariants", fmt(&x)))?;
                    ensure(sx == chi_section_closed_form(&slice, &x)?, || format!("x={}: closed form disagrees", fmt(&x)))?;
                    ensure(chi_section(&slice, &sx)? == sx, || format!("x={}: section not idempotent", fmt(&x)))?;
                    ensure(chi_section(&slice, &alg.adjoint(&g, &x))? == sx, || format!("x={}: section not invariant", fmt(&x)))?;
                }
                Ok(())
            });
        } else {
            r.check(format!("{p}/section_requires_principal"), |_| {
                ensure(chi_section(&slice, &alg.zero()) == Err(Error::NotPrincipal), || {
                    "chi_section accepted a non-principal slice".to_string()
                })
            });
        }

        if alg.n() == 2 {
            let count = r.config.count(20);
            r.check(format!("{p}/closed_form_conjugation"), |s| closed_form_sl2(alg, &slice, count, s));
        }
    }
}

/// `y = e + a h + c f ↦ s = e + (c + a²) f`.
fn closed_form_sl2(alg: &LieAlgebra, slice: &SlodowySlice, count: usize, s: &mut Sampler) -> Outcome {
    for _ in 0..count {
        let (a, c) = (s.next_rational(), s.next_rational());
        let y = alg.element(vec![qi(1), a.clone(), c.clone()])?;
        let out = conjugate_to_slice(slice, &y)?;
        let expected = alg.element(vec![qi(1), Rational::from_integer(0.into()), c + a.clone() * &a])?;
        ensure(out.s == expected, || format!("y={}: s={} expected {}", alg.format_element(&y), alg.format_element(&out.s), alg.format_element(&expected)))?;
    }
    Ok(())
}
