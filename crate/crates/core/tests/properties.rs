//! Randomized invariants over catalog algebras.

use axial_core::catalog::{build_with, CatalogEntry};
use axial_core::extension::{
    build_extension, coboundary, cocycle_space, extension_axiality, is_split, lift_axes, Cocycle, SplitVerdict,
};
use axial_core::miyamoto::{axis_closure, group_closure, tau_automorphism};
use axial_core::spectral::{check_axial_algebra, check_axis, eigen_decompose, minimal_law};
use axial_core::{C2Grading, Element, FieldTag, Matrix, Scalar, Subspace};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

fn pool() -> Vec<CatalogEntry> {
    let jobs: Vec<(&str, Vec<(&str, Scalar)>)> = vec![
        ("A", vec![]),
        ("B", vec![]),
        ("C", vec![("alpha", q(3, 1))]),
        ("C", vec![("alpha", q(-2, 3))]),
        ("D", vec![("beta", q(5, 1))]),
        ("E", vec![("alpha", q(3, 1)), ("beta", q(5, 1))]),
        ("F", vec![]),
        ("G", vec![("beta", q(5, 1))]),
        ("H", vec![("gamma", q(3, 1))]),
        ("H", vec![("gamma", q(-1, 1))]),
        ("I", vec![("alpha", q(1, 1)), ("beta", q(2, 1))]),
        ("Monster4", vec![]),
        ("S", vec![("n", q(3, 1))]),
        ("J", vec![("n", q(3, 1))]),
        ("T", vec![("n", q(3, 1))]),
        ("JJ", vec![("n", q(2, 1)), ("m", q(2, 1))]),
        ("J25", vec![("alpha", q(1, 1)), ("beta", q(1, 1))]),
    ];
    jobs.iter().map(|(n, p)| build_with(n, p).unwrap()).collect()
}

/// `(entry, axis set index)` for every listed set.
fn cases() -> Vec<(CatalogEntry, usize)> {
    pool().into_iter().flat_map(|e| (0..e.axis_sets.len()).map(move |k| (e.clone(), k))).collect()
}

fn vector(n: usize, seed: &[i64]) -> Vec<Scalar> {
    (0..n).map(|i| Scalar::from_int(seed[i % seed.len()] + i as i64 % 2)).collect()
}

fn theta(n: usize, seed: &[i64]) -> Cocycle {
    let upper: Vec<Scalar> =
        (0..n * (n + 1) / 2).map(|i| Scalar::from_int(seed[i % seed.len()] - (i as i64 % 3))).collect();
    Cocycle::from_upper(n, FieldTag::Rationals, &upper).unwrap()
}

fn column(n: usize, seed: &[i64]) -> Matrix {
    Matrix::from_cols(FieldTag::Rationals, n, &[vector(n, seed)]).unwrap()
}

fn seeds() -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, 1..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ideal_closure_is_an_ideal(k in 0usize..17, seed in seeds()) {
        let e = &pool()[k];
        let alg = &e.algebra;
        let j = alg.ideal_closure(&[Element::new(vector(alg.dim(), &seed))]).unwrap();
        prop_assert!(alg.is_ideal(&j));
        for b in j.basis() {
            for i in 0..alg.dim() {
                prop_assert!(j.contains(&alg.mul(&alg.basis_element(i), b)).unwrap());
            }
        }
    }

    #[test]
    fn direct_sum_of_idempotents(k in 0usize..17, l in 0usize..17, seed in seeds()) {
        let (p, r) = (&pool()[k], &pool()[l]);
        let sum = p.algebra.direct_sum(&r.algebra).unwrap();
        let left = p.axis_sets.first().map(|s| s.axes[0].clone()).unwrap_or_else(|| Element::zero(p.algebra.dim()));
        let right = Element::new(vector(r.algebra.dim(), &seed));
        let mut joined = left.to_vec();
        joined.extend(right.iter().cloned());
        prop_assert_eq!(
            sum.is_idempotent(&joined),
            p.algebra.is_idempotent(&left) && r.algebra.is_idempotent(&right)
        );
    }

    #[test]
    fn cocycles_closed_under_coboundaries(k in 0usize..40, seed in seeds(), fseed in seeds()) {
        let all = cases();
        let (e, s) = &all[k % all.len()];
        let set = &e.axis_sets[*s];
        let law = e.law(&set.law).unwrap();
        let alg = &e.algebra;
        let cs = cocycle_space(alg, &set.axes, law).unwrap();
        let delta = coboundary(alg, &column(alg.dim(), &fseed)).unwrap();
        prop_assert!(cs.b.contains(&delta.forms()[0].to_upper()).unwrap());
        let mut z = Cocycle::zero(alg.dim(), 1, alg.field());
        for (c, b) in seed.iter().zip(cs.basis_cocycles()) {
            let scaled: Vec<Scalar> = b.forms()[0].to_upper().iter().map(|x| x * &Scalar::from_int(*c)).collect();
            z = z.checked_add(&Cocycle::from_upper(alg.dim(), alg.field(), &scaled).unwrap()).unwrap();
        }
        prop_assert!(cs.contains(&z));
        prop_assert_eq!(cs.contains(&z.checked_add(&delta).unwrap()), cs.z.contains(&delta.forms()[0].to_upper()).unwrap());
    }

    #[test]
    fn generation_lifts(k in 0usize..40, seed in seeds()) {
        let all = cases();
        let (e, s) = &all[k % all.len()];
        let set = &e.axis_sets[*s];
        let alg = &e.algebra;
        let minimal = (0..set.axes.len()).all(|skip| {
            let fewer: Vec<Element> = set.axes.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, a)| a.clone()).collect();
            fewer.is_empty() || !alg.subalgebra_closure(&fewer).unwrap().span.is_full()
        });
        let t = theta(alg.dim(), &seed);
        prop_assume!(minimal && !t.is_zero());
        prop_assume!(is_split(alg, &t).unwrap() == SplitVerdict::NonSplit);
        let ext = build_extension(alg, &t).unwrap();
        let ys = lift_axes(alg, &t, &set.axes).unwrap();
        prop_assert!(ext.subalgebra_closure(&ys).unwrap().span.is_full());
        for skip in 0..ys.len() {
            let fewer: Vec<Element> = ys.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, y)| y.clone()).collect();
            prop_assert!(fewer.is_empty() || !ext.subalgebra_closure(&fewer).unwrap().span.is_full());
        }
    }
}

#[test]
fn radical_is_an_axis_free_ideal() {
    for (e, s) in cases() {
        let set = &e.axis_sets[s];
        let Ok((r, _)) = e.algebra.radical_axial(&set.axes) else { continue };
        assert!(e.algebra.is_ideal(&r), "{} {}", e.name, set.name);
        for a in &set.axes {
            assert!(!r.contains(a).unwrap(), "{} {}: radical holds an axis", e.name, set.name);
        }
    }
}

#[test]
fn eigenspaces_and_minimal_laws() {
    for (e, s) in cases() {
        let set = &e.axis_sets[s];
        let alg = &e.algebra;
        let law = e.law(&set.law).unwrap();
        for a in &set.axes {
            let eig = eigen_decompose(alg, a, law.values()).unwrap();
            assert!(eig.semisimple);
            assert_eq!(eig.dim_sum(), alg.dim());
            let mut total = Subspace::zero(alg.dim(), alg.field());
            for (_, sp) in &eig.spaces {
                total = total.sum(sp).unwrap();
            }
            assert!(total.is_full(), "{} {}", e.name, set.name);
        }
        assert!(check_axial_algebra(alg, &set.axes, law).unwrap().is_certified());
        let min = minimal_law(alg, &set.axes).unwrap();
        assert!(min.is_contained_in(law), "{} {}", e.name, set.name);
        for other in &e.laws {
            if check_axial_algebra(alg, &set.axes, &other.1).unwrap().is_certified() {
                assert!(min.is_contained_in(&other.1));
            }
        }
    }
}

#[test]
fn gradings_respect_the_law() {
    for e in pool() {
        for (name, law) in &e.laws {
            for g in law.find_c2_gradings().unwrap() {
                for x in law.values() {
                    for y in law.values() {
                        let sign = g.sign(x).unwrap() * g.sign(y).unwrap();
                        for z in law.star(x, y) {
                            assert_eq!(g.sign(&z), Some(sign), "{} {name}: {x}*{y} -> {z}", e.name);
                        }
                    }
                }
            }
        }
    }
}

/// Nontrivial gradings of each certified law, with the resulting Miyamoto maps.
#[test]
fn miyamoto_maps_are_involutive_automorphisms() {
    let mut seen = 0;
    for (e, s) in cases() {
        let set = &e.axis_sets[s];
        let alg = &e.algebra;
        let law = e.law(&set.law).unwrap();
        for g in law.find_c2_gradings().unwrap().into_iter().filter(|g| !g.is_trivial()) {
            let mut gens = Vec::new();
            for a in &set.axes {
                let tau = tau_automorphism(alg, a, law, &g).unwrap();
                assert!(alg.is_endomorphism(&tau.matrix));
                let sq = tau.matrix.checked_mul(&tau.matrix).unwrap();
                assert_eq!(sq, Matrix::identity(alg.dim(), alg.field()), "{} {}", e.name, set.name);
                gens.push(tau.matrix);
                seen += 1;
            }
            let closure = axis_closure(alg, &set.axes, law, &g, 60).unwrap();
            for b in closure.axes.iter().take(12) {
                assert!(check_axis(alg, b, law).unwrap().is_axis(), "{}: image not an axis", e.name);
            }
            let _ = group_closure(&gens, 60).unwrap();
        }
    }
    assert!(seen > 20);
}

#[test]
fn miyamoto_groups_transfer_to_extensions() {
    let b = build_with("B", &[]).unwrap();
    let alg = &b.algebra;
    let law = b.law("FB").unwrap();
    let set = b.axis_set("X12").unwrap();
    let g = C2Grading::with_minus(law, &[q(-1, 1)]).unwrap();
    let base: Vec<Matrix> = set.axes.iter().map(|a| tau_automorphism(alg, a, law, &g).unwrap().matrix).collect();
    assert_eq!(group_closure(&base, 200).unwrap().order(), Some(6));
    let mut checked = 0;
    for seed in [[1, 0, 0], [0, 1, 0], [2, -1, 3], [1, 1, -2], [-3, 2, 1]] {
        let t = Cocycle::from_upper(2, FieldTag::Rationals, &seed.map(|x| q(x, 1))).unwrap();
        let rep = extension_axiality(alg, &t, &set.axes, law).unwrap();
        let Some(ext_law) = rep.induced_law.as_ref().filter(|_| rep.axial) else { continue };
        let ge = C2Grading::with_minus(ext_law, &[q(-1, 1)]).unwrap();
        let lifted: Vec<Matrix> =
            rep.lifted_axes.iter().map(|y| tau_automorphism(&rep.extension, y, ext_law, &ge).unwrap().matrix).collect();
        assert_eq!(group_closure(&lifted, 200).unwrap().order(), Some(6), "theta {seed:?}");
        for (m, mt) in base.iter().zip(&lifted) {
            assert_eq!(
                group_closure(std::slice::from_ref(m), 10).unwrap().order(),
                group_closure(std::slice::from_ref(mt), 10).unwrap().order()
            );
        }
        checked += 1;
    }
    assert!(checked >= 3);
}
