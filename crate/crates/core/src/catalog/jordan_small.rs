//! Small Jordan algebras, their direct sums, and the 4-dim Monster-type example.

use std::collections::BTreeMap;

use super::{q, CatalogEntry, Params};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::extension::Cocycle;
use crate::field::{FieldTag, Scalar};
use crate::fusion::FusionLaw;

const STANDARD: &str = "standard";
const JORDAN_LAW: &str = "J12";

fn jordan_law() -> FusionLaw {
    FusionLaw::jordan(&q(1, 2)).expect("distinct values")
}

fn vec_of(n: usize, terms: &[(usize, Scalar)]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

fn elem(n: usize, terms: &[(usize, Scalar)]) -> Element {
    Element::new(vec_of(n, terms))
}

fn one() -> Scalar {
    Scalar::one()
}

/// `e` followed by `n1, n2, ...` up to total dimension `n`.
fn e_n_labels(n: usize) -> Vec<String> {
    std::iter::once("e".to_string()).chain((1..n).map(|i| format!("n{i}"))).collect()
}

fn jordan_entry(name: &str, params: &Params, alg: Algebra, axes: Option<Vec<Element>>) -> CatalogEntry {
    let mut e = CatalogEntry::new(name, params, alg);
    e.push_law(JORDAN_LAW, jordan_law());
    match axes {
        Some(axes) => e.push_set(STANDARD, axes, JORDAN_LAW),
        None => e.push_fact("axial", "no"),
    }
    e
}

fn s_algebra(n: usize) -> Result<Algebra> {
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let products: Vec<_> = (0..n).map(|i| (i, i, vec_of(n, &[(i, one())]))).collect();
    Algebra::from_products(labels, FieldTag::Rationals, &products)
}

fn s_entry(name: &str, params: &Params, n: usize) -> Result<CatalogEntry> {
    let axes = (0..n).map(|i| Element::basis(n, i)).collect();
    Ok(jordan_entry(name, params, s_algebra(n)?, Some(axes)))
}

pub(super) fn s(params: &Params) -> Result<CatalogEntry> {
    s_entry("S", params, params.int("n"))
}

fn j_entry(name: &str, params: &Params, n: usize) -> Result<CatalogEntry> {
    let mut products = vec![(0, 0, vec_of(n, &[(0, one())]))];
    for i in 1..n {
        products.push((0, i, vec_of(n, &[(i, q(1, 2))])));
    }
    let alg = Algebra::from_products(e_n_labels(n), FieldTag::Rationals, &products)?;
    let mut axes = vec![Element::basis(n, 0)];
    axes.extend((1..n).map(|i| elem(n, &[(0, one()), (i, one())])));
    Ok(jordan_entry(name, params, alg, Some(axes)))
}

pub(super) fn j(params: &Params) -> Result<CatalogEntry> {
    j_entry("J", params, params.int("n"))
}

fn t_entry(name: &str, params: &Params, n: usize) -> Result<CatalogEntry> {
    let mut products = vec![(0, 0, vec_of(n, &[(0, one())]))];
    if n >= 2 {
        products.push((0, 1, vec_of(n, &[(1, one())])));
    }
    if n >= 3 {
        products.push((2, 2, vec_of(n, &[(1, one())])));
    }
    for i in 2..n {
        products.push((0, i, vec_of(n, &[(i, q(1, 2))])));
    }
    let alg = Algebra::from_products(e_n_labels(n), FieldTag::Rationals, &products)?;
    // e alone spans a proper subalgebra when n = 2, and no other idempotent exists
    let axes = match n {
        1 => Some(vec![Element::basis(1, 0)]),
        2 => None,
        _ => {
            let mut axes = vec![Element::basis(n, 0), elem(n, &[(0, one()), (1, -one()), (2, one())])];
            axes.extend((3..n).map(|i| elem(n, &[(0, one()), (i, one())])));
            Some(axes)
        }
    };
    Ok(jordan_entry(name, params, alg, axes))
}

pub(super) fn t(params: &Params) -> Result<CatalogEntry> {
    t_entry("T", params, params.int("n"))
}

/// Block sum of the parts; the standard axis sets are embedded blockwise.
fn sum_entry(name: &str, params: &Params, parts: &[CatalogEntry]) -> Result<CatalogEntry> {
    let mut alg = parts[0].algebra.clone();
    for p in &parts[1..] {
        alg = alg.direct_sum(&p.algebra)?;
    }
    let total = alg.dim();
    let mut axes = Some(Vec::new());
    let mut offset = 0;
    for p in parts {
        match (p.axis_set(STANDARD), axes.as_mut()) {
            (Ok(set), Some(all)) => {
                for a in &set.axes {
                    let mut v = vec![Scalar::zero(); total];
                    v[offset..offset + a.len()].clone_from_slice(a.coords());
                    all.push(Element::new(v));
                }
            }
            _ => axes = None,
        }
        offset += p.algebra.dim();
    }
    Ok(jordan_entry(name, params, alg, axes))
}

fn no_params() -> Params {
    Params { values: BTreeMap::new() }
}

pub(super) fn jj(params: &Params) -> Result<CatalogEntry> {
    let parts = [j_entry("J", &no_params(), params.int("n"))?, j_entry("J", &no_params(), params.int("m"))?];
    sum_entry("JJ", params, &parts)
}

pub(super) fn tt(params: &Params) -> Result<CatalogEntry> {
    let parts = [t_entry("T", &no_params(), params.int("n"))?, t_entry("T", &no_params(), params.int("m"))?];
    sum_entry("TT", params, &parts)
}

pub(super) fn f1f1(params: &Params) -> Result<CatalogEntry> {
    s_entry("F1+F1", params, 2)
}

pub(super) fn f1f1f1(params: &Params) -> Result<CatalogEntry> {
    s_entry("F1+F1+F1", params, 3)
}

pub(super) fn alias_t9(params: &Params) -> Result<CatalogEntry> {
    t_entry("T9", params, 3)
}

pub(super) fn alias_j3(params: &Params) -> Result<CatalogEntry> {
    s_entry("J3", params, 4)
}

pub(super) fn alias_j6(params: &Params) -> Result<CatalogEntry> {
    let p = no_params();
    sum_entry("J6", params, &[j_entry("J", &p, 2)?, j_entry("J", &p, 1)?, j_entry("J", &p, 1)?])
}

pub(super) fn alias_j12(params: &Params) -> Result<CatalogEntry> {
    let p = no_params();
    sum_entry("J12", params, &[j_entry("J", &p, 3)?, j_entry("J", &p, 1)?])
}

pub(super) fn alias_j13(params: &Params) -> Result<CatalogEntry> {
    let p = no_params();
    sum_entry("J13", params, &[j_entry("J", &p, 2)?, j_entry("J", &p, 2)?])
}

pub(super) fn alias_j24(params: &Params) -> Result<CatalogEntry> {
    let p = no_params();
    sum_entry("J24", params, &[t_entry("T", &p, 3)?, t_entry("T", &p, 1)?])
}

pub(super) fn alias_j33(params: &Params) -> Result<CatalogEntry> {
    j_entry("J33", params, 4)
}

pub(super) fn alias_j58(params: &Params) -> Result<CatalogEntry> {
    t_entry("J58", params, 4)
}

fn labels4(names: [&str; 4]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Basis `e1, e2, n1, n2`.
pub(super) fn j25(params: &Params) -> Result<CatalogEntry> {
    let (al, be) = (params.get("alpha"), params.get("beta"));
    let alg = Algebra::from_products(
        labels4(["e1", "e2", "n1", "n2"]),
        FieldTag::Rationals,
        &[
            (0, 0, vec_of(4, &[(0, one())])),
            (0, 2, vec_of(4, &[(2, q(1, 2))])),
            (0, 3, vec_of(4, &[(3, one())])),
            (1, 1, vec_of(4, &[(1, one())])),
            (1, 2, vec_of(4, &[(2, q(1, 2))])),
            (2, 2, vec_of(4, &[(3, one())])),
        ],
    )?;
    let unit = elem(4, &[(0, one()), (1, one())]);
    let a = elem(4, &[(0, one()), (2, al.clone()), (3, -(&al * &al))]);
    let b = elem(4, &[(1, one()), (2, be.clone()), (3, &be * &be)]);
    let mut e = CatalogEntry::new("J25", params, alg);
    e.push_law(JORDAN_LAW, jordan_law());
    e.elements = vec![("e".into(), unit.clone()), ("a".into(), a.clone()), ("b".into(), b.clone())];
    e.push_set("with_unit", vec![unit, a.clone(), b.clone()], JORDAN_LAW);
    e.push_set("without_unit", vec![a, b], JORDAN_LAW);
    Ok(e)
}

/// Basis `e, n1, n2, n3`.
pub(super) fn j53(params: &Params) -> Result<CatalogEntry> {
    let al = params.get("alpha");
    if al.is_zero() {
        return Err(Error::InvalidParameter("J53 needs alpha != 0 for a second axis".into()));
    }
    let alg = Algebra::from_products(
        labels4(["e", "n1", "n2", "n3"]),
        FieldTag::Rationals,
        &[
            (0, 0, vec_of(4, &[(0, one())])),
            (0, 1, vec_of(4, &[(1, q(1, 2))])),
            (0, 2, vec_of(4, &[(2, one())])),
            (1, 1, vec_of(4, &[(2, one()), (3, one())])),
        ],
    )?;
    let sq = &al * &al;
    let a = elem(4, &[(0, one()), (1, al.clone()), (2, -sq.clone()), (3, sq)]);
    let mut e = CatalogEntry::new("J53", params, alg);
    e.push_law(JORDAN_LAW, jordan_law());
    e.push_set(STANDARD, vec![Element::basis(4, 0), a], JORDAN_LAW);
    Ok(e)
}

/// Basis `e, n1, n2, n3`.
pub(super) fn j59(params: &Params) -> Result<CatalogEntry> {
    let (al, be) = (params.get("alpha"), params.get("beta"));
    if al.is_zero() || be.is_zero() {
        return Err(Error::InvalidParameter("J59 needs alpha, beta != 0".into()));
    }
    let alg = Algebra::from_products(
        labels4(["e", "n1", "n2", "n3"]),
        FieldTag::Rationals,
        &[
            (0, 0, vec_of(4, &[(0, one())])),
            (0, 1, vec_of(4, &[(1, one())])),
            (0, 2, vec_of(4, &[(2, q(1, 2))])),
            (0, 3, vec_of(4, &[(3, q(1, 2))])),
            (2, 3, vec_of(4, &[(1, one())])),
            (3, 3, vec_of(4, &[(1, one())])),
        ],
    )?;
    // a(s, t) = e - t(2s + t) n1 + s n2 + t n3
    let idem = |s: &Scalar, t: &Scalar| {
        let c = -(t * &(&(s * &q(2, 1)) + t));
        elem(4, &[(0, one()), (1, c), (2, s.clone()), (3, t.clone())])
    };
    let zero = Scalar::zero();
    let mut e = CatalogEntry::new("J59", params, alg);
    e.push_law(JORDAN_LAW, jordan_law());
    e.push_set(STANDARD, vec![Element::basis(4, 0), idem(&al, &zero), idem(&zero, &be)], JORDAN_LAW);
    Ok(e)
}

/// Basis `am1, a0, a1, a2` standing for a₋₁, a₀, a₁, a₂.
pub(super) fn monster4(params: &Params) -> Result<CatalogEntry> {
    let v = |xs: [Scalar; 4]| xs.to_vec();
    let h = q(1, 2);
    let mut products: Vec<(usize, usize, Vec<Scalar>)> = (0..4).map(|i| (i, i, vec_of(4, &[(i, one())]))).collect();
    products.extend([
        (0, 1, v([q(3, 2), one(), -one(), -h.clone()])),
        (1, 2, v([-h.clone(), one(), one(), -h.clone()])),
        (2, 3, v([-h.clone(), -one(), one(), q(3, 2)])),
        (0, 3, v([h.clone(), Scalar::zero(), Scalar::zero(), h.clone()])),
        (0, 2, v([Scalar::zero(), -one(), one(), one()])),
        (1, 3, v([one(), one(), -one(), Scalar::zero()])),
    ]);
    let alg = Algebra::from_products(labels4(["am1", "a0", "a1", "a2"]), FieldTag::Rationals, &products)?;
    let mut e = CatalogEntry::new("Monster4", params, alg);
    e.push_law("M", FusionLaw::monster(&q(2, 1), &h)?);
    e.push_set("X01", vec![Element::basis(4, 1), Element::basis(4, 2)], "M");
    e.cocycle = Some(Cocycle::from_entries(
        4,
        FieldTag::Rationals,
        &[(0, 1, one()), (0, 3, one()), (1, 2, one()), (2, 3, one())],
    )?);
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::super::{build_default, build_with};
    use super::*;

    #[test]
    fn s1_is_one_dim_idempotent() {
        let e = build_with("S", &[("n", q(1, 1))]).unwrap();
        assert_eq!(e.algebra.dim(), 1);
        assert!(e.algebra.is_idempotent(&Element::basis(1, 0)));
    }

    #[test]
    fn t2_has_no_axis_set() {
        let e = build_with("T", &[("n", q(2, 1))]).unwrap();
        assert!(e.axis_sets.is_empty());
        assert_eq!(e.fact("axial"), Some("no"));
        let e = build_with("TT", &[("n", q(2, 1)), ("m", q(1, 1))]).unwrap();
        assert!(e.axis_sets.is_empty());
    }

    #[test]
    fn idempotent_families() {
        for (name, sets) in [("J25", &["with_unit", "without_unit"][..]), ("J53", &[STANDARD]), ("J59", &[STANDARD])] {
            for p in [1, 2, -3] {
                let params: Vec<(&str, Scalar)> = match name {
                    "J53" => vec![("alpha", q(p, 1))],
                    _ => vec![("alpha", q(p, 1)), ("beta", q(2 * p + 1, 1))],
                };
                let e = build_with(name, &params).unwrap();
                for s in sets {
                    for a in &e.axis_set(s).unwrap().axes {
                        assert!(e.algebra.is_idempotent(a), "{name} {s} {a:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn aliases_match_their_targets() {
        assert_eq!(
            build_default("J3").unwrap().algebra.tensor(),
            build_with("S", &[("n", q(4, 1))]).unwrap().algebra.tensor()
        );
        assert_eq!(
            build_default("J58").unwrap().algebra.tensor(),
            build_with("T", &[("n", q(4, 1))]).unwrap().algebra.tensor()
        );
        assert_eq!(build_default("J6").unwrap().algebra.dim(), 4);
        assert_eq!(build_default("J24").unwrap().algebra.dim(), 4);
    }

    #[test]
    fn monster_products_are_as_listed() {
        let e = build_default("Monster4").unwrap();
        let alg = &e.algebra;
        // a_{-1} a_1 = a_{-2} + a_{-1} - a_0 with a_{-2} = -a_{-1} + a_1 + a_2
        assert_eq!(alg.basis_product(0, 2), Element::new(vec![q(0, 1), q(-1, 1), q(1, 1), q(1, 1)]));
        for i in 0..4 {
            assert!(alg.is_idempotent(&Element::basis(4, i)));
        }
    }
}
