//! The two-dimensional axial algebras A to I.

use super::{labels, law, q, require, CatalogEntry, Params};
use crate::algebra::{Algebra, BilinearForm, Element};
use crate::error::Result;
use crate::extension::Cocycle;
use crate::field::{FieldTag, Scalar};

/// `e1e1 = e1`, `e2e2 = e2`, `e1e2 = p e1 + r e2`.
fn algebra(p: Scalar, r: Scalar) -> Result<Algebra> {
    let (one, zero) = (Scalar::one(), Scalar::zero());
    Algebra::from_products(
        labels(&["e1", "e2"]),
        FieldTag::Rationals,
        &[(0, 0, vec![one.clone(), zero.clone()]), (1, 1, vec![zero, one]), (0, 1, vec![p, r])],
    )
}

fn el(x: Scalar, y: Scalar) -> Element {
    Element::new(vec![x, y])
}

fn entry(name: &str, params: &Params, p: Scalar, r: Scalar, form: [Scalar; 3]) -> Result<CatalogEntry> {
    let mut e = CatalogEntry::new(name, params, algebra(p, r)?);
    e.elements.push(("e1".into(), el(Scalar::one(), Scalar::zero())));
    e.elements.push(("e2".into(), el(Scalar::zero(), Scalar::one())));
    e.frobenius = Some(BilinearForm::from_upper(2, FieldTag::Rationals, &form)?);
    e.cocycle = Some(Cocycle::from_entries(2, FieldTag::Rationals, &[(0, 1, Scalar::one())])?);
    Ok(e)
}

/// Adds the axis set `{first, second}` named `name`, with its reference facts.
fn set(e: &mut CatalogEntry, name: &str, first: &str, second: &str, law: &str, symmetric: bool) {
    let axes = vec![e.element(first).unwrap().clone(), e.element(second).unwrap().clone()];
    e.push_set(name, axes, law);
    e.push_fact(&format!("symmetric:{name}"), if symmetric { "yes" } else { "no" });
}

fn primitive_everywhere(e: &mut CatalogEntry) {
    let names: Vec<String> = e.axis_sets.iter().map(|s| s.name.clone()).collect();
    for n in names {
        e.push_fact(&format!("primitive:{n}"), "yes");
        if e.fact(&format!("radical:{n}")).is_none() {
            e.push_fact(&format!("radical:{n}"), "0");
        }
    }
}

pub(super) fn a(params: &Params) -> Result<CatalogEntry> {
    let (one, zero) = (Scalar::one(), Scalar::zero());
    let mut e = entry("A", params, zero.clone(), zero.clone(), [one.clone(), zero.clone(), one.clone()])?;
    e.elements.push(("a3".into(), el(one.clone(), one.clone())));
    e.push_law("FA", law(&[one.clone(), zero.clone()], &[(&zero, &zero, &[&zero])])?);
    set(&mut e, "X12", "e1", "e2", "FA", true);
    set(&mut e, "X1a3", "e1", "a3", "FA", false);
    set(&mut e, "X2a3", "e2", "a3", "FA", false);
    for n in ["X12", "X1a3", "X2a3"] {
        e.push_fact(&format!("primitive:{n}"), if n == "X12" { "yes" } else { "no" });
        e.push_fact(&format!("radical:{n}"), "0");
    }
    Ok(e)
}

pub(super) fn b(params: &Params) -> Result<CatalogEntry> {
    let one = Scalar::one();
    let m1 = -Scalar::one();
    let mut e = entry("B", params, m1.clone(), m1.clone(), [q(-2, 1), one.clone(), q(-2, 1)])?;
    e.elements.push(("a4".into(), el(m1.clone(), m1.clone())));
    e.push_law("FB", law(&[one.clone(), m1.clone()], &[(&m1, &m1, &[&one])])?);
    set(&mut e, "X12", "e1", "e2", "FB", true);
    set(&mut e, "X1a4", "e1", "a4", "FB", true);
    set(&mut e, "X2a4", "e2", "a4", "FB", true);
    e.push_fact("grading:FB", "-1");
    primitive_everywhere(&mut e);
    Ok(e)
}

pub(super) fn c(params: &Params) -> Result<CatalogEntry> {
    let al = params.get("alpha");
    require(![q(0, 1), q(1, 2), q(-1, 2), q(1, 1), q(-1, 1)].contains(&al), || {
        format!("C needs alpha not in {{0, 1/2, -1/2, 1, -1}}, got {al}")
    })?;
    let one = Scalar::one();
    let d = (&(&al * &q(2, 1)) + &one).inv()?;
    let f = &(&one - &al) / &al;
    let mut e = entry("C", params, al.clone(), al.clone(), [f.clone(), one.clone(), f])?;
    e.elements.push(("a5".into(), el(d.clone(), d.clone())));
    let lam = d;
    e.push_law("FC1", law(&[one.clone(), al.clone()], &[(&al, &al, &[&one, &al])])?);
    e.push_law(
        "FC2",
        law(&[one.clone(), al.clone(), lam.clone()], &[(&al, &al, &[&one, &al]), (&lam, &lam, &[&one])])?,
    );
    set(&mut e, "X12", "e1", "e2", "FC1", true);
    set(&mut e, "X1a5", "e1", "a5", "FC2", false);
    set(&mut e, "X2a5", "e2", "a5", "FC2", false);
    e.push_fact("grading:FC2", &lam.to_string());
    primitive_everywhere(&mut e);
    Ok(e)
}

pub(super) fn d(params: &Params) -> Result<CatalogEntry> {
    let be = params.get("beta");
    require(![q(0, 1), q(1, 2), q(1, 1)].contains(&be), || format!("D needs beta not in {{0, 1/2, 1}}, got {be}"))?;
    let (one, zero) = (Scalar::one(), Scalar::zero());
    let mut e = entry("D", params, zero.clone(), be.clone(), [one.clone(), zero.clone(), zero.clone()])?;
    let omb = &one - &be;
    e.elements.push(("a6".into(), el(one.clone(), &one - &(&be * &q(2, 1)))));
    e.push_law(
        "FD1",
        law(&[one.clone(), be.clone(), zero.clone()], &[(&be, &be, &[&be]), (&zero, &zero, &[&one, &zero])])?,
    );
    e.push_law("FD2", law(&[one.clone(), be.clone(), omb.clone()], &[(&be, &be, &[&be]), (&omb, &omb, &[&omb])])?);
    e.push_law(
        "FD3",
        law(&[one.clone(), omb.clone(), zero.clone()], &[(&omb, &omb, &[&omb]), (&zero, &zero, &[&one, &zero])])?,
    );
    set(&mut e, "X12", "e1", "e2", "FD1", false);
    set(&mut e, "X1a6", "e1", "a6", "FD2", false);
    set(&mut e, "X2a6", "e2", "a6", "FD3", false);
    e.push_fact("radical:X1a6", "e2");
    primitive_everywhere(&mut e);
    Ok(e)
}

/// `λ = (1 − α − β)/(1 − 4αβ)`.
pub fn e_lambda(al: &Scalar, be: &Scalar) -> Result<Scalar> {
    let one = Scalar::one();
    (&(&one - al) - be).checked_div(&(&one - &(&(al * be) * &q(4, 1))))
}

pub(super) fn e(params: &Params) -> Result<CatalogEntry> {
    let (al, be) = (params.get("alpha"), params.get("beta"));
    let (one, zero, half) = (Scalar::one(), Scalar::zero(), q(1, 2));
    require(al != zero && al != half && be != zero && be != half && be != one, || {
        format!("E needs alpha not in {{0, 1/2}} and beta not in {{0, 1/2, 1}}, got ({al}, {be})")
    })?;
    require(&al * &be != q(1, 4) && &al + &be != one && al != be, || {
        format!("E needs 4 alpha beta != 1, alpha + beta != 1, alpha != beta, got ({al}, {be})")
    })?;
    let lam = e_lambda(&al, &be)?;
    require(lam != one && lam != al && lam != be, || format!("E needs lambda = {lam} distinct from 1, alpha, beta"))?;
    let form = [(&one - &be).checked_div(&al)?, one.clone(), (&one - &al).checked_div(&be)?];
    let mut e = entry("E", params, al.clone(), be.clone(), form)?;
    let d = (&one - &(&(&al * &be) * &q(4, 1))).inv()?;
    let two = q(2, 1);
    e.elements.push(("a7".into(), el(&(&one - &(&al * &two)) * &d, &(&one - &(&be * &two)) * &d)));
    // Spec(e1) = {1, beta}, Spec(e2) = {1, alpha}, Spec(a7) = {1, lambda}.
    e.push_law(
        "FE1",
        law(&[one.clone(), be.clone(), lam.clone()], &[(&be, &be, &[&one, &be]), (&lam, &lam, &[&one, &lam])])?,
    );
    e.push_law(
        "FE2",
        law(&[one.clone(), al.clone(), be.clone()], &[(&al, &al, &[&one, &al]), (&be, &be, &[&one, &be])])?,
    );
    e.push_law(
        "FE3",
        law(&[one.clone(), al.clone(), lam.clone()], &[(&al, &al, &[&one, &al]), (&lam, &lam, &[&one, &lam])])?,
    );
    if al != one {
        set(&mut e, "X12", "e1", "e2", "FE2", false);
    }
    set(&mut e, "X1a7", "e1", "a7", "FE1", false);
    if al != one {
        set(&mut e, "X2a7", "e2", "a7", "FE3", false);
    }
    primitive_everywhere(&mut e);
    Ok(e)
}

pub(super) fn f(params: &Params) -> Result<CatalogEntry> {
    let (one, zero, half) = (Scalar::one(), Scalar::zero(), q(1, 2));
    let mut e = entry("F", params, half.clone(), zero.clone(), [zero.clone(), zero.clone(), one.clone()])?;
    e.push_law(
        "FF",
        law(&[one.clone(), half.clone(), zero.clone()], &[(&half, &half, &[&half]), (&zero, &zero, &[&one, &zero])])?,
    );
    set(&mut e, "X12", "e1", "e2", "FF", false);
    primitive_everywhere(&mut e);
    Ok(e)
}

pub(super) fn g(params: &Params) -> Result<CatalogEntry> {
    let be = params.get("beta");
    require(![q(0, 1), q(1, 2), q(1, 1)].contains(&be), || format!("G needs beta not in {{0, 1/2, 1}}, got {be}"))?;
    let (one, half) = (Scalar::one(), q(1, 2));
    let form = [&(&one - &be) * &q(2, 1), one.clone(), (&be * &q(2, 1)).inv()?];
    let mut e = entry("G", params, half.clone(), be.clone(), form)?;
    e.push_law(
        "FG",
        law(&[one.clone(), be.clone(), half.clone()], &[(&be, &be, &[&one, &be]), (&half, &half, &[&one, &half])])?,
    );
    set(&mut e, "X12", "e1", "e2", "FG", false);
    primitive_everywhere(&mut e);
    Ok(e)
}

pub(super) fn h(params: &Params) -> Result<CatalogEntry> {
    let ga = params.get("gamma");
    require(![q(0, 1), q(1, 2), q(1, 1), q(2, 1)].contains(&ga), || {
        format!("H needs gamma not in {{0, 1/2, 1, 2}}, got {ga}")
    })?;
    let one = Scalar::one();
    let two = q(2, 1);
    let p = &ga * &q(1, 2);
    let r = (&ga * &two).inv()?;
    let form = [(&(&ga * &two) - &one).checked_div(&(&ga * &ga))?, one.clone(), &(&two - &ga) * &ga];
    let mut e = entry("H", params, p.clone(), r.clone(), form)?;
    e.push_law("FH", law(&[one.clone(), r.clone(), p.clone()], &[(&r, &r, &[&one, &r]), (&p, &p, &[&one, &p])])?);
    set(&mut e, "X12", "e1", "e2", "FH", ga == -q(1, 1));
    primitive_everywhere(&mut e);
    Ok(e)
}

/// `a_t = t e1 + (1 − t) e2`.
pub fn i_axis(t: &Scalar) -> Element {
    el(t.clone(), &Scalar::one() - t)
}

pub(super) fn i(params: &Params) -> Result<CatalogEntry> {
    let (al, be) = (params.get("alpha"), params.get("beta"));
    require(al != be, || format!("I needs alpha != beta, got {al} = {be}"))?;
    let (one, half) = (Scalar::one(), q(1, 2));
    let mut e = entry("I", params, half.clone(), half.clone(), [one.clone(), one.clone(), one.clone()])?;
    e.elements.push(("a_alpha".into(), i_axis(&al)));
    e.elements.push(("a_beta".into(), i_axis(&be)));
    e.elements.push(("e1-e2".into(), el(one.clone(), -one.clone())));
    e.push_law("FI", law(&[one.clone(), half.clone()], &[])?);
    set(&mut e, "Xab", "a_alpha", "a_beta", "FI", true);
    e.push_fact("radical:Xab", "e1-e2");
    e.push_fact("grading:FI", "1/2");
    primitive_everywhere(&mut e);
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::super::{build_default, build_with};
    use super::*;

    #[test]
    fn h_products() {
        let e = build_with("H", &[("gamma", q(3, 1))]).unwrap();
        assert_eq!(e.algebra.basis_product(0, 1), el(q(3, 2), q(1, 6)));
    }

    #[test]
    fn named_axes_are_idempotent() {
        for (name, axis) in [("A", "a3"), ("B", "a4"), ("C", "a5"), ("D", "a6"), ("E", "a7"), ("I", "a_alpha")] {
            let e = build_default(name).unwrap();
            assert!(e.algebra.is_idempotent(e.element(axis).unwrap()), "{name} {axis}");
        }
    }

    #[test]
    fn listed_forms_are_frobenius() {
        for name in ["A", "B", "C", "D", "E", "F", "G", "H", "I"] {
            let e = build_default(name).unwrap();
            let g = e.frobenius.as_ref().unwrap();
            let alg = &e.algebra;
            for x in 0..2 {
                for y in 0..2 {
                    for z in 0..2 {
                        let bx = alg.basis_element(x);
                        let bz = alg.basis_element(z);
                        assert_eq!(
                            g.eval(&bx, &alg.basis_product(y, z)),
                            g.eval(&alg.basis_product(x, y), &bz),
                            "{name}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn e_drops_sets_at_alpha_one() {
        let e = build_with("E", &[("alpha", q(1, 1)), ("beta", q(5, 1))]).unwrap();
        let names: Vec<&str> = e.axis_sets.iter().map(|s| s.name.as_str()).collect();
        assert_eq!(names, ["X1a7"]);
    }
}
