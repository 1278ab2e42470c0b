//! Miyamoto involutions, bounded group and axis closures, and flips.

use std::collections::{HashSet, VecDeque};

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::fusion::{C2Grading, FusionLaw};
use crate::linalg::{Matrix, Subspace};
use crate::spectral::check_axis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Tau(Element),
    Flip,
    External,
}

/// Invertible matrix verified to be multiplicative on the basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutMatrix {
    pub matrix: Matrix,
    pub provenance: Provenance,
}

impl AutMatrix {
    pub fn verified(alg: &Algebra, matrix: Matrix, provenance: Provenance) -> Result<Self> {
        if matrix.rows() != alg.dim() || !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: alg.dim(), found: matrix.rows() });
        }
        if matrix.determinant().is_zero() {
            return Err(Error::Singular);
        }
        if !alg.is_endomorphism(&matrix) {
            return Err(Error::Precondition("matrix is not multiplicative".into()));
        }
        Ok(AutMatrix { matrix, provenance })
    }

    pub fn apply(&self, x: &[Scalar]) -> Element {
        Element::new(self.matrix.mul_vec(x))
    }
}

/// `τ_a`: `+1` on the plus-graded eigenspaces of `a`, `−1` on the minus-graded ones.
pub fn tau_automorphism(alg: &Algebra, a: &Element, law: &FusionLaw, grading: &C2Grading) -> Result<AutMatrix> {
    let report = check_axis(alg, a, law)?;
    if !report.is_axis() {
        return Err(Error::Precondition(format!("{} is not an axis: {:?}", alg.format_element(a), report.violations)));
    }
    let n = alg.dim();
    let mut cols = Vec::with_capacity(n);
    let mut images = Vec::with_capacity(n);
    for (lambda, space) in &report.eigen.spaces {
        let sign =
            grading.sign(lambda).ok_or_else(|| Error::Precondition(format!("eigenvalue {lambda} is not graded")))?;
        for b in space.basis() {
            cols.push(b.clone());
            images.push(if sign > 0 { b.clone() } else { b.iter().map(|x| -x).collect() });
        }
    }
    let p = Matrix::from_cols(alg.field(), n, &cols)?;
    let img = Matrix::from_cols(alg.field(), n, &images)?;
    let tau = img.checked_mul(&p.inverse()?)?;
    AutMatrix::verified(alg, tau, Provenance::Tau(a.clone())).map_err(|e| match e {
        Error::Precondition(_) => Error::Precondition(format!(
            "grading {grading:?} does not give an automorphism for {}",
            alg.format_element(a)
        )),
        other => other,
    })
}

#[derive(Clone, Debug)]
pub struct GroupClosure {
    /// Identity first, then breadth-first order.
    pub elements: Vec<Matrix>,
    pub generators: Vec<Matrix>,
    pub completed: bool,
    pub cap: usize,
}

impl GroupClosure {
    pub fn order(&self) -> Option<usize> {
        self.completed.then_some(self.elements.len())
    }
}

/// Breadth-first closure of `gens` under right multiplication, stopping past `cap` elements.
pub fn group_closure(gens: &[Matrix], cap: usize) -> Result<GroupClosure> {
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    let Some(first) = gens.first() else {
        return Err(Error::Precondition("no generators".into()));
    };
    let n = first.rows();
    let id = Matrix::identity(n, first.field());
    let mut seen: HashSet<Vec<Scalar>> = HashSet::new();
    seen.insert(id.entries().to_vec());
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in gens {
            let h = e.checked_mul(g)?;
            if seen.insert(h.entries().to_vec()) {
                if elements.len() == cap {
                    return Ok(GroupClosure { elements, generators: gens.to_vec(), completed: false, cap });
                }
                elements.push(h.clone());
                queue.push_back(h);
            }
        }
    }
    Ok(GroupClosure { elements, generators: gens.to_vec(), completed: true, cap })
}

/// Smallest `k ≤ cap` with `m^k = Id`.
pub fn element_order(m: &Matrix, cap: usize) -> Option<usize> {
    let id = Matrix::identity(m.rows(), m.field());
    let mut p = m.clone();
    for k in 1..=cap {
        if p.entries() == id.entries() {
            return Some(k);
        }
        p = p.checked_mul(m).ok()?;
    }
    None
}

/// Order-6 group on two involutions whose product has order 3.
pub fn is_s3_presentation(closure: &GroupClosure) -> bool {
    let [g1, g2] = closure.generators.as_slice() else {
        return false;
    };
    let Ok(prod) = g1.checked_mul(g2) else {
        return false;
    };
    closure.order() == Some(6)
        && element_order(g1, 2) == Some(2)
        && element_order(g2, 2) == Some(2)
        && element_order(&prod, 3) == Some(3)
}

#[derive(Clone, Debug)]
pub struct AxisClosure {
    pub axes: Vec<Element>,
    pub completed: bool,
}

/// Closes `axes` under their own Miyamoto involutions, stopping past `cap` axes.
pub fn axis_closure(
    alg: &Algebra,
    axes: &[Element],
    law: &FusionLaw,
    grading: &C2Grading,
    cap: usize,
) -> Result<AxisClosure> {
    let mut set: Vec<Element> = Vec::new();
    for a in axes {
        if !set.contains(a) {
            set.push(a.clone());
        }
    }
    let mut taus: Vec<AutMatrix> = Vec::new();
    loop {
        while taus.len() < set.len() {
            taus.push(tau_automorphism(alg, &set[taus.len()], law, grading)?);
        }
        let mut fresh = Vec::new();
        for t in &taus {
            for b in &set {
                let img = t.apply(b);
                if !set.contains(&img) && !fresh.contains(&img) {
                    fresh.push(img);
                }
            }
        }
        if fresh.is_empty() {
            return Ok(AxisClosure { axes: set, completed: true });
        }
        for f in fresh {
            if set.len() == cap {
                return Ok(AxisClosure { axes: set, completed: false });
            }
            set.push(f);
        }
    }
}

/// Automorphism swapping `a1` and `a2`, if one exists.
pub fn find_flip(alg: &Algebra, a1: &Element, a2: &Element) -> Result<Option<AutMatrix>> {
    let n = alg.dim();
    let closure = alg.subalgebra_closure(&[a1.clone(), a2.clone()])?;
    if !closure.span.is_full() {
        return Err(Error::GenerationFailure { closure: closure.span.dim(), ambient: n });
    }
    // (value, value under the would-be flip) for an independent set of words
    let mut kept: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut span = Subspace::zero(n, alg.field());
    let mut try_add = |x: Vec<Scalar>, y: Vec<Scalar>, kept: &mut Vec<(Vec<Scalar>, Vec<Scalar>)>| -> Result<()> {
        if !span.contains(&x)? {
            span = span.sum(&Subspace::from_vectors(n, alg.field(), vec![x.clone()])?)?;
            kept.push((x, y));
        }
        Ok(())
    };
    try_add(a1.coords().to_vec(), a2.coords().to_vec(), &mut kept)?;
    try_add(a2.coords().to_vec(), a1.coords().to_vec(), &mut kept)?;
    let mut done = 0;
    while kept.len() < n && done < kept.len() {
        let upto = kept.len();
        for i in 0..upto {
            for j in i.max(done)..upto {
                let x = alg.mul(&kept[i].0, &kept[j].0).into_coords();
                let y = alg.mul(&kept[i].1, &kept[j].1).into_coords();
                try_add(x, y, &mut kept)?;
            }
        }
        done = upto;
    }
    if kept.len() < n {
        return Err(Error::Internal("word basis shorter than the closure".into()));
    }
    let v = Matrix::from_cols(alg.field(), n, &kept.iter().map(|(x, _)| x.clone()).collect::<Vec<_>>())?;
    let w = Matrix::from_cols(alg.field(), n, &kept.iter().map(|(_, y)| y.clone()).collect::<Vec<_>>())?;
    let phi = w.checked_mul(&v.inverse()?)?;
    if phi.mul_vec(a1) != a2.coords() || phi.mul_vec(a2) != a1.coords() {
        return Ok(None);
    }
    match AutMatrix::verified(alg, phi, Provenance::Flip) {
        Ok(m) => Ok(Some(m)),
        Err(Error::Precondition(_)) | Err(Error::Singular) => Ok(None),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTag;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| s(x)).collect()
    }

    fn alg(n: usize, products: &[(usize, usize, &[i64])]) -> Algebra {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        let ps: Vec<(usize, usize, Vec<Scalar>)> = products.iter().map(|(i, j, c)| (*i, *j, v(c))).collect();
        Algebra::from_products(labels, FieldTag::Rationals, &ps).unwrap()
    }

    fn algebra_b() -> Algebra {
        alg(2, &[(0, 0, &[1, 0]), (1, 1, &[0, 1]), (0, 1, &[-1, -1])])
    }

    fn law_b() -> FusionLaw {
        FusionLaw::with_unit_convention(vec![s(1), s(-1)], &[(s(-1), s(-1), vec![s(1)])]).unwrap()
    }

    fn grading_b() -> C2Grading {
        C2Grading::with_minus(&law_b(), &[s(-1)]).unwrap()
    }

    #[test]
    fn tau_a4_swaps() {
        let t = tau_automorphism(&algebra_b(), &Element::from_ints(&[-1, -1]), &law_b(), &grading_b()).unwrap();
        assert_eq!(t.matrix.to_rows(), vec![v(&[0, 1]), v(&[1, 0])]);
        assert_eq!(element_order(&t.matrix, 4), Some(2));
    }

    #[test]
    fn b_group_is_s3() {
        let b = algebra_b();
        let gens: Vec<Matrix> = [0, 1]
            .iter()
            .map(|&i| tau_automorphism(&b, &Element::basis(2, i), &law_b(), &grading_b()).unwrap().matrix)
            .collect();
        let g = group_closure(&gens, 200).unwrap();
        assert_eq!(g.order(), Some(6));
        assert!(is_s3_presentation(&g));
        let one = group_closure(&[Matrix::identity(2, FieldTag::Rationals)], 5).unwrap();
        assert_eq!(one.order(), Some(1));
    }

    #[test]
    fn b_axis_closure() {
        let b = algebra_b();
        let c = axis_closure(&b, &[Element::basis(2, 0), Element::basis(2, 1)], &law_b(), &grading_b(), 50).unwrap();
        assert!(c.completed);
        let mut axes = c.axes.clone();
        axes.sort();
        let mut want = vec![Element::basis(2, 0), Element::basis(2, 1), Element::from_ints(&[-1, -1])];
        want.sort();
        assert_eq!(axes, want);
    }

    #[test]
    fn flips() {
        let b = algebra_b();
        let f = find_flip(&b, &Element::basis(2, 0), &Element::basis(2, 1)).unwrap().unwrap();
        assert_eq!(f.matrix.to_rows(), vec![v(&[0, 1]), v(&[1, 0])]);
        let d = alg(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 5]), (1, 1, &[0, 1])]);
        // {e1, e2} generates D(5) but no automorphism swaps them
        assert!(find_flip(&d, &Element::basis(2, 0), &Element::basis(2, 1)).unwrap().is_none());
        let one = alg(1, &[(0, 0, &[1])]);
        let id = find_flip(&one, &Element::basis(1, 0), &Element::basis(1, 0)).unwrap().unwrap();
        assert_eq!(id.matrix, Matrix::identity(1, FieldTag::Rationals));
        assert!(matches!(
            find_flip(&b, &Element::basis(2, 0), &Element::basis(2, 0)),
            Err(Error::GenerationFailure { .. })
        ));
    }
}
