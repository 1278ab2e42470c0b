//! Eigenspaces of multiplication operators and axis verification.

use rayon::prelude::*;

use crate::algebra::{Algebra, Closure, Element};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::fusion::{Cell, FusionLaw};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{char_poly, find_roots, Poly};

/// Eigenspaces of `L_x` for the eigenvalues found in the ground field.
#[derive(Clone, Debug)]
pub struct EigenData {
    pub element: Element,
    /// Eigenvalues in ascending scalar order with their eigenspaces.
    pub spaces: Vec<(Scalar, Subspace)>,
    pub semisimple: bool,
    /// The characteristic polynomial has a factor with no root found.
    pub undetermined: bool,
    pub char_poly: Poly,
    /// Inverse of the concatenated eigenbasis, when semisimple.
    inverse: Option<Matrix>,
}

impl EigenData {
    pub fn spectrum(&self) -> Vec<Scalar> {
        self.spaces.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn space(&self, lambda: &Scalar) -> Option<&Subspace> {
        self.spaces.iter().find(|(l, _)| l == lambda).map(|(_, s)| s)
    }

    pub fn dim_sum(&self) -> usize {
        self.spaces.iter().map(|(_, s)| s.dim()).sum()
    }

    /// Splits `v` into eigen-components, one per eigenvalue (zero components included).
    pub fn components(&self, v: &[Scalar]) -> Result<Vec<(Scalar, Element)>> {
        let inv =
            self.inverse.as_ref().ok_or_else(|| Error::NotSemisimple(format!("L_x for x = {:?}", self.element)))?;
        let coeffs = inv.mul_vec(v);
        let n = v.len();
        let mut out = Vec::with_capacity(self.spaces.len());
        let mut col = 0;
        for (lambda, space) in &self.spaces {
            let mut comp = vec![Scalar::zero(); n];
            for b in space.basis() {
                let c = &coeffs[col];
                if !c.is_zero() {
                    for (o, x) in comp.iter_mut().zip(b) {
                        if !x.is_zero() {
                            *o += &(c * x);
                        }
                    }
                }
                col += 1;
            }
            out.push((lambda.clone(), Element::new(comp)));
        }
        Ok(out)
    }
}

/// Eigen-analysis of `L_x`, trying `hints` before the rational-root scan.
pub fn eigen_decompose(alg: &Algebra, x: &Element, hints: &[Scalar]) -> Result<EigenData> {
    let l = alg.left_mult_matrix(x)?;
    let n = alg.dim();
    let p = char_poly(&l);
    let search = find_roots(&p, hints);
    let spaces: Vec<(Scalar, Subspace)> =
        search.roots.keys().map(|lambda| (lambda.clone(), l.shift(lambda).kernel())).collect();
    let undetermined = !search.complete();
    let dim_sum: usize = spaces.iter().map(|(_, s)| s.dim()).sum();
    let semisimple = !undetermined && dim_sum == n;
    let inverse = if semisimple {
        let cols: Vec<Vec<Scalar>> = spaces.iter().flat_map(|(_, s)| s.basis().iter().cloned()).collect();
        Some(Matrix::from_cols(alg.field(), n, &cols)?.inverse()?)
    } else {
        None
    };
    Ok(EigenData { element: x.clone(), spaces, semisimple, undetermined, char_poly: p, inverse })
}

/// `xy = Σ_{ν≠0} z_ν + z₀` relative to an axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDecomposition {
    /// Nonzero components for nonzero eigenvalues.
    pub components: Vec<(Scalar, Element)>,
    pub zero_part: Element,
}

impl ProductDecomposition {
    pub fn observed(&self) -> Vec<Scalar> {
        let mut out: Vec<Scalar> = self.components.iter().map(|(l, _)| l.clone()).collect();
        if !self.zero_part.is_zero() {
            out.push(Scalar::zero());
        }
        out.sort();
        out
    }
}

pub fn decompose_product(alg: &Algebra, eig: &EigenData, x: &[Scalar], y: &[Scalar]) -> Result<ProductDecomposition> {
    let xy = alg.product(x, y)?;
    let mut components = Vec::new();
    let mut zero_part = Element::zero(alg.dim());
    for (lambda, z) in eig.components(&xy)? {
        if lambda.is_zero() {
            zero_part = z;
        } else if !z.is_zero() {
            components.push((lambda, z));
        }
    }
    Ok(ProductDecomposition { components, zero_part })
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Violation {
    NotIdempotent {
        square: Element,
    },
    /// The characteristic polynomial has a factor irreducible over the field.
    SpectrumUndetermined {
        residual: Poly,
    },
    NotSemisimple {
        eigen_dim_sum: usize,
        dim: usize,
    },
    EigenvalueOutsideLaw {
        value: Scalar,
    },
    /// `x ∈ A_λ`, `y ∈ A_μ` and `xy` has a nonzero `ν` component with `ν ∉ λ⋆μ`.
    FusionViolation {
        lambda: Scalar,
        mu: Scalar,
        nu: Scalar,
        x: Element,
        y: Element,
    },
    GenerationFailure {
        closure_dim: usize,
        dim: usize,
    },
}

#[derive(Clone, Debug)]
pub struct AxisReport {
    pub idempotent: bool,
    pub eigen: EigenData,
    pub spectrum_in_law: bool,
    /// Observed `(λ, μ, ν-set)` with `λ ≤ μ` in scalar order.
    pub observed: Vec<Cell>,
    pub primitive: bool,
    pub violations: Vec<Violation>,
}

impl AxisReport {
    pub fn is_axis(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Observed fusion cells of a semisimple element, with a witness pair per cell entry.
#[allow(clippy::type_complexity)]
fn observe(alg: &Algebra, eig: &EigenData) -> Result<Vec<(Scalar, Scalar, Vec<(Scalar, Element, Element)>)>> {
    let mut out = Vec::new();
    for (i, (lambda, us)) in eig.spaces.iter().enumerate() {
        for (mu, vs) in &eig.spaces[i..] {
            let mut seen: Vec<(Scalar, Element, Element)> = Vec::new();
            for u in us.basis() {
                for v in vs.basis() {
                    for nu in decompose_product(alg, eig, u, v)?.observed() {
                        if !seen.iter().any(|(s, _, _)| *s == nu) {
                            seen.push((nu, Element::new(u.clone()), Element::new(v.clone())));
                        }
                    }
                }
            }
            seen.sort_by(|a, b| a.0.cmp(&b.0));
            out.push((lambda.clone(), mu.clone(), seen));
        }
    }
    Ok(out)
}

/// Checks idempotency, semisimplicity, spectrum and fusion rules of `a` against `law`.
pub fn check_axis(alg: &Algebra, a: &Element, law: &FusionLaw) -> Result<AxisReport> {
    let square = alg.product(a, a)?;
    let idempotent = &square == a;
    let eigen = eigen_decompose(alg, a, law.values())?;
    let mut violations = Vec::new();
    if !idempotent {
        violations.push(Violation::NotIdempotent { square });
    }
    if eigen.undetermined {
        let mut rest = eigen.char_poly.clone();
        for lambda in eigen.spectrum() {
            while rest.degree() > 0 {
                let (q, r) = rest.div_linear(&lambda);
                if !r.is_zero() {
                    break;
                }
                rest = q;
            }
        }
        violations.push(Violation::SpectrumUndetermined { residual: rest });
    }
    let outside: Vec<Scalar> = eigen.spectrum().into_iter().filter(|l| !law.contains_value(l)).collect();
    let spectrum_in_law = outside.is_empty() && !eigen.undetermined;
    for value in outside {
        violations.push(Violation::EigenvalueOutsideLaw { value });
    }
    let primitive = eigen.space(&Scalar::one()).is_some_and(|s| s.dim() == 1);
    let mut observed = Vec::new();
    if !eigen.semisimple {
        if !eigen.undetermined {
            violations.push(Violation::NotSemisimple { eigen_dim_sum: eigen.dim_sum(), dim: alg.dim() });
        }
    } else {
        for (lambda, mu, seen) in observe(alg, &eigen)? {
            let allowed = law.star(&lambda, &mu);
            for (nu, x, y) in &seen {
                if !allowed.contains(nu) && law.contains_value(&lambda) && law.contains_value(&mu) {
                    violations.push(Violation::FusionViolation {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        nu: nu.clone(),
                        x: x.clone(),
                        y: y.clone(),
                    });
                }
            }
            observed.push((lambda, mu, seen.into_iter().map(|(nu, _, _)| nu).collect()));
        }
    }
    Ok(AxisReport { idempotent, eigen, spectrum_in_law, observed, primitive, violations })
}

/// Smallest law for which every element of `axes` is an axis.
pub fn minimal_law(alg: &Algebra, axes: &[Element]) -> Result<FusionLaw> {
    let mut cells = Vec::new();
    let mut values: Vec<Scalar> = Vec::new();
    for a in axes {
        if !alg.is_idempotent(a) {
            return Err(Error::Precondition(format!("{} is not idempotent", alg.format_element(a))));
        }
        let eig = eigen_decompose(alg, a, &[])?;
        if !eig.semisimple {
            return Err(Error::NotSemisimple(format!(
                "{}: eigenspaces sum to {} of {}",
                alg.format_element(a),
                eig.dim_sum(),
                alg.dim()
            )));
        }
        values.extend(eig.spectrum());
        for (l, m, seen) in observe(alg, &eig)? {
            cells.push((l, m, seen.into_iter().map(|(nu, _, _)| nu).collect::<Vec<_>>()));
        }
    }
    values.sort();
    values.dedup();
    let mut law = FusionLaw::new(values)?;
    for (l, m, nus) in cells {
        for nu in nus {
            law.add(&l, &m, &nu)?;
        }
    }
    Ok(law)
}

/// Verdict of [`check_axial_algebra`].
#[derive(Clone, Debug)]
pub struct AxialVerdict {
    pub reports: Vec<AxisReport>,
    pub closure: Closure,
    /// Algebra-level violations (generation).
    pub violations: Vec<Violation>,
}

impl AxialVerdict {
    pub fn is_certified(&self) -> bool {
        self.violations.is_empty() && self.reports.iter().all(AxisReport::is_axis)
    }

    pub fn all_primitive(&self) -> bool {
        self.reports.iter().all(|r| r.primitive)
    }

    /// Every violation, tagged with the index of its axis (`None` for algebra-level).
    pub fn all_violations(&self) -> Vec<(Option<usize>, &Violation)> {
        let mut out: Vec<(Option<usize>, &Violation)> = Vec::new();
        for (i, r) in self.reports.iter().enumerate() {
            out.extend(r.violations.iter().map(|v| (Some(i), v)));
        }
        out.extend(self.violations.iter().map(|v| (None, v)));
        out
    }
}

pub fn check_axial_algebra(alg: &Algebra, axes: &[Element], law: &FusionLaw) -> Result<AxialVerdict> {
    let reports = axes.par_iter().map(|a| check_axis(alg, a, law)).collect::<Result<Vec<_>>>()?;
    let closure = alg.subalgebra_closure(axes)?;
    let mut violations = Vec::new();
    if closure.span.dim() < alg.dim() {
        violations.push(Violation::GenerationFailure { closure_dim: closure.span.dim(), dim: alg.dim() });
    }
    Ok(AxialVerdict { reports, closure, violations })
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

    fn algebra_a() -> Algebra {
        alg(2, &[(0, 0, &[1, 0]), (1, 1, &[0, 1])])
    }

    fn law_b() -> FusionLaw {
        FusionLaw::with_unit_convention(vec![s(1), s(-1)], &[(s(-1), s(-1), vec![s(1)])]).unwrap()
    }

    #[test]
    fn eigen_b_a4() {
        let b = algebra_b();
        let a4 = Element::from_ints(&[-1, -1]);
        assert!(b.is_idempotent(&a4));
        let e = eigen_decompose(&b, &a4, &[]).unwrap();
        assert_eq!(e.spectrum(), v(&[-1, 1]));
        assert!(e.semisimple && e.spaces.iter().all(|(_, s)| s.dim() == 1));
        assert!(e.space(&s(1)).unwrap().contains(&a4).unwrap());
    }

    #[test]
    fn components_sum_back() {
        let b = algebra_b();
        let e = eigen_decompose(&b, &Element::basis(2, 0), &[]).unwrap();
        let x = v(&[3, -7]);
        let comps = e.components(&x).unwrap();
        let mut total = Element::zero(2);
        for (_, c) in &comps {
            total = &total + c;
        }
        assert_eq!(total.coords(), &x[..]);
    }

    #[test]
    fn axis_b() {
        let r = check_axis(&algebra_b(), &Element::basis(2, 0), &law_b()).unwrap();
        assert!(r.is_axis() && r.primitive);
    }

    #[test]
    fn non_primitive_axis_in_a() {
        let law = FusionLaw::with_unit_convention(vec![s(1), s(0)], &[(s(0), s(0), vec![s(0)])]).unwrap();
        let r = check_axis(&algebra_a(), &Element::from_ints(&[1, 1]), &law).unwrap();
        assert!(r.is_axis());
        assert!(!r.primitive);
    }

    #[test]
    fn eigenvalue_outside_law() {
        let law = FusionLaw::with_unit_convention(vec![s(1)], &[]).unwrap();
        let r = check_axis(&algebra_b(), &Element::basis(2, 0), &law).unwrap();
        assert!(r.violations.contains(&Violation::EigenvalueOutsideLaw { value: s(-1) }));
    }

    #[test]
    fn not_idempotent_and_not_semisimple() {
        // e·e = e, e·n = n, n·n = 0: L_n is nilpotent and nonzero
        let t = alg(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 1])]);
        let law = FusionLaw::with_unit_convention(vec![s(1), s(0)], &[]).unwrap();
        let r = check_axis(&t, &Element::from_ints(&[0, 1]), &law).unwrap();
        assert!(!r.idempotent);
        assert!(r.violations.iter().any(|v| matches!(v, Violation::NotSemisimple { .. })));
    }

    #[test]
    fn irrational_spectrum_is_undetermined() {
        // L_{e1} = [[1,1],[1,0]]: t² − t − 1
        let a = alg(2, &[(0, 0, &[1, 1]), (0, 1, &[1, 0])]);
        let e = eigen_decompose(&a, &Element::basis(2, 0), &[]).unwrap();
        assert!(e.undetermined && !e.semisimple && e.spaces.is_empty());
    }

    #[test]
    fn minimal_law_b() {
        let b = algebra_b();
        let law = minimal_law(&b, &[Element::basis(2, 0), Element::basis(2, 1)]).unwrap();
        assert_eq!(law, law_b());
    }

    #[test]
    fn minimal_law_one_dim() {
        let a = alg(1, &[(0, 0, &[1])]);
        let law = minimal_law(&a, &[Element::basis(1, 0)]).unwrap();
        assert_eq!(law, FusionLaw::with_unit_convention(vec![s(1)], &[]).unwrap());
    }

    #[test]
    fn generation_failure() {
        let v = check_axial_algebra(&algebra_b(), &[Element::basis(2, 0)], &law_b()).unwrap();
        assert!(!v.is_certified());
        assert_eq!(v.violations, vec![Violation::GenerationFailure { closure_dim: 1, dim: 2 }]);
    }

    #[test]
    fn certified_b() {
        let v = check_axial_algebra(&algebra_b(), &[Element::basis(2, 0), Element::basis(2, 1)], &law_b()).unwrap();
        assert!(v.is_certified() && v.all_primitive());
    }
}
