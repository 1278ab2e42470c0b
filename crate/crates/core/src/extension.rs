//! Central extensions `A_θ = A ∔ V`, their cocycle spaces and split detection.

use rayon::prelude::*;

use crate::algebra::{sym_index, sym_len, Algebra, BilinearForm, Element};
use crate::error::{check_dim, Error, Result};
use crate::field::{FieldTag, Scalar};
use crate::fusion::{law_contains, FusionLaw, ZeroMode};
use crate::linalg::RowReducer;
use crate::linalg::{Matrix, Subspace};
use crate::spectral::{check_axial_algebra, check_axis, decompose_product, eigen_decompose, minimal_law};

/// `θ : A × A → F^s`, one symmetric form per coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle {
    n: usize,
    field: FieldTag,
    forms: Vec<BilinearForm>,
}

impl Cocycle {
    pub fn new(n: usize, field: FieldTag, forms: Vec<BilinearForm>) -> Result<Self> {
        let mut field = field;
        for f in &forms {
            check_dim(n, f.dim())?;
            field = field.join(f.gram().field());
        }
        Ok(Cocycle { n, field, forms })
    }

    pub fn zero(n: usize, s: usize, field: FieldTag) -> Self {
        let f = BilinearForm::new(Matrix::zeros(n, n, field)).expect("zero form");
        Cocycle { n, field, forms: vec![f; s] }
    }

    /// One-coordinate cocycle from an upper-triangle vector.
    pub fn from_upper(n: usize, field: FieldTag, v: &[Scalar]) -> Result<Self> {
        Cocycle::new(n, field, vec![BilinearForm::from_upper(n, field, v)?])
    }

    /// One-coordinate cocycle from `(i, j, θ(b_i, b_j))` entries; the rest are zero.
    pub fn from_entries(n: usize, field: FieldTag, entries: &[(usize, usize, Scalar)]) -> Result<Self> {
        let mut v = vec![Scalar::zero(); sym_len(n)];
        for (i, j, c) in entries {
            if *i >= n || *j >= n {
                return Err(Error::DimensionMismatch { expected: n, found: (*i).max(*j) + 1 });
            }
            v[sym_index(n, (*i).min(*j), (*i).max(*j))] = c.clone();
        }
        Cocycle::from_upper(n, field, &v)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    /// Number of coordinates `s` of `V = F^s`.
    pub fn coords(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[BilinearForm] {
        &self.forms
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.forms.iter().map(|f| f.eval(x, y)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.forms.iter().all(|f| f.gram().is_zero())
    }

    pub fn checked_sub(&self, other: &Cocycle) -> Result<Cocycle> {
        check_dim(self.n, other.n)?;
        check_dim(self.coords(), other.coords())?;
        let forms = self
            .forms
            .iter()
            .zip(&other.forms)
            .map(|(a, b)| BilinearForm::new(a.gram().checked_sub(b.gram())?))
            .collect::<Result<Vec<_>>>()?;
        Cocycle::new(self.n, self.field.join(other.field), forms)
    }

    pub fn checked_add(&self, other: &Cocycle) -> Result<Cocycle> {
        check_dim(self.n, other.n)?;
        check_dim(self.coords(), other.coords())?;
        let forms = self
            .forms
            .iter()
            .zip(&other.forms)
            .map(|(a, b)| BilinearForm::new(a.gram().checked_add(b.gram())?))
            .collect::<Result<Vec<_>>>()?;
        Cocycle::new(self.n, self.field.join(other.field), forms)
    }
}

/// Coefficients of `θ(x, y)` in the upper-triangle unknowns.
pub fn form_row(n: usize, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let mut row = vec![Scalar::zero(); sym_len(n)];
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            row[sym_index(n, i.min(j), i.max(j))] += &(a * b);
        }
    }
    row
}

/// `δf(x, y) = f(xy)`, with `f` given as an `n × s` matrix.
pub fn coboundary(alg: &Algebra, f: &Matrix) -> Result<Cocycle> {
    let n = alg.dim();
    check_dim(n, f.rows())?;
    let mut forms = Vec::with_capacity(f.cols());
    for t in 0..f.cols() {
        let ft = f.col(t);
        let mut gram = Matrix::zeros(n, n, alg.field().join(f.field()));
        for i in 0..n {
            for j in 0..n {
                gram[(i, j)] = alg.basis_product(i, j).iter().zip(&ft).map(|(c, x)| c * x).sum();
            }
        }
        forms.push(BilinearForm::new(gram)?);
    }
    Cocycle::new(n, alg.field(), forms)
}

/// The coboundaries `{δf}` as a subspace of upper-triangle vectors.
pub fn coboundary_space(alg: &Algebra) -> Subspace {
    let n = alg.dim();
    let vs: Vec<Vec<Scalar>> = (0..n)
        .map(|l| {
            let mut v = vec![Scalar::zero(); sym_len(n)];
            for i in 0..n {
                for j in i..n {
                    v[sym_index(n, i, j)] = alg.structure(i, j, l).clone();
                }
            }
            v
        })
        .collect();
    Subspace::from_vectors(sym_len(n), alg.field(), vs).expect("upper vectors")
}

fn adjoined_labels(alg: &Algebra, s: usize) -> Vec<String> {
    let mut labels = alg.labels().to_vec();
    for t in 1..=s {
        let mut l = format!("v{t}");
        while labels.contains(&l) {
            l.push('\'');
        }
        labels.push(l);
    }
    labels
}

/// Structure constants of `A_θ`; adjoined basis vectors come last.
pub fn build_extension(alg: &Algebra, theta: &Cocycle) -> Result<Algebra> {
    let n = alg.dim();
    check_dim(n, theta.dim())?;
    let s = theta.coords();
    let m = n + s;
    let mut tensor = vec![Scalar::zero(); m * m * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                tensor[(i * m + j) * m + k] = alg.structure(i, j, k).clone();
            }
            for (t, f) in theta.forms.iter().enumerate() {
                tensor[(i * m + j) * m + n + t] = f.gram()[(i, j)].clone();
            }
        }
    }
    Algebra::new(adjoined_labels(alg, s), alg.field().join(theta.field()), tensor)
}

/// `Y = {a + θ(a, a)}` inside `A_θ`.
pub fn lift_axes(alg: &Algebra, theta: &Cocycle, axes: &[Element]) -> Result<Vec<Element>> {
    axes.iter()
        .map(|a| {
            alg.check_element(a)?;
            let mut c = a.coords().to_vec();
            c.extend(theta.eval(a, a));
            Ok(Element::new(c))
        })
        .collect()
}

/// Rows `θ(a, k) = 0` for a basis of `ker L_a`.
pub fn condition1_constraints(alg: &Algebra, a: &Element) -> Result<Matrix> {
    let n = alg.dim();
    let eig = eigen_decompose(alg, a, &[Scalar::zero(), Scalar::one()])?;
    if !eig.semisimple {
        return Err(Error::NotSemisimple(alg.format_element(a)));
    }
    let rows: Vec<Vec<Scalar>> = match eig.space(&Scalar::zero()) {
        Some(k) => k.basis().iter().map(|k| form_row(n, a, k)).collect(),
        None => Vec::new(),
    };
    Matrix::from_rows(alg.field(), sym_len(n), &rows)
}

/// Rows `θ(x, y) − Σ ν⁻¹ θ(a, z_ν) = 0` over eigenbasis pairs with `0 ∉ λ⋆μ`.
pub fn condition2_constraints(alg: &Algebra, a: &Element, law: &FusionLaw) -> Result<Matrix> {
    let n = alg.dim();
    let eig = eigen_decompose(alg, a, law.values())?;
    if !eig.semisimple {
        return Err(Error::NotSemisimple(alg.format_element(a)));
    }
    let zero = Scalar::zero();
    let mut rows = Vec::new();
    for (i, (lambda, us)) in eig.spaces.iter().enumerate() {
        for (mu, vs) in &eig.spaces[i..] {
            if law.star(lambda, mu).contains(&zero) {
                continue;
            }
            for (ui, u) in us.basis().iter().enumerate() {
                let start = if lambda == mu { ui } else { 0 };
                for v in &vs.basis()[start..] {
                    let d = decompose_product(alg, &eig, u, v)?;
                    let mut row = form_row(n, u, v);
                    for (nu, z) in &d.components {
                        let w = nu.inv()?;
                        for (r, c) in row.iter_mut().zip(form_row(n, a, z)) {
                            if !c.is_zero() {
                                *r -= &(&w * &c);
                            }
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    Matrix::from_rows(alg.field(), sym_len(n), &rows)
}

/// Rows `θ(x, x) = 0` for each listed element.
pub fn vanishing_rows(alg: &Algebra, elems: &[Element]) -> Vec<Vec<Scalar>> {
    elems.iter().map(|x| form_row(alg.dim(), x, x)).collect()
}

/// Solution space `Z(A, F; X′)` of one coordinate, with its coboundary data.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    pub n: usize,
    pub field: FieldTag,
    pub z: Subspace,
    pub b: Subspace,
    pub z_cap_b: Subspace,
    pub z_plus_b: Subspace,
    pub quotient_dim: usize,
    /// Normal forms modulo `Z ∩ B` of a quotient basis, in RREF.
    pub representatives: Vec<Vec<Scalar>>,
    /// Constraint rows fed to the reducer, before deduplication.
    pub rows_seen: usize,
}

impl CocycleSpace {
    pub fn contains(&self, theta: &Cocycle) -> bool {
        theta.forms.iter().all(|f| self.z.contains(&f.to_upper()).unwrap_or(false))
    }

    pub fn basis_cocycles(&self) -> Vec<Cocycle> {
        self.z.basis().iter().map(|v| Cocycle::from_upper(self.n, self.field, v).expect("upper vector")).collect()
    }

    pub fn representative_cocycles(&self) -> Vec<Cocycle> {
        self.representatives.iter().map(|v| Cocycle::from_upper(self.n, self.field, v).expect("upper vector")).collect()
    }
}

fn axis_rows(alg: &Algebra, a: &Element, law: &FusionLaw) -> Result<Vec<Vec<Scalar>>> {
    let report = check_axis(alg, a, law)?;
    if !report.is_axis() {
        return Err(Error::Precondition(format!("{} is not an axis: {:?}", alg.format_element(a), report.violations)));
    }
    let mut rows = condition1_constraints(alg, a)?.to_rows();
    rows.extend(condition2_constraints(alg, a, law)?.to_rows());
    Ok(rows)
}

pub fn cocycle_space(alg: &Algebra, axes: &[Element], law: &FusionLaw) -> Result<CocycleSpace> {
    cocycle_space_with(alg, axes, law, &[])
}

/// As [`cocycle_space`], with extra linear rows imposed on the unknowns.
pub fn cocycle_space_with(
    alg: &Algebra,
    axes: &[Element],
    law: &FusionLaw,
    extra_rows: &[Vec<Scalar>],
) -> Result<CocycleSpace> {
    let n = alg.dim();
    let per_axis = axes.par_iter().map(|a| axis_rows(alg, a, law)).collect::<Result<Vec<_>>>()?;
    let mut red = RowReducer::new(sym_len(n), alg.field());
    for row in per_axis.into_iter().flatten().chain(extra_rows.iter().cloned()) {
        red.push(row)?;
    }
    let z = red.kernel();
    let b = coboundary_space(alg);
    let z_cap_b = z.intersect(&b)?;
    let z_plus_b = z.sum(&b)?;
    let quotient_dim = z.dim() - z_cap_b.dim();
    let normal: Vec<Vec<Scalar>> = z.basis().iter().map(|v| z_cap_b.reduce(v)).collect::<Result<_>>()?;
    let representatives = Subspace::from_vectors(sym_len(n), z.field(), normal)?.basis().to_vec();
    debug_assert_eq!(representatives.len(), quotient_dim);
    Ok(CocycleSpace {
        n,
        field: alg.field(),
        z,
        b,
        z_cap_b,
        z_plus_b,
        quotient_dim,
        representatives,
        rows_seen: red.rows_seen(),
    })
}

/// `θ − δf` with `f(a) = θ(a, a)` on each (idempotent) axis, so the result vanishes there.
pub fn normalize_on_axes(alg: &Algebra, theta: &Cocycle, axes: &[Element]) -> Result<Cocycle> {
    let n = alg.dim();
    if axes.is_empty() {
        return Ok(theta.clone());
    }
    for a in axes {
        if !alg.is_idempotent(a) {
            return Err(Error::Precondition(format!("{} is not idempotent", alg.format_element(a))));
        }
    }
    let m = Matrix::from_rows(alg.field(), n, &axes.iter().map(|a| a.coords().to_vec()).collect::<Vec<_>>())?;
    if m.rank() < axes.len() {
        return Err(Error::LinearlyDependent("axes".into()));
    }
    let rhs_rows: Vec<Vec<Scalar>> = axes.iter().map(|a| theta.eval(a, a)).collect();
    let rhs = Matrix::from_rows(theta.field(), theta.coords(), &rhs_rows)?;
    let field = m.field().join(rhs.field());
    let f = match m.with_field(field)?.solve(&rhs.with_field(field)?)? {
        crate::linalg::Solution::Consistent { particular, .. } => particular,
        crate::linalg::Solution::Inconsistent { .. } => {
            return Err(Error::Internal("independent rows gave an inconsistent system".into()))
        }
    };
    theta.checked_sub(&coboundary(alg, &f)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitVerdict {
    /// `Σ coeffs_k θ_k` is a coboundary.
    Split {
        coeffs: Vec<Scalar>,
    },
    NonSplit,
    /// Classes independent but `Ann(A_θ)` is larger than `V`.
    Indeterminate,
}

pub fn is_split(alg: &Algebra, theta: &Cocycle) -> Result<SplitVerdict> {
    let n = alg.dim();
    check_dim(n, theta.dim())?;
    let s = theta.coords();
    let b = coboundary_space(alg);
    let mut cols: Vec<Vec<Scalar>> = theta.forms.iter().map(|f| f.to_upper()).collect();
    cols.extend(b.basis().iter().cloned());
    let field = alg.field().join(theta.field());
    let m = Matrix::from_cols(field, sym_len(n), &cols)?;
    if let Some(k) = m.kernel().basis().iter().find(|k| k[..s].iter().any(|x| !x.is_zero())) {
        return Ok(SplitVerdict::Split { coeffs: k[..s].to_vec() });
    }
    let ext = build_extension(alg, theta)?;
    let v = Subspace::from_vectors(n + s, field, (0..s).map(|t| Element::basis(n + s, n + t).into_coords()).collect())?;
    if ext.annihilator() == v {
        Ok(SplitVerdict::NonSplit)
    } else {
        Ok(SplitVerdict::Indeterminate)
    }
}

#[derive(Clone, Debug)]
pub struct ExtensionReport {
    pub extension: Algebra,
    pub lifted_axes: Vec<Element>,
    pub condition1: Vec<bool>,
    /// `minimal_law(A_θ, Y)`, when condition (1) holds for every axis.
    pub induced_law: Option<FusionLaw>,
    pub generates: bool,
    pub axial: bool,
    pub theta_in_z: bool,
    /// `⊙ ⊆ F ∪ {0}` with empty new cells.
    pub law_within_original: Option<bool>,
    pub split: SplitVerdict,
}

/// Whether `θ(a, ker L_a) = 0` in every coordinate.
pub fn condition1_holds(alg: &Algebra, theta: &Cocycle, a: &Element) -> Result<bool> {
    let rows = condition1_constraints(alg, a)?;
    Ok(theta.forms.iter().all(|f| {
        let u = f.to_upper();
        (0..rows.rows()).all(|r| crate::linalg::dot(rows.row(r), &u).is_zero())
    }))
}

pub fn extension_axiality(
    alg: &Algebra,
    theta: &Cocycle,
    axes: &[Element],
    law: &FusionLaw,
) -> Result<ExtensionReport> {
    let extension = build_extension(alg, theta)?;
    let lifted_axes = lift_axes(alg, theta, axes)?;
    let condition1 = axes.iter().map(|a| condition1_holds(alg, theta, a)).collect::<Result<Vec<_>>>()?;
    let closure = extension.subalgebra_closure(&lifted_axes)?;
    let generates = closure.span.is_full();
    let (induced_law, axial, law_within_original) = if condition1.iter().all(|&c| c) {
        let law_ext = minimal_law(&extension, &lifted_axes)?;
        let axial = check_axial_algebra(&extension, &lifted_axes, &law_ext)?.is_certified();
        let within = law_contains(&law_ext, &law.augment_with_zero(ZeroMode::EmptyRow));
        (Some(law_ext), axial, Some(within))
    } else {
        (None, false, None)
    };
    let space = cocycle_space(alg, axes, law)?;
    let theta_in_z = space.contains(theta);
    let split = is_split(alg, theta)?;
    Ok(ExtensionReport {
        extension,
        lifted_axes,
        condition1,
        induced_law,
        generates,
        axial,
        theta_in_z,
        law_within_original,
        split,
    })
}

/// Inverse of [`build_extension`] along the annihilator.
#[derive(Clone, Debug)]
pub struct AnnihilatorDecomposition {
    pub algebra: Algebra,
    pub cocycle: Cocycle,
    pub axes: Vec<Element>,
    /// Columns: the new basis (complement first, then `Ann`) in old coordinates.
    pub basis_change: Matrix,
    /// `build_extension(algebra, cocycle)` equals the input in the new basis.
    pub rebuilt_equal: bool,
}

pub fn decompose_by_annihilator(alg: &Algebra, axes: &[Element]) -> Result<AnnihilatorDecomposition> {
    let ann = alg.annihilator();
    if ann.is_zero() {
        return Err(Error::Precondition("the annihilator is zero".into()));
    }
    let total = alg.dim();
    let comp = ann.complement_coordinates();
    let (n, s) = (comp.len(), ann.dim());
    let mut cols: Vec<Vec<Scalar>> = comp.iter().map(|&c| Element::basis(total, c).into_coords()).collect();
    cols.extend(ann.basis().iter().cloned());
    let p = Matrix::from_cols(alg.field(), total, &cols)?;
    let q = p.inverse()?;
    let field = alg.field();
    let mut products = Vec::new();
    let mut grams = vec![Matrix::zeros(n, n, field); s];
    for (i, &ci) in comp.iter().enumerate() {
        for (j, &cj) in comp.iter().enumerate() {
            let new = q.mul_vec(&alg.basis_product(ci, cj));
            for (t, g) in grams.iter_mut().enumerate() {
                g[(i, j)] = new[n + t].clone();
            }
            if i <= j && new[..n].iter().any(|x| !x.is_zero()) {
                products.push((i, j, new[..n].to_vec()));
            }
        }
    }
    let labels: Vec<String> = comp.iter().map(|&c| alg.labels()[c].clone()).collect();
    let algebra = Algebra::from_products(labels, field, &products)?;
    let cocycle = Cocycle::new(n, field, grams.into_iter().map(BilinearForm::new).collect::<Result<_>>()?)?;
    let axes = axes
        .iter()
        .map(|y| {
            alg.check_element(y)?;
            Ok(Element::new(q.mul_vec(y)[..n].to_vec()))
        })
        .collect::<Result<Vec<_>>>()?;
    let rebuilt = build_extension(&algebra, &cocycle)?;
    let rebuilt_equal = alg.change_basis(&p, rebuilt.labels().to_vec())?.tensor() == rebuilt.tensor();
    Ok(AnnihilatorDecomposition { algebra, cocycle, axes, basis_change: p, rebuilt_equal })
}

/// `(φθ)(x, y) = θ(φx, φy)`.
pub fn aut_action(theta: &Cocycle, phi: &Matrix) -> Result<Cocycle> {
    check_dim(theta.dim(), phi.rows())?;
    if !phi.is_square() || phi.determinant().is_zero() {
        return Err(Error::Singular);
    }
    let pt = phi.transpose();
    let forms = theta
        .forms
        .iter()
        .map(|f| BilinearForm::new(pt.checked_mul(f.gram())?.checked_mul(phi)?))
        .collect::<Result<Vec<_>>>()?;
    Cocycle::new(theta.dim(), theta.field().join(phi.field()), forms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| s(x)).collect()
    }

    const Q: FieldTag = FieldTag::Rationals;

    fn alg(n: usize, products: &[(usize, usize, &[i64])]) -> Algebra {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        let ps: Vec<(usize, usize, Vec<Scalar>)> = products.iter().map(|(i, j, c)| (*i, *j, v(c))).collect();
        Algebra::from_products(labels, Q, &ps).unwrap()
    }

    fn algebra_b() -> Algebra {
        alg(2, &[(0, 0, &[1, 0]), (1, 1, &[0, 1]), (0, 1, &[-1, -1])])
    }

    fn law_b() -> FusionLaw {
        FusionLaw::with_unit_convention(vec![s(1), s(-1)], &[(s(-1), s(-1), vec![s(1)])]).unwrap()
    }

    fn theta12(n: usize) -> Cocycle {
        Cocycle::from_entries(n, Q, &[(0, 1, s(1))]).unwrap()
    }

    fn axes2() -> Vec<Element> {
        vec![Element::basis(2, 0), Element::basis(2, 1)]
    }

    #[test]
    fn coboundary_s2() {
        let s2 = alg(2, &[(0, 0, &[1, 0]), (1, 1, &[0, 1])]);
        let f = Matrix::from_rows(Q, 1, &[v(&[1]), v(&[0])]).unwrap();
        let d = coboundary(&s2, &f).unwrap();
        assert_eq!(d.forms()[0].gram().to_rows(), vec![v(&[1, 0]), v(&[0, 0])]);
        let zero = coboundary(&s2, &Matrix::zeros(2, 1, Q)).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn build_b_theta() {
        let bt = build_extension(&algebra_b(), &theta12(2)).unwrap();
        assert_eq!(bt.dim(), 3);
        assert_eq!(bt.basis_product(0, 1).coords(), &v(&[-1, -1, 1])[..]);
        assert!(bt.annihilator().contains(&v(&[0, 0, 1])).unwrap());
    }

    #[test]
    fn condition1_row_counts() {
        // D(5): e1e1 = e1, e1e2 = 5e2, e2e2 = e2; ker L_{e2} = span{e1 − 5e2}
        let d = alg(2, &[(0, 0, &[1, 0]), (0, 1, &[0, 5]), (1, 1, &[0, 1])]);
        assert_eq!(condition1_constraints(&d, &Element::basis(2, 1)).unwrap().rows(), 1);
        assert_eq!(condition1_constraints(&algebra_b(), &Element::basis(2, 0)).unwrap().rows(), 0);
    }

    #[test]
    fn b_theta_is_not_a_cocycle_but_extends_axially() {
        let b = algebra_b();
        let space = cocycle_space(&b, &axes2(), &law_b()).unwrap();
        assert!(!space.contains(&theta12(2)));
        let r = extension_axiality(&b, &theta12(2), &axes2(), &law_b()).unwrap();
        assert!(r.condition1.iter().all(|&c| c));
        assert!(r.axial && r.generates && !r.theta_in_z);
        assert_eq!(r.split, SplitVerdict::NonSplit);
        let law = r.induced_law.unwrap();
        assert_eq!(law.star(&s(-1), &s(-1)), v(&[0, 1]));
        assert_eq!(r.law_within_original, Some(false));
    }

    #[test]
    fn coboundaries_split() {
        let b = algebra_b();
        let f = Matrix::from_rows(Q, 1, &[v(&[2]), v(&[-3])]).unwrap();
        let d = coboundary(&b, &f).unwrap();
        assert!(matches!(is_split(&b, &d).unwrap(), SplitVerdict::Split { .. }));
        let t = theta12(2);
        let double = Cocycle::new(
            2,
            Q,
            vec![t.forms()[0].clone(), BilinearForm::new(t.forms()[0].gram().scale(&s(2))).unwrap()],
        )
        .unwrap();
        let SplitVerdict::Split { coeffs } = is_split(&b, &double).unwrap() else { panic!("expected split") };
        assert_eq!(coeffs[0], &coeffs[1] * &s(-2));
    }

    #[test]
    fn normalization_keeps_class() {
        let b = algebra_b();
        let t = Cocycle::from_entries(2, Q, &[(0, 0, s(5)), (0, 1, s(1))]).unwrap();
        let n = normalize_on_axes(&b, &t, &[Element::basis(2, 0)]).unwrap();
        assert!(n.forms()[0].gram()[(0, 0)].is_zero());
        let diff = t.checked_sub(&n).unwrap();
        assert!(coboundary_space(&b).contains(&diff.forms()[0].to_upper()).unwrap());
        assert_eq!(normalize_on_axes(&b, &n, &[Element::basis(2, 0)]).unwrap(), n);
        let dep = normalize_on_axes(&b, &t, &[Element::basis(2, 0), Element::basis(2, 0)]);
        assert!(matches!(dep, Err(Error::LinearlyDependent(_))));
    }

    #[test]
    fn decompose_round_trip() {
        let b = algebra_b();
        let bt = build_extension(&b, &theta12(2)).unwrap();
        let lifted = lift_axes(&b, &theta12(2), &axes2()).unwrap();
        let d = decompose_by_annihilator(&bt, &lifted).unwrap();
        assert!(d.rebuilt_equal);
        assert_eq!(d.algebra, b);
        assert_eq!(d.cocycle, theta12(2));
        assert_eq!(d.axes, axes2());
        assert!(decompose_by_annihilator(&b, &axes2()).is_err());
    }

    #[test]
    fn swap_fixes_symmetric_theta() {
        let swap = Matrix::from_rows(Q, 2, &[v(&[0, 1]), v(&[1, 0])]).unwrap();
        assert_eq!(aut_action(&theta12(2), &swap).unwrap(), theta12(2));
        assert_eq!(aut_action(&theta12(2), &Matrix::identity(2, Q)).unwrap(), theta12(2));
        assert_eq!(aut_action(&theta12(2), &Matrix::zeros(2, 2, Q)), Err(Error::Singular));
    }

    #[test]
    fn one_dim_idempotent_space() {
        let a = alg(1, &[(0, 0, &[1])]);
        let law = FusionLaw::with_unit_convention(vec![s(1)], &[]).unwrap();
        let sp = cocycle_space(&a, &[Element::basis(1, 0)], &law).unwrap();
        assert_eq!((sp.z.dim(), sp.b.dim(), sp.quotient_dim), (1, 1, 0));
    }
}
