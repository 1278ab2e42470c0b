//! Commutative algebras given by structure constants.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Deref, Sub};

use crate::error::{check_dim, Error, Result};
use crate::field::{FieldTag, Scalar};
use crate::linalg::{Matrix, RowReducer, Subspace};

/// Coordinate vector of an algebra element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<Scalar>);

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Element(coords)
    }

    pub fn zero(n: usize) -> Self {
        Element(vec![Scalar::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        Element(v)
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Element(xs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element(self.0.iter().map(|x| x * c).collect())
    }

    /// Extends with `extra` trailing zero coordinates.
    pub fn pad(&self, extra: usize) -> Element {
        let mut v = self.0.clone();
        v.extend(std::iter::repeat_with(Scalar::zero).take(extra));
        Element(v)
    }
}

impl Deref for Element {
    type Target = [Scalar];
    fn deref(&self) -> &[Scalar] {
        &self.0
    }
}

impl Add<&Element> for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.len(), rhs.len(), "element length mismatch");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Element> for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.len(), rhs.len(), "element length mismatch");
        Element(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(" "))
    }
}

/// Symmetric bilinear form given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(BilinearForm { gram })
    }

    /// Form with upper-triangle entries `v` in row-major order.
    pub fn from_upper(n: usize, field: FieldTag, v: &[Scalar]) -> Result<Self> {
        check_dim(sym_len(n), v.len())?;
        let mut g = Matrix::zeros(n, n, field);
        for i in 0..n {
            for j in i..n {
                let x = v[sym_index(n, i, j)].clone();
                g[(i, j)] = x.clone();
                g[(j, i)] = x;
            }
        }
        Ok(BilinearForm { gram: g.with_field(field)? })
    }

    pub fn to_upper(&self) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = Vec::with_capacity(sym_len(n));
        for i in 0..n {
            for j in i..n {
                out.push(self.gram[(i, j)].clone());
            }
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::linalg::dot(x, &self.gram.mul_vec(y))
    }

    /// Kernel of the Gram matrix.
    pub fn radical(&self) -> Subspace {
        self.gram.kernel()
    }
}

/// Number of upper-triangle entries of an `n×n` symmetric matrix.
pub fn sym_len(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of entry `(i, j)` among the row-major upper-triangle unknowns.
pub fn sym_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * (2 * n - i + 1) / 2 + j - i
}

/// Result of [`Algebra::subalgebra_closure`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Closure {
    pub span: Subspace,
    /// Smallest `m` such that words of length at most `m` span the closure.
    pub max_word_length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JordanVerdict {
    Holds,
    /// Basis indices `(x1, x2, x3, y)` where the linearised identity fails.
    Counterexample {
        indices: [usize; 4],
        defect: Element,
    },
}

impl JordanVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, JordanVerdict::Holds)
    }
}

/// Finite-dimensional commutative algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Algebra {
    labels: Vec<String>,
    field: FieldTag,
    /// `c[i][j][k]` at `(i·n + j)·n + k`.
    tensor: Vec<Scalar>,
    /// Nonzero `(k, c[i][j][k])` per pair `i·n + j`.
    sparse: Vec<Vec<(usize, Scalar)>>,
}

impl Algebra {
    pub fn new(labels: Vec<String>, field: FieldTag, tensor: Vec<Scalar>) -> Result<Self> {
        let n = labels.len();
        check_dim(n * n * n, tensor.len())?;
        if let Some(x) = tensor.iter().find(|x| !field.contains(x)) {
            return Err(Error::FieldMismatch(format!("structure constant {x} outside {}", field.name())));
        }
        for i in 0..n {
            for j in 0..i {
                for k in 0..n {
                    if tensor[(i * n + j) * n + k] != tensor[(j * n + i) * n + k] {
                        return Err(Error::NotSymmetric);
                    }
                }
            }
        }
        let sparse = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter_map(|k| {
                        let c = &tensor[ij * n + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect();
        Ok(Algebra { labels, field, tensor, sparse })
    }

    /// Builds from products `b_i·b_j` (any order); unlisted products are zero.
    pub fn from_products(
        labels: Vec<String>,
        field: FieldTag,
        products: &[(usize, usize, Vec<Scalar>)],
    ) -> Result<Self> {
        let n = labels.len();
        let mut tensor = vec![Scalar::zero(); n * n * n];
        let mut seen = HashSet::new();
        for (i, j, v) in products {
            let (i, j) = (*i.min(j), *i.max(j));
            if i >= n || j >= n {
                return Err(Error::Precondition(format!("product index ({i},{j}) out of range")));
            }
            check_dim(n, v.len())?;
            if !seen.insert((i, j)) {
                return Err(Error::Precondition(format!("product {}·{} given twice", labels[i], labels[j])));
            }
            for (k, c) in v.iter().enumerate() {
                tensor[(i * n + j) * n + k] = c.clone();
                tensor[(j * n + i) * n + k] = c.clone();
            }
        }
        Algebra::new(labels, field, tensor)
    }

    pub fn zero_algebra(n: usize, field: FieldTag) -> Self {
        let labels = (1..=n).map(|i| format!("z{i}")).collect();
        Algebra::new(labels, field, vec![Scalar::zero(); n * n * n]).expect("zero tensor")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.tensor[(i * n + j) * n + k]
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.tensor
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim(), i)
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let mut v = Element::zero(self.dim());
        for (k, c) in &self.sparse[i * self.dim() + j] {
            v.0[*k] = c.clone();
        }
        v
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Element from `(label, coefficient)` pairs.
    pub fn element(&self, terms: &[(&str, Scalar)]) -> Result<Element> {
        let mut v = Element::zero(self.dim());
        for (l, c) in terms {
            let i = self.index_of(l).ok_or_else(|| Error::Precondition(format!("unknown basis label `{l}`")))?;
            v.0[i] += c;
        }
        Ok(v)
    }

    pub fn check_element(&self, x: &[Scalar]) -> Result<()> {
        check_dim(self.dim(), x.len())?;
        if let Some(c) = x.iter().find(|c| !self.field.contains(c)) {
            return Err(Error::FieldMismatch(format!("coefficient {c} outside {}", self.field.name())));
        }
        Ok(())
    }

    /// Product; panics on a length mismatch (see [`Algebra::product`]).
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Element {
        let n = self.dim();
        assert!(x.len() == n && y.len() == n, "element length mismatch");
        let xs: Vec<(usize, &Scalar)> = x.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let ys: Vec<(usize, &Scalar)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        let mut out = vec![Scalar::zero(); n];
        for &(i, a) in &xs {
            for &(j, b) in &ys {
                let entries = &self.sparse[i * n + j];
                if entries.is_empty() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in entries {
                    out[*k] += &(&ab * c);
                }
            }
        }
        Element(out)
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Result<Element> {
        self.check_element(x)?;
        self.check_element(y)?;
        Ok(self.mul(x, y))
    }

    /// Matrix of `y ↦ x·y`; column `k` is `x·b_k`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Result<Matrix> {
        self.check_element(x)?;
        let n = self.dim();
        let mut m = Matrix::zeros(n, n, self.field);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for k in 0..n {
                for (r, c) in &self.sparse[i * n + k] {
                    m[(*r, k)] += &(a * c);
                }
            }
        }
        Ok(m)
    }

    pub fn annihilator(&self) -> Subspace {
        let n = self.dim();
        let parts: Vec<Matrix> =
            (0..n).map(|k| self.left_mult_matrix(&self.basis_element(k)).expect("basis element")).collect();
        Matrix::vstack(self.field, n, &parts).expect("square blocks").kernel()
    }

    fn span(&self, vs: Vec<Vec<Scalar>>) -> Subspace {
        Subspace::from_vectors(self.dim(), self.field, vs).expect("vectors of algebra length")
    }

    /// Span of all products `u·v` with `u ∈ us`, `v ∈ vs`.
    fn products_span(&self, us: &[Vec<Scalar>], vs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
        let mut out = Vec::new();
        for u in us {
            for v in vs {
                let p = self.mul(u, v);
                if !p.is_zero() {
                    out.push(p.0);
                }
            }
        }
        out
    }

    /// Smallest product-closed subspace containing `gens`, with its word-length bound.
    pub fn subalgebra_closure(&self, gens: &[Element]) -> Result<Closure> {
        if gens.is_empty() {
            return Err(Error::Precondition("empty generating set".into()));
        }
        for g in gens {
            self.check_element(g)?;
        }
        let start = self.span(gens.iter().map(|g| g.0.clone()).collect());
        let mut closure = start.clone();
        loop {
            let b = closure.basis().to_vec();
            let next = closure.sum(&self.span(self.products_span(&b, &b)))?;
            if next.dim() == closure.dim() {
                break;
            }
            closure = next;
        }
        // words of length exactly m, level by level
        let mut levels: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(), start.basis().to_vec()];
        let mut acc = start;
        let mut m = 1;
        while acc.dim() < closure.dim() {
            m += 1;
            let mut words = Vec::new();
            for p in 1..=m / 2 {
                words.extend(self.products_span(&levels[p], &levels[m - p]));
            }
            let level = self.span(words);
            acc = acc.sum(&level)?;
            levels.push(level.basis().to_vec());
        }
        Ok(Closure { span: closure, max_word_length: m })
    }

    /// Smallest ideal containing `gens`.
    pub fn ideal_closure(&self, gens: &[Element]) -> Result<Subspace> {
        for g in gens {
            self.check_element(g)?;
        }
        let n = self.dim();
        let all: Vec<Vec<Scalar>> = (0..n).map(|k| self.basis_element(k).0).collect();
        let mut ideal = self.span(gens.iter().map(|g| g.0.clone()).collect());
        loop {
            let next = ideal.sum(&self.span(self.products_span(ideal.basis(), &all)))?;
            if next.dim() == ideal.dim() {
                return Ok(ideal);
            }
            ideal = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        s.basis().iter().all(|v| (0..n).all(|k| s.contains(&self.mul(v, &self.basis_element(k))).unwrap_or(false)))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|u| s.basis().iter().all(|v| s.contains(&self.mul(u, v)).unwrap_or(false)))
    }

    /// Basis of the symmetric forms with `(x, yz) = (xy, z)`.
    pub fn frobenius_space(&self) -> Vec<BilinearForm> {
        let n = self.dim();
        let mut red = RowReducer::new(sym_len(n), self.field);
        for i in 0..n {
            for j in 0..n {
                for k in j..n {
                    // (b_i, b_j b_k) − (b_i b_j, b_k)
                    let mut row = vec![Scalar::zero(); sym_len(n)];
                    for (l, c) in &self.sparse[j * n + k] {
                        row[sym_index(n, i, *l)] += c;
                    }
                    for (l, c) in &self.sparse[i * n + j] {
                        row[sym_index(n, *l, k)] -= c;
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        red.push(row).expect("row width");
                    }
                }
            }
        }
        red.kernel().basis().iter().map(|v| BilinearForm::from_upper(n, self.field, v).expect("upper vector")).collect()
    }

    /// Radical of `(A, X)` via a Frobenius form that is nonzero on every axis.
    pub fn radical_axial(&self, axes: &[Element]) -> Result<(Subspace, BilinearForm)> {
        for a in axes {
            self.check_element(a)?;
        }
        let forms = self.frobenius_space();
        let values: Vec<Vec<Scalar>> = forms.iter().map(|f| axes.iter().map(|a| f.eval(a, a)).collect()).collect();
        for (ai, a) in axes.iter().enumerate() {
            if values.iter().all(|vals| vals[ai].is_zero()) {
                return Err(Error::RadicalUnavailable(format!("every Frobenius form is isotropic on axis {a:?}")));
            }
        }
        // points on the moment curve avoid the finitely many bad hyperplanes
        let tries = forms.len() * axes.len().max(1) + 2;
        let mut chosen = None;
        for t in 1..=tries as i64 {
            let t = Scalar::from_int(t);
            let coeffs: Vec<Scalar> = (0..forms.len() as u32).map(|k| t.pow(k)).collect();
            let ok = (0..axes.len()).all(|ai| {
                let s: Scalar = values.iter().zip(&coeffs).map(|(vals, c)| &vals[ai] * c).sum();
                !s.is_zero()
            });
            if ok {
                chosen = Some(coeffs);
                break;
            }
        }
        let coeffs = chosen.ok_or_else(|| Error::RadicalUnavailable("no axis-nonisotropic combination".into()))?;
        let n = self.dim();
        let mut gram = Matrix::zeros(n, n, self.field);
        for (f, c) in forms.iter().zip(&coeffs) {
            gram = gram.checked_add(&f.gram().scale(c))?;
        }
        if let Some(a) = axes.first() {
            let norm = BilinearForm { gram: gram.clone() }.eval(a, a);
            gram = gram.scale(&norm.inv()?);
        }
        let form = BilinearForm::new(gram)?;
        let radical = form.radical();
        if !self.is_ideal(&radical) {
            return Err(Error::Internal("form radical is not an ideal".into()));
        }
        if let Some(a) = axes.iter().find(|a| radical.contains(a).unwrap_or(true)) {
            return Err(Error::Internal(format!("form radical contains axis {a:?}")));
        }
        Ok((radical, form))
    }

    /// Full linearisation of `(xy)x² = x(yx²)` on all basis quadruples.
    pub fn jordan_check(&self) -> JordanVerdict {
        let n = self.dim();
        let prods: Vec<Element> = (0..n * n).map(|ij| self.basis_product(ij / n, ij % n)).collect();
        let p = |i: usize, j: usize| &prods[i * n + j];
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    for l in 0..n {
                        let mut defect = Element::zero(n);
                        for (a, b, c) in [(i, j, k), (j, i, k), (k, i, j)] {
                            let xbc = p(b, c);
                            let left = self.mul(p(a, l), xbc);
                            let inner = self.mul(&self.basis_element(l), xbc);
                            let right = self.mul(&self.basis_element(a), &inner);
                            defect = &(&defect + &left) - &right;
                        }
                        if !defect.is_zero() {
                            return JordanVerdict::Counterexample { indices: [i, j, k, l], defect };
                        }
                    }
                }
            }
        }
        JordanVerdict::Holds
    }

    /// Block sum; clashing labels of `other` get a trailing `'`.
    pub fn direct_sum(&self, other: &Algebra) -> Result<Algebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch("direct sum of algebras over different fields".into()));
        }
        let (n, m) = (self.dim(), other.dim());
        let mut labels = self.labels.clone();
        for l in &other.labels {
            let mut l = l.clone();
            while labels.contains(&l) {
                l.push('\'');
            }
            labels.push(l);
        }
        let t = n + m;
        let mut tensor = vec![Scalar::zero(); t * t * t];
        for i in 0..n {
            for j in 0..n {
                for (k, c) in &self.sparse[i * n + j] {
                    tensor[(i * t + j) * t + k] = c.clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for (k, c) in &other.sparse[i * m + j] {
                    tensor[((n + i) * t + n + j) * t + n + k] = c.clone();
                }
            }
        }
        Algebra::new(labels, self.field, tensor)
    }

    /// Same algebra in the basis given by the columns of `basis`.
    pub fn change_basis(&self, basis: &Matrix, labels: Vec<String>) -> Result<Algebra> {
        let n = self.dim();
        check_dim(n, basis.rows())?;
        check_dim(n, basis.cols())?;
        check_dim(n, labels.len())?;
        let inv = basis.inverse()?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| basis.col(j)).collect();
        let mut tensor = vec![Scalar::zero(); n * n * n];
        for i in 0..n {
            for j in i..n {
                let coords = inv.mul_vec(&self.mul(&cols[i], &cols[j]));
                for (k, c) in coords.into_iter().enumerate() {
                    tensor[(i * n + j) * n + k] = c.clone();
                    tensor[(j * n + i) * n + k] = c;
                }
            }
        }
        Algebra::new(labels, self.field.join(basis.field()), tensor)
    }

    /// Whether `m` (acting on columns) is multiplicative on all basis pairs.
    pub fn is_endomorphism(&self, m: &Matrix) -> bool {
        let n = self.dim();
        if m.rows() != n || m.cols() != n {
            return false;
        }
        let images: Vec<Vec<Scalar>> = (0..n).map(|j| m.col(j)).collect();
        (0..n).all(|i| (i..n).all(|j| m.mul_vec(&self.basis_product(i, j)) == self.mul(&images[i], &images[j]).0))
    }

    pub fn is_idempotent(&self, x: &[Scalar]) -> bool {
        self.mul(x, x).0 == x
    }

    /// Human-readable linear combination of basis labels.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        let terms: Vec<String> = x
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}*{l}") })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Algebra over {} with basis {:?}", self.field.name(), self.labels)?;
        let n = self.dim();
        for i in 0..n {
            for j in i..n {
                let p = self.basis_product(i, j);
                if !p.is_zero() {
                    writeln!(f, "  {}·{} = {}", self.labels[i], self.labels[j], self.format_element(&p))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldTag = FieldTag::Rationals;

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    /// Algebra B: e1e1 = e1, e2e2 = e2, e1e2 = −e1 − e2.
    fn alg_b() -> Algebra {
        Algebra::from_products(
            labels(&["e1", "e2"]),
            Q,
            &[(0, 0, v(&[1, 0])), (1, 1, v(&[0, 1])), (0, 1, v(&[-1, -1]))],
        )
        .unwrap()
    }

    fn alg_i() -> Algebra {
        let h = Scalar::frac(1, 2);
        Algebra::from_products(
            labels(&["e1", "e2"]),
            Q,
            &[(0, 0, v(&[1, 0])), (1, 1, v(&[0, 1])), (0, 1, vec![h.clone(), h])],
        )
        .unwrap()
    }

    #[test]
    fn sym_index_is_row_major_upper() {
        let n = 4;
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                assert_eq!(sym_index(n, i, j), k);
                assert_eq!(sym_index(n, j, i), k);
                k += 1;
            }
        }
        assert_eq!(k, sym_len(n));
    }

    #[test]
    fn products_and_operators() {
        let b = alg_b();
        assert_eq!(b.mul(&v(&[1, 0]), &v(&[0, 1])), Element::from_ints(&[-1, -1]));
        assert!(b.mul(&v(&[0, 0]), &v(&[3, 1])).is_zero());
        let l = b.left_mult_matrix(&v(&[1, 0])).unwrap();
        assert_eq!(l.col(0), v(&[1, 0]));
        assert_eq!(l.col(1), v(&[-1, -1]));
        assert!(b.left_mult_matrix(&v(&[0, 0])).unwrap().is_zero());
        assert!(b.annihilator().is_zero());
        assert!(Algebra::zero_algebra(1, Q).annihilator().is_full());
        assert!(b.product(&v(&[1]), &v(&[1, 0])).is_err());
    }

    #[test]
    fn closures() {
        let b = alg_b();
        let c = b.subalgebra_closure(&[Element::from_ints(&[1, 0]), Element::from_ints(&[0, 1])]).unwrap();
        assert!(c.span.is_full());
        assert!(c.max_word_length <= 2);
        let z = b.subalgebra_closure(&[Element::from_ints(&[0, 0])]).unwrap();
        assert!(z.span.is_zero());
        assert!(b.subalgebra_closure(&[Element::from_ints(&[1, 0])]).unwrap().span.dim() == 1);
        let i = alg_i();
        let r = i.ideal_closure(&[Element::from_ints(&[1, -1])]).unwrap();
        assert_eq!(r.dim(), 1);
        assert!(i.is_ideal(&r));
        assert!(i.ideal_closure(&[Element::zero(2)]).unwrap().is_zero());
    }

    #[test]
    fn frobenius_and_radical() {
        let b = alg_b();
        let forms = b.frobenius_space();
        let span = Subspace::from_vectors(3, Q, forms.iter().map(|f| f.to_upper()).collect()).unwrap();
        assert!(span.contains(&v(&[-2, 1, -2])).unwrap());
        let i = alg_i();
        let forms = i.frobenius_space();
        let span = Subspace::from_vectors(3, Q, forms.iter().map(|f| f.to_upper()).collect()).unwrap();
        assert!(span.contains(&v(&[1, 1, 1])).unwrap());
        let ones = BilinearForm::from_upper(2, Q, &v(&[1, 1, 1])).unwrap();
        assert_eq!(ones.radical(), Subspace::from_vectors(2, Q, vec![v(&[1, -1])]).unwrap());
        assert!(BilinearForm::new(Matrix::identity(2, Q)).unwrap().radical().is_zero());
        let a1 = Element::from_ints(&[1, 0]);
        let a2 = Element::from_ints(&[2, -1]);
        let (rad, _) = i.radical_axial(&[a1, a2]).unwrap();
        assert_eq!(rad, Subspace::from_vectors(2, Q, vec![v(&[1, -1])]).unwrap());
        let (rad_b, _) = b.radical_axial(&[Element::from_ints(&[1, 0]), Element::from_ints(&[0, 1])]).unwrap();
        assert!(rad_b.is_zero());
    }

    #[test]
    fn radical_refuses_isotropic_axes() {
        // zero algebra: every form is Frobenius, but (a, a) can be made nonzero;
        // a nilpotent algebra with n·n = m has (n, n) = (n·n, ...) constraints
        let nil = Algebra::from_products(labels(&["n", "m"]), Q, &[(0, 0, v(&[0, 1]))]).unwrap();
        // (m, m) = (n·n, m) = (n, n·m) = 0, so m is isotropic for every form
        assert!(matches!(nil.radical_axial(&[Element::from_ints(&[0, 1])]), Err(Error::RadicalUnavailable(_))));
    }

    #[test]
    fn jordan_examples() {
        let one = Algebra::from_products(labels(&["e"]), Q, &[(0, 0, v(&[1]))]).unwrap();
        assert!(one.jordan_check().holds());
        assert!(alg_i().jordan_check().holds());
        // H(3): e1e2 = 3/2 e1 + 1/6 e2
        let h = Algebra::from_products(
            labels(&["e1", "e2"]),
            Q,
            &[(0, 0, v(&[1, 0])), (1, 1, v(&[0, 1])), (0, 1, vec![Scalar::frac(3, 2), Scalar::frac(1, 6)])],
        )
        .unwrap();
        assert!(!h.jordan_check().holds());
    }

    #[test]
    fn direct_sums() {
        let f = Algebra::from_products(labels(&["e"]), Q, &[(0, 0, v(&[1]))]).unwrap();
        let s2 = f.direct_sum(&f).unwrap();
        assert_eq!(s2.labels(), &["e".to_string(), "e'".to_string()]);
        assert!(s2.basis_product(0, 1).is_zero());
        let empty = Algebra::zero_algebra(0, Q);
        assert_eq!(f.direct_sum(&empty).unwrap().tensor(), f.tensor());
        let g = Algebra::zero_algebra(1, FieldTag::GaussianRationals);
        assert!(f.direct_sum(&g).is_err());
    }

    #[test]
    fn asymmetric_tensor_rejected() {
        let mut t = vec![Scalar::zero(); 8];
        // e0 e1 = e0 while e1 e0 = 0
        t[2] = Scalar::one();
        assert!(matches!(Algebra::new(labels(&["a", "b"]), Q, t), Err(Error::NotSymmetric)));
    }

    #[test]
    fn change_basis_roundtrip() {
        let b = alg_b();
        let p = Matrix::from_cols(Q, 2, &[v(&[0, 1]), v(&[1, 0])]).unwrap();
        let swapped = b.change_basis(&p, labels(&["e2", "e1"])).unwrap();
        assert_eq!(swapped.tensor(), b.tensor());
        assert!(b.is_endomorphism(&p));
    }

    proptest! {
        #[test]
        fn commutative_products(xs in proptest::collection::vec(-5i64..5, 4)) {
            let b = alg_b();
            let (x, y) = (v(&xs[..2]), v(&xs[2..]));
            prop_assert_eq!(b.mul(&x, &y), b.mul(&y, &x));
        }

        #[test]
        fn annihilator_in_every_frobenius_radical(c in prop_oneof![-3i64..0, 1i64..4]) {
            // a perfect extension of B (A² = A) with annihilator span{e3}
            let mut prods = vec![(0, 0, v(&[1, 0, 0])), (1, 1, v(&[0, 1, 0])), (0, 1, v(&[-1, -1, c]))];
            prods.push((2, 2, v(&[0, 0, 0])));
            let a = Algebra::from_products(labels(&["e1", "e2", "e3"]), Q, &prods).unwrap();
            let ann = a.annihilator();
            for f in a.frobenius_space() {
                prop_assert!(ann.is_subspace_of(&f.radical()).unwrap());
            }
        }
    }
}
