//! Simple Jordan algebras of types A to D, built from matrix conventions.

use super::{q, CatalogEntry, Params};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldTag, Scalar};
use crate::fusion::FusionLaw;
use crate::linalg::{Matrix, Solution};

/// Square matrix of side `m`, row-major.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Sq {
    pub m: usize,
    pub data: Vec<Scalar>,
}

impl Sq {
    pub fn zero(m: usize) -> Self {
        Sq { m, data: vec![Scalar::zero(); m * m] }
    }

    /// `Σ c·E_ij` over the given (0-based) entries.
    pub fn units(m: usize, terms: &[(usize, usize, Scalar)]) -> Self {
        let mut s = Sq::zero(m);
        for (i, j, c) in terms {
            s.data[i * m + j] += c;
        }
        s
    }

    pub fn mul(&self, other: &Sq) -> Sq {
        let m = self.m;
        let mut out = Sq::zero(m);
        for i in 0..m {
            for k in 0..m {
                let a = &self.data[i * m + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let b = &other.data[k * m + j];
                    if !b.is_zero() {
                        out.data[i * m + j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    #[cfg(test)]
    pub fn transpose(&self) -> Sq {
        let m = self.m;
        let mut out = Sq::zero(m);
        for i in 0..m {
            for j in 0..m {
                out.data[j * m + i] = self.data[i * m + j].clone();
            }
        }
        out
    }

    /// `(XY + YX)/2`.
    pub fn jordan(&self, other: &Sq) -> Sq {
        let a = self.mul(other);
        let b = other.mul(self);
        let half = q(1, 2);
        Sq { m: self.m, data: a.data.iter().zip(&b.data).map(|(x, y)| &(x + y) * &half).collect() }
    }
}

/// Algebra on the span of `basis` with the symmetrised matrix product.
pub(crate) fn matrix_jordan(labels: Vec<String>, basis: &[Sq]) -> Result<Algebra> {
    let d = basis.len();
    let m = basis[0].m;
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| b.data.clone()).collect();
    let frame = Matrix::from_cols(FieldTag::Rationals, m * m, &cols)?;
    let mut pairs = Vec::new();
    let mut rhs = Vec::new();
    for i in 0..d {
        for j in i..d {
            pairs.push((i, j));
            rhs.push(basis[i].jordan(&basis[j]).data);
        }
    }
    let rhs = Matrix::from_cols(FieldTag::Rationals, m * m, &rhs)?;
    let coords = match frame.solve(&rhs)? {
        Solution::Consistent { particular, kernel } if kernel.dim() == 0 => particular,
        Solution::Consistent { .. } => return Err(Error::LinearlyDependent("matrix basis".into())),
        Solution::Inconsistent { .. } => {
            return Err(Error::Precondition("span of the matrix basis is not closed under the product".into()))
        }
    };
    let products: Vec<_> = pairs.iter().enumerate().map(|(c, &(i, j))| (i, j, coords.col(c))).collect();
    Algebra::from_products(labels, FieldTag::Rationals, &products)
}

/// Coordinates of `x` in `basis` (which must contain it in its span).
fn coordinates(basis: &[Sq], x: &Sq) -> Result<Element> {
    let m = x.m;
    let cols: Vec<Vec<Scalar>> = basis.iter().map(|b| b.data.clone()).collect();
    let frame = Matrix::from_cols(FieldTag::Rationals, m * m, &cols)?;
    let rhs = Matrix::from_cols(FieldTag::Rationals, m * m, std::slice::from_ref(&x.data))?;
    match frame.solve(&rhs)? {
        Solution::Consistent { particular, .. } => Ok(Element::new(particular.col(0))),
        Solution::Inconsistent { .. } => Err(Error::Internal("idempotent outside the matrix span".into())),
    }
}

fn finish(name: &str, params: &Params, alg: Algebra, axes: Vec<Element>) -> CatalogEntry {
    let mut e = CatalogEntry::new(name, params, alg);
    e.push_law("J12", FusionLaw::jordan(&q(1, 2)).expect("distinct values"));
    e.push_set("standard", axes, "J12");
    e
}

fn one() -> Scalar {
    Scalar::one()
}

/// All n×n matrices; idempotents `E_ii` and `E_ii + E_ij`.
pub(super) fn type_a(params: &Params) -> Result<CatalogEntry> {
    let n = params.int("n");
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            basis.push(Sq::units(n, &[(i, j, one())]));
            labels.push(format!("E{}{}", i + 1, j + 1));
        }
    }
    let alg = matrix_jordan(labels, &basis)?;
    let mut axes = Vec::new();
    for i in 0..n {
        axes.push(coordinates(&basis, &Sq::units(n, &[(i, i, one())]))?);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                axes.push(coordinates(&basis, &Sq::units(n, &[(i, i, one()), (i, j, one())]))?);
            }
        }
    }
    Ok(finish("JordanA", params, alg, axes))
}

/// Symmetric n×n matrices; idempotents `E_ii` and `(E_ii + E_jj + E_ij + E_ji)/2`.
pub(super) fn type_b(params: &Params) -> Result<CatalogEntry> {
    let n = params.int("n");
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        basis.push(Sq::units(n, &[(i, i, one())]));
        labels.push(format!("E{}{}", i + 1, i + 1));
    }
    for i in 0..n {
        for j in i + 1..n {
            basis.push(Sq::units(n, &[(i, j, one()), (j, i, one())]));
            labels.push(format!("S{}{}", i + 1, j + 1));
        }
    }
    let alg = matrix_jordan(labels, &basis)?;
    let mut axes = Vec::new();
    for i in 0..n {
        axes.push(coordinates(&basis, &Sq::units(n, &[(i, i, one())]))?);
    }
    let h = q(1, 2);
    for i in 0..n {
        for j in i + 1..n {
            let x = Sq::units(n, &[(i, i, h.clone()), (j, j, h.clone()), (i, j, h.clone()), (j, i, h.clone())]);
            axes.push(coordinates(&basis, &x)?);
        }
    }
    Ok(finish("JordanB", params, alg, axes))
}

/// Basis of the 2n×2n matrices `[[A, B], [C, Aᵀ]]` with `B`, `C` skew.
pub(crate) fn type_c_basis(n: usize) -> (Vec<String>, Vec<Sq>) {
    let m = 2 * n;
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            basis.push(Sq::units(m, &[(i, j, one()), (n + j, n + i, one())]));
            labels.push(format!("P{}{}", i + 1, j + 1));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            basis.push(Sq::units(m, &[(i, n + j, one()), (j, n + i, -one())]));
            labels.push(format!("Q{}{}", i + 1, j + 1));
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            basis.push(Sq::units(m, &[(n + i, j, one()), (n + j, i, -one())]));
            labels.push(format!("R{}{}", i + 1, j + 1));
        }
    }
    (labels, basis)
}

/// Idempotents `a_i = E_ii + E_(n+i)(n+i)` and
/// `a_ij = a_i + E_ij + E_(n+j)(n+i) + E_i(n+j) − E_j(n+i)` for `i ≠ j`.
pub(super) fn type_c(params: &Params) -> Result<CatalogEntry> {
    let n = params.int("n");
    let m = 2 * n;
    let (labels, basis) = type_c_basis(n);
    let alg = matrix_jordan(labels, &basis)?;
    let mut axes = Vec::new();
    for i in 0..n {
        axes.push(coordinates(&basis, &Sq::units(m, &[(i, i, one()), (n + i, n + i, one())]))?);
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let x = Sq::units(
                m,
                &[
                    (i, i, one()),
                    (n + i, n + i, one()),
                    (i, j, one()),
                    (n + j, n + i, one()),
                    (i, n + j, one()),
                    (j, n + i, -one()),
                ],
            );
            axes.push(coordinates(&basis, &x)?);
        }
    }
    // the printed family spans a proper subalgebra; add the transposed variants
    // a_i + E_ij + E_(n+j)(n+i) + E_(n+i)j − E_(n+j)i and, for i < j, the
    // idempotent a_i plus both off-diagonal and both skew basis elements
    let mut generating = axes.clone();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let x = Sq::units(
                    m,
                    &[
                        (i, i, one()),
                        (n + i, n + i, one()),
                        (i, j, one()),
                        (n + j, n + i, one()),
                        (n + i, j, one()),
                        (n + j, i, -one()),
                    ],
                );
                generating.push(coordinates(&basis, &x)?);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let x = Sq::units(
                m,
                &[
                    (i, i, one()),
                    (n + i, n + i, one()),
                    (i, j, one()),
                    (n + j, n + i, one()),
                    (j, i, one()),
                    (n + i, n + j, one()),
                    (i, n + j, one()),
                    (j, n + i, -one()),
                    (n + i, j, one()),
                    (n + j, i, -one()),
                ],
            );
            generating.push(coordinates(&basis, &x)?);
        }
    }
    let mut e = finish("JordanC", params, alg, axes);
    e.push_set("generating", generating, "J12");
    e.push_fact("generates:standard", "no");
    Ok(e)
}

/// `Q(i)^n` with `xy = x_n y + y_n x − (xᵀy) e_n`; idempotents `(I e_i + e_n)/2` for `i < n`.
pub(super) fn type_d(params: &Params) -> Result<CatalogEntry> {
    let n = params.int("n");
    if n < 3 {
        return Err(Error::InvalidParameter(format!("JordanD needs n >= 3, got {n}")));
    }
    let last = n - 1;
    let unit = |k: usize| {
        let mut v = vec![Scalar::zero(); n];
        v[k] = one();
        v
    };
    let mut products = Vec::new();
    for i in 0..last {
        products.push((i, i, unit(last).into_iter().map(|x| -x).collect()));
        products.push((i, last, unit(i)));
    }
    products.push((last, last, unit(last)));
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let alg = Algebra::from_products(labels, FieldTag::GaussianRationals, &products)?;
    let h = q(1, 2);
    let axes = (0..last)
        .map(|i| {
            let mut v = vec![Scalar::zero(); n];
            v[i] = &Scalar::i() * &h;
            v[last] = h.clone();
            Element::new(v)
        })
        .collect();
    Ok(finish("JordanD", params, alg, axes))
}
