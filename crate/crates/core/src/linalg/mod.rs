//! Dense exact linear algebra.

mod echelon;
mod subspace;

pub use echelon::RowReducer;
pub use subspace::Subspace;

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{check_dim, Error, Result};
use crate::field::{FieldTag, Scalar};

/// Row-major matrix of scalars over one field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldTag,
    data: Vec<Scalar>,
}

/// Outcome of [`Matrix::solve`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    /// `particular` has one column per right-hand side.
    Consistent { particular: Matrix, kernel: Subspace },
    /// `witness · m = 0` while `witness · rhs ≠ 0`.
    Inconsistent { witness: Vec<Scalar> },
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: FieldTag, data: Vec<Scalar>) -> Result<Self> {
        check_dim(rows * cols, data.len())?;
        if let Some(x) = data.iter().find(|x| !field.contains(x)) {
            return Err(Error::FieldMismatch(format!("entry {x} outside {}", field.name())));
        }
        Ok(Matrix { rows, cols, field, data })
    }

    pub fn zeros(rows: usize, cols: usize, field: FieldTag) -> Self {
        Matrix { rows, cols, field, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: FieldTag) -> Self {
        let mut m = Matrix::zeros(n, n, field);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn from_rows(field: FieldTag, cols: usize, rows: &[Vec<Scalar>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            check_dim(cols, r.len())?;
            data.extend(r.iter().cloned());
        }
        Matrix::new(rows.len(), cols, field, data)
    }

    pub fn from_cols(field: FieldTag, rows: usize, cols: &[Vec<Scalar>]) -> Result<Self> {
        Ok(Matrix::from_rows(field, rows, cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    /// Re-tags the matrix; fails when an entry lies outside the new field.
    pub fn with_field(self, field: FieldTag) -> Result<Self> {
        Matrix::new(self.rows, self.cols, field, self.data)
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, field: self.field, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    fn same_field(&self, other: &Matrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!(
                "{} matrix combined with {} matrix",
                self.field.name(),
                other.field.name()
            )))
        }
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.cols, other.rows)?;
        self.same_field(other)?;
        let mut out = Matrix::zeros(self.rows, other.cols, self.field);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn checked_add(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        self.same_field(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, data })
    }

    pub fn checked_sub(&self, other: &Matrix) -> Result<Matrix> {
        check_dim(self.rows, other.rows)?;
        check_dim(self.cols, other.cols)?;
        self.same_field(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, field: self.field, data })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let field = self.field.join(FieldTag::of([c]));
        Matrix { rows: self.rows, cols: self.cols, field, data: self.data.iter().map(|x| x * c).collect() }
    }

    /// `self − λ·Id`.
    pub fn shift(&self, lambda: &Scalar) -> Matrix {
        assert!(self.is_square());
        let mut m = self.clone();
        for i in 0..self.rows {
            m[(i, i)] = &m[(i, i)] - lambda;
        }
        m
    }

    /// Stacks matrices with equal column counts vertically.
    pub fn vstack(field: FieldTag, cols: usize, parts: &[Matrix]) -> Result<Matrix> {
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            check_dim(cols, p.cols)?;
            data.extend(p.data.iter().cloned());
            rows += p.rows;
        }
        Matrix::new(rows, cols, field, data)
    }

    /// Reduced row echelon form with first-nonzero pivoting by column order.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let pivots = rref_rows(&mut rows, self.cols);
        let data = rows.into_iter().flatten().collect();
        (Matrix { rows: self.rows, cols: self.cols, field: self.field, data }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Null space `{v : self·v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Scalar::zero(); self.cols];
            v[f] = Scalar::one();
            for (ri, &p) in pivots.iter().enumerate() {
                v[p] = -&r[(ri, f)];
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.cols, self.field, basis).expect("kernel vectors have ambient length")
    }

    /// Solves `self · x = rhs` for every column of `rhs`.
    pub fn solve(&self, rhs: &Matrix) -> Result<Solution> {
        check_dim(self.rows, rhs.rows)?;
        self.same_field(rhs)?;
        let (n, k, m) = (self.cols, rhs.cols, self.rows);
        let width = n + k + m;
        let mut rows: Vec<Vec<Scalar>> = (0..m)
            .map(|i| {
                let mut r = Vec::with_capacity(width);
                r.extend_from_slice(self.row(i));
                r.extend_from_slice(rhs.row(i));
                r.extend((0..m).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }));
                r
            })
            .collect();
        let pivots = rref_rows(&mut rows, n);
        for r in &rows[pivots.len()..] {
            if r[n..n + k].iter().any(|x| !x.is_zero()) {
                return Ok(Solution::Inconsistent { witness: r[n + k..].to_vec() });
            }
        }
        let mut particular = Matrix::zeros(n, k, self.field);
        for (ri, &p) in pivots.iter().enumerate() {
            for j in 0..k {
                particular[(p, j)] = rows[ri][n + j].clone();
            }
        }
        Ok(Solution::Consistent { particular, kernel: self.kernel() })
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Precondition("inverse of a non-square matrix".into()));
        }
        match self.solve(&Matrix::identity(self.rows, self.field))? {
            Solution::Consistent { particular, kernel } if kernel.dim() == 0 => Ok(particular),
            _ => Err(Error::Singular),
        }
    }

    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square());
        let n = self.rows;
        let mut rows = self.to_rows();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !rows[r][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                rows.swap(p, c);
                det = -det;
            }
            let piv = rows[c][c].clone();
            det = &det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for r in c + 1..n {
                if rows[r][c].is_zero() {
                    continue;
                }
                let f = &rows[r][c] * &inv;
                let (top, bottom) = rows.split_at_mut(r);
                sub_scaled(&mut bottom[0], &top[c], &f, c);
            }
        }
        det
    }
}

/// `row -= f·pivot_row`, touching only columns `from..`.
pub(crate) fn sub_scaled(row: &mut [Scalar], pivot_row: &[Scalar], f: &Scalar, from: usize) {
    for (x, p) in row[from..].iter_mut().zip(&pivot_row[from..]) {
        if !p.is_zero() {
            *x -= &(f * p);
        }
    }
}

/// In-place RREF of `rows`, pivoting only within the first `pivot_cols` columns.
pub(crate) fn rref_rows(rows: &mut [Vec<Scalar>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(p, r);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in rows[r][c..].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                sub_scaled(row, &pivot_row, &f, c);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

/// Panics on shape or field mismatch; see [`Matrix::checked_mul`].
impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("matrix product mismatch")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Dot product without conjugation.
pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len());
    let mut acc = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += &(x * y);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldTag = FieldTag::Rationals;

    fn m(rows: &[&[i64]]) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect();
        Matrix::from_rows(Q, cols, &rows).unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn rref_examples() {
        assert_eq!(m(&[&[2, 4], &[1, 2]]).rref(), (m(&[&[1, 2], &[0, 0]]), vec![0]));
        let id = Matrix::identity(3, Q);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).rref(), (m(&[&[1, 0], &[0, 1]]), vec![0, 1]));
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::zeros(2, 2, Q).kernel().dim(), 2);
        assert_eq!(Matrix::identity(2, Q).kernel().dim(), 0);
        // L_{e2} of D(5): columns e2·e1 = 5e2, e2·e2 = e2
        let l = m(&[&[0, 0], &[5, 1]]);
        let k = l.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&v(&[1, -5])).unwrap());
    }

    #[test]
    fn solve_examples() {
        let b = m(&[&[3], &[4]]);
        match Matrix::identity(2, Q).solve(&b).unwrap() {
            Solution::Consistent { particular, kernel } => {
                assert_eq!(particular, b);
                assert_eq!(kernel.dim(), 0);
            }
            _ => panic!("identity system is consistent"),
        }
        match Matrix::zeros(2, 2, Q).solve(&m(&[&[1], &[0]])).unwrap() {
            Solution::Inconsistent { witness } => assert_eq!(witness, v(&[1, 0])),
            _ => panic!("expected inconsistency"),
        }
        match m(&[&[1, 1]]).solve(&m(&[&[1]])).unwrap() {
            Solution::Consistent { particular, kernel } => {
                assert_eq!(particular, m(&[&[1], &[0]]));
                assert_eq!(kernel, Subspace::from_vectors(2, Q, vec![v(&[1, -1])]).unwrap());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2, Q));
        assert_eq!(a.determinant(), Scalar::one());
        assert!(matches!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular)));
    }

    #[test]
    fn field_mismatch_rejected() {
        let a = Matrix::identity(2, Q);
        let b = Matrix::identity(2, FieldTag::GaussianRationals);
        assert!(matches!(a.checked_mul(&b), Err(Error::FieldMismatch(_))));
        assert!(Matrix::new(1, 1, Q, vec![Scalar::i()]).is_err());
    }

    fn small_matrix(max: usize) -> impl Strategy<Value = Matrix> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c)
                .prop_map(move |xs| Matrix::new(r, c, Q, xs.into_iter().map(Scalar::from_int).collect()).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_matrix(6)) {
            let k = a.kernel();
            prop_assert_eq!(a.rank() + k.dim(), a.cols());
            for b in k.basis() {
                prop_assert!(a.mul_vec(b).iter().all(Scalar::is_zero));
            }
        }

        #[test]
        fn solve_roundtrip(a in small_matrix(5), seed in proptest::collection::vec(-4i64..=4, 5)) {
            let rhs: Vec<Scalar> = (0..a.rows()).map(|i| Scalar::from_int(seed[i])).collect();
            let b = Matrix::new(a.rows(), 1, Q, rhs.clone()).unwrap();
            match a.solve(&b).unwrap() {
                Solution::Consistent { particular, .. } => {
                    prop_assert_eq!(a.mul_vec(&particular.col(0)), rhs);
                }
                Solution::Inconsistent { witness } => {
                    prop_assert!(a.transpose().mul_vec(&witness).iter().all(Scalar::is_zero));
                    prop_assert!(!dot(&witness, &rhs).is_zero());
                }
            }
        }

        #[test]
        fn determinant_matches_rank(a in small_matrix(4)) {
            if a.is_square() {
                prop_assert_eq!(a.determinant().is_zero(), a.rank() < a.rows());
            }
        }
    }
}
