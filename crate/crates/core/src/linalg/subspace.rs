use std::fmt;

use super::{rref_rows, sub_scaled, Matrix};
use crate::error::{check_dim, Result};
use crate::field::{FieldTag, Scalar};

/// Subspace of `F^ambient`, stored as its unique RREF row basis.
#[derive(Clone)]
pub struct Subspace {
    ambient: usize,
    field: FieldTag,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    /// Span of `vectors`.
    pub fn from_vectors(ambient: usize, field: FieldTag, mut vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        for v in &vectors {
            check_dim(ambient, v.len())?;
        }
        let field = field.join(FieldTag::of(vectors.iter().flatten()));
        let pivots = rref_rows(&mut vectors, ambient);
        vectors.truncate(pivots.len());
        Ok(Subspace { ambient, field, basis: vectors, pivots })
    }

    pub fn zero(ambient: usize, field: FieldTag) -> Self {
        Subspace { ambient, field, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize, field: FieldTag) -> Self {
        Subspace::from_vectors(ambient, field, Matrix::identity(ambient, field).to_rows()).expect("identity rows")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldTag {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as the rows of a matrix.
    pub fn matrix(&self) -> Matrix {
        Matrix::from_rows(self.field, self.ambient, &self.basis).expect("basis rows")
    }

    /// Normal form of `v` modulo this subspace: zero on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        check_dim(self.ambient, v.len())?;
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let f = out[p].clone();
                sub_scaled(&mut out, row, &f, p);
            }
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Coefficients of `v` in the RREF basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        check_dim(self.ambient, other.ambient)?;
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        let vs = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::from_vectors(self.ambient, self.field.join(other.field), vs)
    }

    /// `{w : v·w = 0 for all v}` under the bilinear pairing without conjugation.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient, self.field);
        }
        self.matrix().kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// Standard basis coordinates that are not pivots; they span a complement.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }
}

/// Equality of canonical bases.
impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}; ", self.dim(), self.ambient)?;
        for (i, b) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let s: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", s.join(" "))?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldTag = FieldTag::Rationals;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    fn span(vs: &[&[i64]]) -> Subspace {
        let n = vs[0].len();
        Subspace::from_vectors(n, Q, vs.iter().map(|x| v(x)).collect()).unwrap()
    }

    #[test]
    fn lattice_examples() {
        let e1 = span(&[&[1, 0]]);
        let e2 = span(&[&[0, 1]]);
        assert!(e1.intersect(&e2).unwrap().is_zero());
        assert!(e1.sum(&span(&[&[1, 1]])).unwrap().is_full());
        assert!(span(&[&[1, -1]]).contains(&v(&[1, -1])).unwrap());
        assert!(e1.contains(&v(&[1, 0, 0])).is_err());
        assert_eq!(span(&[&[2, -2]]), span(&[&[-1, 1]]));
    }

    #[test]
    fn coordinates_in_rref_basis() {
        let s = span(&[&[1, 0, 2], &[0, 1, 3]]);
        assert_eq!(s.coordinates(&v(&[2, 1, 7])).unwrap(), Some(v(&[2, 1])));
        assert_eq!(s.coordinates(&v(&[0, 0, 1])).unwrap(), None);
        assert_eq!(s.complement_coordinates(), vec![2]);
    }

    fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-2i64..=2, n), 0..=n)
            .prop_map(move |rows| Subspace::from_vectors(n, Q, rows.iter().map(|r| v(r)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn grassmann(u in subspace(5), w in subspace(5)) {
            let s = u.sum(&w).unwrap();
            let i = u.intersect(&w).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
            prop_assert!(i.is_subspace_of(&u).unwrap() && i.is_subspace_of(&w).unwrap());
            prop_assert!(u.is_subspace_of(&s).unwrap() && w.is_subspace_of(&s).unwrap());
        }

        #[test]
        fn pivots_increase(u in subspace(6)) {
            prop_assert!(u.pivots().windows(2).all(|p| p[0] < p[1]));
            for (row, &p) in u.basis().iter().zip(u.pivots()) {
                prop_assert!(row[p].is_one());
                prop_assert!(row[..p].iter().all(Scalar::is_zero));
            }
        }
    }
}
