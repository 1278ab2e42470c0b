use super::{sub_scaled, Subspace};
use crate::error::{check_dim, Result};
use crate::field::{FieldTag, Scalar};

/// Incremental row echelon form for large constraint systems.
///
/// Rows are reduced against the stored pivots as they arrive, so memory stays
/// bounded by the number of columns no matter how many constraints are fed in.
#[derive(Clone, Debug)]
pub struct RowReducer {
    cols: usize,
    field: FieldTag,
    /// Sorted by pivot column; each row is monic at its pivot and zero before it.
    rows: Vec<(usize, Vec<Scalar>)>,
    seen: usize,
}

impl RowReducer {
    pub fn new(cols: usize, field: FieldTag) -> Self {
        RowReducer { cols, field, rows: Vec::new(), seen: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of rows pushed so far, including redundant ones.
    pub fn rows_seen(&self) -> usize {
        self.seen
    }

    /// Adds a row; returns whether it increased the rank.
    pub fn push(&mut self, mut row: Vec<Scalar>) -> Result<bool> {
        check_dim(self.cols, row.len())?;
        self.seen += 1;
        if FieldTag::of(&row) == FieldTag::GaussianRationals {
            self.field = FieldTag::GaussianRationals;
        }
        for (p, prow) in &self.rows {
            if !row[*p].is_zero() {
                let f = row[*p].clone();
                sub_scaled(&mut row, prow, &f, *p);
            }
        }
        let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = row[lead].inv().expect("nonzero lead");
        for x in row[lead..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < lead);
        self.rows.insert(at, (lead, row));
        Ok(true)
    }

    /// Row space of everything pushed.
    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.cols, self.field, self.rows.iter().map(|(_, r)| r.clone()).collect())
            .expect("rows have the declared width")
    }

    /// Joint solution space `{x : r·x = 0 for every pushed row r}`.
    pub fn kernel(&self) -> Subspace {
        self.row_space().annihilator()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    #[test]
    fn matches_dense_kernel() {
        let rows: Vec<Vec<Scalar>> = [[1, 2, 0, 1], [2, 4, 1, 1], [0, 0, 1, -1], [3, 6, 1, 2]]
            .iter()
            .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
            .collect();
        let mut red = RowReducer::new(4, FieldTag::Rationals);
        let added: Vec<bool> = rows.iter().map(|r| red.push(r.clone()).unwrap()).collect();
        assert_eq!(added, vec![true, true, false, false]);
        let dense = Matrix::from_rows(FieldTag::Rationals, 4, &rows).unwrap();
        assert_eq!(red.kernel(), dense.kernel());
        assert_eq!(red.rows_seen(), 4);
    }
}
