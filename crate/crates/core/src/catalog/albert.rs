//! Octonions and the 27-dim Albert algebra of Hermitian 3×3 octonion matrices.

use std::sync::OnceLock;

use super::{q, CatalogEntry, Params};
use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::field::{FieldTag, Scalar};
use crate::fusion::FusionLaw;

/// Triples `pqr` with `I_p I_q = I_r`.
const TRIPLES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]];

/// `I_q I_r = sign · I_s` for `q ≠ r`, stored as `(sign, s)`.
fn unit_table() -> &'static [[(i8, usize); 8]; 8] {
    static TABLE: OnceLock<[[(i8, usize); 8]; 8]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[(0i8, 0usize); 8]; 8];
        for [p, q, r] in TRIPLES {
            for (a, b, c) in [(p, q, r), (q, r, p), (r, p, q)] {
                t[a][b] = (1, c);
                t[b][a] = (-1, c);
            }
        }
        t
    })
}

/// Product of `x0 + Σ x_q I_q` and `y0 + Σ y_q I_q`.
pub fn octonion_product(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    assert!(x.len() == 8 && y.len() == 8, "octonions have 8 coordinates");
    let t = unit_table();
    let mut out = vec![Scalar::zero(); 8];
    for (a, xa) in x.iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.iter().enumerate() {
            if yb.is_zero() {
                continue;
            }
            let c = xa * yb;
            if a == 0 || b == 0 {
                out[a + b] += &c;
            } else if a == b {
                out[0] -= &c;
            } else {
                let (sign, s) = t[a][b];
                if sign > 0 {
                    out[s] += &c;
                } else {
                    out[s] -= &c;
                }
            }
        }
    }
    out
}

/// 3×3 matrix of octonions, row-major.
type OctMatrix = Vec<Vec<Scalar>>;

fn zero_matrix() -> OctMatrix {
    vec![vec![Scalar::zero(); 8]; 9]
}

fn mat_mul(x: &OctMatrix, y: &OctMatrix) -> OctMatrix {
    let mut out = zero_matrix();
    for i in 0..3 {
        for k in 0..3 {
            for j in 0..3 {
                let p = octonion_product(&x[i * 3 + j], &y[j * 3 + k]);
                for (o, v) in out[i * 3 + k].iter_mut().zip(p) {
                    *o += &v;
                }
            }
        }
    }
    out
}

/// `(i, j, q)` for each basis element; `i == j` marks a diagonal unit.
fn basis_shape() -> Vec<(usize, usize, usize)> {
    let mut shape: Vec<_> = (0..3).map(|i| (i, i, 0)).collect();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        shape.extend((0..8).map(|k| (i, j, k)));
    }
    shape
}

fn basis_matrix(i: usize, j: usize, k: usize) -> OctMatrix {
    let mut m = zero_matrix();
    m[i * 3 + j][k] = Scalar::one();
    if i != j {
        // Hermitian partner carries the Cayley conjugate
        m[j * 3 + i][k] = if k == 0 { Scalar::one() } else { -Scalar::one() };
    }
    m
}

fn coordinates(m: &OctMatrix, shape: &[(usize, usize, usize)]) -> Result<Vec<Scalar>> {
    for i in 0..3 {
        if m[i * 3 + i][1..].iter().any(|x| !x.is_zero()) {
            return Err(Error::Internal("non-scalar diagonal in Albert product".into()));
        }
        for j in i + 1..3 {
            let (u, l) = (&m[i * 3 + j], &m[j * 3 + i]);
            let conj_ok = u[0] == l[0] && (1..8).all(|k| u[k] == -&l[k]);
            if !conj_ok {
                return Err(Error::Internal("non-Hermitian Albert product".into()));
            }
        }
    }
    Ok(shape.iter().map(|&(i, j, k)| m[i * 3 + j][k].clone()).collect())
}

fn albert_algebra() -> Result<Algebra> {
    let shape = basis_shape();
    let mats: Vec<OctMatrix> = shape.iter().map(|&(i, j, k)| basis_matrix(i, j, k)).collect();
    let half = q(1, 2);
    let mut products = Vec::new();
    for a in 0..mats.len() {
        for b in a..mats.len() {
            let (xy, yx) = (mat_mul(&mats[a], &mats[b]), mat_mul(&mats[b], &mats[a]));
            let sym: OctMatrix =
                xy.iter().zip(&yx).map(|(u, v)| u.iter().zip(v).map(|(s, t)| &(s + t) * &half).collect()).collect();
            let c = coordinates(&sym, &shape)?;
            if c.iter().any(|x| !x.is_zero()) {
                products.push((a, b, c));
            }
        }
    }
    let labels = shape
        .iter()
        .map(|&(i, j, k)| if i == j { format!("E{}{}", i + 1, i + 1) } else { format!("E{}{}_{}", i + 1, j + 1, k) })
        .collect();
    Algebra::from_products(labels, FieldTag::Rationals, &products)
}

/// Idempotents `E_ii`, `(E_ii + E_jj + E_ij + E_ji)/2` and `(E_ii + E_jj + I_q E_ij − I_q E_ji)/2`.
fn albert_idempotents(alg: &Algebra) -> Result<Vec<Element>> {
    let h = q(1, 2);
    let mut axes = Vec::new();
    for i in 1..=3 {
        axes.push(alg.element(&[(&format!("E{i}{i}"), Scalar::one())])?);
    }
    for (i, j) in [(1, 2), (1, 3), (2, 3)] {
        for k in 0..8 {
            axes.push(alg.element(&[
                (&format!("E{i}{i}"), h.clone()),
                (&format!("E{j}{j}"), h.clone()),
                (&format!("E{i}{j}_{k}"), h.clone()),
            ])?);
        }
    }
    Ok(axes)
}

pub(super) fn albert(params: &Params) -> Result<CatalogEntry> {
    let alg = albert_algebra()?;
    let axes = albert_idempotents(&alg)?;
    let mut e = CatalogEntry::new("Albert", params, alg);
    e.push_law("J12", FusionLaw::jordan(&q(1, 2))?);
    e.push_set("standard", axes, "J12");
    Ok(e)
}
