//! Univariate polynomials, characteristic polynomials and exact root finding.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{denom_lcm, Scalar};
use crate::linalg::Matrix;

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn one() -> Self {
        Poly::new(vec![Scalar::one()])
    }

    /// `t − r`
    pub fn linear(r: &Scalar) -> Self {
        Poly::new(vec![-r, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = Scalar::zero();
        Poly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&z) - other.coeffs.get(i).unwrap_or(&z)).collect())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Synthetic division by `t − r`: returns (quotient, remainder).
    pub fn div_linear(&self, r: &Scalar) -> (Poly, Scalar) {
        if self.coeffs.len() <= 1 {
            return (Poly::new(Vec::new()), self.coeffs.first().cloned().unwrap_or_else(Scalar::zero));
        }
        let n = self.coeffs.len();
        let mut q = vec![Scalar::zero(); n - 1];
        let mut carry = self.coeffs[n - 1].clone();
        for i in (0..n - 1).rev() {
            q[i] = carry.clone();
            carry = &self.coeffs[i] + &(&carry * r);
        }
        (Poly::new(q), carry)
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_real)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.coeffs.iter().enumerate().map(|(k, c)| format!("({c})t^{k}")).collect();
        write!(f, "{}", if terms.is_empty() { "0".into() } else { terms.join(" + ") })
    }
}

/// `det(t·Id − m)` via exact reduction to upper Hessenberg form.
pub fn char_poly(m: &Matrix) -> Poly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut h = m.to_rows();
    for k in 0..n.saturating_sub(2) {
        let Some(p) = (k + 1..n).find(|&r| !h[r][k].is_zero()) else {
            continue;
        };
        if p != k + 1 {
            h.swap(p, k + 1);
            for row in h.iter_mut() {
                row.swap(p, k + 1);
            }
        }
        let inv = h[k + 1][k].inv().expect("nonzero pivot");
        for i in k + 2..n {
            if h[i][k].is_zero() {
                continue;
            }
            let f = &h[i][k] * &inv;
            let pivot_row = h[k + 1].clone();
            for (x, y) in h[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
            for row in h.iter_mut() {
                if !row[i].is_zero() {
                    let add = &f * &row[i];
                    row[k + 1] += &add;
                }
            }
        }
    }
    // p_m(t) = (t − h_mm) p_{m−1}(t) − Σ_{i<m} h_{i,m} (Π_{j=i+1..m} h_{j,j−1}) p_{i−1}(t)   (1-indexed)
    let mut ps: Vec<Poly> = vec![Poly::one()];
    for m1 in 1..=n {
        let mm = m1 - 1;
        let mut p = Poly::linear(&h[mm][mm]).mul(&ps[m1 - 1]);
        let mut prod = Scalar::one();
        for i1 in (1..m1).rev() {
            let i = i1 - 1;
            prod = &prod * &h[i + 1][i];
            if prod.is_zero() {
                break;
            }
            let c = &h[i][mm] * &prod;
            if !c.is_zero() {
                p = p.sub(&ps[i1 - 1].scale(&c));
            }
        }
        ps.push(p);
    }
    ps.pop().expect("nonempty")
}

/// Roots found in the ground field together with what could not be split off.
#[derive(Clone, Debug)]
pub struct RootSearch {
    /// Distinct roots with multiplicities, in ascending scalar order.
    pub roots: BTreeMap<Scalar, usize>,
    /// Cofactor with no root found; degree 0 when the polynomial fully split.
    pub residual: Poly,
}

impl RootSearch {
    pub fn complete(&self) -> bool {
        self.residual.degree() == 0
    }
}

/// Splits off `hints`, zero, linear and quadratic factors and rational roots.
pub fn find_roots(p: &Poly, hints: &[Scalar]) -> RootSearch {
    assert!(!p.is_zero(), "roots of the zero polynomial");
    let mut roots = BTreeMap::new();
    let mut rest = p.clone();
    let strip = |rest: &mut Poly, r: &Scalar, roots: &mut BTreeMap<Scalar, usize>| loop {
        if rest.degree() == 0 {
            return;
        }
        let (q, rem) = rest.div_linear(r);
        if !rem.is_zero() {
            return;
        }
        *rest = q;
        *roots.entry(r.clone()).or_insert(0) += 1;
    };
    for h in hints {
        strip(&mut rest, h, &mut roots);
    }
    strip(&mut rest, &Scalar::zero(), &mut roots);
    loop {
        let found: Vec<Scalar> = match rest.degree() {
            0 => break,
            1 => vec![-(&rest.coeffs[0] / &rest.coeffs[1])],
            2 => quadratic_roots(&rest),
            _ if rest.is_real() => rational_roots(&rest),
            _ => Vec::new(),
        };
        if found.is_empty() {
            break;
        }
        for r in &found {
            strip(&mut rest, r, &mut roots);
        }
    }
    RootSearch { roots, residual: rest }
}

fn quadratic_roots(p: &Poly) -> Vec<Scalar> {
    let (c, b, a) = (&p.coeffs[0], &p.coeffs[1], &p.coeffs[2]);
    let disc = &(b * b) - &(&Scalar::from_int(4) * &(a * c));
    let Some(s) = disc.sqrt() else {
        return Vec::new();
    };
    let two_a = &Scalar::from_int(2) * a;
    vec![&(-b + &s) / &two_a, &(-b - &s) / &two_a]
}

const TRIAL_LIMIT: u64 = 1 << 16;
const CANDIDATE_CAP: usize = 20_000;

/// Rational roots of a polynomial with rational coefficients.
fn rational_roots(p: &Poly) -> Vec<Scalar> {
    let lcm = denom_lcm(p.coeffs.iter().map(Scalar::re));
    let ints: Vec<BigInt> =
        p.coeffs.iter().map(|c| (c.re() * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let Some(lo) = ints.iter().position(|c| !c.is_zero()) else {
        return Vec::new();
    };
    let a0 = ints[lo].abs();
    let an = ints.last().expect("nonzero").abs();
    let (Some(ps), Some(qs)) = (divisors(&a0), divisors(&an)) else {
        return Vec::new();
    };
    if ps.len().saturating_mul(qs.len()) > CANDIDATE_CAP {
        return Vec::new();
    }
    let mut out = Vec::new();
    for q in &qs {
        for pp in &ps {
            if !pp.gcd(q).is_one() {
                continue;
            }
            for sign in [1i64, -1] {
                let num = pp * BigInt::from(sign);
                if int_eval_is_zero(&ints, &num, q) {
                    out.push(Scalar::from_rational(BigRational::new(num, q.clone())));
                }
            }
        }
    }
    out
}

/// Whether `Σ a_k (p/q)^k = 0`, tested as `Σ a_k p^k q^{n−k} = 0`.
fn int_eval_is_zero(a: &[BigInt], p: &BigInt, q: &BigInt) -> bool {
    let mut acc = BigInt::zero();
    let n = a.len() - 1;
    let mut qp = vec![BigInt::one(); n + 1];
    for k in 1..=n {
        qp[k] = &qp[k - 1] * q;
    }
    let mut ppow = BigInt::one();
    for (k, c) in a.iter().enumerate() {
        if !c.is_zero() {
            acc += c * &ppow * &qp[n - k];
        }
        ppow *= p;
    }
    acc.is_zero()
}

/// All positive divisors, or `None` when trial division cannot factor `n`.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut rest = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d = 2u64;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        // a cofactor below the square of the trial bound is prime
        let bound = BigInt::from(TRIAL_LIMIT) * BigInt::from(TRIAL_LIMIT);
        if rest >= bound {
            return None;
        }
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
        if divs.len() > CANDIDATE_CAP {
            return None;
        }
    }
    divs.sort();
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldTag;
    use proptest::prelude::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn char_poly_small() {
        // [[1,-1],[0,-1]]: (t-1)(t+1) = t² − 1
        let m = Matrix::new(2, 2, FieldTag::Rationals, vec![s(1), s(-1), s(0), s(-1)]).unwrap();
        assert_eq!(char_poly(&m), Poly::new(vec![s(-1), s(0), s(1)]));
    }

    #[test]
    fn roots_with_and_without_hints() {
        // (t − 1)(t − 1/2)²(t + 3) t
        let p = [Scalar::one(), Scalar::frac(1, 2), Scalar::frac(1, 2), s(-3), s(0)]
            .iter()
            .fold(Poly::one(), |acc, r| acc.mul(&Poly::linear(r)));
        let found = find_roots(&p, &[]);
        assert!(found.complete());
        assert_eq!(found.roots.get(&Scalar::frac(1, 2)), Some(&2));
        assert_eq!(found.roots.len(), 4);
        let hinted = find_roots(&p, &[s(-3), s(7)]);
        assert_eq!(hinted.roots.get(&s(-3)), Some(&1));
        assert!(!hinted.roots.contains_key(&s(7)));
    }

    #[test]
    fn irrational_roots_remain() {
        // (t² − 2)(t² − 3)(t − 1)
        let p = Poly::new(vec![s(6), s(0), s(-5), s(0), s(1)]).mul(&Poly::linear(&s(1)));
        let found = find_roots(&p, &[]);
        assert_eq!(found.roots.len(), 1);
        assert_eq!(found.residual.degree(), 4);
        assert!(!found.complete());
    }

    #[test]
    fn gaussian_quadratic() {
        // t² + 1 over Q(i)
        let found = find_roots(&Poly::new(vec![s(1), s(0), s(1)]), &[]);
        assert!(found.complete());
        assert!(found.roots.contains_key(&Scalar::i()));
        assert!(found.roots.contains_key(&-Scalar::i()));
    }

    proptest! {
        #[test]
        fn char_poly_agrees_with_determinant(xs in proptest::collection::vec(-3i64..=3, 16), t in -4i64..=4) {
            let m = Matrix::new(4, 4, FieldTag::Rationals, xs.into_iter().map(s).collect()).unwrap();
            let p = char_poly(&m);
            let direct = Matrix::identity(4, FieldTag::Rationals).scale(&s(t)).checked_sub(&m).unwrap().determinant();
            prop_assert_eq!(p.eval(&s(t)), direct);
            prop_assert_eq!(p.degree(), 4);
        }

        #[test]
        fn rational_roots_recovered(rs in proptest::collection::vec((-6i64..=6, 1i64..=4), 1..5)) {
            let roots: Vec<Scalar> = rs.iter().map(|&(n, d)| Scalar::frac(n, d)).collect();
            let p = roots.iter().fold(Poly::one(), |acc, r| acc.mul(&Poly::linear(r)));
            let found = find_roots(&p, &[]);
            prop_assert!(found.complete());
            for r in &roots {
                prop_assert!(found.roots.contains_key(r));
            }
            prop_assert_eq!(found.roots.values().sum::<usize>(), roots.len());
        }
    }
}
