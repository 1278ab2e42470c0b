//! Fusion laws and their C₂-gradings.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Scalar;

const MAX_VALUES: usize = 64;
const MAX_GRADING_VALUES: usize = 16;

/// One cell `a ⋆ b = product`, as written out for display and comparison.
pub type Cell = (Scalar, Scalar, Vec<Scalar>);
/// Finite eigenvalue set with a symmetric set-valued product.
///
/// Cells are bitmasks over the positions of `values`.
#[derive(Clone)]
pub struct FusionLaw {
    values: Vec<Scalar>,
    table: Vec<Vec<u64>>,
}

/// How [`FusionLaw::augment_with_zero`] fills the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroMode {
    /// New cells involving 0 are empty; old cells unchanged.
    EmptyRow,
    /// As `EmptyRow`, and 0 is added to every cell of the original law.
    Absorbed,
}

impl FusionLaw {
    /// Law on `values` (duplicates dropped) with every cell empty.
    pub fn new(values: Vec<Scalar>) -> Result<Self> {
        let mut vs: Vec<Scalar> = Vec::new();
        for v in values {
            if !vs.contains(&v) {
                vs.push(v);
            }
        }
        if vs.len() > MAX_VALUES {
            return Err(Error::CapExceeded(format!("fusion law with {} values", vs.len())));
        }
        let n = vs.len();
        Ok(FusionLaw { values: vs, table: vec![vec![0; n]; n] })
    }

    /// Law where `1⋆λ = λ` for every `λ ≠ 0`, plus the listed cells.
    pub fn with_unit_convention(values: Vec<Scalar>, cells: &[(Scalar, Scalar, Vec<Scalar>)]) -> Result<Self> {
        let mut law = FusionLaw::new(values)?;
        let one = Scalar::one();
        if law.index_of(&one).is_none() {
            return Err(Error::Precondition("unit convention needs 1 in the value set".into()));
        }
        for v in law.values.clone() {
            if !v.is_zero() {
                law.add(&one, &v, &v)?;
            }
        }
        for (a, b, ts) in cells {
            for t in ts {
                law.add(a, b, t)?;
            }
        }
        Ok(law)
    }

    /// Jordan type 𝒥(η) on {1, 0, η}.
    pub fn jordan(eta: &Scalar) -> Result<Self> {
        let (one, zero) = (Scalar::one(), Scalar::zero());
        FusionLaw::with_unit_convention(
            vec![one.clone(), zero.clone(), eta.clone()],
            &[
                (zero.clone(), zero.clone(), vec![zero.clone()]),
                (zero.clone(), eta.clone(), vec![eta.clone()]),
                (eta.clone(), eta.clone(), vec![one, zero]),
            ],
        )
    }

    /// Monster type ℳ(α, β) on {1, 0, α, β}.
    pub fn monster(alpha: &Scalar, beta: &Scalar) -> Result<Self> {
        let (one, zero) = (Scalar::one(), Scalar::zero());
        FusionLaw::with_unit_convention(
            vec![one.clone(), zero.clone(), alpha.clone(), beta.clone()],
            &[
                (zero.clone(), zero.clone(), vec![zero.clone()]),
                (zero.clone(), alpha.clone(), vec![alpha.clone()]),
                (zero.clone(), beta.clone(), vec![beta.clone()]),
                (alpha.clone(), alpha.clone(), vec![one.clone(), zero.clone()]),
                (alpha.clone(), beta.clone(), vec![beta.clone()]),
                (beta.clone(), beta.clone(), vec![one, zero, alpha.clone()]),
            ],
        )
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn index_of(&self, x: &Scalar) -> Option<usize> {
        self.values.iter().position(|v| v == x)
    }

    pub fn contains_value(&self, x: &Scalar) -> bool {
        self.index_of(x).is_some()
    }

    fn idx(&self, x: &Scalar) -> Result<usize> {
        self.index_of(x).ok_or_else(|| Error::Precondition(format!("{x} is not a value of the fusion law")))
    }

    /// Adds `t` to the cell `a⋆b` (and `b⋆a`).
    pub fn add(&mut self, a: &Scalar, b: &Scalar, t: &Scalar) -> Result<()> {
        let (i, j, k) = (self.idx(a)?, self.idx(b)?, self.idx(t)?);
        self.table[i][j] |= 1 << k;
        self.table[j][i] |= 1 << k;
        Ok(())
    }

    /// Adds a value with empty cells; no-op when present.
    pub fn add_value(&mut self, x: &Scalar) -> Result<()> {
        if self.contains_value(x) {
            return Ok(());
        }
        if self.values.len() == MAX_VALUES {
            return Err(Error::CapExceeded("fusion law value count".into()));
        }
        self.values.push(x.clone());
        for row in &mut self.table {
            row.push(0);
        }
        self.table.push(vec![0; self.values.len()]);
        Ok(())
    }

    fn mask_values(&self, mask: u64) -> Vec<Scalar> {
        (0..self.values.len()).filter(|k| mask >> k & 1 == 1).map(|k| self.values[k].clone()).collect()
    }

    /// `a ⋆ b` in ascending scalar order; empty when either argument is not a value.
    pub fn star(&self, a: &Scalar, b: &Scalar) -> Vec<Scalar> {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => {
                let mut out = self.mask_values(self.table[i][j]);
                out.sort();
                out
            }
            _ => Vec::new(),
        }
    }

    /// Nonempty cells `(λ, μ, λ⋆μ)` with `λ` at or before `μ` in value order.
    pub fn cells(&self) -> Vec<Cell> {
        let n = self.values.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                if self.table[i][j] != 0 {
                    out.push((self.values[i].clone(), self.values[j].clone(), self.mask_values(self.table[i][j])));
                }
            }
        }
        out
    }

    /// Value set and cells sorted by scalar order, for canonical output.
    pub fn canonical_cells(&self) -> (Vec<Scalar>, Vec<Cell>) {
        let mut values = self.values.clone();
        values.sort();
        let mut cells = Vec::new();
        for (i, a) in values.iter().enumerate() {
            for b in &values[i..] {
                let c = self.star(a, b);
                if !c.is_empty() {
                    cells.push((a.clone(), b.clone(), c));
                }
            }
        }
        (values, cells)
    }

    /// `ℱ ⊆ 𝒢` and `λ⋆μ ⊆ λ⊙μ` for all `λ, μ ∈ ℱ`.
    pub fn is_contained_in(&self, other: &FusionLaw) -> bool {
        law_contains(self, other)
    }

    pub fn augment_with_zero(&self, mode: ZeroMode) -> FusionLaw {
        let zero = Scalar::zero();
        let mut law = self.clone();
        law.add_value(&zero).expect("room for zero");
        if mode == ZeroMode::Absorbed {
            let z = law.idx(&zero).expect("zero present");
            for i in 0..self.len() {
                for j in 0..self.len() {
                    law.table[i][j] |= 1 << z;
                }
            }
        }
        law
    }

    /// All C₂-gradings with 1 in the plus part.
    pub fn find_c2_gradings(&self) -> Result<Vec<C2Grading>> {
        let n = self.len();
        if n > MAX_GRADING_VALUES {
            return Err(Error::CapExceeded(format!("grading search over {n} values (limit {MAX_GRADING_VALUES})")));
        }
        let one = self.index_of(&Scalar::one());
        let mut out = Vec::new();
        for minus in 0u64..(1 << n) {
            if one.is_some_and(|o| minus >> o & 1 == 1) {
                continue;
            }
            if self.grading_mask_valid(minus) {
                out.push(C2Grading { plus: self.mask_values(!minus & ((1 << n) - 1)), minus: self.mask_values(minus) });
            }
        }
        Ok(out)
    }

    fn grading_mask_valid(&self, minus: u64) -> bool {
        let n = self.len();
        let all = (1u64 << n) - 1;
        let plus = !minus & all;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let odd = (minus >> i & 1) ^ (minus >> j & 1) == 1;
                let allowed = if odd { minus } else { plus };
                self.table[i][j] & !allowed == 0
            })
        })
    }
}

/// `F ⊆ G`: value sets nested and every cell of `F` inside the matching cell of `G`.
pub fn law_contains(f: &FusionLaw, g: &FusionLaw) -> bool {
    if !f.values.iter().all(|v| g.contains_value(v)) {
        return false;
    }
    for (a, b, cell) in f.cells() {
        let gc = g.star(&a, &b);
        if !cell.iter().all(|x| gc.contains(x)) {
            return false;
        }
    }
    true
}

/// Equality of value sets and cells, independent of value order.
impl PartialEq for FusionLaw {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && law_contains(self, other) && law_contains(other, self)
    }
}

impl Eq for FusionLaw {}

impl fmt::Debug for FusionLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (values, cells) = self.canonical_cells();
        let vs: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", vs.join(", "))?;
        for (a, b, c) in cells {
            let cs: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            write!(f, "; {a}*{b}={{{}}}", cs.join(","))?;
        }
        Ok(())
    }
}

/// Partition of a law's values into a plus part and a minus part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2Grading {
    pub plus: Vec<Scalar>,
    pub minus: Vec<Scalar>,
}

impl C2Grading {
    /// Grading with the given minus part; every other value of `law` is plus.
    pub fn with_minus(law: &FusionLaw, minus: &[Scalar]) -> Result<Self> {
        for m in minus {
            law.idx(m)?;
        }
        let g = C2Grading {
            plus: law.values.iter().filter(|v| !minus.contains(v)).cloned().collect(),
            minus: law.values.iter().filter(|v| minus.contains(v)).cloned().collect(),
        };
        if !g.is_valid_for(law) {
            return Err(Error::Precondition(format!("{g:?} is not a grading of {law:?}")));
        }
        Ok(g)
    }

    /// `+1`, `−1`, or `None` for values outside the grading.
    pub fn sign(&self, x: &Scalar) -> Option<i8> {
        if self.plus.contains(x) {
            Some(1)
        } else if self.minus.contains(x) {
            Some(-1)
        } else {
            None
        }
    }

    /// Placement of 0, when 0 is graded.
    pub fn sigma_zero(&self) -> Option<i8> {
        self.sign(&Scalar::zero())
    }

    pub fn is_trivial(&self) -> bool {
        self.minus.is_empty()
    }

    /// Re-checks `λ⋆μ ⊆ ℱ_{st}` cell by cell.
    pub fn is_valid_for(&self, law: &FusionLaw) -> bool {
        if law.values.iter().any(|v| self.sign(v).is_none()) {
            return false;
        }
        for (a, b, cell) in law.cells() {
            let s = self.sign(&a).unwrap_or(1) * self.sign(&b).unwrap_or(1);
            if cell.iter().any(|t| self.sign(t) != Some(s)) {
                return false;
            }
        }
        true
    }

    /// Extends to a value not yet graded (used to place 0 for extensions).
    pub fn with_value(&self, x: &Scalar, sign: i8) -> C2Grading {
        let mut g = self.clone();
        if g.sign(x).is_none() {
            if sign > 0 {
                g.plus.push(x.clone());
            } else {
                g.minus.push(x.clone());
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn half() -> Scalar {
        Scalar::frac(1, 2)
    }

    fn law_b() -> FusionLaw {
        FusionLaw::with_unit_convention(vec![s(1), s(-1)], &[(s(-1), s(-1), vec![s(1)])]).unwrap()
    }

    fn law_a() -> FusionLaw {
        FusionLaw::with_unit_convention(vec![s(1), s(0)], &[(s(0), s(0), vec![s(0)])]).unwrap()
    }

    #[test]
    fn unit_convention() {
        let a = law_a();
        assert_eq!(a.star(&s(1), &s(1)), vec![s(1)]);
        assert!(a.star(&s(1), &s(0)).is_empty());
        assert_eq!(a.star(&s(0), &s(0)), vec![s(0)]);
    }

    #[test]
    fn containment() {
        let alpha = s(3);
        let lambda = Scalar::frac(1, 7);
        let c1 = FusionLaw::with_unit_convention(
            vec![s(1), alpha.clone()],
            &[(alpha.clone(), alpha.clone(), vec![s(1), alpha.clone()])],
        )
        .unwrap();
        let c2 = FusionLaw::with_unit_convention(
            vec![s(1), alpha.clone(), lambda.clone()],
            &[(alpha.clone(), alpha.clone(), vec![s(1), alpha.clone()]), (lambda.clone(), lambda.clone(), vec![s(1)])],
        )
        .unwrap();
        assert!(law_contains(&c1, &c2));
        assert!(!law_contains(&c2, &c1));
        assert!(law_contains(&c2, &c2));
        let j = FusionLaw::jordan(&half()).unwrap();
        let m = FusionLaw::monster(&s(2), &half()).unwrap();
        // J(1/2) has 1/2*1/2 = {1,0} while M(2,1/2) has {1,0,2}
        assert!(law_contains(&j, &m));
        assert!(!law_contains(&m, &j));
    }

    #[test]
    fn equality_ignores_order() {
        let a = FusionLaw::with_unit_convention(vec![s(1), s(0)], &[(s(0), s(0), vec![s(0)])]).unwrap();
        let b = FusionLaw::with_unit_convention(vec![s(0), s(1)], &[(s(0), s(0), vec![s(0)])]).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, law_b());
    }

    #[test]
    fn augment() {
        let b = law_b().augment_with_zero(ZeroMode::EmptyRow);
        assert_eq!(b.len(), 3);
        assert!(b.star(&s(0), &s(-1)).is_empty());
        assert_eq!(b.star(&s(-1), &s(-1)), vec![s(1)]);
        assert_eq!(law_a().augment_with_zero(ZeroMode::EmptyRow), law_a());
        let i = FusionLaw::with_unit_convention(vec![s(1), half()], &[]).unwrap();
        let vals = i.augment_with_zero(ZeroMode::EmptyRow).values().to_vec();
        assert_eq!(vals, vec![s(1), half(), s(0)]);
        let abs = law_b().augment_with_zero(ZeroMode::Absorbed);
        assert_eq!(abs.star(&s(-1), &s(-1)), vec![s(0), s(1)]);
        assert!(abs.star(&s(0), &s(0)).is_empty());
    }

    #[test]
    fn gradings() {
        let gb = law_b().find_c2_gradings().unwrap();
        assert!(gb.contains(&C2Grading { plus: vec![s(1)], minus: vec![s(-1)] }));
        let i = FusionLaw::with_unit_convention(vec![s(1), half()], &[]).unwrap();
        assert!(i.find_c2_gradings().unwrap().contains(&C2Grading { plus: vec![s(1)], minus: vec![half()] }));
        let ga = law_a().find_c2_gradings().unwrap();
        assert_eq!(ga, vec![C2Grading { plus: vec![s(1), s(0)], minus: vec![] }]);
        for law in [law_a(), law_b(), i, FusionLaw::jordan(&half()).unwrap()] {
            for g in law.find_c2_gradings().unwrap() {
                assert!(g.is_valid_for(&law));
            }
        }
    }

    #[test]
    fn zero_placements_both_emitted() {
        // {1,-1} plus an empty-row 0: 0 may sit on either side
        let law = law_b().augment_with_zero(ZeroMode::EmptyRow);
        let gs = law.find_c2_gradings().unwrap();
        let sigmas: Vec<Option<i8>> = gs.iter().filter(|g| !g.is_trivial()).map(|g| g.sigma_zero()).collect();
        assert!(sigmas.contains(&Some(1)) && sigmas.contains(&Some(-1)));
    }

    #[test]
    fn jordan_grading_places_half_in_minus() {
        let j = FusionLaw::jordan(&half()).unwrap();
        let gs = j.find_c2_gradings().unwrap();
        assert!(gs.contains(&C2Grading { plus: vec![s(1), s(0)], minus: vec![half()] }));
    }

    #[test]
    fn grading_cap() {
        let law = FusionLaw::new((0..17).map(s).collect()).unwrap();
        assert!(matches!(law.find_c2_gradings(), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn containment_is_a_partial_order() {
        let laws = [
            law_a(),
            law_b(),
            law_b().augment_with_zero(ZeroMode::EmptyRow),
            law_b().augment_with_zero(ZeroMode::Absorbed),
            FusionLaw::jordan(&half()).unwrap(),
            FusionLaw::monster(&s(2), &half()).unwrap(),
        ];
        for f in &laws {
            assert!(law_contains(f, f));
            for g in &laws {
                if law_contains(f, g) && law_contains(g, f) {
                    assert_eq!(f, g);
                }
                for h in &laws {
                    if law_contains(f, g) && law_contains(g, h) {
                        assert!(law_contains(f, h));
                    }
                }
            }
        }
    }
}
