//! Exact scalars over the rationals and the Gaussian rationals.
//!
//! A [`Scalar`] is always stored as a pair of canonical rationals `re + im·i`.
//! Over [`FieldTag::Rationals`] the imaginary part is zero; the tag decides
//! which literals are accepted and which operands may be mixed.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ground field of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldTag {
    Rationals,
    GaussianRationals,
}

impl FieldTag {
    pub fn contains(self, x: &Scalar) -> bool {
        match self {
            FieldTag::Rationals => x.im.is_zero(),
            FieldTag::GaussianRationals => true,
        }
    }

    /// Smallest field containing every scalar of the iterator.
    pub fn of<'a>(xs: impl IntoIterator<Item = &'a Scalar>) -> FieldTag {
        if xs.into_iter().any(|x| !x.is_real()) {
            FieldTag::GaussianRationals
        } else {
            FieldTag::Rationals
        }
    }

    pub fn join(self, other: FieldTag) -> FieldTag {
        self.max(other)
    }

    pub fn name(self) -> &'static str {
        match self {
            FieldTag::Rationals => "Q",
            FieldTag::GaussianRationals => "Q(i)",
        }
    }

    pub fn parse_name(text: &str) -> Result<FieldTag> {
        match text.trim() {
            "Q" => Ok(FieldTag::Rationals),
            "Q(i)" | "Qi" => Ok(FieldTag::GaussianRationals),
            other => Err(Error::Parse(format!("unknown field tag `{other}`"))),
        }
    }

    fn check(self, x: &Scalar) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::FieldMismatch(format!("{x} is not in {}", self.name())))
        }
    }

    /// Field operation with operand validation against this tag.
    pub fn arith(self, op: ScalarOp, a: &Scalar, b: Option<&Scalar>) -> Result<Scalar> {
        self.check(a)?;
        if let Some(b) = b {
            self.check(b)?;
        }
        let need =
            |b: Option<&Scalar>| b.cloned().ok_or_else(|| Error::Precondition(format!("{op:?} needs two operands")));
        match op {
            ScalarOp::Add => Ok(a + &need(b)?),
            ScalarOp::Sub => Ok(a - &need(b)?),
            ScalarOp::Mul => Ok(a * &need(b)?),
            ScalarOp::Div => a.checked_div(&need(b)?),
            ScalarOp::Neg => Ok(-a),
            ScalarOp::Inv => a.inv(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Element of ℚ(i) in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// `num/den`; panics when `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_rational(re: BigRational) -> Self {
        Scalar { re, im: BigRational::zero() }
    }

    pub fn complex(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_real() {
            return Ok(Scalar::from_rational(self.re.recip()));
        }
        let n = self.norm_sq();
        Ok(Scalar { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Square root inside ℚ(i), if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        if self.is_real() {
            if !self.re.is_negative() {
                return rational_sqrt(&self.re).map(Scalar::from_rational);
            }
            return rational_sqrt(&-&self.re).map(|q| Scalar { re: BigRational::zero(), im: q });
        }
        let r = rational_sqrt(&self.norm_sq())?;
        let two = BigRational::from_integer(BigInt::from(2));
        let p = rational_sqrt(&((&self.re + &r) / &two))?;
        let q = rational_sqrt(&((&r - &self.re) / &two))?;
        // choose the sign of q so that 2pq = im
        let q = if (&p * &q * &two) == self.im { q } else { -q };
        let cand = Scalar { re: p, im: q };
        (&cand * &cand == *self).then_some(cand)
    }

    /// Parses a literal in the grammar `int | int/int | (a)+(b)i`.
    ///
    /// Unparenthesised complex forms such as `1/2+3i`, `-2i` and `i` are
    /// also accepted.
    pub fn parse(text: &str, tag: FieldTag) -> Result<Scalar> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty scalar literal".into()));
        }
        let x = if let Some(body) = s.strip_suffix('i') {
            let (re, im) = split_complex(body)?;
            Scalar { re, im }
        } else {
            Scalar::from_rational(parse_rational(strip_parens(&s))?)
        };
        if !tag.contains(&x) {
            return Err(Error::Parse(format!("imaginary part in `{text}` under field Q")));
        }
        Ok(x)
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s)
}

fn parse_int(s: &str) -> Result<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse(format!("malformed integer `{s}`")));
    }
    s.parse::<BigInt>().map_err(|e| Error::Parse(format!("malformed integer `{s}`: {e}")))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let n = parse_int(n)?;
            if d.starts_with(['-', '+']) {
                return Err(Error::Parse(format!("signed denominator in `{s}`")));
            }
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Imaginary coefficient text: `""`, `"+"`, `"-"`, `(b)`, `b`.
fn parse_imag(s: &str) -> Result<BigRational> {
    match s {
        "" | "+" => Ok(BigRational::one()),
        "-" => Ok(-BigRational::one()),
        _ => {
            let s = s.strip_prefix('+').unwrap_or(s);
            if let Some(inner) = s.strip_prefix("-(").and_then(|t| t.strip_suffix(')')) {
                return Ok(-parse_rational(inner)?);
            }
            parse_rational(strip_parens(s))
        }
    }
}

/// Splits `body` (the literal without its trailing `i`) into real and imaginary parts.
fn split_complex(body: &str) -> Result<(BigRational, BigRational)> {
    if let Some(rest) = body.strip_prefix('(') {
        let close = rest.find(')').ok_or_else(|| Error::Parse(format!("unbalanced parenthesis in `{body}i`")))?;
        let tail = &rest[close + 1..];
        if tail.is_empty() {
            // `(b)i`
            return Ok((BigRational::zero(), parse_rational(&rest[..close])?));
        }
        let re = parse_rational(&rest[..close])?;
        if !tail.starts_with(['+', '-']) {
            return Err(Error::Parse(format!("malformed complex literal `{body}i`")));
        }
        return Ok((re, parse_imag(tail)?));
    }
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&k| matches!(bytes[k], b'+' | b'-') && bytes[k - 1].is_ascii_digit());
    match split {
        Some(k) => Ok((parse_rational(&body[..k])?, parse_imag(&body[k..])?)),
        None => Ok((BigRational::zero(), parse_imag(body)?)),
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_real() {
            f.write_str(&fmt_rational(&self.re))
        } else {
            write!(f, "({})+({})i", fmt_rational(&self.re), fmt_rational(&self.im))
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Lexicographic on (re, im); only used to make outputs deterministic.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::from_rational(q)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_rational(&self.re + &rhs.re);
        }
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_rational(&self.re - &rhs.re);
        }
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar::from_rational(&self.re * &rhs.re);
        }
        Scalar { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

/// Panics on division by zero, like integer division.
impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        if !rhs.im.is_zero() {
            self.im += &rhs.im;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        if !rhs.im.is_zero() {
            self.im -= &rhs.im;
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

/// Integer with `i64` range check, used for dimension-like parameters.
pub fn to_small_int(x: &Scalar) -> Option<i64> {
    if !x.is_real() || !x.re.is_integer() {
        return None;
    }
    i64::try_from(x.re.numer()).ok()
}

/// Least common multiple of the denominators of real scalars.
pub(crate) fn denom_lcm<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(s, FieldTag::Rationals).unwrap()
    }

    fn qi(s: &str) -> Scalar {
        Scalar::parse(s, FieldTag::GaussianRationals).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(q("-1/2"), Scalar::frac(-1, 2));
        assert_eq!(qi("1/2+0/1i"), Scalar::frac(1, 2));
        assert!(qi("1/2+0/1i").is_real());
        assert_eq!(q("2/4"), Scalar::frac(1, 2));
        assert_eq!(qi("(1/2)+(-3)i").to_string(), "(1/2)+(-3)i");
        assert_eq!(qi("i"), Scalar::i());
        assert_eq!(qi("-i"), -Scalar::i());
        assert_eq!(qi("(2/3)i"), &Scalar::frac(2, 3) * &Scalar::i());
        assert_eq!(qi("1-2i"), &Scalar::one() - &(&Scalar::from_int(2) * &Scalar::i()));
    }

    #[test]
    fn parse_errors() {
        assert!(Scalar::parse("1/0", FieldTag::Rationals).is_err());
        assert!(Scalar::parse("abc", FieldTag::Rationals).is_err());
        assert!(Scalar::parse("1/-2", FieldTag::Rationals).is_err());
        assert!(Scalar::parse("(1)+(1)i", FieldTag::Rationals).is_err());
        assert!(Scalar::parse("", FieldTag::Rationals).is_err());
        assert!(Scalar::parse("1//2", FieldTag::Rationals).is_err());
    }

    #[test]
    fn arith_examples() {
        let t = FieldTag::Rationals;
        assert_eq!(t.arith(ScalarOp::Mul, &q("1/2"), Some(&q("2/3"))).unwrap(), q("1/3"));
        assert_eq!(t.arith(ScalarOp::Add, &q("1/2"), Some(&q("-1/2"))).unwrap(), Scalar::zero());
        let g = FieldTag::GaussianRationals;
        assert_eq!(g.arith(ScalarOp::Inv, &Scalar::i(), None).unwrap(), -Scalar::i());
        assert!(matches!(t.arith(ScalarOp::Add, &Scalar::i(), Some(&q("1"))), Err(Error::FieldMismatch(_))));
        assert!(matches!(t.arith(ScalarOp::Div, &q("1"), Some(&Scalar::zero())), Err(Error::DivisionByZero)));
    }

    #[test]
    fn gaussian_sqrt() {
        let z = qi("(3)+(4)i");
        let w = z.sqrt().unwrap();
        assert_eq!(&w * &w, z);
        assert_eq!(Scalar::from_int(-4).sqrt().unwrap(), qi("(0)+(2)i"));
        assert!(Scalar::from_int(2).sqrt().is_none());
        assert!(Scalar::i().sqrt().is_none());
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-40i64..40, 1i64..25).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
    }

    fn gaussian() -> impl Strategy<Value = Scalar> {
        (small_rational(), small_rational(), any::<bool>()).prop_map(|(a, b, real)| {
            if real {
                Scalar::from_rational(a)
            } else {
                Scalar::complex(a, b)
            }
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a - &a, Scalar::zero());
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
            }
        }

        #[test]
        fn canonical_and_roundtrip(a in gaussian()) {
            let tag = FieldTag::of([&a]);
            let text = a.to_string();
            let back = Scalar::parse(&text, tag).unwrap();
            prop_assert_eq!(&back, &a);
            prop_assert_eq!(Scalar::parse(&back.to_string(), tag).unwrap().to_string(), text);
            prop_assert!(a.re().denom() > &BigInt::zero());
            prop_assert!(a.re().numer().gcd(a.re().denom()).is_one());
        }
    }
}
