//! Exact scalars: arbitrary-precision rationals and elements of ℚ(ζₘ).

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use super::cyclotomic::{fmt_rational, Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};

/// The ground field an algebra is defined over.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    #[default]
    Rational,
    Cyclotomic { order: u32 },
}

impl FieldSpec {
    /// Embeds a rational into this field.
    pub fn embed(&self, r: BigRational) -> Result<Scalar> {
        match self {
            FieldSpec::Rational => Ok(Scalar::Rational(r)),
            FieldSpec::Cyclotomic { order } => Ok(Scalar::Cyclotomic(Cyclotomic::from_rational(
                CyclotomicField::get(*order)?,
                r,
            ))),
        }
    }

    /// ζₘ for a cyclotomic field.
    pub fn zeta(&self) -> Result<Scalar> {
        match self {
            FieldSpec::Rational => Err(Error::Parse("the rational field has no generator z".into())),
            FieldSpec::Cyclotomic { order } => {
                Ok(Scalar::Cyclotomic(Cyclotomic::zeta(CyclotomicField::get(*order)?)))
            }
        }
    }

    /// Parses a scalar written in this field's syntax.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        match self {
            FieldSpec::Rational => s.parse(),
            FieldSpec::Cyclotomic { order } => parse_cyclotomic(s, *order),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Cyclotomic { order } => write!(f, "Q(z{order})"),
        }
    }
}

/// An exact field element.
///
/// Rationals embed into every cyclotomic field, so mixing a rational with a
/// cyclotomic operand is allowed; two cyclotomics of different order are a
/// field mismatch. The operator impls (`+`, `*`, ...) panic on a mismatch;
/// use the `try_*` methods when operands come from untrusted input.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic(Cyclotomic),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(c) => c.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The rational value, if this scalar lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Rational(r) => Some(r.clone()),
            Scalar::Cyclotomic(c) => c.as_rational(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Cyclotomic(c) => FieldSpec::Cyclotomic { order: c.order() },
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.add(b)?),
            (Scalar::Rational(r), Scalar::Cyclotomic(c)) | (Scalar::Cyclotomic(c), Scalar::Rational(r)) => {
                Scalar::Cyclotomic(c.add(&Cyclotomic::from_rational(c.field().clone(), r.clone()))?)
            }
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) => Scalar::Cyclotomic(a.mul(b)?),
            (Scalar::Rational(r), Scalar::Cyclotomic(c)) | (Scalar::Cyclotomic(c), Scalar::Rational(r)) => {
                Scalar::Cyclotomic(c.scale(r))
            }
        })
    }

    pub fn try_inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) if r.is_zero() => Err(Error::DivisionByZero),
            Scalar::Rational(r) => Ok(Scalar::Rational(r.recip())),
            Scalar::Cyclotomic(c) => Ok(Scalar::Cyclotomic(c.inv()?)),
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.try_inv()?)
    }

    /// Inverse; panics on zero. Prefer [`Scalar::try_inv`] for unchecked input.
    pub fn inv(&self) -> Scalar {
        self.try_inv().expect("inverse of zero scalar")
    }

    /// `self^k` for a nonnegative exponent.
    pub fn pow(&self, k: u32) -> Scalar {
        let mut out = Scalar::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Checks that this scalar lives in (or embeds into) `field`.
    pub fn belongs_to(&self, field: &FieldSpec) -> bool {
        match (self, field) {
            (Scalar::Rational(_), _) => true,
            (Scalar::Cyclotomic(c), FieldSpec::Cyclotomic { order }) => c.order() == *order,
            (Scalar::Cyclotomic(c), FieldSpec::Rational) => c.as_rational().is_some(),
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Cyclotomic(a), Scalar::Cyclotomic(b)) if a.order() == b.order() => a == b,
            _ => match (self.as_rational(), other.as_rational()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            },
        }
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rational(r)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(c.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar field mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a += b,
            _ => *self = &*self + rhs,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        match (&mut *self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => *a -= b,
            _ => *self = &*self - rhs,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => fmt_rational(r, f),
            Scalar::Cyclotomic(c) => write!(f, "{c}"),
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p/q` or `p`.
    fn from_str(s: &str) -> Result<Scalar> {
        parse_rational(s).map(Scalar::Rational)
    }
}

/// Parses `c0 + c1*z + c2*z^2 ...` into ℚ(ζₘ).
fn parse_cyclotomic(s: &str, order: u32) -> Result<Scalar> {
    let field = CyclotomicField::get(order)?;
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty scalar".into()));
    }
    let mut terms: Vec<String> = Vec::new();
    let mut current = String::new();
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && !current.is_empty() && !current.ends_with('^') {
            terms.push(std::mem::take(&mut current));
        }
        current.push(ch);
    }
    terms.push(current);

    let mut coeffs: Vec<BigRational> = Vec::new();
    for term in terms {
        let (sign, body) = match term.strip_prefix('-') {
            Some(rest) => (-BigRational::one(), rest),
            None => (BigRational::one(), term.strip_prefix('+').unwrap_or(&term)),
        };
        let (coef, power) = match body.find('z') {
            None => (parse_rational(body)?, 0usize),
            Some(pos) => {
                let head = body[..pos].trim_end_matches('*');
                let coef = if head.is_empty() { BigRational::one() } else { parse_rational(head)? };
                let tail = &body[pos + 1..];
                let power = if tail.is_empty() {
                    1
                } else {
                    tail.strip_prefix('^')
                        .and_then(|p| p.parse::<usize>().ok())
                        .ok_or_else(|| Error::Parse(format!("invalid power in '{body}'")))?
                };
                (coef, power)
            }
        };
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += sign * coef;
    }
    Ok(Scalar::Cyclotomic(Cyclotomic::new(field, coeffs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(p: i64, d: i64) -> Scalar {
        Scalar::ratio(p, d)
    }

    #[test]
    fn rational_examples() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
        assert_eq!(q(-2, 7).try_inv().unwrap(), q(-7, 2));
        assert_eq!(q(4, 6).to_string(), "2/3");
        assert_eq!(q(-3, 1).to_string(), "-3");
        assert_eq!(q(0, 1).try_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let field = FieldSpec::Cyclotomic { order: 4 };
        let z = field.zeta().unwrap();
        assert_eq!(&z * &z, Scalar::from_int(-1));
        assert_eq!((&z * &z).to_string(), "-1");
    }

    #[test]
    fn mixed_fields_mismatch() {
        let z3 = FieldSpec::Cyclotomic { order: 3 }.zeta().unwrap();
        let z4 = FieldSpec::Cyclotomic { order: 4 }.zeta().unwrap();
        assert!(matches!(z3.try_add(&z4), Err(Error::FieldMismatch(_, _))));
        assert!(matches!(z3.try_mul(&z4), Err(Error::FieldMismatch(_, _))));
        // rationals embed into any cyclotomic field
        assert!(z3.try_add(&q(1, 2)).is_ok());
    }

    #[test]
    fn parse_cyclotomic_strings() {
        let f = FieldSpec::Cyclotomic { order: 3 };
        let a = f.parse("1/2 - 3*z").unwrap();
        assert_eq!(a.to_string(), "1/2 - 3*z");
        // z^2 reduces to -1 - z
        assert_eq!(f.parse("z^2").unwrap(), f.parse("-1-z").unwrap());
        assert_eq!(f.parse("2").unwrap(), Scalar::from_int(2));
        assert!(f.parse("2*w").is_err());
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("abc".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert_eq!("-4/6".parse::<Scalar>().unwrap(), q(-2, 3));
    }

    fn cyclo_strategy(order: u32) -> impl Strategy<Value = Scalar> {
        let deg = CyclotomicField::get(order).unwrap().degree();
        prop::collection::vec((-20i64..20, 1i64..6), deg).prop_map(move |cs| {
            let field = CyclotomicField::get(order).unwrap();
            let coeffs = cs
                .into_iter()
                .map(|(p, d)| BigRational::new(p.into(), d.into()))
                .collect();
            Scalar::Cyclotomic(Cyclotomic::new(field, coeffs))
        })
    }

    proptest! {
        #[test]
        fn rational_inverse_roundtrip(p in -1000i64..1000, d in 1i64..1000) {
            prop_assume!(p != 0);
            let a = q(p, d);
            prop_assert_eq!(&a * &a.inv(), Scalar::one());
        }

        #[test]
        fn cyclotomic_inverse_roundtrip(a in cyclo_strategy(5)) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(&a * &a.inv(), Scalar::one());
        }

        #[test]
        fn cyclotomic_display_parse_roundtrip(a in cyclo_strategy(7)) {
            let f = FieldSpec::Cyclotomic { order: 7 };
            prop_assert_eq!(f.parse(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn cyclotomic_distributive(a in cyclo_strategy(8), b in cyclo_strategy(8), c in cyclo_strategy(8)) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}
