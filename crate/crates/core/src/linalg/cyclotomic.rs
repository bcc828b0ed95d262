//! Arithmetic in the cyclotomic fields ℚ(ζₘ).
//!
//! Elements are polynomials in `z = ζₘ` of degree below φ(m) with rational
//! coefficients, always reduced modulo the m-th cyclotomic polynomial Φₘ.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};

/// The field ℚ(ζₘ), carrying its defining polynomial Φₘ.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    /// Coefficients of Φₘ, lowest degree first; monic.
    modulus: Vec<BigRational>,
}

fn field_cache() -> &'static Mutex<HashMap<u32, Arc<CyclotomicField>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

impl CyclotomicField {
    /// Returns the shared field ℚ(ζₘ). `order` must be at least 1.
    pub fn get(order: u32) -> Result<Arc<CyclotomicField>> {
        if order == 0 {
            return Err(Error::Parse("cyclotomic order must be positive".into()));
        }
        let mut cache = field_cache().lock().expect("cyclotomic cache poisoned");
        if let Some(f) = cache.get(&order) {
            return Ok(f.clone());
        }
        let modulus = cyclotomic_polynomial(order)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let field = Arc::new(CyclotomicField { order, modulus });
        cache.insert(order, field.clone());
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(m), the dimension of the field over ℚ.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigRational] {
        &self.modulus
    }

    fn reduce(&self, mut poly: Vec<BigRational>) -> Vec<BigRational> {
        let deg = self.degree();
        while poly.len() > deg {
            let top = poly.pop().expect("nonempty");
            if top.is_zero() {
                continue;
            }
            let shift = poly.len() - deg;
            for (i, m) in self.modulus[..deg].iter().enumerate() {
                poly[shift + i] -= &top * m;
            }
        }
        trim(&mut poly);
        poly
    }
}

/// Integer coefficients of Φₘ, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    // x^m - 1 divided by every Φ_d with d | m, d < m
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = exact_monic_div(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

fn trim(poly: &mut Vec<BigRational>) {
    while poly.last().is_some_and(Zero::is_zero) {
        poly.pop();
    }
}

/// An element of ℚ(ζₘ).
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Cyclotomic {
    pub fn new(field: Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Self {
        let coeffs = field.reduce(coeffs);
        Cyclotomic { field, coeffs }
    }

    pub fn from_rational(field: Arc<CyclotomicField>, r: BigRational) -> Self {
        Self::new(field, vec![r])
    }

    /// The generator ζₘ.
    pub fn zeta(field: Arc<CyclotomicField>) -> Self {
        Self::new(field, vec![BigRational::zero(), BigRational::one()])
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Reduced coefficients, lowest degree first, without trailing zeros.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The rational value, if the element lies in ℚ.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn check_field(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::FieldMismatch(
                format!("Q(z{})", self.field.order),
                format!("Q(z{})", other.field.order),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        trim(&mut out);
        Ok(Cyclotomic { field: self.field.clone(), coeffs: out })
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Cyclotomic { field: self.field.clone(), coeffs: Vec::new() });
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(Cyclotomic { field: self.field.clone(), coeffs: self.field.reduce(out) })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        let mut coeffs: Vec<BigRational> = self.coeffs.iter().map(|c| c * r).collect();
        trim(&mut coeffs);
        Cyclotomic { field: self.field.clone(), coeffs }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in ℚ[z].
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // invariant: s * a ≡ r (mod Φ)
        let mut r0 = self.field.modulus.clone();
        let mut r1 = self.coeffs.clone();
        let mut s0: Vec<BigRational> = Vec::new();
        let mut s1 = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since Φ is irreducible
        let c = r1[0].recip();
        let coeffs = s1.iter().map(|x| x * &c).collect();
        Ok(Cyclotomic::new(self.field.clone(), coeffs))
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let db = b.len() - 1;
    let lead = b[db].recip();
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (i, y) in b.iter().enumerate() {
            rem[k + i] -= &c * y;
        }
        quot[k] = c;
    }
    trim(&mut rem);
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Writes `c0 + c1*z + c2*z^2 ...`, skipping zero terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => fmt_rational(&mag, f)?,
                _ => {
                    if !mag.is_one() {
                        fmt_rational(&mag, f)?;
                        write!(f, "*")?;
                    }
                    if k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), ints(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(8), ints(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn zeta_has_order_m() {
        for m in [3u32, 4, 5, 6, 7, 8, 12] {
            let field = CyclotomicField::get(m).unwrap();
            let z = Cyclotomic::zeta(field.clone());
            let mut p = Cyclotomic::from_rational(field.clone(), BigRational::one());
            for k in 1..=m {
                p = p.mul(&z).unwrap();
                assert_eq!(p.as_rational() == Some(BigRational::one()), k == m, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn inverse_of_one_plus_zeta() {
        let field = CyclotomicField::get(5).unwrap();
        let one = Cyclotomic::from_rational(field.clone(), BigRational::one());
        let a = one.add(&Cyclotomic::zeta(field)).unwrap();
        let prod = a.mul(&a.inv().unwrap()).unwrap();
        assert_eq!(prod, one);
    }

    #[test]
    fn display_polynomial_form() {
        let field = CyclotomicField::get(3).unwrap();
        let z = Cyclotomic::zeta(field.clone());
        // z^2 = -1 - z
        assert_eq!(z.mul(&z).unwrap().to_string(), "-1 - z");
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(z.scale(&half).to_string(), "1/2*z");
    }
}
