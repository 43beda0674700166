//! Rational functions of the deformation variable.
//!
//! Every scalar lives over a fixed base denominator `L` with `v = q^(1/L)`,
//! so that half-integer (and, for the su(3) work, third- and quarter-integer)
//! powers of `q` are honest Laurent monomials in `v`. Values with different
//! `L` never mix.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::ZPoly;
use super::QError as QArithError;

/// Exact rational function of `v = q^(1/L)`:
/// `value = v^shift * num(v) / den(v)`.
///
/// Canonical form: if `num` is zero then `shift = 0, den = 1`; otherwise both
/// `num` and `den` have a nonzero constant term, `gcd(num, den) = 1` over Q,
/// the integer contents of `num` and `den` are coprime, and `den` has positive
/// leading coefficient. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QScalar {
    shift: i64,
    num: ZPoly,
    den: ZPoly,
    l: u32,
}

impl QScalar {
    pub fn base_l(&self) -> u32 {
        self.l
    }

    pub fn zero(l: u32) -> Self {
        QScalar {
            shift: 0,
            num: ZPoly::zero(),
            den: ZPoly::one(),
            l,
        }
    }

    pub fn one(l: u32) -> Self {
        QScalar {
            shift: 0,
            num: ZPoly::one(),
            den: ZPoly::one(),
            l,
        }
    }

    pub fn from_int(n: i64, l: u32) -> Self {
        QScalar::from_bigint(BigInt::from(n), l)
    }

    pub fn from_bigint(n: BigInt, l: u32) -> Self {
        if n.is_zero() {
            return QScalar::zero(l);
        }
        QScalar {
            shift: 0,
            num: ZPoly::constant(n),
            den: ZPoly::one(),
            l,
        }
    }

    pub fn from_rational(r: &BigRational, l: u32) -> Self {
        QScalar::make(
            0,
            ZPoly::constant(r.numer().clone()),
            ZPoly::constant(r.denom().clone()),
            l,
        )
    }

    /// The monomial `v^e`.
    pub fn v_pow(e: i64, l: u32) -> Self {
        QScalar {
            shift: e,
            num: ZPoly::one(),
            den: ZPoly::one(),
            l,
        }
    }

    /// `q^(twice/2)` for a half-integer exponent stored doubled.
    /// Errors when `twice * L` is odd, i.e. the power is not a `v`-monomial.
    pub fn q_pow_half(twice: i64, l: u32) -> Result<Self, QArithError> {
        let e2 = twice * l as i64;
        if e2 % 2 != 0 {
            return Err(QArithError::ExponentNotRepresentable { twice, l });
        }
        Ok(QScalar::v_pow(e2 / 2, l))
    }

    /// Construct from raw parts and canonicalize.
    pub fn make(shift: i64, num: ZPoly, den: ZPoly, l: u32) -> Self {
        assert!(!den.is_zero(), "zero denominator in QScalar");
        if num.is_zero() {
            return QScalar::zero(l);
        }
        let mut shift = shift;
        let mut num = num;
        let mut den = den;
        // pull v-powers out of both polynomials
        let vn = num.valuation();
        if vn > 0 {
            num = num.shr_pow(vn);
            shift += vn as i64;
        }
        let vd = den.valuation();
        if vd > 0 {
            den = den.shr_pow(vd);
            shift -= vd as i64;
        }
        // cancel the polynomial gcd
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g);
            den = den.div_exact(&g);
        }
        // normalize contents: coprime integer contents, positive denominator lead
        let (num_p, mut cn) = num.primitive();
        let (den_p, mut cd) = den.primitive();
        if cd.is_negative() {
            cn = -cn;
            cd = -cd;
        }
        let g = cn.gcd(&cd);
        cn /= &g;
        cd /= &g;
        QScalar {
            shift,
            num: num_p.mul_scalar(&cn),
            den: den_p.mul_scalar(&cd),
            l,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1 (a Laurent polynomial in `v`).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    fn assert_same_l(&self, other: &QScalar) {
        assert_eq!(
            self.l, other.l,
            "mixed base denominators: L={} vs L={}",
            self.l, other.l
        );
    }

    pub fn inv(&self) -> Result<QScalar, QArithError> {
        if self.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        Ok(QScalar::make(
            -self.shift,
            self.den.clone(),
            self.num.clone(),
            self.l,
        ))
    }

    pub fn pow(&self, e: i64) -> Result<QScalar, QArithError> {
        if e == 0 {
            return Ok(QScalar::one(self.l));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = QScalar::one(self.l);
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(acc)
    }

    /// Substitute `v -> 1/v`, realizing `q -> 1/q`.
    pub fn bar(&self) -> QScalar {
        let rev = |p: &ZPoly| ZPoly::new(p.coeffs().iter().rev().cloned().collect());
        let dn = self.num.degree() as i64;
        let dd = self.den.degree() as i64;
        QScalar::make(-self.shift - dn + dd, rev(&self.num), rev(&self.den), self.l)
    }

    /// Exact rational value when this scalar is constant in `v`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.shift == 0 && self.num.degree() == 0 && self.den.degree() == 0 {
            Some(BigRational::new(self.num.coeff(0), self.den.coeff(0)))
        } else {
            None
        }
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, other: &QScalar) -> QScalar {
        self.assert_same_l(other);
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let s = self.shift.min(other.shift);
        let a = self
            .num
            .shl_pow((self.shift - s) as usize)
            .mul(&other.den);
        let b = other
            .num
            .shl_pow((other.shift - s) as usize)
            .mul(&self.den);
        QScalar::make(s, a.add(&b), self.den.mul(&other.den), self.l)
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, other: &QScalar) -> QScalar {
        self + &(-other)
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, other: &QScalar) -> QScalar {
        self.assert_same_l(other);
        if self.is_zero() || other.is_zero() {
            return QScalar::zero(self.l);
        }
        QScalar::make(
            self.shift + other.shift,
            self.num.mul(&other.num),
            self.den.mul(&other.den),
            self.l,
        )
    }
}

impl Div for &QScalar {
    type Output = QScalar;
    fn div(self, other: &QScalar) -> QScalar {
        self.assert_same_l(other);
        assert!(!other.is_zero(), "division by zero QScalar");
        QScalar::make(
            self.shift - other.shift,
            self.num.mul(&other.den),
            self.den.mul(&other.num),
            self.l,
        )
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            shift: self.shift,
            num: self.num.neg(),
            den: self.den.clone(),
            l: self.l,
        }
    }
}

fn fmt_laurent(f: &mut fmt::Formatter<'_>, p: &ZPoly, shift: i64) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let e = i as i64 + shift;
        if first {
            first = false;
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let a = c.abs();
        if e == 0 {
            write!(f, "{}", a)?;
        } else if a.is_one() {
            write!(f, "v^{}", e)?;
        } else {
            write!(f, "{}*v^{}", a, e)?;
        }
    }
    Ok(())
}

/// Serialized as `num / den` in sparse monomial form, highest exponent first.
impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_laurent(f, &self.num, self.shift)?;
        if !self.den.is_one() {
            write!(f, " / ")?;
            fmt_laurent(f, &self.den, 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_roundtrip() {
        let l = 2;
        // (v^2 - 1)/(v - 1) canonicalizes to v + 1
        let num = ZPoly::new(vec![BigInt::from(-1), BigInt::from(0), BigInt::from(1)]);
        let den = ZPoly::new(vec![BigInt::from(-1), BigInt::from(1)]);
        let s = QScalar::make(0, num, den, l);
        assert!(s.is_laurent());
        assert_eq!(format!("{}", s), "v^1 + 1");
    }

    #[test]
    fn field_ops() {
        let l = 2;
        let a = QScalar::v_pow(3, l);
        let b = QScalar::v_pow(-3, l);
        let one = QScalar::one(l);
        assert_eq!(&(&a * &b), &one);
        let c = &a + &b;
        let d = &c - &a;
        assert_eq!(d, b);
        let e = &c / &c;
        assert_eq!(e, one);
    }

    #[test]
    fn bar_involution() {
        let l = 2;
        let a = &QScalar::v_pow(4, l) + &QScalar::from_int(3, l);
        assert_eq!(a.bar().bar(), a);
        // q + q^-1 is bar-invariant
        let s = &QScalar::v_pow(2, l) + &QScalar::v_pow(-2, l);
        assert_eq!(s.bar(), s);
    }

    #[test]
    fn mixed_l_panics() {
        let a = QScalar::one(2);
        let b = QScalar::one(4);
        let r = std::panic::catch_unwind(|| &a + &b);
        assert!(r.is_err());
    }
}
