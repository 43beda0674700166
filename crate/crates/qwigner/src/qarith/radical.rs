//! Canonical `coeff * sqrt(radicand)` values.
//!
//! The radicand is kept squarefree (polynomial part by Yun decomposition,
//! integer content by trial-division) so equality of radicands is structural
//! and addition is decidable: either the radicands match or the sum is not
//! representable in this form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::poly::ZPoly;
use super::scalar::QScalar;
use super::QError as QArithError;

/// `coeff * sqrt(radicand)`, principal branch for real q > 1.
/// Zero is uniquely `(0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalValue {
    coeff: QScalar,
    radicand: QScalar,
}

/// Integer squarefree split: `n = sign * square^2 * free` with `free`
/// squarefree positive. Primes up to the trial bound are fully extracted;
/// a perfect-square remainder is also caught. Larger square factors of a
/// non-square remainder are left in place (harmless: canonical form just
/// keeps a coarser radicand, consistently).
fn int_squarefree_split(n: &BigInt) -> (BigInt, BigInt) {
    if n.is_zero() {
        return (BigInt::one(), BigInt::zero());
    }
    let neg = n.is_negative();
    let mut m = n.abs();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(100_000u32);
    while &p * &p <= m && p <= bound {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            for _ in 0..(e / 2) {
                square *= &p;
            }
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if !m.is_one() {
        let r = m.sqrt();
        if &r * &r == m {
            square *= r;
        } else {
            free *= m;
        }
    }
    if neg {
        free = -free;
    }
    (square, free)
}

impl RadicalValue {
    pub fn zero(l: u32) -> Self {
        RadicalValue {
            coeff: QScalar::zero(l),
            radicand: QScalar::one(l),
        }
    }

    pub fn one(l: u32) -> Self {
        RadicalValue {
            coeff: QScalar::one(l),
            radicand: QScalar::one(l),
        }
    }

    pub fn base_l(&self) -> u32 {
        self.coeff.base_l()
    }

    pub fn from_scalar(c: QScalar) -> Self {
        let l = c.base_l();
        if c.is_zero() {
            return RadicalValue::zero(l);
        }
        RadicalValue {
            coeff: c,
            radicand: QScalar::one(l),
        }
    }

    /// `sqrt(x)` as a canonical radical value.
    pub fn sqrt_of(x: &QScalar) -> Self {
        RadicalValue::canonical(QScalar::one(x.base_l()), x.clone())
    }

    /// Canonicalize `coeff * sqrt(radicand)`. The denominator is
    /// rationalized into the coefficient (`sqrt(N/D) = sqrt(N D)/D`) and all
    /// square factors (polynomial, integer content, v-powers) migrate out,
    /// leaving a squarefree Laurent-polynomial radicand. Values differing by
    /// a perfect-square factor therefore share one radicand, which is what
    /// makes addition decidable.
    pub fn canonical(coeff: QScalar, radicand: QScalar) -> Self {
        let l = coeff.base_l();
        if coeff.is_zero() || radicand.is_zero() {
            return RadicalValue::zero(l);
        }
        let mut c = coeff;

        // v^shift: move the even part out
        let shift = radicand.shift();
        let half = shift.div_euclid(2);
        let rem = shift.rem_euclid(2);
        if half != 0 {
            c = &c * &QScalar::v_pow(half, l);
        }

        // rationalize: sqrt(N/D) = (1/D) sqrt(N*D)
        if !radicand.den().is_one() {
            c = &c / &QScalar::make(0, radicand.den().clone(), ZPoly::one(), l);
        }
        let p = radicand.num().mul(radicand.den());
        let (kernel, square) = p.squarefree_split();
        let (_, content) = p.primitive();
        let (ct_sq, ct_free) = int_squarefree_split(&content);

        c = &c * &QScalar::make(0, square.mul_scalar(&ct_sq), ZPoly::one(), l);
        let rad = QScalar::make(rem, kernel.mul_scalar(&ct_free), ZPoly::one(), l);
        if c.is_zero() {
            return RadicalValue::zero(l);
        }
        RadicalValue { coeff: c, radicand: rad }
    }

    pub fn coeff(&self) -> &QScalar {
        &self.coeff
    }

    pub fn radicand(&self) -> &QScalar {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// True if the radicand is 1, i.e. the value is an honest rational function.
    pub fn is_scalar(&self) -> bool {
        self.radicand.is_one()
    }

    /// The square of the value, always a plain scalar.
    pub fn square(&self) -> QScalar {
        &(&self.coeff * &self.coeff) * &self.radicand
    }

    pub fn mul(&self, other: &RadicalValue) -> RadicalValue {
        if self.is_zero() || other.is_zero() {
            return RadicalValue::zero(self.base_l());
        }
        RadicalValue::canonical(
            &self.coeff * &other.coeff,
            &self.radicand * &other.radicand,
        )
    }

    pub fn scale(&self, s: &QScalar) -> RadicalValue {
        if s.is_zero() || self.is_zero() {
            return RadicalValue::zero(self.base_l());
        }
        RadicalValue {
            coeff: &self.coeff * s,
            radicand: self.radicand.clone(),
        }
    }

    pub fn neg(&self) -> RadicalValue {
        if self.is_zero() {
            return self.clone();
        }
        RadicalValue {
            coeff: -&self.coeff,
            radicand: self.radicand.clone(),
        }
    }

    pub fn add(&self, other: &RadicalValue) -> Result<RadicalValue, QArithError> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != other.radicand {
            return Err(QArithError::RadicalMismatch {
                left: self.radicand.to_string(),
                right: other.radicand.to_string(),
            });
        }
        let c = &self.coeff + &other.coeff;
        if c.is_zero() {
            return Ok(RadicalValue::zero(self.base_l()));
        }
        Ok(RadicalValue {
            coeff: c,
            radicand: self.radicand.clone(),
        })
    }

    pub fn sub(&self, other: &RadicalValue) -> Result<RadicalValue, QArithError> {
        self.add(&other.neg())
    }

    pub fn inv(&self) -> Result<RadicalValue, QArithError> {
        if self.is_zero() {
            return Err(QArithError::DivisionByZero);
        }
        // 1/(c sqrt(r)) = (1/(c r)) sqrt(r)
        let den = &self.coeff * &self.radicand;
        Ok(RadicalValue {
            coeff: den.inv()?,
            radicand: self.radicand.clone(),
        })
    }

    pub fn div(&self, other: &RadicalValue) -> Result<RadicalValue, QArithError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Substitute q -> 1/q.
    pub fn bar(&self) -> RadicalValue {
        RadicalValue::canonical(self.coeff.bar(), self.radicand.bar())
    }
}

/// JSON shape for a radical value; `float` is filled by evaluation contexts
/// that know the numeric q, otherwise null.
#[derive(Serialize)]
pub struct RadicalJson {
    pub coeff: String,
    pub radicand: String,
    #[serde(rename = "L")]
    pub l: u32,
    pub float: Option<String>,
}

impl RadicalValue {
    pub fn to_json(&self, float: Option<String>) -> RadicalJson {
        RadicalJson {
            coeff: self.coeff.to_string(),
            radicand: self.radicand.to_string(),
            l: self.base_l(),
            float,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_migrate() {
        let l = 2;
        let r = QScalar::v_pow(2, l); // sqrt(v^2) = v
        let x = RadicalValue::sqrt_of(&r);
        assert!(x.is_scalar());
        assert_eq!(x.coeff(), &QScalar::v_pow(1, l));
    }

    #[test]
    fn product_of_same_radicand() {
        let l = 2;
        let two = QScalar::from_int(2, l);
        let a = RadicalValue::sqrt_of(&two);
        let p = a.mul(&a);
        assert!(p.is_scalar());
        assert_eq!(p.coeff(), &two);
    }

    #[test]
    fn int_content_squares() {
        let l = 2;
        let x = RadicalValue::sqrt_of(&QScalar::from_int(12, l));
        // sqrt(12) = 2 sqrt(3)
        assert_eq!(x.coeff(), &QScalar::from_int(2, l));
        assert_eq!(x.radicand(), &QScalar::from_int(3, l));
    }

    #[test]
    fn mismatch_detected() {
        let l = 2;
        let a = RadicalValue::sqrt_of(&QScalar::from_int(2, l));
        let b = RadicalValue::sqrt_of(&QScalar::from_int(3, l));
        assert!(a.add(&b).is_err());
        assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn division_closes() {
        let l = 2;
        let a = RadicalValue::sqrt_of(&QScalar::from_int(2, l));
        let q = a.div(&a).unwrap();
        assert_eq!(q, RadicalValue::one(l));
    }
}
