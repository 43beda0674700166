//! Evaluation backends: the symbolic q -> 1 limit, exact substitution at
//! rational q, and a fixed-point big-integer float backend (at least 100
//! working bits) for values whose q-powers are not rational at the chosen
//! point.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::ZPoly;
use super::radical::RadicalValue;
use super::scalar::QScalar;
use super::{QError, QResult};

/// q -> 1 limit of a scalar: cancels the common (v - 1) structure of
/// numerator and denominator before substituting, so every q-integer [k]
/// degenerates to k exactly.
pub fn limit_one_scalar(s: &QScalar) -> QResult<BigRational> {
    if s.is_zero() {
        return Ok(BigRational::zero());
    }
    let mut num = s.num().clone();
    let mut den = s.den().clone();
    let one = BigInt::one();
    let mut num_val = num.eval_int(&one);
    let mut den_val = den.eval_int(&one);
    while num_val.is_zero() && den_val.is_zero() {
        num = num.div_v_minus_one();
        den = den.div_v_minus_one();
        num_val = num.eval_int(&one);
        den_val = den.eval_int(&one);
    }
    while num_val.is_zero() {
        num = num.div_v_minus_one();
        num_val = num.eval_int(&one);
    }
    if den_val.is_zero() {
        return Err(QError::PoleAtPoint);
    }
    Ok(BigRational::new(num_val, den_val))
}

/// q -> 1 limit of a radical value as the exact pair (c(1), r(1)).
pub fn limit_one_radical(r: &RadicalValue) -> QResult<(BigRational, BigRational)> {
    let c = limit_one_scalar(r.coeff())?;
    let rad = limit_one_scalar(r.radicand())?;
    if rad.is_negative() && !c.is_zero() {
        return Err(QError::NegativeRadicand);
    }
    Ok((c, rad))
}

/// Exact substitution at rational q0: succeeds only when every v-exponent is
/// a multiple of L, i.e. the scalar is a rational function of q itself.
pub fn eval_scalar_rational(s: &QScalar, q0: &BigRational) -> QResult<Option<BigRational>> {
    let l = s.base_l() as i64;
    if s.is_zero() {
        return Ok(Some(BigRational::zero()));
    }
    if s.shift().rem_euclid(l) != 0 {
        return Ok(None);
    }
    let eval_poly = |p: &ZPoly| -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if (i as i64) % l != 0 {
                return None;
            }
            let e = (i as i64) / l;
            acc += BigRational::from(c.clone()) * pow_rational(q0, e);
        }
        Some(acc)
    };
    let num = match eval_poly(s.num()) {
        Some(x) => x,
        None => return Ok(None),
    };
    let den = match eval_poly(s.den()) {
        Some(x) => x,
        None => return Ok(None),
    };
    if den.is_zero() {
        return Err(QError::PoleAtPoint);
    }
    let shift_pow = pow_rational(q0, s.shift() / l);
    Ok(Some(shift_pow * num / den))
}

fn pow_rational(q: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let base = if e < 0 { q.recip() } else { q.clone() };
    let mut acc = BigRational::one();
    for _ in 0..e.unsigned_abs() {
        acc *= &base;
    }
    acc
}

/// Fixed-point real number `mantissa / 2^bits`.
#[derive(Clone, Debug)]
pub struct Fixed {
    pub mantissa: BigInt,
    pub bits: u32,
}

impl Fixed {
    pub fn zero(bits: u32) -> Self {
        Fixed { mantissa: BigInt::zero(), bits }
    }

    pub fn from_bigint(n: &BigInt, bits: u32) -> Self {
        Fixed { mantissa: n << bits, bits }
    }

    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        let scaled = (r.numer() << bits) / r.denom();
        Fixed { mantissa: scaled, bits }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn mul(&self, o: &Fixed) -> Fixed {
        debug_assert_eq!(self.bits, o.bits);
        Fixed {
            mantissa: (&self.mantissa * &o.mantissa) >> self.bits,
            bits: self.bits,
        }
    }

    pub fn div(&self, o: &Fixed) -> QResult<Fixed> {
        if o.mantissa.is_zero() {
            return Err(QError::PoleAtPoint);
        }
        Ok(Fixed {
            mantissa: (&self.mantissa << self.bits) / &o.mantissa,
            bits: self.bits,
        })
    }

    pub fn add(&self, o: &Fixed) -> Fixed {
        Fixed {
            mantissa: &self.mantissa + &o.mantissa,
            bits: self.bits,
        }
    }

    pub fn neg(&self) -> Fixed {
        Fixed { mantissa: -&self.mantissa, bits: self.bits }
    }

    /// Principal square root; errors on negative input.
    pub fn sqrt(&self) -> QResult<Fixed> {
        if self.mantissa.is_negative() {
            return Err(QError::NegativeRadicand);
        }
        Ok(Fixed {
            mantissa: (&self.mantissa << self.bits).sqrt(),
            bits: self.bits,
        })
    }

    /// n-th root of a nonnegative value.
    pub fn nth_root(&self, n: u32) -> QResult<Fixed> {
        if self.mantissa.is_negative() {
            return Err(QError::NegativeRadicand);
        }
        let shifted = &self.mantissa << (self.bits * (n - 1));
        Ok(Fixed { mantissa: shifted.nth_root(n), bits: self.bits })
    }

    pub fn powi(&self, e: i64) -> QResult<Fixed> {
        let one = Fixed::from_bigint(&BigInt::one(), self.bits);
        if e == 0 {
            return Ok(one);
        }
        let base = if e < 0 { one.div(self)? } else { self.clone() };
        let mut acc = one;
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            k >>= 1;
        }
        Ok(acc)
    }

    pub fn to_f64(&self) -> f64 {
        let num = self.mantissa.to_f64().unwrap_or(f64::NAN);
        num / 2f64.powi(self.bits as i32)
    }

    /// Decimal string with the given number of fractional digits.
    pub fn to_decimal(&self, digits: usize) -> String {
        let neg = self.mantissa.is_negative();
        let m = self.mantissa.abs();
        let int_part = &m >> self.bits;
        let frac = &m - (&int_part << self.bits);
        let scale = BigInt::from(10u32).pow(digits as u32);
        let frac_digits = (&frac * &scale) >> self.bits;
        let mut s = format!("{}.{:0>width$}", int_part, frac_digits, width = digits);
        // trim trailing zeros but keep one digit
        while s.ends_with('0') && !s.ends_with(".0") {
            s.pop();
        }
        if neg && !m.is_zero() {
            s.insert(0, '-');
        }
        s
    }

    /// |self - o| <= tol where tol is given as a rational.
    pub fn close_to(&self, o: &Fixed, tol: &BigRational) -> bool {
        let diff = (&self.mantissa - &o.mantissa).abs();
        // diff / 2^bits <= tol  <=>  diff * tol.den <= tol.num * 2^bits
        &diff * tol.denom() <= (tol.numer() << self.bits)
    }

    pub fn abs(&self) -> Fixed {
        Fixed { mantissa: self.mantissa.abs(), bits: self.bits }
    }

    pub fn sign(&self) -> Sign {
        self.mantissa.sign()
    }
}

/// Floating evaluation context at a fixed rational q0 > 0.
pub struct FloatCtx {
    q0: BigRational,
    l: u32,
    bits: u32,
    v0: Fixed,
}

impl FloatCtx {
    /// Working precision is `bits` plus guard bits; `bits` is clamped below
    /// at 100 per the interface contract.
    pub fn new(q0: BigRational, l: u32, bits: u32) -> QResult<FloatCtx> {
        if !q0.is_positive() {
            return Err(QError::Other("q0 must be positive".into()));
        }
        if q0.is_one() {
            return Err(QError::Other(
                "q0 = 1 is the limit point; use the limit-one backend".into(),
            ));
        }
        let bits = bits.max(100) + 64;
        let q0f = Fixed::from_rational(&q0, bits);
        let v0 = q0f.nth_root(l)?;
        Ok(FloatCtx { q0, l, bits, v0 })
    }

    pub fn precision_bits(&self) -> u32 {
        self.bits - 64
    }

    pub fn q0(&self) -> &BigRational {
        &self.q0
    }

    fn eval_zpoly(&self, p: &ZPoly) -> Fixed {
        let mut acc = Fixed::zero(self.bits);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(&self.v0);
            if !c.is_zero() {
                acc = acc.add(&Fixed::from_bigint(c, self.bits));
            }
        }
        acc
    }

    pub fn eval_scalar(&self, s: &QScalar) -> QResult<Fixed> {
        assert_eq!(s.base_l(), self.l, "context mismatch in float evaluation");
        if s.is_zero() {
            return Ok(Fixed::zero(self.bits));
        }
        let num = self.eval_zpoly(s.num());
        let den = self.eval_zpoly(s.den());
        if den.mantissa.is_zero() {
            return Err(QError::PoleAtPoint);
        }
        let frac = num.div(&den)?;
        let shift = self.v0.powi(s.shift())?;
        Ok(frac.mul(&shift))
    }

    pub fn eval_radical(&self, r: &RadicalValue) -> QResult<Fixed> {
        if r.is_zero() {
            return Ok(Fixed::zero(self.bits));
        }
        let c = self.eval_scalar(r.coeff())?;
        let rad = self.eval_scalar(r.radicand())?;
        if rad.mantissa.is_negative() {
            return Err(QError::NegativeRadicand);
        }
        Ok(c.mul(&rad.sqrt()?))
    }

    /// Decimal rendering at roughly the full working precision.
    pub fn decimal(&self, x: &Fixed) -> String {
        let digits = (self.precision_bits() as f64 * 0.301).floor() as usize;
        x.to_decimal(digits.max(6))
    }
}

/// Exact evaluation result of a radical value at rational q0.
pub struct ExactEval {
    /// (c(q0), r(q0)) when both parts are rational functions of q.
    pub pair: Option<(BigRational, BigRational)>,
    /// Decimal rendering of c(q0) sqrt(r(q0)) at the context precision.
    pub decimal: String,
    pub float: f64,
}

/// Evaluate a radical value at rational q0 with both exact and float output.
/// The exact pair is produced when the coefficient and radicand are rational
/// functions of q; otherwise only the extended-precision float is available.
pub fn eval_radical_at(r: &RadicalValue, fctx: &FloatCtx) -> QResult<ExactEval> {
    let pair = match (
        eval_scalar_rational(r.coeff(), fctx.q0())?,
        eval_scalar_rational(r.radicand(), fctx.q0())?,
    ) {
        (Some(c), Some(rad)) => {
            if rad.is_negative() && !c.is_zero() {
                return Err(QError::NegativeRadicand);
            }
            Some((c, rad))
        }
        _ => None,
    };
    let f = fctx.eval_radical(r)?;
    Ok(ExactEval {
        pair,
        decimal: fctx.decimal(&f),
        float: f.to_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::qfun::qint;
    use crate::qarith::HalfInt;

    #[test]
    fn limit_one_of_qint() {
        let l = 2;
        for t in -20..=20i64 {
            let s = qint(HalfInt::new(t), l).unwrap();
            let lim = limit_one_scalar(&s).unwrap();
            assert_eq!(lim, BigRational::new(BigInt::from(t), BigInt::from(2)));
        }
    }

    #[test]
    fn limit_one_radical_sqrt2() {
        let l = 2;
        let two = qint(HalfInt::from_int(2), l).unwrap();
        let r = RadicalValue::sqrt_of(&two);
        let (c, rad) = limit_one_radical(&r).unwrap();
        assert_eq!(c, BigRational::one());
        assert_eq!(rad, BigRational::from(BigInt::from(2)));
    }

    #[test]
    fn eval_qint_at_two() {
        // [2] at q = 2 is 2 + 1/2 = 5/2
        let l = 2;
        let s = qint(HalfInt::from_int(2), l).unwrap();
        let q0 = BigRational::from(BigInt::from(2));
        let v = eval_scalar_rational(&s, &q0).unwrap().unwrap();
        assert_eq!(v, BigRational::new(BigInt::from(5), BigInt::from(2)));
    }

    #[test]
    fn float_backend_sqrt() {
        let l = 4;
        let q0 = BigRational::new(BigInt::from(7), BigInt::from(5));
        let fctx = FloatCtx::new(q0, l, 100).unwrap();
        let two = qint(HalfInt::from_int(2), l).unwrap();
        let r = RadicalValue::sqrt_of(&two);
        let f = fctx.eval_radical(&r).unwrap();
        // sqrt(7/5 + 5/7) = sqrt(74/35)
        let expect = (74f64 / 35f64).sqrt();
        assert!((f.to_f64() - expect).abs() < 1e-12);
    }

    #[test]
    fn fixed_point_roots() {
        let bits = 164;
        let x = Fixed::from_rational(&BigRational::new(BigInt::from(2), BigInt::from(1)), bits);
        let r = x.sqrt().unwrap();
        let two = r.mul(&r);
        let tol = BigRational::new(BigInt::one(), BigInt::from(10u8).pow(30));
        assert!(two.close_to(&x, &tol));
    }
}
