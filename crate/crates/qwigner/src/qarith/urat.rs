//! Rational functions in one auxiliary variable `u` over the QScalar field.
//!
//! Two places need a formal exponential alongside q: the extremal-projector
//! series, whose Cartan denominators only cancel against the numerator sum
//! before the weight is substituted (u = q^h), and the epsilon-deformed
//! projector generating function (u = q^eps). Reduction to lowest terms
//! happens on construction so substitution never meets a spurious 0/0.

use num_traits::Zero;

use super::scalar::QScalar;
use super::{QError, QResult};

/// Laurent polynomial in `u` with QScalar coefficients:
/// `u^shift * sum coeffs[i] u^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ULaurent {
    pub shift: i64,
    pub coeffs: Vec<QScalar>,
    pub l: u32,
}

impl ULaurent {
    pub fn zero(l: u32) -> Self {
        ULaurent { shift: 0, coeffs: Vec::new(), l }
    }

    pub fn constant(c: QScalar) -> Self {
        let l = c.base_l();
        if c.is_zero() {
            return ULaurent::zero(l);
        }
        ULaurent { shift: 0, coeffs: vec![c], l }
    }

    /// `c * u^e`.
    pub fn monomial(c: QScalar, e: i64) -> Self {
        let l = c.base_l();
        if c.is_zero() {
            return ULaurent::zero(l);
        }
        ULaurent { shift: e, coeffs: vec![c], l }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 && lead_zeros < self.coeffs.len() {
            self.coeffs.drain(..lead_zeros);
            self.shift += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.shift = 0;
        }
        self
    }

    pub fn add(&self, o: &ULaurent) -> ULaurent {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let shift = self.shift.min(o.shift);
        let top = (self.shift + self.coeffs.len() as i64).max(o.shift + o.coeffs.len() as i64);
        let mut coeffs = vec![QScalar::zero(self.l); (top - shift) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let k = (self.shift - shift) as usize + i;
            coeffs[k] = &coeffs[k] + c;
        }
        for (i, c) in o.coeffs.iter().enumerate() {
            let k = (o.shift - shift) as usize + i;
            coeffs[k] = &coeffs[k] + c;
        }
        ULaurent { shift, coeffs, l: self.l }.normalize()
    }

    pub fn neg(&self) -> ULaurent {
        ULaurent {
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            l: self.l,
        }
    }

    pub fn mul(&self, o: &ULaurent) -> ULaurent {
        if self.is_zero() || o.is_zero() {
            return ULaurent::zero(self.l);
        }
        let mut coeffs = vec![QScalar::zero(self.l); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        ULaurent { shift: self.shift + o.shift, coeffs, l: self.l }.normalize()
    }

    pub fn scale(&self, c: &QScalar) -> ULaurent {
        if c.is_zero() {
            return ULaurent::zero(self.l);
        }
        ULaurent {
            shift: self.shift,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            l: self.l,
        }
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn leading(&self) -> QScalar {
        self.coeffs.last().cloned().unwrap_or_else(|| QScalar::zero(self.l))
    }

    /// Plain polynomial division over the field Q(v); panics unless the
    /// shifts have been cleared (used only inside gcd on shift-free polys).
    fn divrem(&self, o: &ULaurent) -> (ULaurent, ULaurent) {
        assert!(self.shift == 0 && o.shift == 0 && !o.is_zero());
        let mut rem = self.coeffs.clone();
        while rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
        let d = o.degree();
        let lead = o.leading();
        let mut quo = vec![QScalar::zero(self.l); rem.len().saturating_sub(d)];
        while rem.len() >= d + 1 {
            let k = rem.len() - 1 - d;
            let c = &rem[rem.len() - 1] / &lead;
            if !c.is_zero() {
                quo[k] = c.clone();
                for (i, b) in o.coeffs.iter().enumerate().take(d) {
                    let idx = k + i;
                    rem[idx] = &rem[idx] - &(&c * b);
                }
            }
            rem.pop();
            while rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        let trim = |mut v: Vec<QScalar>| {
            while v.last().map_or(false, |c| c.is_zero()) {
                v.pop();
            }
            v
        };
        (
            ULaurent { shift: 0, coeffs: trim(quo), l: self.l },
            ULaurent { shift: 0, coeffs: trim(rem), l: self.l },
        )
    }

    /// Monic gcd of the shift-free parts.
    fn gcd(&self, o: &ULaurent) -> ULaurent {
        let strip = |p: &ULaurent| ULaurent { shift: 0, coeffs: p.coeffs.clone(), l: p.l };
        let mut a = strip(self);
        let mut b = strip(o);
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn monic(&self) -> ULaurent {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.leading();
        self.scale(&(&QScalar::one(self.l) / &lead))
    }

    /// d/du.
    pub fn derivative(&self) -> ULaurent {
        if self.is_zero() {
            return self.clone();
        }
        let mut out = ULaurent::zero(self.l);
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.shift + i as i64;
            if e == 0 || c.is_zero() {
                continue;
            }
            let t = ULaurent::monomial(c * &QScalar::from_int(e, self.l), e - 1);
            out = out.add(&t);
        }
        out
    }

    /// Substitute `u = q^(t/2)` (t = twice the half-integer exponent).
    pub fn eval_q_pow_half(&self, t: i64) -> QResult<QScalar> {
        let mut acc = QScalar::zero(self.l);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.shift + i as i64;
            acc = &acc + &(c * &QScalar::q_pow_half(t * e, self.l)?);
        }
        Ok(acc)
    }
}

/// Reduced fraction of ULaurent polynomials.
#[derive(Clone, Debug)]
pub struct URat {
    pub num: ULaurent,
    pub den: ULaurent,
}

impl URat {
    pub fn zero(l: u32) -> Self {
        URat {
            num: ULaurent::zero(l),
            den: ULaurent::constant(QScalar::one(l)),
        }
    }

    pub fn one(l: u32) -> Self {
        URat {
            num: ULaurent::constant(QScalar::one(l)),
            den: ULaurent::constant(QScalar::one(l)),
        }
    }

    pub fn from_scalar(c: QScalar) -> Self {
        let l = c.base_l();
        URat {
            num: ULaurent::constant(c),
            den: ULaurent::constant(QScalar::one(l)),
        }
    }

    pub fn from_laurent(p: ULaurent) -> Self {
        let l = p.l;
        URat { num: p, den: ULaurent::constant(QScalar::one(l)) }
    }

    pub fn l(&self) -> u32 {
        self.num.l
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(mut self) -> Self {
        assert!(!self.den.is_zero(), "zero denominator in URat");
        if self.num.is_zero() {
            return URat::zero(self.num.l);
        }
        let g = self.num.gcd(&self.den);
        if g.degree() > 0 {
            let (qn, rn) = ULaurent { shift: 0, coeffs: self.num.coeffs.clone(), l: self.num.l }
                .divrem(&g);
            let (qd, rd) = ULaurent { shift: 0, coeffs: self.den.coeffs.clone(), l: self.den.l }
                .divrem(&g);
            assert!(rn.is_zero() && rd.is_zero());
            self.num = ULaurent { shift: self.num.shift, coeffs: qn.coeffs, l: self.num.l }
                .normalize();
            self.den = ULaurent { shift: self.den.shift, coeffs: qd.coeffs, l: self.den.l }
                .normalize();
        }
        // fold u-power shifts: move den shift into num
        self.num.shift -= self.den.shift;
        self.den.shift = 0;
        // normalize: monic denominator
        let lead = self.den.leading();
        if !lead.is_one() {
            let inv = &QScalar::one(self.num.l) / &lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        self
    }

    pub fn add(&self, o: &URat) -> URat {
        URat {
            num: self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            den: self.den.mul(&o.den),
        }
        .reduce()
    }

    pub fn neg(&self) -> URat {
        URat { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &URat) -> URat {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &URat) -> URat {
        URat {
            num: self.num.mul(&o.num),
            den: self.den.mul(&o.den),
        }
        .reduce()
    }

    pub fn scale(&self, c: &QScalar) -> URat {
        URat { num: self.num.scale(c), den: self.den.clone() }.reduce()
    }

    pub fn inv(&self) -> QResult<URat> {
        if self.is_zero() {
            return Err(QError::DivisionByZero);
        }
        Ok(URat { num: self.den.clone(), den: self.num.clone() }.reduce())
    }

    pub fn div(&self, o: &URat) -> QResult<URat> {
        Ok(self.mul(&o.inv()?))
    }

    /// Structural equality via cross-multiplication.
    pub fn eq(&self, o: &URat) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }

    /// Substitute `u = q^(t/2)`; errors with CartanPole when the reduced
    /// denominator vanishes there.
    pub fn eval_q_pow_half(&self, t: i64) -> QResult<QScalar> {
        let den = self.den.eval_q_pow_half(t)?;
        if den.is_zero() {
            return Err(QError::CartanPole(format!(
                "denominator vanishes at u = q^({}/2)",
                t
            )));
        }
        let num = self.num.eval_q_pow_half(t)?;
        Ok(&num / &den)
    }

    /// d/du by the quotient rule.
    pub fn derivative(&self) -> URat {
        URat {
            num: self
                .num
                .derivative()
                .mul(&self.den)
                .add(&self.num.mul(&self.den.derivative()).neg()),
            den: self.den.mul(&self.den),
        }
        .reduce()
    }
}

/// The symmetric bracket `[x + c]` as a function of `u = q^x`, for
/// half-integer constant c: `(u q^c - u^-1 q^-c)/(q - q^-1)`.
pub fn bracket_shift(c: crate::qarith::HalfInt, l: u32) -> QResult<ULaurent> {
    let qq = &QScalar::q_pow_half(2, l)? - &QScalar::q_pow_half(-2, l)?;
    let plus = &QScalar::q_pow_half(c.twice(), l)? / &qq;
    let minus = &QScalar::q_pow_half(-c.twice(), l)? / &qq;
    Ok(ULaurent::monomial(plus, 1).add(&ULaurent::monomial(-&minus, -1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::{qint, HalfInt};

    #[test]
    fn bracket_eval_roundtrip() {
        let l = 2;
        // [x + 2] at x = 3 equals [5]
        let b = bracket_shift(HalfInt::from_int(2), l).unwrap();
        let v = b.eval_q_pow_half(2 * 3).unwrap();
        assert_eq!(v, qint(HalfInt::from_int(5), l).unwrap());
    }

    #[test]
    fn pole_cancellation() {
        let l = 2;
        // ([x][x+1]) / [x] reduces to [x+1]; evaluating at x = 0 works
        let bx = bracket_shift(HalfInt::ZERO, l).unwrap();
        let bx1 = bracket_shift(HalfInt::from_int(1), l).unwrap();
        let f = URat {
            num: bx.mul(&bx1),
            den: ULaurent::constant(QScalar::one(l)),
        };
        let g = f.div(&URat::from_laurent(bx)).unwrap();
        let v = g.eval_q_pow_half(0).unwrap();
        assert!(v.is_one()); // [0 + 1] = 1
    }

    #[test]
    fn genuine_pole_detected() {
        let l = 2;
        let bx = bracket_shift(HalfInt::ZERO, l).unwrap();
        let f = URat::one(l).div(&URat::from_laurent(bx)).unwrap();
        assert!(matches!(
            f.eval_q_pow_half(0),
            Err(QError::CartanPole(_))
        ));
    }

    #[test]
    fn derivative_of_monomial() {
        let l = 2;
        let u3 = ULaurent::monomial(QScalar::one(l), 3);
        let d = u3.derivative();
        assert_eq!(d, ULaurent::monomial(QScalar::from_int(3, l), 2));
    }

    #[test]
    fn rational_arithmetic() {
        let l = 2;
        let bx = bracket_shift(HalfInt::ZERO, l).unwrap();
        let f = URat::from_laurent(bx.clone());
        let g = f.mul(&f).div(&f).unwrap();
        assert!(g.eq(&f));
        let h = f.sub(&f);
        assert!(h.is_zero());
    }
}
