//! Exact scalar arithmetic for the deformation parameter: half-integers,
//! Laurent rational functions of `v = q^(1/L)`, canonical radical values,
//! q-integers and factorials, terminating basic hypergeometric series, and
//! the evaluation backends (q -> 1 limit, rational q, extended-precision
//! floats).

pub mod eval;
pub mod poly;
pub mod qfun;
pub mod radical;
pub mod scalar;
pub mod urat;

pub use crate::error::{QError, QResult};
pub use eval::{limit_one_radical, limit_one_scalar, FloatCtx};
pub use qfun::{
    basic_hypergeometric, phase, qexp_factorial, qfact, qgammabar_int, qint, qnum_asym,
    qnum_asym_factorial,
};
pub use radical::RadicalValue;
pub use scalar::QScalar;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// A half-integer stored as twice its value, so spins and weights round-trip
/// exactly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    pub fn new(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn half() -> Self {
        HalfInt { twice: 1 }
    }

    pub fn twice(&self) -> i64 {
        self.twice
    }

    pub fn is_integer(&self) -> bool {
        self.twice % 2 == 0
    }

    /// Integer value; panics when half-integral.
    pub fn to_int(&self) -> i64 {
        assert!(self.is_integer(), "half-integer where integer expected");
        self.twice / 2
    }

    pub fn is_nonneg(&self) -> bool {
        self.twice >= 0
    }

    pub fn abs(&self) -> HalfInt {
        HalfInt { twice: self.twice.abs() }
    }

    /// Parse "k", "-k" or "k/2" (also accepts "p/q" with q in {1, 2}).
    pub fn parse(s: &str) -> QResult<HalfInt> {
        let s = s.trim();
        if let Some((a, b)) = s.split_once('/') {
            let num: i64 = a
                .trim()
                .parse()
                .map_err(|_| QError::MalformedSpins(format!("bad numerator in '{}'", s)))?;
            let den: i64 = b
                .trim()
                .parse()
                .map_err(|_| QError::MalformedSpins(format!("bad denominator in '{}'", s)))?;
            match den {
                1 => Ok(HalfInt::from_int(num)),
                2 => Ok(HalfInt::new(num)),
                _ => Err(QError::MalformedSpins(format!(
                    "denominator must be 1 or 2 in '{}'",
                    s
                ))),
            }
        } else {
            let n: i64 = s
                .parse()
                .map_err(|_| QError::MalformedSpins(format!("bad half-integer '{}'", s)))?;
            Ok(HalfInt::from_int(n))
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice + o.twice }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, o: HalfInt) {
        self.twice += o.twice;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt { twice: self.twice - o.twice }
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, o: HalfInt) {
        self.twice -= o.twice;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { twice: -self.twice }
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, k: i64) -> HalfInt {
        HalfInt { twice: self.twice * k }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Product of two half-integers as an exact quarter-integer, reported as
/// (four times the product) for q-power exponents.
pub fn quarter_product(a: HalfInt, b: HalfInt) -> i64 {
    a.twice * b.twice
}

/// Computation context: fixes the base denominator L with `v = q^(1/L)`.
/// The default for rank-(n-1) work is `L = 2n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QCtx {
    pub l: u32,
}

impl QCtx {
    pub fn new(l: u32) -> Self {
        assert!(l > 0, "base denominator must be positive");
        QCtx { l }
    }

    /// Context for U_q(u(n)) / sl(n) work.
    pub fn for_rank_n(n: usize) -> Self {
        QCtx { l: 2 * n as u32 }
    }

    /// Context for the su(2) Wigner calculus (quarter-integer q-powers).
    pub fn su2() -> Self {
        QCtx { l: 4 }
    }

    /// Context for the su(3) matrix-element calculus: quarter-integer powers
    /// from the T-spin CGC prefactors and third-integer powers from the
    /// inverse Cartan matrix.
    pub fn su3() -> Self {
        QCtx { l: 12 }
    }

    pub fn zero(&self) -> QScalar {
        QScalar::zero(self.l)
    }

    pub fn one(&self) -> QScalar {
        QScalar::one(self.l)
    }

    pub fn int(&self, n: i64) -> QScalar {
        QScalar::from_int(n, self.l)
    }

    /// `q^x` for half-integer x.
    pub fn q_pow(&self, x: HalfInt) -> QResult<QScalar> {
        QScalar::q_pow_half(x.twice(), self.l)
    }

    /// `q^(k/4)` for quarter-integer exponents (stored as 4x).
    pub fn q_pow_quarter(&self, four_x: i64) -> QResult<QScalar> {
        let e2 = four_x * self.l as i64;
        if e2 % 4 != 0 {
            return Err(QError::ExponentNotRepresentable {
                twice: four_x,
                l: self.l,
            });
        }
        Ok(QScalar::v_pow(e2 / 4, self.l))
    }

    /// `q - q^-1`.
    pub fn q_minus_qinv(&self) -> QScalar {
        &self.q_pow(HalfInt::from_int(1)).unwrap() - &self.q_pow(HalfInt::from_int(-1)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halfint_roundtrip() {
        let x = HalfInt::parse("3/2").unwrap();
        assert_eq!(x.twice(), 3);
        assert_eq!(x.to_string(), "3/2");
        let y = HalfInt::parse("-2").unwrap();
        assert_eq!(y.twice(), -4);
        assert_eq!((x + y).twice(), -1);
        assert!(HalfInt::parse("1/3").is_err());
    }
}
