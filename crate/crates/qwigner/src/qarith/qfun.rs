//! q-integers, q-factorials, the asymmetric bracket (m)_q, the modified
//! q-gamma at integer points, phases, and terminating basic hypergeometric
//! series.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use super::poly::ZPoly;
use super::scalar::QScalar;
use super::{HalfInt, QError, QResult};

static QFACT_CACHE: Mutex<Option<HashMap<(u32, i64), QScalar>>> = Mutex::new(None);

/// Symmetric q-integer `[x] = (q^x - q^-x)/(q - q^-1)`.
///
/// Integer arguments give Laurent polynomials directly; half-integer
/// arguments need L even and go through exact fraction reduction.
pub fn qint(x: HalfInt, l: u32) -> QResult<QScalar> {
    let t = x.twice();
    if t == 0 {
        return Ok(QScalar::zero(l));
    }
    if t < 0 {
        return Ok(-&qint(-x, l)?);
    }
    if x.is_integer() {
        let n = t / 2;
        // q^(n-1) + q^(n-3) + ... + q^(1-n), exponents in v: L*(n-1-2k)
        let li = l as i64;
        let top = li * (n - 1);
        let mut coeffs = vec![BigInt::from(0); (2 * top + 1).max(1) as usize];
        for k in 0..n {
            let e = top - 2 * li * k; // ranges top down to -top
            coeffs[(e + top) as usize] = BigInt::one();
        }
        return Ok(QScalar::make(-top, ZPoly::new(coeffs), ZPoly::one(), l));
    }
    let num = &QScalar::q_pow_half(t, l)? - &QScalar::q_pow_half(-t, l)?;
    let den = &QScalar::q_pow_half(2, l)? - &QScalar::q_pow_half(-2, l)?;
    Ok(&num / &den)
}

/// `[n]! = [1][2]...[n]`, memoized per base denominator.
pub fn qfact(n: i64, l: u32) -> QResult<QScalar> {
    if n < 0 {
        return Err(QError::Other(format!("q-factorial of negative {}", n)));
    }
    {
        let guard = QFACT_CACHE.lock().unwrap();
        if let Some(map) = guard.as_ref() {
            if let Some(v) = map.get(&(l, n)) {
                return Ok(v.clone());
            }
        }
    }
    let mut acc = QScalar::one(l);
    for k in 1..=n {
        acc = &acc * &qint(HalfInt::from_int(k), l)?;
    }
    let mut guard = QFACT_CACHE.lock().unwrap();
    guard
        .get_or_insert_with(HashMap::new)
        .insert((l, n), acc.clone());
    Ok(acc)
}

/// Modified q-gamma at positive integer points: `gammabar_q(m) = [m-1]!`.
pub fn qgammabar_int(m: i64, l: u32) -> QResult<QScalar> {
    if m < 1 {
        return Err(QError::Other(format!(
            "modified q-gamma pole at integer point {}",
            m
        )));
    }
    qfact(m - 1, l)
}

/// Asymmetric bracket `(m)_b = (b^m - 1)/(b - 1)`, evaluated as the
/// geometric sum `1 + b + ... + b^(m-1)` so it is exact for every base.
pub fn qnum_asym(m: i64, base: &QScalar) -> QResult<QScalar> {
    if m < 0 {
        return Err(QError::Other(format!("(m)_q of negative {}", m)));
    }
    let l = base.base_l();
    let mut acc = QScalar::zero(l);
    let mut p = QScalar::one(l);
    for _ in 0..m {
        acc = &acc + &p;
        p = &p * base;
    }
    Ok(acc)
}

/// `(m)_b! = (1)_b (2)_b ... (m)_b`.
pub fn qnum_asym_factorial(m: i64, base: &QScalar) -> QResult<QScalar> {
    if m < 0 {
        return Err(QError::Other(format!("(m)_q! of negative {}", m)));
    }
    let mut acc = QScalar::one(base.base_l());
    for k in 1..=m {
        acc = &acc * &qnum_asym(k, base)?;
    }
    Ok(acc)
}

/// Factorial appearing in the q-exponential `exp_b(x) = sum x^n/(n)_b!`.
pub fn qexp_factorial(n: i64, base: &QScalar) -> QResult<QScalar> {
    qnum_asym_factorial(n, base)
}

/// `(-1)^x` for an integer-valued half-integer; errors when x is genuinely
/// half-integral (the phase would be imaginary).
pub fn phase(x: HalfInt) -> QResult<i64> {
    if !x.is_integer() {
        return Err(QError::NonIntegerPhase { twice: x.twice() });
    }
    Ok(if x.to_int() % 2 == 0 { 1 } else { -1 })
}

/// Terminating basic hypergeometric series
/// `sum_n prod_i (a_i;Q)_n / (prod_j (b_j;Q)_n (Q;Q)_n) z^n`
/// with `(a;Q)_n = prod_{k<n} (1 - a Q^k)`.
///
/// Some numerator parameter must equal `Q^-N` with `N <= max_terms`; the sum
/// runs to the smallest such N.
pub fn basic_hypergeometric(
    num_params: &[QScalar],
    den_params: &[QScalar],
    big_base: &QScalar,
    arg: &QScalar,
    max_terms: usize,
) -> QResult<QScalar> {
    let l = big_base.base_l();
    let one = QScalar::one(l);
    if arg.is_zero() {
        return Ok(one);
    }
    // find the termination order
    let mut n_stop: Option<usize> = None;
    for a in num_params {
        let mut p = a.clone();
        for n in 0..=max_terms {
            if p.is_one() {
                n_stop = Some(n_stop.map_or(n, |m: usize| m.min(n)));
                break;
            }
            p = &p * big_base;
        }
    }
    let n_stop = n_stop.ok_or(QError::NonTerminating)?;

    let mut total = one.clone();
    let mut term = one.clone();
    let mut qk = one.clone(); // Q^(n-1) while processing term n
    let mut qn = big_base.clone(); // Q^n
    for _n in 1..=n_stop {
        let mut num_factor = one.clone();
        for a in num_params {
            num_factor = &num_factor * &(&one - &(a * &qk));
        }
        let mut den_factor = &one - &qn;
        for b in den_params {
            den_factor = &den_factor * &(&one - &(b * &qk));
        }
        if den_factor.is_zero() {
            return Err(QError::DenominatorPole);
        }
        term = &(&(&term * &num_factor) / &den_factor) * arg;
        total = &total + &term;
        qk = &qk * big_base;
        qn = &qn * big_base;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn qint_small_values() {
        let l = 2;
        assert!(qint(HalfInt::ZERO, l).unwrap().is_zero());
        assert!(qint(HalfInt::from_int(1), l).unwrap().is_one());
        // [2] = q + q^-1
        let two = qint(HalfInt::from_int(2), l).unwrap();
        let expect = &QScalar::v_pow(2, l) + &QScalar::v_pow(-2, l);
        assert_eq!(two, expect);
    }

    #[test]
    fn qint_half_integer() {
        let l = 2;
        // [1/2] = (q^(1/2) - q^(-1/2))/(q - q^-1) = 1/(q^(1/2)+q^(-1/2))
        let h = qint(HalfInt::half(), l).unwrap();
        let denom = &QScalar::v_pow(1, l) + &QScalar::v_pow(-1, l);
        assert_eq!(&QScalar::one(l) / &denom, h);
    }

    #[test]
    fn qint_odd() {
        let l = 2;
        for t in -20..=20 {
            let x = HalfInt::new(t);
            let a = qint(x, l).unwrap();
            let b = qint(-x, l).unwrap();
            assert_eq!(a, -&b);
        }
    }

    #[test]
    fn qfact_values() {
        let l = 2;
        assert!(qfact(0, l).unwrap().is_one());
        let two = qint(HalfInt::from_int(2), l).unwrap();
        assert_eq!(qfact(2, l).unwrap(), two);
        let three = qint(HalfInt::from_int(3), l).unwrap();
        assert_eq!(qfact(3, l).unwrap(), &two * &three);
        assert_eq!(qgammabar_int(4, l).unwrap(), qfact(3, l).unwrap());
    }

    #[test]
    fn asym_bracket() {
        let l = 2;
        let b = QScalar::v_pow(-4, l); // base q^-2
        assert!(qnum_asym(0, &b).unwrap().is_zero());
        assert!(qnum_asym(1, &b).unwrap().is_one());
        let three = qnum_asym(3, &b).unwrap();
        let expect = &(&QScalar::one(l) + &b) + &(&b * &b);
        assert_eq!(three, expect);
    }

    #[test]
    fn commutativity_of_brackets() {
        let l = 4;
        for (a, b) in [(2, 3), (5, 7), (1, 9)] {
            let x = qint(HalfInt::from_int(a), l).unwrap();
            let y = qint(HalfInt::from_int(b), l).unwrap();
            assert_eq!(&x * &y, &y * &x);
        }
    }

    #[test]
    fn hypergeometric_trivial() {
        let l = 2;
        let one = QScalar::one(l);
        let q2 = QScalar::v_pow(4, l);
        // numerator parameter 1 = Q^0 terminates at N = 0
        let r = basic_hypergeometric(&[one.clone()], &[], &q2, &QScalar::from_int(5, l), 50)
            .unwrap();
        assert!(r.is_one());
        // zero argument
        let r = basic_hypergeometric(&[q2.clone()], &[], &q2, &QScalar::zero(l), 50).unwrap();
        assert!(r.is_one());
        // no terminating parameter
        let r = basic_hypergeometric(&[q2.clone()], &[], &q2, &one, 20);
        assert_eq!(r.unwrap_err(), QError::NonTerminating);
    }
}
