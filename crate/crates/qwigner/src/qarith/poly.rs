//! Dense integer polynomials in one variable, with the exact-division,
//! gcd and squarefree machinery the scalar layer is built on.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

/// Polynomial over the integers, dense coefficients, `coeffs[i]` is the
/// coefficient of `v^i`. Invariant: no trailing zero coefficient; the zero
/// polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        if c.is_zero() {
            ZPoly::zero()
        } else {
            ZPoly { coeffs: vec![c] }
        }
    }

    /// Build from a coefficient vector, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    /// The monomial `c * v^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        ZPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Smallest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    /// Divide by `v^k`; caller guarantees divisibility.
    pub fn shr_pow(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        debug_assert!(self.coeffs[..k].iter().all(|c| c.is_zero()));
        ZPoly::new(self.coeffs[k..].to_vec())
    }

    pub fn shl_pow(&self, k: usize) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        ZPoly { coeffs }
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        ZPoly::new(coeffs)
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - other.coeff(i));
        }
        ZPoly::new(coeffs)
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += a * b;
            }
        }
        ZPoly::new(coeffs)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> ZPoly {
        if c.is_zero() {
            return ZPoly::zero();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Exact division by an integer; caller guarantees divisibility.
    pub fn div_scalar_exact(&self, c: &BigInt) -> ZPoly {
        ZPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|a| {
                    let (q, r) = a.div_rem(c);
                    assert!(r.is_zero(), "non-exact scalar division");
                    q
                })
                .collect(),
        }
    }

    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        ZPoly::new(coeffs)
    }

    /// Gcd of all coefficients, nonnegative; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient; returns
    /// (unit-normalized primitive part, signed content) with
    /// `self = content * part`.
    pub fn primitive(&self) -> (ZPoly, BigInt) {
        if self.is_zero() {
            return (ZPoly::zero(), BigInt::zero());
        }
        let mut content = self.content();
        if self.leading().is_negative() {
            content = -content;
        }
        (self.div_scalar_exact(&content), content)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact division by `(v - 1)`; caller guarantees `self(1) == 0`.
    pub fn div_v_minus_one(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        // synthetic division at v = 1, from the top coefficient down
        for i in (1..n).rev() {
            carry += &self.coeffs[i];
            out[i - 1] = carry.clone();
        }
        debug_assert!((carry + &self.coeffs[0]).is_zero());
        ZPoly::new(out)
    }

    /// Pseudo-remainder of `self` by `other` (deg self >= deg other, other nonzero).
    fn pseudo_rem(&self, other: &ZPoly) -> ZPoly {
        let d = other.degree();
        let lc = other.leading();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= d {
            let k = r.degree() - d;
            let c = r.leading();
            r = r.mul_scalar(&lc).sub(&other.mul_scalar(&c).shl_pow(k));
        }
        r
    }

    /// Polynomial gcd over Q, returned primitive with positive leading
    /// coefficient (primitive pseudo-remainder sequence).
    pub fn gcd(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return other.primitive().0;
        }
        if other.is_zero() {
            return self.primitive().0;
        }
        let (mut a, _) = self.primitive();
        let (mut b, _) = other.primitive();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            let (rp, _) = r.primitive();
            a = b;
            b = rp;
            if b.degree() == 0 {
                return ZPoly::one();
            }
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
            }
        }
    }

    /// Exact polynomial division; caller guarantees `other` divides `self` over Q.
    /// Result is scaled back to integer coefficients.
    pub fn div_exact(&self, other: &ZPoly) -> ZPoly {
        assert!(!other.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return ZPoly::zero();
        }
        // long division with rational bookkeeping: track a common denominator
        let lc = other.leading();
        let d = other.degree();
        let mut num = self.clone();
        let n = self.degree() - d;
        // quotient coefficients over denominator lc^(k+1); do it with scaling:
        // multiply the numerator by lc^(n+1) up front so every step is integral
        let mut scale = BigInt::one();
        for _ in 0..=n {
            scale *= &lc;
        }
        num = num.mul_scalar(&scale);
        let mut q = vec![BigInt::zero(); n + 1];
        while !num.is_zero() && num.degree() >= d {
            let k = num.degree() - d;
            let (c, r) = num.leading().div_rem(&lc);
            assert!(r.is_zero(), "non-exact polynomial division step");
            q[k] = c.clone();
            num = num.sub(&other.mul_scalar(&c).shl_pow(k));
        }
        assert!(num.is_zero(), "non-exact polynomial division");
        let qp = ZPoly::new(q);
        let g = qp.content().gcd(&scale);
        let qp = qp.div_scalar_exact(&g);
        let scale = scale / g;
        qp.div_scalar_exact(&scale)
    }

    /// Yun squarefree decomposition of the primitive part: returns `a` with
    /// `primitive(self) = prod_k a[k]^(k+1)`, each `a[k]` primitive squarefree
    /// with positive leading coefficient, pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<ZPoly> {
        let (p, _) = self.primitive();
        if p.is_zero() || p.degree() == 0 {
            return Vec::new();
        }
        let dp = p.derivative();
        let g = p.gcd(&dp);
        if g.degree() == 0 {
            return vec![p];
        }
        let mut out = Vec::new();
        let mut b = p.div_exact(&g);
        let mut c = dp.div_exact(&g);
        let mut d = c.sub(&b.derivative());
        loop {
            let a = b.gcd(&d);
            out.push(a.clone());
            if b.degree() == a.degree() {
                // b/a is constant: done
                break;
            }
            b = b.div_exact(&a);
            c = d.div_exact(&a);
            d = c.sub(&b.derivative());
        }
        // trim trailing constant factors
        while out.last().map_or(false, |a| a.degree() == 0) {
            out.pop();
        }
        out
    }

    /// Split into squarefree kernel and extracted square root:
    /// `primitive(self) = kernel * square^2` with kernel squarefree.
    pub fn squarefree_split(&self) -> (ZPoly, ZPoly) {
        if self.is_zero() {
            return (ZPoly::zero(), ZPoly::one());
        }
        if self.degree() == 0 {
            return (ZPoly::one(), ZPoly::one());
        }
        let decomp = self.squarefree_decomposition();
        let mut kernel = ZPoly::one();
        let mut square = ZPoly::one();
        for (idx, a) in decomp.iter().enumerate() {
            let mult = idx + 1;
            if a.degree() == 0 {
                continue;
            }
            if mult % 2 == 1 {
                kernel = kernel.mul(a);
            }
            for _ in 0..(mult / 2) {
                square = square.mul(a);
            }
        }
        (kernel, square)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(v: &[i64]) -> ZPoly {
        ZPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_of_products() {
        let a = poly(&[1, 1]); // 1 + v
        let b = poly(&[-1, 1]); // v - 1
        let ab = a.mul(&b);
        let abb = ab.mul(&b);
        assert_eq!(ab.gcd(&abb), ab);
        assert_eq!(a.gcd(&b), ZPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = poly(&[2, 4, 2]);
        let b = poly(&[1, 1]);
        let q = a.div_exact(&b);
        assert_eq!(q.mul(&b), a);
    }

    #[test]
    fn squarefree_extraction() {
        // (v-1)^2 (v+2): odd-multiplicity kernel (v+2), extracted root (v-1)
        let p = poly(&[-1, 1]).mul(&poly(&[-1, 1])).mul(&poly(&[2, 1]));
        let (sf, s) = p.squarefree_split();
        assert_eq!(sf, poly(&[2, 1]));
        assert_eq!(s, poly(&[-1, 1]));
        assert_eq!(sf.mul(&s).mul(&s), p);
    }

    #[test]
    fn squarefree_higher_multiplicity() {
        // (v-1)^3 (v+1)^4
        let a = poly(&[-1, 1]);
        let b = poly(&[1, 1]);
        let p = a.mul(&a).mul(&a).mul(&b).mul(&b).mul(&b).mul(&b);
        let (sf, s) = p.squarefree_split();
        assert_eq!(sf, a.clone());
        assert_eq!(sf.mul(&s).mul(&s), p);
    }

    #[test]
    fn div_v_minus_one_works() {
        let p = poly(&[-3, 1, 1, 1]); // p(1) = 0
        let q = p.div_v_minus_one();
        assert_eq!(q.mul(&poly(&[-1, 1])), p);
    }
}
