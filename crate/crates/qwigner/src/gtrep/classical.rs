//! Independent classical (q = 1) Gelfand-Tsetlin oracle.
//!
//! Everything here is deliberately limited to plain rational arithmetic plus
//! a signed-sqrt value type over squarefree integer radicands, with no use
//! of the q-machinery, so comparisons against the q -> 1 limit of the
//! quantum realization are a genuine cross-check.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{QError, QResult};

use super::GTPattern;

/// `coeff * sqrt(radicand)` with radicand a squarefree positive integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqrtRat {
    pub coeff: BigRational,
    pub radicand: BigInt,
}

fn int_squarefree(n: &BigInt) -> (BigInt, BigInt) {
    // returns (sqrt_part, free) with n = sqrt_part^2 * free, free squarefree
    let mut m = n.clone();
    let mut sq = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        for _ in 0..(e / 2) {
            sq *= &p;
        }
        if e % 2 == 1 {
            free *= &p;
        }
        p += 1u8;
    }
    free *= m;
    (sq, free)
}

impl SqrtRat {
    pub fn zero() -> Self {
        SqrtRat { coeff: BigRational::zero(), radicand: BigInt::one() }
    }

    pub fn from_rational(c: BigRational) -> Self {
        SqrtRat { coeff: c, radicand: BigInt::one() }
    }

    /// sqrt of a nonnegative rational, canonicalized to an integer radicand.
    pub fn sqrt_of(r: &BigRational) -> QResult<Self> {
        if r.is_negative() {
            return Err(QError::NegativeRadicand);
        }
        if r.is_zero() {
            return Ok(SqrtRat::zero());
        }
        // sqrt(p/q) = (1/q) sqrt(pq)
        let pq = r.numer() * r.denom();
        let (s, free) = int_squarefree(&pq);
        Ok(SqrtRat {
            coeff: BigRational::new(s, r.denom().clone()),
            radicand: free,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn mul(&self, o: &SqrtRat) -> SqrtRat {
        if self.is_zero() || o.is_zero() {
            return SqrtRat::zero();
        }
        let prod = &self.radicand * &o.radicand;
        let (s, free) = int_squarefree(&prod);
        SqrtRat {
            coeff: &self.coeff * &o.coeff * BigRational::from(s),
            radicand: free,
        }
    }

    pub fn neg(&self) -> SqrtRat {
        SqrtRat { coeff: -&self.coeff, radicand: self.radicand.clone() }
    }

    pub fn add(&self, o: &SqrtRat) -> QResult<SqrtRat> {
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        if self.radicand != o.radicand {
            return Err(QError::RadicalMismatch {
                left: self.radicand.to_string(),
                right: o.radicand.to_string(),
            });
        }
        let c = &self.coeff + &o.coeff;
        if c.is_zero() {
            return Ok(SqrtRat::zero());
        }
        Ok(SqrtRat { coeff: c, radicand: self.radicand.clone() })
    }

    /// Comparable value form: (sign, signed square).
    pub fn value_key(&self) -> (i8, BigRational) {
        let sign = if self.coeff.is_zero() {
            0
        } else if self.coeff.is_negative() {
            -1
        } else {
            1
        };
        let sq = &self.coeff * &self.coeff * BigRational::from(self.radicand.clone());
        (sign, sq)
    }
}

/// Dense classical matrix.
pub type ClassicalMatrix = Vec<Vec<SqrtRat>>;

pub fn classical_zero(dim: usize) -> ClassicalMatrix {
    vec![vec![SqrtRat::zero(); dim]; dim]
}

pub fn classical_mul(a: &ClassicalMatrix, b: &ClassicalMatrix) -> QResult<ClassicalMatrix> {
    let dim = a.len();
    let mut out = classical_zero(dim);
    for r in 0..dim {
        for k in 0..dim {
            if a[r][k].is_zero() {
                continue;
            }
            for c in 0..dim {
                if b[k][c].is_zero() {
                    continue;
                }
                let t = a[r][k].mul(&b[k][c]);
                out[r][c] = out[r][c].add(&t)?;
            }
        }
    }
    Ok(out)
}

pub fn classical_sub(a: &ClassicalMatrix, b: &ClassicalMatrix) -> QResult<ClassicalMatrix> {
    let dim = a.len();
    let mut out = classical_zero(dim);
    for r in 0..dim {
        for c in 0..dim {
            out[r][c] = a[r][c].add(&b[r][c].neg())?;
        }
    }
    Ok(out)
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

/// Classical single-step amplitude: the Gelfand-Tsetlin formula with plain
/// integers in place of q-brackets. Returns zero when the target pattern
/// leaves the betweenness region.
fn classical_step(p: &GTPattern, m: usize, j: usize, raise: bool) -> QResult<SqrtRat> {
    let delta = if raise { 1 } else { -1 };
    let target = p.shifted(j, m, delta);
    if !target.is_valid() {
        return Ok(SqrtRat::zero());
    }
    let (up_off, down_off) = if raise { (0i64, -1i64) } else { (1, 0) };
    let lj = p.lval(j, m);
    let mut num = rat(1);
    for i in 1..=(m + 1) {
        num *= rat(p.lval(i, m + 1) - lj + up_off);
    }
    if m >= 2 {
        for i in 1..=(m - 1) {
            num *= rat(p.lval(i, m - 1) - lj + down_off);
        }
    }
    let mut den = rat(1);
    for i in 1..=m {
        if i == j {
            continue;
        }
        let d = p.lval(i, m) - lj;
        den *= rat(d + up_off) * rat(d + down_off);
    }
    SqrtRat::sqrt_of(&(-num / den))
}

/// Classical matrix of the simple generator E_(k,k+1) or E_(k+1,k) on the
/// pattern basis of the module.
pub fn classical_simple(
    patterns: &[GTPattern],
    index: &std::collections::HashMap<GTPattern, usize>,
    k: usize,
    raise: bool,
) -> QResult<ClassicalMatrix> {
    let dim = patterns.len();
    let mut out = classical_zero(dim);
    let delta = if raise { 1 } else { -1 };
    for (src, p) in patterns.iter().enumerate() {
        for j in 1..=k {
            let amp = classical_step(p, k, j, raise)?;
            if amp.is_zero() {
                continue;
            }
            let tgt = index[&p.shifted(j, k, delta)];
            out[tgt][src] = out[tgt][src].add(&amp)?;
        }
    }
    Ok(out)
}

/// Classical E_(i,j) for any i != j via ordinary commutators
/// E_(i,j) = [E_(i,t), E_(t,j)] peeled at the first index.
pub fn classical_eij(
    patterns: &[GTPattern],
    index: &std::collections::HashMap<GTPattern, usize>,
    i: usize,
    j: usize,
) -> QResult<ClassicalMatrix> {
    assert_ne!(i, j);
    let (a, b, raise) = if i < j { (i, j, true) } else { (j, i, false) };
    if b == a + 1 {
        return classical_simple(patterns, index, a, raise);
    }
    let first = classical_eij(patterns, index, if raise { a } else { a + 1 }, if raise { a + 1 } else { a })?;
    let rest = classical_eij(patterns, index, if raise { a + 1 } else { b }, if raise { b } else { a + 1 })?;
    // E_(a,b) = [E_(a,a+1), E_(a+1,b)];  E_(b,a) = [E_(b,a+1), E_(a+1,a)]
    if raise {
        classical_sub(&classical_mul(&first, &rest)?, &classical_mul(&rest, &first)?)
    } else {
        classical_sub(&classical_mul(&rest, &first)?, &classical_mul(&first, &rest)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtrep::enumerate_basis;

    #[test]
    fn classical_su2_amplitudes() {
        let m = enumerate_basis(2, &[2, 0], 2).unwrap();
        let e = classical_simple(&m.patterns, &m.index, 1, true).unwrap();
        // spin 1: J+ amplitudes sqrt(2) at both steps
        let mut found = 0;
        for r in 0..3 {
            for c in 0..3 {
                if !e[r][c].is_zero() {
                    let (s, sq) = e[r][c].value_key();
                    assert_eq!(s, 1);
                    assert_eq!(sq, rat(2));
                    found += 1;
                }
            }
        }
        assert_eq!(found, 2);
    }

    #[test]
    fn classical_commutator_e13() {
        let m = enumerate_basis(3, &[1, 0, 0], 2).unwrap();
        let e13 = classical_eij(&m.patterns, &m.index, 1, 3).unwrap();
        let nonzero: Vec<_> = (0..3)
            .flat_map(|r| (0..3).map(move |c| (r, c)))
            .filter(|&(r, c)| !e13[r][c].is_zero())
            .collect();
        assert_eq!(nonzero.len(), 1);
    }

    #[test]
    fn quantum_limit_matches_classical_realization() {
        use crate::gtrep::generators::{generator_matrix, Direction};
        use crate::qarith::limit_one_radical;
        for (n, hw) in [
            (2usize, vec![3i64, 0]),
            (3, vec![2, 1, 0]),
            (3, vec![2, 0, 0]),
            (4, vec![1, 1, 0, 0]),
        ] {
            let m = enumerate_basis(n, &hw, 2).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    if i == j {
                        continue;
                    }
                    let (k, s, dir) = if i < j {
                        (i, j - i, Direction::Raise)
                    } else {
                        (j, i - j, Direction::Lower)
                    };
                    let q = generator_matrix(&m, k, s, dir).unwrap();
                    let c = classical_eij(&m.patterns, &m.index, i, j).unwrap();
                    for r in 0..m.dim() {
                        for col in 0..m.dim() {
                            let qv = q.get(r, col);
                            let key_q = if qv.is_zero() {
                                (0i8, num_rational::BigRational::zero())
                            } else {
                                let (cc, rr) = limit_one_radical(&qv).unwrap();
                                let sign = if cc.is_zero() || rr.is_zero() {
                                    0
                                } else if cc.is_negative() {
                                    -1
                                } else {
                                    1
                                };
                                (sign, &cc * &cc * rr)
                            };
                            let key_c = c[r][col].value_key();
                            assert_eq!(
                                key_q, key_c,
                                "e_({},{}) entry ({},{}) on u({}) hw {:?}",
                                i, j, r, col, n, hw
                            );
                        }
                    }
                }
            }
        }
    }
}
