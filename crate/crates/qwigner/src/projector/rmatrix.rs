//! Universal R-matrix realized on pairs of finite-dimensional modules:
//! the ordered product of q-exponential factors over the normal ordering,
//! times the Cartan factor K built from the inverse symmetrized Cartan
//! matrix. Intertwining and quasitriangularity checks live here too.

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{QError, QResult};
use crate::gtrep::generators::cw_root_vectors;
use crate::gtrep::matrix::RepMatrix;
use crate::gtrep::tensor::tensor;
use crate::gtrep::Realization;
use crate::qarith::{qexp_factorial, HalfInt, QScalar, RadicalValue};

use super::measure_a;

/// Kronecker product with pair index (i1, i2) -> i1*dim2 + i2.
pub fn kron(a: &RepMatrix, b: &RepMatrix) -> QResult<RepMatrix> {
    let dim = a.dim * b.dim;
    let mut out = RepMatrix::zero(dim, a.l);
    for (&(r1, c1), v1) in a.iter() {
        for (&(r2, c2), v2) in b.iter() {
            out.add_assign_entry(r1 * b.dim + r2, c1 * b.dim + c2, &v1.mul(v2))?;
        }
    }
    Ok(out)
}

/// Inverse of the symmetrized Cartan matrix of A_(n-1), exact.
fn inverse_cartan(rank: usize) -> Vec<Vec<Rational64>> {
    // Gaussian inversion over Rational64
    let n = rank;
    let mut a = vec![vec![Rational64::zero(); 2 * n]; n];
    for i in 0..n {
        a[i][i] = Rational64::from(2);
        if i + 1 < n {
            a[i][i + 1] = Rational64::from(-1);
            a[i + 1][i] = Rational64::from(-1);
        }
        a[i][n + i] = Rational64::from(1);
    }
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r][col] != Rational64::zero()).unwrap();
        a.swap(col, pivot);
        let inv = a[col][col].recip();
        for c in 0..2 * n {
            a[col][c] *= inv;
        }
        for r in 0..n {
            if r == col || a[r][col] == Rational64::zero() {
                continue;
            }
            let f = a[r][col];
            for c in 0..2 * n {
                let t = a[col][c] * f;
                a[r][c] -= t;
            }
        }
    }
    (0..n)
        .map(|r| (0..n).map(|c| a[r][n + c]).collect())
        .collect()
}

fn q_pow_rational(e: Rational64, l: u32) -> QResult<QScalar> {
    let scaled = e * Rational64::from(l as i64);
    if !scaled.is_integer() {
        return Err(QError::ExponentNotRepresentable {
            twice: *e.numer(),
            l,
        });
    }
    Ok(QScalar::v_pow(scaled.to_integer(), l))
}

/// The Cartan factor K acting on a weight pair as
/// `q^(sum_ij d_ij h_i(w1) h_j(w2))`.
pub fn k_factor(a: &Realization, b: &Realization) -> QResult<RepMatrix> {
    let rank = a.n - 1;
    let d = inverse_cartan(rank);
    let l = a.l;
    let dim = a.dim * b.dim;
    let mut out = RepMatrix::zero(dim, l);
    for i1 in 0..a.dim {
        for i2 in 0..b.dim {
            let mut e = Rational64::zero();
            for i in 1..=rank {
                for j in 1..=rank {
                    e += d[i - 1][j - 1]
                        * Rational64::from(a.h_eig(i, i1))
                        * Rational64::from(b.h_eig(j, i2));
                }
            }
            let v = q_pow_rational(e, l)?;
            out.set(i1 * b.dim + i2, i1 * b.dim + i2, RadicalValue::from_scalar(v));
        }
    }
    Ok(out)
}

/// The R-matrix on the tensor product of two realizations:
/// `R = (prod_gamma exp_qbar((q - q^-1) a(gamma)^-1 e_g (x) e_-g)) K`,
/// the product ordered along the canonical normal ordering.
pub fn r_matrix(a: &Realization, b: &Realization) -> QResult<RepMatrix> {
    if a.l != b.l {
        return Err(QError::ContextMismatch { left: a.l, right: b.l });
    }
    if a.n != b.n {
        return Err(QError::Other("R-matrix factors of different rank".into()));
    }
    let rank = a.n - 1;
    let l = a.l;
    let (sys, plus_a, minus_a) = cw_root_vectors(rank, l, &a.e_plus, &a.e_minus)?;
    let (_, _plus_b, minus_b) = cw_root_vectors(rank, l, &b.e_plus, &b.e_minus)?;
    let qq = &QScalar::q_pow_half(2, l)? - &QScalar::q_pow_half(-2, l)?;
    let dim = a.dim * b.dim;
    let mut r = RepMatrix::identity(dim, l);
    for idx in 0..sys.len() {
        let gamma = &sys.positive_roots[idx];
        let a_g = measure_a(a, gamma, &plus_a[idx], &minus_a[idx])?;
        let gg = sys.form(gamma, gamma);
        let gg2 = gg * Rational64::from(2);
        assert!(gg2.is_integer());
        let qbar = QScalar::q_pow_half(-gg2.to_integer(), l)?;
        let x = kron(&plus_a[idx], &minus_b[idx])?.scale_scalar(&(&qq / &a_g));
        // q-exponential truncated at nilpotency
        let nilp = x
            .nilpotency_degree(dim + 1)?
            .ok_or_else(|| QError::Other("R factor argument not nilpotent".into()))?;
        let mut factor = RepMatrix::zero(dim, l);
        let mut xp = RepMatrix::identity(dim, l);
        for k in 0..nilp as i64 {
            if k > 0 {
                xp = xp.mul(&x)?;
            }
            let c = qexp_factorial(k, &qbar)?.inv()?;
            factor = factor.add(&xp.scale_scalar(&c))?;
        }
        r = r.mul(&factor)?;
    }
    r.mul(&k_factor(a, b)?)
}

/// Opposite-coproduct generators on the pair basis:
/// `D~(e) = e (x) q^(-h/2) + q^(h/2) (x) e`.
fn opposite_generator(
    a: &Realization,
    b: &Realization,
    i: usize,
    raise: bool,
) -> QResult<RepMatrix> {
    let l = a.l;
    let dim = a.dim * b.dim;
    let mut m = RepMatrix::zero(dim, l);
    let (ea, eb) = if raise {
        (&a.e_plus[i - 1], &b.e_plus[i - 1])
    } else {
        (&a.e_minus[i - 1], &b.e_minus[i - 1])
    };
    for (&(r1, c1), v) in ea.iter() {
        for c2 in 0..b.dim {
            let kpow = QScalar::q_pow_half(-b.h_eig(i, c2), l)?;
            m.add_assign_entry(r1 * b.dim + c2, c1 * b.dim + c2, &v.scale(&kpow))?;
        }
    }
    for (&(r2, c2), v) in eb.iter() {
        for c1 in 0..a.dim {
            let kpow = QScalar::q_pow_half(a.h_eig(i, c1), l)?;
            m.add_assign_entry(c1 * b.dim + r2, c1 * b.dim + c2, &v.scale(&kpow))?;
        }
    }
    Ok(m)
}

/// Check the intertwining property `R D(x) = D~(x) R` for all Chevalley
/// generators and Cartan powers on the pair of modules.
pub fn check_intertwining(a: &Realization, b: &Realization) -> QResult<bool> {
    let r = r_matrix(a, b)?;
    let t = tensor(a, b)?;
    let rank = a.n - 1;
    for i in 1..=rank {
        for raise in [true, false] {
            let dx = if raise { &t.e_plus[i - 1] } else { &t.e_minus[i - 1] };
            let dxo = opposite_generator(a, b, i, raise)?;
            let lhs = r.mul(dx)?;
            let rhs = dxo.mul(&r)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
        // Cartan: D(k) = k (x) k is symmetric, must commute with R
        let k = t.cartan_power(i, HalfInt::from_int(1))?;
        if r.mul(&k)? != k.mul(&r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Embed a pair matrix on slots (1,3) of a triple with dims (da, db, dc).
pub fn embed_13(r13: &RepMatrix, da: usize, db: usize, dc: usize) -> RepMatrix {
    assert_eq!(r13.dim, da * dc);
    let mut out = RepMatrix::zero(da * db * dc, r13.l);
    for (&(r, c), v) in r13.iter() {
        let (r1, r3) = (r / dc, r % dc);
        let (c1, c3) = (c / dc, c % dc);
        for i2 in 0..db {
            out.set(
                (r1 * db + i2) * dc + r3,
                (c1 * db + i2) * dc + c3,
                v.clone(),
            );
        }
    }
    out
}

pub fn embed_12(r12: &RepMatrix, da: usize, db: usize, dc: usize) -> RepMatrix {
    assert_eq!(r12.dim, da * db);
    let mut out = RepMatrix::zero(da * db * dc, r12.l);
    for (&(r, c), v) in r12.iter() {
        for i3 in 0..dc {
            out.set(r * dc + i3, c * dc + i3, v.clone());
        }
    }
    out
}

pub fn embed_23(r23: &RepMatrix, da: usize, db: usize, dc: usize) -> RepMatrix {
    assert_eq!(r23.dim, db * dc);
    let mut out = RepMatrix::zero(da * db * dc, r23.l);
    for (&(r, c), v) in r23.iter() {
        for i1 in 0..da {
            out.set(i1 * db * dc + r, i1 * db * dc + c, v.clone());
        }
    }
    out
}

/// Quasitriangularity: `(D (x) id) R = R13 R23` and `(id (x) D) R = R13 R12`
/// on the triple product of three realizations.
pub fn check_coproduct_factorization(
    a: &Realization,
    b: &Realization,
    c: &Realization,
) -> QResult<bool> {
    let ab = tensor(a, b)?;
    let bc = tensor(b, c)?;
    let (da, db, dc) = (a.dim, b.dim, c.dim);
    let r13 = embed_13(&r_matrix(a, c)?, da, db, dc);
    let r12 = embed_12(&r_matrix(a, b)?, da, db, dc);
    let r23 = embed_23(&r_matrix(b, c)?, da, db, dc);
    let lhs1 = r_matrix(&ab, c)?;
    if lhs1 != r13.mul(&r23)? {
        return Ok(false);
    }
    let lhs2 = r_matrix(a, &bc)?;
    if lhs2 != r13.mul(&r12)? {
        return Ok(false);
    }
    Ok(true)
}

/// Yang-Baxter on V (x) V (x) V.
pub fn check_yang_baxter(v: &Realization) -> QResult<bool> {
    let d = v.dim;
    let r = r_matrix(v, v)?;
    let r12 = embed_12(&r, d, d, d);
    let r13 = embed_13(&r, d, d, d);
    let r23 = embed_23(&r, d, d, d);
    let lhs = r12.mul(&r13)?.mul(&r23)?;
    let rhs = r23.mul(&r13)?.mul(&r12)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtrep::enumerate_basis;

    fn spin(twoj: i64, l: u32) -> Realization {
        let m = enumerate_basis(2, &[twoj, 0], l).unwrap();
        Realization::from_module(&m).unwrap()
    }

    fn fund3(l: u32) -> Realization {
        let m = enumerate_basis(3, &[1, 0, 0], l).unwrap();
        Realization::from_module(&m).unwrap()
    }

    #[test]
    fn k_factor_on_highest_pair() {
        // sl(2), 1/2 (x) 1/2: K on v_hw (x) v_hw is q^(1/2)
        let l = 4;
        let h = spin(1, l);
        let k = k_factor(&h, &h).unwrap();
        let expect = QScalar::q_pow_half(1, l).unwrap();
        assert_eq!(k.get(3, 3), RadicalValue::from_scalar(expect));
    }

    #[test]
    fn r_on_highest_tensor_anything_is_k() {
        let l = 4;
        let h = spin(1, l);
        let r = r_matrix(&h, &h).unwrap();
        let k = k_factor(&h, &h).unwrap();
        // columns with highest first factor: e_g kills it, so R = K there
        for i2 in 0..2 {
            let col = 1 * 2 + i2;
            for row in 0..4 {
                assert_eq!(r.get(row, col), k.get(row, col));
            }
        }
    }

    #[test]
    fn intertwining_sl2() {
        let l = 4;
        let h = spin(1, l);
        assert!(check_intertwining(&h, &h).unwrap());
        let one = spin(2, l);
        assert!(check_intertwining(&h, &one).unwrap());
    }

    #[test]
    fn yang_baxter_spin_half() {
        let l = 4;
        let h = spin(1, l);
        assert!(check_yang_baxter(&h).unwrap());
    }

    #[test]
    fn intertwining_sl3_fundamental() {
        let l = 6;
        let f = fund3(l);
        assert!(check_intertwining(&f, &f).unwrap());
    }

    #[test]
    fn coproduct_factorization_sl2() {
        let l = 4;
        let h = spin(1, l);
        assert!(check_coproduct_factorization(&h, &h, &h).unwrap());
    }
}
