//! The epsilon-deformed extremal projector of U_q(sl(2)), its scaling
//! derivatives, and the adjoint extremal projectors p^(n) with
//! X p^(n) = p^(n) X = p^(n-1).
//!
//! Entries are kept as rational functions of u = q^eps; the scaling
//! derivative acts algebraically as ((q - q^-1)/2) u d/du, the normalization
//! that makes the n = 1 solution coefficient equal [2J0+1]^(-1) exactly.
//! Weight spaces carrying no spin-m component (where [2m+1] would vanish)
//! have X invertible and the chain forces p^(n) = 0 there.

use std::collections::BTreeMap;

use crate::error::{QError, QResult};
use crate::gtrep::matrix::RepMatrix;
use crate::gtrep::Realization;
use crate::qarith::urat::{ULaurent, URat};
use crate::qarith::{qint, HalfInt, QScalar, RadicalValue};

/// One entry `sqrt(radicand) * fun(u)`.
#[derive(Clone, Debug)]
pub struct EpsEntry {
    pub radicand: QScalar,
    pub fun: URat,
}

/// Matrix of epsilon-dependent values on a module basis.
#[derive(Clone, Debug)]
pub struct EpsMatrix {
    pub dim: usize,
    pub l: u32,
    pub entries: BTreeMap<(usize, usize), EpsEntry>,
}

impl EpsMatrix {
    pub fn zero(dim: usize, l: u32) -> Self {
        EpsMatrix { dim, l, entries: BTreeMap::new() }
    }

    pub fn add_entry(&mut self, r: usize, c: usize, radicand: &QScalar, fun: URat) -> QResult<()> {
        if fun.is_zero() {
            return Ok(());
        }
        match self.entries.get_mut(&(r, c)) {
            None => {
                self.entries.insert((r, c), EpsEntry { radicand: radicand.clone(), fun });
            }
            Some(e) => {
                if &e.radicand != radicand {
                    return Err(QError::RadicalMismatch {
                        left: e.radicand.to_string(),
                        right: radicand.to_string(),
                    });
                }
                e.fun = e.fun.add(&fun);
                if e.fun.is_zero() {
                    self.entries.remove(&(r, c));
                }
            }
        }
        Ok(())
    }

    /// Left-multiply by a RepMatrix (constant in u).
    pub fn mul_left(&self, a: &RepMatrix) -> QResult<EpsMatrix> {
        let mut out = EpsMatrix::zero(self.dim, self.l);
        let mut by_row: Vec<Vec<(usize, &EpsEntry)>> = vec![Vec::new(); self.dim];
        for (&(r, c), e) in &self.entries {
            by_row[r].push((c, e));
        }
        for (&(r, k), v) in a.iter() {
            for &(c, e) in &by_row[k] {
                let rad = RadicalValue::sqrt_of(&(v.radicand() * &e.radicand));
                let fun = e.fun.scale(&(v.coeff() * rad.coeff()));
                out.add_entry(r, c, rad.radicand(), fun)?;
            }
        }
        Ok(out)
    }

    /// Right-multiply by a RepMatrix.
    pub fn mul_right(&self, a: &RepMatrix) -> QResult<EpsMatrix> {
        let mut out = EpsMatrix::zero(self.dim, self.l);
        let mut by_row: Vec<Vec<(usize, &RadicalValue)>> = vec![Vec::new(); self.dim];
        for (&(r, c), v) in a.iter() {
            by_row[r].push((c, v));
        }
        for (&(r, k), e) in &self.entries {
            for &(c, v) in &by_row[k] {
                let rad = RadicalValue::sqrt_of(&(v.radicand() * &e.radicand));
                let fun = e.fun.scale(&(v.coeff() * rad.coeff()));
                out.add_entry(r, c, rad.radicand(), fun)?;
            }
        }
        Ok(out)
    }

    /// Scale each row by a u-function of its weight.
    pub fn scale_rows<F>(&self, f: F) -> QResult<EpsMatrix>
    where
        F: Fn(usize) -> URat,
    {
        let mut out = EpsMatrix::zero(self.dim, self.l);
        for (&(r, c), e) in &self.entries {
            out.add_entry(r, c, &e.radicand, e.fun.mul(&f(r)))?;
        }
        Ok(out)
    }

    pub fn sub(&self, o: &EpsMatrix) -> QResult<EpsMatrix> {
        let mut out = self.clone();
        for (&(r, c), e) in &o.entries {
            out.add_entry(r, c, &e.radicand, e.fun.neg())?;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Scaling derivative ((q - q^-1)/2) u d/du, entrywise.
    pub fn scaling_derivative(&self) -> EpsMatrix {
        let half_qq = {
            let qq = &QScalar::q_pow_half(2, self.l).unwrap()
                - &QScalar::q_pow_half(-2, self.l).unwrap();
            &qq * &QScalar::from_rational(
                &num_rational::BigRational::new(1.into(), 2.into()),
                self.l,
            )
        };
        let mut out = EpsMatrix::zero(self.dim, self.l);
        for (&(r, c), e) in &self.entries {
            let d = e.fun.derivative();
            let u = URat::from_laurent(ULaurent::monomial(half_qq.clone(), 1));
            let fun = d.mul(&u);
            if !fun.is_zero() {
                out.entries.insert((r, c), EpsEntry { radicand: e.radicand.clone(), fun });
            }
        }
        out
    }

    /// Evaluate at eps = 0 (u = 1).
    pub fn eval_at_zero(&self) -> QResult<RepMatrix> {
        let mut out = RepMatrix::zero(self.dim, self.l);
        for (&(r, c), e) in &self.entries {
            let v = e.fun.eval_q_pow_half(0)?;
            if v.is_zero() {
                continue;
            }
            out.set(r, c, RadicalValue::sqrt_of(&e.radicand).scale(&v));
        }
        Ok(out)
    }
}

/// `[c + eps]` as a function of u = q^eps, c half-integer.
fn bracket_plus_eps(c: HalfInt, l: u32) -> QResult<ULaurent> {
    let qq = &QScalar::q_pow_half(2, l)? - &QScalar::q_pow_half(-2, l)?;
    let plus = &QScalar::q_pow_half(c.twice(), l)? / &qq;
    let minus = &QScalar::q_pow_half(-c.twice(), l)? / &qq;
    Ok(ULaurent::monomial(plus, 1).add(&ULaurent::monomial(-&minus, -1)))
}

/// `[c - eps]`.
fn bracket_minus_eps(c: HalfInt, l: u32) -> QResult<ULaurent> {
    let qq = &QScalar::q_pow_half(2, l)? - &QScalar::q_pow_half(-2, l)?;
    let plus = &QScalar::q_pow_half(c.twice(), l)? / &qq;
    let minus = &QScalar::q_pow_half(-c.twice(), l)? / &qq;
    Ok(ULaurent::monomial(plus, -1).add(&ULaurent::monomial(-&minus, 1)))
}

/// The generating element
/// `p(eps) = sum_n c_n(J0, eps) J-^n J+^n` with
/// `c_n = (-1)^n / (prod_(k=1..n) [k - eps] prod_(k=1..n) [2J0+1+k+eps])`,
/// normalized so that p(0) is the extremal projector. Truncation is the
/// nilpotency degree of J+ (optionally capped).
pub fn epsilon_projector(real: &Realization, truncation: Option<usize>) -> QResult<EpsMatrix> {
    assert_eq!(real.n, 2, "epsilon projector is the sl(2) construction");
    let l = real.l;
    let plus = &real.e_plus[0];
    let minus = &real.e_minus[0];
    let mut nilp = plus
        .nilpotency_degree(real.dim + 1)?
        .ok_or_else(|| QError::Other("J+ not nilpotent".into()))?;
    if let Some(cap) = truncation {
        nilp = nilp.min(cap + 1);
    }
    let mut out = EpsMatrix::zero(real.dim, l);
    let mut pl = RepMatrix::identity(real.dim, l);
    let mut mi = RepMatrix::identity(real.dim, l);
    for n in 0..nilp as i64 {
        if n > 0 {
            pl = plus.mul(&pl)?;
            mi = mi.mul(minus)?;
        }
        let pw = mi.mul(&pl)?;
        // denominator pieces independent of the weight
        let mut den_eps = ULaurent::constant(QScalar::one(l));
        for k in 1..=n {
            den_eps = den_eps.mul(&bracket_minus_eps(HalfInt::from_int(k), l)?);
        }
        for (&(r, c), v) in pw.iter() {
            let h = real.h_eig(1, r); // 2*J0 eigenvalue
            let mut den = den_eps.clone();
            for k in 1..=n {
                den = den.mul(&bracket_plus_eps(HalfInt::from_int(h + 1 + k), l)?);
            }
            let mut num = v.coeff().clone();
            if n % 2 == 1 {
                num = -&num;
            }
            let fun = URat { num: ULaurent::constant(num), den };
            out.add_entry(r, c, v.radicand(), fun)?;
        }
    }
    Ok(out)
}

/// Scaling derivatives p~^(0) .. p~^(n) at eps = 0 as concrete matrices.
pub fn scaling_derivatives(series: &EpsMatrix, n: usize) -> QResult<Vec<RepMatrix>> {
    let mut out = Vec::with_capacity(n + 1);
    let mut cur = series.clone();
    out.push(cur.eval_at_zero()?);
    for _ in 0..n {
        cur = cur.scaling_derivative();
        out.push(cur.eval_at_zero()?);
    }
    Ok(out)
}

/// Coefficient `a_l^n = C(n,l) (q - q^-1)^(n-l-2)
/// (q^(2J0+1) + (-1)^(n-l) q^(-2J0-1))` on the weight space with h = 2J0.
pub fn chain_coefficient(n: i64, lidx: i64, h: i64, l: u32) -> QResult<QScalar> {
    let m = n - lidx;
    let qq = &QScalar::q_pow_half(2, l)? - &QScalar::q_pow_half(-2, l)?;
    let mut binom = QScalar::one(l);
    for i in 0..m {
        binom = &binom
            * &(&QScalar::from_int(n - i, l) / &QScalar::from_int(i + 1, l));
    }
    let a = QScalar::q_pow_half(2 * (h + 1), l)?;
    let ainv = QScalar::q_pow_half(-2 * (h + 1), l)?;
    let parity = if m % 2 == 0 { a.clone() } else { -&a };
    let core = &(if m % 2 == 0 { &a + &ainv } else { &a - &ainv }) * &binom;
    let _ = parity;
    let pow = qq.pow(m - 2)?;
    Ok(&core * &pow)
}

/// Adjoint extremal projectors p^(0) .. p^(n_max): per weight space, the
/// triangular system sum_(k>l) d_k^n a_l^k = d_l^(n-1) is solved with
/// d_0^0 = 1 and d_0^m = 0 (m >= 1); weight spaces with no spin-m component
/// (h = -1 style, [2J0+1] = 0) carry p^(n) = 0 since X is invertible there.
pub fn adjoint_projectors(real: &Realization, n_max: usize) -> QResult<Vec<RepMatrix>> {
    assert_eq!(real.n, 2);
    let l = real.l;
    let series = epsilon_projector(real, None)?;
    let tilde = scaling_derivatives(&series, n_max)?;
    let p0 = tilde[0].clone();

    // distinct h values
    let mut hs: Vec<i64> = (0..real.dim).map(|i| real.h_eig(1, i)).collect();
    hs.sort();
    hs.dedup();

    // d_l^n per h: map (h) -> vec over n of vec over l
    let mut d_per_h: BTreeMap<i64, Vec<Vec<QScalar>>> = BTreeMap::new();
    for &h in &hs {
        let singular = h + 1 == 0;
        if singular {
            // verify the extremal projector vanishes on this weight space
            for i in 0..real.dim {
                if real.h_eig(1, i) != h {
                    continue;
                }
                for j in 0..real.dim {
                    if !p0.get(i, j).is_zero() {
                        return Err(QError::SingularTriangularSystem(format!(
                            "projector nonzero on weight space 2J0 = {}",
                            h
                        )));
                    }
                }
            }
            d_per_h.insert(h, vec![vec![QScalar::zero(l); n_max + 1]; n_max + 1]);
            let e = d_per_h.get_mut(&h).unwrap();
            e[0][0] = QScalar::zero(l); // rows are zeroed anyway
            continue;
        }
        let mut d = vec![vec![QScalar::zero(l); n_max + 1]; n_max + 1];
        d[0][0] = QScalar::one(l);
        for n in 1..=n_max as i64 {
            for lidx in (0..n).rev() {
                // solve for d_(l+1)^n
                let mut rhs = d[(n - 1) as usize][lidx as usize].clone();
                for k in (lidx + 2)..=n {
                    let a = chain_coefficient(k, lidx, h, l)?;
                    rhs = &rhs - &(&d[n as usize][k as usize] * &a);
                }
                let div = chain_coefficient(lidx + 1, lidx, h, l)?;
                if div.is_zero() {
                    return Err(QError::SingularTriangularSystem(format!(
                        "a_{}^{} vanishes on weight space 2J0 = {}",
                        lidx,
                        lidx + 1,
                        h
                    )));
                }
                d[n as usize][(lidx + 1) as usize] = &rhs / &div;
            }
        }
        d_per_h.insert(h, d);
    }

    let mut out = Vec::with_capacity(n_max + 1);
    out.push(p0);
    for n in 1..=n_max {
        let mut p = RepMatrix::zero(real.dim, l);
        for lidx in 1..=n {
            // diag(d_l^n) * p~^(l)
            for (&(r, c), v) in tilde[lidx].iter() {
                let h = real.h_eig(1, r);
                let coeff = &d_per_h[&h][n][lidx];
                if coeff.is_zero() {
                    continue;
                }
                p.add_assign_entry(r, c, &v.scale(coeff))?;
            }
        }
        out.push(p);
    }
    Ok(out)
}

/// Prop 12.1 check: X p(eps) = p(eps) X = [eps][2J0+1+eps] p(eps).
pub fn check_eigen_identity(real: &Realization, series: &EpsMatrix) -> QResult<bool> {
    let l = real.l;
    let x = super::casimir_x(real)?;
    let lhs = series.mul_left(&x)?;
    let lhs2 = series.mul_right(&x)?;
    let qq = &QScalar::q_pow_half(2, l)? - &QScalar::q_pow_half(-2, l)?;
    let eps_bracket = {
        let inv = &QScalar::one(l) / &qq;
        ULaurent::monomial(inv.clone(), 1).add(&ULaurent::monomial(-&inv, -1))
    };
    let rhs = series.scale_rows(|r| {
        let h = real.h_eig(1, r);
        let b = bracket_plus_eps(HalfInt::from_int(h + 1), l).unwrap();
        URat::from_laurent(eps_bracket.mul(&b))
    })?;
    Ok(lhs.sub(&rhs)?.is_zero() && lhs2.sub(&rhs)?.is_zero())
}

/// Casimir version (12.10): J^2 p(eps) = [J0+eps][J0+1+eps] p(eps).
pub fn check_casimir_eigen_identity(real: &Realization, series: &EpsMatrix) -> QResult<bool> {
    let l = real.l;
    let j2 = super::casimir(real)?;
    let lhs = series.mul_left(&j2)?;
    let lhs2 = series.mul_right(&j2)?;
    let rhs = series.scale_rows(|r| {
        let h = real.h_eig(1, r); // 2 J0
        let b1 = bracket_plus_eps(HalfInt::new(h), l).unwrap();
        let b2 = bracket_plus_eps(HalfInt::new(h + 2), l).unwrap();
        URat::from_laurent(b1.mul(&b2))
    })?;
    Ok(lhs.sub(&rhs)?.is_zero() && lhs2.sub(&rhs)?.is_zero())
}

/// Prop 12.2 check: X p~^(n) = p~^(n) X = sum_(l<n) a_l^n p~^(l).
pub fn check_derivative_relations(real: &Realization, n_max: usize) -> QResult<bool> {
    let l = real.l;
    let series = epsilon_projector(real, None)?;
    let tilde = scaling_derivatives(&series, n_max)?;
    let x = super::casimir_x(real)?;
    for n in 0..=n_max as i64 {
        let mut rhs = RepMatrix::zero(real.dim, l);
        for lidx in 0..n {
            for (&(r, c), v) in tilde[lidx as usize].iter() {
                let h = real.h_eig(1, r);
                let a = chain_coefficient(n, lidx, h, l)?;
                rhs.add_assign_entry(r, c, &v.scale(&a))?;
            }
        }
        let lhs = x.mul(&tilde[n as usize])?;
        let lhs2 = tilde[n as usize].mul(&x)?;
        if lhs != rhs || lhs2 != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtrep::{enumerate_basis, tensor::tensor};
    use crate::projector::extremal_projector;

    fn spin(twoj: i64, l: u32) -> Realization {
        let m = enumerate_basis(2, &[twoj, 0], l).unwrap();
        Realization::from_module(&m).unwrap()
    }

    #[test]
    fn p_at_zero_is_extremal_projector() {
        let l = 4;
        for twoj in [1i64, 2, 3] {
            let r = spin(twoj, l);
            let series = epsilon_projector(&r, None).unwrap();
            assert_eq!(series.eval_at_zero().unwrap(), extremal_projector(&r).unwrap());
        }
        let h = spin(1, l);
        let t = tensor(&h, &h).unwrap();
        let series = epsilon_projector(&t, None).unwrap();
        assert_eq!(series.eval_at_zero().unwrap(), extremal_projector(&t).unwrap());
    }

    #[test]
    fn eigen_identities() {
        let l = 4;
        let one = spin(2, l);
        let series = epsilon_projector(&one, None).unwrap();
        assert!(check_eigen_identity(&one, &series).unwrap());
        assert!(check_casimir_eigen_identity(&one, &series).unwrap());
        let h = spin(1, l);
        let t = tensor(&h, &h).unwrap();
        let series = epsilon_projector(&t, None).unwrap();
        assert!(check_eigen_identity(&t, &series).unwrap());
        assert!(check_casimir_eigen_identity(&t, &series).unwrap());
    }

    #[test]
    fn derivative_relations_hold() {
        let l = 4;
        for twoj in [1i64, 2] {
            let r = spin(twoj, l);
            assert!(check_derivative_relations(&r, 2).unwrap(), "2j = {}", twoj);
        }
        let h = spin(1, l);
        let t = tensor(&h, &h).unwrap();
        assert!(check_derivative_relations(&t, 2).unwrap());
    }

    #[test]
    fn d11_is_inverse_bracket() {
        // the n = 1 solution coefficient is exactly [2J0+1]^(-1)
        let l = 4;
        for h in [2i64, 4, 1, 3] {
            let d = chain_coefficient(1, 0, h, l).unwrap();
            let expect = qint(HalfInt::from_int(h + 1), l).unwrap();
            assert_eq!(d, expect); // a_0^1 = [2J0+1], so d_1^1 = 1/a_0^1
        }
    }

    #[test]
    fn adjoint_chain_on_spin_modules() {
        let l = 4;
        for twoj in [2i64, 4] {
            let r = spin(twoj, l);
            let ps = adjoint_projectors(&r, 3).unwrap();
            let x = crate::projector::casimir_x(&r).unwrap();
            for n in 1..ps.len() {
                let xp = x.mul(&ps[n]).unwrap();
                let px = ps[n].mul(&x).unwrap();
                assert_eq!(xp, ps[n - 1], "X p^{} 2j={}", n, twoj);
                assert_eq!(px, ps[n - 1], "p^{} X 2j={}", n, twoj);
            }
        }
    }

    #[test]
    fn adjoint_chain_on_tensor_cube() {
        let l = 4;
        let h = spin(1, l);
        let t2 = tensor(&h, &h).unwrap();
        let t3 = tensor(&t2, &h).unwrap();
        let ps = adjoint_projectors(&t3, 2).unwrap();
        let x = crate::projector::casimir_x(&t3).unwrap();
        // X p^(2) = p^(1) as an exact 8x8 identity
        assert_eq!(x.mul(&ps[2]).unwrap(), ps[1]);
        assert_eq!(ps[2].mul(&x).unwrap(), ps[1]);
        assert_eq!(x.mul(&ps[1]).unwrap(), ps[0]);
        // Casimir form (12.16)
        let j2 = crate::projector::casimir(&t3).unwrap();
        let diag = crate::projector::j0_bracket_product(
            &t3,
            HalfInt::ZERO,
            HalfInt::from_int(1),
        )
        .unwrap();
        for n in 1..ps.len() {
            let lhs = j2.mul(&ps[n]).unwrap();
            let rhs = diag.mul(&ps[n]).unwrap().add(&ps[n - 1]).unwrap();
            assert_eq!(lhs, rhs, "(12.16) n={}", n);
        }
    }
}
