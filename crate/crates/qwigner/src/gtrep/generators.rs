//! Generator matrices on the Gelfand-Tsetlin basis: single-step amplitudes,
//! multi-step chain matrices for e_(k,k+s), Cartan actions, and the
//! q-commutator Cartan-Weyl cross-construction.
//!
//! The multi-step matrix element is a sum over index chains j_1..j_s of a
//! product of single-step radicands evaluated on the source pattern, with
//! the two coupling factors of each adjacent pair (j_r, j_(r+1)) removed and
//! replaced by the scalar prefactor sign(y_r) q^(y_r), where
//! y_r = l_(j_(r+1), k+r) - l_(j_r, k+r-1). The q-commutator construction
//! below provides the independent cross-check that pins every sign.

use crate::error::{QError, QResult};
use crate::qarith::{phase, qint, HalfInt, QScalar, RadicalValue};
use crate::rootsys;

use super::matrix::RepMatrix;
use super::{GTModule, GTPattern};

fn qb(x: i64, l: u32) -> QScalar {
    qint(HalfInt::from_int(x), l).expect("integer bracket")
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Raise,
    Lower,
}

/// Single-step radicand of the transition changing lambda_(j,m) by one, all
/// labels read from `p`, with optional omission of one factor in the row
/// above (`skip_up`) and one in the row below (`skip_down`).
fn step_radicand(
    p: &GTPattern,
    m: usize,
    j: usize,
    dir: Direction,
    skip_up: Option<usize>,
    skip_down: Option<usize>,
    l: u32,
) -> QScalar {
    let (up_off, down_off) = match dir {
        Direction::Raise => (0i64, -1i64),
        Direction::Lower => (1, 0),
    };
    let lj = p.lval(j, m);
    let mut num = QScalar::one(l);
    for i in 1..=(m + 1) {
        if skip_up == Some(i) {
            continue;
        }
        num = &num * &qb(p.lval(i, m + 1) - lj + up_off, l);
    }
    if m >= 2 {
        for i in 1..=(m - 1) {
            if skip_down == Some(i) {
                continue;
            }
            num = &num * &qb(p.lval(i, m - 1) - lj + down_off, l);
        }
    }
    let mut den = QScalar::one(l);
    for i in 1..=m {
        if i == j {
            continue;
        }
        let d = p.lval(i, m) - lj;
        den = &den * &(&qb(d + up_off, l) * &qb(d + down_off, l));
    }
    &(-&num) / &den
}

/// Matrix of e_(k,k+s) (raise) or e_(k+s,k) (lower) on the module.
pub fn generator_matrix(
    module: &GTModule,
    k: usize,
    s: usize,
    dir: Direction,
) -> QResult<RepMatrix> {
    let n = module.n;
    if k < 1 || s < 1 || k + s > n {
        return Err(QError::IndexOutOfRange(format!(
            "e with k={}, s={} on u({})",
            k, s, n
        )));
    }
    let l = module.l;
    let sign = match dir {
        Direction::Raise => 1i64,
        Direction::Lower => -1,
    };
    let mut mat = RepMatrix::zero(module.dim(), l);
    for (src_idx, p) in module.patterns.iter().enumerate() {
        // chains j_1..j_s with j_r in 1..=k+r-1
        let mut chain = vec![1usize; s];
        loop {
            // target pattern: row k+r-1 shifted at j_r
            let mut target = p.clone();
            for (r0, &j) in chain.iter().enumerate() {
                target = target.shifted(j, k + r0, sign);
            }
            if target.is_valid() {
                let mut radicand = if s % 2 == 0 {
                    -&QScalar::one(l)
                } else {
                    QScalar::one(l)
                };
                let mut pref = QScalar::one(l);
                let mut sgn = 1i64;
                for r in 1..=s {
                    let skip_up = if r < s { Some(chain[r]) } else { None };
                    let skip_down = if r > 1 { Some(chain[r - 2]) } else { None };
                    radicand = &radicand
                        * &step_radicand(p, k + r - 1, chain[r - 1], dir, skip_up, skip_down, l);
                }
                for r in 1..s {
                    let y = p.lval(chain[r], k + r) - p.lval(chain[r - 1], k + r - 1);
                    if y < 0 {
                        sgn = -sgn;
                    }
                    // raising carries q^(+y), lowering q^(-y); the Cartan-Weyl
                    // cross-construction pins the direction
                    pref = &pref * &QScalar::q_pow_half(2 * y * sign, l)?;
                }
                if !radicand.is_zero() {
                    let mut amp = RadicalValue::sqrt_of(&radicand);
                    if sgn < 0 {
                        amp = amp.neg();
                    }
                    amp = amp.scale(&pref);
                    let tgt_idx = *module
                        .index
                        .get(&target)
                        .expect("valid pattern missing from basis");
                    mat.add_assign_entry(tgt_idx, src_idx, &amp)?;
                }
            }
            // advance the chain odometer
            let mut r = 0;
            loop {
                if r == s {
                    break;
                }
                chain[r] += 1;
                if chain[r] <= k + r {
                    break;
                }
                chain[r] = 1;
                r += 1;
            }
            if r == s {
                break;
            }
        }
    }
    Ok(mat)
}

/// Diagonal matrices of q^(e_ii) for i = 1..n.
pub fn cartan_action(module: &GTModule) -> QResult<Vec<RepMatrix>> {
    let l = module.l;
    let mut out = Vec::new();
    for i in 0..module.n {
        let mut m = RepMatrix::zero(module.dim(), l);
        for (idx, w) in module.weights.iter().enumerate() {
            let v = QScalar::q_pow_half(2 * w[i], l)?;
            m.set(idx, idx, RadicalValue::from_scalar(v));
        }
        out.push(m);
    }
    Ok(out)
}

/// Diagonal q^(c * h_(alpha_i)) with c a half-integer (h = e_ii - e_(i+1,i+1)).
pub fn cartan_power(module: &GTModule, i: usize, c: HalfInt) -> QResult<RepMatrix> {
    let l = module.l;
    let mut m = RepMatrix::zero(module.dim(), l);
    for (idx, w) in module.weights.iter().enumerate() {
        let h = w[i - 1] - w[i];
        let v = QScalar::q_pow_half(c.twice() * h, l)?;
        m.set(idx, idx, RadicalValue::from_scalar(v));
    }
    Ok(m)
}

/// Diagonal bracket [h_(alpha_i) + shift].
pub fn h_bracket(module: &GTModule, i: usize, shift: i64) -> QResult<RepMatrix> {
    let l = module.l;
    let mut m = RepMatrix::zero(module.dim(), l);
    for (idx, w) in module.weights.iter().enumerate() {
        let h = w[i - 1] - w[i] + shift;
        let v = qb(h, l);
        if !v.is_zero() {
            m.set(idx, idx, RadicalValue::from_scalar(v));
        }
    }
    Ok(m)
}

/// Cartan-Weyl root-vector matrices for a realization of U_q(sl(n)) (or any
/// module with simple-generator matrices): positive and negative root
/// vectors for every positive root of A_(n-1) in the canonical lexicographic
/// normal ordering, built by the minimal-segment q-commutator plan.
pub fn cw_root_vectors(
    rank: usize,
    l: u32,
    e_plus: &[RepMatrix],
    e_minus: &[RepMatrix],
) -> QResult<(rootsys::RootSystem, Vec<RepMatrix>, Vec<RepMatrix>)> {
    let sys = rootsys::positive_roots(rootsys::Kind::A(rank))?;
    let ordering = rootsys::canonical_ordering(&sys);
    let plan = rootsys::cw_plan(&sys, &ordering)?;
    let nroots = sys.len();
    let mut plus: Vec<Option<RepMatrix>> = vec![None; nroots];
    let mut minus: Vec<Option<RepMatrix>> = vec![None; nroots];
    // simple roots first
    for (idx, root) in sys.positive_roots.iter().enumerate() {
        if root.iter().map(|&c| c.abs()).sum::<i64>() == 1 {
            let i = root.iter().position(|&c| c == 1).unwrap();
            plus[idx] = Some(e_plus[i].clone());
            minus[idx] = Some(e_minus[i].clone());
        }
    }
    // composites in ordering (lex) order; the plan components always have
    // fewer simple-root summands, so a topological sweep converges.
    let mut remaining: Vec<&rootsys::CWEntry> = plan.entries.iter().collect();
    while !remaining.is_empty() {
        let mut next = Vec::new();
        let before = remaining.len();
        for e in remaining {
            if let (Some(a), Some(b)) = (&plus[e.alpha], &plus[e.beta]) {
                let w = rational_to_halfint(e.weight)?;
                plus[e.gamma] = Some(a.q_commutator(b, w)?);
                let (am, bm) = (minus[e.alpha].as_ref().unwrap(), minus[e.beta].as_ref().unwrap());
                // e_-gamma = e_-beta e_-alpha - q^-(alpha,beta) e_-alpha e_-beta
                let qw = QScalar::q_pow_half(-w.twice(), l)?;
                minus[e.gamma] =
                    Some(bm.mul(am)?.sub(&am.mul(bm)?.scale_scalar(&qw))?);
            } else {
                next.push(e);
            }
        }
        remaining = next;
        assert!(remaining.len() < before, "cyclic Cartan-Weyl plan");
    }
    Ok((
        sys,
        plus.into_iter().map(Option::unwrap).collect(),
        minus.into_iter().map(Option::unwrap).collect(),
    ))
}

fn rational_to_halfint(r: num_rational::Rational64) -> QResult<HalfInt> {
    let twice = r * num_rational::Rational64::from(2);
    if !twice.is_integer() {
        return Err(QError::Other(format!("pairing {} is not half-integral", r)));
    }
    Ok(HalfInt::new(twice.to_integer()))
}

/// Cartan-Weyl matrix of e_(i,j) (i != j) on a GT module, built by nested
/// q-commutators along the canonical normal ordering.
pub fn cw_matrix(module: &GTModule, i: usize, j: usize) -> QResult<RepMatrix> {
    let n = module.n;
    if i == j || i < 1 || j < 1 || i > n || j > n {
        return Err(QError::IndexOutOfRange(format!("e_({},{}) on u({})", i, j, n)));
    }
    let rank = n - 1;
    let e_plus: Vec<RepMatrix> = (1..=rank)
        .map(|k| generator_matrix(module, k, 1, Direction::Raise))
        .collect::<QResult<_>>()?;
    let e_minus: Vec<RepMatrix> = (1..=rank)
        .map(|k| generator_matrix(module, k, 1, Direction::Lower))
        .collect::<QResult<_>>()?;
    let (sys, plus, minus) = cw_root_vectors(rank, module.l, &e_plus, &e_minus)?;
    let (a, b) = (i.min(j), i.max(j));
    // root of e_(a,b): alpha_a + ... + alpha_(b-1)
    let mut root = vec![0i64; rank];
    for c in root.iter_mut().take(b - 1).skip(a - 1) {
        *c = 1;
    }
    let idx = sys.root_index(&root).expect("root in system");
    Ok(if i < j { plus[idx].clone() } else { minus[idx].clone() })
}

/// Global phase check used by tests: (-1)^x for integer x.
pub fn int_phase(x: i64) -> i64 {
    phase(HalfInt::from_int(x)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtrep::enumerate_basis;
    use crate::qarith::{limit_one_radical, qfact};
    use num_rational::BigRational;
    use num_traits::{One, Signed, Zero};

    fn qb2(x: i64) -> QScalar {
        qb(x, 2)
    }

    #[test]
    fn su2_raising_matches_spin_amplitudes() {
        // e_12 on the spin-j module: amplitude sqrt([j-m][j+m+1])
        let l = 2;
        for twoj in 0..=4i64 {
            let m = enumerate_basis(2, &[twoj, 0], l).unwrap();
            let e = generator_matrix(&m, 1, 1, Direction::Raise).unwrap();
            for (idx, p) in m.patterns.iter().enumerate() {
                let lam = p.lam(1, 1);
                if lam == twoj {
                    continue;
                }
                let tgt = m.index[&p.shifted(1, 1, 1)];
                let amp = e.get(tgt, idx);
                // lam = j + m: [j-m] = [2j - lam], [j+m+1] = [lam+1]
                let expect =
                    RadicalValue::sqrt_of(&(&qb2(twoj - lam) * &qb2(lam + 1)));
                assert_eq!(amp, expect);
            }
        }
    }

    #[test]
    fn raising_kills_highest() {
        let m = enumerate_basis(3, &[2, 1, 0], 2).unwrap();
        let h = m.highest_index();
        for k in 1..=2 {
            for s in 1..=(3 - k) {
                let e = generator_matrix(&m, k, s, Direction::Raise).unwrap();
                for ((_, c), _) in e.iter() {
                    assert_ne!(*c, h, "raising operator acts on highest pattern");
                }
            }
        }
    }

    #[test]
    fn cartan_eigenvalues() {
        let l = 2;
        let m = enumerate_basis(2, &[2, 0], l).unwrap();
        let q_eii = cartan_action(&m).unwrap();
        // pattern [[2,0],[1]]: weights (1, 1)
        let p = GTPattern { rows: vec![vec![2, 0], vec![1]] };
        let idx = m.index[&p];
        let q1 = QScalar::q_pow_half(2, l).unwrap();
        assert_eq!(q_eii[0].get(idx, idx), RadicalValue::from_scalar(q1.clone()));
        assert_eq!(q_eii[1].get(idx, idx), RadicalValue::from_scalar(q1));
    }

    #[test]
    fn vector_rep_e13_is_elementary() {
        let l = 2;
        let m = enumerate_basis(3, &[1, 0, 0], l).unwrap();
        let e13 = generator_matrix(&m, 1, 2, Direction::Raise).unwrap();
        let cw = cw_matrix(&m, 1, 3).unwrap();
        assert_eq!(e13, cw);
        assert_eq!(e13.nnz(), 1);
        // the single entry has amplitude 1
        let (_, v) = e13.iter().next().unwrap();
        assert_eq!(v, &RadicalValue::one(l));
        let e31 = generator_matrix(&m, 1, 2, Direction::Lower).unwrap();
        let cw31 = cw_matrix(&m, 3, 1).unwrap();
        assert_eq!(e31, cw31);
        assert_eq!(e31, e13.transpose());
    }

    #[test]
    fn chain_formula_equals_commutator_construction() {
        let l = 2;
        // a spread of modules where multiple chains and signs are exercised
        for (n, hw) in [
            (3usize, vec![2i64, 1, 0]),
            (3, vec![2, 0, 0]),
            (3, vec![3, 1, 0]),
            (4, vec![1, 0, 0, 0]),
            (4, vec![1, 1, 0, 0]),
            (4, vec![2, 1, 0, 0]),
        ] {
            let m = enumerate_basis(n, &hw, l).unwrap();
            for k in 1..n {
                for s in 2..=(n - k) {
                    let e = generator_matrix(&m, k, s, Direction::Raise).unwrap();
                    let cw = cw_matrix(&m, k, k + s).unwrap();
                    assert_eq!(e, cw, "raise n={} hw={:?} k={} s={}", n, hw, k, s);
                    let f = generator_matrix(&m, k, s, Direction::Lower).unwrap();
                    let cwl = cw_matrix(&m, k + s, k).unwrap();
                    assert_eq!(f, cwl, "lower n={} hw={:?} k={} s={}", n, hw, k, s);
                }
            }
        }
    }

    #[test]
    fn single_step_radicands_nonnegative_at_q1() {
        let m = enumerate_basis(3, &[3, 1, 0], 2).unwrap();
        for dir in [Direction::Raise, Direction::Lower] {
            for k in 1..=2usize {
                let e = generator_matrix(&m, k, 1, dir).unwrap();
                for (_, v) in e.iter() {
                    let (c, r) = limit_one_radical(v).unwrap();
                    assert!(!c.is_zero());
                    assert!(r >= BigRational::zero());
                }
            }
        }
    }

    #[test]
    fn q_brackets_sanity() {
        let l = 2;
        assert_eq!(qfact(2, l).unwrap(), qb(2, l));
        assert!(qb(0, l).is_zero());
        assert_eq!(int_phase(3), -1);
        let one = QScalar::one(l);
        assert_eq!(&qb(1, l), &one);
    }
}
