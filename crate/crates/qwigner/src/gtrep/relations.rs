//! Exact verification of the defining relations of U_q(sl(n)) on a
//! realization: Cartan conjugation, [e_i, f_j] = delta_ij [h_i], distant
//! commutativity, and the adjacent Serre relations.

use num_rational::Rational64;

use crate::error::QResult;
use crate::qarith::{HalfInt, QScalar};
use crate::rootsys;

use super::matrix::RepMatrix;
use super::Realization;

#[derive(Debug, Clone)]
pub struct RelationReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Run every defining relation on the realization, reporting the first
/// witness entry of each violation.
pub fn verify_relations(real: &Realization) -> QResult<RelationReport> {
    let rank = real.n - 1;
    let l = real.l;
    let sys = rootsys::positive_roots(rootsys::Kind::A(rank))?;
    let mut rep = RelationReport { checked: 0, failures: Vec::new() };

    fn fail(failures: &mut Vec<String>, name: String, m: &RepMatrix) {
        if let Some((&(r, c), v)) = m.iter().next() {
            failures
                .push(format!("{} has nonzero entry ({}, {}) = {}", name, r, c, v.square()));
        }
    }

    // Cartan conjugation: q^(h_i) e_(+-j) q^(-h_i) = q^(+-(a_i,a_j)) e_(+-j),
    // i.e. the weight grading h_i(row) - h_i(col) = +-(a_i, a_j) entrywise.
    for i in 1..=rank {
        for j in 1..=rank {
            let aij = sys.pairing[i - 1][j - 1];
            for (sgn, mat) in [(1i64, &real.e_plus[j - 1]), (-1, &real.e_minus[j - 1])] {
                rep.checked += 1;
                for (&(r, c), _) in mat.iter() {
                    let diff = Rational64::from(real.h_eig(i, r) - real.h_eig(i, c));
                    if diff != aij * Rational64::from(sgn) {
                        rep.failures.push(format!(
                            "Cartan conjugation fails for q^h_{} on e[{}{}]: entry ({}, {})",
                            i,
                            if sgn > 0 { "+" } else { "-" },
                            j,
                            r,
                            c
                        ));
                        break;
                    }
                }
            }
        }
    }

    // [e_i, f_j] = delta_ij [h_i]
    for i in 1..=rank {
        for j in 1..=rank {
            rep.checked += 1;
            let comm = real.e_plus[i - 1].commutator(&real.e_minus[j - 1])?;
            let expect = if i == j {
                real.h_bracket(i, 0)?
            } else {
                RepMatrix::zero(real.dim, l)
            };
            let diff = comm.sub(&expect)?;
            if !diff.is_zero() {
                fail(&mut rep.failures, format!("[e_{}, f_{}]", i, j), &diff);
            }
        }
    }

    // distant commutativity
    for i in 1..=rank {
        for j in (i + 2)..=rank {
            for (name, a, b) in [
                ("e", &real.e_plus[i - 1], &real.e_plus[j - 1]),
                ("f", &real.e_minus[i - 1], &real.e_minus[j - 1]),
            ] {
                rep.checked += 1;
                let comm = a.commutator(b)?;
                if !comm.is_zero() {
                    fail(&mut rep.failures, format!("[{}_{}, {}_{}]", name, i, name, j), &comm);
                }
            }
        }
    }

    // adjacent Serre: [[x_i, x_j]_q, x_j]_q = 0 for |i-j| = 1, both signs
    for i in 1..=rank {
        for j in 1..=rank {
            if (i as i64 - j as i64).abs() != 1 {
                continue;
            }
            for (name, xi, xj, sign) in [
                ("e", &real.e_plus[i - 1], &real.e_plus[j - 1], 1i64),
                ("f", &real.e_minus[i - 1], &real.e_minus[j - 1], -1),
            ] {
                rep.checked += 1;
                // roots: +-alpha_i, +-alpha_j; weights from the bilinear form
                let aij = sys.pairing[i - 1][j - 1] * Rational64::from(1);
                let ajj = sys.pairing[j - 1][j - 1];
                let w1 = to_half(aij)?; // (alpha_i, alpha_j), sign-independent
                let w2 = to_half(aij + ajj)?; // (alpha_i + alpha_j, alpha_j)
                let _ = sign;
                let inner = xi.q_commutator(xj, w1)?;
                let outer = q_comm_weighted(&inner, xj, w2, l)?;
                if !outer.is_zero() {
                    fail(&mut rep.failures, format!("Serre [[{}_{}, {}_{}]_q, {}_{}]_q", name, i, name, j, name, j), &outer);
                }
            }
        }
    }
    Ok(rep)
}

fn to_half(r: Rational64) -> QResult<HalfInt> {
    let twice = r * Rational64::from(2);
    assert!(twice.is_integer());
    Ok(HalfInt::new(twice.to_integer()))
}

fn q_comm_weighted(a: &RepMatrix, b: &RepMatrix, w: HalfInt, l: u32) -> QResult<RepMatrix> {
    let qw = QScalar::q_pow_half(w.twice(), l)?;
    a.mul(b)?.sub(&b.mul(a)?.scale_scalar(&qw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtrep::{enumerate_basis, Realization};
    use crate::qarith::RadicalValue;

    #[test]
    fn vector_reps_satisfy_relations() {
        for (n, hw) in [(3usize, vec![1i64, 0, 0]), (4, vec![1, 0, 0, 0])] {
            let m = enumerate_basis(n, &hw, 2).unwrap();
            let real = Realization::from_module(&m).unwrap();
            let rep = verify_relations(&real).unwrap();
            assert!(rep.all_pass(), "{:?}", rep.failures);
            assert!(rep.checked > 0);
        }
    }

    #[test]
    fn corrupted_entry_is_reported() {
        let m = enumerate_basis(3, &[1, 0, 0], 2).unwrap();
        let mut real = Realization::from_module(&m).unwrap();
        // corrupt e_1
        let bad = RadicalValue::from_scalar(QScalar::from_int(7, 2));
        real.e_plus[0].set(0, 0, bad);
        let rep = verify_relations(&real).unwrap();
        assert!(!rep.all_pass());
        assert!(rep
            .failures
            .iter()
            .any(|f| f.contains("Cartan conjugation") || f.contains("[e_1, f_1]")));
    }
}
