//! Sparse matrices over canonical radical values, the common currency of
//! every realization in the crate.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{QError, QResult};
use crate::qarith::{HalfInt, QScalar, RadicalValue};

/// Sparse matrix with `RadicalValue` entries; rows and columns index a
/// module basis. All entries share one base denominator L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrix {
    pub dim: usize,
    pub l: u32,
    entries: BTreeMap<(usize, usize), RadicalValue>,
}

impl RepMatrix {
    pub fn zero(dim: usize, l: u32) -> Self {
        RepMatrix {
            dim,
            l,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(dim: usize, l: u32) -> Self {
        let mut m = RepMatrix::zero(dim, l);
        for i in 0..dim {
            m.entries.insert((i, i), RadicalValue::one(l));
        }
        m
    }

    /// Diagonal matrix from a per-index scalar.
    pub fn diagonal<F>(dim: usize, l: u32, f: F) -> Self
    where
        F: Fn(usize) -> RadicalValue,
    {
        let mut m = RepMatrix::zero(dim, l);
        for i in 0..dim {
            let v = f(i);
            if !v.is_zero() {
                m.entries.insert((i, i), v);
            }
        }
        m
    }

    pub fn set(&mut self, row: usize, col: usize, v: RadicalValue) {
        assert!(row < self.dim && col < self.dim);
        if v.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), v);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> RadicalValue {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(|| RadicalValue::zero(self.l))
    }

    pub fn add_assign_entry(&mut self, row: usize, col: usize, v: &RadicalValue) -> QResult<()> {
        if v.is_zero() {
            return Ok(());
        }
        let cur = self.get(row, col);
        let sum = cur.add(v)?;
        self.set(row, col, sum);
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &RadicalValue)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &RepMatrix) -> QResult<RepMatrix> {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.add_assign_entry(r, c, v)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &RepMatrix) -> QResult<RepMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> RepMatrix {
        let mut out = RepMatrix::zero(self.dim, self.l);
        for (&k, v) in &self.entries {
            out.entries.insert(k, v.neg());
        }
        out
    }

    pub fn scale(&self, s: &RadicalValue) -> RepMatrix {
        if s.is_zero() {
            return RepMatrix::zero(self.dim, self.l);
        }
        let mut out = RepMatrix::zero(self.dim, self.l);
        for (&k, v) in &self.entries {
            out.entries.insert(k, v.mul(s));
        }
        out
    }

    pub fn scale_scalar(&self, s: &QScalar) -> RepMatrix {
        self.scale(&RadicalValue::from_scalar(s.clone()))
    }

    pub fn mul(&self, other: &RepMatrix) -> QResult<RepMatrix> {
        assert_eq!(self.dim, other.dim, "dimension mismatch in matrix product");
        // group the right factor by row for sparse traversal
        let mut by_row: Vec<Vec<(usize, &RadicalValue)>> = vec![Vec::new(); other.dim];
        for (&(r, c), v) in &other.entries {
            by_row[r].push((c, v));
        }
        let mut out = RepMatrix::zero(self.dim, self.l);
        for (&(r, k), a) in &self.entries {
            for &(c, b) in &by_row[k] {
                out.add_assign_entry(r, c, &a.mul(b))?;
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> RepMatrix {
        let mut out = RepMatrix::zero(self.dim, self.l);
        for (&(r, c), v) in &self.entries {
            out.entries.insert((c, r), v.clone());
        }
        out
    }

    pub fn pow(&self, e: usize) -> QResult<RepMatrix> {
        let mut acc = RepMatrix::identity(self.dim, self.l);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Commutator `[A, B] = AB - BA`.
    pub fn commutator(&self, other: &RepMatrix) -> QResult<RepMatrix> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// q-commutator `[A, B]_(q^w) = AB - q^w BA` with half-integer weight w.
    pub fn q_commutator(&self, other: &RepMatrix, w: HalfInt) -> QResult<RepMatrix> {
        let qw = QScalar::q_pow_half(w.twice(), self.l)?;
        self.mul(other)?.sub(&other.mul(self)?.scale_scalar(&qw))
    }

    /// Exact trace; radical parts must cancel to a plain scalar.
    pub fn trace(&self) -> QResult<RadicalValue> {
        let mut acc = RadicalValue::zero(self.l);
        for i in 0..self.dim {
            acc = acc.add(&self.get(i, i))?;
        }
        Ok(acc)
    }

    /// Smallest N with self^N = 0, up to the given bound.
    pub fn nilpotency_degree(&self, bound: usize) -> QResult<Option<usize>> {
        let mut p = RepMatrix::identity(self.dim, self.l);
        for n in 0..=bound {
            if p.is_zero() {
                return Ok(Some(n));
            }
            p = p.mul(self)?;
        }
        if p.is_zero() {
            return Ok(Some(bound + 1));
        }
        Ok(None)
    }

    /// Apply to a dense column vector.
    pub fn apply(&self, vec: &[RadicalValue]) -> QResult<Vec<RadicalValue>> {
        assert_eq!(vec.len(), self.dim);
        let mut out = vec![RadicalValue::zero(self.l); self.dim];
        for (&(r, c), v) in &self.entries {
            if vec[c].is_zero() {
                continue;
            }
            out[r] = out[r].add(&v.mul(&vec[c]))?;
        }
        Ok(out)
    }
}

/// JSON shape: dimension, weight shift (when consistent), sparse entries.
#[derive(Serialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub weight_shift: Option<Vec<i64>>,
    pub entries: Vec<(usize, usize, crate::qarith::radical::RadicalJson)>,
}

impl RepMatrix {
    pub fn to_json(&self, weight_shift: Option<Vec<i64>>) -> MatrixJson {
        MatrixJson {
            dim: self.dim,
            weight_shift,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| (r, c, v.to_json(None)))
                .collect(),
        }
    }
}

/// Weight grading: check every nonzero entry connects weights differing by
/// one fixed shift, and return it.
pub fn weight_shift_of(
    mat: &RepMatrix,
    weights: &[Vec<i64>],
) -> QResult<Option<Vec<i64>>> {
    let mut shift: Option<Vec<i64>> = None;
    for (&(r, c), _) in mat.iter() {
        let d: Vec<i64> = weights[r]
            .iter()
            .zip(&weights[c])
            .map(|(a, b)| a - b)
            .collect();
        match &shift {
            None => shift = Some(d),
            Some(s) => {
                if s != &d {
                    return Err(QError::Other(format!(
                        "matrix is not weight-graded: shift {:?} vs {:?}",
                        s, d
                    )));
                }
            }
        }
    }
    Ok(shift)
}
