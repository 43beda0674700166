//! Gelfand-Tsetlin patterns and the explicit matrix realization of
//! U_q(u(n)): basis enumeration, Cartan action, single-step and multi-step
//! generator matrices, the q-commutator Cartan-Weyl cross-construction,
//! defining-relation verification, and tensor products with the symmetric
//! coproduct.

pub mod classical;
pub mod generators;
pub mod matrix;
pub mod relations;
pub mod tensor;

pub use matrix::{weight_shift_of, RepMatrix};
pub use tensor::Realization;

use std::collections::HashMap;

use crate::error::{QError, QResult};

/// Triangular Gelfand-Tsetlin array. `rows[0]` is the top row (length n),
/// `rows[k]` has length `n - k`; entries are the integers lambda_(i,j) with
/// row j stored at `rows[n - j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GTPattern {
    pub rows: Vec<Vec<i64>>,
}

impl GTPattern {
    pub fn n(&self) -> usize {
        self.rows[0].len()
    }

    /// lambda_(i,j), 1-indexed: i-th entry of the length-j row.
    pub fn lam(&self, i: usize, j: usize) -> i64 {
        let n = self.n();
        self.rows[n - j][i - 1]
    }

    /// Shifted label l_(i,j) = lambda_(i,j) - i.
    pub fn lval(&self, i: usize, j: usize) -> i64 {
        self.lam(i, j) - i as i64
    }

    /// Row sum S_j; S_0 = 0.
    pub fn row_sum(&self, j: usize) -> i64 {
        if j == 0 {
            return 0;
        }
        let n = self.n();
        self.rows[n - j].iter().sum()
    }

    /// gl(n) weight: w_i = S_i - S_(i-1).
    pub fn weight(&self) -> Vec<i64> {
        let n = self.n();
        (1..=n).map(|i| self.row_sum(i) - self.row_sum(i - 1)).collect()
    }

    /// Betweenness: lambda_(i,j+1) >= lambda_(i,j) >= lambda_(i+1,j+1).
    pub fn is_valid(&self) -> bool {
        let n = self.n();
        for j in 1..n {
            for i in 1..=j {
                if !(self.lam(i, j + 1) >= self.lam(i, j) && self.lam(i, j) >= self.lam(i + 1, j + 1))
                {
                    return false;
                }
            }
        }
        true
    }

    /// Pattern with lambda_(pos,row) shifted by delta.
    pub fn shifted(&self, pos: usize, row: usize, delta: i64) -> GTPattern {
        let n = self.n();
        let mut rows = self.rows.clone();
        rows[n - row][pos - 1] += delta;
        GTPattern { rows }
    }
}

/// A U_q(u(n)) module in its Gelfand-Tsetlin basis.
#[derive(Clone, Debug)]
pub struct GTModule {
    pub n: usize,
    pub l: u32,
    pub highest_weight: Vec<i64>,
    pub patterns: Vec<GTPattern>,
    pub index: HashMap<GTPattern, usize>,
    /// gl(n) weight of each basis vector.
    pub weights: Vec<Vec<i64>>,
}

/// Enumerate the full betweenness-valid basis in deterministic
/// (lexicographic, rows read top-to-bottom) order.
pub fn enumerate_basis(n: usize, highest_weight: &[i64], l: u32) -> QResult<GTModule> {
    assert!(n >= 1);
    assert_eq!(highest_weight.len(), n);
    for i in 0..n - 1 {
        if highest_weight[i] < highest_weight[i + 1] {
            return Err(QError::InvalidHighestWeight);
        }
    }
    let mut patterns = Vec::new();
    let mut rows = vec![highest_weight.to_vec()];
    fill_rows(n, &mut rows, &mut patterns);
    patterns.sort();
    let index = patterns
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let weights = patterns.iter().map(|p| p.weight()).collect();
    Ok(GTModule {
        n,
        l,
        highest_weight: highest_weight.to_vec(),
        patterns,
        index,
        weights,
    })
}

fn fill_rows(n: usize, rows: &mut Vec<Vec<i64>>, out: &mut Vec<GTPattern>) {
    let depth = rows.len();
    if depth == n {
        out.push(GTPattern { rows: rows.clone() });
        return;
    }
    let above = rows[depth - 1].clone();
    let len = above.len() - 1;
    let mut cur = vec![0i64; len];
    fn rec(
        above: &[i64],
        cur: &mut Vec<i64>,
        pos: usize,
        n: usize,
        rows: &mut Vec<Vec<i64>>,
        out: &mut Vec<GTPattern>,
    ) {
        let len = above.len() - 1;
        if pos == len {
            rows.push(cur.clone());
            fill_rows(n, rows, out);
            rows.pop();
            return;
        }
        // above[pos] >= cur[pos] >= above[pos+1]
        for v in (above[pos + 1]..=above[pos]).rev() {
            cur[pos] = v;
            rec(above, cur, pos + 1, n, rows, out);
        }
    }
    rec(&above, &mut cur, 0, n, rows, out);
}

impl GTModule {
    pub fn dim(&self) -> usize {
        self.patterns.len()
    }

    /// Index of the highest-weight pattern (every row the truncated top row).
    pub fn highest_index(&self) -> usize {
        let mut rows = Vec::new();
        for k in 0..self.n {
            rows.push(self.highest_weight[..self.n - k].to_vec());
        }
        self.index[&GTPattern { rows }]
    }
}

/// Weyl dimension of the u(n) irrep with the given highest weight.
pub fn weyl_dim(hw: &[i64]) -> u64 {
    let n = hw.len();
    let l: Vec<i64> = hw.iter().enumerate().map(|(i, &x)| x + (n - 1 - i) as i64).collect();
    let mut num = 1i64;
    let mut den = 1i64;
    for i in 0..n {
        for j in (i + 1)..n {
            num *= l[i] - l[j];
            den *= (j - i) as i64;
        }
    }
    (num / den) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_rep_of_u3() {
        let m = enumerate_basis(3, &[1, 0, 0], 2).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(weyl_dim(&[1, 0, 0]), 3);
    }

    #[test]
    fn spin_modules_dimension() {
        for twoj in 0..=6 {
            let m = enumerate_basis(2, &[twoj, 0], 2).unwrap();
            assert_eq!(m.dim(), (twoj + 1) as usize);
        }
    }

    #[test]
    fn adjoint_of_u3() {
        let m = enumerate_basis(3, &[2, 1, 0], 2).unwrap();
        assert_eq!(m.dim(), 8);
        assert_eq!(weyl_dim(&[2, 1, 0]), 8);
    }

    #[test]
    fn invalid_highest_weight() {
        assert!(matches!(
            enumerate_basis(3, &[0, 1, 0], 2),
            Err(QError::InvalidHighestWeight)
        ));
    }

    #[test]
    fn betweenness_counts_match_weyl() {
        for hw in [[3i64, 1, 0], [2, 2, 0], [4, 2, 1], [3, 3, 3]] {
            let m = enumerate_basis(3, &hw, 2).unwrap();
            assert_eq!(m.dim() as u64, weyl_dim(&hw), "{:?}", hw);
        }
    }

    #[test]
    fn highest_pattern_weight() {
        let m = enumerate_basis(3, &[2, 1, 0], 2).unwrap();
        let h = m.highest_index();
        assert_eq!(m.weights[h], vec![2, 1, 0]);
    }

    #[test]
    fn deterministic_order() {
        let m = enumerate_basis(2, &[2, 0], 2).unwrap();
        let labels: Vec<i64> = m.patterns.iter().map(|p| p.lam(1, 1)).collect();
        assert_eq!(labels, vec![0, 1, 2]);
    }
}
