//! Dense exact linear algebra: row reduction over a [`Field`], ranks modulo a
//! word-sized prime and fraction-free integer determinants.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::{Field, Scalar};

/// Reduced row echelon form computed in place. Returns the pivot column of
/// each nonzero row, in order.
pub fn row_reduce(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for v in rows[r].iter_mut().skip(c) {
                *v = &*v * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (k, pv) in pivot_row.iter().enumerate().skip(c) {
                if !pv.is_zero() {
                    row[k] = &row[k] - &(&factor * pv);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of row vectors over `field`.
pub fn rank(rows: &[Vec<Scalar>], field: Field) -> usize {
    if let Field::Prime(p) = field {
        let reduced: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| match s {
                        Scalar::Modular { value, .. } => *value,
                        Scalar::Rational(_) => panic!("rational entry in a prime field matrix"),
                    })
                    .collect()
            })
            .collect();
        return rank_mod(reduced, p);
    }
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

/// Solves `A x = b` where `A` is given by its columns. Returns `None` when the
/// system is inconsistent; free variables (if any) are set to zero.
pub fn solve_columns(columns: &[Vec<Scalar>], rhs: &[Scalar], field: Field) -> Option<Vec<Scalar>> {
    let nvars = columns.len();
    let neq = rhs.len();
    let mut aug: Vec<Vec<Scalar>> = (0..neq)
        .map(|i| {
            let mut row: Vec<Scalar> = columns.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.last() == Some(&nvars) {
        return None;
    }
    let mut x = vec![field.zero(); nvars];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][nvars].clone();
    }
    Some(x)
}

/// Rank of an integer matrix (entries already reduced) modulo the prime `p`.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = crate::scalar::pow_mod(rows[r][c], p - 2, p);
        for v in rows[r].iter_mut().skip(c) {
            *v = (*v as u128 * inv as u128 % p as u128) as u64;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let factor = row[c] % p;
            if factor == 0 {
                continue;
            }
            for k in c..ncols {
                let sub = (factor as u128 * pivot_row[k] as u128 % p as u128) as u64;
                row[k] = (row[k] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix by Bareiss fraction-free
/// elimination.
pub fn determinant(matrix: &[Vec<i64>]) -> BigInt {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "square matrix required");
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// A sparse row vector: `(column, value)` pairs with strictly increasing
/// columns and nonzero values.
pub type SparseRow = Vec<(usize, Scalar)>;

/// An echelon basis of a row space, grown one sparse row at a time. Each
/// stored row is monic at its leading (smallest) column.
#[derive(Debug, Clone, Default)]
pub struct SparseEchelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        SparseEchelon {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored basis. The remainder is zero exactly
    /// when `row` lies in the span.
    pub fn reduce(&self, row: SparseRow) -> SparseRow {
        let mut work: BTreeMap<usize, Scalar> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        let mut done: SparseRow = Vec::new();
        while let Some((&c, _)) = work.iter().next() {
            let v = work.remove(&c).expect("present");
            match self.pivots.get(&c) {
                None => done.push((c, v)),
                Some(pivot) => {
                    for (k, pv) in pivot.iter().skip(1) {
                        let delta = &v * pv;
                        match work.get_mut(k) {
                            Some(w) => {
                                *w -= &delta;
                                if w.is_zero() {
                                    work.remove(k);
                                }
                            }
                            None => {
                                work.insert(*k, -delta);
                            }
                        }
                    }
                }
            }
        }
        done
    }

    /// Adds `row` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let rem = self.reduce(row);
        let Some((lead, lv)) = rem.first().cloned() else {
            return false;
        };
        let inv = lv.inv().expect("nonzero leading entry");
        let monic = rem.into_iter().map(|(c, v)| (c, &v * &inv)).collect();
        self.pivots.insert(lead, monic);
        true
    }

    /// Stored rows keyed by leading column, in increasing order.
    pub fn rows(&self) -> impl DoubleEndedIterator<Item = (&usize, &SparseRow)> + '_ {
        self.pivots.iter()
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Field::Rationals.from_i64(v)).collect())
            .collect()
    }

    #[test]
    fn sparse_echelon_membership() {
        let f = Field::Rationals;
        let row = |v: &[(usize, i64)]| v.iter().map(|&(c, x)| (c, f.from_i64(x))).collect::<SparseRow>();
        let mut e = SparseEchelon::new();
        assert!(e.insert(row(&[(0, 2), (2, 4)])));
        assert!(e.insert(row(&[(1, 1), (2, 1)])));
        assert!(!e.insert(row(&[(0, 1), (1, 1), (2, 3)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(&[(0, 3), (1, -1), (2, 5)])));
        assert!(!e.contains(row(&[(2, 1)])));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&[vec![1, 1], vec![0, 1]]), BigInt::from(1));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(
            determinant(&[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 1]]),
            BigInt::from(0)
        );
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
    }

    #[test]
    fn rank_over_q_and_fp() {
        let m = q(&[&[1, 1], &[1, -1]]);
        assert_eq!(rank(&m, Field::Rationals), 2);
        let f2 = Field::Prime(2);
        let m2: Vec<Vec<Scalar>> = [[1, 1], [1, -1]]
            .iter()
            .map(|r| r.iter().map(|&v| f2.from_i64(v)).collect())
            .collect();
        assert_eq!(rank(&m2, f2), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        // columns (1,1,0) and (0,1,1)
        let cols = q(&[&[1, 1, 0], &[0, 1, 1]]);
        let rhs: Vec<Scalar> = [2, 5, 3].iter().map(|&v| Field::Rationals.from_i64(v)).collect();
        let x = solve_columns(&cols, &rhs, Field::Rationals).unwrap();
        assert_eq!(x, vec![Field::Rationals.from_i64(2), Field::Rationals.from_i64(3)]);
        let bad: Vec<Scalar> = [2, 5, 4].iter().map(|&v| Field::Rationals.from_i64(v)).collect();
        assert!(solve_columns(&cols, &bad, Field::Rationals).is_none());
    }
}
