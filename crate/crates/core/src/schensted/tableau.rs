//! Tableaux and the two avatars of the Schensted correspondence.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schensted::permutation::Permutation;
use crate::schensted::rook::RookPlacement;
use crate::schensted::shadow::shadow_lines;

/// A filling of a Young diagram by distinct positive integers, stored row by
/// row (top row first). The shape is read off the row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Builds a tableau, checking that rows are weakly decreasing in length,
    /// strictly increasing left to right and strictly increasing down columns.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let t = Tableau { rows };
        t.check_partial_standard()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<usize>>) -> Self {
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn check_partial_standard(&self) -> Result<()> {
        if self.rows.iter().any(Vec::is_empty) {
            return Err(Error::domain("tableau rows must be nonempty"));
        }
        if self.rows.windows(2).any(|r| r[0].len() < r[1].len()) {
            return Err(Error::domain("tableau row lengths must weakly decrease"));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::domain(format!("row {} is not strictly increasing", r + 1)));
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if row.iter().zip(above).any(|(b, a)| a >= b) {
                    return Err(Error::domain(format!(
                        "a column is not strictly increasing at row {}",
                        r + 1
                    )));
                }
            }
        }
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|p| p[0] == p[1]) || all.first() == Some(&0) {
            return Err(Error::domain("tableau entries must be distinct positive integers"));
        }
        Ok(())
    }

    /// Whether the entries are exactly `1..=size`.
    pub fn is_standard(&self) -> bool {
        let mut all: Vec<usize> = self.rows.iter().flatten().copied().collect();
        all.sort_unstable();
        all.iter().enumerate().all(|(k, &v)| v == k + 1) && self.check_partial_standard().is_ok()
    }
}

impl fmt::Display for Tableau {
    /// Rows as parenthesised comma lists, e.g. `(1,2,6,7),(3,5),(4),(8)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("(")?;
            for (m, v) in row.iter().enumerate() {
                if m > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The insertion tableau `P` and the recording tableau `Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TableauPair {
    pub p: Tableau,
    pub q: Tableau,
}

impl TableauPair {
    pub fn new(p: Tableau, q: Tableau) -> Result<Self> {
        if p.shape() != q.shape() {
            return Err(Error::domain(format!(
                "P has shape {:?} but Q has shape {:?}",
                p.shape(),
                q.shape()
            )));
        }
        Ok(TableauPair { p, q })
    }

    pub fn shape(&self) -> Vec<usize> {
        self.p.shape()
    }
}

/// Geometric Schensted: row `k` of `P` (resp. `Q`) holds the horizontal-ray
/// y-coordinates (resp. vertical-ray x-coordinates) of the `k`-th iterated
/// shadow diagram. Works on any rook placement, giving a pair of partial
/// standard tableaux whose entries are the occupied y- and x-coordinates.
pub fn viennot_partial(placement: &RookPlacement) -> TableauPair {
    let mut p_rows = Vec::new();
    let mut q_rows = Vec::new();
    let mut current = placement.clone();
    while !current.is_empty() {
        let d = shadow_lines(&current);
        p_rows.push(d.ray_ys());
        q_rows.push(d.ray_xs());
        current = d.corners();
    }
    TableauPair {
        p: Tableau::from_rows_unchecked(p_rows),
        q: Tableau::from_rows_unchecked(q_rows),
    }
}

pub fn viennot_schensted(w: &Permutation) -> TableauPair {
    viennot_partial(&w.graph())
}

/// Classical row insertion with a recording tableau.
pub fn insertion_schensted(w: &Permutation) -> TableauPair {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (pos, &value) in w.word().iter().enumerate() {
        let mut x = value;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![pos + 1]);
                break;
            }
            let row = &mut p[r];
            let k = row.partition_point(|&y| y < x);
            if k == row.len() {
                row.push(x);
                q[r].push(pos + 1);
                break;
            }
            x = std::mem::replace(&mut row[k], x);
            r += 1;
        }
    }
    TableauPair {
        p: Tableau::from_rows_unchecked(p),
        q: Tableau::from_rows_unchecked(q),
    }
}

/// Inverse of [`insertion_schensted`] by reverse bumping.
pub fn inverse_schensted(pair: &TableauPair) -> Result<Permutation> {
    if !pair.p.is_standard() || !pair.q.is_standard() {
        return Err(Error::domain("both tableaux must be standard with entries 1..n"));
    }
    if pair.p.shape() != pair.q.shape() {
        return Err(Error::domain("P and Q must have the same shape"));
    }
    let n = pair.p.size();
    let mut p = pair.p.rows.clone();
    let mut q = pair.q.rows.clone();
    let mut word = vec![0; n];
    for k in (1..=n).rev() {
        let r = q
            .iter()
            .position(|row| row.last() == Some(&k))
            .expect("largest entry of a standard tableau ends a row");
        q[r].pop();
        let mut x = p[r].pop().expect("same shape");
        if q[r].is_empty() {
            q.pop();
            p.pop();
        }
        for row in p[..r].iter_mut().rev() {
            let idx = row.partition_point(|&y| y < x) - 1;
            x = std::mem::replace(&mut row[idx], x);
        }
        word[k - 1] = x;
    }
    Permutation::new(word)
}

/// All standard Young tableaux of the given shape, in a fixed order.
pub fn standard_tableaux(shape: &[usize]) -> Vec<Tableau> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
    fill_tableaux(shape, 1, n, &mut rows, &mut out);
    out
}

fn fill_tableaux(
    shape: &[usize],
    next: usize,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if next > n {
        out.push(Tableau::from_rows_unchecked(rows.clone()));
        return;
    }
    for r in 0..shape.len() {
        let len = rows[r].len();
        if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
            rows[r].push(next);
            fill_tableaux(shape, next + 1, n, rows, out);
            rows[r].pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(t: &Tableau) -> Vec<Vec<usize>> {
        t.rows().to_vec()
    }

    #[test]
    fn running_example_both_avatars() {
        let w: Permutation = "4,1,8,5,3,6,2,7".parse().unwrap();
        let expected_p = vec![vec![1, 2, 6, 7], vec![3, 5], vec![4], vec![8]];
        let expected_q = vec![vec![1, 3, 6, 8], vec![2, 4], vec![5], vec![7]];
        let v = viennot_schensted(&w);
        assert_eq!(rows(&v.p), expected_p);
        assert_eq!(rows(&v.q), expected_q);
        assert_eq!(insertion_schensted(&w), v);
        assert_eq!(inverse_schensted(&v).unwrap(), w);
        assert_eq!(v.p.to_string(), "(1,2,6,7),(3,5),(4),(8)");
    }

    #[test]
    fn small_cases() {
        let w: Permutation = "2,1".parse().unwrap();
        let t = insertion_schensted(&w);
        assert_eq!(rows(&t.p), vec![vec![1], vec![2]]);
        assert_eq!(rows(&t.q), vec![vec![1], vec![2]]);
        let w: Permutation = "3,1,2".parse().unwrap();
        assert_eq!(insertion_schensted(&w).shape(), vec![2, 1]);
        let id = Permutation::identity(3);
        assert_eq!(rows(&viennot_schensted(&id).p), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn partial_pair_of_non_shadow_placement() {
        let r: RookPlacement = "8; (2,8) (3,7) (5,3) (6,5) (7,6)".parse().unwrap();
        let t = viennot_partial(&r);
        assert_eq!(rows(&t.p), vec![vec![3, 5, 6], vec![7], vec![8]]);
        assert_eq!(rows(&t.q), vec![vec![2, 6, 7], vec![3], vec![5]]);
    }

    #[test]
    fn inverse_rejects_bad_input() {
        let p = Tableau::new(vec![vec![1, 2]]).unwrap();
        let q = Tableau::new(vec![vec![1], vec![2]]).unwrap();
        assert!(TableauPair::new(p.clone(), q.clone()).is_err());
        let bad = TableauPair { p, q };
        assert!(inverse_schensted(&bad).is_err());
        let gap = Tableau::new(vec![vec![1, 3]]).unwrap();
        let pair = TableauPair { p: gap.clone(), q: gap };
        assert!(inverse_schensted(&pair).is_err());
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![2]]).is_err());
    }

    #[test]
    fn all_standard_pairs_for_n4_give_distinct_permutations() {
        let shapes: [&[usize]; 5] = [&[4], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]];
        let mut seen = std::collections::HashSet::new();
        for shape in shapes {
            let syt = standard_tableaux(shape);
            for p in &syt {
                for q in &syt {
                    let pair = TableauPair::new(p.clone(), q.clone()).unwrap();
                    let w = inverse_schensted(&pair).unwrap();
                    assert_eq!(insertion_schensted(&w), pair);
                    seen.insert(w);
                }
            }
        }
        assert_eq!(seen.len(), 24);
    }
}
