//! Irreducible characters of `S_n` by the Murnaghan–Nakayama rule.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::guard::Limits;
use crate::rep::partition::{partitions, Partition};

/// `χ^λ(μ)` by removing border strips of lengths `μ_1, μ_2, ...`, using
/// beta-sets: removing a strip of length `r` moves one bead from `b` to
/// `b - r`, with sign `(-1)^{#beads strictly between}`.
pub fn character_value(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::domain(format!(
            "shape {lambda} and cycle type {mu} have different sizes"
        )));
    }
    let mut memo = HashMap::new();
    Ok(mn(&beta_set(lambda), mu.parts(), &mut memo))
}

fn beta_set(lambda: &Partition) -> Vec<usize> {
    let len = lambda.len();
    lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect()
}

/// `beta` is strictly decreasing; values are memoized per (beta-set, strips).
fn mn(beta: &[usize], strips: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&r, rest)) = strips.split_first() else {
        return 1;
    };
    let key = (beta.to_vec(), strips.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next: Vec<usize> = beta.to_vec();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn(&next, rest, memo);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// The character table of `S_n`: rows are shapes `λ`, columns cycle types
/// `μ`, both listed in the order of [`partitions`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    /// `values[λ][μ] = χ^λ(μ)`.
    pub values: Vec<Vec<i64>>,
    pub class_sizes: Vec<u128>,
}

impl CharacterTable {
    pub fn new(n: usize, limits: &Limits) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be at least 1"));
        }
        limits.check_characters(n)?;
        let parts = partitions(n);
        let values: Vec<Vec<i64>> = parts
            .par_iter()
            .map(|lambda| {
                let mut memo = HashMap::new();
                let beta = beta_set(lambda);
                parts.iter().map(|mu| mn(&beta, mu.parts(), &mut memo)).collect()
            })
            .collect();
        let class_sizes = parts.iter().map(Partition::class_size).collect();
        Ok(CharacterTable {
            n,
            partitions: parts,
            values,
            class_sizes,
        })
    }

    pub fn index_of(&self, p: &Partition) -> Result<usize> {
        self.partitions
            .iter()
            .position(|q| q == p)
            .ok_or_else(|| Error::domain(format!("{p} is not a partition of {}", self.n)))
    }

    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<i64> {
        Ok(self.values[self.index_of(lambda)?][self.index_of(mu)?])
    }

    pub fn order(&self) -> u128 {
        self.class_sizes.iter().sum()
    }

    /// `Σ_μ |C_μ| χ^λ(μ) χ^ρ(μ)`, which is `n!·δ_{λρ}`.
    pub fn row_product(&self, a: usize, b: usize) -> i128 {
        self.class_sizes
            .iter()
            .zip(self.values[a].iter().zip(&self.values[b]))
            .map(|(&c, (&x, &y))| c as i128 * x as i128 * y as i128)
            .sum()
    }

    /// `Σ_λ χ^λ(μ) χ^λ(ν)`, which is `z_μ·δ_{μν}`.
    pub fn column_product(&self, a: usize, b: usize) -> i128 {
        self.values.iter().map(|row| row[a] as i128 * row[b] as i128).sum()
    }

    /// Checks both orthogonality relations exactly.
    pub fn is_orthogonal(&self) -> bool {
        let order = self.order() as i128;
        let k = self.partitions.len();
        (0..k).all(|a| {
            (0..k).all(|b| {
                let rows = self.row_product(a, b) == if a == b { order } else { 0 };
                let z = self.partitions[a].centralizer_size() as i128;
                let cols = self.column_product(a, b) == if a == b { z } else { 0 };
                rows && cols
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(3, &Limits::default()).unwrap();
        assert_eq!(t.values, vec![vec![1, 1, 1], vec![-1, 0, 2], vec![1, -1, 1]]);
        assert!(t.is_orthogonal());
    }

    #[test]
    fn trivial_sign_and_dimensions() {
        for n in 1..=8 {
            let t = CharacterTable::new(n, &Limits::default()).unwrap();
            assert!(t.is_orthogonal(), "n = {n}");
            let last = t.partitions.len() - 1;
            for (m, mu) in t.partitions.iter().enumerate() {
                assert_eq!(t.values[0][m], 1);
                assert_eq!(t.values[last][m], mu.sign());
            }
            let identity = last;
            for (l, lambda) in t.partitions.iter().enumerate() {
                assert_eq!(t.values[l][identity] as u128, lambda.hook_dimension());
            }
        }
    }

    #[test]
    fn guard_and_size_mismatch() {
        assert!(CharacterTable::new(13, &Limits::default()).is_err());
        let a: Partition = "2,1".parse().unwrap();
        let b: Partition = "2,2".parse().unwrap();
        assert!(character_value(&a, &b).is_err());
    }
}
