//! Characters of the graded pieces of `F[x_{n×n}]/I_n` under row and
//! column permutation, computed as traces through normal forms.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::guard::Limits;
use crate::rep::characters::CharacterTable;
use crate::rep::partition::Partition;
use crate::ring::{standard_monomial_basis, GridMonomial, Polynomial, Reducer};
use crate::scalar::Field;
use crate::schensted::Permutation;

/// Values of a class function on `S_n × S_n`: `values[μ][ν]` is the value at
/// a pair with cycle types `μ` and `ν` (table order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedCharacter {
    pub n: usize,
    pub k: usize,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<i64>>,
}

impl GradedCharacter {
    pub fn at_identity(&self) -> i64 {
        let last = self.classes.len() - 1;
        self.values[last][last]
    }
}

/// Shadow monomials of degree `k`.
pub fn basis_slice(n: usize, k: usize, limits: &Limits) -> Result<Vec<GridMonomial>> {
    let mut slice: Vec<GridMonomial> = standard_monomial_basis(n, limits)?
        .into_iter()
        .map(|(_, m)| m)
        .filter(|m| m.degree() as usize == k)
        .collect();
    slice.sort();
    Ok(slice)
}

/// Trace of `(u, v)` on the span of `slice`: permute each basis monomial,
/// reduce, and read off its own coefficient.
pub fn graded_trace(reducer: &mut Reducer, slice: &[GridMonomial], u: &Permutation, v: &Permutation) -> Result<i64> {
    let n = reducer.n();
    let field = reducer.field();
    let mut trace = field.zero();
    for b in slice {
        let image = Polynomial::monomial(n, field, b.clone(), field.one()).permute(u, v)?;
        let reduced = reducer.normal_form(&image);
        trace += &reduced.coefficient(b);
    }
    trace
        .to_i64()
        .ok_or_else(|| Error::domain("trace is not an integer"))
}

fn check(n: usize, k: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    if k >= n {
        return Err(Error::domain(format!("degree k = {k} must satisfy 0 <= k <= n - 1 = {}", n - 1)));
    }
    limits.check_trace(n)
}

/// The character of the degree-`k` piece at every pair of cycle types, using
/// the canonical representative of each class.
pub fn graded_character(n: usize, k: usize, limits: &Limits) -> Result<GradedCharacter> {
    graded_character_on(n, k, limits, None)
}

/// Like [`graded_character`] but restricted to the listed `(μ, ν)` class
/// pairs when `pairs` is given; other entries are left at zero.
pub fn graded_character_on(
    n: usize,
    k: usize,
    limits: &Limits,
    pairs: Option<&[(Partition, Partition)]>,
) -> Result<GradedCharacter> {
    check(n, k, limits)?;
    let classes = crate::rep::partition::partitions(n);
    let slice = basis_slice(n, k, limits)?;
    let wanted: Vec<(usize, usize)> = match pairs {
        None => (0..classes.len())
            .flat_map(|a| (0..classes.len()).map(move |b| (a, b)))
            .collect(),
        Some(list) => list
            .iter()
            .map(|(mu, nu)| {
                let a = classes.iter().position(|c| c == mu);
                let b = classes.iter().position(|c| c == nu);
                match (a, b) {
                    (Some(a), Some(b)) => Ok((a, b)),
                    _ => Err(Error::domain(format!("({mu}), ({nu}) are not cycle types of S_{n}"))),
                }
            })
            .collect::<Result<_>>()?,
    };
    let reps: Vec<Permutation> = classes.iter().map(Partition::representative).collect();
    let traces: Vec<((usize, usize), i64)> = wanted
        .par_iter()
        .map_init(
            || Reducer::new(n, Field::Rationals),
            |reducer, &(a, b)| graded_trace(reducer, &slice, &reps[a], &reps[b]).map(|t| ((a, b), t)),
        )
        .collect::<Result<_>>()?;
    let mut values = vec![vec![0i64; classes.len()]; classes.len()];
    for ((a, b), t) in traces {
        values[a][b] = t;
    }
    Ok(GradedCharacter { n, k, classes, values })
}

/// `Σ_{λ_1 = n-k} χ^λ(μ)·χ^λ(ν)` from the character table.
pub fn expected_graded_character(table: &CharacterTable, k: usize) -> Result<GradedCharacter> {
    let n = table.n;
    if k >= n {
        return Err(Error::domain(format!("degree k = {k} must satisfy 0 <= k <= n - 1 = {}", n - 1)));
    }
    let size = table.partitions.len();
    let mut values = vec![vec![0i64; size]; size];
    for (row, lambda) in table.partitions.iter().enumerate() {
        if lambda.first_part() != n - k {
            continue;
        }
        let chi = &table.values[row];
        for (out, &x) in values.iter_mut().zip(chi) {
            for (v, &y) in out.iter_mut().zip(chi) {
                *v += x * y;
            }
        }
    }
    Ok(GradedCharacter {
        n,
        k,
        classes: table.partitions.clone(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_all_degrees() {
        let l = Limits::default();
        let t = CharacterTable::new(3, &l).unwrap();
        for k in 0..3 {
            assert_eq!(graded_character(3, k, &l).unwrap(), expected_graded_character(&t, k).unwrap());
        }
    }

    #[test]
    fn degree_zero_is_trivial() {
        let l = Limits::default();
        let g = graded_character(4, 0, &l).unwrap();
        assert!(g.values.iter().flatten().all(|&v| v == 1));
    }

    #[test]
    fn identity_value_for_n4() {
        let l = Limits::default();
        let id: Partition = "1,1,1,1".parse().unwrap();
        let g = graded_character_on(4, 1, &l, Some(&[(id.clone(), id)])).unwrap();
        assert_eq!(g.at_identity(), 9);
        assert!(graded_character(7, 1, &l).is_err());
    }
}
