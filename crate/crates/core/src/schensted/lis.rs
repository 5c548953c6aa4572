//! Longest increasing subsequences.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::guard::Limits;
use crate::schensted::permutation::{all_permutations, Permutation};
use crate::schensted::shadow::shadow_lines;

/// `lis(w)`, read as the number of shadow lines of the graph of `w` (the
/// first row length of its Schensted shape).
pub fn lis(w: &Permutation) -> usize {
    let by_shadows = shadow_lines(&w.graph()).lines.len();
    debug_assert_eq!(by_shadows, lis_dp(w.word()));
    by_shadows
}

/// Quadratic dynamic program over positions, independent of shadow lines.
pub fn lis_dp(word: &[usize]) -> usize {
    let mut best = vec![1usize; word.len()];
    for k in 0..word.len() {
        for m in 0..k {
            if word[m] < word[k] {
                best[k] = best[k].max(best[m] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// `(a_{n,1}, ..., a_{n,n})` by enumerating `S_n`.
pub fn lis_histogram(n: usize, limits: &Limits) -> Result<Vec<usize>> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    limits.check_enumeration(n)?;
    let counts = all_permutations(n)
        .par_iter()
        .fold(
            || vec![0usize; n],
            |mut acc, w| {
                acc[lis(w) - 1] += 1;
                acc
            },
        )
        .reduce(
            || vec![0usize; n],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_values() {
        let w: Permutation = "4,1,8,5,3,6,2,7".parse().unwrap();
        assert_eq!(lis(&w), 4);
        assert_eq!(lis(&Permutation::identity(6)), 6);
        assert_eq!(lis(&Permutation::longest(6)), 1);
    }

    #[test]
    fn histograms() {
        let l = Limits::default();
        assert_eq!(lis_histogram(1, &l).unwrap(), vec![1]);
        assert_eq!(lis_histogram(2, &l).unwrap(), vec![1, 1]);
        assert_eq!(lis_histogram(4, &l).unwrap(), vec![1, 13, 9, 1]);
        let h5 = lis_histogram(5, &l).unwrap();
        assert_eq!(h5.iter().sum::<usize>(), 120);
        assert_eq!((h5[0], h5[4]), (1, 1));
        assert!(matches!(lis_histogram(10, &l), Err(Error::Resource(_))));
    }
}
