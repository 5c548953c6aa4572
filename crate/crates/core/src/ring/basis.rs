//! The shadow-monomial basis of `F[x_{n×n}]/I_n`, its Hilbert series and
//! the evaluation matrix against permutation matrices.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::guard::Limits;
use crate::linalg::determinant;
use crate::ring::monomial::GridMonomial;
use crate::schensted::{all_permutations, shadow_set, Permutation};

/// `s(w) = m(S(w))`.
pub fn shadow_monomial(w: &Permutation) -> GridMonomial {
    GridMonomial::of_placement(&shadow_set(&w.graph()))
}

fn check(n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    limits.check_enumeration(n)
}

/// `(w, s(w))` for every `w ∈ S_n`, in lexicographic order of `w`.
pub fn standard_monomial_basis(n: usize, limits: &Limits) -> Result<Vec<(Permutation, GridMonomial)>> {
    check(n, limits)?;
    Ok(all_permutations(n)
        .into_par_iter()
        .map(|w| {
            let m = shadow_monomial(&w);
            (w, m)
        })
        .collect())
}

/// Coefficients of `Hilb(F[x_{n×n}]/I_n; q)` from `q^0` to `q^{n-1}`, read off
/// the degrees of the standard monomial basis.
pub fn hilbert_series(n: usize, limits: &Limits) -> Result<Vec<usize>> {
    let basis = standard_monomial_basis(n, limits)?;
    let mut out = vec![0usize; n];
    for (_, m) in &basis {
        out[m.degree() as usize] += 1;
    }
    Ok(out)
}

/// `E[w][v] = s(w)` evaluated at the permutation matrix of `v`, rows and
/// columns in lexicographic order.
pub fn evaluation_matrix(n: usize, limits: &Limits) -> Result<Vec<Vec<i64>>> {
    let basis = standard_monomial_basis(n, limits)?;
    let perms: Vec<Permutation> = basis.iter().map(|(w, _)| w.clone()).collect();
    Ok(basis
        .par_iter()
        .map(|(_, m)| {
            perms
                .iter()
                .map(|v| {
                    let hit = m.factors().iter().all(|&(c, _)| v.apply(c.i) == c.j);
                    i64::from(hit)
                })
                .collect()
        })
        .collect())
}

/// Exact determinant of [`evaluation_matrix`].
pub fn evaluation_determinant(n: usize, limits: &Limits) -> Result<BigInt> {
    Ok(determinant(&evaluation_matrix(n, limits)?))
}
