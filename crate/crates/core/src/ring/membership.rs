//! Ideal membership in `I_n` by linear algebra on one degree slice.
//!
//! The quadratic generators of `I_n` span every monomial of degree `d` that
//! is not a rook monomial, so membership of a homogeneous `f` reduces to the
//! rook part of `f` lying in the span of the rook parts of `ℓ·m(R)`, where `ℓ`
//! runs over row and column sums and `R` over placements with `d - 1` rooks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::guard::Limits;
use crate::linalg::{SparseEchelon, SparseRow};
use crate::ring::ideal::linear_generators;
use crate::ring::monomial::GridMonomial;
use crate::ring::polynomial::Polynomial;
use crate::scalar::Scalar;
use crate::schensted::RookPlacement;

struct Columns {
    index: HashMap<GridMonomial, usize>,
}

impl Columns {
    fn row(&mut self, f: &Polynomial) -> SparseRow {
        let mut row: Vec<(usize, Scalar)> = f
            .terms()
            .filter(|(m, _)| m.is_rook_monomial())
            .map(|(m, c)| {
                let next = self.index.len();
                (*self.index.entry(m.clone()).or_insert(next), c.clone())
            })
            .collect();
        row.sort_by_key(|&(k, _)| k);
        row
    }
}

/// Whether the homogeneous polynomial `f` lies in `I_n`.
pub fn ideal_membership(f: &Polynomial, limits: &Limits) -> Result<bool> {
    if !f.is_homogeneous() {
        return Err(Error::domain(
            "membership is decided one degree at a time; split the input into homogeneous parts",
        ));
    }
    let Some(d) = f.degree() else {
        return Ok(true);
    };
    let n = f.n();
    let d = d as usize;
    if d == 0 {
        return Ok(false);
    }
    if d > n {
        // no rook monomials of degree d, so every monomial is in I_n
        return Ok(true);
    }
    let columns = RookPlacement::count_of_size(n, d);
    let rows = RookPlacement::count_of_size(n, d - 1) * 2 * n as u128;
    let slice = usize::try_from(columns + rows).unwrap_or(usize::MAX);
    limits.check_slice(slice)?;

    let field = f.field();
    let mut cols = Columns { index: HashMap::new() };
    let mut echelon = SparseEchelon::new();
    let linear = linear_generators(n, field);
    for r in RookPlacement::enumerate_size(n, d - 1) {
        let m = GridMonomial::of_placement(&r);
        for l in &linear {
            let row = cols.row(&l.mul_monomial(&m));
            if !row.is_empty() {
                echelon.insert(row);
            }
        }
    }
    Ok(echelon.contains(cols.row(f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::basis::shadow_monomial;
    use crate::ring::ideal::{ideal_generators, injection_sum_a};
    use crate::ring::text::parse_polynomial;
    use crate::scalar::Field;
    use crate::schensted::all_permutations;

    const Q: Field = Field::Rationals;

    #[test]
    fn injection_sum_is_member() {
        let a = injection_sum_a(&[1, 2], &[1, 2, 3], 4, Q).unwrap();
        assert!(ideal_membership(&a, &Limits::default()).unwrap());
    }

    #[test]
    fn shadow_monomials_are_not_members() {
        for n in 1..=4 {
            for w in all_permutations(n) {
                let p = Polynomial::monomial(n, Q, shadow_monomial(&w), Q.one());
                assert!(!ideal_membership(&p, &Limits::default()).unwrap(), "{w}");
            }
        }
    }

    #[test]
    fn generators_are_members() {
        for n in 1..=4 {
            for g in ideal_generators(n, Q).unwrap() {
                assert!(ideal_membership(&g, &Limits::default()).unwrap());
            }
        }
    }

    #[test]
    fn rejects_inhomogeneous_input() {
        let f = parse_polynomial("x[1,1]^2 - x[1,1]", 2, Q).unwrap();
        assert!(ideal_membership(&f, &Limits::default()).is_err());
    }

    #[test]
    fn slice_guard() {
        let tight = Limits {
            max_slice_monomials: 10,
            ..Limits::default()
        };
        let f = parse_polynomial("x[1,1]*x[2,2]", 4, Q).unwrap();
        assert!(matches!(ideal_membership(&f, &tight), Err(Error::Resource(_))));
    }
}
