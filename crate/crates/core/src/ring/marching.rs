//! Rewriting a non-shadow rook monomial modulo `I_n` by marching along its
//! shadow lines.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::ideal::injection_sum_b;
use crate::ring::monomial::GridMonomial;
use crate::ring::polynomial::Polynomial;
use crate::scalar::Field;
use crate::schensted::{ballot_check, shadow_lines, Cell, RookPlacement};

/// Which ballot sequence failed, and hence which injection sum was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MarchingAxis {
    /// x-sequence failure; the rewrite is `m(R')·b_{S,T}`.
    X,
    /// y-sequence failure only; the rewrite is `m(R')·a_{S,T}`.
    Y,
}

/// The data produced while rewriting `m(R)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarchingRewrite {
    pub axis: MarchingAxis,
    /// The first prefix length with positive sum.
    pub a: usize,
    /// Cells visited by the march, `(i_1,j_1), ..., (i_p,j_p)` (transposed back
    /// to the original grid in the y case).
    pub collected: Vec<Cell>,
    /// `R'`, the cells of `R` not visited.
    pub reduced: RookPlacement,
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    /// An element of `I_n` whose leading term is `m(R)` with coefficient 1.
    pub polynomial: Polynomial,
}

/// Builds an element of `I_n` with leading term `m(R)` for a placement `R`
/// that is not a shadow set. The x-sequence is preferred when both fail.
pub fn marching_rewrite(placement: &RookPlacement, field: Field) -> Result<MarchingRewrite> {
    let check = ballot_check(placement);
    if check.is_shadow_set {
        return Err(Error::domain(format!(
            "{placement} is a shadow set; there is nothing to rewrite"
        )));
    }
    if let Some(a) = check.first_positive_x() {
        return Ok(march_x(placement, a, field));
    }
    let a = check
        .first_positive_y()
        .expect("a non-shadow placement fails one of the sequences");
    let mut out = march_x(&placement.transpose(), a, field);
    out.axis = MarchingAxis::Y;
    out.collected = out.collected.iter().map(|c| c.transpose()).collect();
    out.reduced = out.reduced.transpose();
    out.polynomial = out.polynomial.transpose();
    debug_assert_eq!(
        out.polynomial.leading_monomial().ok(),
        Some(GridMonomial::of_placement(placement))
    );
    Ok(out)
}

fn march_x(placement: &RookPlacement, a: usize, field: Field) -> MarchingRewrite {
    let n = placement.n();
    let diagram = shadow_lines(placement);
    let p = diagram
        .lines
        .iter()
        .position(|l| l.ray_x == a)
        .expect("the first positive prefix ends at a vertical ray");
    let mut current = diagram.lines[p].points[0];
    let mut collected = vec![current];
    for q in (0..p).rev() {
        let next = *diagram.lines[q]
            .points
            .iter()
            .find(|c| c.j < current.j)
            .expect("a lower line passes below every point of the line above it");
        assert!(next.i < current.i, "march must move strictly west");
        collected.push(next);
        current = next;
    }
    collected.reverse();
    let reduced = placement.without(&collected);
    let used_rows = reduced.occupied_rows();
    let t: Vec<usize> = collected
        .iter()
        .map(|c| c.i)
        .chain(a + 1..=n)
        .filter(|&i| !used_rows[i])
        .collect();
    let s: Vec<usize> = collected.iter().map(|c| c.j).collect();
    let n_bar = n - reduced.len();
    assert!(s.len() + t.len() > n_bar, "|S| + |T| must exceed the reduced grid size");
    let b = injection_sum_b(&s, &t, n, field).expect("S and T lie in [n]");
    let polynomial = b.mul_monomial(&GridMonomial::of_placement(&reduced));
    let (lead, coeff) = polynomial.leading_term().expect("b_{S,T} is nonzero for |S| <= |T|");
    assert!(
        *lead == GridMonomial::of_placement(placement) && coeff.is_one(),
        "leading term of the rewrite must be m(R)"
    );
    MarchingRewrite {
        axis: MarchingAxis::X,
        a,
        collected,
        reduced,
        s,
        t,
        polynomial,
    }
}
