//! Recognising shadow sets among rook placements.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schensted::permutation::Permutation;
use crate::schensted::rook::RookPlacement;
use crate::schensted::shadow::shadow_lines;
use crate::schensted::tableau::{inverse_schensted, viennot_partial, Tableau, TableauPair};

/// The two `{+1, 0, -1}` sequences of a placement and the verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallotCheck {
    pub is_shadow_set: bool,
    /// `x_seq[i-1]`: `+1` if a shadow line has its vertical ray at `x = i`,
    /// `-1` if column `x = i` is empty, `0` otherwise.
    pub x_seq: Vec<i8>,
    /// `y_seq[j-1]`, defined the same way for horizontal rays and rows.
    pub y_seq: Vec<i8>,
}

impl BallotCheck {
    /// Smallest `a` (1-based) with `x_1 + ... + x_a > 0`.
    pub fn first_positive_x(&self) -> Option<usize> {
        first_positive_prefix(&self.x_seq)
    }

    /// Smallest `a` (1-based) with `y_1 + ... + y_a > 0`.
    pub fn first_positive_y(&self) -> Option<usize> {
        first_positive_prefix(&self.y_seq)
    }
}

fn first_positive_prefix(seq: &[i8]) -> Option<usize> {
    let mut sum = 0i64;
    for (k, &v) in seq.iter().enumerate() {
        sum += v as i64;
        if sum > 0 {
            return Some(k + 1);
        }
    }
    None
}

pub fn ballot_check(placement: &RookPlacement) -> BallotCheck {
    let n = placement.n();
    let diagram = shadow_lines(placement);
    let rows = placement.occupied_rows();
    let cols = placement.occupied_cols();
    let mut x_seq: Vec<i8> = (1..=n).map(|i| if rows[i] { 0 } else { -1 }).collect();
    let mut y_seq: Vec<i8> = (1..=n).map(|j| if cols[j] { 0 } else { -1 }).collect();
    for line in &diagram.lines {
        x_seq[line.ray_x - 1] = 1;
        y_seq[line.ray_y - 1] = 1;
    }
    let is_shadow_set =
        first_positive_prefix(&x_seq).is_none() && first_positive_prefix(&y_seq).is_none();
    BallotCheck {
        is_shadow_set,
        x_seq,
        y_seq,
    }
}

/// The unique `w` with `S(w) = R`: run the shadow construction on `R`, put the
/// unused y-coordinates (resp. x-coordinates) in a new first row of `P`
/// (resp. `Q`) and invert Schensted.
pub fn shadow_set_to_permutation(placement: &RookPlacement) -> Result<Permutation> {
    let check = ballot_check(placement);
    if !check.is_shadow_set {
        return Err(Error::domain(format!(
            "{placement} is not the shadow set of a permutation (ballot condition fails)"
        )));
    }
    let n = placement.n();
    let partial = viennot_partial(placement);
    let rows = placement.occupied_rows();
    let cols = placement.occupied_cols();
    let free_y: Vec<usize> = (1..=n).filter(|&j| !cols[j]).collect();
    let free_x: Vec<usize> = (1..=n).filter(|&i| !rows[i]).collect();
    let mut p_rows = vec![free_y];
    p_rows.extend(partial.p.rows().iter().cloned());
    let mut q_rows = vec![free_x];
    q_rows.extend(partial.q.rows().iter().cloned());
    let pair = TableauPair::new(Tableau::new(p_rows)?, Tableau::new(q_rows)?)?;
    inverse_schensted(&pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schensted::shadow::shadow_set;

    #[test]
    fn failing_example_has_positive_x_prefix_at_seven() {
        let r: RookPlacement = "8; (2,8) (3,7) (5,3) (6,5) (7,6)".parse().unwrap();
        let b = ballot_check(&r);
        assert!(!b.is_shadow_set);
        assert_eq!(b.x_seq, vec![-1, 1, 0, -1, 0, 1, 1, -1]);
        assert_eq!(b.y_seq, vec![-1, -1, 1, -1, 1, 1, 0, 0]);
        let prefix7: i64 = b.x_seq[..7].iter().map(|&v| v as i64).sum();
        assert_eq!(prefix7, 1);
        assert_eq!(b.first_positive_x(), Some(7));
    }

    #[test]
    fn marching_example_sequences() {
        let r: RookPlacement = "11; (2,9) (3,8) (4,3) (6,2) (7,6) (8,7) (9,5) (11,11)"
            .parse()
            .unwrap();
        let b = ballot_check(&r);
        assert_eq!(b.x_seq, vec![-1, 1, 0, 0, -1, 0, 1, 1, 0, -1, 1]);
        assert_eq!(b.y_seq, vec![-1, 1, 0, -1, 1, 0, 1, 0, 0, -1, 1]);
        assert_eq!(b.first_positive_x(), Some(8));
    }

    #[test]
    fn empty_placement_is_a_shadow_set() {
        let b = ballot_check(&RookPlacement::empty(4));
        assert!(b.is_shadow_set);
        assert_eq!(b.x_seq, vec![-1; 4]);
        assert_eq!(
            shadow_set_to_permutation(&RookPlacement::empty(3)).unwrap(),
            Permutation::identity(3)
        );
    }

    #[test]
    fn running_example_round_trip() {
        let r: RookPlacement = "8; (2,4) (4,8) (5,5) (7,3)".parse().unwrap();
        let w = shadow_set_to_permutation(&r).unwrap();
        assert_eq!(w.to_string(), "4,1,8,5,3,6,2,7");
        assert_eq!(shadow_set(&w.graph()), r);
    }

    #[test]
    fn rejects_non_shadow_sets() {
        let r: RookPlacement = "3; (1,1)".parse().unwrap();
        assert!(shadow_set_to_permutation(&r).is_err());
    }
}
