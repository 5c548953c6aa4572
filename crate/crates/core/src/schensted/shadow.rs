//! Viennot's shadow-line construction on rook placements.

use serde::{Deserialize, Serialize};

use crate::schensted::permutation::Permutation;
use crate::schensted::rook::{Cell, RookPlacement};

/// One shadow line: the boundary of the union of the northeast shadows cast
/// by its points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowLine {
    /// Placement cells on the line, west to east; y-coordinates decrease along it.
    pub points: Vec<Cell>,
    /// Northeast corners `(x_{k+1}, y_k)` between consecutive points.
    pub corners: Vec<Cell>,
    /// x-coordinate of the infinite vertical ray.
    pub ray_x: usize,
    /// y-coordinate of the infinite horizontal ray.
    pub ray_y: usize,
    /// Lattice path vertices from the top of the vertical ray to the end of
    /// the horizontal ray; the value `n + 1` stands for infinity.
    pub path: Vec<(usize, usize)>,
}

/// All shadow lines of a placement, ordered southwest to northeast.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShadowDiagram {
    pub n: usize,
    pub lines: Vec<ShadowLine>,
}

impl ShadowDiagram {
    /// Index of the line carrying `cell`, if it is a placement cell.
    pub fn line_of(&self, cell: Cell) -> Option<usize> {
        self.lines.iter().position(|l| l.points.contains(&cell))
    }

    /// The northeast corners of every line, as a rook placement.
    pub fn corners(&self) -> RookPlacement {
        RookPlacement::from_cells_unchecked(
            self.n,
            self.lines.iter().flat_map(|l| l.corners.iter().copied()).collect(),
        )
    }

    pub fn ray_xs(&self) -> Vec<usize> {
        self.lines.iter().map(|l| l.ray_x).collect()
    }

    pub fn ray_ys(&self) -> Vec<usize> {
        self.lines.iter().map(|l| l.ray_y).collect()
    }
}

/// Runs the flashlight construction to exhaustion. A point lands on line `k`
/// when the longest southwest chain ending at it has `k` points; sweeping
/// west to east, that is the first line whose lowest point so far is above it.
pub fn shadow_lines(placement: &RookPlacement) -> ShadowDiagram {
    let n = placement.n();
    let mut lowest: Vec<usize> = Vec::new();
    let mut members: Vec<Vec<Cell>> = Vec::new();
    for &c in placement.cells() {
        let k = lowest.partition_point(|&y| y < c.j);
        if k == lowest.len() {
            lowest.push(c.j);
            members.push(vec![c]);
        } else {
            lowest[k] = c.j;
            members[k].push(c);
        }
    }
    let lines = members
        .into_iter()
        .map(|points| {
            let corners = points
                .windows(2)
                .map(|p| Cell::new(p[1].i, p[0].j))
                .collect();
            let mut path = vec![(points[0].i, n + 1)];
            for (k, p) in points.iter().enumerate() {
                if k > 0 {
                    path.push((p.i, points[k - 1].j));
                }
                path.push((p.i, p.j));
            }
            path.push((n + 1, points.last().unwrap().j));
            ShadowLine {
                ray_x: points[0].i,
                ray_y: points.last().unwrap().j,
                corners,
                points,
                path,
            }
        })
        .collect();
    ShadowDiagram { n, lines }
}

/// The northeast corners of the shadow lines of `placement`.
pub fn shadow_set(placement: &RookPlacement) -> RookPlacement {
    shadow_lines(placement).corners()
}

/// `S(w), S(S(w)), ...`, ending with the first empty placement.
pub fn iterated_shadow_sets(w: &Permutation) -> Vec<RookPlacement> {
    let mut out = Vec::new();
    let mut current = shadow_set(&w.graph());
    loop {
        let done = current.is_empty();
        out.push(current.clone());
        if done {
            return out;
        }
        current = shadow_set(&current);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rook(s: &str) -> RookPlacement {
        s.parse().unwrap()
    }

    #[test]
    fn running_example_lines() {
        let w: Permutation = "4,1,8,5,3,6,2,7".parse().unwrap();
        let d = shadow_lines(&w.graph());
        assert_eq!(d.lines.len(), 4);
        assert_eq!(d.ray_ys(), vec![1, 2, 6, 7]);
        assert_eq!(d.ray_xs(), vec![1, 3, 6, 8]);
        assert_eq!(d.corners(), rook("8; (2,4) (4,8) (5,5) (7,3)"));
        assert_eq!(
            d.lines[1].path,
            vec![(3, 9), (3, 8), (4, 8), (4, 5), (5, 5), (5, 3), (7, 3), (7, 2), (9, 2)]
        );
    }

    #[test]
    fn empty_placement_has_no_lines() {
        assert!(shadow_lines(&RookPlacement::empty(5)).lines.is_empty());
    }

    #[test]
    fn non_shadow_placement_lines() {
        let d = shadow_lines(&rook("8; (2,8) (3,7) (5,3) (6,5) (7,6)"));
        assert_eq!(d.ray_xs(), vec![2, 6, 7]);
        assert_eq!(d.ray_ys(), vec![3, 5, 6]);
    }

    #[test]
    fn identity_has_empty_shadow() {
        for n in 1..=6 {
            assert!(shadow_set(&Permutation::identity(n).graph()).is_empty());
        }
    }

    #[test]
    fn iterated_sets_of_running_example() {
        let w: Permutation = "4,1,8,5,3,6,2,7".parse().unwrap();
        let it = iterated_shadow_sets(&w);
        assert_eq!(
            it,
            vec![
                rook("8; (2,4) (4,8) (5,5) (7,3)"),
                rook("8; (5,8) (7,4)"),
                rook("8; (7,8)"),
                RookPlacement::empty(8),
            ]
        );
        assert_eq!(iterated_shadow_sets(&Permutation::identity(4)), vec![RookPlacement::empty(4)]);
    }
}
