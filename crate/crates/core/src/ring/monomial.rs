//! Monomials on the `n×n` variable grid and the Toeplitz term order.

use std::cmp::{Ordering, Reverse};
use std::fmt;

use crate::error::{Error, Result};
use crate::schensted::{Cell, RookPlacement};

/// Sort key of a variable: smaller key means larger variable. Variables on a
/// lower antidiagonal `i + j` are larger; within an antidiagonal the larger
/// first index wins, giving `x11 > x21 > x12 > x31 > x22 > x13 > ...`.
pub fn variable_key(c: Cell) -> (usize, Reverse<usize>) {
    (c.i + c.j, Reverse(c.i))
}

/// Compares two variables under the Toeplitz order.
pub fn compare_variables(a: Cell, b: Cell) -> Ordering {
    variable_key(b).cmp(&variable_key(a))
}

/// All `n²` variables, largest first.
pub fn variables_descending(n: usize) -> Vec<Cell> {
    let mut v: Vec<Cell> = (1..=n)
        .flat_map(|i| (1..=n).map(move |j| Cell::new(i, j)))
        .collect();
    v.sort_by_key(|&c| variable_key(c));
    v
}

/// A monomial `∏ x_{i,j}^{e}` on the `n×n` grid. Factors are stored largest
/// variable first with positive exponents; the empty product is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridMonomial {
    n: usize,
    factors: Vec<(Cell, u32)>,
}

impl GridMonomial {
    pub fn one(n: usize) -> Self {
        GridMonomial { n, factors: Vec::new() }
    }

    pub fn variable(n: usize, c: Cell) -> Self {
        debug_assert!(c.i >= 1 && c.j >= 1 && c.i <= n && c.j <= n);
        GridMonomial {
            n,
            factors: vec![(c, 1)],
        }
    }

    /// Builds a monomial from `(cell, exponent)` pairs; repeated cells
    /// accumulate and zero exponents vanish.
    pub fn from_factors(n: usize, factors: impl IntoIterator<Item = (Cell, u32)>) -> Result<Self> {
        let mut out: Vec<(Cell, u32)> = Vec::new();
        for (c, e) in factors {
            if c.i == 0 || c.j == 0 || c.i > n || c.j > n {
                return Err(Error::domain(format!("variable x[{},{}] outside the {n}x{n} grid", c.i, c.j)));
            }
            if e > 0 {
                out.push((c, e));
            }
        }
        out.sort_by_key(|&(c, _)| variable_key(c));
        let mut merged: Vec<(Cell, u32)> = Vec::with_capacity(out.len());
        for (c, e) in out {
            match merged.last_mut() {
                Some((last, acc)) if *last == c => *acc += e,
                _ => merged.push((c, e)),
            }
        }
        Ok(GridMonomial { n, factors: merged })
    }

    /// The squarefree monomial `m(S) = ∏_{(i,j) ∈ S} x_{i,j}`.
    pub fn of_placement(placement: &RookPlacement) -> Self {
        let mut factors: Vec<(Cell, u32)> = placement.cells().iter().map(|&c| (c, 1)).collect();
        factors.sort_by_key(|&(c, _)| variable_key(c));
        GridMonomial {
            n: placement.n(),
            factors,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[(Cell, u32)] {
        &self.factors
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, c: Cell) -> u32 {
        self.factors
            .iter()
            .find(|&&(d, _)| d == c)
            .map_or(0, |&(_, e)| e)
    }

    /// Squarefree with no two variables in a common row or column.
    pub fn is_rook_monomial(&self) -> bool {
        self.as_placement().is_some()
    }

    /// The support as a rook placement, when this is a rook monomial.
    pub fn as_placement(&self) -> Option<RookPlacement> {
        if self.factors.iter().any(|&(_, e)| e != 1) {
            return None;
        }
        RookPlacement::new(self.n, self.factors.iter().map(|&(c, _)| c).collect()).ok()
    }

    pub fn mul(&self, other: &GridMonomial) -> GridMonomial {
        assert_eq!(self.n, other.n, "grid size mismatch");
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut a, mut b) = (0, 0);
        while a < self.factors.len() && b < other.factors.len() {
            let (ca, ea) = self.factors[a];
            let (cb, eb) = other.factors[b];
            match variable_key(ca).cmp(&variable_key(cb)) {
                Ordering::Less => {
                    out.push((ca, ea));
                    a += 1;
                }
                Ordering::Greater => {
                    out.push((cb, eb));
                    b += 1;
                }
                Ordering::Equal => {
                    out.push((ca, ea + eb));
                    a += 1;
                    b += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[a..]);
        out.extend_from_slice(&other.factors[b..]);
        GridMonomial {
            n: self.n,
            factors: out,
        }
    }

    /// Image under `x_{i,j} ↦ f(i,j)`, where `f` permutes cells.
    pub fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> GridMonomial {
        GridMonomial::from_factors(self.n, self.factors.iter().map(|&(c, e)| (f(c), e)))
            .expect("cell map stays inside the grid")
    }

    pub fn transpose(&self) -> GridMonomial {
        self.map_cells(Cell::transpose)
    }
}

impl Ord for GridMonomial {
    /// Lexicographic comparison of exponent vectors read from the largest
    /// variable down. Grid sizes are not compared; use
    /// [`toeplitz_compare`] for a checked comparison.
    fn cmp(&self, other: &Self) -> Ordering {
        for (&(ca, ea), &(cb, eb)) in self.factors.iter().zip(&other.factors) {
            if ca != cb {
                // the side holding the larger variable has a positive exponent
                // where the other side has zero
                return variable_key(cb).cmp(&variable_key(ca));
            }
            if ea != eb {
                return ea.cmp(&eb);
            }
        }
        self.factors.len().cmp(&other.factors.len())
    }
}

impl PartialOrd for GridMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Toeplitz comparison of two monomials on the same grid.
pub fn toeplitz_compare(a: &GridMonomial, b: &GridMonomial) -> Result<Ordering> {
    if a.n != b.n {
        return Err(Error::domain(format!(
            "cannot compare monomials on grids of size {} and {}",
            a.n, b.n
        )));
    }
    Ok(a.cmp(b))
}

impl fmt::Display for GridMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (k, &(c, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            write!(f, "x[{},{}]", c.i, c.j)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
