use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A grid point `(i, j)`, plotted at `x = i`, `y = j`. The same pair indexes
/// the variable `x_{i,j}`, and the graph of a permutation `w` consists of the
/// cells `(i, w(i))`. Every other module uses this convention unchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
}

impl Cell {
    pub const fn new(i: usize, j: usize) -> Self {
        Cell { i, j }
    }

    pub fn transpose(self) -> Cell {
        Cell { i: self.j, j: self.i }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// A set of cells of the `n×n` grid with at most one cell in each row and in
/// each column. Cells are kept sorted by first coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookPlacement {
    n: usize,
    cells: Vec<Cell>,
}

impl RookPlacement {
    pub fn new(n: usize, mut cells: Vec<Cell>) -> Result<Self> {
        let mut row_used = vec![false; n + 1];
        let mut col_used = vec![false; n + 1];
        for c in &cells {
            if c.i == 0 || c.j == 0 || c.i > n || c.j > n {
                return Err(Error::domain(format!("cell {c} lies outside the {n}x{n} grid")));
            }
            if std::mem::replace(&mut row_used[c.i], true) {
                return Err(Error::domain(format!(
                    "two cells share first coordinate {} (not a rook placement)",
                    c.i
                )));
            }
            if std::mem::replace(&mut col_used[c.j], true) {
                return Err(Error::domain(format!(
                    "two cells share second coordinate {} (not a rook placement)",
                    c.j
                )));
            }
        }
        cells.sort_unstable();
        Ok(RookPlacement { n, cells })
    }

    pub(crate) fn from_cells_unchecked(n: usize, mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        debug_assert!(RookPlacement::new(n, cells.clone()).is_ok());
        RookPlacement { n, cells }
    }

    pub fn empty(n: usize) -> Self {
        RookPlacement { n, cells: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    pub fn transpose(&self) -> RookPlacement {
        RookPlacement::from_cells_unchecked(self.n, self.cells.iter().map(|c| c.transpose()).collect())
    }

    /// `occupied[i]` is true when some cell has first coordinate `i` (index 0 unused).
    pub fn occupied_rows(&self) -> Vec<bool> {
        let mut v = vec![false; self.n + 1];
        for c in &self.cells {
            v[c.i] = true;
        }
        v
    }

    /// `occupied[j]` is true when some cell has second coordinate `j` (index 0 unused).
    pub fn occupied_cols(&self) -> Vec<bool> {
        let mut v = vec![false; self.n + 1];
        for c in &self.cells {
            v[c.j] = true;
        }
        v
    }

    /// The placement without the given cells.
    pub fn without(&self, remove: &[Cell]) -> RookPlacement {
        RookPlacement {
            n: self.n,
            cells: self.cells.iter().copied().filter(|c| !remove.contains(c)).collect(),
        }
    }

    /// Every rook placement on the `n×n` grid, grouped by size and in
    /// lexicographic order of their sorted cell lists within a size.
    pub fn enumerate_all(n: usize) -> Vec<RookPlacement> {
        (0..=n).flat_map(|size| RookPlacement::enumerate_size(n, size)).collect()
    }

    /// Every placement with exactly `size` rooks, in the same order.
    pub fn enumerate_size(n: usize, size: usize) -> Vec<RookPlacement> {
        let mut out = Vec::new();
        if size <= n {
            let mut col_used = vec![false; n + 1];
            extend_placements(n, 1, size, &mut Vec::new(), &mut col_used, &mut out);
        }
        out
    }

    /// `binom(n, size)^2 · size!`, the number of placements of that size.
    pub fn count_of_size(n: usize, size: usize) -> u128 {
        if size > n {
            return 0;
        }
        let binom = (0..size as u128).fold(1u128, |acc, k| acc * (n as u128 - k) / (k + 1));
        let fact: u128 = (1..=size as u128).product();
        binom * binom * fact
    }
}

fn extend_placements(
    n: usize,
    next_row: usize,
    remaining: usize,
    current: &mut Vec<Cell>,
    col_used: &mut [bool],
    out: &mut Vec<RookPlacement>,
) {
    if remaining == 0 {
        out.push(RookPlacement {
            n,
            cells: current.clone(),
        });
        return;
    }
    if next_row + remaining > n + 1 {
        return;
    }
    for i in next_row..=n + 1 - remaining {
        for j in 1..=n {
            if col_used[j] {
                continue;
            }
            col_used[j] = true;
            current.push(Cell::new(i, j));
            extend_placements(n, i + 1, remaining - 1, current, col_used, out);
            current.pop();
            col_used[j] = false;
        }
    }
}

impl fmt::Display for RookPlacement {
    /// Text form `n; (i,j) (i,j) ...`; the empty placement prints as `n;`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.n)?;
        for c in &self.cells {
            write!(f, " {c}")?;
        }
        Ok(())
    }
}

impl FromStr for RookPlacement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let Some(semi) = s.find(';') else {
            return Err(Error::parse(0, "expected `n; (i,j) (i,j) ...`"));
        };
        let head = &s[..semi];
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::parse(0, format!("invalid grid size {:?}", head.trim())))?;
        let bytes = s.as_bytes();
        let mut pos = semi + 1;
        let mut cells = Vec::new();
        loop {
            while pos < bytes.len() && (bytes[pos] as char).is_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(Error::parse(pos, "expected `(`"));
            }
            let close = s[pos..]
                .find(')')
                .map(|k| k + pos)
                .ok_or_else(|| Error::parse(pos, "unclosed `(`"))?;
            let inner = &s[pos + 1..close];
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::parse(pos + 1, "expected `i,j`"))?;
            let i: usize = a
                .trim()
                .parse()
                .map_err(|_| Error::parse(pos + 1, format!("invalid coordinate {:?}", a.trim())))?;
            let j: usize = b.trim().parse().map_err(|_| {
                Error::parse(pos + 2 + a.len(), format!("invalid coordinate {:?}", b.trim()))
            })?;
            cells.push(Cell::new(i, j));
            pos = close + 1;
        }
        RookPlacement::new(n, cells)
    }
}
