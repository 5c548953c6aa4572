use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schensted::rook::{Cell, RookPlacement};

/// A permutation of `[n]` in one-line notation, `word[i-1] = w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(Error::domain("a permutation needs n >= 1"));
        }
        let mut seen = vec![false; n + 1];
        for (pos, &v) in word.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::domain(format!(
                    "value {v} at position {} is outside [1, {n}]",
                    pos + 1
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::domain(format!("value {v} repeats at position {}", pos + 1)));
            }
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The reversal `[n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `w(i)` for `1 <= i <= n`.
    pub fn apply(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            word: other.word.iter().map(|&v| self.word[v - 1]).collect(),
        }
    }

    /// The graph `{(i, w(i))}` as a full rook placement.
    pub fn graph(&self) -> RookPlacement {
        RookPlacement::from_cells_unchecked(
            self.n(),
            self.word
                .iter()
                .enumerate()
                .map(|(i, &v)| Cell::new(i + 1, v))
                .collect(),
        )
    }

    /// Whether `R ⊆ graph(w)`.
    pub fn extends(&self, placement: &RookPlacement) -> bool {
        placement.n() == self.n() && placement.cells().iter().all(|c| self.word[c.i - 1] == c.j)
    }

    /// Lexicographic rank among all permutations of `[n]`, starting at 0.
    pub fn rank(&self) -> usize {
        let n = self.n();
        let mut used = vec![false; n + 1];
        let mut rank = 0;
        for (pos, &v) in self.word.iter().enumerate() {
            let smaller_unused = (1..v).filter(|&u| !used[u]).count();
            rank += smaller_unused * factorial(n - 1 - pos);
            used[v] = true;
        }
        rank
    }

    pub fn from_rank(n: usize, mut rank: usize) -> Result<Self> {
        if rank >= factorial(n) {
            return Err(Error::domain(format!("rank {rank} out of range for S_{n}")));
        }
        let mut pool: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for pos in 0..n {
            let f = factorial(n - 1 - pos);
            word.push(pool.remove(rank / f));
            rank %= f;
        }
        Ok(Permutation { word })
    }

    /// Advances to the lexicographic successor; returns false at the last
    /// permutation.
    pub fn next_lex(&mut self) -> bool {
        let w = &mut self.word;
        let Some(i) = (0..w.len().saturating_sub(1)).rev().find(|&i| w[i] < w[i + 1]) else {
            return false;
        };
        let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).unwrap();
        w.swap(i, j);
        w[i + 1..].reverse();
        true
    }

    /// Cycle type as a weakly decreasing list of cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.word[x - 1];
                len += 1;
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses comma-separated one-line notation such as `4,1,8,5,3,6,2,7`.
    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::new();
        let mut offset = 0;
        for piece in s.split(',') {
            let trimmed = piece.trim();
            let lead = piece.len() - piece.trim_start().len();
            let v: usize = trimmed.parse().map_err(|_| {
                Error::parse(offset + lead, format!("expected a positive integer, found {trimmed:?}"))
            })?;
            word.push(v);
            offset += piece.len() + 1;
        }
        Permutation::new(word)
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.word
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All permutations of `[n]` in lexicographic order of their one-line words.
/// The position of a permutation in this list is its [`Permutation::rank`].
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::with_capacity(factorial(n));
    let mut w = Permutation::identity(n);
    loop {
        out.push(w.clone());
        if !w.next_lex() {
            break;
        }
    }
    out
}
