//! Integer partitions, hook lengths and conjugacy class sizes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::schensted::{factorial, Permutation};

/// A partition `λ = (λ_1 ≥ λ_2 ≥ ... > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_1`, or 0 for the empty partition.
    pub fn first_part(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_part();
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
                .collect(),
        }
    }

    /// `f^λ = n! / ∏ hooks`.
    pub fn hook_dimension(&self) -> u128 {
        let conj = self.conjugate();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut hooks: Vec<u128> = Vec::new();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                hooks.push((len - c - 1 + conj.parts[c] - r - 1 + 1) as u128);
            }
        }
        for h in hooks {
            num /= h;
        }
        num
    }

    /// `z_μ = ∏_i i^{m_i} m_i!` for the cycle type `μ`.
    pub fn centralizer_size(&self) -> u128 {
        let mut z: u128 = 1;
        let mut k = 0;
        while k < self.parts.len() {
            let p = self.parts[k];
            let m = self.parts[k..].iter().take_while(|&&q| q == p).count();
            z *= (p as u128).pow(m as u32) * (1..=m as u128).product::<u128>();
            k += m;
        }
        z
    }

    /// Number of permutations of cycle type `μ`, `n! / z_μ`.
    pub fn class_size(&self) -> u128 {
        factorial_u128(self.size()) / self.centralizer_size()
    }

    /// `(-1)^{n - ℓ(μ)}`, the sign of any permutation of cycle type `μ`.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// The permutation whose cycles, longest first, are filled with
    /// consecutive integers: `(3,2) → (1 2 3)(4 5)`.
    pub fn representative(&self) -> Permutation {
        let n = self.size();
        let mut word = vec![0; n];
        let mut start = 1;
        for &len in &self.parts {
            for t in 0..len {
                word[start + t - 1] = start + (t + 1) % len;
            }
            start += len;
        }
        Permutation::new(word).expect("cycles fill [n]")
    }
}

fn factorial_u128(n: usize) -> u128 {
    if n <= 20 {
        factorial(n) as u128
    } else {
        (1..=n as u128).product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        let mut offset = 0;
        for item in s.split(',') {
            let t = item.trim();
            let v: usize = t
                .parse()
                .map_err(|_| Error::parse(offset, format!("invalid part {t:?}")))?;
            parts.push(v);
            offset += item.len() + 1;
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of `n` in reverse lexicographic order, `(n)` first and
/// `(1^n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            cur.push(p);
            go(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
