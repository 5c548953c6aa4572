//! Local permutation statistics and the shadow-junta basis of `Loc_k(S_n)`.

use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::guard::Limits;
use crate::linalg::{SparseEchelon, SparseRow};
use crate::ring::GridMonomial;
use crate::scalar::{Field, Scalar};
use crate::schensted::{all_permutations, factorial, lis, shadow_set, Permutation, RookPlacement};

/// A function `S_n → F`, stored by lexicographic rank of the permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationStatistic {
    n: usize,
    field: Field,
    values: Vec<Scalar>,
}

impl PermutationStatistic {
    pub fn new(n: usize, field: Field, values: Vec<Scalar>) -> Result<Self> {
        if n == 0 {
            return Err(Error::domain("n must be at least 1"));
        }
        if values.len() != factorial(n) {
            return Err(Error::domain(format!(
                "a statistic on S_{n} needs {} values, got {}",
                factorial(n),
                values.len()
            )));
        }
        if let Some(v) = values.iter().find(|v| v.field() != field) {
            return Err(Error::domain(format!("value {v} is not in {field}")));
        }
        Ok(PermutationStatistic { n, field, values })
    }

    /// Tabulates `f` over `S_n`.
    pub fn from_fn(n: usize, field: Field, limits: &Limits, f: impl Fn(&Permutation) -> Scalar) -> Result<Self> {
        check_n(n, limits)?;
        let values = all_permutations(n).iter().map(f).collect();
        PermutationStatistic::new(n, field, values)
    }

    /// Builds a statistic from `(w, f(w))` pairs covering every permutation
    /// exactly once, in any order.
    pub fn from_pairs(n: usize, field: Field, pairs: Vec<(Permutation, Scalar)>, limits: &Limits) -> Result<Self> {
        check_n(n, limits)?;
        let mut slots: Vec<Option<Scalar>> = vec![None; factorial(n)];
        for (w, v) in pairs {
            if w.n() != n {
                return Err(Error::domain(format!("permutation {w} is not in S_{n}")));
            }
            let slot = &mut slots[w.rank()];
            if slot.is_some() {
                return Err(Error::domain(format!("permutation {w} is listed twice")));
            }
            *slot = Some(v);
        }
        let mut values = Vec::with_capacity(slots.len());
        for (rank, v) in slots.into_iter().enumerate() {
            match v {
                Some(v) => values.push(v),
                None => {
                    let w = Permutation::from_rank(n, rank)?;
                    return Err(Error::domain(format!("no value given for permutation {w}")));
                }
            }
        }
        PermutationStatistic::new(n, field, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    pub fn value(&self, w: &Permutation) -> &Scalar {
        &self.values[w.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    /// `(w, f(w))` in lexicographic order of `w`.
    pub fn pairs(&self) -> impl Iterator<Item = (Permutation, &Scalar)> + '_ {
        all_permutations(self.n).into_iter().zip(self.values.iter())
    }

    pub fn sub(&self, other: &PermutationStatistic) -> PermutationStatistic {
        assert_eq!((self.n, self.field), (other.n, other.field), "incompatible statistics");
        PermutationStatistic {
            n: self.n,
            field: self.field,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn to_field(&self, field: Field) -> Result<PermutationStatistic> {
        let values = self
            .values
            .iter()
            .map(|v| match v {
                Scalar::Rational(q) => field.from_rational(q),
                Scalar::Modular { value, .. } if field == self.field => Ok(field.from_i64(*value as i64)),
                Scalar::Modular { .. } => Err(Error::domain("cannot move prime field values to another field")),
            })
            .collect::<Result<Vec<_>>>()?;
        PermutationStatistic::new(self.n, field, values)
    }
}

fn check_n(n: usize, limits: &Limits) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("n must be at least 1"));
    }
    limits.check_enumeration(n)
}

/// `1_R(w) = 1` iff `w` extends `R`.
pub fn indicator(placement: &RookPlacement, field: Field, limits: &Limits) -> Result<PermutationStatistic> {
    PermutationStatistic::from_fn(placement.n(), field, limits, |w| {
        if w.extends(placement) {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// The statistics available by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BuiltinStatistic {
    /// `#{i : w(i) > i}`.
    Exc,
    /// `#{i < j : w(i) > w(j)}`.
    Inv,
    /// `#{1 < i < n : w(i-1) < w(i) > w(i+1)}`.
    Peak,
    /// Longest increasing subsequence.
    Lis,
    /// The constant `1`.
    Constant,
}

impl BuiltinStatistic {
    pub const ALL: [BuiltinStatistic; 5] = [
        BuiltinStatistic::Exc,
        BuiltinStatistic::Inv,
        BuiltinStatistic::Peak,
        BuiltinStatistic::Lis,
        BuiltinStatistic::Constant,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinStatistic::Exc => "exc",
            BuiltinStatistic::Inv => "inv",
            BuiltinStatistic::Peak => "peak",
            BuiltinStatistic::Lis => "lis",
            BuiltinStatistic::Constant => "constant",
        }
    }

    pub fn evaluate(self, w: &Permutation) -> usize {
        let word = w.word();
        let n = word.len();
        match self {
            BuiltinStatistic::Exc => (1..=n).filter(|&i| w.apply(i) > i).count(),
            BuiltinStatistic::Inv => (0..n)
                .map(|i| (i + 1..n).filter(|&j| word[i] > word[j]).count())
                .sum(),
            BuiltinStatistic::Peak => (1..n.saturating_sub(1))
                .filter(|&i| word[i - 1] < word[i] && word[i] > word[i + 1])
                .count(),
            BuiltinStatistic::Lis => lis(w),
            BuiltinStatistic::Constant => 1,
        }
    }
}

impl fmt::Display for BuiltinStatistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinStatistic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BuiltinStatistic::ALL
            .into_iter()
            .find(|b| b.name() == s.trim())
            .ok_or_else(|| Error::domain(format!("unknown statistic {s:?}; expected one of exc, inv, peak, lis, constant")))
    }
}

pub fn builtin_statistic(name: BuiltinStatistic, n: usize, field: Field, limits: &Limits) -> Result<PermutationStatistic> {
    PermutationStatistic::from_fn(n, field, limits, |w| field.from_i64(name.evaluate(w) as i64))
}

/// The shadow sets `S(w)` with `lis(w) ≥ n - k`, whose indicators form a
/// basis of `Loc_k(S_n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JuntaBasis {
    pub n: usize,
    pub k: usize,
    /// Ordered by size, then from the Toeplitz-largest monomial down. The
    /// basis for `k` is a prefix of the basis for `k + 1`.
    pub elements: Vec<RookPlacement>,
}

pub fn junta_basis(n: usize, k: usize, limits: &Limits) -> Result<JuntaBasis> {
    check_n(n, limits)?;
    if k >= n {
        return Err(Error::domain(format!("locality k = {k} must satisfy 0 <= k <= n - 1 = {}", n - 1)));
    }
    let mut elements: Vec<RookPlacement> = all_permutations(n)
        .iter()
        .map(|w| shadow_set(&w.graph()))
        .filter(|s| s.len() <= k)
        .collect();
    elements.sort_by_cached_key(|s| (s.len(), Reverse(GridMonomial::of_placement(s))));
    Ok(JuntaBasis { n, k, elements })
}

/// Rank of the indicator vectors of the basis elements over `field`,
/// computed as the rank of the evaluation matrix with one row per
/// permutation.
pub fn junta_rank(basis: &JuntaBasis, field: Field) -> usize {
    let columns = basis.elements.len();
    let mut echelon = SparseEchelon::new();
    for w in all_permutations(basis.n) {
        let mut row: SparseRow = basis
            .elements
            .iter()
            .enumerate()
            .filter(|(_, r)| w.extends(r))
            .map(|(idx, _)| (columns - 1 - idx, field.one()))
            .collect();
        row.sort_by_key(|&(c, _)| c);
        echelon.insert(row);
    }
    echelon.rank()
}

/// Coefficients `c_R` with `f = Σ c_R · 1_R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub n: usize,
    pub k: usize,
    /// One entry per basis element, in basis order (zeros included).
    pub coefficients: Vec<(RookPlacement, Scalar)>,
}

impl Decomposition {
    /// The terms with nonzero coefficient.
    pub fn nonzero(&self) -> impl Iterator<Item = &(RookPlacement, Scalar)> + '_ {
        self.coefficients.iter().filter(|(_, c)| !c.is_zero())
    }

    /// `Σ c_R · 1_R` as a statistic.
    pub fn reconstruct(&self, field: Field, limits: &Limits) -> Result<PermutationStatistic> {
        PermutationStatistic::from_fn(self.n, field, limits, |w| {
            let mut acc = field.zero();
            for (r, c) in self.nonzero() {
                if w.extends(r) {
                    acc += c;
                }
            }
            acc
        })
    }
}

/// Outcome of [`decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decomposed {
    Local(Decomposition),
    /// `f` is not `k`-local. The residual is `f` minus the combination that
    /// matches `f` on a maximal independent set of equations; it is nonzero.
    NotKLocal { residual: PermutationStatistic },
}

impl Decomposed {
    pub fn is_local(&self) -> bool {
        matches!(self, Decomposed::Local(_))
    }
}

/// Solves `f = Σ c_R 1_R` exactly over the junta basis for `k`.
pub fn decompose(f: &PermutationStatistic, k: usize, limits: &Limits) -> Result<Decomposed> {
    let basis = junta_basis(f.n, k, limits)?;
    let field = f.field;
    let columns = basis.elements.len();
    let perms = all_permutations(f.n);
    // columns 0..columns are the unknowns (last basis element first, so that
    // small placements are eliminated last); column `columns` is the value
    let mut echelon = SparseEchelon::new();
    let mut inconsistent = false;
    for (w, value) in perms.iter().zip(&f.values) {
        let mut row: SparseRow = basis
            .elements
            .iter()
            .enumerate()
            .filter(|(_, r)| w.extends(r))
            .map(|(idx, _)| (columns - 1 - idx, field.one()))
            .collect();
        row.sort_by_key(|&(c, _)| c);
        if !value.is_zero() {
            row.push((columns, value.clone()));
        }
        let rem = echelon.reduce(row);
        match rem.first() {
            None => {}
            Some(&(c, _)) if c == columns => inconsistent = true,
            Some(_) => {
                echelon.insert(rem);
            }
        }
    }
    let solution = back_substitute(&echelon, columns, field);
    let decomposition = Decomposition {
        n: f.n,
        k,
        coefficients: basis
            .elements
            .into_iter()
            .enumerate()
            .map(|(idx, r)| (r, solution[columns - 1 - idx].clone()))
            .collect(),
    };
    if !inconsistent {
        return Ok(Decomposed::Local(decomposition));
    }
    let residual = f.sub(&decomposition.reconstruct(field, limits)?);
    debug_assert!(!residual.is_zero());
    Ok(Decomposed::NotKLocal { residual })
}

/// Solves the stored echelon system whose last column `columns` holds the
/// right-hand side. Unknowns without a pivot are set to zero.
fn back_substitute(echelon: &SparseEchelon, columns: usize, field: Field) -> Vec<Scalar> {
    let mut x = vec![field.zero(); columns];
    for (&lead, row) in echelon.rows().rev() {
        if lead >= columns {
            continue;
        }
        let mut v = field.zero();
        for (c, a) in row.iter().skip(1) {
            if *c == columns {
                v += a;
            } else {
                v -= &(a * &x[*c]);
            }
        }
        x[lead] = v;
    }
    x
}

/// The least `k` for which `f` is `k`-local.
pub fn minimal_locality(f: &PermutationStatistic, limits: &Limits) -> Result<usize> {
    let (mut lo, mut hi) = (0usize, f.n - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if decompose(f, mid, limits)?.is_local() {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}
