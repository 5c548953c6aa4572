//! Character-level checks of two log-concavity conjectures for the
//! characters `α_{n,k}` and the graded pieces of `F[x_{n×n}]/I_n`.
//!
//! A failed check is reported, never raised as an error.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rep::characters::CharacterTable;
use crate::rep::class_function::{alpha, kronecker_by_index};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
}

/// A witness where the source multiplicity exceeds the target multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolatingPair {
    pub nu: String,
    /// Second irreducible factor; absent for checks over `S_n` alone.
    pub rho: Option<String>,
    pub source: i64,
    pub target: i64,
}

/// Multiplicities of the irreducibles in the source and target, rows `ν`,
/// columns `ρ` (a single column for checks over `S_n` alone).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityTables {
    pub labels: Vec<String>,
    pub source: Vec<Vec<i64>>,
    pub target: Vec<Vec<i64>>,
}

/// One machine-readable verdict for a fixed `n` and `k` (or `d`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub n: usize,
    pub d_or_k: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub violating_pair: Option<ViolatingPair>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub multiplicity_tables: Option<MultiplicityTables>,
}

fn labels(table: &CharacterTable) -> Vec<String> {
    table.partitions.iter().map(ToString::to_string).collect()
}

/// For each `1 < k < n`, decomposes `α_{n,k}*α_{n,k}` (target) and
/// `α_{n,k-1}*α_{n,k+1}` (source); the difference is a genuine character iff
/// no source multiplicity exceeds the target one.
pub fn check_novak_rhoades(table: &CharacterTable, with_tables: bool) -> Result<Vec<ConjectureReport>> {
    let n = table.n;
    let mut reports = Vec::new();
    for k in 2..n {
        let ak = alpha(table, k)?;
        let target = ak.kronecker(&ak)?.decompose(table)?;
        let source = alpha(table, k - 1)?.kronecker(&alpha(table, k + 1)?)?.decompose(table)?;
        let to_int = |v: &num_rational::BigRational| {
            v.to_integer()
                .to_i64()
                .filter(|_| v.is_integer())
                .ok_or_else(|| Error::domain("multiplicity is not a machine integer"))
        };
        let mut src = Vec::new();
        let mut tgt = Vec::new();
        let mut violation = None;
        for ((lambda, s), (_, t)) in source.iter().zip(&target) {
            let (s, t) = (to_int(s)?, to_int(t)?);
            if s > t && violation.is_none() {
                violation = Some(ViolatingPair {
                    nu: lambda.to_string(),
                    rho: None,
                    source: s,
                    target: t,
                });
            }
            src.push(vec![s]);
            tgt.push(vec![t]);
        }
        reports.push(ConjectureReport {
            n,
            d_or_k: k,
            verdict: if violation.is_some() { Verdict::Violated } else { Verdict::Holds },
            violating_pair: violation,
            multiplicity_tables: with_tables.then(|| MultiplicityTables {
                labels: labels(table),
                source: src,
                target: tgt,
            }),
        });
    }
    Ok(reports)
}

/// Multiplicity table of `V^ν ⊠ V^ρ` in `(⊕_{λ_1=a} V^λ⊗V^λ) ⊗ (⊕_{μ_1=b} V^μ⊗V^μ)`
/// under the diagonal action: `Σ g(λ,μ,ν)·g(λ,μ,ρ)`.
fn tensor_multiplicities(table: &CharacterTable, kron: &[Vec<Vec<u64>>], a: usize, b: usize) -> Vec<Vec<i64>> {
    let size = table.partitions.len();
    let mut out = vec![vec![0i64; size]; size];
    let rows_a: Vec<usize> = (0..size).filter(|&i| table.partitions[i].first_part() == a).collect();
    let rows_b: Vec<usize> = (0..size).filter(|&i| table.partitions[i].first_part() == b).collect();
    for &l in &rows_a {
        for &m in &rows_b {
            let g = &kron[l][m];
            for nu in 0..size {
                if g[nu] == 0 {
                    continue;
                }
                for rho in 0..size {
                    out[nu][rho] += (g[nu] * g[rho]) as i64;
                }
            }
        }
    }
    out
}

/// For each `0 < d < n-1`, compares the `S_n × S_n` multiplicities of
/// `(deg d-1) ⊗ (deg d+1)` (source) and `(deg d) ⊗ (deg d)` (target). An
/// equivariant injection exists iff no source multiplicity exceeds its target.
pub fn check_equivariant_conjecture(table: &CharacterTable, with_tables: bool) -> Result<Vec<ConjectureReport>> {
    let n = table.n;
    let size = table.partitions.len();
    let kron: Vec<Vec<Vec<u64>>> = (0..size)
        .map(|a| {
            (0..size)
                .map(|b| (0..size).map(|c| kronecker_by_index(table, a, b, c)).collect())
                .collect()
        })
        .collect();
    let mut reports = Vec::new();
    for d in 1..n.saturating_sub(1) {
        // degree d carries the shapes with first row n - d
        let source = tensor_multiplicities(table, &kron, n - d + 1, n - d - 1);
        let target = tensor_multiplicities(table, &kron, n - d, n - d);
        let mut violation = None;
        'scan: for nu in 0..size {
            for rho in 0..size {
                if source[nu][rho] > target[nu][rho] {
                    violation = Some(ViolatingPair {
                        nu: table.partitions[nu].to_string(),
                        rho: Some(table.partitions[rho].to_string()),
                        source: source[nu][rho],
                        target: target[nu][rho],
                    });
                    break 'scan;
                }
            }
        }
        reports.push(ConjectureReport {
            n,
            d_or_k: d,
            verdict: if violation.is_some() { Verdict::Violated } else { Verdict::Holds },
            violating_pair: violation,
            multiplicity_tables: with_tables.then(|| MultiplicityTables {
                labels: labels(table),
                source,
                target,
            }),
        });
    }
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::guard::Limits;

    #[test]
    fn small_cases_hold() {
        for n in 1..=6 {
            let t = CharacterTable::new(n, &Limits::default()).unwrap();
            let nr = check_novak_rhoades(&t, true).unwrap();
            assert_eq!(nr.len(), n.saturating_sub(2));
            assert!(nr.iter().all(|r| r.verdict == Verdict::Holds));
            let eq = check_equivariant_conjecture(&t, false).unwrap();
            assert_eq!(eq.len(), n.saturating_sub(2));
            assert!(eq.iter().all(|r| r.verdict == Verdict::Holds));
        }
    }

    #[test]
    fn n4_dimension_identities() {
        let t = CharacterTable::new(4, &Limits::default()).unwrap();
        let nr = check_novak_rhoades(&t, true).unwrap();
        let k2 = &nr[0];
        assert_eq!(k2.d_or_k, 2);
        let tables = k2.multiplicity_tables.as_ref().unwrap();
        let dims: Vec<i64> = t.partitions.iter().map(|p| p.hook_dimension() as i64).collect();
        let dim = |col: &Vec<Vec<i64>>| col.iter().zip(&dims).map(|(m, f)| m[0] * f).sum::<i64>();
        assert_eq!(dim(&tables.target) - dim(&tables.source), 169 - 9);
        let eq = check_equivariant_conjecture(&t, true).unwrap();
        let d1 = eq[0].multiplicity_tables.as_ref().unwrap();
        let dim2 = |m: &Vec<Vec<i64>>| {
            let mut s = 0;
            for (a, fa) in dims.iter().enumerate() {
                for (b, fb) in dims.iter().enumerate() {
                    s += m[a][b] * fa * fb;
                }
            }
            s
        };
        assert_eq!(dim2(&d1.source), 13);
        assert_eq!(dim2(&d1.target), 81);
    }

    #[test]
    fn report_json_shape() {
        let t = CharacterTable::new(4, &Limits::default()).unwrap();
        let r = &check_equivariant_conjecture(&t, false).unwrap()[0];
        let json = serde_json::to_value(r).unwrap();
        assert_eq!(json["verdict"], "holds");
        assert_eq!(json["n"], 4);
        assert!(json.get("violating_pair").is_none());
        let back: ConjectureReport = serde_json::from_value(json).unwrap();
        assert_eq!(&back, r);
    }
}
