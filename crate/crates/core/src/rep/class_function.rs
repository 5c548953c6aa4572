//! Rational class functions on `S_n`, Kronecker products and the characters
//! `α_{n,k}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rep::characters::CharacterTable;
use crate::rep::partition::Partition;

/// A class function, stored by cycle type in the order of the table's
/// partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub n: usize,
    pub values: Vec<BigRational>,
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl ClassFunction {
    pub fn zero(table: &CharacterTable) -> Self {
        ClassFunction {
            n: table.n,
            values: vec![BigRational::zero(); table.partitions.len()],
        }
    }

    /// `χ^λ`.
    pub fn irreducible(table: &CharacterTable, lambda: &Partition) -> Result<Self> {
        let row = table.index_of(lambda)?;
        Ok(ClassFunction {
            n: table.n,
            values: table.values[row].iter().map(|&v| int(v)).collect(),
        })
    }

    pub fn trivial(table: &CharacterTable) -> Self {
        ClassFunction {
            n: table.n,
            values: vec![int(1); table.partitions.len()],
        }
    }

    pub fn sign(table: &CharacterTable) -> Self {
        ClassFunction {
            n: table.n,
            values: table.partitions.iter().map(|mu| int(mu.sign())).collect(),
        }
    }

    /// Value at the identity (the last cycle type, `1^n`).
    pub fn at_identity(&self) -> &BigRational {
        self.values.last().expect("at least one class")
    }

    fn check(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n || self.values.len() != other.values.len() {
            return Err(Error::domain(format!(
                "class functions on S_{} and S_{} cannot be combined",
                self.n, other.n
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check(other)?;
        Ok(ClassFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check(other)?;
        Ok(ClassFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        ClassFunction {
            n: self.n,
            values: self.values.iter().map(|a| a * c).collect(),
        }
    }

    /// `(φ * ψ)(w) = φ(w)·ψ(w)`.
    pub fn kronecker(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.check(other)?;
        Ok(ClassFunction {
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        })
    }

    /// `⟨φ, ψ⟩ = (1/n!) Σ_μ |C_μ| φ(μ) ψ(μ)` (characters are real).
    pub fn inner_product(&self, other: &ClassFunction, table: &CharacterTable) -> Result<BigRational> {
        self.check(other)?;
        if table.n != self.n {
            return Err(Error::domain("character table of the wrong size"));
        }
        let mut acc = BigRational::zero();
        for ((a, b), &c) in self.values.iter().zip(&other.values).zip(&table.class_sizes) {
            acc += a * b * BigRational::from_integer(BigInt::from(c));
        }
        Ok(acc / BigRational::from_integer(BigInt::from(table.order())))
    }

    /// Multiplicity of each `χ^λ`, in table order.
    pub fn decompose(&self, table: &CharacterTable) -> Result<Vec<(Partition, BigRational)>> {
        table
            .partitions
            .iter()
            .map(|lambda| {
                let chi = ClassFunction::irreducible(table, lambda)?;
                Ok((lambda.clone(), self.inner_product(&chi, table)?))
            })
            .collect()
    }

    /// `Σ c_λ χ^λ`.
    pub fn from_multiplicities(table: &CharacterTable, mult: &[(Partition, BigRational)]) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(table);
        for (lambda, c) in mult {
            acc = acc.add(&ClassFunction::irreducible(table, lambda)?.scale(c))?;
        }
        Ok(acc)
    }
}

/// `α_{n,k} = Σ_{λ_1 = k} f^λ χ^λ`.
pub fn alpha(table: &CharacterTable, k: usize) -> Result<ClassFunction> {
    if k == 0 || k > table.n {
        return Err(Error::domain(format!("k = {k} must satisfy 1 <= k <= n = {}", table.n)));
    }
    let identity = table.partitions.len() - 1;
    let mut out = ClassFunction::zero(table);
    for (row, lambda) in table.partitions.iter().enumerate() {
        if lambda.first_part() == k {
            let f = table.values[row][identity];
            for (v, &x) in out.values.iter_mut().zip(&table.values[row]) {
                *v += int(f * x);
            }
        }
    }
    Ok(out)
}

/// `g(λ, μ, ν) = ⟨χ^λ * χ^μ, χ^ν⟩`, computed in exact integers.
pub fn kronecker_coefficient(table: &CharacterTable, lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let a = table.index_of(lambda)?;
    let b = table.index_of(mu)?;
    let c = table.index_of(nu)?;
    Ok(kronecker_by_index(table, a, b, c))
}

pub(crate) fn kronecker_by_index(table: &CharacterTable, a: usize, b: usize, c: usize) -> u64 {
    let sum: i128 = table
        .class_sizes
        .iter()
        .enumerate()
        .map(|(m, &size)| {
            size as i128 * table.values[a][m] as i128 * table.values[b][m] as i128 * table.values[c][m] as i128
        })
        .sum();
    let order = table.order() as i128;
    assert!(sum % order == 0 && sum >= 0, "Kronecker coefficient must be a nonnegative integer");
    (sum / order).to_u64().expect("fits")
}
