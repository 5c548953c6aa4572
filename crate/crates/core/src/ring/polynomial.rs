//! Sparse polynomials in `F[x_{n×n}]` with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::monomial::GridMonomial;
use crate::scalar::{Field, Scalar};
use crate::schensted::{Cell, Permutation};

/// A polynomial on the `n×n` grid. Terms are kept in a map keyed by the
/// Toeplitz order, so iteration runs from the smallest monomial up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    field: Field,
    terms: BTreeMap<GridMonomial, Scalar>,
}

impl Polynomial {
    pub fn zero(n: usize, field: Field) -> Self {
        Polynomial {
            n,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, field: Field, c: Scalar) -> Self {
        Polynomial::monomial(n, field, GridMonomial::one(n), c)
    }

    pub fn one(n: usize, field: Field) -> Self {
        Polynomial::constant(n, field, field.one())
    }

    pub fn variable(n: usize, field: Field, c: Cell) -> Self {
        Polynomial::monomial(n, field, GridMonomial::variable(n, c), field.one())
    }

    pub fn monomial(n: usize, field: Field, m: GridMonomial, c: Scalar) -> Self {
        assert_eq!(m.n(), n, "grid size mismatch");
        let mut p = Polynomial::zero(n, field);
        p.add_term(m, c);
        p
    }

    /// Collects `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms(n: usize, field: Field, terms: impl IntoIterator<Item = (GridMonomial, Scalar)>) -> Result<Self> {
        let mut p = Polynomial::zero(n, field);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::domain(format!("monomial on a {0}x{0} grid in a polynomial on a {n}x{n} grid", m.n())));
            }
            if c.field() != field {
                return Err(Error::domain(format!("coefficient over {} in a polynomial over {field}", c.field())));
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms from the Toeplitz-largest monomial down.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&GridMonomial, &Scalar)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &GridMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Adds `c·m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: GridMonomial, c: Scalar) {
        assert_eq!(c.field(), self.field, "coefficient field mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// The Toeplitz-largest term.
    pub fn leading_term(&self) -> Result<(&GridMonomial, &Scalar)> {
        self.terms
            .iter()
            .next_back()
            .ok_or_else(|| Error::domain("the zero polynomial has no leading term"))
    }

    pub fn leading_monomial(&self) -> Result<GridMonomial> {
        self.leading_term().map(|(m, _)| m.clone())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(GridMonomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(GridMonomial::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    /// The component of degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        self.filter(|m| m.degree() == d)
    }

    /// The highest degree homogeneous component `τ(f)`.
    pub fn top_component(&self) -> Result<Polynomial> {
        let d = self
            .degree()
            .ok_or_else(|| Error::domain("the zero polynomial has no top component"))?;
        Ok(self.homogeneous_part(d))
    }

    /// Keeps the terms whose monomial satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&GridMonomial) -> bool) -> Polynomial {
        Polynomial {
            n: self.n,
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n, self.field);
        }
        Polynomial {
            n: self.n,
            field: self.field,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    /// `self + c·m·other`, the basic reduction step.
    pub fn add_scaled_shifted(&mut self, c: &Scalar, m: &GridMonomial, other: &Polynomial) {
        self.check_compatible(other);
        for (t, a) in &other.terms {
            self.add_term(t.mul(m), a * c);
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_compatible(other);
        let mut out = Polynomial::zero(self.n, self.field);
        for (m, c) in &self.terms {
            out.add_scaled_shifted(c, m, other);
        }
        out
    }

    pub fn mul_monomial(&self, m: &GridMonomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n, self.field);
        out.add_scaled_shifted(&self.field.one(), m, self);
        out
    }

    /// Image under the variable substitution `x_{i,j} ↦ x_{f(i,j)}`.
    pub fn map_cells(&self, f: impl Fn(Cell) -> Cell) -> Polynomial {
        let mut out = Polynomial::zero(self.n, self.field);
        for (m, c) in &self.terms {
            out.add_term(m.map_cells(&f), c.clone());
        }
        out
    }

    pub fn transpose(&self) -> Polynomial {
        self.map_cells(Cell::transpose)
    }

    /// The action `(u, v)·x_{i,j} = x_{u(i), v(j)}` of `S_n × S_n`.
    pub fn permute(&self, u: &Permutation, v: &Permutation) -> Result<Polynomial> {
        if u.n() != self.n || v.n() != self.n {
            return Err(Error::domain("permutation size does not match the grid"));
        }
        Ok(self.map_cells(|c| Cell::new(u.apply(c.i), v.apply(c.j))))
    }

    /// Evaluates at the permutation matrix of `w`: `x_{i,j} ↦ 1` iff `w(i) = j`.
    pub fn evaluate(&self, w: &Permutation) -> Result<Scalar> {
        if w.n() != self.n {
            return Err(Error::domain(format!(
                "cannot evaluate a polynomial on a {0}x{0} grid at a permutation of size {1}",
                self.n,
                w.n()
            )));
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            if m.factors().iter().all(|&(cell, _)| w.apply(cell.i) == cell.j) {
                acc += c;
            }
        }
        Ok(acc)
    }

    /// Re-expresses the coefficients in another field.
    pub fn to_field(&self, field: Field) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.n, field);
        for (m, c) in &self.terms {
            let c = match c {
                Scalar::Rational(q) => field.from_rational(q)?,
                Scalar::Modular { value, .. } if field == self.field => field.from_i64(*value as i64),
                Scalar::Modular { .. } => {
                    return Err(Error::domain("cannot lift prime field coefficients to another field"))
                }
            };
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.n, other.n, "grid size mismatch");
        assert_eq!(self.field, other.field, "coefficient field mismatch");
    }
}

impl fmt::Display for Polynomial {
    /// Text form such as `3*x[2,4]*x[5,5] - x[1,1]^2`, largest term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let (negative, abs) = if c.is_negative() { (true, -c) } else { (false, c.clone()) };
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize, j: usize) -> Polynomial {
        Polynomial::variable(n, Field::Rationals, Cell::new(i, j))
    }

    #[test]
    fn arithmetic_and_display() {
        let q = Field::Rationals;
        let f = x(5, 2, 4).mul(&x(5, 5, 5)).scale(&q.from_i64(3)).sub(&x(5, 1, 1).mul(&x(5, 1, 1)));
        assert_eq!(f.to_string(), "-x[1,1]^2 + 3*x[2,4]*x[5,5]");
        assert_eq!(f.degree(), Some(2));
        assert!(f.sub(&f).is_zero());
        assert_eq!(Polynomial::zero(3, q).to_string(), "0");
    }

    #[test]
    fn leading_and_top() {
        let q = Field::Rationals;
        let five = Polynomial::constant(3, q, q.from_i64(5));
        let (m, c) = five.leading_term().unwrap();
        assert!(m.is_one());
        assert_eq!(c, &q.from_i64(5));
        assert!(Polynomial::zero(3, q).leading_term().is_err());
        let g = x(3, 1, 1).mul(&x(3, 1, 1)).sub(&x(3, 1, 1));
        assert_eq!(g.top_component().unwrap(), x(3, 1, 1).mul(&x(3, 1, 1)));
        assert!(Polynomial::zero(3, q).top_component().is_err());
    }

    #[test]
    fn evaluation_at_permutation_matrices() {
        let w: Permutation = "2,3,1".parse().unwrap();
        let f = x(3, 1, 2).mul(&x(3, 3, 1)).add(&x(3, 1, 1));
        assert_eq!(f.evaluate(&w).unwrap(), Field::Rationals.one());
        assert!(f.evaluate(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn permutation_action() {
        let u: Permutation = "2,1,3".parse().unwrap();
        let v: Permutation = "1,3,2".parse().unwrap();
        assert_eq!(x(3, 1, 2).permute(&u, &v).unwrap(), x(3, 2, 3));
    }
}
