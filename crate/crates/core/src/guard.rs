//! Hard caps on the size of exhaustive computations.

use crate::error::{Error, Result};

/// Resource limits consulted before any enumeration over `S_n` or any
/// degree-slice linear algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for which all of `S_n` may be enumerated.
    pub max_enumeration_n: usize,
    /// Largest number of monomials allowed in one degree slice.
    pub max_slice_monomials: usize,
    /// Largest `n` for which a character table is built.
    pub max_character_n: usize,
    /// Largest `n` for which graded traces are computed by normal forms.
    pub max_trace_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_enumeration_n: 9,
            max_slice_monomials: 2_000_000,
            max_character_n: 12,
            max_trace_n: 6,
        }
    }
}

impl Limits {
    pub fn check_enumeration(&self, n: usize) -> Result<()> {
        if n > self.max_enumeration_n {
            return Err(Error::resource(format!(
                "enumerating S_{n} exceeds the limit n <= {}",
                self.max_enumeration_n
            )));
        }
        Ok(())
    }

    pub fn check_slice(&self, monomials: usize) -> Result<()> {
        if monomials > self.max_slice_monomials {
            return Err(Error::resource(format!(
                "degree slice with {monomials} monomials exceeds the limit {}",
                self.max_slice_monomials
            )));
        }
        Ok(())
    }

    pub fn check_characters(&self, n: usize) -> Result<()> {
        if n > self.max_character_n {
            return Err(Error::resource(format!(
                "character table of S_{n} exceeds the limit n <= {}",
                self.max_character_n
            )));
        }
        Ok(())
    }

    pub fn check_trace(&self, n: usize) -> Result<()> {
        if n > self.max_trace_n {
            return Err(Error::resource(format!(
                "graded traces for n = {n} exceed the limit n <= {}",
                self.max_trace_n
            )));
        }
        Ok(())
    }
}
