//! Exact computations around the quotient ring `F[x_{n×n}]/I_n`, where `I_n` is
//! generated by same-row and same-column products of variables together with
//! all row sums and column sums of the variable matrix.
//!
//! The crate is organised in four layers:
//!
//! * [`schensted`]: permutations, rook placements, Viennot shadow lines and the
//!   Schensted correspondence (both the geometric and the insertion version),
//!   plus the ballot criterion that recognises shadow sets.
//! * [`ring`]: sparse polynomials on the `n×n` variable grid under the Toeplitz
//!   term order, the generators of `I_n`, the marching rewrite and normal forms
//!   onto the shadow-monomial basis, Hilbert series and evaluation oracles.
//! * [`local`]: permutation statistics, indicator juntas and the shadow-junta
//!   basis of `k`-local statistics.
//! * [`rep`]: characters of `S_n`, Kronecker products and the graded
//!   `S_n × S_n` structure of the quotient.
//!
//! All arithmetic is exact. Coefficients live in [`Scalar`], either arbitrary
//! precision rationals or a prime field.

pub mod error;
pub mod guard;
pub mod linalg;
pub mod local;
pub mod rep;
pub mod ring;
pub mod scalar;
pub mod schensted;

pub use error::{Error, Result};
pub use guard::Limits;
pub use scalar::{Field, Scalar};
