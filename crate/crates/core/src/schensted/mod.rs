//! Permutations, rook placements, shadow lines and the Schensted
//! correspondence.

mod ballot;
mod lis;
mod permutation;
mod rook;
mod shadow;
mod tableau;

pub use ballot::{ballot_check, shadow_set_to_permutation, BallotCheck};
pub use lis::{lis, lis_dp, lis_histogram};
pub use permutation::{all_permutations, factorial, Permutation};
pub use rook::{Cell, RookPlacement};
pub use shadow::{iterated_shadow_sets, shadow_lines, shadow_set, ShadowDiagram, ShadowLine};
pub use tableau::{
    insertion_schensted, inverse_schensted, standard_tableaux, viennot_partial, viennot_schensted,
    Tableau, TableauPair,
};
