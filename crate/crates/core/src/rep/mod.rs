//! Representation theory of `S_n` and of `S_n × S_n` acting on the quotient.

mod characters;
mod class_function;
mod conjectures;
mod graded;
mod partition;

pub use characters::{character_value, CharacterTable};
pub use class_function::{alpha, kronecker_coefficient, ClassFunction};
pub use conjectures::{
    check_equivariant_conjecture, check_novak_rhoades, ConjectureReport, MultiplicityTables, Verdict,
    ViolatingPair,
};
pub use graded::{
    basis_slice, expected_graded_character, graded_character, graded_character_on, graded_trace, GradedCharacter,
};
pub use partition::{partitions, Partition};
