//! Exact combinatorics of type A Demazure characters.
//!
//! The crate computes Demazure atoms and key polynomials three independent
//! ways (isobaric divided differences, semi-skyline augmented fillings and
//! permuted-basement fillings), and right keys of semi-standard Young
//! tableaux either through Knuth classes or through the skyline insertion
//! `psi`. The [`verify`] module cross-checks all routes against each other.
//!
//! Conventions used throughout:
//!
//! * every object carries its variable count `n`; partitions and
//!   compositions are zero padded to length `n`;
//! * permutations are written in one-line notation with values `1..=n`;
//! * tableaux use French notation, rows are stored bottom row first;
//! * a word `(i1, ..., ik)` of operators acts as `op_{i1} ∘ ... ∘ op_{ik}`,
//!   so the rightmost letter is applied first.

pub mod combinat;
pub mod demazure;
pub mod polynomial;
pub mod ssaf;
pub mod tableaux;
pub mod verify;

mod error;

pub use combinat::{Partition, Permutation, WeakComposition, Word};
pub use demazure::PermutedSsaf;
pub use error::Error;
pub use polynomial::{Operator, Polynomial};
pub use ssaf::{Cell, Ssaf};
pub use tableaux::{Key, Ssyt};

pub type Result<T, E = Error> = std::result::Result<T, E>;
