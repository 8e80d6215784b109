//! Crystal operators on reverse plane partitions of skew shapes, and the
//! Schur expansion of dual stable Grothendieck polynomials they yield.
//!
//! The building blocks, bottom up:
//!
//! - [`shapes`]: partitions and skew shapes in matrix coordinates.
//! - [`tableaux`]: fillings, enumerators, column weights and `ceq`.
//! - [`reading`]: reading words, height vectors and reconstruction.
//! - [`word_crystal`]: `E_i`/`F_i` on words and lattice words.
//! - [`rpp_crystal`]: benign tableaux, descent resolution, `e_i`/`f_i`
//!   on reverse plane partitions and the crystal graph.
//! - [`symfunc`]: exact sparse polynomials, Schur polynomials, `g_{λ/μ}`
//!   and its refinement, and every coefficient rule.
//! - [`verify`]: exhaustive property suites over a corpus of small shapes.
//! - [`cli`]: the `rpp-lr` command line.

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod reading;
pub mod rpp_crystal;
pub mod shapes;
pub mod symfunc;
pub mod tableaux;
pub mod verify;
pub mod word_crystal;

pub use error::{Error, Result};
pub use reading::{height_vector, reading_word, reconstruct, Word};
pub use rpp_crystal::{crystal_graph, lower_rpp, raise_rpp, CrystalGraph, ResolveOrder};
pub use shapes::{Partition, SkewShape};
pub use tableaux::{ceq, enumerate_elegant, enumerate_rpp, enumerate_ssyt, rpp_weight, Filling};
pub use word_crystal::{is_lattice, lower_word, raise_word};
