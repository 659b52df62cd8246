//! Quadratic normalisations of monoids and the Mealy automata they induce.
//!
//! A [`NormTable`] lists the rewriting of length-two words; from it one can
//! normalise words, measure the breadth of the normalisation, and build the
//! Mealy machine and Thurston transducer whose runs compute normal forms.
//! Tables can also be synthesised from a Garside family of a presented
//! monoid, and the [`gallery`] ships the standard worked examples.

pub mod error;
pub mod gallery;
pub mod greedy;
pub mod machines;
pub mod norm;
pub mod shell;
pub mod word;

pub use error::{Error, Result};
pub use machines::MealyMachine;
pub use norm::{Bound, Breadth, NormTable};
pub use word::{Alphabet, Symbol, Word};
