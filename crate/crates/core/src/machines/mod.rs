//! Mealy automata attached to normalisation tables, and what they compute.

mod action;
mod bridge;
mod machine;
mod numeration;

pub use action::ActionClassPartition;
pub use machine::{MealyMachine, Transition};
pub use numeration::Numeration;
