//! Normalisation tables obtained from Garside families of presented monoids.

mod presentation;
mod synth;

pub use presentation::{
    parse_presentation, presentation_to_text, FamilyElement, GarsideFamily, PresentedMonoid,
    DEFAULT_LENGTH_SLACK,
};
pub use synth::{check_family_closure, greedy_table, right_divisors, ClosureIssue, FamilyReport};
