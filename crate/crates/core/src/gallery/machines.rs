//! Hand-written Mealy machines.

use crate::machines::MealyMachine;
use crate::word::{Alphabet, Symbol};

fn digits(n: usize) -> Alphabet {
    Alphabet::new((0..n).map(|d| d.to_string())).expect("digit alphabet")
}

/// Division by 3 of a binary numeral read most significant digit first;
/// the state is the running remainder.
pub fn div3() -> MealyMachine {
    MealyMachine::from_fn(digits(3), digits(2), |r, bit| {
        let v = 2 * r.index() + bit.index();
        (Symbol::from(v % 3), Symbol::from(v / 3))
    })
    .expect("div3")
}

/// Multiplication by 2 of a ternary numeral read least significant digit
/// first; the state is the carry.
pub fn mul2() -> MealyMachine {
    MealyMachine::from_fn(digits(2), digits(3), |c, x| {
        let v = 2 * x.index() + c.index();
        (Symbol::from(v / 3), Symbol::from(v % 3))
    })
    .expect("mul2")
}
