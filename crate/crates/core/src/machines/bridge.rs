//! Recovering normal forms from the two machines of a table.

use crate::error::{Error, Result};
use crate::machines::MealyMachine;
use crate::word::{Symbol, Word};

impl MealyMachine {
    /// Runs the state word `u` on `n` copies of `unit` and reads the result
    /// backwards. For the Mealy automaton of a table satisfying the unit
    /// condition this is `unit^(n - |u|)` followed by the normal form of `u`.
    pub fn padding_normal_form(&self, unit: Symbol, u: &Word, n: usize) -> Result<Word> {
        if n < u.len() {
            return Err(Error::PaddingTooShort {
                padding: n,
                length: u.len(),
            });
        }
        if !self.letters().contains(unit) {
            return Err(Error::UnknownSymbol(format!("#{}", unit.0)));
        }
        Ok(self.run_word(u, &Word::repeat(unit, n))?.reversed())
    }

    /// True when every adjacent pair of `w` is a fixed transition of this
    /// Thurston transducer (`x --y|x--> y`).
    pub fn thurston_is_normal(&self, w: &Word) -> bool {
        w.letters()
            .windows(2)
            .all(|p| self.step(p[0], p[1]) == (p[1], p[0]))
    }

    /// One Thurston sweep: start in `w[0]`, read the rest, and append the
    /// arrival state to the output.
    pub fn thurston_sweep(&self, w: &Word) -> Result<Word> {
        let Some((&first, rest)) = w.letters().split_first() else {
            return Err(Error::EmptyWord);
        };
        let (mut out, last) = self.run(first, &Word(rest.to_vec()))?;
        out.push(last);
        Ok(out)
    }

    /// Iterates [`thurston_sweep`](Self::thurston_sweep) until the word is
    /// normal. Returns the normal word and the number of sweeps taken.
    pub fn thurston_normalize(&self, w: &Word, max_sweeps: usize) -> Result<(Word, usize)> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        self.letters().check(w)?;
        let mut cur = w.clone();
        for sweeps in 0..=max_sweeps {
            if self.thurston_is_normal(&cur) {
                return Ok((cur, sweeps));
            }
            if sweeps < max_sweeps {
                cur = self.thurston_sweep(&cur)?;
            }
        }
        Err(Error::SweepBudgetExhausted(max_sweeps))
    }

    /// [`thurston_normalize`](Self::thurston_normalize) with `|w|^2` sweeps.
    pub fn thurston_normalize_default(&self, w: &Word) -> Result<Word> {
        let budget = (w.len() * w.len()).max(1);
        Ok(self.thurston_normalize(w, budget)?.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::tables;

    #[test]
    fn padding_examples() {
        let bic = tables::bicyclic();
        let m = bic.build_mealy().unwrap();
        let al = bic.alphabet();
        let one = al.lookup("1").unwrap();
        let ab = al.parse_word("a b").unwrap();
        assert_eq!(
            m.padding_normal_form(one, &ab, 3).unwrap(),
            al.parse_word("1 1 1").unwrap()
        );
        assert_eq!(
            m.padding_normal_form(one, &Word(vec![one]), 1).unwrap(),
            Word(vec![one])
        );
        assert!(matches!(
            m.padding_normal_form(one, &ab, 1),
            Err(Error::PaddingTooShort {
                padding: 1,
                length: 2
            })
        ));
    }

    #[test]
    fn thurston_examples() {
        let pl = tables::plactic2();
        let t = pl.build_thurston().unwrap();
        let al = pl.alphabet();
        let (nf, sweeps) = t
            .thurston_normalize(&al.parse_word("b a a").unwrap(), 9)
            .unwrap();
        assert_eq!(nf, al.parse_word("1 a ba").unwrap());
        assert_eq!(sweeps, 1);
        let normal = al.parse_word("1 a ba").unwrap();
        assert_eq!(
            t.thurston_normalize(&normal, 9).unwrap(),
            (normal.clone(), 0)
        );

        let bic = tables::bicyclic();
        let t = bic.build_thurston().unwrap();
        let al = bic.alphabet();
        let (nf, sweeps) = t
            .thurston_normalize(&al.parse_word("a a b").unwrap(), 9)
            .unwrap();
        assert_eq!(nf, al.parse_word("1 1 a").unwrap());
        assert!(sweeps <= 3);
    }

    #[test]
    fn sweep_budget_is_reported() {
        let bic = tables::bicyclic();
        let t = bic.build_thurston().unwrap();
        let w = bic.alphabet().parse_word("a a b").unwrap();
        assert_eq!(
            t.thurston_normalize(&w, 0),
            Err(Error::SweepBudgetExhausted(0))
        );
    }
}
