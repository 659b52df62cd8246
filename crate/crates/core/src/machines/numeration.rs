use std::collections::HashMap;

use crate::error::Result;
use crate::machines::MealyMachine;
use crate::word::{Symbol, Word};

/// Result of [`MealyMachine::numeration_iterate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Numeration {
    /// Arrival state of each run, over the state alphabet.
    pub collected: Word,
    /// Working word before each run; `trace[k]` is fed to run `k`, and the
    /// last entry is the word left after the final run.
    pub trace: Vec<Word>,
    /// `(preperiod, period)` of the working word sequence, once a word recurs.
    pub cycle: Option<(usize, usize)>,
}

impl Numeration {
    /// The collected states split at the detected preperiod, if any.
    pub fn split(&self) -> (&[Symbol], &[Symbol]) {
        match self.cycle {
            Some((pre, _)) if pre <= self.collected.len() => self.collected.letters().split_at(pre),
            _ => (self.collected.letters(), &[]),
        }
    }
}

impl MealyMachine {
    /// Repeatedly runs from `start`, feeding each output back in as the next
    /// input and collecting the arrival states.
    pub fn numeration_iterate(&self, start: Symbol, w: &Word, steps: usize) -> Result<Numeration> {
        let mut collected = Word::empty();
        let mut trace = vec![w.clone()];
        let mut seen: HashMap<Word, usize> = HashMap::from([(w.clone(), 0)]);
        let mut cycle = None;
        let mut cur = w.clone();
        for k in 1..=steps {
            let (out, arrival) = self.run(start, &cur)?;
            collected.push(arrival);
            cur = out;
            if cycle.is_none() {
                if let Some(&j) = seen.get(&cur) {
                    cycle = Some((j, k - j));
                } else {
                    seen.insert(cur.clone(), k);
                }
            }
            trace.push(cur.clone());
        }
        Ok(Numeration {
            collected,
            trace,
            cycle,
        })
    }
}
