//! Exhaustive checks of the normalisation axioms on short words.

use std::collections::HashMap;

use crate::error::Error;
use crate::norm::rewrite::DEFAULT_NODE_BUDGET;
use crate::norm::NormTable;
use crate::word::{Symbol, Word};

/// Witness lists are truncated to this many entries; totals are still counted.
pub const MAX_WITNESSES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub prefix: Word,
    pub middle: Word,
    pub suffix: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfluenceFailure {
    pub word: Word,
    pub first: Word,
    pub second: Word,
}

/// Outcome of [`NormTable::verify_normalisation`]. Empty means the table
/// passed every check up to `max_len`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalisationReport {
    pub max_len: usize,
    pub idempotence: Vec<(Symbol, Symbol)>,
    pub normalize_failures: Vec<(Word, Error)>,
    pub confluence: Vec<ConfluenceFailure>,
    pub axiom: Vec<AxiomFailure>,
    pub normalize_failure_count: usize,
    pub confluence_count: usize,
    pub axiom_count: usize,
}

impl NormalisationReport {
    pub fn is_empty(&self) -> bool {
        self.idempotence.is_empty()
            && self.normalize_failure_count == 0
            && self.confluence_count == 0
            && self.axiom_count == 0
    }
}

fn record<T>(list: &mut Vec<T>, count: &mut usize, item: T) {
    *count += 1;
    if list.len() < MAX_WITNESSES {
        list.push(item);
    }
}

impl NormTable {
    /// Checks pair idempotence, normalisability, confluence of the rewrite
    /// graph, and `N(u N(w) v) = N(u w v)` on every word of length at most
    /// `max_len`.
    pub fn verify_normalisation(&self, max_len: usize) -> NormalisationReport {
        let mut report = NormalisationReport {
            max_len,
            idempotence: self.idempotence_failures(),
            ..Default::default()
        };
        let mut normal_forms: HashMap<Word, Word> = HashMap::new();
        let words: Vec<Word> = self.alphabet().words_up_to(max_len).collect();

        for word in &words {
            match self.normalize_with(word, DEFAULT_NODE_BUDGET) {
                Ok(n) => {
                    normal_forms.insert(word.clone(), n);
                }
                Err(e) => record(
                    &mut report.normalize_failures,
                    &mut report.normalize_failure_count,
                    (word.clone(), e),
                ),
            }
            if word.len() >= 2 {
                let search = self.explore(word, DEFAULT_NODE_BUDGET);
                if let [first, second, ..] = search.normals.as_slice() {
                    let failure = ConfluenceFailure {
                        word: word.clone(),
                        first: first.clone(),
                        second: second.clone(),
                    };
                    record(
                        &mut report.confluence,
                        &mut report.confluence_count,
                        failure,
                    );
                } else if search.exhausted {
                    let e = Error::budget(DEFAULT_NODE_BUDGET, "checking confluence");
                    record(
                        &mut report.normalize_failures,
                        &mut report.normalize_failure_count,
                        (word.clone(), e),
                    );
                }
            }
        }

        for word in &words {
            let Some(nf) = normal_forms.get(word) else {
                continue;
            };
            let n = word.len();
            if n < 2 {
                continue;
            }
            let letters = word.letters();
            for i in 0..n {
                for j in i + 2..=n {
                    let middle = Word(letters[i..j].to_vec());
                    let Some(inner) = normal_forms.get(&middle) else {
                        continue;
                    };
                    let mut spliced = letters[..i].to_vec();
                    spliced.extend_from_slice(inner.letters());
                    spliced.extend_from_slice(&letters[j..]);
                    if normal_forms.get(&Word(spliced)) != Some(nf) {
                        let failure = AxiomFailure {
                            prefix: Word(letters[..i].to_vec()),
                            middle,
                            suffix: Word(letters[j..].to_vec()),
                        };
                        record(&mut report.axiom, &mut report.axiom_count, failure);
                    }
                }
            }
        }
        report
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::tables;
    use crate::word::Alphabet;

    #[test]
    fn gallery_tables_pass_at_five() {
        for t in [tables::bicyclic(), tables::plactic2(), tables::cyclic(3)] {
            let report = t.verify_normalisation(5);
            assert!(report.is_empty(), "{report:?}");
        }
    }

    #[test]
    fn two_cycle_reports_idempotence_witness() {
        let mut t = NormTable::identity(Alphabet::new(["a", "b"]).unwrap(), None).unwrap();
        t.set_named("a", "b", "b", "a").unwrap();
        t.set_named("b", "a", "a", "b").unwrap();
        let report = t.verify_normalisation(3);
        assert!(report.idempotence.contains(&(Symbol(0), Symbol(1))));
        assert!(!report.is_empty());
    }

    #[test]
    fn non_confluent_table_reports_witness() {
        let al = Alphabet::new(["x", "a", "b", "c"]).unwrap();
        let mut t = NormTable::identity(al, None).unwrap();
        t.set_named("x", "a", "c", "c").unwrap();
        t.set_named("a", "b", "b", "b").unwrap();
        let report = t.verify_normalisation(3);
        assert!(report.confluence_count > 0);
        assert!(report.axiom_count > 0);
        let first = &report.confluence[0];
        assert_eq!(first.word.len(), 3);
    }
}
