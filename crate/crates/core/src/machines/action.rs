//! Deciding equality of the maps induced by state words.

use std::collections::{HashMap, VecDeque};

use crate::error::Result;
use crate::machines::MealyMachine;
use crate::word::{Alphabet, Symbol, Word};

impl MealyMachine {
    /// Shortest input word on which the state words `u` and `v` produce
    /// different outputs, or `None` when they induce the same map.
    ///
    /// Explores pairs of state tuples reachable from `(u, v)` breadth first.
    /// Two tuple pairs that agree on every letter and whose successor pairs
    /// agree are bisimilar, so the search either finds a disagreeing letter
    /// or exhausts the finitely many reachable pairs.
    pub fn distinguishing_word(&self, u: &Word, v: &Word) -> Result<Option<Word>> {
        self.states().check(u)?;
        self.states().check(v)?;
        type Pair = (Vec<Symbol>, Vec<Symbol>);
        let start: Pair = (u.0.clone(), v.0.clone());
        // node -> (parent node, letter leading here)
        let mut nodes: Vec<(Pair, Option<(usize, Symbol)>)> = vec![(start.clone(), None)];
        let mut index: HashMap<Pair, usize> = HashMap::from([(start, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for i in self.letters().symbols() {
                let (mut tu, mut tv) = nodes[k].0.clone();
                let ou = self.thread(&mut tu, i);
                let ov = self.thread(&mut tv, i);
                if ou != ov {
                    let mut word = vec![i];
                    let mut at = k;
                    while let Some((parent, letter)) = nodes[at].1 {
                        word.push(letter);
                        at = parent;
                    }
                    word.reverse();
                    return Ok(Some(Word(word)));
                }
                let pair = (tu, tv);
                if !index.contains_key(&pair) {
                    index.insert(pair.clone(), nodes.len());
                    queue.push_back(nodes.len());
                    nodes.push((pair, Some((k, i))));
                }
            }
        }
        Ok(None)
    }

    /// True iff the state words `u` and `v` induce the same map on all words.
    pub fn action_equal(&self, u: &Word, v: &Word) -> Result<bool> {
        Ok(self.distinguishing_word(u, v)?.is_none())
    }

    /// Groups states by the map they induce, refining output rows by
    /// successor classes until stable.
    pub fn minimize(&self) -> ActionClassPartition {
        let letters: Vec<Symbol> = self.letters().symbols().collect();
        let states: Vec<Symbol> = self.states().symbols().collect();
        let renumber = |keys: Vec<Vec<usize>>| -> Vec<usize> {
            let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
            keys.into_iter()
                .map(|k| {
                    let n = ids.len();
                    *ids.entry(k).or_insert(n)
                })
                .collect()
        };
        let mut class = renumber(
            states
                .iter()
                .map(|&q| letters.iter().map(|&i| self.out(q, i).index()).collect())
                .collect(),
        );
        loop {
            let refined = renumber(
                states
                    .iter()
                    .map(|&q| {
                        let mut key = vec![class[q.index()]];
                        key.extend(letters.iter().map(|&i| class[self.next(q, i).index()]));
                        key
                    })
                    .collect(),
            );
            let count = |c: &[usize]| c.iter().max().map_or(0, |m| m + 1);
            if count(&refined) == count(&class) {
                return ActionClassPartition { class_of: refined };
            }
            class = refined;
        }
    }

    /// The machine whose states are the state words of length `k`, acting
    /// as their composite maps. States are named by joining letters with `.`.
    pub fn power(&self, k: usize) -> Result<MealyMachine> {
        let tuples: Vec<Word> = self.states().words_of_length(k).collect();
        let q = self.states().len();
        let encode = |t: &[Symbol]| t.iter().fold(0usize, |acc, s| acc * q + s.index());
        let names = tuples.iter().map(|t| {
            if t.is_empty() {
                "ε".to_string()
            } else {
                t.iter()
                    .map(|s| self.states().name(s))
                    .collect::<Vec<_>>()
                    .join(".")
            }
        });
        let states = Alphabet::new(names)?;
        MealyMachine::from_fn(states, self.letters().clone(), |t, i| {
            let mut tuple = tuples[t.index()].0.clone();
            let o = self.thread(&mut tuple, i);
            (Symbol::from(encode(&tuple)), o)
        })
    }

    /// Number of distinct maps induced by state words of each length
    /// `1..=max_len`.
    pub fn growth(&self, max_len: usize) -> Result<Vec<usize>> {
        let mut counts = Vec::with_capacity(max_len);
        for len in 1..=max_len {
            let mut reps: Vec<Word> = Vec::new();
            for u in self.states().words_of_length(len) {
                let mut fresh = true;
                for r in &reps {
                    if self.action_equal(r, &u)? {
                        fresh = false;
                        break;
                    }
                }
                if fresh {
                    reps.push(u);
                }
            }
            counts.push(reps.len());
        }
        Ok(counts)
    }
}

/// Assignment of states to classes of equal induced maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionClassPartition {
    class_of: Vec<usize>,
}

impl ActionClassPartition {
    pub fn class_of(&self, q: Symbol) -> usize {
        self.class_of[q.index()]
    }

    pub fn num_classes(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn same_class(&self, p: Symbol, q: Symbol) -> bool {
        self.class_of(p) == self.class_of(q)
    }

    /// Classes as lists of states, ordered by their smallest member.
    pub fn classes(&self) -> Vec<Vec<Symbol>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (q, &c) in self.class_of.iter().enumerate() {
            out[c].push(Symbol::from(q));
        }
        out
    }
}
