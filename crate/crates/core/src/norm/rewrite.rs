//! Position-wise rewriting with a [`NormTable`].

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::norm::NormTable;
use crate::word::{Symbol, Word};

/// Default node budget for graph searches.
pub const DEFAULT_NODE_BUDGET: usize = 100_000;

impl NormTable {
    /// Rewrites the pair at 0-based `i`; returns whether the word changed.
    #[inline]
    pub(crate) fn rewrite_at(&self, w: &mut [Symbol], i: usize) -> bool {
        let (a, b) = (w[i], w[i + 1]);
        let (c, d) = self.entry(a, b);
        if (c, d) == (a, b) {
            return false;
        }
        w[i] = c;
        w[i + 1] = d;
        true
    }

    pub(crate) fn render(&self, w: &Word) -> String {
        self.alphabet().render(w)
    }

    /// Applies the table to the letters at 1-based positions `position` and `position + 1`.
    pub fn nbar_apply(&self, w: &Word, position: usize) -> Result<Word> {
        self.alphabet().check(w)?;
        if position == 0 || position >= w.len() {
            return Err(Error::PositionOutOfRange {
                position,
                length: w.len(),
            });
        }
        let mut out = w.clone();
        self.rewrite_at(&mut out.0, position - 1);
        Ok(out)
    }

    /// Applies 1-based positions left to right, the first listed position first.
    pub fn apply_sequence(&self, w: &Word, positions: &[usize]) -> Result<Word> {
        self.alphabet().check(w)?;
        let mut out = w.clone();
        for &position in positions {
            if position == 0 || position >= w.len() {
                return Err(Error::PositionOutOfRange {
                    position,
                    length: w.len(),
                });
            }
            self.rewrite_at(&mut out.0, position - 1);
        }
        Ok(out)
    }

    /// A word is normal iff each of its length-two factors is a fixed pair.
    pub fn is_normal(&self, w: &Word) -> bool {
        w.letters().windows(2).all(|p| self.is_fixed(p[0], p[1]))
    }

    pub fn normalize(&self, w: &Word) -> Result<Word> {
        self.normalize_with(w, DEFAULT_NODE_BUDGET)
    }

    /// Normalises `w` by repeated left-to-right sweeps, falling back to a
    /// breadth-first search of the rewrite graph when sweeping does not settle
    /// within `|w|^2 + |w|` sweeps.
    pub fn normalize_with(&self, w: &Word, budget: usize) -> Result<Word> {
        self.alphabet().check(w)?;
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        let n = w.len();
        let mut cur = w.0.clone();
        for _ in 0..n * n + n {
            let mut changed = false;
            for i in 0..n - 1 {
                changed |= self.rewrite_at(&mut cur, i);
            }
            if !changed {
                return Ok(Word(cur));
            }
        }
        self.normalize_by_search(w, budget)
    }

    fn normalize_by_search(&self, w: &Word, budget: usize) -> Result<Word> {
        let search = self.explore(w, budget);
        match (search.normals.as_slice(), search.exhausted) {
            ([first, second, ..], _) => Err(Error::NotConfluent {
                word: self.render(w),
                first: self.render(first),
                second: self.render(second),
            }),
            ([only], _) => Ok(only.clone()),
            ([], _) => Err(Error::NotNormalising {
                word: self.render(w),
            }),
        }
    }

    /// Breadth-first exploration of every word reachable from `w`.
    pub(crate) fn explore(&self, w: &Word, budget: usize) -> Exploration {
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        let mut normals = Vec::new();
        seen.insert(w.clone());
        queue.push_back(w.clone());
        let mut exhausted = false;
        'search: while let Some(x) = queue.pop_front() {
            if self.is_normal(&x) {
                normals.push(x);
                if normals.len() > 1 {
                    break;
                }
                continue;
            }
            for i in 0..x.len().saturating_sub(1) {
                let mut y = x.clone();
                if self.rewrite_at(&mut y.0, i) && seen.insert(y.clone()) {
                    if seen.len() > budget {
                        exhausted = true;
                        break 'search;
                    }
                    queue.push_back(y);
                }
            }
        }
        Exploration { normals, exhausted }
    }

    /// Length of the longest chain of non-trivial rewrites starting at `w`.
    pub fn max_derivation_length(&self, w: &Word, budget: usize) -> Result<usize> {
        self.alphabet().check(w)?;
        let mut memo = HashMap::new();
        self.longest_derivation(w, budget, &mut memo)
    }

    /// As [`max_derivation_length`](Self::max_derivation_length), sharing a
    /// memo table across calls on the same table.
    pub(crate) fn longest_derivation(
        &self,
        w: &Word,
        budget: usize,
        memo: &mut HashMap<Word, usize>,
    ) -> Result<usize> {
        struct Frame {
            word: Word,
            next: usize,
            best: usize,
        }
        if let Some(&v) = memo.get(w) {
            return Ok(v);
        }
        let n = w.len();
        if n < 2 {
            return Ok(0);
        }
        let mut on_stack: HashSet<Word> = HashSet::new();
        on_stack.insert(w.clone());
        let mut stack = vec![Frame {
            word: w.clone(),
            next: 0,
            best: 0,
        }];
        loop {
            let top = stack.last_mut().expect("non-empty stack");
            if top.next < n - 1 {
                let i = top.next;
                top.next += 1;
                let mut y = top.word.clone();
                if !self.rewrite_at(&mut y.0, i) {
                    continue;
                }
                if let Some(&v) = memo.get(&y) {
                    top.best = top.best.max(v + 1);
                    continue;
                }
                if on_stack.contains(&y) {
                    return Err(Error::NonTerminating {
                        word: self.render(w),
                        cycle: self.render(&y),
                    });
                }
                if memo.len() + stack.len() > budget {
                    return Err(Error::budget(budget, "measuring derivation lengths"));
                }
                on_stack.insert(y.clone());
                stack.push(Frame {
                    word: y,
                    next: 0,
                    best: 0,
                });
            } else {
                let done = stack.pop().expect("non-empty stack");
                on_stack.remove(&done.word);
                memo.insert(done.word, done.best);
                match stack.last_mut() {
                    Some(parent) => parent.best = parent.best.max(done.best + 1),
                    None => return Ok(done.best),
                }
            }
        }
    }

    pub fn normalizer(&self) -> Normalizer<'_> {
        Normalizer::new(self, DEFAULT_NODE_BUDGET)
    }
}

pub(crate) struct Exploration {
    /// Distinct normal words found, at most two.
    pub normals: Vec<Word>,
    pub exhausted: bool,
}

/// Memoising wrapper around [`NormTable::normalize_with`] for exhaustive checks.
pub struct Normalizer<'t> {
    table: &'t NormTable,
    budget: usize,
    cache: HashMap<Word, Word>,
}

impl<'t> Normalizer<'t> {
    pub fn new(table: &'t NormTable, budget: usize) -> Self {
        Normalizer {
            table,
            budget,
            cache: HashMap::new(),
        }
    }

    pub fn table(&self) -> &'t NormTable {
        self.table
    }

    pub fn normalize(&mut self, w: &Word) -> Result<Word> {
        if let Some(n) = self.cache.get(w) {
            return Ok(n.clone());
        }
        let n = self.table.normalize_with(w, self.budget)?;
        self.cache.insert(w.clone(), n.clone());
        Ok(n)
    }
}
