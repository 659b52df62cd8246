//! Alphabets of named symbols and words over them.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol inside its [`Alphabet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u16);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for Symbol {
    fn from(i: usize) -> Self {
        Symbol(u16::try_from(i).expect("alphabet too large"))
    }
}

/// Characters that may not appear in a symbol name, on top of whitespace.
const RESERVED: [char; 4] = ['#', '|', '-', '>'];

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || RESERVED.contains(&c))
}

/// A finite ordered set of distinct symbol names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Symbol>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            alphabet.push(name.into())?;
        }
        if alphabet.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(alphabet)
    }

    /// Builds an alphabet that may be empty (a presentation with no atoms).
    pub(crate) fn possibly_empty<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut alphabet = Alphabet {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            alphabet.push(name.into())?;
        }
        Ok(alphabet)
    }

    fn push(&mut self, name: String) -> Result<Symbol> {
        if !is_valid_name(&name) {
            return Err(Error::InvalidName(name));
        }
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateName(name));
        }
        if self.names.len() > u16::MAX as usize {
            return Err(Error::Invalid("alphabet too large".into()));
        }
        let sym = Symbol::from(self.names.len());
        self.index.insert(name.clone(), sym);
        self.names.push(name);
        Ok(sym)
    }

    /// Returns a copy with `name` inserted at the front; other symbols shift by one.
    pub(crate) fn with_front(&self, name: &str) -> Result<Self> {
        let names = std::iter::once(name.to_string()).chain(self.names.iter().cloned());
        Alphabet::new(names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl ExactSizeIterator<Item = Symbol> + Clone {
        (0..self.names.len()).map(Symbol::from)
    }

    pub fn name(&self, sym: Symbol) -> &str {
        &self.names[sym.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn get(&self, name: &str) -> Option<Symbol> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<Symbol> {
        self.get(name)
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    pub fn contains(&self, sym: Symbol) -> bool {
        sym.index() < self.names.len()
    }

    /// True when every name is a single character, so words can be written unspaced.
    pub fn is_compact(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Parses a space-separated word. The empty string gives the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        text.split_whitespace()
            .map(|tok| self.lookup(tok))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Parses an unspaced word over a single-character alphabet.
    pub fn parse_compact(&self, text: &str) -> Result<Word> {
        let mut buf = [0u8; 4];
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| self.lookup(c.encode_utf8(&mut buf)))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// Parses `text` spaced if possible, falling back to the compact form when
    /// the alphabet allows it.
    pub fn parse_word_auto(&self, text: &str) -> Result<Word> {
        match self.parse_word(text) {
            Ok(w) => Ok(w),
            Err(e) if self.is_compact() => self.parse_compact(text).map_err(|_| e),
            Err(e) => Err(e),
        }
    }

    pub fn render(&self, word: &Word) -> String {
        word.iter()
            .map(|s| self.name(s))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn render_compact(&self, word: &Word) -> String {
        word.iter().map(|s| self.name(s)).collect()
    }

    pub(crate) fn check(&self, word: &Word) -> Result<()> {
        match word.iter().find(|s| !self.contains(*s)) {
            Some(s) => Err(Error::UnknownSymbol(format!("#{}", s.0))),
            None => Ok(()),
        }
    }

    /// All words of length exactly `len`, in lexicographic order of symbol indices.
    pub fn words_of_length(&self, len: usize) -> WordsOfLength {
        WordsOfLength::new(self.len(), len)
    }

    /// All words with `1 <= length <= max_len`, shortest first.
    pub fn words_up_to(&self, max_len: usize) -> impl Iterator<Item = Word> {
        let size = self.len();
        (1..=max_len).flat_map(move |len| WordsOfLength::new(size, len))
    }
}

/// A finite sequence of symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Symbol> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn letters(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn repeat(sym: Symbol, n: usize) -> Word {
        Word(vec![sym; n])
    }

    pub fn push(&mut self, sym: Symbol) {
        self.0.push(sym);
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| format!("#{}", s.0)).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Odometer over all words of a fixed length.
pub struct WordsOfLength {
    size: usize,
    current: Option<Vec<Symbol>>,
}

impl WordsOfLength {
    fn new(size: usize, len: usize) -> Self {
        let current = if size == 0 && len > 0 {
            None
        } else {
            Some(vec![Symbol(0); len])
        };
        WordsOfLength { size, current }
    }
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let cur = self.current.as_mut()?;
        let out = Word(cur.clone());
        let mut i = cur.len();
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if cur[i].index() + 1 < self.size {
                cur[i] = Symbol::from(cur[i].index() + 1);
                break;
            }
            cur[i] = Symbol(0);
        }
        Some(out)
    }
}
