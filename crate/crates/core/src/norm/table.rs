use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Symbol};

/// The restriction of a quadratic normalisation to length-two words: a total
/// map from ordered pairs of symbols to ordered pairs of symbols.
///
/// Pairs that were never set are fixed points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormTable {
    alphabet: Alphabet,
    unit: Option<Symbol>,
    entries: Vec<(Symbol, Symbol)>,
}

impl NormTable {
    /// The table in which every pair is normal.
    pub fn identity(alphabet: Alphabet, unit: Option<&str>) -> Result<Self> {
        let unit = unit.map(|u| alphabet.lookup(u)).transpose()?;
        let g = alphabet.len();
        let entries = (0..g * g)
            .map(|k| (Symbol::from(k / g), Symbol::from(k % g)))
            .collect();
        Ok(NormTable {
            alphabet,
            unit,
            entries,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn unit(&self) -> Option<Symbol> {
        self.unit
    }

    pub fn size(&self) -> usize {
        self.alphabet.len()
    }

    #[inline]
    fn slot(&self, a: Symbol, b: Symbol) -> usize {
        a.index() * self.alphabet.len() + b.index()
    }

    #[inline]
    pub fn entry(&self, a: Symbol, b: Symbol) -> (Symbol, Symbol) {
        self.entries[self.slot(a, b)]
    }

    pub fn is_fixed(&self, a: Symbol, b: Symbol) -> bool {
        self.entry(a, b) == (a, b)
    }

    pub fn set(&mut self, a: Symbol, b: Symbol, image: (Symbol, Symbol)) {
        let slot = self.slot(a, b);
        self.entries[slot] = image;
    }

    /// Sets the image of `a b` to `c d`, all given by name.
    pub fn set_named(&mut self, a: &str, b: &str, c: &str, d: &str) -> Result<()> {
        let al = &self.alphabet;
        let (a, b, c, d) = (al.lookup(a)?, al.lookup(b)?, al.lookup(c)?, al.lookup(d)?);
        self.set(a, b, (c, d));
        Ok(())
    }

    /// Non-fixed entries as `(a, b, c, d)`, ordered by `(a, b)`.
    pub fn rules(&self) -> impl Iterator<Item = (Symbol, Symbol, Symbol, Symbol)> + '_ {
        let g = self.alphabet.len();
        self.entries
            .iter()
            .enumerate()
            .filter_map(move |(k, &(c, d))| {
                let (a, b) = (Symbol::from(k / g), Symbol::from(k % g));
                ((a, b) != (c, d)).then_some((a, b, c, d))
            })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Symbol, Symbol)> + '_ {
        let g = self.alphabet.len();
        (0..g * g).map(move |k| (Symbol::from(k / g), Symbol::from(k % g)))
    }

    /// Pairs `(a, b)` whose image is not itself a fixed point.
    pub fn idempotence_failures(&self) -> Vec<(Symbol, Symbol)> {
        self.pairs()
            .filter(|&(a, b)| {
                let (c, d) = self.entry(a, b);
                self.entry(c, d) != (c, d)
            })
            .collect()
    }

    pub fn check_idempotent(&self) -> Result<()> {
        match self.idempotence_failures().first() {
            Some(&(a, b)) => Err(Error::NotIdempotent(format!(
                "{} {}",
                self.alphabet.name(a),
                self.alphabet.name(b)
            ))),
            None => Ok(()),
        }
    }

    pub(crate) fn from_parts(
        alphabet: Alphabet,
        unit: Option<Symbol>,
        entries: Vec<(Symbol, Symbol)>,
    ) -> Self {
        debug_assert_eq!(entries.len(), alphabet.len() * alphabet.len());
        NormTable {
            alphabet,
            unit,
            entries,
        }
    }

    /// Parses the line-based table format:
    ///
    /// ```text
    /// alphabet 1 a b
    /// unit 1
    /// rule a b -> 1 1
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut table: Option<NormTable> = None;
        let mut seen_unit = false;
        let mut seen_pairs = HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = strip_comment(raw);
            let mut toks = line.split_whitespace();
            let Some(keyword) = toks.next() else { continue };
            let rest: Vec<&str> = toks.collect();
            match (keyword, table.as_mut()) {
                ("alphabet", None) => {
                    if rest.is_empty() {
                        return Err(Error::parse(line_no, "empty alphabet"));
                    }
                    let alphabet = Alphabet::new(rest.iter().copied())
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    table = Some(NormTable::identity(alphabet, None)?);
                }
                ("alphabet", Some(_)) => {
                    return Err(Error::parse(line_no, "duplicate `alphabet` line"));
                }
                (_, None) => {
                    return Err(Error::parse(
                        line_no,
                        "first non-comment line must be `alphabet`",
                    ));
                }
                ("unit", Some(t)) => {
                    if seen_unit {
                        return Err(Error::parse(line_no, "duplicate `unit` line"));
                    }
                    let [name] = rest[..] else {
                        return Err(Error::parse(line_no, "expected `unit <name>`"));
                    };
                    let sym = t
                        .alphabet
                        .lookup(name)
                        .map_err(|e| Error::parse(line_no, e.to_string()))?;
                    t.unit = Some(sym);
                    seen_unit = true;
                }
                ("rule", Some(t)) => {
                    let [a, b, "->", c, d] = rest[..] else {
                        return Err(Error::parse(line_no, "expected `rule <a> <b> -> <c> <d>`"));
                    };
                    let look = |n: &str| {
                        t.alphabet
                            .lookup(n)
                            .map_err(|e| Error::parse(line_no, e.to_string()))
                    };
                    let (a, b, c, d) = (look(a)?, look(b)?, look(c)?, look(d)?);
                    if !seen_pairs.insert((a, b)) {
                        return Err(Error::parse(
                            line_no,
                            format!(
                                "duplicate rule for pair `{} {}`",
                                t.alphabet.name(a),
                                t.alphabet.name(b)
                            ),
                        ));
                    }
                    t.set(a, b, (c, d));
                }
                (other, Some(_)) => {
                    return Err(Error::parse(line_no, format!("unknown keyword `{other}`")));
                }
            }
        }
        table.ok_or_else(|| Error::parse(text.lines().count() + 1, "missing `alphabet` line"))
    }

    /// Canonical text form: fixed pairs are omitted, rules sorted by pair.
    pub fn to_text(&self) -> String {
        let al = &self.alphabet;
        let mut out = format!("alphabet {}\n", al.names().join(" "));
        if let Some(u) = self.unit {
            out.push_str(&format!("unit {}\n", al.name(u)));
        }
        for (a, b, c, d) in self.rules() {
            out.push_str(&format!(
                "rule {} {} -> {} {}\n",
                al.name(a),
                al.name(b),
                al.name(c),
                al.name(d)
            ));
        }
        out
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BICYCLIC: &str = "\
# bicyclic monoid <a, b : ab = 1>
alphabet 1 a b
unit 1
rule a b -> 1 1
rule a 1 -> 1 a   # unit migrates left
rule b 1 -> 1 b
";

    #[test]
    fn parses_bicyclic() {
        let t = NormTable::parse(BICYCLIC).unwrap();
        assert_eq!(t.size(), 3);
        assert_eq!(t.rules().count(), 3);
        assert_eq!(t.unit(), Some(Symbol(0)));
        let al = t.alphabet();
        let (a, b) = (al.lookup("a").unwrap(), al.lookup("b").unwrap());
        assert_eq!(t.entry(a, b), (Symbol(0), Symbol(0)));
        assert!(t.is_fixed(b, a));
    }

    #[test]
    fn duplicate_rule_reports_second_line() {
        let text = "alphabet a b\nrule a b -> b a\nrule a b -> a a\n";
        match NormTable::parse(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn empty_alphabet_is_an_error() {
        assert!(matches!(
            NormTable::parse("alphabet\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(NormTable::parse("# nothing\n").is_err());
        assert!(NormTable::parse("unit 1\nalphabet 1\n").is_err());
    }

    #[test]
    fn unknown_symbol_in_rule() {
        let err = NormTable::parse("alphabet a b\nrule a c -> a b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn canonical_text_is_stable() {
        let t = NormTable::parse(BICYCLIC).unwrap();
        let text = t.to_text();
        assert_eq!(
            text,
            "alphabet 1 a b\nunit 1\nrule a 1 -> 1 a\nrule a b -> 1 1\nrule b 1 -> 1 b\n"
        );
        assert_eq!(NormTable::parse(&text).unwrap(), t);
        assert_eq!(NormTable::parse(&text).unwrap().to_text(), text);
    }

    #[test]
    fn two_cycle_is_not_idempotent() {
        let mut t = NormTable::identity(Alphabet::new(["a", "b"]).unwrap(), None).unwrap();
        t.set_named("a", "b", "b", "a").unwrap();
        t.set_named("b", "a", "a", "b").unwrap();
        let fails = t.idempotence_failures();
        assert!(fails.contains(&(Symbol(0), Symbol(1))));
        assert!(matches!(t.check_idempotent(), Err(Error::NotIdempotent(p)) if p == "a b"));
    }
}
