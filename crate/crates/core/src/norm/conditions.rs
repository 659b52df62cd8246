//! Breadth, the domino-style condition on it, and the unit condition.

use std::fmt;

use crate::error::{Error, Result};
use crate::norm::NormTable;
use crate::word::{Symbol, Word};

pub const DEFAULT_BREADTH_CAP: usize = 64;

/// Longest word length exhaustively checked by [`NormTable::check_unit_condition`].
pub const UNIT_CHECK_LEN: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Finite(usize),
    Unbounded,
}

impl Bound {
    pub fn finite(self) -> Option<usize> {
        match self {
            Bound::Finite(n) => Some(n),
            Bound::Unbounded => None,
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(n) => write!(f, "{n}"),
            Bound::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// The pair `(d, p)`: worst-case numbers of alternating position applications
/// needed to normalise a three-letter word, starting at position 2 for `d`
/// and at position 1 for `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Breadth {
    pub d: Bound,
    pub p: Bound,
    pub d_witness: [Symbol; 3],
    pub p_witness: [Symbol; 3],
}

impl Breadth {
    pub fn as_pair(&self) -> Option<(usize, usize)> {
        Some((self.d.finite()?, self.p.finite()?))
    }

    /// `d <= 4` and `p <= 3`.
    pub fn is_home(&self) -> bool {
        matches!((self.d, self.p), (Bound::Finite(d), Bound::Finite(p)) if d <= 4 && p <= 3)
    }

    /// A genuine quadratic normalisation has `|d - p| <= 1`; anything else is
    /// reported but not treated as an error.
    pub fn warning(&self) -> Option<String> {
        let (d, p) = self.as_pair()?;
        (d.abs_diff(p) > 1).then(|| format!("|d - p| = {} exceeds 1", d.abs_diff(p)))
    }

    /// Why [`is_home`](Self::is_home) fails, if it does.
    pub fn home_violation(&self) -> Option<String> {
        let mut reasons = Vec::new();
        match self.d {
            Bound::Finite(d) if d <= 4 => {}
            d => reasons.push(format!("d={d} exceeds 4")),
        }
        match self.p {
            Bound::Finite(p) if p <= 3 => {}
            p => reasons.push(format!("p={p} exceeds 3")),
        }
        (!reasons.is_empty()).then(|| reasons.join(", "))
    }
}

/// Number of alternating applications, starting at 0-based `first`, after
/// which `triple` equals `target`.
fn alternating_steps(
    table: &NormTable,
    triple: [Symbol; 3],
    first: usize,
    target: &[Symbol],
    cap: usize,
) -> Bound {
    let mut cur = triple;
    let mut pos = first;
    for steps in 0..=cap {
        if cur[..] == *target {
            return Bound::Finite(steps);
        }
        table.rewrite_at(&mut cur, pos);
        pos ^= 1;
    }
    Bound::Unbounded
}

impl NormTable {
    pub fn breadth(&self) -> Result<Breadth> {
        self.breadth_capped(DEFAULT_BREADTH_CAP)
    }

    pub fn breadth_capped(&self, cap: usize) -> Result<Breadth> {
        self.check_idempotent()?;
        let zero = Symbol(0);
        let mut best = Breadth {
            d: Bound::Finite(0),
            p: Bound::Finite(0),
            d_witness: [zero; 3],
            p_witness: [zero; 3],
        };
        for word in self.alphabet().words_of_length(3) {
            let target = self.normalize(&word)?;
            let triple = [word.0[0], word.0[1], word.0[2]];
            let d = alternating_steps(self, triple, 1, target.letters(), cap);
            let p = alternating_steps(self, triple, 0, target.letters(), cap);
            if d > best.d {
                best.d = d;
                best.d_witness = triple;
            }
            if p > best.p {
                best.p = p;
                best.p_witness = triple;
            }
        }
        Ok(best)
    }

    pub fn condition_home(&self) -> Result<bool> {
        Ok(self.breadth()?.is_home())
    }

    /// The first violation of the unit condition, if any: either a table
    /// entry `x 1` or `1 x` not sent to `1 x`, or a word `w` (up to
    /// [`UNIT_CHECK_LEN`] letters) for which `N(1 w)` or `N(w 1)` differs
    /// from `1 N(w)`.
    pub fn unit_violation(&self) -> Result<Option<String>> {
        let unit = self.unit().ok_or(Error::MissingUnit)?;
        let al = self.alphabet();
        for x in al.symbols() {
            for (a, b) in [(x, unit), (unit, x)] {
                if self.entry(a, b) != (unit, x) {
                    let (c, d) = self.entry(a, b);
                    return Ok(Some(format!(
                        "N({} {}) = {} {}, expected {} {}",
                        al.name(a),
                        al.name(b),
                        al.name(c),
                        al.name(d),
                        al.name(unit),
                        al.name(x)
                    )));
                }
            }
        }
        let mut normalizer = self.normalizer();
        let one = Word(vec![unit]);
        for w in al.words_up_to(UNIT_CHECK_LEN) {
            let expected = one.concat(&normalizer.normalize(&w)?);
            for padded in [one.concat(&w), w.concat(&one)] {
                let got = normalizer.normalize(&padded)?;
                if got != expected {
                    return Ok(Some(format!(
                        "N({}) = {}, expected {}",
                        al.render(&padded),
                        al.render(&got),
                        al.render(&expected)
                    )));
                }
            }
        }
        Ok(None)
    }

    pub fn check_unit_condition(&self) -> Result<bool> {
        Ok(self.unit_violation()?.is_none())
    }

    /// Adjoins a fresh unit symbol at the front of the alphabet, with
    /// `x 1 -> 1 x` and `1 x -> 1 x` for every `x`. Existing entries are kept.
    pub fn adjoin_unit(&self) -> Result<NormTable> {
        if let Some(u) = self.unit() {
            return Err(Error::UnitAlreadyPresent(
                self.alphabet().name(u).to_string(),
            ));
        }
        let old = self.alphabet();
        let mut name = String::from("1");
        while old.get(&name).is_some() {
            name.push('\'');
        }
        let alphabet = old.with_front(&name)?;
        let shift = |s: Symbol| Symbol::from(s.index() + 1);
        let unit = Symbol(0);
        let g = alphabet.len();
        let mut entries = Vec::with_capacity(g * g);
        for a in alphabet.symbols() {
            for b in alphabet.symbols() {
                let image = if a == unit {
                    (unit, b)
                } else if b == unit {
                    (unit, a)
                } else {
                    let (c, d) =
                        self.entry(Symbol::from(a.index() - 1), Symbol::from(b.index() - 1));
                    (shift(c), shift(d))
                };
                entries.push(image);
            }
        }
        Ok(NormTable::from_parts(alphabet, Some(unit), entries))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::tables;
    use crate::word::Alphabet;

    #[test]
    fn gallery_breadths() {
        let pair = |t: &NormTable| t.breadth().unwrap().as_pair().unwrap();
        assert_eq!(pair(&tables::cyclic(2)), (3, 2));
        assert_eq!(pair(&tables::bicyclic()), (3, 4));
        assert_eq!(pair(&tables::plactic2()), (3, 3));
        assert_eq!(pair(&tables::malcev()), (3, 3));
    }

    #[test]
    fn witnesses_attain_the_maximum() {
        for t in [tables::bicyclic(), tables::plactic2(), tables::cyclic(3)] {
            let b = t.breadth().unwrap();
            let w = Word(b.p_witness.to_vec());
            let target = t.normalize(&w).unwrap();
            let p = b.p.finite().unwrap();
            let seq: Vec<usize> = (0..p).map(|k| 1 + k % 2).collect();
            assert_eq!(t.apply_sequence(&w, &seq).unwrap(), target);
            if p > 0 {
                assert_ne!(t.apply_sequence(&w, &seq[..p - 1]).unwrap(), target);
            }
        }
    }

    #[test]
    fn single_letter_alphabet_has_zero_breadth() {
        let t = tables::cyclic(1);
        assert_eq!(t.breadth().unwrap().as_pair(), Some((0, 0)));
        assert!(t.condition_home().unwrap());
    }

    #[test]
    fn home_verdicts() {
        assert!(tables::plactic2().condition_home().unwrap());
        assert!(tables::malcev().condition_home().unwrap());
        assert!(!tables::bicyclic().condition_home().unwrap());
        let b = tables::bicyclic().breadth().unwrap();
        assert_eq!(b.home_violation().as_deref(), Some("p=4 exceeds 3"));
        assert_eq!(b.warning(), None);
    }

    #[test]
    fn breadth_refuses_non_idempotent_tables() {
        let mut t = NormTable::identity(Alphabet::new(["a", "b"]).unwrap(), None).unwrap();
        t.set_named("a", "b", "b", "a").unwrap();
        t.set_named("b", "a", "a", "b").unwrap();
        assert!(matches!(t.breadth(), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn unit_condition() {
        assert!(tables::bicyclic().check_unit_condition().unwrap());
        assert!(tables::plactic2().check_unit_condition().unwrap());
        let mut broken = tables::bicyclic();
        broken.set_named("a", "1", "a", "1").unwrap();
        assert!(!broken.check_unit_condition().unwrap());
        let free = NormTable::identity(Alphabet::new(["a", "b"]).unwrap(), None).unwrap();
        assert_eq!(free.check_unit_condition(), Err(Error::MissingUnit));
    }

    #[test]
    fn adjoin_unit_to_free_table() {
        let free = NormTable::identity(Alphabet::new(["a", "b"]).unwrap(), None).unwrap();
        let t = free.adjoin_unit().unwrap();
        assert_eq!(t.size(), 3);
        assert_eq!(t.alphabet().names(), ["1", "a", "b"]);
        let al = t.alphabet();
        let (one, a) = (al.lookup("1").unwrap(), al.lookup("a").unwrap());
        assert_eq!(t.entry(a, one), (one, a));
        assert_eq!(t.entry(one, a), (one, a));
        assert!(t.check_unit_condition().unwrap());
        assert!(matches!(t.adjoin_unit(), Err(Error::UnitAlreadyPresent(u)) if u == "1"));
    }

    #[test]
    fn adjoin_unit_rebuilds_plactic() {
        // `b a -> 1 ba` mentions the unit, so only the other two rules exist
        // before adjoining it.
        let full = tables::plactic2();
        let mut stripped =
            NormTable::identity(Alphabet::new(["a", "b", "ba"]).unwrap(), None).unwrap();
        stripped.set_named("ba", "a", "a", "ba").unwrap();
        stripped.set_named("ba", "b", "b", "ba").unwrap();
        let mut rebuilt = stripped.adjoin_unit().unwrap();
        rebuilt.set_named("b", "a", "1", "ba").unwrap();
        assert_eq!(rebuilt, full);
        assert!(rebuilt.verify_normalisation(4).is_empty());
    }
}
