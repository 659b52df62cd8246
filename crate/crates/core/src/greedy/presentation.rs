use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::norm::{strip_comment, DEFAULT_NODE_BUDGET};
use crate::word::{Alphabet, Word};

pub const DEFAULT_LENGTH_SLACK: usize = 4;

/// A monoid given by atoms and relations between non-empty atom words,
/// together with the limits of the relation-closure search used to compare
/// words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedMonoid {
    atoms: Alphabet,
    relations: Vec<(Word, Word)>,
    pub budget: usize,
    /// How far beyond the longer input a search may grow words when some
    /// relation changes length.
    pub slack: usize,
}

impl PresentedMonoid {
    pub fn new(atoms: Alphabet, relations: Vec<(Word, Word)>) -> Result<Self> {
        for (l, r) in &relations {
            if l.is_empty() || r.is_empty() {
                return Err(Error::Invalid("relation sides must be non-empty".into()));
            }
            atoms.check(l)?;
            atoms.check(r)?;
        }
        Ok(PresentedMonoid {
            atoms,
            relations,
            budget: DEFAULT_NODE_BUDGET,
            slack: DEFAULT_LENGTH_SLACK,
        })
    }

    /// Convenience constructor from `"a b a = b a b"` style relation strings.
    pub fn from_strs(atoms: &[&str], relations: &[&str]) -> Result<Self> {
        let atoms = Alphabet::possibly_empty(atoms.iter().copied())?;
        let relations = relations
            .iter()
            .map(|r| {
                let (l, rhs) = r
                    .split_once('=')
                    .ok_or_else(|| Error::Invalid(format!("relation `{r}` has no `=`")))?;
                Ok((atoms.parse_word(l)?, atoms.parse_word(rhs)?))
            })
            .collect::<Result<Vec<_>>>()?;
        PresentedMonoid::new(atoms, relations)
    }

    pub fn atoms(&self) -> &Alphabet {
        &self.atoms
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    /// Every relation relates words of equal length.
    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|(l, r)| l.len() == r.len())
    }

    /// Words reachable from `w` by relation replacements in either direction,
    /// never exceeding `max_len` letters.
    pub fn class(&self, w: &Word, max_len: usize) -> Result<HashSet<Word>> {
        self.search(w, max_len, None).map(|(seen, _)| seen)
    }

    fn search(
        &self,
        w: &Word,
        max_len: usize,
        goal: Option<&Word>,
    ) -> Result<(HashSet<Word>, bool)> {
        self.atoms.check(w)?;
        let mut seen = HashSet::from([w.clone()]);
        if goal == Some(w) {
            return Ok((seen, true));
        }
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for (l, r) in &self.relations {
                for (from, to) in [(l, r), (r, l)] {
                    if x.len() < from.len() || x.len() - from.len() + to.len() > max_len {
                        continue;
                    }
                    let xs = x.letters();
                    for p in 0..=xs.len() - from.len() {
                        if xs[p..p + from.len()] != *from.letters() {
                            continue;
                        }
                        let mut y = Vec::with_capacity(xs.len() - from.len() + to.len());
                        y.extend_from_slice(&xs[..p]);
                        y.extend_from_slice(to.letters());
                        y.extend_from_slice(&xs[p + from.len()..]);
                        let y = Word(y);
                        if seen.contains(&y) {
                            continue;
                        }
                        if goal == Some(&y) {
                            seen.insert(y);
                            return Ok((seen, true));
                        }
                        seen.insert(y.clone());
                        if seen.len() > self.budget {
                            return Err(Error::budget(
                                self.budget,
                                format!("searching the class of `{}`", self.atoms.render(w)),
                            ));
                        }
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok((seen, false))
    }

    /// Length bound used when comparing words of the given lengths.
    pub fn bound_for(&self, len: usize) -> usize {
        if self.is_homogeneous() {
            len
        } else {
            len + self.slack
        }
    }

    /// Decides `u = v` by breadth-first closure of `u` under the relations.
    /// Running out of budget is an error, never a `false`.
    pub fn bounded_equal(&self, u: &Word, v: &Word) -> Result<bool> {
        self.atoms.check(v)?;
        if u == v {
            return Ok(true);
        }
        if self.is_homogeneous() && u.len() != v.len() {
            return Ok(false);
        }
        let bound = self.bound_for(u.len().max(v.len()));
        Ok(self.search(u, bound, Some(v))?.1)
    }
}

/// One element of a candidate Garside family: a name and an atom word
/// representing it. The empty word stands for the unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyElement {
    pub name: String,
    pub rep: Word,
}

/// A finite set of named monoid elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarsideFamily {
    names: Alphabet,
    reps: Vec<Word>,
}

impl GarsideFamily {
    pub fn new(elements: Vec<FamilyElement>) -> Result<Self> {
        let names = Alphabet::new(elements.iter().map(|e| e.name.clone()))?;
        let units = elements.iter().filter(|e| e.rep.is_empty()).count();
        if units > 1 {
            return Err(Error::Invalid(
                "at most one family element may be empty".into(),
            ));
        }
        Ok(GarsideFamily {
            names,
            reps: elements.into_iter().map(|e| e.rep).collect(),
        })
    }

    /// Builds a family from `(name, word)` pairs; `""` or `"EPS"` is the unit.
    pub fn from_strs(monoid: &PresentedMonoid, elements: &[(&str, &str)]) -> Result<Self> {
        let elements = elements
            .iter()
            .map(|&(name, rep)| {
                let rep = if rep.trim() == "EPS" {
                    Word::empty()
                } else {
                    monoid.atoms().parse_word(rep)?
                };
                Ok(FamilyElement {
                    name: name.to_string(),
                    rep,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        GarsideFamily::new(elements)
    }

    pub fn names(&self) -> &Alphabet {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep(&self, i: usize) -> &Word {
        &self.reps[i]
    }

    pub fn reps(&self) -> &[Word] {
        &self.reps
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names.names()[i]
    }

    pub fn unit(&self) -> Option<usize> {
        self.reps.iter().position(Word::is_empty)
    }

    pub fn max_rep_len(&self) -> usize {
        self.reps.iter().map(Word::len).max().unwrap_or(0)
    }
}

/// Parses the presentation format:
///
/// ```text
/// atoms a b
/// rel a b a = b a b
/// family 1 = EPS
/// family a = a
/// ```
pub fn parse_presentation(text: &str) -> Result<(PresentedMonoid, GarsideFamily)> {
    let mut atoms: Option<Alphabet> = None;
    let mut relations = Vec::new();
    let mut elements: Vec<FamilyElement> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = strip_comment(raw).trim();
        let Some((keyword, rest)) = line
            .split_once(char::is_whitespace)
            .or_else(|| (!line.is_empty()).then_some((line, "")))
        else {
            continue;
        };
        let err = |e: Error| Error::parse(line_no, e.to_string());
        match (keyword, atoms.as_ref()) {
            ("atoms", None) => {
                atoms = Some(Alphabet::possibly_empty(rest.split_whitespace()).map_err(err)?);
            }
            ("atoms", Some(_)) => return Err(Error::parse(line_no, "duplicate `atoms` line")),
            (_, None) => {
                return Err(Error::parse(
                    line_no,
                    "first non-comment line must be `atoms`",
                ))
            }
            ("rel", Some(al)) => {
                let (l, r) = rest
                    .split_once('=')
                    .ok_or_else(|| Error::parse(line_no, "expected `rel <word> = <word>`"))?;
                let (l, r) = (
                    al.parse_word(l).map_err(err)?,
                    al.parse_word(r).map_err(err)?,
                );
                if l.is_empty() || r.is_empty() {
                    return Err(Error::parse(line_no, "relation sides must be non-empty"));
                }
                relations.push((l, r));
            }
            ("family", Some(al)) => {
                let (name, rep) = rest.split_once('=').ok_or_else(|| {
                    Error::parse(line_no, "expected `family <name> = <word|EPS>`")
                })?;
                let name = name.trim();
                if name.split_whitespace().count() != 1 {
                    return Err(Error::parse(line_no, "family name must be one token"));
                }
                if elements.iter().any(|e| e.name == name) {
                    return Err(Error::parse(
                        line_no,
                        format!("duplicate family element `{name}`"),
                    ));
                }
                let rep = match rep.trim() {
                    "EPS" => Word::empty(),
                    "" => return Err(Error::parse(line_no, "empty word must be written EPS")),
                    w => al.parse_word(w).map_err(err)?,
                };
                elements.push(FamilyElement {
                    name: name.to_string(),
                    rep,
                });
            }
            (other, Some(_)) => {
                return Err(Error::parse(line_no, format!("unknown keyword `{other}`")))
            }
        }
    }
    let end = text.lines().count() + 1;
    let atoms = atoms.ok_or_else(|| Error::parse(end, "missing `atoms` line"))?;
    if elements.is_empty() {
        return Err(Error::parse(end, "no `family` lines"));
    }
    let monoid = PresentedMonoid::new(atoms, relations)?;
    let family = GarsideFamily::new(elements).map_err(|e| Error::parse(end, e.to_string()))?;
    Ok((monoid, family))
}

/// Canonical text form of a presentation and family.
pub fn presentation_to_text(monoid: &PresentedMonoid, family: &GarsideFamily) -> String {
    let al = monoid.atoms();
    let mut s = format!("atoms {}\n", al.names().join(" "));
    for (l, r) in monoid.relations() {
        s.push_str(&format!("rel {} = {}\n", al.render(l), al.render(r)));
    }
    for (i, rep) in family.reps().iter().enumerate() {
        let rep = if rep.is_empty() {
            "EPS".to_string()
        } else {
            al.render(rep)
        };
        s.push_str(&format!("family {} = {}\n", family.name(i), rep));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid() -> PresentedMonoid {
        PresentedMonoid::from_strs(&["a", "b"], &["a b a = b a b"]).unwrap()
    }

    #[test]
    fn braid_relation() {
        let m = braid();
        let w = |s: &str| m.atoms().parse_word(s).unwrap();
        assert!(m.bounded_equal(&w("a b a"), &w("b a b")).unwrap());
        assert!(m.bounded_equal(&w("a b a b"), &w("b a b b")).unwrap());
        assert!(!m.bounded_equal(&w("a b"), &w("b a")).unwrap());
        assert!(m.bounded_equal(&w("a"), &w("a")).unwrap());
        assert!(!m.bounded_equal(&w("a"), &w("a b")).unwrap());
    }

    #[test]
    fn non_homogeneous_relation() {
        let m = PresentedMonoid::from_strs(&["a", "b"], &["a b = a"]).unwrap();
        let w = |s: &str| m.atoms().parse_word(s).unwrap();
        assert!(m.bounded_equal(&w("a b"), &w("a")).unwrap());
        assert!(m.bounded_equal(&w("a b b b"), &w("a")).unwrap());
        assert!(!m.bounded_equal(&w("b a"), &w("a")).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let m = PresentedMonoid::from_strs(&["a", "b"], &["a b = b a"])
            .unwrap()
            .with_budget(5);
        let w = |s: &str| m.atoms().parse_word(s).unwrap();
        let err = m
            .bounded_equal(&w("a a a b b b"), &w("b b b a a a"))
            .unwrap_err();
        assert!(err.is_budget(), "{err}");
    }

    #[test]
    fn presentation_round_trip() {
        let text = "\
# three-strand braids
atoms a b
rel a b a = b a b
family 1 = EPS
family a = a
family b = b
family ab = a b
family ba = b a
family D = a b a
";
        let (m, f) = parse_presentation(text).unwrap();
        assert_eq!(m, braid());
        assert_eq!(f.len(), 6);
        assert_eq!(f.unit(), Some(0));
        assert_eq!(f.max_rep_len(), 3);
        let canon = presentation_to_text(&m, &f);
        let (m2, f2) = parse_presentation(&canon).unwrap();
        assert_eq!((m2, f2), (m, f));
        assert_eq!(
            canon,
            text.lines()
                .skip(1)
                .map(|l| format!("{l}\n"))
                .collect::<String>()
        );
    }

    #[test]
    fn presentation_errors() {
        assert!(matches!(
            parse_presentation("atoms a\nrel a = c\nfamily 1 = EPS\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_presentation("atoms a\nfamily 1 = EPS\nfamily 1 = a\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_presentation("family 1 = EPS\n").is_err());
        assert!(parse_presentation("atoms a\n").is_err());
    }
}
