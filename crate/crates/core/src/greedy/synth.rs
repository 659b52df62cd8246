use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use crate::error::{Error, Result};
use crate::greedy::{GarsideFamily, PresentedMonoid};
use crate::norm::NormTable;
use crate::word::{Symbol, Word};

/// Caches relation classes under one uniform length bound.
struct Oracle<'m> {
    monoid: &'m PresentedMonoid,
    bound: usize,
    classes: HashMap<Word, Rc<HashSet<Word>>>,
}

impl<'m> Oracle<'m> {
    fn new(monoid: &'m PresentedMonoid, longest: usize) -> Self {
        Oracle {
            monoid,
            bound: longest + monoid.slack,
            classes: HashMap::new(),
        }
    }

    fn class(&mut self, w: &Word) -> Result<Rc<HashSet<Word>>> {
        if let Some(c) = self.classes.get(w) {
            return Ok(c.clone());
        }
        let bound = if self.monoid.is_homogeneous() {
            w.len()
        } else {
            self.bound.max(w.len())
        };
        let class = Rc::new(self.monoid.class(w, bound)?);
        for v in class.iter() {
            self.classes.insert(v.clone(), class.clone());
        }
        Ok(class)
    }

    fn canon(&mut self, w: &Word) -> Result<Word> {
        let class = self.class(w)?;
        Ok(class
            .iter()
            .min_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)))
            .cloned()
            .unwrap_or_else(Word::empty))
    }

    /// `d` right-divides `e`: some word of the class of `e` ends with `d`.
    fn right_divides(&mut self, d: &Word, e: &Word) -> Result<bool> {
        let class = self.class(e)?;
        Ok(class.iter().any(|z| z.letters().ends_with(d.letters())))
    }
}

fn render(monoid: &PresentedMonoid, w: &Word) -> String {
    if w.is_empty() {
        "EPS".to_string()
    } else {
        monoid.atoms().render(w)
    }
}

/// Family elements `d` admitting some family `c` with `c d = e`.
pub fn right_divisors(
    monoid: &PresentedMonoid,
    e: &Word,
    family: &GarsideFamily,
) -> Result<Vec<usize>> {
    let longest = e.len().max(2 * family.max_rep_len());
    let mut oracle = Oracle::new(monoid, longest);
    let class = oracle.class(e)?;
    Ok((0..family.len())
        .filter(|&d| {
            family
                .reps()
                .iter()
                .any(|c| class.contains(&c.concat(family.rep(d))))
        })
        .collect())
}

/// Builds the normalisation table sending `x y` to the factorisation `c d`
/// of `xy` whose right factor `d` is the largest family element, for the
/// right-divisibility order, among all family factorisations.
pub fn greedy_table(monoid: &PresentedMonoid, family: &GarsideFamily) -> Result<NormTable> {
    let mut oracle = Oracle::new(monoid, 2 * family.max_rep_len());
    let n = family.len();
    let mut entries = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let e = family.rep(x).concat(family.rep(y));
            let pair = format!("{} {}", family.name(x), family.name(y));
            let class = oracle.class(&e)?;
            let cands: Vec<(usize, usize)> = (0..n)
                .flat_map(|c| (0..n).map(move |d| (c, d)))
                .filter(|&(c, d)| class.contains(&family.rep(c).concat(family.rep(d))))
                .collect();
            if cands.is_empty() {
                return Err(Error::NoFactorisation(pair));
            }
            let ds: BTreeSet<usize> = cands.iter().map(|&(_, d)| d).collect();
            let mut maximal = Vec::new();
            for &d in &ds {
                let mut top = true;
                for &d2 in &ds {
                    if d2 != d
                        && oracle.right_divides(family.rep(d), family.rep(d2))?
                        && !oracle.right_divides(family.rep(d2), family.rep(d))?
                    {
                        top = false;
                        break;
                    }
                }
                if top {
                    maximal.push(d);
                }
            }
            let names = |ix: &mut dyn Iterator<Item = usize>| {
                ix.map(|i| family.name(i).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let [d] = maximal[..] else {
                return Err(Error::AmbiguousMaximum {
                    word: pair,
                    detail: format!("maximal right factors {}", names(&mut maximal.into_iter())),
                });
            };
            let cs: BTreeSet<usize> = cands.iter().filter(|p| p.1 == d).map(|p| p.0).collect();
            if cs.len() != 1 {
                return Err(Error::AmbiguousMaximum {
                    word: pair,
                    detail: format!(
                        "left factors {} all pair with {}",
                        names(&mut cs.into_iter()),
                        family.name(d)
                    ),
                });
            }
            let c = cs.into_iter().next().unwrap_or(d);
            entries.push((Symbol::from(c), Symbol::from(d)));
        }
    }
    let table = NormTable::from_parts(
        family.names().clone(),
        family.unit().map(Symbol::from),
        entries,
    );
    table.check_idempotent()?;
    Ok(table)
}

/// A way in which a family fails, or may fail, to be closed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureIssue {
    MissingLeftDivisor {
        element: String,
        divisor: String,
    },
    MissingLeftMcm {
        left: String,
        right: String,
        mcm: String,
    },
    /// No common right-multiple was found within the searched lengths.
    NoCommonMultiple {
        left: String,
        right: String,
    },
}

impl ClosureIssue {
    /// True for definite failures, false for inconclusive findings.
    pub fn is_failure(&self) -> bool {
        !matches!(self, ClosureIssue::NoCommonMultiple { .. })
    }
}

impl fmt::Display for ClosureIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureIssue::MissingLeftDivisor { element, divisor } => {
                write!(f, "missing left divisor: `{divisor}` divides `{element}`")
            }
            ClosureIssue::MissingLeftMcm { left, right, mcm } => {
                write!(f, "missing left-mcm: `{mcm}` of `{left}` and `{right}`")
            }
            ClosureIssue::NoCommonMultiple { left, right } => {
                write!(
                    f,
                    "unknown: no common right-multiple of `{left}` and `{right}` found"
                )
            }
        }
    }
}

/// Findings of [`check_family_closure`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FamilyReport {
    pub issues: Vec<ClosureIssue>,
}

impl FamilyReport {
    pub fn is_closed(&self) -> bool {
        !self.issues.iter().any(ClosureIssue::is_failure)
    }
}

/// Checks closure of the family under left-divisors and under left-mcms
/// (minimal common right-multiples for left-divisibility), looking at
/// elements represented by atom words no longer than the longest family
/// representative.
pub fn check_family_closure(
    monoid: &PresentedMonoid,
    family: &GarsideFamily,
) -> Result<FamilyReport> {
    let max = family.max_rep_len();
    let mut oracle = Oracle::new(monoid, 2 * max);
    let mut report = FamilyReport::default();

    let mut members: HashSet<Word> = HashSet::new();
    for rep in family.reps() {
        members.insert(oracle.canon(rep)?);
    }
    if !members.contains(&Word::empty()) {
        report.issues.push(ClosureIssue::MissingLeftDivisor {
            element: family.name(0).to_string(),
            divisor: "EPS".into(),
        });
    }

    for (x, rep) in family.reps().iter().enumerate() {
        let class = oracle.class(rep)?;
        let mut prefixes: BTreeSet<Word> = BTreeSet::new();
        for z in class.iter() {
            for k in 1..z.len().min(max + 1) {
                prefixes.insert(Word(z.letters()[..k].to_vec()));
            }
        }
        let mut reported = HashSet::new();
        for p in prefixes {
            let c = oracle.canon(&p)?;
            if !members.contains(&c) && reported.insert(c.clone()) {
                report.issues.push(ClosureIssue::MissingLeftDivisor {
                    element: family.name(x).to_string(),
                    divisor: render(monoid, &c),
                });
            }
        }
    }

    let mut elements: Vec<Word> = Vec::new();
    let mut seen = HashSet::new();
    for len in 0..=max {
        for w in monoid.atoms().words_of_length(len) {
            let c = oracle.canon(&w)?;
            if seen.insert(c.clone()) {
                elements.push(c);
            }
        }
    }
    let mut ldiv: HashMap<Word, HashSet<Word>> = HashMap::new();
    for w in &elements {
        let class = oracle.class(w)?;
        let mut divisors = HashSet::new();
        for z in class.iter() {
            for k in 0..=z.len().min(max) {
                divisors.insert(oracle.canon(&Word(z.letters()[..k].to_vec()))?);
            }
        }
        ldiv.insert(w.clone(), divisors);
    }

    let mut reps: Vec<(usize, Word)> = Vec::new();
    for (i, rep) in family.reps().iter().enumerate() {
        let c = oracle.canon(rep)?;
        if !reps.iter().any(|(_, r)| *r == c) {
            reps.push((i, c));
        }
    }
    for (a, (i, x)) in reps.iter().enumerate() {
        for (j, y) in &reps[a + 1..] {
            let common: Vec<&Word> = elements
                .iter()
                .filter(|w| ldiv[*w].contains(x) && ldiv[*w].contains(y))
                .collect();
            let (left, right) = (family.name(*i).to_string(), family.name(*j).to_string());
            if common.is_empty() {
                report
                    .issues
                    .push(ClosureIssue::NoCommonMultiple { left, right });
                continue;
            }
            for w in &common {
                let minimal = !common.iter().any(|v| v != w && ldiv[*w].contains(*v));
                if minimal && !members.contains(*w) {
                    report.issues.push(ClosureIssue::MissingLeftMcm {
                        left: left.clone(),
                        right: right.clone(),
                        mcm: render(monoid, w),
                    });
                }
            }
        }
    }
    Ok(report)
}
