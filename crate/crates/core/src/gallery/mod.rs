//! Named worked examples with their expected properties attached.

pub mod machines;
pub mod tables;

use crate::error::{Error, Result};
use crate::greedy::{greedy_table, parse_presentation, GarsideFamily, PresentedMonoid};
use crate::machines::MealyMachine;
use crate::norm::NormTable;

/// Fixed entry names. `finite:Z/<n>` entries exist for every `n >= 1`.
pub const NAMES: [&str; 8] = [
    "bicyclic", "bs10", "bs32", "plactic2", "malcev", "braid3", "div3", "mul2",
];

/// The fixed entries plus the small cyclic groups.
pub fn all_names() -> Vec<String> {
    let mut names: Vec<String> = NAMES.iter().map(|s| s.to_string()).collect();
    names.extend((1..=3).map(|n| format!("finite:Z/{n}")));
    names
}

pub const BS10: &str = "\
atoms a b
rel a b = a
family 1 = EPS
family a = a
family b = b
";

pub const BS32: &str = "\
atoms a b
rel a b b b = b b a
family 1 = EPS
family a = a
family b = b
family ab = a b
family bb = b b
family abb = a b b
family abbb = a b b b
family abbbb = a b b b b
";

pub const BRAID3: &str = "\
atoms a b
rel a b a = b a b
family 1 = EPS
family a = a
family b = b
family ab = a b
family ba = b a
family D = a b a
";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Payload {
    Table(NormTable),
    Machine(MealyMachine),
    Presented {
        monoid: PresentedMonoid,
        family: GarsideFamily,
        table: NormTable,
    },
}

/// Published values an entry is expected to reproduce. Words are written
/// over the entry's table alphabet, or over the states of a raw machine.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Expectations {
    pub breadth: Option<(usize, usize)>,
    pub home: Option<bool>,
    /// `(u, v, equal)`: whether the state words `u` and `v` act identically.
    pub actions: Vec<(&'static str, &'static str, bool)>,
    /// `[from, input, output, to]` transitions of the entry's machine.
    pub transitions: Vec<[String; 4]>,
    /// `[a, b, c, d]` table entries `a b -> c d`.
    pub entries: Vec<[&'static str; 4]>,
    pub states: Option<usize>,
    /// Gallery name of the dual machine.
    pub dual: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryEntry {
    pub name: String,
    pub payload: Payload,
    pub expectations: Expectations,
}

impl GalleryEntry {
    pub fn table(&self) -> Option<&NormTable> {
        match &self.payload {
            Payload::Table(t) | Payload::Presented { table: t, .. } => Some(t),
            Payload::Machine(_) => None,
        }
    }

    /// The raw machine, or the Mealy machine of the table.
    pub fn machine(&self) -> Result<MealyMachine> {
        match &self.payload {
            Payload::Machine(m) => Ok(m.clone()),
            Payload::Table(t) | Payload::Presented { table: t, .. } => t.build_mealy(),
        }
    }

    /// Evaluates every expectation, returning a description of each miss.
    pub fn check(&self) -> Result<Vec<String>> {
        let ex = &self.expectations;
        let mut misses = Vec::new();
        if let Some(t) = self.table() {
            if let Some(want) = ex.breadth {
                let got = t.breadth()?;
                match (got.d.finite(), got.p.finite()) {
                    (Some(d), Some(p)) if (d, p) == want => {}
                    _ => misses.push(format!(
                        "breadth is ({}, {}), expected ({}, {})",
                        got.d, got.p, want.0, want.1
                    )),
                }
            }
            if let Some(want) = ex.home {
                let got = t.condition_home()?;
                if got != want {
                    misses.push(format!("condition home is {got}, expected {want}"));
                }
            }
            for [a, b, c, d] in &ex.entries {
                let al = t.alphabet();
                let (x, y) = t.entry(al.lookup(a)?, al.lookup(b)?);
                if (al.name(x), al.name(y)) != (*c, *d) {
                    misses.push(format!(
                        "entry {a} {b} is {} {}, expected {c} {d}",
                        al.name(x),
                        al.name(y)
                    ));
                }
            }
        }
        let m = self.machine()?;
        if let Some(n) = ex.states {
            if m.states().len() != n {
                misses.push(format!("{} states, expected {n}", m.states().len()));
            }
        }
        for [from, input, output, to] in &ex.transitions {
            let (next, out) = m.step(m.states().lookup(from)?, m.letters().lookup(input)?);
            if (m.letters().name(out), m.states().name(next)) != (output.as_str(), to.as_str()) {
                misses.push(format!(
                    "transition {from} --{input}|{}--> {}, expected {from} --{input}|{output}--> {to}",
                    m.letters().name(out),
                    m.states().name(next)
                ));
            }
        }
        for &(u, v, want) in &ex.actions {
            let got = m.action_equal(&m.states().parse_word(u)?, &m.states().parse_word(v)?)?;
            if got != want {
                misses.push(format!(
                    "action of `{u}` = action of `{v}` is {got}, expected {want}"
                ));
            }
        }
        if let Some(other) = ex.dual {
            if m.dual() != gallery(other)?.machine()? {
                misses.push(format!("dual is not {other}"));
            }
        }
        Ok(misses)
    }
}

fn transitions(list: &[[&str; 4]]) -> Vec<[String; 4]> {
    list.iter().map(|t| t.map(String::from)).collect()
}

fn presented(name: &str, text: &str, expectations: Expectations) -> Result<GalleryEntry> {
    let (monoid, family) = parse_presentation(text)?;
    let table = greedy_table(&monoid, &family)?;
    Ok(GalleryEntry {
        name: name.to_string(),
        payload: Payload::Presented {
            monoid,
            family,
            table,
        },
        expectations,
    })
}

fn finite(name: &str, suffix: &str) -> Result<GalleryEntry> {
    let n: usize = suffix
        .strip_prefix("Z/")
        .and_then(|n| n.parse().ok())
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    Ok(GalleryEntry {
        name: name.to_string(),
        payload: Payload::Table(tables::cyclic(n)),
        expectations: Expectations {
            breadth: Some(if n == 1 { (0, 0) } else { (3, 2) }),
            home: Some(true),
            states: Some(n),
            ..Default::default()
        },
    })
}

/// Looks up an entry by name.
pub fn gallery(name: &str) -> Result<GalleryEntry> {
    if let Some(suffix) = name.strip_prefix("finite:") {
        return finite(name, suffix);
    }
    let table = |t: NormTable, expectations| GalleryEntry {
        name: name.to_string(),
        payload: Payload::Table(t),
        expectations,
    };
    let machine = |m: MealyMachine, expectations| GalleryEntry {
        name: name.to_string(),
        payload: Payload::Machine(m),
        expectations,
    };
    let entry = match name {
        "bicyclic" => table(
            tables::bicyclic(),
            Expectations {
                breadth: Some((3, 4)),
                home: Some(false),
                actions: vec![("a b", "1 1", false)],
                ..Default::default()
            },
        ),
        "plactic2" => table(
            tables::plactic2(),
            Expectations {
                breadth: Some((3, 3)),
                home: Some(true),
                actions: vec![("a b a", "b a a", true), ("b a b", "b b a", true)],
                ..Default::default()
            },
        ),
        "malcev" => table(
            tables::malcev(),
            Expectations {
                breadth: Some((3, 3)),
                home: Some(true),
                actions: vec![("a b", "c d", true), ("a d'", "c b'", false)],
                ..Default::default()
            },
        ),
        "bs10" => {
            let mut t = vec![
                ["b", "a", "a", "1"],
                ["a", "b", "a", "b"],
                ["a", "1", "a", "1"],
                ["b", "1", "b", "1"],
            ];
            t.extend(["1", "a", "b"].map(|x| ["1", x, x, "1"]));
            presented(
                name,
                BS10,
                Expectations {
                    home: Some(true),
                    entries: vec![["a", "b", "1", "a"]],
                    transitions: transitions(&t),
                    ..Default::default()
                },
            )?
        }
        "bs32" => presented(
            name,
            BS32,
            Expectations {
                home: Some(true),
                states: Some(8),
                ..Default::default()
            },
        )?,
        "braid3" => presented(
            name,
            BRAID3,
            Expectations {
                home: Some(true),
                states: Some(6),
                actions: vec![("a b a", "b a b", true), ("a b", "b a", false)],
                ..Default::default()
            },
        )?,
        "div3" => machine(
            machines::div3(),
            Expectations {
                states: Some(3),
                transitions: transitions(&[["0", "1", "0", "1"], ["1", "0", "0", "2"]]),
                dual: Some("mul2"),
                ..Default::default()
            },
        ),
        "mul2" => machine(
            machines::mul2(),
            Expectations {
                states: Some(2),
                dual: Some("div3"),
                ..Default::default()
            },
        ),
        _ => return Err(Error::UnknownName(name.to_string())),
    };
    Ok(entry)
}
