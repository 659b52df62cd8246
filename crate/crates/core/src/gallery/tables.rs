//! Hand-written normalisation tables.

use crate::norm::NormTable;
use crate::word::Alphabet;

fn table(names: &[&str], rules: &[[&str; 4]]) -> NormTable {
    let alphabet = Alphabet::new(names.iter().copied()).expect("gallery alphabet");
    let mut t = NormTable::identity(alphabet, Some("1")).expect("gallery unit");
    for [a, b, c, d] in rules {
        t.set_named(a, b, c, d).expect("gallery rule");
    }
    t
}

fn unit_rules<'a>(names: &[&'a str]) -> Vec<[&'a str; 4]> {
    names
        .iter()
        .filter(|&&x| x != "1")
        .map(|&x| [x, "1", "1", x])
        .collect()
}

/// The bicyclic monoid `<a, b | ab = 1>`.
pub fn bicyclic() -> NormTable {
    table(
        &["1", "a", "b"],
        &[
            ["a", "b", "1", "1"],
            ["a", "1", "1", "a"],
            ["b", "1", "1", "b"],
        ],
    )
}

/// The cyclic group of order `n` on `1, g, g2, ...`, normalising `x y` to
/// `1 (xy)`.
pub fn cyclic(n: usize) -> NormTable {
    assert!(n >= 1, "cyclic group of order 0");
    let names: Vec<String> = (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "g".to_string(),
            k => format!("g{k}"),
        })
        .collect();
    let alphabet = Alphabet::new(names.iter().cloned()).expect("cyclic alphabet");
    let mut t = NormTable::identity(alphabet, Some("1")).expect("cyclic unit");
    for x in 0..n {
        for y in 0..n {
            t.set_named(&names[x], &names[y], "1", &names[(x + y) % n])
                .expect("cyclic rule");
        }
    }
    t
}

/// The plactic monoid on two letters, over the columns `a`, `b`, `ba`.
pub fn plactic2() -> NormTable {
    let names = ["1", "a", "b", "ba"];
    let mut rules = vec![
        ["b", "a", "1", "ba"],
        ["ba", "a", "a", "ba"],
        ["ba", "b", "b", "ba"],
    ];
    rules.extend(unit_rules(&names));
    table(&names, &rules)
}

/// Malcev's cancellative monoid that does not embed in a group.
pub fn malcev() -> NormTable {
    let names = ["1", "a", "b", "c", "d", "a'", "b'", "c'", "d'"];
    let mut rules = vec![
        ["a", "b", "c", "d"],
        ["a'", "b'", "c'", "d'"],
        ["a'", "d", "c'", "b"],
    ];
    rules.extend(unit_rules(&names));
    table(&names, &rules)
}
