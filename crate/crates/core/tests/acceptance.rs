//! Acceptance criteria, one line of output per criterion.
//!
//! Runs without the libtest harness so that every verdict is printed even
//! when all criteria pass.

use std::collections::HashMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use garnorm::gallery::{all_names, gallery, machines};
use garnorm::{MealyMachine, NormTable, Symbol, Word};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn table(name: &str) -> NormTable {
    gallery(name).unwrap().table().unwrap().clone()
}

fn word(t: &NormTable, s: &str) -> Word {
    t.alphabet().parse_word(s).unwrap()
}

fn gallery_tables() -> Vec<(String, NormTable)> {
    all_names()
        .into_iter()
        .filter_map(|n| gallery(&n).unwrap().table().cloned().map(|t| (n, t)))
        .collect()
}

/// Tables whose breadth satisfies the home condition and which have a unit
/// satisfying the unit condition.
fn home_unit_tables() -> Vec<(String, NormTable)> {
    gallery_tables()
        .into_iter()
        .filter(|(_, t)| {
            t.unit().is_some() && t.condition_home().unwrap() && t.check_unit_condition().unwrap()
        })
        .collect()
}

fn breadth_of(name: &str) -> Option<(usize, usize)> {
    table(name).breadth().unwrap().as_pair()
}

fn bicyclic_breadth_and_home() -> Outcome {
    let t = table("bicyclic");
    ensure!(
        breadth_of("bicyclic") == Some((3, 4)),
        "breadth {:?}",
        breadth_of("bicyclic")
    );
    ensure!(!t.condition_home().unwrap(), "home condition holds");
    Ok(())
}

fn gallery_breadths() -> Outcome {
    for (name, want) in [
        ("plactic2", (3, 3)),
        ("malcev", (3, 3)),
        ("finite:Z/2", (3, 2)),
        ("finite:Z/3", (3, 2)),
    ] {
        let got = breadth_of(name);
        ensure!(
            got == Some(want),
            "{name}: breadth {got:?}, expected {want:?}"
        );
    }
    Ok(())
}

fn bicyclic_ab_sends_letters_to_unit() -> Outcome {
    let t = table("bicyclic");
    let m = t.build_mealy().unwrap();
    let ab = word(&t, "a b");
    let one = t.alphabet().lookup("1").unwrap();
    for x in ["a", "b"] {
        let x = t.alphabet().lookup(x).unwrap();
        for w in std::iter::once(Word::empty()).chain(t.alphabet().words_up_to(4)) {
            let input = Word(vec![x]).concat(&w);
            let out = m.run_word(&ab, &input).unwrap();
            ensure!(
                out.0[0] == one,
                "first letter of ab acting on {input} is {:?}",
                out.0[0]
            );
        }
    }
    ensure!(
        !m.action_equal(&ab, &word(&t, "1 1")).unwrap(),
        "ab acts like 11"
    );
    Ok(())
}

fn value(digits: &Word, base: usize) -> usize {
    digits.iter().fold(0, |acc, d| acc * base + d.index())
}

fn division_by_three() -> Outcome {
    let m = machines::div3();
    let zero = m.states().lookup("0").unwrap();
    let mut cases = 0;
    for u in m.letters().words_up_to(12) {
        let (out, fin) = m.run(zero, &u).unwrap();
        let lhs = value(&u, 2);
        let rhs = 3 * value(&out, 2) + fin.index();
        ensure!(lhs == rhs, "u = {u}: {lhs} != {rhs}");
        cases += 1;
    }
    ensure!(cases == 8190, "{cases} cases");
    Ok(())
}

fn duality() -> Outcome {
    ensure!(
        machines::div3().dual() == machines::mul2(),
        "dual(div3) != mul2"
    );
    ensure!(
        machines::mul2().dual() == machines::div3(),
        "dual(mul2) != div3"
    );
    let mut all: Vec<(String, MealyMachine)> = Vec::new();
    for name in all_names() {
        let entry = gallery(&name).unwrap();
        all.push((name.clone(), entry.machine().unwrap()));
        if let Some(t) = entry.table() {
            all.push((format!("{name} (thurston)"), t.build_thurston().unwrap()));
        }
    }
    for (name, m) in all {
        ensure!(m.dual().dual() == m, "{name}: dual of dual differs");
    }
    Ok(())
}

fn seven_ninths_in_binary() -> Outcome {
    let m = machines::mul2();
    let w = m.letters().parse_compact("12").unwrap();
    let n = m
        .numeration_iterate(m.states().lookup("0").unwrap(), &w, 6)
        .unwrap();
    let collected = m.states().render_compact(&n.collected);
    ensure!(collected == "110001", "collected {collected}");
    ensure!(
        n.trace.last() == Some(&w),
        "working word ends at {:?}",
        n.trace.last()
    );
    ensure!(n.cycle == Some((0, 6)), "cycle {:?}", n.cycle);
    Ok(())
}

/// All state words of length 1..=max induce pairwise distinct maps.
fn check_free(m: &MealyMachine, max: usize, expected: &[usize]) -> Outcome {
    let growth = m.growth(max).unwrap();
    ensure!(
        growth == expected,
        "growth {growth:?}, expected {expected:?}"
    );
    let words: Vec<Word> = m.states().words_up_to(max).collect();
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            if u.len() != v.len() {
                ensure!(!m.action_equal(u, v).unwrap(), "{u} and {v} act alike");
            }
        }
    }
    Ok(())
}

fn free_semigroups() -> Outcome {
    check_free(&machines::div3(), 5, &[3, 9, 27, 81, 243])?;
    let total: usize = [3, 9, 27, 81, 243].iter().sum();
    ensure!(total == 363, "{total}");
    check_free(&machines::mul2(), 5, &[2, 4, 8, 16, 32])
}

fn actions_match_normal_forms() -> Outcome {
    for (name, t) in gallery_tables() {
        ensure!(
            t.build_mealy().unwrap().dual() == t.build_thurston().unwrap(),
            "{name}: dual of the Mealy machine is not the Thurston transducer"
        );
    }
    let tables = home_unit_tables();
    let names: Vec<&str> = tables.iter().map(|(n, _)| n.as_str()).collect();
    for want in ["bs10", "bs32", "plactic2", "malcev", "braid3", "finite:Z/2"] {
        ensure!(
            names.contains(&want),
            "{want} lacks the home or unit condition"
        );
    }
    for (name, t) in &tables {
        let m = t.build_mealy().unwrap();
        let mut nf = t.normalizer();
        for len in 1..=4 {
            let power = m.power(len).unwrap();
            let part = power.minimize();
            let words: Vec<Word> = t.alphabet().words_of_length(len).collect();
            let mut class_to_nf: HashMap<usize, Word> = HashMap::new();
            let mut nf_to_class: HashMap<Word, (usize, Word)> = HashMap::new();
            for (k, u) in words.iter().enumerate() {
                let n = nf.normalize(u).unwrap();
                let c = part.class_of(Symbol::from(k));
                if let Some(prev) = class_to_nf.insert(c, n.clone()) {
                    ensure!(
                        prev == n,
                        "{name}: {u} acts like a word with another normal form"
                    );
                }
                match nf_to_class.get(&n) {
                    Some((c2, rep)) => {
                        ensure!(
                            *c2 == c,
                            "{name}: {u} and {rep} share a normal form but act differently"
                        );
                        ensure!(
                            m.action_equal(rep, u).unwrap(),
                            "{name}: action_equal({rep}, {u}) is false"
                        );
                    }
                    None => {
                        nf_to_class.insert(n, (c, u.clone()));
                    }
                }
            }
            let reps: Vec<&Word> = nf_to_class.values().map(|(_, r)| r).collect();
            if reps.len() <= 400 {
                for (i, u) in reps.iter().enumerate() {
                    for v in &reps[i + 1..] {
                        ensure!(
                            !m.action_equal(u, v).unwrap(),
                            "{name}: {u} and {v} act alike"
                        );
                    }
                }
            }
        }
    }
    Ok(())
}

fn padding_recovers_normal_forms() -> Outcome {
    for (name, t) in home_unit_tables() {
        let m = t.build_mealy().unwrap();
        let one = t.unit().unwrap();
        let mut nf = t.normalizer();
        for u in std::iter::once(Word::empty()).chain(t.alphabet().words_up_to(4)) {
            let normal = if u.is_empty() {
                Word::empty()
            } else {
                nf.normalize(&u).unwrap()
            };
            for n in u.len()..=6 {
                let got = m.padding_normal_form(one, &u, n).unwrap();
                let want = Word::repeat(one, n - u.len()).concat(&normal);
                ensure!(got == want, "{name}: u = {u}, n = {n}: {got} != {want}");
            }
        }
    }
    Ok(())
}

fn greedy_bs10() -> Outcome {
    let entry = gallery("bs10").unwrap();
    let t = entry.table().unwrap();
    let al = t.alphabet();
    let s = |n: &str| al.lookup(n).unwrap();
    ensure!(
        t.entry(s("a"), s("b")) == (s("1"), s("a")),
        "entry a b is {:?}",
        t.entry(s("a"), s("b"))
    );
    let m = t.build_mealy().unwrap();
    let mut want = vec![
        ("b", "a", "a", "1"),
        ("a", "b", "a", "b"),
        ("a", "1", "a", "1"),
        ("b", "1", "b", "1"),
    ];
    want.extend(["1", "a", "b"].map(|x| ("1", x, x, "1")));
    for (from, input, output, to) in want {
        let got = m.step(s(from), s(input));
        ensure!(
            got == (s(to), s(output)),
            "{from} --{input}|{}--> {}, expected {from} --{input}|{output}--> {to}",
            al.name(got.1),
            al.name(got.0)
        );
    }
    ensure!(entry.check().unwrap().is_empty(), "{:?}", entry.check());
    Ok(())
}

fn greedy_tables_are_home() -> Outcome {
    for name in ["braid3", "bs32"] {
        let t = table(name);
        ensure!(
            t.condition_home().unwrap(),
            "{name}: breadth {:?}",
            t.breadth().unwrap().as_pair()
        );
    }
    let t = table("braid3");
    let m = t.build_mealy().unwrap();
    ensure!(
        m.action_equal(&word(&t, "a b a"), &word(&t, "b a b"))
            .unwrap(),
        "aba and bab differ"
    );
    Ok(())
}

fn derivation_lengths() -> Outcome {
    for (name, bound) in [
        (
            "plactic2",
            (|p: usize| p * (p - 1) / 2) as fn(usize) -> usize,
        ),
        ("bicyclic", |p: usize| (1 << p) - p - 1),
    ] {
        let t = table(name);
        for w in t.alphabet().words_up_to(6) {
            let n = t.max_derivation_length(&w, 1_000_000).unwrap();
            ensure!(
                n <= bound(w.len()),
                "{name}: {w} has a derivation of length {n}"
            );
        }
    }
    Ok(())
}

fn malcev_witness() -> Outcome {
    let t = table("malcev");
    let m = t.build_mealy().unwrap();
    ensure!(
        !m.action_equal(&word(&t, "a d'"), &word(&t, "c b'"))
            .unwrap(),
        "a d' acts like c b'"
    );
    Ok(())
}

fn thurston_agrees_with_normalize() -> Outcome {
    for (name, t) in gallery_tables() {
        let th = t.build_thurston().unwrap();
        let g = t.alphabet().len();
        let expected: usize = (1..=6).map(|k| g.pow(k)).sum();
        let mut seen = 0;
        for w in t.alphabet().words_up_to(6) {
            seen += 1;
            let want = t.normalize(&w).map_err(|e| format!("{name}: {w}: {e}"))?;
            let got = th
                .thurston_normalize_default(&w)
                .map_err(|e| format!("{name}: {w}: {e}"))?;
            ensure!(
                got == want,
                "{name}: {w}: thurston gives {got}, rewriting gives {want}"
            );
        }
        ensure!(
            seen == expected,
            "{name}: checked {seen} words, expected {expected}"
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 14] = [
        (
            "bicyclic breadth is (3,4) and the home condition fails",
            bicyclic_breadth_and_home,
        ),
        (
            "plactic2, malcev, Z/2 and Z/3 have the expected breadths",
            gallery_breadths,
        ),
        (
            "in the bicyclic machine ab sends every letter to 1 and differs from 11",
            bicyclic_ab_sends_letters_to_unit,
        ),
        (
            "div3 divides every binary word of length <= 12 by three",
            division_by_three,
        ),
        (
            "dual(div3) = mul2 and dual is an involution on every gallery machine",
            duality,
        ),
        (
            "iterating mul2 on 12 collects 110001 with period 6",
            seven_ninths_in_binary,
        ),
        (
            "div3 and mul2 generate free semigroups up to length 5",
            free_semigroups,
        ),
        (
            "actions agree with normal forms for words of length <= 4",
            actions_match_normal_forms,
        ),
        (
            "running on padding recovers normal forms",
            padding_recovers_normal_forms,
        ),
        ("greedy table and machine of bs10", greedy_bs10),
        (
            "greedy tables of braid3 and bs32 satisfy the home condition",
            greedy_tables_are_home,
        ),
        (
            "derivation lengths of plactic2 and bicyclic stay within their bounds",
            derivation_lengths,
        ),
        ("malcev: a d' and c b' act differently", malcev_witness),
        (
            "thurston sweeps agree with rewriting on words of length <= 6",
            thurston_agrees_with_normalize,
        ),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {title} ({secs:.2}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {title} ({secs:.2}s): {why}", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
