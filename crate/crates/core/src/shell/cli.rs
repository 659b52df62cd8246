use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::gallery::{all_names, gallery, Payload};
use crate::greedy::{check_family_closure, presentation_to_text, right_divisors};
use crate::machines::MealyMachine;
use crate::norm::{Bound, DEFAULT_NODE_BUDGET};
use crate::shell::dot::export_dot;
use crate::shell::input::{self, load, parse_word, render, Input};
use crate::shell::report::{Report, Value};
use crate::word::Alphabet;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Quadratic normalisations and their Mealy automata.
///
/// Every TABLE, MACHINE or PRESENTATION argument is a file path or a
/// `gallery:<name>` pseudo-path. Words are space-separated symbol names in
/// one argument; over single-character alphabets they may be unspaced.
/// GARNORM_BUDGET overrides the search budget.
#[derive(Debug, Parser)]
#[command(name = "garnorm", version)]
pub struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Read and print words unspaced.
    #[arg(long, global = true)]
    pub compact: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Collect,
    Sweep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Table,
    Machine,
    Presentation,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Verify the normalisation axioms and the unit condition.
    Check {
        table: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Print the breadth (d, p) with witnesses.
    Breadth { table: String },
    /// Decide whether d <= 4 and p <= 3.
    Home { table: String },
    /// Normalise a word.
    Normalize { table: String, word: String },
    /// Emit the Mealy machine of a table.
    Mealy { table: String },
    /// Emit the Thurston transducer of a table.
    Thurston { table: String },
    /// Emit the dual of a machine.
    Dual { machine: String },
    /// Run a machine from a state on a word.
    Run {
        machine: String,
        state: String,
        word: String,
    },
    /// Feed a machine's output back into it repeatedly.
    Iterate {
        machine: String,
        state: String,
        word: String,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long, value_enum, default_value = "collect")]
        mode: Mode,
    },
    /// Decide whether two state words induce the same map.
    Equal { input: String, u: String, v: String },
    /// Count distinct maps induced by state words of each length.
    Growth {
        machine: String,
        #[arg(long, default_value_t = 4)]
        max: usize,
    },
    /// Build the greedy table of a presented monoid and family.
    Greedy {
        presentation: String,
        /// Check closure of the family under left divisors and left-mcms.
        #[arg(long, conflicts_with = "divisors")]
        closure: bool,
        /// List the family elements right-dividing this atom word.
        #[arg(long)]
        divisors: Option<String>,
    },
    /// List gallery entries, check one, or emit it.
    Gallery {
        name: Option<String>,
        #[arg(long, value_enum)]
        emit: Option<Emit>,
    },
    /// Emit a machine, or the Mealy machine of a table, as DOT.
    Dot { input: String },
}

enum Output {
    Text(String),
    Report(Report, i32),
}

/// Runs the command line, writing results to `out` and diagnostics to
/// `err`. Returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(Output::Text(text)) => {
            let text = if cli.json {
                let mut r = Report::new();
                r.push("text", text);
                r.to_json()
            } else {
                text
            };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Ok(Output::Report(r, code)) => {
            let text = if cli.json { r.to_json() } else { r.to_text() };
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_budget() {
                EXIT_BUDGET
            } else {
                EXIT_INPUT
            }
        }
    }
}

/// Entry point of the `garnorm` binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

fn bound(b: Bound) -> Value {
    match b {
        Bound::Finite(n) => Value::from(n),
        Bound::Unbounded => Value::from("unbounded"),
    }
}

fn exit_if(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn state(al: &Alphabet, name: &str) -> Result<crate::word::Symbol> {
    al.lookup(name.trim())
}

fn execute(cli: &Cli) -> Result<Output> {
    let budget = input::budget(DEFAULT_NODE_BUDGET)?;
    let compact = cli.compact;
    let table = |arg: &str| load(arg).and_then(|(l, i)| Ok((l, i.into_table(budget)?)));
    let machine = |arg: &str| load(arg).and_then(|(l, i)| Ok((l, i.into_machine(budget)?)));
    let mut r = Report::new();
    match &cli.command {
        Command::Check {
            table: arg,
            max_len,
        } => {
            let (label, t) = table(arg)?;
            let al = t.alphabet();
            let v = t.verify_normalisation(*max_len);
            r.push("command", "check")
                .push("input", label)
                .push("max_len", *max_len);
            r.push("idempotent", v.idempotence.is_empty());
            if let Some(&(a, b)) = v.idempotence.first() {
                r.push(
                    "witness.idempotence",
                    format!("{} {}", al.name(a), al.name(b)),
                );
            }
            r.push("normalisation_failures", v.normalize_failure_count);
            if let Some((w, e)) = v.normalize_failures.first() {
                r.push("witness.normalisation", format!("{} ({e})", al.render(w)));
            }
            r.push("confluence_failures", v.confluence_count);
            if let Some(c) = v.confluence.first() {
                r.push(
                    "witness.confluence",
                    format!(
                        "{} -> {} | {}",
                        al.render(&c.word),
                        al.render(&c.first),
                        al.render(&c.second)
                    ),
                );
            }
            r.push("axiom_failures", v.axiom_count);
            if let Some(a) = v.axiom.first() {
                r.push(
                    "witness.axiom",
                    format!(
                        "{} | {} | {}",
                        al.render(&a.prefix),
                        al.render(&a.middle),
                        al.render(&a.suffix)
                    ),
                );
            }
            let mut ok = v.is_empty();
            match t.unit() {
                None => {
                    r.push("unit", "none");
                }
                Some(u) if v.idempotence.is_empty() => {
                    let violation = t.unit_violation()?;
                    r.push("unit", al.name(u))
                        .push("unit_condition", violation.is_none());
                    if let Some(why) = violation {
                        r.push("witness.unit", why);
                        ok = false;
                    }
                }
                Some(u) => {
                    r.push("unit", al.name(u));
                }
            }
            r.push("ok", ok);
            Ok(Output::Report(r, exit_if(ok)))
        }
        Command::Breadth { table: arg } => {
            let (label, t) = table(arg)?;
            let b = t.breadth()?;
            let al = t.alphabet();
            let wit = |w: &[crate::word::Symbol; 3]| al.render(&crate::word::Word(w.to_vec()));
            r.push("command", "breadth").push("input", label);
            r.push("d", bound(b.d)).push("p", bound(b.p));
            r.push("d_witness", wit(&b.d_witness))
                .push("p_witness", wit(&b.p_witness));
            if let Some(w) = b.warning() {
                r.push("warning", w);
            }
            Ok(Output::Report(r, EXIT_OK))
        }
        Command::Home { table: arg } => {
            let (label, t) = table(arg)?;
            let b = t.breadth()?;
            r.push("command", "home").push("input", label);
            r.push("d", bound(b.d))
                .push("p", bound(b.p))
                .push("home", b.is_home());
            if let Some(why) = b.home_violation() {
                r.push("reason", why);
            }
            Ok(Output::Report(r, exit_if(b.is_home())))
        }
        Command::Normalize { table: arg, word } => {
            let (label, t) = table(arg)?;
            let (w, c) = parse_word(t.alphabet(), word, compact)?;
            let n = t.normalize_with(&w, budget)?;
            r.push("command", "normalize").push("input", label);
            r.push("word", render(t.alphabet(), &w, c));
            r.push("normal", render(t.alphabet(), &n, c));
            Ok(Output::Report(r, EXIT_OK))
        }
        Command::Mealy { table: arg } => Ok(Output::Text(table(arg)?.1.build_mealy()?.to_text())),
        Command::Thurston { table: arg } => {
            Ok(Output::Text(table(arg)?.1.build_thurston()?.to_text()))
        }
        Command::Dual { machine: arg } => Ok(Output::Text(machine(arg)?.1.dual().to_text())),
        Command::Run {
            machine: arg,
            state: q,
            word,
        } => {
            let (label, m) = machine(arg)?;
            let q = state(m.states(), q)?;
            let (w, c) = parse_word(m.letters(), word, compact)?;
            let (o, fin) = m.run(q, &w)?;
            r.push("command", "run").push("input", label);
            r.push("state", m.states().name(q));
            r.push("word", render(m.letters(), &w, c));
            r.push("output", render(m.letters(), &o, c));
            r.push("final", m.states().name(fin));
            Ok(Output::Report(r, EXIT_OK))
        }
        Command::Iterate {
            machine: arg,
            state: q,
            word,
            steps,
            mode,
        } => {
            let (label, i) = load(arg)?;
            let m = match (mode, i) {
                (Mode::Sweep, i @ (Input::Table(_) | Input::Presented(..))) => {
                    i.into_table(budget)?.build_thurston()?
                }
                (_, i) => i.into_machine(budget)?,
            };
            r.push("command", "iterate").push("input", label);
            match mode {
                Mode::Collect => iterate_collect(&mut r, &m, q, word, *steps, compact)?,
                Mode::Sweep => iterate_sweep(&mut r, &m, q, word, *steps, compact)?,
            }
            Ok(Output::Report(r, EXIT_OK))
        }
        Command::Equal { input: arg, u, v } => {
            let (label, m) = machine(arg)?;
            let (uw, c1) = parse_word(m.states(), u, compact)?;
            let (vw, c2) = parse_word(m.states(), v, compact)?;
            let c = c1 && c2;
            let witness = m.distinguishing_word(&uw, &vw)?;
            r.push("command", "equal").push("input", label);
            r.push("u", render(m.states(), &uw, c))
                .push("v", render(m.states(), &vw, c));
            r.push("equal", witness.is_none());
            if let Some(w) = &witness {
                let lc = c && m.letters().is_compact();
                r.push("witness", render(m.letters(), w, lc));
                r.push("output.u", render(m.letters(), &m.run_word(&uw, w)?, lc));
                r.push("output.v", render(m.letters(), &m.run_word(&vw, w)?, lc));
            }
            Ok(Output::Report(r, exit_if(witness.is_none())))
        }
        Command::Growth { machine: arg, max } => {
            let (label, m) = machine(arg)?;
            r.push("command", "growth")
                .push("input", label)
                .push("max", *max);
            for (k, n) in m.growth(*max)?.into_iter().enumerate() {
                r.push(format!("length.{}", k + 1), n);
            }
            Ok(Output::Report(r, EXIT_OK))
        }
        Command::Greedy {
            presentation,
            closure,
            divisors,
        } => {
            let (label, i) = load(presentation)?;
            let Input::Presented(monoid, family) = i else {
                return Err(Error::Invalid(format!(
                    "`{presentation}` is not a presentation"
                )));
            };
            let monoid = monoid.with_budget(budget);
            if *closure {
                let report = check_family_closure(&monoid, &family)?;
                r.push("command", "greedy").push("input", label);
                r.push("closed", report.is_closed());
                r.push("issues", report.issues.len());
                for (k, issue) in report.issues.iter().enumerate() {
                    r.push(format!("issue.{}", k + 1), issue.to_string());
                }
                return Ok(Output::Report(r, exit_if(report.is_closed())));
            }
            if let Some(word) = divisors {
                let (e, _) = parse_word(monoid.atoms(), word, false)?;
                let ds = right_divisors(&monoid, &e, &family)?;
                let names: Vec<&str> = ds.iter().map(|&d| family.name(d)).collect();
                r.push("command", "greedy").push("input", label);
                r.push("word", monoid.atoms().render(&e));
                r.push("right_divisors", names.join(" "));
                return Ok(Output::Report(r, EXIT_OK));
            }
            Ok(Output::Text(
                crate::greedy::greedy_table(&monoid, &family)?.to_text(),
            ))
        }
        Command::Gallery { name: None, .. } => Ok(Output::Text(
            all_names().into_iter().map(|n| n + "\n").collect(),
        )),
        Command::Gallery {
            name: Some(name),
            emit,
        } => {
            let entry = gallery(name)?;
            if let Some(emit) = emit {
                let text = match (emit, &entry.payload) {
                    (Emit::Table, Payload::Table(t) | Payload::Presented { table: t, .. }) => {
                        t.to_text()
                    }
                    (Emit::Machine, _) => entry.machine()?.to_text(),
                    (Emit::Presentation, Payload::Presented { monoid, family, .. }) => {
                        presentation_to_text(monoid, family)
                    }
                    (what, _) => {
                        return Err(Error::Invalid(format!(
                            "gallery entry `{name}` has no {} form",
                            format!("{what:?}").to_lowercase()
                        )))
                    }
                };
                return Ok(Output::Text(text));
            }
            let kind = match entry.payload {
                Payload::Table(_) => "table",
                Payload::Machine(_) => "machine",
                Payload::Presented { .. } => "presentation",
            };
            let misses = entry.check()?;
            r.push("command", "gallery")
                .push("name", name.as_str())
                .push("kind", kind);
            r.push("expectations_met", misses.is_empty());
            for (k, miss) in misses.iter().enumerate() {
                r.push(format!("miss.{}", k + 1), miss.as_str());
            }
            Ok(Output::Report(r, exit_if(misses.is_empty())))
        }
        Command::Dot { input: arg } => {
            let (label, m) = machine(arg)?;
            Ok(Output::Text(export_dot(&m, &label)))
        }
    }
}

fn iterate_collect(
    r: &mut Report,
    m: &MealyMachine,
    q: &str,
    word: &str,
    steps: usize,
    compact: bool,
) -> Result<()> {
    let q = state(m.states(), q)?;
    let (w, c) = parse_word(m.letters(), word, compact)?;
    let n = m.numeration_iterate(q, &w, steps)?;
    let sc = c && m.states().is_compact();
    r.push("mode", "collect").push("steps", steps);
    r.push("collected", render(m.states(), &n.collected, sc));
    r.push("word", render(m.letters(), n.trace.last().unwrap_or(&w), c));
    if let Some((pre, period)) = n.cycle {
        r.push("cycle.preperiod", pre).push("cycle.period", period);
    }
    Ok(())
}

/// Thurston sweeps on the word `q w`, stopping early once it is normal.
fn iterate_sweep(
    r: &mut Report,
    m: &MealyMachine,
    q: &str,
    word: &str,
    steps: usize,
    compact: bool,
) -> Result<()> {
    if m.states() != m.letters() {
        return Err(Error::Invalid(
            "sweep mode needs a machine whose states are its letters".into(),
        ));
    }
    let al = m.letters();
    let first = state(al, q)?;
    let (rest, c) = parse_word(al, word, compact)?;
    let mut w = crate::word::Word(vec![first]).concat(&rest);
    r.push("mode", "sweep").push("start", render(al, &w, c));
    let mut done = 0;
    while done < steps && !m.thurston_is_normal(&w) {
        w = m.thurston_sweep(&w)?;
        done += 1;
        r.push(format!("sweep.{done}"), render(al, &w, c));
    }
    r.push("sweeps", done)
        .push("normal", m.thurston_is_normal(&w));
    r.push("word", render(al, &w, c));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("garnorm").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn home_of_bicyclic() {
        let (code, out, _) = cli(&["home", "gallery:bicyclic"]);
        assert_eq!(code, 1);
        assert!(out.contains("reason: p=4 exceeds 3\n"), "{out}");
    }

    #[test]
    fn plactic_relation() {
        let (code, out, _) = cli(&["equal", "gallery:plactic2", "a b a", "b a a"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("equal: true"));
    }

    #[test]
    fn division_run() {
        let (code, out, _) = cli(&["run", "gallery:div3", "0", "110"]);
        assert_eq!(code, 0);
        assert!(out.contains("output: 010\n"));
        assert!(out.contains("final: 0\n"));
    }

    #[test]
    fn input_errors_exit_two() {
        let (code, _, err) = cli(&["breadth", "gallery:nope"]);
        assert_eq!(code, 2);
        assert!(err.starts_with("error: unknown gallery entry"));
        assert_eq!(cli(&["frobnicate"]).0, 2);
        assert_eq!(cli(&["run", "gallery:div3", "7", "0"]).0, 2);
    }

    #[test]
    fn sweeps_use_the_thurston_transducer() {
        let (code, out, _) = cli(&[
            "iterate",
            "gallery:plactic2",
            "b",
            "a a",
            "--mode",
            "sweep",
            "--steps",
            "5",
        ]);
        assert_eq!(code, 0);
        assert!(out.contains("sweep.1: 1 a ba\n"), "{out}");
        assert!(out.contains("normal: true\n"));
    }

    #[test]
    fn json_reports_parse_back() {
        let (code, out, _) = cli(&["--json", "breadth", "gallery:bicyclic"]);
        assert_eq!(code, 0);
        let r = Report::from_json(&out).unwrap();
        assert_eq!(r.get("d"), Some(&Value::Int(3)));
        assert_eq!(r.get("p"), Some(&Value::Int(4)));
    }
}
