use std::path::Path;

use crate::error::{Error, Result};
use crate::gallery::{gallery, Payload};
use crate::greedy::{greedy_table, parse_presentation, GarsideFamily, PresentedMonoid};
use crate::machines::MealyMachine;
use crate::norm::{strip_comment, NormTable};
use crate::word::{Alphabet, Word};

pub const BUDGET_VAR: &str = "GARNORM_BUDGET";

/// A loaded table, machine or presentation.
#[derive(Debug, Clone)]
pub enum Input {
    Table(NormTable),
    Machine(MealyMachine),
    Presented(PresentedMonoid, GarsideFamily),
}

/// Which file format a text is in, judged by its keywords.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Table,
    Machine,
    Presentation,
}

pub fn detect_format(text: &str) -> Format {
    let keywords = text
        .lines()
        .filter_map(|l| strip_comment(l).split_whitespace().next());
    for k in keywords {
        match k {
            "states" | "trans" => return Format::Machine,
            "atoms" | "rel" | "family" => return Format::Presentation,
            _ => {}
        }
    }
    Format::Table
}

pub fn parse_input(text: &str) -> Result<Input> {
    Ok(match detect_format(text) {
        Format::Table => Input::Table(NormTable::parse(text)?),
        Format::Machine => Input::Machine(MealyMachine::parse(text)?),
        Format::Presentation => {
            let (m, f) = parse_presentation(text)?;
            Input::Presented(m, f)
        }
    })
}

/// Loads `arg`, either a `gallery:<name>` pseudo-path or a file. Returns a
/// short label for the input alongside it.
pub fn load(arg: &str) -> Result<(String, Input)> {
    if let Some(name) = arg.strip_prefix("gallery:") {
        let entry = gallery(name)?;
        let input = match entry.payload {
            Payload::Table(t) => Input::Table(t),
            Payload::Machine(m) => Input::Machine(m),
            Payload::Presented { monoid, family, .. } => Input::Presented(monoid, family),
        };
        return Ok((name.to_string(), input));
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Invalid(format!("cannot read `{arg}`: {e}")))?;
    let label = Path::new(arg)
        .file_stem()
        .map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
    Ok((label, parse_input(&text)?))
}

/// Search budget from the environment, or `default`.
pub fn budget(default: usize) -> Result<usize> {
    match std::env::var(BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Invalid(format!("{BUDGET_VAR} must be a number, got `{v}`"))),
        Err(_) => Ok(default),
    }
}

impl Input {
    pub fn into_table(self, budget: usize) -> Result<NormTable> {
        match self {
            Input::Table(t) => Ok(t),
            Input::Presented(m, f) => greedy_table(&m.with_budget(budget), &f),
            Input::Machine(_) => Err(Error::Invalid("expected a table, got a machine".into())),
        }
    }

    /// The machine itself, or the Mealy machine of a table.
    pub fn into_machine(self, budget: usize) -> Result<MealyMachine> {
        match self {
            Input::Machine(m) => Ok(m),
            other => other.into_table(budget)?.build_mealy(),
        }
    }
}

/// Parses a command-line word. With `compact` the word must be unspaced
/// over a single-character alphabet. Returns the word and whether results
/// should be printed unspaced.
pub fn parse_word(al: &Alphabet, text: &str, compact: bool) -> Result<(Word, bool)> {
    if compact {
        if !al.is_compact() {
            return Err(Error::Invalid(
                "--compact needs an alphabet of single-character names".into(),
            ));
        }
        return Ok((al.parse_compact(text)?, true));
    }
    let w = al.parse_word_auto(text)?;
    let t = text.trim();
    let unspaced = al.is_compact() && t.chars().count() > 1 && !t.contains(char::is_whitespace);
    Ok((w, unspaced))
}

pub fn render(al: &Alphabet, w: &Word, compact: bool) -> String {
    if compact {
        al.render_compact(w)
    } else {
        al.render(w)
    }
}
