use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::norm::{strip_comment, NormTable};
use crate::word::{Alphabet, Symbol, Word};

/// A complete deterministic letter-to-letter transducer.
///
/// From `state` on `letter` the machine emits `out(state, letter)` and moves
/// to `next(state, letter)`.
#[derive(Debug, Clone)]
pub struct MealyMachine {
    states: Alphabet,
    letters: Alphabet,
    next: Vec<Symbol>,
    out: Vec<Symbol>,
}

impl MealyMachine {
    /// Builds a machine from a transition function `f(state, letter) = (next, output)`.
    pub fn from_fn<F>(states: Alphabet, letters: Alphabet, mut f: F) -> Result<Self>
    where
        F: FnMut(Symbol, Symbol) -> (Symbol, Symbol),
    {
        let cap = states.len() * letters.len();
        let mut next = Vec::with_capacity(cap);
        let mut out = Vec::with_capacity(cap);
        for q in states.symbols() {
            for i in letters.symbols() {
                let (n, o) = f(q, i);
                if !states.contains(n) || !letters.contains(o) {
                    return Err(Error::Invalid(format!(
                        "transition from {} on {} leaves the machine",
                        states.name(q),
                        letters.name(i)
                    )));
                }
                next.push(n);
                out.push(o);
            }
        }
        Ok(MealyMachine {
            states,
            letters,
            next,
            out,
        })
    }

    /// The machine whose states all act as the identity.
    pub fn identity(states: Alphabet, letters: Alphabet) -> Self {
        MealyMachine::from_fn(states, letters, |q, i| (q, i)).expect("identity is closed")
    }

    pub fn states(&self) -> &Alphabet {
        &self.states
    }

    pub fn letters(&self) -> &Alphabet {
        &self.letters
    }

    #[inline]
    fn slot(&self, q: Symbol, i: Symbol) -> usize {
        q.index() * self.letters.len() + i.index()
    }

    #[inline]
    pub fn next(&self, q: Symbol, i: Symbol) -> Symbol {
        self.next[self.slot(q, i)]
    }

    #[inline]
    pub fn out(&self, q: Symbol, i: Symbol) -> Symbol {
        self.out[self.slot(q, i)]
    }

    /// `(next, output)` for one transition.
    #[inline]
    pub fn step(&self, q: Symbol, i: Symbol) -> (Symbol, Symbol) {
        let s = self.slot(q, i);
        (self.next[s], self.out[s])
    }

    pub fn transitions(&self) -> impl Iterator<Item = Transition> + '_ {
        self.states.symbols().flat_map(move |q| {
            self.letters.symbols().map(move |i| {
                let (next, output) = self.step(q, i);
                Transition {
                    from: q,
                    input: i,
                    output,
                    to: next,
                }
            })
        })
    }

    fn check_state(&self, q: Symbol) -> Result<()> {
        if self.states.contains(q) {
            Ok(())
        } else {
            Err(Error::UnknownSymbol(format!("state #{}", q.0)))
        }
    }

    /// Runs from `start` over `w`: the output word and the arrival state.
    pub fn run(&self, start: Symbol, w: &Word) -> Result<(Word, Symbol)> {
        self.check_state(start)?;
        self.letters.check(w)?;
        let mut q = start;
        let mut output = Vec::with_capacity(w.len());
        for i in w.iter() {
            let (n, o) = self.step(q, i);
            output.push(o);
            q = n;
        }
        Ok((Word(output), q))
    }

    /// The composite production function of the state word `u`, with `u[0]`
    /// applied first.
    pub fn run_word(&self, u: &Word, w: &Word) -> Result<Word> {
        self.states.check(u)?;
        self.letters.check(w)?;
        let mut cur = w.clone();
        for q in u.iter() {
            cur = self.run(q, &cur)?.0;
        }
        Ok(cur)
    }

    /// Threads one input letter through the tuple of states `u`, updating
    /// the tuple in place and returning the final output letter.
    #[inline]
    pub(crate) fn thread(&self, tuple: &mut [Symbol], mut letter: Symbol) -> Symbol {
        for q in tuple.iter_mut() {
            let (n, o) = self.step(*q, letter);
            *q = n;
            letter = o;
        }
        letter
    }

    /// The dual machine: states and letters exchange roles, and a transition
    /// `x --i|j--> y` becomes `i --x|y--> j`.
    pub fn dual(&self) -> MealyMachine {
        MealyMachine::from_fn(self.letters.clone(), self.states.clone(), |i, x| {
            let (y, j) = self.step(x, i);
            (j, y)
        })
        .expect("dual of a complete machine is complete")
    }

    /// Parses the machine text format:
    ///
    /// ```text
    /// states 0 1 2
    /// alphabet 0 1
    /// trans 0 1 -> 1 0
    /// ```
    ///
    /// `trans <state> <letter> -> <next> <output>` must appear exactly once
    /// per state and letter.
    pub fn parse(text: &str) -> Result<Self> {
        let mut states: Option<Alphabet> = None;
        let mut letters: Option<Alphabet> = None;
        let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let mut toks = strip_comment(raw).split_whitespace();
            let Some(keyword) = toks.next() else { continue };
            let rest: Vec<&str> = toks.collect();
            let header = |slot: &mut Option<Alphabet>, what: &str| -> Result<()> {
                if slot.is_some() {
                    return Err(Error::parse(line_no, format!("duplicate `{what}` line")));
                }
                if rest.is_empty() {
                    return Err(Error::parse(line_no, format!("empty `{what}` line")));
                }
                let al = Alphabet::new(rest.iter().copied())
                    .map_err(|e| Error::parse(line_no, e.to_string()))?;
                *slot = Some(al);
                Ok(())
            };
            match keyword {
                "states" => header(&mut states, "states")?,
                "alphabet" => header(&mut letters, "alphabet")?,
                "trans" => rows.push((line_no, rest)),
                other => {
                    return Err(Error::parse(line_no, format!("unknown keyword `{other}`")));
                }
            }
        }
        let end = text.lines().count() + 1;
        let states = states.ok_or_else(|| Error::parse(end, "missing `states` line"))?;
        let letters = letters.ok_or_else(|| Error::parse(end, "missing `alphabet` line"))?;
        let cap = states.len() * letters.len();
        let mut table: Vec<Option<(Symbol, Symbol)>> = vec![None; cap];
        for (line_no, rest) in rows {
            let [q, i, "->", n, o] = rest[..] else {
                return Err(Error::parse(
                    line_no,
                    "expected `trans <state> <letter> -> <next> <output>`",
                ));
            };
            let st = |name: &str| {
                states
                    .lookup(name)
                    .map_err(|e| Error::parse(line_no, e.to_string()))
            };
            let lt = |name: &str| {
                letters
                    .lookup(name)
                    .map_err(|e| Error::parse(line_no, e.to_string()))
            };
            let (q, i, n, o) = (st(q)?, lt(i)?, st(n)?, lt(o)?);
            let slot = &mut table[q.index() * letters.len() + i.index()];
            if slot.is_some() {
                return Err(Error::parse(
                    line_no,
                    format!(
                        "duplicate transition for state `{}` on `{}`",
                        states.name(q),
                        letters.name(i)
                    ),
                ));
            }
            *slot = Some((n, o));
        }
        if let Some(k) = table.iter().position(Option::is_none) {
            let (q, i) = (
                Symbol::from(k / letters.len()),
                Symbol::from(k % letters.len()),
            );
            return Err(Error::parse(
                end,
                format!(
                    "missing transition for state `{}` on `{}`",
                    states.name(q),
                    letters.name(i)
                ),
            ));
        }
        let (next, out) = table.into_iter().map(|e| e.expect("checked")).unzip();
        Ok(MealyMachine {
            states,
            letters,
            next,
            out,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "states {}\nalphabet {}\n",
            self.states.names().join(" "),
            self.letters.names().join(" ")
        );
        for t in self.transitions() {
            s.push_str(&format!(
                "trans {} {} -> {} {}\n",
                self.states.name(t.from),
                self.letters.name(t.input),
                self.states.name(t.to),
                self.letters.name(t.output)
            ));
        }
        s
    }
}

/// One labelled edge `from --input|output--> to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transition {
    pub from: Symbol,
    pub input: Symbol,
    pub output: Symbol,
    pub to: Symbol,
}

/// Machines are equal when they have the same state and letter names and the
/// same labelled transitions, regardless of declaration order.
impl PartialEq for MealyMachine {
    fn eq(&self, other: &Self) -> bool {
        let same_names = |a: &Alphabet, b: &Alphabet| {
            a.len() == b.len()
                && a.names().iter().collect::<HashSet<_>>()
                    == b.names().iter().collect::<HashSet<_>>()
        };
        if !same_names(&self.states, &other.states) || !same_names(&self.letters, &other.letters) {
            return false;
        }
        self.transitions().all(|t| {
            let q = other
                .states
                .lookup(self.states.name(t.from))
                .expect("same names");
            let i = other
                .letters
                .lookup(self.letters.name(t.input))
                .expect("same names");
            let (n, o) = other.step(q, i);
            other.states.name(n) == self.states.name(t.to)
                && other.letters.name(o) == self.letters.name(t.output)
        })
    }
}

impl Eq for MealyMachine {}

impl NormTable {
    /// The Mealy automaton of the normalisation: in state `q` reading `i`,
    /// with `N(i q) = c d`, emit `d` and move to `c`.
    pub fn build_mealy(&self) -> Result<MealyMachine> {
        self.check_idempotent()?;
        let al = self.alphabet().clone();
        MealyMachine::from_fn(al.clone(), al, |q, i| self.entry(i, q))
    }

    /// The Thurston transducer: in state `x` reading `y`, with `N(x y) = c d`,
    /// emit `c` and move to `d`.
    pub fn build_thurston(&self) -> Result<MealyMachine> {
        self.check_idempotent()?;
        let al = self.alphabet().clone();
        MealyMachine::from_fn(al.clone(), al, |x, y| {
            let (c, d) = self.entry(x, y);
            (d, c)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery::{machines, tables};

    fn sym(al: &Alphabet, s: &str) -> Symbol {
        al.lookup(s).unwrap()
    }

    #[test]
    fn bicyclic_mealy_transitions() {
        let m = tables::bicyclic().build_mealy().unwrap();
        let al = m.states().clone();
        assert_eq!(
            m.step(sym(&al, "b"), sym(&al, "a")),
            (sym(&al, "1"), sym(&al, "1"))
        );
        for x in al.symbols() {
            assert_eq!(m.step(sym(&al, "1"), x), (sym(&al, "1"), x));
        }
    }

    #[test]
    fn thurston_transitions() {
        let bic = tables::bicyclic();
        let t = bic.build_thurston().unwrap();
        let al = bic.alphabet();
        assert_eq!(
            t.step(sym(al, "a"), sym(al, "b")),
            (sym(al, "1"), sym(al, "1"))
        );
        assert_eq!(
            t.step(sym(al, "b"), sym(al, "a")),
            (sym(al, "a"), sym(al, "b"))
        );
        let pl = tables::plactic2();
        let t = pl.build_thurston().unwrap();
        let al = pl.alphabet();
        // out 1, next ba
        assert_eq!(
            t.step(sym(al, "b"), sym(al, "a")),
            (sym(al, "ba"), sym(al, "1"))
        );
    }

    #[test]
    fn run_division_by_three() {
        let m = machines::div3();
        let w = m.letters().parse_compact("110").unwrap();
        let (out, fin) = m.run(sym(m.states(), "0"), &w).unwrap();
        assert_eq!(m.letters().render_compact(&out), "010");
        assert_eq!(m.states().name(fin), "0");
        let (out, fin) = m.run(Symbol(1), &Word::empty()).unwrap();
        assert!(out.is_empty());
        assert_eq!(fin, Symbol(1));
    }

    #[test]
    fn run_multiplication() {
        let m = machines::mul2();
        let w = m.letters().parse_compact("12").unwrap();
        let (out, fin) = m.run(sym(m.states(), "0"), &w).unwrap();
        assert_eq!(m.letters().render_compact(&out), "21");
        assert_eq!(m.states().name(fin), "1");
    }

    #[test]
    fn run_rejects_foreign_letters() {
        let m = machines::div3();
        assert!(m.run(Symbol(0), &Word(vec![Symbol(7)])).is_err());
        assert!(m.run(Symbol(9), &Word::empty()).is_err());
    }

    #[test]
    fn run_word_composes() {
        let m = machines::div3();
        let st = m.states();
        let u = st.parse_compact("00").unwrap();
        let w = m.letters().parse_compact("1001").unwrap();
        assert_eq!(
            m.letters().render_compact(&m.run_word(&u, &w).unwrap()),
            "0001"
        );

        let bic = tables::bicyclic().build_mealy().unwrap();
        let al = bic.states();
        let ab = al.parse_word("a b").unwrap();
        for x in ["a", "b"] {
            let w = al.parse_word(&format!("{x} a b")).unwrap();
            assert_eq!(bic.run_word(&ab, &w).unwrap().0[0], sym(al, "1"));
        }
        let ones = al.parse_word("1 1 1").unwrap();
        let w = al.parse_word("b a a b").unwrap();
        assert_eq!(bic.run_word(&ones, &w).unwrap(), w);
    }

    #[test]
    fn dual_of_div3_is_mul2() {
        assert_eq!(machines::div3().dual(), machines::mul2());
        assert_eq!(machines::mul2().dual(), machines::div3());
        assert_ne!(machines::div3(), machines::mul2());
    }

    #[test]
    fn mealy_and_thurston_are_dual() {
        for t in [
            tables::bicyclic(),
            tables::plactic2(),
            tables::malcev(),
            tables::cyclic(3),
        ] {
            assert_eq!(t.build_mealy().unwrap().dual(), t.build_thurston().unwrap());
        }
    }

    #[test]
    fn machine_text_round_trip() {
        let m = machines::div3();
        let text = m.to_text();
        let back = MealyMachine::parse(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn machine_parse_errors() {
        let missing = "states q\nalphabet x y\ntrans q x -> q x\n";
        assert!(matches!(
            MealyMachine::parse(missing),
            Err(Error::Parse { .. })
        ));
        let dup = "states q\nalphabet x\ntrans q x -> q x\ntrans q x -> q x\n";
        assert!(matches!(
            MealyMachine::parse(dup),
            Err(Error::Parse { line: 4, .. })
        ));
        let unknown = "states q\nalphabet x\ntrans q z -> q x\n";
        assert!(matches!(
            MealyMachine::parse(unknown),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn equality_ignores_declaration_order() {
        let a = MealyMachine::parse("states p q\nalphabet x\ntrans p x -> q x\ntrans q x -> p x\n")
            .unwrap();
        let b = MealyMachine::parse("states q p\nalphabet x\ntrans q x -> p x\ntrans p x -> q x\n")
            .unwrap();
        assert_eq!(a, b);
    }
}
