//! C ABI for garnorm.
//!
//! Tables and machines are opaque handles owned by the caller and released
//! with `garnorm_table_free` / `garnorm_machine_free`. Strings returned
//! through out-parameters are owned by the caller and released with
//! `garnorm_string_free`. Every function returns a [`GarnormStatus`]; on
//! failure `garnorm_last_error` describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use garnorm::gallery::gallery;
use garnorm::greedy::{greedy_table, parse_presentation};
use garnorm::shell::export_dot;
use garnorm::shell::input::{parse_word, render};
use garnorm::{Bound, Error, MealyMachine, NormTable};

/// Opaque normalisation table.
pub struct GarnormTable(NormTable);

/// Opaque Mealy machine.
pub struct GarnormMachine(MealyMachine);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GarnormStatus {
    Ok = 0,
    /// A predicate evaluated to false.
    False = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    InvalidInput = 5,
    BudgetExhausted = 6,
    Panic = 7,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

fn status_of(e: &Error) -> GarnormStatus {
    match e {
        Error::Parse { .. } => GarnormStatus::Parse,
        e if e.is_budget() => GarnormStatus::BudgetExhausted,
        _ => GarnormStatus::InvalidInput,
    }
}

enum Fail {
    Status(GarnormStatus, String),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

fn guard(f: impl FnOnce() -> Result<GarnormStatus, Fail>) -> GarnormStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Fail::Status(status, msg))) => {
            set_error(&msg);
            status
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            GarnormStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Status(
            GarnormStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail::Status(GarnormStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn handle<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail::Status(GarnormStatus::NullPointer, format!("{what} is null")))
}

unsafe fn put<T>(out: *mut T, value: T, what: &str) -> Result<GarnormStatus, Fail> {
    if out.is_null() {
        return Err(Fail::Status(
            GarnormStatus::NullPointer,
            format!("{what} is null"),
        ));
    }
    out.write(value);
    Ok(GarnormStatus::Ok)
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<GarnormStatus, Fail> {
    let c = CString::new(s)
        .map_err(|_| Fail::Status(GarnormStatus::InvalidInput, "NUL in output".into()))?;
    if out.is_null() {
        return Err(Fail::Status(
            GarnormStatus::NullPointer,
            "output pointer is null".into(),
        ));
    }
    out.write(c.into_raw());
    Ok(GarnormStatus::Ok)
}

fn verdict(b: bool) -> GarnormStatus {
    if b {
        GarnormStatus::Ok
    } else {
        GarnormStatus::False
    }
}

/// Message describing the last failure on this thread. Valid until the
/// next failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn garnorm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn garnorm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a table in the text format.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_parse(
    src: *const c_char,
    out: *mut *mut GarnormTable,
) -> GarnormStatus {
    guard(|| {
        let t = NormTable::parse(text(src, "source")?)?;
        put(
            out,
            Box::into_raw(Box::new(GarnormTable(t))),
            "output pointer",
        )
    })
}

/// Builds the greedy table of a presentation in the text format.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_from_presentation(
    src: *const c_char,
    out: *mut *mut GarnormTable,
) -> GarnormStatus {
    guard(|| {
        let (m, f) = parse_presentation(text(src, "source")?)?;
        let t = greedy_table(&m, &f)?;
        put(
            out,
            Box::into_raw(Box::new(GarnormTable(t))),
            "output pointer",
        )
    })
}

/// Looks up a gallery table, such as `bicyclic` or `finite:Z/3`.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_gallery(
    name: *const c_char,
    out: *mut *mut GarnormTable,
) -> GarnormStatus {
    guard(|| {
        let name = text(name, "name")?;
        let entry = gallery(name)?;
        let t = entry.table().cloned().ok_or_else(|| {
            Fail::Status(
                GarnormStatus::InvalidInput,
                format!("`{name}` is not a table"),
            )
        })?;
        put(
            out,
            Box::into_raw(Box::new(GarnormTable(t))),
            "output pointer",
        )
    })
}

/// # Safety
/// `t` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_free(t: *mut GarnormTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// Canonical text form of a table.
///
/// # Safety
/// `t` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_to_text(
    t: *const GarnormTable,
    out: *mut *mut c_char,
) -> GarnormStatus {
    guard(|| put_string(out, handle(t, "table")?.0.to_text()))
}

/// Normal form of a word given as space-separated names, or unspaced over
/// a single-character alphabet.
///
/// # Safety
/// `t` must be a live table, `word` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_normalize(
    t: *const GarnormTable,
    word: *const c_char,
    out: *mut *mut c_char,
) -> GarnormStatus {
    guard(|| {
        let t = &handle(t, "table")?.0;
        let (w, compact) = parse_word(t.alphabet(), text(word, "word")?, false)?;
        let n = t.normalize(&w)?;
        put_string(out, render(t.alphabet(), &n, compact))
    })
}

/// Breadth of a table. An unbounded component is reported as -1.
///
/// # Safety
/// `t` must be a live table; `d` and `p` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_breadth(
    t: *const GarnormTable,
    d: *mut c_int,
    p: *mut c_int,
) -> GarnormStatus {
    guard(|| {
        let b = handle(t, "table")?.0.breadth()?;
        let n = |x: Bound| x.finite().map_or(-1, |v| v as c_int);
        put(d, n(b.d), "d")?;
        put(p, n(b.p), "p")
    })
}

/// `GARNORM_STATUS_OK` when the breadth satisfies d <= 4 and p <= 3,
/// `GARNORM_STATUS_FALSE` otherwise.
///
/// # Safety
/// `t` must be a live table.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_home(t: *const GarnormTable) -> GarnormStatus {
    guard(|| Ok(verdict(handle(t, "table")?.0.condition_home()?)))
}

/// `GARNORM_STATUS_OK` when the unit condition holds.
///
/// # Safety
/// `t` must be a live table.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_unit_condition(t: *const GarnormTable) -> GarnormStatus {
    guard(|| Ok(verdict(handle(t, "table")?.0.check_unit_condition()?)))
}

/// The Mealy machine of a table.
///
/// # Safety
/// `t` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_mealy(
    t: *const GarnormTable,
    out: *mut *mut GarnormMachine,
) -> GarnormStatus {
    guard(|| {
        let m = handle(t, "table")?.0.build_mealy()?;
        put(
            out,
            Box::into_raw(Box::new(GarnormMachine(m))),
            "output pointer",
        )
    })
}

/// The Thurston transducer of a table.
///
/// # Safety
/// `t` must be a live table; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_table_thurston(
    t: *const GarnormTable,
    out: *mut *mut GarnormMachine,
) -> GarnormStatus {
    guard(|| {
        let m = handle(t, "table")?.0.build_thurston()?;
        put(
            out,
            Box::into_raw(Box::new(GarnormMachine(m))),
            "output pointer",
        )
    })
}

/// Parses a machine in the text format.
///
/// # Safety
/// `src` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_machine_parse(
    src: *const c_char,
    out: *mut *mut GarnormMachine,
) -> GarnormStatus {
    guard(|| {
        let m = MealyMachine::parse(text(src, "source")?)?;
        put(
            out,
            Box::into_raw(Box::new(GarnormMachine(m))),
            "output pointer",
        )
    })
}

/// The machine of a gallery entry; for tables, their Mealy machine.
///
/// # Safety
/// `name` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_machine_gallery(
    name: *const c_char,
    out: *mut *mut GarnormMachine,
) -> GarnormStatus {
    guard(|| {
        let m = gallery(text(name, "name")?)?.machine()?;
        put(
            out,
            Box::into_raw(Box::new(GarnormMachine(m))),
            "output pointer",
        )
    })
}

/// # Safety
/// `m` must come from this library and not have been freed. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn garnorm_machine_free(m: *mut GarnormMachine) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Text form of a machine.
///
/// # Safety
/// `m` must be a live machine; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_machine_to_text(
    m: *const GarnormMachine,
    out: *mut *mut c_char,
) -> GarnormStatus {
    guard(|| put_string(out, handle(m, "machine")?.0.to_text()))
}

/// The dual machine, exchanging states and letters.
///
/// # Safety
/// `m` must be a live machine; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_machine_dual(
    m: *const GarnormMachine,
    out: *mut *mut GarnormMachine,
) -> GarnormStatus {
    guard(|| {
        let d = handle(m, "machine")?.0.dual();
        put(
            out,
            Box::into_raw(Box::new(GarnormMachine(d))),
            "output pointer",
        )
    })
}

/// Runs from `state` on `word`, returning the output word and final state.
///
/// # Safety
/// `m` must be a live machine, `state` and `word` NUL-terminated strings,
/// `output` and `final_state` writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_machine_run(
    m: *const GarnormMachine,
    state: *const c_char,
    word: *const c_char,
    output: *mut *mut c_char,
    final_state: *mut *mut c_char,
) -> GarnormStatus {
    guard(|| {
        let m = &handle(m, "machine")?.0;
        let q = m.states().lookup(text(state, "state")?.trim())?;
        let (w, compact) = parse_word(m.letters(), text(word, "word")?, false)?;
        let (o, fin) = m.run(q, &w)?;
        if output.is_null() || final_state.is_null() {
            return Err(Fail::Status(
                GarnormStatus::NullPointer,
                "output pointer is null".into(),
            ));
        }
        put_string(output, render(m.letters(), &o, compact))?;
        put_string(final_state, m.states().name(fin).to_string())
    })
}

/// `GARNORM_STATUS_OK` when the state words `u` and `v` induce the same map,
/// `GARNORM_STATUS_FALSE` otherwise.
///
/// # Safety
/// `m` must be a live machine; `u` and `v` NUL-terminated strings.
#[no_mangle]
pub unsafe extern "C" fn garnorm_machine_action_equal(
    m: *const GarnormMachine,
    u: *const c_char,
    v: *const c_char,
) -> GarnormStatus {
    guard(|| {
        let m = &handle(m, "machine")?.0;
        let (u, _) = parse_word(m.states(), text(u, "u")?, false)?;
        let (v, _) = parse_word(m.states(), text(v, "v")?, false)?;
        Ok(verdict(m.action_equal(&u, &v)?))
    })
}

/// DOT rendering of a machine.
///
/// # Safety
/// `m` must be a live machine, `name` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn garnorm_machine_dot(
    m: *const GarnormMachine,
    name: *const c_char,
    out: *mut *mut c_char,
) -> GarnormStatus {
    guard(|| {
        put_string(
            out,
            export_dot(&handle(m, "machine")?.0, text(name, "name")?),
        )
    })
}
