//! The algebra text format.
//!
//! ```text
//! # comment lines start with '#'
//! elements: a b 1
//! unit: 1
//! arrow:
//! 1 b 1
//! a 1 1
//! a b 1
//! squig:
//! 1 b 1
//! a 1 1
//! a b 1
//! ```
//!
//! Rows are indexed by the left operand in `elements` order. Blank lines are
//! ignored anywhere.

use crate::algebra::Algebra;
use crate::error::{Error, Result};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for (i, line) in self.inner.by_ref() {
            let t = line.trim();
            self.last = i + 1;
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            return Some((i + 1, t));
        }
        None
    }

    fn expect(&mut self, what: &str) -> Result<(usize, &'a str)> {
        self.next_content().ok_or_else(|| Error::Parse {
            line: self.last + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn header<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str> {
    text.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| err(line, format!("expected `{key}:`")))
}

pub(crate) fn parse(text: &str) -> Result<Algebra> {
    let mut lines = Lines {
        inner: text.lines().enumerate(),
        last: 0,
    };

    let (ln, t) = lines.expect("`elements:`")?;
    let names: Vec<String> = header(ln, t, "elements")?
        .split_whitespace()
        .map(str::to_string)
        .collect();
    if names.is_empty() {
        return Err(err(ln, "no elements"));
    }
    let n = names.len();
    let lookup = |ln: usize, s: &str| {
        names
            .iter()
            .position(|m| m == s)
            .ok_or_else(|| err(ln, format!("unknown element `{s}`")))
    };

    let (ln, t) = lines.expect("`unit:`")?;
    let unit_text = header(ln, t, "unit")?;
    if unit_text.split_whitespace().count() != 1 {
        return Err(err(ln, "expected exactly one unit name"));
    }
    let unit = lookup(ln, unit_text)?;

    let mut tables = Vec::with_capacity(2);
    for key in ["arrow", "squig"] {
        let (ln, t) = lines.expect(&format!("`{key}:`"))?;
        if !header(ln, t, key)?.is_empty() {
            return Err(err(ln, format!("`{key}:` must be alone on its line")));
        }
        let mut table = Vec::with_capacity(n * n);
        for _ in 0..n {
            let (ln, row) = lines.expect("a table row")?;
            let cells: Vec<&str> = row.split_whitespace().collect();
            if cells.len() != n {
                return Err(err(ln, format!("row has {} entries, expected {n}", cells.len())));
            }
            for c in cells {
                table.push(lookup(ln, c)?);
            }
        }
        tables.push(table);
    }
    if let Some((ln, _)) = lines.next_content() {
        return Err(err(ln, "trailing content after the squig table"));
    }
    let squig = tables.pop().unwrap();
    let arrow = tables.pop().unwrap();
    Algebra::new(names, unit, arrow, squig).map_err(|e| match e {
        Error::Malformed(m) => err(1, m),
        other => other,
    })
}

pub(crate) fn write(a: &Algebra) -> String {
    let mut out = String::new();
    out.push_str("elements: ");
    out.push_str(&a.names().join(" "));
    out.push('\n');
    out.push_str(&format!("unit: {}\n", a.name(a.unit())));
    for (key, op) in [
        ("arrow", Algebra::arrow as fn(&Algebra, usize, usize) -> usize),
        ("squig", Algebra::squig),
    ] {
        out.push_str(key);
        out.push_str(":\n");
        for x in a.elements() {
            let row: Vec<&str> = a.elements().map(|y| a.name(op(a, x, y))).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}
