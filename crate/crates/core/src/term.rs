//! Terms over `→`, `⇝`, `·` and the unit, with a generic identity checker.
//!
//! Concrete syntax: `->` or `→`, `~>` or `⇝`, `*` or `·`, the constant `1`,
//! identifiers as variables, parentheses. Binary operators associate to the
//! right and share one precedence level; use parentheses for anything else.

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::report::{VerificationReport, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Arrow,
    Squig,
    Product,
}

impl Op {
    fn symbol(self) -> &'static str {
        match self {
            Op::Arrow => "→",
            Op::Squig => "⇝",
            Op::Product => "·",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Unit,
    Bin(Op, Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn arrow(l: Term, r: Term) -> Term {
        Term::Bin(Op::Arrow, Box::new(l), Box::new(r))
    }

    pub fn squig(l: Term, r: Term) -> Term {
        Term::Bin(Op::Squig, Box::new(l), Box::new(r))
    }

    pub fn product(l: Term, r: Term) -> Term {
        Term::Bin(Op::Product, Box::new(l), Box::new(r))
    }

    /// `(t→1)→1`, the retraction onto the group part, written as a term.
    pub fn delta(t: Term) -> Term {
        Term::arrow(Term::arrow(t, Term::Unit), Term::Unit)
    }

    pub fn parse(src: &str) -> Result<Term> {
        let tokens = tokenize(src)?;
        let mut p = Parser { tokens, pos: 0 };
        let t = p.expr()?;
        if p.pos != p.tokens.len() {
            return Err(Error::Parse {
                line: 1,
                message: format!("unexpected token in term `{src}`"),
            });
        }
        Ok(t)
    }

    /// Variables in order of first occurrence.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Unit => {}
            Term::Bin(_, l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    fn uses(&self, op: Op) -> bool {
        match self {
            Term::Bin(o, l, r) => *o == op || l.uses(op) || r.uses(op),
            _ => false,
        }
    }

    /// Evaluates under `env`, which maps each variable (by position in
    /// `vars`) to an element.
    pub fn eval<S: Operations + ?Sized>(&self, s: &S, vars: &[String], env: &[usize]) -> Result<usize> {
        match self {
            Term::Var(v) => vars
                .iter()
                .position(|w| w == v)
                .map(|i| env[i])
                .ok_or_else(|| Error::UnboundSymbol(v.clone())),
            Term::Unit => Ok(s.unit_element()),
            Term::Bin(op, l, r) => {
                let x = l.eval(s, vars, env)?;
                let y = r.eval(s, vars, env)?;
                s.apply(*op, x, y)
                    .ok_or_else(|| Error::UnboundSymbol(op.symbol().to_string()))
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Unit => f.write_str("1"),
            Term::Bin(op, l, r) => {
                let wrap = |t: &Term| matches!(t, Term::Bin(..));
                if wrap(l) {
                    write!(f, "({l})")?;
                } else {
                    write!(f, "{l}")?;
                }
                f.write_str(op.symbol())?;
                if wrap(r) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
        }
    }
}

impl std::str::FromStr for Term {
    type Err = Error;
    fn from_str(s: &str) -> Result<Term> {
        Term::parse(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    One,
    Op(Op),
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            c if c.is_whitespace() => {}
            '(' => out.push(Tok::Open),
            ')' => out.push(Tok::Close),
            '→' => out.push(Tok::Op(Op::Arrow)),
            '⇝' => out.push(Tok::Op(Op::Squig)),
            '*' | '·' => out.push(Tok::Op(Op::Product)),
            '-' if chars.peek() == Some(&'>') => {
                chars.next();
                out.push(Tok::Op(Op::Arrow));
            }
            '~' if chars.peek() == Some(&'>') => {
                chars.next();
                out.push(Tok::Op(Op::Squig));
            }
            '1' => out.push(Tok::One),
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut id = c.to_string();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            other => {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("unexpected character `{other}` in term"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn expr(&mut self) -> Result<Term> {
        let lhs = self.atom()?;
        if let Some(Tok::Op(op)) = self.tokens.get(self.pos).cloned() {
            self.pos += 1;
            let rhs = self.expr()?;
            return Ok(Term::Bin(op, Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Term> {
        let tok = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::One) => Ok(Term::Unit),
            Some(Tok::Ident(v)) => Ok(Term::Var(v)),
            Some(Tok::Open) => {
                let t = self.expr()?;
                if self.tokens.get(self.pos) != Some(&Tok::Close) {
                    return Err(Error::Parse {
                        line: 1,
                        message: "missing `)`".into(),
                    });
                }
                self.pos += 1;
                Ok(t)
            }
            _ => Err(Error::Parse {
                line: 1,
                message: "expected a variable, `1` or `(`".into(),
            }),
        }
    }
}

/// A finite structure terms can be evaluated in.
pub trait Operations {
    fn carrier_size(&self) -> usize;
    fn unit_element(&self) -> usize;
    /// `None` when the structure does not provide `op`.
    fn apply(&self, op: Op, x: usize, y: usize) -> Option<usize>;
    fn label(&self, x: usize) -> String;
}

impl Operations for Algebra {
    fn carrier_size(&self) -> usize {
        self.size()
    }
    fn unit_element(&self) -> usize {
        self.unit()
    }
    fn apply(&self, op: Op, x: usize, y: usize) -> Option<usize> {
        match op {
            Op::Arrow => Some(self.arrow(x, y)),
            Op::Squig => Some(self.squig(x, y)),
            Op::Product => None,
        }
    }
    fn label(&self, x: usize) -> String {
        self.name(x).to_string()
    }
}

/// Checks `lhs = rhs` under every assignment of elements to the variables.
/// Fails with [`Error::UnboundSymbol`] if a term uses an operation the
/// structure lacks.
pub fn check_term_identity<S: Operations + ?Sized>(
    s: &S,
    lhs: &Term,
    rhs: &Term,
) -> Result<VerificationReport> {
    if (lhs.uses(Op::Product) || rhs.uses(Op::Product))
        && s.apply(Op::Product, s.unit_element(), s.unit_element()).is_none()
    {
        return Err(Error::UnboundSymbol("·".into()));
    }
    let mut vars = lhs.variables();
    for v in rhs.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    let n = s.carrier_size();
    let mut env = vec![0usize; vars.len()];
    loop {
        let l = lhs.eval(s, &vars, &env)?;
        let r = rhs.eval(s, &vars, &env)?;
        if l != r {
            let witness = env.iter().map(|&x| s.label(x)).collect();
            let law = format!("{lhs} = {rhs}");
            let detail = format!("{} ≠ {}", s.label(l), s.label(r));
            return Ok(VerificationReport::from_violations(vec![Violation::new(
                law, witness, detail,
            )]));
        }
        let mut k = env.len();
        loop {
            if k == 0 {
                return Ok(VerificationReport::pass());
            }
            k -= 1;
            env[k] += 1;
            if env[k] < n {
                break;
            }
            env[k] = 0;
        }
    }
}

/// Convenience wrapper parsing both sides.
pub fn check_identity_str<S: Operations + ?Sized>(
    s: &S,
    lhs: &str,
    rhs: &str,
) -> Result<VerificationReport> {
    check_term_identity(s, &Term::parse(lhs)?, &Term::parse(rhs)?)
}
