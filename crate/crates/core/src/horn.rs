//! First-order clauses over the pocrim signature in the concrete syntax of
//! Prover9 and Mace4: terms built from `0`, `+` and `==>`, atoms `=`, `!=`
//! and `>=`, and the connectives `-`, `&`, `|`, `->` and `<->`.
//!
//! Names starting with `u` to `z` are variables, universally quantified per
//! clause. Every other name (including `1`) is a constant, interpreted by
//! the model. `0` is the monoid identity.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{ClassFilter, FiniteAlgebra};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Term {
    Zero,
    Var(String),
    Const(String),
    Add(Box<Term>, Box<Term>),
    Imp(Box<Term>, Box<Term>),
}

impl Term {
    /// A variable or constant according to the naming convention.
    pub fn name(name: &str) -> Term {
        if is_variable_name(name) {
            Term::Var(name.into())
        } else {
            Term::Const(name.into())
        }
    }

    pub fn add(l: Term, r: Term) -> Term {
        Term::Add(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Term, r: Term) -> Term {
        Term::Imp(Box::new(l), Box::new(r))
    }

    fn is_compound(&self) -> bool {
        matches!(self, Term::Add(..) | Term::Imp(..))
    }

    fn collect(&self, vars: &mut BTreeSet<String>, consts: &mut BTreeSet<String>) {
        match self {
            Term::Zero => {}
            Term::Var(v) => {
                vars.insert(v.clone());
            }
            Term::Const(c) => {
                consts.insert(c.clone());
            }
            Term::Add(l, r) | Term::Imp(l, r) => {
                l.collect(vars, consts);
                r.collect(vars, consts);
            }
        }
    }
}

pub fn is_variable_name(name: &str) -> bool {
    matches!(name.chars().next(), Some('u'..='z'))
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sub = |f: &mut fmt::Formatter<'_>, t: &Term| {
            if t.is_compound() {
                write!(f, "({t})")
            } else {
                write!(f, "{t}")
            }
        };
        match self {
            Term::Zero => f.write_str("0"),
            Term::Var(n) | Term::Const(n) => f.write_str(n),
            Term::Add(l, r) => {
                sub(f, l)?;
                f.write_str(" + ")?;
                sub(f, r)
            }
            Term::Imp(l, r) => {
                sub(f, l)?;
                f.write_str(" ==> ")?;
                sub(f, r)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Rel {
    Eq,
    Ne,
    Ge,
}

impl Rel {
    pub fn symbol(self) -> &'static str {
        match self {
            Rel::Eq => "=",
            Rel::Ne => "!=",
            Rel::Ge => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Prop {
    Atom(Rel, Term, Term),
    Not(Box<Prop>),
    And(Box<Prop>, Box<Prop>),
    Or(Box<Prop>, Box<Prop>),
    Implies(Box<Prop>, Box<Prop>),
    Iff(Box<Prop>, Box<Prop>),
}

impl Prop {
    pub fn eq(l: Term, r: Term) -> Prop {
        Prop::Atom(Rel::Eq, l, r)
    }

    pub fn ge(l: Term, r: Term) -> Prop {
        Prop::Atom(Rel::Ge, l, r)
    }

    pub fn and(l: Prop, r: Prop) -> Prop {
        Prop::And(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Prop, r: Prop) -> Prop {
        Prop::Implies(Box::new(l), Box::new(r))
    }

    pub fn iff(l: Prop, r: Prop) -> Prop {
        Prop::Iff(Box::new(l), Box::new(r))
    }

    fn collect(&self, vars: &mut BTreeSet<String>, consts: &mut BTreeSet<String>) {
        match self {
            Prop::Atom(_, l, r) => {
                l.collect(vars, consts);
                r.collect(vars, consts);
            }
            Prop::Not(p) => p.collect(vars, consts),
            Prop::And(l, r) | Prop::Or(l, r) | Prop::Implies(l, r) | Prop::Iff(l, r) => {
                l.collect(vars, consts);
                r.collect(vars, consts);
            }
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let (mut v, mut c) = (BTreeSet::new(), BTreeSet::new());
        self.collect(&mut v, &mut c);
        v
    }

    pub fn constants(&self) -> BTreeSet<String> {
        let (mut v, mut c) = (BTreeSet::new(), BTreeSet::new());
        self.collect(&mut v, &mut c);
        c
    }

    fn precedence(&self) -> u16 {
        match self {
            Prop::Atom(..) => 0,
            Prop::Not(_) => 350,
            Prop::And(..) => 780,
            Prop::Or(..) => 790,
            Prop::Implies(..) | Prop::Iff(..) => 800,
        }
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prec = self.precedence();
        let side = |f: &mut fmt::Formatter<'_>, p: &Prop, right: bool| {
            let same_op = core::mem::discriminant(p) == core::mem::discriminant(self);
            let right_assoc = matches!(self, Prop::And(..) | Prop::Or(..) | Prop::Implies(..));
            let bare = p.precedence() < prec || (right && same_op && right_assoc);
            if bare {
                write!(f, "{p}")
            } else {
                write!(f, "({p})")
            }
        };
        let (op, l, r) = match self {
            Prop::Atom(rel, l, r) => return write!(f, "{l} {} {r}", rel.symbol()),
            Prop::Not(p) => {
                f.write_str("-")?;
                return if matches!(**p, Prop::Not(_)) {
                    write!(f, "{p}")
                } else {
                    write!(f, "({p})")
                };
            }
            Prop::And(l, r) => ("&", l, r),
            Prop::Or(l, r) => ("|", l, r),
            Prop::Implies(l, r) => ("->", l, r),
            Prop::Iff(l, r) => ("<->", l, r),
        };
        side(f, l, false)?;
        write!(f, " {op} ")?;
        side(f, r, true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub prop: Prop,
    #[serde(default)]
    pub label: Option<String>,
}

impl Clause {
    pub fn new(prop: Prop) -> Self {
        Clause { prop, label: None }
    }

    pub fn labelled(label: &str, prop: Prop) -> Self {
        Clause {
            prop,
            label: Some(label.into()),
        }
    }
}

/// Assumptions and goals. A model refutes the problem when it satisfies
/// every assumption and falsifies every goal. `class` restricts the search
/// to algebras of a class; it must be implied by the assumptions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HornProblem {
    pub assumptions: Vec<Clause>,
    pub goals: Vec<Clause>,
    #[serde(default)]
    pub class: ClassFilter,
}

impl HornProblem {
    pub fn constants(&self) -> BTreeSet<String> {
        self.assumptions
            .iter()
            .chain(&self.goals)
            .flat_map(|c| c.prop.constants())
            .collect()
    }

    pub fn max_clause_vars(&self) -> usize {
        self.assumptions
            .iter()
            .chain(&self.goals)
            .map(|c| c.prop.vars().len())
            .max()
            .unwrap_or(0)
    }
}

/// Output options for [`HornProblem::to_prover9`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Prover9Style {
    /// Emit `# label(..)` attributes.
    pub labels: bool,
    /// Emit a `% class:` directive.
    pub class: bool,
}

/// Column at which labelled clause lines end.
const CLAUSE_COLUMN: usize = 36;

impl HornProblem {
    pub fn to_prover9(&self, style: Prover9Style) -> String {
        let mut out = String::new();
        if style.class && !self.class.required.is_empty() {
            out.push_str(&format!("% class: {}\n", self.class));
        }
        out.push_str("op(500, infix, \"==>\").\n");
        for (name, clauses) in [("assumptions", &self.assumptions), ("goals", &self.goals)] {
            out.push_str(&format!("formulas({name}).\n"));
            for c in clauses {
                let mut line = format!("   {}", c.prop);
                match (&c.label, style.labels) {
                    (Some(l), true) => line.push_str(&format!(" # label({l}).")),
                    _ => line.push('.'),
                }
                if c.label.is_some() && !style.labels {
                    while line.len() < CLAUSE_COLUMN {
                        line.push(' ');
                    }
                }
                out.push_str(&line);
                out.push('\n');
            }
            out.push_str("end_of_list.\n");
        }
        out
    }
}

impl fmt::Display for HornProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_prover9(Prover9Style {
            labels: true,
            class: true,
        }))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HornError {
    #[error("line {line}: unexpected character `{ch}`")]
    Lexical { line: usize, ch: char },
    #[error("line {line}: expected {expected}, found {found}")]
    Syntax {
        line: usize,
        expected: String,
        found: String,
    },
    #[error("line {line}: only `op(500, infix, \"==>\")` may be declared")]
    Operator { line: usize },
    #[error("line {line}: unknown list `{name}`")]
    List { line: usize, name: String },
    #[error("bad class directive: {0}")]
    Class(String),
    #[error("unknown numeral `{0}`")]
    Numeral(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Name(String),
    Str(String),
    LParen,
    RParen,
    Comma,
    Dot,
    Plus,
    Arrow,
    Ge,
    Eq,
    Ne,
    And,
    Or,
    Implies,
    Iff,
    Not,
    Hash,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Name(n) => write!(f, "`{n}`"),
            Tok::Str(s) => write!(f, "\"{s}\""),
            Tok::End => f.write_str("end of input"),
            other => {
                let s = match other {
                    Tok::LParen => "(",
                    Tok::RParen => ")",
                    Tok::Comma => ",",
                    Tok::Dot => ".",
                    Tok::Plus => "+",
                    Tok::Arrow => "==>",
                    Tok::Ge => ">=",
                    Tok::Eq => "=",
                    Tok::Ne => "!=",
                    Tok::And => "&",
                    Tok::Or => "|",
                    Tok::Implies => "->",
                    Tok::Iff => "<->",
                    Tok::Not => "-",
                    _ => "#",
                };
                write!(f, "`{s}`")
            }
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, HornError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('%').next().unwrap_or("");
        let chars: Vec<char> = content.chars().collect();
        let mut p = 0;
        let starts = |p: usize, s: &str| s.chars().enumerate().all(|(k, c)| chars.get(p + k) == Some(&c));
        while p < chars.len() {
            let c = chars[p];
            if c.is_whitespace() {
                p += 1;
                continue;
            }
            if c.is_ascii_alphanumeric() || c == '_' || c == '$' {
                let start = p;
                while p < chars.len() && (chars[p].is_ascii_alphanumeric() || chars[p] == '_' || chars[p] == '$') {
                    p += 1;
                }
                out.push((Tok::Name(chars[start..p].iter().collect()), line));
                continue;
            }
            if c == '"' {
                let start = p + 1;
                let end = chars[start..]
                    .iter()
                    .position(|&ch| ch == '"')
                    .ok_or(HornError::Lexical { line, ch: '"' })?;
                out.push((Tok::Str(chars[start..start + end].iter().collect()), line));
                p = start + end + 1;
                continue;
            }
            let (tok, len) = if starts(p, "<->") {
                (Tok::Iff, 3)
            } else if starts(p, "==>") {
                (Tok::Arrow, 3)
            } else if starts(p, "->") {
                (Tok::Implies, 2)
            } else if starts(p, ">=") {
                (Tok::Ge, 2)
            } else if starts(p, "!=") {
                (Tok::Ne, 2)
            } else {
                let t = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    '.' => Tok::Dot,
                    '+' => Tok::Plus,
                    '=' => Tok::Eq,
                    '&' => Tok::And,
                    '|' => Tok::Or,
                    '-' => Tok::Not,
                    '#' => Tok::Hash,
                    _ => return Err(HornError::Lexical { line, ch: c }),
                };
                (t, 1)
            };
            out.push((tok, line));
            p += len;
        }
    }
    let last = text.lines().count().max(1);
    out.push((Tok::End, last));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn line(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> HornError {
        HornError::Syntax {
            line: self.line(),
            expected: expected.into(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<(), HornError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn name(&mut self, expected: &str) -> Result<String, HornError> {
        match self.peek().clone() {
            Tok::Name(n) => {
                self.bump();
                Ok(n)
            }
            _ => Err(self.error(expected)),
        }
    }

    fn unit(&mut self) -> Result<Term, HornError> {
        match self.peek().clone() {
            Tok::LParen => {
                self.bump();
                let t = self.term()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(t)
            }
            Tok::Name(n) => {
                self.bump();
                if n == "0" {
                    Ok(Term::Zero)
                } else if n.chars().next().is_some_and(|c| c.is_ascii_digit()) && n != "1" {
                    Err(HornError::Numeral(n))
                } else {
                    Ok(Term::name(&n))
                }
            }
            _ => Err(self.error("a term")),
        }
    }

    /// `+` is left associative; `==>` takes exactly two units.
    fn term(&mut self) -> Result<Term, HornError> {
        let first = self.unit()?;
        match self.peek() {
            Tok::Arrow => {
                self.bump();
                let rhs = self.unit()?;
                if matches!(self.peek(), Tok::Plus | Tok::Arrow) {
                    return Err(self.error("parentheses around `==>`"));
                }
                Ok(Term::imp(first, rhs))
            }
            Tok::Plus => {
                let mut acc = first;
                while *self.peek() == Tok::Plus {
                    self.bump();
                    acc = Term::add(acc, self.unit()?);
                }
                if *self.peek() == Tok::Arrow {
                    return Err(self.error("parentheses around `+`"));
                }
                Ok(acc)
            }
            _ => Ok(first),
        }
    }

    fn atom(&mut self) -> Result<Prop, HornError> {
        let save = self.pos;
        if let Ok(lhs) = self.term() {
            let rel = match self.peek() {
                Tok::Eq => Some(Rel::Eq),
                Tok::Ne => Some(Rel::Ne),
                Tok::Ge => Some(Rel::Ge),
                _ => None,
            };
            if let Some(rel) = rel {
                self.bump();
                let rhs = self.term()?;
                return Ok(Prop::Atom(rel, lhs, rhs));
            }
        }
        self.pos = save;
        if *self.peek() == Tok::LParen {
            self.bump();
            let p = self.prop()?;
            self.expect(Tok::RParen, "`)`")?;
            return Ok(p);
        }
        self.term()?;
        Err(self.error("`=`, `!=` or `>=`"))
    }

    fn negation(&mut self) -> Result<Prop, HornError> {
        if *self.peek() == Tok::Not {
            self.bump();
            return Ok(Prop::Not(Box::new(self.negation()?)));
        }
        self.atom()
    }

    fn conjunction(&mut self) -> Result<Prop, HornError> {
        let lhs = self.negation()?;
        if *self.peek() == Tok::And {
            self.bump();
            return Ok(Prop::and(lhs, self.conjunction()?));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Prop, HornError> {
        let lhs = self.conjunction()?;
        if *self.peek() == Tok::Or {
            self.bump();
            return Ok(Prop::Or(Box::new(lhs), Box::new(self.disjunction()?)));
        }
        Ok(lhs)
    }

    fn prop(&mut self) -> Result<Prop, HornError> {
        let lhs = self.disjunction()?;
        match self.peek() {
            Tok::Implies => {
                self.bump();
                Ok(Prop::implies(lhs, self.prop()?))
            }
            Tok::Iff => {
                self.bump();
                Ok(Prop::iff(lhs, self.disjunction()?))
            }
            _ => Ok(lhs),
        }
    }

    fn clause(&mut self) -> Result<Clause, HornError> {
        let prop = self.prop()?;
        let mut label = None;
        while *self.peek() == Tok::Hash {
            self.bump();
            let attr = self.name("an attribute")?;
            self.expect(Tok::LParen, "`(`")?;
            let value = match self.bump() {
                Tok::Name(n) | Tok::Str(n) => n,
                _ => return Err(self.error("an attribute value")),
            };
            self.expect(Tok::RParen, "`)`")?;
            if attr == "label" {
                label = Some(value);
            }
        }
        self.expect(Tok::Dot, "`.`")?;
        Ok(Clause { prop, label })
    }

    fn problem(&mut self) -> Result<HornProblem, HornError> {
        let mut problem = HornProblem::default();
        loop {
            let line = self.line();
            match self.peek().clone() {
                Tok::End => return Ok(problem),
                Tok::Name(n) if n == "op" => {
                    let expected = [
                        Tok::Name("op".into()),
                        Tok::LParen,
                        Tok::Name("500".into()),
                        Tok::Comma,
                        Tok::Name("infix".into()),
                        Tok::Comma,
                        Tok::Str("==>".into()),
                        Tok::RParen,
                        Tok::Dot,
                    ];
                    for t in expected {
                        if self.bump() != t {
                            return Err(HornError::Operator { line });
                        }
                    }
                }
                Tok::Name(n) if n == "formulas" => {
                    self.bump();
                    self.expect(Tok::LParen, "`(`")?;
                    let list = self.name("a list name")?;
                    self.expect(Tok::RParen, "`)`")?;
                    self.expect(Tok::Dot, "`.`")?;
                    let mut clauses = Vec::new();
                    while *self.peek() != Tok::Name("end_of_list".into()) {
                        if *self.peek() == Tok::End {
                            return Err(self.error("`end_of_list`"));
                        }
                        clauses.push(self.clause()?);
                    }
                    self.bump();
                    self.expect(Tok::Dot, "`.`")?;
                    match list.as_str() {
                        "assumptions" | "sos" => problem.assumptions.extend(clauses),
                        "goals" => problem.goals.extend(clauses),
                        _ => return Err(HornError::List { line, name: list }),
                    }
                }
                _ => return Err(self.error("`op` or `formulas`")),
            }
        }
    }
}

/// Parses a problem file. A `% class: <filter>` comment line sets the class.
pub fn parse_problem(text: &str) -> Result<HornProblem, HornError> {
    let mut parser = Parser {
        toks: lex(text)?,
        pos: 0,
    };
    let mut problem = parser.problem()?;
    for line in text.lines() {
        if let Some(rest) = line.trim_start().strip_prefix("% class:") {
            problem.class = rest
                .trim()
                .parse()
                .map_err(|_| HornError::Class(rest.trim().into()))?;
        }
    }
    Ok(problem)
}

/// Parses a single clause, with or without the final `.`.
pub fn parse_clause(text: &str) -> Result<Clause, HornError> {
    let t = text.trim();
    let owned;
    let t = if t.ends_with('.') {
        t
    } else {
        owned = format!("{t}.");
        &owned
    };
    let mut parser = Parser {
        toks: lex(t)?,
        pos: 0,
    };
    let c = parser.clause()?;
    if *parser.peek() != Tok::End {
        return Err(parser.error("end of clause"));
    }
    Ok(c)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HornEvalError {
    #[error("`{0}` is not interpreted")]
    Unbound(String),
}

pub type Interpretation = BTreeMap<String, usize>;

pub fn eval_term(
    t: &Term,
    alg: &FiniteAlgebra,
    consts: &Interpretation,
    vars: &Interpretation,
) -> Result<usize, HornEvalError> {
    Ok(match t {
        Term::Zero => 0,
        Term::Var(v) => *vars.get(v).ok_or_else(|| HornEvalError::Unbound(v.clone()))?,
        Term::Const(c) => *consts.get(c).ok_or_else(|| HornEvalError::Unbound(c.clone()))?,
        Term::Add(l, r) => alg.add(eval_term(l, alg, consts, vars)?, eval_term(r, alg, consts, vars)?),
        Term::Imp(l, r) => alg.imp(eval_term(l, alg, consts, vars)?, eval_term(r, alg, consts, vars)?),
    })
}

pub fn eval_prop(
    p: &Prop,
    alg: &FiniteAlgebra,
    consts: &Interpretation,
    vars: &Interpretation,
) -> Result<bool, HornEvalError> {
    let ev = |q: &Prop| eval_prop(q, alg, consts, vars);
    Ok(match p {
        Prop::Atom(rel, l, r) => {
            let (x, y) = (eval_term(l, alg, consts, vars)?, eval_term(r, alg, consts, vars)?);
            match rel {
                Rel::Eq => x == y,
                Rel::Ne => x != y,
                Rel::Ge => alg.ge(x, y),
            }
        }
        Prop::Not(q) => !ev(q)?,
        Prop::And(l, r) => ev(l)? && ev(r)?,
        Prop::Or(l, r) => ev(l)? || ev(r)?,
        Prop::Implies(l, r) => !ev(l)? || ev(r)?,
        Prop::Iff(l, r) => ev(l)? == ev(r)?,
    })
}

/// The first assignment of the clause's variables falsifying it, if any.
pub fn falsifying_assignment(
    p: &Prop,
    alg: &FiniteAlgebra,
    consts: &Interpretation,
) -> Result<Option<Interpretation>, HornEvalError> {
    let vars: Vec<String> = p.vars().into_iter().collect();
    let n = alg.size();
    let mut idx = vec![0usize; vars.len()];
    loop {
        let a: Interpretation = vars.iter().cloned().zip(idx.iter().copied()).collect();
        if !eval_prop(p, alg, consts, &a)? {
            return Ok(Some(a));
        }
        let mut i = vars.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            idx[i] += 1;
            if idx[i] < n {
                break;
            }
            idx[i] = 0;
        }
    }
}

/// Whether the universal closure of `p` holds.
pub fn holds(p: &Prop, alg: &FiniteAlgebra, consts: &Interpretation) -> Result<bool, HornEvalError> {
    Ok(falsifying_assignment(p, alg, consts)?.is_none())
}

/// Whether `(alg, consts)` satisfies every assumption and falsifies every goal.
pub fn is_refutation(
    problem: &HornProblem,
    alg: &FiniteAlgebra,
    consts: &Interpretation,
) -> Result<bool, HornEvalError> {
    for c in &problem.assumptions {
        if !holds(&c.prop, alg, consts)? {
            return Ok(false);
        }
    }
    for g in &problem.goals {
        if holds(&g.prop, alg, consts)? {
            return Ok(false);
        }
    }
    Ok(!problem.goals.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn term_printing_parenthesizes_compound_subterms() {
        let c = parse_clause("(x + y) + z = x + (y + z)").unwrap();
        assert_eq!(c.prop.to_string(), "(x + y) + z = x + (y + z)");
        let c = parse_clause("x + y + z = 0").unwrap();
        assert_eq!(c.prop.to_string(), "(x + y) + z = 0");
        let c = parse_clause("x + y >= z <-> x >= y ==> z").unwrap();
        assert_eq!(c.prop.to_string(), "x + y >= z <-> x >= y ==> z");
    }

    #[test]
    fn connective_precedence() {
        let c = parse_clause("x >= y & y >= z -> x >= z.").unwrap();
        assert!(matches!(c.prop, Prop::Implies(ref l, _) if matches!(**l, Prop::And(..))));
        assert_eq!(c.prop.to_string(), "x >= y & y >= z -> x >= z");
        let c = parse_clause("(x = y -> y = x) & -(x != x)").unwrap();
        assert_eq!(c.prop.to_string(), "(x = y -> y = x) & -(x != x)");
        let c = parse_clause("((x = 0))").unwrap();
        assert_eq!(c.prop.to_string(), "x = 0");
    }

    #[test]
    fn names_and_errors() {
        let c = parse_clause("a ==> b = a").unwrap();
        assert_eq!(c.prop.constants().len(), 2);
        assert!(c.prop.vars().is_empty());
        assert!(parse_clause("x + y ==> z = 0").is_err());
        assert!(parse_clause("x ==> y ==> z = 0").is_err());
        assert!(parse_clause("x + 2 = x").is_err());
        assert!(parse_clause("x + y").is_err());
        assert_eq!(parse_clause("x + 1 = 1 # label(ann).").unwrap().label.as_deref(), Some("ann"));
    }

    #[test]
    fn file_round_trip() {
        let text = "% class: hoop\nop(500, infix, \"==>\").\nformulas(assumptions).\n   x + 0 = x # label(m3).\n   a ==> b = a.\nend_of_list.\nformulas(goals).\n   a = 0.\nend_of_list.\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.assumptions.len(), 2);
        assert_eq!(p.goals.len(), 1);
        assert_eq!(p.class.to_string(), "hoop");
        assert_eq!(p.to_string(), text);
        assert_eq!(parse_problem(&p.to_string()).unwrap(), p);
        assert!(parse_problem("op(700, infix, \"==>\").").is_err());
        assert!(parse_problem("formulas(usable).\nend_of_list.\n").is_err());
    }

    #[test]
    fn evaluation() {
        let chain = FiniteAlgebra::drastic_chain(4);
        let cwc = parse_clause("x + (x ==> y) = y + (y ==> x)").unwrap().prop;
        assert!(!holds(&cwc, &chain, &Interpretation::new()).unwrap());
        let l3 = FiniteAlgebra::lukasiewicz(3);
        assert!(holds(&cwc, &l3, &Interpretation::new()).unwrap());
        let ann = parse_clause("x + 1 = 1").unwrap().prop;
        let top: Interpretation = [("1".to_string(), 2)].into();
        assert!(holds(&ann, &l3, &top).unwrap());
        let mid: Interpretation = [("1".to_string(), 1)].into();
        assert!(!holds(&ann, &l3, &mid).unwrap());
        assert!(holds(&ann, &l3, &Interpretation::new()).is_err());
    }
}
