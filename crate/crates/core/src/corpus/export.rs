//! Prover9 and TPTP renderings of bank problems, and a small structural
//! reader for the TPTP first-order form used to check the latter.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{Expected, Problem, LAW_LABELS};
use crate::horn::{Prop, Prover9Style, Rel, Term};

/// The problem as a Prover9/Mace4 input file.
pub fn export_prover9(p: &Problem) -> String {
    p.statement.to_prover9(Prover9Style::default())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FofTerm {
    Var(String),
    App(String, Vec<FofTerm>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FofConn {
    And,
    Or,
    Implies,
    Iff,
}

impl FofConn {
    fn symbol(self) -> &'static str {
        match self {
            FofConn::And => "&",
            FofConn::Or => "|",
            FofConn::Implies => "=>",
            FofConn::Iff => "<=>",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FofFormula {
    Eq(FofTerm, FofTerm),
    Ne(FofTerm, FofTerm),
    Pred(String, Vec<FofTerm>),
    Not(Box<FofFormula>),
    Bin(FofConn, Box<FofFormula>, Box<FofFormula>),
    Forall(Vec<String>, Box<FofFormula>),
    Exists(Vec<String>, Box<FofFormula>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FofStatement {
    pub name: String,
    pub role: String,
    pub formula: FofFormula,
}

impl fmt::Display for FofTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FofTerm::Var(v) => f.write_str(v),
            FofTerm::App(name, args) => {
                f.write_str(name)?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (i, a) in args.iter().enumerate() {
                        if i > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for FofFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FofFormula::Eq(l, r) => write!(f, "{l} = {r}"),
            FofFormula::Ne(l, r) => write!(f, "{l} != {r}"),
            FofFormula::Pred(name, args) => write!(f, "{}", FofTerm::App(name.clone(), args.clone())),
            FofFormula::Not(p) => match **p {
                FofFormula::Eq(..) | FofFormula::Ne(..) => write!(f, "~ ({p})"),
                _ => write!(f, "~ {p}"),
            },
            FofFormula::Bin(c, l, r) => write!(f, "({l} {} {r})", c.symbol()),
            FofFormula::Forall(vs, p) => write!(f, "! [{}] : {p}", vs.join(",")),
            FofFormula::Exists(vs, p) => write!(f, "? [{}] : {p}", vs.join(",")),
        }
    }
}

fn term_to_fof(t: &Term) -> FofTerm {
    match t {
        Term::Zero => FofTerm::App("zero".into(), Vec::new()),
        Term::Const(c) if c == "1" => FofTerm::App("one".into(), Vec::new()),
        Term::Const(c) => FofTerm::App(c.clone(), Vec::new()),
        Term::Var(v) => FofTerm::Var(v.to_uppercase()),
        Term::Add(l, r) => FofTerm::App("plus".into(), alloc::vec![term_to_fof(l), term_to_fof(r)]),
        Term::Imp(l, r) => FofTerm::App("implies".into(), alloc::vec![term_to_fof(l), term_to_fof(r)]),
    }
}

fn prop_to_fof(p: &Prop) -> FofFormula {
    let bin = |c, l: &Prop, r: &Prop| FofFormula::Bin(c, Box::new(prop_to_fof(l)), Box::new(prop_to_fof(r)));
    match p {
        Prop::Atom(Rel::Eq, l, r) => FofFormula::Eq(term_to_fof(l), term_to_fof(r)),
        Prop::Atom(Rel::Ne, l, r) => FofFormula::Ne(term_to_fof(l), term_to_fof(r)),
        Prop::Atom(Rel::Ge, l, r) => FofFormula::Pred("geq".into(), alloc::vec![term_to_fof(l), term_to_fof(r)]),
        Prop::Not(q) => FofFormula::Not(Box::new(prop_to_fof(q))),
        Prop::And(l, r) => bin(FofConn::And, l, r),
        Prop::Or(l, r) => bin(FofConn::Or, l, r),
        Prop::Implies(l, r) => bin(FofConn::Implies, l, r),
        Prop::Iff(l, r) => bin(FofConn::Iff, l, r),
    }
}

/// The universal closure of a clause in first-order form.
pub fn clause_to_fof(p: &Prop) -> FofFormula {
    let body = prop_to_fof(p);
    let vars: Vec<String> = p.vars().iter().map(|v| v.to_uppercase()).collect();
    if vars.is_empty() {
        body
    } else {
        FofFormula::Forall(vars, Box::new(body))
    }
}

/// The statements of the TPTP rendering: structural laws as axioms, other
/// assumptions as hypotheses, and the goals (as a disjunction) as the
/// conjecture.
pub fn tptp_statements(p: &Problem) -> Vec<FofStatement> {
    let mut out = Vec::new();
    for (k, c) in p.statement.assumptions.iter().enumerate() {
        let (name, role) = match c.label.as_deref() {
            Some(l) if LAW_LABELS.contains(&l) => (l.to_string(), "axiom"),
            Some(l) => (l.to_string(), "hypothesis"),
            None => (format!("hyp{}", k + 1), "hypothesis"),
        };
        out.push(FofStatement {
            name,
            role: role.into(),
            formula: clause_to_fof(&c.prop),
        });
    }
    let goal = p
        .statement
        .goals
        .iter()
        .map(|g| clause_to_fof(&g.prop))
        .reduce(|a, b| FofFormula::Bin(FofConn::Or, Box::new(a), Box::new(b)));
    if let Some(goal) = goal {
        out.push(FofStatement {
            name: "goal".into(),
            role: "conjecture".into(),
            formula: goal,
        });
    }
    out
}

/// The problem as a TPTP file in first-order form.
pub fn export_tptp(p: &Problem) -> String {
    let status = match p.expected {
        Expected::Theorem => "Theorem",
        Expected::Countersatisfiable => "CounterSatisfiable",
    };
    let mut out = format!(
        "% Problem  : {}\n% English  : {}\n% Status   : {status}\n% Syntax   : plus/2, implies/2, geq/2, zero, one\n",
        p.id, p.title
    );
    for s in tptp_statements(p) {
        out.push_str(&format!("fof({}, {}, {}).\n", s.name, s.role, s.formula));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum FofError {
    #[error("line {line}: unexpected character `{ch}`")]
    Lexical { line: usize, ch: char },
    #[error("line {line}: expected {expected}")]
    Syntax { line: usize, expected: String },
    #[error("duplicate formula name `{0}`")]
    DuplicateName(String),
    #[error("unknown role `{0}`")]
    Role(String),
    #[error("formula `{name}` has free variable `{var}`")]
    FreeVariable { name: String, var: String },
    #[error("expected at most one conjecture, found {0}")]
    Conjectures(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum FTok {
    Upper(String),
    Lower(String),
    Sym(&'static str),
}

fn fof_lex(text: &str) -> Result<Vec<(FTok, usize)>, FofError> {
    const SYMS: [&str; 15] = ["<=>", "!=", "=>", "(", ")", "[", "]", ",", ".", ":", "&", "|", "~", "!", "?"];
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('%').next().unwrap_or("");
        let mut rest = content;
        while let Some(c) = rest.chars().next() {
            if c.is_whitespace() {
                rest = &rest[c.len_utf8()..];
                continue;
            }
            if c.is_ascii_alphanumeric() {
                let end = rest
                    .find(|ch: char| !(ch.is_ascii_alphanumeric() || ch == '_'))
                    .unwrap_or(rest.len());
                let word = rest[..end].to_string();
                out.push((
                    if c.is_ascii_uppercase() {
                        FTok::Upper(word)
                    } else {
                        FTok::Lower(word)
                    },
                    line,
                ));
                rest = &rest[end..];
                continue;
            }
            if let Some(s) = SYMS.iter().find(|s| rest.starts_with(**s)) {
                out.push((FTok::Sym(s), line));
                rest = &rest[s.len()..];
                continue;
            }
            if rest.starts_with('=') {
                out.push((FTok::Sym("="), line));
                rest = &rest[1..];
                continue;
            }
            return Err(FofError::Lexical { line, ch: c });
        }
    }
    Ok(out)
}

struct FofParser {
    toks: Vec<(FTok, usize)>,
    pos: usize,
}

impl FofParser {
    fn peek(&self) -> Option<&FTok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn err(&self, expected: &str) -> FofError {
        let line = self
            .toks
            .get(self.pos)
            .or(self.toks.last())
            .map_or(1, |t| t.1);
        FofError::Syntax {
            line,
            expected: expected.into(),
        }
    }

    fn sym(&mut self, s: &'static str) -> Result<(), FofError> {
        if self.peek() == Some(&FTok::Sym(s)) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("`{s}`")))
        }
    }

    fn at_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(FTok::Sym(t)) if *t == s)
    }

    fn lower(&mut self) -> Result<String, FofError> {
        match self.peek() {
            Some(FTok::Lower(w)) => {
                let w = w.clone();
                self.pos += 1;
                Ok(w)
            }
            _ => Err(self.err("a lower-case word")),
        }
    }

    fn term(&mut self) -> Result<FofTerm, FofError> {
        match self.peek().cloned() {
            Some(FTok::Upper(v)) => {
                self.pos += 1;
                Ok(FofTerm::Var(v))
            }
            Some(FTok::Lower(_)) => {
                let name = self.lower()?;
                let mut args = Vec::new();
                if self.at_sym("(") {
                    self.pos += 1;
                    loop {
                        args.push(self.term()?);
                        if self.at_sym(",") {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                    self.sym(")")?;
                }
                Ok(FofTerm::App(name, args))
            }
            _ => Err(self.err("a term")),
        }
    }

    fn unitary(&mut self) -> Result<FofFormula, FofError> {
        if self.at_sym("(") {
            self.pos += 1;
            let f = self.formula()?;
            self.sym(")")?;
            return Ok(f);
        }
        if self.at_sym("~") {
            self.pos += 1;
            return Ok(FofFormula::Not(Box::new(self.unitary()?)));
        }
        if self.at_sym("!") || self.at_sym("?") {
            let universal = self.at_sym("!");
            self.pos += 1;
            self.sym("[")?;
            let mut vars = Vec::new();
            loop {
                match self.peek().cloned() {
                    Some(FTok::Upper(v)) => {
                        self.pos += 1;
                        vars.push(v);
                    }
                    _ => return Err(self.err("a variable")),
                }
                if self.at_sym(",") {
                    self.pos += 1;
                } else {
                    break;
                }
            }
            self.sym("]")?;
            self.sym(":")?;
            let body = Box::new(self.unitary()?);
            return Ok(if universal {
                FofFormula::Forall(vars, body)
            } else {
                FofFormula::Exists(vars, body)
            });
        }
        let lhs = self.term()?;
        if self.at_sym("=") || self.at_sym("!=") {
            let eq = self.at_sym("=");
            self.pos += 1;
            let rhs = self.term()?;
            return Ok(if eq {
                FofFormula::Eq(lhs, rhs)
            } else {
                FofFormula::Ne(lhs, rhs)
            });
        }
        match lhs {
            FofTerm::App(name, args) => Ok(FofFormula::Pred(name, args)),
            FofTerm::Var(_) => Err(self.err("`=` after a variable")),
        }
    }

    fn formula(&mut self) -> Result<FofFormula, FofError> {
        let lhs = self.unitary()?;
        let conn = match self.peek() {
            Some(FTok::Sym("&")) => FofConn::And,
            Some(FTok::Sym("|")) => FofConn::Or,
            Some(FTok::Sym("=>")) => FofConn::Implies,
            Some(FTok::Sym("<=>")) => FofConn::Iff,
            _ => return Ok(lhs),
        };
        self.pos += 1;
        let mut acc = FofFormula::Bin(conn, Box::new(lhs), Box::new(self.unitary()?));
        if matches!(conn, FofConn::And | FofConn::Or) {
            while self.at_sym(conn.symbol()) {
                self.pos += 1;
                acc = FofFormula::Bin(conn, Box::new(acc), Box::new(self.unitary()?));
            }
        }
        Ok(acc)
    }
}

fn free_vars(f: &FofFormula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
    fn term(t: &FofTerm, bound: &[String], out: &mut BTreeSet<String>) {
        match t {
            FofTerm::Var(v) if !bound.contains(v) => {
                out.insert(v.clone());
            }
            FofTerm::Var(_) => {}
            FofTerm::App(_, args) => args.iter().for_each(|a| term(a, bound, out)),
        }
    }
    match f {
        FofFormula::Eq(l, r) | FofFormula::Ne(l, r) => {
            term(l, bound, out);
            term(r, bound, out);
        }
        FofFormula::Pred(_, args) => args.iter().for_each(|a| term(a, bound, out)),
        FofFormula::Not(p) => free_vars(p, bound, out),
        FofFormula::Bin(_, l, r) => {
            free_vars(l, bound, out);
            free_vars(r, bound, out);
        }
        FofFormula::Forall(vs, p) | FofFormula::Exists(vs, p) => {
            let depth = bound.len();
            bound.extend(vs.iter().cloned());
            free_vars(p, bound, out);
            bound.truncate(depth);
        }
    }
}

const ROLES: [&str; 6] = ["axiom", "hypothesis", "definition", "lemma", "theorem", "conjecture"];

/// Reads `fof(name, role, formula).` statements, checking that names are
/// unique, roles are known, formulas are closed and there is at most one
/// conjecture.
pub fn read_fof(text: &str) -> Result<Vec<FofStatement>, FofError> {
    let mut p = FofParser {
        toks: fof_lex(text)?,
        pos: 0,
    };
    let mut out: Vec<FofStatement> = Vec::new();
    while p.peek().is_some() {
        if p.lower()? != "fof" {
            return Err(p.err("`fof`"));
        }
        p.sym("(")?;
        let name = p.lower()?;
        p.sym(",")?;
        let role = p.lower()?;
        p.sym(",")?;
        let formula = p.formula()?;
        p.sym(")")?;
        p.sym(".")?;
        if out.iter().any(|s| s.name == name) {
            return Err(FofError::DuplicateName(name));
        }
        if !ROLES.contains(&role.as_str()) {
            return Err(FofError::Role(role));
        }
        let mut free = BTreeSet::new();
        free_vars(&formula, &mut Vec::new(), &mut free);
        if let Some(var) = free.into_iter().next() {
            return Err(FofError::FreeVariable { name, var });
        }
        out.push(FofStatement { name, role, formula });
    }
    let conjectures = out.iter().filter(|s| s.role == "conjecture").count();
    if conjectures > 1 {
        return Err(FofError::Conjectures(conjectures));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{bank, find};

    #[test]
    fn tptp_round_trips() {
        for p in bank() {
            let text = export_tptp(&p);
            let read = read_fof(&text).unwrap_or_else(|e| panic!("{}: {e}\n{text}", p.id));
            assert_eq!(read, tptp_statements(&p), "{}", p.id);
        }
    }

    #[test]
    fn lcl888_conjecture() {
        let text = export_tptp(&find("LCL888").unwrap());
        assert!(text.contains("fof(goal, conjecture, a = c)."));
        assert!(text.contains("fof(i, hypothesis, implies(a,b) = a)."));
        assert!(text.contains("fof(m1, axiom, ! [X,Y,Z] : plus(plus(X,Y),Z) = plus(X,plus(Y,Z)))."));
    }

    #[test]
    fn reader_rejects_malformed() {
        assert!(matches!(
            read_fof("fof(a, axiom, X = X)."),
            Err(FofError::FreeVariable { .. })
        ));
        assert!(read_fof("fof(a, axiom, ! [X] : X = X).\nfof(a, axiom, zero = zero).").is_err());
        assert!(read_fof("fof(a, wish, zero = zero).").is_err());
        assert!(read_fof("fof(a, axiom, (zero = zero).").is_err());
        assert!(read_fof("fof(a, conjecture, p).\nfof(b, conjecture, q).").is_err());
        let ok = read_fof("fof(a, axiom, ! [X] : (p(X) & q(X) & r)).").unwrap();
        assert_eq!(ok.len(), 1);
    }
}
