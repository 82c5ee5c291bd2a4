//! Formulas of the propositional language with truth `0`, falsity `1`,
//! implication `-o`, conjunction `+` and postfix halving `/2`.
//!
//! Concrete syntax, tightest binding first:
//!
//! | operator | meaning     | associativity |
//! |----------|-------------|---------------|
//! | `A/2`    | halving     | postfix       |
//! | `A + B`  | conjunction | left          |
//! | `A -o B` | implication | right         |
//!
//! Schema patterns additionally admit metavariables written `?A`.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

/// A formula of the language with halving. A formula without [`Formula::Half`]
/// belongs to the halving-free sublanguage.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Formula {
    /// The constant `0`.
    Truth,
    /// The constant `1`.
    Falsity,
    Var(String),
    Imp(Box<Formula>, Box<Formula>),
    Conj(Box<Formula>, Box<Formula>),
    Half(Box<Formula>),
}

impl Formula {
    pub fn var(name: &str) -> Self {
        Formula::Var(name.to_string())
    }

    pub fn imp(lhs: Formula, rhs: Formula) -> Self {
        Formula::Imp(Box::new(lhs), Box::new(rhs))
    }

    pub fn conj(lhs: Formula, rhs: Formula) -> Self {
        Formula::Conj(Box::new(lhs), Box::new(rhs))
    }

    pub fn half(body: Formula) -> Self {
        Formula::Half(Box::new(body))
    }

    /// `f -o 1`.
    pub fn negate(self) -> Self {
        Formula::imp(self, Formula::Falsity)
    }

    pub fn contains_half(&self) -> bool {
        match self {
            Formula::Truth | Formula::Falsity | Formula::Var(_) => false,
            Formula::Imp(l, r) | Formula::Conj(l, r) => l.contains_half() || r.contains_half(),
            Formula::Half(_) => true,
        }
    }

    pub fn contains_falsity(&self) -> bool {
        match self {
            Formula::Falsity => true,
            Formula::Truth | Formula::Var(_) => false,
            Formula::Imp(l, r) | Formula::Conj(l, r) => {
                l.contains_falsity() || r.contains_falsity()
            }
            Formula::Half(b) => b.contains_falsity(),
        }
    }

    /// Variables occurring in the formula, in sorted order.
    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Truth | Formula::Falsity => {}
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Imp(l, r) | Formula::Conj(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
            Formula::Half(b) => b.collect_vars(out),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Truth | Formula::Falsity | Formula::Var(_) => 0,
            Formula::Imp(l, r) | Formula::Conj(l, r) => 1 + l.depth().max(r.depth()),
            Formula::Half(b) => 1 + b.depth(),
        }
    }
}

/// Convenience wrapper for [`Formula::negate`].
pub fn negate(f: Formula) -> Formula {
    f.negate()
}

/// A formula that may contain metavariables, used to state axiom schemata.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pattern {
    Truth,
    Falsity,
    Var(String),
    Meta(String),
    Imp(Box<Pattern>, Box<Pattern>),
    Conj(Box<Pattern>, Box<Pattern>),
    Half(Box<Pattern>),
}

/// Metavariable name to formula.
pub type Substitution = BTreeMap<String, Formula>;

impl Pattern {
    pub fn metavars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_metavars(&mut out);
        out
    }

    fn collect_metavars(&self, out: &mut BTreeSet<String>) {
        match self {
            Pattern::Truth | Pattern::Falsity | Pattern::Var(_) => {}
            Pattern::Meta(m) => {
                out.insert(m.clone());
            }
            Pattern::Imp(l, r) | Pattern::Conj(l, r) => {
                l.collect_metavars(out);
                r.collect_metavars(out);
            }
            Pattern::Half(b) => b.collect_metavars(out),
        }
    }

    /// Replaces every metavariable by its image. Returns `None` if some
    /// metavariable is unbound.
    pub fn substitute(&self, sigma: &Substitution) -> Option<Formula> {
        Some(match self {
            Pattern::Truth => Formula::Truth,
            Pattern::Falsity => Formula::Falsity,
            Pattern::Var(v) => Formula::Var(v.clone()),
            Pattern::Meta(m) => sigma.get(m)?.clone(),
            Pattern::Imp(l, r) => Formula::imp(l.substitute(sigma)?, r.substitute(sigma)?),
            Pattern::Conj(l, r) => Formula::conj(l.substitute(sigma)?, r.substitute(sigma)?),
            Pattern::Half(b) => Formula::half(b.substitute(sigma)?),
        })
    }

    /// Parses pattern syntax: formula syntax plus `?Name` metavariables.
    pub fn parse(text: &str) -> Result<Pattern, ParseError> {
        Parser::new(text, true)?.parse_all()
    }
}

impl From<&Formula> for Pattern {
    fn from(f: &Formula) -> Self {
        match f {
            Formula::Truth => Pattern::Truth,
            Formula::Falsity => Pattern::Falsity,
            Formula::Var(v) => Pattern::Var(v.clone()),
            Formula::Imp(l, r) => Pattern::Imp(Box::new((&**l).into()), Box::new((&**r).into())),
            Formula::Conj(l, r) => {
                Pattern::Conj(Box::new((&**l).into()), Box::new((&**r).into()))
            }
            Formula::Half(b) => Pattern::Half(Box::new((&**b).into())),
        }
    }
}

/// First-order matching of `pattern` against `target`. Repeated metavariables
/// must be bound to structurally equal subformulas.
pub fn match_schema(pattern: &Pattern, target: &Formula) -> Option<Substitution> {
    let mut sigma = Substitution::new();
    if match_into(pattern, target, &mut sigma) {
        Some(sigma)
    } else {
        None
    }
}

fn match_into(pattern: &Pattern, target: &Formula, sigma: &mut Substitution) -> bool {
    match (pattern, target) {
        (Pattern::Meta(m), t) => match sigma.get(m) {
            Some(bound) => bound == t,
            None => {
                sigma.insert(m.clone(), t.clone());
                true
            }
        },
        (Pattern::Truth, Formula::Truth) | (Pattern::Falsity, Formula::Falsity) => true,
        (Pattern::Var(a), Formula::Var(b)) => a == b,
        (Pattern::Imp(pl, pr), Formula::Imp(tl, tr))
        | (Pattern::Conj(pl, pr), Formula::Conj(tl, tr)) => {
            match_into(pl, tl, sigma) && match_into(pr, tr, sigma)
        }
        (Pattern::Half(p), Formula::Half(t)) => match_into(p, t, sigma),
        _ => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("unexpected character {ch:?} at offset {pos}")]
    Lexical { pos: usize, ch: char },
    #[error("metavariable at offset {pos} is not allowed in an object formula")]
    Metavariable { pos: usize },
    #[error("syntax error at offset {pos}: expected {expected}, found {found}")]
    Syntax {
        pos: usize,
        expected: &'static str,
        found: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Zero,
    One,
    Ident(String),
    Meta(String),
    Lolli,
    Plus,
    Half,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Zero => f.write_str("`0`"),
            Tok::One => f.write_str("`1`"),
            Tok::Ident(s) => write!(f, "identifier `{s}`"),
            Tok::Meta(s) => write!(f, "metavariable `?{s}`"),
            Tok::Lolli => f.write_str("`-o`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Half => f.write_str("`/2`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str, allow_meta: bool) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let ident_end = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_alphanumeric() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let bad = || ParseError::Lexical {
            pos: i,
            ch: text[i..].chars().next().unwrap_or('?'),
        };
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'(' => out.push((i, Tok::LParen)),
            b')' => out.push((i, Tok::RParen)),
            b'+' => out.push((i, Tok::Plus)),
            b'-' if bytes.get(i + 1) == Some(&b'o') => {
                out.push((i, Tok::Lolli));
                i += 2;
                continue;
            }
            b'/' if bytes.get(i + 1) == Some(&b'2') => {
                out.push((i, Tok::Half));
                i += 2;
                continue;
            }
            b'0' | b'1' => {
                if bytes.get(i + 1).is_some_and(|b| b.is_ascii_alphanumeric()) {
                    return Err(ParseError::Lexical {
                        pos: i + 1,
                        ch: bytes[i + 1] as char,
                    });
                }
                out.push((i, if c == b'0' { Tok::Zero } else { Tok::One }));
            }
            b'?' => {
                if !allow_meta {
                    return Err(ParseError::Metavariable { pos: i });
                }
                if !bytes.get(i + 1).is_some_and(|b| b.is_ascii_alphabetic()) {
                    return Err(bad());
                }
                let end = ident_end(i + 1);
                out.push((i, Tok::Meta(text[i + 1..end].to_string())));
                i = end;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let end = ident_end(i);
                out.push((i, Tok::Ident(text[i..end].to_string())));
                i = end;
                continue;
            }
            _ => return Err(bad()),
        }
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn new(text: &str, allow_meta: bool) -> Result<Self, ParseError> {
        let toks = lex(text, allow_meta)?;
        if toks.len() == 1 {
            return Err(ParseError::Empty);
        }
        Ok(Parser { toks, at: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &'static str) -> ParseError {
        ParseError::Syntax {
            pos: self.pos(),
            expected,
            found: self.peek().to_string(),
        }
    }

    fn parse_all(mut self) -> Result<Pattern, ParseError> {
        let p = self.implication()?;
        if *self.peek() != Tok::End {
            return Err(self.error("`-o`, `+`, `/2` or end of input"));
        }
        Ok(p)
    }

    fn implication(&mut self) -> Result<Pattern, ParseError> {
        let lhs = self.conjunction()?;
        if *self.peek() == Tok::Lolli {
            self.bump();
            let rhs = self.implication()?;
            return Ok(Pattern::Imp(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Pattern, ParseError> {
        let mut acc = self.postfix()?;
        while *self.peek() == Tok::Plus {
            self.bump();
            let rhs = self.postfix()?;
            acc = Pattern::Conj(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn postfix(&mut self) -> Result<Pattern, ParseError> {
        let mut acc = self.atom()?;
        while *self.peek() == Tok::Half {
            self.bump();
            acc = Pattern::Half(Box::new(acc));
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Pattern, ParseError> {
        match self.peek().clone() {
            Tok::Zero => {
                self.bump();
                Ok(Pattern::Truth)
            }
            Tok::One => {
                self.bump();
                Ok(Pattern::Falsity)
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Pattern::Var(name))
            }
            Tok::Meta(name) => {
                self.bump();
                Ok(Pattern::Meta(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.implication()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("a formula")),
        }
    }
}

impl TryFrom<Pattern> for Formula {
    type Error = String;

    /// Fails with the name of the first metavariable found.
    fn try_from(p: Pattern) -> Result<Self, String> {
        Ok(match p {
            Pattern::Truth => Formula::Truth,
            Pattern::Falsity => Formula::Falsity,
            Pattern::Var(v) => Formula::Var(v),
            Pattern::Meta(m) => return Err(m),
            Pattern::Imp(l, r) => Formula::imp((*l).try_into()?, (*r).try_into()?),
            Pattern::Conj(l, r) => Formula::conj((*l).try_into()?, (*r).try_into()?),
            Pattern::Half(b) => Formula::half((*b).try_into()?),
        })
    }
}

/// Parses an object formula.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let p = Parser::new(text, false)?.parse_all()?;
    // The lexer already rejects metavariables in object mode.
    Ok(Formula::try_from(p).expect("object parse produced a metavariable"))
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

impl FromStr for Pattern {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Pattern::parse(s)
    }
}

// Printing is shared between formulas and patterns through a borrowed view.
enum View<'a, T> {
    Truth,
    Falsity,
    Var(&'a str),
    Meta(&'a str),
    Imp(&'a T, &'a T),
    Conj(&'a T, &'a T),
    Half(&'a T),
}

trait Viewable: Sized {
    fn view(&self) -> View<'_, Self>;
}

impl Viewable for Formula {
    fn view(&self) -> View<'_, Self> {
        match self {
            Formula::Truth => View::Truth,
            Formula::Falsity => View::Falsity,
            Formula::Var(v) => View::Var(v),
            Formula::Imp(l, r) => View::Imp(l, r),
            Formula::Conj(l, r) => View::Conj(l, r),
            Formula::Half(b) => View::Half(b),
        }
    }
}

impl Viewable for Pattern {
    fn view(&self) -> View<'_, Self> {
        match self {
            Pattern::Truth => View::Truth,
            Pattern::Falsity => View::Falsity,
            Pattern::Var(v) => View::Var(v),
            Pattern::Meta(m) => View::Meta(m),
            Pattern::Imp(l, r) => View::Imp(l, r),
            Pattern::Conj(l, r) => View::Conj(l, r),
            Pattern::Half(b) => View::Half(b),
        }
    }
}

const PREC_IMP: u8 = 1;
const PREC_CONJ: u8 = 2;
const PREC_HALF: u8 = 3;
const PREC_ATOM: u8 = 4;

fn prec<T: Viewable>(t: &T) -> u8 {
    match t.view() {
        View::Imp(..) => PREC_IMP,
        View::Conj(..) => PREC_CONJ,
        View::Half(_) => PREC_HALF,
        _ => PREC_ATOM,
    }
}

fn write_prec<T: Viewable>(t: &T, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let bracket = prec(t) < min;
    if bracket {
        f.write_str("(")?;
    }
    match t.view() {
        View::Truth => f.write_str("0")?,
        View::Falsity => f.write_str("1")?,
        View::Var(v) => f.write_str(v)?,
        View::Meta(m) => write!(f, "?{m}")?,
        View::Imp(l, r) => {
            write_prec(l, PREC_IMP + 1, f)?;
            f.write_str(" -o ")?;
            write_prec(r, PREC_IMP, f)?;
        }
        View::Conj(l, r) => {
            write_prec(l, PREC_CONJ, f)?;
            f.write_str(" + ")?;
            write_prec(r, PREC_CONJ + 1, f)?;
        }
        View::Half(b) => {
            write_prec(b, PREC_HALF, f)?;
            f.write_str("/2")?;
        }
    }
    if bracket {
        f.write_str(")")?;
    }
    Ok(())
}

/// Minimal-bracket rendering.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(self, PREC_IMP, f)
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prec(self, PREC_IMP, f)
    }
}

/// Minimal-bracket rendering as an owned string.
pub fn print(f: &Formula) -> String {
    f.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Formula {
        Formula::var(n)
    }

    #[test]
    fn redundant_brackets_example() {
        let bare = parse("A + B/2 -o C -o D + F").unwrap();
        let full = parse("(A + (B/2)) -o (C -o (D + F))").unwrap();
        assert_eq!(bare, full);
        assert_eq!(
            bare,
            Formula::imp(
                Formula::conj(v("A"), Formula::half(v("B"))),
                Formula::imp(v("C"), Formula::conj(v("D"), v("F")))
            )
        );
    }

    #[test]
    fn required_brackets_example() {
        let text = "(((A -o B) -o C) + D)/2";
        let expected = Formula::half(Formula::conj(
            Formula::imp(Formula::imp(v("A"), v("B")), v("C")),
            v("D"),
        ));
        assert_eq!(parse(text).unwrap(), expected);
        assert_eq!(print(&expected), text);
    }

    #[test]
    fn constants_and_precedence_laws() {
        assert_eq!(parse("0").unwrap(), Formula::Truth);
        assert_eq!(parse("1").unwrap(), Formula::Falsity);
        assert_eq!(parse("A + B/2").unwrap(), Formula::conj(v("A"), Formula::half(v("B"))));
        assert_eq!(
            parse("A -o B -o C").unwrap(),
            Formula::imp(v("A"), Formula::imp(v("B"), v("C")))
        );
        assert_eq!(
            parse("A + B + C").unwrap(),
            Formula::conj(Formula::conj(v("A"), v("B")), v("C"))
        );
        assert_eq!(parse("A/2/2").unwrap(), Formula::half(Formula::half(v("A"))));
    }

    #[test]
    fn printing_examples() {
        assert_eq!(print(&Formula::imp(v("A"), v("B"))), "A -o B");
        assert_eq!(print(&Formula::half(Formula::conj(v("A"), v("B")))), "(A + B)/2");
        assert_eq!(print(&Formula::conj(v("A"), Formula::half(v("B")))), "A + B/2");
        assert_eq!(
            print(&Formula::conj(v("A"), Formula::conj(v("B"), v("C")))),
            "A + (B + C)"
        );
        assert_eq!(print(&Formula::imp(Formula::imp(v("A"), v("B")), v("C"))), "(A -o B) -o C");
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse(""), Err(ParseError::Empty));
        assert_eq!(parse("   "), Err(ParseError::Empty));
        assert!(matches!(parse("A & B"), Err(ParseError::Lexical { pos: 2, ch: '&' })));
        assert!(matches!(parse("A -o"), Err(ParseError::Syntax { pos: 4, .. })));
        assert!(matches!(parse("(A + B"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("A B"), Err(ParseError::Syntax { pos: 2, .. })));
        assert!(matches!(parse("A/3"), Err(ParseError::Lexical { .. })));
        assert!(matches!(parse("?A"), Err(ParseError::Metavariable { pos: 0 })));
        assert!(matches!(parse("12"), Err(ParseError::Lexical { .. })));
    }

    #[test]
    fn negation() {
        assert_eq!(negate(v("A")), Formula::imp(v("A"), Formula::Falsity));
        assert_eq!(
            negate(Formula::Falsity),
            Formula::imp(Formula::Falsity, Formula::Falsity)
        );
        let double = negate(negate(v("A")));
        assert_eq!(double, parse("(A -o 1) -o 1").unwrap());
    }

    #[test]
    fn schema_matching() {
        let p = Pattern::parse("?A -o ?A").unwrap();
        let sigma = match_schema(&p, &parse("(P + Q) -o (P + Q)").unwrap()).unwrap();
        assert_eq!(sigma.get("A"), Some(&parse("P + Q").unwrap()));

        let p = Pattern::parse("?A/2 -o ?A").unwrap();
        assert_eq!(match_schema(&p, &parse("P/2 -o Q").unwrap()), None);

        let p = Pattern::parse("?A + (?A -o ?B)").unwrap();
        let target = parse("P + (P -o (P + P))").unwrap();
        let sigma = match_schema(&p, &target).unwrap();
        assert_eq!(sigma.get("A"), Some(&v("P")));
        assert_eq!(sigma.get("B"), Some(&parse("P + P").unwrap()));
        assert_eq!(p.substitute(&sigma), Some(target));
    }

    #[test]
    fn pattern_printing() {
        let p = Pattern::parse("(?A -o 1) -o 1").unwrap();
        assert_eq!(p.to_string(), "(?A -o 1) -o 1");
        assert_eq!(p.metavars().into_iter().collect::<Vec<_>>(), ["A"]);
    }
}
