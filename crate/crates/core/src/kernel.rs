//! Sequents, derivations and a syntax-directed derivation checker.
//!
//! Contexts are multisets. The checker never searches: every node states its
//! rule and its conclusion, and axiom leaves record the instantiation of
//! their schema.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::formula::{match_schema, Formula, Pattern, Substitution};

/// `context |- conclusion` with a multiset context.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Sequent {
    pub context: Vec<Formula>,
    pub conclusion: Formula,
}

impl Sequent {
    pub fn new(context: Vec<Formula>, conclusion: Formula) -> Self {
        Sequent {
            context,
            conclusion,
        }
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.context.iter().chain(core::iter::once(&self.conclusion))
    }

    pub fn contains_half(&self) -> bool {
        self.formulas().any(Formula::contains_half)
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for f in self.formulas() {
            f.collect_vars(&mut out);
        }
        out
    }

    /// Parses `A, B |- C`; an empty context is written `|- C`.
    pub fn parse(text: &str) -> Result<Sequent, SequentParseError> {
        let (lhs, rhs) = text
            .split_once("|-")
            .ok_or(SequentParseError::MissingTurnstile)?;
        let conclusion = crate::formula::parse(rhs)?;
        let mut context = Vec::new();
        if !lhs.trim().is_empty() {
            for part in lhs.split(',') {
                context.push(crate::formula::parse(part)?);
            }
        }
        Ok(Sequent::new(context, conclusion))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SequentParseError {
    #[error("sequent has no `|-`")]
    MissingTurnstile,
    #[error(transparent)]
    Formula(#[from] crate::formula::ParseError),
}

impl FromStr for Sequent {
    type Err = SequentParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Sequent::parse(s)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.context.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        if self.context.is_empty() {
            f.write_str("|- ")?;
        } else {
            f.write_str(" |- ")?;
        }
        write!(f, "{}", self.conclusion)
    }
}

/// Multiset helpers over sorted vectors.
pub mod multiset {
    use super::*;

    pub fn sorted(items: &[Formula]) -> Vec<Formula> {
        let mut v = items.to_vec();
        v.sort();
        v
    }

    pub fn union(a: &[Formula], b: &[Formula]) -> Vec<Formula> {
        let mut v: Vec<Formula> = a.iter().chain(b).cloned().collect();
        v.sort();
        v
    }

    /// `a - b` if `b` is a sub-multiset of `a`.
    pub fn difference(a: &[Formula], b: &[Formula]) -> Option<Vec<Formula>> {
        let mut rest = sorted(a);
        for f in b {
            let at = rest.iter().position(|g| g == f)?;
            rest.remove(at);
        }
        Some(rest)
    }

    pub fn equal(a: &[Formula], b: &[Formula]) -> bool {
        a.len() == b.len() && sorted(a) == sorted(b)
    }

    /// Elements in surplus on either side: `(a - b, b - a)`.
    pub fn symmetric_surplus(a: &[Formula], b: &[Formula]) -> (Vec<Formula>, Vec<Formula>) {
        let mut left = sorted(a);
        let mut right = Vec::new();
        for f in sorted(b) {
            match left.iter().position(|g| *g == f) {
                Some(at) => {
                    left.remove(at);
                }
                None => right.push(f),
            }
        }
        (left, right)
    }
}

#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum AxiomId {
    ASM,
    EFQ,
    DNE,
    CWC,
    CSD,
    CON,
    HLB,
    HUB,
}

impl AxiomId {
    pub const ALL: [AxiomId; 8] = [
        AxiomId::ASM,
        AxiomId::EFQ,
        AxiomId::DNE,
        AxiomId::CWC,
        AxiomId::CSD,
        AxiomId::CON,
        AxiomId::HLB,
        AxiomId::HUB,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::ASM => "ASM",
            AxiomId::EFQ => "EFQ",
            AxiomId::DNE => "DNE",
            AxiomId::CWC => "CWC",
            AxiomId::CSD => "CSD",
            AxiomId::CON => "CON",
            AxiomId::HLB => "HLB",
            AxiomId::HUB => "HUB",
        }
    }

    /// The schema, without its ambient context.
    pub fn schema(self) -> Schema {
        let (ctx, concl): (&[&str], &str) = match self {
            AxiomId::ASM => (&["?A"], "?A"),
            AxiomId::EFQ => (&["1"], "?A"),
            AxiomId::DNE => (&["(?A -o 1) -o 1"], "?A"),
            AxiomId::CWC => (&["?A + (?A -o ?B)"], "?B + (?B -o ?A)"),
            AxiomId::CSD => (&["(?A -o ?B) -o ?B"], "(?B -o ?A) -o ?A"),
            AxiomId::CON => (&["?A"], "?A + ?A"),
            AxiomId::HLB => (&["?A/2", "?A/2"], "?A"),
            AxiomId::HUB => (&["?A/2 -o ?A"], "?A/2"),
        };
        let parse = |s: &str| Pattern::parse(s).expect("built-in schema parses");
        Schema {
            context: ctx.iter().map(|s| parse(s)).collect(),
            conclusion: parse(concl),
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An axiom schema `Γ, context |- conclusion` where `Γ` is arbitrary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Schema {
    pub context: Vec<Pattern>,
    pub conclusion: Pattern,
}

impl Schema {
    pub fn metavars(&self) -> BTreeSet<String> {
        let mut out = self.conclusion.metavars();
        for p in &self.context {
            out.extend(p.metavars());
        }
        out
    }

    /// The instance with empty ambient context.
    pub fn instantiate(&self, sigma: &Substitution) -> Option<Sequent> {
        let context = self
            .context
            .iter()
            .map(|p| p.substitute(sigma))
            .collect::<Option<Vec<_>>>()?;
        Some(Sequent::new(context, self.conclusion.substitute(sigma)?))
    }
}

/// The eight logics.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum Logic {
    ALi,
    ALc,
    LLi,
    LLc,
    IL,
    BL,
    CLi,
    CLc,
}

impl Logic {
    pub const ALL: [Logic; 8] = [
        Logic::ALi,
        Logic::ALc,
        Logic::LLi,
        Logic::LLc,
        Logic::IL,
        Logic::BL,
        Logic::CLi,
        Logic::CLc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Logic::ALi => "ALi",
            Logic::ALc => "ALc",
            Logic::LLi => "LLi",
            Logic::LLc => "LLc",
            Logic::IL => "IL",
            Logic::BL => "BL",
            Logic::CLi => "CLi",
            Logic::CLc => "CLc",
        }
    }

    /// The defining axiom schemata.
    pub fn axioms(self) -> BTreeSet<AxiomId> {
        use AxiomId::*;
        let extra: &[AxiomId] = match self {
            Logic::ALi => &[],
            Logic::ALc => &[DNE],
            Logic::LLi => &[CWC],
            Logic::LLc => &[CSD],
            Logic::IL => &[CON],
            Logic::BL => &[CON, DNE],
            Logic::CLi => &[CWC, HLB, HUB],
            Logic::CLc => &[CSD, HLB, HUB],
        };
        [ASM, EFQ].into_iter().chain(extra.iter().copied()).collect()
    }

    pub fn allows_halving(self) -> bool {
        matches!(self, Logic::CLi | Logic::CLc)
    }

    /// The logics this one immediately extends (incoming arrows of the
    /// extension diagram).
    pub fn extends(self) -> &'static [Logic] {
        match self {
            Logic::ALi => &[],
            Logic::ALc => &[Logic::ALi],
            Logic::LLi => &[Logic::ALi],
            Logic::LLc => &[Logic::LLi, Logic::ALc],
            Logic::IL => &[Logic::LLi],
            Logic::BL => &[Logic::IL, Logic::LLc],
            Logic::CLi => &[Logic::LLi],
            Logic::CLc => &[Logic::CLi, Logic::LLc],
        }
    }

    /// True if `self` is reachable from `other` along extension arrows
    /// (reflexive).
    pub fn includes(self, other: Logic) -> bool {
        self == other || self.extends().iter().any(|l| l.includes(other))
    }

    /// Axiom schemata usable as leaves: the defining axioms of this logic and
    /// of every logic it extends.
    pub fn admissible_axioms(self) -> BTreeSet<AxiomId> {
        let mut out = self.axioms();
        for l in self.extends() {
            out.extend(l.admissible_axioms());
        }
        out
    }
}

impl fmt::Display for Logic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown logic `{0}` (expected one of ALi, ALc, LLi, LLc, IL, BL, CLi, CLc)")]
pub struct UnknownLogic(pub String);

impl FromStr for Logic {
    type Err = UnknownLogic;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Logic::ALL
            .into_iter()
            .find(|l| l.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| UnknownLogic(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    ImpI,
    ImpE,
    ConjI,
    ConjE,
    Axiom {
        id: AxiomId,
        instantiation: BTreeMap<String, Formula>,
    },
}

impl Rule {
    pub fn arity(&self) -> usize {
        match self {
            Rule::ImpI => 1,
            Rule::ImpE | Rule::ConjI | Rule::ConjE => 2,
            Rule::Axiom { .. } => 0,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Rule::ImpI => "-oI".to_string(),
            Rule::ImpE => "-oE".to_string(),
            Rule::ConjI => "+I".to_string(),
            Rule::ConjE => "+E".to_string(),
            Rule::Axiom { id, .. } => id.name().to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub rule: Rule,
    #[serde(default)]
    pub premises: Vec<Derivation>,
    pub conclusion: Sequent,
}

impl Derivation {
    pub fn axiom(id: AxiomId, instantiation: Substitution, conclusion: Sequent) -> Self {
        Derivation {
            rule: Rule::Axiom { id, instantiation },
            premises: Vec::new(),
            conclusion,
        }
    }

    pub fn node(rule: Rule, premises: Vec<Derivation>, conclusion: Sequent) -> Self {
        Derivation {
            rule,
            premises,
            conclusion,
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(Derivation::size).sum::<usize>()
    }

    /// The node at a premise-index path.
    pub fn at(&self, path: &[usize]) -> Option<&Derivation> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.premises.get(i)?.at(rest),
        }
    }

    pub fn at_mut(&mut self, path: &[usize]) -> Option<&mut Derivation> {
        match path.split_first() {
            None => Some(self),
            Some((&i, rest)) => self.premises.get_mut(i)?.at_mut(rest),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StepError {
    #[error("rule {rule} takes {expected} premise(s), node has {found}")]
    Arity {
        rule: String,
        expected: usize,
        found: usize,
    },
    #[error("conclusion `{found}` does not have the shape {expected}")]
    Shape { expected: String, found: Formula },
    #[error("premise {premise} concludes `{found}`, rule requires `{expected}`")]
    PremiseConclusion {
        premise: usize,
        expected: Formula,
        found: Formula,
    },
    #[error("premise {premise} context lacks `{missing}`")]
    Discharge { premise: usize, missing: Formula },
    #[error(
        "context mismatch: conclusion has surplus [{}], premises have surplus [{}]",
        join(.conclusion_surplus), join(.premise_surplus)
    )]
    Context {
        conclusion_surplus: Vec<Formula>,
        premise_surplus: Vec<Formula>,
    },
    #[error("instantiation does not bind exactly the metavariables of {axiom}")]
    Instantiation { axiom: AxiomId },
    #[error("conclusion `{found}` is not an instance of {axiom} under the recorded instantiation")]
    Schema { axiom: AxiomId, found: Formula },
    #[error("context lacks the {axiom} assumption(s) [{}]", join(.missing))]
    AxiomContext {
        axiom: AxiomId,
        missing: Vec<Formula>,
    },
}

fn join(fs: &[Formula]) -> String {
    let mut s = String::new();
    for (i, f) in fs.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&f.to_string());
    }
    s
}

fn expect_premise(premise: usize, expected: &Formula, found: &Formula) -> Result<(), StepError> {
    if expected == found {
        Ok(())
    } else {
        Err(StepError::PremiseConclusion {
            premise,
            expected: expected.clone(),
            found: found.clone(),
        })
    }
}

fn expect_context(conclusion: &[Formula], from_premises: &[Formula]) -> Result<(), StepError> {
    if multiset::equal(conclusion, from_premises) {
        return Ok(());
    }
    let (conclusion_surplus, premise_surplus) = multiset::symmetric_surplus(conclusion, from_premises);
    Err(StepError::Context {
        conclusion_surplus,
        premise_surplus,
    })
}

/// Checks that a single node instantiates its rule, taking its premises'
/// conclusions at face value.
pub fn check_step(node: &Derivation) -> Result<(), StepError> {
    let arity = node.rule.arity();
    if node.premises.len() != arity {
        return Err(StepError::Arity {
            rule: node.rule.name(),
            expected: arity,
            found: node.premises.len(),
        });
    }
    let concl = &node.conclusion;
    let prem = |i: usize| &node.premises[i].conclusion;
    match &node.rule {
        Rule::ImpI => {
            // Γ, A |- B  ⟹  Γ |- A -o B
            let Formula::Imp(a, b) = &concl.conclusion else {
                return Err(StepError::Shape {
                    expected: "A -o B".to_string(),
                    found: concl.conclusion.clone(),
                });
            };
            expect_premise(0, b, &prem(0).conclusion)?;
            let Some(gamma) = multiset::difference(&prem(0).context, core::slice::from_ref(&**a))
            else {
                return Err(StepError::Discharge {
                    premise: 0,
                    missing: (**a).clone(),
                });
            };
            expect_context(&concl.context, &gamma)
        }
        Rule::ImpE => {
            // Γ |- A,  Δ |- A -o B  ⟹  Γ, Δ |- B
            let a = &prem(0).conclusion;
            let expected = Formula::imp(a.clone(), concl.conclusion.clone());
            expect_premise(1, &expected, &prem(1).conclusion)?;
            expect_context(&concl.context, &multiset::union(&prem(0).context, &prem(1).context))
        }
        Rule::ConjI => {
            // Γ |- A,  Δ |- B  ⟹  Γ, Δ |- A + B
            let expected = Formula::conj(prem(0).conclusion.clone(), prem(1).conclusion.clone());
            if concl.conclusion != expected {
                return Err(StepError::Shape {
                    expected: expected.to_string(),
                    found: concl.conclusion.clone(),
                });
            }
            expect_context(&concl.context, &multiset::union(&prem(0).context, &prem(1).context))
        }
        Rule::ConjE => {
            // Γ |- A + B,  Δ, A, B |- C  ⟹  Γ, Δ |- C
            let Formula::Conj(a, b) = &prem(0).conclusion else {
                return Err(StepError::Shape {
                    expected: "A + B (premise 0)".to_string(),
                    found: prem(0).conclusion.clone(),
                });
            };
            expect_premise(1, &concl.conclusion, &prem(1).conclusion)?;
            let Some(delta) =
                multiset::difference(&prem(1).context, &[(**a).clone(), (**b).clone()])
            else {
                let missing = if prem(1).context.contains(a) { b } else { a };
                return Err(StepError::Discharge {
                    premise: 1,
                    missing: (**missing).clone(),
                });
            };
            expect_context(&concl.context, &multiset::union(&prem(0).context, &delta))
        }
        Rule::Axiom { id, instantiation } => check_axiom(*id, instantiation, concl),
    }
}

fn check_axiom(id: AxiomId, recorded: &Substitution, concl: &Sequent) -> Result<(), StepError> {
    let schema = id.schema();
    let metas = schema.metavars();
    if recorded.keys().cloned().collect::<BTreeSet<_>>() != metas {
        return Err(StepError::Instantiation { axiom: id });
    }
    // Every metavariable of every schema occurs in its conclusion, so the
    // match determines the whole instantiation.
    let schema_error = || StepError::Schema {
        axiom: id,
        found: concl.conclusion.clone(),
    };
    let matched = match_schema(&schema.conclusion, &concl.conclusion).ok_or_else(schema_error)?;
    if &matched != recorded {
        return Err(schema_error());
    }
    let instance = schema
        .instantiate(recorded)
        .ok_or(StepError::Instantiation { axiom: id })?;
    if multiset::difference(&concl.context, &instance.context).is_none() {
        let (_, missing) = multiset::symmetric_surplus(&concl.context, &instance.context);
        return Err(StepError::AxiomContext { axiom: id, missing });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivationErrorKind {
    Step(StepError),
    AxiomUnavailable { axiom: AxiomId, logic: Logic },
    HalvingNotInLanguage { logic: Logic },
}

/// A rejected derivation: what failed and where (premise indices from the
/// root).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("at node {}: {}", DisplayPath(.path), DisplayKind(.kind))]
pub struct DerivationError {
    pub path: Vec<usize>,
    pub kind: DerivationErrorKind,
}

struct DisplayPath<'a>(&'a [usize]);

impl fmt::Display for DisplayPath<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for i in self.0 {
            write!(f, ".{i}")?;
        }
        Ok(())
    }
}

struct DisplayKind<'a>(&'a DerivationErrorKind);

impl fmt::Display for DisplayKind<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            DerivationErrorKind::Step(e) => write!(f, "{e}"),
            DerivationErrorKind::AxiomUnavailable { axiom, logic } => {
                write!(f, "axiom {axiom} is not available in {logic}")
            }
            DerivationErrorKind::HalvingNotInLanguage { logic } => {
                write!(f, "halving is not in the language of {logic}")
            }
        }
    }
}

/// Checks every node of `d` under `logic`, reporting the first failure in
/// pre-order.
pub fn check_derivation(d: &Derivation, logic: Logic) -> Result<(), DerivationError> {
    let admissible = logic.admissible_axioms();
    let mut path = Vec::new();
    check_rec(d, logic, &admissible, &mut path)
}

fn check_rec(
    d: &Derivation,
    logic: Logic,
    admissible: &BTreeSet<AxiomId>,
    path: &mut Vec<usize>,
) -> Result<(), DerivationError> {
    let fail = |path: &Vec<usize>, kind| {
        Err(DerivationError {
            path: path.clone(),
            kind,
        })
    };
    if !logic.allows_halving() && d.conclusion.contains_half() {
        return fail(path, DerivationErrorKind::HalvingNotInLanguage { logic });
    }
    if let Rule::Axiom { id, instantiation } = &d.rule {
        if !admissible.contains(id) {
            return fail(path, DerivationErrorKind::AxiomUnavailable { axiom: *id, logic });
        }
        if !logic.allows_halving() && instantiation.values().any(Formula::contains_half) {
            return fail(path, DerivationErrorKind::HalvingNotInLanguage { logic });
        }
    }
    if let Err(e) = check_step(d) {
        return fail(path, DerivationErrorKind::Step(e));
    }
    for (i, p) in d.premises.iter().enumerate() {
        path.push(i);
        check_rec(p, logic, admissible, path)?;
        path.pop();
    }
    Ok(())
}

/// The four antecedents `A -o B |- A`, `A |- A -o B`, `C |- C -o B`,
/// `C -o B |- C` followed by the conclusion `A |- C` of the conjectured
/// halving-uniqueness rule.
pub fn conjectured_rule_instance(a: &Formula, b: &Formula, c: &Formula) -> Vec<Sequent> {
    let a_b = Formula::imp(a.clone(), b.clone());
    let c_b = Formula::imp(c.clone(), b.clone());
    vec![
        Sequent::new(vec![a_b.clone()], a.clone()),
        Sequent::new(vec![a.clone()], a_b),
        Sequent::new(vec![c.clone()], c_b.clone()),
        Sequent::new(vec![c_b], c.clone()),
        Sequent::new(vec![a.clone()], c.clone()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn seq(s: &str) -> Sequent {
        Sequent::parse(s).unwrap()
    }

    fn inst(pairs: &[(&str, &str)]) -> Substitution {
        pairs.iter().map(|(k, v)| (k.to_string(), f(v))).collect()
    }

    #[test]
    fn table_of_axiom_sets() {
        use AxiomId::*;
        let set = |xs: &[AxiomId]| xs.iter().copied().collect::<BTreeSet<_>>();
        assert_eq!(Logic::ALi.axioms(), set(&[ASM, EFQ]));
        assert_eq!(Logic::ALc.axioms(), set(&[ASM, EFQ, DNE]));
        assert_eq!(Logic::LLi.axioms(), set(&[ASM, EFQ, CWC]));
        assert_eq!(Logic::LLc.axioms(), set(&[ASM, EFQ, CSD]));
        assert_eq!(Logic::IL.axioms(), set(&[ASM, EFQ, CON]));
        assert_eq!(Logic::BL.axioms(), set(&[ASM, EFQ, CON, DNE]));
        assert_eq!(Logic::CLi.axioms(), set(&[ASM, EFQ, CWC, HLB, HUB]));
        assert_eq!(Logic::CLc.axioms(), set(&[ASM, EFQ, CSD, HLB, HUB]));
        for l in Logic::ALL {
            assert_eq!(l.allows_halving(), matches!(l, Logic::CLi | Logic::CLc));
            assert!(l.admissible_axioms().is_superset(&l.axioms()));
        }
        assert!(Logic::BL.includes(Logic::ALi));
        assert!(!Logic::IL.includes(Logic::CLi));
        assert!(!Logic::IL.admissible_axioms().contains(&HLB));
    }

    #[test]
    fn logic_names_round_trip() {
        for l in Logic::ALL {
            assert_eq!(l.name().parse::<Logic>().unwrap(), l);
        }
        assert!("LLx".parse::<Logic>().is_err());
    }

    #[test]
    fn asm_leaf_with_ambient_context() {
        let leaf = Derivation::axiom(AxiomId::ASM, inst(&[("A", "P")]), seq("Q, P |- P"));
        assert_eq!(check_step(&leaf), Ok(()));
        let wrong = Derivation::axiom(AxiomId::ASM, inst(&[("A", "P")]), seq("Q |- P"));
        assert!(matches!(check_step(&wrong), Err(StepError::AxiomContext { .. })));
    }

    #[test]
    fn imp_elim_with_empty_contexts() {
        let a = Derivation::axiom(AxiomId::EFQ, inst(&[("A", "A")]), seq("1 |- A"));
        let ab = Derivation::axiom(AxiomId::EFQ, inst(&[("A", "A -o B")]), seq("1 |- A -o B"));
        let node = Derivation::node(Rule::ImpE, vec![a, ab], seq("1, 1 |- B"));
        assert_eq!(check_step(&node), Ok(()));
        // The same shape with bare premises, checked as a single step.
        let p0 = Derivation::node(Rule::ImpI, vec![], seq("|- A"));
        let p1 = Derivation::node(Rule::ImpI, vec![], seq("|- A -o B"));
        let node = Derivation::node(Rule::ImpE, vec![p0, p1], seq("|- B"));
        assert_eq!(check_step(&node), Ok(()));
    }

    #[test]
    fn no_silent_contraction() {
        let p = Derivation::node(Rule::ImpI, vec![], seq("A, A |- B"));
        for rule in [Rule::ImpI, Rule::ImpE, Rule::ConjI, Rule::ConjE] {
            let premises = vec![p.clone(); rule.arity()];
            let node = Derivation::node(rule, premises, seq("A |- B"));
            assert!(check_step(&node).is_err());
        }
    }

    #[test]
    fn context_accounting_reports_difference() {
        let a = Derivation::node(Rule::ImpI, vec![], seq("P |- A"));
        let b = Derivation::node(Rule::ImpI, vec![], seq("Q |- B"));
        let node = Derivation::node(Rule::ConjI, vec![a, b], seq("P, P |- A + B"));
        match check_step(&node) {
            Err(StepError::Context {
                conclusion_surplus,
                premise_surplus,
            }) => {
                assert_eq!(conclusion_surplus, vec![f("P")]);
                assert_eq!(premise_surplus, vec![f("Q")]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn conj_elim_discharges_both_components() {
        let p0 = Derivation::node(Rule::ImpI, vec![], seq("G |- A + B"));
        let p1 = Derivation::node(Rule::ImpI, vec![], seq("D, A, B |- C"));
        let ok = Derivation::node(Rule::ConjE, vec![p0.clone(), p1], seq("G, D |- C"));
        assert_eq!(check_step(&ok), Ok(()));
        let p1 = Derivation::node(Rule::ImpI, vec![], seq("D, A |- C"));
        let bad = Derivation::node(Rule::ConjE, vec![p0, p1], seq("G, D |- C"));
        assert!(matches!(check_step(&bad), Err(StepError::Discharge { premise: 1, .. })));
    }

    #[test]
    fn arity_is_enforced() {
        let node = Derivation::node(Rule::ImpE, vec![], seq("|- B"));
        assert!(matches!(check_step(&node), Err(StepError::Arity { expected: 2, found: 0, .. })));
    }

    #[test]
    fn axiom_instantiation_must_agree_with_conclusion() {
        let leaf = Derivation::axiom(AxiomId::ASM, inst(&[("A", "Q")]), seq("P |- P"));
        assert!(matches!(check_step(&leaf), Err(StepError::Schema { .. })));
        let leaf = Derivation::axiom(AxiomId::ASM, inst(&[("B", "P")]), seq("P |- P"));
        assert!(matches!(check_step(&leaf), Err(StepError::Instantiation { .. })));
    }

    #[test]
    fn every_schema_instance_is_accepted_with_extra_context() {
        let sigma = inst(&[("A", "P + Q"), ("B", "Q -o P")]);
        for id in AxiomId::ALL {
            let schema = id.schema();
            let sigma: Substitution = sigma
                .iter()
                .filter(|(k, _)| schema.metavars().contains(*k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect();
            let mut s = schema.instantiate(&sigma).unwrap();
            let leaf = Derivation::axiom(id, sigma.clone(), s.clone());
            assert_eq!(check_step(&leaf), Ok(()), "{id}");
            s.context.insert(0, f("R -o R"));
            let leaf = Derivation::axiom(id, sigma, s);
            assert_eq!(check_step(&leaf), Ok(()), "{id} weakened");
        }
    }

    #[test]
    fn conjectured_rule_shapes() {
        let seqs = conjectured_rule_instance(&f("A"), &f("B"), &f("C"));
        let text: Vec<String> = seqs.iter().map(|s| s.to_string()).collect();
        assert_eq!(
            text,
            ["A -o B |- A", "A |- A -o B", "C |- C -o B", "C -o B |- C", "A |- C"]
        );
        let refl = conjectured_rule_instance(&f("A"), &f("B"), &f("A"));
        let last = refl.last().unwrap().clone();
        let leaf = Derivation::axiom(AxiomId::ASM, inst(&[("A", "A")]), last);
        assert_eq!(check_step(&leaf), Ok(()));
    }

    #[test]
    fn sequent_parse_and_print() {
        let s = seq("A, B -o C |- C");
        assert_eq!(s.context.len(), 2);
        assert_eq!(s.to_string(), "A, B -o C |- C");
        assert_eq!(seq("|- A").to_string(), "|- A");
        assert!(Sequent::parse("A").is_err());
    }
}
