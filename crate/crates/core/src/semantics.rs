//! Interpretation of formulas and sequents in pocrims, validity by exhaustive
//! assignment enumeration, and soundness sweeps of each logic over its
//! model class.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{
    classify, ClassFilter, ClassFlags, Dyadic, FiniteAlgebra, Property,
};
use crate::formula::{Formula, Pattern, Substitution};
use crate::kernel::{AxiomId, Logic, Sequent};

/// A structure formulas can be evaluated in.
pub trait Structure {
    type Value: Clone + PartialEq + Ord + fmt::Debug;

    fn zero(&self) -> Self::Value;
    /// The annihilator, if bounded.
    fn one(&self) -> Option<Self::Value>;
    fn add(&self, x: &Self::Value, y: &Self::Value) -> Self::Value;
    fn imp(&self, x: &Self::Value, y: &Self::Value) -> Self::Value;
    fn ge(&self, x: &Self::Value, y: &Self::Value) -> bool;
    /// `x/2`, or `None` when the structure has no halving operation.
    fn half(&self, x: &Self::Value) -> Option<Self::Value>;
}

/// A finite pocrim prepared for evaluation. Halving is available exactly
/// when the algebra is a coop.
#[derive(Clone, Debug)]
pub struct FiniteModel<'a> {
    alg: &'a FiniteAlgebra,
    flags: ClassFlags,
    halves: Option<Vec<usize>>,
}

impl<'a> FiniteModel<'a> {
    pub fn new(alg: &'a FiniteAlgebra) -> Self {
        let flags = classify(alg);
        let halves = flags.coop.then(|| {
            alg.elements()
                .map(|x| crate::algebra::halve(alg, x).unique().expect("coop"))
                .collect()
        });
        FiniteModel { alg, flags, halves }
    }

    pub fn algebra(&self) -> &'a FiniteAlgebra {
        self.alg
    }

    pub fn flags(&self) -> &ClassFlags {
        &self.flags
    }

    pub fn supports_halving(&self) -> bool {
        self.halves.is_some()
    }
}

impl Structure for FiniteModel<'_> {
    type Value = usize;

    fn zero(&self) -> usize {
        0
    }

    fn one(&self) -> Option<usize> {
        self.flags.annihilator
    }

    fn add(&self, x: &usize, y: &usize) -> usize {
        self.alg.add(*x, *y)
    }

    fn imp(&self, x: &usize, y: &usize) -> usize {
        self.alg.imp(*x, *y)
    }

    fn ge(&self, x: &usize, y: &usize) -> bool {
        self.alg.ge(*x, *y)
    }

    fn half(&self, x: &usize) -> Option<usize> {
        self.halves.as_ref().map(|h| h[*x])
    }
}

/// The standard model: dyadic rationals in `[0, 1]` with capped addition,
/// truncated subtraction and exact halving.
#[derive(Clone, Copy, Debug, Default)]
pub struct DyadicModel;

impl DyadicModel {
    /// The classes the standard model belongs to.
    pub fn flags() -> ClassFlags {
        ClassFlags {
            annihilator: None,
            bounded: true,
            involutive: true,
            idempotent: false,
            hoop: true,
            csd: true,
            wajsberg: true,
            coop: true,
            boolean: false,
            cwc_witness: None,
            csd_witness: None,
        }
    }
}

impl Structure for DyadicModel {
    type Value = Dyadic;

    fn zero(&self) -> Dyadic {
        Dyadic::ZERO
    }

    fn one(&self) -> Option<Dyadic> {
        Some(Dyadic::ONE)
    }

    fn add(&self, x: &Dyadic, y: &Dyadic) -> Dyadic {
        x.cap_add(*y)
    }

    fn imp(&self, x: &Dyadic, y: &Dyadic) -> Dyadic {
        x.trunc_imp(*y)
    }

    fn ge(&self, x: &Dyadic, y: &Dyadic) -> bool {
        x >= y
    }

    fn half(&self, x: &Dyadic) -> Option<Dyadic> {
        Some(x.half())
    }
}

pub type Assignment<V> = BTreeMap<String, V>;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("halving is not available in this model")]
    HalvingUnavailable,
    #[error("the constant 1 needs a bounded model")]
    Unbounded,
    #[error("variable `{0}` is not assigned")]
    UnboundVariable(String),
}

pub fn evaluate<S: Structure>(
    f: &Formula,
    model: &S,
    a: &Assignment<S::Value>,
) -> Result<S::Value, EvalError> {
    Ok(match f {
        Formula::Truth => model.zero(),
        Formula::Falsity => model.one().ok_or(EvalError::Unbounded)?,
        Formula::Var(v) => a
            .get(v)
            .cloned()
            .ok_or_else(|| EvalError::UnboundVariable(v.clone()))?,
        Formula::Imp(l, r) => model.imp(&evaluate(l, model, a)?, &evaluate(r, model, a)?),
        Formula::Conj(l, r) => model.add(&evaluate(l, model, a)?, &evaluate(r, model, a)?),
        Formula::Half(b) => model
            .half(&evaluate(b, model, a)?)
            .ok_or(EvalError::HalvingUnavailable)?,
    })
}

/// Evaluates a schema pattern with metavariables bound to values. Object
/// variables are looked up in the same binding.
pub fn evaluate_pattern<S: Structure>(
    p: &Pattern,
    model: &S,
    binding: &Assignment<S::Value>,
) -> Result<S::Value, EvalError> {
    Ok(match p {
        Pattern::Truth => model.zero(),
        Pattern::Falsity => model.one().ok_or(EvalError::Unbounded)?,
        Pattern::Var(v) | Pattern::Meta(v) => binding
            .get(v)
            .cloned()
            .ok_or_else(|| EvalError::UnboundVariable(v.clone()))?,
        Pattern::Imp(l, r) => model.imp(
            &evaluate_pattern(l, model, binding)?,
            &evaluate_pattern(r, model, binding)?,
        ),
        Pattern::Conj(l, r) => model.add(
            &evaluate_pattern(l, model, binding)?,
            &evaluate_pattern(r, model, binding)?,
        ),
        Pattern::Half(b) => model
            .half(&evaluate_pattern(b, model, binding)?)
            .ok_or(EvalError::HalvingUnavailable)?,
    })
}

/// `v(C1) + ... + v(Cn) >= v(A)`, the empty sum being `0`.
pub fn satisfies<S: Structure>(
    s: &Sequent,
    model: &S,
    a: &Assignment<S::Value>,
) -> Result<bool, EvalError> {
    let mut sum = model.zero();
    for c in &s.context {
        sum = model.add(&sum, &evaluate(c, model, a)?);
    }
    Ok(model.ge(&sum, &evaluate(&s.conclusion, model, a)?))
}

/// Default bound on the number of assignments [`valid_in`] enumerates.
pub const DEFAULT_ASSIGNMENT_CAP: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validity<V> {
    Valid { assignments: u64 },
    Countermodel(Assignment<V>),
}

impl<V> Validity<V> {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ValidityError {
    #[error("{needed} assignments exceed the cap of {cap}")]
    Cap { needed: u128, cap: u64 },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Visits every assignment of `vars` to `0..n` in lexicographic order until
/// `visit` returns `false`.
fn for_each_assignment(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    let mut idx = vec![0usize; k];
    loop {
        if !visit(&idx) {
            return;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return;
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

/// Exhaustive validity in a finite pocrim, with the first falsifying
/// assignment when invalid.
pub fn valid_in(
    s: &Sequent,
    alg: &FiniteAlgebra,
    cap: u64,
) -> Result<Validity<usize>, ValidityError> {
    valid_in_model(s, &FiniteModel::new(alg), cap)
}

pub fn valid_in_model(
    s: &Sequent,
    model: &FiniteModel<'_>,
    cap: u64,
) -> Result<Validity<usize>, ValidityError> {
    let vars: Vec<String> = s.vars().into_iter().collect();
    let n = model.algebra().size();
    let needed = (n as u128).pow(vars.len() as u32);
    if needed > cap as u128 {
        return Err(ValidityError::Cap { needed, cap });
    }
    let mut result = Ok(None);
    let mut count = 0u64;
    for_each_assignment(n, vars.len(), |values| {
        count += 1;
        let a: Assignment<usize> = vars.iter().cloned().zip(values.iter().copied()).collect();
        match satisfies(s, model, &a) {
            Ok(true) => true,
            Ok(false) => {
                result = Ok(Some(a));
                false
            }
            Err(e) => {
                result = Err(e);
                false
            }
        }
    });
    Ok(match result? {
        Some(a) => Validity::Countermodel(a),
        None => Validity::Valid { assignments: count },
    })
}

/// Searches `values^vars` for an assignment falsifying `s` in the dyadic
/// model. `None` means only that the sample holds no counterexample.
pub fn dyadic_counterexample(
    s: &Sequent,
    values: &[Dyadic],
) -> Result<Option<Assignment<Dyadic>>, EvalError> {
    let vars: Vec<String> = s.vars().into_iter().collect();
    let mut result = Ok(None);
    for_each_assignment(values.len(), vars.len(), |idx| {
        let a: Assignment<Dyadic> = vars
            .iter()
            .cloned()
            .zip(idx.iter().map(|&i| values[i]))
            .collect();
        match satisfies(s, &DyadicModel, &a) {
            Ok(true) => true,
            Ok(false) => {
                result = Ok(Some(a));
                false
            }
            Err(e) => {
                result = Err(e);
                false
            }
        }
    });
    result
}

/// The model class of each logic.
pub fn model_class(logic: Logic) -> ClassFilter {
    use Property::*;
    let props: &[Property] = match logic {
        Logic::ALi => &[Bounded],
        Logic::ALc => &[Bounded, Involutive],
        Logic::LLi => &[Bounded, Hoop],
        Logic::LLc => &[Bounded, Wajsberg],
        Logic::IL => &[Bounded, Idempotent],
        Logic::BL => &[Bounded, Involutive, Idempotent],
        Logic::CLi => &[Bounded, Coop],
        Logic::CLc => &[Bounded, Involutive, Coop],
    };
    ClassFilter::of(props)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum PoolNode {
    Truth,
    Falsity,
    Var(usize),
    Imp(usize, usize),
    Conj(usize, usize),
    Half(usize),
}

/// Every formula over a fixed variable list up to a nesting depth, stored so
/// that children precede parents.
#[derive(Clone, Debug)]
pub struct FormulaPool {
    vars: Vec<String>,
    depth: usize,
    formulas: Vec<Formula>,
    nodes: Vec<PoolNode>,
}

impl FormulaPool {
    pub fn new(vars: &[&str], depth: usize, halving: bool) -> Self {
        let mut pool = FormulaPool {
            vars: vars.iter().map(|v| String::from(*v)).collect(),
            depth,
            formulas: vec![Formula::Truth, Formula::Falsity],
            nodes: vec![PoolNode::Truth, PoolNode::Falsity],
        };
        for (i, v) in vars.iter().enumerate() {
            pool.formulas.push(Formula::var(v));
            pool.nodes.push(PoolNode::Var(i));
        }
        let mut depth_of = vec![0usize; pool.formulas.len()];
        for d in 1..=depth {
            let existing = pool.formulas.len();
            for i in 0..existing {
                for j in 0..existing {
                    if depth_of[i].max(depth_of[j]) + 1 != d {
                        continue;
                    }
                    let (fi, fj) = (pool.formulas[i].clone(), pool.formulas[j].clone());
                    pool.formulas.push(Formula::imp(fi.clone(), fj.clone()));
                    pool.nodes.push(PoolNode::Imp(i, j));
                    pool.formulas.push(Formula::conj(fi, fj));
                    pool.nodes.push(PoolNode::Conj(i, j));
                    depth_of.extend([d, d]);
                }
                if halving && depth_of[i] + 1 == d {
                    pool.formulas.push(Formula::half(pool.formulas[i].clone()));
                    pool.nodes.push(PoolNode::Half(i));
                    depth_of.push(d);
                }
            }
        }
        pool
    }

    /// Two variables `P`, `Q`, depth two.
    pub fn standard(halving: bool) -> Self {
        Self::new(&["P", "Q"], 2, halving)
    }

    /// The same pool with every `/2` formula dropped.
    pub fn without_halving(&self) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(String::as_str).collect();
        Self::new(&vars, self.depth, false)
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn has_halving(&self) -> bool {
        self.nodes.iter().any(|n| matches!(n, PoolNode::Half(_)))
    }

    /// For each pool formula, its value under every assignment of the pool
    /// variables (lexicographic order).
    pub fn value_vectors(&self, model: &FiniteModel<'_>) -> Result<Vec<Vec<u8>>, EvalError> {
        let n = model.algebra().size();
        let k = self.vars.len();
        let mut assignments: Vec<Vec<usize>> = Vec::new();
        for_each_assignment(n, k, |a| {
            assignments.push(a.to_vec());
            true
        });
        let mut out: Vec<Vec<u8>> = Vec::with_capacity(self.nodes.len());
        for node in &self.nodes {
            let vec: Vec<u8> = match node {
                PoolNode::Truth => vec![0; assignments.len()],
                PoolNode::Falsity => {
                    let one = model.one().ok_or(EvalError::Unbounded)? as u8;
                    vec![one; assignments.len()]
                }
                PoolNode::Var(i) => assignments.iter().map(|a| a[*i] as u8).collect(),
                PoolNode::Imp(i, j) => out[*i]
                    .iter()
                    .zip(&out[*j])
                    .map(|(&x, &y)| model.imp(&(x as usize), &(y as usize)) as u8)
                    .collect(),
                PoolNode::Conj(i, j) => out[*i]
                    .iter()
                    .zip(&out[*j])
                    .map(|(&x, &y)| model.add(&(x as usize), &(y as usize)) as u8)
                    .collect(),
                PoolNode::Half(i) => out[*i]
                    .iter()
                    .map(|&x| model.half(&(x as usize)).map(|h| h as u8))
                    .collect::<Option<Vec<u8>>>()
                    .ok_or(EvalError::HalvingUnavailable)?,
            };
            out.push(vec);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SoundnessViolation {
    /// An axiom instance falsified by an assignment of the pool variables.
    Axiom {
        algebra: usize,
        axiom: AxiomId,
        instance: Sequent,
        assignment: Vec<usize>,
    },
    /// Premises satisfied, conclusion not, at the listed element values
    /// (contexts first, then formulas, in rule order).
    Rule {
        algebra: usize,
        rule: &'static str,
        values: Vec<String>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SoundnessReport {
    pub algebras: usize,
    pub axiom_checks: u64,
    pub rule_checks: u64,
    pub violation_count: u64,
    /// The first few violations in full.
    pub violations: Vec<SoundnessViolation>,
}

const KEPT_VIOLATIONS: usize = 16;

impl SoundnessReport {
    fn record(&mut self, v: impl FnOnce() -> SoundnessViolation) {
        self.violation_count += 1;
        if self.violations.len() < KEPT_VIOLATIONS {
            self.violations.push(v());
        }
    }

    pub fn merge(&mut self, other: SoundnessReport) {
        self.algebras += other.algebras;
        self.axiom_checks += other.axiom_checks;
        self.rule_checks += other.rule_checks;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < KEPT_VIOLATIONS {
                self.violations.push(v);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SweepError {
    #[error("algebra #{algebra} is not in the model class of {logic} ({class})")]
    ClassMismatch {
        algebra: usize,
        logic: Logic,
        class: ClassFilter,
    },
    #[error("the dyadic model is not in the model class of {logic}")]
    DyadicMismatch { logic: Logic },
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// Truth table of an axiom schema over element tuples, indexed by the
/// metavariables in sorted order, mixed radix `n`.
fn schema_table<S: Structure>(
    id: AxiomId,
    model: &S,
    values: &[S::Value],
) -> Result<(Vec<String>, Vec<bool>), EvalError> {
    let schema = id.schema();
    let metas: Vec<String> = schema.metavars().into_iter().collect();
    let n = values.len();
    let mut table = Vec::with_capacity(n.pow(metas.len() as u32));
    let mut err = None;
    for_each_assignment(n, metas.len(), |idx| {
        let binding: Assignment<S::Value> = metas
            .iter()
            .cloned()
            .zip(idx.iter().map(|&i| values[i].clone()))
            .collect();
        let check = || -> Result<bool, EvalError> {
            let mut sum = model.zero();
            for p in &schema.context {
                sum = model.add(&sum, &evaluate_pattern(p, model, &binding)?);
            }
            Ok(model.ge(&sum, &evaluate_pattern(&schema.conclusion, model, &binding)?))
        };
        match check() {
            Ok(ok) => {
                table.push(ok);
                true
            }
            Err(e) => {
                err = Some(e);
                false
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok((metas, table)),
    }
}

/// Local soundness of the four inference rules at every tuple of values.
/// Context values range over every element, which covers every multiset of
/// pooled formulas under every assignment.
fn rule_sweep<S: Structure>(
    model: &S,
    values: &[S::Value],
    algebra: usize,
    report: &mut SoundnessReport,
) {
    let label = |vs: &[&S::Value]| -> Vec<String> {
        vs.iter().map(|v| alloc::format!("{v:?}")).collect()
    };
    for g in values {
        for a in values {
            for b in values {
                // [-oI]: G + A >= B  ⟹  G >= A -> B
                report.rule_checks += 1;
                if model.ge(&model.add(g, a), b) && !model.ge(g, &model.imp(a, b)) {
                    report.record(|| SoundnessViolation::Rule {
                        algebra,
                        rule: "-oI",
                        values: label(&[g, a, b]),
                    });
                }
                for d in values {
                    // [-oE]: G >= A, D >= A -> B  ⟹  G + D >= B
                    report.rule_checks += 1;
                    let gd = model.add(g, d);
                    if model.ge(g, a) && model.ge(d, &model.imp(a, b)) && !model.ge(&gd, b) {
                        report.record(|| SoundnessViolation::Rule {
                            algebra,
                            rule: "-oE",
                            values: label(&[g, d, a, b]),
                        });
                    }
                    // [+I]: G >= A, D >= B  ⟹  G + D >= A + B
                    report.rule_checks += 1;
                    let ab = model.add(a, b);
                    if model.ge(g, a) && model.ge(d, b) && !model.ge(&gd, &ab) {
                        report.record(|| SoundnessViolation::Rule {
                            algebra,
                            rule: "+I",
                            values: label(&[g, d, a, b]),
                        });
                    }
                    // [+E]: G >= A + B, D + A + B >= C  ⟹  G + D >= C
                    if !model.ge(g, &ab) {
                        report.rule_checks += values.len() as u64;
                        continue;
                    }
                    let dab = model.add(d, &ab);
                    for c in values {
                        report.rule_checks += 1;
                        if model.ge(&dab, c) && !model.ge(&gd, c) {
                            report.record(|| SoundnessViolation::Rule {
                                algebra,
                                rule: "+E",
                                values: label(&[g, d, a, b, c]),
                            });
                        }
                    }
                }
            }
        }
    }
}

/// Checks, for every algebra: every admissible axiom of `logic` instantiated
/// over the pool is valid, and every inference rule is locally sound.
/// Instances are deduplicated by their value vectors, which decide validity.
pub fn soundness_sweep(
    logic: Logic,
    algs: &[FiniteAlgebra],
    pool: &FormulaPool,
) -> Result<SoundnessReport, SweepError> {
    let class = model_class(logic);
    let mut report = SoundnessReport::default();
    for (index, alg) in algs.iter().enumerate() {
        let model = FiniteModel::new(alg);
        if !class.accepts(model.flags()) {
            return Err(SweepError::ClassMismatch {
                algebra: index,
                logic,
                class,
            });
        }
        report.merge(sweep_one(logic, index, &model, pool)?);
    }
    Ok(report)
}

/// The sweep for a single algebra, which must already be in the class.
pub fn sweep_one(
    logic: Logic,
    index: usize,
    model: &FiniteModel<'_>,
    pool: &FormulaPool,
) -> Result<SoundnessReport, SweepError> {
    let mut report = SoundnessReport {
        algebras: 1,
        ..Default::default()
    };
    let n = model.algebra().size();
    let elements: Vec<usize> = model.algebra().elements().collect();
    let stripped;
    let pool = if pool.has_halving() && !logic.allows_halving() {
        stripped = pool.without_halving();
        &stripped
    } else {
        pool
    };
    let vectors = pool.value_vectors(model)?;
    // One representative pool index per distinct value vector.
    let mut seen: BTreeMap<&[u8], usize> = BTreeMap::new();
    for (i, v) in vectors.iter().enumerate() {
        seen.entry(v.as_slice()).or_insert(i);
    }
    let reps: Vec<usize> = seen.values().copied().collect();
    let width = vectors.first().map_or(0, Vec::len);

    for id in logic.admissible_axioms() {
        let (metas, table) = schema_table(id, model, &elements)?;
        let k = metas.len();
        let mut choice = vec![0usize; k];
        for_each_assignment(reps.len(), k, |idx| {
            for (c, &i) in choice.iter_mut().zip(idx) {
                *c = reps[i];
            }
            for alpha in 0..width {
                report.axiom_checks += 1;
                let cell = choice
                    .iter()
                    .fold(0usize, |acc, &p| acc * n + vectors[p][alpha] as usize);
                if !table[cell] {
                    let sigma: Substitution = metas
                        .iter()
                        .cloned()
                        .zip(choice.iter().map(|&p| pool.formulas[p].clone()))
                        .collect();
                    let instance = id.schema().instantiate(&sigma).expect("bound");
                    let assignment = decode(alpha, n, pool.vars.len());
                    report.record(|| SoundnessViolation::Axiom {
                        algebra: index,
                        axiom: id,
                        instance,
                        assignment,
                    });
                }
            }
            true
        });
    }
    rule_sweep(model, &elements, index, &mut report);
    Ok(report)
}

fn decode(mut alpha: usize, n: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = alpha % n;
        alpha /= n;
    }
    out
}

/// The sweep in the dyadic model: axioms over every tuple of
/// `axiom_values`, rules over every tuple of `rule_values`.
pub fn dyadic_soundness_sweep(
    logic: Logic,
    axiom_values: &[Dyadic],
    rule_values: &[Dyadic],
) -> Result<SoundnessReport, SweepError> {
    if !model_class(logic).accepts(&DyadicModel::flags()) {
        return Err(SweepError::DyadicMismatch { logic });
    }
    let mut report = SoundnessReport {
        algebras: 1,
        ..Default::default()
    };
    for id in logic.admissible_axioms() {
        let (metas, table) = schema_table(id, &DyadicModel, axiom_values)?;
        report.axiom_checks += table.len() as u64;
        for (cell, ok) in table.iter().enumerate() {
            if !ok {
                let values = decode(cell, axiom_values.len(), metas.len());
                let sigma: Substitution = metas
                    .iter()
                    .enumerate()
                    .map(|(i, m)| (m.clone(), Formula::var(&alloc::format!("V{i}"))))
                    .collect();
                let instance = id.schema().instantiate(&sigma).expect("bound");
                report.record(|| SoundnessViolation::Axiom {
                    algebra: 0,
                    axiom: id,
                    instance,
                    assignment: values,
                });
            }
        }
    }
    rule_sweep(&DyadicModel, rule_values, 0, &mut report);
    Ok(report)
}

/// The set of variables of a list of sequents.
pub fn vars_of(seqs: &[Sequent]) -> BTreeSet<String> {
    seqs.iter().flat_map(Sequent::vars).collect()
}
