//! Parallel drivers for enumeration and the oracle sweeps. Work is split per
//! poset, per algebra or per problem; results are merged in input order, so
//! every output is independent of the thread count.

use rayon::prelude::*;
use serde::Serialize;

use hoopkit_core::algebra::{battery, classify, ClassFilter, FiniteAlgebra, Property, DEFAULT_BATTERY_EXPONENT};
use hoopkit_core::corpus::oracles::{
    dyadic_fixed_points, halving_inequality_dyadic, halving_inequality_oracle, lemma2_dyadic,
    lemma2_oracle, merge_all, problem_oracle, square_oracle, theorem2_dyadic, theorem2_oracle,
    OracleError, OracleReport, ProblemReport,
};
use hoopkit_core::corpus::{bank, Problem};
use hoopkit_core::horn::HornEvalError;
use hoopkit_core::kernel::Logic;
use hoopkit_core::search::{finish, monoids_over, posets, Budget, Enumeration, SearchConfig};
use hoopkit_core::semantics::{
    dyadic_soundness_sweep, model_class, sweep_one, FiniteModel, FormulaPool, SoundnessReport,
    SweepError,
};

/// Exponent bound of the dyadic rule battery; rules quantify over five
/// values at once.
pub const RULE_BATTERY_EXPONENT: u32 = 4;

/// [`hoopkit_core::search::enumerate`] with the posets of each size searched
/// in parallel. Each poset may spend the whole remaining budget, and the
/// run is complete only if the summed spending stays within it.
pub fn enumerate(config: &SearchConfig, class: &ClassFilter) -> Enumeration {
    let mut used = 0u64;
    let mut algebras = Vec::new();
    let mut complete = true;
    for n in 1..=config.max_size {
        let remaining = config.node_budget.saturating_sub(used);
        let parts: Vec<(Vec<FiniteAlgebra>, bool, u64)> = posets(n, config.iso_pruning)
            .par_iter()
            .map(|poset| {
                let mut budget = Budget::new(remaining);
                let (found, done) = monoids_over(poset, &mut budget);
                (found, done, budget.used)
            })
            .collect();
        let mut candidates = Vec::new();
        let mut spent = 0u64;
        for (found, done, nodes) in parts {
            candidates.extend(found);
            complete &= done;
            spent += nodes;
        }
        used += spent;
        algebras.extend(finish(candidates, config, class));
        if !complete || spent > remaining {
            complete = false;
            break;
        }
    }
    Enumeration {
        algebras,
        complete,
        nodes: used,
    }
}

/// [`hoopkit_core::semantics::soundness_sweep`], one task per algebra.
pub fn soundness(
    logic: Logic,
    algs: &[FiniteAlgebra],
    pool: &FormulaPool,
) -> Result<SoundnessReport, SweepError> {
    let class = model_class(logic);
    let parts: Vec<Result<SoundnessReport, SweepError>> = algs
        .par_iter()
        .enumerate()
        .map(|(index, alg)| {
            let model = FiniteModel::new(alg);
            if !class.accepts(model.flags()) {
                return Err(SweepError::ClassMismatch {
                    algebra: index,
                    logic,
                    class: class.clone(),
                });
            }
            sweep_one(logic, index, &model, pool)
        })
        .collect();
    let mut report = SoundnessReport::default();
    for part in parts {
        report.merge(part?);
    }
    Ok(report)
}

pub fn problems(ps: &[Problem], algs: &[FiniteAlgebra]) -> Result<Vec<ProblemReport>, HornEvalError> {
    ps.par_iter().map(|p| problem_oracle(p, algs)).collect()
}

/// Runs a slice-based oracle once per algebra and merges the reports.
pub fn per_algebra<F>(algs: &[FiniteAlgebra], oracle: F) -> Result<Vec<OracleReport>, OracleError>
where
    F: Fn(&[FiniteAlgebra]) -> Result<Vec<OracleReport>, OracleError> + Sync,
{
    let parts: Vec<Result<Vec<OracleReport>, OracleError>> = algs
        .par_iter()
        .map(|a| oracle(std::slice::from_ref(a)))
        .collect();
    let mut out = Vec::new();
    for part in parts {
        merge_all(&mut out, part?);
    }
    Ok(out)
}

pub fn lemma2(hoops: &[FiniteAlgebra]) -> Result<Vec<OracleReport>, OracleError> {
    per_algebra(hoops, |a| lemma2_oracle(&a[0]))
}

pub fn theorem2(hoops: &[FiniteAlgebra]) -> Result<OracleReport, OracleError> {
    let mut reports = per_algebra(hoops, |a| theorem2_oracle(a).map(|r| vec![r]))?;
    Ok(reports.pop().unwrap_or_else(|| OracleReport::new("theorem2")))
}

pub fn square(algs: &[FiniteAlgebra]) -> Result<Vec<OracleReport>, OracleError> {
    per_algebra(algs, square_oracle)
}

pub fn halving_inequality(hoops: &[FiniteAlgebra]) -> Result<Vec<OracleReport>, OracleError> {
    per_algebra(hoops, halving_inequality_oracle)
}

/// Counts the coops of size greater than one; there should be none.
pub fn finite_coops(algs: &[FiniteAlgebra]) -> OracleReport {
    let mut r = OracleReport::new("no finite coop");
    for alg in algs {
        r.models += 1;
        let coop = classify(alg).coop;
        r.check(!coop || alg.size() == 1, || format!("{alg}"));
    }
    r
}

/// Settings of a full corpus run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    /// Bound for problem refutation and the finite oracles.
    pub max_size: usize,
    /// Bound for the soundness sweeps; zero skips them.
    pub sweep_size: usize,
    pub dyadic_exponent: u32,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_size: 5,
            sweep_size: 4,
            dyadic_exponent: DEFAULT_BATTERY_EXPONENT,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusRun {
    pub config: CorpusConfig,
    pub pocrims: usize,
    pub hoops: usize,
    pub complete: bool,
    pub problems: Vec<ProblemReport>,
    pub oracles: Vec<OracleReport>,
}

impl CorpusRun {
    pub fn violations(&self) -> u64 {
        self.problems.iter().map(|p| p.violations).sum::<u64>()
            + self.oracles.iter().map(|o| o.violation_count).sum::<u64>()
    }

    pub fn is_clean(&self) -> bool {
        self.complete && self.violations() == 0
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error(transparent)]
    Horn(#[from] HornEvalError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
}

fn soundness_row(name: String, r: &SoundnessReport) -> OracleReport {
    OracleReport {
        name,
        models: r.algebras,
        tuples: r.axiom_checks + r.rule_checks,
        violation_count: r.violation_count,
        violations: r.violations.iter().map(|v| format!("{v:?}")).collect(),
    }
}

/// Every bank problem and every oracle over the bounded pocrims up to the
/// configured size, plus the dyadic batteries.
pub fn run_corpus(config: &CorpusConfig) -> Result<CorpusRun, CorpusError> {
    let enumeration = enumerate(&SearchConfig::up_to(config.max_size), &ClassFilter::any());
    let pocrims = enumeration.algebras;
    let hoops: Vec<FiniteAlgebra> = pocrims.iter().filter(|a| classify(a).hoop).cloned().collect();
    let problems = problems(&bank(), &pocrims)?;

    let mut oracles = lemma2(&hoops)?;
    oracles.extend(lemma2_dyadic(config.dyadic_exponent).into_iter().map(renamed("dyadic ")));
    oracles.push(theorem2(&hoops)?);
    oracles.push(theorem2_dyadic(config.dyadic_exponent));
    oracles.extend(halving_inequality(&hoops)?);
    oracles.extend(halving_inequality_dyadic(config.dyadic_exponent));
    oracles.extend(square(&pocrims)?);
    oracles.extend(dyadic_fixed_points(config.dyadic_exponent));
    oracles.push(finite_coops(&pocrims));

    if config.sweep_size > 0 {
        let small: Vec<&FiniteAlgebra> = pocrims.iter().filter(|a| a.size() <= config.sweep_size).collect();
        let axiom_values = battery(config.dyadic_exponent);
        let rule_values = battery(RULE_BATTERY_EXPONENT.min(config.dyadic_exponent));
        for logic in Logic::ALL {
            let class = model_class(logic);
            let members: Vec<FiniteAlgebra> = small
                .iter()
                .filter(|a| class.accepts(&classify(a)))
                .map(|a| (*a).clone())
                .collect();
            let pool = FormulaPool::standard(logic.allows_halving());
            let r = soundness(logic, &members, &pool)?;
            oracles.push(soundness_row(format!("soundness {logic}"), &r));
            if class.required.contains(&(Property::Coop, true)) {
                let d = dyadic_soundness_sweep(logic, &axiom_values, &rule_values)?;
                oracles.push(soundness_row(format!("dyadic soundness {logic}"), &d));
            }
        }
    }

    Ok(CorpusRun {
        config: *config,
        pocrims: pocrims.len(),
        hoops: hoops.len(),
        complete: enumeration.complete,
        problems,
        oracles,
    })
}

fn renamed(prefix: &'static str) -> impl Fn(OracleReport) -> OracleReport {
    move |mut r| {
        r.name = format!("{prefix}{}", r.name);
        r
    }
}
