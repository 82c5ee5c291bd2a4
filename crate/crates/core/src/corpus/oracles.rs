//! Exhaustive checks of the bank's mathematical claims on finite algebras
//! and on batteries of dyadic rationals.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{Expected, Problem};
use crate::algebra::{battery, classify, validate_pocrim, Dyadic, FiniteAlgebra};
use crate::horn::{is_refutation, HornEvalError};
use crate::search::{refute_in, Refutation};
use crate::semantics::{DyadicModel, FiniteModel, Structure};

/// Tally of one checked property: how many models and tuples were
/// examined and which tuples failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub name: String,
    pub models: usize,
    pub tuples: u64,
    pub violation_count: u64,
    /// The first few failing tuples.
    pub violations: Vec<String>,
}

const KEPT: usize = 8;

impl OracleReport {
    pub fn new(name: &str) -> Self {
        OracleReport {
            name: name.into(),
            ..Default::default()
        }
    }

    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.tuples += 1;
        if !ok {
            self.violation_count += 1;
            if self.violations.len() < KEPT {
                self.violations.push(witness());
            }
        }
    }

    /// Adds the counts of `other`, which must check the same property.
    pub fn merge(&mut self, other: OracleReport) {
        self.models += other.models;
        self.tuples += other.tuples;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < KEPT {
                self.violations.push(v);
            }
        }
    }

    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }
}

/// Merges reports with matching names position by position.
pub fn merge_all(into: &mut Vec<OracleReport>, more: Vec<OracleReport>) {
    if into.is_empty() {
        *into = more;
        return;
    }
    for (a, b) in into.iter_mut().zip(more) {
        debug_assert_eq!(a.name, b.name);
        a.merge(b);
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("algebra #{index} is not a hoop")]
    NotHoop { index: usize },
    #[error("algebra #{index} is not a validated pocrim")]
    NotPocrim { index: usize },
}

/// Checks the nine halving claims for one triple with `a -> b = a` and
/// `c -> b = c`. Claim (4) is independent of the triple and is left to
/// [`claim4`].
fn claims_for_triple<S: Structure>(
    m: &S,
    (a, b, c): (&S::Value, &S::Value, &S::Value),
    xs: &[S::Value],
    reports: &mut [OracleReport],
) {
    let w = || format!("a={a:?} b={b:?} c={c:?}");
    reports[0].check(m.ge(b, a) && m.ge(b, c), w);
    reports[1].check(m.add(a, a) == *b, w);
    reports[2].check(m.imp(a, &m.imp(a, c)) == m.zero(), w);
    for x in xs {
        let ok = m.ge(&m.imp(c, &m.add(&m.add(a, a), x)), c);
        reports[4].check(ok, || format!("{} x={x:?}", w()));
    }
    reports[5].check(m.ge(&m.imp(c, a), &m.imp(a, c)), w);
    reports[6].check(m.imp(c, a) == m.imp(a, c), w);
    let eight = m.add(&m.add(c, &m.imp(c, a)), &m.imp(&m.imp(a, c), a));
    reports[7].check(eight == *b, w);
    reports[8].check(m.add(a, c) == *b, w);
}

/// `(x -> y) + z >= x -> (y + (y -> x) + z)` for all `x, y, z` in `xs`.
fn claim4<S: Structure>(m: &S, xs: &[S::Value], report: &mut OracleReport) {
    for x in xs {
        for y in xs {
            let rhs_head = m.add(y, &m.imp(y, x));
            let xy = m.imp(x, y);
            for z in xs {
                let ok = m.ge(&m.add(&xy, z), &m.imp(x, &m.add(&rhs_head, z)));
                report.check(ok, || format!("x={x:?} y={y:?} z={z:?}"));
            }
        }
    }
}

fn claim_reports() -> Vec<OracleReport> {
    (1..=9).map(|k| OracleReport::new(&format!("claim ({k})"))).collect()
}

/// The nine halving claims on a hoop, over every qualifying triple.
pub fn lemma2_oracle(alg: &FiniteAlgebra) -> Result<Vec<OracleReport>, OracleError> {
    let m = FiniteModel::new(alg);
    if !m.flags().hoop {
        return Err(OracleError::NotHoop { index: 0 });
    }
    let mut reports = claim_reports();
    for r in reports.iter_mut() {
        r.models = 1;
    }
    let xs: Vec<usize> = alg.elements().collect();
    for b in alg.elements() {
        let halves: Vec<usize> = alg.elements().filter(|&a| alg.imp(a, b) == a).collect();
        for &a in &halves {
            for &c in &halves {
                claims_for_triple(&m, (&a, &b, &c), &xs, &mut reports);
            }
        }
    }
    claim4(&m, &xs, &mut reports[3]);
    Ok(reports)
}

pub fn lemma2_sweep(algs: &[FiniteAlgebra]) -> Result<Vec<OracleReport>, OracleError> {
    let mut out = claim_reports();
    for (index, alg) in algs.iter().enumerate() {
        let r = lemma2_oracle(alg).map_err(|_| OracleError::NotHoop { index })?;
        merge_all(&mut out, r);
    }
    Ok(out)
}

/// The nine claims in the dyadic model. `b` and the universally quantified
/// variables range over exponent `max_exponent`; qualifying `a` and `c` are
/// found by search over exponent `max_exponent + 1`.
pub fn lemma2_dyadic(max_exponent: u32) -> Vec<OracleReport> {
    let m = DyadicModel;
    let xs = battery(max_exponent);
    let fine = battery(max_exponent + 1);
    let mut reports = claim_reports();
    for r in reports.iter_mut() {
        r.models = 1;
    }
    for b in &xs {
        let halves: Vec<Dyadic> = fine.iter().copied().filter(|&a| a.trunc_imp(*b) == a).collect();
        for a in &halves {
            for c in &halves {
                claims_for_triple(&m, (a, b, c), &xs, &mut reports);
            }
        }
    }
    claim4(&m, &xs, &mut reports[3]);
    reports
}

/// In every hoop each element has at most one `y` with `y = y -> x`, and
/// `a -> b = a`, `c -> b = c` force `a = c`.
pub fn theorem2_oracle(algs: &[FiniteAlgebra]) -> Result<OracleReport, OracleError> {
    let mut r = OracleReport::new("halving is unique");
    for (index, alg) in algs.iter().enumerate() {
        if !classify(alg).hoop {
            return Err(OracleError::NotHoop { index });
        }
        r.models += 1;
        for b in alg.elements() {
            let halves: Vec<usize> = alg.elements().filter(|&a| alg.imp(a, b) == a).collect();
            r.check(halves.len() <= 1, || format!("#{index}: b={b} halves={halves:?}"));
            for &a in &halves {
                for &c in &halves {
                    r.check(a == c, || format!("#{index}: a={a} b={b} c={c}"));
                }
            }
        }
    }
    Ok(r)
}

/// Each `x` of exponent at most `max_exponent` has exactly one solution of
/// `y = y -> x` at the next exponent, namely `x/2`.
pub fn theorem2_dyadic(max_exponent: u32) -> OracleReport {
    let mut r = OracleReport::new("dyadic halving is unique");
    r.models = 1;
    let fine = battery(max_exponent + 1);
    for x in battery(max_exponent) {
        let sols: Vec<Dyadic> = fine.iter().copied().filter(|&y| y.trunc_imp(x) == y).collect();
        r.check(sols == [x.half()], || format!("x={x} solutions={sols:?}"));
    }
    r
}

/// `a >= a -> b` implies `a >= b/2`, and `a -> b >= a` implies `b/2 >= a`,
/// wherever `b/2` exists.
pub fn halving_inequality_oracle(algs: &[FiniteAlgebra]) -> Result<Vec<OracleReport>, OracleError> {
    let mut ge = OracleReport::new("a >= a -> b implies a >= b/2");
    let mut le = OracleReport::new("a -> b >= a implies b/2 >= a");
    for (index, alg) in algs.iter().enumerate() {
        if !classify(alg).hoop {
            return Err(OracleError::NotHoop { index });
        }
        ge.models += 1;
        le.models += 1;
        for b in alg.elements() {
            let Some(h) = alg.elements().find(|&y| alg.imp(y, b) == y) else {
                continue;
            };
            for a in alg.elements() {
                let ab = alg.imp(a, b);
                ge.check(!alg.ge(a, ab) || alg.ge(a, h), || format!("#{index}: a={a} b={b}"));
                le.check(!alg.ge(ab, a) || alg.ge(h, a), || format!("#{index}: a={a} b={b}"));
            }
        }
    }
    Ok(alloc::vec![ge, le])
}

pub fn halving_inequality_dyadic(max_exponent: u32) -> Vec<OracleReport> {
    let mut ge = OracleReport::new("dyadic a >= a -> b implies a >= b/2");
    let mut le = OracleReport::new("dyadic a -> b >= a implies b/2 >= a");
    ge.models = 1;
    le.models = 1;
    let xs = battery(max_exponent);
    for &b in &xs {
        let h = b.half();
        for &a in &xs {
            let ab = a.trunc_imp(b);
            ge.check(ab > a || a >= h, || format!("a={a} b={b}"));
            le.check(a > ab || h >= a, || format!("a={a} b={b}"));
        }
    }
    alloc::vec![ge, le]
}

fn all2(alg: &FiniteAlgebra, p: impl Fn(usize, usize) -> bool) -> bool {
    alg.elements().all(|x| alg.elements().all(|y| p(x, y)))
}

fn all3(alg: &FiniteAlgebra, p: impl Fn(usize, usize, usize) -> bool) -> bool {
    alg.elements()
        .all(|x| alg.elements().all(|y| alg.elements().all(|z| p(x, y, z))))
}

/// Properties of a finite pocrim, each computed directly from its tables.
struct Facts {
    involutive: bool,
    idempotent: bool,
    cwc: bool,
    csd: bool,
    peirce: bool,
    wc_assoc: bool,
    wc_lub: bool,
    wc_distrib: bool,
    fixed_zero: bool,
}

fn facts(alg: &FiniteAlgebra, one: usize) -> Facts {
    let (add, imp, ge) = (|x, y| alg.add(x, y), |x, y| alg.imp(x, y), |x, y| alg.ge(x, y));
    let wc = |x: usize, y: usize| add(x, imp(x, y));
    Facts {
        involutive: alg.elements().all(|x| imp(imp(x, one), one) == x),
        idempotent: alg.elements().all(|x| add(x, x) == x),
        cwc: all2(alg, |x, y| wc(x, y) == wc(y, x)),
        csd: all2(alg, |x, y| imp(imp(x, y), y) == imp(imp(y, x), x)),
        peirce: all2(alg, |x, y| imp(imp(imp(x, y), x), x) == 0),
        wc_assoc: all3(alg, |x, y, z| wc(x, wc(y, z)) == wc(wc(x, y), z)),
        wc_lub: all3(alg, |x, y, z| {
            let j = wc(x, y);
            ge(j, x) && ge(j, y) && (!(ge(z, x) && ge(z, y)) || ge(z, j))
        }),
        wc_distrib: all3(alg, |x, y, z| imp(z, wc(x, y)) == wc(imp(z, x), imp(z, y))),
        fixed_zero: alg.elements().all(|x| imp(x, x) != x || x == 0),
    }
}

/// The implications between class properties behind the bank's theorems,
/// each checked on every supplied algebra.
pub fn square_oracle(algs: &[FiniteAlgebra]) -> Result<Vec<OracleReport>, OracleError> {
    type Facet = (&'static str, fn(&Facts) -> bool);
    let facets: [Facet; 11] = [
        ("LCL893 y = y -> y implies y = 0", |f| f.fixed_zero),
        ("LCL894 hoop: weak conjunction is the lub", |f| !f.cwc || f.wc_lub),
        ("LCL895 hoop: -> distributes over weak conjunction", |f| !f.cwc || f.wc_distrib),
        ("LCL896 associative weak conjunction implies cwc", |f| !f.wc_assoc || f.cwc),
        ("LCL897 hoop: weak conjunction is associative", |f| !f.cwc || f.wc_assoc),
        ("LCL898 involutive hoop implies csd", |f| !(f.involutive && f.cwc) || f.csd),
        ("LCL899 csd implies involutive", |f| !f.csd || f.involutive),
        ("LCL900 csd implies cwc", |f| !f.csd || f.cwc),
        ("LCL901 idempotent csd implies boolean", |f| !(f.idempotent && f.csd) || f.peirce),
        ("LCL902 boolean implies involutive", |f| !f.peirce || f.involutive),
        ("LCL903 boolean implies idempotent", |f| !f.peirce || f.idempotent),
    ];
    let mut reports: Vec<OracleReport> = facets.iter().map(|(n, _)| OracleReport::new(n)).collect();
    for (index, alg) in algs.iter().enumerate() {
        if validate_pocrim(alg).is_err() {
            return Err(OracleError::NotPocrim { index });
        }
        let one = alg.annihilator().ok_or(OracleError::NotPocrim { index })?;
        let f = facts(alg, one);
        for (r, (_, holds)) in reports.iter_mut().zip(&facets) {
            r.models += 1;
            r.check(holds(&f), || format!("#{index}:\n{alg}"));
        }
    }
    Ok(reports)
}

/// `x/2 = x` only for `x = 0`, and `x + x = x` only for `x` in `{0, 1}`,
/// so the dyadic model is not idempotent.
pub fn dyadic_fixed_points(max_exponent: u32) -> Vec<OracleReport> {
    let mut half = OracleReport::new("dyadic x/2 = x implies x = 0");
    let mut idem = OracleReport::new("dyadic x + x = x implies x = 0 or x = 1");
    half.models = 1;
    idem.models = 1;
    for x in battery(max_exponent) {
        half.check(x.half() != x || x == Dyadic::ZERO, || format!("x={x}"));
        idem.check(x.cap_add(x) != x || x == Dyadic::ZERO || x == Dyadic::ONE, || format!("x={x}"));
    }
    alloc::vec![half, idem]
}

/// Outcome of checking one bank problem against a list of algebras.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemReport {
    pub id: String,
    pub expected: Expected,
    pub models: usize,
    /// Constant interpretations examined.
    pub tuples: u64,
    pub violations: u64,
    pub countermodel: Option<Refutation>,
}

/// For a theorem, no algebra in the problem's class refutes it. For a
/// countersatisfiable problem, the stored witness re-validates and some
/// algebra refutes it.
pub fn problem_oracle(p: &Problem, algs: &[FiniteAlgebra]) -> Result<ProblemReport, HornEvalError> {
    let k = p.statement.constants().len() as u32;
    let mut report = ProblemReport {
        id: p.id.clone(),
        expected: p.expected,
        models: 0,
        tuples: 0,
        violations: 0,
        countermodel: None,
    };
    for alg in algs {
        if !p.statement.class.accepts(&classify(alg)) {
            continue;
        }
        report.models += 1;
        report.tuples += (alg.size() as u64).pow(k);
        if let Some(constants) = refute_in(&p.statement, alg)? {
            if report.countermodel.is_none() {
                report.countermodel = Some(Refutation {
                    algebra: alg.clone(),
                    constants,
                });
            }
            if p.expected == Expected::Theorem {
                report.violations += 1;
            }
        }
    }
    if p.expected == Expected::Countersatisfiable {
        let witness_ok = match &p.witness {
            Some(w) => {
                validate_pocrim(&w.algebra).is_ok() && is_refutation(&p.statement, &w.algebra, &w.constants)?
            }
            None => false,
        };
        if !witness_ok {
            report.violations += 1;
        }
        if report.countermodel.is_none() {
            report.violations += 1;
        }
    }
    Ok(report)
}
