//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use hoopkit::files;
use hoopkit::sweeps;
use hoopkit_core::algebra::{battery, classify, ClassFilter, FiniteAlgebra, Property, DEFAULT_BATTERY_EXPONENT};
use hoopkit_core::corpus::export::{export_prover9, export_tptp, read_fof, tptp_statements};
use hoopkit_core::corpus::oracles::{dyadic_fixed_points, lemma2_dyadic, problem_oracle, OracleReport};
use hoopkit_core::corpus::{find, TPTP_IDS};
use hoopkit_core::kernel::{DerivationErrorKind, StepError};
use hoopkit_core::search::{refute, SearchConfig};
use hoopkit_core::semantics::{dyadic_soundness_sweep, model_class, FormulaPool};
use hoopkit_core::{check_derivation, parse, AxiomId, Derivation, Formula, Logic, Sequent};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_clean(reports: &[OracleReport]) -> Result<(), String> {
    for r in reports {
        ensure(r.is_clean(), || format!("{}: {} violations {:?}", r.name, r.violation_count, r.violations))?;
    }
    Ok(())
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0]];
    for _ in 1..n {
        let mut next = Vec::new();
        for p in &out {
            for x in 1..n {
                if !p.contains(&x) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        out = next;
    }
    out
}

fn pocrims_up_to(n: usize) -> Vec<FiniteAlgebra> {
    sweeps::enumerate(&SearchConfig::up_to(n), &ClassFilter::any()).algebras
}

fn hoops_up_to(n: usize) -> Vec<FiniteAlgebra> {
    sweeps::enumerate(&SearchConfig::up_to(n), &ClassFilter::of(&[Property::Hoop])).algebras
}

/// The four-element chain 0 < p < q < 1 is found by refutation and is the
/// one with x + y = 1 for nonzero x, y.
fn counterexample() -> Outcome {
    let problem = files::read_problem(&data("pocrim_not_hoop.p")).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let report = refute(&problem, &SearchConfig::up_to(4)).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let found = report.refutation.ok_or("no countermodel up to size 4")?;
    let alg = found.algebra;
    ensure(alg.size() == 4, || format!("countermodel has size {}", alg.size()))?;
    // Chain 0 < 1 < 2 < 3 in the numeric order, nonzero sums absorbed by 3.
    let iso = permutations_fixing_zero(4).into_iter().any(|perm| {
        let m = alg.permuted(&perm);
        (0..4).all(|x| {
            (0..4).all(|y| {
                let sum = if x == 0 { y } else if y == 0 { x } else { 3 };
                m.add(x, y) == sum && m.ge(x, y) == (x >= y)
            })
        })
    });
    ensure(iso, || format!("countermodel is not the chain:\n{alg}"))?;
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:?}"))?;
    Ok(format!("size 4 chain after {} models in {elapsed:?}", report.models_checked))
}

fn theorem2() -> Outcome {
    let start = Instant::now();
    let hoops = hoops_up_to(6);
    ensure(hoops.len() == 42, || format!("{} hoops up to size 6", hoops.len()))?;
    let r = sweeps::theorem2(&hoops).map_err(|e| e.to_string())?;
    all_clean(std::slice::from_ref(&r))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"))?;
    Ok(format!("{} hoops, {} elements, 0 violations in {elapsed:?}", r.models, r.tuples))
}

fn lemma2() -> Outcome {
    let hoops = hoops_up_to(5);
    let finite = sweeps::lemma2(&hoops).map_err(|e| e.to_string())?;
    let dyadic = lemma2_dyadic(DEFAULT_BATTERY_EXPONENT);
    ensure(finite.len() == 9 && dyadic.len() == 9, || "expected nine claims".into())?;
    all_clean(&finite)?;
    all_clean(&dyadic)?;
    for r in finite.iter().chain(&dyadic) {
        ensure(r.tuples > 0, || format!("{} checked no tuples", r.name))?;
    }
    let tuples: u64 = finite.iter().chain(&dyadic).map(|r| r.tuples).sum();
    Ok(format!(
        "{} hoops and dyadics of exponent <= {DEFAULT_BATTERY_EXPONENT}, {tuples} tuples",
        hoops.len()
    ))
}

fn no_finite_coop() -> Outcome {
    let coops = sweeps::enumerate(&SearchConfig::up_to(6), &ClassFilter::of(&[Property::Coop]));
    ensure(coops.complete, || "enumeration incomplete".into())?;
    let sizes: Vec<usize> = coops.algebras.iter().map(FiniteAlgebra::size).collect();
    ensure(sizes == [1], || format!("coops of sizes {sizes:?}"))?;
    let r = sweeps::finite_coops(&pocrims_up_to(6));
    all_clean(std::slice::from_ref(&r))?;
    Ok(format!("{} pocrims up to size 6, only the trivial coop", r.models))
}

fn square() -> Outcome {
    let pocrims = pocrims_up_to(5);
    let facets = sweeps::square(&pocrims).map_err(|e| e.to_string())?;
    all_clean(&facets)?;
    for id in ["LCL898", "LCL899", "LCL900", "LCL901", "LCL902", "LCL903"] {
        let p = find(id).ok_or(format!("{id} missing"))?;
        let r = problem_oracle(&p, &pocrims).map_err(|e| e.to_string())?;
        ensure(r.violations == 0 && r.models > 0, || format!("{id}: {r:?}"))?;
    }
    let count = |f: &dyn Fn(&hoopkit_core::ClassFlags) -> bool| pocrims.iter().filter(|a| f(&classify(a))).count();
    let csd = count(&|f| f.csd);
    let boolean = count(&|f| f.boolean());
    let idem_csd = count(&|f| f.idempotent && f.csd);
    ensure(csd > 1 && boolean > 1 && idem_csd > 1, || "a premise class is trivial".into())?;
    Ok(format!(
        "{} pocrims: {csd} with csd, {idem_csd} idempotent with csd, {boolean} boolean",
        pocrims.len()
    ))
}

fn soundness() -> Outcome {
    let pocrims = pocrims_up_to(4);
    let axiom_values = battery(DEFAULT_BATTERY_EXPONENT);
    let rule_values = battery(sweeps::RULE_BATTERY_EXPONENT);
    let mut summary = Vec::new();
    for logic in Logic::ALL {
        let class = model_class(logic);
        let members: Vec<FiniteAlgebra> = pocrims.iter().filter(|a| class.accepts(&classify(a))).cloned().collect();
        ensure(!members.is_empty(), || format!("{logic}: empty class"))?;
        let pool = FormulaPool::standard(logic.allows_halving());
        let r = sweeps::soundness(logic, &members, &pool).map_err(|e| e.to_string())?;
        ensure(r.violation_count == 0, || format!("{logic}: {:?}", r.violations))?;
        let mut dyadic = String::new();
        if matches!(logic, Logic::CLi | Logic::CLc) {
            let d = dyadic_soundness_sweep(logic, &axiom_values, &rule_values).map_err(|e| e.to_string())?;
            ensure(d.violation_count == 0, || format!("{logic} dyadic: {:?}", d.violations))?;
            dyadic = format!("+dyadic {}", d.axiom_checks + d.rule_checks);
        }
        summary.push(format!("{logic} {}{dyadic}", members.len()));
    }
    Ok(summary.join(", "))
}

fn seq(s: &str) -> Sequent {
    Sequent::parse(s).expect("sequent")
}

fn axiom(id: AxiomId, binding: &[(&str, &str)], conclusion: &str) -> Derivation {
    let inst = binding
        .iter()
        .map(|(m, f)| (m.to_string(), parse(f).expect("formula")))
        .collect();
    Derivation::axiom(id, inst, seq(conclusion))
}

fn kernel() -> Outcome {
    let curry = files::read_derivation(&data("curry_ali.json")).map_err(|e| e.to_string())?;
    let goal = Sequent::new(vec![], parse("(A + B -o C) -o A -o B -o C").unwrap());
    ensure(curry.conclusion == goal, || format!("checked-in derivation proves {}", curry.conclusion))?;
    check_derivation(&curry, Logic::ALi).map_err(|e| format!("rejected: {e}"))?;

    // Use A twice above the +I node while its conclusion keeps one copy.
    let mut contracted = curry.clone();
    let conj = contracted.at_mut(&[0, 0, 0, 0]).ok_or("no +I node")?;
    conj.premises[0] = axiom(AxiomId::ASM, &[("A", "A")], "A, A |- A");
    let err = check_derivation(&contracted, Logic::ALi).err().ok_or("contraction accepted")?;
    ensure(
        err.path == [0, 0, 0, 0] && matches!(err.kind, DerivationErrorKind::Step(StepError::Context { .. })),
        || format!("unexpected rejection {err}"),
    )?;

    let halving = [
        axiom(AxiomId::HLB, &[("A", "P")], "P/2, P/2 |- P"),
        axiom(AxiomId::HUB, &[("A", "P")], "P/2 -o P |- P/2"),
        Derivation::node(
            hoopkit_core::Rule::ImpI,
            vec![axiom(AxiomId::HLB, &[("A", "P + Q")], "(P + Q)/2, (P + Q)/2 |- P + Q")],
            seq("(P + Q)/2 |- (P + Q)/2 -o P + Q"),
        ),
    ];
    for d in &halving {
        check_derivation(d, Logic::CLi).map_err(|e| format!("CLi rejected {}: {e}", d.conclusion))?;
        let err = check_derivation(d, Logic::IL).err().ok_or("IL accepted a halving derivation")?;
        ensure(
            matches!(
                err.kind,
                DerivationErrorKind::AxiomUnavailable { .. } | DerivationErrorKind::HalvingNotInLanguage { .. }
            ),
            || format!("unexpected IL rejection {err}"),
        )?;
    }

    let coops = sweeps::enumerate(&SearchConfig::up_to(6), &ClassFilter::of(&[Property::Coop, Property::Idempotent]));
    ensure(coops.algebras.iter().all(|a| a.size() == 1), || "non-trivial idempotent coop".into())?;
    all_clean(&dyadic_fixed_points(DEFAULT_BATTERY_EXPONENT))?;
    Ok(format!(
        "accepts the {}-node derivation, rejects contraction at {}, rejects {} halving derivations under IL",
        curry.size(),
        "root.0.0.0.0",
        halving.len()
    ))
}

const LISTING_HOOP: &str = concat!(
    "op(500, infix, \"==>\").\n",
    "formulas(assumptions).\n",
    "   (x + y) + z = x + (y + z).       \n",
    "   x + y = y + x.                   \n",
    "   x + 0 = x.                       \n",
    "   x >= x.                          \n",
    "   x >= y & y >= z -> x >= z.       \n",
    "   x >= y & y >= x -> x = y.        \n",
    "   x >= y -> x + z >= y + z.        \n",
    "   x >= 0.                          \n",
    "   x + 1 = 1.                       \n",
    "   x + y >= z <-> x >= y ==> z.     \n",
    "end_of_list.\n",
    "formulas(goals).\n",
    "   x + (x ==> y) = y + (y ==> x).   \n",
    "end_of_list.\n",
);

const LISTING_HALVING: &str = concat!(
    "op(500, infix, \"==>\").\n",
    "formulas(assumptions).\n",
    "   (x + y) + z = x + (y + z).       \n",
    "   x + y = y + x.                   \n",
    "   x + 0 = x.                       \n",
    "   x >= x.                          \n",
    "   x >= y & y >= z -> x >= z.       \n",
    "   x >= y & y >= x -> x = y.        \n",
    "   x >= y -> x + z >= y + z.        \n",
    "   x >= 0.                          \n",
    "   x + y >= z <-> x >= y ==> z.     \n",
    "   x + (x ==> y) = y + (y ==> x).   \n",
    "   a ==> b = a.                     \n",
    "   c ==> b = c.                     \n",
    "end_of_list.\n",
    "formulas(goals).\n",
    "   a = c.\n",
    "end_of_list.\n",
);

fn golden() -> Outcome {
    for (id, listing) in [("pocrim-is-hoop", LISTING_HOOP), ("LCL888", LISTING_HALVING)] {
        let p = find(id).ok_or(format!("{id} missing"))?;
        let text = export_prover9(&p);
        ensure(text == listing, || format!("{id} export differs:\n{text}"))?;
    }
    let mut ids = Vec::new();
    for id in TPTP_IDS {
        let p = find(id).ok_or(format!("{id} missing"))?;
        let text = export_tptp(&p);
        let header = text.lines().next().unwrap_or_default();
        ensure(header.starts_with("% Problem") && header.ends_with(id), || format!("{id}: header {header}"))?;
        let parsed = read_fof(&text).map_err(|e| format!("{id}: {e}"))?;
        ensure(parsed == tptp_statements(&p), || format!("{id}: re-parse differs"))?;
        ensure(
            parsed.iter().filter(|s| s.role == "conjecture").count() == 1,
            || format!("{id}: conjecture count"),
        )?;
        ids.push(id);
    }
    Ok(format!("2 listings byte-exact, {} TPTP problems re-parse", ids.len()))
}

/// Every way of deleting a subset of the bracket pairs of `text`.
fn bracket_deletions(text: &str) -> Vec<String> {
    let mut stack = Vec::new();
    let mut pairs = Vec::new();
    for (i, c) in text.char_indices() {
        match c {
            '(' => stack.push(i),
            ')' => pairs.push((stack.pop().expect("balanced"), i)),
            _ => {}
        }
    }
    (1u32..(1 << pairs.len()))
        .map(|mask| {
            let drop: BTreeSet<usize> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .flat_map(|(_, &(l, r))| [l, r])
                .collect();
            text.char_indices().filter(|(i, _)| !drop.contains(i)).map(|(_, c)| c).collect()
        })
        .collect()
}

fn parser() -> Outcome {
    let var = Formula::var;
    let redundant = "(A + (B/2)) -o (C -o (D + F))";
    let expected = Formula::imp(
        Formula::conj(var("A"), Formula::half(var("B"))),
        Formula::imp(var("C"), Formula::conj(var("D"), var("F"))),
    );
    let variants = bracket_deletions(redundant);
    for v in std::iter::once(redundant.to_string()).chain(variants.iter().cloned()) {
        ensure(parse(&v).ok().as_ref() == Some(&expected), || format!("`{v}` parses differently"))?;
    }
    ensure(expected.to_string() == "A + B/2 -o C -o D + F", || expected.to_string())?;

    let required = "(((A -o B) -o C) + D)/2";
    let expected = Formula::half(Formula::conj(
        Formula::imp(Formula::imp(var("A"), var("B")), var("C")),
        var("D"),
    ));
    ensure(parse(required).ok().as_ref() == Some(&expected), || "required example misparsed".into())?;
    let drops = bracket_deletions(required);
    for v in &drops {
        ensure(parse(v).ok().as_ref() != Some(&expected), || format!("`{v}` still parses the same"))?;
    }
    ensure(expected.to_string() == required, || expected.to_string())?;
    Ok(format!("{} deletions redundant, {} deletions change the tree", variants.len(), drops.len()))
}

fn run_enumerate(extra: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hoopkit"))
        .args(["enumerate", "--max-size", "5", "--keys"])
        .args(extra)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn determinism() -> Outcome {
    let first = run_enumerate(&[])?;
    let second = run_enumerate(&["--jobs", "1"])?;
    ensure(first == second, || "two runs differ".into())?;
    let keys: Vec<&str> = first.lines().collect();
    let distinct: BTreeSet<&str> = keys.iter().copied().collect();
    ensure(distinct.len() == keys.len(), || "pruned run repeats a key".into())?;
    let unpruned = run_enumerate(&["--no-pruning"])?;
    let deduped: BTreeSet<&str> = unpruned.lines().collect();
    ensure(deduped == distinct, || "pruned and unpruned key sets differ".into())?;
    Ok(format!(
        "{} keys twice, {} labelled algebras dedup to the same set",
        keys.len(),
        unpruned.lines().count()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("counterexample rediscovery", counterexample),
        ("halving uniqueness on hoops <= 6", theorem2),
        ("halving claims (1)-(9)", lemma2),
        ("no finite coop", no_finite_coop),
        ("square facts on pocrims <= 5", square),
        ("soundness sweep", soundness),
        ("proof kernel", kernel),
        ("golden exports", golden),
        ("parser bracketing", parser),
        ("enumeration determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
