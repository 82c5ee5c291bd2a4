//! A bank of problems about pocrims and hoops, each with its expected
//! status, plus brute-force oracles and exporters.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::algebra::{ClassFilter, FiniteAlgebra, Property};
use crate::horn::{parse_clause, Clause, HornProblem};
use crate::search::Refutation;

pub mod export;
pub mod oracles;

pub use export::{export_prover9, export_tptp, read_fof, FofError, FofStatement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    /// No finite countermodel exists.
    Theorem,
    /// Some finite model satisfies the assumptions and falsifies the goals.
    Countersatisfiable,
}

impl Expected {
    pub fn name(self) -> &'static str {
        match self {
            Expected::Theorem => "theorem",
            Expected::Countersatisfiable => "countersatisfiable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Problem {
    pub id: String,
    pub title: String,
    pub statement: HornProblem,
    pub expected: Expected,
    pub notes: String,
    /// A stored countermodel for countersatisfiable problems.
    #[serde(default)]
    pub witness: Option<Refutation>,
}

/// The ids of the sixteen problems contributed to TPTP.
pub const TPTP_IDS: [&str; 16] = [
    "LCL888", "LCL889", "LCL890", "LCL891", "LCL892", "LCL893", "LCL894", "LCL895", "LCL896",
    "LCL897", "LCL898", "LCL899", "LCL900", "LCL901", "LCL902", "LCL903",
];

/// Labels of the structural laws; other labels mark problem hypotheses.
pub const LAW_LABELS: [&str; 17] = [
    "m1", "m2", "m3", "o1", "o2", "o3", "o4", "b", "r", "ann", "cwc", "csd", "inv", "idem",
    "peirce", "h1", "h2",
];

fn clause(label: &str, text: &str) -> Clause {
    let mut c = parse_clause(text).expect("bank clause parses");
    if !label.is_empty() {
        c.label = Some(label.into());
    }
    c
}

const POCRIM_HEAD: [(&str, &str); 8] = [
    ("m1", "(x + y) + z = x + (y + z)"),
    ("m2", "x + y = y + x"),
    ("m3", "x + 0 = x"),
    ("o1", "x >= x"),
    ("o2", "x >= y & y >= z -> x >= z"),
    ("o3", "x >= y & y >= x -> x = y"),
    ("o4", "x >= y -> x + z >= y + z"),
    ("b", "x >= 0"),
];
const RESIDUATION: (&str, &str) = ("r", "x + y >= z <-> x >= y ==> z");
const ANN: (&str, &str) = ("ann", "x + 1 = 1");
const CWC: (&str, &str) = ("cwc", "x + (x ==> y) = y + (y ==> x)");
const CSD: (&str, &str) = ("csd", "(x ==> y) ==> y = (y ==> x) ==> x");
const INV: (&str, &str) = ("inv", "(x ==> 1) ==> 1 = x");
const IDEM: (&str, &str) = ("idem", "x + x = x");
const PEIRCE: (&str, &str) = ("peirce", "((x ==> y) ==> x) ==> x = 0");

/// The pocrim laws in listing order, with `[ann]` before `[r]` if asked.
pub fn pocrim_laws(ann: bool) -> Vec<Clause> {
    let mut out: Vec<Clause> = POCRIM_HEAD.iter().map(|(l, t)| clause(l, t)).collect();
    if ann {
        out.push(clause(ANN.0, ANN.1));
    }
    out.push(clause(RESIDUATION.0, RESIDUATION.1));
    out
}

/// The pocrim laws followed by `[cwc]`.
pub fn hoop_laws(ann: bool) -> Vec<Clause> {
    let mut out = pocrim_laws(ann);
    out.push(clause(CWC.0, CWC.1));
    out
}

/// An equational axiomatization of hoops.
pub fn equational_hoop_laws() -> Vec<Clause> {
    vec![
        clause("m1", "(x + y) + z = x + (y + z)"),
        clause("m2", "x + y = y + x"),
        clause("m3", "x + 0 = x"),
        clause("h1", "x ==> x = 0"),
        clause("h2", "(x + y) ==> z = x ==> (y ==> z)"),
        clause(CWC.0, CWC.1),
    ]
}

fn with(mut base: Vec<Clause>, extra: &[(&str, &str)]) -> Vec<Clause> {
    base.extend(extra.iter().map(|(l, t)| clause(l, t)));
    base
}

struct Spec<'a> {
    id: &'a str,
    title: &'a str,
    assumptions: Vec<Clause>,
    goal: (&'a str, &'a str),
    class: &'a [Property],
    expected: Expected,
    notes: &'a str,
}

fn build(s: Spec<'_>) -> Problem {
    Problem {
        id: s.id.into(),
        title: s.title.into(),
        statement: HornProblem {
            assumptions: s.assumptions,
            goals: vec![clause(s.goal.0, s.goal.1)],
            class: ClassFilter::of(s.class),
        },
        expected: s.expected,
        notes: s.notes.into(),
        witness: None,
    }
}

const CLAIMS: [(&str, &str); 9] = [
    ("b >= a & b >= c", "b dominates a and c."),
    ("a + a = b", "a + a = b."),
    ("a ==> (a ==> c) = 0", "a -> (a -> c) = 0."),
    (
        "(x ==> y) + z >= x ==> ((y + (y ==> x)) + z)",
        "(x -> y) + z >= x -> (y + (y -> x) + z); holds in every hoop.",
    ),
    ("c ==> ((a + a) + x) >= c", "c -> (a + a + x) >= c."),
    ("c ==> a >= a ==> c", "c -> a >= a -> c."),
    ("c ==> a = a ==> c", "c -> a = a -> c."),
    ("(c + (c ==> a)) + ((a ==> c) ==> a) = b", "c + (c -> a) + ((a -> c) -> a) = b."),
    ("a + c = b", "a + c = b; gives c >= a -> b = a."),
];

/// Every problem in the bank, in a fixed order.
pub fn bank() -> Vec<Problem> {
    use Expected::*;
    use Property::*;
    let hyp_i = ("i", "a ==> b = a");
    let hyp_ii = ("ii", "c ==> b = c");
    let mut out = vec![
        build(Spec {
            id: "pocrim-is-hoop",
            title: "Every bounded pocrim is a hoop",
            assumptions: pocrim_laws(true),
            goal: CWC,
            class: &[Bounded],
            expected: Countersatisfiable,
            notes: "Refuted by the four-element chain 0 < p < q < 1 with x + y = 1 whenever x, y are nonzero.",
        }),
        build(Spec {
            id: "pocrim-is-idempotent",
            title: "Every pocrim is idempotent",
            assumptions: pocrim_laws(false),
            goal: IDEM,
            class: &[],
            expected: Countersatisfiable,
            notes: "Refuted by the three-element Lukasiewicz chain.",
        }),
        build(Spec {
            id: "pocrim-is-involutive",
            title: "Every bounded pocrim is involutive",
            assumptions: pocrim_laws(true),
            goal: INV,
            class: &[Bounded],
            expected: Countersatisfiable,
            notes: "Refuted by the three-element Goedel chain.",
        }),
        build(Spec {
            id: "hoop-is-wajsberg",
            title: "Every bounded hoop has [csd]",
            assumptions: hoop_laws(true),
            goal: CSD,
            class: &[Bounded, Hoop],
            expected: Countersatisfiable,
            notes: "Refuted by the three-element Goedel chain, an idempotent non-involutive hoop.",
        }),
        build(Spec {
            id: "LCL888",
            title: "Halving is unique: rule for a = b/2",
            assumptions: with(hoop_laws(false), &[hyp_i, hyp_ii]),
            goal: ("", "a = c"),
            class: &[Hoop],
            expected: Theorem,
            notes: "In any hoop, a -> b = a and c -> b = c imply a = c.",
        }),
        build(Spec {
            id: "LCL889",
            title: "Halving is unique: rule for a >= b/2",
            assumptions: with(hoop_laws(false), &[("i", "a >= a ==> b"), hyp_ii]),
            goal: ("", "a >= c"),
            class: &[Hoop],
            expected: Theorem,
            notes: "c plays b/2; a >= a -> b suffices for a >= b/2.",
        }),
        build(Spec {
            id: "LCL890",
            title: "Halving is unique: rule for a <= b/2 (i)",
            assumptions: with(hoop_laws(true), &[("i", "a ==> b >= a"), hyp_ii]),
            goal: ("", "c >= a"),
            class: &[Hoop],
            expected: Theorem,
            notes: "First axiomatization: includes the unused annihilator law before [r].",
        }),
        build(Spec {
            id: "LCL891",
            title: "Halving is unique: rule for a <= b/2 (ii)",
            assumptions: with(hoop_laws(false), &[("i", "a ==> b >= a"), hyp_ii]),
            goal: ("", "c >= a"),
            class: &[Hoop],
            expected: Theorem,
            notes: "Second axiomatization: the annihilator law omitted.",
        }),
        build(Spec {
            id: "LCL892",
            title: "Halving is unique: rule for a <= b/2 (iii)",
            assumptions: with(hoop_laws(false), &[ANN, ("i", "a ==> b >= a"), hyp_ii]),
            goal: ("", "c >= a"),
            class: &[Hoop],
            expected: Theorem,
            notes: "Third axiomatization: the annihilator law restored at the end. The three variants differ only in axiom order and inclusion.",
        }),
        build(Spec {
            id: "LCL893",
            title: "x/2 = x implies x = 0",
            assumptions: with(pocrim_laws(false), &[("i", "a = a ==> a")]),
            goal: ("", "a = 0"),
            class: &[],
            expected: Theorem,
            notes: "x/2 is the y with y = y -> x; with y = x this reads x = x -> x.",
        }),
        build(Spec {
            id: "LCL894",
            title: "Weak conjunction is l.u.b. in a hoop (Horn)",
            assumptions: hoop_laws(false),
            goal: ("", "x + (x ==> y) >= x & x + (x ==> y) >= y & (z >= x & z >= y -> z >= x + (x ==> y))"),
            class: &[Hoop],
            expected: Theorem,
            notes: "Horn formulation: an upper bound below every upper bound.",
        }),
        build(Spec {
            id: "LCL895",
            title: "Weak conjunction is l.u.b. in a hoop (Equational)",
            assumptions: hoop_laws(false),
            goal: ("", "z ==> (x + (x ==> y)) = (z ==> x) + ((z ==> x) ==> (z ==> y))"),
            class: &[Hoop],
            expected: Theorem,
            notes: "Equational formulation: implication distributes over weak conjunction in the consequent.",
        }),
        build(Spec {
            id: "LCL896",
            title: "Associativity of weak conjunction implies [cwc]",
            assumptions: with(
                pocrim_laws(false),
                &[("i", "x + (x ==> (y + (y ==> z))) = (x + (x ==> y)) + ((x + (x ==> y)) ==> z)")],
            ),
            goal: CWC,
            class: &[],
            expected: Theorem,
            notes: "Weak conjunction x + (x -> y), associative as a binary operation.",
        }),
        build(Spec {
            id: "LCL897",
            title: "Weak conjunction is associative in a hoop",
            assumptions: equational_hoop_laws(),
            goal: ("", "x + (x ==> (y + (y ==> z))) = (x + (x ==> y)) + ((x + (x ==> y)) ==> z)"),
            class: &[Hoop],
            expected: Theorem,
            notes: "Stated over the equational hoop axioms.",
        }),
        build(Spec {
            id: "LCL898",
            title: "An involutive hoop has [csd]",
            assumptions: with(hoop_laws(true), &[INV]),
            goal: CSD,
            class: &[Bounded, Hoop, Involutive],
            expected: Theorem,
            notes: "[cwc] and [dne] together give [csd].",
        }),
        build(Spec {
            id: "LCL899",
            title: "A bounded pocrim with [csd] is involutive",
            assumptions: with(pocrim_laws(true), &[CSD]),
            goal: INV,
            class: &[Bounded, Csd],
            expected: Theorem,
            notes: "",
        }),
        build(Spec {
            id: "LCL900",
            title: "A bounded pocrim with [csd] is a hoop",
            assumptions: with(pocrim_laws(true), &[CSD]),
            goal: CWC,
            class: &[Bounded, Csd],
            expected: Theorem,
            notes: "",
        }),
        build(Spec {
            id: "LCL901",
            title: "An idempotent pocrim with [csd] is boolean",
            assumptions: with(pocrim_laws(true), &[IDEM, CSD]),
            goal: PEIRCE,
            class: &[Bounded, Idempotent, Csd],
            expected: Theorem,
            notes: "Boolean means Peirce's law ((x -> y) -> x) -> x = 0.",
        }),
        build(Spec {
            id: "LCL902",
            title: "A boolean pocrim is involutive",
            assumptions: with(pocrim_laws(true), &[PEIRCE]),
            goal: INV,
            class: &[Bounded, Boolean],
            expected: Theorem,
            notes: "Boolean means Peirce's law.",
        }),
        build(Spec {
            id: "LCL903",
            title: "A boolean pocrim is idempotent",
            assumptions: with(pocrim_laws(false), &[PEIRCE]),
            goal: IDEM,
            class: &[Boolean],
            expected: Theorem,
            notes: "Boolean means Peirce's law.",
        }),
    ];
    for (k, (goal, note)) in CLAIMS.iter().enumerate() {
        let id = alloc::format!("claim-{}", k + 1);
        let title = alloc::format!("Halving claim ({})", k + 1);
        out.push(build(Spec {
            id: &id,
            title: &title,
            assumptions: with(hoop_laws(false), &[hyp_i, hyp_ii]),
            goal: ("", goal),
            class: &[Hoop],
            expected: Theorem,
            notes: note,
        }));
    }
    attach_witnesses(&mut out);
    out
}

fn attach_witnesses(problems: &mut [Problem]) {
    let one = |alg: &FiniteAlgebra| {
        let top = alg.annihilator().expect("finite pocrims are bounded");
        [("1".to_string(), top)].into_iter().collect()
    };
    for p in problems.iter_mut() {
        let alg = match p.id.as_str() {
            "pocrim-is-hoop" => FiniteAlgebra::drastic_chain(4),
            "pocrim-is-idempotent" => FiniteAlgebra::lukasiewicz(3),
            "pocrim-is-involutive" | "hoop-is-wajsberg" => FiniteAlgebra::goedel_chain(3),
            _ => continue,
        };
        let constants = if p.statement.constants().is_empty() {
            Default::default()
        } else {
            one(&alg)
        };
        p.witness = Some(Refutation {
            algebra: alg,
            constants,
        });
    }
}

pub fn find(id: &str) -> Option<Problem> {
    bank().into_iter().find(|p| p.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    #[test]
    fn ids_are_unique_and_complete() {
        let b = bank();
        let ids: BTreeSet<&str> = b.iter().map(|p| p.id.as_str()).collect();
        assert_eq!(ids.len(), b.len());
        for id in TPTP_IDS {
            assert!(ids.contains(id), "{id}");
        }
        assert_eq!(b.iter().filter(|p| p.id.starts_with("claim-")).count(), 9);
    }

    #[test]
    fn labels_are_known_or_hypotheses() {
        for p in bank() {
            for c in &p.statement.assumptions {
                let l = c.label.as_deref().unwrap();
                assert!(LAW_LABELS.contains(&l) || l == "i" || l == "ii", "{}: {l}", p.id);
            }
        }
    }

    #[test]
    fn witnesses_refute() {
        for p in bank() {
            match p.expected {
                Expected::Countersatisfiable => {
                    let w = p.witness.as_ref().expect("witness");
                    assert!(crate::validate_pocrim(&w.algebra).is_ok());
                    assert!(
                        crate::horn::is_refutation(&p.statement, &w.algebra, &w.constants).unwrap(),
                        "{}",
                        p.id
                    );
                }
                Expected::Theorem => assert!(p.witness.is_none()),
            }
        }
    }
}
