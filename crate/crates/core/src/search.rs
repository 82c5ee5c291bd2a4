//! Finite pocrim enumeration and counterexample search.
//!
//! Algebras of size `n` are generated poset first. For each partial order
//! on `0..n` with least element `0` and a greatest element, the addition
//! table is filled by backtracking, subject to `x + y >= x, y`, monotonicity
//! and associativity on the partial table. Implication is then the residual
//! `y -> z = min { x : x + y >= z }`, and candidates without one are dropped.
//! With isomorphism pruning only naturally labelled orders are used (every
//! order has such a labelling) and the survivors are reduced to canonical
//! form.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::algebra::{classify, validate_pocrim, ClassFilter, FiniteAlgebra};
use crate::horn::{is_refutation, HornEvalError, HornProblem, Interpretation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub max_size: usize,
    pub require_bounded: bool,
    pub iso_pruning: bool,
    /// Maximum number of addition-table cell assignments.
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_size: 4,
            require_bounded: true,
            iso_pruning: true,
            node_budget: 1_000_000_000,
        }
    }
}

impl SearchConfig {
    pub fn up_to(max_size: usize) -> Self {
        SearchConfig {
            max_size,
            ..Default::default()
        }
    }
}

/// Cell-assignment counter shared by one search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub used: u64,
    pub limit: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    pub fn exhausted(&self) -> bool {
        self.used >= self.limit
    }

    fn spend(&mut self) -> bool {
        if self.used >= self.limit {
            return false;
        }
        self.used += 1;
        true
    }
}

/// A partial order on `0..size` with least element `0` and a top.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poset {
    size: usize,
    ge: Vec<bool>,
}

impl Poset {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ge(&self, x: usize, y: usize) -> bool {
        self.ge[x * self.size + y]
    }
}

/// Orders on `0..n` with `0` least and a greatest element. With `natural`
/// only those where `x >= y` implies `x >= y` as integers, so the top is
/// `n - 1`.
pub fn posets(n: usize, natural: bool) -> Vec<Poset> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut ge = vec![false; n * n];
    for x in 0..n {
        ge[x * n] = true;
        ge[x * n + x] = true;
    }
    if natural {
        natural_posets(n, 1, &mut ge, &mut out);
    } else {
        let pairs: Vec<(usize, usize)> = (1..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        all_posets(n, &pairs, 0, &mut ge, &mut out);
    }
    out
}

fn has_top(n: usize, ge: &[bool]) -> bool {
    (0..n).any(|t| (0..n).all(|x| ge[t * n + x]))
}

fn natural_posets(n: usize, k: usize, ge: &mut Vec<bool>, out: &mut Vec<Poset>) {
    if k == n {
        if has_top(n, ge) {
            out.push(Poset {
                size: n,
                ge: ge.clone(),
            });
        }
        return;
    }
    // Choose the down-set of k among 1..k; it must be down-closed.
    let others = k - 1;
    for mask in 0u32..(1 << others) {
        let below = |j: usize| j == 0 || (mask >> (j - 1)) & 1 == 1;
        let closed = (1..k).all(|j| !below(j) || (0..k).all(|i| !ge[j * n + i] || below(i)));
        if !closed {
            continue;
        }
        if k == n - 1 && (1..k).any(|j| !below(j)) {
            continue;
        }
        for j in 1..k {
            ge[k * n + j] = below(j);
        }
        natural_posets(n, k + 1, ge, out);
        for j in 1..k {
            ge[k * n + j] = false;
        }
    }
}

fn all_posets(n: usize, pairs: &[(usize, usize)], p: usize, ge: &mut Vec<bool>, out: &mut Vec<Poset>) {
    if p == pairs.len() {
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| !ge[x * n + y] || (0..n).all(|z| !ge[y * n + z] || ge[x * n + z]))
        });
        if transitive && has_top(n, ge) {
            out.push(Poset {
                size: n,
                ge: ge.clone(),
            });
        }
        return;
    }
    let (i, j) = pairs[p];
    for state in 0..3 {
        ge[i * n + j] = state == 1;
        ge[j * n + i] = state == 2;
        all_posets(n, pairs, p + 1, ge, out);
    }
    ge[i * n + j] = false;
    ge[j * n + i] = false;
}

const UNSET: u8 = u8::MAX;

struct MonoidSearch<'a> {
    poset: &'a Poset,
    n: usize,
    add: Vec<u8>,
    cells: Vec<(usize, usize)>,
    found: Vec<FiniteAlgebra>,
}

impl MonoidSearch<'_> {
    fn get(&self, x: usize, y: usize) -> u8 {
        self.add[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: u8) {
        self.add[x * self.n + y] = v;
        self.add[y * self.n + x] = v;
    }

    /// Monotonicity and associativity wherever the partial table decides them.
    fn consistent(&self, i: usize, j: usize) -> bool {
        let n = self.n;
        let p = self.poset;
        for (a, b) in [(i, j), (j, i)] {
            let v = self.get(a, b) as usize;
            for y in 0..n {
                let w = self.get(y, b);
                if w == UNSET {
                    continue;
                }
                if p.ge(a, y) && !p.ge(v, w as usize) {
                    return false;
                }
                if p.ge(y, a) && !p.ge(w as usize, v) {
                    return false;
                }
            }
        }
        for x in 1..n {
            for y in 1..n {
                let xy = self.get(x, y);
                if xy == UNSET {
                    continue;
                }
                for z in 1..n {
                    let yz = self.get(y, z);
                    if yz == UNSET {
                        continue;
                    }
                    let l = self.get(xy as usize, z);
                    let r = self.get(x, yz as usize);
                    if l != UNSET && r != UNSET && l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, k: usize, budget: &mut Budget) -> bool {
        if k == self.cells.len() {
            let add: Vec<usize> = self.add.iter().map(|&v| v as usize).collect();
            let p = self.poset;
            if let Some(alg) = FiniteAlgebra::from_monoid_and_order(self.n, &add, |x, y| p.ge(x, y)) {
                self.found.push(alg);
            }
            return true;
        }
        let (i, j) = self.cells[k];
        for u in 0..self.n {
            if !(self.poset.ge(u, i) && self.poset.ge(u, j)) {
                continue;
            }
            if !budget.spend() {
                return false;
            }
            self.set(i, j, u as u8);
            if self.consistent(i, j) && !self.run(k + 1, budget) {
                self.set(i, j, UNSET);
                return false;
            }
        }
        self.set(i, j, UNSET);
        true
    }
}

/// Every algebra whose order is `poset`, unvalidated and in table order.
/// The flag is `false` when the budget ran out.
pub fn monoids_over(poset: &Poset, budget: &mut Budget) -> (Vec<FiniteAlgebra>, bool) {
    let n = poset.size;
    let mut add = vec![UNSET; n * n];
    for x in 0..n {
        add[x] = x as u8;
        add[x * n] = x as u8;
    }
    let cells = (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let mut search = MonoidSearch {
        poset,
        n,
        add,
        cells,
        found: Vec::new(),
    };
    let complete = search.run(0, budget);
    (search.found, complete)
}

/// A key equal for two algebras iff they are isomorphic by a bijection
/// fixing `0`: the least `[n, +, ->]` serialization over all such relabellings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalKey(pub Vec<u8>);

fn serialize(alg: &FiniteAlgebra) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + 2 * alg.size() * alg.size());
    out.push(alg.size() as u8);
    out.extend_from_slice(alg.add_table());
    out.extend_from_slice(alg.imp_table());
    out
}

/// Calls `visit` with every permutation of `0..n` fixing `0`.
fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        visit(&perm);
        // Next lexicographic permutation of perm[1..].
        let Some(i) = (1..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).expect("exists");
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

/// The canonical representative and its key.
pub fn canonical(alg: &FiniteAlgebra) -> (FiniteAlgebra, CanonicalKey) {
    let mut best: Option<(Vec<u8>, FiniteAlgebra)> = None;
    for_each_permutation(alg.size(), |perm| {
        let candidate = alg.permuted(perm);
        let key = serialize(&candidate);
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, candidate));
        }
    });
    let (key, alg) = best.expect("at least the identity");
    (alg, CanonicalKey(key))
}

pub fn canonical_form(alg: &FiniteAlgebra) -> CanonicalKey {
    canonical(alg).1
}

/// Outcome of an enumeration. When `complete` is false the budget ran out
/// and `algebras` is a prefix of the search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enumeration {
    pub algebras: Vec<FiniteAlgebra>,
    pub complete: bool,
    pub nodes: u64,
}

/// Validates, filters and orders the raw candidates of one size. With
/// pruning, one canonical representative per isomorphism class sorted by
/// key; without, every labelled algebra sorted by its tables.
pub fn finish(
    candidates: Vec<FiniteAlgebra>,
    config: &SearchConfig,
    class: &ClassFilter,
) -> Vec<FiniteAlgebra> {
    let keep = |alg: &FiniteAlgebra| {
        if validate_pocrim(alg).is_err() {
            return false;
        }
        let flags = classify(alg);
        (!config.require_bounded || flags.bounded) && class.accepts(&flags)
    };
    if config.iso_pruning {
        let mut classes: BTreeMap<CanonicalKey, FiniteAlgebra> = BTreeMap::new();
        for alg in candidates.into_iter().filter(keep) {
            let (rep, key) = canonical(&alg);
            classes.entry(key).or_insert(rep);
        }
        classes.into_values().collect()
    } else {
        let mut all: Vec<FiniteAlgebra> = candidates.into_iter().filter(keep).collect();
        all.sort();
        all.dedup();
        all
    }
}

/// Every pocrim of exactly `n` elements meeting `class`.
pub fn enumerate_size(
    n: usize,
    config: &SearchConfig,
    class: &ClassFilter,
    budget: &mut Budget,
) -> (Vec<FiniteAlgebra>, bool) {
    let mut candidates = Vec::new();
    let mut complete = true;
    for poset in posets(n, config.iso_pruning) {
        let (found, done) = monoids_over(&poset, budget);
        candidates.extend(found);
        if !done {
            complete = false;
            break;
        }
    }
    (finish(candidates, config, class), complete)
}

/// Every pocrim of size `1..=max_size` meeting `class`, ordered by size and
/// then as described in [`finish`].
pub fn enumerate(config: &SearchConfig, class: &ClassFilter) -> Enumeration {
    let mut budget = Budget::new(config.node_budget);
    let mut algebras = Vec::new();
    let mut complete = true;
    for n in 1..=config.max_size {
        let (found, done) = enumerate_size(n, config, class, &mut budget);
        algebras.extend(found);
        if !done {
            complete = false;
            break;
        }
    }
    Enumeration {
        algebras,
        complete,
        nodes: budget.used,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Refutation {
    pub algebra: FiniteAlgebra,
    pub constants: Interpretation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefuteReport {
    pub refutation: Option<Refutation>,
    /// False when the budget ran out before the bound was covered.
    pub complete: bool,
    pub models_checked: usize,
    pub max_size: usize,
}

/// The first interpretation of the problem's constants in `alg` under which
/// the assumptions hold and every goal fails.
pub fn refute_in(problem: &HornProblem, alg: &FiniteAlgebra) -> Result<Option<Interpretation>, HornEvalError> {
    let names: Vec<_> = problem.constants().into_iter().collect();
    let closed: Vec<_> = problem
        .assumptions
        .iter()
        .filter(|c| c.prop.constants().is_empty())
        .cloned()
        .collect();
    let empty = Interpretation::new();
    for c in &closed {
        if !crate::horn::holds(&c.prop, alg, &empty)? {
            return Ok(None);
        }
    }
    let rest = HornProblem {
        assumptions: problem
            .assumptions
            .iter()
            .filter(|c| !c.prop.constants().is_empty())
            .cloned()
            .collect(),
        goals: problem.goals.clone(),
        class: problem.class.clone(),
    };
    let n = alg.size();
    let mut idx = vec![0usize; names.len()];
    loop {
        let consts: Interpretation = names.iter().cloned().zip(idx.iter().copied()).collect();
        if is_refutation(&rest, alg, &consts)? {
            return Ok(Some(consts));
        }
        let mut i = names.len();
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

/// Searches algebras of increasing size, restricted to the problem's class,
/// for a model of the assumptions falsifying the goals. The result is
/// re-verified by direct evaluation of every clause.
pub fn refute(problem: &HornProblem, config: &SearchConfig) -> Result<RefuteReport, HornEvalError> {
    let mut budget = Budget::new(config.node_budget);
    let mut models_checked = 0;
    for n in 1..=config.max_size {
        let (algs, complete) = enumerate_size(n, config, &problem.class, &mut budget);
        for alg in algs {
            models_checked += 1;
            if let Some(constants) = refute_in(problem, &alg)? {
                assert!(is_refutation(problem, &alg, &constants)?, "refutation failed re-verification");
                return Ok(RefuteReport {
                    refutation: Some(Refutation { algebra: alg, constants }),
                    complete: true,
                    models_checked,
                    max_size: config.max_size,
                });
            }
        }
        if !complete {
            return Ok(RefuteReport {
                refutation: None,
                complete: false,
                models_checked,
                max_size: config.max_size,
            });
        }
    }
    Ok(RefuteReport {
        refutation: None,
        complete: true,
        models_checked,
        max_size: config.max_size,
    })
}
