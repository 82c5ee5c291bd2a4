//! Enumeration against a brute-force oracle that shares no code with the
//! search: every commutative table with identity 0 over every partial order
//! with least element 0, residuals found by exhaustive check.

use std::collections::BTreeSet;

use hoopkit_core::algebra::{classify, ClassFilter, FiniteAlgebra, Property};
use hoopkit_core::search::{canonical_form, enumerate, SearchConfig};

/// Partial orders on `0..n` with `0` least, as `ge[x * n + y]`.
fn orders(n: usize) -> Vec<Vec<bool>> {
    let pairs: Vec<(usize, usize)> = (1..n)
        .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
        .collect();
    let mut out = Vec::new();
    for code in 0..3usize.pow(pairs.len() as u32) {
        let mut ge = vec![false; n * n];
        for x in 0..n {
            ge[x * n + x] = true;
            ge[x * n] = true;
        }
        let mut c = code;
        for &(x, y) in &pairs {
            match c % 3 {
                1 => ge[x * n + y] = true,
                2 => ge[y * n + x] = true,
                _ => {}
            }
            c /= 3;
        }
        let transitive = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| !(ge[x * n + y] && ge[y * n + z]) || ge[x * n + z]))
        });
        if transitive {
            out.push(ge);
        }
    }
    out
}

/// Every labelled pocrim on `0..n`.
fn brute_force(n: usize) -> Vec<FiniteAlgebra> {
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (x..n).map(move |y| (x, y))).collect();
    let mut out = Vec::new();
    for ge in orders(n) {
        let geq = |x: usize, y: usize| ge[x * n + y];
        for code in 0..n.pow(cells.len() as u32) {
            let mut add = vec![0usize; n * n];
            for x in 0..n {
                add[x] = x;
                add[x * n] = x;
            }
            let mut c = code;
            for &(x, y) in &cells {
                add[x * n + y] = c % n;
                add[y * n + x] = c % n;
                c /= n;
            }
            let sum = |x: usize, y: usize| add[x * n + y];
            let assoc = (0..n).all(|x| {
                (0..n).all(|y| (0..n).all(|z| sum(sum(x, y), z) == sum(x, sum(y, z))))
            });
            let monotone = (0..n).all(|x| {
                (0..n).all(|y| !geq(x, y) || (0..n).all(|z| geq(sum(x, z), sum(y, z))))
            });
            if !assoc || !monotone {
                continue;
            }
            // y -> z is the element x with: w + y >= z iff w >= x, for all w.
            let mut imp = vec![0usize; n * n];
            let residuated = (0..n).all(|y| {
                (0..n).all(|z| {
                    let found = (0..n).find(|&x| (0..n).all(|w| geq(sum(w, y), z) == geq(w, x)));
                    match found {
                        Some(x) => {
                            imp[y * n + z] = x;
                            true
                        }
                        None => false,
                    }
                })
            });
            if residuated {
                out.push(FiniteAlgebra::from_tables(n, &add, &imp).unwrap());
            }
        }
    }
    out
}

fn permutations_fixing_zero(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![0], &mut (1..n).collect(), &mut out);
    out
}

/// Least relabelling, compared on the tables.
fn iso_class(alg: &FiniteAlgebra) -> FiniteAlgebra {
    permutations_fixing_zero(alg.size())
        .iter()
        .map(|p| alg.permuted(p))
        .min()
        .unwrap()
}

#[test]
fn labelled_enumeration_matches_brute_force() {
    for n in 1..=4 {
        let oracle: BTreeSet<FiniteAlgebra> = brute_force(n).into_iter().collect();
        let config = SearchConfig {
            iso_pruning: false,
            ..SearchConfig::up_to(n)
        };
        let found: BTreeSet<FiniteAlgebra> = enumerate(&config, &ClassFilter::any())
            .algebras
            .into_iter()
            .filter(|a| a.size() == n)
            .collect();
        assert_eq!(found, oracle, "size {n}");
    }
}

#[test]
fn pruned_enumeration_has_one_algebra_per_class() {
    for n in 1..=4 {
        let oracle: BTreeSet<FiniteAlgebra> = brute_force(n).iter().map(iso_class).collect();
        let pruned: Vec<FiniteAlgebra> = enumerate(&SearchConfig::up_to(n), &ClassFilter::any())
            .algebras
            .into_iter()
            .filter(|a| a.size() == n)
            .collect();
        let classes: BTreeSet<FiniteAlgebra> = pruned.iter().map(iso_class).collect();
        assert_eq!(classes.len(), pruned.len(), "size {n}: duplicate class");
        assert_eq!(classes, oracle, "size {n}");
    }
}

#[test]
fn every_finite_pocrim_is_bounded() {
    for n in 1..=4 {
        assert!(brute_force(n).iter().all(|a| classify(a).bounded), "size {n}");
    }
}

#[test]
fn known_counts_up_to_six() {
    let all = enumerate(&SearchConfig::up_to(6), &ClassFilter::any());
    assert!(all.complete);
    let count = |pred: &dyn Fn(&FiniteAlgebra) -> bool| -> Vec<usize> {
        (1..=6)
            .map(|n| all.algebras.iter().filter(|a| a.size() == n && pred(a)).count())
            .collect()
    };
    assert_eq!(count(&|_| true), [1, 1, 2, 7, 26, 129]);
    assert_eq!(count(&|a| classify(a).hoop), [1, 1, 2, 5, 10, 23]);
    assert_eq!(count(&|a| classify(a).coop), [1, 0, 0, 0, 0, 0]);
    let hoops = enumerate(&SearchConfig::up_to(6), &ClassFilter::of(&[Property::Hoop]));
    assert_eq!(hoops.algebras.len(), 42);
}

#[test]
fn pruned_and_unpruned_agree_up_to_five() {
    let pruned = enumerate(&SearchConfig::up_to(5), &ClassFilter::any());
    let unpruned = enumerate(
        &SearchConfig {
            iso_pruning: false,
            ..SearchConfig::up_to(5)
        },
        &ClassFilter::any(),
    );
    let keys = |algs: &[FiniteAlgebra]| -> Vec<_> {
        let set: BTreeSet<_> = algs.iter().map(|a| (a.size(), canonical_form(a))).collect();
        set.into_iter().collect()
    };
    let pruned_keys: Vec<_> = pruned.algebras.iter().map(|a| (a.size(), canonical_form(a))).collect();
    assert_eq!(pruned_keys, keys(&pruned.algebras));
    assert_eq!(keys(&unpruned.algebras), pruned_keys);
}

#[test]
fn runs_are_deterministic() {
    let a = enumerate(&SearchConfig::up_to(5), &ClassFilter::any());
    let b = enumerate(&SearchConfig::up_to(5), &ClassFilter::any());
    assert_eq!(a, b);
}
