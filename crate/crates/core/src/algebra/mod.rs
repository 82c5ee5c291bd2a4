//! Finite structures for the signature `(0, +, ->; >=)`, the pocrim law
//! validator, model-class classification and the exact dyadic model.
//!
//! Elements are indices `0..n` with `0` the monoid identity. The order is not
//! stored: `x >= y` holds exactly when `x -> y = 0`.

mod dyadic;

pub use dyadic::{battery, Dyadic, DEFAULT_BATTERY_EXPONENT};

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FiniteAlgebra {
    size: usize,
    add: Vec<u8>,
    imp: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("carrier must have between 1 and 255 elements, got {0}")]
    Size(usize),
    #[error("{table} table has {found} entries, expected {expected}")]
    Dimensions {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{table} table entry at ({row}, {col}) is {value}, outside 0..{size}")]
    OutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
}

impl FiniteAlgebra {
    /// Builds an algebra from row-major tables of length `size * size`.
    pub fn from_tables(size: usize, add: &[usize], imp: &[usize]) -> Result<Self, TableError> {
        if size == 0 || size > 255 {
            return Err(TableError::Size(size));
        }
        let conv = |table: &'static str, t: &[usize]| -> Result<Vec<u8>, TableError> {
            if t.len() != size * size {
                return Err(TableError::Dimensions {
                    table,
                    expected: size * size,
                    found: t.len(),
                });
            }
            t.iter()
                .enumerate()
                .map(|(i, &v)| {
                    if v < size {
                        Ok(v as u8)
                    } else {
                        Err(TableError::OutOfRange {
                            table,
                            row: i / size,
                            col: i % size,
                            value: v,
                            size,
                        })
                    }
                })
                .collect()
        };
        Ok(FiniteAlgebra {
            size,
            add: conv("+", add)?,
            imp: conv("->", imp)?,
        })
    }

    /// Builds an algebra from an addition table and an order, taking `y -> z`
    /// to be the least `x` (in `ge`) with `x + y >= z`. Returns `None` if some
    /// such least element does not exist.
    pub fn from_monoid_and_order(
        size: usize,
        add: &[usize],
        ge: impl Fn(usize, usize) -> bool,
    ) -> Option<Self> {
        let mut imp = vec![0usize; size * size];
        for y in 0..size {
            for z in 0..size {
                let admits = |x: usize| ge(add[x * size + y], z);
                let least = (0..size)
                    .filter(|&x| admits(x))
                    .find(|&x| (0..size).filter(|&w| admits(w)).all(|w| ge(w, x)))?;
                imp[y * size + z] = least;
            }
        }
        FiniteAlgebra::from_tables(size, add, &imp).ok()
    }

    pub(crate) fn from_raw(size: usize, add: Vec<u8>, imp: Vec<u8>) -> Self {
        debug_assert_eq!(add.len(), size * size);
        debug_assert_eq!(imp.len(), size * size);
        FiniteAlgebra { size, add, imp }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.size + y] as usize
    }

    #[inline]
    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x * self.size + y] as usize
    }

    /// The derived order: `x >= y` iff `x -> y = 0`.
    #[inline]
    pub fn ge(&self, x: usize, y: usize) -> bool {
        self.imp(x, y) == 0
    }

    pub fn add_table(&self) -> &[u8] {
        &self.add
    }

    pub fn imp_table(&self) -> &[u8] {
        &self.imp
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.size
    }

    /// The unique `e` with `x + e = e` for all `x`, located by scan.
    pub fn annihilator(&self) -> Option<usize> {
        self.elements()
            .find(|&e| self.elements().all(|x| self.add(x, e) == e))
    }

    /// The relabelled copy where old element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteAlgebra {
        let n = self.size;
        let mut add = vec![0u8; n * n];
        let mut imp = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                add[perm[x] * n + perm[y]] = perm[self.add(x, y)] as u8;
                imp[perm[x] * n + perm[y]] = perm[self.imp(x, y)] as u8;
            }
        }
        FiniteAlgebra { size: n, add, imp }
    }

    /// The one-element algebra `{0}`.
    pub fn trivial() -> Self {
        FiniteAlgebra::from_raw(1, vec![0], vec![0])
    }

    /// The two-element Boolean pocrim.
    pub fn boolean() -> Self {
        Self::lukasiewicz(2)
    }

    /// The Łukasiewicz chain `{0, 1/(n-1), ..., 1}` with capped addition and
    /// truncated subtraction; element `k` stands for `k/(n-1)`.
    pub fn lukasiewicz(n: usize) -> Self {
        assert!(n >= 1, "empty carrier");
        let top = n - 1;
        let mut add = Vec::with_capacity(n * n);
        let mut imp = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                add.push((x + y).min(top));
                imp.push(y.saturating_sub(x));
            }
        }
        FiniteAlgebra::from_tables(n, &add, &imp).expect("in range")
    }

    /// The chain `0 < 1 < ... < n-1` where the sum of any two non-zero
    /// elements is the top. For `n = 4` this is the bounded pocrim on
    /// `0 < p < q < 1` that is not a hoop.
    pub fn drastic_chain(n: usize) -> Self {
        assert!(n >= 1, "empty carrier");
        let top = n - 1;
        let add: Vec<usize> = (0..n * n)
            .map(|i| {
                let (x, y) = (i / n, i % n);
                if x == 0 || y == 0 {
                    x + y
                } else {
                    top
                }
            })
            .collect();
        FiniteAlgebra::from_monoid_and_order(n, &add, |x, y| x >= y).expect("residuated")
    }

    /// The idempotent chain `0 < 1 < ... < n-1` with `x + y = max(x, y)`.
    pub fn goedel_chain(n: usize) -> Self {
        assert!(n >= 1, "empty carrier");
        let add: Vec<usize> = (0..n * n).map(|i| (i / n).max(i % n)).collect();
        FiniteAlgebra::from_monoid_and_order(n, &add, |x, y| x >= y).expect("residuated")
    }
}

impl fmt::Display for FiniteAlgebra {
    /// The text table format: `size n`, the `+` rows, then the `->` rows.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "size {}", self.size)?;
        for table in [&self.add, &self.imp] {
            for row in table.chunks(self.size) {
                for (i, v) in row.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{v}")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// The laws checked by [`validate_pocrim`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Law {
    /// `(x + y) + z = x + (y + z)`
    M1,
    /// `x + y = y + x`
    M2,
    /// `x + 0 = x`
    M3,
    /// `x >= x`
    O1,
    /// transitivity
    O2,
    /// antisymmetry
    O3,
    /// `x >= y` implies `x + z >= y + z`
    O4,
    /// `x >= 0`
    B,
    /// `x + y >= z` iff `x >= y -> z`
    R,
}

impl Law {
    pub fn name(self) -> &'static str {
        match self {
            Law::M1 => "m1",
            Law::M2 => "m2",
            Law::M3 => "m3",
            Law::O1 => "o1",
            Law::O2 => "o2",
            Law::O3 => "o3",
            Law::O4 => "o4",
            Law::B => "b",
            Law::R => "r",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("law [{}] fails at {witness:?}", law.name())]
pub struct LawViolation {
    pub law: Law,
    pub witness: Vec<usize>,
}

/// Checks every pocrim law under the derived order, reporting the first
/// violated law with a witness tuple.
pub fn validate_pocrim(alg: &FiniteAlgebra) -> Result<(), LawViolation> {
    let n = alg.size();
    let fail = |law, witness: &[usize]| {
        Err(LawViolation {
            law,
            witness: witness.to_vec(),
        })
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if alg.add(alg.add(x, y), z) != alg.add(x, alg.add(y, z)) {
                    return fail(Law::M1, &[x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if alg.add(x, y) != alg.add(y, x) {
                return fail(Law::M2, &[x, y]);
            }
        }
    }
    for x in 0..n {
        if alg.add(x, 0) != x {
            return fail(Law::M3, &[x]);
        }
    }
    for x in 0..n {
        if !alg.ge(x, x) {
            return fail(Law::O1, &[x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if alg.ge(x, y) && alg.ge(y, z) && !alg.ge(x, z) {
                    return fail(Law::O2, &[x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && alg.ge(x, y) && alg.ge(y, x) {
                return fail(Law::O3, &[x, y]);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if alg.ge(x, y) && !alg.ge(alg.add(x, z), alg.add(y, z)) {
                    return fail(Law::O4, &[x, y, z]);
                }
            }
        }
    }
    for x in 0..n {
        if !alg.ge(x, 0) {
            return fail(Law::B, &[x]);
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if alg.ge(alg.add(x, y), z) != alg.ge(x, alg.imp(y, z)) {
                    return fail(Law::R, &[x, y, z]);
                }
            }
        }
    }
    Ok(())
}

/// Model-class membership of a validated pocrim, recomputed from its tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub annihilator: Option<usize>,
    pub bounded: bool,
    /// `¬¬x = x` with `¬x = x -> 1`.
    pub involutive: bool,
    pub idempotent: bool,
    /// `x + (x -> y) = y + (y -> x)`.
    pub hoop: bool,
    /// `(x -> y) -> y = (y -> x) -> x`, independent of the hoop law.
    pub csd: bool,
    /// Bounded hoop satisfying the `csd` identity.
    pub wajsberg: bool,
    /// Hoop in which every `x` has exactly one `y` with `y = y -> x`.
    pub coop: bool,
    /// Peirce's law `((x -> y) -> x) -> x = 0`.
    pub boolean: bool,
    pub cwc_witness: Option<(usize, usize)>,
    pub csd_witness: Option<(usize, usize)>,
}

impl ClassFlags {
    pub fn boolean(&self) -> bool {
        self.boolean
    }

    pub fn has(&self, p: Property) -> bool {
        match p {
            Property::Bounded => self.bounded,
            Property::Involutive => self.involutive,
            Property::Idempotent => self.idempotent,
            Property::Hoop => self.hoop,
            Property::Csd => self.csd,
            Property::Wajsberg => self.wajsberg,
            Property::Coop => self.coop,
            Property::Boolean => self.boolean(),
        }
    }

    /// True if these flags are exactly what [`classify`] recomputes.
    pub fn agrees_with(&self, alg: &FiniteAlgebra) -> bool {
        *self == classify(alg)
    }
}

fn find_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<(usize, usize)> {
    (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .find(|&(x, y)| bad(x, y))
}

/// Computes every class flag by exhaustive check. Assumes `alg` passed
/// [`validate_pocrim`].
pub fn classify(alg: &FiniteAlgebra) -> ClassFlags {
    let n = alg.size();
    let annihilator = alg.annihilator();
    let involutive = annihilator
        .is_some_and(|one| alg.elements().all(|x| alg.imp(alg.imp(x, one), one) == x));
    let idempotent = alg.elements().all(|x| alg.add(x, x) == x);
    let cwc_witness = find_pair(n, |x, y| {
        alg.add(x, alg.imp(x, y)) != alg.add(y, alg.imp(y, x))
    });
    let csd_witness = find_pair(n, |x, y| {
        alg.imp(alg.imp(x, y), y) != alg.imp(alg.imp(y, x), x)
    });
    let boolean = alg
        .elements()
        .all(|x| alg.elements().all(|y| alg.ge(alg.imp(alg.imp(x, y), x), x)));
    let hoop = cwc_witness.is_none();
    let csd = csd_witness.is_none();
    let coop = hoop && alg.elements().all(|x| halve(alg, x).unique().is_some());
    ClassFlags {
        annihilator,
        bounded: annihilator.is_some(),
        involutive,
        idempotent,
        hoop,
        csd,
        wajsberg: annihilator.is_some() && hoop && csd,
        coop,
        boolean,
        cwc_witness,
        csd_witness,
    }
}

/// Natural ordering: whenever `x >= y` there is `z` with `x = y + z`.
pub fn natural_order_check(alg: &FiniteAlgebra) -> bool {
    alg.elements().all(|x| {
        alg.elements()
            .filter(|&y| alg.ge(x, y))
            .all(|y| alg.elements().any(|z| alg.add(y, z) == x))
    })
}

/// All solutions `y` of `y = y -> x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halving {
    pub solutions: Vec<usize>,
}

impl Halving {
    pub fn unique(&self) -> Option<usize> {
        match self.solutions.as_slice() {
            [y] => Some(*y),
            _ => None,
        }
    }

    pub fn count(&self) -> usize {
        self.solutions.len()
    }
}

pub fn halve(alg: &FiniteAlgebra, x: usize) -> Halving {
    Halving {
        solutions: alg.elements().filter(|&y| alg.imp(y, x) == y).collect(),
    }
}

/// Named model-class properties, for filtering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Property {
    Bounded,
    Involutive,
    Idempotent,
    Hoop,
    Csd,
    Wajsberg,
    Coop,
    Boolean,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::Bounded,
        Property::Involutive,
        Property::Idempotent,
        Property::Hoop,
        Property::Csd,
        Property::Wajsberg,
        Property::Coop,
        Property::Boolean,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Bounded => "bounded",
            Property::Involutive => "involutive",
            Property::Idempotent => "idempotent",
            Property::Hoop => "hoop",
            Property::Csd => "csd",
            Property::Wajsberg => "wajsberg",
            Property::Coop => "coop",
            Property::Boolean => "boolean",
        }
    }
}

/// A conjunction of required and forbidden properties.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFilter {
    pub required: Vec<(Property, bool)>,
}

impl ClassFilter {
    /// Every pocrim.
    pub fn any() -> Self {
        ClassFilter::default()
    }

    pub fn of(props: &[Property]) -> Self {
        ClassFilter {
            required: props.iter().map(|&p| (p, true)).collect(),
        }
    }

    pub fn with(mut self, p: Property, value: bool) -> Self {
        self.required.push((p, value));
        self
    }

    pub fn accepts(&self, flags: &ClassFlags) -> bool {
        self.required.iter().all(|&(p, v)| flags.has(p) == v)
    }
}

impl fmt::Display for ClassFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.required.is_empty() {
            return f.write_str("pocrim");
        }
        for (i, (p, v)) in self.required.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if !v {
                f.write_str("non-")?;
            }
            f.write_str(p.name())?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown class property `{0}`")]
pub struct UnknownProperty(pub String);

impl FromStr for ClassFilter {
    type Err = UnknownProperty;

    /// Comma-separated property names, each optionally prefixed by `non-` or
    /// `!`; `pocrim` or the empty string means no constraint.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut filter = ClassFilter::any();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part.eq_ignore_ascii_case("pocrim") {
                continue;
            }
            let (name, value) = if let Some(rest) = part.strip_prefix("non-") {
                (rest, false)
            } else if let Some(rest) = part.strip_prefix('!') {
                (rest, false)
            } else {
                (part, true)
            };
            let p = Property::ALL
                .into_iter()
                .find(|p| p.name().eq_ignore_ascii_case(name))
                .ok_or_else(|| UnknownProperty(part.to_string()))?;
            filter.required.push((p, value));
        }
        Ok(filter)
    }
}

/// `x -> 0 = 0` and `0 -> x = x` for every element.
pub fn zero_laws_hold(alg: &FiniteAlgebra) -> bool {
    alg.elements()
        .all(|x| alg.imp(x, 0) == 0 && alg.imp(0, x) == x)
}

/// Weak conjunction `x + (x -> y)`.
pub fn weak_conj(alg: &FiniteAlgebra, x: usize, y: usize) -> usize {
    alg.add(x, alg.imp(x, y))
}

/// Strong disjunction `(x -> y) -> y`.
pub fn strong_disj(alg: &FiniteAlgebra, x: usize, y: usize) -> usize {
    alg.imp(alg.imp(x, y), y)
}

/// Least upper bound of `x` and `y` under `>=`, if one exists.
pub fn least_upper_bound(alg: &FiniteAlgebra, x: usize, y: usize) -> Option<usize> {
    let uppers: Vec<usize> = alg
        .elements()
        .filter(|&z| alg.ge(z, x) && alg.ge(z, y))
        .collect();
    uppers
        .iter()
        .copied()
        .find(|&u| uppers.iter().all(|&z| alg.ge(z, u)))
}

/// Greatest lower bound of `x` and `y` under `>=`, if one exists.
pub fn greatest_lower_bound(alg: &FiniteAlgebra, x: usize, y: usize) -> Option<usize> {
    let lowers: Vec<usize> = alg
        .elements()
        .filter(|&z| alg.ge(x, z) && alg.ge(y, z))
        .collect();
    lowers
        .iter()
        .copied()
        .find(|&l| lowers.iter().all(|&z| alg.ge(l, z)))
}

#[cfg(test)]
mod tests {
    use super::*;

    // p = 1, q = 2, top = 3
    fn four_chain() -> FiniteAlgebra {
        FiniteAlgebra::drastic_chain(4)
    }

    #[test]
    fn named_algebras_are_pocrims() {
        for alg in [
            FiniteAlgebra::trivial(),
            FiniteAlgebra::boolean(),
            FiniteAlgebra::lukasiewicz(3),
            FiniteAlgebra::lukasiewicz(5),
            four_chain(),
            FiniteAlgebra::goedel_chain(3),
        ] {
            assert_eq!(validate_pocrim(&alg), Ok(()), "{alg}");
            assert!(zero_laws_hold(&alg));
        }
    }

    #[test]
    fn boolean_tables() {
        let b = FiniteAlgebra::boolean();
        assert_eq!(b.add_table(), &[0, 1, 1, 1]);
        assert_eq!(b.imp_table(), &[0, 1, 0, 0]);
        let flags = classify(&b);
        assert!(flags.bounded && flags.involutive && flags.idempotent);
        assert!(flags.hoop && flags.wajsberg && flags.boolean());
        assert_eq!(flags.annihilator, Some(1));
        assert!(!flags.coop);
    }

    #[test]
    fn four_chain_matches_the_listed_counterexample() {
        let a = four_chain();
        for x in 1..4 {
            for y in 1..4 {
                assert_eq!(a.add(x, y), 3);
            }
        }
        assert_eq!(a.add(1, 0), 1);
        assert_eq!(a.add(2, 0), 2);
        // 0 < p < q < 1 as a chain under the derived order
        assert!(a.ge(3, 2) && a.ge(2, 1) && a.ge(1, 0) && !a.ge(1, 2));
        let flags = classify(&a);
        assert!(flags.bounded && !flags.hoop);
        let (x, y) = flags.cwc_witness.unwrap();
        assert_ne!(weak_conj(&a, x, y), weak_conj(&a, y, x));
        assert!(!natural_order_check(&a));
        assert!(!flags.csd);
    }

    #[test]
    fn lukasiewicz_three_chain() {
        let l3 = FiniteAlgebra::lukasiewicz(3);
        let flags = classify(&l3);
        assert!(flags.bounded && flags.hoop && flags.wajsberg && flags.involutive);
        assert!(!flags.idempotent && !flags.coop);
        assert!(natural_order_check(&l3));
        assert_eq!(halve(&l3, 2).unique(), Some(1));
        assert_eq!(halve(&l3, 1).count(), 0);
        assert_eq!(halve(&FiniteAlgebra::boolean(), 0).unique(), Some(0));
    }

    #[test]
    fn trivial_algebra_is_a_coop() {
        let t = FiniteAlgebra::trivial();
        assert!(natural_order_check(&t));
        let flags = classify(&t);
        assert!(flags.coop && flags.boolean());
    }

    #[test]
    fn commutativity_failure_is_witnessed() {
        let l3 = FiniteAlgebra::lukasiewicz(3);
        let mut add: Vec<usize> = l3.add_table().iter().map(|&v| v as usize).collect();
        let imp: Vec<usize> = l3.imp_table().iter().map(|&v| v as usize).collect();
        add[3 + 2] = 1; // 1 + 2 = 1 but 2 + 1 = 2
        let alg = FiniteAlgebra::from_tables(3, &add, &imp).unwrap();
        let v = validate_pocrim(&alg).unwrap_err();
        assert!(matches!(v.law, Law::M1 | Law::M2), "{v}");
        assert!(!v.witness.is_empty());
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(
            FiniteAlgebra::from_tables(2, &[0, 1, 1], &[0, 0, 0, 0]),
            Err(TableError::Dimensions { .. })
        ));
        assert!(matches!(
            FiniteAlgebra::from_tables(2, &[0, 1, 1, 2], &[0, 0, 0, 0]),
            Err(TableError::OutOfRange { value: 2, .. })
        ));
        assert!(matches!(FiniteAlgebra::from_tables(0, &[], &[]), Err(TableError::Size(0))));
    }

    #[test]
    fn order_and_residuation_are_coherent() {
        // Order transported into a residual built from + and a permuted order
        let a = four_chain();
        let perm = [0, 2, 1, 3];
        let b = a.permuted(&perm);
        assert_eq!(validate_pocrim(&b), Ok(()));
        assert_eq!(classify(&a).hoop, classify(&b).hoop);
        assert_eq!(b.annihilator(), Some(3));
    }

    #[test]
    fn class_filter_parsing() {
        let f: ClassFilter = "bounded, non-hoop".parse().unwrap();
        assert_eq!(f.required, vec![(Property::Bounded, true), (Property::Hoop, false)]);
        assert_eq!(f.to_string(), "bounded,non-hoop");
        let g: ClassFilter = "!idempotent".parse().unwrap();
        assert_eq!(g.required, vec![(Property::Idempotent, false)]);
        assert!("frobnicate".parse::<ClassFilter>().is_err());
        assert_eq!("pocrim".parse::<ClassFilter>().unwrap(), ClassFilter::any());
    }

    #[test]
    fn lattice_operations_in_lukasiewicz_chain() {
        let l = FiniteAlgebra::lukasiewicz(5);
        for x in l.elements() {
            for y in l.elements() {
                assert_eq!(weak_conj(&l, x, y), x.max(y));
                assert_eq!(strong_disj(&l, x, y), x.min(y));
                assert_eq!(least_upper_bound(&l, x, y), Some(x.max(y)));
                assert_eq!(greatest_lower_bound(&l, x, y), Some(x.min(y)));
            }
        }
    }

    #[test]
    fn display_is_the_table_format() {
        let text = FiniteAlgebra::boolean().to_string();
        assert_eq!(text, "size 2\n0 1\n1 1\n0 1\n0 0\n");
    }
}
