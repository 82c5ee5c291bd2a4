use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use serde::{Deserialize, Serialize};

/// An exact dyadic rational `numerator / 2^exponent` in `[0, 1]`, kept in
/// lowest terms: the numerator is odd, or zero with exponent zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dyadic {
    numerator: u64,
    exponent: u32,
}

/// Largest exponent representable without overflow in the operations below.
pub const MAX_EXPONENT: u32 = 62;

impl Dyadic {
    pub const ZERO: Dyadic = Dyadic {
        numerator: 0,
        exponent: 0,
    };
    pub const ONE: Dyadic = Dyadic {
        numerator: 1,
        exponent: 0,
    };

    /// `numerator / 2^exponent`, normalized. Returns `None` outside `[0, 1]`
    /// or beyond [`MAX_EXPONENT`].
    pub fn new(numerator: u64, exponent: u32) -> Option<Dyadic> {
        if exponent > MAX_EXPONENT || numerator > (1u64 << exponent) {
            return None;
        }
        Some(Self::normalized(numerator, exponent))
    }

    fn normalized(numerator: u64, exponent: u32) -> Dyadic {
        if numerator == 0 {
            return Dyadic::ZERO;
        }
        let shift = numerator.trailing_zeros().min(exponent);
        Dyadic {
            numerator: numerator >> shift,
            exponent: exponent - shift,
        }
    }

    pub fn numerator(self) -> u64 {
        self.numerator
    }

    pub fn exponent(self) -> u32 {
        self.exponent
    }

    /// Both numerators over the common denominator `2^e`.
    fn aligned(self, other: Dyadic) -> (u64, u64, u32) {
        let e = self.exponent.max(other.exponent);
        (
            self.numerator << (e - self.exponent),
            other.numerator << (e - other.exponent),
            e,
        )
    }

    /// `min(x + y, 1)`.
    pub fn cap_add(self, other: Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        let one = 1u64 << e;
        Self::normalized((a + b).min(one), e)
    }

    /// `max(y - x, 0)`, the implication `x -> y`.
    pub fn trunc_imp(self, other: Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(other);
        Self::normalized(b.saturating_sub(a), e)
    }

    /// `x / 2`. Panics past [`MAX_EXPONENT`].
    pub fn half(self) -> Dyadic {
        if self.numerator == 0 {
            return Dyadic::ZERO;
        }
        assert!(self.exponent < MAX_EXPONENT, "dyadic exponent overflow");
        Dyadic {
            numerator: self.numerator,
            exponent: self.exponent + 1,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.numerator as f64 / (1u64 << self.exponent) as f64
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(*other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, 1u64 << self.exponent)
        }
    }
}

/// Exponent bound of the standard sample battery (129 values).
pub const DEFAULT_BATTERY_EXPONENT: u32 = 7;

/// Every dyadic in `[0, 1]` with exponent at most `max_exponent`, ascending.
pub fn battery(max_exponent: u32) -> Vec<Dyadic> {
    let denom = 1u64 << max_exponent;
    (0..=denom)
        .map(|k| Dyadic::new(k, max_exponent).expect("in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(n: u64, e: u32) -> Dyadic {
        Dyadic::new(n, e).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(d(2, 2), d(1, 1));
        assert_eq!(d(4, 2), Dyadic::ONE);
        assert_eq!(d(0, 5), Dyadic::ZERO);
        assert_eq!(d(6, 3).numerator(), 3);
        assert_eq!(d(6, 3).exponent(), 2);
        assert!(Dyadic::new(5, 2).is_none());
    }

    #[test]
    fn operations() {
        assert_eq!(d(3, 2).cap_add(d(1, 1)), Dyadic::ONE);
        assert_eq!(d(1, 2).trunc_imp(d(1, 1)), d(1, 2));
        assert_eq!(d(1, 1).half(), d(1, 2));
        assert_eq!(Dyadic::ONE.half(), d(1, 1));
        assert_eq!(d(1, 1).cap_add(d(1, 1)), Dyadic::ONE);
        assert_eq!(d(3, 2).trunc_imp(d(1, 2)), Dyadic::ZERO);
        assert_eq!(d(3, 2).to_string(), "3/4");
    }

    #[test]
    fn halves_are_the_unique_fixed_points() {
        let values = battery(4);
        for &x in &values {
            let fixed: Vec<Dyadic> = battery(5)
                .into_iter()
                .filter(|&y| y.trunc_imp(x) == y)
                .collect();
            assert_eq!(fixed, [x.half()]);
        }
    }

    #[test]
    fn battery_size() {
        assert_eq!(battery(6).len(), 65);
        assert_eq!(battery(DEFAULT_BATTERY_EXPONENT).len(), 129);
        assert!(battery(6).windows(2).all(|w| w[0] < w[1]));
        assert!(battery(6).iter().all(|x| battery(7).contains(x)));
    }
}
