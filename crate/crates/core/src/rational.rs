//! Reduced fractions over unbounded integers, with `1/0` standing for ∞.
//!
//! Only the operations the tree constructions need are provided: reduction,
//! the cross determinant, the mediant of Farey neighbours and the Farey
//! difference that undoes a mediant.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A fraction `num/den` in lowest terms with `den >= 0`.
///
/// The sign lives on the numerator. Infinity has the single representation
/// `1/0` and compares greater than every finite value.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ratio {
    num: BigInt,
    den: BigInt,
}

impl Ratio {
    /// Reduces `n/d`, normalising the sign onto the numerator.
    pub fn reduce(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let (mut n, mut d) = (n.into(), d.into());
        if n.is_zero() && d.is_zero() {
            return Err(Error::BothZero);
        }
        if d.is_zero() {
            return Ok(Self::infinity());
        }
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        let g = n.gcd(&d);
        if !g.is_one() {
            n /= &g;
            d /= &g;
        }
        Ok(Self { num: n, den: d })
    }

    pub fn from_ints(n: i64, d: i64) -> Result<Self> {
        Self::reduce(n, d)
    }

    pub fn zero() -> Self {
        Self { num: BigInt::zero(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self { num: BigInt::one(), den: BigInt::one() }
    }

    pub fn infinity() -> Self {
        Self { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    /// `self.num * other.den - other.num * self.den`.
    pub fn cross_det(&self, other: &Ratio) -> BigInt {
        &self.num * &other.den - &other.num * &self.den
    }

    /// Whether `|cross_det| = 1`.
    pub fn is_farey_neighbor(&self, other: &Ratio) -> bool {
        self.cross_det(other).abs().is_one()
    }

    /// `(a+c)/(b+d)` for Farey neighbours `a/b`, `c/d`; the sum is already reduced.
    pub fn mediant(&self, other: &Ratio) -> Result<Ratio> {
        if !self.is_farey_neighbor(other) {
            return Err(Error::NotNeighbors(self.to_string(), other.to_string()));
        }
        Ok(Ratio {
            num: &self.num + &other.num,
            den: &self.den + &other.den,
        })
    }

    /// `reduce(c-a, d-b)` for Farey neighbours `a/b`, `c/d`. Symmetric in its arguments.
    pub fn farey_difference(&self, other: &Ratio) -> Result<Ratio> {
        if !self.is_farey_neighbor(other) {
            return Err(Error::NotNeighbors(self.to_string(), other.to_string()));
        }
        Ratio::reduce(&other.num - &self.num, &other.den - &self.den)
    }

    /// Parses an exact decimal such as `-3.25` or `0.3333334` into a reduced fraction.
    pub fn from_decimal_str(s: &str) -> Result<Ratio> {
        let bad = || Error::Parse(format!("invalid decimal {s:?}"));
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut num: BigInt = digits.parse().map_err(|_| bad())?;
        if negative {
            num = -num;
        }
        let den = num_traits::pow(BigInt::from(10), frac_part.len());
        Ratio::reduce(num, den)
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts exactly `n/d` with an optional leading `-` on `n`; the result is reduced.
impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected a fraction n/d, got {s:?}"));
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let n_digits = n.strip_prefix('-').unwrap_or(n);
        if n_digits.is_empty()
            || d.is_empty()
            || !n_digits.bytes().all(|b| b.is_ascii_digit())
            || !d.bytes().all(|b| b.is_ascii_digit())
        {
            return Err(bad());
        }
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        Ratio::reduce(n, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Ratio {
        Ratio::from_ints(n, d).unwrap()
    }

    #[test]
    fn reduce_examples() {
        let half = r(2, 4);
        assert_eq!((half.numer().clone(), half.denom().clone()), (1.into(), 2.into()));
        assert_eq!(r(1, 0).to_string(), "1/0");
        assert_eq!(r(3, -6).to_string(), "-1/2");
        assert_eq!(r(-5, 0), Ratio::infinity());
        assert!(matches!(Ratio::from_ints(0, 0), Err(Error::BothZero)));
    }

    #[test]
    fn cross_det_examples() {
        assert_eq!(r(0, 1).cross_det(&r(1, 0)), BigInt::from(-1));
        assert_eq!(r(3, 2).cross_det(&r(0, 1)), BigInt::from(3));
        assert_eq!(r(1, 1).cross_det(&r(1, 1)), BigInt::from(0));
    }

    #[test]
    fn mediant_examples() {
        assert_eq!(r(0, 1).mediant(&r(1, 0)).unwrap(), r(1, 1));
        assert_eq!(r(1, 1).mediant(&r(1, 0)).unwrap(), r(2, 1));
        assert_eq!(r(1, 2).mediant(&r(1, 1)).unwrap(), r(2, 3));
        assert!(matches!(r(1, 3).mediant(&r(1, 1)), Err(Error::NotNeighbors(..))));
    }

    #[test]
    fn farey_difference_examples() {
        assert_eq!(r(0, 1).farey_difference(&r(1, 1)).unwrap(), r(1, 0));
        // the outer pair of the root triple gives back the initial diagonal
        assert_eq!(r(0, 1).farey_difference(&r(1, 0)).unwrap(), r(-1, 1));
        assert_eq!(r(1, 1).farey_difference(&r(1, 0)).unwrap(), r(0, 1));
        assert_eq!(r(1, 2).farey_difference(&r(1, 1)).unwrap(), r(0, 1));
        assert!(matches!(r(0, 1).farey_difference(&r(2, 1)), Err(Error::NotNeighbors(..))));
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut v = vec![r(1, 0), r(-1, 1), r(3, 2), r(0, 1), r(1, 1)];
        v.sort();
        assert_eq!(v, vec![r(-1, 1), r(0, 1), r(1, 1), r(3, 2), r(1, 0)]);
    }

    #[test]
    fn parse_fraction() {
        assert_eq!("3/2".parse::<Ratio>().unwrap(), r(3, 2));
        assert_eq!("-1/1".parse::<Ratio>().unwrap(), r(-1, 1));
        assert_eq!("1/0".parse::<Ratio>().unwrap(), r(1, 0));
        assert_eq!("6/4".parse::<Ratio>().unwrap(), r(3, 2));
        for bad in ["", "3", "3/", "/2", "+3/2", "3/-2", "0/0", "1.5/2", " 1/2", "--1/2"] {
            assert!(bad.parse::<Ratio>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn parse_decimal() {
        assert_eq!(Ratio::from_decimal_str("0.5").unwrap(), r(1, 2));
        assert_eq!(Ratio::from_decimal_str("-2.25").unwrap(), r(-9, 4));
        assert_eq!(Ratio::from_decimal_str("7").unwrap(), r(7, 1));
        assert_eq!(Ratio::from_decimal_str(".5").unwrap(), r(1, 2));
        for bad in ["", ".", "-", "1e5", "1.2.3", "abc", "1,5"] {
            assert!(Ratio::from_decimal_str(bad).is_err(), "{bad:?} parsed");
        }
    }

    fn small_ratio() -> impl Strategy<Value = Ratio> {
        (-60i64..60, 0i64..60)
            .prop_filter("not 0/0", |(n, d)| (*n, *d) != (0, 0))
            .prop_map(|(n, d)| r(n, d))
    }

    // Bracketing pairs met while descending the Stern-Brocot tree, optionally negated.
    fn farey_pair() -> impl Strategy<Value = (Ratio, Ratio)> {
        (prop::collection::vec(any::<bool>(), 0..24), any::<bool>(), any::<bool>()).prop_map(
            |(path, negate, swap)| {
                let (mut lo, mut hi) = (r(0, 1), r(1, 0));
                for right in path {
                    let m = lo.mediant(&hi).unwrap();
                    if right { lo = m } else { hi = m }
                }
                if negate {
                    lo = Ratio::reduce(-lo.numer().clone(), lo.denom().clone()).unwrap();
                    hi = Ratio::reduce(-hi.numer().clone(), hi.denom().clone()).unwrap();
                }
                if swap { (hi, lo) } else { (lo, hi) }
            },
        )
    }

    proptest! {
        #[test]
        fn reduce_is_idempotent(x in small_ratio()) {
            prop_assert_eq!(Ratio::reduce(x.numer().clone(), x.denom().clone()).unwrap(), x);
        }

        #[test]
        fn cross_det_antisymmetric(x in small_ratio(), y in small_ratio()) {
            prop_assert_eq!(x.cross_det(&y), -y.cross_det(&x));
            prop_assert_eq!(x.cross_det(&y).is_zero(), x == y);
        }

        #[test]
        fn order_matches_rational_value(a in -40i64..40, b in 1i64..40, c in -40i64..40, d in 1i64..40) {
            let expected = (a * d).cmp(&(c * b));
            prop_assert_eq!(r(a, b).cmp(&r(c, d)), expected);
            prop_assert!(r(a, b) < Ratio::infinity());
        }

        #[test]
        fn mediant_round_trip((x, y) in farey_pair()) {
            let m = x.mediant(&y).unwrap();
            prop_assert_eq!(&m, &y.mediant(&x).unwrap());
            prop_assert!(x.is_farey_neighbor(&m) && m.is_farey_neighbor(&y));
            prop_assert_eq!(x.farey_difference(&m).unwrap(), y.clone());
            prop_assert_eq!(x.farey_difference(&y).unwrap(), y.farey_difference(&x).unwrap());
        }
    }
}
