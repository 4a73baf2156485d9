//! Best rational approximation under a denominator bound, by batched Stern-Brocot descent.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::Ratio;

/// The reduced `p/q` with `1 <= q <= max_den` closest to `target`.
///
/// Ties go to the smaller denominator, then to the smaller value.
pub fn best_approximation(target: &Ratio, max_den: &BigInt) -> Result<Ratio> {
    if target.is_infinite() {
        return Err(Error::OutOfDomain(target.to_string()));
    }
    if *max_den < BigInt::one() {
        return Err(Error::OutOfDomain(format!("max denominator {max_den}")));
    }
    let (x, y) = (target.numer(), target.denom());
    let floor = x.div_floor(y);
    if (&floor * y) == *x {
        return Ratio::reduce(floor, 1);
    }
    // lo < target < hi, always Farey neighbours with denominators <= max_den
    let (mut ln, mut ld) = (floor.clone(), BigInt::one());
    let (mut hn, mut hd) = (floor + 1, BigInt::one());
    loop {
        let (mn, md) = (&ln + &hn, &ld + &hd);
        if md > *max_den {
            break;
        }
        match (x * &md).cmp(&(&mn * y)) {
            Ordering::Equal => return Ratio::reduce(mn, md),
            Ordering::Less => {
                // hi <- hi + k*lo for the largest k keeping target < hi
                let gap = y * &hn - x * &hd;
                let step = x * &ld - y * &ln;
                let k = clamp_steps(&gap, &step, &hd, &ld, max_den);
                hn += &ln * &k;
                hd += &ld * &k;
                if (x * &hd) == (&hn * y) {
                    return Ratio::reduce(hn, hd);
                }
            }
            Ordering::Greater => {
                let gap = x * &ld - y * &ln;
                let step = y * &hn - x * &hd;
                let k = clamp_steps(&gap, &step, &ld, &hd, max_den);
                ln += &hn * &k;
                ld += &hd * &k;
                if (x * &ld) == (&ln * y) {
                    return Ratio::reduce(ln, ld);
                }
            }
        }
    }
    let lo = Ratio::reduce(ln, ld)?;
    let hi = Ratio::reduce(hn, hd)?;
    Ok(closer(target, lo, hi))
}

/// Largest `k >= 1` with `k <= gap/step` and `den + k*other_den <= max_den`.
fn clamp_steps(gap: &BigInt, step: &BigInt, den: &BigInt, other_den: &BigInt, max_den: &BigInt) -> BigInt {
    let by_value = gap.div_floor(step);
    let by_den = (max_den - den).div_floor(other_den);
    by_value.min(by_den).max(BigInt::one())
}

/// `|target - q|` as an unreduced pair `(num, den)` with `den > 0`.
fn distance(target: &Ratio, q: &Ratio) -> (BigInt, BigInt) {
    let num = (target.numer() * q.denom() - q.numer() * target.denom()).abs();
    (num, target.denom() * q.denom())
}

fn closer(target: &Ratio, a: Ratio, b: Ratio) -> Ratio {
    let (an, ad) = distance(target, &a);
    let (bn, bd) = distance(target, &b);
    match (&an * &bd).cmp(&(&bn * &ad)) {
        Ordering::Less => a,
        Ordering::Greater => b,
        Ordering::Equal => {
            let key = |r: &Ratio| (r.denom().clone(), r.clone());
            if key(&a) <= key(&b) {
                a
            } else {
                b
            }
        }
    }
}

/// Brute force over every denominator; exponential in the bit length of `max_den`.
pub fn best_approximation_brute(target: &Ratio, max_den: u64) -> Result<Ratio> {
    if target.is_infinite() || max_den == 0 {
        return Err(Error::OutOfDomain(target.to_string()));
    }
    let mut best: Option<Ratio> = None;
    for q in 1..=max_den {
        let q = BigInt::from(q);
        // nearest numerators below and above target * q
        let lo = (target.numer() * &q).div_floor(target.denom());
        for p in [lo.clone(), lo + 1] {
            let cand = Ratio::reduce(p, q.clone())?;
            best = Some(match best {
                None => cand,
                Some(b) => closer(target, b, cand),
            });
        }
    }
    Ok(best.expect("max_den >= 1"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn approx(s: &str, n: u64) -> String {
        best_approximation(&Ratio::from_decimal_str(s).unwrap(), &BigInt::from(n))
            .unwrap()
            .to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(approx("0.5", 10), "1/2");
        assert_eq!(approx("3.14159265358979", 113), "355/113");
        assert_eq!(approx("3.14159265358979", 112), "333/106");
        assert_eq!(approx("0.3333334", 100), "1/3");
        assert_eq!(approx("-0.3333334", 100), "-1/3");
        assert_eq!(approx("7", 1), "7/1");
        assert_eq!(approx("2.5", 1), "2/1");
        assert_eq!(approx("-2.5", 1), "-3/1");
    }

    #[test]
    fn brute_force_agrees_on_examples() {
        for (s, n) in [("3.14159265358979", 113), ("0.3333334", 100), ("0.5", 10)] {
            let t = Ratio::from_decimal_str(s).unwrap();
            assert_eq!(best_approximation(&t, &BigInt::from(n)).unwrap(), best_approximation_brute(&t, n).unwrap());
        }
    }

    #[test]
    fn large_bound_is_fast() {
        let t = Ratio::from_decimal_str("3.14159265358979323846264338327950288").unwrap();
        let r = best_approximation(&t, &BigInt::from(10u64).pow(30)).unwrap();
        assert!(r.denom() <= &BigInt::from(10u64).pow(30));
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in -2000i64..2000, d in 1i64..500, max_den in 1u64..60) {
            let t = Ratio::from_ints(n, d).unwrap();
            prop_assert_eq!(
                best_approximation(&t, &BigInt::from(max_den)).unwrap(),
                best_approximation_brute(&t, max_den).unwrap()
            );
        }
    }
}
