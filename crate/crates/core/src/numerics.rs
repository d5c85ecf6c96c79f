//! Exact scalars: arbitrary-precision integers and reduced fractions.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;

pub type Integer = BigInt;

/// Reduced fraction with a positive denominator; zero is `0/1`.
pub type Rational = BigRational;

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(int(numer), int(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(int(n))
}

/// `1 / 10^digits`, the usual way tolerances are spelled.
pub fn pow10_inv(digits: u32) -> Rational {
    Rational::new(Integer::one(), num_traits::pow(int(10), digits as usize))
}

/// Canonical text form: `"n"` for integers, `"n/d"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Parses `"n"` or `"n/d"`; the result is reduced to canonical form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match t.split_once('/') {
        None => Integer::from_str(t)
            .map(Rational::from_integer)
            .map_err(|_| bad()),
        Some((n, d)) => {
            let n = Integer::from_str(n.trim()).map_err(|_| bad())?;
            let d = Integer::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial_coefficient(n: u32, k: u32) -> Result<Integer> {
    if k > n {
        return Err(Error::Domain(format!("binomial C({n}, {k}) with k > n")));
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    Ok(acc)
}

/// `r^e` for a non-negative exponent.
pub fn rational_pow(r: &Rational, e: u32) -> Rational {
    num_traits::pow(r.clone(), e as usize)
}

/// Integer `p`-th root of `n` when `n` is a perfect `p`-th power.
pub fn exact_integer_root(n: &Integer, p: u32) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let root = n.nth_root(p);
    (num_traits::pow(root.clone(), p as usize) == *n).then_some(root)
}

/// Rational `p`-th root of `r` when both numerator and denominator are
/// perfect `p`-th powers.
pub fn exact_rational_root(r: &Rational, p: u32) -> Option<Rational> {
    let n = exact_integer_root(r.numer(), p)?;
    let d = exact_integer_root(r.denom(), p)?;
    Some(Rational::new(n, d))
}

/// Encloses `r^(1/p)` in an interval of width at most `eps`.
///
/// Exact `p`-th powers give a degenerate interval. Otherwise the interval is
/// found by bisection on `[0, max(1, r)]`, keeping `lo^p < r < hi^p`.
pub fn nth_root_interval(r: &Rational, p: u32, eps: &Rational) -> Result<Interval> {
    if r.is_negative() {
        return Err(Error::Domain(format!("p-th root of negative radicand {r}")));
    }
    if p == 0 {
        return Err(Error::Domain("root index must be at least 1".into()));
    }
    if !eps.is_positive() {
        return Err(Error::Domain(format!("tolerance must be positive, got {eps}")));
    }
    if let Some(root) = exact_rational_root(r, p) {
        return Ok(Interval::point(root));
    }

    let mut lo = Rational::zero();
    let mut hi = if *r > Rational::one() {
        r.clone()
    } else {
        Rational::one()
    };
    let two = rat_int(2);
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / &two;
        // r is not a p-th power, so mid^p != r.
        if rational_pow(&mid, p) < *r {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Interval::new(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pascal_row(n: usize) -> Vec<Integer> {
        let mut row = vec![Integer::one()];
        for _ in 0..n {
            let mut next = vec![Integer::one(); row.len() + 1];
            for i in 1..row.len() {
                next[i] = &row[i - 1] + &row[i];
            }
            row = next;
        }
        row
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        for n in 0..30u32 {
            let row = pascal_row(n as usize);
            for k in 0..=n {
                assert_eq!(binomial_coefficient(n, k).unwrap(), row[k as usize]);
            }
        }
        assert_eq!(binomial_coefficient(5, 2).unwrap(), int(10));
        assert_eq!(binomial_coefficient(7, 3).unwrap(), int(35));
        assert_eq!(binomial_coefficient(11, 0).unwrap(), int(1));
    }

    #[test]
    fn binomial_rejects_k_above_n() {
        assert!(matches!(binomial_coefficient(3, 4), Err(Error::Domain(_))));
    }

    #[test]
    fn exact_roots_are_degenerate() {
        let i = nth_root_interval(&rat_int(8), 3, &pow10_inv(3)).unwrap();
        assert_eq!(i, Interval::point(rat_int(2)));
        let i = nth_root_interval(&rat_int(1), 7, &pow10_inv(3)).unwrap();
        assert_eq!(i, Interval::point(rat_int(1)));
        let i = nth_root_interval(&rat(27, 64), 3, &pow10_inv(3)).unwrap();
        assert_eq!(i, Interval::point(rat(3, 4)));
        let i = nth_root_interval(&Rational::zero(), 5, &pow10_inv(3)).unwrap();
        assert_eq!(i, Interval::point(Rational::zero()));
    }

    #[test]
    fn cube_root_of_seven_eighths() {
        let eps = pow10_inv(6);
        let i = nth_root_interval(&rat(7, 8), 3, &eps).unwrap();
        assert!(i.width() <= eps);
        assert!(rational_pow(i.lo(), 3) < rat(7, 8));
        assert!(rational_pow(i.hi(), 3) > rat(7, 8));
        // 0.9564656 +- 1e-6
        let approx = rat(9_564_656, 10_000_000);
        let slack = pow10_inv(6);
        assert!(i.lo() <= &(&approx + &slack) && i.hi() >= &(&approx - &slack));
    }

    #[test]
    fn root_of_large_radicand() {
        let eps = pow10_inv(4);
        let i = nth_root_interval(&rat_int(10), 3, &eps).unwrap();
        assert!(rational_pow(i.lo(), 3) < rat_int(10) && rational_pow(i.hi(), 3) > rat_int(10));
    }

    #[test]
    fn root_domain_errors() {
        assert!(nth_root_interval(&rat(-1, 2), 3, &pow10_inv(2)).is_err());
        assert!(nth_root_interval(&rat(1, 2), 0, &pow10_inv(2)).is_err());
        assert!(nth_root_interval(&rat(1, 2), 3, &Rational::zero()).is_err());
    }

    #[test]
    fn rational_text_forms() {
        assert_eq!(format_rational(&rat(-9, 2)), "-9/2");
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert_eq!(format_rational(&Rational::zero()), "0");
        assert_eq!(parse_rational("-18/4").unwrap(), rat(-9, 2));
        assert_eq!(parse_rational("1/-2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("7").unwrap(), rat_int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_rational() -> impl Strategy<Value = Rational> {
            (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| rat(n, d))
        }

        proptest! {
            #[test]
            fn arithmetic_is_exact(a in any_rational(), b in any_rational(), c in any_rational()) {
                prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
                prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
                let s = &a + &b;
                prop_assert!(s.denom().is_positive());
                prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
            }

            #[test]
            fn text_round_trip(a in any_rational()) {
                prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
            }

            #[test]
            fn refinement_stays_nested(n in 1i64..500, d in 1i64..500, p in 1u32..8) {
                let r = rat(n, d);
                let mut prev: Option<Interval> = None;
                for digits in [1u32, 2, 4, 8] {
                    let i = nth_root_interval(&r, p, &pow10_inv(digits)).unwrap();
                    prop_assert!(rational_pow(i.lo(), p) <= r && r <= rational_pow(i.hi(), p));
                    if let Some(prev) = &prev {
                        prop_assert!(prev.overlaps(&i));
                    }
                    prev = Some(i);
                }
            }
        }
    }
}
