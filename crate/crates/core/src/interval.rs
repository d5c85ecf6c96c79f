//! Closed intervals with exact rational endpoints.
//!
//! Endpoints are exact, so every operation returns the tight image of the
//! pointwise operation (or a superset of it for compound expressions such
//! as Horner evaluation).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerics::{format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntervalOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::Domain(format!("empty interval [{lo}, {hi}]")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from_integer(2.into())
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    /// True when `self` lies strictly inside the open interval `(a, b)`.
    pub fn inside_open(&self, a: &Rational, b: &Rational) -> bool {
        a < &self.lo && &self.hi < b
    }

    pub fn is_subset_of(&self, other: &Interval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn checked_div(&self, rhs: &Interval) -> Result<Interval> {
        if rhs.contains_zero() {
            return Err(Error::Domain(format!("division by interval {rhs} containing 0")));
        }
        let lo_inv = rhs.hi.recip();
        let hi_inv = rhs.lo.recip();
        Ok(self * &Interval { lo: lo_inv, hi: hi_inv })
    }

    pub fn pow(&self, e: u32) -> Interval {
        let mut acc = Interval::point(Rational::from_integer(1.into()));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn from_candidates(c: [Rational; 4]) -> Interval {
        let [a, b, c, d] = c;
        let lo = a.clone().min(b.clone()).min(c.clone()).min(d.clone());
        let hi = a.max(b).max(c).max(d);
        Interval { lo, hi }
    }
}

/// Applies `op` to `a` (and `b`, ignored for `Neg`).
pub fn interval_arith(a: &Interval, b: &Interval, op: IntervalOp) -> Result<Interval> {
    Ok(match op {
        IntervalOp::Add => a + b,
        IntervalOp::Sub => a - b,
        IntervalOp::Mul => a * b,
        IntervalOp::Div => a.checked_div(b)?,
        IntervalOp::Neg => -a,
    })
}

impl Add for &Interval {
    type Output = Interval;
    fn add(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;
    fn sub(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;
    fn mul(self, rhs: &Interval) -> Interval {
        Interval::from_candidates([
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ])
    }
}

impl Neg for &Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }
}

impl Mul<&Rational> for &Interval {
    type Output = Interval;
    fn mul(self, k: &Rational) -> Interval {
        self * &Interval::point(k.clone())
    }
}

impl Add<&Rational> for &Interval {
    type Output = Interval;
    fn add(self, k: &Rational) -> Interval {
        Interval {
            lo: &self.lo + k,
            hi: &self.hi + k,
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Default for Interval {
    fn default() -> Self {
        Interval::point(Rational::zero())
    }
}

/// Serialized as a two-element array of canonical rational strings.
impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [format_rational(&self.lo), format_rational(&self.hi)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [lo, hi] = <[String; 2]>::deserialize(d)?;
        let lo = parse_rational(&lo).map_err(D::Error::custom)?;
        let hi = parse_rational(&hi).map_err(D::Error::custom)?;
        Interval::new(lo, hi).map_err(D::Error::custom)
    }
}
