//! Sturm sequences, real-root isolation and bisection refinement.
//!
//! All counting is done on the square-free part, so counts are of distinct
//! roots. For a square-free `g`, the variation drop `V(a) - V(b)` counts the
//! roots in the half-open interval `(a, b]` even when `a` or `b` is a root;
//! closed and open counts adjust for the endpoints explicitly.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::numerics::{Integer, Rational};
use crate::poly::Polynomial;

/// Where to count roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootRange {
    WholeLine,
    /// Closed interval; endpoints that are roots are included.
    Within(Interval),
}

/// Integer polynomial used only for sign evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
struct SignPoly {
    coeffs: Vec<Integer>,
}

impl SignPoly {
    /// Positive rescaling of `f` to a primitive integer polynomial.
    fn from_poly(f: &Polynomial) -> Result<Self> {
        let (g, _) = f.scale_to_integer()?;
        Ok(Self {
            coeffs: g.integer_coefficients().expect("scaled to integers"),
        })
    }

    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn leading_sign(&self) -> i8 {
        int_sign(self.coeffs.last().expect("nonzero"))
    }

    /// Sign of `f(a/b)`, from `b^n f(a/b) = sum c_k a^k b^(n-k)` with `b > 0`.
    fn sign_at(&self, x: &Rational) -> i8 {
        let (a, b) = (x.numer(), x.denom());
        let mut acc = Integer::zero();
        let mut bpow = Integer::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * a + c * &bpow;
            bpow *= b;
        }
        int_sign(&acc)
    }
}

fn int_sign(n: &Integer) -> i8 {
    if n.is_positive() {
        1
    } else if n.is_negative() {
        -1
    } else {
        0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmSequence {
    base: Polynomial,
    chain: Vec<SignPoly>,
}

impl SturmSequence {
    /// Builds the chain of the square-free part of `f`.
    pub fn new(f: &Polynomial) -> Result<Self> {
        let g = f.square_free_part()?;
        let mut chain = vec![g.clone()];
        let mut next = g.derivative();
        while !next.is_zero() {
            let (_, r) = chain.last().expect("nonempty").div_rem(&next)?;
            // Positive rescaling keeps the signs Sturm's theorem needs.
            let lc = next.leading_coefficient().expect("nonzero").abs();
            chain.push(next.scale(&lc.recip()));
            next = -&r;
        }
        let chain = chain.iter().map(SignPoly::from_poly).collect::<Result<_>>()?;
        Ok(Self { base: g, chain })
    }

    /// The square-free polynomial the chain starts from.
    pub fn base(&self) -> &Polynomial {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
        let nz: Vec<i8> = signs.filter(|&s| s != 0).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    }

    fn base_sign(&self, x: &Rational) -> i8 {
        self.chain[0].sign_at(x)
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        Self::count_changes(self.chain.iter().map(|p| p.sign_at(x)))
    }

    pub fn variations_at_pos_infinity(&self) -> usize {
        Self::count_changes(self.chain.iter().map(SignPoly::leading_sign))
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        Self::count_changes(self.chain.iter().map(|p| {
            let s = p.leading_sign();
            if p.degree() % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.base_sign(x) == 0
    }

    /// Distinct real roots on the whole line.
    pub fn count_all(&self) -> usize {
        self.variations_at_neg_infinity() - self.variations_at_pos_infinity()
    }

    /// Distinct roots in `(a, b]`, `a <= b`.
    pub fn count_half_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        self.variations_at(a) - self.variations_at(b)
    }

    /// Distinct roots in `[a, b]`, `a <= b`.
    pub fn count_closed(&self, a: &Rational, b: &Rational) -> usize {
        self.count_half_open(a, b) + usize::from(self.is_root(a))
    }

    /// Distinct roots in `(a, b)`, `a <= b`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        self.count_half_open(a, b) - usize::from(self.is_root(b))
    }

    /// One bisection step on an interval holding exactly one distinct root
    /// of the base polynomial in its interior.
    fn bisect_once(&self, i: &Interval) -> Interval {
        let m = i.midpoint();
        let sm = self.base_sign(&m);
        let slo = self.base_sign(i.lo());
        let left = if sm == 0 {
            return Interval::point(m);
        } else if slo != 0 && self.base_sign(i.hi()) != 0 {
            sm != slo
        } else {
            // An endpoint is itself a (different) root; fall back to counting.
            self.count_open(i.lo(), &m) == 1
        };
        if left {
            Interval::new(i.lo().clone(), m).expect("ordered")
        } else {
            Interval::new(m, i.hi().clone()).expect("ordered")
        }
    }
}

/// Number of distinct real roots of `f` in `range`.
pub fn sturm_real_root_count(f: &Polynomial, range: &RootRange) -> Result<usize> {
    let seq = SturmSequence::new(f)?;
    Ok(match range {
        RootRange::WholeLine => seq.count_all(),
        RootRange::Within(i) => seq.count_closed(i.lo(), i.hi()),
    })
}

/// `1 + max_{k<n} |a_k| / |a_n|`; every complex root has modulus strictly
/// below it.
pub fn cauchy_bound(f: &Polynomial) -> Result<Rational> {
    let lc = f
        .leading_coefficient()
        .ok_or_else(|| Error::Domain("root bound of the zero polynomial".into()))?
        .abs();
    let n = f.coefficients().len() - 1;
    let max = f.coefficients()[..n]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(Rational::zero);
    Ok(Rational::one() + max / lc)
}

/// Disjoint intervals, ascending, each holding exactly one distinct real
/// root. An interval is degenerate exactly when it is a rational root hit
/// during bisection; otherwise its endpoints are not roots and it contains
/// no integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootIsolation {
    pub intervals: Vec<Interval>,
    pub distinct_count: usize,
}

pub fn isolate_real_roots(f: &Polynomial) -> Result<RootIsolation> {
    let seq = SturmSequence::new(f)?;
    isolate_with(&seq, f)
}

pub(crate) fn isolate_with(seq: &SturmSequence, f: &Polynomial) -> Result<RootIsolation> {
    let bound = cauchy_bound(f)?;
    let mut out = Vec::new();
    isolate_open(seq, -bound.clone(), bound, &mut out);

    // Neighbouring pieces of a split share an endpoint; pull them apart.
    for i in 0..out.len().saturating_sub(1) {
        while out[i].hi() == out[i + 1].lo() {
            if out[i].is_degenerate() {
                out[i + 1] = seq.bisect_once(&out[i + 1]);
            } else {
                out[i] = seq.bisect_once(&out[i]);
            }
        }
    }

    // Endpoints are now non-roots. Shrink until no interval contains an
    // integer, so each one sits between consecutive integers or is an exact
    // integer root.
    for iv in out.iter_mut() {
        loop {
            let n = iv.lo().ceil();
            if iv.is_degenerate() || &n > iv.hi() {
                break;
            }
            if seq.is_root(&n) {
                *iv = Interval::point(n);
                break;
            }
            *iv = seq.bisect_once(iv);
        }
    }
    let distinct_count = out.len();
    Ok(RootIsolation {
        intervals: out,
        distinct_count,
    })
}

// `a` and `b` are never roots here.
fn isolate_open(seq: &SturmSequence, a: Rational, b: Rational, out: &mut Vec<Interval>) {
    match seq.count_open(&a, &b) {
        0 => {}
        1 => out.push(Interval::new(a, b).expect("ordered")),
        _ => {
            let m = (&a + &b) / Rational::from_integer(2.into());
            if seq.is_root(&m) {
                isolate_open(seq, a, m.clone(), out);
                out.push(Interval::point(m.clone()));
                isolate_open(seq, m, b, out);
            } else {
                isolate_open(seq, a, m.clone(), out);
                isolate_open(seq, m, b, out);
            }
        }
    }
}

/// Shrinks `bracket` to width at most `eps` around the single distinct real
/// root of `f` it contains. A midpoint that is an exact root yields a
/// degenerate interval.
pub fn refine_root(f: &Polynomial, bracket: &Interval, eps: &Rational) -> Result<Interval> {
    let seq = SturmSequence::new(f)?;
    refine_with(&seq, bracket, eps)
}

pub(crate) fn refine_with(
    seq: &SturmSequence,
    bracket: &Interval,
    eps: &Rational,
) -> Result<Interval> {
    if !eps.is_positive() {
        return Err(Error::Domain(format!("tolerance must be positive, got {eps}")));
    }
    let n = seq.count_closed(bracket.lo(), bracket.hi());
    if n != 1 {
        return Err(Error::Precondition(format!(
            "bracket {bracket} holds {n} distinct real roots, expected 1"
        )));
    }
    if seq.is_root(bracket.lo()) {
        return Ok(Interval::point(bracket.lo().clone()));
    }
    if seq.is_root(bracket.hi()) {
        return Ok(Interval::point(bracket.hi().clone()));
    }
    let mut cur = bracket.clone();
    while cur.width() > *eps {
        cur = seq.bisect_once(&cur);
    }
    Ok(cur)
}
