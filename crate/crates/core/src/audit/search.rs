use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{is_odd_prime, FermatTriple};
use crate::numerics::{exact_integer_root, Integer};

/// `n = p q` with `p` the smallest odd prime factor of `n`, or `p = 4`
/// when `n` is a power of two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ReductionResult {
    pub n: u64,
    pub p: u64,
    pub q: u64,
}

pub fn reduce_exponent(n: u64) -> Result<ReductionResult> {
    if n <= 2 {
        return Err(Error::Domain(format!("exponent {n} must exceed 2")));
    }
    let odd = n >> n.trailing_zeros();
    let p = if odd == 1 {
        4
    } else {
        let mut f = 3u64;
        loop {
            if f.saturating_mul(f) > odd {
                break odd;
            }
            if odd.is_multiple_of(f) {
                break f;
            }
            f += 2;
        }
    };
    Ok(ReductionResult { n, p, q: n / p })
}

/// `x` with `2 x^n` a perfect `n`-th power `z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiagonalHit {
    pub x: u64,
    #[serde(with = "super::text")]
    pub z: Integer,
}

/// Tests `x^n + x^n = z^n` for `1 <= x <= xmax`.
pub fn diagonal_check(n: u32, xmax: u64) -> Result<Vec<DiagonalHit>> {
    if n <= 2 {
        return Err(Error::Domain(format!("exponent {n} must exceed 2")));
    }
    if xmax == 0 {
        return Err(Error::Domain("xmax must be at least 1".into()));
    }
    Ok((1..=xmax)
        .filter_map(|x| {
            let v = Integer::from(2u8) * num_traits::pow(Integer::from(x), n as usize);
            exact_integer_root(&v, n).map(|z| DiagonalHit { x, z })
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub x: u64,
    pub y: u64,
    pub z: u64,
    /// `z^p - x^p - y^p`
    #[serde(with = "super::text")]
    pub residual: Integer,
}

impl SearchHit {
    pub fn triple(&self, p: u32) -> FermatTriple {
        FermatTriple::from_u64(self.x, self.y, self.z, p).expect("validated exponent")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub p: u32,
    pub bound: u64,
    pub solutions: Vec<SearchHit>,
    pub near_misses: Vec<SearchHit>,
}

/// Exhaustive search over `1 <= x <= y < z <= bound`. Near misses are every
/// triple attaining the smallest nonzero `|z^p - x^p - y^p|`.
pub fn brute_force_search(p: u32, bound: u64) -> Result<SearchResult> {
    if !is_odd_prime(u64::from(p)) {
        return Err(Error::Parameter(format!("exponent {p} is not an odd prime")));
    }
    if bound < 3 {
        return Err(Error::Parameter(format!("search bound {bound} must be at least 3")));
    }
    let powers: Vec<Integer> = (0..=bound)
        .map(|v| num_traits::pow(Integer::from(v), p as usize))
        .collect();
    let mut solutions = Vec::new();
    let mut near_misses: Vec<SearchHit> = Vec::new();
    let mut best: Option<Integer> = None;
    for x in 1..=bound {
        for y in x..=bound {
            let sum = &powers[x as usize] + &powers[y as usize];
            for z in y + 1..=bound {
                let residual = &powers[z as usize] - &sum;
                let hit = SearchHit { x, y, z, residual };
                if hit.residual.is_zero() {
                    solutions.push(hit);
                    continue;
                }
                let mag = hit.residual.abs();
                match &best {
                    Some(b) if mag > *b => {}
                    Some(b) if mag == *b => near_misses.push(hit),
                    _ => {
                        best = Some(mag);
                        near_misses = vec![hit];
                    }
                }
            }
        }
    }
    Ok(SearchResult {
        p,
        bound,
        solutions,
        near_misses,
    })
}
