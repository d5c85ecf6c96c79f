//! Test-only oracles, kept independent of the library's algorithms.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random rational strictly inside (0, 1) with denominator up to 1000.
pub fn random_unit(r: &mut ChaCha8Rng) -> Q {
    let d: i64 = r.gen_range(2..=1000);
    let n: i64 = r.gen_range(1..d);
    q(n, d)
}

pub const FAMILY_PRIMES: [u32; 5] = [3, 5, 7, 11, 13];

/// The 100 acceptance instances: 20 random u for each prime.
pub fn family_instances() -> Vec<(u32, Q)> {
    let mut r = rng(0x5eed_0001);
    FAMILY_PRIMES
        .iter()
        .flat_map(|&p| (0..20).map(|_| (p, random_unit(&mut r))).collect::<Vec<_>>())
        .collect()
}

pub fn qpow(x: &Q, e: u32) -> Q {
    num_traits::pow(x.clone(), e as usize)
}

/// `u^p + (1 - d u)^p - 1`, straight from the curve and the line.
pub fn curve_residual(p: u32, u: &Q, d: &Q) -> Q {
    let v = Q::one() - d * u;
    qpow(u, p) + qpow(&v, p) - Q::one()
}

/// Plain bisection for the root of `u^p + (1 - d u)^p - 1` in `(0, 1)`;
/// the residual is positive at `d = 0` and negative at `d = 1`.
pub fn bisect_slope(p: u32, u: &Q, width: &Q) -> (Q, Q) {
    let (mut lo, mut hi) = (Q::zero(), Q::one());
    assert!(curve_residual(p, u, &lo).is_positive());
    assert!(curve_residual(p, u, &hi).is_negative());
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / q(2, 1);
        if curve_residual(p, u, &mid).is_positive() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Evaluate by summing `c_k t^k`.
pub fn eval_naive(coeffs: &[Q], t: &Q) -> Q {
    coeffs
        .iter()
        .enumerate()
        .fold(Q::zero(), |acc, (k, c)| acc + c * qpow(t, k as u32))
}

/// Expand `∏ (t - r)` by repeated convolution.
pub fn expand_roots(roots: &[Q]) -> Vec<Q> {
    let mut c = vec![Q::one()];
    for r in roots {
        let mut next = vec![Q::zero(); c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * r;
        }
        c = next;
    }
    c
}

pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out
}

/// Rational roots by enumerating every `±r/s` with `r | a_0`, `s | a_n`.
/// Expects integer coefficients and a nonzero constant term.
pub fn rational_roots_by_divisors(coeffs: &[BigInt]) -> Vec<Q> {
    let a0 = &coeffs[0];
    let an = coeffs.last().unwrap();
    assert!(!a0.is_zero());
    let qc: Vec<Q> = coeffs.iter().cloned().map(Q::from_integer).collect();
    let mut roots = Vec::new();
    for r in divisors(a0) {
        for s in divisors(an) {
            if !r.gcd(&s).is_one() {
                continue;
            }
            for sign in [1, -1] {
                let cand = Q::new(&r * sign, s.clone());
                if eval_naive(&qc, &cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Numeric tokens (`-3`, `1/216`) appearing in a string.
pub fn numeric_tokens(s: &str) -> Vec<String> {
    let bytes: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let starts_number = bytes[i].is_ascii_digit()
            || (bytes[i] == '-' && i + 1 < bytes.len() && bytes[i + 1].is_ascii_digit());
        let glued = i > 0 && (bytes[i - 1].is_alphanumeric() || bytes[i - 1] == '_');
        if starts_number && !glued {
            let mut j = i + 1;
            while j < bytes.len() && (bytes[j].is_ascii_digit() || bytes[j] == '/') {
                j += 1;
            }
            out.push(bytes[i..j].iter().collect::<String>().trim_end_matches('/').to_owned());
            i = j;
        } else {
            i += 1;
        }
    }
    out
}

/// Every scalar leaf of a JSON value, rendered as text.
pub fn json_scalars(v: &serde_json::Value, out: &mut Vec<String>) {
    match v {
        serde_json::Value::Array(a) => a.iter().for_each(|x| json_scalars(x, out)),
        serde_json::Value::Object(m) => m.values().for_each(|x| json_scalars(x, out)),
        serde_json::Value::String(s) => out.push(s.clone()),
        serde_json::Value::Number(n) => out.push(n.to_string()),
        serde_json::Value::Bool(b) => out.push(b.to_string()),
        serde_json::Value::Null => {}
    }
}

/// Checks that every number quoted in a claim's evidence also appears as a
/// value elsewhere in the report.
pub fn evidence_is_grounded(report_json: &str) -> Result<(), String> {
    let mut v: serde_json::Value = serde_json::from_str(report_json).map_err(|e| e.to_string())?;
    let claims = v
        .as_object_mut()
        .and_then(|m| m.remove("claims"))
        .ok_or("missing claims")?;
    let mut values = Vec::new();
    json_scalars(&v, &mut values);
    for c in claims.as_array().ok_or("claims is not an array")? {
        let evidence = c["evidence"].as_str().ok_or("evidence is not a string")?;
        for tok in numeric_tokens(evidence) {
            if !values.contains(&tok) {
                return Err(format!("{}: {tok} in {evidence:?} is not in the report", c["id"]));
            }
        }
    }
    Ok(())
}
