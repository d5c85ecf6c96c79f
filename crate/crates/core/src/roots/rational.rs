use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::{Integer, Rational};
use crate::poly::Polynomial;

use super::sturm::{isolate_with, refine_with, SturmSequence};

/// Every rational root of an integer-coefficient polynomial, ascending and
/// without repeats.
///
/// A rational root `r/s` in lowest terms has `s | a_n`, so `a_n` times the
/// root is an integer. Each isolating interval is refined until `|a_n|`
/// times it holds at most one integer; that single candidate is then
/// checked by exact evaluation.
pub fn rational_root_test(g: &Polynomial) -> Result<Vec<Rational>> {
    if g.is_zero() {
        return Err(Error::Domain("rational roots of the zero polynomial".into()));
    }
    if !g.is_integral() {
        return Err(Error::Precondition(
            "rational root test needs integer coefficients".into(),
        ));
    }
    let mut roots = Vec::new();
    let zeros = g.coefficients().iter().take_while(|c| c.is_zero()).count();
    let h = Polynomial::new(g.coefficients()[zeros..].to_vec());
    if zeros > 0 {
        roots.push(Rational::zero());
    }
    if h.degree().unwrap_or(0) == 0 {
        return Ok(roots);
    }

    let lead = h.leading_coefficient().expect("nonzero").abs();
    let seq = SturmSequence::new(&h)?;
    let iso = isolate_with(&seq, &h)?;
    let eps = (&lead * Rational::from_integer(2.into())).recip();
    for bracket in &iso.intervals {
        let tight = refine_with(&seq, bracket, &eps)?;
        let candidate: Integer = (tight.lo() * &lead).ceil().to_integer();
        let candidate = Rational::new(candidate, lead.to_integer());
        if tight.contains(&candidate) && h.evaluate(&candidate).is_zero() {
            roots.push(candidate);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}
