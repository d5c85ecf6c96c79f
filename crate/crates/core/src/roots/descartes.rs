use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::poly::{sign_of, Polynomial};

/// Sign-variation count and the root counts it permits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DescartesResult {
    pub variations: usize,
    /// `variations, variations - 2, ...` down to 0 or 1.
    pub possible_root_counts: Vec<usize>,
}

impl DescartesResult {
    fn from_variations(variations: usize) -> Self {
        let possible_root_counts = (0..=variations)
            .rev()
            .filter(|c| (variations - c).is_multiple_of(2))
            .collect();
        Self {
            variations,
            possible_root_counts,
        }
    }

    pub fn admits(&self, count: usize) -> bool {
        self.possible_root_counts.contains(&count)
    }
}

fn require_nonzero(f: &Polynomial) -> Result<()> {
    if f.is_zero() {
        Err(Error::Domain("sign analysis of the zero polynomial".into()))
    } else {
        Ok(())
    }
}

/// Sign changes along the coefficient sequence, zeros skipped.
pub fn sign_variations(f: &Polynomial) -> Result<usize> {
    require_nonzero(f)?;
    let signs: Vec<i8> = f
        .coefficients()
        .iter()
        .map(sign_of)
        .filter(|&s| s != 0)
        .collect();
    Ok(signs.windows(2).filter(|w| w[0] != w[1]).count())
}

/// Bounds the positive real roots of `f`, counted with multiplicity.
pub fn descartes_positive(f: &Polynomial) -> Result<DescartesResult> {
    sign_variations(f).map(DescartesResult::from_variations)
}

/// Bounds the negative real roots of `f` by applying the rule to `f(-t)`.
pub fn descartes_negative(f: &Polynomial) -> Result<DescartesResult> {
    require_nonzero(f)?;
    sign_variations(&f.reflect()).map(DescartesResult::from_variations)
}

/// Product of all complex roots with multiplicity: `(-1)^n a_0 / a_n`.
pub fn vieta_product(f: &Polynomial) -> Result<Rational> {
    let n = f
        .degree()
        .filter(|&n| n >= 1)
        .ok_or_else(|| Error::Domain("root product needs degree at least 1".into()))?;
    let sign = if n % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    };
    let a0 = f.coefficients().first().cloned().unwrap_or_else(Rational::zero);
    Ok(sign * a0 / &f.coefficients()[n])
}
