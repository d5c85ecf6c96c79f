use crate::error::{Error, Result};
use crate::numerics::Rational;
use crate::poly::Polynomial;

/// One interior index of the coefficient test `a_k^2 > a_{k-1} a_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonIndex {
    pub k: usize,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonCheckResult {
    pub per_index: Vec<NewtonIndex>,
    pub all_hold: bool,
}

/// Evaluates `a_k^2 > a_{k-1} a_{k+1}` on signed coefficients for every
/// `0 < k < deg f`. Ties count as failures.
///
/// The outcome is a measurement only. The inequality is necessary for a
/// polynomial to have only real roots, not sufficient.
pub fn newton_dugua_check(f: &Polynomial) -> Result<NewtonCheckResult> {
    let n = f
        .degree()
        .filter(|&n| n >= 2)
        .ok_or_else(|| Error::Domain("coefficient test needs degree at least 2".into()))?;
    let a = f.coefficients();
    let per_index: Vec<NewtonIndex> = (1..n)
        .map(|k| {
            let lhs = &a[k] * &a[k];
            let rhs = &a[k - 1] * &a[k + 1];
            let holds = lhs > rhs;
            NewtonIndex { k, lhs, rhs, holds }
        })
        .collect();
    let all_hold = per_index.iter().all(|e| e.holds);
    Ok(NewtonCheckResult {
        per_index,
        all_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat_int;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn family_member_passes() {
        let r = newton_dugua_check(&p(&[-1, 12, -6, 1])).unwrap();
        assert!(r.all_hold);
        assert_eq!(r.per_index.len(), 2);
        assert_eq!((r.per_index[0].lhs.clone(), r.per_index[0].rhs.clone()), (rat_int(144), rat_int(6)));
        assert_eq!((r.per_index[1].lhs.clone(), r.per_index[1].rhs.clone()), (rat_int(36), rat_int(12)));
    }

    #[test]
    fn ties_fail() {
        let r = newton_dugua_check(&p(&[1, 1, 1])).unwrap();
        assert!(!r.all_hold);
        assert_eq!(r.per_index[0].lhs, r.per_index[0].rhs);
    }

    #[test]
    fn real_rooted_quadratic() {
        let r = newton_dugua_check(&p(&[2, -3, 1])).unwrap();
        assert!(r.all_hold);
        assert_eq!(r.per_index[0].lhs, rat_int(9));
        assert_eq!(r.per_index[0].rhs, rat_int(2));
    }

    #[test]
    fn degree_too_small() {
        assert!(newton_dugua_check(&p(&[1, 1])).is_err());
        assert!(newton_dugua_check(&Polynomial::zero()).is_err());
    }

    #[test]
    fn passing_does_not_imply_real_roots() {
        // t^3 - 6t^2 + 12t - 1 passes but has only one real root.
        let f = p(&[-1, 12, -6, 1]);
        assert!(newton_dugua_check(&f).unwrap().all_hold);
        let n = crate::roots::sturm_real_root_count(&f, &crate::roots::RootRange::WholeLine).unwrap();
        assert_eq!(n, 1);
    }
}
