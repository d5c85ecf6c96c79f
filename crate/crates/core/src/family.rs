//! The slope polynomial family and the quantities tied to it.
//!
//! For `0 < u < 1`, a line `v = -d u + 1` through `(0, 1)` meets the curve
//! `u^p + v^p = 1` at abscissa `u` exactly when `F_{p,u}(d) = 0`, where
//! `F_{p,u}` is `u^p + (1 - d u)^p - 1` scaled by `-u^{-p}`. In closed form
//! the coefficient of `d^k` is `(-1)^(k+1) C(p,k) u^(k-p)` for `k >= 1` and
//! `-1` for `k = 0`.

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::numerics::{binomial_coefficient, nth_root_interval, rational_pow, Integer, Rational};
use crate::poly::Polynomial;

/// The report-level reading of the slope sign: the line's slope is `-d`,
/// so the signed slope through `(0, 1)` and `(u, alpha)` is `-d_star`.
pub const SLOPE_SIGN_NOTE: &str = "signed slope beta = -d_star; the line is v = -d u + 1";

/// Deterministic trial division; adequate for desk-scale exponents.
pub fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut f = 3u64;
    while f * f <= p {
        if p.is_multiple_of(f) {
            return false;
        }
        f += 2;
    }
    true
}

/// A validated `(p, u)` instance: `p` an odd prime, `0 < u < 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    p: u32,
    u: Rational,
}

impl FamilyParams {
    pub fn new(p: u32, u: Rational) -> Result<Self> {
        if !is_odd_prime(u64::from(p)) {
            return Err(Error::Parameter(format!("exponent {p} is not an odd prime")));
        }
        if !u.is_positive() || u >= Rational::one() {
            return Err(Error::Parameter(format!("u = {u} is not strictly inside (0, 1)")));
        }
        Ok(Self { p, u })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }
}

/// Candidate `(x, y, z)` for `x^p + y^p = z^p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FermatTriple {
    pub x: Integer,
    pub y: Integer,
    pub z: Integer,
    pub p: u32,
}

impl FermatTriple {
    pub fn new(x: Integer, y: Integer, z: Integer, p: u32) -> Result<Self> {
        if !is_odd_prime(u64::from(p)) {
            return Err(Error::Parameter(format!("exponent {p} is not an odd prime")));
        }
        for (name, v) in [("x", &x), ("y", &y), ("z", &z)] {
            if !v.is_positive() {
                return Err(Error::Parameter(format!("{name} = {v} must be a positive integer")));
            }
        }
        Ok(Self { x, y, z, p })
    }

    pub fn from_u64(x: u64, y: u64, z: u64, p: u32) -> Result<Self> {
        Self::new(x.into(), y.into(), z.into(), p)
    }

    /// `z^p - x^p - y^p`
    pub fn integer_residual(&self) -> Integer {
        let pw = |v: &Integer| num_traits::pow(v.clone(), self.p as usize);
        pw(&self.z) - pw(&self.x) - pw(&self.y)
    }

    /// `x / z` in lowest terms; requires `x < z`.
    pub fn family_params(&self) -> Result<FamilyParams> {
        self.require_x_below_z()?;
        FamilyParams::new(self.p, Rational::new(self.x.clone(), self.z.clone()))
    }

    /// The candidate slope magnitude `(z - y) / x`.
    pub fn candidate_slope(&self) -> Rational {
        Rational::new(&self.z - &self.y, self.x.clone())
    }

    fn require_x_below_z(&self) -> Result<()> {
        if self.x >= self.z {
            return Err(Error::Parameter(format!(
                "need x < z, got x = {}, z = {}",
                self.x, self.z
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlopePolynomial {
    pub params: FamilyParams,
    pub poly: Polynomial,
}

/// Builds `F_{p,u}` directly from its closed-form coefficients.
pub fn build_family_closed_form(params: &FamilyParams) -> Result<SlopePolynomial> {
    let p = params.p;
    let mut coeffs = Vec::with_capacity(p as usize + 1);
    coeffs.push(-Rational::one());
    let u_inv = params.u.recip();
    for k in 1..=p {
        let c = Rational::from_integer(binomial_coefficient(p, k)?)
            * rational_pow(&u_inv, p - k);
        coeffs.push(if k % 2 == 1 { c } else { -c });
    }
    Ok(SlopePolynomial {
        params: params.clone(),
        poly: Polynomial::new(coeffs),
    })
}

/// Builds `F_{p,u}` by expanding `u^p + (1 - d u)^p - 1` with the binomial
/// theorem and scaling by `-u^{-p}`.
pub fn build_family_by_expansion(params: &FamilyParams) -> Result<SlopePolynomial> {
    let p = params.p;
    let neg_u = -params.u.clone();
    // (1 - u d)^p = sum_k C(p,k) (-u)^k d^k
    let line_power = Polynomial::new(
        (0..=p)
            .map(|k| {
                binomial_coefficient(p, k)
                    .map(|c| Rational::from_integer(c) * rational_pow(&neg_u, k))
            })
            .collect::<Result<_>>()?,
    );
    let shift = Polynomial::constant(rational_pow(&params.u, p) - Rational::one());
    let curve = &line_power + &shift;
    let scale = -rational_pow(&params.u, p).recip();
    Ok(SlopePolynomial {
        params: params.clone(),
        poly: curve.scale(&scale),
    })
}

/// `x^{p-1} F_{p,x/z}`, whose coefficient of `d^k` is
/// `(-1)^(k+1) C(p,k) x^(k-1) z^(p-k)` for `k >= 1` and `-x^{p-1}` for `k = 0`.
pub fn integer_family_poly(p: u32, x: &Integer, z: &Integer) -> Result<Polynomial> {
    if !is_odd_prime(u64::from(p)) {
        return Err(Error::Parameter(format!("exponent {p} is not an odd prime")));
    }
    if !x.is_positive() || x >= z {
        return Err(Error::Parameter(format!("need 0 < x < z, got x = {x}, z = {z}")));
    }
    if !x.gcd(z).is_one() {
        return Err(Error::Parameter(format!("x = {x} and z = {z} are not coprime")));
    }
    let pw = |v: &Integer, e: u32| num_traits::pow(v.clone(), e as usize);
    let mut coeffs = vec![-pw(x, p - 1)];
    for k in 1..=p {
        let c = binomial_coefficient(p, k)? * pw(x, k - 1) * pw(z, p - k);
        coeffs.push(if k % 2 == 1 { c } else { -c });
    }
    Ok(Polynomial::from_integers(&coeffs))
}

/// Encloses `alpha = (1 - u^p)^{1/p}`, the ordinate of the curve at `u`.
pub fn alpha(params: &FamilyParams, eps: &Rational) -> Result<Interval> {
    let radicand = Rational::one() - rational_pow(&params.u, params.p);
    nth_root_interval(&radicand, params.p, eps)
}

/// Enclosures of `alpha` and of the slope magnitude `(1 - alpha) / u` of the
/// line through `(0, 1)` and `(u, alpha)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeometricSlope {
    pub alpha: Interval,
    pub d_star: Interval,
    pub sign_note: &'static str,
}

pub fn geometric_slope_d(params: &FamilyParams, eps: &Rational) -> Result<GeometricSlope> {
    if !eps.is_positive() {
        return Err(Error::Domain(format!("tolerance must be positive, got {eps}")));
    }
    // width(d_star) = width(alpha) / u, so tighten alpha by a factor u.
    // Both enclosures must also clear the ends of (0, 1), which a coarse
    // tolerance may not achieve on the first pass.
    let one = Rational::one();
    let zero = Rational::zero();
    let mut tol = eps * &params.u;
    let (alpha, d_star) = loop {
        let alpha = alpha(params, &tol)?;
        let d_star = Interval::new(
            (&one - alpha.hi()) / &params.u,
            (&one - alpha.lo()) / &params.u,
        )?;
        if alpha.inside_open(&zero, &one) && d_star.inside_open(&zero, &one) {
            break (alpha, d_star);
        }
        tol /= Rational::from_integer(1024.into());
    };
    Ok(GeometricSlope {
        alpha,
        d_star,
        sign_note: SLOPE_SIGN_NOTE,
    })
}

/// `F_{p,x/z}((z - y)/x)`, which equals `(z^p - x^p - y^p) / x^p`.
pub fn fermat_residual(t: &FermatTriple) -> Result<Rational> {
    let params = t.family_params()?;
    let f = build_family_closed_form(&params)?;
    Ok(f.poly.evaluate(&t.candidate_slope()))
}

/// Exact left and right sides of one coefficient inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalitySides {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

impl InequalitySides {
    fn greater(lhs: Rational, rhs: Rational) -> Self {
        let holds = lhs > rhs;
        Self { lhs, rhs, holds }
    }
}

/// The coefficient inequality at the linear term of `F_{p,u}` after both
/// sides are divided by `p u^{2-p}`: `p u^{-p} > (p - 1) / 2`.
pub fn dugua_boundary(params: &FamilyParams) -> InequalitySides {
    let p = Rational::from_integer(params.p.into());
    let lhs = &p * rational_pow(&params.u.recip(), params.p);
    let rhs = (&p - Rational::one()) / Rational::from_integer(2.into());
    InequalitySides::greater(lhs, rhs)
}

/// The interior coefficient inequality reduced to factorial ratios:
/// `(p - k + 1)(k + 1) > (p - k) k`, which is log-concavity of `C(p, k)`.
pub fn binomial_log_concavity(p: u32, k: u32) -> InequalitySides {
    let r = |v: u32| Rational::from_integer(v.into());
    InequalitySides::greater(r((p - k + 1) * (k + 1)), r((p - k) * k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, pow10_inv, rat, rat_int};
    use crate::roots::newton_dugua_check;

    fn fp(p: u32, n: i64, d: i64) -> FamilyParams {
        FamilyParams::new(p, rat(n, d)).unwrap()
    }

    fn pr(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn primality() {
        let odd: Vec<u64> = (0..40).filter(|&n| is_odd_prime(n)).collect();
        assert_eq!(odd, vec![3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_odd_prime(7919));
        assert!(!is_odd_prime(7917));
    }

    #[test]
    fn params_validation() {
        assert!(FamilyParams::new(3, rat(3, 2)).is_err());
        assert!(FamilyParams::new(3, rat_int(0)).is_err());
        assert!(FamilyParams::new(3, rat_int(1)).is_err());
        assert!(FamilyParams::new(4, rat(1, 2)).is_err());
        assert!(FamilyParams::new(2, rat(1, 2)).is_err());
        assert!(FamilyParams::new(9, rat(1, 2)).is_err());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(build_family_closed_form(&fp(3, 1, 2)).unwrap().poly, pr(&[-1, 12, -6, 1]));
        assert_eq!(
            build_family_closed_form(&fp(5, 1, 2)).unwrap().poly,
            pr(&[-1, 80, -80, 40, -10, 1])
        );
        assert_eq!(
            build_family_closed_form(&fp(3, 2, 3)).unwrap().poly,
            Polynomial::new(vec![rat_int(-1), rat(27, 4), rat(-9, 2), rat_int(1)])
        );
    }

    #[test]
    fn expansion_matches_closed_form() {
        assert_eq!(build_family_by_expansion(&fp(3, 1, 2)).unwrap().poly, pr(&[-1, 12, -6, 1]));
        for (p, n, d) in [(7, 1, 3), (5, 9, 10), (13, 5, 7), (11, 1, 1000)] {
            let a = build_family_closed_form(&fp(p, n, d)).unwrap();
            let b = build_family_by_expansion(&fp(p, n, d)).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn integer_family_examples() {
        assert_eq!(integer_family_poly(3, &int(2), &int(3)).unwrap(), pr(&[-4, 27, -18, 4]));
        assert_eq!(integer_family_poly(3, &int(1), &int(2)).unwrap(), pr(&[-1, 12, -6, 1]));
        assert_eq!(
            integer_family_poly(5, &int(1), &int(2)).unwrap(),
            pr(&[-1, 80, -80, 40, -10, 1])
        );
        assert!(integer_family_poly(3, &int(3), &int(3)).is_err());
        assert!(integer_family_poly(3, &int(2), &int(4)).is_err());
        assert!(integer_family_poly(4, &int(1), &int(2)).is_err());
    }

    #[test]
    fn integer_family_is_scaled_closed_form() {
        for (p, x, z) in [(3u32, 2i64, 3i64), (5, 3, 7), (7, 4, 9), (11, 1, 5)] {
            let f = build_family_closed_form(&fp(p, x, z)).unwrap().poly;
            let (g, _) = f.scale_to_integer().unwrap();
            let h = integer_family_poly(p, &int(x), &int(z)).unwrap();
            assert_eq!(g, h);
            let scale = rat_int(x).pow(p as i32 - 1);
            assert_eq!(f.scale(&scale), h);
        }
    }

    fn approx_inside(i: &Interval, approx_e7: i64) {
        let c = rat(approx_e7, 10_000_000);
        let slack = pow10_inv(6);
        assert!(
            i.lo() <= &(&c + &slack) && i.hi() >= &(&c - &slack),
            "{i} does not meet {c} within 1e-6"
        );
    }

    #[test]
    fn alpha_examples() {
        let eps = pow10_inv(6);
        for (p, n, d, e7) in [(3, 1, 2, 9_564_656), (5, 1, 2, 9_936_704), (3, 2, 3, 8_894_672)] {
            let a = alpha(&fp(p, n, d), &eps).unwrap();
            assert!(a.width() <= eps);
            assert!(a.inside_open(&rat_int(0), &rat_int(1)));
            approx_inside(&a, e7);
        }
    }

    #[test]
    fn geometric_slope_examples() {
        let eps = pow10_inv(6);
        for (p, n, d, e7) in [(3, 1, 2, 870_688), (5, 1, 2, 126_592), (3, 2, 3, 1_657_992)] {
            let g = geometric_slope_d(&fp(p, n, d), &eps).unwrap();
            assert!(g.alpha.width() <= eps && g.d_star.width() <= eps);
            assert!(g.d_star.inside_open(&rat_int(0), &rat_int(1)));
            approx_inside(&g.d_star, e7);
            assert_eq!(g.sign_note, SLOPE_SIGN_NOTE);
        }
    }

    #[test]
    fn residual_examples() {
        let r = |x, y, z| fermat_residual(&FermatTriple::from_u64(x, y, z, 3).unwrap()).unwrap();
        assert_eq!(r(6, 8, 9), rat(1, 216));
        assert_eq!(r(1, 1, 2), rat_int(6));
        assert_eq!(r(3, 4, 5), rat(34, 27));
        assert!(fermat_residual(&FermatTriple::from_u64(5, 1, 5, 3).unwrap()).is_err());
        assert!(FermatTriple::from_u64(0, 1, 2, 3).is_err());
    }

    #[test]
    fn boundary_condition() {
        let b = dugua_boundary(&fp(3, 1, 2));
        assert_eq!((b.lhs.clone(), b.rhs.clone(), b.holds), (rat_int(24), rat_int(1), true));
        // Matches the k = 1 entry of the coefficient test after division by p u^{2-p}.
        for (p, n, d) in [(3, 1, 2), (5, 2, 3), (7, 3, 11)] {
            let params = fp(p, n, d);
            let f = build_family_closed_form(&params).unwrap().poly;
            let e = newton_dugua_check(&f).unwrap().per_index[0].clone();
            let k = rat_int(p as i64) * rational_pow(params.u(), 2) / rational_pow(params.u(), p);
            let b = dugua_boundary(&params);
            assert_eq!(e.lhs / &k, b.lhs);
            assert_eq!(e.rhs / &k, b.rhs);
        }
    }

    #[test]
    fn log_concavity_reduction() {
        for p in [3u32, 5, 7, 11, 13] {
            for k in 1..p {
                assert!(binomial_log_concavity(p, k).holds);
                let c = |j| Rational::from_integer(binomial_coefficient(p, j).unwrap());
                assert!(c(k) * c(k) > c(k - 1) * c(k + 1));
            }
        }
    }
}
