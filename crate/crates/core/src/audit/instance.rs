use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{
    build_family_closed_form, dugua_boundary, fermat_residual, geometric_slope_d,
    integer_family_poly, FamilyParams, FermatTriple,
};
use crate::interval::Interval;
use crate::numerics::{pow10_inv, Rational};
use crate::roots::{
    descartes_negative, descartes_positive, isolate_with, newton_dugua_check, rational_root_test,
    refine_with, vieta_product, SturmSequence,
};

use super::report::*;

/// The default tolerance is `1 / 10^DEFAULT_EPSILON_DIGITS`.
pub const DEFAULT_EPSILON_DIGITS: u32 = 30;

impl ClaimId {
    fn statement(self) -> &'static str {
        match self {
            ClaimId::C1 => "the coefficients of the slope polynomial show p sign variations",
            ClaimId::C2 => "the slope polynomial has no negative real roots",
            ClaimId::C3 => "zero is not a root of the slope polynomial",
            ClaimId::C4 => "every interior coefficient satisfies a_k^2 > a_(k-1) a_(k+1)",
            ClaimId::C5 => "all p roots of the slope polynomial are real",
            ClaimId::C6 => "exactly one slope magnitude in (0, 1) gives a line meeting the curve at u",
            ClaimId::C7 => "the slope of the line through (0, 1) and (u, alpha) is a root",
            ClaimId::C8 => "all roots of the slope polynomial are equal",
            ClaimId::C9 => "the product of the roots is 1",
        }
    }

    fn anchor(self) -> &'static str {
        match self {
            ClaimId::C1 => "Descartes' rule of signs on the slope polynomial",
            ClaimId::C2 => "Descartes' rule of signs after substituting -d for d",
            ClaimId::C3 => "constant term of the slope polynomial",
            ClaimId::C4 => "Du Gua-Huat-Euler coefficient condition",
            ClaimId::C5 => "real-rootedness drawn from the coefficient condition",
            ClaimId::C6 => "uniqueness of the line through (0, 1) meeting the curve at u",
            ClaimId::C7 => "slope beta of the line through (0, 1) and (x/z, alpha)",
            ClaimId::C8 => "consistency with a single slope value",
            ClaimId::C9 => "product of the roots",
        }
    }
}

fn claim(id: ClaimId, holds: bool, evidence: String) -> ClaimVerdict {
    ClaimVerdict {
        id,
        statement: id.statement().to_owned(),
        paper_anchor: id.anchor().to_owned(),
        verdict: Verdict::from_bool(holds),
        evidence,
    }
}

/// Runs every analysis on `F_{p,u}` and measures each claim.
///
/// Fails with [`Error::Tolerance`] when `eps` is too coarse to tell which
/// refined root the geometric slope belongs to.
pub fn audit_instance(params: &FamilyParams, eps: &Rational) -> Result<AuditReport> {
    if *eps <= Rational::zero() {
        return Err(Error::Domain(format!("tolerance must be positive, got {eps}")));
    }
    let p = params.p();
    let f = build_family_closed_form(params)?.poly;
    let coefficients = f.coefficients().to_vec();

    let pos = descartes_positive(&f)?;
    let neg = descartes_negative(&f)?;
    let newton = newton_dugua_check(&f)?;
    let boundary = dugua_boundary(params);

    let seq = SturmSequence::new(&f)?;
    let square_free_degree = seq.base().degree().unwrap_or(0);
    let iso = isolate_with(&seq, &f)?;
    let in_unit = seq.count_open(&Rational::zero(), &Rational::one());
    let refined = iso
        .intervals
        .iter()
        .map(|i| refine_with(&seq, i, eps))
        .collect::<Result<Vec<_>>>()?;

    let geometry = geometric_slope_d(params, eps)?;
    let vieta = vieta_product(&f)?;

    let overlapping: Vec<&Interval> = refined.iter().filter(|i| i.overlaps(&geometry.d_star)).collect();
    if overlapping.len() > 1 {
        return Err(Error::Tolerance(format!(
            "d_star {} meets {} refined roots at epsilon {eps}; use a smaller epsilon",
            geometry.d_star,
            overlapping.len()
        )));
    }

    let a0 = coefficients[0].clone();
    let claims = vec![
        claim(
            ClaimId::C1,
            pos.variations == p as usize,
            format!("sign variations = {}, p = {p}", pos.variations),
        ),
        claim(
            ClaimId::C2,
            neg.variations == 0,
            format!("sign variations of F(-d) = {}", neg.variations),
        ),
        claim(ClaimId::C3, !a0.is_zero(), format!("constant term = {a0}")),
        claim(ClaimId::C4, newton.all_hold, {
            let failing: Vec<String> = newton
                .per_index
                .iter()
                .filter(|e| !e.holds)
                .map(|e| e.k.to_string())
                .collect();
            if failing.is_empty() {
                format!(
                    "every interior index holds; linear term reduces to {} > {}",
                    boundary.lhs, boundary.rhs
                )
            } else {
                format!("fails at k = {}", failing.join(", "))
            }
        }),
        claim(
            ClaimId::C5,
            iso.distinct_count == square_free_degree,
            format!(
                "distinct real roots = {}, square-free degree = {square_free_degree}, degree = {p}",
                iso.distinct_count
            ),
        ),
        claim(
            ClaimId::C6,
            in_unit == 1,
            format!("distinct real roots inside the open unit interval = {in_unit}"),
        ),
        claim(
            ClaimId::C7,
            overlapping.len() == 1,
            match overlapping.first() {
                Some(r) => format!("refined root {r} overlaps d_star {}", geometry.d_star),
                None => format!("no refined root overlaps d_star {}", geometry.d_star),
            },
        ),
        claim(
            ClaimId::C8,
            square_free_degree == 1,
            format!("square-free degree = {square_free_degree}"),
        ),
        claim(ClaimId::C9, vieta.is_one(), format!("root product = {vieta}")),
    ];

    Ok(AuditReport {
        schema_version: SCHEMA_VERSION,
        params: ParamsSection {
            p,
            u: params.u().clone(),
            epsilon: eps.clone(),
        },
        polynomial: PolynomialSection {
            degree: f.degree().unwrap_or(0),
            coefficients,
        },
        descartes: DescartesSection {
            variations: pos.variations,
            possible_positive_counts: pos.possible_root_counts,
            negative_variations: neg.variations,
        },
        newton: NewtonSection {
            per_index: newton
                .per_index
                .into_iter()
                .map(|e| NewtonEntry {
                    k: e.k,
                    lhs: e.lhs,
                    rhs: e.rhs,
                    holds: e.holds,
                })
                .collect(),
            all_hold: newton.all_hold,
            boundary: BoundaryEntry {
                lhs: boundary.lhs,
                rhs: boundary.rhs,
                holds: boundary.holds,
            },
        },
        real_roots: RealRootsSection {
            distinct_count: iso.distinct_count,
            distinct_in_unit_interval: in_unit,
            isolating_intervals: iso.intervals,
            refined_intervals: refined,
        },
        geometry: GeometrySection {
            alpha: geometry.alpha,
            d_star: geometry.d_star,
            sign_note: geometry.sign_note.to_owned(),
        },
        vieta_product: vieta,
        square_free_degree,
        claims,
    })
}

/// Relates a candidate triple to the slope family: the candidate slope,
/// its residual, and every rational root of the integer family polynomial.
pub fn audit_triple(t: &FermatTriple) -> Result<TripleReport> {
    let params = t.family_params()?;
    let residual = fermat_residual(t)?;
    let u = params.u().clone();
    let g = integer_family_poly(t.p, u.numer(), u.denom())?;
    let rational_roots = rational_root_test(&g)?;
    let integer_polynomial = g.integer_coefficients().expect("integer family");
    let integer_residual = t.integer_residual();
    Ok(TripleReport {
        x: t.x.clone(),
        y: t.y.clone(),
        z: t.z.clone(),
        p: t.p,
        u,
        d: t.candidate_slope(),
        d_is_root: residual.is_zero(),
        counterexample: integer_residual.is_zero(),
        residual,
        integer_residual,
        integer_polynomial,
        rational_roots,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GridOutcome {
    Report(Box<AuditReport>),
    Error(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridEntry {
    pub p: u32,
    #[serde(with = "super::text")]
    pub u: Rational,
    pub outcome: GridOutcome,
}

/// Audits `u = i / (u_count + 1)`, `i = 1..=u_count`, for each `p`.
/// Instances run in parallel; the result is sorted by `(p, u)` and per
/// instance failures are recorded in place.
pub fn audit_grid(ps: &[u32], u_count: u32, eps: &Rational) -> Result<Vec<GridEntry>> {
    if u_count == 0 {
        return Err(Error::Parameter("u-count must be at least 1".into()));
    }
    let denom = i64::from(u_count) + 1;
    let jobs: Vec<(u32, Rational)> = ps
        .iter()
        .flat_map(|&p| (1..denom).map(move |i| (p, Rational::new(i.into(), denom.into()))))
        .collect();
    let mut entries: Vec<GridEntry> = jobs
        .into_par_iter()
        .map(|(p, u)| {
            let outcome = FamilyParams::new(p, u.clone())
                .and_then(|params| audit_instance(&params, eps))
                .map_or_else(|e| GridOutcome::Error(e.to_string()), |r| GridOutcome::Report(Box::new(r)));
            GridEntry { p, u, outcome }
        })
        .collect();
    entries.sort_by(|a, b| (a.p, &a.u).cmp(&(b.p, &b.u)));
    entries.dedup_by(|a, b| a.p == b.p && a.u == b.u);
    Ok(entries)
}

/// Convenience: the default tolerance as a rational.
pub fn default_epsilon() -> Rational {
    pow10_inv(DEFAULT_EPSILON_DIGITS)
}
