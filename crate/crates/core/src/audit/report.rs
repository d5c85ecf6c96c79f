use std::fmt;

use serde::{Deserialize, Serialize};

use crate::interval::Interval;
use crate::numerics::{Integer, Rational};

pub const SCHEMA_VERSION: u32 = 1;

/// Full audit of one `(p, u)` instance. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditReport {
    pub schema_version: u32,
    pub params: ParamsSection,
    pub polynomial: PolynomialSection,
    pub descartes: DescartesSection,
    pub newton: NewtonSection,
    pub real_roots: RealRootsSection,
    pub geometry: GeometrySection,
    #[serde(with = "super::text")]
    pub vieta_product: Rational,
    pub square_free_degree: usize,
    pub claims: Vec<ClaimVerdict>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsSection {
    pub p: u32,
    #[serde(with = "super::text")]
    pub u: Rational,
    #[serde(with = "super::text")]
    pub epsilon: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialSection {
    pub degree: usize,
    /// Ascending by degree.
    #[serde(with = "super::text::seq")]
    pub coefficients: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescartesSection {
    pub variations: usize,
    pub possible_positive_counts: Vec<usize>,
    pub negative_variations: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewtonEntry {
    pub k: usize,
    #[serde(with = "super::text")]
    pub lhs: Rational,
    #[serde(with = "super::text")]
    pub rhs: Rational,
    pub holds: bool,
}

/// The linear-term inequality in its reduced form `p u^{-p} > (p - 1) / 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BoundaryEntry {
    #[serde(with = "super::text")]
    pub lhs: Rational,
    #[serde(with = "super::text")]
    pub rhs: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewtonSection {
    pub per_index: Vec<NewtonEntry>,
    pub all_hold: bool,
    pub boundary: BoundaryEntry,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RealRootsSection {
    pub distinct_count: usize,
    pub distinct_in_unit_interval: usize,
    pub isolating_intervals: Vec<Interval>,
    pub refined_intervals: Vec<Interval>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeometrySection {
    pub alpha: Interval,
    pub d_star: Interval,
    pub sign_note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
    C9,
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClaimVerdict {
    pub id: ClaimId,
    pub statement: String,
    pub paper_anchor: String,
    pub verdict: Verdict,
    pub evidence: String,
}

impl AuditReport {
    pub fn claim(&self, id: ClaimId) -> Option<&ClaimVerdict> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn verdict(&self, id: ClaimId) -> Option<Verdict> {
        self.claim(id).map(|c| c.verdict)
    }
}

/// What a candidate triple says about the slope family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleReport {
    #[serde(with = "super::text")]
    pub x: Integer,
    #[serde(with = "super::text")]
    pub y: Integer,
    #[serde(with = "super::text")]
    pub z: Integer,
    pub p: u32,
    /// `x / z` in lowest terms.
    #[serde(with = "super::text")]
    pub u: Rational,
    /// Candidate slope `(z - y) / x`.
    #[serde(with = "super::text")]
    pub d: Rational,
    /// `F_{p,u}(d)`
    #[serde(with = "super::text")]
    pub residual: Rational,
    /// `z^p - x^p - y^p`
    #[serde(with = "super::text")]
    pub integer_residual: Integer,
    pub d_is_root: bool,
    pub counterexample: bool,
    /// Integer family polynomial for the reduced `u`, ascending by degree.
    #[serde(with = "super::text::seq")]
    pub integer_polynomial: Vec<Integer>,
    #[serde(with = "super::text::seq")]
    pub rational_roots: Vec<Rational>,
}
