//! Claim-by-claim audit of the slope family, desk-scale searches, and
//! deterministic report rendering.

mod instance;
mod render;
mod report;
mod search;
pub mod text;

pub use instance::{
    audit_grid, audit_instance, audit_triple, default_epsilon, GridEntry, GridOutcome,
    DEFAULT_EPSILON_DIGITS,
};
pub use render::{parse_report, render_grid, render_json, render_report, render_triple, Format};
pub use report::{
    AuditReport, BoundaryEntry, ClaimId, ClaimVerdict, DescartesSection, GeometrySection,
    NewtonEntry, NewtonSection, ParamsSection, PolynomialSection, RealRootsSection, TripleReport,
    Verdict, SCHEMA_VERSION,
};
pub use search::{
    brute_force_search, diagonal_check, reduce_exponent, DiagonalHit, SearchHit, ReductionResult,
    SearchResult,
};
