//! Exact-arithmetic root analysis of the slope polynomial family
//!
//! For an odd prime `p` and a rational `u` in `(0, 1)`, the slope polynomial
//! `F_{p,u}(d)` is the monic form of `u^p + (1 - d u)^p - 1`. Its real roots
//! are the slopes `-d` of lines through `(0, 1)` that meet the curve
//! `u^p + v^p = 1` at abscissa `u`.
//!
//! The crate is layered bottom-up:
//!
//! - [`numerics`] and [`interval`]: rationals, binomials, rational-endpoint
//!   intervals and p-th root enclosures.
//! - [`poly`]: dense univariate polynomials over the rationals.
//! - [`roots`]: sign-variation counts, the Newton coefficient test, Sturm
//!   sequences, root isolation and refinement, Vieta's product and rational
//!   roots.
//! - [`family`]: the slope polynomial (built two ways), its geometric slope
//!   and the Fermat residual.
//! - [`audit`]: claim verdicts, desk-scale searches and deterministic reports.
//!
//! No floating point is used anywhere.

pub mod audit;
pub mod error;
pub mod family;
pub mod interval;
pub mod numerics;
pub mod poly;
pub mod roots;

pub use error::{Error, Result};
pub use interval::{interval_arith, Interval, IntervalOp};
pub use numerics::{Integer, Rational};
pub use poly::Polynomial;
