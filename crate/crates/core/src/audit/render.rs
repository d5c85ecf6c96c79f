use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::poly::Polynomial;

use super::instance::GridEntry;
use super::report::{AuditReport, TripleReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            other => Err(Error::Parse(format!("unknown format {other:?}, expected json or text"))),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(v).expect("report types always serialize");
    out.push(b'\n');
    out
}

fn join_intervals(v: &[Interval]) -> String {
    if v.is_empty() {
        return "none".into();
    }
    v.iter().map(Interval::to_string).collect::<Vec<_>>().join(", ")
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

/// Deterministic rendering: equal reports give identical bytes.
pub fn render_report(r: &AuditReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json(r),
        Format::Text => render_report_text(r).into_bytes(),
    }
}

fn render_report_text(r: &AuditReport) -> String {
    let mut s = String::new();
    let poly = Polynomial::new(r.polynomial.coefficients.clone());
    let _ = writeln!(s, "slope polynomial audit (schema {})", r.schema_version);
    let _ = writeln!(s, "p = {}, u = {}, epsilon = {}", r.params.p, r.params.u, r.params.epsilon);
    let _ = writeln!(s, "F(d) = {poly}");
    let _ = writeln!(s, "coefficients (ascending) = {}", join(&r.polynomial.coefficients));
    let _ = writeln!(
        s,
        "sign variations = {}, possible positive root counts = {}, variations of F(-d) = {}",
        r.descartes.variations,
        join(&r.descartes.possible_positive_counts),
        r.descartes.negative_variations
    );
    for e in &r.newton.per_index {
        let rel = if e.holds { ">" } else { "<=" };
        let _ = writeln!(s, "coefficient test k = {}: {} {rel} {}", e.k, e.lhs, e.rhs);
    }
    let b = &r.newton.boundary;
    let _ = writeln!(
        s,
        "linear-term reduction: {} {} {}",
        b.lhs,
        if b.holds { ">" } else { "<=" },
        b.rhs
    );
    let _ = writeln!(
        s,
        "distinct real roots = {} ({} inside the open unit interval), square-free degree = {}",
        r.real_roots.distinct_count, r.real_roots.distinct_in_unit_interval, r.square_free_degree
    );
    let _ = writeln!(s, "isolating intervals = {}", join_intervals(&r.real_roots.isolating_intervals));
    let _ = writeln!(s, "refined intervals = {}", join_intervals(&r.real_roots.refined_intervals));
    let _ = writeln!(s, "alpha in {}", r.geometry.alpha);
    let _ = writeln!(s, "d_star in {} ({})", r.geometry.d_star, r.geometry.sign_note);
    let _ = writeln!(s, "root product = {}", r.vieta_product);
    for c in &r.claims {
        let _ = writeln!(s, "{} {} — {}", c.id, c.verdict, c.evidence);
    }
    s
}

pub fn parse_report(bytes: &[u8]) -> Result<AuditReport> {
    serde_json::from_slice(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn render_grid(entries: &[GridEntry]) -> Vec<u8> {
    to_json(&entries)
}

pub fn render_triple(t: &TripleReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => to_json(t),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "triple x = {}, y = {}, z = {}, p = {}", t.x, t.y, t.z, t.p);
            let _ = writeln!(s, "u = x/z = {}, candidate slope d = (z-y)/x = {}", t.u, t.d);
            let _ = writeln!(s, "F(d) = {}, z^p - x^p - y^p = {}", t.residual, t.integer_residual);
            let _ = writeln!(s, "d is a root: {}", t.d_is_root);
            let _ = writeln!(s, "integer family polynomial (ascending) = {}", join(&t.integer_polynomial));
            let roots = if t.rational_roots.is_empty() {
                "none".to_owned()
            } else {
                join(&t.rational_roots)
            };
            let _ = writeln!(s, "rational roots = {roots}");
            if t.counterexample {
                let _ = writeln!(s, "COUNTEREXAMPLE: x^p + y^p = z^p");
            }
            s.into_bytes()
        }
    }
}

/// JSON for the small result types of the search subcommands.
pub fn render_json<T: Serialize>(v: &T) -> Vec<u8> {
    to_json(v)
}
