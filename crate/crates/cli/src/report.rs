//! Report emission: JSON documents for single analyses, RFC 4180 CSV for
//! scans, and the fixed-width verification table. All output is
//! deterministic: struct field order drives JSON, rows are built in a fixed
//! order, and nothing depends on wall-clock time or map iteration order.

use std::fmt;

use serde::Serialize;

use loewy_core::gf::FieldCtx;
use loewy_core::hyper::GllResult;
use loewy_core::poly::BiPoly;

pub const SCHEMA_VERSION: u32 = 1;

// ---------------------------------------------------------------------------
// JSON building blocks
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize)]
pub struct FieldJson {
    pub p: u64,
    pub e: u32,
    pub q: u64,
    /// Ascending coefficients of the modulus over GF(p); null for prime fields.
    pub modulus: Option<Vec<u64>>,
}

impl FieldJson {
    pub fn from_ctx(ctx: &FieldCtx) -> FieldJson {
        FieldJson {
            p: ctx.p(),
            e: ctx.e(),
            q: ctx.q(),
            modulus: ctx.modulus().map(|m| m.to_vec()),
        }
    }
}

/// One monomial with its coefficient as a coordinate vector over GF(p).
#[derive(Debug, Clone, Serialize)]
pub struct TermJson {
    pub x: usize,
    pub y: usize,
    pub c: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PolyJson {
    pub text: String,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn from_poly(f: &BiPoly) -> PolyJson {
        let ctx = f.ctx();
        let mut terms: Vec<TermJson> = f
            .terms()
            .map(|((i, j), c)| TermJson { x: i, y: j, c: ctx.coords(c) })
            .collect();
        terms.sort_by_key(|t| (t.x + t.y, t.y));
        PolyJson { text: f.to_string(), terms }
    }
}

/// A projective point [alpha : beta] with coordinates over GF(p) and the
/// linear form it represents.
#[derive(Debug, Clone, Serialize)]
pub struct PointJson {
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
    pub form: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub bound: usize,
    pub source: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularFormJson {
    pub degree: usize,
    pub form: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct GllJson {
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: bool,
    pub witness: Option<String>,
    pub witness_terms: Option<Vec<TermJson>>,
    pub certificates: Vec<CertificateJson>,
}

impl GllJson {
    pub fn from_result(r: &GllResult) -> GllJson {
        GllJson {
            lower: r.lower,
            upper: r.upper,
            exact: r.exact,
            witness: r.witness.as_ref().map(|w| w.to_string()),
            witness_terms: r.witness.as_ref().map(|w| PolyJson::from_poly(w).terms),
            certificates: r
                .certificates
                .iter()
                .map(|c| CertificateJson { bound: c.bound, source: c.source.to_string() })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeJson {
    pub schema_version: u32,
    pub field: FieldJson,
    pub f: PolyJson,
    pub order: usize,
    pub index: usize,
    pub linear_zerodivisors: Vec<PointJson>,
    pub gr_regular_form_found: Option<RegularFormJson>,
    pub gll: GllJson,
}

#[derive(Debug, Clone, Serialize)]
pub struct AperyJson {
    pub modulus: u64,
    pub set: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupGglJson {
    pub value: u64,
    pub formula_value: u64,
    /// Present when the independent oracle was requested.
    pub oracle_value: Option<u64>,
    pub oracle_agrees: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GradedGllJson {
    pub value: u64,
    pub witness_d: u64,
}

/// Empirical table row: a witness exponent and the least shift for which it
/// generates a graded reduction.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionShiftJson {
    pub d: u64,
    pub min_shift: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SemigroupJson {
    pub schema_version: u32,
    pub gens: Vec<u64>,
    pub conductor: u64,
    pub frobenius: Option<u64>,
    pub gaps: Vec<u64>,
    pub apery: AperyJson,
    pub ggl: SemigroupGglJson,
    pub ggl_witnesses: Vec<u64>,
    pub reduction_shifts: Vec<ReductionShiftJson>,
    pub gll_graded: GradedGllJson,
    pub prop43_ok: bool,
}

// ---------------------------------------------------------------------------
// CSV (RFC 4180 quoting)
// ---------------------------------------------------------------------------

pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line(fields: &[String]) -> String {
    fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------------------
// verification rows
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowStatus {
    Match,
    Mismatch,
    /// The computation reported a violated hypothesis that was not expected.
    HypothesisFailed,
    /// Only bounds were obtained.
    BoundedOnly,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RowStatus::Match => "match",
            RowStatus::Mismatch => "mismatch",
            RowStatus::HypothesisFailed => "hypothesis-failed",
            RowStatus::BoundedOnly => "bounded-only",
        };
        write!(f, "{}", s)
    }
}

/// One verification case: expected versus computed, with `status == Match`
/// exactly when the two agree on every compared field.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRow {
    pub case: String,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub status: RowStatus,
}

impl ReportRow {
    pub fn new(case: &str, params: &str, expected: &str, computed: &str) -> ReportRow {
        let status = if expected == computed { RowStatus::Match } else { RowStatus::Mismatch };
        ReportRow {
            case: case.to_string(),
            params: params.to_string(),
            expected: expected.to_string(),
            computed: computed.to_string(),
            status,
        }
    }

    pub fn ok(&self) -> bool {
        self.status == RowStatus::Match
    }
}

/// Render rows as a fixed-width text table with a summary line.
pub fn render_table(rows: &[ReportRow]) -> String {
    let headers = ["case", "params", "expected", "computed", "status"];
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    let cells: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                r.case.clone(),
                r.params.clone(),
                r.expected.clone(),
                r.computed.clone(),
                r.status.to_string(),
            ]
        })
        .collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(c.len());
        }
    }
    let mut out = String::new();
    let fmt_row = |cols: &[String]| -> String {
        cols.iter()
            .zip(widths.iter())
            .map(|(c, w)| format!("{:<width$}", c, width = w))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    out.push_str(&fmt_row(&headers.iter().map(|h| h.to_string()).collect::<Vec<_>>()));
    out.push('\n');
    out.push_str(&"-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1)));
    out.push('\n');
    for row in &cells {
        out.push_str(&fmt_row(row));
        out.push('\n');
    }
    let matches = rows.iter().filter(|r| r.ok()).count();
    out.push_str(&format!("{} rows: {} match, {} other\n", rows.len(), matches, rows.len() - matches));
    out
}
