//! Batch CLI for exact hypersurface and semigroup ring invariants.
//!
//! Exit codes: 0 success (and all rows matching for verify-paper), 1 usage
//! or input error, 2 search budget exceeded, 3 verification mismatch.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use loewy_core::error::Error;
use loewy_core::gf::FieldCtx;
use loewy_core::hyper::{GllSearchOptions, HypersurfaceRing, DEFAULT_SEARCH_BUDGET};
use loewy_core::poly::linear_zerodivisor_forms;
use loewy_core::sgp::{GglMode, NumericalSemigroup};

use loewy_cli::expr::parse_poly;
use loewy_cli::report::{
    self, AnalyzeJson, AperyJson, FieldJson, GllJson, GradedGllJson, PointJson, PolyJson,
    ReductionShiftJson, RegularFormJson, ReportRow, SemigroupGglJson, SemigroupJson,
};
use loewy_cli::scan::{rows_to_csv, scan};
use loewy_cli::verify;

#[derive(Parser)]
#[command(name = "loewy", version, about = "Exact invariants of one-dimensional hypersurface and numerical semigroup rings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct OutArg {
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Analyze one hypersurface ring k[[x,y]]/(f) and report its invariants as JSON.
    Analyze {
        /// Coefficient field, "p" or "p^e" (e.g. 2, 5, 2^2).
        #[arg(long)]
        field: String,
        /// Defining equation, e.g. "x*y*(x+y)" or "y*prod(alpha in k, x+alpha*y)".
        #[arg(long)]
        f: String,
        /// Degree cap for the coprime-form search behind the upper bound.
        #[arg(long, default_value_t = 3)]
        max_t: usize,
        /// Run the exhaustive witness search (requires --max-g).
        #[arg(long)]
        exact: bool,
        /// Largest power of the maximal ideal to test in the exhaustive search.
        #[arg(long)]
        max_g: Option<usize>,
        /// Candidate budget for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Analyze one numerical semigroup ring k[H] and report its invariants as JSON.
    Semigroup {
        /// Generators, comma separated (e.g. 3,5).
        #[arg(long, value_delimiter = ',', required = true)]
        gens: Vec<u64>,
        /// Also run the independent graded-length oracle and compare.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Survey all homogeneous defining equations of one degree, one CSV row
    /// per class under linear changes of variables.
    Scan {
        /// Coefficient field, "p" or "p^e".
        #[arg(long)]
        field: String,
        /// Order (initial degree) of the defining equations.
        #[arg(long)]
        order: usize,
        /// Degree cap for the coprime-form search.
        #[arg(long, default_value_t = 3)]
        max_t: usize,
        /// Resolve unpinned classes exhaustively up to this power.
        #[arg(long)]
        max_g: Option<usize>,
        /// Candidate budget per class for the exhaustive search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Run the full verification suite and print one row per case.
    VerifyPaper {
        /// Restrict to cases whose id contains this tag (e.g. prop312).
        #[arg(long)]
        only: Option<String>,
        /// Corrupt one expected value to exercise the mismatch path.
        #[arg(long, hide = true)]
        inject_mismatch: bool,
        #[command(flatten)]
        out: OutArg,
    },
}

fn parse_field(text: &str) -> Result<FieldCtx, String> {
    let parts: Vec<&str> = text.split('^').collect();
    let parse_u64 = |s: &str| s.trim().parse::<u64>().map_err(|_| format!("bad field spec `{}`", text));
    match parts.as_slice() {
        [p] => FieldCtx::prime_field(parse_u64(p)?).map_err(|e| e.to_string()),
        [p, e] => {
            let p = parse_u64(p)?;
            let e: u32 = e.trim().parse().map_err(|_| format!("bad field spec `{}`", text))?;
            if e == 1 {
                FieldCtx::prime_field(p).map_err(|e| e.to_string())
            } else {
                FieldCtx::extension_field(p, e).map_err(|e| e.to_string())
            }
        }
        _ => Err(format!("bad field spec `{}`", text)),
    }
}

fn emit(out: &OutArg, content: &str) -> Result<(), String> {
    match &out.out {
        Some(path) => fs::write(path, content).map_err(|e| format!("writing {:?}: {}", path, e)),
        None => {
            print!("{}", content);
            Ok(())
        }
    }
}

fn fail(msg: &str, code: u8) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(code)
}

fn run_analyze(
    field: &str,
    f_text: &str,
    max_t: usize,
    exact: bool,
    max_g: Option<usize>,
    budget: u64,
    out: &OutArg,
) -> ExitCode {
    let ctx = match parse_field(field) {
        Ok(c) => c,
        Err(e) => return fail(&e, 1),
    };
    let f = match parse_poly(f_text, &ctx) {
        Ok(f) => f,
        Err(e) => return fail(&e.to_string(), 1),
    };
    let ring = match HypersurfaceRing::new(f.clone()) {
        Ok(r) => r,
        Err(e) => return fail(&e.to_string(), 1),
    };
    let gll = if exact {
        let Some(max_g) = max_g else {
            return fail("--exact requires --max-g", 1);
        };
        let mut opts = GllSearchOptions::new(max_g.max(ring.index()));
        opts.budget = budget;
        opts.bounds_max_t = max_t;
        match ring.gll_exact(&opts) {
            Ok(r) => r,
            Err(Error::SearchSpaceTooLarge { budget }) => {
                return fail(&Error::SearchSpaceTooLarge { budget }.to_string(), 2)
            }
            Err(e) => return fail(&e.to_string(), 1),
        }
    } else {
        ring.gll_bounds(max_t)
    };
    // the exact path only records a regular form when the found witness has
    // a regular initial form; fall back to the bound search's form
    let regular_form = gll
        .regular_form
        .clone()
        .or_else(|| ring.gll_bounds(max_t).regular_form);
    let zd = linear_zerodivisor_forms(&f).expect("nonzero defining equation");
    let linear_zerodivisors = zd
        .iter()
        .map(|&(alpha, beta)| {
            let form = loewy_core::poly::BiPoly::var_x(&ctx)
                .scalar_mul(alpha)
                .add(&loewy_core::poly::BiPoly::var_y(&ctx).scalar_mul(beta));
            PointJson { alpha: ctx.coords(alpha), beta: ctx.coords(beta), form: form.to_string() }
        })
        .collect();
    let doc = AnalyzeJson {
        schema_version: report::SCHEMA_VERSION,
        field: FieldJson::from_ctx(&ctx),
        f: PolyJson::from_poly(&f),
        order: ring.index(),
        index: ring.index(),
        linear_zerodivisors,
        gr_regular_form_found: regular_form
            .as_ref()
            .map(|(d, z)| RegularFormJson { degree: *d, form: z.to_string() }),
        gll: GllJson::from_result(&gll),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    match emit(out, &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e, 1),
    }
}

fn run_semigroup(gens: &[u64], oracle: bool, out: &OutArg) -> ExitCode {
    let h = match NumericalSemigroup::new(gens) {
        Ok(h) => h,
        Err(e) => return fail(&e.to_string(), 1),
    };
    let formula = h.ggl(GglMode::Formula);
    let (oracle_value, oracle_agrees) = if oracle {
        let r = h.ggl(GglMode::Oracle);
        (Some(r.value), Some(r.value == r.formula_value))
    } else {
        (None, None)
    };
    let witnesses = h.ggl_witnesses();
    let reduction_shifts = witnesses
        .iter()
        .map(|&d| ReductionShiftJson {
            d,
            min_shift: h.graded_reduction_min_shift(d).expect("witnesses are members"),
        })
        .collect();
    let (gll_value, witness_d) = h.gll_graded();
    let doc = SemigroupJson {
        schema_version: report::SCHEMA_VERSION,
        gens: h.gens().to_vec(),
        conductor: h.conductor(),
        frobenius: h.frobenius(),
        gaps: h.gaps().to_vec(),
        apery: AperyJson {
            modulus: h.multiplicity(),
            set: h.apery_set(h.multiplicity()).expect("the multiplicity is a member"),
        },
        ggl: SemigroupGglJson {
            value: formula.value,
            formula_value: formula.formula_value,
            oracle_value,
            oracle_agrees,
        },
        ggl_witnesses: witnesses,
        reduction_shifts,
        gll_graded: GradedGllJson { value: gll_value, witness_d },
        prop43_ok: h.length_bounds_check(),
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    match emit(out, &text) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(&e, 1),
    }
}

fn run_scan(
    field: &str,
    order: usize,
    max_t: usize,
    max_g: Option<usize>,
    budget: u64,
    out: &OutArg,
) -> ExitCode {
    let ctx = match parse_field(field) {
        Ok(c) => c,
        Err(e) => return fail(&e, 1),
    };
    match scan(&ctx, order, max_t, max_g, budget) {
        Ok(rows) => match emit(out, &rows_to_csv(&rows)) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(&e, 1),
        },
        Err(e) => fail(&e.to_string(), 1),
    }
}

fn run_verify(only: Option<&str>, inject_mismatch: bool, out: &OutArg) -> ExitCode {
    let mut rows = verify::run_all(only);
    if inject_mismatch {
        rows.push(ReportRow::new(
            "injected-mismatch",
            "test mode",
            "deliberately wrong expected value",
            "the actual computation",
        ));
    }
    let table = report::render_table(&rows);
    if emit(out, &table).is_err() {
        return ExitCode::from(1);
    }
    if rows.iter().all(|r| r.ok()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests are not usage errors
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{}", e);
                return ExitCode::SUCCESS;
            }
            eprint!("{}", e);
            return ExitCode::from(1);
        }
    };
    match cli.cmd {
        Cmd::Analyze { field, f, max_t, exact, max_g, budget, out } => {
            run_analyze(&field, &f, max_t, exact, max_g, budget, &out)
        }
        Cmd::Semigroup { gens, oracle, out } => run_semigroup(&gens, oracle, &out),
        Cmd::Scan { field, order, max_t, max_g, budget, out } => {
            run_scan(&field, order, max_t, max_g, budget, &out)
        }
        Cmd::VerifyPaper { only, inject_mismatch, out } => {
            run_verify(only.as_deref(), inject_mismatch, &out)
        }
    }
}
