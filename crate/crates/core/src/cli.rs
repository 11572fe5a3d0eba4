//! Command line front end. [`run`] returns the exit code and the text to
//! print, so the whole interface is testable in-process.
//!
//! Exit codes: 0 when the computation finished (whatever the verdict), 2 for
//! usage and input errors, 1 for internal failures and corpus regressions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::closure::integral_closure;
use crate::criteria::{nec_all, verdict, Engine, VerdictOptions};
use crate::error::{Error, Result};
use crate::harness::corpus::{self, GoldenState};
use crate::harness::parse::{infer_context, parse_ideal, parse_vars};
use crate::harness::report;
use crate::harness::search::{search, SearchConfig, SearchMode};
use crate::ideal::{colon_ideal, eliminate_variable_generators, intersect, product, strongly_golod, sum};
use crate::koszul::{betti_table, h1_constructive_basis, monomial_cycle_basis, products_trivial, socle_basis, Enumeration};
use crate::linalg::FieldSpec;
use crate::poincare::{default_degree_window, poincare_coefficients, resolve_residue_field, serre_compare};
use crate::ring::{MonomialIdeal, RingContext};

#[derive(Parser, Debug)]
#[command(name = "golodkit", version, about = "Golodness tests for monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct Common {
    /// Comma-separated variables; inferred from the expression when omitted.
    #[arg(long)]
    vars: Option<String>,
    /// The ideal, e.g. "(x^2, y*z)".
    #[arg(long)]
    ideal: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// q or p:<prime>.
    #[arg(long, default_value = "q", value_parser = parse_field)]
    field: FieldSpec,
}

#[derive(Args, Debug)]
struct Binary {
    #[command(flatten)]
    common: Common,
    /// The second ideal.
    #[arg(long)]
    with: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide or refute Golodness.
    Golod {
        #[command(flatten)]
        common: Common,
        /// Engines outside three variables, comma-separated: colon, koszul, serre.
        #[arg(long, default_value = "colon,koszul,serre")]
        engines: String,
        /// Order of the Poincare series comparison.
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Run every engine even after a certificate is found.
        #[arg(long)]
        all_engines: bool,
    },
    /// Every violated colon condition.
    Nec {
        #[command(flatten)]
        common: Common,
    },
    /// Multigraded Koszul homology dimensions.
    KoszulBetti {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "box")]
        enumeration: EnumerationArg,
    },
    /// Whether all products of positive-degree Koszul homology vanish.
    KoszulProducts {
        #[command(flatten)]
        common: Common,
    },
    /// Try to build a homology basis of single terms in degree p.
    MonomialBasis {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        p: usize,
    },
    /// A basis of H_1 read off the generators.
    H1Basis {
        #[command(flatten)]
        common: Common,
    },
    /// A basis of H_n from the socle.
    SocleBasis {
        #[command(flatten)]
        common: Common,
    },
    /// Minimal resolution of the residue field and its Poincare coefficients.
    Poincare {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Largest internal degree to search; defaults to a bound that is proven for Artinian rings.
        #[arg(long)]
        degree_window: Option<u64>,
    },
    /// Compare the Poincare series with Serre's bound.
    SerreCompare {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 4)]
        order: usize,
    },
    /// I : J.
    Colon {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        by: String,
    },
    Product(Binary),
    Intersect(Binary),
    Sum(Binary),
    /// Integral closure.
    Closure {
        #[command(flatten)]
        common: Common,
    },
    StronglyGolod {
        #[command(flatten)]
        common: Common,
    },
    /// Drop linear generators together with their variables.
    Reduce {
        #[command(flatten)]
        common: Common,
    },
    /// Seeded random search.
    Search {
        #[arg(long, default_value = "product3")]
        mode: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        max_exp: u32,
        /// Generator count per ideal: N or MIN..MAX.
        #[arg(long, default_value = "1..5")]
        gens: String,
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Variables for raw mode.
        #[arg(long, default_value_t = 3)]
        nvars: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value = "q", value_parser = parse_field)]
        field: FieldSpec,
    },
    /// Regression corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumerationArg {
    Box,
    Lcm,
}

#[derive(Subcommand, Debug)]
enum CorpusAction {
    /// Check entries against their expectations and golden files.
    Run {
        #[arg(long)]
        all: bool,
        /// Entry names to run (all when --all is given).
        names: Vec<String>,
        #[arg(long, default_value = ".")]
        dir: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Regenerate golden files.
    Bless {
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
    List {
        #[arg(long, default_value = ".")]
        dir: PathBuf,
    },
}

fn parse_field(s: &str) -> std::result::Result<FieldSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_gens(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidConfig(format!("--gens expects N or MIN..MAX, got {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}

fn context_for(vars: &Option<String>, texts: &[&str]) -> Result<RingContext> {
    match vars {
        Some(v) => parse_vars(v),
        None => infer_context(&texts.join(" ")),
    }
}

fn render(format: Format, json: Value, text: String) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("json values serialize") + "\n",
        Format::Text => text,
    }
}

fn ideal_output(format: Format, i: &MonomialIdeal) -> String {
    render(format, report::ideal(i), format!("{i}\n"))
}

fn load(common: &Common, extra: &[&str]) -> Result<MonomialIdeal> {
    let mut texts = vec![common.ideal.as_str()];
    texts.extend_from_slice(extra);
    let ctx = context_for(&common.vars, &texts)?;
    parse_ideal(&common.ideal, &ctx)
}

fn binary(b: &Binary, op: fn(&MonomialIdeal, &MonomialIdeal) -> Result<MonomialIdeal>) -> Result<String> {
    let i = load(&b.common, &[&b.with])?;
    let j = parse_ideal(&b.with, i.context())?;
    Ok(ideal_output(b.common.format, &op(&i, &j)?))
}

fn execute(cmd: Command) -> Result<(i32, String)> {
    let out = match cmd {
        Command::Golod { common, engines, depth, all_engines } => {
            let i = load(&common, &[])?;
            let engines = engines
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| Engine::parse(s.trim()).ok_or_else(|| Error::InvalidConfig(format!("unknown engine {s:?}"))))
                .collect::<Result<Vec<_>>>()?;
            let opts = VerdictOptions { engines, field: common.field, series_depth: depth, stop_at_first: !all_engines };
            let v = verdict(&i, &opts)?;
            render(common.format, report::verdict(&v), report::verdict_text(&v))
        }
        Command::Nec { common } => {
            let i = load(&common, &[])?;
            let certs = nec_all(&i)?;
            let ctx = i.context();
            let json = json!({
                "violations": certs.iter().map(|c| report::certificate(c, ctx)).collect::<Vec<_>>(),
                "count": certs.len(),
            });
            let mut text = format!("{} violation(s)\n", certs.len());
            for c in &certs {
                text += &format!("[{}] {}\n", c.kind(), c.describe(ctx));
            }
            render(common.format, json, text)
        }
        Command::KoszulBetti { common, enumeration } => {
            let i = load(&common, &[])?;
            let e = match enumeration {
                EnumerationArg::Box => Enumeration::FullBox,
                EnumerationArg::Lcm => Enumeration::LcmClosure,
            };
            let t = betti_table(&i, common.field, e)?;
            render(common.format, report::betti(&t), report::betti_text(&t))
        }
        Command::KoszulProducts { common } => {
            let i = load(&common, &[])?;
            let r = products_trivial(&i, common.field)?;
            let ctx = i.context();
            let text = match &r.witness {
                None => format!("trivial ({} pairs checked)\n", r.pairs_checked),
                Some(w) => format!(
                    "nontrivial: ({}) * ({}) = {} is not a boundary\n",
                    w.left.display(ctx),
                    w.right.display(ctx),
                    w.product.display(ctx)
                ),
            };
            render(common.format, report::triviality(&r, ctx), text)
        }
        Command::MonomialBasis { common, p } => {
            let i = load(&common, &[])?;
            let r = monomial_cycle_basis(&i, p, common.field)?;
            let ctx = i.context();
            let mut text = if r.success() {
                format!("monomial basis of H_{p}:\n")
            } else {
                format!("no monomial basis of H_{p}\n")
            };
            text += &report::terms_text(&r.basis, ctx);
            for f in &r.failures {
                text += &format!(
                    "failure at {:?}: homology {} but monomial cycles span {}\n",
                    f.multidegree.exponents(),
                    f.homology_dimension,
                    f.spanned_dimension
                );
            }
            render(common.format, report::monomial_basis(&r, ctx), text)
        }
        Command::H1Basis { common } => {
            let i = load(&common, &[])?;
            let terms = h1_constructive_basis(&i)?;
            terms_output(common.format, &terms, i.context())
        }
        Command::SocleBasis { common } => {
            let i = load(&common, &[])?;
            let terms = socle_basis(&i)?;
            terms_output(common.format, &terms, i.context())
        }
        Command::Poincare { common, depth, degree_window } => {
            let i = load(&common, &[])?;
            let window = degree_window.unwrap_or_else(|| default_degree_window(&i, depth));
            let steps = resolve_residue_field(&i, depth, window, common.field)?;
            let series = poincare_coefficients(&steps);
            let coeffs: Vec<Value> = series.coefficients().iter().map(report::bigint).collect();
            let mut json = report::resolution(&steps);
            json["poincare"] = json!(coeffs);
            let mut text = format!(
                "poincare: ({})\n",
                series.coefficients().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            );
            for s in &steps {
                text += &format!("F_{}: rank {} {:?}\n", s.index, s.rank(), s.completeness);
            }
            render(common.format, json, text)
        }
        Command::SerreCompare { common, order } => {
            let i = load(&common, &[])?;
            let r = serre_compare(&i, order, common.field)?;
            render(common.format, report::comparison(&r), report::comparison_text(&r))
        }
        Command::Colon { common, by } => {
            let i = load(&common, &[&by])?;
            let j = parse_ideal(&by, i.context())?;
            ideal_output(common.format, &colon_ideal(&i, &j)?)
        }
        Command::Product(b) => binary(&b, product)?,
        Command::Intersect(b) => binary(&b, intersect)?,
        Command::Sum(b) => binary(&b, sum)?,
        Command::Closure { common } => {
            let i = load(&common, &[])?;
            ideal_output(common.format, &integral_closure(&i)?)
        }
        Command::StronglyGolod { common } => {
            let i = load(&common, &[])?;
            let s = strongly_golod(&i)?;
            render(common.format, json!({ "strongly_golod": s }), format!("{s}\n"))
        }
        Command::Reduce { common } => {
            let i = load(&common, &[])?;
            let (r, ctx) = eliminate_variable_generators(&i);
            render(common.format, json!({ "context": report::context(&ctx), "ideal": report::ideal(&r) }), format!("{ctx}: {r}\n"))
        }
        Command::Search { mode, trials, seed, max_exp, gens, depth, nvars, format, field } => {
            let mode = SearchMode::parse(&mode).ok_or_else(|| Error::InvalidConfig(format!("unknown mode {mode:?}")))?;
            let (min_gens, max_gens) = parse_gens(&gens)?;
            let config = SearchConfig {
                mode,
                trials,
                seed,
                min_gens,
                max_gens,
                max_exp,
                field,
                series_depth: depth,
                nvars,
            };
            let r = search(&config)?;
            render(format, r.to_json(), r.to_text())
        }
        Command::Corpus { action } => return corpus_command(action),
    };
    Ok((0, out))
}

fn terms_output(format: Format, terms: &[crate::koszul::KoszulTerm], ctx: &RingContext) -> String {
    let json = json!(terms.iter().map(|t| report::koszul_term(t, ctx)).collect::<Vec<_>>());
    render(format, json, report::terms_text(terms, ctx))
}

fn corpus_command(action: CorpusAction) -> Result<(i32, String)> {
    match action {
        CorpusAction::List { dir } => {
            let entries = corpus::load(&dir)?;
            Ok((0, entries.iter().map(|e| format!("{}: {}\n", e.name, e.ideal)).collect()))
        }
        CorpusAction::Bless { dir } => {
            let names = corpus::bless(&dir)?;
            Ok((0, format!("blessed {} entries\n", names.len())))
        }
        CorpusAction::Run { all, names, dir, format } => {
            if !all && names.is_empty() {
                return Err(Error::InvalidConfig("corpus run needs --all or entry names".into()));
            }
            let mut entries = corpus::load(&dir)?;
            if !all {
                for n in &names {
                    if !entries.iter().any(|e| &e.name == n) {
                        return Err(Error::InvalidConfig(format!("no corpus entry named {n:?}")));
                    }
                }
                entries.retain(|e| names.contains(&e.name));
            }
            let outcomes = entries.iter().map(|e| corpus::check(&dir, e)).collect::<Result<Vec<_>>>()?;
            let failed = outcomes.iter().filter(|o| !o.ok()).count();
            let mut text = String::new();
            let mut rows = Vec::new();
            for o in &outcomes {
                let golden = match o.golden {
                    GoldenState::Match => "match",
                    GoldenState::Mismatch => "MISMATCH",
                    GoldenState::Missing => "missing",
                };
                let expect = match o.expectation {
                    Some(true) => "ok",
                    Some(false) => "FAILED",
                    None => "-",
                };
                text += &format!("{:<24} expect {:<6} golden {}\n", o.name, expect, golden);
                rows.push(json!({ "name": o.name, "expectation": o.expectation, "golden": golden.to_lowercase() }));
            }
            text += &format!("{}/{} entries reproduce\n", outcomes.len() - failed, outcomes.len());
            let json = json!({ "entries": rows, "failed": failed });
            Ok((if failed == 0 { 0 } else { 1 }, render(format, json, text)))
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Internal(_) | Error::Io(_) | Error::ExponentOverflow | Error::MatrixShape(_) => 1,
        _ => 2,
    }
}

fn configure_threads() {
    static ONCE: std::sync::Once = std::sync::Once::new();
    ONCE.call_once(|| {
        if let Some(n) = std::env::var("GOLODKIT_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            // 0 lets rayon pick; an already built pool is left alone
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    });
}

/// Run with `argv[0]` the program name.
pub fn run<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    configure_threads();
    let cli = match Cli::try_parse_from(argv.iter().map(|s| s.as_ref())) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(r) => r,
        Err(e) => (exit_code(&e), format!("error: {e}\n")),
    }
}
