//! `witt-forge`: exact symmetric functions, Witt vectors over semirings and
//! total positivity from the command line.
//!
//! Exit codes: 0 when every requested check passes, 1 when one fails, 2 on a
//! usage, input or capacity error. Query commands (`sf`, `witt`, `tnn`, …)
//! report their verdicts in JSON and exit 0.

mod store;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use witt_forge::bigwitt::{Domain, Membership, SeriesNormalization, WittJson, WittVector};
use witt_forge::ptypical::{self, PTypGhost, PTypJson};
use witt_forge::rational::{parse_q, parse_q_list, Q};
use witt_forge::series::TruncSeries;
use witt_forge::symfunc::positivity::{is_monomial_positive, is_schur_positive};
use witt_forge::symfunc::text::{format_in_basis, parse_symfunc, SymFuncJson};
use witt_forge::totalpos;
use witt_forge::verify::{self, SuiteOptions, SuiteReport, CHECKS};
use witt_forge::{BasisTag, SymFunc, DEFAULT_DEGREE_BOUND};

#[derive(Parser)]
#[command(name = "witt-forge", version, about = "Exact symmetric functions and Witt vectors over semirings")]
struct Cli {
    /// Cache file for character values and basis transitions.
    /// Defaults to $WITT_FORGE_CACHE, then the user cache directory.
    #[arg(long, global = true, value_name = "FILE")]
    cache_path: Option<PathBuf>,

    /// Neither read nor write the cache.
    #[arg(long, global = true)]
    no_cache: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reproduce the reference computations and report pass/fail.
    Verify(VerifyArgs),
    /// Symmetric function arithmetic.
    #[command(subcommand)]
    Sf(SfCommand),
    /// Big Witt vectors over subsemirings of ℚ.
    #[command(subcommand)]
    Witt(WittCommand),
    /// p-typical Witt vectors.
    #[command(subcommand)]
    Ptypical(PtypicalCommand),
    /// Total nonnegativity of truncated series.
    #[command(subcommand)]
    Tnn(TnnCommand),
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("which").required(true).args(["all", "check"]))]
struct VerifyArgs {
    /// Run every check.
    #[arg(long)]
    all: bool,
    /// Run the named checks (repeat or separate with commas).
    #[arg(long, value_delimiter = ',', value_parser = clap::builder::PossibleValuesParser::new(CHECKS))]
    check: Vec<String>,
    /// Include the degree-25 d-operator case (takes longer).
    #[arg(long)]
    slow: bool,
    /// Emit the reports as JSON.
    #[arg(long)]
    json: bool,
    /// Degree bound for the symmetric function computations.
    #[arg(long, default_value_t = 25)]
    max_degree: usize,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
}

#[derive(Args)]
struct Bound {
    /// Degree bound; results of higher degree are a capacity error.
    #[arg(long, default_value_t = DEFAULT_DEGREE_BOUND)]
    bound: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    M,
    E,
    H,
    P,
    S,
    W,
}

impl From<Basis> for BasisTag {
    fn from(b: Basis) -> Self {
        match b {
            Basis::M => BasisTag::M,
            Basis::E => BasisTag::E,
            Basis::H => BasisTag::H,
            Basis::P => BasisTag::P,
            Basis::S => BasisTag::S,
            Basis::W => BasisTag::W,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CoproductKind {
    Add,
    Mul,
}

#[derive(Clone, Copy, ValueEnum)]
enum PositivityBasis {
    /// Schur-positive.
    S,
    /// Monomial-positive.
    M,
}

#[derive(Subcommand)]
enum SfCommand {
    /// Expand an expression in a basis.
    Convert {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "s")]
        to: Basis,
        #[command(flatten)]
        bound: Bound,
    },
    /// Product of expressions.
    Multiply {
        #[arg(long = "expr", allow_hyphen_values = true, required = true)]
        exprs: Vec<String>,
        #[arg(long, value_enum, default_value = "s")]
        to: Basis,
        #[command(flatten)]
        bound: Bound,
    },
    /// Plethysm `outer ∘ inner`.
    Plethysm {
        #[arg(long, allow_hyphen_values = true)]
        outer: String,
        #[arg(long, allow_hyphen_values = true)]
        inner: String,
        #[arg(long, value_enum, default_value = "s")]
        to: Basis,
        #[command(flatten)]
        bound: Bound,
    },
    /// Additive or multiplicative coproduct.
    Coproduct {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "add")]
        kind: CoproductKind,
        #[arg(long, value_enum, default_value = "s")]
        to: Basis,
        #[command(flatten)]
        bound: Bound,
    },
    /// Schur or monomial positivity with a witness.
    Positivity {
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, value_enum, default_value = "s")]
        basis: PositivityBasis,
        #[command(flatten)]
        bound: Bound,
    },
}

#[derive(Subcommand)]
enum WittCommand {
    /// Sum of two Witt vectors given as JSON.
    Add { x: String, y: String },
    /// Product of two Witt vectors given as JSON.
    Mul { x: String, y: String },
    /// Ghost components.
    Ghost { x: String },
    /// Series coefficients under a sign normalization.
    Series {
        x: String,
        #[arg(long, default_value = "--", allow_hyphen_values = true)]
        normalization: String,
    },
    /// Sum of Teichmüller lifts `[a₁] + … + [a_r]`.
    Teich {
        #[arg(long, allow_hyphen_values = true)]
        values: String,
        #[arg(long)]
        n: usize,
    },
    /// Membership in W(A) and W^Sch(A).
    Member {
        x: String,
        #[arg(long, default_value = "nat")]
        domain: String,
    },
}

#[derive(Subcommand)]
enum PtypicalCommand {
    /// Whether every grid entry lies in the domain.
    Member {
        x: String,
        #[arg(long, default_value = "nat")]
        domain: String,
    },
    Add {
        x: String,
        y: String,
    },
    Mul {
        x: String,
        y: String,
    },
    /// Grid coordinates `x_{ij}`.
    Grid {
        x: String,
    },
    /// Linear independence of the grid-generator monomials.
    VerifyBasis {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
}

#[derive(Subcommand)]
enum TnnCommand {
    /// Nonnegativity of the Toeplitz minors up to an order.
    Check {
        /// Coefficients `1,a₁,…,a_n`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        order: usize,
        /// Treat the coefficients as a truncated series whose later terms are
        /// unknown, rather than as a polynomial.
        #[arg(long)]
        truncated: bool,
    },
    /// Membership of an integer polynomial in W(ℕ) by its roots.
    Roots {
        /// Coefficients `1,a₁,…,a_n`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Truncation of an Edrei–Thoma series and its minors.
    Edrei {
        #[arg(long, default_value = "0")]
        gamma: String,
        #[arg(long, default_value = "")]
        alpha: String,
        #[arg(long, default_value = "")]
        beta: String,
        #[arg(long)]
        n: usize,
        /// Largest minor order; defaults to `min(n, 4)`.
        #[arg(long)]
        order: Option<usize>,
    },
}

/// `Ok(true)` exits 0, `Ok(false)` exits 1, `Err` exits 2.
type Outcome = Result<bool, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = if cli.no_cache { None } else { store::resolve(cli.cache_path.as_deref()) };
    if let Some(path) = &cache {
        store::load(path);
    }
    let (outcome, bound) = run(cli.command);
    if let Some(path) = &cache {
        if let Err(e) = store::save(path, bound) {
            eprintln!("warning: could not write cache {}: {e}", path.display());
        }
    }
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Runs a command and reports the degree bound it used.
fn run(command: Command) -> (Outcome, usize) {
    match command {
        Command::Verify(args) => {
            let bound = args.max_degree;
            (run_verify(args), bound)
        }
        Command::Sf(cmd) => {
            let bound = match &cmd {
                SfCommand::Convert { bound, .. }
                | SfCommand::Multiply { bound, .. }
                | SfCommand::Plethysm { bound, .. }
                | SfCommand::Coproduct { bound, .. }
                | SfCommand::Positivity { bound, .. } => bound.bound,
            };
            (run_sf(cmd), bound)
        }
        Command::Witt(cmd) => (run_witt(cmd), DEFAULT_DEGREE_BOUND),
        Command::Ptypical(cmd) => (run_ptypical(cmd), DEFAULT_DEGREE_BOUND),
        Command::Tnn(cmd) => (run_tnn(cmd), DEFAULT_DEGREE_BOUND),
    }
}

fn emit(v: &Value) {
    println!("{v}");
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn run_verify(args: VerifyArgs) -> Outcome {
    let names: Vec<&str> = if args.all { CHECKS.to_vec() } else { args.check.iter().map(String::as_str).collect() };
    let opts = SuiteOptions { max_degree: args.max_degree, slow: args.slow, seed: args.seed };
    let start = Instant::now();
    let suite = SuiteReport::new(verify::run_suite(&names, &opts).map_err(err)?);
    if args.json {
        println!("{}", serde_json::to_string_pretty(&suite).map_err(err)?);
    } else {
        for r in &suite.reports {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            println!("{status} {:<22} {:>7} ms", r.name, r.elapsed_ms);
            if !r.passed() {
                println!("  {}", r.details);
            }
        }
        let passed = suite.reports.iter().filter(|r| r.passed()).count();
        println!("{passed}/{} checks passed in {:.1} s", suite.reports.len(), start.elapsed().as_secs_f64());
    }
    Ok(suite.all_passed())
}

fn symfunc_json(f: &SymFunc, tag: BasisTag) -> Value {
    let mut v = serde_json::to_value(SymFuncJson::from_symfunc(f, tag)).expect("serializable");
    v["text"] = Value::String(format_in_basis(f, tag));
    v
}

fn run_sf(cmd: SfCommand) -> Outcome {
    let out = match cmd {
        SfCommand::Convert { expr, to, bound } => {
            let f = parse_symfunc(&expr, bound.bound).map_err(err)?;
            symfunc_json(&f, to.into())
        }
        SfCommand::Multiply { exprs, to, bound } => {
            let mut product = SymFunc::one(bound.bound);
            for e in &exprs {
                product = product.mul(&parse_symfunc(e, bound.bound).map_err(err)?).map_err(err)?;
            }
            symfunc_json(&product, to.into())
        }
        SfCommand::Plethysm { outer, inner, to, bound } => {
            let f = parse_symfunc(&outer, bound.bound).map_err(err)?;
            let g = parse_symfunc(&inner, bound.bound).map_err(err)?;
            symfunc_json(&f.plethysm(&g).map_err(err)?, to.into())
        }
        SfCommand::Coproduct { expr, kind, to, bound } => {
            let f = parse_symfunc(&expr, bound.bound).map_err(err)?;
            let delta = match kind {
                CoproductKind::Add => f.coproduct_add(),
                CoproductKind::Mul => f.coproduct_mul(),
            };
            let tag: BasisTag = to.into();
            let terms: Vec<Value> = delta
                .to_basis_coeffs(tag)
                .into_iter()
                .map(|((a, b), c)| json!({"left": a, "right": b, "coef": c.to_string()}))
                .collect();
            json!({"basis": tag, "terms": terms})
        }
        SfCommand::Positivity { expr, basis, bound } => {
            let f = parse_symfunc(&expr, bound.bound).map_err(err)?;
            let (key, report) = match basis {
                PositivityBasis::S => ("schur_positive", is_schur_positive(&f)),
                PositivityBasis::M => ("monomial_positive", is_monomial_positive(&f)),
            };
            let mut v = json!({ key: report.positive, "integral": report.integral });
            if let Some((l, c)) = &report.witness {
                v["witness"] = json!({"partition": l, "coef": c.to_string()});
            }
            v
        }
    };
    emit(&out);
    Ok(true)
}

fn parse_witt(s: &str) -> Result<WittVector, String> {
    let j: WittJson = serde_json::from_str(s).map_err(|e| format!("bad Witt vector JSON: {e}"))?;
    j.to_witt().map_err(err)
}

fn witt_json(x: &WittVector) -> Value {
    serde_json::to_value(WittJson::from_witt(x)).expect("serializable")
}

fn membership_json(m: &Membership) -> Value {
    let mut v = json!({"member": m.member});
    if let Some((l, c)) = &m.witness {
        v["witness"] = json!({"partition": l, "value": c.to_string()});
    }
    v
}

fn strings(xs: &[Q]) -> Vec<String> {
    xs.iter().map(Q::to_string).collect()
}

fn run_witt(cmd: WittCommand) -> Outcome {
    let out = match cmd {
        WittCommand::Add { x, y } => witt_json(&parse_witt(&x)?.add(&parse_witt(&y)?).map_err(err)?),
        WittCommand::Mul { x, y } => witt_json(&parse_witt(&x)?.mul(&parse_witt(&y)?).map_err(err)?),
        WittCommand::Ghost { x } => witt_json(&parse_witt(&x)?),
        WittCommand::Series { x, normalization } => {
            let norm: SeriesNormalization = normalization.parse().map_err(err)?;
            let x = parse_witt(&x)?;
            json!({
                "truncation": x.truncation(),
                "series": strings(&x.to_series(norm)),
                "normalization": norm.to_string(),
            })
        }
        WittCommand::Teich { values, n } => {
            if n == 0 {
                return Err("truncation must be at least 1".into());
            }
            let x = parse_q_list(&values)
                .map_err(err)?
                .iter()
                .try_fold(WittVector::zero(n), |acc, a| acc.add(&WittVector::teichmuller(a, n)))
                .map_err(err)?;
            witt_json(&x)
        }
        WittCommand::Member { x, domain } => {
            let dom: Domain = domain.parse().map_err(err)?;
            let x = parse_witt(&x)?;
            json!({
                "domain": dom,
                "W": membership_json(&x.member_w(dom)),
                "W_Sch": membership_json(&x.member_w_sch(dom)),
            })
        }
    };
    emit(&out);
    Ok(true)
}

fn parse_ptyp(s: &str) -> Result<PTypGhost, String> {
    let j: PTypJson = serde_json::from_str(s).map_err(|e| format!("bad p-typical JSON: {e}"))?;
    j.to_ghost().map_err(err)
}

fn ptyp_ghost_json(g: &PTypGhost) -> Value {
    let j = PTypJson { p: g.p, k: g.k, ghost: Some(strings(g.components())), grid: None };
    serde_json::to_value(j).expect("serializable")
}

fn run_ptypical(cmd: PtypicalCommand) -> Outcome {
    let out = match cmd {
        PtypicalCommand::Member { x, domain } => {
            let dom: Domain = domain.parse().map_err(err)?;
            let m = ptypical::member(&parse_ptyp(&x)?, dom);
            let mut v = json!({"domain": dom, "member": m.member});
            if let Some(((i, j), c)) = &m.witness {
                v["witness"] = json!({"entry": format!("{i},{j}"), "value": c.to_string()});
            }
            v
        }
        PtypicalCommand::Add { x, y } => ptyp_ghost_json(&parse_ptyp(&x)?.add(&parse_ptyp(&y)?).map_err(err)?),
        PtypicalCommand::Mul { x, y } => ptyp_ghost_json(&parse_ptyp(&x)?.mul(&parse_ptyp(&y)?).map_err(err)?),
        PtypicalCommand::Grid { x } => {
            let grid = ptypical::ghost_to_grid(&parse_ptyp(&x)?);
            serde_json::to_value(PTypJson::from_grid(&grid)).expect("serializable")
        }
        PtypicalCommand::VerifyBasis { p, k, max_degree } => {
            let report = ptypical::verify_basis_lemma(p, k, max_degree).map_err(err)?;
            emit(&serde_json::to_value(&report).expect("serializable"));
            return Ok(report.independent && report.boundary_free == report.expected_boundary_free);
        }
    };
    emit(&out);
    Ok(true)
}

/// Reads `1,a₁,…,a_n`.
fn parse_series(coeffs: &str) -> Result<TruncSeries, String> {
    TruncSeries::from_full(parse_q_list(coeffs).map_err(err)?).map_err(err)
}

fn run_tnn(cmd: TnnCommand) -> Outcome {
    let out = match cmd {
        TnnCommand::Check { coeffs, order, truncated } => {
            let s = parse_series(&coeffs)?;
            let report = if truncated {
                totalpos::toeplitz_minors_nonneg(&s, order)
            } else {
                totalpos::polynomial_minors_nonneg(&s, order)
            };
            serde_json::to_value(report.map_err(err)?).expect("serializable")
        }
        TnnCommand::Roots { coeffs } => {
            let s = parse_series(&coeffs)?;
            if s.coeffs().iter().any(|c| !c.is_integer()) {
                json!({"in_W_N": false, "reason": "coefficients are not all integers"})
            } else {
                let real = totalpos::nonpositive_real_roots(&s).map_err(err)?;
                let factors = totalpos::linear_factors(&s)
                    .map_err(err)?
                    .map(|fs| fs.iter().map(ToString::to_string).collect::<Vec<_>>());
                json!({"in_W_N": real, "nonpositive_real_roots": real, "linear_factors": factors})
            }
        }
        TnnCommand::Edrei { gamma, alpha, beta, n, order } => {
            let gamma = parse_q(&gamma).map_err(err)?;
            let alphas = parse_q_list(&alpha).map_err(err)?;
            let betas = parse_q_list(&beta).map_err(err)?;
            let s = totalpos::edrei_thoma_truncation(&gamma, &alphas, &betas, n).map_err(err)?;
            let minors = totalpos::toeplitz_minors_nonneg(&s, order.unwrap_or(n.min(4))).map_err(err)?;
            json!({
                "coeffs": strings(&s.full()),
                "minors": minors,
                "factorial_bound": totalpos::factorial_bound_check(&s),
            })
        }
    };
    emit(&out);
    Ok(true)
}
