//! `pschen`: command-line front end for the pschen-core computations.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use config::{default_config_path, Format, RunConfig, CACHE_ENV};
use output::{emit, num, Report};
use pschen_core::arith::{cube_root_ceil, heath_brown_check, twin_singular_series_with, HeathBrownCheck, SpfTable};
use pschen_core::bracket::chen_bracket;
use pschen_core::exec::Exec;
use pschen_core::levels::{solve_level, theorem1_level, Gamma, LevelQuery};
use pschen_core::pairs::{eph_pair, iterate_a, parse_rational, ExponentPair};
use pschen_core::ps::{
    bv_discrepancy_with, chen_counts_with, count_near_diagonal_with, enumerate_ps_with, exp_sum_progression,
    pi_gamma_with, verify_weight_inequality, ChenParams, ExpSumQuery, PSContext,
};
use pschen_core::sievefn::{sieve_fn, SieveFnKind};
use pschen_core::verify::{criterion_ids, verify_all, VerifyConfig};
use pschen_core::Error;

const EXIT_FAILURE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_PRECISION: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "pschen", version, about = "Piatetski-Shapiro primes, level formulas, sieve functions and Chen weights")]
struct Cli {
    /// Emit JSON (report plus artifact_version, inputs and runtime)
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (deterministic columns only)
    #[arg(long, global = true)]
    csv: bool,
    /// Directory for cached factor tables
    #[arg(long, global = true, env = CACHE_ENV)]
    cache_dir: Option<PathBuf>,
    /// Config file of key = value lines [default: $PSCHEN_CONFIG or ~/.config/pschen/config]
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Run every loop on the calling thread
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exponent pairs: Aⁿ(1/2, 1/2), the EPH pair, or A applied to a given pair
    Pairs(PairsArgs),
    /// Level of distribution ξ(γ) from the constraint solver and the closed form
    Level(LevelArgs),
    /// Linear sieve function F(s) or f(s)
    Sievefn(SievefnArgs),
    /// The weighted-sieve bracket S − S1 − S2 − S3 at ξ
    Bracket(BracketArgs),
    /// π_γ(x) and the number of PS integers up to x
    PsCount(PsCountArgs),
    /// Discrepancy of PS primes in progressions l mod d, d ≤ D
    Bv(BvArgs),
    /// Chen weight counts S, S1, S2, S3 over a = p + 2 in the PS sequence
    ChenWeights(ChenArgs),
    /// Exponential sum over a progression next to its exponent-pair bound
    Expsum(ExpsumArgs),
    /// Count of near-diagonal quadruples 𝒩(Δ)
    Ndiag(NdiagArgs),
    /// Heath-Brown identity residuals over a range of n
    IdentityCheck(IdentityArgs),
    /// Truncated twin-prime product ∏(1 − 1/(p−1)²)
    TwinConstant(TwinArgs),
    /// Run the acceptance suite
    VerifyAll(VerifyArgs),
}

#[derive(Args, Debug)]
struct PairsArgs {
    /// Number of A-steps from (1/2, 1/2)
    #[arg(long, conflicts_with_all = ["eph", "apply"])]
    iterate: Option<u32>,
    /// ε for the pair (ε, 1/2 + ε)
    #[arg(long, conflicts_with = "apply")]
    eph: Option<String>,
    /// Apply A once to the pair "κ ℓ" (rationals or decimals)
    #[arg(long, num_args = 2, value_names = ["KAPPA", "ELL"])]
    apply: Option<Vec<String>>,
}

#[derive(Args, Debug)]
struct LevelArgs {
    /// γ as a decimal or p/q; the complement 1 − γ is formed exactly
    #[arg(long, required_unless_present = "gamma_complement", conflicts_with = "gamma_complement")]
    gamma: Option<String>,
    /// 1 − γ directly, for γ within 1e-10 of 1
    #[arg(long)]
    gamma_complement: Option<f64>,
    /// "a36,a3" (default) or "eph"
    #[arg(long, default_value = "a36,a3")]
    pairs: String,
    #[arg(long, default_value_t = 0.0)]
    eta: f64,
    #[arg(long, default_value_t = 0.0)]
    epsilon: f64,
}

#[derive(Args, Debug)]
struct SievefnArgs {
    /// F (upper) or f (lower)
    #[arg(long)]
    kind: String,
    #[arg(long)]
    s: f64,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct BracketArgs {
    #[arg(long, default_value_t = 0.47284)]
    xi: f64,
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args, Debug)]
struct PsCountArgs {
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    x: u64,
}

#[derive(Args, Debug)]
struct BvArgs {
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    x: u64,
    /// Largest modulus
    #[arg(long = "D", visible_alias = "max-modulus")]
    d: u64,
    #[arg(long, allow_hyphen_values = true)]
    l: i64,
    /// Power of log x in the normalization
    #[arg(long = "A", default_value_t = 1.0)]
    a: f64,
}

#[derive(Args, Debug)]
struct ChenArgs {
    #[arg(long)]
    gamma: f64,
    #[arg(long)]
    x: u64,
    /// Also check the weight inequality for every eligible a ≤ x
    #[arg(long)]
    check_inequality: bool,
}

#[derive(Args, Debug)]
struct ExpsumArgs {
    #[arg(long)]
    x: u64,
    #[arg(long)]
    x1: u64,
    #[arg(long)]
    d: u64,
    #[arg(long, allow_hyphen_values = true)]
    l: i64,
    #[arg(long, allow_hyphen_values = true)]
    h: i64,
    #[arg(long)]
    gamma: f64,
    /// "trivial", "a3", "a36" or "κ,ℓ"
    #[arg(long, default_value = "a3")]
    pair: String,
    #[arg(long, default_value_t = pschen_core::ps::expsum::DEFAULT_TERM_CAP)]
    term_cap: u64,
}

#[derive(Args, Debug)]
struct NdiagArgs {
    #[arg(long)]
    j: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    alpha: f64,
    #[arg(long)]
    delta: f64,
    #[arg(long, default_value_t = pschen_core::ps::ndiag::DEFAULT_PAIR_CAP)]
    pair_cap: u64,
}

#[derive(Args, Debug)]
struct IdentityArgs {
    /// Single n, or the start of a range with --to
    #[arg(long, default_value_t = 2)]
    n: u64,
    #[arg(long)]
    to: Option<u64>,
    /// Bound on the μ-factors; defaults to ⌈n^{1/3}⌉ of the range end
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args, Debug)]
struct TwinArgs {
    #[arg(long, default_value_t = 100_000_000)]
    bound: u64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Smaller instances, under a minute
    #[arg(long)]
    quick: bool,
    /// Comma-separated criterion ids
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<String>>,
    /// Do not fail criteria on their time budgets
    #[arg(long)]
    no_budgets: bool,
}

enum Failure {
    Core(Error),
    Usage(String),
    /// The command ran but reported a failed check; the report is still emitted.
    Checks(Report),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) | Error::Precondition(_) | Error::Range { .. } | Error::Cost { .. } => EXIT_DOMAIN,
        Error::PrecisionExhausted { .. } => EXIT_PRECISION,
        Error::Convergence { .. } | Error::Cache(_) | Error::Io(_) => EXIT_FAILURE,
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    let path = cli.config.clone().unwrap_or_else(default_config_path);
    match std::fs::read_to_string(&path) {
        Ok(text) => cfg.apply_file_contents(&text, &path)?,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound && cli.config.is_none() => {}
        Err(e) => return Err(format!("cannot read config {}: {e}", path.display())),
    }
    if let Some(d) = &cli.cache_dir {
        cfg.cache_dir = d.clone();
    }
    if cli.json {
        cfg.format = Format::Json;
    } else if cli.csv {
        cfg.format = Format::Csv;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn tol_or(tol: Option<f64>, cfg: &RunConfig) -> Result<f64, Failure> {
    let t = tol.unwrap_or(cfg.default_tol);
    if !(t > 0.0 && t <= 1e-3) {
        return Err(Failure::Usage(format!("--tol must lie in (0, 1e-3], got {t}")));
    }
    Ok(t)
}

fn ctx(gamma: f64, cfg: &RunConfig) -> Result<PSContext, Failure> {
    Ok(PSContext::with_policy(gamma, cfg.precision)?)
}

fn pair_report(p: &ExponentPair) -> Report {
    #[derive(Serialize)]
    struct PairOut {
        kappa: String,
        ell: String,
        kappa_f64: f64,
        ell_f64: f64,
    }
    let (k, l) = p.to_f64();
    let out = PairOut { kappa: p.kappa().to_string(), ell: p.ell().to_string(), kappa_f64: k, ell_f64: l };
    Report::new("pairs", json!({}), &out)
        .csv(vec!["kappa", "ell", "kappa_f64", "ell_f64"], vec![vec![out.kappa.clone(), out.ell.clone(), num(k), num(l)]])
        .text(p.to_string())
}

fn named_pair(s: &str) -> Result<ExponentPair, Failure> {
    match s {
        "trivial" => Ok(ExponentPair::trivial()),
        "a3" => Ok(iterate_a(3)),
        "a36" => Ok(iterate_a(36)),
        other => {
            let (k, l) = other
                .split_once(',')
                .ok_or_else(|| Failure::Usage(format!("pair must be trivial, a3, a36 or 'kappa,ell', got {other:?}")))?;
            Ok(ExponentPair::new(parse_rational(k)?, parse_rational(l)?)?)
        }
    }
}

fn run(cli: &Cli, cfg: &RunConfig, exec: Exec) -> Result<Report, Failure> {
    match &cli.command {
        Command::Pairs(a) => {
            let p = if let Some(e) = &a.eph {
                eph_pair(parse_rational(e)?)?
            } else if let Some(v) = &a.apply {
                ExponentPair::new(parse_rational(&v[0])?, parse_rational(&v[1])?)?.a_process()
            } else {
                iterate_a(a.iterate.unwrap_or(0))
            };
            let mut r = pair_report(&p);
            r.inputs = json!({"iterate": a.iterate, "eph": a.eph, "apply": a.apply});
            Ok(r)
        }
        Command::Level(a) => {
            let gamma = match (&a.gamma, a.gamma_complement) {
                (Some(g), _) => Gamma::parse(g)?,
                (None, Some(c)) => Gamma::from_complement(c)?,
                (None, None) => unreachable!("clap requires one"),
            };
            let q = match a.pairs.as_str() {
                "a36,a3" => LevelQuery::a36_a3_pairs(gamma),
                "eph" => LevelQuery::eph_pairs(gamma),
                other => return Err(Failure::Usage(format!("--pairs must be a36,a3 or eph, got {other:?}"))),
            };
            let q = LevelQuery { eta: a.eta, epsilon: a.epsilon, ..q };
            let r = solve_level(&q)?;
            let closed = if a.pairs == "a36,a3" { theorem1_level(gamma, a.epsilon).ok() } else { None };
            #[derive(Serialize)]
            struct LevelOut {
                gamma: f64,
                gamma_complement: f64,
                xi: f64,
                binding_constraint: String,
                feasible: bool,
                closed_form: Option<f64>,
            }
            let out = LevelOut {
                gamma: gamma.value(),
                gamma_complement: gamma.complement(),
                xi: r.xi,
                binding_constraint: r.binding_constraint.to_string(),
                feasible: r.feasible,
                closed_form: closed,
            };
            let text = format!(
                "xi = {} ({}, binding {}){}",
                r.xi,
                if r.feasible { "feasible" } else { "infeasible" },
                r.binding_constraint,
                closed.map(|c| format!("\nclosed form = {c}")).unwrap_or_default()
            );
            Ok(Report::new("level", json!({"gamma": gamma.to_string(), "pairs": a.pairs, "eta": a.eta, "epsilon": a.epsilon}), &out)
                .csv(
                    vec!["gamma", "gamma_complement", "xi", "binding_constraint", "feasible", "closed_form"],
                    vec![vec![
                        num(out.gamma),
                        num(out.gamma_complement),
                        num(out.xi),
                        out.binding_constraint.clone(),
                        out.feasible.to_string(),
                        closed.map(num).unwrap_or_default(),
                    ]],
                )
                .text(text))
        }
        Command::Sievefn(a) => {
            let kind = match a.kind.as_str() {
                "F" => SieveFnKind::Upper,
                "f" => SieveFnKind::Lower,
                other => return Err(Failure::Usage(format!("--kind must be F or f, got {other:?}"))),
            };
            let tol = tol_or(a.tol, cfg)?;
            let v = sieve_fn(kind, a.s, tol)?;
            Ok(Report::new("sievefn", json!({"kind": a.kind, "s": a.s, "tol": tol}), &v)
                .csv(
                    vec!["kind", "s", "value", "branch", "quad_error"],
                    vec![vec![kind.to_string(), num(v.s), num(v.value), v.branch.name().into(), num(v.quad_error)]],
                )
                .text(format!("{}({}) = {} [{}, error {:e}]", kind, v.s, v.value, v.branch.name(), v.quad_error)))
        }
        Command::Bracket(a) => {
            let tol = tol_or(a.tol, cfg)?;
            let b = chen_bracket(a.xi, tol)?;
            let text = format!(
                "xi     = {}\nS      = {}\nS1     = {}\nS2     = {}\nS3     = {}\ntotal  = {}\nerror <= {:e}",
                b.xi, b.term_s, b.term_s1, b.term_s2, b.term_s3, b.total, b.quad_error
            );
            Ok(Report::new("bracket", json!({"xi": a.xi, "tol": tol}), &b)
                .csv(
                    vec!["xi", "term_S", "term_S1", "term_S2", "term_S3", "total", "quad_error"],
                    vec![vec![num(b.xi), num(b.term_s), num(b.term_s1), num(b.term_s2), num(b.term_s3), num(b.total), num(b.quad_error)]],
                )
                .text(text))
        }
        Command::PsCount(a) => {
            let c = ctx(a.gamma, cfg)?;
            let p = pi_gamma_with(a.x, &c, exec)?;
            let ps_numbers = enumerate_ps_with(a.x, &c, exec)?.len() as u64;
            #[derive(Serialize)]
            struct PsCountOut {
                x: u64,
                gamma: f64,
                ps_numbers: u64,
                pi_gamma: u64,
                asymptotic: f64,
                ratio: f64,
            }
            let out = PsCountOut { x: a.x, gamma: a.gamma, ps_numbers, pi_gamma: p.count, asymptotic: p.asymptotic, ratio: p.ratio() };
            Ok(Report::new("ps-count", json!({"x": a.x, "gamma": a.gamma}), &out)
                .csv(
                    vec!["x", "gamma", "ps_numbers", "pi_gamma", "asymptotic", "ratio"],
                    vec![vec![a.x.to_string(), num(a.gamma), ps_numbers.to_string(), p.count.to_string(), num(p.asymptotic), num(p.ratio())]],
                )
                .text(format!(
                    "PS integers <= {}: {ps_numbers}\npi_gamma({}) = {} (x^gamma/log x = {:.3}, ratio {:.4})",
                    a.x, a.x, p.count, p.asymptotic, p.ratio()
                )))
        }
        Command::Bv(a) => {
            let r = bv_discrepancy_with(a.x, a.d, a.l, a.a, &ctx(a.gamma, cfg)?, exec)?;
            let rows = r
                .rows
                .iter()
                .map(|w| vec![w.d.to_string(), w.count_in_progression.to_string(), num(w.expected), num(w.abs_dev)])
                .collect();
            let text = format!(
                "{} PS primes <= {}; {} moduli coprime to {}\ntotal |dev| = {}\nnormalized (A = {}) = {}",
                r.ps_prime_count,
                r.x,
                r.rows.len(),
                r.l,
                r.total_abs_dev,
                r.log_power,
                r.normalized
            );
            Ok(Report::new("bv", json!({"x": a.x, "gamma": a.gamma, "D": a.d, "l": a.l, "A": a.a}), &r)
                .csv(vec!["d", "count_in_progression", "expected", "abs_dev"], rows)
                .text(text))
        }
        Command::ChenWeights(a) => {
            let spf = SpfTable::load_or_build(&cfg.cache_dir, a.x.max(1000))?;
            let params = ChenParams::default();
            let c = chen_counts_with(a.x, &ctx(a.gamma, cfg)?, &params, &spf, exec)?;
            let check = if a.check_inequality { Some(verify_weight_inequality(a.x, &params, &spf)?) } else { None };
            #[derive(Serialize)]
            struct ChenOut {
                counts: pschen_core::ps::ChenCounts,
                weight_check: Option<pschen_core::ps::WeightCheck>,
            }
            let mut text = format!(
                "x = {}, gamma = {}: z1 = {}, z2 = {}\n|A| = {}, S = {}, S1 = {}, S2 = {}, S3 = {}\nS - S1/2 - S2/2 - S3 = {}",
                c.x, c.gamma, c.thresholds.z1, c.thresholds.z2, c.candidates, c.s, c.s1, c.s2, c.s3, c.weighted
            );
            if let Some(w) = &check {
                text.push_str(&format!("\nweight inequality: {} checked, {} witnesses", w.checked, w.witnesses.len()));
            }
            let row = vec![
                c.x.to_string(),
                num(c.gamma),
                c.thresholds.z1.to_string(),
                c.thresholds.z2.to_string(),
                c.candidates.to_string(),
                c.s.to_string(),
                c.s1.to_string(),
                c.s2.to_string(),
                c.s3.to_string(),
                num(c.weighted),
            ];
            let failed = check.as_ref().is_some_and(|w| !w.holds);
            let report = Report::new("chen-weights", json!({"x": a.x, "gamma": a.gamma}), &ChenOut { counts: c, weight_check: check })
                .csv(vec!["x", "gamma", "z1", "z2", "candidates", "S", "S1", "S2", "S3", "weighted"], vec![row])
                .text(text);
            if failed {
                Err(Failure::Checks(report))
            } else {
                Ok(report)
            }
        }
        Command::Expsum(a) => {
            let pair = named_pair(&a.pair)?;
            let q = ExpSumQuery { x: a.x, x1: a.x1, d: a.d, l: a.l, h: a.h, gamma: a.gamma };
            let r = exp_sum_progression(q, &pair, a.term_cap)?;
            Ok(Report::new("expsum", json!({"pair": a.pair}), &r)
                .csv(
                    vec!["x", "x1", "d", "l", "h", "gamma", "terms", "re", "im", "magnitude", "kappa", "ell", "lemma_bound", "ratio"],
                    vec![vec![
                        a.x.to_string(),
                        a.x1.to_string(),
                        a.d.to_string(),
                        a.l.to_string(),
                        a.h.to_string(),
                        num(a.gamma),
                        r.terms.to_string(),
                        num(r.re),
                        num(r.im),
                        num(r.magnitude),
                        num(r.pair_kappa),
                        num(r.pair_ell),
                        num(r.lemma_bound),
                        num(r.ratio),
                    ]],
                )
                .text(format!(
                    "{} terms: |sum| = {}\nbound ({}) = {}, ratio {}",
                    r.terms, r.magnitude, pair, r.lemma_bound, r.ratio
                )))
        }
        Command::Ndiag(a) => {
            let r = count_near_diagonal_with(a.j, a.n, a.alpha, a.delta, a.pair_cap, exec)?;
            Ok(Report::new("ndiag", json!({}), &r)
                .csv(
                    vec!["J", "N", "alpha", "delta", "count", "envelope"],
                    vec![vec![a.j.to_string(), a.n.to_string(), num(a.alpha), num(a.delta), r.count.to_string(), num(r.envelope)]],
                )
                .text(format!("N(delta) = {} (envelope {})", r.count, r.envelope)))
        }
        Command::IdentityCheck(a) => {
            let to = a.to.unwrap_or(a.n);
            if a.n < 2 || to < a.n {
                return Err(Failure::Usage(format!("need 2 <= n <= to, got n={} to={to}", a.n)));
            }
            let spf = SpfTable::load_or_build(&cfg.cache_dir, to.max(1000))?;
            let cap = a.cap.unwrap_or_else(|| cube_root_ceil(to));
            let results: Vec<HeathBrownCheck> =
                exec.map((a.n..=to).collect(), |n| heath_brown_check(n, cap, &spf)).into_iter().collect::<Result<_, _>>()?;
            let failures = results.iter().filter(|r| !r.passes()).count();
            let worst = results.iter().map(|r| r.residual).fold(0.0, f64::max);
            #[derive(Serialize)]
            struct IdOut {
                from: u64,
                to: u64,
                cap: u64,
                checked: usize,
                failures: usize,
                max_residual: f64,
                checks: Vec<HeathBrownCheck>,
            }
            let rows = results
                .iter()
                .map(|r| vec![r.n.to_string(), r.cap.to_string(), num(r.lambda), num(r.identity), num(r.residual), r.passes().to_string()])
                .collect();
            let out = IdOut { from: a.n, to, cap, checked: results.len(), failures, max_residual: worst, checks: results };
            let report = Report::new("identity-check", json!({"n": a.n, "to": to, "cap": cap}), &out)
                .csv(vec!["n", "cap", "lambda", "identity", "residual", "passes"], rows)
                .text(format!("{} values of n checked, {failures} failures, max residual {worst:e}", out.checked));
            if failures > 0 {
                Err(Failure::Checks(report))
            } else {
                Ok(report)
            }
        }
        Command::TwinConstant(a) => {
            let r = twin_singular_series_with(a.bound, exec)?;
            Ok(Report::new("twin-constant", json!({"bound": a.bound}), &r)
                .csv(
                    vec!["prime_bound", "value", "tail_bound", "lower"],
                    vec![vec![a.bound.to_string(), num(r.value), num(r.tail_bound), num(r.lower())]],
                )
                .text(format!("product over 2 < p <= {}: {} (limit in [{}, {}])", a.bound, r.value, r.lower(), r.value)))
        }
        Command::VerifyAll(a) => {
            if let Some(only) = &a.only {
                let known = criterion_ids();
                if let Some(bad) = only.iter().find(|o| !known.contains(&o.as_str())) {
                    return Err(Failure::Usage(format!("unknown criterion {bad:?}; known: {}", known.join(", "))));
                }
            }
            let vc = VerifyConfig { quick: a.quick, exec, only: a.only.clone(), enforce_budgets: !a.no_budgets, ..Default::default() };
            let s = verify_all(&vc);
            let text = s
                .outcomes
                .iter()
                .map(|o| format!("{} {:<24} {:>8.2}s  {}", if o.passed { "PASS" } else { "FAIL" }, o.id, o.seconds, o.detail))
                .collect::<Vec<_>>()
                .join("\n");
            let rows = s.outcomes.iter().map(|o| vec![o.id.clone(), o.passed.to_string(), o.detail.clone()]).collect();
            let report = Report::new("verify-all", json!({"quick": a.quick, "only": a.only}), &s)
                .csv(vec!["criterion", "passed", "detail"], rows)
                .text(text);
            if s.all_passed {
                Ok(report)
            } else {
                Err(Failure::Checks(report))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let cfg = match load_config(&cli) {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("pschen: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    let start = Instant::now();
    let outcome = run(&cli, &cfg, exec);
    let runtime = start.elapsed().as_secs_f64();
    let mut stdout = std::io::stdout().lock();
    let (report, code) = match outcome {
        Ok(r) => (r, 0),
        Err(Failure::Checks(r)) => (r, EXIT_FAILURE),
        Err(Failure::Core(e)) => {
            eprintln!("pschen: {e}");
            return ExitCode::from(exit_code(&e));
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("pschen: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    if let Err(e) = emit(&report, cfg.format, runtime, &mut stdout) {
        eprintln!("pschen: writing output: {e}");
        return ExitCode::from(EXIT_FAILURE);
    }
    ExitCode::from(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::Domain("x".into())), 2);
        assert_eq!(exit_code(&Error::Precondition("x".into())), 2);
        assert_eq!(exit_code(&Error::Cost { requested: 2, cap: 1 }), 2);
        assert_eq!(exit_code(&Error::PrecisionExhausted { base: 2, exponent: 0.5, bits: 64 }), 3);
        assert_eq!(exit_code(&Error::Convergence { value: 0.0, error: 1.0, panels: 4 }), 1);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
