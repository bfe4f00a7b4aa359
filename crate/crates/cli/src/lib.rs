//! Command-line front end: expression parsing, subcommand dispatch and
//! report rendering. [`run`] never prints; it returns the exit code and
//! the text destined for stdout and stderr.

pub mod expr;
pub mod sample;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::json;

use poisson_bialg::closedforms::{
    verify_theorem_with, T42Params, T43Params, T45Params, T46Params, TheoremId, TheoremParams,
    VerificationReport, VerifyOptions,
};
use poisson_bialg::coboundary::{cybe_defect, RElement};
use poisson_bialg::dual::{
    delta_closed_form, delta_mu, rational_series_coeffs, recurrence_from_rational,
    satisfies_recurrence, translate_space_dim, BruteForceOracle, ExponentBox, TranslateAction,
};
use poisson_bialg::lincomb::{DUAL_VARS, PRIMAL_VARS};
use poisson_bialg::monomial::Monomial;
use poisson_bialg::rational::Rational;
use poisson_bialg::PoissonBracket;

use crate::expr::{parse_functional, parse_poly, parse_rational_literal, ExprError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "poisson-bialg",
    version,
    about = "Coboundary Lie bialgebras on F[x,y] and their dual brackets"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized parameter sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Report elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a closed-form bracket against the brute-force oracle.
    Verify(VerifyArgs),
    /// Classical Yang-Baxter defect of r = A (x) B - B (x) A.
    Cybe {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
    },
    /// Cobracket of a functional, computed two ways.
    Delta {
        #[arg(long)]
        functional: String,
    },
    /// Closed-form dual bracket of two functionals.
    Bracket {
        theorem: TheoremId,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Brute-force dual bracket for an arbitrary r = A (x) B - B (x) A.
    Oracle {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        /// Scan window side; defaults to the support bound plus margin.
        #[arg(long)]
        window: Option<i64>,
    },
    /// Dimension of the span of translates of a functional.
    TranslateDim {
        #[arg(long)]
        functional: String,
        #[arg(long, value_enum)]
        action: ActionArg,
        #[arg(long, default_value_t = 8)]
        window: i64,
    },
    /// Power series of g/h and the recurrence it satisfies.
    Series {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        /// Highest coefficient index.
        #[arg(short = 'N', default_value_t = 10)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ActionArg {
    Product,
    Poisson,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    T42,
    T43,
    T45,
    T46,
    All,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: VerifyTarget,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, default_value_t = 8)]
    pub window: i64,
    /// Verify this many random parameter sets (drawn with --seed) instead.
    #[arg(long)]
    pub random: Option<usize>,
}

#[derive(Args, Debug, Default, Clone)]
pub struct ParamArgs {
    #[arg(long)]
    pub m: Option<u32>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Comma-separated a_0,...,a_n.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: Option<String>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub l: Option<u32>,
    /// The polynomial B, e.g. "x^2*y + 3*x^4*y^2".
    #[arg(long, allow_hyphen_values = true)]
    pub support: Option<String>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("{0}")]
    Usage(String),
}

impl From<poisson_bialg::closedforms::ParamError> for CliError {
    fn from(e: poisson_bialg::closedforms::ParamError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => Outcome::usage(e),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Verify(args) => verify(cli, args),
        Command::Cybe { a, b } => {
            let r = RElement::new(parse_poly(a)?, parse_poly(b)?);
            let c = cybe_defect(&r, &PoissonBracket);
            let shown = c.display_with(PRIMAL_VARS).to_string();
            let body = if json {
                json_line(
                    &json!({ "r": r.tensor().display_with(PRIMAL_VARS).to_string(), "defect": shown, "zero": c.is_zero() }),
                )
            } else {
                format!("C(r) = {shown}\n")
            };
            Ok(Outcome {
                code: if c.is_zero() { EXIT_OK } else { EXIT_FAIL },
                stdout: body,
                stderr: String::new(),
            })
        }
        Command::Delta { functional } => {
            let u = parse_functional(functional)?;
            let composed = delta_mu(&u);
            let closed = delta_closed_form(&u);
            let agree = composed == closed;
            let shown = closed.display_with(DUAL_VARS).to_string();
            let body = if json {
                json_line(&json!({ "functional": u.to_string(), "delta": shown, "agree": agree }))
            } else if agree {
                format!("{shown}\n")
            } else {
                format!(
                    "{shown}\ncomposition disagrees: {}\n",
                    composed.display_with(DUAL_VARS)
                )
            };
            Ok(Outcome {
                code: if agree { EXIT_OK } else { EXIT_FAIL },
                stdout: body,
                stderr: String::new(),
            })
        }
        Command::Bracket {
            theorem,
            params,
            u,
            v,
        } => {
            let p = build_params(*theorem, params)?;
            let (u, v) = (parse_functional(u)?, parse_functional(v)?);
            let w = p.bracket_lin(&u, &v);
            let body = if json {
                json_line(&json!({
                    "theorem": theorem.name(),
                    "params": p.to_json(),
                    "u": u.to_string(),
                    "v": v.to_string(),
                    "bracket": w.to_string(),
                }))
            } else {
                format!("{w}\n")
            };
            Ok(Outcome::ok(body))
        }
        Command::Oracle { a, b, u, v, window } => {
            let r = RElement::new(parse_poly(a)?, parse_poly(b)?);
            let (u, v) = (parse_functional(u)?, parse_functional(v)?);
            let window = match window {
                Some(w) if *w < 0 => {
                    return Err(CliError::Usage("window must be nonnegative".into()))
                }
                Some(w) => ExponentBox::square(*w),
                None => ExponentBox::for_bracket(&u, &v, &r),
            };
            match BruteForceOracle::new(&r, window).bracket(&u, &v) {
                Ok(w) => {
                    let body = if json {
                        json_line(&json!({
                            "u": u.to_string(),
                            "v": v.to_string(),
                            "window": [window.max_i, window.max_j],
                            "bracket": w.to_string(),
                        }))
                    } else {
                        format!("{w}\n")
                    };
                    Ok(Outcome::ok(body))
                }
                Err(e) => Ok(Outcome {
                    code: EXIT_FAIL,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }),
            }
        }
        Command::TranslateDim {
            functional,
            action,
            window,
        } => {
            if *window < 0 {
                return Err(CliError::Usage("window must be nonnegative".into()));
            }
            let u = parse_functional(functional)?;
            let act = match action {
                ActionArg::Product => TranslateAction::Product,
                ActionArg::Poisson => TranslateAction::Poisson,
            };
            let dim = translate_space_dim(&u, act, ExponentBox::square(*window));
            let body = if json {
                json_line(&json!({
                    "functional": u.to_string(),
                    "action": format!("{action:?}").to_lowercase(),
                    "window": [window, window],
                    "dim": dim,
                }))
            } else {
                format!("{dim}\n")
            };
            Ok(Outcome::ok(body))
        }
        Command::Series { g, h, n } => {
            let (g, h) = (parse_poly(g)?, parse_poly(h)?);
            let seq =
                rational_series_coeffs(&g, &h, *n).map_err(|e| CliError::Usage(e.to_string()))?;
            let rec =
                recurrence_from_rational(&g, &h).map_err(|e| CliError::Usage(e.to_string()))?;
            let holds = satisfies_recurrence(&seq, &rec);
            let strs = |v: &[Rational]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
            let body = if json {
                json_line(
                    &json!({ "coeffs": strs(seq.values()), "recurrence": strs(&rec), "recurrence_holds": holds }),
                )
            } else {
                format!(
                    "coeffs: {}\nrecurrence: {}\n",
                    strs(seq.values()).join(", "),
                    strs(&rec).join(", ")
                )
            };
            Ok(Outcome {
                code: if holds { EXIT_OK } else { EXIT_FAIL },
                stdout: body,
                stderr: String::new(),
            })
        }
    }
}

fn json_line(v: &serde_json::Value) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("json value serializes")
    )
}

fn verify(cli: &Cli, args: &VerifyArgs) -> Result<Outcome, CliError> {
    if args.window < 0 {
        return Err(CliError::Usage("window must be nonnegative".into()));
    }
    let ids: Vec<TheoremId> = match args.target {
        VerifyTarget::T42 => vec![TheoremId::T42],
        VerifyTarget::T43 => vec![TheoremId::T43],
        VerifyTarget::T45 => vec![TheoremId::T45],
        VerifyTarget::T46 => vec![TheoremId::T46],
        VerifyTarget::All => TheoremId::ALL.to_vec(),
    };
    let mut jobs = Vec::new();
    match args.random {
        Some(count) => {
            let mut rng = StdRng::seed_from_u64(cli.seed);
            for id in &ids {
                for _ in 0..count {
                    jobs.push(sample::random_params(*id, &mut rng));
                }
            }
        }
        None => {
            for id in &ids {
                jobs.push(build_params(*id, &args.params)?);
            }
        }
    }
    let opts = VerifyOptions {
        window: args.window,
        jacobi_window: args.window,
        no_timing: cli.no_timing,
    };
    let mut reports: Vec<VerificationReport> = Vec::new();
    for p in &jobs {
        match verify_theorem_with(p, &opts) {
            Ok(r) => reports.push(r),
            Err(e) => {
                return Ok(Outcome {
                    code: EXIT_FAIL,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                })
            }
        }
    }
    let code = if reports.iter().all(|r| r.passed()) {
        EXIT_OK
    } else {
        EXIT_FAIL
    };
    let stdout = match cli.format {
        Format::Json if reports.len() == 1 => format!("{}\n", reports[0].to_json()),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&reports).expect("reports serialize")
        ),
        Format::Text => reports
            .iter()
            .map(|r| r.to_text())
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

/// Builds parameters for `id` from flags, falling back to a default
/// instance for anything not given.
fn build_params(id: TheoremId, a: &ParamArgs) -> Result<TheoremParams, CliError> {
    Ok(match id {
        TheoremId::T42 => TheoremParams::T42(T42Params::new(a.m.unwrap_or(2), a.n.unwrap_or(3))?),
        TheoremId::T43 => {
            let coeffs = match &a.coeffs {
                Some(s) => parse_coeffs(s)?,
                None => vec![
                    Rational::from_integer(1.into()),
                    Rational::from_integer(2.into()),
                ],
            };
            TheoremParams::T43(T43Params::new(a.m.unwrap_or(1), coeffs)?)
        }
        TheoremId::T45 => {
            let (k, l) = (a.k.unwrap_or(2), a.l.unwrap_or(1));
            let b = parse_poly(a.support.as_deref().unwrap_or("x^2*y + x^4*y^2"))?;
            let support: Vec<(Monomial, Rational)> =
                b.iter().map(|(m, c)| (*m, c.clone())).collect();
            TheoremParams::T45(T45Params::new(k, l, &support)?)
        }
        TheoremId::T46 => TheoremParams::T46(T46Params::default()),
    })
}

fn parse_coeffs(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',')
        .map(|c| {
            parse_rational_literal(c.trim())
                .ok_or_else(|| CliError::Usage(format!("bad coefficient `{c}`")))
        })
        .collect()
}
