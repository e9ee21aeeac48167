use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use kronsnp::horn::lr_consistent_triples;
use kronsnp::kronecker::monomial_support;
use kronsnp::oracle::kron_product;
use kronsnp::plethysm::{plethysm, plethysm_default_vars, plethysm_max_monomial};
use kronsnp::polytopes::{build_script_P, find_integer_point, lp_feasible, simplex_point};
use kronsnp::rosas::{rosas_kron_tworow_pair, rosas_kron_tworow_triple};
use kronsnp::snp::snp_check_kron;
use kronsnp::verify::{run_suite, VerifyOptions};
use kronsnp::{Composition, Error, Partition};

const EXIT_NEGATIVE: u8 = 10;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(name = "kronsnp", version, about = "Kronecker coefficients, Horn inequalities and Newton polytopes")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for parallel sweeps.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Schur expansion of s_λ ∗ s_μ.
    Kron {
        lambda: String,
        mu: String,
        /// Print the monomial support in this many variables instead.
        #[arg(long)]
        monomials: Option<usize>,
    },
    /// Saturated Newton polytope check for s_λ ∗ s_μ; exit 10 when not saturated.
    Snp {
        lambda: String,
        mu: String,
        #[arg(long = "vars", short = 'k')]
        vars: usize,
    },
    /// LR-consistent triples over [r].
    Horn { r: usize },
    /// The three-variable polytope for two-row μ, three-row ν and exponent a.
    Polytope {
        mu: String,
        nu: String,
        a: String,
        /// Print the system in LP format.
        #[arg(long)]
        lp: bool,
    },
    /// Two-row closed forms for g(β,γ,α).
    Rosas { beta: String, gamma: String, alpha: String },
    /// s_λ[s_μ] by monomial substitution.
    Plethysm {
        lambda: String,
        mu: String,
        #[arg(long = "vars")]
        vars: Option<usize>,
        /// Print the largest-monomial exponent instead.
        #[arg(long)]
        max_monomial: bool,
    },
    /// Run a verification suite.
    Verify {
        suite: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<u32>,
        /// Triple table used by horn-appendix instead of the shipped one.
        #[arg(long)]
        fixture: Option<String>,
        /// Wall-clock budget in seconds.
        #[arg(long)]
        time_limit: Option<u64>,
    },
}

struct Outcome {
    text: String,
    json: Value,
    negative: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, negative: false }
    }
}

fn partition(s: &str) -> kronsnp::Result<Partition> {
    s.parse()
}

fn composition(s: &str) -> kronsnp::Result<Composition> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Composition(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
        .collect::<kronsnp::Result<Vec<_>>>()
        .map(Composition)
}

fn run(cmd: Cmd) -> kronsnp::Result<Outcome> {
    match cmd {
        Cmd::Kron { lambda, mu, monomials } => {
            let (l, m) = (partition(&lambda)?, partition(&mu)?);
            match monomials {
                Some(k) => {
                    let s = monomial_support(&l, &m, k)?;
                    let text = s.sorted_points().map(|p| format!("{p:?}")).collect::<Vec<_>>().join("\n");
                    Ok(Outcome::ok(text, s.to_json()))
                }
                None => {
                    let e = kron_product(&l, &m)?;
                    Ok(Outcome::ok(e.to_string(), e.to_json()))
                }
            }
        }
        Cmd::Snp { lambda, mu, vars } => {
            let r = snp_check_kron(&partition(&lambda)?, &partition(&mu)?, vars)?;
            let mut text = if r.saturated { "saturated".to_string() } else { "not saturated".to_string() };
            for p in &r.missing {
                text.push_str(&format!("\nmissing {p:?}"));
            }
            Ok(Outcome { text, json: r.to_json(), negative: !r.saturated })
        }
        Cmd::Horn { r } => {
            let t = lr_consistent_triples(r)?;
            let text = t.iter().map(|x| format!("{:?} {:?} {:?}", x.i, x.j, x.k)).collect::<Vec<_>>().join("\n");
            let json = json!({"r": r, "count": t.len(), "triples": t.iter().map(|x| x.to_json()).collect::<Vec<_>>()});
            Ok(Outcome::ok(text, json))
        }
        Cmd::Polytope { mu, nu, a, lp } => {
            let sys = build_script_P(&partition(&mu)?, &partition(&nu)?, &composition(&a)?)?;
            let feasible = lp_feasible(&sys);
            let point = find_integer_point(&sys)?;
            let vertex = simplex_point(&sys);
            let mut text = if lp {
                sys.to_lp()
            } else {
                format!("feasible {feasible}")
            };
            if !lp {
                if let Some(p) = &point {
                    text.push_str(&format!("\ninteger point {}", p.to_json()));
                }
            }
            let json = json!({
                "system": sys.to_json(),
                "feasible": feasible,
                "integer_point": point.as_ref().map(|p| p.to_json()),
                "vertex": vertex.as_ref().map(|p| p.to_json()),
            });
            Ok(Outcome { text, json, negative: !feasible })
        }
        Cmd::Rosas { beta, gamma, alpha } => {
            let (b, g, a) = (partition(&beta)?, partition(&gamma)?, partition(&alpha)?);
            let (value, formula) = if a.len() <= 2 && b.len() <= 2 && g.len() <= 2 {
                (rosas_kron_tworow_triple(&a, &b, &g)?, "triple")
            } else if b.part(2) >= g.part(2) {
                (rosas_kron_tworow_pair(&b, &g, &a)?, "pair")
            } else {
                (rosas_kron_tworow_pair(&g, &b, &a)?, "pair")
            };
            Ok(Outcome::ok(value.to_string(), json!({"g": value.to_string(), "formula": formula})))
        }
        Cmd::Plethysm { lambda, mu, vars, max_monomial } => {
            let (l, m) = (partition(&lambda)?, partition(&mu)?);
            if max_monomial {
                let v = plethysm_max_monomial(&l, &m)?;
                return Ok(Outcome::ok(format!("{:?}", v.0), json!(v.0)));
            }
            let r = plethysm(&l, &m, vars.unwrap_or_else(|| plethysm_default_vars(&l, &m)))?;
            let json = json!({"nvars": r.nvars, "truncated": r.truncated, "expansion": r.expansion.to_json()});
            Ok(Outcome::ok(r.expansion.to_string(), json))
        }
        Cmd::Verify { suite, n, k, p, fixture, time_limit } => {
            let opts = VerifyOptions { n, k, p, fixture, time_limit: time_limit.map(Duration::from_secs) };
            let r = run_suite(&suite, &opts)?;
            let mut lines = Vec::new();
            for c in &r.checks {
                lines.push(format!("{} {}", if c.passed { "pass" } else { "FAIL" }, c.name));
            }
            lines.push(format!("{}: {}", r.suite, if r.passed { "pass" } else { "FAIL" }));
            Ok(Outcome { text: lines.join("\n"), json: r.to_json(), negative: !r.passed })
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::InvalidPartition(_) => 2,
        Error::SizeMismatch(_) | Error::Precondition(_) | Error::Fixture(_) => 3,
        Error::BudgetExceeded(_) => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match run(cli.cmd) {
        Ok(out) => {
            match cli.format {
                Format::Text => println!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
            }
            if out.negative {
                ExitCode::from(EXIT_NEGATIVE)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
