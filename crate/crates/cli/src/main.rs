//! `howe`: command-line front end for the howe-core library.
//!
//! Exit status is 0 on success, 1 on a domain error (inadmissible label,
//! malformed shape, failed check) and 2 on a usage error.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use howe_core::characters::{char_w, fock_lhs, fock_rhs, CharacterContext};
use howe_core::decomp::{branch, tensor_decompose, DecompositionTable};
use howe_core::hookschur::{cauchy_dual_lhs, cauchy_dual_rhs, cauchy_lhs, cauchy_rhs, hook_schur_skew};
use howe_core::oscillator::certify;
use howe_core::symfunc::{lr_coefficient, lr_coefficient_generalized, schur, schur_laurent};
use howe_core::{Context, Error, GeneralizedPartition, GradedSeries, Partition, VariableSet};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "howe",
    version,
    about = "Characters, branching rules and highest weight vectors for gl_d × gl(m+p|n+q) Howe duality"
)]
struct Cli {
    /// Cap on worker threads used by the library.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug, Clone, Copy)]
struct Dims {
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 0)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    p: usize,
    #[arg(long, default_value_t = 0)]
    q: usize,
    #[arg(long, default_value_t = 0)]
    d: usize,
}

impl Dims {
    fn context(&self) -> Context {
        Context::new(self.m, self.n, self.p, self.q, self.d)
    }
}

#[derive(Args, Debug)]
struct Out {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood-Richardson coefficient C^λ_{μν}.
    Lr {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[command(flatten)]
        out: Out,
    },
    /// (Laurent) Schur polynomial in k variables.
    Schur {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Number of variables; defaults to the length of λ.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        out: Out,
    },
    /// Hook Schur function HS_λ(x; η) in m even and n odd variables.
    Hookschur {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 0)]
        m: usize,
        #[arg(long, default_value_t = 0)]
        n: usize,
        #[command(flatten)]
        out: Out,
    },
    /// Truncated character of the module labelled by λ.
    Char {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 6)]
        trunc: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Restriction to gl_{p|q} × gl_{m|n}, up to a size bound.
    Branch {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value_t = 4)]
        bound: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Tensor product decomposition, with shifts up to dmax.
    Tensor {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long, default_value_t = 4)]
        dmax: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Certify the explicit highest weight vector for λ.
    Verify {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        out: Out,
    },
    /// Check the Cauchy, dual Cauchy and Fock character identities.
    Oracle {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, default_value_t = 4)]
        trunc: u32,
        #[command(flatten)]
        out: Out,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn shape(s: &str) -> Result<GeneralizedPartition, Failure> {
    Ok(GeneralizedPartition::from_str(s)?)
}

fn partition(s: &str) -> Result<Partition, Failure> {
    Ok(Partition::from_str(s)?)
}

fn render_json(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

fn series(s: &GradedSeries, out: &Out) -> String {
    match out.format {
        Format::Text => s.to_string(),
        Format::Json => render_json(&s.to_json()),
    }
}

fn table(t: &DecompositionTable, out: &Out) -> String {
    match out.format {
        Format::Json => render_json(&t.to_json()),
        Format::Text => {
            let mut lines = vec![format!(
                "bound {} ({})",
                t.bound,
                if t.complete { "complete" } else { "truncated" }
            )];
            lines.extend(t.entries.iter().map(|(l, m)| format!("{m}  {l}")));
            lines.join("\n")
        }
    }
}

fn weight_text(w: Option<&[i64]>) -> String {
    match w {
        Some(w) => format!("({})", w.iter().map(i64::to_string).collect::<Vec<_>>().join(",")),
        None => "none".into(),
    }
}

fn lr(lambda: &str, mu: &str, nu: &str, out: &Out) -> Outcome {
    let (l, m, n) = (shape(lambda)?, shape(mu)?, shape(nu)?);
    let c = if l.is_partition() && m.is_partition() && n.is_partition() {
        lr_coefficient(&l.to_partition()?, &m.to_partition()?, &n.to_partition()?)
    } else {
        lr_coefficient_generalized(&l, &m, &n)?
    };
    Ok(match out.format {
        Format::Text => c.to_string(),
        Format::Json => render_json(&json!({
            "lambda": l.parts(), "mu": m.parts(), "nu": n.parts(), "value": c.to_string(),
        })),
    })
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Lr { lambda, mu, nu, out } => lr(&lambda, &mu, &nu, &out),
        Command::Schur { lambda, k, out } => {
            let lam = shape(&lambda)?;
            let k = k.unwrap_or(lam.len());
            let x = VariableSet::new("x", k);
            let s = if lam.is_partition() {
                schur(&lam.to_partition()?, &x)
            } else if lam.len() == k {
                schur_laurent(&lam, &x)?
            } else {
                return Err(Failure::Domain(format!(
                    "Laurent Schur polynomial of {lam} needs k = {}",
                    lam.len()
                )));
            };
            Ok(series(&s, &out))
        }
        Command::Hookschur { lambda, m, n, out } => {
            let lam = partition(&lambda)?;
            let s = hook_schur_skew(&lam, &VariableSet::new("x", m), &VariableSet::new("eta", n));
            Ok(series(&s, &out))
        }
        Command::Char {
            dims,
            lambda,
            trunc,
            out,
        } => {
            let cc = CharacterContext::new(dims.context(), trunc)?;
            Ok(series(&char_w(&shape(&lambda)?, &cc)?, &out))
        }
        Command::Branch {
            dims,
            lambda,
            bound,
            out,
        } => Ok(table(&branch(&shape(&lambda)?, &dims.context(), bound)?, &out)),
        Command::Tensor {
            dims,
            mu,
            nu,
            dmax,
            out,
        } => Ok(table(
            &tensor_decompose(&shape(&mu)?, &shape(&nu)?, &dims.context(), dmax)?,
            &out,
        )),
        Command::Verify { dims, lambda, out } => {
            let cert = certify(&shape(&lambda)?, &dims.context())?;
            let text = match out.format {
                Format::Json => render_json(&cert.to_json()),
                Format::Text => format!(
                    "lambda {}\nnonzero {}\nannihilated_by_all_raising {}\ngl_d_weight {}\nsuper_weight {}\nexpected_super_weight {}\nmatches_Lambda {}",
                    cert.lambda,
                    cert.nonzero,
                    cert.annihilated_by_all_raising,
                    weight_text(cert.gl_d_weight.as_deref()),
                    weight_text(cert.super_weight.as_deref()),
                    weight_text(Some(&cert.expected_super_weight)),
                    cert.matches_lambda
                ),
            };
            if cert.passed() {
                Ok(text)
            } else {
                println!("{text}");
                Err(Failure::Domain(format!("certification failed for λ={}", cert.lambda)))
            }
        }
        Command::Oracle { dims, trunc, out } => oracle(dims, trunc, &out),
    }
}

fn oracle(dims: Dims, trunc: u32, out: &Out) -> Outcome {
    let check = |name: &str, lhs: &GradedSeries, rhs: &GradedSeries| -> Value {
        let diff = lhs
            .first_difference(rhs)
            .map(|(e, a, b)| json!({"exponent": e, "lhs": a.to_string(), "rhs": b.to_string()}));
        json!({"identity": name, "pass": diff.is_none(), "first_difference": diff})
    };
    let (m, n, p, q, d) = (dims.m, dims.n, dims.p, dims.q, dims.d);
    let mut reports = vec![
        check("cauchy", &cauchy_lhs(m, n, d, trunc), &cauchy_rhs(m, n, d, trunc)),
        check(
            "dual_cauchy",
            &cauchy_dual_lhs(p, q, d, trunc),
            &cauchy_dual_rhs(p, q, d, trunc),
        ),
    ];
    let cc = CharacterContext::new(dims.context(), trunc)?;
    reports.push(check("fock", &fock_lhs(&cc)?, &fock_rhs(&cc)?));
    let all = reports.iter().all(|r| r["pass"] == Value::Bool(true));
    let text = match out.format {
        Format::Json => render_json(&Value::Array(reports)),
        Format::Text => reports
            .iter()
            .map(|r| {
                let name = r["identity"].as_str().unwrap_or_default();
                if r["pass"] == Value::Bool(true) {
                    format!("{name}: pass")
                } else {
                    format!("{name}: FAIL at {}", r["first_difference"])
                }
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    if all {
        Ok(text)
    } else {
        println!("{text}");
        Err(Failure::Domain(format!(
            "identity check failed at {} with N={trunc}",
            dims.context()
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(text) => {
            println!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
