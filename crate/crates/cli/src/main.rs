use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use gammakit::clifford::{canonicalize, parse};
use gammakit::gamma::{build_representation, Representation};
use gammakit::lorentz::{self, group_scan, ComponentLabel};
use gammakit::planewave::{make_state, Family};
use gammakit::report::{emit, run_suite, Format, Suite};
use gammakit::residual::evaluate_readings;
use gammakit::scalar::{parse_rational, Scalar};
use gammakit::{Error, Rational};

#[derive(Parser)]
#[command(name = "gammakit", version, about = "Exact Dirac-algebra checks")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, env = "GAMMAKIT_FORMAT", default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Canonical Clifford-basis form of a gamma expression.
    Canon {
        expr: String,
        #[arg(long, default_value = "dirac")]
        rep: Representation,
        /// Also print the 4x4 matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Plane-wave state of a family at momentum p and mass m.
    State(StateArgs),
    /// Which sign-variant Dirac equations a state satisfies.
    ClassifyState(StateArgs),
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "dirac")]
        rep: Representation,
    },
    /// Component of a Lorentz matrix read from a JSON file (16 entries, row-major).
    ClassifyLorentz {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Which unions of Lorentz components form a group.
    GroupScan,
}

#[derive(clap::Args)]
struct StateArgs {
    #[arg(long)]
    family: Family,
    /// Comma separated, e.g. 0,0,3/4
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    #[arg(long, allow_hyphen_values = true)]
    m: String,
    /// Use double precision even when exact values are available.
    #[arg(long)]
    float: bool,
}

enum Momentum {
    Exact(Box<([Rational; 3], Rational)>),
    Float([f64; 3], f64),
}

fn parse_momentum(args: &StateArgs) -> anyhow::Result<Momentum> {
    let parts: Vec<&str> = args.p.split(',').collect();
    if parts.len() != 3 {
        bail!(
            "--p needs three comma separated components, got `{}`",
            args.p
        );
    }
    let exact: Option<Vec<Rational>> = parts.iter().map(|s| parse_rational(s)).collect();
    match (exact, parse_rational(&args.m)) {
        (Some(p), Some(m)) if !args.float => Ok(Momentum::Exact(Box::new((
            [p[0].clone(), p[1].clone(), p[2].clone()],
            m,
        )))),
        _ => {
            let f = |s: &str| -> anyhow::Result<f64> {
                if let Some(r) = parse_rational(s) {
                    return Ok(r.to_f64());
                }
                s.trim()
                    .parse::<f64>()
                    .with_context(|| format!("`{s}` is not a number"))
            };
            Ok(Momentum::Float(
                [f(parts[0])?, f(parts[1])?, f(parts[2])?],
                f(&args.m)?,
            ))
        }
    }
}

/// Runs `exact`, falling back to floats when the energy is irrational.
fn with_state<R>(
    args: &StateArgs,
    exact: impl Fn(gammakit::StateQ) -> R,
    float: impl Fn(gammakit::StateF) -> R,
) -> anyhow::Result<R> {
    let (p, m) = match parse_momentum(args)? {
        Momentum::Exact(exact_pm) => {
            let (p, m) = *exact_pm;
            match make_state(args.family, p.clone(), m.clone()) {
                Ok(s) => return Ok(exact(s)),
                Err(Error::OffShellUnrepresentable(_)) => (p.map(|x| x.to_f64()), m.to_f64()),
                Err(e) => return Err(e.into()),
            }
        }
        Momentum::Float(p, m) => (p, m),
    };
    Ok(float(make_state(args.family, p, m)?))
}

fn readings_json<T: Scalar>(s: &gammakit::planewave::PlaneWaveState<T>) -> Vec<Value> {
    evaluate_readings(s, 1e-12)
        .iter()
        .filter(|c| c.satisfied)
        .map(|c| c.to_json())
        .collect()
}

fn read_lorentz(path: &PathBuf) -> anyhow::Result<ComponentLabel> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let v: Value = serde_json::from_str(&text).context("matrix file is not JSON")?;
    let items = v
        .as_array()
        .context("expected a JSON array of 16 entries")?;
    if items.len() != 16 {
        bail!("expected 16 entries, got {}", items.len());
    }
    let exact: Option<Vec<Rational>> = items
        .iter()
        .map(|x| match x {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n.as_i64().map(|i| Rational::from_ratio(i, 1)),
            _ => None,
        })
        .collect();
    let label = match exact {
        Some(e) => lorentz::classify(
            &std::array::from_fn(|r| std::array::from_fn(|c| e[4 * r + c].clone())),
            0.0,
        )?,
        None => {
            let f: Vec<f64> = items
                .iter()
                .map(|x| match x {
                    Value::String(s) => parse_rational(s).map(|r| r.to_f64()),
                    _ => x.as_f64(),
                })
                .collect::<Option<_>>()
                .context("entries must be numbers or \"p/q\" strings")?;
            lorentz::classify(
                &std::array::from_fn(|r| std::array::from_fn(|c| f[4 * r + c])),
                lorentz::FLOAT_TOL,
            )?
        }
    };
    Ok(label)
}

fn print_json(v: &Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    );
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let markdown = cli.format == Format::Markdown;
    match cli.command {
        Command::Canon { expr, rep, matrix } => {
            let e = parse::<Rational>(&expr).map_err(Error::from)?;
            let f = canonicalize(&e);
            if markdown {
                println!("{f}");
                if matrix {
                    println!("\n{}", f.to_matrix(&build_representation(rep)));
                }
            } else {
                let terms: Vec<Value> = f
                    .terms()
                    .iter()
                    .map(|(s, c)| json!({"monomial": s.monomial_label(), "coefficient": gammakit::matrix::format_complex(c)}))
                    .collect();
                let mut out = json!({"input": expr, "canonical": f.to_string(), "terms": terms});
                if matrix {
                    out["matrix"] = f.to_matrix(&build_representation(rep)).to_json();
                }
                print_json(&out);
            }
            Ok(true)
        }
        Command::State(args) => {
            print_json(&with_state(&args, |s| s.to_json(), |s| s.to_json())?);
            Ok(true)
        }
        Command::ClassifyState(args) => {
            for line in with_state(&args, |s| readings_json(&s), |s| readings_json(&s))? {
                println!("{line}");
            }
            Ok(true)
        }
        Command::Verify { suite, seed, rep } => {
            let report = run_suite(suite, seed, rep);
            print!("{}", emit(&report, cli.format));
            Ok(report.all_passed())
        }
        Command::ClassifyLorentz { matrix } => {
            let label = read_lorentz(&matrix)?;
            if markdown {
                println!("{label}");
            } else {
                print_json(&json!({
                    "component": label.name(),
                    "det_sign": label.det_sign.as_i8(),
                    "time_sign": label.time_sign.as_i8(),
                }));
            }
            Ok(true)
        }
        Command::GroupScan => {
            let scan = group_scan();
            if markdown {
                println!("| components | group |\n|---|---|");
                for (set, g) in &scan {
                    println!("| {set} | {} |", if *g { "yes" } else { "no" });
                }
            } else {
                let rows: Vec<Value> = scan
                    .iter()
                    .map(|(set, g)| {
                        json!({"components": set.labels().iter().map(|l| l.name()).collect::<Vec<_>>(), "group": g})
                    })
                    .collect();
                print_json(&Value::Array(rows));
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
