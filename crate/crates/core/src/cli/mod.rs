//! Command-line front end.
//!
//! [`run`] takes an argument vector and returns the exit code and both
//! output streams, so the binary is a thin wrapper and tests can call the
//! CLI in-process. Output is a function of the arguments alone.
//!
//! Exit codes: 0 success, 2 input error, 3 cap exceeded, 4 internal
//! disagreement between two routes that must agree.

mod emit;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::apps::{self, FourierBound, PowerMeasureSpec};
use crate::epsilon::{self, EpsilonReport, Witness};
use crate::error::{Error, Result};
use crate::lattice::{ArrangementLattice, LatticeCaps};
use crate::partition::{self, Partition};
use crate::rational::ExtRational;
use crate::roots::{CartanType, RootSystem, Subsystem};

pub use emit::Payload;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "lctkit",
    version,
    about = "Exact log-canonical thresholds and integrability exponents"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest semisimple rank for lattice and pseudo-Levi enumeration.
    #[arg(long, global = true)]
    cap_rank: Option<usize>,
    /// Largest n for partition listings.
    #[arg(long, global = true)]
    cap_n: Option<u32>,
    /// Also run the intersection-lattice oracle and compare.
    #[arg(long, global = true)]
    oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// ε⋆ of the orbit with a given Jordan partition in gl_n.
    OrbitEpsilon {
        #[arg(long)]
        partition: String,
    },
    /// All orbits of gl_n with ε⋆ values and closure covers.
    OrbitPoset {
        #[arg(long)]
        n: u32,
    },
    /// Log-canonical threshold of a Weyl discriminant, relative to a Levi.
    Lct(SystemArgs),
    /// Coxeter numbers of each simple factor.
    Coxeter {
        #[arg(long = "type")]
        ty: String,
    },
    /// ε⋆ of the ℓ-th power of a Haar-random n × n unitary matrix.
    PowerMeasure {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
    },
    /// ε⋆ of L²(U_n / U_λ).
    Homogeneous {
        #[arg(long)]
        lambda: String,
    },
    /// ε⋆ of L²(K/L) as a minimum over pseudo-Levi subalgebras.
    PseudoLevi(SystemArgs),
    /// Multiplicity exponent 1 − 2ε/(1+ε).
    MultExponent {
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
    },
    /// Fourier coefficient exponent for power measures.
    FourierExponent {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
    },
    /// Convolution powers of a power measure that gain regularity.
    Convolution {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        ell: u32,
    },
    /// Lower bound min 2/h over simple factors.
    RepBound {
        #[arg(long)]
        factors: String,
    },
}

#[derive(Debug, Args)]
struct SystemArgs {
    /// Cartan type such as A2, F4 or A5,D4; "A" with --gl for gl_n.
    #[arg(long = "type")]
    ty: Option<String>,
    /// Use the gl_n realization.
    #[arg(long)]
    gl: Option<usize>,
    /// Levi: block sizes for gl_n, 1-based simple-root labels otherwise.
    #[arg(long)]
    levi: Option<String>,
    /// Exponent of the Levi discriminant.
    #[arg(long, default_value_t = 0)]
    m: u32,
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok((payload, disagreement)) => {
            let rendered = match cli.format {
                Format::Json => payload.to_json(),
                Format::Csv => payload.to_csv(),
                Format::Dot => payload.to_dot(),
            };
            match rendered {
                Ok(stdout) => match disagreement {
                    None => Outcome {
                        code: 0,
                        stdout,
                        stderr: String::new(),
                    },
                    Some(msg) => Outcome {
                        code: 4,
                        stdout,
                        stderr: format!("error: {msg}\n"),
                    },
                },
                Err(e) => failure(e),
            }
        }
        Err(e) => failure(e),
    }
}

fn failure(e: Error) -> Outcome {
    Outcome {
        code: e.exit_code(),
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    }
}

fn caps(cli: &Cli) -> LatticeCaps {
    cli.cap_rank.map(LatticeCaps::uniform).unwrap_or_default()
}

fn json_of<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable value")
}

fn report_json(report: &EpsilonReport) -> Value {
    json!({
        "value": report.value,
        "witness": report.witness,
        "formula_id": report.formula_id,
    })
}

type Executed = (Payload, Option<String>);

fn execute(cli: &Cli) -> Result<Executed> {
    match &cli.command {
        Command::OrbitEpsilon { partition } => orbit_epsilon(cli, partition),
        Command::OrbitPoset { n } => orbit_poset(cli, *n),
        Command::Lct(args) => lct(cli, args),
        Command::Coxeter { ty } => coxeter(ty),
        Command::PowerMeasure { n, ell } => {
            let spec = PowerMeasureSpec::new(*n, *ell)?;
            let value = apps::epsilon_power_measure(&spec)?;
            let result = json!({
                "j": spec.j,
                "levi_partition": spec.levi_partition,
                "ell_tilde": spec.ell_tilde,
                "epsilon": value,
            });
            Ok((
                Payload::new("power-measure", json!({"n": n, "ell": ell}), result),
                None,
            ))
        }
        Command::Homogeneous { lambda } => {
            let lambda: Partition = lambda.parse()?;
            let value = apps::epsilon_homogeneous_unitary(&lambda)?;
            let result = json!({"parts": lambda.len(), "epsilon": value});
            Ok((
                Payload::new("homogeneous", json!({"lambda": lambda}), result),
                None,
            ))
        }
        Command::PseudoLevi(args) => pseudo_levi(cli, args),
        Command::MultExponent { epsilon } => {
            let eps: ExtRational = epsilon.parse()?;
            let exponent = apps::mult_exponent(&eps)?;
            let result = json!({"exponent": exponent});
            Ok((
                Payload::new("mult-exponent", json!({"epsilon": eps}), result),
                None,
            ))
        }
        Command::FourierExponent { n, ell } => {
            let result = match apps::fourier_power_exponent(*n, *ell)? {
                FourierBound::Exponent(x) => json!({"exponent": x}),
                FourierBound::MultiplicityAtMostOne => json!({"multiplicity_bound": "1"}),
            };
            Ok((
                Payload::new("fourier-exponent", json!({"n": n, "ell": ell}), result),
                None,
            ))
        }
        Command::Convolution { n, ell } => {
            let s = apps::convolution_smoothing(*n, *ell)?;
            Ok((
                Payload::new("convolution", json!({"n": n, "ell": ell}), json_of(&s)),
                None,
            ))
        }
        Command::RepBound { factors } => {
            let list = CartanType::parse_list(factors)?;
            let report = epsilon::lower_bound_representation(&list)?;
            Ok((
                Payload::new("rep-bound", json!({"factors": list}), report_json(&report)),
                None,
            ))
        }
    }
}

fn orbit_epsilon(cli: &Cli, text: &str) -> Result<Executed> {
    let nu: Partition = text.parse()?;
    let report = epsilon::epsilon_orbit_gln(&nu)?;
    let geometric = epsilon::epsilon_orbit_geometric(&nu)?;
    if geometric != report.value {
        return Err(Error::Internal(format!(
            "orbit {nu}: prefix form {} but nilradical form {geometric}",
            report.value
        )));
    }
    let mut result = json!({
        "epsilon": report.value,
        "witness": report.witness,
        "formula_id": report.formula_id,
    });
    let mut disagreement = None;
    if cli.oracle {
        let oracle = epsilon::epsilon_orbit_oracle(&nu, caps(cli))?;
        let agree = oracle.value == report.value;
        if !agree {
            disagreement = Some(format!(
                "oracle gives {} for {nu}, closed form {}",
                oracle.value, report.value
            ));
        }
        result["oracle"] = report_json(&oracle);
        result["agree"] = json!(agree);
    }
    Ok((
        Payload::new("orbit-epsilon", json!({"partition": nu}), result),
        disagreement,
    ))
}

fn orbit_poset(cli: &Cli, n: u32) -> Result<Executed> {
    let cap = cli.cap_n.unwrap_or(partition::DEFAULT_HASSE_CAP);
    let edges = partition::dominance_hasse(n, cap)?;
    let all = Partition::enumerate(n, cap)?;
    let mut nodes = Vec::new();
    let mut rows = Vec::new();
    let mut dot = String::from("digraph orbits {\n  node [shape=box, style=rounded];\n");
    for nu in &all {
        let value = match nu.is_empty() {
            true => ExtRational::Infinite,
            false => epsilon::epsilon_orbit_gln(nu)?.value,
        };
        let shown = match &value {
            ExtRational::Infinite => "∞".to_string(),
            v => v.to_string(),
        };
        dot.push_str(&format!(
            "  {} [label={}];\n",
            emit::dot_quote(&nu.to_string()),
            emit::dot_quote(&format!("{nu}\nε={shown}"))
        ));
        rows.push(vec![nu.to_string(), value.to_string()]);
        nodes.push(json!({"partition": nu, "epsilon": value}));
    }
    for (a, b) in &edges {
        dot.push_str(&format!(
            "  {} -> {};\n",
            emit::dot_quote(&a.to_string()),
            emit::dot_quote(&b.to_string())
        ));
    }
    dot.push_str("}\n");
    let edge_json: Vec<Value> = edges
        .iter()
        .map(|(a, b)| json!({"from": a, "to": b}))
        .collect();
    let result = json!({"n": n, "nodes": nodes, "edges": edge_json});
    let mut payload = Payload::new("orbit-poset", json!({"n": n}), result);
    payload.table = Some((vec!["partition".into(), "epsilon".into()], rows));
    payload.dot = Some(dot);
    Ok((payload, None))
}

fn resolve_system(args: &SystemArgs) -> Result<RootSystem> {
    match (args.ty.as_deref().map(str::trim), args.gl) {
        (None | Some("A") | Some("a") | Some("gl"), Some(n)) => RootSystem::gl(n),
        (Some(t), Some(n)) if t.eq_ignore_ascii_case(&format!("A{}", n.saturating_sub(1))) => {
            RootSystem::gl(n)
        }
        (Some(t), Some(n)) => Err(Error::InvalidCartanType(format!("{t} with --gl {n}"))),
        (Some(t), None) => RootSystem::parse(t),
        (None, None) => Err(Error::Parse("either --type or --gl is required".into())),
    }
}

fn resolve_levi(rs: &RootSystem, levi: Option<&str>) -> Result<Subsystem> {
    let Some(text) = levi.map(str::trim).filter(|t| !t.is_empty()) else {
        return Ok(Subsystem::cartan());
    };
    if rs.gl_size().is_some() {
        return rs.gl_block_levi(&text.parse()?);
    }
    let labels = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad simple-root label {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    rs.levi_subsystem(&labels)
}

fn system_inputs(rs: &RootSystem, args: &SystemArgs, levi: &Subsystem) -> Value {
    json!({
        "system": rs.label(),
        "levi": levi.describe(rs),
        "m": args.m,
    })
}

fn lct(cli: &Cli, args: &SystemArgs) -> Result<Executed> {
    let rs = resolve_system(args)?;
    let levi = resolve_levi(&rs, args.levi.as_deref())?;
    let report = if levi.positive().is_empty() {
        if rs.gl_size().is_none() && rs.factors().len() == 1 {
            EpsilonReport {
                value: epsilon::lct_simple(rs.factors()[0])?,
                witness: Witness::Factor(rs.factors()[0]),
                formula_id: epsilon::FormulaId::SimpleCoxeter,
            }
        } else {
            epsilon::lct_reductive(rs.factors())?
        }
    } else if let (Some(_), Some(text)) = (rs.gl_size(), args.levi.as_deref()) {
        epsilon::rlct_weyl_disc(&text.parse()?, args.m)?
    } else {
        epsilon::general_relative_lct(&rs, &levi, args.m, caps(cli))?
    };
    let mut result = report_json(&report);
    let mut disagreement = None;
    if cli.oracle {
        let lattice = ArrangementLattice::enumerate(&rs, caps(cli))?;
        let (value, flat) = lattice.relative_lct(&levi, args.m)?;
        let agree = value == report.value;
        if !agree {
            disagreement = Some(format!(
                "oracle gives {value}, closed form {}",
                report.value
            ));
        }
        result["oracle"] = json!({
            "value": value,
            "witness": flat.map(|f| json_of(&f.describe(&rs))).unwrap_or(Value::Null),
            "flats": lattice.flats().len(),
        });
        result["agree"] = json!(agree);
    }
    Ok((
        Payload::new("lct", system_inputs(&rs, args, &levi), result),
        disagreement,
    ))
}

fn pseudo_levi(cli: &Cli, args: &SystemArgs) -> Result<Executed> {
    let rs = resolve_system(args)?;
    let levi = resolve_levi(&rs, args.levi.as_deref())?;
    let report = apps::epsilon_pseudo_levi(&rs, &levi, caps(cli))?;
    let simple = apps::epsilon_pseudo_levi_simple_derived(&rs, &levi, caps(cli))?;
    let candidates = apps::pseudo_levi_subsystems(&rs, caps(cli))?.len();
    let mut result = report_json(&report);
    result["simple_derived_value"] = json!(simple.value);
    result["candidates"] = json!(candidates);
    let mut inputs = system_inputs(&rs, args, &levi);
    if let Some(obj) = inputs.as_object_mut() {
        obj.remove("m");
    }
    Ok((Payload::new("pseudo-levi", inputs, result), None))
}

fn coxeter(ty: &str) -> Result<Executed> {
    let rs = RootSystem::parse(ty)?;
    let mut factors = Vec::new();
    let mut rows = Vec::new();
    for &t in rs.factors() {
        let simple = RootSystem::build(t)?;
        let h = simple.coxeter_number()?;
        rows.push(vec![
            t.to_string(),
            t.rank().to_string(),
            simple.num_roots().to_string(),
            h.to_string(),
        ]);
        factors.push(json!({"type": t, "rank": t.rank(), "roots": simple.num_roots(), "h": h}));
    }
    let result = json!({"factors": factors});
    let mut payload = Payload::new("coxeter", json!({"type": rs.label()}), result);
    payload.table = Some((
        ["type", "rank", "roots", "h"].map(String::from).to_vec(),
        rows,
    ));
    Ok((payload, None))
}
