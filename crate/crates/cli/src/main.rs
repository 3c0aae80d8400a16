mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qdim_core::appendix::{regenerate, TableId};
use qdim_core::identities::{g2_zero_suite, specialization_suite, verify_identity, IdentityId, Mode};
use qdim_core::instanton::{eval_character, one_instanton_sum, InstantonParams};
use qdim_core::rational::{self, Rational};
use qdim_core::universal::{casimir_adjoint, casimir_y2, dim_adjoint, vogel_params, AlgebraId, Representation};
use qdim_core::{Error, Slot, VogelParams, DEFAULT_ORDER};
use serde_json::{json, Map, Value};

use output::{Document, Status};

/// Universal quantum dimensions of simple Lie algebras.
#[derive(Parser, Debug)]
#[command(name = "qdim", version)]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of the adjoint, t, and Casimir eigenvalues.
    Dim(ParamArgs),
    /// Character of a universal representation on the Weyl line.
    Qdim {
        #[command(subcommand)]
        kind: QdimKind,
    },
    /// Check an identity or a fixed-point suite.
    Verify(VerifyArgs),
    /// Regenerate a symmetric-cube decomposition table.
    Table {
        /// s3-sl6, s3-f4 or s3-so12
        which: String,
    },
    /// One-instanton sum over Cartan powers of the adjoint.
    Instanton(InstantonArgs),
}

#[derive(Args, Debug, Clone)]
struct ParamArgs {
    /// Algebra name such as e8, "sl 6", "so 12", g2.
    algebra: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
}

#[derive(Args, Debug, Clone)]
struct EvalArgs {
    /// Evaluate numerically at this x.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "series")]
    x: Option<f64>,
    /// Print exact series coefficients up to this order.
    #[arg(long)]
    series: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum QdimKind {
    Adjoint {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        eval: EvalArgs,
    },
    Cartan {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        eval: EvalArgs,
    },
    Y2 {
        /// alpha, beta or gamma
        #[arg(long, default_value = "alpha")]
        slot: String,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        eval: EvalArgs,
    },
    X2 {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        eval: EvalArgs,
    },
    Z {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        l: u32,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        eval: EvalArgs,
    },
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// s2, a2, s3, specialization or g2zero
    identity: String,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "series")]
    mode: String,
}

#[derive(Args, Debug)]
struct InstantonArgs {
    #[command(flatten)]
    params: ParamArgs,
    #[arg(long, allow_hyphen_values = true)]
    eps1: f64,
    #[arg(long, allow_hyphen_values = true)]
    eps2: f64,
    #[arg(long, allow_hyphen_values = true)]
    sigma: f64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, default_value_t = 10)]
    nmax: u32,
}

/// Failures mapped to process exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Core(Error::PoleAtParameters { .. }) => 3,
            Failure::Core(Error::PoleAtX { .. } | Error::NotConverged { .. }) => 4,
            Failure::Core(_) => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

type CmdResult = Result<Document, Failure>;

fn default_order() -> Result<usize, Failure> {
    match std::env::var("QDIM_SERIES_ORDER") {
        Ok(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("QDIM_SERIES_ORDER: not an order: `{s}`"))),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}

fn parse_rational(name: &str, s: &str) -> Result<Rational, Failure> {
    rational::parse(s).ok_or_else(|| Failure::Usage(format!("--{name}: not a rational number: `{s}`")))
}

fn resolve_params(args: &ParamArgs, inputs: &mut Map<String, Value>) -> Result<VogelParams, Failure> {
    let explicit = [&args.alpha, &args.beta, &args.gamma];
    let v = match (&args.algebra, explicit) {
        (Some(name), [None, None, None]) => {
            let id: AlgebraId = name.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            inputs.insert("algebra".into(), json!(id.to_string()));
            vogel_params(id)?
        }
        (None, [Some(a), Some(b), Some(g)]) => VogelParams::new(
            parse_rational("alpha", a)?,
            parse_rational("beta", b)?,
            parse_rational("gamma", g)?,
        )
        .map_err(|e| Failure::Usage(e.to_string()))?,
        _ => return Err(Failure::Usage("give an algebra name or all of --alpha, --beta, --gamma".into())),
    };
    inputs.insert("params".into(), json!(v.to_strings()));
    Ok(v)
}

fn cmd_dim(args: &ParamArgs) -> CmdResult {
    let mut doc = Document::new("dim");
    let v = resolve_params(args, &mut doc.inputs)?;
    let d = dim_adjoint(&v)?;
    doc.result("dim", rational::format(&d));
    doc.result("t", rational::format(&v.t()));
    doc.result("casimir_adjoint", rational::format(&casimir_adjoint(&v)));
    for slot in Slot::ALL {
        doc.result(&format!("casimir_y2_{}", slot_name(slot)), rational::format(&casimir_y2(&v, slot)));
    }
    Ok(doc)
}

fn slot_name(slot: Slot) -> &'static str {
    match slot {
        Slot::Alpha => "alpha",
        Slot::Beta => "beta",
        Slot::Gamma => "gamma",
    }
}

fn cmd_qdim(kind: &QdimKind) -> CmdResult {
    let (rep, params, eval) = match kind {
        QdimKind::Adjoint { params, eval } => (Representation::Adjoint, params, eval),
        QdimKind::Cartan { n, params, eval } => (Representation::CartanPower(*n), params, eval),
        QdimKind::Y2 { slot, params, eval } => {
            let slot: Slot = slot.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            (Representation::Y2(slot), params, eval)
        }
        QdimKind::X2 { params, eval } => (Representation::X2, params, eval),
        QdimKind::Z { k, l, params, eval } => (Representation::Z { k: *k, l: *l }, params, eval),
    };
    let mut doc = Document::new("qdim");
    doc.input("representation", rep.name());
    let v = resolve_params(params, &mut doc.inputs)?;
    let formula = rep.formula();
    match eval.x {
        Some(x) => {
            doc.input("x", x);
            if !x.is_finite() {
                return Err(Error::PoleAtX { x }.into());
            }
            doc.result("value", eval_character(&formula, &v, x)?);
        }
        None => {
            let order = match eval.series {
                Some(o) => o,
                None => default_order()?,
            };
            doc.input("order", order);
            let s = formula.series(&v, order)?;
            let even: Vec<String> = s.coeffs().iter().step_by(2).map(rational::format).collect();
            doc.result("dim", rational::format(s.constant_term()));
            doc.result("even_coefficients", even);
        }
    }
    Ok(doc)
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let mut doc = Document::new("verify");
    doc.input("identity", args.identity.to_ascii_lowercase());
    let order = match args.order {
        Some(o) => o,
        None => default_order()?,
    };
    match args.identity.to_ascii_lowercase().as_str() {
        "specialization" | "g2zero" => {
            doc.input("order", order);
            let report = if args.identity.eq_ignore_ascii_case("g2zero") {
                g2_zero_suite(order)?
            } else {
                specialization_suite(order)?
            };
            doc.status = Status::from_pass(report.passed());
            doc.results = to_map(&report);
        }
        name => {
            let id: IdentityId = name.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let mode: Mode = args.mode.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let trials = args.trials.unwrap_or(match mode {
                Mode::Series => 100,
                Mode::Numeric => 10_000,
            });
            if order == 0 && mode == Mode::Series || trials == 0 {
                return Err(Failure::Usage("order and trials must be at least 1".into()));
            }
            doc.input("mode", json!(mode));
            doc.input("order", order);
            doc.input("trials", trials);
            doc.input("seed", args.seed);
            let report = verify_identity(id, mode, order, trials, args.seed);
            doc.status = Status::from_pass(report.passed());
            doc.results = to_map(&report);
        }
    }
    Ok(doc)
}

fn cmd_table(which: &str) -> CmdResult {
    let mut doc = Document::new("table");
    let table: TableId = which.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
    doc.input("table", table.to_string());
    let report = regenerate(table)?;
    doc.status = Status::from_pass(report.passed);
    doc.results = to_map(&report);
    Ok(doc)
}

fn cmd_instanton(args: &InstantonArgs) -> CmdResult {
    let mut doc = Document::new("instanton");
    let v = resolve_params(&args.params, &mut doc.inputs)?;
    let ip = InstantonParams::new(args.eps1, args.eps2, args.sigma, args.x, args.nmax)?;
    doc.input("eps1", ip.eps1);
    doc.input("eps2", ip.eps2);
    doc.input("sigma", ip.sigma_n);
    doc.input("x", ip.x);
    doc.input("nmax", ip.n_max);
    let table = one_instanton_sum(&v, &ip)?;
    doc.results = to_map(&table);
    Ok(doc)
}

fn to_map<T: serde::Serialize>(value: &T) -> Map<String, Value> {
    match serde_json::to_value(value).expect("serializable report") {
        Value::Object(m) => m,
        other => Map::from_iter([("value".to_string(), other)]),
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Dim(_) => "dim",
        Command::Qdim { .. } => "qdim",
        Command::Verify(_) => "verify",
        Command::Table { .. } => "table",
        Command::Instanton(_) => "instanton",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Dim(p) => cmd_dim(p),
        Command::Qdim { kind } => cmd_qdim(kind),
        Command::Verify(a) => cmd_verify(a),
        Command::Table { which } => cmd_table(which),
        Command::Instanton(a) => cmd_instanton(a),
    };
    match outcome {
        Ok(doc) => {
            doc.emit(cli.json);
            match doc.status {
                Status::Fail => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(failure) => {
            let mut doc = Document::new(command_name(&cli.command));
            doc.status = Status::Error;
            doc.result("error", failure.message());
            if cli.json {
                doc.emit(true);
            } else {
                eprintln!("error: {}", failure.message());
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
