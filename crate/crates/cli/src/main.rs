mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact computations in the simplicial and cyclic categories.
#[derive(Parser)]
#[command(name = "cyclic", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    group: Group,
}

#[derive(Args, Clone)]
pub struct Opts {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest rank for audits and enumerations; also the truncation of
    /// named cyclic sets.
    #[arg(long, global = true, default_value_t = 4)]
    pub nmax: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, default_value_t = 200)]
    pub samples: usize,
    /// `finite:n`, `rational` or `pl`.
    #[arg(long, global = true, default_value = "rational")]
    pub model: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Group {
    /// Simplicial maps.
    #[command(subcommand)]
    Delta(DeltaCmd),
    /// Cyclic maps.
    #[command(subcommand)]
    Lambda(LambdaCmd),
    /// Finite cyclic sets: point, C, CxC, CxCxC, y:k, a JSON file or -.
    #[command(subcommand)]
    Cyclicset(SetCmd),
    /// Points of realizations and the circle group.
    #[command(subcommand)]
    Realize(RealizeCmd),
    /// The circle group law (same as `realize mul`).
    #[command(subcommand)]
    Circle(CircleCmd),
    #[command(subcommand)]
    Cocycle(CocycleCmd),
    /// Classify the cyclic structure of `--model` by its extension group.
    Classify,
    /// Periodic piecewise-linear homeomorphisms, e.g. "0:0, 1/2:1/4".
    #[command(subcommand)]
    Pl(PlCmd),
    /// Abstract circles: period:k, a JSON file or -.
    #[command(subcommand)]
    Arc(ArcCmd),
}

#[derive(Subcommand)]
enum DeltaCmd {
    /// Compose left to right: the first map is applied first.
    Compose {
        #[arg(required = true)]
        maps: Vec<String>,
    },
    /// Standard factorisation into faces and degeneracies.
    Factor { map: String },
    /// The simplicial relations up to `--nmax`.
    Audit,
}

#[derive(Subcommand)]
enum LambdaCmd {
    Compose {
        #[arg(required = true)]
        maps: Vec<String>,
    },
    /// `f = j(h) ∘ τ^a`.
    Decompose { map: String },
    /// `γ ∘ j(φ) = j(h) ∘ γ'` for an automorphism `γ`.
    Crossed { gamma: String, phi: String },
    Transpose { map: String },
    /// The cyclic presentation up to `--nmax`.
    Audit,
    Enumerate { source: usize, target: usize },
}

#[derive(Subcommand)]
enum SetCmd {
    Census { set: String },
    Faces {
        set: String,
        #[arg(long)]
        level: Option<usize>,
    },
    Audit { set: String },
}

#[derive(Subcommand)]
enum RealizeCmd {
    /// Canonical form of `(cell, sequence)`; the cell lives at the
    /// sequence's rank.
    Reduce { set: String, cell: String, seq: String },
    Mul { x: String, y: String },
    /// Right action of a circle point.
    Act { set: String, cell: String, seq: String, g: String },
}

#[derive(Subcommand)]
enum CircleCmd {
    Mul { x: String, y: String },
}

#[derive(Subcommand)]
enum CocycleCmd {
    Eval { x: String, y: String },
    /// `ω`, `(b_0, b_1)` and `ρ` on the nondegenerate simplices of `C×C×C`.
    Tables,
    /// Sampled cocycle identities for `--model`, plus the table agreement.
    Check,
}

#[derive(Subcommand)]
enum PlCmd {
    /// `a ∘ b`.
    Compose { a: String, b: String },
    Compare { a: String, b: String },
    Eval { a: String, x: String },
}

#[derive(Subcommand)]
enum ArcCmd {
    Quotient { period: usize },
    Reconstruct {
        circle: String,
        /// Base point label (default: the first point).
        #[arg(long)]
        base: Option<String>,
    },
    Audit { circle: String },
}

/// A command that could not run.
#[derive(Debug)]
pub struct Failure(pub String);

impl Failure {
    pub fn usage(msg: impl Into<String>) -> Self {
        Failure(msg.into())
    }
}

impl From<cyclic_core::Error> for Failure {
    fn from(e: cyclic_core::Error) -> Self {
        Failure(e.to_string())
    }
}

/// What a command produced; `ok` is false when an audit failed.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    pub ok: bool,
}

fn run(cli: Cli) -> Result<Output, Failure> {
    use commands as c;
    let o = &cli.opts;
    match cli.group {
        Group::Delta(cmd) => match cmd {
            DeltaCmd::Compose { maps } => c::delta_compose(&maps),
            DeltaCmd::Factor { map } => c::delta_factor(&map),
            DeltaCmd::Audit => Ok(c::audit_output(vec![cyclic_core::relations::delta_relation_audit(o.nmax)])),
        },
        Group::Lambda(cmd) => match cmd {
            LambdaCmd::Compose { maps } => c::lambda_compose(&maps),
            LambdaCmd::Decompose { map } => c::lambda_decompose(&map),
            LambdaCmd::Crossed { gamma, phi } => c::lambda_crossed(&gamma, &phi),
            LambdaCmd::Transpose { map } => c::lambda_transpose(&map),
            LambdaCmd::Audit => Ok(c::audit_output(vec![cyclic_core::relations::lambda_presentation_audit(o.nmax)])),
            LambdaCmd::Enumerate { source, target } => Ok(c::lambda_enumerate(source, target)),
        },
        Group::Cyclicset(cmd) => match cmd {
            SetCmd::Census { set } => c::set_census(&input::cyclic_set(&set, o.nmax)?),
            SetCmd::Faces { set, level } => c::set_faces(&input::cyclic_set(&set, o.nmax)?, level),
            SetCmd::Audit { set } => Ok(c::set_audit(&input::cyclic_set(&set, o.nmax)?, o.nmax)),
        },
        Group::Realize(cmd) => match cmd {
            RealizeCmd::Reduce { set, cell, seq } => c::realize_reduce(o, &set, &cell, &seq),
            RealizeCmd::Mul { x, y } => c::circle_mul(o, &x, &y),
            RealizeCmd::Act { set, cell, seq, g } => c::realize_act(o, &set, &cell, &seq, &g),
        },
        Group::Circle(CircleCmd::Mul { x, y }) => c::circle_mul(o, &x, &y),
        Group::Cocycle(cmd) => match cmd {
            CocycleCmd::Eval { x, y } => c::cocycle_eval(o, &x, &y),
            CocycleCmd::Tables => Ok(c::cocycle_tables()),
            CocycleCmd::Check => c::cocycle_check(o),
        },
        Group::Classify => c::classify(o),
        Group::Pl(cmd) => match cmd {
            PlCmd::Compose { a, b } => c::pl_compose(&a, &b),
            PlCmd::Compare { a, b } => c::pl_compare(&a, &b),
            PlCmd::Eval { a, x } => c::pl_eval(&a, &x),
        },
        Group::Arc(cmd) => match cmd {
            ArcCmd::Quotient { period } => c::arc_quotient(period),
            ArcCmd::Reconstruct { circle, base } => c::arc_reconstruct(&input::abstract_circle(&circle)?, base.as_deref()),
            ArcCmd::Audit { circle } => Ok(c::arc_audit(&input::abstract_circle(&circle)?)),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let format = cli.opts.format;
    match run(cli) {
        Ok(out) => {
            match format {
                Format::Text => print!("{}", out.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json values print")),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
