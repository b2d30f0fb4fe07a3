use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bscrel::cli::{
    cmd_code, cmd_curve, cmd_figure, cmd_thresholds, emit, exit_code, CodeCommand, CurveKind, FigureKind,
    OutputFormat, RunConfig, DEFAULT_RATE_STEP, DEFAULT_TRIALS,
};
use bscrel::lab::TiePolicy;

/// Error exponent bounds and small-code analysis for the binary symmetric channel.
#[derive(Parser)]
#[command(name = "bscrel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Args)]
struct Flags {
    /// Crossover probability in (0, 1/2).
    #[arg(long, global = true, default_value_t = 0.08)]
    p: f64,
    /// Lowest rate of the grid [default: 0.001].
    #[arg(long, global = true)]
    r_min: Option<f64>,
    /// Highest rate of the grid [default: capacity - 0.001].
    #[arg(long, global = true)]
    r_max: Option<f64>,
    #[arg(long, global = true, default_value_t = DEFAULT_RATE_STEP)]
    r_step: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    trials: u64,
    #[arg(long, global = true, value_enum, default_value_t = Tie::Adversarial)]
    tie_policy: Tie,
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Tie {
    Favor,
    Adversarial,
    Lowest,
    Split,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// R_x, R1, R0, R_crit and the interval where E0 is exact.
    Thresholds,
    /// One exponent sampled on the rate grid.
    Curve {
        #[arg(value_enum)]
        which: Curve,
    },
    /// Data behind the typical-weight and bounds figures.
    Figure {
        #[arg(value_enum)]
        which: Figure,
    },
    /// Analyze or simulate a code read from a file of 0/1 lines.
    Code {
        #[arg(value_enum)]
        action: Action,
        path: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Curve {
    E0,
    Thm4,
    Sphere,
    UnionExp,
    Composite,
}

#[derive(Clone, Copy, ValueEnum)]
enum Figure {
    Fig1,
    Fig2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Action {
    Analyze,
    Simulate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let f = cli.flags;
    let cfg = RunConfig {
        p: f.p,
        r_min: f.r_min,
        r_max: f.r_max,
        r_step: f.r_step,
        seed: f.seed,
        trials: f.trials,
        tie_policy: match f.tie_policy {
            Tie::Favor => TiePolicy::FavorTransmitted,
            Tie::Adversarial => TiePolicy::Adversarial,
            Tie::Lowest => TiePolicy::LowestIndex,
            Tie::Split => TiePolicy::RandomSplit,
        },
        format: match f.format {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        },
        out: f.out,
    };
    let result = match cli.command {
        Command::Thresholds => cmd_thresholds(&cfg),
        Command::Curve { which } => cmd_curve(
            &cfg,
            match which {
                Curve::E0 => CurveKind::E0,
                Curve::Thm4 => CurveKind::Thm4,
                Curve::Sphere => CurveKind::Sphere,
                Curve::UnionExp => CurveKind::UnionExp,
                Curve::Composite => CurveKind::Composite,
            },
        ),
        Command::Figure { which } => cmd_figure(
            &cfg,
            match which {
                Figure::Fig1 => FigureKind::Fig1,
                Figure::Fig2 => FigureKind::Fig2,
            },
        ),
        Command::Code { action, path } => cmd_code(
            &cfg,
            &path,
            match action {
                Action::Analyze => CodeCommand::Analyze,
                Action::Simulate => CodeCommand::Simulate,
            },
        ),
    }
    .and_then(|text| emit(&cfg, &text));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
