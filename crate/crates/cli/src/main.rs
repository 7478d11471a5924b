use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod report;

use report::Outcome;

#[derive(Parser, Debug)]
#[command(
    name = "shadowlab",
    version,
    about = "Exact finite-resolution shadowing checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A cylinder depth or a cover file.
#[derive(Args, Debug, Clone)]
struct CoverArg {
    #[arg(long, conflicts_with = "cover")]
    depth: Option<usize>,
    #[arg(long)]
    cover: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Allowed words of length n, or minimal forbidden words up to length n.
    Language {
        spec: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        minimal_forbidden: bool,
    },
    /// Whether the shift is an N-step SFT.
    CheckSft {
        spec: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Pseudo-orbit graph and pattern language of a cover.
    Po {
        spec: PathBuf,
        #[command(flatten)]
        cover: CoverArg,
        #[arg(long = "L")]
        len: usize,
    },
    /// Orbit pattern language of a cover.
    Orbit {
        spec: PathBuf,
        #[command(flatten)]
        cover: CoverArg,
        #[arg(long = "L")]
        len: usize,
    },
    /// Compares the refinement image of PO(fine) with O(coarse) at length L.
    Criterion {
        spec: PathBuf,
        /// Coarse and fine cylinder depths.
        #[arg(long, value_delimiter = ',', required = true)]
        depths: Vec<usize>,
        #[arg(long = "L")]
        len: usize,
    },
    /// Scans fine cylinder depths for one satisfying the criterion.
    WitnessSearch {
        spec: PathBuf,
        /// Depth of the coarse cover.
        #[arg(long)]
        depth: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        depths: Vec<usize>,
        #[arg(long = "L")]
        len: usize,
    },
    /// Checks, stitches, or searches for a shadowing point of a pseudo-orbit.
    Shadow {
        spec: PathBuf,
        /// Points `pre(per)` on subshifts or rationals on circles.
        #[arg(long, value_delimiter = ',', conflicts_with = "random")]
        points: Vec<String>,
        #[arg(long, requires = "points")]
        delta: Option<String>,
        /// Length of a seeded random 2^-(n+1)-pseudo-orbit.
        #[arg(long, requires = "n")]
        random: Option<usize>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = commands::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        eps: Option<String>,
        /// Search `0^w` and `0^k 1 0^w` for k up to this bound.
        #[arg(long, requires = "eps", conflicts_with = "candidates")]
        ones_position: Option<usize>,
        /// Explicit candidate points.
        #[arg(long, value_delimiter = ',', requires = "eps")]
        candidates: Vec<String>,
    },
    /// Builds and checks the pseudo-orbit tower of cylinder covers, or
    /// validates a tower file.
    Tower {
        #[arg(required_unless_present = "validate")]
        spec: Option<PathBuf>,
        #[arg(long, value_delimiter = ',')]
        depths: Vec<usize>,
        #[arg(long = "L", default_value_t = 8)]
        len: usize,
        /// Thread length of the conjugacy check.
        #[arg(long, default_value_t = 5)]
        conj_len: usize,
        /// Thread depth of the conjugacy check (default: top level).
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, conflicts_with = "spec")]
        validate: Option<PathBuf>,
    },
    /// Builds the tower of a cover sequence bonded by star selections.
    TowerGeneral {
        spec: PathBuf,
        /// Cover files U_0, U_1, ...; default is the uniform arc sequence.
        #[arg(long, value_delimiter = ',')]
        covers: Vec<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k0: usize,
        #[arg(long, default_value_t = 3)]
        count: usize,
        #[arg(long, default_value_t = 1)]
        growth: usize,
        #[arg(long = "L", default_value_t = 4)]
        len: usize,
    },
    /// Almost-lifting check of a block code at dyadic resolution.
    Alp {
        code: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        eta: String,
        #[arg(long)]
        delta: String,
        #[arg(long = "L")]
        len: usize,
    },
    /// Exact lifting check of a block code over target cylinder depths.
    Lifts {
        code: PathBuf,
        /// Source cylinder depth.
        #[arg(long)]
        depth: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        depths: Vec<usize>,
        #[arg(long = "L")]
        len: usize,
    },
    /// Rebuilds the sofic counterexample and re-runs all of its checks.
    DemoSofic,
}

fn run(cli: &Cli) -> shadowlab::Result<Outcome> {
    use Command::*;
    match &cli.command {
        Language {
            spec,
            n,
            minimal_forbidden,
        } => commands::language(spec, *n, *minimal_forbidden),
        CheckSft { spec, n } => commands::check_sft(spec, *n),
        Po { spec, cover, len } => commands::po(spec, cover, *len),
        Orbit { spec, cover, len } => commands::orbit(spec, cover, *len),
        Criterion { spec, depths, len } => match depths[..] {
            [coarse, fine] => commands::criterion(spec, coarse, fine, *len),
            _ => Err(shadowlab::Error::Spec(
                "--depths takes exactly two values".into(),
            )),
        },
        WitnessSearch {
            spec,
            depth,
            depths,
            len,
        } => commands::witness_search(spec, *depth, depths, *len),
        Shadow {
            spec,
            points,
            delta,
            random,
            n,
            seed,
            eps,
            ones_position,
            candidates,
        } => commands::shadow(
            spec,
            &commands::ShadowArgs {
                points,
                delta: delta.as_deref(),
                random: *random,
                n: *n,
                seed: *seed,
                eps: eps.as_deref(),
                ones_position: *ones_position,
                candidates,
            },
        ),
        Tower {
            spec,
            depths,
            len,
            conj_len,
            k,
            validate,
        } => match (validate, spec) {
            (Some(path), _) => commands::tower_validate(path),
            (None, Some(spec)) => commands::tower(spec, depths, *len, *conj_len, *k),
            (None, None) => unreachable!("clap requires a spec"),
        },
        TowerGeneral {
            spec,
            covers,
            k0,
            count,
            growth,
            len,
        } => commands::tower_general(spec, covers, *k0, *count, *growth, *len),
        Alp {
            code,
            eps,
            eta,
            delta,
            len,
        } => commands::alp(code, eps, eta, delta, *len),
        Lifts {
            code,
            depth,
            depths,
            len,
        } => commands::lifts(code, *depth, depths, *len),
        DemoSofic => commands::demo_sofic(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let mut body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&outcome.json).expect("json values serialize"),
        Format::Text => outcome.text.join("\n"),
    };
    body.push('\n');
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, body) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{body}"),
    }
    if outcome.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
