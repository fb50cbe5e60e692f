use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use poisson_dga::groebner::set_degree_cap;
use poisson_dga::Error;

mod cert;
mod commands;

use cert::{Certificate, Verdict};

#[derive(Parser)]
#[command(name = "pdga", version, about = "Differential and Poisson algebra over Q, with certificates")]
struct Cli {
    /// Print the structured report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for chart and growth computations.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest total degree allowed in Gröbner computations.
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
pub struct Input {
    /// Declaration file.
    pub file: PathBuf,
    /// Ideal declaration presenting the base algebra; the free ring if absent.
    #[arg(long)]
    pub presentation: Option<String>,
    /// Treat the presented algebra as a domain.
    #[arg(long)]
    pub assume_domain: bool,
}

/// Derivations given directly or induced by a Poisson structure.
#[derive(Args, Clone)]
pub struct Deltas {
    #[arg(long = "derivation")]
    pub derivations: Vec<String>,
    #[arg(long)]
    pub structure: Option<String>,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Validate a Poisson structure (Jacobi identity and presentation).
    CheckPoisson {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        structure: String,
    },
    /// Evaluate a bracket {f, g}.
    Bracket {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        structure: String,
        f: String,
        g: String,
    },
    /// Jacobi identity on generator triples only.
    Jacobi {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        structure: String,
    },
    /// Decide whether an ideal is Poisson, by both the bracket and the
    /// induced derivations.
    PoissonIdeal {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        structure: String,
        #[arg(long)]
        ideal: String,
    },
    /// Bounded descent towards the differential (Poisson) core of an ideal.
    Core {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        deltas: Deltas,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 5)]
        max_iter: usize,
    },
    /// Smallest differential ideal containing the given generators.
    Closure {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        deltas: Deltas,
        #[arg(long)]
        ideal: String,
    },
    /// Search a subspace for a constant fraction u/v.
    Constants {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        deltas: Deltas,
        /// Comma separated basis of V.
        #[arg(long, value_delimiter = ',')]
        span: Vec<String>,
        /// Ideal declarations forming the family S.
        #[arg(long = "family")]
        family: Vec<String>,
    },
    /// Whether a/b is a constant of every derivation.
    ConstFrac {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        deltas: Deltas,
        numerator: String,
        denominator: String,
    },
    /// Defining ideal of the prolongation.
    Prolong {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: String,
    },
    /// Check that a section makes the presented variety a D-variety.
    Dvariety {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        section: String,
    },
    /// Whether a subvariety is a D-subvariety.
    Dsub {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        section: String,
        #[arg(long)]
        ideal: String,
    },
    /// Sharp points with constant coordinates.
    Sharp {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        section: String,
    },
    /// Count solutions of a system linear in the unknowns.
    Count {
        #[command(flatten)]
        input: Input,
        /// Ideal declaration holding the rows.
        #[arg(long)]
        system: String,
        #[arg(long, value_delimiter = ',', required = true)]
        unknowns: Vec<String>,
    },
    /// Minor ideals of a linear system and the projection count.
    Minors {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        system: String,
        #[arg(long, value_delimiter = ',', required = true)]
        unknowns: Vec<String>,
    },
    /// Replace generators by d+1 random combinations with the same zeros.
    Kronecker {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        seed: u64,
    },
    /// Point count of a zero-dimensional ideal against N^(d+1).
    Bezout {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: String,
        /// Degree bound N; defaults to the largest basis degree.
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Count projective classes with logarithmic derivatives in W.
    Logdiv {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        deltas: Deltas,
        #[arg(long, value_delimiter = ',', required = true)]
        v: Vec<String>,
        #[arg(long, value_delimiter = ',', required = true)]
        w: Vec<String>,
    },
    /// Multiply two skew polynomials.
    OreMul {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        twist: String,
        #[arg(long, default_value = "x")]
        ore_var: String,
        f: String,
        g: String,
    },
    /// Check that a differential ideal induces a two-sided ideal.
    OreIdeal {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        twist: String,
        #[arg(long)]
        ideal: String,
    },
    /// Growth of powers of a subspace and the GK slope estimate.
    Gk {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',', required = true)]
        span: Vec<String>,
        /// Adjoin the skew variable of R[x; d] to the generating set.
        #[arg(long)]
        twist: Option<String>,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[arg(long, default_value_t = 0.5)]
        window: f64,
    },
    /// Krull dimension of the presented algebra.
    Dim {
        #[command(flatten)]
        input: Input,
    },
    /// Points of a zero-dimensional ideal.
    Points {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideal: String,
    },
    /// Whether every bracket of generators lies in an ideal.
    Tallcheck {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        structure: String,
        #[arg(long)]
        ideal: String,
    },
    /// Poisson structure on R[t] from a derivation of R.
    RtExtend {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        derivation: String,
        /// Differential ideal of R to extend to R[t].
        #[arg(long)]
        prime: Option<String>,
    },
    /// Poisson structure from two commuting derivations.
    FromDerivations {
        #[command(flatten)]
        input: Input,
        #[arg(long = "derivation", num_args = 1, required = true)]
        derivations: Vec<String>,
    },
    /// Check the commutator identity of the induced derivations.
    CommutatorCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        structure: String,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::CheckPoisson { .. } => "check-poisson",
            Cmd::Bracket { .. } => "bracket",
            Cmd::Jacobi { .. } => "jacobi",
            Cmd::PoissonIdeal { .. } => "poisson-ideal",
            Cmd::Core { .. } => "core",
            Cmd::Closure { .. } => "closure",
            Cmd::Constants { .. } => "constants",
            Cmd::ConstFrac { .. } => "const-frac",
            Cmd::Prolong { .. } => "prolong",
            Cmd::Dvariety { .. } => "dvariety",
            Cmd::Dsub { .. } => "dsub",
            Cmd::Sharp { .. } => "sharp",
            Cmd::Count { .. } => "count",
            Cmd::Minors { .. } => "minors",
            Cmd::Kronecker { .. } => "kronecker",
            Cmd::Bezout { .. } => "bezout",
            Cmd::Logdiv { .. } => "logdiv",
            Cmd::OreMul { .. } => "ore-mul",
            Cmd::OreIdeal { .. } => "ore-ideal",
            Cmd::Gk { .. } => "gk",
            Cmd::Dim { .. } => "dim",
            Cmd::Points { .. } => "points",
            Cmd::Tallcheck { .. } => "tallcheck",
            Cmd::RtExtend { .. } => "rt-extend",
            Cmd::FromDerivations { .. } => "from-derivations",
            Cmd::CommutatorCheck { .. } => "commutator-check",
        }
    }
}

fn is_input_error(e: &Error) -> bool {
    matches!(
        e,
        Error::Syntax { .. }
            | Error::UnknownVariable(_)
            | Error::InvalidRing(_)
            | Error::NegativeExponent(_)
            | Error::Declaration(_)
            | Error::RingMismatch
    )
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(cap) = cli.degree_cap {
        set_degree_cap(cap);
    }
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let name = cli.cmd.name();
    let start = Instant::now();
    let cert = match commands::run(&cli.cmd) {
        Ok(c) => c,
        Err(commands::Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(commands::Failure::Algebra(e)) if is_input_error(&e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
        Err(commands::Failure::Algebra(e)) if e.is_resource_abort() => {
            Certificate::new(name, Verdict::Aborted, "aborted").with("reason", e.to_string())
        }
        Err(commands::Failure::Algebra(e)) => {
            Certificate::new(name, Verdict::NotApplicable, "not applicable").with("reason", e.to_string())
        }
    };
    let cert = cert.timed(start);
    if cli.json {
        println!("{}", serde_json::to_string_pretty(&cert.to_json()).unwrap());
    } else {
        print!("{}", cert.to_text());
    }
    ExitCode::from(cert.verdict.exit_code() as u8)
}
