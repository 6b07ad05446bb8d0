//! Command-line driver. Every subcommand delegates to one library
//! operation; this file only carries argument plumbing and the exit-code
//! contract:
//!
//!   0  the run's checks all pass (or the command is pure inspection)
//!   1  a check failed (unfair weights, rejected certificate, ...)
//!   2  the input did not parse (flags, config, files, literals)
//!   3  an internal invariant breach (a bug worth reporting)

mod fmt;
mod ops;

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

const GRAMMAR: &str = "\
FAMILIES
  freeword(k)    free semigroup on k letters a, b, ...
  commvec(k)     free commutative semigroup, exponent vectors
  natmul         positive naturals under multiplication
  bicyclic       the bicyclic monoid <p, q | pq = 1>
  polycyclic2    the polycyclic monoid P2 (with zero)
  munn           the free monogenic inverse semigroup
  zmin           the integers under minimum
  trivial | cyclic(k) | leftzero(k) | rightzero(k) | chain(k) | klein4 | sym3
  zero(F) | one(F) | product(F, G)

ELEMENT LITERALS
  free words      bare strings: \"abba\"
  commvec         exponent tuples: \"(2,0)\"
  natmul          positive integers: \"12\"
  bicyclic        \"q^j p^k\" with either factor omitted: \"qp\", \"q^2p^3\", \"1\"
  polycyclic2     x^-1 y as uppercase-reversed x then y: \"Pq\", \"1\", \"0\"
  munn            triples \"(p,q,r)\"
  zmin            integers: \"-3\"
  finite tables   0-based indices: \"2\"
  zero(F)/one(F)  inner literals, plus \"0\" / \"1\"
  product(F, G)   \"(a ; b)\"

SET SPECS
  all | singleton:<lit> | list:<lit>,... | prefix:<lit> | ideal:<lit>
      | leftideal:<lit> | row:<j> | column:<k>

INDEX ARGUMENTS (--n)
  \"8\" | \"2,4,8\" | \"10..100\"   (ranges include both ends)

FILES
  weights / functions: one \"<element literal> <num>/<den>\" per line
  Cayley tables: k rows of k 0-based indices, row-major
  \"#\" starts a comment in any of them

CONFIG
  --config FILE supplies \"key = value\" defaults for any long flag of the
  subcommand; explicit flags win. AMENALAB_SEED is the seed fallback.

RATIONALS
  machine columns are exact \"num/den\" in lowest terms; decimal columns are
  rounded for reading only.
";

#[derive(Parser)]
#[command(name = "amenalab", version, about = "Exact experiments on fair amenability of semigroups", after_long_help = GRAMMAR)]
struct Cli {
    /// Config file with `key = value` defaults for the subcommand flags.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Seed for sampled checks; falls back to $AMENALAB_SEED, then 0.
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Default)]
struct Common {
    /// Family spec, e.g. "bicyclic" or "product(leftzero(2), cyclic(3))".
    #[arg(long)]
    family: Option<String>,

    /// Cayley table file defining a finite family (alternative to --family).
    #[arg(long, value_name = "FILE")]
    table: Option<String>,

    /// Which translation acts: "left" (s·x) or "right" (x·s).
    #[arg(long)]
    side: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Multiply two elements.
    Mul {
        #[command(flatten)]
        common: Common,
        /// Left factor.
        #[arg(long)]
        a: Option<String>,
        /// Right factor.
        #[arg(long)]
        b: Option<String>,
    },
    /// Green's relation classes on a finite family, or relate two elements.
    Green {
        #[command(flatten)]
        common: Common,
        /// Relation: L, R, H or D. Omit to list all four.
        #[arg(long)]
        relation: Option<String>,
        #[arg(long)]
        a: Option<String>,
        #[arg(long)]
        b: Option<String>,
    },
    /// Decide whether s acts injectively on a finite cut of a set.
    Injective {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
        /// Set spec (default "all").
        #[arg(long)]
        set: Option<String>,
        /// Window index cutting the set finite.
        #[arg(long)]
        n: Option<String>,
    },
    /// List the translation fibers of s over a finite cut.
    Fibers {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
    /// Split a finite cut into the fewest parts on which s is injective.
    Partition {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
    /// Sweep the window symmetric-difference ratio; CSV output.
    FolnerSweep {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        set: Option<String>,
        /// Window indices, e.g. "10..100".
        #[arg(long)]
        n: Option<String>,
        /// "proof" compares s(A ∩ F) with A ∩ F; "literal" with the swept set.
        #[arg(long)]
        variant: Option<String>,
    },
    /// Empirical window measures of a set; CSV output.
    MeasureSeries {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
    /// Check a weight vector for fairness on a finite family.
    FairCheck {
        #[command(flatten)]
        common: Common,
        /// Weight file, one "<element> <num>/<den>" per line.
        #[arg(long, value_name = "FILE")]
        weights: Option<String>,
    },
    /// Solve for the fair classes: weights are fair iff class-constant.
    FairSolve {
        #[command(flatten)]
        common: Common,
    },
    /// Push a fair vector through a structure map and re-check it.
    Transfer {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE")]
        weights: Option<String>,
        /// One of: involution, product, restrict, adjoin-zero.
        #[arg(long)]
        mode: Option<String>,
        /// Second family for --mode product.
        #[arg(long)]
        other_family: Option<String>,
        /// Cayley table file for the second family.
        #[arg(long, value_name = "FILE")]
        other_table: Option<String>,
        /// Weights on the second family for --mode product.
        #[arg(long, value_name = "FILE")]
        other_weights: Option<String>,
        /// Finite set spec (list:/singleton:) to restrict to.
        #[arg(long)]
        carrier: Option<String>,
    },
    /// Verify a bundled paradoxical decomposition inside a ball.
    ParadoxCert {
        /// One of: fs2, p2, bicyclic.
        #[arg(long)]
        builtin: Option<String>,
        /// Ball radius for the exhaustive sweep.
        #[arg(long)]
        radius: Option<String>,
    },
    /// Convolve two finitely supported functions.
    Convolve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE")]
        f: Option<String>,
        #[arg(long, value_name = "FILE")]
        g: Option<String>,
    },
    /// Apply the dual translation s∗f and report boundedness.
    PartialAction {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
        /// Function file; or use --set/--n for an indicator sweep.
        #[arg(long, value_name = "FILE")]
        f: Option<String>,
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        n: Option<String>,
    },
    /// Compare the integral of f with the integral of s∗f under w.
    AstCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "FILE")]
        weights: Option<String>,
        #[arg(long, value_name = "FILE")]
        f: Option<String>,
        #[arg(long)]
        element: Option<String>,
    },
    /// Run the bundled example catalog and print its pass/fail matrix.
    Table1,
}

/// Values resolved from flags, the config file and the environment.
pub struct Ctx {
    cfg: BTreeMap<String, String>,
    seed: u64,
}

impl Ctx {
    /// A flag value, falling back to the config file.
    fn arg(&self, flag: &Option<String>, key: &str) -> Option<String> {
        flag.clone().or_else(|| self.cfg.get(key).cloned())
    }

    fn req(&self, flag: &Option<String>, key: &str) -> Result<String, ops::CliError> {
        self.arg(flag, key)
            .ok_or_else(|| ops::CliError(format!("missing --{key} (flag or config)")))
    }

    fn seed(&self) -> u64 {
        self.seed
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<BTreeMap<String, String>, ops::CliError> {
    let mut out = BTreeMap::new();
    let Some(path) = path else {
        return Ok(out);
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| ops::CliError(format!("cannot read config {}: {e}", path.display())))?;
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(ops::CliError(format!(
                "config {} line {}: expected key = value",
                path.display(),
                i + 1
            )));
        };
        out.insert(key.trim().to_string(), value.trim().to_string());
    }
    Ok(out)
}

fn resolve_seed(flag: Option<u64>, cfg: &BTreeMap<String, String>) -> Result<u64, ops::CliError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    if let Some(text) = cfg.get("seed") {
        return text
            .parse()
            .map_err(|_| ops::CliError(format!("bad seed in config: {text:?}")));
    }
    match std::env::var("AMENALAB_SEED") {
        Ok(text) => text
            .parse()
            .map_err(|_| ops::CliError(format!("bad $AMENALAB_SEED: {text:?}"))),
        Err(_) => Ok(0),
    }
}

fn run(cli: Cli) -> Result<ops::Outcome, ops::CliError> {
    let cfg = load_config(&cli.config)?;
    let seed = resolve_seed(cli.seed, &cfg)?;
    let ctx = Ctx { cfg, seed };
    match cli.cmd {
        Cmd::Mul { common, a, b } => ops::mul(&ctx, &common, &a, &b),
        Cmd::Green {
            common,
            relation,
            a,
            b,
        } => ops::green(&ctx, &common, &relation, &a, &b),
        Cmd::Injective { common, element, set, n } => {
            ops::injective(&ctx, &common, &element, &set, &n)
        }
        Cmd::Fibers { common, element, set, n } => ops::fibers(&ctx, &common, &element, &set, &n),
        Cmd::Partition { common, element, set, n } => {
            ops::partition(&ctx, &common, &element, &set, &n)
        }
        Cmd::FolnerSweep {
            common,
            element,
            set,
            n,
            variant,
        } => ops::folner_sweep(&ctx, &common, &element, &set, &n, &variant),
        Cmd::MeasureSeries { common, set, n } => ops::measure_series(&ctx, &common, &set, &n),
        Cmd::FairCheck { common, weights } => ops::fair_check(&ctx, &common, &weights),
        Cmd::FairSolve { common } => ops::fair_solve(&ctx, &common),
        Cmd::Transfer {
            common,
            weights,
            mode,
            other_family,
            other_table,
            other_weights,
            carrier,
        } => ops::transfer(
            &ctx,
            &common,
            &weights,
            &mode,
            &other_family,
            &other_table,
            &other_weights,
            &carrier,
        ),
        Cmd::ParadoxCert { builtin, radius } => ops::paradox_cert(&ctx, &builtin, &radius),
        Cmd::Convolve { common, f, g } => ops::convolve(&ctx, &common, &f, &g),
        Cmd::PartialAction {
            common,
            element,
            f,
            set,
            n,
        } => ops::partial_action(&ctx, &common, &element, &f, &set, &n),
        Cmd::AstCheck {
            common,
            weights,
            f,
            element,
        } => ops::ast_check(&ctx, &common, &weights, &f, &element),
        Cmd::Table1 => ops::table1(&ctx),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match panic::catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(outcome)) => {
            print!("{}", outcome.report);
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Ok(Err(err)) => {
            eprintln!("error: {}", err.0);
            ExitCode::from(2)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            eprintln!("internal invariant breach: {msg}");
            ExitCode::from(3)
        }
    }
}
