use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use skew_schur::{
    build_order, complement, contains, count_lr_fillings_with_content, emit_dot, emit_json,
    hook_family, skew_schur_expansion_limited, staircase_with_foundation, verify_hook_family,
    ComparisonResult, Composition, Error, Partition, Rectangle, SchurCache, SkewShape,
};

/// Skew Schur expansions and the Schur-positivity order on fat staircases
/// with hook foundations.
///
/// Partitions and compositions are written as comma-separated parts (`4,1,1`,
/// `-` for the empty partition). Shapes are `outer/inner`, a bare partition,
/// or `S:λ:α:k` for the staircase `α` shifted by `k` over the foundation `λ`.
#[derive(Parser, Debug)]
#[command(name = "skew-schur", version)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Print JSON instead of text.
    #[arg(long, global = true, conflicts_with = "dot")]
    json: bool,

    /// Print Graphviz DOT (hasse only; its default).
    #[arg(long, global = true)]
    dot: bool,

    /// Number of worker threads.
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,

    /// Abort an enumeration after this many search nodes.
    #[arg(long, global = true, value_name = "N")]
    limit: Option<u64>,

    /// Write the output to a file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a skew Schur function in the Schur basis.
    Expand { shape: String },
    /// Littlewood-Richardson coefficient c^outer_{inner,nu}.
    Lrcoef { outer: String, inner: String, nu: String },
    /// Compare two skew Schur functions in the Schur-positivity order.
    Compare { first: String, second: String },
    /// Hasse diagram of the hook (or hook complement) family.
    Hasse {
        alpha: String,
        h: u32,
        k: u32,
        /// Use hook complements in a rectangle of this height.
        #[arg(long, value_name = "HEIGHT")]
        complement: Option<u32>,
    },
    /// Check the predicted classification against brute force for a range of k.
    Verify {
        alpha: String,
        h: u32,
        /// A single k, or a range `a-b` / `a..b` (inclusive).
        k: String,
        /// Use hook complements in a rectangle of this height.
        #[arg(long, value_name = "HEIGHT")]
        complement: Option<u32>,
    },
    /// Complement of a partition inside a width x height rectangle.
    Complement { rho: String, width: u32, height: u32 },
}

enum Failure {
    Usage(String),
    Computation(String),
    Mismatches(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded(_) | Error::Overflow(_) | Error::NotPartialOrder(_) => {
                Failure::Computation(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn parse_shape(text: &str) -> Result<SkewShape, Failure> {
    let Some(rest) = text.strip_prefix("S:") else {
        return text.parse::<SkewShape>().map_err(Failure::from);
    };
    let fields: Vec<&str> = rest.split(':').collect();
    let [lambda, alpha, k] = fields[..] else {
        return Err(Failure::Usage(format!("expected S:λ:α:k, got {text:?}")));
    };
    let lambda: Partition = lambda.parse()?;
    let alpha: Composition = alpha.parse()?;
    let k: u32 = k
        .parse()
        .map_err(|_| Failure::Usage(format!("invalid shift {k:?} in {text:?}")))?;
    Ok(staircase_with_foundation(&lambda, &alpha, k)?)
}

fn parse_k_range(text: &str) -> Result<Vec<u32>, Failure> {
    let bad = || Failure::Usage(format!("invalid k range {text:?}"));
    let num = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    let (a, b) = if let Some((a, b)) = text.split_once("..") {
        (num(a)?, num(b.trim_start_matches('='))?)
    } else if let Some((a, b)) = text.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let k = num(text)?;
        (k, k)
    };
    if a > b {
        return Err(bad());
    }
    Ok((a..=b).collect())
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(v).expect("serializable output") + "\n"
}

fn render_comparison(r: &ComparisonResult) -> String {
    let mut s = format!("{}\n", r.verdict);
    if let Some(t) = &r.first_fails {
        writeln!(s, "first - second has {} * s({})", t.coeff, t.partition).unwrap();
    }
    if let Some(t) = &r.second_fails {
        writeln!(s, "second - first has {} * s({})", t.coeff, t.partition).unwrap();
    }
    s
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    if g.dot && !matches!(cli.command, Command::Hasse { .. }) {
        return Err(Failure::Usage("--dot applies only to hasse".into()));
    }
    let cache = SchurCache::with_limit(g.limit);
    match &cli.command {
        Command::Expand { shape } => {
            let d = parse_shape(shape)?;
            let e = skew_schur_expansion_limited(&d, g.limit)?;
            Ok(if g.json { to_json(&e) } else { format!("{e}\n") })
        }
        Command::Lrcoef { outer, inner, nu } => {
            let (outer, inner, nu): (Partition, Partition, Partition) =
                (outer.parse()?, inner.parse()?, nu.parse()?);
            if !contains(&inner, &outer) {
                return Err(Error::NotContained { inner: inner.to_string(), outer: outer.to_string() }.into());
            }
            let c = if outer.size() == inner.size() + nu.size() {
                let shape = SkewShape::new(outer, inner)?;
                count_lr_fillings_with_content(&shape, &nu, g.limit)?
            } else {
                0
            };
            Ok(format!("{c}\n"))
        }
        Command::Compare { first, second } => {
            let (d1, d2) = (parse_shape(first)?, parse_shape(second)?);
            let r = cache.compare(&d1, &d2)?;
            Ok(if g.json { to_json(&r) } else { render_comparison(&r) })
        }
        Command::Hasse { alpha, h, k, complement } => {
            let alpha: Composition = alpha.parse()?;
            let family = hook_family(&alpha, *h, *k, *complement)?;
            let labelled: Vec<(String, SkewShape)> =
                family.into_iter().map(|(hook, d)| (hook.to_partition().to_string(), d)).collect();
            let graph = build_order(&labelled, &cache)?;
            Ok(if g.json { to_json(&emit_json(&graph)) } else { emit_dot(&graph) })
        }
        Command::Verify { alpha, h, k, complement } => {
            let alpha: Composition = alpha.parse()?;
            let ks = parse_k_range(k)?;
            // reject bad arguments for every k before computing anything
            for &k in &ks {
                hook_family(&alpha, *h, k, *complement)?;
            }
            let reports = ks
                .iter()
                .map(|&k| verify_hook_family(&alpha, *h, k, *complement, &cache))
                .collect::<Result<Vec<_>, _>>()?;
            let out = if g.json {
                to_json(&reports)
            } else {
                let mut s = String::new();
                for r in &reports {
                    writeln!(
                        s,
                        "alpha={} h={} k={}: {} pairs, {} dominations, {} mismatches",
                        r.alpha,
                        r.h,
                        r.k,
                        r.pairs.len(),
                        r.observed_dominations().len(),
                        r.mismatches.len()
                    )
                    .unwrap();
                    for p in r.pairs.iter().filter(|p| !p.matches) {
                        writeln!(
                            s,
                            "  mismatch {} vs {}: predicted {} ({}), observed {}",
                            p.lam,
                            p.mu,
                            if p.predicted.dominates() { "dominates" } else { "does not dominate" },
                            p.predicted.rule_id(),
                            p.observed.verdict
                        )
                        .unwrap();
                    }
                }
                s
            };
            if reports.iter().all(|r| r.is_clean()) {
                Ok(out)
            } else {
                Err(Failure::Mismatches(out))
            }
        }
        Command::Complement { rho, width, height } => {
            let rho: Partition = rho.parse()?;
            let c = complement(&rho, Rectangle::new(*width, *height))?;
            Ok(if g.json { to_json(&c) } else { format!("{c}\n") })
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if let Some(n) = cli.global.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (text, code) = match run(&cli) {
        Ok(text) => (text, 0),
        Err(Failure::Mismatches(text)) => (text, 3),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Computation(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(msg) = emit(&text, cli.global.out.as_ref()) {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
