mod cache;
mod verify;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use wreathcoh::cohomology::{betti_from_series, SpaceKind};
use wreathcoh::json::{to_json, to_json_pretty};
use wreathcoh::reps::{decompose, series_to_traces, ClassData};
use wreathcoh::trees::{enumerate_trees, tree_cycle_index};
use wreathcoh::Error;

use cache::{Cache, CacheKey};
use verify::Suite;

#[derive(Parser)]
#[command(
    name = "wreathcoh",
    version,
    about = "Equivariant cohomology series of wreath-product hyperplane complements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the truncated series of a space.
    Series {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Betti numbers of the degree-n space.
    Betti {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Graded trace of a conjugacy class, e.g. `--class 1:0^1,2:0^1`.
    Trace {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        class: String,
    },
    /// Multiplicities of the irreducible representations in degree n.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        /// Truncation of the series used; defaults to n.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Count the trees of degree n.
    Trees {
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        n: usize,
        /// Also print the cycle index.
        #[arg(long)]
        cycle_index: bool,
        /// Also draw every tree.
        #[arg(long)]
        render: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the self-check suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u64).range(2..))]
        max_degree: u64,
        /// Random cases per randomized check.
        #[arg(long, default_value_t = 20)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    r: u32,
    #[arg(long, default_value = "closed", value_parser = parse_space)]
    space: SpaceKind,
    /// Directory for cached series.
    #[arg(long, env = "WREATHCOH_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_space(s: &str) -> Result<SpaceKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Core(Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Common {
    fn cache(&self) -> Cache {
        Cache::new(self.cache_dir.clone())
    }
}

fn run(command: Command) -> Result<String, Failure> {
    let mut out = String::new();
    match command {
        Command::Series { common, max_degree, format } => {
            let series = common.cache().series(&CacheKey::new(common.r, common.space, max_degree))?;
            match format {
                Format::Text => out = series.render(),
                Format::Json => out = to_json_pretty(&series),
            }
        }
        Command::Betti { common, n, format } => {
            let series = common.cache().series(&CacheKey::new(common.r, common.space, n))?;
            let b = betti_from_series(&series, n, common.space)?;
            out = match format {
                Format::Text => b.iter().map(u64::to_string).collect::<Vec<_>>().join(" "),
                Format::Json => serde_json::to_string(&b).expect("integers serialize"),
            };
        }
        Command::Trace { common, n, class } => {
            let class = ClassData::parse(common.r, &class)?;
            if let Some(n) = n.filter(|&n| n != class.n()) {
                return Err(Error::Parse(format!("class has size {}, not n = {n}", class.n())).into());
            }
            let series = common.cache().series(&CacheKey::new(common.r, common.space, class.n()))?;
            out = series_to_traces(&series, class.n())?.values[&class].to_string();
        }
        Command::Decompose { common, n, degree, format } => {
            let degree = degree.unwrap_or(n);
            if degree < n {
                return Err(Error::Precondition(format!("--degree {degree} is below n = {n}")).into());
            }
            let series = common.cache().series(&CacheKey::new(common.r, common.space, degree))?;
            let mults = decompose(&series, common.r, n)?;
            out = match format {
                Format::Text => mults.iter().map(|(label, m)| format!("{label}: {m}")).collect::<Vec<_>>().join("\n"),
                Format::Json => {
                    let map: serde_json::Map<_, _> =
                        mults.iter().map(|(label, m)| (label.to_string(), m.to_string().into())).collect();
                    serde_json::to_string_pretty(&map).expect("strings serialize")
                }
            };
        }
        Command::Trees { r, n, cycle_index, render, format } => {
            if r == 0 {
                return Err(Error::Precondition("r must be positive".into()).into());
            }
            let trees = enumerate_trees(r, n)?;
            writeln!(out, "{}", trees.len()).unwrap();
            if cycle_index {
                let z = tree_cycle_index(r, n)?;
                let text = match format {
                    Format::Text => z.render(),
                    Format::Json => to_json(&z),
                };
                writeln!(out, "{text}").unwrap();
            }
            if render {
                for t in trees.iter() {
                    write!(out, "\n{}", t.render()).unwrap();
                }
            }
            out.truncate(out.trim_end().len());
        }
        Command::Verify { suite, max_degree, cases, seed } => {
            let opts = verify::Options { max_degree: max_degree as usize, cases, seed };
            let summary = verify::run(suite, &opts);
            if summary.consistency > 0 {
                return Err(Error::Consistency(format!(
                    "{} check(s) hit an internal inconsistency",
                    summary.consistency
                ))
                .into());
            }
            if summary.failed > 0 {
                eprintln!("{} check(s) failed", summary.failed);
                return Err(Failure::Verification);
            }
            return Ok(String::new());
        }
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Verification) => ExitCode::from(2),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Consistency(_) | Error::NotACharacter(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}
