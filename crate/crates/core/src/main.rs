use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use varpert::helium::{LoadStatus, MRange, PairEnumeration};
use varpert::report::{run, Command, Format, RunConfig};

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    Table1,
    Table2,
    Table3,
    Helium,
    Sweep,
}

#[derive(Clone, Copy, ValueEnum)]
enum MRangeArg {
    Paper,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum PairsArg {
    Unique,
    Ordered,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Markdown,
    Csv,
    Json,
}

/// Energy levels of the quartic oscillator and helium by perturbation
/// theory on a variationally optimized basis.
#[derive(Parser)]
#[command(name = "varpert", version)]
struct Cli {
    #[arg(value_enum)]
    command: Cmd,
    /// Comma-separated quartic couplings b (eV Å⁻⁴).
    #[arg(long = "b", value_delimiter = ',')]
    b: Option<Vec<f64>>,
    /// Levels per b in `sweep`.
    #[arg(long, default_value_t = 3)]
    levels: usize,
    /// Highest principal quantum number in the helium second-order sum.
    #[arg(long = "n-max", default_value_t = 7)]
    n_max: u32,
    #[arg(long = "m-range", value_enum, default_value = "paper")]
    m_range: MRangeArg,
    /// Shell-pair enumeration for the helium sum.
    #[arg(long, value_enum, default_value = "unique")]
    pairs: PairsArg,
    /// Basis size of the diagonalization oracle.
    #[arg(long = "exact-dim", default_value_t = 120)]
    exact_dim: usize,
    /// Energy bracket width of the shooting oracle (eV).
    #[arg(long = "exact-tol", default_value_t = 1e-10)]
    exact_tol: f64,
    #[arg(long, value_enum, default_value = "markdown")]
    format: FormatArg,
    /// JSON file overriding kappa_eV_A2, rydberg_eV, bohr_A.
    #[arg(long)]
    constants: Option<PathBuf>,
    /// Integral cache file for `helium`.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Compare against published values; exit 2 on any mismatch.
    #[arg(long)]
    check: bool,
}

impl Cli {
    fn config(self) -> RunConfig {
        RunConfig {
            command: match self.command {
                Cmd::Table1 => Command::Table1,
                Cmd::Table2 => Command::Table2,
                Cmd::Table3 => Command::Table3,
                Cmd::Helium => Command::Helium,
                Cmd::Sweep => Command::Sweep,
            },
            b_values: self.b,
            n_levels: self.levels,
            n_max_helium: self.n_max,
            m_range: match self.m_range {
                MRangeArg::Paper => MRange::Paper,
                MRangeArg::Full => MRange::Full,
            },
            pairs: match self.pairs {
                PairsArg::Unique => PairEnumeration::Unique,
                PairsArg::Ordered => PairEnumeration::Ordered,
            },
            exact_dim: self.exact_dim,
            exact_tol: self.exact_tol,
            output_format: match self.format {
                FormatArg::Markdown => Format::Markdown,
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            },
            constants_path: self.constants,
            cache_path: self.cache,
            check: self.check,
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // 2 is reserved for --check failures
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let cfg = cli.config();
    match run(&cfg) {
        Ok(outcome) => {
            print!("{}", outcome.render(cfg.output_format));
            if let Some((hits, misses, status)) = &outcome.cache {
                let opened = match status {
                    LoadStatus::Loaded(n) => format!("loaded {n} entries"),
                    LoadStatus::Missing => "new file".to_string(),
                    LoadStatus::Rebuilt(why) => format!("rebuilt ({why})"),
                };
                eprintln!("integral cache: {opened}, {hits} hits, {misses} misses");
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                varpert::Error::Convergence { .. } => 3,
                _ => 1,
            })
        }
    }
}
