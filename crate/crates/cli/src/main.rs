use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cmreg::analysis::Family;
use cmreg::corpus::run_corpus;
use cmreg::explore::explore;
use cmreg::oracle::oracle_check;
use cmreg::{analyze, parse_instance, AnalysisReport, AnalyzeOptions, Error, HilbertSeries};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(name = "cmreg", version, about = "Regularity of associated graded modules in dimension one")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one instance file.
    Analyze {
        file: PathBuf,
        #[arg(long, conflicts_with = "table")]
        json: bool,
        #[arg(long)]
        table: bool,
        /// Report at least this many degrees.
        #[arg(long)]
        window: Option<usize>,
        /// Evaluate the extremal characterizations at this b.
        #[arg(long)]
        declared_b: Option<u32>,
    },
    /// Run the built-in example table.
    Corpus {
        #[arg(long)]
        json: bool,
    },
    /// Check every invariant on seeded random instances.
    Explore {
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = FamilyArg::Mixed)]
        family: FamilyArg,
        #[arg(long)]
        json: bool,
    },
    /// Inspect a Hilbert series Q(z)/(1-z)^r.
    Series {
        /// Comma-separated numerator coefficients c0,c1,...
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        numerator: Vec<BigInt>,
        #[arg(long)]
        dim: u32,
        /// Number of Hilbert function values to print.
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Compare engine lengths and one colon with brute-force enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Semigroup,
    Bivariate,
    Mixed,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let Error::InvariantViolation { instance, .. } = &e {
                eprintln!("replay with this instance file:\n{instance}");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read_instance(file: &PathBuf) -> Result<cmreg::Instance, Error> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::InvalidInstance(format!("cannot read {}: {e}", file.display())))?;
    parse_instance(&text)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn run(command: Command) -> Result<String, Error> {
    match command {
        Command::Analyze { file, json: as_json, table: _, window, declared_b } => {
            let instance = read_instance(&file)?;
            let report = analyze(&instance, &AnalyzeOptions { window, declared_b })?;
            Ok(if as_json { json(&report) } else { table(&report) })
        }
        Command::Corpus { json: as_json } => {
            let table = run_corpus()?;
            let out = if as_json { json(&table) } else { format!("{table}\n") };
            if table.all_pass() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Error::InvariantViolation {
                    instance: String::new(),
                    property: "corpus rows disagree with their expected values".into(),
                })
            }
        }
        Command::Explore { count, seed, family, json: as_json } => {
            let family = match family {
                FamilyArg::Semigroup => Some(Family::Semigroup),
                FamilyArg::Bivariate => Some(Family::Bivariate),
                FamilyArg::Mixed => None,
            };
            let summary = explore(count, seed, family)?;
            Ok(if as_json { json(&summary) } else { format!("{summary}\n") })
        }
        Command::Series { numerator, dim, terms } => {
            let series = HilbertSeries::new(numerator, dim);
            let mut out = String::new();
            writeln!(out, "series      {series}").unwrap();
            let coeffs = series.hilbert_coefficients(series.dim() as usize + 1);
            for (i, e) in coeffs.iter().enumerate() {
                writeln!(out, "e{i}          {e}").unwrap();
            }
            writeln!(out, "postulation {}", series.postulation()).unwrap();
            let values: Vec<String> = (0..terms as i64).map(|t| series.expand(t).to_string()).collect();
            writeln!(out, "h           {}", values.join(" ")).unwrap();
            Ok(out)
        }
        Command::Oracle { file, n_max } => {
            let instance = read_instance(&file)?;
            oracle_check(&instance, n_max)?;
            Ok(format!("oracle agrees for n <= {n_max}\n"))
        }
    }
}

fn list(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn table(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "{}", r.input.trim_end()).unwrap();
    writeln!(w).unwrap();
    writeln!(w, "series       {}", r.series()).unwrap();
    writeln!(w, "e0 e1        {} {}", r.e0, r.e1).unwrap();
    writeln!(w, "b            {} (classified at {})", r.b, r.classifier_b).unwrap();
    writeln!(w, "depth M      {}  l(L) = {}", r.depth_m, r.ell_l).unwrap();
    writeln!(w, "p            {}", r.p).unwrap();
    writeln!(w, "a0 a1        {} {}", r.a0, r.a1).unwrap();
    writeln!(w, "reg reg1     {} {}", r.reg, r.reg1).unwrap();
    writeln!(w, "G CM         {}", r.g_cm).unwrap();
    write!(w, "bound        {}", r.bound_main).unwrap();
    if let Some(cm) = r.bound_cm {
        write!(w, "  (e0 - b = {cm})").unwrap();
    }
    writeln!(w).unwrap();
    if let Some(f) = r.flags.cm_extremal {
        writeln!(w, "CM extremal  {} {} {} {}", f.i, f.ii, f.iii, f.iv).unwrap();
    }
    if let Some(f) = r.flags.rv {
        writeln!(w, "e1 maximum   {} (attained: {})", f.max_e1, f.extremal).unwrap();
    }
    if let Some(f) = r.flags.cm_graded {
        writeln!(w, "reg=e0-h(0)  {} {} {}", f.a, f.b, f.c).unwrap();
    }
    if let Some(f) = r.flags.depth0_extremal {
        writeln!(w, "extremal     {} {}", f.i, f.ii).unwrap();
    }
    if let Some(additive) = r.flags.reg_additive {
        writeln!(w, "reg additive {additive}").unwrap();
    }
    if let Some(q) = &r.quotient {
        writeln!(w, "M/L          e1 = {}, reg = {}", q.e1, q.reg).unwrap();
    }
    writeln!(w).unwrap();
    writeln!(w, "   t     h    H0    H1").unwrap();
    writeln!(w, "  -1     0     0 {:>5}", r.h1[0]).unwrap();
    for t in 0..r.h.len() {
        writeln!(w, "{:>4} {:>5} {:>5} {:>5}", t, r.h[t], r.h0[t], r.h1[t + 1]).unwrap();
    }
    if let Some(k) = &r.k_profile {
        writeln!(w, "K            {}", list(k)).unwrap();
    }
    out
}
