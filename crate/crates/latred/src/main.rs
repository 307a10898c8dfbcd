use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num::BigRational;

use latred::bounds::{bounds_table, format_bound};
use latred::enumerate::{certified_box_bound, successive_minima, EnumerationBudget};
use latred::error::LatticeError;
use latred::experiment::{render_csv, render_text, run_experiment, ExperimentConfig};
use latred::generate::LatticeKind;
use latred::io::{read_basis, render_report, write_basis, write_report};
use latred::oracle::brute_force_minima;
use latred::reduce::{
    build_report, default_delta, hkz_reduce, is_strongly_reduced, lll_reduce, size_reduce,
    strong_reduce, ReductionMethod,
};

#[derive(Parser)]
#[command(
    name = "latred",
    about = "Exact-arithmetic lattice reduction: strong reduction, HKZ/LLL baselines, minima certificates, defect bounds",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArg {
    /// Enumeration budget in search-tree nodes.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce a basis file and optionally write the result and a report.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        /// strong | hkz | lll | size
        #[arg(long)]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
        /// Lovasz parameter for the LLL preprocessor, as p/q.
        #[arg(long, default_value = "3/4")]
        delta: String,
        #[command(flatten)]
        budget: BudgetArg,
        /// Allow rank above the enumeration comfort zone (12).
        #[arg(long)]
        force: bool,
    },
    /// Compute the successive minima certificate of a basis file.
    Minima {
        #[arg(long = "in")]
        input: PathBuf,
        /// Cross-check against the exhaustive box-scan oracle.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        budget: BudgetArg,
        #[arg(long)]
        force: bool,
    },
    /// Verify the two strong-reduction properties of a basis file.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
        #[arg(long)]
        force: bool,
    },
    /// Print the defect bound table for the given ranks.
    Bounds {
        /// Ranks as a list/range expression, e.g. 4..10,15,20,30.
        #[arg(long)]
        n: String,
        /// Emit comma-separated rows instead of the aligned table.
        #[arg(long)]
        csv: bool,
    },
    /// Run a seeded reduction experiment batch.
    Experiment {
        /// uniform | knapsack
        #[arg(long, default_value = "uniform")]
        kind: String,
        /// Single dimension; omitted means the default sweep 2..=7.
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, default_value_t = 10)]
        bound: i64,
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated subset of strong,hkz,lll.
        #[arg(long, default_value = "strong")]
        methods: String,
        /// Write per-record CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
        #[arg(long)]
        force: bool,
    },
}

const USAGE_EXIT: u8 = 2;
const CHECK_FAILED_EXIT: u8 = 1;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(USAGE_EXIT)
        }
    }
}

fn guard_rank(rank: usize, force: bool) -> Result<(), LatticeError> {
    if rank > 12 && !force {
        return Err(LatticeError::InvalidParameter(format!(
            "rank {rank} exceeds the supported enumeration range (12); pass --force to override"
        )));
    }
    if rank > 10 {
        eprintln!("warning: rank {rank} enumeration is exponential; expect long runtimes");
    }
    Ok(())
}

fn parse_delta(s: &str) -> Result<BigRational, LatticeError> {
    s.parse::<BigRational>()
        .map_err(|e| LatticeError::Parse(format!("bad delta '{s}': {e}")))
}

fn parse_rank_list(expr: &str) -> Result<Vec<usize>, LatticeError> {
    let mut out = Vec::new();
    for part in expr.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        if let Some((a, b)) = part.split_once("..") {
            let lo: usize = a
                .trim()
                .parse()
                .map_err(|e| LatticeError::Parse(format!("bad rank '{a}': {e}")))?;
            let hi: usize = b
                .trim()
                .parse()
                .map_err(|e| LatticeError::Parse(format!("bad rank '{b}': {e}")))?;
            if lo == 0 || hi < lo {
                return Err(LatticeError::Parse(format!("bad range '{part}'")));
            }
            out.extend(lo..=hi);
        } else {
            let n: usize = part
                .parse()
                .map_err(|e| LatticeError::Parse(format!("bad rank '{part}': {e}")))?;
            if n == 0 {
                return Err(LatticeError::Parse("rank must be >= 1".into()));
            }
            out.push(n);
        }
    }
    if out.is_empty() {
        return Err(LatticeError::Parse("no ranks given".into()));
    }
    Ok(out)
}

fn parse_methods(expr: &str) -> Result<Vec<ReductionMethod>, LatticeError> {
    expr.split(',').map(|m| ReductionMethod::parse(m.trim())).collect()
}

fn run(cli: Cli) -> Result<ExitCode, LatticeError> {
    match cli.command {
        Command::Reduce { input, method, out, report, delta, budget, force } => {
            let basis = read_basis(&input)?;
            guard_rank(basis.rank(), force)?;
            let method = ReductionMethod::parse(&method)?;
            let budget = EnumerationBudget::new(budget.budget);
            let delta = parse_delta(&delta)?;
            let rep = match method {
                ReductionMethod::Strong => strong_reduce(&basis, &budget)?,
                ReductionMethod::Hkz => {
                    let (b, u) = hkz_reduce(&basis, &budget)?;
                    build_report(method, &basis, &b, u, &budget)?
                }
                ReductionMethod::Lll => {
                    let (b, u) = lll_reduce(&basis, &delta)?;
                    build_report(method, &basis, &b, u, &budget)?
                }
                ReductionMethod::Size => {
                    let (b, u) = size_reduce(&basis);
                    build_report(method, &basis, &b, u, &budget)?
                }
            };
            if let Some(path) = out {
                write_basis(&path, &rep.output_basis)?;
            }
            if let Some(path) = report {
                write_report(&path, &rep)?;
            }
            print!("{}", render_report(&rep));
            if method == ReductionMethod::Strong && !(rep.property1_ok && rep.property2_ok) {
                eprintln!("strong reduction postcondition failed");
                return Ok(ExitCode::from(CHECK_FAILED_EXIT));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Minima { input, oracle, budget, force } => {
            let basis = read_basis(&input)?;
            guard_rank(basis.rank(), force)?;
            let budget = EnumerationBudget::new(budget.budget);
            let cert = successive_minima(&basis, &budget)?;
            let lambda: Vec<String> = cert.lambda_sq.iter().map(|x| x.to_string()).collect();
            println!("lambda_sq {}", lambda.join(" "));
            for (i, v) in cert.vectors.iter().enumerate() {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                println!("v{} {}", i + 1, parts.join(" "));
            }
            if oracle {
                let (reduced, _) = lll_reduce(&basis, &default_delta())?;
                let bound = certified_box_bound(&reduced)?;
                let reference = brute_force_minima(&reduced, bound)?;
                if reference.lambda_sq == cert.lambda_sq {
                    println!("oracle agreement: yes (box bound {bound})");
                } else {
                    let got: Vec<String> =
                        reference.lambda_sq.iter().map(|x| x.to_string()).collect();
                    println!("oracle agreement: NO (oracle lambda_sq {})", got.join(" "));
                    return Ok(ExitCode::from(CHECK_FAILED_EXIT));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { input, budget, force } => {
            let basis = read_basis(&input)?;
            guard_rank(basis.rank(), force)?;
            let budget = EnumerationBudget::new(budget.budget);
            let check = is_strongly_reduced(&basis, &budget)?;
            println!("property1_ok {}", check.property1_ok);
            println!("property2_ok {}", check.property2_ok);
            if check.property1_ok && check.property2_ok {
                println!("strongly reduced: yes");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("strongly reduced: no");
                Ok(ExitCode::from(CHECK_FAILED_EXIT))
            }
        }
        Command::Bounds { n, csv } => {
            let ranks = parse_rank_list(&n)?;
            let rows = bounds_table(&ranks)?;
            if csv {
                println!("n,f_H,f_S,k_star,beta_n,gamma_upper,theorem2_bound");
                for r in rows {
                    println!(
                        "{},{},{},{},{:.3},{:.3},{}",
                        r.n,
                        format_bound(r.f_h),
                        format_bound(r.f_s),
                        r.k_star,
                        r.beta_n,
                        r.gamma_upper,
                        format_bound(r.theorem2)
                    );
                }
            } else {
                println!(
                    "{:<4} {:<14} {:<14} {:<6} {:<10} {:<10} {:<14}",
                    "n", "f_H", "f_S", "k*", "beta_n", "gamma_up", "theorem2"
                );
                for r in rows {
                    println!(
                        "{:<4} {:<14} {:<14} {:<6} {:<10.3} {:<10.3} {:<14}",
                        r.n,
                        format_bound(r.f_h),
                        format_bound(r.f_s),
                        r.k_star,
                        r.beta_n,
                        r.gamma_upper,
                        format_bound(r.theorem2)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Experiment { kind, dim, bound, trials, seed, methods, csv, budget, force } => {
            let kind = LatticeKind::parse(&kind)?;
            let methods = parse_methods(&methods)?;
            if bound < 1 {
                return Err(LatticeError::InvalidParameter("bound must be >= 1".into()));
            }
            let dims: Vec<usize> = match dim {
                Some(d) => {
                    if d == 0 {
                        return Err(LatticeError::InvalidParameter("dim must be >= 1".into()));
                    }
                    vec![d]
                }
                None => (2..=7).collect(),
            };
            for &d in &dims {
                guard_rank(d, force)?;
            }
            let budget = EnumerationBudget::new(budget.budget);
            let mut all_passed = true;
            let mut csv_out = String::new();
            for (i, &d) in dims.iter().enumerate() {
                let config = ExperimentConfig {
                    kind,
                    dim: d,
                    entry_bound: bound,
                    seed,
                    trials,
                    methods: methods.clone(),
                    budget,
                };
                let report = run_experiment(&config)?;
                print!("{}", render_text(&report));
                all_passed &= report.passed();
                let rendered = render_csv(&report);
                if i == 0 {
                    csv_out.push_str(&rendered);
                } else {
                    // Drop the duplicate header for subsequent dims.
                    if let Some(pos) = rendered.find('\n') {
                        csv_out.push_str(&rendered[pos + 1..]);
                    }
                }
            }
            if let Some(path) = csv {
                std::fs::write(&path, csv_out)?;
            }
            if all_passed {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(CHECK_FAILED_EXIT))
            }
        }
    }
}
