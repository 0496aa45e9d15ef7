//! powmap: exact cycle structure of the power map x ↦ x^a on finite groups.

use std::error::Error;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use power_map::formulas::{average_period_cyclic, n_from_spectrum};
use power_map::graph::{self, DotStyle};
use power_map::groups::GroupSpec;
use power_map::harness::{
    scan_cyclic_average, summarize, verify_conjecture, verify_suite, write_scan_csv, Suite,
};
use power_map::spectrum::OrderSpectrum;

#[derive(Parser)]
#[command(
    name = "powmap",
    version,
    about = "Exact cycle structure of the power map x ↦ x^a on finite groups"
)]
struct Cli {
    /// Worker threads for scans and suites (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=1024))]
    jobs: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

/// Group descriptor plus exponent, shared by the single-group subcommands.
#[derive(Args)]
struct Target {
    /// Group descriptor: cyclic:N, dihedral:N, symmetric:N, sl2:Q,
    /// heisenberg:P, product:SPEC+SPEC, catalog:FILE#NAME.
    #[arg(long)]
    group: String,
    /// Exponent of the power map.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    a: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the number of cycles of x ↦ x^a on the group.
    Count {
        #[command(flatten)]
        target: Target,
    },
    /// Print the element-order spectrum of the group.
    Spectrum {
        /// Group descriptor (see `count --help`).
        #[arg(long)]
        group: String,
    },
    /// Build the functional graph; print component data, optionally DOT.
    Graph {
        #[command(flatten)]
        target: Target,
        /// Write DOT here; `-` selects stdout (and silences the summary).
        #[arg(long)]
        dot: Option<String>,
        /// Render edges undirected (multigraph view).
        #[arg(long)]
        undirected: bool,
    },
    /// Print the average eventual cycle length over all elements.
    Period {
        #[command(flatten)]
        target: Target,
    },
    /// Average the cyclic-group cycle count over all n ≤ max.
    Scan {
        /// Exponent of the power map.
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        a: u64,
        /// Scan upper bound (inclusive).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        /// Write per-n CSV rows here; `-` selects stdout.
        #[arg(long)]
        csv: Option<String>,
    },
    /// Run named verification suites (default: all nine).
    Verify {
        /// Suite name, repeatable: dihedral, sl2, product, nilpotent,
        /// majorization, extremal, period, tails, certificate.
        #[arg(long)]
        suite: Vec<String>,
        /// Override the suite's group-size range.
        #[arg(long)]
        max: Option<u64>,
        /// Override the suite's largest exponent.
        #[arg(long)]
        a_max: Option<u64>,
    },
    /// Check the cyclic-minimality inequality over a group catalog.
    Conjecture {
        /// Catalog file: one `name order k gens…` line per group.
        #[arg(long)]
        catalog: PathBuf,
        /// Largest exponent checked (from 2 up).
        #[arg(long, default_value_t = 20)]
        a_max: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global();
        if let Err(e) = pool {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(counterexamples) => ExitCode::from(u8::from(counterexamples)),
        // Downstream closed the pipe (e.g. `powmap graph --dot - | head`).
        Err(e)
            if e.downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Runs one subcommand; Ok(true) means a counterexample was found.
fn run(command: Command) -> Result<bool, Box<dyn Error>> {
    match command {
        Command::Count { target } => {
            let spec = GroupSpec::parse(&target.group)?;
            let count = n_from_spectrum(&OrderSpectrum::of_spec(&spec)?, target.a)?;
            println!("N = {}", count.value);
            Ok(false)
        }
        Command::Spectrum { group } => {
            let s = OrderSpectrum::of_spec(&GroupSpec::parse(&group)?)?;
            println!("|G| = {}", s.group_order());
            for (d, w) in s.counts() {
                println!("w({d}) = {w}");
            }
            Ok(false)
        }
        Command::Graph {
            target,
            dot,
            undirected,
        } => {
            let g = GroupSpec::parse(&target.group)?.realize()?;
            let pg = graph::build(&g, target.a);
            let d = graph::decompose(&pg);
            let style = if undirected {
                DotStyle::UndirectedMultigraph
            } else {
                DotStyle::Directed
            };
            let to_stdout = dot.as_deref() == Some("-");
            if let Some(path) = dot {
                if to_stdout {
                    graph::export_dot(&pg, &d, style, &mut io::stdout().lock())?;
                } else {
                    let mut w = BufWriter::new(File::create(path)?);
                    graph::export_dot(&pg, &d, style, &mut w)?;
                    w.flush()?;
                }
            }
            if !to_stdout {
                println!("components = {}", d.component_count());
                println!("cycle lengths = {:?}", d.cycle_lengths());
            }
            Ok(false)
        }
        Command::Period { target } => {
            let spec = GroupSpec::parse(&target.group)?;
            // Cyclic groups get the divisor-sum evaluation; it reaches far
            // past the realization budget.
            let average = match spec {
                GroupSpec::Cyclic(n) if n >= 1 => average_period_cyclic(n, target.a),
                _ => {
                    let pg = graph::build(&spec.realize()?, target.a);
                    graph::average_period(&graph::decompose(&pg))
                }
            };
            println!("{average}");
            Ok(false)
        }
        Command::Scan { a, max, csv } => {
            let scan = scan_cyclic_average(max, a)?;
            match csv.as_deref() {
                Some("-") => {
                    write_scan_csv(&scan.rows, io::stdout().lock())?;
                    // Keep stdout pure CSV; the headline goes to stderr.
                    eprintln!("average = {}", scan.average);
                }
                Some(path) => {
                    let mut w = BufWriter::new(File::create(path)?);
                    write_scan_csv(&scan.rows, &mut w)?;
                    w.flush()?;
                    println!("average = {}", scan.average);
                }
                None => println!("average = {}", scan.average),
            }
            Ok(false)
        }
        Command::Verify { suite, max, a_max } => {
            let suites: Vec<Suite> = if suite.is_empty() {
                Suite::ALL.to_vec()
            } else {
                suite
                    .iter()
                    .map(|name| name.parse())
                    .collect::<Result<_, _>>()?
            };
            let reports = suites
                .into_iter()
                .map(|s| verify_suite(s, max, a_max))
                .collect::<Result<Vec<_>, _>>()?;
            print!("{}", summarize(&reports));
            Ok(reports.iter().any(|r| !r.passed()))
        }
        Command::Conjecture { catalog, a_max } => {
            let file = File::open(&catalog)
                .map_err(|e| format!("cannot open {}: {e}", catalog.display()))?;
            let report = verify_conjecture(BufReader::new(file), a_max)?;
            let failed = !report.passed();
            print!("{}", summarize(&[report]));
            Ok(failed)
        }
    }
}
