//! catalog-gen: enumerate all groups of order ≤ 64 and export the catalog.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use catalog_gen::{enumerate_up_to_with, export_catalog};

#[derive(Parser)]
#[command(
    name = "catalog-gen",
    version,
    about = "Enumerate all groups of order ≤ 64 and export regular representations"
)]
struct Cli {
    /// Largest group order to enumerate.
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..=64))]
    max_order: u64,
    /// Output path; `-` writes to stdout.
    #[arg(long, default_value = "data/groups_le64.cat")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let by_order = enumerate_up_to_with(cli.max_order as usize, |order, classes| {
        eprintln!("order {order}: {classes} classes");
    });
    let total: usize = by_order.iter().map(Vec::len).sum();
    let result = if cli.out.as_os_str() == "-" {
        export_catalog(&by_order, &mut io::stdout().lock())
    } else {
        write_file(&by_order, &cli.out)
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    eprintln!("{total} groups -> {}", cli.out.display());
    ExitCode::SUCCESS
}

fn write_file(by_order: &[Vec<catalog_gen::Table>], path: &PathBuf) -> io::Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    let mut w = BufWriter::new(File::create(path)?);
    export_catalog(by_order, &mut w)?;
    w.flush()
}
