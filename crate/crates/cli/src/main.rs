use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use log::warn;

use cubetti::bench::{construct_slope, run_bench, to_csv};
use cubetti::grid::{load_grid, save_grid, VoxelGrid};
use cubetti::morse::table::{diff_against_orbits, diff_tables, parse_table_dump, table_dump};
use cubetti::morse::{chain_diagnostic, compute, ChainDiagnostic, Options, CLASS_TABLE};
use cubetti::oracle::betti_bruteforce;
use cubetti::oracle::local::generate_classification_table;
use cubetti::shapes::{generate, ShapeSpec};

/// Betti numbers of voxel bodies by a Morse sweep of x + y + z.
#[derive(Parser, Debug)]
#[command(name = "cubetti", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers and critical-point counts of a voxel file.
    Compute {
        /// Voxel file; `-` or nothing reads standard input.
        input: Option<PathBuf>,
        /// Also compute the homology of the full cubical complex and compare.
        #[arg(long)]
        oracle: bool,
        /// Write the critical points of both passes as CSV.
        #[arg(long, value_name = "PATH")]
        dump_critical: Option<PathBuf>,
        /// Sweep the input as given. It must already be unstacked and keep off
        /// the outer layer of the grid; otherwise the run fails.
        #[arg(long)]
        no_preprocess: bool,
    },
    /// Write a test body in voxel format.
    Gen {
        #[arg(value_enum)]
        shape: Shape,
        /// Box or random dimensions, `X,Y,Z`.
        #[arg(long, value_delimiter = ',', default_values_t = [3, 3, 3])]
        dims: Vec<usize>,
        /// Edge length of a shell or ring, cube side of two-components.
        #[arg(long)]
        size: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Regenerate the classification table and check it.
    Lut {
        /// Check this table dump instead of the built-in table.
        #[arg(long, value_name = "PATH")]
        against: Option<PathBuf>,
    },
    /// Time construction and rank on random bodies; CSV on standard output.
    Bench {
        /// Subdivided edge lengths.
        #[arg(long, value_delimiter = ',', default_values_t = [32, 64, 128])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Runs per size; the fastest is kept.
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Shape {
    Box,
    Shell,
    Ring,
    TwoComponents,
    Random,
}

fn read_input(input: Option<&Path>) -> anyhow::Result<VoxelGrid> {
    match input {
        None => load_stdin(),
        Some(p) if p == Path::new("-") => load_stdin(),
        Some(p) => {
            let file = fs::File::open(p).with_context(|| format!("opening {}", p.display()))?;
            load_grid(BufReader::new(file)).with_context(|| format!("reading {}", p.display()))
        }
    }
}

fn load_stdin() -> anyhow::Result<VoxelGrid> {
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    load_grid(text.as_bytes()).context("reading standard input")
}

/// Whether every comparison passed.
fn cmd_compute(
    input: Option<&Path>,
    oracle: bool,
    dump: Option<&Path>,
    no_preprocess: bool,
) -> anyhow::Result<bool> {
    let grid = read_input(input)?;
    let c = compute(&grid, Options { preprocess: !no_preprocess })?;
    let r = &c.report;
    let mut out = io::stdout().lock();
    writeln!(out, "{}", r.betti)?;
    writeln!(out, "critical: c0={} c1={} c2={} monkey={}", r.c0, r.c1, r.c2, r.monkey)?;
    if let Some(path) = dump {
        fs::write(path, c.critical_csv()).with_context(|| format!("writing {}", path.display()))?;
    }
    if !oracle {
        return Ok(true);
    }
    match chain_diagnostic(&c.sweep, &c.dual)? {
        ChainDiagnostic::Checked { zero: true } => {}
        ChainDiagnostic::Checked { zero: false } => warn!("boundary composition is nonzero under vertex identification"),
        ChainDiagnostic::Unidentified { unmatched } => {
            warn!("{unmatched} index-1 points of the two passes could not be matched by vertex")
        }
    }
    let brute = betti_bruteforce(&c.body)?;
    let ok = brute.betti == r.betti;
    if ok {
        writeln!(out, "oracle: match")?;
    } else {
        writeln!(out, "oracle: MISMATCH (brute force {})", brute.betti)?;
    }
    Ok(ok)
}

fn cmd_gen(shape: Shape, dims: &[usize], size: Option<usize>, density: f64, seed: u64) -> anyhow::Result<VoxelGrid> {
    let Ok(dims) = <[usize; 3]>::try_from(dims) else {
        bail!("--dims takes three values, got {}", dims.len());
    };
    let spec = match shape {
        Shape::Box => ShapeSpec::SolidBox { dims },
        Shape::Shell => ShapeSpec::Shell { n: size.unwrap_or(3) },
        Shape::Ring => ShapeSpec::Ring { n: size.unwrap_or(3) },
        Shape::TwoComponents => ShapeSpec::TwoComponents { side: size.unwrap_or(1) },
        Shape::Random => ShapeSpec::Random { dims, density, seed },
    };
    Ok(generate(&spec)?)
}

fn cmd_lut(against: Option<&Path>) -> anyhow::Result<bool> {
    let table = match against {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            parse_table_dump(&text).with_context(|| format!("parsing {}", p.display()))?
        }
        None => CLASS_TABLE,
    };
    let generated = generate_classification_table();
    let mut ok = true;
    for d in diff_tables(&generated, &table) {
        eprintln!("table differs from regenerated at {d}");
        ok = false;
    }
    for d in diff_against_orbits(&table) {
        eprintln!("table differs from listed types at {d}");
        ok = false;
    }
    print!("{}", table_dump(&table));
    Ok(ok)
}

fn cmd_bench(sizes: &[usize], density: f64, seed: u64, repeats: usize) -> anyhow::Result<()> {
    if sizes.is_empty() {
        bail!("no sizes given");
    }
    let rows = run_bench(sizes, density, seed, repeats)?;
    print!("{}", to_csv(&rows));
    match construct_slope(&rows) {
        Some(s) => println!("slope: {s:.3}"),
        None => println!("slope: n/a"),
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Compute { input, oracle, dump_critical, no_preprocess } => {
            cmd_compute(input.as_deref(), oracle, dump_critical.as_deref(), no_preprocess)
        }
        Command::Gen { shape, dims, size, density, seed, output } => {
            let text = save_grid(&cmd_gen(shape, &dims, size, density, seed)?);
            match output {
                Some(p) => fs::write(&p, text).with_context(|| format!("writing {}", p.display()))?,
                None => io::stdout().write_all(text.as_bytes())?,
            }
            Ok(true)
        }
        Command::Lut { against } => cmd_lut(against.as_deref()),
        Command::Bench { sizes, density, seed, repeats } => {
            cmd_bench(&sizes, density, seed, repeats)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
