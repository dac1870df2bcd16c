use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use endotriv::census::{endotrivial_census, CensusOptions, ScanMode, DEFAULT_BUDGET};
use endotriv::endotrivial::{is_endotrivial, syzygy, syzygy_degree, EndoClass};
use endotriv::hopf::PBWAlgebra;
use endotriv::repmod::{self, ModuleFile, ModuleRep};
use endotriv::repro;
use endotriv::structure::{decompose, strip_projectives};
use endotriv::{Error, Result};

const EXIT_USAGE: u8 = 64;

/// Exact computations with modules over restricted enveloping algebras.
#[derive(Parser)]
#[command(name = "endotriv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and inspect algebras.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Operations on module files.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// The n-th syzygy of a module (negative n for cosyzygies).
    Syzygy {
        #[arg(long)]
        module: PathBuf,
        #[arg(short = 'n', allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Endotrivial modules and their classes.
    #[command(subcommand)]
    Endo(EndoCmd),
    /// Enumerate endotrivial modules of a fixed dimension up to isomorphism.
    Census(CensusArgs),
    /// Reproduction suites.
    #[command(subcommand)]
    Repro(ReproCmd),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Build a preset, print a summary and optionally write its presentation.
    Build {
        #[arg(long)]
        preset: String,
        #[arg(short = 'p')]
        p: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Validate a module file.
    Check { file: PathBuf },
    /// Tensor product of two modules.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Linear dual.
    Dual {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Remove all projective summands.
    Strip {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose into indecomposable summands.
    Decompose {
        file: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum EndoCmd {
    /// Test whether a module is endotrivial.
    Check { file: PathBuf },
    /// Sum of two endotrivial classes: the tensor product with projectives removed.
    Add {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The n with strip(M) ≅ Ω^n(k), searching |n| <= bound.
    Degree {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    preset: String,
    #[arg(short = 'p')]
    p: u32,
    #[arg(long)]
    dim: usize,
    /// Scan every candidate tuple (the default).
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    /// Draw K random candidate tuples instead.
    #[arg(long, value_name = "K")]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of candidates an exhaustive scan may visit.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Scan every matrix even where a Jordan-form reduction applies.
    #[arg(long)]
    no_orbit_reduction: bool,
}

#[derive(Subcommand)]
enum ReproCmd {
    /// Minimal resolutions of k and L(p-2) over u(sl2).
    Sl2Table {
        #[arg(short = 'p')]
        p: u32,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The second syzygy of k over the restricted Borel of sl3 at p = 2.
    Sl3Omega2 {
        #[arg(long)]
        emit_dot: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Algebra(AlgebraCmd::Build { preset, p, out }) => {
            let alg = PBWAlgebra::preset(&preset, p)?;
            if let Some(path) = out {
                std::fs::write(path, alg.presentation().to_json())?;
            }
            let pim_dims: Option<Vec<usize>> = alg.pims().ok().map(|ps| ps.iter().map(|x| x.dim()).collect());
            emit(&json!({
                "algebra": preset,
                "p": p,
                "dim": alg.dim(),
                "lie_dim": alg.ngens(),
                "class": format!("{:?}", alg.class()),
                "pim_dims": pim_dims,
                "presentation": alg.presentation().to_file(),
            }));
            Ok(0)
        }
        Command::Module(m) => run_module(m),
        Command::Syzygy { module, n, out } => {
            let m = load(&module)?;
            output_module(&syzygy(&m, n)?, out.as_deref())
        }
        Command::Endo(e) => run_endo(e),
        Command::Census(args) => {
            let alg = PBWAlgebra::preset(&args.preset, args.p)?;
            let mut opts = CensusOptions { seed: args.seed, budget: args.budget, ..CensusOptions::default() };
            if let Some(k) = args.sample {
                opts.mode = ScanMode::Sampled;
                opts.samples = k;
            }
            opts.orbit_reduction = !args.no_orbit_reduction;
            let report = endotrivial_census(&alg, args.dim, &opts)?;
            eprintln!("{} endotrivial class(es) of dimension {}", report.class_count, report.n);
            emit(&serde_json::to_value(&report)?);
            Ok(if report.indeterminate_points > 0 { 2 } else { 0 })
        }
        Command::Repro(ReproCmd::Sl2Table { p, max_n, out }) => {
            let report = repro::sl2_table(p, max_n)?;
            finish_report(&report, out.as_deref())
        }
        Command::Repro(ReproCmd::Sl3Omega2 { emit_dot, seed, out }) => {
            let (report, dot) = repro::sl3_omega2(seed)?;
            if let Some(path) = emit_dot {
                std::fs::write(path, dot)?;
            }
            finish_report(&report, out.as_deref())
        }
    }
}

fn run_module(cmd: ModuleCmd) -> Result<u8> {
    match cmd {
        ModuleCmd::Check { file } => {
            let raw = ModuleFile::from_json(&std::fs::read_to_string(&file)?)?;
            match raw.to_module(file.parent()) {
                Ok(m) => {
                    emit(&json!({ "valid": true, "dim": m.dim(), "graded": m.is_graded() }));
                    Ok(0)
                }
                Err(Error::InvalidModule(reason)) => {
                    emit(&json!({ "valid": false, "reason": reason }));
                    Ok(2)
                }
                Err(e) => Err(e),
            }
        }
        ModuleCmd::Tensor { a, b, out } => output_module(&repmod::tensor(&load(&a)?, &load(&b)?)?, out.as_deref()),
        ModuleCmd::Dual { file, out } => output_module(&repmod::dual(&load(&file)?), out.as_deref()),
        ModuleCmd::Strip { file, out } => {
            let (s, removed) = strip_projectives(&load(&file)?)?;
            eprintln!("removed projective summands: {removed:?}");
            output_module(&s, out.as_deref())
        }
        ModuleCmd::Decompose { file, seed } => {
            let dec = decompose(&load(&file)?, seed)?;
            let summands: Vec<Value> = dec
                .summands
                .iter()
                .map(|s| json!({ "dim": s.module.dim(), "certified": s.certified }))
                .collect();
            emit(&json!({ "dims": dec.dims(), "certified": dec.certified, "summands": summands }));
            Ok(if dec.certified { 0 } else { 2 })
        }
    }
}

fn run_endo(cmd: EndoCmd) -> Result<u8> {
    match cmd {
        EndoCmd::Check { file } => {
            let m = load(&file)?;
            let endo = is_endotrivial(&m)?;
            emit(&json!({ "dim": m.dim(), "endotrivial": endo }));
            Ok(0)
        }
        EndoCmd::Add { a, b, out } => {
            let sum = EndoClass::new(&load(&a)?)?.add(&EndoClass::new(&load(&b)?)?)?;
            output_module(sum.representative(), out.as_deref())
        }
        EndoCmd::Degree { file, bound } => {
            let degree = syzygy_degree(&load(&file)?, bound)?;
            emit(&json!({ "bound": bound, "degree": degree }));
            Ok(0)
        }
    }
}

fn load(path: &Path) -> Result<ModuleRep> {
    ModuleFile::load(path)
}

/// Writes to stdout, ignoring a closed pipe.
fn print_out(text: &str) {
    let _ = writeln!(std::io::stdout(), "{text}");
}

fn emit(v: &Value) {
    print_out(&serde_json::to_string_pretty(v).expect("json serializes"));
}

fn output_module(m: &ModuleRep, out: Option<&Path>) -> Result<u8> {
    match out {
        Some(path) => {
            ModuleFile::save(m, path)?;
            emit(&json!({ "dim": m.dim(), "graded": m.is_graded(), "out": path.display().to_string() }));
        }
        None => print_out(&ModuleFile::from_module(m).to_json()),
    }
    Ok(0)
}

fn finish_report(report: &repro::ReproReport, out: Option<&Path>) -> Result<u8> {
    eprint!("{}", report.summary());
    match out {
        Some(path) => std::fs::write(path, report.to_json() + "\n")?,
        None => print_out(&report.to_json()),
    }
    Ok(report.overall.exit_code() as u8)
}
