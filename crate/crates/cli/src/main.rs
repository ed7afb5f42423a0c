use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use contactlab::algebra::{width_cap, WIDTH_CAP_ENV};
use contactlab::certificate::{sn_certificate, Certificate, Check, Entry};
use contactlab::constructions::SN_DEFAULT_CAP;
use contactlab::format::{parse_structure, representation_dot, structure_dot, LoadedStructure};
use contactlab::representation::{decide_representable, Mode, RepresentationOutcome};

mod corpus;
mod report;

#[derive(Parser)]
#[command(name = "contactlab", version, about = "Finite weak contact join-semilattices")]
struct Cli {
    /// Worker threads for the parallel searches (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Accepted for reproducible command lines; nothing is randomised.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build S_n and certify D1, D2_m for m < n, the failure of D2_n and
    /// the non-additive powerset extension.
    Sn {
        #[arg(long)]
        n: usize,
        /// Check D2_1 .. D2_depth (default: n).
        #[arg(long)]
        depth: Option<usize>,
        /// Directory for structure.json and certificate.json.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record per-check wall-clock times in the certificate.
        #[arg(long)]
        timings: bool,
    },
    /// Run one axiom checker on a structure file.
    Check {
        file: PathBuf,
        #[arg(value_enum)]
        axiom: AxiomArg,
        #[arg(long)]
        n: Option<usize>,
        /// Write the certificate here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        timings: bool,
    },
    /// Decide representability in a powerset algebra.
    Represent {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify every structure up to a carrier size and check the
    /// implications between the axioms.
    Enumerate {
        #[arg(long)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Directory for corpus.jsonl, summary.csv and implications.json.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Cross-check counts against the brute-force enumerators.
        #[arg(long)]
        oracle: bool,
    },
    /// Re-run every check recorded in a certificate.
    VerifyCertificate { file: PathBuf },
    /// Graphviz rendering of a structure, or of its representation.
    ExportDot {
        file: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AxiomArg {
    WeakContact,
    Additive,
    D1,
    D1Plus,
    D2,
    D2All,
    D2Minus,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Weak,
    Overlap,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Weak => Mode::Weak,
            ModeArg::Overlap => Mode::Overlap,
        }
    }
}

fn load(path: &Path) -> Result<LoadedStructure> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_structure(&text).with_context(|| format!("loading {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn sn_cap() -> usize {
    // an explicit width cap lifts the default limit
    if std::env::var_os(WIDTH_CAP_ENV).is_some() {
        (usize::BITS - 1 - width_cap().leading_zeros()) as usize
    } else {
        SN_DEFAULT_CAP
    }
}

fn run_sn(n: usize, depth: Option<usize>, out: Option<&Path>, timings: bool) -> Result<bool> {
    if n < 2 {
        bail!("--n must be at least 2");
    }
    let cap = sn_cap();
    if n > cap {
        bail!("--n {n} exceeds the cap of {cap}; raise {WIDTH_CAP_ENV} to allow it");
    }
    let depth = depth.unwrap_or(n);
    let (cert, loaded) = sn_certificate(n, depth, timings)?;
    println!(
        "S_{n}: carrier {} elements over {} points",
        loaded.structure.len(),
        loaded.structure.lattice().width()
    );
    report::print_entries(&cert);
    if let Some(dir) = out {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        write(&dir.join("structure.json"), &(loaded.to_json() + "\n"))?;
        write(&dir.join("certificate.json"), &cert.to_json())?;
    }
    let ok = cert.expectations_met();
    println!(
        "{}",
        if ok {
            "all facts verified"
        } else {
            "some facts did not verify"
        }
    );
    Ok(ok)
}

fn run_check(file: &Path, axiom: AxiomArg, n: Option<usize>, out: Option<&Path>, timings: bool) -> Result<bool> {
    let loaded = load(file)?;
    let (check, needs_n) = match axiom {
        AxiomArg::WeakContact => (Check::WeakContact, false),
        AxiomArg::Additive => (Check::Additive, false),
        AxiomArg::D1 => (Check::D1, false),
        AxiomArg::D1Plus => (Check::D1Plus, true),
        AxiomArg::D2 => (Check::D2, true),
        AxiomArg::D2All => (Check::D2All, false),
        AxiomArg::D2Minus => (Check::D2Minus, true),
    };
    let mut request = Entry::request(check);
    let mut parameters = BTreeMap::from([("axiom".to_string(), report::name(check).into())]);
    if needs_n {
        match n {
            Some(0) => bail!("--n must be positive"),
            Some(n) => {
                request = request.at(n);
                parameters.insert("n".into(), n.into());
            }
            None => bail!("this axiom needs --n"),
        }
    }
    let cert = Certificate::build("check", parameters, &loaded, vec![request], timings)?;
    report::print_entries(&cert);
    if let Some(path) = out {
        write(path, &cert.to_json())?;
    }
    Ok(cert.all_passed())
}

fn run_represent(file: &Path, mode: Mode, out: Option<&Path>) -> Result<bool> {
    let loaded = load(file)?;
    let check = match mode {
        Mode::Weak => Check::WeakRepresentation,
        Mode::Overlap => Check::OverlapRepresentation,
    };
    let parameters = BTreeMap::from([("mode".to_string(), mode.name().into())]);
    let cert = Certificate::build("represent", parameters, &loaded, vec![Entry::request(check)], false)?;
    report::print_entries(&cert);
    if let Some(rep) = &cert.representation {
        println!("ground points: {}", rep.ground_size);
        if let Some(cols) = &rep.columns {
            println!("columns: {cols:?}");
        }
        for (x, img) in rep.images.iter().enumerate() {
            println!("  {x} -> {img}");
        }
    }
    if let Some(path) = out {
        write(path, &cert.to_json())?;
    }
    Ok(cert.all_passed())
}

fn run_verify(file: &Path) -> Result<bool> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let cert = Certificate::from_json(&text)?;
    let report = cert.verify()?;
    for m in &report.mismatches {
        println!("mismatch: {m}");
    }
    println!(
        "{} entries: {}",
        report.entries,
        if report.ok() { "verified" } else { "NOT verified" }
    );
    Ok(report.ok())
}

fn run_export_dot(file: &Path, mode: Option<Mode>, out: Option<&Path>) -> Result<bool> {
    let loaded = load(file)?;
    let dot = match mode {
        None => structure_dot(&loaded),
        Some(mode) => match decide_representable(&loaded.structure, mode)? {
            RepresentationOutcome::Represented(rep) => representation_dot(&loaded, &rep),
            RepresentationOutcome::Refused(o) => {
                eprintln!("no {} representation: {}", mode.name(), serde_json::to_string(&o)?);
                return Ok(false);
            }
        },
    };
    match out {
        Some(path) => write(path, &dot)?,
        None => print!("{dot}"),
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    if let Some(threads) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    match cli.command {
        Command::Sn { n, depth, out, timings } => run_sn(n, depth, out.as_deref(), timings),
        Command::Check {
            file,
            axiom,
            n,
            out,
            timings,
        } => run_check(&file, axiom, n, out.as_deref(), timings),
        Command::Represent { file, mode, out } => run_represent(&file, mode.into(), out.as_deref()),
        Command::Enumerate {
            max_size,
            depth,
            out,
            oracle,
        } => corpus::run(max_size, depth, out.as_deref(), oracle),
        Command::VerifyCertificate { file } => run_verify(&file),
        Command::ExportDot { file, mode, out } => run_export_dot(&file, mode.map(Mode::from), out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
