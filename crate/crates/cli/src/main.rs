use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use swlink::alexander::{delta_lmp, delta_sym_sq};
use swlink::braid::{validate_candidate, BraidWord, StageStatus};
use swlink::homology::homology_report;
use swlink::swcalc::{compare_results, sw_closed_form, sw_pipeline, SwResult};
use swlink::sweep::{emit, parse_range, run_sweep, Format, Suite, SweepConfig};
use swlink::{Error, FamilyParams};

#[derive(Parser)]
#[command(
    name = "swlink",
    version,
    about = "Alexander polynomials, Seiberg-Witten basic classes and homology checks for the L(m,p) link family"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Alexander polynomial of L(m,p).
    Alexander {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u32,
        /// Print the symmetrized polynomial with squared variables instead.
        #[arg(long)]
        symmetrized: bool,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Compute the Seiberg-Witten invariant and its basic classes.
    Sw {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = SwPath::Both)]
        path: SwPath,
        #[arg(long, value_enum, default_value_t = OutFormat::Text)]
        format: OutFormat,
    },
    /// Run the check suites over a grid of parameters.
    Sweep {
        /// Range such as `2..8`; both ends inclusive.
        #[arg(long)]
        m: String,
        #[arg(long)]
        p: String,
        /// Comma-separated subset of sw, alexander, homology, braid.
        #[arg(long, default_value = "sw")]
        suites: String,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run check suites for a single parameter pair.
    Check {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = CheckSuite::All)]
        suite: CheckSuite,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Homology bookkeeping of the gluing, as JSON.
    Homology {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u32,
    },
    /// Check a braid word against L(m,p) with the Fox-calculus oracle.
    ValidateBraid {
        /// Signed generator indices, e.g. "1 2 -1 2".
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SwPath {
    Pipeline,
    Closed,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Csv,
    Json,
}

impl From<ReportFormat> for Format {
    fn from(f: ReportFormat) -> Self {
        match f {
            ReportFormat::Text => Format::Text,
            ReportFormat::Csv => Format::Csv,
            ReportFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckSuite {
    All,
    Sw,
    Alexander,
    Homology,
    Braid,
}

enum Failure {
    Check,
    Input(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_)
            | Error::InvalidConfig(_)
            | Error::BraidParse(_)
            | Error::InvalidColoring(_)
            | Error::IndexOutOfRange { .. } => Failure::Input(e.to_string()),
            _ => Failure::Other(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Other(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Alexander {
            m,
            p,
            symmetrized,
            format,
        } => alexander(FamilyParams::new(m, p)?, symmetrized, format),
        Command::Sw { m, p, path, format } => sw(FamilyParams::new(m, p)?, path, format),
        Command::Sweep {
            m,
            p,
            suites,
            format,
            out,
        } => {
            let suites = suites
                .split(',')
                .map(|s| s.trim().parse())
                .collect::<Result<Vec<Suite>, _>>()?;
            let mut cfg = SweepConfig::new(parse_range(&m)?, parse_range(&p)?, suites)?;
            cfg.format = format.into();
            cfg.out = out;
            sweep(&cfg)
        }
        Command::Check { m, p, suite, format } => {
            FamilyParams::new(m, p)?;
            let suites = match suite {
                CheckSuite::All => Suite::ALL.to_vec(),
                CheckSuite::Sw => vec![Suite::Sw],
                CheckSuite::Alexander => vec![Suite::Alexander],
                CheckSuite::Homology => vec![Suite::Homology],
                CheckSuite::Braid => vec![Suite::Braid],
            };
            let mut cfg = SweepConfig::new(m..=m, p..=p, suites)?;
            cfg.format = format.into();
            sweep(&cfg)
        }
        Command::Homology { m, p } => homology(FamilyParams::new(m, p)?),
        Command::ValidateBraid { word, m, p, json } => {
            let params = FamilyParams::new(m, p)?;
            validate_braid(&BraidWord::parse(m as usize + 1, &word)?, params, json)
        }
    }
}

fn print_json(v: &impl serde::Serialize) -> Outcome {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| Failure::Other(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn alexander(params: FamilyParams, symmetrized: bool, format: OutFormat) -> Outcome {
    let poly = if symmetrized {
        delta_sym_sq(params)?
    } else {
        delta_lmp(params)?
    };
    match format {
        OutFormat::Text => println!("{poly}"),
        OutFormat::Json => print_json(&json!({
            "m": params.m(),
            "p": params.p(),
            "symmetrized": symmetrized,
            "polynomial": poly,
        }))?,
    }
    Ok(())
}

fn sw_json(r: &SwResult) -> serde_json::Value {
    json!({ "polynomial": r.poly, "count": r.count(), "basic_classes": r.basic_classes })
}

fn sw(params: FamilyParams, path: SwPath, format: OutFormat) -> Outcome {
    let pipe = if path != SwPath::Closed {
        Some(sw_pipeline(params)?)
    } else {
        None
    };
    let closed = if path != SwPath::Pipeline {
        Some(sw_closed_form(params)?)
    } else {
        None
    };
    let cmp = match (&pipe, &closed) {
        (Some(a), Some(b)) => Some(compare_results(a, b)),
        _ => None,
    };
    match format {
        OutFormat::Text => {
            for (label, r) in [("pipeline", &pipe), ("closed", &closed)] {
                if let Some(r) = r {
                    println!("{label}: {} basic classes", r.count());
                    println!("  {}", r.poly);
                }
            }
            if let Some(c) = &cmp {
                let shift = c.translation.map_or("none".to_string(), |[a, b]| format!("({a}, {b})"));
                println!("support translation: {shift}; magnitudes match: {}", c.magnitude_match);
                println!("{}", if c.pass() { "agree" } else { "DISAGREE" });
            }
        }
        OutFormat::Json => print_json(&json!({
            "m": params.m(),
            "p": params.p(),
            "pipeline": pipe.as_ref().map(sw_json),
            "closed": closed.as_ref().map(sw_json),
            "comparison": cmp,
        }))?,
    }
    match cmp {
        Some(c) if !c.pass() => Err(Failure::Check),
        _ => Ok(()),
    }
}

fn sweep(cfg: &SweepConfig) -> Outcome {
    let report = run_sweep(cfg)?;
    match &cfg.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            emit(&report, cfg.format, &mut w)?;
        }
        None => emit(&report, cfg.format, &mut io::stdout().lock())?,
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn homology(params: FamilyParams) -> Outcome {
    let r = homology_report(params)?;
    print_json(&json!({
        "m": params.m(),
        "p": params.p(),
        "tc_class": r.tc_class.reduced.to_string(),
        "tc_equals_mu_b": r.tc_class.equals_mu_b,
        "xi_exponents": [r.xi_exponents.0, r.xi_exponents.1],
        "framing_det": r.framing_det,
        "kernel_rank": r.kernel_rank.as_ref().map(|k| k.kernel_rank),
        "primitivity": r.primitivity,
        "pass": r.pass(),
    }))?;
    if r.pass() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn validate_braid(b: &BraidWord, params: FamilyParams, as_json: bool) -> Outcome {
    let r = validate_candidate(b, params)?;
    if as_json {
        print_json(&r)?;
    } else {
        println!("word {} against L{params}", r.word);
        let s = &r.stages;
        for (name, st) in [
            ("strands", &s.strand_count),
            ("cycle type", &s.cycle_type),
            ("linking", &s.linking),
            ("alexander", &s.alexander),
        ] {
            let tag = match st.status {
                StageStatus::Pass => "pass",
                StageStatus::Fail => "FAIL",
                StageStatus::Skipped => "skip",
            };
            println!("  {name:<10} {tag:<4} {}", st.detail);
        }
        println!("{}", if r.verified() { "verified" } else { "rejected" });
    }
    if r.verified() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}
