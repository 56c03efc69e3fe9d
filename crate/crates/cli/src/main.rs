//! `ocycle`: generate, verify and convert Steiner triple systems with
//! 1-overlap cycles.
//!
//! Exit codes: 0 clean, 1 validation defect, 2 usage or parse error.

mod bundle;
mod routes;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use ocycle_core::format::{parse_cycle_file, parse_sts, write_ocycle, write_ucycle, CycleFile};
use ocycle_core::verify::{is_af, DEFAULT_BUDGET};
use ocycle_core::{compress, decompress, validate_ocycle, validate_sts, OcycleReport, OverlapCycle, StsReport};
use serde::Serialize;

use routes::Route;

#[derive(Parser)]
#[command(name = "ocycle", version, about = "Steiner triple systems with 1-overlap cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an STS of the given order with an ocycle and write a bundle.
    Generate(GenerateArgs),
    /// Check an STS file, and optionally an ocycle over it.
    Verify(VerifyArgs),
    /// Convert between the full and compressed cycle formats.
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct GenerateArgs {
    /// Order of the system; omit with --sweep.
    #[arg(required_unless_present = "sweep", conflicts_with = "sweep")]
    order: Option<u32>,
    #[arg(long, value_enum, default_value_t = Route::Af)]
    route: Route,
    /// Output directory. A sweep writes one `vNNN` subdirectory per order.
    #[arg(long)]
    out: PathBuf,
    /// Inclusive range `A..B`; inadmissible orders in it are skipped.
    #[arg(long, value_parser = parse_range)]
    sweep: Option<(u32, u32)>,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    sts: PathBuf,
    /// An `OCYCLE` or `UCYCLE2` file over the system.
    ocycle: Option<PathBuf>,
    /// Also check that the system has no nontrivial automorphism.
    #[arg(long)]
    af: bool,
    /// Node budget for the automorphism search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("direction").required(true).args(["compress", "decompress"])))]
struct ConvertArgs {
    input: PathBuf,
    /// Full `OCYCLE` to compressed `UCYCLE2`.
    #[arg(long)]
    compress: bool,
    /// Compressed `UCYCLE2` to full `OCYCLE`, resolving pairs in this STS file.
    #[arg(long, value_name = "STS")]
    decompress: Option<PathBuf>,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s.split_once("..").ok_or("expected A..B")?;
    let a: u32 = a.trim().parse().map_err(|_| format!("bad start {a:?}"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}

fn read(path: &Path) -> anyhow::Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(args: GenerateArgs) -> anyhow::Result<ExitCode> {
    let orders: Vec<(u32, PathBuf)> = match (args.order, args.sweep) {
        (Some(n), _) => vec![(n, args.out.clone())],
        (None, Some((a, b))) => (a..=b)
            .filter(|&n| ocycle_core::is_admissible(n))
            .map(|n| (n, args.out.join(format!("v{n:03}"))))
            .collect(),
        (None, None) => unreachable!("clap requires one of them"),
    };
    if orders.is_empty() {
        bail!("no admissible orders in the sweep range");
    }
    let mut builder = routes::Builder::from_env()?;
    let mut summaries = Vec::new();
    for (n, dir) in orders {
        let cert = builder.build(args.route, n)?;
        let summary = bundle::write(&dir, args.route, &cert, builder.data_dir())?;
        match args.format {
            Format::Text => println!("{summary}"),
            Format::Json => summaries.push(summary),
        }
    }
    if let Format::Json = args.format {
        println!("{}", serde_json::to_string_pretty(&summaries)?);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyReport {
    sts: StsReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    ocycle: Option<OcycleReport>,
    /// Set when a compressed cycle could not be expanded at all.
    #[serde(skip_serializing_if = "Option::is_none")]
    decompress_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    af: Option<AfSection>,
    clean: bool,
}

#[derive(Serialize)]
struct AfSection {
    verdict: String,
    report: ocycle_core::verify::AutomorphismReport,
}

fn verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let sts_file = parse_sts(&read(&args.sts)?).with_context(|| args.sts.display().to_string())?;
    let cycle_file = match &args.ocycle {
        Some(p) => Some(parse_cycle_file(&read(p)?).with_context(|| p.display().to_string())?),
        None => None,
    };
    let sts = validate_sts(sts_file.order, &sts_file.blocks);
    let mut report = VerifyReport {
        clean: sts.is_clean(),
        sts,
        ocycle: None,
        decompress_error: None,
        af: None,
    };
    if report.clean {
        let ts = sts_file.into_system()?;
        if let Some(cf) = cycle_file {
            if cf.order() != ts.order() {
                bail!(
                    "cycle file is for order {}, system has order {}",
                    cf.order(),
                    ts.order()
                );
            }
            let blocks = match cf {
                CycleFile::Full { blocks, .. } => Some(blocks),
                CycleFile::Compressed { cycle, .. } => match decompress(&ts, &cycle) {
                    Ok(c) => Some(c.into_blocks()),
                    Err(e) => {
                        report.decompress_error = Some(e.to_string());
                        report.clean = false;
                        None
                    }
                },
            };
            if let Some(blocks) = blocks {
                let oc = validate_ocycle(&ts, &blocks);
                report.clean &= oc.is_clean();
                report.ocycle = Some(oc);
            }
        }
        if args.af {
            let (verdict, r) = is_af(&ts, args.budget);
            report.clean &= verdict == ocycle_core::verify::AfVerdict::Af;
            report.af = Some(AfSection {
                verdict: verdict.to_string(),
                report: r,
            });
        }
    }
    match args.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text => {
            println!("sts: {}", report.sts);
            if let Some(e) = &report.decompress_error {
                println!("ocycle: cannot decompress: {e}");
            }
            if let Some(oc) = &report.ocycle {
                println!("ocycle: {oc}");
            }
            if let Some(af) = &report.af {
                let r = &af.report;
                println!("af: {} ({} nodes, {} ms)", af.verdict, r.nodes, r.millis);
            }
        }
    }
    Ok(if report.clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn convert(args: ConvertArgs) -> anyhow::Result<ExitCode> {
    let cf = parse_cycle_file(&read(&args.input)?).with_context(|| args.input.display().to_string())?;
    let text = match (cf, &args.decompress) {
        (CycleFile::Full { order, blocks }, None) => {
            let cycle = OverlapCycle::new(blocks)?;
            write_ucycle(order, &compress(&cycle))
        }
        (CycleFile::Compressed { order, cycle }, Some(sts_path)) => {
            let ts = parse_sts(&read(sts_path)?)
                .with_context(|| sts_path.display().to_string())?
                .into_system()?;
            if ts.order() != order {
                bail!("cycle file is for order {order}, system has order {}", ts.order());
            }
            match decompress(&ts, &cycle) {
                Ok(full) => write_ocycle(order, full.blocks()),
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        (CycleFile::Full { .. }, Some(_)) => return Err(anyhow!("input is already a full OCYCLE file")),
        (CycleFile::Compressed { .. }, None) => return Err(anyhow!("input is already a compressed UCYCLE2 file")),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Convert(a) => convert(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
