//! `beck`: enumerate families, count, verify identities, trace bijections,
//! draw modular diagrams and dump generating functions.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use beck_core::bijections::*;
use beck_core::diagram::modular_diagram;
use beck_core::families::{count, enumerate, enumerate_pairs, Member};
use beck_core::qseries::gf;
use beck_core::verify::{self, Grid, Identity, VerificationReport};
use beck_core::{
    parse_partition, xi_forward, xi_inverse, DecoratedPartition, FamilyTag, GfName, Notation,
    PairSetTag, Partition, RectanglePair, Strategy,
};

#[derive(Parser)]
#[command(
    name = "beck",
    version,
    about = "Exact combinatorics for Beck-type partition identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a family or pair set of size n.
    Enumerate(EnumerateArgs),
    /// Count a family for one n or every n up to --n-max.
    Count(CountArgs),
    /// Check an identity exhaustively over a grid.
    Verify(VerifyArgs),
    /// Apply one bijection (or its inverse) to a single input.
    Bijection(BijectionArgs),
    /// Draw the r-modular diagram of a partition.
    Diagram(DiagramArgs),
    /// Dump the coefficients of a generating function.
    Series(SeriesArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, conflicts_with = "pairset", required_unless_present = "pairset")]
    family: Option<String>,
    #[arg(long)]
    pairset: Option<String>,
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 2)]
    r: u32,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, required_unless_present = "n_max", conflicts_with = "n_max")]
    n: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// beck3, beck1, beck2, glaisher, series, xi or roundtrip.
    identity: String,
    /// A single modulus, a range `2-6`, or a list `2,3,5`.
    #[arg(long, default_value = "2-6")]
    r: String,
    /// Restrict to one residue; all of [1, r−1] when omitted.
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, default_value_t = 0)]
    n_min: u32,
    #[arg(long, alias = "n")]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Run on the calling thread only.
    #[arg(long)]
    sequential: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Map {
    Xi,
    XiInv,
    Phi,
    PhiInv,
    Psi1,
    Psi1Inv,
    Psi2,
    Psi2Inv,
    PsiO,
    PsiOInv,
    PsiD,
    PsiDInv,
    PsiT,
    PsiTInv,
    Zeta,
    ZetaInv,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(long, value_enum)]
    map: Map,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    t: Option<u32>,
    /// The input partition, or the flat part of an input pair.
    #[arg(long, default_value = "")]
    partition: String,
    /// Rectangle `s^i` of an input pair, for the maps out of pair sets.
    #[arg(long)]
    rect: Option<String>,
    /// 1-based position of the marked part.
    #[arg(long, conflicts_with = "overline_position")]
    mark_position: Option<usize>,
    /// 1-based position of the overlined part.
    #[arg(long)]
    overline_position: Option<usize>,
    /// Print the full step-by-step record (xi only).
    #[arg(long)]
    trace: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct DiagramArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct SeriesArgs {
    /// Or, O1r, PartsTInOr, RepeatsTInDr or Ert.
    #[arg(long)]
    name: String,
    #[arg(long)]
    r: u32,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long, default_value_t = 50)]
    degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<beck_core::Error> for Failure {
    fn from(e: beck_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Enumerate(a) => run_enumerate(a),
        Command::Count(a) => run_count(a),
        Command::Verify(a) => run_verify(a),
        Command::Bijection(a) => run_bijection(a),
        Command::Diagram(a) => run_diagram(a),
        Command::Series(a) => run_series(a),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn no_csv(format: Format, command: &str) -> Outcome {
    if format == Format::Csv {
        return Err(Failure::Usage(format!(
            "--format csv is not available for `{command}`"
        )));
    }
    Ok(())
}

fn print_json<T: Serialize>(value: &T) -> Outcome {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn partition_arg(text: &str) -> Result<Partition, Failure> {
    let notation = if text.contains('^') {
        Notation::Exponential
    } else {
        Notation::Plain
    };
    Ok(parse_partition(text, notation)?)
}

fn run_enumerate(a: EnumerateArgs) -> Outcome {
    no_csv(a.format, "enumerate")?;
    let lines: Vec<String> = match (&a.family, &a.pairset) {
        (Some(family), _) => {
            let tag: FamilyTag = family.parse()?;
            let members = enumerate(a.n, tag, a.r, a.t)?;
            if a.format == Format::Json {
                return print_json(&members);
            }
            members.iter().map(Member::to_string).collect()
        }
        (None, Some(pairset)) => {
            let tag: PairSetTag = pairset.parse()?;
            let pairs = enumerate_pairs(a.n, tag, a.r, a.t)?;
            if a.format == Format::Json {
                return print_json(&pairs);
            }
            pairs.iter().map(RectanglePair::to_string).collect()
        }
        (None, None) => unreachable!("clap requires one of --family or --pairset"),
    };
    for line in lines {
        println!("{line}");
    }
    Ok(())
}

fn run_count(a: CountArgs) -> Outcome {
    let tag: FamilyTag = a.family.parse()?;
    let ns: Vec<u32> = match (a.n, a.n_max) {
        (Some(n), _) => vec![n],
        (None, Some(max)) => (0..=max).collect(),
        (None, None) => unreachable!("clap requires --n or --n-max"),
    };
    let counts = ns
        .iter()
        .map(|&n| Ok((n, count(n, tag, a.r, a.t)?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    match a.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                n: u32,
                count: String,
            }
            let rows: Vec<Row> = counts
                .iter()
                .map(|(n, c)| Row {
                    n: *n,
                    count: c.to_string(),
                })
                .collect();
            print_json(&rows)?;
        }
        Format::Csv => {
            println!("n,count");
            for (n, c) in &counts {
                println!("{n},{c}");
            }
        }
        Format::Text if a.n.is_some() => println!("{}", counts[0].1),
        Format::Text => {
            for (n, c) in &counts {
                println!("{n}\t{c}");
            }
        }
    }
    Ok(())
}

fn parse_moduli(text: &str) -> Result<Vec<u32>, Failure> {
    let bad = || Failure::Usage(format!("cannot read r values from `{text}`"));
    let mut out = Vec::new();
    for piece in text.split(',').map(str::trim) {
        match piece.split_once('-') {
            Some((lo, hi)) => {
                let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
                let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
                if lo > hi {
                    return Err(bad());
                }
                out.extend(lo..=hi);
            }
            None => out.push(piece.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

fn run_verify(a: VerifyArgs) -> Outcome {
    let identity: Identity = a.identity.parse()?;
    let grid = Grid::new(parse_moduli(&a.r)?, a.t, a.n_min, a.n_max)?;
    let strategy = if a.sequential {
        Strategy::Sequential
    } else {
        Strategy::default()
    };
    let report = verify::run(identity, &grid, strategy)?;
    print_report(&report, a.format)?;
    eprintln!(
        "{identity}: {} points, {} passed, {} failed in {:.0} ms",
        report.summary.points, report.summary.passed, report.summary.failed, report.elapsed_ms
    );
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn print_report(report: &VerificationReport, format: Format) -> Outcome {
    let status = |pass: bool| if pass { "pass" } else { "FAIL" };
    match format {
        Format::Json => print_json(report)?,
        Format::Csv => {
            println!("n,r,t,lhs,rhs,status");
            for p in &report.points {
                let t = p.t.map(|t| t.to_string()).unwrap_or_default();
                println!(
                    "{},{},{},{},{},{}",
                    p.n,
                    p.r,
                    t,
                    p.lhs,
                    p.rhs,
                    status(p.pass)
                );
            }
        }
        Format::Text => {
            for p in &report.points {
                let t = p.t.map(|t| t.to_string()).unwrap_or_else(|| "-".into());
                println!(
                    "n={:<3} r={} t={:<2} {:<36} {} {} {}",
                    p.n,
                    p.r,
                    t,
                    p.relation,
                    p.lhs,
                    p.rhs,
                    status(p.pass)
                );
            }
            let s = report.summary;
            println!(
                "{}: {} / {} passed{}",
                report.identity,
                s.passed,
                s.points,
                if s.failed == 0 {
                    String::new()
                } else {
                    format!(", {} FAILED", s.failed)
                }
            );
        }
    }
    Ok(())
}

fn need_t(t: Option<u32>) -> Result<u32, Failure> {
    t.ok_or_else(|| Failure::Usage("this map needs --t".into()))
}

fn pair_arg(a: &BijectionArgs) -> Result<RectanglePair, Failure> {
    let rect = a.rect.as_deref().ok_or_else(|| {
        Failure::Usage("this map takes a pair: give --partition and --rect s^i".into())
    })?;
    let bad = || Failure::Usage(format!("--rect expects `s^i`, got `{rect}`"));
    let (s, i) = rect.split_once('^').unwrap_or((rect, "1"));
    let s: u32 = s.trim().parse().map_err(|_| bad())?;
    let i: usize = i.trim().parse().map_err(|_| bad())?;
    Ok(RectanglePair::new(partition_arg(&a.partition)?, s, i)?)
}

fn decorated_arg(a: &BijectionArgs, base: Partition) -> Result<DecoratedPartition, Failure> {
    match (a.mark_position, a.overline_position) {
        (Some(i), _) => Ok(DecoratedPartition::marked(base, i)?),
        (None, Some(i)) => Ok(DecoratedPartition::overlined(base, i)?),
        (None, None) => Err(Failure::Usage(
            "this map needs --mark-position or --overline-position".into(),
        )),
    }
}

#[derive(Serialize)]
struct Applied {
    map: String,
    input: String,
    output: String,
}

fn run_bijection(a: BijectionArgs) -> Outcome {
    no_csv(a.format, "bijection")?;
    if a.trace && a.map != Map::Xi {
        return Err(Failure::Usage(
            "--trace is only available for --map xi".into(),
        ));
    }
    let r = a.r;
    let (input, output): (String, String) = match a.map {
        Map::Xi => {
            let lambda = partition_arg(&a.partition)?;
            if a.trace {
                return print_json(&xi_forward(&lambda, r)?);
            }
            (
                lambda.to_string(),
                xi_forward(&lambda, r)?.output.to_string(),
            )
        }
        Map::XiInv => {
            let kappa = partition_arg(&a.partition)?;
            (kappa.to_string(), xi_inverse(&kappa, r)?.to_string())
        }
        Map::Phi | Map::PhiInv => {
            let x = partition_arg(&a.partition)?;
            let y = if a.map == Map::Phi {
                phi_forward(&x, r)?
            } else {
                phi_inverse(&x, r)?
            };
            (x.to_string(), y.to_string())
        }
        Map::Psi1 => {
            let base = partition_arg(&a.partition)?;
            let member = match a.overline_position {
                Some(i) => Member::Decorated(DecoratedPartition::overlined(base, i)?),
                None if a.mark_position.is_some() => {
                    return Err(Failure::Usage(
                        "ψ₁ inputs carry overlines, not marks".into(),
                    ))
                }
                None => Member::Plain(base),
            };
            (
                member.to_string(),
                psi1_forward(&member, r, need_t(a.t)?)?.to_string(),
            )
        }
        Map::Psi2 => {
            let d = decorated_arg(&a, partition_arg(&a.partition)?)?;
            (
                d.to_string(),
                psi2_forward(&d, r, need_t(a.t)?)?.to_string(),
            )
        }
        Map::PsiO | Map::PsiD => {
            let d = decorated_arg(&a, partition_arg(&a.partition)?)?;
            let y = if a.map == Map::PsiO {
                psi_o(&d, r)?
            } else {
                psi_d(&d, r)?
            };
            (d.to_string(), y.to_string())
        }
        Map::PsiT => {
            let x = partition_arg(&a.partition)?;
            (x.to_string(), psi_t(&x, r)?.to_string())
        }
        Map::Zeta | Map::ZetaInv => {
            let pair = pair_arg(&a)?;
            let y = if a.map == Map::Zeta {
                zeta(&pair, r)?
            } else {
                zeta_inverse(&pair, r)?
            };
            (pair.to_string(), y.to_string())
        }
        Map::Psi1Inv | Map::Psi2Inv | Map::PsiOInv | Map::PsiDInv | Map::PsiTInv => {
            let pair = pair_arg(&a)?;
            let y = match a.map {
                Map::Psi1Inv => psi1_inverse(&pair, r, need_t(a.t)?)?.to_string(),
                Map::Psi2Inv => psi2_inverse(&pair, r, need_t(a.t)?)?.to_string(),
                Map::PsiOInv => psi_o_inverse(&pair, r)?.to_string(),
                Map::PsiDInv => psi_d_inverse(&pair, r)?.to_string(),
                _ => psi_t_inverse(&pair, r)?.to_string(),
            };
            (pair.to_string(), y)
        }
    };
    match a.format {
        Format::Json => {
            let map = a
                .map
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            print_json(&Applied { map, input, output })
        }
        _ => {
            println!("{output}");
            Ok(())
        }
    }
}

fn run_diagram(a: DiagramArgs) -> Outcome {
    no_csv(a.format, "diagram")?;
    let diagram = modular_diagram(&partition_arg(&a.partition)?, a.r)?;
    match a.format {
        Format::Json => print_json(&diagram),
        _ => {
            print!("{diagram}");
            Ok(())
        }
    }
}

fn run_series(a: SeriesArgs) -> Outcome {
    no_csv(a.format, "series")?;
    let name: GfName = a.name.parse()?;
    let series = gf(name, a.r, a.t, a.degree)?;
    match a.format {
        Format::Json => {
            let coeffs: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
            print_json(&coeffs)
        }
        _ => {
            print!("{}", series.dump());
            Ok(())
        }
    }
}
