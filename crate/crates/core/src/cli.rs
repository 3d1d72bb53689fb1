//! Command-line front end: `enumerate`, `map`, `verify` and `render`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
//! limit, 4 invalid input, 5 I/O error. Data goes to stdout only; traces and
//! diagnostics go to stderr.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijection::{deutsch, kimberling, schroder};
use crate::enumeration::{Enumerator, Size};
use crate::error::Error;
use crate::paths::{format_path, parse_path, BoundedSeq, DeutschPath, Family, GrowthSeq, KimberlingPath, PathObject, RamirezPath, SchroderPath};
use crate::render;
use crate::verify::{self, BijectionId, Bounds, ReferenceCounts, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_DOMAIN: i32 = 4;
pub const EXIT_IO: i32 = 5;

#[derive(Debug, Parser)]
#[command(name = "latticebij", version, about = "Lattice path bijections: enumerate, map, verify, render")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every object of a family at one size, in canonical order.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, conflicts_with_all = ["i", "j"])]
        n: Option<u32>,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long)]
        j: Option<u32>,
        #[arg(long, value_enum, default_value_t = ListFormat::Words)]
        format: ListFormat,
    },
    /// Apply one bijection, or its inverse, to a single object.
    Map {
        #[arg(long, value_parser = parse_bijection)]
        bijection: BijectionId,
        #[arg(long, value_enum)]
        direction: Direction,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        /// Ambient j of the bounded sequence (kimberling forward only).
        #[arg(long)]
        j: Option<u32>,
        /// Print rewriting or matching steps to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Exhaustively check bijections up to a size, optionally against reference counts.
    Verify {
        #[arg(long, value_parser = parse_bijection_or_all)]
        bijection: Target,
        #[arg(long)]
        max: u32,
        /// Bound on j for kimberling (defaults to --max).
        #[arg(long)]
        max_j: Option<u32>,
        #[arg(long = "ref")]
        reference: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Draw one object as a character grid or SVG.
    Render {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, allow_hyphen_values = true)]
        input: String,
        #[arg(long, value_enum, default_value_t = DrawFormat::Ascii)]
        format: DrawFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Words,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Backward,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DrawFormat {
    Ascii,
    Svg,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_bijection(s: &str) -> Result<BijectionId, String> {
    s.parse()
}

#[derive(Debug, Clone, Copy)]
enum Target {
    All,
    One(BijectionId),
}

fn parse_bijection_or_all(s: &str) -> Result<Target, String> {
    if s == "all" {
        Ok(Target::All)
    } else {
        s.parse().map(Target::One)
    }
}

/// A failed command: exit code plus a message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceLimit { .. } | Error::Overflow => EXIT_RESOURCE,
            Error::SizeMismatch { .. } => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_IO, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                // --help and --version
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Enumerate { family, n, i, j, format } => cmd_enumerate(family, n, i, j, format, stdout),
        Command::Map { bijection, direction, input, j, trace } => {
            cmd_map(bijection, direction, &input, j, trace, stdout, stderr)
        }
        Command::Verify { bijection, max, max_j, reference, format } => {
            cmd_verify(bijection, max, max_j, reference, format, stdout)
        }
        Command::Render { family, input, format, out } => cmd_render(family, &input, format, out, stdout),
    };
    match outcome {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

#[derive(Serialize)]
struct ListedObject<'a> {
    family: &'a str,
    size: Size,
    text: String,
}

fn cmd_enumerate(
    family: Family,
    n: Option<u32>,
    i: Option<u32>,
    j: Option<u32>,
    format: ListFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let size = match (family.is_two_parameter(), n, i, j) {
        (false, Some(n), None, None) => Size::N(n),
        (true, None, Some(i), Some(j)) => Size::IJ(i, j),
        (false, ..) => return Err(usage(format!("family {family} takes --n"))),
        (true, ..) => return Err(usage(format!("family {family} takes --i and --j"))),
    };
    let e = Enumerator::from_env();
    let objects: Vec<PathObject> = match (family, size) {
        (Family::LittleSchroder, Size::N(n)) => e.little_schroder(n)?.into_iter().map(PathObject::Schroder).collect(),
        (Family::GrowthSeq, Size::N(n)) => e.growth_sequences(n)?.into_iter().map(PathObject::Growth).collect(),
        (Family::Deutsch, Size::N(n)) => e.deutsch(n)?.into_iter().map(PathObject::Deutsch).collect(),
        (Family::Ramirez, Size::N(n)) => e.ramirez(n)?.into_iter().map(PathObject::Ramirez).collect(),
        (Family::Kimberling, Size::IJ(i, j)) => e.kimberling(i, j)?.into_iter().map(PathObject::Kimberling).collect(),
        (Family::BoundedSeq, Size::IJ(i, j)) => {
            e.bounded_sequences(i, j)?.into_iter().map(PathObject::Bounded).collect()
        }
        _ => unreachable!("size kind checked above"),
    };
    for obj in &objects {
        let text = format_path(obj);
        match format {
            ListFormat::Words => writeln!(out, "{text}")?,
            ListFormat::Json => {
                let rec = ListedObject { family: family.name(), size, text };
                writeln!(out, "{}", serde_json::to_string(&rec).expect("record serializes"))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn parse_as<T>(family: Family, input: &str, pick: impl FnOnce(PathObject) -> Option<T>) -> Result<T, Failure> {
    let obj = parse_path(family, input)?;
    Ok(pick(obj).expect("parse_path returns the requested family"))
}

fn cmd_map(
    id: BijectionId,
    direction: Direction,
    input: &str,
    j: Option<u32>,
    trace: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let needs_j = id == BijectionId::Kimberling && direction == Direction::Forward;
    if j.is_some() && !needs_j {
        return Err(usage("--j applies only to kimberling forward"));
    }
    let mut lines: Vec<String> = Vec::new();
    let result = match (id, direction) {
        (BijectionId::Schroder, Direction::Forward) => {
            let p: SchroderPath = parse_as(Family::LittleSchroder, input, |o| match o {
                PathObject::Schroder(p) => Some(p),
                _ => None,
            })?;
            if trace {
                let d = schroder::lonely_derivation(&schroder::heights_of(&p)?, schroder::Strategy::Leftmost);
                lines.extend(d.steps.iter().map(|s| s.to_string()));
            }
            schroder::forward(&p)?.to_string()
        }
        (BijectionId::Schroder, Direction::Backward) => {
            let g: GrowthSeq = parse_as(Family::GrowthSeq, input, |o| match o {
                PathObject::Growth(g) => Some(g),
                _ => None,
            })?;
            if trace {
                let d = schroder::offending_derivation(&schroder::remark(&g)?, schroder::Strategy::Leftmost);
                lines.extend(d.steps.iter().map(|s| s.to_string()));
            }
            schroder::backward(&g)?.to_string()
        }
        (BijectionId::Kimberling, Direction::Forward) => {
            let j = j.ok_or_else(|| usage("kimberling forward needs --j"))?;
            let u = BoundedSeq::parse_with_j(input, j)?;
            let (q, steps) = kimberling::phi_traced(&u)?;
            lines.extend(steps.iter().map(|s| s.to_string()));
            q.to_string()
        }
        (BijectionId::Kimberling, Direction::Backward) => {
            let q: KimberlingPath = parse_as(Family::Kimberling, input, |o| match o {
                PathObject::Kimberling(q) => Some(q),
                _ => None,
            })?;
            kimberling::phi_inv(&q)?.to_string()
        }
        (BijectionId::Deutsch, Direction::Forward) => {
            let p: DeutschPath = parse_as(Family::Deutsch, input, |o| match o {
                PathObject::Deutsch(p) => Some(p),
                _ => None,
            })?;
            let (w, events) = deutsch::expand_color_traced(&p)?;
            lines.extend(events.iter().map(|e| e.to_string()));
            deutsch::contract(&w)?.to_string()
        }
        (BijectionId::Deutsch, Direction::Backward) => {
            let q: RamirezPath = parse_as(Family::Ramirez, input, |o| match o {
                PathObject::Ramirez(q) => Some(q),
                _ => None,
            })?;
            let (p, events) = deutsch::backward_traced(&q)?;
            lines.extend(events.iter().map(|e| e.to_string()));
            p.to_string()
        }
    };
    if trace {
        for l in &lines {
            writeln!(err, "{l}")?;
        }
    }
    writeln!(out, "{result}")?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    which: Target,
    max: u32,
    max_j: Option<u32>,
    reference: Option<PathBuf>,
    format: ReportFormat,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let ids: Vec<BijectionId> = match which {
        Target::One(id) => vec![id],
        Target::All => BijectionId::ALL.to_vec(),
    };
    let reference = match reference {
        None => None,
        Some(_) if matches!(which, Target::All) => return Err(usage("--ref needs a single --bijection")),
        Some(path) => Some(ReferenceCounts::parse(&fs::read_to_string(&path)?)?),
    };
    let bounds = Bounds::grid(max, max_j.unwrap_or(max));
    let limits = Enumerator::from_env();
    let mut reports: Vec<Report> = Vec::new();
    for id in ids {
        reports.push(verify::check_bijection_with(id, bounds, &limits)?);
        if let Some(r) = &reference {
            reports.push(verify::crosscheck_counts_with(id.reference_family(), bounds, r, &limits)?);
        }
    }
    match format {
        ReportFormat::Text => {
            let texts: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
            writeln!(out, "{}", texts.join("\n\n"))?;
        }
        ReportFormat::Json => {
            let json = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(&reports)
            };
            writeln!(out, "{}", json.expect("reports serialize"))?;
        }
    }
    Ok(if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_render(
    family: Family,
    input: &str,
    format: DrawFormat,
    dest: Option<PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let obj = parse_path(family, input)?;
    let drawing = match format {
        DrawFormat::Ascii => render::ascii(&obj),
        DrawFormat::Svg => render::svg(&obj),
    };
    match dest {
        Some(path) => fs::write(&path, drawing).map_err(|e| Failure {
            code: EXIT_IO,
            message: format!("{}: {e}", path.display()),
        })?,
        None => out.write_all(drawing.as_bytes())?,
    }
    Ok(EXIT_OK)
}
