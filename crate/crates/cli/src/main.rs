//! `polyvenn`: generate, validate, render and search polyomino Venn diagrams.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use polyvenn::polyomino::{MAX_COLUMN_CONVEX_BRUTEFORCE, MAX_ENUMERATION_SIZE};
use polyvenn::{
    count_column_convex, count_column_convex_bruteforce, count_fixed_polyominoes,
    count_free_polyominoes, generate, parse_pvn, render_ascii, render_svg, scd_aigner,
    scd_christmas_tree, search_fill_box, search_min_area, serialize_pvn, validate_venn, Method,
    SearchLimits, SearchOutcome,
};

const EXIT_INVALID: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_FOUND: u8 = 3;

#[derive(Parser)]
#[command(name = "polyvenn", version, about = "Venn diagrams whose curves are polyominoes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a diagram and print it in PVN format.
    Gen {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        method: GenMethod,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a PVN file for Venn validity.
    Validate { file: PathBuf },
    /// Draw a PVN file as ASCII or SVG.
    Render {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a symmetric chain decomposition, one chain per line.
    Scd {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        method: ScdMethod,
    },
    /// Count polyominoes with a given number of cells.
    Count {
        #[arg(long = "polyominoes", value_name = "K")]
        k: usize,
        #[arg(long, value_enum)]
        class: CountClass,
        /// Count column-convex polyominoes by brute force instead of the recurrence.
        #[arg(long)]
        oracle: bool,
    },
    /// Exhaustively search for a minimum-area or box-filling diagram.
    Search {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long = "box", value_name = "WxH")]
        box_size: Option<String>,
        #[arg(long)]
        nodes: Option<u64>,
        #[arg(long, default_value_t = 60.0)]
        seconds: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenMethod {
    Naive,
    ScdAigner,
    ScdChristmas,
}

impl From<GenMethod> for Method {
    fn from(m: GenMethod) -> Method {
        match m {
            GenMethod::Naive => Method::Naive,
            GenMethod::ScdAigner => Method::ScdAigner,
            GenMethod::ScdChristmas => Method::ScdChristmas,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Ascii,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScdMethod {
    Aigner,
    Christmas,
}

#[derive(Clone, Copy, ValueEnum)]
enum CountClass {
    Fixed,
    Free,
    ColumnConvex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    MinArea,
    FillBox,
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_diagram(path: &Path) -> Result<polyvenn::GridDiagram> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_pvn(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_box(text: &str) -> Result<(u32, u32)> {
    let (w, h) = text
        .split_once(['x', 'X'])
        .with_context(|| format!("box {text:?} is not of the form WxH"))?;
    Ok((w.trim().parse()?, h.trim().parse()?))
}

fn count(k: usize, class: CountClass, oracle: bool) -> Result<String> {
    let value = match class {
        CountClass::Fixed => count_fixed_polyominoes(k)
            .with_context(|| format!("fixed counts are enumerated for k <= {MAX_ENUMERATION_SIZE}"))?
            .to_string(),
        CountClass::Free => count_free_polyominoes(k)
            .with_context(|| format!("free counts are enumerated for k <= {MAX_ENUMERATION_SIZE}"))?
            .to_string(),
        CountClass::ColumnConvex if oracle => count_column_convex_bruteforce(k)
            .with_context(|| {
                format!("brute-force counts are limited to k <= {MAX_COLUMN_CONVEX_BRUTEFORCE}")
            })?
            .to_string(),
        CountClass::ColumnConvex => count_column_convex(k)?.to_string(),
    };
    Ok(value)
}

fn search(n: u32, target: Target, box_size: Option<&str>, nodes: Option<u64>, seconds: f64) -> Result<u8> {
    if !(seconds.is_finite() && seconds > 0.0) {
        bail!("--seconds must be a positive number");
    }
    let limits = SearchLimits {
        max_nodes: nodes,
        max_time: Some(Duration::from_secs_f64(seconds)),
    };
    let report = match (target, box_size) {
        (Target::MinArea, None) => search_min_area(n, &limits)?,
        (Target::MinArea, Some(_)) => bail!("--box only applies to --target fill-box"),
        (Target::FillBox, Some(b)) => {
            let (w, h) = parse_box(b)?;
            search_fill_box(n, w, h, &limits)?
        }
        (Target::FillBox, None) => bail!("--target fill-box needs --box WxH"),
    };
    match report.outcome {
        SearchOutcome::Found(d) => {
            print!("{}", serialize_pvn(&d));
            Ok(0)
        }
        SearchOutcome::Exhausted => {
            println!("exhausted after {} nodes: no diagram exists in the search space", report.nodes);
            Ok(EXIT_NOT_FOUND)
        }
        SearchOutcome::BudgetHit => {
            println!("budget hit after {} nodes", report.nodes);
            Ok(EXIT_NOT_FOUND)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Gen { n, method, out } => {
            let d = generate(n, method.into())?;
            emit(&serialize_pvn(&d), out.as_deref())?;
            Ok(0)
        }
        Command::Validate { file } => {
            let d = read_diagram(&file)?;
            let report = validate_venn(&d);
            print!("{report}");
            Ok(if report.overall() { 0 } else { EXIT_INVALID })
        }
        Command::Render { file, format, out } => {
            let d = read_diagram(&file)?;
            let text = match format {
                Format::Ascii => render_ascii(&d),
                Format::Svg => render_svg(&d)?,
            };
            emit(&text, out.as_deref())?;
            Ok(0)
        }
        Command::Scd { n, method } => {
            let dec = match method {
                ScdMethod::Aigner => scd_aigner(n)?,
                ScdMethod::Christmas => scd_christmas_tree(n)?,
            };
            for chain in &dec.chains {
                println!("{chain}");
            }
            Ok(0)
        }
        Command::Count { k, class, oracle } => {
            println!("{}", count(k, class, oracle)?);
            Ok(0)
        }
        Command::Search {
            n,
            target,
            box_size,
            nodes,
            seconds,
        } => search(n, target, box_size.as_deref(), nodes, seconds),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
