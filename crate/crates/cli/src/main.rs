use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use movcone::compare::DEFAULT_HULL_LIMIT;
use movcone::cones::io::{write_halfspaces, write_rays};
use movcone::{Fan, ToricVariety, Variety, Verdict};

const EXIT_STRICT: u8 = 10;
const EXIT_INPUT: u8 = 2;
const EXIT_CHECK_FAILED: u8 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "movcone",
    version,
    about = "Compare complete intersection and movable cones of curves"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, clap::Args)]
struct Select {
    /// x1..x5, l4 (= x4), m06 (= x5), or toric:<fan file>.
    #[arg(long, value_name = "VARIETY")]
    variety: Option<String>,
    /// Fan file of a smooth complete toric threefold.
    #[arg(long, value_name = "PATH", conflicts_with = "variety")]
    fan: Option<PathBuf>,
    /// Ray indices of the prime divisors forming a basis (toric only).
    #[arg(long, value_delimiter = ',', value_name = "I,J,..")]
    basis: Option<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    NefIneq,
    MovIneq,
    NefRays,
    MovRays,
    NeRays,
    EffRays,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the cones and compare CI with Mov. Exit status 0 if equal, 10 if
    /// the inclusion is strict, 2 on invalid input, 1 on any other failure.
    Run {
        /// Same as --variety.
        #[arg(value_name = "VARIETY", conflicts_with_all = ["variety", "fan"])]
        name: Option<String>,
        #[command(flatten)]
        select: Select,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also run the duality and consistency checks.
        #[arg(long)]
        cross_check: bool,
        /// Largest product count for which CI is described by facets.
        #[arg(long, default_value_t = DEFAULT_HULL_LIMIT)]
        hull_limit: usize,
    },
    /// Write one cone description in the plain-text ray/inequality format.
    /// `export <VARIETY> <WHICH>`, or `export <WHICH>` with --variety or --fan.
    Export {
        #[arg(num_args = 1..=2, value_names = ["VARIETY", "WHICH"], required = true)]
        positional: Vec<String>,
        #[command(flatten)]
        select: Select,
        /// Output file; standard output if absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure classes mapped to distinct exit codes.
enum Failure {
    Input(anyhow::Error),
    Other(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Other(e.into())
    }
}

fn input<T, E: Into<anyhow::Error>>(r: Result<T, E>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Input(e.into()))
}

fn load_fan(path: &Path) -> anyhow::Result<Fan> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Fan::from_json(&text).with_context(|| format!("in {}", path.display()))
}

fn select(name: Option<&String>, sel: &Select) -> anyhow::Result<Variety> {
    let name = name.or(sel.variety.as_ref());
    let fan_path = match (name, &sel.fan) {
        (_, Some(p)) => Some(p.clone()),
        (Some(n), None) => n.strip_prefix("toric:").map(PathBuf::from),
        (None, None) => bail!("no variety given"),
    };
    match fan_path {
        Some(path) => {
            let fan = load_fan(&path)?;
            let variety = ToricVariety::new(fan, sel.basis.clone())?;
            let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned());
            Ok(Variety::toric(format!("toric:{}", stem.unwrap_or_default()), variety))
        }
        None => {
            if sel.basis.is_some() {
                bail!("--basis applies to toric varieties only");
            }
            Ok(Variety::builtin(name.expect("checked above"))?)
        }
    }
}

fn write_file(path: &Path, contents: &str) -> anyhow::Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn run(
    name: Option<&String>,
    sel: &Select,
    out: &Path,
    format: Format,
    cross_check: bool,
    hull_limit: usize,
) -> Result<u8, Failure> {
    let variety = input(select(name, sel))?;
    let cones = input(variety.cones())?;
    let mut report = input(variety.compare(&cones, hull_limit))?;
    if cross_check {
        report.checks.extend(variety.cross_check(&cones)?);
    }
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let name = variety.name();
    let dim = cones.dim;
    let header = |what: &str| format!("{what} of {name}");
    write_file(
        &out.join("nef.rays"),
        &write_rays(dim, &cones.nef_rays, Some(&header("extremal rays of Nef"))),
    )?;
    write_file(
        &out.join("mov.rays"),
        &write_rays(dim, &cones.mov_rays, Some(&header("extremal rays of Mov"))),
    )?;
    let path = out.join("ci.generators");
    let file = File::create(&path).with_context(|| format!("writing {}", path.display()))?;
    let mut w = BufWriter::new(file);
    report
        .generators
        .write_rays(&mut w, Some(&header("pairwise products of nef rays")))?;
    w.flush()?;
    write_file(
        &out.join("NotEq"),
        &write_rays(dim, &report.not_eq, Some(&header("extremal rays of Mov not in CI"))),
    )?;
    let text = match format {
        Format::Text => report.to_text(),
        Format::Structured => report.to_structured(),
    };
    write_file(&out.join("report"), &text)?;
    print!("{}", report.to_text());

    if report.checks.iter().any(|(_, ok)| !ok) {
        return Err(Failure::Other(anyhow!("a consistency check failed")));
    }
    Ok(match report.verdict {
        Verdict::Equal => 0,
        Verdict::Strict => EXIT_STRICT,
    })
}

fn export(positional: &[String], sel: &Select, out: Option<&Path>) -> Result<u8, Failure> {
    let (name, which) = match positional {
        [name, which] => (Some(name), which),
        [which] => (None, which),
        _ => unreachable!("clap enforces one or two values"),
    };
    let which = input(Which::from_str(which, false).map_err(|e| anyhow!("unknown cone `{which}`: {e}")))?;
    let variety = input(select(name, sel))?;
    let cones = input(variety.cones())?;
    let dim = cones.dim;
    let name = variety.name();
    let text = match which {
        Which::NefIneq => write_halfspaces(dim, &cones.nef_hrep, Some(&format!("Nef inequalities of {name}"))),
        Which::MovIneq => write_halfspaces(dim, &cones.mov_hrep, Some(&format!("Mov inequalities of {name}"))),
        Which::NefRays => write_rays(dim, &cones.nef_rays, Some(&format!("extremal rays of Nef of {name}"))),
        Which::MovRays => write_rays(dim, &cones.mov_rays, Some(&format!("extremal rays of Mov of {name}"))),
        Which::NeRays => write_rays(dim, &cones.ne_rays, Some(&format!("extremal rays of NE of {name}"))),
        Which::EffRays => write_rays(dim, &cones.eff_rays, Some(&format!("extremal rays of Eff of {name}"))),
    };
    match out {
        Some(p) => write_file(p, &text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let result = match &args.command {
        Command::Run {
            name,
            select,
            out,
            format,
            cross_check,
            hull_limit,
        } => run(name.as_ref(), select, out, *format, *cross_check, *hull_limit),
        Command::Export {
            positional,
            select,
            out,
        } => export(positional, select, out.as_deref()),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}
