use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};
use linepat_core::lattice::{self, fibonacci_triangle, lattice_in_polygon, pentagon_counterexample};
use linepat_core::{origin_region, walk_face, DSide, Error as CoreError, LatticeSpec, PointSet, Subdivision};
use num_traits::ToPrimitive;

use crate::pointfile;
use crate::random;
use crate::report::{self, CensusSummary, Format};
use crate::svg::{self, RenderConfig, ViewBox};
use crate::verify::{self, Claim, Target, VerifyConfig};

/// Exact line-arrangement toolkit for lines Ax + By = 1.
#[derive(Debug, Parser)]
#[command(name = "linepat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a point set in the text format.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file (default: standard output).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Side-count histogram of the bounded faces.
    Census {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check a claim; exit status 1 if any check fails.
    Verify {
        #[arg(value_parser = parse_claim)]
        claim: Claim,
        /// Lattice "a,b,dx,dy,N,M" to check instead of the built-in inputs.
        #[arg(long, conflicts_with = "input", allow_hyphen_values = true)]
        lattice: Option<String>,
        /// Point-set file to check instead of the built-in inputs.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Largest grid [-n, n]^2 used by the grid-based checks.
        #[arg(long, default_value_t = 4)]
        grid_max: u32,
        #[arg(long, default_value_t = random::DEFAULT_SEED)]
        seed: u64,
        /// Number of random inputs per randomized check.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include per-check wall-clock time (makes output run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Walk one cell clockwise from a pair of consecutive sides.
    Walk {
        input: PathBuf,
        /// First side, as "p/q,r/s".
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        /// Second side, as "p/q,r/s".
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        /// Side of the first line the origin lies on: L or R.
        #[arg(long, value_parser = parse_d)]
        d: DSide,
    },
    /// Sides of the cell containing the origin.
    Origin { input: PathBuf },
    /// Draw the arrangement as SVG.
    Render {
        input: PathBuf,
        /// Output file (default: standard output).
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Fill faces with this many sides, e.g. "5:#cccccc"; repeatable.
        #[arg(long)]
        shade: Vec<String>,
        /// "xmin,ymin,xmax,ymax" (default: vertices plus 10% padding).
        #[arg(long, allow_hyphen_values = true)]
        viewbox: Option<String>,
        #[arg(long, default_value_t = 800)]
        width: u32,
        /// Label each line with its coefficient point.
        #[arg(long)]
        labels: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Rectangular lattice "a,b,dx,dy,N,M".
    Lattice {
        #[arg(allow_hyphen_values = true)]
        spec: String,
    },
    /// Integer grid [-n, n]^2 without the origin.
    Grid { n: u32 },
    /// The 3x3 array with a pentagonal cell.
    Pentagon,
    /// Lattice points of the n-th Fibonacci triangle.
    Fibtriangle { n: u32 },
    /// Lattice points of a convex polygon given by vertices "x,y".
    Polygon {
        #[arg(required = true, allow_hyphen_values = true)]
        vertices: Vec<String>,
    },
    /// Seeded random set with coordinates in [-3, 3].
    Random {
        #[arg(long, default_value_t = random::DEFAULT_SEED)]
        seed: u64,
        /// Largest number of points.
        #[arg(long, default_value_t = 7)]
        count: usize,
    },
}

fn parse_claim(s: &str) -> Result<Claim, String> {
    s.parse()
}

fn parse_d(s: &str) -> Result<DSide, String> {
    match s {
        "L" | "l" => Ok(DSide::L),
        "R" | "r" => Ok(DSide::R),
        _ => Err(format!("expected L or R, got {s:?}")),
    }
}

fn parse_lattice(s: &str) -> Result<LatticeSpec> {
    let v = pointfile::parse_list(s)?;
    if v.len() != 6 {
        bail!("lattice needs six values a,b,dx,dy,N,M; got {}", v.len());
    }
    let count = |r: &linepat_core::Rational, name: &str| -> Result<u32> {
        if !r.is_integer() {
            bail!("{name} must be a nonnegative integer");
        }
        r.to_integer().to_u32().ok_or_else(|| anyhow!("{name} must be a nonnegative integer"))
    };
    let (n, m) = (count(&v[4], "N")?, count(&v[5], "M")?);
    let mut it = v.into_iter();
    let mut next = || it.next().expect("six values");
    Ok(LatticeSpec::new(next(), next(), next(), next(), n, m)?)
}

fn parse_viewbox(s: &str) -> Result<ViewBox> {
    let v = pointfile::parse_list(s)?;
    let [xmin, ymin, xmax, ymax]: [_; 4] =
        v.try_into().map_err(|_| anyhow!("view box needs four values xmin,ymin,xmax,ymax"))?;
    ViewBox::new(xmin, ymin, xmax, ymax).map_err(|e| anyhow!(e))
}

fn parse_shade(s: &str) -> Result<(usize, String)> {
    let (count, color) = s.split_once(':').unwrap_or((s, "#cccccc"));
    let count: usize = count.trim().parse().with_context(|| format!("bad side count in shade {s:?}"))?;
    let color = color.trim();
    if !svg::valid_color(color) {
        bail!("bad colour {color:?} in shade {s:?}");
    }
    Ok((count, color.to_string()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => out.write_all(text.as_bytes()).context("cannot write output"),
    }
}

fn generate(kind: GenKind) -> Result<PointSet> {
    Ok(match kind {
        GenKind::Lattice { spec } => lattice::generate(&parse_lattice(&spec)?),
        GenKind::Grid { n } => {
            if n == 0 {
                bail!("grid size must be at least 1");
            }
            lattice::grid(n).with_label(format!("grid {n}"))
        }
        GenKind::Pentagon => pentagon_counterexample(),
        GenKind::Fibtriangle { n } => fibonacci_triangle(n)?,
        GenKind::Polygon { vertices } => {
            let vs = vertices.iter().map(|v| pointfile::parse_euclid(v)).collect::<Result<Vec<_>, _>>()?;
            lattice_in_polygon(&vs)?.with_label("polygon")
        }
        GenKind::Random { seed, count } => {
            if count == 0 {
                bail!("count must be at least 1");
            }
            random::point_set(&mut random::rng(seed), 1, count).with_label(format!("random seed={seed}"))
        }
    })
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Gen { kind, output } => {
            let set = generate(kind)?;
            emit(out, output.as_deref(), &pointfile::format(&set))?;
        }
        Command::Census { input, format } => {
            let s = pointfile::read(&input)?;
            let summary = CensusSummary::new(s.label(), &Subdivision::build(&s));
            let text = match format {
                Format::Text => summary.text(),
                Format::Json => summary.json(),
            };
            emit(out, None, &text)?;
        }
        Command::Verify { claim, lattice, input, grid_max, seed, trials, format, timing } => {
            let mut cfg = VerifyConfig { seed, grid_max, timing, ..VerifyConfig::default() };
            if let Some(t) = trials {
                cfg.lattices = t;
                cfg.transforms = t;
                cfg.engine_sets = t;
            }
            if let Some(spec) = lattice {
                cfg.target = Target::Lattice(Box::new(parse_lattice(&spec)?));
            } else if let Some(path) = input {
                cfg.target = Target::Set(pointfile::read(&path)?);
            }
            let reports = verify::run(claim, &cfg);
            let text = match format {
                Format::Text => report::verification_text(seed, &reports),
                Format::Json => report::verification_json(seed, &reports),
            };
            emit(out, None, &text)?;
            if reports.iter().any(|r| !r.passed) {
                return Ok(1);
            }
        }
        Command::Walk { input, from, to, d } => {
            let s = pointfile::read(&input)?;
            let p1 = pointfile::parse_point(&from)?;
            let p2 = pointfile::parse_point(&to)?;
            for p in [&p1, &p2] {
                if !s.contains(p) {
                    bail!("{p} is not in {}", input.display());
                }
            }
            let text = match walk_face(&s, &p1, &p2, d) {
                Ok(Some(w)) => {
                    let mut t = format!("sides: {}\n", w.len());
                    for (k, ((p, d), v)) in w.sides.iter().zip(&w.vertices).enumerate() {
                        t += &format!("  P_{} = {p}  D = {d}  corner {v}\n", k + 1);
                    }
                    t += &format!("contains origin: {}\n", if w.contains_origin { "yes" } else { "no" });
                    t
                }
                Ok(None) => "UNBOUNDED\n".to_string(),
                Err(CoreError::NotACellCorner) => {
                    bail!("{p1} then {p2} with D = {d} are not consecutive sides of any cell")
                }
                Err(e) => return Err(e.into()),
            };
            emit(out, None, &text)?;
        }
        Command::Origin { input } => {
            let s = pointfile::read(&input)?;
            if s.is_empty() {
                bail!("{} holds no points", input.display());
            }
            let r = origin_region(&s)?;
            let mut t = format!("case: {:?}\nbounded: {}\nsides: {}\n", r.case, r.bounded, r.sides.len());
            for (k, p) in r.sides.iter().enumerate() {
                t += &format!("  O_{} = {p}\n", k + 1);
            }
            emit(out, None, &t)?;
        }
        Command::Render { input, output, shade, viewbox, width, labels } => {
            if width == 0 {
                bail!("width must be positive");
            }
            let s = pointfile::read(&input)?;
            let mut cfg = RenderConfig { width, labels, ..RenderConfig::default() };
            if let Some(vb) = viewbox {
                cfg.view_box = Some(parse_viewbox(&vb)?);
            }
            if !shade.is_empty() {
                cfg.shade = shade.iter().map(|s| parse_shade(s)).collect::<Result<_>>()?;
                cfg.highlight = None;
            }
            let text = svg::render(&Subdivision::build(&s), &cfg);
            emit(out, output.as_deref(), &text)?;
        }
    }
    Ok(0)
}

/// Runs the command line and returns the process exit status: 0 on success,
/// 1 when a verification fails, 2 on usage or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return if code == 0 { 0 } else { 2 };
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            2
        }
    }
}
