//! Command-line front end: one subcommand per construction, text reports by
//! default and JSON with `--json`.
//!
//! Exit status: 0 visibility path (or success), 1 not a visibility path,
//! 2 star-shaped polygon where the cut criterion does not apply, 3 bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use vispath::certify::{
    self, certify_visibility_path, coverage_oracle, kernel_subpolygon, lemma1_check, lemma3_check, make_certified_route,
    SampleKind, SamplingConfig,
};
use vispath::cuts::{classified_cuts, essential_cuts, Cut};
use vispath::funnel::lemma2_report;
use vispath::gen::{gen_polygon, GenConfig};
use vispath::io::{self, Overlay, RenderStyle};
use vispath::{scalar, PolyPathQ, PolygonQ, Rational, Scalar};

#[derive(Parser)]
#[command(name = "vispath", version, about = "Cuts, pockets and visibility paths in simple polygons")]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Sampling {
    /// Grid pitch; defaults to a 64th of the bounding-box diagonal.
    #[arg(long)]
    pitch: Option<String>,
    /// Inward offset at vertices; defaults to a hundredth of the pitch.
    #[arg(long)]
    eps: Option<String>,
    /// Spacing of boundary samples; defaults to the pitch.
    #[arg(long)]
    spacing: Option<String>,
    #[arg(long, env = "VISPATH_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// List every cut with its pocket and essentiality.
    Cuts { polygon: PathBuf },
    /// List the essential cuts.
    Essential { polygon: PathBuf },
    /// Decide whether a path meets every essential cut.
    Certify { polygon: PathBuf, path: PathBuf },
    /// Sample the polygon and report points the path does not see.
    Oracle {
        polygon: PathBuf,
        path: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Check that unseen interior points come with unseen boundary points.
    Lemma1 {
        polygon: PathBuf,
        path: PathBuf,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Witnesses on the path for every vertex of every essential pocket.
    Lemma2 { polygon: PathBuf, path: PathBuf },
    /// Diagnostics on the region left after removing essential pockets.
    Lemma3 { polygon: PathBuf, path: PathBuf },
    /// Kernel of the polygon.
    Kernel { polygon: PathBuf },
    /// Region left after removing every essential pocket.
    QSubpolygon { polygon: PathBuf },
    /// A path through the midpoints of all essential cuts.
    Route { polygon: PathBuf },
    /// Generate a random simple polygon.
    Gen {
        #[arg(long, default_value_t = 12)]
        n: usize,
        #[arg(long, env = "VISPATH_SEED", default_value_t = 0)]
        seed: u64,
        /// Require an empty kernel.
        #[arg(long)]
        non_star: bool,
        /// Coordinates are integers in [0, range].
        #[arg(long, default_value_t = 64)]
        range: i64,
        #[arg(long, default_value_t = 1000)]
        max_retries: usize,
    },
    /// Draw the polygon, its cuts, an optional path and its unseen samples.
    Render {
        polygon: PathBuf,
        #[arg(long)]
        path: Option<PathBuf>,
        /// Mark samples the path does not see.
        #[arg(long, requires = "path")]
        uncovered: bool,
        #[command(flatten)]
        sampling: Sampling,
        #[arg(long, default_value = "red")]
        cut_color: String,
        #[arg(long, default_value = "blue")]
        path_color: String,
        #[arg(long)]
        essential_only: bool,
        #[arg(long)]
        show_pockets: bool,
        /// Pixels per unit; by default the drawing is about 800 pixels wide.
        #[arg(long)]
        scale: Option<String>,
        /// Write to a file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read_polygon(file: &Path) -> Result<PolygonQ> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    io::parse_polygon(&text).with_context(|| format!("in {}", file.display()))
}

fn read_path(poly: &PolygonQ, file: &Path) -> Result<PolyPathQ> {
    let text = fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let path: PolyPathQ = io::parse_path(&text).with_context(|| format!("in {}", file.display()))?;
    path.check_inside(poly).with_context(|| format!("path {}", file.display()))?;
    Ok(path)
}

fn rational(flag: &str, text: &str) -> Result<Rational> {
    Rational::parse_decimal(text).with_context(|| format!("--{flag}: not a number: {text}"))
}

fn sampling_config(poly: &PolygonQ, s: &Sampling) -> Result<SamplingConfig<Rational>> {
    let mut cfg = match &s.pitch {
        Some(p) => SamplingConfig::with_pitch(rational("pitch", p)?, s.seed),
        None => SamplingConfig::default_for(poly, s.seed),
    };
    if let Some(e) = &s.eps {
        cfg.vertex_offset_eps = rational("eps", e)?;
    }
    if let Some(b) = &s.spacing {
        cfg.boundary_spacing = rational("spacing", b)?;
    }
    cfg.check()?;
    Ok(cfg)
}

fn emit<S: Serialize>(json: bool, value: &S, text: impl FnOnce() -> String) {
    if json {
        print!("{}", io::to_json(value));
    } else {
        print!("{}", text());
    }
}

fn cut_lines(cuts: &[Cut<Rational>]) -> String {
    cuts.iter()
        .map(|c| {
            format!(
                "{} -> {}  generator {}  {}\n",
                c.v.display(),
                c.w.display(),
                c.u.display(),
                if c.is_essential() { "essential" } else { "redundant" }
            )
        })
        .collect()
}

fn ring_lines(ring: &[vispath::PointQ]) -> String {
    ring.iter().map(|p| format!("{} {}\n", scalar::display(&p.x), scalar::display(&p.y))).collect()
}

fn run(cli: Cli) -> Result<i32> {
    let json = cli.json;
    match cli.command {
        Command::Cuts { polygon } => {
            let cuts = classified_cuts(&read_polygon(&polygon)?);
            emit(json, &cuts, || cut_lines(&cuts));
        }
        Command::Essential { polygon } => {
            let cuts = essential_cuts(&read_polygon(&polygon)?);
            emit(json, &cuts, || cut_lines(&cuts));
        }
        Command::Certify { polygon, path } => {
            let poly = read_polygon(&polygon)?;
            let path = read_path(&poly, &path)?;
            let verdict = certify_visibility_path(&poly, &path)?;
            emit(json, &verdict, || {
                let mut out = String::new();
                for c in &verdict.per_cut {
                    let hit = match &c.first_hit_point {
                        Some(p) => format!("hit at {}", p.display()),
                        None if c.path_in_pocket => "missed, path lies inside its pocket".to_string(),
                        None => "missed".to_string(),
                    };
                    out += &format!("{} -> {}  {hit}\n", c.cut.v.display(), c.cut.w.display());
                }
                out += &format!("{:?}\n", verdict.conclusion);
                if verdict.per_cut.iter().any(|c| c.path_in_pocket) {
                    out += "a path inside a missed pocket may still see everything; run `vispath oracle`\n";
                }
                if !verdict.kernel_empty {
                    out += "polygon is star-shaped; run `vispath oracle` for ground truth\n";
                }
                out
            });
            return Ok(verdict.conclusion.exit_code());
        }
        Command::Oracle { polygon, path, sampling } => {
            let poly = read_polygon(&polygon)?;
            let path = read_path(&poly, &path)?;
            let report = coverage_oracle(&poly, &path, &sampling_config(&poly, &sampling)?)?;
            emit(json, &report, || {
                let mut out = format!("{} samples, {} uncovered\n", report.samples_total, report.uncovered.len());
                for s in &report.uncovered {
                    let kind = if s.kind == SampleKind::Interior { "interior" } else { "boundary" };
                    out += &format!("{} {kind}\n", s.point.display());
                }
                out
            });
            return Ok(if report.is_covered() { 0 } else { 1 });
        }
        Command::Lemma1 { polygon, path, sampling } => {
            let poly = read_polygon(&polygon)?;
            let path = read_path(&poly, &path)?;
            let record = lemma1_check(&poly, &path, &sampling_config(&poly, &sampling)?)?;
            emit(json, &record, || {
                let mut out = format!(
                    "boundary uncovered {}, interior uncovered {}\n",
                    record.boundary_uncovered, record.interior_uncovered
                );
                for w in &record.witnesses {
                    out += &format!(
                        "{} via {} -> {} {}\n",
                        w.x.display(),
                        w.v.display(),
                        w.x_prime.display(),
                        if w.x_prime_uncovered { "unseen" } else { "SEEN" }
                    );
                }
                out += if record.passed { "passed\n" } else { "FAILED\n" };
                out
            });
            return Ok(if record.passed { 0 } else { 1 });
        }
        Command::Lemma2 { polygon, path } => {
            let poly = read_polygon(&polygon)?;
            let path = read_path(&poly, &path)?;
            let report = lemma2_report(&poly, &essential_cuts(&poly), &path)?;
            emit(json, &report, || {
                let mut out = String::new();
                for c in &report.certificates {
                    out += &format!("{}  {:?}  witness {}\n", c.vertex.display(), c.case_tag, c.witness.display());
                }
                for (v, w, x) in &report.failures {
                    out += &format!("{}  no witness for cut {} -> {}\n", x.display(), v.display(), w.display());
                }
                out += if report.passed() { "passed\n" } else { "FAILED\n" };
                out
            });
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Lemma3 { polygon, path } => {
            let poly = read_polygon(&polygon)?;
            let path = read_path(&poly, &path)?;
            let report = lemma3_check(&poly, &path)?;
            emit(json, &report, || {
                let mut out = String::new();
                for v in &report.vertices {
                    out += &format!(
                        "{}  hits l1 {} l2 {}  sees t1 {} t2 {}  {}\n",
                        v.v.display(),
                        v.hits_l1,
                        v.hits_l2,
                        v.t1_seen,
                        v.t2_seen,
                        if v.passed { "ok" } else { "FAILED" }
                    );
                }
                if report.vacuous {
                    out += "remaining region is empty or convex\n";
                }
                out += if report.passed { "passed\n" } else { "FAILED\n" };
                out
            });
            return Ok(if report.passed { 0 } else { 1 });
        }
        Command::Kernel { polygon } => {
            let kernel = read_polygon(&polygon)?.kernel();
            emit(json, &kernel.region, || {
                if kernel.is_empty() {
                    "empty\n".into()
                } else {
                    ring_lines(&kernel.region)
                }
            });
        }
        Command::QSubpolygon { polygon } => {
            let d = kernel_subpolygon(&read_polygon(&polygon)?)?;
            emit(json, &d, || match &d.q {
                None => "empty\n".into(),
                Some(ring) => format!("{}{} reflex vertices\n", ring_lines(ring), d.reflex_diag.len()),
            });
        }
        Command::Route { polygon } => {
            let route = make_certified_route(&read_polygon(&polygon)?)?;
            emit(json, &route, || io::format_path(&route));
        }
        Command::Gen { n, seed, non_star, range, max_retries } => {
            let cfg = GenConfig { n, seed, coordinate_range: range, require_non_star: non_star, max_retries };
            let poly: PolygonQ = gen_polygon(&cfg)?;
            emit(json, &poly, || io::format_polygon(&poly));
        }
        Command::Render {
            polygon,
            path,
            uncovered,
            sampling,
            cut_color,
            path_color,
            essential_only,
            show_pockets,
            scale,
            output,
        } => {
            let poly = read_polygon(&polygon)?;
            let path = path.map(|p| read_path(&poly, &p)).transpose()?;
            let style = RenderStyle {
                cut_color,
                path_color,
                essential_only,
                show_pockets,
                scale: scale.map(|s| rational("scale", &s)).transpose()?,
            };
            let report = match (&path, uncovered) {
                (Some(path), true) => Some(certify::coverage_oracle(&poly, path, &sampling_config(&poly, &sampling)?)?),
                _ => None,
            };
            let overlay = report.as_ref().map_or(Overlay::None, Overlay::Report);
            let svg = io::render_svg(&poly, &classified_cuts(&poly), path.as_ref(), overlay, &style);
            match output {
                Some(file) => fs::write(&file, svg).with_context(|| format!("writing {}", file.display()))?,
                None => print!("{svg}"),
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(3)
        }
    }
}
