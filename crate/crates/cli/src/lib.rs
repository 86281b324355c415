//! The `viswidth` command-line tool.
//!
//! Exit codes: 0 on success, 1 when an invariant check fails, 2 on bad input.

pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use viswidth::comb::generate_comb;
use viswidth::corpus::{corpus, DEFAULT_SEED};
use viswidth::geom::{make_chord, Chord, SimplePolygon};
use viswidth::graph::{build_restriction_graph, check_graph_properties};
use viswidth::io::{
    comb_to_json, graph_to_json, parse_point, parse_polygon, parse_segment, polygon_to_json, width_to_json,
};
use viswidth::sample::random_polygon;
use viswidth::visibility::{chord_interval, visibility_polygon, weak_visibility};
use viswidth::widths::{cvw_with_config, pvw, CvwConfig, CvwMode, WidthResult, Witness, DEFAULT_CAP};

use render::{render_svg, Overlay, RenderSpec};
use verify::{run_suites, Budget, Suite};

#[derive(Parser, Debug)]
#[command(name = "viswidth", version, about = "Point and chord visibility widths of simple polygons")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "VISWIDTH_SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate polygons.
    Gen {
        #[command(subcommand)]
        what: Gen,
    },
    /// Point visibility width.
    Pvw {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Chord visibility width.
    Cvw {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "certified")]
        mode: Mode,
        /// Chords drawn in sampled mode.
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        /// Candidate chords evaluated in certified mode.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// List the reflex vertices.
    Reflex { file: PathBuf },
    /// Build the restriction graph of a chord.
    Visgraph {
        file: PathBuf,
        /// Chord as AX,AY:BX,BY.
        #[arg(long)]
        chord: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Check the graph properties for this width bound.
        #[arg(long)]
        check: Option<usize>,
    },
    /// Run the invariant suites.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = Budget::default().points)]
        points: usize,
        #[arg(long, default_value_t = Budget::default().chords)]
        chords: usize,
        #[arg(long, default_value_t = Budget::default().graph_chords)]
        graph_chords: usize,
        #[arg(long, default_value_t = Budget::default().viewpoints)]
        viewpoints: usize,
    },
    /// Draw a polygon as SVG.
    Render {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Visibility region of a point X,Y.
        #[arg(long, conflicts_with_all = ["vis_chord", "graph"])]
        vis_point: Option<String>,
        /// Weak visibility region of a chord AX,AY:BX,BY, with the chord
        /// intervals of the reflex vertices.
        #[arg(long, conflicts_with = "graph")]
        vis_chord: Option<String>,
        /// Restriction graph of a chord AX,AY:BX,BY.
        #[arg(long)]
        graph: Option<String>,
        /// Mark the witness of a width.
        #[arg(long, value_enum)]
        witness: Option<WidthArg>,
        #[arg(long, default_value_t = 800.0)]
        size: f64,
        #[arg(long, default_value_t = 20.0)]
        margin: f64,
    },
}

#[derive(Subcommand, Debug)]
enum Gen {
    /// Iterated comb with K layers; the spike tree goes to --structure.
    Comb {
        #[arg(long)]
        layers: usize,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        structure: Option<PathBuf>,
    },
    /// Random simple polygon with integer vertices.
    Random {
        #[arg(long)]
        vertices: usize,
        #[arg(long, default_value_t = 64)]
        span: i64,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// The reference corpus, one file per polygon.
    Corpus {
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Certified,
    Sampled,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Widths,
    Graph,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum WidthArg {
    Pvw,
    Cvw,
}

enum Failure {
    /// Bad input: exit 2.
    Input(String),
    /// A check failed or the library reported an error: exit 1.
    Check(String),
}

type CmdResult = Result<(), Failure>;

fn input<E: std::fmt::Display>(context: &str) -> impl Fn(E) -> Failure + '_ {
    move |e| Failure::Input(format!("{context}: {e}"))
}

fn check<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Check(e.to_string())
}

fn io_err(e: std::io::Error) -> Failure {
    Failure::Check(format!("write failed: {e}"))
}

fn load(path: &Path) -> Result<SimplePolygon, Failure> {
    let text = fs::read_to_string(path).map_err(input(&format!("cannot read {}", path.display())))?;
    parse_polygon(&text).map_err(input(&path.display().to_string()))
}

fn chord_arg<'p>(poly: &'p SimplePolygon, text: &str) -> Result<Chord<'p>, Failure> {
    let (a, b) = parse_segment(text).map_err(input("invalid chord"))?;
    make_chord(poly, a, b).map_err(input("invalid chord"))
}

fn write_file(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))
}

/// Runs the tool and returns its exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    let seed = cli.seed;
    match cli.command {
        Command::Gen { what } => gen(what, seed, out),
        Command::Pvw { file, json } => {
            let poly = load(&file)?;
            let result = pvw(&poly).map_err(check)?;
            print_width(out, "pvw", &result, json)
        }
        Command::Cvw { file, mode, samples, cap, json } => {
            let poly = load(&file)?;
            let mode = match mode {
                Mode::Certified => CvwMode::CandidateCertified,
                Mode::Sampled => CvwMode::SampledLowerBound,
            };
            let config = CvwConfig { mode, samples, seed: seed.unwrap_or(0), cap };
            let result = cvw_with_config(&poly, &config).map_err(check)?;
            print_width(out, "cvw", &result, json)
        }
        Command::Reflex { file } => {
            let poly = load(&file)?;
            let reflex = poly.reflex_vertices();
            writeln!(out, "{}", reflex.len()).map_err(io_err)?;
            for r in reflex {
                writeln!(out, "{r}").map_err(io_err)?;
            }
            Ok(())
        }
        Command::Visgraph { file, chord, output, check: bound } => {
            let poly = load(&file)?;
            let chord = chord_arg(&poly, &chord)?;
            let g = build_restriction_graph(&poly, &chord).map_err(check)?;
            let text = graph_to_json(&g);
            match &output {
                Some(path) => write_file(path, &text)?,
                None => out.write_all(text.as_bytes()).map_err(io_err)?,
            }
            if let Some(k) = bound {
                let report = check_graph_properties(&g, k).map_err(check)?;
                write!(out, "{report}").map_err(io_err)?;
                if !report.passed() {
                    return Err(Failure::Check("restriction graph properties violated".into()));
                }
            }
            Ok(())
        }
        Command::Verify { files, suite, points, chords, graph_chords, viewpoints } => {
            let suite = match suite {
                SuiteArg::All => Suite::All,
                SuiteArg::Widths => Suite::Widths,
                SuiteArg::Graph => Suite::Graph,
            };
            let budget = Budget { points, chords, graph_chords, viewpoints, seed: seed.unwrap_or(0) };
            let polys = files.iter().map(|f| load(f)).collect::<Result<Vec<_>, _>>()?;
            let mut failed = 0;
            for (file, poly) in files.iter().zip(&polys) {
                writeln!(out, "{}", file.display()).map_err(io_err)?;
                for o in run_suites(poly, suite, &budget) {
                    failed += usize::from(!o.passed);
                    let status = if o.passed { "pass" } else { "FAIL" };
                    writeln!(out, "  {status} {:<20} {}", o.name, o.detail).map_err(io_err)?;
                }
            }
            writeln!(out, "{failed} failed").map_err(io_err)?;
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} checks failed")));
            }
            Ok(())
        }
        Command::Render { file, output, vis_point, vis_chord, graph, witness, size, margin } => {
            let poly = load(&file)?;
            let mut overlays = Vec::new();
            if let Some(text) = vis_point {
                let p = parse_point(&text).map_err(input("invalid viewpoint"))?;
                if !poly.locate(&p).is_inside() {
                    return Err(Failure::Input(format!("invalid viewpoint: {p} is outside the polygon")));
                }
                overlays.push(Overlay::Region(Box::new(visibility_polygon(&poly, &p).map_err(check)?)));
                overlays.push(Overlay::Viewpoint(p));
            }
            if let Some(text) = vis_chord {
                let chord = chord_arg(&poly, &text)?;
                overlays.push(Overlay::Region(Box::new(weak_visibility(&poly, &chord).map_err(check)?)));
                overlays.push(Overlay::Chord(chord.segment().clone()));
                let mut intervals = Vec::new();
                for r in poly.reflex_vertices() {
                    if let Some(iv) = chord_interval(&poly, &chord, &r).map_err(check)? {
                        intervals.push(iv);
                    }
                }
                overlays.push(Overlay::Intervals(intervals));
            }
            if let Some(text) = graph {
                let chord = chord_arg(&poly, &text)?;
                let g = build_restriction_graph(&poly, &chord).map_err(check)?;
                overlays.push(Overlay::Chord(chord.segment().clone()));
                overlays.push(Overlay::Graph(g));
            }
            if let Some(which) = witness {
                let (label, result) = match which {
                    WidthArg::Pvw => ("pvw", pvw(&poly).map_err(check)?),
                    WidthArg::Cvw => ("cvw", cvw_with_config(&poly, &CvwConfig::default()).map_err(check)?),
                };
                let label = format!("{label} = {}", result.value);
                match result.witness {
                    Witness::Point(at) => overlays.push(Overlay::Witness { label, at }),
                    Witness::Chord(s) => {
                        let at = s.midpoint();
                        overlays.push(Overlay::Chord(s));
                        overlays.push(Overlay::Witness { label, at });
                    }
                }
            }
            let spec = RenderSpec { polygon: poly, overlays, size, margin };
            write_file(&output, &render_svg(&spec))
        }
    }
}

fn gen(what: Gen, seed: Option<u64>, out: &mut dyn Write) -> CmdResult {
    match what {
        Gen::Comb { layers, output, structure } => {
            if layers == 0 {
                return Err(Failure::Input("--layers must be at least 1".into()));
            }
            let comb = generate_comb(layers).map_err(check)?;
            write_file(&output, &polygon_to_json(&comb.polygon))?;
            if let Some(path) = structure {
                write_file(&path, &comb_to_json(&comb))?;
            }
            Ok(())
        }
        Gen::Random { vertices, span, output } => {
            if vertices < 3 || span < 4 || vertices as i64 > span {
                return Err(Failure::Input(format!(
                    "need 3 <= vertices <= span and span >= 4, got {vertices} and {span}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            write_file(&output, &polygon_to_json(&random_polygon(vertices, span, &mut rng)))
        }
        Gen::Corpus { output } => {
            fs::create_dir_all(&output).map_err(input(&format!("cannot create {}", output.display())))?;
            let members = corpus(seed.unwrap_or(DEFAULT_SEED)).map_err(check)?;
            for (name, poly) in &members {
                write_file(&output.join(format!("{name}.json")), &polygon_to_json(poly))?;
            }
            writeln!(out, "{} polygons written to {}", members.len(), output.display()).map_err(io_err)
        }
    }
}

fn print_width(out: &mut dyn Write, which: &str, result: &WidthResult, json: bool) -> CmdResult {
    if json {
        return out.write_all(width_to_json(which, result).as_bytes()).map_err(io_err);
    }
    writeln!(out, "{}", result.value).map_err(io_err)?;
    match &result.witness {
        Witness::Point(p) => writeln!(out, "witness point {p}"),
        Witness::Chord(s) => writeln!(out, "witness chord {s}"),
    }
    .map_err(io_err)?;
    writeln!(out, "method {}, {} candidates", result.method, result.candidates_examined).map_err(io_err)
}
