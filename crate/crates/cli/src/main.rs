//! `sphere-chroma`: command-line front end.
//!
//! Every successful command prints one JSON document on stdout carrying
//! `"schema": "sphere-chroma/1"`, and a short human summary plus timing on
//! stderr. Exit codes: 0 success, 1 error reported by the library (its kind
//! is named in the diagnostic), 2 usage error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

use sphere_chroma::colorings::{self, search_cap_stripes_params, ColoringSpec};
use sphere_chroma::geom::{self, Radius, SpherePoint, Vec3};
use sphere_chroma::radius_class::{self, RationalAngle, DEFAULT_Q_MAX, DEFAULT_TOL};
use sphere_chroma::udg::{self, UnitDistanceGraph, EDGE_TOL};
use sphere_chroma::verifier;

const SCHEMA: &str = "sphere-chroma/1";

#[derive(Parser)]
#[command(name = "sphere-chroma", version, about = "Unit-distance geometry and colorings of spheres")]
struct Cli {
    /// Worker threads for parallel commands (default: all cores). Output
    /// does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Angle subtended on a unit circle by two of its points at unit distance.
    Theta(RadiusArg),
    /// The unit-distance circle of the north pole, optionally one point of it.
    UnitCircle {
        #[arg(long)]
        r: f64,
        /// Azimuth of a point to report on the circle.
        #[arg(long, allow_hyphen_values = true)]
        phi: Option<f64>,
    },
    /// Chordal distance between two points, given as x,y,z.
    Chord {
        #[arg(long)]
        r: f64,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Radius at which θ = (p/q)·π, with its parity classification.
    Radius(FractionArgs),
    /// Match θ(r)/π against fractions of bounded denominator.
    Classify {
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = DEFAULT_Q_MAX)]
        qmax: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Radii with θ = (p/q)·π, p odd, q ≤ qmax.
    Exceptional {
        #[arg(long)]
        qmax: u64,
    },
    /// Odd unit-distance cycle for θ = (p/q)·π with p even.
    Cycle {
        #[command(flatten)]
        fraction: FractionArgs,
        /// Also write the graph file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The diamond configuration and its axis distance D.
    Diamond(RadiusArg),
    /// The diamond criterion: D > 1/2 and the parity of β/π.
    Theorem4 {
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = DEFAULT_Q_MAX)]
        qmax: u64,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Explicit colorings and their verification.
    #[command(subcommand)]
    Coloring(ColoringCommand),
    /// Unit-distance graph files.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// Deterministic unit-distance pair samples.
    Sample {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        seed: u64,
        /// Emit CSV rows (index,x1,y1,z1,x2,y2,z2) instead of JSON.
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Args)]
struct RadiusArg {
    #[arg(long)]
    r: f64,
}

#[derive(Args)]
struct FractionArgs {
    #[arg(long)]
    p: u64,
    #[arg(long)]
    q: u64,
}

#[derive(Subcommand)]
enum ColoringCommand {
    /// Radius up to which (octa4: at which) the coloring is claimed proper.
    Threshold(NameArg),
    /// Color of one point.
    Color {
        #[arg(long)]
        name: String,
        #[arg(long)]
        r: f64,
        /// Point as x,y,z (projected onto the sphere).
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Count same-color pairs among n sampled unit-distance pairs.
    Verify {
        #[arg(long)]
        name: String,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        seed: u64,
    },
    /// Hill-climb for a same-color unit-distance pair.
    Adversarial {
        #[arg(long)]
        name: String,
        #[arg(long)]
        r: f64,
        #[arg(long, default_value_t = verifier::DEFAULT_SCAN_RESTARTS)]
        restarts: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Bisect the radius at which adversarial search starts finding violations.
    Scan {
        #[arg(long)]
        name: String,
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
        #[arg(long)]
        tol: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = verifier::DEFAULT_SCAN_RESTARTS)]
        restarts: usize,
        /// Emit the trace as CSV rows (r,found,margin) instead of JSON.
        #[arg(long)]
        csv: bool,
    },
    /// Search cap-and-stripes parameters for radius r ≤ 1/√3.
    CapParams {
        #[arg(long)]
        r: f64,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Args)]
struct NameArg {
    #[arg(long)]
    name: String,
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Exact chromatic number of a graph file.
    Chi {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Build a graph from {"radius": r, "points": [[x,y,z], ...]}.
    Build {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = EDGE_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Deserialize)]
struct PointSet {
    radius: f64,
    points: Vec<[f64; 3]>,
}

/// A failure, named by kind in the diagnostic.
struct Failure {
    kind: &'static str,
    message: String,
}

impl From<sphere_chroma::Error> for Failure {
    fn from(e: sphere_chroma::Error) -> Self {
        Failure { kind: e.kind(), message: e.to_string() }
    }
}

impl Failure {
    fn io(path: &Path, e: std::io::Error) -> Self {
        Failure { kind: "io", message: format!("{}: {e}", path.display()) }
    }

    fn parse(what: &str, e: impl std::fmt::Display) -> Self {
        Failure { kind: "invalid-input", message: format!("cannot parse {what}: {e}") }
    }
}

type Outcome = Result<Output, Failure>;

/// What a command produces: the JSON payload (or raw text for CSV modes)
/// and the human summary.
struct Output {
    stdout: String,
    summary: String,
}

fn payload(mut body: Value, summary: String) -> Output {
    body.as_object_mut().expect("payloads are objects").insert("schema".into(), SCHEMA.into());
    Output { stdout: format!("{body}\n"), summary }
}

/// `x` to 7 significant digits.
fn sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..=6).contains(&exp) {
        format!("{:.*}", (6 - exp).max(0) as usize, x)
    } else {
        format!("{x:.6e}")
    }
}

fn radius(r: f64) -> Result<Radius, Failure> {
    Ok(Radius::new(r)?)
}

fn point(r: Radius, text: &str) -> Result<SpherePoint, Failure> {
    let coords: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure::parse("point", e))?;
    let [x, y, z] = coords[..] else {
        return Err(Failure::parse("point", format!("expected x,y,z, got '{text}'")));
    };
    Ok(SpherePoint::new(Vec3::new(x, y, z), r)?)
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::io(path, e))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure::io(path, e))
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Theta(RadiusArg { r }) => {
            let t = geom::theta(radius(r)?)?;
            Ok(payload(json!({ "r": r, "theta": t }), format!("θ({}) = {} rad", sig(r), sig(t))))
        }
        Command::UnitCircle { r, phi } => {
            let c = geom::unit_circle(radius(r)?)?;
            let mut body = json!({ "r": r, "R": c.radius, "z0": c.height });
            if let Some(phi) = phi {
                body["phi"] = phi.into();
                body["point"] = c.point(phi).to_array().into();
            }
            Ok(payload(body, format!("R = {}, z0 = {}", sig(c.radius), sig(c.height))))
        }
        Command::Chord { r, a, b } => {
            let rr = radius(r)?;
            let d = geom::chord_distance(&point(rr, &a)?, &point(rr, &b)?)?;
            Ok(payload(json!({ "r": r, "chord": d }), format!("chord = {}", sig(d))))
        }
        Command::Radius(FractionArgs { p, q }) => {
            let a = RationalAngle::new(p, q)?;
            let r = radius_class::radius_from_rational(&a).get();
            let class = radius_class::theorem1_applicable(&a);
            Ok(payload(
                json!({ "p": p, "q": q, "r": r, "classification": class }),
                format!("θ = {a}·π at r = {} ({:?})", sig(r), class.verdict),
            ))
        }
        Command::Classify { r, qmax, tol } => {
            let class = radius_class::classify_radius(radius(r)?, qmax, tol)?;
            let mut body = serde_json::to_value(class).expect("classifications serialize");
            body["r"] = r.into();
            let summary = match class.matched {
                Some(a) => format!("{:?}: θ/π = {a}", class.verdict),
                None => format!("no fraction with q ≤ {qmax} within {tol:e} (not a proof of irrationality)"),
            };
            Ok(payload(body, summary))
        }
        Command::Exceptional { qmax } => {
            let list = radius_class::enumerate_exceptional(qmax);
            let rows: Vec<Value> = list.iter().map(|(a, r)| json!({ "p": a.p(), "q": a.q(), "r": r.get() })).collect();
            let summary = list.iter().map(|(a, r)| format!("{a} → {}", sig(r.get()))).collect::<Vec<_>>().join(", ");
            Ok(payload(json!({ "q_max": qmax, "exceptional": rows }), format!("{} radii: {summary}", list.len())))
        }
        Command::Cycle { fraction: FractionArgs { p, q }, out } => {
            let a = RationalAngle::new(p, q)?;
            let g = udg::build_cycle(&a)?;
            let order = udg::cycle_order(&a)?;
            let file = g.to_file();
            if let Some(path) = &out {
                write(path, &(serde_json::to_string(&file).expect("graphs serialize") + "\n"))?;
            }
            Ok(payload(
                json!({ "p": p, "q": q, "r": g.r.get(), "order": order, "graph": file }),
                format!("{q}-cycle at r = {}, visiting {order:?}", sig(g.r.get())),
            ))
        }
        Command::Diamond(RadiusArg { r }) => {
            let rr = radius(r)?;
            let cfg = udg::measure_diamond(rr)?;
            let verbatim = udg::d_closed_form(rr)?;
            let reconciled = udg::d_reconciled(rr)?;
            let mut body = serde_json::to_value(cfg).expect("diamonds serialize");
            body["r"] = r.into();
            body["d_closed_form"] = verbatim.into();
            body["d_closed_form_deviation"] = (verbatim - cfg.d_measured).into();
            body["d_reconciled"] = reconciled.into();
            body["d_reconciled_deviation"] = (reconciled - cfg.d_measured).into();
            Ok(payload(
                body,
                format!(
                    "D = {} (printed closed form {}, reconciled {})",
                    sig(cfg.d_measured),
                    sig(verbatim),
                    sig(reconciled)
                ),
            ))
        }
        Command::Theorem4 { r, qmax, tol } => {
            let rep = udg::theorem4_applicable(radius(r)?, qmax, tol)?;
            let body = serde_json::to_value(rep).expect("reports serialize");
            Ok(payload(body, format!("D = {}: {:?}", sig(rep.d_measured), rep.verdict)))
        }
        Command::Coloring(c) => run_coloring(c),
        Command::Graph(g) => run_graph(g),
        Command::Sample { r, n, seed, csv } => {
            let rr = radius(r)?;
            let samples = (0..n).map(|i| verifier::sample_unit_pair(rr, seed, i)).collect::<Result<Vec<_>, _>>()?;
            let summary = format!("{n} unit pairs at r = {} from seed {seed}", sig(r));
            if csv {
                let mut text = String::from("index,x1,y1,z1,x2,y2,z2\n");
                for s in &samples {
                    let ([a, b, c], [d, e, f]) = (s.x.to_array(), s.y.to_array());
                    text += &format!("{},{a},{b},{c},{d},{e},{f}\n", s.index);
                }
                return Ok(Output { stdout: text, summary });
            }
            Ok(payload(json!({ "r": r, "n": n, "seed": seed, "samples": samples }), summary))
        }
    }
}

fn run_coloring(command: ColoringCommand) -> Outcome {
    match command {
        ColoringCommand::Threshold(NameArg { name }) => {
            let t = colorings::claimed_threshold(&name)?;
            Ok(payload(json!({ "name": name, "threshold": t }), format!("{name}: {t:?}")))
        }
        ColoringCommand::Color { name, r, point: text } => {
            let spec = ColoringSpec::by_name(&name)?;
            let x = point(radius(r)?, &text)?;
            let c = spec.color(&x);
            Ok(payload(json!({ "name": name, "r": r, "point": x, "color": c }), format!("{name}: color {c}")))
        }
        ColoringCommand::Verify { name, r, n, seed } => {
            let spec = ColoringSpec::by_name(&name)?;
            let rep = verifier::verify_coloring(&spec, radius(r)?, n, seed)?;
            let summary = format!(
                "{name} at r = {}: {} violations in {n} pairs, worst margin {} ({:.3} s)",
                sig(r),
                rep.violations,
                sig(rep.worst_margin),
                rep.elapsed.as_secs_f64()
            );
            Ok(payload(serde_json::to_value(rep).expect("reports serialize"), summary))
        }
        ColoringCommand::Adversarial { name, r, restarts, seed } => {
            let spec = ColoringSpec::by_name(&name)?;
            let res = verifier::adversarial_search(&spec, radius(r)?, restarts, seed)?;
            let mut body = serde_json::to_value(&res).expect("results serialize");
            body["name"] = name.clone().into();
            body["r"] = r.into();
            body["seed"] = seed.into();
            body["restarts"] = restarts.into();
            let verdict = if res.found { "violation found" } else { "no violation found" };
            Ok(payload(body, format!("{name} at r = {}: {verdict}, margin {}", sig(r), sig(res.margin))))
        }
        ColoringCommand::Scan { name, lo, hi, tol, seed, restarts, csv } => {
            let spec = ColoringSpec::by_name(&name)?;
            let res = verifier::threshold_scan_with(&spec, radius(lo)?, radius(hi)?, tol, seed, restarts)?;
            let summary = format!("{name}: threshold ≈ {} ({} probes)", sig(res.estimate), res.trace.len());
            if csv {
                let mut text = String::from("r,found,margin\n");
                for s in &res.trace {
                    text += &format!("{},{},{}\n", s.r, s.found, s.margin);
                }
                return Ok(Output { stdout: text, summary });
            }
            let mut body = serde_json::to_value(&res).expect("scans serialize");
            body["name"] = name.into();
            body["tol"] = tol.into();
            Ok(payload(body, summary))
        }
        ColoringCommand::CapParams { r, seed } => {
            let found = search_cap_stripes_params(radius(r)?, seed)?;
            let spec = ColoringSpec::cap_stripes(found.params)?;
            let mut body = serde_json::to_value(&found).expect("searches serialize");
            body["r"] = r.into();
            body["params_hash"] = spec.params_hash().into();
            Ok(payload(
                body,
                format!(
                    "cap colatitude {} after {} evaluations, margin {}",
                    sig(found.params.cap_colatitude),
                    found.evaluations,
                    sig(found.margin)
                ),
            ))
        }
    }
}

fn run_graph(command: GraphCommand) -> Outcome {
    match command {
        GraphCommand::Chi { input } => {
            let g = UnitDistanceGraph::from_json(&read(&input)?)?;
            let sol = udg::chromatic_number(&g);
            let summary = format!(
                "χ = {} on {} vertices, {} edges ({})",
                sol.k,
                g.vertex_count(),
                g.edges.len(),
                if sol.optimal { "optimal" } else { "budget exhausted: upper bound only" }
            );
            Ok(payload(
                json!({
                    "chi": sol.k,
                    "optimal": sol.optimal,
                    "lower_bound": sol.lower_bound,
                    "assignment": sol.assignment,
                    "vertices": g.vertex_count(),
                    "edges": g.edges.len(),
                }),
                summary,
            ))
        }
        GraphCommand::Build { input, tol, out } => {
            let set: PointSet = serde_json::from_str(&read(&input)?).map_err(|e| Failure::parse("point set", e))?;
            let r = radius(set.radius)?;
            let points =
                set.points.iter().map(|p| SpherePoint::new(Vec3::from(*p), r)).collect::<Result<Vec<_>, _>>()?;
            let g = udg::build_graph(points, tol)?;
            let file = g.to_file();
            if let Some(path) = &out {
                write(path, &(serde_json::to_string(&file).expect("graphs serialize") + "\n"))?;
            }
            let summary = format!("{} vertices, {} unit edges", g.vertex_count(), g.edges.len());
            Ok(payload(json!({ "graph": file }), summary))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error[invalid-input]: cannot start {} worker threads: {e}", cli.threads.unwrap_or(0));
            return ExitCode::from(1);
        }
    };
    let start = Instant::now();
    match pool.install(|| run(cli.command)) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprintln!("{}", out.summary);
            eprintln!("elapsed: {:.3} s", start.elapsed().as_secs_f64());
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error[{}]: {}", f.kind, f.message);
            ExitCode::from(1)
        }
    }
}
