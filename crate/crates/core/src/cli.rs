//! The `tubex` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hull::{FaceLattice, Facet};
use crate::io;
use crate::multiplihedron::{quotient_hull, variant_points, Multiplihedron, Variant};
use crate::poset::{MarkedTubingPoset, TubingPoset};
use crate::realize::{LatticePoint, WeightVector};
use crate::tubing::enumerate_unmarked_tubings;
use crate::verify::verify_all;

/// Default node limit for `tubes`.
pub const DEFAULT_TUBE_LIMIT: usize = 10;
/// Default node limit for everything else.
pub const DEFAULT_LIMIT: usize = 5;
pub const MAX_NODES_ENV: &str = "TUBEX_MAX_NODES";

#[derive(Parser, Debug)]
#[command(name = "tubex", version, about = "Marked tubings and exact realizations of graph multiplihedra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Connected node sets, plus the whole node set
    Tubes(Common),
    /// Unmarked tubings (faces of the graph associahedron)
    Tubings(Common),
    /// Marked tubings with their cover relations
    Marked(Common),
    /// Realized vertices
    Vertices(Common),
    /// Facet hyperplanes
    Facets(Common),
    /// Face lattice
    Lattice(Common),
    /// Face counts by dimension
    Fvector(Common),
    /// Run the claim suite
    Verify(Common),
    /// Write points or the lattice for external tools
    Export(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Graph file (JSON or line format) or preset such as `path:3`
    #[arg(long)]
    graph: String,
    /// Comma-separated node weights (default all 1)
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, value_enum, default_value_t = VariantArg::Full)]
    variant: VariantArg,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Seed for the random-weight trials
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest accepted graph; also read from TUBEX_MAX_NODES
    #[arg(long)]
    max_nodes: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Full,
    Domain,
    Range,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Full => Variant::Full,
            VariantArg::Domain => Variant::Domain,
            VariantArg::Range => Variant::Range,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Polymake,
    Off,
    Csv,
    Text,
}

enum Outcome {
    Done,
    ClaimsFailed,
}

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ScaleBound { .. } | Error::TooManyNodes { .. } => 3,
        Error::Parse(_)
        | Error::Weights(_)
        | Error::Unsupported(_)
        | Error::EmptyGraph
        | Error::NodeOutOfRange { .. }
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::DimensionMismatch(..) => 2,
        _ => 1,
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs `args` (program name first) and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::ClaimsFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "tubex: {e}");
            exit_code(&e)
        }
    }
}

struct Context {
    graph: Graph,
    weights: WeightVector,
    variant: Variant,
    format: Option<Format>,
    seed: u64,
}

fn node_limit(explicit: Option<usize>, default: usize) -> Result<usize> {
    if let Some(n) = explicit {
        return Ok(n);
    }
    match std::env::var(MAX_NODES_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{MAX_NODES_ENV}={v:?} is not a number"))),
        Err(_) => Ok(default),
    }
}

fn context(c: Common, default_limit: usize) -> Result<Context> {
    let graph = io::load_graph(&c.graph)?;
    let n = graph.node_count();
    let limit = node_limit(c.max_nodes, default_limit)?;
    if n > limit {
        return Err(Error::ScaleBound { what: "this command (raise --max-nodes)", n, limit });
    }
    let weights = match &c.weights {
        Some(s) => io::parse_weights(s, n)?,
        None => WeightVector::unit(n),
    };
    let variant = Variant::from(c.variant);
    if variant != Variant::Full && !weights.is_unit() {
        return Err(Error::Weights("quotient variants take unit weights only".into()));
    }
    Ok(Context { graph, weights, variant, format: c.format, seed: c.seed })
}

fn pick(format: Option<Format>, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Error::Unsupported(format!("format {f:?} is not available here")))
    }
}

fn write(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Unsupported(format!("write failed: {e}")))?;
    if !text.ends_with('\n') {
        out.write_all(b"\n").map_err(|e| Error::Unsupported(format!("write failed: {e}")))?;
    }
    Ok(())
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

// Points, facets and lattice of the requested variant.
struct Geometry {
    points: Vec<LatticePoint>,
    facets: Vec<Facet>,
    facet_labels: Option<Vec<crate::tubing::MarkedTubing>>,
    lattice: FaceLattice,
}

fn geometry(ctx: &Context) -> Result<Geometry> {
    match ctx.variant {
        Variant::Full => {
            let j = Multiplihedron::new(&ctx.graph, &ctx.weights)?;
            let labels = j.facet_tubings().iter().map(|&i| j.tubing(i).clone()).collect();
            Ok(Geometry {
                points: j.points().to_vec(),
                facets: j.facets().to_vec(),
                facet_labels: Some(labels),
                lattice: j.lattice().clone(),
            })
        }
        v => {
            let h = quotient_hull(&ctx.graph, v)?;
            Ok(Geometry { points: h.vertices, facets: h.facets, facet_labels: None, lattice: h.lattice })
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<Outcome> {
    match command {
        Command::Tubes(c) => {
            let ctx = context(c, DEFAULT_TUBE_LIMIT)?;
            let tubes = ctx.graph.enumerate_tubes()?;
            match pick(ctx.format, Format::Json, &[Format::Json, Format::Text])? {
                Format::Json => write(out, &serde_json::to_string(&tubes).expect("tubes serialize"))?,
                _ => write(out, &tubes.iter().map(|t| t.to_string()).collect::<Vec<_>>().join("\n"))?,
            }
        }
        Command::Tubings(c) => {
            let ctx = context(c, DEFAULT_LIMIT)?;
            match pick(ctx.format, Format::Json, &[Format::Json, Format::Text])? {
                Format::Json => {
                    let k = TubingPoset::new(&ctx.graph)?;
                    write(out, &io::poset_to_json(k.elements(), k.ranked()))?;
                }
                _ => {
                    let lines: Vec<String> = enumerate_unmarked_tubings(&ctx.graph)?
                        .iter()
                        .map(|t| t.tubes().iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" "))
                        .collect();
                    write(out, &lines.join("\n"))?;
                }
            }
        }
        Command::Marked(c) => {
            let ctx = context(c, DEFAULT_LIMIT)?;
            let p = MarkedTubingPoset::new(&ctx.graph)?;
            match pick(ctx.format, Format::Json, &[Format::Json, Format::Text])? {
                Format::Json => write(out, &io::poset_to_json(p.elements(), &p.ranked()))?,
                _ => {
                    let lines: Vec<String> = p.elements().iter().map(|t| format!("{} {t}", t.codimension())).collect();
                    write(out, &lines.join("\n"))?;
                }
            }
        }
        Command::Vertices(c) => {
            let ctx = context(c, DEFAULT_LIMIT)?;
            let pairs = variant_points(&ctx.graph, &ctx.weights, ctx.variant)?;
            match pick(ctx.format, Format::Json, &[Format::Json, Format::Polymake, Format::Text])? {
                Format::Json => {
                    let records: Vec<io::VertexRecord> =
                        pairs.into_iter().map(|(tubing, coords)| io::VertexRecord { tubing, coords }).collect();
                    write(out, &io::vertex_records_json(&records))?;
                }
                Format::Polymake => {
                    let mut pts: Vec<LatticePoint> = pairs.into_iter().map(|(_, p)| p).collect();
                    if ctx.variant != Variant::Full {
                        pts.sort();
                        pts.dedup();
                    }
                    write(out, &io::polymake_points(&pts))?;
                }
                _ => {
                    let lines: Vec<String> = pairs.iter().map(|(t, p)| format!("{p} {t}")).collect();
                    write(out, &lines.join("\n"))?;
                }
            }
        }
        Command::Facets(c) => {
            let ctx = context(c, DEFAULT_LIMIT)?;
            let geo = geometry(&ctx)?;
            let format = pick(ctx.format, Format::Json, &[Format::Json, Format::Text])?;
            let labels = geo.facet_labels.as_deref();
            if format == Format::Json {
                let records: Vec<_> = geo
                    .facets
                    .iter()
                    .enumerate()
                    .map(|(i, f)| {
                        json!({
                            "tubing": labels.map(|l| serde_json::to_value(&l[i]).expect("tubing serializes")),
                            "hyperplane": f.hyperplane,
                            "side": f.side,
                            "incident": f.incident,
                        })
                    })
                    .collect();
                write(out, &pretty(&records))?;
            } else {
                let lines: Vec<String> = geo
                    .facets
                    .iter()
                    .enumerate()
                    .map(|(i, f)| {
                        let rel = f.hyperplane.to_string().replacen(" = ", &format!(" {} ", f.side), 1);
                        match labels {
                            Some(l) => format!("{rel}  {}", l[i]),
                            None => rel,
                        }
                    })
                    .collect();
                write(out, &lines.join("\n"))?;
            }
        }
        Command::Lattice(c) => {
            let ctx = context(c, DEFAULT_LIMIT)?;
            pick(ctx.format, Format::Json, &[Format::Json])?;
            write(out, &io::lattice_to_json(&geometry(&ctx)?.lattice))?;
        }
        Command::Fvector(c) => {
            let ctx = context(c, DEFAULT_LIMIT)?;
            let lattice = geometry(&ctx)?.lattice;
            match pick(ctx.format, Format::Csv, &[Format::Csv, Format::Json, Format::Text])? {
                Format::Json => write(out, &serde_json::to_string(&lattice.f_vector()).expect("serializes"))?,
                _ => write(out, &io::fvector_csv(&lattice))?,
            }
        }
        Command::Verify(c) => {
            let ctx = context(c, DEFAULT_LIMIT)?;
            if ctx.variant != Variant::Full {
                return Err(Error::Unsupported("verify runs on the full variant".into()));
            }
            let report = verify_all(&ctx.graph, &ctx.weights, ctx.seed)?;
            match pick(ctx.format, Format::Text, &[Format::Text, Format::Json])? {
                Format::Json => write(out, &report.to_json())?,
                _ => write(out, &report.to_text())?,
            }
            if !report.passed() {
                return Ok(Outcome::ClaimsFailed);
            }
        }
        Command::Export(c) => {
            let ctx = context(c, DEFAULT_LIMIT)?;
            let format = pick(ctx.format, Format::Json, &[Format::Json, Format::Polymake, Format::Off, Format::Csv])?;
            let geo = geometry(&ctx)?;
            let text = match format {
                Format::Polymake => io::polymake_points(&geo.points),
                Format::Off => io::off_file(&geo.points, &geo.lattice)?,
                Format::Csv => io::fvector_csv(&geo.lattice),
                _ => io::lattice_to_json(&geo.lattice),
            };
            write(out, &text)?;
        }
    }
    Ok(Outcome::Done)
}
