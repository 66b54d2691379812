//! Command-line front end for the nckit library.
//!
//! Five subcommands: `enum` streams whole structure families, `map` applies
//! one construction to one serialized value, `verify` replays an identity
//! check over a size range, `count` evaluates the closed-form counts, and
//! `render` writes an SVG chord diagram. Everything here is plumbing; the
//! constructions themselves live in the library.
//!
//! Exit codes: 0 success, 1 failed verification or round-trip check, 2 bad
//! command line, 3 refused size guard, 4 unreadable or invalid input,
//! 5 unwritable output.

use std::collections::BTreeSet;
use std::fmt::Display;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nckit::bijections::{self, SymmetricTernaryTree};
use nckit::checks;
use nckit::counting::{self, Report};
use nckit::enumerate::{self, GRAPH_ENUM_MAX};
use nckit::graphs;
use nckit::model::{
    Descent, LRTree, MarkedNCGraph, NoncrossingGraph, NoncrossingTree, PlaneTree, TernaryTree,
    Vertex,
};
use nckit::parity::{self, Parity};
use nckit::render::Diagram;
use nckit::represent;

/// Largest edge count `enum` accepts without `--force`.
const DEFAULT_EDGE_GUARD: usize = 10;

/// Largest vertex count `enum` accepts without `--force`.
const DEFAULT_VERTEX_GUARD: u32 = 8;

#[derive(Parser)]
#[command(
    name = "nckit",
    version,
    about = "Noncrossing trees and connected noncrossing graphs: \
             enumeration, bijections, exact counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every member of a structure family, one per line
    #[command(name = "enum")]
    Enumerate(EnumArgs),
    /// Apply one construction to one serialized structure
    Map(MapArgs),
    /// Re-check an identity over a size range and report every equation
    Verify(VerifyArgs),
    /// Evaluate a closed-form count exactly
    Count(CountArgs),
    /// Draw a tree or graph as an SVG chord diagram
    Render(RenderArgs),
}

#[derive(Args)]
struct EnumArgs {
    /// Family to enumerate
    #[arg(value_enum)]
    family: Family,
    /// Edge count; selects the size for trees, lr, plane and even, and
    /// filters graphs and marked by edge count
    #[arg(long)]
    edges: Option<usize>,
    /// Vertex count for graphs and marked
    #[arg(long)]
    vertices: Option<u32>,
    /// Number of marked free edges for the marked family
    #[arg(long)]
    marks: Option<usize>,
    /// Internal node count for ternary and symmetric
    #[arg(long)]
    internal: Option<usize>,
    /// Keep only trees of one descent class
    #[arg(long, value_enum, default_value_t = ClassFilter::All)]
    class: ClassFilter,
    /// Output shape
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Run past the size guard anyway (a warning still goes to stderr)
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Noncrossing trees with a given edge count
    Trees,
    /// Left-right labelled plane representations of those trees
    Lr,
    /// Plane trees with a given edge count
    Plane,
    /// Plane trees whose non-root vertices all have odd child counts
    Even,
    /// Ternary trees with a given internal node count
    Ternary,
    /// Ternary trees equal to their own reflection
    Symmetric,
    /// Connected noncrossing graphs with a given vertex count
    Graphs,
    /// Connected noncrossing graphs with marked free edges
    Marked,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassFilter {
    All,
    Even,
    Odd,
    Proper,
    Improper,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Args)]
struct MapArgs {
    /// Construction to apply
    #[arg(value_enum)]
    name: MapName,
    /// Serialized input structure
    #[arg(long)]
    input: String,
    /// Descent `parent-child` of the input tree; companion takes exactly
    /// one, assemble takes any number
    #[arg(long = "descent")]
    descents: Vec<String>,
    /// Apply the inverse construction and confirm the input returns
    #[arg(long)]
    check_roundtrip: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MapName {
    /// Noncrossing tree to labelled plane representation
    ToLr,
    /// Labelled plane representation to noncrossing tree
    FromLr,
    /// Even plane tree to ternary tree
    Psi,
    /// Ternary tree to even plane tree
    PsiInverse,
    /// Proper noncrossing tree to symmetric ternary tree
    Sigma,
    /// Symmetric ternary tree to proper noncrossing tree
    SigmaInverse,
    /// Parity-reversing involution on improper trees; accepts either
    /// serialization and answers in kind
    Phi,
    /// Canonical spanning tree of a connected noncrossing graph
    CanonicalTree,
    /// Companion edge of one descent
    Companion,
    /// Tree plus chosen descents to the assembled graph
    Assemble,
    /// Toggle the companion edge of the least unmarked descent
    CompanionInvolution,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity to check; `verify --identity list` is rejected with the
    /// full list in the message
    #[arg(long)]
    identity: String,
    /// Override the default size bound
    #[arg(long)]
    max_n: Option<u64>,
    /// Report shape
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    format: ReportFormat,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct CountArgs {
    /// Which count: c trees by edges, s symmetric ternary by internal
    /// nodes, d trees by edges and descents, n graphs by vertices and edges
    #[arg(value_enum)]
    quantity: Quantity,
    /// Size parameter (edge count for c and d, internal nodes for s,
    /// vertex count minus one for n)
    #[arg(long)]
    n: i64,
    /// Second parameter: descent count for d, edge count for n
    #[arg(long)]
    k: Option<i64>,
    /// Sweep every size up to --n and print CSV instead of one value
    #[arg(long)]
    table: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    C,
    S,
    D,
    N,
}

#[derive(Args)]
struct RenderArgs {
    /// Serialized tree (`nct:`) or graph (`ncg:`, marks starred)
    #[arg(long)]
    input: String,
    /// Path of the SVG file to write
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Enumerate(args) => run_enum(args),
        Command::Map(args) => run_map(args),
        Command::Verify(args) => run_verify(args),
        Command::Count(args) => run_count(args),
        Command::Render(args) => run_render(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

// ============================================================================
// Failure plumbing
// ============================================================================

/// A terminal failure: the process exit code plus a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn check(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }

    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn guard(message: impl Into<String>) -> Failure {
        Failure { code: 3, message: message.into() }
    }

    fn input(message: impl Into<String>) -> Failure {
        Failure { code: 4, message: message.into() }
    }

    fn output(message: impl Into<String>) -> Failure {
        Failure { code: 5, message: message.into() }
    }
}

/// A closed pipe on stdout ends the run quietly; any other write error is a
/// real failure.
fn io_failure(e: io::Error) -> Failure {
    if e.kind() == io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    Failure::output(format!("cannot write output: {e}"))
}

fn emit(out: &mut impl Write, line: impl Display) -> Result<(), Failure> {
    writeln!(out, "{line}").map_err(io_failure)
}

fn parse_input<T>(text: &str, what: &str) -> Result<T, Failure>
where
    T: FromStr,
    T::Err: Display,
{
    text.parse().map_err(|e| Failure::input(format!("cannot read {what}: {e}")))
}

// ============================================================================
// Size guards
// ============================================================================

struct Guards {
    edges: usize,
    vertices: u32,
}

/// Reads `NCKIT_GUARD` (one number applied to both limits) or falls back to
/// the defaults.
fn guards() -> Result<Guards, Failure> {
    match std::env::var("NCKIT_GUARD") {
        Err(std::env::VarError::NotPresent) => {
            Ok(Guards { edges: DEFAULT_EDGE_GUARD, vertices: DEFAULT_VERTEX_GUARD })
        }
        Err(e) => Err(Failure::usage(format!("NCKIT_GUARD is unreadable: {e}"))),
        Ok(raw) => {
            let value: u32 = raw
                .trim()
                .parse()
                .map_err(|_| Failure::usage(format!("NCKIT_GUARD must be a number, got {raw:?}")))?;
            Ok(Guards { edges: value as usize, vertices: value })
        }
    }
}

fn check_guard(force: bool, what: &str, requested: u64, limit: u64) -> Result<(), Failure> {
    if requested <= limit {
        return Ok(());
    }
    if force {
        eprintln!("warning: {what} {requested} exceeds the guard of {limit}; continuing under --force");
        return Ok(());
    }
    Err(Failure::guard(format!(
        "{what} {requested} exceeds the guard of {limit}; pass --force or set NCKIT_GUARD"
    )))
}

// ============================================================================
// enum
// ============================================================================

fn require<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::usage(format!("{flag} is required for the {family} family")))
}

fn reject_flags(family: &str, offending: &[(&str, bool)]) -> Result<(), Failure> {
    for &(flag, present) in offending {
        if present {
            return Err(Failure::usage(format!("{flag} does not apply to the {family} family")));
        }
    }
    Ok(())
}

fn run_enum(args: EnumArgs) -> Result<(), Failure> {
    let guards = guards()?;
    if args.class != ClassFilter::All && args.family != Family::Trees {
        return Err(Failure::usage("--class only applies to the trees family"));
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut count: u64 = 0;
    match args.family {
        Family::Trees => {
            reject_flags(
                "trees",
                &[
                    ("--vertices", args.vertices.is_some()),
                    ("--marks", args.marks.is_some()),
                    ("--internal", args.internal.is_some()),
                ],
            )?;
            let n = require(args.edges, "--edges", "trees")?;
            check_guard(args.force, "edge count", n as u64, guards.edges as u64)?;
            for t in enumerate::noncrossing_trees(n) {
                let keep = match args.class {
                    ClassFilter::All => true,
                    ClassFilter::Even => parity::tree_parity(&t) == Parity::Even,
                    ClassFilter::Odd => parity::tree_parity(&t) == Parity::Odd,
                    ClassFilter::Proper => parity::is_proper(&t),
                    ClassFilter::Improper => !parity::is_proper(&t),
                };
                if !keep {
                    continue;
                }
                count += 1;
                match args.format {
                    OutputFormat::Text => emit(&mut out, &t)?,
                    OutputFormat::Json => emit(
                        &mut out,
                        serde_json::json!({
                            "tree": t.to_string(),
                            "descents": t.descent_count(),
                            "parity": parity::tree_parity(&t).to_string(),
                            "class": if parity::is_proper(&t) { "proper" } else { "improper" },
                        }),
                    )?,
                }
            }
        }
        Family::Lr => {
            reject_flags(
                "lr",
                &[
                    ("--vertices", args.vertices.is_some()),
                    ("--marks", args.marks.is_some()),
                    ("--internal", args.internal.is_some()),
                ],
            )?;
            let n = require(args.edges, "--edges", "lr")?;
            check_guard(args.force, "edge count", n as u64, guards.edges as u64)?;
            for l in enumerate::lr_trees(n) {
                count += 1;
                match args.format {
                    OutputFormat::Text => emit(&mut out, &l)?,
                    OutputFormat::Json => emit(
                        &mut out,
                        serde_json::json!({
                            "lr": l.to_string(),
                            "descents": represent::descent_count(&l),
                        }),
                    )?,
                }
            }
        }
        Family::Plane | Family::Even => {
            let family = if args.family == Family::Plane { "plane" } else { "even" };
            reject_flags(
                family,
                &[
                    ("--vertices", args.vertices.is_some()),
                    ("--marks", args.marks.is_some()),
                    ("--internal", args.internal.is_some()),
                ],
            )?;
            let n = require(args.edges, "--edges", family)?;
            check_guard(args.force, "edge count", n as u64, guards.edges as u64)?;
            let stream: Box<dyn Iterator<Item = PlaneTree>> = if args.family == Family::Plane {
                Box::new(enumerate::plane_trees(n))
            } else {
                Box::new(enumerate::even_plane_trees(n))
            };
            for p in stream {
                count += 1;
                match args.format {
                    OutputFormat::Text => emit(&mut out, &p)?,
                    OutputFormat::Json => emit(
                        &mut out,
                        serde_json::json!({
                            "plane": p.to_string(),
                            "edges": p.edge_count(),
                        }),
                    )?,
                }
            }
        }
        Family::Ternary | Family::Symmetric => {
            let family = if args.family == Family::Ternary { "ternary" } else { "symmetric" };
            reject_flags(
                family,
                &[
                    ("--edges", args.edges.is_some()),
                    ("--vertices", args.vertices.is_some()),
                    ("--marks", args.marks.is_some()),
                ],
            )?;
            let m = require(args.internal, "--internal", family)?;
            check_guard(args.force, "internal node count", m as u64, guards.edges as u64)?;
            let stream: Box<dyn Iterator<Item = TernaryTree>> =
                if args.family == Family::Ternary {
                    enumerate::ternary_trees(m)
                } else {
                    Box::new(
                        enumerate::symmetric_ternary_trees(m)
                            .map(SymmetricTernaryTree::into_inner),
                    )
                };
            for t in stream {
                count += 1;
                match args.format {
                    OutputFormat::Text => emit(&mut out, &t)?,
                    OutputFormat::Json => emit(
                        &mut out,
                        serde_json::json!({
                            "ternary": t.to_string(),
                            "internal": t.internal_count(),
                        }),
                    )?,
                }
            }
        }
        Family::Graphs => {
            reject_flags(
                "graphs",
                &[("--marks", args.marks.is_some()), ("--internal", args.internal.is_some())],
            )?;
            let v = require(args.vertices, "--vertices", "graphs")?;
            check_enumerable_vertices(args.force, v, &guards)?;
            for g in enumerate::connected_nc_graphs(v, args.edges) {
                count += 1;
                emit_graph(&mut out, args.format, &g, None)?;
            }
        }
        Family::Marked => {
            reject_flags("marked", &[("--internal", args.internal.is_some())])?;
            let v = require(args.vertices, "--vertices", "marked")?;
            let marks = require(args.marks, "--marks", "marked")?;
            check_enumerable_vertices(args.force, v, &guards)?;
            for m in enumerate::marked_graphs(v, marks) {
                if let Some(e) = args.edges {
                    if m.graph().edge_count() != e {
                        continue;
                    }
                }
                count += 1;
                emit_marked(&mut out, args.format, &m)?;
            }
        }
    }
    match args.format {
        OutputFormat::Text => emit(&mut out, format_args!("count {count}"))?,
        OutputFormat::Json => emit(&mut out, serde_json::json!({ "count": count }))?,
    }
    out.flush().map_err(io_failure)
}

/// Vertex guard plus the hard enumeration cap; `--force` cannot lift the
/// latter because the chord bitmasks run out of bits.
fn check_enumerable_vertices(force: bool, v: u32, guards: &Guards) -> Result<(), Failure> {
    if v == 0 {
        return Err(Failure::usage("--vertices must be at least 1"));
    }
    if v > GRAPH_ENUM_MAX {
        return Err(Failure::guard(format!(
            "graph enumeration stops at {GRAPH_ENUM_MAX} vertices; {v} is out of reach"
        )));
    }
    check_guard(force, "vertex count", u64::from(v), u64::from(guards.vertices))
}

fn emit_graph(
    out: &mut impl Write,
    format: OutputFormat,
    g: &NoncrossingGraph,
    marks: Option<usize>,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Text => emit(out, g),
        OutputFormat::Json => {
            let mut value = serde_json::json!({
                "graph": g.to_string(),
                "edges": g.edge_count(),
                "free": graphs::free_edges(g).len(),
            });
            if let Some(k) = marks {
                value["marks"] = serde_json::json!(k);
            }
            emit(out, value)
        }
    }
}

fn emit_marked(
    out: &mut impl Write,
    format: OutputFormat,
    m: &MarkedNCGraph,
) -> Result<(), Failure> {
    match format {
        OutputFormat::Text => emit(out, m),
        OutputFormat::Json => emit(
            out,
            serde_json::json!({
                "graph": m.to_string(),
                "edges": m.graph().edge_count(),
                "marks": m.marked().len(),
            }),
        ),
    }
}

// ============================================================================
// map
// ============================================================================

fn print_result(line: impl Display) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    writeln!(out, "{line}").map_err(io_failure)
}

fn ensure_roundtrip(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::check("round trip failed: the inverse image differs from the input"))
    }
}

fn parse_descent(text: &str) -> Result<Descent, Failure> {
    let err = || {
        Failure::input(format!(
            "descent must look like parent-child with parent > child >= 1, got {text:?}"
        ))
    };
    let parts: Vec<&str> = text.trim().split('-').collect();
    let &[p, c] = &parts[..] else {
        return Err(err());
    };
    let parent: u32 = p.trim().parse().map_err(|_| err())?;
    let child: u32 = c.trim().parse().map_err(|_| err())?;
    if child == 0 || parent <= child {
        return Err(err());
    }
    Ok(Descent::new(Vertex(parent), Vertex(child)))
}

fn ensure_descent_of(t: &NoncrossingTree, d: Descent) -> Result<(), Failure> {
    if t.parent_of(d.child()) == Some(d.parent()) {
        Ok(())
    } else {
        Err(Failure::input(format!("{d} is not a descent of the tree")))
    }
}

fn run_map(args: MapArgs) -> Result<(), Failure> {
    let input = args.input.trim();
    let takes_descents = matches!(args.name, MapName::Companion | MapName::Assemble);
    if !args.descents.is_empty() && !takes_descents {
        return Err(Failure::usage("--descent only applies to companion and assemble"));
    }
    let check = args.check_roundtrip;
    match args.name {
        MapName::ToLr => {
            let t: NoncrossingTree = parse_input(input, "noncrossing tree")?;
            let image = represent::to_lr_tree(&t);
            if check {
                let back = represent::from_lr_tree(&image)
                    .map_err(|e| Failure::check(format!("round trip failed: {e}")))?;
                ensure_roundtrip(back == t)?;
            }
            print_result(image)
        }
        MapName::FromLr => {
            let l: LRTree = parse_input(input, "labelled plane tree")?;
            let image = represent::from_lr_tree(&l).map_err(|e| Failure::input(e.to_string()))?;
            if check {
                ensure_roundtrip(represent::to_lr_tree(&image) == l)?;
            }
            print_result(image)
        }
        MapName::Psi => {
            let p: PlaneTree = parse_input(input, "plane tree")?;
            let image = bijections::psi(&p).map_err(|e| Failure::input(e.to_string()))?;
            if check {
                ensure_roundtrip(bijections::psi_inverse(&image) == p)?;
            }
            print_result(image)
        }
        MapName::PsiInverse => {
            let t: TernaryTree = parse_input(input, "ternary tree")?;
            let image = bijections::psi_inverse(&t);
            if check {
                let back = bijections::psi(&image)
                    .map_err(|e| Failure::check(format!("round trip failed: {e}")))?;
                ensure_roundtrip(back == t)?;
            }
            print_result(image)
        }
        MapName::Sigma => {
            let t: NoncrossingTree = parse_input(input, "noncrossing tree")?;
            let image = bijections::sigma(&t).map_err(|e| Failure::input(e.to_string()))?;
            if check {
                ensure_roundtrip(bijections::sigma_inverse(&image) == t)?;
            }
            print_result(image)
        }
        MapName::SigmaInverse => {
            let raw: TernaryTree = parse_input(input, "ternary tree")?;
            let s = SymmetricTernaryTree::new(raw).map_err(|e| Failure::input(e.to_string()))?;
            let image = bijections::sigma_inverse(&s);
            if check {
                let back = bijections::sigma(&image)
                    .map_err(|e| Failure::check(format!("round trip failed: {e}")))?;
                ensure_roundtrip(back == s)?;
            }
            print_result(image)
        }
        MapName::Phi => {
            if input.starts_with("nct:") {
                let t: NoncrossingTree = parse_input(input, "noncrossing tree")?;
                let image = parity::phi(&t).map_err(|e| Failure::input(e.to_string()))?;
                if check {
                    let back = parity::phi(&image)
                        .map_err(|e| Failure::check(format!("round trip failed: {e}")))?;
                    ensure_roundtrip(back == t)?;
                }
                print_result(image)
            } else {
                let l: LRTree = parse_input(input, "labelled plane tree")?;
                // Reject label patterns no noncrossing tree produces before
                // classifying vertices.
                represent::from_lr_tree(&l).map_err(|e| Failure::input(e.to_string()))?;
                let image = parity::phi_lr(&l).map_err(|e| Failure::input(e.to_string()))?;
                if check {
                    let back = parity::phi_lr(&image)
                        .map_err(|e| Failure::check(format!("round trip failed: {e}")))?;
                    ensure_roundtrip(back == l)?;
                }
                print_result(image)
            }
        }
        MapName::CanonicalTree => {
            let g: NoncrossingGraph = parse_input(input, "noncrossing graph")?;
            let t = graphs::canonical_spanning_tree(&g);
            if check {
                let rebuilt = graphs::assemble(&t, graphs::saturated_descents(&g));
                ensure_roundtrip(rebuilt == g)?;
            }
            print_result(t)
        }
        MapName::Companion => {
            if check {
                return Err(Failure::usage(
                    "companion has no inverse; --check-roundtrip does not apply",
                ));
            }
            let t: NoncrossingTree = parse_input(input, "noncrossing tree")?;
            if args.descents.len() != 1 {
                return Err(Failure::usage("companion takes exactly one --descent"));
            }
            let d = parse_descent(&args.descents[0])?;
            ensure_descent_of(&t, d)?;
            print_result(graphs::companion_edge(&t, d))
        }
        MapName::Assemble => {
            let t: NoncrossingTree = parse_input(input, "noncrossing tree")?;
            let mut chosen = Vec::new();
            for text in &args.descents {
                let d = parse_descent(text)?;
                ensure_descent_of(&t, d)?;
                chosen.push(d);
            }
            let g = graphs::assemble(&t, chosen.iter().copied());
            if check {
                ensure_roundtrip(graphs::canonical_spanning_tree(&g) == t)?;
                let sat: BTreeSet<Descent> = chosen.iter().copied().collect();
                ensure_roundtrip(graphs::saturated_descents(&g) == sat)?;
            }
            print_result(g)
        }
        MapName::CompanionInvolution => {
            let m: MarkedNCGraph = parse_input(input, "marked graph")?;
            let image =
                graphs::companion_involution(&m).map_err(|e| Failure::input(e.to_string()))?;
            if check {
                let back = graphs::companion_involution(&image)
                    .map_err(|e| Failure::check(format!("round trip failed: {e}")))?;
                ensure_roundtrip(back == m)?;
            }
            print_result(image)
        }
    }
}

// ============================================================================
// verify
// ============================================================================

fn run_verify(args: VerifyArgs) -> Result<(), Failure> {
    let Some(report) = checks::run(&args.identity, args.max_n) else {
        return Err(Failure::usage(format!(
            "unknown identity {:?}; available: {}",
            args.identity,
            checks::IDENTITIES.join(", ")
        )));
    };
    print_report(&report, args.format)?;
    if report.all_pass() {
        Ok(())
    } else {
        let failed = report.rows.iter().filter(|r| !r.pass()).count();
        Err(Failure::check(format!("{failed} of {} equations failed", report.rows.len())))
    }
}

fn print_report(report: &Report, format: ReportFormat) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let failures = report.rows.iter().filter(|r| !r.pass()).count();
    match format {
        ReportFormat::Table => {
            let rendered: Vec<(String, String, String, String, &str)> = report
                .rows
                .iter()
                .map(|r| {
                    (
                        r.identity.to_string(),
                        r.params_text(),
                        r.lhs.to_string(),
                        r.rhs.to_string(),
                        if r.pass() { "ok" } else { "FAIL" },
                    )
                })
                .collect();
            let mut widths = ["identity".len(), "params".len(), "lhs".len(), "rhs".len()];
            for (identity, params, lhs, rhs, _) in &rendered {
                widths[0] = widths[0].max(identity.len());
                widths[1] = widths[1].max(params.len());
                widths[2] = widths[2].max(lhs.len());
                widths[3] = widths[3].max(rhs.len());
            }
            emit(
                &mut out,
                format_args!(
                    "{:<w0$}  {:<w1$}  {:>w2$}  {:>w3$}  status",
                    "identity",
                    "params",
                    "lhs",
                    "rhs",
                    w0 = widths[0],
                    w1 = widths[1],
                    w2 = widths[2],
                    w3 = widths[3],
                ),
            )?;
            for (identity, params, lhs, rhs, status) in &rendered {
                emit(
                    &mut out,
                    format_args!(
                        "{identity:<w0$}  {params:<w1$}  {lhs:>w2$}  {rhs:>w3$}  {status}",
                        w0 = widths[0],
                        w1 = widths[1],
                        w2 = widths[2],
                        w3 = widths[3],
                    ),
                )?;
            }
            if failures == 0 {
                emit(&mut out, format_args!("PASS ({} equations)", report.rows.len()))?;
            } else {
                emit(
                    &mut out,
                    format_args!("FAIL ({failures} of {} equations)", report.rows.len()),
                )?;
            }
        }
        ReportFormat::Csv => {
            emit(&mut out, "identity,params,lhs,rhs,status")?;
            for r in &report.rows {
                emit(
                    &mut out,
                    format_args!(
                        "{},{},{},{},{}",
                        r.identity,
                        r.params_text(),
                        r.lhs,
                        r.rhs,
                        if r.pass() { "ok" } else { "FAIL" }
                    ),
                )?;
            }
        }
        ReportFormat::Json => {
            for r in &report.rows {
                let params: serde_json::Map<String, serde_json::Value> = r
                    .params
                    .iter()
                    .map(|&(name, value)| (name.to_string(), serde_json::json!(value)))
                    .collect();
                emit(
                    &mut out,
                    serde_json::json!({
                        "identity": r.identity,
                        "params": params,
                        "lhs": r.lhs.to_string(),
                        "rhs": r.rhs.to_string(),
                        "pass": r.pass(),
                    }),
                )?;
            }
            emit(
                &mut out,
                serde_json::json!({
                    "pass": failures == 0,
                    "equations": report.rows.len(),
                    "failures": failures,
                }),
            )?;
        }
    }
    out.flush().map_err(io_failure)
}

// ============================================================================
// count
// ============================================================================

fn run_count(args: CountArgs) -> Result<(), Failure> {
    if args.n < 0 {
        return Err(Failure::usage("--n must be nonnegative"));
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    match args.quantity {
        Quantity::C | Quantity::S => {
            if args.k.is_some() {
                return Err(Failure::usage("--k does not apply to c or s"));
            }
            let value = |n| {
                if args.quantity == Quantity::C {
                    counting::c_count(n)
                } else {
                    counting::s_count(n)
                }
            };
            if args.table {
                emit(&mut out, "n,value")?;
                for n in 0..=args.n {
                    emit(&mut out, format_args!("{n},{}", value(n)))?;
                }
            } else {
                emit(&mut out, value(args.n))?;
            }
        }
        Quantity::D | Quantity::N => {
            let value = |n, k| {
                if args.quantity == Quantity::D {
                    counting::d_count(n, k)
                } else {
                    counting::g_count(n, k)
                }
            };
            if args.table {
                if args.k.is_some() {
                    return Err(Failure::usage("--k does not combine with --table"));
                }
                emit(&mut out, "n,k,value")?;
                for n in 0..=args.n {
                    let range = if args.quantity == Quantity::D {
                        0..=(n - 1).max(0)
                    } else {
                        n..=(2 * n - 1).max(n)
                    };
                    for k in range {
                        emit(&mut out, format_args!("{n},{k},{}", value(n, k)))?;
                    }
                }
            } else {
                let k = args.k.ok_or_else(|| Failure::usage("--k is required for d and n"))?;
                emit(&mut out, value(args.n, k))?;
            }
        }
    }
    out.flush().map_err(io_failure)
}

// ============================================================================
// render
// ============================================================================

fn run_render(args: RenderArgs) -> Result<(), Failure> {
    let input = args.input.trim();
    let diagram = if input.starts_with("nct:") {
        let t: NoncrossingTree = parse_input(input, "noncrossing tree")?;
        Diagram::from_tree(&t)
    } else if input.starts_with("ncg:") {
        // The marked parser accepts plain graphs too; zero marks draw the
        // same picture either way.
        let m: MarkedNCGraph = parse_input(input, "noncrossing graph")?;
        Diagram::from_marked(&m)
    } else {
        return Err(Failure::input(
            "unrecognized serialization: expected an nct: tree or an ncg: graph",
        ));
    };
    std::fs::write(&args.out, diagram.to_svg())
        .map_err(|e| Failure::output(format!("cannot write {}: {e}", args.out.display())))?;
    Ok(())
}
