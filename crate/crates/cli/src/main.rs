//! `nesto`: compute gamma-polynomials of graph building sets, explore
//! tree shifts and flossing moves, build the tree poset, and run the
//! verification suites.

use clap::{Args, Parser, Subcommand, ValueEnum};
use nestohedra::buildset::{graphical_building_set, BuildingSet};
use nestohedra::error::Error;
use nestohedra::gamma_engine::{gamma_incremental, GammaMemo};
use nestohedra::moves::{
    apply_flossing, apply_tree_shift, enumerate_flossing, enumerate_tree_shifts, wiener_index,
    LabeledGraph,
};
use nestohedra::nested::{
    enumerate_nested_sets, enumerate_nested_sets_uncapped, f_polynomial_from_census, gamma_oracle,
    gamma_oracle_uncapped,
};
use nestohedra::poly::{f_to_h, IntPolynomial};
use nestohedra::poset::{build_poset, verify_poset};
use nestohedra::verify::{run_criterion, wiener_move_report, CRITERION_COUNT};
use rayon::prelude::*;
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_PARSE: u8 = 3;
const EXIT_CAP: u8 = 4;
const EXIT_ENGINE_MISMATCH: u8 = 5;
const EXIT_VERIFICATION: u8 = 6;
const EXIT_DOMAIN: u8 = 7;

const LONG_ABOUT: &str = "\
Exact f/h/gamma-polynomials of graph building sets, tree shifts, flossing
moves, and the tree poset they generate.

Exit codes:
  0  success
  2  command-line usage error
  3  input parse error
  4  instance cap exceeded (raise with --override-cap where offered)
  5  the two gamma engines disagree
  6  verification failure
  7  domain or internal error";

#[derive(Parser)]
#[command(name = "nesto", about = "Nestohedron and graph-associahedron toolkit", long_about = LONG_ABOUT, version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Incremental,
    Oracle,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args)]
struct GraphInput {
    /// Graph file: first line "n m", then m lines "u v" (1 <= u < v <= n);
    /// '#' comments and blank lines are ignored
    #[arg(long, value_name = "FILE", conflicts_with = "buildset")]
    graph: Option<PathBuf>,

    /// Building set JSON file: {"ground": [..], "elements": [[..], ..]}
    #[arg(long, value_name = "FILE")]
    buildset: Option<PathBuf>,

    /// Allow instances past the desk-scale cap (more than 10 labels)
    #[arg(long)]
    override_cap: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Gamma-polynomial of a graph or building set
    Gamma {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "both")]
        engine: Engine,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Face census, f-polynomial, and h-polynomial
    Fvector {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The graphical building set of a graph
    Buildset {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Tree shifts and flossing moves of a graph, with Wiener deltas
    Moves {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The tree poset on n vertices: shift order plus flossing annotations
    Poset {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Worker threads for the per-tree gamma computations (0 = all cores)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Wiener index of a connected graph
    Wiener {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Run the verification suites and print a pass/fail table
    Verify {
        /// Seed for the randomized suites
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Comma-separated criterion ids (default: all)
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<usize>,
        /// Worker threads across criteria (0 = all cores)
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Also print the non-normative Wiener index summary
        #[arg(long)]
        wiener_report: bool,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Parse(_) => EXIT_PARSE,
        Error::CapExceeded(_) | Error::TooManyLabels(_) => EXIT_CAP,
        Error::Verification(_) => EXIT_VERIFICATION,
        _ => EXIT_DOMAIN,
    }
}

/// Desk-scale guard shared by the graph commands.
const DEFAULT_MAX_N: usize = 10;

impl GraphInput {
    fn load(&self) -> Result<BuildingSet, Error> {
        let b = match (&self.graph, &self.buildset) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                graphical_building_set(&LabeledGraph::from_text(&text)?)?
            }
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                BuildingSet::from_json(&text)?
            }
            _ => return Err(Error::Parse("exactly one of --graph or --buildset is required".into())),
        };
        if !self.override_cap && b.ground().card() > DEFAULT_MAX_N {
            return Err(Error::CapExceeded(format!(
                "{} labels exceed the default cap of {DEFAULT_MAX_N}; pass --override-cap to proceed",
                b.ground().card()
            )));
        }
        Ok(b)
    }

    fn load_graph(&self) -> Result<LabeledGraph, Error> {
        let Some(path) = &self.graph else {
            return Err(Error::Parse("this command requires --graph".into()));
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        let g = LabeledGraph::from_text(&text)?;
        if !self.override_cap && g.vertex_count() > DEFAULT_MAX_N {
            return Err(Error::CapExceeded(format!(
                "{} vertices exceed the default cap of {DEFAULT_MAX_N}; pass --override-cap to proceed",
                g.vertex_count()
            )));
        }
        Ok(g)
    }
}

#[derive(Serialize)]
struct GammaOutput {
    ground_size: usize,
    dimension: usize,
    flag: bool,
    engine: &'static str,
    gamma: IntPolynomial,
    #[serde(skip_serializing_if = "Option::is_none")]
    incremental: Option<IntPolynomial>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<IntPolynomial>,
    agree: bool,
}

fn run_gamma(input: &GraphInput, engine: Engine, format: Format) -> Result<(), (Error, u8)> {
    let b = input.load().map_err(|e| { let c = exit_code_for(&e); (e, c) })?;
    let memo = GammaMemo::new();
    let oracle = |b: &BuildingSet| if input.override_cap { gamma_oracle_uncapped(b) } else { gamma_oracle(b) };
    let (fast, slow) = match engine {
        Engine::Incremental => (Some(gamma_incremental(&b, &memo)), None),
        Engine::Oracle => (None, Some(oracle(&b))),
        Engine::Both => (Some(gamma_incremental(&b, &memo)), Some(oracle(&b))),
    };
    let unwrap = |r: Option<Result<IntPolynomial, Error>>| -> Result<Option<IntPolynomial>, (Error, u8)> {
        match r {
            None => Ok(None),
            Some(Ok(v)) => Ok(Some(v)),
            Some(Err(e)) => { let c = exit_code_for(&e); Err((e, c)) }
        }
    };
    let fast = unwrap(fast)?;
    let slow = unwrap(slow)?;
    let agree = match (&fast, &slow) {
        (Some(a), Some(b)) => a == b,
        _ => true,
    };
    let gamma = fast.clone().or_else(|| slow.clone()).expect("one engine ran");
    let out = GammaOutput {
        ground_size: b.ground().card(),
        dimension: b.dimension(),
        flag: b.is_flag(),
        engine: match engine {
            Engine::Incremental => "incremental",
            Engine::Oracle => "oracle",
            Engine::Both => "both",
        },
        gamma: gamma.clone(),
        incremental: fast,
        oracle: slow,
        agree,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&out).expect("serializable")),
        _ => match engine {
            Engine::Both if agree => println!("gamma = {gamma}; engines agree"),
            Engine::Both => println!(
                "gamma mismatch: incremental = {}, oracle = {}",
                out.incremental.as_ref().expect("ran"),
                out.oracle.as_ref().expect("ran")
            ),
            Engine::Incremental => println!("gamma = {gamma} (incremental engine)"),
            Engine::Oracle => println!("gamma = {gamma} (nested-set oracle)"),
        },
    }
    if !agree {
        return Err((
            Error::Internal("incremental engine and oracle disagree".into()),
            EXIT_ENGINE_MISMATCH,
        ));
    }
    Ok(())
}

#[derive(Serialize)]
struct FvectorOutput {
    dimension: usize,
    census: Vec<u64>,
    f: IntPolynomial,
    h: IntPolynomial,
    vertices: i64,
}

fn run_fvector(input: &GraphInput, format: Format) -> Result<(), Error> {
    let b = input.load()?;
    let census = if input.override_cap {
        enumerate_nested_sets_uncapped(&b)?
    } else {
        enumerate_nested_sets(&b)?
    };
    let (f, d) = f_polynomial_from_census(&census)?;
    let h = f_to_h(&f, d)?;
    let out = FvectorOutput {
        dimension: d,
        census: census.counts().to_vec(),
        f: f.clone(),
        h: h.clone(),
        vertices: f.coeff(0),
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&out).expect("serializable")),
        _ => {
            println!("dimension = {d}");
            println!("nested-set census by size = {:?}", out.census);
            println!("f = {f}");
            println!("h = {h}");
            println!("vertices = {}", out.vertices);
        }
    }
    Ok(())
}

fn run_buildset(input: &GraphInput, format: Format) -> Result<(), Error> {
    let b = input.load()?;
    match format {
        Format::Json => println!("{}", b.to_json()),
        _ => {
            println!("ground = {}", b.ground());
            println!("connected = {}", b.is_connected());
            println!("flag = {}", b.is_flag());
            println!("maximal = {:?}", b.b_max());
            println!("elements ({}):", b.len());
            for e in b.elements() {
                println!("  {e}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct MoveRecord {
    kind: &'static str,
    description: String,
    result_edges: Vec<(usize, usize)>,
    leaf_count_delta: i64,
    wiener_before: u64,
    wiener_after: u64,
}

fn run_moves(input: &GraphInput, format: Format) -> Result<(), Error> {
    let g = input.load_graph()?;
    if !g.is_connected() {
        return Err(Error::Domain("moves are defined for connected graphs".into()));
    }
    let w0 = wiener_index(&g)?;
    let mut records = Vec::new();
    for mv in enumerate_tree_shifts(&g) {
        let result = apply_tree_shift(&g, &mv)?;
        records.push(MoveRecord {
            kind: "tree_shift",
            description: format!(
                "leaf {} branch {} path {} moved {}",
                mv.leaf, mv.branch, mv.path, mv.moved
            ),
            result_edges: result.edges(),
            leaf_count_delta: result.leaf_count() as i64 - g.leaf_count() as i64,
            wiener_before: w0,
            wiener_after: wiener_index(&result)?,
        });
    }
    for mv in enumerate_flossing(&g) {
        let result = apply_flossing(&g, &mv)?;
        records.push(MoveRecord {
            kind: "flossing",
            description: format!(
                "near {} far {} branch {} detach {} r {} r-hat {}",
                mv.near_leaf, mv.far_leaf, mv.branch, mv.detach_from, mv.r, mv.r_hat
            ),
            result_edges: result.edges(),
            leaf_count_delta: result.leaf_count() as i64 - g.leaf_count() as i64,
            wiener_before: w0,
            wiener_after: wiener_index(&result)?,
        });
    }
    match format {
        Format::Json => println!("{}", serde_json::to_string(&records).expect("serializable")),
        _ => {
            println!("wiener = {w0}");
            println!("{} moves:", records.len());
            for r in &records {
                println!(
                    "  [{}] {} -> edges {:?}, leaves {:+}, wiener {} -> {}",
                    r.kind, r.description, r.result_edges, r.leaf_count_delta, r.wiener_before, r.wiener_after
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct PosetNodeOutput {
    code: String,
    leaves: usize,
    gamma: IntPolynomial,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct PosetOutput {
    n: usize,
    nodes: Vec<PosetNodeOutput>,
    shift_edges: Vec<(usize, usize)>,
    floss_edges: Vec<(usize, usize)>,
}

fn run_poset(n: usize, format: Format, jobs: usize) -> Result<(), Error> {
    let memo = GammaMemo::new();
    if jobs != 1 {
        // warm the shared memo across tree classes in parallel
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?;
        let trees = nestohedra::poset::enumerate_trees(n)?;
        pool.install(|| {
            trees.par_iter().try_for_each(|t| -> Result<(), Error> {
                gamma_incremental(&graphical_building_set(&t.representative)?, &memo)?;
                Ok(())
            })
        })?;
    }
    let p = build_poset(n, &memo)?;
    match format {
        Format::Dot => print!("{}", p.to_dot()),
        Format::Json => {
            let out = PosetOutput {
                n,
                nodes: p
                    .nodes
                    .iter()
                    .map(|node| PosetNodeOutput {
                        code: node.tree.code.clone(),
                        leaves: node.tree.leaf_count,
                        gamma: node.gamma.clone(),
                        edges: node.tree.representative.edges(),
                    })
                    .collect(),
                shift_edges: p.shift_edges.clone(),
                floss_edges: p.floss_edges.clone(),
            };
            println!("{}", serde_json::to_string(&out).expect("serializable"));
        }
        Format::Text => {
            let report = verify_poset(&p)?;
            println!(
                "{} trees on {n} vertices, {} shift edges, {} flossing edges",
                report.node_count, report.shift_edge_count, report.floss_edge_count
            );
            println!(
                "minimum {} gamma {}, maximum {} gamma {}",
                report.minimum_code, report.path_gamma, report.maximum_code, report.star_gamma
            );
            for node in &p.nodes {
                println!("  {} leaves={} gamma={}", node.tree.code, node.tree.leaf_count, node.gamma);
            }
        }
    }
    Ok(())
}

fn run_verify(seed: u64, criteria: Vec<usize>, jobs: usize, wiener: bool) -> Result<(), (Error, u8)> {
    let ids: Vec<usize> = if criteria.is_empty() { (1..=CRITERION_COUNT).collect() } else { criteria };
    for &id in &ids {
        if id == 0 || id > CRITERION_COUNT {
            let e = Error::Parse(format!("criterion ids are 1..={CRITERION_COUNT}, got {id}"));
            return Err((e, EXIT_PARSE));
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| (Error::Internal(e.to_string()), EXIT_DOMAIN))?;
    let outcomes = pool.install(|| {
        let mut outcomes: Vec<_> = ids.par_iter().map(|&id| run_criterion(id, seed)).collect();
        outcomes.sort_by_key(|o| o.id);
        outcomes
    });
    let mut all_passed = true;
    for o in &outcomes {
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {} [{verdict}] {} — {}", o.id, o.name, o.details);
        all_passed &= o.passed;
    }
    if wiener {
        match wiener_move_report(7) {
            Ok(report) => println!("note (not asserted): {report}"),
            Err(e) => println!("note: wiener report unavailable: {e}"),
        }
    }
    if all_passed {
        println!("all {} criteria passed", outcomes.len());
        Ok(())
    } else {
        Err((Error::Verification("one or more criteria failed".into()), EXIT_VERIFICATION))
    }
}

fn main() -> ExitCode {
    // die quietly on a closed pipe instead of panicking mid-print
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let outcome: Result<(), (Error, u8)> = match cli.command {
        Command::Gamma { input, engine, format } => run_gamma(&input, engine, format),
        Command::Fvector { input, format } => {
            run_fvector(&input, format).map_err(|e| { let c = exit_code_for(&e); (e, c) })
        }
        Command::Buildset { input, format } => {
            run_buildset(&input, format).map_err(|e| { let c = exit_code_for(&e); (e, c) })
        }
        Command::Moves { input, format } => {
            run_moves(&input, format).map_err(|e| { let c = exit_code_for(&e); (e, c) })
        }
        Command::Poset { n, format, jobs } => {
            run_poset(n, format, jobs).map_err(|e| { let c = exit_code_for(&e); (e, c) })
        }
        Command::Wiener { input } => input
            .load_graph()
            .and_then(|g| wiener_index(&g))
            .map(|w| println!("{w}"))
            .map_err(|e| { let c = exit_code_for(&e); (e, c) }),
        Command::Verify { seed, criteria, jobs, wiener_report } => {
            run_verify(seed, criteria, jobs, wiener_report)
        }
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err((e, code)) => {
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
