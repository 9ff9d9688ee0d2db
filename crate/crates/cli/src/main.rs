//! `gsq`: square, class checks, square-root construction, the brute-force
//! oracle, and corpus generation over the edge-list text format.
//!
//! Exit codes: 0 root found / check true; 1 no root / check false;
//! 2 input or usage error; 3 oracle budget exceeded.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use graph_squares::generators::{random_3sunfree_split, random_ptolemaic, GenSpec, SplitGenMode};
use graph_squares::graph::Graph;
use graph_squares::oracle::{min_root_bruteforce, ClassPredicate, OracleOutcome, DEFAULT_BUDGET};
use graph_squares::ptolemaic::{ptolemaic_square_root, RootResult};
use graph_squares::recognizers::{
    chordal_order, find_3sun, hereditary_clique_helly_witness, is_distance_hereditary,
    is_ptolemaic, split_partition,
};
use graph_squares::split::{three_sun_free_split_root, SplitRootResult};
use report::{edges_json, to_dot, Report};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "gsq",
    version,
    about = "Square roots of graphs in restricted classes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the square of a graph.
    Square {
        /// Input file, or `-` for standard input.
        input: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Test class membership; exit 0 on true, 1 on false.
    Check {
        class: CheckClass,
        input: String,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Decide and construct square roots.
    Root {
        #[command(subcommand)]
        kind: RootKind,
    },
    /// Exhaustive minimum-root search over all edge-subgraphs.
    Oracle {
        class: OracleClass,
        input: String,
        /// Subset budget; the search aborts with exit code 3 beyond it.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Emit a corpus graph.
    Gen {
        #[command(subcommand)]
        mode: GenMode,
    },
}

#[derive(Subcommand)]
enum RootKind {
    /// Minimum-edge ptolemaic square root.
    Ptolemaic(RootArgs),
    /// 3-sun-free split square root.
    Split3sf(RootArgs),
}

#[derive(Args)]
struct RootArgs {
    input: String,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Subcommand)]
enum GenMode {
    /// Random ptolemaic graph grown by pendant/twin attachments.
    Ptolemaic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Operation weights: pendant, true twin, simplicial false twin.
        #[arg(long, value_delimiter = ',', default_value = "2,2,1")]
        weights: Vec<u32>,
    },
    /// Split graph with nested independent neighborhoods (3-sun-free by
    /// construction).
    SplitNested(SplitGenArgs),
    /// Uniform split graph resampled until connected and 3-sun-free.
    SplitRejection(SplitGenArgs),
}

#[derive(Args)]
struct SplitGenArgs {
    #[arg(long)]
    clique: usize,
    #[arg(long)]
    indep: usize,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Edgelist,
    Dot,
    JsonReport,
}

#[derive(ValueEnum, Clone, Copy)]
enum CheckClass {
    Chordal,
    Split,
    DistanceHereditary,
    Ptolemaic,
    Hch,
    #[value(name = "3sun-free")]
    ThreeSunFree,
}

#[derive(ValueEnum, Clone, Copy)]
enum OracleClass {
    Ptolemaic,
    #[value(name = "split-3sun-free")]
    Split3sunFree,
    Any,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Square { input, format } => {
            let g = load(&input)?;
            match format.unwrap_or(Format::Edgelist) {
                Format::Edgelist => print!("{}", g.square().to_edge_list()),
                Format::Dot => print!("{}", to_dot(&g.square())),
                Format::JsonReport => return Err("json-report is not available for square".into()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            class,
            input,
            format,
        } => {
            let g = load(&input)?;
            run_check(class, &g, format)
        }
        Command::Root { kind } => match kind {
            RootKind::Ptolemaic(args) => {
                let g = load(&args.input)?;
                run_root_ptolemaic(&g, args.format)
            }
            RootKind::Split3sf(args) => {
                let g = load(&args.input)?;
                run_root_split(&g, args.format)
            }
        },
        Command::Oracle {
            class,
            input,
            budget,
            format,
        } => {
            let g = load(&input)?;
            run_oracle(class, &g, budget.unwrap_or(DEFAULT_BUDGET), format)
        }
        Command::Gen { mode } => run_gen(mode),
    }
}

fn load(input: &str) -> Result<Graph, String> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading standard input: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("reading {input}: {e}"))?
    };
    Graph::parse(&text).map_err(|e| e.to_string())
}

fn verdict_code(value: bool) -> ExitCode {
    if value {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_check(class: CheckClass, g: &Graph, format: Option<Format>) -> Result<ExitCode, String> {
    let json = match format {
        None => false,
        Some(Format::JsonReport) => true,
        Some(_) => return Err("check supports only the json-report format".into()),
    };
    let name = match class {
        CheckClass::Chordal => "chordal",
        CheckClass::Split => "split",
        CheckClass::DistanceHereditary => "distance-hereditary",
        CheckClass::Ptolemaic => "ptolemaic",
        CheckClass::Hch => "hch",
        CheckClass::ThreeSunFree => "3sun-free",
    };
    let mut verdict = false;
    let mut witness: Option<Vec<usize>> = None;
    let mut witness_label: Option<String> = None;
    let mut certificate: Option<serde_json::Value> = None;
    match class {
        CheckClass::Chordal => match chordal_order(g) {
            Ok(_) => verdict = true,
            Err(v) => {
                witness = Some(vec![v]);
                witness_label = Some("witness-vertex".into());
            }
        },
        CheckClass::Split => {
            if let Some((clique, independent)) = split_partition(g) {
                verdict = true;
                certificate = Some(serde_json::json!({
                    "clique": clique.to_vec(),
                    "independent": independent.to_vec(),
                }));
            }
        }
        CheckClass::DistanceHereditary => verdict = is_distance_hereditary(g),
        CheckClass::Ptolemaic => verdict = is_ptolemaic(g),
        CheckClass::Hch => match hereditary_clique_helly_witness(g) {
            None => verdict = true,
            Some(p) => {
                witness_label = Some(format!("witness ({})", p.kind.name()));
                witness = Some(p.witness);
            }
        },
        CheckClass::ThreeSunFree => match find_3sun(g) {
            None => verdict = true,
            Some(p) => {
                witness_label = Some(format!("witness ({})", p.kind.name()));
                witness = Some(p.witness);
            }
        },
    }
    if json {
        let mut report = Report::new(
            &format!("check-{name}"),
            if verdict { "true" } else { "false" },
        );
        report.witness = witness;
        report.certificate = certificate;
        report.print();
    } else {
        println!("{name}: {verdict}");
        if let (Some(label), Some(w)) = (&witness_label, &witness) {
            let list: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            println!("{label}: {}", list.join(" "));
        }
        if let Some(cert) = &certificate {
            if let (Some(clique), Some(indep)) = (cert.get("clique"), cert.get("independent")) {
                println!("clique: {}", join_json_list(clique));
                println!("independent: {}", join_json_list(indep));
            }
        }
    }
    Ok(verdict_code(verdict))
}

fn join_json_list(v: &serde_json::Value) -> String {
    v.as_array()
        .map(|a| {
            a.iter()
                .filter_map(|x| x.as_u64())
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

fn run_root_ptolemaic(g: &Graph, format: Option<Format>) -> Result<ExitCode, String> {
    let format = format.unwrap_or(Format::Edgelist);
    match ptolemaic_square_root(g) {
        RootResult::Root(found) => {
            match format {
                Format::Edgelist => {
                    println!("# edges={} minimal=true", found.edge_count);
                    print!("{}", found.root.to_edge_list());
                }
                Format::Dot => print!("{}", to_dot(&found.root)),
                Format::JsonReport => {
                    let mut report = Report::new("root-ptolemaic", "root");
                    report.edges = Some(found.edge_count);
                    report.certificate = Some(serde_json::json!({
                        "square_matches": found.square_matches,
                        "ptolemaic": found.root_is_ptolemaic,
                        "tree": found.root_is_tree,
                        "block_graph": found.root_is_block_graph,
                        "root_edges": edges_json(&found.root),
                    }));
                    report.print();
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        RootResult::NoRoot(stage) => {
            if format == Format::JsonReport {
                let mut report = Report::new("root-ptolemaic", "no-root");
                report.stage = Some(stage.name().to_string());
                report.print();
            } else {
                println!("no-root stage={stage}");
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn run_root_split(g: &Graph, format: Option<Format>) -> Result<ExitCode, String> {
    let format = format.unwrap_or(Format::Edgelist);
    match three_sun_free_split_root(g) {
        SplitRootResult::Root(found) => {
            let clique = found.certificate.clique.to_vec();
            let reps = &found.certificate.representatives;
            match format {
                Format::Edgelist => {
                    let join = |xs: &[usize]| {
                        xs.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    };
                    println!("# edges={} clique={}", found.edge_count, join(&clique));
                    println!("# representatives={}", join(reps));
                    print!("{}", found.root.to_edge_list());
                }
                Format::Dot => print!("{}", to_dot(&found.root)),
                Format::JsonReport => {
                    let mut report = Report::new("root-split3sf", "root");
                    report.edges = Some(found.edge_count);
                    report.certificate = Some(serde_json::json!({
                        "clique": clique,
                        "representatives": reps,
                        "root_edges": edges_json(&found.root),
                    }));
                    report.print();
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        SplitRootResult::NoRoot(stage) => {
            if format == Format::JsonReport {
                let mut report = Report::new("root-split3sf", "no-root");
                report.stage = Some(stage.name().to_string());
                report.print();
            } else {
                println!("no-root stage={stage}");
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn run_oracle(
    class: OracleClass,
    g: &Graph,
    budget: u64,
    format: Option<Format>,
) -> Result<ExitCode, String> {
    if budget == 0 {
        return Err("--budget must be positive".into());
    }
    let format = format.unwrap_or(Format::Edgelist);
    let predicate = match class {
        OracleClass::Ptolemaic => ClassPredicate::Ptolemaic,
        OracleClass::Split3sunFree => ClassPredicate::SplitThreeSunFree,
        OracleClass::Any => ClassPredicate::Any,
    };
    match min_root_bruteforce(g, predicate, budget) {
        OracleOutcome::Found { root, edge_count } => {
            match format {
                Format::Edgelist => {
                    println!("# edges={edge_count} class={}", predicate.name());
                    print!("{}", root.to_edge_list());
                }
                Format::Dot => print!("{}", to_dot(&root)),
                Format::JsonReport => {
                    let mut report = Report::new("oracle", "found");
                    report.edges = Some(edge_count);
                    report.certificate = Some(serde_json::json!({
                        "class": predicate.name(),
                        "root_edges": edges_json(&root),
                    }));
                    report.print();
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        OracleOutcome::NoneExists => {
            if format == Format::JsonReport {
                Report::new("oracle", "none").print();
            } else {
                println!("none");
            }
            Ok(ExitCode::from(1))
        }
        OracleOutcome::BudgetExceeded => {
            if format == Format::JsonReport {
                Report::new("oracle", "budget-exceeded").print();
            } else {
                println!("budget-exceeded");
            }
            Ok(ExitCode::from(3))
        }
    }
}

fn run_gen(mode: GenMode) -> Result<ExitCode, String> {
    let (spec, graph) = match mode {
        GenMode::Ptolemaic { n, seed, weights } => {
            if weights.len() != 3 {
                return Err("--weights takes exactly three values".into());
            }
            let spec = GenSpec::ptolemaic(n, seed, [weights[0], weights[1], weights[2]]);
            let g = random_ptolemaic(&spec).map_err(|e| e.to_string())?;
            (spec, g)
        }
        GenMode::SplitNested(args) => {
            let spec = GenSpec::split(
                args.clique,
                args.indep,
                args.density,
                SplitGenMode::Nested,
                args.seed,
            );
            let g = random_3sunfree_split(&spec).map_err(|e| e.to_string())?;
            (spec, g)
        }
        GenMode::SplitRejection(args) => {
            let spec = GenSpec::split(
                args.clique,
                args.indep,
                args.density,
                SplitGenMode::Rejection,
                args.seed,
            );
            let g = random_3sunfree_split(&spec).map_err(|e| e.to_string())?;
            (spec, g)
        }
    };
    println!("{}", spec.metadata_comment());
    print!("{}", graph.to_edge_list());
    Ok(ExitCode::SUCCESS)
}
