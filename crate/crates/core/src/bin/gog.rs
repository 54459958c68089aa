//! Command-line interface for subgroup graphs and graph-of-graphs
//! instances.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use gog_core::dot::{gog_dot, labeled_graph_dot};
use gog_core::gog::build_representing;
use gog_core::graph::LabeledGraph;
use gog_core::instance::Instance;
use gog_core::pullback::{all_core_components, intersection_subgroup, pullback_product};
use gog_core::reduction::{complexity, reduce_to_valence_three};
use gog_core::shnc::{check_identity, inequality_sweep, rank_experiment, resolve_bigon};
use gog_core::word::Word;
use gog_core::GogError;

#[derive(Parser)]
#[command(
    name = "gog",
    about = "Subgroups of free groups as labeled graphs, and graph-of-graphs reduction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the folded core graph of the subgroup generated by WORDS
    Fold {
        #[arg(long, default_value_t = 2)]
        rank: u32,
        /// Generators, lowercase letters with uppercase inverses (e.g. abA)
        words: Vec<String>,
        /// Emit DOT instead of the text format
        #[arg(long)]
        dot: bool,
    },
    /// Intersect two subgroups via the fiber product
    Intersect {
        #[arg(long, default_value_t = 2)]
        rank: u32,
        #[arg(long, value_delimiter = ',')]
        h1: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        h2: Vec<String>,
        /// Also list the nontrivial conjugate-intersection components
        #[arg(long)]
        all: bool,
    },
    /// Join (subgroup generated by the union of) two subgroups
    Join {
        #[arg(long, default_value_t = 2)]
        rank: u32,
        #[arg(long, value_delimiter = ',')]
        h1: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        h2: Vec<String>,
    },
    /// Build the representing graph of graphs from an instance file
    Build {
        file: String,
    },
    /// Reduce an instance to all-valence-three form
    Reduce {
        file: String,
        /// Discard tree components of the mid-graph instead of rejecting
        #[arg(long)]
        strip_tree_mids: bool,
        /// Write the move trace to this path
        #[arg(long)]
        trace: Option<String>,
    },
    /// Reduce an instance and verify the Euler-characteristic identity
    CheckIdentity {
        file: String,
        #[arg(long)]
        strip_tree_mids: bool,
    },
    /// Resolve a bigon in the built (unreduced) instance
    ResolveBigon {
        file: String,
    },
    /// Rank experiment: random rank-two pairs joining to the full group
    ExperimentCs {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        trials: usize,
    },
    /// Intersection inequality sweep over random subgroup pairs
    ExperimentShnc {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 3)]
        rank: u32,
    },
    /// Emit DOT for an instance's graph of graphs
    ExportDot {
        file: String,
        /// Reduce before exporting
        #[arg(long)]
        reduced: bool,
        #[arg(long)]
        strip_tree_mids: bool,
    },
}

fn parse_words(words: &[String]) -> Result<Vec<Word>, GogError> {
    words.iter().map(|s| Word::parse(s)).collect()
}

fn load_instance(path: &str) -> Result<Instance, GogError> {
    Instance::parse(&fs::read_to_string(path)?)
}

fn summarize(g: &LabeledGraph, name: &str) {
    let rank = if g.num_edges() == 0 { 0 } else { g.first_betti() };
    println!("{name}: {} vertices, {} edges, rank {rank}", g.num_vertices(), g.num_edges());
}

fn run(cli: Cli) -> Result<(), GogError> {
    match cli.command {
        Command::Fold { rank, words, dot } => {
            let ws = parse_words(&words)?;
            let g = LabeledGraph::from_words(&ws, rank)?;
            if dot {
                print!("{}", labeled_graph_dot(&g));
            } else {
                print!("{}", g.to_text());
            }
        }
        Command::Intersect { rank, h1, h2, all } => {
            let g1 = LabeledGraph::from_words(&parse_words(&h1)?, rank)?;
            let g2 = LabeledGraph::from_words(&parse_words(&h2)?, rank)?;
            let m = intersection_subgroup(&g1, &g2)?;
            summarize(&m, "intersection");
            for w in m.generators()? {
                println!("gen {w}");
            }
            if all {
                let pb = pullback_product(&g1, &g2)?;
                for (comp, anchor) in all_core_components(&pb) {
                    println!(
                        "component at ({},{}): rank {}",
                        anchor.0,
                        anchor.1,
                        comp.first_betti()
                    );
                }
            }
        }
        Command::Join { rank, h1, h2 } => {
            let g1 = LabeledGraph::from_words(&parse_words(&h1)?, rank)?;
            let g2 = LabeledGraph::from_words(&parse_words(&h2)?, rank)?;
            let j = g1.join(&g2)?;
            summarize(&j, "join");
            print!("{}", j.to_text());
        }
        Command::Build { file } => {
            let inst = load_instance(&file)?;
            let built = build_representing(&inst.subgroups, &inst.edges, inst.rank)?;
            let x = &built.gog;
            println!(
                "underlying: {} vertices, {} edges, chi {}",
                x.num_underlying_vertices(),
                x.num_underlying_edges(),
                x.underlying_euler()
            );
            println!("complexity: {}", complexity(x));
            println!("representing: {}", x.is_representing());
            let gh = x.horizontal_graph();
            let gm = x.mid_graph();
            println!(
                "horizontal graph: {} vertices, {} edges",
                gh.graph.num_vertices(),
                gh.graph.num_edges()
            );
            println!(
                "mid graph: {} vertices, {} edges",
                gm.graph.num_vertices(),
                gm.graph.num_edges()
            );
        }
        Command::Reduce { file, strip_tree_mids, trace } => {
            let inst = load_instance(&file)?;
            let built = build_representing(&inst.subgroups, &inst.edges, inst.rank)?;
            let out = reduce_to_valence_three(&built.gog, strip_tree_mids)?;
            if let Some(path) = trace {
                let mut log = String::new();
                for (rec, _) in &out.steps {
                    log.push_str(&format!("{rec}\n"));
                }
                fs::write(path, log)?;
            }
            let x = &out.result;
            println!("moves applied: {}", out.steps.len());
            println!(
                "reduced underlying: {} vertices, {} edges, chi {}",
                x.num_underlying_vertices(),
                x.num_underlying_edges(),
                x.underlying_euler()
            );
            println!("complexity: {}", complexity(x));
            let val = x.underlying_valences();
            println!(
                "max valence: {}",
                val.iter().copied().max().unwrap_or(0)
            );
        }
        Command::CheckIdentity { file, strip_tree_mids } => {
            let inst = load_instance(&file)?;
            let built = build_representing(&inst.subgroups, &inst.edges, inst.rank)?;
            let out = reduce_to_valence_three(&built.gog, strip_tree_mids)?;
            let report = check_identity(&out.result)?;
            println!("{report}");
            if !report.holds {
                return Err(GogError::Hypothesis("identity violated".into()));
            }
        }
        Command::ResolveBigon { file } => {
            let inst = load_instance(&file)?;
            let built = build_representing(&inst.subgroups, &inst.edges, inst.rank)?;
            let res = resolve_bigon(&built.gog)?;
            println!(
                "bigon in vertex space {} (edges {} and {})",
                res.vertex_space, res.edge_pair.0, res.edge_pair.1
            );
            println!(
                "midpoints in {} component(s)",
                if res.same_component { 1 } else { 2 }
            );
            summarize(&res.m_p, "component at p");
            summarize(&res.m_q, "component at q");
            summarize(&res.k, "folded resolution K");
            println!("K properly contains p-component: {}", res.proper_over_p);
            println!("K properly contains q-component: {}", res.proper_over_q);
            if let Some(m) = res.k_matches_join {
                println!("K matches the join of the two components: {m}");
            }
        }
        Command::ExperimentCs { seed, trials } => {
            let report = rank_experiment(seed, trials)?;
            println!("{report}");
            if !report.all_rank_at_most_one {
                return Err(GogError::Hypothesis("intersection rank exceeded one".into()));
            }
        }
        Command::ExperimentShnc { seed, trials, rank } => {
            let report = inequality_sweep(seed, trials, rank)?;
            println!("{report}");
            if !report.all_hold {
                return Err(GogError::Hypothesis("inequality violated".into()));
            }
        }
        Command::ExportDot { file, reduced, strip_tree_mids } => {
            let inst = load_instance(&file)?;
            let built = build_representing(&inst.subgroups, &inst.edges, inst.rank)?;
            let x = if reduced {
                reduce_to_valence_three(&built.gog, strip_tree_mids)?.result
            } else {
                built.gog
            };
            print!("{}", gog_dot(&x));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ (GogError::InstanceParse { .. } | GogError::WordSyntax { .. })) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
