//! `tpj`: tree projections, the Robber and Captain game and width deciders
//! from the command line.
//!
//! Exit codes: 0 yes or success, 1 no or none, 2 usage or parse error,
//! 3 verification failure.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use serde_json::json;

use treeproj::corpus::{exhaustive_family, random_pairs, CorpusBounds};
use treeproj::decomposition::{
    check_sh07_connected, verify_hypertree_decomposition, verify_tree_decomposition,
};
use treeproj::game::{
    brute_solve_with, is_monotone, monotonize, solve, strategy_size, verify_strategy, BruteOptions,
    GameTree, DEFAULT_BRUTE_NODES,
};
use treeproj::io::{
    dot, json as jdoc, parse_hypergraph, print_hypergraph, DecompositionDoc, GameTreeDoc,
    HypergraphDoc,
};
use treeproj::jointree::build_join_tree;
use treeproj::treeprojection::{
    brute_force_tp, check_minimality_conditions, check_tree_projection, find_tp, ghw_decide,
    minimize, tw_decide, TPInstance, DEFAULT_BRUTE_TP_NODES, DEFAULT_TW_NODES,
};
use treeproj::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Parser)]
#[command(
    name = "tpj",
    version,
    about = "Tree projections, the Robber and Captain game, and width deciders"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    json: bool,
    /// Write the main artifact to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Size bound for the exhaustive procedures.
    #[arg(long, env = "TPJ_MAX_NODES", global = true)]
    max_nodes: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Pair {
    h1: PathBuf,
    h2: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Whether the hypergraph is acyclic.
    Acyclic { h: PathBuf },
    /// The `[sep]`-components of the hypergraph.
    Components {
        h: PathBuf,
        /// Comma-separated separator nodes.
        #[arg(long, default_value = "")]
        sep: String,
    },
    /// A join tree of an acyclic hypergraph.
    Jointree { h: PathBuf },
    /// Find a tree projection of `h1` with respect to `h2`.
    TpFind {
        #[command(flatten)]
        pair: Pair,
        /// Use the elimination-ordering search instead of the game.
        #[arg(long)]
        brute: bool,
        /// Minimize the result.
        #[arg(long)]
        minimize: bool,
    },
    /// Check that `ha` is a tree projection of `(h1, h2)`.
    TpCheck {
        #[command(flatten)]
        pair: Pair,
        ha: PathBuf,
    },
    /// Minimize a tree projection.
    TpMinimize {
        #[command(flatten)]
        pair: Pair,
        ha: PathBuf,
    },
    /// Necessary minimality conditions of a tree projection.
    TpReport {
        #[command(flatten)]
        pair: Pair,
        ha: PathBuf,
    },
    /// Solve the Robber and Captain game on `(h1, h2)`.
    GameSolve {
        #[command(flatten)]
        pair: Pair,
        /// Also write the game tree as JSON to this file.
        #[arg(long)]
        tree: Option<PathBuf>,
        /// Exhaustive search over all strategies, monotone or not.
        #[arg(long)]
        brute: bool,
        /// With `--brute`, prefer non-monotone moves using this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// With `--brute`, extra rounds allowed beyond the optimal depth.
        #[arg(long, default_value_t = 0)]
        slack: usize,
    },
    /// Turn a winning strategy into a monotone one.
    GameMonotonize {
        #[command(flatten)]
        pair: Pair,
        tree: PathBuf,
    },
    /// Check that a game tree is a winning strategy.
    GameVerify {
        #[command(flatten)]
        pair: Pair,
        tree: PathBuf,
    },
    /// Decide generalized hypertree width at most `k`.
    Ghw {
        h: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Decide treewidth at most `k`.
    Tw {
        h: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Verify a tree decomposition given as JSON.
    VerifyTd { h: PathBuf, decomposition: PathBuf },
    /// Verify a hypertree decomposition given as JSON.
    VerifyHd {
        h: PathBuf,
        decomposition: PathBuf,
        /// Drop the descendant condition.
        #[arg(long)]
        generalized: bool,
        /// Also require the strong connectedness condition.
        #[arg(long)]
        sh07: bool,
    },
    /// Write a reproducible instance corpus.
    GenCorpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out_dir: PathBuf,
        /// Node bound of the random pairs.
        #[arg(long, default_value_t = 8)]
        pair_nodes: usize,
        #[arg(long, default_value_t = 6)]
        max_edges: usize,
        #[arg(long, default_value_t = 4)]
        max_edge_size: usize,
        #[arg(long, default_value_t = 500)]
        pairs: usize,
        /// Node count of the exhaustive family.
        #[arg(long, default_value_t = 4)]
        family_nodes: usize,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Verify(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

type Outcome = Result<bool, Failure>;

struct Ctx {
    format: Format,
    out: Option<PathBuf>,
    max_nodes: Option<usize>,
}

impl Ctx {
    fn emit(&self, text: &str) -> anyhow::Result<()> {
        let mut text = text.to_string();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.out {
            Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn emit_hypergraph(&self, h: &Hypergraph, extra: serde_json::Value) -> anyhow::Result<()> {
        match self.format {
            Format::Text => self.emit(&print_hypergraph(h)),
            Format::Dot => self.emit(&dot::hypergraph(h)),
            Format::Json => {
                let mut v = extra;
                v["hypergraph"] = serde_json::to_value(HypergraphDoc::new(h))?;
                self.emit(&jdoc::to_string(&v))
            }
        }
    }

    fn bound(&self, default: usize) -> usize {
        self.max_nodes.unwrap_or(default)
    }
}

fn read_hypergraph(path: &Path) -> anyhow::Result<Hypergraph> {
    let src = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_hypergraph(&src).with_context(|| format!("parsing {}", path.display()))
}

fn read_pair(p: &Pair) -> anyhow::Result<TPInstance> {
    Ok(TPInstance::new(
        &read_hypergraph(&p.h1)?,
        &read_hypergraph(&p.h2)?,
    ))
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_tree(path: &Path, inst: &TPInstance) -> anyhow::Result<GameTree> {
    let doc = GameTreeDoc::parse(&read_text(path)?)
        .with_context(|| format!("parsing {}", path.display()))?;
    doc.to_tree(inst.h1(), inst.h2())
        .with_context(|| format!("reading game tree {}", path.display()))
}

fn emit_tree(ctx: &Ctx, tree: &GameTree, inst: &TPInstance) -> anyhow::Result<()> {
    match ctx.format {
        Format::Text => ctx.emit(&format!(
            "{}size {}, monotone {}",
            render::game_tree(tree),
            strategy_size(tree),
            is_monotone(tree, inst.h1())
        )),
        Format::Json => ctx.emit(&jdoc::to_string(&GameTreeDoc::new(tree, inst.h2()))),
        Format::Dot => ctx.emit(&dot::game_tree(tree)),
    }
}

fn run(cli: Cli) -> Outcome {
    let ctx = Ctx {
        format: if cli.json { Format::Json } else { cli.format },
        out: cli.out,
        max_nodes: cli.max_nodes,
    };
    match cli.command {
        Command::Acyclic { h } => {
            let h = read_hypergraph(&h)?;
            let yes = build_join_tree(&h).is_some();
            match ctx.format {
                Format::Json => ctx.emit(&jdoc::to_string(&json!({ "acyclic": yes })))?,
                _ => ctx.emit(if yes { "acyclic" } else { "cyclic" })?,
            }
            Ok(yes)
        }
        Command::Components { h, sep } => {
            let h = read_hypergraph(&h)?;
            let names: Vec<&str> = sep
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            let v = h.set(names).context("separator")?;
            let comps = h.component_sets(v);
            match ctx.format {
                Format::Json => {
                    let sets: Vec<Vec<&str>> =
                        comps.iter().map(|&c| h.universe().names_of(c)).collect();
                    ctx.emit(&jdoc::to_string(
                        &json!({ "separator": h.universe().names_of(v), "components": sets }),
                    ))?
                }
                _ => {
                    let lines: Vec<String> = comps.iter().map(|&c| h.fmt_set(c)).collect();
                    ctx.emit(&lines.join("\n"))?
                }
            }
            Ok(true)
        }
        Command::Jointree { h } => {
            let h = read_hypergraph(&h)?;
            let Some(jt) = build_join_tree(&h) else {
                ctx.emit("cyclic")?;
                return Ok(false);
            };
            match ctx.format {
                Format::Text => ctx.emit(&render::join_tree(&jt))?,
                Format::Json => {
                    ctx.emit(&jdoc::to_string(&DecompositionDoc::from_join_tree(&jt)))?
                }
                Format::Dot => ctx.emit(&dot::join_tree(&jt))?,
            }
            Ok(true)
        }
        Command::TpFind {
            pair,
            brute,
            minimize: min,
        } => {
            let inst = read_pair(&pair)?;
            let found = if brute {
                brute_force_tp(&inst, ctx.bound(DEFAULT_BRUTE_TP_NODES)).map_err(|e| anyhow!(e))?
            } else {
                find_tp(&inst)
            };
            let Some(mut ha) = found else {
                ctx.emit("no tree projection")?;
                return Ok(false);
            };
            if min {
                ha = minimize(&ha, &inst).map_err(|e| anyhow!(e))?;
            }
            let report = check_minimality_conditions(&ha, &inst);
            ctx.emit_hypergraph(&ha, json!({ "report": report }))?;
            Ok(true)
        }
        Command::TpCheck { pair, ha } => {
            let inst = read_pair(&pair)?;
            let ha = read_hypergraph(&ha)?;
            match check_tree_projection(&ha, &inst) {
                Ok(()) => {
                    ctx.emit("tree projection")?;
                    Ok(true)
                }
                Err(e) => Err(Failure::Verify(e.to_string())),
            }
        }
        Command::TpMinimize { pair, ha } => {
            let inst = read_pair(&pair)?;
            let ha = read_hypergraph(&ha)?;
            let min = minimize(&ha, &inst).map_err(|e| Failure::Verify(e.to_string()))?;
            let report = check_minimality_conditions(&min, &inst);
            ctx.emit_hypergraph(&min, json!({ "report": report }))?;
            Ok(true)
        }
        Command::TpReport { pair, ha } => {
            let inst = read_pair(&pair)?;
            let ha = read_hypergraph(&ha)?;
            let report = check_minimality_conditions(&ha, &inst);
            if !report.valid {
                return Err(Failure::Verify(format!(
                    "not a tree projection; {}",
                    report.note
                )));
            }
            match ctx.format {
                Format::Json => ctx.emit(&jdoc::to_string(&report))?,
                _ => {
                    let mut lines = vec![
                        format!("valid {}", report.valid),
                        format!("reduced {}", report.reduced),
                        format!("nodes_preserved {}", report.nodes_preserved),
                        format!("components_preserved {}", report.components_preserved),
                        format!("h1_connected_all_roots {}", report.h1_connected_all_roots),
                    ];
                    for (root, w) in &report.normal_form_witnesses {
                        let status = match w {
                            treeproj::treeprojection::Witness::JoinTree(_) => {
                                "normal form".to_string()
                            }
                            treeproj::treeprojection::Witness::Failure(e) => e.clone(),
                        };
                        lines.push(format!("root {root}: {status}"));
                    }
                    lines.push(report.note.clone());
                    ctx.emit(&lines.join("\n"))?
                }
            }
            Ok(report.all_hold())
        }
        Command::GameSolve {
            pair,
            tree,
            brute,
            seed,
            slack,
        } => {
            let inst = read_pair(&pair)?;
            let found = if brute {
                let opts = BruteOptions {
                    max_nodes: ctx.bound(DEFAULT_BRUTE_NODES),
                    seed,
                    slack,
                    ..BruteOptions::default()
                };
                brute_solve_with(inst.h1(), inst.h2(), &opts).map_err(|e| anyhow!(e))?
            } else {
                solve(inst.h1(), inst.h2())
            };
            let Some(t) = found else {
                ctx.emit("robber wins")?;
                return Ok(false);
            };
            if let Some(path) = tree {
                fs::write(&path, jdoc::to_string(&GameTreeDoc::new(&t, inst.h2())))
                    .with_context(|| format!("writing {}", path.display()))?;
                info!("game tree written to {}", path.display());
            }
            emit_tree(&ctx, &t, &inst)?;
            Ok(true)
        }
        Command::GameMonotonize { pair, tree } => {
            let inst = read_pair(&pair)?;
            let t = read_tree(&tree, &inst)?;
            let out =
                monotonize(&t, inst.h1(), inst.h2()).map_err(|e| Failure::Verify(e.to_string()))?;
            emit_tree(&ctx, &out, &inst)?;
            Ok(true)
        }
        Command::GameVerify { pair, tree } => {
            let inst = read_pair(&pair)?;
            let t = read_tree(&tree, &inst)?;
            verify_strategy(&t, inst.h1(), inst.h2())
                .map_err(|e| Failure::Verify(e.to_string()))?;
            let monotone = is_monotone(&t, inst.h1());
            match ctx.format {
                Format::Json => ctx.emit(&jdoc::to_string(
                    &json!({ "winning": true, "monotone": monotone, "size": strategy_size(&t) }),
                ))?,
                _ => ctx.emit(&format!(
                    "winning strategy, size {}, monotone {monotone}",
                    strategy_size(&t)
                ))?,
            }
            Ok(true)
        }
        Command::Ghw { h, k } => {
            let h = read_hypergraph(&h)?;
            let Some(hd) = ghw_decide(&h, k).map_err(|e| anyhow!(e))? else {
                ctx.emit(&format!("generalized hypertree width above {k}"))?;
                return Ok(false);
            };
            match ctx.format {
                Format::Text => ctx.emit(&render::hypertree_decomposition(&hd))?,
                Format::Json => ctx.emit(&jdoc::to_string(
                    &DecompositionDoc::from_hypertree_decomposition(&hd, &h),
                ))?,
                Format::Dot => ctx.emit(&dot::hypertree_decomposition(&hd))?,
            }
            Ok(true)
        }
        Command::Tw { h, k } => {
            let h = read_hypergraph(&h)?;
            let Some(td) = tw_decide(&h, k, ctx.bound(DEFAULT_TW_NODES)).map_err(|e| anyhow!(e))?
            else {
                ctx.emit(&format!("treewidth above {k}"))?;
                return Ok(false);
            };
            match ctx.format {
                Format::Text => ctx.emit(&render::tree_decomposition(&td))?,
                Format::Json => ctx.emit(&jdoc::to_string(
                    &DecompositionDoc::from_tree_decomposition(&td),
                ))?,
                Format::Dot => ctx.emit(&dot::tree_decomposition(&td))?,
            }
            Ok(true)
        }
        Command::VerifyTd { h, decomposition } => {
            let h = read_hypergraph(&h)?;
            let doc = DecompositionDoc::parse(&read_text(&decomposition)?)
                .context("parsing decomposition")?;
            let td = doc
                .to_tree_decomposition(&h)
                .context("reading decomposition")?;
            let width =
                verify_tree_decomposition(&h, &td).map_err(|e| Failure::Verify(e.to_string()))?;
            ctx.emit(&format!("valid tree decomposition of width {width}"))?;
            Ok(true)
        }
        Command::VerifyHd {
            h,
            decomposition,
            generalized,
            sh07,
        } => {
            let h = read_hypergraph(&h)?;
            let doc = DecompositionDoc::parse(&read_text(&decomposition)?)
                .context("parsing decomposition")?;
            let hd = doc
                .to_hypertree_decomposition(&h)
                .context("reading decomposition")?;
            let width = verify_hypertree_decomposition(&h, &hd, generalized)
                .map_err(|e| Failure::Verify(e.to_string()))?;
            if sh07 {
                check_sh07_connected(&hd).map_err(|e| Failure::Verify(e.to_string()))?;
            }
            let kind = if generalized {
                "generalized hypertree"
            } else {
                "hypertree"
            };
            ctx.emit(&format!("valid {kind} decomposition of width {width}"))?;
            Ok(true)
        }
        Command::GenCorpus {
            seed,
            out_dir,
            pair_nodes,
            max_edges,
            max_edge_size,
            pairs,
            family_nodes,
        } => {
            let bounds = CorpusBounds {
                max_nodes: pair_nodes,
                max_edges,
                max_edge_size,
                pairs,
            };
            if pair_nodes > 26 || family_nodes > 6 {
                return Err(Failure::Usage(anyhow!("corpus bounds too large")));
            }
            let family = exhaustive_family(family_nodes, family_nodes);
            let random = random_pairs(seed, &bounds);
            let write = |rel: String, text: String| -> anyhow::Result<()> {
                let p = out_dir.join(rel);
                fs::create_dir_all(p.parent().expect("relative paths have a parent"))?;
                fs::write(&p, text).with_context(|| format!("writing {}", p.display()))
            };
            for (i, h) in family.iter().enumerate() {
                write(format!("family/{i:04}.hg"), print_hypergraph(h))?;
            }
            for inst in &random {
                write(
                    format!("random/{}.h1.hg", inst.name),
                    print_hypergraph(&inst.h1),
                )?;
                write(
                    format!("random/{}.h2.hg", inst.name),
                    print_hypergraph(&inst.h2),
                )?;
            }
            let summary = json!({
                "seed": seed,
                "family_nodes": family_nodes,
                "family": family.len(),
                "random_pairs": random.len(),
                "max_nodes": pair_nodes,
                "max_edges": max_edges,
                "max_edge_size": max_edge_size,
            });
            write("corpus.json".into(), jdoc::to_string(&summary))?;
            match ctx.format {
                Format::Json => ctx.emit(&jdoc::to_string(&summary))?,
                _ => ctx.emit(&format!(
                    "{} hypergraphs on at most {family_nodes} nodes, {} random pairs",
                    family.len(),
                    random.len()
                ))?,
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Verify(msg)) => {
            eprintln!("verification failed");
            println!("{msg}");
            ExitCode::from(3)
        }
    }
}
