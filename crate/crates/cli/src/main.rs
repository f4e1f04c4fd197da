use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use hyperbolicity::generators::{
    find_colored_independent_set, find_orthogonal_pair, gen_4is_graph, gen_cycle, gen_gnp, gen_ov_graph,
    gen_random_cograph, gen_random_tree, gen_theta, plant_p4s, FourPartiteInstance, OvInstance, Sidecar,
};
use hyperbolicity::graph::io::{parse_edge_list, write_edge_list};
use hyperbolicity::harness::{bench, run, verify, Algorithm, BenchFamily, RunOptions, BENCH_CSV_HEADER};
use hyperbolicity::reductions::{rule1_prune_degree_one, rule2_prune_parallel_paths, rule3_twin_reduce, Reduced};
use hyperbolicity::{Graph, Subgraph};

#[derive(Parser)]
#[command(name = "hyperbolicity", version, about = "Exact Gromov hyperbolicity of unweighted graphs")]
struct Cli {
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true, env = "HYP_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Brute,
    Paths,
    FeedbackEdge,
    Degree3,
    VertexCover,
    Cograph,
}

impl From<Algo> for Algorithm {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Brute => Algorithm::Brute,
            Algo::Paths => Algorithm::Paths,
            Algo::FeedbackEdge => Algorithm::FeedbackEdge,
            Algo::Degree3 => Algorithm::Degree3,
            Algo::VertexCover => Algorithm::VertexCover,
            Algo::Cograph => Algorithm::Cograph,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Ov,
    #[value(name = "4is")]
    FourIs,
    Cycle,
    Tree,
    Gnp,
    Theta,
    Cograph,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFam {
    Theta,
    Cycle,
    TreePlus,
    Gnp,
}

#[derive(Subcommand)]
enum Command {
    /// Compute δ of an edge-list file.
    Compute {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "brute")]
        algo: Algo,
        /// Print the full JSON report.
        #[arg(long)]
        json: bool,
        /// Also answer whether δ is at most this value.
        #[arg(long)]
        at_most: Option<u64>,
        /// Include every solved integer program in the report.
        #[arg(long)]
        dump_ilp: bool,
        /// Placements with more position vectors than this go to the ILP solver.
        #[arg(long)]
        enumeration_limit: Option<u64>,
    },
    /// Apply reduction rules; writes the reduced edge list and the trace.
    Reduce {
        input: PathBuf,
        /// Comma-separated rule numbers, applied in the given order.
        #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
        rules: Vec<u8>,
        /// Reduced edge list (stdout if omitted).
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// Trace JSON (stderr if omitted).
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Generate an instance; the sidecar goes to `<output>.json`.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Vertex count (cycle, tree, gnp, cograph) or vectors per side (ov).
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Edge probability (gnp, 4is) or entry probability (ov).
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        /// Vector length (ov).
        #[arg(long, default_value_t = 8)]
        dim: usize,
        /// Part sizes (4is).
        #[arg(long, value_delimiter = ',', default_value = "2,2,2,2")]
        parts: Vec<usize>,
        /// Path lengths in edges (theta).
        #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
        lengths: Vec<usize>,
        /// P4s planted into the cograph.
        #[arg(long, default_value_t = 0)]
        planted: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Compare every parameterized algorithm with brute force on seeded graphs.
    Verify {
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 30)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Time algorithms on a growing family; CSV on stdout.
    Bench {
        #[arg(long, value_enum, default_value = "theta")]
        family: BenchFam,
        #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "paths")]
        algos: Vec<Algo>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_edge_list(&text).with_context(|| format!("malformed edge list {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Compute { input, algo, json, at_most, dump_ilp, enumeration_limit } => {
            let g = read_graph(&input)?;
            let mut opts = RunOptions { at_most, ..Default::default() };
            opts.engine.dump_ilp = dump_ilp;
            if let Some(l) = enumeration_limit {
                opts.engine.enumeration_limit = l;
            }
            let report = run(&g, algo.into(), &input.display().to_string(), &opts)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("delta = {}", report.delta);
                if let Some(w) = &report.witness {
                    println!("witness = {:?}", w.vertices);
                }
                if let Some(d) = &report.decision {
                    println!("delta <= {}: {}", d.at_most, if d.holds { "yes" } else { "no" });
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reduce { input, rules, output, trace } => {
            let g = read_graph(&input)?;
            let mut sub = Subgraph::identity(g);
            let mut traces = Vec::new();
            for rule in rules {
                let r: Reduced = match rule {
                    1 => rule1_prune_degree_one(&sub.graph),
                    2 => rule2_prune_parallel_paths(&sub.graph),
                    3 => rule3_twin_reduce(&sub.graph),
                    _ => bail!("unknown rule {rule}; expected 1, 2 or 3"),
                };
                traces.push(r.trace.mapped(|v| sub.original(v)));
                sub = sub.then(r.subgraph);
            }
            write_or_print(output.as_deref(), &write_edge_list(&sub.graph))?;
            let trace_json = serde_json::to_string_pretty(&json!({
                "schema": 1,
                "kept": sub.to_original,
                "traces": traces,
            }))?;
            match trace {
                Some(p) => fs::write(&p, trace_json).with_context(|| format!("cannot write {}", p.display()))?,
                None => eprintln!("{trace_json}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { family, seed, n, p, dim, parts, lengths, planted, output } => {
            let (g, sidecar) = generate(family, seed, n, p, dim, &parts, &lengths, planted)?;
            let meta = serde_json::to_string_pretty(&sidecar)?;
            match &output {
                Some(path) => {
                    fs::write(path, write_edge_list(&g)).with_context(|| format!("cannot write {}", path.display()))?;
                    let mut side = path.clone().into_os_string();
                    side.push(".json");
                    fs::write(&side, meta)?;
                }
                None => {
                    print!("{}", write_edge_list(&g));
                    eprintln!("{meta}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { trials, max_n, seed } => {
            let summary = verify(trials, max_n, seed, &RunOptions::default())?;
            println!("graphs: {}, runs: {}, mismatches: {}", summary.graphs, summary.runs, summary.mismatches.len());
            for m in &summary.mismatches {
                println!(
                    "MISMATCH {} on {}: expected {}, got {}",
                    m.algorithm,
                    m.label,
                    m.expected,
                    m.got.map_or_else(|| m.error.clone().unwrap_or_default(), |d| d.to_string())
                );
                print!("{}", m.edge_list);
            }
            Ok(if summary.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Bench { family, sizes, repeats, algos, seed } => {
            let fam = match family {
                BenchFam::Theta => BenchFamily::Theta,
                BenchFam::Cycle => BenchFamily::Cycle,
                BenchFam::TreePlus => BenchFamily::TreePlus,
                BenchFam::Gnp => BenchFamily::Gnp,
            };
            let algos: Vec<Algorithm> = algos.into_iter().map(Algorithm::from).collect();
            let rows = bench(fam, &sizes, repeats, &algos, seed, &RunOptions::default())?;
            let mut out = std::io::stdout().lock();
            writeln!(out, "{BENCH_CSV_HEADER}")?;
            for r in rows {
                writeln!(out, "{}", r.to_csv())?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: Family,
    seed: u64,
    n: usize,
    p: f64,
    dim: usize,
    parts: &[usize],
    lengths: &[usize],
    planted: usize,
) -> Result<(Graph, Sidecar)> {
    let mut side = Sidecar { seed: Some(seed), ..Default::default() };
    let g = match family {
        Family::Ov => {
            let inst = OvInstance::random(n, dim, p, seed);
            let og = gen_ov_graph(&inst)?;
            side.family = "ov".into();
            side.params = json!({ "n": n, "dim": dim, "p": p, "a": inst.a, "b": inst.b });
            side.landmarks = serde_json::to_value(&og.landmarks)?;
            side.ground_truth = Some(find_orthogonal_pair(&inst).is_some());
            og.graph
        }
        Family::FourIs => {
            let sizes: [usize; 4] = parts.try_into().context("--parts needs four sizes")?;
            if sizes.contains(&0) {
                bail!("every part must be nonempty");
            }
            let inst = FourPartiteInstance::random(sizes, p, seed);
            let fg = gen_4is_graph(&inst)?;
            side.family = "4is".into();
            side.params = json!({ "parts": sizes, "p": p, "instance_edges": inst.graph.edge_list() });
            side.landmarks = serde_json::to_value(&fg.landmarks)?;
            side.ground_truth = Some(find_colored_independent_set(&inst).is_some());
            side.warning = fg.warning;
            fg.graph
        }
        Family::Cycle => {
            side.family = "cycle".into();
            side.params = json!({ "n": n });
            gen_cycle(n)
        }
        Family::Tree => {
            side.family = "tree".into();
            side.params = json!({ "n": n });
            gen_random_tree(n, seed)
        }
        Family::Gnp => {
            side.family = "gnp".into();
            side.params = json!({ "n": n, "p": p });
            gen_gnp(n, p, seed)
        }
        Family::Theta => {
            if lengths.is_empty() || lengths.contains(&0) {
                bail!("theta lengths must be positive");
            }
            side.family = "theta".into();
            side.params = json!({ "lengths": lengths });
            gen_theta(lengths)
        }
        Family::Cograph => {
            side.family = "cograph".into();
            side.params = json!({ "n": n, "planted": planted });
            let g = gen_random_cograph(n, seed);
            if planted > 0 {
                if n < 4 {
                    bail!("planting a P4 needs at least four vertices");
                }
                plant_p4s(&g, planted, seed)
            } else {
                g
            }
        }
    };
    Ok((g, side))
}
