//! Algorithm dispatch, run reports, oracle verification and timing.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cograph::{hyperbolicity_cograph_distance_with, CographOptions};
use crate::error::{Error, Result};
use crate::generators::{
    gen_complete, gen_cycle, gen_gnp, gen_random_cograph, gen_subdivided, gen_theta, gen_tree_plus_edges, plant_p4s,
};
use crate::graph::io::write_edge_list;
use crate::graph::Graph;
use crate::hyperbolicity::{brute_force_delta, HyperbolicityResult, Witness};
use crate::path_engine::{
    hyperbolicity_degree3_with, hyperbolicity_feedback_edge_with, hyperbolicity_via_path_cover_with, CaseIlp,
    EngineOptions,
};
use crate::reductions::ReductionTrace;
use crate::vertex_cover::{hyperbolicity_vc_with, KernelReport};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Brute,
    Paths,
    FeedbackEdge,
    Degree3,
    VertexCover,
    Cograph,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Brute,
        Algorithm::Paths,
        Algorithm::FeedbackEdge,
        Algorithm::Degree3,
        Algorithm::VertexCover,
        Algorithm::Cograph,
    ];

    pub const PARAMETERIZED: [Algorithm; 5] = [
        Algorithm::Paths,
        Algorithm::FeedbackEdge,
        Algorithm::Degree3,
        Algorithm::VertexCover,
        Algorithm::Cograph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::Paths => "paths",
            Algorithm::FeedbackEdge => "feedback-edge",
            Algorithm::Degree3 => "degree3",
            Algorithm::VertexCover => "vertex-cover",
            Algorithm::Cograph => "cograph",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown algorithm {s:?}")))
    }
}

/// Parameter values observed during a run; only those the algorithm
/// computes are set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub path_cover: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub maximal_paths: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub feedback_edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub high_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex_cover: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub kernel: Option<KernelReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cograph_deletion: Option<usize>,
}

impl Parameters {
    /// The value the algorithm is parameterized by.
    pub fn primary(&self, algo: Algorithm) -> Option<usize> {
        match algo {
            Algorithm::Brute => None,
            Algorithm::Paths => self.path_cover,
            Algorithm::FeedbackEdge => self.feedback_edges,
            Algorithm::Degree3 => self.high_degree,
            Algorithm::VertexCover => self.vertex_cover,
            Algorithm::Cograph => self.cograph_deletion,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub at_most: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub algorithm: Algorithm,
    pub input: String,
    pub n: usize,
    pub m: usize,
    pub delta: u64,
    pub witness: Option<Witness>,
    pub parameters: Parameters,
    pub wall_time_ms: f64,
    pub traces: Vec<ReductionTrace>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub decision: Option<Decision>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub ilp_models: Vec<CaseIlp>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOptions {
    pub engine: EngineOptions,
    pub cograph: CographOptions,
    /// Answer "is δ at most this value?" alongside the optimum.
    pub at_most: Option<u64>,
}

/// Run one algorithm. The witness is rechecked against `g` before returning.
pub fn run(g: &Graph, algo: Algorithm, input: &str, opts: &RunOptions) -> Result<RunReport> {
    let start = Instant::now();
    let mut params = Parameters::default();
    let mut traces = Vec::new();
    let mut ilp_models = Vec::new();
    let result: HyperbolicityResult = match algo {
        Algorithm::Brute => brute_force_delta(g)?,
        Algorithm::Paths | Algorithm::FeedbackEdge => {
            let report = if algo == Algorithm::FeedbackEdge {
                let (_, report, k) = hyperbolicity_feedback_edge_with(g, &opts.engine);
                params.feedback_edges = Some(k);
                report
            } else {
                hyperbolicity_via_path_cover_with(g, &opts.engine)
            };
            let result = report.result;
            params.path_cover = Some(report.stats.cover_size);
            params.maximal_paths = Some(report.stats.maximal_paths);
            traces = report.traces;
            ilp_models = report.models;
            result
        }
        Algorithm::Degree3 => {
            params.high_degree = Some(g.high_degree_vertices().len());
            let report = hyperbolicity_degree3_with(g, &opts.engine);
            params.path_cover = Some(report.stats.cover_size);
            params.maximal_paths = Some(report.stats.maximal_paths);
            traces = report.traces;
            ilp_models = report.models;
            report.result
        }
        Algorithm::VertexCover => {
            let (result, reduced, kernel) = hyperbolicity_vc_with(g)?;
            params.vertex_cover = Some(kernel.k);
            params.kernel = Some(kernel);
            traces.push(reduced.trace);
            result
        }
        Algorithm::Cograph => {
            let (result, report) = hyperbolicity_cograph_distance_with(g, &opts.cograph)?;
            params.cograph_deletion = Some(report.deletion_set.len());
            result
        }
    };
    let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    assert!(result.is_consistent(g), "{algo}: witness does not reproduce δ = {}", result.delta);
    Ok(RunReport {
        schema: SCHEMA_VERSION,
        algorithm: algo,
        input: input.to_string(),
        n: g.n(),
        m: g.m(),
        delta: result.delta,
        witness: result.witness,
        parameters: params,
        wall_time_ms,
        traces,
        decision: opts.at_most.map(|b| Decision { at_most: b, holds: result.delta <= b }),
        ilp_models,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub label: String,
    pub algorithm: Algorithm,
    pub expected: u64,
    pub got: Option<u64>,
    pub error: Option<String>,
    pub edge_list: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub graphs: usize,
    pub runs: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// A labeled graph from the verification corpus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sample {
    pub label: String,
    pub graph: Graph,
}

/// `trials` seeded graphs with at most `max_n` vertices, cycling through
/// random graphs, theta graphs, subdivided cliques, trees with extra edges,
/// and cographs with planted P4s.
pub fn verification_corpus(trials: usize, max_n: usize, seed: u64) -> Vec<Sample> {
    let max_n = max_n.max(5);
    let ps = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3];
    (0..trials)
        .map(|t| {
            let s = seed.wrapping_mul(1_000_003).wrapping_add(t as u64);
            let span = max_n - 4;
            let n = 5 + (s as usize % span.max(1)).min(max_n - 5);
            let (label, graph) = match t % 5 {
                0 => {
                    let p = ps[(t / 5) % ps.len()];
                    (format!("gnp(n={n}, p={p}, seed={s})"), gen_gnp(n, p, s))
                }
                1 => {
                    let count = 2 + s as usize % 3;
                    let budget = max_n.saturating_sub(2).max(count);
                    let lens: Vec<usize> =
                        (0..count).map(|i| 2 + (s as usize / (i + 1)) % (budget / count).max(1)).collect();
                    (format!("theta({lens:?})"), gen_theta(&lens))
                }
                2 => {
                    let k = 3 + s as usize % 3;
                    let f = (1 + s as usize % 3).min(((max_n - k) / (k * (k - 1) / 2)).max(1));
                    (format!("subdivided(K{k}, {f})"), gen_subdivided(&gen_complete(k), f))
                }
                3 => {
                    let extra = s as usize % 6;
                    (format!("tree_plus_edges(n={n}, extra={extra}, seed={s})"), gen_tree_plus_edges(n, extra, s))
                }
                _ => {
                    let planted = s as usize % 3;
                    (
                        format!("cograph(n={n}, seed={s}) + {planted} P4"),
                        plant_p4s(&gen_random_cograph(n, s), planted, s ^ 0x5eed),
                    )
                }
            };
            Sample { label, graph }
        })
        .collect()
}

/// Compare every parameterized algorithm with brute force on the corpus.
pub fn verify(trials: usize, max_n: usize, seed: u64, opts: &RunOptions) -> Result<VerifySummary> {
    let mut summary = VerifySummary::default();
    for sample in verification_corpus(trials, max_n, seed) {
        let g = &sample.graph;
        let expected = brute_force_delta(g)?.delta;
        summary.graphs += 1;
        for algo in Algorithm::PARAMETERIZED {
            summary.runs += 1;
            let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(g, algo, &sample.label, opts)));
            let (got, error) = match outcome {
                Ok(Ok(r)) => (Some(r.delta), None),
                Ok(Err(e)) => (None, Some(e.to_string())),
                Err(_) => (None, Some("panicked".to_string())),
            };
            if got != Some(expected) {
                summary.mismatches.push(Mismatch {
                    label: sample.label.clone(),
                    algorithm: algo,
                    expected,
                    got,
                    error,
                    edge_list: write_edge_list(g),
                });
            }
        }
    }
    Ok(summary)
}

/// Families for timing runs, indexed by a size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BenchFamily {
    /// Three paths of about `size / 3` edges each between two hubs.
    Theta,
    /// A cycle of `size` vertices.
    Cycle,
    /// Tree on `size` vertices plus five extra edges.
    TreePlus,
    /// `G(size, 0.1)`.
    Gnp,
}

impl FromStr for BenchFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta" => Ok(BenchFamily::Theta),
            "cycle" => Ok(BenchFamily::Cycle),
            "tree-plus" => Ok(BenchFamily::TreePlus),
            "gnp" => Ok(BenchFamily::Gnp),
            _ => Err(Error::InvalidInstance(format!("unknown bench family {s:?}"))),
        }
    }
}

impl BenchFamily {
    pub fn instance(self, size: usize, seed: u64) -> Graph {
        match self {
            BenchFamily::Theta => {
                let l = (size / 3).max(2);
                gen_theta(&[l, l + 1, l + 2])
            }
            BenchFamily::Cycle => gen_cycle(size.max(3)),
            BenchFamily::TreePlus => gen_tree_plus_edges(size.max(2), 5, seed),
            BenchFamily::Gnp => gen_gnp(size, 0.1, seed),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub size: usize,
    pub n: usize,
    pub m: usize,
    pub algorithm: Algorithm,
    pub repeat: usize,
    pub wall_seconds: f64,
    pub delta: u64,
    pub parameter: Option<usize>,
}

pub const BENCH_CSV_HEADER: &str = "size,n,m,algorithm,repeat,wall_seconds,delta,parameter";

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{:.6},{},{}",
            self.size,
            self.n,
            self.m,
            self.algorithm,
            self.repeat,
            self.wall_seconds,
            self.delta,
            self.parameter.map_or(String::new(), |p| p.to_string())
        )
    }
}

pub fn bench(
    family: BenchFamily,
    sizes: &[usize],
    repeats: usize,
    algos: &[Algorithm],
    seed: u64,
    opts: &RunOptions,
) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &size in sizes {
        let g = family.instance(size, seed);
        for &algo in algos {
            for repeat in 0..repeats {
                let start = Instant::now();
                let r = run(&g, algo, "bench", opts)?;
                rows.push(BenchRow {
                    size,
                    n: g.n(),
                    m: g.m(),
                    algorithm: algo,
                    repeat,
                    wall_seconds: start.elapsed().as_secs_f64(),
                    delta: r.delta,
                    parameter: r.parameters.primary(algo),
                });
            }
        }
    }
    Ok(rows)
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let cov: f64 = pts.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = pts.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    cov / var
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algorithm_names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
            assert_eq!(serde_json::to_value(a).unwrap(), a.name());
        }
        assert!("fast".parse::<Algorithm>().is_err());
    }

    #[test]
    fn c4_report() {
        let c4 = gen_cycle(4);
        for a in Algorithm::ALL {
            let r = run(&c4, a, "c4", &RunOptions::default()).unwrap();
            assert_eq!(r.delta, 2, "{a}");
            assert_eq!(r.schema, 1);
        }
        let opts = RunOptions { at_most: Some(1), ..Default::default() };
        let r = run(&c4, Algorithm::Brute, "c4", &opts).unwrap();
        assert_eq!(r.decision, Some(Decision { at_most: 1, holds: false }));
    }

    #[test]
    fn corpus_is_reproducible() {
        let a = verification_corpus(12, 14, 3);
        let b = verification_corpus(12, 14, 3);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| s.graph.n() <= 14 + 2));
    }

    #[test]
    fn small_verify_passes() {
        let s = verify(10, 12, 1, &RunOptions::default()).unwrap();
        assert!(s.passed(), "{:?}", s.mismatches);
        assert_eq!(s.runs, 50);
    }

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = (1..6).map(|i| (i as f64, (i as f64).powi(3))).collect();
        assert!((log_log_slope(&pts) - 3.0).abs() < 1e-9);
    }
}
