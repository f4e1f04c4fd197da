//! Hyperbolicity through a cover by maximal paths: each quadruple is placed
//! on at most four cover paths and the best positions per placement are
//! found by small integer programs (or by enumeration when the paths are
//! short).

mod cycle;
mod model;

use std::sync::atomic::{AtomicI64, AtomicUsize, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Subgraph};
use crate::hyperbolicity::{brute_force_delta, HyperbolicityResult};
use crate::ilp::Exact;
use crate::reductions::{
    enumerate_maximal_paths, feedback_edge_set, greedy_path_cover, rule1_prune_degree_one,
    rule2_prune_parallel_paths, strip_trivial_components, ReductionTrace,
};

pub use cycle::{cycle_hyperbolicity, cycle_hyperbolicity_with, DEFAULT_CYCLE_CAP};
pub use model::{
    assignment_optimum_ilp, build_case_ilps, canonical_assignments, endpoint_distance_table, positions_to_vertices,
    CaseIlp, EndpointDistanceTable, PathAssignment, LABELS, PAIRS,
};
use model::{solve_placement_ilp, Placement};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineOptions {
    /// Placements with at most this many position vectors are enumerated
    /// instead of solved as integer programs. Zero forces the programs.
    pub enumeration_limit: u64,
    pub cycle_cap: usize,
    /// Keep every case model that was solved.
    pub dump_ilp: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions { enumeration_limit: 1 << 14, cycle_cap: DEFAULT_CYCLE_CAP, dump_ilp: false }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineStats {
    /// Total cover size over all components.
    pub cover_size: usize,
    /// Maximal paths after pruning (outside isolated cycles).
    pub maximal_paths: usize,
    pub isolated_cycles: Vec<usize>,
    pub assignments: usize,
    pub enumerated: usize,
    pub ilp_placements: usize,
    pub lp_nodes: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineReport {
    pub result: HyperbolicityResult,
    pub stats: EngineStats,
    pub traces: Vec<ReductionTrace>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub models: Vec<CaseIlp>,
}

pub fn hyperbolicity_via_path_cover(g: &Graph) -> HyperbolicityResult {
    hyperbolicity_via_path_cover_with(g, &EngineOptions::default()).result
}

/// Degree-one pruning, isolated cycles in closed form, then the path
/// engine on every remaining component.
pub fn hyperbolicity_via_path_cover_with(g: &Graph, opts: &EngineOptions) -> EngineReport {
    let r1 = rule1_prune_degree_one(g);
    let mut report = run_pruned(&r1.subgraph, opts);
    report.traces.insert(0, r1.trace);
    report.result = revalidate(g, report.result);
    report
}

pub fn hyperbolicity_feedback_edge(g: &Graph) -> HyperbolicityResult {
    hyperbolicity_feedback_edge_with(g, &EngineOptions::default()).0
}

/// As the path-cover engine; also reports the feedback edge number, which
/// bounds the number of maximal paths by seven times itself.
pub fn hyperbolicity_feedback_edge_with(g: &Graph, opts: &EngineOptions) -> (HyperbolicityResult, EngineReport, usize) {
    let k = feedback_edge_set(g).len();
    let report = hyperbolicity_via_path_cover_with(g, opts);
    (report.result.clone(), report, k)
}

pub fn hyperbolicity_degree3(g: &Graph) -> HyperbolicityResult {
    hyperbolicity_degree3_with(g, &EngineOptions::default()).result
}

/// Degree-one pruning and parallel-path pruning, then the path engine.
pub fn hyperbolicity_degree3_with(g: &Graph, opts: &EngineOptions) -> EngineReport {
    let r1 = rule1_prune_degree_one(g);
    let r2 = rule2_prune_parallel_paths(r1.graph());
    let sub = r1.subgraph.then(r2.subgraph.clone());
    let mut report = run_pruned(&sub, opts);
    let t2 = r2.trace.mapped(|v| r1.subgraph.original(v));
    report.traces.splice(0..0, [r1.trace, t2]);
    report.result = revalidate(g, report.result);
    report
}

fn revalidate(g: &Graph, r: HyperbolicityResult) -> HyperbolicityResult {
    match r.witness {
        Some(w) if r.delta > 0 => {
            let fresh = HyperbolicityResult::from_quadruple(g, w.vertices).expect("witness lies in one component");
            assert_eq!(fresh.delta, r.delta, "witness does not reproduce delta");
            fresh
        }
        _ => HyperbolicityResult::zero(),
    }
}

/// `sub` has had degree-one pruning applied; ids of the result are in the
/// graph `sub` was taken from.
fn run_pruned(sub: &Subgraph, opts: &EngineOptions) -> EngineReport {
    let h = &sub.graph;
    let mut stats = EngineStats::default();
    let mut models = Vec::new();
    if h.n() <= 4 || (0..h.n()).any(|v| h.degree(v) == 1) {
        let r = brute_force_delta(h).expect("tiny graph").map_vertices(|v| sub.original(v));
        return EngineReport { result: r, stats, traces: Vec::new(), models };
    }
    let (rest, cycles) = strip_trivial_components(h);
    let mut result = HyperbolicityResult::zero();
    for c in &cycles {
        stats.isolated_cycles.push(c.len());
        let (delta, quad) = cycle_hyperbolicity_with(c.len(), opts.cycle_cap);
        if let Some(q) = quad {
            let r = HyperbolicityResult::from_quadruple(h, q.map(|i| c[i])).expect("cycle quadruple");
            debug_assert_eq!(r.delta, delta);
            result = result.better_of(r.map_vertices(|v| sub.original(v)));
        }
    }
    let to_sub = |v: usize| sub.original(rest.original(v));
    for comp in rest.graph.connected_components() {
        let part = rest.graph.induced_subgraph(&comp);
        if let Some((delta, quad)) = engine_component(&part.graph, opts, &mut stats, &mut models) {
            let r = HyperbolicityResult::from_quadruple(&part.graph, quad).expect("component quadruple");
            debug_assert_eq!(r.delta, delta);
            result = result.better_of(r.map_vertices(|v| to_sub(part.original(v))));
        }
    }
    EngineReport { result, stats, traces: Vec::new(), models }
}

/// Connected, minimum degree two, not a cycle.
fn engine_component(
    g: &Graph,
    opts: &EngineOptions,
    stats: &mut EngineStats,
    models: &mut Vec<CaseIlp>,
) -> Option<(u64, [usize; 4])> {
    stats.maximal_paths += enumerate_maximal_paths(g).map(|p| p.len()).unwrap_or(0);
    let cover = greedy_path_cover(g).expect("component has minimum degree two and is not a cycle");
    stats.cover_size += cover.len();
    let table = endpoint_distance_table(g, &cover);
    let assigns = canonical_assignments(cover.len());
    stats.assignments += assigns.len();

    let enumerated = AtomicUsize::new(0);
    let ilp_placements = AtomicUsize::new(0);
    let nodes = AtomicUsize::new(0);
    let dump = Mutex::new(Vec::new());

    let solve = |pl: &Placement, floor: i64, record: bool| -> Option<(u64, [i64; 4])> {
        if pl.position_count() <= opts.enumeration_limit {
            enumerated.fetch_add(1, Ordering::Relaxed);
            return pl.enumerate(floor);
        }
        ilp_placements.fetch_add(1, Ordering::Relaxed);
        let seed = pl.seed(floor);
        let f = seed.map_or(floor, |s| s.0 as i64);
        let mut local = Vec::new();
        let mut n = 0;
        let keep = (record && opts.dump_ilp).then_some(&mut local);
        let found = solve_placement_ilp::<Exact>(pl, f, keep, &mut n);
        nodes.fetch_add(n, Ordering::Relaxed);
        if !local.is_empty() {
            dump.lock().unwrap().extend(local);
        }
        found.or(seed)
    };

    // First pass: the optimum value, with a shared incumbent.
    let best = AtomicI64::new(-1);
    assigns.par_iter().for_each(|a| {
        let pl = Placement::new(&cover, &table, *a);
        let floor = best.load(Ordering::Relaxed);
        if pl.delta_upper_bound() <= floor {
            return;
        }
        if let Some((d, _)) = solve(&pl, floor, true) {
            best.fetch_max(d as i64, Ordering::Relaxed);
        }
    });
    let target = best.load(Ordering::Relaxed);

    stats.enumerated += enumerated.load(Ordering::Relaxed);
    stats.ilp_placements += ilp_placements.load(Ordering::Relaxed);
    stats.lp_nodes += nodes.load(Ordering::Relaxed);
    models.extend(std::mem::take(&mut *dump.lock().unwrap()));
    if target <= 0 {
        return None;
    }

    // Second pass: the first assignment attaining it, for a witness that
    // does not depend on scheduling.
    assigns.par_iter().find_map_first(|a| {
        let pl = Placement::new(&cover, &table, *a);
        if pl.delta_upper_bound() < target {
            return None;
        }
        solve(&pl, target - 1, false).map(|(d, pos)| (d, positions_to_vertices(&cover, a, &pos)))
    })
}
