//! Data reduction rules and the path structure they expose.
//!
//! Every rule is a pure graph-to-graph transform returning the reduced
//! [`Subgraph`] plus a [`ReductionTrace`] whose removed ids refer to the
//! input graph.

mod paths;
mod twins;

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, Subgraph};

pub use paths::{
    enumerate_maximal_paths, feedback_edge_set, greedy_path_cover, isolated_cycles, MaximalPath, PathCover,
};
pub use twins::twin_partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    DegreeOne,
    ParallelPaths,
    Twins,
}

impl Rule {
    pub fn number(self) -> u8 {
        match self {
            Rule::DegreeOne => 1,
            Rule::ParallelPaths => 2,
            Rule::Twins => 3,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub removed: Vec<usize>,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub rule: Rule,
    pub removed: Vec<usize>,
    pub steps: Vec<TraceStep>,
}

impl ReductionTrace {
    fn new(rule: Rule) -> Self {
        ReductionTrace { rule, removed: Vec::new(), steps: Vec::new() }
    }

    fn push(&mut self, removed: Vec<usize>, reason: String) {
        self.removed.extend_from_slice(&removed);
        self.steps.push(TraceStep { removed, reason });
    }

    /// Re-express removed ids through `map` (e.g. into original ids).
    pub fn mapped(&self, map: impl Fn(usize) -> usize) -> ReductionTrace {
        ReductionTrace {
            rule: self.rule,
            removed: self.removed.iter().map(|&v| map(v)).collect(),
            steps: self
                .steps
                .iter()
                .map(|s| TraceStep { removed: s.removed.iter().map(|&v| map(v)).collect(), reason: s.reason.clone() })
                .collect(),
        }
    }

    /// Apply the trace to the graph it was recorded on.
    pub fn replay(&self, g: &Graph) -> Subgraph {
        g.delete_vertices(&self.removed).expect("trace ids belong to the graph")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduced {
    pub subgraph: Subgraph,
    pub trace: ReductionTrace,
}

impl Reduced {
    pub fn graph(&self) -> &Graph {
        &self.subgraph.graph
    }

    fn finish(g: &Graph, removed_mask: &[bool], trace: ReductionTrace) -> Reduced {
        let keep: Vec<bool> = removed_mask.iter().map(|&r| !r).collect();
        Reduced { subgraph: g.induced_by_mask(&keep), trace }
    }
}

/// Remove degree-one vertices while more than four vertices remain.
/// Worklist driven, `O(n + m)`; candidates are processed in ascending id order.
pub fn rule1_prune_degree_one(g: &Graph) -> Reduced {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut alive = n;
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut trace = ReductionTrace::new(Rule::DegreeOne);

    while alive > 4 {
        let Some(v) = queue.pop_front() else { break };
        if removed[v] || deg[v] != 1 {
            continue;
        }
        let u = *g.neighbors(v).iter().find(|&&u| !removed[u]).expect("degree-one vertex has a live neighbor");
        removed[v] = true;
        alive -= 1;
        deg[v] = 0;
        deg[u] -= 1;
        if deg[u] == 1 {
            queue.push_back(u);
        }
        trace.push(vec![v], format!("degree one, attached to {u}"));
    }
    Reduced::finish(g, &removed, trace)
}

/// Keep at most four members of every class of vertices sharing the same
/// open neighborhood (the four smallest ids).
pub fn rule3_twin_reduce(g: &Graph) -> Reduced {
    let mut removed = vec![false; g.n()];
    let mut trace = ReductionTrace::new(Rule::Twins);
    for class in twin_partition(g) {
        if class.len() > 4 {
            let drop = class[4..].to_vec();
            for &v in &drop {
                removed[v] = true;
            }
            trace.push(drop, format!("twin class of {} with {} members", class[0], class.len()));
        }
    }
    Reduced::finish(g, &removed, trace)
}

/// For every pair of distinct vertices of degree at least three joined by
/// more than nine maximal paths, keep the shortest path, the four longest
/// even-length and the four longest odd-length paths and delete the inner
/// vertices of the rest. Ties prefer the lexicographically smaller inner
/// sequence (oriented from the smaller endpoint).
pub fn rule2_prune_parallel_paths(g: &Graph) -> Reduced {
    let mut removed = vec![false; g.n()];
    let mut trace = ReductionTrace::new(Rule::ParallelPaths);

    for ((u, v), mut group) in parallel_path_groups(g) {
        if group.len() <= 9 {
            continue;
        }
        let mut keep = vec![false; group.len()];
        // Shortest first, then by inner sequence.
        group.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        keep[0] = true;
        let mut order: Vec<usize> = (0..group.len()).collect();
        order.sort_by(|&a, &b| group[b].len().cmp(&group[a].len()).then_with(|| group[a].cmp(&group[b])));
        for parity in 0..2 {
            // Inner vertex count has the opposite parity of the length.
            order.iter().filter(|&&i| (group[i].len() + 1) % 2 == parity).take(4).for_each(|&i| keep[i] = true);
        }
        for (inner, kept) in group.iter().zip(&keep) {
            if !kept {
                for &w in inner {
                    removed[w] = true;
                }
                trace.push(inner.clone(), format!("surplus path of length {} between {u} and {v}", inner.len() + 1));
            }
        }
    }
    Reduced::finish(g, &removed, trace)
}

/// Inner vertex sequences of all maximal paths between pairs of distinct
/// high-degree vertices, keyed by `(u, v)` with `u < v`, oriented from `u`.
pub(crate) fn parallel_path_groups(g: &Graph) -> BTreeMap<(usize, usize), Vec<Vec<usize>>> {
    let mut groups: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    for u in g.high_degree_vertices() {
        for &first in g.neighbors(u) {
            let mut inner = Vec::new();
            let (mut prev, mut cur) = (u, first);
            while g.degree(cur) == 2 && cur != u {
                inner.push(cur);
                let nb = g.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            if cur != u && g.degree(cur) >= 3 && u < cur {
                groups.entry((u, cur)).or_default().push(inner);
            }
        }
    }
    groups
}

/// Drop isolated vertices and isolated-cycle components. Returns the rest
/// and the removed cycles (as vertex sequences of `g`).
pub(crate) fn strip_trivial_components(g: &Graph) -> (Subgraph, Vec<Vec<usize>>) {
    let cycles = isolated_cycles(g);
    let mut keep: Vec<bool> = (0..g.n()).map(|v| g.degree(v) > 0).collect();
    for c in &cycles {
        for &v in c {
            keep[v] = false;
        }
    }
    (g.induced_by_mask(&keep), cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolicity::brute_force_delta;

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..a {
            for j in 0..b {
                edges.push((i, a + j));
            }
        }
        Graph::from_edges(a + b, &edges).unwrap()
    }

    /// `count` parallel paths with the given inner lengths between vertices 0 and 1.
    fn parallel(inner_counts: &[usize]) -> Graph {
        let mut edges = Vec::new();
        let mut next = 2;
        for &k in inner_counts {
            let mut prev = 0;
            for _ in 0..k {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
            edges.push((prev, 1));
        }
        Graph::from_edges(next, &edges).unwrap()
    }

    #[test]
    fn rule1_examples() {
        let r = rule1_prune_degree_one(&star(5));
        assert_eq!(r.graph().n(), 4);
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(rule1_prune_degree_one(&p5).graph().n(), 4);
        let c6 = cycle(6);
        let r = rule1_prune_degree_one(&c6);
        assert_eq!(r.graph(), &c6);
        assert!(r.trace.removed.is_empty());
    }

    #[test]
    fn rule1_trace_replays() {
        let g = Graph::from_edges(9, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (0, 6), (6, 7), (1, 8)]).unwrap();
        let r = rule1_prune_degree_one(&g);
        assert_eq!(r.trace.replay(&g), r.subgraph);
        // Pruning halts at four vertices, leaving 3 hanging off the triangle.
        assert_eq!(r.subgraph.to_original, vec![0, 1, 2, 3]);
        let again = rule1_prune_degree_one(r.graph());
        assert!(again.trace.removed.is_empty());
    }

    #[test]
    fn rule3_examples() {
        let r = rule3_twin_reduce(&star(10));
        assert_eq!((r.graph().n(), r.graph().m()), (5, 4));
        let c4 = cycle(4);
        assert_eq!(rule3_twin_reduce(&c4).graph(), &c4);
        let r = rule3_twin_reduce(&complete_bipartite(5, 5));
        assert_eq!(r.graph(), &complete_bipartite(4, 4));
    }

    #[test]
    fn rule2_twelve_equal_paths_keeps_four() {
        let g = parallel(&[2; 12]);
        let r = rule2_prune_parallel_paths(&g);
        let groups = parallel_path_groups(r.graph());
        assert_eq!(groups.values().map(Vec::len).sum::<usize>(), 4);
        assert_eq!(brute_force_delta(&g).unwrap().delta, brute_force_delta(r.graph()).unwrap().delta);
    }

    #[test]
    fn rule2_mixed_parity_keeps_eight() {
        let g = parallel(&[1, 1, 1, 1, 1, 2, 2, 2, 2, 2]);
        let r = rule2_prune_parallel_paths(&g);
        let groups = parallel_path_groups(r.graph());
        let lens: Vec<usize> = groups.values().flatten().map(|p| p.len() + 1).collect();
        assert_eq!(lens.len(), 8);
        assert_eq!(lens.iter().filter(|&&l| l == 2).count(), 4);
        assert_eq!(brute_force_delta(&g).unwrap().delta, brute_force_delta(r.graph()).unwrap().delta);
    }

    #[test]
    fn rule2_below_threshold_is_identity() {
        let g = parallel(&[1, 3]);
        assert_eq!(rule2_prune_parallel_paths(&g).graph(), &g);
    }

    #[test]
    fn trace_serializes() {
        let r = rule3_twin_reduce(&star(6));
        let json = serde_json::to_value(&r.trace).unwrap();
        assert_eq!(json["rule"], "twins");
        assert_eq!(json["removed"], serde_json::json!([5, 6]));
        assert_eq!(json["steps"].as_array().unwrap().len(), 1);
    }
}
