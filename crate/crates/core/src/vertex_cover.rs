//! Hyperbolicity parameterized by vertex cover: twin reduction leaves a
//! kernel of at most `k + 4·2^k` vertices, which is solved exhaustively.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::hyperbolicity::{brute_force_delta, HyperbolicityResult};
use crate::reductions::{rule3_twin_reduce, Reduced};

/// Endpoints of a greedy maximal matching, scanning edges in order.
pub fn approx_vertex_cover_2(g: &Graph) -> Vec<usize> {
    let mut matched = vec![false; g.n()];
    let mut cover = Vec::new();
    for (u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            cover.push(u);
            cover.push(v);
        }
    }
    cover.sort_unstable();
    cover
}

pub fn is_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in cover {
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelReport {
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
    pub bound_ok: bool,
}

impl KernelReport {
    fn new(k: usize, kernel: &Graph) -> Self {
        let pow = 1u128.checked_shl(k as u32).unwrap_or(u128::MAX);
        let vb = (k as u128).saturating_add(pow.saturating_mul(4));
        let eb = (4 * k as u128).saturating_mul(pow);
        KernelReport {
            k,
            vertices: kernel.n(),
            edges: kernel.m(),
            bound_ok: kernel.n() as u128 <= vb && kernel.m() as u128 <= eb,
        }
    }
}

/// Twin reduction, with the kernel size checked against the 2-approximate
/// cover of the input.
pub fn kernelize_vc(g: &Graph) -> (Reduced, KernelReport) {
    let k = approx_vertex_cover_2(g).len();
    let reduced = rule3_twin_reduce(g);
    let report = KernelReport::new(k, reduced.graph());
    (reduced, report)
}

pub fn hyperbolicity_vc(g: &Graph) -> Result<HyperbolicityResult> {
    Ok(hyperbolicity_vc_with(g)?.0)
}

pub fn hyperbolicity_vc_with(g: &Graph) -> Result<(HyperbolicityResult, Reduced, KernelReport)> {
    let (reduced, report) = kernelize_vc(g);
    let r = brute_force_delta(reduced.graph())?.map_vertices(|v| reduced.subgraph.original(v));
    Ok((r, reduced, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        Graph::from_edges(a + b, &edges).unwrap()
    }

    #[test]
    fn approx_cover_examples() {
        let star = complete_bipartite(1, 5);
        let w = approx_vertex_cover_2(&star);
        assert!(w.len() <= 2 && is_vertex_cover(&star, &w));
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let w = approx_vertex_cover_2(&c4);
        assert!(w.len() <= 4 && is_vertex_cover(&c4, &w));
        assert!(approx_vertex_cover_2(&Graph::empty(5)).is_empty());
    }

    #[test]
    fn kernel_examples() {
        let (r, rep) = kernelize_vc(&complete_bipartite(1, 100));
        assert_eq!(r.graph().n(), 5);
        assert!(rep.bound_ok);
        let (r, rep) = kernelize_vc(&complete_bipartite(5, 5));
        assert_eq!(r.graph(), &complete_bipartite(4, 4));
        assert!(rep.bound_ok && rep.k == 10);
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(kernelize_vc(&c4).0.graph(), &c4);
    }

    #[test]
    fn delta_examples() {
        let k55 = complete_bipartite(5, 5);
        assert_eq!(hyperbolicity_vc(&k55).unwrap().delta, brute_force_delta(&k55).unwrap().delta);
        assert_eq!(hyperbolicity_vc(&complete_bipartite(1, 100)).unwrap().delta, 0);
        let r = hyperbolicity_vc(&k55).unwrap();
        assert!(r.is_consistent(&k55));
    }
}
