use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A path whose inner vertices all have degree two in the host graph, with
/// at least one endpoint of degree three or more, extended as far as
/// possible.
///
/// A chain that leaves and re-enters the same high-degree vertex `u` is
/// reported once, as `u` followed by the chain; its far endpoint then has
/// degree two.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MaximalPath {
    pub vertices: Vec<usize>,
}

impl MaximalPath {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 2, "a maximal path has at least two vertices");
        MaximalPath { vertices }
    }

    pub fn first(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.first(), self.last())
    }

    pub fn inner(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Number of edges.
    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Vertex at `pos` edges from the first endpoint.
    pub fn at(&self, pos: usize) -> usize {
        self.vertices[pos]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCover {
    pub paths: Vec<MaximalPath>,
}

impl PathCover {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn covers(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for p in &self.paths {
            for &v in &p.vertices {
                seen[v] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// All maximal paths, each once, oriented from the smaller endpoint, in
/// discovery order (by smaller high-degree endpoint, then first step).
///
/// Requires no degree-one vertices and no isolated cycles; isolated
/// vertices are ignored.
pub fn enumerate_maximal_paths(g: &Graph) -> Result<Vec<MaximalPath>> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 1) {
        return Err(Error::DegreeOneVertex(v));
    }
    if let Some(c) = isolated_cycles(g).first() {
        return Err(Error::IsolatedCycle(c[0]));
    }
    let mut out = Vec::new();
    for u in g.high_degree_vertices() {
        for &first in g.neighbors(u) {
            let mut seq = vec![u];
            let (mut prev, mut cur) = (u, first);
            while g.degree(cur) == 2 && cur != u {
                seq.push(cur);
                let nb = g.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            if cur == u {
                // Chain returning to u: keep the orientation whose first step is smaller.
                if seq[1] < *seq.last().unwrap() {
                    if *seq.last().unwrap() < u {
                        seq.reverse();
                    }
                    out.push(MaximalPath::new(seq));
                }
            } else if u < cur {
                seq.push(cur);
                out.push(MaximalPath::new(seq));
            }
        }
    }
    Ok(out)
}

/// Two-phase greedy cover by maximal paths: first every degree-two vertex
/// takes the path through it, then each still uncovered high-degree vertex
/// takes an incident path, preferring one whose other end is uncovered.
/// At most twice the optimum.
pub fn greedy_path_cover(g: &Graph) -> Result<PathCover> {
    if (0..g.n()).any(|v| g.degree(v) < 2) {
        return Err(Error::NotCoverable);
    }
    let paths = enumerate_maximal_paths(g)?;
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, p) in paths.iter().enumerate() {
        for &v in &p.vertices {
            incident[v].push(i);
        }
    }
    let mut covered = vec![false; g.n()];
    let mut chosen = Vec::new();
    let take = |i: usize, covered: &mut Vec<bool>, chosen: &mut Vec<usize>| {
        for &v in &paths[i].vertices {
            covered[v] = true;
        }
        chosen.push(i);
    };

    for v in (0..g.n()).filter(|&v| g.degree(v) == 2) {
        if !covered[v] {
            take(incident[v][0], &mut covered, &mut chosen);
        }
    }
    for v in (0..g.n()).filter(|&v| g.degree(v) >= 3) {
        if covered[v] {
            continue;
        }
        let pick = incident[v]
            .iter()
            .copied()
            .find(|&i| {
                let (a, b) = paths[i].endpoints();
                let other = if a == v { b } else { a };
                !covered[other]
            })
            .unwrap_or(incident[v][0]);
        take(pick, &mut covered, &mut chosen);
    }
    Ok(PathCover { paths: chosen.into_iter().map(|i| paths[i].clone()).collect() })
}

/// Edges outside a spanning forest built by scanning edges in lexicographic
/// order; `m - n + (#components)` of them.
pub fn feedback_edge_set(g: &Graph) -> Vec<(usize, usize)> {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            out.push((u, v));
        } else {
            parent[ru] = rv;
        }
    }
    out
}

/// Components in which every vertex has degree exactly two, each listed in
/// cycle order starting at its smallest vertex towards the smaller neighbor.
pub fn isolated_cycles(g: &Graph) -> Vec<Vec<usize>> {
    g.connected_components()
        .into_iter()
        .filter(|c| c.iter().all(|&v| g.degree(v) == 2))
        .map(|c| {
            let start = c[0];
            let mut seq = vec![start];
            let (mut prev, mut cur) = (start, g.neighbors(start)[0]);
            while cur != start {
                seq.push(cur);
                let nb = g.neighbors(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
            }
            seq
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    /// Vertices 0 and 1 joined by paths with 1, 2 and 3 inner vertices.
    fn theta234() -> Graph {
        Graph::from_edges(7, &[(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 1)]).unwrap()
    }

    #[test]
    fn theta_has_three_paths() {
        let paths = enumerate_maximal_paths(&theta234()).unwrap();
        let mut lens: Vec<usize> = paths.iter().map(MaximalPath::length).collect();
        lens.sort();
        assert_eq!(lens, vec![2, 3, 3]);
        assert!(paths.iter().all(|p| p.endpoints() == (0, 1)));
    }

    #[test]
    fn k4_paths_are_edges() {
        let paths = enumerate_maximal_paths(&k4()).unwrap();
        assert_eq!(paths.len(), 6);
        assert!(paths.iter().all(|p| p.length() == 1));
    }

    #[test]
    fn c5_with_chord() {
        let mut edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        edges.push((0, 2));
        let g = Graph::from_edges(5, &edges).unwrap();
        let paths = enumerate_maximal_paths(&g).unwrap();
        let mut lens: Vec<usize> = paths.iter().map(MaximalPath::length).collect();
        lens.sort();
        assert_eq!(lens, vec![1, 2, 3]);
    }

    #[test]
    fn pendant_cycle_is_one_path() {
        // K4 on 0..4 with a triangle 0-4-5 hanging off vertex 0.
        let g = Graph::from_edges(
            6,
            &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 0)],
        )
        .unwrap();
        let paths = enumerate_maximal_paths(&g).unwrap();
        let pendant: Vec<_> = paths.iter().filter(|p| p.contains(4)).collect();
        assert_eq!(pendant.len(), 1);
        assert_eq!(pendant[0].vertices, vec![0, 4, 5]);
    }

    #[test]
    fn enumerate_preconditions() {
        assert_eq!(enumerate_maximal_paths(&cycle(5)), Err(Error::IsolatedCycle(0)));
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(enumerate_maximal_paths(&p), Err(Error::DegreeOneVertex(0)));
    }

    #[test]
    fn greedy_cover_examples() {
        let t = theta234();
        let cover = greedy_path_cover(&t).unwrap();
        assert!(cover.covers(&t));
        assert!(cover.len() <= 3);

        let cover = greedy_path_cover(&k4()).unwrap();
        assert!(cover.covers(&k4()));
        assert!(cover.len() <= 4);

        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::from_edges(6, &edges).unwrap();
        let cover = greedy_path_cover(&g).unwrap();
        assert_eq!(cover.len(), 2);
        assert!(cover.covers(&g));
    }

    #[test]
    fn feedback_edges() {
        let tree = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(feedback_edge_set(&tree).is_empty());
        assert_eq!(feedback_edge_set(&cycle(5)).len(), 1);
        assert_eq!(feedback_edge_set(&k4()).len(), 3);
    }

    #[test]
    fn isolated_cycle_detection() {
        assert_eq!(isolated_cycles(&cycle(7)), vec![vec![0, 1, 2, 3, 4, 5, 6]]);
        assert!(isolated_cycles(&theta234()).is_empty());
        let g = cycle(4).disjoint_union(&k4());
        assert_eq!(isolated_cycles(&g), vec![vec![0, 1, 2, 3]]);
    }
}
