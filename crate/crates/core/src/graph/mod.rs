//! Immutable undirected simple graphs in compressed adjacency form.
//!
//! Vertex ids are dense integers in `[0, n)`. Every transform that removes
//! vertices returns a [`Subgraph`] carrying the map back to the ids of the
//! graph it was cut from, so reduction pipelines can report original ids.

mod distance;
pub mod io;

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use distance::{DistanceMatrix, DistanceRow, INFINITY};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
}

/// A graph obtained by deleting vertices, together with the original id of
/// every surviving vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub to_original: Vec<usize>,
}

impl Subgraph {
    pub fn original(&self, v: usize) -> usize {
        self.to_original[v]
    }

    /// Compose with a subgraph cut from `self.graph`.
    pub fn then(&self, inner: Subgraph) -> Subgraph {
        let to_original = inner.to_original.iter().map(|&v| self.to_original[v]).collect();
        Subgraph { graph: inner.graph, to_original }
    }

    pub fn identity(graph: Graph) -> Subgraph {
        let to_original = (0..graph.n()).collect();
        Subgraph { graph, to_original }
    }
}

impl Graph {
    /// Build a canonical graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { id: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { id: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// Adjacency lists must already be symmetric and loop-free; they are
    /// sorted and deduplicated here.
    pub(crate) fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Graph {
        let mut offsets = Vec::with_capacity(adj.len() + 1);
        let mut neighbors = Vec::new();
        offsets.push(0);
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            neighbors.extend_from_slice(list);
            offsets.push(neighbors.len());
        }
        Graph { offsets, neighbors }
    }

    pub fn empty(n: usize) -> Graph {
        Graph { offsets: vec![0; n + 1], neighbors: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u).iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Vertices of degree at least three, ascending.
    pub fn high_degree_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) >= 3).collect()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { id: v, n: self.n() })
        }
    }

    pub fn bfs_distances(&self, source: usize) -> Result<DistanceRow> {
        self.check_vertex(source)?;
        Ok(self.bfs(source))
    }

    pub(crate) fn bfs(&self, source: usize) -> DistanceRow {
        let mut dist = vec![INFINITY; self.n()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in self.neighbors(u) {
                if dist[w] == INFINITY {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        DistanceRow::new(source, dist)
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let (comp, count) = self.component_labels();
        let mut out = vec![Vec::new(); count];
        for v in 0..self.n() {
            out[comp[v]].push(v);
        }
        out
    }

    /// Component index of each vertex; components are numbered by smallest vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = count;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    /// The induced subgraph on `keep` (any order; duplicates ignored).
    /// New ids follow ascending original id.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Subgraph {
        let mut mask = vec![false; self.n()];
        for &v in keep {
            mask[v] = true;
        }
        self.induced_by_mask(&mask)
    }

    pub fn delete_vertices(&self, remove: &[usize]) -> Result<Subgraph> {
        let mut mask = vec![true; self.n()];
        for &v in remove {
            self.check_vertex(v)?;
            mask[v] = false;
        }
        Ok(self.induced_by_mask(&mask))
    }

    pub(crate) fn induced_by_mask(&self, keep: &[bool]) -> Subgraph {
        let mut new_id = vec![usize::MAX; self.n()];
        let mut to_original = Vec::new();
        for v in 0..self.n() {
            if keep[v] {
                new_id[v] = to_original.len();
                to_original.push(v);
            }
        }
        let adj = to_original
            .iter()
            .map(|&v| {
                self.neighbors(v)
                    .iter()
                    .filter(|&&w| keep[w])
                    .map(|&w| new_id[w])
                    .collect()
            })
            .collect();
        Subgraph { graph: Graph::from_adjacency(adj), to_original }
    }

    /// Relabel vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for v in 0..self.n() {
            adj[perm[v]] = self.neighbors(v).iter().map(|&w| perm[w]).collect();
        }
        Graph::from_adjacency(adj)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj: Vec<Vec<usize>> = (0..self.n()).map(|v| self.neighbors(v).to_vec()).collect();
        adj.extend((0..other.n()).map(|v| other.neighbors(v).iter().map(|&w| w + shift).collect()));
        Graph::from_adjacency(adj)
    }

    /// All-pairs distances by one BFS per vertex. Fails when `n²` exceeds `max_cells`.
    pub fn distance_matrix(&self, max_cells: usize) -> Result<DistanceMatrix> {
        DistanceMatrix::from_graph(self, max_cells)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn build_path_and_collapse_duplicates() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((p3.n(), p3.m()), (3, 2));
        assert_eq!(p3.degree(1), 2);

        let e = Graph::from_edges(2, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(e.m(), 1);

        let g = c4();
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.high_degree_vertices().is_empty());
    }

    #[test]
    fn build_rejects_bad_ids() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { id: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(c4().bfs_distances(0).unwrap().to_options(), vec![Some(0), Some(1), Some(2), Some(1)]);
        let two = Graph::empty(2);
        assert_eq!(two.bfs_distances(0).unwrap().to_options(), vec![Some(0), None]);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.bfs_distances(1).unwrap().to_options(), vec![Some(1), Some(0), Some(2), Some(2)]);
        assert!(star.bfs_distances(4).is_err());
    }

    #[test]
    fn degrees_of_k4() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!((0..4).all(|v| k4.degree(v) == 3));
        assert_eq!(k4.high_degree_vertices(), vec![0, 1, 2, 3]);
        let two = k4.delete_vertices(&[0, 2]).unwrap();
        assert_eq!((two.graph.n(), two.graph.m()), (2, 1));
        assert_eq!(two.to_original, vec![1, 3]);
    }

    #[test]
    fn delete_vertices_examples() {
        let p = c4().delete_vertices(&[0]).unwrap();
        assert_eq!(p.graph.edge_list(), vec![(0, 1), (1, 2)]);
        assert_eq!(p.to_original, vec![1, 2, 3]);
        let same = c4().delete_vertices(&[]).unwrap();
        assert_eq!(same.graph, c4());
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(5, &[(0, 3), (1, 4)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 3], vec![1, 4], vec![2]]);
    }
}
