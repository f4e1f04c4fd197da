use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, INFINITY};

/// Entry of a [`TypeVector`] for a deletion-set vertex not reachable from
/// the component.
pub const TYPE_INF: u8 = u8::MAX;

/// Distances from a vertex to each deletion-set vertex `x_i` measured inside
/// its own component of `G - X` plus `x_i`. Entries are 1, 2, 3 or
/// [`TYPE_INF`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TypeVector(pub Vec<u8>);

impl TypeVector {
    pub fn get(&self, i: usize) -> Option<u32> {
        match self.0[i] {
            TYPE_INF => None,
            d => Some(d as u32),
        }
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Type vector of every vertex outside `x` (`None` for members of `x`),
/// by one BFS from each `x_i` in `G - (X \ {x_i})`.
pub fn compute_type_vectors(g: &Graph, x: &[usize]) -> Result<Vec<Option<TypeVector>>> {
    for &v in x {
        g.check_vertex(v)?;
    }
    let mut in_x = vec![false; g.n()];
    for &v in x {
        in_x[v] = true;
    }
    let mut out: Vec<Option<TypeVector>> =
        (0..g.n()).map(|v| (!in_x[v]).then(|| TypeVector(Vec::with_capacity(x.len())))).collect();
    for &xi in x {
        let mut keep = in_x.iter().map(|&b| !b).collect::<Vec<_>>();
        keep[xi] = true;
        let sub = g.induced_by_mask(&keep);
        let src = sub.to_original.iter().position(|&v| v == xi).expect("x_i is kept");
        let row = sub.graph.bfs(src);
        let mut entry = vec![TYPE_INF; g.n()];
        for (i, &v) in sub.to_original.iter().enumerate() {
            let d = row.raw(i);
            if d != INFINITY {
                debug_assert!(v == xi || d <= 3, "cograph components have diameter at most two");
                entry[v] = d.min(TYPE_INF as u32 - 1) as u8;
            }
        }
        for (v, t) in out.iter_mut().enumerate() {
            if let Some(t) = t {
                t.0.push(entry[v]);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p5_with_middle_removed() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let t = compute_type_vectors(&g, &[2]).unwrap();
        assert_eq!(t[2], None);
        assert_eq!(t[1], Some(TypeVector(vec![1])));
        assert_eq!(t[3], Some(TypeVector(vec![1])));
        assert_eq!(t[0], Some(TypeVector(vec![2])));
        assert_eq!(t[4], Some(TypeVector(vec![2])));
    }

    #[test]
    fn unreachable_entry() {
        // Triangle 0-1-2 with x = 3 attached to 0 only, and 4 isolated.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        let t = compute_type_vectors(&g, &[3]).unwrap();
        assert_eq!(t[0].as_ref().unwrap().0, vec![1]);
        assert_eq!(t[1].as_ref().unwrap().0, vec![2]);
        assert_eq!(t[4].as_ref().unwrap().get(0), None);
    }

    #[test]
    fn paths_through_other_deletion_vertices_do_not_count() {
        // 0 - x1 - x2 - 1: entry for x2 at 0 must be infinite.
        let g = Graph::from_edges(4, &[(0, 2), (2, 3), (3, 1)]).unwrap();
        let t = compute_type_vectors(&g, &[2, 3]).unwrap();
        assert_eq!(t[0].as_ref().unwrap().0, vec![1, TYPE_INF]);
        assert_eq!(t[1].as_ref().unwrap().0, vec![TYPE_INF, 1]);
    }
}
