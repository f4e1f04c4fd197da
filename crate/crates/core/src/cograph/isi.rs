//! Colored induced subgraph isomorphism on cographs by dynamic programming
//! over the cotree: per node, the pattern subsets embeddable into its leaves.

use serde::{Deserialize, Serialize};

use super::cotree::Cotree;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_PATTERN_CAP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredPattern {
    pub graph: Graph,
    pub colors: Vec<u32>,
}

struct Dp<'a> {
    host_colors: &'a [u32],
    pattern_colors: &'a [u32],
    /// Union of neighborhoods of a pattern subset.
    any_nbr: Vec<u32>,
    /// Intersection of neighborhoods of a pattern subset (all for the empty set).
    all_nbr: Vec<u32>,
    seen: Vec<bool>,
}

enum Node {
    Leaf { vertex: usize },
    Inner { join: bool, children: Vec<Solved>, prefixes: Vec<Vec<u32>> },
}

struct Solved {
    node: Node,
    /// Sorted achievable subsets.
    table: Vec<u32>,
}

impl Dp<'_> {
    fn compatible(&self, join: bool, x1: u32, x2: u32) -> bool {
        x1 & x2 == 0
            && if join { x2 & !self.all_nbr[x1 as usize] == 0 } else { self.any_nbr[x1 as usize] & x2 == 0 }
    }

    fn combine(&mut self, join: bool, acc: &[u32], child: &[u32]) -> Vec<u32> {
        let mut out = Vec::new();
        for &x1 in acc {
            for &x2 in child {
                if self.compatible(join, x1, x2) {
                    let x = (x1 | x2) as usize;
                    if !self.seen[x] {
                        self.seen[x] = true;
                        out.push(x1 | x2);
                    }
                }
            }
        }
        for &x in &out {
            self.seen[x as usize] = false;
        }
        out.sort_unstable();
        out
    }

    fn solve(&mut self, t: &Cotree) -> Solved {
        match t {
            Cotree::Leaf { vertex } => {
                let c = self.host_colors[*vertex];
                let mut table = vec![0];
                table.extend((0..self.pattern_colors.len()).filter(|&h| self.pattern_colors[h] == c).map(|h| 1u32 << h));
                Solved { node: Node::Leaf { vertex: *vertex }, table }
            }
            Cotree::Union { children } | Cotree::Join { children } => {
                let join = matches!(t, Cotree::Join { .. });
                let solved: Vec<Solved> = children.iter().map(|c| self.solve(c)).collect();
                let mut prefixes: Vec<Vec<u32>> = Vec::with_capacity(solved.len());
                let mut acc = vec![0u32];
                for s in &solved {
                    acc = self.combine(join, &acc, &s.table);
                    prefixes.push(acc.clone());
                }
                Solved { node: Node::Inner { join, children: solved, prefixes }, table: acc }
            }
        }
    }

    fn extract(&self, s: &Solved, x: u32, map: &mut [usize]) {
        match &s.node {
            Node::Leaf { vertex } => {
                if x != 0 {
                    map[x.trailing_zeros() as usize] = *vertex;
                }
            }
            Node::Inner { join, children, prefixes } => {
                let mut cur = x;
                for i in (1..children.len()).rev() {
                    let x2 = children[i]
                        .table
                        .iter()
                        .copied()
                        .find(|&x2| {
                            x2 & !cur == 0
                                && prefixes[i - 1].binary_search(&(cur ^ x2)).is_ok()
                                && self.compatible(*join, cur ^ x2, x2)
                        })
                        .expect("subset was recorded as achievable");
                    self.extract(&children[i], x2, map);
                    cur ^= x2;
                }
                self.extract(&children[0], cur, map);
            }
        }
    }
}

/// Color-preserving induced embedding of `pattern` into the cograph `host`
/// (given by its cotree), as the host vertex of each pattern vertex.
pub fn colored_isi(
    host: &Graph,
    cotree: &Cotree,
    host_colors: &[u32],
    pattern: &ColoredPattern,
) -> Result<Option<Vec<usize>>> {
    colored_isi_with_cap(host, cotree, host_colors, pattern, DEFAULT_PATTERN_CAP)
}

pub fn colored_isi_with_cap(
    host: &Graph,
    cotree: &Cotree,
    host_colors: &[u32],
    pattern: &ColoredPattern,
    cap: usize,
) -> Result<Option<Vec<usize>>> {
    let p = pattern.graph.n();
    if p > cap || p > 16 {
        return Err(Error::PatternTooLarge { size: p, cap: cap.min(16) });
    }
    assert_eq!(host_colors.len(), host.n(), "one color per host vertex");
    if p == 0 {
        return Ok(Some(Vec::new()));
    }
    if host.n() == 0 {
        return Ok(None);
    }
    let full = (1u32 << p) - 1;
    let nbr: Vec<u32> =
        (0..p).map(|h| pattern.graph.neighbors(h).iter().fold(0u32, |acc, &w| acc | (1 << w))).collect();
    let mut any_nbr = vec![0u32; 1 << p];
    let mut all_nbr = vec![full; 1 << p];
    for x in 1..(1usize << p) {
        let h = x.trailing_zeros() as usize;
        let rest = x & (x - 1);
        any_nbr[x] = any_nbr[rest] | nbr[h];
        all_nbr[x] = all_nbr[rest] & nbr[h];
    }
    let mut dp =
        Dp { host_colors, pattern_colors: &pattern.colors, any_nbr, all_nbr, seen: vec![false; 1 << p] };
    let root = dp.solve(cotree);
    if root.table.binary_search(&full).is_err() {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; p];
    dp.extract(&root, full, &mut map);
    Ok(Some(map))
}

/// Whether `map` is a color-preserving induced embedding.
pub fn is_colored_embedding(host: &Graph, host_colors: &[u32], pattern: &ColoredPattern, map: &[usize]) -> bool {
    let p = pattern.graph.n();
    map.len() == p
        && (0..p).all(|i| map[i] < host.n() && host_colors[map[i]] == pattern.colors[i])
        && (0..p).all(|i| {
            (i + 1..p).all(|j| map[i] != map[j] && host.has_edge(map[i], map[j]) == pattern.graph.has_edge(i, j))
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cograph::{cograph_recognize, Recognition};

    fn cotree(g: &Graph) -> Cotree {
        match cograph_recognize(g) {
            Recognition::Cograph(t) => t,
            Recognition::NotCograph(_) => panic!("host must be a cograph"),
        }
    }

    fn pattern(n: usize, edges: &[(usize, usize)], colors: &[u32]) -> ColoredPattern {
        ColoredPattern { graph: Graph::from_edges(n, edges).unwrap(), colors: colors.to_vec() }
    }

    #[test]
    fn single_vertex() {
        let host = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let colors = [0, 1, 2];
        let r = colored_isi(&host, &cotree(&host), &colors, &pattern(1, &[], &[2])).unwrap();
        assert_eq!(r, Some(vec![2]));
        assert_eq!(colored_isi(&host, &cotree(&host), &colors, &pattern(1, &[], &[7])).unwrap(), None);
    }

    #[test]
    fn p4_never_embeds() {
        let host = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let p4 = pattern(4, &[(0, 1), (1, 2), (2, 3)], &[0; 4]);
        assert_eq!(colored_isi(&host, &cotree(&host), &[0; 4], &p4).unwrap(), None);
    }

    #[test]
    fn edge_versus_non_edge() {
        let edge = pattern(2, &[(0, 1)], &[5, 5]);
        let apart = Graph::empty(2);
        assert_eq!(colored_isi(&apart, &cotree(&apart), &[5, 5], &edge).unwrap(), None);
        let joined = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let m = colored_isi(&joined, &cotree(&joined), &[5, 5], &edge).unwrap().unwrap();
        assert!(is_colored_embedding(&joined, &[5, 5], &edge, &m));
    }

    #[test]
    fn refuses_large_patterns() {
        let host = Graph::empty(1);
        let big = pattern(11, &[], &[0; 11]);
        assert_eq!(
            colored_isi(&host, &cotree(&host), &[0], &big),
            Err(Error::PatternTooLarge { size: 11, cap: 10 })
        );
    }
}
