use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// Union/join decomposition of a cograph. Children of a union are
/// connected, children of a join are co-connected, so labels alternate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "label", rename_all = "lowercase")]
pub enum Cotree {
    Leaf { vertex: usize },
    Union { children: Vec<Cotree> },
    Join { children: Vec<Cotree> },
}

impl Cotree {
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Cotree::Leaf { vertex } => out.push(*vertex),
            Cotree::Union { children } | Cotree::Join { children } => {
                for c in children {
                    c.collect_leaves(out);
                }
            }
        }
    }

    /// Whether the lowest common ancestor of two distinct leaves is a join.
    pub fn adjacent(&self, u: usize, v: usize) -> Option<bool> {
        match self {
            Cotree::Leaf { .. } => None,
            Cotree::Union { children } | Cotree::Join { children } => {
                let pos = |x: usize| children.iter().position(|c| c.leaves().contains(&x));
                let (pu, pv) = (pos(u)?, pos(v)?);
                if pu == pv {
                    children[pu].adjacent(u, v)
                } else {
                    Some(matches!(self, Cotree::Join { .. }))
                }
            }
        }
    }

    /// The graph on `n` vertices this cotree describes.
    pub fn to_graph(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        self.collect_edges(&mut edges);
        Graph::from_edges(n, &edges).expect("cotree leaves are in range")
    }

    fn collect_edges(&self, edges: &mut Vec<(usize, usize)>) {
        if let Cotree::Union { children } | Cotree::Join { children } = self {
            for c in children {
                c.collect_edges(edges);
            }
            if matches!(self, Cotree::Join { .. }) {
                let sets: Vec<Vec<usize>> = children.iter().map(Cotree::leaves).collect();
                for i in 0..sets.len() {
                    for j in i + 1..sets.len() {
                        for &u in &sets[i] {
                            for &v in &sets[j] {
                                edges.push((u, v));
                            }
                        }
                    }
                }
            }
        }
    }

    /// Whether labels alternate and every internal node has two or more children.
    pub fn is_canonical(&self) -> bool {
        fn check(t: &Cotree, parent_join: Option<bool>) -> bool {
            match t {
                Cotree::Leaf { .. } => true,
                Cotree::Union { children } | Cotree::Join { children } => {
                    let join = matches!(t, Cotree::Join { .. });
                    children.len() >= 2 && parent_join != Some(join) && children.iter().all(|c| check(c, Some(join)))
                }
            }
        }
        check(self, None)
    }
}

/// An induced path `p[0] - p[1] - p[2] - p[3]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P4Witness(pub [usize; 4]);

impl P4Witness {
    pub fn is_valid(&self, g: &Graph) -> bool {
        let p = self.0;
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| p[i] != p[j]));
        distinct
            && g.has_edge(p[0], p[1])
            && g.has_edge(p[1], p[2])
            && g.has_edge(p[2], p[3])
            && !g.has_edge(p[0], p[2])
            && !g.has_edge(p[1], p[3])
            && !g.has_edge(p[0], p[3])
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Recognition {
    Cograph(Cotree),
    NotCograph(P4Witness),
}

/// Cotree of `g` or an induced P4. Splits off components, then
/// co-components; a part that is neither disconnected nor co-disconnected
/// contains a P4, found by scanning its edges as middle edges.
pub fn cograph_recognize(g: &Graph) -> Recognition {
    if g.n() == 0 {
        return Recognition::Cograph(Cotree::Union { children: Vec::new() });
    }
    let mut mark = vec![usize::MAX; g.n()];
    match decompose(g, (0..g.n()).collect(), &mut mark) {
        Ok(t) => Recognition::Cograph(t),
        Err(p) => Recognition::NotCograph(p),
    }
}

fn decompose(g: &Graph, set: Vec<usize>, mark: &mut [usize]) -> Result<Cotree, P4Witness> {
    if set.len() == 1 {
        return Ok(Cotree::Leaf { vertex: set[0] });
    }
    let comps = parts(g, &set, mark, false);
    if comps.len() > 1 {
        let children = comps.into_iter().map(|c| decompose(g, c, mark)).collect::<Result<_, _>>()?;
        return Ok(Cotree::Union { children });
    }
    let cocomps = parts(g, &set, mark, true);
    if cocomps.len() > 1 {
        let children = cocomps.into_iter().map(|c| decompose(g, c, mark)).collect::<Result<_, _>>()?;
        return Ok(Cotree::Join { children });
    }
    Err(find_p4(g, &set, mark))
}

/// Components of `g[set]` (or of its complement), each sorted, ordered by
/// smallest vertex. `mark` is `usize::MAX` everywhere on entry and on return.
fn parts(g: &Graph, set: &[usize], mark: &mut [usize], complement: bool) -> Vec<Vec<usize>> {
    let (member, adj) = (0, 1);
    for &v in set {
        mark[v] = member;
    }
    let mut seen = std::collections::HashSet::with_capacity(set.len());
    let mut out = Vec::new();
    if !complement {
        for &s in set {
            if seen.contains(&s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for &w in g.neighbors(v) {
                    if mark[w] == member && seen.insert(w) {
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
    } else {
        let mut unvisited: Vec<usize> = set.to_vec();
        unvisited.reverse();
        while let Some(s) = unvisited.pop() {
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for &w in g.neighbors(v) {
                    if mark[w] == member {
                        mark[w] = adj;
                    }
                }
                let (stay, go): (Vec<usize>, Vec<usize>) =
                    std::mem::take(&mut unvisited).into_iter().partition(|&w| mark[w] == adj);
                comp.extend(go);
                unvisited = stay;
                for &w in g.neighbors(v) {
                    if mark[w] == adj {
                        mark[w] = member;
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort_unstable_by_key(|c| c[0]);
    }
    for &v in set {
        mark[v] = usize::MAX;
    }
    out
}

fn find_p4(g: &Graph, set: &[usize], mark: &mut [usize]) -> P4Witness {
    let member = 0;
    for &v in set {
        mark[v] = member;
    }
    let inside = |mark: &[usize], v: usize| mark[v] == member;
    for &b in set {
        for &c in g.neighbors(b) {
            if !inside(mark, c) {
                continue;
            }
            for &a in g.neighbors(b) {
                if a == c || !inside(mark, a) || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != b && inside(mark, d) && !g.has_edge(d, b) && !g.has_edge(a, d) {
                        for &v in set {
                            mark[v] = usize::MAX;
                        }
                        return P4Witness([a, b, c, d]);
                    }
                }
            }
        }
    }
    unreachable!("a connected, co-connected graph on two or more vertices has an induced P4")
}

/// Repeatedly delete all four vertices of an induced P4 until a cograph
/// remains; at most four times the optimum.
pub fn cograph_deletion_set(g: &Graph) -> Vec<usize> {
    let mut x: Vec<usize> = Vec::new();
    loop {
        let sub = g.delete_vertices(&x).expect("ids in range");
        match cograph_recognize(&sub.graph) {
            Recognition::Cograph(_) => break,
            Recognition::NotCograph(P4Witness(p)) => x.extend(p.map(|v| sub.original(v))),
        }
    }
    x.sort_unstable();
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn recognizes_examples() {
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        match cograph_recognize(&p4) {
            Recognition::NotCograph(w) => {
                assert!(w.is_valid(&p4));
                assert!(w.0 == [0, 1, 2, 3] || w.0 == [3, 2, 1, 0]);
            }
            other => panic!("expected P4, got {other:?}"),
        }

        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let leaves = (0..4).map(|v| Cotree::Leaf { vertex: v }).collect();
        assert_eq!(cograph_recognize(&k4), Recognition::Cograph(Cotree::Join { children: leaves }));

        let c4 = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let expected = Cotree::Join {
            children: vec![
                Cotree::Union { children: vec![Cotree::Leaf { vertex: 0 }, Cotree::Leaf { vertex: 2 }] },
                Cotree::Union { children: vec![Cotree::Leaf { vertex: 1 }, Cotree::Leaf { vertex: 3 }] },
            ],
        };
        let Recognition::Cograph(t) = cograph_recognize(&c4) else { panic!("C4 is a cograph") };
        assert_eq!(t, expected);
        assert_eq!(t.adjacent(0, 1), Some(true));
        assert_eq!(t.adjacent(0, 2), Some(false));
        assert_eq!(t.to_graph(4), c4);
        assert!(t.is_canonical());
    }

    #[test]
    fn json_nesting() {
        let t = Cotree::Join { children: vec![Cotree::Leaf { vertex: 0 }, Cotree::Leaf { vertex: 1 }] };
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["label"], "join");
        assert_eq!(v["children"][1]["vertex"], 1);
    }

    #[test]
    fn deletion_set_examples() {
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(cograph_deletion_set(&k4).is_empty());
        let p4 = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(cograph_deletion_set(&p4), vec![0, 1, 2, 3]);
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let x = cograph_deletion_set(&c5);
        assert!(x.len() <= 4);
        let rest = c5.delete_vertices(&x).unwrap();
        assert!(matches!(cograph_recognize(&rest.graph), Recognition::Cograph(_)));
    }
}
