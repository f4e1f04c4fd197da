use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub(crate) fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("generated ids are in range")
}

/// Cycle on `len` vertices in order; `len < 3` gives a path.
pub fn gen_cycle(len: usize) -> Graph {
    let mut edges: Vec<_> = (1..len).map(|i| (i - 1, i)).collect();
    if len >= 3 {
        edges.push((len - 1, 0));
    }
    build(len, &edges)
}

pub fn gen_path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &edges)
}

/// Center 0 with `leaves` neighbors.
pub fn gen_star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    build(leaves + 1, &edges)
}

pub fn gen_complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    build(n, &edges)
}

/// Sides `0..a` and `a..a+b`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
    build(a + b, &edges)
}

/// Uniform random recursive tree: vertex `i` attaches to a random earlier vertex.
pub fn gen_random_tree(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let edges: Vec<_> = (1..n).map(|i| (r.gen_range(0..i), i)).collect();
    build(n, &edges)
}

pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    build(n, &edges)
}

/// Vertices 0 and 1 joined by internally disjoint paths with the given
/// numbers of edges. A length of one is the edge itself, used at most once.
pub fn gen_theta(lengths: &[usize]) -> Graph {
    let mut edges = Vec::new();
    let mut n = 2;
    for &len in lengths {
        assert!(len >= 1, "path length must be positive");
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, 1));
    }
    build(n, &edges)
}

/// Every edge replaced by a path of `factor` edges.
pub fn gen_subdivided(g: &Graph, factor: usize) -> Graph {
    assert!(factor >= 1, "subdivision factor must be positive");
    let mut n = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        let mut prev = u;
        for _ in 1..factor {
            edges.push((prev, n));
            prev = n;
            n += 1;
        }
        edges.push((prev, v));
    }
    build(n, &edges)
}

/// Random tree on `n` vertices plus `extra` random non-edges turned into edges.
pub fn gen_tree_plus_edges(n: usize, extra: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut edges: Vec<_> = (1..n).map(|i| (r.gen_range(0..i), i)).collect();
    let tree = build(n, &edges);
    let mut non_edges: Vec<_> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| !tree.has_edge(i, j)).collect();
    non_edges.shuffle(&mut r);
    edges.extend(non_edges.into_iter().take(extra));
    build(n, &edges)
}

/// Random cograph: leaves split recursively, each split a union or a join
/// with equal probability.
pub fn gen_random_cograph(n: usize, seed: u64) -> Graph {
    let mut r = rng(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut r);
    let mut edges = Vec::new();
    fn split(r: &mut ChaCha8Rng, vs: &[usize], edges: &mut Vec<(usize, usize)>) {
        if vs.len() <= 1 {
            return;
        }
        let cut = r.gen_range(1..vs.len());
        let (left, right) = vs.split_at(cut);
        if r.gen_bool(0.5) {
            for &u in left {
                for &v in right {
                    edges.push((u, v));
                }
            }
        }
        split(r, left, edges);
        split(r, right, edges);
    }
    split(&mut r, &order, &mut edges);
    build(n, &edges)
}

/// Overwrite the edges among `count` random 4-vertex sets so that each
/// induces a P4. Needs at least four vertices.
pub fn plant_p4s(g: &Graph, count: usize, seed: u64) -> Graph {
    assert!(g.n() >= 4, "planting a P4 needs four vertices");
    let mut r = rng(seed);
    let mut adj: Vec<Vec<bool>> = (0..g.n()).map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect()).collect();
    let ids: Vec<usize> = (0..g.n()).collect();
    for _ in 0..count {
        let q: Vec<usize> = ids.choose_multiple(&mut r, 4).copied().collect();
        for i in 0..4 {
            for j in i + 1..4 {
                let on = j == i + 1;
                adj[q[i]][q[j]] = on;
                adj[q[j]][q[i]] = on;
            }
        }
    }
    let edges: Vec<_> =
        (0..g.n()).flat_map(|u| (u + 1..g.n()).map(move |v| (u, v))).filter(|&(u, v)| adj[u][v]).collect();
    build(g.n(), &edges)
}
