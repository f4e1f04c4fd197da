//! Graphs encoding Orthogonal Vectors and 4-colored Independent Set
//! instances; each is a yes-instance exactly when its graph has
//! hyperbolicity at least 4.

use std::ops::Range;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::families::rng;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvInstance {
    pub a: Vec<Vec<bool>>,
    pub b: Vec<Vec<bool>>,
}

impl OvInstance {
    /// Fails on an empty side or vectors of unequal length.
    pub fn new(a: Vec<Vec<bool>>, b: Vec<Vec<bool>>) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::InvalidInstance("both vector sets must be nonempty".into()));
        }
        let dim = a[0].len();
        if a.iter().chain(&b).any(|v| v.len() != dim) {
            return Err(Error::InvalidInstance("vectors differ in length".into()));
        }
        Ok(OvInstance { a, b })
    }

    /// From strings of `0` and `1`.
    pub fn parse(a: &[&str], b: &[&str]) -> Result<Self> {
        let conv = |s: &&str| -> Result<Vec<bool>> {
            s.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    _ => Err(Error::InvalidInstance(format!("bad vector entry {c:?}"))),
                })
                .collect()
        };
        Self::new(a.iter().map(conv).collect::<Result<_>>()?, b.iter().map(conv).collect::<Result<_>>()?)
    }

    /// `n` vectors per side, each entry one with probability `p`.
    pub fn random(n: usize, dim: usize, p: f64, seed: u64) -> Self {
        let mut r = rng(seed);
        let mut side = || (0..n).map(|_| (0..dim).map(|_| r.gen_bool(p)).collect()).collect();
        let a = side();
        let b = side();
        OvInstance::new(a, b).expect("random instance is well formed")
    }

    pub fn dim(&self) -> usize {
        self.a[0].len()
    }
}

/// First orthogonal pair `(i, j)` in row-major order.
pub fn find_orthogonal_pair(inst: &OvInstance) -> Option<(usize, usize)> {
    for (i, a) in inst.a.iter().enumerate() {
        for (j, b) in inst.b.iter().enumerate() {
            if a.iter().zip(b).all(|(&x, &y)| !(x && y)) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn solve_ov_bruteforce(inst: &OvInstance) -> bool {
    find_orthogonal_pair(inst).is_some()
}

/// Vertex layout: `A`, `B`, `C`, `D` as consecutive ranges, then
/// `u_A, u, u_B, v_A, v, v_B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OvLandmarks {
    pub a: Range<usize>,
    pub b: Range<usize>,
    pub c: Range<usize>,
    pub d: Range<usize>,
    pub u_a: usize,
    pub u: usize,
    pub u_b: usize,
    pub v_a: usize,
    pub v: usize,
    pub v_b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OvGraph {
    pub graph: Graph,
    pub landmarks: OvLandmarks,
}

pub fn gen_ov_graph(inst: &OvInstance) -> Result<OvGraph> {
    let inst = OvInstance::new(inst.a.clone(), inst.b.clone())?;
    let (na, nb, l) = (inst.a.len(), inst.b.len(), inst.dim());
    let a = 0..na;
    let b = na..na + nb;
    let c = b.end..b.end + l;
    let d = c.end..c.end + l;
    let base = d.end;
    let lm = OvLandmarks {
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        d: d.clone(),
        u_a: base,
        u: base + 1,
        u_b: base + 2,
        v_a: base + 3,
        v: base + 4,
        v_b: base + 5,
    };
    let mut edges = Vec::new();
    for clique in [&c, &d] {
        for i in clique.clone() {
            for j in i + 1..clique.end {
                edges.push((i, j));
            }
        }
    }
    for i in 0..l {
        edges.push((c.start + i, d.start + i));
    }
    for (k, v) in inst.a.iter().enumerate() {
        edges.extend((0..l).filter(|&i| v[i]).map(|i| (a.start + k, c.start + i)));
    }
    for (k, v) in inst.b.iter().enumerate() {
        edges.extend((0..l).filter(|&i| v[i]).map(|i| (b.start + k, d.start + i)));
    }
    edges.extend([(lm.u_a, lm.u), (lm.u, lm.u_b), (lm.v_a, lm.v), (lm.v, lm.v_b)]);
    for x in a.clone().chain(c.clone()) {
        edges.push((lm.u_a, x));
        edges.push((lm.v_a, x));
    }
    for x in b.clone().chain(d.clone()) {
        edges.push((lm.u_b, x));
        edges.push((lm.v_b, x));
    }
    Ok(OvGraph { graph: Graph::from_edges(base + 6, &edges)?, landmarks: lm })
}

/// A graph with its vertices split into four parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourPartiteInstance {
    pub graph: Graph,
    pub parts: [Vec<usize>; 4],
}

impl FourPartiteInstance {
    /// Fails unless the parts are nonempty, disjoint, and cover the graph.
    pub fn new(graph: Graph, parts: [Vec<usize>; 4]) -> Result<Self> {
        let mut seen = vec![false; graph.n()];
        for p in &parts {
            if p.is_empty() {
                return Err(Error::InvalidInstance("every part must be nonempty".into()));
            }
            for &v in p {
                graph.check_vertex(v)?;
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidInstance(format!("vertex {v} is in two parts")));
                }
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidInstance(format!("vertex {v} is in no part")));
        }
        Ok(FourPartiteInstance { graph, parts })
    }

    /// Parts of the given sizes laid out consecutively; each pair of
    /// vertices in different parts is an edge with probability `p`.
    pub fn random(sizes: [usize; 4], p: f64, seed: u64) -> Self {
        let mut r = rng(seed);
        let mut parts: [Vec<usize>; 4] = Default::default();
        let mut n = 0;
        for (i, &s) in sizes.iter().enumerate() {
            parts[i] = (n..n + s).collect();
            n += s;
        }
        let part_of: Vec<usize> = (0..4).flat_map(|i| std::iter::repeat_n(i, sizes[i])).collect();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] && r.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::from_edges(n, &edges).expect("ids in range");
        FourPartiteInstance::new(graph, parts).expect("sizes must be positive")
    }

    pub fn sizes(&self) -> [usize; 4] {
        [0, 1, 2, 3].map(|i| self.parts[i].len())
    }
}

/// One vertex per part, pairwise non-adjacent, first in lexicographic order.
pub fn find_colored_independent_set(inst: &FourPartiteInstance) -> Option<[usize; 4]> {
    let g = &inst.graph;
    let [p1, p2, p3, p4] = &inst.parts;
    for &a in p1 {
        for &b in p2.iter().filter(|&&b| !g.has_edge(a, b)) {
            for &c in p3.iter().filter(|&&c| !g.has_edge(a, c) && !g.has_edge(b, c)) {
                if let Some(&d) = p4.iter().find(|&&d| !g.has_edge(a, d) && !g.has_edge(b, d) && !g.has_edge(c, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

pub fn solve_4is_bruteforce(inst: &FourPartiteInstance) -> bool {
    find_colored_independent_set(inst).is_some()
}

/// Vertex layout: `X_1..X_4`, `X'_1..X'_4`, `Y_1, Z_1, Y_2, Z_2` as
/// consecutive ranges, then the connection vertices
/// `u^1_{1,2}, u^2_{1,2}, u^2_{2,3}, u^3_{2,3}, u^3_{3,4}, u^4_{3,4}, u^4_{4,1}, u^1_{4,1}`,
/// then `w`. The `j`-th vertex of each copy corresponds to the `j`-th
/// vertex of its part.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FourIsLandmarks {
    pub x: [Range<usize>; 4],
    pub x_prime: [Range<usize>; 4],
    pub y: [Range<usize>; 2],
    pub z: [Range<usize>; 2],
    pub u: [usize; 8],
    pub w: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourIsGraph {
    pub graph: Graph,
    pub landmarks: FourIsLandmarks,
    /// Set when every vertex of part 1 is adjacent to every vertex of part 3,
    /// a trivial no-instance for which the diameter need not be four.
    pub warning: Option<String>,
}

pub fn gen_4is_graph(inst: &FourPartiteInstance) -> Result<FourIsGraph> {
    let inst = FourPartiteInstance::new(inst.graph.clone(), inst.parts.clone())?;
    let g = &inst.graph;
    let sizes = inst.sizes();
    let mut next = 0;
    let mut take = |len: usize| {
        let r = next..next + len;
        next += len;
        r
    };
    let x: [Range<usize>; 4] = std::array::from_fn(|i| take(sizes[i]));
    let x_prime: [Range<usize>; 4] = std::array::from_fn(|i| take(sizes[i]));
    let y1 = take(sizes[0]);
    let z1 = take(sizes[0]);
    let y2 = take(sizes[1]);
    let z2 = take(sizes[1]);
    let u0 = take(8).start;
    let w = take(1).start;
    let lm = FourIsLandmarks {
        x: x.clone(),
        x_prime: x_prime.clone(),
        y: [y1.clone(), y2.clone()],
        z: [z1.clone(), z2.clone()],
        u: std::array::from_fn(|i| u0 + i),
        w,
    };
    let n = w + 1;
    let orig = |i: usize, j: usize| inst.parts[i][j];

    let mut edges = Vec::new();
    let all_copies = x.iter().chain(&x_prime).chain([&y1, &z1, &y2, &z2]);
    for r in all_copies {
        for i in r.clone() {
            for j in i + 1..r.end {
                edges.push((i, j));
            }
        }
    }
    for i in 0..4 {
        for j in 0..sizes[i] {
            edges.push((x[i].start + j, x_prime[i].start + j));
        }
    }
    // X'_i to X_{i+1} (cyclically) on non-edges of the instance.
    for i in 0..4 {
        let k = (i + 1) % 4;
        for j in 0..sizes[i] {
            for l in 0..sizes[k] {
                if !g.has_edge(orig(i, j), orig(k, l)) {
                    edges.push((x_prime[i].start + j, x[k].start + l));
                }
            }
        }
    }
    for (i, (y, z)) in [(&y1, &z1), (&y2, &z2)].into_iter().enumerate() {
        for j in 0..sizes[i] {
            edges.push((x[i].start + j, y.start + j));
            edges.push((y.start + j, z.start + j));
        }
        // Z_i to X_{i+2} on edges of the instance.
        let k = i + 2;
        for j in 0..sizes[i] {
            for l in 0..sizes[k] {
                if g.has_edge(orig(i, j), orig(k, l)) {
                    edges.push((z.start + j, x[k].start + l));
                }
            }
        }
    }
    for p in 0..4 {
        let (i, k) = (p, (p + 1) % 4);
        let (ui, uk) = (lm.u[2 * p], lm.u[2 * p + 1]);
        edges.push((ui, uk));
        edges.extend(x[i].clone().map(|v| (v, ui)));
        edges.extend(x[k].clone().map(|v| (v, uk)));
    }
    let in_x = |v: usize| x.iter().any(|r| r.contains(&v));
    edges.extend((0..w).filter(|&v| !in_x(v)).map(|v| (v, w)));

    let trivial = inst.parts[0].iter().all(|&a| inst.parts[2].iter().all(|&c| g.has_edge(a, c)));
    let warning = trivial.then(|| "every part-1 vertex is adjacent to every part-3 vertex: trivial no-instance".to_string());
    Ok(FourIsGraph { graph: Graph::from_edges(n, &edges)?, landmarks: lm, warning })
}
