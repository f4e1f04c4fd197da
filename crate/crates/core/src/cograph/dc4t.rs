//! Distance-constrained 4-tuples relative to a cograph deletion set, and the
//! hyperbolicity driver built on them.
//!
//! A tuple vertex is either a deletion-set vertex or described by its type;
//! vertices with types are grouped into blocks, one block per cograph
//! component, and within a block each pair is adjacent or at distance two.
//! Every distance of such a configuration follows from the types, and its
//! realizability is one colored induced subgraph query on `G - X` with one
//! extra vertex per component.

use std::cell::{Cell, RefCell};
use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::cotree::{cograph_deletion_set, cograph_recognize, Cotree, Recognition};
use super::isi::{colored_isi_with_cap, ColoredPattern, DEFAULT_PATTERN_CAP};
use super::types::{compute_type_vectors, TypeVector};
use crate::error::{Error, Result};
use crate::graph::{Graph, INFINITY};
use crate::hyperbolicity::{delta_of_pairs, HyperbolicityResult};

/// Index of the pair `{i, j}` in the order `ab, ac, ad, bc, bd, cd`.
const PAIR_INDEX: [[usize; 4]; 4] = [[6, 0, 1, 2], [0, 6, 3, 4], [1, 3, 6, 5], [2, 4, 5, 6]];
const NO_BLOCK: u8 = u8::MAX;

/// Required distances `ab, ac, ad, bc, bd, cd`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DistanceConstraints {
    pub d: [u32; 6],
}

impl DistanceConstraints {
    pub fn new(d: [u32; 6]) -> Self {
        DistanceConstraints { d }
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.d[PAIR_INDEX[i][j]]
    }

    pub fn delta(&self) -> u64 {
        delta_of_pairs(self.d.map(u64::from))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Class {
    X(u32),
    T(u32),
}

/// Labels `a, b, c, d` as classes, the block of each typed label, and the
/// adjacency of typed labels sharing a block (bit per pair index).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Config {
    classes: [Class; 4],
    block: [u8; 4],
    adj: u8,
}

type PatternKey = ([u32; 4], [u8; 4], u8);

/// Precomputed data for one graph and deletion set.
pub struct Instance {
    graph: Graph,
    x: Vec<usize>,
    types: Vec<TypeVector>,
    reps: Vec<usize>,
    /// `dx[i][v]`: distance in `G` from `x_i`.
    dx: Vec<Vec<u32>>,
    /// Distance between vertices of two types in different components.
    dtt: Vec<Vec<u32>>,
    host: Graph,
    host_colors: Vec<u32>,
    host_to_graph: Vec<usize>,
    cotree: Cotree,
    pattern_cap: usize,
    memo: RefCell<HashMap<PatternKey, Option<Vec<usize>>>>,
    isi_calls: Cell<usize>,
}

impl Instance {
    /// Fails when `G - X` is not a cograph.
    pub fn new(g: &Graph, x: &[usize]) -> Result<Self> {
        Self::with_cap(g, x, DEFAULT_PATTERN_CAP)
    }

    pub fn with_cap(g: &Graph, x: &[usize], pattern_cap: usize) -> Result<Self> {
        let mut x = x.to_vec();
        x.sort_unstable();
        x.dedup();
        let tv = compute_type_vectors(g, &x)?;
        let mut index: BTreeMap<&TypeVector, usize> = BTreeMap::new();
        for t in tv.iter().flatten() {
            index.entry(t).or_insert(0);
        }
        for (i, slot) in index.values_mut().enumerate() {
            *slot = i;
        }
        let types: Vec<TypeVector> = index.keys().map(|&t| t.clone()).collect();
        let mut reps = vec![usize::MAX; types.len()];
        let mut type_of = vec![u32::MAX; g.n()];
        for (v, t) in tv.iter().enumerate() {
            if let Some(t) = t {
                let i = index[t];
                type_of[v] = i as u32;
                reps[i] = reps[i].min(v);
            }
        }

        let dx: Vec<Vec<u32>> = x.iter().map(|&xi| g.bfs(xi).as_slice().to_vec()).collect();
        let dtt = (0..types.len())
            .map(|t| {
                (0..types.len())
                    .map(|u| {
                        (0..x.len())
                            .filter_map(|j| {
                                let a = types[t].get(j)?;
                                let b = dx[j][reps[u]];
                                (b != INFINITY).then(|| a + b)
                            })
                            .min()
                            .unwrap_or(INFINITY)
                    })
                    .collect()
            })
            .collect();

        let sub = g.delete_vertices(&x)?;
        let comps = sub.graph.connected_components();
        let base = sub.graph.n();
        let mut edges = sub.graph.edge_list();
        for (c, comp) in comps.iter().enumerate() {
            edges.extend(comp.iter().map(|&v| (v, base + c)));
        }
        let host = Graph::from_edges(base + comps.len(), &edges)?;
        let mut host_colors: Vec<u32> = sub.to_original.iter().map(|&v| type_of[v] + 1).collect();
        host_colors.resize(host.n(), 0);
        let cotree = match cograph_recognize(&host) {
            Recognition::Cograph(t) => t,
            Recognition::NotCograph(_) => {
                return Err(Error::InvalidInstance("graph minus the deletion set is not a cograph".into()))
            }
        };
        Ok(Instance {
            graph: g.clone(),
            x,
            types,
            reps,
            dx,
            dtt,
            host,
            host_colors,
            host_to_graph: sub.to_original,
            cotree,
            pattern_cap,
            memo: RefCell::new(HashMap::new()),
            isi_calls: Cell::new(0),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn deletion_set(&self) -> &[usize] {
        &self.x
    }

    pub fn types(&self) -> &[TypeVector] {
        &self.types
    }

    /// Lowest vertex of each type.
    pub fn representatives(&self) -> &[usize] {
        &self.reps
    }

    /// Colored subgraph queries actually run (memoized ones excluded).
    pub fn isi_calls(&self) -> usize {
        self.isi_calls.get()
    }

    /// Largest distance any quadruple can require.
    pub fn distance_bound(&self) -> u32 {
        4 * self.x.len() as u32 + 2
    }

    fn classes(&self) -> Vec<Class> {
        (0..self.x.len() as u32).map(Class::X).chain((0..self.types.len() as u32).map(Class::T)).collect()
    }

    fn distance(&self, ci: Class, bi: u8, cj: Class, bj: u8, adjacent: bool) -> Option<u32> {
        let d = match (ci, cj) {
            (Class::X(i), Class::X(j)) => self.dx[i as usize][self.x[j as usize]],
            (Class::X(i), Class::T(t)) | (Class::T(t), Class::X(i)) => self.dx[i as usize][self.reps[t as usize]],
            (Class::T(t), Class::T(u)) => {
                if bi == bj {
                    if adjacent {
                        1
                    } else {
                        2
                    }
                } else {
                    self.dtt[t as usize][u as usize]
                }
            }
        };
        (d != INFINITY).then_some(d)
    }

    fn distances(&self, c: &Config) -> Option<[u32; 6]> {
        let mut out = [0; 6];
        for i in 0..4 {
            for j in i + 1..4 {
                let p = PAIR_INDEX[i][j];
                out[p] = self.distance(c.classes[i], c.block[i], c.classes[j], c.block[j], c.adj >> p & 1 == 1)?;
            }
        }
        Some(out)
    }

    /// Concrete vertices for a configuration, or `None` if none exist.
    fn realize(&self, c: &Config) -> Result<Option<[usize; 4]>> {
        let mut key: PatternKey = ([u32::MAX; 4], c.block, 0);
        for l in 0..4 {
            if let Class::T(t) = c.classes[l] {
                key.0[l] = t;
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                let p = PAIR_INDEX[i][j];
                if c.block[i] != NO_BLOCK && c.block[i] == c.block[j] {
                    key.2 |= c.adj & (1 << p);
                }
            }
        }
        let blocks = c.block.iter().filter(|&&b| b != NO_BLOCK).max().map_or(0, |&b| b as usize + 1);

        // Pattern: per block its component vertex, then its labels.
        let mut colors = Vec::new();
        let mut edges = Vec::new();
        let mut pos = [usize::MAX; 4];
        for b in 0..blocks as u8 {
            let z = colors.len();
            colors.push(0);
            for l in 0..4 {
                if c.block[l] == b {
                    pos[l] = colors.len();
                    colors.push(key.0[l] + 1);
                    edges.push((z, pos[l]));
                }
            }
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if pos[i] != usize::MAX && pos[j] != usize::MAX && key.2 >> PAIR_INDEX[i][j] & 1 == 1 {
                    edges.push((pos[i], pos[j]));
                }
            }
        }

        let cached = self.memo.borrow().get(&key).cloned();
        let map = match cached {
            Some(m) => m,
            None => {
                let pattern = ColoredPattern { graph: Graph::from_edges(colors.len(), &edges)?, colors };
                self.isi_calls.set(self.isi_calls.get() + 1);
                let m = colored_isi_with_cap(&self.host, &self.cotree, &self.host_colors, &pattern, self.pattern_cap)?;
                self.memo.borrow_mut().insert(key, m.clone());
                m
            }
        };
        Ok(map.map(|m| {
            let mut quad = [0; 4];
            for l in 0..4 {
                quad[l] = match c.classes[l] {
                    Class::X(i) => self.x[i as usize],
                    Class::T(_) => self.host_to_graph[m[pos[l]]],
                };
            }
            quad
        }))
    }

    /// Every configuration whose labels carry nondecreasing classes.
    fn for_each_sorted_config(&self, mut f: impl FnMut(Config)) {
        let classes = self.classes();
        let k = classes.len();
        for a in 0..k {
            for b in a..k {
                for c in b..k {
                    for d in c..k {
                        let cls = [a, b, c, d].map(|i| classes[i]);
                        if (0..3).any(|i| matches!(cls[i], Class::X(_)) && cls[i] == cls[i + 1]) {
                            continue;
                        }
                        expand(cls, &mut f);
                    }
                }
            }
        }
    }
}

/// All block assignments and adjacency patterns for fixed classes.
fn expand(classes: [Class; 4], f: &mut impl FnMut(Config)) {
    let typed: Vec<usize> = (0..4).filter(|&l| matches!(classes[l], Class::T(_))).collect();
    let mut block = [NO_BLOCK; 4];
    fn rgs(typed: &[usize], i: usize, used: u8, block: &mut [u8; 4], out: &mut Vec<[u8; 4]>) {
        if i == typed.len() {
            out.push(*block);
            return;
        }
        for b in 0..=used {
            block[typed[i]] = b;
            rgs(typed, i + 1, used.max(b + 1), block, out);
        }
    }
    let mut assignments = Vec::new();
    rgs(&typed, 0, 0, &mut block, &mut assignments);
    for block in assignments {
        let mut free = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                if block[i] != NO_BLOCK && block[i] == block[j] {
                    free.push(PAIR_INDEX[i][j]);
                }
            }
        }
        for bits in 0..1u32 << free.len() {
            let adj = free.iter().enumerate().filter(|&(s, _)| bits >> s & 1 == 1).fold(0u8, |a, (_, &p)| a | 1 << p);
            f(Config { classes, block, adj });
        }
    }
}

/// Four vertices `a, b, c, d` of `inst` with exactly the distances `dc`,
/// searched label by label with each new label checked against the
/// earlier ones. Constraints outside `1..=4|X|+2` are rejected up front.
pub fn distance_constrained_4tuple(inst: &Instance, dc: &DistanceConstraints) -> Result<Option<[usize; 4]>> {
    let bound = inst.distance_bound();
    if dc.d.iter().any(|&d| d == 0 || d > bound) {
        return Ok(None);
    }
    let classes = inst.classes();
    let mut cfg = Config { classes: [Class::X(0); 4], block: [NO_BLOCK; 4], adj: 0 };
    let mut used = vec![false; inst.x.len()];
    search(inst, dc, &classes, 0, 0, &mut cfg, &mut used)
}

fn search(
    inst: &Instance,
    dc: &DistanceConstraints,
    classes: &[Class],
    i: usize,
    blocks: u8,
    cfg: &mut Config,
    used: &mut [bool],
) -> Result<Option<[usize; 4]>> {
    if i == 4 {
        return inst.realize(cfg);
    }
    for &c in classes {
        let options: Vec<u8> = match c {
            Class::X(j) if used[j as usize] => continue,
            Class::X(_) => vec![NO_BLOCK],
            Class::T(_) => (0..=blocks).collect(),
        };
        for b in options {
            cfg.classes[i] = c;
            cfg.block[i] = b;
            let mut adj = cfg.adj;
            let ok = (0..i).all(|l| {
                let want = dc.get(l, i);
                let p = PAIR_INDEX[l][i];
                if b != NO_BLOCK && cfg.block[l] == b {
                    if want == 1 {
                        adj |= 1 << p;
                    }
                    want <= 2
                } else {
                    inst.distance(cfg.classes[l], cfg.block[l], c, b, false) == Some(want)
                }
            });
            if !ok {
                continue;
            }
            let saved = cfg.adj;
            cfg.adj = adj;
            if let Class::X(j) = c {
                used[j as usize] = true;
            }
            let next = if b != NO_BLOCK && b == blocks { blocks + 1 } else { blocks };
            let found = search(inst, dc, classes, i + 1, next, cfg, used)?;
            if let Class::X(j) = c {
                used[j as usize] = false;
            }
            cfg.adj = saved;
            if found.is_some() {
                return Ok(found);
            }
        }
    }
    cfg.block[i] = NO_BLOCK;
    Ok(None)
}

/// Largest hyperbolicity over quadruples of `inst`, with a quadruple
/// attaining it. Configurations are ranked by their hyperbolicity and
/// checked for realizability in that order.
pub fn max_delta_quadruple(inst: &Instance) -> Result<Option<(u64, [usize; 4])>> {
    let mut candidates: Vec<(u64, Config)> = Vec::new();
    inst.for_each_sorted_config(|c| {
        if let Some(d) = inst.distances(&c) {
            let delta = delta_of_pairs(d.map(u64::from));
            let min = *d.iter().min().unwrap() as u64;
            if delta <= 2 * min {
                candidates.push((delta, c));
            }
        }
    });
    candidates.sort_by_key(|&(delta, _)| std::cmp::Reverse(delta));
    for (delta, c) in &candidates {
        if let Some(q) = inst.realize(c)? {
            return Ok(Some((*delta, q)));
        }
    }
    Ok(None)
}

/// Largest hyperbolicity by querying every distance 6-tuple in
/// `1..=bound` that satisfies the triangle inequality, in decreasing order
/// of the hyperbolicity it implies.
pub fn max_delta_by_tuples(inst: &Instance) -> Result<Option<(u64, [usize; 4])>> {
    let bound = if inst.x.is_empty() { 2 } else { inst.distance_bound().min(inst.graph.n() as u32) };
    let mut tuples = Vec::new();
    let mut d = [1u32; 6];
    loop {
        let dc = DistanceConstraints::new(d);
        if is_metric(&dc) && dc.delta() <= 2 * *d.iter().min().unwrap() as u64 {
            tuples.push(dc);
        }
        let mut i = 0;
        while i < 6 && d[i] == bound {
            d[i] = 1;
            i += 1;
        }
        if i == 6 {
            break;
        }
        d[i] += 1;
    }
    tuples.sort_by_key(|t| std::cmp::Reverse(t.delta()));
    for dc in &tuples {
        if let Some(q) = distance_constrained_4tuple(inst, dc)? {
            return Ok(Some((dc.delta(), q)));
        }
    }
    Ok(None)
}

fn is_metric(dc: &DistanceConstraints) -> bool {
    let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
    triples.iter().all(|&(a, b, c)| {
        let (x, y, z) = (dc.get(a, b), dc.get(a, c), dc.get(b, c));
        x <= y + z && y <= x + z && z <= x + y
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CographOptions {
    pub pattern_cap: usize,
    /// Query distance 6-tuples one by one instead of ranking configurations.
    pub literal_tuples: bool,
}

impl Default for CographOptions {
    fn default() -> Self {
        CographOptions { pattern_cap: DEFAULT_PATTERN_CAP, literal_tuples: false }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CographReport {
    /// Union of the per-component deletion sets, sorted.
    pub deletion_set: Vec<usize>,
    /// Distinct types summed over components.
    pub types: usize,
    pub isi_calls: usize,
}

pub fn hyperbolicity_cograph_distance(g: &Graph) -> Result<HyperbolicityResult> {
    Ok(hyperbolicity_cograph_distance_with(g, &CographOptions::default())?.0)
}

/// Runs on every connected component with its own deletion set.
pub fn hyperbolicity_cograph_distance_with(
    g: &Graph,
    opts: &CographOptions,
) -> Result<(HyperbolicityResult, CographReport)> {
    let mut result = HyperbolicityResult::zero();
    let mut report = CographReport::default();
    for comp in g.connected_components() {
        if comp.len() < 4 {
            continue;
        }
        let part = g.induced_subgraph(&comp);
        let x = cograph_deletion_set(&part.graph);
        let inst = Instance::with_cap(&part.graph, &x, opts.pattern_cap)?;
        let best = if opts.literal_tuples { max_delta_by_tuples(&inst)? } else { max_delta_quadruple(&inst)? };
        report.deletion_set.extend(x.iter().map(|&v| part.original(v)));
        report.types += inst.types().len();
        report.isi_calls += inst.isi_calls();
        let (delta, quad) = best.expect("a component with four vertices has a quadruple");
        let r = HyperbolicityResult::from_quadruple(&part.graph, quad)?;
        assert_eq!(r.delta, delta, "configuration distances disagree with the graph");
        result = result.better_of(r.map_vertices(|v| part.original(v)));
    }
    report.deletion_set.sort_unstable();
    Ok((result, report))
}
