//! Quadruples placed on cover paths: exact distance terms, the per-case
//! integer programs and the position enumeration they are checked against.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::hyperbolicity::delta_of_pairs;
use crate::ilp::{self, IlpModel, IlpScalar, IlpStatus, Sense};
use crate::reductions::PathCover;

pub const LABELS: [char; 4] = ['a', 'b', 'c', 'd'];
/// Label pairs in the order `ab, ac, ad, bc, bd, cd`; pairing `i` is the
/// pair of disjoint pairs `(i, 5 - i)`.
pub const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Exact distances between all endpoints of a path cover.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointDistanceTable {
    pub endpoints: Vec<usize>,
    /// `dist[i][j]` between `endpoints[i]` and `endpoints[j]`, `None` across components.
    pub dist: Vec<Vec<Option<u32>>>,
    #[serde(skip)]
    index: BTreeMap<usize, usize>,
}

impl EndpointDistanceTable {
    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        self.dist[self.index[&u]][self.index[&v]]
    }

    fn finite(&self, u: usize, v: usize) -> i64 {
        self.get(u, v).expect("cover endpoints lie in one component") as i64
    }
}

/// One BFS per distinct endpoint.
pub fn endpoint_distance_table(g: &Graph, cover: &PathCover) -> EndpointDistanceTable {
    let mut endpoints: Vec<usize> = cover.paths.iter().flat_map(|p| [p.first(), p.last()]).collect();
    endpoints.sort_unstable();
    endpoints.dedup();
    let index = endpoints.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let dist = endpoints
        .iter()
        .map(|&s| {
            let row = g.bfs(s);
            endpoints.iter().map(|&t| row.get(t)).collect()
        })
        .collect();
    EndpointDistanceTable { endpoints, dist, index }
}

/// Which cover path each of `a, b, c, d` lies on, and the order of labels
/// sharing a path (`rank[x] < rank[y]` means `x` is not after `y`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathAssignment {
    pub paths: [usize; 4],
    pub rank: [u8; 4],
}

impl PathAssignment {
    pub fn new(paths: [usize; 4], rank: [u8; 4]) -> Self {
        PathAssignment { paths, rank }
    }

    /// Labels in order along each path: `rank` follows label order.
    pub fn canonical(paths: [usize; 4]) -> Self {
        PathAssignment { paths, rank: [0, 1, 2, 3] }
    }

    /// `x` strictly precedes `y` on a shared path.
    fn before(&self, x: usize, y: usize) -> bool {
        self.paths[x] == self.paths[y] && self.rank[x] < self.rank[y]
    }
}

/// Every quadruple of positions on the cover is a relabeling of one placed
/// by a canonical assignment: nondecreasing path indices, labels on a
/// shared path in label order.
pub fn canonical_assignments(k: usize) -> Vec<PathAssignment> {
    let mut out = Vec::new();
    for a in 0..k {
        for b in a..k {
            for c in b..k {
                for d in c..k {
                    out.push(PathAssignment::canonical([a, b, c, d]));
                }
            }
        }
    }
    out
}

/// `c0 + cx * p_x + cy * p_y`, a candidate length for the distance of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Term {
    c0: i64,
    cx: i64,
    cy: i64,
}

impl Term {
    fn eval(&self, px: i64, py: i64) -> i64 {
        self.c0 + self.cx * px + self.cy * py
    }
}

/// A fixed assignment with its pair-distance terms.
pub(crate) struct Placement {
    pub assign: PathAssignment,
    pub len: [i64; 4],
    pub terms: [Vec<Term>; 6],
    /// Upper bound on each pair's distance over all positions.
    pub upper: [i64; 6],
}

impl Placement {
    pub fn new(cover: &PathCover, table: &EndpointDistanceTable, assign: PathAssignment) -> Placement {
        let path = |x: usize| &cover.paths[assign.paths[x]];
        let len = [0, 1, 2, 3].map(|x| path(x).length() as i64);
        let terms = [0, 1, 2, 3, 4, 5].map(|p| {
            let (x, y) = PAIRS[p];
            let (px, py) = (path(x), path(y));
            if assign.paths[x] == assign.paths[y] {
                let d = table.finite(px.first(), px.last());
                let l = len[x];
                // Direct along the path, or around through the rest of the graph.
                if assign.before(y, x) {
                    vec![Term { c0: 0, cx: 1, cy: -1 }, Term { c0: d + l, cx: -1, cy: 1 }]
                } else {
                    vec![Term { c0: 0, cx: -1, cy: 1 }, Term { c0: d + l, cx: 1, cy: -1 }]
                }
            } else {
                let mut v = Vec::with_capacity(4);
                for (s, es) in [px.first(), px.last()].into_iter().enumerate() {
                    for (t, et) in [py.first(), py.last()].into_iter().enumerate() {
                        let c0 = table.finite(es, et) + if s == 1 { len[x] } else { 0 } + if t == 1 { len[y] } else { 0 };
                        v.push(Term { c0, cx: if s == 0 { 1 } else { -1 }, cy: if t == 0 { 1 } else { -1 } });
                    }
                }
                v
            }
        });
        let upper = [0, 1, 2, 3, 4, 5].map(|p| {
            let (x, y) = PAIRS[p];
            let ts = &terms[p];
            // Max over the box of each term, then the constant sums of complementary terms.
            let mut u = ts.iter().map(|t| box_max(t, len[x], len[y])).min().unwrap();
            if ts.len() == 2 {
                u = u.min((ts[0].c0 + ts[1].c0) / 2);
            } else {
                u = u.min((ts[0].c0 + ts[3].c0) / 2).min((ts[1].c0 + ts[2].c0) / 2);
            }
            u
        });
        Placement { assign, len, terms, upper }
    }

    pub fn distance(&self, p: usize, pos: &[i64; 4]) -> i64 {
        let (x, y) = PAIRS[p];
        self.terms[p].iter().map(|t| t.eval(pos[x], pos[y])).min().unwrap()
    }

    pub fn delta(&self, pos: &[i64; 4]) -> u64 {
        delta_of_pairs([0, 1, 2, 3, 4, 5].map(|p| self.distance(p, pos) as u64))
    }

    /// `δ ≤ 2 · min pairwise distance`, with each distance at most its upper bound.
    pub fn delta_upper_bound(&self) -> i64 {
        2 * self.upper.iter().copied().min().unwrap()
    }

    pub fn respects_order(&self, pos: &[i64; 4]) -> bool {
        (0..4).all(|x| (0..4).all(|y| !self.assign.before(x, y) || pos[x] <= pos[y]))
    }

    /// Number of position vectors respecting the order, saturating.
    pub fn position_count(&self) -> u64 {
        let mut groups: BTreeMap<usize, (i64, u64)> = BTreeMap::new();
        for x in 0..4 {
            groups.entry(self.assign.paths[x]).or_insert((self.len[x], 0)).1 += 1;
        }
        groups.values().fold(1u64, |acc, &(l, r)| acc.saturating_mul(multichoose(l as u64 + 1, r)))
    }

    /// Best position vector by exhaustive enumeration, requiring `δ > floor`.
    /// Ties keep the first vector in lexicographic position order.
    pub fn enumerate(&self, floor: i64) -> Option<(u64, [i64; 4])> {
        let mut best: Option<(u64, [i64; 4])> = None;
        let mut pos = [0i64; 4];
        self.enumerate_rec(0, &mut pos, floor, &mut best);
        best
    }

    fn enumerate_rec(&self, x: usize, pos: &mut [i64; 4], floor: i64, best: &mut Option<(u64, [i64; 4])>) {
        if x == 4 {
            let d = self.delta(pos);
            let bar = best.map_or(floor, |b| b.0 as i64);
            if d as i64 > bar {
                *best = Some((d, *pos));
            }
            return;
        }
        let lo = (0..x).filter(|&y| self.assign.before(y, x)).map(|y| pos[y]).max().unwrap_or(0);
        let hi = (0..x).filter(|&y| self.assign.before(x, y)).map(|y| pos[y]).min().unwrap_or(self.len[x]);
        for p in lo..=hi {
            pos[x] = p;
            self.enumerate_rec(x + 1, pos, floor, best);
        }
    }

    /// Cheap incumbent from a few characteristic positions per label.
    pub fn seed(&self, floor: i64) -> Option<(u64, [i64; 4])> {
        let cands = self.len.map(|l| {
            let mut c = vec![0, l, l / 2, (l + 1) / 2, l / 4, (3 * l) / 4, (l + 2) / 4, (3 * l + 2) / 4];
            c.sort_unstable();
            c.dedup();
            c
        });
        let mut best: Option<(u64, [i64; 4])> = None;
        for &a in &cands[0] {
            for &b in &cands[1] {
                for &c in &cands[2] {
                    for &d in &cands[3] {
                        let pos = [a, b, c, d];
                        if !self.respects_order(&pos) {
                            continue;
                        }
                        let v = self.delta(&pos);
                        if v as i64 > best.map_or(floor, |b| b.0 as i64) {
                            best = Some((v, pos));
                        }
                    }
                }
            }
        }
        best
    }

    /// Terms of pair `p` that can be its minimum somewhere in the box.
    fn viable_terms(&self, p: usize) -> Vec<usize> {
        let (x, y) = PAIRS[p];
        let ts = &self.terms[p];
        (0..ts.len())
            .filter(|&s| {
                ts.iter().enumerate().all(|(c, t)| {
                    c == s || box_min(&Term { c0: ts[s].c0 - t.c0, cx: ts[s].cx - t.cx, cy: ts[s].cy - t.cy }, self.len[x], self.len[y]) <= 0
                })
            })
            .collect()
    }
}

fn box_max(t: &Term, lx: i64, ly: i64) -> i64 {
    t.c0 + (t.cx * lx).max(0) + (t.cy * ly).max(0)
}

fn box_min(t: &Term, lx: i64, ly: i64) -> i64 {
    t.c0 + (t.cx * lx).min(0) + (t.cy * ly).min(0)
}

fn multichoose(n: u64, r: u64) -> u64 {
    // C(n + r - 1, r)
    let mut acc: u64 = 1;
    for i in 0..r {
        acc = acc.saturating_mul(n + i) / (i + 1);
    }
    acc
}

/// One integer program: `largest` names the pairing whose sum is maximized
/// against the other two, `selection[p]` the active term of each pair
/// outside that pairing (`None` for the two pairs inside it).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseIlp {
    pub assignment: PathAssignment,
    pub largest: usize,
    pub selection: [Option<u8>; 6],
    pub model: IlpModel,
}

impl CaseIlp {
    /// Label positions `p_a..p_d` from a solution of the model.
    pub fn positions(values: &[i64]) -> [i64; 4] {
        [values[0], values[1], values[2], values[3]]
    }
}

fn pair_name(p: usize) -> String {
    let (x, y) = PAIRS[p];
    format!("{}{}", LABELS[x], LABELS[y])
}

/// Variables: positions `p_a..p_d` (indices 0..4), the two distances of the
/// maximized pairing as `e` variables bounded by every term, and the gap `t`.
/// Distances of the other four pairs are replaced by their selected term,
/// which is constrained to be the smallest.
fn build_one(pl: &Placement, largest: usize, sel: &[usize; 6]) -> CaseIlp {
    let mut m = IlpModel::default();
    for x in 0..4 {
        m.add_variable(format!("p_{}", LABELS[x]), 0, pl.len[x]);
    }
    for x in 0..4 {
        for y in 0..4 {
            if pl.assign.before(x, y) && !(0..4).any(|z| pl.assign.before(x, z) && pl.assign.before(z, y)) {
                m.add_constraint(format!("order {}<={}", LABELS[x], LABELS[y]), vec![(x, 1), (y, -1)], Sense::Le, 0);
            }
        }
    }
    let inner = [largest, 5 - largest];
    let e: Vec<usize> = inner.iter().map(|&p| m.add_variable(format!("e_{}", pair_name(p)), 0, pl.upper[p])).collect();
    for (k, &p) in inner.iter().enumerate() {
        let (x, y) = PAIRS[p];
        for (s, t) in pl.terms[p].iter().enumerate() {
            // e - cx p_x - cy p_y <= c0
            m.add_constraint(format!("e_{} <= term {s}", pair_name(p)), vec![(e[k], 1), (x, -t.cx), (y, -t.cy)], Sense::Le, t.c0);
        }
    }
    let mut selection = [None; 6];
    for p in (0..6).filter(|p| !inner.contains(p)) {
        let (x, y) = PAIRS[p];
        let s = sel[p];
        selection[p] = Some(s as u8);
        let ts = &pl.terms[p];
        for (c, t) in ts.iter().enumerate() {
            if c != s {
                m.add_constraint(
                    format!("{} term {s} <= term {c}", pair_name(p)),
                    vec![(x, ts[s].cx - t.cx), (y, ts[s].cy - t.cy)],
                    Sense::Le,
                    t.c0 - ts[s].c0,
                );
            }
        }
    }
    let t = m.add_variable("t", 0, pl.delta_upper_bound().max(0));
    for j in (0..3).filter(|&j| j != largest) {
        // t <= e1 + e2 - term(j) - term(5 - j)
        let mut coeff: BTreeMap<usize, i64> = BTreeMap::new();
        *coeff.entry(t).or_default() += 1;
        *coeff.entry(e[0]).or_default() -= 1;
        *coeff.entry(e[1]).or_default() -= 1;
        let mut rhs = 0;
        for p in [j, 5 - j] {
            let (x, y) = PAIRS[p];
            let term = pl.terms[p][sel[p]];
            *coeff.entry(x).or_default() += term.cx;
            *coeff.entry(y).or_default() += term.cy;
            rhs -= term.c0;
        }
        let terms = coeff.into_iter().filter(|&(_, c)| c != 0).collect();
        m.add_constraint(format!("t <= D{} - D{}", largest + 1, j + 1), terms, Sense::Le, rhs);
    }
    m.objective = vec![(t, 1)];
    CaseIlp { assignment: pl.assign, largest, selection, model: m }
}

/// Visit every case model of a placement, skipping term selections that can
/// never be a minimum.
pub(crate) fn for_each_case(pl: &Placement, mut visit: impl FnMut(CaseIlp)) {
    let viable: Vec<Vec<usize>> = (0..6).map(|p| pl.viable_terms(p)).collect();
    for largest in 0..3 {
        let outer: Vec<usize> = (0..6).filter(|&p| p != largest && p != 5 - largest).collect();
        if outer.iter().any(|&p| viable[p].is_empty()) {
            continue;
        }
        let mut idx = [0usize; 4];
        loop {
            let mut sel = [0usize; 6];
            for (k, &p) in outer.iter().enumerate() {
                sel[p] = viable[p][idx[k]];
            }
            visit(build_one(pl, largest, &sel));
            let mut k = 0;
            while k < 4 {
                idx[k] += 1;
                if idx[k] < viable[outer[k]].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == 4 {
                break;
            }
        }
    }
}

/// All case models of an assignment.
pub fn build_case_ilps(cover: &PathCover, assign: &PathAssignment, table: &EndpointDistanceTable) -> Vec<CaseIlp> {
    let pl = Placement::new(cover, table, *assign);
    let mut out = Vec::new();
    for_each_case(&pl, |c| out.push(c));
    out
}

/// Best `δ` over all positions of an assignment via the case ILPs, with the
/// maximizing positions. Only values above `floor` are searched for.
pub(crate) fn solve_placement_ilp<S: IlpScalar>(
    pl: &Placement,
    floor: i64,
    mut dump: Option<&mut Vec<CaseIlp>>,
    nodes: &mut usize,
) -> Option<(u64, [i64; 4])> {
    let mut best: Option<(u64, [i64; 4])> = None;
    for_each_case(pl, |case| {
        let cutoff = best.map_or(floor, |b| b.0 as i64);
        let sol = ilp::solve_with::<S>(&case.model, Some(cutoff)).expect("case models are bounded");
        *nodes += sol.nodes;
        if sol.status == IlpStatus::Optimal {
            let pos = CaseIlp::positions(&sol.values);
            let obj = sol.objective.unwrap();
            debug_assert_eq!(pl.delta(&pos) as i64, obj);
            best = Some((obj as u64, pos));
        }
        if let Some(d) = dump.as_deref_mut() {
            d.push(case);
        }
    });
    best
}

/// Public wrapper: optimum of an assignment over the case ILPs alone.
pub fn assignment_optimum_ilp(
    cover: &PathCover,
    assign: &PathAssignment,
    table: &EndpointDistanceTable,
) -> (u64, [i64; 4]) {
    let pl = Placement::new(cover, table, *assign);
    let mut nodes = 0;
    solve_placement_ilp::<ilp::Exact>(&pl, -1, None, &mut nodes).expect("t = 0 is always feasible for some case")
}

/// Vertices at the given positions.
pub fn positions_to_vertices(cover: &PathCover, assign: &PathAssignment, pos: &[i64; 4]) -> [usize; 4] {
    [0, 1, 2, 3].map(|x| cover.paths[assign.paths[x]].at(pos[x] as usize))
}
