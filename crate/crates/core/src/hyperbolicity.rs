//! Four-point hyperbolicity and the exhaustive oracle.
//!
//! For a quadruple `a, b, c, d` the three distance sums are
//! `d(a,b)+d(c,d)`, `d(a,c)+d(b,d)` and `d(a,d)+d(b,c)`; the quadruple's
//! hyperbolicity is the gap between the two largest sums. No factor of one
//! half is applied, so values are nonnegative integers and trees score 0.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Default cap on the number of cells of the all-pairs table (128 MiB).
pub const DEFAULT_MAX_CELLS: usize = 1 << 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistanceSums {
    pub d1: Option<u64>,
    pub d2: Option<u64>,
    pub d3: Option<u64>,
}

impl DistanceSums {
    /// Sums from the six pairwise distances in the order
    /// `ab, ac, ad, bc, bd, cd`; `None` marks an infinite distance.
    pub fn from_pairs(pairs: [Option<u32>; 6]) -> DistanceSums {
        let [ab, ac, ad, bc, bd, cd] = pairs;
        let add = |x: Option<u32>, y: Option<u32>| Some(x? as u64 + y? as u64);
        DistanceSums { d1: add(ab, cd), d2: add(ac, bd), d3: add(ad, bc) }
    }

    pub fn finite(d1: u64, d2: u64, d3: u64) -> DistanceSums {
        DistanceSums { d1: Some(d1), d2: Some(d2), d3: Some(d3) }
    }
}

/// Difference of the two largest distance sums.
pub fn delta_of_sums(s: &DistanceSums) -> Result<u64> {
    match (s.d1, s.d2, s.d3) {
        (Some(a), Some(b), Some(c)) => Ok(gap_of_two_largest(a, b, c)),
        _ => Err(Error::SpansComponents),
    }
}

#[inline]
pub(crate) fn gap_of_two_largest(a: u64, b: u64, c: u64) -> u64 {
    let (hi, mid) = if a >= b { (a, b) } else { (b, a) };
    if c >= hi {
        c - hi
    } else if c >= mid {
        hi - c
    } else {
        hi - mid
    }
}

/// Hyperbolicity of a quadruple given its six pairwise distances
/// (`ab, ac, ad, bc, bd, cd`).
#[inline]
pub(crate) fn delta_of_pairs(p: [u64; 6]) -> u64 {
    gap_of_two_largest(p[0] + p[5], p[1] + p[4], p[2] + p[3])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub vertices: [usize; 4],
    pub sums: DistanceSums,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicityResult {
    pub delta: u64,
    pub witness: Option<Witness>,
}

impl HyperbolicityResult {
    pub fn zero() -> Self {
        HyperbolicityResult { delta: 0, witness: None }
    }

    /// Build a result for `quad` in `g`, recomputing its sums by BFS.
    pub fn from_quadruple(g: &Graph, quad: [usize; 4]) -> Result<Self> {
        let sums = quadruple_sums(g, quad);
        let delta = delta_of_sums(&sums)?;
        Ok(HyperbolicityResult { delta, witness: Some(Witness { vertices: quad, sums }) })
    }

    /// Recompute the witness' six distances in `g` and check they reproduce
    /// `delta`. A result without witness is consistent only when `delta == 0`.
    pub fn is_consistent(&self, g: &Graph) -> bool {
        match &self.witness {
            None => self.delta == 0,
            Some(w) => {
                if w.vertices.iter().any(|&v| v >= g.n()) {
                    return false;
                }
                let sums = quadruple_sums(g, w.vertices);
                sums == w.sums && delta_of_sums(&sums) == Ok(self.delta)
            }
        }
    }

    /// Translate witness ids through `map` (e.g. back to original ids).
    pub fn map_vertices(mut self, map: impl Fn(usize) -> usize) -> Self {
        if let Some(w) = self.witness.as_mut() {
            w.vertices = w.vertices.map(map);
        }
        self
    }

    /// Larger delta wins; ties keep the lexicographically smaller witness.
    pub fn better_of(self, other: Self) -> Self {
        use std::cmp::Ordering::*;
        match self.delta.cmp(&other.delta) {
            Greater => self,
            Less => other,
            Equal => match (&self.witness, &other.witness) {
                (Some(a), Some(b)) if b.vertices < a.vertices => other,
                (None, Some(_)) => other,
                _ => self,
            },
        }
    }
}

/// Distance sums of a quadruple computed from BFS rows in `g`.
pub fn quadruple_sums(g: &Graph, [a, b, c, d]: [usize; 4]) -> DistanceSums {
    let ra = g.bfs(a);
    let rb = g.bfs(b);
    let rc = g.bfs(c);
    DistanceSums::from_pairs([ra.get(b), ra.get(c), ra.get(d), rb.get(c), rb.get(d), rc.get(d)])
}

/// Hyperbolicity of one quadruple, read from the all-pairs table.
pub fn delta_quadruple(dm: &DistanceMatrix, a: usize, b: usize, c: usize, d: usize) -> Result<u64> {
    delta_of_sums(&matrix_sums(dm, [a, b, c, d]))
}

fn matrix_sums(dm: &DistanceMatrix, [a, b, c, d]: [usize; 4]) -> DistanceSums {
    DistanceSums::from_pairs([
        dm.get(a, b),
        dm.get(a, c),
        dm.get(a, d),
        dm.get(b, c),
        dm.get(b, d),
        dm.get(c, d),
    ])
}

#[derive(Clone, Copy, Debug)]
pub struct BruteForceOptions {
    /// Skip quadruples whose smallest pairwise distance `m` has `2m` below
    /// the best value found so far.
    pub prune: bool,
    pub max_cells: usize,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions { prune: true, max_cells: DEFAULT_MAX_CELLS }
    }
}

/// Exhaustive `O(n^4)` hyperbolicity with the default options.
pub fn brute_force_delta(g: &Graph) -> Result<HyperbolicityResult> {
    brute_force_delta_with(g, BruteForceOptions::default())
}

/// Exhaustive hyperbolicity. Quadruples spanning several components are
/// skipped, so disconnected graphs get the maximum over their components.
/// The witness is the lexicographically smallest maximizing quadruple
/// regardless of the number of worker threads.
pub fn brute_force_delta_with(g: &Graph, opts: BruteForceOptions) -> Result<HyperbolicityResult> {
    let dm = g.distance_matrix(opts.max_cells)?;
    Ok(brute_force_on_matrix(&dm, g, opts.prune))
}

pub(crate) fn brute_force_on_matrix(dm: &DistanceMatrix, g: &Graph, prune: bool) -> HyperbolicityResult {
    let components = g.connected_components();
    let best = AtomicU64::new(0);

    let mut result: Option<(u64, [usize; 4])> = None;
    for comp in components.iter().filter(|c| c.len() >= 4) {
        let local = (0..comp.len() - 3)
            .into_par_iter()
            .filter_map(|ia| scan_from(dm, comp, ia, prune, &best))
            .reduce_with(|x, y| if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { y } else { x });
        if let Some(found) = local {
            result = match result {
                Some(cur) if cur.0 > found.0 || (cur.0 == found.0 && cur.1 <= found.1) => Some(cur),
                _ => Some(found),
            };
        }
    }

    match result {
        None => HyperbolicityResult::zero(),
        Some((delta, quad)) => {
            let witness = Witness { vertices: quad, sums: matrix_sums(dm, quad) };
            HyperbolicityResult { delta, witness: Some(witness) }
        }
    }
}

/// Best quadruple whose smallest index (within `comp`) is `ia`.
fn scan_from(
    dm: &DistanceMatrix,
    comp: &[usize],
    ia: usize,
    prune: bool,
    best: &AtomicU64,
) -> Option<(u64, [usize; 4])> {
    let a = comp[ia];
    let row_a = dm.row(a);
    let mut local: Option<(u64, [usize; 4])> = None;
    let k = comp.len();
    for ib in ia + 1..k {
        let b = comp[ib];
        let dab = row_a[b] as u64;
        if prune && 2 * dab < best.load(Ordering::Relaxed) {
            continue;
        }
        let row_b = dm.row(b);
        for ic in ib + 1..k {
            let c = comp[ic];
            let dac = row_a[c] as u64;
            let dbc = row_b[c] as u64;
            let m3 = dab.min(dac).min(dbc);
            if prune && 2 * m3 < best.load(Ordering::Relaxed) {
                continue;
            }
            let row_c = dm.row(c);
            for &d in &comp[ic + 1..] {
                let dad = row_a[d] as u64;
                let dbd = row_b[d] as u64;
                let dcd = row_c[d] as u64;
                if prune {
                    let m = m3.min(dad).min(dbd).min(dcd);
                    if 2 * m < best.load(Ordering::Relaxed) {
                        continue;
                    }
                }
                let delta = gap_of_two_largest(dab + dcd, dac + dbd, dad + dbc);
                if local.is_none_or(|(bd, _)| delta > bd) {
                    local = Some((delta, [a, b, c, d]));
                    best.fetch_max(delta, Ordering::Relaxed);
                }
            }
        }
    }
    local
}

/// Check `δ(a,b,c,d) ≤ 2·min pairwise distance` for one quadruple of
/// distinct vertices. Quadruples spanning components hold vacuously.
pub fn check_lemma1(dm: &DistanceMatrix, a: usize, b: usize, c: usize, d: usize) -> bool {
    let q = [a, b, c, d];
    let Ok(delta) = delta_quadruple(dm, a, b, c, d) else {
        return true;
    };
    let mut min = u64::MAX;
    for i in 0..4 {
        for j in i + 1..4 {
            if q[i] != q[j] {
                min = min.min(dm.get(q[i], q[j]).unwrap() as u64);
            }
        }
    }
    delta <= 2 * min
}

/// When `δ(G)` equals the diameter `h`, every quadruple attaining it has two
/// disjoint pairs at distance `h` and its other four pairs at `h/2`.
/// Vacuously true otherwise.
pub fn check_lemma2(g: &Graph) -> Result<bool> {
    let dm = g.distance_matrix(DEFAULT_MAX_CELLS)?;
    let Some(h) = dm.diameter() else {
        return Ok(true);
    };
    let delta = brute_force_on_matrix(&dm, g, true).delta;
    if delta != h as u64 {
        return Ok(true);
    }
    let h = h as u64;
    for comp in g.connected_components() {
        let k = comp.len();
        for ia in 0..k {
            for ib in ia + 1..k {
                for ic in ib + 1..k {
                    for id in ic + 1..k {
                        let q = [comp[ia], comp[ib], comp[ic], comp[id]];
                        let d = |i: usize, j: usize| dm.get(q[i], q[j]).unwrap() as u64;
                        let pairs = [d(0, 1), d(0, 2), d(0, 3), d(1, 2), d(1, 3), d(2, 3)];
                        if delta_of_pairs(pairs) != h {
                            continue;
                        }
                        // Matchings: (ab,cd), (ac,bd), (ad,bc) as index pairs into `pairs`.
                        let ok = [(0, 5), (1, 4), (2, 3)].iter().any(|&(x, y)| {
                            pairs[x] == h
                                && pairs[y] == h
                                && (0..6).filter(|&i| i != x && i != y).all(|i| 2 * pairs[i] == h)
                        });
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Exhaustive reference over all ordered quadruples with no pruning.
    fn naive(g: &Graph) -> u64 {
        let dm = g.distance_matrix(usize::MAX).unwrap();
        let n = g.n();
        let mut best = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if let Ok(x) = delta_quadruple(&dm, a, b, c, d) {
                            best = best.max(x);
                        }
                    }
                }
            }
        }
        best
    }

    #[test]
    fn delta_of_sums_examples() {
        assert_eq!(delta_of_sums(&DistanceSums::finite(2, 4, 4)), Ok(0));
        assert_eq!(delta_of_sums(&DistanceSums::finite(2, 4, 2)), Ok(2));
        assert_eq!(delta_of_sums(&DistanceSums::finite(3, 4, 2)), Ok(1));
        let inf = DistanceSums { d1: None, d2: Some(1), d3: Some(1) };
        assert_eq!(delta_of_sums(&inf), Err(Error::SpansComponents));
    }

    #[test]
    fn frozen_sum_examples_match_cycles() {
        // C4 quadruple (0,1,2,3): sums (1+1, 2+2, 1+1) = (2,4,2).
        let dm = cycle(4).distance_matrix(usize::MAX).unwrap();
        assert_eq!(matrix_sums(&dm, [0, 1, 2, 3]), DistanceSums::finite(2, 4, 2));
        // C5 quadruple (0,1,2,4): (1+2, 2+2, 1+1) = (3,4,2).
        let dm = cycle(5).distance_matrix(usize::MAX).unwrap();
        assert_eq!(matrix_sums(&dm, [0, 1, 2, 4]), DistanceSums::finite(3, 4, 2));
    }

    #[test]
    fn quadruple_examples() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let dm = path.distance_matrix(usize::MAX).unwrap();
        assert_eq!(delta_quadruple(&dm, 0, 1, 2, 3), Ok(0));
        let dm = cycle(4).distance_matrix(usize::MAX).unwrap();
        assert_eq!(delta_quadruple(&dm, 0, 1, 2, 3), Ok(2));
        assert_eq!(delta_quadruple(&dm, 0, 0, 2, 3), Ok(0));
    }

    #[test]
    fn brute_force_examples() {
        let tree = Graph::from_edges(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        assert_eq!(brute_force_delta(&tree).unwrap().delta, 0);
        for (n, want) in [(4, 2), (5, 1), (6, 2)] {
            let g = cycle(n);
            let r = brute_force_delta(&g).unwrap();
            assert_eq!(r.delta, want, "C{n}");
            assert_eq!(naive(&g), want);
            assert!(r.is_consistent(&g));
        }
        let two = cycle(3).disjoint_union(&cycle(3));
        let r = brute_force_delta(&two).unwrap();
        assert_eq!(r, HyperbolicityResult::zero());
    }

    #[test]
    fn witness_is_lexicographically_smallest() {
        let g = cycle(6);
        let r = brute_force_delta(&g).unwrap();
        // Brute scan in lexicographic order without pruning.
        let dm = g.distance_matrix(usize::MAX).unwrap();
        let mut first = None;
        'outer: for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    for d in c + 1..6 {
                        if delta_quadruple(&dm, a, b, c, d).unwrap() == r.delta {
                            first = Some([a, b, c, d]);
                            break 'outer;
                        }
                    }
                }
            }
        }
        assert_eq!(r.witness.unwrap().vertices, first.unwrap());
    }

    #[test]
    fn oversize_is_rejected() {
        let g = cycle(10);
        let err = brute_force_delta_with(&g, BruteForceOptions { prune: true, max_cells: 99 }).unwrap_err();
        assert_eq!(err, Error::InstanceTooLarge { cells: 100, cap: 99 });
    }

    #[test]
    fn lemma_checks() {
        let dm = cycle(4).distance_matrix(usize::MAX).unwrap();
        assert!(check_lemma1(&dm, 0, 1, 2, 3));
        assert!(check_lemma2(&cycle(4)).unwrap());
        let path = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert!(check_lemma2(&path).unwrap());
    }
}
