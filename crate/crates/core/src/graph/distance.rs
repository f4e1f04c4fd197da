use rayon::prelude::*;

use super::Graph;
use crate::error::{Error, Result};

/// Marker for unreachable vertices in a [`DistanceRow`].
pub const INFINITY: u32 = u32::MAX;

/// Single-source BFS distances; `INFINITY` marks other components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceRow {
    source: usize,
    distances: Vec<u32>,
}

impl DistanceRow {
    pub(crate) fn new(source: usize, distances: Vec<u32>) -> Self {
        DistanceRow { source, distances }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn get(&self, v: usize) -> Option<u32> {
        match self.distances[v] {
            INFINITY => None,
            d => Some(d),
        }
    }

    /// Raw entry, `INFINITY` for unreachable.
    pub fn raw(&self, v: usize) -> u32 {
        self.distances[v]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.distances
    }

    pub fn to_options(&self) -> Vec<Option<u32>> {
        (0..self.distances.len()).map(|v| self.get(v)).collect()
    }

    pub fn len(&self) -> usize {
        self.distances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distances.is_empty()
    }
}

/// Dense symmetric all-pairs table with 16-bit cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    cells: Vec<u16>,
}

const CELL_INFINITY: u16 = u16::MAX;

impl DistanceMatrix {
    pub fn from_graph(g: &Graph, max_cells: usize) -> Result<Self> {
        let n = g.n();
        let cells = n.saturating_mul(n);
        if cells > max_cells {
            return Err(Error::InstanceTooLarge { cells, cap: max_cells });
        }
        let rows: Vec<Vec<u16>> = (0..n)
            .into_par_iter()
            .map(|s| {
                g.bfs(s)
                    .as_slice()
                    .iter()
                    .map(|&d| match d {
                        INFINITY => CELL_INFINITY,
                        d => {
                            assert!(d < CELL_INFINITY as u32, "distance {d} overflows matrix cell");
                            d as u16
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(DistanceMatrix { n, cells: rows.concat() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> Option<u32> {
        match self.cells[u * self.n + v] {
            CELL_INFINITY => None,
            d => Some(d as u32),
        }
    }

    #[inline]
    pub(crate) fn row(&self, u: usize) -> &[u16] {
        &self.cells[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> Option<u32> {
        self.cells.iter().filter(|&&d| d != CELL_INFINITY).map(|&d| d as u32).max()
    }
}
