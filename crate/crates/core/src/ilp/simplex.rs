//! Dense two-phase primal simplex with Bland's rule.

use super::scalar::IlpScalar;
use super::Sense;

pub(crate) enum LpOutcome<S> {
    Optimal { value: S, x: Vec<S> },
    Infeasible,
    Unbounded,
}

pub(crate) struct LpRow<S> {
    pub coeffs: Vec<S>,
    pub sense: Sense,
    pub rhs: S,
}

struct Tableau<S> {
    rows: Vec<Vec<S>>,
    /// Reduced costs, last entry is minus the objective value.
    obj: Vec<S>,
    basis: Vec<usize>,
    cols: usize,
}

impl<S: IlpScalar> Tableau<S> {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = v.clone() / p.clone();
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r && row[c].is_nonzero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    if pv.is_nonzero() {
                        *v = v.clone() - f.clone() * pv.clone();
                    }
                }
            }
        }
        if self.obj[c].is_nonzero() {
            let f = self.obj[c].clone();
            for (v, pv) in self.obj.iter_mut().zip(&pivot_row) {
                if pv.is_nonzero() {
                    *v = v.clone() - f.clone() * pv.clone();
                }
            }
        }
        self.basis[r] = c;
    }

    /// Load `cost` (maximize) as the objective row in terms of the current basis.
    fn set_objective(&mut self, cost: &[S]) {
        let mut obj: Vec<S> = cost.to_vec();
        obj.push(S::zero());
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = obj[b].clone();
            if cb.is_nonzero() {
                for (v, t) in obj.iter_mut().zip(&self.rows[i]) {
                    *v = v.clone() - cb.clone() * t.clone();
                }
            }
        }
        self.obj = obj;
    }

    /// Returns false if unbounded.
    fn optimize(&mut self, allowed: &[bool]) -> bool {
        loop {
            let Some(c) = (0..self.cols).find(|&j| allowed[j] && self.obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, S)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if row[c].is_positive() {
                    let ratio = row[self.cols].clone() / row[c].clone();
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (!(ratio > *br) && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            match best {
                None => return false,
                Some((r, _)) => self.pivot(r, c),
            }
        }
    }
}

/// Maximize `cost · x` subject to `rows` and `x ≥ 0`.
pub(crate) fn solve_lp<S: IlpScalar>(cost: &[S], rows: Vec<LpRow<S>>) -> LpOutcome<S> {
    let n = cost.len();
    let m = rows.len();
    let mut rows = rows;
    for row in rows.iter_mut() {
        if row.rhs.is_negative() {
            for v in row.coeffs.iter_mut() {
                *v = -v.clone();
            }
            row.rhs = -row.rhs.clone();
            row.sense = match row.sense {
                Sense::Le => Sense::Ge,
                Sense::Ge => Sense::Le,
                Sense::Eq => Sense::Eq,
            };
        }
    }
    let slack_count = rows.iter().filter(|r| r.sense != Sense::Eq).count();
    let art_count = rows.iter().filter(|r| r.sense != Sense::Le).count();
    let cols = n + slack_count + art_count;
    let art_start = n + slack_count;

    let mut tab = Tableau { rows: Vec::with_capacity(m), obj: Vec::new(), basis: Vec::with_capacity(m), cols };
    let (mut s, mut a) = (n, art_start);
    for row in rows {
        let mut t = row.coeffs;
        t.resize(cols + 1, S::zero());
        t[cols] = row.rhs;
        match row.sense {
            Sense::Le => {
                t[s] = S::one();
                tab.basis.push(s);
                s += 1;
            }
            Sense::Ge => {
                t[s] = -S::one();
                s += 1;
                t[a] = S::one();
                tab.basis.push(a);
                a += 1;
            }
            Sense::Eq => {
                t[a] = S::one();
                tab.basis.push(a);
                a += 1;
            }
        }
        tab.rows.push(t);
    }

    let mut allowed = vec![true; cols];
    if art_count > 0 {
        let phase1: Vec<S> = (0..cols).map(|j| if j >= art_start { -S::one() } else { S::zero() }).collect();
        tab.set_objective(&phase1);
        tab.optimize(&allowed);
        if tab.obj[cols].is_positive() {
            // Minus the objective: positive means some artificial stays nonzero.
            return LpOutcome::Infeasible;
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < tab.rows.len() {
            if tab.basis[i] >= art_start {
                match (0..art_start).find(|&j| tab.rows[i][j].is_nonzero()) {
                    Some(j) => {
                        tab.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        tab.rows.remove(i);
                        tab.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
        for flag in allowed.iter_mut().skip(art_start) {
            *flag = false;
        }
    }

    let mut full_cost: Vec<S> = cost.to_vec();
    full_cost.resize(cols, S::zero());
    tab.set_objective(&full_cost);
    if !tab.optimize(&allowed) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![S::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.rows[i][cols].clone();
        }
    }
    LpOutcome::Optimal { value: -tab.obj[cols].clone(), x }
}
