//! Small bounded integer programs, solved exactly by branch and bound over
//! a simplex relaxation. Generic over the relaxation's scalar; the default
//! entry points use [`Exact`] rationals.

mod scalar;
mod simplex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
pub use scalar::{Exact, IlpScalar};
use simplex::{solve_lp, LpOutcome, LpRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub lower: i64,
    pub upper: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub tag: String,
    /// Sparse `(variable, coefficient)` terms.
    pub terms: Vec<(usize, i64)>,
    pub sense: Sense,
    pub rhs: i64,
}

impl Constraint {
    pub fn new(tag: impl Into<String>, terms: Vec<(usize, i64)>, sense: Sense, rhs: i64) -> Self {
        Constraint { tag: tag.into(), terms, sense, rhs }
    }

    fn lhs(&self, values: &[i64]) -> i64 {
        self.terms.iter().map(|&(j, c)| c * values[j]).sum()
    }

    pub fn holds(&self, values: &[i64]) -> bool {
        let l = self.lhs(values);
        match self.sense {
            Sense::Le => l <= self.rhs,
            Sense::Ge => l >= self.rhs,
            Sense::Eq => l == self.rhs,
        }
    }
}

/// Maximize `objective · x + objective_constant` over integer `x` within the
/// variable boxes and constraints.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IlpModel {
    pub variables: Vec<Variable>,
    pub constraints: Vec<Constraint>,
    pub objective: Vec<(usize, i64)>,
    pub objective_constant: i64,
}

impl IlpModel {
    pub fn add_variable(&mut self, name: impl Into<String>, lower: i64, upper: i64) -> usize {
        self.variables.push(Variable { name: name.into(), lower, upper });
        self.variables.len() - 1
    }

    pub fn add_constraint(&mut self, tag: impl Into<String>, terms: Vec<(usize, i64)>, sense: Sense, rhs: i64) {
        self.constraints.push(Constraint::new(tag, terms, sense, rhs));
    }

    pub fn objective_value(&self, values: &[i64]) -> i64 {
        self.objective_constant + self.objective.iter().map(|&(j, c)| c * values[j]).sum::<i64>()
    }

    pub fn is_feasible(&self, values: &[i64]) -> bool {
        values.len() == self.variables.len()
            && self.variables.iter().zip(values).all(|(v, &x)| v.lower <= x && x <= v.upper)
            && self.constraints.iter().all(|c| c.holds(values))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IlpStatus {
    Optimal,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IlpSolution {
    pub status: IlpStatus,
    pub objective: Option<i64>,
    pub values: Vec<i64>,
    /// Relaxations solved.
    pub nodes: usize,
}

impl IlpSolution {
    fn infeasible(nodes: usize) -> Self {
        IlpSolution { status: IlpStatus::Infeasible, objective: None, values: Vec::new(), nodes }
    }
}

/// Exact optimum of `model`.
pub fn solve_fixed_dim_ilp(model: &IlpModel) -> Result<IlpSolution> {
    solve_with::<Exact>(model, None)
}

/// Branch and bound with relaxations in `S`. With a `cutoff`, only
/// solutions with objective strictly above it are searched for; if none
/// exists the result is reported infeasible.
pub fn solve_with<S: IlpScalar>(model: &IlpModel, cutoff: Option<i64>) -> Result<IlpSolution> {
    let nv = model.variables.len();
    let lo0: Vec<i64> = model.variables.iter().map(|v| v.lower).collect();
    let hi0: Vec<i64> = model.variables.iter().map(|v| v.upper).collect();
    if lo0.iter().zip(&hi0).any(|(l, h)| l > h) {
        return Ok(IlpSolution::infeasible(0));
    }
    let mut cost = vec![S::zero(); nv];
    for &(j, c) in &model.objective {
        cost[j] = cost[j].clone() + S::from_i64(c);
    }

    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut nodes = 0;
    let mut stack = vec![(lo0, hi0)];
    while let Some((lo, hi)) = stack.pop() {
        nodes += 1;
        let (value, x) = match relax::<S>(model, &cost, &lo, &hi) {
            LpOutcome::Optimal { value, x } => (value, x),
            LpOutcome::Infeasible => continue,
            LpOutcome::Unbounded => return Err(Error::Unbounded),
        };
        // All variables are integral with integer costs, so the objective is too.
        let bound = value.floor_i64() + model.objective_constant;
        let floor = best.as_ref().map(|b| b.0).or(cutoff);
        if matches!(floor, Some(f) if bound <= f) {
            continue;
        }
        match x.iter().position(|v| !v.is_integral()) {
            None => {
                let values: Vec<i64> = x.iter().zip(&lo).map(|(v, l)| v.floor_i64() + l).collect();
                let obj = model.objective_value(&values);
                debug_assert!(model.is_feasible(&values));
                if floor.is_none_or(|f| obj > f) {
                    best = Some((obj, values));
                }
            }
            Some(j) => {
                let split = x[j].floor_i64() + lo[j];
                let (mut lo_up, mut hi_down) = (lo.clone(), hi.clone());
                hi_down[j] = split;
                lo_up[j] = split + 1;
                stack.push((lo, hi_down));
                stack.push((lo_up, hi));
            }
        }
    }
    Ok(match best {
        Some((obj, values)) => IlpSolution { status: IlpStatus::Optimal, objective: Some(obj), values, nodes },
        None => IlpSolution::infeasible(nodes),
    })
}

/// LP relaxation with variables shifted to `y = x - lo ≥ 0`; the returned
/// value excludes the objective constant but includes `cost · lo`.
fn relax<S: IlpScalar>(model: &IlpModel, cost: &[S], lo: &[i64], hi: &[i64]) -> LpOutcome<S> {
    let nv = lo.len();
    let mut rows = Vec::with_capacity(model.constraints.len() + nv);
    for c in &model.constraints {
        let mut coeffs = vec![S::zero(); nv];
        let mut shift = 0i64;
        for &(j, a) in &c.terms {
            coeffs[j] = coeffs[j].clone() + S::from_i64(a);
            shift += a * lo[j];
        }
        rows.push(LpRow { coeffs, sense: c.sense, rhs: S::from_i64(c.rhs - shift) });
    }
    for j in 0..nv {
        let mut coeffs = vec![S::zero(); nv];
        coeffs[j] = S::one();
        rows.push(LpRow { coeffs, sense: Sense::Le, rhs: S::from_i64(hi[j] - lo[j]) });
    }
    match solve_lp(cost, rows) {
        LpOutcome::Optimal { value, x } => {
            let base = cost.iter().zip(lo).fold(S::zero(), |acc, (c, &l)| acc + c.clone() * S::from_i64(l));
            LpOutcome::Optimal { value: value + base, x }
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_variable() {
        let mut m = IlpModel::default();
        let p = m.add_variable("p", 0, 7);
        m.objective = vec![(p, 1)];
        let s = solve_fixed_dim_ilp(&m).unwrap();
        assert_eq!((s.status, s.objective, s.values.clone()), (IlpStatus::Optimal, Some(7), vec![7]));
    }

    #[test]
    fn difference_with_equality() {
        let mut m = IlpModel::default();
        let p = m.add_variable("p", 0, 5);
        let q = m.add_variable("q", 0, 5);
        m.add_constraint("sum", vec![(p, 1), (q, 1)], Sense::Eq, 5);
        m.objective = vec![(p, 1), (q, -1)];
        let s = solve_fixed_dim_ilp(&m).unwrap();
        assert_eq!(s.objective, Some(5));
        assert_eq!(s.values, vec![5, 0]);
    }

    #[test]
    fn needs_branching() {
        // max x + y, 2x + 2y ≤ 7 → LP 3.5, ILP 3.
        let mut m = IlpModel::default();
        let x = m.add_variable("x", 0, 10);
        let y = m.add_variable("y", 0, 10);
        m.add_constraint("cap", vec![(x, 2), (y, 2)], Sense::Le, 7);
        m.objective = vec![(x, 1), (y, 1)];
        assert_eq!(solve_fixed_dim_ilp(&m).unwrap().objective, Some(3));
        assert_eq!(solve_with::<f64>(&m, None).unwrap().objective, Some(3));
        assert_eq!(solve_with::<Exact>(&m, Some(3)).unwrap().status, IlpStatus::Infeasible);
        assert_eq!(solve_with::<Exact>(&m, Some(2)).unwrap().objective, Some(3));
    }

    #[test]
    fn negative_bounds_and_infeasible() {
        let mut m = IlpModel::default();
        let x = m.add_variable("x", -5, -1);
        m.objective = vec![(x, -1)];
        m.objective_constant = 10;
        assert_eq!(solve_fixed_dim_ilp(&m).unwrap().objective, Some(15));
        m.add_constraint("odd", vec![(x, 2)], Sense::Eq, -3);
        assert_eq!(solve_fixed_dim_ilp(&m).unwrap().status, IlpStatus::Infeasible);
    }

    #[test]
    fn model_json_round_trip() {
        let mut m = IlpModel::default();
        let x = m.add_variable("x", 0, 3);
        m.add_constraint("c", vec![(x, 1)], Sense::Le, 2);
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.contains("\"sense\":\"le\""));
        assert_eq!(serde_json::from_str::<IlpModel>(&json).unwrap(), m);
    }
}
