//! Dense two-phase simplex over exact rationals with Bland's rule.
//!
//! All variables are nonnegative. Problems here have a handful of variables
//! and at most a few dozen constraints, so a dense tableau is plenty.

use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> Self {
        Self { coeffs, relation, rhs }
    }
}

/// `minimize ⟨objective, x⟩` subject to the constraints and `x >= 0`.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome {
    Optimal {
        point: Vec<Rational>,
        value: Rational,
    },
    Infeasible,
    /// `point + t·direction` is feasible for all `t >= 0` and the objective
    /// decreases strictly along `direction`.
    Unbounded {
        point: Vec<Rational>,
        direction: Vec<Rational>,
    },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    /// Columns that may enter the basis.
    allowed: Vec<bool>,
}

enum Step {
    Optimal,
    Unbounded(usize),
}

impl Tableau {
    fn width(&self) -> usize {
        self.allowed.len()
    }

    fn rhs(&self, row: usize) -> &Rational {
        &self.rows[row][self.width()]
    }

    fn reduced_cost(&self, cost: &[Rational], col: usize) -> Rational {
        let mut r = cost[col].clone();
        for (i, &b) in self.basis.iter().enumerate() {
            if !cost[b].is_zero() && !self.rows[i][col].is_zero() {
                r -= &cost[b] * &self.rows[i][col];
            }
        }
        r
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for x in self.rows[row].iter_mut() {
            *x /= &p;
        }
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            if i == row || r[col].is_zero() {
                continue;
            }
            let factor = r[col].clone();
            for (x, y) in r.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        self.basis[row] = col;
    }

    fn run(&mut self, cost: &[Rational]) -> Step {
        loop {
            // Bland: lowest-index improving column, then lowest-index basic
            // variable among the ratio-test ties.
            let entering = (0..self.width())
                .filter(|&j| self.allowed[j] && !self.basis.contains(&j))
                .find(|&j| self.reduced_cost(cost, j).is_negative());
            let Some(col) = entering else {
                return Step::Optimal;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((row, _)) => self.pivot(row, col),
                None => return Step::Unbounded(col),
            }
        }
    }

    fn solution(&self, n: usize) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); n];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < n {
                x[b] = self.rhs(i).clone();
            }
        }
        x
    }
}

impl LinearProgram {
    pub fn new(num_vars: usize, objective: Vec<Rational>) -> Self {
        assert_eq!(objective.len(), num_vars);
        Self {
            num_vars,
            objective,
            constraints: Vec::new(),
        }
    }

    pub fn add(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars);
        self.constraints.push(Constraint::new(coeffs, relation, rhs));
        self
    }

    pub fn solve(&self) -> LpOutcome {
        let n = self.num_vars;
        let m = self.constraints.len();

        // Normalize to nonnegative right-hand sides.
        let normalized: Vec<(Vec<Rational>, Relation, Rational)> = self
            .constraints
            .iter()
            .map(|c| {
                if c.rhs.is_negative() {
                    let rel = match c.relation {
                        Relation::Le => Relation::Ge,
                        Relation::Ge => Relation::Le,
                        Relation::Eq => Relation::Eq,
                    };
                    (c.coeffs.iter().map(|x| -x).collect(), rel, -&c.rhs)
                } else {
                    (c.coeffs.clone(), c.relation, c.rhs.clone())
                }
            })
            .collect();

        let num_slack = normalized.iter().filter(|c| c.1 != Relation::Eq).count();
        let num_art = normalized.iter().filter(|c| c.1 != Relation::Le).count();
        let width = n + num_slack + num_art;
        let art_start = n + num_slack;

        let mut rows = Vec::with_capacity(m);
        let mut basis = Vec::with_capacity(m);
        let (mut slack, mut art) = (n, art_start);
        for (coeffs, rel, rhs) in normalized {
            let mut row = vec![Rational::zero(); width + 1];
            row[..n].clone_from_slice(&coeffs);
            row[width] = rhs;
            match rel {
                Relation::Le => {
                    row[slack] = Rational::one();
                    basis.push(slack);
                    slack += 1;
                }
                Relation::Ge => {
                    row[slack] = -Rational::one();
                    slack += 1;
                    row[art] = Rational::one();
                    basis.push(art);
                    art += 1;
                }
                Relation::Eq => {
                    row[art] = Rational::one();
                    basis.push(art);
                    art += 1;
                }
            }
            rows.push(row);
        }

        let mut tableau = Tableau {
            rows,
            basis,
            allowed: vec![true; width],
        };

        if num_art > 0 {
            let mut phase1 = vec![Rational::zero(); width];
            for c in phase1.iter_mut().skip(art_start) {
                *c = Rational::one();
            }
            // Phase one is bounded below by zero.
            let _ = tableau.run(&phase1);
            let infeasibility: Rational = tableau
                .basis
                .iter()
                .enumerate()
                .filter(|(_, &b)| b >= art_start)
                .map(|(i, _)| tableau.rhs(i).clone())
                .sum();
            if infeasibility.is_positive() {
                return LpOutcome::Infeasible;
            }
            // Drive remaining (zero-valued) artificials out of the basis.
            let mut row = 0;
            while row < tableau.rows.len() {
                if tableau.basis[row] >= art_start {
                    match (0..art_start).find(|&j| !tableau.rows[row][j].is_zero()) {
                        Some(col) => tableau.pivot(row, col),
                        None => {
                            // Redundant equality.
                            tableau.rows.remove(row);
                            tableau.basis.remove(row);
                            continue;
                        }
                    }
                }
                row += 1;
            }
            for a in tableau.allowed.iter_mut().skip(art_start) {
                *a = false;
            }
        }

        let mut cost = vec![Rational::zero(); width];
        cost[..n].clone_from_slice(&self.objective);
        match tableau.run(&cost) {
            Step::Optimal => {
                let point = tableau.solution(n);
                let value = point.iter().zip(&self.objective).map(|(x, c)| x * c).sum();
                LpOutcome::Optimal { point, value }
            }
            Step::Unbounded(col) => {
                let point = tableau.solution(n);
                let mut direction = vec![Rational::zero(); width];
                direction[col] = Rational::one();
                for (i, &b) in tableau.basis.iter().enumerate() {
                    direction[b] = -&tableau.rows[i][col];
                }
                direction.truncate(n);
                LpOutcome::Unbounded { point, direction }
            }
        }
    }
}
