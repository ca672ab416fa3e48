//! Dense two-phase simplex over exact rationals.
//!
//! All variables are nonnegative; callers model free quantities by shifting or
//! splitting. Bland's anti-cycling rule keeps the method finite, which matters
//! because exact arithmetic makes degenerate ties commonplace. This is not a
//! performance-oriented solver: the systems it sees (weightedness certificates,
//! linearized index models on at most three voters) stay well under a few
//! hundred rows.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<BigRational>,
    pub cmp: Cmp,
    pub rhs: BigRational,
}

#[derive(Debug, Clone, Default)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Infeasible,
    Unbounded,
    Optimal {
        value: BigRational,
        point: Vec<BigRational>,
    },
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            constraints: Vec::new(),
        }
    }

    /// Add `coeffs · x cmp rhs`; `coeffs` may be shorter than `num_vars`
    /// (missing entries are zero).
    pub fn push(&mut self, mut coeffs: Vec<BigRational>, cmp: Cmp, rhs: BigRational) {
        assert!(coeffs.len() <= self.num_vars, "constraint wider than program");
        coeffs.resize(self.num_vars, BigRational::zero());
        self.constraints.push(Constraint { coeffs, cmp, rhs });
    }

    /// Sparse form of `push`: pairs (variable index, coefficient).
    pub fn push_sparse(&mut self, terms: &[(usize, BigRational)], cmp: Cmp, rhs: BigRational) {
        let mut coeffs = vec![BigRational::zero(); self.num_vars];
        for (j, c) in terms {
            assert!(*j < self.num_vars);
            coeffs[*j] += c;
        }
        self.constraints.push(Constraint { coeffs, cmp, rhs });
    }

    /// Any point satisfying all constraints, or None.
    pub fn feasible_point(&self) -> Option<Vec<BigRational>> {
        match self.minimize(&vec![BigRational::zero(); self.num_vars]) {
            Solution::Optimal { point, .. } => Some(point),
            // a zero objective cannot be unbounded below
            _ => None,
        }
    }

    pub fn minimize(&self, objective: &[BigRational]) -> Solution {
        Tableau::solve(self, objective, false)
    }

    pub fn maximize(&self, objective: &[BigRational]) -> Solution {
        match Tableau::solve(self, objective, true) {
            Solution::Optimal { value, point } => Solution::Optimal {
                value: -value,
                point,
            },
            other => other,
        }
    }
}

struct Tableau {
    /// rows[r] has length width+1; the last column is the rhs.
    rows: Vec<Vec<BigRational>>,
    basis: Vec<usize>,
    width: usize,
    /// variables barred from entering the basis (retired artificials)
    barred: Vec<bool>,
}

impl Tableau {
    fn solve(lp: &LinearProgram, objective: &[BigRational], negate: bool) -> Solution {
        assert_eq!(objective.len(), lp.num_vars);
        let m = lp.constraints.len();
        let n = lp.num_vars;

        // count auxiliary columns
        let mut num_slack = 0;
        let mut num_art = 0;
        for c in &lp.constraints {
            let flipped = c.rhs.is_negative();
            let cmp = effective_cmp(c.cmp, flipped);
            match cmp {
                Cmp::Le => num_slack += 1,
                Cmp::Ge => {
                    num_slack += 1;
                    num_art += 1;
                }
                Cmp::Eq => num_art += 1,
            }
        }
        let width = n + num_slack + num_art;
        let mut rows = Vec::with_capacity(m);
        let mut basis = vec![0usize; m];
        let mut slack_at = n;
        let mut art_at = n + num_slack;

        for (r, c) in lp.constraints.iter().enumerate() {
            let flipped = c.rhs.is_negative();
            let mut row = vec![BigRational::zero(); width + 1];
            for (j, a) in c.coeffs.iter().enumerate() {
                row[j] = if flipped { -a } else { a.clone() };
            }
            row[width] = if flipped { -&c.rhs } else { c.rhs.clone() };
            match effective_cmp(c.cmp, flipped) {
                Cmp::Le => {
                    row[slack_at] = BigRational::one();
                    basis[r] = slack_at;
                    slack_at += 1;
                }
                Cmp::Ge => {
                    row[slack_at] = -BigRational::one();
                    slack_at += 1;
                    row[art_at] = BigRational::one();
                    basis[r] = art_at;
                    art_at += 1;
                }
                Cmp::Eq => {
                    row[art_at] = BigRational::one();
                    basis[r] = art_at;
                    art_at += 1;
                }
            }
            rows.push(row);
        }

        let mut t = Tableau {
            rows,
            basis,
            width,
            barred: vec![false; width],
        };

        // Phase I: minimize the sum of artificials.
        if num_art > 0 {
            let mut phase1 = vec![BigRational::zero(); width];
            for c in phase1.iter_mut().take(n + num_slack + num_art).skip(n + num_slack) {
                *c = BigRational::one();
            }
            match t.optimize(&phase1) {
                Some(v) if v.is_zero() => {}
                Some(_) => return Solution::Infeasible,
                None => unreachable!("phase-1 objective is bounded below by 0"),
            }
            // pivot remaining artificials out of the basis where possible
            for r in 0..m {
                if t.basis[r] >= n + num_slack {
                    if let Some(j) = (0..n + num_slack)
                        .find(|&j| !t.rows[r][j].is_zero())
                    {
                        t.pivot(r, j);
                    }
                    // a fully zero row is a redundant constraint; its artificial
                    // stays basic at value 0, which is harmless once barred
                }
            }
            for j in n + num_slack..width {
                t.barred[j] = true;
            }
        }

        // Phase II
        let mut phase2 = vec![BigRational::zero(); width];
        for (j, c) in objective.iter().enumerate() {
            phase2[j] = if negate { -c } else { c.clone() };
        }
        match t.optimize(&phase2) {
            None => Solution::Unbounded,
            Some(value) => {
                let mut point = vec![BigRational::zero(); n];
                for (r, &b) in t.basis.iter().enumerate() {
                    if b < n {
                        point[b] = t.rows[r][t.width].clone();
                    }
                }
                Solution::Optimal { value, point }
            }
        }
    }

    /// Minimize `cost · x` from the current basic feasible point.
    /// Returns the optimum, or None when unbounded below.
    fn optimize(&mut self, cost: &[BigRational]) -> Option<BigRational> {
        loop {
            // reduced costs: z_j = cost_j - cost_B · B^{-1} A_j, computed
            // directly from the tableau rows (which already hold B^{-1} A)
            let mut entering = None;
            'cols: for j in 0..self.width {
                if self.barred[j] || self.basis.contains(&j) {
                    continue;
                }
                let mut red = cost[j].clone();
                for (r, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() && !self.rows[r][j].is_zero() {
                        red -= &cost[b] * &self.rows[r][j];
                    }
                }
                if red.is_negative() {
                    entering = Some(j);
                    break 'cols; // Bland: first improving column
                }
            }
            let Some(j) = entering else {
                let mut value = BigRational::zero();
                for (r, &b) in self.basis.iter().enumerate() {
                    if !cost[b].is_zero() {
                        value += &cost[b] * &self.rows[r][self.width];
                    }
                }
                return Some(value);
            };

            // ratio test, Bland tie-break on the smallest basic variable index
            let mut leave: Option<(usize, BigRational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][j];
                if a.is_positive() {
                    let ratio = &self.rows[r][self.width] / a;
                    let better = match &leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < *lratio
                                || (ratio == *lratio && self.basis[r] < self.basis[*lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            let Some((r, _)) = leave else {
                return None;
            };
            self.pivot(r, j);
        }
    }

    fn pivot(&mut self, r: usize, j: usize) {
        let piv = self.rows[r][j].clone();
        debug_assert!(!piv.is_zero());
        for c in self.rows[r].iter_mut() {
            *c /= &piv;
        }
        for rr in 0..self.rows.len() {
            if rr == r {
                continue;
            }
            let factor = self.rows[rr][j].clone();
            if factor.is_zero() {
                continue;
            }
            for c in 0..=self.width {
                let delta = &factor * &self.rows[r][c];
                self.rows[rr][c] -= delta;
            }
        }
        self.basis[r] = j;
    }
}

fn effective_cmp(cmp: Cmp, flipped: bool) -> Cmp {
    if !flipped {
        return cmp;
    }
    match cmp {
        Cmp::Le => Cmp::Ge,
        Cmp::Ge => Cmp::Le,
        Cmp::Eq => Cmp::Eq,
    }
}
