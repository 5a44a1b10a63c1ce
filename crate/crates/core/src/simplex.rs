//! Exact two-phase simplex over rationals.
//!
//! Small dense problems only; every pivot uses Bland's rule (lowest eligible
//! index enters, ratio ties resolved toward the lowest basic index), which
//! rules out cycling and makes every solution deterministic. All variables
//! are nonnegative; callers split free variables into differences.

use num::{Signed, Zero};

use crate::rational::Rational;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Rel {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug)]
pub(crate) struct Constraint {
    pub coeffs: Vec<Rational>,
    pub rel: Rel,
    pub rhs: Rational,
}

impl Constraint {
    pub fn new(coeffs: Vec<Rational>, rel: Rel, rhs: Rational) -> Self {
        Constraint { coeffs, rel, rhs }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Outcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// m rows of length ncols + 1; the right-hand side sits last.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.ncols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].clone().recip();
        for v in self.rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..self.rows.len() {
            if i != r && !self.rows[i][c].is_zero() {
                let f = self.rows[i][c].clone();
                for j in 0..=self.ncols {
                    let d = &f * &self.rows[r][j];
                    self.rows[i][j] = &self.rows[i][j] - &d;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Maximizes `c . x` from the current feasible dictionary.
    /// Returns false when the objective is unbounded above.
    fn optimize(&mut self, c: &[Rational]) -> bool {
        loop {
            let mut entering = None;
            for j in 0..self.ncols {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut reduced = c[j].clone();
                for (i, &b) in self.basis.iter().enumerate() {
                    if !c[b].is_zero() && !self.rows[i][j].is_zero() {
                        reduced -= &c[b] * &self.rows[i][j];
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(col) = entering else { return true };

            let mut leave: Option<usize> = None;
            let mut best: Option<Rational> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][col].is_positive() {
                    let ratio = self.rhs(i) / &self.rows[i][col];
                    let better = match (&best, leave) {
                        (None, _) => true,
                        (Some(b), Some(l)) => {
                            ratio < *b || (ratio == *b && self.basis[i] < self.basis[l])
                        }
                        _ => unreachable!(),
                    };
                    if better {
                        best = Some(ratio);
                        leave = Some(i);
                    }
                }
            }
            match leave {
                Some(row) => self.pivot(row, col),
                None => return false,
            }
        }
    }
}

/// Maximizes `objective . x` subject to the constraints and `x >= 0`.
pub(crate) fn maximize(objective: &[Rational], constraints: &[Constraint]) -> Outcome {
    let n = objective.len();
    let mut normalized: Vec<(Vec<Rational>, Rel, Rational)> = Vec::new();
    for c in constraints {
        assert_eq!(c.coeffs.len(), n, "constraint width mismatch");
        if c.rhs.is_negative() {
            let flipped = match c.rel {
                Rel::Le => Rel::Ge,
                Rel::Eq => Rel::Eq,
                Rel::Ge => Rel::Le,
            };
            normalized.push((
                c.coeffs.iter().map(|v| -v).collect(),
                flipped,
                -c.rhs.clone(),
            ));
        } else {
            normalized.push((c.coeffs.clone(), c.rel, c.rhs.clone()));
        }
    }

    let m = normalized.len();
    let n_slack = normalized
        .iter()
        .filter(|(_, rel, _)| *rel != Rel::Eq)
        .count();
    let n_art = normalized
        .iter()
        .filter(|(_, rel, _)| *rel != Rel::Le)
        .count();
    let slack_start = n;
    let art_start = n + n_slack;
    let total = n + n_slack + n_art;

    let mut rows = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_slack = slack_start;
    let mut next_art = art_start;
    for (coeffs, rel, rhs) in &normalized {
        let mut row = vec![Rational::zero(); total + 1];
        row[..n].clone_from_slice(coeffs);
        row[total] = rhs.clone();
        match rel {
            Rel::Le => {
                row[next_slack] = crate::rational::int(1);
                basis.push(next_slack);
                next_slack += 1;
            }
            Rel::Ge => {
                row[next_slack] = crate::rational::int(-1);
                next_slack += 1;
                row[next_art] = crate::rational::int(1);
                basis.push(next_art);
                next_art += 1;
            }
            Rel::Eq => {
                row[next_art] = crate::rational::int(1);
                basis.push(next_art);
                next_art += 1;
            }
        }
        rows.push(row);
    }

    let mut t = Tableau {
        rows,
        basis,
        ncols: total,
    };

    if n_art > 0 {
        let mut phase1 = vec![Rational::zero(); total];
        for c in phase1.iter_mut().skip(art_start) {
            *c = crate::rational::int(-1);
        }
        let bounded = t.optimize(&phase1);
        assert!(bounded, "phase one objective is bounded by construction");
        let infeasibility: Rational = t
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= art_start)
            .map(|(i, _)| t.rhs(i).clone())
            .sum();
        if !infeasibility.is_zero() {
            return Outcome::Infeasible;
        }
        // Drive remaining artificials out of the basis; degenerate rows with
        // no real coefficient are redundant and dropped.
        let mut drop_rows = Vec::new();
        for i in 0..t.rows.len() {
            if t.basis[i] >= art_start {
                match (0..art_start).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => drop_rows.push(i),
                }
            }
        }
        for &i in drop_rows.iter().rev() {
            t.rows.remove(i);
            t.basis.remove(i);
        }
        for row in &mut t.rows {
            let rhs = row[total].clone();
            row.truncate(art_start);
            row.push(rhs);
        }
        t.ncols = art_start;
    }

    let mut phase2 = vec![Rational::zero(); t.ncols];
    phase2[..n].clone_from_slice(objective);
    if !t.optimize(&phase2) {
        return Outcome::Unbounded;
    }

    let mut x = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rhs(i).clone();
        }
    }
    let value = objective
        .iter()
        .zip(&x)
        .map(|(c, v)| c * v)
        .sum();
    Outcome::Optimal { value, x }
}

/// Feasibility of `{sum_j coeffs[j] x_j = rhs, x >= 0}`; returns a witness.
pub(crate) fn feasible_point(rows: &[(Vec<Rational>, Rational)]) -> Option<Vec<Rational>> {
    let n = rows.first().map_or(0, |(c, _)| c.len());
    let constraints: Vec<Constraint> = rows
        .iter()
        .map(|(c, b)| Constraint::new(c.clone(), Rel::Eq, b.clone()))
        .collect();
    match maximize(&vec![Rational::zero(); n], &constraints) {
        Outcome::Optimal { x, .. } => Some(x),
        Outcome::Infeasible => None,
        Outcome::Unbounded => unreachable!("constant objective cannot be unbounded"),
    }
}
