//! Dense two-phase simplex method over exact rationals.
//!
//! Problems are `maximize c.x` subject to `A x = b`, `x >= 0`. Bland's rule is
//! used for both entering and leaving variables, so degenerate pivots cannot
//! cycle. Intended for the tiny systems produced by the face-to-face test.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: BigRational, x: Vec<BigRational> },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    basis: Vec<usize>,
    /// Reduced costs `z_j - c_j`.
    reduced: Vec<BigRational>,
    value: BigRational,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.rows[row][col].recip();
        for x in self.rows[row].iter_mut() {
            *x *= &inv;
        }
        self.rhs[row] *= &inv;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let factor = self.rows[r][col].clone();
            for (x, p) in self.rows[r].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
            self.rhs[r] -= &factor * &pivot_rhs;
        }
        if !self.reduced[col].is_zero() {
            let factor = self.reduced[col].clone();
            for (x, p) in self.reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
            self.value -= &factor * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    fn reset_objective(&mut self, cost: &[BigRational]) {
        let width = cost.len();
        self.reduced = (0..width).map(|j| -cost[j].clone()).collect();
        self.value = BigRational::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for j in 0..width {
                self.reduced[j] += cb * &self.rows[r][j];
            }
            self.value += cb * &self.rhs[r];
        }
    }

    /// Runs Bland pivots over columns `< active`. Returns false if unbounded.
    fn optimize(&mut self, active: usize) -> bool {
        loop {
            let Some(col) = (0..active).find(|&j| self.reduced[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &best {
                    None => true,
                    Some((br, bv)) => ratio < *bv || (ratio == *bv && self.basis[r] < self.basis[*br]),
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, col),
                None => return false,
            }
        }
    }
}

/// Maximizes `c.x` subject to `A x = b`, `x >= 0`.
pub fn maximize(a: &[Vec<BigRational>], b: &[BigRational], c: &[BigRational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (i, row) in a.iter().enumerate() {
        debug_assert_eq!(row.len(), n);
        let flip = b[i].is_negative();
        let mut full: Vec<BigRational> = row.iter().map(|x| if flip { -x.clone() } else { x.clone() }).collect();
        full.extend((0..m).map(|k| if k == i { BigRational::one() } else { BigRational::zero() }));
        rows.push(full);
        rhs.push(if flip { -b[i].clone() } else { b[i].clone() });
    }
    let mut t = Tableau { rows, rhs, basis: (n..n + m).collect(), reduced: Vec::new(), value: BigRational::zero() };

    // Phase 1: maximize minus the sum of artificials.
    let phase1: Vec<BigRational> = (0..n + m).map(|j| if j < n { BigRational::zero() } else { -BigRational::one() }).collect();
    t.reset_objective(&phase1);
    t.optimize(n + m);
    if t.value.is_negative() {
        return LpOutcome::Infeasible;
    }

    // Drive remaining artificials out of the basis; drop redundant rows.
    let mut r = 0;
    while r < t.rows.len() {
        if t.basis[r] >= n {
            match (0..n).find(|&j| !t.rows[r][j].is_zero()) {
                Some(col) => t.pivot(r, col),
                None => {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                    continue;
                }
            }
        }
        r += 1;
    }
    for row in t.rows.iter_mut() {
        row.truncate(n);
    }

    t.reset_objective(c);
    if !t.optimize(n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![BigRational::zero(); n];
    for (r, &j) in t.basis.iter().enumerate() {
        x[j] = t.rhs[r].clone();
    }
    LpOutcome::Optimal { value: t.value, x }
}

/// Convenience wrapper for integer data.
pub fn maximize_int(a: &[Vec<i64>], b: &[i64], c: &[i64]) -> LpOutcome {
    let q = |x: &i64| BigRational::from_integer(BigInt::from(*x));
    let a: Vec<Vec<BigRational>> = a.iter().map(|row| row.iter().map(q).collect()).collect();
    let b: Vec<BigRational> = b.iter().map(q).collect();
    let c: Vec<BigRational> = c.iter().map(q).collect();
    maximize(&a, &b, &c)
}
