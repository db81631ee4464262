//! Exact rational linear algebra for the polytope machinery: square-system
//! solving by Gaussian elimination and linear feasibility by Fourier-Motzkin
//! elimination. Dimensions are at most 8, so the doubly exponential worst
//! case of Fourier-Motzkin never bites; rows are kept as gcd-normalized
//! integer vectors to tame growth.

use std::collections::HashSet;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use crate::rational::Rat;

/// Solves `A x = b` over the rationals; `None` when `A` is singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for c in col..=n {
            m[col][c] = &m[col][c] / &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let sub = &m[col][c] * &f;
                    m[r][c] -= sub;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[row.len() - 1].clone()).collect())
}

/// One inequality `sum coeffs[i] * x_i <= bound` with integer data.
type IntRow = (Vec<BigInt>, BigInt);

fn normalize(mut row: IntRow) -> IntRow {
    let mut g = row.1.abs();
    for c in &row.0 {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut row.0 {
            *c = &*c / &g;
        }
        row.1 = &row.1 / &g;
    }
    row
}

fn integerize(rows: &[(Vec<Rat>, Rat)]) -> Vec<IntRow> {
    rows.iter()
        .map(|(coeffs, bound)| {
            let mut lcm = bound.denom().clone();
            for c in coeffs {
                lcm = lcm.lcm(c.denom());
            }
            let scale = |r: &Rat| -> BigInt { r.numer() * (&lcm / r.denom()) };
            normalize((coeffs.iter().map(scale).collect(), scale(bound)))
        })
        .collect()
}

/// Decides whether the closed system `sum coeffs[i] * x_i <= bound` (one row
/// each) has a solution.
pub fn fm_feasible(rows: &[(Vec<Rat>, Rat)]) -> bool {
    let dim = rows.first().map_or(0, |(c, _)| c.len());
    let mut system = integerize(rows);
    for _ in 0..dim {
        // eliminate the variable with the fewest pair combinations
        let live = system.first().map_or(0, |(c, _)| c.len());
        if live == 0 {
            break;
        }
        let mut best_var = 0;
        let mut best_cost = usize::MAX;
        for v in 0..live {
            let pos = system.iter().filter(|(c, _)| c[v].is_positive()).count();
            let neg = system.iter().filter(|(c, _)| c[v].is_negative()).count();
            let cost = pos * neg + pos + neg;
            if cost < best_cost {
                best_cost = cost;
                best_var = v;
            }
        }
        let v = best_var;
        let mut next: Vec<IntRow> = Vec::new();
        let mut seen: HashSet<(Vec<BigInt>, BigInt)> = HashSet::new();
        let mut push = |row: IntRow, next: &mut Vec<IntRow>| {
            let row = normalize(row);
            if row.0.iter().all(Zero::is_zero) {
                // constant row: keep only if contradictory, detected below
                if row.1.is_negative() {
                    next.push(row);
                }
                return;
            }
            if seen.insert((row.0.clone(), row.1.clone())) {
                next.push(row);
            }
        };
        let drop_var = |c: &[BigInt]| -> Vec<BigInt> {
            c.iter().enumerate().filter(|&(k, _)| k != v).map(|(_, x)| x.clone()).collect()
        };
        for (c, b) in system.iter().filter(|(c, _)| c[v].is_zero()) {
            push((drop_var(c), b.clone()), &mut next);
        }
        let positives: Vec<&IntRow> = system.iter().filter(|(c, _)| c[v].is_positive()).collect();
        let negatives: Vec<&IntRow> = system.iter().filter(|(c, _)| c[v].is_negative()).collect();
        for (pc, pb) in &positives {
            for (nc, nb) in &negatives {
                let a = -&nc[v]; // positive
                let d = &pc[v]; // positive
                let combo: Vec<BigInt> = pc
                    .iter()
                    .zip(nc.iter())
                    .enumerate()
                    .filter(|&(k, _)| k != v)
                    .map(|(_, (p, n))| &a * p + d * n)
                    .collect();
                let bound = &a * pb + d * nb;
                push((combo, bound), &mut next);
            }
        }
        system = next;
        if system.iter().any(|(c, b)| c.iter().all(Zero::is_zero) && b.is_negative()) {
            return false;
        }
    }
    system.iter().all(|(c, b)| !(c.iter().all(Zero::is_zero) && b.is_negative()))
}
