//! Small exact integer-matrix kernels: Hermite normal form for lattice bases,
//! Smith normal form for invariant factors, and integer solving against a
//! triangular basis. Inputs here are tiny (rank at most 8, entries of the size
//! of Cartan data), so the plain Euclidean algorithms are the right tool.

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns the canonical echelon basis: pivots positive, zeros below each
/// pivot, entries above a pivot reduced into `[0, pivot)`. Zero rows are
/// dropped, so a full-rank input in dimension `n` yields an `n x n` upper
/// triangular matrix.
pub fn hnf(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<i64>> = rows.to_vec();
    let mut pivot_row = 0;
    for col in 0..cols {
        loop {
            let mut best: Option<usize> = None;
            for r in pivot_row..m.len() {
                if m[r][col] != 0 && best.is_none_or(|b| m[r][col].abs() < m[b][col].abs()) {
                    best = Some(r);
                }
            }
            let Some(best) = best else { break };
            m.swap(pivot_row, best);
            let mut done = true;
            for r in pivot_row + 1..m.len() {
                if m[r][col] != 0 {
                    let q = m[r][col] / m[pivot_row][col];
                    for c in 0..cols {
                        m[r][c] -= q * m[pivot_row][c];
                    }
                    if m[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if pivot_row < m.len() && m[pivot_row][col] != 0 {
            if m[pivot_row][col] < 0 {
                for c in 0..cols {
                    m[pivot_row][c] = -m[pivot_row][c];
                }
            }
            let p = m[pivot_row][col];
            for r in 0..pivot_row {
                let q = m[r][col].div_euclid(p);
                if q != 0 {
                    for c in 0..cols {
                        m[r][c] -= q * m[pivot_row][c];
                    }
                }
            }
            pivot_row += 1;
        }
    }
    m.truncate(pivot_row);
    m
}

/// Solves `x * basis = target` over the integers, where `basis` is a
/// full-rank HNF as produced by [`hnf`]. Returns `None` when `target` is not
/// in the row lattice.
pub fn solve_in_lattice(basis: &[Vec<i64>], target: &[i64]) -> Option<Vec<i64>> {
    let n = target.len();
    assert_eq!(basis.len(), n, "basis must be full rank");
    let mut residual = target.to_vec();
    let mut x = vec![0i64; n];
    for i in 0..n {
        let p = basis[i][i];
        debug_assert!(p > 0);
        if residual[i] % p != 0 {
            return None;
        }
        x[i] = residual[i] / p;
        for c in 0..n {
            residual[c] -= x[i] * basis[i][c];
        }
    }
    residual.iter().all(|&v| v == 0).then_some(x)
}

/// Determinant of a square HNF basis: the product of the diagonal.
pub fn hnf_det(basis: &[Vec<i64>]) -> i64 {
    basis.iter().enumerate().map(|(i, row)| row[i]).product()
}

/// Invariant factors of the cokernel of a nonsingular integer matrix,
/// computed via Smith normal form. Trivial factors (1) are omitted, the rest
/// appear in divisibility order d_1 | d_2 | ...
pub fn snf_invariant_factors(mat: &[Vec<i64>]) -> Vec<u64> {
    let mut m: Vec<Vec<i64>> = mat.to_vec();
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let steps = rows.min(cols);
    for t in 0..steps {
        'outer: loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if m[i][j] != 0
                        && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = m[i][t] / m[t][t];
                    for c in t..cols {
                        m[i][c] -= q * m[t][c];
                    }
                    if m[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = m[t][j] / m[t][t];
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                    if m[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // Enforce the divisibility chain on the remaining block.
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if m[i][j] % m[t][t] != 0 {
                        for c in t..cols {
                            let add = m[i][c];
                            m[t][c] += add;
                        }
                        continue 'outer;
                    }
                }
            }
            break;
        }
    }
    (0..steps)
        .map(|i| m[i][i].unsigned_abs())
        .filter(|&d| d > 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_is_canonical_under_row_shuffles() {
        let a = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2], vec![0, 1, 0]];
        let mut b = a.clone();
        b.reverse();
        b[0][0] += 2 * b[2][0]; // add a lattice vector to another generator
        b[0][1] += 2 * b[2][1];
        b[0][2] += 2 * b[2][2];
        assert_eq!(hnf(&a), hnf(&b));
    }

    #[test]
    fn hnf_of_identity_rows() {
        let a = vec![vec![1, 0], vec![0, 1], vec![3, 5]];
        assert_eq!(hnf(&a), vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn solve_detects_membership() {
        let basis = hnf(&[vec![2, 0], vec![1, 3]]);
        assert!(solve_in_lattice(&basis, &[3, 3]).is_some());
        assert!(solve_in_lattice(&basis, &[1, 0]).is_none());
        let x = solve_in_lattice(&basis, &[4, 6]).unwrap();
        let back: Vec<i64> = (0..2)
            .map(|c| (0..2).map(|i| x[i] * basis[i][c]).sum())
            .collect();
        assert_eq!(back, vec![4, 6]);
    }

    #[test]
    fn snf_small_examples() {
        // diag(2, 6) has cokernel Z/2 + Z/6
        assert_eq!(snf_invariant_factors(&[vec![2, 0], vec![0, 6]]), vec![2, 6]);
        // a unimodular matrix has trivial cokernel
        assert_eq!(snf_invariant_factors(&[vec![1, 1], vec![0, 1]]), Vec::<u64>::new());
        // swapped off-divisibility diagonal gets rearranged into a chain
        assert_eq!(snf_invariant_factors(&[vec![4, 0], vec![0, 6]]), vec![2, 12]);
    }
}
