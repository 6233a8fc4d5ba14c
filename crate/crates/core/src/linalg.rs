//! Exact linear algebra over the rationals: fraction-free (Bareiss)
//! Gaussian elimination with first-nonzero pivoting, plus rank, solve and
//! nullspace built on top of it.  Deterministic by construction — no
//! pivoting heuristics beyond the first nonzero entry.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactnum::Rational;

/// Row echelon data produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// Column index of each pivot, in row order.
    pivots: Vec<usize>,
}

/// Clear denominators row by row; scaling rows leaves rank, nullspace and
/// solution sets of `[A | b]` unchanged.
fn to_integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let mut lcm = BigInt::one();
            for x in row {
                if !x.is_zero() {
                    lcm = lcm.lcm(x.denom());
                }
            }
            row.iter()
                .map(|x| {
                    if x.is_zero() {
                        BigInt::zero()
                    } else {
                        x.numer() * (&lcm / x.denom())
                    }
                })
                .collect()
        })
        .collect()
}

/// Bareiss forward elimination.  `pivot_cols` limits which columns may hold
/// pivots (an augmented right-hand side is excluded by passing `cols - 1`).
fn eliminate(mut m: Vec<Vec<BigInt>>, pivot_cols: usize) -> Echelon {
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for col in 0..pivot_cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in (r + 1)..nrows {
            if m[i].iter().all(|x| x.is_zero()) {
                continue;
            }
            let head = std::mem::replace(&mut m[i][col], BigInt::zero());
            for j in (col + 1)..m[i].len() {
                let v = &m[r][col] * &m[i][j] - &head * &m[r][j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                m[i][j] = v / &prev;
            }
        }
        prev = m[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    Echelon { rows: m, pivots }
}

/// Rank of a rational matrix.  Empty matrices have rank 0.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    eliminate(to_integer_rows(rows), cols).pivots.len()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A particular solution; free variables are set to zero.
    Solution(Vec<Rational>),
    /// The reduced system contains `0 = c` with `c != 0`; the index is the
    /// offending row of the echelon form.
    Inconsistent { reduced_row: usize },
}

fn big_ratio(n: &BigInt, d: &BigInt) -> Rational {
    Rational::from_big(num_rational::BigRational::new(n.clone(), d.clone()))
}

/// Solve `A x = b` exactly.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> SolveOutcome {
    assert_eq!(a.len(), b.len(), "matrix and rhs row counts differ");
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    if a.is_empty() {
        return SolveOutcome::Solution(vec![Rational::zero(); ncols]);
    }
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let ech = eliminate(to_integer_rows(&aug), ncols);

    // Consistency: a row with zero coefficient part and nonzero rhs.
    for (i, row) in ech.rows.iter().enumerate() {
        let coeff_zero = row[..ncols].iter().all(|x| x.is_zero());
        if coeff_zero && !row[ncols].is_zero() {
            return SolveOutcome::Inconsistent { reduced_row: i };
        }
    }

    // Back substitution over the pivot rows, free variables zero.
    let mut x = vec![Rational::zero(); ncols];
    for (ri, &pc) in ech.pivots.iter().enumerate().rev() {
        let row = &ech.rows[ri];
        let mut acc = big_ratio(&row[ncols], &BigInt::one());
        for j in (pc + 1)..ncols {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc = &acc - &(&big_ratio(&row[j], &BigInt::one()) * &x[j]);
            }
        }
        x[pc] = &acc * &big_ratio(&BigInt::one(), &row[pc]);
    }
    SolveOutcome::Solution(x)
}

/// A basis of the right nullspace of `A`, one vector per free column, in
/// column order.
pub fn nullspace(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    if ncols == 0 {
        return Vec::new();
    }
    if a.is_empty() {
        return (0..ncols)
            .map(|j| {
                let mut v = vec![Rational::zero(); ncols];
                v[j] = Rational::one();
                v
            })
            .collect();
    }
    let ech = eliminate(to_integer_rows(a), ncols);
    let pivot_set: std::collections::BTreeSet<usize> = ech.pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (ri, &pc) in ech.pivots.iter().enumerate().rev() {
            let row = &ech.rows[ri];
            let mut acc = Rational::zero();
            for j in (pc + 1)..ncols {
                if !row[j].is_zero() && !v[j].is_zero() {
                    acc = &acc + &(&big_ratio(&row[j], &BigInt::one()) * &v[j]);
                }
            }
            v[pc] = -&(&acc * &big_ratio(&BigInt::one(), &row[pc]));
        }
        basis.push(v);
    }
    basis
}

/// Multiply a rational matrix by a vector.
pub fn mat_vec(a: &[Vec<Rational>], x: &[Rational]) -> Vec<Rational> {
    a.iter()
        .map(|row| {
            let mut acc = Rational::zero();
            for (c, v) in row.iter().zip(x) {
                if !c.is_zero() && !v.is_zero() {
                    acc = &acc + &(c * v);
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn z() -> Rational {
        Rational::zero()
    }

    #[test]
    fn rank_and_solve_small() {
        // x + y = 3, x - y = 1 -> x = 2, y = 1
        let a = vec![
            vec![q(1, 1), q(1, 1)],
            vec![q(1, 1), q(-1, 1)],
        ];
        let b = vec![q(3, 1), q(1, 1)];
        assert_eq!(rank(&a), 2);
        assert_eq!(solve(&a, &b), SolveOutcome::Solution(vec![q(2, 1), q(1, 1)]));
    }

    #[test]
    fn detects_inconsistency() {
        // x + y = 1, 2x + 2y = 3
        let a = vec![
            vec![q(1, 1), q(1, 1)],
            vec![q(2, 1), q(2, 1)],
        ];
        let b = vec![q(1, 1), q(3, 1)];
        assert!(matches!(solve(&a, &b), SolveOutcome::Inconsistent { .. }));
    }

    #[test]
    fn underdetermined_returns_particular_solution() {
        // x + y + z = 6 with free y, z
        let a = vec![vec![q(1, 1), q(1, 1), q(1, 1)]];
        let b = vec![q(6, 1)];
        match solve(&a, &b) {
            SolveOutcome::Solution(x) => {
                assert_eq!(mat_vec(&a, &x), b);
                assert_eq!(x, vec![q(6, 1), z(), z()]);
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn nullspace_dimensions() {
        let a = vec![vec![q(1, 1), q(2, 1), q(3, 1)], vec![q(2, 1), q(4, 1), q(6, 1)]];
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&a, v).iter().all(Rational::is_zero));
        }
        // full-rank square matrix has trivial nullspace
        let id = vec![vec![q(1, 1), z()], vec![z(), q(1, 1)]];
        assert!(nullspace(&id).is_empty());
    }

    #[test]
    fn fractional_entries() {
        // (1/2)x + (1/3)y = 7/6 ; x - y = 0 -> x = y = 7/5
        let a = vec![
            vec![q(1, 2), q(1, 3)],
            vec![q(1, 1), q(-1, 1)],
        ];
        let b = vec![q(7, 6), z()];
        assert_eq!(
            solve(&a, &b),
            SolveOutcome::Solution(vec![q(7, 5), q(7, 5)])
        );
    }

    #[test]
    fn rank_deficient_wide_matrix() {
        let a = vec![
            vec![z(), q(1, 1), q(2, 1), z()],
            vec![z(), q(2, 1), q(4, 1), z()],
            vec![z(), z(), z(), q(5, 1)],
        ];
        assert_eq!(rank(&a), 2);
        let ns = nullspace(&a);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&a, v).iter().all(Rational::is_zero));
        }
    }
}
