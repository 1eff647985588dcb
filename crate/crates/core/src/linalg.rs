//! Division-free determinants over polynomial entries and exact ranks.

use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::poly::{Polynomial, Rational, VariableTable};

/// Determinant by Laplace expansion along rows, memoized on the set of
/// columns still available. `O(n 2^n)` ring operations, no division.
pub(crate) fn determinant(table: &Arc<VariableTable>, m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(m.iter().all(|row| row.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return Polynomial::one(table.clone());
    }
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    det_rec(table, m, 0, (1u64 << n) - 1, &mut memo)
}

fn det_rec(
    table: &Arc<VariableTable>,
    m: &[Vec<Polynomial>],
    row: usize,
    cols: u64,
    memo: &mut HashMap<u64, Polynomial>,
) -> Polynomial {
    if row == m.len() {
        return Polynomial::one(table.clone());
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = Polynomial::zero(table.clone());
    let mut sign_positive = true;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let minor = det_rec(table, m, row + 1, cols & !(1 << c), memo);
            let term = entry * &minor;
            acc = if sign_positive { &acc + &term } else { &acc - &term };
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Rank of an integer matrix over the rationals.
pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Rational>> =
        rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = &row[col] / &pivot_row[col];
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= p * &f;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}
