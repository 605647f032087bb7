//! Shared test oracles, independent of the Groebner path they check.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;

use curvinv::poly::{monomials_of_degree, Monomial, MultiPoly};

/// Dimension of the degree-k piece of the homogeneous ideal generated by
/// `gens`, computed as the rank of the coefficient matrix of all monomial
/// multiples u*g landing in degree k. Exact Gaussian elimination over Q;
/// no Groebner machinery involved.
pub fn graded_dim_rank_oracle(gens: &[MultiPoly], k: u32) -> usize {
    let basis = monomials_of_degree(k);
    let col: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in gens {
        let dg = g.homogeneous_degree().expect("rank oracle needs homogeneous generators");
        if dg > k {
            continue;
        }
        for u in monomials_of_degree(k - dg) {
            let mut row = vec![BigRational::zero(); basis.len()];
            for (m, c) in g.terms() {
                row[col[&m.mul(&u)]] = c.clone();
            }
            rows.push(row);
        }
    }
    rank(rows)
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut pivot_col = 0;
    while pivot_col < ncols && rank < rows.len() {
        let pivot_row = (rank..rows.len()).find(|&r| !rows[r][pivot_col].is_zero());
        let Some(pivot_row) = pivot_row else {
            pivot_col += 1;
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][pivot_col].clone();
        for r in (rank + 1)..rows.len() {
            if rows[r][pivot_col].is_zero() {
                continue;
            }
            let factor = &rows[r][pivot_col] / &pivot;
            for c in pivot_col..ncols {
                let delta = &rows[rank][c] * &factor;
                rows[r][c] -= delta;
            }
        }
        rank += 1;
        pivot_col += 1;
    }
    rank
}
