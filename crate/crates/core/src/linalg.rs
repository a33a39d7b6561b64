//! Exact rank of integer matrices.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result};

/// Word-sized prime for the modular cross-check.
pub const CHECK_PRIME: u64 = 2_147_483_647;

/// Rank over the rationals by Bareiss fraction-free elimination.
///
/// Pivots are taken as the first nonzero entry at or below the current row in
/// each column; columns without a pivot are skipped. After `k` pivots every
/// remaining entry is a `(k+1)`-minor of the input, so the division by the
/// previous pivot is exact.
///
/// Runs in machine integers while the minors fit in `i64` and restarts in
/// arbitrary precision otherwise.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    bareiss_rank_i64(rows.to_vec()).unwrap_or_else(|| bareiss_rank_big(rows))
}

/// `None` on overflow.
fn bareiss_rank_i64(mut a: Vec<Vec<i64>>) -> Option<usize> {
    let n = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev: i64 = 1;
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, p);
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[col];
        for row in below.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            if factor == 0 {
                // row is only rescaled by pivot / prev
                if pivot == prev {
                    continue;
                }
                for v in &mut row[col + 1..] {
                    if *v != 0 {
                        let w = *v as i128 * pivot as i128;
                        debug_assert_eq!(w % prev as i128, 0);
                        *v = i64::try_from(w / prev as i128).ok()?;
                    }
                }
                continue;
            }
            for (v, &pv) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                if *v == 0 && pv == 0 {
                    continue;
                }
                let w = pivot as i128 * *v as i128 - factor as i128 * pv as i128;
                debug_assert_eq!(w % prev as i128, 0, "Bareiss division must be exact");
                *v = i64::try_from(w / prev as i128).ok()?;
            }
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn bareiss_rank_big(rows: &[Vec<i64>]) -> usize {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(p) = (rank..n).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in below.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            if factor.is_zero() && *pivot == prev {
                continue;
            }
            for (v, pv) in row[col + 1..].iter_mut().zip(&pivot_row[col + 1..]) {
                if v.is_zero() && (factor.is_zero() || pv.is_zero()) {
                    continue;
                }
                let mut w = pivot * &*v;
                if !factor.is_zero() && !pv.is_zero() {
                    w -= &factor * pv;
                }
                debug_assert!((&w % &prev).is_zero(), "Bareiss division must be exact");
                *v = w / &prev;
            }
        }
        prev = top[rank][col].clone();
        rank += 1;
    }
    rank
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Rank over `GF(p)` for a prime `p < 2^32`. Never exceeds the rational rank.
pub fn modular_rank(rows: &[Vec<i64>], p: u64) -> usize {
    assert!(p > 1 && p < 1 << 32);
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == n {
            break;
        }
        let Some(piv) = (rank..n).find(|&i| a[i][col] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for j in col..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for j in col..cols {
                row[j] = (row[j] + (p - factor) * pivot_row[j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankRoute {
    /// Eliminate the matrix as given.
    Direct,
    /// Eliminate the smaller of `A Aᵀ` and `Aᵀ A`; over the rationals both
    /// have the rank of `A`. Small, but the minors of a dense Gram matrix grow
    /// much faster than those of a sparse 0/1 matrix.
    Gram,
}

/// Gram matrix of the rows (`A Aᵀ`) of a matrix given by an entry function,
/// accumulated column by column over the nonzero entries.
pub fn row_gram(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> i64) -> Vec<Vec<i64>> {
    let mut g = vec![vec![0i64; rows]; rows];
    let mut nz: Vec<(usize, i64)> = Vec::new();
    for j in 0..cols {
        nz.clear();
        nz.extend((0..rows).map(|i| (i, entry(i, j))).filter(|&(_, v)| v != 0));
        for (a, &(p, vp)) in nz.iter().enumerate() {
            for &(q, vq) in &nz[a..] {
                g[p][q] += vp * vq;
            }
        }
    }
    for p in 0..rows {
        for q in 0..p {
            g[p][q] = g[q][p];
        }
    }
    g
}

/// Exact rank of an integer matrix given by an entry function.
///
/// Bareiss elimination supplies the answer; a modular elimination over
/// [`CHECK_PRIME`] on the same input must agree, otherwise an
/// [`Error::Inconsistent`] is returned.
pub fn exact_rank_with(
    rows: usize,
    cols: usize,
    route: RankRoute,
    entry: impl Fn(usize, usize) -> i64,
) -> Result<usize> {
    let reduced = match route {
        RankRoute::Direct => (0..rows).map(|i| (0..cols).map(|j| entry(i, j)).collect()).collect(),
        RankRoute::Gram if rows <= cols => row_gram(rows, cols, entry),
        RankRoute::Gram => row_gram(cols, rows, |i, j| entry(j, i)),
    };
    let exact = bareiss_rank(&reduced);
    let modular = modular_rank(&reduced, CHECK_PRIME);
    if exact != modular {
        return Err(Error::Inconsistent(format!(
            "Bareiss rank {exact} but rank {modular} modulo {CHECK_PRIME}"
        )));
    }
    Ok(exact)
}

pub fn exact_rank(rows: usize, cols: usize, entry: impl Fn(usize, usize) -> i64) -> Result<usize> {
    exact_rank_with(rows, cols, RankRoute::Direct, entry)
}
