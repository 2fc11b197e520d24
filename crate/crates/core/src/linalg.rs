//! Exact rank of small integer matrices over a prime field or the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::field::Field;

/// Rank of an integer matrix (rows of equal length) over `field`.
pub fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match field {
        Field::Prime(p) => rank_mod_p(rows, p),
        Field::Rational => rank_rational(rows),
    }
}

/// Plain Gaussian elimination modulo p.
pub fn rank_mod_p(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let ncols = m[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = crate::field::pow_mod(m[rank][col], p - 2, p);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[col] * inv % p;
            if factor == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = (*x + p - factor * y % p) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Fraction-free (Bareiss) elimination; runs in `i128` and falls back to
/// big integers if an intermediate value overflows.
pub fn rank_rational(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(small) {
        Some(r) => r,
        None => bareiss_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, pivot);
        let pv = m[rank][col];
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let lead = row[col];
            for j in col..ncols {
                let v = pv.checked_mul(row[j])?.checked_sub(lead.checked_mul(pivot_row[j])?)?;
                row[j] = v / prev;
            }
        }
        prev = pv;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let ncols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, pivot);
        let pv = m[rank][col].clone();
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let lead = row[col].clone();
            for j in col..ncols {
                let v = &pv * &row[j] - &lead * &pivot_row[j];
                let (q, r) = v.div_rem(&prev);
                debug_assert!(r.is_zero());
                row[j] = q;
            }
        }
        prev = pv;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
