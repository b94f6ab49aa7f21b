//! Exact integer linear algebra with checked `i128` arithmetic.

use num_integer::Integer;

use crate::error::{Error, Result};

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow)
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum::<i128>() as i64
}

/// Divides out the gcd of the entries.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|x| x / g).collect()
}

pub(crate) fn primitive_i128(v: &[i128]) -> Result<Vec<i64>> {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    let g = g.max(1);
    v.iter()
        .map(|x| i64::try_from(x / g).map_err(|_| Error::Overflow))
        .collect()
}

/// Rank of the given rows (fraction-free elimination).
#[allow(clippy::needless_range_loop)]
pub fn rank<R: AsRef<[i64]>>(rows: &[R]) -> Result<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.as_ref().iter().map(|&x| x as i128).collect())
        .collect();
    let Some(cols) = m.first().map(Vec::len) else {
        return Ok(0);
    };
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][c];
        for i in rank + 1..m.len() {
            let f = m[i][c];
            for j in c..cols {
                m[i][j] = sub(mul(pivot, m[i][j])?, mul(f, m[rank][j])?)? / prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    Ok(rank)
}

/// For a square matrix `a` returns `(d, x)` with `d > 0` and `a x = d I`,
/// so `x / d` is the inverse. `None` if `a` is singular.
#[allow(clippy::needless_range_loop)]
pub fn scaled_inverse(a: &[Vec<i64>]) -> Result<Option<(i128, Vec<Vec<i128>>)>> {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<i128> = row.iter().map(|&x| x as i128).collect();
            r.extend((0..n).map(|j| (i == j) as i128));
            r
        })
        .collect();
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| m[i][k] != 0) else {
            return Ok(None);
        };
        m.swap(k, p);
        let pivot = m[k][k];
        for i in 0..n {
            if i == k {
                continue;
            }
            let f = m[i][k];
            for j in 0..2 * n {
                m[i][j] = sub(mul(pivot, m[i][j])?, mul(f, m[k][j])?)? / prev;
            }
        }
        prev = pivot;
    }
    // every row now has the last pivot on the diagonal
    let d = prev;
    debug_assert!((0..n).all(|i| m[i][i] == d));
    let x: Vec<Vec<i128>> = m.into_iter().map(|r| r[n..].to_vec()).collect();
    let (d, x) = if d < 0 {
        (-d, x.into_iter().map(|r| r.into_iter().map(|v| -v).collect()).collect())
    } else {
        (d, x)
    };
    Ok(Some((d, x)))
}

/// `a x` for a matrix given by rows.
pub fn mat_vec(a: &[Vec<i64>], x: &[i128]) -> Result<Vec<i128>> {
    a.iter()
        .map(|row| {
            row.iter().zip(x).try_fold(0i128, |acc, (&r, &v)| {
                acc.checked_add(mul(r as i128, v)?).ok_or(Error::Overflow)
            })
        })
        .collect()
}
