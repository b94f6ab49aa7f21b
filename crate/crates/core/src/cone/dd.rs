//! Extremal rays from facet normals by the double description method.

use super::linalg::{dot, primitive, primitive_i128, rank, scaled_inverse};
use crate::error::{Error, Result};

struct Ray {
    v: Vec<i64>,
    /// Inserted facets tight at `v`, as a bitset over facet indices.
    zero: Vec<u64>,
}

fn set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn members(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(w, &b)| {
        (0..64).filter(move |k| b >> k & 1 == 1).map(move |k| w * 64 + k)
    })
}

/// Extremal rays of `{x : a·x >= 0 for every facet a}`: primitive, sorted
/// and pairwise distinct. Facets are inserted in the given order, starting
/// from the first linearly independent `dim` of them.
pub fn rays_from_facets(facets: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let Some(dim) = facets.first().map(Vec::len) else {
        return Err(Error::NotPointed);
    };
    if let Some(bad) = facets.iter().find(|f| f.len() != dim) {
        return Err(Error::Dimension { expected: dim, got: bad.len() });
    }
    let words = facets.len().div_ceil(64);

    let mut basis: Vec<usize> = Vec::with_capacity(dim);
    for (i, f) in facets.iter().enumerate() {
        let mut trial: Vec<&[i64]> = basis.iter().map(|&j| facets[j].as_slice()).collect();
        trial.push(f);
        if rank(&trial)? == trial.len() {
            basis.push(i);
            if basis.len() == dim {
                break;
            }
        }
    }
    if basis.len() < dim {
        return Err(Error::NotPointed);
    }
    let h: Vec<Vec<i64>> = basis.iter().map(|&i| facets[i].clone()).collect();
    let (_, x) = scaled_inverse(&h)?.expect("independent rows");
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let col: Vec<i128> = x.iter().map(|r| r[j]).collect();
            let mut zero = vec![0u64; words];
            for (k, &i) in basis.iter().enumerate() {
                if k != j {
                    set(&mut zero, i);
                }
            }
            Ok(Ray { v: primitive_i128(&col)?, zero })
        })
        .collect::<Result<_>>()?;

    let mut inserted: Vec<bool> = vec![false; facets.len()];
    for &i in &basis {
        inserted[i] = true;
    }
    for (i, a) in facets.iter().enumerate() {
        if inserted[i] {
            continue;
        }
        inserted[i] = true;
        let vals: Vec<i64> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if vals.iter().all(|&s| s >= 0) {
            for (r, &s) in rays.iter_mut().zip(&vals) {
                if s == 0 {
                    set(&mut r.zero, i);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] < 0).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common: Vec<u64> =
                    rays[p].zero.iter().zip(&rays[q].zero).map(|(x, y)| x & y).collect();
                let count: u32 = common.iter().map(|w| w.count_ones()).sum();
                if (count as usize) + 2 < dim {
                    continue;
                }
                let tight: Vec<&[i64]> = members(&common).map(|k| facets[k].as_slice()).collect();
                if rank(&tight)? + 2 != dim {
                    continue;
                }
                let (sp, sq) = (vals[p] as i128, -(vals[q] as i128));
                let v: Vec<i128> = rays[q]
                    .v
                    .iter()
                    .zip(&rays[p].v)
                    .map(|(&y, &x)| sp * y as i128 + sq * x as i128)
                    .collect();
                let mut zero = common;
                set(&mut zero, i);
                fresh.push(Ray { v: primitive_i128(&v)?, zero });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (mut r, s) in rays.into_iter().zip(vals) {
            if s == 0 {
                set(&mut r.zero, i);
            }
            if s >= 0 {
                next.push(r);
            }
        }
        next.extend(fresh);
        rays = next;
    }
    let mut out: Vec<Vec<i64>> = rays.into_iter().map(|r| primitive(&r.v)).collect();
    out.sort();
    out.dedup();
    Ok(out)
}
