//! Newell-Littlewood numbers
//! `N_{λ,μ,ν} = Σ c^λ_{α,β} c^μ_{β,γ} c^ν_{γ,α}` and their cyclic
//! generalization `N_{λ_1,…,λ_s} = Σ Π_i c^{λ_i}_{α_i,α_{i+1}}`.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lr::{lr, lr_positive};
use crate::partition::Partition;

/// Sizes `|α_1|, …, |α_s|` for a given `|α_1| = a1`, or `None` if some
/// size is negative or the cycle does not close.
fn chain_sizes(sizes: &[u64], a1: u64) -> Option<Vec<u64>> {
    let mut out = Vec::with_capacity(sizes.len());
    let mut a = a1;
    for &s in sizes {
        out.push(a);
        a = s.checked_sub(a)?;
    }
    (a == a1).then_some(out)
}

/// Possible values of `|α_1|`.
fn first_sizes(parts: &[Partition]) -> Vec<(u64, Vec<u64>)> {
    let sizes: Vec<u64> = parts.iter().map(Partition::size).collect();
    let bound = sizes[0].min(sizes[sizes.len() - 1]);
    (0..=bound).filter_map(|a1| chain_sizes(&sizes, a1).map(|c| (a1, c))).collect()
}

/// `N_{λ,μ,ν}`.
pub fn nl(lam: &Partition, mu: &Partition, nu: &Partition) -> BigUint {
    let (l, m, n) = (lam.size(), mu.size(), nu.size());
    if (l + m + n) % 2 == 1 || l + m < n || m + n < l || n + l < m {
        return BigUint::zero();
    }
    let (sa, sb, sg) = ((l + n - m) / 2, (l + m - n) / 2, (m + n - l) / 2);
    let mut total = BigUint::zero();
    let alphas = lam.intersection(nu).sub_partitions(sa);
    let gammas = mu.intersection(nu).sub_partitions(sg);
    for beta in lam.intersection(mu).sub_partitions(sb) {
        for alpha in &alphas {
            let c1 = lr(alpha, &beta, lam);
            if c1 == 0 {
                continue;
            }
            for gamma in &gammas {
                let c2 = lr(&beta, gamma, mu);
                if c2 == 0 {
                    continue;
                }
                let c3 = lr(gamma, alpha, nu);
                if c3 != 0 {
                    total += BigUint::from(c1) * c2 * c3;
                }
            }
        }
    }
    total
}

/// `N_{λ_1,…,λ_s}` for `s >= 3`.
pub fn nl_multiple(parts: &[Partition]) -> Result<BigUint> {
    let s = parts.len();
    if s < 3 {
        return Err(Error::Precondition(format!("need at least 3 partitions, got {s}")));
    }
    // α_i ⊆ λ_{i-1} ∩ λ_i (indices mod s)
    let bounds: Vec<Partition> = (0..s).map(|i| parts[(i + s - 1) % s].intersection(&parts[i])).collect();
    let mut total = BigUint::zero();
    for (_, sizes) in first_sizes(parts) {
        for a1 in bounds[0].sub_partitions(sizes[0]) {
            // weights of α_{i+1} after multiplying the first i factors
            let mut layer: HashMap<Partition, BigUint> = HashMap::from([(a1.clone(), BigUint::one())]);
            for i in 0..s - 1 {
                let mut next: HashMap<Partition, BigUint> = HashMap::new();
                let cands = bounds[i + 1].sub_partitions(sizes[i + 1]);
                for (a, w) in &layer {
                    for b in &cands {
                        let c = lr(a, b, &parts[i]);
                        if c != 0 {
                            *next.entry(b.clone()).or_default() += w * c;
                        }
                    }
                }
                layer = next;
            }
            for (a, w) in layer {
                let c = lr(&a, &a1, &parts[s - 1]);
                if c != 0 {
                    total += w * c;
                }
            }
        }
    }
    Ok(total)
}

/// `N_{λ_1,…,λ_s} > 0`, by a depth-first search that stops at the first
/// nonzero product.
pub fn nl_positive(parts: &[Partition]) -> Result<bool> {
    let s = parts.len();
    if s < 3 {
        return Err(Error::Precondition(format!("need at least 3 partitions, got {s}")));
    }
    let bounds: Vec<Partition> = (0..s).map(|i| parts[(i + s - 1) % s].intersection(&parts[i])).collect();
    for (_, sizes) in first_sizes(parts) {
        for a1 in bounds[0].sub_partitions(sizes[0]) {
            let mut dead: HashSet<(usize, Partition)> = HashSet::new();
            if chain(1, &a1, &a1, parts, &bounds, &sizes, &mut dead) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Is there a continuation from `α_i = a` (with `i >= 1`) closing the cycle at `first`?
fn chain(
    i: usize,
    a: &Partition,
    first: &Partition,
    parts: &[Partition],
    bounds: &[Partition],
    sizes: &[u64],
    dead: &mut HashSet<(usize, Partition)>,
) -> bool {
    let s = parts.len();
    if i == s {
        return lr_positive(a, first, &parts[s - 1]);
    }
    if dead.contains(&(i, a.clone())) {
        return false;
    }
    for b in bounds[i].sub_partitions(sizes[i]) {
        if lr_positive(a, &b, &parts[i - 1]) && chain(i + 1, &b, first, parts, bounds, sizes, dead) {
            return true;
        }
    }
    dead.insert((i, a.clone()));
    false
}

/// The sextuple `(λ⁻, μ⁺, ν⁻, λ⁺, μ⁻, ν⁺)` built from `λ, μ, ν ⊆ (n-r)^r`
/// and `a' + b' + c' = r`, where `λ⁻ = (λ_{≤a'})^∨` in `(n-r)^{a'}` and
/// `λ⁺ = λ_{>a'}`, and likewise for `μ` and `ν`.
pub fn strongermain_sextuple(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: u32,
    r: u32,
    primes: [u32; 3],
) -> Result<[Partition; 6]> {
    if r == 0 || r >= n {
        return Err(Error::Precondition(format!("need 1 <= r < n, got r={r}, n={n}")));
    }
    if primes.iter().sum::<u32>() != r {
        return Err(Error::Precondition(format!("a'+b'+c' must equal r = {r}")));
    }
    let w = n - r;
    let mut minus = Vec::with_capacity(3);
    let mut plus = Vec::with_capacity(3);
    for (p, &k) in [lam, mu, nu].into_iter().zip(&primes) {
        if !p.fits_in(w, r as usize) {
            return Err(Error::NotInRectangle { partition: p.to_string(), width: w, height: r });
        }
        minus.push(p.head(k as usize).complement(w, k as usize)?);
        plus.push(p.tail(k as usize));
    }
    Ok([
        minus[0].clone(),
        plus[1].clone(),
        minus[2].clone(),
        plus[0].clone(),
        minus[1].clone(),
        plus[2].clone(),
    ])
}

/// Checks `N_{λ⁻,μ⁺,ν⁻,λ⁺,μ⁻,ν⁺} > 0` under the hypothesis
/// `c^{ν^∨}_{λ,μ} > 0` (complement in `(n-r)^r`).
pub fn strongermain_check(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: u32,
    r: u32,
    primes: [u32; 3],
) -> Result<bool> {
    let six = strongermain_sextuple(lam, mu, nu, n, r, primes)?;
    let nu_c = nu.complement(n - r, r as usize)?;
    if !lr_positive(lam, mu, &nu_c) {
        return Err(Error::Precondition(format!("c^{{{nu_c}}}_{{{lam},{mu}}} vanishes")));
    }
    nl_positive(&six)
}
