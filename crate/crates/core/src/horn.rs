//! Inequalities of the saturated Newell-Littlewood cone.
//!
//! A sextuple `(A, A', B, B', C, C')` of subsets of `[n]` indexes the
//! inequality `|λ_A| - |λ_A'| + |μ_B| - |μ_B'| + |ν_C| - |ν_C'| >= 0`.
//! Two families are generated:
//!
//! * the minimal (facet) list, selected by two Littlewood-Richardson
//!   coefficients on the `τ⁰`/`τ²` partitions being equal to one;
//! * the extended Horn list, selected by nonvanishing of the multiple
//!   Newell-Littlewood number `N_{τ(A'),τ(B),τ(C'),τ(A),τ(B'),τ(C)}`.
//!
//! Points are laid out as `(λ_1..λ_n, μ_1..μ_n, ν_1..ν_n)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lr::{lr, lr_gl};
use crate::nl::{nl, nl_positive};
use crate::partition::{HornDatum, Partition, Subset};

/// An `r`-subset `I` of `[2n]` with `I ∩ Ī = ∅`, where `ī = 2n + 1 - i`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SchubertIndex {
    n: u32,
    set: Subset,
}

impl SchubertIndex {
    pub fn new(n: u32, elements: Vec<u32>) -> Result<Self> {
        let set = Subset::new(2 * n, elements)?;
        if set.iter().any(|i| set.contains(2 * n + 1 - i)) {
            return Err(Error::InvalidSubset { n: 2 * n, elements: set.elements().to_vec() });
        }
        Ok(SchubertIndex { n, set })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn r(&self) -> u32 {
        self.set.len() as u32
    }

    pub fn set(&self) -> &Subset {
        &self.set
    }

    /// The word of length `2n` with 1 on `I`, 0 on `Ī` and 2 elsewhere.
    pub fn chi_word(&self) -> Vec<u8> {
        let n2 = 2 * self.n;
        (1..=n2)
            .map(|i| {
                if self.set.contains(i) {
                    1
                } else if self.set.contains(n2 + 1 - i) {
                    0
                } else {
                    2
                }
            })
            .collect()
    }
}

impl fmt::Display for SchubertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.set.fmt(f)
    }
}

/// `I = A' ∪ Ā`.
pub fn pair_to_index(a: &Subset, a_prime: &Subset) -> Result<SchubertIndex> {
    a.check_disjoint(a_prime)?;
    let n = a.ambient();
    let mut e: Vec<u32> = a_prime.elements().to_vec();
    e.extend(a.iter().map(|i| 2 * n + 1 - i));
    SchubertIndex::new(n, e)
}

/// `(A, A') = (Ī ∩ [n], I ∩ [n])`.
pub fn index_to_pair(idx: &SchubertIndex) -> (Subset, Subset) {
    let n = idx.n;
    let a = idx.set.iter().filter(|&i| i > n).map(|i| 2 * n + 1 - i).collect();
    let a_prime = idx.set.iter().filter(|&i| i <= n).collect();
    (
        Subset::new(n, a).expect("inside [n]"),
        Subset::new(n, a_prime).expect("inside [n]"),
    )
}

/// `(I⁰, I²)`: `I²` ⊆ `[2r]` lists the 1's of the χ-word with its 2's
/// removed; `I⁰` ⊆ `[2n - r]` lists the 1's once the 0's are removed and
/// the 2's turned into 0's.
pub fn chi_extract(idx: &SchubertIndex) -> (Subset, Subset) {
    let w = idx.chi_word();
    let r = idx.r();
    let ones = |word: Vec<u8>| -> Vec<u32> {
        word.iter()
            .enumerate()
            .filter(|(_, &c)| c == 1)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    };
    let w2: Vec<u8> = w.iter().copied().filter(|&c| c != 2).collect();
    let w0: Vec<u8> = w.iter().copied().filter(|&c| c != 0).map(|c| if c == 2 { 0 } else { c }).collect();
    (
        Subset::new(2 * idx.n - r, ones(w0)).expect("inside [2n-r]"),
        Subset::new(2 * r, ones(w2)).expect("inside [2r]"),
    )
}

/// `(τ⁰(A,A'), τ²(A,A'))` from the closed formulas.
pub fn tau02(a: &Subset, a_prime: &Subset) -> Result<(Partition, Partition)> {
    a.check_disjoint(a_prime)?;
    let n = a.ambient();
    let union = a.union(a_prime)?;
    let outside = |lo: u32, hi: u32| (lo..=hi).filter(|&i| !union.contains(i)).count() as u32;
    let (na, nap) = (a.len() as u32, a_prime.len() as u32);
    let mut t0 = Vec::with_capacity((na + nap) as usize);
    let mut t2 = Vec::with_capacity((na + nap) as usize);
    for alpha in a.iter() {
        t2.push(na + a_prime.iter().filter(|&j| j >= alpha).count() as u32);
        t0.push(n - na - nap + outside(alpha, n));
    }
    for alpha in a_prime.iter().rev() {
        t2.push(a.iter().filter(|&j| j <= alpha).count() as u32);
        t0.push(outside(1, alpha));
    }
    Ok((Partition::new(t0)?, Partition::new(t2)?))
}

/// `(τ⁰, τ²)` via the χ-word, for cross-checking [`tau02`].
pub fn tau02_via_word(a: &Subset, a_prime: &Subset) -> Result<(Partition, Partition)> {
    let (i0, i2) = chi_extract(&pair_to_index(a, a_prime)?);
    Ok((i0.tau(), i2.tau()))
}

/// Codimension of the Schubert class indexed by `I` in `Gr_ω(r, 2n)`.
pub fn codim(idx: &SchubertIndex) -> Result<u64> {
    let (n, r) = (idx.n, idx.r());
    let (i0, i2) = chi_extract(idx);
    let c0 = i0.tau().complement(2 * n - 2 * r, r as usize)?.size();
    let c2 = i2.tau().complement(r, r as usize)?.size();
    let low = idx.set.iter().filter(|&i| i <= n).count() as u64;
    if (c2 + low) % 2 == 1 {
        return Err(Error::Precondition(format!("odd half-codimension for {idx}")));
    }
    Ok(c0 + (c2 + low) / 2)
}

/// `dim Gr_ω(r, 2n) = r(2n - 2r) + r(r + 1)/2`.
pub fn dim_isotropic_grassmannian(r: u32, n: u32) -> u64 {
    let (r, n) = (r as u64, n as u64);
    r * (2 * n - 2 * r) + r * (r + 1) / 2
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Minimal,
    ExtendedHorn,
    /// `λ_i - λ_{i+1} >= 0` and `λ_n >= 0` in each block.
    Chamber,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minimal" => Ok(Family::Minimal),
            "eh" | "ehi" | "extended-horn" => Ok(Family::ExtendedHorn),
            "chamber" => Ok(Family::Chamber),
            _ => Err(Error::Parse { what: "inequality family", input: s.into() }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Minimal => "minimal",
            Family::ExtendedHorn => "extended-horn",
            Family::Chamber => "chamber",
        })
    }
}

/// A linear inequality `coeffs · x >= 0` on `(λ, μ, ν)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Inequality {
    pub coeffs: Vec<i64>,
    pub datum: Option<HornDatum>,
    pub family: Family,
}

impl Inequality {
    pub fn from_datum(d: HornDatum, family: Family) -> Self {
        Inequality { coeffs: d.coefficients().into_iter().map(i64::from).collect(), datum: Some(d), family }
    }

    pub fn evaluate(&self, x: &[i64]) -> i64 {
        self.coeffs.iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn evaluate_triple(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> i64 {
        let n = self.coeffs.len() / 3;
        self.evaluate(&point(n, lam, mu, nu))
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.coeffs.len() / 3;
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let var = ["λ", "μ", "ν"][k / n];
            let sign = if c > 0 { "+" } else { "-" };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            terms.push(format!("{sign}{mag}{var}{}", k % n + 1));
        }
        let mut s = terms.join(" ");
        if let Some(rest) = s.strip_prefix('+') {
            s = rest.to_string();
        }
        write!(f, "{s} >= 0")
    }
}

/// `(λ_1..λ_n, μ_1..μ_n, ν_1..ν_n)`.
pub fn point(n: usize, lam: &Partition, mu: &Partition, nu: &Partition) -> Vec<i64> {
    [lam, mu, nu]
        .iter()
        .flat_map(|p| p.padded(n).into_iter().map(i64::from))
        .collect()
}

/// The `3n` inequalities saying each block is a partition.
pub fn chamber_inequalities(n: u32) -> Vec<Inequality> {
    let n = n as usize;
    let mut out = Vec::with_capacity(3 * n);
    for block in 0..3 {
        for i in 0..n {
            let mut c = vec![0; 3 * n];
            c[block * n + i] = 1;
            if i + 1 < n {
                c[block * n + i + 1] = -1;
            }
            out.push(Inequality { coeffs: c, datum: None, family: Family::Chamber });
        }
    }
    out
}

/// Per-pair data reused across the sextuple search.
#[derive(Clone)]
struct PairData {
    a: Subset,
    a_prime: Subset,
    /// `τ⁰` complemented in `(2n - 2r)^r`, and `τ⁰` itself.
    t0c: Partition,
    t0: Partition,
    /// `τ²` complemented in `r^r`, and `τ²` itself.
    t2c: Partition,
    t2: Partition,
    tau_a: Partition,
    tau_a_prime: Partition,
}

fn pairs_of_rank(n: u32, r: u32, primed: u32) -> Vec<PairData> {
    let mut out = Vec::new();
    for union in Subset::all_of_size(n, r as usize) {
        let u = union.elements();
        for pick in Subset::all_of_size(r, primed as usize) {
            let ap: Vec<u32> = pick.iter().map(|k| u[k as usize - 1]).collect();
            let a: Vec<u32> = u.iter().copied().filter(|x| !ap.contains(x)).collect();
            let a = Subset::new(n, a).expect("subset");
            let a_prime = Subset::new(n, ap).expect("subset");
            let (t0, t2) = tau02(&a, &a_prime).expect("disjoint");
            out.push(PairData {
                t0c: t0.complement(2 * n - 2 * r, r as usize).expect("τ⁰ fits"),
                t2c: t2.complement(r, r as usize).expect("τ² fits"),
                t0,
                t2,
                tau_a: a.tau(),
                tau_a_prime: a_prime.tau(),
                a,
                a_prime,
            });
        }
    }
    out
}

fn datum_of(a: &PairData, b: &PairData, c: &PairData) -> HornDatum {
    HornDatum::new(
        a.a.clone(),
        a.a_prime.clone(),
        b.a.clone(),
        b.a_prime.clone(),
        c.a.clone(),
        c.a_prime.clone(),
    )
    .expect("valid sextuple")
}

fn minimal_test(a: &PairData, b: &PairData, c: &PairData) -> bool {
    lr(&a.t0c, &b.t0c, &c.t0) == 1 && lr(&a.t2c, &b.t2c, &c.t2) == 1
}

fn extended_horn_test(a: &PairData, b: &PairData, c: &PairData) -> bool {
    let six = [
        a.tau_a_prime.clone(),
        b.tau_a.clone(),
        c.tau_a_prime.clone(),
        a.tau_a.clone(),
        b.tau_a_prime.clone(),
        c.tau_a.clone(),
    ];
    nl_positive(&six).expect("six partitions")
}

/// Result of generating a family, with the number of sextuples whose
/// coefficient vector was already present.
#[derive(Clone, Debug)]
pub struct Generated {
    pub inequalities: Vec<Inequality>,
    pub merged: usize,
}

fn generate(n: u32, family: Family) -> Generated {
    assert!(n >= 1, "n must be positive");
    let test: fn(&PairData, &PairData, &PairData) -> bool = match family {
        Family::Minimal => minimal_test,
        Family::ExtendedHorn => extended_horn_test,
        Family::Chamber => {
            return Generated { inequalities: chamber_inequalities(n), merged: 0 };
        }
    };
    let mut blocks = Vec::new();
    for r in 1..=n {
        for ap in 0..=r {
            for bp in 0..=r - ap {
                blocks.push((r, ap, bp, r - ap - bp));
            }
        }
    }
    let found: Vec<HornDatum> = blocks
        .par_iter()
        .flat_map_iter(|&(r, ap, bp, cp)| {
            let pa = pairs_of_rank(n, r, ap);
            let pb = pairs_of_rank(n, r, bp);
            let pc = pairs_of_rank(n, r, cp);
            let mut out = Vec::new();
            for a in &pa {
                for b in &pb {
                    for c in &pc {
                        if test(a, b, c) {
                            out.push(datum_of(a, b, c));
                        }
                    }
                }
            }
            out
        })
        .collect();
    let mut by_vector: BTreeMap<Vec<i64>, Inequality> = BTreeMap::new();
    let mut merged = 0;
    for d in found {
        let ineq = Inequality::from_datum(d, family);
        if by_vector.contains_key(&ineq.coeffs) {
            merged += 1;
        } else {
            by_vector.insert(ineq.coeffs.clone(), ineq);
        }
    }
    Generated { inequalities: by_vector.into_values().collect(), merged }
}

/// The minimal (facet-defining) inequalities, sorted by coefficient vector.
pub fn minimal_inequalities(n: u32) -> Vec<Inequality> {
    generate(n, Family::Minimal).inequalities
}

/// The extended Horn inequalities, sorted by coefficient vector.
pub fn extended_horn_inequalities(n: u32) -> Vec<Inequality> {
    generate(n, Family::ExtendedHorn).inequalities
}

/// Generate a family, also reporting coefficient-vector merges.
pub fn inequalities_with_report(n: u32, family: Family) -> Generated {
    generate(n, family)
}

/// Does the sextuple satisfy the conditions selecting a minimal inequality?
pub fn is_minimal_datum(d: &HornDatum) -> bool {
    let n = d.n();
    let r = d.r;
    if d.a_prime.len() + d.b_prime.len() + d.c_prime.len() != r as usize || r > n {
        return false;
    }
    let data = |a: &Subset, ap: &Subset| {
        let (t0, t2) = tau02(a, ap).expect("disjoint");
        PairData {
            t0c: t0.complement(2 * n - 2 * r, r as usize).expect("τ⁰ fits"),
            t2c: t2.complement(r, r as usize).expect("τ² fits"),
            t0,
            t2,
            tau_a: a.tau(),
            tau_a_prime: ap.tau(),
            a: a.clone(),
            a_prime: ap.clone(),
        }
    };
    minimal_test(&data(&d.a, &d.a_prime), &data(&d.b, &d.b_prime), &data(&d.c, &d.c_prime))
}

/// Membership verdict with the first violated inequality, if any.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub member: bool,
    pub violated: Option<Inequality>,
}

/// Parse a rational partition such as `"3/2,1,0"`.
pub fn parse_rational_partition(s: &str) -> Result<Vec<Ratio<i64>>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Ratio<i64>>()
                .map_err(|_| Error::Parse { what: "rational partition", input: s.into() })
        })
        .collect()
}

/// Clears denominators of a rational triple, checking that each part is a
/// weakly decreasing nonnegative vector of length at most `n`.
pub fn clear_denominators(n: usize, parts: [&[Ratio<i64>]; 3]) -> Result<Vec<i64>> {
    for p in parts {
        let bad = p.len() > n
            || p.iter().any(|x| *x < Ratio::from_integer(0))
            || p.windows(2).any(|w| w[0] < w[1]);
        if bad {
            return Err(Error::NotDecreasing(
                p.iter().map(|x| x.to_integer()).collect(),
            ));
        }
    }
    let den = parts
        .iter()
        .flat_map(|p| p.iter())
        .fold(1i64, |acc, x| acc.lcm(x.denom()));
    let mut out = vec![0i64; 3 * n];
    for (b, p) in parts.iter().enumerate() {
        for (i, x) in p.iter().enumerate() {
            let scaled = x * Ratio::from_integer(den);
            out[b * n + i] = scaled.to_integer();
        }
    }
    Ok(out)
}

/// Membership of the integer point `x` in the cone cut out by `ineqs`.
pub fn check_point(ineqs: &[Inequality], x: &[i64]) -> Verdict {
    match ineqs.iter().find(|q| q.evaluate(x) < 0) {
        Some(q) => Verdict { member: false, violated: Some(q.clone()) },
        None => Verdict { member: true, violated: None },
    }
}

/// Is the rational dominant triple in the cone cut out by `ineqs`?
pub fn is_member(n: usize, lam: &[Ratio<i64>], mu: &[Ratio<i64>], nu: &[Ratio<i64>], ineqs: &[Inequality]) -> Result<Verdict> {
    let x = clear_denominators(n, [lam, mu, nu])?;
    Ok(check_point(ineqs, &x))
}

/// The two factors of `N_{λ,μ,ν}` on the boundary hyperplane of a minimal
/// inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationResult {
    pub lr_factor: u64,
    pub nl_factor: BigUint,
    pub product: BigUint,
}

/// `N_{λ,μ,ν} = c^{(ν_{C,C'})*}_{λ_{A,A'}, μ_{B,B'}} · N_{λ^{A,A'}, μ^{B,B'}, ν^{C,C'}}`
/// when `(λ, μ, ν)` lies on the hyperplane of the minimal inequality `d`.
pub fn factor_boundary(lam: &Partition, mu: &Partition, nu: &Partition, d: &HornDatum) -> Result<FactorizationResult> {
    let n = d.n() as usize;
    if lam.len() > n || mu.len() > n || nu.len() > n {
        return Err(Error::Dimension { expected: n, got: lam.len().max(mu.len()).max(nu.len()) });
    }
    if !is_minimal_datum(d) {
        return Err(Error::NotAFacet(format!("{d:?}")));
    }
    let value = d.evaluate(lam, mu, nu);
    if value != 0 {
        return Err(Error::NotOnBoundary(value));
    }
    let r = d.r as usize;
    let la = lam.weight_aa(&d.a, &d.a_prime)?;
    let mb = mu.weight_aa(&d.b, &d.b_prime)?;
    let nc = nu.weight_aa(&d.c, &d.c_prime)?.star_dual();
    let lr_factor = lr_gl(&la, &mb, &nc, r)?;
    let nl_factor = nl(
        &lam.weight_upper(&d.a, &d.a_prime)?,
        &mu.weight_upper(&d.b, &d.b_prime)?,
        &nu.weight_upper(&d.c, &d.c_prime)?,
    );
    let product = &nl_factor * lr_factor;
    Ok(FactorizationResult { lr_factor, nl_factor, product })
}
