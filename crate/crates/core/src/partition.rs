//! Partitions, dominant weights and subsets of `[n]`, together with the
//! symbol-level operators applied to them: transpose, complement inside a
//! rectangle, `tau(A)`, restriction `lambda_A` and the signed weights
//! `lambda_{A,A'}`.
//!
//! Text format: comma-separated parts (`"5,4,3"`). The empty partition is
//! written `""` or `"0"`. Subsets use the same syntax (`"2,3,4"`).

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(
                parts.iter().map(|&p| p as i64).collect(),
            ));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(a, a, ..., a)` with `len` parts.
    pub fn rectangle(width: u32, len: usize) -> Self {
        if width == 0 {
            Partition::empty()
        } else {
            Partition(vec![width; len])
        }
    }

    /// Sort arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    /// Part `i` (1-based); zero past the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(1)
    }

    /// Parts padded with zeros to `len` entries (truncates if shorter).
    pub fn padded(&self, len: usize) -> Vec<u32> {
        (1..=len).map(|i| self.part(i)).collect()
    }

    /// Young diagram containment `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in(&self, width: u32, height: usize) -> bool {
        self.len() <= height && self.first() <= width
    }

    /// Entrywise minimum (the largest partition contained in both).
    pub fn intersection(&self, other: &Partition) -> Partition {
        Partition::new(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
        .expect("min of partitions")
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.first() as usize;
        let parts = (1..=width)
            .map(|j| self.0.iter().filter(|&&p| p as usize >= j).count() as u32)
            .collect();
        Partition(parts)
    }

    /// `lambda^{∨[a^b]} = (a - lambda_b, ..., a - lambda_1)`.
    pub fn complement(&self, width: u32, height: usize) -> Result<Partition> {
        if !self.fits_in(width, height) {
            return Err(Error::NotInRectangle {
                partition: self.to_string(),
                width,
                height: height as u32,
            });
        }
        let parts = (1..=height)
            .rev()
            .map(|i| width - self.part(i))
            .collect();
        Partition::new(parts)
    }

    /// `lambda_{<= k}`: the first `k` parts.
    pub fn head(&self, k: usize) -> Partition {
        Partition(self.0.iter().take(k).copied().collect())
    }

    /// `lambda_{> k}`: parts after the `k`-th.
    pub fn tail(&self, k: usize) -> Partition {
        Partition(self.0.iter().skip(k).copied().collect())
    }

    /// `lambda + a^len`.
    pub fn add_rectangle(&self, a: u32, len: usize) -> Partition {
        let l = len.max(self.len());
        Partition::new(
            (1..=l)
                .map(|i| self.part(i) + if i <= len { a } else { 0 })
                .collect(),
        )
        .expect("adding a rectangle keeps the order when len >= length")
    }

    /// `a^ell ∪ nu = (a, ..., a, nu_1, nu_2, ...)`.
    pub fn prefix_union(a: u32, ell: usize, nu: &Partition) -> Result<Partition> {
        if a < nu.first() {
            return Err(Error::PrefixTooSmall { a, first: nu.first() });
        }
        let mut parts = vec![a; ell];
        parts.extend_from_slice(&nu.0);
        Partition::new(parts)
    }

    /// Sum of the parts indexed by `subset` (`|lambda_A|`).
    pub fn restrict_sum(&self, subset: &Subset) -> u64 {
        subset.iter().map(|i| self.part(i as usize) as u64).sum()
    }

    /// `lambda_A = (lambda_{i_1}, ..., lambda_{i_r})`.
    pub fn restrict(&self, subset: &Subset) -> Partition {
        Partition::new(subset.iter().map(|i| self.part(i as usize)).collect())
            .expect("subsequence of a partition")
    }

    /// `lambda_{A,A'} = (lambda_{i'_1}, ..., lambda_{i'_s}, -lambda_{i_t}, ..., -lambda_{i_1})`.
    pub fn weight_aa(&self, a: &Subset, a_prime: &Subset) -> Result<DominantWeight> {
        a.check_disjoint(a_prime)?;
        let mut parts: Vec<i64> = a_prime.iter().map(|i| self.part(i as usize) as i64).collect();
        parts.extend(a.iter().rev().map(|i| -(self.part(i as usize) as i64)));
        DominantWeight::new(parts)
    }

    /// `lambda^{A,A'} = lambda_{[n] - (A ∪ A')}`.
    pub fn weight_upper(&self, a: &Subset, a_prime: &Subset) -> Result<Partition> {
        a.check_disjoint(a_prime)?;
        let rest = a.union(a_prime)?.complement();
        Ok(self.restrict(&rest))
    }

    /// All partitions contained in `self` with exactly `size` boxes, in
    /// reverse lexicographic order.
    pub fn sub_partitions(&self, size: u64) -> Vec<Partition> {
        fn rec(bound: &[u32], i: usize, rem: u64, prev: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if i >= bound.len() {
                return;
            }
            // remaining capacity check
            let cap: u64 = bound[i..]
                .iter()
                .map(|&b| b.min(prev) as u64)
                .sum();
            if cap < rem {
                return;
            }
            let hi = prev.min(bound[i]).min(rem as u32);
            for v in (1..=hi).rev() {
                cur.push(v);
                rec(bound, i + 1, rem - v as u64, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if size > self.size() {
            return out;
        }
        rec(&self.0, 0, size, u32::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of `size` with at most `max_len` parts, each at most `max_part`.
    pub fn all_of_size(size: u64, max_len: usize, max_part: u32) -> Vec<Partition> {
        let bound = Partition::rectangle(max_part, max_len);
        bound.sub_partitions(size)
    }

    /// All partitions inside the `width x height` rectangle.
    pub fn all_in_box(width: u32, height: usize) -> Vec<Partition> {
        let bound = Partition::rectangle(width, height);
        (0..=bound.size())
            .flat_map(|s| bound.sub_partitions(s))
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

fn parse_list<T: FromStr>(s: &str, what: &'static str) -> Result<Vec<T>> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(s);
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim().parse::<T>().map_err(|_| Error::Parse {
                what,
                input: s.to_string(),
            })
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s, "partition")?)
    }
}

/// Parse a `;`-separated list of partitions, e.g. `"1;1;1,1"` or `";2;2"`.
pub fn parse_partition_list(s: &str) -> Result<Vec<Partition>> {
    s.split(';').map(str::parse).collect()
}

/// A weakly decreasing integer vector with an explicit length; entries
/// may be negative. Highest weights of `GL_r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(parts));
        }
        Ok(DominantWeight(parts))
    }

    pub fn zero(len: usize) -> Self {
        DominantWeight(vec![0; len])
    }

    /// `lambda` padded with zeros to `len` entries.
    pub fn from_partition(p: &Partition, len: usize) -> Result<Self> {
        if p.len() > len {
            return Err(Error::RankMismatch { len: p.len(), rank: len });
        }
        Ok(DominantWeight(p.padded(len).into_iter().map(i64::from).collect()))
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn min(&self) -> i64 {
        self.0.last().copied().unwrap_or(0)
    }

    /// `lambda* = (-lambda_n, ..., -lambda_1)`.
    pub fn star_dual(&self) -> DominantWeight {
        DominantWeight(self.0.iter().rev().map(|&x| -x).collect())
    }

    /// `lambda + a^n`.
    pub fn shift(&self, a: i64) -> DominantWeight {
        DominantWeight(self.0.iter().map(|&x| x + a).collect())
    }

    /// The partition with the same parts, if all parts are nonnegative.
    pub fn to_partition(&self) -> Option<Partition> {
        if self.min() < 0 {
            return None;
        }
        Partition::new(self.0.iter().map(|&x| x as u32).collect()).ok()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for DominantWeight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DominantWeight::new(parse_list(s, "dominant weight")?)
    }
}

/// A subset of `[n] = {1, ..., n}`, kept as a strictly increasing list.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Subset {
    n: u32,
    elements: Vec<u32>,
}

impl Subset {
    pub fn new(n: u32, mut elements: Vec<u32>) -> Result<Self> {
        elements.sort_unstable();
        let bad = elements.iter().any(|&e| e == 0 || e > n) || elements.windows(2).any(|w| w[0] == w[1]);
        if bad {
            return Err(Error::InvalidSubset { n, elements });
        }
        Ok(Subset { n, elements })
    }

    pub fn empty(n: u32) -> Self {
        Subset { n, elements: Vec::new() }
    }

    /// `{1, ..., k}` inside `[n]`.
    pub fn initial(n: u32, k: u32) -> Self {
        Subset { n, elements: (1..=k.min(n)).collect() }
    }

    /// Bitmask encoding (bit `i-1` set iff `i` is an element).
    pub fn from_mask(n: u32, mask: u64) -> Self {
        Subset {
            n,
            elements: (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect(),
        }
    }

    pub fn mask(&self) -> u64 {
        self.elements.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    pub fn ambient(&self) -> u32 {
        self.n
    }

    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u32> + '_ {
        self.elements.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.elements.binary_search(&i).is_ok()
    }

    pub fn is_disjoint(&self, other: &Subset) -> bool {
        self.elements.iter().all(|&e| !other.contains(e))
    }

    pub fn check_disjoint(&self, other: &Subset) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        if !self.is_disjoint(other) {
            return Err(Error::Overlap(self.elements.clone(), other.elements.clone()));
        }
        Ok(())
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        let mut e = self.elements.clone();
        e.extend(other.iter().filter(|&i| !self.contains(i)));
        Subset::new(self.n, e)
    }

    /// `[n] - A`.
    pub fn complement(&self) -> Subset {
        Subset {
            n: self.n,
            elements: (1..=self.n).filter(|&i| !self.contains(i)).collect(),
        }
    }

    /// `tau(A) = (i_r - r, ..., i_1 - 1)`; fits inside `(n - |A|)^{|A|}`.
    pub fn tau(&self) -> Partition {
        let r = self.elements.len();
        Partition::new(
            (0..r)
                .map(|k| self.elements[r - 1 - k] - (r - k) as u32)
                .collect(),
        )
        .expect("tau of an increasing sequence is a partition")
    }

    /// All subsets of `[n]` with `k` elements, in lexicographic order.
    pub fn all_of_size(n: u32, k: usize) -> Vec<Subset> {
        fn rec(n: u32, k: usize, start: u32, cur: &mut Vec<u32>, out: &mut Vec<Subset>) {
            if cur.len() == k {
                out.push(Subset { n, elements: cur.clone() });
                return;
            }
            for i in start..=n {
                if (n - i + 1) as usize + cur.len() < k {
                    break;
                }
                cur.push(i);
                rec(n, k, i + 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, k, 1, &mut Vec::new(), &mut out);
        out
    }

    /// Parse `"2,3,4"` as a subset of `[n]`.
    pub fn parse(n: u32, s: &str) -> Result<Subset> {
        let elems: Vec<u32> = parse_list(s, "subset")?;
        let elems: Vec<u32> = elems.into_iter().filter(|&e| e != 0 || s.trim() != "0").collect();
        Subset::new(n, elems)
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.elements.len(), &self.elements).cmp(&(other.n, other.elements.len(), &other.elements))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The sextuple `(A, A', B, B', C, C')` of subsets of `[n]` indexing an
/// inequality `|λ_A| - |λ_A'| + |μ_B| - |μ_B'| + |ν_C| - |ν_C'| >= 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HornDatum {
    pub a: Subset,
    pub a_prime: Subset,
    pub b: Subset,
    pub b_prime: Subset,
    pub c: Subset,
    pub c_prime: Subset,
    pub r: u32,
}

impl HornDatum {
    /// Validates disjointness and `|A|+|A'| = |B|+|B'| = |C|+|C'| = r <= n`.
    pub fn new(
        a: Subset,
        a_prime: Subset,
        b: Subset,
        b_prime: Subset,
        c: Subset,
        c_prime: Subset,
    ) -> Result<Self> {
        let n = a.ambient();
        for s in [&a_prime, &b, &b_prime, &c, &c_prime] {
            if s.ambient() != n {
                return Err(Error::AmbientMismatch(n, s.ambient()));
            }
        }
        a.check_disjoint(&a_prime)?;
        b.check_disjoint(&b_prime)?;
        c.check_disjoint(&c_prime)?;
        let r = a.len() + a_prime.len();
        if b.len() + b_prime.len() != r || c.len() + c_prime.len() != r {
            return Err(Error::InvalidDatum(format!(
                "block sizes differ: {}, {}, {}",
                r,
                b.len() + b_prime.len(),
                c.len() + c_prime.len()
            )));
        }
        if r == 0 {
            return Err(Error::InvalidDatum("r must be positive".into()));
        }
        Ok(HornDatum { a, a_prime, b, b_prime, c, c_prime, r: r as u32 })
    }

    pub fn n(&self) -> u32 {
        self.a.ambient()
    }

    pub fn pairs(&self) -> [(&Subset, &Subset); 3] {
        [(&self.a, &self.a_prime), (&self.b, &self.b_prime), (&self.c, &self.c_prime)]
    }

    /// Coefficient vector of length `3n` with `+1` on the unprimed sets and
    /// `-1` on the primed ones.
    pub fn coefficients(&self) -> Vec<i8> {
        let n = self.n();
        let mut v = Vec::with_capacity(3 * n as usize);
        for (plus, minus) in self.pairs() {
            v.extend((1..=n).map(|i| {
                if plus.contains(i) {
                    1
                } else if minus.contains(i) {
                    -1
                } else {
                    0
                }
            }));
        }
        v
    }

    /// Recover the sextuple from a coefficient vector.
    pub fn from_coefficients(n: u32, coeffs: &[i8]) -> Result<Self> {
        if coeffs.len() != 3 * n as usize {
            return Err(Error::Dimension { expected: 3 * n as usize, got: coeffs.len() });
        }
        let mut sets = Vec::new();
        for block in coeffs.chunks(n as usize) {
            let plus = (1..=n).filter(|&i| block[i as usize - 1] == 1).collect();
            let minus = (1..=n).filter(|&i| block[i as usize - 1] == -1).collect();
            sets.push(Subset::new(n, plus)?);
            sets.push(Subset::new(n, minus)?);
        }
        let mut it = sets.into_iter();
        let mut next = || it.next().expect("six subsets");
        HornDatum::new(next(), next(), next(), next(), next(), next())
    }

    /// `|λ_A| - |λ_A'| + |μ_B| - |μ_B'| + |ν_C| - |ν_C'|`.
    pub fn evaluate(&self, lam: &Partition, mu: &Partition, nu: &Partition) -> i64 {
        let f = |p: &Partition, plus: &Subset, minus: &Subset| {
            p.restrict_sum(plus) as i64 - p.restrict_sum(minus) as i64
        };
        f(lam, &self.a, &self.a_prime) + f(mu, &self.b, &self.b_prime) + f(nu, &self.c, &self.c_prime)
    }
}
