//! Littlewood-Richardson coefficients.
//!
//! Three independent rules are provided:
//!
//! * [`lr_v1`] counts ballot tableaux of shape `ν/λ` and content `μ`,
//!   filling one row at a time (the hot path, memoized by [`lr`]);
//! * [`lr_v2`] counts ballot tableaux of shape `λ⋆μ` and content `ν`,
//!   filling one cell at a time;
//! * [`lr_v3`] counts tableaux of shape `ν/λ` rectifying to `Y_μ`, built
//!   one value at a time as horizontal strips with rectification pruning.

use std::sync::LazyLock;

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::partition::{DominantWeight, Partition};
use crate::tableau::{rectify, SkewShape, Tableau};

/// Cheap necessary conditions for `c^ν_{λ,μ} > 0`.
fn admissible(lam: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lam.size() + mu.size() == nu.size()
        && lam.is_contained_in(nu)
        && mu.is_contained_in(nu)
        && nu.first() <= lam.first() + mu.first()
        && nu.len() <= lam.len() + mu.len()
}

/// Row-by-row search over ballot fillings of `outer/inner` with content
/// `content`. Row `r` is described by the multiplicities `k[r][i]` of each
/// value `i`; `visit` is called for each complete filling and returns
/// `false` to stop the search.
struct RowSearch<'a> {
    outer: Vec<u32>,
    inner: Vec<u32>,
    content: &'a [u32],
    /// `rows[r][i]` = multiplicity of value `i + 1` in row `r + 1`.
    rows: Vec<Vec<u32>>,
    /// Running content of the rows placed so far.
    used: Vec<u32>,
}

impl<'a> RowSearch<'a> {
    fn new(outer: &Partition, inner: &Partition, content: &'a Partition) -> Self {
        let h = outer.len();
        RowSearch {
            outer: outer.padded(h),
            inner: inner.padded(h),
            content: content.parts(),
            rows: vec![vec![0; content.len()]; h],
            used: vec![0; content.len()],
        }
    }

    /// Returns `false` when the visitor asked to stop.
    fn run(&mut self, visit: &mut dyn FnMut(&[Vec<u32>]) -> bool) -> bool {
        self.row(0, visit)
    }

    fn row(&mut self, r: usize, visit: &mut dyn FnMut(&[Vec<u32>]) -> bool) -> bool {
        if r == self.outer.len() {
            return visit(&self.rows);
        }
        let len = self.outer[r] - self.inner[r];
        // values larger than r + 1 can never appear in row r + 1
        let top = self.content.len().min(r + 1);
        self.value(r, 0, top, len, self.inner[r], visit)
    }

    /// Choose the multiplicity of value `i + 1` in row `r + 1`; `end` is the
    /// column of the last cell filled so far in this row.
    fn value(
        &mut self,
        r: usize,
        i: usize,
        top: usize,
        left: u32,
        end: u32,
        visit: &mut dyn FnMut(&[Vec<u32>]) -> bool,
    ) -> bool {
        if left == 0 {
            let ok = self.row(r + 1, visit);
            return ok;
        }
        if i == top {
            return true;
        }
        let mut hi = left.min(self.content[i] - self.used[i]);
        if i > 0 {
            // ballot: the i+1's of this row are read before its i's
            hi = hi.min(self.used[i - 1] - self.rows[r][i - 1] - self.used[i]);
        }
        if r > 0 {
            // column strictness: cells above must hold values <= i
            let above = self.inner[r - 1] + self.rows[r - 1][..i].iter().sum::<u32>();
            hi = hi.min(above.saturating_sub(end));
        }
        // the values after i must still be able to fill the row
        let rest: u32 = (i + 1..top)
            .map(|j| self.content[j] - self.used[j])
            .sum();
        let lo = left.saturating_sub(rest);
        if lo > hi {
            return true;
        }
        for k in (lo..=hi).rev() {
            self.rows[r][i] = k;
            self.used[i] += k;
            let go = self.value(r, i + 1, top, left - k, end + k, visit);
            self.used[i] -= k;
            self.rows[r][i] = 0;
            if !go {
                return false;
            }
        }
        true
    }
}

fn rows_to_tableau(outer: &Partition, inner: &Partition, rows: &[Vec<u32>]) -> Tableau {
    let filled = rows
        .iter()
        .map(|k| {
            k.iter()
                .enumerate()
                .flat_map(|(i, &m)| std::iter::repeat_n(i as i64 + 1, m as usize))
                .collect()
        })
        .collect();
    Tableau::new_unchecked(SkewShape { outer: outer.clone(), inner: inner.clone() }, filled)
        .expect("search respects the shape")
}

/// `c^ν_{λ,μ}` as the number of ballot tableaux in `SSYT(ν/λ, μ)`.
pub fn lr_v1(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !admissible(lam, mu, nu) {
        return 0;
    }
    let mut count = 0u64;
    RowSearch::new(nu, lam, mu).run(&mut |_| {
        count += 1;
        true
    });
    count
}

/// All ballot tableaux in `SSYT(ν/λ, μ)`.
pub fn lr_tableaux(lam: &Partition, mu: &Partition, nu: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if !admissible(lam, mu, nu) {
        return out;
    }
    RowSearch::new(nu, lam, mu).run(&mut |rows| {
        out.push(rows_to_tableau(nu, lam, rows));
        true
    });
    out
}

/// One ballot tableau in `SSYT(ν/λ, μ)`, if any.
pub fn lr_witness(lam: &Partition, mu: &Partition, nu: &Partition) -> Option<Tableau> {
    if !admissible(lam, mu, nu) {
        return None;
    }
    let mut found = None;
    RowSearch::new(nu, lam, mu).run(&mut |rows| {
        found = Some(rows_to_tableau(nu, lam, rows));
        false
    });
    found
}

/// Ballot fillings of `outer/inner` of any content.
pub fn ballot_tableaux(shape: &SkewShape) -> Vec<Tableau> {
    let size = shape.size();
    let cap = shape.rows() as u32;
    Partition::all_of_size(size, cap as usize, size as u32)
        .iter()
        .filter(|mu| mu.is_contained_in(&shape.outer))
        .flat_map(|mu| lr_tableaux(&shape.inner, mu, &shape.outer))
        .collect()
}

/// `c^ν_{λ,μ} > 0`, stopping at the first witness.
pub fn lr_positive(lam: &Partition, mu: &Partition, nu: &Partition) -> bool {
    if !admissible(lam, mu, nu) {
        return false;
    }
    if let Some(v) = CACHE.get(&key(lam, mu, nu)) {
        return *v > 0;
    }
    let (a, b) = orient(lam, mu);
    let mut found = false;
    RowSearch::new(nu, a, b).run(&mut |_| {
        found = true;
        false
    });
    found
}

/// `c^ν_{λ,μ}` via ballot tableaux of shape `λ⋆μ` and content `ν`.
pub fn lr_v2(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lam.size() + mu.size() != nu.size() {
        return 0;
    }
    let shape = SkewShape::star(lam, mu);
    // reading order: rows top to bottom, right to left within a row
    let cells: Vec<(usize, usize)> = (1..=shape.rows())
        .flat_map(|r| {
            (shape.inner.part(r) as usize + 1..=shape.outer.part(r) as usize)
                .rev()
                .map(move |c| (r, c))
        })
        .collect();
    let mut grid: Vec<Vec<i64>> = (1..=shape.rows())
        .map(|r| vec![0; shape.outer.part(r) as usize + 1])
        .collect();
    let caps = nu.parts();
    let mut counts = vec![0u32; caps.len() + 1];

    fn rec(
        i: usize,
        cells: &[(usize, usize)],
        shape: &SkewShape,
        grid: &mut [Vec<i64>],
        caps: &[u32],
        counts: &mut [u32],
    ) -> u64 {
        if i == cells.len() {
            return 1;
        }
        let (r, c) = cells[i];
        // weakly increasing rows: at most the entry to the right
        let right = if (c as u32) < shape.outer.part(r) {
            grid[r - 1][c + 1]
        } else {
            caps.len() as i64
        };
        let above = if r > 1 && c as u32 > shape.inner.part(r - 1) {
            grid[r - 2][c]
        } else {
            0
        };
        let mut total = 0;
        for v in above + 1..=right {
            let vi = v as usize;
            if counts[vi] >= caps[vi - 1] || (vi >= 2 && counts[vi] + 1 > counts[vi - 1]) {
                continue;
            }
            counts[vi] += 1;
            grid[r - 1][c] = v;
            total += rec(i + 1, cells, shape, grid, caps, counts);
            counts[vi] -= 1;
        }
        grid[r - 1][c] = 0;
        total
    }
    rec(0, &cells, &shape, &mut grid, caps, &mut counts)
}

/// Horizontal strips `κ'/κ` of the given size with `κ' ⊆ bound`.
fn horizontal_strips(kappa: &Partition, bound: &Partition, size: u32) -> Vec<Partition> {
    let h = bound.len();
    let base = kappa.padded(h);
    let mut out = Vec::new();
    fn rec(r: usize, left: u32, base: &[u32], bound: &Partition, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if r == base.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip shape"));
            }
            return;
        }
        let cap = if r == 0 { bound.part(1) } else { base[r - 1].min(bound.part(r + 1)) };
        let cap = cap.min(bound.part(r + 1));
        let room = cap.saturating_sub(base[r]);
        for add in 0..=room.min(left) {
            cur.push(base[r] + add);
            rec(r + 1, left - add, base, bound, cur, out);
            cur.pop();
        }
    }
    rec(0, size, &base, bound, &mut Vec::new(), &mut out);
    out
}

/// Number of `T ∈ SSYT(ν/λ)` with `Rect(T) = target`.
pub fn count_rectifying_to(lam: &Partition, nu: &Partition, target: &Tableau) -> u64 {
    if !target.is_straight() || !lam.is_contained_in(nu) {
        return 0;
    }
    if lam.size() + target.size() as u64 != nu.size() {
        return 0;
    }
    let counts = target.content_counts();
    fn rec(k: usize, t: Tableau, nu: &Partition, target: &Tableau, counts: &[u32]) -> u64 {
        if k == counts.len() {
            return u64::from(t.outer() == nu);
        }
        let mut total = 0;
        let want = target.restrict_values(k as i64 + 1);
        for next in horizontal_strips(t.outer(), nu, counts[k]) {
            let rows = (1..=next.len())
                .map(|r| {
                    let mut row = t.rows().get(r - 1).cloned().unwrap_or_default();
                    row.extend(std::iter::repeat_n(k as i64 + 1, (next.part(r) - t.outer().part(r)) as usize));
                    row
                })
                .collect();
            let shape = SkewShape { outer: next.clone(), inner: t.inner().clone() };
            let Ok(u) = Tableau::new(shape, rows) else { continue };
            if rectify(&u) == want {
                total += rec(k + 1, u, nu, target, counts);
            }
        }
        total
    }
    rec(0, Tableau::empty(lam.clone()), nu, target, &counts)
}

/// `c^ν_{λ,μ}` as the number of tableaux of shape `ν/λ` rectifying to `Y_μ`.
pub fn lr_v3(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    count_rectifying_to(lam, nu, &Tableau::superstandard(mu))
}

type Key = (Partition, Partition, Partition);

static CACHE: LazyLock<DashMap<Key, u64>> = LazyLock::new(DashMap::new);

fn key(lam: &Partition, mu: &Partition, nu: &Partition) -> Key {
    if lam <= mu {
        (lam.clone(), mu.clone(), nu.clone())
    } else {
        (mu.clone(), lam.clone(), nu.clone())
    }
}

/// Fill `ν/a` with content `b` where `a` is the larger of the two factors:
/// fewer cells to fill, fewer branches.
fn orient<'a>(lam: &'a Partition, mu: &'a Partition) -> (&'a Partition, &'a Partition) {
    if (lam.size(), lam) >= (mu.size(), mu) {
        (lam, mu)
    } else {
        (mu, lam)
    }
}

/// Memoized `c^ν_{λ,μ}`.
pub fn lr(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !admissible(lam, mu, nu) {
        return 0;
    }
    let k = key(lam, mu, nu);
    if let Some(v) = CACHE.get(&k) {
        return *v;
    }
    let (a, b) = orient(lam, mu);
    let v = lr_v1(a, b, nu);
    CACHE.insert(k, v);
    v
}

/// Number of memoized coefficients.
pub fn cache_len() -> usize {
    CACHE.len()
}

/// `c^ν_{λ,μ}` for dominant weights of `GL_r`, reduced to partitions by
/// `c^ν_{λ,μ} = c^{ν+(a+b)^r}_{λ+a^r, μ+b^r}` with `a = -λ_r`, `b = -μ_r`.
pub fn lr_gl(lam: &DominantWeight, mu: &DominantWeight, nu: &DominantWeight, r: usize) -> Result<u64> {
    for w in [lam, mu, nu] {
        if w.len() != r {
            return Err(Error::RankMismatch { len: w.len(), rank: r });
        }
    }
    let a = -lam.min();
    let b = -mu.min();
    let (Some(l), Some(m)) = (lam.shift(a).to_partition(), mu.shift(b).to_partition()) else {
        unreachable!("shifting by minus the last entry gives a partition");
    };
    match nu.shift(a + b).to_partition() {
        Some(n) => Ok(lr(&l, &m, &n)),
        None => Ok(0),
    }
}

/// Partitions `(α, β)` with `c^{ν≤k}_{λ≤k,α} > 0`, `c^{ν>k}_{λ>k,β} > 0`
/// and `c^μ_{α,β} > 0`, read off a ballot witness of `c^ν_{λ,μ}`.
pub fn split_content(lam: &Partition, mu: &Partition, nu: &Partition, k: usize) -> Result<(Partition, Partition)> {
    if k == 0 {
        return Err(Error::Precondition("k must be positive".into()));
    }
    let t = lr_witness(lam, mu, nu)
        .ok_or_else(|| Error::Precondition(format!("c^{nu}_{{{lam},{mu}}} vanishes")))?;
    if (k + 1..=nu.len()).all(|r| nu.part(r) == lam.part(r)) {
        return Ok((mu.clone(), Partition::empty()));
    }
    let alpha = t.row_slice(1, k).content().expect("prefix of a ballot word");
    let beta = rectify(&t.row_slice(k + 1, nu.len())).outer().clone();
    let checks = [
        lr_positive(&lam.head(k), &alpha, &nu.head(k)),
        lr_positive(&lam.tail(k), &beta, &nu.tail(k)),
        lr_positive(&alpha, &beta, mu),
    ];
    if checks.iter().all(|&c| c) {
        Ok((alpha, beta))
    } else {
        Err(Error::Precondition(format!("split of {lam},{mu},{nu} at {k} failed its checks")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::all_ssyt;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Brute force: all semistandard fillings, filtered by content and ballotness.
    fn brute(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
        if !lam.is_contained_in(nu) || lam.size() + mu.size() != nu.size() {
            return 0;
        }
        let shape = SkewShape::new(nu.clone(), lam.clone()).unwrap();
        all_ssyt(&shape, mu.len().max(1) as i64)
            .into_iter()
            .filter(|t| t.is_ballot() && t.content_counts() == mu.parts())
            .count() as u64
    }

    #[test]
    fn small_values() {
        let e = Partition::empty();
        for f in [lr_v1, lr_v2, lr_v3, lr] {
            assert_eq!(f(&p(&[1, 1, 1]), &p(&[1]), &p(&[2, 1, 1])), 1);
            assert_eq!(f(&e, &e, &e), 1);
            assert_eq!(f(&p(&[1]), &p(&[1]), &p(&[2])), 1);
            assert_eq!(f(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
            assert_eq!(f(&p(&[3, 3, 3]), &e, &p(&[3, 3, 3])), 1);
            assert_eq!(f(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
            assert_eq!(f(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])), 1);
            assert_eq!(f(&p(&[1]), &p(&[1]), &p(&[1])), 0);
        }
    }

    #[test]
    fn rules_agree_with_brute_force() {
        for s in 0..=6u64 {
            for nu in Partition::all_of_size(s, 6, 6) {
                for ls in 0..=s {
                    for lam in nu.sub_partitions(ls) {
                        for mu in Partition::all_of_size(s - ls, 6, 6) {
                            let b = brute(&lam, &mu, &nu);
                            assert_eq!(lr_v1(&lam, &mu, &nu), b, "{lam:?} {mu:?} {nu:?}");
                            assert_eq!(lr_v2(&lam, &mu, &nu), b, "{lam:?} {mu:?} {nu:?}");
                            assert_eq!(lr_v3(&lam, &mu, &nu), b, "{lam:?} {mu:?} {nu:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_tableaux_are_ballot_and_counted() {
        let (lam, mu, nu) = (p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1]));
        let ts = lr_tableaux(&lam, &mu, &nu);
        assert_eq!(ts.len(), 2);
        for t in ts {
            assert!(t.is_semistandard() && t.is_ballot());
            assert_eq!(t.content(), Some(mu.clone()));
        }
        assert!(lr_witness(&p(&[2]), &p(&[2]), &p(&[2, 1, 1])).is_none());
    }

    #[test]
    fn non_yamanouchi_target_gives_same_count() {
        // U = [[1,2],[2]] has shape (2,1), not Y_(2,1)
        let u = Tableau::from_rows(vec![vec![1, 2], vec![2]]).unwrap();
        for (lam, nu) in [(p(&[2, 1]), p(&[3, 2, 1])), (p(&[2]), p(&[3, 2])), (p(&[1, 1]), p(&[2, 2, 1]))] {
            assert_eq!(count_rectifying_to(&lam, &nu, &u), lr_v1(&lam, &p(&[2, 1]), &nu));
        }
    }

    #[test]
    fn gl_examples() {
        let w = |v: &[i64]| DominantWeight::new(v.to_vec()).unwrap();
        assert_eq!(lr_gl(&w(&[1, -3]), &w(&[0, 0]), &w(&[1, -3]), 2).unwrap(), 1);
        assert_eq!(lr_gl(&w(&[0, 0]), &w(&[0, 0]), &w(&[0, 0]), 2).unwrap(), 1);
        assert_eq!(lr_gl(&w(&[0, -1]), &w(&[1, 0]), &w(&[0, 0]), 2).unwrap(), 1);
        assert!(matches!(
            lr_gl(&w(&[1]), &w(&[0, 0]), &w(&[1, 0]), 2),
            Err(Error::RankMismatch { len: 1, rank: 2 })
        ));
    }

    #[test]
    fn gl_duality() {
        for lam in Partition::all_in_box(3, 3) {
            for mu in Partition::all_in_box(2, 3) {
                for nu in Partition::all_of_size(lam.size() + mu.size(), 3, 5) {
                    let d = |q: &Partition| DominantWeight::from_partition(q, 3).unwrap().star_dual();
                    assert_eq!(lr_gl(&d(&lam), &d(&mu), &d(&nu), 3).unwrap(), lr_v1(&lam, &mu, &nu));
                }
            }
        }
    }

    #[test]
    fn split_examples() {
        // ν/λ empty below row 1
        let (a, b) = split_content(&p(&[1, 1]), &p(&[2]), &p(&[3, 1]), 1).unwrap();
        assert_eq!((a, b), (p(&[2]), Partition::empty()));
        let (a, b) = split_content(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1]), 5).unwrap();
        assert_eq!((a, b), (p(&[2, 1]), Partition::empty()));
        assert!(split_content(&p(&[2]), &p(&[2]), &p(&[2, 1, 1]), 1).is_err());
    }

    fn arb_triple(max_part: u32, max_len: usize) -> impl Strategy<Value = (Partition, Partition, Partition)> {
        let part = move || prop::collection::vec(0..=max_part, 0..=max_len).prop_map(Partition::from_unsorted);
        (part(), part(), 0u64..10_000).prop_map(move |(lam, mu, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            // ν: random partition of the right size inside a generous box
            let size = lam.size() + mu.size();
            let cands = Partition::all_of_size(size, lam.len() + mu.len(), lam.first() + mu.first());
            let nu = if cands.is_empty() { Partition::empty() } else { cands[rng.gen_range(0..cands.len())].clone() };
            (lam, mu, nu)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]

        #[test]
        fn symmetric_and_conjugation_invariant((lam, mu, nu) in arb_triple(4, 4)) {
            let c = lr_v1(&lam, &mu, &nu);
            prop_assert_eq!(c, lr_v1(&mu, &lam, &nu));
            prop_assert_eq!(c, lr_v1(&lam.conjugate(), &mu.conjugate(), &nu.conjugate()));
            prop_assert_eq!(c, lr(&lam, &mu, &nu));
            prop_assert_eq!(c > 0, lr_positive(&lam, &mu, &nu));
        }

        #[test]
        fn rectangle_shift_identity(
            (lam, mu, nu) in arb_triple(3, 3),
            a in 0u32..3, b in 0u32..3, k in 0u32..3,
        ) {
            let n = 3;
            // hypotheses of the identity
            prop_assume!(a + b + k >= nu.first() && a + k >= mu.first() && b + k >= lam.first());
            prop_assume!(lam.len() <= n && mu.len() <= n);
            let left_nu = Partition::prefix_union(a + b + k, n, &nu).unwrap();
            let nu_k = nu.add_rectangle(k, n);
            prop_assume!(nu.len() <= n);
            prop_assert_eq!(
                lr_v1(&lam.add_rectangle(a, n), &mu.add_rectangle(b, n), &left_nu),
                lr_v1(&lam, &mu, &nu_k)
            );
        }

        #[test]
        fn monotone_under_rectangles((lam, mu, nu) in arb_triple(3, 2), k in 0u32..3, extra in 0usize..3) {
            let n = 2;
            let m = n + extra;
            prop_assume!(lam.len() <= n && mu.len() <= m - n && nu.len() <= m);
            prop_assert!(
                lr_v1(&lam, &mu, &nu)
                    <= lr_v1(&lam.add_rectangle(k, n), &mu.add_rectangle(k, m - n), &nu.add_rectangle(k, m))
            );
        }

        #[test]
        fn complement_identity((lam, mu, nu) in arb_triple(3, 3), extra in 0u32..2) {
            let (n, m) = (3usize, 3usize);
            let w = nu.first().max(lam.first()).max(mu.first()) + extra;
            prop_assume!(nu.len() <= n + m);
            let c = lr_v1(&lam, &mu, &nu);
            let l = lam.complement(w, n).unwrap();
            let u = mu.complement(w, m).unwrap();
            let v = nu.complement(w, n + m).unwrap();
            prop_assert_eq!(c, lr_v1(&l, &u, &v));
        }

        #[test]
        fn split_content_postconditions((lam, mu, nu) in arb_triple(3, 3), k in 1usize..6) {
            prop_assume!(lr_positive(&lam, &mu, &nu));
            let (alpha, beta) = split_content(&lam, &mu, &nu, k).unwrap();
            prop_assert!(lr_positive(&lam.head(k), &alpha, &nu.head(k)));
            prop_assert!(lr_positive(&lam.tail(k), &beta, &nu.tail(k)));
            prop_assert!(lr_positive(&alpha, &beta, &mu));
        }
    }
}
