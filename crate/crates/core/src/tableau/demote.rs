//! Demotion of ballot tableaux.
//!
//! Demoting a ballot `S` of shape `ν/λ` at a corner `c0` of `λ` places a
//! 1 in `c0`, then walks forward in column reading order turning the next
//! `k` into `k + 1`. The column reading order visits columns right to
//! left, each column top to bottom.

use super::jdt::{corners, infusion};
use super::{Cell, SkewShape, Tableau};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Cells of `shape` in column reading order.
pub(crate) fn column_reading_order(shape: &SkewShape) -> Vec<Cell> {
    let width = shape.outer.first() as usize;
    let mut out = Vec::with_capacity(shape.size() as usize);
    for c in (1..=width).rev() {
        for r in 1..=shape.rows() {
            if shape.contains((r, c)) {
                out.push((r, c));
            }
        }
    }
    out
}

/// Demotes the ballot tableau `s` at the inner corner `c0`. Returns the
/// demoted tableau (shape `ν/λ↓`, content `μ↑`) and the row of `μ↑/μ`.
pub fn demote(s: &Tableau, c0: Cell) -> Result<(Tableau, usize)> {
    if !s.is_semistandard() || !s.is_ballot() {
        return Err(Error::NotBallot);
    }
    demote_along(s, c0, column_reading_order)
}

pub(crate) fn demote_along(
    s: &Tableau,
    c0: Cell,
    order: impl Fn(&SkewShape) -> Vec<Cell>,
) -> Result<(Tableau, usize)> {
    if !corners(s.inner()).contains(&c0) {
        return Err(Error::NotInnerCorner(c0.0, c0.1));
    }
    let mut inner = s.inner().parts().to_vec();
    inner[c0.0 - 1] -= 1;
    let inner = Partition::new(inner).expect("corner removal");
    let shape = SkewShape { outer: s.outer().clone(), inner };
    let rows = (1..=shape.rows())
        .map(|r| {
            (shape.inner.part(r) as usize + 1..=shape.outer.part(r) as usize)
                .map(|c| if (r, c) == c0 { 1 } else { s.get((r, c)).expect("cell of s") })
                .collect()
        })
        .collect();
    let mut out = Tableau::new_unchecked(shape, rows)?;
    let cells = order(out.shape());
    let mut pos = cells.iter().position(|&x| x == c0).expect("c0 in shape");
    let mut k = 1;
    while let Some(off) = cells[pos + 1..].iter().position(|&x| out.get(x) == Some(k)) {
        pos += off + 1;
        k += 1;
        out.set(cells[pos], k);
    }
    Ok((out, k as usize))
}

/// For a ballot `t` of shape `ν/μ` and content `λ` with `ℓ(λ) <= ell` and
/// entries below row `ell` at most `a_prime`, returns `ρ` with
/// `c^ν_{ρ,λ≤a'} > 0`, `c^ρ_{μ,λ>a'} > 0` and `μ_{>ell-a'} = ρ_{>ell-a'}`.
///
/// `ρ` is the content after infusing `t` past `Y_μ` and demoting the boxes
/// of `λ_{>a'}`, bottom row first, right to left.
pub fn demotion_rho(t: &Tableau, a_prime: usize, ell: usize) -> Result<Partition> {
    if !t.is_semistandard() || !t.is_ballot() {
        return Err(Error::NotBallot);
    }
    let lam = t
        .content()
        .ok_or_else(|| Error::Precondition("content is not a partition".into()))?;
    if lam.len() > ell {
        return Err(Error::Precondition(format!("length of {lam} exceeds {ell}")));
    }
    let low = t.entries().filter(|((r, _), _)| *r > ell).map(|(_, v)| v).max();
    if low.is_some_and(|v| v > a_prime as i64) {
        return Err(Error::Precondition(format!(
            "entries below row {ell} must be at most {a_prime}"
        )));
    }
    let mu = t.inner().clone();
    let (_, mut s) = infusion(&Tableau::superstandard(&mu), t)?;
    for r in (a_prime + 1..=lam.len()).rev() {
        for c in (1..=lam.part(r) as usize).rev() {
            s = demote_along(&s, (r, c), column_reading_order)?.0;
        }
    }
    Ok(s.content().expect("demotion keeps ballot content"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{all_ssyt, rsk_inverse};

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Negative standard filling of `lam` whose largest entry sits at `c0`.
    fn negative_filling(lam: &Partition, c0: Cell) -> Tableau {
        let n = lam.size() as i64;
        let mut rows: Vec<Vec<i64>> = Vec::new();
        let mut next = -n;
        for r in 1..=lam.len() {
            let mut row = Vec::new();
            for c in 1..=lam.part(r) as usize {
                if (r, c) == c0 {
                    row.push(-1);
                } else {
                    row.push(next);
                    next += 1;
                }
            }
            rows.push(row);
        }
        Tableau::from_rows(rows).unwrap()
    }

    fn union(t0: &Tableau, s: &Tableau) -> Tableau {
        let rows = (1..=s.outer().len())
            .map(|r| {
                let mut row = t0.rows().get(r - 1).cloned().unwrap_or_default();
                row.extend_from_slice(&s.rows()[r - 1]);
                row
            })
            .collect();
        Tableau::from_rows(rows).unwrap()
    }

    /// `x_n` of `RSK^{-1}(Y_ν, T0 ∪ S)` with `n = |λ|`.
    fn rsk_row(s: &Tableau, c0: Cell) -> usize {
        let t0 = negative_filling(s.inner(), c0);
        let b = rsk_inverse(&Tableau::superstandard(s.outer()), &union(&t0, s)).unwrap();
        b.bottom()[s.inner().size() as usize - 1] as usize
    }

    fn ballot_tableaux_within(w: u32, h: usize, max_size: u64) -> Vec<Tableau> {
        let mut out = Vec::new();
        for nu in Partition::all_in_box(w, h) {
            for lam in Partition::all_in_box(w, h) {
                if lam.is_empty() || !lam.is_contained_in(&nu) || nu.size() > max_size {
                    continue;
                }
                let shape = SkewShape::new(nu.clone(), lam).unwrap();
                out.extend(all_ssyt(&shape, h as i64).into_iter().filter(Tableau::is_ballot));
            }
        }
        out
    }

    #[test]
    fn small_example() {
        // ν = (2,1), λ = (1): S has 1 at (1,2) and 2 at (2,1)
        let s = Tableau::new(SkewShape::new(p(&[2, 1]), p(&[1])).unwrap(), vec![vec![1], vec![2]]).unwrap();
        let (out, row) = demote(&s, (1, 1)).unwrap();
        assert_eq!(row, 1);
        assert_eq!(out.rows(), &[vec![1, 1], vec![2]]);
        assert!(out.is_ballot());
        assert_eq!(rsk_row(&s, (1, 1)), 1);
    }

    #[test]
    fn no_later_one_stops_immediately() {
        let s = Tableau::new(SkewShape::new(p(&[2, 1]), p(&[2])).unwrap(), vec![vec![], vec![1]]).unwrap();
        // the 1 at (2,1) comes after c0 = (1,2): column 2 then column 1
        let (_, row) = demote(&s, (1, 2)).unwrap();
        assert_eq!(row, 2);
        let s = Tableau::new(SkewShape::new(p(&[2]), p(&[1])).unwrap(), vec![vec![1]]).unwrap();
        let (out, row) = demote(&s, (1, 1)).unwrap();
        assert_eq!(row, 1);
        assert_eq!(out.rows(), &[vec![1, 1]]);
    }

    #[test]
    fn rejects_non_corner() {
        let s = Tableau::empty(p(&[2, 2]));
        assert!(matches!(demote(&s, (1, 2)), Err(Error::NotInnerCorner(1, 2))));
        assert!(demote(&s, (2, 2)).is_ok());
    }

    #[test]
    fn output_is_ballot_with_one_more_box() {
        for s in ballot_tableaux_within(3, 4, 9) {
            for c0 in corners(s.inner()) {
                let (out, row) = demote(&s, c0).unwrap();
                assert!(out.is_semistandard() && out.is_ballot(), "{s:?} at {c0:?}");
                let mut before = s.content_counts();
                before.resize(before.len().max(row), 0);
                before[row - 1] += 1;
                assert_eq!(out.content_counts(), before);
                assert!(out.content().is_some());
            }
        }
    }

    #[test]
    fn southmost_corner_gives_first_missing_label_of_column_one() {
        for s in ballot_tableaux_within(3, 4, 9) {
            let c0 = *corners(s.inner()).last().unwrap();
            let first_col: Vec<i64> = (1..=s.outer().len()).filter_map(|r| s.get((r, 1))).collect();
            let m = (1..).find(|k| !first_col.contains(k)).unwrap();
            assert_eq!(demote(&s, c0).unwrap().1, m as usize, "{s:?}");
        }
    }

    #[test]
    fn agrees_with_rsk_inverse() {
        for s in ballot_tableaux_within(3, 4, 10) {
            for c0 in corners(s.inner()) {
                assert_eq!(demote(&s, c0).unwrap().1, rsk_row(&s, c0), "{s:?} at {c0:?}");
            }
        }
    }

    #[test]
    fn left_to_right_columns_disagree_with_rsk() {
        let left_to_right = |shape: &SkewShape| {
            let mut cells = column_reading_order(shape);
            cells.sort_by_key(|&(r, c)| (c, r));
            cells
        };
        let s = Tableau::new(SkewShape::new(p(&[2, 1]), p(&[1])).unwrap(), vec![vec![1], vec![2]]).unwrap();
        let (_, row) = demote_along(&s, (1, 1), left_to_right).unwrap();
        assert_ne!(row, rsk_row(&s, (1, 1)));
    }

    #[test]
    fn rho_trivial_when_nothing_is_demoted() {
        let t = Tableau::new(SkewShape::new(p(&[2, 1]), p(&[1])).unwrap(), vec![vec![1], vec![2]]).unwrap();
        assert_eq!(demotion_rho(&t, 2, 2).unwrap(), p(&[1]));
    }

    #[test]
    fn rho_checks_hypotheses() {
        let t = Tableau::new(SkewShape::new(p(&[2, 1]), p(&[1])).unwrap(), vec![vec![1], vec![2]]).unwrap();
        assert!(demotion_rho(&t, 1, 1).is_err());
        let bad = Tableau::new(SkewShape::new(p(&[2]), p(&[1])).unwrap(), vec![vec![2]]).unwrap();
        assert!(matches!(demotion_rho(&bad, 1, 1), Err(Error::NotBallot)));
    }
}
