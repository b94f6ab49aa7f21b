//! Row-insertion RSK, its inverse, and Knuth equivalence.

use serde::{Deserialize, Serialize};

use super::{SkewShape, Tableau};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Two-row array `(top; bottom)` whose columns are sorted
/// lexicographically: top weakly increasing, and bottom weakly increasing
/// under equal tops.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
pub struct Biword {
    top: Vec<i64>,
    bottom: Vec<i64>,
}

impl Biword {
    pub fn new(top: Vec<i64>, bottom: Vec<i64>) -> Result<Self> {
        if top.len() != bottom.len() {
            return Err(Error::InvalidBiword(format!(
                "rows have lengths {} and {}",
                top.len(),
                bottom.len()
            )));
        }
        let sorted = (1..top.len()).all(|i| (top[i - 1], bottom[i - 1]) <= (top[i], bottom[i]));
        if !sorted {
            return Err(Error::InvalidBiword("columns are not in lexicographic order".into()));
        }
        Ok(Biword { top, bottom })
    }

    /// The word `w` with top row `1, 2, ..., len`.
    pub fn from_word(w: &[i64]) -> Self {
        Biword { top: (1..=w.len() as i64).collect(), bottom: w.to_vec() }
    }

    pub fn top(&self) -> &[i64] {
        &self.top
    }

    pub fn bottom(&self) -> &[i64] {
        &self.bottom
    }

    pub fn len(&self) -> usize {
        self.top.len()
    }

    pub fn is_empty(&self) -> bool {
        self.top.is_empty()
    }
}

/// Growing straight tableau as plain rows.
type Rows = Vec<Vec<i64>>;

/// Row-insert `x`; returns the row (0-based) where a new cell was created.
fn row_insert(p: &mut Rows, mut x: i64) -> usize {
    for (i, row) in p.iter_mut().enumerate() {
        // first entry strictly greater than x
        let pos = row.partition_point(|&y| y <= x);
        if pos == row.len() {
            row.push(x);
            return i;
        }
        std::mem::swap(&mut row[pos], &mut x);
    }
    p.push(vec![x]);
    p.len() - 1
}

fn to_tableau(rows: Rows) -> Tableau {
    let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).expect("insertion shape");
    Tableau::new_unchecked(SkewShape::straight(outer), rows).expect("rows match shape")
}

/// RSK by row insertion: `P` collects the bottom row, `Q` records the top row.
pub fn rsk(b: &Biword) -> (Tableau, Tableau) {
    let mut p: Rows = Vec::new();
    let mut q: Rows = Vec::new();
    for (&t, &x) in b.top.iter().zip(&b.bottom) {
        let r = row_insert(&mut p, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        q[r].push(t);
    }
    (to_tableau(p), to_tableau(q))
}

/// RSK of a word, with top row `1..=len`.
pub fn rsk_word(w: &[i64]) -> (Tableau, Tableau) {
    rsk(&Biword::from_word(w))
}

/// Inverse of [`rsk`]. Repeatedly removes the largest entry of `q`
/// (rightmost among equal ones) and reverse-bumps the entry of `p` in the
/// same cell.
pub fn rsk_inverse(p: &Tableau, q: &Tableau) -> Result<Biword> {
    if !p.is_straight() || !q.is_straight() || p.outer() != q.outer() {
        return Err(Error::Mismatch(format!(
            "P and Q must share a straight shape, got {} and {}",
            p.shape().outer,
            q.shape().outer
        )));
    }
    if !p.is_semistandard() || !q.is_semistandard() {
        return Err(Error::NotSemistandard("RSK inverse input".into()));
    }
    let mut pr: Rows = p.rows().to_vec();
    let mut qr: Rows = q.rows().to_vec();
    let n = p.size();
    let mut top = Vec::with_capacity(n);
    let mut bottom = Vec::with_capacity(n);
    for _ in 0..n {
        // largest entry, rightmost among ties; it sits at the end of its row
        let mut best: Option<(i64, usize, usize)> = None;
        for (r, row) in qr.iter().enumerate() {
            if let Some(&v) = row.last() {
                let c = row.len();
                if best.is_none_or(|(bv, _, bc)| v > bv || (v == bv && c > bc)) {
                    best = Some((v, r, c));
                }
            }
        }
        let (t, r, _) = best.expect("nonempty");
        qr[r].pop();
        let mut x = pr[r].pop().expect("same shape");
        for row in pr[..r].iter_mut().rev() {
            // rightmost entry strictly smaller than x
            let pos = row.partition_point(|&y| y < x);
            std::mem::swap(&mut row[pos - 1], &mut x);
        }
        while qr.last().is_some_and(|row| row.is_empty()) {
            qr.pop();
            pr.pop();
        }
        top.push(t);
        bottom.push(x);
    }
    top.reverse();
    bottom.reverse();
    let b = Biword::new(top, bottom)?;
    Ok(b)
}

/// Two words are Knuth equivalent iff they have the same insertion tableau.
pub fn knuth_equivalent(w: &[i64], u: &[i64]) -> bool {
    rsk_word(w).0 == rsk_word(u).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::all_ssyt;

    fn all_biwords(max_entry: i64, max_len: usize) -> Vec<Biword> {
        let pairs: Vec<(i64, i64)> = (1..=max_entry)
            .flat_map(|a| (1..=max_entry).map(move |b| (a, b)))
            .collect();
        let mut out = Vec::new();
        fn rec(pairs: &[(i64, i64)], start: usize, left: usize, cur: &mut Vec<(i64, i64)>, out: &mut Vec<Biword>) {
            out.push(Biword {
                top: cur.iter().map(|x| x.0).collect(),
                bottom: cur.iter().map(|x| x.1).collect(),
            });
            if left == 0 {
                return;
            }
            for i in start..pairs.len() {
                cur.push(pairs[i]);
                rec(pairs, i, left - 1, cur, out);
                cur.pop();
            }
        }
        rec(&pairs, 0, max_len, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn two_column_biword_gives_one_row_iff_weakly_increasing() {
        for x in 1..=4 {
            for y in 1..=4 {
                let (p, _) = rsk(&Biword::new(vec![1, 2], vec![x, y]).unwrap());
                assert_eq!(p.outer().len() == 1, x <= y);
            }
        }
        let (p, q) = rsk(&Biword::new(vec![1, 2], vec![2, 3]).unwrap());
        assert_eq!(p.rows(), &[vec![2, 3]]);
        assert_eq!(q.rows(), &[vec![1, 2]]);
    }

    #[test]
    fn empty_biword() {
        let (p, q) = rsk(&Biword::default());
        assert!(p.outer().is_empty() && q.outer().is_empty());
        assert_eq!(rsk_inverse(&p, &q).unwrap(), Biword::default());
    }

    #[test]
    fn biword_validation() {
        assert!(Biword::new(vec![1, 1], vec![2, 1]).is_err());
        assert!(Biword::new(vec![2, 1], vec![1, 1]).is_err());
        assert!(Biword::new(vec![1], vec![1, 2]).is_err());
        assert!(Biword::new(vec![1, 2], vec![2, 1]).is_ok());
    }

    #[test]
    fn inverse_round_trip_exhaustive() {
        let all = all_biwords(4, 6);
        assert_eq!(all.len(), 74613);
        for b in all {
            let (p, q) = rsk(&b);
            assert_eq!(p.content_counts().iter().sum::<u32>() as usize, b.len());
            assert_eq!(rsk_inverse(&p, &q).unwrap(), b);
        }
    }

    #[test]
    fn inverse_of_all_tableau_pairs() {
        for shape in Partition::all_in_box(3, 3) {
            let s = SkewShape::straight(shape);
            let ts = all_ssyt(&s, 3);
            for p in &ts {
                for q in &ts {
                    let b = rsk_inverse(p, q).unwrap();
                    assert_eq!(&rsk(&b), &(p.clone(), q.clone()));
                }
            }
        }
    }

    #[test]
    fn inverse_rejects_mismatched_shapes() {
        let p = Tableau::from_rows(vec![vec![1, 2]]).unwrap();
        let q = Tableau::from_rows(vec![vec![1], vec![2]]).unwrap();
        assert!(rsk_inverse(&p, &q).is_err());
    }

    #[test]
    fn knuth_relations() {
        let (a, b, c) = (1, 2, 3);
        assert!(knuth_equivalent(&[b, c, a], &[b, a, c]));
        assert!(knuth_equivalent(&[2, 2, 1], &[2, 1, 2]));
        assert!(knuth_equivalent(&[a, c, b], &[c, a, b]));
        assert!(knuth_equivalent(&[3, 1, 2], &[3, 1, 2]));
        assert!(!knuth_equivalent(&[1, 2], &[2, 1]));
    }

    #[test]
    fn reverse_row_word_inserts_to_itself() {
        for shape in Partition::all_in_box(3, 3) {
            for t in all_ssyt(&SkewShape::straight(shape), 4) {
                assert_eq!(rsk_word(&t.rev_row_word()).0, t);
            }
        }
    }

    #[test]
    fn unique_straight_tableau_per_knuth_class() {
        // distinct straight tableaux have inequivalent reading words
        let ts: Vec<Tableau> = Partition::all_in_box(3, 3)
            .into_iter()
            .flat_map(|s| all_ssyt(&SkewShape::straight(s), 3))
            .collect();
        for (i, t) in ts.iter().enumerate() {
            for u in &ts[i + 1..] {
                assert!(!knuth_equivalent(&t.rev_row_word(), &u.rev_row_word()));
            }
        }
    }
}
