//! Skew shapes and semistandard tableaux.
//!
//! Cells are addressed `(row, column)`, 1-based, English orientation (row 1
//! on top). A tableau of shape `outer/inner` stores, for every row `i`, the
//! entries in columns `inner_i + 1 ..= outer_i`.

mod demote;
mod jdt;
mod rsk;

pub use demote::{demote, demotion_rho};
pub use jdt::{infusion, inner_corners, jdt_slide, rectify, rectify_with};
pub use rsk::{knuth_equivalent, rsk, rsk_inverse, rsk_word, Biword};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A cell `(row, column)`, both 1-based.
pub type Cell = (usize, usize);

/// Sequence of signed entries, used for reading words.
pub type Word = Vec<i64>;

/// `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidShape(format!("{inner} is not inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    /// `lambda ⋆ mu`: `lambda` placed south-west of `mu`, corner to corner.
    pub fn star(lam: &Partition, mu: &Partition) -> Self {
        let l1 = lam.first();
        let mut outer: Vec<u32> = mu.parts().iter().map(|&m| m + l1).collect();
        outer.extend_from_slice(lam.parts());
        let inner = if mu.is_empty() {
            Partition::empty()
        } else {
            Partition::rectangle(l1, mu.len())
        };
        SkewShape {
            outer: Partition::new(outer).expect("star shape is a partition"),
            inner,
        }
    }

    pub fn size(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn contains(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && c as u32 <= self.outer.part(r) && c as u32 > self.inner.part(r)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for r in 1..=self.rows() {
            for c in self.inner.part(r) as usize + 1..=self.outer.part(r) as usize {
                out.push((r, c));
            }
        }
        out
    }
}

/// A filling of a skew shape by integers (negative entries allowed).
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    shape: SkewShape,
    rows: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;
    fn try_from(t: TableauRepr) -> Result<Self> {
        Tableau::new(SkewShape::new(t.outer, t.inner)?, t.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { outer: t.shape.outer, inner: t.shape.inner, rows: t.rows }
    }
}

impl Tableau {
    /// Builds a tableau and checks that it is semistandard.
    pub fn new(shape: SkewShape, rows: Vec<Vec<i64>>) -> Result<Self> {
        let t = Tableau::new_unchecked(shape, rows)?;
        if !t.is_semistandard() {
            return Err(Error::NotSemistandard(format!("{t:?}")));
        }
        Ok(t)
    }

    /// Builds a tableau, checking only that row lengths fit the shape.
    pub fn new_unchecked(shape: SkewShape, mut rows: Vec<Vec<i64>>) -> Result<Self> {
        while rows.len() > shape.rows() && rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        rows.resize(shape.rows(), Vec::new());
        for (i, row) in rows.iter().enumerate() {
            let want = (shape.outer.part(i + 1) - shape.inner.part(i + 1)) as usize;
            if row.len() != want {
                return Err(Error::InvalidShape(format!(
                    "row {} has {} entries, shape needs {}",
                    i + 1,
                    row.len(),
                    want
                )));
            }
        }
        Ok(Tableau { shape, rows })
    }

    /// Straight-shape tableau from full rows.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        Tableau::new(SkewShape::straight(outer), rows)
    }

    /// The empty tableau of shape `inner / inner`.
    pub fn empty(inner: Partition) -> Self {
        let rows = vec![Vec::new(); inner.len()];
        Tableau { shape: SkewShape { outer: inner.clone(), inner }, rows }
    }

    /// Super-semistandard tableau `Y_mu`: row `i` filled with `i`.
    pub fn superstandard(mu: &Partition) -> Self {
        let rows = mu
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &m)| vec![i as i64 + 1; m as usize])
            .collect();
        Tableau { shape: SkewShape::straight(mu.clone()), rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        &self.shape.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.shape.inner
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_straight(&self) -> bool {
        self.shape.inner.is_empty()
    }

    /// Skew entries of each row, left to right.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn get(&self, (r, c): Cell) -> Option<i64> {
        if !self.shape.contains((r, c)) {
            return None;
        }
        let off = self.shape.inner.part(r) as usize;
        Some(self.rows[r - 1][c - off - 1])
    }

    pub(crate) fn set(&mut self, (r, c): Cell, v: i64) {
        let off = self.shape.inner.part(r) as usize;
        self.rows[r - 1][c - off - 1] = v;
    }

    /// Cells with their entries, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, i64)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let off = self.shape.inner.part(i + 1) as usize;
            row.iter().enumerate().map(move |(j, &v)| ((i + 1, off + j + 1), v))
        })
    }

    pub fn is_semistandard(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        self.entries().all(|((r, c), v)| match self.get((r + 1, c)) {
            Some(below) => below > v,
            None => true,
        })
    }

    /// Multiplicities of the values `1, 2, ...` (entries below 1 ignored).
    pub fn content_counts(&self) -> Vec<u32> {
        let mut counts: Vec<u32> = Vec::new();
        for (_, v) in self.entries() {
            if v >= 1 {
                let v = v as usize;
                if counts.len() < v {
                    counts.resize(v, 0);
                }
                counts[v - 1] += 1;
            }
        }
        counts
    }

    /// Content as a partition, when the counts are weakly decreasing.
    pub fn content(&self) -> Option<Partition> {
        Partition::new(self.content_counts()).ok()
    }

    /// Row word: right to left along rows, rows top to bottom.
    pub fn row_word(&self) -> Word {
        self.rows.iter().flat_map(|r| r.iter().rev().copied()).collect()
    }

    /// Reverse of the row word: rows bottom to top, left to right.
    pub fn rev_row_word(&self) -> Word {
        let mut w = self.row_word();
        w.reverse();
        w
    }

    pub fn is_ballot(&self) -> bool {
        is_ballot_word(&self.row_word())
    }

    /// Restriction to the cells holding entries `<= k` (a tableau of shape
    /// `outer' / inner`).
    pub fn restrict_values(&self, k: i64) -> Tableau {
        let rows: Vec<Vec<i64>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&v| v <= k).collect())
            .collect();
        let outer = Partition::new(
            rows.iter()
                .enumerate()
                .map(|(i, r)| self.shape.inner.part(i + 1) + r.len() as u32)
                .collect(),
        )
        .expect("value restriction of a semistandard tableau");
        Tableau::new_unchecked(SkewShape { outer, inner: self.shape.inner.clone() }, rows)
            .expect("consistent rows")
    }

    /// Sub-tableau formed by rows `from..=to` (1-based), as a tableau
    /// whose rows are renumbered from 1.
    pub fn row_slice(&self, from: usize, to: usize) -> Tableau {
        let to = to.min(self.shape.rows());
        if from > to {
            return Tableau::empty(Partition::empty());
        }
        let outer: Vec<u32> = (from..=to).map(|r| self.shape.outer.part(r)).collect();
        let inner: Vec<u32> = (from..=to).map(|r| self.shape.inner.part(r)).collect();
        let shape = SkewShape::new(
            Partition::new(outer).expect("rows of a partition"),
            Partition::new(inner).expect("rows of a partition"),
        )
        .expect("containment");
        Tableau::new_unchecked(shape, self.rows[from - 1..to].to_vec()).expect("consistent rows")
    }

    /// Multi-line rendering: inner cells as dots, entries right-aligned.
    pub fn render(&self) -> String {
        let width = self
            .entries()
            .map(|(_, v)| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(1);
        let mut out = String::new();
        for r in 1..=self.shape.rows() {
            let mut cells = Vec::new();
            for _ in 0..self.shape.inner.part(r) {
                cells.push(format!("{:>width$}", "."));
            }
            for v in &self.rows[r - 1] {
                cells.push(format!("{v:>width$}"));
            }
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} {:?}", self.shape.outer, self.shape.inner, self.rows)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Every prefix has at least as many `i-1`'s as `i`'s, for all `i >= 2`.
/// Entries below 1 are ignored.
pub fn is_ballot_word(w: &[i64]) -> bool {
    let mut counts: Vec<u32> = Vec::new();
    for &v in w {
        if v < 1 {
            continue;
        }
        let v = v as usize;
        if counts.len() < v {
            counts.resize(v, 0);
        }
        counts[v - 1] += 1;
        if v >= 2 && counts[v - 1] > counts[v - 2] {
            return false;
        }
    }
    true
}

/// All semistandard fillings of `shape` with entries in `1..=max_value`.
pub fn all_ssyt(shape: &SkewShape, max_value: i64) -> Vec<Tableau> {
    let cells = shape.cells();
    let mut t = Tableau::new_unchecked(
        shape.clone(),
        (1..=shape.rows())
            .map(|r| vec![0; (shape.outer.part(r) - shape.inner.part(r)) as usize])
            .collect(),
    )
    .expect("shape-sized rows");
    let mut out = Vec::new();
    fn rec(t: &mut Tableau, cells: &[Cell], i: usize, max: i64, out: &mut Vec<Tableau>) {
        if i == cells.len() {
            out.push(t.clone());
            return;
        }
        let (r, c) = cells[i];
        let mut lo = 1;
        if let Some(left) = t.get((r, c.wrapping_sub(1))) {
            lo = lo.max(left);
        }
        if r > 1 {
            if let Some(up) = t.get((r - 1, c)) {
                lo = lo.max(up + 1);
            }
        }
        for v in lo..=max {
            t.set((r, c), v);
            rec(t, cells, i + 1, max, out);
        }
    }
    rec(&mut t, &cells, 0, max_value, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn superstandard_is_ballot() {
        for mu in Partition::all_in_box(4, 4) {
            assert!(Tableau::superstandard(&mu).is_ballot());
        }
    }

    #[test]
    fn single_row_starting_with_two_is_not_ballot() {
        let t = Tableau::from_rows(vec![vec![1, 2]]).unwrap();
        assert_eq!(t.row_word(), vec![2, 1]);
        assert!(!t.is_ballot());
    }

    #[test]
    fn witness_for_small_coefficient_is_ballot() {
        let shape = SkewShape::new(p(&[2, 1, 1]), p(&[1, 1, 1])).unwrap();
        let t = Tableau::new(shape, vec![vec![1], vec![], vec![]]).unwrap();
        assert!(t.is_ballot());
        assert_eq!(t.content(), Some(p(&[1])));
    }

    #[test]
    fn star_shape_places_lambda_south_west() {
        let s = SkewShape::star(&p(&[2, 1]), &p(&[3, 1]));
        assert_eq!(s.outer, p(&[5, 3, 2, 1]));
        assert_eq!(s.inner, p(&[2, 2]));
        assert_eq!(s.size(), 7);
        let s = SkewShape::star(&p(&[3, 3, 3]), &Partition::empty());
        assert_eq!(s.outer, p(&[3, 3, 3]));
        assert!(s.inner.is_empty());
    }

    #[test]
    fn semistandard_checks() {
        assert!(Tableau::from_rows(vec![vec![1, 1], vec![1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(Tableau::from_rows(vec![vec![1, 1], vec![2]]).is_ok());
    }

    #[test]
    fn ssyt_counts_match_kostka_sums() {
        // number of SSYT of shape (2,1) with entries <= 3 is 8
        assert_eq!(all_ssyt(&SkewShape::straight(p(&[2, 1])), 3).len(), 8);
        // shape (2)/(1) with entries <= 2: a single box, 2 fillings
        assert_eq!(all_ssyt(&SkewShape::new(p(&[2]), p(&[1])).unwrap(), 2).len(), 2);
    }

    #[test]
    fn json_round_trip() {
        let shape = SkewShape::new(p(&[3, 2]), p(&[1])).unwrap();
        let t = Tableau::new(shape, vec![vec![1, 1], vec![1, 2]]).unwrap();
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"outer":[3,2],"inner":[1],"rows":[[1,1],[1,2]]}"#);
        let back: Tableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
        assert_eq!(t.render(), ". 1 1\n1 2\n");
    }
}
