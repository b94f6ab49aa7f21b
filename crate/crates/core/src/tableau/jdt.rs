//! Jeu de taquin slides, rectification and infusion (tableau switching).

use super::{Cell, SkewShape, Tableau};
use crate::error::{Error, Result};
use crate::partition::Partition;

/// Corners of the inner shape: cells `x` of `inner` such that `inner - x`
/// is still a partition. Listed top to bottom.
pub fn inner_corners(t: &Tableau) -> Vec<Cell> {
    corners(t.inner())
}

pub(crate) fn corners(p: &Partition) -> Vec<Cell> {
    (1..=p.len())
        .filter(|&r| p.part(r) > p.part(r + 1))
        .map(|r| (r, p.part(r) as usize))
        .collect()
}

fn remove_box(p: &Partition, r: usize) -> Partition {
    let mut parts = p.parts().to_vec();
    parts[r - 1] -= 1;
    Partition::new(parts).expect("removing a corner")
}

/// One jeu de taquin slide into the inner corner `x`. Returns the new
/// tableau together with the outer cell that was vacated.
pub(crate) fn slide(t: &Tableau, x: Cell) -> Result<(Tableau, Cell)> {
    if !corners(t.inner()).contains(&x) {
        return Err(Error::NotInnerCorner(x.0, x.1));
    }
    // Work on full rows, `None` marking the hole and inner cells.
    let outer = t.outer().clone();
    let mut grid: Vec<Vec<Option<i64>>> = (1..=outer.len())
        .map(|r| {
            (1..=outer.part(r) as usize)
                .map(|c| t.get((r, c)))
                .collect()
        })
        .collect();
    let (mut r, mut c) = x;
    loop {
        let south = grid.get(r).and_then(|row| row.get(c - 1)).copied().flatten();
        let east = grid[r - 1].get(c).copied().flatten();
        match (south, east) {
            (None, None) => break,
            (Some(b), a) if a.is_none_or(|a| b <= a) => {
                grid[r - 1][c - 1] = Some(b);
                grid[r][c - 1] = None;
                r += 1;
            }
            (_, a) => {
                grid[r - 1][c - 1] = a;
                grid[r - 1][c] = None;
                c += 1;
            }
        }
    }
    let new_inner = remove_box(t.inner(), x.0);
    let new_outer = remove_box(&outer, r);
    grid[r - 1].pop();
    let rows = grid
        .into_iter()
        .enumerate()
        .map(|(i, row)| row.into_iter().skip(new_inner.part(i + 1) as usize).map(|v| v.expect("filled")).collect())
        .collect();
    let out = Tableau::new_unchecked(SkewShape { outer: new_outer, inner: new_inner }, rows)?;
    Ok((out, (r, c)))
}

/// Slide into the inner corner `x`.
pub fn jdt_slide(t: &Tableau, x: Cell) -> Result<Tableau> {
    slide(t, x).map(|(t, _)| t)
}

/// Rectify by sliding into the bottom-most inner corner each time.
pub fn rectify(t: &Tableau) -> Tableau {
    let mut cur = t.clone();
    while let Some(&x) = corners(cur.inner()).last() {
        cur = slide(&cur, x).expect("corner").0;
    }
    cur
}

/// Rectify along an explicit corner sequence, which must empty the inner shape.
pub fn rectify_with(t: &Tableau, order: &[Cell]) -> Result<Tableau> {
    let mut cur = t.clone();
    for &x in order {
        cur = slide(&cur, x)?.0;
    }
    if !cur.is_straight() {
        return Err(Error::InvalidShape(format!(
            "corner sequence leaves inner shape {}",
            cur.inner()
        )));
    }
    Ok(cur)
}

/// Cell of the largest entry of a straight tableau, rightmost among ties
/// (the largest entry of its standardization).
fn largest_cell(s: &Tableau) -> Option<Cell> {
    let mut best: Option<(i64, Cell)> = None;
    for (cell, v) in s.entries() {
        match best {
            Some((bv, bc)) if v < bv || (v == bv && cell.1 < bc.1) => {}
            _ => best = Some((v, cell)),
        }
    }
    best.map(|(_, c)| c)
}

/// Tableau switching of a straight tableau `s` and a skew tableau `t` on
/// top of it. Returns `(Rect(t), s')` where `s'` fills the cells vacated
/// by the slides.
pub fn infusion(s: &Tableau, t: &Tableau) -> Result<(Tableau, Tableau)> {
    if !s.is_straight() || s.outer() != t.inner() {
        return Err(Error::Mismatch(format!(
            "inner shape {} of the skew tableau must equal the shape {} of the straight one",
            t.inner(),
            s.outer()
        )));
    }
    let mut s_cur = s.clone();
    let mut t_cur = t.clone();
    let mut vacated: Vec<(Cell, i64)> = Vec::new();
    while let Some(x) = largest_cell(&s_cur) {
        let v = s_cur.get(x).expect("cell of s");
        let (next, freed) = slide(&t_cur, x)?;
        t_cur = next;
        vacated.push((freed, v));
        let rows = s_cur.rows().iter().enumerate().map(|(i, row)| {
            let mut row = row.clone();
            if i + 1 == x.0 {
                row.pop();
            }
            row
        });
        let rows: Vec<Vec<i64>> = rows.collect();
        s_cur = Tableau::new_unchecked(SkewShape::straight(remove_box(s_cur.outer(), x.0)), rows)?;
    }
    let shape = SkewShape::new(t.outer().clone(), t_cur.outer().clone())?;
    let mut out = Tableau::new_unchecked(
        shape.clone(),
        (1..=shape.rows())
            .map(|r| vec![0; (shape.outer.part(r) - shape.inner.part(r)) as usize])
            .collect(),
    )?;
    for (cell, v) in vacated {
        out.set(cell, v);
    }
    Ok((t_cur, out))
}
