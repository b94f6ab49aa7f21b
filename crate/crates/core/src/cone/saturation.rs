//! Saturation check: every element of the even-lattice Hilbert basis has a
//! nonzero Newell-Littlewood number.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{hilbert_basis, nl_cone_facets, rays_from_facets, Lattice};
use crate::error::Result;
use crate::horn::{chamber_inequalities, extended_horn_inequalities, minimal_inequalities};
use crate::nl::nl;
use crate::partition::Partition;

#[derive(Clone, Debug, Serialize)]
pub struct SaturationReport {
    pub n: u32,
    pub hilbert_size: usize,
    /// Hilbert basis elements with `N = 0`.
    pub violations: Vec<Vec<i64>>,
    /// Wall-clock seconds per stage; left out of JSON for reproducibility.
    #[serde(skip)]
    pub timings: Vec<(&'static str, f64)>,
}

impl SaturationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Splits a point of `ℤ^{3n}` into `(λ, μ, ν)`.
pub fn split_point(x: &[i64]) -> Result<[Partition; 3]> {
    let n = x.len() / 3;
    let block = |b: usize| {
        let parts: Vec<i64> = x[b * n..(b + 1) * n].to_vec();
        if parts.iter().any(|&v| v < 0) {
            return Err(crate::Error::NegativePart(parts));
        }
        Partition::new(parts.iter().map(|&v| v as u32).collect())
    };
    Ok([block(0)?, block(1)?, block(2)?])
}

pub fn verify_saturation(n: u32) -> Result<SaturationReport> {
    let mut timings = Vec::new();
    let t = Instant::now();
    let facets = nl_cone_facets(n);
    timings.push(("inequalities", t.elapsed().as_secs_f64()));
    let t = Instant::now();
    let rays = rays_from_facets(&facets)?;
    timings.push(("rays", t.elapsed().as_secs_f64()));
    let t = Instant::now();
    let basis = hilbert_basis(&facets, &rays, Lattice::Even)?;
    timings.push(("hilbert", t.elapsed().as_secs_f64()));
    let t = Instant::now();
    let zero: Vec<bool> = basis
        .par_iter()
        .map(|x| {
            let [l, m, v] = split_point(x)?;
            Ok(nl(&l, &m, &v) == 0u8.into())
        })
        .collect::<Result<_>>()?;
    let violations = basis.iter().zip(zero).filter(|(_, z)| *z).map(|(x, _)| x.clone()).collect();
    timings.push(("nl", t.elapsed().as_secs_f64()));
    Ok(SaturationReport { n, hilbert_size: basis.len(), violations, timings })
}

/// One row of the summary table. The polyhedral columns are `None` when
/// not requested.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub chamber: usize,
    pub facets: usize,
    pub ehi: usize,
    pub rays: Option<usize>,
    pub hilbert_even: Option<usize>,
    pub hilbert_full: Option<usize>,
}

impl TableRow {
    /// `n: chamber+facets | ehi | rays | even | full`, with `-` for columns
    /// not computed.
    pub fn render(&self) -> String {
        let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
        format!(
            "{}: {}+{} | {} | {} | {} | {}",
            self.n,
            self.chamber,
            self.facets,
            self.ehi,
            opt(self.rays),
            opt(self.hilbert_even),
            opt(self.hilbert_full)
        )
    }

    pub fn csv(&self) -> String {
        let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
        format!(
            "{},{},{},{},{},{},{}",
            self.n,
            self.chamber,
            self.facets,
            self.ehi,
            opt(self.rays),
            opt(self.hilbert_even),
            opt(self.hilbert_full)
        )
    }

    pub const CSV_HEADER: &'static str = "n,chamber,facets,ehi,rays,hilbert_even,hilbert_full";
}

pub fn table_row(n: u32, polyhedral: bool) -> Result<TableRow> {
    let chamber = chamber_inequalities(n).len();
    let facets = minimal_inequalities(n).len();
    let ehi = extended_horn_inequalities(n).len();
    let (rays, hilbert_even, hilbert_full) = if polyhedral {
        let normals = nl_cone_facets(n);
        let rays = rays_from_facets(&normals)?;
        let even = hilbert_basis(&normals, &rays, Lattice::Even)?.len();
        let full = hilbert_basis(&normals, &rays, Lattice::Full)?.len();
        (Some(rays.len()), Some(even), Some(full))
    } else {
        (None, None, None)
    };
    Ok(TableRow { n, chamber, facets, ehi, rays, hilbert_even, hilbert_full })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n1_is_the_triangle_cone() {
        let rep = verify_saturation(1).unwrap();
        assert_eq!(rep.hilbert_size, 3);
        assert!(rep.holds());
    }

    #[test]
    fn rendering() {
        let row = TableRow { n: 2, chamber: 6, facets: 18, ehi: 18, rays: Some(12), hilbert_even: Some(13), hilbert_full: Some(20) };
        assert_eq!(row.render(), "2: 6+18 | 18 | 12 | 13 | 20");
        assert_eq!(row.csv(), "2,6,18,18,12,13,20");
    }
}
