//! Facet certificates for an inequality list.

use serde::Serialize;

use super::linalg::{dot, rank};
use crate::error::Result;

/// Certificate for one inequality `a·x >= 0`.
#[derive(Clone, Debug, Serialize)]
pub struct FacetCertificate {
    pub index: usize,
    /// Rank of the rays on the hyperplane; `dim - 1` for a facet.
    pub saturating_rank: usize,
    /// A point violating this inequality and satisfying all the others.
    pub witness: Option<Vec<i64>>,
}

impl FacetCertificate {
    pub fn is_facet(&self, dim: usize) -> bool {
        self.saturating_rank + 1 == dim && self.witness.is_some()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IrredundancyReport {
    pub dim: usize,
    pub certificates: Vec<FacetCertificate>,
}

impl IrredundancyReport {
    pub fn all_facets(&self) -> bool {
        self.certificates.iter().all(|c| c.is_facet(self.dim))
    }

    pub fn redundant(&self) -> Vec<usize> {
        self.certificates
            .iter()
            .filter(|c| !c.is_facet(self.dim))
            .map(|c| c.index)
            .collect()
    }
}

/// Certifies each inequality: the rays it saturates span a hyperplane, and
/// `M p - a` (with `p` the sum of those rays) violates it alone.
pub fn irredundancy_certify(facets: &[Vec<i64>], rays: &[Vec<i64>]) -> Result<IrredundancyReport> {
    let dim = rays.first().map_or(0, Vec::len);
    let mut certificates = Vec::with_capacity(facets.len());
    for (index, a) in facets.iter().enumerate() {
        let on: Vec<&[i64]> = rays.iter().filter(|r| dot(a, r) == 0).map(Vec::as_slice).collect();
        let saturating_rank = rank(&on)?;
        let witness = if saturating_rank + 1 == dim {
            witness(facets, index, &on)
        } else {
            None
        };
        certificates.push(FacetCertificate { index, saturating_rank, witness });
    }
    Ok(IrredundancyReport { dim, certificates })
}

fn witness(facets: &[Vec<i64>], index: usize, on: &[&[i64]]) -> Option<Vec<i64>> {
    let a = &facets[index];
    let dim = a.len();
    let p: Vec<i64> = (0..dim).map(|i| on.iter().map(|r| r[i]).sum()).collect();
    let mut m = 1i64;
    for (j, b) in facets.iter().enumerate() {
        if j == index {
            continue;
        }
        let (bp, ba) = (dot(b, &p), dot(b, a));
        if bp <= 0 {
            // b vanishes on the whole face, so it is a multiple of a
            return None;
        }
        m = m.max((ba + bp - 1).div_euclid(bp));
    }
    let x: Vec<i64> = p.iter().zip(a).map(|(pi, ai)| m * pi - ai).collect();
    let ok = facets
        .iter()
        .enumerate()
        .all(|(j, b)| if j == index { dot(b, &x) < 0 } else { dot(b, &x) >= 0 });
    ok.then_some(x)
}
