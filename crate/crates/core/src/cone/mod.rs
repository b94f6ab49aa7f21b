//! Polyhedral layer: the cone cut out by the minimal inequalities, its
//! extremal rays and its Hilbert bases over `ℤ^{3n}` and the even lattice.

mod certify;
mod dd;
mod hilbert;
pub mod linalg;
mod saturation;

use serde::{Deserialize, Serialize};

pub use certify::{irredundancy_certify, FacetCertificate, IrredundancyReport};
pub use dd::rays_from_facets;
pub use hilbert::{grading, hilbert_basis, parallelepiped_points, reduce, triangulate};
pub use saturation::{split_point, table_row, verify_saturation, SaturationReport, TableRow};

use crate::error::Result;
use crate::horn::{chamber_inequalities, minimal_inequalities};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Lattice {
    Full,
    /// Points with even coordinate sum.
    Even,
}

impl Lattice {
    pub fn contains(self, x: &[i64]) -> bool {
        match self {
            Lattice::Full => true,
            Lattice::Even => x.iter().sum::<i64>() % 2 == 0,
        }
    }
}

impl std::str::FromStr for Lattice {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Lattice::Full),
            "even" => Ok(Lattice::Even),
            _ => Err(crate::Error::Parse { what: "lattice", input: s.into() }),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConeDescription {
    pub dim: usize,
    pub facet_normals: Vec<Vec<i64>>,
    pub rays: Vec<Vec<i64>>,
    pub lattice: Lattice,
}

impl ConeDescription {
    /// The chamber inequalities followed by the minimal family; rays are
    /// computed.
    pub fn nl_cone(n: u32, lattice: Lattice) -> Result<Self> {
        let facet_normals = nl_cone_facets(n);
        let rays = rays_from_facets(&facet_normals)?;
        Ok(ConeDescription { dim: 3 * n as usize, facet_normals, rays, lattice })
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        self.facet_normals.iter().all(|f| linalg::dot(f, x) >= 0)
    }

    pub fn hilbert_basis(&self) -> Result<Vec<Vec<i64>>> {
        hilbert_basis(&self.facet_normals, &self.rays, self.lattice)
    }
}

/// Normals of the chamber inequalities followed by the minimal family.
pub fn nl_cone_facets(n: u32) -> Vec<Vec<i64>> {
    chamber_inequalities(n)
        .into_iter()
        .chain(minimal_inequalities(n))
        .map(|q| q.coeffs)
        .collect()
}
