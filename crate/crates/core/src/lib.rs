//! Exact computation of Newell-Littlewood numbers, Littlewood-Richardson
//! coefficients, the inequalities cutting out the saturated
//! Newell-Littlewood cone, and the polyhedral pipeline built on them.

pub mod cone;
pub mod error;
pub mod horn;
pub mod lr;
pub mod nl;
pub mod partition;
pub mod tableau;

pub use error::{Error, Result};
pub use partition::{DominantWeight, HornDatum, Partition, Subset};
