//! Ideals of matrix Schubert varieties and of symplectic orbit closures,
//! and the check that the latter degenerate to unions of the former.

mod matrix;
mod orbit;
mod schubert;

pub use matrix::{PolyMatrix, QMatrix};
pub use orbit::{
    catalog_entry, classify_orbit, degeneration_weights, orbit_ideal, verify_degeneration,
    CatalogSource, DegenerationReport, OrbitIdealCatalogEntry, Side, Timings, Witness,
};
pub use schubert::{
    fulton_generators, fulton_minors, schubert_ideal, union_schubert_ideal, verify_knutson_miller,
    Minor,
};
