//! Code constructions: cyclic codes, matrix-product codes with a polynomial
//! unit, extension and puncturing, and a small script language over them.

mod codes;
mod polynomial;
mod script;

pub use codes::{
    cofactor, cyclic_code_generator, extend_code, is_subcode, matrix_product_code, puncture_code,
};
pub use polynomial::{is_unit, poly_mul_mod, BinaryPolynomial, ModulusRing};
pub use script::{Construction, Op, PolySpec, Script, Source};

/// A bundled construction script and the shape it produces.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub script: &'static str,
    pub n: usize,
    pub k: usize,
    /// Minimum distance claimed for the code. Verifying it takes days.
    pub claimed_distance: usize,
}

/// The two length-234 matrix-product codes and the five codes derived from
/// them.
pub const CATALOG: [CatalogEntry; 7] = [
    entry("c1", include_str!("../../data/c1.script"), 234, 51, 63),
    entry("c2", include_str!("../../data/c2.script"), 234, 52, 62),
    entry("c3", include_str!("../../data/c3.script"), 235, 51, 64),
    entry("c4", include_str!("../../data/c4.script"), 236, 51, 64),
    entry("c5", include_str!("../../data/c5.script"), 233, 51, 62),
    entry("c6", include_str!("../../data/c6.script"), 232, 51, 61),
    entry("c7", include_str!("../../data/c7.script"), 233, 52, 61),
];

const fn entry(
    name: &'static str,
    script: &'static str,
    n: usize,
    k: usize,
    d: usize,
) -> CatalogEntry {
    CatalogEntry {
        name,
        script,
        n,
        k,
        claimed_distance: d,
    }
}

pub fn catalog_entry(name: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.name == name)
}
