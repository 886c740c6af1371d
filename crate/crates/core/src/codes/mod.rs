//! Linear and cyclic codes over R and over F2.

pub mod audit;
mod binary;
mod ring_code;
mod set;

pub use binary::{binary_cyclic, cyclic_coeffs, BinaryCode};
pub(crate) use binary::require_divisor;
pub use ring_code::{
    build_ring_cyclic, component_distance, dual_ring_bruteforce, dual_ring_formula,
    gray_image_basis, is_cyclic, is_quasicyclic3, min_lee_enum, min_lee_formula, projections,
    projections_from_gray, single_generator_code, span_enumerate, BruteForceDual, RingCode,
};
pub use set::{CodewordSet, SetKind};
