//! Separable integer partition classes: registry, decomposition, basis
//! polynomials and the property audit.

pub mod audit;
pub mod basis;
pub mod classes;
pub mod decompose;
mod enumerate;

pub use audit::{verify_sip_property, SipReport};
pub use basis::{
    basis_poly_closed, basis_poly_enumerated, basis_poly_recurrence, basis_weights, max_basis_part, BasisPoly,
};
pub use classes::{class_by_name, class_spec, positional_weights, ClassId, ClassSpec, Part, Rules};
pub use decompose::{all_decompositions, sip_decompose, sip_recompose, Decomposition};
