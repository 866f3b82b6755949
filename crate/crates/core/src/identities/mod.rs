//! The identity catalog, side builders and the verifier.

pub mod builders;
pub mod catalog;
mod terms;
pub mod verify;

pub use catalog::{build_side, catalog, lookup, negative_controls, Builder, IdentityRecord};
pub use verify::{oracle_crosscheck, verify, verify_all, verify_record, FirstMismatch, Status, VerificationReport};
