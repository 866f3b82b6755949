//! Exact verification of separable integer partition classes and
//! Rogers–Ramanujan type q-series identities.
//!
//! Layers, bottom up: [`series`] (truncated q-series arithmetic),
//! [`partitions`] (enumeration oracle and the mod-2 Ferrers bijection),
//! [`sip`] (class registry, decomposition, basis polynomials),
//! [`identities`] (the identity catalog and verifier), and [`cli`].

// parity tests read better as `% 2` in this code
#![allow(clippy::manual_is_multiple_of)]

pub mod cli;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod series;
pub mod sip;

pub use error::{Error, Result};
