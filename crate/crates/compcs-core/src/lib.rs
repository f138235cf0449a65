//! Composite classical structures on small qubit registers, in exact arithmetic.
//!
//! The crate builds the single-qubit structures 𝒳, 𝒴, 𝒵, wires them into
//! composite structures, decides complementarity both from their bases and
//! from their symbolic names, and enumerates maximal complete sets.
#![no_std]

extern crate alloc;

pub mod kernel;
pub mod zx;
pub mod constituents;
pub mod composites;
pub mod names;

pub use kernel::{ExactScalar, Tensor};
pub mod search;
