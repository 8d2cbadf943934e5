//! Cyclic codes of composite length.
//!
//! Finite-field and polynomial arithmetic, the quadratic-residue based code
//! families, CRT decomposition of length-`nr` cyclic codes into length-`n`
//! components, exact minimum-distance engines and convolutional encoders
//! derived from cyclic generators.

pub mod arith;
pub mod codes;
pub mod constructions;
pub mod convolutional;
pub mod decompose;
pub mod error;
pub mod gf;
pub mod poly;

pub use error::{Error, Result};
pub use gf::{Elem, Field, FieldRef};
pub use poly::Poly;
