//! Enumeration of normalized permutation polynomials over GF(p^m).
//!
//! The pipeline runs `field` → `poly` → `normalize` → `orbits` → `iblast`,
//! with `pa` turning the resulting counts into permutation-array bounds.

pub mod error;
pub mod field;
pub mod iblast;
pub mod normalize;
pub mod orbits;
pub mod pa;
pub mod poly;
pub mod registry;

pub use error::{Error, Result};
pub use field::{Elem, Field, FieldSpec};
pub use iblast::{search, ClassRecord, Mask, SearchOptions, SearchReport};
pub use normalize::NormRegime;
pub use orbits::{CycleInfo, EquivClass};
pub use poly::Poly;
pub use registry::{default_field, Registry};
