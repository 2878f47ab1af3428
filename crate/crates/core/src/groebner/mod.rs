//! Gröbner bases for ideals and submodules of free modules.

pub mod basis;
pub mod buchberger;
pub mod matrix;
pub mod module;
pub mod ops;
pub mod syzygy;

pub use basis::GroebnerBasis;
pub use buchberger::{divide, groebner, normal_form, GbResult};
pub use matrix::LiftingGb;
pub use module::{FreeModule, Term, Vector};
pub use ops::{colon, colon_element, intersect, intersect_by_elimination, saturation};
pub use syzygy::{schreyer_syzygies, Syzygies};
