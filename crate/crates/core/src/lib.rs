pub mod algebra;
pub mod groebner;
pub mod ideal;
pub mod homological;
pub mod fullness;
pub mod cech;
pub mod error;
pub mod session;

pub use error::{Error, Result};
