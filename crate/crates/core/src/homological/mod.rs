//! Resolutions, Hilbert series, module presentations and `Ext` against `S`.

pub mod ext;
pub mod hilbert;
pub mod presentation;
pub mod profile;
pub mod resolution;

pub use ext::{ChainMap, ExtComparison, ExtModule};
pub use hilbert::{HilbertSeries, Laurent};
pub use presentation::{Minimized, Presentation};
pub use profile::{HomologicalProfile, Resolved};
pub use resolution::{BettiTable, FreeResolution};
