//! Mod-2 Lusternik-Schnirelmann invariants of finite complexes.

pub mod algebra;
pub mod bar_ss;
pub mod bounds;
pub mod cells;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod report;
pub mod space;
pub mod steenrod;
pub mod weights;

pub use error::{Error, Result};
