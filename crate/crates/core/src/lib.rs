//! Exact Dunkl-operator calculus for the icosahedral reflection group H3.

pub mod cli;
pub mod dunkl;
pub mod error;
pub mod group;
pub mod kernel;
pub mod numeric;
pub mod polyalg;
pub mod report;
pub mod scalars;
pub mod verify;
pub mod waves;

pub use error::{Error, Result};
