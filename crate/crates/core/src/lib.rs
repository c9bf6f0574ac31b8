pub mod classify;
pub mod cli;
pub mod cohomology;
pub mod deform;
pub mod error;
pub mod exterior;
pub mod hermitian;
pub mod liealg;
pub mod linalg;
pub mod spectral;

pub use error::{Error, Result};
