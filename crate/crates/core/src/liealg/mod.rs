//! Structure equations, differentials, real forms and Lie-algebra invariants.

mod coalgebra;
mod invariants;
mod real;
mod structure;

pub use coalgebra::LieCoalgebra;
pub use invariants::{alpha, cup_rank, decomposable_span, fingerprint, inertia, Fingerprint};
pub use real::RealStructureEquations;
pub use structure::{term, StructureEquations};
pub(crate) use structure::flatten;
