//! Homological algebra of gentle algebras.
//!
//! The crate computes syzygies, resolutions and all higher extension spaces
//! between string modules over a gentle algebra `KQ/I` purely
//! combinatorially, and checks every answer against an exact integer
//! linear-algebra oracle that knows nothing about strings.
//!
//! Conventions: modules are right modules, paths compose left to right
//! (`αβ` is `α` followed by `β`), and a module is the corresponding quiver
//! representation with one linear map per arrow in the arrow's direction.

pub mod algebra;
pub mod error;
pub mod ext;
pub mod fixtures;
pub mod format;
pub mod fuzz;
pub mod homology;
pub mod modules;
pub mod oracle;
pub mod report;
pub mod strings;
pub mod triangulation;

pub use algebra::{
    random_gentle, Arrow, ArrowId, GentleAlgebra, Presentation, RelationCycle, VertexId,
};
pub use error::{
    AlgebraError, FormatError, LoadError, OracleError, StringError, TriangulationError,
};
pub use ext::{ExtBasisElement, ExtClass, ExtSequence};
pub use homology::{GlobalDimension, OmegaOrbit, Resolution, SyzygyDecomposition};
pub use modules::{BandModule, StringModule};
pub use strings::{Band, Letter, StringWord};
pub use triangulation::Triangulation;
