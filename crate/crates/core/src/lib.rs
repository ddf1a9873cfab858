//! Exact computation of framed-cobordism invariants at desk scale.
//!
//! The crate mechanizes a small calculus of invariants that together pin
//! down the first three stable stems:
//!
//! - [`exact_linear`]: Smith normal form over Z and Gaussian elimination
//!   over GF(2), the engine behind everything else;
//! - [`complexes`]: simplicial complexes, boundary operators, homology,
//!   orientability and fundamental classes;
//! - [`surfaces`]: closed combinatorial surfaces with the mod-2
//!   intersection form computed through cup products and Poincare duality;
//! - [`spin`]: pi_1(SO(n)) classes of rotation loops by lifting through the
//!   Clifford-algebra double cover;
//! - [`framed_loops`]: framed polygonal circles in R^N, their twists and
//!   stabilizations, and the residue invariant;
//! - [`quadratic`]: quadratic refinements of GF(2) intersection forms and
//!   the Arf invariant, with an independent majority-vote oracle;
//! - [`degree`]: degrees of simplicial maps by signed preimage counting and
//!   by the induced map on top homology;
//! - [`models`]: built-in witness complexes and maps;
//! - [`io`]: the JSON file formats consumed by the command line tool.

pub use nalgebra;

pub mod complexes;
pub mod degree;
pub mod exact_linear;
pub mod framed_loops;
pub mod io;
pub mod models;
pub mod quadratic;
pub mod spin;
pub mod surfaces;

pub use complexes::{Coefficients, ComplexError, FundamentalClass, HomologyGroup, SimplicialComplex, Vertex};
pub use degree::{MapError, SimplicialMap, ValidatedMap};
pub use exact_linear::{Gf2Matrix, Gf2Vec, IntMatrix, LinAlgError, SmithDecomposition};
pub use framed_loops::{FramedLink, FramedLoop, LoopError};
pub use quadratic::{FormError, QuadraticRefinement, SymplecticBasis};
pub use spin::{CliffordElement, Pi1Class, RotationLoop, SpinError};
pub use surfaces::{ClosedSurface, CycleZ2, IntersectionForm, SurfaceError};
