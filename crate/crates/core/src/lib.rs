//! Exact construction, classification, validation and exhaustive search of
//! nonobtuse triangulations of the unit cube by simplices with 0/1 vertices.
//!
//! Vertices are [`VertexMask`]s: bit `j - 1` holds coordinate `x_j`, and the
//! text form lists `x_1` first. All arithmetic is exact (machine integers with
//! documented bounds, big rationals where needed).

pub mod builders;
pub mod classification;
pub mod counting;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod io;
pub mod lp;
pub mod registry;
pub mod search;
pub mod validator;

pub use builders::{antipodal, census, corner_triangulation, cube_corner, standard_triangulation, Tag, Triangulation};
pub use classification::{classify, ClassificationRecord};
pub use counting::{count_ceiling, count_closed_form, count_recurrence, BigCount};
pub use error::{Error, Result};
pub use geometry::{AngleClass, AngleTag, BinarySimplex, IntVector, VertexMask, MAX_DIM};
pub use search::{exhaustive_search, Budget, SearchOptions, SearchOutcome};
pub use validator::{validate, ValidationReport};
