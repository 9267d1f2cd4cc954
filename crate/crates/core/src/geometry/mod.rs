//! Exact integer and rational geometry of binary simplices.

mod linalg;
mod mask;
mod projection;
mod simplex;

pub(crate) use linalg::{adjugate, determinant as raw_determinant, edge_matrix, quick_class, QuickClass};
pub(crate) use mask::{check_dim, full_mask};
pub use mask::{VertexMask, MAX_DIM};
pub use projection::{project_vertex_onto_facet, Projection};
pub use simplex::{angle_class, determinant, outward_normals, AngleClass, AngleTag, BinarySimplex, FacetNormal, IntVector};
