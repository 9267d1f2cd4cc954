//! Enumeration, neighbor generation, exhaustive search and symmetry
//! reduction.

mod enumerate;
mod exhaustive;
mod neighbors;
mod strategy;
mod symmetry;

pub use enumerate::{
    collect_simplices, enumerate_simplices, for_each_simplex, nonobtuse_at_origin, SimplexFilter, STANDARD_ENUMERATION_DIM,
};
pub use exhaustive::{complete_from, exhaustive_search, SearchOptions, SearchOutcome, STANDARD_SEARCH_DIM};
pub use neighbors::{apex_for_direction, candidate_apexes, nonobtuse_neighbors, NeighborQuery};
pub use strategy::{
    covers_anchor, Anchored, Frontier, FrontierPolicy, LexMax, LexMin, OrbitRoots, Root, RootStrategy, Unreduced,
};
pub use symmetry::{
    are_equivalent, canonical_form, canonical_representative, hyperoctahedral_group, orbit, origin_stabilizer, CanonicalForm,
    SignedPermutation,
};

/// Compute allowance for the expensive dimensions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Budget {
    #[default]
    Standard,
    Extended,
}
