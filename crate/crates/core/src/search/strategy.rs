//! Pluggable choices inside the exhaustive search: which frontier facet to
//! extend next, and which simplices seed the search at the origin.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::builders::Triangulation;
use crate::error::Result;
use crate::geometry::{adjugate, edge_matrix, raw_determinant, BinarySimplex, VertexMask};

use super::enumerate::nonobtuse_at_origin;
use super::neighbors::NeighborQuery;
use super::symmetry::{origin_orbit_key, stabilizer_tables};

/// Open facets keyed by their sorted vertex lists.
pub type Frontier = BTreeMap<Vec<VertexMask>, NeighborQuery>;

pub trait FrontierPolicy: Send + Sync {
    fn name(&self) -> &'static str;
    fn select<'a>(&self, frontier: &'a Frontier) -> Option<&'a NeighborQuery>;
}

/// Extend the lexicographically smallest open facet.
#[derive(Clone, Copy, Debug, Default)]
pub struct LexMin;

impl FrontierPolicy for LexMin {
    fn name(&self) -> &'static str {
        "lex-min"
    }

    fn select<'a>(&self, frontier: &'a Frontier) -> Option<&'a NeighborQuery> {
        frontier.values().next()
    }
}

/// Extend the lexicographically largest open facet.
#[derive(Clone, Copy, Debug, Default)]
pub struct LexMax;

impl FrontierPolicy for LexMax {
    fn name(&self) -> &'static str {
        "lex-max"
    }

    fn select<'a>(&self, frontier: &'a Frontier) -> Option<&'a NeighborQuery> {
        frontier.values().next_back()
    }
}

/// A seed simplex and the number of origin-incident simplices it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub simplex: BinarySimplex,
    pub orbit_size: usize,
}

/// Chooses seeds at the origin and weights each completion found from a seed
/// so that the weights of all completions sum to the labeled total.
pub trait RootStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn roots(&self, n: usize) -> Result<Vec<Root>>;
    fn completion_weight(&self, root: &Root, completion: &Triangulation) -> BigRational;
}

fn origin_degree(t: &Triangulation) -> usize {
    t.simplices().iter().filter(|s| s.vertex(0).bits() == 0).count()
}

/// Every nonobtuse simplex at the origin. A completion `T` is reached once
/// from each of its `deg_0(T)` simplices at the origin.
#[derive(Clone, Copy, Debug, Default)]
pub struct Unreduced;

impl RootStrategy for Unreduced {
    fn name(&self) -> &'static str {
        "unreduced"
    }

    fn roots(&self, n: usize) -> Result<Vec<Root>> {
        Ok(nonobtuse_at_origin(n)?.into_iter().map(|simplex| Root { simplex, orbit_size: 1 }).collect())
    }

    fn completion_weight(&self, _root: &Root, completion: &Triangulation) -> BigRational {
        BigRational::new(BigInt::from(1), BigInt::from(origin_degree(completion)))
    }
}

/// One representative per orbit of the axis permutations (the stabilizer of
/// the origin in `B_n`). Weights follow from orbit-stabilizer counting:
/// `|orbit(r)| / deg_0(T)` for a completion `T` containing `r`.
#[derive(Clone, Copy, Debug, Default)]
pub struct OrbitRoots;

impl RootStrategy for OrbitRoots {
    fn name(&self) -> &'static str {
        "orbit"
    }

    fn roots(&self, n: usize) -> Result<Vec<Root>> {
        let tables = stabilizer_tables(n);
        let mut orbits: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
        for s in nonobtuse_at_origin(n)? {
            *orbits.entry(origin_orbit_key(&s, &tables)).or_default() += 1;
        }
        Ok(orbits
            .into_iter()
            .map(|(bits, orbit_size)| {
                let simplex = BinarySimplex::from_sorted_unchecked(n, bits.iter().map(|&b| VertexMask::from_raw(b, n)).collect());
                Root { simplex, orbit_size }
            })
            .collect())
    }

    fn completion_weight(&self, root: &Root, completion: &Triangulation) -> BigRational {
        BigRational::new(BigInt::from(root.orbit_size), BigInt::from(origin_degree(completion)))
    }
}

/// The unique simplex at the origin whose cone contains the direction
/// `(1, t, t^2, ..., t^{n-1})` for all small `t > 0`. Each completion has
/// exactly one such simplex, so every weight is 1.
#[derive(Clone, Copy, Debug, Default)]
pub struct Anchored;

/// True if the cone at the origin spanned by the other vertices contains the
/// anchor direction: every row of the inverse edge matrix has a positive
/// leading entry.
pub fn covers_anchor(s: &BinarySimplex) -> bool {
    let n = s.dim();
    if s.vertex(0).bits() != 0 {
        return false;
    }
    let bits = s.bits();
    let m = edge_matrix(&bits, n);
    let det = raw_determinant(&m, n);
    if det == 0 {
        return false;
    }
    let adj = adjugate(&m, n);
    adj[..n].iter().all(|row| row[..n].iter().find(|&&x| x != 0).is_some_and(|&x| x * det.signum() > 0))
}

impl RootStrategy for Anchored {
    fn name(&self) -> &'static str {
        "anchored"
    }

    fn roots(&self, n: usize) -> Result<Vec<Root>> {
        Ok(nonobtuse_at_origin(n)?.into_iter().filter(covers_anchor).map(|simplex| Root { simplex, orbit_size: 1 }).collect())
    }

    fn completion_weight(&self, _root: &Root, _completion: &Triangulation) -> BigRational {
        BigRational::from_integer(BigInt::from(1))
    }
}
