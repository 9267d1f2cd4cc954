//! The standard triangulation and the cube-corner family.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{check_dim, full_mask, BinarySimplex, VertexMask};

/// Construction provenance of a simplex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    CubeCorner,
    /// Type `A^n_k`: the antipodal simplex coned up `k` times.
    Antipodal(usize),
    PathSimplex,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::CubeCorner => write!(f, "CubeCorner"),
            Tag::Antipodal(k) => write!(f, "Antipodal({k})"),
            Tag::PathSimplex => write!(f, "PathSimplex"),
        }
    }
}

impl FromStr for Tag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "CubeCorner" => Ok(Tag::CubeCorner),
            "PathSimplex" => Ok(Tag::PathSimplex),
            _ => s
                .strip_prefix("Antipodal(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|k| k.parse().ok())
                .map(Tag::Antipodal)
                .ok_or_else(|| Error::Parse(format!("unknown tag `{s}`"))),
        }
    }
}

/// A list of binary simplices of common dimension, kept in canonical order.
///
/// Duplicates are representable so that malformed input can reach the
/// validator; every builder in this crate produces duplicate-free lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    dim: usize,
    simplices: Vec<BinarySimplex>,
    tags: Option<Vec<Tag>>,
}

impl Triangulation {
    pub fn new(dim: usize, simplices: Vec<BinarySimplex>) -> Result<Self> {
        Self::build(dim, simplices, None)
    }

    pub fn with_tags(dim: usize, simplices: Vec<BinarySimplex>, tags: Vec<Tag>) -> Result<Self> {
        if tags.len() != simplices.len() {
            return Err(Error::Parse(format!("{} tags for {} simplices", tags.len(), simplices.len())));
        }
        Self::build(dim, simplices, Some(tags))
    }

    fn build(dim: usize, simplices: Vec<BinarySimplex>, tags: Option<Vec<Tag>>) -> Result<Self> {
        check_dim(dim, 0)?;
        if let Some(bad) = simplices.iter().find(|s| s.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: bad.dim() });
        }
        let (simplices, tags) = match tags {
            Some(tags) => {
                let mut pairs: Vec<(BinarySimplex, Tag)> = simplices.into_iter().zip(tags).collect();
                pairs.sort();
                let (s, t): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
                (s, Some(t))
            }
            None => {
                let mut s = simplices;
                s.sort();
                (s, None)
            }
        };
        Ok(Self { dim, simplices, tags })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn simplices(&self) -> &[BinarySimplex] {
        &self.simplices
    }

    pub fn tags(&self) -> Option<&[Tag]> {
        self.tags.as_deref()
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn contains(&self, s: &BinarySimplex) -> bool {
        self.simplices.binary_search(s).is_ok()
    }

    /// Drops provenance tags (for set comparisons).
    pub fn untagged(&self) -> Triangulation {
        Triangulation { dim: self.dim, simplices: self.simplices.clone(), tags: None }
    }

    pub fn has_duplicates(&self) -> bool {
        self.simplices.windows(2).any(|w| w[0] == w[1])
    }
}

/// The n! path simplices `0 -> e_pi(1) -> e_pi(1) + e_pi(2) -> ... -> e^n`.
pub fn standard_triangulation(n: usize) -> Result<Triangulation> {
    check_dim(n, 1)?;
    let simplices: Vec<BinarySimplex> = (0..n)
        .permutations(n)
        .map(|perm| {
            let mut bits = 0u16;
            let mut vertices = Vec::with_capacity(n + 1);
            vertices.push(VertexMask::from_raw(0, n));
            for axis in perm {
                bits |= 1 << axis;
                vertices.push(VertexMask::from_raw(bits, n));
            }
            BinarySimplex::new(vertices).expect("path vertices are distinct")
        })
        .collect();
    let tags = vec![Tag::PathSimplex; simplices.len()];
    Triangulation::with_tags(n, simplices, tags)
}

/// The cube corner `K^n = conv{0, e_1, ..., e_n}`.
pub fn cube_corner(n: usize) -> Result<BinarySimplex> {
    check_dim(n, 1)?;
    let mut vertices = vec![VertexMask::from_raw(0, n)];
    vertices.extend((0..n).map(|j| VertexMask::from_raw(1 << j, n)));
    BinarySimplex::new(vertices)
}

/// The antipodal `A^n = conv{e_1, ..., e_n, e^n}`.
pub fn antipodal(n: usize) -> Result<BinarySimplex> {
    check_dim(n, 2)?;
    let mut vertices: Vec<VertexMask> = (0..n).map(|j| VertexMask::from_raw(1 << j, n)).collect();
    vertices.push(VertexMask::from_raw(full_mask(n), n));
    BinarySimplex::new(vertices)
}

/// Triangulation of `I^n \ K^n`: every simplex has `e^n` as a vertex.
fn corner_complement(n: usize) -> Vec<(BinarySimplex, Tag)> {
    let mut out = vec![(antipodal(n).expect("n >= 2"), Tag::Antipodal(0))];
    if n == 2 {
        return out;
    }
    let top = VertexMask::from_raw(full_mask(n), n);
    let lower = corner_complement(n - 1);
    let coned: Vec<Vec<(BinarySimplex, Tag)>> = (1..=n)
        .into_par_iter()
        .map(|axis| {
            lower
                .iter()
                .map(|(s, tag)| {
                    let mut vertices: Vec<VertexMask> = s.vertices().iter().map(|v| v.insert_axis(axis, 0)).collect();
                    vertices.push(top);
                    let level = match tag {
                        Tag::Antipodal(k) => k + 1,
                        other => unreachable!("corner complement only holds antipodal types, got {other}"),
                    };
                    (BinarySimplex::new(vertices).expect("apex lies off the facet"), Tag::Antipodal(level))
                })
                .collect()
        })
        .collect();
    out.extend(coned.into_iter().flatten());
    out
}

/// `K^n` plus the coning of `I^n \ K^n` towards `e^n`, built recursively from
/// copies of the (n-1)-dimensional construction placed in the facets
/// `x_j = 0`. Sub-coordinate `i` maps to ambient coordinate `i` for `i < j`
/// and `i + 1` otherwise.
pub fn corner_triangulation(n: usize) -> Result<Triangulation> {
    check_dim(n, 2)?;
    let mut pairs = vec![(cube_corner(n)?, Tag::CubeCorner)];
    pairs.extend(corner_complement(n));
    let (simplices, tags): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    Triangulation::with_tags(n, simplices, tags)
}

/// Simplex count per provenance tag.
pub fn census(t: &Triangulation) -> Result<BTreeMap<Tag, usize>> {
    let tags = t.tags().ok_or(Error::MissingTags)?;
    Ok(tags.iter().copied().counts().into_iter().collect())
}
