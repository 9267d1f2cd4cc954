use std::fmt;

use num_integer::Integer;

use super::linalg::{self, QuickClass};
use super::mask::{check_dim, VertexMask};
use crate::error::{Error, Result};

/// Integer lattice vector of ambient length n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dot(&self, other: &IntVector) -> i64 {
        linalg::dot(&self.0, &other.0)
    }

    /// Dot product with a cube vertex (or the difference of two).
    pub fn dot_mask(&self, v: VertexMask) -> i64 {
        self.0.iter().enumerate().filter(|&(j, _)| (v.bits() >> j) & 1 == 1).map(|(_, &x)| x).sum()
    }

    pub fn dot_diff(&self, a: VertexMask, b: VertexMask) -> i64 {
        self.dot_mask(a) - self.dot_mask(b)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn has_zero_entry(&self) -> bool {
        self.0.contains(&0)
    }

    pub fn scaled(&self, k: i64) -> IntVector {
        IntVector(self.0.iter().map(|x| x * k).collect())
    }

    /// Divides out the gcd of the entries; the zero vector is left alone.
    pub fn primitive(&self) -> IntVector {
        let g = self.0.iter().fold(0i64, |g, &x| g.gcd(&x));
        if g <= 1 {
            return self.clone();
        }
        IntVector(self.0.iter().map(|x| x / g).collect())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// An n-simplex whose n + 1 vertices are cube vertices.
///
/// Vertices are kept in strictly increasing bit-vector order, so structural
/// equality is vertex-set equality and `Ord` is the canonical encoding order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinarySimplex {
    dim: usize,
    vertices: Vec<VertexMask>,
}

impl BinarySimplex {
    pub fn new(mut vertices: Vec<VertexMask>) -> Result<Self> {
        let dim = vertices.len().checked_sub(1).ok_or(Error::WrongVertexCount { dim: 0, expected: 1, got: 0 })?;
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::WrongVertexCount { dim: v.dim(), expected: v.dim() + 1, got: vertices.len() });
            }
        }
        vertices.sort_unstable();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex);
        }
        Ok(Self { dim, vertices })
    }

    /// Builds a simplex from raw bits; `bits` need not be sorted.
    pub fn from_bits(bits: &[u32], dim: usize) -> Result<Self> {
        check_dim(dim, 0)?;
        let vertices = bits.iter().map(|&b| VertexMask::new(b, dim)).collect::<Result<Vec<_>>>()?;
        if vertices.len() != dim + 1 {
            return Err(Error::WrongVertexCount { dim, expected: dim + 1, got: vertices.len() });
        }
        Self::new(vertices)
    }

    /// Parses whitespace- or comma-separated vertex strings such as `"000 100 010 001"`.
    pub fn parse(text: &str) -> Result<Self> {
        let vertices = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(VertexMask::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices)
    }

    /// Internal constructor for already sorted, distinct vertices.
    pub(crate) fn from_sorted_unchecked(dim: usize, vertices: Vec<VertexMask>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(vertices.len(), dim + 1);
        Self { dim, vertices }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[VertexMask] {
        &self.vertices
    }

    pub fn vertex(&self, k: usize) -> VertexMask {
        self.vertices[k]
    }

    pub fn bits(&self) -> Vec<u16> {
        self.vertices.iter().map(|v| v.bits()).collect()
    }

    pub fn contains(&self, v: VertexMask) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn index_of(&self, v: VertexMask) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Vertices of the facet opposite vertex `k`.
    pub fn facet_vertices(&self, k: usize) -> Vec<VertexMask> {
        self.vertices.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &v)| v).collect()
    }

    /// Cone over a facet: the simplex spanned by `facet` and `apex`.
    pub fn with_apex(facet: &[VertexMask], apex: VertexMask) -> Result<Self> {
        let mut vertices = facet.to_vec();
        vertices.push(apex);
        Self::new(vertices)
    }

    /// True if the simplex has two antipodal vertices (a long diagonal).
    pub fn has_long_diagonal(&self) -> bool {
        self.vertices.iter().any(|v| self.contains(v.complement()))
    }

    fn raw(&self) -> ([u16; super::MAX_DIM + 1], usize) {
        let mut out = [0u16; super::MAX_DIM + 1];
        for (slot, v) in out.iter_mut().zip(&self.vertices) {
            *slot = v.bits();
        }
        (out, self.vertices.len())
    }

    /// Determinant of the edge matrix with columns `v_i - v_0`.
    ///
    /// Nonzero iff the simplex is nondegenerate; `|det| / n!` is its volume.
    pub fn determinant(&self) -> i64 {
        let (raw, len) = self.raw();
        linalg::determinant(&linalg::edge_matrix(&raw[..len], self.dim), self.dim)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.determinant() != 0
    }

    pub(crate) fn quick_class(&self) -> QuickClass {
        let (raw, len) = self.raw();
        linalg::quick_class(&raw[..len], self.dim)
    }

    pub fn is_nonobtuse(&self) -> bool {
        self.quick_class() == QuickClass::Nonobtuse
    }

    /// One outward, primitive normal per facet, indexed by the opposite vertex.
    pub fn outward_normals(&self) -> Result<Vec<FacetNormal>> {
        let n = self.dim;
        let (raw, len) = self.raw();
        let m = linalg::edge_matrix(&raw[..len], n);
        let det = linalg::determinant(&m, n);
        if det == 0 {
            return Err(Error::DegenerateSimplex);
        }
        let grads = linalg::scaled_gradients(&linalg::adjugate(&m, n), n);
        let flip = -det.signum();
        Ok((0..=n)
            .map(|k| FacetNormal {
                opposite_vertex_index: k,
                normal: IntVector::new(grads[k][..n].iter().map(|x| x * flip).collect()).primitive(),
            })
            .collect())
    }

    /// Vertex sets of the exterior facets, keyed by the cube facet
    /// `{x_axis = value}` that contains them.
    pub(crate) fn exterior_facet_planes(&self) -> Vec<(usize, u8, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        for axis in 1..=n {
            let ones = self.vertices.iter().filter(|v| v.coord(axis) == 1).count();
            // Exactly n vertices share the value; the remaining vertex is the apex.
            for value in [0u8, 1] {
                let matching = if value == 1 { ones } else { n + 1 - ones };
                if matching == n {
                    let apex = self.vertices.iter().position(|v| v.coord(axis) != value).expect("one vertex off the plane");
                    out.push((axis, value, apex));
                }
            }
        }
        out
    }
}

impl fmt::Debug for BinarySimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for BinarySimplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Outward normal of the facet opposite `opposite_vertex_index`.
///
/// Entries are coprime, the vector is orthogonal to every facet edge, and
/// `normal . (v_k - f) < 0` for the opposite vertex `v_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetNormal {
    pub opposite_vertex_index: usize,
    pub normal: IntVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AngleTag {
    Degenerate,
    Obtuse,
    NonobtuseRight,
    Acute,
}

/// Dihedral angle classification from the signs of outward normal dot products.
///
/// Pairs are facet indices `(i, j)` with `i < j`, each facet named by its
/// opposite vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleClass {
    pub tag: AngleTag,
    pub right_pairs: Vec<(usize, usize)>,
    pub obtuse_pairs: Vec<(usize, usize)>,
    pub acute_count: usize,
}

impl AngleClass {
    pub fn is_nonobtuse(&self) -> bool {
        matches!(self.tag, AngleTag::Acute | AngleTag::NonobtuseRight)
    }

    /// Classifies from a list of normals (any positive scaling per normal).
    pub fn from_normals(normals: &[IntVector]) -> Self {
        let mut right_pairs = Vec::new();
        let mut obtuse_pairs = Vec::new();
        let mut acute_count = 0;
        for i in 0..normals.len() {
            for j in i + 1..normals.len() {
                match normals[i].dot(&normals[j]) {
                    d if d > 0 => obtuse_pairs.push((i, j)),
                    0 => right_pairs.push((i, j)),
                    _ => acute_count += 1,
                }
            }
        }
        let tag = if !obtuse_pairs.is_empty() {
            AngleTag::Obtuse
        } else if right_pairs.is_empty() {
            AngleTag::Acute
        } else {
            AngleTag::NonobtuseRight
        };
        Self { tag, right_pairs, obtuse_pairs, acute_count }
    }

    fn degenerate() -> Self {
        Self { tag: AngleTag::Degenerate, right_pairs: Vec::new(), obtuse_pairs: Vec::new(), acute_count: 0 }
    }
}

pub fn determinant(s: &BinarySimplex) -> i64 {
    s.determinant()
}

pub fn outward_normals(s: &BinarySimplex) -> Result<Vec<FacetNormal>> {
    s.outward_normals()
}

pub fn angle_class(s: &BinarySimplex) -> AngleClass {
    match s.outward_normals() {
        Ok(normals) => AngleClass::from_normals(&normals.into_iter().map(|f| f.normal).collect::<Vec<_>>()),
        Err(_) => AngleClass::degenerate(),
    }
}
