//! Candidate apexes across an interior facet.

use crate::error::{Error, Result};
use crate::geometry::{project_vertex_onto_facet, BinarySimplex, IntVector, VertexMask};

/// An interior facet, a normal to it, and the half-space to search.
///
/// `side = +1` selects the open half-space where `normal . (v - f) > 0` for
/// facet vertices `f`; `side = -1` the opposite one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborQuery {
    facet: Vec<VertexMask>,
    normal: IntVector,
    side: i8,
}

impl NeighborQuery {
    pub fn new(mut facet: Vec<VertexMask>, normal: IntVector, side: i8) -> Result<Self> {
        let n = normal.len();
        if side != 1 && side != -1 {
            return Err(Error::InvalidQuery("side must be +1 or -1"));
        }
        if normal.is_zero() {
            return Err(Error::InvalidQuery("normal is zero"));
        }
        if facet.len() != n || facet.iter().any(|v| v.dim() != n) {
            return Err(Error::InvalidQuery("facet needs n vertices of dimension n"));
        }
        facet.sort_unstable();
        if facet.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidQuery("repeated facet vertex"));
        }
        if facet.iter().any(|&v| normal.dot_diff(v, facet[0]) != 0) {
            return Err(Error::InvalidQuery("normal is not orthogonal to the facet"));
        }
        Ok(Self { facet, normal, side })
    }

    /// The facet of `s` opposite vertex `k`, looking away from `s`.
    pub fn across_facet(s: &BinarySimplex, k: usize) -> Result<Self> {
        let normals = s.outward_normals()?;
        let normal = normals.get(k).ok_or(Error::InvalidQuery("vertex index out of range"))?.normal.clone();
        Ok(Self { facet: s.facet_vertices(k), normal, side: 1 })
    }

    pub fn flipped(&self) -> Self {
        Self { side: -self.side, ..self.clone() }
    }

    pub fn facet(&self) -> &[VertexMask] {
        &self.facet
    }

    pub fn normal(&self) -> &IntVector {
        &self.normal
    }

    pub fn side(&self) -> i8 {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// Signed offset of `v` from the facet hyperplane, positive on the
    /// requested side.
    pub fn side_value(&self, v: VertexMask) -> i64 {
        self.side as i64 * self.normal.dot_diff(v, self.facet[0])
    }

    /// The normal oriented toward the requested side.
    pub fn side_normal(&self) -> IntVector {
        self.normal.scaled(self.side as i64)
    }
}

/// For a nowhere-zero direction `u`, the vertex with `x_j = 1` exactly where
/// `u_j > 0`. It and its complement are the only cube vertices from which the
/// line in direction `u` enters the cube.
pub fn apex_for_direction(u: &IntVector) -> Option<VertexMask> {
    if u.is_empty() || u.has_zero_entry() {
        return None;
    }
    let bits = u.entries().iter().enumerate().filter(|&(_, &x)| x > 0).fold(0u16, |acc, (j, _)| acc | 1 << j);
    Some(VertexMask::from_raw(bits, u.len()))
}

/// Vertices that can complete the facet to a nonobtuse simplex on the
/// requested side, in ascending order.
///
/// For a nowhere-zero normal `u` (oriented toward the side) the only possible
/// apex has `x_j = 1` exactly where `u_j > 0`; this is kept if it lies strictly
/// on the side. Otherwise every vertex on the side is tested for projecting
/// into the closed facet, which nonobtuseness requires.
pub fn candidate_apexes(q: &NeighborQuery) -> Vec<VertexMask> {
    let n = q.dim();
    let u = q.side_normal();
    if let Some(apex) = apex_for_direction(&u) {
        return if q.side_value(apex) > 0 && !q.facet.contains(&apex) { vec![apex] } else { Vec::new() };
    }
    (0..1u16 << n)
        .map(|b| VertexMask::from_raw(b, n))
        .filter(|&v| q.side_value(v) > 0)
        .filter(|&v| {
            let s = BinarySimplex::with_apex(&q.facet, v).expect("apex off the facet hyperplane");
            let k = s.index_of(v).expect("apex is a vertex");
            project_vertex_onto_facet(&s, k).map(|p| p.inside).unwrap_or(false)
        })
        .collect()
}

/// Nonobtuse simplices sharing the facet and lying on the requested side.
pub fn nonobtuse_neighbors(q: &NeighborQuery) -> Vec<BinarySimplex> {
    candidate_apexes(q)
        .into_iter()
        .filter_map(|v| BinarySimplex::with_apex(&q.facet, v).ok())
        .filter(|s| s.is_nonobtuse())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{antipodal, cube_corner};
    use crate::fixtures::{p_simplex, q_simplex};

    fn mask(s: &str) -> VertexMask {
        VertexMask::parse(s).unwrap()
    }

    #[test]
    fn p_facet_apex_negates_the_second_column() {
        let p = p_simplex();
        let k = p.index_of(mask("01110")).unwrap();
        let q = NeighborQuery::across_facet(&p, k).unwrap();
        assert_eq!(candidate_apexes(&q), vec![mask("10001")]);
        assert_eq!(mask("10001"), mask("01110").complement());
    }

    #[test]
    fn q_facet_has_no_nonobtuse_neighbor() {
        let s = q_simplex();
        let k = s.index_of(mask("10110")).unwrap();
        let q = NeighborQuery::across_facet(&s, k).unwrap();
        assert_eq!(candidate_apexes(&q), vec![mask("01001")]);
        assert!(nonobtuse_neighbors(&q).is_empty());
    }

    #[test]
    fn corner_interior_facet_leads_to_the_antipodal_simplex() {
        for n in 2..=5 {
            let k = cube_corner(n).unwrap();
            let q = NeighborQuery::across_facet(&k, 0).unwrap();
            assert_eq!(candidate_apexes(&q), vec![VertexMask::all_ones(n).unwrap()]);
            assert_eq!(nonobtuse_neighbors(&q), vec![antipodal(n).unwrap()]);
            // Back across the same facet sits the corner itself.
            assert_eq!(nonobtuse_neighbors(&q.flipped()), vec![k]);
        }
    }

    #[test]
    fn query_validation() {
        let f = vec![mask("100"), mask("010"), mask("001")];
        assert!(NeighborQuery::new(f.clone(), IntVector::new(vec![1, 1, 1]), 1).is_ok());
        assert!(NeighborQuery::new(f.clone(), IntVector::new(vec![1, 1, 0]), 1).is_err());
        assert!(NeighborQuery::new(f.clone(), IntVector::new(vec![0, 0, 0]), 1).is_err());
        assert!(NeighborQuery::new(f, IntVector::new(vec![1, 1, 1]), 0).is_err());
    }

    #[test]
    fn zero_entry_normal_uses_projection_scan() {
        // Facet {000, 100, 011} lies in the plane x_2 = x_3. Of the two
        // vertices with x_2 > x_3, only 010 projects into the triangle.
        let f = vec![mask("000"), mask("100"), mask("011")];
        let q = NeighborQuery::new(f, IntVector::new(vec![0, 1, -1]), 1).unwrap();
        let apexes = candidate_apexes(&q);
        assert_eq!(apexes, vec![mask("010")]);
        assert!(nonobtuse_neighbors(&q).iter().all(|s| s.is_nonobtuse()));
    }
}
