//! Orthogonal trees and the path / cube-corner taxonomy of binary simplices.

use crate::geometry::{angle_class, AngleClass, AngleTag, BinarySimplex, VertexMask};

/// A tree edge joining simplex vertices `a < b` along cube axis `axis` (from 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeEdge {
    pub a: usize,
    pub b: usize,
    pub axis: usize,
}

/// Spanning tree of n mutually orthogonal cube edges on the n + 1 vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalTree {
    vertex_count: usize,
    edges: Vec<TreeEdge>,
}

impl OrthogonalTree {
    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn degrees(&self) -> Vec<usize> {
        degrees(self.vertex_count, self.edges.iter().map(|e| (e.a, e.b)))
    }

    pub fn leaves(&self) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|&(_, &d)| d == 1).map(|(v, _)| v).collect()
    }

    /// Edges as vertex-mask pairs, for comparing trees of different simplices.
    pub fn mask_edges(&self, s: &BinarySimplex) -> Vec<(VertexMask, VertexMask, usize)> {
        let mut out: Vec<_> = self.edges.iter().map(|e| (s.vertex(e.a), s.vertex(e.b), e.axis)).collect();
        out.sort();
        out
    }
}

fn degrees(count: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<usize> {
    let mut deg = vec![0; count];
    for (a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    deg
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ShapeTag {
    Path,
    Star,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeShape {
    pub tag: ShapeTag,
    pub degree_sequence: Vec<usize>,
    pub leaf_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorFacet {
    pub axis: usize,
    pub value: u8,
    /// Index of the simplex vertex off the cube facet.
    pub opposite_vertex_index: usize,
    /// The facet with coordinate `axis` deleted.
    pub facet: BinarySimplex,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub angle: AngleClass,
    pub tree: Option<OrthogonalTree>,
    pub shape: Option<TreeShape>,
    pub is_path: bool,
    pub is_cube_corner: bool,
    pub is_fake_path: bool,
    pub is_fake_cube_corner: bool,
    pub exterior_facets: Vec<ExteriorFacet>,
}

impl ClassificationRecord {
    pub fn is_orthogonal(&self) -> bool {
        self.tree.is_some()
    }

    /// Short human label: "path simplex", "cube corner", "snake", ...
    pub fn label(&self) -> &'static str {
        match (self.is_path, self.is_cube_corner, self.is_fake_path, self.is_fake_cube_corner) {
            (true, true, _, _) => "path simplex and cube corner",
            (true, false, _, _) => "path simplex",
            (false, true, _, _) => "cube corner",
            (false, false, true, true) => "snake",
            (false, false, true, false) => "fake path simplex",
            (false, false, false, true) => "fake cube corner",
            _ if self.tree.is_some() => "orthogonal",
            _ => "not orthogonal",
        }
    }
}

/// Searches the cube edges of `s` for a spanning tree with one edge per axis.
///
/// Only cube edges are tried, which is complete for binary simplices. Per-axis
/// choices are explored in ascending `(axis, a, b)` order and the first acyclic
/// selection wins. For a nondegenerate simplex each axis carries at most one
/// cube edge (two parallel cube edges would span a parallelogram), so the tree
/// is unique there.
pub fn find_orthogonal_tree(s: &BinarySimplex) -> Option<OrthogonalTree> {
    let choices = cube_edges_by_axis(s);
    let mut chosen = Vec::with_capacity(s.dim());
    if pick_tree(&choices, 0, s.dim() + 1, &mut chosen) {
        return Some(OrthogonalTree { vertex_count: s.dim() + 1, edges: chosen });
    }
    None
}

/// Every spanning tree of distinct-axis cube edges (test and audit helper).
pub fn all_orthogonal_trees(s: &BinarySimplex) -> Vec<OrthogonalTree> {
    let choices = cube_edges_by_axis(s);
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    collect_trees(&choices, 0, s.dim() + 1, &mut chosen, &mut out);
    out
}

fn cube_edges_by_axis(s: &BinarySimplex) -> Vec<Vec<TreeEdge>> {
    let n = s.dim();
    let mut by_axis = vec![Vec::new(); n];
    for a in 0..=n {
        for b in a + 1..=n {
            let diff = s.vertex(a).bits() ^ s.vertex(b).bits();
            if diff.count_ones() == 1 {
                let axis = diff.trailing_zeros() as usize + 1;
                by_axis[axis - 1].push(TreeEdge { a, b, axis });
            }
        }
    }
    by_axis
}

fn acyclic(vertex_count: usize, edges: &[TreeEdge]) -> bool {
    let mut parent: Vec<usize> = (0..vertex_count).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in edges {
        let (ra, rb) = (root(&mut parent, e.a), root(&mut parent, e.b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

fn pick_tree(choices: &[Vec<TreeEdge>], axis: usize, vertex_count: usize, chosen: &mut Vec<TreeEdge>) -> bool {
    if axis == choices.len() {
        return true;
    }
    for &edge in &choices[axis] {
        chosen.push(edge);
        if acyclic(vertex_count, chosen) && pick_tree(choices, axis + 1, vertex_count, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

fn collect_trees(
    choices: &[Vec<TreeEdge>],
    axis: usize,
    vertex_count: usize,
    chosen: &mut Vec<TreeEdge>,
    out: &mut Vec<OrthogonalTree>,
) {
    if axis == choices.len() {
        out.push(OrthogonalTree { vertex_count, edges: chosen.clone() });
        return;
    }
    for &edge in &choices[axis] {
        chosen.push(edge);
        if acyclic(vertex_count, chosen) {
            collect_trees(choices, axis + 1, vertex_count, chosen, out);
        }
        chosen.pop();
    }
}

/// Shape of a tree on `count` vertices given as an edge list.
fn shape_of(count: usize, edges: &[(usize, usize)]) -> TreeShape {
    let deg = degrees(count, edges.iter().copied());
    let max = deg.iter().copied().max().unwrap_or(0);
    let leaf_count = deg.iter().filter(|&&d| d == 1).count();
    let tag = if max <= 2 {
        ShapeTag::Path
    } else if max == count - 1 {
        ShapeTag::Star
    } else {
        ShapeTag::Other
    };
    let mut degree_sequence = deg;
    degree_sequence.sort_unstable();
    TreeShape { tag, degree_sequence, leaf_count }
}

fn is_star(count: usize, edges: &[(usize, usize)]) -> bool {
    count <= 2 || degrees(count, edges.iter().copied()).iter().any(|&d| d == count - 1)
}

fn is_path(count: usize, edges: &[(usize, usize)]) -> bool {
    degrees(count, edges.iter().copied()).iter().all(|&d| d <= 2)
}

/// Path if no vertex has degree above 2, Star if one vertex meets every edge.
///
/// For n <= 2 both descriptions fit; the tag is then `Path`, and
/// [`classify`] reports both `is_path` and `is_cube_corner`.
pub fn tree_shape(t: &OrthogonalTree) -> TreeShape {
    let edges: Vec<(usize, usize)> = t.edges.iter().map(|e| (e.a, e.b)).collect();
    shape_of(t.vertex_count, &edges)
}

/// Removes leaf `leaf` and relabels the remaining vertices densely.
fn delete_leaf(edges: &[(usize, usize)], leaf: usize) -> Vec<(usize, usize)> {
    let relabel = |v: usize| if v > leaf { v - 1 } else { v };
    edges.iter().filter(|&&(a, b)| a != leaf && b != leaf).map(|&(a, b)| (relabel(a), relabel(b))).collect()
}

/// `(is_fake_path, is_fake_cube_corner)` decided on the tree alone: the
/// exterior facet opposite a leaf has the leaf-deleted subtree as its tree.
pub fn fake_flags(t: &OrthogonalTree) -> (bool, bool) {
    let count = t.vertex_count;
    let edges: Vec<(usize, usize)> = t.edges.iter().map(|e| (e.a, e.b)).collect();
    let shape_path = is_path(count, &edges);
    let shape_star = is_star(count, &edges);
    let mut fake_path = false;
    let mut fake_corner = false;
    for leaf in t.leaves() {
        let sub = delete_leaf(&edges, leaf);
        fake_path |= !shape_path && is_path(count - 1, &sub);
        fake_corner |= !shape_star && is_star(count - 1, &sub);
    }
    (fake_path, fake_corner)
}

/// Facets lying in a cube facet `{x_axis = value}`, sorted by `(axis, value)`,
/// each reduced to dimension n - 1 by deleting the constant coordinate.
pub fn exterior_facets(s: &BinarySimplex) -> Vec<ExteriorFacet> {
    s.exterior_facet_planes()
        .into_iter()
        .map(|(axis, value, apex)| {
            let reduced: Vec<VertexMask> = s.facet_vertices(apex).into_iter().map(|v| v.delete_axis(axis)).collect();
            ExteriorFacet {
                axis,
                value,
                opposite_vertex_index: apex,
                facet: BinarySimplex::new(reduced).expect("distinct vertices in a common cube facet stay distinct"),
            }
        })
        .collect()
}

pub fn classify(s: &BinarySimplex) -> ClassificationRecord {
    let angle = angle_class(s);
    let exterior = exterior_facets(s);
    let tree = if angle.tag == AngleTag::Degenerate { None } else { find_orthogonal_tree(s) };
    let shape = tree.as_ref().map(tree_shape);
    let n = s.dim();
    let (mut is_path, mut is_cube_corner) = (false, false);
    let (mut is_fake_path, mut is_fake_cube_corner) = (false, false);
    if let (Some(t), Some(sh)) = (&tree, &shape) {
        let edges: Vec<(usize, usize)> = t.edges.iter().map(|e| (e.a, e.b)).collect();
        is_path = sh.tag == ShapeTag::Path;
        is_cube_corner = sh.tag == ShapeTag::Star || (is_path && is_star(n + 1, &edges));
        if n >= 3 {
            (is_fake_path, is_fake_cube_corner) = fake_flags(t);
        }
    }
    ClassificationRecord {
        angle,
        tree,
        shape,
        is_path,
        is_cube_corner,
        is_fake_path,
        is_fake_cube_corner,
        exterior_facets: exterior,
    }
}
