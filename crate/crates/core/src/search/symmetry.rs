//! The hyperoctahedral group `B_n` acting on cube vertices, simplices and
//! triangulations, and canonical forms under that action.

use itertools::Itertools;

use crate::builders::Triangulation;
use crate::geometry::{BinarySimplex, VertexMask};

/// Axis permutation composed with coordinate flips:
/// `(g v)_k = v_{perm(k)} XOR flip_k` (0-based axes internally).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<u8>,
    flips: u16,
}

impl SignedPermutation {
    /// `perm` must be a permutation of `0..n`; `flips` an n-bit mask.
    pub fn new(perm: Vec<usize>, flips: u16) -> Option<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        if n < 16 && flips >> n != 0 {
            return None;
        }
        Some(Self { perm: perm.into_iter().map(|p| p as u8).collect(), flips })
    }

    pub fn identity(n: usize) -> Self {
        Self { perm: (0..n as u8).collect(), flips: 0 }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn flips(&self) -> u16 {
        self.flips
    }

    pub fn perm(&self) -> Vec<usize> {
        self.perm.iter().map(|&p| p as usize).collect()
    }

    pub fn apply_bits(&self, bits: u16) -> u16 {
        let mut out = 0u16;
        for (k, &p) in self.perm.iter().enumerate() {
            out |= ((bits >> p) & 1) << k;
        }
        out ^ self.flips
    }

    pub fn apply(&self, v: VertexMask) -> VertexMask {
        VertexMask::from_raw(self.apply_bits(v.bits()), v.dim())
    }

    pub fn apply_simplex(&self, s: &BinarySimplex) -> BinarySimplex {
        let mut vertices: Vec<VertexMask> = s.vertices().iter().map(|&v| self.apply(v)).collect();
        vertices.sort_unstable();
        BinarySimplex::from_sorted_unchecked(s.dim(), vertices)
    }

    pub fn apply_triangulation(&self, t: &Triangulation) -> Triangulation {
        let simplices = t.simplices().iter().map(|s| self.apply_simplex(s)).collect();
        match t.tags() {
            Some(tags) => Triangulation::with_tags(t.dim(), simplices, tags.to_vec()),
            None => Triangulation::new(t.dim(), simplices),
        }
        .expect("group action preserves dimension")
    }

    /// Lookup table `bits -> g(bits)` over all `2^n` vertices.
    fn table(&self) -> Vec<u16> {
        (0..1u32 << self.dim()).map(|b| self.apply_bits(b as u16)).collect()
    }
}

/// All `n! 2^n` elements of `B_n`, permutations outermost.
pub fn hyperoctahedral_group(n: usize) -> impl Iterator<Item = SignedPermutation> {
    (0..n).permutations(n).flat_map(move |perm| {
        (0..1u32 << n).map(move |flips| SignedPermutation::new(perm.clone(), flips as u16).expect("valid element"))
    })
}

/// The `n!` elements fixing the origin (pure axis permutations).
pub fn origin_stabilizer(n: usize) -> impl Iterator<Item = SignedPermutation> {
    (0..n).permutations(n).map(|perm| SignedPermutation::new(perm, 0).expect("valid element"))
}

/// Sorted list of sorted simplex encodings; comparable across group images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub dim: usize,
    pub simplices: Vec<Vec<u16>>,
}

fn encode_under(table: &[u16], t: &Triangulation) -> Vec<Vec<u16>> {
    let mut out: Vec<Vec<u16>> = t
        .simplices()
        .iter()
        .map(|s| {
            let mut image: Vec<u16> = s.vertices().iter().map(|v| table[v.bits() as usize]).collect();
            image.sort_unstable();
            image
        })
        .collect();
    out.sort_unstable();
    out
}

/// Lexicographic minimum over `B_n` of the transformed encodings.
pub fn canonical_form(t: &Triangulation) -> CanonicalForm {
    let simplices = hyperoctahedral_group(t.dim()).map(|g| encode_under(&g.table(), t)).min().unwrap_or_default();
    CanonicalForm { dim: t.dim(), simplices }
}

/// The triangulation whose plain encoding is the canonical form.
pub fn canonical_representative(t: &Triangulation) -> Triangulation {
    form_to_triangulation(&canonical_form(t))
}

pub(crate) fn form_to_triangulation(form: &CanonicalForm) -> Triangulation {
    let simplices = form
        .simplices
        .iter()
        .map(|bits| {
            BinarySimplex::from_sorted_unchecked(form.dim, bits.iter().map(|&b| VertexMask::from_raw(b, form.dim)).collect())
        })
        .collect();
    Triangulation::new(form.dim, simplices).expect("canonical form has a single dimension")
}

/// The distinct images of `t` under `B_n`, untagged and sorted.
pub fn orbit(t: &Triangulation) -> Vec<Triangulation> {
    let base = t.untagged();
    let mut images: Vec<Triangulation> = hyperoctahedral_group(t.dim()).map(|g| g.apply_triangulation(&base)).collect();
    images.sort_by(|a, b| a.simplices().cmp(b.simplices()));
    images.dedup();
    images
}

pub fn are_equivalent(a: &Triangulation, b: &Triangulation) -> bool {
    a.dim() == b.dim() && a.len() == b.len() && canonical_form(a) == canonical_form(b)
}

/// Canonical key of a simplex under the origin stabilizer.
pub(crate) fn origin_orbit_key(s: &BinarySimplex, stabilizer: &[Vec<u16>]) -> Vec<u16> {
    stabilizer
        .iter()
        .map(|table| {
            let mut image: Vec<u16> = s.vertices().iter().map(|v| table[v.bits() as usize]).collect();
            image.sort_unstable();
            image
        })
        .min()
        .expect("group is nonempty")
}

pub(crate) fn stabilizer_tables(n: usize) -> Vec<Vec<u16>> {
    origin_stabilizer(n).map(|g| g.table()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{corner_triangulation, standard_triangulation};

    #[test]
    fn group_order() {
        assert_eq!(hyperoctahedral_group(3).count(), 48);
        assert_eq!(hyperoctahedral_group(4).count(), 384);
        assert_eq!(origin_stabilizer(4).count(), 24);
    }

    #[test]
    fn action_follows_the_formula() {
        let g = SignedPermutation::new(vec![2, 0, 1], 0b001).unwrap();
        // v = (x1, x2, x3) = (1, 0, 0): (g v)_1 = x3 ^ 1 = 1, (g v)_2 = x1 = 1, (g v)_3 = x2 = 0
        let v = VertexMask::parse("100").unwrap();
        assert_eq!(g.apply(v).to_string(), "110");
        assert!(SignedPermutation::new(vec![0, 0, 1], 0).is_none());
    }

    #[test]
    fn flipping_axis_one_moves_the_diagonal() {
        let t = standard_triangulation(3).unwrap();
        let g = SignedPermutation::new(vec![0, 1, 2], 0b001).unwrap();
        let moved = g.apply_triangulation(&t);
        let a = VertexMask::parse("100").unwrap();
        assert!(moved.simplices().iter().all(|s| s.contains(a) && s.contains(a.complement())));
        assert_ne!(moved, t);
        assert!(are_equivalent(&t, &moved));
    }

    #[test]
    fn families_are_inequivalent() {
        let s3 = standard_triangulation(3).unwrap();
        let c3 = corner_triangulation(3).unwrap();
        assert!(!are_equivalent(&s3, &c3));
        // n = 2: the two families coincide up to symmetry.
        assert!(are_equivalent(&standard_triangulation(2).unwrap(), &corner_triangulation(2).unwrap()));
    }

    #[test]
    fn orbit_sizes() {
        // One standard triangulation per long diagonal; at n = 3 the corner
        // family is fixed by its regular tetrahedron, at n = 4 by its corner.
        assert_eq!(orbit(&standard_triangulation(3).unwrap()).len(), 4);
        assert_eq!(orbit(&corner_triangulation(3).unwrap()).len(), 2);
        assert_eq!(orbit(&standard_triangulation(4).unwrap()).len(), 8);
        assert_eq!(orbit(&corner_triangulation(4).unwrap()).len(), 16);
    }
}
