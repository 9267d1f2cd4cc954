//! Exact verification of nonobtuse face-to-face triangulations of `I^n`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::builders::Triangulation;
use crate::classification::exterior_facets;
use crate::geometry::{full_mask, BinarySimplex, QuickClass};
use crate::lp::{maximize, LpOutcome};

/// Fixed seed for randomized spot checks when none is supplied.
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplexCheck {
    pub binary: bool,
    pub nondegenerate: bool,
    pub nonobtuse: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FailureReason {
    NotBinary,
    Degenerate,
    Obtuse,
    Duplicate,
    Volume { expected: u128, actual: u128 },
    NotFaceToFace,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Failure {
    pub simplices: Vec<usize>,
    pub reason: FailureReason,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let who = self.simplices.iter().map(|i| format!("#{i}")).collect::<Vec<_>>().join(", ");
        match &self.reason {
            FailureReason::NotBinary => write!(f, "simplex {who}: wrong dimension"),
            FailureReason::Degenerate => write!(f, "simplex {who}: degenerate"),
            FailureReason::Obtuse => write!(f, "simplex {who}: obtuse"),
            FailureReason::Duplicate => write!(f, "simplices {who}: duplicate"),
            FailureReason::Volume { expected, actual } => {
                write!(f, "volume: sum of |det| is {actual}, expected n! = {expected}")
            }
            FailureReason::NotFaceToFace => write!(f, "simplices {who}: not face-to-face"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub dim: usize,
    pub per_simplex: Vec<SimplexCheck>,
    pub volume_ok: bool,
    pub pairwise_ok: bool,
    pub failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn abs_det_sum(t: &Triangulation) -> u128 {
    t.simplices().iter().map(|s| s.determinant().unsigned_abs() as u128).sum()
}

/// Sum of `|det|` equals `n!` exactly.
pub fn check_volume(t: &Triangulation) -> bool {
    abs_det_sum(t) == factorial(t.dim())
}

/// Cheap exact separation: an axis where one simplex sits at 0 and the other at 1.
fn boxes_disjoint(a: &BinarySimplex, b: &BinarySimplex) -> bool {
    let all_ones = |s: &BinarySimplex| s.vertices().iter().fold(full_mask(s.dim()), |acc, v| acc & v.bits());
    let any_one = |s: &BinarySimplex| s.vertices().iter().fold(0u16, |acc, v| acc | v.bits());
    let separating = (!any_one(a) & all_ones(b)) | (all_ones(a) & !any_one(b));
    separating & full_mask(a.dim()) != 0
}

/// True iff `a` and `b` intersect exactly in the convex hull of their shared
/// vertices.
///
/// One exact LP over barycentric weights `alpha` of `a` and `beta` of `b`
/// with `sum alpha_i a_i = sum beta_j b_j`: maximize the total weight `a`
/// puts on vertices it does not share with `b`. Every point of `a` with zero
/// weight there lies in `conv(shared)`, so the pair is face-to-face iff the
/// optimum is 0 (or the intersection is empty).
pub fn face_to_face(a: &BinarySimplex, b: &BinarySimplex) -> bool {
    if a == b || boxes_disjoint(a, b) {
        return true;
    }
    let n = a.dim();
    let m = n + 1;
    let q = |x: i64| BigRational::from_integer(BigInt::from(x));
    let mut rows = Vec::with_capacity(n + 2);
    for axis in 1..=n {
        let mut row: Vec<BigRational> = a.vertices().iter().map(|v| q(v.coord(axis) as i64)).collect();
        row.extend(b.vertices().iter().map(|v| q(-(v.coord(axis) as i64))));
        rows.push(row);
    }
    rows.push((0..2 * m).map(|j| q((j < m) as i64)).collect());
    rows.push((0..2 * m).map(|j| q((j >= m) as i64)).collect());
    let mut rhs = vec![q(0); n];
    rhs.extend([q(1), q(1)]);
    let cost: Vec<BigRational> = (0..2 * m).map(|j| q((j < m && !b.contains(a.vertex(j))) as i64)).collect();
    match maximize(&rows, &rhs, &cost) {
        LpOutcome::Infeasible => true,
        LpOutcome::Optimal { value, .. } => value.is_zero(),
        LpOutcome::Unbounded => unreachable!("feasible region is a product of simplices"),
    }
}

fn failing_pairs(t: &Triangulation, usable: &[bool]) -> Vec<(usize, usize)> {
    let s = t.simplices();
    let mut pairs: Vec<(usize, usize)> = (0..s.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            (i + 1..s.len())
                .filter(move |&j| usable[i] && usable[j] && s[i] != s[j] && !face_to_face(&s[i], &s[j]))
                .map(move |j| (i, j))
        })
        .collect();
    pairs.sort_unstable();
    pairs
}

/// Every pair of members meets in a common face.
pub fn check_pairwise_face_to_face(t: &Triangulation) -> bool {
    let usable = vec![true; t.len()];
    failing_pairs(t, &usable).is_empty()
}

/// Runs every check and collects all failures, sorted by simplex indices.
pub fn validate(t: &Triangulation, require_nonobtuse: bool) -> ValidationReport {
    let n = t.dim();
    let per_simplex: Vec<SimplexCheck> = t
        .simplices()
        .iter()
        .map(|s| {
            let class = s.quick_class();
            SimplexCheck {
                binary: s.dim() == n,
                nondegenerate: class != QuickClass::Degenerate,
                nonobtuse: class == QuickClass::Nonobtuse,
            }
        })
        .collect();
    let mut failures = Vec::new();
    for (i, check) in per_simplex.iter().enumerate() {
        if !check.binary {
            failures.push(Failure { simplices: vec![i], reason: FailureReason::NotBinary });
        }
        if !check.nondegenerate {
            failures.push(Failure { simplices: vec![i], reason: FailureReason::Degenerate });
        } else if require_nonobtuse && !check.nonobtuse {
            failures.push(Failure { simplices: vec![i], reason: FailureReason::Obtuse });
        }
    }
    for (i, w) in t.simplices().windows(2).enumerate() {
        if w[0] == w[1] {
            failures.push(Failure { simplices: vec![i, i + 1], reason: FailureReason::Duplicate });
        }
    }
    let actual = abs_det_sum(t);
    let expected = factorial(n);
    let volume_ok = actual == expected;
    if !volume_ok {
        failures.push(Failure { simplices: Vec::new(), reason: FailureReason::Volume { expected, actual } });
    }
    let usable: Vec<bool> = per_simplex.iter().map(|c| c.binary && c.nondegenerate).collect();
    let bad_pairs = failing_pairs(t, &usable);
    let pairwise_ok = bad_pairs.is_empty();
    failures.extend(bad_pairs.into_iter().map(|(i, j)| Failure { simplices: vec![i, j], reason: FailureReason::NotFaceToFace }));
    failures.sort();
    ValidationReport { dim: n, per_simplex, volume_ok, pairwise_ok, failures }
}

/// Exterior facets lying in `{x_axis = value}`, with that coordinate deleted.
pub fn induced_facet_triangulation(t: &Triangulation, axis: usize, value: u8) -> Triangulation {
    let mut facets: Vec<BinarySimplex> =
        t.simplices().iter().flat_map(exterior_facets).filter(|f| f.axis == axis && f.value == value).map(|f| f.facet).collect();
    facets.sort();
    facets.dedup();
    Triangulation::new(t.dim() - 1, facets).expect("facets share dimension n - 1")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerturbationSummary {
    pub trials: usize,
    pub detected: usize,
}

/// Replaces one random member with a random `pool` simplex not already
/// present, `trials` times, and counts how often validation rejects the result.
pub fn perturbation_check(t: &Triangulation, pool: &[BinarySimplex], trials: usize, seed: u64) -> PerturbationSummary {
    let outside: Vec<&BinarySimplex> = pool.iter().filter(|s| !t.contains(s)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut detected = 0;
    for _ in 0..trials {
        let Some(replacement) = outside.choose(&mut rng) else { break };
        let victim = rng.gen_range(0..t.len());
        let mut members = t.simplices().to_vec();
        members[victim] = (*replacement).clone();
        let perturbed = Triangulation::new(t.dim(), members).expect("same dimension");
        if !validate(&perturbed, true).passed() {
            detected += 1;
        }
    }
    PerturbationSummary { trials, detected }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{corner_triangulation, standard_triangulation};

    fn s(text: &str) -> BinarySimplex {
        BinarySimplex::parse(text).unwrap()
    }

    #[test]
    fn volumes() {
        assert!(check_volume(&standard_triangulation(4).unwrap()));
        let corner = corner_triangulation(3).unwrap();
        let dets: Vec<i64> = corner.simplices().iter().map(|s| s.determinant().abs()).collect();
        let mut sorted = dets.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 1, 1, 1, 2]);
        assert!(check_volume(&corner));
        let mut members = standard_triangulation(3).unwrap().simplices().to_vec();
        members.pop();
        assert!(!check_volume(&Triangulation::new(3, members).unwrap()));
    }

    #[test]
    fn face_to_face_pairs() {
        let t2 = standard_triangulation(2).unwrap();
        assert!(face_to_face(&t2.simplices()[0], &t2.simplices()[1]));
        assert!(face_to_face(&s("000 100 010 001"), &s("100 010 001 111")));
        assert!(!face_to_face(&s("000 100 110 111"), &s("000 100 010 001")));
        // Disjoint and vertex-touching pairs.
        assert!(face_to_face(&s("000 100 010 001"), &s("111 011 101 110")));
        assert!(face_to_face(&s("00 10 01"), &s("10 11 01")));
    }

    /// The path simplex and the corner share only the edge {000, 100}, yet a
    /// point lies strictly inside both.
    #[test]
    fn overlapping_pair_has_common_interior_point() {
        let path = s("000 100 110 111");
        let corner = s("000 100 010 001");
        // (4, 2, 1)/8 has path barycentrics (1/2, 1/4, 1/8, 1/8) and corner (1/8, 1/2, 1/4, 1/8).
        let contains = |simplex: &BinarySimplex, p: [i64; 3], den: i64| {
            let normals = simplex.outward_normals().unwrap();
            normals.iter().all(|fnorm| {
                let facet = simplex.facet_vertices(fnorm.opposite_vertex_index);
                let offset: i64 = fnorm.normal.dot_mask(facet[0]) * den;
                let value: i64 = fnorm.normal.entries().iter().zip(p).map(|(a, b)| a * b).sum();
                value < offset
            })
        };
        assert!(contains(&path, [4, 2, 1], 8));
        assert!(contains(&corner, [4, 2, 1], 8));
        assert!(!face_to_face(&path, &corner));
    }

    #[test]
    fn validate_reports_every_problem() {
        let t = Triangulation::new(5, vec![crate::fixtures::r_simplex()]).unwrap();
        let report = validate(&t, true);
        assert!(report.failures.iter().any(|f| f.reason == FailureReason::Obtuse && f.simplices == vec![0]));
        assert!(!report.volume_ok);

        let mut members = standard_triangulation(3).unwrap().simplices().to_vec();
        members.push(members[0].clone());
        let dup = Triangulation::new(3, members).unwrap();
        let report = validate(&dup, true);
        assert!(!report.volume_ok);
        assert!(report.pairwise_ok);
        assert!(report.failures.iter().any(|f| f.reason == FailureReason::Duplicate));
    }

    #[test]
    fn induced_facets_of_standard_cube() {
        let t3 = standard_triangulation(3).unwrap();
        let t2 = standard_triangulation(2).unwrap().untagged();
        for axis in 1..=3 {
            for value in [0, 1] {
                assert_eq!(induced_facet_triangulation(&t3, axis, value), t2);
            }
        }
    }
}
