use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use nonobtuse::builders::{antipodal, corner_triangulation, cube_corner, standard_triangulation, Triangulation};
use nonobtuse::classification::classify;
use nonobtuse::geometry::{BinarySimplex, IntVector, VertexMask};
use nonobtuse::registry::{frontier_policies, root_strategies};
use nonobtuse::search::{
    apex_for_direction, are_equivalent, canonical_form, collect_simplices, complete_from, exhaustive_search, nonobtuse_neighbors,
    orbit, Budget, LexMin, NeighborQuery, SearchOptions, SignedPermutation, SimplexFilter,
};
use nonobtuse::validator::induced_facet_triangulation;

fn nonobtuse(n: usize) -> Vec<BinarySimplex> {
    collect_simplices(n, SimplexFilter::Nonobtuse, Budget::Standard).unwrap()
}

fn interior_queries(s: &BinarySimplex) -> Vec<NeighborQuery> {
    let exterior: Vec<usize> = classify(s).exterior_facets.iter().map(|f| f.opposite_vertex_index).collect();
    (0..=s.dim()).filter(|k| !exterior.contains(k)).map(|k| NeighborQuery::across_facet(s, k).unwrap()).collect()
}

#[test]
fn at_most_one_neighbor_per_side_across_nowhere_zero_normals() {
    for n in 2..=4 {
        for s in nonobtuse(n) {
            for q in interior_queries(&s).into_iter().filter(|q| !q.normal().has_zero_entry()) {
                let far = nonobtuse_neighbors(&q);
                let near = nonobtuse_neighbors(&q.flipped());
                assert!(far.len() <= 1 && near.len() <= 1, "{s}");
                assert_eq!(near, vec![s.clone()]);
                if let ([a], [b]) = (far.as_slice(), near.as_slice()) {
                    let apex_a = a.vertices().iter().find(|v| !q.facet().contains(v)).unwrap();
                    let apex_b = b.vertices().iter().find(|v| !q.facet().contains(v)).unwrap();
                    assert_eq!(apex_a.complement(), *apex_b);
                }
            }
        }
    }
}

/// Exact test of whether `v + t u` stays in the cube for some `t != 0`.
fn line_leaves_vertex(v: VertexMask, u: &[i64]) -> bool {
    let mut lo = BigRational::from_integer(BigInt::from(-1_000_000));
    let mut hi = BigRational::from_integer(BigInt::from(1_000_000));
    for (j, &uj) in u.iter().enumerate() {
        let x = BigRational::from_integer(BigInt::from(v.coord(j + 1)));
        let uj = BigRational::from_integer(BigInt::from(uj));
        let a = -&x / &uj;
        let b = (BigRational::one() - &x) / &uj;
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        lo = lo.max(a);
        hi = hi.min(b);
    }
    hi > lo
}

#[test]
fn exactly_two_antipodal_vertices_see_the_cube_along_a_nowhere_zero_line() {
    let values = [-3i64, -2, -1, 1, 2, 3];
    for n in 1..=4 {
        for u in std::iter::repeat_n(values, n).multi_cartesian_product() {
            let hits: Vec<VertexMask> =
                (0..1u32 << n).map(|b| VertexMask::new(b, n).unwrap()).filter(|&v| line_leaves_vertex(v, &u)).collect();
            let apex = apex_for_direction(&IntVector::new(u.clone())).unwrap();
            let mut expected = vec![apex, apex.complement()];
            expected.sort();
            assert_eq!(hits, expected, "u = {u:?}");
        }
    }
    assert!(apex_for_direction(&IntVector::new(vec![1, 0, -1])).is_none());
}

#[test]
fn path_simplex_facets_through_the_diagonal_meet_path_simplices() {
    let t = standard_triangulation(4).unwrap();
    let s = &t.simplices()[0];
    let diagonal = [VertexMask::origin(4).unwrap(), VertexMask::all_ones(4).unwrap()];
    for q in interior_queries(s) {
        if !diagonal.iter().all(|v| q.facet().contains(v)) {
            continue;
        }
        for side in [q.clone(), q.flipped()] {
            let found = nonobtuse_neighbors(&side);
            assert_eq!(found.len(), 1);
            assert!(classify(&found[0]).is_path);
        }
    }
}

#[test]
fn corner_facet_leads_to_antipodal_simplex() {
    let k = cube_corner(3).unwrap();
    let q = NeighborQuery::across_facet(&k, 0).unwrap();
    assert_eq!(nonobtuse_neighbors(&q), vec![antipodal(3).unwrap()]);
}

#[test]
fn any_path_seed_completes_to_its_standard_triangulation() {
    for n in 2..=4 {
        let standard = standard_triangulation(n).unwrap();
        for seed in nonobtuse(n).into_iter().filter(|s| classify(s).is_path) {
            let found = complete_from(std::slice::from_ref(&seed), &LexMin).unwrap();
            assert_eq!(found.len(), 1, "{seed}");
            let t = &found[0];
            assert!(t.contains(&seed));
            assert!(are_equivalent(t, &standard));
            let diagonal = seed.vertices().iter().find(|v| seed.contains(v.complement())).unwrap();
            assert!(t.simplices().iter().all(|s| s.contains(*diagonal) && s.contains(diagonal.complement())));
        }
    }
}

fn labeled_triangulations(n: usize) -> Vec<Triangulation> {
    let outcome = exhaustive_search(n, &SearchOptions::default()).unwrap();
    outcome.class_representatives.iter().flat_map(orbit).collect()
}

#[test]
fn corners_and_antipodal_simplices_come_in_pairs() {
    for n in 3..=4 {
        for t in labeled_triangulations(n) {
            for w in 0..1u32 << n {
                let w = VertexMask::new(w, n).unwrap();
                let neighbors: Vec<VertexMask> =
                    (1..=n).map(|j| VertexMask::new((w.bits() ^ 1 << (j - 1)) as u32, n).unwrap()).collect();
                let mut corner = neighbors.clone();
                corner.push(w);
                let mut far = neighbors;
                far.push(w.complement());
                let has_corner = t.contains(&BinarySimplex::new(corner).unwrap());
                let has_far = t.contains(&BinarySimplex::new(far).unwrap());
                assert_eq!(has_corner, has_far, "vertex {w}");
            }
        }
    }
}

#[test]
fn cube_facets_of_four_dimensional_triangulations() {
    let all = labeled_triangulations(4);
    assert_eq!(all.len(), 24);
    for t in &all {
        for axis in 1..=4 {
            for value in [0, 1] {
                let facet = induced_facet_triangulation(t, axis, value);
                let records: Vec<_> = facet.simplices().iter().map(classify).collect();
                let paths = facet.len() == 6 && records.iter().all(|r| r.is_path);
                let corners = facet.len() == 5
                    && records.iter().filter(|r| r.is_cube_corner).count() == 4
                    && records.iter().filter(|r| r.angle.tag == nonobtuse::geometry::AngleTag::Acute).count() == 1;
                assert!(paths || corners);
            }
        }
    }
}

#[test]
fn search_is_deterministic_across_strategies() {
    let base = exhaustive_search(4, &SearchOptions::default()).unwrap();
    assert_eq!(base, exhaustive_search(4, &SearchOptions::default()).unwrap());
    let frontiers = frontier_policies();
    let roots = root_strategies();
    for (f, r) in [("lex-max", "orbit"), ("lex-min", "anchored"), ("lex-max", "anchored")] {
        let options =
            SearchOptions { budget: Budget::Standard, frontier: frontiers.get(f).unwrap(), roots: roots.get(r).unwrap() };
        assert_eq!(exhaustive_search(4, &options).unwrap(), base, "{f} / {r}");
    }
    let mut reps = base.class_representatives.clone();
    reps.sort_by_key(|t| t.len());
    assert_eq!(reps.iter().map(Triangulation::len).collect::<Vec<_>>(), vec![18, 24]);
}

#[test]
fn unreduced_search_agrees_in_dimension_three() {
    let options = SearchOptions { roots: Arc::new(nonobtuse::search::Unreduced), ..SearchOptions::default() };
    assert_eq!(exhaustive_search(3, &options).unwrap(), exhaustive_search(3, &SearchOptions::default()).unwrap());
}

#[test]
fn equivalence_examples() {
    let t = standard_triangulation(3).unwrap();
    let flip = SignedPermutation::new(vec![0, 1, 2], 0b001).unwrap();
    assert!(are_equivalent(&t, &flip.apply_triangulation(&t)));
    assert!(!are_equivalent(&t, &corner_triangulation(3).unwrap()));
}

fn arb_group_element(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), 0u16..(1 << n))
        .prop_map(|(perm, flips)| SignedPermutation::new(perm, flips).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn canonical_form_is_invariant(g in arb_group_element(4), corner in any::<bool>()) {
        let t = if corner { corner_triangulation(4).unwrap() } else { standard_triangulation(4).unwrap() };
        prop_assert_eq!(canonical_form(&g.apply_triangulation(&t)), canonical_form(&t));
    }
}
