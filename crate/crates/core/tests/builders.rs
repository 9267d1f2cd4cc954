use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use nonobtuse::builders::{census, corner_triangulation, cube_corner, standard_triangulation, Tag};
use nonobtuse::classification::classify;
use nonobtuse::counting::{count_ceiling, count_closed_form, count_recurrence};
use nonobtuse::geometry::VertexMask;

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

#[test]
fn sizes() {
    for n in 1..=7 {
        assert_eq!(BigUint::from(standard_triangulation(n).unwrap().len()), factorial(n));
    }
    for n in 2..=7 {
        assert_eq!(BigUint::from(corner_triangulation(n).unwrap().len()), count_recurrence(n));
    }
    assert_eq!(corner_triangulation(2).unwrap().len(), 2);
    let (square_corner, square_standard) = (corner_triangulation(2).unwrap(), standard_triangulation(2).unwrap());
    assert_ne!(square_corner.untagged(), square_standard.untagged());
    assert!(nonobtuse::search::are_equivalent(&square_corner, &square_standard));
    assert!(corner_triangulation(1).is_err());
    assert!(standard_triangulation(0).is_err());
    assert!(standard_triangulation(13).is_err());
}

#[test]
fn standard_members_are_path_simplices_on_the_main_diagonal() {
    for n in 1..=5 {
        let t = standard_triangulation(n).unwrap();
        let top = VertexMask::all_ones(n).unwrap();
        for s in t.simplices() {
            assert!(s.contains(VertexMask::origin(n).unwrap()) && s.contains(top));
            assert!(s.is_nonobtuse());
            assert!(n == 1 || classify(s).is_path);
        }
        assert!(t.tags().unwrap().iter().all(|&tag| tag == Tag::PathSimplex));
    }
}

#[test]
fn corner_members_are_nonobtuse_and_share_the_top_vertex() {
    for n in 2..=6 {
        let t = corner_triangulation(n).unwrap();
        let top = VertexMask::all_ones(n).unwrap();
        let corner = cube_corner(n).unwrap();
        for s in t.simplices() {
            assert!(s.is_nonobtuse(), "{s}");
            assert!(s.contains(top) || *s == corner);
        }
    }
}

#[test]
fn census_values() {
    let c4 = census(&corner_triangulation(4).unwrap()).unwrap();
    assert_eq!(c4.values().copied().collect::<Vec<_>>(), vec![1, 1, 4, 12]);
    let c5 = census(&corner_triangulation(5).unwrap()).unwrap();
    assert_eq!(c5[&Tag::Antipodal(3)], 60);
    assert_eq!(c5.values().sum::<usize>(), 87);
    let c3 = census(&corner_triangulation(3).unwrap()).unwrap();
    assert_eq!(c3[&Tag::Antipodal(1)], 3);
    assert!(census(&corner_triangulation(3).unwrap().untagged()).is_err());
}

#[test]
fn formulas_agree() {
    for n in 2..=40 {
        let r = count_recurrence(n);
        assert_eq!(r, count_closed_form(n), "n = {n}");
        assert_eq!(r, count_ceiling(n), "n = {n}");
    }
    assert_eq!(count_recurrence(1), BigUint::one());
    assert_eq!(count_closed_form(2), BigUint::from(2u8));
}

/// Exact bounds `E_m <= e <= E_m + 1/(m! m)` with `E_m = sum_{k<=m} 1/k!`.
fn e_bounds(m: usize) -> (BigRational, BigRational) {
    let mut sum = BigRational::zero();
    let mut term = BigRational::one();
    for k in 0..=m {
        if k > 0 {
            term /= BigInt::from(k);
        }
        sum += &term;
    }
    let tail = &term / BigInt::from(m);
    (sum.clone(), sum + tail)
}

#[test]
fn count_exceeds_the_scaled_constant_by_less_than_one() {
    let (lo, hi) = e_bounds(40);
    let two = BigRational::from_integer(BigInt::from(2));
    for n in 2..=20 {
        let scale = BigRational::from_integer(BigInt::from(factorial(n)));
        let count = BigRational::from_integer(BigInt::from(count_recurrence(n)));
        let gap_lo = &count - (&hi - &two) * &scale;
        let gap_hi = &count - (&lo - &two) * &scale;
        assert!(gap_lo > BigRational::zero(), "n = {n}");
        assert!(gap_hi < BigRational::one(), "n = {n}");
    }
}
