use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::simplex::BinarySimplex;
use crate::error::{Error, Result};

/// Orthogonal projection of a vertex onto the affine hull of its opposite facet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub point: Vec<BigRational>,
    /// Barycentric coordinates of `point` with respect to the facet vertices,
    /// in the simplex's vertex order with the projected vertex skipped.
    pub barycentric: Vec<BigRational>,
    /// All barycentric coordinates nonnegative (closed facet).
    pub inside: bool,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Projects vertex `k` of `s` onto the hyperplane of the opposite facet.
///
/// Works purely with rationals: the projection is `v_k - t * nu` for the facet
/// normal `nu`, and the barycentric coordinates come from an exact solve of
/// `sum_j l_j f_j = p`, `sum_j l_j = 1`.
pub fn project_vertex_onto_facet(s: &BinarySimplex, k: usize) -> Result<Projection> {
    let n = s.dim();
    let normals = s.outward_normals()?;
    let nu = &normals[k].normal;
    let apex = s.vertex(k);
    let facet = s.facet_vertices(k);
    let t = BigRational::new(BigInt::from(nu.dot_diff(apex, facet[0])), BigInt::from(nu.dot(nu)));
    let point: Vec<BigRational> = (1..=n).map(|axis| q(apex.coord(axis) as i64) - &t * q(nu.entries()[axis - 1])).collect();

    // n coordinate equations plus the affine constraint, n unknowns.
    let mut rows: Vec<Vec<BigRational>> = (1..=n)
        .map(|axis| {
            let mut row: Vec<BigRational> = facet.iter().map(|f| q(f.coord(axis) as i64)).collect();
            row.push(point[axis - 1].clone());
            row
        })
        .collect();
    let mut affine = vec![q(1); n];
    affine.push(q(1));
    rows.push(affine);

    let barycentric = solve_consistent(rows, n).ok_or(Error::DegenerateSimplex)?;
    let inside = barycentric.iter().all(|l| !l.is_negative());
    Ok(Projection { point, barycentric, inside })
}

/// Gauss-Jordan on an augmented system with full column rank. Returns `None`
/// if the columns are dependent or the system is inconsistent.
pub(crate) fn solve_consistent(mut rows: Vec<Vec<BigRational>>, unknowns: usize) -> Option<Vec<BigRational>> {
    let mut pivot_row = 0;
    for col in 0..unknowns {
        let found = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(pivot_row, found);
        let inv = rows[pivot_row][col].recip();
        for x in rows[pivot_row].iter_mut() {
            *x *= &inv;
        }
        let pivot = rows[pivot_row].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == pivot_row || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot) {
                *x -= &factor * p;
            }
        }
        pivot_row += 1;
    }
    if rows[pivot_row..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    Some(rows[..unknowns].iter().map(|row| row[unknowns].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corner_vertex_projects_to_origin() {
        let k3 = BinarySimplex::parse("000 100 010 001").unwrap();
        let p = project_vertex_onto_facet(&k3, 1).unwrap();
        assert!(p.point.iter().all(|x| x.is_zero()));
        assert!(p.inside);
    }

    #[test]
    fn obtuse_tetrahedron_has_a_vertex_projecting_outside() {
        let obtuse = BinarySimplex::parse("000 100 010 111").unwrap();
        let outside = (0..4).filter(|&k| !project_vertex_onto_facet(&obtuse, k).unwrap().inside).count();
        assert!(outside >= 1);
    }

    #[test]
    fn degenerate_is_an_error() {
        let flat = BinarySimplex::parse("000 100 010 110").unwrap();
        assert_eq!(project_vertex_onto_facet(&flat, 0), Err(Error::DegenerateSimplex));
    }
}
