#![allow(clippy::needless_range_loop)]

//! Fixed-size integer linear algebra for edge matrices of binary simplices.
//!
//! All routines work on stack matrices of size `MAX_DIM` and only touch the
//! leading `n x n` block. Bareiss elimination keeps every intermediate value a
//! minor of the input, so the Hadamard bound documented on [`MAX_DIM`]
//! applies to every entry; products are formed in `i128` before the exact
//! division.

use super::mask::MAX_DIM;

pub(crate) type Mat = [[i64; MAX_DIM]; MAX_DIM];

pub(crate) const ZERO: Mat = [[0; MAX_DIM]; MAX_DIM];

/// Columns are `v_i - v_0` for `i = 1..=n`; row `r` is coordinate `x_{r+1}`.
pub(crate) fn edge_matrix(vertices: &[u16], n: usize) -> Mat {
    let mut m = ZERO;
    let base = vertices[0];
    for (c, &v) in vertices[1..].iter().enumerate() {
        for (r, row) in m.iter_mut().enumerate().take(n) {
            row[c] = ((v >> r) & 1) as i64 - ((base >> r) & 1) as i64;
        }
    }
    m
}

pub(crate) fn determinant(m: &Mat, n: usize) -> i64 {
    if n == 0 {
        return 1;
    }
    let mut a = *m;
    let mut sign = 1i64;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        let pivot = a[k][k] as i128;
        for i in k + 1..n {
            let lead = a[i][k] as i128;
            for j in k + 1..n {
                let num = a[i][j] as i128 * pivot - lead * a[k][j] as i128;
                a[i][j] = (num / prev) as i64;
            }
            a[i][k] = 0;
        }
        prev = pivot;
    }
    sign * a[n - 1][n - 1]
}

/// Adjugate `adj(m)`, satisfying `adj(m) * m = det(m) * I`.
///
/// Row `i` of the adjugate is `det(m)` times row `i` of `m^{-1}`, i.e. the
/// integer gradient of the barycentric coordinate of vertex `i + 1`.
pub(crate) fn adjugate(m: &Mat, n: usize) -> Mat {
    let mut adj = ZERO;
    if n == 1 {
        adj[0][0] = 1;
        return adj;
    }
    let mut minor = ZERO;
    for skip_row in 0..n {
        for skip_col in 0..n {
            for (r2, r) in (0..n).filter(|&r| r != skip_row).enumerate() {
                for (c2, c) in (0..n).filter(|&c| c != skip_col).enumerate() {
                    minor[r2][c2] = m[r][c];
                }
            }
            let cof = determinant(&minor, n - 1);
            let signed = if (skip_row + skip_col) % 2 == 0 { cof } else { -cof };
            adj[skip_col][skip_row] = signed;
        }
    }
    adj
}

/// Barycentric gradients `a_0..a_n` scaled by `det`: `a_i` is adjugate row
/// `i - 1` for `i >= 1` and `a_0 = -(a_1 + ... + a_n)`.
///
/// The outward normal of the facet opposite vertex `i` is `-sign(det) * a_i`,
/// so `a_i . a_j` has the sign of the outward-normal dot product.
pub(crate) fn scaled_gradients(adj: &Mat, n: usize) -> [[i64; MAX_DIM]; MAX_DIM + 1] {
    let mut g = [[0i64; MAX_DIM]; MAX_DIM + 1];
    for i in 0..n {
        g[i + 1][..n].copy_from_slice(&adj[i][..n]);
        for c in 0..n {
            g[0][c] -= adj[i][c];
        }
    }
    g
}

pub(crate) fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Sign pattern of a binary simplex given by raw vertex bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum QuickClass {
    Degenerate,
    Obtuse,
    Nonobtuse,
}

/// Allocation-free nonobtuseness test used by the enumerators.
pub(crate) fn quick_class(vertices: &[u16], n: usize) -> QuickClass {
    let m = edge_matrix(vertices, n);
    if determinant(&m, n) == 0 {
        return QuickClass::Degenerate;
    }
    let g = scaled_gradients(&adjugate(&m, n), n);
    for i in 0..=n {
        for j in i + 1..=n {
            if dot(&g[i][..n], &g[j][..n]) > 0 {
                return QuickClass::Obtuse;
            }
        }
    }
    QuickClass::Nonobtuse
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[i64]]) -> Mat {
        let mut m = ZERO;
        for (r, row) in rows.iter().enumerate() {
            m[r][..row.len()].copy_from_slice(row);
        }
        m
    }

    fn mul(a: &Mat, b: &Mat, n: usize) -> Mat {
        let mut out = ZERO;
        for i in 0..n {
            for j in 0..n {
                out[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        out
    }

    #[test]
    fn determinant_needs_pivoting() {
        let m = from_rows(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]);
        assert_eq!(determinant(&m, 3), -1);
        let m = from_rows(&[&[0, 0, 1, 1, 1], &[1, 1, 0, 1, 1], &[1, 1, 1, 0, 1], &[1, 1, 1, 1, 0], &[1, 0, 0, 0, 0]]);
        assert_eq!(determinant(&m, 5), -3);
        let m = from_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(determinant(&m, 2), 0);
    }

    #[test]
    fn adjugate_inverts_up_to_determinant() {
        let m = from_rows(&[&[0, 1, 1, 1, 1], &[1, 0, 0, 1, 1], &[1, 0, 1, 0, 1], &[1, 0, 1, 1, 0], &[1, 1, 0, 0, 0]]);
        let det = determinant(&m, 5);
        let prod = mul(&adjugate(&m, 5), &m, 5);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(prod[i][j], if i == j { det } else { 0 });
            }
        }
    }
}
