//! Reference 5-simplices from the n = 5 uniqueness argument.
//!
//! Each simplex has the origin as a vertex plus the five columns of a 0/1
//! matrix. `Q` is `P` with its second column complemented, and `R` is `Q` with
//! its third column complemented. Columns are returned in matrix order since
//! canonical vertex storage reorders them.

use crate::geometry::{BinarySimplex, VertexMask};

const P_COLUMNS: [&str; 5] = ["01111", "01110", "10110", "11010", "11100"];
const Q_COLUMNS: [&str; 5] = ["01111", "10001", "10110", "11010", "11100"];
const R_COLUMNS: [&str; 5] = ["01111", "10001", "01001", "11010", "11100"];

fn columns(text: &[&str; 5]) -> [VertexMask; 5] {
    text.map(|c| VertexMask::parse(c).expect("fixture column"))
}

fn simplex(text: &[&str; 5]) -> BinarySimplex {
    let mut vertices = vec![VertexMask::origin(5).expect("dim 5")];
    vertices.extend(columns(text));
    BinarySimplex::new(vertices).expect("fixture simplex")
}

pub fn p_columns() -> [VertexMask; 5] {
    columns(&P_COLUMNS)
}

pub fn q_columns() -> [VertexMask; 5] {
    columns(&Q_COLUMNS)
}

pub fn r_columns() -> [VertexMask; 5] {
    columns(&R_COLUMNS)
}

pub fn p_simplex() -> BinarySimplex {
    simplex(&P_COLUMNS)
}

pub fn q_simplex() -> BinarySimplex {
    simplex(&Q_COLUMNS)
}

pub fn r_simplex() -> BinarySimplex {
    simplex(&R_COLUMNS)
}
