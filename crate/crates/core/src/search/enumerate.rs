//! Exhaustive enumeration of binary simplices in lexicographic order.

use rayon::prelude::*;

use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::geometry::{check_dim, quick_class, BinarySimplex, QuickClass, VertexMask, MAX_DIM};

use super::Budget;

/// Which vertex subsets an enumeration keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimplexFilter {
    All,
    Nondegenerate,
    Nonobtuse,
}

impl SimplexFilter {
    fn keeps(self, bits: &[u16], n: usize) -> bool {
        match self {
            SimplexFilter::All => true,
            SimplexFilter::Nondegenerate => quick_class(bits, n) != QuickClass::Degenerate,
            SimplexFilter::Nonobtuse => quick_class(bits, n) == QuickClass::Nonobtuse,
        }
    }
}

/// Largest dimension enumerated without [`Budget::Extended`].
pub const STANDARD_ENUMERATION_DIM: usize = 5;

fn check_enumeration(n: usize, budget: Budget) -> Result<()> {
    check_dim(n, 1)?;
    if n > STANDARD_ENUMERATION_DIM && budget != Budget::Extended {
        return Err(Error::BudgetExceeded { what: "simplex enumeration", dim: n });
    }
    Ok(())
}

/// Advances `idx` (strictly increasing, entries below `limit`) to the next
/// combination in lexicographic order, returning false when exhausted.
fn next_combination(idx: &mut [u16], limit: u16) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < limit - (k - i) as u16 {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Calls `f` on every `n`-subset of `first+1 .. 2^n`, prefixed with `first`.
fn for_each_with_first(n: usize, first: u16, mut f: impl FnMut(&[u16])) {
    let limit = 1u32 << n;
    if (first as u32) + (n as u32) >= limit {
        return;
    }
    let mut buf = [0u16; MAX_DIM + 1];
    buf[0] = first;
    for j in 0..n {
        buf[j + 1] = first + 1 + j as u16;
    }
    loop {
        f(&buf[..=n]);
        if !next_combination(&mut buf[1..=n], limit as u16) {
            break;
        }
    }
}

/// Number of `(n+1)`-subsets of cube vertices passing `filter`.
///
/// The subset space is split by smallest vertex and counted in parallel.
pub fn enumerate_simplices(n: usize, filter: SimplexFilter, budget: Budget) -> Result<BigCount> {
    check_enumeration(n, budget)?;
    let total: u64 = (0..1u16 << n)
        .into_par_iter()
        .map(|first| {
            let mut count = 0u64;
            for_each_with_first(n, first, |bits| {
                if filter.keeps(bits, n) {
                    count += 1;
                }
            });
            count
        })
        .sum();
    Ok(BigCount::from(total))
}

/// Streams the members passing `filter` in lexicographic order of their
/// sorted vertex bit lists.
pub fn for_each_simplex(n: usize, filter: SimplexFilter, budget: Budget, mut f: impl FnMut(BinarySimplex)) -> Result<()> {
    check_enumeration(n, budget)?;
    for first in 0..1u16 << n {
        for_each_with_first(n, first, |bits| {
            if filter.keeps(bits, n) {
                f(to_simplex(bits, n));
            }
        });
    }
    Ok(())
}

/// All members passing `filter`, in the same order as [`for_each_simplex`].
pub fn collect_simplices(n: usize, filter: SimplexFilter, budget: Budget) -> Result<Vec<BinarySimplex>> {
    check_enumeration(n, budget)?;
    let chunks: Vec<Vec<BinarySimplex>> = (0..1u16 << n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            for_each_with_first(n, first, |bits| {
                if filter.keeps(bits, n) {
                    out.push(to_simplex(bits, n));
                }
            });
            out
        })
        .collect();
    Ok(chunks.concat())
}

/// Nonobtuse simplices having the origin as a vertex, in lexicographic order.
pub fn nonobtuse_at_origin(n: usize) -> Result<Vec<BinarySimplex>> {
    check_dim(n, 1)?;
    let mut out = Vec::new();
    for_each_with_first(n, 0, |bits| {
        if SimplexFilter::Nonobtuse.keeps(bits, n) {
            out.push(to_simplex(bits, n));
        }
    });
    Ok(out)
}

fn to_simplex(bits: &[u16], n: usize) -> BinarySimplex {
    BinarySimplex::from_sorted_unchecked(n, bits.iter().map(|&b| VertexMask::from_raw(b, n)).collect())
}
