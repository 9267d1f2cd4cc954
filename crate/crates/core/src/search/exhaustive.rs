//! Backtracking search for complete nonobtuse triangulations.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::builders::Triangulation;
use crate::counting::BigCount;
use crate::error::{Error, Result};
use crate::geometry::{check_dim, BinarySimplex};
use crate::validator::{face_to_face, validate};

use super::neighbors::{nonobtuse_neighbors, NeighborQuery};
use super::strategy::{Frontier, FrontierPolicy, LexMin, OrbitRoots, RootStrategy};
use super::symmetry::{canonical_form, form_to_triangulation, CanonicalForm};
use super::Budget;

/// Largest dimension searched without [`Budget::Extended`].
pub const STANDARD_SEARCH_DIM: usize = 4;

/// Placements below this depth fan out into parallel tasks.
const PARALLEL_DEPTH: usize = 2;

#[derive(Clone)]
pub struct SearchOptions {
    pub budget: Budget,
    pub frontier: Arc<dyn FrontierPolicy>,
    pub roots: Arc<dyn RootStrategy>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { budget: Budget::Standard, frontier: Arc::new(LexMin), roots: Arc::new(OrbitRoots) }
    }
}

impl std::fmt::Debug for SearchOptions {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SearchOptions")
            .field("budget", &self.budget)
            .field("frontier", &self.frontier.name())
            .field("roots", &self.roots.name())
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Number of labeled complete nonobtuse triangulations.
    pub total_complete: BigCount,
    /// One canonical member per class, sorted by canonical form.
    pub class_representatives: Vec<Triangulation>,
    pub classes: BigCount,
}

#[derive(Clone)]
struct State {
    target: u128,
    volume: u128,
    placed: Vec<BinarySimplex>,
    frontier: Frontier,
}

impl State {
    fn new(n: usize) -> Self {
        let target = (1..=n as u128).product();
        Self { target, volume: 0, placed: Vec::new(), frontier: Frontier::new() }
    }

    fn place(&mut self, s: BinarySimplex) -> Result<()> {
        self.volume += s.determinant().unsigned_abs() as u128;
        let exterior: Vec<usize> = s.exterior_facet_planes().into_iter().map(|(_, _, apex)| apex).collect();
        for k in 0..=s.dim() {
            if exterior.contains(&k) {
                continue;
            }
            let key = s.facet_vertices(k);
            if self.frontier.remove(&key).is_none() {
                self.frontier.insert(key, NeighborQuery::across_facet(&s, k)?);
            }
        }
        self.placed.push(s);
        Ok(())
    }

    fn admits(&self, s: &BinarySimplex) -> bool {
        !self.placed.contains(s)
            && self.volume + s.determinant().unsigned_abs() as u128 <= self.target
            && self.placed.iter().all(|p| face_to_face(p, s))
    }

    fn finish(&self) -> Option<Triangulation> {
        let t = Triangulation::new(self.placed[0].dim(), self.placed.clone()).ok()?;
        validate(&t, true).passed().then_some(t)
    }
}

fn extend(state: State, policy: &dyn FrontierPolicy, depth: usize) -> Vec<Triangulation> {
    if state.volume == state.target {
        return state.finish().into_iter().collect();
    }
    let Some(query) = policy.select(&state.frontier) else {
        return Vec::new();
    };
    let children: Vec<State> = nonobtuse_neighbors(query)
        .into_iter()
        .filter(|s| state.admits(s))
        .filter_map(|s| {
            let mut next = state.clone();
            next.place(s).ok()?;
            Some(next)
        })
        .collect();
    if depth < PARALLEL_DEPTH {
        children.into_par_iter().flat_map_iter(|c| extend(c, policy, depth + 1)).collect()
    } else {
        children.into_iter().flat_map(|c| extend(c, policy, depth + 1)).collect()
    }
}

/// All complete nonobtuse triangulations containing every seed simplex,
/// sorted. Seeds must be nonobtuse, pairwise face-to-face and of one
/// dimension; otherwise the result is empty.
pub fn complete_from(seeds: &[BinarySimplex], policy: &dyn FrontierPolicy) -> Result<Vec<Triangulation>> {
    let Some(first) = seeds.first() else {
        return Err(Error::InvalidQuery("at least one seed simplex is required"));
    };
    let n = first.dim();
    check_dim(n, 1)?;
    let mut state = State::new(n);
    for s in seeds {
        if s.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: s.dim() });
        }
        if !s.is_nonobtuse() || !state.admits(s) {
            return Ok(Vec::new());
        }
        state.place(s.clone())?;
    }
    let mut out = extend(state, policy, 0);
    out.sort_by(|a, b| a.simplices().cmp(b.simplices()));
    out.dedup();
    Ok(out)
}

/// Every complete nonobtuse binary triangulation of `I^n`, counted labeled
/// and up to the symmetries of the cube.
pub fn exhaustive_search(n: usize, options: &SearchOptions) -> Result<SearchOutcome> {
    check_dim(n, 1)?;
    if n > STANDARD_SEARCH_DIM && options.budget != Budget::Extended {
        return Err(Error::BudgetExceeded { what: "exhaustive search", dim: n });
    }
    let roots = options.roots.roots(n)?;
    let per_root: Vec<(BigRational, Vec<Triangulation>)> = roots
        .par_iter()
        .map(|root| {
            let found = complete_from(std::slice::from_ref(&root.simplex), options.frontier.as_ref())?;
            let weight = found.iter().fold(BigRational::zero(), |acc, t| acc + options.roots.completion_weight(root, t));
            Ok((weight, found))
        })
        .collect::<Result<_>>()?;

    let mut total = BigRational::zero();
    let mut forms: BTreeSet<CanonicalForm> = BTreeSet::new();
    for (weight, found) in per_root {
        total += weight;
        forms.extend(found.par_iter().map(canonical_form).collect::<Vec<_>>());
    }
    assert!(total.denom().is_one(), "root weights must sum to an integer, got {total}");
    let total_complete = total.numer().to_biguint().expect("nonnegative total");
    let class_representatives: Vec<Triangulation> = forms.iter().map(form_to_triangulation).collect();
    Ok(SearchOutcome { total_complete, classes: BigCount::from(class_representatives.len()), class_representatives })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{cube_corner, standard_triangulation};
    use crate::search::strategy::{Anchored, LexMax, Unreduced};

    #[test]
    fn low_dimensions() {
        let one = exhaustive_search(1, &SearchOptions::default()).unwrap();
        assert_eq!((one.total_complete, one.classes), (BigCount::from(1u8), BigCount::from(1u8)));
        let two = exhaustive_search(2, &SearchOptions::default()).unwrap();
        // The two diagonals of the square.
        assert_eq!((two.total_complete, two.classes), (BigCount::from(2u8), BigCount::from(1u8)));
    }

    #[test]
    fn strategies_agree_in_dimension_three() {
        let mut seen = Vec::new();
        for roots in [Arc::new(OrbitRoots) as Arc<dyn RootStrategy>, Arc::new(Unreduced), Arc::new(Anchored)] {
            for frontier in [Arc::new(LexMin) as Arc<dyn FrontierPolicy>, Arc::new(LexMax)] {
                let options = SearchOptions { budget: Budget::Standard, frontier, roots: roots.clone() };
                seen.push(exhaustive_search(3, &options).unwrap());
            }
        }
        assert!(seen.windows(2).all(|w| w[0] == w[1]));
        assert_eq!(seen[0].total_complete, BigCount::from(6u8));
        assert_eq!(seen[0].classes, BigCount::from(2u8));
    }

    #[test]
    fn corner_seed_completes_to_the_corner_family() {
        let found = complete_from(&[cube_corner(3).unwrap()], &LexMin).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].len(), 5);
    }

    #[test]
    fn path_seed_completes_uniquely() {
        let t = standard_triangulation(3).unwrap();
        let found = complete_from(&t.simplices()[..1], &LexMin).unwrap();
        assert_eq!(found, vec![t.untagged()]);
    }

    #[test]
    fn search_budget() {
        assert!(matches!(exhaustive_search(5, &SearchOptions::default()), Err(Error::BudgetExceeded { .. })));
    }
}
