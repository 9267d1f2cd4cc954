//! Named strategy registries: triangulation families, counters, frontier
//! policies and root strategies, selectable at runtime by name.

use std::sync::Arc;

use crate::builders::{corner_triangulation, standard_triangulation, Triangulation};
use crate::counting::{count_ceiling, count_closed_form, count_recurrence, BigCount};
use crate::error::{Error, Result};
use crate::search::{
    enumerate_simplices, Anchored, Budget, FrontierPolicy, LexMax, LexMin, OrbitRoots, RootStrategy, SimplexFilter, Unreduced,
};

/// Anything that can be looked up by name.
pub trait Named {
    fn name(&self) -> &'static str;
}

impl Named for dyn FrontierPolicy {
    fn name(&self) -> &'static str {
        FrontierPolicy::name(self)
    }
}

impl Named for dyn RootStrategy {
    fn name(&self) -> &'static str {
        RootStrategy::name(self)
    }
}

pub struct Registry<T: ?Sized> {
    kind: &'static str,
    entries: Vec<Arc<T>>,
}

impl<T: ?Sized + Named> Registry<T> {
    pub fn new(kind: &'static str) -> Self {
        Self { kind, entries: Vec::new() }
    }

    /// Adds `entry`, replacing any entry of the same name.
    pub fn register(&mut self, entry: Arc<T>) -> &mut Self {
        self.entries.retain(|e| e.name() != entry.name());
        self.entries.push(entry);
        self
    }

    pub fn get(&self, name: &str) -> Result<Arc<T>> {
        self.entries.iter().find(|e| e.name() == name).cloned().ok_or_else(|| Error::UnknownStrategy {
            kind: self.kind,
            name: name.to_string(),
            available: self.names().join(", "),
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }
}

pub trait TriangulationFamily: Send + Sync {
    fn name(&self) -> &'static str;
    fn min_dim(&self) -> usize;
    fn build(&self, n: usize) -> Result<Triangulation>;
}

impl Named for dyn TriangulationFamily {
    fn name(&self) -> &'static str {
        TriangulationFamily::name(self)
    }
}

pub struct StandardFamily;

impl TriangulationFamily for StandardFamily {
    fn name(&self) -> &'static str {
        "standard"
    }

    fn min_dim(&self) -> usize {
        1
    }

    fn build(&self, n: usize) -> Result<Triangulation> {
        standard_triangulation(n)
    }
}

pub struct CornerFamily;

impl TriangulationFamily for CornerFamily {
    fn name(&self) -> &'static str {
        "corner"
    }

    fn min_dim(&self) -> usize {
        2
    }

    fn build(&self, n: usize) -> Result<Triangulation> {
        corner_triangulation(n)
    }
}

/// An exact count indexed by dimension. `values` returns every independent
/// evaluation; they must agree.
pub trait Counter: Send + Sync {
    fn name(&self) -> &'static str;
    fn values(&self, n: usize, budget: Budget) -> Result<Vec<(&'static str, BigCount)>>;
}

impl Named for dyn Counter {
    fn name(&self) -> &'static str {
        Counter::name(self)
    }
}

/// Largest `n` accepted for the closed-form counts.
pub const MAX_COUNT_DIM: usize = 1000;

/// Size of the corner family.
pub struct CornerCount;

impl Counter for CornerCount {
    fn name(&self) -> &'static str {
        "N"
    }

    fn values(&self, n: usize, _budget: Budget) -> Result<Vec<(&'static str, BigCount)>> {
        if !(1..=MAX_COUNT_DIM).contains(&n) {
            return Err(Error::DimensionOutOfRange { dim: n, min: 1, max: MAX_COUNT_DIM });
        }
        Ok(vec![("recurrence", count_recurrence(n)), ("closed form", count_closed_form(n)), ("ceiling", count_ceiling(n))])
    }
}

/// Binary simplices passing a filter.
pub struct SimplexCount {
    name: &'static str,
    filter: SimplexFilter,
}

impl SimplexCount {
    pub const fn new(name: &'static str, filter: SimplexFilter) -> Self {
        Self { name, filter }
    }
}

impl Counter for SimplexCount {
    fn name(&self) -> &'static str {
        self.name
    }

    fn values(&self, n: usize, budget: Budget) -> Result<Vec<(&'static str, BigCount)>> {
        Ok(vec![("enumeration", enumerate_simplices(n, self.filter, budget)?)])
    }
}

pub fn families() -> Registry<dyn TriangulationFamily> {
    let mut r: Registry<dyn TriangulationFamily> = Registry::new("family");
    r.register(Arc::new(StandardFamily)).register(Arc::new(CornerFamily));
    r
}

pub fn counters() -> Registry<dyn Counter> {
    let mut r: Registry<dyn Counter> = Registry::new("count");
    r.register(Arc::new(CornerCount))
        .register(Arc::new(SimplexCount::new("sigma", SimplexFilter::All)))
        .register(Arc::new(SimplexCount::new("beta", SimplexFilter::Nondegenerate)))
        .register(Arc::new(SimplexCount::new("nu", SimplexFilter::Nonobtuse)));
    r
}

pub fn frontier_policies() -> Registry<dyn FrontierPolicy> {
    let mut r: Registry<dyn FrontierPolicy> = Registry::new("frontier policy");
    r.register(Arc::new(LexMin)).register(Arc::new(LexMax));
    r
}

pub fn root_strategies() -> Registry<dyn RootStrategy> {
    let mut r: Registry<dyn RootStrategy> = Registry::new("root strategy");
    r.register(Arc::new(OrbitRoots)).register(Arc::new(Anchored)).register(Arc::new(Unreduced));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        assert_eq!(families().names(), ["standard", "corner"]);
        assert_eq!(counters().names(), ["N", "sigma", "beta", "nu"]);
        assert_eq!(families().get("corner").unwrap().build(4).unwrap().len(), 18);
        let err = families().get("kuhn").err().unwrap();
        assert!(err.to_string().contains("standard, corner"));
    }

    #[test]
    fn counter_values() {
        let nu = counters().get("nu").unwrap().values(3, Budget::Standard).unwrap();
        assert_eq!(nu, vec![("enumeration", BigCount::from(34u8))]);
        let n = counters().get("N").unwrap().values(9, Budget::Standard).unwrap();
        assert!(n.iter().all(|(_, v)| *v == BigCount::from(260651u32)));
    }

    #[test]
    fn registration_replaces_by_name() {
        let mut r = frontier_policies();
        r.register(Arc::new(LexMin));
        assert_eq!(r.names(), ["lex-max", "lex-min"]);
    }
}
