//! Closed subsets of ℝ made of finitely many closed intervals and points,
//! used to describe supports.

use core::fmt;

use alloc::vec::Vec;

use crate::mset::{merge_intervals, Bound, Interval};
use crate::scalar::Rational;

/// Sorted, disjoint closed components; a point is a degenerate interval.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ClosedSet {
    components: Vec<Interval>,
}

impl ClosedSet {
    pub fn empty() -> Self {
        ClosedSet::default()
    }

    pub fn real_line() -> Self {
        ClosedSet { components: alloc::vec![Interval::real_line()] }
    }

    /// Closure of the union; interval endpoints become closed when finite.
    pub fn from_components(parts: impl IntoIterator<Item = Interval>) -> Self {
        let closed: Vec<Interval> =
            parts.into_iter().filter(|i| !i.is_empty()).map(|i| Interval::new(i.lo, i.hi, true, true)).collect();
        ClosedSet { components: merge_intervals(&closed) }
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    /// Components are connected, so each must fit inside one component of `other`.
    pub fn is_subset(&self, other: &ClosedSet) -> bool {
        self.components.iter().all(|c| other.components.iter().any(|o| c.is_subset(o)))
    }

    pub fn intersection(&self, other: &ClosedSet) -> ClosedSet {
        let mut parts = Vec::new();
        for a in &self.components {
            for b in &other.components {
                let lo = core::cmp::max(&a.lo, &b.lo).clone();
                let hi = core::cmp::min(&a.hi, &b.hi).clone();
                let i = Interval::new(lo, hi, true, true);
                if !i.is_empty() {
                    parts.push(i);
                }
            }
        }
        ClosedSet::from_components(parts)
    }
}

impl fmt::Display for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("empty");
        }
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                f.write_str(" U ")?;
            }
            match (&c.lo, &c.hi) {
                (Bound::NegInf, Bound::PosInf) => f.write_str("R")?,
                _ => write!(f, "{c}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn ray(a: i64) -> Interval {
        Interval::new(Bound::Finite(int(a)), Bound::PosInf, true, false)
    }

    #[test]
    fn subset_and_intersection() {
        let a = ClosedSet::from_components([ray(0)]);
        let b = ClosedSet::from_components([Interval::closed(int(-1), int(2))]);
        let ab = a.intersection(&b);
        assert_eq!(ab, ClosedSet::from_components([Interval::closed(int(0), int(2))]));
        assert!(ab.is_subset(&a) && ab.is_subset(&b));
        assert!(!a.is_subset(&b));
        let p = ClosedSet::from_components([Interval::point(int(3))]);
        assert!(p.is_subset(&a));
        assert!(ClosedSet::empty().is_subset(&p));
    }

    #[test]
    fn touching_closures_merge() {
        let s = ClosedSet::from_components([
            Interval::open(Bound::Finite(int(0)), Bound::Finite(int(1))),
            Interval::open(Bound::Finite(int(1)), Bound::Finite(int(2))),
        ]);
        assert_eq!(s.components().len(), 1);
        assert!(s.contains(&int(1)));
    }
}
