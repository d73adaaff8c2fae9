//! Finitely described subsets of ℝ: unions of intervals with rational (or
//! infinite) endpoints, corrected by finitely many added and removed points.
//!
//! An [`MSet`] selects, at every singular point, which side of the
//! one-sided product is used by `*_M`.

use core::cmp::Ordering;
use core::fmt;

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::scalar::Rational;

/// Interval endpoint.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Bound::Finite(r) => Some(r),
            _ => None,
        }
    }
}

impl PartialOrd for Bound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bound {
    fn cmp(&self, other: &Self) -> Ordering {
        use Bound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::NegInf => f.write_str("-inf"),
            Bound::PosInf => f.write_str("inf"),
            Bound::Finite(r) => write!(f, "{r}"),
        }
    }
}

/// A generalized interval. Infinite endpoints are always treated as open.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Interval {
    pub lo: Bound,
    pub hi: Bound,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: Bound, hi: Bound, lo_closed: bool, hi_closed: bool) -> Self {
        let lo_closed = lo_closed && matches!(lo, Bound::Finite(_));
        let hi_closed = hi_closed && matches!(hi, Bound::Finite(_));
        Interval { lo, hi, lo_closed, hi_closed }
    }

    pub fn open(lo: Bound, hi: Bound) -> Self {
        Interval::new(lo, hi, false, false)
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval::new(Bound::Finite(lo), Bound::Finite(hi), true, true)
    }

    pub fn real_line() -> Self {
        Interval::open(Bound::NegInf, Bound::PosInf)
    }

    pub fn point(p: Rational) -> Self {
        Interval::closed(p.clone(), p)
    }

    pub fn is_empty(&self) -> bool {
        match self.lo.cmp(&self.hi) {
            Ordering::Greater => true,
            Ordering::Equal => !(self.lo_closed && self.hi_closed),
            Ordering::Less => false,
        }
    }

    pub fn contains(&self, x: &Rational) -> bool {
        let lo_ok = match &self.lo {
            Bound::NegInf => true,
            Bound::PosInf => false,
            Bound::Finite(a) => a < x || (self.lo_closed && a == x),
        };
        let hi_ok = match &self.hi {
            Bound::PosInf => true,
            Bound::NegInf => false,
            Bound::Finite(b) => x < b || (self.hi_closed && b == x),
        };
        lo_ok && hi_ok
    }

    /// Every point of `self` lies in `other`.
    pub fn is_subset(&self, other: &Interval) -> bool {
        if self.is_empty() {
            return true;
        }
        let lo_ok = match other.lo.cmp(&self.lo) {
            Ordering::Less => true,
            Ordering::Equal => other.lo_closed || !self.lo_closed,
            Ordering::Greater => false,
        };
        let hi_ok = match self.hi.cmp(&other.hi) {
            Ordering::Less => true,
            Ordering::Equal => other.hi_closed || !self.hi_closed,
            Ordering::Greater => false,
        };
        lo_ok && hi_ok
    }

    /// Ordering of left endpoints, a closed endpoint starting before an open one.
    fn cmp_lo(&self, other: &Interval) -> Ordering {
        self.lo.cmp(&other.lo).then_with(|| other.lo_closed.cmp(&self.lo_closed))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi && self.lo_closed && self.hi_closed {
            return write!(f, "{{{}}}", self.lo);
        }
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

/// Merges overlapping or touching intervals into a sorted disjoint list.
pub(crate) fn merge_intervals(intervals: &[Interval]) -> Vec<Interval> {
    let mut sorted: Vec<Interval> = intervals.iter().filter(|i| !i.is_empty()).cloned().collect();
    sorted.sort_by(Interval::cmp_lo);
    let mut out: Vec<Interval> = Vec::with_capacity(sorted.len());
    for next in sorted {
        if let Some(cur) = out.last_mut() {
            let joins = match next.lo.cmp(&cur.hi) {
                Ordering::Less => true,
                Ordering::Equal => next.lo_closed || cur.hi_closed,
                Ordering::Greater => false,
            };
            if joins {
                match next.hi.cmp(&cur.hi) {
                    Ordering::Greater => {
                        cur.hi = next.hi;
                        cur.hi_closed = next.hi_closed;
                    }
                    Ordering::Equal => cur.hi_closed |= next.hi_closed,
                    Ordering::Less => {}
                }
                continue;
            }
        }
        out.push(next);
    }
    out
}

/// Complement of a sorted disjoint interval list.
pub(crate) fn complement_intervals(merged: &[Interval]) -> Vec<Interval> {
    let mut out = Vec::new();
    let mut lo = Bound::NegInf;
    let mut lo_closed = false;
    for i in merged {
        let gap = Interval::new(lo.clone(), i.lo.clone(), lo_closed, !i.lo_closed);
        if !gap.is_empty() {
            out.push(gap);
        }
        lo = i.hi.clone();
        lo_closed = !i.hi_closed;
    }
    let tail = Interval::new(lo, Bound::PosInf, lo_closed, false);
    if !tail.is_empty() {
        out.push(tail);
    }
    out
}

/// A subset `M ⊆ ℝ` with exact rational membership.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MSet {
    intervals: Vec<Interval>,
    added: BTreeSet<Rational>,
    removed: BTreeSet<Rational>,
}

impl MSet {
    pub fn empty() -> Self {
        MSet::default()
    }

    pub fn real_line() -> Self {
        MSet::from_intervals([Interval::real_line()])
    }

    pub fn from_intervals(intervals: impl IntoIterator<Item = Interval>) -> Self {
        MSet { intervals: intervals.into_iter().collect(), ..MSet::default() }
    }

    pub fn points(points: impl IntoIterator<Item = Rational>) -> Self {
        MSet { added: points.into_iter().collect(), ..MSet::default() }
    }

    /// Builds a set from parts; a point both added and removed counts as removed.
    pub fn from_parts(intervals: Vec<Interval>, added: BTreeSet<Rational>, removed: BTreeSet<Rational>) -> Self {
        let added = added.difference(&removed).cloned().collect();
        MSet { intervals, added, removed }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn added(&self) -> &BTreeSet<Rational> {
        &self.added
    }

    pub fn removed(&self) -> &BTreeSet<Rational> {
        &self.removed
    }

    pub fn union_interval(mut self, i: Interval) -> Self {
        self.intervals.push(i);
        self
    }

    pub fn add_point(mut self, p: Rational) -> Self {
        self.removed.remove(&p);
        self.added.insert(p);
        self
    }

    pub fn remove_point(mut self, p: Rational) -> Self {
        self.added.remove(&p);
        self.removed.insert(p);
        self
    }

    /// χ_M(x).
    pub fn contains(&self, x: &Rational) -> bool {
        if self.removed.contains(x) {
            return false;
        }
        self.added.contains(x) || self.intervals.iter().any(|i| i.contains(x))
    }

    /// `ℝ ∖ M`.
    pub fn complement(&self) -> MSet {
        MSet {
            intervals: complement_intervals(&merge_intervals(&self.intervals)),
            added: self.removed.clone(),
            removed: self.added.clone(),
        }
    }

    /// Equivalent set with merged intervals and no redundant point corrections.
    pub fn simplified(&self) -> MSet {
        let intervals = merge_intervals(&self.intervals);
        let in_intervals = |p: &Rational| intervals.iter().any(|i| i.contains(p));
        let added = self.added.iter().filter(|p| !in_intervals(p)).cloned().collect();
        let removed = self.removed.iter().filter(|p| in_intervals(p)).cloned().collect();
        MSet { intervals, added, removed }
    }
}

impl fmt::Display for MSet {
    /// Same syntax the CLI's `setM` command accepts.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.simplified();
        let mut first = true;
        for i in &s.intervals {
            if !first {
                f.write_str(" U ")?;
            }
            first = false;
            if *i == Interval::real_line() {
                f.write_str("R")?;
            } else {
                write!(f, "{i}")?;
            }
        }
        let pts = |f: &mut fmt::Formatter<'_>, set: &BTreeSet<Rational>| -> fmt::Result {
            f.write_str("{")?;
            for (k, p) in set.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("}")
        };
        if !s.added.is_empty() {
            if first {
                pts(f, &s.added)?;
                first = false;
            } else {
                f.write_str(" + ")?;
                pts(f, &s.added)?;
            }
        }
        if first {
            f.write_str("empty")?;
        }
        if !s.removed.is_empty() {
            f.write_str(" - ")?;
            pts(f, &s.removed)?;
        }
        Ok(())
    }
}
