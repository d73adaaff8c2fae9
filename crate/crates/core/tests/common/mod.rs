#![allow(dead_code)]

use distalg_core::scalar::rat;
use distalg_core::{Bound, Dist, Interval, MSet, Poly, Rational, RawDist, Scalar};
use proptest::collection::vec;
use proptest::prelude::*;

/// Breakpoint pool small enough that random factors share singular points.
pub fn pool() -> Vec<Rational> {
    vec![rat(-1, 1), rat(0, 1), rat(1, 2), rat(1, 1)]
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

pub fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        4 => small_rational().prop_map(Scalar::from_rational),
        1 => (small_rational(), small_rational()).prop_map(|(a, b)| Scalar::new(a, b)),
    ]
}

pub fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

pub fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop_oneof![
        1 => Just(Poly::zero()),
        4 => vec(scalar(), 1..=max_deg + 1).prop_map(Poly::new),
    ]
}

pub struct DistShape {
    pub max_deg: usize,
    pub max_order: usize,
}

pub const SMALL: DistShape = DistShape { max_deg: 3, max_order: 3 };

/// Random distribution over the shared pool; pieces sometimes repeat so
/// that normalization has seams to merge.
pub fn dist_with(shape: DistShape) -> impl Strategy<Value = Dist> {
    let n = pool().len();
    (
        poly(shape.max_deg),
        vec((any::<bool>(), any::<bool>(), poly(shape.max_deg)), n),
        vec(proptest::option::weighted(0.4, vec(scalar(), 1..=shape.max_order + 1)), n),
    )
        .prop_map(|(left, seams, deltas)| {
            let pool = pool();
            let mut raw = RawDist { left: left.clone(), ..RawDist::default() };
            let mut prev = left;
            for (x, (use_seam, repeat, p)) in pool.iter().zip(seams) {
                if use_seam {
                    let piece = if repeat { prev.clone() } else { p };
                    raw.seams.push((x.clone(), piece.clone()));
                    prev = piece;
                }
            }
            for (x, d) in pool.iter().zip(deltas) {
                if let Some(cs) = d {
                    raw.deltas.push((x.clone(), cs));
                }
            }
            raw.normalize().expect("sorted pool has no conflicts")
        })
}

pub fn dist() -> impl Strategy<Value = Dist> {
    dist_with(SMALL)
}

fn bound_pair() -> impl Strategy<Value = (Bound, Bound)> {
    let ends = prop_oneof![
        1 => Just(None),
        4 => proptest::sample::select(pool()).prop_map(Some),
    ];
    (ends.clone(), ends).prop_map(|(a, b)| {
        let lo = a.map_or(Bound::NegInf, Bound::Finite);
        let hi = b.map_or(Bound::PosInf, Bound::Finite);
        if lo <= hi {
            (lo, hi)
        } else {
            (hi, lo)
        }
    })
}

pub fn mset() -> impl Strategy<Value = MSet> {
    (
        vec((bound_pair(), any::<bool>(), any::<bool>()), 0..3),
        proptest::sample::subsequence(pool(), 0..=2),
        proptest::sample::subsequence(pool(), 0..=2),
    )
        .prop_map(|(ivs, add, remove)| {
            let mut m = MSet::from_intervals(ivs.into_iter().map(|((lo, hi), lc, hc)| Interval::new(lo, hi, lc, hc)));
            for p in add {
                m = m.add_point(p);
            }
            for p in remove {
                m = m.remove_point(p);
            }
            m
        })
}
