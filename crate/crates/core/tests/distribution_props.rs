mod common;

use common::{dist, mset, pool, scalar};
use distalg_core::{Dist, Interval, RawDist};
use proptest::prelude::*;

fn to_raw(f: &Dist) -> RawDist {
    let mut raw = RawDist { left: f.pieces()[0].clone(), ..RawDist::default() };
    for (i, x) in f.breakpoints().iter().enumerate() {
        raw.seams.push((x.clone(), f.pieces()[i + 1].clone()));
        raw.deltas.push((x.clone(), f.deltas()[i].coeffs().to_vec()));
    }
    raw.seams.reverse();
    raw
}

proptest! {
    #[test]
    fn normalize_is_idempotent(f in dist()) {
        prop_assert_eq!(to_raw(&f).normalize().unwrap(), f);
    }

    #[test]
    fn vector_space(f in dist(), g in dist(), h in dist(), a in scalar(), b in scalar()) {
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f + &Dist::zero(), f.clone());
        prop_assert_eq!(&f - &f, Dist::zero());
        prop_assert_eq!((&f + &g).scale(&a), &f.scale(&a) + &g.scale(&a));
        prop_assert_eq!(f.scale(&(&a + &b)), &f.scale(&a) + &f.scale(&b));
        prop_assert_eq!(f.scale(&(&a * &b)), f.scale(&b).scale(&a));
    }

    #[test]
    fn canonical_form_has_no_removable_seams(f in dist()) {
        for (i, _) in f.breakpoints().iter().enumerate() {
            prop_assert!(f.pieces()[i] != f.pieces()[i + 1] || !f.deltas()[i].is_empty());
        }
        prop_assert!(f.breakpoints().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn singsupp_within_breakpoints(f in dist()) {
        for x in f.singsupp() {
            prop_assert!(f.breakpoints().contains(&x));
        }
    }

    #[test]
    fn support_of_sum_within_union(f in dist(), g in dist()) {
        let union = distalg_core::ClosedSet::from_components(
            f.support().components().iter().chain(g.support().components()).cloned(),
        );
        prop_assert!((&f + &g).support().is_subset(&union));
    }

    #[test]
    fn delta_support_is_a_point(i in 0usize..4, n in 0usize..5) {
        let a = pool()[i].clone();
        let d = Dist::delta(a.clone(), n);
        prop_assert_eq!(d.support(), distalg_core::ClosedSet::from_components([Interval::point(a.clone())]));
        prop_assert_eq!(d.singsupp(), vec![a]);
    }

    #[test]
    fn complement_flips_membership(m in mset(), k in -6i64..=6) {
        let x = distalg_core::scalar::rat(k, 2);
        prop_assert_ne!(m.contains(&x), m.complement().contains(&x));
        prop_assert_eq!(m.simplified().contains(&x), m.contains(&x));
    }
}
