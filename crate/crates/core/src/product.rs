//! Multiplicative structure on distributions.
//!
//! With `F = Σ f_i χ_(x_i,x_{i+1}) + Σ Δ^F_{x_i}` and `G` written over the
//! same grid, the one-sided product is
//!
//! ```text
//! F * G = Σ f_i g_i χ_i + Σ_i [ g_i Δ^F_{x_i} + f_{i-1} Δ^G_{x_i} ]
//! ```
//!
//! where `g_i` is the piece of `G` right of `x_i` and `f_{i-1}` the piece of
//! `F` left of it, each acting on the deltas by the dual product. `*_M`
//! applies this rule at singular points in `M` and the mirrored rule
//! (`G * F`) at the others. Products of two delta parts always vanish.

use alloc::vec::Vec;

use crate::calculus::dual_delta;
use crate::dist::{union_grid, DeltaComb, Dist};
use crate::error::Error;
use crate::mset::MSet;
use crate::scalar::{Rational, Scalar};

fn selective(f: &Dist, g: &Dist, use_forward: impl Fn(&Rational) -> bool) -> Dist {
    let grid = union_grid(f.breakpoints(), g.breakpoints());
    let (fp, fd) = f.on_grid(&grid);
    let (gp, gd) = g.on_grid(&grid);
    let pieces = fp.iter().zip(&gp).map(|(a, b)| a * b).collect();
    let deltas = grid
        .iter()
        .enumerate()
        .map(|(i, x)| {
            // pieces i and i+1 are left and right of grid point i
            let (f_side, g_side) = if use_forward(x) { (&fp[i], &gp[i + 1]) } else { (&fp[i + 1], &gp[i]) };
            dual_delta(g_side, x, &fd[i]).add(&dual_delta(f_side, x, &gd[i]))
        })
        .collect();
    Dist::from_grid(grid, pieces, deltas)
}

/// The one-sided product `F * G`, equal to the weak limit of
/// `F(x)·G(x+ε)` as `ε ↓ 0`.
pub fn star(f: &Dist, g: &Dist) -> Dist {
    selective(f, g, |_| true)
}

/// `F *_M G`: acts as `F * G` at singular points in `M`, as `G * F` elsewhere.
pub fn star_m(f: &Dist, g: &Dist, m: &MSet) -> Dist {
    selective(f, g, |x| m.contains(x))
}

/// Hörmander product of distributions with disjoint singular supports.
pub fn hormander(f: &Dist, g: &Dist) -> Result<Dist, Error> {
    let common: Vec<Rational> =
        f.breakpoints().iter().filter(|x| g.breakpoints().binary_search(x).is_ok()).cloned().collect();
    if !common.is_empty() {
        return Err(Error::SingularSupportOverlap(common));
    }
    let grid = union_grid(f.breakpoints(), g.breakpoints());
    let (fp, _) = f.on_grid(&grid);
    let (gp, _) = g.on_grid(&grid);
    let pieces = fp.iter().zip(&gp).map(|(a, b)| a * b).collect();
    // each singular point belongs to one factor; the other is a single
    // polynomial in a neighbourhood of it
    let deltas = grid
        .iter()
        .map(|x| match (f.delta_at(x), g.delta_at(x)) {
            (Some(d), _) => dual_delta(g.piece_right_of(x), x, d),
            (_, Some(d)) => dual_delta(f.piece_right_of(x), x, d),
            _ => DeltaComb::default(),
        })
        .collect();
    Ok(Dist::from_grid(grid, pieces, deltas))
}

/// `F_M = (√2/2) f + √2 Σ_{x ∈ M} Δ^F_x`.
pub fn m_transform(f: &Dist, m: &MSet) -> Dist {
    let half = Scalar::half_sqrt2();
    let full = Scalar::sqrt2();
    f.map_parts(|p| p.scale(&half), |x, d| if m.contains(x) { d.scale(&full) } else { DeltaComb::default() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::derivative_n;
    use crate::mset::{Bound, Interval};
    use crate::poly::Poly;
    use crate::scalar::{int, rat};

    fn h(a: Rational) -> Dist {
        Dist::heaviside(a)
    }

    fn d(a: Rational, n: usize) -> Dist {
        Dist::delta(a, n)
    }

    #[test]
    fn hormander_examples() {
        assert_eq!(hormander(&h(int(0)), &d(int(1), 0)).unwrap(), d(int(1), 0));
        assert_eq!(hormander(&d(int(0), 0), &h(int(1))).unwrap(), Dist::zero());
        let x2 = Dist::from_smooth(Poly::from_ints(&[0, 0, 1]));
        assert_eq!(hormander(&x2, &d(int(0), 2)).unwrap(), d(int(0), 0).scale(&Scalar::from_int(2)));
        assert_eq!(hormander(&h(int(0)), &d(int(0), 0)), Err(Error::SingularSupportOverlap(alloc::vec![int(0)])));
    }

    #[test]
    fn star_examples() {
        assert_eq!(star(&d(int(0), 0), &h(int(0))), d(int(0), 0));
        assert_eq!(star(&h(int(0)), &d(int(0), 0)), Dist::zero());
        for s in [int(0), rat(1, 2), rat(-3, 7)] {
            let a = Dist::abs_shift(s.clone());
            let sq = Poly::affine(int(1), -s).pow(2);
            assert_eq!(star(&a, &a), Dist::from_smooth(sq));
        }
        let ramp = Dist::windowed(Poly::x(), Bound::Finite(int(0)), Bound::PosInf);
        assert_eq!(star(&ramp, &d(int(0), 1)), Dist::zero());
    }

    #[test]
    fn star_m_h_delta_rows() {
        let t = rat(1, 3);
        let inside = MSet::points([t.clone()]);
        let outside = MSet::empty();
        assert_eq!(star_m(&d(t.clone(), 0), &h(t.clone()), &inside), d(t.clone(), 0));
        assert_eq!(star_m(&d(t.clone(), 0), &h(t.clone()), &outside), Dist::zero());
        assert_eq!(star_m(&h(t.clone()), &d(t.clone(), 2), &inside), Dist::zero());
        assert_eq!(star_m(&h(t.clone()), &d(t.clone(), 2), &outside), d(t.clone(), 2));
        for m in [MSet::real_line(), MSet::empty(), inside] {
            assert_eq!(star_m(&d(int(0), 1), &d(int(0), 2), &m), Dist::zero());
            assert_eq!(star_m(&h(int(1)), &d(int(0), 0), &m), Dist::zero());
            assert_eq!(star_m(&h(int(0)), &d(int(1), 0), &m), d(int(1), 0));
        }
    }

    #[test]
    fn extreme_sets_give_both_orders() {
        let f = &Dist::abs_shift(int(0)) + &d(int(0), 1);
        let g = &h(int(0)) + &d(int(0), 0).scale(&Scalar::from_int(3));
        assert_eq!(star_m(&f, &g, &MSet::real_line()), star(&f, &g));
        assert_eq!(star_m(&f, &g, &MSet::empty()), star(&g, &f));
    }

    #[test]
    fn m_transform_examples() {
        let half = Scalar::half_sqrt2();
        assert_eq!(m_transform(&h(int(0)), &MSet::real_line()), h(int(0)).scale(&half));
        let m_in = MSet::from_intervals([Interval::closed(int(-1), int(1))]);
        assert_eq!(m_transform(&d(int(0), 0), &m_in), d(int(0), 0).scale(&Scalar::sqrt2()));
        assert_eq!(m_transform(&d(int(0), 0), &MSet::empty()), Dist::zero());
        assert_eq!(m_transform(&Dist::zero(), &m_in), Dist::zero());
    }

    #[test]
    fn abs_chain_at_half() {
        let s = rat(1, 2);
        let a = Dist::abs_shift(s.clone());
        let da = derivative_n(&a, 1);
        let ds = d(s.clone(), 0);
        assert_eq!(star(&ds, &a), Dist::zero());
        assert_eq!(star(&a, &ds), Dist::zero());
        // D²(|x−s|*|x−s|) = 2δ*|x−s| + 2 D|x−s| * D|x−s| + 2|x−s|*δ = 2
        let lhs = derivative_n(&star(&a, &a), 2);
        let two = Scalar::from_int(2);
        let rhs = &(&star(&ds, &a).scale(&two) + &star(&da, &da).scale(&two)) + &star(&a, &ds).scale(&two);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Dist::constant(two));
    }
}
