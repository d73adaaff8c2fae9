//! Distributional derivative and primitive, dual product by a smooth
//! function, and restriction to an open interval.

use alloc::vec;
use alloc::vec::Vec;

use crate::dist::{DeltaComb, Dist};
use crate::mset::{Bound, Interval};
use crate::poly::{binomial, Poly};
use crate::scalar::{Rational, Scalar};

/// `D_x F`: classical derivative of each piece, a jump term at every
/// breakpoint, and every `δ^(j)` raised to `δ^(j+1)`.
pub fn derivative(f: &Dist) -> Dist {
    let bps = f.breakpoints().to_vec();
    let pieces = f.pieces();
    let mut deltas = Vec::with_capacity(bps.len());
    for (i, x) in bps.iter().enumerate() {
        let jump = &pieces[i + 1].eval_rational(x) - &pieces[i].eval_rational(x);
        let raised = f.deltas()[i].raise();
        deltas.push(raised.add(&DeltaComb::single(0, jump)));
    }
    let new_pieces = pieces.iter().map(Poly::diff).collect();
    Dist::from_grid(bps, new_pieces, deltas)
}

pub fn derivative_n(f: &Dist, n: usize) -> Dist {
    (0..n).fold(f.clone(), |acc, _| derivative(&acc))
}

/// A primitive `G` with `D_x G = F`. Delta orders drop by one, `δ^(0)`
/// becomes a unit jump, the function part is continuous except for those
/// jumps, and the leftmost piece has zero constant term.
pub fn antiderivative(f: &Dist) -> Dist {
    let bps = f.breakpoints().to_vec();
    let mut pieces: Vec<Poly> = Vec::with_capacity(bps.len() + 1);
    pieces.push(f.pieces()[0].antidiff());
    let mut deltas = Vec::with_capacity(bps.len());
    for (i, x) in bps.iter().enumerate() {
        let comb = &f.deltas()[i];
        let jump = comb.coeff(0);
        deltas.push(DeltaComb::new(comb.coeffs().iter().skip(1).cloned().collect()));
        let prim = f.pieces()[i + 1].antidiff();
        let target = &pieces[i].eval_rational(x) + &jump;
        let offset = &target - &prim.eval_rational(x);
        pieces.push(&prim + &Poly::constant(offset));
    }
    Dist::from_grid(bps, pieces, deltas)
}

/// `ξ·Σ_n c_n δ_a^(n) = Σ_n c_n Σ_k (−1)^k C(n,k) ξ^(k)(a) δ_a^(n−k)`.
pub fn dual_delta(xi: &Poly, a: &Rational, comb: &DeltaComb) -> DeltaComb {
    let Some(order) = comb.order() else {
        return DeltaComb::default();
    };
    let derivs = xi.derivatives_at(a, order);
    let mut out = vec![Scalar::zero(); order + 1];
    for (n, c) in comb.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, dk) in derivs.iter().enumerate().take(n + 1) {
            if dk.is_zero() {
                continue;
            }
            let mut w = binomial(n, k);
            if k % 2 == 1 {
                w = -w;
            }
            out[n - k] += &(c * dk).scale(&w);
        }
    }
    DeltaComb::new(out)
}

/// Dual product `ξF` of a globally smooth polynomial with a distribution.
pub fn dual_product(xi: &Poly, f: &Dist) -> Dist {
    f.map_parts(|p| xi * p, |a, comb| dual_delta(xi, a, comb))
}

/// Restriction to an open interval, extended by zero. Deltas on the boundary
/// are dropped.
pub fn restrict(f: &Dist, lo: Bound, hi: Bound) -> Dist {
    let window = Interval::open(lo.clone(), hi.clone());
    if window.is_empty() {
        return Dist::zero();
    }
    let mut grid: Vec<Rational> = f.breakpoints().iter().filter(|x| window.contains(x)).cloned().collect();
    if let Bound::Finite(a) = &lo {
        grid.insert(0, a.clone());
    }
    if let Bound::Finite(b) = &hi {
        grid.push(b.clone());
    }
    let (pieces, deltas) = f.on_grid(&grid);
    let offset = usize::from(matches!(lo, Bound::Finite(_)));
    let last = grid.len() - usize::from(matches!(hi, Bound::Finite(_)));
    let pieces =
        pieces.into_iter().enumerate().map(|(k, p)| if k >= offset && k <= last { p } else { Poly::zero() }).collect();
    let deltas =
        deltas.into_iter().zip(&grid).map(|(d, x)| if window.contains(x) { d } else { DeltaComb::default() }).collect();
    Dist::from_grid(grid, pieces, deltas)
}
