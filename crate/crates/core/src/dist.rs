//! Canonical representation of distributions.
//!
//! A [`Dist`] is `f + Δ`, where `f` is a polynomial on each open interval
//! between consecutive breakpoints and `Δ` is a finite combination of
//! `δ^(j)` located at breakpoints. Values of `f` at the breakpoints are not
//! represented. In canonical form no breakpoint is removable: either the
//! pieces on its two sides differ or it carries delta content. Structural
//! equality is therefore equality of distributions.

use core::ops::{Add, Neg, Sub};

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::mset::{Bound, Interval};
use crate::poly::Poly;
use crate::scalar::{Rational, Scalar};
use crate::support::ClosedSet;

/// `Σ_j c_j δ^(j)` at one point, coefficients indexed by derivative order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct DeltaComb {
    coeffs: Vec<Scalar>,
}

impl DeltaComb {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        DeltaComb { coeffs }
    }

    /// `c·δ^(order)`.
    pub fn single(order: usize, c: Scalar) -> Self {
        let mut coeffs = vec![Scalar::zero(); order];
        coeffs.push(c);
        DeltaComb::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Scalar {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest derivative order present.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &Scalar) -> DeltaComb {
        DeltaComb::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub(crate) fn add(&self, other: &DeltaComb) -> DeltaComb {
        let n = self.coeffs.len().max(other.coeffs.len());
        DeltaComb::new((0..n).map(|j| &self.coeff(j) + &other.coeff(j)).collect())
    }

    /// Every `δ^(j)` becomes `δ^(j+1)`.
    pub(crate) fn raise(&self) -> DeltaComb {
        if self.is_empty() {
            return DeltaComb::default();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        DeltaComb::new(coeffs)
    }
}

/// An element of the algebra in canonical form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Dist {
    breakpoints: Vec<Rational>,
    /// `breakpoints.len() + 1` pieces, leftmost first.
    pieces: Vec<Poly>,
    /// One (possibly empty) combination per breakpoint.
    deltas: Vec<DeltaComb>,
}

impl Default for Dist {
    fn default() -> Self {
        Dist::zero()
    }
}

/// Unnormalized input: a leftmost piece, then seams `(x, p)` meaning
/// "`p` from `x` rightwards", plus delta terms. Seams need not be sorted;
/// repeated delta points are summed.
#[derive(Clone, Debug, Default)]
pub struct RawDist {
    pub left: Poly,
    pub seams: Vec<(Rational, Poly)>,
    pub deltas: Vec<(Rational, Vec<Scalar>)>,
}

impl RawDist {
    /// Sorts, deduplicates and merges removable seams. Repeating a seam with
    /// a different piece is an error.
    pub fn normalize(&self) -> Result<Dist, Error> {
        let mut seams: Vec<(Rational, Poly)> = self.seams.clone();
        seams.sort_by(|a, b| a.0.cmp(&b.0));
        seams.dedup_by(|next, prev| next.0 == prev.0 && next.1 == prev.1);
        if let Some(w) = seams.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::ConflictingPieces(w[0].0.clone()));
        }
        let mut combs: BTreeMap<Rational, DeltaComb> = BTreeMap::new();
        for (x, cs) in &self.deltas {
            let entry = combs.entry(x.clone()).or_default();
            *entry = entry.add(&DeltaComb::new(cs.clone()));
        }
        let mut grid: Vec<Rational> = seams.iter().map(|s| s.0.clone()).collect();
        grid.extend(combs.keys().cloned());
        grid.sort();
        grid.dedup();

        let mut pieces = Vec::with_capacity(grid.len() + 1);
        pieces.push(self.left.clone());
        let mut next_seam = seams.iter().peekable();
        for x in &grid {
            let current = match next_seam.peek() {
                Some((sx, p)) if sx == x => {
                    next_seam.next();
                    p.clone()
                }
                _ => pieces.last().cloned().unwrap_or_default(),
            };
            pieces.push(current);
        }
        let deltas = grid.iter().map(|x| combs.remove(x).unwrap_or_default()).collect();
        Ok(Dist::from_grid(grid, pieces, deltas))
    }
}

impl Dist {
    pub fn zero() -> Self {
        Dist::from_smooth(Poly::zero())
    }

    pub fn one() -> Self {
        Dist::from_smooth(Poly::one())
    }

    pub fn from_smooth(p: Poly) -> Self {
        Dist { breakpoints: Vec::new(), pieces: vec![p], deltas: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Dist::from_smooth(Poly::constant(c))
    }

    /// `H(x − a)`.
    pub fn heaviside(a: Rational) -> Self {
        Dist::step(a, Poly::zero(), Poly::one())
    }

    /// `H(a − x)`.
    pub fn mirrored_heaviside(a: Rational) -> Self {
        Dist::step(a, Poly::one(), Poly::zero())
    }

    /// `δ_a^(n)`.
    pub fn delta(a: Rational, n: usize) -> Self {
        Dist::delta_comb(a, DeltaComb::single(n, Scalar::one()))
    }

    pub fn delta_comb(a: Rational, comb: DeltaComb) -> Self {
        Dist::from_grid(vec![a], vec![Poly::zero(), Poly::zero()], vec![comb])
    }

    /// `|x − s|`.
    pub fn abs_shift(s: Rational) -> Self {
        let right = Poly::affine(Rational::from_integer(1.into()), -s.clone());
        Dist::step(s, -&right, right)
    }

    /// `left` on `(−∞, a)`, `right` on `(a, ∞)`.
    pub fn step(a: Rational, left: Poly, right: Poly) -> Self {
        Dist::from_grid(vec![a], vec![left, right], vec![DeltaComb::default()])
    }

    /// `p·χ_I` for an open interval `I`.
    pub fn windowed(p: Poly, lo: Bound, hi: Bound) -> Self {
        match (lo, hi) {
            (Bound::Finite(a), Bound::Finite(b)) if a < b => Dist::from_grid(
                vec![a, b],
                vec![Poly::zero(), p, Poly::zero()],
                vec![DeltaComb::default(), DeltaComb::default()],
            ),
            (Bound::Finite(_), Bound::Finite(_)) => Dist::zero(),
            (Bound::NegInf, Bound::PosInf) => Dist::from_smooth(p),
            (Bound::NegInf, Bound::Finite(b)) => Dist::step(b, p, Poly::zero()),
            (Bound::Finite(a), Bound::PosInf) => Dist::step(a, Poly::zero(), p),
            _ => Dist::zero(),
        }
    }

    /// Builds from a sorted, duplicate-free grid and merges removable seams.
    pub(crate) fn from_grid(grid: Vec<Rational>, pieces: Vec<Poly>, deltas: Vec<DeltaComb>) -> Self {
        debug_assert_eq!(pieces.len(), grid.len() + 1);
        debug_assert_eq!(deltas.len(), grid.len());
        let mut pieces = pieces.into_iter();
        let mut out = Dist {
            breakpoints: Vec::with_capacity(grid.len()),
            pieces: vec![pieces.next().unwrap_or_default()],
            deltas: Vec::with_capacity(grid.len()),
        };
        for ((x, comb), piece) in grid.into_iter().zip(deltas).zip(pieces) {
            let same = out.pieces.last().is_some_and(|p| *p == piece);
            if same && comb.is_empty() {
                continue;
            }
            out.breakpoints.push(x);
            out.pieces.push(piece);
            out.deltas.push(comb);
        }
        out
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Poly] {
        &self.pieces
    }

    pub fn deltas(&self) -> &[DeltaComb] {
        &self.deltas
    }

    /// `(point, combination)` for every breakpoint carrying delta content.
    pub fn delta_terms(&self) -> impl Iterator<Item = (&Rational, &DeltaComb)> {
        self.breakpoints.iter().zip(&self.deltas).filter(|(_, c)| !c.is_empty())
    }

    pub fn is_zero(&self) -> bool {
        self.breakpoints.is_empty() && self.pieces[0].is_zero()
    }

    /// The single polynomial if the distribution is globally smooth.
    pub fn as_smooth(&self) -> Option<&Poly> {
        self.breakpoints.is_empty().then(|| &self.pieces[0])
    }

    /// Continuous function with no delta content.
    pub fn is_continuous(&self) -> bool {
        self.breakpoints.iter().enumerate().all(|(i, x)| {
            self.deltas[i].is_empty() && self.pieces[i].eval_rational(x) == self.pieces[i + 1].eval_rational(x)
        })
    }

    fn index_right_of(&self, x: &Rational) -> usize {
        self.breakpoints.partition_point(|b| b <= x)
    }

    fn index_left_of(&self, x: &Rational) -> usize {
        self.breakpoints.partition_point(|b| b < x)
    }

    /// The polynomial valid just to the right of `x`.
    pub fn piece_right_of(&self, x: &Rational) -> &Poly {
        &self.pieces[self.index_right_of(x)]
    }

    /// The polynomial valid just to the left of `x`.
    pub fn piece_left_of(&self, x: &Rational) -> &Poly {
        &self.pieces[self.index_left_of(x)]
    }

    pub fn delta_at(&self, x: &Rational) -> Option<&DeltaComb> {
        self.breakpoints.binary_search(x).ok().map(|i| &self.deltas[i]).filter(|c| !c.is_empty())
    }

    /// Pieces and deltas re-expressed over `grid`, a sorted superset of the
    /// breakpoints.
    pub(crate) fn on_grid(&self, grid: &[Rational]) -> (Vec<Poly>, Vec<DeltaComb>) {
        let mut pieces = Vec::with_capacity(grid.len() + 1);
        let mut deltas = Vec::with_capacity(grid.len());
        pieces.push(self.pieces[0].clone());
        for x in grid {
            pieces.push(self.piece_right_of(x).clone());
            deltas.push(self.delta_at(x).cloned().unwrap_or_default());
        }
        (pieces, deltas)
    }

    pub fn function_part(&self) -> Dist {
        let grid = self.breakpoints.clone();
        let empty = vec![DeltaComb::default(); grid.len()];
        Dist::from_grid(grid, self.pieces.clone(), empty)
    }

    pub fn delta_part(&self) -> Dist {
        let grid = self.breakpoints.clone();
        let zeros = vec![Poly::zero(); grid.len() + 1];
        Dist::from_grid(grid, zeros, self.deltas.clone())
    }

    /// Applies `f` to every piece and `g` to every delta combination.
    pub(crate) fn map_parts(&self, f: impl Fn(&Poly) -> Poly, g: impl Fn(&Rational, &DeltaComb) -> DeltaComb) -> Dist {
        let pieces = self.pieces.iter().map(f).collect();
        let deltas = self.breakpoints.iter().zip(&self.deltas).map(|(x, c)| g(x, c)).collect();
        Dist::from_grid(self.breakpoints.clone(), pieces, deltas)
    }

    pub fn scale(&self, c: &Scalar) -> Dist {
        self.map_parts(|p| p.scale(c), |_, d| d.scale(c))
    }

    /// Closure of the set where the function part is nonzero, together with
    /// the delta points.
    pub fn support(&self) -> ClosedSet {
        let mut parts = Vec::new();
        for (i, p) in self.pieces.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let lo = match i {
                0 => Bound::NegInf,
                _ => Bound::Finite(self.breakpoints[i - 1].clone()),
            };
            let hi = match self.breakpoints.get(i) {
                Some(b) => Bound::Finite(b.clone()),
                None => Bound::PosInf,
            };
            parts.push(Interval::open(lo, hi));
        }
        for (x, _) in self.delta_terms() {
            parts.push(Interval::point(x.clone()));
        }
        ClosedSet::from_components(parts)
    }

    /// In canonical form every breakpoint is singular.
    pub fn singsupp(&self) -> Vec<Rational> {
        self.breakpoints.clone()
    }

    fn combine(&self, other: &Dist, piece: impl Fn(&Poly, &Poly) -> Poly) -> Dist {
        let grid = union_grid(&self.breakpoints, &other.breakpoints);
        let (fp, fd) = self.on_grid(&grid);
        let (gp, gd) = other.on_grid(&grid);
        let pieces = fp.iter().zip(&gp).map(|(a, b)| piece(a, b)).collect();
        let deltas = fd.iter().zip(&gd).map(|(a, b)| a.add(b)).collect();
        Dist::from_grid(grid, pieces, deltas)
    }

    pub fn checked_add(&self, other: &Dist) -> Dist {
        self.combine(other, |a, b| a + b)
    }
}

/// Sorted union of two sorted duplicate-free lists.
pub(crate) fn union_grid(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => {
                i += 1;
                j += 1;
                x
            }
            (Some(x), Some(y)) if x < y => {
                i += 1;
                x
            }
            (Some(_), Some(y)) => {
                j += 1;
                y
            }
            (Some(x), None) => {
                i += 1;
                x
            }
            (None, Some(y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        out.push(next.clone());
    }
    out
}

impl Add<&Dist> for &Dist {
    type Output = Dist;
    fn add(self, rhs: &Dist) -> Dist {
        self.checked_add(rhs)
    }
}

impl Sub<&Dist> for &Dist {
    type Output = Dist;
    fn sub(self, rhs: &Dist) -> Dist {
        self + &(-rhs)
    }
}

impl Neg for &Dist {
    type Output = Dist;
    fn neg(self) -> Dist {
        self.scale(&-Scalar::one())
    }
}

impl Add for Dist {
    type Output = Dist;
    fn add(self, rhs: Dist) -> Dist {
        &self + &rhs
    }
}

impl Sub for Dist {
    type Output = Dist;
    fn sub(self, rhs: Dist) -> Dist {
        &self - &rhs
    }
}

impl Neg for Dist {
    type Output = Dist;
    fn neg(self) -> Dist {
        -&self
    }
}

impl From<Poly> for Dist {
    fn from(p: Poly) -> Self {
        Dist::from_smooth(p)
    }
}

impl From<Scalar> for Dist {
    fn from(c: Scalar) -> Self {
        Dist::constant(c)
    }
}
