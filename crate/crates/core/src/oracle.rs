//! Floating-point weak semantics, independent of the closed-form products.
//!
//! Distributions are paired with bump test functions
//! `t(x) = exp(−1/(1−u²))`, `u = (x−c)/r`, by adaptive quadrature of the
//! function part plus `Σ F_ij (−1)^j t^(j)(x_i)` for the delta part. The
//! ε-shift limit evaluates the Hörmander product of `F(x)` and `G(x+ε)` on
//! a geometric ε sequence and extrapolates to ε = 0.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::dist::Dist;
use crate::error::Error;
use crate::mset::MSet;
use crate::poly::Poly;
use crate::product::{hormander, star_m};
use crate::scalar::{rat, rational_to_f64, Rational};

/// Bump supported on `[center − radius, center + radius]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TestFunction {
    center: Rational,
    radius: Rational,
}

impl TestFunction {
    pub fn new(center: Rational, radius: Rational) -> Result<Self, Error> {
        if radius <= Rational::from_integer(0.into()) {
            return Err(Error::TestFunction(format!("radius must be positive, got {radius}")));
        }
        Ok(TestFunction { center, radius })
    }

    pub fn center(&self) -> &Rational {
        &self.center
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    fn c(&self) -> f64 {
        rational_to_f64(&self.center)
    }

    fn r(&self) -> f64 {
        rational_to_f64(&self.radius)
    }

    pub fn support_f64(&self) -> (f64, f64) {
        (self.c() - self.r(), self.c() + self.r())
    }

    pub fn value(&self, x: f64) -> f64 {
        self.derivative(0, x)
    }

    /// `t^(j)(x)`.
    pub fn derivative(&self, j: usize, x: f64) -> f64 {
        let p = bump_numerator(j);
        eval_bump(&p, j, self.c(), self.r(), x)
    }
}

/// Numerators `P_j` with `φ^(j)(u) = P_j(u) (1−u²)^(−2j) φ(u)` for
/// `φ(u) = exp(−1/(1−u²))`; coefficients lowest degree first.
///
/// `P_0 = 1`, `P_{j+1} = P_j′ (1−u²)² + (4j u (1−u²) − 2u) P_j`.
pub fn bump_numerator(j: usize) -> Vec<f64> {
    let mut p = vec![1.0];
    for k in 0..j {
        let dp: Vec<f64> = p.iter().enumerate().skip(1).map(|(i, c)| i as f64 * c).collect();
        let w2 = [1.0, 0.0, -2.0, 0.0, 1.0];
        let kf = k as f64;
        // 4k u − 4k u³ − 2u
        let lin = [0.0, 4.0 * kf - 2.0, 0.0, -4.0 * kf];
        let a = poly_mul(&dp, &w2);
        let b = poly_mul(&p, &lin);
        let n = a.len().max(b.len());
        p = (0..n).map(|i| a.get(i).copied().unwrap_or(0.0) + b.get(i).copied().unwrap_or(0.0)).collect();
        while p.last() == Some(&0.0) {
            p.pop();
        }
    }
    p
}

fn poly_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (k, y) in b.iter().enumerate() {
            out[i + k] += x * y;
        }
    }
    out
}

fn horner(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn eval_bump(numer: &[f64], j: usize, c: f64, r: f64, x: f64) -> f64 {
    let u = (x - c) / r;
    let w = 1.0 - u * u;
    if w <= 0.0 {
        return 0.0;
    }
    let log_mag = -1.0 / w - 2.0 * j as f64 * libm::log(w);
    horner(numer, u) * libm::exp(log_mag) / libm::pow(r, j as f64)
}

/// `t^(j)(x)` for the bump `t`.
pub fn bump_deriv(t: &TestFunction, j: usize, x: f64) -> f64 {
    t.derivative(j, x)
}

/// Pairing value with an absolute error estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairingResult {
    pub value: f64,
    pub error_estimate: f64,
}

// Gauss–Kronrod 7/15 nodes and weights on [-1, 1], quoted to full published precision.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15(f: &impl Fn(f64) -> f64, a: f64, b: f64) -> (f64, f64) {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(mid);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for k in 0..7 {
        let dx = half * XGK[k];
        let s = f(mid - dx) + f(mid + dx);
        kronrod += WGK[k] * s;
        if k % 2 == 1 {
            gauss += WG[k / 2] * s;
        }
    }
    (kronrod * half, libm::fabs((kronrod - gauss) * half))
}

/// Adaptive Gauss–Kronrod integration to absolute tolerance `tol`.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> PairingResult {
    fn go(f: &impl Fn(f64) -> f64, a: f64, b: f64, tol: f64, depth: u32) -> (f64, f64) {
        let (v, e) = gk15(f, a, b);
        if e <= tol || depth >= 48 || (b - a) <= f64::EPSILON * libm::fabs(a).max(1.0) {
            return (v, e);
        }
        let m = 0.5 * (a + b);
        let (v1, e1) = go(f, a, m, 0.5 * tol, depth + 1);
        let (v2, e2) = go(f, m, b, 0.5 * tol, depth + 1);
        (v1 + v2, e1 + e2)
    }
    if b.partial_cmp(&a) != Some(core::cmp::Ordering::Greater) {
        return PairingResult { value: 0.0, error_estimate: 0.0 };
    }
    let (value, error_estimate) = go(&f, a, b, tol, 0);
    PairingResult { value, error_estimate }
}

/// Absolute quadrature tolerance per interval.
pub const QUAD_TOL: f64 = 1e-10;

/// `⟨F, t^(k)⟩`.
pub fn pair_with_bump_derivative(f: &Dist, t: &TestFunction, k: usize) -> PairingResult {
    let (lo, hi) = t.support_f64();
    let bps: Vec<f64> = f.breakpoints().iter().map(rational_to_f64).collect();
    let mut value = 0.0;
    let mut err = 0.0;
    let kernel_k = bump_numerator(k);
    let (c, r) = (t.c(), t.r());
    for (i, piece) in f.pieces().iter().enumerate() {
        if piece.is_zero() {
            continue;
        }
        let a = if i == 0 { lo } else { bps[i - 1].max(lo) };
        let b = if i == bps.len() { hi } else { bps[i].min(hi) };
        if b <= a {
            continue;
        }
        let coeffs: Vec<f64> = piece.coeffs().iter().map(|s| s.to_f64()).collect();
        let q = integrate(|x| horner(&coeffs, x) * eval_bump(&kernel_k, k, c, r, x), a, b, QUAD_TOL);
        value += q.value;
        err += q.error_estimate;
    }
    for (x, comb) in f.delta_terms() {
        let xf = rational_to_f64(x);
        for (j, cj) in comb.coeffs().iter().enumerate() {
            if cj.is_zero() {
                continue;
            }
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            value += cj.to_f64() * sign * t.derivative(j + k, xf);
        }
    }
    PairingResult { value, error_estimate: err }
}

/// `⟨F, t⟩`.
pub fn pair(f: &Dist, t: &TestFunction) -> PairingResult {
    pair_with_bump_derivative(f, t, 0)
}

/// `G(x + ε)`: every point moves to `x_i − ε`.
pub fn shift(g: &Dist, eps: &Rational) -> Dist {
    let grid = g.breakpoints().iter().map(|x| x - eps).collect();
    let pieces = g.pieces().iter().map(|p| p.compose_shift(eps)).collect();
    Dist::from_grid(grid, pieces, g.deltas().to_vec())
}

/// Settings for the ε-limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OracleConfig {
    /// Extrapolated tail estimate allowed, relative to `1 + |value|`.
    pub tolerance: f64,
    /// Number of ε levels `2^-4, 2^-5, …`.
    pub eps_depth: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { tolerance: 1e-6, eps_depth: 9 }
    }
}

pub fn default_eps_sequence(depth: usize) -> Vec<Rational> {
    (0..depth).map(|k| rat(1, 1i64 << (4 + k.min(50)))).collect()
}

/// Which factor is translated by ε.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShiftSide {
    /// `F(x)·G(x+ε)`, converging to `F * G`.
    Right,
    /// `F(x+ε)·G(x)`, converging to `G * F`.
    Left,
}

/// Smallest `p − q > 0` with `p` a singular point of the moving factor and
/// `q` one of the fixed factor.
fn collision_gap(moving: &Dist, fixed: &Dist) -> Option<Rational> {
    let mut best: Option<Rational> = None;
    for p in moving.breakpoints() {
        for q in fixed.breakpoints() {
            if p > q {
                let d = p - q;
                if best.as_ref().is_none_or(|b| d < *b) {
                    best = Some(d);
                }
            }
        }
    }
    best
}

/// Value at 0 of the interpolating polynomial through `(xs, ys)` together
/// with the difference between the last two diagonal entries.
fn neville_at_zero(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len();
    let mut t = ys.to_vec();
    let mut diag = vec![ys[n - 1]];
    for j in 1..n {
        for i in (j..n).rev() {
            let (xi, xj) = (xs[i], xs[i - j]);
            t[i] = (xj * t[i] - xi * t[i - 1]) / (xj - xi);
        }
        diag.push(t[n - 1]);
    }
    let last = diag[n - 1];
    let tail = if n >= 2 { libm::fabs(last - diag[n - 2]) } else { f64::INFINITY };
    (last, tail)
}

/// Extrapolated `lim_{ε↓0} ⟨F(x)·G(x+ε), t⟩` (or the mirrored shift).
/// Every ε is halved until it is below half the distance at which the two
/// singular supports would collide.
pub fn epsilon_limit_pair(
    f: &Dist,
    g: &Dist,
    t: &TestFunction,
    eps_seq: &[Rational],
    side: ShiftSide,
    config: &OracleConfig,
) -> Result<PairingResult, Error> {
    if eps_seq.is_empty() {
        return Err(Error::TestFunction("empty epsilon sequence".into()));
    }
    let (moving, fixed) = match side {
        ShiftSide::Right => (g, f),
        ShiftSide::Left => (f, g),
    };
    let mut eps: Vec<Rational> = eps_seq.to_vec();
    if let Some(gap) = collision_gap(moving, fixed) {
        let limit = gap / Rational::from_integer(2.into());
        let two = Rational::from_integer(2.into());
        while eps.iter().any(|e| *e >= limit) {
            for e in &mut eps {
                *e = &*e / &two;
            }
        }
    }
    let eval_at = |e: &Rational| -> Result<PairingResult, Error> {
        let moved = shift(moving, e);
        let prod = match side {
            ShiftSide::Right => hormander(fixed, &moved)?,
            ShiftSide::Left => hormander(&moved, fixed)?,
        };
        Ok(pair(&prod, t))
    };
    let mut xs = Vec::with_capacity(eps.len());
    let mut ys = Vec::with_capacity(eps.len());
    let mut quad_err: f64 = 0.0;
    for e in &eps {
        let v = eval_at(e)?;
        quad_err = quad_err.max(v.error_estimate);
        xs.push(rational_to_f64(e));
        ys.push(v.value);
    }
    // A delta sitting on the edge of supp t gives a flat, non-polynomial
    // approach like exp(-1/ε); slide the window toward 0 until two
    // successive windows extrapolate to the same value.
    let mut smallest = eps[eps.len() - 1].clone();
    let mut previous: Option<f64> = None;
    let mut estimate = f64::INFINITY;
    for _ in 0..=MAX_EXTRA_LEVELS {
        let (value, tail) = neville_at_zero(&xs, &ys);
        if let Some(p) = previous {
            estimate = tail + libm::fabs(value - p) + quad_err;
            if estimate <= config.tolerance * (1.0 + libm::fabs(value)) {
                return Ok(PairingResult { value, error_estimate: estimate });
            }
        }
        if !value.is_finite() {
            break;
        }
        previous = Some(value);
        smallest /= Rational::from_integer(2.into());
        let v = eval_at(&smallest)?;
        quad_err = quad_err.max(v.error_estimate);
        xs.remove(0);
        ys.remove(0);
        xs.push(rational_to_f64(&smallest));
        ys.push(v.value);
    }
    Err(Error::OracleDivergence { estimate, tolerance: config.tolerance })
}

/// Halvings past the end of the ε sequence tried before giving up.
pub const MAX_EXTRA_LEVELS: usize = 40;

/// Threshold the final pairing must fall below.
pub const WEAK_NULL_TOL: f64 = 1e-4;

/// Checks that `|⟨ξ *_M F_n, t⟩|` is below [`WEAK_NULL_TOL`] at the final
/// index and non-increasing over the last five.
pub fn weak_null_check(seq: &[Dist], xi: &Poly, m: &MSet, t: &TestFunction) -> bool {
    if seq.is_empty() {
        return false;
    }
    let xi = Dist::from_smooth(xi.clone());
    let tail = &seq[seq.len().saturating_sub(5)..];
    let values: Vec<f64> = tail.iter().map(|fnn| libm::fabs(pair(&star_m(&xi, fnn, m), t).value)).collect();
    let last = values[values.len() - 1];
    last < WEAK_NULL_TOL && values.windows(2).all(|w| w[1] <= w[0])
}
