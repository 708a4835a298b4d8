//! Principal-value Hilbert transform on the real line and Hilbert
//! pairs `f = g + ih`.
//!
//! The kernel is `1/(t - x)`: `g(x) = p.v. (1/π) ∫ h(t)/(t-x) dt`.
//! This is the opposite sign of the `1/(x - t)` convention common in
//! signal processing; the pair records the tag so downstream checks
//! stay honest about it.

use crate::error::{Error, Result};
use crate::measures::{Complex, MeasuredFunction};
use crate::quad::{integrate_with_hints, QuadOptions};

pub const CONVENTION_TAG: &str = "paper:(t-x)";

/// A real-valued function with enough structure for the p.v. quadrature:
/// pointwise values, a derivative (for the straddling-cell model), and
/// a window outside of which it either vanishes or follows the declared
/// tail model.
pub trait RealFunction: Sync {
    fn eval(&self, t: f64) -> f64;

    fn derivative(&self, t: f64) -> f64 {
        let h = 1e-6;
        (self.eval(t + h) - self.eval(t - h)) / (2.0 * h)
    }

    /// Window `[a, b]` containing the support (or the non-tail part).
    fn window(&self) -> (f64, f64);

    /// Optional decaying tail beyond the window.
    fn tail(&self) -> Option<RationalTail> {
        None
    }

    fn label(&self) -> String {
        "h".to_string()
    }
}

/// Tail model `h(t) = c / (1 + t²)` for `|t| > cut`; its p.v. integral
/// has a closed form, which is what makes the one certifiable
/// non-compact fixture possible.
#[derive(Clone, Copy, Debug)]
pub struct RationalTail {
    pub coeff: f64,
    pub cut: f64,
}

impl RationalTail {
    /// `(1/π) ∫_{|t| > cut} [c/(1+t²)] / (t - x) dt` for `|x| < cut`.
    pub fn pv_contribution(&self, x: f64) -> f64 {
        let t = self.cut;
        let a = 1.0 / (1.0 + x * x);
        self.coeff / std::f64::consts::PI
            * a
            * (((t + x) / (t - x)).ln() + 2.0 * x * t.atan() - std::f64::consts::PI * x)
    }
}

/// Sampled representation with local cubic interpolation; used by the
/// CSV ingestion path.
pub struct SampledFunction {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(grid: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if grid.len() != values.len() || grid.len() < 4 {
            return Err(Error::domain(
                "sampled function needs >= 4 nodes and matching lengths",
            ));
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain("sample grid must be strictly increasing"));
        }
        Ok(SampledFunction { grid, values })
    }

    fn local_cubic(&self, t: f64) -> (f64, f64) {
        let n = self.grid.len();
        let pos = self.grid.partition_point(|&x| x < t).clamp(2, n - 2);
        let i0 = pos - 2;
        let xs = &self.grid[i0..i0 + 4];
        let ys = &self.values[i0..i0 + 4];
        // Lagrange value and derivative
        let mut value = 0.0;
        let mut deriv = 0.0;
        for j in 0..4 {
            let mut lj = 1.0;
            let mut dlj = 0.0;
            for k in 0..4 {
                if k == j {
                    continue;
                }
                let denom = xs[j] - xs[k];
                dlj = dlj * (t - xs[k]) / denom + lj / denom;
                lj *= (t - xs[k]) / denom;
            }
            value += ys[j] * lj;
            deriv += ys[j] * dlj;
        }
        (value, deriv)
    }
}

impl RealFunction for SampledFunction {
    fn eval(&self, t: f64) -> f64 {
        if t < self.grid[0] || t > *self.grid.last().unwrap() {
            return 0.0;
        }
        self.local_cubic(t).0
    }

    fn derivative(&self, t: f64) -> f64 {
        if t < self.grid[0] || t > *self.grid.last().unwrap() {
            return 0.0;
        }
        self.local_cubic(t).1
    }

    fn window(&self) -> (f64, f64) {
        (self.grid[0], *self.grid.last().unwrap())
    }

    fn label(&self) -> String {
        "sampled".to_string()
    }
}

/// p.v. Hilbert transform at a single point, with an error estimate.
///
/// Inside the window the singularity is removed by value subtraction:
/// `∫ (h(t) - h(x))/(t - x) dt + h(x) ln((b-x)/(x-a))`; the integrand
/// at `t = x` is `h'(x)`. The straddling cell therefore needs no
/// excision, and the configured tail (if any) enters in closed form.
pub fn hilbert_pv(h: &dyn RealFunction, x: f64) -> (f64, f64) {
    let (a, b) = h.window();
    let opts = QuadOptions {
        rel_tol: 1e-11,
        abs_tol: 1e-13,
        max_intervals: 4096,
    };
    let inv_pi = 1.0 / std::f64::consts::PI;
    let (main, err) = if x > a && x < b {
        let hx = h.eval(x);
        let integrand = |t: f64| {
            if t == x {
                h.derivative(x)
            } else {
                (h.eval(t) - hx) / (t - x)
            }
        };
        let res = integrate_with_hints(integrand, a, b, &[x], opts);
        let correction = if hx == 0.0 {
            0.0
        } else {
            hx * ((b - x) / (x - a)).ln()
        };
        (res.value + correction, res.error)
    } else {
        let res = integrate_with_hints(|t| h.eval(t) / (t - x), a, b, &[], opts);
        (res.value, res.error)
    };
    let tail = h
        .tail()
        .map(|t| t.pv_contribution(x))
        .unwrap_or(0.0);
    (main * inv_pi + tail, err * inv_pi)
}

/// A grid, the input samples, the computed transform, and per-node
/// quadrature error estimates.
#[derive(Clone, Debug)]
pub struct HilbertPair {
    pub grid: Vec<f64>,
    pub h: Vec<f64>,
    pub g: Vec<f64>,
    pub err: Vec<f64>,
    pub convention: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub struct PairOptions {
    /// Number of grid points (default 4096).
    pub points: usize,
    /// Grid spans this multiple of the window width (default 4).
    pub width_factor: f64,
}

impl Default for PairOptions {
    fn default() -> Self {
        PairOptions {
            points: 4096,
            width_factor: 4.0,
        }
    }
}

/// Computes `g` on a uniform grid spanning `width_factor` times the
/// window of `h`, centered on the window.
pub fn make_hilbert_pair(h: &dyn RealFunction, opts: PairOptions) -> HilbertPair {
    let (a, b) = h.window();
    let center = 0.5 * (a + b);
    let halfspan = 0.5 * (b - a) * opts.width_factor;
    let n = opts.points.max(8);
    let grid: Vec<f64> = (0..n)
        .map(|i| center - halfspan + 2.0 * halfspan * i as f64 / (n - 1) as f64)
        .collect();
    let mut hs = Vec::with_capacity(n);
    let mut gs = Vec::with_capacity(n);
    let mut errs = Vec::with_capacity(n);
    for &t in &grid {
        let (g, e) = hilbert_pv(h, t);
        hs.push(h.eval(t));
        gs.push(g);
        errs.push(e);
    }
    HilbertPair {
        grid,
        h: hs,
        g: gs,
        err: errs,
        convention: CONVENTION_TAG,
    }
}

/// Doubles the grid until `g` stabilizes to `tol` at the coarse nodes
/// (closed-form inputs stabilize immediately; sampled inputs converge
/// with the interpolation order).
pub fn make_hilbert_pair_refined(h: &dyn RealFunction, tol: f64, max_points: usize) -> HilbertPair {
    let mut opts = PairOptions {
        points: 1024,
        ..Default::default()
    };
    let mut pair = make_hilbert_pair(h, opts);
    while opts.points * 2 <= max_points {
        opts.points *= 2;
        let refined = make_hilbert_pair(h, opts);
        let drift = pair
            .g
            .iter()
            .zip(refined.g.iter().step_by(2))
            .map(|(c, f)| (c - f).abs())
            .fold(0.0f64, f64::max);
        pair = refined;
        if drift <= tol {
            break;
        }
    }
    pair
}

impl HilbertPair {
    /// Weighted samples of `f = g + ih` with trapezoid cell weights;
    /// this is what the distribution and logarithmic-determinant
    /// machinery consumes.
    pub fn to_measured_function(&self) -> MeasuredFunction {
        let n = self.grid.len();
        let mut samples = Vec::with_capacity(n);
        for i in 0..n {
            let w = match i {
                0 => 0.5 * (self.grid[1] - self.grid[0]),
                _ if i == n - 1 => 0.5 * (self.grid[n - 1] - self.grid[n - 2]),
                _ => 0.5 * (self.grid[i + 1] - self.grid[i - 1]),
            };
            samples.push((Complex::new(self.g[i], self.h[i]), w));
        }
        MeasuredFunction { samples }
    }

    /// Like [`HilbertPair::to_measured_function`], but extends the
    /// sample set with log-spaced far-field nodes where `h` vanishes
    /// and `g` decays. The logarithmic determinant of `f = g + ih`
    /// is only non-negative thanks to a cancellation between the two
    /// tails of `g`, so evaluations at `|z|` beyond the core grid
    /// require this extension.
    pub fn to_measured_function_with_tail(
        &self,
        h: &dyn RealFunction,
        decades: f64,
        per_decade: usize,
    ) -> MeasuredFunction {
        let edge = self
            .grid
            .last()
            .unwrap()
            .abs()
            .max(self.grid[0].abs());
        let n_tail = (decades * per_decade as f64).ceil() as usize;
        let mut grid: Vec<f64> = Vec::with_capacity(self.grid.len() + 2 * n_tail);
        let mut values: Vec<Complex> = Vec::with_capacity(grid.capacity());
        for k in (1..=n_tail).rev() {
            let t = -edge * 10f64.powf(decades * k as f64 / n_tail as f64);
            let (g, _) = hilbert_pv(h, t);
            grid.push(t);
            values.push(Complex::new(g, h.eval(t)));
        }
        for i in 0..self.grid.len() {
            grid.push(self.grid[i]);
            values.push(Complex::new(self.g[i], self.h[i]));
        }
        for k in 1..=n_tail {
            let t = edge * 10f64.powf(decades * k as f64 / n_tail as f64);
            let (g, _) = hilbert_pv(h, t);
            grid.push(t);
            values.push(Complex::new(g, h.eval(t)));
        }
        let n = grid.len();
        let samples = (0..n)
            .map(|i| {
                let w = match i {
                    0 => 0.5 * (grid[1] - grid[0]),
                    _ if i == n - 1 => 0.5 * (grid[n - 1] - grid[n - 2]),
                    _ => 0.5 * (grid[i + 1] - grid[i - 1]),
                };
                (values[i], w)
            })
            .collect();
        MeasuredFunction { samples }
    }

    /// `(level, weight)` pairs of `|h|` for the exact step-distribution
    /// right-hand sides.
    pub fn h_levels(&self) -> Vec<(f64, f64)> {
        self.to_measured_function()
            .samples
            .iter()
            .map(|&(v, w)| (v.im.abs(), w))
            .collect()
    }
}

/// Quadrature-backed logarithmic determinant of a Hilbert pair:
/// `u_f(z) = ∫ H(z f(t)) dt` with `f` interpolated from a dense sample
/// set and a dipole model `g ≈ -A/t - A1/t²` beyond the sampled range.
///
/// The weighted-sample logdet carries `O(|z|² Δt²)` discretization
/// error, far too coarse for positivity thresholds at large `|z|`;
/// this field restores quadrature accuracy while the sample view keeps
/// serving the distribution functionals.
pub struct PairField {
    g: SampledFunction,
    h_fn: Box<dyn RealFunction + Send>,
    support: (f64, f64),
    t_max: f64,
    dipole: f64,
    label: String,
}

impl PairField {
    pub fn new(h_fn: Box<dyn RealFunction + Send>, pair: &HilbertPair) -> PairField {
        let support = h_fn.window();
        let edge = pair.grid.last().unwrap().abs().max(pair.grid[0].abs());
        let t_max = (edge * 1e3).max(1e4);
        let decades = (t_max / edge).log10();
        let per_decade = 32;
        let n_tail = (decades * per_decade as f64).ceil() as usize;
        let mut grid = Vec::with_capacity(pair.grid.len() + 2 * n_tail);
        let mut values = Vec::with_capacity(grid.capacity());
        for k in (1..=n_tail).rev() {
            let t = -edge * 10f64.powf(decades * k as f64 / n_tail as f64);
            grid.push(t);
            values.push(hilbert_pv(h_fn.as_ref(), t).0);
        }
        grid.extend_from_slice(&pair.grid);
        values.extend_from_slice(&pair.g);
        for k in 1..=n_tail {
            let t = edge * 10f64.powf(decades * k as f64 / n_tail as f64);
            grid.push(t);
            values.push(hilbert_pv(h_fn.as_ref(), t).0);
        }
        // dipole coefficient A = (1/π) ∫ h
        let quad = QuadOptions {
            rel_tol: 1e-12,
            abs_tol: 1e-15,
            max_intervals: 2048,
        };
        let dipole = integrate_with_hints(
            |t| h_fn.eval(t),
            support.0,
            support.1,
            &[0.5 * (support.0 + support.1)],
            quad,
        )
        .value
            / std::f64::consts::PI;
        let label = format!("pair-logdet[{}]", h_fn.label());
        PairField {
            g: SampledFunction::new(grid, values).expect("pair grid is valid"),
            h_fn,
            support,
            t_max,
            dipole,
            label,
        }
    }

    fn f_at(&self, t: f64) -> Complex {
        Complex::new(self.g.eval_clamped(t), self.h_fn.eval(t))
    }

    /// `∫_{|t|>T} H(z g_model(t)) dt` with `g_model = -A/t`; odd powers
    /// cancel between the two sides.
    fn tail(&self, z: Complex) -> f64 {
        let za = z * self.dipole;
        if za.norm() > 0.25 * self.t_max {
            return f64::NAN; // outside the model's validity
        }
        let mut acc = 0.0;
        let mut pow = za * za; // k = 2
        let mut k = 2u32;
        loop {
            // -2 Re((zA)^k) / (k (k-1) T^{k-1}) for even k
            let term = -2.0 * pow.re / (k as f64 * (k as f64 - 1.0) * self.t_max.powi(k as i32 - 1));
            acc += term;
            if pow.norm() / self.t_max.powi(k as i32 - 1) < 1e-16 * acc.abs().max(1e-300) || k > 40 {
                break;
            }
            pow *= za * za;
            k += 2;
        }
        acc
    }
}

impl crate::canonical::Field for PairField {
    fn eval(&self, z: Complex) -> f64 {
        if z.norm() == 0.0 {
            return 0.0;
        }
        let quad = QuadOptions {
            rel_tol: 1e-10,
            abs_tol: 1e-13,
            max_intervals: 8192,
        };
        let integrand = |t: f64| {
            let w = z * self.f_at(t);
            let v = crate::kernels::kernel_h(w);
            if v.is_finite() {
                v
            } else {
                0.0
            }
        };
        // hints: support edges plus the dip radius |t| ~ |z| A where
        // |z f| crosses 1
        let mut hints = vec![self.support.0, 0.0, self.support.1];
        let dip = z.norm() * self.dipole.abs();
        for sign in [-1.0, 1.0] {
            hints.push(sign * dip);
            hints.push(sign * 0.5 * dip);
            hints.push(sign * 2.0 * dip);
        }
        let core = integrate_with_hints(integrand, -self.t_max, self.t_max, &hints, quad).value;
        core + self.tail(z)
    }

    fn label(&self) -> String {
        self.label.clone()
    }

    fn feature_points(&self) -> Vec<Complex> {
        let mut points = Vec::new();
        let (a, b) = self.support;
        for i in 0..48 {
            let t = a + (b - a) * (i as f64 + 0.5) / 48.0;
            let f = self.f_at(t);
            if f.norm() > 1e-12 {
                points.push(1.0 / f);
            }
        }
        points
    }
}

impl SampledFunction {
    fn eval_clamped(&self, t: f64) -> f64 {
        let lo = self.grid[0];
        let hi = *self.grid.last().unwrap();
        if t <= lo {
            return self.values[0];
        }
        if t >= hi {
            return *self.values.last().unwrap();
        }
        self.local_cubic(t).0
    }
}

// ---------------------------------------------------------------------
// Closed-form inputs
// ---------------------------------------------------------------------

/// `amplitude * exp(-1/(1 - s²))`, `s = (t - center)/width`, supported
/// on `|s| < 1`.
#[derive(Clone, Copy, Debug)]
pub struct SmoothBump {
    pub center: f64,
    pub width: f64,
    pub amplitude: f64,
}

impl SmoothBump {
    pub fn standard() -> Self {
        SmoothBump {
            center: 0.0,
            width: 1.0,
            amplitude: 1.0,
        }
    }
}

impl RealFunction for SmoothBump {
    fn eval(&self, t: f64) -> f64 {
        let s = (t - self.center) / self.width;
        if s.abs() >= 1.0 {
            return 0.0;
        }
        self.amplitude * (-1.0 / (1.0 - s * s)).exp()
    }

    fn derivative(&self, t: f64) -> f64 {
        let s = (t - self.center) / self.width;
        if s.abs() >= 1.0 {
            return 0.0;
        }
        let q = 1.0 - s * s;
        self.amplitude * (-1.0 / q).exp() * (-2.0 * s / (q * q)) / self.width
    }

    fn window(&self) -> (f64, f64) {
        (self.center - self.width, self.center + self.width)
    }

    fn label(&self) -> String {
        format!("bump[c={},w={},a={}]", self.center, self.width, self.amplitude)
    }
}

/// Odd modulation `s * bump(s)`; its transform tests the parity
/// contract from the other side.
#[derive(Clone, Copy, Debug)]
pub struct OddBump {
    pub base: SmoothBump,
}

impl RealFunction for OddBump {
    fn eval(&self, t: f64) -> f64 {
        let s = (t - self.base.center) / self.base.width;
        s * self.base.eval(t)
    }

    fn derivative(&self, t: f64) -> f64 {
        let s = (t - self.base.center) / self.base.width;
        self.base.eval(t) / self.base.width + s * self.base.derivative(t)
    }

    fn window(&self) -> (f64, f64) {
        self.base.window()
    }

    fn label(&self) -> String {
        format!("odd-{}", self.base.label())
    }
}

/// `cos(freq * (t - center)) * bump`; wiggly but still C^∞.
#[derive(Clone, Copy, Debug)]
pub struct ModulatedBump {
    pub base: SmoothBump,
    pub freq: f64,
}

impl RealFunction for ModulatedBump {
    fn eval(&self, t: f64) -> f64 {
        (self.freq * (t - self.base.center)).cos() * self.base.eval(t)
    }

    fn derivative(&self, t: f64) -> f64 {
        let phase = self.freq * (t - self.base.center);
        phase.cos() * self.base.derivative(t) - self.freq * phase.sin() * self.base.eval(t)
    }

    fn window(&self) -> (f64, f64) {
        self.base.window()
    }

    fn label(&self) -> String {
        format!("cos{}-{}", self.freq, self.base.label())
    }
}

/// Sum of two bumps.
#[derive(Clone, Copy, Debug)]
pub struct DoubleBump {
    pub first: SmoothBump,
    pub second: SmoothBump,
}

impl RealFunction for DoubleBump {
    fn eval(&self, t: f64) -> f64 {
        self.first.eval(t) + self.second.eval(t)
    }

    fn derivative(&self, t: f64) -> f64 {
        self.first.derivative(t) + self.second.derivative(t)
    }

    fn window(&self) -> (f64, f64) {
        let (a1, b1) = self.first.window();
        let (a2, b2) = self.second.window();
        (a1.min(a2), b1.max(b2))
    }

    fn label(&self) -> String {
        "double-bump".to_string()
    }
}

/// `1/(1 + t²)` with the analytic rational tail beyond `|t| = cut`:
/// decaying rather than compactly supported, admitted because its
/// transform is known exactly (`g(x) = -x/(1+x²)`).
#[derive(Clone, Copy, Debug)]
pub struct RationalDecay {
    pub cut: f64,
}

impl RealFunction for RationalDecay {
    fn eval(&self, t: f64) -> f64 {
        1.0 / (1.0 + t * t)
    }

    fn derivative(&self, t: f64) -> f64 {
        let d = 1.0 + t * t;
        -2.0 * t / (d * d)
    }

    fn window(&self) -> (f64, f64) {
        (-self.cut, self.cut)
    }

    fn tail(&self) -> Option<RationalTail> {
        Some(RationalTail {
            coeff: 1.0,
            cut: self.cut,
        })
    }

    fn label(&self) -> String {
        "rational".to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_input_gives_zero() {
        struct Zero;
        impl RealFunction for Zero {
            fn eval(&self, _: f64) -> f64 {
                0.0
            }
            fn window(&self) -> (f64, f64) {
                (-1.0, 1.0)
            }
        }
        for &x in &[-0.5, 0.0, 0.3, 2.0] {
            let (g, _) = hilbert_pv(&Zero, x);
            assert_eq!(g, 0.0);
        }
    }

    #[test]
    fn rational_fixture_matches_residue_oracle() {
        // g(x) = -x/(1+x²), i.e. f = -1/(x+i)
        let h = RationalDecay { cut: 40.0 };
        for &x in &[0.0, 0.5, -0.5, 1.0, 3.0, -7.5] {
            let (g, _) = hilbert_pv(&h, x);
            let expected = -x / (1.0 + x * x);
            assert!(
                (g - expected).abs() < 1e-9,
                "x={x}: got {g}, expected {expected}"
            );
        }
    }

    #[test]
    fn bump_value_matches_independent_oracle() {
        // frozen from a high-precision p.v. quadrature of the standard bump
        let h = SmoothBump::standard();
        let (g_half, _) = hilbert_pv(&h, 0.5);
        assert!(
            (g_half - (-0.23764407805423107)).abs() < 1e-8,
            "g(0.5) = {g_half}"
        );
        let (g_quarter, _) = hilbert_pv(&h, 0.25);
        assert!(
            (g_quarter - (-0.12368927965217608)).abs() < 1e-8,
            "g(0.25) = {g_quarter}"
        );
        // even h has odd g
        let (g_zero, _) = hilbert_pv(&h, 0.0);
        assert!(g_zero.abs() < 1e-12, "g(0) = {g_zero}");
    }

    #[test]
    fn parity_even_input_odd_output() {
        let h = SmoothBump::standard();
        let pair = make_hilbert_pair(&h, PairOptions { points: 257, ..Default::default() });
        let n = pair.grid.len();
        for i in 0..n {
            let j = n - 1 - i;
            assert!(
                (pair.g[i] + pair.g[j]).abs() <= 1e-12,
                "g({}) + g({}) = {}",
                pair.grid[i],
                pair.grid[j],
                pair.g[i] + pair.g[j]
            );
        }
    }

    #[test]
    fn pair_distributions_match_direct_threshold_count() {
        use crate::measures::{distribution, Projector};
        let h = SmoothBump::standard();
        let pair = make_hilbert_pair(&h, PairOptions { points: 512, ..Default::default() });
        let f = pair.to_measured_function();
        for &lambda in &[0.05, 0.1, 0.2, 0.3] {
            let direct: f64 = pair
                .grid
                .iter()
                .enumerate()
                .filter(|&(i, _)| pair.h[i].abs() >= lambda)
                .map(|(i, _)| {
                    let n = pair.grid.len();
                    match i {
                        0 => 0.5 * (pair.grid[1] - pair.grid[0]),
                        _ if i == n - 1 => 0.5 * (pair.grid[n - 1] - pair.grid[n - 2]),
                        _ => 0.5 * (pair.grid[i + 1] - pair.grid[i - 1]),
                    }
                })
                .sum();
            let viaf = distribution(&f, lambda, Projector::ImagPart).unwrap();
            assert!((direct - viaf).abs() < 1e-12);
        }
    }

    #[test]
    fn sampled_function_round_trip() {
        let h = SmoothBump::standard();
        let n = 2048;
        let grid: Vec<f64> = (0..n).map(|i| -2.0 + 4.0 * i as f64 / (n - 1) as f64).collect();
        let values: Vec<f64> = grid.iter().map(|&t| h.eval(t)).collect();
        let sampled = SampledFunction::new(grid, values).unwrap();
        let (g_sampled, _) = hilbert_pv(&sampled, 0.5);
        let (g_exact, _) = hilbert_pv(&h, 0.5);
        assert!(
            (g_sampled - g_exact).abs() < 1e-6,
            "{g_sampled} vs {g_exact}"
        );
    }

    #[test]
    fn refined_pair_stabilizes() {
        let h = SmoothBump::standard();
        let pair = make_hilbert_pair_refined(&h, 1e-8, 4096);
        assert!(pair.grid.len() >= 2048);
        assert_eq!(pair.convention, CONVENTION_TAG);
    }
}
