//! Radial characteristics of subharmonic fields: maximum modulus,
//! Nevanlinna and Tsuji characteristics, the controlled quantity
//! `δ(r) = 𝔫(r) + u⁻(r) + u⁻(-r)`, its transform `δ*`, and the
//! right-hand-side functionals of the main estimates.

use rayon::prelude::*;

use crate::canonical::Field;
use crate::curves::{LogGrid, RadialCurve};
use crate::error::{Error, Result};
use crate::measures::{counting_levin_tsuji, counting_mu, Complex, PlanarMeasure};
use crate::quad::{integrate_with_hints, QuadOptions};

use std::f64::consts::{PI, TAU};

/// `M(r, u) = max_{|z| <= r} u(z)`, searched on the circle `|z| = r`
/// (legitimate for subharmonic fields by the maximum principle).
/// Doubles the angular resolution until the relative change is below
/// `1e-6`, then polishes the best angle by golden-section search.
pub fn max_modulus(field: &dyn Field, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("max_modulus: r must be positive"));
    }
    let eval = |th: f64| field.eval(Complex::from_polar(r, th));
    let mut n = 64usize;
    let mut best = f64::NEG_INFINITY;
    let mut best_th = 0.0;
    let mut prev = f64::NEG_INFINITY;
    loop {
        let mut bad = 0usize;
        for j in 0..n {
            let th = TAU * (j as f64 + 0.5) / n as f64;
            let v = eval(th);
            if v.is_nan() {
                bad += 1;
                continue;
            }
            if v == f64::NEG_INFINITY {
                continue;
            }
            if v > best {
                best = v;
                best_th = th;
            }
        }
        if bad > n / 2 {
            return Err(Error::SingularField(format!(
                "max_modulus: field undefined on most of |z| = {r}"
            )));
        }
        if best.is_finite() && prev.is_finite() {
            let change = (best - prev).abs();
            if change <= 1e-6 * best.abs().max(1e-12) || n >= 8192 {
                break;
            }
        }
        if n >= 8192 {
            break;
        }
        prev = best;
        n *= 2;
    }
    if !best.is_finite() {
        return Err(Error::SingularField(format!(
            "max_modulus: no finite samples on |z| = {r}"
        )));
    }
    // golden-section polish around the best angle
    let h = TAU / n as f64;
    let (mut a, mut b) = (best_th - h, best_th + h);
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = b - phi * (b - a);
    let mut x2 = a + phi * (b - a);
    let mut f1 = eval(x1);
    let mut f2 = eval(x2);
    for _ in 0..64 {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = eval(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = eval(x1);
        }
    }
    Ok(best.max(f1.max(f2)))
}

fn clamp_part(v: f64, sign: f64) -> f64 {
    if !v.is_finite() {
        // -inf dips have zero positive part; the negative part is a
        // measure-zero spike the integral ignores
        return 0.0;
    }
    (sign * v).max(0.0)
}

/// Nevanlinna characteristic `T(r, u) = (1/2π) ∫ u⁺(r e^{iθ}) dθ`.
pub fn nevanlinna_t(field: &dyn Field, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("nevanlinna_t: r must be positive"));
    }
    let res = integrate_with_hints(
        |th| clamp_part(field.eval(Complex::from_polar(r, th)), 1.0),
        0.0,
        TAU,
        &[PI / 2.0, PI, 1.5 * PI],
        QuadOptions {
            rel_tol: 1e-9,
            abs_tol: 1e-13,
            max_intervals: 2048,
        },
    );
    Ok(res.value / TAU)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TsujiPart {
    Plus,
    Minus,
    Signed,
}

/// Shared engine for the Tsuji-type circle averages: integrates
/// `part(u(r |sin θ| e^{iθ})) / sin²θ` over `(0, 2π)` and divides by
/// `2π r`.
///
/// Uses the cotangent substitution `v = cot θ`, which absorbs the
/// `dθ/sin²θ` weight exactly and turns each tangent circle into the
/// rational parametrization `z(v) = r (v ± i)/(1 + v²)`, `v ∈ R`. The
/// far range `|v| > 1` is folded back by `w = 1/|v|`, so all pieces are
/// finite integrals whose integrands stay bounded for admissible
/// fields (`u(z) = O(|z|²)` near the origin). A power-law probe of the
/// folded integrand near `w = 0` certifies integrability; fields
/// violating the hypotheses (e.g. `u` bounded below away from zero at
/// the origin) are rejected.
fn tsuji_average(field: &dyn Field, r: f64, part: TsujiPart) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("tsuji average: r must be positive"));
    }
    let grab = |u: f64| -> f64 {
        match part {
            TsujiPart::Plus => clamp_part(u, 1.0),
            TsujiPart::Minus => clamp_part(u, -1.0),
            TsujiPart::Signed => {
                if u.is_finite() {
                    u
                } else {
                    0.0
                }
            }
        }
    };
    let opts = QuadOptions {
        rel_tol: 1e-10,
        abs_tol: 1e-13,
        max_intervals: 16384,
    };
    let w_eps = 1e-6;

    // Subdivision seeds. In w = 1/z coordinates the tangent circles
    // are the lines Im w = ∓1/r parametrized by v = r Re w, so the
    // locus passes closest to a feature point ζ at exactly
    // v* = r Re(1/ζ); spikes of u^± live there. Scale hints at
    // |z(v)| = |ζ| and dyadic seeds guard the rest.
    let mut central_hints = vec![-0.5, 0.0, 0.5];
    let mut folded_hints: Vec<f64> = (1..=5).map(|k| 10f64.powi(-k)).collect();
    let push_v = |v: f64, central: &mut Vec<f64>, folded: &mut Vec<f64>| {
        if v.abs() <= 1.0 {
            central.push(v);
        } else {
            folded.push(1.0 / v.abs());
        }
    };
    for zeta in field.feature_points() {
        let rho = zeta.norm();
        if rho <= 0.0 {
            continue;
        }
        let v_star = r * (1.0 / zeta).re;
        push_v(v_star, &mut central_hints, &mut folded_hints);
        if rho < r {
            let v_scale = ((r / rho) * (r / rho) - 1.0).sqrt();
            push_v(v_scale, &mut central_hints, &mut folded_hints);
            push_v(-v_scale, &mut central_hints, &mut folded_hints);
        }
    }
    folded_hints.retain(|&w| w > w_eps && w < 1.0);

    let mut total = 0.0;
    for sign in [1.0f64, -1.0] {
        // z on the upper (+) or lower (-) tangent circle
        let z_of_v = move |v: f64| {
            let d = 1.0 + v * v;
            Complex::new(r * v / d, sign * r / d)
        };
        let central = |v: f64| grab(field.eval(z_of_v(v)));
        total += integrate_with_hints(central, -1.0, 1.0, &central_hints, opts).value;
        for dir in [1.0f64, -1.0] {
            let folded = |w: f64| grab(field.eval(z_of_v(dir / w))) / (w * w);
            // integrability probe: fit |g(w)| ~ c w^alpha near w -> 0
            let g1 = folded(w_eps).abs();
            let g2 = folded(2.0 * w_eps).abs();
            if g1 > 1e-9 {
                let alpha = if g2 > 0.0 {
                    (g1 / g2).ln() / 0.5f64.ln()
                } else {
                    0.0
                };
                if alpha <= -0.98 {
                    return Err(Error::NonIntegrableEndpoint(format!(
                        "tsuji average at r = {r}: integrand grows like w^{alpha:.2} \
                         toward the tangent point; the field violates the \
                         integrability hypotheses"
                    )));
                }
                // residual mass on [0, w_eps] from the power fit
                let c = g1 / w_eps.powf(alpha);
                let sign_g = folded(w_eps).signum();
                total += sign_g * c * w_eps.powf(alpha + 1.0) / (alpha + 1.0);
            }
            total += integrate_with_hints(folded, w_eps, 1.0, &folded_hints, opts).value;
        }
    }
    Ok(total / (TAU * r))
}

/// Tsuji characteristic `𝔗(r, u) = (1/2π r) ∫ u⁺(r|sin θ|e^{iθ}) dθ/sin²θ`.
///
/// The `1/r` normalization is forced by the first fundamental theorem
/// `𝔗 = 𝔪 + ∫_0^r 𝔫/t² dt` (printed statements sometimes drop it).
pub fn tsuji_t(field: &dyn Field, r: f64) -> Result<f64> {
    tsuji_average(field, r, TsujiPart::Plus)
}

/// Tsuji proximity function `𝔪(r, u)` (the `u⁻` average).
pub fn tsuji_m(field: &dyn Field, r: f64) -> Result<f64> {
    tsuji_average(field, r, TsujiPart::Minus)
}

/// Signed tangent-circle average `(1/2πR) ∫ u(R|sin θ|e^{iθ}) dθ/sin²θ`,
/// the left-hand side of the remainder-free Levin formula.
pub fn levin_average(field: &dyn Field, radius: f64) -> Result<f64> {
    tsuji_average(field, radius, TsujiPart::Signed)
}

/// `∫_0^R 𝔫(t)/t² dt` as an exact sum over atoms:
/// each atom contributes `mass · (|Im(1/ζ)| - 1/R)^+`.
pub fn levin_rhs(mu: &PlanarMeasure, radius: f64) -> Result<f64> {
    if !(radius > 0.0) {
        return Err(Error::domain("levin_rhs: R must be positive"));
    }
    Ok(mu
        .atoms()
        .iter()
        .map(|a| {
            let im_inv = (1.0 / a.location).im.abs();
            a.mass * (im_inv - 1.0 / radius).max(0.0)
        })
        .sum())
}

/// `δ(r) = 𝔫(r) + u⁻(r) + u⁻(-r)`; radii where the field hits an atom
/// on the real axis are excluded and reported in the skip list.
pub fn delta_curve(
    field: &dyn Field,
    mu: &PlanarMeasure,
    grid: &LogGrid,
) -> Result<(RadialCurve, Vec<f64>)> {
    let evaluations: Vec<(f64, Option<f64>)> = grid
        .radii
        .par_iter()
        .map(|&r| {
            let n = counting_levin_tsuji(mu, r).expect("positive radius");
            let up = field.eval(Complex::new(r, 0.0));
            let un = field.eval(Complex::new(-r, 0.0));
            if up == f64::NEG_INFINITY || un == f64::NEG_INFINITY || up.is_nan() || un.is_nan() {
                (r, None)
            } else {
                (r, Some(n + (-up).max(0.0) + (-un).max(0.0)))
            }
        })
        .collect();
    let mut radii = Vec::new();
    let mut values = Vec::new();
    let mut skipped = Vec::new();
    for (r, v) in evaluations {
        match v {
            Some(v) => {
                radii.push(r);
                values.push(v);
            }
            None => skipped.push(r),
        }
    }
    if radii.len() < 2 {
        return Err(Error::SingularField(
            "delta_curve: too few regular nodes".to_string(),
        ));
    }
    Ok((RadialCurve::new("delta", radii, values)?, skipped))
}

/// `δ*(r) = r ∫_0^r δ/t² dt + r² ∫_r^∞ (δ/t³)(1 + ln(t/r)) dt`, with
/// fitted power tails below and above the grid. Divergent tails (the
/// convergence conditions fail) surface as errors.
pub fn delta_star(delta: &RadialCurve, r: f64) -> Result<f64> {
    require_coverage(delta, r)?;
    let lower_tail = match delta.low_tail() {
        Some(t) => t.lower_over_t2()?,
        None => 0.0,
    };
    let inner = delta.integrate(delta.r_min(), r, &|t, v| v / (t * t));
    let outer = delta.integrate(r, delta.r_max(), &|t, v| v / (t * t * t) * (1.0 + (t / r).ln()));
    let upper_tail = match delta.high_tail() {
        Some(tail) => tail.upper_over_t3_log(r, 1.0)?,
        None => 0.0,
    };
    Ok(r * (lower_tail + inner) + r * r * (outer + upper_tail))
}

/// `δ*` sampled on a grid; checks the monotonicity pair
/// (`δ*` non-decreasing, `δ*/r²` non-increasing).
pub fn delta_star_curve(delta: &RadialCurve, grid: &LogGrid) -> Result<RadialCurve> {
    let values = grid
        .radii
        .iter()
        .map(|&r| delta_star(delta, r))
        .collect::<Result<Vec<_>>>()?;
    let curve = RadialCurve::new("delta_star", grid.radii.clone(), values)?;
    if !curve.is_nondecreasing(1e-9 * curve.values.last().unwrap().abs().max(1e-12)) {
        return Err(Error::Divergent(
            "delta_star must be non-decreasing".to_string(),
        ));
    }
    Ok(curve)
}

fn require_coverage(curve: &RadialCurve, r: f64) -> Result<()> {
    if r < curve.r_min() || r > curve.r_max() {
        return Err(Error::Coverage(format!(
            "curve `{}` covers [{:.3e}, {:.3e}] but r = {:.3e} was requested",
            curve.name,
            curve.r_min(),
            curve.r_max(),
            r
        )));
    }
    Ok(())
}

/// Borel-type RHS: `r ∫_0^r v/t² dt + r² ∫_r^∞ v/t³ dt`.
pub fn rhs_borel(curve: &RadialCurve, r: f64) -> Result<f64> {
    require_coverage(curve, r)?;
    let lower = match curve.low_tail() {
        Some(t) => t.lower_over_t2()?,
        None => 0.0,
    };
    let inner = curve.integrate(curve.r_min(), r, &|t, v| v / (t * t));
    let outer = curve.integrate(r, curve.r_max(), &|t, v| v / (t * t * t));
    let upper = match curve.high_tail() {
        Some(t) => t.upper_over_t3()?,
        None => 0.0,
    };
    Ok(r * (lower + inner) + r * r * (outer + upper))
}

/// Marcinkiewicz-type RHS built from the Levin-Tsuji counting curve
/// (the same functional shape as [`rhs_borel`]).
pub fn rhs_marcinkiewicz(n_curve: &RadialCurve, r: f64) -> Result<f64> {
    rhs_borel(n_curve, r)
}

/// Theorem-1 RHS: the Marcinkiewicz part plus the proximity term
/// `r² ∫_r^∞ 𝔪(t)/t² dt`.
pub fn rhs_theorem1(n_curve: &RadialCurve, m_curve: &RadialCurve, r: f64) -> Result<f64> {
    require_coverage(m_curve, r)?;
    let base = rhs_marcinkiewicz(n_curve, r)?;
    let outer = m_curve.integrate(r, m_curve.r_max(), &|t, v| v / (t * t));
    let tail = match m_curve.high_tail() {
        Some(t) => t.upper_over_t2()?,
        None => 0.0,
    };
    Ok(base + r * r * (outer + tail))
}

/// Theorem-2 RHS: `r² [ ∫_r^∞ sqrt(δ*(t))/t² dt ]²`.
pub fn rhs_theorem2(delta_star_curve: &RadialCurve, r: f64) -> Result<f64> {
    require_coverage(delta_star_curve, r)?;
    let inner = delta_star_curve.integrate(r, delta_star_curve.r_max(), &|t, v| {
        v.max(0.0).sqrt() / (t * t)
    });
    let tail = match delta_star_curve.high_tail() {
        // sqrt(v) ~ sqrt(c) t^{q/2}: ∫^∞ t^{q/2 - 2} needs q < 2
        Some(t) => {
            if t.exponent >= 2.0 - 1e-9 {
                return Err(Error::Divergent(format!(
                    "∫^∞ sqrt(δ*)/t² with tail exponent {:.3} >= 2",
                    t.exponent
                )));
            }
            let sq = crate::curves::PowerTail {
                anchor: t.anchor,
                value: t.value.max(0.0).sqrt(),
                exponent: 0.5 * t.exponent,
            };
            sq.upper_over_t2()?
        }
        None => 0.0,
    };
    let s = inner + tail;
    Ok(r * r * s * s)
}

/// Corollary-5 RHS with the `log^{3+ε}` weight.
pub fn rhs_corollary5(delta: &RadialCurve, r: f64, eps: f64) -> Result<f64> {
    require_coverage(delta, r)?;
    if !(eps > 0.0) {
        return Err(Error::domain("rhs_corollary5: eps must be positive"));
    }
    let e = 3.0 + eps;
    let lower = match delta.low_tail() {
        Some(t) => t.lower_over_t2()?,
        None => 0.0,
    };
    let inner = delta.integrate(delta.r_min(), r, &|t, v| v / (t * t));
    let outer = delta.integrate(r, delta.r_max(), &|t, v| {
        v / (t * t * t) * (1.0 + (t / r).ln().powf(e))
    });
    let upper = match delta.high_tail() {
        Some(t) => t.upper_over_t3_log(r, e)?,
        None => 0.0,
    };
    Ok(r * (lower + inner) + r * r * (outer + upper))
}

/// Real-line RHS (measures supported on `R`): Borel shape driven by
/// `w(t) = u⁻(t) + u⁻(-t)`.
pub fn rhs_real_line(uminus_curve: &RadialCurve, r: f64) -> Result<f64> {
    rhs_borel(uminus_curve, r)
}

// ---------------------------------------------------------------------
// Curve builders
// ---------------------------------------------------------------------

pub fn mu_curve(mu: &PlanarMeasure, grid: &LogGrid) -> Result<RadialCurve> {
    let values = grid
        .radii
        .iter()
        .map(|&r| counting_mu(mu, r))
        .collect::<Result<Vec<_>>>()?;
    RadialCurve::new("mu", grid.radii.clone(), values)
}

pub fn levin_tsuji_curve(mu: &PlanarMeasure, grid: &LogGrid) -> Result<RadialCurve> {
    let values = grid
        .radii
        .iter()
        .map(|&r| counting_levin_tsuji(mu, r))
        .collect::<Result<Vec<_>>>()?;
    RadialCurve::new("n", grid.radii.clone(), values)
}

pub fn max_modulus_curve(field: &dyn Field, grid: &LogGrid) -> Result<RadialCurve> {
    let values: Result<Vec<f64>> = grid
        .radii
        .par_iter()
        .map(|&r| max_modulus(field, r))
        .collect();
    RadialCurve::new("M", grid.radii.clone(), values?)
}

pub fn nevanlinna_curve(field: &dyn Field, grid: &LogGrid) -> Result<RadialCurve> {
    let values: Result<Vec<f64>> = grid
        .radii
        .par_iter()
        .map(|&r| nevanlinna_t(field, r))
        .collect();
    RadialCurve::new("T", grid.radii.clone(), values?)
}

pub fn tsuji_t_curve(field: &dyn Field, grid: &LogGrid) -> Result<RadialCurve> {
    let values: Result<Vec<f64>> = grid
        .radii
        .par_iter()
        .map(|&r| tsuji_t(field, r))
        .collect();
    RadialCurve::new("tsuji_T", grid.radii.clone(), values?)
}

pub fn tsuji_m_curve(field: &dyn Field, grid: &LogGrid) -> Result<RadialCurve> {
    let values: Result<Vec<f64>> = grid
        .radii
        .par_iter()
        .map(|&r| tsuji_m(field, r))
        .collect();
    RadialCurve::new("tsuji_m", grid.radii.clone(), values?)
}

/// `w(r) = u⁻(r) + u⁻(-r)` on the grid (skipping singular hits like
/// [`delta_curve`] does).
pub fn uminus_real_curve(field: &dyn Field, grid: &LogGrid) -> Result<RadialCurve> {
    let mut radii = Vec::new();
    let mut values = Vec::new();
    for &r in &grid.radii {
        let up = field.eval(Complex::new(r, 0.0));
        let un = field.eval(Complex::new(-r, 0.0));
        if up == f64::NEG_INFINITY || un == f64::NEG_INFINITY || up.is_nan() || un.is_nan() {
            continue;
        }
        radii.push(r);
        values.push((-up).max(0.0) + (-un).max(0.0));
    }
    RadialCurve::new("uminus", radii, values)
}

/// `w(r) = u⁺(r) + u⁺(-r)` (the Cartwright-side quantity).
pub fn uplus_real_curve(field: &dyn Field, grid: &LogGrid) -> Result<RadialCurve> {
    let mut radii = Vec::new();
    let mut values = Vec::new();
    for &r in &grid.radii {
        let up = field.eval(Complex::new(r, 0.0));
        let un = field.eval(Complex::new(-r, 0.0));
        if up.is_nan() || un.is_nan() {
            continue;
        }
        let p = if up.is_finite() { up.max(0.0) } else { 0.0 };
        let q = if un.is_finite() { un.max(0.0) } else { 0.0 };
        radii.push(r);
        values.push(p + q);
    }
    RadialCurve::new("uplus", radii, values)
}

/// `∫_0^∞ v(t)/t² dt` with both tails (Theorem-3 RHS integral).
pub fn full_line_over_t2(curve: &RadialCurve) -> Result<f64> {
    let lower = match curve.low_tail() {
        Some(t) => t.lower_over_t2()?,
        None => 0.0,
    };
    let upper = match curve.high_tail() {
        Some(t) => t.upper_over_t2()?,
        None => 0.0,
    };
    Ok(lower + curve.integrate(curve.r_min(), curve.r_max(), &|t, v| v / (t * t)) + upper)
}

/// Proxy for `limsup_{r->0} v(r)/r`: the maximum of `v/r` over the
/// innermost sampled decade (declared in every report that uses it).
pub fn limsup_origin_proxy(curve: &RadialCurve) -> f64 {
    let r0 = curve.r_min();
    curve
        .radii
        .iter()
        .zip(&curve.values)
        .filter(|&(&r, _)| r <= 10.0 * r0)
        .map(|(&r, &v)| v / r)
        .fold(0.0, f64::max)
}

/// Proxy for `limsup_{r->∞} v(r)/r`: the maximum over the outermost
/// sampled decade.
pub fn limsup_infinity_proxy(curve: &RadialCurve) -> f64 {
    let r1 = curve.r_max();
    curve
        .radii
        .iter()
        .zip(&curve.values)
        .filter(|&(&r, _)| r >= 0.1 * r1)
        .map(|(&r, &v)| v / r)
        .fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{eval_canonical, CanonicalField, UpField};
    use crate::measures::PlanarMeasure;

    struct ZeroField;
    impl Field for ZeroField {
        fn eval(&self, _: Complex) -> f64 {
            0.0
        }
    }

    struct ConstField(f64);
    impl Field for ConstField {
        fn eval(&self, _: Complex) -> f64 {
            self.0
        }
    }

    fn atom_field(atoms: &[(f64, f64, f64)]) -> CanonicalField {
        CanonicalField::new(
            PlanarMeasure::from_atoms(
                atoms
                    .iter()
                    .map(|&(re, im, m)| (Complex::new(re, im), m))
                    .collect(),
            )
            .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn max_modulus_zero_field() {
        assert_eq!(max_modulus(&ZeroField, 1.0).unwrap(), 0.0);
        assert!(max_modulus(&ZeroField, -1.0).is_err());
    }

    #[test]
    fn max_modulus_single_atom_dense_scan_oracle() {
        // max_θ H(e^{iθ}/2) = 1/8 exactly (stationary at cos θ = 1/4)
        let field = atom_field(&[(2.0, 0.0, 1.0)]);
        let m = max_modulus(&field, 1.0).unwrap();
        assert!((m - 0.125).abs() < 1e-9, "M = {m}");
    }

    #[test]
    fn max_modulus_up_field() {
        // M(r, u_p) = r^p, attained on the imaginary axis
        let field = UpField { p: 1.5 };
        for &r in &[0.3, 1.0, 4.0] {
            let m = max_modulus(&field, r).unwrap();
            assert!((m - r.powf(1.5)).abs() < 1e-7 * r.powf(1.5), "M({r}) = {m}");
        }
    }

    #[test]
    fn nevanlinna_zero_and_up() {
        assert_eq!(nevanlinna_t(&ZeroField, 2.0).unwrap(), 0.0);
        // T(r, u_p) = 2 r^p / (π p)
        let field = UpField { p: 1.5 };
        for &r in &[0.5, 1.0, 2.0] {
            let t = nevanlinna_t(&field, r).unwrap();
            let expected = 2.0 * r.powf(1.5) / (PI * 1.5);
            assert!((t - expected).abs() < 1e-8 * expected, "T({r}) = {t}");
        }
    }

    #[test]
    fn nevanlinna_atom_vs_dense_scan() {
        let field = atom_field(&[(1.0, -1.0, 1.0), (0.5, 1.0, 0.5)]);
        let r = 2.0;
        let t = nevanlinna_t(&field, r).unwrap();
        let n = 400_000;
        let brute: f64 = (0..n)
            .map(|j| {
                let th = TAU * (j as f64 + 0.5) / n as f64;
                clamp_part(field.eval(Complex::from_polar(r, th)), 1.0)
            })
            .sum::<f64>()
            / n as f64;
        assert!((t - brute).abs() < 1e-6 * brute, "{t} vs {brute}");
    }

    #[test]
    fn tsuji_zero_everywhere() {
        assert_eq!(tsuji_t(&ZeroField, 1.0).unwrap(), 0.0);
        assert_eq!(tsuji_m(&ZeroField, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn tsuji_nonnegative_field_has_zero_proximity() {
        struct NonNeg;
        impl Field for NonNeg {
            fn eval(&self, z: Complex) -> f64 {
                z.norm_sqr() // subharmonic, vanishing fast enough at 0
            }
        }
        let m = tsuji_m(&NonNeg, 2.0).unwrap();
        assert_eq!(m, 0.0);
        let t = tsuji_t(&NonNeg, 2.0).unwrap();
        assert!(t > 0.0);
    }

    #[test]
    fn tsuji_first_fundamental_identity_single_atom() {
        // T - m = mass (|Im 1/ζ| - 1/r)^+, frozen from the brute oracle
        for &(re, im, mass, r) in &[
            (1.0, -1.0, 1.0, 3.0),
            (0.3, 0.4, 2.0, 2.0),
            (0.5, 1.0, 1.0, 3.0),
        ] {
            let field = atom_field(&[(re, im, mass)]);
            let mu = field.measure().clone();
            let t = tsuji_t(&field, r).unwrap();
            let m = tsuji_m(&field, r).unwrap();
            let rhs = levin_rhs(&mu, r).unwrap();
            assert!(
                ((t - m) - rhs).abs() <= 1e-6 * rhs.abs().max(1e-3),
                "atom ({re},{im}): T - m = {} vs {rhs}",
                t - m
            );
        }
    }

    #[test]
    fn tsuji_detects_non_integrable_endpoint() {
        // u ≡ 1 makes the integrand 1/sin²θ: shells cannot decay
        let err = tsuji_t(&ConstField(1.0), 1.0);
        assert!(matches!(err, Err(Error::NonIntegrableEndpoint(_))));
    }

    #[test]
    fn levin_formula_single_atom() {
        for &(re, im, mass, radius) in &[
            (1.0, -1.0, 1.0, 3.0),
            (0.5, 1.0, 1.0, 3.0),
            (2.0, 0.1, 1.5, 4.0),
        ] {
            let field = atom_field(&[(re, im, mass)]);
            let lhs = levin_average(&field, radius).unwrap();
            let rhs = levin_rhs(field.measure(), radius).unwrap();
            assert!(
                (lhs - rhs).abs() <= 1e-6 * rhs.abs().max(1e-3),
                "atom ({re},{im}): {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn delta_examples() {
        // u >= 0 on R ⇒ δ = n
        let field = atom_field(&[(0.0, 1.0, 1.0), (0.0, -1.0, 1.0)]);
        // u(t) = 2 log|1 - t²/(-1)| ... symmetric pair on imaginary axis:
        // u(t) = log(1 + t²)·... must be >= 0 on R; δ reduces to n
        let grid = LogGrid::new(0.1, 10.0, 16).unwrap();
        let (delta, skipped) = delta_curve(&field, field.measure(), &grid).unwrap();
        assert!(skipped.is_empty());
        for (i, &r) in delta.radii.iter().enumerate() {
            let n = counting_levin_tsuji(field.measure(), r).unwrap();
            assert!(
                (delta.values[i] - n).abs() < 1e-12,
                "δ({r}) = {} vs n = {n}",
                delta.values[i]
            );
        }

        // fixture u_p: δ(r) = 2 r^p |cos(pπ/2)| (n ≡ 0 for real support)
        let p = 1.5;
        let field = UpField { p };
        let mu = PlanarMeasure::from_atoms(vec![]).unwrap();
        let (delta, _) = delta_curve(&field, &mu, &grid).unwrap();
        for (i, &r) in delta.radii.iter().enumerate() {
            let expected = 2.0 * r.powf(p) * (p * PI / 2.0).cos().abs();
            assert!(
                (delta.values[i] - expected).abs() <= 1e-12 * expected.max(1.0),
                "δ({r}) = {} vs {expected}",
                delta.values[i]
            );
        }
    }

    #[test]
    fn delta_star_examples() {
        // δ ≡ 0 → δ* ≡ 0
        let grid = LogGrid::new(0.01, 100.0, 32).unwrap();
        let zero = RadialCurve::from_fn("zero", &grid, |_| 0.0).unwrap();
        assert_eq!(delta_star(&zero, 1.0).unwrap(), 0.0);

        // δ(t) = t·1_{[1,2]}: frozen piecewise closed form; the sampled
        // curve carries O(Δs) ramp error at the jump, so check both the
        // absolute band and first-order convergence under refinement
        let step_fn = |t: f64| if (1.0..=2.0).contains(&t) { t } else { 0.0 };
        let coarse_grid = LogGrid::new(0.01, 100.0, 512).unwrap();
        let fine_grid = LogGrid::new(0.01, 100.0, 2048).unwrap();
        let coarse = RadialCurve::from_fn("step", &coarse_grid, step_fn).unwrap();
        let fine = RadialCurve::from_fn("step", &fine_grid, step_fn).unwrap();
        for (r, expected) in [(0.5, 0.25), (1.5, 1.034555330654), (3.0, 2.0794415416798)] {
            let got_c = delta_star(&coarse, r).unwrap();
            let got_f = delta_star(&fine, r).unwrap();
            assert!(
                (got_c - expected).abs() <= 1e-2 * expected,
                "δ*({r}) = {got_c}, expected {expected}"
            );
            assert!(
                (got_f - expected).abs() <= 0.5 * (got_c - expected).abs().max(1e-6 * expected),
                "no refinement convergence at r={r}: {got_f} vs {got_c} (exact {expected})"
            );
        }
    }

    #[test]
    fn delta_star_doubling_exact_on_outputs() {
        let grid = LogGrid::new(0.01, 100.0, 64).unwrap();
        let delta = RadialCurve::from_fn("d", &grid, |t| t.powf(1.4) / (1.0 + t)).unwrap();
        for &r in &[0.05, 0.3, 1.0, 7.0, 40.0] {
            let a = delta_star(&delta, r).unwrap();
            let b = delta_star(&delta, 2.0 * r).unwrap();
            assert!(a <= b * (1.0 + 1e-12), "δ*({r}) > δ*({})", 2.0 * r);
            assert!(b <= 4.0 * a * (1.0 + 1e-12), "δ*(2r) > 4 δ*({r})");
        }
    }

    #[test]
    fn rhs_functionals_zero_and_scaling() {
        let grid = LogGrid::new(0.01, 100.0, 32).unwrap();
        let zero = RadialCurve::from_fn("zero", &grid, |_| 0.0).unwrap();
        assert_eq!(rhs_borel(&zero, 1.0).unwrap(), 0.0);
        assert_eq!(rhs_marcinkiewicz(&zero, 1.0).unwrap(), 0.0);
        assert_eq!(rhs_corollary5(&zero, 1.0, 1.0).unwrap(), 0.0);
        assert_eq!(rhs_real_line(&zero, 1.0).unwrap(), 0.0);
        assert_eq!(rhs_theorem2(&zero, 1.0).unwrap(), 0.0);

        // doubling the input curve doubles every output
        let base = RadialCurve::from_fn("v", &grid, |t| t.powf(1.3) / (1.0 + 0.3 * t)).unwrap();
        let double = base.map("2v", |_, v| 2.0 * v);
        let functionals: [(&dyn Fn(&RadialCurve, f64) -> Result<f64>, &str); 4] = [
            (&|c, r| rhs_borel(c, r), "borel"),
            (&|c, r| rhs_marcinkiewicz(c, r), "marc"),
            (&|c, r| rhs_corollary5(c, r, 1.0), "cor5"),
            (&|c, r| rhs_theorem2(c, r), "thm2"),
        ];
        for &r in &[0.1, 1.0, 10.0] {
            for (f, name) in functionals {
                let a = f(&base, r).unwrap();
                let b = f(&double, r).unwrap();
                assert!(
                    (b - 2.0 * a).abs() <= 1e-9 * b.abs().max(1e-12),
                    "{name} at r={r}: {b} vs 2*{a}"
                );
            }
        }

        // coverage errors name the range
        assert!(matches!(rhs_borel(&base, 1e-5), Err(Error::Coverage(_))));
    }

    #[test]
    fn rhs_step_closed_form() {
        // v = 1 on [1, 2], 0 elsewhere: at r = 1,
        // rhs_borel = r ∫_0^1 0 + r² ∫_1^2 t^{-3} dt = 3/8; jump edges
        // limit the sampled accuracy to O(Δs)
        let step_fn = |t: f64| if (1.0..=2.0).contains(&t) { 1.0 } else { 0.0 };
        let grid = LogGrid::new(0.01, 100.0, 512).unwrap();
        let fine_grid = LogGrid::new(0.01, 100.0, 2048).unwrap();
        let step = RadialCurve::from_fn("step", &grid, step_fn).unwrap();
        let step_fine = RadialCurve::from_fn("step", &fine_grid, step_fn).unwrap();
        let got = rhs_borel(&step, 1.0).unwrap();
        assert!((got - 0.375).abs() < 1e-2 * 0.375, "{got}");
        // and at r = 2: r ∫_1^2 t^{-2} dt = 2 * (1/2) = 1
        let got = rhs_borel(&step, 2.0).unwrap();
        assert!((got - 1.0).abs() < 1e-2, "{got}");
        let got_fine = rhs_borel(&step_fine, 2.0).unwrap();
        assert!((got_fine - 1.0).abs() <= 0.5 * (got - 1.0).abs(), "{got_fine} vs {got}");
    }

    #[test]
    fn monotone_functionals_dominated_curves() {
        let grid = LogGrid::new(0.01, 100.0, 32).unwrap();
        let small = RadialCurve::from_fn("s", &grid, |t| t.powf(1.2).min(5.0)).unwrap();
        let large = small.map("l", |_, v| v * 1.5 + 0.0);
        for &r in &[0.1, 1.0, 10.0] {
            assert!(rhs_borel(&small, r).unwrap() <= rhs_borel(&large, r).unwrap());
            assert!(rhs_corollary5(&small, r, 0.1).unwrap() <= rhs_corollary5(&large, r, 0.1).unwrap());
        }
    }

    #[test]
    fn jensen_counting_and_3t_bounds() {
        // μ(r) log 2 <= T(2r, u) and M(r, u) <= 3 T(2r, u)
        let field = atom_field(&[(1.0, 1.0, 1.0), (-0.5, 2.0, 0.7), (2.0, -1.5, 0.4)]);
        let mu = field.measure();
        for &r in &[0.5, 1.0, 2.0, 5.0] {
            let t2 = nevanlinna_t(&field, 2.0 * r).unwrap();
            let m = max_modulus(&field, r).unwrap();
            let mu_r = counting_mu(mu, r).unwrap();
            assert!(
                mu_r * 2f64.ln() <= t2 * (1.0 + 1e-9) + 1e-12,
                "r={r}: μ log2 = {} vs T(2r) = {t2}",
                mu_r * 2f64.ln()
            );
            assert!(
                m <= 3.0 * t2 * (1.0 + 1e-9) + 1e-12,
                "r={r}: M = {m} vs 3T(2r) = {}",
                3.0 * t2
            );
        }
    }

    #[test]
    fn canonical_growth_envelope() {
        // M(r,u)/r decays toward 0 as r -> 0 and M(r,u)/r² decays as
        // r -> ∞ on the sampled envelope
        let field = atom_field(&[(1.0, 1.0, 1.0), (-2.0, 0.5, 0.5)]);
        let grid = LogGrid::new(1e-3, 1e3, 8).unwrap();
        let m = max_modulus_curve(&field, &grid).unwrap();
        let first = m.values[0] / m.radii[0];
        let mid = m.value_at(1.0) / 1.0;
        assert!(first < 0.2 * mid.abs().max(1e-9), "M/r near 0: {first} vs {mid}");
        let last = m.values.last().unwrap() / (m.r_max() * m.r_max());
        let mid2 = m.value_at(10.0) / 100.0;
        assert!(last < mid2.max(1e-9), "M/r² at ∞ not decaying");
    }

    #[test]
    fn levin_rhs_is_step_integral() {
        let mu = PlanarMeasure::from_atoms(vec![
            (Complex::new(1.0, -1.0), 1.0),
            (Complex::new(0.5, 1.0), 2.0),
        ])
        .unwrap();
        // brute: integrate the step function n(t)/t² on a fine grid
        let radius = 5.0;
        let n_steps = 2_000_000;
        let mut brute = 0.0;
        let t0 = 1e-4;
        let dt = (radius - t0) / n_steps as f64;
        for i in 0..n_steps {
            let t = t0 + (i as f64 + 0.5) * dt;
            brute += counting_levin_tsuji(&mu, t).unwrap() / (t * t) * dt;
        }
        let exact = levin_rhs(&mu, radius).unwrap();
        assert!((brute - exact).abs() < 1e-4 * exact, "{brute} vs {exact}");
    }

    #[test]
    fn up_canonical_field_matches_closed_form_through_characteristics() {
        // δ via the closed form and via the truncated canonical integral
        let p = 1.5;
        let (closed, mu) = crate::canonical::fixture_up(p, 1e3).unwrap();
        let z = Complex::new(0.4, 0.0);
        let quad = QuadOptions {
            rel_tol: 1e-12,
            abs_tol: 1e-14,
            max_intervals: 8192,
        };
        let numeric =
            eval_canonical(&mu, z, quad) + crate::canonical::up_tail_correction(p, 1e3, z);
        let exact = closed.eval(z);
        assert!(
            (numeric - exact).abs() <= 1e-3 * exact.abs(),
            "{numeric} vs {exact}"
        );
    }
}
