//! The canonical kernel of genus one and the semi-disk Nevanlinna kernels.
//!
//! `H(z) = log|1 - z| + Re z` drives every canonical integral in the
//! crate. The three semi-disk kernels `K1`, `K2`, `K3` come with closed
//! forms for their sin-weighted circle averages and for their averages
//! along the tangent-circle locus; both families are cross-checked
//! against direct quadrature in the verification suites.

use crate::error::{Error, Result};
use crate::measures::Complex;

/// Series cutoff: below this modulus `H` is summed as a power series to
/// avoid the cancellation between `log|1-z|` and `Re z`.
const H_SERIES_RADIUS: f64 = 0.125;

/// Canonical kernel of genus one, `H(z) = log|1-z| + Re z`.
///
/// Returns `-inf` at the logarithmic singularity `z = 1`.
pub fn kernel_h(z: Complex) -> f64 {
    let modulus = z.norm();
    if modulus <= H_SERIES_RADIUS {
        // H(z) = -sum_{k>=2} Re(z^k)/k
        let mut power = z * z;
        let mut acc = 0.0;
        for k in 2..=26u32 {
            let term = power.re / f64::from(k);
            acc -= term;
            power *= z;
            if power.norm() < 1e-18 * acc.abs().max(1e-30) {
                break;
            }
        }
        return acc;
    }
    let one_minus = Complex::new(1.0 - z.re, -z.im);
    let dist = one_minus.norm();
    if dist == 0.0 {
        return f64::NEG_INFINITY;
    }
    dist.ln() + z.re
}

/// Difference `H(z/zeta) - H(z/conj(zeta))` used by the half-plane
/// comparison arguments; bounded by `2 |z| |Im(1/zeta)|` when both
/// points lie in the closed upper half-plane.
pub fn kernel_h_reflection_difference(z: Complex, zeta: Complex) -> f64 {
    kernel_h(z / zeta) - kernel_h(z / zeta.conj())
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::domain(msg.to_string()))
    }
}

/// Poisson kernel of the upper semi-disk for the diameter part,
/// `K1(z, t) = (r sin θ / π) [ |z-t|^{-2} - R^2 |R^2 - z t|^{-2} ]`.
pub fn kernel_k1(z: Complex, t: f64, radius: f64) -> Result<f64> {
    require(radius > 0.0, "kernel_k1: R must be positive")?;
    require(z.norm() < radius, "kernel_k1: |z| < R required")?;
    require(t.abs() <= radius, "kernel_k1: |t| <= R required")?;
    require(z.im >= 0.0, "kernel_k1: Im z >= 0 required")?;
    let diff = z - Complex::new(t, 0.0);
    if diff.norm_sqr() == 0.0 {
        return Ok(f64::INFINITY);
    }
    let r2 = radius * radius;
    let denom = Complex::new(r2 - z.re * t, -z.im * t);
    Ok(z.im / std::f64::consts::PI * (1.0 / diff.norm_sqr() - r2 / denom.norm_sqr()))
}

/// Poisson kernel of the upper semi-disk for the arc part (`φ` is the
/// boundary angle on `|ζ| = R`).
pub fn kernel_k2(z: Complex, radius: f64, phi: f64) -> Result<f64> {
    require(radius > 0.0, "kernel_k2: R must be positive")?;
    require(z.norm() < radius, "kernel_k2: |z| < R required")?;
    let r = z.norm();
    let theta = z.arg();
    let r2 = radius * radius;
    let num = 4.0 * radius * r * (r2 - r * r) * phi.sin() * theta.sin();
    let d1 = r2 + r * r - 2.0 * radius * r * (phi - theta).cos();
    let d2 = r2 + r * r - 2.0 * radius * r * (phi + theta).cos();
    Ok(num / (2.0 * std::f64::consts::PI * d1 * d2))
}

/// Green function of the upper semi-disk,
/// `K3(z, ζ) = log | (z - conj ζ)(R^2 - z conj ζ) / ((z - ζ)(R^2 - z ζ)) |`.
///
/// Returns `+inf` at `z = ζ`.
pub fn kernel_k3(z: Complex, zeta: Complex, radius: f64) -> Result<f64> {
    require(radius > 0.0, "kernel_k3: R must be positive")?;
    require(z.norm() < radius, "kernel_k3: |z| < R required")?;
    require(zeta.norm() < radius, "kernel_k3: |zeta| < R required")?;
    let r2 = radius * radius;
    let num = (z - zeta.conj()) * (Complex::new(r2, 0.0) - z * zeta.conj());
    let den = (z - zeta) * (Complex::new(r2, 0.0) - z * zeta);
    if den.norm_sqr() == 0.0 {
        return Ok(f64::INFINITY);
    }
    Ok(0.5 * (num.norm_sqr() / den.norm_sqr()).ln())
}

/// Closed form of `(1/r) ∫_0^π K1(r e^{iθ}, t) sin θ dθ`.
///
/// Equals `(1/2)[min(1/t², 1/r²) - 1/R²]`; the one-argument `min`
/// sometimes seen in print is a typo for this two-argument form, which
/// is the only reading that matches the quadrature and stays monotone
/// in `1/r`.
pub fn closed_form_k1_integral(t: f64, r: f64, radius: f64) -> Result<f64> {
    require(r > 0.0 && r < radius, "closed_form_k1_integral: 0 < r < R required")?;
    require(t.abs() <= radius, "closed_form_k1_integral: |t| <= R required")?;
    let inv_t2 = 1.0 / (t * t);
    let inv_r2 = 1.0 / (r * r);
    Ok(0.5 * (inv_t2.min(inv_r2) - 1.0 / (radius * radius)))
}

/// Closed form of `(1/r) ∫_0^π K2(r e^{iθ}, R e^{iφ}) sin θ dθ = sin(φ)/R`.
pub fn closed_form_k2_integral(r: f64, radius: f64, phi: f64) -> Result<f64> {
    require(r > 0.0 && r < radius, "closed_form_k2_integral: 0 < r < R required")?;
    Ok(phi.sin() / radius)
}

/// Closed form of `(1/r) ∫_0^π K3(r e^{iθ}, ζ) sin θ dθ`
/// `= π Im ζ [min(1/|ζ|², 1/r²) - 1/R²]`.
pub fn closed_form_k3_integral(zeta: Complex, r: f64, radius: f64) -> Result<f64> {
    require(r > 0.0 && r < radius, "closed_form_k3_integral: 0 < r < R required")?;
    require(
        zeta.im > 0.0 && zeta.norm() < radius,
        "closed_form_k3_integral: zeta must lie in the open upper semi-disk",
    )?;
    let inv = (1.0 / zeta.norm_sqr()).min(1.0 / (r * r));
    Ok(std::f64::consts::PI * zeta.im * (inv - 1.0 / (radius * radius)))
}

/// Closed form of `∫_0^π K1(R e^{iθ} sin θ, t) dθ / (R sin²θ) = 1/t² - 1/R²`.
pub fn tangent_form_k1_integral(t: f64, radius: f64) -> Result<f64> {
    require(radius > 0.0, "tangent_form_k1_integral: R must be positive")?;
    require(t != 0.0 && t.abs() <= radius, "tangent_form_k1_integral: 0 < |t| <= R required")?;
    Ok(1.0 / (t * t) - 1.0 / (radius * radius))
}

/// Closed form of `∫_0^π K2(R e^{iθ} sin θ, R e^{iφ}) dθ / (R sin²θ) = (2/R) sin φ`.
pub fn tangent_form_k2_integral(radius: f64, phi: f64) -> Result<f64> {
    require(radius > 0.0, "tangent_form_k2_integral: R must be positive")?;
    Ok(2.0 * phi.sin() / radius)
}

/// Closed form of `∫_0^π K3(R e^{iθ} sin θ, ζ) dθ / (R sin²θ)`
/// `= 2π [min(|Im(1/ζ)|, 1/R) - Im ζ / R²]`.
pub fn tangent_form_k3_integral(zeta: Complex, radius: f64) -> Result<f64> {
    require(radius > 0.0, "tangent_form_k3_integral: R must be positive")?;
    require(
        zeta.im > 0.0 && zeta.norm() < radius,
        "tangent_form_k3_integral: zeta must lie in the open upper semi-disk",
    )?;
    let im_inv = (1.0 / zeta).im.abs();
    Ok(2.0 * std::f64::consts::PI * (im_inv.min(1.0 / radius) - zeta.im / (radius * radius)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate_with_hints, QuadOptions};
    use std::f64::consts::PI;

    fn sin_weighted_average<F: Fn(f64) -> f64>(f: F, r: f64) -> f64 {
        let res = integrate_with_hints(
            |th| f(th) * th.sin(),
            0.0,
            PI,
            &[PI / 4.0, PI / 2.0, 3.0 * PI / 4.0],
            QuadOptions::with_rel_tol(1e-12),
        );
        res.value / r
    }

    #[test]
    fn h_basic_values() {
        assert_eq!(kernel_h(Complex::new(0.0, 0.0)), 0.0);
        assert!((kernel_h(Complex::new(2.0, 0.0)) - 2.0).abs() < 1e-15);
        let expected = 0.5 * 2.0f64.ln();
        assert!((kernel_h(Complex::new(0.0, 1.0)) - expected).abs() < 1e-15);
        assert_eq!(kernel_h(Complex::new(1.0, 0.0)), f64::NEG_INFINITY);
    }

    #[test]
    fn h_conjugation_symmetry() {
        for &(re, im) in &[(0.3, 0.7), (-1.5, 2.0), (0.01, 0.003), (5.0, -1.0)] {
            let z = Complex::new(re, im);
            assert_eq!(kernel_h(z), kernel_h(z.conj()));
        }
    }

    #[test]
    fn h_series_matches_direct_formula() {
        // straddle the series boundary
        for &m in &[0.01, 0.05, 0.124, 0.126, 0.5] {
            for k in 0..8 {
                let th = 0.37 + k as f64 * 0.7;
                let z = Complex::from_polar(m, th);
                let direct = (Complex::new(1.0, 0.0) - z).norm().ln() + z.re;
                let ours = kernel_h(z);
                // the direct formula itself loses ~eps/|H| near 0, so the
                // comparison is only as tight as that cancellation
                assert!(
                    (ours - direct).abs() <= 1e-10 * direct.abs().max(1e-6 * m * m),
                    "m={m} th={th}: {ours} vs {direct}"
                );
            }
        }
    }

    #[test]
    fn h_small_argument_is_quadratic() {
        // H(z) = -Re(z^2)/2 + O(z^3); the series branch must keep full
        // relative accuracy for tiny arguments.
        let z = Complex::new(1e-9, 2e-9);
        let expected = -0.5 * (z * z).re;
        let got = kernel_h(z);
        // the cubic term enters at relative size |z|
        assert!((got - expected).abs() < 1e-8 * expected.abs());
    }

    #[test]
    fn k1_point_value() {
        // z = i, t = 0, R = 2 -> (1/pi)(1 - 4/16) = 3/(4 pi)
        let v = kernel_k1(Complex::new(0.0, 1.0), 0.0, 2.0).unwrap();
        assert!((v - 3.0 / (4.0 * PI)).abs() < 1e-15);
    }

    #[test]
    fn k1_domain_error() {
        assert!(kernel_k1(Complex::new(0.0, 1.0), 3.0, 2.0).is_err());
    }

    #[test]
    fn k2_point_value() {
        // direct substitution at z = i, R = 2, phi = pi/2 gives 4/(3 pi)
        let v = kernel_k2(Complex::new(0.0, 1.0), 2.0, PI / 2.0).unwrap();
        assert!((v - 4.0 / (3.0 * PI)).abs() < 1e-15, "got {v}");
    }

    #[test]
    fn k2_domain_error() {
        assert!(kernel_k2(Complex::new(0.0, 2.5), 2.0, 1.0).is_err());
    }

    #[test]
    fn k3_zero_on_real_axis_and_symmetric() {
        let zeta = Complex::new(0.4, 0.7);
        let z_real = Complex::new(0.3, 0.0);
        let v = kernel_k3(z_real, zeta, 2.0).unwrap();
        assert!(v.abs() < 1e-14);
        // symmetry K3(z, zeta) = K3(zeta, z)
        let a = Complex::new(0.2, 0.5);
        let b = Complex::new(-0.4, 0.9);
        let v1 = kernel_k3(a, b, 2.0).unwrap();
        let v2 = kernel_k3(b, a, 2.0).unwrap();
        assert!((v1 - v2).abs() < 1e-13);
    }

    #[test]
    fn k3_conjugate_argument() {
        let zeta = Complex::new(0.5, 0.8);
        let v = kernel_k3(zeta.conj(), zeta, 3.0).unwrap();
        let r2 = 9.0;
        let num = (zeta.conj() - zeta.conj()).norm_sqr();
        assert_eq!(num, 0.0); // z - conj(zeta) vanishes: kernel -> -inf side
        // direct formula check instead via the expression
        let z = zeta.conj();
        let den = ((z - zeta) * (Complex::new(r2, 0.0) - z * zeta)).norm();
        let numv = ((z - zeta.conj()) * (Complex::new(r2, 0.0) - z * zeta.conj())).norm();
        let expected = (numv / den).ln();
        assert_eq!(v, expected);
        assert_eq!(v, f64::NEG_INFINITY);
    }

    #[test]
    fn closed_form_k1_examples() {
        // min picks 1/t^2 when r < t
        let v = closed_form_k1_integral(1.0, 0.5, 4.0).unwrap();
        assert!((v - 15.0 / 32.0).abs() < 1e-15);
        // min picks 1/r^2 when r > t
        let v = closed_form_k1_integral(1.0, 2.0, 4.0).unwrap();
        assert!((v - 3.0 / 32.0).abs() < 1e-15);
        // (*5) reference point
        let v = closed_form_k2_integral(1.0, 2.0, PI / 2.0).unwrap();
        assert!((v - 0.5).abs() < 1e-15);
    }

    #[test]
    fn closed_forms_match_quadrature() {
        // K1
        for &(t, r, radius) in &[(1.0, 2.0, 4.0), (1.0, 0.5, 4.0), (3.0, 0.7, 5.0), (-2.0, 1.3, 6.0)] {
            let num = sin_weighted_average(
                |th| kernel_k1(Complex::from_polar(r, th), t, radius).unwrap(),
                r,
            );
            let cf = closed_form_k1_integral(t, r, radius).unwrap();
            assert!((num - cf).abs() <= 1e-9 * cf.abs().max(1e-12), "K1 t={t} r={r}: {num} vs {cf}");
        }
        // K2
        for &(r, radius, phi) in &[(1.0, 2.0, PI / 2.0), (0.3, 2.0, 1.0), (1.5, 2.0, 2.5)] {
            let num = sin_weighted_average(
                |th| kernel_k2(Complex::from_polar(r, th), radius, phi).unwrap(),
                r,
            );
            let cf = closed_form_k2_integral(r, radius, phi).unwrap();
            assert!((num - cf).abs() <= 1e-9 * cf.abs(), "K2 r={r} phi={phi}: {num} vs {cf}");
        }
        // K3
        for &(zr, zi, r, radius) in &[(0.3, 0.4, 1.0, 2.0), (-0.5, 1.0, 0.4, 3.0)] {
            let zeta = Complex::new(zr, zi);
            let num = sin_weighted_average(
                |th| kernel_k3(Complex::from_polar(r, th), zeta, radius).unwrap(),
                r,
            );
            let cf = closed_form_k3_integral(zeta, r, radius).unwrap();
            assert!((num - cf).abs() <= 1e-9 * cf.abs(), "K3 zeta={zeta}: {num} vs {cf}");
        }
    }

    #[test]
    fn tangent_forms_match_quadrature() {
        let radius = 3.0;
        let tangent_avg = |f: &dyn Fn(Complex) -> f64| -> f64 {
            let res = integrate_with_hints(
                |th: f64| {
                    let s = th.sin();
                    let z = Complex::from_polar(radius * s, th);
                    f(z) / (radius * s * s)
                },
                1e-9,
                PI - 1e-9,
                &[PI / 4.0, PI / 2.0, 3.0 * PI / 4.0],
                QuadOptions {
                    rel_tol: 1e-11,
                    abs_tol: 1e-14,
                    max_intervals: 8192,
                },
            );
            res.value
        };

        let t = 1.0;
        let v = tangent_avg(&|z| kernel_k1(z, t, radius).unwrap());
        let cf = tangent_form_k1_integral(t, radius).unwrap();
        assert!((v - cf).abs() <= 1e-6 * cf.abs(), "K1 tangent: {v} vs {cf}");

        let phi = 1.1;
        let v = tangent_avg(&|z| kernel_k2(z, radius, phi).unwrap());
        let cf = tangent_form_k2_integral(radius, phi).unwrap();
        assert!((v - cf).abs() <= 1e-6 * cf.abs(), "K2 tangent: {v} vs {cf}");

        let zeta = Complex::new(0.5, 0.6);
        let v = tangent_avg(&|z| kernel_k3(z, zeta, radius).unwrap());
        let cf = tangent_form_k3_integral(zeta, radius).unwrap();
        assert!((v - cf).abs() <= 1e-6 * cf.abs(), "K3 tangent: {v} vs {cf}");
    }

    #[test]
    fn h_growth_bound_constant_is_stable() {
        // sup H(z) (1+|z|)/|z|^2 over a logarithmic grid; refine once and
        // require the fitted constant to move by < 2%.
        let fit = |n_r: usize, n_th: usize| -> f64 {
            let mut best: f64 = 0.0;
            for i in 0..n_r {
                let r = 10f64.powf(-3.0 + 6.0 * i as f64 / (n_r - 1) as f64);
                for j in 0..n_th {
                    let th = PI * j as f64 / (n_th - 1) as f64;
                    let z = Complex::from_polar(r, th);
                    let h = kernel_h(z);
                    if h.is_finite() {
                        best = best.max(h * (1.0 + r) / (r * r));
                    }
                }
            }
            best
        };
        let coarse = fit(200, 64);
        let fine = fit(400, 128);
        assert!(fine >= coarse - 1e-12);
        assert!((fine - coarse).abs() <= 0.02 * fine, "{coarse} vs {fine}");
        // empirical constant is comfortably below 2
        assert!(fine < 2.0 && fine > 1.5, "C = {fine}");
    }

    #[test]
    fn reflection_difference_bound() {
        // D(z, zeta) <= 2 |z| |Im(1/zeta)| for z, zeta in closed C_+
        let zs = [
            Complex::new(0.5, 0.1),
            Complex::new(-1.0, 2.0),
            Complex::new(3.0, 0.0),
            Complex::new(0.0, 1.5),
        ];
        let zetas = [
            Complex::new(1.0, 1.0),
            Complex::new(-0.5, 0.3),
            Complex::new(2.0, 0.01),
            Complex::new(0.2, 5.0),
        ];
        for &z in &zs {
            for &zeta in &zetas {
                let d = kernel_h_reflection_difference(z, zeta);
                let bound = 2.0 * z.norm() * (1.0 / zeta).im.abs();
                assert!(d <= bound + 1e-12, "z={z} zeta={zeta}: D={d} bound={bound}");
            }
        }
    }
}
