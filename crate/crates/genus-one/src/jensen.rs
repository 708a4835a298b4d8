//! Finitely atomic Jensen measures: potentials, moment residuals,
//! polynomial push-forwards, and the distribution functions entering
//! the Jensen-measure corollaries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::measures::{Complex, PlanarMeasure};

/// A compactly supported probability measure with vanishing positive
/// moments, represented by atoms. Continuous Jensen measures enter via
/// quadrature discretization of a contour.
#[derive(Clone, Debug)]
pub struct JensenMeasure {
    atoms: Vec<(Complex, f64)>,
}

impl JensenMeasure {
    /// Builds a measure from weighted atoms; weights must be positive
    /// and sum to 1 within `1e-9`.
    pub fn new(atoms: Vec<(Complex, f64)>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::domain("jensen measure needs at least one atom"));
        }
        if atoms.iter().any(|&(_, w)| !(w > 0.0)) {
            return Err(Error::domain("jensen weights must be positive"));
        }
        let total: f64 = atoms.iter().map(|&(_, w)| w).sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::domain(format!(
                "jensen weights must sum to 1 (got {total})"
            )));
        }
        Ok(JensenMeasure { atoms })
    }

    /// Uniform discretization of the circle `|ζ| = radius` with `n`
    /// equal weights (a Jensen measure for any `radius > 0`).
    pub fn uniform_circle(radius: f64, n: usize) -> Result<Self> {
        if !(radius > 0.0) || n == 0 {
            return Err(Error::domain("uniform_circle: radius > 0 and n >= 1 required"));
        }
        let w = 1.0 / n as f64;
        let atoms = (0..n)
            .map(|k| {
                let th = std::f64::consts::TAU * k as f64 / n as f64;
                (Complex::from_polar(radius, th), w)
            })
            .collect();
        Ok(JensenMeasure { atoms })
    }

    /// Point mass at the origin (the trivial Jensen measure).
    pub fn dirac_origin() -> Self {
        JensenMeasure {
            atoms: vec![(Complex::new(0.0, 0.0), 1.0)],
        }
    }

    pub fn atoms(&self) -> &[(Complex, f64)] {
        &self.atoms
    }

    pub fn support_radius(&self) -> f64 {
        self.atoms
            .iter()
            .map(|&(z, _)| z.norm())
            .fold(0.0, f64::max)
    }

    /// Convex combination of two Jensen measures (again Jensen).
    pub fn mix(&self, other: &JensenMeasure, t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::domain("mix parameter must lie in [0, 1]"));
        }
        let mut atoms = Vec::new();
        for &(z, w) in &self.atoms {
            if w * (1.0 - t) > 0.0 {
                atoms.push((z, w * (1.0 - t)));
            }
        }
        for &(z, w) in &other.atoms {
            if w * t > 0.0 {
                atoms.push((z, w * t));
            }
        }
        JensenMeasure::new(atoms)
    }

    /// The induced genus-one measure `dμ(ζ) = dσ(1/ζ)` whose canonical
    /// integral is the potential (atoms at the origin drop out, they
    /// carry no potential).
    pub fn canonical_measure(&self) -> Result<PlanarMeasure> {
        PlanarMeasure::from_atoms(
            self.atoms
                .iter()
                .filter(|&&(z, _)| z.norm() > 0.0)
                .map(|&(z, w)| (1.0 / z, w))
                .collect(),
        )
    }
}

/// Potential `V_σ(z) = Σ w_k log|1 - z ζ_k|`; `-inf` at `z ζ_k = 1`.
pub fn potential_v(sigma: &JensenMeasure, z: Complex) -> f64 {
    let mut total = 0.0;
    for &(zeta, w) in sigma.atoms() {
        let d = (Complex::new(1.0, 0.0) - z * zeta).norm();
        if d == 0.0 {
            return f64::NEG_INFINITY;
        }
        total += w * d.ln();
    }
    total
}

/// Moment residuals `|Σ w ζ^j|`, `j = 1..=k_max`.
pub fn moment_check(sigma: &JensenMeasure, k_max: usize) -> Result<Vec<f64>> {
    if k_max == 0 {
        return Err(Error::domain("moment_check: K must be >= 1"));
    }
    let mut powers: Vec<Complex> = sigma.atoms().iter().map(|&(z, _)| z).collect();
    let mut out = Vec::with_capacity(k_max);
    for _ in 0..k_max {
        let s: Complex = sigma
            .atoms()
            .iter()
            .zip(&powers)
            .map(|(&(_, w), &p)| p * w)
            .sum();
        out.push(s.norm());
        for (p, &(z, _)) in powers.iter_mut().zip(sigma.atoms()) {
            *p *= z;
        }
    }
    Ok(out)
}

/// Degree-dependent moment tolerance: raw moments grow like
/// `radius^k`, so the acceptance band scales accordingly.
pub fn moment_tolerance(support_radius: f64, k: usize) -> f64 {
    1e-10 * support_radius.max(1.0).powi(k as i32)
}

/// Push-forward under a polynomial with `F(0) = 0` (constant
/// coefficient zero): atoms map through `F`, weights are preserved.
pub fn pushforward(sigma: &JensenMeasure, coeffs: &[f64]) -> Result<JensenMeasure> {
    if coeffs.first().map_or(false, |&c0| c0 != 0.0) {
        return Err(Error::domain("pushforward: polynomial must satisfy F(0) = 0"));
    }
    let eval = |z: Complex| {
        let mut acc = Complex::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    JensenMeasure::new(
        sigma
            .atoms()
            .iter()
            .map(|&(z, w)| (eval(z), w))
            .collect(),
    )
}

/// `(σ(|z| >= λ), σ(|Im z| >= λ))`.
pub fn sigma_distributions(sigma: &JensenMeasure, lambda: f64) -> Result<(f64, f64)> {
    if !(lambda > 0.0) {
        return Err(Error::domain("sigma_distributions: lambda must be positive"));
    }
    let mut total = 0.0;
    let mut imag = 0.0;
    for &(z, w) in sigma.atoms() {
        if z.norm() >= lambda {
            total += w;
        }
        if z.im.abs() >= lambda {
            imag += w;
        }
    }
    Ok((total, imag))
}

/// Exact right-hand side of the Jensen-measure distribution bound:
/// `λ^{-2} ∫_0^λ s σ_I(s) ds + λ^{-1} ∫_λ^∞ σ_I(s) ds`, evaluated as a
/// finite sum over atoms (σ_I is a step function).
pub fn jensen_rhs(sigma: &JensenMeasure, lambda: f64) -> Result<f64> {
    crate::measures::step_distribution_rhs(
        &sigma
            .atoms()
            .iter()
            .map(|&(z, w)| (z.im.abs(), w))
            .collect::<Vec<_>>(),
        lambda,
    )
}

#[derive(Serialize, Deserialize)]
struct JensenJson {
    kind: String,
    jensen: bool,
    atoms: Vec<[f64; 3]>,
}

impl JensenMeasure {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(JensenJson {
            kind: "planar_measure".to_string(),
            jensen: true,
            atoms: self.atoms.iter().map(|&(z, w)| [z.re, z.im, w]).collect(),
        })
        .expect("jensen serialization cannot fail")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: JensenJson = serde_json::from_value(value.clone())?;
        if !parsed.jensen {
            return Err(Error::domain("missing `jensen: true` tag"));
        }
        JensenMeasure::new(
            parsed
                .atoms
                .iter()
                .map(|&[re, im, w]| (Complex::new(re, im), w))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_potential_is_log_plus() {
        // uniform N-th roots satisfy Π (1 - z ζ_k) = 1 - (cz)^N, so the
        // potential equals log|1 - (cz)^N| / N exactly
        let sigma = JensenMeasure::uniform_circle(1.0, 64).unwrap();
        let inside = potential_v(&sigma, Complex::new(0.3, 0.2));
        assert!(inside.abs() < 1e-12);
        let outside = potential_v(&sigma, Complex::new(2.0, 0.0));
        assert!((outside - 2.0f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn circle_moments_vanish() {
        let sigma = JensenMeasure::uniform_circle(0.5, 64).unwrap();
        let residuals = moment_check(&sigma, 10).unwrap();
        for (j, r) in residuals.iter().enumerate() {
            assert!(*r <= moment_tolerance(0.5, j + 1), "moment {} = {r}", j + 1);
        }
    }

    #[test]
    fn dirac_origin_moments() {
        let sigma = JensenMeasure::dirac_origin();
        let residuals = moment_check(&sigma, 6).unwrap();
        assert!(residuals.iter().all(|&r| r == 0.0));
    }

    #[test]
    fn perturbed_weights_reported() {
        let mut atoms: Vec<(Complex, f64)> = (0..16)
            .map(|k| {
                let th = std::f64::consts::TAU * k as f64 / 16.0;
                (Complex::from_polar(1.0, th), 1.0 / 16.0)
            })
            .collect();
        atoms[0].1 += 0.01;
        atoms[1].1 -= 0.01;
        let sigma = JensenMeasure::new(atoms).unwrap();
        let residuals = moment_check(&sigma, 4).unwrap();
        assert!(residuals.iter().any(|&r| r > 1e-4));
    }

    #[test]
    fn pushforward_examples() {
        let sigma = JensenMeasure::uniform_circle(0.5, 64).unwrap();
        // identity
        let same = pushforward(&sigma, &[0.0, 1.0]).unwrap();
        assert_eq!(same.atoms().len(), 64);
        // z^2: circle double-covered at radius 0.25
        let squared = pushforward(&sigma, &[0.0, 0.0, 1.0]).unwrap();
        for &(z, _) in squared.atoms() {
            assert!((z.norm() - 0.25).abs() < 1e-14);
        }
        let residuals = moment_check(&squared, 10).unwrap();
        for (j, r) in residuals.iter().enumerate() {
            assert!(*r <= moment_tolerance(0.25, j + 1), "moment {}: {r}", j + 1);
        }
        // z + z^3/3 keeps moments 1..8 tiny
        let cubic = pushforward(&sigma, &[0.0, 1.0, 0.0, 1.0 / 3.0]).unwrap();
        let residuals = moment_check(&cubic, 8).unwrap();
        for (j, r) in residuals.iter().enumerate() {
            assert!(*r <= 1e-10, "moment {}: {r}", j + 1);
        }
        // F(0) != 0 rejected
        assert!(pushforward(&sigma, &[1.0, 1.0]).is_err());
    }

    #[test]
    fn pushforward_potential_nonnegative_on_grid() {
        // the discretized potential has -inf dips at the atom inverses
        // (radii 1/|F(ζ_k)|); positivity is a statement about the
        // continuum limit, so the grid stays off that annulus
        let sigma = JensenMeasure::uniform_circle(0.4, 96).unwrap();
        let pushed = pushforward(&sigma, &[0.0, 1.0, 0.5]).unwrap();
        let dip_lo = pushed
            .atoms()
            .iter()
            .map(|&(z, _)| 1.0 / z.norm())
            .fold(f64::INFINITY, f64::min);
        let dip_hi = pushed
            .atoms()
            .iter()
            .map(|&(z, _)| 1.0 / z.norm())
            .fold(0.0, f64::max);
        let mut min_v = f64::INFINITY;
        let mut checked = 0;
        for i in 0..40 {
            let r = 10f64.powf(-1.5 + 3.0 * i as f64 / 39.0);
            if r > 0.8 * dip_lo && r < 1.25 * dip_hi {
                continue;
            }
            for j in 0..25 {
                let th = std::f64::consts::TAU * (j as f64 + 0.37) / 25.0;
                let v = potential_v(&pushed, Complex::from_polar(r, th));
                if v.is_finite() {
                    min_v = min_v.min(v);
                    checked += 1;
                }
            }
        }
        assert!(checked > 500);
        assert!(min_v >= -1e-8, "min potential {min_v}");
    }

    #[test]
    fn sigma_distribution_examples() {
        let sigma = JensenMeasure::new(vec![(Complex::new(0.0, 3.0), 1.0)]).unwrap();
        assert_eq!(sigma_distributions(&sigma, 2.0).unwrap(), (1.0, 1.0));
        let sigma = JensenMeasure::new(vec![(Complex::new(3.0, 0.0), 1.0)]).unwrap();
        assert_eq!(sigma_distributions(&sigma, 2.0).unwrap(), (1.0, 0.0));
        assert!(sigma_distributions(&sigma, 0.0).is_err());

        // mixed cloud: brute sums
        let atoms = vec![
            (Complex::new(0.5, 0.5), 0.25),
            (Complex::new(-1.0, 0.1), 0.5),
            (Complex::new(0.0, -2.0), 0.25),
        ];
        let sigma = JensenMeasure::new(atoms.clone()).unwrap();
        for &lambda in &[0.05, 0.2, 0.6, 1.1, 3.0] {
            let (t, i) = sigma_distributions(&sigma, lambda).unwrap();
            let bt: f64 = atoms
                .iter()
                .filter(|&&(z, _)| z.norm() >= lambda)
                .map(|&(_, w)| w)
                .sum();
            let bi: f64 = atoms
                .iter()
                .filter(|&&(z, _)| z.im.abs() >= lambda)
                .map(|&(_, w)| w)
                .sum();
            assert_eq!((t, i), (bt, bi));
            assert!(i <= t);
        }
    }

    #[test]
    fn subharmonic_mean_inequality_for_random_polynomials() {
        // h = log|q| is subharmonic: h(0) <= ∫ h dσ for Jensen σ.
        // For the N-point discretization the inequality carries an
        // O((|atom|/|root|)^N) defect, so the random roots are kept off
        // the atom ring by a fixed band.
        let sigma = JensenMeasure::uniform_circle(0.7, 128).unwrap();
        let pushed = pushforward(&sigma, &[0.0, 1.0, 0.3, -0.2]).unwrap();
        let mut state = 0xDEADBEEFCAFEu64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for sigma in [&sigma, &pushed] {
            let ring_lo = sigma
                .atoms()
                .iter()
                .map(|&(z, _)| z.norm())
                .fold(f64::INFINITY, f64::min);
            let ring_hi = sigma.support_radius();
            for _ in 0..20 {
                let roots: Vec<Complex> = (0..4)
                    .map(|_| {
                        let inside = next() < 0.5;
                        let radius = if inside {
                            (0.05 + 0.4 * next()) * ring_lo
                        } else {
                            (1.7 + 3.0 * next()) * ring_hi
                        };
                        Complex::from_polar(radius, std::f64::consts::TAU * next())
                    })
                    .collect();
                let q = |z: Complex| -> Complex {
                    roots.iter().fold(Complex::new(1.0, 0.0), |acc, &rho| {
                        acc * (z - rho)
                    })
                };
                let h0 = q(Complex::new(0.0, 0.0)).norm().ln();
                let mean: f64 = sigma
                    .atoms()
                    .iter()
                    .map(|&(z, w)| w * q(z).norm().ln())
                    .sum();
                assert!(h0 <= mean + 1e-9, "h(0)={h0} mean={mean}");
            }
        }
    }

    #[test]
    fn potential_matches_canonical_integral() {
        use crate::canonical::eval_canonical;
        use crate::quad::QuadOptions;
        let sigma = JensenMeasure::uniform_circle(0.5, 32).unwrap();
        let mu = sigma.canonical_measure().unwrap();
        for &(re, im) in &[(0.3, 0.1), (1.5, -0.4), (0.0, 4.0)] {
            let z = Complex::new(re, im);
            let v = potential_v(&sigma, z);
            let u = eval_canonical(&mu, z, QuadOptions::default());
            assert!((v - u).abs() <= 1e-12 * v.abs().max(1.0), "{v} vs {u}");
        }
    }

    #[test]
    fn json_round_trip() {
        let sigma = JensenMeasure::uniform_circle(0.5, 8).unwrap();
        let j = sigma.to_json();
        assert_eq!(j["jensen"], serde_json::json!(true));
        let back = JensenMeasure::from_json(&j).unwrap();
        assert_eq!(back.atoms().len(), 8);
    }
}
