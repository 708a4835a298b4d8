//! Non-negative planar measures and their counting and distribution
//! functionals.
//!
//! A measure is a finite list of atoms plus piecewise densities on the
//! real axis (polynomial or `c |x|^alpha`). Density segments never
//! straddle the origin; negative-axis segments are handled by mirroring.
//! Disk membership uses closed disks with a `1e-12` absolute slack so
//! that atoms placed exactly on a circle count deterministically.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

/// Slack for closed-disk membership tests.
pub const DISK_SLACK: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Atom {
    pub location: Complex,
    pub mass: f64,
}

/// Density shape on a segment of the real axis.
#[derive(Clone, Debug, PartialEq)]
pub enum DensityProfile {
    /// `c_0 + c_1 x + c_2 x^2 + ...` in the *original* coordinate.
    Poly(Vec<f64>),
    /// `coeff * |x|^exponent`, `exponent > -1`.
    AbsPower { coeff: f64, exponent: f64 },
}

/// A density on `[a, b]` with `a < b`; `b` may be `+inf` (and `a` `-inf`).
/// Segments are split at the origin on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct LineDensity {
    pub a: f64,
    pub b: f64,
    pub profile: DensityProfile,
}

impl LineDensity {
    pub fn eval(&self, x: f64) -> f64 {
        if x < self.a || x > self.b {
            return 0.0;
        }
        match &self.profile {
            DensityProfile::Poly(c) => {
                let mut acc = 0.0;
                for &ck in c.iter().rev() {
                    acc = acc * x + ck;
                }
                acc
            }
            DensityProfile::AbsPower { coeff, exponent } => coeff * x.abs().powf(*exponent),
        }
    }

    pub fn eval_derivative(&self, x: f64) -> f64 {
        match &self.profile {
            DensityProfile::Poly(c) => {
                let mut acc = 0.0;
                for (k, &ck) in c.iter().enumerate().skip(1).rev() {
                    acc = acc * x + k as f64 * ck;
                }
                acc
            }
            DensityProfile::AbsPower { coeff, exponent } => {
                if x == 0.0 {
                    0.0
                } else {
                    coeff * exponent * x.abs().powf(exponent - 1.0) * x.signum()
                }
            }
        }
    }

    /// Mirror `x -> -x`, mapping a negative-axis segment onto the
    /// positive axis without changing the distribution of mass.
    pub fn mirrored(&self) -> LineDensity {
        let profile = match &self.profile {
            DensityProfile::Poly(c) => DensityProfile::Poly(
                c.iter()
                    .enumerate()
                    .map(|(k, &ck)| if k % 2 == 1 { -ck } else { ck })
                    .collect(),
            ),
            DensityProfile::AbsPower { coeff, exponent } => DensityProfile::AbsPower {
                coeff: *coeff,
                exponent: *exponent,
            },
        };
        LineDensity {
            a: -self.b,
            b: -self.a,
            profile,
        }
    }

    fn is_positive_side(&self) -> bool {
        self.a >= 0.0
    }

    /// Exact mass of the segment restricted to `[lo, hi]` (positive-side
    /// segments only; callers mirror first).
    fn mass_on_positive(&self, lo: f64, hi: f64) -> f64 {
        debug_assert!(self.is_positive_side());
        let lo = lo.max(self.a);
        let hi = hi.min(self.b);
        if lo >= hi {
            return 0.0;
        }
        match &self.profile {
            DensityProfile::Poly(c) => {
                let mut acc = 0.0;
                for (k, &ck) in c.iter().enumerate() {
                    let kk = (k + 1) as f64;
                    acc += ck * (hi.powi(k as i32 + 1) - lo.powi(k as i32 + 1)) / kk;
                }
                acc
            }
            DensityProfile::AbsPower { coeff, exponent } => {
                let e = exponent + 1.0;
                coeff * (hi.powf(e) - lo.powf(e)) / e
            }
        }
    }

    /// `∫ min(1/x, 1/x²) ρ(x) dx` over the positive-side segment,
    /// or `None` if divergent.
    fn genus_norm_positive(&self) -> Option<f64> {
        debug_assert!(self.is_positive_side());
        let (a, b) = (self.a, self.b);
        let inner_hi = b.min(1.0);
        let outer_lo = a.max(1.0);
        let mut total = 0.0;
        if a < inner_hi {
            total += self.integral_over_x(a, inner_hi)?;
        }
        if outer_lo < b {
            total += self.integral_over_x2(outer_lo, b)?;
        }
        Some(total)
    }

    /// `∫_lo^hi ρ(x)/x dx`, `None` if divergent (positive side).
    fn integral_over_x(&self, lo: f64, hi: f64) -> Option<f64> {
        match &self.profile {
            DensityProfile::Poly(c) => {
                let mut acc = 0.0;
                for (k, &ck) in c.iter().enumerate() {
                    if ck == 0.0 {
                        continue;
                    }
                    if k == 0 {
                        if lo == 0.0 {
                            return None;
                        }
                        acc += ck * (hi / lo).ln();
                    } else {
                        acc += ck * (hi.powi(k as i32) - lo.powi(k as i32)) / k as f64;
                    }
                }
                Some(acc)
            }
            DensityProfile::AbsPower { coeff, exponent } => {
                if *exponent == 0.0 {
                    if lo == 0.0 {
                        return None;
                    }
                    Some(coeff * (hi / lo).ln())
                } else {
                    if *exponent < 0.0 && lo == 0.0 {
                        return None;
                    }
                    Some(coeff * (hi.powf(*exponent) - lo.powf(*exponent)) / exponent)
                }
            }
        }
    }

    /// `∫_lo^hi ρ(x)/x² dx`, `None` if divergent (positive side; `hi`
    /// may be infinite).
    fn integral_over_x2(&self, lo: f64, hi: f64) -> Option<f64> {
        match &self.profile {
            DensityProfile::Poly(c) => {
                let mut acc = 0.0;
                for (k, &ck) in c.iter().enumerate() {
                    if ck == 0.0 {
                        continue;
                    }
                    match k {
                        0 => {
                            let upper = if hi.is_infinite() { 0.0 } else { 1.0 / hi };
                            acc += ck * (1.0 / lo - upper);
                        }
                        1 => {
                            if hi.is_infinite() {
                                return None;
                            }
                            acc += ck * (hi / lo).ln();
                        }
                        _ => {
                            if hi.is_infinite() {
                                return None;
                            }
                            let km1 = (k - 1) as f64;
                            acc += ck * (hi.powi(k as i32 - 1) - lo.powi(k as i32 - 1)) / km1;
                        }
                    }
                }
                Some(acc)
            }
            DensityProfile::AbsPower { coeff, exponent } => {
                let e = exponent - 1.0;
                if e == 0.0 {
                    if hi.is_infinite() {
                        return None;
                    }
                    Some(coeff * (hi / lo).ln())
                } else if hi.is_infinite() {
                    if e > 0.0 {
                        return None;
                    }
                    Some(-coeff * lo.powf(e) / e)
                } else {
                    Some(coeff * (hi.powf(e) - lo.powf(e)) / e)
                }
            }
        }
    }

    /// `∫_lo^hi ρ(x) ln x dx` on the positive side (finite bounds).
    fn integral_log_x(&self, lo: f64, hi: f64) -> f64 {
        fn poly_term(k: f64, x: f64) -> f64 {
            // antiderivative of x^k ln x
            if x == 0.0 {
                return 0.0;
            }
            x.powf(k + 1.0) * (x.ln() / (k + 1.0) - 1.0 / ((k + 1.0) * (k + 1.0)))
        }
        match &self.profile {
            DensityProfile::Poly(c) => c
                .iter()
                .enumerate()
                .map(|(k, &ck)| ck * (poly_term(k as f64, hi) - poly_term(k as f64, lo)))
                .sum(),
            DensityProfile::AbsPower { coeff, exponent } => {
                coeff * (poly_term(*exponent, hi) - poly_term(*exponent, lo))
            }
        }
    }
}

/// A non-negative, locally finite measure: atoms plus real-line
/// densities. Carries its genus-one norm (if finite) and a separate
/// principal-value flag for the generalized canonical integral.
#[derive(Clone, Debug)]
pub struct PlanarMeasure {
    atoms: Vec<Atom>,
    densities: Vec<LineDensity>,
    genus_norm: Option<f64>,
    pv_only: bool,
}

/// Result of the genus-one norm computation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NormValue {
    Finite(f64),
    Infinite,
}

impl PlanarMeasure {
    pub fn new(atoms: Vec<Atom>, densities: Vec<LineDensity>) -> Result<Self> {
        for atom in &atoms {
            if !(atom.mass >= 0.0) {
                return Err(Error::domain("atom masses must be non-negative"));
            }
            if atom.location.norm() == 0.0 && atom.mass > 0.0 {
                return Err(Error::domain("atoms at the origin are not representable"));
            }
        }
        let mut split = Vec::new();
        for d in densities {
            if !(d.a < d.b) {
                return Err(Error::domain("density segment must satisfy a < b"));
            }
            if let DensityProfile::AbsPower { coeff, exponent } = d.profile {
                if coeff < 0.0 {
                    return Err(Error::domain("density must be non-negative"));
                }
                if exponent <= -1.0 {
                    return Err(Error::domain("abs-power exponent must exceed -1"));
                }
            }
            // split segments straddling the origin
            if d.a < 0.0 && d.b > 0.0 {
                split.push(LineDensity {
                    a: d.a,
                    b: 0.0,
                    profile: d.profile.clone(),
                });
                split.push(LineDensity {
                    a: 0.0,
                    b: d.b,
                    profile: d.profile,
                });
            } else {
                split.push(d);
            }
        }
        // spot-check polynomial non-negativity on a few nodes
        for d in &split {
            if d.b.is_finite() && d.a.is_finite() {
                for i in 0..=8 {
                    let x = d.a + (d.b - d.a) * i as f64 / 8.0;
                    if d.eval(x) < -1e-12 {
                        return Err(Error::domain("density must be non-negative"));
                    }
                }
            }
        }
        let mut m = PlanarMeasure {
            atoms,
            densities: split,
            genus_norm: None,
            pv_only: false,
        };
        if let NormValue::Finite(v) = m.compute_genus_norm() {
            m.genus_norm = Some(v);
        }
        Ok(m)
    }

    pub fn from_atoms(atoms: Vec<(Complex, f64)>) -> Result<Self> {
        Self::new(
            atoms
                .into_iter()
                .map(|(location, mass)| Atom { location, mass })
                .collect(),
            Vec::new(),
        )
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn densities(&self) -> &[LineDensity] {
        &self.densities
    }

    pub fn is_genus_one(&self) -> bool {
        self.genus_norm.is_some()
    }

    pub fn is_pv_only(&self) -> bool {
        self.pv_only
    }

    /// Mark the measure as admissible for the principal-value canonical
    /// integral (the caller attests the Cauchy test; see
    /// `canonical::PvCanonicalField` for the numerical validation).
    pub fn mark_pv_only(&mut self) {
        self.pv_only = true;
    }

    pub fn total_mass(&self) -> f64 {
        let atom_mass: f64 = self.atoms.iter().map(|a| a.mass).sum();
        let density_mass: f64 = self
            .densities
            .iter()
            .map(|d| {
                let pos = if d.is_positive_side() { d.clone() } else { d.mirrored() };
                pos.mass_on_positive(0.0, f64::INFINITY)
            })
            .sum();
        atom_mass + density_mass
    }

    fn compute_genus_norm(&self) -> NormValue {
        let mut total = 0.0;
        for atom in &self.atoms {
            let m = atom.location.norm();
            if m == 0.0 {
                if atom.mass > 0.0 {
                    return NormValue::Infinite;
                }
                continue;
            }
            total += atom.mass * (1.0 / m).min(1.0 / (m * m));
        }
        for d in &self.densities {
            let pos = if d.is_positive_side() { d.clone() } else { d.mirrored() };
            match pos.genus_norm_positive() {
                Some(v) => total += v,
                None => return NormValue::Infinite,
            }
        }
        NormValue::Finite(total)
    }

    pub fn density_mass_in_disk(&self, r: f64) -> f64 {
        self.densities
            .iter()
            .map(|d| {
                let pos = if d.is_positive_side() { d.clone() } else { d.mirrored() };
                pos.mass_on_positive(0.0, r)
            })
            .sum()
    }
}

/// Conventional counting function `μ({|z| <= r})`.
pub fn counting_mu(mu: &PlanarMeasure, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("counting_mu: r must be positive"));
    }
    let atoms: f64 = mu
        .atoms()
        .iter()
        .filter(|a| a.location.norm() <= r + DISK_SLACK)
        .map(|a| a.mass)
        .sum();
    Ok(atoms + mu.density_mass_in_disk(r + DISK_SLACK))
}

/// Levin-Tsuji counting function `μ({|Im(1/z)| >= 1/r})`, i.e. the mass
/// of the two closed disks of radius `r/2` tangent to the real axis at
/// the origin. Real-line densities never contribute.
pub fn counting_levin_tsuji(mu: &PlanarMeasure, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("counting_levin_tsuji: r must be positive"));
    }
    let half = 0.5 * r;
    Ok(mu
        .atoms()
        .iter()
        .filter(|a| {
            let z = a.location;
            let up = Complex::new(z.re, z.im - half).norm();
            let down = Complex::new(z.re, z.im + half).norm();
            up.min(down) <= half + DISK_SLACK
        })
        .map(|a| a.mass)
        .sum())
}

/// `∫ min(1/|ζ|, 1/|ζ|²) dμ(ζ)`; divergence is reported as a flag, not
/// an error.
pub fn genus_one_norm(mu: &PlanarMeasure) -> NormValue {
    mu.compute_genus_norm()
}

impl PlanarMeasure {
    /// `(radius, mass)` jump levels of the conventional counting
    /// function (atoms only; density-backed measures have continuous
    /// counting functions).
    pub fn mu_levels(&self) -> Vec<(f64, f64)> {
        self.atoms
            .iter()
            .map(|a| (a.location.norm(), a.mass))
            .collect()
    }

    /// `(radius, mass)` jump levels of the Levin-Tsuji counting
    /// function: an atom enters at `r = 1/|Im(1/ζ)|`.
    pub fn levin_tsuji_levels(&self) -> Vec<(f64, f64)> {
        self.atoms
            .iter()
            .filter_map(|a| {
                let im_inv = (1.0 / a.location).im.abs();
                if im_inv > 0.0 {
                    Some((1.0 / im_inv, a.mass))
                } else {
                    None
                }
            })
            .collect()
    }
}

/// Exact Borel-type right-hand side for a step counting function with
/// levels `(ρ_k, m_k)`:
/// `r ∫_0^r n/t² dt + r² ∫_r^∞ n/t³ dt`
/// `= Σ m_k [ r (1/ρ_k - 1/r)^+ + r²/(2 max(ρ_k, r)²) ]`.
pub fn step_rhs_borel(levels: &[(f64, f64)], r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::domain("step_rhs_borel: r must be positive"));
    }
    Ok(levels
        .iter()
        .map(|&(rho, m)| {
            let inner = (1.0 / rho - 1.0 / r).max(0.0);
            let outer = 0.5 / (rho.max(r) * rho.max(r));
            m * (r * inner + r * r * outer)
        })
        .sum())
}

/// Exact `∫_0^∞ step(t)/t^{p+1} dt = Σ m ρ^{-p}/p` for step levels.
pub fn step_power_integral(levels: &[(f64, f64)], p: f64) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::domain("step_power_integral: p must be positive"));
    }
    Ok(levels.iter().map(|&(rho, m)| m * rho.powf(-p) / p).sum())
}

/// Reflect the upper-half-plane part of the measure into the lower
/// half-plane, merging coincident atoms. Total mass and the Levin-Tsuji
/// counting function are preserved.
pub fn reflect_to_lower(mu: &PlanarMeasure) -> Result<PlanarMeasure> {
    if !mu.is_genus_one() && !mu.is_pv_only() {
        return Err(Error::domain(
            "reflect_to_lower: measure must be genus-one (or flagged p.v.)",
        ));
    }
    let mut merged: Vec<Atom> = Vec::new();
    for atom in mu.atoms() {
        let loc = if atom.location.im > 0.0 {
            atom.location.conj()
        } else {
            atom.location
        };
        match merged.iter_mut().find(|a| a.location == loc) {
            Some(existing) => existing.mass += atom.mass,
            None => merged.push(Atom {
                location: loc,
                mass: atom.mass,
            }),
        }
    }
    let mut out = PlanarMeasure::new(merged, mu.densities().to_vec())?;
    if mu.is_pv_only() {
        out.mark_pv_only();
    }
    Ok(out)
}

/// Projection used by the distribution function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projector {
    Modulus,
    ImagPart,
    HatNorm,
}

/// Weighted sample representation of a complex-valued function on a
/// measure space.
#[derive(Clone, Debug, Default)]
pub struct MeasuredFunction {
    pub samples: Vec<(Complex, f64)>,
}

impl MeasuredFunction {
    pub fn new(samples: Vec<(Complex, f64)>) -> Result<Self> {
        if samples.iter().any(|&(_, w)| !(w >= 0.0)) {
            return Err(Error::domain("sample weights must be non-negative"));
        }
        Ok(MeasuredFunction { samples })
    }

    pub fn total_weight(&self) -> f64 {
        self.samples.iter().map(|&(_, w)| w).sum()
    }

    /// `∫ min(|f|, |f|²) dm`; finiteness is the admission condition for
    /// the logarithmic determinant.
    pub fn log_det_norm(&self) -> f64 {
        self.samples
            .iter()
            .map(|&(v, w)| {
                let m = v.norm();
                w * m.min(m * m)
            })
            .sum()
    }

    pub fn lp_norm(&self, p: f64, projector: Projector) -> f64 {
        self.samples
            .iter()
            .map(|&(v, w)| {
                let m = match projector {
                    Projector::Modulus => v.norm(),
                    Projector::ImagPart => v.im.abs(),
                    Projector::HatNorm => v.im.abs(),
                };
                w * m.powf(p)
            })
            .sum::<f64>()
            .powf(1.0 / p)
    }
}

/// Vector-valued (`R^{n+1}`) weighted samples; coordinate 0 is the
/// distinguished one.
#[derive(Clone, Debug, Default)]
pub struct VectorMeasuredFunction {
    pub samples: Vec<(Vec<f64>, f64)>,
}

impl VectorMeasuredFunction {
    pub fn new(samples: Vec<(Vec<f64>, f64)>) -> Result<Self> {
        if samples.is_empty() {
            return Ok(VectorMeasuredFunction { samples });
        }
        let dim = samples[0].0.len();
        if dim < 2 {
            return Err(Error::domain("vector samples need dimension >= 2"));
        }
        if samples.iter().any(|(v, _)| v.len() != dim) {
            return Err(Error::domain("vector samples must share one dimension"));
        }
        if samples.iter().any(|&(_, w)| !(w >= 0.0)) {
            return Err(Error::domain("sample weights must be non-negative"));
        }
        Ok(VectorMeasuredFunction { samples })
    }

    pub fn euclidean_norm(v: &[f64]) -> f64 {
        v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn hat_norm(v: &[f64]) -> f64 {
        v[1..].iter().map(|x| x * x).sum::<f64>().sqrt()
    }
}

/// `λ^{-2} ∫_0^λ s m(s) ds + λ^{-1} ∫_λ^∞ m(s) ds` for the step
/// distribution `m(s) = Σ w 1{level >= s}`, evaluated as exact sums.
/// This is the right-hand side shared by the Marcinkiewicz-type bounds.
pub fn step_distribution_rhs(levels: &[(f64, f64)], lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::domain("step_distribution_rhs: lambda must be positive"));
    }
    let mut inner = 0.0; // ∫_0^λ s m(s) ds = Σ w min(λ, level)² / 2
    let mut outer = 0.0; // ∫_λ^∞ m(s) ds = Σ w (level - λ)^+
    for &(level, w) in levels {
        let c = level.min(lambda);
        inner += w * 0.5 * c * c;
        outer += w * (level - lambda).max(0.0);
    }
    Ok(inner / (lambda * lambda) + outer / lambda)
}

/// Total weight of samples whose projected magnitude is `>= lambda`.
pub fn distribution(f: &MeasuredFunction, lambda: f64, projector: Projector) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::domain("distribution: lambda must be positive"));
    }
    Ok(f.samples
        .iter()
        .filter(|&&(v, _)| {
            let m = match projector {
                Projector::Modulus => v.norm(),
                Projector::ImagPart | Projector::HatNorm => v.im.abs(),
            };
            m >= lambda
        })
        .map(|&(_, w)| w)
        .sum())
}

/// Distribution function of a vector-valued sample set with the full
/// Euclidean norm (`Modulus`) or the hat norm over coordinates `1..`.
pub fn distribution_vector(
    f: &VectorMeasuredFunction,
    lambda: f64,
    projector: Projector,
) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::domain("distribution: lambda must be positive"));
    }
    Ok(f.samples
        .iter()
        .filter(|(v, _)| {
            let m = match projector {
                Projector::Modulus => VectorMeasuredFunction::euclidean_norm(v),
                Projector::HatNorm | Projector::ImagPart => VectorMeasuredFunction::hat_norm(v),
            };
            m >= lambda
        })
        .map(|&(_, w)| w)
        .sum())
}

// ---------------------------------------------------------------------
// JSON schema
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct DensityJson {
    a: f64,
    b: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly_coeffs: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    abs_power: Option<AbsPowerJson>,
}

#[derive(Serialize, Deserialize)]
struct AbsPowerJson {
    coeff: f64,
    exponent: f64,
}

#[derive(Serialize, Deserialize)]
struct MeasureJson {
    kind: String,
    atoms: Vec<[f64; 3]>,
    #[serde(default)]
    densities: Vec<DensityJson>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    jensen: bool,
}

impl PlanarMeasure {
    pub fn to_json(&self) -> serde_json::Value {
        let atoms = self
            .atoms
            .iter()
            .map(|a| [a.location.re, a.location.im, a.mass])
            .collect();
        let densities = self
            .densities
            .iter()
            .map(|d| match &d.profile {
                DensityProfile::Poly(c) => DensityJson {
                    a: d.a,
                    b: d.b,
                    poly_coeffs: Some(c.clone()),
                    abs_power: None,
                },
                DensityProfile::AbsPower { coeff, exponent } => DensityJson {
                    a: d.a,
                    b: d.b,
                    poly_coeffs: None,
                    abs_power: Some(AbsPowerJson {
                        coeff: *coeff,
                        exponent: *exponent,
                    }),
                },
            })
            .collect();
        serde_json::to_value(MeasureJson {
            kind: "planar_measure".to_string(),
            atoms,
            densities,
            jensen: false,
        })
        .expect("measure serialization cannot fail")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let parsed: MeasureJson = serde_json::from_value(value.clone())?;
        if parsed.kind != "planar_measure" {
            return Err(Error::domain(format!(
                "expected kind `planar_measure`, got `{}`",
                parsed.kind
            )));
        }
        let atoms = parsed
            .atoms
            .iter()
            .map(|&[re, im, mass]| Atom {
                location: Complex::new(re, im),
                mass,
            })
            .collect();
        let densities = parsed
            .densities
            .into_iter()
            .map(|d| {
                let profile = match (d.poly_coeffs, d.abs_power) {
                    (Some(c), None) => Ok(DensityProfile::Poly(c)),
                    (None, Some(p)) => Ok(DensityProfile::AbsPower {
                        coeff: p.coeff,
                        exponent: p.exponent,
                    }),
                    _ => Err(Error::domain(
                        "density needs exactly one of poly_coeffs/abs_power",
                    )),
                }?;
                Ok(LineDensity {
                    a: d.a,
                    b: d.b,
                    profile,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PlanarMeasure::new(atoms, densities)
    }
}

// closed-form helpers shared with the canonical integrals
impl LineDensity {
    /// `∫ ρ/x` over the positive-side sub-interval, `None` if divergent.
    pub(crate) fn over_x_positive(&self, lo: f64, hi: f64) -> Option<f64> {
        self.integral_over_x(lo, hi)
    }

    /// `∫ ρ ln x` over the positive-side sub-interval.
    pub(crate) fn log_weight_positive(&self, lo: f64, hi: f64) -> f64 {
        self.integral_log_x(lo, hi)
    }

    /// `∫ ρ/x²` over the positive-side segment, `None` if divergent.
    pub(crate) fn over_x2_positive(&self) -> Option<f64> {
        self.integral_over_x2(self.a.max(f64::MIN_POSITIVE), self.b)
    }

}
