//! Identity checks and inequality harnesses, packaged as named suites
//! with machine-readable reports.
//!
//! Identities are verified through two independent code paths (field
//! quadrature on one side, counting-function sums on the other) and
//! pass when the relative residual is below tolerance. Inequalities
//! with implicit constants are operationalized by a fitted constant:
//! the maximum LHS/RHS ratio over a grid, required to be finite and
//! stable under one grid-doubling.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canonical::{
    logdet_vector, pushforward_measure, Field,
};
use crate::characteristics::{
    delta_curve, delta_star, full_line_over_t2, levin_average, levin_rhs,
    limsup_infinity_proxy, limsup_origin_proxy, max_modulus, max_modulus_curve, mu_curve,
    nevanlinna_curve, rhs_borel, rhs_corollary5, rhs_real_line,
    rhs_theorem2, tsuji_m, tsuji_m_curve, tsuji_t, tsuji_t_curve, uminus_real_curve,
    uplus_real_curve,
};
use crate::curves::{LogGrid, RadialCurve};
use crate::error::{Error, Result};
use crate::fixtures::{
    atom_cloud_ids, hilbert_input, jensen_fixture, jensen_fixture_refined, measure_fixture,
    poisson_fixture, vector_fixture, MeasureFixture, ANALYTIC_FIXTURES, HILBERT_FIXTURES,
    JENSEN_FIXTURES, POISSON_FIXTURES, REFERENCE_RADIUS, VECTOR_FIXTURES,
};
use crate::jensen::{jensen_rhs, sigma_distributions, JensenMeasure};
use crate::kernels::{
    closed_form_k1_integral, closed_form_k2_integral, closed_form_k3_integral, kernel_k1,
    kernel_k2, kernel_k3,
};
use crate::measures::{
    counting_mu, distribution, distribution_vector, step_distribution_rhs, step_power_integral,
    step_rhs_borel, Complex, PlanarMeasure, Projector,
};
use crate::quad::{integrate_with_hints, QuadOptions};
use crate::transforms::{make_hilbert_pair, HilbertPair, PairOptions};

use std::f64::consts::PI;
use std::time::Instant;

pub const IDENTITY_CHECKS: [&str; 6] = [
    "levin",
    "carleman",
    "tsuji_fft",
    "kernel_k1",
    "kernel_k2",
    "kernel_k3",
];

pub const SUITE_NAMES: [&str; 19] = [
    "theorem1",
    "corollary1",
    "corollary2",
    "corollary3",
    "corollary4",
    "corollary6_riesz",
    "corollary6_weak",
    "corollary6_kolmogorov",
    "corollary7",
    "theorem2",
    "corollary5",
    "theorem3",
    "real_line_1_8",
    "marcinkiewicz_hilbert",
    "borel",
    "lemma1",
    "lemma3",
    "lemma5",
    "positivity",
];

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ReportKind {
    Identity { max_rel_residual: f64 },
    Inequality { constant: f64, stability: f64 },
    Assertion { worst_violation: f64 },
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub check: String,
    pub fixture: String,
    #[serde(flatten)]
    pub kind: ReportKind,
    pub lhs_max: f64,
    pub lhs_median: f64,
    pub rhs_max: f64,
    pub rhs_median: f64,
    pub tolerance: f64,
    pub pass: bool,
    pub hypotheses_unmet: bool,
    pub notes: String,
    pub runtime_ms: f64,
}

impl VerificationReport {
    /// A failed check that does not block the suite (exit-code logic).
    pub fn blocking_failure(&self) -> bool {
        !self.pass && !self.hypotheses_unmet
    }
}

fn median(values: &[f64]) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut v: Vec<f64> = values.iter().copied().filter(|x| x.is_finite()).collect();
    if v.is_empty() {
        return f64::NAN;
    }
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v[v.len() / 2]
}

fn fmax(values: &[f64]) -> f64 {
    values
        .iter()
        .copied()
        .filter(|x| x.is_finite())
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Options shared by the suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub per_decade: usize,
    pub span: (f64, f64),
    pub seed: u64,
    pub pair_points: usize,
    pub eps_sweep: Vec<f64>,
    pub stability_band: f64,
    pub identity_tuples: usize,
    pub identity_tol: f64,
    pub residual_tol: f64,
    /// Overrides the default fixture list of a suite.
    pub fixtures: Option<Vec<String>>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            per_decade: 16,
            span: (1e-2, 1e2),
            seed: 7,
            pair_points: 2048,
            eps_sweep: vec![0.1, 1.0, 10.0],
            stability_band: 0.10,
            identity_tuples: 200,
            identity_tol: 1e-8,
            residual_tol: 1e-6,
            fixtures: None,
        }
    }
}

impl SuiteOptions {
    fn grid(&self) -> Result<LogGrid> {
        LogGrid::new(self.span.0, self.span.1, self.per_decade)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct FittedConstant {
    pub constant: f64,
    pub stability: f64,
}

/// `C = max lhs/rhs` over the shared grid (`rhs` interpolated at the
/// `lhs` radii). Zero/zero points are skipped; `rhs = 0` under positive
/// `lhs` yields an infinite constant. Stability is measured against the
/// every-other-point subsample of the same curves.
pub fn fit_constant(lhs: &RadialCurve, rhs: &RadialCurve) -> FittedConstant {
    let constant = fit_ratio(
        &lhs.radii
            .iter()
            .map(|&r| (lhs.value_at(r), rhs.value_at(r)))
            .collect::<Vec<_>>(),
    );
    let coarse = lhs.subsample();
    let c2 = fit_ratio(
        &coarse
            .radii
            .iter()
            .map(|&r| (coarse.value_at(r), rhs.value_at(r)))
            .collect::<Vec<_>>(),
    );
    let stability = if constant.is_finite() && constant > 0.0 {
        (constant - c2).abs() / constant
    } else {
        f64::INFINITY
    };
    FittedConstant {
        constant,
        stability,
    }
}

/// Max-ratio over explicit `(lhs, rhs)` pairs.
pub fn fit_ratio(pairs: &[(f64, f64)]) -> f64 {
    let mut c: f64 = 0.0;
    for &(lhs, rhs) in pairs {
        let lhs = lhs.max(0.0);
        if lhs == 0.0 {
            continue;
        }
        if rhs <= 0.0 {
            if lhs > 1e-12 {
                return f64::INFINITY;
            }
            continue;
        }
        c = c.max(lhs / rhs);
    }
    c
}

fn stability_between(coarse: f64, fine: f64) -> f64 {
    if fine.is_finite() && fine > 0.0 {
        (fine - coarse).abs() / fine
    } else if coarse == fine {
        0.0
    } else {
        f64::INFINITY
    }
}

fn inequality_report(
    check: &str,
    fixture: &str,
    lhs: &[f64],
    rhs: &[f64],
    constant: f64,
    stability: f64,
    band: f64,
    start: Instant,
    notes: impl Into<String>,
) -> VerificationReport {
    VerificationReport {
        check: check.to_string(),
        fixture: fixture.to_string(),
        kind: ReportKind::Inequality {
            constant,
            stability,
        },
        lhs_max: fmax(lhs),
        lhs_median: median(lhs),
        rhs_max: fmax(rhs),
        rhs_median: median(rhs),
        tolerance: band,
        pass: constant.is_finite() && stability <= band,
        hypotheses_unmet: false,
        notes: notes.into(),
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn identity_report(
    check: &str,
    fixture: &str,
    lhs: &[f64],
    rhs: &[f64],
    tol: f64,
    start: Instant,
    notes: impl Into<String>,
) -> VerificationReport {
    let mut worst = 0.0f64;
    for (&a, &b) in lhs.iter().zip(rhs) {
        let scale = a.abs().max(b.abs()).max(1e-9);
        worst = worst.max((a - b).abs() / scale);
    }
    VerificationReport {
        check: check.to_string(),
        fixture: fixture.to_string(),
        kind: ReportKind::Identity {
            max_rel_residual: worst,
        },
        lhs_max: fmax(lhs),
        lhs_median: median(lhs),
        rhs_max: fmax(rhs),
        rhs_median: median(rhs),
        tolerance: tol,
        pass: worst <= tol,
        hypotheses_unmet: false,
        notes: notes.into(),
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn unmet(check: &str, fixture: &str, start: Instant, why: impl Into<String>) -> VerificationReport {
    VerificationReport {
        check: check.to_string(),
        fixture: fixture.to_string(),
        kind: ReportKind::Assertion {
            worst_violation: f64::NAN,
        },
        lhs_max: f64::NAN,
        lhs_median: f64::NAN,
        rhs_max: f64::NAN,
        rhs_median: f64::NAN,
        tolerance: f64::NAN,
        pass: false,
        hypotheses_unmet: true,
        notes: why.into(),
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

// ---------------------------------------------------------------------
// Identity checks
// ---------------------------------------------------------------------

fn sin_weighted_average(f: &dyn Fn(f64) -> f64, r: f64) -> f64 {
    integrate_with_hints(
        |th| f(th) * th.sin(),
        0.0,
        PI,
        &[PI / 4.0, PI / 2.0, 3.0 * PI / 4.0],
        QuadOptions {
            rel_tol: 1e-11,
            abs_tol: 1e-15,
            max_intervals: 4096,
        },
    )
    .value
        / r
}

fn kernel_identity_check(which: usize, opts: &SuiteOptions) -> VerificationReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (0x6b65726e << 8 | which as u64));
    let n = opts.identity_tuples;
    let mut lhs = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for _ in 0..n {
        let radius = 1.0 + 4.0 * rng.gen::<f64>();
        let r = radius * (0.05 + 0.9 * rng.gen::<f64>());
        match which {
            1 => {
                let t = radius * (2.0 * rng.gen::<f64>() - 1.0);
                let t = if t.abs() < 1e-3 { 0.05 * radius } else { t };
                lhs.push(sin_weighted_average(
                    &|th| kernel_k1(Complex::from_polar(r, th), t, radius).unwrap(),
                    r,
                ));
                rhs.push(closed_form_k1_integral(t, r, radius).unwrap());
            }
            2 => {
                let phi = 0.05 + (PI - 0.1) * rng.gen::<f64>();
                lhs.push(sin_weighted_average(
                    &|th| kernel_k2(Complex::from_polar(r, th), radius, phi).unwrap(),
                    r,
                ));
                rhs.push(closed_form_k2_integral(r, radius, phi).unwrap());
            }
            _ => {
                let zr = radius * (0.05 + 0.85 * rng.gen::<f64>());
                let zth = 0.05 + (PI - 0.1) * rng.gen::<f64>();
                let zeta = Complex::from_polar(zr, zth);
                lhs.push(sin_weighted_average(
                    &|th| kernel_k3(Complex::from_polar(r, th), zeta, radius).unwrap(),
                    r,
                ));
                rhs.push(closed_form_k3_integral(zeta, r, radius).unwrap());
            }
        }
    }
    identity_report(
        &format!("kernel_k{which}"),
        &format!("tuples-{n}@seed{}", opts.seed),
        &lhs,
        &rhs,
        opts.identity_tol,
        start,
        "sin-weighted circle average vs closed form",
    )
}

/// Carleman sides for a measure-backed field: quadrature on the left,
/// exact atom sums over the upper semi-disk on the right.
fn carleman_sides(fx: &MeasureFixture, radius: f64) -> (f64, f64) {
    let field = fx.field.as_ref();
    let t_int = integrate_with_hints(
        |t: f64| {
            if t == 0.0 {
                return 0.0;
            }
            let u = field.eval(Complex::new(t, 0.0));
            if !u.is_finite() {
                return 0.0;
            }
            u * (1.0 / (t * t) - 1.0 / (radius * radius))
        },
        -radius,
        radius,
        &[-radius / 2.0, 0.0, radius / 2.0],
        QuadOptions {
            rel_tol: 1e-10,
            abs_tol: 1e-13,
            max_intervals: 8192,
        },
    )
    .value;
    let phi_int = integrate_with_hints(
        |phi: f64| {
            let u = field.eval(Complex::from_polar(radius, phi));
            if !u.is_finite() {
                return 0.0;
            }
            u * phi.sin()
        },
        0.0,
        PI,
        &[PI / 2.0],
        QuadOptions {
            rel_tol: 1e-10,
            abs_tol: 1e-13,
            max_intervals: 4096,
        },
    )
    .value;
    let lhs = t_int / (2.0 * PI) + phi_int / (PI * radius);
    let rhs: f64 = fx
        .measure
        .atoms()
        .iter()
        .filter(|a| a.location.im > 0.0 && a.location.norm() <= radius)
        .map(|a| a.mass * (1.0 / a.location.norm_sqr() - 1.0 / (radius * radius)) * a.location.im)
        .sum();
    (lhs, rhs)
}

/// Runs one named identity check on one fixture.
pub fn check_identity(
    name: &str,
    fixture: &str,
    opts: &SuiteOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    match name {
        "kernel_k1" => Ok(kernel_identity_check(1, opts)),
        "kernel_k2" => Ok(kernel_identity_check(2, opts)),
        "kernel_k3" => Ok(kernel_identity_check(3, opts)),
        "levin" | "carleman" | "tsuji_fft" => {
            let fx = measure_fixture(fixture)?;
            if !fx.measure.is_genus_one() {
                return Ok(unmet(name, fixture, start, "measure is not genus-one"));
            }
            let radius = REFERENCE_RADIUS;
            if fx
                .measure
                .atoms()
                .iter()
                .any(|a| (a.location.norm() - radius).abs() < 1e-9)
            {
                return Ok(unmet(
                    name,
                    fixture,
                    start,
                    format!("atom on the reference circle |z| = {radius} (boundary degeneracy)"),
                ));
            }
            match name {
                "levin" => {
                    let lhs = levin_average(fx.field.as_ref(), radius)?;
                    let rhs = levin_rhs(&fx.measure, radius)?;
                    Ok(identity_report(
                        name,
                        fixture,
                        &[lhs],
                        &[rhs],
                        opts.residual_tol,
                        start,
                        "tangent-circle average vs counting-function sum",
                    ))
                }
                "carleman" => {
                    let (lhs, rhs) = carleman_sides(&fx, radius);
                    Ok(identity_report(
                        name,
                        fixture,
                        &[lhs],
                        &[rhs],
                        opts.residual_tol,
                        start,
                        "semi-disk boundary integrals vs measure sum",
                    ))
                }
                _ => {
                    // tsuji_fft over a ladder of radii
                    let radii: Vec<f64> = (0..8).map(|i| 0.5 * 1.9f64.powi(i)).collect();
                    let mut lhs = Vec::new();
                    let mut rhs = Vec::new();
                    for &r in &radii {
                        let t = tsuji_t(fx.field.as_ref(), r)?;
                        let m = tsuji_m(fx.field.as_ref(), r)?;
                        lhs.push(t);
                        rhs.push(m + levin_rhs(&fx.measure, r)?);
                    }
                    Ok(identity_report(
                        name,
                        fixture,
                        &lhs,
                        &rhs,
                        opts.residual_tol,
                        start,
                        "first fundamental theorem for Tsuji characteristics",
                    ))
                }
            }
        }
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

// ---------------------------------------------------------------------
// Positivity validation shared by the logdet-based suites
// ---------------------------------------------------------------------

/// Grid minimum of a field over a log-polar grid, plus `M(r_max, u)`.
fn logpolar_min(field: &dyn Field, r_min: f64, r_max: f64, n_r: usize, n_th: usize) -> (f64, f64) {
    let mut min_v = f64::INFINITY;
    for i in 0..n_r {
        let r = r_min * (r_max / r_min).powf(i as f64 / (n_r - 1) as f64);
        for j in 0..n_th {
            // irrational-ish offset keeps nodes off the singular set
            let th = std::f64::consts::TAU * (j as f64 + 0.381_966) / n_th as f64;
            let v = field.eval(Complex::from_polar(r, th));
            if v.is_finite() {
                min_v = min_v.min(v);
            }
        }
    }
    let m_top = max_modulus(field, r_max).unwrap_or(f64::NAN);
    (min_v, m_top)
}

/// Checks `u >= -1e-6 max(1, M(r_max, u))` on the evaluation grid.
fn field_nonnegative(field: &dyn Field, r_min: f64, r_max: f64) -> (bool, f64, f64) {
    let (min_v, m_top) = logpolar_min(field, r_min, r_max, 20, 16);
    let threshold = -1e-6 * m_top.abs().max(1.0);
    (min_v >= threshold, min_v, m_top)
}

// ---------------------------------------------------------------------
// Suite implementations
// ---------------------------------------------------------------------

fn default_fixtures(suite: &str) -> Vec<String> {
    match suite {
        "theorem1" | "theorem2" | "corollary5" | "borel" | "lemma5" | "corollary6_riesz"
        | "corollary6_weak" | "corollary6_kolmogorov" => {
            let mut v = atom_cloud_ids(10);
            v.push("atoms/single-lower".to_string());
            v.push("atoms/conj-pair".to_string());
            v
        }
        "corollary1" => {
            let mut v: Vec<String> = JENSEN_FIXTURES.iter().map(|s| s.to_string()).collect();
            v.extend(HILBERT_FIXTURES.iter().map(|s| s.to_string()));
            v.push("up/p1.5".to_string()); // violates u >= 0: reported hypotheses_unmet
            v
        }
        "corollary2" | "marcinkiewicz_hilbert" | "positivity" => {
            HILBERT_FIXTURES.iter().map(|s| s.to_string()).collect()
        }
        "corollary3" => JENSEN_FIXTURES.iter().map(|s| s.to_string()).collect(),
        "corollary4" => JENSEN_FIXTURES
            .iter()
            .flat_map(|j| {
                ANALYTIC_FIXTURES
                    .iter()
                    .map(move |(p, _)| format!("{j}+{p}"))
            })
            .collect(),
        "corollary7" => VECTOR_FIXTURES.iter().map(|s| s.to_string()).collect(),
        "theorem3" => {
            let mut v: Vec<String> = vec![
                "pv/sym-const".into(),
                "pv/sym-const-wide".into(),
                "pv/sym-const-atoms".into(),
            ];
            v.extend((0..5).map(|i| format!("pv/gen-{i}")));
            v.push("atoms/single-lower".into());
            v.push("atoms/conj-pair".into());
            v
        }
        "real_line_1_8" => {
            let mut v: Vec<String> = vec![
                "up/p1.25".into(),
                "up/p1.5".into(),
                "up/p1.75".into(),
                "realline/poly-bands".into(),
                "realline/sqrt-band".into(),
            ];
            v.extend((0..5).map(|i| format!("realline/gen-{i}")));
            v
        }
        "lemma1" | "lemma3" => match suite {
            "lemma1" => POISSON_FIXTURES.iter().map(|s| s.to_string()).collect(),
            _ => vec![
                "up/p1.25".into(),
                "up/p1.5".into(),
                "up/p1.75".into(),
                "realline/poly-bands".into(),
                "realline/sqrt-band".into(),
            ],
        },
        _ => Vec::new(),
    }
}

fn fixtures_for(suite: &str, opts: &SuiteOptions) -> Vec<String> {
    opts.fixtures
        .clone()
        .unwrap_or_else(|| default_fixtures(suite))
}

/// Computes the fitted constant on the base grid and on the doubled
/// grid via a builder returning the `(lhs, rhs)` curves.
/// Jump radii of the fixture's counting functions; suprema are sampled
/// there on both resolutions so that step discontinuities do not leak
/// into the stability band.
fn fixture_markers(mu: &PlanarMeasure) -> Vec<f64> {
    let mut m: Vec<f64> = mu.mu_levels().iter().map(|&(r, _)| r).collect();
    m.extend(mu.levin_tsuji_levels().iter().map(|&(r, _)| r));
    m.sort_by(|a, b| a.partial_cmp(b).unwrap());
    m.dedup();
    m
}

fn fit_with_doubling(
    base: &LogGrid,
    markers: &[f64],
    build: &dyn Fn(&LogGrid) -> Result<(RadialCurve, RadialCurve)>,
) -> Result<(FittedConstant, RadialCurve, RadialCurve)> {
    let (lhs_c, rhs_c) = build(&base.with_markers(markers))?;
    let coarse = fit_constant(&lhs_c, &rhs_c).constant;
    let (lhs_f, rhs_f) = build(&base.doubled().with_markers(markers))?;
    let fine = fit_constant(&lhs_f, &rhs_f).constant;
    Ok((
        FittedConstant {
            constant: fine,
            stability: stability_between(coarse, fine),
        },
        lhs_f,
        rhs_f,
    ))
}

fn suite_curve_inequality(
    suite: &str,
    opts: &SuiteOptions,
    build: &(dyn Fn(&MeasureFixture, &LogGrid) -> Result<(RadialCurve, RadialCurve)> + Sync),
) -> Result<Vec<VerificationReport>> {
    let grid = opts.grid()?;
    let names = fixtures_for(suite, opts);
    let reports: Vec<VerificationReport> = names
        .par_iter()
        .map(|id| {
            let start = Instant::now();
            let fx = match measure_fixture(id) {
                Ok(fx) => fx,
                Err(e) => return unmet(suite, id, start, format!("fixture error: {e}")),
            };
            let markers = fixture_markers(&fx.measure);
            match fit_with_doubling(&grid, &markers, &|g| build(&fx, g)) {
                Ok((fit, lhs, rhs)) => inequality_report(
                    suite,
                    id,
                    &lhs.values,
                    &rhs.values,
                    fit.constant,
                    fit.stability,
                    opts.stability_band,
                    start,
                    "",
                ),
                Err(e) => unmet(suite, id, start, format!("{e}")),
            }
        })
        .collect();
    Ok(reports)
}

fn suite_borel(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    suite_curve_inequality("borel", opts, &|fx, grid| {
        let lhs = max_modulus_curve(fx.field.as_ref(), grid)?;
        let rhs_values = if fx.measure.densities().is_empty() {
            // exact step sums for purely atomic measures
            let levels = fx.measure.mu_levels();
            grid.radii
                .iter()
                .map(|&r| step_rhs_borel(&levels, r))
                .collect::<Result<Vec<_>>>()?
        } else {
            let mu = mu_curve(&fx.measure, grid)?;
            grid.radii
                .iter()
                .map(|&r| rhs_borel(&mu, r))
                .collect::<Result<Vec<_>>>()?
        };
        let rhs = RadialCurve::new("rhs_borel", grid.radii.clone(), rhs_values)?;
        Ok((lhs, rhs))
    })
}

fn suite_theorem1(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    suite_curve_inequality("theorem1", opts, &|fx, grid| {
        let lhs = max_modulus_curve(fx.field.as_ref(), grid)?;
        let m = tsuji_m_curve(fx.field.as_ref(), grid)?;
        let n_levels = fx.measure.levin_tsuji_levels();
        let rhs = RadialCurve::new(
            "rhs_theorem1",
            grid.radii.clone(),
            grid.radii
                .iter()
                .map(|&r| {
                    let counting_part = step_rhs_borel(&n_levels, r)?;
                    let outer = m.integrate(r, m.r_max(), &|t, v| v.max(0.0) / (t * t));
                    let tail = match m.high_tail() {
                        Some(t) => t.upper_over_t2()?,
                        None => 0.0,
                    };
                    Ok(counting_part + r * r * (outer + tail))
                })
                .collect::<Result<Vec<_>>>()?,
        )?;
        Ok((lhs, rhs))
    })
}

fn suite_theorem2(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    suite_curve_inequality("theorem2", opts, &|fx, grid| {
        let lhs = max_modulus_curve(fx.field.as_ref(), grid)?;
        let (delta, _) = delta_curve(fx.field.as_ref(), &fx.measure, grid)?;
        let ds = RadialCurve::new(
            "delta_star",
            delta.radii.clone(),
            delta
                .radii
                .iter()
                .map(|&r| delta_star(&delta, r))
                .collect::<Result<Vec<_>>>()?,
        )?;
        let rhs = RadialCurve::new(
            "rhs_theorem2",
            ds.radii.clone(),
            ds.radii
                .iter()
                .map(|&r| rhs_theorem2(&ds, r))
                .collect::<Result<Vec<_>>>()?,
        )?;
        Ok((lhs, rhs))
    })
}

fn suite_corollary5(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let grid = opts.grid()?;
    let names = fixtures_for("corollary5", opts);
    let sweep = opts.eps_sweep.clone();
    let mut reports = Vec::new();
    for id in &names {
        let start = Instant::now();
        let fx = match measure_fixture(id) {
            Ok(fx) => fx,
            Err(e) => {
                reports.push(unmet("corollary5", id, start, format!("fixture error: {e}")));
                continue;
            }
        };
        let markers = fixture_markers(&fx.measure);
        for &eps in &sweep {
            let start = Instant::now();
            let result = fit_with_doubling(&grid, &markers, &|g| {
                let lhs = max_modulus_curve(fx.field.as_ref(), g)?;
                let (delta, _) = delta_curve(fx.field.as_ref(), &fx.measure, g)?;
                let rhs = RadialCurve::new(
                    "rhs_corollary5",
                    delta.radii.clone(),
                    delta
                        .radii
                        .iter()
                        .map(|&r| rhs_corollary5(&delta, r, eps))
                        .collect::<Result<Vec<_>>>()?,
                )?;
                Ok((lhs, rhs))
            });
            match result {
                Ok((fit, lhs, rhs)) => reports.push(inequality_report(
                    "corollary5",
                    &format!("{id}[eps={eps}]"),
                    &lhs.values,
                    &rhs.values,
                    fit.constant,
                    fit.stability,
                    opts.stability_band,
                    start,
                    "log^{3+eps} weight; the sweep reports, it does not conclude",
                )),
                Err(e) => reports.push(unmet(
                    "corollary5",
                    &format!("{id}[eps={eps}]"),
                    start,
                    format!("{e}"),
                )),
            }
        }
    }
    Ok(reports)
}

fn suite_real_line(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    suite_curve_inequality("real_line_1_8", opts, &|fx, grid| {
        if !fx.real_supported {
            return Err(Error::HypothesesUnmet(
                "estimate (real-line form) requires a measure supported on R".to_string(),
            ));
        }
        let lhs = max_modulus_curve(fx.field.as_ref(), grid)?;
        let w = uminus_real_curve(fx.field.as_ref(), grid)?;
        let rhs = RadialCurve::new(
            "rhs_real_line",
            w.radii.clone(),
            w.radii
                .iter()
                .map(|&r| rhs_real_line(&w, r))
                .collect::<Result<Vec<_>>>()?,
        )?;
        Ok((lhs, rhs))
    })
}

fn suite_corollary1(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let grid = opts.grid()?;
    let names = fixtures_for("corollary1", opts);
    let mut reports = Vec::new();
    for id in &names {
        let start = Instant::now();
        // resolve the fixture into (field, measure)
        let resolved: Result<(Box<dyn Field + Send>, PlanarMeasure)> = if id.starts_with("jensen/")
        {
            let sigma = jensen_fixture(id)?;
            let mu = sigma.canonical_measure()?;
            let field = crate::canonical::CanonicalField::new(mu.clone())?;
            Ok((Box::new(field), mu))
        } else if id.starts_with("pairs/") {
            let (_, f, field) = pair_and_function(id, opts.pair_points)?;
            let mu = pushforward_measure(&f)?;
            Ok((Box::new(field), mu))
        } else {
            let fx = measure_fixture(id)?;
            Ok((fx.field, fx.measure))
        };
        let (field, measure) = match resolved {
            Ok(v) => v,
            Err(e) => {
                reports.push(unmet("corollary1", id, start, format!("fixture error: {e}")));
                continue;
            }
        };
        // hypothesis: u >= 0 in C (grid check)
        let (ok, min_v, m_top) = field_nonnegative(field.as_ref(), opts.span.0, opts.span.1);
        if !ok {
            reports.push(unmet(
                "corollary1",
                id,
                start,
                format!("u is not non-negative (grid min {min_v:.3e}, M(r_max) {m_top:.3e})"),
            ));
            continue;
        }
        let markers = fixture_markers(&measure);
        let n_levels = measure.levin_tsuji_levels();
        let result = fit_with_doubling(&grid, &markers, &|g| {
            let lhs = RadialCurve::new(
                "mu",
                g.radii.clone(),
                g.radii
                    .iter()
                    .map(|&r| counting_mu(&measure, r))
                    .collect::<Result<Vec<_>>>()?,
            )?;
            let rhs = RadialCurve::new(
                "rhs_marcinkiewicz",
                g.radii.clone(),
                g.radii
                    .iter()
                    .map(|&r| step_rhs_borel(&n_levels, r))
                    .collect::<Result<Vec<_>>>()?,
            )?;
            Ok((lhs, rhs))
        });
        match result {
            Ok((fit, lhs, rhs)) => reports.push(inequality_report(
                "corollary1",
                id,
                &lhs.values,
                &rhs.values,
                fit.constant,
                fit.stability,
                opts.stability_band,
                start,
                "counting function vs Levin-Tsuji RHS under u >= 0",
            )),
            Err(e) => reports.push(unmet("corollary1", id, start, format!("{e}"))),
        }
    }
    Ok(reports)
}

/// λ grid spanning the sample levels of a pair.
fn lambda_grid(levels: &[(f64, f64)], n: usize) -> Vec<f64> {
    let max = levels.iter().map(|&(l, _)| l).fold(0.0f64, f64::max);
    let lo = max * 1e-3;
    (0..n)
        .map(|i| lo * (0.999 * max / lo).powf(i as f64 / (n - 1) as f64))
        .collect()
}

fn pair_for(id: &str, points: usize) -> Result<HilbertPair> {
    let h = hilbert_input(id)?;
    Ok(make_hilbert_pair(
        h.as_ref(),
        PairOptions {
            points,
            ..Default::default()
        },
    ))
}

/// Pair, its tail-extended sample representation, and the
/// quadrature-backed field (the forms the logarithmic-determinant
/// checks need).
fn pair_and_function(
    id: &str,
    points: usize,
) -> Result<(HilbertPair, crate::measures::MeasuredFunction, crate::transforms::PairField)> {
    let h = hilbert_input(id)?;
    let pair = make_hilbert_pair(
        h.as_ref(),
        PairOptions {
            points,
            ..Default::default()
        },
    );
    let f = pair.to_measured_function_with_tail(h.as_ref(), 7.0, 48);
    let field = crate::transforms::PairField::new(hilbert_input(id)?, &pair);
    Ok((pair, f, field))
}

fn suite_corollary2(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let names = fixtures_for("corollary2", opts);
    let mut reports = Vec::new();
    for id in &names {
        let start = Instant::now();
        let fit_at = |points: usize| -> Result<(f64, Vec<f64>, Vec<f64>)> {
            let (pair, f, field) = pair_and_function(id, points)?;
            let (ok, min_v, m_top) = field_nonnegative(&field, 1e-2, 1e2);
            if !ok {
                return Err(Error::HypothesesUnmet(format!(
                    "u_f not non-negative: grid min {min_v:.3e} vs scale {m_top:.3e}"
                )));
            }
            let levels = pair.h_levels();
            let lambdas = lambda_grid(&levels, 48);
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for &l in &lambdas {
                lhs.push(distribution(&f, l, Projector::Modulus)?);
                rhs.push(step_distribution_rhs(&levels, l)?);
            }
            Ok((fit_ratio(&lhs.iter().copied().zip(rhs.iter().copied()).collect::<Vec<_>>()), lhs, rhs))
        };
        match (fit_at(opts.pair_points), fit_at(opts.pair_points * 2)) {
            (Ok((c1, _, _)), Ok((c2, lhs, rhs))) => {
                reports.push(inequality_report(
                    "corollary2",
                    id,
                    &lhs,
                    &rhs,
                    c2,
                    stability_between(c1, c2),
                    opts.stability_band,
                    start,
                    "m_f vs Im-part distribution bound under u_f >= 0",
                ));
            }
            (Err(e), _) | (_, Err(e)) => reports.push(unmet("corollary2", id, start, format!("{e}"))),
        }
    }
    Ok(reports)
}

fn suite_corollary3(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let names = fixtures_for("corollary3", opts);
    let mut reports = Vec::new();
    for id in &names {
        let start = Instant::now();
        let fit_for = |sigma: &JensenMeasure| -> Result<(f64, Vec<f64>, Vec<f64>)> {
            let radius = sigma.support_radius().max(1e-6);
            let lambdas: Vec<f64> = (0..48)
                .map(|i| radius * 1e-3 * (1.4e3f64).powf(i as f64 / 47.0))
                .collect();
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for &l in &lambdas {
                let (total, _) = sigma_distributions(sigma, l)?;
                lhs.push(total);
                rhs.push(jensen_rhs(sigma, l)?);
            }
            Ok((fit_ratio(&lhs.iter().copied().zip(rhs.iter().copied()).collect::<Vec<_>>()), lhs, rhs))
        };
        let run = || -> Result<VerificationReport> {
            let sigma = jensen_fixture(id)?;
            let refined = jensen_fixture_refined(id)?;
            let (c1, _, _) = fit_for(&sigma)?;
            let (c2, lhs, rhs) = fit_for(&refined)?;
            Ok(inequality_report(
                "corollary3",
                id,
                &lhs,
                &rhs,
                c2,
                stability_between(c1, c2),
                opts.stability_band,
                start,
                "σ(|z|>=λ) vs imaginary-part distribution bound",
            ))
        };
        reports.push(run().unwrap_or_else(|e| unmet("corollary3", id, start, format!("{e}"))));
    }
    Ok(reports)
}

fn suite_corollary4(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let names = fixtures_for("corollary4", opts);
    let mut reports = Vec::new();
    for combo in &names {
        let start = Instant::now();
        let run = || -> Result<VerificationReport> {
            let (jname, pname) = combo
                .split_once('+')
                .ok_or_else(|| Error::UnknownFixture(combo.clone()))?;
            let coeffs = ANALYTIC_FIXTURES
                .iter()
                .find(|(p, _)| *p == pname)
                .map(|(_, c)| *c)
                .ok_or_else(|| Error::UnknownFixture(pname.to_string()))?;
            let eval_poly = |z: Complex| {
                let mut acc = Complex::new(0.0, 0.0);
                for &c in coeffs.iter().rev() {
                    acc = acc * z + c;
                }
                acc
            };
            let fit_for = |sigma: &JensenMeasure| -> Result<(f64, Vec<f64>, Vec<f64>)> {
                let f_levels: Vec<(f64, f64)> = sigma
                    .atoms()
                    .iter()
                    .map(|&(z, w)| (eval_poly(z).norm(), w))
                    .collect();
                let h_levels: Vec<(f64, f64)> = sigma
                    .atoms()
                    .iter()
                    .map(|&(z, w)| (eval_poly(z).im.abs(), w))
                    .collect();
                let lambdas = lambda_grid(&f_levels, 48);
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for &l in &lambdas {
                    let mf: f64 = f_levels.iter().filter(|&&(v, _)| v >= l).map(|&(_, w)| w).sum();
                    lhs.push(mf);
                    rhs.push(step_distribution_rhs(&h_levels, l)?);
                }
                Ok((fit_ratio(&lhs.iter().copied().zip(rhs.iter().copied()).collect::<Vec<_>>()), lhs, rhs))
            };
            let (c1, _, _) = fit_for(&jensen_fixture(jname)?)?;
            let (c2, lhs, rhs) = fit_for(&jensen_fixture_refined(jname)?)?;
            Ok(inequality_report(
                "corollary4",
                combo,
                &lhs,
                &rhs,
                c2,
                stability_between(c1, c2),
                opts.stability_band,
                start,
                "push-forward distribution bound, f(0) = 0",
            ))
        };
        reports.push(run().unwrap_or_else(|e| unmet("corollary4", combo, start, format!("{e}"))));
    }
    Ok(reports)
}

fn suite_corollary6(which: &str, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let grid = opts.grid()?;
    let names = fixtures_for(which, opts);
    let ps = [1.25, 1.5, 1.75];
    let reports: Vec<VerificationReport> = names
        .par_iter()
        .flat_map(|id| {
            let start = Instant::now();
            let fx = match measure_fixture(id) {
                Ok(fx) => fx,
                Err(e) => {
                    return vec![unmet(which, id, start, format!("fixture error: {e}"))];
                }
            };
            let markers = fixture_markers(&fx.measure);
            let build = |g: &LogGrid| -> Result<(RadialCurve, RadialCurve, RadialCurve)> {
                let mu = RadialCurve::new(
                    "mu",
                    g.radii.clone(),
                    g.radii
                        .iter()
                        .map(|&r| counting_mu(&fx.measure, r))
                        .collect::<Result<Vec<_>>>()?,
                )?;
                let m = max_modulus_curve(fx.field.as_ref(), g)?;
                let (delta, _) = delta_curve(fx.field.as_ref(), &fx.measure, g)?;
                Ok((mu, m, delta))
            };
            let coarse = build(&grid.with_markers(&markers));
            let fine = build(&grid.doubled().with_markers(&markers));
            let (coarse, fine) = match (coarse, fine) {
                (Ok(c), Ok(f)) => (c, f),
                (Err(e), _) | (_, Err(e)) => {
                    return vec![unmet(which, id, start, format!("{e}"))];
                }
            };
            let mut out = Vec::new();
            match which {
                "corollary6_riesz" => {
                    for &p in &ps {
                        let start = Instant::now();
                        let run = |cs: &(RadialCurve, RadialCurve, RadialCurve)| -> Result<(f64, f64, f64)> {
                            let power = -(p + 1.0);
                            let int = |c: &RadialCurve| -> Result<f64> {
                                let lower = match c.low_tail() {
                                    Some(t) => t.lower_int(power)?,
                                    None => 0.0,
                                };
                                let upper = match c.high_tail() {
                                    Some(t) => t.upper_int(power)?,
                                    None => 0.0,
                                };
                                Ok(lower
                                    + c.integrate(c.r_min(), c.r_max(), &|t, v| {
                                        v.max(0.0) * t.powf(power)
                                    })
                                    + upper)
                            };
                            let mu_int = if fx.measure.densities().is_empty() {
                                step_power_integral(&fx.measure.mu_levels(), p)?
                            } else {
                                int(&cs.0)?
                            };
                            Ok((mu_int, int(&cs.1)?, int(&cs.2)?))
                        };
                        match (run(&coarse), run(&fine)) {
                            (Ok((mu_c, m_c, d_c)), Ok((mu_f, m_f, d_f))) => {
                                let c_mu_m = m_f.max(1e-300);
                                let fit_fine = (mu_f / c_mu_m).max(m_f / d_f.max(1e-300));
                                let fit_coarse =
                                    (mu_c / m_c.max(1e-300)).max(m_c / d_c.max(1e-300));
                                out.push(inequality_report(
                                    which,
                                    &format!("{id}[p={p}]"),
                                    &[mu_f, m_f],
                                    &[m_f, d_f],
                                    fit_fine,
                                    stability_between(fit_coarse, fit_fine),
                                    opts.stability_band,
                                    start,
                                    "chained integral bounds μ ≲ M ≲ δ",
                                ));
                            }
                            (Err(e), _) | (_, Err(e)) => {
                                out.push(unmet(which, &format!("{id}[p={p}]"), start, format!("{e}")))
                            }
                        }
                    }
                }
                "corollary6_weak" => {
                    for &p in &ps {
                        let start = Instant::now();
                        let sup = |c: &RadialCurve| -> f64 {
                            c.radii
                                .iter()
                                .zip(&c.values)
                                .map(|(&r, &v)| v.max(0.0) / r.powf(p))
                                .fold(0.0, f64::max)
                        };
                        let fit_f = (sup(&fine.0) / sup(&fine.1).max(1e-300))
                            .max(sup(&fine.1) / sup(&fine.2).max(1e-300));
                        let fit_c = (sup(&coarse.0) / sup(&coarse.1).max(1e-300))
                            .max(sup(&coarse.1) / sup(&coarse.2).max(1e-300));
                        out.push(inequality_report(
                            which,
                            &format!("{id}[p={p}]"),
                            &[sup(&fine.0), sup(&fine.1)],
                            &[sup(&fine.1), sup(&fine.2)],
                            fit_f,
                            stability_between(fit_c, fit_f),
                            opts.stability_band,
                            start,
                            "weak (p,∞) sup bounds μ ≲ M ≲ δ",
                        ));
                    }
                }
                _ => {
                    // corollary6_kolmogorov
                    let start = Instant::now();
                    let run = |cs: &(RadialCurve, RadialCurve, RadialCurve)| -> Result<(f64, f64, f64)> {
                        let sup1 = cs
                            .0
                            .radii
                            .iter()
                            .zip(&cs.0.values)
                            .map(|(&r, &v)| v / r)
                            .fold(0.0f64, f64::max);
                        let sup2 = cs
                            .1
                            .radii
                            .iter()
                            .zip(&cs.1.values)
                            .map(|(&r, &v)| v.max(0.0) / r)
                            .fold(0.0f64, f64::max);
                        let total = full_line_over_t2(&cs.2)?;
                        Ok((sup1, sup2, total))
                    };
                    match (run(&coarse), run(&fine)) {
                        (Ok((s1c, s2c, tc)), Ok((s1f, s2f, tf))) => {
                            let fit_f = (s1f / s2f.max(1e-300)).max(s2f / tf.max(1e-300));
                            let fit_c = (s1c / s2c.max(1e-300)).max(s2c / tc.max(1e-300));
                            out.push(inequality_report(
                                which,
                                id,
                                &[s1f, s2f],
                                &[s2f, tf],
                                fit_f,
                                stability_between(fit_c, fit_f),
                                opts.stability_band,
                                start,
                                "Kolmogorov-type sup bounds μ/r ≲ M/r ≲ ∫δ/t²",
                            ));
                        }
                        (Err(e), _) | (_, Err(e)) => out.push(unmet(which, id, start, format!("{e}"))),
                    }
                }
            }
            out
        })
        .collect();
    Ok(reports)
}

/// `∫_a^∞ e^{-2u} u^e du` tabulated once; the Corollary-7 RHS needs it
/// per (level, λ) pair.
struct LogPowerKernel {
    grid: Vec<f64>,
    values: Vec<f64>,
}

impl LogPowerKernel {
    fn new(e: f64) -> Self {
        let n = 4001;
        let a_max = 42.0;
        let grid: Vec<f64> = (0..n).map(|i| a_max * i as f64 / (n - 1) as f64).collect();
        // backward cumulative trapezoid on a fine subgrid
        let fine = 16;
        let mut values = vec![0.0f64; n];
        let mut acc = 0.0;
        for i in (0..n - 1).rev() {
            let (a, b) = (grid[i], grid[i + 1]);
            let h = (b - a) / fine as f64;
            let mut cell = 0.0;
            for k in 0..fine {
                let u0 = a + k as f64 * h;
                let u1 = u0 + h;
                let f0 = (-2.0 * u0).exp() * u0.powf(e);
                let f1 = (-2.0 * u1).exp() * u1.powf(e);
                cell += 0.5 * (f0 + f1) * h;
            }
            acc += cell;
            values[i] = acc;
        }
        LogPowerKernel { grid, values }
    }

    fn tail(&self, a: f64) -> f64 {
        if a <= 0.0 {
            return self.values[0];
        }
        let n = self.grid.len();
        if a >= self.grid[n - 1] {
            return 0.0;
        }
        let step = self.grid[1] - self.grid[0];
        let idx = ((a / step) as usize).min(n - 2);
        let t = (a - self.grid[idx]) / step;
        self.values[idx] * (1.0 - t) + self.values[idx + 1] * t
    }

    /// `∫_0^λ s (1 + ln^e(λ/s)) m(s) ds / λ² + (1/λ) ∫_λ^∞ m ds` for a
    /// step distribution.
    fn corollary7_rhs(&self, levels: &[(f64, f64)], lambda: f64) -> f64 {
        let mut inner = 0.0;
        let mut outer = 0.0;
        for &(level, w) in levels {
            let c = level.min(lambda);
            if c > 0.0 {
                inner += w * 0.5 * c * c;
                inner += w * lambda * lambda * self.tail((lambda / c).ln());
            }
            outer += w * (level - lambda).max(0.0);
        }
        inner / (lambda * lambda) + outer / lambda
    }
}

fn suite_corollary7(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let names = fixtures_for("corollary7", opts);
    let mut reports = Vec::new();
    for id in &names {
        for &eps in &opts.eps_sweep {
            let start = Instant::now();
            let kernel = LogPowerKernel::new(3.0 + eps);
            let fit_at = |points: usize| -> Result<(f64, Vec<f64>, Vec<f64>)> {
                let vf = vector_fixture(id, points)?;
                // hypothesis: v_f >= 0 on R
                let xs: Vec<f64> = (0..64)
                    .map(|i| {
                        let t = -3.0 + 6.0 * i as f64 / 63.0;
                        if t.abs() < 1e-3 {
                            0.05
                        } else {
                            t
                        }
                    })
                    .collect();
                let mut scale = 1.0f64;
                for &x in &xs {
                    let v = logdet_vector(&vf, x);
                    if v.is_finite() {
                        scale = scale.max(v.abs());
                    }
                }
                for &x in &xs {
                    let v = logdet_vector(&vf, x);
                    if v.is_finite() && v < -1e-6 * scale {
                        return Err(Error::HypothesesUnmet(format!(
                            "v_f({x}) = {v:.3e} < 0 beyond tolerance"
                        )));
                    }
                }
                let f_levels: Vec<(f64, f64)> = vf
                    .samples
                    .iter()
                    .map(|(v, w)| (crate::measures::VectorMeasuredFunction::euclidean_norm(v), *w))
                    .collect();
                let hat_levels: Vec<(f64, f64)> = vf
                    .samples
                    .iter()
                    .map(|(v, w)| (crate::measures::VectorMeasuredFunction::hat_norm(v), *w))
                    .collect();
                let lambdas = lambda_grid(&f_levels, 40);
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for &l in &lambdas {
                    lhs.push(distribution_vector(&vf, l, Projector::Modulus)?);
                    rhs.push(kernel.corollary7_rhs(&hat_levels, l));
                }
                Ok((fit_ratio(&lhs.iter().copied().zip(rhs.iter().copied()).collect::<Vec<_>>()), lhs, rhs))
            };
            match (fit_at(opts.pair_points), fit_at(opts.pair_points * 2)) {
                (Ok((c1, _, _)), Ok((c2, lhs, rhs))) => reports.push(inequality_report(
                    "corollary7",
                    &format!("{id}[eps={eps}]"),
                    &lhs,
                    &rhs,
                    c2,
                    stability_between(c1, c2),
                    opts.stability_band,
                    start,
                    "vector distribution bound via the complex surrogate",
                )),
                (Err(e), _) | (_, Err(e)) => {
                    reports.push(unmet("corollary7", &format!("{id}[eps={eps}]"), start, format!("{e}")))
                }
            }
        }
    }
    Ok(reports)
}

fn suite_theorem3(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let grid = opts.grid()?;
    let names = fixtures_for("theorem3", opts);
    let mut reports = Vec::new();
    for id in &names {
        let start = Instant::now();
        let run = || -> Result<Vec<VerificationReport>> {
            let fx = measure_fixture(id)?;
            let field = fx.field.as_ref();
            let measure = &fx.measure;
            let evaluate = |g: &LogGrid| -> Result<(f64, f64, f64, f64, f64)> {
                let m = max_modulus_curve(field, g)?;
                let (delta, _) = delta_curve(field, measure, g)?;
                let mu = mu_curve(measure, g)?;
                let sup_m_over_r = m
                    .radii
                    .iter()
                    .zip(&m.values)
                    .map(|(&r, &v)| v.max(0.0) / r)
                    .fold(0.0f64, f64::max);
                let rhs = full_line_over_t2(&delta)? + limsup_origin_proxy(&mu);
                // the stronger (Cartwright-side) statement
                let uplus = uplus_real_curve(field, g)?;
                let cart_lhs = full_line_over_t2(&uplus)? + limsup_infinity_proxy(&m).max(0.0);
                Ok((
                    sup_m_over_r,
                    rhs,
                    cart_lhs,
                    limsup_origin_proxy(&mu),
                    limsup_infinity_proxy(&m),
                ))
            };
            let (s_c, rhs_c, cart_c, _, _) = evaluate(&grid)?;
            let (s_f, rhs_f, cart_f, origin_proxy, inf_proxy) = evaluate(&grid.doubled())?;
            let fit_f = s_f / rhs_f.max(1e-300);
            let fit_c = s_c / rhs_c.max(1e-300);
            let kolmogorov = inequality_report(
                "theorem3",
                id,
                &[s_f],
                &[rhs_f],
                fit_f,
                stability_between(fit_c, fit_f),
                opts.stability_band,
                start,
                format!(
                    "sup M/r vs ∫δ/t² + origin proxy (limsup proxies over outer/inner decades: {inf_proxy:.3e}/{origin_proxy:.3e})"
                ),
            );
            let start2 = Instant::now();
            let cart = inequality_report(
                "theorem3_cart",
                id,
                &[cart_f],
                &[rhs_f],
                cart_f / rhs_f.max(1e-300),
                stability_between(cart_c / rhs_c.max(1e-300), cart_f / rhs_f.max(1e-300)),
                opts.stability_band,
                start2,
                "∫u⁺(t)/t² + limsup proxy vs the same RHS",
            );
            Ok(vec![kolmogorov, cart])
        };
        match run() {
            Ok(mut r) => reports.append(&mut r),
            Err(e) => reports.push(unmet("theorem3", id, start, format!("{e}"))),
        }
    }
    Ok(reports)
}

fn suite_marcinkiewicz(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let names = fixtures_for("marcinkiewicz_hilbert", opts);
    let mut reports = Vec::new();
    for id in &names {
        // (0.1): лambda-form on the pair, with grid doubling
        let start = Instant::now();
        let fit_at = |points: usize| -> Result<(f64, Vec<f64>, Vec<f64>)> {
            let pair = pair_for(id, points)?;
            let f = pair.to_measured_function();
            let levels = pair.h_levels();
            let lambdas = lambda_grid(&levels, 48);
            let mut lhs = Vec::new();
            let mut rhs = Vec::new();
            for &l in &lambdas {
                lhs.push(distribution(&f, l, Projector::Modulus)?);
                rhs.push(step_distribution_rhs(&levels, l)?);
            }
            Ok((fit_ratio(&lhs.iter().copied().zip(rhs.iter().copied()).collect::<Vec<_>>()), lhs, rhs))
        };
        match (fit_at(opts.pair_points), fit_at(opts.pair_points * 2)) {
            (Ok((c1, _, _)), Ok((c2, lhs, rhs))) => reports.push(inequality_report(
                "marcinkiewicz_01",
                id,
                &lhs,
                &rhs,
                c2,
                stability_between(c1, c2),
                opts.stability_band,
                start,
                "distribution form",
            )),
            (Err(e), _) | (_, Err(e)) => {
                reports.push(unmet("marcinkiewicz_01", id, start, format!("{e}")))
            }
        }

        // (0.2): counting-function form via the push-forward measure
        let start = Instant::now();
        let run_measure_form = |points: usize| -> Result<f64> {
            let (_, f, _) = pair_and_function(id, points)?;
            let mu = pushforward_measure(&f)?;
            let grid = opts.grid()?.with_markers(&fixture_markers(&mu));
            let n_levels = mu.levin_tsuji_levels();
            let mut pairs = Vec::new();
            for &r in &grid.radii {
                pairs.push((counting_mu(&mu, r)?, step_rhs_borel(&n_levels, r)?));
            }
            Ok(fit_ratio(&pairs))
        };
        match (
            run_measure_form(opts.pair_points),
            run_measure_form(opts.pair_points * 2),
        ) {
            (Ok(c1), Ok(c2)) => reports.push(inequality_report(
                "marcinkiewicz_02",
                id,
                &[c2],
                &[1.0],
                c2,
                stability_between(c1, c2),
                opts.stability_band,
                start,
                "counting-function form μ_f(r) vs Levin-Tsuji RHS",
            )),
            (Err(e), _) | (_, Err(e)) => {
                reports.push(unmet("marcinkiewicz_02", id, start, format!("{e}")))
            }
        }

        // (0.3) Kolmogorov weak-L1 and (0.5) Riesz L^p
        let start = Instant::now();
        let kol = |points: usize| -> Result<f64> {
            let pair = pair_for(id, points)?;
            let f = pair.to_measured_function();
            let h_l1: f64 = f.samples.iter().map(|&(v, w)| w * v.im.abs()).sum();
            let levels = pair.h_levels();
            let lambdas = lambda_grid(&levels, 48);
            let mut worst = 0.0f64;
            for &l in &lambdas {
                let mf = distribution(&f, l, Projector::Modulus)?;
                worst = worst.max(l * mf / h_l1.max(1e-300));
            }
            Ok(worst)
        };
        match (kol(opts.pair_points), kol(opts.pair_points * 2)) {
            (Ok(c1), Ok(c2)) => reports.push(inequality_report(
                "kolmogorov_03",
                id,
                &[c2],
                &[1.0],
                c2,
                stability_between(c1, c2),
                opts.stability_band,
                start,
                "sup λ m_f(λ) vs ||h||_1",
            )),
            (Err(e), _) | (_, Err(e)) => reports.push(unmet("kolmogorov_03", id, start, format!("{e}"))),
        }

        for &p in &[1.25, 1.5, 1.75] {
            let start = Instant::now();
            let riesz = |points: usize| -> Result<f64> {
                let pair = pair_for(id, points)?;
                let f = pair.to_measured_function();
                let fp = f.lp_norm(p, Projector::Modulus);
                let hp = f.lp_norm(p, Projector::ImagPart);
                Ok(fp / hp.max(1e-300))
            };
            match (riesz(opts.pair_points), riesz(opts.pair_points * 2)) {
                (Ok(c1), Ok(c2)) => reports.push(inequality_report(
                    "riesz_05",
                    &format!("{id}[p={p}]"),
                    &[c2],
                    &[1.0],
                    c2,
                    stability_between(c1, c2),
                    opts.stability_band,
                    start,
                    "||f||_p vs ||h||_p",
                )),
                (Err(e), _) | (_, Err(e)) => {
                    reports.push(unmet("riesz_05", &format!("{id}[p={p}]"), start, format!("{e}")))
                }
            }
        }
    }
    Ok(reports)
}

fn suite_positivity(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let names = fixtures_for("positivity", opts);
    let mut reports = Vec::new();
    for id in &names {
        let start = Instant::now();
        let run = || -> Result<VerificationReport> {
            let (_, _, field) = pair_and_function(id, opts.pair_points)?;
            let (min_v, m_top) = logpolar_min(&field, 1e-2, 1e2, 24, 16);
            let threshold = -1e-6 * m_top.abs().max(1.0);
            let pass = min_v >= threshold;
            Ok(VerificationReport {
                check: "positivity".to_string(),
                fixture: id.clone(),
                kind: ReportKind::Assertion {
                    worst_violation: (threshold - min_v).max(0.0),
                },
                lhs_max: min_v,
                lhs_median: min_v,
                rhs_max: threshold,
                rhs_median: threshold,
                tolerance: 1e-6,
                pass,
                hypotheses_unmet: false,
                notes: format!("grid min {min_v:.3e}, M(r_max) = {m_top:.3e}"),
                runtime_ms: start.elapsed().as_secs_f64() * 1e3,
            })
        };
        reports.push(run().unwrap_or_else(|e| unmet("positivity", id, start, format!("{e}"))));
    }
    Ok(reports)
}

fn suite_lemma1(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let names = fixtures_for("lemma1", opts);
    let quad = QuadOptions {
        rel_tol: 1e-8,
        abs_tol: 1e-12,
        max_intervals: 2048,
    };
    let mut reports = Vec::new();
    for id in &names {
        let start = Instant::now();
        let run = || -> Result<VerificationReport> {
            let field = poisson_fixture(id)?;
            let monotone = !field.flip_negative_axis;
            let profile = field.profile;
            let phi = move |t: f64| profile.eval(t);
            let rhs_at = |r: f64| -> f64 {
                let inner = integrate_with_hints(&phi, 0.0, r, &[r / 2.0], quad).value / r;
                let outer_num =
                    integrate_with_hints(|t| phi(t) / (t * t), r, 1e7, &[10.0 * r], quad).value;
                let outer_tail = phi(1e7) / 1e7;
                inner + r * (outer_num + outer_tail)
            };
            let lhs_at = |r: f64| -> f64 {
                let mut best = 0.0f64;
                for j in 0..48 {
                    let th = PI * (j as f64 + 0.5) / 48.0;
                    let v = field.eval(Complex::from_polar(r, th));
                    let weighted = if monotone { v } else { v * th.sin() };
                    best = best.max(weighted);
                }
                best
            };
            let fit_on = |radii: &[f64]| -> f64 {
                fit_ratio(
                    &radii
                        .iter()
                        .map(|&r| (lhs_at(r), rhs_at(r)))
                        .collect::<Vec<_>>(),
                )
            };
            let radii: Vec<f64> = (0..12).map(|i| 0.05 * (4000f64).powf(i as f64 / 11.0)).collect();
            let radii_fine: Vec<f64> =
                (0..24).map(|i| 0.05 * (4000f64).powf(i as f64 / 23.0)).collect();
            let c1 = fit_on(&radii);
            let c2 = fit_on(&radii_fine);
            Ok(inequality_report(
                "lemma1",
                id,
                &[c2],
                &[1.0],
                c2,
                stability_between(c1, c2),
                opts.stability_band,
                start,
                if monotone {
                    "half-plane bound, monotone majorant (sin factor dropped)"
                } else {
                    "half-plane bound with the sin factor"
                },
            ))
        };
        reports.push(run().unwrap_or_else(|e| unmet("lemma1", id, start, format!("{e}"))));
    }
    Ok(reports)
}

fn suite_lemma3(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let names = fixtures_for("lemma3", opts);
    let quad = QuadOptions {
        rel_tol: 1e-8,
        abs_tol: 1e-12,
        max_intervals: 2048,
    };
    let mut reports = Vec::new();
    for id in &names {
        let start = Instant::now();
        let run = || -> Result<VerificationReport> {
            let fx = measure_fixture(id)?;
            if !fx.real_supported {
                return Err(Error::HypothesesUnmet(
                    "lemma3 fixtures must be harmonic off R".to_string(),
                ));
            }
            let field = fx.field.as_ref();
            let lhs_at = |r: f64| -> f64 {
                let mut best = 0.0f64;
                for j in 0..48 {
                    let th = PI * (j as f64 + 0.5) / 48.0;
                    let v = field.eval(Complex::from_polar(r, th));
                    if v.is_finite() {
                        best = best.max(v * th.sin());
                    }
                }
                best
            };
            let rhs_at = |r: f64| -> f64 {
                let circle = integrate_with_hints(
                    |phi: f64| {
                        let v = field.eval(Complex::from_polar(2.0 * r, phi));
                        if v.is_finite() {
                            (-v).max(0.0) * phi.sin()
                        } else {
                            0.0
                        }
                    },
                    0.0,
                    PI,
                    &[PI / 2.0],
                    quad,
                )
                .value
                    / PI;
                let line = integrate_with_hints(
                    |t: f64| {
                        if t == 0.0 {
                            return 0.0;
                        }
                        let v = field.eval(Complex::new(t, 0.0));
                        if v.is_finite() {
                            (-v).max(0.0) / (t * t)
                        } else {
                            0.0
                        }
                    },
                    -2.0 * r,
                    2.0 * r,
                    &[-r, 0.0, r],
                    quad,
                )
                .value
                    * r
                    / (2.0 * PI);
                circle + line
            };
            let fit_on = |n: usize| -> f64 {
                let radii: Vec<f64> = (0..n).map(|i| 0.05 * (400f64).powf(i as f64 / (n - 1) as f64)).collect();
                fit_ratio(
                    &radii
                        .iter()
                        .map(|&r| (lhs_at(r), rhs_at(r)))
                        .collect::<Vec<_>>(),
                )
            };
            let c1 = fit_on(10);
            let c2 = fit_on(20);
            Ok(inequality_report(
                "lemma3",
                id,
                &[c2],
                &[1.0],
                c2,
                stability_between(c1, c2),
                opts.stability_band,
                start,
                "v sinθ vs negative-part integrals at doubled radius",
            ))
        };
        reports.push(run().unwrap_or_else(|e| unmet("lemma3", id, start, format!("{e}"))));
    }
    Ok(reports)
}

fn suite_lemma5(opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    let grid = opts.grid()?;
    let names = fixtures_for("lemma5", opts);
    let reports: Vec<VerificationReport> = names
        .par_iter()
        .map(|id| {
            let start = Instant::now();
            let run = || -> Result<VerificationReport> {
                let fx = measure_fixture(id)?;
                let t_curve = nevanlinna_curve(fx.field.as_ref(), &grid)?;
                let tsuji_curve = tsuji_t_curve(fx.field.as_ref(), &grid)?;
                // literal inequality with certified tails: inflate the LHS
                // tail by 2x, drop the RHS tail entirely
                let mut worst = f64::NEG_INFINITY;
                let mut lhs_all = Vec::new();
                let mut rhs_all = Vec::new();
                for &big_r in grid.radii.iter().take(grid.radii.len() - 4) {
                    let lhs_grid = t_curve.integrate(big_r, t_curve.r_max(), &|t, v| {
                        v.max(0.0) / (t * t * t)
                    });
                    let lhs_tail = match t_curve.high_tail() {
                        Some(t) => 2.0 * t.upper_int(-3.0)?,
                        None => 0.0,
                    };
                    let rhs_grid = tsuji_curve.integrate(big_r, tsuji_curve.r_max(), &|t, v| {
                        v.max(0.0) / (t * t)
                    });
                    let lhs = lhs_grid + lhs_tail;
                    lhs_all.push(lhs);
                    rhs_all.push(rhs_grid);
                    worst = worst.max(lhs - rhs_grid);
                }
                let scale = fmax(&rhs_all).max(1e-12);
                Ok(VerificationReport {
                    check: "lemma5".to_string(),
                    fixture: id.clone(),
                    kind: ReportKind::Assertion {
                        worst_violation: worst.max(0.0) / scale,
                    },
                    lhs_max: fmax(&lhs_all),
                    lhs_median: median(&lhs_all),
                    rhs_max: fmax(&rhs_all),
                    rhs_median: median(&rhs_all),
                    tolerance: 1e-9,
                    pass: worst <= 1e-9 * scale,
                    hypotheses_unmet: false,
                    notes: "∫T/r³ <= ∫𝔗/r² with inflated LHS tail, dropped RHS tail".to_string(),
                    runtime_ms: start.elapsed().as_secs_f64() * 1e3,
                })
            };
            run().unwrap_or_else(|e| unmet("lemma5", id, start, format!("{e}")))
        })
        .collect();
    Ok(reports)
}

/// Runs a named suite and returns one report per fixture/check.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<Vec<VerificationReport>> {
    match name {
        "borel" => suite_borel(opts),
        "theorem1" => suite_theorem1(opts),
        "theorem2" => suite_theorem2(opts),
        "corollary1" => suite_corollary1(opts),
        "corollary2" => suite_corollary2(opts),
        "corollary3" => suite_corollary3(opts),
        "corollary4" => suite_corollary4(opts),
        "corollary5" => suite_corollary5(opts),
        "corollary6_riesz" => suite_corollary6("corollary6_riesz", opts),
        "corollary6_weak" => suite_corollary6("corollary6_weak", opts),
        "corollary6_kolmogorov" => suite_corollary6("corollary6_kolmogorov", opts),
        "corollary7" => suite_corollary7(opts),
        "theorem3" => suite_theorem3(opts),
        "real_line_1_8" => suite_real_line(opts),
        "marcinkiewicz_hilbert" => suite_marcinkiewicz(opts),
        "lemma1" => suite_lemma1(opts),
        "lemma3" => suite_lemma3(opts),
        "lemma5" => suite_lemma5(opts),
        "positivity" => suite_positivity(opts),
        "kernel_identities" => {
            let mut reports = Vec::new();
            for check in ["kernel_k1", "kernel_k2", "kernel_k3"] {
                reports.push(check_identity(check, "", opts)?);
            }
            Ok(reports)
        }
        "levin" | "carleman" | "tsuji_fft" => {
            let fixtures = opts.fixtures.clone().unwrap_or_else(|| {
                let mut v = atom_cloud_ids(20);
                v.push("atoms/single-lower".to_string());
                v
            });
            let reports: Vec<VerificationReport> = fixtures
                .par_iter()
                .map(|id| {
                    check_identity(name, id, opts).unwrap_or_else(|e| {
                        unmet(name, id, Instant::now(), format!("{e}"))
                    })
                })
                .collect();
            Ok(reports)
        }
        _ => Err(Error::UnknownSuite(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fast_opts() -> SuiteOptions {
        SuiteOptions {
            per_decade: 10,
            span: (5e-2, 2e1),
            pair_points: 256,
            identity_tuples: 12,
            ..Default::default()
        }
    }

    #[test]
    fn fit_constant_basics() {
        let grid = LogGrid::new(0.1, 10.0, 16).unwrap();
        let lhs = RadialCurve::from_fn("l", &grid, |t| t).unwrap();
        let rhs = lhs.map("r", |_, v| v);
        let fit = fit_constant(&lhs, &rhs);
        assert!((fit.constant - 1.0).abs() < 1e-12);
        assert!(fit.stability < 1e-12);

        let zero = RadialCurve::from_fn("z", &grid, |_| 0.0).unwrap();
        let fit = fit_constant(&zero, &rhs);
        assert_eq!(fit.constant, 0.0);

        let fit = fit_constant(&lhs, &zero);
        assert!(fit.constant.is_infinite());
    }

    #[test]
    fn kernel_identity_suite_passes() {
        let opts = fast_opts();
        for name in ["kernel_k1", "kernel_k2", "kernel_k3"] {
            let report = check_identity(name, "", &opts).unwrap();
            assert!(report.pass, "{name}: {report:?}");
        }
    }

    #[test]
    fn levin_and_carleman_identities_on_small_cloud() {
        let opts = fast_opts();
        for name in ["levin", "carleman"] {
            let report = check_identity(name, "atoms/cloud-00", &opts).unwrap();
            assert!(report.pass, "{name}: {report:?}");
        }
    }

    #[test]
    fn empty_measure_identity_is_trivial() {
        // both sides vanish for the empty measure; use conj-pair with
        // mass placed far outside the reference radius? simplest: a
        // fixture whose atoms lie outside the semi-disk still passes
        let opts = fast_opts();
        let report = check_identity("carleman", "atoms/single-lower", &opts).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn tsuji_identity_on_handcrafted_fixtures() {
        let opts = fast_opts();
        let report = check_identity("tsuji_fft", "atoms/conj-pair", &opts).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn borel_suite_fits_finite_constants() {
        let mut opts = fast_opts();
        opts.fixtures = Some(vec!["atoms/cloud-00".into(), "atoms/conj-pair".into()]);
        let reports = suite_borel(&opts).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert!(r.pass, "{r:?}");
            if let ReportKind::Inequality { constant, .. } = r.kind {
                assert!(constant.is_finite() && constant > 0.0);
            }
        }
    }

    #[test]
    fn corollary1_marks_up_fixture_unmet() {
        let mut opts = fast_opts();
        opts.fixtures = Some(vec!["up/p1.5".into(), "jensen/circle-64@0.5".into()]);
        let reports = suite_corollary1(&opts).unwrap();
        assert_eq!(reports.len(), 2);
        assert!(reports[0].hypotheses_unmet, "{:?}", reports[0]);
        assert!(!reports[0].blocking_failure());
        assert!(reports[1].pass, "{:?}", reports[1]);
    }

    #[test]
    fn unknown_suite_is_reported() {
        assert!(matches!(
            run_suite("not-a-suite", &fast_opts()),
            Err(Error::UnknownSuite(_))
        ));
    }
}
