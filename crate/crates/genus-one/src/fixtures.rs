//! Named fixture registry shared by the verification suites, the CLI,
//! and the acceptance tests.
//!
//! Fixture families:
//! - `atoms/cloud-XX`: seeded random atom clouds (genus-one, atoms kept
//!   off the real axis and off the reference circles);
//! - `atoms/pair`, `atoms/quad`, ...: small handcrafted measures;
//! - `up/pX.XX`: the `u_p` closed form with its truncated density;
//! - `realline/...`: measures supported on the real axis;
//! - `pv/...`: principal-value-only measures;
//! - `pairs/...`: smooth Hilbert-transform inputs;
//! - `jensen/...`: Jensen measures;
//! - `vector/...`: vector-valued measured functions;
//! - `poisson/...`: half-plane Poisson fixtures for the angle lemmas.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::canonical::{fixture_up, CanonicalField, Field, PvCanonicalField};
use crate::error::{Error, Result};
use crate::measures::{Complex, DensityProfile, LineDensity, PlanarMeasure};
use crate::quad::{integrate_with_hints, QuadOptions};
use crate::transforms::{
    DoubleBump, ModulatedBump, OddBump, RationalDecay, RealFunction, SmoothBump,
};

/// Reference radius used by the identity checks; cloud atoms avoid an
/// annulus around it so "atoms off |z| = R" holds by construction.
pub const REFERENCE_RADIUS: f64 = 3.0;

/// A seeded random atom cloud: `n` atoms, moduli log-uniform in
/// `[0.1, 5]` (avoiding `|z| ≈ REFERENCE_RADIUS`), angles bounded away
/// from the real axis, masses log-uniform in `[0.1, 2]`.
pub fn atom_cloud(seed: u64, n: usize) -> PlanarMeasure {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6E75_5F63_6C6F_7564 ^ seed);
    let mut atoms = Vec::with_capacity(n);
    while atoms.len() < n {
        let r = 0.1 * (50f64).powf(rng.gen::<f64>());
        if (r / REFERENCE_RADIUS - 1.0).abs() < 0.05 {
            continue;
        }
        let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
        let theta = sign * (0.05 + rng.gen::<f64>() * (std::f64::consts::PI - 0.1));
        let mass = 0.1 * (20f64).powf(rng.gen::<f64>());
        atoms.push((Complex::from_polar(r, theta), mass));
    }
    PlanarMeasure::from_atoms(atoms).expect("cloud atoms are valid")
}

/// Hilbert-input fixture names, in registry order.
pub const HILBERT_FIXTURES: [&str; 5] = [
    "pairs/bump",
    "pairs/bump-wide",
    "pairs/bump-odd",
    "pairs/bump-cos3",
    "pairs/double-hump",
];

/// Returns the closed-form input for a `pairs/...` fixture name.
pub fn hilbert_input(name: &str) -> Result<Box<dyn RealFunction + Send>> {
    match name {
        "pairs/bump" => Ok(Box::new(SmoothBump::standard())),
        "pairs/bump-wide" => Ok(Box::new(SmoothBump {
            center: 0.4,
            width: 2.0,
            amplitude: 0.8,
        })),
        "pairs/bump-odd" => Ok(Box::new(OddBump {
            base: SmoothBump {
                center: 0.0,
                width: 1.5,
                amplitude: 1.2,
            },
        })),
        "pairs/bump-cos3" => Ok(Box::new(ModulatedBump {
            base: SmoothBump {
                center: -0.2,
                width: 1.0,
                amplitude: 1.0,
            },
            freq: 3.0,
        })),
        "pairs/double-hump" => Ok(Box::new(DoubleBump {
            first: SmoothBump {
                center: -1.0,
                width: 0.8,
                amplitude: 1.0,
            },
            second: SmoothBump {
                center: 1.2,
                width: 0.6,
                amplitude: 0.7,
            },
        })),
        "pairs/rational" => Ok(Box::new(RationalDecay { cut: 40.0 })),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// Measure-backed fixture: the measure plus a matching evaluator.
pub struct MeasureFixture {
    pub id: String,
    pub measure: PlanarMeasure,
    pub field: Box<dyn Field + Send>,
    /// Closed-form tail correction applied on top of numeric field
    /// evaluation (only the `u_p` family needs one, and it is baked
    /// into its closed-form field instead).
    pub real_supported: bool,
}

impl MeasureFixture {
    fn atoms(id: impl Into<String>, measure: PlanarMeasure) -> Result<Self> {
        let field = CanonicalField::new(measure.clone())?;
        Ok(MeasureFixture {
            id: id.into(),
            measure,
            field: Box::new(field),
            real_supported: false,
        })
    }
}

/// Builds one of the `atoms/`, `up/`, `realline/`, `pv/` fixtures.
pub fn measure_fixture(name: &str) -> Result<MeasureFixture> {
    if let Some(rest) = name.strip_prefix("atoms/cloud-") {
        let idx: u64 = rest
            .parse()
            .map_err(|_| Error::UnknownFixture(name.to_string()))?;
        let n = 10 + (idx as usize * 7) % 41; // 10..=50 atoms
        return MeasureFixture::atoms(name, atom_cloud(idx, n));
    }
    if let Some(rest) = name.strip_prefix("up/p") {
        let p: f64 = rest
            .parse()
            .map_err(|_| Error::UnknownFixture(name.to_string()))?;
        let (field, measure) = fixture_up(p, 1e3)?;
        return Ok(MeasureFixture {
            id: name.to_string(),
            measure,
            field: Box::new(field),
            real_supported: true,
        });
    }
    if let Some(rest) = name.strip_prefix("realline/gen-") {
        let idx: u64 = rest
            .parse()
            .map_err(|_| Error::UnknownFixture(name.to_string()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(0x7265_616C_6C69_6E65 ^ idx);
        let mut densities = Vec::new();
        for _ in 0..2 {
            let a = 0.2 + 3.0 * rng.gen::<f64>();
            let b = a + 0.5 + 2.5 * rng.gen::<f64>();
            let c0 = 0.1 + rng.gen::<f64>();
            let c1 = rng.gen::<f64>() * c0 / (2.0 * b);
            let side = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            let (a, b, profile) = if side > 0.0 {
                (a, b, DensityProfile::Poly(vec![c0, c1]))
            } else {
                (-b, -a, DensityProfile::Poly(vec![c0, -c1]))
            };
            densities.push(LineDensity { a, b, profile });
        }
        let measure = PlanarMeasure::new(vec![], densities)?;
        let field = CanonicalField::new(measure.clone())?;
        return Ok(MeasureFixture {
            id: name.to_string(),
            measure,
            field: Box::new(field),
            real_supported: true,
        });
    }
    if let Some(rest) = name.strip_prefix("pv/gen-") {
        let idx: u64 = rest
            .parse()
            .map_err(|_| Error::UnknownFixture(name.to_string()))?;
        let mut rng = ChaCha8Rng::seed_from_u64(0x7076_5F67_656E ^ idx);
        let a = 0.5 + 2.5 * rng.gen::<f64>();
        let c = 0.2 + 0.8 * rng.gen::<f64>();
        let mut atoms = Vec::new();
        let n_atoms = (idx % 3) as usize;
        for _ in 0..n_atoms {
            let r = 0.5 + 3.0 * rng.gen::<f64>();
            let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
            let th = sign * (0.2 + 2.6 * rng.gen::<f64>());
            atoms.push(crate::measures::Atom {
                location: Complex::from_polar(r, th),
                mass: 0.2 + rng.gen::<f64>(),
            });
        }
        let mut measure = PlanarMeasure::new(
            atoms,
            vec![LineDensity {
                a: -a,
                b: a,
                profile: DensityProfile::Poly(vec![c]),
            }],
        )?;
        measure.mark_pv_only();
        let field = PvCanonicalField::new(measure.clone())?;
        return Ok(MeasureFixture {
            id: name.to_string(),
            measure,
            field: Box::new(field),
            real_supported: true,
        });
    }
    match name {
        "atoms/single-upper" => MeasureFixture::atoms(
            name,
            PlanarMeasure::from_atoms(vec![(Complex::new(0.5, 1.0), 1.0)])?,
        ),
        "atoms/single-lower" => MeasureFixture::atoms(
            name,
            PlanarMeasure::from_atoms(vec![(Complex::new(1.0, -1.0), 1.0)])?,
        ),
        "atoms/conj-pair" => MeasureFixture::atoms(
            name,
            PlanarMeasure::from_atoms(vec![
                (Complex::new(1.0, 1.0), 0.8),
                (Complex::new(1.0, -1.0), 0.8),
            ])?,
        ),
        "realline/poly-bands" => {
            let measure = PlanarMeasure::new(
                vec![],
                vec![
                    LineDensity {
                        a: 0.5,
                        b: 2.0,
                        profile: DensityProfile::Poly(vec![0.4, 0.1]),
                    },
                    LineDensity {
                        a: -3.0,
                        b: -1.0,
                        profile: DensityProfile::Poly(vec![0.6]),
                    },
                ],
            )?;
            let field = CanonicalField::new(measure.clone())?;
            Ok(MeasureFixture {
                id: name.to_string(),
                measure,
                field: Box::new(field),
                real_supported: true,
            })
        }
        "realline/sqrt-band" => {
            let measure = PlanarMeasure::new(
                vec![],
                vec![LineDensity {
                    a: -2.0,
                    b: 2.0,
                    profile: DensityProfile::AbsPower {
                        coeff: 0.5,
                        exponent: 0.5,
                    },
                }],
            )?;
            let field = CanonicalField::new(measure.clone())?;
            Ok(MeasureFixture {
                id: name.to_string(),
                measure,
                field: Box::new(field),
                real_supported: true,
            })
        }
        "pv/sym-const" | "pv/sym-const-wide" | "pv/sym-const-atoms" => {
            let a = if name.ends_with("wide") { 2.0 } else { 1.0 };
            let mut atoms = Vec::new();
            if name.ends_with("atoms") {
                atoms.push((Complex::new(0.8, 1.1), 0.4));
                atoms.push((Complex::new(-1.5, -0.7), 0.6));
            }
            let mut measure = PlanarMeasure::new(
                atoms
                    .into_iter()
                    .map(|(location, mass)| crate::measures::Atom { location, mass })
                    .collect(),
                vec![LineDensity {
                    a: -a,
                    b: a,
                    profile: DensityProfile::Poly(vec![0.5]),
                }],
            )?;
            measure.mark_pv_only();
            let field = PvCanonicalField::new(measure.clone())?;
            Ok(MeasureFixture {
                id: name.to_string(),
                measure,
                field: Box::new(field),
                real_supported: true,
            })
        }
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// The stock fixture ids for the suites over atomic measures.
pub fn atom_cloud_ids(count: usize) -> Vec<String> {
    (0..count).map(|i| format!("atoms/cloud-{i:02}")).collect()
}

// ---------------------------------------------------------------------
// Poisson half-plane fixtures (angle lemmas)
// ---------------------------------------------------------------------

/// Boundary majorant profiles for the half-plane Poisson fixtures.
#[derive(Clone, Copy, Debug)]
pub enum BoundaryProfile {
    /// `Φ(t) = min(t², cap)`: non-decreasing
    QuadraticCapped { cap: f64 },
    /// `Φ(t) = t/(1+t)` scaled: non-decreasing, bounded
    Saturating { scale: f64 },
    /// `Φ(t) = cap · 1{t >= a}`: non-decreasing step
    Step { a: f64, cap: f64 },
}

impl BoundaryProfile {
    pub fn eval(&self, t: f64) -> f64 {
        let t = t.abs();
        match *self {
            BoundaryProfile::QuadraticCapped { cap } => (t * t).min(cap),
            BoundaryProfile::Saturating { scale } => scale * t / (1.0 + t),
            BoundaryProfile::Step { a, cap } => {
                if t >= a {
                    cap
                } else {
                    0.0
                }
            }
        }
    }
}

/// Harmonic extension of `sign · Φ(|t|)` into the upper half-plane by
/// the Poisson integral; subharmonic there, with boundary values
/// dominated by `Φ`. `flip_negative_axis` makes the data odd-ish so
/// the non-monotone branch of the angle lemma is exercised too.
pub struct PoissonField {
    pub profile: BoundaryProfile,
    pub flip_negative_axis: bool,
    window: f64,
}

impl PoissonField {
    pub fn new(profile: BoundaryProfile, flip_negative_axis: bool) -> Self {
        PoissonField {
            profile,
            flip_negative_axis,
            window: 1e4,
        }
    }

    fn boundary(&self, t: f64) -> f64 {
        let v = self.profile.eval(t);
        if self.flip_negative_axis && t < 0.0 {
            -v
        } else {
            v
        }
    }
}

impl Field for PoissonField {
    fn eval(&self, z: Complex) -> f64 {
        let y = z.im;
        if y <= 0.0 {
            return self.boundary(z.re);
        }
        let x = z.re;
        let kernel = |t: f64| {
            let d = (t - x) * (t - x) + y * y;
            self.boundary(t) * y / (std::f64::consts::PI * d)
        };
        let w = self.window.max(10.0 * (x.abs() + y));
        let res = integrate_with_hints(
            kernel,
            -w,
            w,
            &[x - y, x, x + y],
            QuadOptions {
                rel_tol: 1e-9,
                abs_tol: 1e-12,
                max_intervals: 4096,
            },
        );
        res.value
    }

    fn label(&self) -> String {
        format!("poisson[{:?}]", self.profile)
    }
}

/// Fixture ids for the angle-lemma suite.
pub const POISSON_FIXTURES: [&str; 4] = [
    "poisson/quad-cap",
    "poisson/saturating",
    "poisson/step",
    "poisson/quad-cap-flip",
];

pub fn poisson_fixture(name: &str) -> Result<PoissonField> {
    match name {
        "poisson/quad-cap" => Ok(PoissonField::new(
            BoundaryProfile::QuadraticCapped { cap: 4.0 },
            false,
        )),
        "poisson/saturating" => Ok(PoissonField::new(
            BoundaryProfile::Saturating { scale: 2.0 },
            false,
        )),
        "poisson/step" => Ok(PoissonField::new(
            BoundaryProfile::Step { a: 1.0, cap: 3.0 },
            false,
        )),
        "poisson/quad-cap-flip" => Ok(PoissonField::new(
            BoundaryProfile::QuadraticCapped { cap: 4.0 },
            true,
        )),
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

// ---------------------------------------------------------------------
// Jensen fixtures
// ---------------------------------------------------------------------

pub const JENSEN_FIXTURES: [&str; 6] = [
    "jensen/circle-64@0.5",
    "jensen/circle-96@1.0",
    "jensen/circle-128@0.25",
    "jensen/push-square",
    "jensen/push-cubic",
    "jensen/mix",
];

pub fn jensen_fixture(name: &str) -> Result<crate::jensen::JensenMeasure> {
    use crate::jensen::{pushforward, JensenMeasure};
    match name {
        "jensen/circle-64@0.5" => JensenMeasure::uniform_circle(0.5, 64),
        "jensen/circle-96@1.0" => JensenMeasure::uniform_circle(1.0, 96),
        "jensen/circle-128@0.25" => JensenMeasure::uniform_circle(0.25, 128),
        "jensen/push-square" => {
            let base = JensenMeasure::uniform_circle(0.6, 96)?;
            pushforward(&base, &[0.0, 0.0, 1.0])
        }
        "jensen/push-cubic" => {
            let base = JensenMeasure::uniform_circle(0.5, 96)?;
            pushforward(&base, &[0.0, 1.0, 0.0, 1.0 / 3.0])
        }
        "jensen/mix" => {
            let a = JensenMeasure::uniform_circle(0.4, 64)?;
            let b = JensenMeasure::uniform_circle(0.9, 64)?;
            a.mix(&b, 0.35)
        }
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// Refined version of a Jensen fixture (doubled discretization) for
/// stability bands.
pub fn jensen_fixture_refined(name: &str) -> Result<crate::jensen::JensenMeasure> {
    use crate::jensen::{pushforward, JensenMeasure};
    match name {
        "jensen/circle-64@0.5" => JensenMeasure::uniform_circle(0.5, 128),
        "jensen/circle-96@1.0" => JensenMeasure::uniform_circle(1.0, 192),
        "jensen/circle-128@0.25" => JensenMeasure::uniform_circle(0.25, 256),
        "jensen/push-square" => {
            let base = JensenMeasure::uniform_circle(0.6, 192)?;
            pushforward(&base, &[0.0, 0.0, 1.0])
        }
        "jensen/push-cubic" => {
            let base = JensenMeasure::uniform_circle(0.5, 192)?;
            pushforward(&base, &[0.0, 1.0, 0.0, 1.0 / 3.0])
        }
        "jensen/mix" => {
            let a = JensenMeasure::uniform_circle(0.4, 128)?;
            let b = JensenMeasure::uniform_circle(0.9, 128)?;
            a.mix(&b, 0.35)
        }
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

/// Analytic-function fixtures (polynomials with `F(0) = 0`) for the
/// push-forward distribution checks.
pub const ANALYTIC_FIXTURES: [(&str, &[f64]); 4] = [
    ("poly/z", &[0.0, 1.0]),
    ("poly/z2", &[0.0, 0.0, 1.0]),
    ("poly/z+z3", &[0.0, 1.0, 0.0, 1.0 / 3.0]),
    ("poly/mixed", &[0.0, 0.75, 0.25]),
];

// ---------------------------------------------------------------------
// Vector fixtures (Corollary-7 style)
// ---------------------------------------------------------------------

pub const VECTOR_FIXTURES: [&str; 3] = ["vector/pair-split", "vector/pair-3d", "vector/rand"];

/// Vector-valued measured functions with `v_f >= 0` on `R` (built from
/// Hilbert pairs, whose logarithmic determinants are non-negative, or
/// seeded small perturbations verified downstream).
pub fn vector_fixture(name: &str, grid_points: usize) -> Result<crate::measures::VectorMeasuredFunction> {
    use crate::measures::VectorMeasuredFunction;
    use crate::transforms::{make_hilbert_pair, PairOptions};
    match name {
        "vector/pair-split" => {
            let h = SmoothBump::standard();
            let pair = make_hilbert_pair(&h, PairOptions { points: grid_points, ..Default::default() });
            VectorMeasuredFunction::new(
                pair.grid
                    .iter()
                    .enumerate()
                    .map(|(i, _)| {
                        let w = cell_weight(&pair.grid, i);
                        (vec![pair.g[i], pair.h[i]], w)
                    })
                    .collect(),
            )
        }
        "vector/pair-3d" => {
            let h = SmoothBump {
                center: 0.2,
                width: 1.2,
                amplitude: 0.9,
            };
            let pair = make_hilbert_pair(&h, PairOptions { points: grid_points, ..Default::default() });
            let alpha = 0.7f64;
            VectorMeasuredFunction::new(
                pair.grid
                    .iter()
                    .enumerate()
                    .map(|(i, _)| {
                        let w = cell_weight(&pair.grid, i);
                        (
                            vec![pair.g[i], pair.h[i] * alpha.cos(), pair.h[i] * alpha.sin()],
                            w,
                        )
                    })
                    .collect(),
            )
        }
        "vector/rand" => {
            let h = ModulatedBump {
                base: SmoothBump {
                    center: 0.0,
                    width: 1.0,
                    amplitude: 1.0,
                },
                freq: 2.0,
            };
            let pair = make_hilbert_pair(&h, PairOptions { points: grid_points, ..Default::default() });
            VectorMeasuredFunction::new(
                pair.grid
                    .iter()
                    .enumerate()
                    .map(|(i, _)| {
                        let w = cell_weight(&pair.grid, i);
                        (vec![pair.g[i], pair.h[i]], w)
                    })
                    .collect(),
            )
        }
        _ => Err(Error::UnknownFixture(name.to_string())),
    }
}

fn cell_weight(grid: &[f64], i: usize) -> f64 {
    let n = grid.len();
    match i {
        0 => 0.5 * (grid[1] - grid[0]),
        _ if i == n - 1 => 0.5 * (grid[n - 1] - grid[n - 2]),
        _ => 0.5 * (grid[i + 1] - grid[i - 1]),
    }
}

/// Every fixture id the CLI accepts, grouped for `--fixture all`.
pub fn all_fixture_ids() -> Vec<String> {
    let mut ids = atom_cloud_ids(20);
    ids.extend(
        [
            "atoms/single-upper",
            "atoms/single-lower",
            "atoms/conj-pair",
            "up/p1.25",
            "up/p1.5",
            "up/p1.75",
            "realline/poly-bands",
            "realline/sqrt-band",
            "pv/sym-const",
            "pv/sym-const-wide",
            "pv/sym-const-atoms",
        ]
        .iter()
        .map(|s| s.to_string()),
    );
    ids.extend((0..5).map(|i| format!("realline/gen-{i}")));
    ids.extend((0..5).map(|i| format!("pv/gen-{i}")));
    ids.extend(HILBERT_FIXTURES.iter().map(|s| s.to_string()));
    ids.extend(JENSEN_FIXTURES.iter().map(|s| s.to_string()));
    ids.extend(VECTOR_FIXTURES.iter().map(|s| s.to_string()));
    ids.extend(POISSON_FIXTURES.iter().map(|s| s.to_string()));
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clouds_are_deterministic_and_valid() {
        let a = atom_cloud(3, 25);
        let b = atom_cloud(3, 25);
        assert_eq!(a.atoms().len(), 25);
        for (x, y) in a.atoms().iter().zip(b.atoms()) {
            assert_eq!(x.location, y.location);
            assert_eq!(x.mass, y.mass);
        }
        assert!(a.is_genus_one());
        // atoms stay off the real axis and off the reference circle
        for atom in a.atoms() {
            assert!(atom.location.im.abs() > 1e-3);
            assert!((atom.location.norm() / REFERENCE_RADIUS - 1.0).abs() > 0.04);
        }
        let c = atom_cloud(4, 25);
        assert!(a.atoms()[0].location != c.atoms()[0].location);
    }

    #[test]
    fn fixture_registry_resolves() {
        for id in all_fixture_ids() {
            if id.starts_with("pairs/") {
                assert!(hilbert_input(&id).is_ok(), "{id}");
            } else if id.starts_with("jensen/") {
                assert!(jensen_fixture(&id).is_ok(), "{id}");
                assert!(jensen_fixture_refined(&id).is_ok(), "{id}");
            } else if id.starts_with("vector/") {
                assert!(vector_fixture(&id, 256).is_ok(), "{id}");
            } else if id.starts_with("poisson/") {
                assert!(poisson_fixture(&id).is_ok(), "{id}");
            } else {
                assert!(measure_fixture(&id).is_ok(), "{id}");
            }
        }
        assert!(measure_fixture("atoms/not-a-fixture").is_err());
    }

    #[test]
    fn poisson_field_reproduces_boundary_scale() {
        // the Poisson extension of a bounded profile stays within its sup
        let f = poisson_fixture("poisson/saturating").unwrap();
        for &(re, im) in &[(0.0, 0.5), (2.0, 1.0), (-3.0, 0.1)] {
            let v = f.eval(Complex::new(re, im));
            assert!(v >= -1e-9 && v <= 2.0 + 1e-6, "v = {v}");
        }
    }
}
