//! Radial curves on logarithmic grids, with power-law tail models and
//! the weighted integrals the right-hand-side functionals are built
//! from.
//!
//! Curve semantics: values interpolate linearly in `(ln r, v)` between
//! samples; integrals are taken of that interpolant by per-interval
//! Gauss-Legendre in the log variable, so results are deterministic
//! and independent of traversal order. Outside the grid a fitted
//! power-law tail (over the first/last decade) extends the curve.

use crate::error::{Error, Result};

/// Gauss-Legendre 8-point nodes/weights on [-1, 1].
const GL8_X: [f64; 8] = [
    -0.960_289_856_497_536_2,
    -0.796_666_477_413_626_7,
    -0.525_532_409_916_329_0,
    -0.183_434_642_495_649_8,
    0.183_434_642_495_649_8,
    0.525_532_409_916_329_0,
    0.796_666_477_413_626_7,
    0.960_289_856_497_536_2,
];
const GL8_W: [f64; 8] = [
    0.101_228_536_290_376_3,
    0.222_381_034_453_374_5,
    0.313_706_645_877_887_3,
    0.362_683_783_378_362_0,
    0.362_683_783_378_362_0,
    0.313_706_645_877_887_3,
    0.222_381_034_453_374_5,
    0.101_228_536_290_376_3,
];

/// Logarithmically spaced radii.
#[derive(Clone, Debug)]
pub struct LogGrid {
    pub radii: Vec<f64>,
    pub per_decade: usize,
}

impl LogGrid {
    pub fn new(r_min: f64, r_max: f64, per_decade: usize) -> Result<Self> {
        if !(r_min > 0.0 && r_max > r_min) || per_decade == 0 {
            return Err(Error::domain("LogGrid: need 0 < r_min < r_max and per_decade >= 1"));
        }
        let decades = (r_max / r_min).log10();
        let n = (decades * per_decade as f64).ceil() as usize + 1;
        let radii = (0..n)
            .map(|i| r_min * 10f64.powf(decades * i as f64 / (n - 1) as f64))
            .collect();
        Ok(LogGrid { radii, per_decade })
    }

    /// Same span, twice the resolution.
    pub fn doubled(&self) -> LogGrid {
        LogGrid::new(
            self.radii[0],
            *self.radii.last().unwrap(),
            self.per_decade * 2,
        )
        .expect("doubling a valid grid cannot fail")
    }

    /// Inserts marker radii (deduplicated, clipped to the span). Jump
    /// radii of counting functions go here so that suprema over the
    /// grid see the discontinuities at the same points across
    /// refinements.
    pub fn with_markers(&self, markers: &[f64]) -> LogGrid {
        let lo = self.radii[0];
        let hi = *self.radii.last().unwrap();
        let mut radii = self.radii.clone();
        radii.extend(markers.iter().copied().filter(|&m| m > lo && m < hi));
        radii.sort_by(|a, b| a.partial_cmp(b).unwrap());
        radii.dedup();
        LogGrid {
            radii,
            per_decade: self.per_decade,
        }
    }
}

/// Values sampled on a strictly increasing radius grid.
#[derive(Clone, Debug)]
pub struct RadialCurve {
    pub radii: Vec<f64>,
    pub values: Vec<f64>,
    pub name: String,
}

impl RadialCurve {
    pub fn new(name: impl Into<String>, radii: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if radii.len() != values.len() || radii.len() < 2 {
            return Err(Error::domain("curve needs >= 2 matching samples"));
        }
        if radii.windows(2).any(|w| w[0] >= w[1]) || radii[0] <= 0.0 {
            return Err(Error::domain("curve radii must be positive and increasing"));
        }
        Ok(RadialCurve {
            radii,
            values,
            name: name.into(),
        })
    }

    pub fn from_fn(name: impl Into<String>, grid: &LogGrid, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.radii.iter().map(|&r| f(r)).collect();
        RadialCurve::new(name, grid.radii.clone(), values)
    }

    pub fn r_min(&self) -> f64 {
        self.radii[0]
    }

    pub fn r_max(&self) -> f64 {
        *self.radii.last().unwrap()
    }

    /// Linear interpolation in `(ln r, v)`; clamps outside the grid.
    pub fn value_at(&self, r: f64) -> f64 {
        if r <= self.r_min() {
            return self.values[0];
        }
        if r >= self.r_max() {
            return *self.values.last().unwrap();
        }
        let idx = self.radii.partition_point(|&x| x < r);
        let (r0, r1) = (self.radii[idx - 1], self.radii[idx]);
        let (v0, v1) = (self.values[idx - 1], self.values[idx]);
        let t = (r / r0).ln() / (r1 / r0).ln();
        v0 + t * (v1 - v0)
    }

    /// Verifies monotonicity within an absolute slack.
    pub fn is_nondecreasing(&self, slack: f64) -> bool {
        self.values.windows(2).all(|w| w[1] >= w[0] - slack)
    }

    pub fn map(&self, name: impl Into<String>, f: impl Fn(f64, f64) -> f64) -> RadialCurve {
        RadialCurve {
            radii: self.radii.clone(),
            values: self
                .radii
                .iter()
                .zip(&self.values)
                .map(|(&r, &v)| f(r, v))
                .collect(),
            name: name.into(),
        }
    }

    /// Every other sample (the coarse half of a grid-doubling pair).
    pub fn subsample(&self) -> RadialCurve {
        let radii: Vec<f64> = self.radii.iter().step_by(2).copied().collect();
        let values: Vec<f64> = self.values.iter().step_by(2).copied().collect();
        RadialCurve {
            radii,
            values,
            name: format!("{}/coarse", self.name),
        }
    }

    /// Power-law model fitted over the innermost decade:
    /// `v(t) = v(r_min) (t/r_min)^q`. `None` when the curve vanishes
    /// there (zero tail), `q = 0` fallback when the decade is flat or
    /// non-positive somewhere.
    pub fn low_tail(&self) -> Option<PowerTail> {
        let r0 = self.r_min();
        let v0 = self.values[0];
        if v0 <= 0.0 {
            return None;
        }
        let r_ref = (r0 * 10.0).min(self.r_max());
        let v_ref = self.value_at(r_ref);
        let q = if v_ref > 0.0 && r_ref > r0 {
            (v_ref / v0).ln() / (r_ref / r0).ln()
        } else {
            0.0
        };
        Some(PowerTail {
            anchor: r0,
            value: v0,
            exponent: q,
        })
    }

    /// Power-law model fitted over the outermost decade.
    pub fn high_tail(&self) -> Option<PowerTail> {
        let r1 = self.r_max();
        let v1 = *self.values.last().unwrap();
        if v1 <= 0.0 {
            return None;
        }
        let r_ref = (r1 / 10.0).max(self.r_min());
        let v_ref = self.value_at(r_ref);
        let q = if v_ref > 0.0 && r_ref < r1 {
            (v1 / v_ref).ln() / (r1 / r_ref).ln()
        } else {
            0.0
        };
        Some(PowerTail {
            anchor: r1,
            value: v1,
            exponent: q,
        })
    }

    /// Integral of `f(t, v(t)) dt` over `[lo, hi] ∩ [r_min, r_max]` of
    /// the log-linear interpolant, by per-interval GL8 in `s = ln t`.
    pub fn integrate(&self, lo: f64, hi: f64, f: &dyn Fn(f64, f64) -> f64) -> f64 {
        let lo = lo.max(self.r_min());
        let hi = hi.min(self.r_max());
        if lo >= hi {
            return 0.0;
        }
        let mut total = 0.0;
        let start = self.radii.partition_point(|&x| x <= lo).saturating_sub(1);
        for i in start..self.radii.len() - 1 {
            let a = self.radii[i].max(lo);
            let b = self.radii[i + 1].min(hi);
            if a >= b {
                if self.radii[i] > hi {
                    break;
                }
                continue;
            }
            let (sa, sb) = (a.ln(), b.ln());
            let mid = 0.5 * (sa + sb);
            let half = 0.5 * (sb - sa);
            // interpolant on this interval
            let (r0, r1) = (self.radii[i], self.radii[i + 1]);
            let (v0, v1) = (self.values[i], self.values[i + 1]);
            let slope = (v1 - v0) / (r1 / r0).ln();
            let mut acc = 0.0;
            for k in 0..8 {
                let s = mid + half * GL8_X[k];
                let t = s.exp();
                let v = v0 + slope * (s - r0.ln());
                acc += GL8_W[k] * f(t, v) * t; // dt = t ds
            }
            total += acc * half;
        }
        total
    }
}

/// `v(t) = value * (t/anchor)^exponent` for extrapolation past the grid.
#[derive(Clone, Copy, Debug)]
pub struct PowerTail {
    pub anchor: f64,
    pub value: f64,
    pub exponent: f64,
}

impl PowerTail {
    pub fn eval(&self, t: f64) -> f64 {
        self.value * (t / self.anchor).powf(self.exponent)
    }

    /// `∫_0^anchor v(t) t^power dt`; requires `exponent + power > -1`.
    pub fn lower_int(&self, power: f64) -> Result<f64> {
        let e = self.exponent + power + 1.0;
        if e <= 1e-9 {
            return Err(Error::Divergent(format!(
                "∫_0 v t^{power} with tail exponent {:.3} diverges",
                self.exponent
            )));
        }
        Ok(self.value * self.anchor.powf(power + 1.0) / e)
    }

    /// `∫_anchor^∞ v(t) t^power dt`; requires `exponent + power < -1`.
    pub fn upper_int(&self, power: f64) -> Result<f64> {
        let e = self.exponent + power + 1.0;
        if e >= -1e-9 {
            return Err(Error::Divergent(format!(
                "∫^∞ v t^{power} with tail exponent {:.3} diverges",
                self.exponent
            )));
        }
        Ok(-self.value * self.anchor.powf(power + 1.0) / e)
    }

    /// `∫_0^anchor v(t)/t² dt`; requires `exponent > 1`.
    pub fn lower_over_t2(&self) -> Result<f64> {
        if self.exponent <= 1.0 + 1e-9 {
            return Err(Error::Divergent(format!(
                "∫_0 v/t² with tail exponent {:.3} <= 1",
                self.exponent
            )));
        }
        Ok(self.value / (self.anchor * (self.exponent - 1.0)))
    }

    /// `∫_anchor^∞ v(t)/t³ dt`; requires `exponent < 2`.
    pub fn upper_over_t3(&self) -> Result<f64> {
        if self.exponent >= 2.0 - 1e-9 {
            return Err(Error::Divergent(format!(
                "∫^∞ v/t³ with tail exponent {:.3} >= 2",
                self.exponent
            )));
        }
        Ok(self.value / (self.anchor * self.anchor * (2.0 - self.exponent)))
    }

    /// `∫_anchor^∞ v(t)/t² dt`; requires `exponent < 1`.
    pub fn upper_over_t2(&self) -> Result<f64> {
        if self.exponent >= 1.0 - 1e-9 {
            return Err(Error::Divergent(format!(
                "∫^∞ v/t² with tail exponent {:.3} >= 1",
                self.exponent
            )));
        }
        Ok(self.value / (self.anchor * (1.0 - self.exponent)))
    }

    /// `∫_anchor^∞ v(t) t^{-3} (1 + ln^e(t/r)) dt` for `r <= anchor`;
    /// the log power enters through an incomplete-gamma-type integral
    /// evaluated by a rapidly converging quadrature.
    pub fn upper_over_t3_log(&self, r: f64, log_exponent: f64) -> Result<f64> {
        let q = self.exponent;
        if q >= 2.0 - 1e-9 {
            return Err(Error::Divergent(format!(
                "∫^∞ v/t³ (1+log^e) with tail exponent {q:.3} >= 2"
            )));
        }
        let plain = self.upper_over_t3()?;
        // ∫_anchor^∞ t^{q-3} ln^e(t/r) dt = r^{q-2} ∫_{u0}^∞ e^{(q-2)u} u^e du,
        // u = ln(t/r)
        let u0 = (self.anchor / r).ln();
        let decay = 2.0 - q;
        let c = self.value / self.anchor.powf(q) * r.powf(q - 2.0);
        let mut acc = 0.0;
        // composite GL8 over u in [u0, u0 + 45/decay]
        let span = 45.0 / decay;
        let chunks = 64;
        for i in 0..chunks {
            let a = u0 + span * i as f64 / chunks as f64;
            let b = u0 + span * (i + 1) as f64 / chunks as f64;
            let mid = 0.5 * (a + b);
            let half = 0.5 * (b - a);
            for k in 0..8 {
                let u = mid + half * GL8_X[k];
                acc += GL8_W[k] * half * (-decay * u).exp() * u.max(0.0).powf(log_exponent);
            }
        }
        Ok(plain + c * acc)
    }
}
