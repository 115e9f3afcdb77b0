//! Saw functions: piecewise-linear summaries of persistence diagrams that keep
//! the per-threshold birth and death counts a Betti curve loses.
//!
//! Each bar `(b, d)` contributes a trapezoid that ramps from 0 to 1 on
//! `[b, b + λ]`, stays at 1, and ramps back to 0 on `[d − λ, d]`. Summing the
//! trapezoids gives a function that equals the Betti curve away from the
//! thresholds and dips at each threshold by the number of births (right after
//! it) and deaths (right before it).

mod distance;
mod wasserstein;

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::persistence::{check_thresholds, PersistenceDiagram};

pub use distance::{integral, l1_distance, l2_sobolev_distance, sup_distance};
pub use wasserstein::{wasserstein, WassersteinOrder, MAX_MATCHING_PAIRS};

/// Relative margin that keeps `2λ` strictly below the smallest threshold gap.
pub const LAG_CLAMP_EPS: f64 = 1e-6;

/// A quarter of the mean threshold gap, clamped to `½ · min gap · (1 − ε)`.
pub fn default_lag(thresholds: &[f64]) -> Result<f64> {
    check_thresholds(thresholds)?;
    let n = thresholds.len();
    let mean_gap = (thresholds[n - 1] - thresholds[0]) / (n - 1) as f64;
    Ok(clamp_lag(mean_gap / 4.0, thresholds))
}

fn clamp_lag(lag: f64, thresholds: &[f64]) -> f64 {
    let min_gap = thresholds
        .windows(2)
        .map(|w| w[1] - w[0])
        .fold(f64::INFINITY, f64::min);
    lag.min(0.5 * min_gap * (1.0 - LAG_CLAMP_EPS))
}

/// Ramped indicator of one bar.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Generator {
    pub birth: f64,
    pub death: f64,
    pub lag: f64,
}

impl Generator {
    /// Bars shorter than `2λ` become a tent peaking at `(d − b) / 2λ`.
    pub fn eval(&self, t: f64) -> f64 {
        let up = (t - self.birth) / self.lag;
        let down = (self.death - t) / self.lag;
        up.min(down).clamp(0.0, 1.0)
    }

    fn breakpoints(&self, out: &mut Vec<f64>) {
        let (b, d, l) = (self.birth, self.death, self.lag);
        if d - b >= 2.0 * l {
            out.extend([b, b + l, d - l, d]);
        } else {
            out.extend([b, 0.5 * (b + d), d]);
        }
    }

    /// One-sided derivatives at `t`.
    fn slopes_at(&self, t: f64) -> (f64, f64) {
        let (b, d, l) = (self.birth, self.death, self.lag);
        let mid = 0.5 * (b + d);
        let rise_end = (b + l).min(mid);
        let fall_start = (d - l).max(mid);
        let slope = |x: f64, right: bool| -> f64 {
            let inside = |lo: f64, hi: f64| {
                if right {
                    lo <= x && x < hi
                } else {
                    lo < x && x <= hi
                }
            };
            if inside(b, rise_end) {
                1.0 / l
            } else if inside(fall_start, d) {
                -1.0 / l
            } else {
                0.0
            }
        };
        (slope(t, false), slope(t, true))
    }
}

/// Sum of the generators of a diagram's bars.
#[derive(Debug, Clone, PartialEq)]
pub struct SawFunction {
    generators: Vec<Generator>,
    lag: f64,
    domain: (f64, f64),
}

impl SawFunction {
    /// Saw function of raw bars with an explicit lag and evaluation domain.
    pub fn new(bars: &[(f64, f64)], lag: f64, domain: (f64, f64)) -> Result<Self> {
        if !(lag > 0.0 && lag.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "lag must be positive, got {lag}"
            )));
        }
        if domain.0.partial_cmp(&domain.1) != Some(Ordering::Less) {
            return Err(Error::InvalidInput(format!(
                "empty domain [{}, {}]",
                domain.0, domain.1
            )));
        }
        let generators = bars
            .iter()
            .map(|&(birth, death)| {
                if birth.partial_cmp(&death) != Some(Ordering::Less) {
                    return Err(Error::InvalidInput(format!(
                        "bar ({birth}, {death}) has birth >= death"
                    )));
                }
                Ok(Generator { birth, death, lag })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            generators,
            lag,
            domain,
        })
    }

    /// Saw function of a diagram over `[t_1, t_N + δ]`. The lag is clamped so
    /// that ramps never overlap within a threshold cell.
    pub fn from_diagram(pd: &PersistenceDiagram, lag: f64) -> Result<Self> {
        let lag = clamp_lag(lag, &pd.thresholds);
        Self::new(&pd.as_tuples(), lag, (pd.thresholds[0], pd.cap()))
    }

    /// [`from_diagram`](Self::from_diagram) with [`default_lag`].
    pub fn with_default_lag(pd: &PersistenceDiagram) -> Result<Self> {
        Self::from_diagram(pd, default_lag(&pd.thresholds)?)
    }

    pub fn lag(&self) -> f64 {
        self.lag
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        self.generators.iter().map(|g| g.eval(t)).sum()
    }

    /// Sorted, deduplicated points where the slope may change.
    pub fn breakpoints(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(4 * self.generators.len());
        for g in &self.generators {
            g.breakpoints(&mut out);
        }
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }

    /// Left and right derivatives at `t`.
    pub fn slopes_at(&self, t: f64) -> (f64, f64) {
        self.generators.iter().fold((0.0, 0.0), |(l, r), g| {
            let (gl, gr) = g.slopes_at(t);
            (l + gl, r + gr)
        })
    }

    /// Samples at `len` evenly spaced points spanning the domain, endpoints included.
    pub fn signature(&self, len: usize) -> Result<SawSignature> {
        if len < 2 {
            return Err(Error::InvalidInput(format!(
                "signature length must be at least 2, got {len}"
            )));
        }
        let (lo, hi) = self.domain;
        let step = (hi - lo) / (len - 1) as f64;
        let mut sample_points: Vec<f64> = (0..len).map(|i| lo + step * i as f64).collect();
        sample_points[len - 1] = hi;
        let samples = sample_points.iter().map(|&t| self.evaluate(t)).collect();
        Ok(SawSignature {
            samples,
            sample_points,
        })
    }
}

/// Fixed-length sampling of a saw function.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SawSignature {
    pub samples: Vec<f64>,
    pub sample_points: Vec<f64>,
}

/// Births and deaths landing exactly on each threshold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BirthDeathCounts {
    pub births: Vec<usize>,
    pub deaths: Vec<usize>,
}

impl BirthDeathCounts {
    /// Counts per threshold of `pd.thresholds`. Essential classes only
    /// contribute their birth.
    pub fn from_diagram(pd: &PersistenceDiagram) -> Result<Self> {
        let n = pd.thresholds.len();
        let (mut births, mut deaths) = (vec![0; n], vec![0; n]);
        let index = |x: f64| {
            pd.thresholds.iter().position(|&t| t == x).ok_or_else(|| {
                Error::InvalidInput(format!("{x} is not one of the diagram's thresholds"))
            })
        };
        for p in &pd.pairs {
            births[index(p.birth)?] += 1;
            if !p.essential {
                deaths[index(p.death)?] += 1;
            }
        }
        Ok(Self { births, deaths })
    }

    pub fn len(&self) -> usize {
        self.births.len()
    }

    pub fn is_empty(&self) -> bool {
        self.births.is_empty()
    }

    /// Total activity `b + d` at threshold index `i`.
    pub fn tension(&self, i: usize) -> Result<usize> {
        if i >= self.len() {
            return Err(Error::InvalidInput(format!(
                "threshold index {i} out of range 0..{}",
                self.len()
            )));
        }
        Ok(self.births[i] + self.deaths[i])
    }

    pub fn tensions(&self) -> Vec<usize> {
        self.births
            .iter()
            .zip(&self.deaths)
            .map(|(b, d)| b + d)
            .collect()
    }
}

#[cfg(test)]
mod tests;
