//! Parametric observation models and the exact laws of their test statistics.
//!
//! Each model is a one-parameter family `f(.|theta)` with a known null value
//! `theta0` and a common alternative value `theta1`:
//!
//! - `GaussianUnitVar`: `N(theta, 1)` observations, alternative mean above
//!   the null. The per-component statistic is the sample mean, distributed
//!   `N(theta, 1/m)`.
//! - `GammaEnergy`: observations are squared magnitudes of complex Gaussian
//!   samples with power `theta`, i.e. exponential with mean `theta`; the
//!   statistic is the summed energy, `Gamma(m, theta)`. The null is the
//!   occupied (high-power) state, so the alternative lies *below* the null.
//! - `PoissonCount`: Poisson counts with rate `theta`, statistic the summed
//!   count `Poisson(m * theta)`, alternative rate below the null.
//!
//! Thresholds are always expressed in the units of the statistic itself
//! (mean for Gaussian, sum for the others), matching the per-model sufficient
//! statistic rather than the raw log-likelihood ratio; the two orderings are
//! equivalent, which `statistics` checks explicitly.

use rand::Rng;
use rand_distr::Distribution as _;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, DiscreteCDF};

use crate::error::{Error, Result};

/// Relative width at which the quantile bisection stops.
const QUANTILE_REL_TOL: f64 = 1e-10;

// ---------------------------------------------------------------------------
// Observation models
// ---------------------------------------------------------------------------

/// The supported observation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ModelFamily {
    /// Gaussian with unit variance; the parameter is the mean.
    #[serde(rename = "gaussian")]
    GaussianUnitVar,
    /// Squared-magnitude (energy) observations of a complex Gaussian with
    /// power `theta`; exponential per observation.
    #[serde(rename = "gamma-energy")]
    GammaEnergy,
    /// Poisson counts with rate `theta`.
    #[serde(rename = "poisson")]
    PoissonCount,
}

/// Which side of the null counts as alternative-like.
///
/// Gaussian alternatives shift the statistic up; the energy and Poisson
/// models look for components whose statistic is unusually *small* (holes,
/// dim sources), so all their threshold comparisons are reversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Direction {
    AlternativeAbove,
    AlternativeBelow,
}

/// A fully specified binary testing model: family, null and alternative
/// parameters, and test direction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ObservationModel {
    family: ModelFamily,
    theta0: f64,
    theta1: f64,
    direction: Direction,
}

impl ObservationModel {
    /// Build a model, validating the family's parameter ordering. The test
    /// direction is determined by the family.
    pub fn new(family: ModelFamily, theta0: f64, theta1: f64) -> Result<Self> {
        if !theta0.is_finite() || !theta1.is_finite() {
            return Err(Error::Parameter(format!(
                "model parameters must be finite, got theta0={theta0}, theta1={theta1}"
            )));
        }
        let direction = match family {
            ModelFamily::GaussianUnitVar => {
                if theta1 <= theta0 {
                    return Err(Error::Parameter(format!(
                        "GaussianUnitVar requires theta1 > theta0, got theta0={theta0}, theta1={theta1}"
                    )));
                }
                Direction::AlternativeAbove
            }
            ModelFamily::GammaEnergy => {
                if theta1 != 1.0 {
                    return Err(Error::Parameter(format!(
                        "GammaEnergy fixes theta1 = 1 (alternative power), got theta1={theta1}"
                    )));
                }
                if theta0 <= theta1 {
                    return Err(Error::Parameter(format!(
                        "GammaEnergy requires theta0 > theta1 = 1, got theta0={theta0}"
                    )));
                }
                Direction::AlternativeBelow
            }
            ModelFamily::PoissonCount => {
                if theta1 <= 0.0 || theta0 <= theta1 {
                    return Err(Error::Parameter(format!(
                        "PoissonCount requires theta0 > theta1 > 0, got theta0={theta0}, theta1={theta1}"
                    )));
                }
                Direction::AlternativeBelow
            }
        };
        Ok(Self {
            family,
            theta0,
            theta1,
            direction,
        })
    }

    /// Gaussian shift model: `N(theta0, 1)` against `N(theta1, 1)`.
    pub fn gaussian(theta0: f64, theta1: f64) -> Result<Self> {
        Self::new(ModelFamily::GaussianUnitVar, theta0, theta1)
    }

    /// Energy-detection model with occupied power `theta0 > 1` against the
    /// noise-only power fixed at 1.
    pub fn gamma_energy(theta0: f64) -> Result<Self> {
        Self::new(ModelFamily::GammaEnergy, theta0, 1.0)
    }

    /// Poisson count model with null rate `theta0` above the alternative
    /// rate `theta1`.
    pub fn poisson(theta0: f64, theta1: f64) -> Result<Self> {
        Self::new(ModelFamily::PoissonCount, theta0, theta1)
    }

    pub fn family(&self) -> ModelFamily {
        self.family
    }

    pub fn theta0(&self) -> f64 {
        self.theta0
    }

    pub fn theta1(&self) -> f64 {
        self.theta1
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// Parameter in force under the requested hypothesis.
    pub fn theta(&self, under_alternative: bool) -> f64 {
        if under_alternative {
            self.theta1
        } else {
            self.theta0
        }
    }

    /// Draw `count` independent observations from `f(.|theta1)` if
    /// `under_alternative`, else from `f(.|theta0)`.
    ///
    /// Energy observations are squared magnitudes of `CN(0, theta)` samples,
    /// i.e. exponential with mean `theta`.
    pub fn sample<R: Rng + ?Sized>(
        &self,
        under_alternative: bool,
        count: usize,
        rng: &mut R,
    ) -> Result<Vec<f64>> {
        let mut out = Vec::with_capacity(count);
        self.sample_into(under_alternative, count, rng, &mut out)?;
        Ok(out)
    }

    /// Like [`sample`](Self::sample) but appends into a caller-owned buffer,
    /// for allocation-free inner loops.
    pub fn sample_into<R: Rng + ?Sized>(
        &self,
        under_alternative: bool,
        count: usize,
        rng: &mut R,
        out: &mut Vec<f64>,
    ) -> Result<()> {
        if count == 0 {
            return Err(Error::Parameter("sample count must be >= 1".into()));
        }
        let theta = self.theta(under_alternative);
        out.reserve(count);
        match self.family {
            ModelFamily::GaussianUnitVar => {
                let d = rand_distr::Normal::new(theta, 1.0)
                    .map_err(|e| Error::Parameter(e.to_string()))?;
                out.extend((0..count).map(|_| d.sample(rng)));
            }
            ModelFamily::GammaEnergy => {
                // Exp(rate 1/theta) has mean theta.
                let d = rand_distr::Exp::new(1.0 / theta)
                    .map_err(|e| Error::Parameter(e.to_string()))?;
                out.extend((0..count).map(|_| d.sample(rng)));
            }
            ModelFamily::PoissonCount => {
                let d = rand_distr::Poisson::new(theta)
                    .map_err(|e| Error::Parameter(e.to_string()))?;
                out.extend((0..count).map(|_| d.sample(rng)));
            }
        }
        Ok(())
    }

    /// Log-likelihood ratio `log f(y|theta1) - log f(y|theta0)` of a single
    /// observation.
    ///
    /// Strictly increasing in `y` for `AlternativeAbove` models and strictly
    /// decreasing for `AlternativeBelow` ones.
    pub fn log_likelihood_ratio(&self, y: f64) -> Result<f64> {
        let (t0, t1) = (self.theta0, self.theta1);
        match self.family {
            ModelFamily::GaussianUnitVar => Ok((t1 - t0) * y - 0.5 * (t1 * t1 - t0 * t0)),
            ModelFamily::GammaEnergy => {
                if !(y >= 0.0) {
                    return Err(Error::Domain(format!(
                        "energy observation must be >= 0, got {y}"
                    )));
                }
                Ok((t0 / t1).ln() - y * (1.0 / t1 - 1.0 / t0))
            }
            ModelFamily::PoissonCount => {
                if !(y >= 0.0) || y.fract() != 0.0 {
                    return Err(Error::Domain(format!(
                        "count observation must be a nonnegative integer, got {y}"
                    )));
                }
                Ok(y * (t1 / t0).ln() - (t1 - t0))
            }
        }
    }

    /// Exact law of the `m`-observation test statistic under the requested
    /// hypothesis: `N(theta, 1/m)`, `Gamma(m, theta)` or `Poisson(m*theta)`.
    pub fn statistic_distribution(
        &self,
        under_alternative: bool,
        m: usize,
    ) -> Result<StatDistribution> {
        if m == 0 {
            return Err(Error::Parameter("sample count m must be >= 1".into()));
        }
        let theta = self.theta(under_alternative);
        match self.family {
            ModelFamily::GaussianUnitVar => StatDistribution::normal(theta, 1.0 / m as f64),
            ModelFamily::GammaEnergy => StatDistribution::gamma(m as u32, theta),
            ModelFamily::PoissonCount => StatDistribution::poisson(m as f64 * theta),
        }
    }

    /// Median of the null test statistic for `m` observations; the default
    /// threshold of sequential thresholding.
    pub fn null_median(&self, m: usize) -> Result<f64> {
        self.statistic_distribution(false, m)?.quantile(0.5)
    }
}

// ---------------------------------------------------------------------------
// Statistic distributions
// ---------------------------------------------------------------------------

/// Law of a test statistic.
///
/// Gamma shapes are integral by construction (the statistic sums `m`
/// exponentials), which keeps its CDF in closed form.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum StatDistribution {
    Normal { mean: f64, variance: f64 },
    Gamma { shape: u32, scale: f64 },
    Poisson { rate: f64 },
}

impl StatDistribution {
    pub fn normal(mean: f64, variance: f64) -> Result<Self> {
        if !mean.is_finite() || !(variance > 0.0) {
            return Err(Error::Parameter(format!(
                "Normal requires finite mean and variance > 0, got ({mean}, {variance})"
            )));
        }
        Ok(Self::Normal { mean, variance })
    }

    pub fn gamma(shape: u32, scale: f64) -> Result<Self> {
        if shape < 1 || !(scale > 0.0) {
            return Err(Error::Parameter(format!(
                "Gamma requires shape >= 1 and scale > 0, got ({shape}, {scale})"
            )));
        }
        Ok(Self::Gamma { shape, scale })
    }

    pub fn poisson(rate: f64) -> Result<Self> {
        if !(rate > 0.0) {
            return Err(Error::Parameter(format!(
                "Poisson requires rate > 0, got {rate}"
            )));
        }
        Ok(Self::Poisson { rate })
    }

    pub fn mean(&self) -> f64 {
        match *self {
            Self::Normal { mean, .. } => mean,
            Self::Gamma { shape, scale } => shape as f64 * scale,
            Self::Poisson { rate } => rate,
        }
    }

    pub fn variance(&self) -> f64 {
        match *self {
            Self::Normal { variance, .. } => variance,
            Self::Gamma { shape, scale } => shape as f64 * scale * scale,
            Self::Poisson { rate } => rate,
        }
    }

    pub fn std_dev(&self) -> f64 {
        self.variance().sqrt()
    }

    pub fn is_discrete(&self) -> bool {
        matches!(self, Self::Poisson { .. })
    }

    /// Probability mass at `x`; zero for the continuous families.
    pub fn atom(&self, x: f64) -> f64 {
        match *self {
            Self::Poisson { rate } => {
                if x < 0.0 || x.fract() != 0.0 {
                    return 0.0;
                }
                let k = x as u64;
                // pmf(k) = cdf(k) - cdf(k-1); statrs keeps both accurate.
                let p = statrs::distribution::Poisson::new(rate).expect("validated rate");
                let hi = p.cdf(k);
                let lo = if k == 0 { 0.0 } else { p.cdf(k - 1) };
                (hi - lo).max(0.0)
            }
            _ => 0.0,
        }
    }

    /// `P(T <= x)`.
    pub fn cdf(&self, x: f64) -> f64 {
        match *self {
            Self::Normal { mean, variance } => {
                let d = statrs::distribution::Normal::new(mean, variance.sqrt())
                    .expect("validated parameters");
                d.cdf(x)
            }
            Self::Gamma { shape, scale } => {
                // statrs parameterizes by rate.
                let d = statrs::distribution::Gamma::new(shape as f64, 1.0 / scale)
                    .expect("validated parameters");
                d.cdf(x)
            }
            Self::Poisson { rate } => {
                if x < 0.0 {
                    return 0.0;
                }
                let d = statrs::distribution::Poisson::new(rate).expect("validated rate");
                d.cdf(x.floor() as u64)
            }
        }
    }

    /// Quantile function.
    ///
    /// Continuous families: the unique `x` with `cdf(x) = p`, found by
    /// bisection to a relative width of 1e-10. Poisson: the smallest integer
    /// `k` with `cdf(k) >= p`.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!(
                "quantile requires 0 < p < 1, got {p}"
            )));
        }
        match *self {
            Self::Normal { mean, variance } => {
                let sd = variance.sqrt();
                Ok(self.bisect(p, mean - 40.0 * sd, mean + 40.0 * sd))
            }
            Self::Gamma { .. } => {
                let hi = self.mean() + 40.0 * self.std_dev();
                Ok(self.bisect(p, 0.0, hi))
            }
            Self::Poisson { rate } => {
                let d = statrs::distribution::Poisson::new(rate).expect("validated rate");
                if d.cdf(0) >= p {
                    return Ok(0.0);
                }
                // Exponential search for an upper bracket, then the smallest
                // k with cdf(k) >= p by binary search.
                let mut hi = (rate.ceil() as u64).max(1);
                while d.cdf(hi) < p {
                    hi *= 2;
                }
                let mut lo = 0u64; // cdf(lo) < p
                while hi - lo > 1 {
                    let mid = lo + (hi - lo) / 2;
                    if d.cdf(mid) >= p {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                Ok(hi as f64)
            }
        }
    }

    fn bisect(&self, p: f64, mut lo: f64, mut hi: f64) -> f64 {
        let scale = 1.0 + lo.abs().max(hi.abs());
        while hi - lo > QUANTILE_REL_TOL * scale {
            let mid = 0.5 * (lo + hi);
            if self.cdf(mid) < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// A reusable sampler drawing directly from this law.
    pub fn sampler(&self) -> Result<StatSampler> {
        match *self {
            Self::Normal { mean, variance } => Ok(StatSampler::Normal(
                rand_distr::Normal::new(mean, variance.sqrt())
                    .map_err(|e| Error::Parameter(e.to_string()))?,
            )),
            Self::Gamma { shape, scale } => Ok(StatSampler::Gamma(
                // rand_distr parameterizes by scale.
                rand_distr::Gamma::new(shape as f64, scale)
                    .map_err(|e| Error::Parameter(e.to_string()))?,
            )),
            Self::Poisson { rate } => Ok(StatSampler::Poisson(
                rand_distr::Poisson::new(rate).map_err(|e| Error::Parameter(e.to_string()))?,
            )),
        }
    }
}

/// Sampler for a [`StatDistribution`], cheap to reuse across many draws.
#[derive(Debug, Clone, Copy)]
pub enum StatSampler {
    Normal(rand_distr::Normal<f64>),
    Gamma(rand_distr::Gamma<f64>),
    Poisson(rand_distr::Poisson<f64>),
}

impl rand_distr::Distribution<f64> for StatSampler {
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self {
            Self::Normal(d) => d.sample(rng),
            Self::Gamma(d) => d.sample(rng),
            Self::Poisson(d) => d.sample(rng),
        }
    }
}
