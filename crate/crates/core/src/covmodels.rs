// Copyright 2026 the infillgp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Correlation models (generalized Cauchy, Matérn, generalized Wendland,
//! squared exponential), parameter validation, correlation matrices,
//! practical-range calibration and the analytic roughness descriptors.

use crate::linalg::Matrix;
use crate::quad;
use crate::specfun::{beta, ln_bessel_k, ln_gamma};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("invalid {family} parameter: {message}")]
    InvalidParameter {
        family: &'static str,
        message: String,
    },
    #[error("dimension must be 1, 2 or 3, got {0}")]
    InvalidDimension(usize),
    #[error("model dimension {model} does not match location dimension {locations}")]
    DimensionMismatch { model: usize, locations: usize },
    #[error("locations {i} and {j} coincide")]
    DuplicateLocations { i: usize, j: usize },
    #[error("coordinate {value} of point {index} is outside [0, 1]")]
    CoordinateOutOfRange { index: usize, value: f64 },
    #[error("empty location set")]
    EmptyLocations,
    #[error("practical-range calibration failed: {0}")]
    RangeCalibration(String),
}

/// Family tag used in reports and CLI model strings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    GeneralizedCauchy,
    Matern,
    GeneralizedWendland,
    SquaredExponential,
}

impl Family {
    pub fn code(self) -> &'static str {
        match self {
            Family::GeneralizedCauchy => "gc",
            Family::Matern => "mt",
            Family::GeneralizedWendland => "gw",
            Family::SquaredExponential => "sqexp",
        }
    }
}

/// Isotropic covariance model with variance `sigma2` on `[0,1]^dim`.
///
/// Correlation forms:
/// * generalized Cauchy: `(1 + (r/gamma)^delta)^(-lambda/delta)`
/// * Matérn: `2^(1-nu)/Γ(nu) (r/alpha)^nu K_nu(r/alpha)`
/// * generalized Wendland: beta-weighted integral with compact support
///   `beta`, smoothness `kappa`, tail exponent `mu`; exactly zero for
///   `r >= beta`
/// * squared exponential: `exp(-r^2/alpha)`
#[derive(Debug, Clone, PartialEq)]
pub enum CovarianceModel {
    GeneralizedCauchy {
        sigma2: f64,
        delta: f64,
        lambda: f64,
        gamma: f64,
        dim: usize,
    },
    Matern {
        sigma2: f64,
        nu: f64,
        alpha: f64,
        dim: usize,
    },
    GeneralizedWendland {
        sigma2: f64,
        kappa: f64,
        mu: f64,
        beta: f64,
        dim: usize,
    },
    SquaredExponential {
        sigma2: f64,
        alpha: f64,
        dim: usize,
    },
}

fn check_dim(dim: usize) -> Result<(), ModelError> {
    if (1..=3).contains(&dim) {
        Ok(())
    } else {
        Err(ModelError::InvalidDimension(dim))
    }
}

fn invalid(family: &'static str, message: impl Into<String>) -> ModelError {
    ModelError::InvalidParameter {
        family,
        message: message.into(),
    }
}

impl CovarianceModel {
    /// Generalized Cauchy model; requires `delta in (0,2]`, `lambda > 0`.
    pub fn gc(
        sigma2: f64,
        delta: f64,
        lambda: f64,
        gamma: f64,
        dim: usize,
    ) -> Result<Self, ModelError> {
        check_dim(dim)?;
        if !(sigma2 > 0.0) {
            return Err(invalid("gc", format!("sigma2 must be > 0, got {sigma2}")));
        }
        if !(gamma > 0.0) {
            return Err(invalid("gc", format!("gamma must be > 0, got {gamma}")));
        }
        if !(delta > 0.0 && delta <= 2.0) {
            return Err(invalid("gc", format!("delta must be in (0,2], got {delta}")));
        }
        if !(lambda > 0.0) {
            return Err(invalid("gc", format!("lambda must be > 0, got {lambda}")));
        }
        Ok(Self::gc_unchecked(sigma2, delta, lambda, gamma, dim))
    }

    pub fn gc_unchecked(sigma2: f64, delta: f64, lambda: f64, gamma: f64, dim: usize) -> Self {
        CovarianceModel::GeneralizedCauchy {
            sigma2,
            delta,
            lambda,
            gamma,
            dim,
        }
    }

    /// Matérn model; requires `nu > 0`, `alpha > 0`.
    pub fn mt(sigma2: f64, nu: f64, alpha: f64, dim: usize) -> Result<Self, ModelError> {
        check_dim(dim)?;
        if !(sigma2 > 0.0) {
            return Err(invalid("mt", format!("sigma2 must be > 0, got {sigma2}")));
        }
        if !(nu > 0.0) {
            return Err(invalid("mt", format!("nu must be > 0, got {nu}")));
        }
        if !(alpha > 0.0) {
            return Err(invalid("mt", format!("alpha must be > 0, got {alpha}")));
        }
        Ok(Self::mt_unchecked(sigma2, nu, alpha, dim))
    }

    pub fn mt_unchecked(sigma2: f64, nu: f64, alpha: f64, dim: usize) -> Self {
        CovarianceModel::Matern {
            sigma2,
            nu,
            alpha,
            dim,
        }
    }

    /// Generalized Wendland model; requires `kappa >= 0` and
    /// `mu >= (dim+1)/2 + kappa` (positive definiteness on `R^dim`).
    pub fn gw(
        sigma2: f64,
        kappa: f64,
        mu: f64,
        beta_support: f64,
        dim: usize,
    ) -> Result<Self, ModelError> {
        check_dim(dim)?;
        if !(sigma2 > 0.0) {
            return Err(invalid("gw", format!("sigma2 must be > 0, got {sigma2}")));
        }
        if !(beta_support > 0.0) {
            return Err(invalid("gw", format!("beta must be > 0, got {beta_support}")));
        }
        if !(kappa >= 0.0) {
            return Err(invalid("gw", format!("kappa must be >= 0, got {kappa}")));
        }
        let mu_min = (dim as f64 + 1.0) / 2.0 + kappa;
        if !(mu >= mu_min) {
            return Err(invalid(
                "gw",
                format!("mu must be >= (d+1)/2 + kappa = {mu_min}, got {mu}"),
            ));
        }
        Ok(Self::gw_unchecked(sigma2, kappa, mu, beta_support, dim))
    }

    pub fn gw_unchecked(sigma2: f64, kappa: f64, mu: f64, beta_support: f64, dim: usize) -> Self {
        CovarianceModel::GeneralizedWendland {
            sigma2,
            kappa,
            mu,
            beta: beta_support,
            dim,
        }
    }

    /// Squared exponential `sigma2 exp(-r^2/alpha)`.
    pub fn sqexp(sigma2: f64, alpha: f64, dim: usize) -> Result<Self, ModelError> {
        check_dim(dim)?;
        if !(sigma2 > 0.0) {
            return Err(invalid("sqexp", format!("sigma2 must be > 0, got {sigma2}")));
        }
        if !(alpha > 0.0) {
            return Err(invalid("sqexp", format!("alpha must be > 0, got {alpha}")));
        }
        Ok(CovarianceModel::SquaredExponential { sigma2, alpha, dim })
    }

    pub fn family(&self) -> Family {
        match self {
            CovarianceModel::GeneralizedCauchy { .. } => Family::GeneralizedCauchy,
            CovarianceModel::Matern { .. } => Family::Matern,
            CovarianceModel::GeneralizedWendland { .. } => Family::GeneralizedWendland,
            CovarianceModel::SquaredExponential { .. } => Family::SquaredExponential,
        }
    }

    pub fn sigma2(&self) -> f64 {
        match *self {
            CovarianceModel::GeneralizedCauchy { sigma2, .. }
            | CovarianceModel::Matern { sigma2, .. }
            | CovarianceModel::GeneralizedWendland { sigma2, .. }
            | CovarianceModel::SquaredExponential { sigma2, .. } => sigma2,
        }
    }

    pub fn dim(&self) -> usize {
        match *self {
            CovarianceModel::GeneralizedCauchy { dim, .. }
            | CovarianceModel::Matern { dim, .. }
            | CovarianceModel::GeneralizedWendland { dim, .. }
            | CovarianceModel::SquaredExponential { dim, .. } => dim,
        }
    }

    pub fn scale(&self) -> f64 {
        match *self {
            CovarianceModel::GeneralizedCauchy { gamma, .. } => gamma,
            CovarianceModel::Matern { alpha, .. } => alpha,
            CovarianceModel::GeneralizedWendland { beta, .. } => beta,
            CovarianceModel::SquaredExponential { alpha, .. } => alpha,
        }
    }

    /// Same model with a different scale parameter.
    pub fn with_scale(&self, scale: f64) -> CovarianceModel {
        let mut m = self.clone();
        match &mut m {
            CovarianceModel::GeneralizedCauchy { gamma, .. } => *gamma = scale,
            CovarianceModel::Matern { alpha, .. } => *alpha = scale,
            CovarianceModel::GeneralizedWendland { beta, .. } => *beta = scale,
            CovarianceModel::SquaredExponential { alpha, .. } => *alpha = scale,
        }
        m
    }

    pub fn label(&self) -> String {
        match *self {
            CovarianceModel::GeneralizedCauchy {
                sigma2,
                delta,
                lambda,
                gamma,
                ..
            } => format!("gc(sigma2={sigma2}, delta={delta}, lambda={lambda}, gamma={gamma})"),
            CovarianceModel::Matern {
                sigma2, nu, alpha, ..
            } => format!("mt(sigma2={sigma2}, nu={nu}, alpha={alpha})"),
            CovarianceModel::GeneralizedWendland {
                sigma2,
                kappa,
                mu,
                beta,
                ..
            } => format!("gw(sigma2={sigma2}, kappa={kappa}, mu={mu}, beta={beta})"),
            CovarianceModel::SquaredExponential { sigma2, alpha, .. } => {
                format!("sqexp(sigma2={sigma2}, alpha={alpha})")
            }
        }
    }

    /// Correlation `phi(r)/sigma2` at distance `r >= 0`; in (0, 1] for the
    /// globally supported families, exactly 0 beyond the support for the
    /// generalized Wendland family.
    pub fn correlation(&self, r: f64) -> f64 {
        debug_assert!(r >= 0.0);
        if r == 0.0 {
            return 1.0;
        }
        match *self {
            CovarianceModel::GeneralizedCauchy {
                delta,
                lambda,
                gamma,
                ..
            } => (1.0 + (r / gamma).powf(delta)).powf(-lambda / delta),
            CovarianceModel::Matern { nu, alpha, .. } => matern_correlation(r / alpha, nu),
            CovarianceModel::GeneralizedWendland {
                kappa, mu, beta, ..
            } => gw_correlation(r / beta, kappa, mu),
            CovarianceModel::SquaredExponential { alpha, .. } => (-r * r / alpha).exp(),
        }
    }

    /// Covariance `sigma2 * correlation(r)`.
    pub fn covariance(&self, r: f64) -> f64 {
        self.sigma2() * self.correlation(r)
    }
}

/// Matérn correlation at standardized distance `x = r/alpha`.
///
/// Evaluated in log space so that very large orders (the squared-exponential
/// limit checks use `nu ~ 1e4`) neither overflow nor lose the `K_nu` /
/// prefactor cancellation.
fn matern_correlation(x: f64, nu: f64) -> f64 {
    let ln_k = match ln_bessel_k(nu, x) {
        Ok(v) => v,
        Err(_) => return 1.0, // x -> 0 limit
    };
    let ln_corr =
        (1.0 - nu) * std::f64::consts::LN_2 - ln_gamma(nu).expect("nu > 0") + nu * x.ln() + ln_k;
    ln_corr.exp().min(1.0)
}

/// Generalized Wendland correlation at standardized distance `s = r/beta`.
///
/// Closed forms for integer `kappa <= 6` and, for integer `mu`, the
/// half-integer cases `kappa = 1/2, 3/2`; adaptive quadrature of the defining
/// integral otherwise (absolute error <= 1e-10).
fn gw_correlation(s: f64, kappa: f64, mu: f64) -> f64 {
    if s >= 1.0 {
        return 0.0;
    }
    if s == 0.0 {
        return 1.0;
    }
    gw_closed_form(s, kappa, mu).unwrap_or_else(|| gw_quadrature(s, kappa, mu))
}

pub(crate) fn gw_closed_form(s: f64, kappa: f64, mu: f64) -> Option<f64> {
    if kappa == 0.0 {
        return Some((1.0 - s).powf(mu));
    }
    if kappa.fract() == 0.0 && kappa <= 6.0 {
        return Some(gw_integer_kappa(s, kappa as u32, mu));
    }
    if (kappa == 0.5 || kappa == 1.5) && mu.fract() == 0.0 && mu >= 1.0 {
        return Some(gw_half_integer_kappa(s, kappa, mu as u32));
    }
    None
}

fn binomial(n: u32, k: u32) -> f64 {
    let mut v = 1.0;
    for i in 0..k {
        v = v * (n - i) as f64 / (i + 1) as f64;
    }
    v
}

/// Original Wendland closed form: expand `(u^2-s^2)^{k-1}` binomially, then
/// each `u^{2j+1}(1-u)^mu` in powers of `(1-u)`.
fn gw_integer_kappa(s: f64, k: u32, mu: f64) -> f64 {
    let one_minus = 1.0 - s;
    let mut total = 0.0;
    for j in 0..k {
        let mut inner = 0.0;
        for i in 0..=(2 * j + 1) {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            inner += sign * binomial(2 * j + 1, i) * one_minus.powf(mu + i as f64 + 1.0)
                / (mu + i as f64 + 1.0);
        }
        let sign = if (k - 1 - j) % 2 == 0 { 1.0 } else { -1.0 };
        total += binomial(k - 1, j) * sign * (s * s).powi((k - 1 - j) as i32) * inner;
    }
    total / beta(2.0 * k as f64, mu + 1.0).expect("valid beta args")
}

/// Missing Wendland closed form for `kappa = 1/2, 3/2` and integer `mu`,
/// via `I_j = int_0^L (s^2+w^2)^{j/2} dw`, `L = sqrt(1-s^2)`, which satisfies
/// `I_j = (L + j s^2 I_{j-2}) / (j+1)`.
fn gw_half_integer_kappa(s: f64, kappa: f64, mu: u32) -> f64 {
    let l = (1.0 - s * s).sqrt();
    let top = mu + 2;
    let mut i_vals = vec![0.0_f64; (top + 1) as usize];
    i_vals[0] = l;
    i_vals[1] = 0.5 * (l + s * s * ((1.0 + l) / s).ln());
    for j in 2..=top {
        i_vals[j as usize] = (l + j as f64 * s * s * i_vals[(j - 2) as usize]) / (j as f64 + 1.0);
    }
    let mut a = 0.0;
    for j in 0..=mu {
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        let term = if kappa == 0.5 {
            i_vals[j as usize]
        } else {
            i_vals[(j + 2) as usize] - s * s * i_vals[j as usize]
        };
        a += sign * binomial(mu, j) * term;
    }
    let b = if kappa == 0.5 {
        beta(1.0, mu as f64 + 1.0).unwrap()
    } else {
        beta(3.0, mu as f64 + 1.0).unwrap()
    };
    a / b
}

/// Quadrature of the defining integral after the variable change
/// `u = sqrt(s^2 + tau^{1/kappa})`, which removes the `(u^2-s^2)^{kappa-1}`
/// endpoint singularity:
/// `phi(s) = [2 kappa B(2 kappa, mu+1)]^{-1} int_0^{(1-s^2)^kappa}
///           (1 - sqrt(s^2 + tau^{1/kappa}))^mu dtau`.
fn gw_quadrature(s: f64, kappa: f64, mu: f64) -> f64 {
    let t_max = (1.0 - s * s).powf(kappa);
    let norm = 2.0 * kappa * beta(2.0 * kappa, mu + 1.0).expect("valid beta args");
    let integrand = |tau: f64| {
        let u = (s * s + tau.powf(1.0 / kappa)).sqrt();
        let w = 1.0 - u;
        if w <= 0.0 {
            0.0
        } else {
            w.powf(mu)
        }
    };
    let r = quad::adaptive(&integrand, 0.0, t_max, 1e-11 * norm.max(1e-6), 40);
    (r.value / norm).clamp(0.0, 1.0)
}

pub(crate) fn gw_correlation_quadrature_only(s: f64, kappa: f64, mu: f64) -> f64 {
    if s >= 1.0 {
        0.0
    } else if s == 0.0 {
        1.0
    } else {
        gw_quadrature(s, kappa, mu)
    }
}

/// Ordered set of distinct points in `[0,1]^d`, `d in {1,2,3}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocationSet {
    dim: usize,
    coords: Vec<f64>, // flat, point i occupies coords[i*dim .. (i+1)*dim]
}

impl LocationSet {
    /// Builds a location set from flat coordinates, validating the unit-cube
    /// range and pairwise distinctness.
    pub fn from_flat(dim: usize, coords: Vec<f64>) -> Result<Self, ModelError> {
        check_dim(dim)?;
        if coords.is_empty() || coords.len() % dim != 0 {
            return Err(ModelError::EmptyLocations);
        }
        for (idx, &v) in coords.iter().enumerate() {
            if !(0.0..=1.0).contains(&v) {
                return Err(ModelError::CoordinateOutOfRange {
                    index: idx / dim,
                    value: v,
                });
            }
        }
        let set = LocationSet { dim, coords };
        for i in 0..set.len() {
            for j in i + 1..set.len() {
                if set.distance(i, j) == 0.0 {
                    return Err(ModelError::DuplicateLocations { i, j });
                }
            }
        }
        Ok(set)
    }

    /// One-dimensional convenience constructor.
    pub fn new_1d(points: Vec<f64>) -> Result<Self, ModelError> {
        Self::from_flat(1, points)
    }

    pub fn len(&self) -> usize {
        self.coords.len() / self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        dist(self.point(i), self.point(j))
    }

    pub fn distance_to(&self, i: usize, target: &[f64]) -> f64 {
        dist(self.point(i), target)
    }
}

pub(crate) fn dist(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Correlation matrix `R[i][j] = correlation(||s_i - s_j||)`: symmetric to
/// the bit (lower triangle mirrored), unit diagonal, positive definite for
/// distinct locations of a valid model.
pub fn correlation_matrix(
    model: &CovarianceModel,
    locs: &LocationSet,
) -> Result<Matrix, ModelError> {
    if model.dim() != locs.dim() {
        return Err(ModelError::DimensionMismatch {
            model: model.dim(),
            locations: locs.dim(),
        });
    }
    if locs.is_empty() {
        return Err(ModelError::EmptyLocations);
    }
    Ok(Matrix::symmetric_from_fn(locs.len(), |i, j| {
        if i == j {
            1.0
        } else {
            model.correlation(locs.distance(i, j))
        }
    }))
}

/// Correlation level defining the practical range.
pub const PRACTICAL_RANGE_LEVEL: f64 = 0.05;

/// Returns the scale at which `correlation(x) = 0.05` exactly (the informal
/// "practical range" fixed as an equality).
///
/// Analytic inversion for the generalized Cauchy and squared exponential
/// families; bracketed bisection on the (monotone) scale for the rest, with
/// tolerance 1e-10 on the correlation residual.
pub fn practical_range_to_scale(
    template: &CovarianceModel,
    x: f64,
) -> Result<f64, ModelError> {
    if !(x > 0.0) {
        return Err(ModelError::RangeCalibration(format!(
            "target range must be > 0, got {x}"
        )));
    }
    match *template {
        CovarianceModel::GeneralizedCauchy { delta, lambda, .. } => {
            Ok(gc_scale_for_practical_range(delta, lambda, x))
        }
        CovarianceModel::SquaredExponential { .. } => {
            // exp(-x^2/alpha) = level  =>  alpha = x^2 / ln(1/level)
            Ok(x * x / (1.0 / PRACTICAL_RANGE_LEVEL).ln())
        }
        _ => {
            let corr_at = |scale: f64| template.with_scale(scale).correlation(x);
            // correlation at fixed r is increasing in the scale; grow/shrink
            // exponentially from scale = x to bracket the 0.05 level
            let mut lo = x;
            let mut hi = x;
            let mut iters = 0;
            while corr_at(lo) > PRACTICAL_RANGE_LEVEL {
                lo *= 0.5;
                iters += 1;
                if iters > 200 {
                    return Err(ModelError::RangeCalibration(
                        "could not bracket from below".into(),
                    ));
                }
            }
            while corr_at(hi) < PRACTICAL_RANGE_LEVEL {
                hi *= 2.0;
                iters += 1;
                if iters > 400 {
                    return Err(ModelError::RangeCalibration(
                        "could not bracket from above".into(),
                    ));
                }
            }
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                let c = corr_at(mid);
                if (c - PRACTICAL_RANGE_LEVEL).abs() <= 1e-10 {
                    return Ok(mid);
                }
                if c > PRACTICAL_RANGE_LEVEL {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            Ok(0.5 * (lo + hi))
        }
    }
}

/// Closed-form practical-range inversion for the generalized Cauchy family:
/// `gamma = x / (0.05^{-delta/lambda} - 1)^{1/delta}`.
pub fn gc_scale_for_practical_range(delta: f64, lambda: f64, x: f64) -> f64 {
    x / (PRACTICAL_RANGE_LEVEL.powf(-delta / lambda) - 1.0).powf(1.0 / delta)
}

/// Fractal dimension of the sample paths, in `[d, d+1)`.
pub fn fractal_dimension(model: &CovarianceModel) -> f64 {
    let d = model.dim() as f64;
    match *model {
        CovarianceModel::GeneralizedCauchy { delta, .. } => {
            if delta < 2.0 {
                d + 1.0 - delta / 2.0
            } else {
                d
            }
        }
        CovarianceModel::Matern { nu, .. } => {
            if nu < 1.0 {
                d + 1.0 - nu
            } else {
                d
            }
        }
        CovarianceModel::GeneralizedWendland { kappa, .. } => {
            if kappa < 0.5 {
                d + 0.5 - kappa
            } else {
                d
            }
        }
        CovarianceModel::SquaredExponential { .. } => d,
    }
}

/// Hurst coefficient `lambda/2` of the long-memory generalized Cauchy models
/// (`lambda <= d`); the other families have no long-memory regime.
pub fn hurst_coefficient(model: &CovarianceModel) -> Option<f64> {
    match *model {
        CovarianceModel::GeneralizedCauchy { lambda, dim, .. } if lambda <= dim as f64 => {
            Some(lambda / 2.0)
        }
        _ => None,
    }
}

/// Family selector for the squared-exponential limit checks. The generalized
/// Wendland case carries the fixed tail exponent `mu` (its validity bound is
/// intentionally ignored: the limit statement holds for the correlation
/// formula itself).
#[derive(Debug, Clone, Copy)]
pub enum SqExpLimitFamily {
    GeneralizedCauchy,
    Matern,
    GeneralizedWendland { mu: f64 },
}

/// Sup-distance on `r_grid` between the rescaled correlation at the given
/// shape parameter and the limiting `exp(-r^2/scale)`.
///
/// Rescalings: GC `delta=2`, `gamma = sqrt(shape * scale / 2)`; Matérn
/// `alpha = sqrt(scale)/(2 sqrt(shape))`; GW support
/// `sqrt(scale) (mu + 2 kappa + 1) Γ(kappa + 1/2) / (2 Γ(kappa + 1))`.
/// An infinite shape is the symbolic limit itself, deviation 0.
pub fn sqexp_limit_deviation(
    family: SqExpLimitFamily,
    shape: f64,
    scale: f64,
    r_grid: &[f64],
) -> f64 {
    if shape.is_infinite() {
        return 0.0;
    }
    let model = match family {
        SqExpLimitFamily::GeneralizedCauchy => {
            CovarianceModel::gc_unchecked(1.0, 2.0, shape, (shape * scale / 2.0).sqrt(), 1)
        }
        SqExpLimitFamily::Matern => {
            CovarianceModel::mt_unchecked(1.0, shape, scale.sqrt() / (2.0 * shape.sqrt()), 1)
        }
        SqExpLimitFamily::GeneralizedWendland { mu } => {
            let g = scale.sqrt() * (mu + 2.0 * shape + 1.0)
                * ((ln_gamma(shape + 0.5).unwrap() - ln_gamma(shape + 1.0).unwrap()).exp())
                / 2.0;
            CovarianceModel::gw_unchecked(1.0, shape, mu, g, 1)
        }
    };
    r_grid
        .iter()
        .map(|&r| (model.correlation(r) - (-r * r / scale).exp()).abs())
        .fold(0.0, f64::max)
}

/// Deviations along an increasing shape sequence; the values should decrease
/// toward 0.
pub fn sqexp_limit_check(
    family: SqExpLimitFamily,
    shapes: &[f64],
    scale: f64,
    r_grid: &[f64],
) -> Vec<f64> {
    shapes
        .iter()
        .map(|&s| sqexp_limit_deviation(family, s, scale, r_grid))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cholesky;

    fn grid(n: usize, lo: f64, hi: f64) -> Vec<f64> {
        (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn gc_basic_values() {
        let m = CovarianceModel::gc(1.0, 1.0, 1.0, 1.0, 1).unwrap();
        assert_eq!(m.correlation(0.0), 1.0);
        assert!((m.correlation(1.0) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn matern_half_is_exponential() {
        let m = CovarianceModel::mt(1.0, 0.5, 0.7, 1).unwrap();
        assert!((m.correlation(0.7) - (-1.0_f64).exp()).abs() < 1e-12);
        let mut x = 1e-4;
        while x < 20.0 {
            let want = (-x / 0.7_f64).exp();
            assert!(
                (m.correlation(x) - want).abs() < 1e-11 * want.max(1e-12),
                "x={x}"
            );
            x *= 3.0;
        }
    }

    #[test]
    fn gw_kappa0_closed_form() {
        let m = CovarianceModel::gw(1.0, 0.0, 4.0, 2.0, 1).unwrap();
        assert!((m.correlation(1.0) - 0.0625).abs() < 1e-15);
        assert_eq!(m.correlation(2.0), 0.0);
        assert_eq!(m.correlation(5.0), 0.0);
    }

    /// Independent quadrature oracle on the original `u`-integral: graded
    /// panels toward the singular endpoint `u = s`, Gauss-Kronrod on each.
    fn gw_oracle(s: f64, kappa: f64, mu: f64) -> f64 {
        let f = |u: f64| u * (u * u - s * s).powf(kappa - 1.0) * (1.0 - u).powf(mu);
        let mut pts = vec![1.0_f64];
        let mut w = (1.0 - s) * 0.5;
        for _ in 0..60 {
            pts.push(s + w);
            w *= 0.5;
        }
        pts.push(s + 1e-300);
        pts.reverse();
        let r = crate::quad::adaptive_panels(&f, &pts, 1e-13, 24);
        r.value / beta(2.0 * kappa, mu + 1.0).unwrap()
    }

    #[test]
    fn gw_fractional_kappa_matches_oracle() {
        // derived: high-precision quadrature of the defining integral
        let m = CovarianceModel::gw(1.0, 0.1, 2.1, 1.0, 1).unwrap();
        let v = m.correlation(0.3);
        assert!((v - 0.513_512_368_316_533_7).abs() < 1e-9, "{v}");
        assert!((v - gw_oracle(0.3, 0.1, 2.1)).abs() < 1e-9);
        for &s in &[0.05, 0.3, 0.62, 0.9, 0.99] {
            for &(kappa, mu) in &[(0.1, 2.1), (0.4, 2.4), (0.75, 3.0), (2.3, 4.5)] {
                let got = gw_correlation(s, kappa, mu);
                let want = gw_oracle(s, kappa, mu);
                assert!(
                    (got - want).abs() < 2e-9,
                    "s={s} kappa={kappa} mu={mu}: {got} vs {want}"
                );
            }
        }
    }

    #[test]
    fn gw_closed_forms_match_quadrature() {
        // kappa = 1, 0.5, 1.5: closed forms against the quadrature route
        for &(kappa, mu) in &[(1.0, 2.5), (1.0, 4.0), (0.5, 3.0), (1.5, 3.0), (2.0, 4.5)] {
            for &s in &[0.01, 0.2, 0.5, 0.8, 0.97] {
                let closed = gw_closed_form(s, kappa, mu).expect("closed form exists");
                let quad = gw_correlation_quadrature_only(s, kappa, mu);
                assert!(
                    (closed - quad).abs() < 1e-9,
                    "kappa={kappa} mu={mu} s={s}: {closed} vs {quad}"
                );
            }
        }
        // kappa = 0 has no convergent defining integral; the quadrature path
        // must instead converge to the kappa = 0 closed form as kappa -> 0.
        let s = 0.4;
        let target = (1.0_f64 - s).powf(2.5);
        let mut prev = f64::INFINITY;
        for &kappa in &[0.05, 0.02, 0.01, 0.005] {
            let d = (gw_correlation_quadrature_only(s, kappa, 2.5) - target).abs();
            assert!(d < prev, "kappa={kappa}");
            prev = d;
        }
        assert!(prev < 5e-3);
    }

    #[test]
    fn wendland_classic_kappa1_form() {
        // (1-s)^(mu+1) (1 + (mu+1) s)
        for &mu in &[2.0, 3.7] {
            for &s in &[0.1, 0.45, 0.9] {
                let want = (1.0_f64 - s).powf(mu + 1.0) * (1.0 + (mu + 1.0) * s);
                let got = gw_closed_form(s, 1.0, mu).unwrap();
                assert!((got - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn correlations_decrease_and_stay_in_range() {
        let models = [
            CovarianceModel::gc(1.0, 0.75, 1.5, 0.3, 1).unwrap(),
            CovarianceModel::gc(1.0, 1.8, 5.0, 0.2, 2).unwrap(),
            CovarianceModel::mt(1.0, 1.5, 0.2, 1).unwrap(),
            CovarianceModel::gw(1.0, 0.1, 2.1, 0.8, 2).unwrap(),
            CovarianceModel::sqexp(1.0, 0.1, 1).unwrap(),
        ];
        for m in &models {
            let mut prev = 1.0;
            for &r in grid(200, 1e-4, 3.0).iter() {
                let c = m.correlation(r);
                assert!(c <= prev + 1e-13, "{} not decreasing at r={r}", m.label());
                assert!((0.0..=1.0).contains(&c));
                prev = c;
            }
        }
        // compact support zero exactly; global support strictly positive
        let gw = CovarianceModel::gw(1.0, 0.5, 3.0, 0.4, 1).unwrap();
        assert_eq!(gw.correlation(0.4), 0.0);
        assert!(models[0].correlation(50.0) > 0.0);
        assert!(models[2].correlation(50.0) > 0.0);
    }

    #[test]
    fn matrix_examples() {
        let m = CovarianceModel::gc(1.0, 1.0, 1.0, 1.0, 1).unwrap();
        let one = LocationSet::new_1d(vec![0.3]).unwrap();
        let r1 = correlation_matrix(&m, &one).unwrap();
        assert_eq!(r1.n(), 1);
        assert_eq!(r1.at(0, 0), 1.0);

        let two = LocationSet::new_1d(vec![0.0, 1.0]).unwrap();
        let r2 = correlation_matrix(&m, &two).unwrap();
        assert!((r2.at(0, 1) - 0.5).abs() < 1e-15);
        assert_eq!(r2.at(0, 1).to_bits(), r2.at(1, 0).to_bits());

        let three = LocationSet::new_1d(vec![0.1, 0.5, 0.55]).unwrap();
        let r3 = correlation_matrix(&m, &three).unwrap();
        assert!(cholesky(&r3).is_ok());
    }

    #[test]
    fn duplicate_locations_rejected() {
        let err = LocationSet::new_1d(vec![0.2, 0.5, 0.2]).unwrap_err();
        assert!(matches!(err, ModelError::DuplicateLocations { i: 0, j: 2 }));
    }

    #[test]
    fn practical_range_gc_analytic() {
        let g = gc_scale_for_practical_range(0.75, 1.5, 0.3);
        assert!((g - 0.057_059_193_030_9).abs() < 1e-10);
        let g2 = gc_scale_for_practical_range(1.2, 5.0, 0.3);
        assert!((g2 - 0.287_515_515_708).abs() < 1e-10);
    }

    #[test]
    fn practical_range_round_trips() {
        let templates = [
            CovarianceModel::gc(1.0, 0.75, 1.5, 1.0, 1).unwrap(),
            CovarianceModel::gc(1.0, 1.2, 5.0, 1.0, 2).unwrap(),
            CovarianceModel::mt(1.0, 0.6, 1.0, 1).unwrap(),
            CovarianceModel::gw(1.0, 0.1, 2.1, 1.0, 2).unwrap(),
            CovarianceModel::sqexp(1.0, 1.0, 1).unwrap(),
        ];
        for t in &templates {
            for &x in &[0.3, 0.6, 0.9] {
                let scale = practical_range_to_scale(t, x).unwrap();
                let c = t.with_scale(scale).correlation(x);
                assert!(
                    (c - 0.05).abs() < 1e-9,
                    "{} x={x}: correlation {c}",
                    t.label()
                );
            }
        }
    }

    #[test]
    fn roughness_descriptors() {
        let gc = CovarianceModel::gc(1.0, 1.0, 0.8, 0.3, 1).unwrap();
        assert!((fractal_dimension(&gc) - 1.5).abs() < 1e-15);
        assert_eq!(hurst_coefficient(&gc), Some(0.4));

        let gc_sm = CovarianceModel::gc(1.0, 1.0, 1.5, 0.3, 1).unwrap();
        assert_eq!(hurst_coefficient(&gc_sm), None);

        let mt = CovarianceModel::mt(1.0, 2.0, 0.3, 2).unwrap();
        assert_eq!(fractal_dimension(&mt), 2.0);
        assert_eq!(hurst_coefficient(&mt), None);

        let gw = CovarianceModel::gw(1.0, 0.25, 2.0, 0.3, 1).unwrap();
        assert!((fractal_dimension(&gw) - 1.25).abs() < 1e-15);
    }

    #[test]
    fn validation_rejects_out_of_range_parameters() {
        assert!(CovarianceModel::gc(1.0, 2.5, 1.0, 1.0, 1).is_err());
        assert!(CovarianceModel::gc(1.0, 1.0, -1.0, 1.0, 1).is_err());
        assert!(CovarianceModel::gc(1.0, 1.0, 1.0, 1.0, 4).is_err());
        assert!(CovarianceModel::mt(1.0, 0.0, 1.0, 1).is_err());
        // mu below (d+1)/2 + kappa
        assert!(CovarianceModel::gw(1.0, 0.1, 1.5, 1.0, 2).is_err());
        assert!(CovarianceModel::gw(-1.0, 0.1, 2.1, 1.0, 1).is_err());
    }

    #[test]
    fn sqexp_limits() {
        let r_grid = grid(41, 0.0, 2.0);
        let devs_gc = sqexp_limit_check(
            SqExpLimitFamily::GeneralizedCauchy,
            &[1e2, 1e3, 1e4],
            0.5,
            &r_grid,
        );
        assert!(devs_gc.windows(2).all(|w| w[1] < w[0]));
        assert!(devs_gc[2] < 1e-3, "gc deviation {}", devs_gc[2]);

        let devs_mt = sqexp_limit_check(SqExpLimitFamily::Matern, &[1e2, 1e3, 1e4], 0.7, &r_grid);
        assert!(devs_mt.windows(2).all(|w| w[1] < w[0]));
        assert!(devs_mt[2] < 1e-3, "mt deviation {}", devs_mt[2]);

        let devs_gw = sqexp_limit_check(
            SqExpLimitFamily::GeneralizedWendland { mu: 2.5 },
            &[4.0, 16.0, 64.0],
            0.8,
            &r_grid,
        );
        assert!(devs_gw.windows(2).all(|w| w[1] < w[0]), "{devs_gw:?}");

        assert_eq!(
            sqexp_limit_deviation(SqExpLimitFamily::Matern, f64::INFINITY, 1.0, &r_grid),
            0.0
        );
    }
}
