//! Link-level physics: blockage, path loss, reflection angles, fading.

use crate::config::SystemParams;
use rand::Rng;
use rand_distr::{Distribution, Gamma};
use std::f64::consts::PI;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ChannelError {
    #[error("distance must be strictly positive, got {0}")]
    NonPositiveDistance(f64),
    #[error("direct path loss is undefined for RIS-reflected links")]
    WrongLinkKind,
}

/// The two physical link types, with the LoS/NLoS sub-cases of the
/// direct one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinkKind {
    DirectLos,
    DirectNlos,
    RisReflected,
}

/// Arrival/departure angle pair at a RIS.
///
/// Both angles live in (0, π/2); they arise from a latent total angle
/// θ ∈ (0, π) split as θ_BR = ε₀·θ, θ_RU = (1-ε₀)·θ.
#[derive(Debug, Clone, Copy)]
pub struct AnglePair {
    pub theta_br: f64,
    pub theta_ru: f64,
}

impl AnglePair {
    /// Split a latent total reflection angle.
    pub fn from_split(theta: f64, epsilon0: f64) -> Self {
        Self {
            theta_br: epsilon0 * theta,
            theta_ru: (1.0 - epsilon0) * theta,
        }
    }
}

/// LoS probability of a direct link: `e^{-β d}`. The NLoS probability is
/// the complement.
pub fn los_probability(d: f64, beta: f64) -> f64 {
    (-beta * d).exp()
}

/// Direct-link path loss `C_κ d^{-α_κ}`.
pub fn pathloss_direct(d: f64, kind: LinkKind, params: &SystemParams) -> Result<f64, ChannelError> {
    if !(d > 0.0) {
        return Err(ChannelError::NonPositiveDistance(d));
    }
    match kind {
        LinkKind::DirectLos => Ok(params.c_l * d.powf(-params.alpha_l)),
        LinkKind::DirectNlos => Ok(params.c_n * d.powf(-params.alpha_n)),
        LinkKind::RisReflected => Err(ChannelError::WrongLinkKind),
    }
}

/// Reflected-path loss under correlated channels:
/// `C_R (d_BR · d_RU)^{-α_R}`.
pub fn pathloss_ris(d_br: f64, d_ru: f64, c_r: f64, alpha_r: f64) -> Result<f64, ChannelError> {
    if !(d_br > 0.0) {
        return Err(ChannelError::NonPositiveDistance(d_br));
    }
    if !(d_ru > 0.0) {
        return Err(ChannelError::NonPositiveDistance(d_ru));
    }
    Ok(c_r * (d_br * d_ru).powf(-alpha_r))
}

/// Instantaneous RIS intercept
/// `C_R = L²/(16π²) (cos θ_BR + cos θ_RU)²`.
pub fn instantaneous_ris_intercept(l: f64, angles: &AnglePair) -> f64 {
    let c = angles.theta_br.cos() + angles.theta_ru.cos();
    l * l / (16.0 * PI * PI) * c * c
}

/// Mean RIS intercept over the uniform total-angle distribution:
/// `E[C_R] = L²/(16π³) (π + sin(2ε₀π)/(4ε₀ - 12ε₀² + 8ε₀³))`.
///
/// The ratio is 0/0 at ε₀ = 1/2; its limit there is π, giving
/// `E[C_R] = L²/(8π²)`.
pub fn mean_ris_intercept(l: f64, epsilon0: f64) -> f64 {
    let ratio = if (epsilon0 - 0.5).abs() < 1e-7 {
        PI
    } else {
        let e = epsilon0;
        (2.0 * e * PI).sin() / (4.0 * e - 12.0 * e * e + 8.0 * e * e * e)
    };
    l * l / (16.0 * PI.powi(3)) * (PI + ratio)
}

/// Unit-mean Nakagami-m fading power: a Gamma(m, 1/m) draw.
pub fn sample_nakagami_power<R: Rng + ?Sized>(m: u32, rng: &mut R) -> f64 {
    let mf = m as f64;
    // shape m, scale 1/m — unit mean, variance 1/m
    Gamma::new(mf, 1.0 / mf).expect("m >= 1").sample(rng)
}
