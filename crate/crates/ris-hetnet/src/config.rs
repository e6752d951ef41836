//! Model parameters: parsing, validation, and derived quantities.
//!
//! Everything downstream works in canonical SI units — meters, watts,
//! hertz, linear SINR. All dB/dBm/km⁻² conversion happens here, at the
//! config boundary, and nowhere else.

use crate::channel;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config file: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse failure on line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("unknown key `{0}`")]
    UnknownKey(String),
    #[error("validation failure: {0}")]
    Validation(String),
}

/// Full parameter set of the network model.
///
/// Densities are per square meter, powers in watts, distances in meters,
/// SINR thresholds linear, rate thresholds in bit/s.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemParams {
    /// BS density λ_B.
    pub lambda_b: f64,
    /// RIS density λ_R.
    pub lambda_r: f64,
    /// UE density λ_U.
    pub lambda_u: f64,
    /// BS transmit power P_B.
    pub p_b: f64,
    /// System bandwidth W.
    pub bandwidth_w: f64,
    /// Path-loss exponent of LoS direct links.
    pub alpha_l: f64,
    /// Path-loss exponent of NLoS direct links.
    pub alpha_n: f64,
    /// Path-loss exponent of RIS-reflected links.
    pub alpha_r: f64,
    /// Direct LoS intercept at 1 m.
    pub c_l: f64,
    /// Direct NLoS intercept at 1 m.
    pub c_n: f64,
    /// Nakagami order of LoS links.
    pub m_l: u32,
    /// Nakagami order of NLoS links.
    pub m_n: u32,
    /// Nakagami order of RIS links.
    pub m_r: u32,
    /// RIS half-length L.
    pub ris_half_length_l: f64,
    /// Split ε₀ of the total reflection angle into arrival/departure.
    pub epsilon0: f64,
    /// NOMA power fraction of the small-path-loss UE.
    pub a_s: f64,
    /// NOMA power fraction of the large-path-loss UE.
    pub a_l_pow: f64,
    /// Blockage parameter β.
    pub beta_blockage: f64,
    /// Receiver noise figure N_f in dB.
    pub noise_figure_nf: f64,
    /// Fixed distance of the connected (pre-associated) UE.
    pub d_c: f64,
    /// SINR threshold of the typical UE.
    pub tau_t: f64,
    /// SINR threshold of the connected UE (SIC stage).
    pub tau_c: f64,
    /// Rate threshold of the typical UE.
    pub rho_t: f64,
    /// Rate threshold of the connected UE.
    pub rho_c: f64,
}

const KM2: f64 = 1e-6; // km⁻² → m⁻²

impl Default for SystemParams {
    /// Reference parameter set of the evaluated scenario (28 GHz urban
    /// deployment). Intercepts default to 1 and ε₀ to the symmetric 0.5.
    fn default() -> Self {
        Self {
            lambda_b: 10.0 * KM2,
            lambda_r: 50.0 * KM2,
            lambda_u: 100.0 * KM2,
            p_b: 1.0,
            bandwidth_w: 1e8,
            alpha_l: 2.0,
            alpha_n: 4.0,
            alpha_r: 2.8,
            c_l: 1.0,
            c_n: 1.0,
            m_l: 4,
            m_n: 1,
            m_r: 4,
            ris_half_length_l: 1.0,
            epsilon0: 0.5,
            a_s: 0.3,
            a_l_pow: 0.7,
            beta_blockage: 1.0 / 141.4,
            noise_figure_nf: 10.0,
            d_c: 50.0,
            tau_t: 1e-2, // -20 dB
            tau_c: 1e-2,
            rho_t: 1e6,
            rho_c: 1e6,
        }
    }
}

/// Quantities computed once per parameter set.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedParams {
    /// Active-BS density λ̃_B.
    pub lambda_b_active: f64,
    /// Noise power σ² in watts.
    pub sigma2: f64,
    /// Alzer constants η_κ = m_κ (m_κ!)^(-1/m_κ).
    pub eta_l: f64,
    pub eta_n: f64,
    pub eta_r: f64,
    /// Mean RIS intercept E[C_R].
    pub c_r_mean: f64,
    /// Probability that at least one LoS BS exists.
    pub p_los_exists: f64,
    /// Probability that every direct link is blocked.
    pub p_nlos_all: f64,
    /// c_LR = (C_L / E[C_R])^(1/α_L).
    pub c_lr_ratio: f64,
    /// λ_R / λ_B.
    pub lambda_ratio_rb: f64,
    /// Mean cell load N̄_B = 1 + 1.28 λ_U/λ_B.
    pub mean_load: f64,
}

fn require(cond: bool, msg: &str) -> Result<(), ConfigError> {
    if cond {
        Ok(())
    } else {
        Err(ConfigError::Validation(msg.to_string()))
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<(), ConfigError> {
        for (name, v) in [
            ("lambda_b", self.lambda_b),
            ("lambda_r", self.lambda_r),
            ("lambda_u", self.lambda_u),
            ("p_b", self.p_b),
            ("bandwidth_w", self.bandwidth_w),
            ("c_l", self.c_l),
            ("c_n", self.c_n),
            ("ris_half_length_l", self.ris_half_length_l),
            ("beta_blockage", self.beta_blockage),
            ("d_c", self.d_c),
            ("tau_t", self.tau_t),
            ("tau_c", self.tau_c),
            ("rho_t", self.rho_t),
            ("rho_c", self.rho_c),
            ("a_s", self.a_s),
            ("a_l", self.a_l_pow),
        ] {
            require(v > 0.0 && v.is_finite(), &format!("{name} must be strictly positive"))?;
        }
        require(
            (self.a_s + self.a_l_pow - 1.0).abs() <= 1e-12,
            "a_s + a_l = 1 violated",
        )?;
        require(self.a_s <= self.a_l_pow, "a_s ≤ a_l violated")?;
        require(self.m_l >= 1 && self.m_n >= 1 && self.m_r >= 1, "Nakagami orders must be ≥ 1")?;
        // α_N and α_R drive semi-infinite interference integrals that only
        // converge for exponents above 2; the LoS integrand is blockage-damped,
        // so α_L merely has to be positive (the reference scenario uses 2).
        require(self.alpha_n > 2.0, "alpha_n > 2 required")?;
        require(self.alpha_r > 2.0, "alpha_r > 2 required")?;
        require(self.alpha_l > 0.0, "alpha_l must be strictly positive")?;
        require(
            self.epsilon0 > 0.0 && self.epsilon0 < 1.0,
            "epsilon0 must lie strictly inside (0, 1)",
        )?;
        Ok(())
    }

    /// Compute every derived quantity. `self` must be valid.
    pub fn derive(&self) -> DerivedParams {
        let ratio = self.lambda_u / (3.5 * self.lambda_b);
        let lambda_b_active = self.lambda_b * (1.0 - (1.0 + ratio).powf(-3.5));
        // σ²[dBm] = -170 + 10 log10(W) + N_f
        let sigma2_dbm = -170.0 + 10.0 * self.bandwidth_w.log10() + self.noise_figure_nf;
        let sigma2 = 10f64.powf((sigma2_dbm - 30.0) / 10.0);
        let eta = |m: u32| -> f64 {
            let mf = m as f64;
            let ln_fact: f64 = (1..=m).map(|k| (k as f64).ln()).sum();
            mf * (-ln_fact / mf).exp()
        };
        let c_r_mean = channel::mean_ris_intercept(self.ris_half_length_l, self.epsilon0);
        let p_nlos_all =
            (-2.0 * std::f64::consts::PI * self.lambda_b / self.beta_blockage.powi(2)).exp();
        DerivedParams {
            lambda_b_active,
            sigma2,
            eta_l: eta(self.m_l),
            eta_n: eta(self.m_n),
            eta_r: eta(self.m_r),
            c_r_mean,
            p_los_exists: 1.0 - p_nlos_all,
            p_nlos_all,
            c_lr_ratio: (self.c_l / c_r_mean).powf(1.0 / self.alpha_l),
            lambda_ratio_rb: self.lambda_r / self.lambda_b,
            mean_load: 1.0 + 1.28 * self.lambda_u / self.lambda_b,
        }
    }

    /// Serialize to the flat key-value config schema. `load_params` on the
    /// output reproduces the struct exactly.
    pub fn to_config_string(&self) -> String {
        let mut s = String::new();
        let mut kv = |k: &str, v: String| {
            s.push_str(k);
            s.push_str(" = ");
            s.push_str(&v);
            s.push('\n');
        };
        let f = |v: f64| format!("{v:.17e}");
        kv("lambda_b", f(self.lambda_b));
        kv("lambda_r", f(self.lambda_r));
        kv("lambda_u", f(self.lambda_u));
        kv("p_b", f(self.p_b));
        kv("bandwidth_w", f(self.bandwidth_w));
        kv("alpha_l", f(self.alpha_l));
        kv("alpha_n", f(self.alpha_n));
        kv("alpha_r", f(self.alpha_r));
        kv("c_l", f(self.c_l));
        kv("c_n", f(self.c_n));
        kv("m_l", self.m_l.to_string());
        kv("m_n", self.m_n.to_string());
        kv("m_r", self.m_r.to_string());
        kv("ris_half_length_l", f(self.ris_half_length_l));
        kv("epsilon0", f(self.epsilon0));
        kv("a_s", f(self.a_s));
        kv("a_l", f(self.a_l_pow));
        kv("beta_blockage", f(self.beta_blockage));
        kv("noise_figure_nf", f(self.noise_figure_nf));
        kv("d_c", f(self.d_c));
        kv("tau_t", f(self.tau_t));
        kv("tau_c", f(self.tau_c));
        kv("rho_t", f(self.rho_t));
        kv("rho_c", f(self.rho_c));
        s
    }
}

/// Parse the flat `key = value` schema. Unknown keys are rejected;
/// missing keys keep their defaults. Density keys accept `_per_km2`
/// variants and threshold keys accept `_db` variants.
pub fn parse_params(text: &str) -> Result<SystemParams, ConfigError> {
    let mut p = SystemParams::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| ConfigError::Parse {
            line: lineno + 1,
            reason: format!("expected `key = value`, got `{line}`"),
        })?;
        let key = key.trim();
        let value = value.trim();
        let num = || -> Result<f64, ConfigError> {
            value.parse::<f64>().map_err(|e| ConfigError::Parse {
                line: lineno + 1,
                reason: format!("bad number `{value}` for `{key}`: {e}"),
            })
        };
        let int = || -> Result<u32, ConfigError> {
            value.parse::<u32>().map_err(|e| ConfigError::Parse {
                line: lineno + 1,
                reason: format!("bad integer `{value}` for `{key}`: {e}"),
            })
        };
        let db = |x: f64| 10f64.powf(x / 10.0);
        match key {
            "lambda_b" => p.lambda_b = num()?,
            "lambda_b_per_km2" => p.lambda_b = num()? * KM2,
            "lambda_r" => p.lambda_r = num()?,
            "lambda_r_per_km2" => p.lambda_r = num()? * KM2,
            "lambda_u" => p.lambda_u = num()?,
            "lambda_u_per_km2" => p.lambda_u = num()? * KM2,
            "p_b" => p.p_b = num()?,
            "bandwidth_w" => p.bandwidth_w = num()?,
            "alpha_l" => p.alpha_l = num()?,
            "alpha_n" => p.alpha_n = num()?,
            "alpha_r" => p.alpha_r = num()?,
            "c_l" => p.c_l = num()?,
            "c_n" => p.c_n = num()?,
            "m_l" => p.m_l = int()?,
            "m_n" => p.m_n = int()?,
            "m_r" => p.m_r = int()?,
            "ris_half_length_l" => p.ris_half_length_l = num()?,
            "epsilon0" => p.epsilon0 = num()?,
            "a_s" => p.a_s = num()?,
            "a_l" => p.a_l_pow = num()?,
            "beta_blockage" => p.beta_blockage = num()?,
            "noise_figure_nf" => p.noise_figure_nf = num()?,
            "d_c" => p.d_c = num()?,
            "tau_t" => p.tau_t = num()?,
            "tau_t_db" => p.tau_t = db(num()?),
            "tau_c" => p.tau_c = num()?,
            "tau_c_db" => p.tau_c = db(num()?),
            "rho_t" => p.rho_t = num()?,
            "rho_c" => p.rho_c = num()?,
            other => return Err(ConfigError::UnknownKey(other.to_string())),
        }
    }
    p.validate()?;
    Ok(p)
}

/// Load and validate a parameter file.
pub fn load_params<P: AsRef<Path>>(path: P) -> Result<SystemParams, ConfigError> {
    let text = std::fs::read_to_string(path)?;
    parse_params(&text)
}
