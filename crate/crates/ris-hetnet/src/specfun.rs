//! Special functions required by the closed-form coverage expressions.
//!
//! Everything here is self-contained real-argument numerics: the modified
//! Bessel function `K0` (product-distance density), the Gauss
//! hypergeometric function at non-positive argument (RIS interference
//! Laplace transform), the Whittaker function `W_{-1/2,0}` (closed-form
//! association probability for equal path-loss exponents), the
//! exponential integral `E1`, and `ln Γ` (cell-load PMF).
//!
//! Each function is pure and total over its stated domain. The `*_ext`
//! variants attach a conservative absolute-error estimate for use in
//! quadrature error budgeting.

use thiserror::Error;

/// Euler–Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Series/continued-fraction termination threshold.
const EPS: f64 = 1e-16;

#[derive(Debug, Error)]
pub enum SpecFunError {
    #[error("{func}: argument {value} outside domain ({requirement})")]
    Domain {
        func: &'static str,
        value: f64,
        requirement: &'static str,
    },
    #[error("{func}: no convergence after {iterations} iterations")]
    NonConvergence { func: &'static str, iterations: u32 },
}

/// A value with an estimated absolute-error bound.
#[derive(Debug, Clone, Copy)]
pub struct SpecFunResult {
    pub value: f64,
    pub est_abs_error: f64,
}

fn domain(func: &'static str, value: f64, requirement: &'static str) -> SpecFunError {
    SpecFunError::Domain {
        func,
        value,
        requirement,
    }
}

/// Modified Bessel function of the second kind, order zero.
///
/// Power series against `I0` below `x = 2`, Steed's continued fraction
/// above. Relative accuracy is a few ulps across `[1e-6, 700]`; values
/// past the underflow point are flushed to zero.
pub fn bessel_k0(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(domain("bessel_k0", x, "x > 0"));
    }
    if x <= 2.0 {
        // K0 = -(ln(x/2) + γ) I0(x) + Σ_{k≥1} (x²/4)^k/(k!)² H_k
        let q = 0.25 * x * x;
        let mut term = 1.0;
        let mut i0 = 1.0;
        let mut h = 0.0;
        let mut sum_h = 0.0;
        for k in 1..=40u32 {
            term *= q / ((k * k) as f64);
            h += 1.0 / k as f64;
            i0 += term;
            sum_h += term * h;
            if term * (h + 1.0) < EPS * (i0 + sum_h.abs()) {
                break;
            }
        }
        Ok(-((0.5 * x).ln() + EULER_GAMMA) * i0 + sum_h)
    } else {
        // Steed's CF2 for ν = 0: K0 = sqrt(π/(2x)) e^{-x} / s.
        let mut b = 2.0 * (1.0 + x);
        let mut d = 1.0 / b;
        let mut delh = d;
        let mut q1 = 0.0;
        let mut q2 = 1.0;
        let a1 = 0.25;
        let mut q = a1;
        let mut c = a1;
        let mut a = -a1;
        let mut s = 1.0 + q * delh;
        let mut converged = false;
        for i in 2..=10000u32 {
            a -= 2.0 * (i - 1) as f64;
            c = -a * c / i as f64;
            let qnew = (q1 - b * q2) / a;
            q1 = q2;
            q2 = qnew;
            q += c * qnew;
            b += 2.0;
            d = 1.0 / (b + a * d);
            delh = (b * d - 1.0) * delh;
            let dels = q * delh;
            s += dels;
            if (dels / s).abs() < EPS {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(SpecFunError::NonConvergence {
                func: "bessel_k0",
                iterations: 10000,
            });
        }
        Ok((std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() / s)
    }
}

pub fn bessel_k0_ext(x: f64) -> Result<SpecFunResult, SpecFunError> {
    let value = bessel_k0(x)?;
    Ok(SpecFunResult {
        value,
        est_abs_error: 1e-14 * value.abs() + 1e-300,
    })
}

/// Exponential integral `E1(z) = ∫_z^∞ e^{-t}/t dt` for `z > 0`.
///
/// Series for `z ≤ 1`, modified-Lentz continued fraction above.
pub fn exp_integral_e1(z: f64) -> Result<f64, SpecFunError> {
    if !(z > 0.0) {
        return Err(domain("exp_integral_e1", z, "z > 0"));
    }
    if z <= 1.0 {
        Ok(e1_series(z))
    } else {
        Ok(e1_scaled_cf(z)? * (-z).exp())
    }
}

pub fn exp_integral_e1_ext(z: f64) -> Result<SpecFunResult, SpecFunError> {
    let value = exp_integral_e1(z)?;
    Ok(SpecFunResult {
        value,
        est_abs_error: 1e-14 * value.abs() + 1e-300,
    })
}

/// E1 on (0, 1]: `-γ - ln z + Σ (-1)^{k+1} z^k / (k·k!)`.
fn e1_series(z: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..=60u32 {
        term *= -z / k as f64;
        let contrib = -term / k as f64;
        sum += contrib;
        if contrib.abs() < EPS * sum.abs().max(1.0) {
            break;
        }
    }
    -EULER_GAMMA - z.ln() + sum
}

/// `e^z E1(z)` by the continued fraction `1/(z+1- 1/(z+3- 4/(z+5- …)))`.
fn e1_scaled_cf(z: f64) -> Result<f64, SpecFunError> {
    const FPMIN: f64 = 1e-300;
    let mut b = z + 1.0;
    let mut c = 1.0 / FPMIN;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..=10000u32 {
        let a = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        let del = c * d;
        h *= del;
        if (del - 1.0).abs() < EPS {
            return Ok(h);
        }
    }
    Err(SpecFunError::NonConvergence {
        func: "exp_integral_e1",
        iterations: 10000,
    })
}

/// Whittaker function `W_{-1/2,0}(z) = e^{z/2} √z E1(z)` for `z > 0`.
///
/// Evaluated through the scaled exponential integral so large arguments
/// neither overflow nor lose the exponentially small result.
pub fn whittaker_w_mhalf_zero(z: f64) -> Result<f64, SpecFunError> {
    if !(z > 0.0) {
        return Err(domain("whittaker_w_mhalf_zero", z, "z > 0"));
    }
    let scaled = if z <= 1.0 {
        z.exp() * e1_series(z)
    } else {
        e1_scaled_cf(z)?
    };
    Ok(z.sqrt() * (-0.5 * z).exp() * scaled)
}

pub fn whittaker_w_mhalf_zero_ext(z: f64) -> Result<SpecFunResult, SpecFunError> {
    let value = whittaker_w_mhalf_zero(z)?;
    Ok(SpecFunResult {
        value,
        est_abs_error: 3e-14 * value.abs() + 1e-300,
    })
}

/// `ln Γ(x)` for `x > 0`: Stirling series with argument shift below 10.
pub fn log_gamma(x: f64) -> Result<f64, SpecFunError> {
    if !(x > 0.0) {
        return Err(domain("log_gamma", x, "x > 0"));
    }
    // Bernoulli coefficients B_{2n} / (2n(2n-1)).
    const COEF: [f64; 8] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
        -3617.0 / 122_400.0,
    ];
    const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

    let mut shift = 0.0;
    let mut y = x;
    while y < 10.0 {
        shift += y.ln();
        y += 1.0;
    }
    let inv = 1.0 / y;
    let inv2 = inv * inv;
    let mut series = 0.0;
    let mut p = inv;
    for c in COEF {
        series += c * p;
        p *= inv2;
    }
    Ok((y - 0.5) * y.ln() - y + HALF_LN_2PI + series - shift)
}

pub fn log_gamma_ext(x: f64) -> Result<SpecFunResult, SpecFunError> {
    let value = log_gamma(x)?;
    Ok(SpecFunResult {
        value,
        est_abs_error: 1e-14 * value.abs().max(1.0),
    })
}

/// Gauss hypergeometric function `₂F₁(a, b; c; z)` restricted to `z ≤ 0`.
///
/// The interference Laplace transform needs the pattern
/// `₂F₁(m, -2/α; 1-2/α; -ζ)` with integer `m ≥ 1` and `α > 2`. For that
/// shape two self-contained routes cover the whole half-line: the Pfaff
/// transform `(1-z)^{-a} ₂F₁(a, c-b; c; z/(z-1))` whose series argument
/// stays in `[0, 1/2]` for `|z| ≤ 1`, and an incomplete-beta complement
/// for `|z| > 1` that converges geometrically no matter how large `|z|`
/// grows. Other parameter combinations fall back to the plain Pfaff
/// series, which converges for any `z ≤ 0` (slowly once `|z|` is huge).
pub fn gauss_2f1_negz(a: f64, b: f64, c: f64, z: f64) -> Result<f64, SpecFunError> {
    if z > 0.0 {
        return Err(domain("gauss_2f1_negz", z, "z <= 0"));
    }
    if c <= 0.0 && (c - c.round()).abs() <= 1e-9 {
        return Err(domain("gauss_2f1_negz", c, "c must not be a non-positive integer"));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    let m = a.round();
    let pattern = a > 0.0
        && (a - m).abs() <= 1e-9
        && m <= 1e6
        && ((c - b) - 1.0).abs() <= 1e-12
        && b > -1.0
        && b < 0.0;
    let zeta = -z;
    if pattern && zeta > 1.0 {
        Ok(hyp2f1_beta_complement(m as u32, -b, zeta)?)
    } else {
        pfaff_series(a, b, c, z)
    }
}

pub fn gauss_2f1_negz_ext(a: f64, b: f64, c: f64, z: f64) -> Result<SpecFunResult, SpecFunError> {
    let value = gauss_2f1_negz(a, b, c, z)?;
    Ok(SpecFunResult {
        value,
        est_abs_error: 1e-12 * value.abs() + 1e-300,
    })
}

/// `(1-z)^{-a} Σ_n (a)_n (c-b)_n / ((c)_n n!) · w^n` with `w = z/(z-1)`.
fn pfaff_series(a: f64, b: f64, c: f64, z: f64) -> Result<f64, SpecFunError> {
    let w = z / (z - 1.0);
    let cb = c - b;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    const MAX_ITER: u32 = 2_000_000;
    for n in 0..MAX_ITER {
        let nf = n as f64;
        term *= (a + nf) * (cb + nf) / ((c + nf) * (nf + 1.0)) * w;
        sum += term;
        if term.abs() < EPS * sum.abs() {
            return Ok((1.0 - z).powf(-a) * sum);
        }
    }
    Err(SpecFunError::NonConvergence {
        func: "gauss_2f1_negz",
        iterations: MAX_ITER,
    })
}

/// `₂F₁(m, -p; 1-p; -ζ)` for integer `m ≥ 1`, `p ∈ (0,1)`, `ζ > 1`:
///
/// `(1+ζ)^{-m} + m ζ^p [B(1-p, m+p) - B_x(m+p, 1-p)]`, `x = 1/(1+ζ)`,
/// where `B_x` is the lower incomplete beta. The complement argument `x`
/// is below 1/2, so its series gains at least one bit per term.
fn hyp2f1_beta_complement(m: u32, p: f64, zeta: f64) -> Result<f64, SpecFunError> {
    let mf = m as f64;
    let x = 1.0 / (1.0 + zeta);
    let complete =
        (log_gamma(1.0 - p)? + log_gamma(mf + p)? - log_gamma(mf + 1.0)?).exp();

    // B_x(m+p, 1-p) = x^{m+p} Σ_n (p)_n / n! · x^n / (m+p+n)
    let aa = mf + p;
    let mut poch = 1.0f64; // (p)_n / n! · x^n
    let mut sum = 1.0 / aa;
    for n in 0..500u32 {
        let nf = n as f64;
        poch *= (p + nf) / (nf + 1.0) * x;
        let term = poch / (aa + nf + 1.0);
        sum += term;
        if term < EPS * sum {
            let lower = x.powf(aa) * sum;
            return Ok((1.0 + zeta).powi(-(m as i32)) + mf * zeta.powf(p) * (complete - lower));
        }
    }
    Err(SpecFunError::NonConvergence {
        func: "gauss_2f1_negz",
        iterations: 500,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::{integrate_finite, integrate_semi_infinite, QuadratureSpec};
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn tight() -> QuadratureSpec {
        QuadratureSpec::default().with_tols(1e-12, 1e-15)
    }

    /// Brute-force oracle: K0(x) = ∫_0^∞ e^{-x cosh t} dt.
    fn k0_oracle(x: f64) -> f64 {
        integrate_semi_infinite(|t| (-x * t.cosh()).exp(), 0.0, &tight())
            .unwrap()
            .value
    }

    #[test]
    fn k0_at_one_matches_quadrature_oracle() {
        let v = bessel_k0(1.0).unwrap();
        assert_relative_eq!(v, k0_oracle(1.0), max_relative = 1e-11);
        assert_relative_eq!(v, 0.421_024_438_240_708_3, max_relative = 1e-12);
    }

    #[test]
    fn k0_oracle_grid() {
        for &x in &[1e-6, 1e-3, 0.1, 0.5, 1.9, 2.0, 2.1, 5.0, 8.0, 20.0, 50.0] {
            let v = bessel_k0(x).unwrap();
            assert_relative_eq!(v, k0_oracle(x), max_relative = 1e-10, epsilon = 1e-300);
        }
    }

    #[test]
    fn k0_log_singularity_ratio() {
        // K0(x) → -ln(x/2) - γ as x → 0+: ratio must approach 1.
        for &x in &[1e-4f64, 1e-6] {
            let limit = -(0.5 * x).ln() - EULER_GAMMA;
            assert_relative_eq!(bessel_k0(x).unwrap() / limit, 1.0, max_relative = 1e-7);
        }
    }

    #[test]
    fn k0_underflow_clamps_to_zero() {
        // 4.7e-306 at x = 700 is still representable…
        assert!(bessel_k0(700.0).unwrap() < 1e-300);
        // …but x = 800 underflows e^{-x} and must return exactly 0.
        assert_eq!(bessel_k0(800.0).unwrap(), 0.0);
    }

    #[test]
    fn k0_domain_error() {
        assert!(bessel_k0(0.0).is_err());
        assert!(bessel_k0(-1.0).is_err());
    }

    #[test]
    fn k0_radial_mass_identity() {
        // ∫_0^∞ x K0(ax) dx = 1/a²
        for &a in &[0.5, 1.0, 3.0] {
            let spec = QuadratureSpec::default()
                .with_scale(1.0 / a)
                .with_tols(1e-10, 1e-14);
            let out =
                integrate_semi_infinite(|x| x * bessel_k0(a * x).unwrap(), 0.0, &spec).unwrap();
            assert_relative_eq!(out.value, 1.0 / (a * a), max_relative = 1e-8);
        }
    }

    /// Brute-force oracle: E1(z) = ∫_1^∞ e^{-z t}/t dt.
    fn e1_oracle(z: f64) -> f64 {
        let spec = QuadratureSpec::default()
            .with_tols(1e-13, 1e-20)
            .with_scale(1.0 / z.max(0.05));
        integrate_semi_infinite(|t| (-z * t).exp() / t, 1.0, &spec)
            .unwrap()
            .value
    }

    #[test]
    fn e1_at_one() {
        let v = exp_integral_e1(1.0).unwrap();
        assert_relative_eq!(v, 0.219_383_934_395_520_27, max_relative = 1e-12);
        assert_relative_eq!(v, e1_oracle(1.0), max_relative = 1e-11);
    }

    #[test]
    fn e1_oracle_grid() {
        for &z in &[0.01, 0.1, 0.5, 0.999, 1.001, 2.0, 5.0, 10.0, 50.0] {
            assert_relative_eq!(
                exp_integral_e1(z).unwrap(),
                e1_oracle(z),
                max_relative = 1e-11
            );
        }
    }

    #[test]
    fn e1_small_argument_singularity() {
        // E1(z) = -γ - ln z + z + O(z²): the ratio approaches 1 at rate
        // z/|ln z|, so the tolerance tracks that correction term.
        for &z in &[1e-5f64, 1e-8] {
            let limit = -EULER_GAMMA - z.ln();
            let slack = 2.0 * z / limit;
            assert_relative_eq!(exp_integral_e1(z).unwrap() / limit, 1.0, max_relative = slack);
        }
    }

    #[test]
    fn e1_asymptotic_series_agreement() {
        // E1(z) ~ e^{-z}/z (1 - 1/z + 2/z² - 6/z³ + 24/z⁴) for large z.
        let z = 50.0f64;
        let asym = (-z).exp() / z
            * (1.0 - 1.0 / z + 2.0 / z.powi(2) - 6.0 / z.powi(3) + 24.0 / z.powi(4));
        assert_relative_eq!(exp_integral_e1(z).unwrap(), asym, max_relative = 1e-6);
    }

    #[test]
    fn e1_domain_error() {
        assert!(exp_integral_e1(0.0).is_err());
        assert!(exp_integral_e1(-2.0).is_err());
    }

    /// Independent Whittaker oracle from the integral representation
    /// W_{-1/2,0}(z) = e^{-z/2} z^{-1/2} ∫_0^∞ e^{-t} / (1 + t/z) dt.
    fn whittaker_oracle(z: f64) -> f64 {
        let spec = QuadratureSpec::default().with_tols(1e-13, 1e-20);
        let integral = integrate_semi_infinite(|t| (-t).exp() / (1.0 + t / z), 0.0, &spec)
            .unwrap()
            .value;
        (-0.5 * z).exp() / z.sqrt() * integral
    }

    #[test]
    fn whittaker_at_one() {
        let v = whittaker_w_mhalf_zero(1.0).unwrap();
        // e^{1/2} E1(1) ≈ 1.64872·0.219384
        assert_relative_eq!(v, 0.361_702_959_087_775_7, max_relative = 1e-11);
        assert_relative_eq!(v, whittaker_oracle(1.0), max_relative = 1e-10);
    }

    #[test]
    fn whittaker_identity_cross_check() {
        // Both sides of W = e^{z/2} √z E1(z), computed independently.
        for &z in &[0.1, 1.0, 10.0] {
            let lhs = whittaker_oracle(z);
            let rhs = (0.5 * z).exp() * z.sqrt() * e1_oracle(z);
            assert_relative_eq!(lhs, rhs, max_relative = 1e-9);
            assert_relative_eq!(whittaker_w_mhalf_zero(z).unwrap(), lhs, max_relative = 1e-9);
        }
    }

    #[test]
    fn whittaker_small_argument() {
        assert_relative_eq!(
            whittaker_w_mhalf_zero(0.01).unwrap(),
            whittaker_oracle(0.01),
            max_relative = 1e-9
        );
    }

    #[test]
    fn whittaker_decays_at_large_argument() {
        assert!(whittaker_w_mhalf_zero(100.0).unwrap() < 1e-12);
        assert!(whittaker_w_mhalf_zero(0.0).is_err());
    }

    #[test]
    fn log_gamma_exact_points() {
        assert_abs_diff_eq!(log_gamma(1.0).unwrap(), 0.0, epsilon = 1e-13);
        assert_abs_diff_eq!(log_gamma(2.0).unwrap(), 0.0, epsilon = 1e-13);
        // Γ(3.5) = (5/2)(3/2)(1/2)√π
        let gamma_35 = 2.5 * 1.5 * 0.5 * PI.sqrt();
        assert_relative_eq!(log_gamma(3.5).unwrap(), gamma_35.ln(), max_relative = 1e-13);
    }

    #[test]
    fn log_gamma_factorials() {
        let mut lnfact = 0.0f64;
        for n in 1..=20u32 {
            lnfact += (n as f64).ln();
            assert_relative_eq!(
                log_gamma(n as f64 + 1.0).unwrap(),
                lnfact,
                max_relative = 1e-12
            );
        }
    }

    #[test]
    fn log_gamma_recurrence_property() {
        // ln Γ(x+1) = ln Γ(x) + ln x over a deterministic pseudo-random sweep.
        let mut x = 0.137f64;
        for _ in 0..200 {
            let lhs = log_gamma(x + 1.0).unwrap();
            let rhs = log_gamma(x).unwrap() + x.ln();
            assert_abs_diff_eq!(lhs, rhs, epsilon = 1e-12 * lhs.abs().max(1.0));
            x = (x * 1.37 + 0.11) % 50.0 + 0.01;
        }
        assert!(log_gamma(0.0).is_err());
    }

    /// Direct-series oracle, valid for |z| < 1.
    fn hyp2f1_direct_series(a: f64, b: f64, c: f64, z: f64) -> f64 {
        let mut term = 1.0;
        let mut sum = 1.0;
        for n in 0..400u32 {
            let nf = n as f64;
            term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
            sum += term;
            if term.abs() < 1e-18 * sum.abs() {
                break;
            }
        }
        sum
    }

    #[test]
    fn hyp2f1_at_zero_is_one() {
        assert_eq!(gauss_2f1_negz(3.7, -0.2, 0.8, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn hyp2f1_classic_value() {
        // ₂F₁(1, -1/2; 1/2; -1): the direct series reduces term by term
        // to 1 + Σ_{n≥1} (-1)^{n+1}/(2n-1). The alternating tail is summed
        // with partial-sum averaging (error ~ 1/(4N²)), giving the oracle
        // independently of any closed form; 1 + π/4 is then asserted too.
        let v = gauss_2f1_negz(1.0, -0.5, 0.5, -1.0).unwrap();
        let mut partial = 1.0f64;
        let mut prev = 1.0f64;
        const N: u64 = 400_000;
        for n in 1..=N {
            prev = partial;
            partial += if n % 2 == 1 { 1.0 } else { -1.0 } / (2.0 * n as f64 - 1.0);
        }
        let oracle = 0.5 * (partial + prev);
        assert_relative_eq!(v, oracle, max_relative = 1e-9);
        assert_relative_eq!(v, 1.0 + PI / 4.0, max_relative = 1e-12);
    }

    /// Quadrature oracle built from the interference integral that the
    /// closed form replaces: ₂F₁(m,-2/α;1-2/α;-ζ) = 1 + 2∫_1^∞ (1-(1+ζu^{-α})^{-m}) u du.
    ///
    /// The integrand tail decays like u^{1-α}, too slowly for the
    /// rational map at tight tolerances, so the range is split at a point
    /// U where ζU^{-α} ≤ 1e-4: finite quadrature below, binomial tail
    /// series Σ_j (-1)^{j+1} C(m+j-1,j) ζ^j U^{2-jα}/(jα-2) above.
    fn hyp2f1_integral_oracle(m: u32, alpha: f64, zeta: f64) -> f64 {
        let u_split = (1e4 * zeta).powf(1.0 / alpha).max(2.0);
        let head = integrate_finite(
            |u| {
                let w = 1.0 + zeta * u.powf(-alpha);
                (1.0 - w.powi(-(m as i32))) * u
            },
            1.0,
            u_split,
            &QuadratureSpec::default().with_tols(1e-13, 1e-18),
        )
        .unwrap()
        .value;
        let mut tail = 0.0;
        let mut binom = 1.0f64; // C(m+j-1, j)
        let mut zpow = 1.0f64;
        for j in 1..=40u32 {
            let jf = j as f64;
            binom *= (m as f64 + jf - 1.0) / jf;
            zpow *= zeta;
            let sign = if j % 2 == 1 { 1.0 } else { -1.0 };
            let term = sign * binom * zpow * u_split.powf(2.0 - jf * alpha) / (jf * alpha - 2.0);
            tail += term;
            if term.abs() < 1e-18 * (head + tail).abs() {
                break;
            }
        }
        1.0 + 2.0 * (head + tail)
    }

    #[test]
    fn hyp2f1_lemma_pattern_regression() {
        // m = 4, α = 2.8, ζ = 100 — frozen from the integral oracle.
        let b = -2.0 / 2.8;
        let c = 1.0 + b;
        let v = gauss_2f1_negz(4.0, b, c, -100.0).unwrap();
        let oracle = hyp2f1_integral_oracle(4, 2.8, 100.0);
        assert_relative_eq!(v, oracle, max_relative = 1e-8);
        assert_relative_eq!(v, 221.790_497_810_408_96, max_relative = 1e-9);
    }

    #[test]
    fn hyp2f1_oracle_grid_small_and_large() {
        for &(m, alpha) in &[(1u32, 4.0f64), (2, 3.0), (4, 2.8), (6, 2.2)] {
            let b = -2.0 / alpha;
            let c = 1.0 + b;
            for &zeta in &[1e-3, 0.5, 0.999, 1.001, 2.0, 7.3, 42.0, 1e4] {
                let v = gauss_2f1_negz(m as f64, b, c, -zeta).unwrap();
                let oracle = hyp2f1_integral_oracle(m, alpha, zeta);
                assert_relative_eq!(v, oracle, max_relative = 3e-8);
            }
        }
    }

    #[test]
    fn hyp2f1_huge_argument_stays_accurate() {
        // asymptotically ₂F₁ ~ m B(1-p, m+p) ζ^p; the beta-complement
        // route must stay finite and positive out to ζ = 1e12.
        let b = -2.0 / 2.8;
        let v6 = gauss_2f1_negz(4.0, b, 1.0 + b, -1e6).unwrap();
        let v12 = gauss_2f1_negz(4.0, b, 1.0 + b, -1e12).unwrap();
        assert_relative_eq!(v6, 159_619.443_680_889_53, max_relative = 1e-9);
        assert_relative_eq!(v12, 3_081_768_974.003_013, max_relative = 1e-9);
    }

    #[test]
    fn hyp2f1_pfaff_matches_direct_series_near_zero() {
        for i in 0..=10 {
            let z = -0.05 * i as f64;
            let (a, b, c) = (4.0, -2.0 / 2.8, 1.0 - 2.0 / 2.8);
            let direct = hyp2f1_direct_series(a, b, c, z);
            assert_relative_eq!(
                gauss_2f1_negz(a, b, c, z).unwrap(),
                direct,
                max_relative = 1e-9
            );
        }
    }

    #[test]
    fn hyp2f1_domain_errors() {
        assert!(gauss_2f1_negz(1.0, -0.5, 0.5, 0.5).is_err());
        // α_R = 2 would give c = 0: rejected.
        assert!(gauss_2f1_negz(4.0, -1.0, 0.0, -1.0).is_err());
        assert!(gauss_2f1_negz(4.0, -1.0, -2.0, -1.0).is_err());
    }

    #[test]
    fn ext_variants_attach_error_bounds() {
        let r = bessel_k0_ext(1.0).unwrap();
        assert!(r.est_abs_error.is_finite() && r.est_abs_error > 0.0);
        assert!((r.value - bessel_k0(1.0).unwrap()).abs() <= r.est_abs_error);
        let g = gauss_2f1_negz_ext(4.0, -2.0 / 2.8, 1.0 - 2.0 / 2.8, -2.0).unwrap();
        assert!(g.est_abs_error < 1e-9 * g.value);
        assert!(log_gamma_ext(3.5).unwrap().est_abs_error > 0.0);
        assert!(exp_integral_e1_ext(2.0).unwrap().est_abs_error > 0.0);
        assert!(whittaker_w_mhalf_zero_ext(2.0).unwrap().est_abs_error > 0.0);
    }

    /// Finite-interval quadrature check that uses integrate_finite so the
    /// oracle path differs from the semi-infinite map used elsewhere:
    /// K0(x) = ∫_0^1 exp(-x/t)·exp(... ) is awkward; instead verify the
    /// cosh representation truncated at t = 40 (e^{-x cosh 40} ≪ 1e-300).
    #[test]
    fn k0_finite_truncation_oracle() {
        let x = 2.5f64;
        let out = integrate_finite(|t| (-x * t.cosh()).exp(), 0.0, 40.0, &tight()).unwrap();
        assert_relative_eq!(bessel_k0(x).unwrap(), out.value, max_relative = 1e-11);
    }
}
