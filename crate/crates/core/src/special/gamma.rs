//! Gamma function, log-gamma and a few closed-form constants built on them.

use crate::error::{Error, Result};
use std::f64::consts::PI;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn lanczos_sum(xm1: f64) -> f64 {
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (xm1 + i as f64);
    }
    a
}

fn factorial_exact(n: u32) -> Option<f64> {
    if n > 22 {
        return None;
    }
    Some((1..=n).fold(1.0, |acc, k| acc * k as f64))
}

/// Gamma function for positive arguments.
pub fn gamma_fn(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("gamma requires x > 0, got {x}")));
    }
    Ok(gamma_pos(x))
}

pub(crate) fn gamma_pos(x: f64) -> f64 {
    if x.fract() == 0.0 && x <= 23.0 {
        return factorial_exact(x as u32 - 1).unwrap();
    }
    if x < 0.5 {
        return gamma_pos(x + 1.0) / x;
    }
    if x > 171.7 {
        return f64::INFINITY;
    }
    let xm1 = x - 1.0;
    let t = xm1 + LANCZOS_G + 0.5;
    // split the power to avoid overflow before the exponential damps it
    let half = t.powf(0.5 * (xm1 + 0.5));
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * lanczos_sum(xm1)
}

/// Natural log of Gamma for positive arguments.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma requires x > 0");
    if x < 0.5 {
        return ln_gamma(x + 1.0) - x.ln();
    }
    if x < 20.0 {
        return gamma_pos(x).ln();
    }
    let xm1 = x - 1.0;
    let t = xm1 + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (xm1 + 0.5) * t.ln() - t + lanczos_sum(xm1).ln()
}

/// `λ_d = ∫_{-1}^{1} (1-t²)^{(d-2)/2} dt = √π Γ(d/2) / Γ((d+1)/2)`.
pub fn lambda_d(d: u32) -> Result<f64> {
    if d < 1 {
        return Err(Error::domain("lambda_d requires d >= 1"));
    }
    let d = d as f64;
    Ok(PI.sqrt() * gamma_pos(d / 2.0) / gamma_pos((d + 1.0) / 2.0))
}

/// Surface measure of the unit sphere `S^d ⊂ R^{d+1}`; `S^0` has measure 2.
pub fn sphere_area(d: u32) -> f64 {
    let d = d as f64;
    2.0 * PI.powf((d + 1.0) / 2.0) / gamma_pos((d + 1.0) / 2.0)
}

/// Volume of the unit ball in `R^d`.
pub fn ball_volume(d: u32) -> f64 {
    let d = d as f64;
    PI.powf(d / 2.0) / gamma_pos(d / 2.0 + 1.0)
}

/// `ln B(a, b)`.
pub(crate) fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_fn(1.0).unwrap(), 1.0);
        assert_eq!(gamma_fn(6.0).unwrap(), 120.0);
        assert!(rel(gamma_fn(0.5).unwrap(), 1.772_453_850_905_516) < 1e-15);
    }

    #[test]
    fn gamma_rejects_non_positive() {
        assert!(matches!(gamma_fn(0.0), Err(Error::Domain(_))));
        assert!(matches!(gamma_fn(-1.5), Err(Error::Domain(_))));
    }

    #[test]
    fn gamma_half_integers_and_recurrence() {
        // Γ(n + 1/2) = (2n)! √π / (4^n n!)
        let mut expect = PI.sqrt();
        for n in 0..40 {
            let x = n as f64 + 0.5;
            assert!(rel(gamma_pos(x), expect) < 1e-13, "x = {x}");
            expect *= x;
        }
        for i in 1..500 {
            let x = 0.1 * i as f64;
            assert!(rel(gamma_pos(x + 1.0), x * gamma_pos(x)) < 1e-13, "x = {x}");
        }
    }

    #[test]
    fn ln_gamma_matches_factorials() {
        let mut lf = 0.0f64;
        for n in 1..150u32 {
            lf += (n as f64).ln();
            assert!((ln_gamma(n as f64 + 1.0) - lf).abs() < 1e-12 * lf.max(1.0));
        }
    }

    #[test]
    fn lambda_small_dimensions() {
        assert!((lambda_d(1).unwrap() - PI).abs() < 1e-14);
        assert!((lambda_d(2).unwrap() - 2.0).abs() < 1e-15);
        assert!((lambda_d(3).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!(lambda_d(0).is_err());
    }

    #[test]
    fn sphere_and_ball() {
        assert!((sphere_area(0) - 2.0).abs() < 1e-15);
        assert!((sphere_area(1) - 2.0 * PI).abs() < 1e-14);
        assert!((sphere_area(2) - 4.0 * PI).abs() < 1e-14);
        assert!((ball_volume(2) - PI).abs() < 1e-15);
        assert!((ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
    }
}
