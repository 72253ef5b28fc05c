//! Hurwitz and Riemann zeta functions for real `σ > 1` by Euler–Maclaurin.

use crate::error::{Error, Result};

// B_{2j} / (2j)!
const BERNOULLI_OVER_FACT: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
    43867.0 / 5_109_094_217_170_944_000.0,
    -174_611.0 / 802_857_662_698_291_200_000.0,
];

/// `ζ(σ, q) = Σ_{n≥0} (n+q)^{-σ}`.
pub fn hurwitz_zeta(sigma: f64, q: f64) -> Result<f64> {
    if !(sigma > 1.0) {
        return Err(Error::domain(format!("hurwitz_zeta requires sigma > 1, got {sigma}")));
    }
    if !(q > 0.0) {
        return Err(Error::domain(format!("hurwitz_zeta requires q > 0, got {q}")));
    }
    Ok(hurwitz_unchecked(sigma, q))
}

pub(crate) fn hurwitz_unchecked(sigma: f64, q: f64) -> f64 {
    let shift = (20.0f64.max(sigma) - q).ceil().max(0.0) as usize;
    let mut head = 0.0;
    // smallest terms first
    for n in (0..shift).rev() {
        head += (n as f64 + q).powf(-sigma);
    }
    let a = shift as f64 + q;
    let mut tail = a.powf(1.0 - sigma) / (sigma - 1.0) + 0.5 * a.powf(-sigma);
    let mut rising = sigma;
    let mut pow = a.powf(-sigma - 1.0);
    let inv_a2 = 1.0 / (a * a);
    for (j, c) in BERNOULLI_OVER_FACT.iter().enumerate() {
        let t = c * rising * pow;
        tail += t;
        if t.abs() < 1e-18 * tail.abs() {
            break;
        }
        let m = 2.0 * j as f64 + 1.0;
        rising *= (sigma + m) * (sigma + m + 1.0);
        pow *= inv_a2;
    }
    head + tail
}

pub fn riemann_zeta(sigma: f64) -> Result<f64> {
    hurwitz_zeta(sigma, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn known_values() {
        assert!((riemann_zeta(2.0).unwrap() - PI * PI / 6.0).abs() < 1e-15);
        assert!((riemann_zeta(4.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-15);
        assert!((riemann_zeta(3.0).unwrap() - 1.202_056_903_159_594_3).abs() < 1e-15);
        // ζ(2, 1/2) = (2^2 - 1) ζ(2)
        assert!((hurwitz_zeta(2.0, 0.5).unwrap() - 3.0 * PI * PI / 6.0).abs() < 1e-14);
        assert!(riemann_zeta(1.0).is_err());
    }

    #[test]
    fn near_pole_laurent() {
        // ζ(1+ε) = 1/ε + γ + O(ε)
        let eps = 1e-4;
        let gamma = 0.577_215_664_901_532_9;
        assert!((riemann_zeta(1.0 + eps).unwrap() - (1.0 / eps + gamma)).abs() < 1e-4);
    }

    #[test]
    fn shift_identity() {
        for &s in &[1.3, 2.5, 7.0, 40.0] {
            for &q in &[0.25, 1.0, 3.75] {
                let lhs = hurwitz_zeta(s, q).unwrap();
                let rhs = q.powf(-s) + hurwitz_zeta(s, q + 1.0).unwrap();
                assert!((lhs - rhs).abs() < 1e-14 * lhs);
            }
        }
    }
}
