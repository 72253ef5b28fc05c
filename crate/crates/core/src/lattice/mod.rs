//! Lattices behind the conjectured energy constants: their theta series,
//! Epstein zeta functions, and packing densities.

pub mod arith;
pub mod theta;

use serde::Serialize;

pub use arith::{ramanujan_tau, sigma_k, TauTable, TAU_DEFAULT_MAX};
pub use theta::{leech_coefficients, theta_coefficients, ThetaMode, ThetaSeries};

use crate::error::{Error, Result};
use crate::special::ball_volume;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Lattice {
    A1,
    A2,
    Fcc,
    D4,
    D5,
    E6,
    E7,
    E8,
    Leech,
}

/// Geometric data for a lattice in a fixed coordinate model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LatticeSpec {
    pub lattice: Lattice,
    pub name: &'static str,
    pub d: u32,
    pub covolume: f64,
    pub min_sq_norm: f64,
    /// Theta index `m` counts vectors of squared norm `m · norm_step`.
    pub norm_step: f64,
    /// Whether the lattice packing is only conjectured to be densest.
    pub conjectured: bool,
    pub model: &'static str,
}

impl Lattice {
    pub const ALL: [Lattice; 9] = [
        Lattice::A1,
        Lattice::A2,
        Lattice::Fcc,
        Lattice::D4,
        Lattice::D5,
        Lattice::E6,
        Lattice::E7,
        Lattice::E8,
        Lattice::Leech,
    ];

    pub fn spec(self) -> LatticeSpec {
        let s3 = 3f64.sqrt();
        let (name, d, covolume, min_sq_norm, norm_step, model) = match self {
            Lattice::A1 => ("A1", 1, 1.0, 1.0, 1.0, "Z"),
            Lattice::A2 => ("A2", 2, s3 / 2.0, 1.0, 1.0, "Gram form a^2+ab+b^2, unit minimal distance"),
            Lattice::Fcc => ("fcc", 3, 2.0, 2.0, 2.0, "D3: integer vectors with even coordinate sum"),
            Lattice::D4 => ("D4", 4, 2.0, 2.0, 2.0, "integer vectors with even coordinate sum"),
            Lattice::D5 => ("D5", 5, 2.0, 2.0, 2.0, "integer vectors with even coordinate sum"),
            Lattice::E6 => ("E6", 6, s3, 2.0, 2.0, "E8 vectors with x1 = x2 = x3 (orthogonal to an A2)"),
            Lattice::E7 => ("E7", 7, 2f64.sqrt(), 2.0, 2.0, "E8 vectors with x1 = x2 (orthogonal to a root)"),
            Lattice::E8 => ("E8", 8, 1.0, 2.0, 2.0, "D8 together with D8 + (1/2, ..., 1/2)"),
            Lattice::Leech => ("Leech", 24, 1.0, 4.0, 2.0, "even unimodular, no roots"),
        };
        LatticeSpec {
            lattice: self,
            name,
            d,
            covolume,
            min_sq_norm,
            norm_step,
            conjectured: (4..=7).contains(&d),
            model,
        }
    }

    /// The lattice giving the best known packing for the dimensions in the
    /// `B_d` table (`d ∈ 1..=8` and `24`).
    pub fn best_packing(d: u32) -> Result<Lattice> {
        Lattice::ALL
            .into_iter()
            .find(|l| l.spec().d == d)
            .ok_or_else(|| Error::domain(format!("no tabulated lattice in dimension {d}")))
    }

    /// Lattice used for the conjectured constant in dimensions 1, 2, 4, 8, 24.
    pub fn universal(d: u32) -> Result<Lattice> {
        match d {
            1 => Ok(Lattice::A1),
            2 => Ok(Lattice::A2),
            4 => Ok(Lattice::D4),
            8 => Ok(Lattice::E8),
            24 => Ok(Lattice::Leech),
            _ => Err(Error::domain(format!(
                "conjectured constant is only defined for d in {{1, 2, 4, 8, 24}}, got {d}"
            ))),
        }
    }

    pub fn from_name(name: &str) -> Result<Lattice> {
        Lattice::ALL
            .into_iter()
            .find(|l| l.spec().name.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::domain(format!("unknown lattice {name:?}")))
    }

    fn preferred_mode(self) -> ThetaMode {
        match self {
            Lattice::D4 | Lattice::E8 | Lattice::Leech => ThetaMode::Formula,
            _ => ThetaMode::Enumeration,
        }
    }

    fn max_shells(self) -> usize {
        match self {
            Lattice::Leech => TAU_DEFAULT_MAX,
            Lattice::A1 | Lattice::A2 | Lattice::D4 | Lattice::E8 => 1 << 20,
            _ => 1 << 12,
        }
    }
}

impl LatticeSpec {
    /// Packing density `vol(B^d(r/2)) / covolume` with `r` the minimal distance.
    pub fn density(&self) -> f64 {
        ball_volume(self.d) * (0.5 * self.min_sq_norm.sqrt()).powi(self.d as i32) / self.covolume
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpsteinValue {
    pub value: f64,
    pub tail_bound: f64,
    /// Number of theta coefficients summed.
    pub m_max: usize,
}

/// Growth exponent `θ` of the lattice-point count error
/// `|#{0 < |x| ≤ r} - (V_d r^d / covolume - 1)| ≤ C r^θ`.
fn count_error_exponent(d: u32) -> f64 {
    match d {
        1 => 0.0,
        2 => 2.0 / 3.0,
        3 => 1.5,
        // r² log r, padded
        4 => 2.25,
        _ => d as f64 - 2.0,
    }
}

/// `Σ_{x ≠ 0} |x|^{-s}` from the first `m_max` theta coefficients, plus a
/// tail from the smoothed lattice-point count `V_d r^d / covolume - 1`.
///
/// With `R` the cutoff radius the tail is
/// `-N(R) R^{-s} + s V_d R^{d-s} / (covolume (s - d)) - R^{-s} + err`, and
/// `|err| ≤ s C R^{θ-s} / (s - θ)` when the count error stays below `C r^θ`.
/// `C` is twice the largest observed ratio over `[R/2, R]`.
pub fn epstein_from_theta(theta: &ThetaSeries, s: f64) -> Result<EpsteinValue> {
    let spec = theta.lattice.spec();
    let d = spec.d as f64;
    if !(s > d) {
        return Err(Error::domain(format!("Epstein zeta requires s > d (got d={d}, s={s})")));
    }
    let counts = theta.counts_f64();
    let m_max = counts.len();
    let step = spec.norm_step;
    let mut head = 0.0;
    for m in (1..=m_max).rev() {
        let c = counts[m - 1];
        if c != 0.0 {
            head += c * (m as f64 * step).powf(-0.5 * s);
        }
    }
    let density = ball_volume(spec.d) / spec.covolume;
    let theta_exp = count_error_exponent(spec.d);
    let mut cum = 0.0;
    let mut c_err: f64 = 0.0;
    for m in 1..=m_max {
        let before = cum;
        cum += counts[m - 1];
        if 2 * m >= m_max {
            let r = (m as f64 * step).sqrt();
            let r_prev = ((m - 1).max(1) as f64 * step).sqrt();
            let smooth = density * r.powf(d) - 1.0;
            let e = (cum - smooth).abs().max((before - smooth).abs());
            c_err = c_err.max(e / r_prev.powf(theta_exp));
        }
    }
    let c_err = 2.0 * c_err;
    let big_r = (m_max as f64 * step).sqrt();
    let tail = -(cum + 1.0) * big_r.powf(-s) + s * density * big_r.powf(d - s) / (s - d);
    let tail_bound = s * c_err * big_r.powf(theta_exp - s) / (s - theta_exp);
    let value = head + tail;
    Ok(EpsteinValue {
        value,
        tail_bound: tail_bound + 1e-15 * value.abs(),
        m_max,
    })
}

/// Epstein zeta with relative accuracy `tol`, doubling the number of shells
/// from 64 until the tail bound is small enough or the shell cap for the
/// lattice is reached; the returned `tail_bound` says which.
pub fn epstein_zeta(lattice: Lattice, s: f64, tol: f64) -> Result<EpsteinValue> {
    let d = lattice.spec().d as f64;
    if !(s > d) {
        return Err(Error::domain(format!("Epstein zeta requires s > d (got d={d}, s={s})")));
    }
    if !(tol > 0.0) {
        return Err(Error::domain("tolerance must be positive"));
    }
    let cap = lattice.max_shells();
    let mut m = 64.min(cap);
    loop {
        let theta = theta_coefficients(lattice, m, lattice.preferred_mode())?;
        let v = epstein_from_theta(&theta, s)?;
        if v.tail_bound <= tol * v.value.abs() {
            return Ok(v);
        }
        if m >= cap {
            return Ok(v);
        }
        m = (2 * m).min(cap);
    }
}

/// `|Λ|^{s/d} ζ_Λ(s)` for the lattice attached to `d ∈ {1, 2, 4, 8, 24}`,
/// with the tail bound scaled the same way.
pub fn c_tilde_with_tol(d: u32, s: f64, tol: f64) -> Result<EpsteinValue> {
    let lattice = Lattice::universal(d)?;
    let spec = lattice.spec();
    let v = epstein_zeta(lattice, s, tol)?;
    let scale = spec.covolume.powf(s / d as f64);
    Ok(EpsteinValue {
        value: scale * v.value,
        tail_bound: scale * v.tail_bound,
        m_max: v.m_max,
    })
}

pub fn c_tilde(d: u32, s: f64) -> Result<f64> {
    Ok(c_tilde_with_tol(d, s, 1e-10)?.value)
}

/// Density of the lattice packing listed for dimension `d`, and whether
/// its optimality is only conjectured.
pub fn packing_density(d: u32) -> Result<(f64, bool)> {
    let spec = Lattice::best_packing(d)?.spec();
    Ok((spec.density(), spec.conjectured))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use crate::special::{gamma_fn, hurwitz_zeta, riemann_zeta};

    fn l_minus3(s: f64) -> f64 {
        // Σ χ_{-3}(n) n^{-s} = 3^{-s} (ζ(s, 1/3) - ζ(s, 2/3))
        3f64.powf(-s) * (hurwitz_zeta(s, 1.0 / 3.0).unwrap() - hurwitz_zeta(s, 2.0 / 3.0).unwrap())
    }

    #[test]
    fn densities() {
        let expect = [
            (1, 1.0),
            (2, PI / 12f64.sqrt()),
            (3, PI / (3.0 * 2f64.sqrt())),
            (4, PI * PI / 16.0),
            (5, PI * PI / (15.0 * 2f64.sqrt())),
            (6, PI.powi(3) / (48.0 * 3f64.sqrt())),
            (7, PI.powi(3) / 105.0),
            (8, PI.powi(4) / 384.0),
        ];
        for (d, v) in expect {
            let (got, conj) = packing_density(d).unwrap();
            assert!((got - v).abs() < 1e-14, "d={d}: {got} vs {v}");
            assert_eq!(conj, (4..=7).contains(&d));
        }
        let fact12: f64 = (1..=12).map(|i| i as f64).product();
        assert!((packing_density(24).unwrap().0 - PI.powi(12) / fact12).abs() < 1e-16);
        assert!(packing_density(9).is_err());
    }

    #[test]
    fn a2_zeta_matches_dirichlet_factorization() {
        for s in [2.5, 3.0, 4.0, 7.0] {
            let v = epstein_zeta(Lattice::A2, s, 1e-9).unwrap();
            let exact = 6.0 * riemann_zeta(0.5 * s).unwrap() * l_minus3(0.5 * s);
            assert!((v.value - exact).abs() < 1e-9 * exact, "s={s}: {} vs {exact}", v.value);
            assert!((v.value - exact).abs() <= v.tail_bound.max(1e-13 * exact));
        }
        let v4 = epstein_zeta(Lattice::A2, 4.0, 1e-10).unwrap().value;
        assert!((v4 - 7.7110).abs() < 1e-3);
        let c = c_tilde(2, 4.0).unwrap();
        assert!((c - 0.75 * v4).abs() < 1e-12);
    }

    #[test]
    fn a1_is_twice_zeta() {
        for s in [1.1, 1.5, 2.0, 6.0] {
            let c = c_tilde_with_tol(1, s, 1e-12).unwrap();
            let z = 2.0 * riemann_zeta(s).unwrap();
            assert!((c.value - z).abs() < 1e-8 * z);
            assert!((c.value - z).abs() <= c.tail_bound);
        }
    }

    #[test]
    fn d4_and_e8_match_factorizations() {
        for s in [5.0, 6.0, 9.0] {
            let w = 0.5 * s;
            let d4 = epstein_zeta(Lattice::D4, s, 1e-10).unwrap().value;
            // Σ 24 σ_odd(m) (2m)^{-w} = 24 · 2^{-w} (1 - 2^{1-w}) ζ(w) ζ(w-1)
            let d4_exact = 24.0 * 2f64.powf(-w) * (1.0 - 2f64.powf(1.0 - w)) * riemann_zeta(w).unwrap()
                * riemann_zeta(w - 1.0).unwrap();
            assert!((d4 - d4_exact).abs() < 1e-9 * d4_exact, "s={s}: {d4} vs {d4_exact}");
        }
        for s in [9.0, 10.0, 16.0] {
            let w = 0.5 * s;
            let e8 = epstein_zeta(Lattice::E8, s, 1e-10).unwrap().value;
            let e8_exact = 240.0 * 2f64.powf(-w) * riemann_zeta(w).unwrap() * riemann_zeta(w - 3.0).unwrap();
            assert!((e8 - e8_exact).abs() < 1e-9 * e8_exact, "s={s}: {e8} vs {e8_exact}");
        }
    }

    #[test]
    fn e8_first_shell_dominates() {
        let s = 120.0;
        let v = epstein_zeta(Lattice::E8, s, 1e-12).unwrap().value;
        assert!((v / (240.0 * 2f64.powf(-0.5 * s)) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn d4_enumeration_mode_agrees() {
        let f = theta_coefficients(Lattice::D4, 20, ThetaMode::Formula).unwrap();
        let e = theta_coefficients(Lattice::D4, 20, ThetaMode::Enumeration).unwrap();
        let a = epstein_from_theta(&f, 6.0).unwrap().value;
        let b = epstein_from_theta(&e, 6.0).unwrap().value;
        assert!((a - b).abs() < 1e-9 * a);
    }

    #[test]
    fn tail_bound_survives_doubling() {
        for (l, s) in [(Lattice::A2, 2.4), (Lattice::D4, 4.6), (Lattice::E8, 8.8), (Lattice::Leech, 26.0)] {
            for m in [100usize, 250] {
                let a = epstein_from_theta(&theta_coefficients(l, m, l.preferred_mode()).unwrap(), s).unwrap();
                let b = epstein_from_theta(&theta_coefficients(l, 2 * m, l.preferred_mode()).unwrap(), s).unwrap();
                assert!((a.value - b.value).abs() <= a.tail_bound, "{l:?} s={s} m={m}");
            }
        }
    }

    #[test]
    fn residue_of_lattice_zeta() {
        // (s - d) ζ_Λ(s) → d V_d / covolume, so (s - d) C̃ → 2 π^{d/2} / Γ(d/2)
        let d = 4u32;
        let s = 4.02;
        let v = c_tilde_with_tol(d, s, 1e-8).unwrap().value * (s - d as f64);
        let target = 2.0 * PI.powi(2) / gamma_fn(2.0).unwrap();
        assert!((v / target - 1.0).abs() < 0.05);
    }

    #[test]
    fn lookup() {
        assert_eq!(Lattice::from_name("e8").unwrap(), Lattice::E8);
        assert!(Lattice::from_name("E9").is_err());
        assert!(Lattice::universal(3).is_err());
        assert!(c_tilde(2, 2.0).is_err());
    }
}
