//! Lower bounds for discrete energies on `S^d` and for asymptotic energy
//! constants, built from Levenshtein rules and Bessel-zero series.
//!
//! Riesz potentials use the convention `h(t) = (2 - 2t)^{-s/2}`, which is
//! `|x - y|^{-s}` for unit vectors with inner product `t`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quadrature::{build_rule, QuadratureRule};
use crate::special::bessel::bessel_j_unchecked;
use crate::special::gamma::gamma_pos;
use crate::special::zeta::hurwitz_unchecked;
use crate::special::{bessel_zeros, lambda_d, ln_gamma, sphere_area, BesselZeroTable};

/// Largest number of Bessel zeros any single series evaluation may use.
pub const ZERO_BUDGET: usize = 200_000;

const ASD_START_TERMS: usize = 64;
const ASD_MAX_TERMS: usize = 16_384;

/// A potential `h(t)` of the inner product `t ∈ [-1, 1)`.
#[derive(Clone)]
pub enum Potential {
    /// `(2 - 2t)^{-s/2}`.
    Riesz { s: f64 },
    /// `exp(-alpha (2 - 2t))`.
    Gaussian { alpha_scaled: f64 },
    Custom {
        name: String,
        evaluator: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    },
}

impl Potential {
    pub fn custom(name: impl Into<String>, f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Potential::Custom {
            name: name.into(),
            evaluator: Arc::new(f),
        }
    }

    pub fn evaluate(&self, t: f64) -> f64 {
        match self {
            Potential::Riesz { s } => (2.0 - 2.0 * t).powf(-0.5 * s),
            Potential::Gaussian { alpha_scaled } => (-alpha_scaled * (2.0 - 2.0 * t)).exp(),
            Potential::Custom { evaluator, .. } => evaluator(t),
        }
    }
}

impl fmt::Debug for Potential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Potential::Riesz { s } => write!(f, "riesz:{s}"),
            Potential::Gaussian { alpha_scaled } => write!(f, "gauss:{alpha_scaled}"),
            Potential::Custom { name, .. } => write!(f, "custom:{name}"),
        }
    }
}

impl FromStr for Potential {
    type Err = Error;

    /// Parses `riesz:<s>` or `gauss:<alpha>`.
    fn from_str(text: &str) -> Result<Self> {
        let (family, value) = text
            .split_once(':')
            .ok_or_else(|| Error::domain(format!("potential must look like riesz:<s> or gauss:<a>, got {text:?}")))?;
        let v: f64 = value
            .trim()
            .parse()
            .map_err(|_| Error::domain(format!("bad potential parameter {value:?}")))?;
        if !v.is_finite() {
            return Err(Error::domain("potential parameter must be finite"));
        }
        match family.trim() {
            "riesz" => Ok(Potential::Riesz { s: v }),
            "gauss" | "gaussian" => Ok(Potential::Gaussian { alpha_scaled: v }),
            other => Err(Error::domain(format!("unknown potential family {other:?}"))),
        }
    }
}

/// `N² Σ ρ_i h(α_i)` over the Levenshtein rule for `N` points on `S^d`.
pub fn ulb_energy(d: u32, n: u64, h: &Potential) -> Result<f64> {
    let rule = build_rule(d, n)?;
    ulb_from_rule(&rule, h)
}

pub fn ulb_from_rule(rule: &QuadratureRule, h: &Potential) -> Result<f64> {
    let mut sum = 0.0;
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        let v = h.evaluate(x);
        if !v.is_finite() {
            return Err(Error::domain(format!("potential is not finite at node {x}")));
        }
        sum += w * v;
    }
    let n = rule.n as f64;
    Ok(n * n * sum)
}

fn check_s_above_d(d: u32, s: f64) -> Result<()> {
    if d < 1 {
        return Err(Error::domain("dimension must be at least 1"));
    }
    if !(s > d as f64) || !s.is_finite() {
        return Err(Error::domain(format!("requires s > d (got d={d}, s={s})")));
    }
    Ok(())
}

/// `Θ_{s,d} = 2^{-s} (H_{d-1}(S^{d-1}) / d)^{s/d}`.
pub fn theta_bound(d: u32, s: f64) -> Result<f64> {
    check_s_above_d(d, s)?;
    let df = d as f64;
    Ok((-s * 2f64.ln() + (s / df) * (sphere_area(d - 1) / df).ln()).exp())
}

/// `ξ_{s,d} = [π^{d/2} Γ(1+(s-d)/2) / Γ(1+s/2)]^{s/d} d/(s-d)`.
///
/// Computed for every `s > d`; see [`xi_outside_hypothesis`] for when the
/// value is not known to be a lower bound.
pub fn xi_bound(d: u32, s: f64) -> Result<f64> {
    check_s_above_d(d, s)?;
    let df = d as f64;
    let ln_inner = 0.5 * df * PI.ln() + ln_gamma(1.0 + 0.5 * (s - df)) - ln_gamma(1.0 + 0.5 * s);
    Ok((s / df * ln_inner).exp() * df / (s - df))
}

/// True when `d < 2` or `(s-d)/2` is an integer.
pub fn xi_outside_hypothesis(d: u32, s: f64) -> bool {
    let half = 0.5 * (s - d as f64);
    d < 2 || (half - half.round()).abs() < 1e-12
}

/// `[π^{(d+1)/2} Γ(d+1) / Γ((d+1)/2)]^{s/d} · 4 / (λ_d Γ(d+1))`.
pub fn asd_prefactor(d: u32, s: f64) -> Result<f64> {
    let df = d as f64;
    let ln_inner = 0.5 * (df + 1.0) * PI.ln() + ln_gamma(df + 1.0) - ln_gamma(0.5 * (df + 1.0));
    Ok((s / df * ln_inner).exp() * 4.0 / (lambda_d(d)? * gamma_pos(df + 1.0)))
}

/// A truncated series value with the number of terms summed and a bound on
/// what was left out.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

/// Zeros `z_i` of `J_{d/2}` together with `J_{d/2+1}(z_i)^{-2}`, grown on demand.
#[derive(Clone, Debug)]
pub struct BesselSeries {
    d: u32,
    table: BesselZeroTable,
    inv_j2: Vec<f64>,
}

impl BesselSeries {
    pub fn new(d: u32) -> Result<Self> {
        if d < 1 {
            return Err(Error::domain("dimension must be at least 1"));
        }
        let nu = 0.5 * d as f64;
        let mut series = BesselSeries {
            d,
            table: bessel_zeros(nu, 16)?,
            inv_j2: Vec::new(),
        };
        series.fill_weights();
        Ok(series)
    }

    /// Starts from an existing zero table of `J_{d/2}`, e.g. one read from a cache.
    pub fn from_table(d: u32, table: BesselZeroTable) -> Result<Self> {
        if d < 1 || table.nu != 0.5 * d as f64 || table.is_empty() {
            return Err(Error::domain(format!("zero table does not belong to J_{}", 0.5 * d as f64)));
        }
        let mut series = BesselSeries {
            d,
            table,
            inv_j2: Vec::new(),
        };
        series.fill_weights();
        Ok(series)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn zeros(&self) -> &[f64] {
        &self.table.zeros
    }

    /// `J_{d/2+1}(z_i)^{-2}` for the zeros computed so far.
    pub fn inv_j2(&self) -> &[f64] {
        &self.inv_j2
    }

    pub fn ensure(&mut self, n: usize) -> Result<()> {
        if n > ZERO_BUDGET {
            return Err(Error::Resource(format!(
                "series needs {n} Bessel zeros, budget is {ZERO_BUDGET}"
            )));
        }
        if n > self.table.len() {
            self.table.extend_to(n.max(2 * self.table.len()).min(ZERO_BUDGET))?;
            self.fill_weights();
        }
        Ok(())
    }

    fn fill_weights(&mut self) {
        let nu1 = 0.5 * self.d as f64 + 1.0;
        for &z in &self.table.zeros[self.inv_j2.len()..] {
            let j = bessel_j_unchecked(nu1, z);
            self.inv_j2.push(1.0 / (j * j));
        }
    }

    /// `Σ_{i≤m} z_i^{d-s-2} J_{d/2+1}(z_i)^{-2}` plus the asymptotic tail beyond `m`.
    fn asd_sum(&self, s: f64, m: usize) -> (f64, f64) {
        let df = self.d as f64;
        let e = df - s - 2.0;
        let mut head = 0.0;
        for i in (0..m).rev() {
            head += self.table.zeros[i].powf(e) * self.inv_j2[i];
        }
        let (tail, bound) = asd_tail(self.d, s, m);
        (head + tail, bound + 1e-15 * head.abs())
    }
}

/// Sum over `n > m` of the expansion
/// `(π/2) β_n^p (1 + a1 β_n^{-2} + a2 β_n^{-4})`, `β_n = π(n + ν/2 - 1/4)`,
/// `p = d - s - 1`, obtained from McMahon's expansion of the zeros and the
/// large-argument modulus of `J_{ν+1}`.  Returns the tail and a bound on the
/// neglected higher-order terms.
fn asd_tail(d: u32, s: f64, m: usize) -> (f64, f64) {
    let nu = 0.5 * d as f64;
    let mu = 4.0 * nu * nu;
    let w = mu - 1.0;
    let e1 = w / 8.0;
    let e3 = w * (7.0 * mu - 31.0) / 384.0;
    let c1 = w / 8.0;
    let c2 = 3.0 * w * (mu - 9.0) / 128.0;
    let p = d as f64 - s - 1.0;
    let a1 = c1 - p * e1;
    let a2 = 2.0 * c1 * e1 + c2 - p * e1 * c1 - p * e3 + 0.5 * p * (p - 1.0) * e1 * e1;
    let q = m as f64 + 1.0 + 0.5 * nu - 0.25;
    let piece = |j: i32, coef: f64| {
        if coef == 0.0 {
            0.0
        } else {
            let ex = p - 2.0 * j as f64;
            coef * 0.5 * PI * PI.powf(ex) * hurwitz_unchecked(-ex, q)
        }
    };
    let t0 = piece(0, 1.0);
    let t1 = piece(1, a1);
    let t2 = piece(2, a2);
    let beta = PI * q;
    let ratio = (1.0 + a1.abs() + a2.abs().sqrt()) / (beta * beta);
    let bound = 1.1 * (t2.abs() + t0.abs() * ratio.powi(3));
    (t0 + t1 + t2, bound)
}

/// `A_{s,d}` with relative accuracy `tol`.
pub fn asd_bound(d: u32, s: f64, tol: f64) -> Result<SeriesValue> {
    check_s_above_d(d, s)?;
    let mut series = BesselSeries::new(d)?;
    asd_bound_with(&mut series, s, tol)
}

/// As [`asd_bound`], reusing (and growing) a precomputed zero table.
///
/// The series is summed directly over the first `M` zeros and the rest is
/// taken from the asymptotic expansion; `M` doubles from 64 until the
/// reported bound on the neglected terms is below `tol · |value|`.
pub fn asd_bound_with(series: &mut BesselSeries, s: f64, tol: f64) -> Result<SeriesValue> {
    let d = series.d;
    check_s_above_d(d, s)?;
    if !(tol > 0.0) {
        return Err(Error::domain("tolerance must be positive"));
    }
    let pre = asd_prefactor(d, s)?;
    let mut m = ASD_START_TERMS;
    loop {
        series.ensure(m)?;
        let (sum, bound) = series.asd_sum(s, m);
        let value = pre * sum;
        let tail_bound = pre * bound;
        if tail_bound <= tol * value.abs() {
            return Ok(SeriesValue {
                value,
                terms_used: m,
                tail_bound,
            });
        }
        if m >= ASD_MAX_TERMS {
            return Err(Error::Resource(format!(
                "A_{{s,d}} tail bound {tail_bound:e} not below {tol:e} with {m} zeros (d={d}, s={s})"
            )));
        }
        m *= 2;
    }
}

/// Which asymptotic constant [`residue_check`] scales.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    Theta,
    Xi,
    Asd,
}

/// `δ · bound(d, d + δ)`.
pub fn residue_check(d: u32, bound: BoundKind, delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::domain("delta must lie in (0, 1)"));
    }
    let s = d as f64 + delta;
    let v = match bound {
        BoundKind::Theta => theta_bound(d, s)?,
        BoundKind::Xi => xi_bound(d, s)?,
        BoundKind::Asd => asd_bound(d, s, 1e-12)?.value,
    };
    Ok(delta * v)
}

/// `2 π^{d/2} / Γ(d/2)`, the common limit of `(s-d) C_{s,d}` as `s → d⁺`.
pub fn residue_target(d: u32) -> f64 {
    sphere_area(d - 1)
}

/// Radius `R` with `vol(B^d(R/2)) = rho`.
pub fn density_radius(d: u32, rho: f64) -> f64 {
    2.0 * (rho / crate::special::ball_volume(d)).powf(1.0 / d as f64)
}

/// Gaussian-energy lower bound for infinite configurations of density `rho`
/// in `R^d` with potential `exp(-alpha r²)`.
pub fn gauss_bound(d: u32, alpha: f64, rho: f64) -> Result<SeriesValue> {
    let mut series = BesselSeries::new(d)?;
    gauss_bound_with(&mut series, alpha, rho)
}

pub fn gauss_bound_with(series: &mut BesselSeries, alpha: f64, rho: f64) -> Result<SeriesValue> {
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::domain("alpha must be positive"));
    }
    if !(rho > 0.0) || !rho.is_finite() {
        return Err(Error::domain("rho must be positive"));
    }
    let d = series.d;
    let df = d as f64;
    let r = density_radius(d, rho);
    let a = alpha / (PI * r).powi(2);
    let pre = 4.0 / (lambda_d(d)? * gamma_pos(df + 1.0));
    // terms behave like (π/2) z^{d-1} e^{-a z²}, decreasing beyond the peak
    let peak = ((df - 1.0) / (2.0 * a)).sqrt();
    let mut sum = 0.0;
    let mut i = 0;
    loop {
        if i >= series.zeros().len() {
            series.ensure(i + 1)?;
        }
        let z = series.zeros()[i];
        sum += z.powf(df - 2.0) * series.inv_j2()[i] * (-a * z * z).exp();
        i += 1;
        let slope = 2.0 * a * z - (df - 1.0) / z;
        if z > peak && slope > 0.0 {
            let f = 0.5 * PI * z.powf(df - 1.0) * (-a * z * z).exp();
            let tail = 1.1 * f * (1.0 + 1.0 / ((PI - 0.5) * slope));
            if tail <= 1e-13 * sum || tail * pre < 1e-300 {
                return Ok(SeriesValue {
                    value: pre * sum,
                    terms_used: i,
                    tail_bound: pre * tail,
                });
            }
        }
    }
}

/// `L_d = z_1^d / (Γ(d/2+1)² 4^d)`, `z_1` the first zero of `J_{d/2}`.
pub fn packing_bound(d: u32) -> Result<f64> {
    if d < 1 {
        return Err(Error::domain("dimension must be at least 1"));
    }
    let df = d as f64;
    let z1 = bessel_zeros(0.5 * df, 1)?.zeros[0];
    Ok((df * z1.ln() - 2.0 * ln_gamma(0.5 * df + 1.0) - df * 4f64.ln()).exp())
}

/// `(L_d / Δ_d)^{1/d}`.
pub fn bd_ratio(d: u32, delta_d: f64) -> Result<f64> {
    if !(delta_d > 0.0 && delta_d <= 1.0 + 4.0 * f64::EPSILON) {
        return Err(Error::domain("packing density must lie in (0, 1]"));
    }
    Ok((packing_bound(d)? / delta_d.min(1.0)).powf(1.0 / d as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::riemann_zeta;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol * b.abs().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn potentials() {
        let r = Potential::Riesz { s: 2.0 };
        close(r.evaluate(0.0), 0.5, 1e-15);
        let g: Potential = "gauss:1.5".parse().unwrap();
        close(g.evaluate(0.5), (-1.5f64).exp(), 1e-15);
        assert!("riesz".parse::<Potential>().is_err());
        assert!("foo:1".parse::<Potential>().is_err());
        let c = Potential::custom("one", |_| 1.0);
        assert_eq!(format!("{c:?}"), "custom:one");
    }

    #[test]
    fn ulb_examples() {
        let r4 = Potential::Riesz { s: 4.0 };
        close(ulb_energy(2, 4, &r4).unwrap(), 1.6875, 1e-12);
        close(ulb_energy(2, 6, &r4).unwrap(), 6.375, 1e-12);
        let c = Potential::custom("c", |_| 2.5);
        close(ulb_energy(2, 4, &c).unwrap(), 12.0 * 2.5, 1e-12);
    }

    #[test]
    fn theta_and_xi_examples() {
        close(theta_bound(2, 4.0).unwrap(), PI * PI / 16.0, 1e-14);
        close(theta_bound(1, 2.0).unwrap(), 1.0, 1e-14);
        close(xi_bound(2, 4.0).unwrap(), PI * PI / 4.0, 1e-14);
        // d=3, s=5: [π^{3/2} Γ(2)/Γ(7/2)]^{5/3} · 3/2 with Γ(7/2) = 15√π/8
        let inner: f64 = PI.powf(1.5) / (15.0 * PI.sqrt() / 8.0);
        close(xi_bound(3, 5.0).unwrap(), inner.powf(5.0 / 3.0) * 1.5, 1e-14);
        assert!(xi_outside_hypothesis(2, 4.0));
        assert!(!xi_outside_hypothesis(2, 3.0));
        assert!(theta_bound(2, 2.0).is_err());
        assert!(xi_bound(2, 1.0).is_err());
    }

    #[test]
    fn asd_in_dimension_one_is_twice_zeta() {
        for s in [1.5, 2.0, 4.0, 7.3] {
            let v = asd_bound(1, s, 1e-13).unwrap();
            close(v.value, 2.0 * riemann_zeta(s).unwrap(), 1e-12);
        }
        close(asd_bound(1, 2.0, 1e-12).unwrap().value, PI * PI / 3.0, 1e-12);
        close(asd_bound(1, 4.0, 1e-12).unwrap().value, PI.powi(4) / 45.0, 1e-12);
    }

    #[test]
    fn asd_prefactor_d2_s4() {
        close(asd_prefactor(2, 4.0).unwrap(), 16.0 * PI * PI, 1e-13);
    }

    #[test]
    fn asd_tail_expansion_matches_terms() {
        // the three-term expansion should leave an O(β^{-6}) relative remainder
        for d in [2u32, 3, 8, 24] {
            let mut series = BesselSeries::new(d).unwrap();
            series.ensure(400).unwrap();
            let s = d as f64 + 1.5;
            for m in [100usize, 200] {
                let direct: f64 = (m..400)
                    .map(|i| series.zeros()[i].powf(d as f64 - s - 2.0) * series.inv_j2()[i])
                    .sum();
                let (t_m, b_m) = asd_tail(d, s, m);
                let (t_end, _) = asd_tail(d, s, 400);
                let approx = t_m - t_end;
                assert!((direct - approx).abs() <= b_m, "d={d} m={m}: {direct} vs {approx}, bound {b_m}");
            }
        }
    }

    #[test]
    fn asd_stable_under_doubling() {
        for (d, s) in [(2u32, 2.5), (2, 4.0), (3, 3.2), (8, 9.0), (24, 25.0)] {
            let mut series = BesselSeries::new(d).unwrap();
            series.ensure(1024).unwrap();
            let pre = asd_prefactor(d, s).unwrap();
            for m in [64usize, 128, 256] {
                let (a, bound) = series.asd_sum(s, m);
                let (b, _) = series.asd_sum(s, 2 * m);
                assert!(pre * (a - b).abs() <= pre * bound, "d={d} s={s} m={m}");
            }
        }
    }

    #[test]
    fn residues() {
        for d in [1u32, 2, 3] {
            let target = residue_target(d);
            for kind in [BoundKind::Xi, BoundKind::Asd] {
                let v = residue_check(d, kind, 1e-4).unwrap();
                assert!((v / target - 1.0).abs() < 0.01, "d={d} {kind:?}: {v} vs {target}");
            }
        }
        close(residue_target(2), 2.0 * PI, 1e-15);
        close(residue_target(1), 2.0, 1e-15);
        let e: Vec<f64> = [1e-2, 1e-3, 1e-4]
            .iter()
            .map(|&dl| (residue_check(1, BoundKind::Asd, dl).unwrap() - 2.0).abs())
            .collect();
        assert!(e[1] < 0.2 * e[0] && e[2] < 0.2 * e[1]);
    }

    #[test]
    fn gauss_examples() {
        for alpha in [0.3, 1.0, 4.0] {
            let rho: f64 = 1.3;
            let direct: f64 = 2.0 * (1..200).map(|i| (-alpha * (i * i) as f64 / (rho * rho)).exp()).sum::<f64>();
            close(gauss_bound(1, alpha, rho).unwrap().value, direct, 1e-10);
        }
        let mut prev = f64::INFINITY;
        for alpha in [0.1, 0.5, 1.0, 2.0, 8.0, 50.0] {
            let v = gauss_bound(3, alpha, 1.0).unwrap().value;
            assert!(v < prev);
            prev = v;
        }
        assert!(gauss_bound(2, 1e4, 1.0).unwrap().value < 1e-100);
        assert!(gauss_bound(2, 0.0, 1.0).is_err());
        assert!(gauss_bound(2, 1.0, -1.0).is_err());
    }

    #[test]
    fn packing_examples() {
        close(packing_bound(1).unwrap(), 1.0, 1e-14);
        close(packing_bound(2).unwrap(), 3.831705970207512f64.powi(2) / 16.0, 1e-14);
        let l24 = packing_bound(24).unwrap();
        assert!(l24 > 0.0 && l24 < 1.0);
        close(bd_ratio(1, 1.0).unwrap(), 1.0, 1e-14);
        assert!((bd_ratio(2, PI / 12f64.sqrt()).unwrap() - 1.00589479).abs() < 5e-9);
        assert!((bd_ratio(8, PI.powi(4) / 384.0).unwrap() - 1.01742074).abs() < 5e-9);
        assert!(bd_ratio(2, 0.0).is_err());
    }
}
