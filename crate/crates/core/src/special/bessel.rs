//! Bessel functions of the first kind for real order `ν ≥ 0` and real
//! argument `x ≥ 0`, plus tables of their positive zeros.
//!
//! Two regimes:
//! - `x ≤ SERIES_LIMIT` or `ν ≥ x`: ascending power series accumulated in
//!   double-double, so the cancellation between terms (up to about `e^x`)
//!   never reaches the double-precision result.
//! - otherwise: Hankel's asymptotic expansion for the two lowest orders
//!   `μ, μ+1` with `μ = frac(ν)`, followed by forward recurrence in the
//!   order, which is stable while the order stays below `x`.

use super::gamma::ln_gamma;
use crate::dd::Dd;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

const SERIES_LIMIT: f64 = 30.0;

/// `J_ν(x)`.
pub fn bessel_j(nu: f64, x: f64) -> Result<f64> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::domain(format!("bessel_j requires nu >= 0, got {nu}")));
    }
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::domain(format!("bessel_j requires x >= 0, got {x}")));
    }
    Ok(bessel_j_unchecked(nu, x))
}

pub(crate) fn bessel_j_unchecked(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    if x <= SERIES_LIMIT || nu >= x {
        series(nu, x)
    } else {
        hankel_recurrence(nu, x)
    }
}

/// `J_ν'(x) = (ν/x) J_ν(x) − J_{ν+1}(x)`.
pub(crate) fn bessel_j_deriv(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return match nu {
            1.0 => 0.5,
            n if n == 0.0 || n > 1.0 => 0.0,
            _ => f64::INFINITY,
        };
    }
    nu / x * bessel_j_unchecked(nu, x) - bessel_j_unchecked(nu + 1.0, x)
}

fn series(nu: f64, x: f64) -> f64 {
    let q = Dd::new(x) * Dd::new(x);
    let q = q.mul_f64(0.25);
    let mut term = Dd::new(1.0);
    let mut sum = Dd::new(1.0);
    let mut m = 0.0f64;
    loop {
        m += 1.0;
        term = (-(term * q)).div_f64(m * (m + nu));
        sum = sum + term;
        if term.abs().hi < 1e-34 * sum.abs().hi.max(1e-300) && m > 0.5 * x {
            break;
        }
        if m > 2000.0 {
            break;
        }
    }
    let log_prefactor = nu * (0.5 * x).ln() - ln_gamma(nu + 1.0);
    sum.to_f64() * log_prefactor.exp()
}

/// Hankel expansion `(P, Q)` with `J_ν(x) = √(2/(πx)) (P cos χ − Q sin χ)`.
fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0f64;
    let mut last = f64::INFINITY;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        term *= (mu - odd * odd) / (kf * 8.0 * x);
        let mag = term.abs();
        if mag > last {
            break;
        }
        last = mag;
        // terms alternate P, Q, P, ... with signs +, -, -, +, + ...
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if mag < 1e-18 {
            break;
        }
    }
    (p, q)
}

fn hankel(nu: f64, x: f64) -> f64 {
    let (p, q) = hankel_pq(nu, x);
    let phase = (0.5 * nu + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (sp, cp) = phase.sin_cos();
    let cos_chi = cx * cp + sx * sp;
    let sin_chi = sx * cp - cx * sp;
    (2.0 / (PI * x)).sqrt() * (p * cos_chi - q * sin_chi)
}

fn hankel_recurrence(nu: f64, x: f64) -> f64 {
    let mu = nu.fract();
    let steps = (nu - mu).round() as usize;
    let mut prev = hankel(mu, x);
    if steps == 0 {
        return prev;
    }
    let mut cur = hankel(mu + 1.0, x);
    for i in 1..steps {
        let order = mu + i as f64;
        let next = 2.0 * order / x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Positive zeros `z_1 < z_2 < …` of `J_ν`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BesselZeroTable {
    pub nu: f64,
    pub zeros: Vec<f64>,
    pub certified_count: usize,
}

impl BesselZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// Grows the table to at least `n` zeros.
    pub fn extend_to(&mut self, n: usize) -> Result<()> {
        if self.zeros.len() < scan_count(self.nu) {
            *self = bessel_zeros(self.nu, n.max(self.zeros.len()))?;
            return Ok(());
        }
        let start = self.zeros.len();
        while self.zeros.len() < n {
            push_next_zero(self.nu, &mut self.zeros)?;
        }
        for i in start..self.zeros.len() {
            if !self.residual_ok(i) {
                return Err(Error::numerical(
                    format!("zero of J_{} fails residual check", self.nu),
                    i + 1,
                    bessel_j_unchecked(self.nu, self.zeros[i]).abs(),
                ));
            }
        }
        self.certified_count = self.zeros.len();
        Ok(())
    }

    /// Residual check `|J_ν(z)| < 1e-12 · max(1, |J_ν'(z)| z)` for a stored zero.
    pub fn residual_ok(&self, i: usize) -> bool {
        let z = self.zeros[i];
        let r = bessel_j_unchecked(self.nu, z).abs();
        r < 1e-12 * (bessel_j_deriv(self.nu, z).abs() * z).max(1.0)
    }
}

const NEWTON_MAX_ITER: usize = 100;

/// McMahon's expansion for the n-th zero, three terms.
fn mcmahon(nu: f64, n: usize) -> f64 {
    let mu = 4.0 * nu * nu;
    let b = (n as f64 + 0.5 * nu - 0.25) * PI;
    let b8 = 8.0 * b;
    b - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8.powi(3))
}

/// Safeguarded Newton iteration inside a sign-change bracket.
fn polish(nu: f64, mut lo: f64, mut hi: f64, start: f64, index: usize) -> Result<f64> {
    let mut f_lo = bessel_j_unchecked(nu, lo);
    let mut z = start.clamp(lo, hi);
    for _ in 0..NEWTON_MAX_ITER {
        let f = bessel_j_unchecked(nu, z);
        if f == 0.0 {
            return Ok(z);
        }
        if (f < 0.0) == (f_lo < 0.0) {
            lo = z;
            f_lo = f;
        } else {
            hi = z;
        }
        let df = nu / z * f - bessel_j_unchecked(nu + 1.0, z);
        let mut next = z - f / df;
        if !(next > lo && next < hi) || !next.is_finite() {
            next = 0.5 * (lo + hi);
        }
        let step = (next - z).abs();
        z = next;
        if step < 1e-14_f64.max(4.0 * f64::EPSILON * z) {
            return Ok(z);
        }
    }
    Err(Error::numerical(
        format!("Newton iteration for zero of J_{nu} did not converge"),
        index,
        bessel_j_unchecked(nu, z).abs(),
    ))
}

fn scan_count(nu: f64) -> usize {
    10 + nu.ceil() as usize
}

/// Appends the next zero, starting from McMahon's guess inside the bracket
/// `[prev + 2, prev + 4]`, which holds exactly one zero once the spacing has
/// settled near π.
fn push_next_zero(nu: f64, zeros: &mut Vec<f64>) -> Result<()> {
    let i = zeros.len() + 1;
    let prev = *zeros.last().unwrap();
    let guess = mcmahon(nu, i);
    let (lo, hi) = (prev + 2.0, prev + 4.0);
    let (flo, fhi) = (bessel_j_unchecked(nu, lo), bessel_j_unchecked(nu, hi));
    if (flo < 0.0) == (fhi < 0.0) {
        return Err(Error::numerical(
            format!("no sign change bracketing zero of J_{nu}"),
            i,
            flo.abs(),
        ));
    }
    zeros.push(polish(nu, lo, hi, guess, i)?);
    Ok(())
}

/// First `n` positive zeros of `J_ν`.
///
/// The first few zeros are bracketed by a sign-change scan starting at `ν`
/// (no zero lies below it); the rest start from McMahon's expansion, which at
/// that point is far more accurate than the spacing between zeros.
pub fn bessel_zeros(nu: f64, n: usize) -> Result<BesselZeroTable> {
    if !(nu >= 0.0) || !nu.is_finite() {
        return Err(Error::domain("bessel_zeros requires nu >= 0"));
    }
    if n == 0 {
        return Err(Error::domain("bessel_zeros requires n >= 1"));
    }
    let scan_count = n.min(scan_count(nu));
    let mut zeros = Vec::with_capacity(n);
    let step = 0.2;
    let mut x = nu.max(step);
    let mut fx = bessel_j_unchecked(nu, x);
    while zeros.len() < scan_count {
        let x2 = x + step;
        let f2 = bessel_j_unchecked(nu, x2);
        if (fx < 0.0) != (f2 < 0.0) || f2 == 0.0 {
            let z = polish(nu, x, x2, 0.5 * (x + x2), zeros.len() + 1)?;
            zeros.push(z);
        }
        x = x2;
        fx = f2;
    }
    while zeros.len() < n {
        push_next_zero(nu, &mut zeros)?;
    }
    let table = BesselZeroTable {
        nu,
        certified_count: n,
        zeros,
    };
    for i in 0..n {
        if !table.residual_ok(i) {
            return Err(Error::numerical(
                format!("zero of J_{nu} fails residual check"),
                i + 1,
                bessel_j_unchecked(nu, table.zeros[i]).abs(),
            ));
        }
    }
    Ok(table)
}

const CACHE_VERSION: u32 = 1;

/// Sidecar file name for a zero table keyed by `(ν, count, tolerance)`.
pub fn cache_file_name(nu: f64, count: usize, tol: f64) -> String {
    format!("bessel_zeros_v{CACHE_VERSION}_nu{nu}_n{count}_tol{tol:e}.txt")
}

impl BesselZeroTable {
    /// Text form: a version header line, then one zero per line with 17
    /// significant digits.
    pub fn to_cache_string(&self, tol: f64) -> String {
        let mut out = format!(
            "# lpbounds bessel-zeros v{CACHE_VERSION} nu={} count={} tol={tol:e}\n",
            self.nu,
            self.zeros.len()
        );
        for z in &self.zeros {
            writeln!(out, "{z:.16e}").unwrap();
        }
        out
    }

    pub fn from_cache_string(text: &str, nu: f64, count: usize, tol: f64) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or_default();
        let expect = format!(
            "# lpbounds bessel-zeros v{CACHE_VERSION} nu={nu} count={count} tol={tol:e}"
        );
        if header != expect {
            return Err(Error::Resource(format!("cache header mismatch: {header}")));
        }
        let zeros = lines
            .map(|l| {
                l.trim()
                    .parse::<f64>()
                    .map_err(|e| Error::Resource(format!("bad cache line {l:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if zeros.len() != count {
            return Err(Error::Resource("cache truncated".into()));
        }
        Ok(BesselZeroTable {
            nu,
            certified_count: count,
            zeros,
        })
    }
}

/// Loads the table from `dir` if a matching sidecar exists, otherwise
/// computes it and writes the sidecar. Write failures are ignored.
pub fn bessel_zeros_cached(dir: &Path, nu: f64, n: usize, tol: f64) -> Result<BesselZeroTable> {
    let path: PathBuf = dir.join(cache_file_name(nu, n, tol));
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(t) = BesselZeroTable::from_cache_string(&text, nu, n, tol) {
            return Ok(t);
        }
    }
    let table = bessel_zeros(nu, n)?;
    let _ = std::fs::create_dir_all(dir);
    let _ = std::fs::write(&path, table.to_cache_string(tol));
    Ok(table)
}
