//! Adjacent Jacobi polynomials `P_k^{a,b}(t) = P_k^{(α,β)}(t)` with
//! `α = (d-2)/2 + a`, `β = (d-2)/2 + b`, normalized so that `P_k(1) = 1`.
//!
//! Values come from the classical three-term recurrence in the binomial
//! normalization `P_k(1) = C(k+α, k)`; the same recurrence run at `t = 1`
//! supplies the divisor, so the normalized value at 1 is exactly 1.

use super::gamma::ln_beta;
use crate::error::{Error, Result};
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Parameters of an adjacent Jacobi family on `S^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JacobiBasis {
    pub d: u32,
    pub a: u8,
    pub b: u8,
}

impl JacobiBasis {
    pub fn new(d: u32, a: u8, b: u8) -> Result<Self> {
        if d < 1 {
            return Err(Error::domain("dimension d must be >= 1"));
        }
        if a > 1 || b > 1 {
            return Err(Error::domain("offsets a, b must be 0 or 1"));
        }
        Ok(JacobiBasis { d, a, b })
    }

    /// Gegenbauer family `P_k = P_k^{0,0}`.
    pub fn gegenbauer(d: u32) -> Result<Self> {
        Self::new(d, 0, 0)
    }

    pub fn alpha(&self) -> f64 {
        (self.d as f64 - 2.0) / 2.0 + self.a as f64
    }

    pub fn beta(&self) -> f64 {
        (self.d as f64 - 2.0) / 2.0 + self.b as f64
    }

    /// The family with parameters `(α+1, β+1)`, which holds the derivatives.
    pub fn shifted(&self) -> JacobiBasis {
        JacobiBasis {
            d: self.d + 2,
            ..*self
        }
    }

    /// `λ_d^{a,b} = ∫_{-1}^{1} (1-t)^α (1+t)^β dt`.
    pub fn weight_integral(&self) -> f64 {
        let (al, be) = (self.alpha(), self.beta());
        ((al + be + 1.0) * std::f64::consts::LN_2 + ln_beta(al + 1.0, be + 1.0)).exp()
    }

    /// Weight function `(1-t)^α (1+t)^β`.
    pub fn weight(&self, t: f64) -> f64 {
        (1.0 - t).powf(self.alpha()) * (1.0 + t).powf(self.beta())
    }
}

fn check_t(t: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&t) {
        return Err(Error::domain(format!("t = {t} outside [-1, 1]")));
    }
    Ok(())
}

/// Normalized values `P_0(t), …, P_k(t)` for arbitrary real `t`.
pub(crate) fn eval_all(alpha: f64, beta: f64, k: usize, t: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(1.0);
    if k == 0 {
        return out;
    }
    let ab = alpha + beta;
    let p1 = |x: f64| (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
    let (mut pm, mut p) = (1.0, p1(t));
    let (mut qm, mut q) = (1.0, alpha + 1.0);
    out.push(p / q);
    for n in 2..=k {
        let n = n as f64;
        let c = 2.0 * n + ab;
        let a1 = 2.0 * n * (n + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (alpha * alpha - beta * beta);
        let a3 = (c - 1.0) * c * (c - 2.0);
        let a4 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c;
        let pn = ((a2 + a3 * t) * p - a4 * pm) / a1;
        let qn = ((a2 + a3) * q - a4 * qm) / a1;
        pm = p;
        p = pn;
        qm = q;
        q = qn;
        out.push(p / q);
    }
    out
}

pub(crate) fn eval_raw(alpha: f64, beta: f64, k: usize, t: f64) -> f64 {
    *eval_all(alpha, beta, k, t).last().unwrap()
}

/// Normalized derivative factor: `P_k'(t) = k(k+α+β+1)/(2(α+1)) · P_{k-1}^{(α+1,β+1)}(t)`.
pub(crate) fn deriv_raw(alpha: f64, beta: f64, k: usize, t: f64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let kf = k as f64;
    kf * (kf + alpha + beta + 1.0) / (2.0 * (alpha + 1.0))
        * eval_raw(alpha + 1.0, beta + 1.0, k - 1, t)
}

/// `P_k^{a,b}(t)` with `P_k(1) = 1`.
pub fn jacobi_eval(basis: &JacobiBasis, k: usize, t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(eval_raw(basis.alpha(), basis.beta(), k, t))
}

/// Derivative of `P_k^{a,b}` at `t`, from the shift identity.
pub fn jacobi_deriv(basis: &JacobiBasis, k: usize, t: f64) -> Result<f64> {
    check_t(t)?;
    Ok(deriv_raw(basis.alpha(), basis.beta(), k, t))
}

/// Leading-coefficient ratio `m_k = l_k / l_{k+1}` of the normalized family.
pub fn leading_coeff_ratio(basis: &JacobiBasis, k: usize) -> f64 {
    m_ratio(basis.alpha(), basis.beta(), k)
}

pub(crate) fn m_ratio(alpha: f64, beta: f64, k: usize) -> f64 {
    let n = k as f64;
    let ab = alpha + beta;
    if k == 0 {
        // (n+α+β+1) cancels; matters when α+β = -1
        return 2.0 * (alpha + 1.0) / (ab + 2.0);
    }
    2.0 * (n + ab + 1.0) * (n + alpha + 1.0) / ((2.0 * n + ab + 1.0) * (2.0 * n + ab + 2.0))
}

/// `r_0, …, r_k`: reciprocal squared norms of the normalized polynomials
/// against the probability measure `ω^{a,b}/λ^{a,b}`.
///
/// Built as a running product of the exact closed-form ratios
/// `r_n / r_{n-1}`, which never overflows for the degrees used here and
/// keeps the relative error near `n·ε`.
pub(crate) fn norm_ratios(alpha: f64, beta: f64, k: usize) -> Vec<f64> {
    let ab = alpha + beta;
    let mut r = Vec::with_capacity(k + 1);
    r.push(1.0);
    if k == 0 {
        return r;
    }
    r.push((1.0 + alpha) * (3.0 + ab) / (1.0 + beta));
    for n in 2..=k {
        let n = n as f64;
        let ratio = (n + alpha) * (2.0 * n + ab + 1.0) * (n + ab)
            / (n * (n + beta) * (2.0 * n + ab - 1.0));
        let last = *r.last().unwrap();
        r.push(last * ratio);
    }
    r
}

/// `r_k^{a,b}`.
pub fn jacobi_norm_ratio(basis: &JacobiBasis, k: usize) -> f64 {
    norm_ratios(basis.alpha(), basis.beta(), k)[k]
}

/// Christoffel–Darboux kernel `Q_k(x, y) = Σ_{i≤k} r_i P_i(x) P_i(y)`.
///
/// Ratio form for `x ≠ y`, confluent form for `x = y`.
pub fn cd_kernel(basis: &JacobiBasis, k: usize, x: f64, y: f64) -> f64 {
    cd_raw(basis.alpha(), basis.beta(), k, x, y)
}

pub(crate) fn cd_raw(alpha: f64, beta: f64, k: usize, x: f64, y: f64) -> f64 {
    let r = norm_ratios(alpha, beta, k)[k];
    let m = m_ratio(alpha, beta, k);
    let px = eval_all(alpha, beta, k + 1, x);
    if x == y {
        let d1 = deriv_raw(alpha, beta, k + 1, x);
        let d0 = deriv_raw(alpha, beta, k, x);
        return r * m * (d1 * px[k] - d0 * px[k + 1]);
    }
    let py = eval_all(alpha, beta, k + 1, y);
    r * m * (px[k + 1] * py[k] - px[k] * py[k + 1]) / (x - y)
}

/// Direct sum form of the kernel.
pub fn cd_kernel_sum(basis: &JacobiBasis, k: usize, x: f64, y: f64) -> f64 {
    let (al, be) = (basis.alpha(), basis.beta());
    let r = norm_ratios(al, be, k);
    let px = eval_all(al, be, k, x);
    let py = eval_all(al, be, k, y);
    (0..=k).map(|i| r[i] * px[i] * py[i]).sum()
}

/// Jacobi (tridiagonal) matrix of the monic recurrence, size `k`.
pub(crate) fn jacobi_matrix(alpha: f64, beta: f64, k: usize) -> DMatrix<f64> {
    let ab = alpha + beta;
    let mut m = DMatrix::zeros(k, k);
    for i in 0..k {
        let n = i as f64;
        let diag = if i == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / ((2.0 * n + ab) * (2.0 * n + ab + 2.0))
        };
        m[(i, i)] = diag;
        if i + 1 < k {
            let n = (i + 1) as f64;
            let b2 = if i == 0 {
                4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab))
            } else {
                4.0 * n * (n + alpha) * (n + beta) * (n + ab)
                    / ((2.0 * n + ab).powi(2) * (2.0 * n + ab + 1.0) * (2.0 * n + ab - 1.0))
            };
            m[(i, i + 1)] = b2.sqrt();
            m[(i + 1, i)] = b2.sqrt();
        }
    }
    m
}

/// Newton polish of an approximate root of `f` (with derivative `df`).
pub(crate) fn newton_polish(
    f: impl Fn(f64) -> (f64, f64),
    mut x: f64,
    index: usize,
) -> Result<f64> {
    for _ in 0..60 {
        let (v, dv) = f(x);
        if v == 0.0 {
            return Ok(x);
        }
        let step = v / dv;
        if !step.is_finite() {
            break;
        }
        x -= step;
        if step.abs() <= 4.0 * f64::EPSILON * x.abs().max(1e-3) {
            break;
        }
    }
    let (v, dv) = f(x);
    if v.abs() < 1e-13 * dv.abs().max(1.0) {
        return Ok(x);
    }
    Err(Error::numerical("Newton polish of polynomial root failed", index, v.abs()))
}

/// Symmetric tridiagonal eigenvalues, ascending.
pub(crate) fn tridiag_eigenvalues(m: DMatrix<f64>, degree: usize) -> Result<Vec<f64>> {
    let eig = m.try_symmetric_eigen(f64::EPSILON, 10_000).ok_or_else(|| {
        Error::numerical("symmetric eigenvalue iteration failed", degree, f64::NAN)
    })?;
    let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(v)
}

/// All zeros of `P_k^{a,b}`, increasing.
pub fn jacobi_zeros(basis: &JacobiBasis, k: usize) -> Result<Vec<f64>> {
    if k == 0 {
        return Err(Error::domain("jacobi_zeros requires k >= 1"));
    }
    let (al, be) = (basis.alpha(), basis.beta());
    let approx = tridiag_eigenvalues(jacobi_matrix(al, be, k), k)?;
    let mut out = Vec::with_capacity(k);
    for x0 in approx {
        let z = newton_polish(|x| (eval_raw(al, be, k, x), deriv_raw(al, be, k, x)), x0, k)?;
        out.push(z);
    }
    for w in out.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::numerical("zeros not strictly increasing", k, w[1] - w[0]));
        }
    }
    Ok(out)
}

/// Largest zero `γ_k^{a,b}`; `γ_0 = -1` by convention.
///
/// Newton from `t = 1` converges monotonically for a polynomial whose
/// zeros are all real and lie to the left.
pub fn largest_zero(basis: &JacobiBasis, k: usize) -> Result<f64> {
    if k == 0 {
        return Ok(-1.0);
    }
    let (al, be) = (basis.alpha(), basis.beta());
    let mut x = 1.0;
    for _ in 0..500 {
        let v = eval_raw(al, be, k, x);
        let dv = deriv_raw(al, be, k, x);
        let step = v / dv;
        let next = x - step;
        if !(next < x) || step.abs() <= 2.0 * f64::EPSILON {
            return Ok(if next < x { next } else { x });
        }
        x = next;
    }
    Err(Error::numerical("largest zero iteration did not converge", k, eval_raw(al, be, k, x)))
}
