//! Delsarte–Goethals–Seidel design bound, the Levenshtein function and
//! Levenshtein's 1/N-quadrature rules on `S^d`.
//!
//! A 1/N-quadrature rule `{(α_i, ρ_i)}` integrates `f` against the
//! normalized Gegenbauer measure as `f(1)/N + Σ ρ_i f(α_i)`, exactly for
//! polynomials of degree up to [`QuadratureRule::exact_degree`].

use crate::error::{Error, Result};
use crate::special::jacobi::{
    cd_raw, deriv_raw, eval_all, jacobi_matrix, largest_zero, m_ratio, newton_polish,
    norm_ratios, tridiag_eigenvalues, JacobiBasis,
};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

fn binom_u128(n: u64, r: u64) -> u128 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

fn binom_f64(n: u64, r: u64) -> f64 {
    binom_u128(n, r) as f64
}

/// `D(d, τ)`: minimum cardinality of a spherical τ-design allowed by the
/// linear-programming bound. `D(d, 0) = 1`.
pub fn dgs_bound(d: u32, tau: u32) -> u128 {
    let d = d as u64;
    let tau = tau as u64;
    if tau % 2 == 1 {
        let k = tau.div_ceil(2);
        2 * binom_u128(d + k - 1, d)
    } else {
        let k = tau / 2;
        binom_u128(d + k, d) + binom_u128(d + k - 1, d)
    }
}

/// Location of `s` in the partition `[-1, 1) = ⋃ I_τ`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LevenshteinQuery {
    pub d: u32,
    pub s: f64,
    pub tau: u32,
    /// `[lo, hi]` endpoints of `I_τ`.
    pub interval: (f64, f64),
}

fn basis10(d: u32) -> JacobiBasis {
    JacobiBasis { d, a: 1, b: 0 }
}

fn basis11(d: u32) -> JacobiBasis {
    JacobiBasis { d, a: 1, b: 1 }
}

/// Endpoints of `I_τ`, from largest zeros of the adjacent polynomials.
pub fn interval_endpoints(d: u32, tau: u32) -> Result<(f64, f64)> {
    if tau == 0 {
        return Err(Error::domain("interval index must be >= 1"));
    }
    let k = (tau.div_ceil(2)) as usize;
    if tau % 2 == 1 {
        Ok((largest_zero(&basis11(d), k - 1)?, largest_zero(&basis10(d), k)?))
    } else {
        Ok((largest_zero(&basis10(d), k)?, largest_zero(&basis11(d), k)?))
    }
}

const MAX_INTERVAL_SEARCH: usize = 20_000;

/// Finds τ with `s ∈ I_τ` (the lower interval at shared endpoints).
pub fn resolve_interval(d: u32, s: f64) -> Result<LevenshteinQuery> {
    check_dim(d)?;
    if !(-1.0..1.0).contains(&s) {
        return Err(Error::domain(format!("s = {s} must lie in [-1, 1)")));
    }
    let mut g11_prev = -1.0;
    for k in 1..MAX_INTERVAL_SEARCH {
        let g10 = largest_zero(&basis10(d), k)?;
        if s <= g10 {
            return Ok(LevenshteinQuery {
                d,
                s,
                tau: (2 * k - 1) as u32,
                interval: (g11_prev, g10),
            });
        }
        let g11 = largest_zero(&basis11(d), k)?;
        if s <= g11 {
            return Ok(LevenshteinQuery {
                d,
                s,
                tau: (2 * k) as u32,
                interval: (g10, g11),
            });
        }
        g11_prev = g11;
    }
    Err(Error::Resource(format!("s = {s} too close to 1 for interval search")))
}

fn check_dim(d: u32) -> Result<()> {
    if d < 1 {
        return Err(Error::domain("dimension d must be >= 1"));
    }
    Ok(())
}

/// Branch `L_τ(d, s)` of the Levenshtein function, for `τ ≥ 1`.
pub fn lev_branch(d: u32, tau: u32, s: f64) -> f64 {
    let g = JacobiBasis { d, a: 0, b: 0 };
    let (al, be) = (g.alpha(), g.beta());
    let df = d as f64;
    let k = (tau.div_ceil(2)) as u64;
    let big_d = d as u64;
    if tau % 2 == 1 {
        let p = eval_all(al, be, k as usize, s);
        let (pkm, pk) = (p[k as usize - 1], p[k as usize]);
        binom_f64(k + big_d - 2, k - 1)
            * ((2.0 * k as f64 + df - 2.0) / df - (pkm - pk) / ((1.0 - s) * pk))
    } else {
        let p = eval_all(al, be, k as usize + 1, s);
        let (pk, pk1) = (p[k as usize], p[k as usize + 1]);
        binom_f64(k + big_d - 1, k)
            * ((2.0 * k as f64 + df) / df - (1.0 + s) * (pk - pk1) / ((1.0 - s) * (pk + pk1)))
    }
}

/// Levenshtein function `L(d, s)` for `s ∈ [-1, 1)`.
pub fn lev_function(d: u32, s: f64) -> Result<f64> {
    let q = resolve_interval(d, s)?;
    Ok(lev_branch(d, q.tau, s))
}

/// τ with `N ∈ (D(d,τ), D(d,τ+1)]`.
pub fn tau_for_n(d: u32, n: f64) -> Result<u32> {
    check_dim(d)?;
    if !(n >= 2.0) || !n.is_finite() {
        return Err(Error::domain(format!("N = {n} must be >= 2")));
    }
    let mut tau = 0u32;
    while (dgs_bound(d, tau + 1) as f64) < n {
        tau += 1;
    }
    Ok(tau)
}

/// The unique `s` with `L(d, s) = N`. Non-integer `N` is accepted.
pub fn solve_s_for_n(d: u32, n: f64) -> Result<f64> {
    let tau = tau_for_n(d, n)?;
    if tau == 0 {
        return Ok(-1.0);
    }
    let (mut lo, mut hi) = interval_endpoints(d, tau)?;
    if n == dgs_bound(d, tau + 1) as f64 {
        return Ok(hi);
    }
    // L_τ is increasing on I_τ with L_τ(lo) = D(d,τ), L_τ(hi) = D(d,τ+1)
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if lev_branch(d, tau, mid) < n {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let (flo, fhi) = (lev_branch(d, tau, lo) - n, lev_branch(d, tau, hi) - n);
    Ok(if flo.abs() <= fhi.abs() { lo } else { hi })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Odd,
    Even,
}

/// A Levenshtein 1/N-quadrature rule.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    pub d: u32,
    #[serde(rename = "N")]
    pub n: u64,
    pub tau: u32,
    pub parity: Parity,
    /// Largest node, the solution of `L(d, s) = N`.
    pub s: f64,
    /// Strictly decreasing, all `< 1`.
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub includes_minus_one: bool,
    /// Degree up to which the rule is exact: τ, or τ+1 at `N = D(d, τ+1)`.
    pub exact_degree: u32,
    /// Set when the weight at −1 came from solving the exactness system.
    pub weight_fallback: bool,
}

impl QuadratureRule {
    /// `f(1)/N + Σ ρ_i f(α_i)`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> f64 {
        f(1.0) / self.n as f64 + self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum::<f64>()
    }

    /// `1/N + Σ ρ_i`, which equals 1 for a valid rule.
    pub fn total_mass(&self) -> f64 {
        1.0 / self.n as f64 + self.weights.iter().sum::<f64>()
    }

    /// `{d, N, tau, nodes[], weights[]}` with 17 significant digits.
    pub fn to_json(&self) -> String {
        let list = |v: &[f64]| {
            v.iter().map(|x| fmt17(*x)).collect::<Vec<_>>().join(", ")
        };
        format!(
            "{{\"d\": {}, \"N\": {}, \"tau\": {}, \"nodes\": [{}], \"weights\": [{}]}}",
            self.d,
            self.n,
            self.tau,
            list(&self.nodes),
            list(&self.weights)
        )
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,node,weight\n");
        for (i, (x, w)) in self.nodes.iter().zip(&self.weights).enumerate() {
            writeln!(out, "{},{},{}", i + 1, fmt17(*x), fmt17(*w)).unwrap();
        }
        out
    }
}

/// Fixed 17-significant-digit rendering used by every text output.
pub fn fmt17(x: f64) -> String {
    if x == 0.0 {
        return "0.0000000000000000e0".to_string();
    }
    format!("{x:.16e}")
}

/// Nodes `t ≠ s` of `(t − s) Q_{k−1}(t, s) = 0` for an adjacent family, plus
/// `s` itself, in decreasing order.
///
/// `(t − s) Q_{k−1}(t, s)` is a multiple of `P_k(t) P_{k−1}(s) − P_{k−1}(t) P_k(s)`,
/// whose zeros are the eigenvalues of the Jacobi matrix with its last
/// diagonal entry shifted by `π_k(s)/π_{k−1}(s)` (monic ratio).
fn kernel_nodes(basis: &JacobiBasis, k: usize, s: f64) -> Result<Vec<f64>> {
    let (al, be) = (basis.alpha(), basis.beta());
    let ps = eval_all(al, be, k, s);
    let (pkm_s, pk_s) = (ps[k - 1], ps[k]);
    let shift = pk_s / pkm_s * m_ratio(al, be, k - 1);
    let mut jm = jacobi_matrix(al, be, k);
    jm[(k - 1, k - 1)] += shift;
    let approx = tridiag_eigenvalues(jm, k)?;
    let f = |t: f64| {
        let p = eval_all(al, be, k, t);
        let v = p[k] * pkm_s - p[k - 1] * pk_s;
        let dv = deriv_raw(al, be, k, t) * pkm_s - deriv_raw(al, be, k - 1, t) * pk_s;
        (v, dv)
    };
    let nearest = approx
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1 - s).abs().partial_cmp(&(b.1 - s).abs()).unwrap())
        .map(|(i, _)| i)
        .unwrap();
    let mut nodes = Vec::with_capacity(k);
    for (i, &x0) in approx.iter().enumerate() {
        if i == nearest {
            nodes.push(s);
        } else {
            nodes.push(newton_polish(f, x0, k)?);
        }
    }
    nodes.sort_by(|a, b| b.partial_cmp(a).unwrap());
    for w in nodes.windows(2) {
        if !(w[0] > w[1]) {
            return Err(Error::numerical("quadrature nodes not distinct", k, w[0] - w[1]));
        }
    }
    Ok(nodes)
}

const FALLBACK_DENOM: f64 = 1e-13;

/// Weights making `f(1)/N + Σ w_i f(x_i)` exact on Gegenbauer `P_0..P_{m-1}`.
pub fn solve_exactness_weights(d: u32, nodes: &[f64], n: f64) -> Result<Vec<f64>> {
    let g = JacobiBasis { d, a: 0, b: 0 };
    let m = nodes.len();
    let mut a = DMatrix::zeros(m, m);
    for (i, &x) in nodes.iter().enumerate() {
        let p = eval_all(g.alpha(), g.beta(), m - 1, x);
        for j in 0..m {
            a[(j, i)] = p[j];
        }
    }
    let mut rhs = DVector::from_element(m, -1.0 / n);
    rhs[0] += 1.0;
    a.lu()
        .solve(&rhs)
        .map(|v| v.iter().copied().collect())
        .ok_or_else(|| Error::numerical("singular exactness system", m, f64::NAN))
}

/// Levenshtein 1/N-quadrature rule for `S^d` and integer `N ≥ 2`.
pub fn build_rule(d: u32, n: u64) -> Result<QuadratureRule> {
    check_dim(d)?;
    if n < 2 {
        return Err(Error::domain(format!("N = {n} must be >= 2")));
    }
    let nf = n as f64;
    let tau = tau_for_n(d, nf)?;
    let endpoint = n as u128 == dgs_bound(d, tau + 1);
    let exact_degree = if endpoint { tau + 1 } else { tau };
    if tau == 0 {
        // N = 2: antipodal pair
        return Ok(QuadratureRule {
            d,
            n,
            tau,
            parity: Parity::Even,
            s: -1.0,
            nodes: vec![-1.0],
            weights: vec![0.5],
            includes_minus_one: true,
            exact_degree,
            weight_fallback: false,
        });
    }
    let s = solve_s_for_n(d, nf)?;
    assemble(d, n, tau, s, exact_degree)
}

/// The rule of the requested parity. At `N = D(d, τ+1)` both parities exist:
/// the one [`build_rule`] returns, from `I_τ` at its upper end, and the one
/// from `I_{τ+1}` at its lower end, which may carry a node of zero weight.
pub fn build_rule_with_parity(d: u32, n: u64, parity: Parity) -> Result<QuadratureRule> {
    let rule = build_rule(d, n)?;
    if rule.parity == parity {
        return Ok(rule);
    }
    if rule.exact_degree == rule.tau {
        return Err(Error::domain(format!(
            "N = {n} is not a cardinality D(d, t) where both parities exist"
        )));
    }
    let tau = rule.tau + 1;
    let (lo, _) = interval_endpoints(d, tau)?;
    assemble(d, n, tau, lo, tau)
}

fn assemble(d: u32, n: u64, tau: u32, s: f64, exact_degree: u32) -> Result<QuadratureRule> {
    let nf = n as f64;
    let k = (tau.div_ceil(2)) as usize;
    let lambda = JacobiBasis { d, a: 0, b: 0 }.weight_integral();
    if tau % 2 == 1 {
        let b = basis10(d);
        let nodes = if k == 1 { vec![s] } else { kernel_nodes(&b, k, s)? };
        let scale = b.weight_integral() / lambda;
        let weights = nodes
            .iter()
            .map(|&x| scale / ((1.0 - x) * cd_raw(b.alpha(), b.beta(), k - 1, x, x)))
            .collect();
        return Ok(QuadratureRule {
            d,
            n,
            tau,
            parity: Parity::Odd,
            s,
            nodes,
            weights,
            includes_minus_one: false,
            exact_degree,
            weight_fallback: false,
        });
    }
    let b = basis11(d);
    let mut nodes = if k == 1 { vec![s] } else { kernel_nodes(&b, k, s)? };
    let scale = b.weight_integral() / lambda;
    // same kernel index as the node equation; Q_k here breaks exactness off the endpoints
    let mut weights: Vec<f64> = nodes
        .iter()
        .map(|&x| scale / ((1.0 - x * x) * cd_raw(b.alpha(), b.beta(), k - 1, x, x)))
        .collect();
    nodes.push(-1.0);
    let g = JacobiBasis { d, a: 0, b: 0 };
    let q = |x: f64, y: f64| cd_raw(g.alpha(), g.beta(), k, x, y);
    let q_s1 = q(s, 1.0);
    let denom = q(-1.0, -1.0) * q_s1 - q(-1.0, 1.0) * q(s, -1.0);
    let mut weight_fallback = false;
    if denom.abs() >= FALLBACK_DENOM {
        weights.push(q_s1 / denom);
    } else {
        weights = solve_exactness_weights(d, &nodes, nf)?;
        weight_fallback = true;
    }
    Ok(QuadratureRule {
        d,
        n,
        tau,
        parity: Parity::Even,
        s,
        nodes,
        weights,
        includes_minus_one: true,
        exact_degree,
        weight_fallback,
    })
}

/// Exact moments `(1/λ_d) ∫ t^j ω_d(t) dt`.
pub fn monomial_moment(d: u32, j: u32) -> f64 {
    if j % 2 == 1 {
        return 0.0;
    }
    (0..j / 2)
        .map(|i| (2 * i + 1) as f64 / (2 * i + 1 + d) as f64)
        .product()
}

/// Test functions for [`verify_exactness_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExactnessBasis {
    /// `t^j`.
    Monomial,
    /// `√r_j P_j(t)`, orthonormal for the normalized Gegenbauer measure.
    Orthonormal,
}

/// Worst defect `|f(1)/N + Σ ρ_i f(α_i) − f_0|` over monomials of degree
/// `0..=max_degree`.
pub fn verify_exactness(rule: &QuadratureRule, max_degree: u32) -> f64 {
    verify_exactness_with(rule, max_degree, ExactnessBasis::Monomial)
}

pub fn verify_exactness_with(rule: &QuadratureRule, max_degree: u32, basis: ExactnessBasis) -> f64 {
    match basis {
        ExactnessBasis::Monomial => (0..=max_degree)
            .map(|j| (rule.apply(|t| t.powi(j as i32)) - monomial_moment(rule.d, j)).abs())
            .fold(0.0, f64::max),
        ExactnessBasis::Orthonormal => {
            let g = JacobiBasis { d: rule.d, a: 0, b: 0 };
            let (al, be) = (g.alpha(), g.beta());
            let m = max_degree as usize;
            let r = norm_ratios(al, be, m);
            let mut acc = vec![1.0 / rule.n as f64; m + 1];
            for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
                for (j, p) in eval_all(al, be, m, x).into_iter().enumerate() {
                    acc[j] += w * p;
                }
            }
            acc.iter()
                .enumerate()
                .map(|(j, v)| (r[j].sqrt() * v - if j == 0 { 1.0 } else { 0.0 }).abs())
                .fold(0.0, f64::max)
        }
    }
}

/// `α_1(N)`: no N-point configuration on `S^d` has all inner products below it.
pub fn separation_bound(d: u32, n: u64) -> Result<f64> {
    Ok(build_rule(d, n)?.nodes[0])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dgs_examples() {
        assert_eq!(dgs_bound(2, 2), 4);
        assert_eq!(dgs_bound(2, 3), 6);
        for d in 1..30 {
            assert_eq!(dgs_bound(d, 1), 2);
        }
        assert_eq!(dgs_bound(2, 4), 9);
    }

    #[test]
    fn levenshtein_examples() {
        assert!((lev_function(2, 0.0).unwrap() - 6.0).abs() < 1e-12);
        assert!((lev_function(2, -1.0 / 3.0).unwrap() - 4.0).abs() < 1e-12);
        assert!((lev_function(2, -1.0).unwrap() - 2.0).abs() < 1e-12);
        assert!(lev_function(2, 1.0).is_err());
    }

    #[test]
    fn solve_examples() {
        assert!((solve_s_for_n(2, 4.0).unwrap() + 1.0 / 3.0).abs() < 1e-15);
        assert!(solve_s_for_n(2, 6.0).unwrap().abs() < 1e-15);
        for &n in &[2.5, 3.0, 5.0, 7.3, 40.0, 1000.0] {
            let s = solve_s_for_n(3, n).unwrap();
            assert!((lev_function(3, s).unwrap() - n).abs() < 1e-9 * n);
        }
        assert!(solve_s_for_n(2, 1.5).is_err());
    }

    #[test]
    fn rule_examples() {
        let r = build_rule(2, 4).unwrap();
        assert_eq!(r.nodes.len(), 1);
        assert!((r.nodes[0] + 1.0 / 3.0).abs() < 1e-15);
        assert!((r.weights[0] - 0.75).abs() < 1e-15);
        assert_eq!(r.exact_degree, 2);

        let r = build_rule(2, 6).unwrap();
        assert!(r.nodes[0].abs() < 1e-15 && r.nodes[1] == -1.0);
        assert!((r.weights[0] - 2.0 / 3.0).abs() < 1e-14);
        assert!((r.weights[1] - 1.0 / 6.0).abs() < 1e-14);
        assert!(!r.weight_fallback);

        let r = build_rule(2, 2).unwrap();
        assert_eq!(r.nodes, vec![-1.0]);
        assert!(verify_exactness(&r, 1) < 1e-15);
    }

    #[test]
    fn endpoint_rule_uses_jacobi_zeros() {
        let r = build_rule(2, 9).unwrap();
        let mut z = crate::special::jacobi_zeros(&basis10(2), 2).unwrap();
        z.reverse();
        for (a, b) in r.nodes.iter().zip(&z) {
            assert!((a - b).abs() < 1e-14);
        }
        assert!(verify_exactness(&r, 4) < 1e-14);
    }

    #[test]
    fn exactness_examples() {
        let r4 = build_rule(2, 4).unwrap();
        assert!(verify_exactness(&r4, 1) < 1e-14);
        let r6 = build_rule(2, 6).unwrap();
        assert!(verify_exactness(&r6, 3) < 1e-12);
        let defect4 = (r6.apply(|t| t.powi(4)) - 0.2).abs();
        // 1/N·1 + 2/3·0 + 1/6·1 = 1/3 against the moment 1/5
        assert!((defect4 - 2.0 / 15.0).abs() < 1e-14);
        assert!(verify_exactness(&r6, 4) > 1e-3);
    }

    #[test]
    fn rules_exact_and_positive() {
        for d in [1, 2, 3, 4, 8, 24] {
            for n in 2..80u64 {
                let r = build_rule(d, n).unwrap();
                assert!(r.weights.iter().all(|&w| w > 0.0), "d={d} n={n}");
                assert!((r.total_mass() - 1.0).abs() < 1e-12, "d={d} n={n}");
                let defect = verify_exactness_with(&r, r.exact_degree, ExactnessBasis::Orthonormal);
                assert!(defect < 1e-10, "d={d} n={n} defect={defect}");
            }
        }
    }

    #[test]
    fn separation_examples() {
        assert!((separation_bound(2, 4).unwrap() + 1.0 / 3.0).abs() < 1e-15);
        assert!(separation_bound(2, 6).unwrap().abs() < 1e-15);
        let mut prev = -1.0;
        for n in 4..=30 {
            let a = separation_bound(2, n).unwrap();
            assert!(a >= prev);
            prev = a;
        }
    }

    #[test]
    fn json_shape() {
        let j = build_rule(2, 4).unwrap().to_json();
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v["N"], 4);
        assert_eq!(v["nodes"].as_array().unwrap().len(), 1);
    }
}
