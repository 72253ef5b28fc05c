//! Exact divisor sums and the Ramanujan tau function.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Default number of tau values held by [`ramanujan_tau`].
pub const TAU_DEFAULT_MAX: usize = 1000;

/// `σ_k(m) = Σ_{e | m} e^k`.
pub fn sigma_k(m: u64, k: u32) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::domain("sigma_k requires m >= 1"));
    }
    let mut total = BigInt::zero();
    let mut e = 1u64;
    while e * e <= m {
        if m.is_multiple_of(e) {
            total += BigInt::from(e).pow(k);
            let f = m / e;
            if f != e {
                total += BigInt::from(f).pow(k);
            }
        }
        e += 1;
    }
    Ok(total)
}

/// `σ_k(m)` for `m = 1..=m_max` by sieving; entry 0 is unused and zero.
pub(crate) fn sigma_table(k: u32, m_max: usize) -> Vec<BigInt> {
    if k <= 3 {
        // σ_3(m) < ζ(3) m³ fits comfortably in u128 for any table we can hold
        let mut t = vec![0u128; m_max + 1];
        for e in 1..=m_max {
            let p = (e as u128).pow(k);
            for j in (e..=m_max).step_by(e) {
                t[j] += p;
            }
        }
        return t.into_iter().map(BigInt::from).collect();
    }
    let mut t = vec![BigInt::zero(); m_max + 1];
    for e in 1..=m_max {
        let p = BigInt::from(e).pow(k);
        for j in (e..=m_max).step_by(e) {
            t[j] += &p;
        }
    }
    t
}

/// Sum of the odd divisors of each `m = 1..=m_max`; entry 0 is zero.
pub(crate) fn odd_divisor_sums(m_max: usize) -> Vec<u128> {
    let mut t = vec![0u128; m_max + 1];
    for e in (1..=m_max).step_by(2) {
        for j in (e..=m_max).step_by(e) {
            t[j] += e as u128;
        }
    }
    t
}

/// Coefficients of `∏_{n≥1} (1 - q^n)` up to `q^len-1` from the pentagonal
/// number expansion.
fn euler_series(len: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); len];
    let mut k: i64 = 0;
    loop {
        let mut any = false;
        for kk in if k == 0 { vec![0] } else { vec![k, -k] } {
            let e = (kk * (3 * kk - 1) / 2) as usize;
            if e < len {
                any = true;
                c[e] = if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
            }
        }
        if !any {
            break;
        }
        k += 1;
    }
    c
}

fn mul_trunc(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// `τ(1..=m_max)` as the coefficients of `q ∏ (1 - q^n)^24`.
#[derive(Clone, Debug)]
pub struct TauTable {
    values: Vec<BigInt>,
}

impl TauTable {
    pub fn new(m_max: usize) -> Self {
        let len = m_max;
        let e1 = euler_series(len);
        let e2 = mul_trunc(&e1, &e1, len);
        let e4 = mul_trunc(&e2, &e2, len);
        let e8 = mul_trunc(&e4, &e4, len);
        let e16 = mul_trunc(&e8, &e8, len);
        let e24 = mul_trunc(&e16, &e8, len);
        TauTable { values: e24 }
    }

    pub fn m_max(&self) -> usize {
        self.values.len()
    }

    pub fn get(&self, m: usize) -> Result<&BigInt> {
        if m == 0 {
            return Err(Error::domain("tau requires m >= 1"));
        }
        self.values.get(m - 1).ok_or_else(|| {
            Error::Resource(format!("tau({m}) is beyond the table size {}", self.values.len()))
        })
    }
}

pub(crate) fn default_table() -> &'static TauTable {
    static TABLE: OnceLock<TauTable> = OnceLock::new();
    TABLE.get_or_init(|| TauTable::new(TAU_DEFAULT_MAX))
}

/// `τ(m)` for `m ≤ TAU_DEFAULT_MAX`; use [`TauTable`] for larger arguments.
pub fn ramanujan_tau(m: u64) -> Result<BigInt> {
    default_table().get(m as usize).cloned()
}
