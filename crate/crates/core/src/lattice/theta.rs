//! Theta-series coefficients `N(m)`: the number of lattice vectors of squared
//! norm `m · norm_step`.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::arith::{default_table, odd_divisor_sums, sigma_table, TauTable, TAU_DEFAULT_MAX};
use super::Lattice;
use crate::error::{Error, Result};

const CSV_HEADER: &str = "# lpbounds theta v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaMode {
    /// Closed forms through divisor sums and tau (D4, E8, Leech).
    Formula,
    /// Direct vector counting.
    Enumeration,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ThetaSeries {
    pub lattice: Lattice,
    pub mode: ThetaMode,
    counts: Vec<BigInt>,
}

impl ThetaSeries {
    pub fn m_max(&self) -> usize {
        self.counts.len()
    }

    /// `N(m)` for `1 ≤ m ≤ m_max`.
    pub fn count(&self, m: usize) -> &BigInt {
        assert!(m >= 1 && m <= self.counts.len(), "theta index {m} out of range");
        &self.counts[m - 1]
    }

    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// First nonzero coefficient.
    pub fn kissing_number(&self) -> Option<&BigInt> {
        self.counts.iter().find(|c| !c.is_zero())
    }

    pub(crate) fn counts_f64(&self) -> Vec<f64> {
        self.counts.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = format!(
            "{CSV_HEADER} lattice={} mode={:?} m_max={}\nm,N\n",
            self.lattice.spec().name,
            self.mode,
            self.m_max()
        );
        for (i, c) in self.counts.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, c));
        }
        out
    }

    pub fn from_csv(text: &str, lattice: Lattice) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines.next().unwrap_or_default();
        if !header.starts_with(CSV_HEADER) {
            return Err(Error::Consistency("theta file has an unknown header".into()));
        }
        let name = format!("lattice={}", lattice.spec().name);
        if !header.split_whitespace().any(|w| w == name) {
            return Err(Error::Consistency(format!("theta file is not for {}", lattice.spec().name)));
        }
        let mode = if header.contains("mode=Formula") {
            ThetaMode::Formula
        } else {
            ThetaMode::Enumeration
        };
        if lines.next() != Some("m,N") {
            return Err(Error::Consistency("theta file is missing its column line".into()));
        }
        let mut counts = Vec::new();
        for (i, line) in lines.enumerate() {
            let (m, n) = line
                .split_once(',')
                .ok_or_else(|| Error::Consistency(format!("bad theta row {line:?}")))?;
            if m.trim().parse::<usize>().ok() != Some(i + 1) {
                return Err(Error::Consistency(format!("theta rows out of order at {line:?}")));
            }
            let n: BigInt = n
                .trim()
                .parse()
                .map_err(|_| Error::Consistency(format!("bad count in {line:?}")))?;
            counts.push(n);
        }
        Ok(ThetaSeries { lattice, mode, counts })
    }
}

/// `N(1..=m_max)` for `lattice`.
pub fn theta_coefficients(lattice: Lattice, m_max: usize, mode: ThetaMode) -> Result<ThetaSeries> {
    if m_max == 0 {
        return Err(Error::domain("m_max must be at least 1"));
    }
    let counts = match mode {
        ThetaMode::Formula => formula(lattice, m_max, None)?,
        ThetaMode::Enumeration => enumerate(lattice, m_max)?,
    };
    Ok(ThetaSeries { lattice, mode, counts })
}

/// Leech coefficients from a caller-sized tau table.
pub fn leech_coefficients(m_max: usize, tau: &TauTable) -> Result<ThetaSeries> {
    Ok(ThetaSeries {
        lattice: Lattice::Leech,
        mode: ThetaMode::Formula,
        counts: formula(Lattice::Leech, m_max, Some(tau))?,
    })
}

fn formula(lattice: Lattice, m_max: usize, tau: Option<&TauTable>) -> Result<Vec<BigInt>> {
    match lattice {
        // odd divisors of 2m are the odd divisors of m
        Lattice::D4 => Ok(odd_divisor_sums(m_max)[1..].iter().map(|&s| BigInt::from(24 * s)).collect()),
        Lattice::E8 => Ok(sigma_table(3, m_max)[1..].iter().map(|s| 240 * s).collect()),
        Lattice::Leech => {
            let tau = match tau {
                Some(t) => t,
                None if m_max <= TAU_DEFAULT_MAX => default_table(),
                None => {
                    return Err(Error::Resource(format!(
                        "Leech coefficients beyond m = {TAU_DEFAULT_MAX} need a larger tau table"
                    )));
                }
            };
            let sig = sigma_table(11, m_max);
            let p = BigInt::from(691);
            (1..=m_max)
                .map(|m| {
                    let num = BigInt::from(65520) * (&sig[m] - tau.get(m)?);
                    if !(&num % &p).is_zero() {
                        return Err(Error::Consistency(format!(
                            "Leech coefficient at m={m} is not an integer"
                        )));
                    }
                    Ok(num / &p)
                })
                .collect()
        }
        other => Err(Error::domain(format!(
            "no closed-form theta series for {}",
            other.spec().name
        ))),
    }
}

fn enumerate(lattice: Lattice, m_max: usize) -> Result<Vec<BigInt>> {
    let u: Vec<u128> = match lattice {
        Lattice::A1 => {
            let mut c = vec![0u128; m_max + 1];
            let mut n = 1usize;
            while n * n <= m_max {
                c[n * n] = 2;
                n += 1;
            }
            c
        }
        Lattice::A2 => count_hexagonal(m_max),
        Lattice::Fcc => count_e8_type(3, 0, false, m_max),
        Lattice::D4 => count_e8_type(4, 0, false, m_max),
        Lattice::D5 => count_e8_type(5, 0, false, m_max),
        Lattice::E6 => count_e8_type(5, 3, true, m_max),
        Lattice::E7 => count_e8_type(6, 2, true, m_max),
        Lattice::E8 => count_e8_type(8, 0, true, m_max),
        Lattice::Leech => {
            return Err(Error::domain("Leech vectors are not enumerated; use the formula mode"));
        }
    };
    Ok(u[1..].iter().map(|&c| BigInt::from(c)).collect())
}

/// `#{(a, b) : a² + ab + b² = m}` for `m ≤ m_max`.
pub(crate) fn count_hexagonal(m_max: usize) -> Vec<u128> {
    let mut c = vec![0u128; m_max + 1];
    // a² + ab + b² ≥ 3/4 max(a, b)²
    let r = ((4 * m_max) as f64 / 3.0).sqrt().ceil() as i64 + 1;
    for a in -r..=r {
        for b in -r..=r {
            let n = a * a + a * b + b * b;
            if n >= 1 && (n as usize) <= m_max {
                c[n as usize] += 1;
            }
        }
    }
    c
}

/// Counts vectors of squared norm `2m` in sublattices of the `E8` model:
/// `free` independent coordinates plus one block of `block` equal
/// coordinates, all in `Z` (coordinate sum even), or additionally all in
/// `Z + 1/2` with even sum when `half` is set.  With `half` unset and no
/// block this is `D_free`.
fn count_e8_type(free: usize, block: usize, half: bool, m_max: usize) -> Vec<u128> {
    // doubled coordinates X = 2x: squared norm 2m ⇔ Σ X² = 8m, sum condition Σ X ≡ 0 (mod 4)
    let cap = 8 * m_max;
    let mut total = vec![0u128; m_max + 1];
    let cosets: &[i64] = if half { &[0, 1] } else { &[0] };
    for &parity in cosets {
        let values: Vec<i64> = {
            let r = (cap as f64).sqrt() as i64 + 1;
            (-r..=r).filter(|x| x.rem_euclid(2) == parity && (x * x) as usize <= cap).collect()
        };
        // dp[norm][sum mod 4]
        let mut dp = vec![[0u128; 4]; cap + 1];
        if block == 0 {
            dp[0][0] = 1;
        } else {
            for &x in &values {
                let n = block * (x * x) as usize;
                if n <= cap {
                    dp[n][(block as i64 * x).rem_euclid(4) as usize] += 1;
                }
            }
        }
        for _ in 0..free {
            let mut next = vec![[0u128; 4]; cap + 1];
            for (n, row) in dp.iter().enumerate() {
                if row.iter().all(|&c| c == 0) {
                    continue;
                }
                for &x in &values {
                    let nn = n + (x * x) as usize;
                    if nn > cap {
                        continue;
                    }
                    for (r, &c) in row.iter().enumerate() {
                        if c != 0 {
                            next[nn][(r as i64 + x).rem_euclid(4) as usize] += c;
                        }
                    }
                }
            }
            dp = next;
        }
        for m in 1..=m_max {
            total[m] += dp[8 * m][0];
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn to_u(v: &ThetaSeries) -> Vec<u128> {
        v.counts().iter().map(|c| c.to_u128().unwrap()).collect()
    }

    #[test]
    fn kissing_numbers() {
        let cases = [
            (Lattice::A1, 2u32),
            (Lattice::A2, 6),
            (Lattice::Fcc, 12),
            (Lattice::D4, 24),
            (Lattice::D5, 40),
            (Lattice::E6, 72),
            (Lattice::E7, 126),
            (Lattice::E8, 240),
        ];
        for (l, k) in cases {
            let t = theta_coefficients(l, 3, ThetaMode::Enumeration).unwrap();
            assert_eq!(t.kissing_number(), Some(&BigInt::from(k)), "{l:?}");
        }
        let leech = theta_coefficients(Lattice::Leech, 3, ThetaMode::Formula).unwrap();
        assert!(leech.count(1).is_zero());
        assert_eq!(leech.count(2), &BigInt::from(196560));
        assert_eq!(leech.count(3), &BigInt::from(16773120));
    }

    #[test]
    fn formula_matches_enumeration() {
        let f = theta_coefficients(Lattice::D4, 30, ThetaMode::Formula).unwrap();
        let e = theta_coefficients(Lattice::D4, 30, ThetaMode::Enumeration).unwrap();
        assert_eq!(f.counts(), e.counts());
        let f = theta_coefficients(Lattice::E8, 20, ThetaMode::Formula).unwrap();
        let e = theta_coefficients(Lattice::E8, 20, ThetaMode::Enumeration).unwrap();
        assert_eq!(f.counts(), e.counts());
    }

    #[test]
    fn d4_enumeration_by_brute_force() {
        let mut brute = [0u128; 11];
        for a in -5i64..=5 {
            for b in -5i64..=5 {
                for c in -5i64..=5 {
                    for d in -5i64..=5 {
                        let n = a * a + b * b + c * c + d * d;
                        if (a + b + c + d) % 2 == 0 && n > 0 && n <= 20 {
                            brute[(n / 2) as usize] += 1;
                        }
                    }
                }
            }
        }
        let e = theta_coefficients(Lattice::D4, 10, ThetaMode::Enumeration).unwrap();
        assert_eq!(to_u(&e), brute[1..].to_vec());
    }

    #[test]
    fn hexagonal_counts() {
        let c = count_hexagonal(13);
        assert_eq!(&c[1..8], &[6, 0, 6, 6, 0, 0, 12]);
        assert_eq!(c[13], 12);
    }

    #[test]
    fn leech_integrality_to_200() {
        let t = theta_coefficients(Lattice::Leech, 200, ThetaMode::Formula).unwrap();
        assert!(t.counts().iter().all(|c| c >= &BigInt::zero()));
    }

    #[test]
    fn csv_round_trip() {
        let t = theta_coefficients(Lattice::E8, 12, ThetaMode::Formula).unwrap();
        let text = t.to_csv();
        assert!(text.starts_with("# lpbounds theta v1 lattice=E8"));
        assert_eq!(ThetaSeries::from_csv(&text, Lattice::E8).unwrap(), t);
        assert!(ThetaSeries::from_csv(&text, Lattice::D4).is_err());
        assert!(ThetaSeries::from_csv("m,N\n1,2\n", Lattice::E8).is_err());
    }

    #[test]
    fn unsupported_modes() {
        assert!(theta_coefficients(Lattice::A2, 5, ThetaMode::Formula).is_err());
        assert!(theta_coefficients(Lattice::Leech, 5, ThetaMode::Enumeration).is_err());
        assert!(matches!(
            theta_coefficients(Lattice::Leech, 1001, ThetaMode::Formula),
            Err(Error::Resource(_))
        ));
    }
}
