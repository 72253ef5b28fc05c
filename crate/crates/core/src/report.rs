//! Report rows behind the command-line tool, with CSV and JSON renderings.
//!
//! CSV output is locale independent: comma delimiter, `.` decimal point, a
//! header row, and every real printed with 17 significant digits.

use std::fmt::Write;

use serde::Serialize;

use crate::energy::{
    asd_bound_with, bd_ratio, gauss_bound, packing_bound, theta_bound, ulb_energy, xi_bound,
    xi_outside_hypothesis, BesselSeries, Potential,
};
use crate::error::{Error, Result};
use crate::lattice::{c_tilde_with_tol, Lattice};
use crate::quadrature::{build_rule, fmt17};

fn opt17(x: Option<f64>) -> String {
    x.map(fmt17).unwrap_or_default()
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

/// Every asymptotic constant at one `(d, s)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub d: u32,
    pub s: f64,
    pub theta: f64,
    pub xi: f64,
    /// Set when `ξ` falls outside the range where it is known to be a bound.
    pub xi_flag: bool,
    pub a_sd: f64,
    pub a_sd_terms_used: usize,
    pub a_sd_tail_bound: f64,
    pub c_tilde: Option<f64>,
    pub c_tilde_tail_bound: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub finite_n_entries: Vec<(u64, f64)>,
}

pub const BOUNDS_CSV_HEADER: &str = "d,s,theta,xi,xi_flag,a_sd,tail_bound,terms,c_tilde";

impl BoundReport {
    pub fn compute(d: u32, s: f64, tol: f64) -> Result<Self> {
        let mut series = BesselSeries::new(d)?;
        Self::compute_with(&mut series, s, tol, &[])
    }

    /// `tol` is relative; riesz ULB values are added for each `N` in `finite_n`.
    pub fn compute_with(series: &mut BesselSeries, s: f64, tol: f64, finite_n: &[u64]) -> Result<Self> {
        let d = series.d();
        let theta = theta_bound(d, s)?;
        let xi = xi_bound(d, s)?;
        let a = asd_bound_with(series, s, tol)?;
        let c = match Lattice::universal(d) {
            Ok(_) => Some(c_tilde_with_tol(d, s, tol)?),
            Err(_) => None,
        };
        let h = Potential::Riesz { s };
        let finite_n_entries = finite_n
            .iter()
            .map(|&n| Ok((n, ulb_energy(d, n, &h)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BoundReport {
            d,
            s,
            theta,
            xi,
            xi_flag: xi_outside_hypothesis(d, s),
            a_sd: a.value,
            a_sd_terms_used: a.terms_used,
            a_sd_tail_bound: a.tail_bound,
            c_tilde: c.map(|v| v.value),
            c_tilde_tail_bound: c.map(|v| v.tail_bound),
            finite_n_entries,
        })
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.d,
            fmt17(self.s),
            fmt17(self.theta),
            fmt17(self.xi),
            self.xi_flag,
            fmt17(self.a_sd),
            fmt17(self.a_sd_tail_bound),
            self.a_sd_terms_used,
            opt17(self.c_tilde)
        )
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

pub fn bounds_csv(reports: &[BoundReport]) -> String {
    let mut out = format!("{BOUNDS_CSV_HEADER}\n");
    for r in reports {
        writeln!(out, "{}", r.csv_row()).unwrap();
    }
    out
}

/// A grid `start, start + step, ...` up to and including `stop`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl SRange {
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').collect();
        if parts.len() != 3 {
            return Err(Error::domain(format!("s-range must be start:stop:step, got {text:?}")));
        }
        let num = |p: &str| {
            p.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::domain(format!("bad number {p:?} in s-range")))
        };
        let range = SRange {
            start: num(parts[0])?,
            stop: num(parts[1])?,
            step: num(parts[2])?,
        };
        if !(range.step > 0.0) {
            return Err(Error::domain("s-range step must be positive"));
        }
        if range.stop < range.start {
            return Err(Error::domain("s-range stop must not be below start"));
        }
        Ok(range)
    }

    pub fn points(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step * (1.0 + 1e-12)).floor() as usize;
        (0..=n).map(|i| self.start + i as f64 * self.step).collect()
    }
}

/// One row of the `B_d` table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TableRow {
    pub d: u32,
    pub lattice: &'static str,
    pub density: f64,
    pub l_d: f64,
    pub b_d: f64,
    pub conjectured: bool,
}

pub const TABLE_DIMENSIONS: [u32; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 24];

pub fn table_bd() -> Result<Vec<TableRow>> {
    TABLE_DIMENSIONS
        .iter()
        .map(|&d| {
            let spec = Lattice::best_packing(d)?.spec();
            let density = spec.density();
            Ok(TableRow {
                d,
                lattice: spec.name,
                density,
                l_d: packing_bound(d)?,
                b_d: bd_ratio(d, density)?,
                conjectured: spec.conjectured,
            })
        })
        .collect()
}

pub fn table_bd_csv(rows: &[TableRow]) -> String {
    let mut out = String::from("d,lattice,density,l_d,b_d,b_d_8dp,conjectured\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{:.8},{}",
            r.d,
            r.lattice,
            fmt17(r.density),
            fmt17(r.l_d),
            fmt17(r.b_d),
            r.b_d,
            r.conjectured
        )
        .unwrap();
    }
    out
}

/// One grid point of the `f(s) = (C̃/A)^{1/s}` curve.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CurveRow {
    pub s: f64,
    pub a_sd: f64,
    pub c_tilde: f64,
    pub f: f64,
    /// `Θ^{1/s}`, `ξ^{1/s}`, `A^{1/s}` and `|C̃^{1/s} - A^{1/s}|`, filled for `d = 2`.
    pub theta_root: Option<f64>,
    pub xi_root: Option<f64>,
    pub a_sd_root: Option<f64>,
    pub root_gap: Option<f64>,
}

pub fn plot_fs(d: u32, range: &SRange, tol: f64) -> Result<Vec<CurveRow>> {
    Lattice::universal(d)?;
    if d == 1 {
        return Err(Error::domain("the f(s) curve is defined for d in {2, 4, 8, 24}"));
    }
    if !(range.start > d as f64) {
        return Err(Error::domain(format!("s-range must lie in s > d = {d}")));
    }
    let mut series = BesselSeries::new(d)?;
    range
        .points()
        .into_iter()
        .map(|s| {
            let a = asd_bound_with(&mut series, s, tol)?.value;
            let c = c_tilde_with_tol(d, s, tol)?.value;
            let companion = d == 2;
            let root = |v: f64| v.powf(1.0 / s);
            Ok(CurveRow {
                s,
                a_sd: a,
                c_tilde: c,
                f: (c / a).powf(1.0 / s),
                theta_root: companion.then(|| theta_bound(d, s).map(root)).transpose()?,
                xi_root: companion.then(|| xi_bound(d, s).map(root)).transpose()?,
                a_sd_root: companion.then(|| root(a)),
                root_gap: companion.then(|| (root(c) - root(a)).abs()),
            })
        })
        .collect()
}

pub fn plot_fs_csv(rows: &[CurveRow]) -> String {
    let mut out = String::from("s,a_sd,c_tilde,f,theta_root,xi_root,a_sd_root,root_gap\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            fmt17(r.s),
            fmt17(r.a_sd),
            fmt17(r.c_tilde),
            fmt17(r.f),
            opt17(r.theta_root),
            opt17(r.xi_root),
            opt17(r.a_sd_root),
            opt17(r.root_gap)
        )
        .unwrap();
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UlbReport {
    pub d: u32,
    #[serde(rename = "N")]
    pub n: u64,
    pub potential: String,
    pub tau: u32,
    pub s: f64,
    pub value: f64,
}

impl UlbReport {
    pub fn compute(d: u32, n: u64, h: &Potential) -> Result<Self> {
        let rule = build_rule(d, n)?;
        Ok(UlbReport {
            d,
            n,
            potential: format!("{h:?}"),
            tau: rule.tau,
            s: rule.s,
            value: crate::energy::ulb_from_rule(&rule, h)?,
        })
    }

    pub fn to_csv(&self) -> String {
        format!(
            "d,N,potential,tau,s,value\n{},{},{},{},{},{}\n",
            self.d,
            self.n,
            self.potential,
            self.tau,
            fmt17(self.s),
            fmt17(self.value)
        )
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GaussReport {
    pub d: u32,
    pub alpha: f64,
    pub rho: f64,
    pub value: f64,
    pub terms_used: usize,
    pub tail_bound: f64,
}

impl GaussReport {
    pub fn compute(d: u32, alpha: f64, rho: f64) -> Result<Self> {
        let v = gauss_bound(d, alpha, rho)?;
        Ok(GaussReport {
            d,
            alpha,
            rho,
            value: v.value,
            terms_used: v.terms_used,
            tail_bound: v.tail_bound,
        })
    }

    pub fn to_csv(&self) -> String {
        format!(
            "d,alpha,rho,value,terms,tail_bound\n{},{},{},{},{},{}\n",
            self.d,
            fmt17(self.alpha),
            fmt17(self.rho),
            fmt17(self.value),
            self.terms_used,
            fmt17(self.tail_bound)
        )
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn bound_report_row() {
        let r = BoundReport::compute(1, 2.0, 1e-10).unwrap();
        assert!((r.a_sd - PI * PI / 3.0).abs() < 1e-12);
        assert!(r.a_sd_tail_bound < 1e-10 * r.a_sd);
        assert!(r.xi_flag);
        let csv = bounds_csv(std::slice::from_ref(&r));
        assert!(csv.starts_with(BOUNDS_CSV_HEADER));
        assert!(csv.lines().nth(1).unwrap().starts_with("1,2.0000000000000000e0,"));
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["d"], 1);
        let r2 = BoundReport::compute(2, 4.0, 1e-10).unwrap();
        assert!((r2.theta - PI * PI / 16.0).abs() < 1e-14);
        assert!(r2.c_tilde.is_some());
        assert!(BoundReport::compute(3, 5.0, 1e-10).unwrap().c_tilde.is_none());
        assert!(matches!(BoundReport::compute(2, 1.0, 1e-10), Err(Error::Domain(_))));
    }

    #[test]
    fn s_range() {
        let r = SRange::parse("2.5:3.0:0.1").unwrap();
        assert_eq!(r.points().len(), 6);
        assert!((r.points()[5] - 3.0).abs() < 1e-12);
        assert!(SRange::parse("1:2").is_err());
        assert!(SRange::parse("1:2:0").is_err());
        assert!(SRange::parse("3:2:1").is_err());
    }

    #[test]
    fn table_rows() {
        let rows = table_bd().unwrap();
        assert_eq!(rows.len(), 9);
        let csv = table_bd_csv(&rows);
        assert!(csv.lines().nth(1).unwrap().contains(",1.00000000,false"));
        assert_eq!(rows.iter().filter(|r| r.conjectured).count(), 4);
    }

    #[test]
    fn curve_rows() {
        let rows = plot_fs(2, &SRange::parse("2.5:4.5:1").unwrap(), 1e-10).unwrap();
        assert_eq!(rows.len(), 3);
        assert!(rows.iter().all(|r| r.f >= 1.0 && r.root_gap.is_some()));
        let rows8 = plot_fs(8, &SRange::parse("9:10:1").unwrap(), 1e-10).unwrap();
        assert!(rows8[0].theta_root.is_none());
        assert!(plot_fs(3, &SRange::parse("4:5:1").unwrap(), 1e-10).is_err());
        assert!(plot_fs(2, &SRange::parse("1:5:1").unwrap(), 1e-10).is_err());
    }

    #[test]
    fn deterministic_text() {
        let a = UlbReport::compute(2, 6, &Potential::Riesz { s: 4.0 }).unwrap();
        assert!((a.value - 6.375).abs() < 1e-12);
        assert_eq!(a.to_csv(), UlbReport::compute(2, 6, &Potential::Riesz { s: 4.0 }).unwrap().to_csv());
        let g = GaussReport::compute(2, 1.0, 1.0).unwrap();
        let g2 = GaussReport::compute(2, 2.0, 1.0).unwrap();
        assert!(g.value > g2.value && g2.value > 0.0);
        assert!(g.to_json().contains("\"terms_used\""));
    }
}
