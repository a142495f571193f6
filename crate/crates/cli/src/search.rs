//! Parameter-space scans over Hamming, Johnson and strongly regular graphs.
//!
//! Hamming and Johnson points are decided from their closed-form transition
//! spectra, so no graph is built unless a point survives; survivors within
//! the vertex cap are then built and checked against the unitary route.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use grover_core::drg::{evaluate_srgs, SrgParams};
use grover_core::graphs::{Family, Limits};
use grover_core::periodicity::{is_periodic_unitary, minus_one_from_cycles, spectral_verdict_from_eigenvalues, PeriodicityVerdict};
use grover_core::Rational;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report;
use crate::CliError;

/// Label attached to every search: a finite scan of an infinite family.
pub const SCOPE: &str = "verified within bounds";

/// Periodic Hamming parameters `(d, q)`.
pub const HAMMING_PERIODIC: [[u64; 2]; 5] = [[1, 2], [1, 3], [2, 2], [3, 3], [4, 2]];
/// Periodic Johnson parameters `(n, k)` with `k <= n - k`.
pub const JOHNSON_PERIODIC: [[u64; 2]; 3] = [[2, 1], [3, 1], [4, 2]];

pub const DEFAULT_D: RangeInclusive<u64> = 1..=6;
pub const DEFAULT_Q: RangeInclusive<u64> = 2..=12;
pub const DEFAULT_N: RangeInclusive<u64> = 2..=12;
pub const DEFAULT_K: RangeInclusive<u64> = 1..=6;
pub const DEFAULT_VALENCY: RangeInclusive<u64> = 2..=12;
/// Largest value any range may reach unless caps are lifted.
pub const PARAMETER_CAP: u64 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SearchFamily {
    Hamming,
    Johnson,
    Srg,
}

impl fmt::Display for SearchFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchFamily::Hamming => "hamming",
            SearchFamily::Johnson => "johnson",
            SearchFamily::Srg => "srg",
        })
    }
}

/// Inclusive range written `a-b` or `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamRange(pub RangeInclusive<u64>);

impl FromStr for ParamRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("`{t}` is not a nonnegative integer"));
        let (lo, hi) = match s.split_once('-') {
            Some((a, b)) => (num(a)?, num(b)?),
            None => (num(s)?, num(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {lo}-{hi}"));
        }
        Ok(ParamRange(lo..=hi))
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SearchRow {
    pub params: Vec<u64>,
    pub periodic: bool,
    pub period: Option<u64>,
    /// Unitary-route verdict agreement for survivors small enough to build.
    pub unitary_confirmed: Option<bool>,
    /// Set for strongly regular parameters only.
    pub filter_passed: Option<bool>,
    pub failure_witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub family: SearchFamily,
    pub parameter_names: Vec<&'static str>,
    pub ranges: Vec<(&'static str, RangeInclusive<u64>)>,
    pub rows: Vec<SearchRow>,
    /// Known periodic parameters inside the scanned ranges.
    pub expected: Vec<Vec<u64>>,
}

impl SearchReport {
    pub fn periodic_set(&self) -> Vec<Vec<u64>> {
        self.rows.iter().filter(|r| r.periodic).map(|r| r.params.clone()).collect()
    }

    pub fn matches_expected(&self) -> bool {
        self.periodic_set() == self.expected
    }

    /// Every survivor that was built agrees with the unitary route.
    pub fn confirmations_agree(&self) -> bool {
        self.rows.iter().all(|r| r.unitary_confirmed != Some(false))
    }

    pub fn to_value(&self) -> Value {
        json!({
            "family": self.family.to_string(),
            "scope": SCOPE,
            "parameters": self.parameter_names,
            "ranges": self.ranges.iter().map(|(n, r)| (n.to_string(), json!([r.start(), r.end()]))).collect::<serde_json::Map<_, _>>(),
            "rows": self.rows.iter().map(|r| self.row_value(r)).collect::<Vec<_>>(),
            "periodic": self.periodic_set(),
            "expected": self.expected,
            "matches_expected": self.matches_expected(),
            "unitary_confirmations_agree": self.confirmations_agree(),
        })
    }

    fn row_value(&self, r: &SearchRow) -> Value {
        let params: serde_json::Map<_, _> = self
            .parameter_names
            .iter()
            .zip(&r.params)
            .map(|(n, v)| (n.to_string(), json!(v)))
            .collect();
        let mut v = serde_json::to_value(r).expect("rows serialize");
        v["params"] = Value::Object(params);
        v
    }

    pub fn csv_header(&self) -> Vec<String> {
        let mut h: Vec<String> = self.parameter_names.iter().map(|s| s.to_string()).collect();
        h.extend(["periodic", "period", "unitary_confirmed", "filter_passed"].map(String::from));
        h
    }

    pub fn csv_rows(&self) -> Vec<Vec<String>> {
        let opt = |o: Option<String>| o.unwrap_or_default();
        self.rows
            .iter()
            .map(|r| {
                let mut cells: Vec<String> = r.params.iter().map(u64::to_string).collect();
                cells.push(r.periodic.to_string());
                cells.push(opt(r.period.map(|p| p.to_string())));
                cells.push(opt(r.unitary_confirmed.map(|b| b.to_string())));
                cells.push(opt(r.filter_passed.map(|b| b.to_string())));
                cells
            })
            .collect()
    }

    pub fn render(&self, format: report::Format) -> Result<String, CliError> {
        match format {
            report::Format::Json => Ok(report::to_json(&self.to_value())),
            report::Format::Csv => report::to_csv(&self.csv_header(), &self.csv_rows()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub limits: Limits,
    /// Build survivors and run the unitary route on them.
    pub confirm: bool,
    /// Allow ranges beyond [`PARAMETER_CAP`].
    pub lift_caps: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { limits: Limits::default(), confirm: true, lift_caps: false }
    }
}

fn check_range(name: &str, r: &RangeInclusive<u64>, min: u64, opts: &SearchOptions) -> Result<(), CliError> {
    if r.is_empty() {
        return Err(CliError::Usage(format!("range for {name} is empty")));
    }
    if *r.start() < min {
        return Err(CliError::Usage(format!("{name} must be at least {min}, got {}", r.start())));
    }
    if !opts.lift_caps && *r.end() > PARAMETER_CAP {
        return Err(CliError::Usage(format!(
            "{name} range ends at {}, above the cap {PARAMETER_CAP}; pass --lift-caps to scan further",
            r.end()
        )));
    }
    Ok(())
}

fn q(n: i128, d: i128) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Distinct eigenvalues of `T(H(d, q))`: `1 - q i / (d (q - 1))`.
pub fn hamming_spectrum(d: u64, qq: u64) -> Vec<Rational> {
    let (d, qq) = (d as i128, qq as i128);
    (0..=d).map(|i| q(d * (qq - 1) - qq * i, d * (qq - 1))).collect()
}

/// Distinct eigenvalues of `T(J(n, k))` with `d = min(k, n - k)`:
/// `((d - j)(n - d - j) - j) / (d (n - d))`.
pub fn johnson_spectrum(n: u64, k: u64) -> Vec<Rational> {
    let d = k.min(n - k) as i128;
    let n = n as i128;
    (0..=d).map(|j| q((d - j) * (n - d - j) - j, d * (n - d))).collect()
}

fn binomial(n: u64, k: u64) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn confirm(family: Family, verdict: &PeriodicityVerdict, opts: &SearchOptions) -> Option<bool> {
    if !opts.confirm || !verdict.periodic {
        return None;
    }
    let g = family.build_with(&opts.limits).ok()?;
    let u = is_periodic_unitary(&g, &opts.limits).ok()?;
    Some(u.periodic && u.period == verdict.period)
}

fn row(params: Vec<u64>, verdict: PeriodicityVerdict, unitary_confirmed: Option<bool>) -> SearchRow {
    SearchRow {
        params,
        periodic: verdict.periodic,
        period: verdict.period,
        unitary_confirmed,
        filter_passed: None,
        failure_witness: verdict.failure_witness,
    }
}

fn expected_within(known: &[[u64; 2]], a: &RangeInclusive<u64>, b: &RangeInclusive<u64>) -> Vec<Vec<u64>> {
    known.iter().filter(|p| a.contains(&p[0]) && b.contains(&p[1])).map(|p| p.to_vec()).collect()
}

pub fn search_hamming(d: RangeInclusive<u64>, qr: RangeInclusive<u64>, opts: &SearchOptions) -> Result<SearchReport, CliError> {
    check_range("d", &d, 1, opts)?;
    check_range("q", &qr, 2, opts)?;
    let points: Vec<(u64, u64)> = d.clone().flat_map(|d| qr.clone().map(move |q| (d, q))).collect();
    let rows = points
        .into_par_iter()
        .map(|(d, q)| {
            let n = (q as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
            let edges = n.saturating_mul(d as u128 * (q as u128 - 1)) / 2;
            let extra = minus_one_from_cycles(n, edges, q == 2);
            let verdict = spectral_verdict_from_eigenvalues(&hamming_spectrum(d, q), extra);
            let fam = Family::Hamming { d: d as usize, q: q as usize };
            let c = confirm(fam, &verdict, opts);
            row(vec![d, q], verdict, c)
        })
        .collect();
    Ok(SearchReport {
        family: SearchFamily::Hamming,
        parameter_names: vec!["d", "q"],
        expected: expected_within(&HAMMING_PERIODIC, &d, &qr),
        ranges: vec![("d", d), ("q", qr)],
        rows,
    })
}

/// `J(n, k)` and `J(n, n - k)` are the same graph, so each point is reported
/// once as `(n, min(k, n - k))`; points with `k >= n` are not graphs here.
pub fn search_johnson(nr: RangeInclusive<u64>, kr: RangeInclusive<u64>, opts: &SearchOptions) -> Result<SearchReport, CliError> {
    check_range("n", &nr, 2, opts)?;
    check_range("k", &kr, 1, opts)?;
    let points: BTreeSet<(u64, u64)> = nr
        .clone()
        .flat_map(|n| kr.clone().filter(move |&k| k < n).map(move |k| (n, k.min(n - k))))
        .collect();
    let rows = points
        .into_par_iter()
        .map(|(n, k)| {
            let v = binomial(n, k);
            let edges = v * (k as u128) * ((n - k) as u128) / 2;
            let extra = minus_one_from_cycles(v, edges, (n, k) == (2, 1));
            let verdict = spectral_verdict_from_eigenvalues(&johnson_spectrum(n, k), extra);
            let fam = Family::Johnson { n: n as usize, k: k as usize };
            let c = confirm(fam, &verdict, opts);
            row(vec![n, k], verdict, c)
        })
        .collect();
    let expected = JOHNSON_PERIODIC
        .iter()
        .filter(|p| nr.contains(&p[0]) && (kr.contains(&p[1]) || kr.contains(&(p[0] - p[1]))))
        .map(|p| p.to_vec())
        .collect();
    Ok(SearchReport {
        family: SearchFamily::Johnson,
        parameter_names: vec!["n", "k"],
        ranges: vec![("n", nr), ("k", kr)],
        rows,
        expected,
    })
}

/// Known periodic strongly regular parameters with valency in `kr`:
/// `(5,2,0,1)`, `(2k,k,0,k)` and `(3λ,2λ,λ,2λ)` for `λ >= 2`.
pub fn srg_expected(kr: &RangeInclusive<u64>) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    if kr.contains(&2) {
        out.push(vec![5, 2, 0, 1]);
    }
    for k in kr.clone().filter(|&k| k >= 2) {
        out.push(vec![2 * k, k, 0, k]);
        if k % 2 == 0 && k >= 4 {
            let l = k / 2;
            out.push(vec![3 * l, k, l, k]);
        }
    }
    out.sort();
    out
}

pub fn search_srg(kr: RangeInclusive<u64>, opts: &SearchOptions) -> Result<SearchReport, CliError> {
    check_range("k", &kr, 2, opts)?;
    let mut rows: Vec<SearchRow> = evaluate_srgs(*kr.end())
        .into_iter()
        .filter(|e| kr.contains(&e.params.k))
        .map(|e| {
            let SrgParams { n, k, lambda, mu } = e.params;
            SearchRow {
                params: vec![n, k, lambda, mu],
                periodic: e.verdict.periodic,
                period: e.verdict.period,
                unitary_confirmed: None,
                filter_passed: Some(e.filter.passed),
                failure_witness: e.verdict.failure_witness,
            }
        })
        .collect();
    rows.sort_by(|a, b| a.params.cmp(&b.params));
    Ok(SearchReport {
        family: SearchFamily::Srg,
        parameter_names: vec!["n", "k", "lambda", "mu"],
        expected: srg_expected(&kr),
        ranges: vec![("k", kr)],
        rows,
    })
}
