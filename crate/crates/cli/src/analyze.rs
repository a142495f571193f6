//! The single-graph report.

use std::path::Path;
use std::time::Instant;

use grover_core::graphs::{diameter, parse_edge_list, transition_matrix, Family, Graph, Limits};
use grover_core::periodicity::{
    general_coefficient_filter, is_periodic_spectral, is_periodic_unitary, rational_spectrum_check,
};
use grover_core::spectra::minimal_polynomial;
use serde_json::{json, Value};

use crate::report::{self, Format};
use crate::CliError;

/// Where the graph comes from.
#[derive(Clone, Debug)]
pub enum Source {
    EdgeList(String),
    Family(Family),
}

impl Source {
    pub fn descriptor(&self) -> String {
        match self {
            Source::EdgeList(path) => format!("edges:{path}"),
            Source::Family(f) => f.to_string(),
        }
    }

    pub fn load(&self, limits: &Limits) -> Result<Graph, CliError> {
        let g = match self {
            Source::EdgeList(path) => {
                let text = std::fs::read_to_string(Path::new(path))
                    .map_err(|source| CliError::Io { path: path.clone(), source })?;
                parse_edge_list(&text)?
            }
            Source::Family(f) => f.build_with(limits)?,
        };
        limits.check(&g)?;
        Ok(g)
    }
}

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub limits: Limits,
    /// Include per-stage wall times; the report is then no longer reproducible.
    pub timings: bool,
}

struct Stopwatch {
    enabled: bool,
    laps: serde_json::Map<String, Value>,
}

impl Stopwatch {
    fn time<R>(&mut self, stage: &str, f: impl FnOnce() -> R) -> R {
        let start = Instant::now();
        let r = f();
        if self.enabled {
            self.laps.insert(stage.to_string(), json!(start.elapsed().as_secs_f64()));
        }
        r
    }
}

pub fn analyze(source: &Source, opts: &AnalyzeOptions) -> Result<Value, CliError> {
    let mut sw = Stopwatch { enabled: opts.timings, laps: Default::default() };
    let g = sw.time("load", || source.load(&opts.limits))?;

    let mp = sw.time("minimal_polynomial", || minimal_polynomial(&transition_matrix(&g)));
    let spectrum_report = sw.time("rational_spectrum", || rational_spectrum_check(&g));
    let filter = sw.time("coefficient_filter", || general_coefficient_filter(&g));
    let spectral = sw.time("spectral_route", || is_periodic_spectral(&g));
    let unitary = sw.time("unitary_route", || is_periodic_unitary(&g, &opts.limits))?;

    let check = |c: Option<bool>| match c {
        None => json!("not applicable"),
        Some(true) => json!("passed"),
        Some(false) => json!("failed"),
    };
    let filter_witness = filter.failing_j.map(|j| {
        let n = filter.rho.len() - 1;
        format!(
            "2^{j} * rho_{} = {} is not an integer",
            n - j,
            grover_core::scalar::render_rational(&(&filter.rho[n - j] * grover_core::Rational::from_integer(grover_core::Integer::from(1) << j)))
        )
    });

    let mut v = json!({
        "graph": source.descriptor(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
        "arcs": g.arc_count(),
        "diameter": diameter(&g),
        "betti_number": g.betti_number(),
        "bipartite": g.is_bipartite(),
        "transition_minimal_polynomial": {
            "primitive": report::int_poly(&mp.primitive),
            "leading_coefficient": mp.leading_coefficient.to_string(),
            "display": mp.monic.display_with("x"),
            "degree": mp.degree(),
            "distinct_eigenvalues": mp.distinct_eigenvalue_count,
        },
        "rational_eigenvalues": {
            "complete": spectrum_report.spectrum.complete,
            "values": spectrum_report.spectrum.roots.iter()
                .map(|(r, m)| json!({"value": report::rational(r), "multiplicity": m}))
                .collect::<Vec<_>>(),
        },
        "verdicts": {
            "unitary": report::verdict(&unitary),
            "spectral": report::verdict(&spectral),
            "periodic_agree": unitary.periodic == spectral.periodic,
            "period_agree": unitary.period == spectral.period,
        },
        "rational_spectrum_bounds": {
            "applicable": spectrum_report.applicable,
            "eigenvalues_in_allowed_set": check(spectrum_report.eigenvalues_allowed),
            "at_most_five_distinct": check(spectrum_report.at_most_five_distinct),
            "diameter_below_five": check(spectrum_report.diameter_below_five),
        },
        "coefficient_filter": {
            "passed": filter.passed,
            "failing_j": filter.failing_j,
            "witness": filter_witness,
            "rho": filter.rho.iter().map(report::rational).collect::<Vec<_>>(),
        },
    });
    if opts.timings {
        v["timings_seconds"] = Value::Object(sw.laps);
    }
    Ok(v)
}

pub fn render(report_value: &Value, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(report::to_json(report_value)),
        Format::Csv => {
            let rows: Vec<Vec<String>> = report::flatten(report_value).into_iter().map(|(k, v)| vec![k, v]).collect();
            report::to_csv(&["field".to_string(), "value".to_string()], &rows)
        }
    }
}
