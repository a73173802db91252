//! Structured run reports with text, JSON, and CSV rendering.
//!
//! A [`RunReport`] captures one command invocation: the command name, its
//! parameters, a list of named results (each with optional reference
//! value and relative error), an optional convergence ladder, and the
//! wall time. JSON and CSV renderings zero the wall time so that
//! identical runs produce identical bytes; the text rendering keeps it.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// A numeric result: real, or complex as `{"re": …, "im": …}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueRepr {
    Real(f64),
    Complex { re: f64, im: f64 },
}

impl ValueRepr {
    pub fn complex(re: f64, im: f64) -> ValueRepr {
        ValueRepr::Complex { re, im }
    }

    fn parts(&self) -> (f64, Option<f64>) {
        match *self {
            ValueRepr::Real(re) => (re, None),
            ValueRepr::Complex { re, im } => (re, Some(im)),
        }
    }

    fn render(&self) -> String {
        match *self {
            ValueRepr::Real(re) => format!("{re:.9e}"),
            ValueRepr::Complex { re, im } => {
                if im >= 0.0 {
                    format!("{re:.9e}+{im:.3e}i")
                } else {
                    format!("{re:.9e}-{:.3e}i", -im)
                }
            }
        }
    }
}

/// One named result row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ResultEntry {
    pub name: String,
    pub value: ValueRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<ValueRepr>,
    /// Error relative to the expected magnitude; absolute error when the
    /// expectation is zero. Present only with `expected`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rel_error: Option<f64>,
    pub tolerance: f64,
    pub pass: bool,
}

impl ResultEntry {
    /// A bound-style row: no reference value, pass as judged by the
    /// caller (e.g. a residual upper bound or a negative control).
    pub fn bound(name: &str, value: f64, tolerance: f64, pass: bool) -> ResultEntry {
        ResultEntry {
            name: name.to_string(),
            value: ValueRepr::Real(value),
            expected: None,
            rel_error: None,
            tolerance,
            pass,
        }
    }

    /// A comparison row against a reference value: computes the relative
    /// error (absolute when the reference is zero) and passes iff it is
    /// within tolerance.
    pub fn compared(
        name: &str,
        value: ValueRepr,
        expected: ValueRepr,
        tolerance: f64,
    ) -> ResultEntry {
        let (vr, vi) = value.parts();
        let (er, ei) = expected.parts();
        let dist = ((vr - er).powi(2) + (vi.unwrap_or(0.0) - ei.unwrap_or(0.0)).powi(2)).sqrt();
        let scale = (er.powi(2) + ei.unwrap_or(0.0).powi(2)).sqrt();
        let rel = if scale > 0.0 { dist / scale } else { dist };
        ResultEntry {
            name: name.to_string(),
            value,
            expected: Some(expected),
            rel_error: Some(rel),
            tolerance,
            pass: rel <= tolerance,
        }
    }
}

/// One rung of a convergence ladder.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct ConvergenceEntry {
    #[serde(rename = "N")]
    pub n: usize,
    pub value: f64,
}

/// A complete command invocation record.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub parameters: BTreeMap<String, String>,
    pub results: Vec<ResultEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub convergence: Vec<ConvergenceEntry>,
    pub wall_time_seconds: f64,
}

/// Output format of a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl RunReport {
    pub fn new(command: &str) -> RunReport {
        RunReport {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            results: Vec::new(),
            convergence: Vec::new(),
            wall_time_seconds: 0.0,
        }
    }

    pub fn set_parameter(&mut self, key: &str, value: impl ToString) {
        self.parameters.insert(key.to_string(), value.to_string());
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    /// Render in the requested format. Machine formats (JSON, CSV) zero
    /// the wall time so identical runs produce identical bytes.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => {
                let mut clone = self.clone();
                clone.wall_time_seconds = 0.0;
                let mut s =
                    serde_json::to_string_pretty(&clone).expect("report serialization cannot fail");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut clone = self.clone();
                clone.wall_time_seconds = 0.0;
                clone.render_csv()
            }
        }
    }

    fn render_text(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        writeln!(s, "command: {}", self.command).unwrap();
        if !self.parameters.is_empty() {
            writeln!(s, "parameters:").unwrap();
            for (k, v) in &self.parameters {
                writeln!(s, "  {k} = {v}").unwrap();
            }
        }
        writeln!(s, "results:").unwrap();
        for r in &self.results {
            let expected = r
                .expected
                .map(|e| format!("  expected {}", e.render()))
                .unwrap_or_default();
            let rel = r
                .rel_error
                .map(|e| format!("  rel {e:.3e}"))
                .unwrap_or_default();
            writeln!(
                s,
                "  {:<44} {:>24}{}{}  tol {:.1e}  {}",
                r.name,
                r.value.render(),
                expected,
                rel,
                r.tolerance,
                if r.pass { "pass" } else { "FAIL" }
            )
            .unwrap();
        }
        if !self.convergence.is_empty() {
            writeln!(s, "convergence:").unwrap();
            for c in &self.convergence {
                writeln!(s, "  N = {:<4} value = {:.12e}", c.n, c.value).unwrap();
            }
        }
        writeln!(s, "wall time: {:.3} s", self.wall_time_seconds).unwrap();
        s
    }

    fn render_csv(&self) -> String {
        use std::fmt::Write;
        let mut s = String::new();
        writeln!(
            s,
            "name,value_re,value_im,expected_re,expected_im,rel_error,tolerance,pass"
        )
        .unwrap();
        for r in &self.results {
            let (vr, vi) = r.value.parts();
            let (er, ei) = match r.expected {
                Some(e) => {
                    let (a, b) = e.parts();
                    (Some(a), Some(b.unwrap_or(0.0)))
                }
                None => (None, None),
            };
            let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
            writeln!(
                s,
                "{},{},{},{},{},{},{},{}",
                r.name,
                vr,
                vi.unwrap_or(0.0),
                opt(er),
                opt(ei),
                opt(r.rel_error),
                r.tolerance,
                r.pass
            )
            .unwrap();
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> RunReport {
        let mut r = RunReport::new("metric");
        r.set_parameter("nodes", 64);
        r.set_parameter("lambda", 1.0);
        r.results.push(ResultEntry::compared(
            "gram-00",
            ValueRepr::complex(std::f64::consts::PI - 1e-4, 1e-12),
            ValueRepr::Real(std::f64::consts::PI),
            1e-3,
        ));
        r.results
            .push(ResultEntry::bound("residual", 3e-7, 1e-5, true));
        r.convergence.push(ConvergenceEntry { n: 16, value: 3.1 });
        r.convergence.push(ConvergenceEntry { n: 32, value: 3.15 });
        r.wall_time_seconds = 1.25;
        r
    }

    #[test]
    fn json_round_trips_losslessly() {
        let r = sample();
        let json = r.render(Format::Json);
        let back: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.command, r.command);
        assert_eq!(back.parameters, r.parameters);
        assert_eq!(back.results.len(), r.results.len());
        for (a, b) in back.results.iter().zip(&r.results) {
            assert_eq!(a.name, b.name);
            assert_eq!(a.value, b.value);
            assert_eq!(a.expected, b.expected);
            assert_eq!(a.rel_error, b.rel_error);
            assert_eq!(a.pass, b.pass);
        }
        assert_eq!(back.convergence.len(), 2);
        assert_eq!(back.convergence[0].n, 16);
        // Machine formats zero the wall time.
        assert_eq!(back.wall_time_seconds, 0.0);
    }

    #[test]
    fn complex_values_serialize_as_re_im_objects() {
        let json = serde_json::to_string(&ValueRepr::complex(1.5, -2.0)).unwrap();
        assert_eq!(json, r#"{"re":1.5,"im":-2.0}"#);
        let json = serde_json::to_string(&ValueRepr::Real(2.5)).unwrap();
        assert_eq!(json, "2.5");
        let back: ValueRepr = serde_json::from_str(r#"{"re":1.0,"im":0.5}"#).unwrap();
        assert_eq!(back, ValueRepr::complex(1.0, 0.5));
    }

    #[test]
    fn convergence_entries_use_the_n_field() {
        let json = serde_json::to_string(&ConvergenceEntry { n: 32, value: 3.0 }).unwrap();
        assert_eq!(json, r#"{"N":32,"value":3.0}"#);
    }

    #[test]
    fn comparison_rows_handle_zero_expectations() {
        let r = ResultEntry::compared("zero", ValueRepr::Real(1e-9), ValueRepr::Real(0.0), 1e-6);
        assert!(r.pass);
        assert!((r.rel_error.unwrap() - 1e-9).abs() < 1e-24);
    }

    #[test]
    fn csv_has_one_row_per_result_plus_header() {
        let r = sample();
        let csv = r.render(Format::Csv);
        assert_eq!(csv.lines().count(), 1 + r.results.len());
        assert!(csv.starts_with("name,"));
    }

    #[test]
    fn machine_renders_are_reproducible() {
        let mut a = sample();
        let mut b = sample();
        a.wall_time_seconds = 0.7;
        b.wall_time_seconds = 99.9;
        assert_eq!(a.render(Format::Json), b.render(Format::Json));
        assert_eq!(a.render(Format::Csv), b.render(Format::Csv));
        assert_ne!(a.render(Format::Text), b.render(Format::Text));
    }
}
