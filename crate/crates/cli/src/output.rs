//! Machine-readable output: JSON lines or TSV with a header row.

use borosmoll::{PropertyReport, Witness};
use serde::Serialize;

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Serialize)]
pub struct OutputRecord<'a, P> {
    pub schema_version: &'static str,
    pub command: &'a str,
    pub payload: P,
}

/// Collects the whole output before anything is written, so the stream is
/// emitted in one piece and in a fixed order.
pub struct Sink {
    format: Format,
    buf: String,
}

impl Sink {
    pub fn new(format: Format) -> Self {
        Sink {
            format,
            buf: String::new(),
        }
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn json<P: Serialize>(&mut self, command: &str, payload: P) {
        let rec = OutputRecord {
            schema_version: SCHEMA_VERSION,
            command,
            payload,
        };
        let line = serde_json::to_string(&rec).expect("output records always serialize");
        self.buf.push_str(&line);
        self.buf.push('\n');
    }

    pub fn tsv_row<S: AsRef<str>>(&mut self, cells: &[S]) {
        let cells: Vec<&str> = cells.iter().map(|c| c.as_ref()).collect();
        self.buf.push_str(&cells.join("\t"));
        self.buf.push('\n');
    }

    pub fn into_string(self) -> String {
        self.buf
    }
}

#[derive(Serialize)]
pub struct RowPayload {
    pub m: u32,
    pub form: &'static str,
    pub values: Vec<String>,
}

pub const ROW_HEADER: [&str; 4] = ["m", "form", "i", "value"];

impl RowPayload {
    pub fn tsv(&self, sink: &mut Sink) {
        for (i, v) in self.values.iter().enumerate() {
            sink.tsv_row(&[&self.m.to_string(), self.form, &i.to_string(), v]);
        }
    }
}

pub const REPORT_HEADER: [&str; 11] = [
    "kind",
    "property",
    "m_from",
    "m_to",
    "verdict",
    "witness_m",
    "witness_i",
    "relation",
    "lhs",
    "rhs",
    "notes",
];

pub fn report_tsv(sink: &mut Sink, kind: &str, r: &PropertyReport) {
    let (from, to) = r.m_range();
    let relation = |w: &Witness| {
        serde_json::to_value(w.relation)
            .ok()
            .and_then(|v| v.as_str().map(String::from))
    };
    let w = r.witness();
    sink.tsv_row(&[
        kind.to_string(),
        r.property().to_string(),
        from.to_string(),
        to.to_string(),
        r.verdict().to_string(),
        w.map(|w| w.m.to_string()).unwrap_or_default(),
        w.map(|w| w.i.to_string()).unwrap_or_default(),
        w.and_then(relation).unwrap_or_default(),
        w.map(|w| w.lhs.clone()).unwrap_or_default(),
        w.map(|w| w.rhs.clone()).unwrap_or_default(),
        r.notes().replace(['\t', '\n'], " "),
    ]);
}

#[derive(Serialize)]
pub struct MinSeqPayload {
    pub m: u32,
    pub c: Vec<String>,
    pub argmin: Vec<usize>,
    pub closed_form_min: String,
}

pub const MINSEQ_HEADER: [&str; 5] = ["m", "i", "c", "argmin", "closed_form_min"];

impl MinSeqPayload {
    pub fn tsv(&self, sink: &mut Sink) {
        let argmin = self
            .argmin
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        for (k, c) in self.c.iter().enumerate() {
            sink.tsv_row(&[
                &self.m.to_string(),
                &(k + 1).to_string(),
                c,
                &argmin,
                &self.closed_form_min,
            ]);
        }
    }
}

#[derive(Serialize)]
pub struct IntegralPayload {
    pub m: u32,
    pub a: String,
    pub numeric_integral: f64,
    pub closed_form: f64,
    pub abs_error: f64,
    pub rel_error: f64,
    pub tol: f64,
    pub pass: bool,
}

pub const INTEGRAL_HEADER: [&str; 8] = [
    "m",
    "a",
    "numeric_integral",
    "closed_form",
    "abs_error",
    "rel_error",
    "tol",
    "pass",
];

/// Same spelling as the JSON output.
fn float(x: f64) -> String {
    serde_json::to_string(&x).expect("finite floats serialize")
}

impl IntegralPayload {
    pub fn tsv(&self, sink: &mut Sink) {
        sink.tsv_row(&[
            self.m.to_string(),
            self.a.clone(),
            float(self.numeric_integral),
            float(self.closed_form),
            float(self.abs_error),
            float(self.rel_error),
            float(self.tol),
            self.pass.to_string(),
        ]);
    }
}
