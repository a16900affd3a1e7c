//! Report assembly and CSV/JSON rendering.

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// sha256 over the canonical JSON of whatever determines the output.
pub fn digest<T: Serialize>(input: &T) -> String {
    let canonical = serde_json::to_vec(input).expect("config serializes");
    hex::encode(Sha256::digest(&canonical))
}

pub struct Report {
    pub command: &'static str,
    pub digest: String,
    /// Set when a resource cap stopped the run; rows are then incomplete.
    pub partial: Option<String>,
    pub meta: Vec<(String, String)>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub payload: Value,
}

impl Report {
    pub fn new(command: &'static str, digest: String) -> Self {
        Report {
            command,
            digest,
            partial: None,
            meta: Vec::new(),
            header: Vec::new(),
            rows: Vec::new(),
            payload: Value::Null,
        }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = format!("# ellgcd {VERSION} config-sha256={}\n# command={}\n", self.digest, self.command);
        if let Some(err) = &self.partial {
            out.push_str(&format!("# partial=true error={err}\n"));
        }
        for (k, v) in &self.meta {
            out.push_str(&format!("# {k}={v}\n"));
        }
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.header).expect("in-memory write");
        for r in &self.rows {
            w.write_record(r).expect("in-memory write");
        }
        out.push_str(&String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields"));
        out
    }

    fn render_json(&self) -> String {
        let meta: serde_json::Map<String, Value> =
            self.meta.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
        let doc = json!({
            "tool": "ellgcd",
            "version": VERSION,
            "config_sha256": self.digest,
            "command": self.command,
            "partial": self.partial.is_some(),
            "error": self.partial,
            "meta": meta,
            "report": self.payload,
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("json value");
        s.push('\n');
        s
    }
}

/// Decimal with 12 significant digits.
pub fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (11 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}
