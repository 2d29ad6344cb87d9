//! Append-only interaction trace.
//!
//! One record per service-to-service interaction, written as a tab-separated
//! line: tick, step label (or `-`), source, target, correlation id, slice
//! scope (or `-`), free-text detail. Detail text never contains tabs or
//! newlines, so the format needs no escaping and is bit-stable across runs.

use std::fmt;

use crate::error::{Result, SimError};
use crate::fabric::domain::DomainId;

/// A service endpoint reference, rendered as `service@domain`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ServiceRef {
    pub service: String,
    pub domain: DomainId,
}

impl ServiceRef {
    pub fn new(service: impl Into<String>, domain: impl Into<DomainId>) -> Self {
        ServiceRef { service: service.into(), domain: domain.into() }
    }
}

impl fmt::Display for ServiceRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.service, self.domain)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraceRecord {
    pub tick: u64,
    /// Use-case step tag ("1", "2", "2'", ..., "10") when the interaction is
    /// one of the numbered steps; `None` for auxiliary hops.
    pub step: Option<String>,
    pub source: String,
    pub target: String,
    pub correlation: String,
    pub slice: Option<String>,
    pub detail: String,
}

fn sanitize(text: &str) -> String {
    text.replace(['\t', '\n', '\r'], " ")
}

impl TraceRecord {
    pub fn new(
        tick: u64,
        step: Option<&str>,
        source: impl Into<String>,
        target: impl Into<String>,
        correlation: impl Into<String>,
        slice: Option<&str>,
        detail: impl Into<String>,
    ) -> Self {
        TraceRecord {
            tick,
            step: step.map(|s| s.to_string()),
            source: sanitize(&source.into()),
            target: sanitize(&target.into()),
            correlation: correlation.into(),
            slice: slice.map(|s| s.to_string()),
            detail: sanitize(&detail.into()),
        }
    }

    pub fn to_line(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.tick,
            self.step.as_deref().unwrap_or("-"),
            self.source,
            self.target,
            self.correlation,
            self.slice.as_deref().unwrap_or("-"),
            self.detail,
        )
    }

    pub fn parse_line(line: &str, line_no: usize) -> Result<Self> {
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 7 {
            return Err(SimError::MalformedTrace {
                line: line_no,
                reason: format!("expected 7 tab-separated fields, got {}", fields.len()),
            });
        }
        let tick = fields[0].parse::<u64>().map_err(|_| SimError::MalformedTrace {
            line: line_no,
            reason: format!("bad tick `{}`", fields[0]),
        })?;
        let opt = |s: &str| if s == "-" { None } else { Some(s.to_string()) };
        Ok(TraceRecord {
            tick,
            step: opt(fields[1]),
            source: fields[2].to_string(),
            target: fields[3].to_string(),
            correlation: fields[4].to_string(),
            slice: opt(fields[5]),
            detail: fields[6].to_string(),
        })
    }

    /// Looks up a `key=value` pair inside the detail text.
    pub fn detail_field(&self, key: &str) -> Option<&str> {
        self.detail
            .split(' ')
            .find_map(|kv| kv.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
    }
}

#[derive(Debug, Default, Clone)]
pub struct TraceLog {
    records: Vec<TraceRecord>,
}

impl TraceLog {
    pub fn new() -> Self {
        TraceLog { records: Vec::new() }
    }

    pub fn push(&mut self, record: TraceRecord) {
        self.records.push(record);
    }

    pub fn records(&self) -> &[TraceRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            out.push_str(&r.to_line());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut log = TraceLog::new();
        for (idx, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            log.push(TraceRecord::parse_line(line, idx + 1)?);
        }
        Ok(log)
    }
}
