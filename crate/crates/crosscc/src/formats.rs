//! Ideal files and JSON certificates.
//!
//! An ideal file is plain text:
//!
//! ```text
//! # comments run to the end of the line
//! vars: x, y, z
//! x^2 - y
//! g2: y^2 - z*x
//! ```
//!
//! The `vars:` header fixes the ring and its variable order. Each further
//! line is one generator, optionally prefixed with `label:`.

use std::fmt::Write as _;

use crosscc_core::certify::Certificate;
use crosscc_core::exactnum::{format_decimal, format_exact};
use crosscc_core::multipoly::Ring;
use crosscc_core::{MPoly, RationalInterval, VarTable};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("missing `vars:` header")]
    MissingHeader,
}

#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: Ring,
    pub gens: Vec<(Option<String>, MPoly)>,
}

impl IdealFile {
    pub fn polys(&self) -> Vec<MPoly> {
        self.gens.iter().map(|(_, p)| p.clone()).collect()
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn is_label(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') && cs.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.' || c == '-')
}

pub fn parse_ideal(src: &str) -> Result<IdealFile, FormatError> {
    let mut ring: Option<Ring> = None;
    let mut gens = Vec::new();
    for (k, raw) in src.lines().enumerate() {
        let line_no = k + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| FormatError::Line { line: line_no, msg };
        let Some(r) = &ring else {
            let Some(rest) = line.strip_prefix("vars:") else {
                return Err(err("expected `vars:` header".into()));
            };
            let names: Vec<&str> = rest.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            ring = Some(VarTable::new(&names).map_err(|e| err(e.to_string()))?);
            continue;
        };
        let (label, body) = match line.split_once(':') {
            Some((l, b)) if is_label(l.trim()) => (Some(l.trim().to_string()), b.trim()),
            Some((l, _)) => return Err(err(format!("invalid label {l:?}"))),
            None => (None, line),
        };
        let p = MPoly::parse(r, body).map_err(|e| err(e.to_string()))?;
        gens.push((label, p));
    }
    let ring = ring.ok_or(FormatError::MissingHeader)?;
    Ok(IdealFile { ring, gens })
}

pub fn write_ideal(ring: &Ring, gens: &[(Option<String>, MPoly)], comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for l in c.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
    let _ = writeln!(out, "vars: {}", ring.names().join(", "));
    for (label, p) in gens {
        match label {
            Some(l) => {
                let _ = writeln!(out, "{l}: {p}");
            }
            None => {
                let _ = writeln!(out, "{p}");
            }
        }
    }
    out
}

/// Digits after the decimal point in the decimal renderings.
pub const DECIMAL_DIGITS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnclosureJson {
    pub label: String,
    pub lo: String,
    pub hi: String,
    pub lo_decimal: String,
    pub hi_decimal: String,
}

impl EnclosureJson {
    pub fn new(label: &str, iv: &RationalInterval) -> Self {
        EnclosureJson {
            label: label.to_string(),
            lo: format_exact(iv.lo()),
            hi: format_exact(iv.hi()),
            lo_decimal: format_decimal(iv.lo(), DECIMAL_DIGITS),
            hi_decimal: format_decimal(iv.hi(), DECIMAL_DIGITS),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub claim: String,
    pub status: String,
    pub sign: Option<i8>,
    pub enclosures: Vec<EnclosureJson>,
    pub eps_used: Option<String>,
    pub notes: Vec<String>,
    pub elapsed_ms: Option<u64>,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            claim: c.claim.clone(),
            status: c.status.as_str().to_string(),
            sign: c.sign,
            enclosures: c.enclosures.iter().map(|(l, iv)| EnclosureJson::new(l, iv)).collect(),
            eps_used: c.eps_used.as_ref().map(format_exact),
            notes: c.notes.clone(),
            elapsed_ms: c.elapsed_ms,
        }
    }
}
