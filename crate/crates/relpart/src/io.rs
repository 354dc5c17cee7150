//! Text formats: facet files for (relative) complexes, certificates binding
//! a partitioning scheme or shelling order to a target, and DOT export of
//! face posets.
//!
//! A facet file holds one facet per line, vertices as whitespace-separated
//! tokens; `#` starts a comment, a line of `---` separates the total facets
//! from generators of the relative part, and a lone `.` is the empty face.
//! A line carrying a single token is split into one vertex per character —
//! the style facet tables are usually typeset in (`BCDE`) — and a leading
//! `compact` directive extends that splitting to every token. Certificates
//! always use one token per vertex.

use sha2::{Digest, Sha256};
use std::collections::BTreeSet;
use thiserror::Error;

use crate::complex::Complex;
use crate::face::Face;
use crate::label::Label;
use crate::relative::RelComplex;
use crate::scheme::{Interval, PartitionScheme, ShellingOrder};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("relative part is not a subcomplex of the total complex: {0}")]
    RelativeNotSubcomplex(String),
    #[error("certificate line {line}: {reason}")]
    Schema { line: usize, reason: String },
    #[error("certificate does not target this complex (hash mismatch)")]
    HashMismatch,
}

fn parse_err(line: usize, reason: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        reason: reason.into(),
    }
}

fn schema_err(line: usize, reason: impl Into<String>) -> IoError {
    IoError::Schema {
        line,
        reason: reason.into(),
    }
}

/// Tokens that can never be vertex labels in a facet file.
const RESERVED: &[&str] = &["---", ".", ";"];

fn face_from_tokens(tokens: &[&str], char_split: bool, line: usize) -> Result<Face, IoError> {
    if tokens == ["."] {
        return Ok(Face::empty());
    }
    let mut vertices = Vec::new();
    for t in tokens {
        if RESERVED.contains(t) {
            return Err(parse_err(line, format!("reserved token {t:?} in a facet")));
        }
        if char_split {
            vertices.extend(t.chars().map(|c| Label::atom(&c.to_string())));
        } else {
            vertices.push(Label::atom(t));
        }
    }
    Ok(Face::new(vertices))
}

/// Parse facet-file text into a relative complex. Without a `---` separator
/// the relative part is void; text with no facet lines at all parses as the
/// void complex.
pub fn parse_facet_file(text: &str) -> Result<RelComplex, IoError> {
    let mut compact = false;
    let mut seen_any = false;
    let mut past_separator = false;
    let mut total: Vec<Face> = Vec::new();
    let mut relative: Vec<Face> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens == ["compact"] && !seen_any {
            compact = true;
            seen_any = true;
            continue;
        }
        seen_any = true;
        if tokens == ["---"] {
            if past_separator {
                return Err(parse_err(line_no, "second `---` separator"));
            }
            past_separator = true;
            continue;
        }
        let face = face_from_tokens(&tokens, compact || tokens.len() == 1, line_no)?;
        if past_separator {
            relative.push(face);
        } else {
            total.push(face);
        }
    }

    let total = Complex::closure(total);
    let relative = Complex::closure(relative);
    RelComplex::new(total, relative).map_err(|e| IoError::RelativeNotSubcomplex(e.to_string()))
}

/// Print a relative complex as facet-file text; inverse of
/// [`parse_facet_file`] (labels come back as atoms spelled the same way).
pub fn print_facet_file(rc: &RelComplex) -> String {
    let mut out = String::new();
    for f in rc.total().facets() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    if !rc.relative().is_void() {
        out.push_str("---\n");
        for f in rc.relative().facets() {
            out.push_str(&f.to_string());
            out.push('\n');
        }
    }
    out
}

/// Canonical text for hashing: rendered vertex tokens sorted within each
/// line, lines sorted, so the digest is stable across reparses (label
/// variants that render the same hash the same).
fn canonical_text(rc: &RelComplex) -> String {
    let canonical_lines = |c: &Complex| -> Vec<String> {
        let mut lines: Vec<String> = c
            .facets()
            .iter()
            .map(|f| {
                let mut toks: Vec<String> = f.vertices().iter().map(|v| v.to_string()).collect();
                toks.sort();
                if toks.is_empty() {
                    ".".to_string()
                } else {
                    toks.join(" ")
                }
            })
            .collect();
        lines.sort();
        lines
    };
    let mut out = canonical_lines(rc.total()).join("\n");
    out.push_str("\n---\n");
    out.push_str(&canonical_lines(rc.relative()).join("\n"));
    out.push('\n');
    out
}

/// Hex digest binding a certificate to its target complex.
pub fn target_hash(rc: &RelComplex) -> String {
    let mut hasher = Sha256::new();
    hasher.update(canonical_text(rc).as_bytes());
    let digest = hasher.finalize();
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertPayload {
    Partitioning(PartitionScheme),
    Shelling(ShellingOrder),
}

/// A scheme or shelling bound to the complex it talks about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub target_hash: String,
    pub payload: CertPayload,
}

impl Certificate {
    pub fn partitioning(target: &RelComplex, scheme: PartitionScheme) -> Certificate {
        Certificate {
            target_hash: target_hash(target),
            payload: CertPayload::Partitioning(scheme),
        }
    }

    pub fn shelling(target: &RelComplex, order: ShellingOrder) -> Certificate {
        Certificate {
            target_hash: target_hash(target),
            payload: CertPayload::Shelling(order),
        }
    }

    /// Err(HashMismatch) unless the certificate was written for `rc`.
    pub fn check_target(&self, rc: &RelComplex) -> Result<(), IoError> {
        if self.target_hash == target_hash(rc) {
            Ok(())
        } else {
            Err(IoError::HashMismatch)
        }
    }
}

const CERT_HEADER: &str = "relpart-certificate v1";

/// Serialize a certificate; byte-stable (read ∘ write is the identity and so
/// is write ∘ read).
pub fn write_certificate(cert: &Certificate) -> String {
    let mut out = String::new();
    out.push_str(CERT_HEADER);
    out.push('\n');
    match &cert.payload {
        CertPayload::Partitioning(scheme) => {
            out.push_str("kind partitioning\n");
            out.push_str(&format!("target sha256:{}\n---\n", cert.target_hash));
            for iv in &scheme.intervals {
                out.push_str(&format!("{} ; {}\n", iv.min, iv.max));
            }
        }
        CertPayload::Shelling(order) => {
            out.push_str("kind shelling\n");
            out.push_str(&format!("target sha256:{}\n---\n", cert.target_hash));
            for f in &order.order {
                out.push_str(&format!("{f}\n"));
            }
        }
    }
    out
}

pub fn read_certificate(text: &str) -> Result<Certificate, IoError> {
    let mut lines = text.lines().enumerate();
    let mut next = |expect: &str| -> Result<(usize, String), IoError> {
        lines
            .next()
            .map(|(i, l)| (i + 1, l.to_string()))
            .ok_or_else(|| schema_err(0, format!("missing {expect}")))
    };

    let (n, header) = next("header")?;
    if header != CERT_HEADER {
        return Err(schema_err(n, format!("expected {CERT_HEADER:?}")));
    }
    let (n, kind_line) = next("kind line")?;
    let kind = kind_line
        .strip_prefix("kind ")
        .ok_or_else(|| schema_err(n, "expected `kind partitioning` or `kind shelling`"))?
        .to_string();
    let (n, target_line) = next("target line")?;
    let hash = target_line
        .strip_prefix("target sha256:")
        .ok_or_else(|| schema_err(n, "expected `target sha256:<hex>`"))?;
    if hash.len() != 64 || !hash.chars().all(|c| c.is_ascii_hexdigit()) {
        return Err(schema_err(n, "malformed digest"));
    }
    let target_hash = hash.to_string();
    let (n, sep) = next("`---` separator")?;
    if sep != "---" {
        return Err(schema_err(n, "expected `---`"));
    }

    let payload = match kind.as_str() {
        "partitioning" => {
            let mut intervals = Vec::new();
            for (i, line) in lines {
                let line_no = i + 1;
                let tokens: Vec<&str> = line.split_whitespace().collect();
                let split = tokens
                    .iter()
                    .position(|t| *t == ";")
                    .ok_or_else(|| schema_err(line_no, "interval line needs ` ; `"))?;
                let min = face_from_tokens(&tokens[..split], false, line_no)
                    .map_err(|_| schema_err(line_no, "bad interval minimum"))?;
                let max = face_from_tokens(&tokens[split + 1..], false, line_no)
                    .map_err(|_| schema_err(line_no, "bad interval maximum"))?;
                intervals.push(Interval::new(min, max));
            }
            CertPayload::Partitioning(PartitionScheme::new(intervals))
        }
        "shelling" => {
            let mut order = Vec::new();
            for (i, line) in lines {
                let line_no = i + 1;
                let tokens: Vec<&str> = line.split_whitespace().collect();
                let face = face_from_tokens(&tokens, false, line_no)
                    .map_err(|_| schema_err(line_no, "bad facet line"))?;
                order.push(face);
            }
            CertPayload::Shelling(ShellingOrder::new(order))
        }
        other => return Err(schema_err(2, format!("unknown kind {other:?}"))),
    };

    Ok(Certificate {
        target_hash,
        payload,
    })
}

const DOT_PALETTE: &[&str] = &[
    "#a6cee3", "#b2df8a", "#fb9a99", "#fdbf6f", "#cab2d6", "#ffff99", "#1f78b4", "#33a02c",
    "#e31a1c", "#ff7f00", "#6a3d9a", "#b15928",
];

/// Face poset of a relative complex in DOT: one node per face, one arc per
/// covering relation, and — when a scheme is supplied — one fill color per
/// interval.
pub fn emit_hasse_dot(rc: &RelComplex, scheme: Option<&PartitionScheme>) -> String {
    let faces: Vec<&Face> = rc.faces().iter().collect();
    let color_of = |f: &Face| -> Option<&str> {
        let s = scheme?;
        s.intervals
            .iter()
            .position(|iv| iv.contains(f))
            .map(|i| DOT_PALETTE[i % DOT_PALETTE.len()])
    };

    let mut out = String::new();
    out.push_str("digraph hasse {\n  rankdir=BT;\n  node [shape=box, fontname=\"monospace\"];\n");
    for (i, f) in faces.iter().enumerate() {
        let label = if f.is_empty() {
            "∅".to_string()
        } else {
            f.to_string()
        };
        match color_of(f) {
            Some(c) => out.push_str(&format!(
                "  n{i} [label=\"{label}\", style=filled, fillcolor=\"{c}\"];\n"
            )),
            None => out.push_str(&format!("  n{i} [label=\"{label}\"];\n")),
        }
    }

    // Group nodes of one dimension on one rank.
    let dims: BTreeSet<i64> = faces.iter().map(|f| f.dim()).collect();
    for d in dims {
        let ids: Vec<String> = faces
            .iter()
            .enumerate()
            .filter(|(_, f)| f.dim() == d)
            .map(|(i, _)| format!("n{i}"))
            .collect();
        out.push_str(&format!("  {{ rank=same; {}; }}\n", ids.join("; ")));
    }

    for (i, f) in faces.iter().enumerate() {
        for (j, g) in faces.iter().enumerate() {
            if g.dim() == f.dim() + 1 && f.is_subset_of(g) {
                out.push_str(&format!("  n{i} -> n{j};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}
