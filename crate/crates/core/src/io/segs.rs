//! The `.segs` text format: one segment per line as `x1 y1 x2 y2`, with `#`
//! starting a comment.

use sha2::{Digest, Sha256};

use super::IoError;
use crate::geometry::{GeometryError, Segment, SegmentSet};

pub fn parse_segments(text: &str) -> Result<SegmentSet, IoError> {
    let mut segs = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let mut vals = [0i64; 4];
        let mut count = 0;
        let mut offset = 0;
        for tok in body.split_whitespace() {
            let column = raw[offset..].find(tok).map_or(offset, |p| p + offset) + 1;
            offset = column - 1 + tok.len();
            if count == 4 {
                return Err(IoError::Parse { line, column, message: "expected exactly four integers".into() });
            }
            vals[count] = tok.parse().map_err(|_| IoError::Parse {
                line,
                column,
                message: format!("`{tok}` is not an integer"),
            })?;
            count += 1;
        }
        if count < 4 {
            return Err(IoError::Parse { line, column: raw.len() + 1, message: "expected exactly four integers".into() });
        }
        let [x1, y1, x2, y2] = vals;
        match Segment::from_coords(x1, y1, x2, y2) {
            Ok(s) => segs.push(s),
            Err(GeometryError::NonAxisParallel(..)) => return Err(IoError::NonAxisParallel { line }),
            Err(GeometryError::ZeroLengthSegment(_)) => return Err(IoError::ZeroLength { line }),
            Err(e) => return Err(e.into()),
        }
    }
    Ok(SegmentSet::new(segs))
}

/// Canonical text: one normalized segment per line, in stored order.
pub fn format_segments(set: &SegmentSet) -> String {
    let mut out = String::new();
    for s in set.segments() {
        out.push_str(&s.to_string());
        out.push('\n');
    }
    out
}

/// SHA-256 of the canonical text, lowercase hex.
pub fn instance_hash(set: &SegmentSet) -> String {
    Sha256::digest(format_segments(set).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}
