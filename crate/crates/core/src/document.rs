//! Text formats for designs.
//!
//! The canonical document is JSON with a fixed field order (`v`, `k`,
//! `circular`, `blocks`, then the optional `name` and `provenance`), two-space
//! indentation, one block per line with points ascending, LF line endings and
//! a trailing newline. Emitting the same design twice gives identical bytes.

use std::fmt::Write as _;

use serde::Deserialize;

use crate::design::Design;
use crate::error::{Error, Result};
use crate::verify::introductions;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignDocument {
    pub design: Design,
    pub name: Option<String>,
    pub provenance: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    v: usize,
    k: usize,
    circular: bool,
    blocks: Vec<Vec<usize>>,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    provenance: Option<String>,
}

impl DesignDocument {
    pub fn new(design: Design) -> Self {
        DesignDocument { design, name: None, provenance: None }
    }

    pub fn named(design: Design, name: impl Into<String>, provenance: impl Into<String>) -> Self {
        DesignDocument { design, name: Some(name.into()), provenance: Some(provenance.into()) }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let raw: RawDocument =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let design = Design::new(raw.v, raw.k, raw.circular, raw.blocks)
            .map_err(|e| Error::Parse(e.to_string()))?;
        Ok(DesignDocument { design, name: raw.name, provenance: raw.provenance })
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> String {
        let d = &self.design;
        let mut s = String::new();
        let _ = writeln!(s, "{{");
        let _ = writeln!(s, "  \"v\": {},", d.v());
        let _ = writeln!(s, "  \"k\": {},", d.k());
        let _ = writeln!(s, "  \"circular\": {},", d.is_circular());
        let _ = writeln!(s, "  \"blocks\": [");
        for (i, blk) in d.blocks().iter().enumerate() {
            let pts: Vec<String> = blk.iter().map(ToString::to_string).collect();
            let sep = if i + 1 < d.b() { "," } else { "" };
            let _ = writeln!(s, "    [{}]{sep}", pts.join(", "));
        }
        let optional: Vec<(&str, &String)> = [("name", &self.name), ("provenance", &self.provenance)]
            .into_iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| (k, v)))
            .collect();
        let _ = writeln!(s, "  ]{}", if optional.is_empty() { "" } else { "," });
        for (i, (key, value)) in optional.iter().enumerate() {
            let sep = if i + 1 < optional.len() { "," } else { "" };
            let quoted = serde_json::to_string(value).expect("strings serialize");
            let _ = writeln!(s, "  \"{key}\": {quoted}{sep}");
        }
        s.push_str("}\n");
        s
    }
}

/// Blocks as columns, points ascending, introduced points starred.
pub fn render_table(d: &Design) -> String {
    let intro = introductions(d);
    let cells: Vec<Vec<String>> = d
        .blocks()
        .iter()
        .zip(&intro)
        .map(|(blk, new)| {
            blk.iter()
                .map(|p| if new.contains(p) { format!("{p}*") } else { p.to_string() })
                .collect()
        })
        .collect();
    let headers: Vec<String> = (1..=d.b()).map(|i| format!("B{i}")).collect();
    let widths: Vec<usize> = headers
        .iter()
        .zip(&cells)
        .map(|(h, col)| col.iter().map(String::len).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let line = |row: Vec<&str>| {
        row.iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(headers.iter().map(String::as_str).collect());
    out.push('\n');
    for r in 0..d.k() {
        out.push_str(&line(cells.iter().map(|c| c[r].as_str()).collect()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Design {
        Design::new(6, 4, true, vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5], vec![4, 5, 0, 1]]).unwrap()
    }

    #[test]
    fn canonical_json() {
        let doc = DesignDocument::named(sample(), "cdccd-6-4-3", "double");
        let expected = "{\n  \"v\": 6,\n  \"k\": 4,\n  \"circular\": true,\n  \"blocks\": [\n    \
                        [0, 1, 2, 3],\n    [2, 3, 4, 5],\n    [0, 1, 4, 5]\n  ],\n  \
                        \"name\": \"cdccd-6-4-3\",\n  \"provenance\": \"double\"\n}\n";
        assert_eq!(doc.to_json(), expected);
        assert_eq!(DesignDocument::parse(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn json_without_optional_fields() {
        let doc = DesignDocument::new(sample());
        assert!(doc.to_json().ends_with("[0, 1, 4, 5]\n  ]\n}\n"));
        assert_eq!(DesignDocument::parse(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(DesignDocument::parse("{"), Err(Error::Parse(_))));
        let bad_block = r#"{"v": 5, "k": 3, "circular": false, "blocks": [[0, 1, 7]]}"#;
        assert!(matches!(DesignDocument::parse(bad_block), Err(Error::Parse(_))));
        let extra = r#"{"v": 5, "k": 3, "circular": false, "blocks": [[0, 1, 2]], "t": 2}"#;
        assert!(matches!(DesignDocument::parse(extra), Err(Error::Parse(_))));
    }

    #[test]
    fn table_stars_introductions() {
        let t = render_table(&sample());
        assert_eq!(t, "B1  B2  B3\n0   2   0*\n1   3   1*\n2*  4*  4\n3*  5*  5\n");
    }
}
