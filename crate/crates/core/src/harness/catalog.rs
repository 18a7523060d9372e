//! Catalog of groups to verify, with expectation tags.
//!
//! File format: one spec per line, optionally followed by
//! `#tags: tag1, tag2`. Blank lines and lines starting with `#` are skipped.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    construct_group_with, from_cayley_table_with, parse_group_spec, FiniteGroup, GroupOptions,
    GroupSpec, S3_TABLE,
};

pub const TAG_KNOWN_DISCREPANCY: &str = "known-discrepancy";
pub const TAG_EXPECT_NO_TOTAL_DOM: &str = "expect-no-total-dom";
pub const TAG_EXPECT_NON_NILPOTENT: &str = "expect-non-nilpotent";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    Spec(GroupSpec),
    /// A Cayley table shipped with the program.
    Inline { name: String, table: &'static str },
}

impl fmt::Display for GroupSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSource::Spec(s) => write!(f, "{s}"),
            GroupSource::Inline { name, .. } => f.write_str(name),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    #[serde(serialize_with = "crate::harness::catalog::display")]
    pub source: GroupSource,
    pub tags: BTreeSet<String>,
}

pub(crate) fn display<S: serde::Serializer>(v: &GroupSource, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl CatalogEntry {
    pub fn new(spec: &str, tags: &[&str]) -> Result<Self> {
        Ok(CatalogEntry {
            source: GroupSource::Spec(parse_group_spec(spec)?),
            tags: tags.iter().map(|t| t.to_string()).collect(),
        })
    }

    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(tag)
    }

    pub fn construct(&self, opts: &GroupOptions) -> Result<FiniteGroup> {
        match &self.source {
            GroupSource::Spec(spec) => construct_group_with(spec, opts),
            GroupSource::Inline { table, .. } => from_cayley_table_with(table, opts),
        }
    }
}

/// The standard verification set: every branch of the formulas, the three
/// nonexistence shapes and a non-nilpotent control.
pub fn default_catalog() -> Vec<CatalogEntry> {
    let entries: &[(&str, &[&str])] = &[
        ("Z6", &["cyclic"]),
        ("Z12", &["cyclic"]),
        ("E2^2", &["p-group", TAG_EXPECT_NO_TOTAL_DOM]),
        ("Z4xZ2", &["p-group", TAG_EXPECT_NO_TOTAL_DOM]),
        ("D8", &["p-group", TAG_EXPECT_NO_TOTAL_DOM]),
        ("E3^2", &["p-group"]),
        ("Z8", &["cyclic", "p-group"]),
        ("H3", &["p-group"]),
        ("Q8", &["quaternion", "p-group"]),
        ("Q16", &["quaternion", "p-group"]),
        ("Q32", &["quaternion", "p-group"]),
        ("Z5xQ8", &["quaternion"]),
        ("Z15xQ8", &["quaternion"]),
        ("E3^2xQ8", &["quaternion"]),
        ("E3^2xZ2", &[TAG_KNOWN_DISCREPANCY]),
        ("E3^2xZ4", &[TAG_KNOWN_DISCREPANCY]),
        ("E2^2xE3^2", &[]),
    ];
    let mut out: Vec<CatalogEntry> = entries
        .iter()
        .map(|(spec, tags)| CatalogEntry::new(spec, tags).expect("built-in spec parses"))
        .collect();
    out.push(CatalogEntry {
        source: GroupSource::Inline {
            name: "S3".into(),
            table: S3_TABLE,
        },
        tags: [TAG_EXPECT_NON_NILPOTENT.to_string()].into(),
    });
    out
}

/// Parses one catalog line; `None` for blank and comment lines.
pub fn parse_catalog_line(line: &str) -> Result<Option<CatalogEntry>> {
    let line = line.trim();
    if line.is_empty() || line.starts_with('#') {
        return Ok(None);
    }
    let (spec, tags) = match line.find("#tags:") {
        Some(i) => (&line[..i], &line[i + "#tags:".len()..]),
        None => (line, ""),
    };
    let spec = spec.trim();
    let source = if spec == "S3" {
        GroupSource::Inline {
            name: "S3".into(),
            table: S3_TABLE,
        }
    } else {
        GroupSource::Spec(parse_group_spec(spec)?)
    };
    let tags = tags
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(String::from)
        .collect();
    Ok(Some(CatalogEntry { source, tags }))
}

pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        match parse_catalog_line(line) {
            Ok(Some(e)) => out.push(e),
            Ok(None) => {}
            Err(e) => {
                return Err(Error::MalformedCatalog {
                    line: i + 1,
                    reason: e.to_string(),
                })
            }
        }
    }
    Ok(out)
}

/// Renders entries in the catalog file format.
pub fn render_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&e.source.to_string());
        if !e.tags.is_empty() {
            let tags: Vec<&str> = e.tags.iter().map(String::as_str).collect();
            out.push_str(" #tags: ");
            out.push_str(&tags.join(", "));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_catalog_contents() {
        let cat = default_catalog();
        let find = |name: &str| cat.iter().find(|e| e.source.to_string() == name).unwrap();
        assert!(find("Q8").has_tag("quaternion"));
        assert!(find("E2^2").has_tag(TAG_EXPECT_NO_TOTAL_DOM));
        assert!(find("E3^2xZ2").has_tag(TAG_KNOWN_DISCREPANCY));
        assert!(find("S3").has_tag(TAG_EXPECT_NON_NILPOTENT));
        assert_eq!(cat.len(), 18);
    }

    #[test]
    fn catalog_text_round_trip() {
        let cat = default_catalog();
        assert_eq!(parse_catalog(&render_catalog(&cat)).unwrap(), cat);
    }

    #[test]
    fn catalog_lines() {
        let text = "# comment\n\nQ8 #tags: quaternion, p-group\nZ6\n";
        let cat = parse_catalog(text).unwrap();
        assert_eq!(cat.len(), 2);
        assert_eq!(cat[0].tags.len(), 2);
        assert!(cat[1].tags.is_empty());
        assert!(matches!(parse_catalog("Z6\nQ7\n"), Err(Error::MalformedCatalog { line: 2, .. })));
    }
}
