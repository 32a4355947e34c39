//! Line-oriented corpus files of permutation groups.
//!
//! ```text
//! # comment
//! group <id>
//! name <free text>            (optional)
//! degree <n>
//! gen <cycle-notation>        (one or more)
//! order <expected>            (optional)
//! tags <comma-separated>      (optional)
//! end
//! ```

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRecord {
    pub id: String,
    pub name: Option<String>,
    pub degree: usize,
    pub generator_texts: Vec<String>,
    pub expected_order: Option<BigUint>,
    pub tags: Vec<String>,
}

impl GroupRecord {
    /// Record for an existing group; the expected order is filled in.
    pub fn from_group(id: impl Into<String>, group: &PermGroup) -> Self {
        Self {
            id: id.into(),
            name: None,
            degree: group.degree(),
            generator_texts: group.generators().iter().map(ToString::to_string).collect(),
            expected_order: Some(group.order()),
            tags: Vec::new(),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_tags<I, S>(mut self, tags: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.tags = tags.into_iter().map(Into::into).collect();
        self
    }

    pub fn group(&self) -> Result<PermGroup> {
        let gens = self
            .generator_texts
            .iter()
            .map(|t| {
                Permutation::parse(t, self.degree).map_err(|e| Error::Generator {
                    id: self.id.clone(),
                    generator: t.clone(),
                    source: Box::new(e),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PermGroup::new(self.degree, gens)
    }

    /// Parses the generators and compares the expected order, if any.
    pub fn validate(&self) -> Result<PermGroup> {
        let group = self.group()?;
        if let Some(expected) = &self.expected_order {
            let actual = group.order();
            if &actual != expected {
                return Err(Error::OrderMismatch {
                    id: self.id.clone(),
                    expected: expected.clone(),
                    actual,
                });
            }
        }
        Ok(group)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "group {}", self.id).unwrap();
        if let Some(name) = &self.name {
            writeln!(out, "name {name}").unwrap();
        }
        writeln!(out, "degree {}", self.degree).unwrap();
        for g in &self.generator_texts {
            writeln!(out, "gen {g}").unwrap();
        }
        if let Some(order) = &self.expected_order {
            writeln!(out, "order {order}").unwrap();
        }
        if !self.tags.is_empty() {
            writeln!(out, "tags {}", self.tags.join(",")).unwrap();
        }
        out.push_str("end\n");
        out
    }
}

#[derive(Default)]
struct Partial {
    id: String,
    start_line: usize,
    name: Option<String>,
    degree: Option<usize>,
    gens: Vec<String>,
    order: Option<BigUint>,
    tags: Vec<String>,
}

/// Parses corpus text without computing any group orders.
pub fn parse_records(text: &str) -> Result<Vec<GroupRecord>> {
    let syntax = |line: usize, message: String| Error::Syntax { line, message };
    let mut records = Vec::new();
    let mut current: Option<Partial> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, value) = match line.split_once(char::is_whitespace) {
            Some((k, v)) => (k, v.trim()),
            None => (line, ""),
        };
        if keyword == "group" {
            if let Some(open) = &current {
                return Err(syntax(
                    line_no,
                    format!("group {:?} opened on line {} is missing 'end'", open.id, open.start_line),
                ));
            }
            if value.is_empty() || value.contains(char::is_whitespace) {
                return Err(syntax(line_no, "group id must be a single token".into()));
            }
            current = Some(Partial {
                id: value.to_string(),
                start_line: line_no,
                ..Partial::default()
            });
            continue;
        }
        let Some(rec) = current.as_mut() else {
            return Err(syntax(line_no, format!("'{keyword}' outside a group block")));
        };
        match keyword {
            "name" => {
                if rec.name.replace(value.to_string()).is_some() {
                    return Err(syntax(line_no, "duplicate 'name'".into()));
                }
            }
            "degree" => {
                let n: usize = value
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad degree {value:?}")))?;
                if n == 0 {
                    return Err(syntax(line_no, "degree must be positive".into()));
                }
                if rec.degree.replace(n).is_some() {
                    return Err(syntax(line_no, "duplicate 'degree'".into()));
                }
            }
            "gen" => {
                if value.is_empty() {
                    return Err(syntax(line_no, "empty generator".into()));
                }
                rec.gens.push(value.to_string());
            }
            "order" => {
                let n: BigUint = value
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad order {value:?}")))?;
                if rec.order.replace(n).is_some() {
                    return Err(syntax(line_no, "duplicate 'order'".into()));
                }
            }
            "tags" => {
                rec.tags = value
                    .split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(String::from)
                    .collect();
            }
            "end" => {
                let rec = current.take().expect("checked above");
                let degree = rec
                    .degree
                    .ok_or_else(|| syntax(line_no, format!("group {:?} has no degree", rec.id)))?;
                if rec.gens.is_empty() {
                    return Err(syntax(line_no, format!("group {:?} has no generators", rec.id)));
                }
                records.push(GroupRecord {
                    id: rec.id,
                    name: rec.name,
                    degree,
                    generator_texts: rec.gens,
                    expected_order: rec.order,
                    tags: rec.tags,
                });
            }
            other => return Err(syntax(line_no, format!("unknown keyword {other:?}"))),
        }
    }
    if let Some(open) = current {
        return Err(syntax(
            open.start_line,
            format!("group {:?} is missing 'end'", open.id),
        ));
    }
    Ok(records)
}

/// Parses and validates: unique ids, generators at the stated degree, expected orders.
pub fn parse_corpus_str(text: &str) -> Result<Vec<GroupRecord>> {
    let records = parse_records(text)?;
    let mut ids = HashSet::new();
    for rec in &records {
        if !ids.insert(rec.id.as_str()) {
            return Err(Error::DuplicateId(rec.id.clone()));
        }
        rec.validate()?;
    }
    Ok(records)
}

pub fn parse_corpus(path: impl AsRef<Path>) -> Result<Vec<GroupRecord>> {
    parse_corpus_str(&std::fs::read_to_string(path)?)
}

pub fn write_corpus(records: &[GroupRecord]) -> String {
    records
        .iter()
        .map(GroupRecord::to_text)
        .collect::<Vec<_>>()
        .join("\n")
}
