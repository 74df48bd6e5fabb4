use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use typeb_core::cauchy::{CauchySequence, Kind, Route, TypeTag};
use typeb_core::triangles::{lah_bell_a, lah_bell_b, Family};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Markdown,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "markdown" | "md" => Ok(Format::Markdown),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(CliError::Unknown {
                kind: "format",
                tag: s.to_string(),
            }),
        }
    }
}

/// Anything `table` can print: a triangle, or a sequence shown as one row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFamily {
    Triangle(Family),
    Cauchy(Kind, TypeTag),
    LahBell(TypeTag),
}

impl TableFamily {
    const SEQUENCES: [(&'static str, TableFamily); 6] = [
        ("cauchy1_B", TableFamily::Cauchy(Kind::First, TypeTag::B)),
        ("cauchy2_B", TableFamily::Cauchy(Kind::Second, TypeTag::B)),
        ("cauchy1_A", TableFamily::Cauchy(Kind::First, TypeTag::A)),
        ("cauchy2_A", TableFamily::Cauchy(Kind::Second, TypeTag::A)),
        ("lah_bell_B", TableFamily::LahBell(TypeTag::B)),
        ("lah_bell_A", TableFamily::LahBell(TypeTag::A)),
    ];

    pub fn tag(self) -> &'static str {
        match self {
            TableFamily::Triangle(f) => f.tag(),
            other => {
                Self::SEQUENCES
                    .iter()
                    .find(|(_, f)| *f == other)
                    .expect("every sequence family has a tag")
                    .0
            }
        }
    }

    /// Every accepted tag.
    pub fn tags() -> Vec<&'static str> {
        Family::ALL
            .iter()
            .map(|f| f.tag())
            .chain(Self::SEQUENCES.iter().map(|(t, _)| *t))
            .collect()
    }
}

impl FromStr for TableFamily {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        if let Ok(f) = s.parse::<Family>() {
            return Ok(TableFamily::Triangle(f));
        }
        Self::SEQUENCES
            .iter()
            .find(|(t, _)| *t == s)
            .map(|(_, f)| *f)
            .ok_or_else(|| CliError::Unknown {
                kind: "table family",
                tag: s.to_string(),
            })
    }
}

/// Exact values rendered as strings: integers plainly, fractions as `p/q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputTable {
    pub family: String,
    pub n_max: usize,
    pub rows: Vec<Vec<String>>,
}

pub fn cmd_table(family: TableFamily, n_max: usize) -> OutputTable {
    let rows = match family {
        TableFamily::Triangle(f) => f
            .shared()
            .rows(n_max)
            .into_iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect(),
        TableFamily::Cauchy(kind, type_tag) => {
            let seq = CauchySequence::compute(kind, type_tag, Route::Integral, n_max);
            vec![seq.values.iter().map(ToString::to_string).collect()]
        }
        TableFamily::LahBell(type_tag) => {
            let f = match type_tag {
                TypeTag::A => lah_bell_a,
                TypeTag::B => lah_bell_b,
            };
            vec![(0..=n_max).map(|n| f(n).to_string()).collect()]
        }
    };
    OutputTable {
        family: family.tag().to_string(),
        n_max,
        rows,
    }
}

impl OutputTable {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.rows.iter().map(|r| r.join(",") + "\n").collect(),
            Format::Json => serde_json::to_string_pretty(self).expect("table serializes") + "\n",
            Format::Markdown => self.markdown(),
        }
    }

    fn markdown(&self) -> String {
        let width = self.rows.iter().map(Vec::len).max().unwrap_or(0);
        let triangular = self.rows.len() > 1 || width == 1;
        let mut out = String::new();
        let label = if triangular { "n \\ k" } else { "n" };
        let _ = write!(out, "| {label} |");
        for k in 0..width {
            let _ = write!(out, " {k} |");
        }
        out.push('\n');
        out.push_str("|---|");
        out.push_str(&"---|".repeat(width));
        out.push('\n');
        for (n, row) in self.rows.iter().enumerate() {
            let head = if triangular {
                n.to_string()
            } else {
                self.family.clone()
            };
            let _ = write!(out, "| {head} |");
            for k in 0..width {
                let _ = write!(out, " {} |", row.get(k).map_or("", String::as_str));
            }
            out.push('\n');
        }
        out
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
