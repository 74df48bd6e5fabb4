//! OEIS b-file reading and triangle cross-checks against vendored fixtures.

use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use typeb_core::triangles::Family;
use typeb_core::verify::{Failure, VerificationReport};

use crate::CliError;

/// OEIS entries that list a type-B triangle by rows.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OeisSequence {
    A039755,
    A039758,
}

impl OeisSequence {
    pub fn tag(self) -> &'static str {
        match self {
            OeisSequence::A039755 => "A039755",
            OeisSequence::A039758 => "A039758",
        }
    }

    pub fn family(self) -> Family {
        match self {
            OeisSequence::A039755 => Family::Stirling2B,
            OeisSequence::A039758 => Family::Stirling1B,
        }
    }
}

impl FromStr for OeisSequence {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "A039755" => Ok(OeisSequence::A039755),
            "A039758" => Ok(OeisSequence::A039758),
            _ => Err(CliError::Unknown {
                kind: "OEIS sequence",
                tag: s.to_string(),
            }),
        }
    }
}

/// Parses b-file text: one `index value` pair per line, `#` comments and
/// blank lines ignored. A file without any entries is malformed.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, BigInt)>, CliError> {
    let mut entries = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |reason: &str| CliError::MalformedFixture {
            line: i + 1,
            reason: reason.to_string(),
        };
        let mut fields = line.split_whitespace();
        let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(malformed("expected `index value`"));
        };
        let index = index
            .parse()
            .map_err(|_| malformed("index is not a nonnegative integer"))?;
        let value = value
            .parse()
            .map_err(|_| malformed("value is not an integer"))?;
        entries.push((index, value));
    }
    if entries.is_empty() {
        return Err(CliError::MalformedFixture {
            line: text.lines().count(),
            reason: "no entries".to_string(),
        });
    }
    Ok(entries)
}

/// Compares the triangle, read row by row, against every entry of the
/// fixture at `path`.
pub fn oeis_check(seq: OeisSequence, path: &Path) -> Result<VerificationReport, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let entries = parse_bfile(&text)?;
    let n_max = entries.iter().map(|(i, _)| *i).max().unwrap_or(0);
    let flat = seq.family().shared().flattened(n_max + 1);
    let failure = entries
        .iter()
        .find(|(i, v)| flat[*i] != *v)
        .map(|(i, v)| Failure {
            n: *i,
            k: None,
            expected: v.to_string(),
            actual: flat[*i].to_string(),
        });
    Ok(VerificationReport {
        identity: seq.tag(),
        n_max,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_blanks() {
        let e = parse_bfile("# head\n\n0 1\n 1  -3 \n").unwrap();
        assert_eq!(e, vec![(0, BigInt::from(1)), (1, BigInt::from(-3))]);
    }

    #[test]
    fn reports_bad_line_number() {
        for bad in ["0 1\n1\n", "0 1\n1 2 3\n", "0 1\nx 2\n", "0 1\n1 2.5\n"] {
            match parse_bfile(bad) {
                Err(CliError::MalformedFixture { line, .. }) => assert_eq!(line, 2, "{bad:?}"),
                other => panic!("{bad:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn empty_is_malformed() {
        assert!(matches!(
            parse_bfile("# only\n"),
            Err(CliError::MalformedFixture { .. })
        ));
        assert!(matches!(
            parse_bfile(""),
            Err(CliError::MalformedFixture { .. })
        ));
    }

    #[test]
    fn sequence_tags() {
        for s in [OeisSequence::A039755, OeisSequence::A039758] {
            assert_eq!(s.tag().parse::<OeisSequence>().unwrap(), s);
        }
        assert!("A000045".parse::<OeisSequence>().is_err());
    }
}
