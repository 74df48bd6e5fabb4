//! Coefficient extraction from the closed-form exponential generating
//! functions.

use std::fmt;
use std::str::FromStr;

use typeb_core::cauchy::{closed_form_egf, Kind, TypeTag};
use typeb_core::riordan::{lah_b_column_egf, lah_bell_a_egf, lah_bell_b_egf};
use typeb_core::{Rational, Series};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EgfName {
    Cauchy(Kind, TypeTag),
    LahBellA,
    LahBellB,
    /// Column `k` of the type-B Lah triangle.
    LahBColumn(usize),
}

impl EgfName {
    fn series(self, order: usize) -> Result<Series, CliError> {
        Ok(match self {
            EgfName::Cauchy(kind, type_tag) => closed_form_egf(kind, type_tag, order)?,
            EgfName::LahBellA => lah_bell_a_egf(order)?,
            EgfName::LahBellB => lah_bell_b_egf(order)?,
            EgfName::LahBColumn(k) => lah_b_column_egf(k, order),
        })
    }
}

impl fmt::Display for EgfName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = |k: &Kind| if *k == Kind::First { 1 } else { 2 };
        let ty = |t: &TypeTag| if *t == TypeTag::A { "A" } else { "B" };
        match self {
            EgfName::Cauchy(k, t) => write!(f, "cauchy{}_{}", kind(k), ty(t)),
            EgfName::LahBellA => f.write_str("lah_bell_A"),
            EgfName::LahBellB => f.write_str("lah_bell_B"),
            EgfName::LahBColumn(k) => write!(f, "lah_B_column({k})"),
        }
    }
}

impl FromStr for EgfName {
    type Err = CliError;

    /// Accepts `lah_B_column(k)` and, for shells that dislike parentheses,
    /// `lah_B_column:k`.
    fn from_str(s: &str) -> Result<Self, CliError> {
        let unknown = || CliError::Unknown {
            kind: "EGF name",
            tag: s.to_string(),
        };
        Ok(match s {
            "cauchy1_B" => EgfName::Cauchy(Kind::First, TypeTag::B),
            "cauchy2_B" => EgfName::Cauchy(Kind::Second, TypeTag::B),
            "cauchy1_A" => EgfName::Cauchy(Kind::First, TypeTag::A),
            "cauchy2_A" => EgfName::Cauchy(Kind::Second, TypeTag::A),
            "lah_bell_A" => EgfName::LahBellA,
            "lah_bell_B" => EgfName::LahBellB,
            _ => {
                let k = s
                    .strip_prefix("lah_B_column(")
                    .and_then(|r| r.strip_suffix(')'))
                    .or_else(|| s.strip_prefix("lah_B_column:"))
                    .ok_or_else(unknown)?;
                EgfName::LahBColumn(k.parse().map_err(|_| unknown())?)
            }
        })
    }
}

/// Coefficients `[x^n]` and the `n!`-scaled sequence, `n = 0..=order`.
#[derive(Clone, Debug, PartialEq)]
pub struct EgfOutput {
    pub name: EgfName,
    pub coefficients: Vec<Rational>,
    pub scaled: Vec<Rational>,
}

impl fmt::Display for EgfOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n,coefficient,scaled")?;
        for (n, (c, s)) in self.coefficients.iter().zip(&self.scaled).enumerate() {
            writeln!(f, "{n},{c},{s}")?;
        }
        Ok(())
    }
}

pub fn cmd_egf(name: EgfName, order: usize) -> Result<EgfOutput, CliError> {
    let series = name.series(order)?;
    Ok(EgfOutput {
        name,
        scaled: series.egf_sequence(),
        coefficients: series.into_coeffs(),
    })
}
