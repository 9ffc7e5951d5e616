//! JSON documents read and written by the command-line tool.
//!
//! Scalars travel as strings (`"3"`, `"16/7"`, `"zero"`) so rationals survive
//! I/O exactly. Plain JSON integers are accepted on input as a convenience;
//! output always uses strings.

use semisolve::{ExactMatrix, ExactScalar, ExactVector, Flavor, Rational};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
enum RawScalar {
    Text(String),
    Int(i64),
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawSystem {
    semifield: String,
    #[serde(rename = "A")]
    a: Vec<Vec<RawScalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<Vec<RawScalar>>,
}

/// A parsed system `A ⊗ x = b`. `b` may be omitted for `det` and `pinv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemDocument {
    pub flavor: Flavor,
    pub a: ExactMatrix,
    pub b: Option<ExactVector>,
}

fn parse_scalar(f: Flavor, raw: &RawScalar, at: &str) -> Result<ExactScalar, CliError> {
    let parsed = match raw {
        RawScalar::Text(s) => f.parse_scalar::<Rational>(s),
        RawScalar::Int(n) => f.parse_scalar::<Rational>(&n.to_string()),
    };
    parsed.map_err(|e| CliError::Input(format!("{at}: {e}")))
}

impl SystemDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let raw: RawSystem = serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("malformed document: {e}")))?;
        let flavor: Flavor = raw
            .semifield
            .parse()
            .map_err(|e| CliError::Input(format!("{e}")))?;
        let rows = raw
            .a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| parse_scalar(flavor, s, &format!("A[{i}][{j}]")))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let a = ExactMatrix::new(flavor, rows).map_err(|e| CliError::Input(format!("A: {e}")))?;
        let b = match &raw.b {
            None => None,
            Some(entries) => {
                let entries = entries
                    .iter()
                    .enumerate()
                    .map(|(i, s)| parse_scalar(flavor, s, &format!("b[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                let b = ExactVector::new(flavor, entries)
                    .map_err(|e| CliError::Input(format!("b: {e}")))?;
                if b.len() != a.rows() {
                    return Err(CliError::Input(format!(
                        "b has {} entries but A has {} rows",
                        b.len(),
                        a.rows()
                    )));
                }
                Some(b)
            }
        };
        Ok(SystemDocument { flavor, a, b })
    }

    /// Canonical JSON text: reduced fractions, scalars as strings.
    pub fn render(&self) -> Result<String, CliError> {
        let raw = RawSystem {
            semifield: self.flavor.name().to_owned(),
            a: self
                .a
                .to_rows()
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|s| format_scalar(self.flavor, s).map(RawScalar::Text))
                        .collect()
                })
                .collect::<Result<_, _>>()?,
            b: self
                .b
                .as_ref()
                .map(|b| {
                    b.iter()
                        .map(|s| format_scalar(self.flavor, s).map(RawScalar::Text))
                        .collect()
                })
                .transpose()?,
        };
        Ok(to_json(&raw))
    }
}

pub(crate) fn format_scalar(f: Flavor, s: &ExactScalar) -> Result<String, CliError> {
    f.format_scalar(s).map_err(CliError::Core)
}

pub(crate) fn format_matrix(m: &ExactMatrix) -> Result<Vec<Vec<String>>, CliError> {
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|s| format_scalar(m.flavor(), s)).collect())
        .collect()
}

pub(crate) fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("documents serialize");
    text.push('\n');
    text
}
