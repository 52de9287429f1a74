//! Problem files.
//!
//! Plain text, one `key: value` per line, `#` starts a comment:
//!
//! ```text
//! ell: 3
//! xi: 0
//! h: 1/2
//! values: 0, 1, 2, 3
//! ```
//!
//! `xi` defaults to `0` and `h` to `1`. A file whose first non-blank
//! character is `{` is read as JSON with the same field names, rationals
//! given as strings.

use degdet_core::exactnum::parse_rational;
use degdet_core::interp::EquidistantProblem;
use degdet_core::Rational;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemFile {
    pub ell: usize,
    pub xi: Rational,
    pub h: Rational,
    pub values: Vec<Rational>,
}

impl ProblemFile {
    pub fn into_problem(self) -> Result<EquidistantProblem, CliError> {
        Ok(EquidistantProblem::new(
            self.ell,
            self.xi,
            self.h,
            self.values,
        )?)
    }
}

fn parse_error(line: usize, field: &str, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        field: field.to_string(),
        message: message.into(),
    }
}

fn rational_field(line: usize, field: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).ok_or_else(|| {
        parse_error(
            line,
            field,
            format!(
                "'{}' is not a rational (expected p/q or an integer)",
                text.trim()
            ),
        )
    })
}

/// Comma-separated rationals.
pub fn parse_rational_list(
    line: usize,
    field: &str,
    text: &str,
) -> Result<Vec<Rational>, CliError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|item| rational_field(line, field, item))
        .collect()
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    let mut ell = None;
    let mut xi = None;
    let mut h = None;
    let mut values = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once(':').ok_or_else(|| {
            parse_error(line, "-", format!("expected 'key: value', got '{content}'"))
        })?;
        let key = key.trim();
        match key {
            "ell" => {
                let n = value.trim().parse::<usize>().map_err(|_| {
                    parse_error(
                        line,
                        key,
                        format!("'{}' is not a nonnegative integer", value.trim()),
                    )
                })?;
                ell = Some((line, n));
            }
            "xi" => xi = Some(rational_field(line, key, value)?),
            "h" => h = Some((line, rational_field(line, key, value)?)),
            "values" => values = Some((line, parse_rational_list(line, key, value)?)),
            other => return Err(parse_error(line, other, "unknown field")),
        }
    }
    let (ell_line, ell) = ell.ok_or_else(|| parse_error(0, "ell", "missing field"))?;
    let (values_line, values) = values.ok_or_else(|| parse_error(0, "values", "missing field"))?;
    let xi = xi.unwrap_or_else(|| Rational::from_integer(0.into()));
    let (h_line, h) = h.unwrap_or_else(|| (0, Rational::from_integer(1.into())));
    validate(ell_line, ell, h_line, h, values_line, values, xi)
}

fn validate(
    ell_line: usize,
    ell: usize,
    h_line: usize,
    h: Rational,
    values_line: usize,
    values: Vec<Rational>,
    xi: Rational,
) -> Result<ProblemFile, CliError> {
    if ell == 0 {
        return Err(parse_error(ell_line, "ell", "must be at least 1"));
    }
    if num_traits::Zero::is_zero(&h) {
        return Err(parse_error(h_line, "h", "step must be nonzero"));
    }
    if values.len() != ell + 1 {
        return Err(parse_error(
            values_line,
            "values",
            format!(
                "expected ell + 1 = {} entries, got {}",
                ell + 1,
                values.len()
            ),
        ));
    }
    Ok(ProblemFile { ell, xi, h, values })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonProblem {
    ell: usize,
    #[serde(default)]
    xi: Option<String>,
    #[serde(default)]
    h: Option<String>,
    values: Vec<String>,
}

fn parse_json(text: &str) -> Result<ProblemFile, CliError> {
    let raw: JsonProblem =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), "json", e.to_string()))?;
    let xi = match raw.xi {
        Some(s) => rational_field(0, "xi", &s)?,
        None => Rational::from_integer(0.into()),
    };
    let h = match raw.h {
        Some(s) => rational_field(0, "h", &s)?,
        None => Rational::from_integer(1.into()),
    };
    let values = raw
        .values
        .iter()
        .map(|s| rational_field(0, "values", s))
        .collect::<Result<Vec<_>, _>>()?;
    validate(0, raw.ell, 0, h, 0, values, xi)
}
