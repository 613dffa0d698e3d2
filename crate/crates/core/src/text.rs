//! Shared plumbing for the line-oriented text formats.
//!
//! Every format is a sequence of `key: value` lines; `#` starts a comment
//! that runs to the end of the line, and blank lines are skipped.

use std::error::Error;
use std::fmt;

use crate::alphabet::{Alphabet, Letter, Sign};

/// Errors raised while parsing any of the text formats or validating names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TextError {
    UnknownGenerator { name: String },
    MalformedToken { token: String },
    InvalidGeneratorName { name: String },
    DuplicateGenerator { name: String },
    MissingKey { key: &'static str },
    UnexpectedLine { line: usize, content: String },
    InvalidValue { line: usize, message: String },
}

impl fmt::Display for TextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TextError::UnknownGenerator { name } => write!(f, "unknown generator `{name}`"),
            TextError::MalformedToken { token } => {
                write!(
                    f,
                    "malformed token `{token}` (expected a generator name or `name^-1`)"
                )
            }
            TextError::InvalidGeneratorName { name } => {
                write!(f, "invalid generator name `{name}`")
            }
            TextError::DuplicateGenerator { name } => {
                write!(f, "duplicate generator `{name}`")
            }
            TextError::MissingKey { key } => write!(f, "missing `{key}:` line"),
            TextError::UnexpectedLine { line, content } => {
                write!(f, "line {line}: unexpected `{content}`")
            }
            TextError::InvalidValue { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl Error for TextError {}

/// Yields `(line_number, content)` for every non-blank line, with comments
/// stripped. Line numbers are 1-based over the original input.
pub(crate) fn logical_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let body = body.trim();
        if body.is_empty() {
            None
        } else {
            Some((i + 1, body))
        }
    })
}

/// Splits `key: rest` at the first colon.
pub(crate) fn split_key(line: &str) -> Option<(&str, &str)> {
    let (key, rest) = line.split_once(':')?;
    Some((key.trim(), rest.trim()))
}

/// Parses a single signed-letter token: `name` or `name^-1`.
pub(crate) fn parse_letter_token(token: &str, alphabet: &Alphabet) -> Result<Letter, TextError> {
    let (name, sign) = match token.strip_suffix("^-1") {
        Some(base) => (base, Sign::Minus),
        None => {
            if token.contains('^') {
                return Err(TextError::MalformedToken {
                    token: token.to_string(),
                });
            }
            (token, Sign::Plus)
        }
    };
    if name.is_empty() || name.contains('^') {
        return Err(TextError::MalformedToken {
            token: token.to_string(),
        });
    }
    match alphabet.index_of(name) {
        Some(generator) => Ok(Letter { generator, sign }),
        None => Err(TextError::UnknownGenerator {
            name: name.to_string(),
        }),
    }
}

pub(crate) fn format_letter(l: Letter, alphabet: &Alphabet) -> String {
    match l.sign {
        Sign::Plus => alphabet.name(l.generator).to_string(),
        Sign::Minus => format!("{}^-1", alphabet.name(l.generator)),
    }
}
