use std::error::Error;
use std::fmt;

use crate::alphabet::Alphabet;
use crate::text::{self, TextError};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresentationKind {
    Monoid,
    Group,
}

/// One defining relation `left = right`. Relations are unordered as
/// mathematics but keep their written orientation so parsing and printing
/// are reproducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub left: Word,
    pub right: Word,
}

/// A monoid or group presentation: an alphabet plus defining relations.
///
/// Group presentations are written over the plain generators; words may use
/// inverse letters. Converting to the monoid presentation of the same group
/// adjoins the free-reduction relations, see
/// [`Presentation::to_monoid_presentation`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub alphabet: Alphabet,
    pub relations: Vec<Relation>,
    pub kind: PresentationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PresentationError {
    ExpectedGroup,
    ExpectedMonoid,
    EmptyAlphabetWithRelations,
    ForeignLetter { relation: usize },
    EmptyRelationSide { relation: usize },
    NonPositiveRelations { relation: usize },
}

impl fmt::Display for PresentationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PresentationError::ExpectedGroup => write!(f, "expected a group presentation"),
            PresentationError::ExpectedMonoid => write!(f, "expected a monoid presentation"),
            PresentationError::EmptyAlphabetWithRelations => {
                write!(f, "a presentation with relations needs a nonempty alphabet")
            }
            PresentationError::ForeignLetter { relation } => {
                write!(f, "relation {relation} uses a letter outside the alphabet")
            }
            PresentationError::EmptyRelationSide { relation } => {
                write!(f, "relation {relation} has an empty side")
            }
            PresentationError::NonPositiveRelations { relation } => {
                write!(f, "relation {relation} uses inverse letters")
            }
        }
    }
}

impl Error for PresentationError {}

impl Presentation {
    pub fn new(
        alphabet: Alphabet,
        kind: PresentationKind,
        relations: Vec<Relation>,
    ) -> Result<Presentation, PresentationError> {
        if alphabet.is_empty() && !relations.is_empty() {
            return Err(PresentationError::EmptyAlphabetWithRelations);
        }
        for (i, rel) in relations.iter().enumerate() {
            let ok = rel
                .left
                .letters()
                .iter()
                .chain(rel.right.letters())
                .all(|&l| alphabet.contains_letter(l));
            if !ok {
                return Err(PresentationError::ForeignLetter { relation: i });
            }
        }
        Ok(Presentation {
            alphabet,
            relations,
            kind,
        })
    }

    /// Turns a group presentation over `X` into the monoid presentation of
    /// the same group over `X` and the inverse letters: the original
    /// relations verbatim, plus `x x^-1 = 1` and `x^-1 x = 1` for every
    /// generator.
    pub fn to_monoid_presentation(&self) -> Result<Presentation, PresentationError> {
        if self.kind != PresentationKind::Group {
            return Err(PresentationError::ExpectedGroup);
        }
        let mut relations = self.relations.clone();
        for g in self.alphabet.gens() {
            let x = crate::alphabet::Letter::positive(g);
            relations.push(Relation {
                left: Word::from(vec![x, x.inverse()]),
                right: Word::empty(),
            });
            relations.push(Relation {
                left: Word::from(vec![x.inverse(), x]),
                right: Word::empty(),
            });
        }
        Ok(Presentation {
            alphabet: self.alphabet.clone(),
            relations,
            kind: PresentationKind::Monoid,
        })
    }

    /// Parses the presentation file format:
    ///
    /// ```text
    /// kind: group            # or monoid
    /// gens: a b c
    /// rel: a a a = c
    /// ```
    pub fn parse(input: &str) -> Result<Presentation, TextError> {
        let mut kind: Option<PresentationKind> = None;
        let mut alphabet: Option<Alphabet> = None;
        let mut pending: Vec<(usize, String, String)> = Vec::new();

        for (line, content) in text::logical_lines(input) {
            let Some((key, value)) = text::split_key(content) else {
                return Err(TextError::UnexpectedLine {
                    line,
                    content: content.to_string(),
                });
            };
            match key {
                "kind" => {
                    kind = Some(parse_kind(line, value)?);
                }
                "gens" => {
                    alphabet = Some(Alphabet::new(value.split_whitespace())?);
                }
                "rel" => {
                    let Some((lhs, rhs)) = value.split_once('=') else {
                        return Err(TextError::InvalidValue {
                            line,
                            message: format!("relation `{value}` has no `=`"),
                        });
                    };
                    pending.push((line, lhs.trim().to_string(), rhs.trim().to_string()));
                }
                _ => {
                    return Err(TextError::UnexpectedLine {
                        line,
                        content: content.to_string(),
                    });
                }
            }
        }

        let kind = kind.ok_or(TextError::MissingKey { key: "kind" })?;
        let alphabet = alphabet.ok_or(TextError::MissingKey { key: "gens" })?;
        let mut relations = Vec::new();
        for (_line, lhs, rhs) in pending {
            relations.push(Relation {
                left: Word::parse(&lhs, &alphabet)?,
                right: Word::parse(&rhs, &alphabet)?,
            });
        }
        Ok(Presentation {
            alphabet,
            relations,
            kind,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(match self.kind {
            PresentationKind::Monoid => "kind: monoid\n",
            PresentationKind::Group => "kind: group\n",
        });
        out.push_str(&format!("gens: {}\n", self.alphabet));
        for rel in &self.relations {
            out.push_str(&format!(
                "rel: {} = {}\n",
                rel.left.display(&self.alphabet),
                rel.right.display(&self.alphabet)
            ));
        }
        out
    }
}

fn parse_kind(line: usize, value: &str) -> Result<PresentationKind, TextError> {
    match value {
        "monoid" => Ok(PresentationKind::Monoid),
        "group" => Ok(PresentationKind::Group),
        other => Err(TextError::InvalidValue {
            line,
            message: format!("kind must be `monoid` or `group`, got `{other}`"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    #[test]
    fn group_to_monoid_adds_free_reductions() {
        let p = group("kind: group\ngens: a b\nrel: a b = b a\n");
        let m = p.to_monoid_presentation().unwrap();
        assert_eq!(m.kind, PresentationKind::Monoid);
        assert_eq!(m.relations.len(), 5);
        assert_eq!(m.relations[0], p.relations[0]);
        let texts: Vec<String> = m.relations[1..]
            .iter()
            .map(|r| {
                format!(
                    "{} = {}",
                    r.left.display(&m.alphabet),
                    r.right.display(&m.alphabet)
                )
            })
            .collect();
        assert_eq!(
            texts,
            vec!["a a^-1 = 1", "a^-1 a = 1", "b b^-1 = 1", "b^-1 b = 1"]
        );
    }

    #[test]
    fn free_group_gets_only_free_reductions() {
        let p = group("kind: group\ngens: x\n");
        let m = p.to_monoid_presentation().unwrap();
        assert_eq!(m.relations.len(), 2);
    }

    #[test]
    fn braid_like_counts() {
        let p = group("kind: group\ngens: a b c\nrel: a a a = c\nrel: b b = c\n");
        let m = p.to_monoid_presentation().unwrap();
        assert_eq!(m.relations.len(), 8);
        assert_eq!(m.relations[..2], p.relations[..]);
    }

    #[test]
    fn monoid_input_is_rejected() {
        let p = Presentation::parse("kind: monoid\ngens: a\n").unwrap();
        assert_eq!(
            p.to_monoid_presentation(),
            Err(PresentationError::ExpectedGroup)
        );
    }

    #[test]
    fn parse_roundtrip() {
        let text = "kind: group\ngens: a b c\nrel: a a a = c\nrel: b b = c\n";
        let p = group(text);
        assert_eq!(p.to_text(), text);
        assert!(Presentation::parse("gens: a\n").is_err());
        assert!(Presentation::parse("kind: monoid\nrel: a = b\n").is_err());
        assert!(Presentation::parse("kind: monoid\ngens: a\nbogus: 1\n").is_err());
    }
}
