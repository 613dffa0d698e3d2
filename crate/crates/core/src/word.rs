use std::fmt;

use crate::alphabet::{Alphabet, Letter};
use crate::text::{self, TextError};

/// A finite sequence of signed letters. The empty word is the identity of
/// the free monoid and prints as `1`.
///
/// Words are stored fully expanded, one entry per letter, because all the
/// combinatorics here (prefixes, overlaps, critical pairs) are
/// letter-granular. The derived `Ord` is structural and only used for
/// container keys.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    /// True iff every letter is a plain generator. The empty word is positive.
    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|l| l.is_positive())
    }

    /// Cancels all adjacent `x x^-1` and `x^-1 x` pairs, exhaustively.
    ///
    /// A single left-to-right pass over a stack reaches the unique reduced
    /// form: a letter is pushed unless it cancels the current top, and any
    /// cancellation exposes at most one new cancellable pair at the top.
    pub fn freely_reduced(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word {
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// Replaces `self[start..start + len]` by `replacement`.
    pub fn splice(&self, start: usize, len: usize, replacement: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() - len + replacement.len());
        letters.extend_from_slice(&self.letters[..start]);
        letters.extend_from_slice(&replacement.letters);
        letters.extend_from_slice(&self.letters[start + len..]);
        Word { letters }
    }

    /// Parses a space-separated word; `1` denotes the empty word and may be
    /// mixed with letter tokens, contributing nothing.
    pub fn parse(input: &str, alphabet: &Alphabet) -> Result<Word, TextError> {
        let mut letters = Vec::new();
        for token in input.split_whitespace() {
            if token == "1" {
                continue;
            }
            letters.push(text::parse_letter_token(token, alphabet)?);
        }
        Ok(Word { letters })
    }

    /// Renders the word with the given alphabet; the empty word is `1`.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word { letters }
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Word {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (i, &l) in self.word.letters().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", text::format_letter(l, self.alphabet))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new(["a", "b", "c"]).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s, &abc()).unwrap()
    }

    #[test]
    fn free_reduction_single_cancellation() {
        assert_eq!(w("a a^-1 b").freely_reduced(), w("b"));
    }

    #[test]
    fn free_reduction_nested() {
        assert_eq!(w("a b b^-1 a^-1").freely_reduced(), Word::empty());
    }

    #[test]
    fn free_reduction_already_reduced() {
        assert_eq!(w("a b c").freely_reduced(), w("a b c"));
    }

    #[test]
    fn positivity() {
        assert!(w("a c").is_positive());
        assert!(!w("a^-1 c").is_positive());
        assert!(Word::empty().is_positive());
    }

    #[test]
    fn parse_and_format() {
        let a = abc();
        let word = w("a b^-1 c");
        assert_eq!(
            word.letters(),
            &[
                Letter::positive(0),
                Letter::negative(1),
                Letter::positive(2)
            ]
        );
        assert_eq!(word.display(&a).to_string(), "a b^-1 c");
        assert_eq!(Word::parse("1", &a).unwrap(), Word::empty());
        assert_eq!(Word::empty().display(&a).to_string(), "1");
        assert!(matches!(
            Word::parse("z", &Alphabet::new(["a", "b"]).unwrap()),
            Err(TextError::UnknownGenerator { .. })
        ));
    }

    #[test]
    fn splice_replaces_a_segment() {
        let word = w("a b c");
        assert_eq!(word.splice(1, 1, &w("c a")), w("a c a c"));
        assert_eq!(word.splice(0, 0, &w("b")), w("b a b c"));
        assert_eq!(word.splice(3, 0, &w("b")), w("a b c b"));
    }
}
