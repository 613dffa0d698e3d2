//! Well-founded total orderings on words.
//!
//! The only ordering implemented is shortlex: words are compared by length
//! first, then letterwise by the rank of the first differing letter. The
//! rank is a total order on the signed letters of the doubled alphabet, so
//! a generator and its inverse are ranked independently. Shortlex is total
//! and well-founded, which is what Knuth-Bendix needs to orient every
//! nontrivial critical pair.

use std::cmp::Ordering;

use crate::alphabet::{Alphabet, Letter};
use crate::text::{self, TextError};
use crate::word::Word;

/// A total order on the signed letters of a doubled alphabet.
/// Higher rank means greater letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterOrder {
    /// Indexed by `Letter::code`; a permutation of `0..rank.len()`.
    rank: Vec<u32>,
}

/// Result of orienting an equation under an order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orientation {
    /// `lhs > rhs`; rewriting `lhs -> rhs` strictly decreases shortlex.
    Oriented { lhs: Word, rhs: Word },
    /// The two sides are the same word.
    Trivial,
}

impl LetterOrder {
    /// Builds the order from the full list of signed letters, greatest
    /// first. Every signed letter of the alphabet must appear exactly once.
    pub fn from_letters_desc(
        alphabet: &Alphabet,
        letters: &[Letter],
    ) -> Result<LetterOrder, TextError> {
        let n = alphabet.signed_count();
        let mut rank = vec![u32::MAX; n];
        if letters.len() != n {
            return Err(TextError::InvalidValue {
                line: 0,
                message: format!(
                    "order must list all {n} signed letters, got {}",
                    letters.len()
                ),
            });
        }
        for (i, &l) in letters.iter().enumerate() {
            if !alphabet.contains_letter(l) {
                return Err(TextError::UnknownGenerator {
                    name: format!("#{}", l.generator),
                });
            }
            let slot = &mut rank[l.code()];
            if *slot != u32::MAX {
                return Err(TextError::InvalidValue {
                    line: 0,
                    message: format!(
                        "letter `{}` listed twice in order",
                        text::format_letter(l, alphabet)
                    ),
                });
            }
            *slot = (n - 1 - i) as u32;
        }
        Ok(LetterOrder { rank })
    }

    /// The default order: declaration order of the generators, each one
    /// immediately above its inverse (`a > a^-1 > b > b^-1 > ...`).
    pub fn interleaved(alphabet: &Alphabet) -> LetterOrder {
        let letters: Vec<Letter> = alphabet.signed_letters().collect();
        LetterOrder::from_letters_desc(alphabet, &letters)
            .expect("interleaved order covers the alphabet")
    }

    /// Parses an order specification: either the full signed list
    /// `a > a^-1 > b > b^-1`, or a positive-only shorthand `a > b` which
    /// interleaves each generator with its inverse. A trailing
    /// `(interleaved)` marker is accepted and ignored.
    pub fn parse_spec(alphabet: &Alphabet, spec: &str) -> Result<LetterOrder, TextError> {
        let spec = spec.trim();
        let spec = spec.strip_suffix("(interleaved)").unwrap_or(spec).trim();
        let mut letters = Vec::new();
        for token in spec.split('>') {
            let token = token.trim();
            if token.is_empty() {
                return Err(TextError::InvalidValue {
                    line: 0,
                    message: "empty entry in order".to_string(),
                });
            }
            letters.push(text::parse_letter_token(token, alphabet)?);
        }
        if letters.len() == alphabet.len() && letters.iter().all(|l| l.is_positive()) {
            let mut full = Vec::with_capacity(alphabet.signed_count());
            for l in letters {
                full.push(l);
                full.push(l.inverse());
            }
            return LetterOrder::from_letters_desc(alphabet, &full);
        }
        LetterOrder::from_letters_desc(alphabet, &letters)
    }

    pub fn rank(&self, l: Letter) -> u32 {
        self.rank[l.code()]
    }

    pub fn signed_count(&self) -> usize {
        self.rank.len()
    }

    pub fn cmp_letters(&self, a: Letter, b: Letter) -> Ordering {
        self.rank(a).cmp(&self.rank(b))
    }

    /// Shortlex comparison: longer words are greater; words of equal length
    /// are compared letterwise at the first difference.
    pub fn shortlex_cmp(&self, w1: &Word, w2: &Word) -> Ordering {
        w1.len().cmp(&w2.len()).then_with(|| {
            for (&a, &b) in w1.letters().iter().zip(w2.letters()) {
                match self.cmp_letters(a, b) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
    }

    /// Orients `u = v` into a shortlex-decreasing rule, or reports it
    /// trivial when `u` and `v` are identical. The order is total, so no
    /// other outcome exists.
    pub fn orient(&self, u: &Word, v: &Word) -> Orientation {
        match self.shortlex_cmp(u, v) {
            Ordering::Greater => Orientation::Oriented {
                lhs: u.clone(),
                rhs: v.clone(),
            },
            Ordering::Less => Orientation::Oriented {
                lhs: v.clone(),
                rhs: u.clone(),
            },
            Ordering::Equal => Orientation::Trivial,
        }
    }

    /// Signed letters from greatest to least.
    pub fn letters_desc(&self) -> Vec<Letter> {
        let mut codes: Vec<usize> = (0..self.rank.len()).collect();
        codes.sort_by(|&a, &b| self.rank[b].cmp(&self.rank[a]));
        codes.into_iter().map(Letter::from_code).collect()
    }

    /// Renders the order as `a > a^-1 > b > b^-1`.
    pub fn display_spec(&self, alphabet: &Alphabet) -> String {
        self.letters_desc()
            .iter()
            .map(|&l| text::format_letter(l, alphabet))
            .collect::<Vec<_>>()
            .join(" > ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> (Alphabet, LetterOrder) {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let o = LetterOrder::interleaved(&a);
        (a, o)
    }

    fn abc() -> (Alphabet, LetterOrder) {
        let a = Alphabet::new(["a", "b", "c"]).unwrap();
        let o = LetterOrder::interleaved(&a);
        (a, o)
    }

    #[test]
    fn length_dominates_then_lex() {
        let (a, o) = ab();
        let w = |s: &str| Word::parse(s, &a).unwrap();
        assert_eq!(o.shortlex_cmp(&w("a a"), &w("a b")), Ordering::Greater);
        assert_eq!(o.shortlex_cmp(&w("a b"), &w("a")), Ordering::Greater);
        let (a3, o3) = abc();
        let w3 = |s: &str| Word::parse(s, &a3).unwrap();
        assert_eq!(
            o3.shortlex_cmp(&w3("a c b"), &w3("b a c")),
            Ordering::Greater
        );
        assert_eq!(o3.shortlex_cmp(&w3("a c b"), &w3("a c b")), Ordering::Equal);
    }

    #[test]
    fn orientation() {
        let (a, o) = ab();
        let w = |s: &str| Word::parse(s, &a).unwrap();
        assert_eq!(
            o.orient(&w("a b"), &w("b a")),
            Orientation::Oriented {
                lhs: w("a b"),
                rhs: w("b a")
            }
        );
        assert_eq!(o.orient(&w("a b"), &w("a b")), Orientation::Trivial);
        let (a3, o3) = abc();
        let w3 = |s: &str| Word::parse(s, &a3).unwrap();
        assert_eq!(
            o3.orient(&w3("b a c"), &w3("a c b")),
            Orientation::Oriented {
                lhs: w3("a c b"),
                rhs: w3("b a c")
            }
        );
    }

    #[test]
    fn orient_is_symmetric_in_its_arguments() {
        let (a, o) = ab();
        let w = |s: &str| Word::parse(s, &a).unwrap();
        assert_eq!(
            o.orient(&w("a b"), &w("b a")),
            o.orient(&w("b a"), &w("a b"))
        );
    }

    #[test]
    fn spec_parsing_full_and_shorthand() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        let full = LetterOrder::parse_spec(&a, "a > a^-1 > b > b^-1").unwrap();
        assert_eq!(full, LetterOrder::interleaved(&a));
        let short = LetterOrder::parse_spec(&a, "a > b").unwrap();
        assert_eq!(short, full);
        let marked = LetterOrder::parse_spec(&a, "a > b (interleaved)").unwrap();
        assert_eq!(marked, full);
        assert_eq!(full.display_spec(&a), "a > a^-1 > b > b^-1");
        // missing letters, duplicates, unknown names
        assert!(LetterOrder::parse_spec(&a, "a > a^-1 > b").is_err());
        assert!(LetterOrder::parse_spec(&a, "a > a > b > b^-1").is_err());
        assert!(LetterOrder::parse_spec(&a, "a > z").is_err());
    }

    #[test]
    fn bipartite_style_order_reorders_letters() {
        let a = Alphabet::new(["a", "b", "c"]).unwrap();
        let o = LetterOrder::parse_spec(&a, "b > b^-1 > a > a^-1 > c > c^-1").unwrap();
        let w = |s: &str| Word::parse(s, &a).unwrap();
        assert_eq!(o.shortlex_cmp(&w("b"), &w("a")), Ordering::Greater);
        assert_eq!(o.shortlex_cmp(&w("a"), &w("c")), Ordering::Greater);
        assert_eq!(o.display_spec(&a), "b > b^-1 > a > a^-1 > c > c^-1");
    }
}
