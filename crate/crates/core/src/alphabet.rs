use std::fmt;

use crate::text::TextError;

/// Characters that may not appear in generator names because the text
/// formats use them as structure.
pub const RESERVED_CHARS: &[char] = &['^', '=', '>', '#', ','];

/// The sign of a letter: a generator or its formal inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// A signed letter over some alphabet. The generator is stored as an index;
/// names live only in the [`Alphabet`], so letter comparisons are cheap.
///
/// The derived `Ord` is structural (by index, then sign) and is only meant
/// for container keys; word comparison under a chosen order lives in
/// [`crate::ordering::LetterOrder`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: u32,
    pub sign: Sign,
}

impl Letter {
    pub fn positive(generator: u32) -> Letter {
        Letter {
            generator,
            sign: Sign::Plus,
        }
    }

    pub fn negative(generator: u32) -> Letter {
        Letter {
            generator,
            sign: Sign::Minus,
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }

    pub fn is_positive(self) -> bool {
        self.sign == Sign::Plus
    }

    /// Dense index of this letter within the doubled alphabet: generator `g`
    /// occupies slots `2g` (positive) and `2g + 1` (inverse).
    pub(crate) fn code(self) -> usize {
        self.generator as usize * 2 + (self.sign == Sign::Minus) as usize
    }

    pub(crate) fn from_code(code: usize) -> Letter {
        Letter {
            generator: (code / 2) as u32,
            sign: if code.is_multiple_of(2) {
                Sign::Plus
            } else {
                Sign::Minus
            },
        }
    }
}

/// An ordered list of distinct generator names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet from generator names, in declaration order.
    ///
    /// Names must be nonempty, free of whitespace and of the reserved
    /// characters, distinct, and different from `1` (which denotes the
    /// empty word in the text formats).
    pub fn new<I, S>(names: I) -> Result<Alphabet, TextError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut out: Vec<String> = Vec::new();
        for name in names {
            let name = name.into();
            if name.is_empty()
                || name == "1"
                || name
                    .chars()
                    .any(|c| c.is_whitespace() || RESERVED_CHARS.contains(&c))
            {
                return Err(TextError::InvalidGeneratorName { name });
            }
            if out.contains(&name) {
                return Err(TextError::DuplicateGenerator { name });
            }
            out.push(name);
        }
        Ok(Alphabet { names: out })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Number of signed letters, counting each generator and its inverse.
    pub fn signed_count(&self) -> usize {
        self.names.len() * 2
    }

    pub fn name(&self, generator: u32) -> &str {
        &self.names[generator as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.names.iter().position(|n| n == name).map(|i| i as u32)
    }

    pub fn contains_letter(&self, l: Letter) -> bool {
        (l.generator as usize) < self.names.len()
    }

    /// Generator indices in declaration order.
    pub fn gens(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.names.len() as u32
    }

    /// All signed letters, interleaved in declaration order:
    /// `a, a^-1, b, b^-1, ...`
    pub fn signed_letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.signed_count()).map(Letter::from_code)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, name) in self.names.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{name}")?;
        }
        Ok(())
    }
}
