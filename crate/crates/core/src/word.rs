//! Free group elements as freely reduced words over an indexed alphabet.
//!
//! Generators are indices `0..rank`. The text syntax uses lowercase letters
//! for generators and uppercase for their inverses, so `"abA"` is a·b·a⁻¹.

use std::fmt;

use crate::error::GogError;

/// A single signed generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: u32,
    pub positive: bool,
}

impl Letter {
    pub fn new(gen: u32, positive: bool) -> Self {
        Letter { gen, positive }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            positive: !self.positive,
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.gen == other.gen && self.positive != other.positive
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = (b'a' + (self.gen % 26) as u8) as char;
        if self.positive {
            write!(f, "{c}")
        } else {
            write!(f, "{}", c.to_ascii_uppercase())
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Builds a word from letters, cancelling adjacent inverse pairs.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            match out.last() {
                Some(&last) if last.is_inverse_of(l) => {
                    out.pop();
                }
                _ => out.push(l),
            }
        }
        Word { letters: out }
    }

    /// Parses the lowercase/uppercase syntax, e.g. `"abA"`.
    pub fn parse(s: &str) -> Result<Self, GogError> {
        let mut letters = Vec::new();
        for (i, c) in s.chars().enumerate() {
            if c.is_ascii_lowercase() {
                letters.push(Letter::new(c as u32 - 'a' as u32, true));
            } else if c.is_ascii_uppercase() {
                letters.push(Letter::new(c as u32 - 'A' as u32, false));
            } else {
                return Err(GogError::WordSyntax {
                    text: s.to_string(),
                    position: i,
                });
            }
        }
        Ok(Word::from_letters(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.gen).max()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn push(&mut self, l: Letter) {
        match self.letters.last() {
            Some(&last) if last.is_inverse_of(l) => {
                self.letters.pop();
            }
            _ => self.letters.push(l),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}
