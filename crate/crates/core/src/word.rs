//! Braid words over the Artin generators `σ_i` and the pure generators
//! `A_{i,j}`.
//!
//! Grammar, 1-based indices:
//!
//! ```text
//! word  := "" | token (sep token)*
//! token := "s" <i> ["^" <e>] | "A" <i> "," <j> ["^" <e>]
//! sep   := " "+ | "."
//! ```
//!
//! `<e>` is a signed decimal integer. Letters with exponent zero are
//! dropped, and `A<j>,<i>` with `j > i` is read as `A<i>,<j>`.

use std::fmt;

use crate::error::{Error, Result};

pub const GRAMMAR: &str = "token := s<i> | s<i>^<e> | A<i>,<j> | A<i>,<j>^<e>; \
tokens separated by spaces or a single '.'; the empty word is the identity";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    /// `σ_i`, crossing the strands at positions `i` and `i+1`.
    Artin(usize),
    /// `A_{i,j}` with `i < j`.
    Pure(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: Generator,
    pub exponent: i64,
}

impl Letter {
    pub fn artin(i: usize, exponent: i64) -> Self {
        Letter {
            generator: Generator::Artin(i),
            exponent,
        }
    }

    pub fn pure(i: usize, j: usize, exponent: i64) -> Self {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Letter {
            generator: Generator::Pure(i, j),
            exponent,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.generator {
            Generator::Artin(i) => write!(f, "s{i}")?,
            Generator::Pure(i, j) => write!(f, "A{i},{j}")?,
        }
        if self.exponent != 1 {
            write!(f, "^{}", self.exponent)?;
        }
        Ok(())
    }
}

/// A word on `n` strands. Construction validates indices and drops
/// zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Self {
        BraidWord {
            n,
            letters: Vec::new(),
        }
    }

    pub fn new(n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("braid words need n >= 2, got {n}")));
        }
        for letter in &letters {
            check_bounds(n, letter)?;
        }
        Ok(BraidWord {
            n,
            letters: letters.into_iter().filter(|l| l.exponent != 0).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Formal inverse: letters reversed with negated exponents.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    generator: l.generator,
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }

    /// Replaces every `A_{i,j}^e` by `σ_{j−1}⋯σ_{i+1} σ_i^{2e} σ_{i+1}^{−1}⋯σ_{j−1}^{−1}`.
    pub fn expand_pure(&self) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len());
        for letter in &self.letters {
            match letter.generator {
                Generator::Artin(_) => letters.push(*letter),
                Generator::Pure(i, j) => {
                    letters.extend((i + 1..j).rev().map(|k| Letter::artin(k, 1)));
                    letters.push(Letter::artin(i, 2 * letter.exponent));
                    letters.extend((i + 1..j).map(|k| Letter::artin(k, -1)));
                }
            }
        }
        BraidWord { n: self.n, letters }
    }
}

fn check_bounds(n: usize, letter: &Letter) -> Result<()> {
    let ok = match letter.generator {
        Generator::Artin(i) => i >= 1 && i < n,
        Generator::Pure(i, j) => i >= 1 && i < j && j <= n,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange {
            generator: letter.to_string(),
            n,
        })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, letter) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Parses a word on `n` strands.
pub fn parse_word(text: &str, n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::Domain(format!("braid words need n >= 2, got {n}")));
    }
    let text = text.trim();
    let mut letters = Vec::new();
    if text.is_empty() {
        return Ok(BraidWord { n, letters });
    }
    for token in split_tokens(text)? {
        let letter = parse_token(token)?;
        check_bounds(n, &letter)?;
        if letter.exponent != 0 {
            letters.push(letter);
        }
    }
    Ok(BraidWord { n, letters })
}

fn split_tokens(text: &str) -> Result<Vec<&str>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut start = 0;
    let mut k = 0;
    while k <= bytes.len() {
        let at_sep = k == bytes.len() || bytes[k] == b' ' || bytes[k] == b'.';
        if !at_sep {
            k += 1;
            continue;
        }
        if k == start {
            return Err(syntax(&text[start..], "empty token"));
        }
        tokens.push(&text[start..k]);
        if k == bytes.len() {
            break;
        }
        if bytes[k] == b'.' {
            k += 1;
        } else {
            while k < bytes.len() && bytes[k] == b' ' {
                k += 1;
            }
        }
        start = k;
        if k == bytes.len() {
            return Err(syntax(text, "trailing separator"));
        }
    }
    Ok(tokens)
}

fn parse_token(token: &str) -> Result<Letter> {
    let (body, exponent) = match token.split_once('^') {
        Some((body, exp)) => {
            let e = parse_signed(exp).ok_or_else(|| syntax(token, "bad exponent"))?;
            (body, e)
        }
        None => (token, 1),
    };
    if let Some(idx) = body.strip_prefix('s') {
        let i = parse_index(idx).ok_or_else(|| syntax(token, "bad generator index"))?;
        Ok(Letter::artin(i, exponent))
    } else if let Some(idx) = body.strip_prefix('A') {
        let (a, b) = idx
            .split_once(',')
            .ok_or_else(|| syntax(token, "pure generator needs two indices"))?;
        let a = parse_index(a).ok_or_else(|| syntax(token, "bad generator index"))?;
        let b = parse_index(b).ok_or_else(|| syntax(token, "bad generator index"))?;
        Ok(Letter::pure(a, b, exponent))
    } else {
        Err(syntax(token, "expected s<i> or A<i>,<j>"))
    }
}

fn parse_index(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn parse_signed(s: &str) -> Option<i64> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

fn syntax(token: &str, reason: &str) -> Error {
    Error::Syntax {
        token: token.to_string(),
        reason: reason.to_string(),
    }
}

pub fn render_word(w: &BraidWord) -> String {
    w.to_string()
}
