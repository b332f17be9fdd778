//! Generator alphabets and words over them.
//!
//! An [`Alphabet`] is a finite list of named generator symbols together with
//! a formal-inverse involution, so every generating set handled by this crate
//! is closed under inverses. Words are plain sequences of symbol indices; the
//! alphabet is needed to print or parse them.
//!
//! The textual word syntax is comma separated symbol names, with a trailing
//! `'` denoting the inverse of a symbol: `a,b,a',b'`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a generator in its [`Alphabet`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Symbol(pub u16);

impl Symbol {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alphabet {
    names: Vec<String>,
    inverse: Vec<Symbol>,
}

impl Alphabet {
    /// Builds an alphabet from symbol names and an inverse table.
    ///
    /// `inverse[i]` is the index of the inverse of symbol `i`; the table must
    /// be an involution. Self-inverse symbols are allowed.
    pub fn new(names: Vec<String>, inverse: Vec<usize>) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::input("alphabet must contain at least one symbol"));
        }
        if names.len() != inverse.len() {
            return Err(Error::input("inverse table length differs from symbol count"));
        }
        if names.len() > u16::MAX as usize {
            return Err(Error::input("too many symbols"));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains(',') || name.chars().any(char::is_whitespace) {
                return Err(Error::input(format!("invalid symbol name {name:?}")));
            }
            if names[..i].contains(name) {
                return Err(Error::input(format!("duplicate symbol name {name:?}")));
            }
        }
        for (i, &j) in inverse.iter().enumerate() {
            if j >= names.len() || inverse[j] != i {
                return Err(Error::input(format!(
                    "inverse table is not an involution at symbol {}",
                    names[i]
                )));
            }
        }
        Ok(Self {
            names,
            inverse: inverse.into_iter().map(|i| Symbol(i as u16)).collect(),
        })
    }

    /// Alphabet `x, x', y, y', ...` with one generator/inverse pair per base name.
    pub fn paired<S: AsRef<str>>(bases: &[S]) -> Result<Self> {
        let mut names = Vec::with_capacity(2 * bases.len());
        let mut inverse = Vec::with_capacity(2 * bases.len());
        for (k, b) in bases.iter().enumerate() {
            names.push(b.as_ref().to_string());
            names.push(format!("{}'", b.as_ref()));
            inverse.push(2 * k + 1);
            inverse.push(2 * k);
        }
        Self::new(names, inverse)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(|i| Symbol(i as u16))
    }

    #[inline]
    pub fn inverse(&self, s: Symbol) -> Symbol {
        self.inverse[s.index()]
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.index()]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn contains(&self, s: Symbol) -> bool {
        s.index() < self.names.len()
    }

    pub fn check(&self, s: Symbol) -> Result<Symbol> {
        if self.contains(s) {
            Ok(s)
        } else {
            Err(Error::input(format!(
                "symbol index {} out of range for alphabet of {} symbols",
                s.0,
                self.len()
            )))
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.iter().try_for_each(|s| self.check(s).map(drop))
    }

    /// Resolves a symbol name. A trailing `'` that is not part of a symbol
    /// name inverts the named symbol.
    pub fn parse_symbol(&self, token: &str) -> Result<Symbol> {
        let token = token.trim();
        if let Some(i) = self.names.iter().position(|n| n == token) {
            return Ok(Symbol(i as u16));
        }
        if let Some(base) = token.strip_suffix('\'') {
            if let Ok(s) = self.parse_symbol(base) {
                return Ok(self.inverse(s));
            }
        }
        Err(Error::input(format!(
            "unknown symbol {token:?} (alphabet: {})",
            self.names.join(" ")
        )))
    }

    /// Parses comma separated symbols; the empty string is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        text.split(',').map(|t| self.parse_symbol(t)).collect()
    }

    pub fn format_word(&self, w: &Word) -> String {
        let mut out = String::new();
        for (k, s) in w.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(self.name(s));
        }
        out
    }

    pub fn display<'a>(&'a self, w: &'a Word) -> impl fmt::Display + 'a {
        DisplayWord { alphabet: self, word: w }
    }
}

struct DisplayWord<'a> {
    alphabet: &'a Alphabet,
    word: &'a Word,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.alphabet.format_word(self.word))
    }
}

/// A word over some alphabet, as a sequence of symbol indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_indices(indices: &[u16]) -> Self {
        Word(indices.iter().map(|&i| Symbol(i)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Symbol> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    pub fn pop(&mut self) -> Option<Symbol> {
        self.0.pop()
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.extend_from(other);
        out
    }

    pub fn subword(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Formal inverse: reversed, each symbol inverted.
    pub fn inverse(&self, alphabet: &Alphabet) -> Word {
        Word(self.0.iter().rev().map(|&s| alphabet.inverse(s)).collect())
    }

    /// Cancels adjacent `s s'` pairs until none remain.
    pub fn free_reduce(&self, alphabet: &Alphabet) -> Word {
        let mut out: Vec<Symbol> = Vec::with_capacity(self.0.len());
        for &s in &self.0 {
            match out.last() {
                Some(&t) if alphabet.inverse(t) == s => {
                    out.pop();
                }
                _ => out.push(s),
            }
        }
        Word(out)
    }

    pub fn is_freely_reduced(&self, alphabet: &Alphabet) -> bool {
        self.0.windows(2).all(|p| alphabet.inverse(p[0]) != p[1])
    }

    /// Freely reduced and first/last letters not mutually inverse.
    pub fn is_cyclically_reduced(&self, alphabet: &Alphabet) -> bool {
        self.is_freely_reduced(alphabet)
            && match (self.0.first(), self.0.last()) {
                (Some(&a), Some(&b)) if self.0.len() > 1 => alphabet.inverse(b) != a,
                _ => true,
            }
    }

    /// Cyclic rotation starting at position `k`.
    pub fn rotated(&self, k: usize) -> Word {
        if self.0.is_empty() {
            return Word::empty();
        }
        let k = k % self.0.len();
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[k..]);
        v.extend_from_slice(&self.0[..k]);
        Word(v)
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(v: Vec<Symbol>) -> Self {
        Word(v)
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl std::ops::Index<usize> for Word {
    type Output = Symbol;

    fn index(&self, i: usize) -> &Symbol {
        &self.0[i]
    }
}
