//! Group oracles: canonical element identity plus right multiplication by a
//! generator.
//!
//! Every backend exposes the same object-safe [`GroupOracle`] contract so the
//! Cayley-ball builder, the triangulation code and the profiler never need to
//! know which group they are looking at. Elements are carried as [`Element`],
//! a small integer vector whose meaning is backend specific:
//!
//! | backend            | element encoding                          |
//! |--------------------|-------------------------------------------|
//! | finite table       | `[index]`                                 |
//! | free               | freely reduced word (symbol indices)      |
//! | free abelian       | exponent vector                           |
//! | free product       | alternating syllable sequence (symbols)   |
//! | presentation/Dehn  | freely reduced word, *not* canonical      |
//!
//! For all backends except the Dehn one, `Element` equality is group
//! equality. The Dehn backend reports [`GroupOracle::is_canonical`] as false
//! and decides equality with Dehn's algorithm instead.

mod abelian;
mod dehn;
mod finite;
mod free;
mod product;
mod spec;

use std::fmt;

use smallvec::SmallVec;

use crate::alphabet::{Alphabet, Symbol, Word};
use crate::error::Result;

pub use abelian::FreeAbelianGroup;
pub use dehn::{check_small_cancellation, DehnPresentation, Piece, SmallCancellationReport};
pub use finite::FiniteGroup;
pub use free::FreeGroup;
pub use product::{free_product_alphabet, FreeProduct};
pub use spec::GroupSpec;

/// Backend-specific encoding of a group element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Element(pub SmallVec<[i32; 6]>);

impl Element {
    pub fn from_slice(v: &[i32]) -> Self {
        Element(SmallVec::from_slice(v))
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    pub(crate) fn word_symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.0.iter().map(|&x| Symbol(x as u16))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

pub trait GroupOracle: Send + Sync + fmt::Debug {
    fn alphabet(&self) -> &Alphabet;

    fn identity(&self) -> Element;

    /// Right multiplication `g · s`. The symbol is assumed valid; use
    /// [`GroupOracle::multiply`] for checked access.
    fn step(&self, g: &Element, s: Symbol) -> Element;

    /// Short human-readable description of the group and generators.
    fn describe(&self) -> String;

    fn multiply(&self, g: &Element, s: Symbol) -> Result<Element> {
        let s = self.alphabet().check(s)?;
        Ok(self.step(g, s))
    }

    /// Left-to-right product of the word's letters.
    fn evaluate(&self, w: &Word) -> Element {
        w.iter().fold(self.identity(), |g, s| self.step(&g, s))
    }

    fn try_evaluate(&self, w: &Word) -> Result<Element> {
        self.alphabet().check_word(w)?;
        Ok(self.evaluate(w))
    }

    fn is_identity_word(&self, w: &Word) -> bool {
        self.evaluate(w) == self.identity()
    }

    /// Whether `Element` equality coincides with group equality.
    fn is_canonical(&self) -> bool {
        true
    }

    fn same_element(&self, a: &Element, b: &Element) -> bool {
        a == b
    }

    /// A homomorphic invariant used to bucket non-canonical elements; equal
    /// group elements always share a key.
    fn invariant(&self, _g: &Element) -> Vec<i64> {
        Vec::new()
    }

    /// Group order, when finite and known.
    fn order(&self) -> Option<usize> {
        None
    }
}
