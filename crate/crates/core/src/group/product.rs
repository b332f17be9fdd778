use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

use super::finite::FiniteGroup;
use super::{Element, GroupOracle};

/// Free product of finite groups (trivial amalgamation).
///
/// Each factor contributes all of its nonidentity elements as generators, so
/// the product's generating set is the disjoint union of the factors' sets.
/// Elements are stored in alternating-syllable normal form: a sequence of
/// symbols in which consecutive symbols belong to different factors.
#[derive(Debug, Clone)]
pub struct FreeProduct {
    factors: Vec<FiniteGroup>,
    alphabet: Alphabet,
    /// Per symbol: (factor index, element index in that factor).
    syllable: Vec<(usize, usize)>,
    /// Per factor: symbol of its element with index 1 (offset base).
    offset: Vec<usize>,
}

/// Factor letters `a, b, c, ...`.
fn factor_letter(k: usize) -> String {
    if k < 26 {
        char::from(b'a' + k as u8).to_string()
    } else {
        format!("f{k}_")
    }
}

/// The generating set of a free product of finite groups: every nonidentity
/// element of every factor, inverses inherited from the factors.
pub fn free_product_alphabet(factors: &[FiniteGroup]) -> Result<Alphabet> {
    if factors.is_empty() {
        return Err(Error::input("free product needs at least one factor"));
    }
    let mut names = Vec::new();
    let mut inverse = Vec::new();
    for (k, f) in factors.iter().enumerate() {
        if f.len() < 2 {
            return Err(Error::input(format!("factor {k} is the trivial group")));
        }
        let renamed = f.with_letter(&factor_letter(k))?;
        let base = names.len();
        for s in renamed.alphabet().symbols() {
            names.push(renamed.alphabet().name(s).to_string());
            inverse.push(base + renamed.alphabet().inverse(s).index());
        }
    }
    Alphabet::new(names, inverse)
}

impl FreeProduct {
    pub fn new(factors: Vec<FiniteGroup>) -> Result<Self> {
        let alphabet = free_product_alphabet(&factors)?;
        let mut syllable = Vec::with_capacity(alphabet.len());
        let mut offset = Vec::with_capacity(factors.len());
        for (k, f) in factors.iter().enumerate() {
            offset.push(syllable.len());
            for e in 1..f.len() {
                syllable.push((k, e));
            }
        }
        Ok(Self { factors, alphabet, syllable, offset })
    }

    pub fn factors(&self) -> &[FiniteGroup] {
        &self.factors
    }

    /// Factor and element index of a generator.
    pub fn syllable_of(&self, s: Symbol) -> (usize, usize) {
        self.syllable[s.index()]
    }

    /// Generator for element `index` of factor `factor`; `None` for the identity.
    pub fn symbol_for(&self, factor: usize, index: usize) -> Option<Symbol> {
        (index > 0 && index < self.factors[factor].len())
            .then(|| Symbol((self.offset[factor] + index - 1) as u16))
    }

    /// The image of a factor element in the product.
    pub fn embed(&self, factor: usize, index: usize) -> Element {
        match self.symbol_for(factor, index) {
            Some(s) => Element::from_slice(&[s.0 as i32]),
            None => self.identity(),
        }
    }
}

impl GroupOracle for FreeProduct {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn identity(&self) -> Element {
        Element::default()
    }

    fn step(&self, g: &Element, s: Symbol) -> Element {
        let (k, e) = self.syllable_of(s);
        let mut out = g.clone();
        match out.0.last().map(|&t| self.syllable_of(Symbol(t as u16))) {
            Some((lk, le)) if lk == k => {
                let merged = self.factors[k].mul(le, e);
                out.0.pop();
                if let Some(m) = self.symbol_for(k, merged) {
                    out.0.push(m.0 as i32);
                }
            }
            _ => out.0.push(s.0 as i32),
        }
        out
    }

    fn describe(&self) -> String {
        let labels: Vec<&str> = self.factors.iter().map(|f| f.label()).collect();
        format!("free product {}", labels.join(" * "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn alphabets() {
        let al = free_product_alphabet(&[c(2), c(3)]).unwrap();
        assert_eq!(al.names(), &["a", "b", "b'"]);
        assert_eq!(al.inverse(Symbol(0)), Symbol(0));
        assert_eq!(al.inverse(Symbol(1)), Symbol(2));

        let al = free_product_alphabet(&[c(2), c(2)]).unwrap();
        assert_eq!(al.len(), 2);
        assert!(al.symbols().all(|s| al.inverse(s) == s));

        assert_eq!(free_product_alphabet(&[c(3), c(3)]).unwrap().len(), 4);
    }

    #[test]
    fn trivial_factor_rejected() {
        let trivial = FiniteGroup::from_csv_str("0\n", "1");
        assert!(trivial.is_err());
        assert!(free_product_alphabet(&[]).is_err());
    }

    #[test]
    fn syllables_merge_within_a_factor() {
        let g = FreeProduct::new(vec![c(2), c(3)]).unwrap();
        let al = g.alphabet();
        assert!(g.is_identity_word(&al.parse_word("b,b,b").unwrap()));
        assert!(g.is_identity_word(&al.parse_word("a,a").unwrap()));
        assert!(!g.is_identity_word(&al.parse_word("a,b,a,b").unwrap()));
        let x = g.evaluate(&al.parse_word("a,b,b").unwrap());
        assert_eq!(x, g.evaluate(&al.parse_word("a,b'").unwrap()));
        assert_eq!(x.as_slice().len(), 2);
    }

    #[test]
    fn embed_factor_elements() {
        let g = FreeProduct::new(vec![c(2), c(3)]).unwrap();
        assert_eq!(g.embed(1, 0), g.identity());
        assert_eq!(g.embed(1, 2), g.evaluate(&g.alphabet().parse_word("b'").unwrap()));
    }
}
