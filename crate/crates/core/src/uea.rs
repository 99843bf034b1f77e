//! PBW-style normal forms in the enveloping algebra of a color Lie algebra.
//!
//! Words are sequences of basis symbols of a [`ColorAlgebra`]; the defining
//! relations `⟨x,y⟩ = xy − θ(deg x, deg y)yx` are oriented into the rewrite
//! rule
//!
//! ```text
//! y·x  →  θ(deg y, deg x)·x·y + ⟨y,x⟩        for y > x in the basis order
//! y·y  →  ½⟨y,y⟩                             when θ(deg y, deg y) = −1
//! ```
//!
//! The second rule is the `x = y` case of the defining relation: when
//! `θ = −1` it reads `⟨y,y⟩ = 2y²`, so squares of such letters reduce. A
//! normal form is a non-decreasing word with no such square. Termination:
//! every step either shortens the word or lowers its inversion count.
//!
//! Words are capped at a configurable length (default 6); longer inputs are
//! rejected rather than rewritten.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::Coefficient;
use crate::colorlie::{AlgebraElement, ColorAlgebra};
use crate::grade::{theta, theta_sign, Grade};
use crate::symbol::SymbolId;

pub const DEFAULT_WORD_CAP: usize = 6;

/// A monomial: an ordered sequence of basis symbols. Unreduced words are
/// allowed; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct UeaWord {
    letters: Vec<SymbolId>,
}

impl UeaWord {
    pub fn unit() -> UeaWord {
        UeaWord { letters: Vec::new() }
    }

    pub fn letter(s: SymbolId) -> UeaWord {
        UeaWord { letters: vec![s] }
    }

    pub fn from_letters(letters: impl Into<Vec<SymbolId>>) -> UeaWord {
        UeaWord { letters: letters.into() }
    }

    pub fn letters(&self) -> &[SymbolId] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &UeaWord) -> UeaWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        UeaWord { letters }
    }

    /// Replaces the two letters at `i, i+1` by the given single letters.
    fn splice_pair(&self, i: usize, replacement: &[SymbolId]) -> UeaWord {
        let mut letters = Vec::with_capacity(self.letters.len() - 2 + replacement.len());
        letters.extend_from_slice(&self.letters[..i]);
        letters.extend_from_slice(replacement);
        letters.extend_from_slice(&self.letters[i + 2..]);
        UeaWord { letters }
    }

    fn swapped(&self, i: usize) -> UeaWord {
        let mut letters = self.letters.clone();
        letters.swap(i, i + 1);
        UeaWord { letters }
    }
}

/// An element of the enveloping algebra: a finite map words → coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UeaElement {
    terms: BTreeMap<UeaWord, Coefficient>,
}

impl UeaElement {
    pub fn zero() -> UeaElement {
        UeaElement { terms: BTreeMap::new() }
    }

    pub fn one() -> UeaElement {
        UeaElement::from_term(UeaWord::unit(), Coefficient::one())
    }

    pub fn scalar(c: Coefficient) -> UeaElement {
        UeaElement::from_term(UeaWord::unit(), c)
    }

    pub fn from_word(w: UeaWord) -> UeaElement {
        UeaElement::from_term(w, Coefficient::one())
    }

    pub fn from_term(w: UeaWord, c: Coefficient) -> UeaElement {
        let mut e = UeaElement::zero();
        e.add_term(w, c);
        e
    }

    /// Embeds an algebra element as a combination of length-1 words.
    pub fn from_algebra_element(e: &AlgebraElement) -> UeaElement {
        e.iter().map(|(s, c)| (UeaWord::letter(s), c.clone())).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&UeaWord, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &UeaWord) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add_term(&mut self, w: UeaWord, c: Coefficient) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &UeaElement, k: &Coefficient) {
        for (w, c) in other.iter() {
            self.add_term(w.clone(), c * k);
        }
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::one());
        out
    }

    pub fn sub(&self, other: &UeaElement) -> UeaElement {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::from_int(-1));
        out
    }

    pub fn neg(&self) -> UeaElement {
        self.scale(&Coefficient::from_int(-1))
    }

    pub fn scale(&self, k: &Coefficient) -> UeaElement {
        let mut out = UeaElement::zero();
        out.add_scaled(self, k);
        out
    }
}

impl FromIterator<(UeaWord, Coefficient)> for UeaElement {
    fn from_iter<T: IntoIterator<Item = (UeaWord, Coefficient)>>(iter: T) -> Self {
        let mut e = UeaElement::zero();
        for (w, c) in iter {
            e.add_term(w, c);
        }
        e
    }
}

/// Which reducible pair a normalization step picks first. The two
/// strategies must agree on results; the confluence tests compare them.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum UeaError {
    #[error("word of length {len} exceeds the word cap {cap}")]
    WordTooLong { len: usize, cap: usize },
    #[error("word refers to symbol {0} outside the algebra basis")]
    UnknownSymbol(SymbolId),
}

/// Straightening context: an algebra together with a word-length cap.
#[derive(Clone, Debug)]
pub struct Enveloping<'a> {
    alg: &'a ColorAlgebra,
    word_cap: usize,
}

impl<'a> Enveloping<'a> {
    pub fn new(alg: &'a ColorAlgebra) -> Enveloping<'a> {
        Enveloping { alg, word_cap: DEFAULT_WORD_CAP }
    }

    pub fn with_word_cap(alg: &'a ColorAlgebra, word_cap: usize) -> Enveloping<'a> {
        Enveloping { alg, word_cap }
    }

    pub fn algebra(&self) -> &ColorAlgebra {
        self.alg
    }

    pub fn word_cap(&self) -> usize {
        self.word_cap
    }

    /// Sum of the letter grades; the empty word has grade `(0,0)`.
    pub fn word_grade(&self, w: &UeaWord) -> Grade {
        w.letters().iter().fold(Grade::ZERO, |g, &s| g + self.alg.grade_of(s))
    }

    fn check_word(&self, w: &UeaWord) -> Result<(), UeaError> {
        if w.len() > self.word_cap {
            return Err(UeaError::WordTooLong { len: w.len(), cap: self.word_cap });
        }
        for &s in w.letters() {
            if !self.alg.contains(s) {
                return Err(UeaError::UnknownSymbol(s));
            }
        }
        Ok(())
    }

    fn reducible_at(&self, w: &UeaWord, i: usize) -> bool {
        let (y, x) = (w.letters()[i], w.letters()[i + 1]);
        if y > x {
            return true;
        }
        y == x && theta_sign(self.alg.grade_of(y), self.alg.grade_of(y)) == -1
    }

    fn find_reducible(&self, w: &UeaWord, strategy: Strategy) -> Option<usize> {
        if w.len() < 2 {
            return None;
        }
        let positions = 0..w.len() - 1;
        match strategy {
            Strategy::Leftmost => positions.clone().find(|&i| self.reducible_at(w, i)),
            Strategy::Rightmost => positions.clone().rev().find(|&i| self.reducible_at(w, i)),
        }
    }

    /// Fully straightens an element. Idempotent.
    pub fn normalize(&self, e: &UeaElement) -> Result<UeaElement, UeaError> {
        self.normalize_with(e, Strategy::Leftmost)
    }

    pub fn normalize_with(&self, e: &UeaElement, strategy: Strategy) -> Result<UeaElement, UeaError> {
        for (w, _) in e.iter() {
            self.check_word(w)?;
        }
        let mut result = UeaElement::zero();
        let mut queue: Vec<(UeaWord, Coefficient)> =
            e.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        let half = Coefficient::ratio(1, 2);
        while let Some((w, c)) = queue.pop() {
            if c.is_zero() {
                continue;
            }
            let Some(i) = self.find_reducible(&w, strategy) else {
                result.add_term(w, c);
                continue;
            };
            let (y, x) = (w.letters()[i], w.letters()[i + 1]);
            if y == x {
                // y·y = ½⟨y,y⟩ in the θ(deg y, deg y) = −1 case
                for (s, bc) in self.alg.bracket_symbols(y, y).iter() {
                    queue.push((w.splice_pair(i, &[s]), &c * bc * &half));
                }
            } else {
                let t = theta(self.alg.grade_of(y), self.alg.grade_of(x));
                queue.push((w.swapped(i), &c * &t));
                for (s, bc) in self.alg.bracket_symbols(y, x).iter() {
                    queue.push((w.splice_pair(i, &[s]), &c * bc));
                }
            }
        }
        Ok(result)
    }

    /// Concatenation product followed by straightening.
    pub fn multiply(&self, a: &UeaElement, b: &UeaElement) -> Result<UeaElement, UeaError> {
        let mut product = UeaElement::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                let w = wa.concat(wb);
                if w.len() > self.word_cap {
                    return Err(UeaError::WordTooLong { len: w.len(), cap: self.word_cap });
                }
                product.add_term(w, ca * cb);
            }
        }
        self.normalize(&product)
    }

    /// All normal-form words of length at most `max_len`, in length-then-lex
    /// order: non-decreasing words with no reducible square.
    pub fn normal_words(&self, max_len: usize) -> Vec<UeaWord> {
        let mut out = vec![UeaWord::unit()];
        let mut layer: Vec<Vec<SymbolId>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for stem in &layer {
                let start = stem.last().map_or(0, |s| s.0);
                for id in start..self.alg.dimension() {
                    let s = SymbolId(id);
                    if stem.last() == Some(&s) && self.reducible_square(s) {
                        continue;
                    }
                    let mut word = stem.clone();
                    word.push(s);
                    out.push(UeaWord::from_letters(word.clone()));
                    next.push(word);
                }
            }
            layer = next;
        }
        out
    }

    fn reducible_square(&self, s: SymbolId) -> bool {
        theta_sign(self.alg.grade_of(s), self.alg.grade_of(s)) == -1
    }

    /// Renders an element with the algebra's symbol names.
    pub fn display_element(&self, e: &'a UeaElement) -> UeaElementDisplay<'a> {
        UeaElementDisplay { alg: self.alg, element: e }
    }
}

pub struct UeaElementDisplay<'a> {
    alg: &'a ColorAlgebra,
    element: &'a UeaElement,
}

impl fmt::Display for UeaElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.element.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word = if w.is_empty() {
                "1".to_string()
            } else {
                w.letters()
                    .iter()
                    .map(|&s| self.alg.symbol_name(s).to_string())
                    .collect::<Vec<_>>()
                    .join("·")
            };
            if c.is_one() && !w.is_empty() {
                write!(f, "{word}")?;
            } else {
                write!(f, "({c})·{word}")?;
            }
        }
        Ok(())
    }
}
