//! The θ-braided tensor product and the braided Hopf maps Δ, ε, S.
//!
//! The tensor square of the enveloping algebra carries the product
//!
//! ```text
//! (x ⊗ y)(z ⊗ w) = θ(deg y, deg z) · xz ⊗ yw
//! ```
//!
//! with the crossing factor evaluated on homogeneous middle slots. Every
//! word is homogeneous (its grade is the sum of its letter grades, which
//! rewriting preserves), so tensor terms are multiplied termwise and the
//! factors kept in normal form.
//!
//! On generators `Δ(x) = 1⊗x + x⊗1`, `S(x) = −x`, `ε(x) = 0`; Δ extends as
//! a braided algebra map, S as a braided antihomomorphism
//! `S(xy) = θ(deg x, deg y) S(y) S(x)`, and ε as the coefficient of the
//! empty word (the algebra map forced by the counit axiom). Equality of
//! enveloping-algebra elements is equality of normal forms throughout.

use std::collections::BTreeMap;

use crate::coeff::Coefficient;
use crate::colorlie::ColorAlgebra;
use crate::grade::{theta, Grade};
use crate::uea::{Enveloping, UeaElement, UeaError, UeaWord};

/// An element of the braided tensor square; both factors are normal forms.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TensorElement {
    terms: BTreeMap<(UeaWord, UeaWord), Coefficient>,
}

impl TensorElement {
    pub fn zero() -> TensorElement {
        TensorElement { terms: BTreeMap::new() }
    }

    /// `1 ⊗ 1`.
    pub fn unit() -> TensorElement {
        TensorElement::from_term(UeaWord::unit(), UeaWord::unit(), Coefficient::one())
    }

    pub fn from_term(left: UeaWord, right: UeaWord, c: Coefficient) -> TensorElement {
        let mut t = TensorElement::zero();
        t.add_term(left, right, c);
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(UeaWord, UeaWord), &Coefficient)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, left: UeaWord, right: UeaWord, c: Coefficient) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
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

    pub fn add_scaled(&mut self, other: &TensorElement, k: &Coefficient) {
        for ((l, r), c) in other.iter() {
            self.add_term(l.clone(), r.clone(), c * k);
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::from_int(-1));
        out
    }
}

/// Triple tensors, used to compare the two coassociativity composites.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TripleTensor {
    terms: BTreeMap<(UeaWord, UeaWord, UeaWord), Coefficient>,
}

impl TripleTensor {
    fn add_term(&mut self, key: (UeaWord, UeaWord, UeaWord), c: Coefficient) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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
}

/// The commutation factor driving the tensor crossing and the antipode
/// twist. `standard()` is θ itself; `with_flip` negates it on one unordered
/// grade pair, a deliberately wrong braiding used for fault injection.
#[derive(Clone, Copy, Debug, Default)]
pub struct CommutationFactor {
    flipped: Option<(Grade, Grade)>,
}

impl CommutationFactor {
    pub fn standard() -> CommutationFactor {
        CommutationFactor { flipped: None }
    }

    pub fn with_flip(a: Grade, b: Grade) -> CommutationFactor {
        CommutationFactor { flipped: Some((a, b)) }
    }

    pub fn value(&self, a: Grade, b: Grade) -> Coefficient {
        let base = theta(a, b);
        match self.flipped {
            Some((fa, fb)) if (a, b) == (fa, fb) || (a, b) == (fb, fa) => -base,
            _ => base,
        }
    }
}

/// Outcome of the Hopf axiom suite.
#[derive(Clone, Debug, Default)]
pub struct HopfOutcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl HopfOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

/// Braided Hopf structure maps over the enveloping algebra of `alg`.
#[derive(Clone, Debug)]
pub struct BraidedHopf<'a> {
    uea: Enveloping<'a>,
    braiding: CommutationFactor,
}

impl<'a> BraidedHopf<'a> {
    pub fn new(alg: &'a ColorAlgebra) -> BraidedHopf<'a> {
        BraidedHopf { uea: Enveloping::new(alg), braiding: CommutationFactor::standard() }
    }

    pub fn with_word_cap(alg: &'a ColorAlgebra, cap: usize) -> BraidedHopf<'a> {
        BraidedHopf {
            uea: Enveloping::with_word_cap(alg, cap),
            braiding: CommutationFactor::standard(),
        }
    }

    pub fn with_braiding(alg: &'a ColorAlgebra, braiding: CommutationFactor) -> BraidedHopf<'a> {
        BraidedHopf { uea: Enveloping::new(alg), braiding }
    }

    pub fn uea(&self) -> &Enveloping<'a> {
        &self.uea
    }

    /// The braided product on the tensor square, factors normalized.
    pub fn braided_multiply(
        &self,
        t1: &TensorElement,
        t2: &TensorElement,
    ) -> Result<TensorElement, UeaError> {
        let mut out = TensorElement::zero();
        for ((x, y), c1) in t1.iter() {
            for ((z, w), c2) in t2.iter() {
                let crossing = self.braiding.value(self.uea.word_grade(y), self.uea.word_grade(z));
                let left = self
                    .uea
                    .multiply(&UeaElement::from_word(x.clone()), &UeaElement::from_word(z.clone()))?;
                let right = self
                    .uea
                    .multiply(&UeaElement::from_word(y.clone()), &UeaElement::from_word(w.clone()))?;
                let scale = c1 * c2 * crossing;
                for (lw, lc) in left.iter() {
                    for (rw, rc) in right.iter() {
                        out.add_term(lw.clone(), rw.clone(), &scale * lc * rc);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Δ`: letterwise primitive coproduct multiplied out in the braided
    /// tensor algebra, extended linearly.
    pub fn coproduct(&self, e: &UeaElement) -> Result<TensorElement, UeaError> {
        let mut out = TensorElement::zero();
        for (w, c) in e.iter() {
            let mut t = TensorElement::unit();
            for &letter in w.letters() {
                let mut delta = TensorElement::from_term(
                    UeaWord::unit(),
                    UeaWord::letter(letter),
                    Coefficient::one(),
                );
                delta.add_term(UeaWord::letter(letter), UeaWord::unit(), Coefficient::one());
                t = self.braided_multiply(&t, &delta)?;
            }
            out.add_scaled(&t, c);
        }
        Ok(out)
    }

    /// `1 ⊗ e + e ⊗ 1`, what Δ of a primitive element looks like.
    pub fn primitive_coproduct(&self, e: &UeaElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, c) in e.iter() {
            out.add_term(UeaWord::unit(), w.clone(), c.clone());
            out.add_term(w.clone(), UeaWord::unit(), c.clone());
        }
        out
    }

    /// `S`: `−id` on letters, extended by the braided antihomomorphism rule
    /// and normalized.
    pub fn antipode(&self, e: &UeaElement) -> Result<UeaElement, UeaError> {
        let mut out = UeaElement::zero();
        for (w, c) in e.iter() {
            out.add_scaled(&self.antipode_word(w.letters())?, c);
        }
        self.uea.normalize(&out)
    }

    fn antipode_word(&self, letters: &[crate::symbol::SymbolId]) -> Result<UeaElement, UeaError> {
        match letters {
            [] => Ok(UeaElement::one()),
            [s] => Ok(UeaElement::from_term(UeaWord::letter(*s), Coefficient::from_int(-1))),
            [first, rest @ ..] => {
                let rest_grade =
                    rest.iter().fold(Grade::ZERO, |g, &s| g + self.uea.algebra().grade_of(s));
                let twist = self.braiding.value(self.uea.algebra().grade_of(*first), rest_grade);
                let s_rest = self.antipode_word(rest)?;
                let s_first = self.antipode_word(&[*first])?;
                Ok(self.uea.multiply(&s_rest, &s_first)?.scale(&twist))
            }
        }
    }

    /// `ε`: the coefficient of the empty word.
    pub fn counit(&self, e: &UeaElement) -> Coefficient {
        e.coefficient(&UeaWord::unit())
    }

    fn delta_on_left(&self, t: &TensorElement) -> Result<TripleTensor, UeaError> {
        let mut out = TripleTensor::default();
        for ((u, v), c) in t.iter() {
            for ((u1, u2), cu) in self.coproduct(&UeaElement::from_word(u.clone()))?.iter() {
                out.add_term((u1.clone(), u2.clone(), v.clone()), c * cu);
            }
        }
        Ok(out)
    }

    fn delta_on_right(&self, t: &TensorElement) -> Result<TripleTensor, UeaError> {
        let mut out = TripleTensor::default();
        for ((u, v), c) in t.iter() {
            for ((v1, v2), cv) in self.coproduct(&UeaElement::from_word(v.clone()))?.iter() {
                out.add_term((u.clone(), v1.clone(), v2.clone()), c * cv);
            }
        }
        Ok(out)
    }

    fn counit_left(&self, t: &TensorElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for ((u, v), c) in t.iter() {
            if u.is_empty() {
                out.add_term(v.clone(), c.clone());
            }
        }
        out
    }

    fn counit_right(&self, t: &TensorElement) -> UeaElement {
        let mut out = UeaElement::zero();
        for ((u, v), c) in t.iter() {
            if v.is_empty() {
                out.add_term(u.clone(), c.clone());
            }
        }
        out
    }

    /// `m(S⊗id)Δ` applied to one tensor, or `m(id⊗S)Δ` when `s_on_right`.
    fn antipode_composite(
        &self,
        t: &TensorElement,
        s_on_right: bool,
    ) -> Result<UeaElement, UeaError> {
        let mut out = UeaElement::zero();
        for ((u, v), c) in t.iter() {
            let (left, right) = if s_on_right {
                (
                    UeaElement::from_word(u.clone()),
                    self.antipode(&UeaElement::from_word(v.clone()))?,
                )
            } else {
                (
                    self.antipode(&UeaElement::from_word(u.clone()))?,
                    UeaElement::from_word(v.clone()),
                )
            };
            out.add_scaled(&self.uea.multiply(&left, &right)?, c);
        }
        Ok(out)
    }

    /// The full axiom suite over all normal-form words up to `max_len`:
    /// coassociativity, the counit laws, both antipode composites, and
    /// compatibility of Δ and S with every defining relation.
    pub fn check_axioms(&self, max_len: usize) -> Result<HopfOutcome, UeaError> {
        let mut outcome = HopfOutcome::default();
        let alg = self.uea.algebra();

        for w in self.uea.normal_words(max_len) {
            let name = || {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.letters()
                        .iter()
                        .map(|&s| alg.symbol_name(s).to_string())
                        .collect::<Vec<_>>()
                        .join("·")
                }
            };
            let e = UeaElement::from_word(w.clone());
            let delta = self.coproduct(&e)?;

            let left = self.delta_on_left(&delta)?;
            let right = self.delta_on_right(&delta)?;
            outcome.record(left == right, || format!("coassociativity fails on {}", name()));

            outcome.record(self.counit_left(&delta) == e, || {
                format!("left counit law fails on {}", name())
            });
            outcome.record(self.counit_right(&delta) == e, || {
                format!("right counit law fails on {}", name())
            });

            let target = UeaElement::scalar(self.counit(&e));
            let s_left = self.antipode_composite(&delta, false)?;
            outcome
                .record(s_left == target, || format!("antipode law m(S⊗id)Δ fails on {}", name()));
            let s_right = self.antipode_composite(&delta, true)?;
            outcome
                .record(s_right == target, || format!("antipode law m(id⊗S)Δ fails on {}", name()));
        }

        // relation compatibility: Δ and S kill xy − θ(x,y)yx − ⟨x,y⟩
        for x in alg.symbols() {
            for y in alg.symbols() {
                let mut rel = UeaElement::zero();
                rel.add_term(UeaWord::from_letters(vec![x, y]), Coefficient::one());
                rel.add_term(
                    UeaWord::from_letters(vec![y, x]),
                    -theta(alg.grade_of(x), alg.grade_of(y)),
                );
                rel.add_scaled(
                    &UeaElement::from_algebra_element(&alg.bracket_symbols(x, y)),
                    &Coefficient::from_int(-1),
                );
                let pair = || format!("({}, {})", alg.symbol_name(x), alg.symbol_name(y));
                outcome.record(self.coproduct(&rel)?.is_zero(), || {
                    format!("Δ does not kill the defining relation of {}", pair())
                });
                outcome.record(self.antipode(&rel)?.is_zero(), || {
                    format!("S does not kill the defining relation of {}", pair())
                });
            }
        }
        Ok(outcome)
    }
}
