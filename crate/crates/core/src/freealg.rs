//! Free associative noncommutative polynomials over abstract symbols.
//!
//! Words are kept fully expanded; a polynomial is a finite map from words
//! to exact coefficients with no stored zeros. This is the engine behind
//! the four quadruple-bracket identities that reduce brackets of bilinears
//! to trilinear expressions:
//!
//! ```text
//! {{a1,a2},{a3,a4}} = {a1,{a2,{a3,a4}}} + [a2,[a1,{a3,a4}]]
//! [{a1,a2},[a3,a4]] = {a1,[a2,[a3,a4]]} + {a2,[a1,[a3,a4]]}
//! [{a1,a2},{a3,a4}] = {a1,[a2,{a3,a4}]} + {a2,[a1,{a3,a4}]}
//! [[a1,a2],[a3,a4]] = [a1,[a2,[a3,a4]]] − [a2,[a1,[a3,a4]]]
//! ```
//!
//! which hold identically for any associative variables.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Coefficient;
use crate::symbol::{SymbolId, SymbolTable};

/// A word in the free monoid; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FreeWord {
    letters: Vec<SymbolId>,
}

impl FreeWord {
    pub fn unit() -> FreeWord {
        FreeWord { letters: Vec::new() }
    }

    pub fn letter(s: SymbolId) -> FreeWord {
        FreeWord { letters: vec![s] }
    }

    pub fn from_letters(letters: impl Into<Vec<SymbolId>>) -> FreeWord {
        FreeWord { letters: letters.into() }
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[SymbolId] {
        &self.letters
    }
}

/// A polynomial in the free associative algebra.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FreePoly {
    terms: BTreeMap<FreeWord, Coefficient>,
}

impl FreePoly {
    pub fn zero() -> FreePoly {
        FreePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> FreePoly {
        FreePoly::from_term(FreeWord::unit(), Coefficient::one())
    }

    pub fn symbol(s: SymbolId) -> FreePoly {
        FreePoly::from_term(FreeWord::letter(s), Coefficient::one())
    }

    pub fn from_term(word: FreeWord, coeff: Coefficient) -> FreePoly {
        let mut p = FreePoly::zero();
        p.add_term(word, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &Coefficient)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, word: FreeWord, coeff: Coefficient) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FreePoly) -> FreePoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> FreePoly {
        let mut out = FreePoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn scale(&self, k: &Coefficient) -> FreePoly {
        let mut out = FreePoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca * cb);
            }
        }
        out
    }

    /// Renders the polynomial with names from `table`.
    pub fn display<'a>(&'a self, table: &'a SymbolTable) -> FreePolyDisplay<'a> {
        FreePolyDisplay { poly: self, table }
    }
}

pub struct FreePolyDisplay<'a> {
    poly: &'a FreePoly,
    table: &'a SymbolTable,
}

impl fmt::Display for FreePolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (word, coeff) in self.poly.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let word_str = if word.is_empty() {
                "1".to_string()
            } else {
                word.letters()
                    .iter()
                    .map(|&s| self.table.name(s).to_string())
                    .collect::<Vec<_>>()
                    .join("·")
            };
            if coeff.is_one() && !word.is_empty() {
                write!(f, "{word_str}")?;
            } else {
                write!(f, "({coeff})·{word_str}")?;
            }
        }
        Ok(())
    }
}

/// `xy − yx`.
pub fn commutator(x: &FreePoly, y: &FreePoly) -> FreePoly {
    x.mul(y).sub(&y.mul(x))
}

/// `xy + yx`.
pub fn anticommutator(x: &FreePoly, y: &FreePoly) -> FreePoly {
    x.mul(y).add(&y.mul(x))
}

/// One quadruple-bracket identity, expanded on both sides.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub description: &'static str,
    pub lhs: FreePoly,
    pub rhs: FreePoly,
}

impl IdentityCheck {
    pub fn residual(&self) -> FreePoly {
        self.lhs.sub(&self.rhs)
    }

    pub fn holds(&self) -> bool {
        self.residual().is_zero()
    }
}

/// Expands the four quadruple-bracket identities over four free symbols.
///
/// The substitution argument allows degenerate checks such as `a1 = a2`;
/// `None` uses four distinct symbols.
pub fn quadruple_identity_checks_on(vars: [&FreePoly; 4]) -> Vec<IdentityCheck> {
    let [a1, a2, a3, a4] = vars;
    let anti = anticommutator;
    let comm = commutator;
    vec![
        IdentityCheck {
            description: "{{a1,a2},{a3,a4}} = {a1,{a2,{a3,a4}}} + [a2,[a1,{a3,a4}]]",
            lhs: anti(&anti(a1, a2), &anti(a3, a4)),
            rhs: anti(a1, &anti(a2, &anti(a3, a4))).add(&comm(a2, &comm(a1, &anti(a3, a4)))),
        },
        IdentityCheck {
            description: "[{a1,a2},[a3,a4]] = {a1,[a2,[a3,a4]]} + {a2,[a1,[a3,a4]]}",
            lhs: comm(&anti(a1, a2), &comm(a3, a4)),
            rhs: anti(a1, &comm(a2, &comm(a3, a4))).add(&anti(a2, &comm(a1, &comm(a3, a4)))),
        },
        IdentityCheck {
            description: "[{a1,a2},{a3,a4}] = {a1,[a2,{a3,a4}]} + {a2,[a1,{a3,a4}]}",
            lhs: comm(&anti(a1, a2), &anti(a3, a4)),
            rhs: anti(a1, &comm(a2, &anti(a3, a4))).add(&anti(a2, &comm(a1, &anti(a3, a4)))),
        },
        IdentityCheck {
            description: "[[a1,a2],[a3,a4]] = [a1,[a2,[a3,a4]]] - [a2,[a1,[a3,a4]]]",
            lhs: comm(&comm(a1, a2), &comm(a3, a4)),
            rhs: comm(a1, &comm(a2, &comm(a3, a4))).sub(&comm(a2, &comm(a1, &comm(a3, a4)))),
        },
    ]
}

/// Expands the four identities over four distinct free symbols.
pub fn verify_quadruple_identities() -> Vec<IdentityCheck> {
    let mut table = SymbolTable::new();
    let syms: Vec<FreePoly> =
        ["a1", "a2", "a3", "a4"].iter().map(|n| FreePoly::symbol(table.intern(*n))).collect();
    quadruple_identity_checks_on([&syms[0], &syms[1], &syms[2], &syms[3]])
}
