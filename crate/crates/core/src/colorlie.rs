//! Finite-dimensional θ-colored ℤ₂×ℤ₂-graded Lie algebras given by
//! structure constants, with an exhaustive axiom-verification suite.
//!
//! An algebra is a graded basis plus a bracket table `⟨x, y⟩` stored for
//! ordered pairs of basis symbols (absent entries are zero). The three
//! axiom checks are exhaustive over basis tuples rather than sampled: the
//! claims being tested are identities, and desk-scale dimensions make
//! O(dim³) exact arithmetic cheap.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::Coefficient;
use crate::grade::{theta, theta_sign, Grade};
use crate::symbol::SymbolId;

/// A vector of the algebra: a finite map from basis symbols to coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct AlgebraElement {
    components: BTreeMap<SymbolId, Coefficient>,
}

impl AlgebraElement {
    pub fn zero() -> AlgebraElement {
        AlgebraElement { components: BTreeMap::new() }
    }

    pub fn from_symbol(s: SymbolId) -> AlgebraElement {
        AlgebraElement::from_term(s, Coefficient::one())
    }

    pub fn from_term(s: SymbolId, c: Coefficient) -> AlgebraElement {
        let mut e = AlgebraElement::zero();
        e.add_term(s, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (SymbolId, &Coefficient)> {
        self.components.iter().map(|(s, c)| (*s, c))
    }

    pub fn num_terms(&self) -> usize {
        self.components.len()
    }

    pub fn coefficient(&self, s: SymbolId) -> Coefficient {
        self.components.get(&s).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn add_term(&mut self, s: SymbolId, c: Coefficient) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.components.entry(s) {
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

    pub fn add_scaled(&mut self, other: &AlgebraElement, k: &Coefficient) {
        for (s, c) in other.iter() {
            self.add_term(s, c * k);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::one());
        out
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::from_int(-1));
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&Coefficient::from_int(-1))
    }

    pub fn scale(&self, k: &Coefficient) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        out.add_scaled(self, k);
        out
    }
}

impl FromIterator<(SymbolId, Coefficient)> for AlgebraElement {
    fn from_iter<T: IntoIterator<Item = (SymbolId, Coefficient)>>(iter: T) -> Self {
        let mut e = AlgebraElement::zero();
        for (s, c) in iter {
            e.add_term(s, c);
        }
        e
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("symbol {0} is not part of the algebra basis")]
    UnknownSymbol(SymbolId),
    #[error("symbol named {0:?} is not part of the algebra basis")]
    UnknownSymbolName(String),
}

/// A θ-colored ℤ₂×ℤ₂-graded Lie algebra presented by structure constants.
#[derive(Clone, Debug)]
pub struct ColorAlgebra {
    name: String,
    symbol_names: Vec<String>,
    grades: Vec<Grade>,
    table: BTreeMap<(SymbolId, SymbolId), AlgebraElement>,
}

impl ColorAlgebra {
    pub fn new(name: impl Into<String>) -> ColorAlgebra {
        ColorAlgebra {
            name: name.into(),
            symbol_names: Vec::new(),
            grades: Vec::new(),
            table: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dimension(&self) -> usize {
        self.grades.len()
    }

    pub fn add_symbol(&mut self, name: impl Into<String>, grade: Grade) -> SymbolId {
        self.symbol_names.push(name.into());
        self.grades.push(grade);
        SymbolId(self.grades.len() - 1)
    }

    pub fn symbols(&self) -> impl Iterator<Item = SymbolId> {
        (0..self.dimension()).map(SymbolId)
    }

    pub fn contains(&self, s: SymbolId) -> bool {
        s.0 < self.dimension()
    }

    pub fn grade_of(&self, s: SymbolId) -> Grade {
        self.grades[s.0]
    }

    pub fn symbol_name(&self, s: SymbolId) -> &str {
        &self.symbol_names[s.0]
    }

    pub fn symbol_by_name(&self, name: &str) -> Option<SymbolId> {
        self.symbol_names.iter().position(|n| n == name).map(SymbolId)
    }

    /// Installs `⟨x, y⟩`; a zero element clears the entry.
    pub fn set_bracket(
        &mut self,
        x: SymbolId,
        y: SymbolId,
        value: AlgebraElement,
    ) -> Result<(), AlgebraError> {
        self.check_symbol(x)?;
        self.check_symbol(y)?;
        for (s, _) in value.iter() {
            self.check_symbol(s)?;
        }
        if value.is_zero() {
            self.table.remove(&(x, y));
        } else {
            self.table.insert((x, y), value);
        }
        Ok(())
    }

    fn check_symbol(&self, s: SymbolId) -> Result<(), AlgebraError> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(AlgebraError::UnknownSymbol(s))
        }
    }

    /// `⟨x, y⟩` for basis symbols; zero when no entry is stored.
    pub fn bracket_symbols(&self, x: SymbolId, y: SymbolId) -> AlgebraElement {
        self.table.get(&(x, y)).cloned().unwrap_or_else(AlgebraElement::zero)
    }

    pub fn table_entries(&self) -> impl Iterator<Item = (SymbolId, SymbolId, &AlgebraElement)> {
        self.table.iter().map(|(&(x, y), e)| (x, y, e))
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        for (s, _) in x.iter().chain(y.iter()) {
            self.check_symbol(s)?;
        }
        let mut out = AlgebraElement::zero();
        for (sx, cx) in x.iter() {
            for (sy, cy) in y.iter() {
                if let Some(entry) = self.table.get(&(sx, sy)) {
                    out.add_scaled(entry, &(cx * cy));
                }
            }
        }
        Ok(out)
    }

    /// Renders an element with this algebra's symbol names.
    pub fn display_element<'a>(&'a self, e: &'a AlgebraElement) -> ElementDisplay<'a> {
        ElementDisplay { alg: self, element: e }
    }

    /// Verifies grade-additivity of every table entry.
    pub fn check_grading(&self) -> CheckOutcome {
        let mut outcome = CheckOutcome::default();
        for (x, y, entry) in self.table_entries() {
            outcome.checked += 1;
            let want = self.grade_of(x) + self.grade_of(y);
            for (s, c) in entry.iter() {
                if self.grade_of(s) != want {
                    outcome.violations.push(Violation {
                        tuple: vec![x, y, s],
                        residual: AlgebraElement::from_term(s, c.clone()),
                        detail: format!(
                            "component {} of grade {} in a bracket of grade {}",
                            self.symbol_name(s),
                            self.grade_of(s),
                            want
                        ),
                    });
                }
            }
        }
        outcome
    }

    /// Verifies `⟨x,y⟩ + θ(a,b)⟨y,x⟩ = 0` over unordered basis pairs.
    pub fn check_antisymmetry(&self) -> CheckOutcome {
        let mut outcome = CheckOutcome::default();
        for x in self.symbols() {
            for y in self.symbols().skip(x.0) {
                outcome.checked += 1;
                let t = theta(self.grade_of(x), self.grade_of(y));
                let mut residual = self.bracket_symbols(x, y);
                residual.add_scaled(&self.bracket_symbols(y, x), &t);
                if !residual.is_zero() {
                    let detail = format!(
                        "antisymmetry fails on ({}, {})",
                        self.symbol_name(x),
                        self.symbol_name(y)
                    );
                    outcome.violations.push(Violation { tuple: vec![x, y], residual, detail });
                }
            }
        }
        outcome
    }

    /// Verifies the braided Jacobi identity over all ordered basis triples:
    /// `θ(c,a)⟨x,⟨y,z⟩⟩ + θ(b,c)⟨z,⟨x,y⟩⟩ + θ(a,b)⟨y,⟨z,x⟩⟩ = 0`.
    pub fn check_jacobi(&self) -> CheckOutcome {
        let mut outcome = CheckOutcome::default();
        for x in self.symbols() {
            let a = self.grade_of(x);
            for y in self.symbols() {
                let b = self.grade_of(y);
                for z in self.symbols() {
                    let c = self.grade_of(z);
                    outcome.checked += 1;
                    let mut residual = AlgebraElement::zero();
                    residual.add_scaled(
                        &self.nested_bracket(x, &self.bracket_symbols(y, z)),
                        &theta(c, a),
                    );
                    residual.add_scaled(
                        &self.nested_bracket(z, &self.bracket_symbols(x, y)),
                        &theta(b, c),
                    );
                    residual.add_scaled(
                        &self.nested_bracket(y, &self.bracket_symbols(z, x)),
                        &theta(a, b),
                    );
                    if !residual.is_zero() {
                        let detail = format!(
                            "Jacobi residual on ({}, {}, {})",
                            self.symbol_name(x),
                            self.symbol_name(y),
                            self.symbol_name(z)
                        );
                        outcome.violations.push(Violation { tuple: vec![x, y, z], residual, detail });
                    }
                }
            }
        }
        outcome
    }

    fn nested_bracket(&self, x: SymbolId, inner: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (s, c) in inner.iter() {
            if let Some(entry) = self.table.get(&(x, s)) {
                out.add_scaled(entry, c);
            }
        }
        out
    }

    /// Restriction to the symbols of the listed grades.
    ///
    /// Fails if some bracket of kept symbols leaves their span: the
    /// restriction is only an algebra when the grade set is bracket-closed.
    pub fn restrict_to_grades(&self, keep: &[Grade]) -> Result<Restriction, RestrictError> {
        let mut sub = ColorAlgebra::new(format!("{} | grades restricted", self.name));
        let mut to_sub = BTreeMap::new();
        for s in self.symbols() {
            if keep.contains(&self.grade_of(s)) {
                let id = sub.add_symbol(self.symbol_name(s), self.grade_of(s));
                to_sub.insert(s, id);
            }
        }
        for (x, y, entry) in self.table_entries() {
            let (Some(&sx), Some(&sy)) = (to_sub.get(&x), to_sub.get(&y)) else {
                continue;
            };
            let mut image = AlgebraElement::zero();
            for (s, c) in entry.iter() {
                match to_sub.get(&s) {
                    Some(&ss) => image.add_term(ss, c.clone()),
                    None => {
                        return Err(RestrictError::NotClosed {
                            left: self.symbol_name(x).to_string(),
                            right: self.symbol_name(y).to_string(),
                            escapes: self.symbol_name(s).to_string(),
                        })
                    }
                }
            }
            sub.set_bracket(sx, sy, image).expect("restricted symbols are present");
        }
        Ok(Restriction { algebra: sub, to_sub })
    }
}

/// Result of [`ColorAlgebra::restrict_to_grades`].
#[derive(Clone, Debug)]
pub struct Restriction {
    pub algebra: ColorAlgebra,
    /// Parent symbol id → restricted symbol id.
    pub to_sub: BTreeMap<SymbolId, SymbolId>,
}

impl Restriction {
    /// Maps an element of the parent algebra into the restriction.
    pub fn map_element(&self, e: &AlgebraElement) -> Result<AlgebraElement, RestrictError> {
        let mut out = AlgebraElement::zero();
        for (s, c) in e.iter() {
            match self.to_sub.get(&s) {
                Some(&ss) => out.add_term(ss, c.clone()),
                None => return Err(RestrictError::OutsideSpan { symbol: format!("{s}") }),
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RestrictError {
    #[error("bracket of ({left}, {right}) escapes the restricted span via {escapes}")]
    NotClosed { left: String, right: String, escapes: String },
    #[error("element component {symbol} lies outside the restricted span")]
    OutsideSpan { symbol: String },
}

/// A single axiom violation: the offending tuple plus the exact residual.
#[derive(Clone, Debug)]
pub struct Violation {
    pub tuple: Vec<SymbolId>,
    pub residual: AlgebraElement,
    pub detail: String,
}

/// Outcome of one exhaustive check.
#[derive(Clone, Debug, Default)]
pub struct CheckOutcome {
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub struct ElementDisplay<'a> {
    alg: &'a ColorAlgebra,
    element: &'a AlgebraElement,
}

impl fmt::Display for ElementDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in self.element.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{}", self.alg.symbol_name(s))?;
            } else {
                write!(f, "({})·{}", c, self.alg.symbol_name(s))?;
            }
        }
        Ok(())
    }
}

/// How `⟨x, y⟩` is realized inside the enveloping algebra for grades `a`, `b`:
/// a commutator when `θ(a,b) = +1`, an anticommutator when `θ(a,b) = −1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

pub fn realized_bracket_kind(a: Grade, b: Grade) -> BracketKind {
    if theta_sign(a, b) == 1 {
        BracketKind::Commutator
    } else {
        BracketKind::Anticommutator
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A one-generator abelian algebra.
    fn abelian() -> ColorAlgebra {
        let mut alg = ColorAlgebra::new("abelian");
        alg.add_symbol("x", Grade::new(0, 0));
        alg
    }

    /// The two-symbol super line: one even `h`, one odd `q` with `⟨q,q⟩ = h`.
    fn super_line() -> ColorAlgebra {
        let mut alg = ColorAlgebra::new("super line");
        let h = alg.add_symbol("h", Grade::new(0, 0));
        let q = alg.add_symbol("q", Grade::new(0, 1));
        alg.set_bracket(q, q, AlgebraElement::from_symbol(h)).unwrap();
        alg
    }

    #[test]
    fn empty_and_abelian_algebras_pass_all_checks() {
        for alg in [ColorAlgebra::new("empty"), abelian()] {
            assert!(alg.check_grading().passed());
            assert!(alg.check_antisymmetry().passed());
            assert!(alg.check_jacobi().passed());
        }
    }

    #[test]
    fn super_line_passes_all_checks() {
        let alg = super_line();
        assert!(alg.check_grading().passed());
        assert!(alg.check_antisymmetry().passed());
        assert!(alg.check_jacobi().passed());
    }

    #[test]
    fn bracket_is_bilinear_and_rejects_unknown_symbols() {
        let alg = super_line();
        let q = alg.symbol_by_name("q").unwrap();
        let h = alg.symbol_by_name("h").unwrap();
        let zero = AlgebraElement::zero();
        let q2 = AlgebraElement::from_term(q, Coefficient::from_int(2));
        assert_eq!(alg.bracket(&zero, &q2).unwrap(), zero);
        assert_eq!(
            alg.bracket(&q2, &q2).unwrap(),
            AlgebraElement::from_term(h, Coefficient::from_int(4))
        );
        let bogus = AlgebraElement::from_symbol(SymbolId(17));
        assert_eq!(alg.bracket(&bogus, &q2), Err(AlgebraError::UnknownSymbol(SymbolId(17))));
    }

    #[test]
    fn grading_fault_is_reported() {
        // ⟨x, y⟩ landing in a (1,1)-graded symbol while x, y both have (1,0)
        let mut alg = ColorAlgebra::new("bad grading");
        let x = alg.add_symbol("x", Grade::new(1, 0));
        let y = alg.add_symbol("y", Grade::new(1, 0));
        let w = alg.add_symbol("w", Grade::new(1, 1));
        alg.set_bracket(x, y, AlgebraElement::from_symbol(w)).unwrap();
        let outcome = alg.check_grading();
        assert_eq!(outcome.violations.len(), 1);
        assert_eq!(outcome.violations[0].tuple, vec![x, y, w]);
    }

    #[test]
    fn antisymmetry_flags_exactly_the_corrupted_pair() {
        let mut alg = ColorAlgebra::new("two odd");
        let h = alg.add_symbol("h", Grade::new(0, 0));
        let p = alg.add_symbol("p", Grade::new(0, 1));
        let q = alg.add_symbol("q", Grade::new(0, 1));
        // ⟨p,q⟩ = ⟨q,p⟩ = h is the symmetric (anticommutator) pattern
        alg.set_bracket(p, q, AlgebraElement::from_symbol(h)).unwrap();
        alg.set_bracket(q, p, AlgebraElement::from_symbol(h)).unwrap();
        assert!(alg.check_antisymmetry().passed());

        // flip one sign
        alg.set_bracket(q, p, AlgebraElement::from_symbol(h).neg()).unwrap();
        let outcome = alg.check_antisymmetry();
        assert_eq!(outcome.violations.len(), 1);
        assert_eq!(outcome.violations[0].tuple, vec![p, q]);
    }

    #[test]
    fn diagonal_antisymmetry_requires_vanishing_square_in_commutator_grades(){
        let mut alg = ColorAlgebra::new("bad diagonal");
        let x = alg.add_symbol("x", Grade::new(0, 0));
        alg.set_bracket(x, x, AlgebraElement::from_symbol(x)).unwrap();
        let outcome = alg.check_antisymmetry();
        assert_eq!(outcome.violations.len(), 1);
    }

    #[test]
    fn zero_bracket_satisfies_jacobi() {
        let mut alg = ColorAlgebra::new("three abelian");
        for (k, g) in [(0, Grade::new(1, 0)), (1, Grade::new(1, 1)), (2, Grade::new(0, 1))] {
            alg.add_symbol(format!("x{k}"), g);
        }
        let outcome = alg.check_jacobi();
        assert_eq!(outcome.checked, 27);
        assert!(outcome.passed());
    }

    #[test]
    fn check_results_do_not_depend_on_basis_enumeration_order() {
        let alg = super_line();
        // same algebra with the basis listed in the opposite order
        let mut flipped = ColorAlgebra::new("super line flipped");
        let q = flipped.add_symbol("q", Grade::new(0, 1));
        let h = flipped.add_symbol("h", Grade::new(0, 0));
        flipped.set_bracket(q, q, AlgebraElement::from_symbol(h)).unwrap();
        assert_eq!(alg.check_grading().passed(), flipped.check_grading().passed());
        assert_eq!(alg.check_antisymmetry().passed(), flipped.check_antisymmetry().passed());
        assert_eq!(alg.check_jacobi().passed(), flipped.check_jacobi().passed());
    }

    #[test]
    fn checks_pass_on_a_reversed_copy_of_a_large_algebra() {
        let alg = crate::pbf::PbfAlgebra::build(1, 1).unwrap();
        let exported = alg.exported();
        let dim = exported.dimension();
        // same structure constants with the basis enumerated in reverse
        let mut reversed = ColorAlgebra::new("reversed");
        for id in (0..dim).rev() {
            let s = SymbolId(id);
            reversed.add_symbol(exported.symbol_name(s), exported.grade_of(s));
        }
        let map = |s: SymbolId| SymbolId(dim - 1 - s.0);
        for (x, y, entry) in exported.table_entries() {
            let image: AlgebraElement =
                entry.iter().map(|(s, c)| (map(s), c.clone())).collect();
            reversed.set_bracket(map(x), map(y), image).unwrap();
        }
        assert!(reversed.check_grading().passed());
        assert!(reversed.check_antisymmetry().passed());
        assert!(reversed.check_jacobi().passed());
    }

    #[test]
    fn restriction_reports_closure_violations() {
        let mut alg = ColorAlgebra::new("escaping");
        let x = alg.add_symbol("x", Grade::new(0, 1));
        let b = alg.add_symbol("b", Grade::new(1, 0));
        // not grade-additive, but enough to exercise the closure check
        alg.set_bracket(x, x, AlgebraElement::from_symbol(b)).unwrap();
        let err = alg.restrict_to_grades(&[Grade::new(0, 0), Grade::new(0, 1)]).unwrap_err();
        assert!(matches!(err, RestrictError::NotClosed { .. }));
    }

    #[test]
    fn realized_kind_table() {
        use BracketKind::*;
        assert_eq!(realized_bracket_kind(Grade::new(0, 0), Grade::new(0, 0)), Commutator);
        assert_eq!(realized_bracket_kind(Grade::new(0, 0), Grade::new(0, 1)), Commutator);
        assert_eq!(realized_bracket_kind(Grade::new(0, 1), Grade::new(0, 1)), Anticommutator);
        assert_eq!(realized_bracket_kind(Grade::new(1, 0), Grade::new(1, 0)), Anticommutator);
        assert_eq!(realized_bracket_kind(Grade::new(1, 1), Grade::new(1, 1)), Commutator);
        assert_eq!(realized_bracket_kind(Grade::new(1, 1), Grade::new(1, 0)), Anticommutator);
    }
}
