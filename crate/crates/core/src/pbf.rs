//! The ℤ₂×ℤ₂-color Lie algebra L(m,n) underlying the relative parabose set.
//!
//! The algebra is spanned by paraboson generators `Bk±` (grade `(1,0)`),
//! parafermion generators `Fα±` (grade `(1,1)`), and the canonical
//! bilinears `{B,B}`, `[F,F]` (grade `(0,0)`) and `{F,B}` (grade `(0,1)`).
//! Its color bracket is `⟨x,y⟩ = xy − θ(deg x, deg y)yx`, so a bracket is
//! realized as a commutator when `θ = +1` and as an anticommutator when
//! `θ = −1`.
//!
//! Brackets of a bilinear with a generator come from the defining trilinear
//! relations of the paraboson/parafermion algebras together with the mixed
//! relations of the relative set. Every lookup is derived from one of those
//! listed relations plus canonicalization (`{B,F} = {F,B}`, `{·,·}`
//! unordered, `[·,·]` antisymmetric), never by sign-guessing. Brackets of
//! two bilinears are then expanded with the braided derivation rule
//!
//! ```text
//! ⟨b, ⟨g,h⟩⟩ = ⟨⟨b,g⟩, h⟩ + θ(deg b, deg g) ⟨g, ⟨b,h⟩⟩
//! ```
//!
//! which closes over the canonical basis because `⟨b,g⟩` is a combination
//! of generators.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::Coefficient;
use crate::colorlie::{AlgebraElement, ColorAlgebra, Restriction};
use crate::grade::{theta_sign, Grade};
use crate::symbol::SymbolId;

/// The `±` tag of a ladder generator. `Plus` sorts before `Minus`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// A mode index paired with a sign, e.g. the `(k, ε)` of `B_k^ε`.
pub type ModeSign = (u32, Sign);

/// A canonical basis symbol of L(m,n).
///
/// The derived ordering is the basis order used everywhere: generators
/// first (`B` before `F`, ascending index, `+` before `−`), then the `BB`,
/// `FF`, `FB` blocks.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PbfBasisElement {
    /// Paraboson generator `B_k^ε`.
    GenB(ModeSign),
    /// Parafermion generator `F_α^ε`.
    GenF(ModeSign),
    /// `{B_k^ε, B_l^η}`; the pair is stored sorted (the anticommutator is
    /// symmetric, so sorting is free).
    BB(ModeSign, ModeSign),
    /// `[F_α^ε, F_β^η]`; stored sorted, a swap during canonicalization
    /// contributes a `−1` factor, and equal slots are excluded (zero).
    FF(ModeSign, ModeSign),
    /// `{F_α^ε, B_k^η}`; the parafermion slot always comes first
    /// (`{B,F} = {F,B}`).
    FB(ModeSign, ModeSign),
}

use PbfBasisElement::*;

impl PbfBasisElement {
    pub fn grade(&self) -> Grade {
        match self {
            GenB(_) => Grade::new(1, 0),
            GenF(_) => Grade::new(1, 1),
            BB(_, _) | FF(_, _) => Grade::new(0, 0),
            FB(_, _) => Grade::new(0, 1),
        }
    }

    pub fn is_generator(&self) -> bool {
        matches!(self, GenB(_) | GenF(_))
    }

    pub fn is_bilinear(&self) -> bool {
        !self.is_generator()
    }
}

impl fmt::Display for PbfBasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenB((k, s)) => write!(f, "B{k}{s}"),
            GenF((a, s)) => write!(f, "F{a}{s}"),
            BB((k, s), (l, t)) => write!(f, "{{B{k}{s},B{l}{t}}}"),
            FF((a, s), (b, t)) => write!(f, "[F{a}{s},F{b}{t}]"),
            FB((a, s), (k, t)) => write!(f, "{{F{a}{s},B{k}{t}}}"),
        }
    }
}

/// `{B_p, B_q}` in canonical slot order.
pub fn canonical_bb(p: ModeSign, q: ModeSign) -> PbfBasisElement {
    if p <= q {
        BB(p, q)
    } else {
        BB(q, p)
    }
}

/// `[F_p, F_q]` in canonical slot order with its sign; `None` when zero.
pub fn canonical_ff(p: ModeSign, q: ModeSign) -> Option<(PbfBasisElement, i64)> {
    match p.cmp(&q) {
        std::cmp::Ordering::Less => Some((FF(p, q), 1)),
        std::cmp::Ordering::Equal => None,
        std::cmp::Ordering::Greater => Some((FF(q, p), -1)),
    }
}

/// `{F_f, B_b}` (parafermion slot first).
pub fn canonical_fb(f: ModeSign, b: ModeSign) -> PbfBasisElement {
    FB(f, b)
}

/// A finite linear combination of canonical basis symbols.
pub type Combo = BTreeMap<PbfBasisElement, Coefficient>;

fn combo_add(combo: &mut Combo, elem: PbfBasisElement, coeff: Coefficient) {
    use std::collections::btree_map::Entry;
    if coeff.is_zero() {
        return;
    }
    match combo.entry(elem) {
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

fn combo_add_scaled(combo: &mut Combo, other: &Combo, k: i64) {
    let k = Coefficient::from_int(k);
    for (elem, c) in other {
        combo_add(combo, *elem, c * &k);
    }
}

/// Which family of listed mixed trilinear relations a line belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MixedKind {
    /// `[{B^s1, B^s2}, F^outer]`
    BbWithF,
    /// `[[F^s1, F^s2], B^outer]`
    FfWithB,
    /// `[{F^s1, B^s2}, B^outer]`; a nonzero right side is
    /// `coeff · δ(inner B index, outer B index) · F^s1`.
    FbWithB,
    /// `{{F^s1, B^s2}, F^outer}`; a nonzero right side is
    /// `coeff · δ(inner F index, outer F index) · B^s2`.
    FbWithF,
}

/// One listed mixed trilinear relation of the relative parabose set.
///
/// For `FbWithB`/`FbWithF` lines `s1` is the inner parafermion sign and
/// `s2` the inner paraboson sign, after rewriting `{B,F}` as `{F,B}`
/// where the source lists the paraboson first.
#[derive(Clone, Copy, Debug)]
pub struct MixedRelation {
    pub kind: MixedKind,
    pub s1: Sign,
    pub s2: Sign,
    pub outer: Sign,
    pub coeff: i64,
}

use Sign::{Minus as M, Plus as P};

/// The 28 mixed trilinear relations, in source order.
pub const MIXED_RELATIONS: [MixedRelation; 28] = [
    MixedRelation { kind: MixedKind::BbWithF, s1: P, s2: M, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::BbWithF, s1: M, s2: M, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::BbWithF, s1: P, s2: P, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithB, s1: M, s2: P, outer: M, coeff: -2 },
    MixedRelation { kind: MixedKind::FbWithB, s1: M, s2: M, outer: P, coeff: 2 },
    MixedRelation { kind: MixedKind::BbWithF, s1: M, s2: P, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithB, s1: P, s2: M, outer: P, coeff: 2 },
    MixedRelation { kind: MixedKind::FbWithB, s1: P, s2: P, outer: M, coeff: -2 },
    MixedRelation { kind: MixedKind::FbWithB, s1: M, s2: M, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::BbWithF, s1: P, s2: P, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithB, s1: P, s2: P, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithB, s1: M, s2: P, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::BbWithF, s1: M, s2: M, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithB, s1: P, s2: M, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::FfWithB, s1: P, s2: M, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::FfWithB, s1: M, s2: M, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::FfWithB, s1: P, s2: P, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithF, s1: P, s2: M, outer: M, coeff: 2 },
    MixedRelation { kind: MixedKind::FbWithF, s1: M, s2: M, outer: P, coeff: 2 },
    MixedRelation { kind: MixedKind::FfWithB, s1: M, s2: P, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithF, s1: M, s2: P, outer: P, coeff: 2 },
    MixedRelation { kind: MixedKind::FbWithF, s1: P, s2: P, outer: M, coeff: 2 },
    MixedRelation { kind: MixedKind::FbWithF, s1: M, s2: M, outer: M, coeff: 0 },
    MixedRelation { kind: MixedKind::FfWithB, s1: P, s2: P, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithF, s1: P, s2: P, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithF, s1: P, s2: M, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FfWithB, s1: M, s2: M, outer: P, coeff: 0 },
    MixedRelation { kind: MixedKind::FbWithF, s1: M, s2: P, outer: M, coeff: 0 },
];

/// Finds the listed relation matching a canonical lookup pattern.
///
/// For `BbWithF`/`FfWithB` the inner pair matches as a multiset (the inner
/// bilinear is symmetric resp. antisymmetric with zero right side); for the
/// mixed-pair kinds the match is exact.
pub fn lookup_mixed(kind: MixedKind, s1: Sign, s2: Sign, outer: Sign) -> Option<i64> {
    MIXED_RELATIONS
        .iter()
        .find(|r| {
            r.kind == kind
                && r.outer == outer
                && match kind {
                    MixedKind::BbWithF | MixedKind::FfWithB => {
                        (r.s1, r.s2) == (s1, s2) || (r.s1, r.s2) == (s2, s1)
                    }
                    MixedKind::FbWithB | MixedKind::FbWithF => (r.s1, r.s2) == (s1, s2),
                }
        })
        .map(|r| r.coeff)
}

/// Right side of `[{B_i^ξ, B_j^η}, B_k^ε]` as the pair of integer
/// coefficients on `δ_jk B_i^ξ` and `δ_ik B_j^η`.
pub fn paraboson_rhs(xi: Sign, eta: Sign, eps: Sign) -> (i64, i64) {
    (eps.as_int() - eta.as_int(), eps.as_int() - xi.as_int())
}

/// Right side of `[[F_i^ξ, F_j^η], F_k^ε]` as the pair of integer
/// coefficients on `δ_jk F_i^ξ` and `δ_ik F_j^η`.
pub fn parafermion_rhs(xi: Sign, eta: Sign, eps: Sign) -> (i64, i64) {
    let d1 = eps.as_int() - eta.as_int();
    let d2 = eps.as_int() - xi.as_int();
    (d1 * d1 / 2, -d2 * d2 / 2)
}

/// `⟨g, h⟩` for two generators: the canonical bilinear, with the
/// canonicalization sign bookkeeping.
pub fn bracket_generators(g: PbfBasisElement, h: PbfBasisElement) -> Combo {
    let mut combo = Combo::new();
    match (g, h) {
        (GenB(p), GenB(q)) => combo_add(&mut combo, canonical_bb(p, q), Coefficient::one()),
        (GenF(p), GenF(q)) => {
            if let Some((elem, sign)) = canonical_ff(p, q) {
                combo_add(&mut combo, elem, Coefficient::from_int(sign));
            }
        }
        (GenF(p), GenB(q)) | (GenB(q), GenF(p)) => {
            combo_add(&mut combo, canonical_fb(p, q), Coefficient::one())
        }
        _ => panic!("bracket_generators expects two generators"),
    }
    combo
}

/// `⟨b, g⟩` for a canonical bilinear and a generator, looked up in the
/// listed trilinear relations.
pub fn bracket_bilinear_generator(b: PbfBasisElement, g: PbfBasisElement) -> Combo {
    let mut combo = Combo::new();
    match (b, g) {
        (BB((i, xi), (j, eta)), GenB((k, eps))) => {
            let (c1, c2) = paraboson_rhs(xi, eta, eps);
            if j == k {
                combo_add(&mut combo, GenB((i, xi)), Coefficient::from_int(c1));
            }
            if i == k {
                combo_add(&mut combo, GenB((j, eta)), Coefficient::from_int(c2));
            }
        }
        (FF((i, xi), (j, eta)), GenF((k, eps))) => {
            let (c1, c2) = parafermion_rhs(xi, eta, eps);
            if j == k {
                combo_add(&mut combo, GenF((i, xi)), Coefficient::from_int(c1));
            }
            if i == k {
                combo_add(&mut combo, GenF((j, eta)), Coefficient::from_int(c2));
            }
        }
        (BB((_, xi), (_, eta)), GenF((_, eps))) => {
            let c = lookup_mixed(MixedKind::BbWithF, xi, eta, eps)
                .expect("mixed relation coverage is total");
            debug_assert_eq!(c, 0);
        }
        (FF((_, xi), (_, eta)), GenB((_, eps))) => {
            let c = lookup_mixed(MixedKind::FfWithB, xi, eta, eps)
                .expect("mixed relation coverage is total");
            debug_assert_eq!(c, 0);
        }
        (FB((a, xi), (k, eta)), GenB((l, eps))) => {
            let c = lookup_mixed(MixedKind::FbWithB, xi, eta, eps)
                .expect("mixed relation coverage is total");
            if k == l {
                combo_add(&mut combo, GenF((a, xi)), Coefficient::from_int(c));
            }
        }
        (FB((a, xi), (k, eta)), GenF((b, eps))) => {
            let c = lookup_mixed(MixedKind::FbWithF, xi, eta, eps)
                .expect("mixed relation coverage is total");
            if a == b {
                combo_add(&mut combo, GenB((k, eta)), Coefficient::from_int(c));
            }
        }
        _ => panic!("bracket_bilinear_generator expects a bilinear and a generator"),
    }
    combo
}

/// `⟨g, b⟩` via braided antisymmetry from [`bracket_bilinear_generator`].
pub fn bracket_generator_bilinear(g: PbfBasisElement, b: PbfBasisElement) -> Combo {
    let sign = -theta_sign(g.grade(), b.grade());
    let mut combo = Combo::new();
    combo_add_scaled(&mut combo, &bracket_bilinear_generator(b, g), sign);
    combo
}

/// `⟨b1, b2⟩` for two canonical bilinears via the braided derivation rule,
/// with `b2` factored as its stored generator pair.
pub fn bracket_bilinears(b1: PbfBasisElement, b2: PbfBasisElement) -> Combo {
    let (g, h) = match b2 {
        BB(p, q) => (GenB(p), GenB(q)),
        FF(p, q) => (GenF(p), GenF(q)),
        FB(p, q) => (GenF(p), GenB(q)),
        _ => panic!("bracket_bilinears expects bilinears"),
    };
    assert!(b1.is_bilinear(), "bracket_bilinears expects bilinears");

    let mut out = Combo::new();
    // ⟨⟨b1,g⟩, h⟩
    for (x, cx) in bracket_bilinear_generator(b1, g) {
        for (elem, c) in bracket_generators(x, h) {
            combo_add(&mut out, elem, &c * &cx);
        }
    }
    // θ(deg b1, deg g) ⟨g, ⟨b1,h⟩⟩
    let crossing = theta_sign(b1.grade(), g.grade());
    for (y, cy) in bracket_bilinear_generator(b1, h) {
        for (elem, c) in bracket_generators(g, y) {
            combo_add(&mut out, elem, &c * &cy * Coefficient::from_int(crossing));
        }
    }
    out
}

/// `⟨x, y⟩` for any two canonical basis symbols.
pub fn bracket_elements(x: PbfBasisElement, y: PbfBasisElement) -> Combo {
    match (x.is_generator(), y.is_generator()) {
        (true, true) => bracket_generators(x, y),
        (false, true) => bracket_bilinear_generator(x, y),
        (true, false) => bracket_generator_bilinear(x, y),
        (false, false) => bracket_bilinears(x, y),
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PbfError {
    #[error("at least one paraboson or parafermion mode is required")]
    NoModes,
}

/// The constructed algebra L(m,n) with its exported structure-constant form.
#[derive(Clone, Debug)]
pub struct PbfAlgebra {
    m: u32,
    n: u32,
    elements: Vec<PbfBasisElement>,
    ids: BTreeMap<PbfBasisElement, SymbolId>,
    exported: ColorAlgebra,
}

impl PbfAlgebra {
    /// Enumerates the canonical basis of L(m,n) and fills the complete
    /// bracket table.
    pub fn build(m: u32, n: u32) -> Result<PbfAlgebra, PbfError> {
        if m == 0 && n == 0 {
            return Err(PbfError::NoModes);
        }
        let gens_b: Vec<ModeSign> =
            (1..=m).flat_map(|k| Sign::BOTH.into_iter().map(move |s| (k, s))).collect();
        let gens_f: Vec<ModeSign> =
            (1..=n).flat_map(|a| Sign::BOTH.into_iter().map(move |s| (a, s))).collect();

        let mut elements = Vec::new();
        elements.extend(gens_b.iter().map(|&p| GenB(p)));
        elements.extend(gens_f.iter().map(|&p| GenF(p)));
        for (i, &p) in gens_b.iter().enumerate() {
            for &q in &gens_b[i..] {
                elements.push(BB(p, q));
            }
        }
        for (i, &p) in gens_f.iter().enumerate() {
            for &q in &gens_f[i + 1..] {
                elements.push(FF(p, q));
            }
        }
        for &p in &gens_f {
            for &q in &gens_b {
                elements.push(FB(p, q));
            }
        }
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));

        let mut exported = ColorAlgebra::new(format!("L(Z2xZ2)({m},{n})"));
        let mut ids = BTreeMap::new();
        for &elem in &elements {
            let id = exported.add_symbol(elem.to_string(), elem.grade());
            ids.insert(elem, id);
        }
        for &x in &elements {
            for &y in &elements {
                let value: AlgebraElement = bracket_elements(x, y)
                    .iter()
                    .map(|(elem, c)| (ids[elem], c.clone()))
                    .collect();
                exported.set_bracket(ids[&x], ids[&y], value).expect("symbols exist");
            }
        }
        Ok(PbfAlgebra { m, n, elements, ids, exported })
    }

    pub fn paraboson_modes(&self) -> u32 {
        self.m
    }

    pub fn parafermion_modes(&self) -> u32 {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[PbfBasisElement] {
        &self.elements
    }

    pub fn exported(&self) -> &ColorAlgebra {
        &self.exported
    }

    pub fn id_of(&self, elem: PbfBasisElement) -> Option<SymbolId> {
        self.ids.get(&elem).copied()
    }

    pub fn element_of(&self, id: SymbolId) -> PbfBasisElement {
        self.elements[id.0]
    }

    /// Converts a combination over canonical symbols into an element of the
    /// exported algebra. Panics on symbols outside this algebra's modes.
    pub fn combo_to_element(&self, combo: &Combo) -> AlgebraElement {
        combo
            .iter()
            .map(|(elem, c)| {
                let id = self
                    .ids
                    .get(elem)
                    .unwrap_or_else(|| panic!("{elem} is not a basis symbol of L({},{})", self.m, self.n));
                (*id, c.clone())
            })
            .collect()
    }

    /// The Lie superalgebra spanned by the grade-(0,0) and grade-(0,1)
    /// bilinears, as a restriction of the exported algebra.
    pub fn super_subalgebra(&self) -> Result<Restriction, crate::colorlie::RestrictError> {
        self.exported.restrict_to_grades(&[Grade::new(0, 0), Grade::new(0, 1)])
    }
}

/// Dimension of L(m,n) predicted by block counting:
/// `2m + 2n + m(2m+1) + n(2n−1) + 4mn`.
pub fn dimension_formula(m: u32, n: u32) -> usize {
    let (m, n) = (m as usize, n as usize);
    2 * m + 2 * n + m * (2 * m + 1) + (2 * n * n - n) + 4 * m * n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorlie::realized_bracket_kind;
    use crate::colorlie::BracketKind;
    use crate::grade::theta;

    fn combo(entries: &[(PbfBasisElement, i64)]) -> Combo {
        let mut c = Combo::new();
        for &(e, k) in entries {
            combo_add(&mut c, e, Coefficient::from_int(k));
        }
        c
    }

    #[test]
    fn display_notation() {
        assert_eq!(GenB((1, P)).to_string(), "B1+");
        assert_eq!(GenF((2, M)).to_string(), "F2-");
        assert_eq!(canonical_bb((1, P), (2, M)).to_string(), "{B1+,B2-}");
        assert_eq!(canonical_ff((1, P), (1, M)).unwrap().0.to_string(), "[F1+,F1-]");
        assert_eq!(canonical_fb((1, M), (2, P)).to_string(), "{F1-,B2+}");
    }

    #[test]
    fn grades_match_the_block_structure() {
        assert_eq!(GenB((1, P)).grade(), Grade::new(1, 0));
        assert_eq!(GenF((1, M)).grade(), Grade::new(1, 1));
        assert_eq!(canonical_bb((1, P), (1, M)).grade(), Grade::new(0, 0));
        assert_eq!(canonical_ff((1, P), (1, M)).unwrap().0.grade(), Grade::new(0, 0));
        assert_eq!(canonical_fb((1, P), (1, M)).grade(), Grade::new(0, 1));
    }

    #[test]
    fn generator_brackets_are_canonical_bilinears() {
        assert_eq!(
            bracket_generators(GenB((1, P)), GenB((2, M))),
            combo(&[(BB((1, P), (2, M)), 1)])
        );
        assert_eq!(bracket_generators(GenF((1, P)), GenF((1, P))), Combo::new());
        assert_eq!(
            bracket_generators(GenF((1, M)), GenB((2, P))),
            combo(&[(FB((1, M), (2, P)), 1)])
        );
        // swapped factor order picks up the canonicalization sign
        assert_eq!(
            bracket_generators(GenF((2, P)), GenF((1, P))),
            combo(&[(FF((1, P), (2, P)), -1)])
        );
        assert_eq!(
            bracket_generators(GenB((2, P)), GenF((1, M))),
            combo(&[(FB((1, M), (2, P)), 1)])
        );
    }

    #[test]
    fn trilinear_examples() {
        // [{F1-,B1+}, B1-] = -2 F1-
        assert_eq!(
            bracket_bilinear_generator(FB((1, M), (1, P)), GenB((1, M))),
            combo(&[(GenF((1, M)), -2)])
        );
        // [{B1+,B1-}, B1-] = -2 B1-
        assert_eq!(
            bracket_bilinear_generator(BB((1, P), (1, M)), GenB((1, M))),
            combo(&[(GenB((1, M)), -2)])
        );
        // [{B1+,B2+}, F1-] = 0
        assert_eq!(bracket_bilinear_generator(BB((1, P), (2, P)), GenF((1, M))), Combo::new());
        // {{B1-,F1+}, F1-} = 2 B1- ; canonical form of the bilinear is {F1+,B1-}
        assert_eq!(
            bracket_bilinear_generator(FB((1, P), (1, M)), GenF((1, M))),
            combo(&[(GenB((1, M)), 2)])
        );
        // [[F1+,F1-], F1-] = -2 F1-, matching [2N-1, f-] = -2f- for ordinary fermions
        assert_eq!(
            bracket_bilinear_generator(FF((1, P), (1, M)), GenF((1, M))),
            combo(&[(GenF((1, M)), -2)])
        );
    }

    #[test]
    fn mixed_relation_lookup_is_total() {
        for s1 in Sign::BOTH {
            for s2 in Sign::BOTH {
                for outer in Sign::BOTH {
                    for kind in
                        [MixedKind::BbWithF, MixedKind::FfWithB, MixedKind::FbWithB, MixedKind::FbWithF]
                    {
                        assert!(
                            lookup_mixed(kind, s1, s2, outer).is_some(),
                            "no listed relation for {kind:?} ({s1},{s2};{outer})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn bilinear_generator_brackets_are_total_over_small_algebras() {
        let alg = PbfAlgebra::build(2, 2).unwrap();
        for &b in alg.elements().iter().filter(|e| e.is_bilinear()) {
            for &g in alg.elements().iter().filter(|e| e.is_generator()) {
                // must not panic, and must stay generator-linear
                for (elem, _) in bracket_bilinear_generator(b, g) {
                    assert!(elem.is_generator());
                }
            }
        }
    }

    #[test]
    fn bilinear_bilinear_examples() {
        // the gl(1|1) key pattern
        assert_eq!(
            bracket_bilinears(FB((1, M), (1, P)), FB((1, P), (1, M))),
            combo(&[(BB((1, P), (1, M)), 2), (FF((1, P), (1, M)), 2)])
        );
        assert_eq!(
            bracket_bilinears(BB((1, P), (1, P)), FF((1, P), (1, M))),
            Combo::new()
        );
        assert_eq!(
            bracket_bilinears(BB((1, P), (1, P)), BB((1, M), (1, M))),
            combo(&[(BB((1, P), (1, M)), -8)])
        );
        // ⟨x, x⟩ = 0 for any (0,0)-graded symbol
        let alg = PbfAlgebra::build(2, 2).unwrap();
        for &x in alg.elements().iter().filter(|e| e.grade() == Grade::new(0, 0)) {
            assert_eq!(bracket_bilinears(x, x), Combo::new(), "⟨{x},{x}⟩ must vanish");
        }
    }

    #[test]
    fn bilinear_bracket_is_braided_antisymmetric_for_all_canonical_pairs() {
        let alg = PbfAlgebra::build(2, 2).unwrap();
        let bilinears: Vec<_> =
            alg.elements().iter().copied().filter(|e| e.is_bilinear()).collect();
        for &x in &bilinears {
            for &y in &bilinears {
                let direct = bracket_bilinears(x, y);
                let mut swapped = Combo::new();
                combo_add_scaled(
                    &mut swapped,
                    &bracket_bilinears(y, x),
                    -theta_sign(x.grade(), y.grade()),
                );
                assert_eq!(direct, swapped, "factorization dependence on ⟨{x},{y}⟩");
            }
        }
    }

    #[test]
    fn dimension_formula_matches_enumeration() {
        for (m, n, want) in [(1, 1, 12), (1, 0, 5), (0, 1, 3), (2, 2, 40), (2, 1, 25), (1, 2, 23)] {
            let alg = PbfAlgebra::build(m, n).unwrap();
            assert_eq!(alg.dimension(), want);
            assert_eq!(dimension_formula(m, n), want);
        }
        assert_eq!(PbfAlgebra::build(0, 0).unwrap_err(), PbfError::NoModes);
    }

    #[test]
    fn exported_algebra_passes_axioms_at_1_1() {
        let alg = PbfAlgebra::build(1, 1).unwrap();
        let exported = alg.exported();
        assert_eq!(exported.dimension(), 12);
        assert!(exported.check_grading().passed());
        assert!(exported.check_antisymmetry().passed());
        let jacobi = exported.check_jacobi();
        assert_eq!(jacobi.checked, 1728);
        assert!(jacobi.passed());
    }

    #[test]
    fn axioms_hold_for_every_mode_count_up_to_total_4() {
        for m in 0..=4u32 {
            for n in 0..=(4 - m) {
                if m + n == 0 {
                    continue;
                }
                let alg = PbfAlgebra::build(m, n).unwrap();
                let exported = alg.exported();
                assert!(exported.check_grading().passed(), "grading fails at ({m},{n})");
                assert!(exported.check_antisymmetry().passed(), "antisymmetry fails at ({m},{n})");
                assert!(exported.check_jacobi().passed(), "Jacobi fails at ({m},{n})");
            }
        }
    }

    #[test]
    fn exported_bracket_reproduces_elementwise_brackets() {
        let alg = PbfAlgebra::build(1, 1).unwrap();
        let x = AlgebraElement::from_symbol(alg.id_of(FB((1, M), (1, P))).unwrap());
        let y = AlgebraElement::from_symbol(alg.id_of(FB((1, P), (1, M))).unwrap());
        let got = alg.exported().bracket(&x, &y).unwrap();
        let want = alg.combo_to_element(&combo(&[
            (BB((1, P), (1, M)), 2),
            (FF((1, P), (1, M)), 2),
        ]));
        assert_eq!(got, want);
    }

    #[test]
    fn corrupted_table_fails_antisymmetry_and_jacobi() {
        let alg = PbfAlgebra::build(1, 1).unwrap();
        let mut exported = alg.exported().clone();
        let x = alg.id_of(BB((1, P), (1, M))).unwrap();
        let y = alg.id_of(GenB((1, M))).unwrap();
        let flipped = exported.bracket_symbols(x, y).neg();
        assert!(!flipped.is_zero());
        exported.set_bracket(x, y, flipped).unwrap();
        let anti = exported.check_antisymmetry();
        assert_eq!(anti.violations.len(), 1);
        assert_eq!(anti.violations[0].tuple, vec![y, x]);
        assert!(!exported.check_jacobi().passed());
    }

    #[test]
    fn super_subalgebra_has_the_lemma_structure() {
        let alg = PbfAlgebra::build(1, 1).unwrap();
        let sub = alg.super_subalgebra().unwrap();
        assert_eq!(sub.algebra.dimension(), 8);
        assert!(sub.algebra.check_grading().passed());
        assert!(sub.algebra.check_antisymmetry().passed());
        assert!(sub.algebra.check_jacobi().passed());
        // commutator / commutator / anticommutator pattern
        let even = Grade::new(0, 0);
        let odd = Grade::new(0, 1);
        assert_eq!(realized_bracket_kind(even, even), BracketKind::Commutator);
        assert_eq!(realized_bracket_kind(even, odd), BracketKind::Commutator);
        assert_eq!(realized_bracket_kind(odd, odd), BracketKind::Anticommutator);
        // θ equals the super commutation factor on every restricted pair
        for s in sub.algebra.symbols() {
            for t in sub.algebra.symbols() {
                let a = sub.algebra.grade_of(s);
                let b = sub.algebra.grade_of(t);
                assert_eq!(crate::grade::theta_restricted_is_super(a, b), Ok(true));
                let _ = theta(a, b);
            }
        }
    }
}
