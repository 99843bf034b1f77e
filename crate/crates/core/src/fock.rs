//! Truncated Fock-space oracle for the relative parabose relations.
//!
//! Uses ordinary bosons and fermions with mutually commuting sectors: `m`
//! boson modes in the non-normalized ladder basis `B⁺|b⟩ = |b+1⟩`,
//! `B⁻|b⟩ = b|b−1⟩` (so every matrix entry is an exact integer, never a
//! square root) and `n` Jordan–Wigner fermion modes. These matrices satisfy
//! all the defining trilinear relations, so they provide a numerical check
//! of every symbolic structure constant, independent of the bracket
//! derivation machinery.
//!
//! Truncation at total boson number `N` is handled by domain restriction,
//! not by modifying operators: an identity whose terms contain at most `d`
//! boson letters is verified on the columns of states with total boson
//! number `≤ N − d` (margin 3 for trilinears, 4 for table entries), where
//! no intermediate state can escape the cutoff. Entries of matrices applied
//! near the top of the cutoff are never trusted.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::coeff::Coefficient;
use crate::colorlie::AlgebraElement;
use crate::grade::theta_sign;
use crate::pbf::{
    paraboson_rhs, parafermion_rhs, MixedKind, PbfAlgebra, PbfBasisElement, Sign, MIXED_RELATIONS,
};

/// Margin of ladder letters for trilinear relation checks.
const TRILINEAR_MARGIN: u32 = 3;
/// Margin for bracket-table checks (products of two bilinears).
const TABLE_MARGIN: u32 = 4;

/// How the boson sector couples to the fermion sector.
///
/// `Commuting` is the relative parabose mixing and the ansatz actually used
/// as an oracle. `Anticommuting` multiplies every boson ladder operator by
/// the fermion parity, a deliberately wrong coupling used for fault
/// injection in tests.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SectorCoupling {
    Commuting,
    Anticommuting,
}

/// One occupation-number basis state.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct FockState {
    pub bosons: Vec<u32>,
    /// Bit `α−1` is the occupation of fermion mode `α`.
    pub fermions: u32,
}

impl FockState {
    fn boson_total(&self) -> u32 {
        self.bosons.iter().sum()
    }

    fn fermion_parity(&self) -> i64 {
        if self.fermions.count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

/// Column-sparse exact matrix over the Fock basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorMatrix {
    dim: usize,
    cols: Vec<BTreeMap<usize, Coefficient>>,
}

impl OperatorMatrix {
    pub fn zero(dim: usize) -> OperatorMatrix {
        OperatorMatrix { dim, cols: vec![BTreeMap::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Coefficient {
        self.cols[col].get(&row).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn set_entry(&mut self, row: usize, col: usize, value: Coefficient) {
        if value.is_zero() {
            self.cols[col].remove(&row);
        } else {
            self.cols[col].insert(row, value);
        }
    }

    pub fn column_is_empty(&self, col: usize) -> bool {
        self.cols[col].is_empty()
    }

    pub fn add_scaled(&mut self, other: &OperatorMatrix, k: &Coefficient) {
        assert_eq!(self.dim, other.dim);
        for (j, col) in other.cols.iter().enumerate() {
            for (&i, v) in col {
                let updated = self.entry(i, j) + v * k;
                self.set_entry(i, j, updated);
            }
        }
    }

    pub fn sub(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::from_int(-1));
        out
    }

    pub fn scale(&self, k: &Coefficient) -> OperatorMatrix {
        let mut out = OperatorMatrix::zero(self.dim);
        out.add_scaled(self, k);
        out
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn mul(&self, other: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.dim, other.dim);
        let mut out = OperatorMatrix::zero(self.dim);
        for (j, col) in other.cols.iter().enumerate() {
            let mut acc: BTreeMap<usize, Coefficient> = BTreeMap::new();
            for (&r, v) in col {
                for (&i, w) in &self.cols[r] {
                    let entry = acc.entry(i).or_default();
                    *entry += &(w * v);
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.cols[j] = acc;
        }
        out
    }

    pub fn commutator(&self, other: &OperatorMatrix) -> OperatorMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn anticommutator(&self, other: &OperatorMatrix) -> OperatorMatrix {
        let mut out = self.mul(other);
        out.add_scaled(&other.mul(self), &Coefficient::one());
        out
    }

    /// True when every listed column is exactly zero.
    pub fn is_zero_on_columns(&self, cols: &[usize]) -> bool {
        cols.iter().all(|&j| self.cols[j].is_empty())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FockError {
    #[error("boson cutoff {cutoff} is too small; at least {min} is required")]
    CutoffTooSmall { cutoff: u32, min: u32 },
    #[error("fock space is for ({fs_m},{fs_n}) modes but the algebra has ({alg_m},{alg_n})")]
    ModeMismatch { fs_m: u32, fs_n: u32, alg_m: u32, alg_n: u32 },
}

/// Outcome of an oracle check.
#[derive(Clone, Debug, Default)]
pub struct FockOutcome {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl FockOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Occupation basis with total boson number capped at `cutoff`.
#[derive(Clone, Debug)]
pub struct FockSpace {
    m: u32,
    n: u32,
    cutoff: u32,
    states: Vec<FockState>,
    index: BTreeMap<FockState, usize>,
}

impl FockSpace {
    /// Builds the basis. The cutoff must be at least 3 so that trilinear
    /// identities have a nonempty safe subspace.
    pub fn new(m: u32, n: u32, cutoff: u32) -> Result<FockSpace, FockError> {
        if cutoff < TRILINEAR_MARGIN {
            return Err(FockError::CutoffTooSmall { cutoff, min: TRILINEAR_MARGIN });
        }
        let mut states = Vec::new();
        let mut bosons = vec![0u32; m as usize];
        enumerate_bosons(&mut bosons, 0, cutoff, &mut |b| {
            for fermions in 0..(1u32 << n) {
                states.push(FockState { bosons: b.to_vec(), fermions });
            }
        });
        let index = states.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        Ok(FockSpace { m, n, cutoff, states, index })
    }

    pub fn dimension(&self) -> usize {
        self.states.len()
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn state(&self, idx: usize) -> &FockState {
        &self.states[idx]
    }

    pub fn index_of(&self, state: &FockState) -> Option<usize> {
        self.index.get(state).copied()
    }

    /// Columns whose source state keeps all intermediates below the cutoff
    /// for identities with at most `margin` boson letters.
    pub fn safe_columns(&self, margin: u32) -> Vec<usize> {
        (0..self.states.len())
            .filter(|&i| self.states[i].boson_total() + margin <= self.cutoff)
            .collect()
    }

    /// Ladder matrix of a single generator.
    pub fn generator_matrix(
        &self,
        gen: PbfBasisElement,
        coupling: SectorCoupling,
    ) -> OperatorMatrix {
        let mut mat = OperatorMatrix::zero(self.dimension());
        for (col, state) in self.states.iter().enumerate() {
            let parity = match coupling {
                SectorCoupling::Commuting => 1,
                SectorCoupling::Anticommuting => state.fermion_parity(),
            };
            match gen {
                PbfBasisElement::GenB((k, sign)) => {
                    let k = (k - 1) as usize;
                    let mut target = state.clone();
                    let amp = match sign {
                        Sign::Plus => {
                            if state.boson_total() + 1 > self.cutoff {
                                continue;
                            }
                            target.bosons[k] += 1;
                            1
                        }
                        Sign::Minus => {
                            if state.bosons[k] == 0 {
                                continue;
                            }
                            target.bosons[k] -= 1;
                            state.bosons[k] as i64
                        }
                    };
                    let row = self.index[&target];
                    mat.set_entry(row, col, Coefficient::from_int(amp * parity));
                }
                PbfBasisElement::GenF((alpha, sign)) => {
                    let bit = 1u32 << (alpha - 1);
                    let occupied = state.fermions & bit != 0;
                    let create = sign == Sign::Plus;
                    if create == occupied {
                        continue;
                    }
                    let below = state.fermions & (bit - 1);
                    let jw = if below.count_ones().is_multiple_of(2) { 1 } else { -1 };
                    let target =
                        FockState { bosons: state.bosons.clone(), fermions: state.fermions ^ bit };
                    let row = self.index[&target];
                    mat.set_entry(row, col, Coefficient::from_int(jw));
                }
                other => panic!("generator_matrix expects a generator, got {other}"),
            }
        }
        mat
    }

    /// Matrices for all generators of the `(m, n)` modes, with the
    /// relative (commuting-sector) coupling.
    pub fn realize_generators(&self) -> BTreeMap<PbfBasisElement, OperatorMatrix> {
        let mut map = BTreeMap::new();
        for k in 1..=self.m {
            for s in Sign::BOTH {
                let g = PbfBasisElement::GenB((k, s));
                map.insert(g, self.generator_matrix(g, SectorCoupling::Commuting));
            }
        }
        for a in 1..=self.n {
            for s in Sign::BOTH {
                let g = PbfBasisElement::GenF((a, s));
                map.insert(g, self.generator_matrix(g, SectorCoupling::Commuting));
            }
        }
        map
    }

    /// Matrix of any canonical basis symbol: generators as ladder matrices,
    /// bilinears as the corresponding matrix (anti)commutators.
    pub fn element_matrix(
        &self,
        elem: PbfBasisElement,
        coupling: SectorCoupling,
    ) -> OperatorMatrix {
        match elem {
            PbfBasisElement::GenB(_) | PbfBasisElement::GenF(_) => {
                self.generator_matrix(elem, coupling)
            }
            PbfBasisElement::BB(p, q) => self
                .generator_matrix(PbfBasisElement::GenB(p), coupling)
                .anticommutator(&self.generator_matrix(PbfBasisElement::GenB(q), coupling)),
            PbfBasisElement::FF(p, q) => self
                .generator_matrix(PbfBasisElement::GenF(p), coupling)
                .commutator(&self.generator_matrix(PbfBasisElement::GenF(q), coupling)),
            PbfBasisElement::FB(p, q) => self
                .generator_matrix(PbfBasisElement::GenF(p), coupling)
                .anticommutator(&self.generator_matrix(PbfBasisElement::GenB(q), coupling)),
        }
    }

    /// Matrix of a linear combination over an algebra's basis symbols.
    pub fn combination_matrix(&self, alg: &PbfAlgebra, e: &AlgebraElement) -> OperatorMatrix {
        let mut out = OperatorMatrix::zero(self.dimension());
        for (id, c) in e.iter() {
            out.add_scaled(&self.element_matrix(alg.element_of(id), SectorCoupling::Commuting), c);
        }
        out
    }

    /// Verifies every defining trilinear relation with indices in range as
    /// an exact matrix identity on the safe subspace.
    pub fn check_relations(&self) -> FockOutcome {
        self.check_relations_with(SectorCoupling::Commuting)
    }

    pub fn check_relations_with(&self, coupling: SectorCoupling) -> FockOutcome {
        let mut outcome = FockOutcome::default();
        let safe = self.safe_columns(TRILINEAR_MARGIN);
        let b = |k: u32, s: Sign| self.generator_matrix(PbfBasisElement::GenB((k, s)), coupling);
        let f = |a: u32, s: Sign| self.generator_matrix(PbfBasisElement::GenF((a, s)), coupling);

        let record = |outcome: &mut FockOutcome, desc: String, residual: &OperatorMatrix| {
            outcome.checked += 1;
            if !residual.is_zero_on_columns(&safe) {
                outcome.failures.push(desc);
            }
        };

        // paraboson trilinears
        for i in 1..=self.m {
            for j in 1..=self.m {
                for k in 1..=self.m {
                    for xi in Sign::BOTH {
                        for eta in Sign::BOTH {
                            for eps in Sign::BOTH {
                                let (c1, c2) = paraboson_rhs(xi, eta, eps);
                                let mut residual =
                                    b(i, xi).anticommutator(&b(j, eta)).commutator(&b(k, eps));
                                if j == k {
                                    residual.add_scaled(&b(i, xi), &Coefficient::from_int(-c1));
                                }
                                if i == k {
                                    residual.add_scaled(&b(j, eta), &Coefficient::from_int(-c2));
                                }
                                record(
                                    &mut outcome,
                                    format!("[{{B{i}{xi},B{j}{eta}}},B{k}{eps}]"),
                                    &residual,
                                );
                            }
                        }
                    }
                }
            }
        }
        // parafermion trilinears
        for i in 1..=self.n {
            for j in 1..=self.n {
                for k in 1..=self.n {
                    for xi in Sign::BOTH {
                        for eta in Sign::BOTH {
                            for eps in Sign::BOTH {
                                let (c1, c2) = parafermion_rhs(xi, eta, eps);
                                let mut residual =
                                    f(i, xi).commutator(&f(j, eta)).commutator(&f(k, eps));
                                if j == k {
                                    residual.add_scaled(&f(i, xi), &Coefficient::from_int(-c1));
                                }
                                if i == k {
                                    residual.add_scaled(&f(j, eta), &Coefficient::from_int(-c2));
                                }
                                record(
                                    &mut outcome,
                                    format!("[[F{i}{xi},F{j}{eta}],F{k}{eps}]"),
                                    &residual,
                                );
                            }
                        }
                    }
                }
            }
        }
        // mixed trilinears, one family of index instances per listed line
        for rel in MIXED_RELATIONS {
            match rel.kind {
                MixedKind::BbWithF => {
                    for i in 1..=self.m {
                        for j in 1..=self.m {
                            for a in 1..=self.n {
                                let residual = b(i, rel.s1)
                                    .anticommutator(&b(j, rel.s2))
                                    .commutator(&f(a, rel.outer));
                                record(
                                    &mut outcome,
                                    format!("[{{B{i}{},B{j}{}}},F{a}{}]", rel.s1, rel.s2, rel.outer),
                                    &residual,
                                );
                            }
                        }
                    }
                }
                MixedKind::FfWithB => {
                    for a in 1..=self.n {
                        for c in 1..=self.n {
                            for k in 1..=self.m {
                                let residual = f(a, rel.s1)
                                    .commutator(&f(c, rel.s2))
                                    .commutator(&b(k, rel.outer));
                                record(
                                    &mut outcome,
                                    format!("[[F{a}{},F{c}{}],B{k}{}]", rel.s1, rel.s2, rel.outer),
                                    &residual,
                                );
                            }
                        }
                    }
                }
                MixedKind::FbWithB => {
                    for a in 1..=self.n {
                        for k in 1..=self.m {
                            for l in 1..=self.m {
                                let mut residual = f(a, rel.s1)
                                    .anticommutator(&b(k, rel.s2))
                                    .commutator(&b(l, rel.outer));
                                if k == l {
                                    residual.add_scaled(
                                        &f(a, rel.s1),
                                        &Coefficient::from_int(-rel.coeff),
                                    );
                                }
                                record(
                                    &mut outcome,
                                    format!("[{{F{a}{},B{k}{}}},B{l}{}]", rel.s1, rel.s2, rel.outer),
                                    &residual,
                                );
                            }
                        }
                    }
                }
                MixedKind::FbWithF => {
                    for a in 1..=self.n {
                        for k in 1..=self.m {
                            for c in 1..=self.n {
                                let mut residual = f(a, rel.s1)
                                    .anticommutator(&b(k, rel.s2))
                                    .anticommutator(&f(c, rel.outer));
                                if a == c {
                                    residual.add_scaled(
                                        &b(k, rel.s2),
                                        &Coefficient::from_int(-rel.coeff),
                                    );
                                }
                                record(
                                    &mut outcome,
                                    format!(
                                        "{{{{F{a}{},B{k}{}}},F{c}{}}}",
                                        rel.s1, rel.s2, rel.outer
                                    ),
                                    &residual,
                                );
                            }
                        }
                    }
                }
            }
        }
        outcome
    }

    /// Verifies every bracket-table entry of `alg` as an exact matrix
    /// identity on the safe subspace.
    pub fn check_bracket_table(&self, alg: &PbfAlgebra) -> Result<FockOutcome, FockError> {
        if self.cutoff < TABLE_MARGIN {
            return Err(FockError::CutoffTooSmall { cutoff: self.cutoff, min: TABLE_MARGIN });
        }
        if alg.paraboson_modes() != self.m || alg.parafermion_modes() != self.n {
            return Err(FockError::ModeMismatch {
                fs_m: self.m,
                fs_n: self.n,
                alg_m: alg.paraboson_modes(),
                alg_n: alg.parafermion_modes(),
            });
        }
        let safe = self.safe_columns(TABLE_MARGIN);
        let mats: Vec<OperatorMatrix> = alg
            .elements()
            .iter()
            .map(|&e| self.element_matrix(e, SectorCoupling::Commuting))
            .collect();
        let mut outcome = FockOutcome::default();
        for (xi, &x) in alg.elements().iter().enumerate() {
            for (yi, &y) in alg.elements().iter().enumerate() {
                outcome.checked += 1;
                let theta = theta_sign(x.grade(), y.grade());
                let mut residual = mats[xi].mul(&mats[yi]);
                residual.add_scaled(&mats[yi].mul(&mats[xi]), &Coefficient::from_int(-theta));
                let entry =
                    alg.exported().bracket_symbols(alg.id_of(x).unwrap(), alg.id_of(y).unwrap());
                for (z, c) in entry.iter() {
                    residual.add_scaled(&mats[z.0], &(-c));
                }
                if !residual.is_zero_on_columns(&safe) {
                    outcome
                        .failures
                        .push(format!("table entry <{x},{y}> disagrees with the oracle"));
                }
            }
        }
        Ok(outcome)
    }
}

fn enumerate_bosons(
    current: &mut Vec<u32>,
    mode: usize,
    budget: u32,
    emit: &mut impl FnMut(&[u32]),
) {
    if mode == current.len() {
        emit(current);
        return;
    }
    for occ in 0..=budget {
        current[mode] = occ;
        enumerate_bosons(current, mode + 1, budget - occ, emit);
    }
    current[mode] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbf::PbfBasisElement::{GenB, GenF};
    use Sign::{Minus as M, Plus as P};

    #[test]
    fn basis_enumeration_and_cutoff() {
        let fs = FockSpace::new(1, 1, 5).unwrap();
        assert_eq!(fs.dimension(), 12); // 6 boson levels × 2 fermion states
        let fs2 = FockSpace::new(2, 2, 5).unwrap();
        assert_eq!(fs2.dimension(), 21 * 4);
        assert_eq!(
            FockSpace::new(1, 1, 2).unwrap_err(),
            FockError::CutoffTooSmall { cutoff: 2, min: 3 }
        );
    }

    #[test]
    fn ladder_actions() {
        let fs = FockSpace::new(1, 1, 5).unwrap();
        let vac = fs.index_of(&FockState { bosons: vec![0], fermions: 0 }).unwrap();
        // <vac| {B1+,B1-} |vac> = 1
        let num = fs.element_matrix(PbfBasisElement::BB((1, P), (1, M)), SectorCoupling::Commuting);
        assert_eq!(num.entry(vac, vac), Coefficient::from_int(1));
        // F+ squared vanishes
        let fplus = fs.generator_matrix(GenF((1, P)), SectorCoupling::Commuting);
        assert_eq!(fplus.mul(&fplus), OperatorMatrix::zero(fs.dimension()));
        // the raising operator has no image at the top of the cutoff
        let bplus = fs.generator_matrix(GenB((1, P)), SectorCoupling::Commuting);
        let top = fs.index_of(&FockState { bosons: vec![5], fermions: 0 }).unwrap();
        assert!(bplus.column_is_empty(top));
    }

    #[test]
    fn zero_bilinear_is_the_zero_matrix() {
        let fs = FockSpace::new(1, 1, 5).unwrap();
        let f = fs.generator_matrix(GenF((1, P)), SectorCoupling::Commuting);
        assert_eq!(f.commutator(&f), OperatorMatrix::zero(fs.dimension()));
    }

    #[test]
    fn relations_hold_at_1_1() {
        let fs = FockSpace::new(1, 1, 5).unwrap();
        let outcome = fs.check_relations();
        assert!(outcome.passed(), "failures: {:?}", outcome.failures);
        assert_eq!(outcome.checked, 16 + 28);
    }

    #[test]
    fn specific_mixed_relation_restricted() {
        // [{F1-,B1+},B1-] + 2F1- = 0 on the safe subspace
        let fs = FockSpace::new(1, 1, 5).unwrap();
        let c = SectorCoupling::Commuting;
        let fb = fs.element_matrix(PbfBasisElement::FB((1, M), (1, P)), c);
        let bminus = fs.generator_matrix(GenB((1, M)), c);
        let fminus = fs.generator_matrix(GenF((1, M)), c);
        let mut residual = fb.commutator(&bminus);
        residual.add_scaled(&fminus, &Coefficient::from_int(2));
        assert!(residual.is_zero_on_columns(&fs.safe_columns(3)));
    }

    #[test]
    fn anticommuting_sectors_break_the_mixed_relations() {
        let fs = FockSpace::new(1, 1, 5).unwrap();
        let outcome = fs.check_relations_with(SectorCoupling::Anticommuting);
        assert!(!outcome.passed());
    }

    #[test]
    fn bracket_table_agrees_at_1_1() {
        let alg = PbfAlgebra::build(1, 1).unwrap();
        let fs = FockSpace::new(1, 1, 5).unwrap();
        let outcome = fs.check_bracket_table(&alg).unwrap();
        assert_eq!(outcome.checked, 144);
        assert!(outcome.passed(), "failures: {:?}", outcome.failures);
    }

    #[test]
    fn key_bilinear_identity_as_matrices() {
        // <{B+,F-},{F+,B-}> = 2{B+,B-} + 2[F+,F-]
        let fs = FockSpace::new(1, 1, 5).unwrap();
        let c = SectorCoupling::Commuting;
        let x = fs.element_matrix(PbfBasisElement::FB((1, M), (1, P)), c);
        let y = fs.element_matrix(PbfBasisElement::FB((1, P), (1, M)), c);
        let bb = fs.element_matrix(PbfBasisElement::BB((1, P), (1, M)), c);
        let ff = fs.element_matrix(PbfBasisElement::FF((1, P), (1, M)), c);
        // both FB symbols have grade (0,1): the bracket is an anticommutator
        let mut residual = x.anticommutator(&y);
        residual.add_scaled(&bb, &Coefficient::from_int(-2));
        residual.add_scaled(&ff, &Coefficient::from_int(-2));
        assert!(residual.is_zero_on_columns(&fs.safe_columns(4)));
    }

    #[test]
    fn enlarging_the_cutoff_preserves_verdicts() {
        let alg = PbfAlgebra::build(1, 1).unwrap();
        for cutoff in [5, 6] {
            let fs = FockSpace::new(1, 1, cutoff).unwrap();
            assert!(fs.check_relations().passed());
            assert!(fs.check_bracket_table(&alg).unwrap().passed());
        }
    }
}
