//! Paraparticle realizations of finitely presented Lie superalgebras.
//!
//! The input is a Lie superalgebra with homogeneous basis `X_1..X_p`
//! (even), `Y_1..Y_q` (odd), structure constants, and a graded matrix
//! representation: each generator carries blocks `A (m×m)`, `B (m×n)`,
//! `C (n×m)`, `D (n×n)` of the block matrix `P = [[A, B], [C, D]]`, with
//! `B = C = 0` on even generators and `A = D = 0` on odd ones.
//!
//! The realization maps
//!
//! ```text
//! X ↦ ½ Σ A_kl {B_k⁺, B_l⁻} + ½ Σ D_αβ [F_α⁺, F_β⁻]
//! Y ↦ ½ Σ (B_kα {B_k⁺, F_α⁻} + C_αk {F_α⁺, B_k⁻})
//! ```
//!
//! into the color Lie algebra of the relative parabose set; images of even
//! generators land in grade `(0,0)`, odd ones in grade `(0,1)`, so the map
//! targets the super subalgebra of bilinears. The checks verify exactly,
//! pair by pair, that the map is a bracket homomorphism and that it
//! intertwines the braided Hopf maps with the standard super-Hopf structure
//! on the source (primitive generators, `S = −id`, `ε = 0`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coeff::Coefficient;
use crate::colorlie::{AlgebraElement, ColorAlgebra, RestrictError};
use crate::grade::Grade;
use crate::hopf::BraidedHopf;
use crate::pbf::{canonical_bb, canonical_ff, canonical_fb, Combo, PbfAlgebra, Sign};
use crate::uea::{UeaElement, UeaError};

/// A small dense matrix with exact entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Coefficient>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> DenseMatrix {
        DenseMatrix { rows, cols, data: vec![Coefficient::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Coefficient>>) -> Option<DenseMatrix> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return None;
        }
        Some(DenseMatrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Coefficient {
        &self.data[i * self.cols + j]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, value: Coefficient) {
        self.data[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Coefficient::is_zero)
    }

    pub fn mul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = DenseMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let updated = out.entry(i, j) + a * other.entry(k, j);
                    out.set_entry(i, j, updated);
                }
            }
        }
        out
    }

    pub fn add_scaled(&mut self, other: &DenseMatrix, k: &Coefficient) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (lhs, rhs) in self.data.iter_mut().zip(&other.data) {
            *lhs += &(rhs * k);
        }
    }

    pub fn sub(&self, other: &DenseMatrix) -> DenseMatrix {
        let mut out = self.clone();
        out.add_scaled(other, &Coefficient::from_int(-1));
        out
    }
}

/// The four blocks of one generator's graded matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorRep {
    pub a: DenseMatrix,
    pub b: DenseMatrix,
    pub c: DenseMatrix,
    pub d: DenseMatrix,
}

impl GeneratorRep {
    pub fn zero(m: usize, n: usize) -> GeneratorRep {
        GeneratorRep {
            a: DenseMatrix::zeros(m, m),
            b: DenseMatrix::zeros(m, n),
            c: DenseMatrix::zeros(n, m),
            d: DenseMatrix::zeros(n, n),
        }
    }

    /// The assembled (m+n)×(m+n) block matrix.
    fn assemble(&self, m: usize, n: usize) -> DenseMatrix {
        let mut p = DenseMatrix::zeros(m + n, m + n);
        for i in 0..m {
            for j in 0..m {
                p.set_entry(i, j, self.a.entry(i, j).clone());
            }
            for j in 0..n {
                p.set_entry(i, m + j, self.b.entry(i, j).clone());
            }
        }
        for i in 0..n {
            for j in 0..m {
                p.set_entry(m + i, j, self.c.entry(i, j).clone());
            }
            for j in 0..n {
                p.set_entry(m + i, m + j, self.d.entry(i, j).clone());
            }
        }
        p
    }
}

/// A bracket value in the input algebra: generator index → coefficient.
pub type SuperElement = BTreeMap<usize, Coefficient>;

/// One declared bracket, by generator name.
#[derive(Clone, Debug)]
pub struct BracketSpec {
    pub left: String,
    pub right: String,
    pub result: Vec<(String, Coefficient)>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InputError {
    #[error("generator {0:?} is declared twice")]
    DuplicateGenerator(String),
    #[error("bracket refers to undeclared generator {0:?}")]
    UnknownGenerator(String),
    #[error("bracket ({0}, {1}) is declared twice")]
    DuplicateBracket(String, String),
    #[error("no representation matrices given for generator {0:?}")]
    MissingRep(String),
    #[error("generator {generator:?} block {block} is {rows}x{cols}, expected {want_rows}x{want_cols}")]
    BlockDims {
        generator: String,
        block: char,
        rows: usize,
        cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
}

/// A finitely presented Lie superalgebra with a graded matrix representation.
///
/// Brackets may be declared in either slot order; the missing mirror of a
/// declared pair is completed by super antisymmetry at construction time.
/// Pairs declared in both orders are kept as given and cross-checked by
/// [`SuperAlgebraInput::validate`].
#[derive(Clone, Debug)]
pub struct SuperAlgebraInput {
    name: String,
    names: Vec<String>,
    even_count: usize,
    m: usize,
    n: usize,
    table: BTreeMap<(usize, usize), SuperElement>,
    reps: Vec<GeneratorRep>,
}

impl SuperAlgebraInput {
    pub fn new(
        name: impl Into<String>,
        even_names: Vec<String>,
        odd_names: Vec<String>,
        m: usize,
        n: usize,
        brackets: Vec<BracketSpec>,
        mut reps: BTreeMap<String, GeneratorRep>,
    ) -> Result<SuperAlgebraInput, InputError> {
        let even_count = even_names.len();
        let mut names = even_names;
        names.extend(odd_names);
        for (i, a) in names.iter().enumerate() {
            if names[..i].contains(a) {
                return Err(InputError::DuplicateGenerator(a.clone()));
            }
        }
        let index = |n: &str| -> Result<usize, InputError> {
            names
                .iter()
                .position(|x| x == n)
                .ok_or_else(|| InputError::UnknownGenerator(n.to_string()))
        };

        let mut declared: BTreeMap<(usize, usize), SuperElement> = BTreeMap::new();
        for spec in brackets {
            let left = index(&spec.left)?;
            let right = index(&spec.right)?;
            let mut value = SuperElement::new();
            for (basis, coeff) in spec.result {
                let k = index(&basis)?;
                if !coeff.is_zero() {
                    let entry = value.entry(k).or_insert_with(Coefficient::zero);
                    *entry += &coeff;
                }
            }
            value.retain(|_, c| !c.is_zero());
            if declared.insert((left, right), value).is_some() {
                return Err(InputError::DuplicateBracket(spec.left, spec.right));
            }
        }
        // complete missing mirrors by super antisymmetry
        let mut table = declared.clone();
        for (&(i, j), value) in &declared {
            if table.contains_key(&(j, i)) {
                continue;
            }
            let odd_pair = i >= even_count && j >= even_count;
            let factor = Coefficient::from_int(if odd_pair { 1 } else { -1 });
            let mirrored: SuperElement =
                value.iter().map(|(&k, c)| (k, c * &factor)).collect();
            table.insert((j, i), mirrored);
        }
        table.retain(|_, v| !v.is_empty());

        let mut rep_list = Vec::with_capacity(names.len());
        for gen in &names {
            let rep = reps.remove(gen).ok_or_else(|| InputError::MissingRep(gen.clone()))?;
            for (block, mat, want) in [
                ('A', &rep.a, (m, m)),
                ('B', &rep.b, (m, n)),
                ('C', &rep.c, (n, m)),
                ('D', &rep.d, (n, n)),
            ] {
                if (mat.rows(), mat.cols()) != want {
                    return Err(InputError::BlockDims {
                        generator: gen.clone(),
                        block,
                        rows: mat.rows(),
                        cols: mat.cols(),
                        want_rows: want.0,
                        want_cols: want.1,
                    });
                }
            }
            rep_list.push(rep);
        }
        if let Some(extra) = reps.keys().next() {
            return Err(InputError::UnknownGenerator(extra.clone()));
        }
        Ok(SuperAlgebraInput { name: name.into(), names, even_count, m, n, table, reps: rep_list })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generator_count(&self) -> usize {
        self.names.len()
    }

    pub fn even_count(&self) -> usize {
        self.even_count
    }

    pub fn odd_count(&self) -> usize {
        self.names.len() - self.even_count
    }

    pub fn generator_name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn is_even(&self, i: usize) -> bool {
        i < self.even_count
    }

    pub fn boson_modes(&self) -> usize {
        self.m
    }

    pub fn fermion_modes(&self) -> usize {
        self.n
    }

    pub fn rep(&self, i: usize) -> &GeneratorRep {
        &self.reps[i]
    }

    pub fn bracket(&self, i: usize, j: usize) -> SuperElement {
        self.table.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// The input algebra as a color Lie algebra over the super subgroup:
    /// even generators get grade (0,0), odd generators grade (0,1).
    pub fn as_color_algebra(&self) -> ColorAlgebra {
        let mut alg = ColorAlgebra::new(self.name.clone());
        let ids: Vec<_> = self
            .names
            .iter()
            .enumerate()
            .map(|(i, name)| {
                let grade = if self.is_even(i) { Grade::new(0, 0) } else { Grade::new(0, 1) };
                alg.add_symbol(name.clone(), grade)
            })
            .collect();
        for (&(i, j), value) in &self.table {
            let element: AlgebraElement =
                value.iter().map(|(&k, c)| (ids[k], c.clone())).collect();
            alg.set_bracket(ids[i], ids[j], element).expect("generator symbols exist");
        }
        alg
    }

    /// Exact validation: block patterns, super antisymmetry and Jacobi of
    /// the bracket table, and the representation property
    /// `P(⟨x,y⟩) = P(x)P(y) − (−1)^{|x||y|}P(y)P(x)` for all basis pairs.
    pub fn validate(&self) -> ValidationOutcome {
        let mut outcome = ValidationOutcome::default();

        for (i, rep) in self.reps.iter().enumerate() {
            outcome.checked += 1;
            let bad_blocks: Vec<char> = if self.is_even(i) {
                [('B', !rep.b.is_zero()), ('C', !rep.c.is_zero())]
                    .into_iter()
                    .filter_map(|(b, bad)| bad.then_some(b))
                    .collect()
            } else {
                [('A', !rep.a.is_zero()), ('D', !rep.d.is_zero())]
                    .into_iter()
                    .filter_map(|(b, bad)| bad.then_some(b))
                    .collect()
            };
            for block in bad_blocks {
                outcome.violations.push(format!(
                    "generator {} is {} but has a nonzero {} block",
                    self.names[i],
                    if self.is_even(i) { "even" } else { "odd" },
                    block
                ));
            }
        }

        let embedded = self.as_color_algebra();
        let grading = embedded.check_grading();
        let antisymmetry = embedded.check_antisymmetry();
        let jacobi = embedded.check_jacobi();
        outcome.checked += grading.checked + antisymmetry.checked + jacobi.checked;
        for (label, result) in [
            ("parity additivity", &grading),
            ("super antisymmetry", &antisymmetry),
            ("super Jacobi", &jacobi),
        ] {
            for v in &result.violations {
                outcome.violations.push(format!(
                    "{label}: {} (residual {})",
                    v.detail,
                    embedded.display_element(&v.residual)
                ));
            }
        }

        let assembled: Vec<DenseMatrix> =
            self.reps.iter().map(|r| r.assemble(self.m, self.n)).collect();
        for i in 0..self.names.len() {
            for j in 0..self.names.len() {
                outcome.checked += 1;
                let sign = if self.is_even(i) || self.is_even(j) { -1 } else { 1 };
                let mut residual = assembled[i].mul(&assembled[j]);
                residual.add_scaled(&assembled[j].mul(&assembled[i]), &Coefficient::from_int(sign));
                for (&k, c) in &self.bracket(i, j) {
                    residual.add_scaled(&assembled[k], &(-c));
                }
                if !residual.is_zero() {
                    outcome.violations.push(format!(
                        "representation property fails on ({}, {})",
                        self.names[i], self.names[j]
                    ));
                }
            }
        }
        outcome
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationOutcome {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl ValidationOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Which bilinear families the realization uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum RealizationMode {
    /// Theorem route: `{B,B}`, `[F,F]`, and `{F,B}` bilinears as needed.
    #[default]
    Mixed,
    /// Paraboson-only images `½ Σ A_kl {B_k⁺, B_l⁻}`; requires a plain Lie
    /// algebra input and a target with no parafermion modes.
    Paraboson,
    /// Parafermion-only images `½ Σ D_αβ [F_α⁺, F_β⁻]`.
    Parafermion,
}

impl fmt::Display for RealizationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealizationMode::Mixed => write!(f, "mixed"),
            RealizationMode::Paraboson => write!(f, "paraboson"),
            RealizationMode::Parafermion => write!(f, "parafermion"),
        }
    }
}

impl FromStr for RealizationMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "mixed" => Ok(RealizationMode::Mixed),
            "paraboson" => Ok(RealizationMode::Paraboson),
            "parafermion" => Ok(RealizationMode::Parafermion),
            other => Err(format!("unknown mode {other:?} (expected mixed|paraboson|parafermion)")),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RealizeError {
    #[error("input has odd generators; the {0} mode requires a plain Lie algebra")]
    OddGeneratorsPresent(RealizationMode),
    #[error("target algebra has modes ({got_m},{got_n}) but ({want_m},{want_n}) are required")]
    ModeMismatch { want_m: u32, want_n: u32, got_m: u32, got_n: u32 },
    #[error(transparent)]
    Uea(#[from] UeaError),
    #[error(transparent)]
    Restrict(#[from] RestrictError),
}

/// The realization map, stored on generators.
#[derive(Clone, Debug)]
pub struct RealizationMap {
    images: Vec<AlgebraElement>,
}

impl RealizationMap {
    pub fn image(&self, generator: usize) -> &AlgebraElement {
        &self.images[generator]
    }

    pub fn images(&self) -> &[AlgebraElement] {
        &self.images
    }

    /// Applies the map to a linear combination of generators.
    pub fn apply(&self, e: &SuperElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (&k, c) in e {
            out.add_scaled(&self.images[k], c);
        }
        out
    }
}

fn expected_modes(s: &SuperAlgebraInput, mode: RealizationMode) -> (u32, u32) {
    match mode {
        RealizationMode::Mixed => (s.boson_modes() as u32, s.fermion_modes() as u32),
        RealizationMode::Paraboson => (s.boson_modes() as u32, 0),
        RealizationMode::Parafermion => (0, s.fermion_modes() as u32),
    }
}

fn check_target(s: &SuperAlgebraInput, mode: RealizationMode, p: &PbfAlgebra) -> Result<(), RealizeError> {
    let (want_m, want_n) = expected_modes(s, mode);
    if (p.paraboson_modes(), p.parafermion_modes()) != (want_m, want_n) {
        return Err(RealizeError::ModeMismatch {
            want_m,
            want_n,
            got_m: p.paraboson_modes(),
            got_n: p.parafermion_modes(),
        });
    }
    Ok(())
}

fn image_of_generator(
    s: &SuperAlgebraInput,
    i: usize,
    mode: RealizationMode,
    p: &PbfAlgebra,
) -> AlgebraElement {
    let rep = s.rep(i);
    let half = Coefficient::ratio(1, 2);
    let mut combo = Combo::new();
    let mut add = |elem, coeff: Coefficient| {
        if coeff.is_zero() {
            return;
        }
        let entry = combo.entry(elem).or_insert_with(Coefficient::zero);
        *entry += &coeff;
    };
    if s.is_even(i) {
        if mode != RealizationMode::Parafermion {
            for k in 0..s.boson_modes() {
                for l in 0..s.boson_modes() {
                    let a = rep.a.entry(k, l);
                    add(
                        canonical_bb((k as u32 + 1, Sign::Plus), (l as u32 + 1, Sign::Minus)),
                        a * &half,
                    );
                }
            }
        }
        if mode != RealizationMode::Paraboson {
            for alpha in 0..s.fermion_modes() {
                for beta in 0..s.fermion_modes() {
                    let d = rep.d.entry(alpha, beta);
                    if let Some((elem, sign)) = canonical_ff(
                        (alpha as u32 + 1, Sign::Plus),
                        (beta as u32 + 1, Sign::Minus),
                    ) {
                        add(elem, d * &half * Coefficient::from_int(sign));
                    }
                }
            }
        }
    } else {
        for k in 0..s.boson_modes() {
            for alpha in 0..s.fermion_modes() {
                let b = rep.b.entry(k, alpha);
                add(
                    canonical_fb((alpha as u32 + 1, Sign::Minus), (k as u32 + 1, Sign::Plus)),
                    b * &half,
                );
                let c = rep.c.entry(alpha, k);
                add(
                    canonical_fb((alpha as u32 + 1, Sign::Plus), (k as u32 + 1, Sign::Minus)),
                    c * &half,
                );
            }
        }
    }
    combo.retain(|_, c| !c.is_zero());
    p.combo_to_element(&combo)
}

/// Builds the Theorem-route realization into `p = L(m,n)`.
pub fn build_realization(
    s: &SuperAlgebraInput,
    p: &PbfAlgebra,
) -> Result<RealizationMap, RealizeError> {
    check_target(s, RealizationMode::Mixed, p)?;
    let images = (0..s.generator_count())
        .map(|i| image_of_generator(s, i, RealizationMode::Mixed, p))
        .collect();
    Ok(RealizationMap { images })
}

/// The corollary routes for a plain Lie algebra (empty odd part): images in
/// the selected bilinear family only.
pub fn realize_lie_algebra(
    s: &SuperAlgebraInput,
    mode: RealizationMode,
    p: &PbfAlgebra,
) -> Result<RealizationMap, RealizeError> {
    if s.odd_count() > 0 {
        return Err(RealizeError::OddGeneratorsPresent(mode));
    }
    check_target(s, mode, p)?;
    let images =
        (0..s.generator_count()).map(|i| image_of_generator(s, i, mode, p)).collect();
    Ok(RealizationMap { images })
}

/// One verified identity: a description plus the rendered residual when it
/// does not vanish.
#[derive(Clone, Debug)]
pub struct IdentityRecord {
    pub description: String,
    pub passed: bool,
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct RealizeOutcome {
    pub records: Vec<IdentityRecord>,
}

impl RealizeOutcome {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn checked(&self) -> usize {
        self.records.len()
    }

    fn push(&mut self, description: String, passed: bool, residual: Option<String>) {
        self.records.push(IdentityRecord { description, passed, residual });
    }
}

/// Compares `J(⟨x,y⟩)` with `⟨J(x),J(y)⟩` for every ordered basis pair.
pub fn check_homomorphism(
    s: &SuperAlgebraInput,
    j: &RealizationMap,
    p: &PbfAlgebra,
) -> RealizeOutcome {
    let mut outcome = RealizeOutcome::default();
    for i in 0..s.generator_count() {
        for k in 0..s.generator_count() {
            let lhs = j.apply(&s.bracket(i, k));
            let rhs = p
                .exported()
                .bracket(j.image(i), j.image(k))
                .expect("images are supported on the target basis");
            let residual = lhs.sub(&rhs);
            let passed = residual.is_zero();
            outcome.push(
                format!("J(<{0},{1}>) = <J({0}),J({1})>", s.generator_name(i), s.generator_name(k)),
                passed,
                (!passed).then(|| p.exported().display_element(&residual).to_string()),
            );
        }
    }
    outcome
}

/// Verifies the Hopf-compatibility conditions on every generator, with the
/// left side computed by the braided Hopf maps of the super subalgebra and
/// the right side given by the standard super-Hopf structure of the source.
pub fn check_hopf_compat(
    s: &SuperAlgebraInput,
    j: &RealizationMap,
    p: &PbfAlgebra,
) -> Result<RealizeOutcome, RealizeError> {
    let sub = p.super_subalgebra()?;
    let hopf = BraidedHopf::new(&sub.algebra);
    let mut outcome = RealizeOutcome::default();
    for i in 0..s.generator_count() {
        let name = s.generator_name(i);
        let image = sub.map_element(j.image(i))?;
        let element = UeaElement::from_algebra_element(&image);

        let lhs = hopf.coproduct(&element)?;
        let rhs = hopf.primitive_coproduct(&element);
        let ok = lhs == rhs;
        outcome.push(format!("Δ(J({name})) = (J⊗J)(Δ({name}))"), ok, None);

        let lhs = hopf.antipode(&element)?;
        let rhs = element.neg();
        let ok = lhs == rhs;
        outcome.push(format!("S(J({name})) = J(S({name}))"), ok, None);

        let ok = hopf.counit(&element).is_zero();
        outcome.push(format!("ε(J({name})) = ε({name})"), ok, None);
    }
    Ok(outcome)
}

/// Structural invariant of the images: even generators land in grade
/// `(0,0)`, odd generators in grade `(0,1)`.
pub fn check_image_grading(
    s: &SuperAlgebraInput,
    j: &RealizationMap,
    p: &PbfAlgebra,
) -> RealizeOutcome {
    let mut outcome = RealizeOutcome::default();
    for i in 0..s.generator_count() {
        let want = if s.is_even(i) { Grade::new(0, 0) } else { Grade::new(0, 1) };
        let ok = j.image(i).iter().all(|(sym, _)| p.exported().grade_of(sym) == want);
        outcome.push(
            format!("image of {} is homogeneous of grade {}", s.generator_name(i), want),
            ok,
            None,
        );
    }
    outcome
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::FockSpace;
    use crate::pbf::PbfBasisElement;
    use proptest::prelude::*;

    fn int_matrix(rows: &[&[i64]]) -> DenseMatrix {
        DenseMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&v| Coefficient::from_int(v)).collect()).collect(),
        )
        .unwrap()
    }

    fn bracket(left: &str, right: &str, result: &[(&str, i64)]) -> BracketSpec {
        BracketSpec {
            left: left.into(),
            right: right.into(),
            result: result
                .iter()
                .map(|&(n, c)| (n.to_string(), Coefficient::from_int(c)))
                .collect(),
        }
    }

    pub(crate) fn gl11() -> SuperAlgebraInput {
        let mut reps = BTreeMap::new();
        reps.insert(
            "E11".to_string(),
            GeneratorRep {
                a: int_matrix(&[&[1]]),
                b: DenseMatrix::zeros(1, 1),
                c: DenseMatrix::zeros(1, 1),
                d: DenseMatrix::zeros(1, 1),
            },
        );
        reps.insert(
            "E22".to_string(),
            GeneratorRep {
                a: DenseMatrix::zeros(1, 1),
                b: DenseMatrix::zeros(1, 1),
                c: DenseMatrix::zeros(1, 1),
                d: int_matrix(&[&[1]]),
            },
        );
        reps.insert(
            "E12".to_string(),
            GeneratorRep {
                a: DenseMatrix::zeros(1, 1),
                b: int_matrix(&[&[1]]),
                c: DenseMatrix::zeros(1, 1),
                d: DenseMatrix::zeros(1, 1),
            },
        );
        reps.insert(
            "E21".to_string(),
            GeneratorRep {
                a: DenseMatrix::zeros(1, 1),
                b: DenseMatrix::zeros(1, 1),
                c: int_matrix(&[&[1]]),
                d: DenseMatrix::zeros(1, 1),
            },
        );
        SuperAlgebraInput::new(
            "gl(1|1) fundamental",
            vec!["E11".into(), "E22".into()],
            vec!["E12".into(), "E21".into()],
            1,
            1,
            vec![
                bracket("E11", "E12", &[("E12", 1)]),
                bracket("E11", "E21", &[("E21", -1)]),
                bracket("E22", "E12", &[("E12", -1)]),
                bracket("E22", "E21", &[("E21", 1)]),
                bracket("E12", "E21", &[("E11", 1), ("E22", 1)]),
            ],
            reps,
        )
        .unwrap()
    }

    pub(crate) fn sl2_adjoint() -> SuperAlgebraInput {
        let ad_h = int_matrix(&[&[0, 0, 0], &[0, 2, 0], &[0, 0, -2]]);
        let ad_e = int_matrix(&[&[0, 0, 1], &[-2, 0, 0], &[0, 0, 0]]);
        let ad_f = int_matrix(&[&[0, -1, 0], &[0, 0, 0], &[2, 0, 0]]);
        let mut reps = BTreeMap::new();
        for (name, ad) in [("H", &ad_h), ("E", &ad_e), ("F", &ad_f)] {
            reps.insert(
                name.to_string(),
                GeneratorRep {
                    a: ad.clone(),
                    b: DenseMatrix::zeros(3, 3),
                    c: DenseMatrix::zeros(3, 3),
                    d: ad.clone(),
                },
            );
        }
        SuperAlgebraInput::new(
            "sl(2) adjoint",
            vec!["H".into(), "E".into(), "F".into()],
            vec![],
            3,
            3,
            vec![
                bracket("H", "E", &[("E", 2)]),
                bracket("H", "F", &[("F", -2)]),
                bracket("E", "F", &[("H", 1)]),
            ],
            reps,
        )
        .unwrap()
    }

    #[test]
    fn gl11_validates() {
        let s = gl11();
        let outcome = s.validate();
        assert!(outcome.passed(), "violations: {:?}", outcome.violations);
    }

    #[test]
    fn sl2_adjoint_validates_as_a_purely_even_input() {
        let outcome = sl2_adjoint().validate();
        assert!(outcome.passed(), "violations: {:?}", outcome.violations);
    }

    #[test]
    fn block_pattern_violation_is_reported() {
        let mut s = gl11();
        // odd generator E12 acquires a nonzero A block
        s.reps[2].a = int_matrix(&[&[1]]);
        let outcome = s.validate();
        assert!(outcome.violations.iter().any(|v| v.contains("nonzero A block")));
    }

    #[test]
    fn broken_jacobi_is_reported() {
        let zero = GeneratorRep::zero(1, 0);
        let mut reps = BTreeMap::new();
        for name in ["X1", "X2", "X3"] {
            reps.insert(name.to_string(), zero.clone());
        }
        let s = SuperAlgebraInput::new(
            "broken",
            vec!["X1".into(), "X2".into(), "X3".into()],
            vec![],
            1,
            0,
            vec![
                bracket("X2", "X3", &[("X1", 1)]),
                bracket("X1", "X2", &[("X2", 1)]),
            ],
            reps,
        )
        .unwrap();
        let outcome = s.validate();
        assert!(!outcome.passed());
        assert!(outcome.violations.iter().any(|v| v.contains("super Jacobi")));
    }

    #[test]
    fn gl11_images_match_the_map_definition() {
        let s = gl11();
        let p = PbfAlgebra::build(1, 1).unwrap();
        let j = build_realization(&s, &p).unwrap();
        let half = Coefficient::ratio(1, 2);
        use crate::pbf::Sign::{Minus as M, Plus as P};
        let expect = |elem| AlgebraElement::from_term(p.id_of(elem).unwrap(), half.clone());
        assert_eq!(*j.image(0), expect(PbfBasisElement::BB((1, P), (1, M))));
        assert_eq!(*j.image(1), expect(PbfBasisElement::FF((1, P), (1, M))));
        assert_eq!(*j.image(2), expect(PbfBasisElement::FB((1, M), (1, P))));
        assert_eq!(*j.image(3), expect(PbfBasisElement::FB((1, P), (1, M))));
        assert!(check_image_grading(&s, &j, &p).passed());
    }

    #[test]
    fn gl11_realization_is_a_homomorphism() {
        let s = gl11();
        let p = PbfAlgebra::build(1, 1).unwrap();
        let j = build_realization(&s, &p).unwrap();
        let outcome = check_homomorphism(&s, &j, &p);
        assert_eq!(outcome.checked(), 16);
        assert!(outcome.passed(), "failing records: {:?}", outcome.records);
        // the anticommutator identity {J(E12),J(E21)} = J(E11) + J(E22)
        let lhs = p.exported().bracket(j.image(2), j.image(3)).unwrap();
        let rhs = j.image(0).add(j.image(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gl11_hopf_compatibility() {
        let s = gl11();
        let p = PbfAlgebra::build(1, 1).unwrap();
        let j = build_realization(&s, &p).unwrap();
        let outcome = check_hopf_compat(&s, &j, &p).unwrap();
        assert_eq!(outcome.checked(), 12);
        assert!(outcome.passed(), "failing records: {:?}", outcome.records);
    }

    #[test]
    fn gl11_homomorphism_reproduced_by_the_fock_oracle() {
        let s = gl11();
        let p = PbfAlgebra::build(1, 1).unwrap();
        let j = build_realization(&s, &p).unwrap();
        let fs = FockSpace::new(1, 1, 5).unwrap();
        let safe = fs.safe_columns(4);
        for i in 0..s.generator_count() {
            for k in 0..s.generator_count() {
                let mi = fs.combination_matrix(&p, j.image(i));
                let mk = fs.combination_matrix(&p, j.image(k));
                let sign = if s.is_even(i) || s.is_even(k) { -1 } else { 1 };
                let mut residual = mi.mul(&mk);
                residual.add_scaled(&mk.mul(&mi), &Coefficient::from_int(sign));
                let lhs = fs.combination_matrix(&p, &j.apply(&s.bracket(i, k)));
                residual.add_scaled(&lhs, &Coefficient::from_int(-1));
                assert!(
                    residual.is_zero_on_columns(&safe),
                    "matrix identity fails on ({}, {})",
                    s.generator_name(i),
                    s.generator_name(k)
                );
            }
        }
    }

    #[test]
    fn sl2_adjoint_realizes_in_all_three_modes() {
        let s = sl2_adjoint();
        for (mode, m, n) in [
            (RealizationMode::Paraboson, 3, 0),
            (RealizationMode::Parafermion, 0, 3),
            (RealizationMode::Mixed, 3, 3),
        ] {
            let p = PbfAlgebra::build(m, n).unwrap();
            let j = realize_lie_algebra(&s, mode, &p).unwrap();
            let outcome = check_homomorphism(&s, &j, &p);
            assert!(outcome.passed(), "{mode} failing: {:?}", outcome.records);
        }
    }

    #[test]
    fn paraboson_mode_rejects_superalgebras_and_wrong_targets() {
        let s = gl11();
        let p = PbfAlgebra::build(1, 0).unwrap();
        assert_eq!(
            realize_lie_algebra(&s, RealizationMode::Paraboson, &p).unwrap_err(),
            RealizeError::OddGeneratorsPresent(RealizationMode::Paraboson)
        );
        let even = sl2_adjoint();
        let wrong = PbfAlgebra::build(3, 3).unwrap();
        assert!(matches!(
            realize_lie_algebra(&even, RealizationMode::Paraboson, &wrong).unwrap_err(),
            RealizeError::ModeMismatch { .. }
        ));
    }

    #[test]
    fn zero_representation_realizes_to_zero() {
        let zero = GeneratorRep::zero(1, 1);
        let mut reps = BTreeMap::new();
        for name in ["E11", "E22", "E12", "E21"] {
            reps.insert(name.to_string(), zero.clone());
        }
        let s = SuperAlgebraInput::new(
            "gl(1|1) with the zero rep",
            vec!["E11".into(), "E22".into()],
            vec!["E12".into(), "E21".into()],
            1,
            1,
            vec![
                bracket("E11", "E12", &[("E12", 1)]),
                bracket("E11", "E21", &[("E21", -1)]),
                bracket("E22", "E12", &[("E12", -1)]),
                bracket("E22", "E21", &[("E21", 1)]),
                bracket("E12", "E21", &[("E11", 1), ("E22", 1)]),
            ],
            reps,
        )
        .unwrap();
        assert!(s.validate().passed());
        let p = PbfAlgebra::build(1, 1).unwrap();
        let j = build_realization(&s, &p).unwrap();
        assert!(j.images().iter().all(AlgebraElement::is_zero));
        assert!(check_homomorphism(&s, &j, &p).passed());
    }

    #[test]
    fn abelian_one_dimensional_even_algebra() {
        let mut reps = BTreeMap::new();
        reps.insert(
            "X".to_string(),
            GeneratorRep {
                a: int_matrix(&[&[1]]),
                b: DenseMatrix::zeros(1, 0),
                c: DenseMatrix::zeros(0, 1),
                d: DenseMatrix::zeros(0, 0),
            },
        );
        let s = SuperAlgebraInput::new("u(1)", vec!["X".into()], vec![], 1, 0, vec![], reps)
            .unwrap();
        assert!(s.validate().passed());
        let p = PbfAlgebra::build(1, 0).unwrap();
        let j = realize_lie_algebra(&s, RealizationMode::Paraboson, &p).unwrap();
        use crate::pbf::Sign::{Minus as M, Plus as P};
        assert_eq!(
            *j.image(0),
            AlgebraElement::from_term(
                p.id_of(PbfBasisElement::BB((1, P), (1, M))).unwrap(),
                Coefficient::ratio(1, 2)
            )
        );
        assert!(check_homomorphism(&s, &j, &p).passed());
    }

    /// Conjugating the gl(1|1) rep by an invertible even block matrix
    /// diag(p, q) sends B ↦ (p/q)B and C ↦ (q/p)C; the realization must
    /// stay a homomorphism.
    fn gl11_conjugated(pnum: i64, qnum: i64) -> SuperAlgebraInput {
        let mut s = gl11();
        let ratio = Coefficient::ratio(pnum, qnum);
        let inv = ratio.inverse().unwrap();
        let mut b = DenseMatrix::zeros(1, 1);
        b.set_entry(0, 0, ratio);
        let mut c = DenseMatrix::zeros(1, 1);
        c.set_entry(0, 0, inv);
        s.reps[2].b = b;
        s.reps[3].c = c;
        s
    }

    proptest! {
        #[test]
        fn conjugated_gl11_reps_still_realize(pnum in 1i64..6, qnum in 1i64..6) {
            let s = gl11_conjugated(pnum, qnum);
            prop_assert!(s.validate().passed());
            let p = PbfAlgebra::build(1, 1).unwrap();
            let j = build_realization(&s, &p).unwrap();
            prop_assert!(check_homomorphism(&s, &j, &p).passed());
            prop_assert!(check_hopf_compat(&s, &j, &p).unwrap().passed());
        }
    }

    proptest! {
        /// Conjugating the adjoint blocks by a unipotent T = I + t·E_{rc}
        /// (an invertible even matrix with inverse I − t·E_{rc}) yields an
        /// equivalent rep; the realization must stay a homomorphism.
        #[test]
        fn unipotent_conjugations_of_sl2_still_realize(
            t in -5i64..=5,
            r in 0usize..3,
            c in 0usize..3,
        ) {
            prop_assume!(r != c);
            let mut tmat = int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
            tmat.set_entry(r, c, Coefficient::from_int(t));
            let mut tinv = int_matrix(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
            tinv.set_entry(r, c, Coefficient::from_int(-t));
            let mut s = sl2_adjoint();
            for rep in &mut s.reps {
                rep.a = tmat.mul(&rep.a).mul(&tinv);
                rep.d = tmat.mul(&rep.d).mul(&tinv);
            }
            prop_assert!(s.validate().passed());
            let p = PbfAlgebra::build(3, 3).unwrap();
            let j = realize_lie_algebra(&s, RealizationMode::Mixed, &p).unwrap();
            prop_assert!(check_homomorphism(&s, &j, &p).passed());
        }
    }
}
