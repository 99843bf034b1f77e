//! JSON file formats: Lie (super)algebra inputs and exported color algebras.
//!
//! Coefficients are always integer numerator/denominator quadruples
//! `{re_num, re_den, im_num, im_den}`, never decimal floats; omitted fields
//! default to numerator 0 and denominator 1. An algebra file declares the
//! generator names, the bracket table as sparse triples, the block
//! representation per generator, and the target mode counts `{m, n}`.
//! Omitted rep blocks stand for zero blocks of the implied shape.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coeff::Coefficient;
use crate::colorlie::{AlgebraElement, ColorAlgebra};
use crate::grade::Grade;
use crate::realize::{BracketSpec, DenseMatrix, GeneratorRep, InputError, SuperAlgebraInput};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("coefficient has a zero denominator")]
    ZeroDenominator,
    #[error("matrix for block {block} of {generator:?} is not rectangular")]
    NonRectangular { generator: String, block: char },
    #[error("coefficient does not fit the integer quadruple encoding")]
    CoefficientRange,
    #[error("grade entries must be 0 or 1, got {0:?}")]
    BadGrade([u8; 2]),
    #[error("bracket refers to unknown basis symbol {0:?}")]
    UnknownSymbol(String),
    #[error(transparent)]
    Input(#[from] InputError),
}

fn one_i64() -> i64 {
    1
}

/// A Gaussian rational as four integers.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CoeffJson {
    #[serde(default)]
    pub re_num: i64,
    #[serde(default = "one_i64")]
    pub re_den: i64,
    #[serde(default)]
    pub im_num: i64,
    #[serde(default = "one_i64")]
    pub im_den: i64,
}

impl CoeffJson {
    pub fn to_coefficient(self) -> Result<Coefficient, FormatError> {
        Coefficient::from_parts(self.re_num, self.re_den, self.im_num, self.im_den)
            .ok_or(FormatError::ZeroDenominator)
    }

    pub fn from_coefficient(c: &Coefficient) -> Result<CoeffJson, FormatError> {
        let (re_num, re_den, im_num, im_den) =
            c.to_i64_parts().ok_or(FormatError::CoefficientRange)?;
        Ok(CoeffJson { re_num, re_den, im_num, im_den })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub basis: String,
    pub coeff: CoeffJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketJson {
    pub left: String,
    pub right: String,
    pub result: Vec<TermJson>,
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct DimsJson {
    pub m: usize,
    pub n: usize,
}

/// Block matrices of one generator; omitted blocks are zero.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct RepJson {
    #[serde(default, rename = "A", skip_serializing_if = "Vec::is_empty")]
    pub a: Vec<Vec<CoeffJson>>,
    #[serde(default, rename = "B", skip_serializing_if = "Vec::is_empty")]
    pub b: Vec<Vec<CoeffJson>>,
    #[serde(default, rename = "C", skip_serializing_if = "Vec::is_empty")]
    pub c: Vec<Vec<CoeffJson>>,
    #[serde(default, rename = "D", skip_serializing_if = "Vec::is_empty")]
    pub d: Vec<Vec<CoeffJson>>,
}

/// A finitely presented Lie superalgebra with a graded representation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub name: String,
    pub dims: DimsJson,
    #[serde(default)]
    pub even_basis: Vec<String>,
    #[serde(default)]
    pub odd_basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketJson>,
    #[serde(default)]
    pub rep: BTreeMap<String, RepJson>,
}

fn block_matrix(
    generator: &str,
    block: char,
    rows: &[Vec<CoeffJson>],
    default_rows: usize,
    default_cols: usize,
) -> Result<DenseMatrix, FormatError> {
    if rows.is_empty() {
        return Ok(DenseMatrix::zeros(default_rows, default_cols));
    }
    let mut parsed = Vec::with_capacity(rows.len());
    for row in rows {
        let mut out = Vec::with_capacity(row.len());
        for cell in row {
            out.push(cell.to_coefficient()?);
        }
        parsed.push(out);
    }
    DenseMatrix::from_rows(parsed)
        .ok_or_else(|| FormatError::NonRectangular { generator: generator.to_string(), block })
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_super_input(&self) -> Result<SuperAlgebraInput, FormatError> {
        let (m, n) = (self.dims.m, self.dims.n);
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for b in &self.brackets {
            let mut result = Vec::with_capacity(b.result.len());
            for term in &b.result {
                result.push((term.basis.clone(), term.coeff.to_coefficient()?));
            }
            brackets.push(BracketSpec { left: b.left.clone(), right: b.right.clone(), result });
        }
        let mut reps = BTreeMap::new();
        let empty = RepJson::default();
        for gen in self.even_basis.iter().chain(&self.odd_basis) {
            let rep = self.rep.get(gen).unwrap_or(&empty);
            reps.insert(
                gen.clone(),
                GeneratorRep {
                    a: block_matrix(gen, 'A', &rep.a, m, m)?,
                    b: block_matrix(gen, 'B', &rep.b, m, n)?,
                    c: block_matrix(gen, 'C', &rep.c, n, m)?,
                    d: block_matrix(gen, 'D', &rep.d, n, n)?,
                },
            );
        }
        Ok(SuperAlgebraInput::new(
            self.name.clone(),
            self.even_basis.clone(),
            self.odd_basis.clone(),
            m,
            n,
            brackets,
            reps,
        )?)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColorSymbolJson {
    pub name: String,
    pub grade: [u8; 2],
}

/// A color Lie algebra presented by structure constants.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ColorAlgebraFile {
    pub name: String,
    pub basis: Vec<ColorSymbolJson>,
    pub brackets: Vec<BracketJson>,
}

impl ColorAlgebraFile {
    pub fn parse(text: &str) -> Result<ColorAlgebraFile, FormatError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn from_algebra(alg: &ColorAlgebra) -> Result<ColorAlgebraFile, FormatError> {
        let basis = alg
            .symbols()
            .map(|s| {
                let g = alg.grade_of(s);
                ColorSymbolJson { name: alg.symbol_name(s).to_string(), grade: [g.a1(), g.a2()] }
            })
            .collect();
        let mut brackets = Vec::new();
        for (x, y, entry) in alg.table_entries() {
            let mut result = Vec::new();
            for (s, c) in entry.iter() {
                result.push(TermJson {
                    basis: alg.symbol_name(s).to_string(),
                    coeff: CoeffJson::from_coefficient(c)?,
                });
            }
            brackets.push(BracketJson {
                left: alg.symbol_name(x).to_string(),
                right: alg.symbol_name(y).to_string(),
                result,
            });
        }
        Ok(ColorAlgebraFile { name: alg.name().to_string(), basis, brackets })
    }

    pub fn to_algebra(&self) -> Result<ColorAlgebra, FormatError> {
        let mut alg = ColorAlgebra::new(self.name.clone());
        for sym in &self.basis {
            let [a1, a2] = sym.grade;
            if a1 > 1 || a2 > 1 {
                return Err(FormatError::BadGrade(sym.grade));
            }
            alg.add_symbol(sym.name.clone(), Grade::new(a1, a2));
        }
        for b in &self.brackets {
            let left = alg
                .symbol_by_name(&b.left)
                .ok_or_else(|| FormatError::UnknownSymbol(b.left.clone()))?;
            let right = alg
                .symbol_by_name(&b.right)
                .ok_or_else(|| FormatError::UnknownSymbol(b.right.clone()))?;
            let mut value = AlgebraElement::zero();
            for term in &b.result {
                let s = alg
                    .symbol_by_name(&term.basis)
                    .ok_or_else(|| FormatError::UnknownSymbol(term.basis.clone()))?;
                value.add_term(s, term.coeff.to_coefficient()?);
            }
            alg.set_bracket(left, right, value).expect("symbols were interned above");
        }
        Ok(alg)
    }

    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serialization is infallible");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbf::PbfAlgebra;
    use crate::realize::{build_realization, check_homomorphism};

    #[test]
    fn coefficients_parse_with_defaults_and_reject_zero_denominators() {
        let c: CoeffJson = serde_json::from_str(r#"{"re_num": 3, "re_den": 2}"#).unwrap();
        assert_eq!(c.to_coefficient().unwrap(), Coefficient::ratio(3, 2));
        let i: CoeffJson = serde_json::from_str(r#"{"im_num": 1}"#).unwrap();
        assert_eq!(i.to_coefficient().unwrap(), Coefficient::i());
        let bad: CoeffJson = serde_json::from_str(r#"{"re_num": 1, "re_den": 0}"#).unwrap();
        assert!(matches!(bad.to_coefficient(), Err(FormatError::ZeroDenominator)));
    }

    #[test]
    fn minimal_algebra_file_round_trips_through_the_realization() {
        let text = r#"{
            "name": "u(1)",
            "dims": {"m": 1, "n": 0},
            "even_basis": ["X"],
            "rep": {"X": {"A": [[{"re_num": 1}]]}}
        }"#;
        let file = AlgebraFile::parse(text).unwrap();
        let input = file.to_super_input().unwrap();
        assert!(input.validate().passed());
        let p = PbfAlgebra::build(1, 0).unwrap();
        let j = build_realization(&input, &p).unwrap();
        assert!(check_homomorphism(&input, &j, &p).passed());
    }

    #[test]
    fn color_algebra_export_round_trips() {
        let alg = PbfAlgebra::build(1, 1).unwrap();
        let file = ColorAlgebraFile::from_algebra(alg.exported()).unwrap();
        let rendered = file.render();
        let reparsed = ColorAlgebraFile::parse(&rendered).unwrap().to_algebra().unwrap();
        assert_eq!(reparsed.dimension(), 12);
        assert!(reparsed.check_grading().passed());
        assert!(reparsed.check_antisymmetry().passed());
        assert!(reparsed.check_jacobi().passed());
        // the rendered form is deterministic
        assert_eq!(rendered, ColorAlgebraFile::from_algebra(alg.exported()).unwrap().render());
    }

    #[test]
    fn unknown_symbols_are_rejected() {
        let text = r#"{
            "name": "bad",
            "basis": [{"name": "x", "grade": [0, 0]}],
            "brackets": [{"left": "x", "right": "y", "result": []}]
        }"#;
        let err = ColorAlgebraFile::parse(text).unwrap().to_algebra().unwrap_err();
        assert!(matches!(err, FormatError::UnknownSymbol(name) if name == "y"));
    }
}
