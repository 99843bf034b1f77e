//! Command implementations shared by the binary and the C ABI.
//!
//! Exit-code contract: 0 when every check passes, 1 on a verification
//! failure, 2 on a usage error (bad flags or dimensions), 3 when the input
//! file fails validation.

use std::path::Path;

use thiserror::Error;

use crate::fock::FockSpace;
use crate::format::{AlgebraFile, ColorAlgebraFile};
use crate::freealg;
use crate::hopf::BraidedHopf;
use crate::pbf::{dimension_formula, PbfAlgebra};
use crate::realize::{
    build_realization, check_homomorphism, check_hopf_compat, check_image_grading,
    realize_lie_algebra, RealizationMode,
};
use crate::report::Report;
use crate::uea::DEFAULT_WORD_CAP;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVALID_INPUT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    /// Input-file validation failed; the report lists the violations.
    #[error("input validation failed")]
    Validation(Report),
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Validation(_) => EXIT_INVALID_INPUT,
            CliError::Io { .. } => EXIT_USAGE,
        }
    }
}

/// Exit code for a finished report.
pub fn report_exit_code(report: &Report) -> i32 {
    if report.all_passed() {
        EXIT_PASS
    } else {
        EXIT_CHECK_FAILED
    }
}

/// `identities`: the four quadruple-bracket identities in the free algebra.
pub fn run_identities() -> Report {
    let mut report = Report::new("identities");
    for check in freealg::verify_quadruple_identities() {
        let residual = check.residual();
        let passed = residual.is_zero();
        report.push(
            check.description,
            passed,
            (!passed).then(|| format!("{} surviving terms", residual.num_terms())),
        );
    }
    report
}

/// `check-pbf`: build L(m,n) and run the exhaustive axiom suite, optionally
/// the Fock oracle, optionally dumping the exported algebra as JSON.
pub fn run_check_pbf(
    m: u32,
    n: u32,
    oracle: bool,
    cutoff: u32,
    dump_algebra: Option<&Path>,
) -> Result<Report, CliError> {
    if m == 0 && n == 0 {
        return Err(CliError::Usage(
            "at least one paraboson or parafermion mode is required (--m/--n)".into(),
        ));
    }
    let mut command = format!("check-pbf --m {m} --n {n}");
    if oracle {
        command.push_str(&format!(" --oracle --cutoff {cutoff}"));
    }
    let mut report = Report::new(command);

    let alg = PbfAlgebra::build(m, n).expect("mode counts were checked above");
    let expected = dimension_formula(m, n);
    report.push(
        format!("dimension is {} (block count predicts {expected})", alg.dimension()),
        alg.dimension() == expected,
        None,
    );

    let exported = alg.exported();
    for (label, outcome) in [
        ("grading", exported.check_grading()),
        ("braided antisymmetry", exported.check_antisymmetry()),
        ("braided Jacobi", exported.check_jacobi()),
    ] {
        report.push(
            format!("{label}: {} tuples checked, {} violations", outcome.checked, outcome.violations.len()),
            outcome.passed(),
            None,
        );
        for v in &outcome.violations {
            report.push(
                format!("{label} violation: {}", v.detail),
                false,
                Some(exported.display_element(&v.residual).to_string()),
            );
        }
    }

    let sub = alg
        .super_subalgebra()
        .map_err(|e| CliError::Usage(format!("super subalgebra extraction failed: {e}")))?;
    let sub_ok = sub.algebra.check_grading().passed()
        && sub.algebra.check_antisymmetry().passed()
        && sub.algebra.check_jacobi().passed();
    report.push(
        format!("super subalgebra of dimension {} passes the restricted axioms", sub.algebra.dimension()),
        sub_ok,
        None,
    );

    if oracle {
        let fs = FockSpace::new(m, n, cutoff)
            .map_err(|e| CliError::Usage(format!("--cutoff {cutoff}: {e}")))?;
        let relations = fs.check_relations();
        report.push(
            format!("oracle trilinear relations: {} identities on the safe subspace", relations.checked),
            relations.passed(),
            None,
        );
        for f in &relations.failures {
            report.push(format!("oracle relation fails: {f}"), false, None);
        }
        let table = fs
            .check_bracket_table(&alg)
            .map_err(|e| CliError::Usage(format!("--cutoff {cutoff}: {e}")))?;
        report.push(
            format!("oracle bracket table: {} entries reproduced as matrix identities", table.checked),
            table.passed(),
            None,
        );
        for f in &table.failures {
            report.push(f.clone(), false, None);
        }
    }

    if let Some(path) = dump_algebra {
        let file = ColorAlgebraFile::from_algebra(exported)
            .map_err(|e| CliError::Usage(format!("cannot serialize the algebra: {e}")))?;
        std::fs::write(path, file.render())
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        report.push(format!("exported algebra written to {}", path.display()), true, None);
    }

    Ok(report)
}

/// `realize`: load an algebra file, build the paraparticle realization in
/// the requested mode, and verify it.
pub fn run_realize(path: &Path, mode: RealizationMode, with_hopf: bool) -> Result<Report, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    run_realize_text(&path.display().to_string(), &text, mode, with_hopf)
}

/// `realize` on an in-memory algebra document; `source` is echoed in the
/// report in place of a file path.
pub fn run_realize_text(
    source: &str,
    text: &str,
    mode: RealizationMode,
    with_hopf: bool,
) -> Result<Report, CliError> {
    let mut command = format!("realize {source} --mode {mode}");
    if with_hopf {
        command.push_str(" --hopf");
    }

    let input = AlgebraFile::parse(text)
        .and_then(|file| file.to_super_input())
        .map_err(|e| validation_failure(&command, e))?;

    let validation = input.validate();
    if !validation.passed() {
        let mut report = Report::new(&command);
        for v in &validation.violations {
            report.push(v.clone(), false, None);
        }
        return Err(CliError::Validation(report));
    }
    let mut report = Report::new(&command);
    report.push(
        format!("input validation: {} checks, 0 violations", validation.checked),
        true,
        None,
    );

    let (want_m, want_n) = match mode {
        RealizationMode::Mixed => (input.boson_modes() as u32, input.fermion_modes() as u32),
        RealizationMode::Paraboson => (input.boson_modes() as u32, 0),
        RealizationMode::Parafermion => (0, input.fermion_modes() as u32),
    };
    if want_m == 0 && want_n == 0 {
        return Err(CliError::Usage(format!(
            "mode {mode} leaves no target modes for dims ({}, {})",
            input.boson_modes(),
            input.fermion_modes()
        )));
    }
    let p = PbfAlgebra::build(want_m, want_n).expect("nonzero modes checked above");

    let j = match mode {
        RealizationMode::Mixed => build_realization(&input, &p),
        _ => realize_lie_algebra(&input, mode, &p),
    }
    .map_err(|e| validation_failure(&command, e))?;

    for i in 0..input.generator_count() {
        report.push(
            format!(
                "J({}) = {}",
                input.generator_name(i),
                p.exported().display_element(j.image(i))
            ),
            true,
            None,
        );
    }
    push_outcome(&mut report, check_image_grading(&input, &j, &p));
    push_outcome(&mut report, check_homomorphism(&input, &j, &p));
    if with_hopf {
        let hopf = check_hopf_compat(&input, &j, &p)
            .map_err(|e| CliError::Usage(format!("hopf compatibility check failed to run: {e}")))?;
        push_outcome(&mut report, hopf);
    }
    Ok(report)
}

fn push_outcome(report: &mut Report, outcome: crate::realize::RealizeOutcome) {
    for record in outcome.records {
        report.push(record.description, record.passed, record.residual);
    }
}

fn validation_failure(command: &str, error: impl std::fmt::Display) -> CliError {
    let mut report = Report::new(command);
    report.push(error.to_string(), false, None);
    CliError::Validation(report)
}

/// `check-hopf`: braided Hopf axiom suite for L(m,n) over words up to
/// `max_len`.
pub fn run_check_hopf(m: u32, n: u32, max_len: usize) -> Result<Report, CliError> {
    if m == 0 && n == 0 {
        return Err(CliError::Usage(
            "at least one paraboson or parafermion mode is required (--m/--n)".into(),
        ));
    }
    if max_len > DEFAULT_WORD_CAP {
        return Err(CliError::Usage(format!(
            "--max-len {max_len} exceeds the word cap {DEFAULT_WORD_CAP}"
        )));
    }
    let mut report = Report::new(format!("check-hopf --m {m} --n {n} --max-len {max_len}"));
    let alg = PbfAlgebra::build(m, n).expect("mode counts were checked above");
    let hopf = BraidedHopf::new(alg.exported());
    let outcome = hopf
        .check_axioms(max_len)
        .map_err(|e| CliError::Usage(format!("axiom check exceeded the word cap: {e}")))?;
    report.push(
        format!(
            "hopf axioms over words up to length {max_len}: {} identities, {} failures",
            outcome.checked,
            outcome.failures.len()
        ),
        outcome.passed(),
        None,
    );
    for f in &outcome.failures {
        report.push(f.clone(), false, None);
    }
    Ok(report)
}
