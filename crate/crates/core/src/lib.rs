//! Exact symbolic machinery for the relative parabose set.
//!
//! The crate constructs the ℤ₂×ℤ₂-color Lie algebra `L(m,n)` generated by
//! `m` paraboson and `n` parafermion modes, verifies its graded axioms and
//! braided Hopf structure by exhaustive exact computation, and builds
//! paraparticle realizations of finitely presented Lie superalgebras from
//! graded matrix representations. A truncated Fock-space oracle built from
//! ordinary bosons and fermions cross-checks every symbolic structure
//! constant as an exact matrix identity.
//!
//! All arithmetic is over the Gaussian rationals; every check is an exact
//! equality, never a float comparison.
//!
//! # Quick start
//!
//! ```
//! use relparabose::pbf::{PbfAlgebra, PbfBasisElement, Sign};
//!
//! // one paraboson and one parafermion mode
//! let alg = PbfAlgebra::build(1, 1).unwrap();
//! assert_eq!(alg.dimension(), 12);
//!
//! // the full bracket table satisfies the color-Lie axioms
//! assert!(alg.exported().check_grading().passed());
//! assert!(alg.exported().check_antisymmetry().passed());
//! assert!(alg.exported().check_jacobi().passed());
//!
//! // <{F1-,B1+}, {F1+,B1-}> = 2{B1+,B1-} + 2[F1+,F1-]
//! let x = PbfBasisElement::FB((1, Sign::Minus), (1, Sign::Plus));
//! let y = PbfBasisElement::FB((1, Sign::Plus), (1, Sign::Minus));
//! let bracket = relparabose::pbf::bracket_bilinears(x, y);
//! assert_eq!(bracket.len(), 2);
//! ```

#![forbid(unsafe_code)]

pub mod cli;
pub mod coeff;
pub mod colorlie;
pub mod fock;
pub mod format;
pub mod freealg;
pub mod grade;
pub mod hopf;
pub mod pbf;
pub mod realize;
pub mod report;
pub mod symbol;
pub mod uea;

pub use coeff::Coefficient;
pub use colorlie::{AlgebraElement, ColorAlgebra};
pub use grade::Grade;
pub use pbf::PbfAlgebra;
pub use symbol::SymbolId;
