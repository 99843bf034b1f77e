//! The ℤ₂×ℤ₂ grading group and its commutation factor θ.
//!
//! Every basis symbol in this crate carries a grade `(a₁, a₂)` with
//! componentwise addition mod 2. The commutation factor is the
//! skew-symmetric bicharacter
//!
//! ```text
//! θ(a, b) = (−1)^(a₁b₁ + a₂b₂)
//! ```
//!
//! Restricted to the subgroup `{(0,0), (0,1)}` it coincides with the usual
//! Lie-superalgebra commutation factor `(−1)^(p(a)p(b))`, with parity
//! `p(0,0) = 0`, `p(0,1) = 1`.

use std::fmt;
use std::ops::Add;

use thiserror::Error;

use crate::coeff::Coefficient;

/// An element of ℤ₂×ℤ₂.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Grade {
    a1: bool,
    a2: bool,
}

impl Grade {
    /// The identity grade `(0,0)`.
    pub const ZERO: Grade = Grade { a1: false, a2: false };

    /// Builds a grade from two residues; any integer is reduced mod 2.
    pub const fn new(a1: u8, a2: u8) -> Grade {
        Grade { a1: a1 % 2 == 1, a2: a2 % 2 == 1 }
    }

    pub const fn a1(&self) -> u8 {
        self.a1 as u8
    }

    pub const fn a2(&self) -> u8 {
        self.a2 as u8
    }

    /// All four group elements in lexicographic order.
    pub const fn all() -> [Grade; 4] {
        [Grade::new(0, 0), Grade::new(0, 1), Grade::new(1, 0), Grade::new(1, 1)]
    }

    /// True for the grades of the super subgroup `{(0,0), (0,1)}`.
    pub const fn is_super(&self) -> bool {
        !self.a1
    }

    /// Super parity on the subgroup: `(0,0) ↦ 0`, `(0,1) ↦ 1`.
    const fn super_parity(&self) -> u8 {
        self.a2 as u8
    }
}

impl Add for Grade {
    type Output = Grade;

    fn add(self, rhs: Grade) -> Grade {
        Grade { a1: self.a1 ^ rhs.a1, a2: self.a2 ^ rhs.a2 }
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a1(), self.a2())
    }
}

/// Componentwise sum mod 2.
pub fn grade_add(a: Grade, b: Grade) -> Grade {
    a + b
}

/// The sign of θ(a, b) as an integer, `+1` or `−1`.
pub fn theta_sign(a: Grade, b: Grade) -> i64 {
    let exponent = (a.a1() * b.a1() + a.a2() * b.a2()) % 2;
    if exponent == 0 {
        1
    } else {
        -1
    }
}

/// The commutation factor θ(a, b) as an exact scalar.
///
/// Returned as a [`Coefficient`] so braided formulas compose uniformly.
pub fn theta(a: Grade, b: Grade) -> Coefficient {
    Coefficient::from_int(theta_sign(a, b))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradeError {
    #[error("grade {0} lies outside the super subgroup {{(0,0),(0,1)}}")]
    OutsideSuperSubgroup(Grade),
}

/// Checks that θ restricted to the super subgroup agrees with the
/// Lie-superalgebra commutation factor `(−1)^(p(a)p(b))`.
pub fn theta_restricted_is_super(a: Grade, b: Grade) -> Result<bool, GradeError> {
    if !a.is_super() {
        return Err(GradeError::OutsideSuperSubgroup(a));
    }
    if !b.is_super() {
        return Err(GradeError::OutsideSuperSubgroup(b));
    }
    let super_sign = if a.super_parity() * b.super_parity() == 1 { -1 } else { 1 };
    Ok(theta_sign(a, b) == super_sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_examples() {
        assert_eq!(Grade::new(1, 0) + Grade::new(1, 1), Grade::new(0, 1));
        assert_eq!(Grade::new(0, 0) + Grade::new(1, 1), Grade::new(1, 1));
        assert_eq!(Grade::new(1, 1) + Grade::new(1, 1), Grade::new(0, 0));
    }

    #[test]
    fn zero_is_identity_and_elements_are_involutions() {
        for a in Grade::all() {
            assert_eq!(a + Grade::ZERO, a);
            assert_eq!(Grade::ZERO + a, a);
            assert_eq!(a + a, Grade::ZERO);
        }
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta_sign(Grade::new(1, 0), Grade::new(1, 1)), -1);
        assert_eq!(theta_sign(Grade::new(1, 1), Grade::new(1, 1)), 1);
        for b in Grade::all() {
            assert_eq!(theta_sign(Grade::ZERO, b), 1);
        }
        assert_eq!(theta(Grade::new(1, 0), Grade::new(1, 1)), Coefficient::from_int(-1));
    }

    #[test]
    fn theta_is_a_skew_symmetric_bicharacter() {
        for a in Grade::all() {
            for b in Grade::all() {
                assert_eq!(theta_sign(a, b) * theta_sign(b, a), 1);
                for c in Grade::all() {
                    assert_eq!(theta_sign(a + b, c), theta_sign(a, c) * theta_sign(b, c));
                    assert_eq!(theta_sign(a, b + c), theta_sign(a, b) * theta_sign(a, c));
                }
            }
        }
    }

    #[test]
    fn theta_diagonal() {
        for a in Grade::all() {
            let expect = if a == Grade::new(0, 0) || a == Grade::new(1, 1) { 1 } else { -1 };
            assert_eq!(theta_sign(a, a), expect);
        }
    }

    #[test]
    fn restriction_matches_super_commutation_factor() {
        let even = Grade::new(0, 0);
        let odd = Grade::new(0, 1);
        assert_eq!(theta_restricted_is_super(odd, odd), Ok(true));
        assert_eq!(theta_restricted_is_super(even, odd), Ok(true));
        assert_eq!(theta_restricted_is_super(even, even), Ok(true));
        assert_eq!(
            theta_restricted_is_super(Grade::new(1, 0), odd),
            Err(GradeError::OutsideSuperSubgroup(Grade::new(1, 0)))
        );
    }
}
