//! Exact Gaussian-rational scalars.
//!
//! All symbolic computation in this crate runs over ℚ(i): a coefficient is
//! `re + im·i` with arbitrary-precision rational parts. Arithmetic never
//! rounds, so every identity check below is an exact equality test.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coefficient {
    re: BigRational,
    im: BigRational,
}

impl Coefficient {
    pub fn new(re: BigRational, im: BigRational) -> Coefficient {
        Coefficient { re, im }
    }

    pub fn zero() -> Coefficient {
        Coefficient { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Coefficient {
        Coefficient { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Coefficient {
        Coefficient { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Coefficient {
        Coefficient { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    /// A real rational `num/den`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Coefficient {
        Coefficient {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    /// A full Gaussian rational from four integer parts. Fails on zero denominators.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Option<Coefficient> {
        if re_den == 0 || im_den == 0 {
            return None;
        }
        Some(Coefficient {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        })
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn conj(&self) -> Coefficient {
        Coefficient { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `(re² + im²)`, the square modulus as a rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Coefficient> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(Coefficient { re: &self.re / &n, im: -&self.im / &n })
    }

    /// Reduced numerators/denominators as `i64`s, when they fit.
    pub fn to_i64_parts(&self) -> Option<(i64, i64, i64, i64)> {
        let to = |r: &BigRational| -> Option<(i64, i64)> {
            Some((i64::try_from(r.numer()).ok()?, i64::try_from(r.denom()).ok()?))
        };
        let (rn, rd) = to(&self.re)?;
        let (in_, id) = to(&self.im)?;
        Some((rn, rd, in_, id))
    }
}

impl Default for Coefficient {
    fn default() -> Self {
        Coefficient::zero()
    }
}

impl Add<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        Coefficient { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        Coefficient { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        Coefficient {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    #[allow(clippy::suspicious_arithmetic_impl)] // division is multiplication by the inverse
    fn div(self, rhs: &Coefficient) -> Coefficient {
        self * &rhs.inverse().expect("division by zero coefficient")
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_value_variants {
    ($trait:ident, $method:ident) => {
        impl $trait for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: &Coefficient) -> Coefficient {
                (&self).$method(rhs)
            }
        }
        impl $trait<Coefficient> for &Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                self.$method(&rhs)
            }
        }
    };
}

forward_value_variants!(Add, add);
forward_value_variants!(Sub, sub);
forward_value_variants!(Mul, mul);
forward_value_variants!(Div, div);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Coefficient> for Coefficient {
    fn mul_assign(&mut self, rhs: &Coefficient) {
        *self = &*self * rhs;
    }
}

impl Sum for Coefficient {
    fn sum<I: Iterator<Item = Coefficient>>(iter: I) -> Coefficient {
        iter.fold(Coefficient::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", fmt_imag(&self.im)),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{}-{}", fmt_rational(&self.re), fmt_imag(&-self.im.clone()))
                } else {
                    write!(f, "{}+{}", fmt_rational(&self.re), fmt_imag(&self.im))
                }
            }
        }
    }
}

fn fmt_imag(im: &BigRational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im).is_one() {
        "-i".to_string()
    } else {
        format!("{}i", fmt_rational(im))
    }
}
