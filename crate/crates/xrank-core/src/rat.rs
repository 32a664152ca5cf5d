//! Arbitrary-precision rational scalars.
//!
//! Thin wrapper around `num_rational::BigRational` pinning the canonical
//! form used everywhere in this crate: fully reduced, denominator positive,
//! zero stored as 0/1. The wrapper exists so that parsing/printing and the
//! canonical-form guarantee live in one place.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

// Small helper: `format!` under a name that reads well at call sites below.
macro_rules! fmt_args {
    ($($t:tt)*) => { alloc::format!($($t)*) };
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`, reducing to canonical form. `den` must be nonzero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("division by zero rational"));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Parses the canonical text forms accepted across the crate: an integer
    /// `"-3"` or a fraction `"num/den"` already in lowest terms with a
    /// positive denominator. Anything else (including `"3/6"`, `"1/-2"`,
    /// `"0/5"`) is rejected so that serialized data has exactly one spelling.
    pub fn parse_canonical(s: &str) -> Result<Self> {
        let (num_s, den_s) = match s.split_once('/') {
            None => (s, None),
            Some((n, d)) => (n, Some(d)),
        };
        let num: BigInt = num_s
            .parse()
            .map_err(|_| Error::invalid(fmt_args!("malformed integer `{num_s}`")))?;
        let den: BigInt = match den_s {
            None => BigInt::one(),
            Some(d) => d
                .parse()
                .map_err(|_| Error::invalid(fmt_args!("malformed integer `{d}`")))?,
        };
        if den.sign() != Sign::Plus {
            return Err(Error::invalid(fmt_args!(
                "denominator of `{s}` must be positive"
            )));
        }
        if den_s.is_some() {
            if den.is_one() {
                return Err(Error::invalid(fmt_args!(
                    "`{s}` is not canonical: integers are written without `/1`"
                )));
            }
            let g = num_integer::Integer::gcd(&num, &den);
            if !g.is_one() {
                return Err(Error::invalid(fmt_args!(
                    "`{s}` is not in lowest terms"
                )));
            }
        }
        Ok(Rational(BigRational::new_raw(num, den)))
    }

    /// Canonical text form: integer without `/1`, otherwise `num/den`.
    pub fn to_canonical_string(&self) -> String {
        if self.0.denom().is_one() {
            self.0.numer().to_string()
        } else {
            alloc::format!("{}/{}", self.0.numer(), self.0.denom())
        }
    }

    /// Exposes the inner value for interop with `num` traits.
    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(self.0 / rhs.0)
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &'a Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl<'a> Neg for &'a Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

impl Rational {
    pub fn cmp_abs(&self, other: &Rational) -> Ordering {
        self.abs().cmp(&other.abs())
    }
}

/// Clears denominators of a slice: returns integer content-scaled copies such
/// that all entries are integers with gcd 1 (up to overall sign, the sign of
/// the first nonzero entry is preserved). Empty/all-zero slices come back
/// unchanged.
pub fn clear_denominators(values: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    if values.iter().all(|v| v.is_zero()) {
        return values.iter().map(|_| BigInt::zero()).collect();
    }
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    let mut ints: Vec<BigInt> = values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut ints {
            *x /= &g;
        }
    }
    ints
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_parsing_accepts_lowest_terms_only() {
        assert_eq!(Rational::parse_canonical("3").unwrap(), Rational::from_int(3));
        assert_eq!(
            Rational::parse_canonical("-7/2").unwrap(),
            Rational::new(-7, 2)
        );
        assert!(Rational::parse_canonical("3/6").is_err());
        assert!(Rational::parse_canonical("1/-2").is_err());
        assert!(Rational::parse_canonical("4/1").is_err());
        assert!(Rational::parse_canonical("0/5").is_err());
        assert!(Rational::parse_canonical("a").is_err());
    }

    #[test]
    fn arithmetic_reduces() {
        let a = Rational::new(1, 6);
        let b = Rational::new(1, 3);
        let s = &a + &b;
        assert_eq!(s, Rational::new(1, 2));
        assert_eq!(s.to_canonical_string(), "1/2");
        assert_eq!((&a - &a), Rational::zero());
        assert_eq!(Rational::new(-2, 4), Rational::new(-1, 2));
    }

    #[test]
    fn pow_and_recip() {
        assert_eq!(Rational::new(2, 3).pow(3), Rational::new(8, 27));
        assert_eq!(
            Rational::new(-2, 5).recip().unwrap(),
            Rational::new(-5, 2)
        );
        assert!(Rational::zero().recip().is_err());
    }

    #[test]
    fn clears_denominators_to_primitive_integers() {
        let v = [Rational::new(1, 2), Rational::new(-1, 3), Rational::from_int(2)];
        let ints = clear_denominators(&v);
        assert_eq!(ints, [BigInt::from(3), BigInt::from(-2), BigInt::from(12)]);
    }
}
