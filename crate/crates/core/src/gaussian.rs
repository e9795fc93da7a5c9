//! Exact Gaussian rationals `ℚ(i)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::JsonInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianScalar {
    pub re: BigRational,
    pub im: BigRational,
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl GaussianScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianScalar { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rat(re, 1), rat(im, 1))
    }

    /// `(re_num/re_den) + (im_num/im_den)·i`. Panics on a zero denominator.
    pub fn from_fractions(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(rat(re_num, re_den), rat(im_num, im_den))
    }

    pub fn real(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    /// The unit `((m² − n²) + 2mn·i) / (m² + n²)` from a Pythagorean triple.
    /// Requires `(m, n) ≠ (0, 0)`.
    pub fn pythagorean_unit(m: i64, n: i64) -> Self {
        let (m, n) = (BigInt::from(m), BigInt::from(n));
        let c = &m * &m + &n * &n;
        assert!(!c.is_zero(), "pythagorean_unit needs (m, n) != (0, 0)");
        Self::new(
            BigRational::new(&m * &m - &n * &n, c.clone()),
            BigRational::new(BigInt::from(2) * &m * &n, c),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|x|² = re² + im²`.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_unit_modulus(&self) -> bool {
        self.norm_sq().is_one()
    }

    /// Errors with [`Error::NonUnitPhase`] unless `|x|² = 1`.
    pub fn expect_unit(&self) -> Result<()> {
        if self.is_unit_modulus() {
            Ok(())
        } else {
            Err(Error::NonUnitPhase(self.to_string()))
        }
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n.is_zero() {
            return None;
        }
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|inv| self * &inv)
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    /// A square root in `ℚ(i)`, if one exists. The root returned has
    /// nonnegative real part (and nonnegative imaginary part when the real
    /// part is zero).
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let n = rational_sqrt(&self.norm_sq())?;
        let two = rat(2, 1);
        let p = rational_sqrt(&((&n + &self.re) / &two))?;
        let mut q = rational_sqrt(&((&n - &self.re) / &two))?;
        if p.is_zero() {
            // self is a negative real; either sign of q works.
        } else if (&two * &p * &q) != self.im {
            q = -q;
        }
        let r = Self::new(p, q);
        debug_assert_eq!(&r * &r, *self);
        Some(r)
    }
}

/// Exact square root of a nonnegative rational.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    (&sn * &sn == *n && &sd * &sd == *d).then(|| BigRational::new(sn, sd))
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl $tr<&GaussianScalar> for &GaussianScalar {
            type Output = GaussianScalar;
            fn $f(self, o: &GaussianScalar) -> GaussianScalar {
                let f: fn(&GaussianScalar, &GaussianScalar) -> GaussianScalar = $body;
                f(self, o)
            }
        }
        impl $tr for GaussianScalar {
            type Output = GaussianScalar;
            fn $f(self, o: GaussianScalar) -> GaussianScalar {
                (&self).$f(&o)
            }
        }
    };
}

binop!(Add, add, |a, b| GaussianScalar::new(&a.re + &b.re, &a.im + &b.im));
binop!(Sub, sub, |a, b| GaussianScalar::new(&a.re - &b.re, &a.im - &b.im));
binop!(Mul, mul, |a, b| GaussianScalar::new(
    &a.re * &b.re - &a.im * &b.im,
    &a.re * &b.im + &a.im * &b.re
));

impl Neg for &GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        GaussianScalar::new(-&self.re, -&self.im)
    }
}

impl Neg for GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        -&self
    }
}

impl From<i64> for GaussianScalar {
    fn from(x: i64) -> Self {
        Self::from_ints(x, 0)
    }
}

impl fmt::Display for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{} {} {}i", self.re, sign, self.im.abs())
            }
        }
    }
}

/// Wire form `{"re_num","re_den","im_num","im_den"}` with reduced fractions.
#[derive(Serialize, Deserialize)]
struct GaussianJson {
    re_num: JsonInt,
    re_den: JsonInt,
    im_num: JsonInt,
    im_den: JsonInt,
}

impl Serialize for GaussianScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GaussianJson {
            re_num: JsonInt(self.re.numer().clone()),
            re_den: JsonInt(self.re.denom().clone()),
            im_num: JsonInt(self.im.numer().clone()),
            im_den: JsonInt(self.im.denom().clone()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let g = GaussianJson::deserialize(d)?;
        if g.re_den.0.is_zero() || g.im_den.0.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(GaussianScalar::new(
            BigRational::new(g.re_num.0, g.re_den.0),
            BigRational::new(g.im_num.0, g.im_den.0),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = GaussianScalar::from_fractions(3, 5, 4, 5);
        let b = GaussianScalar::from_fractions(4, 5, 3, 5);
        assert_eq!(a.checked_div(&b).unwrap(), GaussianScalar::from_fractions(24, 25, 7, 25));
        assert!(a.is_unit_modulus());
        assert_eq!(&a * &a.inv().unwrap(), GaussianScalar::one());
        assert!(GaussianScalar::zero().inv().is_none());
        assert_eq!(GaussianScalar::i().conj(), -GaussianScalar::i());
    }

    #[test]
    fn square_roots() {
        let m1 = GaussianScalar::from_ints(-1, 0);
        let r = m1.sqrt().unwrap();
        assert_eq!(&r * &r, m1);
        let x = GaussianScalar::from_ints(3, 4);
        assert_eq!(x.sqrt().unwrap(), GaussianScalar::from_ints(2, 1));
        assert!(GaussianScalar::from_ints(2, 0).sqrt().is_none());
        let y = GaussianScalar::from_ints(-3, -4);
        let s = y.sqrt().unwrap();
        assert_eq!(&s * &s, y);
    }

    #[test]
    fn pythagorean_units() {
        for m in -5..=5 {
            for n in -5..=5 {
                if (m, n) != (0, 0) {
                    assert!(GaussianScalar::pythagorean_unit(m, n).is_unit_modulus());
                }
            }
        }
    }

    #[test]
    fn json_shape() {
        let a = GaussianScalar::from_fractions(6, 10, -4, 5);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"re_num":3,"re_den":5,"im_num":-4,"im_den":5}"#);
        assert_eq!(serde_json::from_str::<GaussianScalar>(&s).unwrap(), a);
        assert_eq!(a.to_string(), "3/5 - 4/5i");
    }
}
