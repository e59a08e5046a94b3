//! Exact scalar fields.
//!
//! Every computation in the crate is generic over [`Field`]. Two families are
//! provided: arbitrary-precision rationals ([`Rational`]) and prime fields
//! ([`Fp`]). Mixing fields is a type error, never a runtime coercion.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldTag {
    Rational,
    Prime(u32),
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Rational => write!(f, "Q"),
            FieldTag::Prime(p) => write!(f, "F{p}"),
        }
    }
}

/// An exact field.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const TAG: FieldTag;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    /// The image of `num / den`, or `None` if `den` vanishes in the field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;
    /// All elements, for finite fields.
    fn elements() -> Option<Vec<Self>>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// `self += a * b`.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let prod = a.clone() * b.clone();
        *self = std::mem::replace(self, Self::zero()) + prod;
    }

    /// Parses `"a/b"`, `"a"` (or a JSON-style integer literal).
    fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("malformed scalar {s:?}"));
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(s).map_err(|_| bad())?, BigInt::one()),
        };
        Self::from_ratio(&n, &d)
            .ok_or_else(|| Error::Parse(format!("denominator of {s:?} vanishes in {}", Self::TAG)))
    }
}

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn to_f64(&self) -> Option<f64> {
        self.0.to_f64()
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Add for Rational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Rational(self.0 + rhs.0)
    }
}

impl Sub for Rational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Rational(self.0 - rhs.0)
    }
}

impl Mul for Rational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Rational(self.0 * rhs.0)
    }
}

impl Neg for Rational {
    type Output = Self;
    fn neg(self) -> Self {
        Rational(-self.0)
    }
}

impl Field for Rational {
    const TAG: FieldTag = FieldTag::Rational;

    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_one(&self) -> bool {
        self.0.is_one()
    }

    fn inverse(&self) -> Option<Self> {
        if self.0.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    fn from_i64(v: i64) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(Rational(BigRational::new(num.clone(), den.clone())))
        }
    }

    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.0.is_zero() || b.0.is_zero() {
            return;
        }
        // Integer fast path: most structure constants are small integers.
        if a.0.is_integer() && b.0.is_integer() && self.0.is_integer() {
            let v = self.0.numer() + a.0.numer() * b.0.numer();
            self.0 = BigRational::from_integer(v);
            return;
        }
        self.0 = &self.0 + &a.0 * &b.0;
    }
}

/// Residue class modulo the prime `P`, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

/// The field with two elements.
pub type F2 = Fp<2>;
/// The field with three elements.
pub type F3 = Fp<3>;

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    const TAG: FieldTag = FieldTag::Prime(P);

    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (self.0 as u64, P as u64 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P as u64;
            }
            base = base * base % P as u64;
            exp >>= 1;
        }
        Some(Fp(acc as u32))
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |x: &BigInt| -> u32 {
            let r = x.mod_floor(&p);
            r.abs().to_u32().expect("residue fits in u32")
        };
        let d = Fp::<P>(reduce(den));
        Some(Fp::<P>(reduce(num)) * d.inverse()?)
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp).collect())
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self = *self + *a * *b;
    }
}

/// Shorthand for integer literals in generic code.
pub fn int<F: Field>(v: i64) -> F {
    F::from_i64(v)
}
