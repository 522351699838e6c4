//! Exact ground-field elements.
//!
//! Two kinds of field are supported: the rationals (arbitrary precision, always
//! kept in lowest terms by `num-rational`) and small prime fields `Fp<P>`.
//! Every computation in the crate is generic over [`Scalar`], so the same code
//! runs an identity check over ℚ or an exhaustive search over 𝔽ₚ.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical reduced form.
pub type Rational = BigRational;

/// Which ground field a document or computation lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Prime(u32),
}

impl Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Prime(p) => write!(f, "prime({p})"),
        }
    }
}

/// An exact field element.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_i64(v: i64) -> Self;
    fn field() -> FieldKind;
    /// Parses the canonical string form (`"p/q"`, `"p"`, or `"k mod p"`).
    fn parse_scalar(s: &str) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A field with finitely many elements, enumerable for brute-force search.
pub trait FiniteField: Scalar {
    fn elements() -> Vec<Self>;
}

impl Scalar for Rational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }

    fn one() -> Self {
        <BigRational as One>::one()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn field() -> FieldKind {
        FieldKind::Rational
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational scalar {s:?}"));
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if Zero::is_zero(&den) {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        // `BigRational::new` reduces and normalizes the sign onto the numerator.
        let r = BigRational::new(num, den);
        debug_assert!(r.denom().is_positive());
        Ok(r)
    }
}

/// Element of the prime field 𝔽ₚ, stored as its residue in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.0, P)
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

impl<const P: u32> Scalar for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn inv(&self) -> Option<Self> {
        // Fermat: a^(p-2) for prime p.
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn field() -> FieldKind {
        FieldKind::Prime(P)
    }

    fn parse_scalar(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid scalar {s:?} for prime field {P}"));
        let s = s.trim();
        let (value, modulus) = match s.split_once("mod") {
            Some((v, m)) => (v.trim(), Some(m.trim())),
            None => (s, None),
        };
        if let Some(m) = modulus {
            let m: u32 = m.parse().map_err(|_| bad())?;
            if m != P {
                return Err(Error::FieldMismatch {
                    expected: FieldKind::Prime(P),
                    found: FieldKind::Prime(m),
                });
            }
        }
        let v: i64 = value.parse().map_err(|_| bad())?;
        Ok(Fp::new(v))
    }
}

impl<const P: u32> FiniteField for Fp<P> {
    fn elements() -> Vec<Self> {
        (0..P).map(Fp).collect()
    }
}

/// Sums an iterator of scalars.
pub fn sum<S: Scalar>(it: impl IntoIterator<Item = S>) -> S {
    it.into_iter().fold(S::zero(), |acc, x| acc + x)
}
