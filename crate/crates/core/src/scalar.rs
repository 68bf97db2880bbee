//! Real scalar fields the algebra is generic over.
//!
//! Every matrix, spinor and Lorentz transformation in the crate is built on a
//! [`Scalar`]. Two families implement it:
//!
//! * [`Rational`] (arbitrary precision): every comparison is exact equality
//!   and tolerances are ignored. All identity checks run here.
//! * `f64` / `f32`: comparisons use the caller-supplied tolerance. Used for
//!   momenta off the rational mass shell and for random Lorentz samples.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use serde_json::Value;

/// Arbitrary-precision rational number.
pub type Rational = BigRational;

/// A real field usable as the component type of complex matrices.
pub trait Scalar:
    Clone + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Num + Signed + Send + Sync + 'static
{
    /// `true` when arithmetic is exact and equality needs no tolerance.
    const EXACT: bool;

    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// Converts an exact rational, `None` if the value does not fit.
    fn from_rational(r: &Rational) -> Option<Self>;

    fn to_f64(&self) -> f64;

    /// Square root of a nonnegative value when it is representable.
    ///
    /// Rationals only have one when numerator and denominator are both
    /// perfect squares.
    fn checked_sqrt(&self) -> Option<Self>;

    /// Equality up to `tol` in floating point; exact equality otherwise.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    /// Zero test up to `tol` in floating point; exact otherwise.
    fn is_negligible(&self, tol: f64) -> bool {
        self.approx_eq(&Self::zero(), tol)
    }

    /// JSON encoding: rationals as `"p/q"` strings, floats as numbers.
    fn to_json(&self) -> Value;

    fn from_json(value: &Value) -> Option<Self>;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Rational::new(BigInt::from(numer), BigInt::from(denom))
    }

    fn from_rational(r: &Rational) -> Option<Self> {
        Some(r.clone())
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn checked_sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(Rational::new(n, d))
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn to_json(&self) -> Value {
        Value::String(format_rational(self))
    }

    fn from_json(value: &Value) -> Option<Self> {
        match value {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => n.as_i64().map(|i| Rational::from_integer(BigInt::from(i))),
            _ => None,
        }
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

macro_rules! impl_float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_ratio(numer: i64, denom: i64) -> Self {
                numer as $t / denom as $t
            }

            fn from_rational(r: &Rational) -> Option<Self> {
                let v = <$t as FromPrimitive>::from_f64(ToPrimitive::to_f64(r)?)?;
                v.is_finite().then_some(v)
            }

            fn to_f64(&self) -> f64 {
                *self as f64
            }

            fn checked_sqrt(&self) -> Option<Self> {
                (*self >= 0.0).then(|| self.sqrt())
            }

            fn approx_eq(&self, other: &Self, tol: f64) -> bool {
                ((*self - *other).abs() as f64) <= tol
            }

            fn to_json(&self) -> Value {
                serde_json::Number::from_f64(*self as f64)
                    .map(Value::Number)
                    .unwrap_or(Value::Null)
            }

            fn from_json(value: &Value) -> Option<Self> {
                value.as_f64().map(|v| v as $t)
            }
        }
    };
}

impl_float_scalar!(f64);
impl_float_scalar!(f32);

/// `"p/q"`, or `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p"`, `"-p"` or `"p/q"` with `q > 0`. No decimals.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numer: BigInt = num.parse().ok()?;
    let denom: BigInt = match den {
        Some(d) => {
            if d.starts_with(['+', '-']) {
                return None;
            }
            d.parse().ok()?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return None;
    }
    Some(Rational::new(numer, denom))
}

/// Shorthand for building rationals in tests and fixtures.
pub fn q(numer: i64, denom: i64) -> Rational {
    Rational::from_ratio(numer, denom)
}

/// Sign of a nonzero quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of<T: Scalar>(x: &T) -> Option<Sign> {
        if x.is_positive() {
            Some(Sign::Plus)
        } else if x.is_negative() {
            Some(Sign::Minus)
        } else {
            None
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i8(v: i8) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `x` multiplied by this sign.
    pub fn apply<T: Scalar>(self, x: T) -> T {
        match self {
            Sign::Plus => x,
            Sign::Minus => -x,
        }
    }

    pub fn to_scalar<T: Scalar>(self) -> T {
        self.apply(T::one())
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl serde::Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_i8(self.as_i8())
    }
}

impl<'de> serde::Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = i8::deserialize(d)?;
        Sign::from_i8(v).ok_or_else(|| serde::de::Error::custom(format!("invalid sign {v}")))
    }
}
