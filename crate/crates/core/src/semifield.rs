//! The four totally ordered idempotent semifields and their scalar arithmetic.
//!
//! | Flavor      | ⊕   | ⊗ | zero | one | ≤_S |
//! |-------------|-----|---|------|-----|-----|
//! | `max-plus`  | max | + | −∞   | 0   | ≤   |
//! | `min-plus`  | min | + | +∞   | 0   | ≥   |
//! | `max-times` | max | × | 0    | 1   | ≤   |
//! | `min-times` | min | × | +∞   | 1   | ≥   |
//!
//! The zero is always the symbolic [`Scalar::Zero`], never a large finite
//! stand-in. [`Scalar::Top`] is the sentinel `0⁻` used by ratio matrices for
//! divisions by zero; it sits above every carrier element and is rejected by
//! the arithmetic.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_traits::Num;

use crate::error::{Error, Result};

/// Numeric payload carried by a [`Scalar`].
///
/// Exact rationals (`BigRational`) are the intended payload; anything with
/// field arithmetic and a (partial) order works.
pub trait Coefficient: Clone + PartialOrd + Num + Neg<Output = Self> + fmt::Debug {}

impl<T> Coefficient for T where T: Clone + PartialOrd + Num + Neg<Output = T> + fmt::Debug {}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar<T> {
    /// The semifield zero: −∞, +∞ or 0 depending on the flavor.
    Zero,
    Value(T),
    /// `0⁻`, strictly above every element of the carrier.
    Top,
}

impl<T> Scalar<T> {
    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Zero)
    }

    pub fn is_top(&self) -> bool {
        matches!(self, Scalar::Top)
    }

    pub fn value(&self) -> Option<&T> {
        match self {
            Scalar::Value(v) => Some(v),
            _ => None,
        }
    }
}

impl<T: fmt::Display> fmt::Display for Scalar<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Zero => f.write_str("zero"),
            Scalar::Value(v) => v.fmt(f),
            Scalar::Top => f.write_str("0^-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    MaxPlus,
    MinPlus,
    MaxTimes,
    MinTimes,
}

impl Flavor {
    pub const ALL: [Flavor; 4] = [
        Flavor::MaxPlus,
        Flavor::MinPlus,
        Flavor::MaxTimes,
        Flavor::MinTimes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Flavor::MaxPlus => "max-plus",
            Flavor::MinPlus => "min-plus",
            Flavor::MaxTimes => "max-times",
            Flavor::MinTimes => "min-times",
        }
    }

    /// True when ⊕ is the numeric maximum (and ≤_S the numeric ≤).
    pub fn is_max(self) -> bool {
        matches!(self, Flavor::MaxPlus | Flavor::MaxTimes)
    }

    /// True when ⊗ is numeric addition.
    pub fn is_additive(self) -> bool {
        matches!(self, Flavor::MaxPlus | Flavor::MinPlus)
    }

    pub fn zero<T>(self) -> Scalar<T> {
        Scalar::Zero
    }

    pub fn one<T: Coefficient>(self) -> Scalar<T> {
        if self.is_additive() {
            Scalar::Value(T::zero())
        } else {
            Scalar::Value(T::one())
        }
    }

    /// Lifts a numeric value into the carrier.
    ///
    /// In max-times a numeric 0 is the semifield zero and negatives are
    /// rejected; min-times only admits strictly positive values.
    pub fn scalar<T: Coefficient>(self, value: T) -> Result<Scalar<T>> {
        match self {
            Flavor::MaxPlus | Flavor::MinPlus => Ok(Scalar::Value(value)),
            Flavor::MaxTimes if value.is_zero() => Ok(Scalar::Zero),
            Flavor::MaxTimes if value > T::zero() => Ok(Scalar::Value(value)),
            Flavor::MinTimes if value > T::zero() => Ok(Scalar::Value(value)),
            _ => Err(Error::OutOfCarrier {
                flavor: self,
                value: format!("{value:?}"),
            }),
        }
    }

    /// Brings an arbitrary scalar into canonical form for this flavor.
    pub fn normalize<T: Coefficient>(self, s: Scalar<T>) -> Result<Scalar<T>> {
        match s {
            Scalar::Value(v) => self.scalar(v),
            other => Ok(other),
        }
    }

    pub fn add<T: Coefficient>(self, a: &Scalar<T>, b: &Scalar<T>) -> Result<Scalar<T>> {
        match (a, b) {
            (Scalar::Top, _) | (_, Scalar::Top) => Err(Error::TopOperand),
            (Scalar::Zero, x) | (x, Scalar::Zero) => Ok(x.clone()),
            (Scalar::Value(x), Scalar::Value(y)) => {
                let pick_x = if self.is_max() { x >= y } else { x <= y };
                Ok(Scalar::Value(if pick_x { x.clone() } else { y.clone() }))
            }
        }
    }

    pub fn mul<T: Coefficient>(self, a: &Scalar<T>, b: &Scalar<T>) -> Result<Scalar<T>> {
        match (a, b) {
            (Scalar::Top, _) | (_, Scalar::Top) => Err(Error::TopOperand),
            (Scalar::Zero, _) | (_, Scalar::Zero) => Ok(Scalar::Zero),
            (Scalar::Value(x), Scalar::Value(y)) => Ok(Scalar::Value(if self.is_additive() {
                x.clone() + y.clone()
            } else {
                x.clone() * y.clone()
            })),
        }
    }

    pub fn inv<T: Coefficient>(self, a: &Scalar<T>) -> Result<Scalar<T>> {
        match a {
            Scalar::Top => Err(Error::TopOperand),
            Scalar::Zero => Err(Error::InverseOfZero),
            Scalar::Value(x) if self.is_additive() => Ok(Scalar::Value(-x.clone())),
            Scalar::Value(x) => Ok(Scalar::Value(T::one() / x.clone())),
        }
    }

    /// `a ⊗ b⁻¹`.
    pub fn div<T: Coefficient>(self, a: &Scalar<T>, b: &Scalar<T>) -> Result<Scalar<T>> {
        self.mul(a, &self.inv(b)?)
    }

    /// ⊕ over an iterator; the empty sum is zero.
    pub fn sum<'a, T, I>(self, items: I) -> Result<Scalar<T>>
    where
        T: Coefficient + 'a,
        I: IntoIterator<Item = &'a Scalar<T>>,
    {
        items
            .into_iter()
            .try_fold(Scalar::Zero, |acc, x| self.add(&acc, x))
    }

    /// ⊗ over an iterator; the empty product is one.
    pub fn product<'a, T, I>(self, items: I) -> Result<Scalar<T>>
    where
        T: Coefficient + 'a,
        I: IntoIterator<Item = &'a Scalar<T>>,
    {
        items
            .into_iter()
            .try_fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// The total order ≤_S, extended so that zero is least and `0⁻` greatest.
    ///
    /// Incomparable payloads (NaN) compare equal.
    pub fn cmp_s<T: Coefficient>(self, a: &Scalar<T>, b: &Scalar<T>) -> Ordering {
        match (a, b) {
            (Scalar::Zero, Scalar::Zero) | (Scalar::Top, Scalar::Top) => Ordering::Equal,
            (Scalar::Zero, _) | (_, Scalar::Top) => Ordering::Less,
            (_, Scalar::Zero) | (Scalar::Top, _) => Ordering::Greater,
            (Scalar::Value(x), Scalar::Value(y)) => {
                let numeric = x.partial_cmp(y).unwrap_or(Ordering::Equal);
                if self.is_max() {
                    numeric
                } else {
                    numeric.reverse()
                }
            }
        }
    }

    pub fn leq_s<T: Coefficient>(self, a: &Scalar<T>, b: &Scalar<T>) -> bool {
        self.cmp_s(a, b) != Ordering::Greater
    }

    pub fn lt_s<T: Coefficient>(self, a: &Scalar<T>, b: &Scalar<T>) -> bool {
        self.cmp_s(a, b) == Ordering::Less
    }

    /// Parses the text form: `"p"`, `"p/q"` or `"zero"`.
    pub fn parse_scalar<T>(self, text: &str) -> Result<Scalar<T>>
    where
        T: Coefficient + FromStr,
    {
        let text = text.trim();
        if text.eq_ignore_ascii_case("zero") {
            return Ok(Scalar::Zero);
        }
        let value = text
            .parse::<T>()
            .map_err(|_| Error::ParseScalar(text.to_owned()))?;
        self.scalar(value)
    }

    /// Renders the text form. Top has no text form.
    pub fn format_scalar<T: fmt::Display>(self, s: &Scalar<T>) -> Result<String> {
        match s {
            Scalar::Top => Err(Error::TopOperand),
            other => Ok(other.to_string()),
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Flavor::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownFlavor(s.to_owned()))
    }
}

/// The identity ε-function. It is an involution fixing zero.
pub fn epsilon<T: Clone>(a: &Scalar<T>) -> Scalar<T> {
    a.clone()
}
