use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number; always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Build a rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Coefficient field of a [`Polynomial`](super::Polynomial).
///
/// Implemented for [`Rational`] (the field ℚ) and for
/// [`RatFunc`](super::RatFunc) (the field ℚ(t) of a family parameter).
pub trait Coefficient:
    Clone
    + fmt::Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// True for ℚ(t), false for ℚ.
    const PARAMETRIC: bool;

    fn from_rational(q: Rational) -> Self;

    /// The value as a rational constant, when it is one.
    fn as_rational(&self) -> Option<Rational>;

    /// Whether the coefficient should be printed with a leading minus sign.
    fn sign_negative(&self) -> bool;

    /// Render the coefficient for use in front of a monomial.
    ///
    /// `standalone` is set when there is no monomial after it.
    /// The sign has already been stripped by the caller.
    fn fmt_abs(&self, standalone: bool, out: &mut String);
}

impl Coefficient for Rational {
    const PARAMETRIC: bool = false;

    fn from_rational(q: Rational) -> Self {
        q
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }

    fn sign_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn fmt_abs(&self, standalone: bool, out: &mut String) {
        let a = self.abs();
        if a.is_one() && !standalone {
            return;
        }
        out.push_str(&fmt_rational(&a));
        if !standalone {
            out.push('*');
        }
    }
}

/// `p` or `p/q`, the textual form accepted by the polynomial parser.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
