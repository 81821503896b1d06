//! The field ℚ(t) of rational functions in the family parameter `t`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::coeff::{fmt_rational, Coefficient, Rational};

/// Dense univariate polynomial in `t` with rational coefficients,
/// lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·t^k`.
    pub fn term(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::term(Rational::one(), 1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Self::default(), Self::default());
        };
        if sd < dd {
            return (Self::default(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (dd..=sd).rev() {
            let c = &rem[k] / &lc;
            if c.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                let v = &rem[k - dd + j] - &c * dj;
                rem[k - dd + j] = v;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    fn fmt_into(&self, out: &mut String) {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            first = false;
            let a = c.abs();
            if k == 0 {
                out.push_str(&fmt_rational(&a));
                continue;
            }
            if !a.is_one() {
                out.push_str(&fmt_rational(&a));
                out.push('*');
            }
            out.push('t');
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
        if first {
            out.push('0');
        }
    }
}

impl Zero for UniPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for UniPoly {
    fn one() -> Self {
        Self::constant(Rational::one())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        let zero = Rational::zero();
        UniPoly::new(
            (0..len)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + o.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Add for UniPoly {
    type Output = UniPoly;
    fn add(self, o: UniPoly) -> UniPoly {
        &self + &o
    }
}

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        self + &(-o.clone())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;
    fn mul(self, o: UniPoly) -> UniPoly {
        &self * &o
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.fmt_into(&mut s);
        f.write_str(&s)
    }
}

/// Element of ℚ(t), kept as `num/den` with `gcd(num, den) = 1` and `den` monic.
///
/// This canonical form is unique, so equality and the zero test are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.leading().unwrap().recip();
            return RatFunc {
                num: num.scale(&c),
                den: UniPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let c = den.leading().unwrap().recip();
        RatFunc {
            num: num.scale(&c),
            den: den.scale(&c),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn t() -> Self {
        Self::from_poly(UniPoly::t())
    }

    pub fn numer(&self) -> &UniPoly {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly {
        &self.den
    }

    /// True when the denominator is 1, i.e. the value lies in ℚ[t].
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Value at `t = t0`, or `None` at a pole.
    pub fn eval(&self, t0: &Rational) -> Option<Rational> {
        let d = self.den.eval(t0);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(t0) / d)
        }
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in Q(t)");
        Self::new(self.den.clone(), self.num.clone())
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, o: RatFunc) -> RatFunc {
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(&self.num + &o.num);
        }
        if self.den == o.den {
            return Self::new(&self.num + &o.num, self.den);
        }
        Self::new(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, o: RatFunc) -> RatFunc {
        self + (-o)
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, o: RatFunc) -> RatFunc {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_polynomial() && o.is_polynomial() {
            return Self::from_poly(&self.num * &o.num);
        }
        Self::new(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: RatFunc) -> RatFunc {
        self * o.inv()
    }
}

impl Coefficient for RatFunc {
    const PARAMETRIC: bool = true;

    fn from_rational(q: Rational) -> Self {
        Self::from_poly(UniPoly::constant(q))
    }

    fn as_rational(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    fn sign_negative(&self) -> bool {
        match self.as_rational() {
            Some(q) => q.sign_negative(),
            None => {
                self.is_polynomial()
                    && self.num.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
                    && self.num.leading().unwrap().is_negative()
            }
        }
    }

    fn fmt_abs(&self, standalone: bool, out: &mut String) {
        if let Some(q) = self.as_rational() {
            return q.fmt_abs(standalone, out);
        }
        let single = self.is_polynomial() && self.num.coeffs.iter().filter(|c| !c.is_zero()).count() == 1;
        if single {
            let lc = self.num.leading().unwrap();
            let k = self.num.degree().unwrap();
            UniPoly::term(lc.abs(), k).fmt_into(out);
        } else {
            out.push('(');
            self.num.fmt_into(out);
            out.push(')');
            if !self.is_polynomial() {
                out.push_str("/(");
                self.den.fmt_into(out);
                out.push(')');
            }
        }
        if !standalone {
            out.push('*');
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::coeff::rat;

    fn up(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn canonical_form_cancels_common_factor() {
        // (t^2 - 1) / (2t - 2) = (t + 1) / 2
        let f = RatFunc::new(up(&[-1, 0, 1]), up(&[-2, 2]));
        assert!(f.is_polynomial());
        assert_eq!(f.numer(), &UniPoly::new(vec![rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn one_minus_t_plus_t_is_one() {
        let one_minus_t = RatFunc::from_poly(up(&[1, -1]));
        assert!((one_minus_t + RatFunc::t()).is_one());
    }

    #[test]
    fn pole_detection() {
        let f = RatFunc::new(up(&[1]), up(&[0, 1]));
        assert_eq!(f.eval(&rat(0, 1)), None);
        assert_eq!(f.eval(&rat(2, 1)), Some(rat(1, 2)));
    }

    #[test]
    fn division_round_trips() {
        let a = RatFunc::new(up(&[3, 0, 1]), up(&[1, 1]));
        let b = RatFunc::new(up(&[0, 2]), up(&[5, 0, 1]));
        assert_eq!((a.clone() / b.clone()) * b, a);
    }

    #[test]
    fn gcd_is_monic() {
        let g = up(&[-2, 2]).gcd(&up(&[-3, 0, 3]));
        assert_eq!(g, up(&[-1, 1]));
    }
}
