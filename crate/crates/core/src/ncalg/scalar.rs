//! Exact scalars: rationals, polynomials in named indeterminates, and rational
//! functions whose denominator is a polynomial in the distinguished variable `t`.
//!
//! Every value is kept in the narrowest form that represents it, so derived
//! equality is canonical. Rational-function denominators are monic in `t` and
//! coprime to the numerator (viewed as a polynomial in `t` over the other
//! indeterminates).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::mpoly::{uni_degree, uni_divrem, uni_gcd, uni_mul, uni_trim, MPoly};
use crate::error::{Error, Result};

/// Name of the distinguished variable of rational functions.
pub const T_VAR: &str = "t";

/// `num / den` with `den` a monic polynomial in `t` of positive degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl RatFunc {
    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Poly(MPoly),
    Frac(RatFunc),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn var(name: &str) -> Self {
        Scalar::Poly(MPoly::var(name))
    }

    pub fn t() -> Self {
        Scalar::var(T_VAR)
    }

    pub fn from_poly(p: MPoly) -> Self {
        match p.as_constant() {
            Some(c) => Scalar::Rat(c),
            None => Scalar::Poly(p),
        }
    }

    /// Builds `num / den`; `den` must be a nonzero polynomial in `t` alone.
    pub fn from_fraction(num: MPoly, den: &MPoly) -> Result<Self> {
        let dense = den
            .to_univariate(T_VAR)
            .ok_or_else(|| Error::NotInvertible(den.to_string()))?;
        if uni_degree(&dense).is_none() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize_fraction(num, dense))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// Numerator and denominator as polynomials (`den = 1` unless a fraction).
    pub fn to_fraction(&self) -> (MPoly, MPoly) {
        match self {
            Scalar::Rat(r) => (MPoly::constant(r.clone()), MPoly::one()),
            Scalar::Poly(p) => (p.clone(), MPoly::one()),
            Scalar::Frac(f) => (f.num.clone(), f.den.clone()),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(r * c),
            Scalar::Poly(p) => Scalar::from_poly(p.scale(c)),
            Scalar::Frac(f) => {
                if c.is_zero() {
                    Scalar::zero()
                } else {
                    Scalar::Frac(RatFunc {
                        num: f.num.scale(c),
                        den: f.den.clone(),
                    })
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Division; the divisor must be free of indeterminates other than `t`.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (rn, rd) = rhs.to_fraction();
        let (ln, ld) = self.to_fraction();
        let dense = rn
            .to_univariate(T_VAR)
            .ok_or_else(|| Error::NotInvertible(rhs.to_string()))?;
        let ld_dense = ld.to_univariate(T_VAR).expect("denominators live in t");
        let den = uni_mul(&ld_dense, &dense);
        Ok(normalize_fraction(&ln * &rd, den))
    }

    /// Derivative with respect to `t`; other indeterminates are constants.
    pub fn diff_t(&self) -> Scalar {
        match self {
            Scalar::Rat(_) => Scalar::zero(),
            Scalar::Poly(p) => Scalar::from_poly(p.diff(T_VAR)),
            Scalar::Frac(f) => {
                let num = &(&f.num.diff(T_VAR) * &f.den) - &(&f.num * &f.den.diff(T_VAR));
                let den = &f.den * &f.den;
                normalize_fraction(num, den.to_univariate(T_VAR).unwrap())
            }
        }
    }

    /// Replaces an indeterminate other than `t` by a polynomial-valued scalar.
    pub fn substitute(&self, var: &str, value: &Scalar) -> Result<Scalar> {
        let value = match value {
            Scalar::Rat(r) => MPoly::constant(r.clone()),
            Scalar::Poly(p) => p.clone(),
            Scalar::Frac(_) => {
                return Err(Error::Precondition(
                    "substituted value must be polynomial".into(),
                ))
            }
        };
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Poly(p) => Ok(Scalar::from_poly(p.substitute(var, &value))),
            Scalar::Frac(f) => {
                if var == T_VAR {
                    return Err(Error::Precondition(
                        "cannot substitute the denominator variable".into(),
                    ));
                }
                Ok(normalize_fraction(
                    f.num.substitute(var, &value),
                    f.den.to_univariate(T_VAR).unwrap(),
                ))
            }
        }
    }

    pub fn vars(&self) -> std::collections::BTreeSet<String> {
        let (n, d) = self.to_fraction();
        let mut v = n.vars();
        v.extend(d.vars());
        v
    }
}

fn normalize_fraction(num: MPoly, mut den: Vec<BigRational>) -> Scalar {
    uni_trim(&mut den);
    if num.is_zero() {
        return Scalar::zero();
    }
    let d = uni_degree(&den).expect("nonzero denominator");
    if d == 0 {
        return Scalar::from_poly(num.scale(&den[0].recip()));
    }
    let mut parts = num.split_by(T_VAR);
    let mut g = den.clone();
    for c in parts.values() {
        if uni_degree(&g) == Some(0) {
            break;
        }
        g = uni_gcd(&g, c);
    }
    if uni_degree(&g).unwrap_or(0) > 0 {
        den = uni_divrem(&den, &g).0;
        for c in parts.values_mut() {
            *c = uni_divrem(c, &g).0;
        }
    }
    let dd = uni_degree(&den).unwrap();
    let lead = den[dd].recip();
    let num = MPoly::join_by(T_VAR, parts).scale(&lead);
    if dd == 0 {
        return Scalar::from_poly(num);
    }
    for c in den.iter_mut() {
        *c = &*c * &lead;
    }
    Scalar::Frac(RatFunc {
        num,
        den: MPoly::from_univariate(T_VAR, &den),
    })
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl From<MPoly> for Scalar {
    fn from(p: MPoly) -> Self {
        Scalar::from_poly(p)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Frac(_), _) | (_, Scalar::Frac(_)) => {
                let (an, ad) = self.to_fraction();
                let (bn, bd) = rhs.to_fraction();
                if ad == bd {
                    normalize_fraction(&an + &bn, ad.to_univariate(T_VAR).unwrap())
                } else {
                    let num = &(&an * &bd) + &(&bn * &ad);
                    normalize_fraction(num, (&ad * &bd).to_univariate(T_VAR).unwrap())
                }
            }
            _ => {
                let (a, _) = self.to_fraction();
                let (b, _) = rhs.to_fraction();
                Scalar::from_poly(&a + &b)
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r),
            Scalar::Poly(p) => Scalar::Poly(-p),
            Scalar::Frac(f) => Scalar::Frac(RatFunc {
                num: -&f.num,
                den: f.den.clone(),
            }),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => self + &(-rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Rat(a), other) | (other, Scalar::Rat(a)) => other.scale(a),
            (Scalar::Poly(a), Scalar::Poly(b)) => Scalar::from_poly(a * b),
            _ => {
                let (an, ad) = self.to_fraction();
                let (bn, bd) = rhs.to_fraction();
                normalize_fraction(&an * &bn, (&ad * &bd).to_univariate(T_VAR).unwrap())
            }
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::ops::AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

fn needs_parens(p: &MPoly) -> bool {
    p.len() > 1
        || p.terms()
            .next()
            .is_some_and(|(m, c)| !m.is_one() && !(c.is_one() || (-c).is_one()))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Poly(p) => write!(f, "{p}"),
            Scalar::Frac(rf) => {
                if rf.num.len() > 1 {
                    write!(f, "({})", rf.num)?;
                } else {
                    write!(f, "{}", rf.num)?;
                }
                if needs_parens(&rf.den) {
                    write!(f, "/({})", rf.den)
                } else {
                    write!(f, "/{}", rf.den)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_and_demotes() {
        let t = Scalar::t();
        let w = Scalar::var("w1");
        let f = w.checked_div(&t).unwrap();
        assert!(matches!(f, Scalar::Frac(_)));
        assert_eq!(f.to_string(), "w1/t");
        let back = &f * &t;
        assert_eq!(back, w);
        assert_eq!(&(&f - &f) + &Scalar::int(3), Scalar::int(3));
    }

    #[test]
    fn cancels_common_factors_in_t() {
        // (t^2 - 1) w / (t - 1) = (t + 1) w
        let t = MPoly::var("t");
        let one = MPoly::one();
        let num = &(&(&t * &t) - &one) * &MPoly::var("w");
        let s = Scalar::from_fraction(num, &(&t - &one)).unwrap();
        assert_eq!(s, Scalar::Poly(&(&t + &one) * &MPoly::var("w")));
    }

    #[test]
    fn derivative_of_inverse_power() {
        // d/dt (w / t^2) = -2 w / t^3
        let w = Scalar::var("w");
        let s = w.checked_div(&Scalar::t().pow(2)).unwrap();
        let expected = w
            .scale(&BigRational::from_integer((-2).into()))
            .checked_div(&Scalar::t().pow(3))
            .unwrap();
        assert_eq!(s.diff_t(), expected);
    }

    #[test]
    fn rejects_non_t_divisors() {
        assert!(matches!(
            Scalar::one().checked_div(&Scalar::var("w")),
            Err(Error::NotInvertible(_))
        ));
        assert_eq!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::ratio(1, 120).to_string(), "1/120");
        assert_eq!(Scalar::int(-28).to_string(), "-28");
        let s = (Scalar::var("w1") + Scalar::var("w2"))
            .checked_div(&Scalar::t().pow(2))
            .unwrap();
        assert_eq!(s.to_string(), "(w2 + w1)/t^2");
    }
}
