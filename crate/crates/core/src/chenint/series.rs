use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ncalg::{deshuffle_pairs, Alphabet, NcPoly, Scalar, Word};

/// Element of the tensor algebra modulo words longer than `truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    truncation: usize,
    poly: NcPoly,
}

/// Reported when two series with different truncations are combined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationMismatch {
    pub left: usize,
    pub right: usize,
    pub used: usize,
}

impl TruncSeries {
    pub fn new(poly: NcPoly, truncation: usize) -> Self {
        TruncSeries {
            poly: poly.truncate(truncation),
            truncation,
        }
    }

    pub fn one(alphabet: &Alphabet, truncation: usize) -> Self {
        TruncSeries::new(NcPoly::one(alphabet), truncation)
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.poly.alphabet()
    }

    pub fn poly(&self) -> &NcPoly {
        &self.poly
    }

    pub fn into_poly(self) -> NcPoly {
        self.poly
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.poly.coeff(w)
    }

    pub fn homogeneous_part(&self, k: usize) -> NcPoly {
        self.poly.homogeneous_part(k)
    }

    /// `<self, omega>`; `omega` may not exceed the truncation degree.
    pub fn pair(&self, omega: &NcPoly) -> Result<Scalar> {
        if let Some(d) = omega.max_degree() {
            if d > self.truncation {
                return Err(Error::DegreeOverflow {
                    degree: d,
                    truncation: self.truncation,
                });
            }
        }
        self.poly.inner(omega)
    }

    /// Product truncated at the smaller of the two truncations, together with
    /// a note when the truncations differ.
    pub fn mul_with_meta(
        &self,
        rhs: &TruncSeries,
    ) -> Result<(TruncSeries, Option<TruncationMismatch>)> {
        let used = self.truncation.min(rhs.truncation);
        let poly = self.poly.concat_mul_truncated(&rhs.poly, used)?;
        let note = (self.truncation != rhs.truncation).then_some(TruncationMismatch {
            left: self.truncation,
            right: rhs.truncation,
            used,
        });
        Ok((
            TruncSeries {
                truncation: used,
                poly,
            },
            note,
        ))
    }

    pub fn mul(&self, rhs: &TruncSeries) -> Result<TruncSeries> {
        self.mul_with_meta(rhs).map(|(s, _)| s)
    }

    pub fn add(&self, rhs: &TruncSeries) -> Result<TruncSeries> {
        let used = self.truncation.min(rhs.truncation);
        Ok(TruncSeries::new(self.poly.add(&rhs.poly)?, used))
    }

    fn require_unit_constant(&self, op: &str) -> Result<NcPoly> {
        if !self.poly.constant_term().is_one() {
            return Err(Error::Precondition(format!(
                "{op} requires constant term 1, found {}",
                self.poly.constant_term()
            )));
        }
        self.poly.sub(&NcPoly::one(self.alphabet()))
    }

    /// `exp(p)` modulo words longer than `truncation`; `p` must have no constant term.
    pub fn exp(p: &NcPoly, truncation: usize) -> Result<TruncSeries> {
        if !p.constant_term().is_zero() {
            return Err(Error::Precondition(
                "exp requires a zero constant term".into(),
            ));
        }
        let p = p.truncate(truncation);
        let mut out = NcPoly::one(p.alphabet());
        let mut power = NcPoly::one(p.alphabet());
        for j in 1..=truncation {
            power = power.concat_mul_truncated(&p, truncation)?;
            if power.is_zero() {
                break;
            }
            let inv_fact = BigRational::new(1.into(), factorial(j));
            out = out.add(&power.scale_rational(&inv_fact))?;
        }
        Ok(TruncSeries {
            truncation,
            poly: out,
        })
    }

    /// `log(self)` by the series of `log(1 + q)`; requires constant term 1.
    pub fn log(&self) -> Result<TruncSeries> {
        let q = self.require_unit_constant("log")?;
        let n = self.truncation;
        let mut out = NcPoly::zero(q.alphabet());
        let mut power = NcPoly::one(q.alphabet());
        for j in 1..=n {
            power = power.concat_mul_truncated(&q, n)?;
            if power.is_zero() {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            out =
                out.add(&power.scale_rational(&BigRational::new(sign.into(), (j as i64).into())))?;
        }
        Ok(TruncSeries {
            truncation: n,
            poly: out,
        })
    }

    /// Multiplicative inverse by the geometric series; requires constant term 1.
    pub fn inv(&self) -> Result<TruncSeries> {
        let q = self.require_unit_constant("inv")?.neg();
        let n = self.truncation;
        let mut out = NcPoly::one(q.alphabet());
        let mut power = NcPoly::one(q.alphabet());
        for _ in 1..=n {
            power = power.concat_mul_truncated(&q, n)?;
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(TruncSeries {
            truncation: n,
            poly: out,
        })
    }

    /// Whether the coefficients satisfy the shuffle relations
    /// `<s,u><s,v> = <s, u * v>` for all words with `|u| + |v| <= truncation`.
    pub fn is_grouplike(&self) -> bool {
        if !self.poly.constant_term().is_one() {
            return false;
        }
        let pairs = deshuffle_pairs(&self.poly);
        for ((u, v), c) in &pairs {
            if *c != &self.coeff(u) * &self.coeff(v) {
                return false;
            }
        }
        let support: Vec<(&Word, &Scalar)> =
            self.poly.terms().filter(|(w, _)| !w.is_empty()).collect();
        for (u, a) in &support {
            for (v, b) in &support {
                if u.len() + v.len() > self.truncation {
                    break;
                }
                let key = ((*u).clone(), (*v).clone());
                if !pairs.contains_key(&key) && !(*a * *b).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// `exp(x_i)` truncated, built directly from its coefficients `1/j!`.
pub(crate) fn letter_exponential(
    alphabet: &Alphabet,
    i: usize,
    sign: i64,
    n: usize,
) -> TruncSeries {
    let mut terms: BTreeMap<Word, Scalar> = BTreeMap::new();
    for j in 0..=n {
        let s = if j % 2 == 1 { sign } else { 1 };
        terms.insert(
            Word(vec![i as u8; j]),
            Scalar::Rat(BigRational::new(s.into(), factorial(j))),
        );
    }
    TruncSeries {
        truncation: n,
        poly: NcPoly::from_terms(alphabet, terms).expect("valid letter"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::is_lie;

    fn w(a: &Alphabet, s: &str) -> NcPoly {
        let names: Vec<&str> = s.split_whitespace().collect();
        NcPoly::from_names(a, &names).unwrap()
    }

    #[test]
    fn exp_examples() {
        let a = Alphabet::standard(2);
        assert_eq!(
            TruncSeries::exp(&NcPoly::zero(&a), 3).unwrap(),
            TruncSeries::one(&a, 3)
        );
        let e = TruncSeries::exp(&w(&a, "x"), 3).unwrap();
        let expected = NcPoly::one(&a)
            .add(&w(&a, "x"))
            .unwrap()
            .add(&w(&a, "x x").scale(&Scalar::ratio(1, 2)))
            .unwrap()
            .add(&w(&a, "x x x").scale(&Scalar::ratio(1, 6)))
            .unwrap();
        assert_eq!(e.poly(), &expected);
        assert_eq!(e, letter_exponential(&a, 0, 1, 3));
    }

    #[test]
    fn log_inverts_exp() {
        let a = Alphabet::standard(2);
        let p = w(&a, "x").add(&w(&a, "y")).unwrap();
        let s = TruncSeries::exp(&p, 5).unwrap();
        assert_eq!(s.log().unwrap().poly(), &p);
        let prod = s.mul(&s.inv().unwrap()).unwrap();
        assert_eq!(prod, TruncSeries::one(&a, 5));
    }

    #[test]
    fn preconditions() {
        let a = Alphabet::standard(2);
        assert!(TruncSeries::exp(&NcPoly::one(&a), 2).is_err());
        let s = TruncSeries::new(w(&a, "x"), 2);
        assert!(s.log().is_err());
        assert!(s.inv().is_err());
    }

    #[test]
    fn grouplike_examples() {
        let a = Alphabet::standard(2);
        assert!(TruncSeries::exp(&w(&a, "x"), 4).unwrap().is_grouplike());
        let s = TruncSeries::new(NcPoly::one(&a).add(&w(&a, "x y")).unwrap(), 2);
        assert!(!s.is_grouplike());
        // the log oracle agrees
        assert!(!is_lie(s.log().unwrap().poly()));
    }

    #[test]
    fn mismatched_truncations_are_flagged() {
        let a = Alphabet::standard(2);
        let s3 = TruncSeries::exp(&w(&a, "x"), 3).unwrap();
        let s5 = TruncSeries::exp(&w(&a, "y"), 5).unwrap();
        let (p, note) = s3.mul_with_meta(&s5).unwrap();
        assert_eq!(p.truncation(), 3);
        assert_eq!(
            note,
            Some(TruncationMismatch {
                left: 3,
                right: 5,
                used: 3
            })
        );
        assert_eq!(s3.mul_with_meta(&s3).unwrap().1, None);
    }

    #[test]
    fn pair_rejects_overflow() {
        let a = Alphabet::standard(2);
        let s = TruncSeries::exp(&w(&a, "x"), 2).unwrap();
        assert_eq!(
            s.pair(&w(&a, "x x x")),
            Err(Error::DegreeOverflow {
                degree: 3,
                truncation: 2
            })
        );
        assert_eq!(s.pair(&w(&a, "x x")).unwrap(), Scalar::ratio(1, 2));
    }
}
