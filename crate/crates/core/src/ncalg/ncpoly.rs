use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use super::scalar::Scalar;
use super::word::{Alphabet, Word};
use crate::error::Result;

/// Sparse linear combination of words over a fixed alphabet.
///
/// Terms are kept in length-lexicographic word order and zero coefficients are
/// never stored, so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NcPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, Scalar>,
}

impl NcPoly {
    pub fn zero(alphabet: &Alphabet) -> Self {
        NcPoly {
            alphabet: alphabet.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(alphabet: &Alphabet) -> Self {
        NcPoly::monomial(alphabet, Word::empty(), Scalar::one())
    }

    pub fn letter(alphabet: &Alphabet, i: usize) -> Self {
        NcPoly::monomial(alphabet, Word::letter(i), Scalar::one())
    }

    pub fn word(alphabet: &Alphabet, w: Word) -> Self {
        NcPoly::monomial(alphabet, w, Scalar::one())
    }

    pub fn monomial(alphabet: &Alphabet, w: Word, c: Scalar) -> Self {
        let mut p = NcPoly::zero(alphabet);
        p.add_term(w, c);
        p
    }

    /// Parses space-separated letter names into a single word.
    pub fn from_names(alphabet: &Alphabet, names: &[&str]) -> Result<Self> {
        Ok(NcPoly::word(alphabet, alphabet.word(names)?))
    }

    pub fn from_terms(
        alphabet: &Alphabet,
        terms: impl IntoIterator<Item = (Word, Scalar)>,
    ) -> Result<Self> {
        let mut p = NcPoly::zero(alphabet);
        for (w, c) in terms {
            w.validate(alphabet)?;
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + Clone {
        self.terms.iter()
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Word::empty())
    }

    /// Largest word length present, `None` for the zero polynomial.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Word::len)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().next().map(Word::len)
    }

    /// The single degree of a nonzero homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match (self.min_degree(), self.max_degree()) {
            (Some(a), Some(b)) if a == b => Some(a),
            _ => None,
        }
    }

    pub fn homogeneous_part(&self, k: usize) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == k)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of length greater than `n`.
    pub fn truncate(&self, n: usize) -> NcPoly {
        NcPoly {
            alphabet: self.alphabet.clone(),
            terms: self
                .terms
                .iter()
                .take_while(|(w, _)| w.len() <= n)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &NcPoly) -> Result<NcPoly> {
        self.alphabet.check(&other.alphabet)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &NcPoly) -> Result<NcPoly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NcPoly {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, s: &Scalar) -> NcPoly {
        if s.is_zero() {
            return NcPoly::zero(&self.alphabet);
        }
        self.map_coeffs(|c| c * s)
    }

    pub fn scale_rational(&self, r: &BigRational) -> NcPoly {
        self.map_coeffs(|c| c.scale(r))
    }

    /// Applies `f` to every coefficient, dropping results that vanish.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> NcPoly {
        let mut out = NcPoly::zero(&self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c));
        }
        out
    }

    /// Concatenation product, truncated to words of length at most `max_len`.
    pub fn concat_mul_truncated(&self, other: &NcPoly, max_len: usize) -> Result<NcPoly> {
        self.alphabet.check(&other.alphabet)?;
        let mut out = NcPoly::zero(&self.alphabet);
        for (u, a) in &self.terms {
            if u.len() > max_len {
                break;
            }
            let room = max_len - u.len();
            for (v, b) in other.terms.iter().take_while(|(v, _)| v.len() <= room) {
                out.add_term(u.concat(v), a * b);
            }
        }
        Ok(out)
    }

    /// Bilinear extension of word concatenation.
    pub fn concat_mul(&self, other: &NcPoly) -> Result<NcPoly> {
        self.concat_mul_truncated(other, usize::MAX)
    }

    /// Bilinear extension of the word shuffle product.
    pub fn shuffle(&self, other: &NcPoly) -> Result<NcPoly> {
        self.alphabet.check(&other.alphabet)?;
        let mut out = NcPoly::zero(&self.alphabet);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let c = a * b;
                for w in shuffle_words(u, v) {
                    out.add_term(w, c.clone());
                }
            }
        }
        Ok(out)
    }

    /// The canonical symmetric bilinear form making words orthonormal.
    pub fn inner(&self, other: &NcPoly) -> Result<Scalar> {
        self.alphabet.check(&other.alphabet)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small
            .terms
            .iter()
            .filter_map(|(w, a)| large.terms.get(w).map(|b| a * b))
            .sum())
    }

    /// Re-expresses the polynomial over a larger alphabet containing this one.
    pub fn embed(&self, target: &Alphabet) -> Result<NcPoly> {
        let map: Vec<u8> = self
            .alphabet
            .names()
            .iter()
            .map(|n| target.index_of(n).map(|i| i as u8))
            .collect::<Result<_>>()?;
        let mut out = NcPoly::zero(target);
        for (w, c) in &self.terms {
            out.add_term(
                Word(w.0.iter().map(|&l| map[l as usize]).collect()),
                c.clone(),
            );
        }
        Ok(out)
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

/// All interleavings of `u` and `v` with multiplicity (`C(|u|+|v|, |u|)` words).
pub fn shuffle_words(u: &Word, v: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(u.len() + v.len());
    fn rec(u: &[u8], v: &[u8], buf: &mut Vec<u8>, out: &mut Vec<Word>) {
        if u.is_empty() && v.is_empty() {
            out.push(Word(buf.clone()));
            return;
        }
        if let Some((&h, rest)) = u.split_first() {
            buf.push(h);
            rec(rest, v, buf, out);
            buf.pop();
        }
        if let Some((&h, rest)) = v.split_first() {
            buf.push(h);
            rec(u, rest, buf, out);
            buf.pop();
        }
    }
    rec(&u.0, &v.0, &mut buf, &mut out);
    out
}

/// Sums `coeff(w)` over every split of every word `w` of `p` into a pair of
/// complementary nonempty subsequences `(u, v)`.
///
/// The value attached to `(u, v)` equals `<p, u * v>`, so this is the
/// transpose of the shuffle product restricted to `p`'s support.
pub fn deshuffle_pairs(p: &NcPoly) -> BTreeMap<(Word, Word), Scalar> {
    let mut out: BTreeMap<(Word, Word), Scalar> = BTreeMap::new();
    for (w, c) in p.terms() {
        let n = w.len();
        if n < 2 {
            continue;
        }
        assert!(n < 31, "word too long to deshuffle");
        for mask in 1u32..(1 << n) - 1 {
            let mut u = Vec::with_capacity(n);
            let mut v = Vec::with_capacity(n);
            for (i, &l) in w.0.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    u.push(l);
                } else {
                    v.push(l);
                }
            }
            let slot = out.entry((Word(u), Word(v))).or_default();
            *slot += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = match c {
                Scalar::Rat(r) if r.is_negative() => (true, -c),
                _ => (false, c.clone()),
            };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let word = w.display(&self.alphabet).to_string();
            match (&mag, w.is_empty()) {
                (Scalar::Rat(_), true) => write!(f, "{mag}")?,
                (Scalar::Rat(_), false) if mag.is_one() => write!(f, "{word}")?,
                (Scalar::Rat(_), false) => write!(f, "{mag} {word}")?,
                (_, true) => write!(f, "{{{mag}}}")?,
                (_, false) => write!(f, "{{{mag}}} {word}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn xyz() -> Alphabet {
        Alphabet::new(["x", "y", "z"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> NcPoly {
        let names: Vec<&str> = s.split_whitespace().collect();
        NcPoly::from_names(a, &names).unwrap()
    }

    #[test]
    fn concatenation_examples() {
        let a = xyz();
        assert_eq!(w(&a, "x").concat_mul(&w(&a, "y")).unwrap(), w(&a, "x y"));
        let p = w(&a, "x y z").sub(&w(&a, "z")).unwrap();
        assert_eq!(NcPoly::one(&a).concat_mul(&p).unwrap(), p);
        let comm = w(&a, "x y").sub(&w(&a, "y x")).unwrap();
        let expected = w(&a, "x y x").sub(&w(&a, "y x x")).unwrap();
        assert_eq!(comm.concat_mul(&w(&a, "x")).unwrap(), expected);
    }

    #[test]
    fn shuffle_examples() {
        let a = xyz();
        let got = w(&a, "x y").shuffle(&w(&a, "z")).unwrap();
        let expected = w(&a, "x y z")
            .add(&w(&a, "x z y"))
            .unwrap()
            .add(&w(&a, "z x y"))
            .unwrap();
        assert_eq!(got, expected);
        assert_eq!(
            NcPoly::one(&a).shuffle(&w(&a, "y z")).unwrap(),
            w(&a, "y z")
        );
        assert_eq!(
            w(&a, "x").shuffle(&w(&a, "x")).unwrap(),
            w(&a, "x x").scale(&Scalar::int(2))
        );
    }

    #[test]
    fn inner_examples() {
        let a = xyz();
        assert_eq!(w(&a, "x y").inner(&w(&a, "x y")).unwrap(), Scalar::one());
        assert_eq!(w(&a, "x y").inner(&w(&a, "y x")).unwrap(), Scalar::zero());
        assert_eq!(w(&a, "x").inner(&w(&a, "x x")).unwrap(), Scalar::zero());
    }

    #[test]
    fn homogeneous_parts() {
        let a = xyz();
        let p = NcPoly::one(&a)
            .add(&w(&a, "x"))
            .unwrap()
            .add(&w(&a, "x y"))
            .unwrap();
        assert_eq!(p.homogeneous_part(2), w(&a, "x y"));
        assert!(p.homogeneous_part(7).is_zero());
        let sum = (0..=2)
            .map(|k| p.homogeneous_part(k))
            .fold(NcPoly::zero(&a), |acc, q| acc.add(&q).unwrap());
        assert_eq!(sum, p);
    }

    #[test]
    fn alphabet_mismatch_is_reported() {
        let a = xyz();
        let b = Alphabet::new(["x", "y"]).unwrap();
        let err = w(&a, "x").concat_mul(&NcPoly::letter(&b, 0)).unwrap_err();
        assert!(matches!(err, Error::AlphabetMismatch { .. }));
        assert!(w(&a, "x").shuffle(&NcPoly::letter(&b, 0)).is_err());
        assert!(w(&a, "x").inner(&NcPoly::letter(&b, 0)).is_err());
    }

    #[test]
    fn deshuffle_matches_inner_with_shuffles() {
        let a = xyz();
        let p = w(&a, "x y z")
            .add(&w(&a, "z x y").scale(&Scalar::int(3)))
            .unwrap();
        let pairs = deshuffle_pairs(&p);
        for ((u, v), c) in &pairs {
            let s = NcPoly::word(&a, u.clone())
                .shuffle(&NcPoly::word(&a, v.clone()))
                .unwrap();
            assert_eq!(&p.inner(&s).unwrap(), c);
        }
    }

    #[test]
    fn printing() {
        let a = xyz();
        let p = w(&a, "x y")
            .sub(&w(&a, "y x"))
            .unwrap()
            .add(&NcPoly::monomial(&a, Word::empty(), Scalar::ratio(3, 2)))
            .unwrap()
            .add(&NcPoly::monomial(&a, Word(vec![2]), Scalar::var("w1")))
            .unwrap();
        assert_eq!(p.to_string(), "3/2 + {w1} z + x y - y x");
    }
}
