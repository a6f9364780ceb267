//! Free-group words, commutators, the Magnus expansion, and the lower central
//! series degree.
//!
//! The Magnus map sends a generator to `exp(x)` and its inverse to `exp(-x)`,
//! so the image of every word is group-like. For `d` in the `k`-th term of the
//! lower central series and not in the next one, the lowest nonzero
//! homogeneous component of the image sits in degree `k` and is the Lie
//! polynomial corresponding to `d` in `gr^k F`.

use std::fmt;

use crate::chenint::series::letter_exponential;
use crate::chenint::TruncSeries;
use crate::error::{Error, Result};
use crate::liealg::LieTree;
use crate::ncalg::{Alphabet, NcPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub letter: usize,
    pub inverse: bool,
}

impl Syllable {
    fn inv(self) -> Syllable {
        Syllable {
            letter: self.letter,
            inverse: !self.inverse,
        }
    }
}

/// Freely reduced word in the generators and their inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupWord {
    alphabet: Alphabet,
    syllables: Vec<Syllable>,
}

impl GroupWord {
    pub fn identity(alphabet: &Alphabet) -> Self {
        GroupWord {
            alphabet: alphabet.clone(),
            syllables: Vec::new(),
        }
    }

    pub fn generator(alphabet: &Alphabet, letter: usize) -> Result<Self> {
        GroupWord::from_syllables(
            alphabet,
            [Syllable {
                letter,
                inverse: false,
            }],
        )
    }

    /// Builds and freely reduces a word.
    pub fn from_syllables(
        alphabet: &Alphabet,
        syllables: impl IntoIterator<Item = Syllable>,
    ) -> Result<Self> {
        let mut out: Vec<Syllable> = Vec::new();
        for s in syllables {
            if s.letter >= alphabet.len() {
                return Err(Error::InvalidLetter {
                    index: s.letter,
                    size: alphabet.len(),
                });
            }
            push_reduced(&mut out, s);
        }
        Ok(GroupWord {
            alphabet: alphabet.clone(),
            syllables: out,
        })
    }

    /// Parses letter names with an optional `^-1` suffix, e.g. `["x", "y^-1"]`.
    pub fn from_names(alphabet: &Alphabet, names: &[&str]) -> Result<Self> {
        let syl = names
            .iter()
            .map(|n| match n.strip_suffix("^-1") {
                Some(base) => alphabet.index_of(base).map(|letter| Syllable {
                    letter,
                    inverse: true,
                }),
                None => alphabet.index_of(n).map(|letter| Syllable {
                    letter,
                    inverse: false,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        GroupWord::from_syllables(alphabet, syl)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn mul(&self, rhs: &GroupWord) -> Result<GroupWord> {
        self.alphabet.check(&rhs.alphabet)?;
        let mut out = self.syllables.clone();
        for &s in &rhs.syllables {
            push_reduced(&mut out, s);
        }
        Ok(GroupWord {
            alphabet: self.alphabet.clone(),
            syllables: out,
        })
    }

    pub fn inv(&self) -> GroupWord {
        GroupWord {
            alphabet: self.alphabet.clone(),
            syllables: self.syllables.iter().rev().map(|s| s.inv()).collect(),
        }
    }

    /// `(a, b) = a b a^-1 b^-1`.
    pub fn commutator(&self, rhs: &GroupWord) -> Result<GroupWord> {
        self.mul(rhs)?.mul(&self.inv())?.mul(&rhs.inv())
    }

    /// Replaces every bracket of `tree` by a group commutator.
    pub fn realize(alphabet: &Alphabet, tree: &LieTree) -> Result<GroupWord> {
        match tree {
            LieTree::Leaf(i) => GroupWord::generator(alphabet, *i),
            LieTree::Bracket(a, b) => {
                GroupWord::realize(alphabet, a)?.commutator(&GroupWord::realize(alphabet, b)?)
            }
        }
    }
}

fn push_reduced(out: &mut Vec<Syllable>, s: Syllable) {
    if out.last().is_some_and(|&last| last == s.inv()) {
        out.pop();
    } else {
        out.push(s);
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.alphabet.name(s.letter))?;
            if s.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

pub fn gw_mul(a: &GroupWord, b: &GroupWord) -> Result<GroupWord> {
    a.mul(b)
}

pub fn gw_inv(a: &GroupWord) -> GroupWord {
    a.inv()
}

pub fn commutator(a: &GroupWord, b: &GroupWord) -> Result<GroupWord> {
    a.commutator(b)
}

/// Magnus image of `word` modulo words longer than `truncation`.
pub fn magnus(word: &GroupWord, truncation: usize) -> TruncSeries {
    let alphabet = word.alphabet();
    let mut factors: Vec<Option<[TruncSeries; 2]>> = vec![None; alphabet.len()];
    let mut acc = TruncSeries::one(alphabet, truncation);
    for s in word.syllables() {
        let pair = factors[s.letter].get_or_insert_with(|| {
            [
                letter_exponential(alphabet, s.letter, 1, truncation),
                letter_exponential(alphabet, s.letter, -1, truncation),
            ]
        });
        acc = acc.mul(&pair[s.inverse as usize]).expect("same alphabet");
    }
    acc
}

/// Position of a word in the lower central series, certified up to a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LcsDegree {
    /// In `F^k` but not in `F^{k+1}`.
    Exact(usize),
    /// In `F^{bound+1}`: no nonzero Magnus component in degrees `1..=bound`.
    Exceeds(usize),
}

impl LcsDegree {
    pub fn exact(self) -> Option<usize> {
        match self {
            LcsDegree::Exact(k) => Some(k),
            LcsDegree::Exceeds(_) => None,
        }
    }
}

impl fmt::Display for LcsDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LcsDegree::Exact(k) => write!(f, "{k}"),
            LcsDegree::Exceeds(n) => write!(f, "exceeds {n}"),
        }
    }
}

/// Lowest nonzero Magnus degree of `word` together with that component.
fn leading_component(word: &GroupWord, max_degree: usize) -> Option<(usize, NcPoly)> {
    if word.is_identity() || max_degree == 0 {
        return None;
    }
    let mut n = 1;
    let mut checked = 0;
    loop {
        let s = magnus(word, n);
        for k in checked + 1..=n {
            let part = s.homogeneous_part(k);
            if !part.is_zero() {
                return Some((k, part));
            }
        }
        if n == max_degree {
            return None;
        }
        checked = n;
        n = (n * 2).min(max_degree);
    }
}

/// Smallest `k <= max_degree` with a nonzero degree-`k` Magnus component.
pub fn lcs_degree(word: &GroupWord, max_degree: usize) -> LcsDegree {
    match leading_component(word, max_degree) {
        Some((k, _)) => LcsDegree::Exact(k),
        None => LcsDegree::Exceeds(max_degree),
    }
}

/// The Lie polynomial of a nontrivial word's class in `gr^k F`, `k` its
/// lower central series degree.
pub fn phi_inverse(word: &GroupWord) -> Result<NcPoly> {
    if word.is_identity() {
        return Err(Error::IdentityInput);
    }
    // A nontrivial reduced word of length L never lies in F^{L+1}.
    phi_inverse_bounded(word, word.len())
}

/// As [`phi_inverse`], searching degrees up to `max_degree` only.
pub fn phi_inverse_bounded(word: &GroupWord, max_degree: usize) -> Result<NcPoly> {
    if word.is_identity() {
        return Err(Error::IdentityInput);
    }
    leading_component(word, max_degree)
        .map(|(_, p)| p)
        .ok_or(Error::Precondition(format!(
            "no nonzero Magnus component up to degree {max_degree}"
        )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::is_lie;
    use crate::ncalg::Scalar;

    fn ab() -> Alphabet {
        Alphabet::new(["a", "b"]).unwrap()
    }

    fn g(a: &Alphabet, s: &str) -> GroupWord {
        let names: Vec<&str> = s.split_whitespace().collect();
        GroupWord::from_names(a, &names).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> NcPoly {
        let names: Vec<&str> = s.split_whitespace().collect();
        NcPoly::from_names(a, &names).unwrap()
    }

    #[test]
    fn multiplication_and_inverse() {
        let a = ab();
        assert!(gw_mul(&g(&a, "a"), &g(&a, "a^-1")).unwrap().is_identity());
        assert_eq!(gw_inv(&g(&a, "a b")), g(&a, "b^-1 a^-1"));
        assert_eq!(gw_mul(&g(&a, "a b"), &g(&a, "b^-1")).unwrap(), g(&a, "a"));
        assert_eq!(g(&a, "a b b^-1 a^-1 b"), g(&a, "b"));
    }

    #[test]
    fn commutators() {
        let a = ab();
        let x = g(&a, "a");
        let y = g(&a, "b");
        assert_eq!(commutator(&x, &y).unwrap(), g(&a, "a b a^-1 b^-1"));
        assert!(commutator(&x, &x).unwrap().is_identity());
        assert!(commutator(&x, &GroupWord::identity(&a))
            .unwrap()
            .is_identity());
        assert_eq!(commutator(&x, &y).unwrap().to_string(), "a b a^-1 b^-1");
    }

    #[test]
    fn magnus_examples() {
        let a = ab();
        assert_eq!(magnus(&GroupWord::identity(&a), 4), TruncSeries::one(&a, 4));
        let expected = NcPoly::one(&a)
            .add(&w(&a, "a"))
            .unwrap()
            .add(&w(&a, "a a").scale(&Scalar::ratio(1, 2)))
            .unwrap();
        assert_eq!(magnus(&g(&a, "a"), 2).poly(), &expected);
        let c = commutator(&g(&a, "a"), &g(&a, "b")).unwrap();
        assert_eq!(
            magnus(&c, 2).homogeneous_part(2),
            w(&a, "a b").sub(&w(&a, "b a")).unwrap()
        );
        assert!(magnus(&c, 2).homogeneous_part(1).is_zero());
    }

    #[test]
    fn lcs_examples() {
        let a = ab();
        let x = g(&a, "a");
        let y = g(&a, "b");
        assert_eq!(lcs_degree(&x, 5), LcsDegree::Exact(1));
        let c = commutator(&x, &y).unwrap();
        assert_eq!(lcs_degree(&c, 5), LcsDegree::Exact(2));
        assert_eq!(
            lcs_degree(&GroupWord::identity(&a), 5),
            LcsDegree::Exceeds(5)
        );
        // (((a,b),a),(a,b))
        let gamma = commutator(&commutator(&c, &x).unwrap(), &c).unwrap();
        assert_eq!(lcs_degree(&gamma, 6), LcsDegree::Exact(5));
        assert_eq!(lcs_degree(&gamma, 4), LcsDegree::Exceeds(4));
    }

    #[test]
    fn phi_inverse_examples() {
        let a = ab();
        let x = g(&a, "a");
        let y = g(&a, "b");
        assert_eq!(phi_inverse(&x).unwrap(), w(&a, "a"));
        let c = commutator(&x, &y).unwrap();
        assert_eq!(
            phi_inverse(&c).unwrap(),
            w(&a, "a b").sub(&w(&a, "b a")).unwrap()
        );
        // ((a,b),a) -> 2aba - baa - aab
        let cc = commutator(&c, &x).unwrap();
        let expected = w(&a, "a b a")
            .scale(&Scalar::int(2))
            .sub(&w(&a, "b a a"))
            .unwrap()
            .sub(&w(&a, "a a b"))
            .unwrap();
        let got = phi_inverse(&cc).unwrap();
        assert_eq!(got, expected);
        assert!(is_lie(&got));
        assert_eq!(
            phi_inverse(&GroupWord::identity(&a)),
            Err(Error::IdentityInput)
        );
    }

    #[test]
    fn realize_matches_expand() {
        let a = ab();
        let t = LieTree::bracket(
            LieTree::bracket(LieTree::leaf(0), LieTree::leaf(1)),
            LieTree::leaf(1),
        );
        let d = GroupWord::realize(&a, &t).unwrap();
        assert_eq!(phi_inverse(&d).unwrap(), t.expand(&a).unwrap());
    }
}
