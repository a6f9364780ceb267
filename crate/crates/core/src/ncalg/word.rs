use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered set of distinct letter names. Cheap to clone.
#[derive(Debug, Clone)]
pub struct Alphabet(Arc<[String]>);

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(|s| s.as_ref().to_string()).collect();
        if names.is_empty() {
            return Err(Error::Precondition("alphabet must be nonempty".into()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateLetter(n.clone()));
            }
        }
        Ok(Alphabet(names.into()))
    }

    /// `x, y, z` for up to three letters, `x1, ..., xm` otherwise.
    pub fn standard(m: usize) -> Self {
        let names: Vec<String> = if m <= 3 {
            ["x", "y", "z"][..m].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=m).map(|i| format!("x{i}")).collect()
        };
        Alphabet::new(names).expect("standard alphabet")
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownLetter(name.to_string()))
    }

    pub fn check(&self, other: &Alphabet) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }

    pub fn word(&self, names: &[&str]) -> Result<Word> {
        names
            .iter()
            .map(|n| self.index_of(n).map(|i| i as u8))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    /// All words of length `k`, in length-lexicographic order.
    pub fn words_of_length(&self, k: usize) -> Vec<Word> {
        let m = self.len();
        let total = m.pow(k as u32);
        (0..total)
            .map(|mut n| {
                let mut w = vec![0u8; k];
                for slot in w.iter_mut().rev() {
                    *slot = (n % m) as u8;
                    n /= m;
                }
                Word(w)
            })
            .collect()
    }
}

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Alphabet {}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.join(", "))
    }
}

/// A monomial of the free associative algebra: a sequence of letter indices.
///
/// Ordered length-first, then lexicographically by alphabet position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word(vec![i as u8])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// Letter multiplicities, indexed by letter.
    pub fn content(&self, m: usize) -> Vec<usize> {
        let mut c = vec![0; m];
        for &l in &self.0 {
            c[l as usize] += 1;
        }
        c
    }

    pub fn validate(&self, alphabet: &Alphabet) -> Result<()> {
        match self.0.iter().find(|&&l| l as usize >= alphabet.len()) {
            Some(&l) => Err(Error::InvalidLetter {
                index: l as usize,
                size: alphabet.len(),
            }),
            None => Ok(()),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (k, &l) in self.word.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.alphabet.name(l as usize))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn length_lex_order() {
        let mut ws = vec![Word(vec![1]), Word(vec![0, 1]), Word(vec![]), Word(vec![0])];
        ws.sort();
        assert_eq!(
            ws,
            vec![Word(vec![]), Word(vec![0]), Word(vec![1]), Word(vec![0, 1])]
        );
    }

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            Alphabet::new(["x", "y", "x"]),
            Err(Error::DuplicateLetter("x".into()))
        );
    }

    #[test]
    fn enumerates_words() {
        let a = Alphabet::standard(2);
        let ws = a.words_of_length(2);
        assert_eq!(ws.len(), 4);
        assert_eq!(ws[1], Word(vec![0, 1]));
    }
}
