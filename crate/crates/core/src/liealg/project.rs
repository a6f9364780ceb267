//! Ree's Lie criterion and the orthogonal splitting `Ass^k = L^k (+) S^k`.
//!
//! Both Hall brackets and shuffle products are homogeneous in every letter, so
//! all linear algebra runs per letter-content block. The largest block for
//! `m <= 3, k <= 5` has 30 words; Gaussian elimination is cubic in the block size.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use super::hall::hall_basis;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::ncalg::{deshuffle_pairs, shuffle_words, Alphabet, NcPoly, Scalar, Word};

/// Ree's criterion: `p` is a Lie polynomial iff it has no constant term and is
/// orthogonal to every shuffle `u * v` of nonempty words.
pub fn is_lie(p: &NcPoly) -> bool {
    p.constant_term().is_zero() && deshuffle_pairs(p).is_empty()
}

/// Words of length `k` grouped by letter content.
pub fn word_blocks(alphabet: &Alphabet, k: usize) -> BTreeMap<Vec<usize>, Vec<Word>> {
    let mut out: BTreeMap<Vec<usize>, Vec<Word>> = BTreeMap::new();
    for w in alphabet.words_of_length(k) {
        out.entry(w.content(alphabet.len())).or_default().push(w);
    }
    out
}

fn rational_row(p: &NcPoly, words: &[Word]) -> Vec<BigRational> {
    words
        .iter()
        .map(|w| match p.coeff(w) {
            Scalar::Rat(r) => r,
            other => panic!("expected rational coefficient, found {other}"),
        })
        .collect()
}

/// Dimension of the span of the degree-`k` Hall expansions.
pub fn lie_dimension(alphabet: &Alphabet, k: usize) -> usize {
    let blocks = word_blocks(alphabet, k);
    let mut rows: BTreeMap<Vec<usize>, Vec<Vec<BigRational>>> = BTreeMap::new();
    for e in hall_basis(alphabet, k).expansions() {
        let c = e.terms().next().expect("nonzero").0.content(alphabet.len());
        rows.entry(c.clone())
            .or_default()
            .push(rational_row(&e, &blocks[&c]));
    }
    rows.values().map(|r| linalg::rank(r)).sum()
}

/// Dimension of the span of all shuffles `u * v` with `u, v` nonempty and
/// `|u| + |v| = k`.
pub fn shuffle_dimension(alphabet: &Alphabet, k: usize) -> usize {
    let blocks = word_blocks(alphabet, k);
    let index: BTreeMap<&Vec<usize>, BTreeMap<&Word, usize>> = blocks
        .iter()
        .map(|(c, ws)| (c, ws.iter().enumerate().map(|(i, w)| (w, i)).collect()))
        .collect();
    let mut rows: BTreeMap<Vec<usize>, Vec<Vec<BigRational>>> = BTreeMap::new();
    for r in 1..k {
        let us = alphabet.words_of_length(r);
        let vs = alphabet.words_of_length(k - r);
        for u in &us {
            for v in &vs {
                let mut content = u.content(alphabet.len());
                for (a, b) in content.iter_mut().zip(v.content(alphabet.len())) {
                    *a += b;
                }
                let pos = &index[&content];
                let mut row = vec![BigRational::zero(); pos.len()];
                for w in shuffle_words(u, v) {
                    row[pos[&w]] += BigRational::from_integer(1.into());
                }
                rows.entry(content).or_default().push(row);
            }
        }
    }
    rows.values().map(|r| linalg::rank(r)).sum()
}

struct Block {
    basis: Vec<NcPoly>,
    gram_inverse: Matrix,
}

/// Orthogonal projector onto the degree-`k` Lie polynomials.
///
/// Build once per `(alphabet, k)` and reuse; [`decompose`] builds a fresh one.
pub struct LieProjector {
    alphabet: Alphabet,
    degree: usize,
    blocks: BTreeMap<Vec<usize>, Block>,
}

impl LieProjector {
    pub fn new(alphabet: &Alphabet, k: usize) -> Self {
        let mut grouped: BTreeMap<Vec<usize>, Vec<NcPoly>> = BTreeMap::new();
        if k >= 1 {
            for e in hall_basis(alphabet, k).expansions() {
                let c = e.terms().next().expect("nonzero").0.content(alphabet.len());
                grouped.entry(c).or_default().push(e);
            }
        }
        let blocks = grouped
            .into_iter()
            .map(|(c, basis)| {
                let gram: Matrix = basis
                    .iter()
                    .map(|a| {
                        basis
                            .iter()
                            .map(|b| match a.inner(b).unwrap() {
                                Scalar::Rat(r) => r,
                                _ => unreachable!("hall expansions are rational"),
                            })
                            .collect()
                    })
                    .collect();
                let gram_inverse =
                    linalg::inverse(&gram).expect("hall expansions are linearly independent");
                (
                    c,
                    Block {
                        basis,
                        gram_inverse,
                    },
                )
            })
            .collect();
        LieProjector {
            alphabet: alphabet.clone(),
            degree: k,
            blocks,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Splits a degree-`k` homogeneous polynomial into `(lie, shuffle)` parts.
    pub fn split(&self, p: &NcPoly) -> Result<(NcPoly, NcPoly)> {
        self.alphabet.check(p.alphabet())?;
        if let Some(bad) = p.terms().find(|(w, _)| w.len() != self.degree) {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: bad.0.len(),
            });
        }
        let m = self.alphabet.len();
        let mut parts: BTreeMap<Vec<usize>, NcPoly> = BTreeMap::new();
        for (w, c) in p.terms() {
            parts
                .entry(w.content(m))
                .or_insert_with(|| NcPoly::zero(&self.alphabet))
                .add_term(w.clone(), c.clone());
        }
        let mut lie = NcPoly::zero(&self.alphabet);
        for (content, part) in &parts {
            let Some(block) = self.blocks.get(content) else {
                continue;
            };
            let rhs: Vec<Scalar> = block
                .basis
                .iter()
                .map(|h| h.inner(part))
                .collect::<Result<_>>()?;
            for (row, h) in block.gram_inverse.iter().zip(&block.basis) {
                let coeff: Scalar = row
                    .iter()
                    .zip(&rhs)
                    .filter(|(g, _)| !g.is_zero())
                    .map(|(g, b)| b.scale(g))
                    .sum();
                lie = lie.add(&h.scale(&coeff))?;
            }
        }
        let shf = p.sub(&lie)?;
        Ok((lie, shf))
    }
}

/// Unique decomposition `p = lie + shf` of a homogeneous polynomial with
/// `lie` a Lie polynomial and `shf` in the span of shuffle products.
pub fn decompose(p: &NcPoly) -> Result<(NcPoly, NcPoly)> {
    let Some(k) = p.homogeneous_degree() else {
        if p.is_zero() {
            return Ok((p.clone(), p.clone()));
        }
        return Err(Error::Precondition(
            "decompose requires a homogeneous polynomial".into(),
        ));
    };
    if k == 0 {
        return Ok((NcPoly::zero(p.alphabet()), p.clone()));
    }
    LieProjector::new(p.alphabet(), k).split(p)
}

/// Whether a homogeneous polynomial lies in the span of the Hall expansions of
/// its degree. Independent of [`is_lie`]; used to cross-check it.
pub fn in_hall_span(p: &NcPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    let Some(k) = p.homogeneous_degree() else {
        return false;
    };
    if k == 0 {
        return false;
    }
    let alphabet = p.alphabet();
    let words = alphabet.words_of_length(k);
    let mut rows: Vec<Vec<BigRational>> = hall_basis(alphabet, k)
        .expansions()
        .iter()
        .map(|e| rational_row(e, &words))
        .collect();
    let base = linalg::rank(&rows);
    rows.push(rational_row(p, &words));
    linalg::rank(&rows) == base
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::LieTree;

    fn w(a: &Alphabet, s: &str) -> NcPoly {
        let names: Vec<&str> = s.split_whitespace().collect();
        NcPoly::from_names(a, &names).unwrap()
    }

    #[test]
    fn ree_examples() {
        let a = Alphabet::standard(2);
        assert!(is_lie(&w(&a, "x y").sub(&w(&a, "y x")).unwrap()));
        assert!(!is_lie(&w(&a, "x y").add(&w(&a, "y x")).unwrap()));
        assert!(is_lie(&w(&a, "x").add(&w(&a, "y")).unwrap()));
        assert!(!is_lie(&NcPoly::one(&a)));
        assert!(is_lie(&NcPoly::zero(&a)));
    }

    #[test]
    fn decompose_examples() {
        let a = Alphabet::standard(2);
        let half = BigRational::new(1.into(), 2.into());
        let (lie, shf) = decompose(&w(&a, "x y")).unwrap();
        assert_eq!(
            lie,
            w(&a, "x y")
                .sub(&w(&a, "y x"))
                .unwrap()
                .scale_rational(&half)
        );
        assert_eq!(
            shf,
            w(&a, "x y")
                .add(&w(&a, "y x"))
                .unwrap()
                .scale_rational(&half)
        );

        let t = LieTree::bracket(
            LieTree::leaf(0),
            LieTree::bracket(LieTree::leaf(0), LieTree::leaf(1)),
        );
        let e = t.expand(&a).unwrap();
        let (lie, shf) = decompose(&e).unwrap();
        assert_eq!(lie, e);
        assert!(shf.is_zero());

        let s = w(&a, "x")
            .shuffle(&w(&a, "y"))
            .unwrap()
            .shuffle(&w(&a, "x"))
            .unwrap();
        let (lie, shf) = decompose(&s).unwrap();
        assert!(lie.is_zero());
        assert_eq!(shf, s);
        assert!(!is_lie(&shf));
    }

    #[test]
    fn decompose_rejects_inhomogeneous() {
        let a = Alphabet::standard(2);
        let p = w(&a, "x").add(&w(&a, "x y")).unwrap();
        assert!(matches!(decompose(&p), Err(Error::Precondition(_))));
    }

    #[test]
    fn decompose_symbolic_coefficients() {
        let a = Alphabet::standard(2);
        let p = w(&a, "x y").scale(&Scalar::var("c"));
        let (lie, shf) = decompose(&p).unwrap();
        assert_eq!(lie.add(&shf).unwrap(), p);
        assert!(is_lie(&lie));
    }

    #[test]
    fn rank_identity_small() {
        let a = Alphabet::standard(2);
        for k in 2..=4 {
            assert_eq!(lie_dimension(&a, k) + shuffle_dimension(&a, k), 1 << k);
        }
    }
}
