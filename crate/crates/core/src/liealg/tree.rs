use std::fmt;

use crate::error::{Error, Result};
use crate::ncalg::{Alphabet, NcPoly};

/// A bracket expression over letter indices; `Bracket(a, b)` means `[a, b] = ab - ba`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LieTree {
    Leaf(usize),
    Bracket(Box<LieTree>, Box<LieTree>),
}

impl LieTree {
    pub fn leaf(i: usize) -> Self {
        LieTree::Leaf(i)
    }

    pub fn bracket(a: LieTree, b: LieTree) -> Self {
        LieTree::Bracket(Box::new(a), Box::new(b))
    }

    /// Number of leaves.
    pub fn degree(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 1,
            LieTree::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LieTree::Leaf(_) => 0,
            LieTree::Bracket(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<usize>) {
        match self {
            LieTree::Leaf(i) => out.push(*i),
            LieTree::Bracket(a, b) => {
                a.collect_leaves(out);
                b.collect_leaves(out);
            }
        }
    }

    /// Letter multiplicities.
    pub fn content(&self, m: usize) -> Vec<usize> {
        let mut c = vec![0; m];
        for l in self.leaves() {
            c[l] += 1;
        }
        c
    }

    /// Expands the bracket into the free associative algebra.
    pub fn expand(&self, alphabet: &Alphabet) -> Result<NcPoly> {
        match self {
            LieTree::Leaf(i) => {
                if *i >= alphabet.len() {
                    return Err(Error::InvalidLetter {
                        index: *i,
                        size: alphabet.len(),
                    });
                }
                Ok(NcPoly::letter(alphabet, *i))
            }
            LieTree::Bracket(a, b) => {
                let pa = a.expand(alphabet)?;
                let pb = b.expand(alphabet)?;
                pa.concat_mul(&pb)?.sub(&pb.concat_mul(&pa)?)
            }
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> LieDisplay<'a> {
        LieDisplay {
            tree: self,
            alphabet,
        }
    }
}

/// Right-normed bracket `[l_1,[l_2,[...,l_k]]]` of the given letters.
pub fn right_normed(letters: &[usize]) -> LieTree {
    let (last, init) = letters.split_last().expect("at least one letter");
    init.iter().rev().fold(LieTree::leaf(*last), |acc, &l| {
        LieTree::bracket(LieTree::leaf(l), acc)
    })
}

/// Left-normed bracket `[[...[l_1,l_2],...],l_k]` of the given letters.
pub fn left_normed(letters: &[usize]) -> LieTree {
    let (first, rest) = letters.split_first().expect("at least one letter");
    rest.iter().fold(LieTree::leaf(*first), |acc, &l| {
        LieTree::bracket(acc, LieTree::leaf(l))
    })
}

pub struct LieDisplay<'a> {
    tree: &'a LieTree,
    alphabet: &'a Alphabet,
}

impl fmt::Display for LieDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.tree {
            LieTree::Leaf(i) => match self.alphabet.names().get(*i) {
                Some(n) => write!(f, "{n}"),
                None => write!(f, "?{i}"),
            },
            LieTree::Bracket(a, b) => write!(
                f,
                "[{},{}]",
                a.display(self.alphabet),
                b.display(self.alphabet)
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Scalar;

    fn xyz() -> Alphabet {
        Alphabet::new(["x", "y", "z"]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> NcPoly {
        let names: Vec<&str> = s.split_whitespace().collect();
        NcPoly::from_names(a, &names).unwrap()
    }

    #[test]
    fn expands_brackets() {
        let a = xyz();
        let xy = LieTree::bracket(LieTree::leaf(0), LieTree::leaf(1));
        assert_eq!(
            xy.expand(&a).unwrap(),
            w(&a, "x y").sub(&w(&a, "y x")).unwrap()
        );
        // [[x,y],x] = xyx - yxx - xxy + xyx
        let t = LieTree::bracket(xy, LieTree::leaf(0));
        let expected = w(&a, "x y x")
            .scale(&Scalar::int(2))
            .sub(&w(&a, "y x x"))
            .unwrap()
            .sub(&w(&a, "x x y"))
            .unwrap();
        assert_eq!(t.expand(&a).unwrap(), expected);
        assert_eq!(t.degree(), 3);
        assert_eq!(t.display(&a).to_string(), "[[x,y],x]");
    }

    #[test]
    fn bracket_pairing_value_two() {
        let a = xyz();
        let lhs = LieTree::bracket(LieTree::leaf(1), right_normed(&[0, 2]));
        let rhs = LieTree::bracket(LieTree::leaf(2), right_normed(&[0, 1]));
        let v = lhs
            .expand(&a)
            .unwrap()
            .inner(&rhs.expand(&a).unwrap())
            .unwrap();
        assert_eq!(v, Scalar::int(2));
    }

    #[test]
    fn invalid_leaf_is_an_error() {
        let a = Alphabet::new(["x"]).unwrap();
        let t = LieTree::bracket(LieTree::leaf(0), LieTree::leaf(3));
        assert_eq!(
            t.expand(&a),
            Err(Error::InvalidLetter { index: 3, size: 1 })
        );
    }

    #[test]
    fn normed_builders() {
        let a = xyz();
        assert_eq!(
            right_normed(&[0, 1, 2]).display(&a).to_string(),
            "[x,[y,z]]"
        );
        assert_eq!(left_normed(&[0, 1, 2]).display(&a).to_string(), "[[x,y],z]");
    }
}
