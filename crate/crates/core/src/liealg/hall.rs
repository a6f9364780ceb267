//! Hall sets.
//!
//! Order: higher degree first; within a degree, elements are ranked by
//! generation order, which is lexicographic in `(left, right)` under the same
//! order (letters follow the alphabet). A bracket `[u, v]` belongs to the set
//! iff `u < v` and either `u` is a letter or `u = [u', u'']` with `u'' >= v`.
//! For two letters this yields `[x,y]` in degree 2 and, in degree 5,
//! `[[[x,y],x],[x,y]]`.

use super::tree::LieTree;
use crate::ncalg::{Alphabet, NcPoly};

/// A basis of the degree-`k` component of the free Lie algebra.
#[derive(Debug, Clone)]
pub struct HallBasis {
    pub alphabet: Alphabet,
    pub degree: usize,
    pub elements: Vec<LieTree>,
}

impl HallBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn expansions(&self) -> Vec<NcPoly> {
        self.elements
            .iter()
            .map(|t| t.expand(&self.alphabet).expect("hall leaves are valid"))
            .collect()
    }
}

/// Position in the Hall order: `(degree, index within degree)`.
type Key = (usize, usize);

fn less(a: Key, b: Key) -> bool {
    a.0 > b.0 || (a.0 == b.0 && a.1 < b.1)
}

#[derive(Debug, Clone)]
struct Node {
    tree: LieTree,
    /// Key of the right factor, for brackets.
    right: Option<Key>,
}

/// Hall set elements of every degree `1..=max_degree`, indexed by degree.
#[derive(Debug, Clone)]
pub struct HallSet {
    alphabet: Alphabet,
    levels: Vec<Vec<Node>>,
}

impl HallSet {
    pub fn new(alphabet: &Alphabet, max_degree: usize) -> Self {
        let mut levels: Vec<Vec<Node>> = vec![Vec::new(); max_degree + 1];
        if max_degree >= 1 {
            levels[1] = (0..alphabet.len())
                .map(|i| Node {
                    tree: LieTree::leaf(i),
                    right: None,
                })
                .collect();
        }
        for n in 2..=max_degree {
            let mut level = Vec::new();
            for d1 in (n.div_ceil(2)..n).rev() {
                let d2 = n - d1;
                for (i1, left) in levels[d1].iter().enumerate() {
                    for (i2, right) in levels[d2].iter().enumerate() {
                        let (k1, k2) = ((d1, i1), (d2, i2));
                        if !less(k1, k2) {
                            continue;
                        }
                        let admissible = match left.right {
                            None => true,
                            Some(v) => !less(v, k2),
                        };
                        if admissible {
                            level.push(Node {
                                tree: LieTree::bracket(left.tree.clone(), right.tree.clone()),
                                right: Some(k2),
                            });
                        }
                    }
                }
            }
            levels[n] = level;
        }
        HallSet {
            alphabet: alphabet.clone(),
            levels,
        }
    }

    pub fn degree(&self, k: usize) -> HallBasis {
        HallBasis {
            alphabet: self.alphabet.clone(),
            degree: k,
            elements: self
                .levels
                .get(k)
                .map(|l| l.iter().map(|n| n.tree.clone()).collect())
                .unwrap_or_default(),
        }
    }
}

/// Hall basis of the degree-`k` Lie polynomials.
pub fn hall_basis(alphabet: &Alphabet, k: usize) -> HallBasis {
    HallSet::new(alphabet, k).degree(k)
}

fn mobius(n: usize) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Dimension of the degree-`k` free Lie algebra on `m` generators:
/// `(1/k) * sum_{d | k} mu(d) m^(k/d)`.
pub fn witt_dimension(m: usize, k: usize) -> usize {
    assert!(k >= 1);
    let total: i128 = (1..=k)
        .filter(|d| k.is_multiple_of(*d))
        .map(|d| mobius(d) as i128 * (m as i128).pow((k / d) as u32))
        .sum();
    (total / k as i128) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bases() {
        let a = Alphabet::standard(2);
        let names = |k| -> Vec<String> {
            hall_basis(&a, k)
                .elements
                .iter()
                .map(|t| t.display(&a).to_string())
                .collect()
        };
        assert_eq!(names(1), ["x", "y"]);
        assert_eq!(names(2), ["[x,y]"]);
        assert_eq!(names(3), ["[[x,y],x]", "[[x,y],y]"]);
        assert_eq!(hall_basis(&a, 5).len(), 6);
        assert!(names(5).contains(&"[[[x,y],x],[x,y]]".to_string()));
    }

    #[test]
    fn witt_numbers() {
        assert_eq!(witt_dimension(2, 5), 6);
        assert_eq!(witt_dimension(2, 6), 9);
        assert_eq!(witt_dimension(3, 4), 18);
        assert_eq!(witt_dimension(3, 5), 48);
    }

    #[test]
    fn counts_match_witt() {
        for m in 1..=3 {
            let a = Alphabet::standard(m);
            let set = HallSet::new(&a, 6);
            for k in 1..=6 {
                assert_eq!(set.degree(k).len(), witt_dimension(m, k), "m={m} k={k}");
            }
        }
    }
}
