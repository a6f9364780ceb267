//! Iterated-integral models given by group-like series per path generator,
//! evaluation of `∫_δ ω`, and the graded pairing against lower-central-series
//! representatives.

pub(crate) mod series;

use std::collections::BTreeMap;

pub use series::{TruncSeries, TruncationMismatch};

use crate::error::{Error, Result};
use crate::freegrp::{lcs_degree, phi_inverse_bounded, GroupWord, LcsDegree};
use crate::ncalg::{Alphabet, NcPoly, Scalar, Word};

/// An iterated integral: each path generator carries a group-like series
/// over the form alphabet. Inverse letters use the series inverse.
#[derive(Debug, Clone)]
pub struct IntegralModel {
    paths: Alphabet,
    forms: Alphabet,
    truncation: usize,
    series: Vec<TruncSeries>,
    inverses: Vec<TruncSeries>,
}

impl IntegralModel {
    /// Rejects series that are not group-like, disagree on the form alphabet,
    /// or are truncated below `truncation`.
    pub fn new(
        paths: &Alphabet,
        forms: &Alphabet,
        truncation: usize,
        series: Vec<TruncSeries>,
    ) -> Result<Self> {
        if series.len() != paths.len() {
            return Err(Error::Precondition(format!(
                "expected {} series, one per path generator, found {}",
                paths.len(),
                series.len()
            )));
        }
        let mut trimmed = Vec::with_capacity(series.len());
        for (i, s) in series.into_iter().enumerate() {
            forms.check(s.alphabet())?;
            if s.truncation() < truncation {
                return Err(Error::Precondition(format!(
                    "series for {} is truncated at {}, below {truncation}",
                    paths.name(i),
                    s.truncation()
                )));
            }
            let s = TruncSeries::new(s.into_poly(), truncation);
            if !s.is_grouplike() {
                return Err(Error::Precondition(format!(
                    "series for {} is not group-like",
                    paths.name(i)
                )));
            }
            trimmed.push(s);
        }
        let inverses = trimmed
            .iter()
            .map(|s| s.inv())
            .collect::<Result<Vec<_>>>()?;
        Ok(IntegralModel {
            paths: paths.clone(),
            forms: forms.clone(),
            truncation,
            series: trimmed,
            inverses,
        })
    }

    pub fn paths(&self) -> &Alphabet {
        &self.paths
    }

    pub fn forms(&self) -> &Alphabet {
        &self.forms
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn generator_series(&self, i: usize) -> &TruncSeries {
        &self.series[i]
    }

    fn check_path(&self, delta: &GroupWord) -> Result<()> {
        self.paths.check(delta.alphabet())
    }

    /// Series of a whole path: the product of its letters' series.
    pub fn path_series(&self, delta: &GroupWord) -> Result<TruncSeries> {
        self.check_path(delta)?;
        let mut acc = TruncSeries::one(&self.forms, self.truncation);
        for s in delta.syllables() {
            let f = if s.inverse {
                &self.inverses[s.letter]
            } else {
                &self.series[s.letter]
            };
            acc = acc.mul(f)?;
        }
        Ok(acc)
    }

    /// `∫_δ ω`.
    ///
    /// Splits along the letters of `δ` one word of `ω` at a time, so only the
    /// prefixes of words that occur in `ω` are ever computed.
    pub fn evaluate(&self, delta: &GroupWord, omega: &NcPoly) -> Result<Scalar> {
        self.check_path(delta)?;
        self.forms.check(omega.alphabet())?;
        if let Some(d) = omega.max_degree() {
            if d > self.truncation {
                return Err(Error::DegreeOverflow {
                    degree: d,
                    truncation: self.truncation,
                });
            }
        }
        let mut total = Scalar::zero();
        for (w, c) in omega.terms() {
            let v = self.evaluate_word(delta, w);
            if !v.is_zero() {
                total += &(c * &v);
            }
        }
        Ok(total)
    }

    fn evaluate_word(&self, delta: &GroupWord, w: &Word) -> Scalar {
        let r = w.len();
        // prefix[i] = ∫ over the letters seen so far of w[..i]
        let mut prefix = vec![Scalar::zero(); r + 1];
        prefix[0] = Scalar::one();
        for s in delta.syllables() {
            let f = if s.inverse {
                &self.inverses[s.letter]
            } else {
                &self.series[s.letter]
            };
            for i in (1..=r).rev() {
                let mut acc = Scalar::zero();
                for (j, p) in prefix.iter().enumerate().take(i + 1) {
                    if p.is_zero() {
                        continue;
                    }
                    let c = f.coeff(&w.slice(j..i));
                    if !c.is_zero() {
                        acc += &(p * &c);
                    }
                }
                prefix[i] = acc;
            }
        }
        prefix.swap_remove(r)
    }
}

/// Generator `j` carries `exp(x_j)` over the same alphabet, so `∫_{x_j} x_j^n = 1/n!`.
pub fn canonical_model(alphabet: &Alphabet, truncation: usize) -> IntegralModel {
    let series = (0..alphabet.len())
        .map(|j| series::letter_exponential(alphabet, j, 1, truncation))
        .collect();
    IntegralModel::new(alphabet, alphabet, truncation, series)
        .expect("exp of a letter is group-like")
}

/// Values `v[i][j] = ∫_{x_i} ω_j` of the degree-one integrals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingTable {
    paths: Alphabet,
    forms: Alphabet,
    entries: Vec<Vec<Scalar>>,
}

impl PairingTable {
    pub fn new(paths: &Alphabet, forms: &Alphabet, entries: Vec<Vec<Scalar>>) -> Result<Self> {
        if entries.len() != paths.len() || entries.iter().any(|r| r.len() != forms.len()) {
            return Err(Error::Precondition(format!(
                "pairing table must be {} x {}",
                paths.len(),
                forms.len()
            )));
        }
        Ok(PairingTable {
            paths: paths.clone(),
            forms: forms.clone(),
            entries,
        })
    }

    /// Every entry a distinct indeterminate `v_<path>_<form>`.
    pub fn symbolic(paths: &Alphabet, forms: &Alphabet) -> Self {
        let entries = paths
            .names()
            .iter()
            .map(|p| {
                forms
                    .names()
                    .iter()
                    .map(|f| Scalar::var(&indeterminate_name(p, f)))
                    .collect()
            })
            .collect();
        PairingTable {
            paths: paths.clone(),
            forms: forms.clone(),
            entries,
        }
    }

    /// `∫_{x_i} x_j = δ_ij`, the degree-one part of the canonical model.
    pub fn identity(alphabet: &Alphabet) -> Self {
        let n = alphabet.len();
        let entries = (0..n)
            .map(|i| (0..n).map(|j| Scalar::int((i == j) as i64)).collect())
            .collect();
        PairingTable {
            paths: alphabet.clone(),
            forms: alphabet.clone(),
            entries,
        }
    }

    pub fn paths(&self) -> &Alphabet {
        &self.paths
    }

    pub fn forms(&self) -> &Alphabet {
        &self.forms
    }

    pub fn entry(&self, path: usize, form: usize) -> &Scalar {
        &self.entries[path][form]
    }
}

/// Name of the indeterminate standing for `∫_path form`.
pub fn indeterminate_name(path: &str, form: &str) -> String {
    let clean = |s: &str| s.replace('\'', "p");
    format!("v_{}_{}", clean(path), clean(form))
}

/// `∫_δ ω` for `ω` homogeneous of degree `k`, `δ` in the `k`-th lower central
/// series term: the sum over terms `a(i_1..i_k)` of the degree-`k` Lie
/// representative of `δ` times `v[i_1][j_1] ... v[i_k][j_k]`.
///
/// If `δ` lies deeper in the series than `k` the representative vanishes and
/// so does the result. A shallower `δ` is an error.
pub fn pair_graded(table: &PairingTable, delta: &GroupWord, omega: &NcPoly) -> Result<Scalar> {
    table.paths.check(delta.alphabet())?;
    table.forms.check(omega.alphabet())?;
    if omega.is_zero() {
        return Ok(Scalar::zero());
    }
    let Some(k) = omega.homogeneous_degree() else {
        return Err(Error::DegreeMismatch {
            expected: omega.min_degree().unwrap_or(0),
            found: omega.max_degree().unwrap_or(0),
        });
    };
    if k == 0 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            found: 0,
        });
    }
    let rep = match lcs_degree(delta, k) {
        LcsDegree::Exceeds(_) => return Ok(Scalar::zero()),
        LcsDegree::Exact(d) if d < k => {
            return Err(Error::DegreeMismatch {
                expected: k,
                found: d,
            })
        }
        LcsDegree::Exact(_) => phi_inverse_bounded(delta, k)?,
    };
    // Group the form words by coefficient once, then sum over the representative.
    let forms: BTreeMap<&Word, &Scalar> = omega.terms().collect();
    let mut total = Scalar::zero();
    for (a, ca) in rep.terms() {
        for (w, cw) in &forms {
            let mut prod = ca * *cw;
            for (&i, &j) in a.letters().iter().zip(w.letters()) {
                if prod.is_zero() {
                    break;
                }
                prod = &prod * &table.entries[i as usize][j as usize];
            }
            total += &prod;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegrp::{commutator, magnus};

    fn w(a: &Alphabet, s: &str) -> NcPoly {
        let names: Vec<&str> = s.split_whitespace().collect();
        NcPoly::from_names(a, &names).unwrap()
    }

    fn g(a: &Alphabet, s: &str) -> GroupWord {
        let names: Vec<&str> = s.split_whitespace().collect();
        GroupWord::from_names(a, &names).unwrap()
    }

    #[test]
    fn canonical_values() {
        let a = Alphabet::standard(2);
        let m = canonical_model(&a, 6);
        let x = g(&a, "x");
        assert_eq!(
            m.evaluate(&x, &w(&a, "x x x x x x")).unwrap(),
            Scalar::ratio(1, 720)
        );
        assert_eq!(m.evaluate(&x, &w(&a, "y x")).unwrap(), Scalar::zero());
        assert_eq!(m.evaluate(&x, &NcPoly::one(&a)).unwrap(), Scalar::one());
        assert_eq!(
            m.evaluate(&g(&a, "x y"), &w(&a, "x y")).unwrap(),
            Scalar::one()
        );
    }

    #[test]
    fn evaluate_matches_path_series() {
        let a = Alphabet::standard(2);
        let m = canonical_model(&a, 4);
        let d = g(&a, "x y^-1 x x y");
        let s = m.path_series(&d).unwrap();
        for word in (0..=4).flat_map(|k| a.words_of_length(k)) {
            let p = NcPoly::monomial(&a, word.clone(), Scalar::one());
            assert_eq!(
                m.evaluate(&d, &p).unwrap(),
                s.coeff(&word),
                "{}",
                word.display(&a)
            );
        }
        assert_eq!(s, magnus(&d, 4));
    }

    #[test]
    fn commutator_kills_degree_one() {
        let a = Alphabet::standard(2);
        let m = canonical_model(&a, 3);
        let c = commutator(&g(&a, "x"), &g(&a, "y")).unwrap();
        assert!(m.evaluate(&c, &w(&a, "x")).unwrap().is_zero());
        assert!(m.evaluate(&c, &w(&a, "y")).unwrap().is_zero());
    }

    #[test]
    fn degree_overflow() {
        let a = Alphabet::standard(2);
        let m = canonical_model(&a, 2);
        assert_eq!(
            m.evaluate(&g(&a, "x"), &w(&a, "x x x")),
            Err(Error::DegreeOverflow {
                degree: 3,
                truncation: 2
            })
        );
    }

    #[test]
    fn rejects_non_grouplike() {
        let a = Alphabet::standard(1);
        let bad = TruncSeries::new(NcPoly::one(&a).add(&w(&a, "x x")).unwrap(), 2);
        assert!(IntegralModel::new(&a, &a, 2, vec![bad]).is_err());
    }

    #[test]
    fn graded_pairing_of_commutator() {
        let paths = Alphabet::new(["a", "b"]).unwrap();
        let forms = Alphabet::new(["w1", "w2"]).unwrap();
        let t = PairingTable::symbolic(&paths, &forms);
        let c = commutator(&g(&paths, "a"), &g(&paths, "b")).unwrap();
        let v = |p: usize, f: usize| t.entry(p, f).clone();
        let expected = &(&v(0, 0) * &v(1, 1)) - &(&v(1, 0) * &v(0, 1));
        assert_eq!(pair_graded(&t, &c, &w(&forms, "w1 w2")).unwrap(), expected);
        assert!(pair_graded(&t, &c, &w(&forms, "w1 w1")).unwrap().is_zero());
        // deeper than the form degree: empty sum
        let deep = commutator(&c, &g(&paths, "a")).unwrap();
        assert!(pair_graded(&t, &deep, &w(&forms, "w1 w2"))
            .unwrap()
            .is_zero());
        assert_eq!(
            pair_graded(&t, &g(&paths, "a"), &w(&forms, "w1 w2")),
            Err(Error::DegreeMismatch {
                expected: 2,
                found: 1
            })
        );
    }
}
