//! The Gauss–Manin derivation on words in differential forms, the nested
//! Melnikov integrand, the `P_k` / `C_k` coefficients of the quasi-homogeneous
//! case, the degree-5 vanishing example, and the D4 monodromy reduction.

mod monodromy;

pub use monodromy::{
    grade2_matrix, picard_lefschetz, pl_grade2, reduce_to_alpha, Grade2Element, H1Vector,
    MonodromyWord, OpCombo, ALPHA_BRACKET, INTERSECTION,
};

use crate::chenint::{pair_graded, PairingTable};
use crate::error::{Error, Result};
use crate::freegrp::{commutator, GroupWord};
use crate::liealg::left_normed;
use crate::ncalg::{Alphabet, MPoly, NcPoly, Scalar, Word, T_VAR};

/// `ω' = (1/Δ) A ω`: each form's derivative in `t` as a combination of forms
/// with rational-function coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    forms: Alphabet,
    delta: MPoly,
    matrix: Vec<Vec<Scalar>>,
    images: Vec<NcPoly>,
}

impl Connection {
    /// `delta` must be a nonzero polynomial in `t` alone; `matrix` is `m x m`.
    pub fn new(forms: &Alphabet, delta: MPoly, matrix: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = forms.len();
        if matrix.len() != m || matrix.iter().any(|r| r.len() != m) {
            return Err(Error::Precondition(format!(
                "connection matrix must be {m} x {m}"
            )));
        }
        if delta.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if delta.vars().iter().any(|v| v != T_VAR) {
            return Err(Error::NotInvertible(delta.to_string()));
        }
        let d = Scalar::from_poly(delta.clone());
        let mut images = Vec::with_capacity(m);
        for row in &matrix {
            let mut img = NcPoly::zero(forms);
            for (j, a) in row.iter().enumerate() {
                if !a.is_zero() {
                    img.add_term(Word::letter(j), a.checked_div(&d)?);
                }
            }
            images.push(img);
        }
        Ok(Connection {
            forms: forms.clone(),
            delta,
            matrix,
            images,
        })
    }

    /// Quasi-homogeneous case: `t ω_i' = w_i ω_i`.
    pub fn diagonal(forms: &Alphabet, weights: &[Scalar]) -> Result<Self> {
        let m = forms.len();
        if weights.len() != m {
            return Err(Error::Precondition(format!("expected {m} weights")));
        }
        let matrix = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            weights[i].clone()
                        } else {
                            Scalar::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Connection::new(forms, MPoly::var(T_VAR), matrix)
    }

    pub fn forms(&self) -> &Alphabet {
        &self.forms
    }

    pub fn delta(&self) -> &MPoly {
        &self.delta
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.matrix
    }

    /// `ω_i'` as a polynomial of degree one.
    pub fn image(&self, i: usize) -> &NcPoly {
        &self.images[i]
    }
}

/// Applies a derivation: each letter in turn is replaced by its image and the
/// coefficient is differentiated by `coeff`.
fn leibniz(p: &NcPoly, images: &[NcPoly], coeff: impl Fn(&Scalar) -> Scalar) -> Result<NcPoly> {
    let alphabet = p.alphabet();
    let mut out = NcPoly::zero(alphabet);
    for (w, c) in p.terms() {
        let dc = coeff(c);
        if !dc.is_zero() {
            out.add_term(w.clone(), dc);
        }
        for pos in 0..w.len() {
            let img = &images[w.letters()[pos] as usize];
            let left = w.slice(0..pos);
            let right = w.slice(pos + 1..w.len());
            for (v, a) in img.terms() {
                out.add_term(left.concat(v).concat(&right), c * a);
            }
        }
    }
    Ok(out)
}

/// Derivative in `t` of `p`, extended from the forms by the Leibniz rule.
pub fn derive(conn: &Connection, p: &NcPoly) -> Result<NcPoly> {
    conn.forms.check(p.alphabet())?;
    leibniz(p, &conn.images, Scalar::diff_t)
}

/// `R_1 = ω`, `R_{j+1} = ω · (R_j)'`; returns `R_k`.
pub fn melnikov_integrand(conn: &Connection, omega: &NcPoly, k: usize) -> Result<NcPoly> {
    conn.forms.check(omega.alphabet())?;
    if k == 0 {
        return Err(Error::Precondition("k must be at least 1".into()));
    }
    let mut r = omega.clone();
    for _ in 1..k {
        r = omega.concat_mul(&derive(conn, &r)?)?;
    }
    Ok(r)
}

/// Weights of the two forms in the quasi-homogeneous case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPair {
    pub w1: Scalar,
    pub w2: Scalar,
}

impl WeightPair {
    pub fn new(w1: Scalar, w2: Scalar) -> Self {
        WeightPair { w1, w2 }
    }

    /// Indeterminates `w1`, `w2`.
    pub fn symbolic() -> Self {
        WeightPair::new(Scalar::var("w1"), Scalar::var("w2"))
    }

    pub fn ratio(a: (i64, i64), b: (i64, i64)) -> Self {
        WeightPair::new(Scalar::ratio(a.0, a.1), Scalar::ratio(b.0, b.1))
    }

    fn get(&self, letter: u8) -> &Scalar {
        if letter == 0 {
            &self.w1
        } else {
            &self.w2
        }
    }
}

/// The two-form alphabet `om1, om2` used by `P_k` and `C_k`.
pub fn two_forms() -> Alphabet {
    Alphabet::new(["om1", "om2"]).expect("distinct names")
}

/// `c(i_1..i_k) = w_{i_k} (w_{i_k} + w_{i_{k-1}} - 1) ... (w_{i_k} + ... + w_{i_2} - k + 2)`.
fn pk_coefficient(weights: &WeightPair, w: &Word) -> Scalar {
    let letters = w.letters();
    let k = letters.len();
    let mut c = Scalar::one();
    let mut tail = Scalar::zero();
    for j in 1..k {
        tail = &tail + weights.get(letters[k - j]);
        c = &c * &(&tail - &Scalar::int(j as i64 - 1));
    }
    c
}

fn words_with_content(k: usize, ones: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(k: usize, ones: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        let used = cur.iter().filter(|&&l| l == 0).count();
        if cur.len() == k {
            if used == ones {
                out.push(Word(cur.clone()));
            }
            return;
        }
        let remaining = k - cur.len();
        if used < ones {
            cur.push(0);
            rec(k, ones, cur, out);
            cur.pop();
        }
        if ones - used < remaining {
            cur.push(1);
            rec(k, ones, cur, out);
            cur.pop();
        }
    }
    rec(k, ones, &mut cur, &mut out);
    out
}

/// Coefficient of `α_1^i α_2^(k-i) / t^(k-1)` in `R_k` for `ω = α_1 ω_1 + α_2 ω_2`
/// with diagonal weights: the sum over words with `i` letters `om1` and
/// `k - i` letters `om2` of `c(word) · word`.
pub fn pk_closed_form(weights: &WeightPair, k: usize, i: usize) -> Result<NcPoly> {
    if k == 0 || i > k {
        return Err(Error::InvalidPartition {
            index: i,
            degree: k,
        });
    }
    let forms = two_forms();
    let mut out = NcPoly::zero(&forms);
    for w in words_with_content(k, i) {
        let c = pk_coefficient(weights, &w);
        out.add_term(w, c);
    }
    Ok(out)
}

/// `C_k = <P_k^1, [[...[ω_1, ω_2], ω_2], ..., ω_2]>`.
pub fn ck(weights: &WeightPair, k: usize) -> Result<Scalar> {
    if k < 2 {
        return Err(Error::Precondition("C_k needs k >= 2".into()));
    }
    let forms = two_forms();
    let mut letters = vec![1usize; k];
    letters[0] = 0;
    let l = left_normed(&letters).expand(&forms)?;
    pk_closed_form(weights, k, 1)?.inner(&l)
}

/// `(w_2 - w_1) Π_{i=1}^{k-2} (i - w_1 - (i-1) w_2)`.
pub fn ck_closed_form(weights: &WeightPair, k: usize) -> Result<Scalar> {
    if k < 2 {
        return Err(Error::Precondition("C_k needs k >= 2".into()));
    }
    let mut c = &weights.w2 - &weights.w1;
    for i in 1..=k - 2 {
        let i = i as i64;
        c = &c * &(&(&Scalar::int(i) - &weights.w1) - &(&weights.w2 * &Scalar::int(i - 1)));
    }
    Ok(c)
}

/// Paths `a1, a2` and forms `om, om', ..., om''''` of the degree-5 example.
pub fn m5_alphabets() -> (Alphabet, Alphabet) {
    let paths = Alphabet::new(["a1", "a2"]).expect("distinct names");
    let forms =
        Alphabet::new((0..5).map(|k| format!("om{}", "'".repeat(k)))).expect("distinct names");
    (paths, forms)
}

/// `γ = (((a1,a2),a1),(a1,a2))`, a basic commutator of degree 5.
pub fn m5_gamma(paths: &Alphabet) -> GroupWord {
    let a1 = GroupWord::generator(paths, 0).expect("letter");
    let a2 = GroupWord::generator(paths, 1).expect("letter");
    let c = commutator(&a1, &a2).expect("same alphabet");
    commutator(&commutator(&c, &a1).expect("same alphabet"), &c).expect("same alphabet")
}

/// `∫_γ ω ω' ω' ω' ω'` with every `∫_{a_i} ω^{(k)}` an independent indeterminate.
/// Vanishes identically.
pub fn example_ex_m5() -> Scalar {
    let (paths, forms) = m5_alphabets();
    let table = PairingTable::symbolic(&paths, &forms);
    let word = NcPoly::word(&forms, Word(vec![0, 1, 1, 1, 1]));
    pair_graded(&table, &m5_gamma(&paths), &word).expect("γ has degree 5")
}

/// The two-term product expansion of the same integral:
/// `∫_A ωω'ω' ∫_B ω'ω' - ∫_B ωω' ∫_A ω'ω'ω'` with `A = ((a1,a2),a1)`, `B = (a1,a2)`.
pub fn example_ex_m5_expansion() -> Scalar {
    let (paths, forms) = m5_alphabets();
    let table = PairingTable::symbolic(&paths, &forms);
    let a1 = GroupWord::generator(&paths, 0).expect("letter");
    let a2 = GroupWord::generator(&paths, 1).expect("letter");
    let b = commutator(&a1, &a2).expect("same alphabet");
    let a = commutator(&b, &a1).expect("same alphabet");
    let p = |d: &GroupWord, letters: &[u8]| {
        pair_graded(&table, d, &NcPoly::word(&forms, Word(letters.to_vec())))
            .expect("matching degree")
    };
    &(&p(&a, &[0, 1, 1]) * &p(&b, &[1, 1])) - &(&p(&b, &[0, 1]) * &p(&a, &[1, 1, 1]))
}

/// `∫_γ R_5` for the full nested integrand `R_5`, with the derivative acting
/// as `ω^{(k)} ↦ ω^{(k+1)}` and `∫_{a_i} ω^{(k)} = 0` for `k >= 2`
/// (those forms have no residues). Vanishes identically.
pub fn example_ex_m5_full() -> Result<Scalar> {
    let (paths, forms) = m5_alphabets();
    let n = forms.len();
    let images: Vec<NcPoly> = (0..n)
        .map(|k| {
            if k + 1 < n {
                NcPoly::letter(&forms, k + 1)
            } else {
                NcPoly::zero(&forms)
            }
        })
        .collect();
    let omega = NcPoly::letter(&forms, 0);
    let mut r = omega.clone();
    for _ in 1..5 {
        r = omega.concat_mul(&leibniz(&r, &images, |_| Scalar::zero())?)?;
    }
    let symbolic = PairingTable::symbolic(&paths, &forms);
    let entries = (0..paths.len())
        .map(|i| {
            (0..n)
                .map(|k| {
                    if k < 2 {
                        symbolic.entry(i, k).clone()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    let table = PairingTable::new(&paths, &forms, entries)?;
    pair_graded(&table, &m5_gamma(&paths), &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chenint::indeterminate_name;

    fn diag() -> Connection {
        Connection::diagonal(&two_forms(), &[Scalar::var("w1"), Scalar::var("w2")]).unwrap()
    }

    fn w(a: &Alphabet, s: &str) -> NcPoly {
        let names: Vec<&str> = s.split_whitespace().collect();
        NcPoly::from_names(a, &names).unwrap()
    }

    fn over_t(s: Scalar, e: u32) -> Scalar {
        s.checked_div(&Scalar::t().pow(e)).unwrap()
    }

    #[test]
    fn derive_diagonal() {
        let c = diag();
        let f = two_forms();
        let w1 = Scalar::var("w1");
        let w2 = Scalar::var("w2");
        assert_eq!(
            derive(&c, &w(&f, "om1")).unwrap(),
            w(&f, "om1").scale(&over_t(w1.clone(), 1))
        );
        assert_eq!(
            derive(&c, &w(&f, "om1 om2")).unwrap(),
            w(&f, "om1 om2").scale(&over_t(&w1 + &w2, 1))
        );
        let three = w(&f, "om1").scale(&Scalar::int(3));
        assert_eq!(
            derive(&c, &three).unwrap(),
            w(&f, "om1").scale(&over_t(&w1 * &Scalar::int(3), 1))
        );
    }

    #[test]
    fn derive_differentiates_coefficients() {
        let c = diag();
        let f = two_forms();
        let p = w(&f, "om1").scale(&Scalar::t());
        // (t om1)' = om1 + t (w1/t) om1
        let expected = w(&f, "om1").scale(&(&Scalar::one() + &Scalar::var("w1")));
        assert_eq!(derive(&c, &p).unwrap(), expected);
    }

    #[test]
    fn integrand_small_k() {
        let c = diag();
        let f = two_forms();
        let om = w(&f, "om1")
            .scale(&Scalar::var("a1"))
            .add(&w(&f, "om2").scale(&Scalar::var("a2")))
            .unwrap();
        assert_eq!(melnikov_integrand(&c, &om, 1).unwrap(), om);
        let r2 = melnikov_integrand(&c, &om, 2).unwrap();
        assert_eq!(r2, om.concat_mul(&derive(&c, &om).unwrap()).unwrap());
        let a = [Scalar::var("a1"), Scalar::var("a2")];
        let ws = [Scalar::var("w1"), Scalar::var("w2")];
        let mut expected = NcPoly::zero(&f);
        for i in 0..2 {
            for j in 0..2 {
                let c = over_t(&(&a[i] * &a[j]) * &ws[j], 1);
                expected.add_term(Word(vec![i as u8, j as u8]), c);
            }
        }
        assert_eq!(r2, expected);
    }

    #[test]
    fn pk_examples() {
        let f = two_forms();
        let wp = WeightPair::symbolic();
        let expected = w(&f, "om1 om2")
            .scale(&wp.w2)
            .add(&w(&f, "om2 om1").scale(&wp.w1))
            .unwrap();
        assert_eq!(pk_closed_form(&wp, 2, 1).unwrap(), expected);
        assert_eq!(pk_closed_form(&wp, 1, 1).unwrap(), w(&f, "om1"));
        assert_eq!(
            pk_closed_form(&wp, 3, 4),
            Err(Error::InvalidPartition {
                index: 4,
                degree: 3
            })
        );
    }

    #[test]
    fn pk_matches_derivation() {
        let c = diag();
        let f = two_forms();
        let (a1, a2) = (Scalar::var("a1"), Scalar::var("a2"));
        let om = w(&f, "om1")
            .scale(&a1)
            .add(&w(&f, "om2").scale(&a2))
            .unwrap();
        let wp = WeightPair::symbolic();
        for k in 1..=5 {
            let mut expected = NcPoly::zero(&f);
            for i in 0..=k {
                let coeff = over_t(&a1.pow(i as u32) * &a2.pow((k - i) as u32), k as u32 - 1);
                expected = expected
                    .add(&pk_closed_form(&wp, k, i).unwrap().scale(&coeff))
                    .unwrap();
            }
            assert_eq!(melnikov_integrand(&c, &om, k).unwrap(), expected, "k={k}");
        }
    }

    #[test]
    fn ck_values() {
        let wp = WeightPair::symbolic();
        assert_eq!(ck(&wp, 2).unwrap().to_string(), "w2 - w1");
        let c3 = &(&wp.w2 - &wp.w1) * &(&Scalar::one() - &wp.w1);
        assert_eq!(ck(&wp, 3).unwrap(), c3);
        for k in 2..=6 {
            assert_eq!(
                ck(&wp, k).unwrap(),
                ck_closed_form(&wp, k).unwrap(),
                "k={k}"
            );
        }
    }

    #[test]
    fn general_connection() {
        let f = two_forms();
        // ω1' = (t ω1 + ω2)/(t^2 - 1), ω2' = 0
        let delta = &(&MPoly::var("t") * &MPoly::var("t")) - &MPoly::one();
        let c = Connection::new(
            &f,
            delta,
            vec![
                vec![Scalar::t(), Scalar::one()],
                vec![Scalar::zero(), Scalar::zero()],
            ],
        )
        .unwrap();
        let d = derive(&c, &w(&f, "om1 om2")).unwrap();
        let den = &(&Scalar::t() * &Scalar::t()) - &Scalar::one();
        assert_eq!(
            d.coeff(&Word(vec![0, 1])),
            Scalar::t().checked_div(&den).unwrap()
        );
        assert_eq!(
            d.coeff(&Word(vec![1, 1])),
            Scalar::one().checked_div(&den).unwrap()
        );
        assert!(Connection::new(&f, MPoly::var("w"), vec![vec![Scalar::zero(); 2]; 2]).is_err());
    }

    #[test]
    fn m5_vanishes() {
        assert!(example_ex_m5().is_zero());
        assert!(example_ex_m5_expansion().is_zero());
        assert!(example_ex_m5_full().unwrap().is_zero());
    }

    #[test]
    fn m5_subterms() {
        let (paths, forms) = m5_alphabets();
        let t = PairingTable::symbolic(&paths, &forms);
        let a1 = GroupWord::generator(&paths, 0).unwrap();
        let a2 = GroupWord::generator(&paths, 1).unwrap();
        let b = commutator(&a1, &a2).unwrap();
        let a = commutator(&b, &a1).unwrap();
        let om1 = |n: usize| NcPoly::word(&forms, Word(vec![1; n]));
        assert!(pair_graded(&t, &b, &om1(2)).unwrap().is_zero());
        assert!(pair_graded(&t, &a, &om1(3)).unwrap().is_zero());
        // the mixed factors are not zero, so the vanishing is not trivial
        let mixed = pair_graded(&t, &b, &NcPoly::word(&forms, Word(vec![0, 1]))).unwrap();
        assert!(!mixed.is_zero());
        assert!(mixed.vars().contains(&indeterminate_name("a1", "om'")));
    }
}
