//! Picard–Lefschetz action of the four D4 monodromies on `H_1` and on the
//! degree-2 part of the free Lie algebra, and the reduction of any nonzero
//! degree-2 element to a multiple of `[α_1, α_2]`.
//!
//! `h_i(δ) = δ - (δ·δ_i) δ_i`. The cycles `α_1 = δ_1 + δ_3` and
//! `α_2 = δ_1 + δ_4` span the radical of the intersection form, so every
//! `h_i` fixes them.

use std::fmt;

use crate::error::{Error, Result};

/// `INTERSECTION[i][j] = δ_{i+1} · δ_{j+1}`.
pub const INTERSECTION: [[i64; 4]; 4] = [[0, 1, 0, 0], [-1, 0, 1, 1], [0, -1, 0, 0], [0, -1, 0, 0]];

/// Integer vector in the basis `δ_1, δ_2, δ_3, δ_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct H1Vector(pub [i64; 4]);

impl H1Vector {
    pub fn delta(i: usize) -> H1Vector {
        let mut v = [0; 4];
        v[i - 1] = 1;
        H1Vector(v)
    }

    pub fn alpha1() -> H1Vector {
        H1Vector([1, 0, 1, 0])
    }

    pub fn alpha2() -> H1Vector {
        H1Vector([1, 0, 0, 1])
    }

    pub fn scaled(self, k: i64) -> H1Vector {
        H1Vector(self.0.map(|c| k * c))
    }

    pub fn dot(&self, other: &H1Vector) -> i64 {
        self.0
            .iter()
            .zip(&INTERSECTION)
            .map(|(a, row)| a * row.iter().zip(&other.0).map(|(x, b)| x * b).sum::<i64>())
            .sum()
    }

    /// Coordinates in the basis `δ_1, δ_2, α_1, α_2`.
    fn to_mixed(self) -> [i64; 4] {
        let c = self.0;
        [c[0] - c[2] - c[3], c[1], c[2], c[3]]
    }

    fn from_mixed(x: [i64; 4]) -> H1Vector {
        H1Vector([x[0] + x[2] + x[3], x[1], x[2], x[3]])
    }
}

fn check_index(i: usize) -> Result<()> {
    if (1..=4).contains(&i) {
        Ok(())
    } else {
        Err(Error::InvalidMonodromyIndex(i))
    }
}

/// `h_i(v) = v - (v·δ_i) δ_i`.
pub fn picard_lefschetz(i: usize, v: H1Vector) -> Result<H1Vector> {
    check_index(i)?;
    let d = v.dot(&H1Vector::delta(i));
    let mut out = v.0;
    out[i - 1] -= d;
    Ok(H1Vector(out))
}

/// Integer vector in the basis `[δ_1,δ_2], [δ_1,α_1], [δ_1,α_2], [δ_2,α_1],
/// [δ_2,α_2], [α_1,α_2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Grade2Element(pub [i64; 6]);

/// Index pairs of the basis brackets in the mixed basis `δ_1, δ_2, α_1, α_2`.
const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// `[α_1, α_2]`.
pub const ALPHA_BRACKET: Grade2Element = Grade2Element([0, 0, 0, 0, 0, 1]);

impl Grade2Element {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `[u, v]` re-expanded in the six-element basis.
    pub fn bracket(u: H1Vector, v: H1Vector) -> Grade2Element {
        let (u, v) = (u.to_mixed(), v.to_mixed());
        let mut out = [0; 6];
        for (k, &(p, q)) in PAIRS.iter().enumerate() {
            out[k] = u[p] * v[q] - u[q] * v[p];
        }
        Grade2Element(out)
    }

    /// The multiple of `[α_1, α_2]` this element equals, if it is one.
    pub fn alpha_multiple(&self) -> Option<i64> {
        self.0[..5].iter().all(|&c| c == 0).then_some(self.0[5])
    }
}

impl fmt::Display for Grade2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn mixed_basis(p: usize) -> H1Vector {
    let mut x = [0; 4];
    x[p] = 1;
    H1Vector::from_mixed(x)
}

/// Matrix of `h_i` on the degree-2 part; column `b` is the image of basis element `b`.
pub fn grade2_matrix(i: usize) -> Result<[[i64; 6]; 6]> {
    check_index(i)?;
    let mut m = [[0; 6]; 6];
    for (col, &(p, q)) in PAIRS.iter().enumerate() {
        let hp = picard_lefschetz(i, mixed_basis(p))?;
        let hq = picard_lefschetz(i, mixed_basis(q))?;
        let img = Grade2Element::bracket(hp, hq);
        for (r, v) in m.iter_mut().zip(img.0) {
            r[col] = v;
        }
    }
    Ok(m)
}

fn apply_matrix(m: &[[i64; 6]; 6], g: &Grade2Element) -> Grade2Element {
    let mut out = [0; 6];
    for (row, o) in out.iter_mut().enumerate() {
        *o = (0..6).map(|col| m[row][col] * g.0[col]).sum();
    }
    Grade2Element(out)
}

/// Action of `h_i` on a degree-2 element: `h_i` on both bracket slots.
pub fn pl_grade2(i: usize, g: &Grade2Element) -> Result<Grade2Element> {
    Ok(apply_matrix(&grade2_matrix(i)?, g))
}

/// Integer combination `c_0 id + c_1 h_1 + ... + c_4 h_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OpCombo(pub [i64; 5]);

impl OpCombo {
    /// `h_i - h_j`, with index 0 standing for the identity.
    pub fn difference(i: usize, j: usize) -> OpCombo {
        let mut c = [0; 5];
        c[i] += 1;
        c[j] -= 1;
        OpCombo(c)
    }

    pub fn apply(&self, g: &Grade2Element) -> Grade2Element {
        let mut out = [0; 6];
        for (s, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = if s == 0 {
                *g
            } else {
                pl_grade2(s, g).expect("index in range")
            };
            for (o, v) in out.iter_mut().zip(img.0) {
                *o += c * v;
            }
        }
        Grade2Element(out)
    }
}

impl fmt::Display for OpCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |s: usize| {
            if s == 0 {
                "id".to_string()
            } else {
                format!("h{s}")
            }
        };
        let mut first = true;
        // operators before the identity, as in `h2 - id`
        for s in [1, 2, 3, 4, 0] {
            let c = self.0[s];
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            match (first, c.abs()) {
                (true, 1) if c < 0 => write!(f, "-{}", name(s))?,
                (true, 1) => write!(f, "{}", name(s))?,
                (true, a) => write!(f, "{}{a} {}", if c < 0 { "-" } else { "" }, name(s))?,
                (false, 1) => write!(f, " {sign} {}", name(s))?,
                (false, a) => write!(f, " {sign} {a} {}", name(s))?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Operators applied in order, first element first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct MonodromyWord(pub Vec<OpCombo>);

impl MonodromyWord {
    pub fn apply(&self, g: &Grade2Element) -> Grade2Element {
        self.0.iter().fold(*g, |acc, op| op.apply(&acc))
    }
}

/// Written as a composition, rightmost applied first; the empty word is `id`.
impl fmt::Display for MonodromyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "id");
        }
        for op in self.0.iter().rev() {
            write!(f, "({op})")?;
        }
        Ok(())
    }
}

/// Finds integer combinations of the monodromies sending `g` to `k [α_1, α_2]`
/// with `k != 0`.
///
/// Writing `g = [δ_1, a] + [δ_2, b] + m [δ_1, δ_2] + n [α_1, α_2]`:
/// `h_3 - h_4` turns a pure `m` term into `[δ_1, α_2 - α_1]`; `h_2 - id` sends
/// anything with `a != 0` to `-[δ_2, a]`; `h_1 - id` sends anything to
/// `[δ_1, b]`. On a pure `[δ_2, b]`, `h_1 - h_3` gives `[α_1, b]` and
/// `h_1 - h_4` gives `[α_2, b]`.
pub fn reduce_to_alpha(g: &Grade2Element) -> Result<(MonodromyWord, i64)> {
    if g.is_zero() {
        return Err(Error::ZeroInput);
    }
    if let Some(k) = g.alpha_multiple() {
        return Ok((MonodromyWord::default(), k));
    }
    let mut word = MonodromyWord::default();
    let mut cur = *g;
    let mut step = |op: OpCombo, cur: &mut Grade2Element| {
        *cur = op.apply(cur);
        word.0.push(op);
    };
    let [_, a1, a2, b1, b2, _] = cur.0;
    let has_a = a1 != 0 || a2 != 0;
    let has_b = b1 != 0 || b2 != 0;
    if !has_a && !has_b {
        step(OpCombo::difference(3, 4), &mut cur);
    } else if !has_a {
        step(OpCombo::difference(1, 0), &mut cur);
    }
    step(OpCombo::difference(2, 0), &mut cur);
    // now a pure [δ_2, b]
    let last = if cur.0[4] != 0 {
        OpCombo::difference(1, 3)
    } else {
        OpCombo::difference(1, 4)
    };
    step(last, &mut cur);
    match cur.alpha_multiple() {
        Some(k) if k != 0 => Ok((word, k)),
        _ => Err(Error::Precondition(format!(
            "reduction ended at {cur}, not a nonzero multiple of [α1,α2]"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(i: usize) -> H1Vector {
        H1Vector::delta(i)
    }

    fn add(u: H1Vector, v: H1Vector, s: i64) -> H1Vector {
        let mut o = u.0;
        for (a, b) in o.iter_mut().zip(v.0) {
            *a += s * b;
        }
        H1Vector(o)
    }

    #[test]
    fn stated_monodromy_values() {
        assert_eq!(picard_lefschetz(1, d(2)).unwrap(), add(d(2), d(1), 1));
        assert_eq!(picard_lefschetz(2, d(1)).unwrap(), add(d(1), d(2), -1));
        for i in 1..=4 {
            assert_eq!(picard_lefschetz(i, d(i)).unwrap(), d(i));
            assert_eq!(
                picard_lefschetz(i, H1Vector::alpha1()).unwrap(),
                H1Vector::alpha1()
            );
            assert_eq!(
                picard_lefschetz(i, H1Vector::alpha2()).unwrap(),
                H1Vector::alpha2()
            );
            assert_eq!(pl_grade2(i, &ALPHA_BRACKET).unwrap(), ALPHA_BRACKET);
        }
        assert_eq!(
            picard_lefschetz(5, d(1)),
            Err(Error::InvalidMonodromyIndex(5))
        );
    }

    #[test]
    fn difference_operators() {
        // δ = [δ1,a] + [δ2,b] + m[δ1,δ2] + n[α1,α2]
        let g = Grade2Element([3, 1, -2, 4, 5, 7]);
        let h1 = OpCombo::difference(1, 0).apply(&g);
        let b = add(H1Vector::alpha1().scaled(4), H1Vector::alpha2(), 5);
        assert_eq!(h1, Grade2Element::bracket(d(1), b));
        let h2 = OpCombo::difference(2, 0).apply(&g);
        let a = add(H1Vector::alpha1(), H1Vector::alpha2(), -2);
        assert_eq!(h2, Grade2Element::bracket(a, d(2)));
        let m = Grade2Element([1, 0, 0, 0, 0, 0]);
        assert_eq!(
            OpCombo::difference(3, 4).apply(&m),
            Grade2Element::bracket(d(1), add(d(4), d(3), -1))
        );
    }

    #[test]
    fn reduction_cases() {
        assert_eq!(
            reduce_to_alpha(&ALPHA_BRACKET).unwrap(),
            (MonodromyWord::default(), 1)
        );
        assert_eq!(
            reduce_to_alpha(&Grade2Element([0; 6])),
            Err(Error::ZeroInput)
        );
        let m = Grade2Element([2, 0, 0, 0, 0, 0]);
        let (word, k) = reduce_to_alpha(&m).unwrap();
        assert_eq!(word.0[0], OpCombo::difference(3, 4));
        assert_eq!(word.apply(&m), Grade2Element([0, 0, 0, 0, 0, k]));
        assert_ne!(k, 0);
        assert_eq!(word.to_string(), "(h1 - h3)(h2 - id)(h3 - h4)");
    }

    #[test]
    fn reduction_replays_exhaustively() {
        let range = -1..=1;
        for m in range.clone() {
            for a1 in range.clone() {
                for a2 in range.clone() {
                    for b1 in range.clone() {
                        for b2 in range.clone() {
                            for n in range.clone() {
                                let g = Grade2Element([m, a1, a2, b1, b2, n]);
                                if g.is_zero() {
                                    continue;
                                }
                                let (word, k) = reduce_to_alpha(&g).unwrap();
                                assert_ne!(k, 0);
                                assert_eq!(word.apply(&g), Grade2Element([0, 0, 0, 0, 0, k]));
                            }
                        }
                    }
                }
            }
        }
    }
}
