//! Expression grammar.
//!
//! ```text
//! poly   := ["-"] shuf (("+" | "-") shuf)*
//! shuf   := prod ("#" prod)*                 shuffle product
//! prod   := atom atom*                       concatenation by juxtaposition
//! atom   := number ["/" number] | "{" scalar "}" | letter | "[" poly "," poly "]"
//! group  := factor factor*
//! factor := primary ("^-1")*
//! primary:= letter | "(" group "," group ")" | "(" group ")"
//! scalar := ["-"] sterm (("+" | "-") sterm)* with "*", "/", "^n", identifiers, parentheses
//! ```
//!
//! Square brackets are Lie brackets; parentheses are group commutators. Any
//! input containing `(` or `^` outside braces is read as a group word.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::freegrp::GroupWord;
use crate::liealg::LieTree;
use crate::ncalg::{Alphabet, NcPoly, Scalar, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Number(BigInt),
    /// Contents of `{...}` with the position of its first character.
    Block(String, usize, usize),
    Sym(char),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn lex(
    text: &str,
    line0: usize,
    col0: usize,
    allow_blocks: bool,
) -> Result<(Vec<Token>, (usize, usize))> {
    let mut out = Vec::new();
    let (mut line, mut col) = (line0, col0);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, k) = (line, col);
        if c == '\n' {
            chars.next();
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token {
                tok: Tok::Number(s.parse().expect("digits")),
                line: l,
                column: k,
            });
            continue;
        }
        if is_ident_start(c) {
            let mut s = String::new();
            while let Some(&d) = chars.peek() {
                if !is_ident_continue(d) {
                    break;
                }
                s.push(d);
                chars.next();
                col += 1;
            }
            out.push(Token {
                tok: Tok::Ident(s),
                line: l,
                column: k,
            });
            continue;
        }
        if c == '{' {
            if !allow_blocks {
                return Err(err(l, k, "nested '{' in scalar"));
            }
            chars.next();
            col += 1;
            let (bl, bc) = (line, col);
            let mut inner = String::new();
            loop {
                match chars.next() {
                    None => return Err(err(l, k, "unclosed '{'")),
                    Some('}') => {
                        col += 1;
                        break;
                    }
                    Some('\n') => {
                        inner.push('\n');
                        line += 1;
                        col = 1;
                    }
                    Some(d) => {
                        inner.push(d);
                        col += 1;
                    }
                }
            }
            out.push(Token {
                tok: Tok::Block(inner, bl, bc),
                line: l,
                column: k,
            });
            continue;
        }
        if "[](),+-#/^*}".contains(c) {
            if c == '}' {
                return Err(err(l, k, "unmatched '}'"));
            }
            chars.next();
            col += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: l,
                column: k,
            });
            continue;
        }
        return Err(err(l, k, format!("unexpected character '{c}'")));
    }
    Ok((out, (line, col)))
}

struct Cursor {
    toks: Vec<Token>,
    pos: usize,
    end: (usize, usize),
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks
            .get(self.pos)
            .map(|t| (t.line, t.column))
            .unwrap_or(self.end)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let (l, c) = self.here();
        err(l, c, message)
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}', found {}", self.describe())))
        }
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Ident(s)) => format!("'{s}'"),
            Some(Tok::Number(n)) => format!("'{n}'"),
            Some(Tok::Block(..)) => "'{'".into(),
            Some(Tok::Sym(c)) => format!("'{c}'"),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            Err(self.error(format!("unexpected {}", self.describe())))
        } else {
            Ok(())
        }
    }
}

// ---------------------------------------------------------------------------
// scalars

/// Parses an exact scalar such as `3/2`, `w2 - w1` or `(w1 + 1)/t^2`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    parse_scalar_at(text, 1, 1)
}

fn parse_scalar_at(text: &str, line: usize, column: usize) -> Result<Scalar> {
    let (toks, end) = lex(text, line, column, false)?;
    let mut c = Cursor { toks, pos: 0, end };
    if c.peek().is_none() {
        return Err(c.error("empty scalar"));
    }
    let s = scalar_sum(&mut c)?;
    c.finish()?;
    Ok(s)
}

fn scalar_sum(c: &mut Cursor) -> Result<Scalar> {
    let neg = c.eat('-');
    if !neg {
        c.eat('+');
    }
    let mut acc = scalar_term(c)?;
    if neg {
        acc = -acc;
    }
    loop {
        if c.eat('+') {
            acc = &acc + &scalar_term(c)?;
        } else if c.eat('-') {
            acc = &acc - &scalar_term(c)?;
        } else {
            return Ok(acc);
        }
    }
}

fn scalar_term(c: &mut Cursor) -> Result<Scalar> {
    let mut acc = scalar_factor(c)?;
    loop {
        if c.eat('*') {
            acc = &acc * &scalar_factor(c)?;
        } else if c.is_sym('/') {
            let (l, k) = c.here();
            c.pos += 1;
            let d = scalar_factor(c)?;
            acc = acc.checked_div(&d).map_err(|e| err(l, k, e.to_string()))?;
        } else {
            return Ok(acc);
        }
    }
}

fn scalar_factor(c: &mut Cursor) -> Result<Scalar> {
    let base = scalar_atom(c)?;
    if !c.eat('^') {
        return Ok(base);
    }
    let neg = c.eat('-');
    let (l, k) = c.here();
    let e = match c.peek() {
        Some(Tok::Number(n)) => n.clone(),
        _ => return Err(c.error("expected an integer exponent")),
    };
    c.pos += 1;
    let e: u32 = e
        .try_into()
        .ok()
        .filter(|&e: &u32| e <= 4096)
        .ok_or_else(|| err(l, k, "exponent too large"))?;
    let p = base.pow(e);
    if neg {
        Scalar::one()
            .checked_div(&p)
            .map_err(|e| err(l, k, e.to_string()))
    } else {
        Ok(p)
    }
}

fn scalar_atom(c: &mut Cursor) -> Result<Scalar> {
    match c.peek().cloned() {
        Some(Tok::Number(n)) => {
            c.pos += 1;
            Ok(Scalar::Rat(BigRational::from_integer(n)))
        }
        Some(Tok::Ident(s)) => {
            c.pos += 1;
            Ok(Scalar::var(&s))
        }
        Some(Tok::Sym('(')) => {
            c.pos += 1;
            let s = scalar_sum(c)?;
            c.expect(')')?;
            Ok(s)
        }
        _ => Err(c.error(format!("expected a scalar, found {}", c.describe()))),
    }
}

// ---------------------------------------------------------------------------
// AST

/// A bracket expression over letter names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LieExpr {
    Letter(String),
    Bracket(Box<LieExpr>, Box<LieExpr>),
}

/// A group word over letter names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Letter(String),
    Inverse(Box<GroupExpr>),
    Commutator(Box<GroupExpr>, Box<GroupExpr>),
    /// At least two factors, none of them a product.
    Product(Vec<GroupExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    Number(BigRational),
    Scalar(Scalar),
    Letter(String),
    Bracket(Box<PolyExpr>, Box<PolyExpr>),
}

/// Juxtaposed atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProdExpr(pub Vec<Atom>);

/// Products joined by `#`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShufExpr(pub Vec<ProdExpr>);

/// Signed sum; `true` marks a subtracted term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyExpr(pub Vec<(bool, ShufExpr)>);

/// A parsed input.
///
/// A plain run of letters is a [`Expr::Word`]; a single bracket of letters and
/// brackets is a [`Expr::Lie`]; everything else without parentheses is a
/// [`Expr::Poly`]. Use [`Expr::from_poly`] to build the narrowest variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Word(Vec<String>),
    Lie(LieExpr),
    Group(GroupExpr),
    Poly(PolyExpr),
}

impl GroupExpr {
    pub fn letter(s: &str) -> Self {
        GroupExpr::Letter(s.to_string())
    }

    pub fn inverse(g: GroupExpr) -> Self {
        GroupExpr::Inverse(Box::new(g))
    }

    pub fn commutator(a: GroupExpr, b: GroupExpr) -> Self {
        GroupExpr::Commutator(Box::new(a), Box::new(b))
    }

    /// Flattens nested products; a single factor is returned as is.
    pub fn product(factors: Vec<GroupExpr>) -> Self {
        let mut flat = Vec::new();
        for f in factors {
            match f {
                GroupExpr::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().expect("one factor")
        } else {
            GroupExpr::Product(flat)
        }
    }

    fn has_structure(&self) -> bool {
        match self {
            GroupExpr::Letter(_) => false,
            GroupExpr::Inverse(_) | GroupExpr::Commutator(..) => true,
            GroupExpr::Product(fs) => fs.iter().any(|f| f.has_structure()),
        }
    }

    fn collect_letters(&self, out: &mut Vec<String>) {
        match self {
            GroupExpr::Letter(s) => push_unique(out, s),
            GroupExpr::Inverse(g) => g.collect_letters(out),
            GroupExpr::Commutator(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
            GroupExpr::Product(fs) => fs.iter().for_each(|f| f.collect_letters(out)),
        }
    }

    pub fn to_group(&self, alphabet: &Alphabet) -> Result<GroupWord> {
        match self {
            GroupExpr::Letter(s) => GroupWord::generator(alphabet, alphabet.index_of(s)?),
            GroupExpr::Inverse(g) => Ok(g.to_group(alphabet)?.inv()),
            GroupExpr::Commutator(a, b) => a.to_group(alphabet)?.commutator(&b.to_group(alphabet)?),
            GroupExpr::Product(fs) => {
                fs.iter().try_fold(GroupWord::identity(alphabet), |acc, f| {
                    acc.mul(&f.to_group(alphabet)?)
                })
            }
        }
    }
}

impl LieExpr {
    pub fn letter(s: &str) -> Self {
        LieExpr::Letter(s.to_string())
    }

    pub fn bracket(a: LieExpr, b: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn to_tree(&self, alphabet: &Alphabet) -> Result<LieTree> {
        match self {
            LieExpr::Letter(s) => Ok(LieTree::leaf(alphabet.index_of(s)?)),
            LieExpr::Bracket(a, b) => {
                Ok(LieTree::bracket(a.to_tree(alphabet)?, b.to_tree(alphabet)?))
            }
        }
    }

    pub fn from_tree(tree: &LieTree, alphabet: &Alphabet) -> Self {
        match tree {
            LieTree::Leaf(i) => LieExpr::letter(alphabet.name(*i)),
            LieTree::Bracket(a, b) => LieExpr::bracket(
                LieExpr::from_tree(a, alphabet),
                LieExpr::from_tree(b, alphabet),
            ),
        }
    }

    fn collect_letters(&self, out: &mut Vec<String>) {
        match self {
            LieExpr::Letter(s) => push_unique(out, s),
            LieExpr::Bracket(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
        }
    }

    fn to_poly_expr(&self) -> PolyExpr {
        match self {
            LieExpr::Letter(s) => PolyExpr::atom(Atom::Letter(s.clone())),
            LieExpr::Bracket(a, b) => PolyExpr::atom(Atom::Bracket(
                Box::new(a.to_poly_expr()),
                Box::new(b.to_poly_expr()),
            )),
        }
    }
}

fn push_unique(out: &mut Vec<String>, s: &str) {
    if !out.iter().any(|x| x == s) {
        out.push(s.to_string());
    }
}

impl PolyExpr {
    pub fn atom(a: Atom) -> Self {
        PolyExpr(vec![(false, ShufExpr(vec![ProdExpr(vec![a])]))])
    }

    /// The single atom of a one-atom expression.
    fn single_atom(&self) -> Option<&Atom> {
        match self.0.as_slice() {
            [(false, ShufExpr(s))] => match s.as_slice() {
                [ProdExpr(p)] => match p.as_slice() {
                    [a] => Some(a),
                    _ => None,
                },
                _ => None,
            },
            _ => None,
        }
    }

    fn as_lie(&self) -> Option<LieExpr> {
        match self.single_atom()? {
            Atom::Letter(s) => Some(LieExpr::Letter(s.clone())),
            Atom::Bracket(a, b) => Some(LieExpr::bracket(a.as_lie()?, b.as_lie()?)),
            _ => None,
        }
    }

    fn as_word(&self) -> Option<Vec<String>> {
        match self.0.as_slice() {
            [(false, ShufExpr(s))] => match s.as_slice() {
                [ProdExpr(p)] => p
                    .iter()
                    .map(|a| match a {
                        Atom::Letter(s) => Some(s.clone()),
                        _ => None,
                    })
                    .collect(),
                _ => None,
            },
            _ => None,
        }
    }

    fn collect_letters(&self, out: &mut Vec<String>) {
        for (_, ShufExpr(parts)) in &self.0 {
            for ProdExpr(atoms) in parts {
                for a in atoms {
                    match a {
                        Atom::Letter(s) => push_unique(out, s),
                        Atom::Bracket(x, y) => {
                            x.collect_letters(out);
                            y.collect_letters(out);
                        }
                        Atom::Number(_) | Atom::Scalar(_) => {}
                    }
                }
            }
        }
    }

    pub fn to_poly(&self, alphabet: &Alphabet) -> Result<NcPoly> {
        let mut total = NcPoly::zero(alphabet);
        for (neg, ShufExpr(parts)) in &self.0 {
            let mut acc: Option<NcPoly> = None;
            for ProdExpr(atoms) in parts {
                let mut p = NcPoly::one(alphabet);
                for a in atoms {
                    p = p.concat_mul(&atom_poly(a, alphabet)?)?;
                }
                acc = Some(match acc {
                    None => p,
                    Some(q) => q.shuffle(&p)?,
                });
            }
            let term = acc.expect("nonempty shuffle");
            total = if *neg {
                total.sub(&term)?
            } else {
                total.add(&term)?
            };
        }
        Ok(total)
    }
}

fn atom_poly(a: &Atom, alphabet: &Alphabet) -> Result<NcPoly> {
    match a {
        Atom::Number(r) => Ok(NcPoly::one(alphabet).scale_rational(r)),
        Atom::Scalar(s) => Ok(NcPoly::one(alphabet).scale(s)),
        Atom::Letter(s) => Ok(NcPoly::letter(alphabet, alphabet.index_of(s)?)),
        Atom::Bracket(x, y) => {
            let (px, py) = (x.to_poly(alphabet)?, y.to_poly(alphabet)?);
            px.concat_mul(&py)?.sub(&py.concat_mul(&px)?)
        }
    }
}

impl Expr {
    /// Narrowest reading of a polynomial expression.
    pub fn from_poly(p: PolyExpr) -> Expr {
        if let Some(w) = p.as_word() {
            return Expr::Word(w);
        }
        if let Some(l) = p.as_lie() {
            return Expr::Lie(l);
        }
        Expr::Poly(p)
    }

    /// Group words without inverses or commutators are plain words.
    pub fn from_group(g: GroupExpr) -> Expr {
        if g.has_structure() {
            return Expr::Group(g);
        }
        let mut names = Vec::new();
        match g {
            GroupExpr::Letter(s) => names.push(s),
            GroupExpr::Product(fs) => {
                for f in fs {
                    if let GroupExpr::Letter(s) = f {
                        names.push(s);
                    }
                }
            }
            _ => unreachable!("checked above"),
        }
        Expr::Word(names)
    }

    /// Letter names in order of first appearance.
    pub fn letters(&self) -> Vec<String> {
        let mut out = Vec::new();
        match self {
            Expr::Word(w) => w.iter().for_each(|s| push_unique(&mut out, s)),
            Expr::Lie(l) => l.collect_letters(&mut out),
            Expr::Group(g) => g.collect_letters(&mut out),
            Expr::Poly(p) => p.collect_letters(&mut out),
        }
        out
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Expr::Word(_) => "word",
            Expr::Lie(_) => "lie",
            Expr::Group(_) => "group",
            Expr::Poly(_) => "poly",
        }
    }

    pub fn to_poly(&self, alphabet: &Alphabet) -> Result<NcPoly> {
        match self {
            Expr::Word(w) => {
                let names: Vec<&str> = w.iter().map(String::as_str).collect();
                NcPoly::from_names(alphabet, &names)
            }
            Expr::Lie(l) => l.to_tree(alphabet)?.expand(alphabet),
            Expr::Poly(p) => p.to_poly(alphabet),
            Expr::Group(_) => Err(Error::Input(
                "expected a polynomial; parentheses denote group commutators, use [a,b] for Lie brackets".into(),
            )),
        }
    }

    pub fn to_group(&self, alphabet: &Alphabet) -> Result<GroupWord> {
        match self {
            Expr::Word(w) => {
                let names: Vec<&str> = w.iter().map(String::as_str).collect();
                GroupWord::from_names(alphabet, &names)
            }
            Expr::Group(g) => g.to_group(alphabet),
            Expr::Lie(_) | Expr::Poly(_) => Err(Error::Input(
                "expected a group word; square brackets denote Lie brackets, use (a,b) for commutators".into(),
            )),
        }
    }

    pub fn to_lie(&self, alphabet: &Alphabet) -> Result<LieTree> {
        match self {
            Expr::Lie(l) => l.to_tree(alphabet),
            Expr::Word(w) if w.len() == 1 => Ok(LieTree::leaf(alphabet.index_of(&w[0])?)),
            _ => Err(Error::Input("expected a bracket expression".into())),
        }
    }
}

// ---------------------------------------------------------------------------
// parser

/// Parses an expression, choosing the group grammar when the input contains
/// `(` or `^` outside scalar braces.
pub fn parse(text: &str) -> Result<Expr> {
    let (toks, end) = lex(text, 1, 1, true)?;
    let mut c = Cursor { toks, pos: 0, end };
    if c.peek().is_none() {
        return Err(c.error("empty expression"));
    }
    let group = c
        .toks
        .iter()
        .any(|t| matches!(t.tok, Tok::Sym('(') | Tok::Sym('^')));
    let e = if group {
        Expr::from_group(group_word(&mut c)?)
    } else {
        Expr::from_poly(poly(&mut c)?)
    };
    c.finish()?;
    Ok(e)
}

/// Parses with the polynomial grammar regardless of content.
pub fn parse_poly(text: &str) -> Result<PolyExpr> {
    let (toks, end) = lex(text, 1, 1, true)?;
    let mut c = Cursor { toks, pos: 0, end };
    let p = poly(&mut c)?;
    c.finish()?;
    Ok(p)
}

fn poly(c: &mut Cursor) -> Result<PolyExpr> {
    let mut terms = vec![(c.eat('-'), shuf(c)?)];
    loop {
        if c.eat('+') {
            terms.push((false, shuf(c)?));
        } else if c.eat('-') {
            terms.push((true, shuf(c)?));
        } else {
            return Ok(PolyExpr(terms));
        }
    }
}

fn shuf(c: &mut Cursor) -> Result<ShufExpr> {
    let mut parts = vec![prod(c)?];
    while c.eat('#') {
        parts.push(prod(c)?);
    }
    Ok(ShufExpr(parts))
}

fn starts_atom(t: Option<&Tok>) -> bool {
    matches!(
        t,
        Some(Tok::Number(_)) | Some(Tok::Ident(_)) | Some(Tok::Block(..)) | Some(Tok::Sym('['))
    )
}

fn prod(c: &mut Cursor) -> Result<ProdExpr> {
    if !starts_atom(c.peek()) {
        return Err(c.error(format!("expected a term, found {}", c.describe())));
    }
    let mut atoms = Vec::new();
    while starts_atom(c.peek()) {
        atoms.push(atom(c)?);
    }
    Ok(ProdExpr(atoms))
}

fn atom(c: &mut Cursor) -> Result<Atom> {
    let (l, k) = c.here();
    match c.peek().cloned() {
        Some(Tok::Number(n)) => {
            c.pos += 1;
            let mut r = BigRational::from_integer(n);
            if c.eat('/') {
                let (dl, dk) = c.here();
                let Some(Tok::Number(d)) = c.peek().cloned() else {
                    return Err(c.error("expected a denominator"));
                };
                c.pos += 1;
                if d.is_zero() {
                    return Err(err(dl, dk, "division by zero"));
                }
                r /= BigRational::from_integer(d);
            }
            Ok(Atom::Number(r))
        }
        Some(Tok::Block(text, bl, bc)) => {
            c.pos += 1;
            parse_scalar_at(&text, bl, bc).map(Atom::Scalar)
        }
        Some(Tok::Ident(s)) => {
            c.pos += 1;
            Ok(Atom::Letter(s))
        }
        Some(Tok::Sym('[')) => {
            c.pos += 1;
            let a = poly(c)?;
            c.expect(',')?;
            let b = poly(c)?;
            c.expect(']')?;
            Ok(Atom::Bracket(Box::new(a), Box::new(b)))
        }
        _ => Err(err(l, k, "expected a term")),
    }
}

fn group_word(c: &mut Cursor) -> Result<GroupExpr> {
    let mut factors = vec![group_factor(c)?];
    while matches!(c.peek(), Some(Tok::Ident(_)) | Some(Tok::Sym('('))) {
        factors.push(group_factor(c)?);
    }
    Ok(GroupExpr::product(factors))
}

fn group_factor(c: &mut Cursor) -> Result<GroupExpr> {
    let mut g = group_primary(c)?;
    while c.is_sym('^') {
        c.pos += 1;
        if !c.eat('-') {
            return Err(c.error("only the exponent -1 is supported"));
        }
        match c.peek() {
            Some(Tok::Number(n)) if n.is_one() => c.pos += 1,
            _ => return Err(c.error("only the exponent -1 is supported")),
        }
        g = GroupExpr::inverse(g);
    }
    Ok(g)
}

fn group_primary(c: &mut Cursor) -> Result<GroupExpr> {
    match c.peek().cloned() {
        Some(Tok::Ident(s)) => {
            c.pos += 1;
            Ok(GroupExpr::Letter(s))
        }
        Some(Tok::Sym('(')) => {
            c.pos += 1;
            let a = group_word(c)?;
            let g = if c.eat(',') {
                GroupExpr::commutator(a, group_word(c)?)
            } else {
                a
            };
            c.expect(')')?;
            Ok(g)
        }
        _ => Err(c.error(format!("expected a group word, found {}", c.describe()))),
    }
}

// ---------------------------------------------------------------------------
// printing

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Number(r) if r.is_negative() => write!(f, "{{{r}}}"),
            Atom::Number(r) => fmt_rational(r, f),
            Atom::Scalar(s) => write!(f, "{{{s}}}"),
            Atom::Letter(s) => write!(f, "{s}"),
            Atom::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl fmt::Display for ProdExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ShufExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " # ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for PolyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (neg, s)) in self.0.iter().enumerate() {
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Letter(s) => write!(f, "{s}"),
            LieExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Letter(s) => write!(f, "{s}"),
            GroupExpr::Inverse(g) => match **g {
                GroupExpr::Product(_) => write!(f, "({g})^-1"),
                _ => write!(f, "{g}^-1"),
            },
            GroupExpr::Commutator(a, b) => write!(f, "({a},{b})"),
            GroupExpr::Product(fs) => {
                for (k, g) in fs.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Word(w) => write!(f, "{}", w.join(" ")),
            Expr::Lie(l) => write!(f, "{l}"),
            Expr::Group(g) => write!(f, "{g}"),
            Expr::Poly(p) => write!(f, "{p}"),
        }
    }
}

/// Prints a group word as an expression (`x y x^-1 y^-1`).
pub fn group_expr(word: &GroupWord) -> GroupExpr {
    let alphabet = word.alphabet();
    GroupExpr::product(
        word.syllables()
            .iter()
            .map(|s| {
                let l = GroupExpr::letter(alphabet.name(s.letter));
                if s.inverse {
                    GroupExpr::inverse(l)
                } else {
                    l
                }
            })
            .collect(),
    )
}

/// An expression for a polynomial: the printed form reparses to the same polynomial.
pub fn poly_expr(p: &NcPoly) -> PolyExpr {
    if p.is_zero() {
        return PolyExpr::atom(Atom::Number(BigRational::zero()));
    }
    let alphabet = p.alphabet();
    let terms = p
        .terms()
        .map(|(w, c)| {
            let (neg, mag) = match c {
                Scalar::Rat(r) if r.is_negative() => (true, -c),
                _ => (false, c.clone()),
            };
            let mut atoms = Vec::new();
            match &mag {
                Scalar::Rat(r) if r.is_one() && !w.is_empty() => {}
                Scalar::Rat(r) => atoms.push(Atom::Number(r.clone())),
                s => atoms.push(Atom::Scalar(s.clone())),
            }
            atoms.extend(word_atoms(w, alphabet));
            (neg, ShufExpr(vec![ProdExpr(atoms)]))
        })
        .collect();
    PolyExpr(terms)
}

fn word_atoms(w: &Word, alphabet: &Alphabet) -> Vec<Atom> {
    w.letters()
        .iter()
        .map(|&l| Atom::Letter(alphabet.name(l as usize).to_string()))
        .collect()
}

impl From<LieExpr> for PolyExpr {
    fn from(l: LieExpr) -> PolyExpr {
        l.to_poly_expr()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xyz() -> Alphabet {
        Alphabet::new(["x", "y", "z"]).unwrap()
    }

    #[test]
    fn classifies_inputs() {
        assert!(matches!(parse("[x,[x,y]]").unwrap(), Expr::Lie(_)));
        assert_eq!(
            parse("x y").unwrap(),
            Expr::Word(vec!["x".into(), "y".into()])
        );
        assert!(matches!(parse("(x,y)").unwrap(), Expr::Group(_)));
        assert!(matches!(parse("x y # z").unwrap(), Expr::Poly(_)));
        assert!(matches!(parse("x^-1").unwrap(), Expr::Group(_)));
        assert!(matches!(parse("{(w1+1)/t} x").unwrap(), Expr::Poly(_)));
    }

    #[test]
    fn lie_degree_three() {
        let a = xyz();
        let e = parse("[x,[x,y]]").unwrap();
        assert_eq!(e.to_lie(&a).unwrap().degree(), 3);
    }

    #[test]
    fn commutator_word() {
        let a = xyz();
        let g = parse("(x,y)").unwrap().to_group(&a).unwrap();
        assert_eq!(g.to_string(), "x y x^-1 y^-1");
        let h = parse("(x y)^-1 x").unwrap().to_group(&a).unwrap();
        assert_eq!(h.to_string(), "y^-1");
    }

    #[test]
    fn shuffle_has_three_terms() {
        let a = xyz();
        let p = parse("x y # z").unwrap().to_poly(&a).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.to_string(), "x y z + x z y + z x y");
    }

    #[test]
    fn coefficients() {
        let a = xyz();
        let p = parse("3/2 + {w1} z + x y - y x")
            .unwrap()
            .to_poly(&a)
            .unwrap();
        assert_eq!(p.to_string(), "3/2 + {w1} z + x y - y x");
        let q = parse(&p.to_string()).unwrap().to_poly(&a).unwrap();
        assert_eq!(p, q);
        assert_eq!(Expr::from_poly(poly_expr(&p)).to_poly(&a).unwrap(), p);
    }

    #[test]
    fn scalars() {
        assert_eq!(parse_scalar("3/2").unwrap(), Scalar::ratio(3, 2));
        let s = parse_scalar("(w2 + w1)/t^2").unwrap();
        assert_eq!(s.to_string(), "(w2 + w1)/t^2");
        assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
        assert_eq!(parse_scalar("-3/2*w1^2").unwrap().to_string(), "-3/2*w1^2");
        assert!(parse_scalar("1/w").is_err());
    }

    #[test]
    fn error_positions() {
        match parse("[x,\n  y") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 4)),
            other => panic!("{other:?}"),
        }
        match parse("x + $") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("{other:?}"),
        }
        match parse("x ^2") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 4)),
            other => panic!("{other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("3/0").is_err());
        assert!(parse("{w1").is_err());
    }

    #[test]
    fn round_trips() {
        for s in [
            "[x,[x,y]]",
            "x y",
            "(x,y)",
            "(x y)^-1 z",
            "(((x,y),x),(x,y))",
            "-x y # z + 3/2 [x,y] - {w1/t} z",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
