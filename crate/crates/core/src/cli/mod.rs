//! Expression parser, printer, and the `chenlie` command-line front end.
//!
//! Every subcommand prints human-readable text by default; `--json` prints a
//! document with a top-level `"schema": 1` field and exact scalars as strings.
//! An expression argument equal to `-` is read from standard input.

mod parse;

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};

pub use parse::{
    group_expr, parse, parse_poly, parse_scalar, poly_expr, Atom, Expr, GroupExpr, LieExpr,
    PolyExpr, ProdExpr, ShufExpr,
};

use crate::chenint::{canonical_model, pair_graded, IntegralModel, PairingTable, TruncSeries};
use crate::error::{Error, Result};
use crate::freegrp::{lcs_degree, magnus, phi_inverse_bounded, LcsDegree};
use crate::liealg::{decompose, hall_basis, is_lie, witt_dimension};
use crate::melnikov::{
    ck, ck_closed_form, derive, example_ex_m5, m5_alphabets, melnikov_integrand, pk_closed_form,
    pl_grade2, reduce_to_alpha, Connection, Grade2Element, WeightPair,
};
use crate::ncalg::{Alphabet, MPoly, NcPoly, Scalar};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "chenlie",
    version,
    about = "Exact free Lie algebra, shuffle algebra and iterated-integral calculus",
    after_help = "Square brackets [a,b] are Lie brackets; parentheses (a,b) are group commutators.\n\
                  Juxtaposition concatenates, '#' shuffles, {...} holds a symbolic scalar."
)]
struct Cli {
    /// Print a JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Comma-separated alphabet; defaults to the letters of the inputs in natural order.
    #[arg(long, global = true, value_delimiter = ',')]
    alphabet: Option<Vec<String>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Hall basis of the degree-K free Lie algebra.
    Hall {
        #[arg(short = 'm')]
        m: Option<usize>,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Show how an expression is read.
    Parse {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Expand brackets, products and shuffles into a polynomial.
    Expand {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Shuffle product of two polynomials.
    Shuffle {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Canonical inner product of two polynomials.
    Pair {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Ree's criterion: is the polynomial a Lie element?
    Islie {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Split a homogeneous polynomial into Lie and shuffle parts.
    Project {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Magnus expansion of a group word, truncated at degree N.
    Magnus {
        gw: String,
        #[arg(short = 'N')]
        n: usize,
    },
    /// Lower central series degree of a group word, with its leading Lie term.
    Lcs {
        gw: String,
        #[arg(long, default_value_t = 8)]
        max: usize,
    },
    /// Iterated integral of a polynomial along a group word.
    Eval {
        /// `canonical` or a JSON model document.
        #[arg(long, default_value = "canonical")]
        model: String,
        gw: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Truncation degree; defaults to the degree of POLY.
        #[arg(short = 'N')]
        n: Option<usize>,
    },
    /// Coefficient polynomials P_k of the quasi-homogeneous Melnikov integrand.
    Pk {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(short = 'i')]
        i: Option<usize>,
    },
    /// The scalar product C_k(w1, w2).
    Ck {
        #[arg(short = 'k')]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// Check that the degree-5 integral along (((a1,a2),a1),(a1,a2)) vanishes.
    M5check,
    /// D4 monodromy action on degree-2 brackets.
    Monodromy {
        #[command(subcommand)]
        action: MonodromyCommand,
    },
    /// Derivative of a polynomial in forms under a connection.
    Derive {
        #[arg(long)]
        connection: PathBuf,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Nested Melnikov integrand R_k of a one-form.
    Integrand {
        #[arg(long)]
        connection: PathBuf,
        #[arg(short = 'k')]
        k: usize,
        #[arg(allow_hyphen_values = true)]
        omega: String,
    },
    /// Integral of a homogeneous polynomial along a word deep in the lower central series.
    Pairgraded {
        #[arg(long)]
        table: PathBuf,
        gw: String,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
}

#[derive(Debug, Subcommand)]
enum MonodromyCommand {
    /// Find operators sending a nonzero element to k [α1,α2].
    Reduce {
        #[arg(allow_hyphen_values = true)]
        vec6: String,
    },
    /// Apply h_i to an element.
    Apply {
        #[arg(short = 'i')]
        i: usize,
        #[arg(allow_hyphen_values = true)]
        vec6: String,
    },
}

/// Connection, pairing-table and model documents.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelDoc {
    alphabet: Vec<String>,
    #[serde(default)]
    paths: Option<Vec<String>>,
    #[serde(default)]
    delta_poly: Option<ScalarText>,
    #[serde(default)]
    matrix: Option<Vec<Vec<ScalarText>>>,
    #[serde(default)]
    weights: Option<Vec<ScalarText>>,
    #[serde(default)]
    table: Option<Vec<Vec<ScalarText>>>,
    /// Per path generator, a Lie polynomial whose exponential is its series.
    #[serde(default)]
    logs: Option<BTreeMap<String, String>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    fn scalar(&self) -> Result<Scalar> {
        match self {
            ScalarText::Int(n) => Ok(Scalar::int(*n)),
            ScalarText::Text(s) => parse_scalar(s),
        }
    }
}

fn scalars(v: &[Vec<ScalarText>]) -> Result<Vec<Vec<Scalar>>> {
    v.iter()
        .map(|r| r.iter().map(ScalarText::scalar).collect())
        .collect()
}

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            ok: true,
        }
    }
}

struct Ctx<'a> {
    alphabet: Option<Vec<String>>,
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Ctx<'_> {
    fn text(&mut self, arg: &str) -> Result<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin_used {
            return Err(Error::Input(
                "standard input can feed only one argument".into(),
            ));
        }
        self.stdin_used = true;
        let mut s = String::new();
        self.stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("reading standard input: {e}")))?;
        Ok(s.trim().to_string())
    }

    fn expr(&mut self, arg: &str) -> Result<Expr> {
        parse(&self.text(arg)?)
    }

    fn alphabet(&self, exprs: &[&Expr]) -> Result<Alphabet> {
        if let Some(names) = &self.alphabet {
            return Alphabet::new(names.iter().cloned());
        }
        let mut names: Vec<String> = Vec::new();
        for e in exprs {
            for l in e.letters() {
                if !names.contains(&l) {
                    names.push(l);
                }
            }
        }
        if names.is_empty() {
            return Ok(Alphabet::standard(1));
        }
        names.sort_by_key(|n| natural_key(n));
        Alphabet::new(names)
    }
}

/// `x2 < x10`: compares the non-digit prefix, then the numeric suffix.
fn natural_key(s: &str) -> (String, u128, String) {
    let split = s.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    let (head, digits) = s.split_at(split);
    (head.to_string(), digits.parse().unwrap_or(0), s.to_string())
}

fn poly_json(p: &NcPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(w, c)| json!({"word": w.display(p.alphabet()).to_string(), "coeff": c.to_string()}))
        .collect();
    json!({"display": p.to_string(), "terms": terms})
}

fn names_json(a: &Alphabet) -> Value {
    json!(a.names())
}

fn parse_vec6(s: &str) -> Result<Grade2Element> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(Error::Input(format!(
            "expected six comma-separated integers, found {}",
            parts.len()
        )));
    }
    let mut v = [0i64; 6];
    for (slot, p) in v.iter_mut().zip(&parts) {
        *slot = p
            .parse()
            .map_err(|_| Error::Input(format!("`{p}` is not an integer")))?;
    }
    Ok(Grade2Element(v))
}

fn parse_weights(s: &str) -> Result<WeightPair> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(Error::Input("expected two comma-separated weights".into()));
    }
    Ok(WeightPair::new(
        parse_scalar(parts[0])?,
        parse_scalar(parts[1])?,
    ))
}

fn read_doc(path: &PathBuf) -> Result<ModelDoc> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn connection_from(doc: &ModelDoc) -> Result<Connection> {
    let forms = Alphabet::new(doc.alphabet.iter().cloned())?;
    match (&doc.weights, &doc.matrix) {
        (Some(w), None) => {
            let w = w
                .iter()
                .map(ScalarText::scalar)
                .collect::<Result<Vec<_>>>()?;
            Connection::diagonal(&forms, &w)
        }
        (None, Some(m)) => {
            let delta = match &doc.delta_poly {
                Some(d) => match d.scalar()? {
                    Scalar::Rat(r) => MPoly::constant(r),
                    Scalar::Poly(p) => p,
                    Scalar::Frac(_) => {
                        return Err(Error::Input("delta_poly must be a polynomial".into()))
                    }
                },
                None => MPoly::one(),
            };
            Connection::new(&forms, delta, scalars(m)?)
        }
        _ => Err(Error::Input(
            "a connection needs exactly one of `weights` or `matrix`".into(),
        )),
    }
}

fn table_from(doc: &ModelDoc) -> Result<PairingTable> {
    let forms = Alphabet::new(doc.alphabet.iter().cloned())?;
    let paths = Alphabet::new(
        doc.paths
            .clone()
            .ok_or_else(|| Error::Input("a pairing table needs `paths`".into()))?,
    )?;
    match &doc.table {
        Some(t) => PairingTable::new(&paths, &forms, scalars(t)?),
        None => Ok(PairingTable::symbolic(&paths, &forms)),
    }
}

fn model_from(doc: &ModelDoc, truncation: usize) -> Result<IntegralModel> {
    let forms = Alphabet::new(doc.alphabet.iter().cloned())?;
    let paths = Alphabet::new(
        doc.paths
            .clone()
            .ok_or_else(|| Error::Input("a model needs `paths`".into()))?,
    )?;
    let logs = doc
        .logs
        .as_ref()
        .ok_or_else(|| Error::Input("a model needs `logs`".into()))?;
    let series = paths
        .names()
        .iter()
        .map(|p| {
            let text = logs
                .get(p)
                .ok_or_else(|| Error::Input(format!("no series for path `{p}`")))?;
            let log = parse(text)?.to_poly(&forms)?;
            if !is_lie(&log) {
                return Err(Error::Input(format!(
                    "the series for `{p}` must be the exponential of a Lie element"
                )));
            }
            TruncSeries::exp(&log, truncation)
        })
        .collect::<Result<Vec<_>>>()?;
    IntegralModel::new(&paths, &forms, truncation, series)
}

fn execute(cmd: Command, ctx: &mut Ctx) -> Result<(&'static str, Output)> {
    Ok(match cmd {
        Command::Hall { m, k } => {
            let alphabet = match (&ctx.alphabet, m) {
                (Some(names), m) => {
                    let a = Alphabet::new(names.iter().cloned())?;
                    if m.is_some_and(|m| m != a.len()) {
                        return Err(Error::Input("-m disagrees with --alphabet".into()));
                    }
                    a
                }
                (None, Some(m)) if m >= 1 => Alphabet::standard(m),
                _ => return Err(Error::Input("give -m M (at least 1) or --alphabet".into())),
            };
            if k == 0 {
                return Err(Error::Input("-k must be at least 1".into()));
            }
            let basis = hall_basis(&alphabet, k);
            let elems: Vec<String> = basis
                .elements
                .iter()
                .map(|t| t.display(&alphabet).to_string())
                .collect();
            let text = elems.iter().map(|e| format!("{e}\n")).collect::<String>();
            let json = json!({
                "alphabet": names_json(&alphabet),
                "k": k,
                "dimension": elems.len(),
                "witt_dimension": witt_dimension(alphabet.len(), k),
                "elements": elems,
            });
            ("hall", Output::new(text, json))
        }
        Command::Parse { expr } => {
            let e = ctx.expr(&expr)?;
            let text = format!("{}: {e}\n", e.kind());
            (
                "parse",
                Output::new(
                    text,
                    json!({"kind": e.kind(), "expression": e.to_string(), "letters": e.letters()}),
                ),
            )
        }
        Command::Expand { expr } => {
            let e = ctx.expr(&expr)?;
            let a = ctx.alphabet(&[&e])?;
            let p = e.to_poly(&a)?;
            (
                "expand",
                Output::new(
                    format!("{p}\n"),
                    json!({"alphabet": names_json(&a), "result": poly_json(&p)}),
                ),
            )
        }
        Command::Shuffle { a, b } => {
            let (ea, eb) = (ctx.expr(&a)?, ctx.expr(&b)?);
            let al = ctx.alphabet(&[&ea, &eb])?;
            let p = ea.to_poly(&al)?.shuffle(&eb.to_poly(&al)?)?;
            (
                "shuffle",
                Output::new(
                    format!("{p}\n"),
                    json!({"alphabet": names_json(&al), "result": poly_json(&p)}),
                ),
            )
        }
        Command::Pair { a, b } => {
            let (ea, eb) = (ctx.expr(&a)?, ctx.expr(&b)?);
            let al = ctx.alphabet(&[&ea, &eb])?;
            let v = ea.to_poly(&al)?.inner(&eb.to_poly(&al)?)?;
            (
                "pair",
                Output::new(
                    format!("{v}\n"),
                    json!({"alphabet": names_json(&al), "value": v.to_string()}),
                ),
            )
        }
        Command::Islie { expr } => {
            let e = ctx.expr(&expr)?;
            let a = ctx.alphabet(&[&e])?;
            let b = is_lie(&e.to_poly(&a)?);
            ("islie", Output::new(format!("{b}\n"), json!({"is_lie": b})))
        }
        Command::Project { expr } => {
            let e = ctx.expr(&expr)?;
            let a = ctx.alphabet(&[&e])?;
            let (lie, shf) = decompose(&e.to_poly(&a)?)?;
            let text = format!("lie: {lie}\nshuffle: {shf}\n");
            (
                "project",
                Output::new(
                    text,
                    json!({"alphabet": names_json(&a), "lie": poly_json(&lie), "shuffle": poly_json(&shf)}),
                ),
            )
        }
        Command::Magnus { gw, n } => {
            let e = ctx.expr(&gw)?;
            let a = ctx.alphabet(&[&e])?;
            let s = magnus(&e.to_group(&a)?, n);
            (
                "magnus",
                Output::new(
                    format!("{}\n", s.poly()),
                    json!({"alphabet": names_json(&a), "truncation": n, "series": poly_json(s.poly())}),
                ),
            )
        }
        Command::Lcs { gw, max } => {
            let e = ctx.expr(&gw)?;
            let a = ctx.alphabet(&[&e])?;
            let g = e.to_group(&a)?;
            match lcs_degree(&g, max) {
                LcsDegree::Exact(k) => {
                    let lead = phi_inverse_bounded(&g, k)?;
                    let text = format!("{k}\nleading: {lead}\n");
                    (
                        "lcs",
                        Output::new(text, json!({"degree": k, "leading": poly_json(&lead)})),
                    )
                }
                LcsDegree::Exceeds(n) => (
                    "lcs",
                    Output::new(format!("exceeds {n}\n"), json!({"exceeds": n})),
                ),
            }
        }
        Command::Eval { model, gw, poly, n } => {
            let (eg, ep) = (ctx.expr(&gw)?, ctx.expr(&poly)?);
            if model == "canonical" {
                let a = ctx.alphabet(&[&eg, &ep])?;
                let omega = ep.to_poly(&a)?;
                let n = n.unwrap_or(omega.max_degree().unwrap_or(0));
                let v = canonical_model(&a, n).evaluate(&eg.to_group(&a)?, &omega)?;
                (
                    "eval",
                    Output::new(
                        format!("{v}\n"),
                        json!({"model": "canonical", "truncation": n, "value": v.to_string()}),
                    ),
                )
            } else {
                let doc = read_doc(&PathBuf::from(&model))?;
                let forms = Alphabet::new(doc.alphabet.iter().cloned())?;
                let omega = ep.to_poly(&forms)?;
                let n = n.unwrap_or(omega.max_degree().unwrap_or(0));
                let m = model_from(&doc, n)?;
                let v = m.evaluate(&eg.to_group(m.paths())?, &omega)?;
                (
                    "eval",
                    Output::new(
                        format!("{v}\n"),
                        json!({"model": model, "truncation": n, "value": v.to_string()}),
                    ),
                )
            }
        }
        Command::Pk { k, weights, i } => {
            let w = parse_weights(&weights)?;
            let wj = json!([w.w1.to_string(), w.w2.to_string()]);
            match i {
                Some(i) => {
                    let p = pk_closed_form(&w, k, i)?;
                    (
                        "pk",
                        Output::new(
                            format!("{p}\n"),
                            json!({"k": k, "i": i, "weights": wj, "pk": poly_json(&p)}),
                        ),
                    )
                }
                None => {
                    let mut text = String::new();
                    let mut parts = Vec::new();
                    for i in 0..=k {
                        let p = pk_closed_form(&w, k, i)?;
                        text.push_str(&format!("i={i}: {p}\n"));
                        parts.push(json!({"i": i, "pk": poly_json(&p)}));
                    }
                    (
                        "pk",
                        Output::new(text, json!({"k": k, "weights": wj, "partitions": parts})),
                    )
                }
            }
        }
        Command::Ck { k, weights } => {
            let w = match weights {
                Some(s) => parse_weights(&s)?,
                None => WeightPair::symbolic(),
            };
            let v = ck(&w, k)?;
            let closed = ck_closed_form(&w, k)?;
            let json = json!({
                "k": k,
                "weights": [w.w1.to_string(), w.w2.to_string()],
                "value": v.to_string(),
                "closed_form": closed.to_string(),
                "matches_closed_form": v == closed,
            });
            ("ck", Output::new(format!("{v}\n"), json))
        }
        Command::M5check => {
            let v = example_ex_m5();
            let (paths, forms) = m5_alphabets();
            let holds = v.is_zero();
            let text = if holds {
                format!("{v} (identity holds)\n")
            } else {
                format!("{v} (identity fails)\n")
            };
            let json = json!({
                "value": v.to_string(),
                "identity_holds": holds,
                "paths": names_json(&paths),
                "forms": names_json(&forms),
                "indeterminates": paths.len() * forms.len(),
            });
            let mut out = Output::new(text, json);
            out.ok = holds;
            ("m5check", out)
        }
        Command::Monodromy { action } => match action {
            MonodromyCommand::Reduce { vec6 } => {
                let g = parse_vec6(&ctx.text(&vec6)?)?;
                let (word, k) = reduce_to_alpha(&g)?;
                let result = word.apply(&g);
                let steps: Vec<Value> = word.0.iter().map(|op| json!(op.0)).collect();
                let text = format!("P = {word}\nk = {k}\n");
                let json = json!({
                    "input": g.0,
                    "operators": word.to_string(),
                    "steps": steps,
                    "k": k,
                    "result": result.0,
                });
                ("monodromy reduce", Output::new(text, json))
            }
            MonodromyCommand::Apply { i, vec6 } => {
                let g = parse_vec6(&ctx.text(&vec6)?)?;
                let r = pl_grade2(i, &g)?;
                (
                    "monodromy apply",
                    Output::new(
                        format!("{r}\n"),
                        json!({"i": i, "input": g.0, "result": r.0}),
                    ),
                )
            }
        },
        Command::Derive { connection, poly } => {
            let doc = read_doc(&connection)?;
            let conn = connection_from(&doc)?;
            let p = ctx.expr(&poly)?.to_poly(conn.forms())?;
            let d = derive(&conn, &p)?;
            (
                "derive",
                Output::new(format!("{d}\n"), json!({"result": poly_json(&d)})),
            )
        }
        Command::Integrand {
            connection,
            k,
            omega,
        } => {
            let doc = read_doc(&connection)?;
            let conn = connection_from(&doc)?;
            let om = ctx.expr(&omega)?.to_poly(conn.forms())?;
            if om.homogeneous_degree() != Some(1) {
                return Err(Error::Input(
                    "the one-form must be homogeneous of degree 1".into(),
                ));
            }
            let r = melnikov_integrand(&conn, &om, k)?;
            (
                "integrand",
                Output::new(format!("{r}\n"), json!({"k": k, "result": poly_json(&r)})),
            )
        }
        Command::Pairgraded { table, gw, poly } => {
            let doc = read_doc(&table)?;
            let t = table_from(&doc)?;
            let g = ctx.expr(&gw)?.to_group(t.paths())?;
            let p = ctx.expr(&poly)?.to_poly(t.forms())?;
            let v = pair_graded(&t, &g, &p)?;
            (
                "pairgraded",
                Output::new(format!("{v}\n"), json!({"value": v.to_string()})),
            )
        }
    })
}

/// Runs the command line; returns the process exit code
/// (0 success, 1 invalid input or failed check, 2 usage error).
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx {
        alphabet: cli.alphabet,
        stdin,
        stdin_used: false,
    };
    match execute(cli.command, &mut ctx) {
        Ok((name, output)) => {
            let written = if cli.json {
                let mut doc = output.json;
                if let Value::Object(map) = &mut doc {
                    map.insert("schema".into(), json!(SCHEMA_VERSION));
                    map.insert("command".into(), json!(name));
                }
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                )
            } else {
                write!(out, "{}", output.text)
            };
            if written.is_err() {
                return 1;
            }
            if output.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            let _ = match &e {
                Error::Parse { .. } => writeln!(err, "error: parse error at {e}"),
                _ => writeln!(err, "error: {e}"),
            };
            1
        }
    }
}
