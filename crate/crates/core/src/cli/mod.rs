//! Batch command-line driver.

pub mod parse;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{write_terms, LinComb, Rational};
use crate::bases::{self, write_basis_terms, Basis, MElement};
use crate::compositions::{MultiComposition, NatComposition};
use crate::error::{Error, Result};
use crate::exponents::{ExponentMonoid, ExponentVector, ExtNat, Nat};
use crate::quasi_shuffle::TensorWord;
use crate::realization::{expand_m_lin, TruncatedSeries};
use crate::rota_baxter::{check_iso, check_rb_identity, RBWord, SQSymWord};

use parse::{parse_element, parse_word_element, Element};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "mqsym", version, about = "Exact computations with multi-quasisymmetric functions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Number of rows (variable sequences)
    #[arg(long, global = true, default_value_t = 2)]
    pub m: usize,

    /// Exponent monoid
    #[arg(long, global = true, value_enum, default_value_t = Monoid::Nat)]
    pub monoid: Monoid,

    /// Truncation level N for series expansions
    #[arg(long = "trunc", global = true, default_value_t = 7)]
    pub trunc: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for randomized checks
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Output basis (defaults to F when every input term is in F, else M)
    #[arg(long, global = true, value_enum)]
    pub basis: Option<BasisArg>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Product of two elements
    Product {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Deconcatenation coproduct
    Coproduct {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    Antipode {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Rewrite in the monomial basis
    F2m {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Rewrite in the fundamental basis
    M2f {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Truncated power-series expansion
    Expand {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Weight-1 Rota-Baxter identity on `head | (tail)` elements
    RbCheck {
        #[arg(allow_hyphen_values = true)]
        x: Option<String>,
        #[arg(allow_hyphen_values = true)]
        y: Option<String>,
        /// Number of random pairs (requires --seed)
        #[arg(long)]
        random: Option<usize>,
    },
    /// Isomorphism checks between the weak model and the free Rota-Baxter algebra
    IsoCheck {
        a: Option<String>,
        b: Option<String>,
        #[arg(long)]
        random: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Monoid {
    Nat,
    Weak,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    #[value(name = "M")]
    M,
    #[value(name = "F")]
    F,
}

/// Exit status and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: String) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome::usage(text)
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    if cli.m == 0 {
        return Outcome::usage(format!("error: {}\n", Error::EmptyAlphabet));
    }
    let result = match &cli.command {
        Command::RbCheck { x, y, random } => rb_check(cli, x.as_deref(), y.as_deref(), *random),
        Command::IsoCheck { a, b, random } => iso_check(cli, a.as_deref(), b.as_deref(), *random),
        _ => match cli.monoid {
            Monoid::Nat => algebra_verb::<Nat>(cli),
            Monoid::Weak => algebra_verb::<ExtNat>(cli),
        },
    };
    match result {
        Ok(outcome) => outcome,
        Err(e) => Outcome::usage(format!("error: {e}\n")),
    }
}

/// Monoid-dependent pieces of the driver. The fundamental basis only
/// exists over `ℕ`.
pub trait CliMonoid: ExponentMonoid {
    fn f_to_m(c: &MultiComposition<Self>) -> Result<LinComb<MultiComposition<Self>>>;
    fn m_to_f(a: &LinComb<MultiComposition<Self>>) -> Result<LinComb<MultiComposition<Self>>>;
    fn json(self) -> Value;
}

fn no_f_basis() -> Error {
    Error::Parse {
        position: 0,
        message: "the F basis is only available with --monoid nat".into(),
    }
}

impl CliMonoid for Nat {
    fn f_to_m(c: &NatComposition) -> Result<LinComb<NatComposition>> {
        Ok(bases::f_to_m(c).0)
    }

    fn m_to_f(a: &LinComb<NatComposition>) -> Result<LinComb<NatComposition>> {
        Ok(bases::m_to_f_lin(&MElement(a.clone())).0)
    }

    fn json(self) -> Value {
        json!(self)
    }
}

impl CliMonoid for ExtNat {
    fn f_to_m(_: &MultiComposition<ExtNat>) -> Result<LinComb<MultiComposition<ExtNat>>> {
        Err(no_f_basis())
    }

    fn m_to_f(_: &LinComb<MultiComposition<ExtNat>>) -> Result<LinComb<MultiComposition<ExtNat>>> {
        Err(no_f_basis())
    }

    fn json(self) -> Value {
        match self {
            ExtNat::Eps => json!("e"),
            ExtNat::Nat(n) => json!(n),
        }
    }
}

fn to_m<E: CliMonoid>(e: &Element<E>) -> Result<LinComb<MultiComposition<E>>> {
    let mut out = e.m_part.clone();
    for (c, coeff) in e.f_part.iter() {
        out.add_scaled(&E::f_to_m(c)?, coeff);
    }
    Ok(out)
}

fn convert<E: CliMonoid>(a: &LinComb<MultiComposition<E>>, basis: Basis) -> Result<LinComb<MultiComposition<E>>> {
    match basis {
        Basis::M => Ok(a.clone()),
        Basis::F => E::m_to_f(a),
    }
}

fn output_basis(cli: &Cli, inputs: &[&Element<impl ExponentMonoid>]) -> Basis {
    match cli.basis {
        Some(BasisArg::M) => Basis::M,
        Some(BasisArg::F) => Basis::F,
        None if inputs.iter().all(|e| e.only_f()) => Basis::F,
        None => Basis::M,
    }
}

fn coeff_json(c: &Rational) -> Value {
    if c.is_integer() {
        match c.to_integer().to_string().parse::<i64>() {
            Ok(n) => json!(n),
            Err(_) => json!(c.to_string()),
        }
    } else {
        json!(c.to_string())
    }
}

fn matrix_json<E: CliMonoid>(w: &MultiComposition<E>) -> Value {
    Value::Array(
        w.rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(E::json).collect()))
            .collect(),
    )
}

fn render_element<E: CliMonoid>(cli: &Cli, basis: Basis, a: &LinComb<MultiComposition<E>>) -> String {
    match cli.format {
        Format::Text => {
            let mut s = String::new();
            write_basis_terms(&mut s, basis, a).expect("writing to a string");
            s.push('\n');
            s
        }
        Format::Json => {
            let records: Vec<Value> = a
                .iter()
                .map(|(w, c)| {
                    json!({
                        "coefficient": coeff_json(c),
                        "basis": basis.to_string(),
                        "matrix": matrix_json(w),
                    })
                })
                .collect();
            format!("{}\n", Value::Array(records))
        }
    }
}

type CompPair<E> = LinComb<(MultiComposition<E>, MultiComposition<E>)>;

fn render_pairs<E: CliMonoid>(cli: &Cli, basis: Basis, a: &CompPair<E>) -> String {
    match cli.format {
        Format::Text => {
            let mut s = String::new();
            write_terms(&mut s, a, |w, (l, r)| write!(w, "{basis}{l} ⊗ {basis}{r}"))
                .expect("writing to a string");
            s.push('\n');
            s
        }
        Format::Json => {
            let records: Vec<Value> = a
                .iter()
                .map(|((l, r), c)| {
                    json!({
                        "coefficient": coeff_json(c),
                        "basis": basis.to_string(),
                        "left": matrix_json(l),
                        "right": matrix_json(r),
                    })
                })
                .collect();
            format!("{}\n", Value::Array(records))
        }
    }
}

fn render_series<E: CliMonoid>(cli: &Cli, s: &TruncatedSeries<E>) -> String {
    match cli.format {
        Format::Text => format!("{s}\n"),
        Format::Json => {
            let records: Vec<Value> = s
                .terms()
                .iter()
                .map(|(mono, c)| {
                    let factors: Vec<Value> = mono
                        .factors()
                        .iter()
                        .map(|(&(row, pos), &e)| json!({"row": row, "position": pos, "exponent": e.json()}))
                        .collect();
                    json!({"coefficient": coeff_json(c), "monomial": factors})
                })
                .collect();
            format!("{}\n", Value::Array(records))
        }
    }
}

/// `Δ` applied to each side in the monomial basis, then each tensor factor
/// rewritten in `basis`.
fn convert_pairs<E: CliMonoid>(a: &CompPair<E>, basis: Basis) -> Result<CompPair<E>> {
    let mut out = LinComb::zero();
    for ((l, r), c) in a.iter() {
        let left = convert(&LinComb::basis(l.clone()), basis)?;
        let right = convert(&LinComb::basis(r.clone()), basis)?;
        out.add_scaled(
            &left.bilinear(&right, |x, y| LinComb::basis((x.clone(), y.clone()))),
            c,
        );
    }
    Ok(out)
}

fn algebra_verb<E: CliMonoid>(cli: &Cli) -> Result<Outcome> {
    let parse = |s: &str| parse_element::<E>(s, cli.m);
    let out = match &cli.command {
        Command::Product { a, b } => {
            let (x, y) = (parse(a)?, parse(b)?);
            let basis = output_basis(cli, &[&x, &y]);
            let prod = bases::m_product(&MElement(to_m(&x)?), &MElement(to_m(&y)?))?;
            render_element(cli, basis, &convert(&prod.0, basis)?)
        }
        Command::Coproduct { a } => {
            let x = parse(a)?;
            let basis = output_basis(cli, &[&x]);
            let delta = bases::m_coproduct(&MElement(to_m(&x)?));
            render_pairs(cli, basis, &convert_pairs(&delta, basis)?)
        }
        Command::Antipode { a } => {
            let x = parse(a)?;
            let basis = output_basis(cli, &[&x]);
            let s = bases::m_antipode(&MElement(to_m(&x)?));
            render_element(cli, basis, &convert(&s.0, basis)?)
        }
        Command::F2m { a } => {
            let x = parse(a)?;
            render_element(cli, Basis::M, &to_m(&x)?)
        }
        Command::M2f { a } => {
            let x = parse(a)?;
            render_element(cli, Basis::F, &convert(&to_m(&x)?, Basis::F)?)
        }
        Command::Expand { a } => {
            let x = parse(a)?;
            render_series(cli, &expand_m_lin(cli.m, &to_m(&x)?, cli.trunc)?)
        }
        Command::RbCheck { .. } | Command::IsoCheck { .. } => unreachable!("handled separately"),
    };
    Ok(Outcome::ok(out))
}

fn check_outcome(cli: &Cli, name: &str, cases: usize, passed: usize) -> Outcome {
    let stdout = match cli.format {
        Format::Text if passed == cases => format!("{name}: {passed}/{cases} passed\n"),
        Format::Text => format!("{name}: FAILED ({passed}/{cases} passed)\n"),
        Format::Json => format!(
            "{}\n",
            json!({"check": name, "cases": cases, "passed": passed, "ok": passed == cases})
        ),
    };
    Outcome {
        code: if passed == cases { EXIT_OK } else { EXIT_CHECK_FAILED },
        stdout,
        stderr: String::new(),
    }
}

fn usage_error(message: &str) -> Error {
    Error::Parse {
        position: 0,
        message: message.into(),
    }
}

fn seeded_rng(cli: &Cli) -> Result<ChaCha8Rng> {
    cli.seed
        .map(ChaCha8Rng::seed_from_u64)
        .ok_or_else(|| usage_error("--random requires --seed"))
}

fn random_nat_vector(rng: &mut impl Rng, m: usize) -> ExponentVector<Nat> {
    ExponentVector::new((0..m).map(|_| rng.gen_range(0..=2)).collect()).expect("m > 0")
}

/// A random `Ш(Y)` key with tail length at most 2.
pub fn random_rb_word(rng: &mut impl Rng, m: usize) -> RBWord {
    let head = random_nat_vector(rng, m);
    let len = rng.gen_range(0..=2);
    let letters = (0..len).map(|_| random_nat_vector(rng, m)).collect();
    RBWord::new(head, TensorWord::new(m, letters).expect("letters have m slots")).expect("same m")
}

fn random_weak_vector(rng: &mut impl Rng, m: usize) -> ExponentVector<ExtNat> {
    let slot = |rng: &mut _| match Rng::gen_range(rng, 0..3) {
        0 => ExtNat::Eps,
        n => ExtNat::Nat(n),
    };
    ExponentVector::new((0..m).map(|_| slot(rng)).collect()).expect("m > 0")
}

/// A random weak-model key with tail length at most 2.
pub fn random_sqsym_word(rng: &mut impl Rng, m: usize) -> SQSymWord {
    let head = random_weak_vector(rng, m);
    let len = rng.gen_range(0..=2);
    let letters = (0..len).map(|_| random_weak_vector(rng, m)).collect();
    SQSymWord::new(head, TensorWord::new(m, letters).expect("letters have m slots"))
        .expect("weak letters")
}

fn random_rb_element(rng: &mut impl Rng, m: usize) -> LinComb<RBWord> {
    let terms = rng.gen_range(1..=2);
    let mut out = LinComb::zero();
    for _ in 0..terms {
        let c: i64 = [-2, -1, 1, 2][rng.gen_range(0..4)];
        out.add_term(random_rb_word(rng, m), Rational::from_integer(c.into()));
    }
    out
}

fn rb_check(cli: &Cli, x: Option<&str>, y: Option<&str>, random: Option<usize>) -> Result<Outcome> {
    let parse = |s| parse_word_element::<RBWord>(s, cli.m, RBWord::m);
    match (x, y, random) {
        (Some(x), Some(y), None) => {
            let ok = check_rb_identity(&parse(x)?, &parse(y)?)?;
            Ok(check_outcome(cli, "rb-check", 1, ok as usize))
        }
        (None, None, Some(n)) => {
            let mut rng = seeded_rng(cli)?;
            let mut passed = 0;
            for _ in 0..n {
                let a = random_rb_element(&mut rng, cli.m);
                let b = random_rb_element(&mut rng, cli.m);
                passed += check_rb_identity(&a, &b)? as usize;
            }
            Ok(check_outcome(cli, "rb-check", n, passed))
        }
        _ => Err(usage_error("rb-check takes two elements or --random <n>")),
    }
}

fn parse_sqsym(s: &str, m: usize) -> Result<SQSymWord> {
    let comb = parse_word_element::<SQSymWord>(s, m, SQSymWord::m)?;
    match comb.iter().next() {
        Some((w, c)) if comb.len() == 1 && c == &Rational::from_integer(1.into()) => Ok(w.clone()),
        _ => Err(usage_error("iso-check takes single basis keys `head | (tail)`")),
    }
}

fn iso_check(cli: &Cli, a: Option<&str>, b: Option<&str>, random: Option<usize>) -> Result<Outcome> {
    match (a, b, random) {
        (Some(a), Some(b), None) => {
            let ok = check_iso(&parse_sqsym(a, cli.m)?, &parse_sqsym(b, cli.m)?)?;
            Ok(check_outcome(cli, "iso-check", 1, ok as usize))
        }
        (None, None, Some(n)) => {
            let mut rng = seeded_rng(cli)?;
            let mut passed = 0;
            for _ in 0..n {
                let x = random_sqsym_word(&mut rng, cli.m);
                let y = random_sqsym_word(&mut rng, cli.m);
                passed += check_iso(&x, &y)? as usize;
            }
            Ok(check_outcome(cli, "iso-check", n, passed))
        }
        _ => Err(usage_error("iso-check takes two keys or --random <n>")),
    }
}
