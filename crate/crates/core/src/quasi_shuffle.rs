//! Tensor words over a commutative monomial algebra and the quasi-shuffle
//! product
//!
//! ```text
//! (a⊗a') ∗ (b⊗b') = a⊗(a' ∗ (b⊗b')) + b⊗((a⊗a') ∗ b') + (a·b)⊗(a' ∗ b')
//! ```
//!
//! The letter product `·` is a parameter of [`quasi_shuffle_by`]; for words
//! of exponent vectors it is [`ExponentVector::mul`].

use std::collections::BTreeMap;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::algebra::{LinComb, Rational};
use crate::error::{Error, Result};
use crate::exponents::{ExponentMonoid, ExponentVector};

/// A pure tensor `w₁ ⊗ ⋯ ⊗ wₙ` of exponent vectors over an alphabet of size
/// `m`. The empty word is the unit.
///
/// Letters may be the zero vector (the monomial `1` of `k[Y]`). Use
/// [`MultiComposition`](crate::compositions::MultiComposition) when letters
/// must be nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorWord<E> {
    m: usize,
    letters: Vec<ExponentVector<E>>,
}

impl<E: ExponentMonoid> TensorWord<E> {
    pub fn new(m: usize, letters: Vec<ExponentVector<E>>) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if let Some(bad) = letters.iter().find(|l| l.m() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: bad.m(),
            });
        }
        Ok(Self { m, letters })
    }

    /// The empty word over an alphabet of size `m`.
    pub fn unit(m: usize) -> Self {
        assert!(m > 0, "alphabet size must be positive");
        Self { m, letters: Vec::new() }
    }

    /// Builds a word from a nonempty letter list, taking `m` from the letters.
    pub fn from_letters(letters: Vec<ExponentVector<E>>) -> Result<Self> {
        let m = letters.first().map(|l| l.m()).ok_or(Error::EmptyAlphabet)?;
        Self::new(m, letters)
    }

    pub(crate) fn from_parts_unchecked(m: usize, letters: Vec<ExponentVector<E>>) -> Self {
        debug_assert!(letters.iter().all(|l| l.m() == m));
        Self { m, letters }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn letters(&self) -> &[ExponentVector<E>] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<ExponentVector<E>> {
        self.letters
    }

    /// Number of tensor factors.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        Ok(())
    }

    /// Concatenation product.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { m: self.m, letters })
    }

    /// Letters `[start, end)` as a word.
    pub fn slice(&self, start: usize, end: usize) -> Self {
        Self {
            m: self.m,
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// `w` with `letter` prepended.
    pub fn prepend(&self, letter: ExponentVector<E>) -> Result<Self> {
        if letter.m() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: letter.m(),
            });
        }
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(letter);
        letters.extend_from_slice(&self.letters);
        Ok(Self { m: self.m, letters })
    }

    /// Letters in reverse order.
    pub fn reversal(&self) -> Self {
        let mut letters = self.letters.clone();
        letters.reverse();
        Self { m: self.m, letters }
    }

    /// Quasi-shuffle product with the exponent-vector letter product.
    pub fn qshuffle(&self, other: &Self) -> Result<LinComb<Self>> {
        self.check_compatible(other)?;
        let m = self.m;
        Ok(quasi_shuffle_by(&self.letters, &other.letters, |a, b| a.mul(b))
            .map_keys(|letters| Self::from_parts_unchecked(m, letters.clone())))
    }
}

/// Quasi-shuffle product of two letter sequences for an arbitrary
/// commutative letter product `dot`.
///
/// Computed bottom-up over suffix pairs, so each pair `(a[i..], b[j..])` is
/// expanded once per call.
pub fn quasi_shuffle_by<L, F>(a: &[L], b: &[L], dot: F) -> LinComb<Vec<L>>
where
    L: Clone + Ord,
    F: Fn(&L, &L) -> L,
{
    let (p, q) = (a.len(), b.len());
    // table[i][j] = a[i..] ∗ b[j..] with integer multiplicities, words stored
    // reversed so prepending is a push.
    let mut table: Vec<Vec<BTreeMap<Vec<L>, u128>>> = vec![vec![BTreeMap::new(); q + 1]; p + 1];
    for i in (0..=p).rev() {
        for j in (0..=q).rev() {
            let cell = if i == p {
                BTreeMap::from([(b[j..].iter().rev().cloned().collect(), 1)])
            } else if j == q {
                BTreeMap::from([(a[i..].iter().rev().cloned().collect(), 1)])
            } else {
                let mut acc = BTreeMap::new();
                push_letter(&mut acc, &table[i + 1][j], &a[i]);
                push_letter(&mut acc, &table[i][j + 1], &b[j]);
                push_letter(&mut acc, &table[i + 1][j + 1], &dot(&a[i], &b[j]));
                acc
            };
            table[i][j] = cell;
        }
    }
    let top = std::mem::take(&mut table[0][0]);
    top.into_iter()
        .map(|(mut w, c)| {
            w.reverse();
            (w, Rational::from_integer(c.into()))
        })
        .collect()
}

fn push_letter<L: Clone + Ord>(acc: &mut BTreeMap<Vec<L>, u128>, tails: &BTreeMap<Vec<L>, u128>, letter: &L) {
    for (w, &c) in tails {
        let mut word = Vec::with_capacity(w.len() + 1);
        word.extend_from_slice(w);
        word.push(letter.clone());
        let slot = acc.entry(word).or_insert(0);
        *slot = slot.checked_add(c).expect("quasi-shuffle multiplicity overflow");
    }
}

/// Bilinear extension of [`TensorWord::qshuffle`].
pub fn qshuffle_lin<E: ExponentMonoid>(
    a: &LinComb<TensorWord<E>>,
    b: &LinComb<TensorWord<E>>,
) -> Result<LinComb<TensorWord<E>>> {
    a.try_bilinear(b, |x, y| x.qshuffle(y))
}

/// Number of quasi-shuffles of words of lengths `p` and `q`:
/// `Σ_{k=max(p,q)}^{p+q} k! / ((k-p)! (k-q)! (p+q-k)!)`.
pub fn quasi_shuffle_count(p: usize, q: usize) -> Rational {
    use num_bigint::BigUint;
    let fact = |n: usize| (1..=n).fold(BigUint::one(), |acc, i| acc * i);
    let mut total = BigUint::from(0u32);
    for k in p.max(q)..=p + q {
        total += fact(k) / (fact(k - p) * fact(k - q) * fact(p + q - k));
    }
    Rational::from_integer(total.into())
}

impl<E: ExponentMonoid> PartialOrd for TensorWord<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Words compare by alphabet size, then length, then letters lexicographically.
impl<E: ExponentMonoid> Ord for TensorWord<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then(self.letters.len().cmp(&other.letters.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl<E: ExponentMonoid> fmt::Display for TensorWord<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

impl<E: ExponentMonoid> fmt::Debug for TensorWord<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<E: ExponentMonoid> TensorWord<E> {
    /// Parses `([..],[..])`; `m` is needed to type the empty word `()`.
    pub fn parse(m: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("expected `(...)`, found `{s}`"),
            })?
            .trim();
        if inner.is_empty() {
            return Self::new(m, Vec::new());
        }
        let mut letters = Vec::new();
        let mut rest = inner;
        loop {
            let close = rest.find(']').ok_or_else(|| Error::Parse {
                position: 0,
                message: "unterminated letter".into(),
            })?;
            letters.push(rest[..=close].parse::<ExponentVector<E>>()?);
            rest = rest[close + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest.strip_prefix(',').ok_or_else(|| Error::Parse {
                position: 0,
                message: "expected `,` between letters".into(),
            })?;
        }
        Self::new(m, letters)
    }
}

impl<E: ExponentMonoid> FromStr for TensorWord<E> {
    type Err = Error;

    /// Parses a nonempty word; the empty word needs [`TensorWord::parse`].
    fn from_str(s: &str) -> Result<Self> {
        let probe = s.trim().trim_start_matches('(').trim_start();
        let m = match probe.find(']') {
            Some(end) => probe[..end].split(',').count(),
            None => {
                return Err(Error::Parse {
                    position: 0,
                    message: "cannot infer m for the empty word".into(),
                })
            }
        };
        Self::parse(m, s)
    }
}

/// Shorthand for `1 · w`.
pub fn basis_word<E: ExponentMonoid>(w: TensorWord<E>) -> LinComb<TensorWord<E>> {
    LinComb::term(w, Rational::one())
}
