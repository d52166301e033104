//! Truncated power-series realization of `M_w` and `F_c`.
//!
//! Series live in variables `x_{i,j}` with row `i ∈ [m]` and position
//! `j ∈ [0, N]`; exponents are taken in the same monoid as the indices.
//! Position 0 is reserved for the head factors `x_{w,0}`. Truncating by
//! position commutes with multiplication, so identities between products of
//! words of total length at most `N` can be checked exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::One;

use crate::algebra::{write_terms, LinComb, Rational};
use crate::compositions::{MultiComposition, NatComposition};
use crate::error::{Error, Result};
use crate::exponents::{ExponentMonoid, ExponentVector, Nat};
use crate::quasi_shuffle::TensorWord;

/// A monomial `∏ x_{i,j}^{e_{i,j}}`; absent variables have exponent 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SeriesMonomial<E> {
    factors: BTreeMap<(usize, usize), E>,
}

impl<E: ExponentMonoid> SeriesMonomial<E> {
    pub fn one() -> Self {
        Self {
            factors: BTreeMap::new(),
        }
    }

    /// `x^w_j` for an exponent vector `w` at position `j`.
    pub fn column(w: &ExponentVector<E>, position: usize) -> Self {
        let mut out = Self::one();
        out.put_column(w, position);
        out
    }

    fn put_column(&mut self, w: &ExponentVector<E>, position: usize) {
        for (row, &e) in w.exps().iter().enumerate() {
            self.mul_var(row + 1, position, e);
        }
    }

    /// Multiplies by `x_{row,position}^e`.
    pub fn mul_var(&mut self, row: usize, position: usize, e: E) {
        if e.is_zero() {
            return;
        }
        let slot = self.factors.entry((row, position)).or_insert_with(E::zero);
        *slot = slot.add(e);
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(row, pos), &e) in &other.factors {
            out.mul_var(row, pos, e);
        }
        out
    }

    pub fn factors(&self) -> &BTreeMap<(usize, usize), E> {
        &self.factors
    }

    pub fn max_position(&self) -> Option<usize> {
        self.factors.keys().map(|&(_, p)| p).max()
    }

    /// Splits into `(position-0 part, occupied positions, columns)`, the
    /// columns being the exponent vectors at each occupied position `≥ 1`.
    fn pattern(&self, m: usize) -> (Vec<E>, Vec<usize>, Vec<Vec<E>>) {
        let mut head = vec![E::zero(); m];
        let mut by_pos: BTreeMap<usize, Vec<E>> = BTreeMap::new();
        for (&(row, pos), &e) in &self.factors {
            if pos == 0 {
                head[row - 1] = e;
            } else {
                by_pos.entry(pos).or_insert_with(|| vec![E::zero(); m])[row - 1] = e;
            }
        }
        let positions = by_pos.keys().copied().collect();
        (head, positions, by_pos.into_values().collect())
    }
}

impl<E: ExponentMonoid> fmt::Display for SeriesMonomial<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (&(row, pos), e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x[{row},{pos}]")?;
            if e.to_string() != "1" {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A power series restricted to positions `≤ level`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries<E: ExponentMonoid> {
    m: usize,
    level: usize,
    terms: LinComb<SeriesMonomial<E>>,
}

impl<E: ExponentMonoid> TruncatedSeries<E> {
    pub fn zero(m: usize, level: usize) -> Self {
        Self {
            m,
            level,
            terms: LinComb::zero(),
        }
    }

    pub fn one(m: usize, level: usize) -> Self {
        Self {
            m,
            level,
            terms: LinComb::basis(SeriesMonomial::one()),
        }
    }

    /// The head factor `x_{w,0}`.
    pub fn head(w: &ExponentVector<E>, level: usize) -> Self {
        Self {
            m: w.m(),
            level,
            terms: LinComb::basis(SeriesMonomial::column(w, 0)),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn terms(&self) -> &LinComb<SeriesMonomial<E>> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.m != other.m || self.level != other.level {
            return Err(Error::SeriesMismatch(format!(
                "m = {}, N = {} vs m = {}, N = {}",
                self.m, self.level, other.m, other.level
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(Self {
            terms: self.terms.add(&other.terms),
            ..self.clone()
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            terms: self.terms.scale(c),
            ..self.clone()
        }
    }

    /// Product of series; monomials multiply by adding exponents slotwise.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let terms = self
            .terms
            .bilinear(&other.terms, |a, b| LinComb::basis(a.mul(b)));
        Ok(Self {
            terms,
            ..self.clone()
        })
    }

    /// True if, for every head part and column pattern occurring, every
    /// placement of the columns at increasing positions in `[1, N]` carries
    /// the same coefficient.
    pub fn is_multi_quasisymmetric(&self) -> bool {
        type Key<E> = (Vec<E>, Vec<Vec<E>>);
        let mut groups: BTreeMap<Key<E>, BTreeMap<Vec<usize>, Rational>> = BTreeMap::new();
        for (mono, c) in self.terms.iter() {
            let (head, positions, cols) = mono.pattern(self.m);
            groups.entry((head, cols)).or_default().insert(positions, c.clone());
        }
        groups.iter().all(|((_, cols), placements)| {
            let expected = binomial(self.level, cols.len());
            let mut coeffs = placements.values();
            let first = coeffs.next().expect("group is nonempty");
            placements.len() == expected && coeffs.all(|c| c == first)
        })
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Strictly increasing `k`-tuples in `[1, n]`.
fn increasing_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let remaining = k - prefix.len();
        for j in start..=n + 1 - remaining {
            prefix.push(j);
            go(j + 1, n, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// `M_w = Σ_{j₁<⋯<j_k ≤ N} x^{w₁}_{j₁} ⋯ x^{w_k}_{j_k}`.
pub fn expand_m<E: ExponentMonoid>(w: &MultiComposition<E>, level: usize) -> Result<TruncatedSeries<E>> {
    expand_word(w.as_word(), level)
}

/// [`expand_m`] for an arbitrary tensor word (zero letters contribute no
/// variables).
pub fn expand_word<E: ExponentMonoid>(w: &TensorWord<E>, level: usize) -> Result<TruncatedSeries<E>> {
    if w.len() > level {
        return Err(Error::TruncationTooSmall {
            level,
            needed: w.len(),
        });
    }
    let terms = increasing_tuples(level, w.len())
        .into_iter()
        .map(|positions| {
            let mut mono = SeriesMonomial::one();
            for (col, &p) in w.letters().iter().zip(&positions) {
                mono.put_column(col, p);
            }
            (mono, Rational::one())
        })
        .collect();
    Ok(TruncatedSeries {
        m: w.m(),
        level,
        terms,
    })
}

/// Linear extension of [`expand_m`].
pub fn expand_m_lin<E: ExponentMonoid>(
    m: usize,
    a: &LinComb<MultiComposition<E>>,
    level: usize,
) -> Result<TruncatedSeries<E>> {
    let mut out = TruncatedSeries::zero(m, level);
    for (w, c) in a.iter() {
        out = out.add(&expand_m(w, level)?.scale(c))?;
    }
    Ok(out)
}

fn check_level(level: usize) -> Result<()> {
    if level == 0 {
        return Err(Error::TruncationTooSmall { level, needed: 1 });
    }
    Ok(())
}

/// `F_c` as a sum over `i₁ ≤ ⋯ ≤ i_{|c|}` with `i_k < i_{k+1}` whenever
/// `k ∈ Des(c)`, of `∏ x_{g_c(j), i_j}`.
pub fn expand_f(c: &NatComposition, level: usize) -> Result<TruncatedSeries<Nat>> {
    check_level(level)?;
    if c.is_empty() {
        return Ok(TruncatedSeries::one(c.m(), level));
    }
    let g = c.letter_rows()?;
    let des = c.des()?;
    let mut out = LinComb::zero();
    let mut idx = Vec::with_capacity(g.len());
    descent_sequences(&g, &des, level, &mut idx, &mut out);
    Ok(TruncatedSeries {
        m: c.m(),
        level,
        terms: out,
    })
}

fn descent_sequences(
    g: &[usize],
    des: &BTreeSet<usize>,
    level: usize,
    idx: &mut Vec<usize>,
    out: &mut LinComb<SeriesMonomial<Nat>>,
) {
    let k = idx.len();
    if k == g.len() {
        let mut mono = SeriesMonomial::one();
        for (&row, &pos) in g.iter().zip(idx.iter()) {
            mono.mul_var(row, pos, 1);
        }
        out.add_term(mono, Rational::one());
        return;
    }
    let lo = match idx.last() {
        None => 1,
        Some(&prev) if des.contains(&k) => prev + 1,
        Some(&prev) => prev,
    };
    for i in lo..=level {
        idx.push(i);
        descent_sequences(g, des, level, idx, out);
        idx.pop();
    }
}

/// `F_c` from the letters of the word of `c`: positions weakly increase
/// inside each column and strictly increase from one column to the next.
pub fn expand_f_columnwise(c: &NatComposition, level: usize) -> Result<TruncatedSeries<Nat>> {
    check_level(level)?;
    let columns: Vec<Vec<usize>> = c
        .columns()
        .iter()
        .map(|col| {
            col.exps()
                .iter()
                .enumerate()
                .flat_map(|(row, &a)| std::iter::repeat_n(row + 1, a as usize))
                .collect()
        })
        .collect();
    let mut out = LinComb::zero();
    assign_columns(&columns, 0, 1, level, SeriesMonomial::one(), &mut out);
    Ok(TruncatedSeries {
        m: c.m(),
        level,
        terms: out,
    })
}

fn assign_columns(
    columns: &[Vec<usize>],
    col: usize,
    min_pos: usize,
    level: usize,
    mono: SeriesMonomial<Nat>,
    out: &mut LinComb<SeriesMonomial<Nat>>,
) {
    if col == columns.len() {
        out.add_term(mono, Rational::one());
        return;
    }
    // weakly increasing positions for the letters of this column
    fn letters(
        rows: &[usize],
        min_pos: usize,
        level: usize,
        mono: SeriesMonomial<Nat>,
        done: &mut dyn FnMut(usize, SeriesMonomial<Nat>),
    ) {
        match rows.split_first() {
            None => done(min_pos, mono),
            Some((&row, rest)) => {
                for p in min_pos..=level {
                    let mut next = mono.clone();
                    next.mul_var(row, p, 1);
                    letters(rest, p, level, next, done);
                }
            }
        }
    }
    letters(&columns[col], min_pos, level, mono, &mut |last, m| {
        assign_columns(columns, col + 1, last + 1, level, m, out);
    });
}

/// Checks `M_{w₁} M_{w₂} = Σ_w c_w M_w` for `w₁ ∗ w₂ = Σ c_w w`, exactly, in
/// the series truncated at `level ≥ ℓ(w₁) + ℓ(w₂)`.
pub fn verify_product<E: ExponentMonoid>(
    w1: &MultiComposition<E>,
    w2: &MultiComposition<E>,
    level: usize,
) -> Result<bool> {
    let needed = w1.len() + w2.len();
    if level < needed {
        return Err(Error::TruncationTooSmall { level, needed });
    }
    let lhs = expand_m(w1, level)?.mul(&expand_m(w2, level)?)?;
    let product = w1.as_word().qshuffle(w2.as_word())?;
    let mut rhs = TruncatedSeries::zero(w1.m(), level);
    for (w, c) in product.iter() {
        rhs = rhs.add(&expand_word(w, level)?.scale(c))?;
    }
    Ok(lhs == rhs)
}

/// Writes `c*x[i,j]^e*… + …`.
impl<E: ExponentMonoid> fmt::Display for TruncatedSeries<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms, |w, k| write!(w, "{k}"))
    }
}
