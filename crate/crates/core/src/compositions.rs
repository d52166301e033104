//! Multi-compositions, their descent sets and letter maps, and the
//! column-breaking refinement order.
//!
//! A multi-composition is an `m × k` matrix whose columns are nonzero
//! exponent vectors. Reading the columns of an `ℕ`-composition `c` left to
//! right, and each column top to bottom with row `ℓ` repeated `a_{ℓ,i}`
//! times, gives a word in the rows; `g_c(j)` is the row of the `j`-th letter
//! and `Des(c)` the set of positions where one column ends and the next
//! begins. The pair `(g_c, Des(c))` determines `c`, and every superset of
//! `Des(c)` inside `[|c|-1]` is the descent set of exactly one refinement
//! of `c` with the same letter map.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exponents::{ExponentMonoid, ExponentVector, Nat};
use crate::quasi_shuffle::TensorWord;

/// A tensor word all of whose letters are nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiComposition<E> {
    word: TensorWord<E>,
}

impl<E: ExponentMonoid> PartialOrd for MultiComposition<E> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Length first, then columns lexicographically.
impl<E: ExponentMonoid> Ord for MultiComposition<E> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word.cmp(&other.word)
    }
}

/// Multi-composition with natural-number entries.
pub type NatComposition = MultiComposition<Nat>;

impl<E: ExponentMonoid> MultiComposition<E> {
    pub fn new(m: usize, columns: Vec<ExponentVector<E>>) -> Result<Self> {
        Self::from_word(TensorWord::new(m, columns)?)
    }

    /// The trivial composition `∅` over `m` rows.
    pub fn empty(m: usize) -> Self {
        Self {
            word: TensorWord::unit(m),
        }
    }

    pub fn from_word(word: TensorWord<E>) -> Result<Self> {
        if let Some(i) = word.letters().iter().position(|l| l.is_zero()) {
            return Err(Error::ZeroColumn { column: i + 1 });
        }
        Ok(Self { word })
    }

    /// Builds from row-major entries `rows[i][j] = a_{i+1,j+1}`.
    pub fn from_rows(rows: &[Vec<E>]) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let k = rows[0].len();
        if let Some(r) = rows.iter().find(|r| r.len() != k) {
            return Err(Error::Parse {
                position: 0,
                message: format!("ragged matrix: rows of length {k} and {}", r.len()),
            });
        }
        let columns = (0..k)
            .map(|j| ExponentVector::new(rows.iter().map(|r| r[j]).collect()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, columns)
    }

    pub fn m(&self) -> usize {
        self.word.m()
    }

    /// Number of columns `ℓ(c)`.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn columns(&self) -> &[ExponentVector<E>] {
        self.word.letters()
    }

    pub fn as_word(&self) -> &TensorWord<E> {
        &self.word
    }

    pub fn into_word(self) -> TensorWord<E> {
        self.word
    }

    /// Entry `a_{row,col}`, both 1-based.
    pub fn entry(&self, row: usize, col: usize) -> E {
        self.columns()[col - 1].get(row - 1)
    }

    /// Row-major entries.
    pub fn rows(&self) -> Vec<Vec<E>> {
        (0..self.m())
            .map(|i| self.columns().iter().map(|c| c.get(i)).collect())
            .collect()
    }
}

impl NatComposition {
    /// `|c_i|`, the sum of column `i` (1-based).
    pub fn col_weight(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(self.columns()[i - 1].degree())
    }

    /// `|c|`, the sum of all entries.
    pub fn weight(&self) -> usize {
        self.columns().iter().map(|c| c.degree()).sum()
    }

    /// Partial sums of the first `k-1` column weights.
    pub fn des(&self) -> Result<BTreeSet<usize>> {
        if self.is_empty() {
            return Err(Error::TrivialComposition);
        }
        let mut acc = 0;
        let cols = self.columns();
        Ok(cols[..cols.len() - 1]
            .iter()
            .map(|c| {
                acc += c.degree();
                acc
            })
            .collect())
    }

    /// The letter map `g_c : [|c|] → [m]` as the sequence `(g(1), …, g(|c|))`
    /// of 1-based row indices.
    pub fn letter_rows(&self) -> Result<Vec<usize>> {
        if self.is_empty() {
            return Err(Error::TrivialComposition);
        }
        let mut g = Vec::with_capacity(self.weight());
        for col in self.columns() {
            for (row, &a) in col.exps().iter().enumerate() {
                g.extend(std::iter::repeat_n(row + 1, a as usize));
            }
        }
        Ok(g)
    }

    /// Rebuilds the composition with letter map `g` and descent set `des`.
    ///
    /// Positions `1..=g.len()` are cut after each element of `des`; entry
    /// `(ℓ, i)` counts the letters of block `i` lying in row `ℓ`. Fails if
    /// `g` is non-monotone inside a block or `des ⊄ [|g|-1]`.
    pub fn from_letter_map(m: usize, g: &[usize], des: &BTreeSet<usize>) -> Result<Self> {
        let n = g.len();
        if n == 0 {
            return Err(Error::TrivialComposition);
        }
        if let Some(&bad) = des.iter().find(|&&z| z == 0 || z >= n) {
            return Err(Error::InvalidRefinement(format!("{bad} is not in [1, {}]", n - 1)));
        }
        let mut columns = Vec::with_capacity(des.len() + 1);
        let mut counts = vec![0 as Nat; m];
        for (pos, &row) in g.iter().enumerate() {
            if row == 0 || row > m {
                return Err(Error::InvalidRefinement(format!("row {row} outside [1, {m}]")));
            }
            if pos > 0 && !des.contains(&pos) && g[pos - 1] > row {
                return Err(Error::InvalidRefinement(format!(
                    "letter map decreases inside a block at position {}",
                    pos + 1
                )));
            }
            counts[row - 1] += 1;
            if des.contains(&(pos + 1)) || pos + 1 == n {
                columns.push(ExponentVector::new(std::mem::replace(&mut counts, vec![0; m]))?);
            }
        }
        Self::new(m, columns)
    }

    /// The unique `c'` with `Des(c') = z` and `g_{c'} = g_c`.
    /// Requires `Des(c) ⊆ z ⊆ [|c|-1]`.
    pub fn refine(&self, z: &BTreeSet<usize>) -> Result<Self> {
        let des = self.des()?;
        let n = self.weight();
        if !des.is_subset(z) {
            return Err(Error::InvalidRefinement(format!(
                "{z:?} does not contain Des(c) = {des:?}"
            )));
        }
        if z.iter().any(|&s| s == 0 || s >= n) {
            return Err(Error::InvalidRefinement(format!(
                "{z:?} is not a subset of [1, {}]",
                n.saturating_sub(1)
            )));
        }
        Self::from_letter_map(self.m(), &self.letter_rows()?, z)
    }

    /// All `c'` with `c ⊴ c'`, including `c`, ordered by the subset
    /// `Z \ Des(c)` read as a bitmask over the free positions.
    pub fn refinements(&self) -> Result<Vec<Self>> {
        let des = self.des()?;
        let g = self.letter_rows()?;
        let free: Vec<usize> = (1..g.len()).filter(|s| !des.contains(s)).collect();
        assert!(free.len() < usize::BITS as usize, "too many free positions");
        (0..1usize << free.len())
            .map(|mask| {
                let mut z = des.clone();
                z.extend(
                    free.iter()
                        .enumerate()
                        .filter(|(bit, _)| mask >> bit & 1 == 1)
                        .map(|(_, &s)| s),
                );
                Self::from_letter_map(self.m(), &g, &z)
            })
            .collect()
    }

    /// Reflexive refinement order `c ⊴ c'`.
    pub fn leq(&self, other: &Self) -> bool {
        self.compare_des(other, false)
    }

    /// Strict refinement order `c ⪯ c'`, `c ≠ c'`.
    pub fn lt(&self, other: &Self) -> bool {
        self.compare_des(other, true)
    }

    fn compare_des(&self, other: &Self, strict: bool) -> bool {
        if self.m() != other.m() || self.weight() != other.weight() {
            return false;
        }
        if self.is_empty() || other.is_empty() {
            return !strict && self.is_empty() && other.is_empty();
        }
        let (Ok(d1), Ok(d2)) = (self.des(), other.des()) else {
            return false;
        };
        let contained = if strict {
            d1.is_subset(&d2) && d1.len() < d2.len()
        } else {
            d1.is_subset(&d2)
        };
        contained && self.letter_rows().ok() == other.letter_rows().ok()
    }

    /// Every `[m]`-composition of weight `n`, in canonical order.
    pub fn enumerate(m: usize, n: usize) -> Vec<Self> {
        if n == 0 {
            return vec![Self::empty(m)];
        }
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fill_columns(m, n, &mut prefix, &mut out);
        out.sort();
        out
    }
}

fn fill_columns(m: usize, remaining: usize, prefix: &mut Vec<ExponentVector<Nat>>, out: &mut Vec<NatComposition>) {
    if remaining == 0 {
        out.push(MultiComposition {
            word: TensorWord::from_parts_unchecked(m, prefix.clone()),
        });
        return;
    }
    for w in 1..=remaining {
        for col in weak_compositions(m, w) {
            prefix.push(ExponentVector::new(col).expect("m > 0"));
            fill_columns(m, remaining - w, prefix, out);
            prefix.pop();
        }
    }
}

/// All length-`m` vectors of naturals summing to `total`.
pub fn weak_compositions(m: usize, total: usize) -> Vec<Vec<Nat>> {
    if m == 1 {
        return vec![vec![total as Nat]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(m - 1, total - first) {
            rest.insert(0, first as Nat);
            out.push(rest);
        }
    }
    out
}

/// Row-major matrix text `[[a11,…,a1k],…,[am1,…,amk]]`; `∅` prints as `m`
/// empty rows.
impl<E: ExponentMonoid> fmt::Display for MultiComposition<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<E: ExponentMonoid> fmt::Debug for MultiComposition<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<E: ExponentMonoid> FromStr for MultiComposition<E> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = parse_matrix::<E>(s, 0)?.0;
        Self::from_rows(&rows)
    }
}

/// Parses a matrix `[[..],..,[..]]` starting at byte offset `offset` of the
/// enclosing input (used for error positions). Returns rows and the number
/// of bytes consumed.
pub(crate) fn parse_matrix<E: ExponentMonoid>(s: &str, offset: usize) -> Result<(Vec<Vec<E>>, usize)> {
    let bytes = s.as_bytes();
    let err = |pos: usize, message: String| Error::Parse {
        position: offset + pos,
        message,
    };
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if bytes.get(pos) != Some(&b'[') {
        return Err(err(pos, "expected `[` opening a matrix".into()));
    }
    pos += 1;
    let mut rows = Vec::new();
    loop {
        skip_ws(&mut pos);
        if bytes.get(pos) != Some(&b'[') {
            return Err(err(pos, "expected `[` opening a row".into()));
        }
        pos += 1;
        let mut row = Vec::new();
        skip_ws(&mut pos);
        if bytes.get(pos) == Some(&b']') {
            pos += 1;
        } else {
            loop {
                skip_ws(&mut pos);
                let start = pos;
                while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric()) {
                    pos += 1;
                }
                let tok = &s[start..pos];
                let e = E::parse_token(tok).ok_or_else(|| {
                    err(start, format!("invalid {} exponent `{tok}`", E::NAME))
                })?;
                row.push(e);
                skip_ws(&mut pos);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b']') => {
                        pos += 1;
                        break;
                    }
                    _ => return Err(err(pos, "expected `,` or `]` in row".into())),
                }
            }
        }
        rows.push(row);
        skip_ws(&mut pos);
        match bytes.get(pos) {
            Some(b',') => pos += 1,
            Some(b']') => {
                pos += 1;
                break;
            }
            _ => return Err(err(pos, "expected `,` or `]` after row".into())),
        }
    }
    if let Some(r) = rows.iter().find(|r| r.len() != rows[0].len()) {
        return Err(err(
            0,
            format!("ragged matrix: rows of length {} and {}", rows[0].len(), r.len()),
        ));
    }
    Ok((rows, pos))
}

/// A composition of an integer: a sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::NonPositivePart);
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// All compositions of `n` in lexicographic order of their parts.
    /// For `n = 0` this is the single empty composition.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 0 {
                out.push(Composition { parts: prefix.clone() });
                return;
            }
            for first in 1..=n {
                prefix.push(first);
                go(n - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::new(), &mut out);
        out
    }
}
