//! Exponent monoids and exponent vectors.
//!
//! Two monoids are supported: the naturals `ℕ` (as `u32`) and the weak
//! monoid `ℕ ∪ {ε}` ([`ExtNat`]), where `ε` is an idempotent absorbed by every
//! positive integer. An [`ExponentVector`] of length `m` is the formal monomial
//! `1^{e₁}⋯m^{e_m}`; vectors multiply by slotwise monoid addition.
//!
//! Both monoids are additively finite: every element has finitely many
//! decompositions `e = e₁ + e₂`. Nothing here enumerates such decompositions.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Natural-number exponents.
pub type Nat = u32;

/// A commutative monoid of exponents whose nonzero elements form a
/// subsemigroup. Implemented by the element type itself.
pub trait ExponentMonoid:
    Copy + Eq + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Short name used in diagnostics (`nat` or `weak`).
    const NAME: &'static str;

    fn zero() -> Self;

    fn add(self, other: Self) -> Self;

    fn is_zero(self) -> bool {
        self == Self::zero()
    }

    /// Parses a single exponent token.
    fn parse_token(token: &str) -> Option<Self>;
}

impl ExponentMonoid for Nat {
    const NAME: &'static str = "nat";

    fn zero() -> Self {
        0
    }

    fn add(self, other: Self) -> Self {
        self.checked_add(other).expect("exponent overflow")
    }

    fn parse_token(token: &str) -> Option<Self> {
        if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        token.parse().ok()
    }
}

/// An element of the weak monoid `ℕ ∪ {ε}`.
///
/// `ε` is nonzero. Addition: `0+ε = ε+0 = ε+ε = ε`, `n+ε = ε+n = n` for
/// `n ≥ 1`, and ordinary addition on naturals. The derived order places `ε`
/// before every natural.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtNat {
    Eps,
    Nat(Nat),
}

impl ExtNat {
    /// `ε ↦ 0`, `n ↦ n`.
    pub fn theta(self) -> Nat {
        match self {
            ExtNat::Eps => 0,
            ExtNat::Nat(n) => n,
        }
    }

    pub fn is_eps(self) -> bool {
        self == ExtNat::Eps
    }
}

impl From<Nat> for ExtNat {
    fn from(n: Nat) -> Self {
        ExtNat::Nat(n)
    }
}

impl ExponentMonoid for ExtNat {
    const NAME: &'static str = "weak";

    fn zero() -> Self {
        ExtNat::Nat(0)
    }

    fn add(self, other: Self) -> Self {
        match (self, other) {
            (ExtNat::Eps, ExtNat::Eps) => ExtNat::Eps,
            (ExtNat::Eps, ExtNat::Nat(0)) | (ExtNat::Nat(0), ExtNat::Eps) => ExtNat::Eps,
            (ExtNat::Eps, n @ ExtNat::Nat(_)) | (n @ ExtNat::Nat(_), ExtNat::Eps) => n,
            (ExtNat::Nat(a), ExtNat::Nat(b)) => ExtNat::Nat(a.add(b)),
        }
    }

    fn parse_token(token: &str) -> Option<Self> {
        if token == "e" {
            Some(ExtNat::Eps)
        } else {
            Nat::parse_token(token).map(ExtNat::Nat)
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Eps => f.write_str("e"),
            ExtNat::Nat(n) => write!(f, "{n}"),
        }
    }
}

/// A length-`m` vector of exponents, stored densely.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector<E> {
    exps: Vec<E>,
}

impl<E: ExponentMonoid> ExponentVector<E> {
    pub fn new(exps: Vec<E>) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self { exps })
    }

    /// The identity vector `[0,…,0]`.
    pub fn zero(m: usize) -> Self {
        assert!(m > 0, "alphabet size must be positive");
        Self { exps: vec![E::zero(); m] }
    }

    /// The vector with `value` in every slot.
    pub fn constant(m: usize, value: E) -> Self {
        assert!(m > 0, "alphabet size must be positive");
        Self { exps: vec![value; m] }
    }

    pub fn m(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[E] {
        &self.exps
    }

    /// Slot `i` (0-based).
    pub fn get(&self, i: usize) -> E {
        self.exps[i]
    }

    /// True iff every slot is the monoid zero.
    pub fn is_zero(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    /// Formal monomial product: slotwise monoid addition.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.m() != other.m() {
            return Err(Error::DimensionMismatch {
                expected: self.m(),
                found: other.m(),
            });
        }
        Ok(self.mul(other))
    }

    /// Product of vectors already known to share `m`. Panics otherwise.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.m(), other.m(), "exponent vectors of different length");
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.add(*b))
                .collect(),
        }
    }
}

impl ExponentVector<ExtNat> {
    /// Slotwise `ε ↦ 0`.
    pub fn theta(&self) -> ExponentVector<Nat> {
        ExponentVector {
            exps: self.exps.iter().map(|e| e.theta()).collect(),
        }
    }

    /// True if every slot lies in `ℙ ∪ {ε}`.
    pub fn is_weak_letter(&self) -> bool {
        self.exps.iter().all(|e| !e.is_zero())
    }

    /// Index of the first slot equal to 0, if any.
    pub fn first_zero_slot(&self) -> Option<usize> {
        self.exps.iter().position(|e| e.is_zero())
    }
}

impl ExponentVector<Nat> {
    /// Inclusion `ℕ → ℕ ∪ {ε}`, `n ↦ n`.
    pub fn embed(&self) -> ExponentVector<ExtNat> {
        ExponentVector {
            exps: self.exps.iter().map(|&n| ExtNat::Nat(n)).collect(),
        }
    }

    /// Inverse of `θ` on weak letters: `0 ↦ ε`, `n ↦ n`.
    pub fn theta_inverse(&self) -> ExponentVector<ExtNat> {
        ExponentVector {
            exps: self
                .exps
                .iter()
                .map(|&n| if n == 0 { ExtNat::Eps } else { ExtNat::Nat(n) })
                .collect(),
        }
    }

    /// Total degree `Σ eᵢ`.
    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }
}

impl<E: ExponentMonoid> fmt::Display for ExponentVector<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, e) in self.exps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("]")
    }
}

impl<E: ExponentMonoid> fmt::Debug for ExponentVector<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<E: ExponentMonoid> FromStr for ExponentVector<E> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse {
                position: 0,
                message: format!("expected `[...]`, found `{s}`"),
            })?;
        let exps = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                E::parse_token(tok).ok_or_else(|| Error::Parse {
                    position: 0,
                    message: format!("invalid {} exponent `{tok}`", E::NAME),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(exps)
    }
}
