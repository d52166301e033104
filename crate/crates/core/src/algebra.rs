//! Exact rational scalars and sparse linear combinations.
//!
//! A [`LinComb`] is an element of the free `Q`-module on an ordered set of
//! basis keys. Zero coefficients are removed by every operation, so two
//! combinations are equal exactly when their term maps are equal.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number, always kept in lowest terms.
pub type Rational = num_rational::BigRational;

/// Builds the rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// True if `q` has a positive denominator coprime to its numerator.
pub fn is_normalized(q: &Rational) -> bool {
    q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
}

/// A finite formal sum `Σ c_k · k` with nonzero rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord> LinComb<K> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    /// The combination `1 · key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `key`, zero when absent.
    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains(&self, key: &K) -> bool {
        self.terms.contains_key(key)
    }

    /// Terms in canonical key order.
    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    /// Adds `coeff · key` in place, dropping the key if it cancels.
    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `scale · other` in place.
    pub fn add_scaled(&mut self, other: &Self, scale: &Rational)
    where
        K: Clone,
    {
        if scale.is_zero() {
            return;
        }
        let unit = scale.is_one();
        for (k, c) in other.iter() {
            let term = if unit { c.clone() } else { c * scale };
            match self.terms.get_mut(k) {
                Some(slot) => {
                    *slot += term;
                    if slot.is_zero() {
                        self.terms.remove(k);
                    }
                }
                None => {
                    self.terms.insert(k.clone(), term);
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self
    where
        K: Clone,
    {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self
    where
        K: Clone,
    {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    pub fn scale(&self, c: &Rational) -> Self
    where
        K: Clone,
    {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn coeff_sum(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    /// Extends `f` linearly: `Σ c_k f(k)`.
    pub fn map_linear<K2: Ord + Clone>(&self, mut f: impl FnMut(&K) -> LinComb<K2>) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Fallible version of [`LinComb::map_linear`].
    pub fn try_map_linear<K2: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&K) -> Result<LinComb<K2>, E>,
    ) -> Result<LinComb<K2>, E> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_scaled(&f(k)?, c);
        }
        Ok(out)
    }

    /// Relabels keys; coefficients of keys that collide are summed.
    pub fn map_keys<K2: Ord>(&self, mut f: impl FnMut(&K) -> K2) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }

    /// Bilinear extension of a product defined on basis keys:
    /// `Σ_{i,j} a_i b_j f(k_i, k_j)`.
    pub fn bilinear<K1: Ord, K2: Ord + Clone>(
        &self,
        other: &LinComb<K1>,
        mut f: impl FnMut(&K, &K1) -> LinComb<K2>,
    ) -> LinComb<K2> {
        let mut out = LinComb::zero();
        for (ka, ca) in self.iter() {
            for (kb, cb) in other.iter() {
                out.add_scaled(&f(ka, kb), &(ca * cb));
            }
        }
        out
    }

    /// Fallible version of [`LinComb::bilinear`].
    pub fn try_bilinear<K1: Ord, K2: Ord + Clone, E>(
        &self,
        other: &LinComb<K1>,
        mut f: impl FnMut(&K, &K1) -> Result<LinComb<K2>, E>,
    ) -> Result<LinComb<K2>, E> {
        let mut out = LinComb::zero();
        for (ka, ca) in self.iter() {
            for (kb, cb) in other.iter() {
                out.add_scaled(&f(ka, kb)?, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// True if every stored coefficient is nonzero and in lowest terms.
    pub fn is_normalized(&self) -> bool {
        self.terms.values().all(|c| !c.is_zero() && is_normalized(c))
    }
}

impl<K: Ord> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

impl<K: Ord> IntoIterator for LinComb<K> {
    type Item = (K, Rational);
    type IntoIter = btree_map::IntoIter<K, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;

    fn add(self, rhs: Self) -> LinComb<K> {
        LinComb::add(self, rhs)
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;

    fn sub(self, rhs: Self) -> LinComb<K> {
        LinComb::sub(self, rhs)
    }
}

impl<K: Ord + Clone> Neg for &LinComb<K> {
    type Output = LinComb<K>;

    fn neg(self) -> LinComb<K> {
        self.scale(&-Rational::one())
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(k, c)| (k, c.to_string())))
            .finish()
    }
}

/// Writes `c₁·k₁ + c₂·k₂ - …` using `key` to render each basis key.
/// Unit coefficients are omitted; the zero combination renders as `0`.
pub fn write_terms<K: Ord>(
    f: &mut impl fmt::Write,
    comb: &LinComb<K>,
    mut key: impl FnMut(&mut dyn fmt::Write, &K) -> fmt::Result,
) -> fmt::Result {
    if comb.is_zero() {
        return f.write_str("0");
    }
    for (i, (k, c)) in comb.iter().enumerate() {
        let magnitude = c.abs();
        match (i == 0, c.is_negative()) {
            (true, false) => {}
            (true, true) => f.write_str("-")?,
            (false, false) => f.write_str(" + ")?,
            (false, true) => f.write_str(" - ")?,
        }
        if !magnitude.is_one() {
            write!(f, "{magnitude}*")?;
        }
        key(f, k)?;
    }
    Ok(())
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self, |w, k| write!(w, "{k}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lc(terms: &[(&'static str, Rational)]) -> LinComb<&'static str> {
        terms.iter().cloned().collect()
    }

    #[test]
    fn cancellation_gives_empty() {
        let a = lc(&[("x", int(1))]);
        let b = lc(&[("x", int(-1))]);
        assert!((&a + &b).is_zero());
    }

    #[test]
    fn disjoint_supports() {
        let s = &lc(&[("x", rat(1, 2))]) + &lc(&[("y", int(1))]);
        assert_eq!(s, lc(&[("x", rat(1, 2)), ("y", int(1))]));
    }

    #[test]
    fn rational_sum() {
        let s = &lc(&[("x", rat(2, 3))]) + &lc(&[("x", rat(1, 3))]);
        assert_eq!(s, lc(&[("x", int(1))]));
    }

    #[test]
    fn scaling() {
        let a = lc(&[("x", int(5))]);
        assert!(a.scale(&int(0)).is_zero());
        assert_eq!(a.scale(&int(1)), a);
        let b = lc(&[("x", int(2)), ("y", int(-3))]);
        assert_eq!(-&b, lc(&[("x", int(-2)), ("y", int(3))]));
    }

    #[test]
    fn bilinear_over_zero_is_zero() {
        let z: LinComb<String> = LinComb::zero();
        let b = LinComb::basis("v".to_string());
        let out = z.bilinear(&b, |x, y| LinComb::basis(format!("{x}{y}")));
        assert!(out.is_zero());
    }

    #[test]
    fn bilinear_concatenation() {
        let a = LinComb::basis("u".to_string());
        let b = LinComb::basis("v".to_string());
        let out = a.bilinear(&b, |x, y| LinComb::basis(format!("{x}{y}")));
        assert_eq!(out, LinComb::basis("uv".to_string()));
    }

    #[test]
    fn display_signs() {
        let a = lc(&[("x", rat(-3, 2)), ("y", int(1)), ("z", int(-1))]);
        assert_eq!(a.to_string(), "-3/2*x + y - z");
        assert_eq!(LinComb::<&str>::zero().to_string(), "0");
    }
}
