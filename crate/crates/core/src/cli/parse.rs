//! Element literals for the command line.
//!
//! ```text
//! element := '0' | term (('+' | '-') term)*
//! term    := ['-'] [coef '*'] ('M' | 'F') matrix
//! coef    := int | int '/' int
//! ```
//!
//! Rota-Baxter terms replace `('M' | 'F') matrix` by `vector '|' (vector,…)`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{LinComb, Rational};
use crate::bases::Basis;
use crate::compositions::{parse_matrix, MultiComposition};
use crate::error::{Error, Result};
use crate::exponents::ExponentMonoid;

/// A parsed element, split by the basis each term was written in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element<E: ExponentMonoid> {
    pub m_part: LinComb<MultiComposition<E>>,
    pub f_part: LinComb<MultiComposition<E>>,
}

impl<E: ExponentMonoid> Element<E> {
    /// True if there is at least one term and every term was written in `F`.
    pub fn only_f(&self) -> bool {
        self.m_part.is_zero() && !self.f_part.is_zero()
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.as_bytes().get(self.pos).copied()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.s.len()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            position: self.pos,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| &self.s[start..self.pos])
    }

    /// Optional sign, optional `coef '*'`.
    fn sign_and_coeff(&mut self, first: bool) -> Result<Rational> {
        self.skip_ws();
        let negative = match self.peek() {
            Some(b'+') if !first => {
                self.pos += 1;
                false
            }
            Some(b'-') => {
                self.pos += 1;
                true
            }
            _ if first => false,
            _ => return Err(self.err("expected `+` or `-` between terms")),
        };
        self.skip_ws();
        let mut coeff = Rational::one();
        if let Some(num) = self.digits() {
            let num: BigInt = num.parse().expect("digits");
            let mut den = BigInt::one();
            if self.peek() == Some(b'/') {
                self.pos += 1;
                let d = self.digits().ok_or_else(|| self.err("expected denominator"))?;
                den = d.parse().expect("digits");
                if den.is_zero() {
                    return Err(self.err("zero denominator"));
                }
            }
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return Err(self.err("expected `*` after coefficient"));
            }
            self.pos += 1;
            self.skip_ws();
            coeff = Rational::new(num, den);
        }
        Ok(if negative { -coeff } else { coeff })
    }
}

fn is_zero_literal(s: &str) -> bool {
    s.trim() == "0"
}

/// Parses an element over the exponent monoid `E` with `m` rows.
pub fn parse_element<E: ExponentMonoid>(s: &str, m: usize) -> Result<Element<E>> {
    let mut out = Element {
        m_part: LinComb::zero(),
        f_part: LinComb::zero(),
    };
    if is_zero_literal(s) {
        return Ok(out);
    }
    let mut cur = Cursor { s, pos: 0 };
    if cur.at_end() {
        return Err(cur.err("empty element"));
    }
    let mut first = true;
    while !cur.at_end() {
        let coeff = cur.sign_and_coeff(first)?;
        first = false;
        let basis = match cur.peek() {
            Some(b'M') => Basis::M,
            Some(b'F') => Basis::F,
            _ => return Err(cur.err("expected basis `M` or `F`")),
        };
        cur.pos += 1;
        let start = cur.pos;
        let (rows, used) = parse_matrix::<E>(&s[start..], start)?;
        if rows.len() != m {
            return Err(Error::Parse {
                position: start,
                message: format!("matrix has {} rows but m = {m}", rows.len()),
            });
        }
        let comp = MultiComposition::from_rows(&rows)?;
        cur.pos = start + used;
        match basis {
            Basis::M => out.m_part.add_term(comp, coeff),
            Basis::F => out.f_part.add_term(comp, coeff),
        }
    }
    Ok(out)
}

/// Parses a combination of `head | (tail)` keys, each of which must have
/// `m` slots per vector.
pub fn parse_word_element<K>(s: &str, m: usize, key_m: impl Fn(&K) -> usize) -> Result<LinComb<K>>
where
    K: Ord + Clone + FromStr<Err = Error>,
{
    if is_zero_literal(s) {
        return Ok(LinComb::zero());
    }
    let mut cur = Cursor { s, pos: 0 };
    if cur.at_end() {
        return Err(cur.err("empty element"));
    }
    let mut out = LinComb::zero();
    let mut first = true;
    while !cur.at_end() {
        let coeff = cur.sign_and_coeff(first)?;
        first = false;
        let start = cur.pos;
        let bar = s[start..].find('|').ok_or_else(|| cur.err("expected `head | (tail)`"))?;
        let close = s[start + bar..]
            .find(')')
            .ok_or_else(|| cur.err("unterminated tail"))?;
        let end = start + bar + close + 1;
        let key: K = s[start..end].parse().map_err(|e| match e {
            Error::Parse { position, message } => Error::Parse {
                position: start + position,
                message,
            },
            other => other,
        })?;
        if key_m(&key) != m {
            return Err(Error::Parse {
                position: start,
                message: format!("vectors have {} slots but m = {m}", key_m(&key)),
            });
        }
        out.add_term(key, coeff);
        cur.pos = end;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use crate::exponents::{ExtNat, Nat};
    use crate::rota_baxter::RBWord;

    #[test]
    fn single_term() {
        let e = parse_element::<Nat>("M[[1,0],[0,2]]", 2).unwrap();
        assert_eq!(e.m_part.len(), 1);
        assert_eq!(e.m_part.coeff(&"[[1,0],[0,2]]".parse().unwrap()), int(1));
        assert!(e.f_part.is_zero());
    }

    #[test]
    fn mixed_terms() {
        let e = parse_element::<Nat>("3/2*F[[1],[2]] - M[[1],[1]]", 2).unwrap();
        assert_eq!(e.f_part.coeff(&"[[1],[2]]".parse().unwrap()), rat(3, 2));
        assert_eq!(e.m_part.coeff(&"[[1],[1]]".parse().unwrap()), int(-1));
        let neg = parse_element::<Nat>("-2*M[[1]]", 1).unwrap();
        assert_eq!(neg.m_part.coeff(&"[[1]]".parse().unwrap()), int(-2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            parse_element::<Nat>("M[[0],[0]]", 2),
            Err(Error::ZeroColumn { column: 1 })
        );
        assert!(parse_element::<Nat>("M[[e],[1]]", 2).is_err());
        assert!(parse_element::<ExtNat>("M[[e],[1]]", 2).is_ok());
        assert!(parse_element::<Nat>("M[[1],[1]]", 3).is_err());
        assert!(parse_element::<Nat>("M[[1],[1]] M[[1],[1]]", 2).is_err());
        assert!(parse_element::<Nat>("1/0*M[[1],[1]]", 2).is_err());
        assert!(parse_element::<Nat>("", 2).is_err());
        assert!(parse_element::<Nat>("X[[1]]", 1).is_err());
    }

    #[test]
    fn empty_word_and_zero() {
        let e = parse_element::<Nat>("M[[],[]]", 2).unwrap();
        assert!(e.m_part.contains(&MultiComposition::empty(2)));
        assert!(parse_element::<Nat>("0", 2).unwrap().m_part.is_zero());
    }

    #[test]
    fn rb_terms() {
        let e = parse_word_element::<RBWord>("[1,0] | () + 2*[0,0] | ([1,1])", 2, RBWord::m).unwrap();
        assert_eq!(e.len(), 2);
        assert_eq!(e.coeff(&"[0,0] | ([1,1])".parse().unwrap()), int(2));
        assert!(parse_word_element::<RBWord>("[1] | ()", 2, RBWord::m).is_err());
    }
}
