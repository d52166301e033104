//! The free commutative Rota-Baxter algebra `Ш(Y) = k[Y] ⊗ Ш⁺(k[Y])` of
//! weight 1 on `Y = {y₁,…,y_m}`, and its weak multi-quasisymmetric model.
//!
//! A basis key of `Ш(Y)` is a head monomial `w₀ ∈ k[Y]` and a tail
//! `w₁ ⊗ ⋯ ⊗ w_n` of monomials, all written as exponent vectors. The
//! weak model uses words over `[m]^{ℙ∪{ε}}`; `θ` (slotwise `ε ↦ 0`) carries
//! one onto the other.

use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use num_traits::{One, Zero};

use crate::algebra::{LinComb, Rational};
use crate::error::{Error, Result};
use crate::exponents::{ExponentMonoid, ExponentVector, ExtNat, Nat};
use crate::hopf;
use crate::quasi_shuffle::TensorWord;
use crate::realization::{expand_word, TruncatedSeries};

/// A basis key `w₀ ⊗ (w₁ ⊗ ⋯ ⊗ w_n)` of `Ш(Y)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RBWord {
    head: ExponentVector<Nat>,
    tail: TensorWord<Nat>,
}

impl RBWord {
    pub fn new(head: ExponentVector<Nat>, tail: TensorWord<Nat>) -> Result<Self> {
        check_m(head.m(), tail.m())?;
        Ok(Self { head, tail })
    }

    /// `1 ⊗ ∅`, the identity of `⋄`.
    pub fn unit(m: usize) -> Self {
        Self {
            head: ExponentVector::zero(m),
            tail: TensorWord::unit(m),
        }
    }

    /// `w₀ ⊗ ∅`.
    pub fn monomial(head: ExponentVector<Nat>) -> Self {
        let m = head.m();
        Self {
            head,
            tail: TensorWord::unit(m),
        }
    }

    pub fn m(&self) -> usize {
        self.head.m()
    }

    pub fn head(&self) -> &ExponentVector<Nat> {
        &self.head
    }

    pub fn tail(&self) -> &TensorWord<Nat> {
        &self.tail
    }
}

fn check_m(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `(u₀ ⊗ 𝐮) ⋄ (v₀ ⊗ 𝐯) = u₀v₀ ⊗ (𝐮 ∗ 𝐯)`.
pub fn diamond(a: &RBWord, b: &RBWord) -> Result<LinComb<RBWord>> {
    let head = a.head.product(&b.head)?;
    let tails = a.tail.qshuffle(&b.tail)?;
    Ok(tails.map_keys(|t| RBWord {
        head: head.clone(),
        tail: t.clone(),
    }))
}

pub fn diamond_lin(a: &LinComb<RBWord>, b: &LinComb<RBWord>) -> Result<LinComb<RBWord>> {
    a.try_bilinear(b, diamond)
}

/// `P(w₀ ⊗ 𝐰) = 1 ⊗ (w₀ ⊗ 𝐰)`.
pub fn rb_operator_word(a: &RBWord) -> RBWord {
    RBWord {
        head: ExponentVector::zero(a.m()),
        tail: a.tail.prepend(a.head.clone()).expect("head and tail share m"),
    }
}

pub fn rb_operator(a: &LinComb<RBWord>) -> LinComb<RBWord> {
    a.map_keys(rb_operator_word)
}

/// Checks `P(x)⋄P(y) = P(x⋄P(y)) + P(P(x)⋄y) + P(x⋄y)`.
pub fn check_rb_identity(x: &LinComb<RBWord>, y: &LinComb<RBWord>) -> Result<bool> {
    let px = rb_operator(x);
    let py = rb_operator(y);
    let lhs = diamond_lin(&px, &py)?;
    let rhs = rb_operator(
        &diamond_lin(x, &py)?
            .add(&diamond_lin(&px, y)?)
            .add(&diamond_lin(x, y)?),
    );
    Ok(lhs == rhs)
}

/// A basis key `M̄_{(w,𝐰)} = x_{w,0} M_𝐰` of the scalar extension of
/// weak multi-quasisymmetric functions. Every slot of the head and of every
/// tail letter lies in `ℙ ∪ {ε}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SQSymWord {
    head: ExponentVector<ExtNat>,
    tail: TensorWord<ExtNat>,
}

fn check_weak_letter(v: &ExponentVector<ExtNat>) -> Result<()> {
    match v.first_zero_slot() {
        Some(i) => Err(Error::ZeroSlot { slot: i + 1 }),
        None => Ok(()),
    }
}

impl SQSymWord {
    pub fn new(head: ExponentVector<ExtNat>, tail: TensorWord<ExtNat>) -> Result<Self> {
        check_m(head.m(), tail.m())?;
        check_weak_letter(&head)?;
        for letter in tail.letters() {
            check_weak_letter(letter)?;
        }
        Ok(Self { head, tail })
    }

    /// `M̄_{([ε,…,ε])}`, the identity.
    pub fn identity(m: usize) -> Self {
        Self {
            head: ExponentVector::constant(m, ExtNat::Eps),
            tail: TensorWord::unit(m),
        }
    }

    pub fn m(&self) -> usize {
        self.head.m()
    }

    pub fn head(&self) -> &ExponentVector<ExtNat> {
        &self.head
    }

    pub fn tail(&self) -> &TensorWord<ExtNat> {
        &self.tail
    }

    /// The series `x_{w,0} · M_𝐰` truncated at `level`.
    pub fn realize(&self, level: usize) -> Result<TruncatedSeries<ExtNat>> {
        TruncatedSeries::head(&self.head, level).mul(&expand_word(&self.tail, level)?)
    }
}

/// `M̄_{(u₀,𝐮)} M̄_{(v₀,𝐯)} = M̄_{(u₀·v₀, 𝐮 ∗ 𝐯)}`.
pub fn sqsym_product(a: &SQSymWord, b: &SQSymWord) -> Result<LinComb<SQSymWord>> {
    let head = a.head.product(&b.head)?;
    let tails = a.tail.qshuffle(&b.tail)?;
    Ok(tails.map_keys(|t| SQSymWord {
        head: head.clone(),
        tail: t.clone(),
    }))
}

pub fn sqsym_product_lin(a: &LinComb<SQSymWord>, b: &LinComb<SQSymWord>) -> Result<LinComb<SQSymWord>> {
    a.try_bilinear(b, sqsym_product)
}

/// `M̄_{(w,𝐰)} ↦ M̄_{([ε,…,ε], w, 𝐰)}`.
pub fn sqsym_operator_word(a: &SQSymWord) -> SQSymWord {
    SQSymWord {
        head: ExponentVector::constant(a.m(), ExtNat::Eps),
        tail: a.tail.prepend(a.head.clone()).expect("head and tail share m"),
    }
}

pub fn sqsym_operator(a: &LinComb<SQSymWord>) -> LinComb<SQSymWord> {
    a.map_keys(sqsym_operator_word)
}

/// `f(M̄_{(w₀,…,w_n)}) = θ(w₀) ⊗ ⋯ ⊗ θ(w_n)`.
pub fn iso_f(a: &SQSymWord) -> RBWord {
    let letters = a.tail.letters().iter().map(|l| l.theta()).collect();
    RBWord {
        head: a.head.theta(),
        tail: TensorWord::new(a.m(), letters).expect("θ preserves m"),
    }
}

/// Inverse of [`iso_f`], slotwise `0 ↦ ε`.
pub fn iso_f_inverse(a: &RBWord) -> SQSymWord {
    let letters = a.tail.letters().iter().map(|l| l.theta_inverse()).collect();
    SQSymWord {
        head: a.head.theta_inverse(),
        tail: TensorWord::new(a.m(), letters).expect("θ⁻¹ preserves m"),
    }
}

pub fn iso_f_lin(a: &LinComb<SQSymWord>) -> LinComb<RBWord> {
    a.map_keys(iso_f)
}

/// Checks `f(a·b) = f(a) ⋄ f(b)` and `f(P(a)) = P(f(a))`.
pub fn check_iso(a: &SQSymWord, b: &SQSymWord) -> Result<bool> {
    let product = iso_f_lin(&sqsym_product(a, b)?) == diamond(&iso_f(a), &iso_f(b))?;
    let operator = iso_f(&sqsym_operator_word(a)) == rb_operator_word(&iso_f(a));
    Ok(product && operator)
}

/// `Δ(y^a) = Σ_{b ≤ a} Π binom(aᵢ,bᵢ) y^b ⊗ y^{a-b}` on `k[Y]`.
fn head_coproduct(a: &ExponentVector<Nat>) -> LinComb<(ExponentVector<Nat>, ExponentVector<Nat>)> {
    let mut out = vec![(Vec::new(), Vec::new(), Rational::one())];
    for &ai in a.exps() {
        out = out
            .into_iter()
            .flat_map(|(l, r, c)| {
                (0..=ai).map(move |bi| {
                    let mut l = l.clone();
                    let mut r = r.clone();
                    l.push(bi);
                    r.push(ai - bi);
                    let weight = Rational::from_integer(binomial(ai, bi).into());
                    (l, r, c.clone() * weight)
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|(l, r, c)| {
            let l = ExponentVector::new(l).expect("m > 0");
            let r = ExponentVector::new(r).expect("m > 0");
            ((l, r), c)
        })
        .collect()
}

/// Tensor-product coproduct: the head is transported from `k[Y]` through
/// `θ`, the tail uses deconcatenation.
pub fn sqsym_coproduct(a: &SQSymWord) -> LinComb<(SQSymWord, SQSymWord)> {
    let heads = head_coproduct(&a.head.theta());
    let tails = hopf::coproduct(&a.tail);
    heads.bilinear(&tails, |(h1, h2), (t1, t2)| {
        LinComb::basis((
            SQSymWord {
                head: h1.theta_inverse(),
                tail: t1.clone(),
            },
            SQSymWord {
                head: h2.theta_inverse(),
                tail: t2.clone(),
            },
        ))
    })
}

pub fn sqsym_counit(a: &SQSymWord) -> Rational {
    if a.head.theta().is_zero() {
        hopf::counit(&a.tail)
    } else {
        Rational::zero()
    }
}

/// `S(y^a ⊗ 𝐰) = (-1)^{|a|} y^a ⊗ S(𝐰)`.
pub fn sqsym_antipode(a: &SQSymWord) -> LinComb<SQSymWord> {
    let sign = if a.head.theta().degree().is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    };
    hopf::antipode(&a.tail)
        .map_keys(|t| SQSymWord {
            head: a.head.clone(),
            tail: t.clone(),
        })
        .scale(&sign)
}

pub fn sqsym_coproduct_lin(a: &LinComb<SQSymWord>) -> LinComb<(SQSymWord, SQSymWord)> {
    a.map_linear(sqsym_coproduct)
}

pub fn sqsym_antipode_lin(a: &LinComb<SQSymWord>) -> LinComb<SQSymWord> {
    a.map_linear(sqsym_antipode)
}

/// Checks `Σ S(a₍₁₎)a₍₂₎ = ε(a)·1 = Σ a₍₁₎S(a₍₂₎)`.
pub fn check_sqsym_antipode(a: &SQSymWord) -> Result<bool> {
    let unit = LinComb::term(SQSymWord::identity(a.m()), sqsym_counit(a));
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((x, y), c) in sqsym_coproduct(a).iter() {
        let sx = sqsym_antipode(x);
        let sy = sqsym_antipode(y);
        left.add_scaled(&sqsym_product_lin(&sx, &LinComb::basis(y.clone()))?, c);
        right.add_scaled(&sqsym_product_lin(&LinComb::basis(x.clone()), &sy)?, c);
    }
    Ok(left == unit && right == unit)
}

/// Checks `Δ(a·b) = Δ(a)·Δ(b)`.
pub fn check_sqsym_bialgebra(a: &SQSymWord, b: &SQSymWord) -> Result<bool> {
    let lhs = sqsym_coproduct_lin(&sqsym_product(a, b)?);
    let rhs = sqsym_coproduct(a).try_bilinear(&sqsym_coproduct(b), |(x1, x2), (y1, y2)| {
        let l = sqsym_product(x1, y1)?;
        let r = sqsym_product(x2, y2)?;
        Ok(l.bilinear(&r, |p, q| LinComb::basis((p.clone(), q.clone()))))
    })?;
    Ok(lhs == rhs)
}

fn write_word<E: ExponentMonoid>(
    f: &mut fmt::Formatter<'_>,
    head: &ExponentVector<E>,
    tail: &TensorWord<E>,
) -> fmt::Result {
    write!(f, "{head} | {tail}")
}

impl fmt::Display for RBWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.head, &self.tail)
    }
}

impl fmt::Display for SQSymWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.head, &self.tail)
    }
}

fn parse_word<E: ExponentMonoid>(s: &str) -> Result<(ExponentVector<E>, TensorWord<E>)> {
    let (head, tail) = s.split_once('|').ok_or_else(|| Error::Parse {
        position: 0,
        message: "expected `head | (tail)`".into(),
    })?;
    let head: ExponentVector<E> = head.trim().parse()?;
    let tail = TensorWord::parse(head.m(), tail)?;
    Ok((head, tail))
}

impl FromStr for RBWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = parse_word(s)?;
        Self::new(head, tail)
    }
}

impl FromStr for SQSymWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, tail) = parse_word(s)?;
        Self::new(head, tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn rb(s: &str) -> RBWord {
        s.parse().unwrap()
    }

    fn sq(s: &str) -> SQSymWord {
        s.parse().unwrap()
    }

    #[test]
    fn diamond_examples() {
        let w = rb("[2,1] | ([1,0],[0,3])");
        assert_eq!(diamond(&RBWord::unit(2), &w).unwrap(), LinComb::basis(w.clone()));
        assert_eq!(
            diamond(&rb("[1,0] | ()"), &rb("[0,1] | ()")).unwrap(),
            LinComb::basis(rb("[1,1] | ()"))
        );
        let y1 = rb("[0] | ([1])");
        let got = diamond(&y1, &y1).unwrap();
        let want: LinComb<RBWord> = [(rb("[0] | ([1],[1])"), int(2)), (rb("[0] | ([2])"), int(1))]
            .into_iter()
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn operator_examples() {
        let y1 = LinComb::basis(rb("[1,0] | ()"));
        assert_eq!(rb_operator(&y1), LinComb::basis(rb("[0,0] | ([1,0])")));
        assert_eq!(
            rb_operator(&rb_operator(&y1)),
            LinComb::basis(rb("[0,0] | ([0,0],[1,0])"))
        );
        assert!(rb_operator(&LinComb::zero()).is_zero());
    }

    #[test]
    fn rb_identity_examples() {
        let y1 = LinComb::basis(rb("[1] | ()"));
        let p = rb_operator(&y1);
        let lhs = diamond_lin(&p, &p).unwrap();
        let want: LinComb<RBWord> = [(rb("[0] | ([1],[1])"), int(2)), (rb("[0] | ([2])"), int(1))]
            .into_iter()
            .collect();
        assert_eq!(lhs, want);
        assert!(check_rb_identity(&y1, &y1).unwrap());
        assert!(check_rb_identity(&LinComb::zero(), &y1).unwrap());
    }

    #[test]
    fn sqsym_identity_and_heads() {
        let w = sq("[1,e] | ([e,2],[3,e])");
        let one = SQSymWord::identity(2);
        assert_eq!(sqsym_product(&one, &w).unwrap(), LinComb::basis(w.clone()));
        assert_eq!(sqsym_product(&w, &one).unwrap(), LinComb::basis(w.clone()));
        let got = sqsym_product(&sq("[1,e] | ()"), &sq("[e,2] | ()")).unwrap();
        assert_eq!(got, LinComb::basis(sq("[1,2] | ()")));
        assert!("[1,0] | ()".parse::<SQSymWord>().is_err());
        assert!("[1,e] | ([0,e])".parse::<SQSymWord>().is_err());
    }

    #[test]
    fn sqsym_operator_examples() {
        let a = LinComb::basis(sq("[1,e] | ()"));
        let pa = sqsym_operator(&a);
        assert_eq!(pa, LinComb::basis(sq("[e,e] | ([1,e])")));
        assert_eq!(
            sqsym_operator(&pa),
            LinComb::basis(sq("[e,e] | ([e,e],[1,e])"))
        );
        let series = sq("[e,e] | ([1,e])").realize(3).unwrap();
        assert_eq!(
            series.to_string(),
            "x[1,0]^e*x[1,1]*x[2,0]^e*x[2,1]^e + x[1,0]^e*x[1,2]*x[2,0]^e*x[2,2]^e + x[1,0]^e*x[1,3]*x[2,0]^e*x[2,3]^e"
        );
    }

    #[test]
    fn iso_examples() {
        let a = sq("[1,e] | ([e,e],[2,1])");
        assert_eq!(iso_f(&a), rb("[1,0] | ([0,0],[2,1])"));
        assert_eq!(iso_f(&SQSymWord::identity(3)), RBWord::unit(3));
        assert_eq!(iso_f(&sq("[2,3] | ()")), rb("[2,3] | ()"));
        assert_eq!(iso_f_inverse(&iso_f(&a)), a);
        assert!(check_iso(&a, &sq("[e,1] | ([1,e])")).unwrap());
        assert!(check_iso(&SQSymWord::identity(2), &SQSymWord::identity(2)).unwrap());
    }

    #[test]
    fn sqsym_hopf_small() {
        let a = sq("[2,e] | ([1,e])");
        let b = sq("[1,1] | ([e,e])");
        assert!(check_sqsym_antipode(&a).unwrap());
        assert!(check_sqsym_bialgebra(&a, &b).unwrap());
        assert_eq!(sqsym_counit(&SQSymWord::identity(2)), int(1));
    }
}
