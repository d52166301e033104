//! Hopf structure on the quasi-shuffle algebra: deconcatenation coproduct,
//! counit and the closed-form antipode
//!
//! ```text
//! S(a) = (-1)^{ℓ(a)} Σ_{L ⊨ ℓ(a)} L ∘ aʳ
//! ```
//!
//! together with checkers for the bialgebra and Hopf axioms.

use num_traits::{One, Zero};

use crate::algebra::{LinComb, Rational};
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::exponents::{ExponentMonoid, ExponentVector};
use crate::quasi_shuffle::{qshuffle_lin, TensorWord};

/// An element of `QS(A) ⊗ QS(A)`.
pub type TensorPair<E> = LinComb<(TensorWord<E>, TensorWord<E>)>;

/// An element of `QS(A)^{⊗3}`, used for coassociativity.
pub type TensorTriple<E> = LinComb<(TensorWord<E>, TensorWord<E>, TensorWord<E>)>;

/// `Δ(a) = Σ_{i=0}^{n} (a₁⋯a_i) ⊗ (a_{i+1}⋯a_n)`.
pub fn coproduct<E: ExponentMonoid>(a: &TensorWord<E>) -> TensorPair<E> {
    (0..=a.len())
        .map(|i| ((a.slice(0, i), a.slice(i, a.len())), Rational::one()))
        .collect()
}

pub fn coproduct_lin<E: ExponentMonoid>(a: &LinComb<TensorWord<E>>) -> TensorPair<E> {
    a.map_linear(coproduct)
}

/// `ε(a) = 1` if `a` is the empty word, else `0`.
pub fn counit<E: ExponentMonoid>(a: &TensorWord<E>) -> Rational {
    if a.is_unit() {
        Rational::one()
    } else {
        Rational::zero()
    }
}

pub fn counit_lin<E: ExponentMonoid>(a: &LinComb<TensorWord<E>>) -> Rational {
    a.iter().fold(Rational::zero(), |acc, (w, c)| acc + counit(w) * c)
}

pub fn reversal<E: ExponentMonoid>(a: &TensorWord<E>) -> TensorWord<E> {
    a.reversal()
}

/// Cuts `a` into consecutive blocks of sizes `L` and multiplies the letters
/// of each block.
pub fn l_compose<E: ExponentMonoid>(l: &Composition, a: &TensorWord<E>) -> Result<TensorWord<E>> {
    if l.total() != a.len() {
        return Err(Error::CompositionLength {
            parts: l.total(),
            len: a.len(),
        });
    }
    let mut letters = Vec::with_capacity(l.len());
    let mut start = 0;
    for &part in l.parts() {
        let block = &a.letters()[start..start + part];
        let merged = block[1..]
            .iter()
            .fold(block[0].clone(), |acc: ExponentVector<E>, x| acc.mul(x));
        letters.push(merged);
        start += part;
    }
    TensorWord::new(a.m(), letters)
}

/// Closed-form antipode.
pub fn antipode<E: ExponentMonoid>(a: &TensorWord<E>) -> LinComb<TensorWord<E>> {
    let n = a.len();
    if n == 0 {
        return LinComb::basis(a.clone());
    }
    let sign = if n.is_multiple_of(2) { Rational::one() } else { -Rational::one() };
    let rev = a.reversal();
    Composition::all(n)
        .iter()
        .map(|l| (l_compose(l, &rev).expect("composition of ℓ(a)"), sign.clone()))
        .collect()
}

pub fn antipode_lin<E: ExponentMonoid>(a: &LinComb<TensorWord<E>>) -> LinComb<TensorWord<E>> {
    a.map_linear(antipode)
}

/// Componentwise product on the tensor square:
/// `(x₁⊗x₂) ∗ (y₁⊗y₂) = (x₁∗y₁) ⊗ (x₂∗y₂)`.
pub fn tensor_qshuffle<E: ExponentMonoid>(x: &TensorPair<E>, y: &TensorPair<E>) -> Result<TensorPair<E>> {
    let mut out = LinComb::zero();
    for ((x1, x2), cx) in x.iter() {
        for ((y1, y2), cy) in y.iter() {
            let scale = cx * cy;
            let left = x1.qshuffle(y1)?;
            let right = x2.qshuffle(y2)?;
            for (l, cl) in left.iter() {
                let cl = cl * &scale;
                for (r, cr) in right.iter() {
                    out.add_term((l.clone(), r.clone()), &cl * cr);
                }
            }
        }
    }
    Ok(out)
}

/// Checks `Δ(a) ∗ Δ(b) = Δ(a ∗ b)`.
pub fn check_bialgebra<E: ExponentMonoid>(a: &TensorWord<E>, b: &TensorWord<E>) -> Result<bool> {
    let lhs = tensor_qshuffle(&coproduct(a), &coproduct(b))?;
    let rhs = coproduct_lin(&a.qshuffle(b)?);
    Ok(lhs == rhs)
}

/// Left convolution `Σ S(a₍₁₎) ∗ a₍₂₎`.
pub fn left_convolution<E: ExponentMonoid>(a: &TensorWord<E>) -> LinComb<TensorWord<E>> {
    coproduct(a).map_linear(|(x, y)| {
        qshuffle_lin(&antipode(x), &LinComb::basis(y.clone())).expect("same alphabet")
    })
}

/// Right convolution `Σ a₍₁₎ ∗ S(a₍₂₎)`.
pub fn right_convolution<E: ExponentMonoid>(a: &TensorWord<E>) -> LinComb<TensorWord<E>> {
    coproduct(a).map_linear(|(x, y)| {
        qshuffle_lin(&LinComb::basis(x.clone()), &antipode(y)).expect("same alphabet")
    })
}

/// Checks both convolution identities `S ⋆ id = ε·1 = id ⋆ S` on `a`.
pub fn check_antipode<E: ExponentMonoid>(a: &TensorWord<E>) -> bool {
    let unit = LinComb::term(TensorWord::unit(a.m()), counit(a));
    left_convolution(a) == unit && right_convolution(a) == unit
}

/// Checks `(Δ⊗id)Δ(a) = (id⊗Δ)Δ(a)`.
pub fn check_coassociativity<E: ExponentMonoid>(a: &TensorWord<E>) -> bool {
    let delta = coproduct(a);
    let left: TensorTriple<E> = delta.map_linear(|(x, y)| {
        coproduct(x).map_keys(|(x1, x2)| (x1.clone(), x2.clone(), y.clone()))
    });
    let right: TensorTriple<E> = delta.map_linear(|(x, y)| {
        coproduct(y).map_keys(|(y1, y2)| (x.clone(), y1.clone(), y2.clone()))
    });
    left == right
}

/// Checks `(ε⊗id)Δ(a) = a = (id⊗ε)Δ(a)`.
pub fn check_counit<E: ExponentMonoid>(a: &TensorWord<E>) -> bool {
    let delta = coproduct(a);
    let left = delta.map_linear(|(x, y)| LinComb::term(y.clone(), counit(x)));
    let right = delta.map_linear(|(x, y)| LinComb::term(x.clone(), counit(y)));
    let id = LinComb::basis(a.clone());
    left == id && right == id
}
