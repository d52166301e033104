//! Monomial and fundamental bases of multi-quasisymmetric functions and the
//! exact change of basis between them.
//!
//! `F_c = Σ_{c ⊴ c'} M_{c'}`. The interval above `c` is a Boolean lattice on
//! the free positions `[|c|-1] \ Des(c)`, so the inverse is
//! `M_w = Σ_{w ⊴ w'} (-1)^{ℓ(w')-ℓ(w)} F_{w'}`.

use std::fmt;

use num_traits::One;

use crate::algebra::{write_terms, LinComb, Rational};
use crate::compositions::{MultiComposition, NatComposition};
use crate::error::Result;
use crate::exponents::{ExponentMonoid, Nat};
use crate::hopf;
use crate::quasi_shuffle::TensorWord;

/// Basis tag for printed and parsed elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basis {
    M,
    F,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "M",
            Basis::F => "F",
        })
    }
}

/// An element written in the monomial basis `M_w`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MElement<E: ExponentMonoid = Nat>(pub LinComb<MultiComposition<E>>);

/// An element written in the fundamental basis `F_c`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FElement(pub LinComb<NatComposition>);

impl<E: ExponentMonoid> MElement<E> {
    pub fn basis(w: MultiComposition<E>) -> Self {
        Self(LinComb::basis(w))
    }

    /// `M_∅ = 1`.
    pub fn one(m: usize) -> Self {
        Self::basis(MultiComposition::empty(m))
    }

    pub fn terms(&self) -> &LinComb<MultiComposition<E>> {
        &self.0
    }

    /// Product `M_u M_v = M_{u ∗ v}`, extended bilinearly.
    pub fn product(&self, other: &Self) -> Result<Self> {
        m_product(self, other)
    }
}

impl FElement {
    pub fn basis(c: NatComposition) -> Self {
        Self(LinComb::basis(c))
    }

    pub fn terms(&self) -> &LinComb<NatComposition> {
        &self.0
    }
}

fn words_to_compositions<E: ExponentMonoid>(
    words: LinComb<TensorWord<E>>,
) -> LinComb<MultiComposition<E>> {
    words
        .into_iter()
        .map(|(w, c)| {
            let comp = MultiComposition::from_word(w)
                .expect("nonzero letters are closed under the letter product");
            (comp, c)
        })
        .collect()
}

/// `F_c` in the monomial basis.
pub fn f_to_m(c: &NatComposition) -> MElement {
    if c.is_empty() {
        return MElement::basis(c.clone());
    }
    MElement(
        c.refinements()
            .expect("nonempty composition")
            .into_iter()
            .map(|r| (r, Rational::one()))
            .collect(),
    )
}

pub fn f_to_m_lin(a: &FElement) -> MElement {
    MElement(a.0.map_linear(|c| f_to_m(c).0))
}

/// `M_w` in the fundamental basis, by inclusion–exclusion over the descent
/// supersets of `w`.
pub fn m_to_f(w: &NatComposition) -> FElement {
    if w.is_empty() {
        return FElement::basis(w.clone());
    }
    let base = w.len();
    FElement(
        w.refinements()
            .expect("nonempty composition")
            .into_iter()
            .map(|r| {
                let sign = if (r.len() - base).is_multiple_of(2) {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                (r, sign)
            })
            .collect(),
    )
}

pub fn m_to_f_lin(a: &MElement) -> FElement {
    FElement(a.0.map_linear(|w| m_to_f(w).0))
}

/// Product in the monomial basis: the quasi-shuffle of indices.
pub fn m_product<E: ExponentMonoid>(a: &MElement<E>, b: &MElement<E>) -> Result<MElement<E>> {
    let out = a.0.try_bilinear(&b.0, |u, v| {
        Ok(words_to_compositions(u.as_word().qshuffle(v.as_word())?))
    })?;
    Ok(MElement(out))
}

/// Product in the fundamental basis, through the monomial basis.
pub fn f_product(a: &FElement, b: &FElement) -> Result<FElement> {
    let prod = m_product(&f_to_m_lin(a), &f_to_m_lin(b))?;
    Ok(m_to_f_lin(&prod))
}

/// `Δ(M_w) = Σ_{w = w₁w₂} M_{w₁} ⊗ M_{w₂}`.
pub fn m_coproduct<E: ExponentMonoid>(
    a: &MElement<E>,
) -> LinComb<(MultiComposition<E>, MultiComposition<E>)> {
    a.0.map_linear(|w| {
        hopf::coproduct(w.as_word()).map_keys(|(x, y)| {
            (
                MultiComposition::from_word(x.clone()).expect("prefix of a composition"),
                MultiComposition::from_word(y.clone()).expect("suffix of a composition"),
            )
        })
    })
}

/// `S(M_w) = (-1)^{ℓ(w)} Σ_{L ⊨ ℓ(w)} M_{L∘wʳ}`.
pub fn m_antipode<E: ExponentMonoid>(a: &MElement<E>) -> MElement<E> {
    MElement(a.0.map_linear(|w| words_to_compositions(hopf::antipode(w.as_word()))))
}

/// Writes `c*M[matrix] + …`.
pub fn write_basis_terms<E: ExponentMonoid>(
    f: &mut impl fmt::Write,
    basis: Basis,
    terms: &LinComb<MultiComposition<E>>,
) -> fmt::Result {
    write_terms(f, terms, |w, k| write!(w, "{basis}{k}"))
}

impl<E: ExponentMonoid> fmt::Display for MElement<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_basis_terms(f, Basis::M, &self.0)
    }
}

impl fmt::Display for FElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_basis_terms(f, Basis::F, &self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn nc(s: &str) -> NatComposition {
        s.parse().unwrap()
    }

    #[test]
    fn f_expansion_of_column() {
        let got = f_to_m(&nc("[[1],[2]]"));
        assert_eq!(
            got.to_string(),
            "M[[1],[2]] + M[[1,0],[0,2]] + M[[1,0],[1,1]] + M[[1,0,0],[0,1,1]]"
        );
    }

    #[test]
    fn top_of_poset_is_fixed() {
        let c = nc("[[1,0,0],[0,1,1]]");
        assert_eq!(f_to_m(&c), MElement::basis(c.clone()));
        assert_eq!(m_to_f(&c), FElement::basis(c));
    }

    #[test]
    fn classical_two() {
        let two = nc("[[2]]");
        let one_one = nc("[[1,1]]");
        let f = f_to_m(&two);
        assert_eq!(f.0.coeff(&two), int(1));
        assert_eq!(f.0.coeff(&one_one), int(1));
        assert_eq!(f.0.len(), 2);
        let m = m_to_f(&two);
        assert_eq!(m.0.coeff(&two), int(1));
        assert_eq!(m.0.coeff(&one_one), int(-1));
    }

    #[test]
    fn round_trip() {
        let w = nc("[[1,0],[1,2]]");
        assert_eq!(f_to_m_lin(&m_to_f(&w)), MElement::basis(w));
    }

    #[test]
    fn unit_products() {
        let c = nc("[[1,0],[0,2]]");
        let one = MElement::one(2);
        assert_eq!(m_product(&one, &MElement::basis(c.clone())).unwrap(), MElement::basis(c.clone()));
        let f_one = FElement::basis(NatComposition::empty(2));
        assert_eq!(f_product(&f_one, &FElement::basis(c.clone())).unwrap(), FElement::basis(c));
    }

    #[test]
    fn length_one_product() {
        let p = m_product(&MElement::basis(nc("[[1],[0]]")), &MElement::basis(nc("[[0],[1]]"))).unwrap();
        assert_eq!(p.to_string(), "M[[1],[1]] + M[[0,1],[1,0]] + M[[1,0],[0,1]]");
    }

    #[test]
    fn empty_is_its_own_image() {
        let e = NatComposition::empty(3);
        assert_eq!(f_to_m(&e), MElement::one(3));
        assert_eq!(m_to_f(&e), FElement::basis(e));
    }
}
