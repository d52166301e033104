//! Independent reference implementations and generators shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use mqsym::algebra::{int, LinComb};
use mqsym::compositions::{MultiComposition, NatComposition};
use mqsym::exponents::{ExponentMonoid, ExponentVector, ExtNat, Nat};
use mqsym::quasi_shuffle::TensorWord;
use rand::Rng;

/// Strictly increasing `k`-subsets of `0..n`.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|mask| mask.count_ones() as usize == k)
        .map(|mask| (0..n).filter(|i| mask >> i & 1 == 1).collect())
        .collect()
}

/// Quasi-shuffle by summing over pairs of increasing maps `[p] → [k]`,
/// `[q] → [k]` whose images cover `[k]`.
pub fn surjection_qshuffle<L: Clone + Ord>(a: &[L], b: &[L], dot: impl Fn(&L, &L) -> L) -> BTreeMap<Vec<L>, i64> {
    let (p, q) = (a.len(), b.len());
    let mut out = BTreeMap::new();
    for k in p.max(q)..=p + q {
        for f in subsets(k, p) {
            for g in subsets(k, q) {
                let covered: BTreeSet<usize> = f.iter().chain(&g).copied().collect();
                if covered.len() != k {
                    continue;
                }
                let word: Vec<L> = (0..k)
                    .map(|j| match (f.iter().position(|&x| x == j), g.iter().position(|&x| x == j)) {
                        (Some(i), Some(l)) => dot(&a[i], &b[l]),
                        (Some(i), None) => a[i].clone(),
                        (None, Some(l)) => b[l].clone(),
                        (None, None) => unreachable!(),
                    })
                    .collect();
                *out.entry(word).or_insert(0) += 1;
            }
        }
    }
    out
}

pub fn oracle_qshuffle<E: ExponentMonoid>(a: &TensorWord<E>, b: &TensorWord<E>) -> LinComb<TensorWord<E>> {
    surjection_qshuffle(a.letters(), b.letters(), |x, y| x.mul(y))
        .into_iter()
        .map(|(w, c)| (TensorWord::new(a.m(), w).unwrap(), int(c)))
        .collect()
}

/// Antipode from `Σ S(a₁⋯a_i) ∗ (a_{i+1}⋯a_n) = 0` for `n ≥ 1`.
pub fn recursive_antipode<E: ExponentMonoid>(a: &TensorWord<E>) -> LinComb<TensorWord<E>> {
    let n = a.len();
    if n == 0 {
        return LinComb::basis(a.clone());
    }
    let mut out = LinComb::zero();
    for i in 0..n {
        let head = recursive_antipode(&a.slice(0, i));
        let rest = LinComb::basis(a.slice(i, n));
        let prod = head
            .try_bilinear(&rest, |x, y| x.qshuffle(y))
            .unwrap();
        out = out.sub(&prod);
    }
    out
}

/// Rows of the letters of one column, top to bottom with multiplicity.
fn column_letters(col: &ExponentVector<Nat>) -> Vec<usize> {
    col.exps()
        .iter()
        .enumerate()
        .flat_map(|(r, &a)| std::iter::repeat_n(r, a as usize))
        .collect()
}

fn column_from_letters(m: usize, letters: &[usize]) -> ExponentVector<Nat> {
    let mut v = vec![0; m];
    for &r in letters {
        v[r] += 1;
    }
    ExponentVector::new(v).unwrap()
}

/// All single column breaks of `c`.
pub fn column_breaks(c: &NatComposition) -> Vec<NatComposition> {
    let m = c.m();
    let mut out = Vec::new();
    for (j, col) in c.columns().iter().enumerate() {
        let letters = column_letters(col);
        for t in 1..letters.len() {
            let mut cols = c.columns().to_vec();
            cols.splice(
                j..=j,
                [column_from_letters(m, &letters[..t]), column_from_letters(m, &letters[t..])],
            );
            out.push(MultiComposition::new(m, cols).unwrap());
        }
    }
    out
}

/// Reflexive-transitive closure of column breaking starting at `c`.
pub fn break_closure(c: &NatComposition) -> BTreeSet<NatComposition> {
    let mut seen = BTreeSet::from([c.clone()]);
    let mut queue = VecDeque::from([c.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in column_breaks(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Number of `[m]`-compositions of weight `n`, from the recursion
/// `c_n = Σ_k a_k c_{n-k}` with `a_k` the number of vectors of weight `k`.
pub fn composition_count(m: usize, n: usize) -> u64 {
    let binom = |a: u64, b: u64| (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1));
    let a = |k: usize| binom((k + m - 1) as u64, (m - 1) as u64);
    let mut c = vec![1u64];
    for i in 1..=n {
        c.push((1..=i).map(|k| a(k) * c[i - k]).sum());
    }
    c[n]
}

/// Ordinary compositions of `n`.
pub fn int_compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in int_compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn partial_sums(alpha: &[usize]) -> BTreeSet<usize> {
    let mut s = 0;
    let mut out = BTreeSet::new();
    for &a in &alpha[..alpha.len().saturating_sub(1)] {
        s += a;
        out.insert(s);
    }
    out
}

/// Classical `F_α = Σ_{S(β) ⊇ S(α)} M_β` as a coefficient table.
pub fn classical_f_to_m(n: usize) -> BTreeMap<(Vec<usize>, Vec<usize>), i64> {
    let comps = int_compositions(n);
    let mut out = BTreeMap::new();
    for alpha in &comps {
        for beta in &comps {
            if partial_sums(beta).is_superset(&partial_sums(alpha)) {
                out.insert((alpha.clone(), beta.clone()), 1);
            }
        }
    }
    out
}

/// Classical `M_α = Σ_{S(β) ⊇ S(α)} (-1)^{ℓ(β)-ℓ(α)} F_β`.
pub fn classical_m_to_f(n: usize) -> BTreeMap<(Vec<usize>, Vec<usize>), i64> {
    let comps = int_compositions(n);
    let mut out = BTreeMap::new();
    for alpha in &comps {
        for beta in &comps {
            if partial_sums(beta).is_superset(&partial_sums(alpha)) {
                let sign = if (beta.len() - alpha.len()) % 2 == 0 { 1 } else { -1 };
                out.insert((alpha.clone(), beta.clone()), sign);
            }
        }
    }
    out
}

pub fn one_row(alpha: &[usize]) -> NatComposition {
    MultiComposition::from_rows(&[alpha.iter().map(|&a| a as Nat).collect()]).unwrap()
}

/// All words of length `≤ max_len` over `alphabet`.
pub fn all_words<E: ExponentMonoid>(m: usize, alphabet: &[ExponentVector<E>], max_len: usize) -> Vec<TensorWord<E>> {
    let mut out = vec![TensorWord::unit(m)];
    let mut layer = vec![TensorWord::unit(m)];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |l| {
                    let mut letters = w.letters().to_vec();
                    letters.push(l.clone());
                    TensorWord::new(m, letters).unwrap()
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

pub fn vector<E: ExponentMonoid>(s: &str) -> ExponentVector<E> {
    s.parse().unwrap()
}

pub fn nat_alphabet() -> Vec<ExponentVector<Nat>> {
    ["[1,0]", "[0,1]", "[1,2]"].iter().map(|s| vector(s)).collect()
}

pub fn weak_alphabet() -> Vec<ExponentVector<ExtNat>> {
    ["[e,0]", "[0,1]", "[1,e]"].iter().map(|s| vector(s)).collect()
}

pub fn random_nat_vector(rng: &mut impl Rng, m: usize, max: Nat) -> ExponentVector<Nat> {
    loop {
        let v = ExponentVector::new((0..m).map(|_| rng.gen_range(0..=max)).collect()).unwrap();
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn random_weak_vector(rng: &mut impl Rng, m: usize) -> ExponentVector<ExtNat> {
    loop {
        let exps = (0..m)
            .map(|_| match rng.gen_range(0..4) {
                0 => ExtNat::Nat(0),
                1 => ExtNat::Eps,
                n => ExtNat::Nat(n - 1),
            })
            .collect();
        let v = ExponentVector::new(exps).unwrap();
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn random_nat_comp(rng: &mut impl Rng, m: usize, max_len: usize) -> NatComposition {
    let len = rng.gen_range(0..=max_len);
    MultiComposition::new(m, (0..len).map(|_| random_nat_vector(rng, m, 2)).collect()).unwrap()
}

pub fn random_weak_comp(rng: &mut impl Rng, m: usize, max_len: usize) -> MultiComposition<ExtNat> {
    let len = rng.gen_range(0..=max_len);
    MultiComposition::new(m, (0..len).map(|_| random_weak_vector(rng, m)).collect()).unwrap()
}
