mod common;

use mqsym::algebra::{int, LinComb};
use mqsym::bases::{f_to_m, m_product, MElement};
use mqsym::compositions::NatComposition;
use mqsym::exponents::{ExponentVector, ExtNat};
use mqsym::quasi_shuffle::TensorWord;
use mqsym::realization::{expand_f, expand_m, expand_m_lin, TruncatedSeries};
use mqsym::rota_baxter::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

fn weak_alphabet4() -> Vec<ExponentVector<ExtNat>> {
    ["[e,e]", "[1,e]", "[e,1]", "[2,1]"].iter().map(|s| vector(s)).collect()
}

fn random_key(rng: &mut ChaCha8Rng, max_tail: usize) -> SQSymWord {
    let alphabet = weak_alphabet4();
    let pick = |rng: &mut ChaCha8Rng| alphabet[rng.gen_range(0..alphabet.len())].clone();
    let head = pick(rng);
    let tail = (0..rng.gen_range(0..=max_tail)).map(|_| pick(rng)).collect();
    SQSymWord::new(head, TensorWord::new(2, tail).unwrap()).unwrap()
}

fn random_rb_key(rng: &mut ChaCha8Rng) -> RBWord {
    let v = |rng: &mut ChaCha8Rng| ExponentVector::new(vec![rng.gen_range(0..3), rng.gen_range(0..3)]).unwrap();
    let head = v(rng);
    let tail = (0..rng.gen_range(0..=2)).map(|_| v(rng)).collect();
    RBWord::new(head, TensorWord::new(2, tail).unwrap()).unwrap()
}

fn series_of(a: &LinComb<SQSymWord>, level: usize) -> TruncatedSeries<ExtNat> {
    let mut out = TruncatedSeries::zero(2, level);
    for (w, c) in a.iter() {
        out = out.add(&w.realize(level).unwrap().scale(c)).unwrap();
    }
    out
}

proptest! {
    #[test]
    fn f_and_m_series_are_quasisymmetric(seed: u64, m in 1usize..3) {
        let c = random_nat_comp(&mut ChaCha8Rng::seed_from_u64(seed), m, 3);
        prop_assert!(expand_f(&c, 4).unwrap().is_multi_quasisymmetric());
        let sq = expand_m(&c, 4).unwrap();
        prop_assert!(sq.is_multi_quasisymmetric());
    }

    #[test]
    fn product_of_f_series(i in 0usize..1000, j in 0usize..1000) {
        let pool: Vec<NatComposition> = (1..=2).flat_map(|n| NatComposition::enumerate(2, n)).collect();
        let (a, b) = (&pool[i % pool.len()], &pool[j % pool.len()]);
        let n = a.weight() + b.weight();
        let lhs = expand_f(a, n).unwrap().mul(&expand_f(b, n).unwrap()).unwrap();
        let prod = m_product(&f_to_m(a), &f_to_m(b)).unwrap();
        prop_assert_eq!(lhs, expand_m_lin(2, prod.terms(), n).unwrap());
    }

    #[test]
    fn diamond_is_commutative_and_associative(s: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let (a, b, c) = (random_rb_key(&mut rng), random_rb_key(&mut rng), random_rb_key(&mut rng));
        let ab = diamond(&a, &b).unwrap();
        prop_assert_eq!(&ab, &diamond(&b, &a).unwrap());
        let left = diamond_lin(&ab, &LinComb::basis(c.clone())).unwrap();
        let right = diamond_lin(&LinComb::basis(a.clone()), &diamond(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(diamond(&a, &RBWord::unit(2)).unwrap(), LinComb::basis(a));
    }

    #[test]
    fn sqsym_product_laws(s: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let (a, b, c) = (random_key(&mut rng, 2), random_key(&mut rng, 2), random_key(&mut rng, 1));
        let ab = sqsym_product(&a, &b).unwrap();
        prop_assert_eq!(&ab, &sqsym_product(&b, &a).unwrap());
        let left = sqsym_product_lin(&ab, &LinComb::basis(c.clone())).unwrap();
        let right = sqsym_product_lin(&LinComb::basis(a.clone()), &sqsym_product(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(iso_f_inverse(&iso_f(&a)), a);
    }

    #[test]
    fn sqsym_hopf_axioms(s: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let (a, b) = (random_key(&mut rng, 2), random_key(&mut rng, 1));
        prop_assert!(check_sqsym_antipode(&a).unwrap());
        prop_assert!(check_sqsym_bialgebra(&a, &b).unwrap());
        let delta = sqsym_coproduct(&a);
        let left: LinComb<SQSymWord> = delta.map_linear(|(x, y)| LinComb::term(y.clone(), sqsym_counit(x)));
        prop_assert_eq!(left, LinComb::basis(a.clone()));
    }

    #[test]
    fn rb_identity_random(s: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let x: LinComb<RBWord> = [(random_rb_key(&mut rng), int(2)), (random_rb_key(&mut rng), int(-1))].into_iter().collect();
        let y = LinComb::basis(random_rb_key(&mut rng));
        prop_assert!(check_rb_identity(&x, &y).unwrap());
    }
}

#[test]
fn operator_intertwines_on_tails_up_to_three() {
    let alphabet = weak_alphabet4();
    for head in &alphabet {
        for tail in all_words(2, &alphabet, 3) {
            let a = SQSymWord::new(head.clone(), tail).unwrap();
            assert_eq!(iso_f(&sqsym_operator_word(&a)), rb_operator_word(&iso_f(&a)), "at {a}");
        }
    }
}

#[test]
fn sqsym_product_matches_series() {
    let alphabet = weak_alphabet4();
    let mut keys = Vec::new();
    for head in &alphabet {
        for tail in all_words(2, &alphabet[..2], 2) {
            keys.push(SQSymWord::new(head.clone(), tail).unwrap());
        }
    }
    for a in &keys {
        for b in keys.iter().filter(|b| a.tail().len() + b.tail().len() <= 3) {
            let lhs = a.realize(5).unwrap().mul(&b.realize(5).unwrap()).unwrap();
            let rhs = series_of(&sqsym_product(a, b).unwrap(), 5);
            assert_eq!(lhs, rhs, "at {a}, {b}");
        }
    }
}

#[test]
fn operator_realization_example() {
    let p = sqsym_operator(&LinComb::basis("[1,e] | ()".parse().unwrap()));
    let series = series_of(&p, 5);
    assert_eq!(series.terms().len(), 5);
    assert!(series.to_string().starts_with("x[1,0]^e*x[1,1]*x[2,0]^e*x[2,1]^e"));
}

#[test]
fn sqsym_identity_realizes_head_only() {
    let one = SQSymWord::identity(2).realize(3).unwrap();
    assert_eq!(one.to_string(), "x[1,0]^e*x[2,0]^e");
    let w: SQSymWord = "[2,1] | ([1,e])".parse().unwrap();
    assert_eq!(one.mul(&w.realize(3).unwrap()).unwrap(), w.realize(3).unwrap());
}

#[test]
fn m_series_of_one_is_constant() {
    let s = expand_m_lin(2, MElement::<ExtNat>::one(2).terms(), 3).unwrap();
    assert_eq!(s, TruncatedSeries::one(2, 3));
}
