//! Randomised checks of the algebraic substrate. Every block runs at least
//! 200 cases from a fixed seed.

use std::collections::BTreeSet;

use jumploci::artin::{maximal_disconnected_subsets, raag_presentation, Graph};
use jumploci::fpgroup::{direct_product, fox_derivative, magnus_quadratic, pairs, CupStructure, FreeDerivative, Word};
use jumploci::obstruct::isotropy_classify;
use jumploci::polyalg::{rat, smith_normal_form, LinearSubspace, Rat};
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod support;

const CASES: u32 = 256;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        rng_algorithm: proptest::test_runner::RngAlgorithm::ChaCha,
        ..ProptestConfig::default()
    }
}

fn word(ngens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..ngens, prop_oneof![Just(-2), Just(-1), Just(1), Just(2)]), 0..=max_len)
        .prop_map(Word::from_letters)
}

fn ring_word(w: &Word) -> FreeDerivative {
    FreeDerivative::word(w.clone(), 1)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn fox_product_rule(u in word(3, 6), v in word(3, 6), i in 0usize..3) {
        let lhs = fox_derivative(&u.mul(&v), i);
        let rhs = fox_derivative(&u, i).add(&ring_word(&u).mul(&fox_derivative(&v, i)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn fox_fundamental_identity(w in word(3, 8)) {
        let mut sum = FreeDerivative::zero();
        for i in 0..3 {
            let xi_minus_one = ring_word(&Word::generator(i)).sub(&FreeDerivative::one());
            sum = sum.add(&fox_derivative(&w, i).mul(&xi_minus_one));
        }
        prop_assert_eq!(sum, ring_word(&w).sub(&FreeDerivative::one()));
    }

    #[test]
    fn magnus_of_commutator_is_wedge(u in word(4, 6), v in word(4, 6)) {
        let a = u.abelianize(4);
        let b = v.abelianize(4);
        let q = magnus_quadratic(&Word::commutator(&u, &v), 4).unwrap();
        for (k, (p, r)) in pairs(4).into_iter().enumerate() {
            prop_assert_eq!(q[k].clone(), rat(a[p] * b[r] - a[r] * b[p]));
        }
    }

    #[test]
    fn smith_normal_form_is_a_factorisation(
        rows in 1usize..4,
        cols in 1usize..4,
        seed in any::<u64>(),
    ) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let a: Vec<Vec<BigInt>> = (0..rows)
            .map(|_| (0..cols).map(|_| BigInt::from(r.gen_range(-6i64..=6))).collect())
            .collect();
        let s = smith_normal_form(&a, rows, cols);
        let mul = |x: &Vec<Vec<BigInt>>, y: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
            (0..x.len())
                .map(|i| (0..y[0].len()).map(|j| (0..y.len()).map(|k| &x[i][k] * &y[k][j]).sum()).collect())
                .collect()
        };
        let uav = mul(&mul(&s.u, &a), &s.v);
        prop_assert_eq!(&uav, &s.d);
        let f = s.invariant_factors();
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    prop_assert!(s.d[i][j].is_zero());
                }
            }
        }
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn subspace_dimension_formula(seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let n = r.gen_range(1..=5);
        let random_space = |r: &mut ChaCha8Rng| {
            let k = r.gen_range(0..=n);
            let vs = (0..k).map(|_| (0..n).map(|_| rat(r.gen_range(-1..=1))).collect()).collect();
            LinearSubspace::span(n, vs).unwrap()
        };
        let u = random_space(&mut r);
        let v = random_space(&mut r);
        let sum = u.sum(&v).unwrap();
        let meet = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + v.dim());
        prop_assert!(sum.contains(&u).unwrap() && u.contains(&meet).unwrap());
    }

    #[test]
    fn join_is_direct_product(a in 1usize..4, b in 1usize..4, seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let mut random_graph = |n: usize| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|_| r.gen_bool(0.5))
                .collect();
            Graph::new("g", (1..=n).map(|i| format!("v{i}")).collect(), edges).unwrap()
        };
        let g = random_graph(a);
        let h = random_graph(b);
        let joined = raag_presentation(&g.join(&h));
        let product = direct_product(&raag_presentation(&g), &raag_presentation(&h));
        prop_assert_eq!(&joined.generator_names, &product.generator_names);
        let lhs: BTreeSet<Word> = joined.relators.iter().cloned().collect();
        let rhs: BTreeSet<Word> = product.relators.iter().cloned().collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn maximal_disconnected_sets(n in 1usize..8, seed in any::<u64>()) {
        let mut r = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| r.gen_bool(0.5))
            .collect();
        let g = Graph::new("g", (0..n).map(|i| format!("v{i}")).collect(), edges).unwrap();
        let found = maximal_disconnected_subsets(&g).unwrap();
        let masks: Vec<u64> = found.iter().map(|w| w.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
        // oracle straight from the definition
        let all = (1u64 << n) - 1;
        let disconnected = |m: u64| m.count_ones() >= 2 && !g.induced_connected(m);
        let expected: Vec<u64> = (1..=all)
            .filter(|&m| disconnected(m))
            .filter(|&m| !(1..=all).any(|s| s != m && s & m == m && disconnected(s)))
            .collect();
        let got: BTreeSet<u64> = masks.iter().copied().collect();
        prop_assert_eq!(got, expected.into_iter().collect::<BTreeSet<u64>>());
        for (i, &a) in masks.iter().enumerate() {
            for (j, &b) in masks.iter().enumerate() {
                prop_assert!(i == j || a & b != a, "not an antichain");
            }
            for v in 0..n {
                if a >> v & 1 == 0 {
                    prop_assert!(g.induced_connected(a | 1 << v));
                }
            }
        }
    }
}


const SEED: u64 = 0x5eed;

fn run(check: support::Check) {
    match check {
        Ok(n) => assert!(n >= 200, "only {n} cases"),
        Err(e) => panic!("{e}"),
    }
}

#[test]
fn s_polynomials_reduce_to_zero() {
    run(support::s_polynomials(CASES as usize, SEED));
}

#[test]
fn fitting_ideals_ascend() {
    run(support::fitting_chain(CASES as usize, SEED));
}

#[test]
fn tangent_cones_are_homogeneous_and_contain_initial_forms() {
    run(support::tangent_cones(CASES as usize, SEED));
}

#[test]
fn delta_squared_vanishes() {
    run(support::delta_squared(CASES as usize, SEED));
}

#[test]
fn fitting_loci_of_nabla_match_resonance_away_from_zero() {
    run(support::nabla_lemma(CASES as usize, SEED));
}

#[test]
fn isotropy_ignores_choice_of_basis() {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0;
    while checked < CASES {
        let n = r.gen_range(2..=5);
        let c = support::random_cup(&mut r, n);
        let d = r.gen_range(1..=n);
        let vs: Vec<Vec<Rat>> = (0..d).map(|_| (0..n).map(|_| rat(r.gen_range(-2..=2))).collect()).collect();
        let v = LinearSubspace::span(n, vs).unwrap();
        if v.dim() == 0 {
            continue;
        }
        let class = isotropy_classify(&v, &c).unwrap();

        // another basis of the same space: a unipotent mix of the old one
        let mut mixed: Vec<Vec<Rat>> = v.basis().to_vec();
        for i in 1..mixed.len() {
            let f = rat(r.gen_range(-3..=3));
            let prev = mixed[i - 1].clone();
            for (x, y) in mixed[i].iter_mut().zip(&prev) {
                *x += &f * y;
            }
        }
        let v2 = LinearSubspace::span(n, mixed).unwrap();
        assert_eq!(isotropy_classify(&v2, &c).unwrap(), class);

        // an equivalent cup product: relabel H¹ by a permutation and mix
        // the classes
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, r.gen_range(0..=i));
        }
        let ps = pairs(n);
        let moved: Vec<Vec<Rat>> = c
            .relation_classes
            .iter()
            .map(|cls| {
                let mut out = vec![Rat::zero(); ps.len()];
                for (k, &(p, q)) in ps.iter().enumerate() {
                    let (a, b) = (perm[p], perm[q]);
                    let idx = ps.iter().position(|&pq| pq == (a.min(b), a.max(b))).unwrap();
                    out[idx] = if a < b { cls[k].clone() } else { -cls[k].clone() };
                }
                out
            })
            .collect();
        let mut mixed_classes = moved.clone();
        if mixed_classes.len() == 2 {
            let f = rat(r.gen_range(-2..=2));
            for (x, y) in mixed_classes[1].iter_mut().zip(&moved[0]) {
                *x += &f * y;
            }
        }
        let c2 = CupStructure::new(n, mixed_classes).unwrap();
        let moved_v = LinearSubspace::span(
            n,
            v.basis()
                .iter()
                .map(|b| {
                    let mut out = vec![Rat::zero(); n];
                    for (i, x) in b.iter().enumerate() {
                        out[perm[i]] = x.clone();
                    }
                    out
                })
                .collect(),
        )
        .unwrap();
        assert_eq!(isotropy_classify(&moved_v, &c2).unwrap(), class);
        checked += 1;
    }
}
