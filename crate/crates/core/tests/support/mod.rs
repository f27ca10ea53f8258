//! Seeded substrate checks shared by the property tests and the acceptance
//! run. Each returns the number of cases examined or a description of the
//! first failure.

#![allow(dead_code)]

use jumploci::fpgroup::{
    abelianized_alexander_matrix, corpus, corpus_names, cup_structure, fox_derivative, CorpusItem, CupStructure,
    FreeDerivative, GroupPresentation, Word,
};
use jumploci::jumploci::{delta2_matrix, infinitesimal_alexander, infinitesimal_fitting_locus, resonance_ideal};
use jumploci::polyalg::{
    fitting_ideal, groebner_basis, normal_form, rat, Budget, Ideal, Monomial, MonomialOrder, Polynomial, Rat,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<usize, String>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word(r: &mut ChaCha8Rng, ngens: usize, max_len: usize) -> Word {
    let len = r.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| (r.gen_range(0..ngens), [-2, -1, 1, 2][r.gen_range(0..4)])))
}

pub fn small_poly(r: &mut ChaCha8Rng, n: usize, terms: usize, max_deg: u16, no_constant: bool) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for _ in 0..terms {
        let exps: Vec<u16> = (0..n).map(|_| r.gen_range(0..=max_deg)).collect();
        if no_constant && exps.iter().all(|&e| e == 0) {
            continue;
        }
        p.add_term(Monomial::from_exps(&exps), rat(r.gen_range(-3i64..=3)));
    }
    p
}

fn ring_word(w: &Word) -> FreeDerivative {
    FreeDerivative::word(w.clone(), 1)
}

/// Product rule and `w − 1 = Σ (∂w/∂x_i)(x_i − 1)`.
pub fn fox_rules(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    for _ in 0..cases {
        let u = random_word(&mut r, 3, 6);
        let v = random_word(&mut r, 3, 6);
        let mut sum = FreeDerivative::zero();
        for i in 0..3 {
            let lhs = fox_derivative(&u.mul(&v), i);
            let rhs = fox_derivative(&u, i).add(&ring_word(&u).mul(&fox_derivative(&v, i)));
            if lhs != rhs {
                return Err(format!("product rule fails for {u:?}, {v:?}"));
            }
            let xi = ring_word(&Word::generator(i)).sub(&FreeDerivative::one());
            sum = sum.add(&fox_derivative(&u, i).mul(&xi));
        }
        if sum != ring_word(&u).sub(&FreeDerivative::one()) {
            return Err(format!("fundamental identity fails for {u:?}"));
        }
    }
    Ok(cases)
}

/// Every S-polynomial of a computed basis reduces to zero, and so does
/// every input generator.
pub fn s_polynomials(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let order = MonomialOrder::GrevLex;
    for _ in 0..cases {
        let n = r.gen_range(2..=3);
        let k = r.gen_range(1..=3);
        let gens: Vec<Polynomial> = (0..k).map(|_| small_poly(&mut r, n, 3, 2, false)).collect();
        let gb = groebner_basis(&gens, order, Budget::default()).map_err(|e| e.to_string())?;
        if gens.iter().any(|g| !normal_form(g, &gb, order).is_zero()) {
            return Err("a generator is not reduced to zero".into());
        }
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let (mi, ci) = gb[i].leading_term().unwrap();
                let (mj, cj) = gb[j].leading_term().unwrap();
                let l = mi.lcm(mj);
                let s = &gb[i].mul_monomial(&l.div(mi).unwrap(), &(Rat::one() / ci))
                    - &gb[j].mul_monomial(&l.div(mj).unwrap(), &(Rat::one() / cj));
                if !normal_form(&s, &gb, order).is_zero() {
                    return Err("an S-polynomial does not reduce to zero".into());
                }
            }
        }
    }
    Ok(cases)
}

pub fn random_presentation(r: &mut ChaCha8Rng) -> GroupPresentation {
    let s = r.gen_range(2..=3);
    let nrel = r.gen_range(1..=2);
    let rels = (0..nrel)
        .map(|_| {
            let len = r.gen_range(1..=6);
            Word::from_letters((0..len).map(|_| (r.gen_range(0..s), if r.gen_bool(0.5) { 1 } else { -1 })))
        })
        .filter(|w| !w.is_empty())
        .collect();
    GroupPresentation::new("random", (0..s).map(|i| format!("x{i}")).collect(), rels).unwrap()
}

/// `F_k ⊆ F_{k+1}` for Alexander matrices of random presentations.
pub fn fitting_chain(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let mut checked = 0;
    while checked < cases {
        let p = random_presentation(&mut r);
        let Ok((ab, m)) = abelianized_alexander_matrix(&p) else { continue };
        for k in 0..m.cols() as i64 {
            let lower = fitting_ideal(&m, ab.rank_b1, k);
            let upper = fitting_ideal(&m, ab.rank_b1, k + 1);
            if !upper.contains_ideal(&lower, Budget::default()).map_err(|e| e.to_string())? {
                return Err(format!("chain breaks at k = {k} for\n{}", p.to_text()));
            }
        }
        checked += 1;
    }
    Ok(checked)
}

/// Tangent cones have homogeneous generators and contain the initial form
/// of every input generator.
pub fn tangent_cones(cases: usize, seed: u64) -> Check {
    let mut r = rng(seed);
    let b = Budget::default();
    for _ in 0..cases {
        let n = r.gen_range(2..=3);
        let k = r.gen_range(1..=2);
        let gens: Vec<Polynomial> = (0..k).map(|_| small_poly(&mut r, n, 3, 3, true)).collect();
        let tc = Ideal::new(n, gens.clone()).tangent_cone(b).map_err(|e| e.to_string())?;
        if tc.gens().iter().any(|g| !g.is_homogeneous()) {
            return Err("non-homogeneous tangent cone generator".into());
        }
        for g in gens.iter().filter(|g| !g.is_zero()) {
            if !tc.contains(&g.initial_form(), b).map_err(|e| e.to_string())? {
                return Err("initial form missing from the tangent cone".into());
            }
        }
    }
    Ok(cases)
}

/// `δ₂ ∘ δ₃ = 0` symbolically for `n ≤ 6` and at random rational points.
pub fn delta_squared(cases: usize, seed: u64) -> Check {
    for n in 1..=6 {
        let prod = delta2_matrix(n).mul(&infinitesimal_alexander(&CupStructure::zero(n)), &Polynomial::zero(n));
        if (0..prod.rows()).any(|i| prod.row(i).iter().any(|p| !p.is_zero())) {
            return Err(format!("nonzero composite for n = {n}"));
        }
    }
    let mut r = rng(seed);
    for _ in 0..cases {
        let n = r.gen_range(3..=6);
        let z: Vec<Rat> = (0..n)
            .map(|_| Rat::new(r.gen_range(-9..=9).into(), r.gen_range(1..=5).into()))
            .collect();
        let d2 = delta2_matrix(n).map(|p| p.eval(&z));
        let d3 = infinitesimal_alexander(&CupStructure::zero(n)).map(|p| p.eval(&z));
        let prod = d2.mul(&d3, &Rat::zero());
        if (0..prod.rows()).any(|i| prod.row(i).iter().any(|x| !x.is_zero())) {
            return Err(format!("nonzero composite at a point, n = {n}"));
        }
    }
    Ok(cases + 6)
}

pub fn random_cup(r: &mut ChaCha8Rng, n: usize) -> CupStructure {
    let dim = n * (n - 1) / 2;
    let k = r.gen_range(0..=2.min(dim));
    let classes = (0..k)
        .map(|_| (0..dim).map(|_| rat(if r.gen_bool(0.6) { 0 } else { r.gen_range(-2..=2) })).collect())
        .collect();
    CupStructure::new(n, classes).unwrap()
}

/// Cup structures of every corpus entry that has one.
pub fn corpus_cups() -> Vec<(String, CupStructure)> {
    let mut out = Vec::new();
    for name in corpus_names() {
        match corpus(name).unwrap() {
            CorpusItem::Presentation(p) => {
                if let Ok(c) = cup_structure(&p) {
                    out.push((name.to_string(), c));
                }
            }
            CorpusItem::Cup(c) => out.push((name.to_string(), c)),
            CorpusItem::Ideal { .. } => {}
        }
    }
    out
}

/// Fitting loci of the infinitesimal Alexander matrix agree with resonance
/// away from the origin: every corpus cup structure for all `k`, then
/// random ones.
pub fn nabla_lemma(cases: usize, seed: u64) -> Check {
    let b = Budget::default();
    let mut count = 0;
    let same = |c: &CupStructure, k: usize| -> Result<bool, String> {
        infinitesimal_fitting_locus(c, k)
            .variety_equal_away_from_origin(&resonance_ideal(c, k).ideal, b)
            .map_err(|e| e.to_string())
    };
    for (name, c) in corpus_cups() {
        for k in 1..=c.n {
            if !same(&c, k)? {
                return Err(format!("{name}, k = {k}"));
            }
            count += 1;
        }
    }
    let mut r = rng(seed);
    for _ in 0..cases {
        let n = r.gen_range(2..=4);
        let c = random_cup(&mut r, n);
        let k = r.gen_range(1..=n);
        if !same(&c, k)? {
            return Err(format!("random structure\n{}k = {k}", c.to_text()));
        }
        count += 1;
    }
    Ok(count)
}
