//! Buchberger's algorithm with the Gebauer–Möller pair criteria.
//!
//! Internally polynomials carry primitive integer coefficients and are
//! reduced fraction-free; the public interface speaks [`Polynomial`].

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use super::Rat;
use crate::error::{Error, Result};

/// Resource caps for a Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest number of elements the working basis may hold.
    pub max_basis: usize,
    /// Largest total number of terms across the working basis.
    pub max_terms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_basis: 20_000,
            max_terms: 4_000_000,
        }
    }
}

impl Budget {
    pub fn with_terms(max_terms: usize) -> Self {
        Budget {
            max_terms,
            ..Budget::default()
        }
    }
}

type Term = (Monomial, BigInt);

#[derive(Clone, Debug)]
struct GPoly {
    terms: Vec<Term>,
    mask: u64,
}

fn mask_of(m: &Monomial) -> u64 {
    m.exps()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (i, _)| acc | 1u64 << (i % 64))
}

impl GPoly {
    fn new(mut terms: Vec<Term>) -> Self {
        make_primitive(&mut terms);
        let mask = terms.first().map_or(0, |t| mask_of(&t.0));
        GPoly { terms, mask }
    }

    fn lead(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn to_polynomial(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rat::from_integer(c.clone()))),
        )
        .monic()
    }
}

fn make_primitive(terms: &mut [Term]) {
    let Some(first) = terms.first() else { return };
    let mut g = first.1.abs();
    for (_, c) in terms.iter().skip(1) {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    let negate = first.1.is_negative();
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c /= &g;
        }
    }
    if negate {
        for (_, c) in terms.iter_mut() {
            *c = -&*c;
        }
    }
}

fn from_polynomial(p: &Polynomial, order: MonomialOrder) -> Vec<Term> {
    let mut den = BigInt::one();
    for (_, c) in p.terms() {
        den = den.lcm(c.denom());
    }
    let mut terms: Vec<Term> = p
        .terms()
        .map(|(m, c)| (m.clone(), (c * Rat::from_integer(den.clone())).to_integer()))
        .collect();
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    terms
}

/// `a·p − b·(q·g)` for descending-sorted term lists.
fn lin_comb(
    a: &BigInt,
    p: &[Term],
    b: &BigInt,
    q: &Monomial,
    g: &[Term],
    order: MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |k: usize| g[k].0.mul(q);
    let mut gj = if j < g.len() { Some(shifted(j)) } else { None };
    while i < p.len() || gj.is_some() {
        let ord = match (&gj, p.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(m), Some((pm, _))) => order.cmp(pm, m),
        };
        match ord {
            Ordering::Greater => {
                let c = if a.is_one() { p[i].1.clone() } else { a * &p[i].1 };
                out.push((p[i].0.clone(), c));
                i += 1;
            }
            Ordering::Less => {
                out.push((gj.take().unwrap(), -(b * &g[j].1)));
                j += 1;
                gj = if j < g.len() { Some(shifted(j)) } else { None };
            }
            Ordering::Equal => {
                let c = a * &p[i].1 - b * &g[j].1;
                if !c.is_zero() {
                    out.push((p[i].0.clone(), c));
                }
                i += 1;
                j += 1;
                gj = if j < g.len() { Some(shifted(j)) } else { None };
            }
        }
    }
    out
}

fn find_divisor<'a>(m: &Monomial, basis: &[&'a GPoly]) -> Option<&'a GPoly> {
    let mm = mask_of(m);
    basis
        .iter()
        .find(|g| g.mask & !mm == 0 && g.lead().divides(m))
        .copied()
}

/// `c·(q·g)`
fn shift(c: &BigInt, q: &Monomial, g: &[Term]) -> Vec<Term> {
    g.iter().map(|(m, x)| (m.mul(q), c * x)).collect()
}

/// S-polynomial of two primitive polynomials.
fn s_poly(f: &GPoly, g: &GPoly, lcm: &Monomial, order: MonomialOrder) -> Vec<Term> {
    let qf = lcm.div(f.lead()).unwrap();
    let qg = lcm.div(g.lead()).unwrap();
    let cf = &f.terms[0].1;
    let cg = &g.terms[0].1;
    let d = cf.gcd(cg);
    let left = shift(&(cg / &d), &qf, &f.terms);
    lin_comb(&BigInt::one(), &left, &(cf / &d), &qg, &g.terms, order)
}

/// Fully reduce `p` by `basis`; the result is primitive (a nonzero rational
/// multiple of the true remainder).
fn reduce(p: Vec<Term>, basis: &[&GPoly], order: MonomialOrder) -> Vec<Term> {
    let mut p = p;
    let mut start = 0;
    let mut rem: Vec<Term> = Vec::new();
    let mut steps = 0usize;
    while start < p.len() {
        let (lm, lc) = &p[start];
        match find_divisor(lm, basis) {
            Some(g) => {
                let q = lm.div(g.lead()).unwrap();
                let lg = &g.terms[0].1;
                let d = lc.gcd(lg);
                let a = lg / &d;
                let b = lc / &d;
                if !a.is_one() {
                    for (_, c) in rem.iter_mut() {
                        *c *= &a;
                    }
                }
                p = lin_comb(&a, &p[start..], &b, &q, &g.terms, order);
                start = 0;
                steps += 1;
                if steps.is_multiple_of(16) {
                    shrink_content(&mut rem, &mut p);
                }
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    rem.extend(p.drain(start..));
    make_primitive(&mut rem);
    rem
}

/// Divide the remainder and the working polynomial by their common content.
fn shrink_content(rem: &mut [Term], p: &mut [Term]) {
    let mut g = BigInt::zero();
    for (_, c) in rem.iter().chain(p.iter()) {
        g = g.gcd(c);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, c) in rem.iter_mut().chain(p.iter_mut()) {
        *c /= &g;
    }
}

struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
    order: MonomialOrder,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Pair {}
impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Pair {
    // reversed so the max-heap pops the smallest lcm first
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .cmp(&other.lcm, &self.lcm)
            .then_with(|| (other.i, other.j).cmp(&(self.i, self.j)))
    }
}

/// A Gröbner computation that can be extended with new generators.
pub struct GroebnerState {
    nvars: usize,
    order: MonomialOrder,
    budget: Budget,
    polys: Vec<GPoly>,
    basis: Vec<usize>,
    pairs: BinaryHeap<Pair>,
    unit: bool,
}

impl GroebnerState {
    pub fn new(nvars: usize, order: MonomialOrder, budget: Budget) -> Self {
        GroebnerState {
            nvars,
            order,
            budget,
            polys: Vec::new(),
            basis: Vec::new(),
            pairs: BinaryHeap::new(),
            unit: false,
        }
    }

    /// Start from polynomials already known to form a Gröbner basis for
    /// `order`; no pairs among them are scheduled.
    pub fn from_groebner_basis(
        nvars: usize,
        order: MonomialOrder,
        budget: Budget,
        basis: &[Polynomial],
    ) -> Self {
        let mut s = Self::new(nvars, order, budget);
        for p in basis {
            if p.is_zero() {
                continue;
            }
            let g = GPoly::new(from_polynomial(p, order));
            if g.terms[0].0.is_one() {
                s.unit = true;
            }
            s.polys.push(g);
            s.basis.push(s.polys.len() - 1);
        }
        s
    }

    pub fn is_unit(&self) -> bool {
        self.unit
    }

    fn current(&self) -> Vec<&GPoly> {
        self.basis.iter().map(|&k| &self.polys[k]).collect()
    }

    /// Reduce `p` by the current basis and, if it survives, add it.
    pub fn add(&mut self, p: &Polynomial) -> Result<()> {
        if self.unit || p.is_zero() {
            return Ok(());
        }
        let r = reduce(from_polynomial(p, self.order), &self.current(), self.order);
        self.insert(r)
    }

    fn insert(&mut self, r: Vec<Term>) -> Result<()> {
        if r.is_empty() {
            return Ok(());
        }
        let h = GPoly::new(r);
        if h.lead().is_one() {
            self.unit = true;
            self.polys.push(h);
            self.basis = vec![self.polys.len() - 1];
            self.pairs.clear();
            return Ok(());
        }
        self.polys.push(h);
        let hi = self.polys.len() - 1;
        self.update(hi);
        self.check_budget()
    }

    fn check_budget(&self) -> Result<()> {
        if self.basis.len() > self.budget.max_basis {
            return Err(Error::BudgetExceeded(format!(
                "Gröbner basis grew past {} elements",
                self.budget.max_basis
            )));
        }
        let terms: usize = self.basis.iter().map(|&k| self.polys[k].terms.len()).sum();
        if terms > self.budget.max_terms {
            return Err(Error::BudgetExceeded(format!(
                "Gröbner basis grew past {} terms",
                self.budget.max_terms
            )));
        }
        Ok(())
    }

    fn update(&mut self, h: usize) {
        let lt_h = self.polys[h].lead().clone();
        let mut c: Vec<(usize, Monomial, bool)> = self
            .basis
            .iter()
            .map(|&g| {
                let lg = self.polys[g].lead();
                (g, lt_h.lcm(lg), lt_h.is_coprime(lg))
            })
            .collect();
        let mut d: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g1, l1, coprime)) = c.pop() {
            let dominated = c.iter().chain(d.iter()).any(|(_, l2, _)| l2.divides(&l1));
            if coprime || !dominated {
                d.push((g1, l1, coprime));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            let l = &p.lcm;
            !(lt_h.divides(l)
                && polys[p.i].lead().lcm(&lt_h) != *l
                && polys[p.j].lead().lcm(&lt_h) != *l)
        });
        for (g, l, coprime) in d {
            if !coprime {
                self.pairs.push(Pair {
                    lcm: l,
                    i: g.min(h),
                    j: g.max(h),
                    order: self.order,
                });
            }
        }
        self.basis.retain(|&g| !lt_h.divides(polys[g].lead()));
        self.basis.push(h);
    }

    /// Process pairs until none remain.
    pub fn run(&mut self) -> Result<()> {
        while let Some(pair) = self.pairs.pop() {
            if self.unit {
                break;
            }
            let s = s_poly(&self.polys[pair.i], &self.polys[pair.j], &pair.lcm, self.order);
            let r = reduce(s, &self.current(), self.order);
            self.insert(r)?;
        }
        Ok(())
    }

    /// The reduced Gröbner basis, monic, sorted by increasing leading monomial.
    pub fn reduced_basis(&self) -> Vec<Polynomial> {
        if self.unit {
            return vec![Polynomial::one(self.nvars)];
        }
        let mut idx: Vec<usize> = self.basis.clone();
        idx.sort_by(|&a, &b| self.order.cmp(self.polys[a].lead(), self.polys[b].lead()));
        // minimality: drop any element whose lead is divisible by another's
        let minimal: Vec<usize> = idx
            .iter()
            .enumerate()
            .filter(|&(pos, &k)| {
                !idx.iter().enumerate().any(|(pos2, &k2)| {
                    pos2 != pos
                        && self.polys[k2].lead().divides(self.polys[k].lead())
                        && (self.polys[k2].lead() != self.polys[k].lead() || pos2 < pos)
                })
            })
            .map(|(_, &k)| k)
            .collect();
        let mut out = Vec::with_capacity(minimal.len());
        for &k in &minimal {
            let others: Vec<&GPoly> = minimal
                .iter()
                .filter(|&&k2| k2 != k)
                .map(|&k2| &self.polys[k2])
                .collect();
            let exact = reduce_tail(&self.polys[k], &others, self.order);
            out.push(exact.to_polynomial(self.nvars));
        }
        out
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }
}

/// Reduce the tail of `g`, keeping its leading monomial; the result is a
/// scalar multiple of `g` minus an ideal combination of `others`.
fn reduce_tail(g: &GPoly, others: &[&GPoly], order: MonomialOrder) -> GPoly {
    let mut head = vec![g.terms[0].clone()];
    let mut p = g.terms[1..].to_vec();
    let mut start = 0;
    let mut rem: Vec<Term> = Vec::new();
    while start < p.len() {
        let (lm, lc) = &p[start];
        match find_divisor(lm, others) {
            Some(d) => {
                let q = lm.div(d.lead()).unwrap();
                let ld = &d.terms[0].1;
                let gg = lc.gcd(ld);
                let a = ld / &gg;
                let b = lc / &gg;
                if !a.is_one() {
                    for (_, c) in rem.iter_mut().chain(head.iter_mut()) {
                        *c *= &a;
                    }
                }
                p = lin_comb(&a, &p[start..], &b, &q, &d.terms, order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    head.extend(rem);
    head.extend(p.drain(start..));
    GPoly::new(head)
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn groebner_basis(
    gens: &[Polynomial],
    order: MonomialOrder,
    budget: Budget,
) -> Result<Vec<Polynomial>> {
    let nvars = gens.first().map_or(0, Polynomial::nvars);
    let mut s = GroebnerState::new(nvars, order, budget);
    // smaller generators first keeps early reductions cheap
    let mut sorted: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by_key(|g| (g.total_degree(), g.len()));
    for g in sorted {
        s.add(g)?;
    }
    s.run()?;
    Ok(s.reduced_basis())
}

/// Remainder of `f` modulo a Gröbner basis, up to a nonzero scalar.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: MonomialOrder) -> Polynomial {
    let gs: Vec<GPoly> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| GPoly::new(from_polynomial(p, order)))
        .collect();
    let refs: Vec<&GPoly> = gs.iter().collect();
    let r = reduce(from_polynomial(f, order), &refs, order);
    Polynomial::from_terms(
        f.nvars(),
        r.into_iter().map(|(m, c)| (m, Rat::from_integer(c))),
    )
}

/// Check that every S-polynomial of `basis` reduces to zero.
pub fn is_groebner_basis(basis: &[Polynomial], order: MonomialOrder) -> bool {
    let gs: Vec<GPoly> = basis
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| GPoly::new(from_polynomial(p, order)))
        .collect();
    let refs: Vec<&GPoly> = gs.iter().collect();
    for i in 0..gs.len() {
        for j in i + 1..gs.len() {
            let l = gs[i].lead().lcm(gs[j].lead());
            let s = s_poly(&gs[i], &gs[j], &l, order);
            if !reduce(s, &refs, order).is_empty() {
                return false;
            }
        }
    }
    true
}
