use std::collections::BTreeMap;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::Rat;

pub type LaurentExps = SmallVec<[i32; 8]>;

/// Laurent polynomial in `nvars` variables with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<LaurentExps, Rat>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(nvars, &vec![0; nvars], Rat::one())
    }

    pub fn monomial(nvars: usize, exps: &[i32], c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(SmallVec::from_slice(exps), c);
        p
    }

    pub fn add_term(&mut self, e: LaurentExps, c: Rat) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&LaurentExps, &Rat)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let e: LaurentExps = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k != 0 {
                    t *= num_traits::pow(x.clone(), k.unsigned_abs() as usize).pow(k.signum());
                }
            }
            acc += t;
        }
        acc
    }

    /// Multiply by the unique monomial that makes this a polynomial not
    /// divisible by any variable. Monomials are units on the torus, so zero
    /// sets there (and germs at 1) are unchanged.
    pub fn clear_units(&self) -> Polynomial {
        let n = self.nvars;
        if self.is_zero() {
            return Polynomial::zero(n);
        }
        let mut mins = vec![i32::MAX; n];
        for e in self.terms.keys() {
            for (m, &x) in mins.iter_mut().zip(e) {
                *m = (*m).min(x);
            }
        }
        Polynomial::from_terms(
            n,
            self.terms.iter().map(|(e, c)| {
                let ex: Vec<u16> = e
                    .iter()
                    .zip(&mins)
                    .map(|(x, m)| u16::try_from(x - m).expect("Laurent degree out of range"))
                    .collect();
                (Monomial::from_exps(&ex), c.clone())
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn clearing_units_is_idempotent() {
        // t^-1 - 1 + t  ->  1 - t + t^2
        let mut p = LaurentPoly::zero(1);
        p.add_term(SmallVec::from_slice(&[-1]), r(1));
        p.add_term(SmallVec::from_slice(&[0]), r(-1));
        p.add_term(SmallVec::from_slice(&[1]), r(1));
        let q = p.clear_units();
        let t = Polynomial::var(1, 0);
        assert_eq!(q, &(&t.pow(2) - &t) + &Polynomial::one(1));
        // as Laurent again, clearing changes nothing
        let mut back = LaurentPoly::zero(1);
        for (m, c) in q.terms() {
            back.add_term(SmallVec::from_slice(&[m.exp(0) as i32]), c.clone());
        }
        assert_eq!(back.clear_units(), q);
        assert_eq!(p.eval(&[r(2)]), Rat::new(3.into(), 2.into()));
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = LaurentPoly::monomial(2, &[1, -1], r(2));
        let b = a.sub(&a);
        assert!(b.is_zero());
    }
}
