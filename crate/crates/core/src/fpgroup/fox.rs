//! Fox free differential calculus in the integral group ring of a free group.

use std::collections::BTreeMap;

use super::word::Word;

/// Element of the integral group ring `Z[F]`: a finite sum of words.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeDerivative {
    terms: BTreeMap<Word, i64>,
}

impl FreeDerivative {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty(), 1)
    }

    pub fn word(w: Word, c: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &i64)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, &c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Left multiplication by a group element.
    pub fn left_mul(&self, u: &Word) -> Self {
        let mut out = Self::zero();
        for (w, &c) in &self.terms {
            out.add_term(u.mul(w), c);
        }
        out
    }

    /// Sum of coefficients (the augmentation map to `Z`).
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Image under a ring map determined by where each word goes.
    pub fn map<R>(&self, zero: R, f: impl Fn(&Word, i64) -> R, add: impl Fn(R, R) -> R) -> R {
        self.terms.iter().fold(zero, |acc, (w, &c)| add(acc, f(w, c)))
    }
}

/// `∂w/∂x_i`, from `∂(uv) = ∂u + u·∂v` applied syllable by syllable.
pub fn fox_derivative(w: &Word, i: usize) -> FreeDerivative {
    let mut out = FreeDerivative::zero();
    let mut prefix = Word::empty();
    for &(g, e) in w.letters() {
        if g == i {
            // ∂(x^e)/∂x = 1 + x + … + x^{e-1} for e > 0,
            //            −(x^{-1} + … + x^{e}) for e < 0
            if e > 0 {
                for k in 0..e {
                    out.add_term(prefix.mul(&Word::power(g, k)), 1);
                }
            } else {
                for k in 1..=(-e) {
                    out.add_term(prefix.mul(&Word::power(g, -k)), -1);
                }
            }
        }
        prefix = prefix.mul(&Word::power(g, e));
    }
    out
}
