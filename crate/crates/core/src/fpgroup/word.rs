use std::fmt;

use serde::{Deserialize, Serialize};

/// A freely reduced word in the free group on generators `0..n`.
///
/// Stored as syllables `(generator, exponent)`; adjacent syllables never
/// share a generator and exponents are never zero.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<(usize, i32)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(g: usize) -> Self {
        Word::power(g, 1)
    }

    pub fn power(g: usize, e: i32) -> Self {
        Word::from_letters(vec![(g, e)])
    }

    /// Build from arbitrary syllables, freely reducing.
    pub fn from_letters(letters: impl IntoIterator<Item = (usize, i32)>) -> Self {
        let mut out: Vec<(usize, i32)> = Vec::new();
        for (g, e) in letters {
            push_reduced(&mut out, g, e);
        }
        Word { letters: out }
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters counted with multiplicity (`x^3` has length 3).
    pub fn length(&self) -> usize {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Self {
        let mut out = self.letters.clone();
        for &(g, e) in &other.letters {
            push_reduced(&mut out, g, e);
        }
        Word { letters: out }
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `u v u⁻¹ v⁻¹`
    pub fn commutator(u: &Word, v: &Word) -> Self {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    /// Exponent sum of each generator.
    pub fn abelianize(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for &(g, e) in &self.letters {
            v[g] += e as i64;
        }
        v
    }

    /// Re-index generators by `map[g]`.
    pub fn relabel(&self, map: &[usize]) -> Self {
        Word::from_letters(self.letters.iter().map(|&(g, e)| (map[g], e)))
    }

    /// Letters one at a time, each as `(generator, ±1)`.
    pub fn unit_letters(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&(g, e)| {
                if e == 1 {
                    names[g].clone()
                } else {
                    format!("{}^{}", names[g], e)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn push_reduced(out: &mut Vec<(usize, i32)>, g: usize, e: i32) {
    if e == 0 {
        return;
    }
    match out.last_mut() {
        Some((h, f)) if *h == g => {
            *f += e;
            if *f == 0 {
                out.pop();
            }
        }
        _ => out.push((g, e)),
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{g}")?;
            if *e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
