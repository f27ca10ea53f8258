use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// Exponent vector of a monomial in a fixed number of variables.
///
/// The `Ord` impl is graded reverse lexicographic with variable 0 largest;
/// other orders are available through [`MonomialOrder`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 8]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Insert `count` zero exponents at position `at`.
    pub fn insert_vars(&self, at: usize, count: usize) -> Monomial {
        let mut exps: SmallVec<[u16; 8]> = SmallVec::with_capacity(self.nvars() + count);
        exps.extend_from_slice(&self.exps[..at]);
        exps.extend(std::iter::repeat_n(0, count));
        exps.extend_from_slice(&self.exps[at..]);
        Monomial { exps }
    }

    /// Drop the variables in `range`; callers ensure their exponents are zero
    /// when that matters.
    pub fn remove_vars(&self, range: std::ops::Range<usize>) -> Monomial {
        let mut exps = self.exps.clone();
        exps.drain(range);
        Monomial { exps }
    }

    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut m = self.clone();
        m.exps[i] = e;
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.exps, &other.exps)
    }
}

fn grevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => {}
            // smaller exponent in the last differing variable is larger
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    a.cmp(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    #[default]
    #[serde(rename = "grevlex")]
    GrevLex,
    /// Block order: grevlex on the first `block` variables, ties broken by
    /// grevlex on the rest. Eliminates the first block.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => lex(&a.exps, &b.exps),
            MonomialOrder::GrevLex => grevlex(&a.exps, &b.exps),
            MonomialOrder::Elimination { block } => {
                grevlex(&a.exps[..block], &b.exps[..block])
                    .then_with(|| grevlex(&a.exps[block..], &b.exps[block..]))
            }
        }
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::GrevLex),
            other => Err(format!("unknown monomial order `{other}`")),
        }
    }
}
