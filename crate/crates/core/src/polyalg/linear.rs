use num_traits::{One, Zero};

use super::{Ideal, Polynomial, Rat};
use crate::error::{Error, Result};

/// Reduced row echelon form in place. Zero rows are dropped; returns the
/// pivot column of each remaining row.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : rows · x = 0}` in `ncols` unknowns, one vector per free
/// column with a 1 in that column.
pub fn kernel(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (row, &pc) in m.iter().zip(&pivots) {
            v[pc] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Linear subspace of Q^n kept as a canonical (RREF) basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearSubspace {
    n: usize,
    basis: Vec<Vec<Rat>>,
}

impl LinearSubspace {
    pub fn span(n: usize, vectors: Vec<Vec<Rat>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != n) {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: v.len(),
            });
        }
        let mut basis = vectors;
        rref(&mut basis);
        Ok(LinearSubspace { n, basis })
    }

    /// Common zero set of the given linear forms (coefficient vectors).
    pub fn from_equations(n: usize, equations: &[Vec<Rat>]) -> Result<Self> {
        if let Some(v) = equations.iter().find(|v| v.len() != n) {
            return Err(Error::AmbientMismatch {
                expected: n,
                found: v.len(),
            });
        }
        Self::span(n, kernel(equations, n))
    }

    pub fn zero(n: usize) -> Self {
        LinearSubspace { n, basis: vec![] }
    }

    pub fn whole(n: usize) -> Self {
        let basis = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        LinearSubspace { n, basis }
    }

    /// Span of the coordinate vectors with the given indices.
    pub fn coordinate(n: usize, indices: &[usize]) -> Self {
        let vs = indices
            .iter()
            .map(|&i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        Self::span(n, vs).expect("indices in range")
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn contains_point(&self, v: &[Rat]) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::AmbientMismatch {
                expected: self.n,
                found: v.len(),
            });
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        Ok(rank(&rows) == self.dim())
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.sum(other)?.dim() == self.dim())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::span(self.n, vs)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut eqs = self.equations();
        eqs.extend(other.equations());
        Self::from_equations(self.n, &eqs)
    }

    /// Linear forms cutting out the subspace, in RREF.
    pub fn equations(&self) -> Vec<Vec<Rat>> {
        let mut k = kernel(&self.basis, self.n);
        rref(&mut k);
        k
    }

    /// The (prime) ideal of the subspace.
    pub fn ideal(&self) -> Ideal {
        Ideal::new(
            self.n,
            self.equations().iter().map(|e| Polynomial::linear(e)).collect(),
        )
    }
}
