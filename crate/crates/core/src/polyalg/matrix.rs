use std::collections::HashMap;

use super::laurent::LaurentPoly;
use super::polynomial::Polynomial;
use super::Rat;
use num_traits::{One, Zero};

/// The operations determinant expansion needs from matrix entries.
pub trait RingElem: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
}

impl RingElem for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        Polynomial::one(self.nvars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
}

impl RingElem for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.nvars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self.mul(other)
    }
}

impl RingElem for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

pub type LaurentMatrix = Matrix<LaurentPoly>;
pub type PolyMatrix = Matrix<Polynomial>;

impl<R: Clone> Matrix<R> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<R>>, cols: usize) -> Self {
        let nrows = rows.len();
        let data: Vec<R> = rows.into_iter().flatten().collect();
        assert_eq!(data.len(), nrows * cols, "ragged matrix rows");
        Matrix {
            rows: nrows,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<S: Clone>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<R: RingElem> Matrix<R> {
    pub fn mul(&self, other: &Matrix<R>, zero: &R) -> Matrix<R> {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = zero.zero_like();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero_elem() && !b.is_zero_elem() {
                    acc = acc.add_elem(&a.mul_elem(b));
                }
            }
            acc
        })
    }
}

/// All `size`-by-`size` minors, row subsets in lexicographic order and,
/// within each, column subsets in lexicographic order. Zero minors are kept
/// so the position of each minor is predictable; callers filter.
///
/// Expansion is Laplace along the first remaining row, memoised on the set
/// of columns still available.
pub fn minors<R: RingElem>(m: &Matrix<R>, size: usize, zero: &R) -> Vec<R> {
    assert!(m.cols() <= 64, "minor expansion supports at most 64 columns");
    if size == 0 || size > m.rows().min(m.cols()) {
        return Vec::new();
    }
    let row_sets = subsets(m.rows(), size);
    let col_sets = subsets(m.cols(), size);
    let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
    for rows in &row_sets {
        let mut memo: HashMap<u64, R> = HashMap::new();
        for cols in &col_sets {
            let mask = cols.iter().fold(0u64, |acc, &c| acc | (1u64 << c));
            out.push(det_rec(m, rows, 0, mask, &mut memo, zero));
        }
    }
    out
}

fn det_rec<R: RingElem>(
    m: &Matrix<R>,
    rows: &[usize],
    depth: usize,
    mask: u64,
    memo: &mut HashMap<u64, R>,
    zero: &R,
) -> R {
    if depth == rows.len() {
        return zero.one_like();
    }
    if let Some(v) = memo.get(&mask) {
        return v.clone();
    }
    let r = rows[depth];
    let mut acc = zero.zero_like();
    let mut sign_pos = true;
    let mut bits = mask;
    while bits != 0 {
        let c = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let a = m.get(r, c);
        if !a.is_zero_elem() {
            let sub = det_rec(m, rows, depth + 1, mask & !(1u64 << c), memo, zero);
            if !sub.is_zero_elem() {
                let t = a.mul_elem(&sub);
                acc = if sign_pos { acc.add_elem(&t) } else { acc.sub_elem(&t) };
            }
        }
        sign_pos = !sign_pos;
    }
    memo.insert(mask, acc.clone());
    acc
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    subsets(n, k)
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rank(m: &Matrix<Rat>) -> usize {
    let mut rows: Vec<Vec<Rat>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    super::linear::rref(&mut rows).len()
}

pub fn identity_rat(n: usize) -> Matrix<Rat> {
    Matrix::from_fn(n, n, |i, j| if i == j { Rat::one() } else { Rat::zero() })
}
