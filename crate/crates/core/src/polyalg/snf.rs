use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Smith normal form `U · A · V = D` over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    pub u: Vec<Vec<BigInt>>,
    pub d: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
}

impl Snf {
    /// Nonzero diagonal entries, in order; each divides the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.len().min(self.d.first().map_or(0, Vec::len)))
            .map(|i| self.d[i][i].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// `rows` and `cols` give the shape, so empty matrices keep their width.
pub fn smith_normal_form(a: &[Vec<BigInt>], rows: usize, cols: usize) -> Snf {
    let mut d: Vec<Vec<BigInt>> = a.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    // row op: r_i <- r_i + k r_j (applied to D and U)
    fn add_row(m: &mut [Vec<BigInt>], i: usize, j: usize, k: &BigInt) {
        let src = m[j].clone();
        for (x, y) in m[i].iter_mut().zip(&src) {
            *x += k * y;
        }
    }
    fn add_col(m: &mut [Vec<BigInt>], i: usize, j: usize, k: &BigInt) {
        for row in m.iter_mut() {
            let y = row[j].clone();
            row[i] += k * y;
        }
    }
    fn swap_col(m: &mut [Vec<BigInt>], i: usize, j: usize) {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }
    fn neg_row(m: &mut [Vec<BigInt>], i: usize) {
        for x in m[i].iter_mut() {
            *x = -x.clone();
        }
    }

    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| d[i][j].abs() < d[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap(t, pi);
        u.swap(t, pi);
        swap_col(&mut d, t, pj);
        swap_col(&mut v, t, pj);

        let mut clean = true;
        for i in t + 1..rows {
            if !d[i][t].is_zero() {
                let q = -d[i][t].div_floor(&d[t][t]);
                add_row(&mut d, i, t, &q);
                add_row(&mut u, i, t, &q);
                if !d[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..cols {
            if !d[t][j].is_zero() {
                let q = -d[t][j].div_floor(&d[t][t]);
                add_col(&mut d, j, t, &q);
                add_col(&mut v, j, t, &q);
                if !d[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        if !clean {
            // a smaller remainder appeared; pick a new pivot
            continue;
        }
        // enforce divisibility of the rest of the block
        let bad = (t + 1..rows)
            .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !d[i][j].is_multiple_of(&d[t][t]));
        if let Some((i, _)) = bad {
            let one = BigInt::one();
            add_row(&mut d, t, i, &one);
            add_row(&mut u, t, i, &one);
            continue;
        }
        if d[t][t].is_negative() {
            neg_row(&mut d, t);
            neg_row(&mut u, t);
        }
        t += 1;
    }
    Snf { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>], inner: usize, cols: usize) -> Vec<Vec<BigInt>> {
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| (0..inner).map(|k| &row[k] * &b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_cases() {
        let s = smith_normal_form(&m(&[&[2]]), 1, 1);
        assert_eq!(s.d, m(&[&[2]]));
        let s = smith_normal_form(&m(&[&[1, -1]]), 1, 2);
        assert_eq!(s.d, m(&[&[1, 0]]));
        let a = m(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&a, 3, 3);
        assert_eq!(s.invariant_factors(), vec![2.into(), 6.into(), 12.into()]);
        let uav = mul(&mul(&s.u, &a, 3, 3), &s.v, 3, 3);
        assert_eq!(uav, s.d);
    }
}
