//! Determinantal ideals.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::laurent::LaurentPoly;
use super::matrix::{minors, Matrix, RingElem};
use super::monomial::Monomial;
use super::{Ideal, Polynomial, Rat};

/// Ideal of `size × size` minors. `size ≤ 0` gives the unit ideal and
/// `size > min(rows, cols)` the zero ideal.
pub fn minors_ideal_poly(m: &Matrix<Polynomial>, nvars: usize, size: i64) -> Ideal {
    if size <= 0 {
        return Ideal::unit(nvars);
    }
    let size = size as usize;
    if size > m.rows().min(m.cols()) {
        return Ideal::zero(nvars);
    }
    let zero = Polynomial::zero(nvars);
    Ideal::new(nvars, span_basis(minors(m, size, &zero)))
}

/// As [`minors_ideal_poly`] over a Laurent ring: every minor is multiplied
/// by the monomial unit that makes it a polynomial not divisible by any
/// variable. Zero sets on the torus are unchanged.
pub fn minors_ideal(m: &Matrix<LaurentPoly>, nvars: usize, size: i64) -> Ideal {
    if size <= 0 {
        return Ideal::unit(nvars);
    }
    let size = size as usize;
    if size > m.rows().min(m.cols()) {
        return Ideal::zero(nvars);
    }
    let zero = LaurentPoly::zero(nvars);
    let ms: Vec<Polynomial> = minors(m, size, &zero)
        .into_iter()
        .filter(|p| !p.is_zero_elem())
        .map(|p| p.clear_units())
        .collect();
    Ideal::new(nvars, span_basis(ms))
}

/// Fitting ideal `F_k` of the module presented by `m`, rows being relations
/// and columns generators: the `(cols − k)`-minors.
pub fn fitting_ideal(m: &Matrix<LaurentPoly>, nvars: usize, k: i64) -> Ideal {
    minors_ideal(m, nvars, m.cols() as i64 - k)
}

/// As [`fitting_ideal`] for a polynomial matrix.
pub fn fitting_ideal_poly(m: &Matrix<Polynomial>, nvars: usize, k: i64) -> Ideal {
    minors_ideal_poly(m, nvars, m.cols() as i64 - k)
}

/// A basis of the Q-span of `polys`, reduced to echelon form over the
/// monomials (largest first). Same ideal, far fewer generators when many
/// minors are proportional or dependent.
pub fn span_basis(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let polys: Vec<Polynomial> = polys.into_iter().filter(|p| !p.is_zero()).collect();
    let Some(nvars) = polys.first().map(Polynomial::nvars) else {
        return vec![];
    };
    // echelon rows keyed by pivot monomial
    let mut rows: BTreeMap<Monomial, BTreeMap<Monomial, Rat>> = BTreeMap::new();
    for p in polys {
        let mut v: BTreeMap<Monomial, Rat> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        loop {
            let Some((lead, lc)) = v.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) else {
                break;
            };
            match rows.get(&lead) {
                Some(row) => {
                    // row has leading coefficient 1
                    for (m, c) in row {
                        let e = v.entry(m.clone()).or_insert_with(Rat::zero);
                        *e -= &lc * c;
                        if e.is_zero() {
                            v.remove(m);
                        }
                    }
                }
                None => {
                    let inv = lc.recip();
                    for c in v.values_mut() {
                        *c *= &inv;
                    }
                    rows.insert(lead, v);
                    break;
                }
            }
        }
    }
    rows.into_values()
        .rev()
        .map(|v| Polynomial::from_terms(nvars, v))
        .collect()
}
