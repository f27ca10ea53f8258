use num_traits::Zero;
use serde::Serialize;

use crate::fpgroup::CupStructure;
use crate::polyalg::{linear, LinearSubspace, Rat};
use crate::{Error, Result};

/// How the cup product restricts to a linear subspace `V ⊆ H¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Isotropy {
    /// `∧²V → H²` is zero.
    P0,
    /// One-dimensional image, and the induced skew form is non-degenerate.
    P1,
    Neither,
    /// The cup product vanishes on all of `H¹` (no relation classes), so
    /// every subspace is trivially 0-isotropic.
    ZeroMapAmbient,
}

impl Isotropy {
    /// The `p` of a p-isotropic subspace; anything else counts as 0 where a
    /// number is needed.
    pub fn p(self) -> usize {
        match self {
            Isotropy::P1 => 1,
            _ => 0,
        }
    }

    pub fn is_isotropic(self) -> bool {
        self != Isotropy::Neither
    }

    pub fn label(self) -> &'static str {
        match self {
            Isotropy::P0 => "0",
            Isotropy::P1 => "1",
            Isotropy::Neither => "neither",
            Isotropy::ZeroMapAmbient => "zero-map-ambient",
        }
    }
}

/// The values `μ(v_a ∧ v_b)` for `a < b`, paired against each relation
/// class: row `(a,b)`, column `j`.
pub fn restricted_cup(v: &LinearSubspace, c: &CupStructure) -> Vec<Vec<Rat>> {
    let basis = v.basis();
    let d = basis.len();
    let mut rows = Vec::with_capacity(d * d.saturating_sub(1) / 2);
    for a in 0..d {
        for b in a + 1..d {
            rows.push(
                (0..c.num_classes())
                    .map(|j| pair_against(&basis[a], &basis[b], c, j))
                    .collect(),
            );
        }
    }
    rows
}

fn pair_against(x: &[Rat], y: &[Rat], c: &CupStructure, j: usize) -> Rat {
    let mut acc = Rat::zero();
    for (k, (p, q)) in crate::fpgroup::pairs(c.n).into_iter().enumerate() {
        let coef = &c.relation_classes[j][k];
        if coef.is_zero() {
            continue;
        }
        acc += coef * (&x[p] * &y[q] - &x[q] * &y[p]);
    }
    acc
}

pub fn isotropy_classify(v: &LinearSubspace, c: &CupStructure) -> Result<Isotropy> {
    if v.ambient() != c.n {
        return Err(Error::AmbientMismatch {
            expected: c.n,
            found: v.ambient(),
        });
    }
    if c.is_zero() {
        return Ok(Isotropy::ZeroMapAmbient);
    }
    let d = v.dim();
    let rows = restricted_cup(v, c);
    let rank = linear::rank(&rows);
    if rank == 0 {
        return Ok(Isotropy::P0);
    }
    if rank > 1 || d % 2 == 1 {
        return Ok(Isotropy::Neither);
    }
    // all rows are multiples of one image vector w; read off the scalars
    let w = rows.iter().find(|r| r.iter().any(|x| !x.is_zero())).unwrap();
    let pivot = w.iter().position(|x| !x.is_zero()).unwrap();
    let mut omega = vec![vec![Rat::zero(); d]; d];
    let mut scalars = rows.iter().map(|r| &r[pivot] / &w[pivot]);
    #[allow(clippy::needless_range_loop)]
    for a in 0..d {
        for b in a + 1..d {
            let s = scalars.next().expect("one row per pair");
            omega[b][a] = -s.clone();
            omega[a][b] = s;
        }
    }
    if linear::rank(&omega) == d {
        Ok(Isotropy::P1)
    } else {
        Ok(Isotropy::Neither)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{corpus, parse_cup_file, CorpusItem};
    use crate::polyalg::rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn surface_is_one_isotropic() {
        let CorpusItem::Cup(c) = corpus("surface-2-cup").unwrap() else { panic!() };
        assert_eq!(isotropy_classify(&LinearSubspace::whole(4), &c).unwrap(), Isotropy::P1);
        let g1 = parse_cup_file("h1 2\nclass 1 on 1 2").unwrap();
        assert_eq!(isotropy_classify(&LinearSubspace::whole(2), &g1).unwrap(), Isotropy::P1);
    }

    #[test]
    fn lines_are_zero_isotropic() {
        let c = CupStructure::from_pairs(3, &[(0, 1), (1, 2)]);
        let line = LinearSubspace::span(3, vec![v(&[1, 2, 3])]).unwrap();
        assert_eq!(isotropy_classify(&line, &c).unwrap(), Isotropy::P0);
        let plane = LinearSubspace::coordinate(3, &[0, 2]);
        assert_eq!(isotropy_classify(&plane, &c).unwrap(), Isotropy::P0);
        let symplectic = LinearSubspace::coordinate(3, &[0, 1]);
        assert_eq!(isotropy_classify(&symplectic, &c).unwrap(), Isotropy::P1);
        assert_eq!(isotropy_classify(&LinearSubspace::whole(3), &c).unwrap(), Isotropy::Neither);
    }

    #[test]
    fn degenerate_rank_one_is_neither() {
        // e1∧e2 on a 4-dim space: image is one-dimensional but the form has
        // a kernel
        let c = CupStructure::from_pairs(4, &[(0, 1)]);
        assert_eq!(isotropy_classify(&LinearSubspace::whole(4), &c).unwrap(), Isotropy::Neither);
    }
}
