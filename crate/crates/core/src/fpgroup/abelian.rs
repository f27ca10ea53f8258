use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;
use smallvec::SmallVec;

use super::fox::fox_derivative;
use super::presentation::GroupPresentation;
use super::word::Word;
use crate::error::{Error, Result};
use crate::polyalg::{smith_normal_form, LaurentMatrix, LaurentPoly, Matrix, Rat};

/// `G_ab ≅ Z^{b1} ⊕ ⨁ Z/d_i` together with the coordinate change that
/// exhibits it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbelianizationData {
    pub rank_b1: usize,
    pub torsion_orders: Vec<i64>,
    /// `V` with `U·E·V = D` for the relator exponent matrix `E`: a generator
    /// exponent row vector `e` has SNF coordinates `e·V`.
    pub basis_change: Vec<Vec<i64>>,
    /// Number of nonzero invariant factors; coordinates `rank..` are free.
    pub relation_rank: usize,
}

impl AbelianizationData {
    /// Coordinates in the free part `Z^{b1}` of an exponent vector.
    pub fn free_coords(&self, exps: &[i64]) -> Vec<i64> {
        let s = self.basis_change.len();
        (self.relation_rank..s)
            .map(|j| (0..s).map(|i| exps[i] * self.basis_change[i][j]).sum())
            .collect()
    }

    /// Image of a word in the free part.
    pub fn word_image(&self, w: &Word) -> Vec<i64> {
        self.free_coords(&w.abelianize(self.basis_change.len()))
    }
}

pub fn exponent_matrix(p: &GroupPresentation) -> Vec<Vec<i64>> {
    let s = p.num_generators();
    p.relators.iter().map(|r| r.abelianize(s)).collect()
}

pub fn abelianize_presentation(p: &GroupPresentation) -> AbelianizationData {
    let s = p.num_generators();
    let e: Vec<Vec<BigInt>> = exponent_matrix(p)
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    let snf = smith_normal_form(&e, p.num_relators(), s);
    let factors = snf.invariant_factors();
    let to_i64 = |x: &BigInt| x.to_i64().expect("abelianization entry exceeds 64 bits");
    AbelianizationData {
        rank_b1: s - factors.len(),
        torsion_orders: factors.iter().filter(|d| !d.is_one()).map(to_i64).collect(),
        basis_change: snf.v.iter().map(|row| row.iter().map(to_i64).collect()).collect(),
        relation_rank: factors.len(),
    }
}

/// Image of a group-ring element in `Q[t_1^±, …, t_b^±]`.
pub fn laurent_image(ab: &AbelianizationData, d: &super::fox::FreeDerivative) -> LaurentPoly {
    let b = ab.rank_b1;
    let mut out = LaurentPoly::zero(b);
    for (w, &c) in d.terms() {
        let e: SmallVec<[i32; 8]> = ab
            .word_image(w)
            .into_iter()
            .map(|x| i32::try_from(x).expect("Laurent exponent out of range"))
            .collect();
        out.add_term(e, Rat::from_integer(c.into()));
    }
    out
}

/// The `r × s` matrix of abelianized Fox derivatives: entry `(j, i)` is the
/// image of `∂w_j/∂x_i` over the free part of `G_ab`.
pub fn abelianized_alexander_matrix(p: &GroupPresentation) -> Result<(AbelianizationData, LaurentMatrix)> {
    let ab = abelianize_presentation(p);
    if ab.rank_b1 == 0 {
        return Err(Error::TrivialTorus);
    }
    let m = Matrix::from_fn(p.num_relators(), p.num_generators(), |j, i| {
        laurent_image(&ab, &fox_derivative(&p.relators[j], i))
    });
    Ok((ab, m))
}
