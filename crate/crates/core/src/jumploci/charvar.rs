use num_traits::{One, Zero};

use crate::fpgroup::abelian::laurent_image;
use crate::fpgroup::{abelianized_alexander_matrix, fox_derivative, GroupPresentation};
use crate::polyalg::{fitting_ideal, linear, var_names, Budget, Polynomial, Rat};
use crate::Result;

use super::locus::{JumpingLocus, LocusKind};

/// `V_k` on the identity component of the character torus: the ideal of
/// `(s − k)`-minors of the Alexander matrix, which governs every character
/// except the trivial one, plus the flag `b₁ ≥ k` for the trivial one.
pub fn charvar_ideal(p: &GroupPresentation, k: usize) -> Result<JumpingLocus> {
    let (ab, m) = abelianized_alexander_matrix(p)?;
    let b = ab.rank_b1;
    let ideal = if k == 0 {
        crate::polyalg::Ideal::zero(b)
    } else {
        fitting_ideal(&m, b, k as i64)
    };
    Ok(JumpingLocus {
        kind: LocusKind::Characteristic,
        k,
        vars: var_names("t", b),
        ideal,
        extra_point: ab.rank_b1 >= k,
    })
}

/// `dim H₁(G; C_ρ) = s − rank d₁(ρ) − rank d₂(ρ)` for a character `ρ` of
/// the free part of `G_ab`, given by its values on `t_1..t_b`.
pub fn charvar_point_test(p: &GroupPresentation, rho: &[Rat]) -> Result<usize> {
    let (ab, _) = abelianized_alexander_matrix(p)?;
    if rho.len() != ab.rank_b1 {
        return Err(crate::Error::AmbientMismatch {
            expected: ab.rank_b1,
            found: rho.len(),
        });
    }
    if rho.iter().any(Zero::is_zero) {
        return Err(crate::Error::Invalid("a character takes nonzero values".into()));
    }
    let s = p.num_generators();
    // d₁ sends generator i to ρ(x_i) − 1
    let d1: Vec<Rat> = (0..s)
        .map(|i| {
            let mut e = vec![0i64; s];
            e[i] = 1;
            let img = ab.free_coords(&e);
            eval_monomial(&img, rho) - Rat::one()
        })
        .collect();
    let rank_d1 = usize::from(d1.iter().any(|x| !x.is_zero()));
    let rows: Vec<Vec<Rat>> = p
        .relators
        .iter()
        .map(|r| (0..s).map(|i| laurent_image(&ab, &fox_derivative(r, i)).eval(rho)).collect())
        .collect();
    let rank_d2 = linear::rank(&rows);
    Ok(s - rank_d1 - rank_d2)
}

fn eval_monomial(e: &[i64], rho: &[Rat]) -> Rat {
    let mut acc = Rat::one();
    for (x, &k) in rho.iter().zip(e) {
        if k >= 0 {
            acc *= num_traits::pow(x.clone(), k as usize);
        } else {
            acc /= num_traits::pow(x.clone(), (-k) as usize);
        }
    }
    acc
}

/// Tangent cone at the trivial character: translate `t_i = 1 + u_i`, take
/// the ideal of initial forms, and adjoin the origin when the trivial
/// character lies in the locus (it is then at least an isolated point).
pub fn tangent_cone_at_identity(l: &JumpingLocus, budget: Budget) -> Result<JumpingLocus> {
    let n = l.ideal.nvars();
    let shift: Vec<Polynomial> = (0..n)
        .map(|i| &Polynomial::var(n, i) + &Polynomial::one(n))
        .collect();
    let translated = l.ideal.substitute(&shift);
    let ideal = translated.tangent_cone(budget)?;
    Ok(JumpingLocus {
        kind: LocusKind::TangentCone,
        k: l.k,
        vars: var_names("u", n),
        ideal,
        extra_point: l.extra_point,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::corpus_presentation;
    use crate::polyalg::{parse_polynomial, rat, Ideal};

    #[test]
    fn trefoil() {
        let p = corpus_presentation("trefoil").unwrap();
        let v1 = charvar_ideal(&p, 1).unwrap();
        let t = var_names("t", 1);
        assert_eq!(v1.ideal, Ideal::new(1, vec![parse_polynomial("t1^2 - t1 + 1", &t).unwrap()]));
        assert!(v1.identity_member());
        assert_eq!(charvar_point_test(&p, &[rat(1)]).unwrap(), 1);
        assert_eq!(charvar_point_test(&p, &[rat(2)]).unwrap(), 0);
        let tc = tangent_cone_at_identity(&v1, Budget::default()).unwrap();
        assert!(tc.ideal.is_unit(Budget::default()).unwrap());
        assert!(tc.origin_included());
    }

    #[test]
    fn free_group_locus_is_everything() {
        let p = GroupPresentation::free(3);
        assert!(charvar_ideal(&p, 1).unwrap().ideal.is_zero());
        assert!(charvar_ideal(&p, 2).unwrap().ideal.is_zero());
        assert_eq!(charvar_point_test(&p, &[rat(2), rat(3), rat(1)]).unwrap(), 2);
    }

    #[test]
    fn product_of_translated_lines() {
        let t = var_names("t", 2);
        let l = JumpingLocus {
            kind: LocusKind::Characteristic,
            k: 1,
            vars: t.clone(),
            ideal: Ideal::new(2, vec![parse_polynomial("(t1 - 1)*(t2 - 1)", &t).unwrap()]),
            extra_point: true,
        };
        let tc = tangent_cone_at_identity(&l, Budget::default()).unwrap();
        let u = var_names("u", 2);
        assert_eq!(tc.ideal, Ideal::new(2, vec![parse_polynomial("u1*u2", &u).unwrap()]));
    }
}
