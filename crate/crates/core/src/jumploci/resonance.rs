use num_traits::Zero;

use crate::fpgroup::{pair_index, pairs, CupStructure};
use crate::polyalg::{
    fitting_ideal_poly, matrix::k_subsets, minors_ideal_poly, Ideal, Matrix, Monomial, Polynomial, Rat,
};

use super::locus::{JumpingLocus, LocusKind};

/// `n × r` matrix whose column `j` is `δ₂(z)` applied to relation class `j`,
/// where `δ₂(z)(e_p∧e_q) = z_p e_q − z_q e_p`.
pub fn resonance_matrix(c: &CupStructure) -> Matrix<Polynomial> {
    let n = c.n;
    let mut m = Matrix::from_fn(n, c.num_classes(), |_, _| Polynomial::zero(n));
    for (j, class) in c.relation_classes.iter().enumerate() {
        for (k, (p, q)) in pairs(n).into_iter().enumerate() {
            let coef = &class[k];
            if coef.is_zero() {
                continue;
            }
            // row q gains c·z_p, row p gains −c·z_q
            let zq = Polynomial::monomial(n, Monomial::var(n, p), coef.clone());
            let zp = Polynomial::monomial(n, Monomial::var(n, q), -coef.clone());
            m.set(q, j, m.get(q, j) + &zq);
            m.set(p, j, m.get(p, j) + &zp);
        }
    }
    m
}

/// `R_k`: points where `rank RES(z) ≤ n − 1 − k`, i.e. the `(n − k)`-minors
/// vanish. The origin belongs for `1 ≤ k ≤ n`; nothing belongs for `k > n`.
pub fn resonance_ideal(c: &CupStructure, k: usize) -> JumpingLocus {
    let n = c.n;
    let ideal = if k == 0 {
        Ideal::zero(n)
    } else {
        minors_ideal_poly(&resonance_matrix(c), n, n as i64 - k as i64)
    };
    JumpingLocus {
        kind: LocusKind::Resonance,
        k,
        vars: crate::polyalg::var_names("z", n),
        ideal,
        extra_point: (1..=n).contains(&k),
    }
}

/// `δ₂(z)` as an `n × C(n,2)` matrix.
pub fn delta2_matrix(n: usize) -> Matrix<Polynomial> {
    let ps = pairs(n);
    Matrix::from_fn(n, ps.len(), |row, col| {
        let (p, q) = ps[col];
        if row == q {
            Polynomial::var(n, p)
        } else if row == p {
            -Polynomial::var(n, q)
        } else {
            Polynomial::zero(n)
        }
    })
}

/// The infinitesimal Alexander matrix: rows indexed by `e_p∧e_q`, columns by
/// the triples `e_a∧e_b∧e_c` (the `δ₃` block) followed by the relation
/// classes as constant columns.
pub fn infinitesimal_alexander(c: &CupStructure) -> Matrix<Polynomial> {
    let n = c.n;
    let triples = k_subsets(n, 3);
    let rows = n * n.saturating_sub(1) / 2;
    let cols = triples.len() + c.num_classes();
    let mut m = Matrix::from_fn(rows, cols, |_, _| Polynomial::zero(n));
    for (j, t) in triples.iter().enumerate() {
        let (a, b, cc) = (t[0], t[1], t[2]);
        m.set(pair_index(b, cc, n), j, Polynomial::var(n, a));
        m.set(pair_index(a, cc, n), j, -Polynomial::var(n, b));
        m.set(pair_index(a, b, n), j, Polynomial::var(n, cc));
    }
    for (j, class) in c.relation_classes.iter().enumerate() {
        for (row, coef) in class.iter().enumerate() {
            m.set(row, triples.len() + j, Polynomial::constant(n, coef.clone()));
        }
    }
    m
}

/// Fitting locus `W_k = Z(F_{k−1})` of the module presented by the
/// infinitesimal Alexander matrix (its rows are the module generators).
pub fn infinitesimal_fitting_locus(c: &CupStructure, k: usize) -> Ideal {
    let m = infinitesimal_alexander(c).transpose();
    fitting_ideal_poly(&m, c.n, k as i64 - 1)
}

/// Evaluate the resonance rank condition at one point: `dim H¹(H•, μ_z)`.
pub fn resonance_dimension(c: &CupStructure, z: &[Rat]) -> usize {
    let n = c.n;
    if z.iter().all(Zero::is_zero) {
        return n;
    }
    let m = resonance_matrix(c).map(|p| p.eval(z));
    let rows: Vec<Vec<Rat>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
    n - 1 - crate::polyalg::linear::rank(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::{corpus_presentation, cup_structure};
    use crate::polyalg::{parse_polynomial, rat, var_names, Budget};

    #[test]
    fn ziegler_first_column() {
        let c = cup_structure(&corpus_presentation("ziegler-2134").unwrap()).unwrap();
        let m = resonance_matrix(&c);
        assert_eq!((m.rows(), m.cols()), (4, 3));
        let z = var_names("z", 4);
        let col: Vec<String> = (0..4).map(|i| m.get(i, 0).to_string_with(&z)).collect();
        assert_eq!(col, vec!["-2*z3 - z4", "0", "2*z1", "z1"]);
    }

    #[test]
    fn small_cases() {
        let c = CupStructure::from_pairs(2, &[(0, 1)]);
        let m = resonance_matrix(&c);
        let z = var_names("z", 2);
        assert_eq!(m.get(0, 0).to_string_with(&z), "-z2");
        assert_eq!(m.get(1, 0).to_string_with(&z), "z1");
        let zero = CupStructure::zero(3);
        assert_eq!(resonance_matrix(&zero).cols(), 0);
        assert!(resonance_ideal(&zero, 0).ideal.is_zero());
    }

    #[test]
    fn delta3_block_for_three_generators() {
        let m = infinitesimal_alexander(&CupStructure::zero(3));
        let z = var_names("z", 3);
        let col: Vec<String> = (0..3).map(|i| m.get(i, 0).to_string_with(&z)).collect();
        assert_eq!(col, vec!["z3", "-z2", "z1"]);
        assert_eq!(infinitesimal_alexander(&CupStructure::from_pairs(2, &[(0, 1)])).rows(), 1);
    }

    #[test]
    fn ziegler_resonance_components() {
        let c = cup_structure(&corpus_presentation("ziegler-2134").unwrap()).unwrap();
        let z = var_names("z", 4);
        let b = Budget::default();
        let r1 = resonance_ideal(&c, 1);
        let expect = Ideal::new(4, vec![parse_polynomial("z4*(2*z3 + z4)", &z).unwrap()]);
        assert!(r1.variety_ideal().variety_equal(&expect, b).unwrap());
        assert_eq!(resonance_dimension(&c, &[rat(1), rat(5), rat(0), rat(0)]), 1);
        assert_eq!(resonance_dimension(&c, &[rat(1), rat(5), rat(1), rat(1)]), 0);
    }
}
