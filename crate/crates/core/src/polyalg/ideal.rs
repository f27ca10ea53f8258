use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::groebner::{groebner_basis, normal_form, Budget, GroebnerState};
use super::monomial::MonomialOrder;
use super::parse::parse_polynomial;
use super::polynomial::Polynomial;
use super::{LinearSubspace, Rat};
use crate::error::{Error, Result};

/// Ideal of a polynomial ring in `nvars` variables.
///
/// Generators are stored in canonical scaling, deduplicated. The reduced
/// grevlex Gröbner basis is computed on first use and cached.
#[derive(Clone, Debug)]
pub struct Ideal {
    nvars: usize,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl PartialEq for Ideal {
    /// Equality of generator lists; use [`Ideal::same_ideal`] for equality
    /// as ideals.
    fn eq(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.gens == other.gens
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct IdealJson {
    pub vars: Vec<String>,
    pub gens: Vec<String>,
}

impl Ideal {
    pub fn new(nvars: usize, gens: Vec<Polynomial>) -> Self {
        let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            assert_eq!(g.nvars(), nvars, "generator in the wrong ring");
            if g.is_zero() {
                continue;
            }
            let c = g.canonical();
            if !out.contains(&c) {
                out.push(c);
            }
        }
        Ideal {
            nvars,
            gens: out,
            gb: OnceLock::new(),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, vec![])
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(nvars, vec![Polynomial::one(nvars)])
    }

    /// The maximal ideal of the origin.
    pub fn origin(nvars: usize) -> Self {
        Self::new(nvars, (0..nvars).map(|i| Polynomial::var(nvars, i)).collect())
    }

    fn with_basis(nvars: usize, basis: Vec<Polynomial>) -> Self {
        let ideal = Self::new(nvars, basis.clone());
        let _ = ideal.gb.set(basis);
        ideal
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True when there are no nonzero generators.
    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Reduced grevlex Gröbner basis (cached).
    pub fn groebner(&self, budget: Budget) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = groebner_basis(&self.gens, MonomialOrder::GrevLex, budget)?;
        Ok(self.gb.get_or_init(|| gb))
    }

    pub fn groebner_basis(&self, order: MonomialOrder, budget: Budget) -> Result<Vec<Polynomial>> {
        match order {
            MonomialOrder::GrevLex => Ok(self.groebner(budget)?.to_vec()),
            _ => groebner_basis(&self.gens, order, budget),
        }
    }

    pub fn is_unit(&self, budget: Budget) -> Result<bool> {
        Ok(self.groebner(budget)?.iter().any(Polynomial::is_constant))
    }

    pub fn contains(&self, f: &Polynomial, budget: Budget) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let gb = self.groebner(budget)?;
        Ok(normal_form(f, gb, MonomialOrder::GrevLex).is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn same_ideal(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        Ok(self.groebner(budget)? == other.groebner(budget)?)
    }

    /// `f ∈ √I`, by asking whether `I + (1 − y·f)` is the unit ideal.
    pub fn radical_contains(&self, f: &Polynomial, budget: Budget) -> Result<bool> {
        if self.contains(f, budget)? {
            return Ok(true);
        }
        let n = self.nvars;
        let gb: Vec<Polynomial> = self.groebner(budget)?.iter().map(|g| g.insert_vars(n, 1)).collect();
        // grevlex with y last restricts to grevlex on the old variables, so
        // the old basis stays a Gröbner basis in the bigger ring
        let mut state = GroebnerState::from_groebner_basis(n + 1, MonomialOrder::GrevLex, budget, &gb);
        let y = Polynomial::var(n + 1, n);
        let rabinowitsch = &Polynomial::one(n + 1) - &(&y * &f.insert_vars(n, 1));
        state.add(&rabinowitsch)?;
        state.run()?;
        Ok(state.is_unit())
    }

    /// `Z(self) ⊆ Z(other)`.
    pub fn variety_subset(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        for g in &other.gens {
            if !self.radical_contains(g, budget)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn variety_equal(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        Ok(self.variety_subset(other, budget)? && other.variety_subset(self, budget)?)
    }

    /// `Z(self) ∖ {0} ⊆ Z(other)`: every `g·z_j` lies in `√self`.
    pub fn variety_subset_away_from_origin(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        for g in &other.gens {
            if self.radical_contains(g, budget)? {
                continue;
            }
            for j in 0..self.nvars {
                let gz = g * &Polynomial::var(self.nvars, j);
                if !self.radical_contains(&gz, budget)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Equality of zero sets after removing the origin from both.
    pub fn variety_equal_away_from_origin(&self, other: &Ideal, budget: Budget) -> Result<bool> {
        Ok(self.variety_subset_away_from_origin(other, budget)?
            && other.variety_subset_away_from_origin(self, budget)?)
    }

    /// `Z(self) ⊆ ⋃ comps` (together with the origin if asked).
    pub fn variety_subset_union(
        &self,
        comps: &[LinearSubspace],
        include_origin: bool,
        budget: Budget,
    ) -> Result<bool> {
        if let Some(c) = comps.iter().find(|c| c.ambient() != self.nvars) {
            return Err(Error::AmbientMismatch {
                expected: self.nvars,
                found: c.ambient(),
            });
        }
        let union = union_of_subspaces(self.nvars, comps, include_origin, budget)?;
        self.variety_subset(&union, budget)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ideal::new(self.nvars, g)
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        let mut g = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ideal::new(self.nvars, g)
    }

    /// Drop the first `block` variables after computing an elimination basis
    /// of the ideal generated by `gens` in the bigger ring.
    fn eliminate_front(nvars: usize, gens: &[Polynomial], block: usize, budget: Budget) -> Result<Ideal> {
        let gb = groebner_basis(gens, MonomialOrder::Elimination { block }, budget)?;
        let kept: Vec<Polynomial> = gb
            .into_iter()
            .filter(|g| (0..block).all(|v| g.degree_in(v) == 0))
            .map(|g| g.drop_vars_at_zero(0..block))
            .collect();
        // restriction of a reduced elimination basis is the reduced basis of
        // the elimination ideal for the trailing grevlex block
        Ok(Ideal::with_basis(nvars, kept))
    }

    /// `I ∩ J` as `(t·I + (1 − t)·J) ∩ k[x]`.
    pub fn intersect(&self, other: &Ideal, budget: Budget) -> Result<Ideal> {
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.nvars));
        }
        let n = self.nvars;
        let t = Polynomial::var(n + 1, 0);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| &t * &g.insert_vars(0, 1)).collect();
        gens.extend(other.gens.iter().map(|g| &one_minus_t * &g.insert_vars(0, 1)));
        Self::eliminate_front(n, &gens, 1, budget)
    }

    /// `I : f^∞`, by eliminating `z` from `I + (1 − z·f)`.
    pub fn saturate(&self, f: &Polynomial, budget: Budget) -> Result<Ideal> {
        let n = self.nvars;
        let mut gens: Vec<Polynomial> = self.gens.iter().map(|g| g.insert_vars(0, 1)).collect();
        let z = Polynomial::var(n + 1, 0);
        gens.push(&Polynomial::one(n + 1) - &(&z * &f.insert_vars(0, 1)));
        Self::eliminate_front(n, &gens, 1, budget)
    }

    /// The ideal of initial forms (lowest-degree parts) of all elements,
    /// whose zero set is the tangent cone at the origin.
    ///
    /// Each generator `f` of order `d` becomes `y^{-d}·f(y·x)`; saturating
    /// by `y` and then setting `y = 0` leaves the initial ideal.
    pub fn tangent_cone(&self, budget: Budget) -> Result<Ideal> {
        Ok(self.tangent_cone_with_check(budget)?.0)
    }

    /// As [`Ideal::tangent_cone`], also reporting whether the saturated
    /// basis avoided `y` (it always should).
    pub fn tangent_cone_with_check(&self, budget: Budget) -> Result<(Ideal, bool)> {
        let n = self.nvars;
        if self.is_zero() {
            return Ok((Ideal::zero(n), true));
        }
        if self.gens.iter().all(Polynomial::is_homogeneous) {
            return Ok((self.clone(), true));
        }
        if self.gens.len() == 1 {
            return Ok((Ideal::new(n, vec![self.gens[0].initial_form()]), true));
        }
        // variables: z (eliminated), x_1..x_n, y
        let m = n + 2;
        let mut gens = Vec::with_capacity(self.gens.len() + 1);
        for f in &self.gens {
            let d = f.order().unwrap();
            gens.push(Polynomial::from_terms(
                m,
                f.terms().map(|(mono, c)| {
                    let lifted = mono.insert_vars(0, 1).insert_vars(n + 1, 1);
                    let with_y = lifted.with_exp(n + 1, (mono.degree() - d) as u16);
                    (with_y, c.clone())
                }),
            ));
        }
        let z = Polynomial::var(m, 0);
        let y = Polynomial::var(m, n + 1);
        gens.push(&Polynomial::one(m) - &(&z * &y));
        let saturated = Self::eliminate_front(n + 1, &gens, 1, budget)?;
        let y_free = saturated.gens.iter().all(|g| {
            g.terms().any(|(mono, _)| mono.exp(n) == 0)
        });
        let cone: Vec<Polynomial> = saturated
            .gens
            .iter()
            .map(|g| g.drop_vars_at_zero(n..n + 1))
            .collect();
        let cone = Ideal::new(n, cone);
        let gb = cone.groebner(budget)?.to_vec();
        Ok((Ideal::with_basis(n, gb), y_free))
    }

    /// Substitute a polynomial for each variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Ideal {
        let n = images.first().map_or(0, Polynomial::nvars);
        Ideal::new(n, self.gens.iter().map(|g| g.substitute(images)).collect())
    }

    /// True when every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[Rat]) -> bool {
        self.gens.iter().all(|g| num_traits::Zero::is_zero(&g.eval(point)))
    }

    pub fn to_json(&self, vars: &[String]) -> IdealJson {
        IdealJson {
            vars: vars.to_vec(),
            gens: self.gens.iter().map(|g| g.to_string_with(vars)).collect(),
        }
    }

    pub fn from_json(j: &IdealJson) -> Result<Ideal> {
        let n = j.vars.len();
        let gens = j
            .gens
            .iter()
            .map(|s| parse_polynomial(s, &j.vars))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(n, gens))
    }

    /// Generators in canonical display form.
    pub fn gen_strings(&self, vars: &[String]) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string_with(vars)).collect()
    }
}

/// Ideal of a finite union of linear subspaces (plus the origin if asked).
pub fn union_of_subspaces(
    n: usize,
    comps: &[LinearSubspace],
    include_origin: bool,
    budget: Budget,
) -> Result<Ideal> {
    let mut ideals: Vec<Ideal> = comps.iter().map(LinearSubspace::ideal).collect();
    if include_origin {
        ideals.push(Ideal::origin(n));
    }
    let Some(first) = ideals.first().cloned() else {
        return Ok(Ideal::unit(n));
    };
    let mut acc = first;
    for next in &ideals[1..] {
        // a subspace already inside the union adds nothing
        if !acc.contains_ideal(next, budget)? {
            acc = acc.intersect(next, budget)?;
        }
    }
    Ok(acc)
}
