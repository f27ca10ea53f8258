//! Degree-two Magnus coefficients and the cup-product data they determine.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::presentation::GroupPresentation;
use super::word::Word;
use crate::error::{Error, Result};
use crate::polyalg::linear::rref;
use crate::polyalg::Rat;

/// Position of `e_p ∧ e_q` (`p < q`) in the lexicographic basis of `∧²Q^n`.
pub fn pair_index(p: usize, q: usize, n: usize) -> usize {
    debug_assert!(p < q && q < n);
    p * (2 * n - p - 1) / 2 + (q - p - 1)
}

/// All pairs `(p, q)` with `p < q < n`, in basis order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|p| (p + 1..n).map(move |q| (p, q))).collect()
}

/// Degree-≤2 truncation of the Magnus expansion `x_g ↦ 1 + X_g`.
#[derive(Clone, Debug)]
struct Series {
    lin: Vec<i128>,
    quad: Vec<Vec<i128>>,
}

impl Series {
    fn one(n: usize) -> Self {
        Series {
            lin: vec![0; n],
            quad: vec![vec![0; n]; n],
        }
    }

    /// `(1+X)^k = 1 + kX + C(k,2)X² + …`
    fn power(n: usize, g: usize, k: i32) -> Self {
        let mut s = Self::one(n);
        let k = k as i128;
        s.lin[g] = k;
        s.quad[g][g] = k * (k - 1) / 2;
        s
    }

    fn mul(&self, other: &Series) -> Series {
        let n = self.lin.len();
        let mut out = Series::one(n);
        for p in 0..n {
            out.lin[p] = self.lin[p] + other.lin[p];
            for q in 0..n {
                out.quad[p][q] = self.quad[p][q] + other.quad[p][q] + self.lin[p] * other.lin[q];
            }
        }
        out
    }
}

/// Class of a commutator relator in `gr₂(F) ≅ ∧²H₁`: the coefficient of
/// `e_p∧e_q` is the Magnus coefficient of `X_p X_q`.
pub fn magnus_quadratic(w: &Word, n: usize) -> Result<Vec<Rat>> {
    let mut s = Series::one(n);
    for &(g, e) in w.letters() {
        s = s.mul(&Series::power(n, g, e));
    }
    if s.lin.iter().any(|&x| x != 0) {
        return Err(Error::UnsupportedPresentation("non-commutator relator".into()));
    }
    Ok(pairs(n)
        .into_iter()
        .map(|(p, q)| Rat::from_integer(BigInt::from(s.quad[p][q])))
        .collect())
}

/// Dimension of `H¹` and a normalized spanning set of the relation classes
/// in `∧²H₁` (the image of the dual of the cup product).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CupStructure {
    pub n: usize,
    pub relation_classes: Vec<Vec<Rat>>,
}

impl CupStructure {
    /// Normalizes: reduced row echelon form, each row rescaled to coprime
    /// integers with positive leading entry, zero rows dropped.
    pub fn new(n: usize, classes: Vec<Vec<Rat>>) -> Result<Self> {
        let dim = n * n.saturating_sub(1) / 2;
        if let Some(c) = classes.iter().find(|c| c.len() != dim) {
            return Err(Error::AmbientMismatch {
                expected: dim,
                found: c.len(),
            });
        }
        let mut rows = classes;
        rref(&mut rows);
        for row in rows.iter_mut() {
            primitive(row);
        }
        Ok(CupStructure {
            n,
            relation_classes: rows,
        })
    }

    /// Classes `e_p ∧ e_q` for each listed pair (0-based, any order).
    pub fn from_pairs(n: usize, edges: &[(usize, usize)]) -> Self {
        let dim = n * n.saturating_sub(1) / 2;
        let classes = edges
            .iter()
            .map(|&(a, b)| {
                let (p, q, sign) = if a < b { (a, b, 1) } else { (b, a, -1) };
                let mut v = vec![Rat::zero(); dim];
                v[pair_index(p, q, n)] = Rat::from_integer(sign.into());
                v
            })
            .collect();
        Self::new(n, classes).expect("pairs in range")
    }

    /// The zero cup product on `n` classes.
    pub fn zero(n: usize) -> Self {
        CupStructure {
            n,
            relation_classes: vec![],
        }
    }

    pub fn num_classes(&self) -> usize {
        self.relation_classes.len()
    }

    /// True when the cup product vanishes identically, i.e. there are no
    /// relation classes to pair against.
    pub fn is_zero(&self) -> bool {
        self.relation_classes.is_empty()
    }

    /// Coefficient of `e_p ∧ e_q` in class `j`, antisymmetrically extended.
    pub fn coefficient(&self, j: usize, p: usize, q: usize) -> Rat {
        match p.cmp(&q) {
            std::cmp::Ordering::Less => self.relation_classes[j][pair_index(p, q, self.n)].clone(),
            std::cmp::Ordering::Greater => -self.relation_classes[j][pair_index(q, p, self.n)].clone(),
            std::cmp::Ordering::Equal => Rat::zero(),
        }
    }

    /// Cup-file text (1-based indices).
    pub fn to_text(&self) -> String {
        let mut s = format!("h1 {}\n", self.n);
        let ps = pairs(self.n);
        for class in &self.relation_classes {
            let terms: Vec<String> = class
                .iter()
                .zip(&ps)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, (p, q))| format!("{c} on {} {}", p + 1, q + 1))
                .collect();
            s.push_str("class ");
            s.push_str(&terms.join(" + "));
            s.push('\n');
        }
        s
    }
}

fn primitive(row: &mut [Rat]) {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    for c in row.iter() {
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
    }
    if num.is_zero() {
        return;
    }
    let mut f = Rat::new(den, num);
    if row.iter().find(|c| !c.is_zero()).unwrap().is_negative() {
        f = -f;
    }
    for c in row.iter_mut() {
        *c *= &f;
    }
}

/// Cup structure of a presentation whose relators all lie in the commutator
/// subgroup.
pub fn cup_structure(p: &GroupPresentation) -> Result<CupStructure> {
    let n = p.num_generators();
    let mut classes = Vec::with_capacity(p.num_relators());
    for r in &p.relators {
        classes.push(magnus_quadratic(r, n).map_err(|_| {
            Error::UnsupportedPresentation(format!(
                "relator `{}` has nonzero abelianization",
                r.display_with(&p.generator_names)
            ))
        })?);
    }
    CupStructure::new(n, classes)
}

/// Parse a cup-structure file:
///
/// ```text
/// h1 4
/// class 2 on 1 3 + 1 on 1 4
/// class 1 on 2 4
/// ```
///
/// Each `class` line is one relation class, a `+`-separated sum of
/// `<coefficient> on <p> <q>` with 1-based indices `p ≠ q`. A bare
/// `class <c> on <p> <q>` triple is the one-term case.
pub fn parse_cup_file(text: &str) -> Result<CupStructure> {
    let mut n: Option<usize> = None;
    let mut classes = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (kw, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match kw {
            "h1" => {
                if n.is_some() {
                    return Err(Error::syntax(line_no, 1, "duplicate `h1` line"));
                }
                n = Some(rest.trim().parse().map_err(|_| Error::syntax(line_no, 4, "expected a dimension"))?);
            }
            "class" => {
                let Some(n) = n else {
                    return Err(Error::syntax(line_no, 1, "`class` before `h1`"));
                };
                let mut v = vec![Rat::zero(); n * n.saturating_sub(1) / 2];
                for term in rest.split('+') {
                    let toks: Vec<&str> = term.split_whitespace().collect();
                    if toks.len() == 1 && toks[0] == "0" {
                        continue;
                    }
                    if toks.len() != 4 || toks[1] != "on" {
                        return Err(Error::syntax(line_no, 7, format!("expected `<c> on <p> <q>`, found `{}`", term.trim())));
                    }
                    let c = parse_rat(toks[0]).ok_or_else(|| Error::syntax(line_no, 7, format!("bad coefficient `{}`", toks[0])))?;
                    let idx = |s: &str| -> Result<usize> {
                        match s.parse::<usize>() {
                            Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                            _ => Err(Error::syntax(line_no, 7, format!("index `{s}` not in 1..={n}"))),
                        }
                    };
                    let (p, q) = (idx(toks[2])?, idx(toks[3])?);
                    match p.cmp(&q) {
                        std::cmp::Ordering::Less => v[pair_index(p, q, n)] += c,
                        std::cmp::Ordering::Greater => v[pair_index(q, p, n)] -= c,
                        std::cmp::Ordering::Equal => {
                            return Err(Error::syntax(line_no, 7, "e_p ∧ e_p is zero; indices must differ"))
                        }
                    }
                }
                classes.push(v);
            }
            other => return Err(Error::syntax(line_no, 1, format!("unknown keyword `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::syntax(1, 1, "missing `h1` line"))?;
    CupStructure::new(n, classes)
}

pub(crate) fn parse_rat(s: &str) -> Option<Rat> {
    match s.split_once('/') {
        Some((a, b)) => {
            let d: BigInt = b.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(a.parse().ok()?, d))
        }
        None => Some(Rat::from_integer(s.parse().ok()?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgroup::parse_presentation;

    fn r(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    #[test]
    fn pair_indexing() {
        let n = 5;
        for (k, (p, q)) in pairs(n).into_iter().enumerate() {
            assert_eq!(pair_index(p, q, n), k);
        }
    }

    #[test]
    fn magnus_examples() {
        let x = Word::generator(0);
        let y = Word::generator(1);
        let c = Word::commutator(&x, &y);
        assert_eq!(magnus_quadratic(&c, 2).unwrap(), vec![r(1)]);
        let cc = Word::commutator(&c, &x);
        assert_eq!(magnus_quadratic(&cc, 2).unwrap(), vec![r(0)]);
        let p = parse_presentation("gens x1 x2 x3 x4\nrel (x1, x3^2 x4)").unwrap();
        // basis: 12 13 14 23 24 34
        assert_eq!(
            magnus_quadratic(&p.relators[0], 4).unwrap(),
            vec![r(0), r(2), r(1), r(0), r(0), r(0)]
        );
        assert!(magnus_quadratic(&x, 2).is_err());
    }

    #[test]
    fn cup_structures() {
        let h = parse_presentation("gens x y\nrel ((x,y),x)\nrel ((x,y),y)").unwrap();
        assert!(cup_structure(&h).unwrap().is_zero());
        let t = parse_presentation("gens x y\nrel x y x y^-1 x^-1 y^-1").unwrap();
        assert!(matches!(cup_structure(&t), Err(Error::UnsupportedPresentation(_))));
        let p3 = parse_presentation("gens a b c\nrel (a,b)\nrel (b,c)").unwrap();
        let c = cup_structure(&p3).unwrap();
        assert_eq!(c, CupStructure::from_pairs(3, &[(0, 1), (1, 2)]));
    }

    #[test]
    fn cup_file_round_trip() {
        let text = "h1 4\nclass 2 on 1 3 + 1 on 1 4\nclass 1 on 2 4\nclass -1/2 on 4 3\n";
        let c = parse_cup_file(text).unwrap();
        assert_eq!(c.num_classes(), 3);
        assert_eq!(parse_cup_file(&c.to_text()).unwrap(), c);
        assert!(parse_cup_file("h1 2\nclass 1 on 1 3").is_err());
    }
}
