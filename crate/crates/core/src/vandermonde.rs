//! Bivariate Vandermonde determinants `Δ_X = det(x_i^{α_j} y_i^{β_j})` and
//! the path-indexed exponent sets `X(π) = ((d_i, a_i))_i`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{check_cap, Error, Result};
use crate::parking::phi;
use crate::paths::{enumerate_dyck, DyckPath};
use crate::perm::{sign_of, Permutations};
use crate::poly::{BiDegree, Monomial, Poly, Rational};

pub const MAX_DELTA_N: usize = 9;

/// Ordered exponent pairs `(α_j, β_j)`, one per determinant column.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentSet(pub Vec<(u32, u32)>);

impl ExponentSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bidegree(&self) -> BiDegree {
        BiDegree::new(
            self.0.iter().map(|p| p.0).sum(),
            self.0.iter().map(|p| p.1).sum(),
        )
    }

    /// True iff some pair repeats, i.e. `Δ_X = 0`.
    pub fn is_degenerate(&self) -> bool {
        let set: BTreeSet<_> = self.0.iter().collect();
        set.len() != self.0.len()
    }

    pub fn sorted(&self) -> ExponentSet {
        let mut v = self.0.clone();
        v.sort_unstable();
        ExponentSet(v)
    }

    /// Sign of the column permutation that sorts the pairs, or `None` if degenerate.
    pub fn sort_sign(&self) -> Option<i32> {
        if self.is_degenerate() {
            return None;
        }
        let sorted = self.sorted();
        let ranks: Vec<usize> = self
            .0
            .iter()
            .map(|p| sorted.0.binary_search(p).unwrap())
            .collect();
        Some(sign_of(&ranks))
    }

    pub fn to_json(&self) -> Value {
        json!({ "pairs": self.0.iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("exponent set JSON: expected {\"pairs\":[[a,b],..]}".into());
        let pairs = v.get("pairs").and_then(Value::as_array).ok_or_else(bad)?;
        pairs
            .iter()
            .map(|p| {
                let p = p.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
                let a = p[0].as_u64().ok_or_else(bad)? as u32;
                let b = p[1].as_u64().ok_or_else(bad)? as u32;
                Ok((a, b))
            })
            .collect::<Result<Vec<_>>>()
            .map(ExponentSet)
    }
}

impl fmt::Display for ExponentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(a, b)| format!("({a},{b})")).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn is_degenerate(x: &ExponentSet) -> bool {
    x.is_degenerate()
}

/// `X(π) = ((d_i(π), a_i(π)))` in row order.
pub fn x_of_path(path: &DyckPath) -> ExponentSet {
    let a = path.area_sequence().0;
    let d = path.dinv_sequence().0;
    ExponentSet(
        d.iter()
            .zip(&a)
            .map(|(&d, &a)| (d as u32, a as u32))
            .collect(),
    )
}

/// Full signed-permutation expansion of `Δ_X` in `n` points.
pub fn delta(x: &ExponentSet, n: usize) -> Result<Poly> {
    if x.len() != n {
        return Err(Error::Dimension {
            expected: n,
            found: x.len(),
        });
    }
    check_cap("n", n, MAX_DELTA_N)?;
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    if x.is_degenerate() {
        return Ok(Poly::zero(n));
    }
    let pairs = &x.0;
    let one = Rational::from_integer(1.into());
    let minus_one = -one.clone();
    // each permutation contributes a single monomial; distinct pairs make them distinct
    let terms: Vec<(Monomial, bool)> = if n >= 7 {
        let blocks: Vec<usize> = (0..n).collect();
        blocks
            .par_iter()
            .flat_map_iter(|&first| expansion_block(pairs, first))
            .collect()
    } else {
        (0..n)
            .flat_map(|first| expansion_block(pairs, first))
            .collect()
    };
    Ok(Poly::from_terms(
        n,
        terms
            .into_iter()
            .map(|(m, pos)| (m, if pos { one.clone() } else { minus_one.clone() })),
    ))
}

/// Terms for permutations `τ` with `τ(0) = first`.
fn expansion_block(pairs: &[(u32, u32)], first: usize) -> Vec<(Monomial, bool)> {
    let n = pairs.len();
    let rest: Vec<usize> = (0..n).filter(|&j| j != first).collect();
    // sign of [first, rest...] relative to identity is (-1)^first
    let base_sign = if first.is_multiple_of(2) { 1 } else { -1 };
    let mut out = Vec::with_capacity(crate::perm::factorial(n - 1));
    for (images, sign) in Permutations::new(n - 1) {
        let mut exps = vec![0u16; 2 * n];
        exps[0] = pairs[first].0 as u16;
        exps[n] = pairs[first].1 as u16;
        for (i, &k) in images.iter().enumerate() {
            let (a, b) = pairs[rest[k]];
            exps[i + 1] = a as u16;
            exps[n + i + 1] = b as u16;
        }
        out.push((Monomial::from_raw(exps), base_sign * sign > 0));
    }
    out
}

/// Coefficient of a monomial in `Δ_X` without expanding: the unique column
/// assignment matching the monomial's exponent pairs, if any.
pub fn delta_coefficient(x: &ExponentSet, m: &Monomial) -> i32 {
    if x.len() != m.n() || x.is_degenerate() {
        return 0;
    }
    let mut tau = Vec::with_capacity(x.len());
    for pair in m.pairs() {
        match x.0.iter().position(|&p| p == pair) {
            Some(j) => tau.push(j),
            None => return 0,
        }
    }
    let distinct: BTreeSet<_> = tau.iter().collect();
    if distinct.len() != tau.len() {
        return 0;
    }
    sign_of(&tau)
}

/// The monomial `σ(y^{area(φ(π))} x^{dinv(φ(π))})` together with its
/// coefficient in `Δ_{X(π)}`. The coefficient must be `±1`.
pub fn co_monomial(path: &DyckPath) -> Result<(Monomial, i32)> {
    let m = phi(path).basis_monomial();
    let c = delta_coefficient(&x_of_path(path), &m);
    if c.abs() != 1 {
        return Err(Error::Falsified(format!(
            "monomial {m} has coefficient {c} in Δ_X(π) for π = {path}"
        )));
    }
    Ok((m, c))
}

/// True iff the `Catalan(n)` underlying sets of `X(π)` are pairwise distinct.
pub fn verify_distinct_sets(n: usize) -> Result<(bool, usize)> {
    let paths = enumerate_dyck(n)?;
    let sets: BTreeSet<ExponentSet> = paths.iter().map(|p| x_of_path(p).sorted()).collect();
    Ok((sets.len() == paths.len(), sets.len()))
}

/// Report for the leading-monomial mechanism over all paths of size `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoMonomialReport {
    pub n: usize,
    pub paths: usize,
    pub distinct_monomials: usize,
    pub all_unit_coefficients: bool,
}

impl CoMonomialReport {
    pub fn injective(&self) -> bool {
        self.all_unit_coefficients && self.distinct_monomials == self.paths
    }
}

pub fn co_monomial_report(n: usize) -> Result<CoMonomialReport> {
    let paths = enumerate_dyck(n)?;
    let results: Vec<Result<(Monomial, i32)>> = paths.par_iter().map(co_monomial).collect();
    let mut monos = BTreeSet::new();
    let mut unit = true;
    for r in results {
        match r {
            Ok((m, _)) => {
                monos.insert(m);
            }
            Err(Error::Falsified(_)) => unit = false,
            Err(e) => return Err(e),
        }
    }
    Ok(CoMonomialReport {
        n,
        paths: paths.len(),
        distinct_monomials: monos.len(),
        all_unit_coefficients: unit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;

    fn d(s: &str) -> DyckPath {
        DyckPath::parse(s).unwrap()
    }

    fn xs(v: &[(u32, u32)]) -> ExponentSet {
        ExponentSet(v.to_vec())
    }

    fn p(n: usize, s: &str) -> Poly {
        Poly::parse(n, s).unwrap()
    }

    #[test]
    fn x_of_path_examples() {
        assert_eq!(x_of_path(&d("NNNEEE")), xs(&[(0, 0), (0, 1), (0, 2)]));
        assert_eq!(x_of_path(&d("NENENE")), xs(&[(2, 0), (1, 0), (0, 0)]));
        assert_eq!(x_of_path(&d("NNEENE")), xs(&[(1, 0), (1, 1), (0, 0)]));
    }

    #[test]
    fn delta_examples() {
        let y_vdm = &(&p(3, "y1 - y2") * &p(3, "y2 - y3")) * &p(3, "y1 - y3");
        let got = delta(&xs(&[(0, 0), (0, 1), (0, 2)]), 3).unwrap();
        assert!(got == y_vdm || got == -&y_vdm);
        let second = p(3, "x1*y2 - x1*y3 - x2*y1 + x2*y3 + x3*y1 - x3*y2");
        let got = delta(&xs(&[(1, 0), (0, 0), (0, 1)]), 3).unwrap();
        assert!(got == second || got == -&second);
        assert!(delta(&xs(&[(1, 0), (1, 0), (0, 1)]), 3).unwrap().is_zero());
        assert!(delta(&xs(&[(1, 0)]), 2).is_err());
    }

    #[test]
    fn degenerate_examples() {
        assert!(is_degenerate(&xs(&[(0, 0), (0, 0)])));
        assert!(!is_degenerate(&xs(&[(1, 0), (0, 1)])));
        for n in 1..=6 {
            for path in enumerate_dyck(n).unwrap() {
                assert!(!is_degenerate(&x_of_path(&path)));
            }
        }
    }

    #[test]
    fn co_monomial_examples() {
        let (m, c) = co_monomial(&d("NNNEEE")).unwrap();
        assert_eq!(m.to_string(), "y2*y3^2");
        let full = delta(&x_of_path(&d("NNNEEE")), 3).unwrap();
        assert_eq!(full.coefficient(&m), Rational::from_integer(c.into()));

        let (m, c) = co_monomial(&d("NENENE")).unwrap();
        assert_eq!(m.to_string(), "x1^2*x2");
        let full = delta(&x_of_path(&d("NENENE")), 3).unwrap();
        assert_eq!(full.coefficient(&m), Rational::from_integer(c.into()));

        let (m, c) = co_monomial(&d("NE")).unwrap();
        assert!(m.is_one());
        assert_eq!(c, 1);
    }

    #[test]
    fn coefficient_shortcut_matches_expansion() {
        for n in 1..=5 {
            for path in enumerate_dyck(n).unwrap() {
                let x = x_of_path(&path);
                let full = delta(&x, n).unwrap();
                assert_eq!(full.len(), crate::perm::factorial(n));
                for (m, c) in full.terms() {
                    assert_eq!(Rational::from_integer(delta_coefficient(&x, m).into()), *c);
                }
                let (m, c) = co_monomial(&path).unwrap();
                assert_eq!(full.coefficient(&m), Rational::from_integer(c.into()));
            }
        }
    }

    #[test]
    fn distinct_sets() {
        assert_eq!(verify_distinct_sets(3).unwrap(), (true, 5));
        assert_eq!(verify_distinct_sets(1).unwrap(), (true, 1));
        assert_eq!(verify_distinct_sets(8).unwrap(), (true, 1430));
    }

    #[test]
    fn delta_is_alternating_and_equivariant() {
        let sets = [
            xs(&[(0, 0), (1, 0), (0, 1)]),
            xs(&[(2, 1), (0, 3), (1, 1), (0, 0)]),
            xs(&[(1, 2), (0, 0)]),
        ];
        for x in &sets {
            let n = x.len();
            let f = delta(x, n).unwrap();
            for t in 0..n - 1 {
                let tr = Perm::adjacent_transposition(n, t);
                assert_eq!(f.permute(&tr).unwrap(), -&f);
            }
            for sigma in Perm::all(n) {
                let permuted = ExponentSet((0..n).map(|j| x.0[sigma.apply(j)]).collect());
                let g = delta(&permuted, n).unwrap();
                assert_eq!(g, f.scale(&Rational::from_integer(sigma.sign().into())));
            }
            assert_eq!(f.bidegree(), Some(x.bidegree()));
        }
    }

    #[test]
    fn sort_sign_matches_column_permutation() {
        let x = xs(&[(2, 0), (1, 0), (0, 0)]);
        let f = delta(&x, 3).unwrap();
        let g = delta(&x.sorted(), 3).unwrap();
        assert_eq!(
            f,
            g.scale(&Rational::from_integer(x.sort_sign().unwrap().into()))
        );
        assert_eq!(xs(&[(0, 0), (0, 0)]).sort_sign(), None);
    }

    #[test]
    fn json_round_trip() {
        let x = xs(&[(0, 0), (1, 1), (0, 1)]);
        assert_eq!(x.to_json().to_string(), r#"{"pairs":[[0,0],[1,1],[0,1]]}"#);
        assert_eq!(ExponentSet::from_json(&x.to_json()).unwrap(), x);
    }
}
