//! Diagonal harmonic alternants built from the x-Vandermonde by the operators
//! `E_j = Σ_i y_i ∂_{x_i}^j`, and Schur functions pushed through
//! `ψ(p_μ) = E_μ Δ`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{check_cap, Error, Result};
use crate::linalg::RationalEchelon;
use crate::partition::Partition;
use crate::paths::{binomial, enumerate_dyck};
use crate::poly::{BiDegree, Poly, Rational, Var};
use crate::vandermonde::{delta, ExponentSet};

pub const MAX_MN_SIZE: usize = 20;
pub const MAX_REPORT_N: usize = 5;

/// `det(x_i^{n−j})`, which expands to `Π_{i<j} (x_i − x_j)`.
pub fn vandermonde_x(n: usize) -> Poly {
    let x = ExponentSet((0..n as u32).rev().map(|a| (a, 0)).collect());
    delta(&x, n).expect("x-Vandermonde within the determinant cap")
}

/// `E_j f = Σ_i y_i ∂_{x_i}^j f`.
pub fn apply_e(j: u32, f: &Poly) -> Poly {
    let n = f.n();
    let mut out = Poly::zero(n);
    for i in 0..n {
        let d = f.partial(Var::X(i), j);
        if !d.is_zero() {
            out = &out + &(&d * &Poly::y(n, i));
        }
    }
    out
}

/// Applies `E_{seq[0]}` first, then `E_{seq[1]}`, and so on.
pub fn e_sequence_delta(seq: &[usize], n: usize) -> Poly {
    let mut f = vandermonde_x(n);
    for &j in seq {
        if f.is_zero() {
            break;
        }
        f = apply_e(j as u32, &f);
    }
    f
}

/// `E_μ Δ = E_{μ_ℓ} ⋯ E_{μ_1} Δ`, with `E_{μ_1}` applied first.
pub fn e_mu_delta(mu: &Partition, n: usize) -> Poly {
    e_sequence_delta(mu.parts(), n)
}

pub fn e_mu_bidegree(mu: &Partition, n: usize) -> Option<BiDegree> {
    let top = binomial(n, 2) as usize;
    (mu.size() <= top).then(|| BiDegree::new((top - mu.size()) as u32, mu.len() as u32))
}

/// `z_μ = Π_i i^{m_i} m_i!`.
pub fn z_mu(mu: &Partition) -> BigInt {
    let mut z = BigInt::one();
    for (i, &m) in mu.multiplicities().iter().enumerate() {
        for k in 1..=m {
            z *= i * k;
        }
    }
    z
}

/// `χ^λ(μ)` by border-strip removal on the beta-set (abacus) of `λ`.
pub fn character(lambda: &Partition, mu: &Partition) -> BigInt {
    if lambda.size() != mu.size() {
        return BigInt::zero();
    }
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    let mut memo = HashMap::new();
    strip(beta, mu.parts(), &mut memo)
}

fn strip(
    beta: Vec<usize>,
    mu: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigInt>,
) -> BigInt {
    let Some((&r, rest)) = mu.split_first() else {
        return BigInt::one();
    };
    let key = (beta, mu.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let beta = &key.0;
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut next = beta.clone();
        next[idx] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = strip(next, rest, memo);
        if between % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo.insert(key, total.clone());
    total
}

/// `s_λ = Σ_μ c_μ p_μ` with `c_μ = χ^λ(μ)/z_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumExpansion {
    pub coeffs: BTreeMap<Partition, Rational>,
}

impl PowerSumExpansion {
    pub fn coeff(&self, mu: &Partition) -> Rational {
        self.coeffs.get(mu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn to_json(&self) -> Value {
        Value::Object(
            self.coeffs
                .iter()
                .map(|(mu, c)| (mu.to_string(), json!(c.to_string())))
                .collect(),
        )
    }
}

pub fn mn_expansion(lambda: &Partition) -> Result<PowerSumExpansion> {
    check_cap("|λ| (Murnaghan–Nakayama)", lambda.size(), MAX_MN_SIZE)?;
    let mut coeffs = BTreeMap::new();
    for mu in Partition::all(lambda.size()) {
        let chi = character(lambda, &mu);
        if !chi.is_zero() {
            coeffs.insert(mu.clone(), Rational::new(chi, z_mu(&mu)));
        }
    }
    Ok(PowerSumExpansion { coeffs })
}

/// `Σ_μ χ^λ(μ) χ^ν(μ) / z_μ = δ_{λν}` over all `|λ| = |ν| = size`.
pub fn mn_orthogonality(size: usize) -> bool {
    let parts = Partition::all(size);
    parts.iter().all(|l| {
        parts.iter().all(|v| {
            let s: Rational = parts
                .iter()
                .map(|mu| Rational::new(character(l, mu) * character(v, mu), z_mu(mu)))
                .sum();
            s == if l == v {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    })
}

/// `ψ(s_λ) = Σ_μ c_μ E_μ Δ`.
pub fn psi_schur(lambda: &Partition, n: usize) -> Result<Poly> {
    let exp = mn_expansion(lambda)?;
    let mut out = Poly::zero(n);
    if lambda.size() > binomial(n, 2) as usize {
        return Ok(out);
    }
    for (mu, c) in &exp.coeffs {
        out = &out + &e_mu_delta(mu, n).scale(c);
    }
    Ok(out)
}

/// True iff `Σ_i ∂_{x_i}^h ∂_{y_i}^k f = 0` for all `1 ≤ h+k ≤ deg f`.
pub fn harmonicity_check(f: &Poly, n: usize) -> bool {
    let deg = f.total_degree();
    for s in 1..=deg {
        for h in 0..=s {
            let mut acc = Poly::zero(n);
            for i in 0..n {
                acc = &acc + &f.partial_xy(i, h, s - h);
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Partitions of `size` with exactly `len` parts, each at most `max`, ascending.
fn bounded_partitions(size: usize, len: usize, max: usize) -> Vec<Partition> {
    Partition::all(size)
        .into_iter()
        .filter(|p| p.len() == len && p.parts().first().is_none_or(|&x| x <= max))
        .collect()
}

#[derive(Clone, Debug)]
pub struct GzSelection {
    pub n: usize,
    pub area: usize,
    pub dinv: usize,
    /// Weakly increasing sequences `r_1 ≤ … ≤ r_b`, in candidate order.
    pub candidates: Vec<Vec<usize>>,
    pub selected: Vec<Vec<usize>>,
    /// `#{π : area = a, dinv = b}`.
    pub census: usize,
}

impl GzSelection {
    pub fn matches_census(&self) -> bool {
        self.selected.len() == self.census
    }

    pub fn selected_partitions(&self) -> Vec<Partition> {
        self.selected
            .iter()
            .map(|r| Partition::from_unsorted(r.clone()))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "area": self.area,
            "dinv": self.dinv,
            "candidates": self.candidates,
            "selected": self.selected,
            "census": self.census,
            "matches_census": self.matches_census(),
        })
    }
}

fn census(n: usize) -> Result<HashMap<(usize, usize), usize>> {
    let mut c = HashMap::new();
    for p in enumerate_dyck(n)? {
        *c.entry((p.area(), p.dinv())).or_default() += 1;
    }
    Ok(c)
}

/// Greedy independent subset of `{E_{r_1}⋯E_{r_b} Δ}` with `Σ r = C(n,2) − a`.
/// Candidates are visited as partitions in increasing lex order, so `(2,2)`
/// is tried before `(3,1)`.
pub fn gz_selection(n: usize, a: usize, b: usize) -> Result<GzSelection> {
    check_cap("n (harmonics)", n, MAX_REPORT_N)?;
    let census = census(n)?.get(&(a, b)).copied().unwrap_or(0);
    Ok(gz_selection_with_census(n, a, b, census))
}

fn gz_selection_with_census(n: usize, a: usize, b: usize, census: usize) -> GzSelection {
    let top = binomial(n, 2) as usize;
    let mut candidates = Vec::new();
    let mut selected = Vec::new();
    if a <= top && b > 0 {
        let mut ech = RationalEchelon::new();
        for mu in bounded_partitions(top - a, b, n) {
            let mut r = mu.parts().to_vec();
            r.reverse();
            let f = e_mu_delta(&mu, n);
            if ech.insert(&f) {
                selected.push(r.clone());
            }
            candidates.push(r);
        }
    } else if a == top && b == 0 {
        candidates.push(Vec::new());
        selected.push(Vec::new());
    }
    GzSelection {
        n,
        area: a,
        dinv: b,
        candidates,
        selected,
        census,
    }
}

/// All bidegrees `(a, b)` with a nonempty census or candidate list.
pub fn gz_selection_all(n: usize) -> Result<Vec<GzSelection>> {
    check_cap("n (harmonics)", n, MAX_REPORT_N)?;
    let census = census(n)?;
    let top = binomial(n, 2) as usize;
    let grid: Vec<(usize, usize)> = (0..=top)
        .flat_map(|a| (0..=top).map(move |b| (a, b)))
        .collect();
    Ok(grid
        .into_par_iter()
        .map(|(a, b)| gz_selection_with_census(n, a, b, census.get(&(a, b)).copied().unwrap_or(0)))
        .collect::<Vec<_>>()
        .into_iter()
        .filter(|s| s.census > 0 || !s.candidates.is_empty())
        .collect())
}

#[derive(Clone, Debug)]
pub struct ChangeOfBasisBlock {
    pub area: usize,
    pub paths: Vec<String>,
    pub dg: Vec<Partition>,
    /// Selected `E_μ Δ`, grouped by `ℓ(μ)` ascending.
    pub basis: Vec<Partition>,
    /// Row `i` holds the coordinates of `ψ(s_{dg(π_i)})` in `basis`.
    pub matrix: Vec<Vec<Rational>>,
    pub rank: usize,
    pub determinant: Option<Rational>,
    pub failures: Vec<String>,
}

impl ChangeOfBasisBlock {
    pub fn square(&self) -> bool {
        self.matrix.len() == self.basis.len()
    }

    pub fn invertible(&self) -> bool {
        self.failures.is_empty() && self.square() && self.rank == self.basis.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "area": self.area,
            "paths": self.paths,
            "dg": self.dg.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "basis": self.basis.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "matrix": self.matrix.iter()
                .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
            "rank": self.rank,
            "determinant": self.determinant.as_ref().map(|d| d.to_string()),
            "square": self.square(),
            "invertible": self.invertible(),
            "failures": self.failures,
        })
    }
}

#[derive(Clone, Debug)]
pub struct ChangeOfBasisReport {
    pub n: usize,
    pub blocks: Vec<ChangeOfBasisBlock>,
}

impl ChangeOfBasisReport {
    pub fn all_invertible(&self) -> bool {
        self.blocks.iter().all(ChangeOfBasisBlock::invertible)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "pairing": "rows follow path enumeration order; no bijection between paths and E-sequences is assumed",
            "all_invertible": self.all_invertible(),
            "blocks": self.blocks.iter().map(ChangeOfBasisBlock::to_json).collect::<Vec<_>>(),
        })
    }
}

/// For each area `a`, writes `ψ(s_{dg(π)})` over the paths of area `a` in the
/// union over `b` of the selected `E_μ Δ` of bidegree `(a, b)`.
pub fn change_of_basis_report(n: usize) -> Result<ChangeOfBasisReport> {
    check_cap("n (change of basis)", n, MAX_REPORT_N)?;
    let paths = enumerate_dyck(n)?;
    let selections = gz_selection_all(n)?;
    let mut areas: BTreeMap<usize, Vec<(String, Partition)>> = BTreeMap::new();
    for p in &paths {
        areas
            .entry(p.area())
            .or_default()
            .push((p.to_string(), p.dg_partition()));
    }
    let blocks = areas
        .into_par_iter()
        .map(|(area, members)| {
            let mut basis: Vec<Partition> = Vec::new();
            for s in selections.iter().filter(|s| s.area == area) {
                basis.extend(s.selected_partitions());
            }
            let mut ech = RationalEchelon::new();
            for mu in &basis {
                ech.insert(&e_mu_delta(mu, n));
            }
            let mut failures = Vec::new();
            let mut matrix = Vec::new();
            for (word, lambda) in &members {
                let f = psi_schur(lambda, n)?;
                match ech.express(&f) {
                    Some(c) => matrix.push(c),
                    None => {
                        failures.push(format!(
                            "ψ(s_{lambda}) for {word} is outside the span of the selected E_μΔ"
                        ));
                        matrix.push(vec![Rational::zero(); basis.len()]);
                    }
                }
            }
            let (rank, determinant) = rank_and_det(&matrix);
            Ok(ChangeOfBasisBlock {
                area,
                paths: members.iter().map(|m| m.0.clone()).collect(),
                dg: members.into_iter().map(|m| m.1).collect(),
                basis,
                matrix,
                rank,
                determinant,
                failures,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ChangeOfBasisReport { n, blocks })
}

/// Rank, and the determinant when square, by Gaussian elimination over `Q`.
pub fn rank_and_det(m: &[Vec<Rational>]) -> (usize, Option<Rational>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.to_vec();
    let mut det = Rational::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            det = Rational::zero();
            continue;
        };
        if p != r {
            a.swap(p, r);
            det = -det;
        }
        let piv = a[r][c].clone();
        det *= &piv;
        for i in r + 1..rows {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &piv;
            let (top, bottom) = a.split_at_mut(i);
            for (dst, src) in bottom[0][c..cols].iter_mut().zip(&top[r][c..cols]) {
                *dst -= &f * src;
            }
        }
        r += 1;
        if r == rows {
            if c + 1 < cols {
                det = Rational::zero();
            }
            break;
        }
    }
    (r, (rows == cols).then_some(det))
}

/// Exact `c` with `E_{2,2}Δ = c·E_{3,1}Δ` at `n = 4`.
pub fn e22_over_e31() -> Result<Rational> {
    let e22 = e_mu_delta(&Partition::new(vec![2, 2])?, 4);
    let e31 = e_mu_delta(&Partition::new(vec![3, 1])?, 4);
    e22.ratio_to(&e31)
        .ok_or_else(|| Error::Falsified("E_{2,2}Δ is not proportional to E_{3,1}Δ".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn expansion(pairs: &[(&[usize], i64, i64)]) -> PowerSumExpansion {
        PowerSumExpansion {
            coeffs: pairs
                .iter()
                .map(|(p, a, b)| (part(p), rat(*a, *b)))
                .collect(),
        }
    }

    #[test]
    fn vandermonde_small() {
        assert_eq!(vandermonde_x(1), Poly::one(1));
        assert_eq!(vandermonde_x(2), Poly::parse(2, "x1 - x2").unwrap());
        let p = |s| Poly::parse(3, s).unwrap();
        let prod = &(&p("x1 - x2") * &p("x2 - x3")) * &p("x1 - x3");
        assert_eq!(vandermonde_x(3), prod);
    }

    #[test]
    fn e_operators() {
        let d2 = vandermonde_x(2);
        assert_eq!(apply_e(1, &d2), Poly::parse(2, "y1 - y2").unwrap());
        assert!(apply_e(3, &Poly::one(3)).is_zero());
        assert!(apply_e(4, &vandermonde_x(4)).is_zero());
        assert!(e_mu_delta(&part(&[4]), 4).is_zero());
        assert_eq!(
            e_mu_delta(&part(&[1]), 2),
            Poly::parse(2, "y1 - y2").unwrap()
        );
    }

    #[test]
    fn e_operators_commute_on_delta() {
        // derived by hand from Δ_3 = (x1−x2)(x1−x3)(x2−x3)
        let e2 = Poly::parse(
            3,
            "2*x2*y1 - 2*x3*y1 - 2*x1*y2 + 2*x3*y2 + 2*x1*y3 - 2*x2*y3",
        )
        .unwrap();
        assert_eq!(e_sequence_delta(&[2], 3), e2);
        assert!(e_sequence_delta(&[1, 2], 3).is_zero());
        assert!(e_sequence_delta(&[2, 1], 3).is_zero());
        for mu in [[1usize, 2], [1, 3], [2, 3]] {
            let r: Vec<usize> = mu.iter().rev().copied().collect();
            assert_eq!(e_sequence_delta(&mu, 4), e_sequence_delta(&r, 4));
        }
    }

    #[test]
    fn schur_expansions_small() {
        let cases: Vec<(Vec<usize>, PowerSumExpansion)> = vec![
            (
                vec![3],
                expansion(&[(&[1, 1, 1], 1, 6), (&[2, 1], 1, 2), (&[3], 1, 3)]),
            ),
            (vec![2, 1], expansion(&[(&[1, 1, 1], 1, 3), (&[3], -1, 3)])),
            (
                vec![1, 1, 1],
                expansion(&[(&[1, 1, 1], 1, 6), (&[2, 1], -1, 2), (&[3], 1, 3)]),
            ),
            (
                vec![3, 1],
                expansion(&[
                    (&[1, 1, 1, 1], 1, 8),
                    (&[2, 1, 1], 1, 4),
                    (&[2, 2], -1, 8),
                    (&[4], -1, 4),
                ]),
            ),
            (
                vec![2, 2],
                expansion(&[(&[1, 1, 1, 1], 1, 12), (&[2, 2], 1, 4), (&[3, 1], -1, 3)]),
            ),
            (
                vec![2, 1, 1],
                expansion(&[
                    (&[1, 1, 1, 1], 1, 8),
                    (&[2, 1, 1], -1, 4),
                    (&[2, 2], -1, 8),
                    (&[4], 1, 4),
                ]),
            ),
            (vec![1], expansion(&[(&[1], 1, 1)])),
        ];
        for (l, e) in cases {
            assert_eq!(mn_expansion(&part(&l)).unwrap(), e, "λ = {l:?}");
        }
    }

    /// `χ^λ(μ) = [x^{λ+δ}] a_δ · p_μ` in `ℓ(λ)` variables.
    fn frobenius(lambda: &Partition, mu: &Partition) -> i64 {
        type P = BTreeMap<Vec<u32>, i64>;
        let l = lambda.len();
        let mul = |a: &P, b: &P| {
            let mut out = P::new();
            for (ea, ca) in a {
                for (eb, cb) in b {
                    let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                    *out.entry(e).or_insert(0) += ca * cb;
                }
            }
            out.retain(|_, c| *c != 0);
            out
        };
        let mut acc = P::new();
        for (sigma, sign) in crate::perm::Permutations::new(l) {
            let e: Vec<u32> = sigma.iter().map(|&s| (l - 1 - s) as u32).collect();
            acc.insert(e, sign as i64);
        }
        for &r in mu.parts() {
            let mut p = P::new();
            for i in 0..l {
                let mut e = vec![0; l];
                e[i] = r as u32;
                p.insert(e, 1);
            }
            acc = mul(&acc, &p);
        }
        let target: Vec<u32> = lambda
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &p)| (p + l - 1 - i) as u32)
            .collect();
        acc.get(&target).copied().unwrap_or(0)
    }

    #[test]
    fn characters_match_frobenius_formula() {
        for size in 1..=7 {
            for l in Partition::all(size) {
                for mu in Partition::all(size) {
                    assert_eq!(
                        character(&l, &mu),
                        BigInt::from(frobenius(&l, &mu)),
                        "{l} {mu}"
                    );
                }
            }
        }
        for size in 1..=6 {
            assert!(mn_orthogonality(size));
        }
        assert_eq!(z_mu(&part(&[2, 2])), BigInt::from(8));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(
            psi_schur(&part(&[1]), 2).unwrap(),
            Poly::parse(2, "y1 - y2").unwrap()
        );
        let combo = &(&e_mu_delta(&part(&[1, 1, 1]), 4).scale(&rat(1, 6))
            + &e_mu_delta(&part(&[2, 1]), 4).scale(&rat(1, 2)))
            + &e_mu_delta(&part(&[3]), 4).scale(&rat(1, 3));
        assert_eq!(psi_schur(&part(&[3]), 4).unwrap(), combo);
        assert!(psi_schur(&part(&[2, 2]), 3).unwrap().is_zero());
    }

    #[test]
    fn bidegree_law_and_harmonicity() {
        for n in 1..=4 {
            for size in 0..=binomial(n, 2) as usize {
                for mu in Partition::all(size) {
                    let f = e_mu_delta(&mu, n);
                    if !f.is_zero() {
                        assert_eq!(f.bidegree(), e_mu_bidegree(&mu, n));
                    }
                    assert!(harmonicity_check(&f, n), "E_{mu}Δ at n = {n}");
                }
            }
        }
        assert!(harmonicity_check(&vandermonde_x(3), 3));
        assert!(!harmonicity_check(&Poly::parse(2, "x1 + x2").unwrap(), 2));
    }

    #[test]
    fn proportional_pair() {
        let c = e22_over_e31().unwrap();
        assert!(!c.is_zero());
        let e22 = e_mu_delta(&part(&[2, 2]), 4);
        let e31 = e_mu_delta(&part(&[3, 1]), 4);
        assert!(!e22.is_zero());
        assert_eq!(e31.scale(&c), e22);
    }

    #[test]
    fn selections() {
        let s = gz_selection(2, 0, 1).unwrap();
        assert_eq!(s.selected, vec![vec![1]]);
        assert!(s.matches_census());
        let s = gz_selection(4, 3, 3).unwrap();
        assert_eq!(s.candidates, vec![vec![1, 1, 1]]);
        assert_eq!(s.census, 1);
        assert!(s.matches_census());
        let mut area2 = Vec::new();
        for b in 0..=6 {
            area2.extend(gz_selection(4, 2, b).unwrap().selected_partitions());
        }
        assert_eq!(
            area2,
            vec![part(&[2, 2]), part(&[2, 1, 1]), part(&[1, 1, 1, 1])]
        );
        for n in 1..=4 {
            for s in gz_selection_all(n).unwrap() {
                assert!(
                    s.matches_census(),
                    "n = {n}, (a,b) = ({}, {})",
                    s.area,
                    s.dinv
                );
            }
        }
    }

    #[test]
    fn change_of_basis() {
        let r = change_of_basis_report(2).unwrap();
        assert!(r
            .blocks
            .iter()
            .all(|b| b.matrix.len() == 1 && b.invertible()));
        let r = change_of_basis_report(3).unwrap();
        assert_eq!(r.blocks.iter().map(|b| b.paths.len()).sum::<usize>(), 5);
        let r = change_of_basis_report(4).unwrap();
        let b3 = r.blocks.iter().find(|b| b.area == 3).unwrap();
        assert_eq!(b3.basis, vec![part(&[3]), part(&[2, 1]), part(&[1, 1, 1])]);
        assert_eq!(b3.rank, 3);
        assert!(b3.invertible());
    }

    #[test]
    fn rank_det() {
        let m = vec![
            vec![rat(1, 6), rat(1, 2), rat(1, 3)],
            vec![rat(1, 3), rat(0, 1), rat(-1, 3)],
            vec![rat(1, 6), rat(-1, 2), rat(1, 3)],
        ];
        let (r, d) = rank_and_det(&m);
        assert_eq!(r, 3);
        // 1/6·(0 − 1/6) − 1/2·(1/9 + 1/18) + 1/3·(−1/6 − 0)
        assert_eq!(d, Some(rat(-1, 36) - rat(1, 12) - rat(1, 18)));
        let (r, d) = rank_and_det(&[vec![rat(1, 1), rat(2, 1)], vec![rat(2, 1), rat(4, 1)]]);
        assert_eq!((r, d), (1, Some(rat(0, 1))));
    }
}
