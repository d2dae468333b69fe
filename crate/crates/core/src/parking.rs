//! Parking functions, the labelling map `φ`, runs, schedules, major-index
//! tables, `cars(σ)` and the monomial bases of the coinvariant ring built
//! from them.
//!
//! A parking function labels row `i` (bottom row first) of a Dyck path with
//! `σ_i`; labels increase from bottom to top inside each vertical wall.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{check_cap, Error, Result};
use crate::paths::{enumerate_dyck, AreaSequence, DinvSequence, DyckPath};
use crate::perm::Perm;
use crate::poly::Monomial;

pub const MAX_BASIS_N: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParkingFunction {
    path: DyckPath,
    sigma: Perm,
}

impl ParkingFunction {
    pub fn new(path: DyckPath, sigma: Perm) -> Result<Self> {
        if path.n() != sigma.len() {
            return Err(Error::Dimension {
                expected: path.n(),
                found: sigma.len(),
            });
        }
        let a = path.area_sequence();
        for i in 0..a.0.len().saturating_sub(1) {
            let same_wall = a.0[i + 1] == a.0[i] + 1;
            if same_wall && sigma.apply(i) > sigma.apply(i + 1) {
                return Err(Error::InvalidParkingFunction(format!(
                    "labels {} must increase up the wall at rows {}-{} of {}",
                    sigma,
                    i + 1,
                    i + 2,
                    path
                )));
            }
        }
        Ok(ParkingFunction { path, sigma })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn sigma(&self) -> &Perm {
        &self.sigma
    }

    pub fn n(&self) -> usize {
        self.path.n()
    }

    pub fn area_sequence(&self) -> AreaSequence {
        self.path.area_sequence()
    }

    /// `d_i = #{ j > i : (a_i = a_j ∧ σ_i < σ_j) ∨ (a_i = a_j + 1 ∧ σ_i > σ_j) }`.
    pub fn dinv_sequence(&self) -> DinvSequence {
        let a = self.area_sequence().0;
        let s = self.sigma.images();
        DinvSequence(
            (0..a.len())
                .map(|i| {
                    (i + 1..a.len())
                        .filter(|&j| {
                            (a[i] == a[j] && s[i] < s[j]) || (a[i] == a[j] + 1 && s[i] > s[j])
                        })
                        .count()
                })
                .collect(),
        )
    }

    /// Entry `j` is the area of the row carrying label `j`.
    pub fn maj_sequence(&self) -> Vec<usize> {
        let a = self.area_sequence().0;
        let inv = self.sigma.inverse();
        (0..a.len()).map(|j| a[inv.apply(j)]).collect()
    }

    /// `Π_i x_{σ_i}^{d_i} y_{σ_i}^{a_i}`.
    pub fn basis_monomial(&self) -> Monomial {
        let n = self.n();
        let a = self.area_sequence().0;
        let d = self.dinv_sequence().0;
        let mut exps = vec![0u16; 2 * n];
        for i in 0..n {
            let v = self.sigma.apply(i);
            exps[v] = d[i] as u16;
            exps[n + v] = a[i] as u16;
        }
        Monomial::from_raw(exps)
    }

    pub fn to_json(&self) -> Value {
        json!({ "word": self.path.to_string(), "sigma": self.sigma.one_line() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let word = v
            .get("word")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("parking function JSON: missing word".into()))?;
        let sigma: Vec<usize> = v
            .get("sigma")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("parking function JSON: missing sigma".into()))?
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Parse("parking function JSON: bad sigma".into()))?;
        ParkingFunction::new(DyckPath::parse(word)?, Perm::from_one_line(&sigma)?)
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.path, self.sigma)
    }
}

pub fn pf_basis_monomial(p: &ParkingFunction) -> Monomial {
    p.basis_monomial()
}

/// Labels rows by increasing area, ties broken bottom to top.
pub fn phi(path: &DyckPath) -> ParkingFunction {
    let a = path.area_sequence().0;
    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by_key(|&i| (a[i], i));
    let mut labels = vec![0; a.len()];
    for (label, &row) in order.iter().enumerate() {
        labels[row] = label;
    }
    let sigma = Perm::new(labels).expect("labels are a permutation");
    ParkingFunction::new(path.clone(), sigma).expect("φ yields a parking function")
}

/// Maximal increasing consecutive runs of `σ`, as one-based values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunDecomposition(pub Vec<Vec<usize>>);

impl RunDecomposition {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero-based index of the run containing the (one-based) value `v`.
    pub fn run_of(&self, v: usize) -> usize {
        self.0
            .iter()
            .position(|r| r.contains(&v))
            .expect("value occurs in some run")
    }
}

pub fn runs(sigma: &Perm) -> RunDecomposition {
    let vals = sigma.one_line();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for v in vals {
        match out.last_mut() {
            Some(r) if *r.last().unwrap() < v => r.push(v),
            _ => out.push(vec![v]),
        }
    }
    RunDecomposition(out)
}

/// `maj(σ)_{σ_i} = #{ j ≥ i : σ_j > σ_{j+1} }`, indexed by value.
pub fn maj_table(sigma: &Perm) -> Vec<usize> {
    let s = sigma.images();
    let n = s.len();
    let mut out = vec![0; n];
    let mut descents_after = 0;
    for i in (0..n).rev() {
        if i + 1 < n && s[i] > s[i + 1] {
            descents_after += 1;
        }
        out[s[i]] = descents_after;
    }
    out
}

/// `sch_i = #{k ∈ r_j : k > σ_i} + #{k ∈ r_{j+1} : k < σ_i}` where `r_j` is the
/// run of `σ_i`; after the last run comes a virtual run `{0}`.
pub fn schedule(sigma: &Perm) -> Vec<usize> {
    let r = runs(sigma);
    sigma
        .one_line()
        .iter()
        .map(|&v| {
            let j = r.run_of(v);
            let larger = r.0[j].iter().filter(|&&k| k > v).count();
            let smaller_next = match r.0.get(j + 1) {
                Some(next) => next.iter().filter(|&&k| k < v).count(),
                None => 1,
            };
            larger + smaller_next
        })
        .collect()
}

/// Parking functions whose rows of area `i` carry exactly the labels of the
/// run `r_{ℓ-i}` (one-based runs, `ℓ` runs in total). Sorted by `(path, σ)`.
pub fn cars(sigma: &Perm) -> Result<Vec<ParkingFunction>> {
    let n = sigma.len();
    check_cap("n", n, MAX_BASIS_N)?;
    let r = runs(sigma);
    let l = r.len();
    // labels_by_area[i] = zero-based labels that must sit in rows of area i
    let labels_by_area: Vec<Vec<usize>> = (0..l)
        .map(|i| r.0[l - 1 - i].iter().map(|v| v - 1).collect())
        .collect();
    let mut out = Vec::new();
    for path in enumerate_dyck(n)? {
        let a = path.area_sequence().0;
        let rows_by_area: Vec<Vec<usize>> = (0..l)
            .map(|i| (0..n).filter(|&row| a[row] == i).collect())
            .collect();
        if a.iter().any(|&ai| ai >= l)
            || rows_by_area
                .iter()
                .zip(&labels_by_area)
                .any(|(rows, labels)| rows.len() != labels.len())
        {
            continue;
        }
        let mut labels = vec![0usize; n];
        assign_labels(
            &path,
            &rows_by_area,
            &labels_by_area,
            0,
            &mut labels,
            &mut out,
        );
    }
    out.sort();
    Ok(out)
}

fn assign_labels(
    path: &DyckPath,
    rows_by_area: &[Vec<usize>],
    labels_by_area: &[Vec<usize>],
    level: usize,
    labels: &mut Vec<usize>,
    out: &mut Vec<ParkingFunction>,
) {
    if level == rows_by_area.len() {
        let sigma = Perm::new(labels.clone()).expect("labels form a permutation");
        if let Ok(p) = ParkingFunction::new(path.clone(), sigma) {
            out.push(p);
        }
        return;
    }
    let rows = &rows_by_area[level];
    for (images, _) in crate::perm::Permutations::new(rows.len()) {
        for (k, &row) in rows.iter().enumerate() {
            labels[row] = labels_by_area[level][images[k]];
        }
        assign_labels(path, rows_by_area, labels_by_area, level + 1, labels, out);
    }
}

/// All parking functions of size `n`, sorted by `(path, σ)`.
pub fn enumerate_parking(n: usize) -> Result<Vec<ParkingFunction>> {
    check_cap("n", n, MAX_BASIS_N)?;
    let mut out = Vec::new();
    for path in enumerate_dyck(n)? {
        for sigma in Perm::all(n) {
            if let Ok(p) = ParkingFunction::new(path.clone(), sigma) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// The monomials `y^{maj(σ)} Π x_{σ_i}^{k_i}` with `0 ≤ k_i < sch_i(σ)`,
/// over all `σ` in lexicographic order.
pub fn co_basis(n: usize) -> Result<Vec<Monomial>> {
    check_cap("n", n, MAX_BASIS_N)?;
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    for sigma in Perm::all(n) {
        let maj = maj_table(&sigma);
        let sch = schedule(&sigma);
        let mut k = vec![0usize; n];
        loop {
            let mut exps = vec![0u16; 2 * n];
            for i in 0..n {
                exps[sigma.apply(i)] = k[i] as u16;
                exps[n + i] = maj[i] as u16;
            }
            out.push(Monomial::from_raw(exps));
            // odometer over the box Π [0, sch_i)
            let mut exhausted = true;
            for i in (0..n).rev() {
                k[i] += 1;
                if k[i] < sch[i] {
                    exhausted = false;
                    break;
                }
                k[i] = 0;
            }
            if exhausted {
                break;
            }
        }
    }
    let distinct: BTreeSet<&Monomial> = out.iter().collect();
    if distinct.len() != out.len() {
        return Err(Error::Falsified(format!(
            "co_basis({n}) produced repeated monomials"
        )));
    }
    Ok(out)
}

/// One line of the per-permutation table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationRow {
    pub sigma: Perm,
    pub maj: Vec<usize>,
    pub schedule: Vec<usize>,
    pub cars: usize,
}

pub fn permutation_table(n: usize) -> Result<Vec<PermutationRow>> {
    Perm::all(n)
        .map(|sigma| {
            Ok(PermutationRow {
                maj: maj_table(&sigma),
                schedule: schedule(&sigma),
                cars: cars(&sigma)?.len(),
                sigma,
            })
        })
        .collect()
}

/// `(k_1, …, k_n)` with `k_i` the dinv of the row carrying car `σ_i`; this is
/// the exponent of `x_{σ_i}` in the basis monomial.
pub fn car_dinv(p: &ParkingFunction, sigma: &Perm) -> Vec<usize> {
    let d = p.dinv_sequence().0;
    let row_of = p.sigma.inverse();
    sigma.images().iter().map(|&v| d[row_of.apply(v)]).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CarsCheck {
    pub size: usize,
    /// `maj(P) = maj(σ)` for every `P ∈ cars(σ)`.
    pub maj_matches: bool,
    /// The multiset `{car_dinv(P, σ)}` is exactly `Π_i {0, …, sch_i − 1}`.
    pub fills_schedule_box: bool,
}

pub fn check_cars(sigma: &Perm) -> Result<CarsCheck> {
    let parking = cars(sigma)?;
    let maj = maj_table(sigma);
    let sch = schedule(sigma);
    let mut seen = BTreeSet::new();
    let mut in_box = true;
    for p in &parking {
        let k = car_dinv(p, sigma);
        in_box &= k.iter().zip(&sch).all(|(k, s)| k < s);
        seen.insert(k);
    }
    let volume: usize = sch.iter().product();
    Ok(CarsCheck {
        size: parking.len(),
        maj_matches: parking.iter().all(|p| p.maj_sequence() == maj),
        fills_schedule_box: in_box && seen.len() == parking.len() && parking.len() == volume,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(word: &str, sigma: &[usize]) -> ParkingFunction {
        ParkingFunction::new(
            DyckPath::parse(word).unwrap(),
            Perm::from_one_line(sigma).unwrap(),
        )
        .unwrap()
    }

    fn perm(s: &[usize]) -> Perm {
        Perm::from_one_line(s).unwrap()
    }

    fn mono(n: usize, s: &str) -> Monomial {
        crate::poly::Poly::parse(n, s)
            .unwrap()
            .leading_term()
            .unwrap()
            .0
            .clone()
    }

    #[test]
    fn dinv_pf_examples() {
        assert_eq!(pf("NNENEE", &[2, 3, 1]).dinv_sequence().0, vec![0, 0, 0]);
        assert_eq!(pf("NENNEE", &[1, 2, 3]).dinv_sequence().0, vec![1, 0, 0]);
        // decreasing reading order, distinct areas
        assert_eq!(pf("NNNEEE", &[1, 2, 3]).dinv_sequence().0, vec![0, 0, 0]);
        assert_eq!(pf("NENENE", &[3, 2, 1]).dinv_sequence().0, vec![0, 0, 0]);
    }

    #[test]
    fn maj_sequence_examples() {
        assert_eq!(pf("NNENEE", &[2, 3, 1]).maj_sequence(), vec![1, 0, 1]);
        assert_eq!(pf("NNENEE", &[1, 2, 3]).maj_sequence(), vec![0, 1, 1]);
        assert_eq!(pf("NENENE", &[3, 1, 2]).maj_sequence(), vec![0, 0, 0]);
    }

    #[test]
    fn wall_labels_must_increase() {
        let bad = ParkingFunction::new(DyckPath::parse("NNEE").unwrap(), perm(&[2, 1]));
        assert!(bad.is_err());
    }

    #[test]
    fn phi_examples() {
        let fig2 = DyckPath::parse("NNENNEEENE").unwrap();
        assert_eq!(phi(&fig2).sigma().one_line(), vec![1, 3, 4, 5, 2]);
        assert_eq!(
            phi(&DyckPath::parse("NNNEEE").unwrap()).sigma().one_line(),
            vec![1, 2, 3]
        );
        assert_eq!(
            phi(&DyckPath::parse("NENENE").unwrap()).sigma().one_line(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn table_one_columns() {
        let expected = [
            ([1, 2, 3], [0, 0, 0], [3, 2, 1]),
            ([1, 3, 2], [1, 0, 1], [1, 1, 1]),
            ([2, 1, 3], [0, 1, 0], [1, 2, 1]),
            ([2, 3, 1], [0, 1, 1], [2, 1, 1]),
            ([3, 1, 2], [0, 0, 1], [2, 2, 1]),
            ([3, 2, 1], [0, 1, 2], [1, 1, 1]),
        ];
        for (s, maj, sch) in expected {
            let sigma = perm(&s);
            assert_eq!(maj_table(&sigma), maj.to_vec(), "maj of {sigma}");
            assert_eq!(schedule(&sigma), sch.to_vec(), "schedule of {sigma}");
        }
        assert_eq!(runs(&perm(&[3, 1, 2])).0, vec![vec![3], vec![1, 2]]);
    }

    #[test]
    fn cars_examples() {
        let c = cars(&perm(&[3, 1, 2])).unwrap();
        assert_eq!(c.len(), 4);
        let dinvs: BTreeSet<Vec<usize>> = c.iter().map(|p| p.dinv_sequence().0).collect();
        let expected: BTreeSet<Vec<usize>> = [[0, 0, 0], [0, 1, 0], [1, 0, 0], [1, 1, 0]]
            .iter()
            .map(|v| v.to_vec())
            .collect();
        assert_eq!(dinvs, expected);
        assert_eq!(cars(&perm(&[1, 2, 3])).unwrap().len(), 6);
        assert_eq!(cars(&perm(&[3, 2, 1])).unwrap().len(), 1);
        for p in &c {
            assert_eq!(p.maj_sequence(), maj_table(&perm(&[3, 1, 2])));
        }
    }

    #[test]
    fn co_basis_examples() {
        let listed = [
            "x1^2*x2", "x1^2", "x1*x2", "x1", "x2", "1", "y1*y3", "x1*y2", "y2", "x2*y2*y3",
            "y2*y3", "x1*x3*y3", "x1*y3", "x3*y3", "y3", "y2*y3^2",
        ];
        let expected: BTreeSet<Monomial> = listed.iter().map(|s| mono(3, s)).collect();
        let got: BTreeSet<Monomial> = co_basis(3).unwrap().into_iter().collect();
        assert_eq!(got, expected);
        assert_eq!(co_basis(1).unwrap(), vec![Monomial::one(1)]);
        let two: BTreeSet<Monomial> = co_basis(2).unwrap().into_iter().collect();
        let expected: BTreeSet<Monomial> = ["1", "x1", "y2"].iter().map(|s| mono(2, s)).collect();
        assert_eq!(two, expected);
    }

    #[test]
    fn basis_monomial_examples() {
        assert_eq!(pf("NNENEE", &[2, 3, 1]).basis_monomial(), mono(3, "y1*y3"));
        assert_eq!(pf("NENNEE", &[1, 2, 3]).basis_monomial(), mono(3, "x1*y3"));
        assert_eq!(
            pf("NNNEEE", &[1, 2, 3]).basis_monomial(),
            mono(3, "y2*y3^2")
        );
    }

    #[test]
    fn area_dinv_census_n3() {
        // All 16 labelled paths at n = 3 with their basis monomials.
        let pfs = enumerate_parking(3).unwrap();
        assert_eq!(pfs.len(), 16);
        let got: BTreeSet<Monomial> = pfs.iter().map(|p| p.basis_monomial()).collect();
        let expected: BTreeSet<Monomial> = co_basis(3).unwrap().into_iter().collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn json_round_trip() {
        let p = pf("NNEENE", &[2, 3, 1]);
        let v = p.to_json();
        assert_eq!(v.to_string(), r#"{"word":"NNEENE","sigma":[2,3,1]}"#);
        assert_eq!(ParkingFunction::from_json(&v).unwrap(), p);
    }

    #[test]
    fn cars_fill_schedule_box() {
        for n in 1..=5 {
            for s in Perm::all(n) {
                let c = check_cars(&s).unwrap();
                assert!(c.maj_matches && c.fills_schedule_box, "σ = {s}");
            }
        }
        // row order would not do: for σ = 213 the nonzero dinv sits in row 1
        let s = perm(&[2, 1, 3]);
        let rows: BTreeSet<Vec<usize>> = cars(&s)
            .unwrap()
            .iter()
            .map(|p| p.dinv_sequence().0)
            .collect();
        assert!(rows.contains(&vec![1, 0, 0]));
        assert_eq!(schedule(&s), vec![1, 2, 1]);
    }

    #[test]
    fn co_basis_is_parking_monomials() {
        for n in 1..=5 {
            let got: BTreeSet<Monomial> = enumerate_parking(n)
                .unwrap()
                .iter()
                .map(|p| p.basis_monomial())
                .collect();
            let expected: BTreeSet<Monomial> = co_basis(n).unwrap().into_iter().collect();
            assert_eq!(got, expected, "n = {n}");
        }
    }
}
