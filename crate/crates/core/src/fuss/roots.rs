//! Type `A_{n−1}` root poset. The positive root `e_i − e_{j+1}` is stored as
//! the interval `[i, j] ⊆ [1, n−1]`; `α ≤ β` iff `α ⊆ β`, and `α + β` is a root
//! iff the two intervals are adjacent.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::{check_cap, Error, Result};
use crate::paths::{AreaSequence, DyckPath};

pub const MAX_IDEAL_N: usize = 8;
pub const MAX_CHAIN_N: usize = 5;
pub const MAX_CHAIN_M: usize = 3;

pub type Root = (usize, usize);

pub fn positive_roots(n: usize) -> Vec<Root> {
    (1..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect()
}

/// `α + β` if it is a root.
pub fn root_sum(a: Root, b: Root) -> Option<Root> {
    if a.1 + 1 == b.0 {
        Some((a.0, b.1))
    } else if b.1 + 1 == a.0 {
        Some((b.0, a.1))
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootIdeal {
    n: usize,
    roots: BTreeSet<Root>,
}

impl RootIdeal {
    pub fn new(n: usize, roots: impl IntoIterator<Item = Root>) -> Result<Self> {
        let roots: BTreeSet<Root> = roots.into_iter().collect();
        for &(i, j) in &roots {
            if i < 1 || i > j || j >= n {
                return Err(Error::InvalidIdeal(format!(
                    "[{i},{j}] is not a positive root of A_{}",
                    n - 1
                )));
            }
            let below = [(i + 1, j), (i, j.wrapping_sub(1))];
            for r in below {
                if r.0 <= r.1 && r.1 >= 1 && !roots.contains(&r) {
                    return Err(Error::InvalidIdeal(format!(
                        "[{i},{j}] is in the ideal but [{},{}] is not",
                        r.0, r.1
                    )));
                }
            }
        }
        Ok(RootIdeal { n, roots })
    }

    pub fn empty(n: usize) -> Self {
        RootIdeal {
            n,
            roots: BTreeSet::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        RootIdeal {
            n,
            roots: positive_roots(n).into_iter().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn roots(&self) -> &BTreeSet<Root> {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn is_subset(&self, other: &RootIdeal) -> bool {
        self.roots.is_subset(&other.roots)
    }

    /// `Φ⁺ \ I`.
    pub fn complement(&self) -> BTreeSet<Root> {
        positive_roots(self.n)
            .into_iter()
            .filter(|r| !self.roots.contains(r))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .roots
            .iter()
            .map(|&(i, j)| json!([i, j]))
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for RootIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .roots
            .iter()
            .map(|(i, j)| format!("[{i},{j}]"))
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All order ideals, in the order of their Dyck paths' area sequences.
pub fn enumerate_ideals(n: usize) -> Result<Vec<RootIdeal>> {
    check_cap("n (root ideals)", n, MAX_IDEAL_N)?;
    Ok(crate::paths::enumerate_dyck(n)?
        .iter()
        .map(dyck_to_ideal)
        .collect())
}

/// Row `i` (1-based) has area `#{[k, i−1] ∈ I}`; the roots ending at `j` are
/// always a final segment `[j−c+1, j], …, [j, j]`.
pub fn ideal_to_dyck(ideal: &RootIdeal) -> DyckPath {
    DyckPath::from_area_sequence(&ideal_area(ideal)).expect("order ideals give Dyck area sequences")
}

pub fn ideal_area(ideal: &RootIdeal) -> AreaSequence {
    let mut a = vec![0; ideal.n];
    for &(_, j) in &ideal.roots {
        a[j] += 1;
    }
    AreaSequence(a)
}

pub fn dyck_to_ideal(path: &DyckPath) -> RootIdeal {
    let a = path.area_sequence().0;
    let n = a.len();
    let mut roots = BTreeSet::new();
    for (row, &c) in a.iter().enumerate().skip(1) {
        let j = row;
        for k in 0..c {
            roots.insert((j - k, j));
        }
    }
    RootIdeal { n, roots }
}

/// Which sum appears in the first closure condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainCondition {
    /// `(I_i + I_j) ∩ Φ⁺ ⊆ I_{i+j}`, Athanasiadis' definition.
    IdealSums,
    /// `(I_i + J_j) ∩ Φ⁺ ⊆ I_{i+j}`.
    IdealPlusComplement,
    /// `(I_i + J_i) ∩ Φ⁺ ⊆ I_{i+j}`, with the same index on both ideals.
    SameIndex,
}

impl ChainCondition {
    pub const ALL: [ChainCondition; 3] = [
        ChainCondition::IdealSums,
        ChainCondition::IdealPlusComplement,
        ChainCondition::SameIndex,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ChainCondition::IdealSums => "(I_i + I_j)",
            ChainCondition::IdealPlusComplement => "(I_i + J_j)",
            ChainCondition::SameIndex => "(I_i + J_i)",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainVerdict {
    Filtered,
    NotIncreasing {
        at: usize,
    },
    /// `(A_i + B_j) ∩ Φ⁺` escapes `I_{i+j}`.
    FirstConditionFails {
        i: usize,
        j: usize,
        root: Root,
    },
    /// `(J_i + J_j) ∩ Φ⁺` escapes `J_{i+j}`.
    SecondConditionFails {
        i: usize,
        j: usize,
        root: Root,
    },
}

pub fn chain_verdict(ideals: &[RootIdeal], cond: ChainCondition) -> ChainVerdict {
    let m = ideals.len();
    for k in 1..m {
        if !ideals[k - 1].is_subset(&ideals[k]) {
            return ChainVerdict::NotIncreasing { at: k };
        }
    }
    let comps: Vec<BTreeSet<Root>> = ideals.iter().map(RootIdeal::complement).collect();
    let ideal_set = |i: usize| &ideals[i - 1].roots;
    let comp = |i: usize| &comps[i.min(m) - 1];
    for i in 1..=m {
        for j in 1..=m {
            if i + j <= m {
                let (a, b) = match cond {
                    ChainCondition::IdealSums => (ideal_set(i), ideal_set(j)),
                    ChainCondition::IdealPlusComplement => (ideal_set(i), comp(j)),
                    ChainCondition::SameIndex => (ideal_set(i), comp(i)),
                };
                if let Some(root) = escaping_sum(a, b, ideal_set(i + j)) {
                    return ChainVerdict::FirstConditionFails { i, j, root };
                }
            }
            if let Some(root) = escaping_sum(comp(i), comp(j), comp(i + j)) {
                return ChainVerdict::SecondConditionFails { i, j, root };
            }
        }
    }
    ChainVerdict::Filtered
}

fn escaping_sum(a: &BTreeSet<Root>, b: &BTreeSet<Root>, target: &BTreeSet<Root>) -> Option<Root> {
    for &x in a {
        for &y in b {
            if let Some(s) = root_sum(x, y) {
                if !target.contains(&s) {
                    return Some(s);
                }
            }
        }
    }
    None
}

/// A sequence that is not increasing is not a filtered chain.
pub fn is_filtered_chain(ideals: &[RootIdeal]) -> bool {
    chain_verdict(ideals, ChainCondition::IdealSums) == ChainVerdict::Filtered
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FilteredChain {
    ideals: Vec<RootIdeal>,
}

impl FilteredChain {
    /// Rejects non-increasing sequences and failed closure conditions.
    pub fn new(ideals: Vec<RootIdeal>) -> Result<Self> {
        match chain_verdict(&ideals, ChainCondition::IdealSums) {
            ChainVerdict::Filtered => Ok(FilteredChain { ideals }),
            v => Err(Error::InvalidIdeal(format!("not a filtered chain: {v:?}"))),
        }
    }

    pub fn ideals(&self) -> &[RootIdeal] {
        &self.ideals
    }

    pub fn m(&self) -> usize {
        self.ideals.len()
    }

    pub fn paths(&self) -> Vec<DyckPath> {
        self.ideals.iter().map(ideal_to_dyck).collect()
    }

    /// Componentwise sum of the area sequences of the `φ(I_k)`.
    pub fn summed_area(&self) -> AreaSequence {
        let n = self.ideals.first().map_or(0, RootIdeal::n);
        let mut a = vec![0; n];
        for i in &self.ideals {
            for (s, v) in a.iter_mut().zip(ideal_area(i).0) {
                *s += v;
            }
        }
        AreaSequence(a)
    }
}

pub fn enumerate_filtered_chains(n: usize, m: usize) -> Result<Vec<FilteredChain>> {
    Ok(enumerate_chains_with(n, m, ChainCondition::IdealSums)?
        .into_iter()
        .map(|ideals| FilteredChain { ideals })
        .collect())
}

/// Chains satisfying the closure conditions under `cond`, in lex order of
/// their ideals' positions in [`enumerate_ideals`].
pub fn enumerate_chains_with(
    n: usize,
    m: usize,
    cond: ChainCondition,
) -> Result<Vec<Vec<RootIdeal>>> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid("n and m must be at least 1".into()));
    }
    check_cap("n (filtered chains)", n, MAX_CHAIN_N)?;
    check_cap("m (filtered chains)", m, MAX_CHAIN_M)?;
    let ideals = enumerate_ideals(n)?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(
        ideals: &[RootIdeal],
        m: usize,
        cond: ChainCondition,
        cur: &mut Vec<RootIdeal>,
        out: &mut Vec<Vec<RootIdeal>>,
    ) {
        if cur.len() == m {
            if chain_verdict(cur, cond) == ChainVerdict::Filtered {
                out.push(cur.clone());
            }
            return;
        }
        for i in ideals {
            if cur.last().is_none_or(|p| p.is_subset(i)) {
                cur.push(i.clone());
                rec(ideals, m, cond, cur, out);
                cur.pop();
            }
        }
    }
    rec(&ideals, m, cond, &mut cur, &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{catalan, enumerate_dyck, fuss_catalan};

    #[test]
    fn ideal_validation() {
        assert!(RootIdeal::new(3, [(1, 2)]).is_err());
        assert!(RootIdeal::new(3, [(1, 1), (2, 2), (1, 2)]).is_ok());
        assert!(RootIdeal::new(3, [(0, 1)]).is_err());
        assert!(RootIdeal::new(3, [(3, 3)]).is_err());
    }

    #[test]
    fn dyck_convention() {
        assert_eq!(ideal_area(&RootIdeal::empty(3)).0, vec![0, 0, 0]);
        assert_eq!(ideal_area(&RootIdeal::full(3)).0, vec![0, 1, 2]);
        let a1 = RootIdeal::new(3, [(1, 1)]).unwrap();
        let a2 = RootIdeal::new(3, [(2, 2)]).unwrap();
        assert_eq!(ideal_area(&a1).0, vec![0, 1, 0]);
        assert_eq!(ideal_area(&a2).0, vec![0, 0, 1]);
    }

    #[test]
    fn bijection_with_dyck_paths() {
        for n in 1..=6 {
            let ideals = enumerate_ideals(n).unwrap();
            assert_eq!(ideals.len() as u128, catalan(n));
            // closure under shrinking, checked independently of the constructor
            for i in &ideals {
                assert!(RootIdeal::new(n, i.roots().iter().copied()).is_ok());
            }
            let back: BTreeSet<_> = ideals
                .iter()
                .map(|i| ideal_to_dyck(i).to_string())
                .collect();
            let all: BTreeSet<_> = enumerate_dyck(n)
                .unwrap()
                .iter()
                .map(|p| p.to_string())
                .collect();
            assert_eq!(back, all);
            for p in enumerate_dyck(n).unwrap() {
                assert_eq!(ideal_to_dyck(&dyck_to_ideal(&p)), p);
            }
        }
    }

    /// Brute force over all subsets of `Φ⁺`.
    #[test]
    fn ideal_count_by_subsets() {
        for n in 1..=5 {
            let r = positive_roots(n);
            let count = (0u32..1 << r.len())
                .filter(|mask| {
                    RootIdeal::new(n, (0..r.len()).filter(|k| mask >> k & 1 == 1).map(|k| r[k]))
                        .is_ok()
                })
                .count();
            assert_eq!(count as u128, catalan(n));
        }
    }

    #[test]
    fn chain_examples() {
        let a1 = RootIdeal::new(3, [(1, 1)]).unwrap();
        let a2 = RootIdeal::new(3, [(2, 2)]).unwrap();
        assert!(!is_filtered_chain(&[a1.clone(), a2.clone()]));
        assert_eq!(
            chain_verdict(&[a1, a2], ChainCondition::IdealSums),
            ChainVerdict::NotIncreasing { at: 1 }
        );
        assert!(is_filtered_chain(&[
            RootIdeal::empty(3),
            RootIdeal::empty(3)
        ]));
        assert!(is_filtered_chain(&[RootIdeal::full(3), RootIdeal::full(3)]));
        assert!(FilteredChain::new(vec![RootIdeal::full(3), RootIdeal::empty(3)]).is_err());
    }

    #[test]
    fn chain_counts() {
        for n in 1..=4 {
            for m in 1..=3 {
                let chains = enumerate_filtered_chains(n, m).unwrap();
                assert_eq!(chains.len() as u128, fuss_catalan(n, m), "n = {n}, m = {m}");
                let sums: BTreeSet<_> = chains.iter().map(|c| c.summed_area().0).collect();
                assert_eq!(sums.len(), chains.len());
                assert!(chains.iter().all(|c| c.summed_area().is_valid(m)));
            }
        }
        assert_eq!(
            enumerate_chains_with(3, 2, ChainCondition::IdealPlusComplement)
                .unwrap()
                .len(),
            9
        );
    }
}
