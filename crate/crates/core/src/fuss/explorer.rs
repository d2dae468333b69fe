//! Search for decompositions of `m`-Dyck paths into `m` Dyck paths whose area
//! sequences add up and whose bounces add up to the Loehr bounce.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde_json::{json, Value};

use super::roots::{
    dyck_to_ideal, enumerate_chains_with, enumerate_filtered_chains, is_filtered_chain,
    ChainCondition,
};
use crate::error::{check_cap, Error, Result};
use crate::paths::{enumerate_m_dyck, AreaSequence, DyckPath, MDyckPath};

pub const MAX_EXPLORER_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<AreaSequence>,
    pub words: Vec<String>,
    pub bounces: Vec<usize>,
    pub bounce_additive: bool,
    /// The components, in this order, form a filtered chain.
    pub filtered_chain: bool,
}

impl Decomposition {
    pub fn to_json(&self) -> Value {
        json!({
            "areas": self.components.iter().map(|a| a.0.clone()).collect::<Vec<_>>(),
            "words": self.words,
            "bounces": self.bounces,
            "bounce_additive": self.bounce_additive,
            "filtered_chain": self.filtered_chain,
        })
    }

    fn unordered_key(&self) -> Vec<Vec<usize>> {
        let mut k: Vec<Vec<usize>> = self.components.iter().map(|a| a.0.clone()).collect();
        k.sort();
        k
    }
}

#[derive(Clone, Debug)]
pub struct PathDecompositions {
    pub word: String,
    pub area: AreaSequence,
    pub bounce: usize,
    /// Every ordered `m`-tuple with additive area sequences.
    pub tuples: Vec<Decomposition>,
}

impl PathDecompositions {
    pub fn area_additive_unordered(&self) -> usize {
        self.tuples
            .iter()
            .map(Decomposition::unordered_key)
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn bi_additive(&self) -> impl Iterator<Item = &Decomposition> {
        self.tuples.iter().filter(|d| d.bounce_additive)
    }

    /// Area- and bounce-additive decompositions up to reordering.
    pub fn bi_additive_unordered(&self) -> Vec<Vec<Vec<usize>>> {
        self.bi_additive()
            .map(Decomposition::unordered_key)
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "word": self.word,
            "area": self.area.0,
            "bounce": self.bounce,
            "area_additive_ordered": self.tuples.len(),
            "area_additive_unordered": self.area_additive_unordered(),
            "bi_additive_unordered": self.bi_additive_unordered().len(),
            "decompositions": self.tuples.iter().map(Decomposition::to_json).collect::<Vec<_>>(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingVerdict {
    pub domain: &'static str,
    pub paths: usize,
    pub domain_size: usize,
    pub matched: usize,
}

impl MatchingVerdict {
    /// Every `m`-Dyck path is matched.
    pub fn saturates_paths(&self) -> bool {
        self.matched == self.paths
    }

    pub fn perfect(&self) -> bool {
        self.saturates_paths() && self.matched == self.domain_size
    }

    pub fn to_json(&self) -> Value {
        json!({
            "domain": self.domain,
            "paths": self.paths,
            "domain_size": self.domain_size,
            "matched": self.matched,
            "saturates_paths": self.saturates_paths(),
            "perfect": self.perfect(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct ExplorerReport {
    pub n: usize,
    pub m: usize,
    pub paths: Vec<PathDecompositions>,
    pub tuple_matching: MatchingVerdict,
    pub chain_matching: MatchingVerdict,
    /// Chain counts under each reading of the first closure condition.
    pub chain_counts: Vec<(&'static str, usize)>,
}

impl ExplorerReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "m": self.m,
            "chain_condition": ChainCondition::IdealSums.label(),
            "chain_counts_by_reading": self.chain_counts.iter()
                .map(|(l, c)| json!({"condition": l, "chains": c}))
                .collect::<Vec<_>>(),
            "matching": [self.tuple_matching.to_json(), self.chain_matching.to_json()],
            "paths": self.paths.iter().map(PathDecompositions::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Bounce and word of a Dyck path given by its area sequence.
struct DyckCache {
    map: HashMap<Vec<usize>, (String, usize)>,
}

impl DyckCache {
    fn new(n: usize) -> Result<Self> {
        let mut map = HashMap::new();
        for p in crate::paths::enumerate_dyck(n)? {
            map.insert(p.area_sequence().0, (p.to_string(), p.bounce()));
        }
        Ok(DyckCache { map })
    }

    fn get(&self, a: &[usize]) -> &(String, usize) {
        &self.map[a]
    }
}

/// Ordered `m`-tuples of Dyck area sequences summing to `area`.
pub fn area_decompositions(area: &AreaSequence, m: usize) -> Vec<Vec<AreaSequence>> {
    let n = area.0.len();
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut rows = vec![vec![0usize; m]; n];
    fn split(
        area: &[usize],
        row: usize,
        k: usize,
        left: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<AreaSequence>>,
    ) {
        let m = rows[0].len();
        if row == area.len() {
            out.push(
                (0..m)
                    .map(|c| AreaSequence(rows.iter().map(|r| r[c]).collect()))
                    .collect(),
            );
            return;
        }
        if k == m - 1 {
            if left <= rows[row - 1][k] + 1 {
                rows[row][k] = left;
                let next = if row + 1 < area.len() {
                    area[row + 1]
                } else {
                    0
                };
                split(area, row + 1, 0, next, rows, out);
            }
            return;
        }
        for v in 0..=left.min(rows[row - 1][k] + 1) {
            rows[row][k] = v;
            split(area, row, k + 1, left - v, rows, out);
        }
    }
    if area.0[0] != 0 {
        return out;
    }
    let first = if n > 1 { area.0[1] } else { 0 };
    split(&area.0, 1, 0, first, &mut rows, &mut out);
    out
}

fn decompose(path: &MDyckPath, cache: &DyckCache) -> PathDecompositions {
    let area = path.area_sequence();
    let bounce = path.loehr_bounce();
    let tuples = area_decompositions(&area, path.m())
        .into_iter()
        .map(|components| {
            let info: Vec<&(String, usize)> = components.iter().map(|a| cache.get(&a.0)).collect();
            let bounces: Vec<usize> = info.iter().map(|i| i.1).collect();
            let ideals: Vec<_> = components
                .iter()
                .map(|a| dyck_to_ideal(&DyckPath::from_area_sequence(a).expect("valid Dyck area")))
                .collect();
            Decomposition {
                words: info.iter().map(|i| i.0.clone()).collect(),
                bounce_additive: bounces.iter().sum::<usize>() == bounce,
                filtered_chain: is_filtered_chain(&ideals),
                bounces,
                components,
            }
        })
        .collect();
    PathDecompositions {
        word: path.to_string(),
        area,
        bounce,
        tuples,
    }
}

/// Maximum bipartite matching by augmenting paths; `adj[l]` lists right vertices.
pub fn max_matching(adj: &[Vec<usize>], right: usize) -> usize {
    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        owner: &mut [Option<usize>],
    ) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if owner[r].is_none_or(|o| augment(o, adj, seen, owner)) {
                owner[r] = Some(l);
                return true;
            }
        }
        false
    }
    let mut owner = vec![None; right];
    let mut size = 0;
    for l in 0..adj.len() {
        let mut seen = vec![false; right];
        if augment(l, adj, &mut seen, &mut owner) {
            size += 1;
        }
    }
    size
}

/// Decompositions of every `m`-Dyck path plus two matching checks: against
/// all bi-additive ordered tuples, and against filtered chains.
pub fn decomposition_explorer(n: usize, m: usize, allow_m3: bool) -> Result<ExplorerReport> {
    check_cap("n (decomposition explorer)", n, MAX_EXPLORER_N)?;
    check_cap(
        "m (decomposition explorer)",
        m,
        if allow_m3 { 3 } else { 2 },
    )?;
    if n == 0 || m == 0 {
        return Err(Error::Invalid("n and m must be at least 1".into()));
    }
    let cache = DyckCache::new(n)?;
    let mpaths = enumerate_m_dyck(n, m)?;
    let paths: Vec<PathDecompositions> = mpaths.par_iter().map(|p| decompose(p, &cache)).collect();

    let mut tuple_ids: HashMap<Vec<Vec<usize>>, usize> = HashMap::new();
    let tuple_adj: Vec<Vec<usize>> = paths
        .iter()
        .map(|p| {
            p.bi_additive()
                .map(|d| {
                    let key: Vec<Vec<usize>> = d.components.iter().map(|a| a.0.clone()).collect();
                    let next = tuple_ids.len();
                    *tuple_ids.entry(key).or_insert(next)
                })
                .collect()
        })
        .collect();
    let tuple_matching = MatchingVerdict {
        domain: "ordered m-tuples of Dyck paths",
        paths: paths.len(),
        domain_size: tuple_ids.len(),
        matched: max_matching(&tuple_adj, tuple_ids.len()),
    };

    let chains = enumerate_filtered_chains(n, m)?;
    let chain_keys: Vec<(Vec<usize>, usize)> = chains
        .iter()
        .map(|c| {
            let b = c
                .ideals()
                .iter()
                .map(|i| cache.get(&super::roots::ideal_area(i).0).1)
                .sum();
            (c.summed_area().0, b)
        })
        .collect();
    let chain_adj: Vec<Vec<usize>> = paths
        .iter()
        .map(|p| {
            chain_keys
                .iter()
                .enumerate()
                .filter(|(_, (a, b))| *a == p.area.0 && *b == p.bounce)
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    let chain_matching = MatchingVerdict {
        domain: "filtered chains",
        paths: paths.len(),
        domain_size: chains.len(),
        matched: max_matching(&chain_adj, chains.len()),
    };

    let chain_counts = ChainCondition::ALL
        .iter()
        .map(|&c| Ok((c.label(), enumerate_chains_with(n, m, c)?.len())))
        .collect::<Result<_>>()?;
    Ok(ExplorerReport {
        n,
        m,
        paths,
        tuple_matching,
        chain_matching,
        chain_counts,
    })
}
