//! North/east lattice paths: Dyck paths, m-Dyck paths and their statistics.
//!
//! Rows are numbered from the bottom starting at 1 in the mathematics and
//! from 0 in code. For an m-Dyck path to `(mn, n)` the area of row `i`
//! (one-based) is `m(i-1) - x_i`, where `x_i` is the x-coordinate of the
//! i-th north step.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{check_cap, Error, Result};
use crate::partition::Partition;

pub const MAX_ENUMERATE_N: usize = 12;
pub const MAX_FUSS_EAST_STEPS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    N,
    E,
}

/// A lattice path from the origin ending at `(east, north)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    word: Vec<Step>,
    east: usize,
    north: usize,
}

impl LatticePath {
    pub fn new(word: Vec<Step>) -> Self {
        let east = word.iter().filter(|&&s| s == Step::E).count();
        let north = word.len() - east;
        LatticePath { word, east, north }
    }

    pub fn word(&self) -> &[Step] {
        &self.word
    }

    pub fn end(&self) -> (usize, usize) {
        (self.east, self.north)
    }

    /// x-coordinate of each north step, bottom to top.
    pub fn north_x(&self) -> Vec<usize> {
        let mut x = 0;
        let mut out = Vec::with_capacity(self.north);
        for &s in &self.word {
            match s {
                Step::E => x += 1,
                Step::N => out.push(x),
            }
        }
        out
    }

    /// `top[x]`: height at which the path leaves column `x` eastward.
    fn column_tops(&self) -> Vec<usize> {
        let mut y = 0;
        let mut out = Vec::with_capacity(self.east);
        for &s in &self.word {
            match s {
                Step::N => y += 1,
                Step::E => out.push(y),
            }
        }
        out
    }

    fn word_string(&self) -> String {
        self.word
            .iter()
            .map(|s| match s {
                Step::N => 'N',
                Step::E => 'E',
            })
            .collect()
    }
}

fn parse_word(s: &str) -> Result<Vec<Step>> {
    s.trim()
        .chars()
        .map(|c| match c {
            'N' => Ok(Step::N),
            'E' => Ok(Step::E),
            _ => Err(Error::Parse(format!("bad path letter '{c}' in \"{s}\""))),
        })
        .collect()
}

/// Path to `(mn, n)` weakly above the line `y = x/m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MDyckPath {
    path: LatticePath,
    m: usize,
}

/// Path to `(n, n)` weakly above the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    path: LatticePath,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AreaSequence(pub Vec<usize>);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DinvSequence(pub Vec<usize>);

impl AreaSequence {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// True for the area sequences of `m`-Dyck paths: starts at 0 and
    /// `a_{i+1} ≤ a_i + m`.
    pub fn is_valid(&self, m: usize) -> bool {
        self.0.first().is_none_or(|&a| a == 0) && self.0.windows(2).all(|w| w[1] <= w[0] + m)
    }
}

impl DinvSequence {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for AreaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

impl fmt::Display for DinvSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.0)
    }
}

pub(crate) fn write_tuple(f: &mut fmt::Formatter<'_>, v: &[usize]) -> fmt::Result {
    let parts: Vec<String> = v.iter().map(|a| a.to_string()).collect();
    write!(f, "({})", parts.join(","))
}

impl MDyckPath {
    pub fn new(word: Vec<Step>, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidPath("slope must be positive".into()));
        }
        let path = LatticePath::new(word);
        if path.east != m * path.north {
            return Err(Error::InvalidPath(format!(
                "ends at ({}, {}), expected ({}, {})",
                path.east,
                path.north,
                m * path.north,
                path.north
            )));
        }
        let (mut e, mut nn) = (0, 0);
        for &s in &path.word {
            match s {
                Step::N => nn += 1,
                Step::E => e += 1,
            }
            if e > m * nn {
                return Err(Error::InvalidPath(format!(
                    "{} dips below the line of slope 1/{m}",
                    path.word_string()
                )));
            }
        }
        Ok(MDyckPath { path, m })
    }

    pub fn parse(word: &str, m: usize) -> Result<Self> {
        MDyckPath::new(parse_word(word)?, m)
    }

    pub fn from_area_sequence(area: &AreaSequence, m: usize) -> Result<Self> {
        if !area.is_valid(m) {
            return Err(Error::InvalidPath(format!(
                "{area} is not an area sequence for m = {m}"
            )));
        }
        let n = area.0.len();
        let mut word = Vec::with_capacity(n * (m + 1));
        let mut x = 0;
        for (i, &a) in area.0.iter().enumerate() {
            let target = m * i - a;
            while x < target {
                word.push(Step::E);
                x += 1;
            }
            word.push(Step::N);
        }
        while x < m * n {
            word.push(Step::E);
            x += 1;
        }
        MDyckPath::new(word, m)
    }

    pub fn n(&self) -> usize {
        self.path.north
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn lattice_path(&self) -> &LatticePath {
        &self.path
    }

    pub fn word(&self) -> &[Step] {
        &self.path.word
    }

    pub fn area_sequence(&self) -> AreaSequence {
        AreaSequence(
            self.path
                .north_x()
                .iter()
                .enumerate()
                .map(|(i, &x)| self.m * i - x)
                .collect(),
        )
    }

    pub fn area(&self) -> usize {
        self.area_sequence().total()
    }

    /// Loehr's bounce statistic `Σ k·v_k`.
    ///
    /// The bounce path goes north `v_i` until it meets the start of an east
    /// step of the path, then east by the sum of the last `m` vertical moves,
    /// stopping once it reaches `x = mn`.
    pub fn loehr_bounce(&self) -> usize {
        bounce_moves(&self.path, self.m)
            .iter()
            .enumerate()
            .map(|(k, &v)| k * v)
            .sum()
    }

    pub fn is_dyck(&self) -> bool {
        self.m == 1
    }

    pub fn to_dyck(&self) -> Option<DyckPath> {
        (self.m == 1).then(|| DyckPath {
            path: self.path.clone(),
        })
    }

    pub fn to_json(&self) -> Value {
        json!({ "m": self.m, "n": self.n(), "word": self.to_string() })
    }
}

/// Vertical moves `v_0, v_1, ..` of the generalised bounce path.
pub fn bounce_moves(path: &LatticePath, m: usize) -> Vec<usize> {
    let tops = path.column_tops();
    let width = path.east;
    let (mut x, mut y) = (0usize, 0usize);
    let mut v: Vec<usize> = Vec::new();
    while x < width {
        let vi = tops[x] - y;
        y += vi;
        v.push(vi);
        let h: usize = v.iter().rev().take(m).sum();
        assert!(h > 0, "bounce path stalled at ({x}, {y})");
        x = (x + h).min(width);
    }
    v
}

impl DyckPath {
    pub fn new(word: Vec<Step>) -> Result<Self> {
        let p = MDyckPath::new(word, 1)?;
        Ok(DyckPath { path: p.path })
    }

    pub fn parse(word: &str) -> Result<Self> {
        DyckPath::new(parse_word(word)?)
    }

    pub fn from_area_sequence(area: &AreaSequence) -> Result<Self> {
        let p = MDyckPath::from_area_sequence(area, 1)?;
        Ok(DyckPath { path: p.path })
    }

    pub fn n(&self) -> usize {
        self.path.north
    }

    pub fn word(&self) -> &[Step] {
        &self.path.word
    }

    pub fn lattice_path(&self) -> &LatticePath {
        &self.path
    }

    pub fn as_m_path(&self) -> MDyckPath {
        MDyckPath {
            path: self.path.clone(),
            m: 1,
        }
    }

    pub fn area_sequence(&self) -> AreaSequence {
        AreaSequence(
            self.path
                .north_x()
                .iter()
                .enumerate()
                .map(|(i, &x)| i - x)
                .collect(),
        )
    }

    pub fn area(&self) -> usize {
        self.area_sequence().total()
    }

    pub fn dinv_sequence(&self) -> DinvSequence {
        dinv_of_area(&self.area_sequence())
    }

    pub fn dinv(&self) -> usize {
        self.dinv_sequence().total()
    }

    /// Haglund's bounce: `Σ (n - j)` over the interior diagonal touch points
    /// `(j, j)` of the bounce path.
    pub fn bounce(&self) -> usize {
        let tops = self.path.column_tops();
        let n = self.n();
        let mut pos = 0;
        let mut total = 0;
        loop {
            let next = tops[pos];
            if next >= n {
                return total;
            }
            debug_assert!(next > pos);
            total += n - next;
            pos = next;
        }
    }

    /// Boxes of the `n × n` square strictly left of the path, one part per
    /// row read from the top.
    pub fn dg_partition(&self) -> Partition {
        let mut rows = self.path.north_x();
        rows.reverse();
        Partition::from_unsorted(rows)
    }

    pub fn to_json(&self) -> Value {
        json!({ "m": 1, "n": self.n(), "word": self.to_string() })
    }
}

/// `d_i = #{ j > i : a_j ∈ {a_i, a_i - 1} }`.
pub fn dinv_of_area(area: &AreaSequence) -> DinvSequence {
    let a = &area.0;
    DinvSequence(
        (0..a.len())
            .map(|i| {
                a[i + 1..]
                    .iter()
                    .filter(|&&aj| aj == a[i] || aj + 1 == a[i])
                    .count()
            })
            .collect(),
    )
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word_string())
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.path.fmt(f)
    }
}

impl fmt::Display for MDyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.path.fmt(f)
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckPath::parse(s)
    }
}

/// All Dyck paths of semilength `n`, lexicographic in their words with `N < E`.
pub fn enumerate_dyck(n: usize) -> Result<Vec<DyckPath>> {
    check_cap("n", n, MAX_ENUMERATE_N)?;
    if n == 0 {
        return Err(Error::Invalid("n must be at least 1".into()));
    }
    Ok(enumerate_words(n, 1)
        .into_iter()
        .map(|word| DyckPath {
            path: LatticePath::new(word),
        })
        .collect())
}

/// All m-Dyck paths with `n` north steps, lexicographic with `N < E`.
pub fn enumerate_m_dyck(n: usize, m: usize) -> Result<Vec<MDyckPath>> {
    if n == 0 || m == 0 {
        return Err(Error::Invalid("n and m must be at least 1".into()));
    }
    check_cap("m*n", m * n, MAX_FUSS_EAST_STEPS)?;
    Ok(enumerate_words(n, m)
        .into_iter()
        .map(|word| MDyckPath {
            path: LatticePath::new(word),
            m,
        })
        .collect())
}

fn enumerate_words(n: usize, m: usize) -> Vec<Vec<Step>> {
    fn rec(
        n: usize,
        m: usize,
        north: usize,
        east: usize,
        cur: &mut Vec<Step>,
        out: &mut Vec<Vec<Step>>,
    ) {
        if north == n && east == m * n {
            out.push(cur.clone());
            return;
        }
        if north < n {
            cur.push(Step::N);
            rec(n, m, north + 1, east, cur, out);
            cur.pop();
        }
        if east < m * north {
            cur.push(Step::E);
            rec(n, m, north, east + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, 0, 0, &mut Vec::with_capacity(n * (m + 1)), &mut out);
    out
}

pub fn catalan(n: usize) -> u128 {
    fuss_catalan(n, 1)
}

/// `binomial((m+1)n, n) / (mn + 1)`.
pub fn fuss_catalan(n: usize, m: usize) -> u128 {
    binomial((m + 1) * n, n) / (m * n + 1) as u128
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// One row of the statistics table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathStats {
    pub path: DyckPath,
    pub area: AreaSequence,
    pub dinv: DinvSequence,
    pub bounce: usize,
}

pub fn stats_table(n: usize) -> Result<Vec<PathStats>> {
    Ok(enumerate_dyck(n)?
        .into_iter()
        .map(|p| PathStats {
            area: p.area_sequence(),
            dinv: p.dinv_sequence(),
            bounce: p.bounce(),
            path: p,
        })
        .collect())
}
