//! Exact and modular rank engines for sparse integer matrices, plus a small
//! rational echelon form that tracks how each pivot was built so membership
//! queries return coordinates.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::poly::{Monomial, Poly, Rational};

/// Sparse row: strictly increasing column indices with nonzero entries.
pub type SparseRow = Vec<(u32, i64)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum RankMethod {
    /// Fraction-free elimination over the integers.
    ExactRational,
    /// Elimination over `F_p`; only a lower bound for the rational rank
    /// unless `confirmed`.
    ModularPrime { prime: u64, confirmed: bool },
}

impl RankMethod {
    pub fn is_exact(&self) -> bool {
        matches!(
            self,
            RankMethod::ExactRational
                | RankMethod::ModularPrime {
                    confirmed: true,
                    ..
                }
        )
    }
}

impl fmt::Display for RankMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankMethod::ExactRational => f.write_str("exact-rational"),
            RankMethod::ModularPrime { prime, confirmed } => {
                write!(f, "modular-prime {prime}")?;
                if *confirmed {
                    f.write_str(" (confirmed)")
                } else {
                    f.write_str(" (probabilistic)")
                }
            }
        }
    }
}

/// Which engine to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Modular(u64),
}

/// Incremental row echelon form; `insert` reports whether the row raised the rank.
pub trait Echelon {
    fn insert(&mut self, row: &SparseRow) -> bool;
    fn rank(&self) -> usize;
}

pub fn new_echelon(mode: Mode) -> Box<dyn Echelon + Send> {
    match mode {
        Mode::Exact => Box::new(IntegerEchelon::default()),
        Mode::Modular(p) => Box::new(ModularEchelon::new(p)),
    }
}

/// Fraction-free sparse elimination over `Z`: a new row is cleared against the
/// pivot with its leading column by `row ← lc(piv)·row − lc(row)·piv`, then
/// divided by its content.
#[derive(Default)]
pub struct IntegerEchelon {
    pivots: HashMap<u32, Vec<(u32, BigInt)>>,
}

impl IntegerEchelon {
    pub fn insert_big(&mut self, mut row: Vec<(u32, BigInt)>) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        loop {
            let Some(lead) = row.first().map(|(c, _)| *c) else {
                return false;
            };
            let Some(piv) = self.pivots.get(&lead) else {
                make_primitive(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let a = piv[0].1.clone();
            let b = row[0].1.clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            row = combine_big(&row, &a, piv, &b);
            make_primitive(&mut row);
        }
    }
}

impl Echelon for IntegerEchelon {
    fn insert(&mut self, row: &SparseRow) -> bool {
        self.insert_big(row.iter().map(|&(c, v)| (c, BigInt::from(v))).collect())
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// `a·x − b·y` on sparse rows.
fn combine_big(
    x: &[(u32, BigInt)],
    a: &BigInt,
    y: &[(u32, BigInt)],
    b: &BigInt,
) -> Vec<(u32, BigInt)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = a * &x[i].1 - b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(row: &mut [(u32, BigInt)]) {
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
}

/// Sparse elimination over `F_p` with monic pivot rows.
pub struct ModularEchelon {
    p: u64,
    pivots: HashMap<u32, Vec<(u32, u64)>>,
}

impl ModularEchelon {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        ModularEchelon {
            p,
            pivots: HashMap::new(),
        }
    }

    fn reduce_entry(&self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.p as i128) as u64
    }
}

impl Echelon for ModularEchelon {
    fn insert(&mut self, row: &SparseRow) -> bool {
        let p = self.p;
        let mut row: Vec<(u32, u64)> = row
            .iter()
            .map(|&(c, v)| (c, self.reduce_entry(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        loop {
            let Some(&(lead, lv)) = row.first() else {
                return false;
            };
            let Some(piv) = self.pivots.get(&lead) else {
                let inv = inv_mod(lv, p);
                for (_, v) in row.iter_mut() {
                    *v = mul_mod(*v, inv, p);
                }
                self.pivots.insert(lead, row);
                return true;
            };
            // row ← row − lv·piv
            let mut out = Vec::with_capacity(row.len() + piv.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < piv.len() {
                if j >= piv.len() || (i < row.len() && row[i].0 < piv[j].0) {
                    out.push(row[i]);
                    i += 1;
                } else if i >= row.len() || piv[j].0 < row[i].0 {
                    out.push((piv[j].0, p - mul_mod(lv, piv[j].1, p)));
                    j += 1;
                } else {
                    let v = (row[i].1 + p - mul_mod(lv, piv[j].1, p)) % p;
                    if v != 0 {
                        out.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            row = out;
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rank_of(rows: &[SparseRow], mode: Mode) -> usize {
    let mut e = new_echelon(mode);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Fraction-free Gaussian elimination (Bareiss) on a dense integer matrix.
/// Every intermediate entry is a minor of the input, so all divisions are exact.
pub fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

pub fn dense_from_sparse(rows: &[SparseRow], cols: usize) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let mut v = vec![BigInt::zero(); cols];
            for &(c, x) in r {
                v[c as usize] = BigInt::from(x);
            }
            v
        })
        .collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A prime in `[2^61, 2^62)` drawn from `seed`.
pub fn random_prime(seed: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidate = rng.gen_range((1u64 << 61)..(1u64 << 62)) | 1;
    while !is_prime(candidate) {
        candidate += 2;
    }
    candidate
}

/// Assigns dense column indices to monomials on first sight.
#[derive(Default, Clone)]
pub struct ColumnIndex {
    index: HashMap<Monomial, u32>,
}

impl ColumnIndex {
    pub fn with_columns(monos: &[Monomial]) -> Self {
        ColumnIndex {
            index: monos
                .iter()
                .enumerate()
                .map(|(i, m)| (m.clone(), i as u32))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }

    pub fn get(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }

    pub fn get_or_insert(&mut self, m: &Monomial) -> u32 {
        let next = self.index.len() as u32;
        *self.index.entry(m.clone()).or_insert(next)
    }

    /// Integer row of a polynomial with integer coefficients.
    pub fn integer_row(&mut self, f: &Poly) -> SparseRow {
        let mut row: SparseRow = f
            .terms()
            .map(|(m, c)| {
                assert!(c.is_integer(), "non-integer coefficient in integer row");
                (
                    self.get_or_insert(m),
                    c.to_integer().to_i64().expect("coefficient fits in i64"),
                )
            })
            .collect();
        row.sort_unstable_by_key(|&(c, _)| c);
        row
    }
}

/// Rational echelon form over monomial columns. Each pivot remembers its
/// expression in the inserted generators, so [`RationalEchelon::express`]
/// returns coordinates for anything in the span.
#[derive(Clone, Default)]
pub struct RationalEchelon {
    pivots: BTreeMap<Monomial, (Poly, Vec<Rational>)>,
    generators: usize,
}

impl RationalEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    /// Inserts the next generator. Returns false if it lies in the span of
    /// the previous ones; it still gets a coordinate slot.
    pub fn insert(&mut self, f: &Poly) -> bool {
        let k = self.generators;
        self.generators += 1;
        let mut tag = vec![Rational::zero(); self.generators];
        tag[k] = Rational::one();
        let (rest, tag) = self.reduce(f.clone(), tag);
        match rest.leading_term() {
            None => false,
            Some((m, c)) => {
                let m = m.clone();
                let inv = c.recip();
                let row = rest.scale(&inv);
                let tag = tag.into_iter().map(|t| t * &inv).collect();
                self.pivots.insert(m, (row, tag));
                true
            }
        }
    }

    fn reduce(&self, mut f: Poly, mut tag: Vec<Rational>) -> (Poly, Vec<Rational>) {
        // tag tracks f_original - f as a combination of generators, negated
        loop {
            let Some((m, c)) = f.leading_term() else {
                return (f, tag);
            };
            let Some((row, ptag)) = self.pivots.get(m) else {
                return (f, tag);
            };
            let c = c.clone();
            f = &f - &row.scale(&c);
            for (t, p) in tag.iter_mut().zip(ptag) {
                *t -= &c * p;
            }
        }
    }

    /// Coordinates of `f` in the inserted generators, if `f` is in their span.
    /// Dependent generators get coordinate zero.
    pub fn express(&self, f: &Poly) -> Option<Vec<Rational>> {
        let tag = vec![Rational::zero(); self.generators];
        let (rest, tag) = self.reduce(f.clone(), tag);
        // f - Σ c·row = rest, and each row = Σ ptag·generator; tag = -Σ c·ptag
        rest.is_zero()
            .then(|| tag.into_iter().map(|t| -t).collect())
    }

    pub fn contains(&self, f: &Poly) -> bool {
        let (rest, _) = self.reduce(f.clone(), vec![Rational::zero(); self.generators]);
        rest.is_zero()
    }
}

/// Exact rank of a list of polynomials.
pub fn poly_rank(polys: &[Poly]) -> usize {
    let mut cols = ColumnIndex::default();
    let mut e = IntegerEchelon::default();
    for f in polys {
        e.insert_big(rational_row(&mut cols, f));
    }
    e.rank()
}

/// Scales a rational polynomial to a primitive integer row.
pub fn rational_row(cols: &mut ColumnIndex, f: &Poly) -> Vec<(u32, BigInt)> {
    let mut lcm = BigInt::one();
    for (_, c) in f.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let mut row: Vec<(u32, BigInt)> = f
        .terms()
        .map(|(m, c)| {
            let v = (c * Rational::from_integer(lcm.clone())).to_integer();
            (cols.get_or_insert(m), v)
        })
        .collect();
    row.sort_by_key(|(c, _)| *c);
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn to_sparse(dense: &[Vec<i64>]) -> Vec<SparseRow> {
        dense
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(c, &v)| (c as u32, v))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        let s = to_sparse(&m);
        assert_eq!(rank_of(&s, Mode::Exact), 2);
        assert_eq!(rank_of(&s, Mode::Modular(random_prime(1))), 2);
        assert_eq!(bareiss_rank(dense_from_sparse(&s, 3)), 2);
        assert_eq!(rank_of(&[], Mode::Exact), 0);
    }

    #[test]
    fn modular_rank_can_drop_for_a_bad_prime() {
        let s = to_sparse(&[vec![1, 1], vec![1, 8]]);
        assert_eq!(rank_of(&s, Mode::Exact), 2);
        assert_eq!(rank_of(&s, Mode::Modular(7)), 1);
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(97) && is_prime((1u64 << 61) - 1));
        assert!(!is_prime(1) && !is_prime(561) && !is_prime(1u64 << 40));
        let p = random_prime(42);
        assert!(p > 1 << 30 && is_prime(p));
        assert_eq!(p, random_prime(42));
    }

    #[test]
    fn rational_echelon_coordinates() {
        let p = |s: &str| Poly::parse(2, s).unwrap();
        let mut e = RationalEchelon::new();
        assert!(e.insert(&p("x1 + x2")));
        assert!(e.insert(&p("x1 - x2")));
        assert!(!e.insert(&p("3*x1")));
        let c = e.express(&p("x1")).unwrap();
        assert_eq!(c, vec![rat(1, 2), rat(1, 2), Rational::zero()]);
        assert!(e.express(&p("y1")).is_none());
        assert_eq!(poly_rank(&[p("x1"), p("2*x1"), p("1/3*y2")]), 2);
    }

    fn rat(a: i64, b: i64) -> Rational {
        crate::poly::rat(a, b)
    }

    proptest! {
        #![proptest_config(ProptestConfig {
            cases: 200,
            rng_seed: proptest::test_runner::RngSeed::Fixed(0x5eed),
            failure_persistence: None,
            ..ProptestConfig::default()
        })]
        #[test]
        fn engines_agree(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 0..7)) {
            let s = to_sparse(&rows);
            let exact = rank_of(&s, Mode::Exact);
            prop_assert_eq!(exact, bareiss_rank(dense_from_sparse(&s, 5)));
            prop_assert_eq!(exact, rank_of(&s, Mode::Modular(random_prime(7))));
        }
    }
}
