//! Exact sparse polynomials in the diagonal variables `x_1..x_n, y_1..y_n`
//! with rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with the x-block ahead of the y-block. Iterating a
//! polynomial in canonical order means iterating that map from the largest
//! monomial down; text and JSON output both follow it.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::{Perm, Permutations};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// One of the `2n` variables, zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
}

impl Var {
    fn slot(self, n: usize) -> usize {
        match self {
            Var::X(i) => i,
            Var::Y(i) => n + i,
        }
    }

    fn index(self) -> usize {
        match self {
            Var::X(i) | Var::Y(i) => i,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiDegree {
    pub xdeg: u32,
    pub ydeg: u32,
}

impl BiDegree {
    pub fn new(xdeg: u32, ydeg: u32) -> Self {
        BiDegree { xdeg, ydeg }
    }

    pub fn total(self) -> u32 {
        self.xdeg + self.ydeg
    }

    /// Componentwise `self ≤ other`.
    pub fn le(self, other: BiDegree) -> bool {
        self.xdeg <= other.xdeg && self.ydeg <= other.ydeg
    }

    pub fn checked_sub(self, other: BiDegree) -> Option<BiDegree> {
        Some(BiDegree {
            xdeg: self.xdeg.checked_sub(other.xdeg)?,
            ydeg: self.ydeg.checked_sub(other.ydeg)?,
        })
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.xdeg, self.ydeg)
    }
}

/// Exponent vector `(x_1..x_n | y_1..y_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![0; 2 * n].into_boxed_slice(),
        }
    }

    pub fn from_exponents(xexp: &[u32], yexp: &[u32]) -> Result<Self> {
        if xexp.len() != yexp.len() {
            return Err(Error::Dimension {
                expected: xexp.len(),
                found: yexp.len(),
            });
        }
        let exps = xexp
            .iter()
            .chain(yexp)
            .map(|&e| {
                u16::try_from(e).map_err(|_| Error::Invalid(format!("exponent {e} too large")))
            })
            .collect::<Result<Vec<u16>>>()?;
        Ok(Monomial {
            exps: exps.into_boxed_slice(),
        })
    }

    /// Builds `Π x_i^{xexp_i} y_i^{yexp_i}` from trusted exponent data.
    pub(crate) fn from_raw(exps: Vec<u16>) -> Self {
        debug_assert!(exps.len().is_multiple_of(2));
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    pub fn raw(&self) -> &[u16] {
        &self.exps
    }

    pub fn x(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn y(&self, i: usize) -> u32 {
        self.exps[self.n() + i] as u32
    }

    pub fn xexp(&self) -> Vec<u32> {
        self.exps[..self.n()].iter().map(|&e| e as u32).collect()
    }

    pub fn yexp(&self) -> Vec<u32> {
        self.exps[self.n()..].iter().map(|&e| e as u32).collect()
    }

    pub fn degree(&self, var: Var) -> u32 {
        self.exps[var.slot(self.n())] as u32
    }

    pub fn bidegree(&self) -> BiDegree {
        let n = self.n();
        BiDegree {
            xdeg: self.exps[..n].iter().map(|&e| e as u32).sum(),
            ydeg: self.exps[n..].iter().map(|&e| e as u32).sum(),
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `x_i ↦ x_{σ(i)}`, `y_i ↦ y_{σ(i)}`.
    pub fn permute(&self, sigma: &Perm) -> Monomial {
        let n = self.n();
        let mut exps = vec![0u16; 2 * n];
        for i in 0..n {
            let j = sigma.apply(i);
            exps[j] = self.exps[i];
            exps[n + j] = self.exps[n + i];
        }
        Monomial::from_raw(exps)
    }

    /// Exponent pairs `(xexp_i, yexp_i)` per point.
    pub fn pairs(&self) -> Vec<(u32, u32)> {
        (0..self.n()).map(|i| (self.x(i), self.y(i))).collect()
    }

    /// `Π_k (exponent_k)!`, the value of `m(∂) m` at zero.
    pub fn factorial_weight(&self) -> BigInt {
        let mut acc = BigInt::one();
        for &e in self.exps.iter() {
            for k in 2..=e as u64 {
                acc *= k;
            }
        }
        acc
    }

    fn write_factors(&self, f: &mut impl fmt::Write) -> fmt::Result {
        let n = self.n();
        let mut first = true;
        for (slot, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_char('*')?;
            }
            first = false;
            let (name, idx) = if slot < n {
                ('x', slot)
            } else {
                ('y', slot - n)
            };
            write!(f, "{}{}", name, idx + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        Ok(())
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        self.write_factors(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero(n: usize) -> Self {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Poly::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Poly::term(Monomial::one(n), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let n = m.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { n, terms }
    }

    pub fn var(n: usize, v: Var) -> Self {
        assert!(v.index() < n, "variable index out of range");
        let mut exps = vec![0u16; 2 * n];
        exps[v.slot(n)] = 1;
        Poly::term(Monomial::from_raw(exps), Rational::one())
    }

    pub fn x(n: usize, i: usize) -> Self {
        Poly::var(n, Var::X(i))
    }

    pub fn y(n: usize, i: usize) -> Self {
        Poly::var(n, Var::Y(i))
    }

    /// Collects `(monomial, coefficient)` pairs, merging repeats and dropping zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero(n);
        for (m, c) in terms {
            debug_assert_eq!(m.n(), n);
            p.add_term(m, c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical (descending graded lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_n(&self, other: &Poly) -> Result<()> {
        if self.n != other.n {
            Err(Error::Dimension {
                expected: self.n,
                found: other.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_n(other)?;
        let mut out = Poly::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `order`-th partial derivative in `var`.
    pub fn partial(&self, var: Var, order: u32) -> Poly {
        let slot = var.slot(self.n);
        let mut out = Poly::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exps[slot] as u32;
            if e < order {
                continue;
            }
            let mut falling = BigInt::one();
            for k in 0..order {
                falling *= e - k;
            }
            let mut exps = m.exps.to_vec();
            exps[slot] -= order as u16;
            out.add_term(
                Monomial::from_raw(exps),
                c * Rational::from_integer(falling),
            );
        }
        out
    }

    /// Applies `∂_{x_i}^h ∂_{y_i}^k` in one pass.
    pub fn partial_xy(&self, i: usize, h: u32, k: u32) -> Poly {
        let n = self.n;
        let mut out = Poly::zero(n);
        for (m, c) in &self.terms {
            let ex = m.exps[i] as u32;
            let ey = m.exps[n + i] as u32;
            if ex < h || ey < k {
                continue;
            }
            let mut w = BigInt::one();
            for t in 0..h {
                w *= ex - t;
            }
            for t in 0..k {
                w *= ey - t;
            }
            let mut exps = m.exps.to_vec();
            exps[i] -= h as u16;
            exps[n + i] -= k as u16;
            out.add_term(Monomial::from_raw(exps), c * Rational::from_integer(w));
        }
        out
    }

    /// Diagonal action: substitutes `x_i → x_{σ(i)}` and `y_i → y_{σ(i)}`.
    pub fn permute(&self, sigma: &Perm) -> Result<Poly> {
        if sigma.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                found: sigma.len(),
            });
        }
        Ok(Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permute(sigma), c.clone()))
                .collect(),
        })
    }

    /// `Σ_σ sgn(σ) σ·f`, without the `1/n!` normalisation.
    pub fn antisymmetrize(&self) -> Poly {
        let n = self.n;
        let mut out = Poly::zero(n);
        for (images, sign) in Permutations::new(n) {
            let sigma = Perm::new(images).expect("stream yields permutations");
            for (m, c) in &self.terms {
                let c = if sign > 0 { c.clone() } else { -c.clone() };
                out.add_term(m.permute(&sigma), c);
            }
        }
        out
    }

    /// Apolarity pairing `f(∂x, ∂y) g |_{0}`.
    pub fn inner_product(&self, other: &Poly) -> Result<Rational> {
        self.check_n(other)?;
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Rational::zero();
        for (m, c) in &small.terms {
            if let Some(d) = large.terms.get(m) {
                acc += c * d * Rational::from_integer(m.factorial_weight());
            }
        }
        Ok(acc)
    }

    pub fn bidegree_split(&self) -> BTreeMap<BiDegree, Poly> {
        let mut out: BTreeMap<BiDegree, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| Poly::zero(self.n))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// The common bidegree of all terms, if the polynomial is nonzero and bihomogeneous.
    pub fn bidegree(&self) -> Option<BiDegree> {
        let mut it = self.terms.keys().map(Monomial::bidegree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    /// `Some(c)` with `self = c · other` when the two are proportional.
    pub fn ratio_to(&self, other: &Poly) -> Option<Rational> {
        if self.n != other.n || self.len() != other.len() || other.is_zero() {
            return None;
        }
        let (m0, c0) = other.leading_term()?;
        let r = self.coefficient(m0) / c0;
        if r.is_zero() {
            return None;
        }
        (other.scale(&r) == *self).then_some(r)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses the text format, e.g. `3/2*x1^2*y3 - y2`.
    pub fn parse(n: usize, text: &str) -> Result<Poly> {
        parse_text(n, text)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                json!({
                    "c": [bigint_json(c.numer()), bigint_json(c.denom())],
                    "x": m.xexp(),
                    "y": m.yexp(),
                })
            })
            .collect();
        json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(value: &Value) -> Result<Poly> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let n = value
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| bad("missing n"))? as usize;
        let terms = value
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing terms"))?;
        let mut p = Poly::zero(n);
        for t in terms {
            let c = t
                .get("c")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("c"))?;
            if c.len() != 2 {
                return Err(bad("c must be [num, den]"));
            }
            let num = json_bigint(&c[0]).ok_or_else(|| bad("numerator"))?;
            let den = json_bigint(&c[1]).ok_or_else(|| bad("denominator"))?;
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            let exps = |key: &str| -> Result<Vec<u32>> {
                t.get(key)
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad(key))?
                    .iter()
                    .map(|e| e.as_u64().map(|e| e as u32).ok_or_else(|| bad(key)))
                    .collect()
            };
            let (xs, ys) = (exps("x")?, exps("y")?);
            if xs.len() != n || ys.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    found: xs.len().max(ys.len()),
                });
            }
            p.add_term(Monomial::from_exponents(&xs, &ys)?, Rational::new(num, den));
        }
        Ok(p)
    }
}

fn bigint_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => json!(i),
        None => json!(v.to_string()),
    }
}

fn json_bigint(v: &Value) -> Option<BigInt> {
    match v {
        Value::Number(num) => num.as_i64().map(BigInt::from),
        Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                m.write_factors(f)?;
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("polynomials over different n")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("polynomials over different n")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("polynomials over different n")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

fn parse_text(n: usize, text: &str) -> Result<Poly> {
    let s: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut pos = 0;
    let mut out = Poly::zero(n);
    let mut first = true;
    while pos < s.len() {
        let mut negative = false;
        if s[pos] == '+' || s[pos] == '-' {
            negative = s[pos] == '-';
            pos += 1;
        } else if !first {
            return Err(Error::Parse(format!("expected '+' or '-' at {pos}")));
        }
        first = false;
        let (coef, mono, next) = parse_term(n, &s, pos)?;
        pos = next;
        out.add_term(mono, if negative { -coef } else { coef });
    }
    Ok(out)
}

fn parse_term(n: usize, s: &[char], mut pos: usize) -> Result<(Rational, Monomial, usize)> {
    let mut coef = Rational::one();
    let mut exps = vec![0u16; 2 * n];
    let mut factors = 0;
    loop {
        if pos >= s.len() {
            return Err(Error::Parse("dangling operator".into()));
        }
        match s[pos] {
            'x' | 'y' => {
                let block = if s[pos] == 'x' { 0 } else { n };
                pos += 1;
                let (idx, next) = parse_uint(s, pos)?;
                pos = next;
                if idx == 0 || idx as usize > n {
                    return Err(Error::Parse(format!(
                        "variable index {idx} out of range for n = {n}"
                    )));
                }
                let mut e = 1u64;
                if pos < s.len() && s[pos] == '^' {
                    let (v, next) = parse_uint(s, pos + 1)?;
                    e = v;
                    pos = next;
                }
                let slot = block + idx as usize - 1;
                let total = exps[slot] as u64 + e;
                exps[slot] =
                    u16::try_from(total).map_err(|_| Error::Parse("exponent too large".into()))?;
            }
            c if c.is_ascii_digit() => {
                let start = pos;
                while pos < s.len() && s[pos].is_ascii_digit() {
                    pos += 1;
                }
                let num: BigInt = s[start..pos].iter().collect::<String>().parse().unwrap();
                let mut value = Rational::from_integer(num);
                if pos < s.len() && s[pos] == '/' {
                    pos += 1;
                    let start = pos;
                    while pos < s.len() && s[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(Error::Parse("missing denominator".into()));
                    }
                    let den: BigInt = s[start..pos].iter().collect::<String>().parse().unwrap();
                    if den.is_zero() {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    value /= Rational::from_integer(den);
                }
                coef *= value;
            }
            c => return Err(Error::Parse(format!("unexpected character '{c}'"))),
        }
        factors += 1;
        if pos < s.len() && s[pos] == '*' {
            pos += 1;
            continue;
        }
        break;
    }
    debug_assert!(factors > 0);
    Ok((coef, Monomial::from_raw(exps), pos))
}

fn parse_uint(s: &[char], mut pos: usize) -> Result<(u64, usize)> {
    let start = pos;
    while pos < s.len() && s[pos].is_ascii_digit() {
        pos += 1;
    }
    if start == pos {
        return Err(Error::Parse(format!("expected digits at {start}")));
    }
    let v = s[start..pos]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| Error::Parse("integer overflow".into()))?;
    Ok((v, pos))
}

/// All monomials in `n` x-variables and `n` y-variables of the given bidegree,
/// ascending in monomial order.
pub fn monomials_of_bidegree(n: usize, d: BiDegree) -> Vec<Monomial> {
    let xs = compositions(n, d.xdeg);
    let ys = compositions(n, d.ydeg);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            let mut exps = Vec::with_capacity(2 * n);
            exps.extend_from_slice(x);
            exps.extend_from_slice(y);
            out.push(Monomial::from_raw(exps));
        }
    }
    out.sort();
    out
}

/// Weak compositions of `total` into `parts` parts.
pub fn compositions(parts: usize, total: u32) -> Vec<Vec<u16>> {
    fn rec(parts: usize, total: u32, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if parts == 1 {
            cur.push(total as u16);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=total).rev() {
            cur.push(e as u16);
            rec(parts - 1, total - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(parts, total, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Poly {
        Poly::parse(n, s).unwrap()
    }

    #[test]
    fn add_examples() {
        assert!(p(2, "x1").try_add(&p(2, "-x1")).unwrap().is_zero());
        assert_eq!(&p(2, "x1*y2") + &p(2, "x1*y2"), p(2, "2*x1*y2"));
        assert_eq!(&p(3, "y1 - y2") + &p(3, "y2 - y3"), p(3, "y1 - y3"));
        assert!(p(2, "x1").try_add(&p(3, "x1")).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(2, "x1 - x2") * &p(2, "x1 + x2"), p(2, "x1^2 - x2^2"));
        let prod = &(&p(3, "y1 - y2") * &p(3, "y2 - y3")) * &p(3, "y1 - y3");
        assert_eq!(prod.len(), 6);
        assert_eq!(
            prod.to_text(),
            "y1^2*y2 - y1^2*y3 - y1*y2^2 + y1*y3^2 + y2^2*y3 - y2*y3^2"
        );
        assert!((&p(2, "x1 + 3") * &Poly::zero(2)).is_zero());
        assert!(p(2, "x1").try_mul(&p(1, "x1")).is_err());
    }

    #[test]
    fn partial_examples() {
        assert_eq!(p(1, "x1^3").partial(Var::X(0), 2), p(1, "6*x1"));
        assert_eq!(p(2, "x1 - x2").partial(Var::X(0), 1), Poly::one(2));
        assert_eq!(p(2, "x1*y2 - x2*y1").partial(Var::Y(1), 1), p(2, "x1"));
        assert!(Poly::constant(2, int(5)).partial(Var::X(1), 1).is_zero());
    }

    #[test]
    fn permute_examples() {
        let s = Perm::from_one_line(&[2, 1, 3]).unwrap();
        assert_eq!(p(3, "x1*y2").permute(&s).unwrap(), p(3, "x2*y1"));
        let delta = p(
            3,
            "x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2",
        );
        for t in 0..2 {
            let tr = Perm::adjacent_transposition(3, t);
            assert_eq!(delta.permute(&tr).unwrap(), -&delta);
        }
        let p11 = p(3, "x1*y1 + x2*y2 + x3*y3");
        for s in Perm::all(3) {
            assert_eq!(p11.permute(&s).unwrap(), p11);
        }
        assert!(p11.permute(&Perm::identity(2)).is_err());
    }

    #[test]
    fn antisymmetrize_examples() {
        // Oracle: expand the six signed images by hand.
        let f = p(3, "x1^2*x2");
        let images = [
            ("x1^2*x2", 1),
            ("x1^2*x3", -1),
            ("x2^2*x1", -1),
            ("x2^2*x3", 1),
            ("x3^2*x1", 1),
            ("x3^2*x2", -1),
        ];
        let mut expected = Poly::zero(3);
        for (s, sign) in images {
            expected = &expected + &p(3, s).scale(&int(sign));
        }
        assert_eq!(f.antisymmetrize(), expected);
        assert_eq!(
            expected,
            p(
                3,
                "x1^2*x2 - x1^2*x3 - x1*x2^2 + x1*x3^2 + x2^2*x3 - x2*x3^2"
            )
        );
        assert!(p(3, "x1 + x2 + x3").antisymmetrize().is_zero());
        assert!(Poly::zero(3).antisymmetrize().is_zero());
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(p(1, "x1").inner_product(&p(1, "x1")).unwrap(), int(1));
        assert_eq!(p(1, "x1^2").inner_product(&p(1, "x1^2")).unwrap(), int(2));
        assert_eq!(p(2, "x1*y1").inner_product(&p(2, "x1*y2")).unwrap(), int(0));
        assert!(p(2, "x1").inner_product(&p(1, "x1")).is_err());
    }

    #[test]
    fn bidegree_split_examples() {
        let split = p(1, "x1 + y1").bidegree_split();
        assert_eq!(split.len(), 2);
        assert_eq!(split[&BiDegree::new(1, 0)], p(1, "x1"));
        assert_eq!(split[&BiDegree::new(0, 1)], p(1, "y1"));
        assert_eq!(p(2, "x1*y2 - x2*y1").bidegree_split().len(), 1);
        assert!(Poly::zero(2).bidegree_split().is_empty());
    }

    #[test]
    fn text_format() {
        let f = p(3, "-y2 + 3/2*x1^2*y3");
        assert_eq!(f.to_text(), "3/2*x1^2*y3 - y2");
        assert_eq!(Poly::zero(2).to_text(), "0");
        assert_eq!(p(2, "-1 + x1").to_text(), "x1 - 1");
        assert_eq!(p(2, "2*x1*x1").to_text(), "2*x1^2");
        for bad in ["", "x0", "x3", "x1 +", "x1 y1", "1/0", "z1"] {
            assert!(Poly::parse(2, bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn json_format() {
        let f = p(3, "3/2*x1^2*y3 - y2");
        let v = f.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"n":3,"terms":[{"c":[3,2],"x":[2,0,0],"y":[0,0,1]},{"c":[-1,1],"x":[0,0,0],"y":[0,1,0]}]}"#
        );
        assert_eq!(Poly::from_json(&v).unwrap(), f);
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_bidegree(2, BiDegree::new(1, 0)).len(), 2);
        assert_eq!(monomials_of_bidegree(4, BiDegree::new(3, 3)).len(), 400);
        assert_eq!(compositions(3, 2).len(), 6);
    }

    #[test]
    fn ratio() {
        let a = p(2, "2*x1 - 4*x2");
        let b = p(2, "x1 - 2*x2");
        assert_eq!(a.ratio_to(&b), Some(int(2)));
        assert_eq!(a.ratio_to(&p(2, "x1 - x2")), None);
    }
}
