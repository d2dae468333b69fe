//! Generating functions in q and t with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

/// Σ c_{ij} q^i t^j.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QtPolynomial {
    coeffs: BTreeMap<(u32, u32), BigInt>,
}

impl QtPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::zero();
        p.add_term(0, 0, BigInt::one());
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: impl Into<BigInt>) {
        let c = c.into();
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry((i, j)).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), i64)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigInt {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in ascending (i, j) order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn swap_qt(&self) -> QtPolynomial {
        QtPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(i, j), c)| ((j, i), c.clone()))
                .collect(),
        }
    }

    pub fn is_qt_symmetric(&self) -> bool {
        *self == self.swap_qt()
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// H(q, 1).
    pub fn at_t_one(&self) -> QPoly {
        let mut out = QPoly::zero();
        for (&(i, _), c) in &self.coeffs {
            out.add_term(i as usize, c.clone());
        }
        out
    }

    /// q^shift · H(q, 1/q); `None` if a negative power would remain.
    pub fn principal_specialization(&self, shift: u32) -> Option<QPoly> {
        let mut out = QPoly::zero();
        for (&(i, j), c) in &self.coeffs {
            let e = (i + shift).checked_sub(j)?;
            out.add_term(e as usize, c.clone());
        }
        Some(out)
    }

    /// Descending by q-degree, then by t-degree.
    fn display_order(&self) -> Vec<(&(u32, u32), &BigInt)> {
        self.coeffs.iter().rev().collect()
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .display_order()
            .into_iter()
            .map(|(&(i, j), c)| json!({"q": i, "t": j, "c": bigint_json(c)}))
            .collect();
        json!({ "terms": terms, "text": self.to_string() })
    }

    /// `q,t,coeff` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("q,t,coeff\n");
        for (&(i, j), c) in self.display_order() {
            s.push_str(&format!("{i},{j},{c}\n"));
        }
        s
    }
}

pub(crate) fn bigint_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn power(var: &str, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(var.to_string()),
        _ => Some(format!("{var}^{e}")),
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (Vec<String>, &'a BigInt)>,
) -> fmt::Result {
    let mut first = true;
    for (factors, c) in terms {
        let neg = c.is_negative();
        let a = c.abs();
        if first {
            if neg {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        let mut parts = Vec::new();
        if !a.is_one() || factors.is_empty() {
            parts.push(a.to_string());
        }
        parts.extend(factors);
        f.write_str(&parts.join("*"))?;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for QtPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.display_order()
                .into_iter()
                .map(|(&(i, j), c)| (power("q", i).into_iter().chain(power("t", j)).collect(), c)),
        )
    }
}

/// Univariate polynomial in q, dense ascending coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_coeffs([1])
    }

    pub fn from_coeffs(c: impl IntoIterator<Item = i64>) -> Self {
        let mut p = QPoly {
            coeffs: c.into_iter().map(BigInt::from).collect(),
        };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn add_term(&mut self, e: usize, c: BigInt) {
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, BigInt::zero());
        }
        self.coeffs[e] += c;
        self.trim();
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = QPoly { coeffs: out };
        p.trim();
        p
    }

    /// Exact quotient, or `None` if `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        let dl = d.degree()?;
        let lead = &d.coeffs[dl];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dl {
            return rem.iter().all(|c| c.is_zero()).then(QPoly::zero);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dl];
        for k in (0..quot.len()).rev() {
            let (q, r) = rem[k + dl].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.iter().all(|c| c.is_zero()).then(|| {
            let mut p = QPoly { coeffs: quot };
            p.trim();
            p
        })
    }

    /// [k]_q = 1 + q + … + q^{k−1}.
    pub fn q_integer(k: usize) -> QPoly {
        QPoly::from_coeffs(std::iter::repeat_n(1, k))
    }

    /// Gaussian binomial via the q-Pascal rule.
    pub fn q_binomial(n: usize, k: usize) -> QPoly {
        if k > n {
            return QPoly::zero();
        }
        let mut row = vec![QPoly::one()];
        for i in 1..=n {
            let mut next = vec![QPoly::one(); i + 1];
            for j in 1..i {
                // [i, j] = [i−1, j−1] + q^j [i−1, j]
                let mut shifted = QPoly::zero();
                for (e, c) in row[j].coeffs.iter().enumerate() {
                    shifted.add_term(e + j, c.clone());
                }
                next[j] = row[j - 1].add(&shifted);
            }
            row = next;
        }
        row.swap_remove(k)
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (e, c) in other.coeffs.iter().enumerate() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "coeffs": self.coeffs.iter().map(bigint_json).collect::<Vec<_>>(),
            "text": self.to_string(),
        })
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (power("q", e as u32).into_iter().collect(), c)),
        )
    }
}
