//! Permutations of `{0, .., n-1}` in one-line notation.
//!
//! Printed and parsed one-based, stored zero-based.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// Builds a permutation from zero-based images.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation {
                    n,
                    detail: format!("{:?}", images),
                });
            }
            seen[v] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from one-based one-line notation, e.g. `[3, 1, 2]`.
    pub fn from_one_line(one_based: &[usize]) -> Result<Self> {
        let n = one_based.len();
        if one_based.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::NotAPermutation {
                n,
                detail: format!("{:?}", one_based),
            });
        }
        Perm::new(one_based.iter().map(|&v| v - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Zero-based image of `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v + 1).collect()
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v] = i;
        }
        Perm(inv)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn sign(&self) -> i32 {
        sign_of(&self.0)
    }

    /// Adjacent transposition swapping `i` and `i + 1`.
    pub fn adjacent_transposition(n: usize, i: usize) -> Perm {
        let mut v: Vec<usize> = (0..n).collect();
        v.swap(i, i + 1);
        Perm(v)
    }

    /// All permutations of size `n` in lexicographic order of their one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Perm> {
        Permutations::new(n).map(|(p, _)| Perm(p))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(|v| v.to_string()).collect();
        if self.0.len() < 10 {
            write!(f, "{}", parts.concat())
        } else {
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Sign of a sequence of distinct values, by cycle counting on its ranks.
pub fn sign_of(values: &[usize]) -> i32 {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| values[i]);
    let mut seen = vec![false; n];
    let mut sign = 1;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            j = order[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Lexicographic permutation stream that tracks the sign incrementally.
pub struct Permutations {
    current: Vec<usize>,
    sign: i32,
    started: bool,
    done: bool,
}

impl Permutations {
    pub fn new(n: usize) -> Self {
        Permutations {
            current: (0..n).collect(),
            sign: 1,
            started: false,
            done: false,
        }
    }

    fn advance(&mut self) -> bool {
        let p = &mut self.current;
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        let flips = 1 + (n - i) / 2;
        if flips % 2 == 1 {
            self.sign = -self.sign;
        }
        true
    }
}

impl Iterator for Permutations {
    type Item = (Vec<usize>, i32);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        Some((self.current.clone(), self.sign))
    }
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stream_signs_match_cycle_count() {
        for n in 0..=6 {
            let mut count = 0;
            for (p, s) in Permutations::new(n) {
                assert_eq!(s, sign_of(&p), "{:?}", p);
                count += 1;
            }
            assert_eq!(count, factorial(n).max(1));
        }
    }

    #[test]
    fn lexicographic_order() {
        let all: Vec<String> = Perm::all(3).map(|p| p.to_string()).collect();
        assert_eq!(all, ["123", "132", "213", "231", "312", "321"]);
    }

    #[test]
    fn compose_and_inverse() {
        let s = Perm::from_one_line(&[2, 3, 1]).unwrap();
        let t = Perm::from_one_line(&[3, 1, 2]).unwrap();
        assert_eq!(s.compose(&s.inverse()), Perm::identity(3));
        assert_eq!(s.compose(&t).one_line(), vec![1, 2, 3]);
        assert_eq!(s.sign(), 1);
        assert_eq!(Perm::adjacent_transposition(3, 0).sign(), -1);
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Perm::from_one_line(&[1, 1, 2]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
        assert!(Perm::new(vec![0, 2]).is_err());
    }
}
