//! Exponent-vector monomials and graded monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

/// A monomial in a fixed number of variables, stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(SmallVec<[u8; 16]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        Self(SmallVec::from_slice(exps))
    }

    /// Square-free monomial with the given variables.
    pub fn squarefree(nvars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(nvars);
        for v in vars {
            m.0[v] = 1;
        }
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, index: usize) -> Self {
        let mut m = self.clone();
        m.0[index] += 1;
        m
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Self {
        Self(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    /// Bitmask of the variables (only the first 64) with positive exponent.
    pub fn support_mask(&self) -> u64 {
        self.0
            .iter()
            .take(64)
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | (1u64 << i))
    }

    /// Largest variable index with positive exponent.
    pub fn last_var(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }

    /// Re-embeds the monomial into a ring with `nvars` variables, keeping
    /// indices (new variables get exponent zero).
    pub fn extend(&self, nvars: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[..self.nvars()].copy_from_slice(&self.0);
        m
    }

    /// All monomials of degree `degree` in `nvars` variables, in
    /// lexicographic order of exponent vectors (largest first).
    pub fn all_of_degree(nvars: usize, degree: usize) -> Vec<Monomial> {
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(Self::one(0));
            }
            return out;
        }
        let mut current = vec![0u8; nvars];
        fill(&mut current, 0, degree, &mut out);
        out
    }
}

fn fill(current: &mut Vec<u8>, pos: usize, remaining: usize, out: &mut Vec<Monomial>) {
    if pos + 1 == current.len() {
        current[pos] = remaining as u8;
        out.push(Monomial::from_exponents(current));
        current[pos] = 0;
        return;
    }
    for e in (0..=remaining).rev() {
        current[pos] = e as u8;
        fill(current, pos + 1, remaining - e, out);
    }
    current[pos] = 0;
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Number of monomials of degree `degree` in `nvars` variables.
pub fn count_monomials(nvars: usize, degree: usize) -> u64 {
    if nvars == 0 {
        return u64::from(degree == 0);
    }
    binomial((degree + nvars - 1) as u64, (nvars - 1) as u64)
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc as u64
}

/// Variable ranking for graded reverse lexicographic comparison.
///
/// `largest_first[0]` is the largest variable. Two monomials of equal degree
/// compare by the exponent of the smallest variable where they differ: the
/// one with the smaller exponent there is the larger monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RevLex {
    largest_first: Vec<usize>,
}

impl RevLex {
    /// Variable 0 is largest, variable `nvars - 1` smallest.
    pub fn natural(nvars: usize) -> Self {
        Self { largest_first: (0..nvars).collect() }
    }

    /// Explicit order, listing every variable once from largest to smallest.
    pub fn with_order(largest_first: Vec<usize>) -> Self {
        let mut seen = largest_first.clone();
        seen.sort_unstable();
        assert!(
            seen.iter().enumerate().all(|(i, &v)| i == v),
            "variable order must be a permutation"
        );
        Self { largest_first }
    }

    pub fn nvars(&self) -> usize {
        self.largest_first.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (da, db) = (a.degree(), b.degree());
        if da != db {
            return da.cmp(&db);
        }
        for &v in self.largest_first.iter().rev() {
            let (ea, eb) = (a.exponents()[v], b.exponents()[v]);
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }

    /// Sorts monomials from largest to smallest.
    pub fn sort_descending(&self, monomials: &mut [Monomial]) {
        monomials.sort_by(|a, b| self.cmp(b, a));
    }
}
