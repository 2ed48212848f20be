//! Homogeneous polynomials over GF(p).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::field::PrimeField;
use crate::monomial::Monomial;

/// A homogeneous polynomial. Terms are kept sorted by monomial with no zero
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogPoly {
    nvars: usize,
    degree: usize,
    terms: Vec<(Monomial, u32)>,
}

impl HomogPoly {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        Self { nvars, degree, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(Monomial::one(nvars), 1)
    }

    pub fn monomial(m: Monomial, coeff: u32) -> Self {
        let (nvars, degree) = (m.nvars(), m.degree());
        let terms = if coeff == 0 { Vec::new() } else { vec![(m, coeff)] };
        Self { nvars, degree, terms }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::monomial(Monomial::var(nvars, index), 1)
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[u32], field: &PrimeField) -> Self {
        let n = coeffs.len();
        Self::from_terms(
            n,
            1,
            coeffs.iter().enumerate().map(|(i, &c)| (Monomial::var(n, i), c)),
            field,
        )
    }

    /// Collects terms, combining duplicates. Panics if a monomial has the
    /// wrong degree.
    pub fn from_terms(
        nvars: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Monomial, u32)>,
        field: &PrimeField,
    ) -> Self {
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial in wrong ring");
            assert_eq!(m.degree(), degree, "inhomogeneous term {m:?}");
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, field.reduce(u64::from(c)));
        }
        let terms = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        Self { nvars, degree, terms }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient vector of a linear form.
    pub fn linear_coefficients(&self) -> Vec<u32> {
        assert_eq!(self.degree, 1);
        let mut out = vec![0; self.nvars];
        for (m, c) in &self.terms {
            let v = m.last_var().expect("linear term");
            out[v] = *c;
        }
        out
    }

    pub fn scale(&self, c: u32, field: &PrimeField) -> Self {
        if c == 0 {
            return Self::zero(self.nvars, self.degree);
        }
        Self {
            nvars: self.nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), field.mul(*a, c))).collect(),
        }
    }

    pub fn add(&self, other: &Self, field: &PrimeField) -> Self {
        assert_eq!(self.degree, other.degree, "adding polynomials of different degrees");
        Self::from_terms(
            self.nvars,
            self.degree,
            self.terms.iter().chain(&other.terms).cloned(),
            field,
        )
    }

    pub fn sub(&self, other: &Self, field: &PrimeField) -> Self {
        self.add(&other.scale(field.neg(1), field), field)
    }

    pub fn mul(&self, other: &Self, field: &PrimeField) -> Self {
        let mut acc: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let e = acc.entry(m1.mul(m2)).or_insert(0);
                *e = field.add(*e, field.mul(*c1, *c2));
            }
        }
        Self {
            nvars: self.nvars,
            degree: self.degree + other.degree,
            terms: acc.into_iter().filter(|(_, c)| *c != 0).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            nvars: self.nvars,
            degree: self.degree + m.degree(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), *c)).collect(),
        }
    }

    pub fn pow(&self, exp: usize, field: &PrimeField) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..exp {
            acc = acc.mul(self, field);
        }
        acc
    }

    /// Embeds into a ring with more variables (new variables appended).
    pub fn extend(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        Self {
            nvars,
            degree: self.degree,
            terms: self.terms.iter().map(|(m, c)| (m.extend(nvars), *c)).collect(),
        }
    }

    /// Substitutes `images[i]` (each linear, in a common target ring) for
    /// variable `i`.
    pub fn substitute(&self, images: &[HomogPoly], target_nvars: usize, field: &PrimeField) -> Self {
        assert_eq!(images.len(), self.nvars);
        let mut out = Self::zero(target_nvars, self.degree);
        let mut powers: BTreeMap<(usize, u8), HomogPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut term = Self::monomial(Monomial::one(target_nvars), *c);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = powers
                    .entry((v, e))
                    .or_insert_with(|| images[v].pow(e as usize, field));
                term = term.mul(p, field);
            }
            out = if out.is_zero() { term } else { out.add(&term, field) };
        }
        out
    }
}

/// Wire form of a polynomial: `{"degree": d, "terms": [[exponents, coeff], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub degree: usize,
    pub terms: Vec<(Vec<u8>, u64)>,
}

impl HomogPoly {
    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.exponents().to_vec(), u64::from(*c)))
                .collect(),
        }
    }
}
