use serde::{Deserialize, Serialize};

use crate::complex::{FVector, SimplicialComplex};
use crate::error::{LabError, Result};
use crate::field::PrimeField;
use crate::monomial::{binomial, Monomial};
use crate::poly::{HomogPoly, PolyJson};

use super::seq::IntSeq;

/// A homogeneous ideal given by generators in `nvars` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIdeal {
    nvars: usize,
    generators: Vec<HomogPoly>,
}

impl GradedIdeal {
    pub fn new(nvars: usize, generators: impl IntoIterator<Item = HomogPoly>) -> Self {
        let generators: Vec<HomogPoly> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &generators {
            assert_eq!(g.nvars(), nvars, "generator in wrong ring");
        }
        Self { nvars, generators }
    }

    pub fn zero(nvars: usize) -> Self {
        Self { nvars, generators: Vec::new() }
    }

    pub fn from_monomials(nvars: usize, monomials: impl IntoIterator<Item = Monomial>) -> Self {
        Self::new(nvars, monomials.into_iter().map(|m| HomogPoly::monomial(m, 1)))
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[HomogPoly] {
        &self.generators
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(HomogPoly::is_monomial)
    }

    /// Monomial generators, if every generator is a monomial.
    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        self.generators
            .iter()
            .map(|g| g.is_monomial().then(|| g.terms()[0].0.clone()))
            .collect()
    }

    /// `self + (extra)`.
    pub fn with(&self, extra: impl IntoIterator<Item = HomogPoly>) -> Self {
        Self::new(self.nvars, self.generators.iter().cloned().chain(extra))
    }

    /// The same generators in a ring with `nvars` variables (new ones appended).
    pub fn extend(&self, nvars: usize) -> Self {
        Self::new(nvars, self.generators.iter().map(|g| g.extend(nvars)))
    }

    /// Exact colon `(M : u)` of a monomial ideal by a monomial, minimalized.
    pub fn monomial_colon(&self, u: &Monomial) -> Option<Self> {
        let gens = self.monomial_generators()?;
        let quotients = gens.iter().map(|g| g.gcd(u).quotient_of(g));
        Some(Self::from_monomials(self.nvars, minimalize(quotients.collect())))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson { n: self.nvars, generators: self.generators.iter().map(HomogPoly::to_json).collect() }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("ideal serializes")
    }

    pub fn from_json_str(s: &str, field: &PrimeField) -> Result<Self> {
        let raw: IdealJson = serde_json::from_str(s)?;
        raw.into_ideal(field)
    }
}

/// Drops monomials divisible by another one in the list; result sorted.
pub fn minimalize(mut monomials: Vec<Monomial>) -> Vec<Monomial> {
    monomials.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    monomials.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for m in monomials {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort();
    kept
}

/// `{"n": ..., "generators": [{"degree": ..., "terms": [[exponents], coeff]}]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<PolyJson>,
}

impl IdealJson {
    pub fn into_ideal(self, field: &PrimeField) -> Result<GradedIdeal> {
        let n = self.n;
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in self.generators {
            for (exps, _) in &g.terms {
                if exps.len() != n {
                    return Err(LabError::BadSpec(format!(
                        "exponent vector {exps:?} does not have {n} entries"
                    )));
                }
                let deg: usize = exps.iter().map(|&e| e as usize).sum();
                if deg != g.degree {
                    return Err(LabError::BadSpec(format!(
                        "term {exps:?} does not have degree {}",
                        g.degree
                    )));
                }
            }
            let terms = g
                .terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(&e), field.reduce(c)));
            gens.push(HomogPoly::from_terms(n, g.degree, terms, field));
        }
        Ok(GradedIdeal::new(n, gens))
    }
}

/// Maps vertex labels of a complex to variable indices (sorted labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexIndex {
    labels: Vec<u32>,
}

impl VertexIndex {
    pub fn new(d: &SimplicialComplex) -> Self {
        Self { labels: d.vertices().to_vec() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    /// Square-free monomial `x_s` for a set of labels.
    pub fn monomial_of(&self, labels: &[u32]) -> Monomial {
        Monomial::squarefree(
            self.labels.len(),
            labels.iter().map(|l| self.index_of(*l).expect("label in vertex set")),
        )
    }
}

/// Stanley-Reisner ideal: minimal non-faces as square-free monomials, in the
/// ring whose variables are the sorted vertex labels.
pub fn stanley_reisner_ideal(d: &SimplicialComplex) -> GradedIdeal {
    let index = VertexIndex::new(d);
    GradedIdeal::from_monomials(
        index.len(),
        d.minimal_non_faces().iter().map(|f| index.monomial_of(f.vertices())),
    )
}

/// `HF(k[D], m) = Σ_i f_{i-1} C(m-1, i-1)` for `m >= 1`, from face counts.
pub fn face_count_hilbert_function(d: &SimplicialComplex, m_max: usize) -> IntSeq {
    let FVector(f) = d.f_vector();
    let values = (0..=m_max)
        .map(|m| {
            if m == 0 {
                return 1;
            }
            (1..f.len())
                .filter(|&i| i <= m)
                .map(|i| f[i] * binomial((m - 1) as u64, (i - 1) as u64) as i64)
                .sum()
        })
        .collect();
    IntSeq::from_values(0, values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{cross_polytope_boundary, simplex_boundary, Face};

    #[test]
    fn sr_ideals() {
        let i = stanley_reisner_ideal(&simplex_boundary(4).unwrap());
        assert_eq!(i.monomial_generators().unwrap(), vec![Monomial::from_exponents(&[1, 1, 1, 1])]);
        let sq = SimplicialComplex::from_faces([[1, 2], [2, 3], [3, 4], [1, 4]].map(Face::from));
        let mut gens = stanley_reisner_ideal(&sq).monomial_generators().unwrap();
        gens.sort();
        assert_eq!(
            gens,
            vec![Monomial::from_exponents(&[0, 1, 0, 1]), Monomial::from_exponents(&[1, 0, 1, 0])]
        );
        let oct = stanley_reisner_ideal(&cross_polytope_boundary(3).unwrap());
        assert_eq!(oct.generators().len(), 3);
    }

    #[test]
    fn monomial_colon() {
        let i = GradedIdeal::from_monomials(4, [Monomial::from_exponents(&[1, 1, 1, 1])]);
        let c = i.monomial_colon(&Monomial::from_exponents(&[1, 1, 0, 0])).unwrap();
        assert_eq!(c.monomial_generators().unwrap(), vec![Monomial::from_exponents(&[0, 0, 1, 1])]);
        let sq = GradedIdeal::from_monomials(2, [Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[0, 2])]);
        let c = sq.monomial_colon(&Monomial::from_exponents(&[1, 1])).unwrap();
        assert_eq!(
            c.monomial_generators().unwrap(),
            vec![Monomial::from_exponents(&[0, 1]), Monomial::from_exponents(&[1, 0])]
        );
    }

    #[test]
    fn json_reduces_coefficients() {
        let f = PrimeField::default();
        let s = r#"{"n":2,"generators":[{"degree":2,"terms":[[[2,0],32004],[[0,2],1]]}]}"#;
        let i = GradedIdeal::from_json_str(s, &f).unwrap();
        assert_eq!(i.generators()[0].terms()[1].1, 1);
        let back = GradedIdeal::from_json_str(&i.to_json_string(), &f).unwrap();
        assert_eq!(back, i);
        assert!(GradedIdeal::from_json_str(r#"{"n":2,"generators":[{"degree":1,"terms":[[[2,0],1]]}]}"#, &f).is_err());
    }
}
