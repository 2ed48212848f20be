//! The constructions of `I_L`, `I_C` and `I_G` starting from an arbitrary
//! Artinian ideal instead of a Stanley-Reisner ideal.

use serde_json::json;

use crate::algebra::quotient::{degree_columns, Elimination, QuotientRing};
use crate::algebra::random::derive_seed;
use crate::algebra::GradedIdeal;
use crate::error::{LabError, Result};
use crate::field::PrimeField;
use crate::lefschetz::{has_wlp, ArtinianAlgebra, TrialConfig, DEFAULT_ARTINIAN_CAP};
use crate::monomial::{Monomial, RevLex};
use crate::poly::HomogPoly;

use super::report::{CheckReport, Status};
use super::RtIdeals;

#[derive(Debug)]
pub struct ArtinianSeed {
    field: PrimeField,
    i: GradedIdeal,
    x_sigma: Monomial,
    q: usize,
    socle: usize,
    i_l: GradedIdeal,
    degenerate: bool,
}

/// Generators of `(I : u)` for Artinian `I`, degree by degree up to one past
/// the socle degree, keeping only those outside the ideal generated so far.
fn colon_generators(field: PrimeField, ring: &QuotientRing, u: &HomogPoly, socle: usize) -> Vec<HomogPoly> {
    let n = ring.target_nvars();
    let order = RevLex::natural(n);
    let mut gens: Vec<HomogPoly> = Vec::new();
    for m in 0..=socle + 1 {
        let cols = degree_columns(n, m, &order);
        let colon = ring.colon_space_in(u, m, cols.clone());
        let earlier = QuotientRing::with_options(field, GradedIdeal::new(n, gens.clone()), Elimination::None, None);
        let mut span = earlier.ideal_space_in(m, cols);
        for row in colon.rows() {
            if span.insert(row) {
                gens.push(colon.vector_to_poly(row));
            }
        }
        if m == 0 && !gens.is_empty() {
            break;
        }
    }
    gens
}

/// `I_L = I : x_σ` together with the `R[T]` ideals built from it. `I` must
/// be Artinian (checked up to the usual degree cap).
pub fn build_artinian_seed(field: PrimeField, i: GradedIdeal, x_sigma: Monomial, q: usize) -> Result<ArtinianSeed> {
    let n = i.nvars();
    if x_sigma.nvars() != n {
        return Err(LabError::BadParameters("x_sigma lives in a different ring".into()));
    }
    let ring = QuotientRing::with_options(field, i.clone(), Elimination::None, None);
    let socle = (0..=DEFAULT_ARTINIAN_CAP)
        .find(|&m| ring.slice(m).dim() == 0)
        .ok_or_else(|| LabError::NotArtinianSeed(format!("no zero slice up to degree {DEFAULT_ARTINIAN_CAP}")))?
        .checked_sub(1)
        .ok_or_else(|| LabError::NotArtinianSeed("the ideal is the unit ideal".into()))?;
    let u = HomogPoly::monomial(x_sigma.clone(), 1);
    let gens = colon_generators(field, &ring, &u, socle);
    let degenerate = gens.iter().any(|g| g.degree() == 0);
    Ok(ArtinianSeed { field, i_l: GradedIdeal::new(n, gens), i, x_sigma, q, socle, degenerate })
}

impl ArtinianSeed {
    pub fn i(&self) -> &GradedIdeal {
        &self.i
    }

    pub fn i_l(&self) -> &GradedIdeal {
        &self.i_l
    }

    /// `x_σ ∈ I`, so `I_L = (1)`.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn socle_degree(&self) -> usize {
        self.socle
    }

    fn rt(&self) -> RtIdeals<'_> {
        RtIdeals { n: self.i.nvars(), q: self.q, x_sigma: &self.x_sigma, i: &self.i, i_l: &self.i_l }
    }

    /// `(I, T^{q+1}, T·I_L)`.
    pub fn c_ideal(&self) -> GradedIdeal {
        self.rt().i_c()
    }

    /// `(I, T^{q+1} - x_σ, T·I_L)`.
    pub fn g_ideal(&self) -> GradedIdeal {
        self.rt().i_g_in(&self.field)
    }

    /// WLP of `R/I`, `R[T]/(I, T^{q+1}, T I_L)` and
    /// `R[T]/(I, T^{q+1} - x_σ, T I_L)`, with no forms appended.
    pub fn run_checks(&self, trials: usize, seed: u64) -> Result<Vec<CheckReport>> {
        let cases = [("seed_wlp_i", self.i.clone()), ("seed_wlp_c", self.c_ideal()), ("seed_wlp_g", self.g_ideal())];
        let caveat = format!(
            "computed over GF({}); the statements concern characteristic 0",
            self.field.modulus()
        );
        cases
            .into_iter()
            .map(|(name, ideal)| {
                let algebra = ArtinianAlgebra::new(self.field, ideal)?;
                let cfg = TrialConfig::new(trials, derive_seed(seed, name, 0));
                let verdict = has_wlp(&algebra, &cfg)?;
                Ok(CheckReport::new(
                    name,
                    Status::Info,
                    json!({
                        "hf": algebra.hilbert_function().values(),
                        "verdict": verdict,
                        "degenerate_i_l": self.degenerate,
                        "caveat": caveat,
                    }),
                ))
            })
            .collect()
    }
}
