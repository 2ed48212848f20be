//! The cast of ideals and algebras attached to a stellar subdivision
//! `D -> D_σ`, and the checks run on it.

mod checks;
mod report;
mod colons;
mod seed;
mod theorems;

pub use checks::{
    verify_c_decomposition, verify_g_properties, verify_hf_stellar_identity, verify_initial_ideal,
    verify_iq_hf,
};
pub use report::{CheckReport, InstanceHeader, InstanceReport, Status};
pub use colons::{build_colon_bundle, compare_pa_pb_pc, verify_triple_equality, ColonBundle};
pub use seed::{build_artinian_seed, ArtinianSeed};
pub use theorems::{
    check_iff, check_lemma_consistency, check_theorem_down, check_theorem_stellar,
    probe_conjecture_g,
};

use crate::algebra::random::{derive_seed, random_linear_forms, rng_from_seed};
use crate::algebra::{stanley_reisner_ideal, GradedIdeal, VertexIndex};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{LabError, Result};
use crate::field::PrimeField;
use crate::homology::gorenstein_star_report;
use crate::lefschetz::{artinian_reduction, ArtinianAlgebra, TrialConfig, WitnessShape};
use crate::monomial::Monomial;
use crate::poly::HomogPoly;

/// A complex checked to be Gorenstein* over a given prime field.
#[derive(Clone, Debug)]
pub struct GorensteinStar {
    complex: SimplicialComplex,
    field: PrimeField,
    hash: String,
}

impl GorensteinStar {
    pub fn new(complex: SimplicialComplex, field: PrimeField) -> Result<Self> {
        let report = gorenstein_star_report(&complex, field);
        if !report.is_gorenstein_star {
            return Err(LabError::NotGorensteinStar {
                prime: field.modulus(),
                reason: report.reason.unwrap_or_default(),
            });
        }
        let hash = complex.content_hash();
        Ok(Self { complex, field, hash })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn content_hash(&self) -> &str {
        &self.hash
    }

    /// Faces with `lo <= dim <= hi`, by dimension then lexicographically.
    pub fn faces_in_dims(&self, lo: i64, hi: i64) -> Vec<Face> {
        self.complex.faces().into_iter().filter(|f| (lo..=hi).contains(&f.dim())).collect()
    }
}

/// `(p1, p2)`: `(d/2 - 1, d/2)` for even `d`, `((d-1)/2, (d-1)/2)` for odd.
pub fn middle_degrees(d: usize) -> (usize, usize) {
    if d.is_multiple_of(2) {
        (d / 2 - 1, d / 2)
    } else {
        ((d - 1) / 2, (d - 1) / 2)
    }
}

/// A pair `(D, σ)` with its ideals and Artinian reductions. Variables of `R`
/// are the sorted vertex labels of `D`; `R[T]` appends `T` as the last
/// variable, which is also the variable of the new vertex of `D_σ`.
#[derive(Debug)]
pub struct StellarInstance {
    field: PrimeField,
    seed: u64,
    complex: SimplicialComplex,
    complex_hash: String,
    sigma: Face,
    q: usize,
    d: usize,
    p1: usize,
    p2: usize,
    link: SimplicialComplex,
    subdivision: SimplicialComplex,
    index: VertexIndex,
    x_sigma: Monomial,
    i: GradedIdeal,
    i_l: GradedIdeal,
    forms: Vec<HomogPoly>,
    a: ArtinianAlgebra,
    b: ArtinianAlgebra,
    c: ArtinianAlgebra,
    g: ArtinianAlgebra,
}

impl StellarInstance {
    /// Validates `d` as Gorenstein* and builds the instance.
    pub fn new(d: SimplicialComplex, sigma: Face, field: PrimeField, seed: u64) -> Result<Self> {
        Self::build(&GorensteinStar::new(d, field)?, sigma, seed)
    }

    pub fn build(gs: &GorensteinStar, sigma: Face, seed: u64) -> Result<Self> {
        let field = gs.field();
        let complex = gs.complex().clone();
        if !complex.is_face(&sigma) {
            return Err(LabError::NotAFace(format!("{sigma:?}")));
        }
        if sigma.dim() < 1 {
            return Err(LabError::FaceTooSmall(format!("{sigma:?}")));
        }
        let q = sigma.dim() as usize;
        let d = (complex.dim() + 1) as usize;
        let (p1, p2) = middle_degrees(d);
        let link = complex.link(&sigma)?;
        let subdivision = complex.stellar_subdivision(&sigma, complex.fresh_vertex())?;
        let index = VertexIndex::new(&complex);
        let n = index.len();
        let x_sigma = index.monomial_of(sigma.vertices());
        let i = stanley_reisner_ideal(&complex);
        let i_l = i.monomial_colon(&x_sigma).expect("Stanley-Reisner ideals are monomial");
        let mut rng = rng_from_seed(derive_seed(seed, "forms", 0));
        let forms = random_linear_forms(n, d + 1, &field, &mut rng);
        let reduction = &forms[..d];
        let a = ArtinianAlgebra::with_forms(field, i.clone(), reduction.to_vec())?;
        let b = ArtinianAlgebra::with_forms(field, i_l.clone(), reduction.to_vec())?;
        let rt = RtIdeals { n, q, x_sigma: &x_sigma, i: &i, i_l: &i_l };
        let reduction_t: Vec<HomogPoly> = reduction.iter().map(|f| f.extend(n + 1)).collect();
        let c = ArtinianAlgebra::with_forms(field, rt.i_c(), reduction_t.clone())?;
        let g = ArtinianAlgebra::with_forms(field, rt.i_g_in(&field), reduction_t)?;
        Ok(Self {
            field,
            seed,
            complex_hash: gs.content_hash().to_string(),
            complex,
            sigma,
            q,
            d,
            p1,
            p2,
            link,
            subdivision,
            index,
            x_sigma,
            i,
            i_l,
            forms,
            a,
            b,
            c,
            g,
        })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn sigma(&self) -> &Face {
        &self.sigma
    }

    /// `dim σ`.
    pub fn q(&self) -> usize {
        self.q
    }

    /// `dim D + 1`.
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn p1(&self) -> usize {
        self.p1
    }

    pub fn p2(&self) -> usize {
        self.p2
    }

    /// `d + q + 2`.
    pub fn default_m_max(&self) -> usize {
        self.d + self.q + 2
    }

    pub fn link(&self) -> &SimplicialComplex {
        &self.link
    }

    /// `D_σ`, with the new vertex labelled one past the largest label of `D`.
    pub fn subdivision(&self) -> &SimplicialComplex {
        &self.subdivision
    }

    pub fn vertex_index(&self) -> &VertexIndex {
        &self.index
    }

    /// Number of variables of `R`.
    pub fn n(&self) -> usize {
        self.index.len()
    }

    pub fn x_sigma(&self) -> &Monomial {
        &self.x_sigma
    }

    pub fn i(&self) -> &GradedIdeal {
        &self.i
    }

    pub fn i_l(&self) -> &GradedIdeal {
        &self.i_l
    }

    /// `f_1, ..., f_{d+1}` in `R`.
    pub fn forms(&self) -> &[HomogPoly] {
        &self.forms
    }

    /// `f_1, ..., f_k` as elements of `R[T]`.
    pub fn forms_in_rt(&self, k: usize) -> Vec<HomogPoly> {
        self.forms[..k].iter().map(|f| f.extend(self.n() + 1)).collect()
    }

    pub fn a(&self) -> &ArtinianAlgebra {
        &self.a
    }

    pub fn b(&self) -> &ArtinianAlgebra {
        &self.b
    }

    pub fn c(&self) -> &ArtinianAlgebra {
        &self.c
    }

    pub fn g(&self) -> &ArtinianAlgebra {
        &self.g
    }

    fn rt(&self) -> RtIdeals<'_> {
        RtIdeals { n: self.n(), q: self.q, x_sigma: &self.x_sigma, i: &self.i, i_l: &self.i_l }
    }

    /// `J_st = (I, x_σ, T·I_L)` in `R[T]`.
    pub fn j_st(&self) -> GradedIdeal {
        self.rt().j_st()
    }

    /// `I_C = (I, T^{q+1}, T·I_L)`.
    pub fn i_c(&self) -> GradedIdeal {
        self.rt().i_c()
    }

    /// `I_Q = (I, T·I_L)`.
    pub fn i_q(&self) -> GradedIdeal {
        self.rt().i_q()
    }

    /// `I_G = (I, T^{q+1} - x_σ, T·I_L)`.
    pub fn i_g(&self) -> GradedIdeal {
        self.rt().i_g_in(&self.field)
    }

    /// A general Artinian reduction of `k[D_σ]`, with its own forms.
    pub fn subdivision_reduction(&self) -> Result<ArtinianAlgebra> {
        artinian_reduction(
            self.field,
            &stanley_reisner_ideal(&self.subdivision),
            self.d,
            derive_seed(self.seed, "subdivision-forms", 0),
        )
    }

    /// Trial settings for the stream `label`.
    pub fn trial_config(&self, label: &str, trials: usize) -> TrialConfig {
        TrialConfig::new(trials, derive_seed(self.seed, label, 0))
    }

    /// Trial settings drawing `w + T`.
    pub fn trial_config_plus_t(&self, label: &str, trials: usize) -> TrialConfig {
        self.trial_config(label, trials).with_shape(WitnessShape::PlusVariable(self.n()))
    }

    pub fn header(&self) -> InstanceHeader {
        InstanceHeader {
            complex_hash: self.complex_hash.clone(),
            sigma: self.sigma.vertices().to_vec(),
            q: self.q,
            d: self.d,
            p1: self.p1,
            p2: self.p2,
            prime: self.field.modulus(),
            seed: self.seed,
        }
    }
}

/// The ideals of `R[T]` built from `I`, `I_L` and `x_σ`; `T` is variable `n`.
pub(crate) struct RtIdeals<'a> {
    pub n: usize,
    pub q: usize,
    pub x_sigma: &'a Monomial,
    pub i: &'a GradedIdeal,
    pub i_l: &'a GradedIdeal,
}

impl RtIdeals<'_> {
    fn lift(&self, ideal: &GradedIdeal) -> Vec<HomogPoly> {
        ideal.generators().iter().map(|g| g.extend(self.n + 1)).collect()
    }

    fn t_power(&self) -> HomogPoly {
        let mut e = vec![0u8; self.n + 1];
        e[self.n] = (self.q + 1) as u8;
        HomogPoly::monomial(Monomial::from_exponents(&e), 1)
    }

    fn t_times_il(&self) -> Vec<HomogPoly> {
        let t = Monomial::var(self.n + 1, self.n);
        self.lift(self.i_l).iter().map(|g| g.mul_monomial(&t)).collect()
    }

    fn x_sigma(&self) -> HomogPoly {
        HomogPoly::monomial(self.x_sigma.extend(self.n + 1), 1)
    }

    fn assemble(&self, middle: Option<HomogPoly>) -> GradedIdeal {
        let mut gens = self.lift(self.i);
        gens.extend(middle);
        gens.extend(self.t_times_il());
        GradedIdeal::new(self.n + 1, gens)
    }

    pub fn j_st(&self) -> GradedIdeal {
        self.assemble(Some(self.x_sigma()))
    }

    pub fn i_c(&self) -> GradedIdeal {
        self.assemble(Some(self.t_power()))
    }

    pub fn i_q(&self) -> GradedIdeal {
        self.assemble(None)
    }

    /// `T^{q+1} - x_σ` in the middle; coefficients are `±1`, valid in any
    /// field.
    pub fn i_g_in(&self, field: &PrimeField) -> GradedIdeal {
        self.assemble(Some(self.t_power().sub(&self.x_sigma(), field)))
    }
}

#[cfg(test)]
mod tests;
