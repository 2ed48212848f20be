//! Artinian reductions and randomized maximal-rank tests.

use serde::{Deserialize, Serialize};

use crate::algebra::quotient::{Elimination, QuotientRing};
use crate::algebra::random::{derive_seed, random_linear_form, random_linear_forms, rng_from_seed};
use crate::algebra::{GradedIdeal, IntSeq};
use crate::echelon::{rank_of, SparseRow};
use crate::error::{LabError, Result};
use crate::field::PrimeField;
use crate::par;
use crate::poly::{HomogPoly, PolyJson};

/// Degree by which a non-Artinian quotient is given up on.
pub const DEFAULT_ARTINIAN_CAP: usize = 40;

/// A finite-dimensional graded quotient `R/J⁺`.
#[derive(Debug)]
pub struct ArtinianAlgebra {
    ring: QuotientRing,
    hf: IntSeq,
    appended: Vec<HomogPoly>,
}

impl ArtinianAlgebra {
    /// `R/ideal`, which must vanish in some degree `<= cap`.
    pub fn new(field: PrimeField, ideal: GradedIdeal) -> Result<Self> {
        Self::build(field, ideal, Vec::new(), DEFAULT_ARTINIAN_CAP)
    }

    /// `R/(ideal + (forms))` where the forms are linear.
    pub fn with_forms(field: PrimeField, ideal: GradedIdeal, forms: Vec<HomogPoly>) -> Result<Self> {
        Self::build(field, ideal, forms, DEFAULT_ARTINIAN_CAP)
    }

    pub fn build(field: PrimeField, ideal: GradedIdeal, forms: Vec<HomogPoly>, cap: usize) -> Result<Self> {
        let full = ideal.with(forms.iter().cloned());
        let ring = QuotientRing::with_options(field, full, Elimination::Auto, None);
        let mut dims = Vec::new();
        for m in 0..=cap {
            let dim = ring.slice(m).dim();
            if dim == 0 {
                if m == 0 {
                    return Err(LabError::BadParameters("the quotient is the zero ring".into()));
                }
                return Ok(Self { ring, hf: IntSeq::from_values(0, dims), appended: forms });
            }
            dims.push(dim as i64);
        }
        Err(LabError::NotArtinian { cap })
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    /// Number of variables of the ambient polynomial ring.
    pub fn nvars(&self) -> usize {
        self.ring.ideal().nvars()
    }

    pub fn appended_forms(&self) -> &[HomogPoly] {
        &self.appended
    }

    /// Hilbert function on `0 ..= socle degree`.
    pub fn hilbert_function(&self) -> &IntSeq {
        &self.hf
    }

    pub fn socle_degree(&self) -> usize {
        self.hf.values().len() - 1
    }

    pub fn dim(&self, i: usize) -> usize {
        self.hf.values().get(i).map_or(0, |&v| v as usize)
    }

    pub fn total_dim(&self) -> usize {
        self.hf.total() as usize
    }

    pub fn is_symmetric(&self) -> bool {
        self.hf.is_symmetric()
    }

    /// Images of the standard basis of `F_i` under multiplication by `w`
    /// (an ambient-ring form), as vectors over the basis of `F_{i + deg w}`.
    pub fn multiplication_matrix(&self, w: &HomogPoly, i: usize) -> Vec<SparseRow> {
        let target = self.ring.slice(i + w.degree());
        let source = self.ring.slice(i);
        let image = self.ring.to_target(w);
        let basis: Vec<_> = source.basis().cloned().collect();
        par::map(&basis, |b| target.normal_form(&image.mul_monomial(b)))
    }

    /// Rank of multiplication by `w` from `F_i` to `F_{i + deg w}`.
    pub fn multiplication_map_rank(&self, w: &HomogPoly, i: usize) -> Result<usize> {
        self.check_degree(i)?;
        let rows = self.multiplication_matrix(w, i);
        Ok(rank_of(*self.field(), self.dim(i + w.degree()), &rows))
    }

    /// Rank of multiplication by `w^k` (linear `w`) from `F_i` to `F_{i+k}`,
    /// composing one-step maps.
    pub fn power_map_rank(&self, w: &HomogPoly, k: usize, i: usize) -> Result<usize> {
        self.check_degree(i)?;
        assert_eq!(w.degree(), 1, "power maps take a linear form");
        let f = *self.field();
        let mut current: Vec<SparseRow> =
            (0..self.dim(i)).map(|b| vec![(b as u32, 1)]).collect();
        for step in 0..k {
            let matrix = self.multiplication_matrix(w, i + step);
            current = par::map(&current, |v| compose(&f, v, &matrix));
        }
        Ok(rank_of(f, self.dim(i + k), &current))
    }

    fn check_degree(&self, i: usize) -> Result<()> {
        if i > self.socle_degree() {
            return Err(LabError::DegreeOutOfRange { degree: i, socle: self.socle_degree() });
        }
        Ok(())
    }

    /// `HF(F/(w))`, computed from a fresh quotient by `J⁺ + (w)`.
    pub fn quotient_by(&self, w: &HomogPoly) -> IntSeq {
        let ideal = self.ring.ideal().with([w.clone()]);
        let ring = QuotientRing::new(*self.field(), ideal);
        ring.hilbert_function(self.socle_degree())
    }
}

fn compose(f: &PrimeField, v: &[(u32, u32)], matrix: &[SparseRow]) -> SparseRow {
    let mut acc: std::collections::BTreeMap<u32, u32> = std::collections::BTreeMap::new();
    for &(j, c) in v {
        for &(k, m) in &matrix[j as usize] {
            let e = acc.entry(k).or_insert(0);
            *e = f.add(*e, f.mul(c, m));
        }
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// `A = R/(J + (f_1..f_k))` for `k` random linear forms.
pub fn artinian_reduction(
    field: PrimeField,
    ideal: &GradedIdeal,
    num_forms: usize,
    seed: u64,
) -> Result<ArtinianAlgebra> {
    let mut rng = rng_from_seed(derive_seed(seed, "reduction", 0));
    let forms = random_linear_forms(ideal.nvars(), num_forms, &field, &mut rng);
    ArtinianAlgebra::with_forms(field, ideal.clone(), forms)
}

/// How trial witnesses are drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum WitnessShape {
    /// Uniform random linear form.
    #[default]
    General,
    /// Uniform random linear form with the coefficient of this variable set
    /// to 1.
    PlusVariable(usize),
}

#[derive(Clone, Copy, Debug)]
pub struct TrialConfig {
    pub trials: usize,
    pub seed: u64,
    pub shape: WitnessShape,
}

impl TrialConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        Self { trials, seed, shape: WitnessShape::General }
    }

    pub fn with_shape(mut self, shape: WitnessShape) -> Self {
        self.shape = shape;
        self
    }

    fn witness(&self, nvars: usize, field: &PrimeField, trial: usize) -> HomogPoly {
        if nvars == 0 {
            return HomogPoly::zero(0, 1);
        }
        let mut rng = rng_from_seed(derive_seed(self.seed, "witness", trial as u64));
        let w = random_linear_form(nvars, field, &mut rng);
        match self.shape {
            WitnessShape::General => w,
            WitnessShape::PlusVariable(v) => {
                let mut coeffs = w.linear_coefficients();
                coeffs[v] = 1;
                HomogPoly::linear(&coeffs, field)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    CertifiedTrue,
    NoWitnessFound,
    /// The property fails for shape reasons, independently of any witness.
    Refuted,
}

/// One tested map `F_source -> F_target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankRecord {
    pub degree: usize,
    pub target_degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub required: usize,
}

impl RankRecord {
    pub fn holds(&self) -> bool {
        self.rank == self.required
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzVerdict {
    pub property: String,
    pub outcome: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<PolyJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ranks: Option<Vec<RankRecord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failing_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub prime: u32,
    pub seed: u64,
    pub trials: usize,
    #[serde(skip)]
    pub witness_form: Option<HomogPoly>,
}

impl LefschetzVerdict {
    pub fn is_certified(&self) -> bool {
        self.outcome == Outcome::CertifiedTrue
    }
}

struct TrialResult {
    ranks: Vec<RankRecord>,
    cross: Option<bool>,
    passed: bool,
}

impl TrialResult {
    fn from_ranks(ranks: Vec<RankRecord>) -> Self {
        let passed = ranks.iter().all(RankRecord::holds);
        Self { ranks, cross: None, passed }
    }

    fn first_failure(&self) -> Option<usize> {
        if self.passed {
            return None;
        }
        self.ranks.iter().find(|r| !r.holds()).map(|r| r.degree)
    }
}

fn record(f: &ArtinianAlgebra, degree: usize, power: usize, rank: usize, required: usize) -> RankRecord {
    RankRecord {
        degree,
        target_degree: degree + power,
        source_dim: f.dim(degree),
        target_dim: f.dim(degree + power),
        rank,
        required,
    }
}

fn run_trials(
    f: &ArtinianAlgebra,
    property: String,
    cfg: &TrialConfig,
    mut trial: impl FnMut(&HomogPoly) -> Result<TrialResult>,
) -> Result<LefschetzVerdict> {
    let field = *f.field();
    let mut last: Option<TrialResult> = None;
    let mut cross_all = None;
    for t in 0..cfg.trials {
        let w = cfg.witness(f.nvars(), &field, t);
        let result = trial(&w)?;
        if let Some(c) = result.cross {
            cross_all = Some(cross_all.unwrap_or(true) && c);
        }
        if result.passed {
            return Ok(LefschetzVerdict {
                property,
                outcome: Outcome::CertifiedTrue,
                witness: Some(w.to_json()),
                ranks: Some(result.ranks),
                first_failing_degree: None,
                cross_check: cross_all,
                note: None,
                prime: field.modulus(),
                seed: cfg.seed,
                trials: t + 1,
                witness_form: Some(w),
            });
        }
        last = Some(result);
    }
    let last = last.unwrap_or(TrialResult { ranks: Vec::new(), cross: None, passed: false });
    Ok(LefschetzVerdict {
        property,
        outcome: Outcome::NoWitnessFound,
        witness: None,
        first_failing_degree: last.first_failure(),
        ranks: Some(last.ranks),
        cross_check: cross_all,
        note: Some(no_witness_note(cfg.trials, field.modulus())),
        prime: field.modulus(),
        seed: cfg.seed,
        trials: cfg.trials,
        witness_form: None,
    })
}

fn no_witness_note(trials: usize, p: u32) -> String {
    format!("no witness in {trials} trials over GF({p}); evidence of failure, not a proof in characteristic 0")
}

/// Weak Lefschetz property: some trial form has maximal rank in every degree.
pub fn has_wlp(f: &ArtinianAlgebra, cfg: &TrialConfig) -> Result<LefschetzVerdict> {
    let r = f.socle_degree();
    run_trials(f, "WLP".into(), cfg, |w| {
        let mut ranks = Vec::new();
        for i in 0..r {
            let rank = f.multiplication_map_rank(w, i)?;
            let rec = record(f, i, 1, rank, f.dim(i).min(f.dim(i + 1)));
            let ok = rec.holds();
            ranks.push(rec);
            if !ok {
                break;
            }
        }
        Ok(TrialResult::from_ranks(ranks))
    })
}

/// WLP through injectivity at `p1` and surjectivity at `p2`, valid for
/// Gorenstein algebras.
pub fn has_wlp_gorenstein_shortcut(
    f: &ArtinianAlgebra,
    p1: usize,
    p2: usize,
    cfg: &TrialConfig,
) -> Result<LefschetzVerdict> {
    if !f.is_symmetric() {
        return Err(LabError::NotGorensteinShaped(
            f.hilbert_function().values().iter().map(|&v| v as usize).collect(),
        ));
    }
    run_trials(f, "WLP".into(), cfg, |w| {
        let inj = f.multiplication_map_rank(w, p1)?;
        let surj = f.multiplication_map_rank(w, p2)?;
        let injective = record(f, p1, 1, inj, f.dim(p1));
        let surjective = record(f, p2, 1, surj, f.dim(p2 + 1));
        let passed = injective.holds() && surjective.holds();
        let cross = Some(injective.holds() == surjective.holds());
        Ok(TrialResult { ranks: vec![injective, surjective], cross, passed })
    })
}

/// Strong Lefschetz property: `w^{r-2i}: F_i -> F_{r-i}` bijective for
/// `2i <= r`.
pub fn has_slp(f: &ArtinianAlgebra, cfg: &TrialConfig) -> Result<LefschetzVerdict> {
    if !f.is_symmetric() {
        return Ok(LefschetzVerdict {
            property: "SLP".into(),
            outcome: Outcome::Refuted,
            witness: None,
            ranks: None,
            first_failing_degree: None,
            cross_check: None,
            note: Some("Hilbert function is not symmetric".into()),
            prime: f.field().modulus(),
            seed: cfg.seed,
            trials: 0,
            witness_form: None,
        });
    }
    let r = f.socle_degree();
    run_trials(f, "SLP".into(), cfg, |w| {
        let mut ranks = Vec::new();
        for i in 0..=r / 2 {
            let k = r - 2 * i;
            let rank = f.power_map_rank(w, k, i)?;
            let rec = record(f, i, k, rank, f.dim(i));
            let ok = rec.holds();
            ranks.push(rec);
            if !ok {
                break;
            }
        }
        Ok(TrialResult::from_ranks(ranks))
    })
}

/// Property `M_{q,p1}`: `w^q: B_{p1-q} -> B_{p1}` injective. The surjective
/// form `B_{p2-q} -> B_{p2}` with `p2 = r + q - p1` is evaluated for the same
/// form and recorded in `cross_check`.
pub fn m_property(b: &ArtinianAlgebra, q: usize, p1: usize, cfg: &TrialConfig) -> Result<LefschetzVerdict> {
    let property = format!("M_{{{q},{p1}}}");
    if p1 < q {
        return Ok(LefschetzVerdict {
            property,
            outcome: Outcome::CertifiedTrue,
            witness: None,
            ranks: None,
            first_failing_degree: None,
            cross_check: None,
            note: Some("vacuous: q > p1".into()),
            prime: b.field().modulus(),
            seed: cfg.seed,
            trials: 0,
            witness_form: None,
        });
    }
    let p2 = b.socle_degree() + q - p1;
    run_trials(b, property, cfg, |w| {
        let injective = power_record(b, w, q, p1 - q, b.dim(p1 - q))?;
        let surjective = if p2 < q {
            record(b, 0, p2, 0, b.dim(p2))
        } else {
            power_record(b, w, q, p2 - q, b.dim(p2))?
        };
        let passed = injective.holds();
        let cross = Some(passed == surjective.holds());
        Ok(TrialResult { ranks: vec![injective, surjective], cross, passed })
    })
}

fn power_record(f: &ArtinianAlgebra, w: &HomogPoly, k: usize, i: usize, required: usize) -> Result<RankRecord> {
    let rank = if i > f.socle_degree() { 0 } else { f.power_map_rank(w, k, i)? };
    Ok(record(f, i, k, rank, required))
}

#[cfg(test)]
#[path = "lefschetz_tests.rs"]
mod tests;
