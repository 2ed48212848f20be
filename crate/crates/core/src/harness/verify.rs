use std::str::FromStr;

use crate::algebra::{stanley_reisner_ideal, GradedIdeal};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{LabError, Result};
use crate::lefschetz::{artinian_reduction, has_wlp, LefschetzVerdict, TrialConfig};
use crate::stellar::{
    build_colon_bundle, check_iff, check_lemma_consistency, check_theorem_down, check_theorem_stellar,
    compare_pa_pb_pc, probe_conjecture_g, verify_c_decomposition, verify_g_properties,
    verify_hf_stellar_identity, verify_initial_ideal, verify_iq_hf, verify_triple_equality,
    GorensteinStar, InstanceReport, StellarInstance,
};

use super::config::RunConfig;
use super::corpus::parse_corpus_name;

/// The checks `verify` can run on one instance, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    Hf,
    CDecomposition,
    G,
    InitialIdeal,
    Iq,
    TheoremStellar,
    TheoremDown,
    Iff,
    LemmaConsistency,
    PaPb,
    Triple,
    ConjectureG,
}

impl CheckKind {
    pub const ALL: [CheckKind; 12] = [
        Self::Hf,
        Self::CDecomposition,
        Self::G,
        Self::InitialIdeal,
        Self::Iq,
        Self::TheoremStellar,
        Self::TheoremDown,
        Self::Iff,
        Self::LemmaConsistency,
        Self::PaPb,
        Self::Triple,
        Self::ConjectureG,
    ];

    pub fn flag(self) -> &'static str {
        match self {
            Self::Hf => "hf",
            Self::CDecomposition => "c-decomposition",
            Self::G => "g",
            Self::InitialIdeal => "initial-ideal",
            Self::Iq => "iq",
            Self::TheoremStellar => "theorem-stellar",
            Self::TheoremDown => "theorem-down",
            Self::Iff => "iff",
            Self::LemmaConsistency => "lemmas",
            Self::PaPb => "pa-pb",
            Self::Triple => "triple",
            Self::ConjectureG => "conjecture-g",
        }
    }
}

impl FromStr for CheckKind {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.flag() == s)
            .ok_or_else(|| LabError::BadSpec(format!("unknown check {s:?}")))
    }
}

/// Builds the instance and runs `checks` (deduplicated, in canonical
/// order). `t` for the `I_Q` and triple checks is `d`.
pub fn run_verify(complex: SimplicialComplex, sigma: Face, checks: &[CheckKind], cfg: &RunConfig) -> Result<InstanceReport> {
    cfg.install(|| {
        let gs = GorensteinStar::new(complex, cfg.field)?;
        let inst = StellarInstance::build(&gs, sigma, cfg.seed)?;
        let m_max = cfg.m_max_or(inst.default_m_max());
        let mut kinds = checks.to_vec();
        kinds.sort();
        kinds.dedup();
        let trials = cfg.trials;
        let mut out = Vec::new();
        for kind in kinds {
            let report = match kind {
                CheckKind::Hf => verify_hf_stellar_identity(&inst, m_max),
                CheckKind::CDecomposition => verify_c_decomposition(&inst),
                CheckKind::G => verify_g_properties(&inst, m_max),
                CheckKind::InitialIdeal => verify_initial_ideal(&inst, m_max),
                CheckKind::Iq => verify_iq_hf(&inst, m_max, inst.d())?,
                CheckKind::TheoremStellar => check_theorem_stellar(&inst, trials)?,
                CheckKind::TheoremDown => check_theorem_down(&inst, trials)?,
                CheckKind::Iff => check_iff(&inst, trials)?,
                CheckKind::LemmaConsistency => check_lemma_consistency(&inst, trials)?,
                CheckKind::PaPb => compare_pa_pb_pc(&build_colon_bundle(&inst), m_max),
                CheckKind::Triple => verify_triple_equality(&inst, inst.d(), m_max)?,
                CheckKind::ConjectureG => probe_conjecture_g(&inst, trials),
            };
            out.push(report);
        }
        Ok(InstanceReport { instance: inst.header(), checks: out })
    })
}

/// Input of `check-wlp`: a complex (reduced by `dim + 1` forms by default)
/// or an ideal (no forms by default).
#[derive(Clone, Debug)]
pub enum WlpInput {
    Complex(SimplicialComplex),
    Ideal(GradedIdeal),
}

/// Reads a corpus name, a complex JSON file, or an ideal JSON file.
pub fn load_wlp_input(name: &str, cfg: &RunConfig) -> Result<WlpInput> {
    let path = std::path::Path::new(name);
    if path.is_file() {
        let text = std::fs::read_to_string(path)?;
        let value: serde_json::Value = serde_json::from_str(&text)?;
        return if value.get("generators").is_some() {
            Ok(WlpInput::Ideal(GradedIdeal::from_json_str(&text, &cfg.field)?))
        } else if value.get("facets").is_some() {
            Ok(WlpInput::Complex(SimplicialComplex::from_json_str(&text)?))
        } else {
            Err(LabError::BadSpec(format!("{name}: neither a complex nor an ideal")))
        };
    }
    Ok(WlpInput::Complex(parse_corpus_name(name)?.resolve()?))
}

pub fn run_check_wlp(input: &WlpInput, forms: Option<usize>, cfg: &RunConfig) -> Result<LefschetzVerdict> {
    cfg.install(|| {
        let (ideal, default_forms) = match input {
            WlpInput::Complex(d) => (stanley_reisner_ideal(d), (d.dim() + 1).max(0) as usize),
            WlpInput::Ideal(i) => (i.clone(), 0),
        };
        let algebra = artinian_reduction(cfg.field, &ideal, forms.unwrap_or(default_forms), cfg.seed)?;
        has_wlp(&algebra, &TrialConfig::new(cfg.trials, cfg.seed))
    })
}
