//! WLP transfer statements between `D`, `D_σ` and the algebras `A, B, C`,
//! evaluated with implication semantics.

use serde::Serialize;
use serde_json::json;

use crate::algebra::random::{derive_seed, rng_from_seed, random_linear_forms_in};
use crate::algebra::stanley_reisner_ideal;
use crate::error::Result;
use crate::lefschetz::{artinian_reduction, has_wlp, m_property, LefschetzVerdict, Outcome};

use super::report::{CheckReport, Status};
use super::StellarInstance;

/// Three-valued status of a premise or conclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Truth {
    Certified,
    WitnessAbsent,
    Refuted,
}

impl From<&LefschetzVerdict> for Truth {
    fn from(v: &LefschetzVerdict) -> Self {
        match v.outcome {
            Outcome::CertifiedTrue => Truth::Certified,
            Outcome::NoWitnessFound => Truth::WitnessAbsent,
            Outcome::Refuted => Truth::Refuted,
        }
    }
}

fn wlp_a(inst: &StellarInstance, trials: usize) -> Result<LefschetzVerdict> {
    has_wlp(inst.a(), &inst.trial_config("wlp-a", trials))
}

fn wlp_subdivision(inst: &StellarInstance, trials: usize) -> Result<LefschetzVerdict> {
    has_wlp(&inst.subdivision_reduction()?, &inst.trial_config("wlp-subdivision", trials))
}

fn m_b(inst: &StellarInstance, trials: usize) -> Result<LefschetzVerdict> {
    m_property(inst.b(), inst.q(), inst.p1(), &inst.trial_config("m-b", trials))
}

/// `WLP(k[D])` and `M_{q,p1}` imply `WLP(k[D_σ])`.
pub fn check_theorem_stellar(inst: &StellarInstance, trials: usize) -> Result<CheckReport> {
    let a = wlp_a(inst, trials)?;
    let m = m_b(inst, trials)?;
    let sub = wlp_subdivision(inst, trials)?;
    let premises = a.is_certified() && m.is_certified();
    let (status, note) = match (premises, sub.is_certified()) {
        (true, true) => (Status::Pass, "premises and conclusion certified"),
        (true, false) => (Status::Violation, "premises certified, no witness for the conclusion"),
        (false, _) => (Status::Inconclusive, "premise not established"),
    };
    Ok(CheckReport::new(
        "theorem_stellar",
        status,
        json!({"note": note, "wlp_a": a, "m_property_b": m, "wlp_subdivision": sub}),
    ))
}

/// For `q > p2`: `WLP(k[D_σ])` implies `WLP(k[D])`.
pub fn check_theorem_down(inst: &StellarInstance, trials: usize) -> Result<CheckReport> {
    if inst.q() <= inst.p2() {
        return Ok(CheckReport::new(
            "theorem_down",
            Status::NotApplicable,
            json!({"note": "requires q > p2", "q": inst.q(), "p2": inst.p2()}),
        ));
    }
    let sub = wlp_subdivision(inst, trials)?;
    let a = wlp_a(inst, trials)?;
    let (status, note) = match (sub.is_certified(), a.is_certified()) {
        (true, true) => (Status::Pass, "premise and conclusion certified"),
        (true, false) => (Status::Violation, "premise certified, no witness for the conclusion"),
        (false, _) => (Status::Inconclusive, "premise not established"),
    };
    Ok(CheckReport::new("theorem_down", status, json!({"note": note, "wlp_subdivision": sub, "wlp_a": a})))
}

/// For `2q > d`: `WLP(k[D])` holds iff `WLP(k[D_σ])` does.
pub fn check_iff(inst: &StellarInstance, trials: usize) -> Result<CheckReport> {
    if 2 * inst.q() <= inst.d() {
        return Ok(CheckReport::new(
            "iff",
            Status::NotApplicable,
            json!({"note": "requires 2q > d", "q": inst.q(), "d": inst.d()}),
        ));
    }
    let a = wlp_a(inst, trials)?;
    let sub = wlp_subdivision(inst, trials)?;
    let status = if a.is_certified() == sub.is_certified() {
        if a.is_certified() {
            Status::Pass
        } else {
            Status::Inconclusive
        }
    } else {
        Status::Violation
    };
    Ok(CheckReport::new("iff", status, json!({"wlp_a": a, "wlp_subdivision": sub})))
}

/// Agreement of verdicts that the lemmas relate:
/// `WLP(A) = WLP(k[D])`, `WLP(B) = WLP(k[L])`, `WLP(C) => WLP(k[D_σ])`,
/// `WLP(C) = WLP(A) and M_{q,p1}(B)`.
pub fn check_lemma_consistency(inst: &StellarInstance, trials: usize) -> Result<CheckReport> {
    let field = inst.field();
    let a = wlp_a(inst, trials)?;
    let m = m_b(inst, trials)?;
    let sub = wlp_subdivision(inst, trials)?;
    let independent = artinian_reduction(
        field,
        &stanley_reisner_ideal(inst.complex()),
        inst.d(),
        derive_seed(inst.seed(), "independent-forms", 0),
    )?;
    let d_indep = has_wlp(&independent, &inst.trial_config("wlp-independent", trials))?;
    let b = has_wlp(inst.b(), &inst.trial_config("wlp-b", trials))?;
    let link = inst.link().restrict_to_support();
    let link_dim = (link.dim() + 1) as usize;
    let link_reduction = artinian_reduction(
        field,
        &stanley_reisner_ideal(&link),
        link_dim,
        derive_seed(inst.seed(), "link-forms", 0),
    )?;
    let l = has_wlp(&link_reduction, &inst.trial_config("wlp-link", trials))?;
    let c = has_wlp(inst.c(), &inst.trial_config_plus_t("wlp-c", trials))?;

    let a_matches_d = a.is_certified() == d_indep.is_certified();
    let b_matches_link = b.is_certified() == l.is_certified();
    let c_implies_sub = !c.is_certified() || sub.is_certified();
    let c_matches = c.is_certified() == (a.is_certified() && m.is_certified());
    Ok(CheckReport::pass_if(
        "lemma_consistency",
        a_matches_d && b_matches_link && c_implies_sub && c_matches,
        json!({
            "wlp_a_matches_independent_reduction": a_matches_d,
            "wlp_b_matches_link": b_matches_link,
            "wlp_c_implies_subdivision": c_implies_sub,
            "wlp_c_matches_a_and_m": c_matches,
            "wlp_a": Truth::from(&a),
            "wlp_independent": Truth::from(&d_indep),
            "wlp_b": Truth::from(&b),
            "wlp_link": Truth::from(&l),
            "wlp_c": Truth::from(&c),
            "m_property_b": Truth::from(&m),
            "wlp_subdivision": Truth::from(&sub),
            "hf_b": inst.b().hilbert_function().values(),
            "hf_link_reduction": link_reduction.hilbert_function().values(),
        }),
    ))
}

/// Compares `HF(G/(f))` with `Δ⁺ HF(G)` for fresh forms `f` in the
/// `x`-variables. Reported only.
pub fn probe_conjecture_g(inst: &StellarInstance, trials: usize) -> CheckReport {
    let g = inst.g();
    let n = inst.n();
    let expected = g.hilbert_function().delta_plus();
    let mut rows = Vec::new();
    let mut equal_count = 0;
    for t in 0..trials {
        let seed = derive_seed(inst.seed(), "conjecture-g", t as u64);
        let f = random_linear_forms_in(n + 1, n, 1, &inst.field(), &mut rng_from_seed(seed)).remove(0);
        let got = g.quotient_by(&f);
        let equal = got.values() == expected.values();
        equal_count += equal as usize;
        rows.push(json!({"trial": t, "seed": seed, "hf_quotient": got.values(), "equal": equal}));
    }
    CheckReport::new(
        "conjecture_g",
        Status::Info,
        json!({
            "hf_g": g.hilbert_function().values(),
            "delta_plus_hf_g": expected.values(),
            "trials": rows,
            "equal": equal_count,
            "unequal": trials - equal_count,
        }),
    )
}
