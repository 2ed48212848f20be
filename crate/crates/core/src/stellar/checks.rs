//! Hilbert-function identities of a single instance.

use std::collections::BTreeSet;

use serde_json::json;

use crate::algebra::quotient::{Elimination, QuotientRing};
use crate::algebra::{face_count_hilbert_function, minimalize, stanley_reisner_ideal, IntSeq};
use crate::error::{LabError, Result};
use crate::monomial::{Monomial, RevLex};
use crate::poly::HomogPoly;

use super::report::CheckReport;
use super::StellarInstance;

fn hf(inst: &StellarInstance, ideal: crate::algebra::GradedIdeal, m_max: usize) -> IntSeq {
    QuotientRing::new(inst.field(), ideal).hilbert_function(m_max)
}

/// `HF(k[D_σ]) = HF(k[D]) + Σ_{i=1..q} HF(R/I_L)(m - i)`, plus
/// `J_st = I_{D_σ}`.
pub fn verify_hf_stellar_identity(inst: &StellarInstance, m_max: usize) -> CheckReport {
    let sr_sub = stanley_reisner_ideal(inst.subdivision());
    let lhs = hf(inst, sr_sub.clone(), m_max);
    let h1 = hf(inst, inst.i().clone(), m_max);
    let h2 = hf(inst, inst.i_l().clone(), m_max);
    let rhs = (1..=inst.q()).fold(h1, |acc, i| acc.add(&h2.shift(i as i64)));
    let j_st = minimalize(inst.j_st().monomial_generators().expect("monomial"));
    let sr = minimalize(sr_sub.monomial_generators().expect("monomial"));
    let ideals_equal = j_st == sr;
    CheckReport::pass_if(
        "hf_stellar_identity",
        lhs.values() == rhs.values() && ideals_equal,
        json!({
            "m_max": m_max,
            "hf_subdivision": lhs.values(),
            "hf_d_plus_shifted_link": rhs.values(),
            "j_st_equals_sr_ideal": ideals_equal,
        }),
    )
}

/// `dim C_m = dim A_m + Σ_{j=1..q} dim B_{m-j}`, `C_d` one-dimensional,
/// `C_{≥d+1} = 0`, and `dim C_i = dim C_{d-i}`.
pub fn verify_c_decomposition(inst: &StellarInstance) -> CheckReport {
    let (a, b, c) = (inst.a(), inst.b(), inst.c());
    let d = inst.d();
    let lhs: Vec<usize> = (0..=d + 1).map(|m| c.dim(m)).collect();
    let rhs: Vec<usize> = (0..=d + 1)
        .map(|m| a.dim(m) + (1..=inst.q().min(m)).map(|j| b.dim(m - j)).sum::<usize>())
        .collect();
    let top = c.dim(d);
    let socle = c.socle_degree();
    let symmetric = (0..=d).all(|i| c.dim(i) == c.dim(d - i));
    CheckReport::pass_if(
        "c_decomposition",
        lhs == rhs && top == 1 && socle == d && symmetric,
        json!({
            "hf_c": lhs,
            "hf_a_plus_shifted_b": rhs,
            "dim_c_d": top,
            "socle_degree": socle,
            "symmetric": symmetric,
        }),
    )
}

/// `HF(R[T]/I_G) = HF(k[D_σ])` up to `m_max`, `HF(G) = HF(C)` and
/// `dim G = dim A + q dim B`.
pub fn verify_g_properties(inst: &StellarInstance, m_max: usize) -> CheckReport {
    let hf_ig = hf(inst, inst.i_g(), m_max);
    let hf_sub = face_count_hilbert_function(inst.subdivision(), m_max);
    let (a, b, c, g) = (inst.a(), inst.b(), inst.c(), inst.g());
    let g_equals_c = g.hilbert_function() == c.hilbert_function();
    let total = a.total_dim() + inst.q() * b.total_dim();
    let ig_ok = hf_ig.values() == hf_sub.values();
    CheckReport::pass_if(
        "g_properties",
        ig_ok && g_equals_c && g.total_dim() == total,
        json!({
            "m_max": m_max,
            "hf_rt_mod_i_g": hf_ig.values(),
            "hf_subdivision": hf_sub.values(),
            "hf_g": g.hilbert_function().values(),
            "hf_c": c.hilbert_function().values(),
            "dim_g": g.total_dim(),
            "dim_a_plus_q_dim_b": total,
        }),
    )
}

/// The revlex initial span of `I_G` (with `T` largest) equals the monomial
/// span of `I_C` degree by degree; also `HF(R[T]/I_C) = HF(k[D_σ])`.
pub fn verify_initial_ideal(inst: &StellarInstance, m_max: usize) -> CheckReport {
    let n = inst.n();
    let order = RevLex::with_order(std::iter::once(n).chain(0..n).collect());
    let ring = QuotientRing::with_options(inst.field(), inst.i_g(), Elimination::None, Some(order));
    let ic = inst.i_c();
    let ic_gens = ic.monomial_generators().expect("monomial");
    let mut degrees = Vec::new();
    let mut all_equal = true;
    for m in 0..=m_max {
        let init = ring.initial_span(m);
        let span: BTreeSet<Monomial> = Monomial::all_of_degree(n + 1, m)
            .into_iter()
            .filter(|c| ic_gens.iter().any(|g| g.divides(c)))
            .collect();
        let equal = init == span;
        all_equal &= equal;
        degrees.push(json!({"degree": m, "initial": init.len(), "i_c": span.len(), "equal": equal}));
    }
    let hf_ic = hf(inst, ic, m_max);
    let hf_sub = face_count_hilbert_function(inst.subdivision(), m_max);
    let hf_ok = hf_ic.values() == hf_sub.values();
    CheckReport::pass_if(
        "initial_ideal",
        all_equal && hf_ok,
        json!({
            "m_max": m_max,
            "degrees": degrees,
            "hf_rt_mod_i_c": hf_ic.values(),
            "hf_subdivision": hf_sub.values(),
        }),
    )
}

/// `HF(R[T]/I_Q)(m) = HF(k[D])(m) + Σ_{j=1..m} HF(R/I_L)(m-j)`, and the
/// Hilbert function drops by `Δ^t` modulo `T - f_1, f_2, ..., f_t`.
pub fn verify_iq_hf(inst: &StellarInstance, m_max: usize, t: usize) -> Result<CheckReport> {
    let d = inst.d();
    if t == 0 || t > d {
        return Err(LabError::BadT { t, d });
    }
    let iq = inst.i_q();
    let lhs = hf(inst, iq.clone(), m_max);
    let h1 = face_count_hilbert_function(inst.complex(), m_max);
    let h2 = hf(inst, inst.i_l().clone(), m_max);
    let rhs: Vec<i64> = (0..=m_max as i64)
        .map(|m| h1.get(m).unwrap() + (1..=m).map(|j| h2.get(m - j).unwrap()).sum::<i64>())
        .collect();
    let n = inst.n();
    let rt_forms = inst.forms_in_rt(t);
    let mut seq = vec![HomogPoly::var(n + 1, n).sub(&rt_forms[0], &inst.field())];
    seq.extend(rt_forms[1..].iter().cloned());
    let reduced = hf(inst, iq.with(seq), m_max);
    let expected = lhs.delta_iter(t);
    let identity = lhs.values() == rhs.as_slice();
    let regular = reduced.values() == expected.values();
    Ok(CheckReport::pass_if(
        "iq_hilbert_function",
        identity && regular,
        json!({
            "m_max": m_max,
            "t": t,
            "hf_rt_mod_i_q": lhs.values(),
            "hf_d_plus_link_sums": rhs,
            "hf_after_sequence": reduced.values(),
            "delta_t": expected.values(),
        }),
    ))
}
