//! The colon ideals `𝒫_a = 𝓛 : x_σ`, `𝒫_b = 𝓛 : f_1^{q+1}` and
//! `𝒫_c = (I_L, f_2, ..., f_{d+1})` with `𝓛 = (I, f_1 I_L, f_2, ..., f_{d+1})`.
//!
//! Every ideal here contains the forms `f_2, ...`, so all of them are
//! compared inside the ring obtained by eliminating those forms.

use serde_json::json;

use crate::algebra::quotient::{degree_columns, Elimination, QuotientRing};
use crate::algebra::GradedIdeal;
use crate::error::{LabError, Result};
use crate::monomial::RevLex;
use crate::poly::HomogPoly;

use super::report::CheckReport;
use super::StellarInstance;

pub struct ColonBundle {
    q: usize,
    p1: usize,
    l: QuotientRing,
    pc: QuotientRing,
    ka: QuotientRing,
    kb: QuotientRing,
    x_sigma: HomogPoly,
    f1_power: HomogPoly,
}

/// `(I, f_1 I_L, extra...)` and `(I_L, extra...)` as rings with `extra`
/// eliminated.
fn colon_rings(inst: &StellarInstance, extra: &[HomogPoly]) -> (GradedIdeal, QuotientRing, QuotientRing) {
    let field = inst.field();
    let f1 = &inst.forms()[0];
    let mut gens: Vec<HomogPoly> = inst.i().generators().to_vec();
    gens.extend(inst.i_l().generators().iter().map(|g| f1.mul(g, &field)));
    gens.extend(extra.iter().cloned());
    let l = GradedIdeal::new(inst.n(), gens);
    let pc = inst.i_l().with(extra.iter().cloned());
    let elim = || Elimination::Forms(extra.to_vec());
    let l_ring = QuotientRing::with_options(field, l.clone(), elim(), None);
    let pc_ring = QuotientRing::with_options(field, pc, elim(), None);
    (l, l_ring, pc_ring)
}

pub fn build_colon_bundle(inst: &StellarInstance) -> ColonBundle {
    let field = inst.field();
    let d = inst.d();
    let rest = &inst.forms()[1..=d];
    let (l, l_ring, pc_ring) = colon_rings(inst, rest);
    let x_sigma = HomogPoly::monomial(inst.x_sigma().clone(), 1);
    let f1_power = inst.forms()[0].pow(inst.q() + 1, &field);
    let elim = || Elimination::Forms(rest.to_vec());
    let ka = QuotientRing::with_options(field, l.with([x_sigma.clone()]), elim(), None);
    let kb = QuotientRing::with_options(field, l.with([f1_power.clone()]), elim(), None);
    ColonBundle { q: inst.q(), p1: inst.p1(), l: l_ring, pc: pc_ring, ka, kb, x_sigma, f1_power }
}

/// Degreewise comparison of `𝒫_a`, `𝒫_b`, `𝒫_c` up to `m_max`.
pub fn compare_pa_pb_pc(bundle: &ColonBundle, m_max: usize) -> CheckReport {
    let nvars = bundle.l.target_nvars();
    let order = RevLex::natural(nvars);
    let mut rows = Vec::new();
    let (mut hf_equal, mut ideals_equal, mut strict, mut inequality, mut containment) =
        (true, true, false, true, true);
    let mut pb_equals_pc_low = true;
    for m in 0..=m_max {
        let cols = degree_columns(nvars, m, &order);
        let pa = bundle.l.colon_space_in(&bundle.x_sigma, m, cols.clone());
        let pb = bundle.l.colon_space_in(&bundle.f1_power, m, cols.clone());
        let pc = bundle.pc.ideal_space_in(m, cols);
        let same = pa.same_as(&pb);
        let inside = pa.contains_subspace(&pc) && pb.contains_subspace(&pc);
        let meet = pa.intersection_dim(&pb);
        hf_equal &= pa.codim() == pb.codim();
        ideals_equal &= same;
        inequality &= pb.codim() <= pa.codim();
        containment &= inside;
        strict |= meet > pc.dim();
        if bundle.p1 >= bundle.q && m <= bundle.p1 - bundle.q {
            pb_equals_pc_low &= pb.same_as(&pc);
        }
        rows.push(json!({
            "degree": m,
            "hf_pa": pa.codim(),
            "hf_pb": pb.codim(),
            "hf_pc": pc.codim(),
            "hf_ka": bundle.ka.slice(m).dim(),
            "hf_kb": bundle.kb.slice(m).dim(),
            "pa_equals_pb": same,
            "pc_in_pa_and_pb": inside,
            "dim_pa_meet_pb": meet,
            "dim_pc": pc.dim(),
        }));
    }
    CheckReport::pass_if(
        "pa_pb_pc",
        inequality && containment,
        json!({
            "m_max": m_max,
            "hf_pa_equals_hf_pb": hf_equal,
            "pa_equals_pb": ideals_equal,
            "pc_strictly_inside_meet": strict,
            "hf_pb_at_most_hf_pa": inequality,
            "pc_inside_meet": containment,
            "pb_equals_pc_up_to_p1_minus_q": pb_equals_pc_low,
            "degrees": rows,
        }),
    )
}

/// `(I, f_1 I_L, f_2..f_t) : x_σ = (I, f_1 I_L, f_2..f_t) : f_1^{q+1}
/// = (I_L, f_2..f_t)`, degree by degree up to `m_max`.
pub fn verify_triple_equality(inst: &StellarInstance, t: usize, m_max: usize) -> Result<CheckReport> {
    let d = inst.d();
    if t == 0 || t > d {
        return Err(LabError::BadT { t, d });
    }
    let field = inst.field();
    let (_, l_ring, pc_ring) = colon_rings(inst, &inst.forms()[1..t]);
    let x_sigma = HomogPoly::monomial(inst.x_sigma().clone(), 1);
    let f1_power = inst.forms()[0].pow(inst.q() + 1, &field);
    let nvars = l_ring.target_nvars();
    let order = RevLex::natural(nvars);
    let mut rows = Vec::new();
    let mut all = true;
    for m in 0..=m_max {
        let cols = degree_columns(nvars, m, &order);
        let ja = l_ring.colon_space_in(&x_sigma, m, cols.clone());
        let jb = l_ring.colon_space_in(&f1_power, m, cols.clone());
        let jc = pc_ring.ideal_space_in(m, cols);
        let equal = ja.same_as(&jc) && jb.same_as(&jc);
        all &= equal;
        rows.push(json!({"degree": m, "dims": [ja.dim(), jb.dim(), jc.dim()], "equal": equal}));
    }
    Ok(CheckReport::pass_if("triple_equality", all, json!({"t": t, "m_max": m_max, "degrees": rows})))
}
