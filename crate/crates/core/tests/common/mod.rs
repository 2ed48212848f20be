//! Shared fixtures and independent oracles for the integration suites.
#![allow(dead_code)]

use std::collections::HashMap;

use lefschetz_core::algebra::{stanley_reisner_ideal, GradedIdeal};
use lefschetz_core::complex::{Face, SimplicialComplex};
use lefschetz_core::harness::standard_corpus;
use lefschetz_core::lefschetz::{
    artinian_reduction, has_slp, has_wlp, has_wlp_gorenstein_shortcut, m_property, ArtinianAlgebra, TrialConfig,
};
use lefschetz_core::stellar::middle_degrees;
use lefschetz_core::PrimeField;

pub fn field() -> PrimeField {
    PrimeField::default()
}

/// The reference complexes with their names, optionally without `∂C(10,6)`.
pub fn corpus(include_large: bool) -> Vec<(String, SimplicialComplex)> {
    standard_corpus()
        .into_iter()
        .filter(|e| include_large || e.name != "cyclic10-6")
        .map(|e| {
            let d = e.spec.resolve().expect("corpus resolves");
            (e.name, d)
        })
        .collect()
}

/// Exponent vectors of degree `m` in `n` variables, by plain recursion.
pub fn exponent_vectors(n: usize, m: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return if m == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=m {
        for mut rest in exponent_vectors(n - 1, m - first) {
            rest.insert(0, first as u8);
            out.push(rest);
        }
    }
    out
}

/// `dim k[D]_m` by checking, for every monomial, that its support is a face.
pub fn brute_force_face_ring_hf(d: &SimplicialComplex, m: usize) -> i64 {
    let labels = d.vertices();
    exponent_vectors(labels.len(), m)
        .into_iter()
        .filter(|e| {
            let support: Vec<u32> = e.iter().zip(labels).filter(|(x, _)| **x > 0).map(|(_, &v)| v).collect();
            d.is_face(&Face::from(support))
        })
        .count() as i64
}

/// Rank of a dense matrix over GF(p) by textbook Gaussian elimination.
pub fn dense_rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_multiple_of(p)) else { continue };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][col], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..ncols {
                    let sub = factor * rows[rank][c] % p;
                    rows[r][c] = (rows[r][c] + p - sub) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// `dim (R/J)_m` from a dense Macaulay matrix.
pub fn dense_quotient_hf(ideal: &GradedIdeal, m: usize, p: u64) -> i64 {
    let n = ideal.nvars();
    let cols = exponent_vectors(n, m);
    let index: HashMap<Vec<u8>, usize> = cols.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
    let mut rows = Vec::new();
    for g in ideal.generators().iter().filter(|g| g.degree() <= m) {
        for u in exponent_vectors(n, m - g.degree()) {
            let mut row = vec![0u64; cols.len()];
            for (t, c) in g.terms() {
                let e: Vec<u8> = t.exponents().iter().zip(&u).map(|(a, b)| a + b).collect();
                row[index[&e]] = u64::from(*c);
            }
            rows.push(row);
        }
    }
    (cols.len() - dense_rank(rows, p)) as i64
}

/// Gorenstein* complexes for randomized tests: the small corpus plus
/// stellar subdivisions of some of their faces.
pub fn gorenstein_pool() -> Vec<SimplicialComplex> {
    let mut pool = Vec::new();
    for (_, d) in corpus(false) {
        let faces: Vec<Face> = d.faces().into_iter().filter(|f| f.len() >= 2).collect();
        let j = d.fresh_vertex();
        pool.push(d.stellar_subdivision(&faces[0], j).unwrap());
        pool.push(d.stellar_subdivision(&faces[faces.len() - 1], j).unwrap());
        pool.push(d);
    }
    pool
}

/// Artinian reduction `k[D]/(θ_1..θ_d)` with forms drawn from `seed`.
pub fn reduction(d: &SimplicialComplex, seed: u64) -> ArtinianAlgebra {
    let dim = (d.dim() + 1) as usize;
    artinian_reduction(field(), &stanley_reisner_ideal(d), dim, seed).unwrap()
}

/// Internal consistency of the Lefschetz checkers on one Gorenstein
/// algebra. Returns a description of the first disagreement.
pub fn lefschetz_self_consistency(f: &ArtinianAlgebra, q: usize, seed: u64) -> Result<(), String> {
    let cfg = TrialConfig::new(3, seed);
    let socle = f.socle_degree();
    let (p1, p2) = middle_degrees(socle);
    let full = has_wlp(f, &cfg).map_err(|e| e.to_string())?;
    if socle >= 1 {
        let short = has_wlp_gorenstein_shortcut(f, p1, p2, &cfg).map_err(|e| e.to_string())?;
        if short.outcome != full.outcome {
            return Err(format!("shortcut {:?} vs full {:?}", short.outcome, full.outcome));
        }
    }
    let slp = has_slp(f, &cfg).map_err(|e| e.to_string())?;
    if slp.is_certified() && !full.is_certified() {
        return Err("SLP certified without WLP".into());
    }
    if full.is_certified() {
        let hf = f.hilbert_function();
        if !hf.is_unimodal() {
            return Err(format!("WLP with non-unimodal {:?}", hf.values()));
        }
        if let Some(w) = &full.witness_form {
            let quotient = f.quotient_by(w).trimmed();
            let expected = hf.delta_plus().trimmed();
            if quotient != expected {
                return Err(format!("HF(F/(w)) = {quotient:?}, Δ⁺HF = {expected:?}"));
            }
        }
    }
    let p1m = p1.max(q);
    let m = m_property(f, q, p1m, &cfg).map_err(|e| e.to_string())?;
    if m.cross_check == Some(false) {
        return Err(format!("M_{{{q},{p1m}}} injective and surjective forms disagree"));
    }
    Ok(())
}
