use super::*;
use crate::algebra::ideal::stanley_reisner_ideal;
use crate::algebra::random::{random_linear_forms, rng_from_seed};
use crate::complex::{cross_polytope_boundary, simplex_boundary};
use crate::complex::SimplicialComplex;
use rand::Rng;

fn field() -> PrimeField {
    PrimeField::default()
}

fn poly(n: usize, terms: &[(&[u8], i64)]) -> HomogPoly {
    let f = field();
    let t: Vec<(Monomial, u32)> =
        terms.iter().map(|(e, c)| (Monomial::from_exponents(e), f.from_i64(*c))).collect();
    let degree = t[0].0.degree();
    HomogPoly::from_terms(n, degree, t, &f)
}

/// Counts degree-`m` monomials avoiding every generator.
fn monomial_count_oracle(n: usize, gens: &[Monomial], m: usize) -> i64 {
    Monomial::all_of_degree(n, m)
        .iter()
        .filter(|c| !gens.iter().any(|g| g.divides(c)))
        .count() as i64
}

/// Dense Gaussian elimination rank, independent of `Echelon`.
fn dense_rank(mut rows: Vec<Vec<u32>>, f: &PrimeField) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, p);
        let inv = f.inv(rows[rank][c]);
        let pivot: Vec<u32> = rows[rank].iter().map(|&v| f.mul(v, inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let k = row[c];
                for j in 0..ncols {
                    row[j] = f.sub(row[j], f.mul(k, pivot[j]));
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

fn dense_hf(ideal: &GradedIdeal, m: usize) -> i64 {
    let n = ideal.nvars();
    let cols = Monomial::all_of_degree(n, m);
    let mut rows = Vec::new();
    for g in ideal.generators().iter().filter(|g| g.degree() <= m) {
        for u in Monomial::all_of_degree(n, m - g.degree()) {
            let p = g.mul_monomial(&u);
            rows.push(
                cols.iter()
                    .map(|c| p.terms().iter().find(|(t, _)| t == c).map_or(0, |t| t.1))
                    .collect(),
            );
        }
    }
    (cols.len() - dense_rank(rows, &field())) as i64
}

fn random_ideal(n: usize, count: usize, seed: u64) -> GradedIdeal {
    let f = field();
    let mut rng = rng_from_seed(seed);
    let gens = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=3);
            let nterms = rng.gen_range(1..=3);
            let terms = (0..nterms)
                .map(|_| {
                    let mut e = vec![0u8; n];
                    for _ in 0..deg {
                        e[rng.gen_range(0..n)] += 1;
                    }
                    (Monomial::from_exponents(&e), rng.gen_range(1..f.modulus()))
                })
                .collect::<Vec<_>>();
            HomogPoly::from_terms(n, deg, terms, &f)
        })
        .collect::<Vec<_>>();
    GradedIdeal::new(n, gens)
}

#[test]
fn degree_span_examples() {
    let f = field();
    let x2 = GradedIdeal::from_monomials(1, [Monomial::from_exponents(&[2])]);
    assert_eq!(ideal_degree_span(&x2, 3, &RevLex::natural(1), f).rank(), 1);
    let i = stanley_reisner_ideal(&simplex_boundary(4).unwrap());
    assert_eq!(ideal_degree_span(&i, 4, &RevLex::natural(4), f).rank(), 1);
    assert_eq!(ideal_degree_span(&i, 5, &RevLex::natural(4), f).rank(), 4);
}

#[test]
fn monomial_quotients_match_counting() {
    let f = field();
    let tetra = stanley_reisner_ideal(&simplex_boundary(4).unwrap());
    let hf = QuotientRing::new(f, tetra.clone()).hilbert_function(6);
    assert_eq!(hf.values(), &[1, 4, 10, 20, 34, 52, 74]);
    let square = SimplicialComplex::from_faces(vec![
        vec![1, 2].into(),
        vec![2, 3].into(),
        vec![3, 4].into(),
        vec![1, 4].into(),
    ]);
    let hf = QuotientRing::new(f, stanley_reisner_ideal(&square)).hilbert_function(6);
    assert_eq!(hf.values(), &[1, 4, 8, 12, 16, 20, 24]);
    let x2 = GradedIdeal::from_monomials(1, [Monomial::from_exponents(&[2])]);
    assert_eq!(QuotientRing::new(f, x2).hilbert_function(3).values(), &[1, 1, 0, 0]);

    let octa = stanley_reisner_ideal(&cross_polytope_boundary(3).unwrap());
    let gens = octa.monomial_generators().unwrap();
    let hf = QuotientRing::new(f, octa).hilbert_function(7);
    for m in 0..=7 {
        assert_eq!(hf.get(m as i64), Some(monomial_count_oracle(6, &gens, m)));
    }
}

#[test]
fn unit_ideal_is_zero_everywhere() {
    let one = GradedIdeal::new(3, [HomogPoly::one(3)]);
    let hf = QuotientRing::new(field(), one).hilbert_function(3);
    assert_eq!(hf.values(), &[0, 0, 0, 0]);
}

#[test]
fn random_ideals_agree_with_dense_oracle() {
    let f = field();
    for seed in 0..40 {
        let n = 2 + (seed as usize % 3);
        let ideal = random_ideal(n, 1 + seed as usize % 4, seed);
        let auto = QuotientRing::new(f, ideal.clone()).hilbert_function(5);
        let plain = QuotientRing::with_options(f, ideal.clone(), Elimination::None, None)
            .hilbert_function(5);
        let macaulay = macaulay_hilbert_function(&ideal, 5, f);
        for m in 0..=5 {
            let oracle = dense_hf(&ideal, m);
            assert_eq!(auto.get(m as i64), Some(oracle), "seed {seed} degree {m}");
            assert_eq!(plain.get(m as i64), Some(oracle), "seed {seed} degree {m}");
            assert_eq!(macaulay.get(m as i64), Some(oracle), "seed {seed} degree {m}");
        }
    }
}

#[test]
fn linear_forms_reduce_the_ring() {
    let f = field();
    let base = stanley_reisner_ideal(&cross_polytope_boundary(3).unwrap());
    let forms = random_linear_forms(6, 3, &f, &mut rng_from_seed(9));
    let ideal = base.with(forms.clone());
    let ring = QuotientRing::new(f, ideal.clone());
    assert_eq!(ring.target_nvars(), 3);
    assert_eq!(ring.hilbert_function(4).values(), &[1, 3, 3, 1, 0]);
    let explicit = QuotientRing::with_options(f, ideal.clone(), Elimination::Forms(forms), None);
    assert_eq!(explicit.hilbert_function(4), ring.hilbert_function(4));
    for m in 0..=4 {
        assert_eq!(ring.hilbert_function(4).get(m), Some(dense_hf(&ideal, m as usize)));
    }
}

#[test]
fn substitution_kills_the_forms() {
    let f = field();
    let forms = random_linear_forms(5, 2, &f, &mut rng_from_seed(3));
    let s = LinearSubstitution::from_forms(5, &forms, &f);
    assert_eq!(s.rank(), 2);
    assert_eq!(s.free_variables(), &[0, 1, 2]);
    for l in &forms {
        assert!(s.apply(l, &f).is_zero());
    }
}

#[test]
fn initial_span_examples() {
    let f = field();
    let j = GradedIdeal::new(2, [poly(2, &[(&[2, 0], 1), (&[0, 2], -1)])]);
    let ring = QuotientRing::with_options(f, j, Elimination::None, None);
    let init: Vec<Monomial> = ring.initial_span(2).into_iter().collect();
    assert_eq!(init, vec![Monomial::from_exponents(&[2, 0])]);

    let j = GradedIdeal::new(2, [poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])]);
    let ring = QuotientRing::with_options(f, j, Elimination::None, None);
    let init: Vec<Monomial> = ring.initial_span(1).into_iter().collect();
    assert_eq!(init, vec![Monomial::from_exponents(&[1, 0])]);
}

#[test]
fn initial_span_counts_the_rank() {
    let f = field();
    for seed in 0..20 {
        let ideal = random_ideal(3, 3, 100 + seed);
        let order = RevLex::with_order(vec![2, 0, 1]);
        let ring = QuotientRing::with_options(f, ideal.clone(), Elimination::None, Some(order.clone()));
        for m in 0..=4 {
            let span = ideal_degree_span(&ideal, m, &order, f);
            let init = ring.initial_span(m);
            assert_eq!(init.len(), span.rank());
            assert_eq!(init, span.leading_monomials(), "seed {seed} degree {m}");
        }
    }
}

#[test]
fn monomial_colon_slices() {
    let f = field();
    let i = stanley_reisner_ideal(&simplex_boundary(4).unwrap());
    let ring = QuotientRing::with_options(f, i.clone(), Elimination::None, None);
    let x34 = GradedIdeal::from_monomials(4, [Monomial::from_exponents(&[0, 0, 1, 1])]);
    let expected = QuotientRing::with_options(f, x34, Elimination::None, None);
    let x12 = HomogPoly::monomial(Monomial::from_exponents(&[1, 1, 0, 0]), 1);
    for m in 0..=6 {
        let colon = ring.colon_space(&x12, m);
        assert!(colon.same_as(&expected.ideal_space(m)), "degree {m}");
        assert!(ring.colon_space(&HomogPoly::one(4), m).same_as(&ring.ideal_space(m)));
    }
}

#[test]
fn colon_contains_the_ideal() {
    let f = field();
    for seed in 0..15 {
        let ideal = random_ideal(3, 3, 200 + seed);
        let ring = QuotientRing::with_options(f, ideal, Elimination::None, None);
        let u = random_ideal(3, 1, 300 + seed).generators()[0].clone();
        for m in 0..=4 {
            assert!(ring.colon_space(&u, m).contains_subspace(&ring.ideal_space(m)));
        }
    }
}

#[test]
fn subspace_dimensions() {
    let f = field();
    let cols = degree_columns(2, 1, &RevLex::natural(2));
    let x = QuotientRing::with_options(f, GradedIdeal::new(2, [HomogPoly::var(2, 0)]), Elimination::None, None);
    let y = QuotientRing::with_options(f, GradedIdeal::new(2, [HomogPoly::var(2, 1)]), Elimination::None, None);
    let a = x.ideal_space_in(1, cols.clone());
    let b = y.ideal_space_in(1, cols);
    assert_eq!(a.dim(), 1);
    assert_eq!(a.intersection_dim(&b), 0);
    assert_eq!(a.sum(&b).dim(), 2);
    assert!(!a.same_as(&b));
    assert!(a.sum(&b).contains_subspace(&a));
}

#[test]
fn normal_forms_are_linear() {
    let f = field();
    let ideal = random_ideal(3, 2, 77);
    let ring = QuotientRing::with_options(f, ideal, Elimination::None, None);
    let slice = ring.slice(3);
    let p = random_ideal(3, 1, 1).generators()[0].clone();
    let q = random_ideal(3, 1, 2).generators()[0].clone();
    if p.degree() == 3 && q.degree() == 3 {
        let sum = p.add(&q, &f);
        let mut expected = to_dense_nf(&slice, &p);
        for (e, v) in expected.iter_mut().zip(to_dense_nf(&slice, &q)) {
            *e = f.add(*e, v);
        }
        assert_eq!(to_dense_nf(&slice, &sum), expected);
    }
    for b in slice.basis() {
        let nf = slice.normal_form(&HomogPoly::monomial(b.clone(), 1));
        assert_eq!(nf.len(), 1);
    }
}

fn to_dense_nf(slice: &DegreeSlice, p: &HomogPoly) -> Vec<u32> {
    crate::echelon::to_dense(&slice.normal_form(p), slice.dim())
}
