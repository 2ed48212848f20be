use super::*;
use crate::algebra::stanley_reisner_ideal;
use crate::complex::{cross_polytope_boundary, cyclic_polytope_boundary, simplex_boundary};
use crate::monomial::Monomial;

fn field() -> PrimeField {
    PrimeField::default()
}

fn cfg() -> TrialConfig {
    TrialConfig::new(3, 11)
}

fn one_var_power(k: u8) -> ArtinianAlgebra {
    let ideal = GradedIdeal::from_monomials(1, [Monomial::from_exponents(&[k])]);
    ArtinianAlgebra::new(field(), ideal).unwrap()
}

/// `(x1^3, x2^3, x3^3, x4^3, (x1+x2+x3+x4)^3)`.
pub(crate) fn cubes_ideal() -> GradedIdeal {
    let f = field();
    let mut gens: Vec<HomogPoly> =
        (0..4).map(|i| HomogPoly::var(4, i).pow(3, &f)).collect();
    gens.push(HomogPoly::linear(&[1, 1, 1, 1], &f).pow(3, &f));
    GradedIdeal::new(4, gens)
}

fn reduction_of(d: &crate::complex::SimplicialComplex, seed: u64) -> ArtinianAlgebra {
    let dim = (d.dim() + 1) as usize;
    artinian_reduction(field(), &stanley_reisner_ideal(d), dim, seed).unwrap()
}

#[test]
fn reductions_follow_h_vectors() {
    let a = reduction_of(&simplex_boundary(4).unwrap(), 1);
    assert_eq!(a.hilbert_function().values(), &[1, 1, 1, 1]);
    let a = reduction_of(&cross_polytope_boundary(3).unwrap(), 1);
    assert_eq!(a.hilbert_function().values(), &[1, 3, 3, 1]);
    assert_eq!(one_var_power(2).hilbert_function().values(), &[1, 1]);
}

#[test]
fn too_few_forms_is_not_artinian() {
    let ideal = stanley_reisner_ideal(&simplex_boundary(4).unwrap());
    let err = ArtinianAlgebra::build(field(), ideal, Vec::new(), 6).unwrap_err();
    assert!(matches!(err, LabError::NotArtinian { cap: 6 }));
}

#[test]
fn multiplication_ranks() {
    let f = one_var_power(4);
    let x = HomogPoly::var(1, 0);
    assert_eq!(f.multiplication_map_rank(&x, 1).unwrap(), 1);
    assert_eq!(f.multiplication_map_rank(&HomogPoly::zero(1, 1), 1).unwrap(), 0);
    assert!(matches!(
        f.multiplication_map_rank(&x, 4),
        Err(LabError::DegreeOutOfRange { degree: 4, socle: 3 })
    ));
    let a = reduction_of(&simplex_boundary(4).unwrap(), 2);
    let mut rng = rng_from_seed(5);
    let w = random_linear_form(4, &field(), &mut rng);
    for i in 0..3 {
        assert_eq!(a.multiplication_map_rank(&w, i).unwrap(), 1);
    }
    assert_eq!(a.power_map_rank(&w, 3, 0).unwrap(), 1);
}

#[test]
fn wlp_examples() {
    let v = has_wlp(&one_var_power(6), &cfg()).unwrap();
    assert!(v.is_certified());
    let octa = reduction_of(&cross_polytope_boundary(3).unwrap(), 3);
    assert!(has_wlp(&octa, &cfg()).unwrap().is_certified());
    let cubes = ArtinianAlgebra::new(field(), cubes_ideal()).unwrap();
    let v = has_wlp(&cubes, &cfg()).unwrap();
    assert_eq!(v.outcome, Outcome::NoWitnessFound);
    assert_eq!(v.trials, 3);
    assert!(v.first_failing_degree.is_some());
    assert!(v.note.as_deref().unwrap().contains("not a proof"));
}

#[test]
fn shortcut_agrees_with_full_check() {
    for (d, p1, p2) in [
        (simplex_boundary(4).unwrap(), 1, 1),
        (cross_polytope_boundary(3).unwrap(), 1, 1),
        (cyclic_polytope_boundary(10, 6).unwrap(), 2, 3),
    ] {
        let a = reduction_of(&d, 4);
        let full = has_wlp(&a, &cfg()).unwrap();
        let short = has_wlp_gorenstein_shortcut(&a, p1, p2, &cfg()).unwrap();
        assert!(full.is_certified());
        assert_eq!(full.outcome, short.outcome);
        assert_eq!(short.cross_check, Some(true));
    }
}

#[test]
fn shortcut_rejects_asymmetric_algebras() {
    let ideal = GradedIdeal::from_monomials(
        2,
        [Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[1, 1]), Monomial::from_exponents(&[0, 2])],
    );
    let f = ArtinianAlgebra::new(field(), ideal).unwrap();
    assert!(matches!(
        has_wlp_gorenstein_shortcut(&f, 0, 0, &cfg()),
        Err(LabError::NotGorensteinShaped(v)) if v == vec![1, 2]
    ));
    assert_eq!(has_slp(&f, &cfg()).unwrap().outcome, Outcome::Refuted);
}

#[test]
fn slp_examples() {
    assert!(has_slp(&one_var_power(4), &cfg()).unwrap().is_certified());
    let ideal = GradedIdeal::from_monomials(
        2,
        [Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[0, 2])],
    );
    let f = ArtinianAlgebra::new(field(), ideal).unwrap();
    assert_eq!(f.hilbert_function().values(), &[1, 2, 1]);
    assert!(has_slp(&f, &cfg()).unwrap().is_certified());
    let x_plus_y = HomogPoly::linear(&[1, 1], &field());
    assert_eq!(f.power_map_rank(&x_plus_y, 2, 0).unwrap(), 1);
    let cubes = ArtinianAlgebra::new(field(), cubes_ideal()).unwrap();
    assert!(!has_slp(&cubes, &cfg()).unwrap().is_certified());
}

#[test]
fn m_property_examples() {
    let b = one_var_power(3);
    let v = m_property(&b, 3, 2, &cfg()).unwrap();
    assert!(v.is_certified());
    assert_eq!(v.trials, 0);
    let v = m_property(&b, 2, 2, &cfg()).unwrap();
    assert!(v.is_certified());
    assert_eq!(v.cross_check, Some(true));
}

#[test]
fn distinguished_variable_has_unit_coefficient() {
    let c = TrialConfig::new(1, 3).with_shape(WitnessShape::PlusVariable(2));
    let w = c.witness(4, &field(), 0);
    assert_eq!(w.linear_coefficients()[2], 1);
}

#[test]
fn verdict_json_fields() {
    let v = has_wlp(&one_var_power(3), &cfg()).unwrap();
    let json = serde_json::to_value(&v).unwrap();
    for key in ["property", "outcome", "witness", "ranks", "prime", "seed", "trials"] {
        assert!(json.get(key).is_some(), "{key}");
    }
    assert_eq!(json["outcome"], "certified_true");
}
