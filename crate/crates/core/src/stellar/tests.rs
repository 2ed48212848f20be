use super::*;
use crate::complex::{cross_polytope_boundary, cyclic_polytope_boundary, simplex_boundary};
use crate::lefschetz::Outcome;

fn field() -> PrimeField {
    PrimeField::default()
}

fn instance(d: SimplicialComplex, sigma: &[u32]) -> StellarInstance {
    StellarInstance::new(d, Face::new(sigma.iter().copied()), field(), 17).unwrap()
}

fn tetra() -> SimplicialComplex {
    simplex_boundary(4).unwrap()
}

fn octa() -> SimplicialComplex {
    cross_polytope_boundary(3).unwrap()
}

#[test]
fn tetrahedron_edge_parameters() {
    let inst = instance(tetra(), &[1, 2]);
    assert_eq!((inst.q(), inst.d(), inst.p1(), inst.p2()), (1, 3, 1, 1));
    let two_points = SimplicialComplex::from_faces(vec![Face::new([3]), Face::new([4])]);
    assert_eq!(inst.link().restrict_to_support(), two_points.restrict_to_support());
    assert_eq!(inst.default_m_max(), 6);
}

#[test]
fn octahedron_and_cyclic_parameters() {
    let inst = instance(octa(), &[1, 2]);
    assert_eq!((inst.q(), inst.d()), (1, 3));
    let oracle = octa().link(&Face::new([1, 2])).unwrap();
    assert_eq!(inst.link(), &oracle);
    let inst = instance(cyclic_polytope_boundary(10, 6).unwrap(), &[1, 2]);
    assert_eq!((inst.q(), inst.d(), inst.p1(), inst.p2()), (1, 6, 2, 3));
}

#[test]
fn construction_errors() {
    let path = SimplicialComplex::from_faces(vec![Face::new([1, 2]), Face::new([2, 3])]);
    assert!(matches!(
        StellarInstance::new(path, Face::new([1, 2]), field(), 0),
        Err(LabError::NotGorensteinStar { .. })
    ));
    assert!(matches!(
        StellarInstance::new(tetra(), Face::new([1]), field(), 0),
        Err(LabError::FaceTooSmall(_))
    ));
    assert!(matches!(
        StellarInstance::new(tetra(), Face::new([1, 2, 3, 4]), field(), 0),
        Err(LabError::NotAFace(_))
    ));
}

#[test]
fn reductions_have_expected_shapes() {
    for (d, sigma) in [(tetra(), vec![1, 2]), (octa(), vec![1, 2, 3]), (simplex_boundary(5).unwrap(), vec![1, 2])] {
        let inst = instance(d.clone(), &sigma);
        let h: Vec<i64> = d.h_vector().0;
        assert_eq!(inst.a().hilbert_function().values(), h.as_slice());
        assert!(inst.a().is_symmetric());
        assert_eq!(inst.a().dim(inst.d()), 1);
        let top = inst.d() - inst.q() - 1;
        assert_eq!(inst.b().dim(top), 1);
        assert_eq!(inst.b().socle_degree(), top);
    }
}

#[test]
fn identities_on_small_instances() {
    for (d, sigma) in [(tetra(), vec![1, 2]), (octa(), vec![1, 2]), (tetra(), vec![1, 2, 3])] {
        let inst = instance(d, &sigma);
        let m = inst.default_m_max();
        for report in [
            verify_hf_stellar_identity(&inst, m),
            verify_c_decomposition(&inst),
            verify_g_properties(&inst, m),
            verify_initial_ideal(&inst, m),
        ] {
            assert_eq!(report.status, Status::Pass, "{}: {}", report.name, report.data);
        }
        for t in 1..=inst.d() {
            let r = verify_iq_hf(&inst, m, t).unwrap();
            assert_eq!(r.status, Status::Pass, "{}", r.data);
        }
        assert!(matches!(verify_iq_hf(&inst, m, 0), Err(LabError::BadT { .. })));
    }
}

#[test]
fn degree_zero_sides() {
    let inst = instance(tetra(), &[1, 2]);
    let r = verify_hf_stellar_identity(&inst, 0);
    assert_eq!(r.data["hf_subdivision"], serde_json::json!([1]));
    assert_eq!(r.data["hf_d_plus_shifted_link"], serde_json::json!([1]));
}

#[test]
fn theorem_checks_on_tetrahedron() {
    let edge = instance(tetra(), &[1, 2]);
    assert_eq!(check_theorem_stellar(&edge, 3).unwrap().status, Status::Pass);
    assert_eq!(check_theorem_down(&edge, 3).unwrap().status, Status::NotApplicable);
    assert_eq!(check_iff(&edge, 3).unwrap().status, Status::NotApplicable);
    assert_eq!(check_lemma_consistency(&edge, 3).unwrap().status, Status::Pass);
    let face = instance(tetra(), &[1, 2, 3]);
    assert_eq!(check_theorem_down(&face, 3).unwrap().status, Status::Pass);
    assert_eq!(check_iff(&face, 3).unwrap().status, Status::Pass);
    assert_eq!(check_lemma_consistency(&face, 3).unwrap().status, Status::Pass);
}

#[test]
fn theorem_guards() {
    let inst = instance(simplex_boundary(5).unwrap(), &[1, 2, 3]);
    assert_eq!((inst.d(), inst.p2(), inst.q()), (4, 2, 2));
    assert_eq!(check_theorem_down(&inst, 3).unwrap().status, Status::NotApplicable);
    let inst = instance(simplex_boundary(6).unwrap(), &[1, 2, 3, 4]);
    assert_eq!(check_iff(&inst, 3).unwrap().status, Status::Pass);
    let inst = instance(cyclic_polytope_boundary(10, 6).unwrap(), &[1, 2]);
    assert_eq!(check_iff(&inst, 3).unwrap().status, Status::NotApplicable);
}

#[test]
fn octahedron_theorem() {
    let inst = instance(octa(), &[1, 2]);
    let r = check_theorem_stellar(&inst, 3).unwrap();
    assert_eq!(r.status, Status::Pass, "{}", r.data);
}

#[test]
fn colon_ideals_on_tetrahedron() {
    let inst = instance(tetra(), &[1, 2]);
    let bundle = build_colon_bundle(&inst);
    let r = compare_pa_pb_pc(&bundle, 6);
    assert_eq!(r.status, Status::Pass, "{}", r.data);
    let d0 = &r.data["degrees"][0];
    assert_eq!((d0["hf_pa"].as_u64(), d0["hf_pb"].as_u64(), d0["hf_pc"].as_u64()), (Some(1), Some(1), Some(1)));
    for t in [1, 3] {
        let r = verify_triple_equality(&inst, t, 6).unwrap();
        assert_eq!(r.status, Status::Pass, "t = {t}: {}", r.data);
    }
    assert!(matches!(verify_triple_equality(&inst, 4, 6), Err(LabError::BadT { t: 4, d: 3 })));
}

#[test]
fn conjecture_probe_only_reports() {
    let inst = instance(octa(), &[1, 2]);
    let r = probe_conjecture_g(&inst, 2);
    assert_eq!(r.status, Status::Info);
    let expected = inst.g().hilbert_function().delta_plus();
    assert_eq!(r.data["delta_plus_hf_g"], serde_json::json!(expected.values()));
}

fn cubes() -> GradedIdeal {
    let f = field();
    let mut gens: Vec<HomogPoly> = (0..4).map(|i| HomogPoly::var(4, i).pow(3, &f)).collect();
    gens.push(HomogPoly::linear(&[1, 1, 1, 1], &f).pow(3, &f));
    GradedIdeal::new(4, gens)
}

#[test]
fn artinian_seed_experiment() {
    let seed = build_artinian_seed(field(), cubes(), Monomial::from_exponents(&[1, 1, 0, 0]), 1).unwrap();
    assert!(!seed.is_degenerate());
    let reports = seed.run_checks(3, 5).unwrap();
    let outcome = |i: usize| reports[i].data["verdict"]["outcome"].clone();
    assert_eq!(outcome(0), serde_json::json!(Outcome::NoWitnessFound));
    assert_eq!(outcome(1), serde_json::json!(Outcome::NoWitnessFound));
    assert_eq!(outcome(2), serde_json::json!(Outcome::CertifiedTrue));
}

#[test]
fn seed_colon_examples() {
    let squares = GradedIdeal::from_monomials(
        2,
        [Monomial::from_exponents(&[2, 0]), Monomial::from_exponents(&[0, 2])],
    );
    let seed = build_artinian_seed(field(), squares.clone(), Monomial::from_exponents(&[1, 1]), 1).unwrap();
    let expected: Vec<HomogPoly> = vec![HomogPoly::var(2, 0), HomogPoly::var(2, 1)];
    let mut got = seed.i_l().generators().to_vec();
    got.sort_by(|a, b| b.terms()[0].0.cmp(&a.terms()[0].0));
    assert_eq!(got, expected);
    let seed = build_artinian_seed(field(), squares, Monomial::from_exponents(&[2, 0]), 1).unwrap();
    assert!(seed.is_degenerate());
    assert!(matches!(
        build_artinian_seed(field(), GradedIdeal::zero(2), Monomial::from_exponents(&[1, 0]), 1),
        Err(LabError::NotArtinianSeed(_))
    ));
}
