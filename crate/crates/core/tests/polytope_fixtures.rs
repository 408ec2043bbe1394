use weightmon::exactla::{ivec, rvec, IntVec, IntegerLattice};
use weightmon::polytope::{
    check_pair, is_delzant, is_reflective_polytope, local_monoid, su3_triangle_models, tangent_cone, PairOutcome,
    Polytope,
};
use weightmon::rootsys::{group, GroupDatum};
use weightmon::sl2c::Sl2cSigma;
use weightmon::verdict::{Outcome, Route};

fn sorted(mut v: Vec<IntVec>) -> Vec<IntVec> {
    v.sort();
    v
}

fn su3_triangle() -> Polytope {
    let g = group("A2", 0).unwrap();
    Polytope::new(&g, &[rvec(&[0, 0]), rvec(&[1, 0]), rvec(&[0, 1])]).unwrap()
}

fn gl2() -> GroupDatum {
    GroupDatum::from_root_datum(2, &[ivec(&[2, -1])], &[ivec(&[1, 0])]).unwrap()
}

#[test]
fn su3_tangent_cones() {
    let p = su3_triangle();
    let c = tangent_cone(&p, &rvec(&[1, 0])).unwrap();
    assert_eq!(sorted(c.rays().to_vec()), vec![ivec(&[-1, 0]), ivec(&[-1, 1])]);
    let m = local_monoid(&p, &IntegerLattice::full(2), &rvec(&[1, 0])).unwrap();
    assert_eq!(sorted(m.hilbert_basis().irreducibles.clone()), vec![ivec(&[-1, 0]), ivec(&[-1, 1])]);
}

#[test]
fn su3_full_lattice() {
    let p = su3_triangle();
    let l = IntegerLattice::full(2);
    assert!(is_delzant(&p, &l));
    assert!(!is_reflective_polytope(&p).holds());
    let r = check_pair(&p, &l, &su3_triangle_models()).unwrap();
    assert_eq!(r.overall, PairOutcome::Satisfied);
    assert!(!r.global_route);
    // vertex 0: the whole dominant monoid, decided as a G-saturated monoid
    assert_eq!(sorted(r.vertices[0].monoid.clone()), vec![ivec(&[0, 1]), ivec(&[1, 0])]);
    assert_eq!(r.vertices[0].route(), Some(Route::GSaturated));
    // vertex ω1 pushed to ⟨2ε, ω+ε⟩
    assert_eq!(sorted(r.vertices[1].model_monoid.clone().unwrap()), vec![ivec(&[0, 2]), ivec(&[1, 1])]);
    assert_eq!(r.vertices[1].route(), Some(Route::Sl2Cx));
    assert_eq!(sorted(r.vertices[2].model_monoid.clone().unwrap()), vec![ivec(&[0, 2]), ivec(&[1, 1])]);
}

#[test]
fn su3_doubled_lattice() {
    let p = su3_triangle();
    let l = IntegerLattice::full(2).scaled(2);
    let r = check_pair(&p, &l, &su3_triangle_models()).unwrap();
    assert_eq!(r.overall, PairOutcome::Satisfied);
    assert_eq!(sorted(r.vertices[0].monoid.clone()), vec![ivec(&[0, 2]), ivec(&[2, 0])]);
    assert_eq!(
        r.vertices[0].verdict.sigma_n().unwrap(),
        vec![ivec(&[-2, 4]), ivec(&[4, -2])],
        "Σ^N = 2S at the origin"
    );
    assert_eq!(sorted(r.vertices[1].model_monoid.clone().unwrap()), vec![ivec(&[0, 4]), ivec(&[2, 2])]);
    assert_eq!(r.vertices[1].verdict.sigma_n().unwrap(), Sl2cSigma::TwoAlpha.elements());
}

#[test]
fn su3_without_models_is_undecided() {
    let p = su3_triangle();
    let r = check_pair(&p, &IntegerLattice::full(2), &[]).unwrap();
    assert_eq!(r.overall, PairOutcome::Undecided);
    assert_eq!(r.vertices[1].outcome(), Outcome::Undecided);
}

#[test]
fn gl2_triangle_global_route() {
    for a in [1i64, 2, 3] {
        let l1 = rvec(&[1, a]);
        let l2 = rvec(&[1, -(a + 1)]);
        let p = Polytope::new(&gl2(), &[rvec(&[0, 0]), l1, l2]).unwrap();
        let l0 = IntegerLattice::from_generators(2, &[ivec(&[1, a]), ivec(&[1, -(a + 1)])]);
        assert!(is_reflective_polytope(&p).holds());
        assert!(is_delzant(&p, &l0));
        let r = check_pair(&p, &l0, &[]).unwrap();
        assert!(r.global_route);
        assert_eq!(r.overall, PairOutcome::Satisfied);
        assert!(r.vertices.iter().all(|v| v.route() == Some(Route::Reflective)));
    }
}

#[test]
fn su2_segment() {
    let g = group("A1", 0).unwrap();
    let p = Polytope::new(&g, &[rvec(&[0]), rvec(&[3])]).unwrap();
    let l = IntegerLattice::from_generators(1, &[ivec(&[2])]);
    let r = check_pair(&p, &l, &[]).unwrap();
    assert_eq!(r.overall, PairOutcome::Satisfied);
    assert_eq!(r.vertices[0].monoid, vec![ivec(&[2])]);
    assert_eq!(r.vertices[1].monoid, vec![ivec(&[-2])]);
    assert_eq!(r.vertices[1].route(), Some(Route::Toric));
    // Λ0 = Z also works (C^2 at the origin); 3Z does not, since ⟨3ω⟩ is not smooth
    let full = check_pair(&p, &IntegerLattice::full(1), &[]).unwrap();
    assert_eq!(full.overall, PairOutcome::Satisfied);
    let odd = check_pair(&p, &IntegerLattice::from_generators(1, &[ivec(&[3])]), &[]).unwrap();
    assert_eq!(odd.overall, PairOutcome::Violated);
}
