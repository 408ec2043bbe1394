//! Randomized properties, each checked against a brute-force oracle written
//! here rather than in the library.

mod common;

use std::collections::{HashMap, HashSet};

use common::*;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use weightmon::admiss::{is_admissible, AdmissibleTriple};
use weightmon::exactla::{
    hermite_normal_form, hilbert_basis, ivec, part_of_basis, smith_normal_form, IntMatrix, IntVec, IntegerLattice,
    RationalCone,
};
use weightmon::monoid::WeightMonoid;
use weightmon::rootsys::{build_group, group, GroupDatum};
use weightmon::sl2c::family_grid;
use weightmon::sphroots::{elements, s_gamma, sigma_n_general, sigma_n_gsat, sigma_sc};
use weightmon::verdict::{smooth_verdict, verify_certificate, Route};

fn mat(rows: &[Vec<i64>], cols: usize) -> IntMatrix {
    let r: Vec<IntVec> = rows.iter().map(|x| ivec(x)).collect();
    IntMatrix::from_rows(cols, &r)
}

fn int_matrix_eq(a: &IntMatrix, b: &IntMatrix) -> bool {
    a.nrows() == b.nrows() && a.ncols() == b.ncols() && a.rows_vec() == b.rows_vec()
}

fn unimodular(m: &IntMatrix) -> bool {
    let rows: Vec<Vec<i128>> = m.rows_vec().iter().map(|r| r.iter().map(|x| x.to_i128().unwrap()).collect()).collect();
    leibniz(&rows).abs() == 1
}

fn matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<Vec<i64>>)> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        (Just(r), Just(c), proptest::collection::vec(proptest::collection::vec(-9i64..=9, c), r))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn part_of_basis_matches_oracles((k, l, vs) in (1usize..=5, 1usize..=5).prop_flat_map(|(k, l)| {
        (Just(k), Just(l), proptest::collection::vec(proptest::collection::vec(-9i64..=9, l), k))
    })) {
        let vectors: Vec<IntVec> = vs.iter().map(|v| ivec(v)).collect();
        let by_minors = minors_oracle(&vs, l);
        // Smith form of the l x k matrix: all k invariant factors equal to 1
        let snf = smith_normal_form(&IntMatrix::from_cols(l, &vectors));
        let d = snf.divisors();
        let by_snf = d.len() == k && d.iter().all(|x| x.is_one());
        prop_assert_eq!(by_minors, by_snf);
        prop_assert_eq!(part_of_basis(&vectors), by_minors);
    }

    #[test]
    fn hnf_reconstructs((r, c, rows) in matrix_strategy()) {
        let m = mat(&rows, c);
        let h = hermite_normal_form(&m);
        prop_assert!(int_matrix_eq(&m.mul(&h.u), &h.h));
        prop_assert!(unimodular(&h.u));
        for (col, &p) in h.pivots.iter().enumerate() {
            prop_assert!(h.h[(p, col)].is_positive());
            for row in 0..p {
                prop_assert!(h.h[(row, col)].is_zero());
            }
            for left in 0..col {
                prop_assert!(!h.h[(p, left)].is_negative() && h.h[(p, left)] < h.h[(p, col)]);
            }
        }
        prop_assert!(h.pivots.windows(2).all(|w| w[0] < w[1]));
        for col in h.rank..c {
            prop_assert!(h.h.col(col).iter().all(|x| x.is_zero()));
        }
        prop_assert!(h.rank <= r);
    }

    #[test]
    fn snf_reconstructs((r, c, rows) in matrix_strategy()) {
        let m = mat(&rows, c);
        let s = smith_normal_form(&m);
        prop_assert!(int_matrix_eq(&s.u.mul(&m).mul(&s.v), &s.d));
        prop_assert!(unimodular(&s.u) && unimodular(&s.v));
        for i in 0..r {
            for j in 0..c {
                if i != j {
                    prop_assert!(s.d[(i, j)].is_zero());
                }
            }
        }
        let d = s.divisors();
        prop_assert!(d.iter().all(|x| x.is_positive()));
        prop_assert!(d.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    }
}

/// Full-dimensional cones, pointed because every generator has positive
/// last coordinate.
fn pointed_cone() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (2usize..=3).prop_flat_map(|d| {
        let v = (proptest::collection::vec(-3i64..=3, d - 1), 1i64..=3).prop_map(|(mut v, t)| {
            v.push(t);
            v
        });
        (Just(d), proptest::collection::vec(v, d..=d + 2))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hilbert_basis_regenerates_box((d, gens) in pointed_cone()) {
        let g: Vec<IntVec> = gens.iter().map(|v| ivec(v)).collect();
        let cone = RationalCone::from_generators(d, &g);
        prop_assume!(cone.is_full_dimensional());
        let hb = hilbert_basis(&cone);
        prop_assert!(hb.units.is_empty());
        let basis: Vec<Vec<i64>> = hb.irreducibles.iter().map(|v| small(v)).collect();
        let mut memo = HashMap::new();
        for p in box_points(d, 5) {
            if cone.contains(&ivec(&p)) {
                prop_assert!(representable(&p, &basis, &cone, &mut memo), "{:?} not generated by {:?}", p, basis);
            }
        }
        // minimality: no element is generated by the others
        for (i, h) in basis.iter().enumerate() {
            prop_assert!(cone.contains(&ivec(h)));
            let others: Vec<Vec<i64>> = basis.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, v)| v.clone()).collect();
            prop_assert!(!representable(h, &others, &cone, &mut HashMap::new()));
        }
    }
}

fn any_cone() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=4).prop_flat_map(|d| (Just(d), proptest::collection::vec(proptest::collection::vec(-3i64..=3, d), 1..=5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn dual_of_dual_is_identity((d, gens) in pointed_cone()) {
        let g: Vec<IntVec> = gens.iter().map(|v| ivec(v)).collect();
        let cone = RationalCone::from_generators(d, &g);
        prop_assert!(cone.dual().dual().same_as(&cone));
        // every generator pairs nonnegatively with every dual ray
        for r in cone.dual().rays() {
            for x in &g {
                let s: BigInt = r.iter().zip(x).map(|(a, b)| a * b).sum();
                prop_assert!(!s.is_negative());
            }
        }
    }

    #[test]
    fn dual_of_dual_any_cone((d, gens) in any_cone()) {
        let g: Vec<IntVec> = gens.iter().map(|v| ivec(v)).collect();
        let cone = RationalCone::from_generators(d, &g);
        prop_assert!(cone.dual().dual().same_as(&cone));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Membership search against all N-combinations with small coefficients.
    #[test]
    fn search_member_matches_enumeration(gens in proptest::collection::vec((-3i64..=3, 1i64..=2), 1..=3)) {
        let gens: Vec<Vec<i64>> = gens.into_iter().map(|(a, b)| vec![a, b]).collect();
        let g = build_group(&[], 2).unwrap();
        let m = WeightMonoid::new(&g, &gens.iter().map(|v| ivec(v)).collect::<Vec<_>>()).unwrap();
        // second coordinate is at least 1 on each generator, so points with
        // second coordinate ≤ 4 use at most 4 generators
        let mut reach: HashSet<Vec<i64>> = HashSet::from([vec![0, 0]]);
        for _ in 0..4 {
            let next: Vec<Vec<i64>> = reach.iter().flat_map(|p| gens.iter().map(move |g| vec![p[0] + g[0], p[1] + g[1]])).collect();
            reach.extend(next);
        }
        for p in box_points(2, 4) {
            if p[1] < 0 { continue; }
            let w = ivec(&p);
            prop_assert_eq!(m.search_member(&w), reach.contains(&p), "{:?}", p);
            if m.is_normal() {
                prop_assert_eq!(m.member(&w), reach.contains(&p));
            }
        }
    }
}

fn some_group() -> impl Strategy<Value = GroupDatum> {
    prop_oneof![
        Just("A3"), Just("B3"), Just("C3"), Just("D4"), Just("G2"), Just("F4"), Just("A1xA2"), Just("B2xG2"), Just("E6")
    ]
    .prop_flat_map(|s| (0usize..=1).prop_map(move |t| group(s, t).unwrap()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simple_reflections_are_involutions((g, w) in some_group().prop_flat_map(|g| {
        let d = g.dim();
        (Just(g), proptest::collection::vec(-5i64..=5, d))
    })) {
        let w = ivec(&w);
        for j in 0..g.rank() {
            let once = g.simple_reflection(j, &w).unwrap();
            prop_assert_eq!(g.simple_reflection(j, &once).unwrap(), w.clone());
            let a = g.simple_root(j).clone();
            let neg: IntVec = a.iter().map(|x| -x).collect();
            prop_assert_eq!(g.simple_reflection(j, &a).unwrap(), neg);
            // ⟨α_j∨, s_j w⟩ = −⟨α_j∨, w⟩
            prop_assert_eq!(g.coroot_pairing(j, &once), -g.coroot_pairing(j, &w));
        }
    }

    #[test]
    fn automorphisms_preserve_cartan(g in some_group()) {
        let c = g.cartan();
        for k in 0..g.components().len() {
            for p in g.diagram_automorphisms(k) {
                let nodes = &g.components()[k].nodes;
                for (x, &i) in nodes.iter().enumerate() {
                    for (y, &j) in nodes.iter().enumerate() {
                        prop_assert_eq!(c[p[x]][p[y]], c[i][j]);
                    }
                }
            }
        }
    }
}

fn permute_triple(t: &AdmissibleTriple, perm: &[usize]) -> AdmissibleTriple {
    let s: Vec<usize> = t.s.iter().map(|&a| perm[a]).collect();
    let sp: Vec<usize> = t.sp.iter().map(|&a| perm[a]).collect();
    let sigma: Vec<IntVec> = t
        .sigma
        .iter()
        .map(|c| {
            let mut out = vec![BigInt::zero(); c.len()];
            for (i, x) in c.iter().enumerate() {
                out[perm[i]] = x.clone();
            }
            out
        })
        .collect();
    AdmissibleTriple::new(&s, &sp, &sigma)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    /// Admissibility depends on the triple only up to diagram automorphisms.
    #[test]
    fn admissibility_is_automorphism_invariant(
        name in prop_oneof![Just("A4"), Just("A5"), Just("D4"), Just("E6"), Just("D5")],
        s_mask in 0u32..64,
        sp_mask in 0u32..64,
        pick in proptest::collection::vec(any::<bool>(), 0..40),
    ) {
        let g = group(name, 0).unwrap();
        let r = g.rank();
        let s: Vec<usize> = (0..r).filter(|j| s_mask >> j & 1 == 1).collect();
        let sp: Vec<usize> = s.iter().copied().filter(|j| sp_mask >> j & 1 == 1).collect();
        let sigma: Vec<IntVec> = sigma_sc(&g)
            .into_iter()
            .filter(|x| x.support.iter().all(|a| s.contains(a)))
            .zip(pick.iter().chain(std::iter::repeat(&false)))
            .filter(|(_, &p)| p)
            .map(|(x, _)| x.coefficients)
            .collect();
        let t = AdmissibleTriple::new(&s, &sp, &sigma);
        let base = is_admissible(&g, &t).is_some();
        for perm in g.diagram_automorphisms(0) {
            prop_assert_eq!(is_admissible(&g, &permute_triple(&t, &perm)).is_some(), base);
        }
    }
}

fn full_rank_lattice() -> impl Strategy<Value = (GroupDatum, Vec<Vec<i64>>)> {
    prop_oneof![Just("A2"), Just("B2"), Just("C2"), Just("G2"), Just("A1xA1")].prop_flat_map(|s| {
        (Just(group(s, 0).unwrap()), proptest::collection::vec(proptest::collection::vec(-4i64..=4, 2), 2))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// G-saturated monoids go through the G-saturated route, both `Σ^N`
    /// computations agree, and the certificate re-derives.
    #[test]
    fn route_consistency((g, gens) in full_rank_lattice()) {
        let det = gens[0][0] * gens[1][1] - gens[0][1] * gens[1][0];
        prop_assume!(det != 0 && det.abs() <= 12);
        let l = IntegerLattice::from_generators(2, &gens.iter().map(|v| ivec(v)).collect::<Vec<_>>());
        let m = WeightMonoid::g_saturated(&g, &l).unwrap();
        let v = smooth_verdict(&m).unwrap();
        prop_assert_eq!(v.route, Some(Route::GSaturated));
        prop_assert_eq!(elements(&sigma_n_general(&m).unwrap()), elements(&sigma_n_gsat(&m).unwrap()));
        prop_assert!(verify_certificate(&m, &v).unwrap());
    }

    #[test]
    fn torus_monoids_take_toric_route(gens in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 2), 1..=3)) {
        let g = build_group(&[], 2).unwrap();
        let m = WeightMonoid::new(&g, &gens.iter().map(|v| ivec(v)).collect::<Vec<_>>()).unwrap();
        prop_assume!(m.is_normal());
        prop_assert_eq!(smooth_verdict(&m).unwrap().route, Some(Route::Toric));
    }
}

#[test]
fn s_gamma_union_is_feasible_on_fixtures() {
    let mut fixtures: Vec<WeightMonoid> = Vec::new();
    for name in ["A1", "A2", "A3", "B2", "C3", "G2", "D4"] {
        let g = group(name, 0).unwrap();
        let n = g.rank();
        fixtures.push(WeightMonoid::g_saturated(&g, &IntegerLattice::full(n)).unwrap());
        fixtures.push(WeightMonoid::g_saturated(&g, &IntegerLattice::full(n).scaled(2)).unwrap());
        fixtures.push(WeightMonoid::g_saturated(&g, &g.root_lattice()).unwrap());
    }
    fixtures.extend(family_grid(3).iter().map(|f| f.monoid()));
    let gl2 = GroupDatum::from_root_datum(2, &[ivec(&[2, -1])], &[ivec(&[1, 0])]).unwrap();
    fixtures.push(WeightMonoid::new(&gl2, &[ivec(&[1, 2]), ivec(&[1, -3])]).unwrap());
    assert!(fixtures.len() > 100);
    for m in &fixtures {
        let (u, feasible) = union_of_feasible(m);
        assert!(feasible, "{:?}", m.generators());
        let sigma = sigma_n_general(m).unwrap();
        if m.is_g_saturated().unwrap() {
            assert_eq!(s_gamma(m, &sigma).unwrap(), u);
        } else {
            assert!(matches!(s_gamma(m, &sigma), Err(weightmon::Error::NotGSaturated)));
        }
    }
}
