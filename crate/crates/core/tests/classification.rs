use weightmon::enumerate::{
    enumerate_other_types, enumerate_sl_fullrank, intermediate_lattices, other_type_lattices, sigma, sl_lattices,
    tau, Instance,
};
use weightmon::exactla::{ivec, IntegerLattice};
use weightmon::monoid::WeightMonoid;
use weightmon::rootsys::{group, CartanType};
use weightmon::sphroots::{elements, sigma_n_general, sigma_n_gsat, s_plus};
use weightmon::verdict::{check_gsat_smooth, Outcome};

fn ct(s: &str) -> CartanType {
    s.parse().unwrap()
}

#[test]
fn sl_families_are_smooth() {
    for n in 2..=6usize {
        let inst = enumerate_sl_fullrank(n, 6).unwrap();
        for i in &inst {
            assert!(i.confirmed(), "A{n} case {} {}: {:?} {:?}", i.member.case, i.member.label, i.outcome, i.sigma_n);
        }
        let c1 = inst.iter().filter(|i| i.member.case == 1).count();
        assert_eq!(c1, tau(n as u64 + 1));
        if n % 2 == 1 {
            let c3 = inst.iter().filter(|i| i.member.case == 3).count() as u64;
            assert_eq!(c3, sigma((n as u64 + 1) / 2));
        } else {
            assert_eq!(inst.iter().filter(|i| i.member.case == 2).count(), 6);
        }
    }
}

#[test]
fn sl_counts_match_divisor_functions() {
    // n = 3: three lattices of each kind
    let ls = sl_lattices(3, 6).unwrap();
    assert_eq!(ls.iter().filter(|m| m.case == 1).count(), 3);
    assert_eq!(ls.iter().filter(|m| m.case == 3).count(), 3);
}

#[test]
fn other_types_at_desk_ranks() {
    for t in ["B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6"] {
        let r = enumerate_other_types(ct(t)).unwrap();
        for i in &r.family {
            assert!(i.confirmed(), "{t} case {} {}: {:?}", i.member.case, i.member.label, i.outcome);
        }
        for (name, o) in &r.negatives {
            assert_eq!(*o, Outcome::NotSmooth, "{t} {name}");
        }
    }
}

#[test]
fn d4_weight_lattice_not_smooth() {
    let g = group("D4", 0).unwrap();
    let m = WeightMonoid::g_saturated(&g, &IntegerLattice::full(4)).unwrap();
    assert_eq!(check_gsat_smooth(&m).unwrap().outcome, Outcome::NotSmooth);
}

#[test]
fn b2_spherical_pair_family() {
    let g = group("B2", 0).unwrap();
    let a1 = g.simple_root(0).clone();
    let a2 = g.simple_root(1).clone();
    let lower = IntegerLattice::from_generators(2, &[weightmon::exactla::add(&a1, &a2), ivec(&[0, 0]), {
        let mut v = a2.clone();
        v.iter_mut().for_each(|x| *x *= 2);
        v
    }]);
    let upper = IntegerLattice::from_generators(2, &[ivec(&[1, 0]), ivec(&[0, 2])]);
    let mut expected = s_plus(&g);
    expected.push(a2.iter().map(|x| x * 2).collect());
    expected.sort();
    for l in intermediate_lattices(&lower, &upper).unwrap() {
        let m = WeightMonoid::g_saturated(&g, &l).unwrap();
        let v = check_gsat_smooth(&m).unwrap();
        assert_eq!(v.outcome, Outcome::Smooth);
        assert_eq!(v.sigma_n().unwrap(), expected);
    }
}

#[test]
fn g2_doubled_lattice() {
    let g = group("G2", 0).unwrap();
    let m = WeightMonoid::g_saturated(&g, &IntegerLattice::full(2).scaled(2)).unwrap();
    let v = check_gsat_smooth(&m).unwrap();
    assert_eq!(v.outcome, Outcome::Smooth);
    assert_eq!(v.sigma_n().unwrap(), weightmon::sphroots::doubled_simple_roots(&g));
}

/// Between `2Λ_R` and `Λ` a monoid is smooth exactly on the family lattices.
#[test]
fn exhaustive_small_rank_sweep() {
    for t in ["B2", "C2", "G2", "B3", "C3"] {
        let g = group(t, 0).unwrap();
        let n = g.rank();
        let root = IntegerLattice::from_generators(n, g.simple_roots());
        let family: Vec<IntegerLattice> = other_type_lattices(ct(t)).unwrap().into_iter().map(|m| m.lattice).collect();
        for l in intermediate_lattices(&root.scaled(2), &IntegerLattice::full(n)).unwrap() {
            let m = WeightMonoid::g_saturated(&g, &l).unwrap();
            let smooth = check_gsat_smooth(&m).unwrap().outcome == Outcome::Smooth;
            assert_eq!(smooth, family.contains(&l), "{t}: {:?}", l.basis());
        }
    }
}

#[test]
fn exhaustive_sweep_type_a() {
    for n in [2usize, 3] {
        let g = group(&format!("A{n}"), 0).unwrap();
        let root = IntegerLattice::from_generators(n, g.simple_roots());
        let family: Vec<IntegerLattice> = sl_lattices(n, 24).unwrap().into_iter().map(|m| m.lattice).collect();
        for l in intermediate_lattices(&root.scaled(2), &IntegerLattice::full(n)).unwrap() {
            let m = WeightMonoid::g_saturated(&g, &l).unwrap();
            let smooth = check_gsat_smooth(&m).unwrap().outcome == Outcome::Smooth;
            assert_eq!(smooth, family.contains(&l), "A{n}: {:?}", l.basis());
        }
    }
}

/// The general six-condition `Σ^N` agrees with the G-saturated one.
#[test]
fn general_sigma_n_agrees_on_families() {
    let mut checked = 0;
    for n in 1..=4usize {
        let g = group(&format!("A{n}"), 0).unwrap();
        for i in enumerate_sl_fullrank(n, 3).unwrap() {
            let m = WeightMonoid::g_saturated(&g, &i.member.lattice).unwrap();
            assert_eq!(elements(&sigma_n_general(&m).unwrap()), elements(&sigma_n_gsat(&m).unwrap()));
            checked += 1;
        }
    }
    for t in ["B2", "B3", "C2", "C3", "G2", "D4"] {
        let g = group(t, 0).unwrap();
        for m in other_type_lattices(ct(t)).unwrap() {
            let m = WeightMonoid::g_saturated(&g, &m.lattice).unwrap();
            assert_eq!(elements(&sigma_n_general(&m).unwrap()), elements(&sigma_n_gsat(&m).unwrap()));
            checked += 1;
        }
    }
    assert!(checked > 30);
}

#[test]
fn instances_are_deterministic() {
    let a: Vec<String> = enumerate_sl_fullrank(3, 2).unwrap().iter().map(fmt).collect();
    let b: Vec<String> = enumerate_sl_fullrank(3, 2).unwrap().iter().map(fmt).collect();
    assert_eq!(a, b);
}

fn fmt(i: &Instance) -> String {
    format!("{:?}", (i.member.case, &i.member.label, i.member.lattice.basis(), i.outcome, &i.sigma_n))
}
