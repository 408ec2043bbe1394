//! Lattice families of G-saturated smooth monoids of full rank, and
//! enumerators that run the smoothness criterion over them.

use std::collections::{BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactla::{
    add, scale, smith_normal_form, solve_rational, to_rational, IntMatrix, IntVec, IntegerLattice,
};
use crate::monoid::WeightMonoid;
use crate::rootsys::{build_group, CartanType, DynkinType, GroupDatum, Weight};
use crate::sphroots::{doubled_simple_roots, s_plus};
use crate::verdict::{check_gsat_smooth, Outcome};

/// A lattice together with the `Σ^N` a smooth monoid on it must have.
#[derive(Clone, Debug)]
pub struct LatticeFamilyMember {
    /// Case of the classification (see [`sl_lattices`], [`other_type_lattices`]).
    pub case: u8,
    /// Parameters, e.g. `d=3` or `e=2,r=1`.
    pub label: String,
    pub lattice: IntegerLattice,
    pub expected_sigma_n: Vec<Weight>,
}

/// Result of running the criterion on the monoid `L ∩ Λ^+`.
#[derive(Clone, Debug)]
pub struct Instance {
    pub member: LatticeFamilyMember,
    pub outcome: Outcome,
    pub sigma_n: Vec<Weight>,
}

impl Instance {
    pub fn confirmed(&self) -> bool {
        self.outcome == Outcome::Smooth && self.sigma_n == self.member.expected_sigma_n
    }
}

fn omega(n: usize, i: usize) -> IntVec {
    let mut v = vec![BigInt::zero(); n];
    if i >= 1 {
        v[i - 1] = BigInt::one();
    }
    v
}

fn two(v: &[BigInt]) -> IntVec {
    scale(&BigInt::from(2), v)
}

fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|d| m % d == 0).collect()
}

fn simple_group(ty: DynkinType, n: usize) -> Result<GroupDatum> {
    build_group(&[CartanType::new(ty, n)?], 0)
}

/// `α_i + α_{i+1}`, 1-based.
fn sigma_i(g: &GroupDatum, i: usize) -> IntVec {
    add(g.simple_root(i - 1), g.simple_root(i))
}

/// The three lattice families for `SL(n+1)`: `2⟨α_2,…,α_n, dω_n⟩` for
/// `d | n+1`; for even `n`, `⟨α_1+α_2,…,α_{n-1}+α_n, kω_{n-1}⟩` with
/// `1 ≤ k ≤ max_k`; for odd `n`, `⟨α_2+α_3,…,α_{n-1}+α_n, eω_{n-1},
/// rω_{n-1}+ω_n⟩` with `e | (n+1)/2`, `0 ≤ r < e`.
pub fn sl_lattices(n: usize, max_k: u64) -> Result<Vec<LatticeFamilyMember>> {
    if !(1..=8).contains(&n) {
        return Err(Error::InvalidParams(format!("rank {n} outside 1..=8")));
    }
    let g = simple_group(DynkinType::A, n)?;
    let mut out = Vec::new();
    for d in divisors(n as u64 + 1) {
        let mut gens: Vec<IntVec> = (2..=n).map(|j| two(g.simple_root(j - 1))).collect();
        gens.push(two(&scale(&BigInt::from(d), &omega(n, n))));
        out.push(LatticeFamilyMember {
            case: 1,
            label: format!("d={d}"),
            lattice: IntegerLattice::from_generators(n, &gens),
            expected_sigma_n: doubled_simple_roots(&g),
        });
    }
    if n % 2 == 0 {
        for k in 1..=max_k {
            let mut gens: Vec<IntVec> = (1..n).map(|i| sigma_i(&g, i)).collect();
            gens.push(scale(&BigInt::from(k), &omega(n, n - 1)));
            out.push(LatticeFamilyMember {
                case: 2,
                label: format!("k={k}"),
                lattice: IntegerLattice::from_generators(n, &gens),
                expected_sigma_n: s_plus(&g),
            });
        }
    } else {
        for e in divisors((n as u64 + 1) / 2) {
            for r in 0..e {
                let mut gens: Vec<IntVec> = (2..n).map(|i| sigma_i(&g, i)).collect();
                gens.push(scale(&BigInt::from(e), &omega(n, n - 1)));
                gens.push(add(&scale(&BigInt::from(r), &omega(n, n - 1)), &omega(n, n)));
                out.push(LatticeFamilyMember {
                    case: 3,
                    label: format!("e={e},r={r}"),
                    lattice: IntegerLattice::from_generators(n, &gens),
                    expected_sigma_n: s_plus(&g),
                });
            }
        }
    }
    Ok(out)
}

/// Runs the G-saturated criterion on `L ∩ Λ^+` for each member.
pub fn run_family(g: &GroupDatum, members: &[LatticeFamilyMember]) -> Result<Vec<Instance>> {
    members
        .iter()
        .map(|m| {
            let monoid = WeightMonoid::g_saturated(g, &m.lattice)?;
            let v = check_gsat_smooth(&monoid)?;
            let sigma_n = v.sigma_n().unwrap_or_default();
            Ok(Instance { member: m.clone(), outcome: v.outcome, sigma_n })
        })
        .collect()
}

/// All lattices of the three families for `SL(n+1)` with their verdicts.
pub fn enumerate_sl_fullrank(n: usize, max_k: u64) -> Result<Vec<Instance>> {
    let g = simple_group(DynkinType::A, n)?;
    run_family(&g, &sl_lattices(n, max_k)?)
}

/// Number of divisors.
pub fn tau(m: u64) -> usize {
    divisors(m).len()
}

/// Sum of divisors.
pub fn sigma(m: u64) -> u64 {
    divisors(m).iter().sum()
}

/// Rows `⟨α_j∨, α_{i+1}+α_{i+2}⟩` for `i = 1..n-2`, then `⟨α_j∨, d ω_{n-1}⟩`
/// with `d = (n+1)/2`; `n` odd. Its row lattice is `Z S^+` in `Λ`.
pub fn sl_odd_relation_matrix(n: usize) -> Result<IntMatrix> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::InvalidParams(format!("need odd n ≥ 3, got {n}")));
    }
    let g = simple_group(DynkinType::A, n)?;
    let d = BigInt::from((n + 1) / 2);
    let mut rows: Vec<IntVec> = (2..n).map(|i| sigma_i(&g, i)).collect();
    rows.push(scale(&d, &omega(n, n - 1)));
    Ok(IntMatrix::from_rows(n, &rows))
}

/// Rows `α_{i+1}+α_{i+2}` for `i = 1..n-2`, then `(n/2)ω_{n-1} + ω_n`, then
/// `ω_{n-1}`, in fundamental-weight coordinates; `n` even.
pub fn sl_even_basis_matrix(n: usize) -> Result<IntMatrix> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::InvalidParams(format!("need even n ≥ 2, got {n}")));
    }
    let g = simple_group(DynkinType::A, n)?;
    let mut rows: Vec<IntVec> = (2..n).map(|i| sigma_i(&g, i)).collect();
    rows.push(add(&scale(&BigInt::from(n / 2), &omega(n, n - 1)), &omega(n, n)));
    rows.push(omega(n, n - 1));
    Ok(IntMatrix::from_rows(n, &rows))
}

/// Every lattice `M` with `lower ⊆ M ⊆ upper`, for `lower` of finite index.
pub fn intermediate_lattices(lower: &IntegerLattice, upper: &IntegerLattice) -> Result<Vec<IntegerLattice>> {
    let r = upper.rank();
    if lower.rank() != r || !lower.is_sublattice_of(upper) {
        return Err(Error::InvalidParams("lower lattice must have finite index in the upper one".into()));
    }
    if r == 0 {
        return Ok(vec![upper.clone()]);
    }
    let dim = upper.dim();
    let coords: Vec<IntVec> = lower.basis().iter().map(|b| upper.coords(b).expect("sublattice")).collect();
    let snf = smith_normal_form(&IntMatrix::from_cols(r, &coords));
    let divs: Vec<u64> = (0..r).map(|i| snf.d[(i, i)].abs().to_u64().expect("small index")).collect();
    let order: u64 = divs.iter().product();
    if order > 1 << 16 {
        return Err(Error::InvalidParams(format!("quotient of order {order} is too large to enumerate")));
    }
    // y in upper-coordinates maps to (U y mod d_i); representatives are U^{-1} t
    let uinv: Vec<IntVec> = (0..r)
        .map(|j| {
            let mut e = vec![BigInt::zero(); r];
            e[j] = BigInt::one();
            solve_rational(&snf.u, &to_rational(&e)).expect("unimodular").iter().map(|x| x.to_integer()).collect()
        })
        .collect();
    let encode = |t: &[u64]| -> u64 { t.iter().zip(&divs).fold(0, |acc, (x, d)| acc * d + x) };
    let decode = |mut c: u64| -> Vec<u64> {
        let mut t = vec![0; r];
        for i in (0..r).rev() {
            t[i] = c % divs[i];
            c /= divs[i];
        }
        t
    };
    let plus = |a: u64, b: u64| -> u64 {
        let (x, y) = (decode(a), decode(b));
        let s: Vec<u64> = (0..r).map(|i| (x[i] + y[i]) % divs[i]).collect();
        encode(&s)
    };
    let closure = |h: &BTreeSet<u64>, q: u64| -> BTreeSet<u64> {
        let mut out = h.clone();
        let mut queue: VecDeque<u64> = VecDeque::from(vec![q]);
        while let Some(x) = queue.pop_front() {
            if !out.insert(x) {
                continue;
            }
            let cur: Vec<u64> = out.iter().copied().collect();
            for y in cur {
                let s = plus(x, y);
                if !out.contains(&s) {
                    queue.push_back(s);
                }
            }
        }
        out
    };
    let trivial: BTreeSet<u64> = [0].into_iter().collect();
    let mut seen: BTreeSet<BTreeSet<u64>> = BTreeSet::new();
    let mut queue = VecDeque::from(vec![trivial.clone()]);
    seen.insert(trivial);
    while let Some(h) = queue.pop_front() {
        for q in 0..order {
            if h.contains(&q) {
                continue;
            }
            let bigger = closure(&h, q);
            if seen.insert(bigger.clone()) {
                queue.push_back(bigger);
            }
        }
    }
    let lift = |c: u64| -> IntVec {
        let t = decode(c);
        let mut y = vec![BigInt::zero(); r];
        for (j, tj) in t.iter().enumerate() {
            for i in 0..r {
                y[i] += BigInt::from(*tj) * &uinv[j][i];
            }
        }
        upper.point(&y)
    };
    let mut out: Vec<IntegerLattice> = seen
        .iter()
        .map(|h| {
            let mut gens: Vec<IntVec> = lower.basis().to_vec();
            gens.extend(h.iter().filter(|&&c| c != 0).map(|&c| lift(c)));
            IntegerLattice::from_generators(dim, &gens)
        })
        .collect();
    out.sort_by_key(|l| l.index_in(upper).expect("finite index"));
    Ok(out)
}

fn root_lattice(g: &GroupDatum) -> IntegerLattice {
    IntegerLattice::from_generators(g.dim(), g.simple_roots())
}

/// Lattice families for a simple group not of type A: every `M` with
/// `2Λ_R ⊆ M ⊆ 2Λ` (case 1); for `B_n` every `M` between
/// `⟨S^+, 2α_n⟩` and `⟨ω_1,…,ω_{n-1}, 2ω_n⟩` (case 2); `Λ` for `C_n`
/// (case 3).
pub fn other_type_lattices(t: CartanType) -> Result<Vec<LatticeFamilyMember>> {
    if t.ty == DynkinType::A {
        return Err(Error::InvalidParams("type A is handled by the SL enumerator".into()));
    }
    let g = build_group(&[t], 0)?;
    let n = t.rank;
    let mut out = Vec::new();
    let two_r = root_lattice(&g).scaled(2);
    let two_l = IntegerLattice::full(n).scaled(2);
    for (i, l) in intermediate_lattices(&two_r, &two_l)?.into_iter().enumerate() {
        out.push(LatticeFamilyMember {
            case: 1,
            label: format!("index {} in 2Λ (#{})", l.index_in(&two_l).expect("finite"), i + 1),
            lattice: l,
            expected_sigma_n: doubled_simple_roots(&g),
        });
    }
    if t.ty == DynkinType::B || (t.ty == DynkinType::C && n == 2) {
        if t.ty == DynkinType::C {
            // B2 and C2 share a diagram with the nodes swapped
            let b2 = build_group(&[CartanType::new(DynkinType::B, 2)?], 0)?;
            out.extend(b_family(&b2)?.into_iter().map(swap_rank_two));
        } else {
            out.extend(b_family(&g)?);
        }
    }
    if t.ty == DynkinType::C || (t.ty == DynkinType::B && n == 2) {
        out.push(LatticeFamilyMember {
            case: 3,
            label: "Λ".into(),
            lattice: IntegerLattice::full(n),
            expected_sigma_n: s_plus(&g),
        });
    }
    Ok(out)
}

fn b_family(g: &GroupDatum) -> Result<Vec<LatticeFamilyMember>> {
    let n = g.rank();
    let mut out = Vec::new();
    {
        let mut lo: Vec<IntVec> = s_plus(&g);
        lo.push(two(g.simple_root(n - 1)));
        let mut hi: Vec<IntVec> = (1..n).map(|i| omega(n, i)).collect();
        hi.push(two(&omega(n, n)));
        let lower = IntegerLattice::from_generators(n, &lo);
        let upper = IntegerLattice::from_generators(n, &hi);
        let mut sn = s_plus(&g);
        sn.push(two(g.simple_root(n - 1)));
        sn.sort();
        for (i, l) in intermediate_lattices(&lower, &upper)?.into_iter().enumerate() {
            out.push(LatticeFamilyMember {
                case: 2,
                label: format!("index {} in ⟨ω_1,…,2ω_n⟩ (#{})", l.index_in(&upper).expect("finite"), i + 1),
                lattice: l,
                expected_sigma_n: sn.clone(),
            });
        }
    }
    Ok(out)
}

fn swap_rank_two(m: LatticeFamilyMember) -> LatticeFamilyMember {
    let sw = |v: &IntVec| vec![v[1].clone(), v[0].clone()];
    let gens: Vec<IntVec> = m.lattice.basis().iter().map(sw).collect();
    let mut sn: Vec<IntVec> = m.expected_sigma_n.iter().map(sw).collect();
    sn.sort();
    LatticeFamilyMember {
        case: m.case,
        label: m.label,
        lattice: IntegerLattice::from_generators(2, &gens),
        expected_sigma_n: sn,
    }
}

/// Lattices outside the families that must not give smooth monoids:
/// `Λ`, `Λ_R`, and `2Λ_R + Zα_i`, `2Λ_R + Zω_i`.
pub fn other_type_negatives(t: CartanType) -> Result<Vec<(String, IntegerLattice)>> {
    let g = build_group(&[t], 0)?;
    let n = t.rank;
    let family: Vec<IntegerLattice> = other_type_lattices(t)?.into_iter().map(|m| m.lattice).collect();
    let two_r = root_lattice(&g).scaled(2);
    let mut cands: Vec<(String, IntegerLattice)> =
        vec![("Λ".into(), IntegerLattice::full(n)), ("Λ_R".into(), root_lattice(&g))];
    for i in 1..=n {
        cands.push((format!("2Λ_R + Zα_{i}"), two_r.sum(&IntegerLattice::from_generators(n, &[g.simple_root(i - 1).clone()]))));
        cands.push((format!("2Λ_R + Zω_{i}"), two_r.sum(&IntegerLattice::from_generators(n, &[omega(n, i)]))));
    }
    let mut out: Vec<(String, IntegerLattice)> = Vec::new();
    for (name, l) in cands {
        if !family.contains(&l) && !out.iter().any(|(_, m)| *m == l) {
            out.push((name, l));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct OtherTypesReport {
    pub cartan_type: CartanType,
    pub family: Vec<Instance>,
    /// `(name, outcome)` for each out-of-family lattice.
    pub negatives: Vec<(String, Outcome)>,
}

impl OtherTypesReport {
    pub fn all_confirmed(&self) -> bool {
        self.family.iter().all(Instance::confirmed) && self.negatives.iter().all(|(_, o)| *o == Outcome::NotSmooth)
    }
}

/// Runs the criterion on every family lattice and on the selected negatives.
pub fn enumerate_other_types(t: CartanType) -> Result<OtherTypesReport> {
    let g = build_group(&[t], 0)?;
    let family = run_family(&g, &other_type_lattices(t)?)?;
    let mut negatives = Vec::new();
    for (name, l) in other_type_negatives(t)? {
        let m = WeightMonoid::g_saturated(&g, &l)?;
        negatives.push((name, check_gsat_smooth(&m)?.outcome));
    }
    Ok(OtherTypesReport { cartan_type: t, family, negatives })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{determinant, ivec};

    #[test]
    fn sl_counts() {
        for n in 1..=7usize {
            let ls = sl_lattices(n, 3).unwrap();
            assert_eq!(ls.iter().filter(|m| m.case == 1).count(), tau(n as u64 + 1));
            if n % 2 == 1 {
                assert_eq!(ls.iter().filter(|m| m.case == 3).count() as u64, sigma((n as u64 + 1) / 2));
            }
        }
    }

    #[test]
    fn sl_rank_one() {
        let ls = sl_lattices(1, 1).unwrap();
        let bases: Vec<Vec<IntVec>> = ls.iter().map(|m| m.lattice.basis().to_vec()).collect();
        assert_eq!(bases, vec![vec![ivec(&[2])], vec![ivec(&[4])], vec![ivec(&[1])]]);
        assert!(enumerate_sl_fullrank(1, 1).unwrap().iter().all(Instance::confirmed));
    }

    #[test]
    fn sl_a2() {
        let inst = enumerate_sl_fullrank(2, 4).unwrap();
        assert!(inst.iter().all(Instance::confirmed), "{inst:#?}");
    }

    #[test]
    fn intermediate_counts() {
        let l = IntegerLattice::full(2);
        // subgroups of Z/2 × Z/2
        assert_eq!(intermediate_lattices(&l.scaled(2), &l).unwrap().len(), 5);
        // subgroups of Z/4
        let z = IntegerLattice::full(1);
        assert_eq!(intermediate_lattices(&z.scaled(4), &z).unwrap().len(), 3);
    }

    #[test]
    fn relation_matrices() {
        let c = sl_odd_relation_matrix(5).unwrap();
        assert_eq!(c.row(0), ivec(&[-1, 1, 1, -1, 0]));
        assert_eq!(c.row(3), ivec(&[0, 0, 0, 3, 0]));
        assert_eq!(determinant(&sl_even_basis_matrix(4).unwrap()).abs(), BigInt::one());
    }

    #[test]
    fn g2_family() {
        let r = enumerate_other_types(CartanType::new(DynkinType::G, 2).unwrap()).unwrap();
        assert_eq!(r.family.len(), 1);
        assert!(r.all_confirmed(), "{r:#?}");
    }
}
