//! Spherically closed spherical roots and the sets `Σ^N(Γ)` and `S_Γ`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{dot, strict_positive_combination_meets, IntVec};
use crate::monoid::WeightMonoid;
use crate::rootsys::{CartanType, DynkinType, GroupDatum, Weight};

/// Which row of the table of spherically closed spherical roots produced `σ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Pattern {
    A1Simple,
    A1Double,
    A1xA1Sum,
    AString,
    A3Mid,
    BString,
    BDoubled,
    B3Special,
    CString,
    DString,
    F4,
    G2Long,
    G2Sum,
}

impl Pattern {
    pub fn name(self) -> &'static str {
        match self {
            Pattern::A1Simple => "A1-simple",
            Pattern::A1Double => "A1-double",
            Pattern::A1xA1Sum => "A1xA1-sum",
            Pattern::AString => "A-string",
            Pattern::A3Mid => "A3-mid",
            Pattern::BString => "B-string",
            Pattern::BDoubled => "B-doubled",
            Pattern::B3Special => "B3-special",
            Pattern::CString => "C-string",
            Pattern::DString => "D-string",
            Pattern::F4 => "F4",
            Pattern::G2Long => "G2-long",
            Pattern::G2Sum => "G2-sum",
        }
    }

    /// Row type and coefficient vector in Bourbaki positions, for a support
    /// of rank `k`. `None` when the row does not exist at that rank.
    fn row(self, k: usize) -> Option<(DynkinType, Vec<i64>)> {
        use DynkinType::*;
        let r = match self {
            Pattern::A1Simple if k == 1 => (A, vec![1]),
            Pattern::A1Double if k == 1 => (A, vec![2]),
            Pattern::AString if k >= 2 => (A, vec![1; k]),
            Pattern::A3Mid if k == 3 => (A, vec![1, 2, 1]),
            Pattern::BString if k >= 2 => (B, vec![1; k]),
            Pattern::BDoubled if k >= 2 => (B, vec![2; k]),
            Pattern::B3Special if k == 3 => (B, vec![1, 2, 3]),
            Pattern::CString if k >= 3 => {
                let mut c = vec![2; k];
                c[0] = 1;
                c[k - 1] = 1;
                (C, c)
            }
            Pattern::DString if k >= 4 => {
                let mut c = vec![2; k];
                c[k - 2] = 1;
                c[k - 1] = 1;
                (D, c)
            }
            Pattern::F4 if k == 4 => (F, vec![1, 2, 3, 2]),
            Pattern::G2Long if k == 2 => (G, vec![4, 2]),
            Pattern::G2Sum if k == 2 => (G, vec![1, 1]),
            _ => return None,
        };
        Some(r)
    }

    const CONNECTED: [Pattern; 12] = [
        Pattern::A1Simple,
        Pattern::A1Double,
        Pattern::AString,
        Pattern::A3Mid,
        Pattern::BString,
        Pattern::BDoubled,
        Pattern::B3Special,
        Pattern::CString,
        Pattern::DString,
        Pattern::F4,
        Pattern::G2Long,
        Pattern::G2Sum,
    ];
}

/// An element of `Σ^sc(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphericalRoot {
    /// `σ` in weight coordinates.
    pub element: Weight,
    /// Coefficients of `σ` in the simple roots.
    pub coefficients: IntVec,
    pub support: Vec<usize>,
    pub pattern: Pattern,
    /// Global simple-root index at each Bourbaki position of the support.
    pub labeling: Vec<usize>,
}

impl SphericalRoot {
    /// `Some(j)` when `σ = α_j`.
    pub fn as_simple(&self) -> Option<usize> {
        (self.pattern == Pattern::A1Simple).then(|| self.support[0])
    }

    /// `Some(j)` when `σ = 2α_j`.
    pub fn as_double(&self) -> Option<usize> {
        (self.pattern == Pattern::A1Double).then(|| self.support[0])
    }

    /// `Some((i, j))` when `σ = α_i + α_j` with `α_i ⟂ α_j`.
    pub fn as_orthogonal_sum(&self) -> Option<(usize, usize)> {
        (self.pattern == Pattern::A1xA1Sum).then(|| (self.support[0], self.support[1]))
    }

    /// Human-readable form like `α1+2α2+α3` (1-based indices).
    pub fn display(&self) -> String {
        format_root_combination(&self.coefficients)
    }
}

impl fmt::Display for SphericalRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

/// `Σ c_j α_j` written out, 1-based.
pub fn format_root_combination(coeffs: &[BigInt]) -> String {
    let mut s = String::new();
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !s.is_empty() || c.is_negative() {
            s.push(if c.is_negative() { '-' } else { '+' });
        }
        let a = c.abs();
        if !a.is_one() {
            s.push_str(&a.to_string());
        }
        s.push_str(&format!("α{}", j + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn connected_subsets(g: &GroupDatum, nodes: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let n = nodes.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let sub: Vec<usize> = idx.iter().map(|&i| nodes[i]).collect();
        if is_connected(g, &sub) {
            out.push(sub);
        }
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn is_connected(g: &GroupDatum, nodes: &[usize]) -> bool {
    if nodes.is_empty() {
        return false;
    }
    let mut seen = vec![nodes[0]];
    let mut k = 0;
    while k < seen.len() {
        let i = seen[k];
        for &j in nodes {
            if !seen.contains(&j) && g.cartan()[i][j] != 0 {
                seen.push(j);
            }
        }
        k += 1;
    }
    seen.len() == nodes.len()
}

/// `Σ^sc(G)`: every `σ` listed in the table, over every embedding of each
/// row's diagram into the Dynkin diagram of `G`.
pub fn sigma_sc(g: &GroupDatum) -> Vec<SphericalRoot> {
    let mut found: BTreeMap<IntVec, SphericalRoot> = BTreeMap::new();
    let r = g.rank();
    let mut push = |coeffs: IntVec, pattern: Pattern, labeling: Vec<usize>| {
        found.entry(coeffs.clone()).or_insert_with(|| {
            let mut support: Vec<usize> = labeling.clone();
            support.sort();
            SphericalRoot { element: g.root_combination(&coeffs), coefficients: coeffs, support, pattern, labeling }
        });
    };
    for comp in g.components() {
        let mut nodes = comp.nodes.clone();
        nodes.sort();
        for k in 1..=nodes.len() {
            for sub in connected_subsets(g, &nodes, k) {
                for p in Pattern::CONNECTED {
                    let Some((ty, row)) = p.row(k) else { continue };
                    let Ok(t) = CartanType::new(ty, k) else { continue };
                    for lab in g.labelings(&sub, t) {
                        let mut c = vec![BigInt::zero(); r];
                        for (pos, &node) in lab.iter().enumerate() {
                            c[node] = BigInt::from(row[pos]);
                        }
                        push(c, p, lab);
                    }
                }
            }
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            if g.orthogonal(i, j) {
                let mut c = vec![BigInt::zero(); r];
                c[i] = BigInt::one();
                c[j] = BigInt::one();
                push(c, Pattern::A1xA1Sum, vec![i, j]);
            }
        }
    }
    found.into_values().collect()
}

/// Compatibility of `σ` with `S^p`.
pub fn compatible_with_sp(g: &GroupDatum, sigma: &SphericalRoot, sp: &[usize]) -> bool {
    let lab = &sigma.labeling;
    let k = lab.len();
    match sigma.pattern {
        Pattern::BString => lab[1..k - 1].iter().all(|a| sp.contains(a)) && !sp.contains(&lab[k - 1]),
        Pattern::CString => lab[2..].iter().all(|a| sp.contains(a)),
        _ => sigma
            .support
            .iter()
            .filter(|&&a| g.coroot_pairing(a, &sigma.element).is_zero())
            .all(|a| sp.contains(a)),
    }
}

fn coroot_even_on(m: &WeightMonoid, j: usize, gens: &[Weight]) -> bool {
    let two = BigInt::from(2);
    gens.iter().all(|x| (m.group().coroot_pairing(j, x) % &two).is_zero())
}

fn coroots_agree_on(m: &WeightMonoid, i: usize, j: usize, gens: &[Weight]) -> bool {
    gens.iter().all(|x| m.group().coroot_pairing(i, x) == m.group().coroot_pairing(j, x))
}

/// `Σ^N(Γ)` for a G-saturated `Γ`.
pub fn sigma_n_gsat(m: &WeightMonoid) -> Result<Vec<SphericalRoot>> {
    if !m.is_g_saturated()? {
        return Err(Error::NotGSaturated);
    }
    let g = m.group();
    let sp = m.s_p();
    let basis = m.lattice().basis().to_vec();
    Ok(sigma_sc(g)
        .into_iter()
        .filter(|s| {
            s.as_simple().is_none()
                && m.lattice().contains(&s.element)
                && compatible_with_sp(g, s, &sp)
                && s.as_double().map_or(true, |j| coroot_even_on(m, j, &basis))
                && s.as_orthogonal_sum().map_or(true, |(i, j)| coroots_agree_on(m, i, j, &basis))
        })
        .collect())
}

/// Why a candidate `σ ∈ Σ^sc(G)` fails the conditions for a normal `Γ`.
/// `None` means `σ ∈ Σ^N(Γ)`.
pub fn general_failure(m: &WeightMonoid, s: &SphericalRoot, e: &[IntVec], sp: &[usize]) -> Option<&'static str> {
    let g = m.group();
    let Some(sc) = m.coords(&s.element) else { return Some("(1) not in ZΓ") };
    if !compatible_with_sp(g, s, sp) {
        return Some("(2) not compatible with S^p");
    }
    match s.as_simple() {
        None => {
            for d in e {
                if dot(d, &sc).is_positive()
                    && !(0..g.rank()).any(|b| !sp.contains(&b) && m.is_positive_multiple_of_coroot(d, b))
                {
                    return Some("(3) extremal functional not a coroot multiple");
                }
            }
        }
        Some(j) => {
            let a = m.a_of(j).expect("σ ∈ ZΓ");
            if a.len() != 2 {
                return Some("(4a) a(σ) does not have two elements");
            }
            let gens: Vec<IntVec> = m.generators().iter().map(|x| m.coords(x).expect("generator")).collect();
            if a.iter().any(|d| gens.iter().any(|x| dot(d, x).is_negative())) {
                return Some("(4b) element of a(σ) negative on Γ");
            }
            if e.iter().any(|d| dot(d, &sc) > BigInt::one()) {
                return Some("(4c) extremal functional exceeds 1 on σ");
            }
        }
    }
    if let Some(j) = s.as_double() {
        if !coroot_even_on(m, j, m.generators()) {
            return Some("(5) coroot not even on Γ");
        }
    }
    if let Some((i, j)) = s.as_orthogonal_sum() {
        if !coroots_agree_on(m, i, j, m.generators()) {
            return Some("(6) coroots differ on Γ");
        }
    }
    None
}

/// `Σ^N(Γ)` for a normal `Γ`, from the dual-cone conditions.
pub fn sigma_n_general(m: &WeightMonoid) -> Result<Vec<SphericalRoot>> {
    m.require_normal()?;
    let e = m.e_of();
    let sp = m.s_p();
    Ok(sigma_sc(m.group()).into_iter().filter(|s| general_failure(m, s, &e, &sp).is_none()).collect())
}

/// Whether the relative interior of the cone on `{α∨|_{ZΓ} : α ∈ F}` meets
/// `{ν : ⟨ν, σ⟩ ≤ 0 for σ ∈ Σ^N}`.
pub fn localization_feasible(m: &WeightMonoid, sigma_n: &[SphericalRoot], f: &[usize]) -> bool {
    let vectors: Vec<IntVec> = f.iter().map(|&j| m.coroot_restriction(j)).collect();
    let constraints: Vec<IntVec> = sigma_n.iter().filter_map(|s| m.coords(&s.element)).collect();
    strict_positive_combination_meets(&vectors, &constraints)
}

/// Largest number of simple roots for which `s_gamma` runs its subset search.
pub const S_GAMMA_CAP: usize = 12;

/// `S_Γ`: the union of all feasible subsets, asserted feasible itself.
/// Only defined for G-saturated monoids; anything else is refused.
pub fn s_gamma(m: &WeightMonoid, sigma_n: &[SphericalRoot]) -> Result<Vec<usize>> {
    if !m.is_g_saturated()? {
        return Err(Error::NotGSaturated);
    }
    let r = m.group().rank();
    if r > S_GAMMA_CAP {
        return Err(Error::TooManySimpleRoots(r));
    }
    let mut union = 0u32;
    for mask in 0u32..(1 << r) {
        if mask & !union == 0 {
            continue;
        }
        let f: Vec<usize> = (0..r).filter(|&j| mask >> j & 1 == 1).collect();
        if localization_feasible(m, sigma_n, &f) {
            union |= mask;
        }
    }
    let out: Vec<usize> = (0..r).filter(|&j| union >> j & 1 == 1).collect();
    if !localization_feasible(m, sigma_n, &out) {
        return Err(Error::UniquenessViolated);
    }
    Ok(out)
}

/// The elements of a set of spherical roots, sorted.
pub fn elements(s: &[SphericalRoot]) -> Vec<Weight> {
    let mut v: Vec<Weight> = s.iter().map(|x| x.element.clone()).collect();
    v.sort();
    v
}

/// `{2α : α ∈ S}`.
pub fn doubled_simple_roots(g: &GroupDatum) -> Vec<Weight> {
    let mut v: Vec<Weight> =
        (0..g.rank()).map(|j| crate::exactla::scale(&BigInt::from(2), g.simple_root(j))).collect();
    v.sort();
    v
}

/// `S^+ = {α + β : α, β ∈ S distinct, not orthogonal}`.
pub fn s_plus(g: &GroupDatum) -> Vec<Weight> {
    let mut v = Vec::new();
    for i in 0..g.rank() {
        for j in i + 1..g.rank() {
            if !g.orthogonal(i, j) {
                v.push(crate::exactla::add(g.simple_root(i), g.simple_root(j)));
            }
        }
    }
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{ivec, IntegerLattice};
    use crate::rootsys::group;

    fn coeff_set(g: &GroupDatum) -> Vec<IntVec> {
        let mut v: Vec<IntVec> = sigma_sc(g).into_iter().map(|s| s.coefficients).collect();
        v.sort();
        v
    }

    #[test]
    fn g2_roots() {
        let g = group("G2", 0).unwrap();
        let mut want: Vec<IntVec> =
            [[1, 0], [2, 0], [0, 1], [0, 2], [4, 2], [1, 1]].iter().map(|x| ivec(x)).collect();
        want.sort();
        assert_eq!(coeff_set(&g), want);
    }

    #[test]
    fn b2_equals_c2() {
        let b = group("B2", 0).unwrap();
        let c = group("C2", 0).unwrap();
        assert_eq!(coeff_set(&b).len(), 6);
        // swap the labels to compare
        let mut cs: Vec<IntVec> = coeff_set(&c).into_iter().map(|v| vec![v[1].clone(), v[0].clone()]).collect();
        cs.sort();
        assert_eq!(coeff_set(&b), cs);
    }

    #[test]
    fn compatibility_b3() {
        let g = group("B3", 0).unwrap();
        let s = sigma_sc(&g).into_iter().find(|s| s.coefficients == ivec(&[1, 1, 1])).unwrap();
        assert_eq!(s.pattern, Pattern::BString);
        assert!(compatible_with_sp(&g, &s, &[1]));
        assert!(!compatible_with_sp(&g, &s, &[]));
    }

    #[test]
    fn a1_saturated() {
        let g = group("A1", 0).unwrap();
        let m = WeightMonoid::new(&g, &[ivec(&[2])]).unwrap();
        assert_eq!(elements(&sigma_n_gsat(&m).unwrap()), vec![ivec(&[4])]);
        let m1 = WeightMonoid::new(&g, &[ivec(&[1])]).unwrap();
        assert!(sigma_n_gsat(&m1).unwrap().is_empty());
    }

    #[test]
    fn a2_twice_lattice() {
        let g = group("A2", 0).unwrap();
        let m = WeightMonoid::g_saturated(&g, &IntegerLattice::full(2).scaled(2)).unwrap();
        let sn = sigma_n_gsat(&m).unwrap();
        assert_eq!(elements(&sn), doubled_simple_roots(&g));
        assert_eq!(elements(&sigma_n_general(&m).unwrap()), doubled_simple_roots(&g));
        assert!(s_gamma(&m, &sn).unwrap().is_empty());
    }

    #[test]
    fn c2_model() {
        let g = group("C2", 0).unwrap();
        let m = WeightMonoid::g_saturated(&g, &IntegerLattice::full(2)).unwrap();
        let sn = sigma_n_gsat(&m).unwrap();
        assert_eq!(elements(&sn), s_plus(&g));
        assert_eq!(s_gamma(&m, &sn).unwrap(), vec![0]);
    }

    #[test]
    fn sl2c_general() {
        let g = group("A1", 1).unwrap();
        let m = WeightMonoid::new(&g, &[ivec(&[2, 0]), ivec(&[1, 1])]).unwrap();
        assert_eq!(elements(&sigma_n_general(&m).unwrap()), vec![ivec(&[2, 0])]);
        let m = WeightMonoid::new(&g, &[ivec(&[2, 1]), ivec(&[0, 2])]).unwrap();
        assert_eq!(elements(&sigma_n_general(&m).unwrap()), vec![ivec(&[4, 0])]);
    }

    #[test]
    fn formatting() {
        assert_eq!(format_root_combination(&ivec(&[1, 2, 0, 1])), "α1+2α2+α4");
    }
}
