//! Admissible triples `(S, S^p, Σ^N)`: matching against the primitive list
//! up to diagram automorphisms.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactla::IntVec;
use crate::rootsys::{CartanType, DynkinType, GroupDatum};

/// A triple on (a subset of) the simple roots of an ambient group.
/// `sigma` holds coefficient vectors over all simple roots of that group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleTriple {
    pub s: Vec<usize>,
    pub sp: Vec<usize>,
    pub sigma: Vec<IntVec>,
}

impl AdmissibleTriple {
    pub fn new(s: &[usize], sp: &[usize], sigma: &[IntVec]) -> Self {
        let mut s = s.to_vec();
        s.sort();
        s.dedup();
        let mut sp = sp.to_vec();
        sp.sort();
        sp.dedup();
        let mut sigma = sigma.to_vec();
        sigma.sort();
        sigma.dedup();
        AdmissibleTriple { s, sp, sigma }
    }
}

/// One entry of the primitive list, in Bourbaki positions of its shape
/// (positions of a two-component shape are concatenated).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveTriple {
    /// Item number in the primitive list (1 to 6).
    pub item: u8,
    pub shape: Vec<CartanType>,
    pub sp: Vec<usize>,
    pub sigma: Vec<Vec<i64>>,
}

impl PrimitiveTriple {
    pub fn describe(&self) -> String {
        let shape: Vec<String> = self.shape.iter().map(|t| t.to_string()).collect();
        format!("item {} on {}", self.item, shape.join("x"))
    }
}

/// The primitive triples on a given shape: one irreducible type, or two
/// type-A components for the product item.
pub fn primitive_triples(shape: &[CartanType]) -> Vec<PrimitiveTriple> {
    let mut out = Vec::new();
    match shape {
        [t] => {
            let n = t.rank;
            out.push(PrimitiveTriple { item: 1, shape: vec![*t], sp: (0..n).collect(), sigma: vec![] });
            if t.ty == DynkinType::A {
                out.push(PrimitiveTriple { item: 2, shape: vec![*t], sp: (1..n).collect(), sigma: vec![] });
                if n >= 4 && n % 2 == 0 {
                    let sp = (0..n).step_by(2).collect();
                    let sigma = (0..(n - 2) / 2)
                        .map(|k| {
                            let mut c = vec![0; n];
                            c[2 * k] = 1;
                            c[2 * k + 1] = 2;
                            c[2 * k + 2] = 1;
                            c
                        })
                        .collect();
                    out.push(PrimitiveTriple { item: 3, shape: vec![*t], sp, sigma });
                }
            }
            if t.ty == DynkinType::C {
                out.push(PrimitiveTriple { item: 5, shape: vec![*t], sp: (1..n).collect(), sigma: vec![] });
            }
            if t.ty == DynkinType::D && n == 5 {
                out.push(PrimitiveTriple { item: 6, shape: vec![*t], sp: vec![1, 2, 3], sigma: vec![vec![0, 1, 2, 1, 2]] });
            }
        }
        [a, b] if a.ty == DynkinType::A && b.ty == DynkinType::A && a.rank > b.rank && b.rank >= 2 => {
            let (n, k) = (a.rank, b.rank);
            let sp = (k + 1..n).collect();
            let sigma = (0..k)
                .map(|i| {
                    let mut c = vec![0; n + k];
                    c[i] = 1;
                    c[n + i] = 1;
                    c
                })
                .collect();
            out.push(PrimitiveTriple { item: 4, shape: vec![*a, *b], sp, sigma });
        }
        _ => {}
    }
    out
}

/// One block of a successful match: the primitive, the ambient nodes it
/// covers, and the labeling (Bourbaki position to ambient index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatch {
    pub primitive: PrimitiveTriple,
    pub labeling: Vec<usize>,
}

fn components_of(g: &GroupDatum, s: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &a in s {
        if seen.contains(&a) {
            continue;
        }
        let mut comp = vec![a];
        seen.insert(a);
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in s {
                if !seen.contains(&j) && g.cartan()[i][j] != 0 {
                    seen.insert(j);
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort();
        out.push(comp);
    }
    out
}

fn support(c: &[BigInt]) -> Vec<usize> {
    (0..c.len()).filter(|&j| !c[j].is_zero()).collect()
}

/// Images of a primitive under a labeling.
fn image(p: &PrimitiveTriple, lab: &[usize], r: usize) -> (Vec<usize>, Vec<IntVec>) {
    let mut sp: Vec<usize> = p.sp.iter().map(|&i| lab[i]).collect();
    sp.sort();
    let mut sigma: Vec<IntVec> = p
        .sigma
        .iter()
        .map(|c| {
            let mut v = vec![BigInt::zero(); r];
            for (pos, &x) in c.iter().enumerate() {
                v[lab[pos]] = BigInt::from(x);
            }
            v
        })
        .collect();
    sigma.sort();
    (sp, sigma)
}

/// Types under which the connected node set can be labeled.
fn shapes_of(g: &GroupDatum, nodes: &[usize]) -> Vec<(CartanType, Vec<Vec<usize>>)> {
    DynkinType::ALL
        .into_iter()
        .filter_map(|ty| CartanType::new(ty, nodes.len()).ok())
        .map(|t| (t, g.labelings(nodes, t)))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

fn match_block(g: &GroupDatum, comps: &[&Vec<usize>], t: &AdmissibleTriple) -> Option<BlockMatch> {
    let r = g.rank();
    let nodes: Vec<usize> = comps.iter().flat_map(|c| c.iter().copied()).collect();
    let want_sp: Vec<usize> = t.sp.iter().copied().filter(|a| nodes.contains(a)).collect();
    let mut want_sigma: Vec<IntVec> =
        t.sigma.iter().filter(|c| support(c).iter().all(|a| nodes.contains(a))).cloned().collect();
    want_sigma.sort();
    let try_all = |shape: Vec<CartanType>, labs: Vec<Vec<usize>>| -> Option<BlockMatch> {
        for p in primitive_triples(&shape) {
            for lab in &labs {
                let (sp, sigma) = image(&p, lab, r);
                if sp == want_sp && sigma == want_sigma {
                    return Some(BlockMatch { primitive: p, labeling: lab.clone() });
                }
            }
        }
        None
    };
    match comps {
        [c] => {
            for (t, labs) in shapes_of(g, c) {
                if let Some(m) = try_all(vec![t], labs) {
                    return Some(m);
                }
            }
            None
        }
        [c1, c2] => {
            let (big, small) = if c1.len() > c2.len() { (c1, c2) } else { (c2, c1) };
            let ta = CartanType::new(DynkinType::A, big.len()).ok()?;
            let tb = CartanType::new(DynkinType::A, small.len()).ok()?;
            let la = g.labelings(big, ta);
            let lb = g.labelings(small, tb);
            let mut labs = Vec::new();
            for x in &la {
                for y in &lb {
                    let mut l = x.clone();
                    l.extend(y.iter().copied());
                    labs.push(l);
                }
            }
            try_all(vec![ta, tb], labs)
        }
        _ => None,
    }
}

/// Decides admissibility; on success returns the block decomposition.
///
/// ```
/// use weightmon::admiss::{is_admissible, AdmissibleTriple};
/// use weightmon::rootsys::group;
/// let g = group("G2", 0).unwrap();
/// assert!(is_admissible(&g, &AdmissibleTriple::new(&[0, 1], &[], &[])).is_none());
/// assert!(is_admissible(&g, &AdmissibleTriple::new(&[], &[], &[])).is_some());
/// ```
pub fn is_admissible(g: &GroupDatum, t: &AdmissibleTriple) -> Option<Vec<BlockMatch>> {
    if t.s.iter().any(|&a| a >= g.rank()) || !t.sp.iter().all(|a| t.s.contains(a)) {
        return None;
    }
    for c in &t.sigma {
        if c.len() != g.rank() || c.iter().any(|x| x < &BigInt::zero()) {
            return None;
        }
        if !support(c).iter().all(|a| t.s.contains(a)) {
            return None;
        }
    }
    let comps = components_of(g, &t.s);
    // every σ must sit inside one block, so it touches at most two components
    let comp_of = |a: usize| comps.iter().position(|c| c.contains(&a)).expect("node of S");
    for c in &t.sigma {
        let touched: BTreeSet<usize> = support(c).into_iter().map(comp_of).collect();
        if touched.len() > 2 || touched.is_empty() {
            return None;
        }
    }
    let mut used = vec![false; comps.len()];
    let mut out = Vec::new();
    if assign(g, t, &comps, &mut used, &mut out) {
        Some(out)
    } else {
        None
    }
}

fn assign(
    g: &GroupDatum,
    t: &AdmissibleTriple,
    comps: &[Vec<usize>],
    used: &mut Vec<bool>,
    out: &mut Vec<BlockMatch>,
) -> bool {
    let Some(i) = used.iter().position(|u| !u) else {
        // every σ must have been claimed by exactly one block
        let claimed: usize = out.iter().map(|b| b.primitive.sigma.len()).sum();
        return claimed == t.sigma.len();
    };
    used[i] = true;
    if let Some(m) = match_block(g, &[&comps[i]], t) {
        out.push(m);
        if assign(g, t, comps, used, out) {
            return true;
        }
        out.pop();
    }
    for j in i + 1..comps.len() {
        if used[j] {
            continue;
        }
        if let Some(m) = match_block(g, &[&comps[i], &comps[j]], t) {
            used[j] = true;
            out.push(m);
            if assign(g, t, comps, used, out) {
                return true;
            }
            out.pop();
            used[j] = false;
        }
    }
    used[i] = false;
    false
}
