//! Polyhedral cones via the double description method.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::normal_form::{hermite_normal_form, integer_kernel, solve_rational};
use super::{dot, dot_rat, neg, primitive, primitive_of_rational, IntMatrix, IntVec};

/// A rational polyhedral cone in `Q^n`, kept in both descriptions.
///
/// * `rays`: primitive extremal rays of the pointed part (chosen in the
///   orthogonal complement of the lineality space);
/// * `lineality`: saturated integer basis of the lineality space;
/// * `facets`: primitive inequalities `f · x ≥ 0`, irredundant, chosen in the
///   linear span of the cone;
/// * `equations`: saturated integer basis of the orthogonal complement of the
///   span, `e · x = 0`.
#[derive(Clone, Debug)]
pub struct RationalCone {
    dim: usize,
    rays: Vec<IntVec>,
    lineality: Vec<IntVec>,
    facets: Vec<IntVec>,
    equations: Vec<IntVec>,
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64).max(1)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn contains_all(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

impl Clone for Bits {
    fn clone(&self) -> Self {
        Bits(self.0.clone())
    }
}

/// Extremal rays of the pointed cone `{z : b z ≥ 0}`, where `b` has full
/// column rank `p`.
fn double_description(b: &[IntVec], p: usize) -> Vec<IntVec> {
    let m = b.len();
    if p == 0 {
        return Vec::new();
    }
    // initial simplicial cone from p independent rows
    let mut init = Vec::new();
    for (i, row) in b.iter().enumerate() {
        let mut trial: Vec<IntVec> = init.iter().map(|&k: &usize| b[k].clone()).collect();
        trial.push(row.clone());
        if hermite_normal_form(&IntMatrix::from_rows(p, &trial)).rank == trial.len() {
            init.push(i);
            if init.len() == p {
                break;
            }
        }
    }
    assert_eq!(init.len(), p, "constraint matrix must have full column rank");
    let base = IntMatrix::from_rows(p, &init.iter().map(|&k| b[k].clone()).collect::<Vec<_>>());
    let mut rays: Vec<(IntVec, Bits)> = Vec::new();
    for j in 0..p {
        let e: Vec<BigRational> =
            (0..p).map(|i| BigRational::from_integer(BigInt::from((i == j) as i64))).collect();
        let sol = solve_rational(&base, &e).expect("invertible");
        let v = primitive_of_rational(&sol);
        let mut z = Bits::new(m);
        for (t, &k) in init.iter().enumerate() {
            if t != j {
                z.set(k);
            }
        }
        rays.push((v, z));
    }
    let mut processed: Vec<bool> = vec![false; m];
    for &k in &init {
        processed[k] = true;
    }
    for i in 0..m {
        if processed[i] {
            continue;
        }
        processed[i] = true;
        let vals: Vec<BigInt> = rays.iter().map(|(v, _)| dot(&b[i], v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let negs: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if negs.is_empty() {
            for (k, (_, z)) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    z.set(i);
                }
            }
            continue;
        }
        let mut fresh = Vec::new();
        for &a in &pos {
            for &c in &negs {
                let common = rays[a].1.and(&rays[c].1);
                if common.count() + 2 < p {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|r| r == a || r == c || !rays[r].1.contains_all(&common));
                if !adjacent {
                    continue;
                }
                // vals[a] > 0 > vals[c]
                let v: IntVec = rays[c]
                    .0
                    .iter()
                    .zip(&rays[a].0)
                    .map(|(x, y)| &vals[a] * x - &vals[c] * y)
                    .collect();
                let mut z = common;
                z.set(i);
                fresh.push((primitive(&v), z));
            }
        }
        let mut next = Vec::new();
        for (k, (v, mut z)) in rays.into_iter().enumerate() {
            if vals[k].is_negative() {
                continue;
            }
            if vals[k].is_zero() {
                z.set(i);
            }
            next.push((v, z));
        }
        next.extend(fresh);
        rays = next;
    }
    let mut out: Vec<IntVec> = rays.into_iter().map(|(v, _)| v).collect();
    out.sort();
    out.dedup();
    out
}

/// Converts `{x : a x ≥ 0}` into (lineality basis, extremal rays of the part in
/// the orthogonal complement of the lineality space).
fn h_to_v(dim: usize, a: &[IntVec]) -> (Vec<IntVec>, Vec<IntVec>) {
    if a.is_empty() {
        return (super::lattice::IntegerLattice::full(dim).basis().to_vec(), Vec::new());
    }
    let am = IntMatrix::from_rows(dim, a);
    let lineality = integer_kernel(&am);
    // independent rows spanning the row space
    let mut basis_rows: Vec<IntVec> = Vec::new();
    for row in a {
        let mut trial = basis_rows.clone();
        trial.push(row.clone());
        if hermite_normal_form(&IntMatrix::from_rows(dim, &trial)).rank == trial.len() {
            basis_rows = trial;
        }
    }
    let p = basis_rows.len();
    if p == 0 {
        return (lineality, Vec::new());
    }
    // x = Q z with Q = basis_rowsᵀ
    let q = IntMatrix::from_rows(dim, &basis_rows).transpose();
    let b: Vec<IntVec> = a.iter().map(|row| q.transpose().mul_vec(row)).collect();
    let zs = double_description(&b, p);
    let mut rays: Vec<IntVec> = zs.iter().map(|z| primitive(&q.mul_vec(z))).collect();
    rays.sort();
    rays.dedup();
    (lineality, rays)
}

impl RationalCone {
    /// The cone generated by `gens` in `Q^dim`.
    pub fn from_generators(dim: usize, gens: &[IntVec]) -> Self {
        let gens: Vec<IntVec> = gens.iter().filter(|g| !super::is_zero(g)).cloned().collect();
        let (equations, facets) = h_to_v(dim, &gens);
        Self::finish(dim, facets, equations)
    }

    /// The cone `{x : f · x ≥ 0 for f in ineqs, e · x = 0 for e in eqs}`.
    pub fn from_inequalities(dim: usize, ineqs: &[IntVec], eqs: &[IntVec]) -> Self {
        let mut rows: Vec<IntVec> = ineqs.to_vec();
        for e in eqs {
            rows.push(e.clone());
            rows.push(neg(e));
        }
        let (lineality, rays) = h_to_v(dim, &rows);
        let mut gens = rays;
        for l in &lineality {
            gens.push(l.clone());
            gens.push(neg(l));
        }
        Self::from_generators(dim, &gens)
    }

    fn finish(dim: usize, facets: Vec<IntVec>, equations: Vec<IntVec>) -> Self {
        let mut rows = facets.clone();
        for e in &equations {
            rows.push(e.clone());
            rows.push(neg(e));
        }
        let (lineality, rays) = h_to_v(dim, &rows);
        RationalCone { dim, rays, lineality, facets, equations }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[IntVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IntVec] {
        &self.lineality
    }

    pub fn facets(&self) -> &[IntVec] {
        &self.facets
    }

    pub fn equations(&self) -> &[IntVec] {
        &self.equations
    }

    /// Generators: rays plus both signs of each lineality basis vector.
    pub fn generators(&self) -> Vec<IntVec> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(neg(l));
        }
        g
    }

    /// Dimension of the linear span.
    pub fn span_dim(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.facets.iter().all(|f| !dot(f, x).is_negative())
            && self.equations.iter().all(|e| dot(e, x).is_zero())
    }

    pub fn contains_rational(&self, x: &[BigRational]) -> bool {
        self.facets.iter().all(|f| !dot_rat(f, x).is_negative())
            && self.equations.iter().all(|e| dot_rat(e, x).is_zero())
    }

    /// The dual cone `{y : y · x ≥ 0 for all x in self}`.
    pub fn dual(&self) -> RationalCone {
        let mut facets = self.rays.clone();
        facets.sort();
        let mut rays = self.facets.clone();
        rays.sort();
        RationalCone {
            dim: self.dim,
            rays,
            lineality: self.equations.clone(),
            facets,
            equations: self.lineality.clone(),
        }
    }

    /// Equality as sets.
    pub fn same_as(&self, other: &RationalCone) -> bool {
        self.dim == other.dim
            && other.generators().iter().all(|g| self.contains(g))
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// Rays lying on the facet `f`.
    pub fn rays_on(&self, f: &[BigInt]) -> Vec<IntVec> {
        self.rays.iter().filter(|r| dot(f, r).is_zero()).cloned().collect()
    }

    /// Whether `x` is in the relative interior.
    pub fn in_relative_interior(&self, x: &[BigInt]) -> bool {
        self.facets.iter().all(|f| dot(f, x).is_positive())
            && self.equations.iter().all(|e| dot(e, x).is_zero())
    }
}
