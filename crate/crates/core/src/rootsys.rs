//! Root data of connected reductive groups.
//!
//! A [`GroupDatum`] stores simple roots and simple coroots as integer vectors
//! in a common weight space `Z^dim`. Groups built by [`build_group`] use the
//! standard coordinates: fundamental weights first, then torus characters.
//! Levi subgroups and other root data keep whatever ambient coordinates they
//! were given.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{
    dot, dot_rat, ivec, rat, solve_rational, sub, IntMatrix, IntVec, IntegerLattice, RatVec,
    RationalCone,
};

/// Integer weight in the ambient weight coordinates.
pub type Weight = IntVec;
/// Integer functional on weights, paired by dot product.
pub type Coweight = IntVec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinType {
    pub const ALL: [DynkinType; 7] = [
        DynkinType::A,
        DynkinType::B,
        DynkinType::C,
        DynkinType::D,
        DynkinType::E,
        DynkinType::F,
        DynkinType::G,
    ];

    pub fn letter(self) -> char {
        match self {
            DynkinType::A => 'A',
            DynkinType::B => 'B',
            DynkinType::C => 'C',
            DynkinType::D => 'D',
            DynkinType::E => 'E',
            DynkinType::F => 'F',
            DynkinType::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        DynkinType::ALL.into_iter().find(|t| t.letter() == c.to_ascii_uppercase())
    }

    /// Whether `(self, rank)` names an irreducible diagram under the usual
    /// spelling rules (no D2, D3, B1, C1, ...).
    pub fn valid_rank(self, rank: usize) -> bool {
        match self {
            DynkinType::A => rank >= 1,
            DynkinType::B | DynkinType::C => rank >= 2,
            DynkinType::D => rank >= 4,
            DynkinType::E => (6..=8).contains(&rank),
            DynkinType::F => rank == 4,
            DynkinType::G => rank == 2,
        }
    }
}

/// `(type, rank)` of an irreducible diagram, e.g. `B3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CartanType {
    pub ty: DynkinType,
    pub rank: usize,
}

impl CartanType {
    pub fn new(ty: DynkinType, rank: usize) -> Result<Self> {
        if !ty.valid_rank(rank) {
            return Err(Error::InvalidComponent(format!("{}{}", ty.letter(), rank)));
        }
        Ok(CartanType { ty, rank })
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.ty.letter(), self.rank)
    }
}

impl std::str::FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let ty = chars
            .next()
            .and_then(DynkinType::from_letter)
            .ok_or_else(|| Error::InvalidComponent(s.to_string()))?;
        let rank: usize = chars.as_str().parse().map_err(|_| Error::InvalidComponent(s.to_string()))?;
        CartanType::new(ty, rank)
    }
}

/// Squared root lengths (up to scale) and edges of the Bourbaki diagram.
fn bourbaki_shape(t: CartanType) -> (Vec<i64>, Vec<(usize, usize)>) {
    let n = t.rank;
    let path = |k: usize| (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect::<Vec<_>>();
    match t.ty {
        DynkinType::A => (vec![2; n], path(n)),
        DynkinType::B => {
            let mut d = vec![2; n];
            d[n - 1] = 1;
            (d, path(n))
        }
        DynkinType::C => {
            let mut d = vec![1; n];
            d[n - 1] = 2;
            (d, path(n))
        }
        DynkinType::D => {
            let mut e = path(n - 1);
            e.push((n - 3, n - 1));
            (vec![2; n], e)
        }
        DynkinType::E => {
            let mut e = vec![(0, 2), (1, 3)];
            for i in 2..n - 1 {
                e.push((i, i + 1));
            }
            (vec![2; n], e)
        }
        DynkinType::F => (vec![2, 2, 1, 1], path(4)),
        DynkinType::G => (vec![1, 3], vec![(0, 1)]),
    }
}

/// Cartan matrix `C[i][j] = ⟨α_i∨, α_j⟩` in Bourbaki numbering.
pub fn cartan_matrix(t: CartanType) -> Vec<Vec<i64>> {
    let (d, edges) = bourbaki_shape(t);
    let n = t.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (i, j) in edges {
        let m = d[i].max(d[j]);
        c[i][j] = -m / d[i];
        c[j][i] = -m / d[j];
    }
    c
}

/// All bijections `f` from `0..canon.len()` onto `nodes` with
/// `target[f(i)][f(j)] == canon[i][j]`.
fn cartan_isomorphisms(
    canon: &[Vec<i64>],
    target: &[Vec<i64>],
    nodes: &[usize],
    first_only: bool,
) -> Vec<Vec<usize>> {
    fn go(
        canon: &[Vec<i64>],
        target: &[Vec<i64>],
        nodes: &[usize],
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) {
        if first_only && !out.is_empty() {
            return;
        }
        let i = cur.len();
        if i == canon.len() {
            out.push(cur.clone());
            return;
        }
        for (k, &g) in nodes.iter().enumerate() {
            if used[k] {
                continue;
            }
            let ok = (0..i).all(|j| target[g][cur[j]] == canon[i][j] && target[cur[j]][g] == canon[j][i]);
            if !ok {
                continue;
            }
            used[k] = true;
            cur.push(g);
            go(canon, target, nodes, used, cur, out, first_only);
            cur.pop();
            used[k] = false;
        }
    }
    if canon.len() != nodes.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(canon, target, nodes, &mut vec![false; nodes.len()], &mut Vec::new(), &mut out, first_only);
    out
}

/// An irreducible component: its type and the global simple-root indices in
/// Bourbaki order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub cartan_type: CartanType,
    pub nodes: Vec<usize>,
}

/// Combinatorial model of a connected reductive group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDatum {
    dim: usize,
    simple_roots: Vec<Weight>,
    coroots: Vec<Coweight>,
    cartan: Vec<Vec<i64>>,
    components: Vec<Component>,
    standard: bool,
}

/// Builds the group with the given irreducible components and central torus
/// rank, in fundamental-weight-then-torus coordinates.
///
/// ```
/// use weightmon::rootsys::{build_group, CartanType};
/// let g = build_group(&["A2".parse().unwrap()], 0).unwrap();
/// assert_eq!(g.simple_root(0), &weightmon::exactla::ivec(&[2, -1]));
/// ```
pub fn build_group(components: &[CartanType], torus_rank: usize) -> Result<GroupDatum> {
    let r: usize = components.iter().map(|c| c.rank).sum();
    let dim = r + torus_rank;
    let mut cartan = vec![vec![0i64; r]; r];
    let mut comps = Vec::new();
    let mut off = 0;
    for &t in components {
        CartanType::new(t.ty, t.rank)?;
        let c = cartan_matrix(t);
        for i in 0..t.rank {
            for j in 0..t.rank {
                cartan[off + i][off + j] = c[i][j];
            }
        }
        comps.push(Component { cartan_type: t, nodes: (off..off + t.rank).collect() });
        off += t.rank;
    }
    let mut simple_roots = Vec::with_capacity(r);
    let mut coroots = Vec::with_capacity(r);
    for j in 0..r {
        let mut a = vec![BigInt::zero(); dim];
        for (i, row) in cartan.iter().enumerate() {
            a[i] = BigInt::from(row[j]);
        }
        simple_roots.push(a);
        let mut c = vec![BigInt::zero(); dim];
        c[j] = BigInt::from(1);
        coroots.push(c);
    }
    Ok(GroupDatum { dim, simple_roots, coroots, cartan, components: comps, standard: true })
}

/// Shorthand for `build_group` from a string like `"A1xB3"` (empty for a torus).
pub fn group(spec: &str, torus_rank: usize) -> Result<GroupDatum> {
    let comps: Vec<CartanType> = spec
        .split(['x', '×', ','])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    build_group(&comps, torus_rank)
}

/// Splits the index set of a Cartan-like matrix into connected pieces and
/// names each piece, trying types in the order A, B, C, D, E, F, G.
fn identify_components(cartan: &[Vec<i64>], nodes: &[usize]) -> Option<Vec<Component>> {
    let mut seen = vec![false; cartan.len()];
    let mut out = Vec::new();
    for &start in nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in nodes {
                if !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort();
        out.push(identify_connected(cartan, &comp)?);
    }
    out.sort_by_key(|c| c.nodes.iter().copied().min());
    Some(out)
}

fn identify_connected(cartan: &[Vec<i64>], comp: &[usize]) -> Option<Component> {
    let n = comp.len();
    for ty in DynkinType::ALL {
        if !ty.valid_rank(n) {
            continue;
        }
        let t = CartanType { ty, rank: n };
        let iso = cartan_isomorphisms(&cartan_matrix(t), cartan, comp, true);
        if let Some(f) = iso.into_iter().next() {
            return Some(Component { cartan_type: t, nodes: f });
        }
    }
    None
}

impl GroupDatum {
    /// A root datum given by explicit simple roots and coroots in `Z^dim`.
    pub fn from_root_datum(dim: usize, roots: &[Weight], coroots: &[Coweight]) -> Result<Self> {
        if roots.len() != coroots.len() {
            return Err(Error::InvalidRootDatum("roots and coroots differ in number".into()));
        }
        for v in roots.iter().chain(coroots) {
            if v.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.len() });
            }
        }
        let r = roots.len();
        if IntegerLattice::from_generators(dim, roots).rank() != r {
            return Err(Error::InvalidRootDatum("simple roots are linearly dependent".into()));
        }
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let v: i64 = dot(&coroots[i], &roots[j])
                    .try_into()
                    .map_err(|_| Error::InvalidRootDatum("Cartan entry out of range".into()))?;
                cartan[i][j] = v;
            }
        }
        for i in 0..r {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidRootDatum(format!("⟨α{}∨, α{}⟩ ≠ 2", i + 1, i + 1)));
            }
        }
        let nodes: Vec<usize> = (0..r).collect();
        let components = identify_components(&cartan, &nodes)
            .ok_or_else(|| Error::InvalidRootDatum("not a finite-type Cartan matrix".into()))?;
        Ok(GroupDatum {
            dim,
            simple_roots: roots.to_vec(),
            coroots: coroots.to_vec(),
            cartan,
            components,
            standard: false,
        })
    }

    /// The Levi subgroup with simple roots `subset`, in the same ambient
    /// coordinates.
    pub fn levi(&self, subset: &[usize]) -> Result<GroupDatum> {
        for &j in subset {
            self.check_root(j)?;
        }
        let mut s = subset.to_vec();
        s.sort();
        s.dedup();
        let roots: Vec<Weight> = s.iter().map(|&j| self.simple_roots[j].clone()).collect();
        let coroots: Vec<Coweight> = s.iter().map(|&j| self.coroots[j].clone()).collect();
        GroupDatum::from_root_datum(self.dim, &roots, &coroots)
    }

    /// Dimension of the weight space (rank of the maximal torus).
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Semisimple rank.
    pub fn rank(&self) -> usize {
        self.simple_roots.len()
    }

    pub fn torus_rank(&self) -> usize {
        self.dim - self.rank()
    }

    /// Whether the coordinates are the standard fundamental-weight ones.
    pub fn is_standard(&self) -> bool {
        self.standard
    }

    pub fn is_torus(&self) -> bool {
        self.simple_roots.is_empty()
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn simple_root(&self, j: usize) -> &Weight {
        &self.simple_roots[j]
    }

    pub fn coroots(&self) -> &[Coweight] {
        &self.coroots
    }

    pub fn coroot(&self, j: usize) -> &Coweight {
        &self.coroots[j]
    }

    /// Whether this is `SL(2) × C^×` in the standard coordinates `(ω, ε)`.
    pub fn is_standard_sl2c(&self) -> bool {
        self.dim == 2
            && self.rank() == 1
            && self.simple_roots[0] == ivec(&[2, 0])
            && self.coroots[0] == ivec(&[1, 0])
    }

    fn check_root(&self, j: usize) -> Result<()> {
        if j < self.rank() {
            Ok(())
        } else {
            Err(Error::NotSimpleRoot(j))
        }
    }

    fn check_dim(&self, v: &[BigInt]) -> Result<()> {
        if v.len() == self.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim, got: v.len() })
        }
    }

    /// `⟨c, w⟩`.
    pub fn pairing(&self, c: &[BigInt], w: &[BigInt]) -> Result<BigInt> {
        self.check_dim(c)?;
        self.check_dim(w)?;
        Ok(dot(c, w))
    }

    /// `⟨α_j∨, w⟩`.
    pub fn coroot_pairing(&self, j: usize, w: &[BigInt]) -> BigInt {
        dot(&self.coroots[j], w)
    }

    /// The `i`-th fundamental weight (standard coordinates only).
    pub fn fundamental_weight(&self, i: usize) -> Option<Weight> {
        if !self.standard || i >= self.rank() {
            return None;
        }
        let mut w = vec![BigInt::zero(); self.dim];
        w[i] = BigInt::from(1);
        Some(w)
    }

    /// The `k`-th torus character (standard coordinates only).
    pub fn torus_character(&self, k: usize) -> Option<Weight> {
        if !self.standard || k >= self.torus_rank() {
            return None;
        }
        let mut w = vec![BigInt::zero(); self.dim];
        w[self.rank() + k] = BigInt::from(1);
        Some(w)
    }

    /// Coefficients of `w` in the simple roots, if `w` is in the root lattice.
    pub fn root_coefficients(&self, w: &[BigInt]) -> Result<IntVec> {
        self.check_dim(w)?;
        if self.is_torus() {
            return if w.iter().all(Zero::is_zero) { Ok(Vec::new()) } else { Err(Error::NotInRootLattice) };
        }
        let m = IntMatrix::from_cols(self.dim, &self.simple_roots);
        let x = solve_rational(&m, &crate::exactla::to_rational(w)).ok_or(Error::NotInRootLattice)?;
        if x.iter().all(|c| c.is_integer()) {
            Ok(x.iter().map(|c| c.to_integer()).collect())
        } else {
            Err(Error::NotInRootLattice)
        }
    }

    /// `Σ coeffs[j] α_j`.
    pub fn root_combination(&self, coeffs: &[BigInt]) -> Weight {
        let mut w = vec![BigInt::zero(); self.dim];
        for (c, a) in coeffs.iter().zip(&self.simple_roots) {
            if !c.is_zero() {
                for i in 0..self.dim {
                    w[i] += c * &a[i];
                }
            }
        }
        w
    }

    /// `supp(σ)`: simple roots with nonzero coefficient.
    pub fn support(&self, sigma: &[BigInt]) -> Result<Vec<usize>> {
        let c = self.root_coefficients(sigma)?;
        Ok((0..c.len()).filter(|&j| !c[j].is_zero()).collect())
    }

    /// Types of the connected pieces of the subdiagram on `subset`.
    pub fn support_type(&self, subset: &[usize]) -> Vec<CartanType> {
        let mut s = subset.to_vec();
        s.sort();
        s.dedup();
        let mut out: Vec<CartanType> = match identify_components(&self.cartan, &s) {
            Some(cs) => cs
                .into_iter()
                .map(|c| {
                    // a full declared component keeps its declared name
                    let mut nodes = c.nodes.clone();
                    nodes.sort();
                    self.components
                        .iter()
                        .find(|d| {
                            let mut dn = d.nodes.clone();
                            dn.sort();
                            dn == nodes
                        })
                        .map(|d| d.cartan_type)
                        .unwrap_or(c.cartan_type)
                })
                .collect(),
            None => Vec::new(),
        };
        out.sort();
        out
    }

    /// All labelings of the connected subdiagram on `nodes` as a diagram of
    /// type `t` (Bourbaki position `i` maps to `labeling[i]`).
    pub fn labelings(&self, nodes: &[usize], t: CartanType) -> Vec<Vec<usize>> {
        cartan_isomorphisms(&cartan_matrix(t), &self.cartan, nodes, false)
    }

    /// Automorphisms of the Dynkin diagram of component `k`, as maps from
    /// each node to its image (given as pairs in Bourbaki order).
    pub fn diagram_automorphisms(&self, k: usize) -> Vec<Vec<usize>> {
        let comp = &self.components[k];
        let canon = cartan_matrix(comp.cartan_type);
        let autos = cartan_isomorphisms(&canon, &canon, &(0..comp.nodes.len()).collect::<Vec<_>>(), false);
        autos.into_iter().map(|p| p.into_iter().map(|i| comp.nodes[i]).collect()).collect()
    }

    /// `s_j(w) = w − ⟨α_j∨, w⟩ α_j`.
    pub fn simple_reflection(&self, j: usize, w: &[BigInt]) -> Result<Weight> {
        self.check_root(j)?;
        self.check_dim(w)?;
        let p = dot(&self.coroots[j], w);
        Ok(sub(w, &crate::exactla::scale(&p, &self.simple_roots[j])))
    }

    /// `s_j` on a rational point.
    pub fn simple_reflection_rational(&self, j: usize, w: &[BigRational]) -> Result<RatVec> {
        self.check_root(j)?;
        let p = dot_rat(&self.coroots[j], w);
        Ok(w.iter().zip(&self.simple_roots[j]).map(|(x, a)| x - &p * rat(a)).collect())
    }

    /// `s_j` acting on a functional: `f ↦ f − ⟨f, α_j⟩ α_j∨`.
    pub fn reflect_functional(&self, j: usize, f: &[BigRational]) -> RatVec {
        let p = self.simple_roots[j]
            .iter()
            .zip(f)
            .fold(BigRational::zero(), |s, (a, x)| s + x * rat(a));
        f.iter().zip(&self.coroots[j]).map(|(x, c)| x - &p * rat(c)).collect()
    }

    pub fn is_dominant(&self, w: &[BigInt]) -> bool {
        self.coroots.iter().all(|c| !dot(c, w).is_negative())
    }

    pub fn is_dominant_rational(&self, a: &[BigRational]) -> bool {
        self.coroots.iter().all(|c| !dot_rat(c, a).is_negative())
    }

    /// `{α : ⟨α∨, a⟩ = 0}` for a dominant rational point `a`.
    pub fn levi_simple_roots(&self, a: &[BigRational]) -> Result<Vec<usize>> {
        if a.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: a.len() });
        }
        if !self.is_dominant_rational(a) {
            return Err(Error::NotDominant);
        }
        Ok((0..self.rank()).filter(|&j| dot_rat(&self.coroots[j], a).is_zero()).collect())
    }

    /// The dominant cone `{x : ⟨α∨, x⟩ ≥ 0 for all α ∈ S}`.
    pub fn dominant_cone(&self) -> RationalCone {
        RationalCone::from_inequalities(self.dim, &self.coroots, &[])
    }

    /// The root lattice `Z S`.
    pub fn root_lattice(&self) -> IntegerLattice {
        IntegerLattice::from_generators(self.dim, &self.simple_roots)
    }

    /// Whether `α_i ⟂ α_j`.
    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == 0
    }

    /// Whether a lattice is stable under every simple reflection.
    pub fn lattice_is_w_invariant(&self, l: &IntegerLattice, roots: &[usize]) -> bool {
        roots.iter().all(|&j| {
            l.basis().iter().all(|b| l.contains(&self.simple_reflection(j, b).expect("valid root")))
        })
    }

    /// Human-readable name like `A1xT1`.
    pub fn name(&self) -> String {
        let mut parts: Vec<String> = self.components.iter().map(|c| c.cartan_type.to_string()).collect();
        if self.torus_rank() > 0 {
            parts.push(format!("T{}", self.torus_rank()));
        }
        if parts.is_empty() {
            "trivial".into()
        } else {
            parts.join("x")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_roots() {
        let g = group("A2", 0).unwrap();
        assert_eq!(g.simple_root(0), &ivec(&[2, -1]));
        assert_eq!(g.simple_root(1), &ivec(&[-1, 2]));
    }

    #[test]
    fn rejects_small_d() {
        assert!(group("D3", 0).is_err());
        assert!(group("B1", 0).is_err());
        assert!(group("E9", 0).is_err());
    }

    #[test]
    fn cartan_entries() {
        assert_eq!(cartan_matrix("B2".parse().unwrap()), vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(cartan_matrix("G2".parse().unwrap()), vec![vec![2, -3], vec![-1, 2]]);
        let d4 = cartan_matrix("D4".parse().unwrap());
        assert_eq!(d4[1], vec![-1, 2, -1, -1]);
        let e6 = cartan_matrix("E6".parse().unwrap());
        assert_eq!(e6[3], vec![0, -1, -1, 2, -1, 0]);
    }

    #[test]
    fn automorphism_counts() {
        for (s, n) in [("A1", 1), ("A3", 2), ("D4", 6), ("D5", 2), ("E6", 2), ("E7", 1), ("B3", 1), ("F4", 1), ("G2", 1)] {
            let g = group(s, 0).unwrap();
            assert_eq!(g.diagram_automorphisms(0).len(), n, "{s}");
        }
    }

    #[test]
    fn support_types() {
        let b4 = group("B4", 0).unwrap();
        assert_eq!(b4.support_type(&[1, 2, 3]), vec!["B3".parse().unwrap()]);
        let a3 = group("A3", 0).unwrap();
        let a1: CartanType = "A1".parse().unwrap();
        assert_eq!(a3.support_type(&[0, 2]), vec![a1, a1]);
        let g2 = group("G2", 0).unwrap();
        assert_eq!(g2.support_type(&[0, 1]), vec!["G2".parse().unwrap()]);
        let c2 = group("C2", 0).unwrap();
        assert_eq!(c2.support_type(&[0, 1]), vec!["C2".parse().unwrap()]);
    }

    #[test]
    fn levi_of_a2() {
        let g = group("A2", 0).unwrap();
        let a = crate::exactla::rvec(&[1, 0]);
        assert_eq!(g.levi_simple_roots(&a).unwrap(), vec![1]);
        let l = g.levi(&[1]).unwrap();
        assert_eq!(l.components()[0].cartan_type, "A1".parse().unwrap());
        assert_eq!(l.torus_rank(), 1);
    }

    #[test]
    fn gl2_datum() {
        let g = GroupDatum::from_root_datum(2, &[ivec(&[2, -1])], &[ivec(&[1, 0])]).unwrap();
        let l1 = ivec(&[1, 1]);
        let l2 = ivec(&[1, -2]);
        assert_eq!(g.simple_reflection(0, &l1).unwrap(), crate::exactla::neg(&l2));
    }
}
