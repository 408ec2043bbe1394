//! Candidate moment polytopes: tangent cones, local monoids, Delzant and
//! reflectivity checks, and the per-vertex smoothness test.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{
    dot, dot_rat, integer_kernel, parallel, primitive_of_rational, rank, IntMatrix, IntVec, IntegerLattice, RatVec,
    RationalCone,
};
use crate::monoid::{hilbert_basis_in, WeightMonoid};
use crate::rootsys::GroupDatum;
use crate::verdict::{check_reflective_smooth, smooth_verdict, Outcome, Route, Verdict};

/// Convex hull of finitely many dominant rational points, given by its
/// vertices.
#[derive(Clone, Debug)]
pub struct Polytope {
    group: GroupDatum,
    vertices: Vec<RatVec>,
    /// Facets as `(c, c0)`, meaning `c·x + c0 ≥ 0` on the polytope.
    facets: Vec<(IntVec, BigInt)>,
    /// `incidence[f]` lists the vertices on facet `f`.
    incidence: Vec<Vec<usize>>,
    dim: usize,
}

fn homogenize(v: &[BigRational]) -> IntVec {
    let mut h: RatVec = v.to_vec();
    h.push(BigRational::from_integer(1.into()));
    primitive_of_rational(&h)
}

fn on_facet(c: &[BigInt], c0: &BigInt, v: &[BigRational]) -> bool {
    (dot_rat(c, v) + BigRational::from_integer(c0.clone())).is_zero()
}

impl Polytope {
    /// Rejects repeated or non-extreme points and points outside the
    /// dominant chamber.
    pub fn new(group: &GroupDatum, vertices: &[RatVec]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = group.dim();
        for v in vertices {
            if v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len() });
            }
            if !group.is_dominant_rational(v) {
                return Err(Error::VertexOutsideChamber);
            }
        }
        let lifted: Vec<IntVec> = vertices.iter().map(|v| homogenize(v)).collect();
        let cone = RationalCone::from_generators(n + 1, &lifted);
        let distinct: BTreeSet<&IntVec> = lifted.iter().collect();
        if distinct.len() != lifted.len() || cone.rays().len() != lifted.len() {
            return Err(Error::RedundantPoint);
        }
        let dim = cone.span_dim() - 1;
        let mut facets = Vec::new();
        let mut incidence = Vec::new();
        for f in cone.facets() {
            let (c, c0) = (f[..n].to_vec(), f[n].clone());
            incidence.push((0..vertices.len()).filter(|&i| on_facet(&c, &c0, &vertices[i])).collect());
            facets.push((c, c0));
        }
        Ok(Polytope { group: group.clone(), vertices: vertices.to_vec(), facets, incidence, dim })
    }

    pub fn group(&self) -> &GroupDatum {
        &self.group
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Facet inequalities `c·x + c0 ≥ 0`.
    pub fn facets(&self) -> &[(IntVec, BigInt)] {
        &self.facets
    }

    pub fn vertex_index(&self, a: &[BigRational]) -> Result<usize> {
        self.vertices.iter().position(|v| v.as_slice() == a).ok_or(Error::NotAVertex)
    }

    /// Vertex sets of all nonempty faces, including the polytope itself.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
        faces.insert(all);
        let mut frontier: Vec<Vec<usize>> = self.incidence.clone();
        while let Some(f) = frontier.pop() {
            if f.is_empty() || !faces.insert(f.clone()) {
                continue;
            }
            for g in &self.incidence {
                let meet: Vec<usize> = f.iter().copied().filter(|i| g.contains(i)).collect();
                if !faces.contains(&meet) {
                    frontier.push(meet);
                }
            }
        }
        faces.into_iter().collect()
    }

    /// Facets containing every vertex in `face`.
    fn facets_containing(&self, face: &[usize]) -> Vec<usize> {
        (0..self.facets.len()).filter(|&f| face.iter().all(|v| self.incidence[f].contains(v))).collect()
    }

    /// Simple roots vanishing on every vertex in `face`.
    fn walls_containing(&self, face: &[usize]) -> Vec<usize> {
        (0..self.group.rank())
            .filter(|&j| face.iter().all(|&v| dot_rat(self.group.coroot(j), &self.vertices[v]).is_zero()))
            .collect()
    }
}

/// `R≥0 (P − a)` for a vertex `a`.
///
/// ```
/// use weightmon::exactla::rvec;
/// use weightmon::polytope::{tangent_cone, Polytope};
/// use weightmon::rootsys::group;
/// let g = group("A2", 0).unwrap();
/// let p = Polytope::new(&g, &[rvec(&[0, 0]), rvec(&[1, 0]), rvec(&[0, 1])]).unwrap();
/// let c = tangent_cone(&p, &rvec(&[1, 0])).unwrap();
/// assert!(c.same_as(&weightmon::exactla::RationalCone::from_generators(
///     2,
///     &[weightmon::exactla::ivec(&[-1, 0]), weightmon::exactla::ivec(&[-1, 1])],
/// )));
/// ```
pub fn tangent_cone(p: &Polytope, a: &[BigRational]) -> Result<RationalCone> {
    let i = p.vertex_index(a)?;
    let n = p.group.dim();
    let gens: Vec<IntVec> = p
        .vertices
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != i)
        .map(|(_, v)| {
            let d: RatVec = v.iter().zip(a).map(|(x, y)| x - y).collect();
            primitive_of_rational(&d)
        })
        .collect();
    Ok(RationalCone::from_generators(n, &gens))
}

/// `Λ0 ∩ span(cone)`, or an error when that lattice does not span the cone.
fn lattice_in_span(l0: &IntegerLattice, cone: &RationalCone) -> Result<IntegerLattice> {
    let n = l0.dim();
    if cone.equations().is_empty() {
        return if l0.rank() == n { Ok(l0.clone()) } else { Err(Error::DegenerateDimension) };
    }
    let b = l0.basis_matrix();
    let e = IntMatrix::from_rows(n, cone.equations());
    let ker = integer_kernel(&e.mul(&b));
    let gens: Vec<IntVec> = ker.iter().map(|c| b.mul_vec(c)).collect();
    let l = IntegerLattice::from_generators(n, &gens);
    if l.rank() != cone.span_dim() {
        return Err(Error::DegenerateDimension);
    }
    Ok(l)
}

/// The Levi subgroup `G(a)` of a vertex, as a root datum on the same weight
/// space, with the ambient indices of its simple roots.
pub fn vertex_levi(p: &Polytope, a: &[BigRational]) -> Result<(GroupDatum, Vec<usize>)> {
    let roots = p.group.levi_simple_roots(a)?;
    Ok((p.group.levi(&roots)?, roots))
}

/// `Γ_a = C_a P ∩ Λ0` as a monoid for the Levi `G(a)`.
pub fn local_monoid(p: &Polytope, l0: &IntegerLattice, a: &[BigRational]) -> Result<WeightMonoid> {
    let cone = tangent_cone(p, a)?;
    let l = lattice_in_span(l0, &cone)?;
    let (levi, _) = vertex_levi(p, a)?;
    WeightMonoid::saturated(&levi, &l, &cone)
}

/// At every vertex the tangent cone is spanned by a basis of `Λ0`.
pub fn is_delzant(p: &Polytope, l0: &IntegerLattice) -> bool {
    if p.dim != l0.rank() {
        return false;
    }
    p.vertices.iter().all(|a| {
        let cone = tangent_cone(p, a).expect("vertex");
        let Ok(l) = lattice_in_span(l0, &cone) else { return false };
        if l != *l0 {
            return false;
        }
        let hb = hilbert_basis_in(&l, &cone);
        hb.units.is_empty()
            && hb.irreducibles.len() == l0.rank()
            && IntegerLattice::from_generators(l0.dim(), &hb.irreducibles) == *l0
    })
}

/// Which reflectivity conditions fail, one message per failure.
#[derive(Clone, Debug, Default)]
pub struct ReflectiveDiagnostics {
    pub full_dimensional: bool,
    pub failures: Vec<String>,
}

impl ReflectiveDiagnostics {
    pub fn holds(&self) -> bool {
        self.full_dimensional && self.failures.is_empty()
    }
}

fn fmt_point(v: &[BigRational]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// Reflectivity of a polytope. Condition (b) is tested once per face: the
/// walls through a relative-interior point of a face are exactly the walls
/// containing all its vertices.
pub fn is_reflective_polytope(p: &Polytope) -> ReflectiveDiagnostics {
    let g = &p.group;
    let n = g.dim();
    let mut diag = ReflectiveDiagnostics { full_dimensional: p.dim == n, failures: Vec::new() };
    if !diag.full_dimensional {
        diag.failures.push(format!("(a) dimension {} < {}", p.dim, n));
        return diag;
    }
    let homog: Vec<IntVec> = p
        .facets
        .iter()
        .map(|(c, c0)| {
            let mut h = c.clone();
            h.push(c0.clone());
            h
        })
        .collect();
    for face in p.faces() {
        let hs = p.facets_containing(&face);
        for j in p.walls_containing(&face) {
            for &f in &hs {
                let (c, c0) = &p.facets[f];
                let cr: RatVec = c.iter().map(|x| BigRational::from_integer(x.clone())).collect();
                let mut image: IntVec = g.reflect_functional(j, &cr).iter().map(|x| x.to_integer()).collect();
                image.push(c0.clone());
                if !hs.iter().any(|&h| parallel(&homog[h], &image)) {
                    let v: Vec<String> = face.iter().map(|&i| fmt_point(&p.vertices[i])).collect();
                    diag.failures.push(format!(
                        "(b) s_{} moves a facet hyperplane through the face [{}]",
                        j + 1,
                        v.join(", ")
                    ));
                }
            }
        }
    }
    for (f, on) in p.incidence.iter().enumerate() {
        let open = (0..g.rank()).all(|j| on.iter().any(|&v| dot_rat(g.coroot(j), &p.vertices[v]).is_positive()));
        if !open {
            diag.failures.push(format!("(c) facet {} lies in a wall of the chamber", f + 1));
        }
    }
    diag
}

/// A user-supplied identification of the Levi at a vertex with another
/// root datum (for instance `SL(2) × C^×`).
#[derive(Clone, Debug)]
pub struct LocalModel {
    /// Index into the polytope's vertex list.
    pub vertex: usize,
    pub target: GroupDatum,
    /// Maps ambient weight coordinates to target weight coordinates.
    pub matrix: IntMatrix,
    /// `(β, α)`: ambient simple root `β` of the Levi corresponds to target
    /// simple root `α`.
    pub roots: Vec<(usize, usize)>,
}

impl LocalModel {
    /// Injectivity on `Λ0` and `⟨α∨, Mλ⟩ = ⟨β∨, λ⟩` on a basis of `Λ0`.
    pub fn validate(&self, source: &GroupDatum, levi_roots: &[usize], l0: &IntegerLattice) -> Result<()> {
        let bad = |s: &str| Err(Error::InvalidLocalModel(s.to_string()));
        if self.matrix.ncols() != source.dim() || self.matrix.nrows() != self.target.dim() {
            return bad("matrix has the wrong shape");
        }
        let images: Vec<IntVec> = l0.basis().iter().map(|b| self.matrix.mul_vec(b)).collect();
        if !images.is_empty() && rank(&IntMatrix::from_cols(self.target.dim(), &images)) != images.len() {
            return bad("matrix is not injective on the lattice");
        }
        let mut src: Vec<usize> = self.roots.iter().map(|r| r.0).collect();
        let mut tgt: Vec<usize> = self.roots.iter().map(|r| r.1).collect();
        src.sort();
        tgt.sort();
        if src != levi_roots || tgt != (0..self.target.rank()).collect::<Vec<_>>() {
            return bad("root correspondence does not match the Levi at the vertex");
        }
        for &(beta, alpha) in &self.roots {
            for b in l0.basis() {
                if dot(self.target.coroot(alpha), &self.matrix.mul_vec(b)) != dot(source.coroot(beta), b) {
                    return bad("coroot pairing is not preserved");
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOutcome {
    Satisfied,
    Violated,
    Undecided,
}

impl fmt::Display for PairOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug)]
pub struct VertexReport {
    pub vertex: RatVec,
    /// Ambient indices of the Levi simple roots.
    pub levi: Vec<usize>,
    /// Hilbert basis of `Γ_a`.
    pub monoid: Vec<IntVec>,
    /// Generators of the pushed-forward monoid when a local model was used.
    pub model_monoid: Option<Vec<IntVec>>,
    pub verdict: Verdict,
    /// `ZΓ_a = Λ0`.
    pub lattice_ok: bool,
}

impl VertexReport {
    pub fn route(&self) -> Option<Route> {
        self.verdict.route
    }

    pub fn outcome(&self) -> Outcome {
        self.verdict.outcome
    }
}

#[derive(Clone, Debug)]
pub struct PolytopeReport {
    pub vertices: Vec<VertexReport>,
    pub reflective: ReflectiveDiagnostics,
    pub delzant: bool,
    /// Lattice conditions of the global route: `Λ0` is `W_a`-invariant and
    /// contains the Levi roots at every vertex.
    pub lattice_conditions: bool,
    /// The pair was decided by the global reflective-Delzant route.
    pub global_route: bool,
    pub overall: PairOutcome,
}

fn vertex_report(
    p: &Polytope,
    l0: &IntegerLattice,
    i: usize,
    model: Option<&LocalModel>,
    global: bool,
) -> Result<VertexReport> {
    let a = &p.vertices[i];
    let (_, levi) = vertex_levi(p, a)?;
    let m = local_monoid(p, l0, a)?;
    let monoid = m.hilbert_basis().monoid_generators();
    let lattice_ok = m.lattice() == l0;
    let (verdict, model_monoid) = if global {
        let v = check_reflective_smooth(&m)?;
        if v.outcome != Outcome::Smooth {
            return Err(Error::InvariantViolated(format!(
                "global route holds but vertex {} fails the reflective criterion",
                fmt_point(a)
            )));
        }
        (v, None)
    } else if let Some(lm) = model {
        lm.validate(&p.group, &levi, l0)?;
        let image: Vec<IntVec> = monoid.iter().map(|x| lm.matrix.mul_vec(x)).collect();
        let pushed = WeightMonoid::new(&lm.target, &image)
            .map_err(|_| Error::InvalidLocalModel("image of Γ_a is not dominant for the target".into()))?;
        (smooth_verdict(&pushed)?, Some(pushed.generators().to_vec()))
    } else {
        (smooth_verdict(&m)?, None)
    };
    Ok(VertexReport { vertex: a.clone(), levi, monoid, model_monoid, verdict, lattice_ok })
}

/// Checks that `(P, Λ0)` satisfies the local smoothness conditions at every
/// vertex. The global reflective-Delzant route is tried first.
pub fn check_pair(p: &Polytope, l0: &IntegerLattice, models: &[LocalModel]) -> Result<PolytopeReport> {
    if l0.dim() != p.group.dim() {
        return Err(Error::DimensionMismatch { expected: p.group.dim(), got: l0.dim() });
    }
    for lm in models {
        if lm.vertex >= p.vertices.len() {
            return Err(Error::InvalidLocalModel(format!("no vertex with index {}", lm.vertex)));
        }
    }
    let reflective = is_reflective_polytope(p);
    let delzant = is_delzant(p, l0);
    let mut lattice_conditions = true;
    for a in &p.vertices {
        let roots = p.group.levi_simple_roots(a)?;
        lattice_conditions &= roots.iter().all(|&j| l0.contains(p.group.simple_root(j)))
            && p.group.lattice_is_w_invariant(l0, &roots);
    }
    let global_route = lattice_conditions && reflective.holds() && delzant;
    let mut vertices = Vec::new();
    for i in 0..p.vertices.len() {
        let model = models.iter().find(|m| m.vertex == i);
        vertices.push(vertex_report(p, l0, i, model, global_route)?);
    }
    let overall = if vertices.iter().all(|v| v.outcome() == Outcome::Smooth && v.lattice_ok) {
        PairOutcome::Satisfied
    } else if vertices.iter().any(|v| v.outcome() == Outcome::NotSmooth || !v.lattice_ok) {
        PairOutcome::Violated
    } else {
        PairOutcome::Undecided
    };
    Ok(PolytopeReport { vertices, reflective, delzant, lattice_conditions, global_route, overall })
}

/// The two local models of the `SU(3)` triangle `conv(0, ω1, ω2)` onto
/// `SL(2) × C^×`, at the vertices with indices 1 (`ω1`) and 2 (`ω2`).
pub fn su3_triangle_models() -> Vec<LocalModel> {
    let target = crate::sl2c::sl2c_group();
    vec![
        LocalModel {
            vertex: 1,
            target: target.clone(),
            matrix: IntMatrix::from_i64(&[&[0, 1], &[-2, -1]]),
            roots: vec![(1, 0)],
        },
        LocalModel { vertex: 2, target, matrix: IntMatrix::from_i64(&[&[1, 0], &[-1, -2]]), roots: vec![(0, 0)] },
    ]
}
