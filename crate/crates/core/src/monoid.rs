//! Finitely generated monoids of dominant weights.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{
    dot, hilbert_basis, is_zero, same_ray, sub, HilbertBasis, IntVec, IntegerLattice, RationalCone,
};
use crate::rootsys::{GroupDatum, Weight};

/// A submonoid `Γ` of the dominant weights, given by generators.
///
/// Lattice and cone are computed on construction; the Hilbert basis and the
/// normality flag on first use.
#[derive(Clone, Debug)]
pub struct WeightMonoid {
    group: GroupDatum,
    generators: Vec<Weight>,
    lattice: IntegerLattice,
    cone: RationalCone,
    hilbert: OnceLock<HilbertBasis>,
    normal: OnceLock<bool>,
}

/// Hilbert basis of `cone ∩ lattice`, returned in ambient coordinates.
///
/// The cone must lie in the rational span of the lattice.
pub fn hilbert_basis_in(lattice: &IntegerLattice, cone: &RationalCone) -> HilbertBasis {
    let r = lattice.rank();
    let facets: Vec<IntVec> = cone.facets().iter().map(|f| lattice.restrict(f)).collect();
    let eqs: Vec<IntVec> = cone.equations().iter().map(|e| lattice.restrict(e)).collect();
    let local = RationalCone::from_inequalities(r, &facets, &eqs);
    let hb = hilbert_basis(&local);
    HilbertBasis {
        units: hb.units.iter().map(|u| lattice.point(u)).collect(),
        irreducibles: hb.irreducibles.iter().map(|u| lattice.point(u)).collect(),
    }
}

impl WeightMonoid {
    /// The monoid generated by `generators`; zero and repeated generators are
    /// dropped.
    pub fn new(group: &GroupDatum, generators: &[Weight]) -> Result<Self> {
        let mut gens: Vec<Weight> = Vec::new();
        for g in generators {
            if g.len() != group.dim() {
                return Err(Error::DimensionMismatch { expected: group.dim(), got: g.len() });
            }
            if !group.is_dominant(g) {
                return Err(Error::NotDominant);
            }
            if !is_zero(g) && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let lattice = IntegerLattice::from_generators(group.dim(), &gens);
        let cone = RationalCone::from_generators(group.dim(), &gens);
        Ok(WeightMonoid {
            group: group.clone(),
            generators: gens,
            lattice,
            cone,
            hilbert: OnceLock::new(),
            normal: OnceLock::new(),
        })
    }

    /// `cone ∩ lattice` as a monoid (always normal). Fails if that set has
    /// non-dominant elements.
    pub fn saturated(group: &GroupDatum, lattice: &IntegerLattice, cone: &RationalCone) -> Result<Self> {
        let hb = hilbert_basis_in(lattice, cone);
        let m = WeightMonoid::new(group, &hb.monoid_generators())?;
        let _ = m.hilbert.set(hb);
        let _ = m.normal.set(true);
        Ok(m)
    }

    /// `L ∩ Λ^+`, the G-saturated monoid with lattice `L` (when `L` is
    /// generated by its dominant elements).
    pub fn g_saturated(group: &GroupDatum, lattice: &IntegerLattice) -> Result<Self> {
        let span_eqs = crate::exactla::integer_kernel(&lattice.basis_matrix().transpose());
        let cone = RationalCone::from_inequalities(group.dim(), group.coroots(), &span_eqs);
        Self::saturated(group, lattice, &cone)
    }

    pub fn group(&self) -> &GroupDatum {
        &self.group
    }

    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    /// `ZΓ`.
    pub fn lattice(&self) -> &IntegerLattice {
        &self.lattice
    }

    /// `Q≥0 Γ`.
    pub fn cone(&self) -> &RationalCone {
        &self.cone
    }

    pub fn rank(&self) -> usize {
        self.lattice.rank()
    }

    pub fn full_rank(&self) -> bool {
        self.rank() == self.group.dim()
    }

    /// Hilbert basis of `(Q≥0 Γ, ZΓ)`, i.e. of the normalization of `Γ`.
    pub fn hilbert_basis(&self) -> &HilbertBasis {
        self.hilbert.get_or_init(|| hilbert_basis_in(&self.lattice, &self.cone))
    }

    /// `Γ = ZΓ ∩ Q≥0 Γ`.
    pub fn is_normal(&self) -> bool {
        *self.normal.get_or_init(|| {
            let hb = self.hilbert_basis().clone();
            hb.monoid_generators().iter().all(|h| self.search_member(h))
        })
    }

    pub(crate) fn require_normal(&self) -> Result<()> {
        if self.is_normal() {
            Ok(())
        } else {
            Err(Error::NotNormal)
        }
    }

    /// `ZΓ ∩ Λ^+ = Γ`, tested as `Λ^+_Q ∩ span(ZΓ) ⊆ Q≥0 Γ`.
    pub fn is_g_saturated(&self) -> Result<bool> {
        self.require_normal()?;
        let chamber = RationalCone::from_inequalities(self.group.dim(), self.group.coroots(), self.cone.equations());
        Ok(chamber.generators().iter().all(|g| self.cone.contains(g)))
    }

    /// `S^p(Γ)`: simple roots whose coroots vanish on every generator.
    pub fn s_p(&self) -> Vec<usize> {
        (0..self.group.rank())
            .filter(|&j| self.generators.iter().all(|g| self.group.coroot_pairing(j, g).is_zero()))
            .collect()
    }

    /// Restriction of an ambient functional to `ZΓ`, in dual-basis coordinates.
    pub fn restrict(&self, functional: &[BigInt]) -> IntVec {
        self.lattice.restrict(functional)
    }

    /// `α∨|_{ZΓ}`.
    pub fn coroot_restriction(&self, j: usize) -> IntVec {
        self.restrict(self.group.coroot(j))
    }

    /// Coordinates of a lattice element in the basis of `ZΓ`.
    pub fn coords(&self, w: &[BigInt]) -> Option<IntVec> {
        self.lattice.coords(w)
    }

    /// `E(Γ)`: primitive generators of the extremal rays of the dual cone,
    /// in `(ZΓ)*` coordinates.
    pub fn e_of(&self) -> Vec<IntVec> {
        let r = self.rank();
        let gens: Vec<IntVec> = self.generators.iter().map(|g| self.coords(g).expect("generator")).collect();
        let local = RationalCone::from_generators(r, &gens);
        let mut out = local.facets().to_vec();
        out.sort();
        out
    }

    /// `a(α)` for the simple root with index `j`; requires `α ∈ ZΓ`.
    pub fn a_of(&self, j: usize) -> Result<Vec<IntVec>> {
        let alpha = self.coords(self.group.simple_root(j)).ok_or(Error::AlphaNotInLattice(j))?;
        let cr = self.coroot_restriction(j);
        let one = BigInt::from(1);
        let mut out = Vec::new();
        for e in self.e_of() {
            if dot(&e, &alpha) == one {
                out.push(e.clone());
                out.push(sub(&cr, &e));
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Whether `λ ∈ Γ`. Normal monoids test lattice and cone membership;
    /// others search for an N-combination of the generators.
    pub fn member(&self, w: &[BigInt]) -> bool {
        if w.len() != self.group.dim() {
            return false;
        }
        if self.is_normal() {
            self.lattice.contains(w) && self.cone.contains(w)
        } else {
            self.search_member(w)
        }
    }

    /// Search for an N-combination of the generators equal to `w`.
    ///
    /// Generators inside the lineality space `L` of the cone generate the
    /// group `Z(Γ ∩ L)`, so only the remaining generators need bounded
    /// coefficients. The grading `ℓ` (sum of the facet normals) vanishes on
    /// `L` and is positive on every other generator, which bounds their
    /// coefficients by `ℓ(w) / ℓ(g)`.
    pub fn search_member(&self, w: &[BigInt]) -> bool {
        if !self.lattice.contains(w) || !self.cone.contains(w) {
            return false;
        }
        let dim = self.group.dim();
        let grading: IntVec =
            (0..dim).map(|i| self.cone.facets().iter().map(|f| f[i].clone()).sum()).collect();
        let (flat, pointed): (Vec<&Weight>, Vec<&Weight>) =
            self.generators.iter().partition(|g| dot(&grading, g).is_zero());
        let units = IntegerLattice::from_generators(dim, &flat.into_iter().cloned().collect::<Vec<_>>());
        let degs: Vec<BigInt> = pointed.iter().map(|g| dot(&grading, g)).collect();
        fn go(
            k: usize,
            rest: &IntVec,
            left: &BigInt,
            pointed: &[&Weight],
            degs: &[BigInt],
            units: &IntegerLattice,
        ) -> bool {
            if left.is_zero() {
                return units.contains(rest);
            }
            if k == pointed.len() || left.is_negative() {
                return false;
            }
            let mut r = rest.clone();
            let mut l = left.clone();
            loop {
                if go(k + 1, &r, &l, pointed, degs, units) {
                    return true;
                }
                l -= &degs[k];
                if l.is_negative() {
                    return false;
                }
                r = sub(&r, pointed[k]);
            }
        }
        go(0, &w.to_vec(), &dot(&grading, w), &pointed, &degs, &units)
    }

    /// Same normal monoid: equal lattices and equal cones.
    pub fn same_normal_monoid(&self, other: &WeightMonoid) -> bool {
        self.lattice == other.lattice && self.cone.same_as(&other.cone)
    }

    /// Whether the primitive functional `delta` in `(ZΓ)*` is a positive
    /// multiple of `β∨|_{ZΓ}` for the simple root `j`.
    pub fn is_positive_multiple_of_coroot(&self, delta: &[BigInt], j: usize) -> bool {
        let cr = self.coroot_restriction(j);
        !is_zero(&cr) && same_ray(delta, &cr)
    }
}
