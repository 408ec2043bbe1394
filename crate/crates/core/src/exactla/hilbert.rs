//! Hilbert bases of rational cones by enumerating fundamental parallelepipeds.
//!
//! Desk-scale: the number of enumerated points is the sum of the simplicial
//! volumes of a triangulation, which is fine up to rank eight or so for the
//! cones that show up in practice.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::normal_form::{hermite_normal_form, integer_kernel, smith_normal_form, solve_rational};
use super::{dot, rat, sub, IntMatrix, IntVec, RationalCone};

/// Minimal generating data of the monoid `C ∩ Z^n`: a basis of the unit group
/// (lineality ∩ lattice) and the irreducible elements of the pointed quotient,
/// lifted to `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub units: Vec<IntVec>,
    pub irreducibles: Vec<IntVec>,
}

impl HilbertBasis {
    /// Generators of the monoid: irreducibles and both signs of each unit.
    pub fn monoid_generators(&self) -> Vec<IntVec> {
        let mut g = self.irreducibles.clone();
        for u in &self.units {
            g.push(u.clone());
            g.push(super::neg(u));
        }
        g
    }

    pub fn len(&self) -> usize {
        self.units.len() + self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Hilbert basis of `cone ∩ Z^dim`.
pub fn hilbert_basis(cone: &RationalCone) -> HilbertBasis {
    let dim = cone.dim();
    // saturated basis of the span
    let w: Vec<IntVec> = if cone.equations().is_empty() {
        super::IntegerLattice::full(dim).basis().to_vec()
    } else {
        integer_kernel(&IntMatrix::from_rows(dim, cone.equations()))
    };
    let d = w.len();
    if d == 0 {
        return HilbertBasis { units: Vec::new(), irreducibles: Vec::new() };
    }
    let wm = IntMatrix::from_cols(dim, &w);
    let facets: Vec<IntVec> = cone.facets().iter().map(|f| wm.transpose().mul_vec(f)).collect();
    let (u, r, h1) = if facets.is_empty() {
        (IntMatrix::identity(d), 0, Vec::new())
    } else {
        let hnf = hermite_normal_form(&IntMatrix::from_rows(d, &facets));
        let r = hnf.rank;
        let h1: Vec<IntVec> = (0..facets.len()).map(|i| hnf.h.row(i)[..r].to_vec()).collect();
        (hnf.u, r, h1)
    };
    let lift = |z: &[BigInt]| -> IntVec {
        let mut y = z.to_vec();
        y.resize(d, BigInt::zero());
        wm.mul_vec(&u.mul_vec(&y))
    };
    let units: Vec<IntVec> = (r..d)
        .map(|j| {
            let mut e = vec![BigInt::zero(); d];
            e[j] = BigInt::from(1);
            wm.mul_vec(&u.mul_vec(&e))
        })
        .collect();
    let irreducibles = if r == 0 {
        Vec::new()
    } else {
        let pointed = RationalCone::from_inequalities(r, &h1, &[]);
        pointed_hilbert(&pointed).iter().map(|z| lift(z)).collect()
    };
    HilbertBasis { units, irreducibles }
}

/// Hilbert basis of a pointed full-dimensional cone in `Z^r`.
fn pointed_hilbert(cone: &RationalCone) -> Vec<IntVec> {
    let r = cone.dim();
    let grading: IntVec =
        (0..r).map(|i| cone.facets().iter().map(|f| f[i].clone()).sum()).collect();
    let mut candidates: BTreeSet<(BigInt, IntVec)> = BTreeSet::new();
    for ray in cone.rays() {
        candidates.insert((dot(&grading, ray), ray.clone()));
    }
    for simplex in triangulate(cone.rays(), r) {
        for p in parallelepiped_points(&simplex) {
            candidates.insert((dot(&grading, &p), p));
        }
    }
    let mut irreducible: Vec<IntVec> = Vec::new();
    for (_, p) in candidates {
        if irreducible.iter().any(|h| cone.contains(&sub(&p, h))) {
            continue;
        }
        irreducible.push(p);
    }
    irreducible.sort();
    irreducible
}

/// A triangulation of the pointed cone spanned by `rays` (a `d`-dimensional
/// span) into simplicial cones, using only the given rays.
pub(crate) fn triangulate(rays: &[IntVec], d: usize) -> Vec<Vec<IntVec>> {
    if rays.len() == d {
        return vec![rays.to_vec()];
    }
    let dim = rays[0].len();
    let apex = &rays[0];
    let cone = RationalCone::from_generators(dim, rays);
    let mut out = Vec::new();
    for f in cone.facets() {
        if dot(f, apex).is_zero() {
            continue;
        }
        let on: Vec<IntVec> = rays.iter().filter(|r| dot(f, r).is_zero()).cloned().collect();
        for mut s in triangulate(&on, d - 1) {
            s.insert(0, apex.clone());
            out.push(s);
        }
    }
    out
}

/// Nonzero lattice points of `{Σ λ_i r_i : 0 ≤ λ_i < 1}`.
fn parallelepiped_points(simplex: &[IntVec]) -> Vec<IntVec> {
    let n = simplex.len();
    let rm = IntMatrix::from_cols(n, simplex);
    let snf = smith_normal_form(&rm);
    let divs: Vec<BigInt> = (0..n).map(|i| snf.d[(i, i)].abs()).collect();
    if divs.iter().all(|x| *x == BigInt::from(1)) {
        return Vec::new();
    }
    let unit = |j: usize| -> Vec<BigRational> {
        (0..n).map(|i| rat(&BigInt::from((i == j) as i64))).collect()
    };
    let uinv: Vec<IntVec> = (0..n)
        .map(|j| solve_rational(&snf.u, &unit(j)).unwrap().iter().map(|x| x.to_integer()).collect())
        .collect();
    let rinv: Vec<Vec<BigRational>> = (0..n).map(|j| solve_rational(&rm, &unit(j)).unwrap()).collect();
    let mut out = Vec::new();
    let mut t = vec![BigInt::zero(); n];
    loop {
        // x = U^{-1} t
        let mut x = vec![BigInt::zero(); n];
        for (j, tj) in t.iter().enumerate() {
            if !tj.is_zero() {
                for i in 0..n {
                    x[i] += tj * &uinv[j][i];
                }
            }
        }
        // λ = R^{-1} x, reduce to fractional parts
        let mut lam = vec![BigRational::zero(); n];
        for (j, xj) in x.iter().enumerate() {
            if !xj.is_zero() {
                for i in 0..n {
                    lam[i] += &rinv[j][i] * rat(xj);
                }
            }
        }
        let frac: Vec<BigRational> = lam.iter().map(|l| l - l.floor()).collect();
        let mut p = vec![BigRational::zero(); n];
        for (j, fj) in frac.iter().enumerate() {
            if !fj.is_zero() {
                for i in 0..n {
                    p[i] += fj * rat(&simplex[j][i]);
                }
            }
        }
        let p: IntVec = p.iter().map(|v| v.to_integer()).collect();
        if !super::is_zero(&p) {
            out.push(p);
        }
        // next t
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            t[k] += 1;
            if t[k] < divs[k] {
                break;
            }
            t[k] = BigInt::zero();
            k += 1;
        }
    }
}

/// All points of `cone ∩ Z^dim` with every coordinate in `[-radius, radius]`.
pub fn lattice_points_in_box(cone: &RationalCone, radius: i64) -> Vec<IntVec> {
    let dim = cone.dim();
    let mut out = Vec::new();
    let mut x = vec![BigInt::from(-radius); dim];
    if dim == 0 {
        return vec![Vec::new()];
    }
    loop {
        if cone.contains(&x) {
            out.push(x.clone());
        }
        let mut k = 0;
        loop {
            if k == dim {
                return out;
            }
            x[k] += 1;
            if x[k] <= BigInt::from(radius) {
                break;
            }
            x[k] = BigInt::from(-radius);
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ivec;

    #[test]
    fn classic_cone() {
        let c = RationalCone::from_generators(2, &[ivec(&[1, 0]), ivec(&[1, 2])]);
        let hb = hilbert_basis(&c);
        assert!(hb.units.is_empty());
        assert_eq!(hb.irreducibles, vec![ivec(&[1, 0]), ivec(&[1, 1]), ivec(&[1, 2])]);
    }

    #[test]
    fn half_plane_units() {
        let c = RationalCone::from_generators(2, &[ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[0, -1])]);
        let hb = hilbert_basis(&c);
        assert_eq!(hb.units.len(), 1);
        assert!(crate::exactla::parallel(&hb.units[0], &ivec(&[0, 1])));
        assert_eq!(hb.irreducibles.len(), 1);
        assert_eq!(hb.irreducibles[0][0], BigInt::from(1));
    }

    #[test]
    fn non_simplicial() {
        let gens = [ivec(&[1, 1, 1]), ivec(&[-1, 1, 1]), ivec(&[1, -1, 1]), ivec(&[-1, -1, 1])];
        let c = RationalCone::from_generators(3, &gens);
        let hb = hilbert_basis(&c);
        // every lattice point at height one is irreducible
        assert_eq!(hb.irreducibles.len(), 9);
        assert!(hb.irreducibles.contains(&ivec(&[0, 0, 1])));
    }
}
