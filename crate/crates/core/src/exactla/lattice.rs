use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::normal_form::{determinant, hermite_normal_form};
use super::{rat, IntMatrix, IntVec, RatVec};

/// A sublattice of `Z^n`, stored by its column Hermite normal form basis.
///
/// Two lattices are equal exactly when their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntegerLattice {
    dim: usize,
    basis: Vec<IntVec>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for IntegerLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let b: Vec<Vec<String>> =
            self.basis.iter().map(|v| v.iter().map(|x| x.to_string()).collect()).collect();
        write!(f, "Lattice(dim={}, basis={:?})", self.dim, b)
    }
}

impl IntegerLattice {
    /// The lattice generated by `gens` inside `Z^dim`.
    pub fn from_generators(dim: usize, gens: &[IntVec]) -> Self {
        if gens.is_empty() {
            return IntegerLattice { dim, basis: Vec::new(), pivots: Vec::new() };
        }
        let m = IntMatrix::from_cols(dim, gens);
        let hnf = hermite_normal_form(&m);
        let basis = (0..hnf.rank).map(|j| hnf.h.col(j)).collect();
        IntegerLattice { dim, basis, pivots: hnf.pivots }
    }

    pub fn full(dim: usize) -> Self {
        let gens: Vec<IntVec> = (0..dim)
            .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        Self::from_generators(dim, &gens)
    }

    pub fn zero(dim: usize) -> Self {
        Self::from_generators(dim, &[])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Hermite basis vectors.
    pub fn basis(&self) -> &[IntVec] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_cols(self.dim, &self.basis)
    }

    /// Rational coordinates of `v` in the Hermite basis, if `v` lies in the
    /// rational span.
    pub fn rational_coords(&self, v: &[BigRational]) -> Option<RatVec> {
        assert_eq!(v.len(), self.dim);
        let mut c: RatVec = Vec::with_capacity(self.rank());
        for (j, &p) in self.pivots.iter().enumerate() {
            let mut r = v[p].clone();
            for (k, ck) in c.iter().enumerate() {
                r -= ck * rat(&self.basis[k][p]);
            }
            c.push(r / rat(&self.basis[j][p]));
        }
        // verify
        for i in 0..self.dim {
            let mut s = BigRational::zero();
            for (k, ck) in c.iter().enumerate() {
                s += ck * rat(&self.basis[k][i]);
            }
            if s != v[i] {
                return None;
            }
        }
        Some(c)
    }

    /// Integer coordinates of `v` in the Hermite basis, if `v` is in the lattice.
    pub fn coords(&self, v: &[BigInt]) -> Option<IntVec> {
        let c = self.rational_coords(&super::to_rational(v))?;
        c.iter().map(|x| x.is_integer().then(|| x.to_integer())).collect()
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coords(v).is_some()
    }

    pub fn in_span(&self, v: &[BigInt]) -> bool {
        self.rational_coords(&super::to_rational(v)).is_some()
    }

    /// Point with the given coordinates.
    pub fn point(&self, coords: &[BigInt]) -> IntVec {
        let mut out = vec![BigInt::zero(); self.dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            for i in 0..self.dim {
                out[i] += c * &b[i];
            }
        }
        out
    }

    /// Rational point with the given rational coordinates.
    pub fn rational_point(&self, coords: &[BigRational]) -> RatVec {
        let mut out = vec![BigRational::zero(); self.dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            for i in 0..self.dim {
                out[i] += c * rat(&b[i]);
            }
        }
        out
    }

    /// Restricts an ambient functional to the lattice: its values on the basis.
    pub fn restrict(&self, functional: &[BigInt]) -> IntVec {
        self.basis.iter().map(|b| super::dot(functional, b)).collect()
    }

    pub fn is_sublattice_of(&self, other: &IntegerLattice) -> bool {
        self.dim == other.dim && self.basis.iter().all(|b| other.contains(b))
    }

    /// Index `[other : self]` when `self ⊆ other` have the same rank.
    pub fn index_in(&self, other: &IntegerLattice) -> Option<BigInt> {
        if !self.is_sublattice_of(other) || self.rank() != other.rank() {
            return None;
        }
        let coords: Vec<IntVec> = self.basis.iter().map(|b| other.coords(b).unwrap()).collect();
        let r = other.rank();
        Some(determinant(&IntMatrix::from_cols(r, &coords)).abs())
    }

    /// The lattice `k · self`.
    pub fn scaled(&self, k: i64) -> IntegerLattice {
        let k = BigInt::from(k);
        let gens: Vec<IntVec> = self.basis.iter().map(|b| super::scale(&k, b)).collect();
        Self::from_generators(self.dim, &gens)
    }

    /// Sum of two lattices.
    pub fn sum(&self, other: &IntegerLattice) -> IntegerLattice {
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Self::from_generators(self.dim, &gens)
    }

    /// Smallest positive `k` with `k · v` in the lattice, for `v` in the span.
    pub fn order_of(&self, v: &[BigInt]) -> Option<BigInt> {
        let c = self.rational_coords(&super::to_rational(v))?;
        Some(c.iter().fold(BigInt::from(1), |l, x| l.lcm(x.denom())))
    }

    /// The primitive lattice vector on the ray through `v` (nonzero, in span).
    pub fn primitive_on_ray(&self, v: &[BigInt]) -> Option<IntVec> {
        let c = self.rational_coords(&super::to_rational(v))?;
        let ic = super::primitive_of_rational(&c);
        if super::is_zero(&ic) {
            return None;
        }
        Some(self.point(&ic))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ivec;

    #[test]
    fn membership_and_index() {
        let l = IntegerLattice::from_generators(2, &[ivec(&[1, 1]), ivec(&[1, -1])]);
        assert!(l.contains(&ivec(&[2, 0])));
        assert!(!l.contains(&ivec(&[1, 0])));
        assert_eq!(l.index_in(&IntegerLattice::full(2)), Some(BigInt::from(2)));
        let l2 = IntegerLattice::from_generators(2, &[ivec(&[2, 0]), ivec(&[1, 1])]);
        assert_eq!(l, l2);
    }

    #[test]
    fn primitive_ray() {
        let l = IntegerLattice::from_generators(2, &[ivec(&[2, 0]), ivec(&[0, 2])]);
        assert_eq!(l.primitive_on_ray(&ivec(&[1, 1])), Some(ivec(&[2, 2])));
    }
}
