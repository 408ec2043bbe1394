//! Exact integer and rational linear algebra.
//!
//! Everything here works over [`BigInt`] and [`BigRational`]. Vectors are
//! plain `Vec`s; matrices are [`IntMatrix`] (row-major).

mod cone;
mod hilbert;
mod lattice;
mod lp;
mod matrix;
mod normal_form;

pub use cone::RationalCone;
pub use hilbert::{hilbert_basis, lattice_points_in_box, HilbertBasis};
pub use lattice::IntegerLattice;
pub use lp::{feasible_point, strict_positive_combination_meets, Constraint, Relation};
pub use matrix::IntMatrix;
pub use normal_form::{
    determinant, gcd_of_maximal_minors, hermite_normal_form, integer_kernel, part_of_basis,
    part_of_basis_snf, rank, smith_normal_form, solve_rational, Hnf, Snf,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Integer vector.
pub type IntVec = Vec<BigInt>;
/// Rational vector.
pub type RatVec = Vec<BigRational>;

/// Builds an integer vector from machine integers.
pub fn ivec(xs: &[i64]) -> IntVec {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

/// Builds a rational vector from machine integers.
pub fn rvec(xs: &[i64]) -> RatVec {
    xs.iter().map(|&x| BigRational::from_integer(x.into())).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[BigInt], b: &[BigRational]) -> BigRational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| y * BigRational::from_integer(x.clone()))
        .fold(BigRational::zero(), |s, t| s + t)
}

pub fn add(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[BigInt], b: &[BigInt]) -> IntVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(k: &BigInt, a: &[BigInt]) -> IntVec {
    a.iter().map(|x| k * x).collect()
}

pub fn neg(a: &[BigInt]) -> IntVec {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[BigInt]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// gcd of all entries (0 for the zero vector).
pub fn content(a: &[BigInt]) -> BigInt {
    a.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// Divides by the content; the zero vector is returned unchanged.
pub fn primitive(a: &[BigInt]) -> IntVec {
    let g = content(a);
    if g.is_zero() || g.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &g).collect()
}

/// Clears denominators of a rational vector and returns the primitive integer
/// vector on the same ray.
pub fn primitive_of_rational(a: &[BigRational]) -> IntVec {
    let l = a.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let v: IntVec = a.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    primitive(&v)
}

pub fn to_rational(a: &[BigInt]) -> RatVec {
    a.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// Whether `a` and `b` lie on the same open ray (or are both zero).
pub fn same_ray(a: &[BigInt], b: &[BigInt]) -> bool {
    if is_zero(a) || is_zero(b) {
        return is_zero(a) && is_zero(b);
    }
    primitive(a) == primitive(b)
}

/// Whether `a` and `b` span the same line.
pub fn parallel(a: &[BigInt], b: &[BigInt]) -> bool {
    same_ray(a, b) || same_ray(a, &neg(b))
}

/// Lexicographic sign normalization: flips the vector so that its first
/// nonzero entry is positive.
pub fn sign_normalized(a: &[BigInt]) -> IntVec {
    match a.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => neg(a),
        _ => a.to_vec(),
    }
}

pub(crate) fn rat(x: &BigInt) -> BigRational {
    BigRational::from_integer(x.clone())
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(BigRational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
