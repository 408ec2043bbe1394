//! Hermite and Smith normal forms, determinants, kernels, rational solves.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{rat, IntMatrix, IntVec, RatVec};

/// Column Hermite normal form: `m · u = h` with `u` unimodular.
#[derive(Clone, Debug)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Number of nonzero columns of `h` (the rank of `m`).
    pub rank: usize,
    /// Pivot row of each nonzero column.
    pub pivots: Vec<usize>,
}

/// Smith normal form: `u · m · v = d` with `u`, `v` unimodular.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = self.d.nrows().min(self.d.ncols());
        (0..n).map(|i| self.d[(i, i)].clone()).filter(|x| !x.is_zero()).collect()
    }
}

/// Coefficients `(s, t, p, q)` of a unimodular 2x2 step sending `(a, b)` to
/// `(gcd, 0)`. Plain subtraction when `a | b`, which keeps entries small.
fn elimination_step(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt, BigInt) {
    if !a.is_zero() && (b % a).is_zero() {
        let one = BigInt::one();
        if a.is_negative() {
            return (-&one, BigInt::zero(), -(b / a), one);
        }
        return (one.clone(), BigInt::zero(), -(b / a), one);
    }
    let (g, s, t) = ext_gcd(a, b);
    (s, t, -(b / &g), a / &g)
}

fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Column-style HNF. The first `rank` columns of `h` are a canonical basis of
/// the lattice spanned by the columns of `m`: pivot rows strictly increase,
/// pivots are positive, and entries left of a pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> Hnf {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(cols);
    let mut c = 0;
    let mut pivots = Vec::new();
    for r in 0..rows {
        if c == cols {
            break;
        }
        for j in c + 1..cols {
            if h[(r, j)].is_zero() {
                continue;
            }
            let (s, t, p, q) = elimination_step(&h[(r, c)], &h[(r, j)]);
            h.combine_cols(c, j, &s, &t, &p, &q);
            u.combine_cols(c, j, &s, &t, &p, &q);
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_col(c);
            u.negate_col(c);
        }
        let piv = h[(r, c)].clone();
        for k in 0..c {
            let f = h[(r, k)].div_floor(&piv);
            if !f.is_zero() {
                let nf = -f;
                h.add_col_multiple(k, c, &nf);
                u.add_col_multiple(k, c, &nf);
            }
        }
        pivots.push(r);
        c += 1;
    }
    Hnf { h, u, rank: c, pivots }
}

/// Smith normal form by alternating row and column elimination.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !d[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        d.swap_rows(t, bi);
        u.swap_rows(t, bi);
        d.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let (s, x, p, q) = elimination_step(&d[(t, t)], &d[(i, t)]);
                d.combine_rows(t, i, &s, &x, &p, &q);
                u.combine_rows(t, i, &s, &x, &p, &q);
                dirty = true;
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let (s, x, p, q) = elimination_step(&d[(t, t)], &d[(t, j)]);
                d.combine_cols(t, j, &s, &x, &p, &q);
                v.combine_cols(t, j, &s, &x, &p, &q);
                dirty = true;
            }
            if dirty {
                continue;
            }
            // divisibility of the trailing block by the pivot
            let piv = d[(t, t)].clone();
            let mut bad = None;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if !(&d[(i, j)] % &piv).is_zero() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    Snf { d, u, v }
}

/// Fraction-free (Bareiss) determinant of a square matrix.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "determinant of a non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
        }
        prev = a[(k, k)].clone();
    }
    sign * &a[(n - 1, n - 1)]
}

/// Row-reduces a rational system; returns reduced rows and pivot columns.
fn rref(mut a: Vec<RatVec>, ncols: usize) -> (Vec<RatVec>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..a[i].len() {
                    let v = &f * &a[r][j];
                    a[i][j] -= v;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    (a, pivots)
}

/// Rank of an integer matrix.
pub fn rank(m: &IntMatrix) -> usize {
    hermite_normal_form(m).rank
}

/// Some rational solution of `m · x = b`, if one exists.
pub fn solve_rational(m: &IntMatrix, b: &[BigRational]) -> Option<RatVec> {
    let (rows, cols) = (m.nrows(), m.ncols());
    assert_eq!(rows, b.len());
    let aug: Vec<RatVec> = (0..rows)
        .map(|i| {
            let mut r: RatVec = m.row(i).iter().map(rat).collect();
            r.push(b[i].clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = red[i][cols].clone();
    }
    Some(x)
}

/// Saturated basis of `{x ∈ Z^n : m · x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> Vec<IntVec> {
    let hnf = hermite_normal_form(m);
    (hnf.rank..m.ncols()).map(|j| hnf.u.col(j)).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// gcd of the `l × l` minors of the `k × l` matrix whose columns are `vectors`.
pub fn gcd_of_maximal_minors(vectors: &[IntVec]) -> BigInt {
    let l = vectors.len();
    let k = vectors.first().map_or(0, |v| v.len());
    if l > k {
        return BigInt::zero();
    }
    let m = IntMatrix::from_cols(k, vectors);
    let cols: Vec<usize> = (0..l).collect();
    let mut g = BigInt::zero();
    for rows in combinations(k, l) {
        g = g.gcd(&determinant(&m.select(&rows, &cols)));
        if g.is_one() {
            break;
        }
    }
    g
}

/// Whether `vectors` (each in `Z^k`, at most `k` of them) extend to a basis of
/// `Z^k`: the gcd of the maximal minors is 1. The empty family qualifies.
pub fn part_of_basis(vectors: &[IntVec]) -> bool {
    vectors.is_empty() || gcd_of_maximal_minors(vectors).is_one()
}

/// Same predicate as [`part_of_basis`], computed from the Smith normal form:
/// all elementary divisors equal 1 and the rank is full.
pub fn part_of_basis_snf(vectors: &[IntVec]) -> bool {
    if vectors.is_empty() {
        return true;
    }
    let k = vectors[0].len();
    if vectors.len() > k {
        return false;
    }
    let snf = smith_normal_form(&IntMatrix::from_cols(k, vectors));
    let divs = snf.divisors();
    divs.len() == vectors.len() && divs.iter().all(One::is_one)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_reconstructs() {
        let m = IntMatrix::from_i64(&[&[0, -1], &[3, 1]]);
        let hnf = hermite_normal_form(&m);
        assert_eq!(m.mul(&hnf.u), hnf.h);
        assert_eq!(determinant(&hnf.u).abs(), BigInt::one());
        assert_eq!(hnf.rank, 2);
    }

    #[test]
    fn hnf_fixed_points() {
        let id = IntMatrix::identity(3);
        let hnf = hermite_normal_form(&id);
        assert_eq!(hnf.h, id);
        assert_eq!(hnf.u, id);
        let d = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        let hnf = hermite_normal_form(&d);
        assert_eq!(hnf.h, d);
        assert_eq!(hnf.u, IntMatrix::identity(2));
    }

    #[test]
    fn snf_small() {
        let d = IntMatrix::from_i64(&[&[2, 0], &[0, 4]]);
        assert_eq!(smith_normal_form(&d).d, d);
        let m = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d);
        let divs: Vec<i64> = snf.divisors().iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(divs, vec![2, 6, 12]);
    }

    #[test]
    fn minors() {
        assert!(part_of_basis(&[super::super::ivec(&[1, 0, 0]), super::super::ivec(&[0, 2, 1])]));
        assert!(!part_of_basis(&[super::super::ivec(&[2])]));
        assert!(part_of_basis_snf(&[super::super::ivec(&[1, 0, 0]), super::super::ivec(&[0, 2, 1])]));
    }

    #[test]
    fn bareiss() {
        let m = IntMatrix::from_i64(&[&[0, 2, 1], &[3, 1, 0], &[1, 1, 1]]);
        assert_eq!(determinant(&m), BigInt::from(-4));
    }

    #[test]
    fn kernel_is_saturated() {
        let m = IntMatrix::from_i64(&[&[2, 4, 6]]);
        let k = integer_kernel(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(super::super::is_zero(&m.mul_vec(v)));
        }
        assert!(part_of_basis(&k));
    }
}
