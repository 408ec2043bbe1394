//! Exact feasibility for small linear systems (phase-one simplex, Bland's rule).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{dot, rat, IntVec, RatVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x (relation) rhs`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub coeffs: RatVec,
    pub relation: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(coeffs: RatVec, relation: Relation, rhs: BigRational) -> Self {
        Constraint { coeffs, relation, rhs }
    }
}

/// A point `x ≥ 0` with `n` coordinates satisfying all constraints, if any.
pub fn feasible_point(n: usize, constraints: &[Constraint]) -> Option<RatVec> {
    let m = constraints.len();
    let slack_count = constraints.iter().filter(|c| c.relation != Relation::Eq).count();
    let width = n + slack_count + m;
    let mut t: Vec<RatVec> = Vec::with_capacity(m);
    let mut rhs: RatVec = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut s = n;
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.coeffs.len(), n);
        let mut row = vec![BigRational::zero(); width];
        row[..n].clone_from_slice(&c.coeffs);
        match c.relation {
            Relation::Le => {
                row[s] = BigRational::one();
                s += 1;
            }
            Relation::Ge => {
                row[s] = -BigRational::one();
                s += 1;
            }
            Relation::Eq => {}
        }
        let mut b = c.rhs.clone();
        if b.is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
            b = -b;
        }
        row[n + slack_count + i] = BigRational::one();
        basis.push(n + slack_count + i);
        t.push(row);
        rhs.push(b);
    }
    let art = n + slack_count;
    let cost = |j: usize| if j >= art { BigRational::one() } else { BigRational::zero() };
    loop {
        let mut entering = None;
        for j in 0..width {
            if basis.contains(&j) {
                continue;
            }
            let mut d = cost(j);
            for i in 0..m {
                if !t[i][j].is_zero() {
                    d -= cost(basis[i]) * &t[i][j];
                }
            }
            if d.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(j) = entering else { break };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][j].is_positive() {
                let ratio = &rhs[i] / &t[i][j];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        // phase one is bounded below by zero, so a leaving row always exists
        let (r, _) = leave.expect("phase-one objective is bounded");
        let p = t[r][j].clone();
        for x in t[r].iter_mut() {
            *x = &*x / &p;
        }
        rhs[r] = &rhs[r] / &p;
        for i in 0..m {
            if i != r && !t[i][j].is_zero() {
                let f = t[i][j].clone();
                for k in 0..width {
                    if !t[r][k].is_zero() {
                        let v = &f * &t[r][k];
                        t[i][k] -= v;
                    }
                }
                let v = &f * &rhs[r];
                rhs[i] -= v;
            }
        }
        basis[r] = j;
    }
    let infeasible = (0..m).any(|i| basis[i] >= art && !rhs[i].is_zero());
    if infeasible {
        return None;
    }
    let mut x = vec![BigRational::zero(); n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] = rhs[i].clone();
        }
    }
    Some(x)
}

/// Whether some combination `Σ c_i v_i` with every `c_i > 0` satisfies
/// `⟨σ, Σ c_i v_i⟩ ≤ 0` for every `σ` in `constraints`.
///
/// By homogeneity this is the same as asking for `c_i ≥ 1`, which is a plain
/// feasibility problem.
pub fn strict_positive_combination_meets(vectors: &[IntVec], constraints: &[IntVec]) -> bool {
    strict_positive_witness(vectors, constraints).is_some()
}

pub(crate) fn strict_positive_witness(vectors: &[IntVec], constraints: &[IntVec]) -> Option<RatVec> {
    let k = vectors.len();
    if k == 0 {
        return Some(Vec::new());
    }
    let rows: Vec<Constraint> = constraints
        .iter()
        .map(|s| {
            let a: Vec<BigInt> = vectors.iter().map(|v| dot(v, s)).collect();
            let total: BigInt = a.iter().sum();
            Constraint::new(a.iter().map(rat).collect(), Relation::Le, rat(&-total))
        })
        .collect();
    let d = feasible_point(k, &rows)?;
    Some(d.into_iter().map(|x| x + BigRational::one()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{ivec, rvec};

    #[test]
    fn simple_systems() {
        // x + y = 1, x - y >= 0.5
        let c = vec![
            Constraint::new(rvec(&[1, 1]), Relation::Eq, BigRational::one()),
            Constraint::new(rvec(&[1, -1]), Relation::Ge, BigRational::new(1.into(), 2.into())),
        ];
        let x = feasible_point(2, &c).unwrap();
        assert!(&x[0] - &x[1] >= BigRational::new(1.into(), 2.into()));
        // x <= -1 with x >= 0
        let c = vec![Constraint::new(rvec(&[1]), Relation::Le, -BigRational::one())];
        assert!(feasible_point(1, &c).is_none());
    }

    #[test]
    fn strict_combination() {
        assert!(strict_positive_combination_meets(&[ivec(&[-1, 0])], &[ivec(&[1, 0])]));
        assert!(!strict_positive_combination_meets(&[ivec(&[1, 0])], &[ivec(&[1, 0])]));
        // needs both vectors with weight ratio
        let vs = [ivec(&[2, -1]), ivec(&[-1, 2])];
        assert!(!strict_positive_combination_meets(&vs, &[ivec(&[1, 0]), ivec(&[0, 1])]));
        assert!(!strict_positive_combination_meets(&vs, &[ivec(&[1, 1])]));
        assert!(strict_positive_combination_meets(&vs, &[ivec(&[1, 0])]));
    }
}
