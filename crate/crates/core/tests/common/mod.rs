//! Brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use weightmon::exactla::{ivec, RationalCone};
use weightmon::monoid::WeightMonoid;
use weightmon::sphroots::{localization_feasible, sigma_n_general};

pub fn small(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| x.to_i64().expect("small entry")).collect()
}

/// Leibniz determinant; fine for the 5x5 matrices used here.
pub fn leibniz(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut total = 0i128;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut sign = 1i128;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    sign = -sign;
                }
            }
        }
        total += sign * (0..n).map(|i| m[i][perm[i]]).product::<i128>();
        // next permutation in lexicographic order
        let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

pub fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// `k` vectors in `Z^l` extend to a basis iff the gcd of the `k x k` minors is 1.
pub fn minors_oracle(vs: &[Vec<i64>], l: usize) -> bool {
    let k = vs.len();
    if k > l {
        return false;
    }
    let mut g = 0i128;
    for rows in subsets(l, k) {
        let m: Vec<Vec<i128>> = rows.iter().map(|&r| vs.iter().map(|v| v[r] as i128).collect()).collect();
        g = gcd(g, leibniz(&m));
    }
    g == 1
}

pub fn box_points(d: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..d {
        out = out.into_iter().flat_map(|p: Vec<i64>| (-radius..=radius).map(move |x| [p.clone(), vec![x]].concat())).collect();
    }
    out
}

pub fn representable(p: &[i64], gens: &[Vec<i64>], cone: &RationalCone, memo: &mut HashMap<Vec<i64>, bool>) -> bool {
    if p.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&b) = memo.get(p) {
        return b;
    }
    let mut ok = false;
    for g in gens {
        let q: Vec<i64> = p.iter().zip(g).map(|(a, b)| a - b).collect();
        // the last coordinate drops with every step, so this terminates
        if cone.contains(&ivec(&q)) && representable(&q, gens, cone, memo) {
            ok = true;
            break;
        }
    }
    memo.insert(p.to_vec(), ok);
    ok
}

/// Brute-force `S_Γ`: the union of every feasible subset, without pruning.
pub fn union_of_feasible(m: &WeightMonoid) -> (Vec<usize>, bool) {
    let sigma = sigma_n_general(m).unwrap();
    let r = m.group().rank();
    let mut union = HashSet::new();
    for mask in 0u32..(1 << r) {
        let f: Vec<usize> = (0..r).filter(|&j| mask >> j & 1 == 1).collect();
        if localization_feasible(m, &sigma, &f) {
            union.extend(f);
        }
    }
    let mut u: Vec<usize> = union.into_iter().collect();
    u.sort();
    let feasible = localization_feasible(m, &sigma, &u);
    (u, feasible)
}
