//! Smooth weight monoids of `SL(2) × C^×`.
//!
//! Coordinates are `(ω, ε)`: `ω` the fundamental weight of `SL(2)`, `ε` the
//! identity character of `C^×`, so `α = 2ω = (2, 0)` and `α∨ = (1, 0)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactla::{ivec, same_ray, IntVec, IntegerLattice};
use crate::monoid::WeightMonoid;
use crate::rootsys::{group, GroupDatum};

/// `SL(2) × C^×` in standard coordinates.
pub fn sl2c_group() -> GroupDatum {
    group("A1", 1).expect("A1 with one torus factor")
}

/// Which of `∅`, `{α}`, `{2α}` the set `Σ^N` is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sl2cSigma {
    Empty,
    Alpha,
    TwoAlpha,
}

impl Sl2cSigma {
    /// The elements, in weight coordinates.
    pub fn elements(self) -> Vec<IntVec> {
        match self {
            Sl2cSigma::Empty => vec![],
            Sl2cSigma::Alpha => vec![ivec(&[2, 0])],
            Sl2cSigma::TwoAlpha => vec![ivec(&[4, 0])],
        }
    }
}

impl fmt::Display for Sl2cSigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sl2cSigma::Empty => "∅",
            Sl2cSigma::Alpha => "{α}",
            Sl2cSigma::TwoAlpha => "{2α}",
        })
    }
}

/// One of the fourteen families of smooth weight monoids, numbered 1 to 14.
/// Unused parameters are zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sl2cFamily {
    pub item: u8,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

/// Parameter names used by each item, in order.
pub fn param_names(item: u8) -> &'static [&'static str] {
    match item {
        1 => &[],
        2 | 3 | 4 | 9 | 12 | 14 => &["b"],
        5 => &["a"],
        6 | 13 => &["b", "c"],
        7 | 8 | 10 | 11 => &["a", "b"],
        _ => &[],
    }
}

impl Sl2cFamily {
    /// Validates the side conditions of the item.
    pub fn new(item: u8, params: &[i64]) -> Result<Self> {
        let names = param_names(item);
        if !(1..=14).contains(&item) {
            return Err(Error::InvalidParams(format!("no item {item}")));
        }
        if params.len() != names.len() {
            return Err(Error::InvalidParams(format!("item {item} takes {} parameters", names.len())));
        }
        let mut f = Sl2cFamily { item, a: 0, b: 0, c: 0 };
        for (n, &v) in names.iter().zip(params) {
            match *n {
                "a" => f.a = v,
                "b" => f.b = v,
                _ => f.c = v,
            }
        }
        let (a, b, c) = (f.a, f.b, f.c);
        let ok = match item {
            1 | 4 => true,
            2 | 9 => b > 0,
            3 | 12 | 14 => b != 0,
            5 => a == 2 || a == 4,
            6 => b > 0 && 2 * c.abs() <= b,
            7 => (a == 2 || a == 4) && b > 0,
            8 => (a == 2 || a == 4) && b != 0,
            10 => a > 0 && b != 0,
            11 => a > 0 && b > 0,
            13 => c != 0,
            _ => false,
        };
        if ok {
            Ok(f)
        } else {
            Err(Error::InvalidParams(format!("side conditions of item {item} fail for {params:?}")))
        }
    }

    pub fn params(&self) -> Vec<(&'static str, i64)> {
        param_names(self.item)
            .iter()
            .map(|&n| (n, match n {
                "a" => self.a,
                "b" => self.b,
                _ => self.c,
            }))
            .collect()
    }

    /// Generators as listed for the item.
    pub fn generators(&self) -> Vec<IntVec> {
        let (a, b, c) = (self.a, self.b, self.c);
        let v = |x: i64, y: i64| ivec(&[x, y]);
        match self.item {
            1 => vec![],
            2 => vec![v(0, b), v(0, -b)],
            3 => vec![v(0, b)],
            4 => vec![v(1, b)],
            5 => vec![v(a, 0)],
            6 => vec![v(1, c), v(0, b), v(0, -b)],
            7 => vec![v(a, 0), v(0, b), v(0, -b)],
            8 => vec![v(a, 0), v(0, b)],
            9 => vec![v(2, b), v(2, -b), v(0, 2 * b), v(0, -2 * b)],
            10 => vec![v(2, 0), v(a, b)],
            11 => vec![v(a, b), v(a, -b), v(2, 0)],
            12 => vec![v(2, b), v(0, 2 * b)],
            13 => vec![v(1, b), v(0, c)],
            14 => vec![v(4, 0), v(0, 2 * b), v(2, b)],
            _ => unreachable!("validated item"),
        }
    }

    pub fn monoid(&self) -> WeightMonoid {
        WeightMonoid::new(&sl2c_group(), &self.generators()).expect("family generators are dominant")
    }

    /// `Σ^N` of the family, as listed.
    pub fn sigma_n(&self) -> Sl2cSigma {
        match self.item {
            5 | 7 | 8 | 9 | 12 | 14 => Sl2cSigma::TwoAlpha,
            10 | 11 => Sl2cSigma::Alpha,
            _ => Sl2cSigma::Empty,
        }
    }
}

impl fmt::Display for Sl2cFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "item {}", self.item)?;
        let p = self.params();
        if !p.is_empty() {
            let s: Vec<String> = p.iter().map(|(n, v)| format!("{n}={v}")).collect();
            write!(f, " ({})", s.join(", "))?;
        }
        Ok(())
    }
}

/// The weight monoid of a row of the finer 17-row listing, where some
/// families are split by `a`. `params` follow [`param_names`] of the family.
pub fn row_instance(row: u8, params: &[i64]) -> Result<WeightMonoid> {
    let item = row_item(row).ok_or_else(|| Error::InvalidParams(format!("no row {row}")))?;
    let f = Sl2cFamily::new(item, params)?;
    let row_ok = match row {
        5 => f.a == 2,
        6 => f.a == 4,
        8 => f.a == 2,
        9 => f.a == 4,
        12 => f.a == 2,
        13 => f.a == 4,
        _ => true,
    };
    if !row_ok {
        return Err(Error::InvalidParams(format!("row {row} fixes a different a")));
    }
    Ok(f.monoid())
}

/// Family of each row (rows split items 5, 7 and 8 by `a`).
pub fn row_item(row: u8) -> Option<u8> {
    Some(match row {
        1 => 1,
        2 => 2,
        3 => 3,
        4 => 4,
        5 | 6 => 5,
        7 => 6,
        8 | 9 => 7,
        10 => 9,
        11 => 13,
        12 | 13 => 8,
        14 => 10,
        15 => 11,
        16 => 12,
        17 => 14,
        _ => return None,
    })
}

fn check(m: &WeightMonoid) -> Result<()> {
    if !m.group().is_standard_sl2c() {
        return Err(Error::WrongGroup);
    }
    m.require_normal()
}

fn small(x: &BigInt) -> Result<i64> {
    x.to_i64().ok_or_else(|| Error::InvalidParams("coordinate exceeds 64 bits".into()))
}

fn pair(v: &[BigInt]) -> Result<(i64, i64)> {
    Ok((small(&v[0])?, small(&v[1])?))
}

/// Primitive lattice vectors on the extremal rays of `Q≥0 Γ`.
fn primitive_rays(m: &WeightMonoid) -> Vec<IntVec> {
    m.cone().rays().iter().filter_map(|r| m.lattice().primitive_on_ray(r)).collect()
}

/// `Σ^N(Γ)` from the closed-form description for this group.
pub fn sigma_n_sl2c(m: &WeightMonoid) -> Result<Sl2cSigma> {
    check(m)?;
    let l = m.lattice();
    let alpha = ivec(&[2, 0]);
    let two_alpha = ivec(&[4, 0]);
    // {2α}: 2α ∈ ZΓ ⊆ ⟨2ω, ε⟩, plus the ray condition when rank 2 and the
    // cone is not the whole chamber
    let even = l.basis().iter().all(|v| v[0].is_even());
    if even && l.contains(&two_alpha) {
        let whole = m.rank() == 2 && !m.cone().is_pointed();
        if m.rank() < 2 || whole {
            return Ok(Sl2cSigma::TwoAlpha);
        }
        let rays = primitive_rays(m);
        let on_eps: Vec<&IntVec> = rays.iter().filter(|r| r[0].is_zero()).collect();
        let off: Vec<&IntVec> = rays.iter().filter(|r| !r[0].is_zero()).collect();
        if let ([w], [uv]) = (on_eps.as_slice(), off.as_slice()) {
            // uα + vε with u > 0, and wε with vw ≥ 0
            if uv[0].is_positive() && !(&uv[1] * &w[1]).is_negative() {
                return Ok(Sl2cSigma::TwoAlpha);
            }
        }
    }
    // {α}: some λ ∈ Γ with ⟨α∨, λ⟩ > 0, ZΓ = Zα ⊕ Zλ, and the cone is
    // ⟨λ, γ⟩ for γ one of three shapes
    if m.rank() == 2 && m.cone().is_pointed() && l.contains(&alpha) {
        let rays = primitive_rays(m);
        for (i, lam) in rays.iter().enumerate() {
            let other = &rays[1 - i];
            // ⟨α∨, λ⟩ is the ω-coordinate
            let k = &lam[0];
            if !k.is_positive() || lam[1].is_zero() {
                continue;
            }
            let basis = IntegerLattice::from_generators(2, &[alpha.clone(), lam.clone()]);
            if basis != *l {
                continue;
            }
            // other = xα + yλ
            let y = BigRational::new(other[1].clone(), lam[1].clone());
            let x = (BigRational::from_integer(other[0].clone()) - &y * BigRational::from_integer(k.clone()))
                / BigRational::from_integer(BigInt::from(2));
            let reflected: IntVec = vec![k * BigInt::from(2) - &lam[0], -lam[1].clone()];
            if same_ray(other, &reflected) || same_ray(other, &alpha) || (x.is_positive() && y.is_positive()) {
                return Ok(Sl2cSigma::Alpha);
            }
        }
    }
    Ok(Sl2cSigma::Empty)
}

fn fold_mod(c: i64, b: i64) -> i64 {
    let r = c.rem_euclid(b);
    if 2 * r > b {
        r - b
    } else {
        r
    }
}

/// Candidate families read off from `Γ`'s units, rays and lattice.
fn candidates(m: &WeightMonoid) -> Result<Vec<(u8, Vec<i64>)>> {
    let hb = m.hilbert_basis();
    let mut out: Vec<(u8, Vec<i64>)> = Vec::new();
    match (m.rank(), hb.units.len()) {
        (0, _) => out.push((1, vec![])),
        (1, 1) => {
            let (_, w) = pair(&hb.units[0])?;
            out.push((2, vec![w.abs()]));
        }
        (1, _) => {
            let (x, y) = pair(&hb.irreducibles[0])?;
            out.push((3, vec![y]));
            out.push((4, vec![y]));
            out.push((5, vec![x]));
        }
        (2, 1) => {
            let (_, w) = pair(&hb.units[0])?;
            let w = w.abs();
            let (x, t) = pair(&hb.irreducibles[0])?;
            if w > 0 {
                out.push((6, vec![w, fold_mod(t, w)]));
            }
            out.push((7, vec![x, w]));
            if w % 2 == 0 {
                out.push((9, vec![w / 2]));
            }
        }
        (2, _) => {
            let rays: Vec<(i64, i64)> = primitive_rays(m).iter().map(|r| pair(r)).collect::<Result<_>>()?;
            for (i, &(x1, y1)) in rays.iter().enumerate() {
                for (j, &(x2, y2)) in rays.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    out.push((8, vec![x1, y2]));
                    out.push((13, vec![y1, y2]));
                    out.push((12, vec![y1]));
                    if y2 % 2 == 0 {
                        out.push((14, vec![y2 / 2]));
                    }
                    out.push((10, vec![x2, y2]));
                    out.push((11, vec![x1, y1]));
                }
            }
        }
        _ => {}
    }
    Ok(out)
}

/// The family of `Γ`, or `None` when `Γ` is not smooth.
///
/// ```
/// use weightmon::exactla::ivec;
/// use weightmon::monoid::WeightMonoid;
/// use weightmon::sl2c::{classify_sl2c, sl2c_group};
/// let g = sl2c_group();
/// let m = WeightMonoid::new(&g, &[ivec(&[2, 0]), ivec(&[3, 1])]).unwrap();
/// assert_eq!(classify_sl2c(&m).unwrap().unwrap().item, 10);
/// let bad = WeightMonoid::new(&g, &[ivec(&[3, 0]), ivec(&[0, 1])]).unwrap();
/// assert!(classify_sl2c(&bad).unwrap().is_none());
/// ```
pub fn classify_sl2c(m: &WeightMonoid) -> Result<Option<Sl2cFamily>> {
    check(m)?;
    for (item, params) in candidates(m)? {
        let Ok(f) = Sl2cFamily::new(item, &params) else { continue };
        let fm = f.monoid();
        if fm.is_normal() && fm.same_normal_monoid(m) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// All family instances with parameters bounded by `k` in absolute value.
pub fn family_grid(k: i64) -> Vec<Sl2cFamily> {
    let mut out = Vec::new();
    for item in 1..=14u8 {
        let n = param_names(item).len();
        let range: Vec<i64> = (-k..=k).collect();
        let mut idx = vec![0usize; n];
        loop {
            let p: Vec<i64> = idx.iter().map(|&i| range[i]).collect();
            if let Ok(f) = Sl2cFamily::new(item, &p) {
                out.push(f);
            }
            let mut j = 0;
            loop {
                if j == n {
                    break;
                }
                idx[j] += 1;
                if idx[j] < range.len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
            if j == n {
                break;
            }
        }
    }
    out
}
