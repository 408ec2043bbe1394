//! Smoothness decisions for weight monoids.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::admiss::{is_admissible, AdmissibleTriple, BlockMatch};
use crate::error::{Error, Result};
use crate::exactla::{
    dot, feasible_point, parallel, part_of_basis, rank, Constraint, IntMatrix, IntVec, IntegerLattice, Relation,
};
use crate::monoid::WeightMonoid;
use crate::rootsys::{DynkinType, GroupDatum, Weight};
use crate::sl2c::{classify_sl2c, Sl2cFamily};
use crate::sphroots::{elements, s_gamma, sigma_n_gsat, sigma_n_general, SphericalRoot};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Outcome {
    Smooth,
    NotSmooth,
    Undecided,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Toric,
    GSaturated,
    Sl2Cx,
    Reflective,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Data for the G-saturated route.
#[derive(Clone, Debug)]
pub struct GSatCertificate {
    pub sp: Vec<usize>,
    pub sigma_n: Vec<SphericalRoot>,
    pub s_gamma: Vec<usize>,
    pub triple: AdmissibleTriple,
    pub witness: Option<Vec<BlockMatch>>,
    /// Conditions (a), (b), (c) of the criterion.
    pub conditions: [bool; 3],
}

#[derive(Clone, Debug)]
pub enum Certificate {
    Toric { units: Vec<Weight>, irreducibles: Vec<Weight> },
    GSaturated(GSatCertificate),
    Sl2Cx { family: Option<Sl2cFamily>, sigma_n: Vec<Weight> },
    Reflective { checklist: Vec<(String, bool)>, sigma_n: Vec<Weight> },
    None,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub outcome: Outcome,
    pub route: Option<Route>,
    pub certificate: Certificate,
    /// The failed condition (NotSmooth) or the missing criterion (Undecided).
    pub reason: Option<String>,
}

impl Verdict {
    fn new(outcome: Outcome, route: Route, certificate: Certificate, reason: Option<String>) -> Self {
        Verdict { outcome, route: Some(route), certificate, reason }
    }

    /// `Σ^N(Γ)` recorded in the certificate, if any.
    pub fn sigma_n(&self) -> Option<Vec<Weight>> {
        match &self.certificate {
            Certificate::GSaturated(c) => Some(elements(&c.sigma_n)),
            Certificate::Sl2Cx { sigma_n, .. } | Certificate::Reflective { sigma_n, .. } => Some(sigma_n.clone()),
            _ => None,
        }
    }
}

/// Message used when no implemented criterion applies.
pub const GENERAL_CRITERION_MISSING: &str =
    "general smoothness criterion for non-G-saturated monoids is out of scope";

/// Smoothness over a torus: `Γ ≅ Z^u × N^p`.
pub fn check_toric_smooth(m: &WeightMonoid) -> Result<Verdict> {
    if !m.group().is_torus() {
        return Err(Error::NotTorus);
    }
    m.require_normal()?;
    let hb = m.hilbert_basis();
    let mut all = hb.units.clone();
    all.extend(hb.irreducibles.iter().cloned());
    let free = all.is_empty() || rank(&IntMatrix::from_cols(m.group().dim(), &all)) == all.len();
    let cert = Certificate::Toric { units: hb.units.clone(), irreducibles: hb.irreducibles.clone() };
    let (outcome, reason) = if free {
        (Outcome::Smooth, None)
    } else {
        (Outcome::NotSmooth, Some("Hilbert basis is linearly dependent".to_string()))
    };
    Ok(Verdict::new(outcome, Route::Toric, cert, reason))
}

/// The criterion for G-saturated monoids: part-of-basis, equal restrictions,
/// admissibility.
pub fn check_gsat_smooth(m: &WeightMonoid) -> Result<Verdict> {
    m.require_normal()?;
    let sigma_n = sigma_n_gsat(m)?;
    let sp = m.s_p();
    let sg = s_gamma(m, &sigma_n)?;
    let active: Vec<usize> = sg.iter().copied().filter(|a| !sp.contains(a)).collect();
    let mut restrictions: Vec<IntVec> = active.iter().map(|&j| m.coroot_restriction(j)).collect();
    restrictions.sort();
    restrictions.dedup();
    let cond_a = restrictions.len() <= m.rank() && part_of_basis(&restrictions);
    let mut cond_b = true;
    for (x, &i) in active.iter().enumerate() {
        for &j in &active[x + 1..] {
            if m.coroot_restriction(i) == m.coroot_restriction(j) {
                let s = crate::exactla::add(m.group().simple_root(i), m.group().simple_root(j));
                cond_b &= m.lattice().contains(&s);
            }
        }
    }
    let local: Vec<IntVec> = sigma_n
        .iter()
        .filter(|s| s.support.iter().all(|a| sg.contains(a)))
        .map(|s| s.coefficients.clone())
        .collect();
    let triple = AdmissibleTriple::new(&sg, &sp, &local);
    let witness = is_admissible(m.group(), &triple);
    let cond_c = witness.is_some();
    let reason = if !cond_a {
        Some("(a) coroot restrictions are not part of a basis of (ZΓ)*".to_string())
    } else if !cond_b {
        Some("(b) equal coroot restrictions without α+β ∈ ZΓ".to_string())
    } else if !cond_c {
        Some("(c) triple (S_Γ, S^p, Σ^N ∩ ZS_Γ) is not admissible".to_string())
    } else {
        None
    };
    let outcome = if reason.is_none() { Outcome::Smooth } else { Outcome::NotSmooth };
    let cert = GSatCertificate { sp, sigma_n, s_gamma: sg, triple, witness, conditions: [cond_a, cond_b, cond_c] };
    Ok(Verdict::new(outcome, Route::GSaturated, Certificate::GSaturated(cert), reason))
}

/// Whether `s_α(L) = L` for every simple root `α` in `roots`.
pub fn w_invariant_lattice(l: &IntegerLattice, g: &GroupDatum, roots: &[usize]) -> bool {
    g.lattice_is_w_invariant(l, roots)
}

/// Outcome of the reflectivity test, one line per condition.
#[derive(Clone, Debug)]
pub struct ReflectiveReport {
    pub full_rank: bool,
    pub walls_w_stable: bool,
    pub facets_meet_open_chamber: bool,
}

impl ReflectiveReport {
    pub fn holds(&self) -> bool {
        self.full_rank && self.walls_w_stable && self.facets_meet_open_chamber
    }
}

/// Whether the cone on `rays` (a face of a cone) contains a point with every
/// coroot pairing positive.
pub(crate) fn face_meets_open_chamber(g: &GroupDatum, rays: &[IntVec]) -> bool {
    if g.rank() == 0 {
        return true;
    }
    // x = Σ c_i r_i, c ≥ 0, ⟨α∨, x⟩ ≥ 1 for every α
    let cons: Vec<Constraint> = g
        .coroots()
        .iter()
        .map(|c| {
            let row: Vec<BigRational> = rays.iter().map(|r| BigRational::from_integer(dot(c, r))).collect();
            Constraint::new(row, Relation::Ge, BigRational::one())
        })
        .collect();
    feasible_point(rays.len(), &cons).is_some()
}

/// Reflectivity of a normal monoid: full rank, facet hyperplanes stable
/// under every simple reflection, every facet meets the open chamber.
pub fn check_reflective(m: &WeightMonoid) -> Result<ReflectiveReport> {
    m.require_normal()?;
    let g = m.group();
    let full_rank = m.full_rank();
    let facets = m.cone().facets();
    let walls_w_stable = full_rank
        && (0..g.rank()).all(|j| {
            facets.iter().all(|f| {
                let fr: Vec<BigRational> = f.iter().map(|x| BigRational::from_integer(x.clone())).collect();
                let image = crate::exactla::primitive_of_rational(&g.reflect_functional(j, &fr));
                facets.iter().any(|h| parallel(h, &image))
            })
        });
    let facets_meet_open_chamber =
        full_rank && facets.iter().all(|f| face_meets_open_chamber(g, &m.cone().rays_on(f)));
    Ok(ReflectiveReport { full_rank, walls_w_stable, facets_meet_open_chamber })
}

/// The sufficient criterion for reflective monoids. Never returns NotSmooth.
pub fn check_reflective_smooth(m: &WeightMonoid) -> Result<Verdict> {
    let rep = check_reflective(m)?;
    let g = m.group();
    let roots_in = (0..g.rank()).all(|j| m.lattice().contains(g.simple_root(j)));
    let e = m.e_of();
    let e_basis = e.len() <= m.rank() && part_of_basis(&e);
    let w_inv = w_invariant_lattice(m.lattice(), g, &(0..g.rank()).collect::<Vec<_>>());
    let checklist = vec![
        ("full rank".to_string(), rep.full_rank),
        ("facet hyperplanes W-stable".to_string(), rep.walls_w_stable),
        ("facets meet the open chamber".to_string(), rep.facets_meet_open_chamber),
        ("S ⊂ ZΓ".to_string(), roots_in),
        ("E(Γ) part of a basis of (ZΓ)*".to_string(), e_basis),
        ("ZΓ W-invariant".to_string(), w_inv),
    ];
    if !checklist.iter().all(|(_, ok)| *ok) {
        let missing = checklist.iter().find(|(_, ok)| !ok).map(|(n, _)| n.clone()).unwrap_or_default();
        return Ok(Verdict::new(
            Outcome::Undecided,
            Route::Reflective,
            Certificate::Reflective { checklist, sigma_n: vec![] },
            Some(format!("reflective criterion needs: {missing}")),
        ));
    }
    // consequences that must hold when the hypotheses do
    if g.components().iter().any(|c| c.cartan_type.ty != DynkinType::A || c.cartan_type.rank != 1) {
        return Err(Error::InvariantViolated("reflective criterion met but G is not of type (A1)^r".into()));
    }
    let sn = elements(&sigma_n_general(m)?);
    let mut s: Vec<Weight> = g.simple_roots().to_vec();
    s.sort();
    if sn != s {
        return Err(Error::InvariantViolated("reflective criterion met but Σ^N ≠ S".into()));
    }
    for d in &e {
        for j in 0..g.rank() {
            let a = m.coords(g.simple_root(j)).expect("S ⊂ ZΓ");
            if dot(d, &a).is_negative() {
                return Err(Error::InvariantViolated("⟨δ, α⟩ < 0 for a reflective monoid".into()));
            }
        }
    }
    Ok(Verdict::new(Outcome::Smooth, Route::Reflective, Certificate::Reflective { checklist, sigma_n: sn }, None))
}

/// Smoothness for the standard `SL(2) × C^×` datum via the family list.
pub fn check_sl2c_smooth(m: &WeightMonoid) -> Result<Verdict> {
    let family = classify_sl2c(m)?;
    let sigma_n = crate::sl2c::sigma_n_sl2c(m)?.elements();
    Ok(match family {
        Some(f) => Verdict::new(Outcome::Smooth, Route::Sl2Cx, Certificate::Sl2Cx { family: Some(f), sigma_n }, None),
        None => Verdict::new(
            Outcome::NotSmooth,
            Route::Sl2Cx,
            Certificate::Sl2Cx { family: None, sigma_n },
            Some("not one of the fourteen families".to_string()),
        ),
    })
}

/// Dispatch: torus, G-saturated, `SL(2) × C^×`, reflective, else Undecided.
///
/// ```
/// use weightmon::exactla::ivec;
/// use weightmon::monoid::WeightMonoid;
/// use weightmon::rootsys::group;
/// use weightmon::verdict::{smooth_verdict, Outcome};
/// let g = group("A1", 0).unwrap();
/// let smooth: Vec<i64> = (1..=12)
///     .filter(|&k| {
///         let m = WeightMonoid::new(&g, &[ivec(&[k])]).unwrap();
///         smooth_verdict(&m).unwrap().outcome == Outcome::Smooth
///     })
///     .collect();
/// assert_eq!(smooth, vec![1, 2, 4]);
/// ```
pub fn smooth_verdict(m: &WeightMonoid) -> Result<Verdict> {
    m.require_normal()?;
    let g = m.group();
    if g.is_torus() {
        return check_toric_smooth(m);
    }
    if m.is_g_saturated()? {
        return check_gsat_smooth(m);
    }
    if g.is_standard_sl2c() {
        return check_sl2c_smooth(m);
    }
    let refl = check_reflective_smooth(m)?;
    if refl.outcome == Outcome::Smooth {
        return Ok(refl);
    }
    Ok(Verdict { outcome: Outcome::Undecided, route: None, certificate: Certificate::None, reason: Some(GENERAL_CRITERION_MISSING.to_string()) })
}

/// Re-derives a verdict and compares outcome, route and `Σ^N`.
pub fn verify_certificate(m: &WeightMonoid, v: &Verdict) -> Result<bool> {
    let again = smooth_verdict(m)?;
    Ok(again.outcome == v.outcome && again.route == v.route && again.sigma_n() == v.sigma_n())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::ivec;
    use crate::rootsys::group;

    fn gl2(a: i64) -> WeightMonoid {
        let g = GroupDatum::from_root_datum(2, &[ivec(&[2, -1])], &[ivec(&[1, 0])]).unwrap();
        WeightMonoid::new(&g, &[ivec(&[1, a]), ivec(&[1, -(a + 1)])]).unwrap()
    }

    #[test]
    fn a1_three_not_smooth() {
        let g = group("A1", 0).unwrap();
        let v = check_gsat_smooth(&WeightMonoid::new(&g, &[ivec(&[3])]).unwrap()).unwrap();
        assert_eq!(v.outcome, Outcome::NotSmooth);
        assert!(v.reason.unwrap().starts_with("(a)"));
    }

    #[test]
    fn c2_model_smooth() {
        let g = group("C2", 0).unwrap();
        let m = WeightMonoid::g_saturated(&g, &IntegerLattice::full(2)).unwrap();
        assert_eq!(check_gsat_smooth(&m).unwrap().outcome, Outcome::Smooth);
    }

    #[test]
    fn a2_twice_lattice_smooth() {
        let g = group("A2", 0).unwrap();
        let m = WeightMonoid::g_saturated(&g, &IntegerLattice::full(2).scaled(2)).unwrap();
        assert_eq!(check_gsat_smooth(&m).unwrap().outcome, Outcome::Smooth);
    }

    #[test]
    fn toric_examples() {
        let t = group("", 2).unwrap();
        let m = WeightMonoid::new(&t, &[ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[0, -1])]).unwrap();
        assert_eq!(check_toric_smooth(&m).unwrap().outcome, Outcome::Smooth);
        let sq = WeightMonoid::new(&t, &[ivec(&[1, 1]), ivec(&[1, -1]), ivec(&[1, 0])]).unwrap();
        assert_eq!(check_toric_smooth(&sq).unwrap().outcome, Outcome::NotSmooth);
        let bad = WeightMonoid::new(&t, &[ivec(&[2, 0]), ivec(&[3, 0])]).unwrap();
        assert_eq!(check_toric_smooth(&bad).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn reflective_gl2() {
        for a in [1, 2, 3] {
            let m = gl2(a);
            assert!(check_reflective(&m).unwrap().holds());
            let v = smooth_verdict(&m).unwrap();
            assert_eq!(v.outcome, Outcome::Smooth);
            assert_eq!(v.route, Some(Route::Reflective));
        }
    }

    #[test]
    fn lattice_invariance() {
        let g = group("A2", 0).unwrap();
        let two = IntegerLattice::full(2).scaled(2);
        assert!(w_invariant_lattice(&two, &g, &[0, 1]));
        let w1 = IntegerLattice::from_generators(2, &[ivec(&[1, 0])]);
        assert!(!w_invariant_lattice(&w1, &g, &[0, 1]));
    }

    #[test]
    fn undecided_a2_torus() {
        let g = group("A2", 1).unwrap();
        let m = WeightMonoid::new(&g, &[ivec(&[1, 1, 0]), ivec(&[0, 0, 1])]).unwrap();
        assert!(!m.is_g_saturated().unwrap());
        let v = smooth_verdict(&m).unwrap();
        assert_eq!(v.outcome, Outcome::Undecided);
        assert_eq!(v.reason.as_deref(), Some(GENERAL_CRITERION_MISSING));
    }

    #[test]
    fn sl2c_dispatch() {
        let g = group("A1", 1).unwrap();
        let m = WeightMonoid::new(&g, &[ivec(&[2, 1]), ivec(&[0, 2])]).unwrap();
        let v = smooth_verdict(&m).unwrap();
        assert_eq!((v.outcome, v.route), (Outcome::Smooth, Some(Route::Sl2Cx)));
    }
}
