//! Input documents and their conversion to library types.

use std::fmt;

use num_bigint::BigInt;
use serde::Deserialize;
use weightmon::admiss::AdmissibleTriple;
use weightmon::exactla::{parse_rational, IntMatrix, IntVec, IntegerLattice, RatVec};
use weightmon::monoid::WeightMonoid;
use weightmon::polytope::{LocalModel, Polytope};
use weightmon::rootsys::{build_group, CartanType, DynkinType, GroupDatum};

/// Anything wrong with the input document. Maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<weightmon::Error> for InputError {
    fn from(e: weightmon::Error) -> Self {
        InputError(e.to_string())
    }
}

fn bad<T>(msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(msg.into()))
}

/// An integer literal: a JSON number, or a decimal string for values
/// beyond 64 bits.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum IntLit {
    Small(i64),
    Big(String),
}

impl IntLit {
    fn value(&self) -> Result<BigInt, InputError> {
        match self {
            IntLit::Small(x) => Ok(BigInt::from(*x)),
            IntLit::Big(s) => s.trim().parse().map_err(|_| InputError(format!("not an integer: {s:?}"))),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentSpec {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
}

/// Explicit root datum for groups not written as simple factors times a
/// torus in standard coordinates, such as `GL(2)`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RootDatumSpec {
    pub dim: usize,
    pub roots: Vec<Vec<IntLit>>,
    pub coroots: Vec<Vec<IntLit>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    #[serde(default)]
    pub components: Vec<ComponentSpec>,
    #[serde(default)]
    pub torus_rank: usize,
    pub root_datum: Option<RootDatumSpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorsSpec {
    pub generators: Vec<Vec<IntLit>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeSpec {
    pub vertices: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LocalModelSpec {
    pub vertex: usize,
    pub target_group: GroupSpec,
    pub matrix: Vec<Vec<IntLit>>,
    /// Pairs `[ambient simple root, target simple root]`, 0-based.
    pub root_correspondence: Vec<[usize; 2]>,
}

/// `(S, S^p, Σ)`: 0-based simple-root indices and `Σ` as coefficient
/// vectors in the simple roots.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleSpec {
    pub s: Vec<usize>,
    #[serde(default)]
    pub sp: Vec<usize>,
    #[serde(default)]
    pub sigma: Vec<Vec<IntLit>>,
}

/// The whole input document.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub group: GroupSpec,
    pub monoid: Option<GeneratorsSpec>,
    pub polytope: Option<PolytopeSpec>,
    pub lattice: Option<GeneratorsSpec>,
    #[serde(default)]
    pub local_models: Vec<LocalModelSpec>,
    pub triple: Option<TripleSpec>,
}

impl ProblemSpec {
    pub fn parse(text: &str) -> Result<Self, InputError> {
        serde_json::from_str(text).map_err(|e| InputError(format!("malformed input: {e}")))
    }

    pub fn group(&self) -> Result<GroupDatum, InputError> {
        self.group.build()
    }

    pub fn monoid(&self) -> Result<WeightMonoid, InputError> {
        let g = self.group()?;
        let Some(m) = &self.monoid else { return bad("input has no monoid.generators") };
        let gens = int_rows(&m.generators, g.dim(), "monoid generator")?;
        Ok(WeightMonoid::new(&g, &gens)?)
    }

    pub fn lattice(&self, dim: usize) -> Result<IntegerLattice, InputError> {
        let Some(l) = &self.lattice else { return bad("input has no lattice.generators") };
        let gens = int_rows(&l.generators, dim, "lattice generator")?;
        Ok(IntegerLattice::from_generators(dim, &gens))
    }

    pub fn polytope(&self) -> Result<Polytope, InputError> {
        let g = self.group()?;
        let Some(p) = &self.polytope else { return bad("input has no polytope.vertices") };
        let mut vs: Vec<RatVec> = Vec::new();
        for row in &p.vertices {
            if row.len() != g.dim() {
                return bad(format!("vertex has {} coordinates, expected {}", row.len(), g.dim()));
            }
            let v: Option<RatVec> = row.iter().map(|s| parse_rational(s)).collect();
            match v {
                Some(v) => vs.push(v),
                None => return bad(format!("not a rational: {row:?}")),
            }
        }
        Ok(Polytope::new(&g, &vs)?)
    }

    pub fn local_models(&self) -> Result<Vec<LocalModel>, InputError> {
        let dim = self.group()?.dim();
        let mut out = Vec::new();
        for lm in &self.local_models {
            let target = lm.target_group.build()?;
            let rows = int_rows(&lm.matrix, dim, "local model matrix row")?;
            if rows.len() != target.dim() {
                return bad(format!("local model matrix has {} rows, expected {}", rows.len(), target.dim()));
            }
            out.push(LocalModel {
                vertex: lm.vertex,
                target,
                matrix: IntMatrix::from_rows(dim, &rows),
                roots: lm.root_correspondence.iter().map(|p| (p[0], p[1])).collect(),
            });
        }
        Ok(out)
    }

    pub fn triple(&self) -> Result<Option<AdmissibleTriple>, InputError> {
        let Some(t) = &self.triple else { return Ok(None) };
        let rank = self.group()?.rank();
        if let Some(&j) = t.s.iter().chain(&t.sp).find(|&&j| j >= rank) {
            return bad(format!("simple root index {j} out of range"));
        }
        let sigma = int_rows(&t.sigma, rank, "triple sigma entry")?;
        Ok(Some(AdmissibleTriple::new(&t.s, &t.sp, &sigma)))
    }
}

impl GroupSpec {
    fn build(&self) -> Result<GroupDatum, InputError> {
        if let Some(rd) = &self.root_datum {
            if !self.components.is_empty() || self.torus_rank != 0 {
                return bad("give either root_datum or components/torus_rank, not both");
            }
            let roots = int_rows(&rd.roots, rd.dim, "root")?;
            let coroots = int_rows(&rd.coroots, rd.dim, "coroot")?;
            return Ok(GroupDatum::from_root_datum(rd.dim, &roots, &coroots)?);
        }
        let mut comps = Vec::new();
        for c in &self.components {
            let mut letters = c.ty.trim().chars();
            let ty = match (letters.next().and_then(|l| DynkinType::from_letter(l.to_ascii_uppercase())), letters.next()) {
                (Some(t), None) => t,
                _ => return bad(format!("unknown component type {:?}", c.ty)),
            };
            comps.push(CartanType::new(ty, c.rank)?);
        }
        Ok(build_group(&comps, self.torus_rank)?)
    }
}

fn int_rows(rows: &[Vec<IntLit>], dim: usize, what: &str) -> Result<Vec<IntVec>, InputError> {
    let mut out = Vec::new();
    for r in rows {
        if r.len() != dim {
            return bad(format!("{what} has {} entries, expected {dim}", r.len()));
        }
        out.push(r.iter().map(IntLit::value).collect::<Result<IntVec, _>>()?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_big_integers() {
        let spec = ProblemSpec::parse(
            r#"{"group": {"components": [{"type": "A", "rank": 1}]},
                "monoid": {"generators": [["123456789012345678901234567890"]]}}"#,
        )
        .unwrap();
        let m = spec.monoid().unwrap();
        assert_eq!(m.generators()[0][0].to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn rejects_bad_shapes() {
        let spec = ProblemSpec::parse(
            r#"{"group": {"components": [{"type": "A", "rank": 2}]}, "monoid": {"generators": [[1]]}}"#,
        )
        .unwrap();
        assert!(spec.monoid().is_err());
        assert!(ProblemSpec::parse(r#"{"group": {}, "extra": 1}"#).is_err());
        let spec = ProblemSpec::parse(r#"{"group": {"components": [{"type": "Q", "rank": 2}]}}"#).unwrap();
        assert!(spec.group().is_err());
    }

    #[test]
    fn root_datum_group() {
        let spec = ProblemSpec::parse(
            r#"{"group": {"root_datum": {"dim": 2, "roots": [[2, -1]], "coroots": [[1, 0]]}}}"#,
        )
        .unwrap();
        assert_eq!(spec.group().unwrap().rank(), 1);
    }
}
