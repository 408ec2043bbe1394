use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid component: {0}")]
    InvalidComponent(String),
    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("not in the root lattice")]
    NotInRootLattice,
    #[error("index {0} is not a simple root")]
    NotSimpleRoot(usize),
    #[error("weight is not dominant")]
    NotDominant,
    #[error("empty input")]
    EmptyInput,
    #[error("monoid is not normal")]
    NotNormal,
    #[error("monoid is not G-saturated")]
    NotGSaturated,
    #[error("simple root {0} is not in the lattice of the monoid")]
    AlphaNotInLattice(usize),
    #[error("{0} simple roots exceed the subset-search cap of 12")]
    TooManySimpleRoots(usize),
    #[error("the union of the feasible subsets is not feasible")]
    UniquenessViolated,
    #[error("group is not a torus")]
    NotTorus,
    #[error("group is not SL(2) x C^x in standard coordinates")]
    WrongGroup,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("point is not a vertex of the polytope")]
    NotAVertex,
    #[error("tangent cone is not full-dimensional in the lattice")]
    DegenerateDimension,
    #[error("vertex lies outside the dominant chamber")]
    VertexOutsideChamber,
    #[error("invalid local model: {0}")]
    InvalidLocalModel(String),
    #[error("input point is not a vertex (it lies in the hull of the others)")]
    RedundantPoint,
    #[error("invariant violated: {0}")]
    InvariantViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
