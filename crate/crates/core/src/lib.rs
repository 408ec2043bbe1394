//! Weight monoids of affine spherical varieties: smoothness criteria,
//! spherical roots and moment-polytope checks, in exact arithmetic.

pub mod admiss;
pub mod enumerate;
pub mod error;
pub mod exactla;
pub mod monoid;
pub mod polytope;
pub mod rootsys;
pub mod sl2c;
pub mod sphroots;
pub mod verdict;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/monoids.md")]
    mod monoids {}
    #[doc = include_str!("../../../book/src/verdicts.md")]
    mod verdicts {}
    #[doc = include_str!("../../../book/src/sl2c.md")]
    mod sl2c {}
    #[doc = include_str!("../../../book/src/polytopes.md")]
    mod polytopes {}
    #[doc = include_str!("../../../book/src/enumerators.md")]
    mod enumerators {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
