//! Exact chamber homology of `GL(N)` for a single Bernstein component.
//!
//! The pipeline is purely combinatorial: component shapes and the rank
//! formula ([`spectrum`]), lattice chains and hereditary orders
//! ([`lattices`], [`orders`]), affine permutations, parahoric subgroups and
//! types ([`weyl`]), and integer homology by Smith normal form
//! ([`homology`]). The [`gl3`] module assembles and checks the five little
//! complexes of `GL(3)`, and [`cli`] is the command-line front end.
//!
//! ```
//! use gln_chamber::gl3::verify_theorem4;
//!
//! let summary = verify_theorem4().unwrap();
//! assert!(summary.rows.iter().all(|r| r.passed));
//! ```

pub mod cli;
pub mod error;
pub mod gl3;
pub mod homology;
pub mod lattices;
pub mod orders;
pub mod spectrum;
pub mod weyl;

pub use error::{Error, Result};

// The book chapters are compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    mod spectrum {}
    #[doc = include_str!("../../../book/src/lattices.md")]
    mod lattices {}
    #[doc = include_str!("../../../book/src/weyl.md")]
    mod weyl {}
    #[doc = include_str!("../../../book/src/types.md")]
    mod types {}
    #[doc = include_str!("../../../book/src/homology.md")]
    mod homology {}
    #[doc = include_str!("../../../book/src/gl3.md")]
    mod gl3 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
