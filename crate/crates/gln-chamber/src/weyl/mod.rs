//! The extended affine Weyl group of `GL(N)`, its finite parabolic
//! subgroups, and the combinatorics of depth-zero types on facets of the
//! standard apartment.

mod affine;
mod arrangement;
pub mod characters;
mod parabolic;
mod torus;

pub use affine::AffinePermutation;
pub use arrangement::{Arrangement, Constituent, OrbitIrrep, TypeEngine};
pub use parabolic::{
    double_cosets, double_cosets_between, parabolic_elements, parabolic_with_words, reduced_word,
    word_to_string, ParahoricLabel,
};
pub use torus::{
    compact_intertwining, decompose_induced, disjointness, extended_stabilizer_membership,
    finite_stabilizer, hom_dimension, RocheGroup, TorusCharacterData,
};
