//! Integer homology: Smith normal form, finite free chain complexes, the
//! totalization of the two-column double complex, and the assembly of the
//! chamber complex of a component from an induction table.

mod chamber;
mod complex;
mod snf;

pub use chamber::{
    add_chain, add_term, assemble, chain_to_vector, chamber_boundary, gl3_boundary,
    gl3_top_boundary, incidence, invariant_subcomplex, is_vertex_compatible, Chain,
    InductionTable, InvariantComplex, Located,
};
pub use complex::{
    homology_of, rational_rank, totalize, totalize_with_vertical, ChainComplex, HomologyGroup,
    HomologyResult, Totalization,
};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};
