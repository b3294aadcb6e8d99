//! Finitely generated abelian groups and their homomorphisms, on top of an
//! exact integer Smith normal form.

mod group;
mod lattice;
mod matrix;
mod snf;

pub use group::{
    cokernel_of_hom, direct_sum, direct_sum_weighted, ell_primary_part, evaluate_invariant, fin_ab_from_relations,
    hom_check_compose, is_isomorphic, kernel_of_hom, AbHom, AdditiveInvariant, FinAbGroup,
};
pub(crate) use group::{kernel_subquotient_sparse, relation_vectors, subquotient_inclusion};
pub use lattice::{preimage_lattice, EchelonBasis, SparseRow, Subquotient};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, Snf};
