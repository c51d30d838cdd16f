//! Monoidal Hom-algebras, Hom-coalgebras, Hom-bialgebras and Hom-Hopf
//! algebras: types, axiom verifiers, the Yau twist, convolution and the
//! adjoint Hom-actions.

mod algebra;
mod report;

pub use algebra::{
    adjoint_left, adjoint_left_map, adjoint_right, adjoint_right_map, antipode_inverse, basis_vector, convolution,
    verify_adjoint_left_module_algebra, verify_adjoint_right_module_algebra, verify_hom_algebra, verify_hom_bialgebra,
    verify_hom_coalgebra, verify_hom_hopf, yau_twist, HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra,
};
pub use report::{Check, Status, VerificationReport, Witness};
