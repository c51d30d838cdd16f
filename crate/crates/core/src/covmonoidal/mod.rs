//! The tensor product over H of covariant Hom-bimodules, its associator and
//! unit constraints, the free bicovariant construction and the braiding.

mod braiding;
mod tensor;

pub use braiding::{
    braiding_between, braiding_bicov, braiding_bicov_inverse, braiding_inverse_between, free_bicovariant,
    hexagons_bicov, verify_braiding_bicov, verify_braiding_closed_forms, verify_monoidal_coherence,
};
pub use tensor::{
    associator, associator_data, associator_inverse, descend, tensor_morphisms, tensor_over_h, tensor_over_h_unchecked,
    unit_left, unit_right, AssociatorData, TensorOverH,
};
