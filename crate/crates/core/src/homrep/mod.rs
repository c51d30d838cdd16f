//! Hom-modules, Hom-comodules and covariant Hom-bimodules: verifiers,
//! coinvariants, the projections P_L / P_R, induced actions, the free
//! covariant constructions and the structure maps θ / θ'.

mod coinvariants;
mod free;
mod representation;
mod verify;

pub use coinvariants::{
    adjoint_left_on, adjoint_right_on, coinvariants_left, coinvariants_right, induced_left_action,
    induced_left_action_map, induced_right_action, induced_right_action_map, left_coinvariant_data,
    left_coinvariant_module, projector_left, projector_right, right_coinvariant_data, right_coinvariant_module, theta,
    theta_right, CoinvariantData,
};
pub use free::{free_left_covariant, free_right_covariant};
pub(crate) use representation::same_algebra;
pub use representation::{direct_sum, unit_object, CovarianceFlags, HomRepresentation, Side};
pub use verify::{
    is_morphism, verify_bicovariant, verify_bimodule, verify_comodule, verify_left_covariant, verify_module,
    verify_right_covariant, Respect,
};
