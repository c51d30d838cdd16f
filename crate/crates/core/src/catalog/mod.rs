//! Deterministic desk-scale instances, a uniform tensor view of every
//! structure, and perturbation utilities.

mod hopf;
mod instances;
mod modules;
mod perturb;
mod structure;
mod yd;

pub use hopf::{cyclic_twist, group_algebra, power_map, sweedler, sweedler_scaling, sweedler_twist};
pub use instances::{family, parse_instance_params, Family, InstanceDescriptor, FAMILIES, MAX_ORDER};
pub use modules::{character_action, character_module, left_character_module, regular_comodule, regular_module};
pub use perturb::{apply_perturbation, perturb, Perturbation, PerturbationStream};
pub use structure::{Kind, NamedTensor, Structure, TENSOR_NAMES};
pub use yd::{adjoint_yd, graded_yd, graded_yd_over, sweedler_yd, sweedler_yd_over};
