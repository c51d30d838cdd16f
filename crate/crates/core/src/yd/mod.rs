//! Yetter–Drinfel'd Hom-modules: the twisted YD condition, a coaction
//! solver, the braided monoidal structure, and the functors to and from
//! bicovariant Hom-bimodules.

mod category;
mod equivalence;
mod module;
mod solve;

pub use category::{
    is_yd_morphism, verify_yd_braiding, yd_associator, yd_associator_inverse, yd_braiding, yd_braiding_inverse,
    yd_coherence, yd_hexagons, yd_tensor, yd_unit_left, yd_unit_right,
};
pub use equivalence::{
    functor_f, functor_g, phi2, unit_iso, verify_braided_equivalence, verify_phi2, verify_phi2_coherence,
    verify_round_trips, Phi2,
};
pub use module::{trivial_yd, verify_yd, yd_direct_sum, YDModule};
pub use solve::{yd_solve_coactions, CoactionSolutions};
pub(crate) use module::yd_sides;
