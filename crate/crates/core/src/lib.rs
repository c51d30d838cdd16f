//! Exact computer algebra for finite-dimensional monoidal Hom-Hopf algebras,
//! their covariant Hom-bimodules and Yetter-Drinfel'd Hom-modules.

pub mod catalog;
pub mod cli;
pub mod covmonoidal;
pub mod error;
pub mod exactlin;
pub mod homcore;
pub mod homrep;
pub mod yd;

pub use error::{Error, Result};
