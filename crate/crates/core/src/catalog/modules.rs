use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar};
use crate::homcore::HomHopfAlgebra;
use crate::homrep::HomRepresentation;

/// H as a Hom-bimodule over itself: both actions are the multiplication, μ = α.
pub fn regular_module(h: &Arc<HomHopfAlgebra>) -> HomRepresentation {
    HomRepresentation::new(h.clone(), h.alpha().clone())
        .and_then(|r| r.with_left_action(h.mul().clone()))
        .and_then(|r| r.with_right_action(h.mul().clone()))
        .expect("regular module shapes")
        .certify()
}

/// H as a Hom-comodule over itself: both coactions are Δ, μ = α.
pub fn regular_comodule(h: &Arc<HomHopfAlgebra>) -> HomRepresentation {
    HomRepresentation::new(h.clone(), h.alpha().clone())
        .and_then(|r| r.with_left_coaction(h.comul().clone()))
        .and_then(|r| r.with_right_coaction(h.comul().clone()))
        .expect("regular comodule shapes")
        .certify()
}

/// One-dimensional action matrix `v ◁ e_i = values[i] v` (usable on either side).
pub fn character_action(h: &HomHopfAlgebra, values: &[Scalar]) -> Result<Matrix> {
    if values.len() != h.dim() {
        return Err(Error::Shape(format!("{} character values for a {}-dimensional algebra", values.len(), h.dim())));
    }
    Ok(Matrix::row_vector(h.field(), values))
}

/// One-dimensional right Hom-module with μ = id and action given by a character.
pub fn character_module(h: &Arc<HomHopfAlgebra>, values: &[Scalar]) -> Result<HomRepresentation> {
    let act = character_action(h, values)?;
    Ok(HomRepresentation::new(h.clone(), Matrix::identity(h.field(), 1))?.with_right_action(act)?.certify())
}

/// One-dimensional left Hom-module with μ = id and action given by a character.
pub fn left_character_module(h: &Arc<HomHopfAlgebra>, values: &[Scalar]) -> Result<HomRepresentation> {
    let act = character_action(h, values)?;
    Ok(HomRepresentation::new(h.clone(), Matrix::identity(h.field(), 1))?.with_left_action(act)?.certify())
}
