use std::sync::Arc;

use crate::error::{Error, Result};
use crate::homcore::HomHopfAlgebra;

use super::representation::{same_algebra, HomRepresentation, Side};
use super::verify::verify_module;

fn require_module(n: &HomRepresentation, side: Side) -> Result<()> {
    if !verify_module(n, side)?.passed() {
        return Err(Error::Unverified(format!("{side:?} Hom-module")));
    }
    Ok(())
}

/// Left-covariant structure on H⊗N for a right Hom-module N:
/// `h(g⊗n) = α^{-1}(h)g⊗ν(n)`, `(h⊗n)g = hg_1⊗n◁g_2`, `ρ(h⊗n) = α(h_1)⊗(h_2⊗ν^{-1}(n))`.
pub fn free_left_covariant(h: &Arc<HomHopfAlgebra>, n: &HomRepresentation) -> Result<HomRepresentation> {
    if !same_algebra(h, &n.over) {
        return Err(Error::Shape("module over a different Hom-Hopf algebra".into()));
    }
    require_module(n, Side::Right)?;
    let (dh, dn) = (h.dim(), n.dim);
    let (ai, ni) = (h.alpha_inv()?, n.mu_inv()?);
    let phi = n.phi()?;
    let d = |dims: &[usize]| n.diagram(dims);
    let left = d(&[dh, dh, dn]).map(0, ai).merge(0, h.mul()).map(1, &n.mu).matrix();
    let right = d(&[dh, dn, dh])
        .split(2, h.comul(), dh, dh)
        .permute(&[0, 2, 1, 3])
        .merge(0, h.mul())
        .merge(1, phi)
        .matrix();
    let rho = d(&[dh, dn]).split(0, h.comul(), dh, dh).map(0, h.alpha()).map(2, ni).matrix();
    Ok(HomRepresentation::new(h.clone(), h.alpha().kron(&n.mu))?
        .with_left_action(left)?
        .with_right_action(right)?
        .with_left_coaction(rho)?
        .certify())
}

/// Right-covariant structure on N⊗H for a left Hom-module N:
/// `(m⊗h)g = μ(m)⊗hα^{-1}(g)`, `g(m⊗h) = g_1▷m⊗g_2h`, `σ(m⊗h) = (μ^{-1}(m)⊗h_1)⊗α(h_2)`.
pub fn free_right_covariant(h: &Arc<HomHopfAlgebra>, n: &HomRepresentation) -> Result<HomRepresentation> {
    if !same_algebra(h, &n.over) {
        return Err(Error::Shape("module over a different Hom-Hopf algebra".into()));
    }
    require_module(n, Side::Left)?;
    let (dh, dn) = (h.dim(), n.dim);
    let (ai, ni) = (h.alpha_inv()?, n.mu_inv()?);
    let psi = n.psi()?;
    let d = |dims: &[usize]| n.diagram(dims);
    let right = d(&[dn, dh, dh]).map(2, ai).merge(1, h.mul()).map(0, &n.mu).matrix();
    let left = d(&[dh, dn, dh])
        .split(0, h.comul(), dh, dh)
        .permute(&[0, 2, 1, 3])
        .merge(0, psi)
        .merge(1, h.mul())
        .matrix();
    let sigma = d(&[dn, dh]).split(1, h.comul(), dh, dh).map(0, ni).map(2, h.alpha()).matrix();
    Ok(HomRepresentation::new(h.clone(), n.mu.kron(h.alpha()))?
        .with_left_action(left)?
        .with_right_action(right)?
        .with_right_coaction(sigma)?
        .certify())
}
