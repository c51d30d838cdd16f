use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::homcore::VerificationReport;

use super::representation::{HomRepresentation, Side};

fn mu_checks(m: &HomRepresentation, r: &mut VerificationReport) -> Result<Matrix> {
    let inv = m.mu_inv().ok().cloned();
    r.expect("mu_invertible", inv.is_some(), "mu is singular");
    inv.ok_or_else(|| Error::NotInvertible("mu".into()))
}

/// Hom-module laws: associativity, unit and morphism conditions.
pub fn verify_module(m: &HomRepresentation, side: Side) -> Result<VerificationReport> {
    let h = &m.over;
    let (d, dh) = (m.dim, m.hdim());
    let (al, mul) = (h.alpha(), h.mul());
    let mut r = VerificationReport::new();
    mu_checks(m, &mut r).ok();
    match side {
        Side::Right => {
            let phi = m.phi()?;
            let lhs = m.diagram(&[d, dh, dh]).merge(1, mul).map(0, &m.mu).merge(0, phi).matrix();
            let rhs = m.diagram(&[d, dh, dh]).merge(0, phi).map(1, al).merge(0, phi).matrix();
            r.compare("right_action_associativity", &lhs, &rhs, &[d, dh, dh]);
            let unit = m.diagram(&[d]).insert(1, h.unit()).merge(0, phi).matrix();
            r.compare("right_action_unit", &unit, &m.mu, &[d]);
            let lhs = m.diagram(&[d, dh]).merge(0, phi).map(0, &m.mu).matrix();
            let rhs = m.diagram(&[d, dh]).map(0, &m.mu).map(1, al).merge(0, phi).matrix();
            r.compare("right_action_morphism", &lhs, &rhs, &[d, dh]);
        }
        Side::Left => {
            let psi = m.psi()?;
            let lhs = m.diagram(&[dh, dh, d]).merge(1, psi).map(0, al).merge(0, psi).matrix();
            let rhs = m.diagram(&[dh, dh, d]).merge(0, mul).map(1, &m.mu).merge(0, psi).matrix();
            r.compare("left_action_associativity", &lhs, &rhs, &[dh, dh, d]);
            let unit = m.diagram(&[d]).insert(0, h.unit()).merge(0, psi).matrix();
            r.compare("left_action_unit", &unit, &m.mu, &[d]);
            let lhs = m.diagram(&[dh, d]).merge(0, psi).map(0, &m.mu).matrix();
            let rhs = m.diagram(&[dh, d]).map(0, al).map(1, &m.mu).merge(0, psi).matrix();
            r.compare("left_action_morphism", &lhs, &rhs, &[dh, d]);
        }
    }
    Ok(r)
}

/// Hom-comodule laws: coassociativity, counit and morphism conditions.
pub fn verify_comodule(m: &HomRepresentation, side: Side) -> Result<VerificationReport> {
    let h = &m.over;
    let (d, dh) = (m.dim, m.hdim());
    let (al, dl, eps) = (h.alpha(), h.comul(), h.counit());
    let mut r = VerificationReport::new();
    let names = match side {
        Side::Right => ["right_coaction_coassociativity", "right_coaction_counit", "right_coaction_morphism"],
        Side::Left => ["left_coaction_coassociativity", "left_coaction_counit", "left_coaction_morphism"],
    };
    match side {
        Side::Right => m.sigma()?,
        Side::Left => m.rho()?,
    };
    let (mi, ai) = match (mu_checks(m, &mut r), h.alpha_inv()) {
        (Ok(mi), Ok(ai)) => (mi, ai.clone()),
        _ => {
            for n in names {
                r.skip(n, "requires invertible mu and alpha");
            }
            return Ok(r);
        }
    };
    match side {
        Side::Right => {
            let sg = m.sigma()?;
            let lhs = m.diagram(&[d]).split(0, sg, d, dh).map(0, &mi).split(1, dl, dh, dh).matrix();
            let rhs = m.diagram(&[d]).split(0, sg, d, dh).split(0, sg, d, dh).map(2, &ai).matrix();
            r.compare(names[0], &lhs, &rhs, &[d]);
            let cu = m.diagram(&[d]).split(0, sg, d, dh).erase(1, eps).matrix();
            r.compare(names[1], &cu, &mi, &[d]);
            let lhs = m.diagram(&[d]).map(0, &m.mu).split(0, sg, d, dh).matrix();
            let rhs = m.diagram(&[d]).split(0, sg, d, dh).map(0, &m.mu).map(1, al).matrix();
            r.compare(names[2], &lhs, &rhs, &[d]);
        }
        Side::Left => {
            let rho = m.rho()?;
            let lhs = m.diagram(&[d]).split(0, rho, dh, d).split(0, dl, dh, dh).map(0, al).map(2, &mi).matrix();
            let rhs = m.diagram(&[d]).split(0, rho, dh, d).split(1, rho, dh, d).matrix();
            r.compare(names[0], &lhs, &rhs, &[d]);
            let cu = m.diagram(&[d]).split(0, rho, dh, d).erase(0, eps).matrix();
            r.compare(names[1], &cu, &mi, &[d]);
            let lhs = m.diagram(&[d]).map(0, &m.mu).split(0, rho, dh, d).matrix();
            let rhs = m.diagram(&[d]).split(0, rho, dh, d).map(0, al).map(1, &m.mu).matrix();
            r.compare(names[2], &lhs, &rhs, &[d]);
        }
    }
    Ok(r)
}

/// `(am)α(b) = α(a)(mb)`.
pub(crate) fn bimodule_compatibility(m: &HomRepresentation) -> Result<VerificationReport> {
    let (psi, phi) = (m.psi()?, m.phi()?);
    let (d, dh) = (m.dim, m.hdim());
    let al = m.over.alpha();
    let lhs = m.diagram(&[dh, d, dh]).merge(0, psi).map(1, al).merge(0, phi).matrix();
    let rhs = m.diagram(&[dh, d, dh]).merge(1, phi).map(0, al).merge(0, psi).matrix();
    let mut r = VerificationReport::new();
    r.compare("bimodule_compatibility", &lhs, &rhs, &[dh, d, dh]);
    Ok(r)
}

pub fn verify_bimodule(m: &HomRepresentation) -> Result<VerificationReport> {
    let mut r = verify_module(m, Side::Left)?;
    let right = verify_module(m, Side::Right)?;
    r.checks.extend(right.checks.into_iter().filter(|c| c.name != "mu_invertible"));
    r.absorb("", bimodule_compatibility(m)?);
    Ok(r)
}

/// `ρ((hm)α(g)) = Δ(α(h))(ρ(m)Δ(g))`.
pub(crate) fn left_covariance(m: &HomRepresentation) -> Result<VerificationReport> {
    let (psi, phi, rho) = (m.psi()?, m.phi()?, m.rho()?);
    let h = &m.over;
    let (d, dh) = (m.dim, m.hdim());
    let (al, mul, dl) = (h.alpha(), h.mul(), h.comul());
    let lhs = m.diagram(&[dh, d, dh]).merge(0, psi).map(1, al).merge(0, phi).split(0, rho, dh, d).matrix();
    let rhs = m
        .diagram(&[dh, d, dh])
        .split(2, dl, dh, dh)
        .split(1, rho, dh, d)
        .permute(&[0, 1, 3, 2, 4])
        .merge(1, mul)
        .merge(2, phi)
        .map(0, al)
        .split(0, dl, dh, dh)
        .permute(&[0, 2, 1, 3])
        .merge(0, mul)
        .merge(1, psi)
        .matrix();
    let mut r = VerificationReport::new();
    r.compare("left_covariance", &lhs, &rhs, &[dh, d, dh]);
    Ok(r)
}

/// `σ((hm)α(g)) = Δ(α(h))(σ(m)Δ(g))`.
pub(crate) fn right_covariance(m: &HomRepresentation) -> Result<VerificationReport> {
    let (psi, phi, sg) = (m.psi()?, m.phi()?, m.sigma()?);
    let h = &m.over;
    let (d, dh) = (m.dim, m.hdim());
    let (al, mul, dl) = (h.alpha(), h.mul(), h.comul());
    let lhs = m.diagram(&[dh, d, dh]).merge(0, psi).map(1, al).merge(0, phi).split(0, sg, d, dh).matrix();
    let rhs = m
        .diagram(&[dh, d, dh])
        .split(2, dl, dh, dh)
        .split(1, sg, d, dh)
        .permute(&[0, 1, 3, 2, 4])
        .merge(1, phi)
        .merge(2, mul)
        .map(0, al)
        .split(0, dl, dh, dh)
        .permute(&[0, 2, 1, 3])
        .merge(0, psi)
        .merge(1, mul)
        .matrix();
    let mut r = VerificationReport::new();
    r.compare("right_covariance", &lhs, &rhs, &[dh, d, dh]);
    Ok(r)
}

/// `m_{(-1)}⊗m_{(0)[0]}⊗m_{(0)[1]} = α(m_{[0](-1)})⊗m_{[0](0)}⊗α^{-1}(m_{[1]})`.
pub(crate) fn hom_commutativity(m: &HomRepresentation) -> Result<VerificationReport> {
    let (rho, sg) = (m.rho()?, m.sigma()?);
    let h = &m.over;
    let (d, dh) = (m.dim, m.hdim());
    let ai = h.alpha_inv()?;
    let lhs = m.diagram(&[d]).split(0, rho, dh, d).split(1, sg, d, dh).matrix();
    let rhs = m.diagram(&[d]).split(0, sg, d, dh).split(0, rho, dh, d).map(0, h.alpha()).map(2, ai).matrix();
    let mut r = VerificationReport::new();
    r.compare("hom_commutativity", &lhs, &rhs, &[d]);
    Ok(r)
}

pub fn verify_left_covariant(m: &HomRepresentation) -> Result<VerificationReport> {
    let mut r = verify_bimodule(m)?;
    r.absorb("", verify_comodule(m, Side::Left)?);
    r.absorb("", left_covariance(m)?);
    Ok(r)
}

pub fn verify_right_covariant(m: &HomRepresentation) -> Result<VerificationReport> {
    let mut r = verify_bimodule(m)?;
    r.absorb("", verify_comodule(m, Side::Right)?);
    r.absorb("", right_covariance(m)?);
    Ok(r)
}

pub fn verify_bicovariant(m: &HomRepresentation) -> Result<VerificationReport> {
    let mut r = verify_left_covariant(m)?;
    r.absorb("", verify_comodule(m, Side::Right)?);
    r.absorb("", right_covariance(m)?);
    r.absorb("", hom_commutativity(m)?);
    Ok(r)
}

/// Structure a morphism is asked to respect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Respect {
    LeftAction,
    RightAction,
    LeftCoaction,
    RightCoaction,
    Automorphism,
}

impl Respect {
    pub const ALL: [Respect; 5] =
        [Respect::Automorphism, Respect::LeftAction, Respect::RightAction, Respect::LeftCoaction, Respect::RightCoaction];
}

/// Checks that `f: src -> dst` intertwines the requested structures; one
/// absent on both sides holds vacuously. When both actions are requested,
/// the bimodule-morphism clause
/// `f((am)α(b)) = α(a)(f(m)b)` is checked as well.
pub fn is_morphism(f: &Matrix, src: &HomRepresentation, dst: &HomRepresentation, respect: &[Respect]) -> VerificationReport {
    let mut r = VerificationReport::new();
    if f.shape() != (dst.dim, src.dim) {
        r.expect("shape", false, &format!("map is {:?}, expected ({}, {})", f.shape(), dst.dim, src.dim));
        return r;
    }
    let (ds, dt, dh) = (src.dim, dst.dim, src.hdim());
    let al = src.over.alpha();
    for &what in respect {
        match what {
            Respect::Automorphism => {
                r.compare("respects_automorphism", &f.mul(&src.mu), &dst.mu.mul(f), &[ds]);
            }
            Respect::LeftAction => match (src.psi(), dst.psi()) {
                (Ok(a), Ok(b)) => {
                    let lhs = src.diagram(&[dh, ds]).merge(0, a).map(0, f).matrix();
                    let rhs = src.diagram(&[dh, ds]).map(1, f).merge(0, b).matrix();
                    r.compare("respects_left_action", &lhs, &rhs, &[dh, ds]);
                }
                (Err(_), Err(_)) => {
                    r.expect("respects_left_action", true, "absent on both sides");
                }
                _ => {
                    r.expect("respects_left_action", false, "missing left action on one side");
                }
            },
            Respect::RightAction => match (src.phi(), dst.phi()) {
                (Ok(a), Ok(b)) => {
                    let lhs = src.diagram(&[ds, dh]).merge(0, a).map(0, f).matrix();
                    let rhs = src.diagram(&[ds, dh]).map(0, f).merge(0, b).matrix();
                    r.compare("respects_right_action", &lhs, &rhs, &[ds, dh]);
                }
                (Err(_), Err(_)) => {
                    r.expect("respects_right_action", true, "absent on both sides");
                }
                _ => {
                    r.expect("respects_right_action", false, "missing right action on one side");
                }
            },
            Respect::LeftCoaction => match (src.rho(), dst.rho()) {
                (Ok(a), Ok(b)) => {
                    let lhs = src.diagram(&[ds]).map(0, f).split(0, b, dh, dt).matrix();
                    let rhs = src.diagram(&[ds]).split(0, a, dh, ds).map(1, f).matrix();
                    r.compare("respects_left_coaction", &lhs, &rhs, &[ds]);
                }
                (Err(_), Err(_)) => {
                    r.expect("respects_left_coaction", true, "absent on both sides");
                }
                _ => {
                    r.expect("respects_left_coaction", false, "missing left coaction on one side");
                }
            },
            Respect::RightCoaction => match (src.sigma(), dst.sigma()) {
                (Ok(a), Ok(b)) => {
                    let lhs = src.diagram(&[ds]).map(0, f).split(0, b, dt, dh).matrix();
                    let rhs = src.diagram(&[ds]).split(0, a, ds, dh).map(0, f).matrix();
                    r.compare("respects_right_coaction", &lhs, &rhs, &[ds]);
                }
                (Err(_), Err(_)) => {
                    r.expect("respects_right_coaction", true, "absent on both sides");
                }
                _ => {
                    r.expect("respects_right_coaction", false, "missing right coaction on one side");
                }
            },
        }
    }
    if respect.contains(&Respect::LeftAction) && respect.contains(&Respect::RightAction) {
        if let (Ok(pa), Ok(fa), Ok(pb), Ok(fb)) = (src.psi(), src.phi(), dst.psi(), dst.phi()) {
            let lhs = src.diagram(&[dh, ds, dh]).merge(0, pa).map(1, al).merge(0, fa).map(0, f).matrix();
            let rhs = src.diagram(&[dh, ds, dh]).map(1, f).merge(1, fb).map(0, al).merge(0, pb).matrix();
            r.compare("bimodule_morphism_clause", &lhs, &rhs, &[dh, ds, dh]);
        }
    }
    r
}
