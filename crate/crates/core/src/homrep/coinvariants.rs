use crate::error::{Error, Result};
use crate::exactlin::{kernel, Matrix, Subspace, Tensor3};

use super::representation::HomRepresentation;

/// `{m : ρ(m) = 1⊗μ^{-1}(m)}`, computed as a kernel.
pub fn coinvariants_left(m: &HomRepresentation) -> Result<Subspace> {
    let trivial = m.over.unit().kron(m.mu_inv()?);
    Ok(kernel(&m.rho()?.sub(&trivial)))
}

/// `{m : σ(m) = μ^{-1}(m)⊗1}`, computed as a kernel.
pub fn coinvariants_right(m: &HomRepresentation) -> Result<Subspace> {
    let trivial = m.mu_inv()?.kron(m.over.unit());
    Ok(kernel(&m.sigma()?.sub(&trivial)))
}

fn projector_left_raw(m: &HomRepresentation) -> Result<Matrix> {
    let (d, dh) = (m.dim, m.hdim());
    Ok(m.diagram(&[d]).split(0, m.rho()?, dh, d).map(0, &m.over.antipode).merge(0, m.psi()?).matrix())
}

fn projector_right_raw(m: &HomRepresentation) -> Result<Matrix> {
    let (d, dh) = (m.dim, m.hdim());
    Ok(m.diagram(&[d]).split(0, m.sigma()?, d, dh).map(1, &m.over.antipode).merge(0, m.phi()?).matrix())
}

/// `P_L(m) = S(m_{(-1)})m_{(0)}`; requires a verified left-covariant input.
pub fn projector_left(m: &HomRepresentation) -> Result<Matrix> {
    m.require_left_covariant()?;
    projector_left_raw(m)
}

/// `P_R(m) = m_{[0]}S(m_{[1]})`; requires a verified right-covariant input.
pub fn projector_right(m: &HomRepresentation) -> Result<Matrix> {
    m.require_right_covariant()?;
    projector_right_raw(m)
}

/// `m ◁ h = (S(h_1)μ^{-1}(m))α(h_2)` on all of M, as a `dim x (dim*dH)` matrix.
pub fn adjoint_right_on(m: &HomRepresentation) -> Result<Matrix> {
    let h = &m.over;
    let (d, dh) = (m.dim, m.hdim());
    Ok(m.diagram(&[d, dh])
        .split(1, h.comul(), dh, dh)
        .permute(&[1, 0, 2])
        .map(0, &h.antipode)
        .map(1, m.mu_inv()?)
        .map(2, h.alpha())
        .merge(0, m.psi()?)
        .merge(0, m.phi()?)
        .matrix())
}

/// `h ▷ m = α(h_1)(μ^{-1}(m)S(h_2))` on all of M, as a `dim x (dH*dim)` matrix.
pub fn adjoint_left_on(m: &HomRepresentation) -> Result<Matrix> {
    let h = &m.over;
    let (d, dh) = (m.dim, m.hdim());
    Ok(m.diagram(&[dh, d])
        .split(0, h.comul(), dh, dh)
        .permute(&[0, 2, 1])
        .map(0, h.alpha())
        .map(1, m.mu_inv()?)
        .map(2, &h.antipode)
        .merge(1, m.phi()?)
        .merge(0, m.psi()?)
        .matrix())
}

/// Coinvariant subspace with its basis and coordinate matrices.
#[derive(Clone, Debug)]
pub struct CoinvariantData {
    pub space: Subspace,
    /// `dim M x k`, columns are the RREF basis
    pub basis: Matrix,
    /// `k x dim M`, reads coordinates of vectors inside the subspace
    pub coords: Matrix,
}

impl CoinvariantData {
    fn new(space: Subspace) -> Self {
        CoinvariantData { basis: space.basis_matrix(), coords: space.coordinate_matrix(), space }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Expresses `f` (whose columns must lie in the subspace) in coordinates.
    fn to_coords(&self, f: &Matrix, what: &str) -> Result<Matrix> {
        for c in f.columns() {
            if !self.space.contains(&c) {
                return Err(Error::Structural(format!("{what} leaves the coinvariant subspace")));
            }
        }
        Ok(self.coords.mul(f))
    }
}

pub fn left_coinvariant_data(m: &HomRepresentation) -> Result<CoinvariantData> {
    Ok(CoinvariantData::new(coinvariants_left(m)?))
}

pub fn right_coinvariant_data(m: &HomRepresentation) -> Result<CoinvariantData> {
    Ok(CoinvariantData::new(coinvariants_right(m)?))
}

/// Right action `m ◁ h := P_L(mh)` on ^{coH}M as a `k x (k*dH)` matrix,
/// cross-checked against the adjoint form.
pub fn induced_right_action_map(m: &HomRepresentation) -> Result<(CoinvariantData, Matrix)> {
    let pl = projector_left(m)?;
    let co = left_coinvariant_data(m)?;
    let (k, dh) = (co.dim(), m.hdim());
    let by_projection = m.diagram(&[k, dh]).map(0, &co.basis).merge(0, m.phi()?).map(0, &pl).matrix();
    let by_adjoint = m.diagram(&[k, dh]).map(0, &co.basis).merge(0, &adjoint_right_on(m)?).matrix();
    if by_projection != by_adjoint {
        return Err(Error::Structural("P_L(mh) and ad_R(h)m disagree on coinvariants".into()));
    }
    let act = co.to_coords(&by_projection, "induced right action")?;
    Ok((co, act))
}

/// Left action `h ▷ m := P_R(hm)` on M^{coH} as a `k x (dH*k)` matrix,
/// cross-checked against the adjoint form.
pub fn induced_left_action_map(m: &HomRepresentation) -> Result<(CoinvariantData, Matrix)> {
    let pr = projector_right(m)?;
    let co = right_coinvariant_data(m)?;
    let (k, dh) = (co.dim(), m.hdim());
    let by_projection = m.diagram(&[dh, k]).map(1, &co.basis).merge(0, m.psi()?).map(0, &pr).matrix();
    let by_adjoint = m.diagram(&[dh, k]).map(1, &co.basis).merge(0, &adjoint_left_on(m)?).matrix();
    if by_projection != by_adjoint {
        return Err(Error::Structural("P_R(hm) and ad_L(h)m disagree on coinvariants".into()));
    }
    let act = co.to_coords(&by_projection, "induced left action")?;
    Ok((co, act))
}

pub fn induced_right_action(m: &HomRepresentation) -> Result<Tensor3> {
    let (co, act) = induced_right_action_map(m)?;
    Ok(Tensor3::from_binary_map(&act, co.dim(), m.hdim()))
}

pub fn induced_left_action(m: &HomRepresentation) -> Result<Tensor3> {
    let (co, act) = induced_left_action_map(m)?;
    Ok(Tensor3::from_binary_map(&act, m.hdim(), co.dim()))
}

fn restricted_mu(m: &HomRepresentation, co: &CoinvariantData) -> Result<Matrix> {
    co.to_coords(&m.mu.mul(&co.basis), "mu")
}

/// ^{coH}M as a right Hom-module under the induced action.
pub fn left_coinvariant_module(m: &HomRepresentation) -> Result<(CoinvariantData, HomRepresentation)> {
    let (co, act) = induced_right_action_map(m)?;
    let mu = restricted_mu(m, &co)?;
    let rep = HomRepresentation::new(m.over.clone(), mu)?.with_right_action(act)?.certify();
    Ok((co, rep))
}

/// M^{coH} as a left Hom-module under the induced action.
pub fn right_coinvariant_module(m: &HomRepresentation) -> Result<(CoinvariantData, HomRepresentation)> {
    let (co, act) = induced_left_action_map(m)?;
    let mu = restricted_mu(m, &co)?;
    let rep = HomRepresentation::new(m.over.clone(), mu)?.with_left_action(act)?.certify();
    Ok((co, rep))
}

/// `θ: H⊗^{coH}M → M, h⊗m ↦ hm` and its inverse `ϑ(m) = m_{(-1)}⊗P_L(m_{(0)})`,
/// with the coinvariant factor in RREF coordinates.
pub fn theta(m: &HomRepresentation) -> Result<(Matrix, Matrix)> {
    let pl = projector_left(m)?;
    let co = left_coinvariant_data(m)?;
    let (d, dh, k) = (m.dim, m.hdim(), co.dim());
    if dh * k != d {
        return Err(Error::Structural(format!("dim H * dim coinvariants = {} but dim M = {d}", dh * k)));
    }
    let th = m.diagram(&[dh, k]).map(1, &co.basis).merge(0, m.psi()?).matrix();
    let pl_coords = co.to_coords(&pl, "P_L")?;
    let vt = m.diagram(&[d]).split(0, m.rho()?, dh, d).map(1, &pl_coords).matrix();
    Ok((th, vt))
}

/// `θ': M^{coH}⊗H → M, m⊗h ↦ mh` and its inverse `m ↦ P_R(m_{[0]})⊗m_{[1]}`.
pub fn theta_right(m: &HomRepresentation) -> Result<(Matrix, Matrix)> {
    let pr = projector_right(m)?;
    let co = right_coinvariant_data(m)?;
    let (d, dh, k) = (m.dim, m.hdim(), co.dim());
    if dh * k != d {
        return Err(Error::Structural(format!("dim H * dim coinvariants = {} but dim M = {d}", dh * k)));
    }
    let th = m.diagram(&[k, dh]).map(0, &co.basis).merge(0, m.phi()?).matrix();
    let pr_coords = co.to_coords(&pr, "P_R")?;
    let vt = m.diagram(&[d]).split(0, m.sigma()?, d, dh).map(0, &pr_coords).matrix();
    Ok((th, vt))
}
