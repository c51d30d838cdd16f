use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Diagram, Field, Matrix, Tensor3};
use crate::homcore::HomHopfAlgebra;

use super::verify;

/// Which side a (co)action lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// Verifier outcomes cached on a representation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CovarianceFlags {
    pub is_left_module: bool,
    pub is_right_module: bool,
    pub is_left_comodule: bool,
    pub is_right_comodule: bool,
    pub is_bimodule: bool,
    pub is_left_covariant: bool,
    pub is_right_covariant: bool,
    pub is_bicovariant: bool,
}

/// A space with an automorphism μ and optional actions and coactions of a
/// Hom-Hopf algebra H. Maps are matrices: `left_action` is `dim x (dH*dim)`
/// (ψ: H⊗M→M), `right_action` is `dim x (dim*dH)` (φ: M⊗H→M),
/// `left_coaction` is `(dH*dim) x dim` (ρ), `right_coaction` is `(dim*dH) x dim` (σ).
#[derive(Clone, Debug)]
pub struct HomRepresentation {
    pub dim: usize,
    pub mu: Matrix,
    pub left_action: Option<Matrix>,
    pub right_action: Option<Matrix>,
    pub left_coaction: Option<Matrix>,
    pub right_coaction: Option<Matrix>,
    pub over: Arc<HomHopfAlgebra>,
    mu_inv: Option<Matrix>,
    flags: CovarianceFlags,
}

impl PartialEq for HomRepresentation {
    fn eq(&self, o: &Self) -> bool {
        self.dim == o.dim
            && self.mu == o.mu
            && self.left_action == o.left_action
            && self.right_action == o.right_action
            && self.left_coaction == o.left_coaction
            && self.right_coaction == o.right_coaction
            && same_algebra(&self.over, &o.over)
    }
}

pub(crate) fn same_algebra(a: &Arc<HomHopfAlgebra>, b: &Arc<HomHopfAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl HomRepresentation {
    /// Representation with no (co)actions yet.
    pub fn new(over: Arc<HomHopfAlgebra>, mu: Matrix) -> Result<Self> {
        if !mu.is_square() || mu.field() != over.field() {
            return Err(Error::Shape(format!("mu has shape {:?}", mu.shape())));
        }
        let mu_inv = mu.inverse();
        Ok(HomRepresentation {
            dim: mu.rows(),
            mu,
            left_action: None,
            right_action: None,
            left_coaction: None,
            right_coaction: None,
            over,
            mu_inv,
            flags: CovarianceFlags::default(),
        })
    }

    pub fn field(&self) -> Field {
        self.over.field()
    }

    pub fn hdim(&self) -> usize {
        self.over.dim()
    }

    fn expect_shape(&self, what: &str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
        if m.shape() != (rows, cols) || m.field() != self.field() {
            return Err(Error::Shape(format!("{what} has shape {:?}, expected ({rows}, {cols})", m.shape())));
        }
        Ok(())
    }

    pub fn with_left_action(mut self, m: Matrix) -> Result<Self> {
        self.expect_shape("left action", &m, self.dim, self.hdim() * self.dim)?;
        self.left_action = Some(m);
        self.flags = CovarianceFlags::default();
        Ok(self)
    }

    pub fn with_right_action(mut self, m: Matrix) -> Result<Self> {
        self.expect_shape("right action", &m, self.dim, self.dim * self.hdim())?;
        self.right_action = Some(m);
        self.flags = CovarianceFlags::default();
        Ok(self)
    }

    pub fn with_left_coaction(mut self, m: Matrix) -> Result<Self> {
        self.expect_shape("left coaction", &m, self.hdim() * self.dim, self.dim)?;
        self.left_coaction = Some(m);
        self.flags = CovarianceFlags::default();
        Ok(self)
    }

    pub fn with_right_coaction(mut self, m: Matrix) -> Result<Self> {
        self.expect_shape("right coaction", &m, self.dim * self.hdim(), self.dim)?;
        self.right_coaction = Some(m);
        self.flags = CovarianceFlags::default();
        Ok(self)
    }

    pub fn without_right_coaction(mut self) -> Self {
        self.right_coaction = None;
        self.flags = CovarianceFlags::default();
        self
    }

    pub fn mu_inv(&self) -> Result<&Matrix> {
        self.mu_inv.as_ref().ok_or_else(|| Error::NotInvertible("mu".into()))
    }

    pub fn psi(&self) -> Result<&Matrix> {
        self.left_action.as_ref().ok_or_else(|| Error::Missing("left action".into()))
    }

    pub fn phi(&self) -> Result<&Matrix> {
        self.right_action.as_ref().ok_or_else(|| Error::Missing("right action".into()))
    }

    pub fn rho(&self) -> Result<&Matrix> {
        self.left_coaction.as_ref().ok_or_else(|| Error::Missing("left coaction".into()))
    }

    pub fn sigma(&self) -> Result<&Matrix> {
        self.right_coaction.as_ref().ok_or_else(|| Error::Missing("right coaction".into()))
    }

    pub fn left_action_tensor(&self) -> Option<Tensor3> {
        self.left_action.as_ref().map(|m| Tensor3::from_binary_map(m, self.hdim(), self.dim))
    }

    pub fn right_action_tensor(&self) -> Option<Tensor3> {
        self.right_action.as_ref().map(|m| Tensor3::from_binary_map(m, self.dim, self.hdim()))
    }

    pub fn left_coaction_tensor(&self) -> Option<Tensor3> {
        self.left_coaction.as_ref().map(|m| Tensor3::from_split_map(m, self.hdim(), self.dim))
    }

    pub fn right_coaction_tensor(&self) -> Option<Tensor3> {
        self.right_coaction.as_ref().map(|m| Tensor3::from_split_map(m, self.dim, self.hdim()))
    }

    pub fn flags(&self) -> CovarianceFlags {
        self.flags
    }

    /// Runs the verifiers for every present structure and caches the outcome.
    pub fn certify(mut self) -> Self {
        let ok = |r: Result<crate::homcore::VerificationReport>| r.map(|r| r.passed()).unwrap_or(false);
        let mut f = CovarianceFlags {
            is_left_module: ok(verify::verify_module(&self, Side::Left)),
            is_right_module: ok(verify::verify_module(&self, Side::Right)),
            is_left_comodule: ok(verify::verify_comodule(&self, Side::Left)),
            is_right_comodule: ok(verify::verify_comodule(&self, Side::Right)),
            ..CovarianceFlags::default()
        };
        f.is_bimodule = f.is_left_module && f.is_right_module && ok(verify::bimodule_compatibility(&self));
        f.is_left_covariant = f.is_bimodule && f.is_left_comodule && ok(verify::left_covariance(&self));
        f.is_right_covariant = f.is_bimodule && f.is_right_comodule && ok(verify::right_covariance(&self));
        f.is_bicovariant = f.is_left_covariant && f.is_right_covariant && ok(verify::hom_commutativity(&self));
        self.flags = f;
        self
    }

    pub fn require_left_covariant(&self) -> Result<()> {
        if !self.flags.is_left_covariant {
            return Err(Error::Unverified("left-covariant Hom-bimodule".into()));
        }
        Ok(())
    }

    pub fn require_right_covariant(&self) -> Result<()> {
        if !self.flags.is_right_covariant {
            return Err(Error::Unverified("right-covariant Hom-bimodule".into()));
        }
        Ok(())
    }

    pub fn require_bicovariant(&self) -> Result<()> {
        if !self.flags.is_bicovariant {
            return Err(Error::Unverified("bicovariant Hom-bimodule".into()));
        }
        Ok(())
    }

    pub(crate) fn diagram(&self, dims: &[usize]) -> Diagram {
        Diagram::new(self.field(), dims)
    }
}

/// The unit object k: `hx = xh = ε(h)x`, `x ↦ 1⊗x`, `x ↦ x⊗1`, μ = id.
pub fn unit_object(h: &Arc<HomHopfAlgebra>) -> HomRepresentation {
    let f = h.field();
    HomRepresentation::new(h.clone(), Matrix::identity(f, 1))
        .and_then(|r| r.with_left_action(h.counit().clone()))
        .and_then(|r| r.with_right_action(h.counit().clone()))
        .and_then(|r| r.with_left_coaction(h.unit().clone()))
        .and_then(|r| r.with_right_coaction(h.unit().clone()))
        .expect("unit object shapes")
        .certify()
}

/// Direct sum `A ⊕ B` with inclusions and projections `(i_A, i_B, p_A, p_B)`.
/// Only structures present on both summands are kept.
pub fn direct_sum(a: &HomRepresentation, b: &HomRepresentation) -> Result<(HomRepresentation, [Matrix; 4])> {
    if !same_algebra(&a.over, &b.over) {
        return Err(Error::Shape("summands over different Hom-Hopf algebras".into()));
    }
    let f = a.field();
    let (da, db, dh) = (a.dim, b.dim, a.hdim());
    let n = da + db;
    let mut ia = Matrix::zeros(f, n, da);
    let mut ib = Matrix::zeros(f, n, db);
    for i in 0..da {
        ia.set(i, i, f.one());
    }
    for i in 0..db {
        ib.set(da + i, i, f.one());
    }
    let (pa, pb) = (ia.transpose(), ib.transpose());
    let mu = ia.mul(&a.mu).mul(&pa).add(&ib.mul(&b.mu).mul(&pb));
    let mut s = HomRepresentation::new(a.over.clone(), mu)?;
    let d = |dims: &[usize]| Diagram::new(f, dims);
    if let (Some(x), Some(y)) = (&a.left_action, &b.left_action) {
        let l = d(&[dh, n]).map(1, &pa).merge(0, x).map(0, &ia).matrix();
        let r = d(&[dh, n]).map(1, &pb).merge(0, y).map(0, &ib).matrix();
        s = s.with_left_action(l.add(&r))?;
    }
    if let (Some(x), Some(y)) = (&a.right_action, &b.right_action) {
        let l = d(&[n, dh]).map(0, &pa).merge(0, x).map(0, &ia).matrix();
        let r = d(&[n, dh]).map(0, &pb).merge(0, y).map(0, &ib).matrix();
        s = s.with_right_action(l.add(&r))?;
    }
    if let (Some(x), Some(y)) = (&a.left_coaction, &b.left_coaction) {
        let l = d(&[n]).map(0, &pa).split(0, x, dh, da).map(1, &ia).matrix();
        let r = d(&[n]).map(0, &pb).split(0, y, dh, db).map(1, &ib).matrix();
        s = s.with_left_coaction(l.add(&r))?;
    }
    if let (Some(x), Some(y)) = (&a.right_coaction, &b.right_coaction) {
        let l = d(&[n]).map(0, &pa).split(0, x, da, dh).map(0, &ia).matrix();
        let r = d(&[n]).map(0, &pb).split(0, y, db, dh).map(0, &ib).matrix();
        s = s.with_right_coaction(l.add(&r))?;
    }
    Ok((s.certify(), [ia, ib, pa, pb]))
}
