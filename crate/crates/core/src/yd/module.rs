use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Diagram, Field, Matrix, Tensor3};
use crate::homcore::{HomHopfAlgebra, VerificationReport};
use crate::homrep::{same_algebra, verify_comodule, verify_module, HomRepresentation, Side};

/// Right-right Yetter–Drinfel'd Hom-module: `action` is `dim x (dim*dH)`
/// (`v◁h`), `coaction` is `(dim*dH) x dim` (`v ↦ v_(0)⊗v_(1)`), `mu` is ν.
#[derive(Clone, Debug)]
pub struct YDModule {
    pub dim: usize,
    pub mu: Matrix,
    pub action: Matrix,
    pub coaction: Matrix,
    pub over: Arc<HomHopfAlgebra>,
    mu_inv: Option<Matrix>,
    verified: bool,
}

impl PartialEq for YDModule {
    fn eq(&self, o: &Self) -> bool {
        self.mu == o.mu && self.action == o.action && self.coaction == o.coaction && same_algebra(&self.over, &o.over)
    }
}

impl YDModule {
    pub fn new(over: Arc<HomHopfAlgebra>, mu: Matrix, action: Matrix, coaction: Matrix) -> Result<Self> {
        let f = over.field();
        let (d, dh) = (mu.rows(), over.dim());
        let ok = |m: &Matrix, r: usize, c: usize| m.shape() == (r, c) && m.field() == f;
        if !ok(&mu, d, d) {
            return Err(Error::Shape(format!("mu has shape {:?}", mu.shape())));
        }
        if !ok(&action, d, d * dh) {
            return Err(Error::Shape(format!("action has shape {:?}, expected ({d}, {})", action.shape(), d * dh)));
        }
        if !ok(&coaction, d * dh, d) {
            return Err(Error::Shape(format!("coaction has shape {:?}, expected ({}, {d})", coaction.shape(), d * dh)));
        }
        let mu_inv = mu.inverse();
        Ok(YDModule { dim: d, mu, action, coaction, over, mu_inv, verified: false })
    }

    pub fn field(&self) -> Field {
        self.over.field()
    }

    pub fn hdim(&self) -> usize {
        self.over.dim()
    }

    pub fn mu_inv(&self) -> Result<&Matrix> {
        self.mu_inv.as_ref().ok_or_else(|| Error::NotInvertible("mu".into()))
    }

    pub fn action_tensor(&self) -> Tensor3 {
        Tensor3::from_binary_map(&self.action, self.dim, self.hdim())
    }

    pub fn coaction_tensor(&self) -> Tensor3 {
        Tensor3::from_split_map(&self.coaction, self.dim, self.hdim())
    }

    /// Runs [`verify_yd`] and caches the verdict.
    pub fn certify(mut self) -> Self {
        self.verified = verify_yd(&self).map(|r| r.passed()).unwrap_or(false);
        self
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub fn require_verified(&self) -> Result<()> {
        if !self.verified {
            return Err(Error::Unverified("Yetter-Drinfel'd Hom-module".into()));
        }
        Ok(())
    }

    /// The underlying right module and right comodule as a representation.
    pub fn to_representation(&self) -> Result<HomRepresentation> {
        Ok(HomRepresentation::new(self.over.clone(), self.mu.clone())?
            .with_right_action(self.action.clone())?
            .with_right_coaction(self.coaction.clone())?
            .certify())
    }

    pub(crate) fn diagram(&self, dims: &[usize]) -> Diagram {
        Diagram::new(self.field(), dims)
    }
}

/// Both sides of the stored YD condition
/// `v_(0)◁α^{-1}(h_1) ⊗ v_(1)α^{-1}(h_2) = (v◁h_2)_(0) ⊗ α^{-1}(h_1(v◁h_2)_(1))`
/// as maps `V⊗H → V⊗H`.
pub(crate) fn yd_sides(v: &YDModule) -> Result<(Matrix, Matrix)> {
    let h = &v.over;
    let (d, dh) = (v.dim, v.hdim());
    let ai = h.alpha_inv()?;
    let lhs = v
        .diagram(&[d, dh])
        .split(1, h.comul(), dh, dh)
        .split(0, &v.coaction, d, dh)
        .map(2, ai)
        .map(3, ai)
        .permute(&[0, 2, 1, 3])
        .merge(0, &v.action)
        .merge(1, h.mul())
        .matrix();
    let rhs = yd_rhs(v)?.map(1, ai).matrix();
    Ok((lhs, rhs))
}

/// `(v◁h_2)_(0) ⊗ h_1(v◁h_2)_(1)`, before any outer α factor.
fn yd_rhs(v: &YDModule) -> Result<Diagram> {
    let h = &v.over;
    let (d, dh) = (v.dim, v.hdim());
    Ok(v.diagram(&[d, dh])
        .split(1, h.comul(), dh, dh)
        .permute(&[1, 0, 2])
        .merge(1, &v.action)
        .split(1, &v.coaction, d, dh)
        .permute(&[1, 0, 2])
        .merge(1, h.mul()))
}

/// Module and comodule laws first, then the YD condition in the stored
/// form and in the form `v_(0)◁α^{-1}(h_1) ⊗ α(v_(1))h_2 = (v◁h_2)_(0) ⊗ h_1(v◁h_2)_(1)`,
/// recording whether the two verdicts agree.
pub fn verify_yd(v: &YDModule) -> Result<VerificationReport> {
    let rep = HomRepresentation::new(v.over.clone(), v.mu.clone())?
        .with_right_action(v.action.clone())?
        .with_right_coaction(v.coaction.clone())?;
    let mut r = VerificationReport::new();
    r.absorb("module", verify_module(&rep, Side::Right)?);
    r.absorb("comodule", verify_comodule(&rep, Side::Right)?);
    let names = ["yd_condition", "yd_condition_alt", "yd_forms_agree"];
    if !r.passed() {
        for n in names {
            r.skip(n, "module or comodule laws fail");
        }
        return Ok(r);
    }
    let h = &v.over;
    let (d, dh) = (v.dim, v.hdim());
    let (lhs, rhs) = yd_sides(v)?;
    let stored = r.compare(names[0], &lhs, &rhs, &[d, dh]);
    let ai = h.alpha_inv()?;
    let lhs_alt = v
        .diagram(&[d, dh])
        .split(1, h.comul(), dh, dh)
        .split(0, &v.coaction, d, dh)
        .map(2, ai)
        .map(1, h.alpha())
        .permute(&[0, 2, 1, 3])
        .merge(0, &v.action)
        .merge(1, h.mul())
        .matrix();
    let rhs_alt = yd_rhs(v)?.matrix();
    let alt = r.compare(names[1], &lhs_alt, &rhs_alt, &[d, dh]);
    r.expect(names[2], stored == alt, if stored == alt { "" } else { "the two forms disagree" });
    Ok(r)
}

/// The trivial YD module k: `x◁h = ε(h)x`, `x ↦ x⊗1`, ν = id.
pub fn trivial_yd(h: &Arc<HomHopfAlgebra>) -> YDModule {
    let f = h.field();
    YDModule::new(h.clone(), Matrix::identity(f, 1), h.counit().clone(), h.unit().clone())
        .expect("trivial YD shapes")
        .certify()
}

/// Direct sum with inclusions and projections `(i_A, i_B, p_A, p_B)`.
pub fn yd_direct_sum(a: &YDModule, b: &YDModule) -> Result<(YDModule, [Matrix; 4])> {
    let (s, maps) = crate::homrep::direct_sum(&a.to_representation()?, &b.to_representation()?)?;
    let m = YDModule::new(s.over.clone(), s.mu.clone(), s.phi()?.clone(), s.sigma()?.clone())?.certify();
    Ok((m, maps))
}

pub(crate) fn same_over(a: &YDModule, b: &YDModule) -> Result<()> {
    if !same_algebra(&a.over, &b.over) {
        return Err(Error::Shape("YD modules over different Hom-Hopf algebras".into()));
    }
    Ok(())
}
