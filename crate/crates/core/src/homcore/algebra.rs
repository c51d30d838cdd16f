use crate::error::{Error, Result};
use crate::exactlin::{Diagram, Field, Matrix, Scalar, Tensor3};

use super::report::VerificationReport;

fn check_shape(what: &str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::Shape(format!("{what} is {:?}, expected ({rows}, {cols})", m.shape())));
    }
    Ok(())
}

fn check_field(field: Field, ms: &[&Matrix]) -> Result<()> {
    if ms.iter().any(|m| m.field() != field) {
        return Err(Error::Shape("structure maps over different fields".into()));
    }
    Ok(())
}

/// Monoidal Hom-algebra `(A, m, η, α)`. Maps are stored as matrices:
/// `mul` is `dim x dim²`, `unit` is `dim x 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    pub dim: usize,
    pub mul: Matrix,
    pub unit: Matrix,
    pub alpha: Matrix,
}

impl HomAlgebra {
    pub fn new(mul: Matrix, unit: Matrix, alpha: Matrix) -> Result<Self> {
        let dim = alpha.rows();
        check_shape("alpha", &alpha, dim, dim)?;
        check_shape("mul", &mul, dim, dim * dim)?;
        check_shape("unit", &unit, dim, 1)?;
        check_field(alpha.field(), &[&mul, &unit])?;
        Ok(HomAlgebra { dim, mul, unit, alpha })
    }

    pub fn field(&self) -> Field {
        self.alpha.field()
    }

    pub fn mul_tensor(&self) -> Tensor3 {
        Tensor3::from_binary_map(&self.mul, self.dim, self.dim)
    }
}

/// Monoidal Hom-coalgebra `(C, Δ, ε, γ)`: `comul` is `dim² x dim`, `counit` is `1 x dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    pub dim: usize,
    pub comul: Matrix,
    pub counit: Matrix,
    pub gamma: Matrix,
}

impl HomCoalgebra {
    pub fn new(comul: Matrix, counit: Matrix, gamma: Matrix) -> Result<Self> {
        let dim = gamma.rows();
        check_shape("gamma", &gamma, dim, dim)?;
        check_shape("comul", &comul, dim * dim, dim)?;
        check_shape("counit", &counit, 1, dim)?;
        check_field(gamma.field(), &[&comul, &counit])?;
        Ok(HomCoalgebra { dim, comul, counit, gamma })
    }

    pub fn field(&self) -> Field {
        self.gamma.field()
    }

    pub fn comul_tensor(&self) -> Tensor3 {
        Tensor3::from_split_map(&self.comul, self.dim, self.dim)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra {
    pub algebra: HomAlgebra,
    pub coalgebra: HomCoalgebra,
}

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        if algebra.dim != coalgebra.dim || algebra.field() != coalgebra.field() {
            return Err(Error::Shape("algebra and coalgebra differ in dimension or field".into()));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }
}

/// Monoidal Hom-Hopf algebra `(H, α, m, η, Δ, ε, S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfAlgebra {
    pub bialgebra: HomBialgebra,
    pub antipode: Matrix,
    alpha_inv: Option<Matrix>,
    antipode_inv: Option<Matrix>,
}

impl HomHopfAlgebra {
    pub fn new(bialgebra: HomBialgebra, antipode: Matrix) -> Result<Self> {
        let d = bialgebra.algebra.dim;
        check_shape("antipode", &antipode, d, d)?;
        check_field(bialgebra.algebra.field(), &[&antipode])?;
        let alpha_inv = bialgebra.algebra.alpha.inverse();
        let antipode_inv = antipode.inverse();
        Ok(HomHopfAlgebra { bialgebra, antipode, alpha_inv, antipode_inv })
    }

    /// Builds from the individual maps, using `alpha` for both twists.
    pub fn from_maps(mul: Matrix, unit: Matrix, comul: Matrix, counit: Matrix, antipode: Matrix, alpha: Matrix) -> Result<Self> {
        let a = HomAlgebra::new(mul, unit, alpha.clone())?;
        let c = HomCoalgebra::new(comul, counit, alpha)?;
        Self::new(HomBialgebra::new(a, c)?, antipode)
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.algebra.dim
    }

    pub fn field(&self) -> Field {
        self.bialgebra.algebra.field()
    }

    pub fn mul(&self) -> &Matrix {
        &self.bialgebra.algebra.mul
    }

    pub fn unit(&self) -> &Matrix {
        &self.bialgebra.algebra.unit
    }

    pub fn comul(&self) -> &Matrix {
        &self.bialgebra.coalgebra.comul
    }

    pub fn counit(&self) -> &Matrix {
        &self.bialgebra.coalgebra.counit
    }

    pub fn alpha(&self) -> &Matrix {
        &self.bialgebra.algebra.alpha
    }

    pub fn alpha_inv(&self) -> Result<&Matrix> {
        self.alpha_inv.as_ref().ok_or_else(|| Error::NotInvertible("alpha".into()))
    }

    /// `S^{-1}`, or [`Error::SingularAntipode`].
    pub fn antipode_inv(&self) -> Result<&Matrix> {
        self.antipode_inv.as_ref().ok_or(Error::SingularAntipode)
    }

    pub fn has_invertible_antipode(&self) -> bool {
        self.antipode_inv.is_some()
    }

    /// `η∘ε` as a `dim x dim` matrix.
    pub fn unit_counit(&self) -> Matrix {
        self.unit().mul(self.counit())
    }

    /// Diagram starting from `dims`.
    pub(crate) fn diagram(&self, dims: &[usize]) -> Diagram {
        Diagram::new(self.field(), dims)
    }

    /// Whether `f` preserves m, η, Δ and ε.
    pub fn is_bialgebra_map(&self, f: &Matrix) -> bool {
        bialgebra_map_failure(self, f).is_none()
    }
}

pub fn verify_hom_algebra(a: &HomAlgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = a.dim;
    let f = a.field();
    let (m, u, al) = (&a.mul, &a.unit, &a.alpha);
    r.expect("alpha_invertible", al.inverse().is_some(), "alpha is singular");
    let lhs = Diagram::new(f, &[d, d]).merge(0, m).map(0, al).matrix();
    let rhs = Diagram::new(f, &[d, d]).map(0, al).map(1, al).merge(0, m).matrix();
    r.compare("alpha_multiplicative", &lhs, &rhs, &[d, d]);
    r.compare("alpha_unital", &al.mul(u), u, &[]);
    let lhs = Diagram::new(f, &[d, d, d]).merge(1, m).map(0, al).merge(0, m).matrix();
    let rhs = Diagram::new(f, &[d, d, d]).merge(0, m).map(1, al).merge(0, m).matrix();
    r.compare("hom_associativity", &lhs, &rhs, &[d, d, d]);
    let left = Diagram::new(f, &[d]).insert(0, u).merge(0, m).matrix();
    r.compare("weak_unit_left", &left, al, &[d]);
    let right = Diagram::new(f, &[d]).insert(1, u).merge(0, m).matrix();
    r.compare("weak_unit_right", &right, al, &[d]);
    r
}

pub fn verify_hom_coalgebra(c: &HomCoalgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = c.dim;
    let f = c.field();
    let (dl, e, g) = (&c.comul, &c.counit, &c.gamma);
    let gi = g.inverse();
    r.expect("gamma_invertible", gi.is_some(), "gamma is singular");
    let lhs = Diagram::new(f, &[d]).map(0, g).split(0, dl, d, d).matrix();
    let rhs = Diagram::new(f, &[d]).split(0, dl, d, d).map(0, g).map(1, g).matrix();
    r.compare("gamma_comultiplicative", &lhs, &rhs, &[d]);
    r.compare("gamma_counital", &e.mul(g), e, &[d]);
    let Some(gi) = gi else {
        for name in ["hom_coassociativity", "weak_counit_right", "weak_counit_left", "coassociativity_reindexing"] {
            r.skip(name, "requires invertible gamma");
        }
        return r;
    };
    let lhs = Diagram::new(f, &[d]).split(0, dl, d, d).map(0, &gi).split(1, dl, d, d).matrix();
    let rhs = Diagram::new(f, &[d]).split(0, dl, d, d).split(0, dl, d, d).map(2, &gi).matrix();
    r.compare("hom_coassociativity", &lhs, &rhs, &[d]);
    let right = Diagram::new(f, &[d]).split(0, dl, d, d).erase(1, e).matrix();
    r.compare("weak_counit_right", &right, &gi, &[d]);
    let left = Diagram::new(f, &[d]).split(0, dl, d, d).erase(0, e).matrix();
    r.compare("weak_counit_left", &left, &gi, &[d]);
    let lhs = Diagram::new(f, &[d]).split(0, dl, d, d).split(1, dl, d, d).split(1, dl, d, d).matrix();
    let rhs = Diagram::new(f, &[d])
        .split(0, dl, d, d)
        .split(1, dl, d, d)
        .split(0, dl, d, d)
        .map(0, g)
        .map(1, &gi)
        .map(2, &gi)
        .matrix();
    r.compare("coassociativity_reindexing", &lhs, &rhs, &[d]);
    r
}

pub fn verify_hom_bialgebra(b: &HomBialgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    r.absorb("", verify_hom_algebra(&b.algebra));
    r.absorb("", verify_hom_coalgebra(&b.coalgebra));
    r.absorb("", bialgebra_compatibility(b));
    r
}

fn bialgebra_compatibility(b: &HomBialgebra) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = b.algebra.dim;
    let f = b.algebra.field();
    let (m, u) = (&b.algebra.mul, &b.algebra.unit);
    let (dl, e) = (&b.coalgebra.comul, &b.coalgebra.counit);
    r.expect("same_automorphism", b.algebra.alpha == b.coalgebra.gamma, "algebra and coalgebra twists differ");
    let lhs = Diagram::new(f, &[d, d]).merge(0, m).split(0, dl, d, d).matrix();
    let rhs = Diagram::new(f, &[d, d])
        .split(0, dl, d, d)
        .split(2, dl, d, d)
        .permute(&[0, 2, 1, 3])
        .merge(0, m)
        .merge(1, m)
        .matrix();
    r.compare("comul_multiplicative", &lhs, &rhs, &[d, d]);
    r.compare("comul_unital", &dl.mul(u), &u.kron(u), &[]);
    let lhs = Diagram::new(f, &[d, d]).merge(0, m).erase(0, e).matrix();
    let rhs = Diagram::new(f, &[d, d]).erase(0, e).erase(0, e).matrix();
    r.compare("counit_multiplicative", &lhs, &rhs, &[d, d]);
    r.compare("counit_unital", &e.mul(u), &Matrix::identity(f, 1), &[]);
    r
}

/// `f ∗ g = m∘(f⊗g)∘Δ`.
pub fn convolution(f: &Matrix, g: &Matrix, h: &HomHopfAlgebra) -> Matrix {
    let d = h.dim();
    h.diagram(&[d]).split(0, h.comul(), d, d).map(0, f).map(1, g).merge(0, h.mul()).matrix()
}

pub fn antipode_inverse(h: &HomHopfAlgebra) -> Result<Matrix> {
    h.antipode_inv().cloned()
}

pub fn verify_hom_hopf(h: &HomHopfAlgebra) -> VerificationReport {
    let mut r = verify_hom_bialgebra(&h.bialgebra);
    let d = h.dim();
    let f = h.field();
    let (s, al, m, u, dl, e) = (&h.antipode, h.alpha(), h.mul(), h.unit(), h.comul(), h.counit());
    let id = Matrix::identity(f, d);
    let ee = h.unit_counit();
    r.compare("antipode_commutes_alpha", &s.mul(al), &al.mul(s), &[d]);
    r.compare("convolution_left", &convolution(s, &id, h), &ee, &[d]);
    r.compare("convolution_right", &convolution(&id, s, h), &ee, &[d]);
    let lhs = Diagram::new(f, &[d, d]).merge(0, m).map(0, s).matrix();
    let rhs = Diagram::new(f, &[d, d]).map(0, s).map(1, s).swap(0).merge(0, m).matrix();
    r.compare("antipode_anti_multiplicative", &lhs, &rhs, &[d, d]);
    r.compare("antipode_unital", &s.mul(u), u, &[]);
    let lhs = Diagram::new(f, &[d]).map(0, s).split(0, dl, d, d).matrix();
    let rhs = Diagram::new(f, &[d]).split(0, dl, d, d).map(0, s).map(1, s).swap(0).matrix();
    r.compare("antipode_anti_comultiplicative", &lhs, &rhs, &[d]);
    r.compare("antipode_counital", &e.mul(s), e, &[d]);
    r
}

/// Name of the first bialgebra-map condition `aut` violates, if any.
fn bialgebra_map_failure(h: &HomHopfAlgebra, aut: &Matrix) -> Option<&'static str> {
    let d = h.dim();
    let f = h.field();
    let lhs = Diagram::new(f, &[d, d]).merge(0, h.mul()).map(0, aut).matrix();
    let rhs = Diagram::new(f, &[d, d]).map(0, aut).map(1, aut).merge(0, h.mul()).matrix();
    if lhs != rhs {
        return Some("multiplicativity");
    }
    if aut.mul(h.unit()) != *h.unit() {
        return Some("unit preservation");
    }
    let lhs = Diagram::new(f, &[d]).map(0, aut).split(0, h.comul(), d, d).matrix();
    let rhs = Diagram::new(f, &[d]).split(0, h.comul(), d, d).map(0, aut).map(1, aut).matrix();
    if lhs != rhs {
        return Some("comultiplicativity");
    }
    if h.counit().mul(aut) != *h.counit() {
        return Some("counit preservation");
    }
    None
}

/// Yau twist of a classical Hopf algebra (α = id) by a bialgebra automorphism.
pub fn yau_twist(classical: &HomHopfAlgebra, aut: &Matrix) -> Result<HomHopfAlgebra> {
    let d = classical.dim();
    if !classical.alpha().is_identity() {
        return Err(Error::InvalidParameter("twisting input must have alpha = id".into()));
    }
    if aut.shape() != (d, d) {
        return Err(Error::Shape(format!("automorphism is {:?}, expected ({d}, {d})", aut.shape())));
    }
    let aut_inv = aut.inverse().ok_or_else(|| Error::NotInvertible("automorphism".into()))?;
    if let Some(what) = bialgebra_map_failure(classical, aut) {
        return Err(Error::NotBialgebraMap(what.into()));
    }
    if aut.mul(&classical.antipode) != classical.antipode.mul(aut) {
        return Err(Error::AntipodeNotCommuting);
    }
    HomHopfAlgebra::from_maps(
        aut.mul(classical.mul()),
        classical.unit().clone(),
        classical.comul().mul(&aut_inv),
        classical.counit().clone(),
        classical.antipode.clone(),
        aut.clone(),
    )
}

/// `g ⊗ h ↦ (S(h_1)α^{-1}(g))α(h_2)` as a `dim x dim²` matrix.
pub fn adjoint_right_map(h: &HomHopfAlgebra) -> Result<Matrix> {
    let d = h.dim();
    let ai = h.alpha_inv()?;
    Ok(h.diagram(&[d, d])
        .split(1, h.comul(), d, d)
        .permute(&[1, 0, 2])
        .map(0, &h.antipode)
        .map(1, ai)
        .map(2, h.alpha())
        .merge(0, h.mul())
        .merge(0, h.mul())
        .matrix())
}

/// `h ⊗ g ↦ α(h_1)(α^{-1}(g)S(h_2))` as a `dim x dim²` matrix.
pub fn adjoint_left_map(h: &HomHopfAlgebra) -> Result<Matrix> {
    let d = h.dim();
    let ai = h.alpha_inv()?;
    Ok(h.diagram(&[d, d])
        .split(0, h.comul(), d, d)
        .permute(&[0, 2, 1])
        .map(0, h.alpha())
        .map(1, ai)
        .map(2, &h.antipode)
        .merge(1, h.mul())
        .merge(0, h.mul())
        .matrix())
}

/// Right adjoint action tensor, entries `[g][h][k]`.
pub fn adjoint_right(h: &HomHopfAlgebra) -> Result<Tensor3> {
    Ok(Tensor3::from_binary_map(&adjoint_right_map(h)?, h.dim(), h.dim()))
}

/// Left adjoint action tensor, entries `[h][g][k]`.
pub fn adjoint_left(h: &HomHopfAlgebra) -> Result<Tensor3> {
    Ok(Tensor3::from_binary_map(&adjoint_left_map(h)?, h.dim(), h.dim()))
}

/// Module-algebra laws for the right adjoint action:
/// `(gh)◁k = (g◁k_1)(h◁k_2)` and `1◁k = ε(k)1`.
pub fn verify_adjoint_right_module_algebra(h: &HomHopfAlgebra) -> Result<VerificationReport> {
    let d = h.dim();
    let ad = adjoint_right_map(h)?;
    let mut r = VerificationReport::new();
    let lhs = h.diagram(&[d, d, d]).merge(0, h.mul()).merge(0, &ad).matrix();
    let rhs = h
        .diagram(&[d, d, d])
        .split(2, h.comul(), d, d)
        .permute(&[0, 2, 1, 3])
        .merge(0, &ad)
        .merge(1, &ad)
        .merge(0, h.mul())
        .matrix();
    r.compare("module_algebra_product", &lhs, &rhs, &[d, d, d]);
    let lhs = h.diagram(&[d]).insert(0, h.unit()).merge(0, &ad).matrix();
    r.compare("module_algebra_unit", &lhs, &h.unit_counit(), &[d]);
    Ok(r)
}

/// Mirror laws for the left adjoint action:
/// `k▷(gh) = (k_1▷g)(k_2▷h)` and `k▷1 = ε(k)1`.
pub fn verify_adjoint_left_module_algebra(h: &HomHopfAlgebra) -> Result<VerificationReport> {
    let d = h.dim();
    let ad = adjoint_left_map(h)?;
    let mut r = VerificationReport::new();
    let lhs = h.diagram(&[d, d, d]).merge(1, h.mul()).merge(0, &ad).matrix();
    let rhs = h
        .diagram(&[d, d, d])
        .split(0, h.comul(), d, d)
        .permute(&[0, 2, 1, 3])
        .merge(0, &ad)
        .merge(1, &ad)
        .merge(0, h.mul())
        .matrix();
    r.compare("module_algebra_product", &lhs, &rhs, &[d, d, d]);
    let lhs = h.diagram(&[d]).insert(1, h.unit()).merge(0, &ad).matrix();
    r.compare("module_algebra_unit", &lhs, &h.unit_counit(), &[d]);
    Ok(r)
}

/// Scalar helper: the vector of an element given by basis coefficients.
pub fn basis_vector(field: Field, dim: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); dim];
    v[i] = field.one();
    v
}
