use crate::error::{Error, Result};
use crate::exactlin::{decode_index, Diagram, Field, Matrix, QuotientSpace, Subspace};
use crate::homrep::{same_algebra, unit_object, HomRepresentation};

/// `M ⊗_H N` as an explicit quotient of `M ⊗ N` by the span of
/// `(mh)⊗n − μ(m)⊗(hν^{-1}(n))`, with the induced Hom-bimodule structure.
#[derive(Clone, Debug)]
pub struct TensorOverH {
    pub left: HomRepresentation,
    pub right: HomRepresentation,
    pub quotient: QuotientSpace,
    pub structure: HomRepresentation,
    relation_basis: Matrix,
}

impl TensorOverH {
    pub fn dim(&self) -> usize {
        self.quotient.dim
    }

    pub fn field(&self) -> Field {
        self.structure.field()
    }

    /// `dim x (dM*dN)`
    pub fn project(&self) -> &Matrix {
        &self.quotient.project
    }

    /// `(dM*dN) x dim`
    pub fn section(&self) -> &Matrix {
        &self.quotient.section
    }

    /// `(dM*dN) x r`, a basis of the relation subspace.
    pub fn relation_basis(&self) -> &Matrix {
        &self.relation_basis
    }

    fn factor_dims(&self) -> [usize; 2] {
        [self.left.dim, self.right.dim]
    }

    /// Projects factors `at, at+1` (an `M⊗N` pair) onto the quotient.
    pub(crate) fn lower(&self, d: Diagram, at: usize) -> Diagram {
        d.apply(at, 2, self.project(), &[self.dim()])
    }
}

/// Descends an ambient map. `f` has source `k^before ⊗ (M⊗N) ⊗ k^after`;
/// the result is `f ∘ (id ⊗ section ⊗ id)`, after checking that `f` kills
/// `id ⊗ relations ⊗ id`.
pub fn descend(f: &Matrix, before: usize, t: &TensorOverH, after: usize, what: &str) -> Result<Matrix> {
    let field = t.field();
    let amb = t.left.dim * t.right.dim;
    assert_eq!(f.cols(), before * amb * after, "ambient map source for {what}");
    let rel = &t.relation_basis;
    let r = rel.cols();
    if r > 0 {
        let killed = Diagram::new(field, &[before, r, after]).map(1, rel).then(f, &[f.rows()]).matrix();
        if let Some((col, _)) = killed.first_difference(&Matrix::zeros(field, f.rows(), killed.cols())) {
            let j = decode_index(col, &[before, r, after])[1];
            return Err(Error::Descent { map: what.to_string(), relation: rel.column(j) });
        }
    }
    Ok(Diagram::new(field, &[before, t.dim(), after]).map(1, t.section()).then(f, &[f.rows()]).matrix())
}

fn relation_space(m: &HomRepresentation, n: &HomRepresentation) -> Result<Subspace> {
    let h = &m.over;
    let (dm, dn, dh) = (m.dim, n.dim, h.dim());
    let field = m.field();
    let lhs = Diagram::new(field, &[dm, dh, dn]).merge(0, m.phi()?).matrix();
    let rhs = Diagram::new(field, &[dm, dh, dn]).map(0, &m.mu).map(2, n.mu_inv()?).merge(1, n.psi()?).matrix();
    Ok(Subspace::column_space(&lhs.sub(&rhs)))
}

fn require_bimodule(m: &HomRepresentation) -> Result<()> {
    if !m.flags().is_bimodule {
        return Err(Error::Unverified("Hom-bimodule".into()));
    }
    Ok(())
}

/// `M ⊗_H N` for verified Hom-bimodules. The left coaction is included when
/// both inputs are left-covariant, the right coaction when both are
/// right-covariant.
pub fn tensor_over_h(m: &HomRepresentation, n: &HomRepresentation) -> Result<TensorOverH> {
    require_bimodule(m)?;
    require_bimodule(n)?;
    let (fm, fn_) = (m.flags(), n.flags());
    build(m, n, fm.is_left_covariant && fn_.is_left_covariant, fm.is_right_covariant && fn_.is_right_covariant)
}

/// Same construction without requiring verified inputs: every structure map
/// present on both sides is descended, and a relation that does not map into
/// the relations is reported as [`Error::Descent`].
pub fn tensor_over_h_unchecked(m: &HomRepresentation, n: &HomRepresentation) -> Result<TensorOverH> {
    let both = |a: &Option<Matrix>, b: &Option<Matrix>| a.is_some() && b.is_some();
    build(m, n, both(&m.left_coaction, &n.left_coaction), both(&m.right_coaction, &n.right_coaction))
}

fn build(m: &HomRepresentation, n: &HomRepresentation, with_rho: bool, with_sigma: bool) -> Result<TensorOverH> {
    if !same_algebra(&m.over, &n.over) {
        return Err(Error::Shape("factors over different Hom-Hopf algebras".into()));
    }
    let h = m.over.clone();
    let field = m.field();
    let (dm, dn, dh) = (m.dim, n.dim, h.dim());
    let relations = relation_space(m, n)?;
    let relation_basis = relations.basis_matrix();
    let quotient = QuotientSpace::new(relations);
    let q = quotient.dim;
    let placeholder = HomRepresentation::new(h.clone(), Matrix::identity(field, q))?;
    let mut t = TensorOverH { left: m.clone(), right: n.clone(), quotient, structure: placeholder, relation_basis };
    let d = |dims: &[usize]| Diagram::new(field, dims);
    let ai = h.alpha_inv()?;

    let mu_amb = t.lower(d(&[dm, dn]).map(0, &m.mu).map(1, &n.mu), 0).matrix();
    let mu = descend(&mu_amb, 1, &t, 1, "mu")?;
    let left_amb = t.lower(d(&[dh, dm, dn]).map(0, ai).merge(0, m.psi()?).map(1, &n.mu), 0).matrix();
    let right_amb = t.lower(d(&[dm, dn, dh]).map(2, ai).merge(1, n.phi()?).map(0, &m.mu), 0).matrix();
    let mut s = HomRepresentation::new(h.clone(), mu)?
        .with_left_action(descend(&left_amb, dh, &t, 1, "left action")?)?
        .with_right_action(descend(&right_amb, 1, &t, dh, "right action")?)?;
    if with_rho {
        let amb = d(&[dm, dn])
            .split(1, n.rho()?, dh, dn)
            .split(0, m.rho()?, dh, dm)
            .permute(&[0, 2, 1, 3])
            .merge(0, h.mul());
        let amb = t.lower(amb, 1).matrix();
        s = s.with_left_coaction(descend(&amb, 1, &t, 1, "left coaction")?)?;
    }
    if with_sigma {
        let amb = d(&[dm, dn])
            .split(1, n.sigma()?, dn, dh)
            .split(0, m.sigma()?, dm, dh)
            .permute(&[0, 2, 1, 3])
            .merge(2, h.mul());
        let amb = t.lower(amb, 0).matrix();
        s = s.with_right_coaction(descend(&amb, 1, &t, 1, "right coaction")?)?;
    }
    t.structure = s.certify();
    Ok(t)
}

/// `f ⊗_H g: M⊗_H N → M'⊗_H N'` for morphisms `f: M → M'`, `g: N → N'`.
pub fn tensor_morphisms(f: &Matrix, g: &Matrix, src: &TensorOverH, dst: &TensorOverH) -> Result<Matrix> {
    let [dm, dn] = src.factor_dims();
    let [em, en] = dst.factor_dims();
    if f.shape() != (em, dm) || g.shape() != (en, dn) {
        return Err(Error::Shape("morphism shapes do not match the tensor factors".into()));
    }
    let amb = dst.lower(Diagram::new(src.field(), &[dm, dn]).map(0, f).map(1, g), 0).matrix();
    descend(&amb, 1, src, 1, "tensor of morphisms")
}

/// The pieces of one associator: source `(M⊗N)⊗P`, target `M⊗(N⊗P)` and
/// the inner products they are built from.
#[derive(Clone, Debug)]
pub struct AssociatorData {
    pub mn: TensorOverH,
    pub np: TensorOverH,
    pub source: TensorOverH,
    pub target: TensorOverH,
    pub matrix: Matrix,
}

/// Maps an ambient element of `(M⊗N)⊗P`, given on the fully expanded
/// factors `[dM, dN, dP]`, through `inner` and then the outer descents.
fn descend_twice(
    outer: &TensorOverH,
    inner: &TensorOverH,
    inner_left: bool,
    expanded: &Matrix,
    what: &str,
) -> Result<Matrix> {
    // first level: (M⊗N)⊗P with M⊗N lifted, or M⊗(N⊗P) with N⊗P lifted
    let (before, after) = if inner_left { (1, outer.right.dim) } else { (outer.left.dim, 1) };
    let first = descend(expanded, before, inner, after, what)?;
    descend(&first, 1, outer, 1, what)
}

pub fn associator_data(m: &HomRepresentation, n: &HomRepresentation, p: &HomRepresentation) -> Result<AssociatorData> {
    let mn = tensor_over_h(m, n)?;
    let np = tensor_over_h(n, p)?;
    let source = tensor_over_h(&mn.structure, p)?;
    let target = tensor_over_h(m, &np.structure)?;
    let field = m.field();
    let (dm, dn, dp) = (m.dim, n.dim, p.dim);
    let amb = Diagram::new(field, &[dm, dn, dp]).map(0, &m.mu).map(2, p.mu_inv()?);
    let amb = target.lower(np.lower(amb, 1), 0).matrix();
    let matrix = descend_twice(&source, &mn, true, &amb, "associator")?;
    Ok(AssociatorData { mn, np, source, target, matrix })
}

/// `ã((m⊗n)⊗p) = μ(m)⊗(n⊗π^{-1}(p))` on the iterated quotients.
pub fn associator(m: &HomRepresentation, n: &HomRepresentation, p: &HomRepresentation) -> Result<Matrix> {
    Ok(associator_data(m, n, p)?.matrix)
}

/// `ã^{-1}(m⊗(n⊗p)) = (μ^{-1}(m)⊗n)⊗π(p)`.
pub fn associator_inverse(m: &HomRepresentation, n: &HomRepresentation, p: &HomRepresentation) -> Result<Matrix> {
    let mn = tensor_over_h(m, n)?;
    let np = tensor_over_h(n, p)?;
    let source = tensor_over_h(m, &np.structure)?;
    let target = tensor_over_h(&mn.structure, p)?;
    let field = m.field();
    let (dm, dn, dp) = (m.dim, n.dim, p.dim);
    let amb = Diagram::new(field, &[dm, dn, dp]).map(0, m.mu_inv()?).map(2, &p.mu);
    let amb = target.lower(mn.lower(amb, 0), 0).matrix();
    descend_twice(&source, &np, false, &amb, "associator inverse")
}

/// `ℓ̃: k⊗_H M → M, x⊗m ↦ xμ(m)`.
pub fn unit_left(m: &HomRepresentation) -> Result<Matrix> {
    let t = tensor_over_h(&unit_object(&m.over), m)?;
    descend(&m.mu, 1, &t, 1, "left unit")
}

/// `r̃: M⊗_H k → M, m⊗x ↦ xμ(m)`.
pub fn unit_right(m: &HomRepresentation) -> Result<Matrix> {
    let t = tensor_over_h(m, &unit_object(&m.over))?;
    descend(&m.mu, 1, &t, 1, "right unit")
}
