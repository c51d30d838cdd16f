use std::collections::BTreeMap;

use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Subspace of `k^n` with a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient_dim: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient_dim: usize) -> Self {
        Subspace { field, ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient_dim: usize) -> Self {
        Self::span(field, ambient_dim, &Matrix::identity(field, ambient_dim).columns())
    }

    /// Span of the given vectors. Rows are reduced one at a time against a
    /// sparse echelon basis, then back-substituted into RREF.
    pub fn span(field: Field, ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut rows: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length does not match ambient dimension");
            let mut cur: BTreeMap<usize, Scalar> =
                v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect();
            let mut from = 0;
            let lead = loop {
                let Some((&c, x)) = cur.range(from..).next() else { break None };
                let Some(row) = rows.get(&c) else { break Some(c) };
                let f = -x;
                for (j, y) in row {
                    let e = cur.entry(*j).or_insert_with(|| field.zero());
                    e.add_mul(&f, y);
                    if e.is_zero() {
                        cur.remove(j);
                    }
                }
                from = c + 1;
            };
            if let Some(c) = lead {
                let inv = cur[&c].inv().expect("nonzero lead");
                let row = cur.range(c..).map(|(j, y)| (*j, y * &inv)).collect();
                rows.insert(c, row);
            }
        }
        let pivots: Vec<usize> = rows.keys().copied().collect();
        for &p in pivots.iter().rev() {
            let row = rows[&p].clone();
            for &q in pivots.iter().filter(|&&q| q < p) {
                let target = rows.get_mut(&q).expect("pivot row");
                let Some(pos) = target.iter().position(|e| e.0 == p) else { continue };
                let f = -&target[pos].1;
                let mut merged: BTreeMap<usize, Scalar> = target.drain(..).collect();
                for (j, y) in &row {
                    let e = merged.entry(*j).or_insert_with(|| field.zero());
                    e.add_mul(&f, y);
                }
                *target = merged.into_iter().filter(|e| !e.1.is_zero()).collect();
            }
        }
        let basis = pivots
            .iter()
            .map(|p| {
                let mut v = vec![field.zero(); ambient_dim];
                for (j, y) in &rows[p] {
                    v[*j] = y.clone();
                }
                v
            })
            .collect();
        Subspace { field, ambient_dim, basis, pivots }
    }

    /// Column space of a matrix.
    pub fn column_space(m: &Matrix) -> Self {
        Self::span(m.field(), m.rows(), &m.columns())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `ambient_dim x dim` matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.field, self.ambient_dim, &self.basis)
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![self.field.zero(); self.ambient_dim];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in rebuilt.iter_mut().zip(b) {
                r.add_mul(c, x);
            }
        }
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `dim x ambient_dim` matrix reading off RREF coordinates; only
    /// meaningful on vectors of the subspace.
    pub fn coordinate_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.dim(), self.ambient_dim);
        for (i, &p) in self.pivots.iter().enumerate() {
            m.set(i, p, self.field.one());
        }
        m
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Whether `m` maps this subspace into itself.
    pub fn is_stable_under(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|v| self.contains(&m.apply(v)))
    }
}

/// Null space `{v : m v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = m.rref_with_pivots();
    let field = m.field();
    let n = m.cols();
    let mut vectors = Vec::new();
    for f in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![field.zero(); n];
        v[f] = field.one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, f);
        }
        vectors.push(v);
    }
    Subspace::span(field, n, &vectors)
}

/// Ambient space modulo a relation subspace. Quotient coordinates are the
/// non-pivot ambient coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientSpace {
    pub ambient_dim: usize,
    pub relations: Subspace,
    pub dim: usize,
    /// `dim x ambient_dim`
    pub project: Matrix,
    /// `ambient_dim x dim`
    pub section: Matrix,
}

pub fn quotient_by(field: Field, ambient_dim: usize, relation_vectors: &[Vec<Scalar>]) -> QuotientSpace {
    QuotientSpace::new(Subspace::span(field, ambient_dim, relation_vectors))
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let field = relations.field();
        let n = relations.ambient_dim();
        let free: Vec<usize> = (0..n).filter(|c| !relations.pivots().contains(c)).collect();
        let q = free.len();
        let mut project = Matrix::zeros(field, q, n);
        let mut section = Matrix::zeros(field, n, q);
        for (j, &c) in free.iter().enumerate() {
            project.set(j, c, field.one());
            section.set(c, j, field.one());
        }
        for (i, &p) in relations.pivots().iter().enumerate() {
            for (j, &c) in free.iter().enumerate() {
                let v = &relations.basis()[i][c];
                if !v.is_zero() {
                    project.set(j, p, -v);
                }
            }
        }
        QuotientSpace { ambient_dim: n, relations, dim: q, project, section }
    }

    pub fn field(&self) -> Field {
        self.relations.field()
    }
}
