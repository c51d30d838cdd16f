use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Rank-3 array of scalars in lexicographic index order.
///
/// Structure constants use the "inputs first" convention: for a bilinear
/// map `A ⊗ B -> C` the entry `[a][b][c]` is the coefficient of `e_c` in the
/// image of `e_a ⊗ e_b`; for a map `A -> B ⊗ C` the entry `[a][b][c]` is the
/// coefficient of `e_b ⊗ e_c` in the image of `e_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    field: Field,
    shape: (usize, usize, usize),
    entries: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(field: Field, shape: (usize, usize, usize)) -> Self {
        Tensor3 { field, shape, entries: vec![field.zero(); shape.0 * shape.1 * shape.2] }
    }

    pub fn from_entries(field: Field, shape: (usize, usize, usize), entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), shape.0 * shape.1 * shape.2, "entry count does not match shape");
        Tensor3 { field, shape, entries }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        self.shape
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.shape.1 + j) * self.shape.2 + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[self.idx(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let x = self.idx(i, j, k);
        self.entries[x] = v;
    }

    /// Tensor of a map `A ⊗ B -> C` given as a `c x (a*b)` matrix.
    pub fn from_binary_map(m: &Matrix, a: usize, b: usize) -> Self {
        assert_eq!(m.cols(), a * b, "binary map has wrong source dimension");
        let c = m.rows();
        let mut t = Self::zeros(m.field(), (a, b, c));
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    t.set(i, j, k, m.get(k, i * b + j).clone());
                }
            }
        }
        t
    }

    pub fn to_binary_map(&self) -> Matrix {
        let (a, b, c) = self.shape;
        let mut m = Matrix::zeros(self.field, c, a * b);
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    m.set(k, i * b + j, self.get(i, j, k).clone());
                }
            }
        }
        m
    }

    /// Tensor of a map `A -> B ⊗ C` given as a `(b*c) x a` matrix.
    pub fn from_split_map(m: &Matrix, b: usize, c: usize) -> Self {
        assert_eq!(m.rows(), b * c, "split map has wrong target dimension");
        let a = m.cols();
        let mut t = Self::zeros(m.field(), (a, b, c));
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    t.set(i, j, k, m.get(j * c + k, i).clone());
                }
            }
        }
        t
    }

    pub fn to_split_map(&self) -> Matrix {
        let (a, b, c) = self.shape;
        let mut m = Matrix::zeros(self.field, b * c, a);
        for i in 0..a {
            for j in 0..b {
                for k in 0..c {
                    m.set(j * c + k, i, self.get(i, j, k).clone());
                }
            }
        }
        m
    }
}
